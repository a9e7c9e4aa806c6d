//! Arithmetic in finitely presented graded algebras.
//!
//! An [`Algebra`] wraps a [`Presentation`] together with a degree truncation and
//! memo tables for normal forms, the t-action and the coproduct.

mod expr;
mod presentation;
mod word;

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

pub use expr::parse_expression;
pub use presentation::{
    format_terms, Generator, GeneratorFile, Presentation, PresentationFile, Rule, RuleFile,
    TermFile,
};
pub use word::Word;

use crate::error::{Error, Result};
use crate::linear::LinComb;
use crate::scalar::{one, Scalar};

pub type AlgebraElement = LinComb<Word>;

/// Which redex is contracted first when rewriting.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

#[derive(Clone, Debug)]
pub struct Ambiguity {
    pub word: Word,
    pub rules: (usize, usize),
    pub difference: AlgebraElement,
}

impl Ambiguity {
    pub fn resolves(&self) -> bool {
        self.difference.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct CompletionReport {
    pub max_degree: u32,
    pub ambiguities: Vec<Ambiguity>,
    /// Ambiguity words above `max_degree` that were not examined.
    pub skipped: Vec<Word>,
    pub confluent: bool,
}

pub struct Algebra {
    pres: Presentation,
    truncation: u32,
    nf_cache: RwLock<HashMap<Word, AlgebraElement>>,
    act_cache: RwLock<HashMap<(i64, Word), AlgebraElement>>,
    basis_cache: RwLock<BTreeMap<u32, Vec<Word>>>,
    pub(crate) coproduct_cache: RwLock<HashMap<Word, crate::braided::TensorElement>>,
}

impl std::fmt::Debug for Algebra {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Algebra")
            .field("presentation", &self.pres)
            .field("truncation", &self.truncation)
            .finish()
    }
}

impl Algebra {
    /// Wraps a presentation after checking that the t-images are mutually inverse and
    /// that the rules span a t-stable ideal. Confluence is not checked here.
    pub fn new(pres: Presentation, truncation: u32) -> Result<Algebra> {
        let alg = Algebra {
            pres,
            truncation,
            nf_cache: RwLock::new(HashMap::new()),
            act_cache: RwLock::new(HashMap::new()),
            basis_cache: RwLock::new(BTreeMap::new()),
            coproduct_cache: RwLock::new(HashMap::new()),
        };
        alg.check_t_action()?;
        Ok(alg)
    }

    /// [`Algebra::new`] plus the diamond-lemma check and the coproduct well-definedness check.
    pub fn validated(pres: Presentation, truncation: u32) -> Result<Algebra> {
        let alg = Algebra::new(pres, truncation)?;
        let report = alg.complete_overlaps(2 * alg.pres.max_rule_degree());
        if !report.confluent {
            let bad: Vec<String> = report
                .ambiguities
                .iter()
                .filter(|a| !a.resolves())
                .map(|a| alg.pres.format_word(&a.word))
                .collect();
            return Err(Error::NotConfluent(format!(
                "unresolved overlaps: {}",
                bad.join(", ")
            )));
        }
        alg.check_coproduct_well_defined()?;
        Ok(alg)
    }

    pub fn jordan(truncation: u32) -> Algebra {
        Algebra::validated(Presentation::jordan(), truncation).expect("Jordan plane is valid")
    }

    pub fn super_jordan(truncation: u32) -> Algebra {
        Algebra::validated(Presentation::super_jordan(), truncation)
            .expect("super Jordan plane is valid")
    }

    /// Same presentation with another truncation and fresh memo tables.
    pub fn with_truncation(&self, truncation: u32) -> Result<Algebra> {
        Algebra::new(self.pres.clone(), truncation)
    }

    pub fn presentation(&self) -> &Presentation {
        &self.pres
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn num_generators(&self) -> usize {
        self.pres.generators().len()
    }

    pub fn word_degree(&self, w: &Word) -> u32 {
        self.pres.word_degree(w)
    }

    pub fn check_degree(&self, degree: u32) -> Result<()> {
        if degree > self.truncation {
            Err(Error::Truncation {
                degree,
                limit: self.truncation,
            })
        } else {
            Ok(())
        }
    }

    pub fn unit(&self) -> AlgebraElement {
        LinComb::basis(Word::unit())
    }

    pub fn generator(&self, g: u8) -> AlgebraElement {
        LinComb::basis(Word::letter(g))
    }

    pub fn parse_word(&self, s: &str) -> Result<Word> {
        self.pres.parse_word(s)
    }

    pub fn format(&self, e: &AlgebraElement) -> String {
        self.pres.format_element(e)
    }

    fn is_reducible(&self, w: &Word) -> bool {
        self.pres.rules().iter().any(|r| w.contains(&r.lhs))
    }

    fn find_redex(&self, w: &Word, strategy: Strategy) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for (ri, r) in self.pres.rules().iter().enumerate() {
            for pos in w.occurrences(&r.lhs) {
                let better = match (best, strategy) {
                    (None, _) => true,
                    (Some((p, _)), Strategy::Leftmost) => pos < p,
                    (Some((p, _)), Strategy::Rightmost) => pos > p,
                };
                if better {
                    best = Some((pos, ri));
                }
            }
        }
        best.map(|(pos, ri)| (ri, pos))
    }

    fn rewrite_at(&self, w: &Word, rule: usize, pos: usize) -> AlgebraElement {
        let r = &self.pres.rules()[rule];
        let mut out = LinComb::zero();
        for (m, c) in r.rhs.iter() {
            out.add_term(w.splice(pos, pos + r.lhs.len(), m), c.clone());
        }
        out
    }

    /// Normal form of a word, memoised. No truncation check.
    fn nf_word_raw(&self, w: &Word) -> AlgebraElement {
        if let Some(v) = self.nf_cache.read().unwrap().get(w) {
            return v.clone();
        }
        let result = match self.find_redex(w, Strategy::Leftmost) {
            None => LinComb::basis(w.clone()),
            Some((rule, pos)) => {
                let step = self.rewrite_at(w, rule, pos);
                let mut acc = LinComb::zero();
                for (m, c) in step.iter() {
                    acc.add_scaled(&self.nf_word_raw(m), c);
                }
                acc
            }
        };
        self.nf_cache
            .write()
            .unwrap()
            .insert(w.clone(), result.clone());
        result
    }

    fn nf_raw(&self, e: &AlgebraElement) -> AlgebraElement {
        let mut out = LinComb::zero();
        for (w, c) in e.iter() {
            out.add_scaled(&self.nf_word_raw(w), c);
        }
        out
    }

    fn check_words(&self, e: &AlgebraElement) -> Result<()> {
        let n = self.num_generators();
        for w in e.keys() {
            if w.letters().iter().any(|&g| g as usize >= n) {
                return Err(Error::PresentationMismatch(format!(
                    "word {w:?} uses an unknown generator id"
                )));
            }
            self.check_degree(self.word_degree(w))?;
        }
        Ok(())
    }

    pub fn normal_form_word(&self, w: &Word) -> Result<AlgebraElement> {
        self.normal_form(&LinComb::basis(w.clone()))
    }

    /// Rewrites an arbitrary combination of words to normal form.
    pub fn normal_form(&self, e: &AlgebraElement) -> Result<AlgebraElement> {
        self.check_words(e)?;
        Ok(self.nf_raw(e))
    }

    /// Unmemoised rewriting with an explicit redex choice; agrees with
    /// [`Algebra::normal_form`] whenever the presentation is confluent.
    pub fn normal_form_with(&self, e: &AlgebraElement, strategy: Strategy) -> Result<AlgebraElement> {
        self.check_words(e)?;
        let mut pending: Vec<(Word, Scalar)> = e.iter().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = LinComb::zero();
        while let Some((w, c)) = pending.pop() {
            match self.find_redex(&w, strategy) {
                None => out.add_term(w, c),
                Some((rule, pos)) => {
                    for (m, d) in self.rewrite_at(&w, rule, pos).iter() {
                        pending.push((m.clone(), d * &c));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn multiply_words(&self, a: &Word, b: &Word) -> Result<AlgebraElement> {
        self.check_degree(self.word_degree(a) + self.word_degree(b))?;
        Ok(self.nf_word_raw(&a.concat(b)))
    }

    pub fn multiply(&self, a: &AlgebraElement, b: &AlgebraElement) -> Result<AlgebraElement> {
        let mut out = LinComb::zero();
        for (u, c) in a.iter() {
            for (v, d) in b.iter() {
                out.add_scaled(&self.multiply_words(u, v)?, &(c * d));
            }
        }
        Ok(out)
    }

    /// `w · e` for a word `w` on the left.
    pub fn left_mul_word(&self, w: &Word, e: &AlgebraElement) -> Result<AlgebraElement> {
        e.flat_map(|v| self.multiply_words(w, v))
    }

    pub fn right_mul_word(&self, e: &AlgebraElement, w: &Word) -> Result<AlgebraElement> {
        e.flat_map(|v| self.multiply_words(v, w))
    }

    /// Product of generator images under t (`forward`) or t^-1, in normal form.
    fn apply_images(&self, w: &Word, forward: bool) -> Result<AlgebraElement> {
        let mut acc = self.unit();
        for &g in w.letters() {
            let img = if forward {
                self.pres.t_image(g)
            } else {
                self.pres.t_inverse_image(g)
            };
            acc = self.multiply(&acc, img)?;
        }
        Ok(acc)
    }

    /// `t^k · w` for a normal word `w`.
    pub fn act_word(&self, k: i64, w: &Word) -> Result<AlgebraElement> {
        if k == 0 || w.is_unit() {
            return Ok(LinComb::basis(w.clone()));
        }
        if let Some(v) = self.act_cache.read().unwrap().get(&(k, w.clone())) {
            return Ok(v.clone());
        }
        let step = if k > 0 { 1 } else { -1 };
        let prev = self.act_word(k - step, w)?;
        let result = prev.flat_map(|u| {
            if let Some(v) = self.act_cache.read().unwrap().get(&(step, u.clone())) {
                return Ok(v.clone());
            }
            let v = self.apply_images(u, step > 0)?;
            self.act_cache
                .write()
                .unwrap()
                .insert((step, u.clone()), v.clone());
            Ok(v)
        })?;
        self.act_cache
            .write()
            .unwrap()
            .insert((k, w.clone()), result.clone());
        Ok(result)
    }

    /// The algebra automorphism `t^k`.
    pub fn act(&self, k: i64, e: &AlgebraElement) -> Result<AlgebraElement> {
        e.flat_map(|w| self.act_word(k, w))
    }

    /// The augmentation: the coefficient of the unit word.
    pub fn augment(&self, e: &AlgebraElement) -> Scalar {
        e.coeff(&Word::unit())
    }

    pub fn augment_word(&self, w: &Word) -> Scalar {
        if w.is_unit() {
            one()
        } else {
            crate::scalar::zero()
        }
    }

    /// Irreducible words of internal degree `n`, in increasing monomial order.
    pub fn graded_basis(&self, n: u32) -> Result<Vec<Word>> {
        self.check_degree(n)?;
        if let Some(b) = self.basis_cache.read().unwrap().get(&n) {
            return Ok(b.clone());
        }
        let mut out = Vec::new();
        let mut stack = vec![(Word::unit(), 0u32)];
        while let Some((w, d)) = stack.pop() {
            if d == n {
                out.push(w);
                continue;
            }
            for g in self.pres.generators() {
                if d + g.degree > n {
                    continue;
                }
                let next = w.concat(&Word::letter(g.id));
                let suffix_hit = self.pres.rules().iter().any(|r| {
                    next.len() >= r.lhs.len()
                        && next.letters()[next.len() - r.lhs.len()..] == r.lhs.letters()[..]
                });
                if !suffix_hit {
                    stack.push((next, d + g.degree));
                }
            }
        }
        out.sort_by(|a, b| self.pres.compare(a, b));
        self.basis_cache.write().unwrap().insert(n, out.clone());
        Ok(out)
    }

    pub fn dimension(&self, n: u32) -> Result<usize> {
        Ok(self.graded_basis(n)?.len())
    }

    /// Basis words of all degrees `0..=max`, grouped by degree.
    pub fn basis_up_to(&self, max: u32) -> Result<Vec<Vec<Word>>> {
        (0..=max).map(|n| self.graded_basis(n)).collect()
    }

    fn check_t_action(&self) -> Result<()> {
        let max = self.pres.max_rule_degree().max(1);
        let probe = self.with_unchecked_truncation(max)?;
        for g in self.pres.generators() {
            let x = probe.generator(g.id);
            for forward_first in [true, false] {
                let (a, b) = if forward_first { (1, -1) } else { (-1, 1) };
                let back = probe.act(b, &probe.act(a, &x)?)?;
                if back != x {
                    return Err(Error::InvalidPresentation(format!(
                        "t and t^-1 images are not inverse on `{}`",
                        g.name
                    )));
                }
            }
        }
        for rule in self.pres.rules() {
            for k in [1i64, -1] {
                let lhs_image = probe.apply_images(&rule.lhs, k > 0)?;
                let mut rhs_image = LinComb::zero();
                for (w, c) in rule.rhs.iter() {
                    rhs_image.add_scaled(&probe.apply_images(w, k > 0)?, c);
                }
                if !lhs_image.minus(&rhs_image).is_zero() {
                    return Err(Error::InvalidPresentation(format!(
                        "relation with leading word {} is not preserved by t^{k}",
                        self.pres.format_word(&rule.lhs)
                    )));
                }
            }
        }
        Ok(())
    }

    fn with_unchecked_truncation(&self, at_least: u32) -> Result<Algebra> {
        Ok(Algebra {
            pres: self.pres.clone(),
            truncation: self.truncation.max(at_least),
            nf_cache: RwLock::new(HashMap::new()),
            act_cache: RwLock::new(HashMap::new()),
            basis_cache: RwLock::new(BTreeMap::new()),
            coproduct_cache: RwLock::new(HashMap::new()),
        })
    }

    /// Enumerates overlap and inclusion ambiguities between rule leading words and
    /// reduces each both ways.
    pub fn complete_overlaps(&self, max_degree: u32) -> CompletionReport {
        let rules = self.pres.rules();
        let mut ambiguities = Vec::new();
        let mut skipped = Vec::new();
        let mut consider = |word: Word, i: usize, pos_i: usize, j: usize, pos_j: usize| {
            if self.word_degree(&word) > max_degree {
                skipped.push(word);
                return;
            }
            let a = self.nf_raw(&self.rewrite_at(&word, i, pos_i));
            let b = self.nf_raw(&self.rewrite_at(&word, j, pos_j));
            ambiguities.push(Ambiguity {
                word,
                rules: (i, j),
                difference: a.minus(&b),
            });
        };
        for (i, ri) in rules.iter().enumerate() {
            for (j, rj) in rules.iter().enumerate() {
                let (l1, l2) = (ri.lhs.letters(), rj.lhs.letters());
                // Proper overlaps: a suffix of l1 equals a prefix of l2.
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] == l2[..k] {
                        let word = Word(l1.iter().chain(&l2[k..]).copied().collect());
                        consider(word, i, 0, j, l1.len() - k);
                    }
                }
                // Inclusions: l2 occurs inside l1.
                if i != j {
                    for pos in ri.lhs.occurrences(&rj.lhs) {
                        consider(ri.lhs.clone(), i, 0, j, pos);
                    }
                }
            }
        }
        let confluent = ambiguities.iter().all(|a| a.resolves()) && skipped.is_empty();
        CompletionReport {
            max_degree,
            ambiguities,
            skipped,
            confluent,
        }
    }

    /// Adds rules for unresolved ambiguities until every ambiguity up to `max_degree`
    /// resolves. Returns the completed presentation; the original is untouched.
    pub fn completed_presentation(&self, max_degree: u32) -> Result<Presentation> {
        let mut pres = self.pres.clone();
        for _ in 0..64 {
            let alg = Algebra::new(pres.clone(), max_degree.max(self.truncation))?;
            let report = alg.complete_overlaps(max_degree);
            let bad: Vec<&Ambiguity> = report
                .ambiguities
                .iter()
                .filter(|a| !a.resolves())
                .collect();
            if bad.is_empty() {
                return Ok(pres);
            }
            let mut rules = pres.rules().to_vec();
            let diff = alg.nf_raw(&bad[0].difference);
            if diff.is_zero() {
                continue;
            }
            let lead = diff
                .keys()
                .max_by(|a, b| pres.compare(a, b))
                .cloned()
                .expect("nonzero");
            let c = diff.coeff(&lead);
            let mut rhs = diff.clone();
            rhs.add_term(lead.clone(), -c.clone());
            let rhs = rhs.scaled(&(-one() / c));
            rules.push(Rule { lhs: lead, rhs });
            pres = pres.with_rules(rules)?;
        }
        Err(Error::NotConfluent(
            "completion did not stabilise within the iteration budget".into(),
        ))
    }

    /// Whether every word of `e` is irreducible.
    pub fn is_normal(&self, e: &AlgebraElement) -> bool {
        e.keys().all(|w| !self.is_reducible(w))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, ratio};

    fn el(alg: &Algebra, terms: &[(&str, Scalar)]) -> AlgebraElement {
        terms
            .iter()
            .map(|(w, c)| (alg.parse_word(w).unwrap(), c.clone()))
            .collect()
    }

    #[test]
    fn jordan_relation_rewrites() {
        let a = Algebra::jordan(8);
        let yx = a.normal_form_word(&a.parse_word("yx").unwrap()).unwrap();
        assert_eq!(yx, el(&a, &[("xy", int(1)), ("xx", ratio(-1, 2))]));
        assert_eq!(a.format(&yx), "x*y - 1/2*x^2");
    }

    #[test]
    fn unit_is_irreducible() {
        let a = Algebra::super_jordan(8);
        assert_eq!(a.normal_form_word(&Word::unit()).unwrap(), a.unit());
    }

    #[test]
    fn super_jordan_rewrites() {
        let a = Algebra::super_jordan(8);
        let w = |s| a.parse_word(s).unwrap();
        assert_eq!(
            a.normal_form_word(&w("yyx")).unwrap(),
            el(&a, &[("xyy", int(1)), ("xyx", int(1))])
        );
        assert!(a.normal_form_word(&w("yyxx")).unwrap().is_zero());
        assert!(a.multiply_words(&w("x"), &w("x")).unwrap().is_zero());
    }

    #[test]
    fn multiplication_by_unit() {
        let a = Algebra::jordan(8);
        let e = el(&a, &[("xy", int(3)), ("y", int(-1))]);
        assert_eq!(a.multiply(&a.unit(), &e).unwrap(), e);
        assert_eq!(a.multiply(&e, &a.unit()).unwrap(), e);
    }

    #[test]
    fn truncation_is_enforced() {
        let a = Algebra::jordan(3);
        let w = a.parse_word("yy").unwrap();
        assert!(matches!(
            a.multiply_words(&w, &w),
            Err(Error::Truncation { degree: 4, limit: 3 })
        ));
    }

    #[test]
    fn unknown_generator_id_is_a_mismatch() {
        let a = Algebra::jordan(4);
        let bad = LinComb::basis(Word(vec![7]));
        assert!(matches!(a.normal_form(&bad), Err(Error::PresentationMismatch(_))));
    }

    #[test]
    fn jordan_t_action() {
        let a = Algebra::jordan(8);
        let y = el(&a, &[("y", int(1))]);
        assert_eq!(a.act(1, &y).unwrap(), el(&a, &[("x", int(1)), ("y", int(1))]));
        assert_eq!(a.act(0, &y).unwrap(), y);
        let yy = el(&a, &[("yy", int(1))]);
        assert_eq!(
            a.act(1, &yy).unwrap(),
            el(&a, &[("xx", ratio(1, 2)), ("xy", int(2)), ("yy", int(1))])
        );
    }

    #[test]
    fn super_jordan_t_inverse() {
        let a = Algebra::super_jordan(8);
        let y = el(&a, &[("y", int(1))]);
        let back = a.act(-1, &a.act(1, &y).unwrap()).unwrap();
        assert_eq!(back, y);
        assert_eq!(a.act(-1, &y).unwrap(), el(&a, &[("x", int(-1)), ("y", int(-1))]));
    }

    #[test]
    fn augmentation() {
        let a = Algebra::jordan(4);
        assert_eq!(a.augment(&el(&a, &[("", int(1)), ("x", int(3))])), int(1));
        assert_eq!(a.augment(&el(&a, &[("xy", int(1))])), int(0));
        assert_eq!(a.augment(&el(&a, &[("", int(5))])), int(5));
    }

    #[test]
    fn jordan_dimensions() {
        let a = Algebra::jordan(10);
        for n in 0..=10 {
            assert_eq!(a.dimension(n).unwrap(), n as usize + 1);
        }
        let b: Vec<String> = a
            .graded_basis(2)
            .unwrap()
            .iter()
            .map(|w| a.presentation().format_word_compact(w))
            .collect();
        assert_eq!(b, vec!["xx", "xy", "yy"]);
    }

    #[test]
    fn super_jordan_degree_three_basis() {
        let a = Algebra::super_jordan(6);
        let mut b: Vec<String> = a
            .graded_basis(3)
            .unwrap()
            .iter()
            .map(|w| a.presentation().format_word_compact(w))
            .collect();
        b.sort();
        // Length-3 words avoiding xx and yyx.
        assert_eq!(b, vec!["xyx", "xyy", "yxy", "yyy"]);
    }

    #[test]
    fn overlaps_of_builtins_resolve() {
        let j = Algebra::jordan(8);
        let r = j.complete_overlaps(6);
        assert!(r.confluent);
        assert!(r.ambiguities.is_empty());
        let s = Algebra::super_jordan(8);
        let r = s.complete_overlaps(6);
        assert!(r.confluent);
        let words: Vec<String> = r
            .ambiguities
            .iter()
            .map(|a| s.presentation().format_word_compact(&a.word))
            .collect();
        assert!(words.contains(&"yyxx".to_string()));
        assert!(words.contains(&"xxx".to_string()));
    }

    fn x_squared_to_y() -> Presentation {
        Presentation::from_json(
            r#"{"generators":[{"name":"x","degree":1},{"name":"y","degree":2}],
            "order":["x","y"],
            "rules":[{"lhs":"xx","rhs":[{"word":"y","coeff":"1"}]}],
            "t_action":{"x":[{"word":"x","coeff":"1"}],"y":[{"word":"y","coeff":"1"}]},
            "t_inverse":{"x":[{"word":"x","coeff":"1"}],"y":[{"word":"y","coeff":"1"}]}}"#,
        )
        .unwrap()
    }

    #[test]
    fn x_squared_to_y_has_unresolved_cube() {
        // x(xx) -> xy and (xx)x -> yx are both irreducible and differ.
        let a = Algebra::new(x_squared_to_y(), 8).unwrap();
        let r = a.complete_overlaps(6);
        assert!(!r.confluent);
        assert_eq!(r.ambiguities.len(), 1);
        assert_eq!(a.presentation().format_word_compact(&r.ambiguities[0].word), "xxx");
        assert!(matches!(
            Algebra::validated(x_squared_to_y(), 8),
            Err(Error::NotConfluent(_))
        ));
    }

    #[test]
    fn completion_adds_commutation_rule() {
        let a = Algebra::new(x_squared_to_y(), 8).unwrap();
        let p = a.completed_presentation(8).unwrap();
        assert_eq!(p.rules().len(), 2);
        let c = Algebra::new(p, 8).unwrap();
        assert!(c.complete_overlaps(8).confluent);
        assert_eq!(c.dimension(4).unwrap(), 1);
    }

    #[test]
    fn rejects_non_t_stable_relation() {
        let p = Presentation::from_json(
            r#"{"generators":[{"name":"x","degree":1},{"name":"y","degree":1}],
            "order":["x","y"],
            "rules":[{"lhs":"yy","rhs":[]}],
            "t_action":{"x":[{"word":"x","coeff":"1"}],"y":[{"word":"x","coeff":"1"},{"word":"y","coeff":"1"}]},
            "t_inverse":{"x":[{"word":"x","coeff":"1"}],"y":[{"word":"x","coeff":"-1"},{"word":"y","coeff":"1"}]}}"#,
        )
        .unwrap();
        assert!(matches!(Algebra::new(p, 4), Err(Error::InvalidPresentation(_))));
    }

    #[test]
    fn rejects_non_inverse_images() {
        let p = Presentation::from_json(
            r#"{"generators":[{"name":"x","degree":1}],"order":["x"],"rules":[],
            "t_action":{"x":[{"word":"x","coeff":"2"}]},
            "t_inverse":{"x":[{"word":"x","coeff":"1"}]}}"#,
        )
        .unwrap();
        assert!(matches!(Algebra::new(p, 4), Err(Error::InvalidPresentation(_))));
    }
}
