//! Free bimodule resolutions `P_n = A ⊗ V_n ⊗ A` with internal grading and t-action.
//!
//! Homological degree 0 is `A ⊗ A` with a single generator `1`. The differential of
//! a generator in degree `n` lies in degree `n - 1`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use serde::{Deserialize, Serialize};

use crate::algebra::{Algebra, AlgebraElement, Word};
use crate::complex::{ComplexOfGVS, GradedVectorSpace, LinearMap};
use crate::error::{Error, Result};
use crate::lifting::{
    differential_element, twist_element, BimoduleComplex, DegreeSolver, FreeBimoduleComplex,
};
use crate::linalg::SparseMatrix;
use crate::linear::LinComb;
use crate::scalar::{format_scalar, int, one, parse_scalar, ratio, sign, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenId {
    pub hdeg: usize,
    pub index: usize,
}

/// The basis element `left ⊗ gen ⊗ right`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PKey {
    pub left: Word,
    pub gen: GenId,
    pub right: Word,
}

pub type PElement = LinComb<PKey>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResGenerator {
    pub label: String,
    pub degree: u32,
    /// `t · (1⊗g⊗1)`.
    pub t_action: PElement,
    /// `d(1⊗g⊗1)`, zero in homological degree 0.
    pub differential: PElement,
}

pub struct FreeBimoduleResolution {
    alg: Arc<Algebra>,
    levels: Vec<Vec<ResGenerator>>,
    complete: bool,
    name: String,
    twist_cache: RwLock<HashMap<(i64, GenId), PElement>>,
}

impl std::fmt::Debug for FreeBimoduleResolution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FreeBimoduleResolution")
            .field("name", &self.name)
            .field("levels", &self.levels)
            .field("complete", &self.complete)
            .finish()
    }
}

impl PartialEq for FreeBimoduleResolution {
    fn eq(&self, other: &Self) -> bool {
        self.levels == other.levels && self.complete == other.complete
    }
}

pub fn pkey(left: Word, gen: GenId, right: Word) -> PKey {
    PKey { left, gen, right }
}

impl FreeBimoduleResolution {
    /// Builds a resolution from levels `1..`; level 0 is added automatically.
    pub fn new(
        alg: Arc<Algebra>,
        name: &str,
        upper: Vec<Vec<ResGenerator>>,
        complete: bool,
    ) -> Result<FreeBimoduleResolution> {
        let unit = GenId { hdeg: 0, index: 0 };
        let mut levels = vec![vec![ResGenerator {
            label: "1".into(),
            degree: 0,
            t_action: LinComb::basis(pkey(Word::unit(), unit, Word::unit())),
            differential: LinComb::zero(),
        }]];
        levels.extend(upper);
        let res = FreeBimoduleResolution {
            alg,
            levels,
            complete,
            name: name.into(),
            twist_cache: RwLock::new(HashMap::new()),
        };
        res.check_references()?;
        Ok(res)
    }

    fn check_references(&self) -> Result<()> {
        for (n, level) in self.levels.iter().enumerate() {
            let mut seen = std::collections::HashSet::new();
            for g in level {
                if !seen.insert(g.label.as_str()) {
                    return Err(Error::InvalidResolution(format!(
                        "duplicate label `{}` in degree {n}",
                        g.label
                    )));
                }
                for (key, _) in g.t_action.iter() {
                    if key.gen.hdeg != n || key.gen.index >= level.len() {
                        return Err(Error::InvalidResolution(format!(
                            "t-action of `{}` leaves degree {n}",
                            g.label
                        )));
                    }
                }
                for (key, _) in g.differential.iter() {
                    if n == 0
                        || key.gen.hdeg != n - 1
                        || key.gen.index >= self.levels[n - 1].len()
                    {
                        return Err(Error::InvalidResolution(format!(
                            "differential of `{}` does not land in degree {}",
                            g.label,
                            n as i64 - 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// The Jordan plane resolution of length 2 with `V_2 = k{r}`.
    pub fn builtin_jordan(alg: Arc<Algebra>) -> Result<FreeBimoduleResolution> {
        let x = Word::letter(0);
        let y = Word::letter(1);
        let u = Word::unit;
        let p0 = GenId { hdeg: 0, index: 0 };
        let gx = GenId { hdeg: 1, index: 0 };
        let gy = GenId { hdeg: 1, index: 1 };
        let gr = GenId { hdeg: 2, index: 0 };
        let d0 = |v: &Word| -> PElement {
            let mut e = LinComb::zero();
            e.add_term(pkey(v.clone(), p0, u()), one());
            e.add_term(pkey(u(), p0, v.clone()), int(-1));
            e
        };
        let half = ratio(1, 2);
        let dr: PElement = [
            (pkey(y.clone(), gx, u()), int(1)),
            (pkey(u(), gy, x.clone()), int(1)),
            (pkey(x.clone(), gy, u()), int(-1)),
            (pkey(u(), gx, y.clone()), int(-1)),
            (pkey(x.clone(), gx, u()), half.clone()),
            (pkey(u(), gx, x.clone()), half),
        ]
        .into_iter()
        .collect();
        let level1 = vec![
            ResGenerator {
                label: "x".into(),
                degree: 1,
                t_action: LinComb::basis(pkey(u(), gx, u())),
                differential: d0(&x),
            },
            ResGenerator {
                label: "y".into(),
                degree: 1,
                t_action: [(pkey(u(), gx, u()), one()), (pkey(u(), gy, u()), one())]
                    .into_iter()
                    .collect(),
                differential: d0(&y),
            },
        ];
        let level2 = vec![ResGenerator {
            label: "r".into(),
            degree: 2,
            t_action: LinComb::basis(pkey(u(), gr, u())),
            differential: dr,
        }];
        FreeBimoduleResolution::new(alg, "jordan", vec![level1, level2], true)
    }

    /// The super Jordan plane resolution through homological degree `n_max`, with
    /// `V_1 = k{x, y}` and `V_n = k{x^n, y2x^{n-1}}` for n ≥ 2.
    ///
    /// `t·(1⊗y2x^{n-1}⊗1) = -1⊗x^n⊗y + (-1)^{n-1}((x-y)⊗x^n⊗1 + 1⊗y2x^{n-1}⊗1)`; the sign
    /// on the last term is needed for `d` to commute with t when n is even.
    pub fn builtin_super_jordan(alg: Arc<Algebra>, n_max: usize) -> Result<FreeBimoduleResolution> {
        if n_max < 1 {
            return Err(Error::Degree("n_max must be at least 1".into()));
        }
        let x = Word::letter(0);
        let y = Word::letter(1);
        let u = Word::unit;
        let w = |s: &[u8]| Word(s.to_vec());
        let p0 = GenId { hdeg: 0, index: 0 };
        let xn = |n: usize| GenId { hdeg: n, index: 0 };
        let yn = |n: usize| GenId { hdeg: n, index: 1 };
        let mut levels = Vec::new();
        let d0 = |v: &Word| -> PElement {
            [(pkey(v.clone(), p0, u()), one()), (pkey(u(), p0, v.clone()), int(-1))]
                .into_iter()
                .collect()
        };
        levels.push(vec![
            ResGenerator {
                label: "x".into(),
                degree: 1,
                t_action: LinComb::single(pkey(u(), xn(1), u()), int(-1)),
                differential: d0(&x),
            },
            ResGenerator {
                label: "y".into(),
                degree: 1,
                t_action: [(pkey(u(), xn(1), u()), one()), (pkey(u(), yn(1), u()), int(-1))]
                    .into_iter()
                    .collect(),
                differential: d0(&y),
            },
        ]);
        for n in 2..=n_max {
            let m = n - 1;
            let dx: PElement = [
                (pkey(x.clone(), xn(m), u()), one()),
                (pkey(u(), xn(m), x.clone()), sign(n as i64)),
            ]
            .into_iter()
            .collect();
            let dy: PElement = if n == 2 {
                [
                    (pkey(w(&[1, 1]), xn(1), u()), int(1)),
                    (pkey(y.clone(), yn(1), x.clone()), int(1)),
                    (pkey(u(), yn(1), w(&[1, 0])), int(1)),
                    (pkey(w(&[0, 1]), yn(1), u()), int(-1)),
                    (pkey(x.clone(), yn(1), y.clone()), int(-1)),
                    (pkey(u(), xn(1), w(&[1, 1])), int(-1)),
                    (pkey(w(&[0, 1]), xn(1), u()), int(-1)),
                    (pkey(x.clone(), yn(1), x.clone()), int(-1)),
                    (pkey(u(), xn(1), w(&[1, 0])), int(-1)),
                ]
                .into_iter()
                .collect()
            } else {
                [
                    (pkey(w(&[1, 1]), xn(m), u()), int(1)),
                    (pkey(u(), yn(m), x.clone()), sign(n as i64)),
                    (pkey(x.clone(), yn(m), u()), int(-1)),
                    (pkey(w(&[0, 1]), xn(m), u()), int(-1)),
                    (pkey(u(), xn(m), w(&[1, 1])), int(-1)),
                    (pkey(u(), xn(m), w(&[1, 0])), int(-1)),
                ]
                .into_iter()
                .collect()
            };
            let s = sign(m as i64);
            let ty: PElement = [
                (pkey(u(), xn(n), y.clone()), int(-1)),
                (pkey(x.clone(), xn(n), u()), s.clone()),
                (pkey(y.clone(), xn(n), u()), -s.clone()),
                (pkey(u(), yn(n), u()), s),
            ]
            .into_iter()
            .collect();
            levels.push(vec![
                ResGenerator {
                    label: format!("x^{n}"),
                    degree: n as u32,
                    t_action: LinComb::single(pkey(u(), xn(n), u()), sign(n as i64)),
                    differential: dx,
                },
                ResGenerator {
                    label: if n == 2 { "y2x".into() } else { format!("y2x^{m}") },
                    degree: n as u32 + 1,
                    t_action: ty,
                    differential: dy,
                },
            ]);
        }
        FreeBimoduleResolution::new(alg, "super_jordan", levels, false)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn algebra_arc(&self) -> &Arc<Algebra> {
        &self.alg
    }

    /// Highest homological degree with data.
    pub fn max_hdeg(&self) -> usize {
        self.levels.len() - 1
    }

    /// Whether every level above [`Self::max_hdeg`] is zero.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    pub fn level(&self, n: usize) -> Result<&[ResGenerator]> {
        if n < self.levels.len() {
            Ok(&self.levels[n])
        } else if self.complete {
            Ok(&[])
        } else {
            Err(Error::Degree(format!(
                "resolution `{}` is only available through homological degree {}",
                self.name,
                self.max_hdeg()
            )))
        }
    }

    pub fn generator(&self, id: GenId) -> &ResGenerator {
        &self.levels[id.hdeg][id.index]
    }

    pub fn label(&self, id: GenId) -> &str {
        &self.levels[id.hdeg][id.index].label
    }

    pub fn generator_by_label(&self, hdeg: usize, label: &str) -> Result<GenId> {
        self.level(hdeg)?
            .iter()
            .position(|g| g.label == label)
            .map(|index| GenId { hdeg, index })
            .ok_or_else(|| {
                Error::InvalidResolution(format!("no generator `{label}` in degree {hdeg}"))
            })
    }

    pub fn all_generators(&self, hdeg: usize) -> Result<Vec<GenId>> {
        Ok((0..self.level(hdeg)?.len())
            .map(|index| GenId { hdeg, index })
            .collect())
    }

    pub fn gen_element(&self, id: GenId) -> PElement {
        LinComb::basis(pkey(Word::unit(), id, Word::unit()))
    }

    /// `a · e · b` for algebra elements `a`, `b`.
    pub fn sandwich(&self, a: &AlgebraElement, e: &PElement, b: &AlgebraElement) -> Result<PElement> {
        let mut out = LinComb::zero();
        for (wa, ca) in a.iter() {
            for (wb, cb) in b.iter() {
                let part = crate::lifting::act_element(self, wa, e, wb)?;
                out.add_scaled(&part, &(ca * cb));
            }
        }
        Ok(out)
    }

    /// `ε ⊗ id ⊗ ε`: the image in `V_n`.
    pub fn collapse(&self, e: &PElement) -> LinComb<GenId> {
        let mut out = LinComb::zero();
        for (k, c) in e.iter() {
            if k.left.is_unit() && k.right.is_unit() {
                out.add_term(k.gen, c.clone());
            }
        }
        out
    }

    fn twist_gen(&self, k: i64, id: GenId) -> Result<PElement> {
        if k == 0 {
            return Ok(self.gen_element(id));
        }
        if let Some(v) = self.twist_cache.read().unwrap().get(&(k, id)) {
            return Ok(v.clone());
        }
        let value = if k == 1 {
            self.generator(id).t_action.clone()
        } else if k > 1 {
            twist_element(self, 1, &self.twist_gen(k - 1, id)?)?
        } else if k == -1 {
            self.untwist_gen(id)?
        } else {
            twist_element(self, -1, &self.twist_gen(k + 1, id)?)?
        };
        self.twist_cache
            .write()
            .unwrap()
            .insert((k, id), value.clone());
        Ok(value)
    }

    /// Solves `t · v = 1⊗g⊗1` in the bidegree of `g`.
    fn untwist_gen(&self, id: GenId) -> Result<PElement> {
        let e = self.generator(id).degree;
        let columns = self.basis(id.hdeg, e)?;
        let images = columns
            .iter()
            .map(|key| self.twist(1, key))
            .collect::<Result<Vec<_>>>()?;
        let solver = DegreeSolver::from_images(columns, &images);
        if solver.kernel_dim() > 0 {
            return Err(Error::InvalidResolution(format!(
                "t does not act invertibly on the degree of `{}`",
                self.label(id)
            )));
        }
        solver.solve(&self.gen_element(id)).ok_or_else(|| {
            Error::InvalidResolution(format!(
                "t does not act invertibly on the degree of `{}`",
                self.label(id)
            ))
        })
    }

    /// `ε ⊗ … ⊗ ε` on degree 0 followed by the multiplication: `A ⊗ A → A`.
    pub fn augmentation(&self, e: &PElement) -> Result<AlgebraElement> {
        let mut out = LinComb::zero();
        for (k, c) in e.iter() {
            if k.gen.hdeg != 0 {
                return Err(Error::Degree("augmentation is defined on degree 0".into()));
            }
            out.add_scaled(&self.alg.multiply_words(&k.left, &k.right)?, c);
        }
        Ok(out)
    }

    pub fn format_key(&self, k: &PKey) -> String {
        let p = self.alg.presentation();
        format!(
            "{}⊗{}⊗{}",
            p.format_word(&k.left),
            self.label(k.gen),
            p.format_word(&k.right)
        )
    }

    pub fn format_element(&self, e: &PElement) -> String {
        crate::algebra::format_terms(e.iter().rev().map(|(k, c)| (self.format_key(k), c)))
    }
}

impl BimoduleComplex for FreeBimoduleResolution {
    type Key = PKey;

    fn algebra(&self) -> &Algebra {
        &self.alg
    }

    fn basis(&self, hdeg: usize, ideg: u32) -> Result<Vec<PKey>> {
        let mut out = Vec::new();
        for (index, g) in self.level(hdeg)?.iter().enumerate() {
            if g.degree > ideg {
                continue;
            }
            let rest = ideg - g.degree;
            for da in 0..=rest {
                for a in self.alg.graded_basis(da)? {
                    for b in self.alg.graded_basis(rest - da)? {
                        out.push(pkey(a.clone(), GenId { hdeg, index }, b));
                    }
                }
            }
        }
        Ok(out)
    }

    fn hdeg(&self, key: &PKey) -> usize {
        key.gen.hdeg
    }

    fn ideg(&self, key: &PKey) -> u32 {
        self.alg.word_degree(&key.left)
            + self.generator(key.gen).degree
            + self.alg.word_degree(&key.right)
    }

    fn act(&self, left: &Word, key: &PKey, right: &Word) -> Result<PElement> {
        let a = self.alg.multiply_words(left, &key.left)?;
        let b = self.alg.multiply_words(&key.right, right)?;
        let mut out = LinComb::zero();
        for (wa, ca) in a.iter() {
            for (wb, cb) in b.iter() {
                out.add_term(pkey(wa.clone(), key.gen, wb.clone()), ca * cb);
            }
        }
        Ok(out)
    }

    fn twist(&self, k: i64, key: &PKey) -> Result<PElement> {
        let a = self.alg.act_word(k, &key.left)?;
        let b = self.alg.act_word(k, &key.right)?;
        let g = self.twist_gen(k, key.gen)?;
        self.sandwich(&a, &g, &b)
    }

    fn differential(&self, key: &PKey) -> Result<PElement> {
        let d = &self.generator(key.gen).differential;
        crate::lifting::act_element(self, &key.left, d, &key.right)
    }
}

impl FreeBimoduleComplex for FreeBimoduleResolution {
    type Gen = GenId;

    fn generators(&self, hdeg: usize, ideg: u32) -> Result<Vec<GenId>> {
        Ok(self
            .level(hdeg)?
            .iter()
            .enumerate()
            .filter(|(_, g)| g.degree == ideg)
            .map(|(index, _)| GenId { hdeg, index })
            .collect())
    }

    fn gen_key(&self, gen: &GenId) -> PKey {
        pkey(Word::unit(), *gen, Word::unit())
    }

    fn split(&self, key: &PKey) -> (Word, GenId, Word) {
        (key.left.clone(), key.gen, key.right.clone())
    }

    fn gen_hdeg(&self, gen: &GenId) -> usize {
        gen.hdeg
    }

    fn gen_ideg(&self, gen: &GenId) -> u32 {
        self.generator(*gen).degree
    }

    fn within_window(&self, max_hdeg: usize, max_ideg: u32) -> bool {
        self.complete
            && max_hdeg >= self.max_hdeg()
            && self
                .levels
                .iter()
                .flatten()
                .all(|g| g.degree <= max_ideg)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValidationFailure {
    pub check: &'static str,
    pub hdeg: usize,
    pub ideg: u32,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct ValidationReport {
    pub max_degree: u32,
    pub max_hdeg: usize,
    pub checks: usize,
    pub failures: Vec<ValidationFailure>,
    /// No differential term survives `ε ⊗ id ⊗ ε`.
    pub minimal: bool,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failed(&self, check: &str) -> bool {
        self.failures.iter().any(|f| f.check == check)
    }
}

fn homogeneous(res: &FreeBimoduleResolution, e: &PElement, hdeg: usize, ideg: u32) -> bool {
    e.keys()
        .all(|k| k.gen.hdeg == hdeg && res.ideg(k) == ideg)
}

/// Checks grading, `d² = 0`, t-equivariance and exactness of
/// `… → P_1 → P_0 → A → 0` in internal degrees ≤ `max_degree`.
pub fn validate(res: &FreeBimoduleResolution, max_degree: u32) -> Result<ValidationReport> {
    let alg = &*res.alg;
    let mut failures = Vec::new();
    let mut checks = 0;
    let top = res.max_hdeg();
    let mut minimal = true;
    for n in 0..=top {
        for (index, g) in res.levels[n].iter().enumerate() {
            let id = GenId { hdeg: n, index };
            let mut fail = |check: &'static str, detail: String| {
                failures.push(ValidationFailure {
                    check,
                    hdeg: n,
                    ideg: g.degree,
                    detail,
                })
            };
            checks += 1;
            if !homogeneous(res, &g.t_action, n, g.degree) {
                fail("grading", format!("t-action of `{}` is not homogeneous", g.label));
            }
            if n > 0 && !homogeneous(res, &g.differential, n - 1, g.degree) {
                fail("grading", format!("differential of `{}` is not homogeneous", g.label));
            }
            if n > 0 && !res.collapse(&g.differential).is_zero() {
                minimal = false;
            }
            if g.degree > max_degree {
                continue;
            }
            if n >= 2 {
                checks += 1;
                let dd = differential_element(res, &g.differential)?;
                if !dd.is_zero() {
                    fail("d^2 = 0", format!("d(d({})) = {}", g.label, res.format_element(&dd)));
                }
            }
            if n == 1 {
                checks += 1;
                if !res.augmentation(&g.differential)?.is_zero() {
                    fail("d^2 = 0", format!("μ(d({})) ≠ 0", g.label));
                }
            }
            if n >= 1 {
                checks += 1;
                let lhs = differential_element(res, &g.t_action)?;
                let rhs = twist_element(res, 1, &g.differential)?;
                if lhs != rhs {
                    fail(
                        "t-equivariance",
                        format!(
                            "d(t·{0}) = {1} but t·d({0}) = {2}",
                            g.label,
                            res.format_element(&lhs),
                            res.format_element(&rhs)
                        ),
                    );
                }
            }
            let _ = id;
        }
    }
    if !failures.iter().any(|f| f.check == "grading") {
        for e in 0..=max_degree {
            let solvers = (1..=top)
                .map(|n| DegreeSolver::new(res, n, e))
                .collect::<Result<Vec<_>>>()?;
            let rank = |n: usize| solvers[n - 1].rank();
            checks += 1;
            let ker_mu = res.basis(0, e)?.len() - alg.dimension(e)?;
            if top >= 1 && rank(1) != ker_mu {
                failures.push(ValidationFailure {
                    check: "exactness",
                    hdeg: 0,
                    ideg: e,
                    detail: format!("dim ker μ = {ker_mu}, rank d = {}", rank(1)),
                });
            }
            for n in 1..=top {
                let ker = solvers[n - 1].kernel_dim();
                let im = if n < top {
                    rank(n + 1)
                } else if res.complete {
                    0
                } else {
                    continue;
                };
                checks += 1;
                if ker != im {
                    failures.push(ValidationFailure {
                        check: "exactness",
                        hdeg: n,
                        ideg: e,
                        detail: format!("dim ker = {ker}, dim im = {im}"),
                    });
                }
            }
        }
    }
    Ok(ValidationReport {
        max_degree,
        max_hdeg: top,
        checks,
        failures,
        minimal,
    })
}

/// `Hom_{AA}(P, k) ≅ Hom(V_•, k)` with the induced differential, through degree
/// `max_n + 1` where the resolution reaches it.
/// The dual of a generator of internal degree `e` sits in degree `-e`.
pub fn induced_trivial_cochain(res: &FreeBimoduleResolution, max_n: usize) -> Result<ComplexOfGVS> {
    let top = if res.complete {
        max_n + 1
    } else {
        (max_n + 1).min(res.max_hdeg())
    };
    let mut spaces = Vec::new();
    for n in 0..=top {
        let mut pieces: BTreeMap<i64, Vec<String>> = BTreeMap::new();
        for g in res.level(n)? {
            pieces
                .entry(-(g.degree as i64))
                .or_default()
                .push(format!("{}*", g.label));
        }
        spaces.push(GradedVectorSpace::new(pieces)?);
    }
    let mut maps = Vec::new();
    for n in 0..top {
        let mut blocks = BTreeMap::new();
        let source = res.level(n)?;
        let target = res.level(n + 1)?;
        for d in spaces[n].degrees().collect::<Vec<_>>() {
            let e = (-d) as u32;
            let src: Vec<usize> = (0..source.len()).filter(|&i| source[i].degree == e).collect();
            let tgt: Vec<usize> = (0..target.len()).filter(|&i| target[i].degree == e).collect();
            let mut m = SparseMatrix::zeros(tgt.len(), src.len());
            for (row, &j) in tgt.iter().enumerate() {
                let c = res.collapse(&target[j].differential);
                for (col, &i) in src.iter().enumerate() {
                    m.set(row, col, c.coeff(&GenId { hdeg: n, index: i }));
                }
            }
            blocks.insert(d, m);
        }
        maps.push(LinearMap::new(spaces[n].clone(), spaces[n + 1].clone(), 0, blocks)?);
    }
    ComplexOfGVS::new(spaces, maps)
}

/// `dim H^n(A, k)` for `n = 0..=max_n`.
pub fn cohomology_dims(res: &FreeBimoduleResolution, max_n: usize) -> Result<Vec<usize>> {
    if !res.complete && res.max_hdeg() < max_n + 1 {
        return Err(Error::Degree(format!(
            "H^{max_n} needs the resolution through degree {}, it stops at {}",
            max_n + 1,
            res.max_hdeg()
        )));
    }
    let mut dims = induced_trivial_cochain(res, max_n)?.homology_totals();
    dims.truncate(max_n + 1);
    Ok(dims)
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ResTermFile {
    pub a: String,
    pub gen: String,
    pub b: String,
    pub coeff: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ResGeneratorFile {
    pub label: String,
    pub degree: u32,
    pub t_action: Vec<ResTermFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ResDegreeFile {
    pub n: usize,
    pub generators: Vec<ResGeneratorFile>,
    pub d: BTreeMap<String, Vec<ResTermFile>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct ResolutionFile {
    pub degrees: Vec<ResDegreeFile>,
    #[serde(default)]
    pub complete: bool,
}

impl FreeBimoduleResolution {
    pub fn to_file(&self) -> ResolutionFile {
        let p = self.alg.presentation();
        let terms = |e: &PElement| -> Vec<ResTermFile> {
            e.iter()
                .map(|(k, c)| ResTermFile {
                    a: p.format_word_compact(&k.left),
                    gen: self.label(k.gen).to_string(),
                    b: p.format_word_compact(&k.right),
                    coeff: format_scalar(c),
                })
                .collect()
        };
        let degrees = (1..self.levels.len())
            .map(|n| ResDegreeFile {
                n,
                generators: self.levels[n]
                    .iter()
                    .map(|g| ResGeneratorFile {
                        label: g.label.clone(),
                        degree: g.degree,
                        t_action: terms(&g.t_action),
                    })
                    .collect(),
                d: self.levels[n]
                    .iter()
                    .map(|g| (g.label.clone(), terms(&g.differential)))
                    .collect(),
            })
            .collect();
        ResolutionFile {
            degrees,
            complete: self.complete,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("resolution serializes")
    }

    /// Reads the file format without validating.
    pub fn from_file(alg: Arc<Algebra>, name: &str, file: &ResolutionFile) -> Result<FreeBimoduleResolution> {
        let mut labels: Vec<Vec<String>> = vec![vec!["1".into()]];
        for (i, deg) in file.degrees.iter().enumerate() {
            if deg.n != i + 1 {
                return Err(Error::Schema(format!(
                    "degrees[{i}]: expected n = {}, found {}",
                    i + 1,
                    deg.n
                )));
            }
            labels.push(deg.generators.iter().map(|g| g.label.clone()).collect());
        }
        let parse_terms = |terms: &[ResTermFile], hdeg: usize, ctx: &str| -> Result<PElement> {
            let mut out = LinComb::zero();
            for (j, t) in terms.iter().enumerate() {
                let at = |msg: String| Error::Schema(format!("{ctx}[{j}]: {msg}"));
                let index = labels[hdeg]
                    .iter()
                    .position(|l| *l == t.gen)
                    .ok_or_else(|| at(format!("unknown generator `{}` in degree {hdeg}", t.gen)))?;
                let a = alg
                    .parse_word(&t.a)
                    .map_err(|e| at(e.to_string()))?;
                let b = alg
                    .parse_word(&t.b)
                    .map_err(|e| at(e.to_string()))?;
                let c: Scalar = parse_scalar(&t.coeff).map_err(|e| at(e.to_string()))?;
                let na = alg.normal_form_word(&a)?;
                let nb = alg.normal_form_word(&b)?;
                for (wa, ca) in na.iter() {
                    for (wb, cb) in nb.iter() {
                        out.add_term(
                            pkey(wa.clone(), GenId { hdeg, index }, wb.clone()),
                            &c * ca * cb,
                        );
                    }
                }
            }
            Ok(out)
        };
        let mut upper = Vec::new();
        for deg in &file.degrees {
            let n = deg.n;
            for key in deg.d.keys() {
                if !labels[n].contains(key) {
                    return Err(Error::Schema(format!(
                        "degrees[{}].d: `{key}` is not a generator of degree {n}",
                        n - 1
                    )));
                }
            }
            let mut level = Vec::new();
            for (j, g) in deg.generators.iter().enumerate() {
                let ctx = format!("degrees[{}].generators[{j}].t_action", n - 1);
                let t_action = parse_terms(&g.t_action, n, &ctx)?;
                let d_terms = deg.d.get(&g.label).ok_or_else(|| {
                    Error::Schema(format!(
                        "degrees[{}].d: missing differential for `{}`",
                        n - 1,
                        g.label
                    ))
                })?;
                let ctx = format!("degrees[{}].d.{}", n - 1, g.label);
                let differential = parse_terms(d_terms, n - 1, &ctx)?;
                level.push(ResGenerator {
                    label: g.label.clone(),
                    degree: g.degree,
                    t_action,
                    differential,
                });
            }
            upper.push(level);
        }
        FreeBimoduleResolution::new(alg, name, upper, file.complete)
    }

    pub fn from_json(alg: Arc<Algebra>, name: &str, text: &str) -> Result<FreeBimoduleResolution> {
        let file: ResolutionFile = serde_json::from_str(text).map_err(|e| {
            Error::Schema(format!("line {}, column {}: {e}", e.line(), e.column()))
        })?;
        FreeBimoduleResolution::from_file(alg, name, &file)
    }
}

/// Parses a resolution file and validates it through internal degree `max_degree`.
pub fn parse_resolution(
    alg: Arc<Algebra>,
    name: &str,
    text: &str,
    max_degree: u32,
) -> Result<(FreeBimoduleResolution, ValidationReport)> {
    let res = FreeBimoduleResolution::from_json(alg, name, text)?;
    let report = validate(&res, max_degree)?;
    if let Some(f) = report.failures.first() {
        return Err(Error::InvalidResolution(format!(
            "{} fails at homological degree {}, internal degree {}: {}",
            f.check, f.hdeg, f.ideg, f.detail
        )));
    }
    Ok((res, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn jordan() -> FreeBimoduleResolution {
        FreeBimoduleResolution::builtin_jordan(Arc::new(Algebra::jordan(8))).unwrap()
    }

    fn super_jordan(n: usize) -> FreeBimoduleResolution {
        FreeBimoduleResolution::builtin_super_jordan(Arc::new(Algebra::super_jordan(8)), n)
            .unwrap()
    }

    #[test]
    fn jordan_data() {
        let r = jordan();
        let gr = r.generator_by_label(2, "r").unwrap();
        assert_eq!(r.generator(gr).degree, 2);
        assert_eq!(r.generator(gr).differential.len(), 6);
        let dd = differential_element(&r, &r.generator(gr).differential).unwrap();
        assert!(dd.is_zero());
        assert!(r.level(3).unwrap().is_empty());
    }

    #[test]
    fn super_jordan_data() {
        let r = super_jordan(4);
        let x3 = r.generator_by_label(3, "x^3").unwrap();
        let x2 = r.generator_by_label(2, "x^2").unwrap();
        let x = Word::letter(0);
        let expected: PElement = [
            (pkey(x.clone(), x2, Word::unit()), int(1)),
            (pkey(Word::unit(), x2, x), int(-1)),
        ]
        .into_iter()
        .collect();
        assert_eq!(r.generator(x3).differential, expected);
        let y = r.generator_by_label(3, "y2x^2").unwrap();
        assert_eq!(r.generator(y).degree, 4);
        assert!(r.level(5).is_err());
    }

    #[test]
    fn built_ins_validate() {
        let j = validate(&jordan(), 6).unwrap();
        assert!(j.passed(), "{:?}", j.failures);
        assert!(j.minimal);
        let s = validate(&super_jordan(4), 6).unwrap();
        assert!(s.passed(), "{:?}", s.failures);
        assert!(s.minimal);
    }

    #[test]
    fn flipped_sign_is_caught() {
        let r = jordan();
        let mut file = r.to_file();
        let terms = file.degrees[1].d.get_mut("r").unwrap();
        terms[0].coeff = if terms[0].coeff == "-1" { "1".into() } else { "-1".into() };
        let bad = FreeBimoduleResolution::from_file(r.algebra_arc().clone(), "bad", &file).unwrap();
        let report = validate(&bad, 4).unwrap();
        assert!(report.failed("d^2 = 0"));
    }

    #[test]
    fn cohomology() {
        assert_eq!(cohomology_dims(&jordan(), 4).unwrap(), vec![1, 2, 1, 0, 0]);
        assert_eq!(cohomology_dims(&super_jordan(6), 5).unwrap(), vec![1, 2, 2, 2, 2, 2]);
        assert!(cohomology_dims(&super_jordan(5), 5).is_err());
    }

    #[test]
    fn round_trip() {
        for r in [jordan(), super_jordan(3)] {
            let text = r.to_json();
            let back = FreeBimoduleResolution::from_json(r.algebra_arc().clone(), "back", &text).unwrap();
            assert_eq!(back, r);
        }
    }

    #[test]
    fn schema_errors() {
        let alg = Arc::new(Algebra::jordan(4));
        let missing = r#"{"degrees": [{"n": 1, "generators": [{"label": "x", "degree": 1}], "d": {}}]}"#;
        assert!(matches!(
            FreeBimoduleResolution::from_json(alg.clone(), "m", missing),
            Err(Error::Schema(_))
        ));
        let mismatched = r#"{"degrees": [{"n": 1,
            "generators": [{"label": "x", "degree": 1, "t_action": [{"a": "1", "gen": "x", "b": "1", "coeff": "1"}]}],
            "d": {"x": [{"a": "xx", "gen": "1", "b": "1", "coeff": "1"}]}}]}"#;
        assert!(matches!(
            parse_resolution(alg, "m", mismatched, 4),
            Err(Error::InvalidResolution(_))
        ));
    }

    #[test]
    fn twist_inverse() {
        let r = super_jordan(3);
        for n in 1..=3 {
            for id in r.all_generators(n).unwrap() {
                let key = r.gen_key(&id);
                let back = twist_element(&r, -1, &r.twist(1, &key).unwrap()).unwrap();
                assert_eq!(back, LinComb::basis(key));
            }
        }
    }

    #[test]
    fn unsigned_t_action_breaks_equivariance_in_even_degrees() {
        let r = super_jordan(4);
        let mut file = r.to_file();
        for deg in file.degrees.iter_mut().skip(1) {
            let label = deg.generators[1].label.clone();
            for term in deg.generators[1].t_action.iter_mut() {
                if term.gen == label {
                    term.coeff = "1".into();
                }
            }
        }
        let naive = FreeBimoduleResolution::from_file(r.algebra_arc().clone(), "naive", &file).unwrap();
        let report = validate(&naive, 6).unwrap();
        let first = report
            .failures
            .iter()
            .find(|f| f.check == "t-equivariance")
            .unwrap();
        assert_eq!((first.hdeg, first.ideg), (2, 3));
    }
}
