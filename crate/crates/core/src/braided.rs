//! Yetter–Drinfeld structure over kZ: braiding, braided tensor square, coproduct.

use crate::algebra::{Algebra, AlgebraElement, Word};
use crate::error::{Error, Result};
use crate::linalg::SparseMatrix;
use crate::linear::LinComb;
use crate::scalar::{one, Scalar};

/// A pure tensor of normal words.
pub type Tensor = Vec<Word>;
/// A linear combination of pure tensors of a fixed arity.
pub type TensorElement = LinComb<Tensor>;

pub fn check_arity(e: &TensorElement, arity: usize) -> Result<()> {
    for t in e.keys() {
        if t.len() != arity {
            return Err(Error::Arity {
                expected: arity,
                found: t.len(),
            });
        }
    }
    Ok(())
}

/// The tensor `w1 ⊗ … ⊗ wn` with coefficient 1.
pub fn pure(words: Vec<Word>) -> TensorElement {
    LinComb::basis(words)
}

/// Tensor product of algebra elements, expanded multilinearly.
pub fn tensor_of(factors: &[AlgebraElement]) -> TensorElement {
    let mut acc: TensorElement = LinComb::basis(Vec::new());
    for f in factors {
        let mut next = LinComb::zero();
        for (t, c) in acc.iter() {
            for (w, d) in f.iter() {
                let mut key = t.clone();
                key.push(w.clone());
                next.add_term(key, c * d);
            }
        }
        acc = next;
    }
    acc
}

/// Concatenation `a ⊗ b` of tensor elements.
pub fn tensor_product(a: &TensorElement, b: &TensorElement) -> TensorElement {
    let mut out = LinComb::zero();
    for (s, c) in a.iter() {
        for (t, d) in b.iter() {
            let mut key = s.clone();
            key.extend(t.iter().cloned());
            out.add_term(key, c * d);
        }
    }
    out
}

/// Replaces factor `i` of every pure tensor by `f(factor)`.
pub fn map_factor<F>(e: &TensorElement, i: usize, mut f: F) -> Result<TensorElement>
where
    F: FnMut(&Word) -> Result<AlgebraElement>,
{
    e.flat_map(|t| {
        if i >= t.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                arity: t.len(),
            });
        }
        let image = f(&t[i])?;
        Ok(image
            .iter()
            .map(|(w, c)| {
                let mut key = t.clone();
                key[i] = w.clone();
                (key, c.clone())
            })
            .collect())
    })
}

pub fn tensor_degree(alg: &Algebra, t: &[Word]) -> u32 {
    t.iter().map(|w| alg.word_degree(w)).sum()
}

/// `t^k` acting diagonally on every factor.
pub fn act_tensor(alg: &Algebra, k: i64, t: &[Word]) -> Result<TensorElement> {
    let factors: Vec<AlgebraElement> = t
        .iter()
        .map(|w| alg.act_word(k, w))
        .collect::<Result<_>>()?;
    Ok(tensor_of(&factors))
}

/// The braiding `c(v ⊗ w) = t^{deg v}·w ⊗ v` on arity-2 tensors.
pub fn braid(alg: &Algebra, e: &TensorElement) -> Result<TensorElement> {
    check_arity(e, 2)?;
    braid_blocks(alg, e, 1)
}

/// The inverse braiding `v ⊗ w ↦ w ⊗ t^{-deg w}·v`.
pub fn braid_inverse(alg: &Algebra, e: &TensorElement) -> Result<TensorElement> {
    check_arity(e, 2)?;
    braid_blocks_inverse(alg, e, 1)
}

/// `c_{A^{⊗p}, A^{⊗q}}`: the first `p` factors move past the rest,
/// which are acted on by `t` raised to the degree of the first block.
pub fn braid_blocks(alg: &Algebra, e: &TensorElement, p: usize) -> Result<TensorElement> {
    e.flat_map(|t| {
        if p > t.len() {
            return Err(Error::IndexOutOfRange {
                index: p,
                arity: t.len(),
            });
        }
        let (u, w) = t.split_at(p);
        let k = tensor_degree(alg, u) as i64;
        let moved = act_tensor(alg, k, w)?;
        Ok(tensor_product(&moved, &pure(u.to_vec())))
    })
}

/// Inverse of [`braid_blocks`] with the same split: `u ⊗ w ↦ w ⊗ t^{-deg w}·u`, where
/// here `u` has arity `p`.
pub fn braid_blocks_inverse(alg: &Algebra, e: &TensorElement, p: usize) -> Result<TensorElement> {
    e.flat_map(|t| {
        if p > t.len() {
            return Err(Error::IndexOutOfRange {
                index: p,
                arity: t.len(),
            });
        }
        let (u, w) = t.split_at(p);
        let k = tensor_degree(alg, w) as i64;
        let moved = act_tensor(alg, -k, u)?;
        Ok(tensor_product(&pure(w.to_vec()), &moved))
    })
}

/// Braiding of the adjacent factors `i, i+1` inside a longer tensor.
pub fn braid_at(alg: &Algebra, e: &TensorElement, i: usize) -> Result<TensorElement> {
    e.flat_map(|t| {
        if i + 1 >= t.len() {
            return Err(Error::IndexOutOfRange {
                index: i + 1,
                arity: t.len(),
            });
        }
        let k = alg.word_degree(&t[i]) as i64;
        let moved = alg.act_word(k, &t[i + 1])?;
        Ok(moved
            .iter()
            .map(|(w, c)| {
                let mut key = t.clone();
                key[i] = w.clone();
                key[i + 1] = t[i].clone();
                (key, c.clone())
            })
            .collect())
    })
}

/// Product in the braided tensor square: `(a⊗b)(c⊗d) = a·(t^{deg b}·c) ⊗ b·d`.
pub fn braided_square_multiply(
    alg: &Algebra,
    u: &TensorElement,
    v: &TensorElement,
) -> Result<TensorElement> {
    check_arity(u, 2)?;
    check_arity(v, 2)?;
    let mut out = LinComb::zero();
    for (s, c1) in u.iter() {
        let (a, b) = (&s[0], &s[1]);
        let k = alg.word_degree(b) as i64;
        for (t, c2) in v.iter() {
            let (c, d) = (&t[0], &t[1]);
            let left = alg.left_mul_word(a, &alg.act_word(k, c)?)?;
            let right = alg.multiply_words(b, d)?;
            let coeff = c1 * c2;
            for (l, x) in left.iter() {
                for (r, y) in right.iter() {
                    out.add_term(vec![l.clone(), r.clone()], &coeff * x * y);
                }
            }
        }
    }
    Ok(out)
}

fn primitive(g: u8) -> TensorElement {
    let x = Word::letter(g);
    let mut e = LinComb::zero();
    e.add_term(vec![x.clone(), Word::unit()], one());
    e.add_term(vec![Word::unit(), x], one());
    e
}

/// `a ⊗ b + 2 c ⊗ d`-style display, factors joined by ` ⊗ `.
pub fn format_tensor_element(alg: &Algebra, e: &TensorElement) -> String {
    let pres = alg.presentation();
    crate::algebra::format_terms(e.iter().rev().map(|(t, c)| {
        let mono = t
            .iter()
            .map(|w| pres.format_word(w))
            .collect::<Vec<_>>()
            .join(" ⊗ ");
        let mono = if t.iter().all(|w| w.is_unit()) && t.len() <= 1 { "1".to_string() } else { mono };
        (mono, c)
    }))
}

/// Product of the generator coproducts over the letters of an arbitrary word.
pub fn coproduct_free_word(alg: &Algebra, w: &Word) -> Result<TensorElement> {
    let mut acc = pure(vec![Word::unit(), Word::unit()]);
    for &g in w.letters() {
        acc = braided_square_multiply(alg, &acc, &primitive(g))?;
    }
    Ok(acc)
}

/// Δ on a normal word, memoised; normal words factor as first letter times the rest.
pub fn coproduct_word(alg: &Algebra, w: &Word) -> Result<TensorElement> {
    alg.check_degree(alg.word_degree(w))?;
    if let Some(v) = alg.coproduct_cache.read().unwrap().get(w) {
        return Ok(v.clone());
    }
    let result = match w.letters() {
        [] => pure(vec![Word::unit(), Word::unit()]),
        [g] => primitive(*g),
        [g, rest @ ..] => {
            let tail = coproduct_word(alg, &Word(rest.to_vec()))?;
            braided_square_multiply(alg, &primitive(*g), &tail)?
        }
    };
    alg.coproduct_cache
        .write()
        .unwrap()
        .insert(w.clone(), result.clone());
    Ok(result)
}

pub fn coproduct(alg: &Algebra, e: &AlgebraElement) -> Result<TensorElement> {
    e.flat_map(|w| coproduct_word(alg, w))
}

pub fn counit(alg: &Algebra, e: &AlgebraElement) -> Scalar {
    alg.augment(e)
}

/// Applies ε to factor `i`, lowering the arity by one.
pub fn counit_at(e: &TensorElement, i: usize) -> Result<TensorElement> {
    let mut out = LinComb::zero();
    for (t, c) in e.iter() {
        if i >= t.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                arity: t.len(),
            });
        }
        if t[i].is_unit() {
            let mut key = t.clone();
            key.remove(i);
            out.add_term(key, c.clone());
        }
    }
    Ok(out)
}

/// Multiplies factors `i` and `i+1`.
pub fn multiply_at(alg: &Algebra, e: &TensorElement, i: usize) -> Result<TensorElement> {
    e.flat_map(|t| {
        if i + 1 >= t.len() {
            return Err(Error::IndexOutOfRange {
                index: i + 1,
                arity: t.len(),
            });
        }
        let prod = alg.multiply_words(&t[i], &t[i + 1])?;
        Ok(prod
            .iter()
            .map(|(w, c)| {
                let mut key = t[..i].to_vec();
                key.push(w.clone());
                key.extend(t[i + 2..].iter().cloned());
                (key, c.clone())
            })
            .collect())
    })
}

/// Replaces factor `i` by its coproduct, raising the arity by one.
pub fn coproduct_at(alg: &Algebra, e: &TensorElement, i: usize) -> Result<TensorElement> {
    e.flat_map(|t| {
        if i >= t.len() {
            return Err(Error::IndexOutOfRange {
                index: i,
                arity: t.len(),
            });
        }
        let d = coproduct_word(alg, &t[i])?;
        Ok(d
            .iter()
            .map(|(s, c)| {
                let mut key = t[..i].to_vec();
                key.extend(s.iter().cloned());
                key.extend(t[i + 1..].iter().cloned());
                (key, c.clone())
            })
            .collect())
    })
}

impl Algebra {
    /// Δ(lhs) = Δ(rhs) for every rule, computed in the braided square.
    pub(crate) fn check_coproduct_well_defined(&self) -> Result<()> {
        let probe = self.with_truncation(self.truncation().max(self.presentation().max_rule_degree()))?;
        for rule in self.presentation().rules() {
            let mut diff = coproduct_free_word(&probe, &rule.lhs)?;
            for (w, c) in rule.rhs.iter() {
                diff.add_scaled(&coproduct_free_word(&probe, w)?, &-c.clone());
            }
            if !diff.is_zero() {
                return Err(Error::NotBimonoid(format!(
                    "the coproduct does not vanish on the relation with leading word {}",
                    self.presentation().format_word(&rule.lhs)
                )));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct AxiomFailure {
    pub axiom: &'static str,
    pub witness: String,
}

#[derive(Clone, Debug, Default)]
pub struct BimonoidReport {
    pub max_degree: u32,
    pub checks: usize,
    pub failures: Vec<AxiomFailure>,
}

impl BimonoidReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks coassociativity, the counit laws, multiplicativity of Δ and ε, and
/// t-equivariance of Δ on all basis words of degree at most `max_degree`.
pub fn check_bimonoid_axioms(alg: &Algebra, max_degree: u32) -> Result<BimonoidReport> {
    let mut report = BimonoidReport {
        max_degree,
        ..Default::default()
    };
    let basis: Vec<Word> = alg.basis_up_to(max_degree)?.into_iter().flatten().collect();
    let pres = alg.presentation();
    let fail = |report: &mut BimonoidReport, axiom: &'static str, w: String| {
        report.failures.push(AxiomFailure { axiom, witness: w });
    };
    for a in &basis {
        let name = pres.format_word(a);
        let d = coproduct_word(alg, a)?;
        report.checks += 4;
        if coproduct_at(alg, &d, 0)? != coproduct_at(alg, &d, 1)? {
            fail(&mut report, "coassociativity", name.clone());
        }
        let single: TensorElement = pure(vec![a.clone()]);
        if counit_at(&d, 0)? != single || counit_at(&d, 1)? != single {
            fail(&mut report, "counit", name.clone());
        }
        let ta = alg.act_word(1, a)?;
        let lhs = coproduct(alg, &ta)?;
        let rhs = d.flat_map(|t| act_tensor(alg, 1, t))?;
        if lhs != rhs {
            fail(&mut report, "t-equivariance of the coproduct", name.clone());
        }
        for b in &basis {
            if alg.word_degree(a) + alg.word_degree(b) > max_degree {
                continue;
            }
            report.checks += 2;
            let ab = alg.multiply_words(a, b)?;
            let lhs = coproduct(alg, &ab)?;
            let rhs = braided_square_multiply(alg, &d, &coproduct_word(alg, b)?)?;
            if lhs != rhs {
                fail(
                    &mut report,
                    "multiplicativity of the coproduct",
                    format!("{} * {}", name, pres.format_word(b)),
                );
            }
            if alg.augment(&ab) != alg.augment_word(a) * alg.augment_word(b) {
                fail(
                    &mut report,
                    "multiplicativity of the counit",
                    format!("{} * {}", name, pres.format_word(b)),
                );
            }
        }
    }
    Ok(report)
}

/// A graded vector space with an invertible degree-preserving action of t.
#[derive(Clone, Debug)]
pub struct YdObject {
    pub labels: Vec<String>,
    pub degrees: Vec<i64>,
    /// `t_matrix[j]` lists the image of basis vector `j` as `(index, coefficient)` pairs.
    pub t_columns: Vec<Vec<(usize, Scalar)>>,
}

impl YdObject {
    pub fn new(
        labels: Vec<String>,
        degrees: Vec<i64>,
        t_columns: Vec<Vec<(usize, Scalar)>>,
    ) -> Result<YdObject> {
        let n = labels.len();
        if degrees.len() != n || t_columns.len() != n {
            return Err(Error::Schema("YD object fields have different lengths".into()));
        }
        for (j, col) in t_columns.iter().enumerate() {
            for (i, _) in col {
                if *i >= n {
                    return Err(Error::IndexOutOfRange { index: *i, arity: n });
                }
                if degrees[*i] != degrees[j] {
                    return Err(Error::Degree(format!(
                        "t maps `{}` out of its degree",
                        labels[j]
                    )));
                }
            }
        }
        let m = SparseMatrix::from_columns(n, &t_columns);
        if m.rank() != n {
            return Err(Error::Degree("t action is not invertible".into()));
        }
        Ok(YdObject {
            labels,
            degrees,
            t_columns,
        })
    }

    /// The span of the algebra generators with the t-action read off the presentation.
    pub fn generators_of(alg: &Algebra) -> Result<YdObject> {
        let gens = alg.presentation().generators();
        let labels = gens.iter().map(|g| g.name.clone()).collect();
        let degrees = gens.iter().map(|g| g.degree as i64).collect();
        let mut cols = Vec::new();
        for g in gens {
            let img = alg.presentation().t_image(g.id);
            let mut col = Vec::new();
            for (w, c) in img.iter() {
                if w.len() != 1 {
                    return Err(Error::Degree(format!(
                        "t-image of `{}` leaves the span of the generators",
                        g.name
                    )));
                }
                col.push((w.letters()[0] as usize, c.clone()));
            }
            cols.push(col);
        }
        YdObject::new(labels, degrees, cols)
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Matrix of `t^k` (columns are images of basis vectors).
    pub fn t_power(&self, k: i64) -> Result<SparseMatrix> {
        let t = SparseMatrix::from_columns(self.dim(), &self.t_columns);
        let base = if k >= 0 {
            t
        } else {
            t.inverse()
                .ok_or_else(|| Error::Degree("t action is not invertible".into()))?
        };
        let mut acc = SparseMatrix::identity(self.dim());
        for _ in 0..k.unsigned_abs() {
            acc = base.matmul(&acc);
        }
        Ok(acc)
    }
}
