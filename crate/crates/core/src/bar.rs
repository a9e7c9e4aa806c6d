//! The simplicial object S(A) = A^{⊗•}, the normalized bar resolution, and the
//! Alexander–Whitney maps used to check cocommutativity of deconcatenation.
//!
//! Elements of S(A)×S(A) in degree n are arity-2n tensors in strand order
//! (left strand first). Elements of S(A⊗A) are arity-2n tensors in pair order
//! `a1, b1, a2, b2, …`.

use crate::algebra::{Algebra, Word};
use crate::braided::{
    braid_blocks, braided_square_multiply, check_arity, counit_at, coproduct_word, multiply_at,
    pure, tensor_degree, tensor_of, tensor_product, Tensor, TensorElement,
};
use crate::error::{Error, Result};
use crate::lifting::{BimoduleComplex, FreeBimoduleComplex};
use crate::linear::LinComb;
use crate::scalar::{one, sign};

fn arity_of(e: &TensorElement) -> Option<usize> {
    e.keys().next().map(|t| t.len())
}

/// `∂_i : A^{⊗(n+1)} → A^{⊗n}`.
pub fn face(alg: &Algebra, i: usize, e: &TensorElement) -> Result<TensorElement> {
    let Some(m) = arity_of(e) else {
        return Ok(LinComb::zero());
    };
    check_arity(e, m)?;
    if m == 0 || i > m {
        return Err(Error::IndexOutOfRange { index: i, arity: m });
    }
    if i == 0 {
        counit_at(e, 0)
    } else if i == m {
        counit_at(e, m - 1)
    } else {
        multiply_at(alg, e, i - 1)
    }
}

/// `σ_j : A^{⊗n} → A^{⊗(n+1)}`, inserting the unit in slot `j`.
pub fn degeneracy(j: usize, e: &TensorElement) -> Result<TensorElement> {
    e.flat_map(|t| {
        if j > t.len() {
            return Err(Error::IndexOutOfRange {
                index: j,
                arity: t.len(),
            });
        }
        let mut key = t.clone();
        key.insert(j, Word::unit());
        Ok(pure(key))
    })
}

/// `δ = Σ (-1)^i ∂_i` on an element of arity `n+1`.
pub fn simplicial_differential(alg: &Algebra, e: &TensorElement) -> Result<TensorElement> {
    let Some(m) = arity_of(e) else {
        return Ok(LinComb::zero());
    };
    let mut out = LinComb::zero();
    for i in 0..=m {
        out.add_scaled(&face(alg, i, e)?, &sign(i as i64));
    }
    Ok(out)
}

/// `b'` on `A^{⊗m}`, viewed as B_{m-2}(A); on `A⊗A` this is the augmentation μ.
pub fn bar_differential(alg: &Algebra, e: &TensorElement) -> Result<TensorElement> {
    let Some(m) = arity_of(e) else {
        return Ok(LinComb::zero());
    };
    check_arity(e, m)?;
    if m < 2 {
        return Err(Error::Arity {
            expected: 2,
            found: m,
        });
    }
    let mut out = LinComb::zero();
    for i in 0..m - 1 {
        out.add_scaled(&multiply_at(alg, e, i)?, &sign(i as i64));
    }
    Ok(out)
}

/// The extra degeneracy `s(a0⊗…) = 1⊗a0⊗…`.
pub fn bar_contracting_homotopy(e: &TensorElement) -> TensorElement {
    e.map_keys(|t| {
        let mut key = Vec::with_capacity(t.len() + 1);
        key.push(Word::unit());
        key.extend(t.iter().cloned());
        key
    })
}

/// The right-handed contraction `s'(z) = (-1)^{m-1} z⊗1` for `z` of arity `m`.
pub fn bar_right_contracting_homotopy(e: &TensorElement) -> TensorElement {
    let mut out = LinComb::zero();
    for (t, c) in e.iter() {
        let mut key = t.clone();
        key.push(Word::unit());
        out.add_term(key, c * sign(t.len() as i64 - 1));
    }
    out
}

/// Drops bar tensors with a unit in some middle slot (the normalized bar complex).
pub fn normalize_bar(e: &TensorElement) -> TensorElement {
    e.filter(|t| t.len() < 2 || t[1..t.len() - 1].iter().all(|w| !w.is_unit()))
}

/// A split tensor `(p, u⊗w)` standing for `u ⊗ w ∈ S_p ⊗ S_q`.
pub type SplitElement = LinComb<(usize, Tensor)>;

/// Deconcatenation: the same tensor, tagged with the split point.
pub fn dec(p: usize, q: usize, e: &TensorElement) -> Result<SplitElement> {
    check_arity(e, p + q)?;
    Ok(e.map_keys(|t| (p, t.clone())))
}

/// `AW_{p,q}` on an arity-2(p+q) strand-ordered tensor: keeps the first `p` factors of
/// the left strand and the last `q` of the right strand, applying ε elsewhere.
pub fn aw(p: usize, q: usize, e: &TensorElement) -> Result<TensorElement> {
    let n = p + q;
    check_arity(e, 2 * n)?;
    let mut out = LinComb::zero();
    for (t, c) in e.iter() {
        let (left, right) = t.split_at(n);
        if left[p..].iter().all(|w| w.is_unit()) && right[..p].iter().all(|w| w.is_unit()) {
            let mut key = left[..p].to_vec();
            key.extend(right[p..].iter().cloned());
            out.add_term(key, c.clone());
        }
    }
    Ok(out)
}

/// `AW̄_{p,q} = (-1)^{pq}·(last p of the left strand ⊗ first q of the right strand)`.
pub fn aw_twisted(p: usize, q: usize, e: &TensorElement) -> Result<TensorElement> {
    let n = p + q;
    check_arity(e, 2 * n)?;
    let s = sign((p * q) as i64);
    let mut out = LinComb::zero();
    for (t, c) in e.iter() {
        let (left, right) = t.split_at(n);
        if left[..q].iter().all(|w| w.is_unit()) && right[q..].iter().all(|w| w.is_unit()) {
            let mut key = left[q..].to_vec();
            key.extend(right[..q].iter().cloned());
            out.add_term(key, c * &s);
        }
    }
    Ok(out)
}

/// `S_n(Δ)`: arity n to pair-ordered arity 2n.
pub fn s_delta(alg: &Algebra, e: &TensorElement) -> Result<TensorElement> {
    e.flat_map(|t| {
        let mut acc = pure(Vec::new());
        for w in t {
            acc = tensor_product(&acc, &coproduct_word(alg, w)?);
        }
        Ok(acc)
    })
}

/// `g_n : S_n(A⊗A) → S_n(A)×S_n(A)`, with `g_1 = id` and
/// `g_{n+1} = c_{B^{⊗n},A} ∘ (g_n ⊗ id)`.
pub fn g_map(alg: &Algebra, e: &TensorElement) -> Result<TensorElement> {
    e.flat_map(|t| {
        if t.len() % 2 != 0 {
            return Err(Error::Arity {
                expected: t.len() + 1,
                found: t.len(),
            });
        }
        g_map_pure(alg, t)
    })
}

fn g_map_pure(alg: &Algebra, t: &[Word]) -> Result<TensorElement> {
    let n = t.len() / 2;
    if n <= 1 {
        return Ok(pure(t.to_vec()));
    }
    let prev = g_map_pure(alg, &t[..2 * (n - 1)])?;
    let (a, b) = (&t[2 * n - 2], &t[2 * n - 1]);
    prev.flat_map(|s| {
        // s = a_1..a_{n-1} | b_1..b_{n-1}; braid the b-block past the new a.
        let (left, right) = s.split_at(n - 1);
        let block: Tensor = right.iter().cloned().chain(std::iter::once(a.clone())).collect();
        let braided = braid_blocks(alg, &pure(block), n - 1)?;
        let mut out = LinComb::zero();
        for (bt, c) in braided.iter() {
            let mut key = left.to_vec();
            key.extend(bt.iter().cloned());
            key.push(b.clone());
            out.add_term(key, c.clone());
        }
        Ok(out)
    })
}

/// Face `∂_i` of S(A⊗A), multiplying in the braided tensor square.
pub fn face_pairs(alg: &Algebra, i: usize, e: &TensorElement) -> Result<TensorElement> {
    e.flat_map(|t| {
        let m = t.len() / 2;
        if i > m || m == 0 {
            return Err(Error::IndexOutOfRange { index: i, arity: m });
        }
        let pair = |k: usize| pure(vec![t[2 * k].clone(), t[2 * k + 1].clone()]);
        let before = |k: usize| pure(t[..2 * k].to_vec());
        let after = |k: usize| pure(t[2 * k..].to_vec());
        if i == 0 || i == m {
            let k = if i == 0 { 0 } else { m - 1 };
            if t[2 * k].is_unit() && t[2 * k + 1].is_unit() {
                let mut key = t[..2 * k].to_vec();
                key.extend(t[2 * k + 2..].iter().cloned());
                Ok(pure(key))
            } else {
                Ok(LinComb::zero())
            }
        } else {
            let prod = braided_square_multiply(alg, &pair(i - 1), &pair(i))?;
            Ok(tensor_product(&tensor_product(&before(i - 1), &prod), &after(i + 1)))
        }
    })
}

/// Degeneracy `σ_j` of S(A⊗A): inserts `1⊗1` as pair `j`.
pub fn degeneracy_pairs(j: usize, e: &TensorElement) -> Result<TensorElement> {
    let once = degeneracy(2 * j, e)?;
    degeneracy(2 * j, &once)
}

fn on_strands<F>(e: &TensorElement, f: F) -> Result<TensorElement>
where
    F: Fn(&TensorElement) -> Result<TensorElement>,
{
    e.flat_map(|t| {
        let n = t.len() / 2;
        let left = f(&pure(t[..n].to_vec()))?;
        let right = f(&pure(t[n..].to_vec()))?;
        Ok(tensor_product(&left, &right))
    })
}

/// Face of the product S(A)×S(A): `∂_i` on both strands.
pub fn face_strands(alg: &Algebra, i: usize, e: &TensorElement) -> Result<TensorElement> {
    on_strands(e, |x| face(alg, i, x))
}

pub fn degeneracy_strands(j: usize, e: &TensorElement) -> Result<TensorElement> {
    on_strands(e, |x| degeneracy(j, x))
}

/// Differential of S(A)×S(A): `Σ (-1)^i ∂_i×∂_i`.
pub fn product_differential(alg: &Algebra, e: &TensorElement) -> Result<TensorElement> {
    let Some(m) = arity_of(e) else {
        return Ok(LinComb::zero());
    };
    let n = m / 2;
    let mut out = LinComb::zero();
    for i in 0..=n {
        out.add_scaled(&face_strands(alg, i, e)?, &sign(i as i64));
    }
    Ok(out)
}

/// Differential of the total complex of S(A)⊗S(A): `δ⊗id + (-1)^p id⊗δ`.
pub fn tensor_differential(alg: &Algebra, e: &SplitElement) -> Result<SplitElement> {
    let mut out = LinComb::zero();
    for ((p, t), c) in e.iter() {
        let (u, w) = t.split_at(*p);
        if *p > 0 {
            let du = simplicial_differential(alg, &pure(u.to_vec()))?;
            for (x, d) in tensor_product(&du, &pure(w.to_vec())).iter() {
                out.add_term((p - 1, x.clone()), c * d);
            }
        }
        if !w.is_empty() {
            let dw = simplicial_differential(alg, &pure(w.to_vec()))?;
            let s = sign(*p as i64);
            for (x, d) in tensor_product(&pure(u.to_vec()), &dw).iter() {
                out.add_term((*p, x.clone()), c * d * &s);
            }
        }
    }
    Ok(out)
}

/// `⊕_{p+q=n} AW_{p,q}` (or the twisted version) into the total complex.
pub fn aw_total(e: &TensorElement, twisted: bool) -> Result<SplitElement> {
    let Some(m) = arity_of(e) else {
        return Ok(LinComb::zero());
    };
    let n = m / 2;
    let mut out = LinComb::zero();
    for p in 0..=n {
        let part = if twisted {
            aw_twisted(p, n - p, e)?
        } else {
            aw(p, n - p, e)?
        };
        for (t, c) in part.iter() {
            out.add_term((p, t.clone()), c.clone());
        }
    }
    Ok(out)
}

/// All tensors of basis words with the given arity and total internal degree `ideg`.
/// With `positive` every factor has positive degree.
pub fn basis_tensors(alg: &Algebra, arity: usize, ideg: u32, positive: bool) -> Result<Vec<Tensor>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(arity);
    fill(alg, arity, ideg, positive, &mut current, &mut out)?;
    Ok(out)
}

fn fill(
    alg: &Algebra,
    arity: usize,
    remaining: u32,
    positive: bool,
    current: &mut Vec<Word>,
    out: &mut Vec<Tensor>,
) -> Result<()> {
    if current.len() == arity {
        if remaining == 0 {
            out.push(current.clone());
        }
        return Ok(());
    }
    let slots_left = (arity - current.len()) as u32;
    let lo = if positive { 1 } else { 0 };
    if positive && remaining < slots_left {
        return Ok(());
    }
    let hi = if positive {
        remaining - (slots_left - 1)
    } else {
        remaining
    };
    for d in lo..=hi {
        for w in alg.graded_basis(d)? {
            current.push(w);
            fill(alg, arity, remaining - d, positive, current, out)?;
            current.pop();
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct DecWitness {
    pub p: usize,
    pub q: usize,
    pub identity: &'static str,
    pub tensor: String,
}

#[derive(Clone, Debug)]
pub struct DecReport {
    pub p: usize,
    pub q: usize,
    pub max_degree: u32,
    pub tensors_checked: usize,
    pub failures: Vec<DecWitness>,
}

impl DecReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn format_tensor(alg: &Algebra, t: &[Word]) -> String {
    if t.is_empty() {
        return "()".into();
    }
    t.iter()
        .map(|w| alg.presentation().format_word(w))
        .collect::<Vec<_>>()
        .join(" ⊗ ")
}

/// Checks `AW∘g∘S(Δ) = id` and `AW̄∘g∘S(Δ) = (-1)^{pq} c_{A^{⊗q},A^{⊗p}}` on every basis
/// tensor of arity p+q and internal degree ≤ `max_degree`, for every split in `splits`.
pub fn verify_dec_splits(
    alg: &Algebra,
    n: usize,
    splits: &[(usize, usize)],
    max_degree: u32,
) -> Result<Vec<DecReport>> {
    let mut reports: Vec<DecReport> = splits
        .iter()
        .map(|&(p, q)| DecReport {
            p,
            q,
            max_degree,
            tensors_checked: 0,
            failures: Vec::new(),
        })
        .collect();
    for &(p, q) in splits {
        if p + q != n {
            return Err(Error::Arity {
                expected: n,
                found: p + q,
            });
        }
    }
    for e in 0..=max_degree {
        for t in basis_tensors(alg, n, e, false)? {
            let x = pure(t.clone());
            let image = g_map(alg, &s_delta(alg, &x)?)?;
            for r in reports.iter_mut() {
                let (p, q) = (r.p, r.q);
                r.tensors_checked += 1;
                if aw(p, q, &image)? != x {
                    r.failures.push(DecWitness {
                        p,
                        q,
                        identity: "AW∘g∘S(Δ) = id",
                        tensor: format_tensor(alg, &t),
                    });
                }
                let expected = braid_blocks(alg, &x, q)?.scaled(&sign((p * q) as i64));
                if aw_twisted(p, q, &image)? != expected {
                    r.failures.push(DecWitness {
                        p,
                        q,
                        identity: "AW̄∘g∘S(Δ) = (-1)^{pq} c",
                        tensor: format_tensor(alg, &t),
                    });
                }
            }
        }
    }
    Ok(reports)
}

pub fn verify_dec_cocommutativity(
    alg: &Algebra,
    p: usize,
    q: usize,
    max_degree: u32,
) -> Result<DecReport> {
    Ok(verify_dec_splits(alg, p + q, &[(p, q)], max_degree)?.remove(0))
}

/// The normalized bar resolution `B̄_n = A ⊗ A_+^{⊗n} ⊗ A`. Keys are arity-(n+2) tensors.
#[derive(Clone, Copy, Debug)]
pub struct BarComplex<'a> {
    alg: &'a Algebra,
}

impl<'a> BarComplex<'a> {
    pub fn new(alg: &'a Algebra) -> BarComplex<'a> {
        BarComplex { alg }
    }

    /// `s` followed by normalization.
    pub fn contracting_homotopy(&self, e: &TensorElement) -> TensorElement {
        normalize_bar(&bar_contracting_homotopy(e))
    }

    /// `s'` followed by normalization.
    pub fn right_contracting_homotopy(&self, e: &TensorElement) -> TensorElement {
        normalize_bar(&bar_right_contracting_homotopy(e))
    }
}

impl BimoduleComplex for BarComplex<'_> {
    type Key = Tensor;

    fn algebra(&self) -> &Algebra {
        self.alg
    }

    fn basis(&self, hdeg: usize, ideg: u32) -> Result<Vec<Tensor>> {
        let mut out = Vec::new();
        for outer in 0..=ideg {
            for mid in basis_tensors(self.alg, hdeg, ideg - outer, true)? {
                for d0 in 0..=outer {
                    for a in self.alg.graded_basis(d0)? {
                        for b in self.alg.graded_basis(outer - d0)? {
                            let mut key = vec![a.clone()];
                            key.extend(mid.iter().cloned());
                            key.push(b);
                            out.push(key);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn hdeg(&self, key: &Tensor) -> usize {
        key.len() - 2
    }

    fn ideg(&self, key: &Tensor) -> u32 {
        tensor_degree(self.alg, key)
    }

    fn act(&self, left: &Word, key: &Tensor, right: &Word) -> Result<TensorElement> {
        let n = key.len();
        let a = self.alg.multiply_words(left, &key[0])?;
        let b = self.alg.multiply_words(&key[n - 1], right)?;
        let mut factors = vec![a];
        factors.extend(key[1..n - 1].iter().map(|w| LinComb::basis(w.clone())));
        factors.push(b);
        Ok(tensor_of(&factors))
    }

    fn twist(&self, k: i64, key: &Tensor) -> Result<TensorElement> {
        crate::braided::act_tensor(self.alg, k, key)
    }

    fn differential(&self, key: &Tensor) -> Result<TensorElement> {
        if key.len() <= 2 {
            return Ok(LinComb::zero());
        }
        Ok(normalize_bar(&bar_differential(self.alg, &pure(key.clone()))?))
    }
}

impl FreeBimoduleComplex for BarComplex<'_> {
    type Gen = Tensor;

    fn generators(&self, hdeg: usize, ideg: u32) -> Result<Vec<Tensor>> {
        basis_tensors(self.alg, hdeg, ideg, true)
    }

    fn gen_key(&self, gen: &Tensor) -> Tensor {
        let mut key = vec![Word::unit()];
        key.extend(gen.iter().cloned());
        key.push(Word::unit());
        key
    }

    fn split(&self, key: &Tensor) -> (Word, Tensor, Word) {
        let n = key.len();
        (key[0].clone(), key[1..n - 1].to_vec(), key[n - 1].clone())
    }

    fn gen_hdeg(&self, gen: &Tensor) -> usize {
        gen.len()
    }

    fn gen_ideg(&self, gen: &Tensor) -> u32 {
        tensor_degree(self.alg, gen)
    }

    fn within_window(&self, _max_hdeg: usize, _max_ideg: u32) -> bool {
        false
    }
}

/// The augmentation `B̄_0 = A⊗A → A`.
pub fn bar_augmentation(alg: &Algebra, e: &TensorElement) -> Result<TensorElement> {
    check_arity(e, 2)?;
    multiply_at(alg, e, 0)
}

/// `ε ⊗ … ⊗ ε`-collapse to a scalar.
pub fn full_counit(e: &TensorElement) -> crate::scalar::Scalar {
    e.iter()
        .filter(|(t, _)| t.iter().all(|w| w.is_unit()))
        .fold(crate::scalar::zero(), |acc, (_, c)| acc + c)
}

/// The unit tensor `1⊗…⊗1` of arity `n`.
pub fn unit_tensor(n: usize) -> TensorElement {
    LinComb::single(vec![Word::unit(); n], one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn t(alg: &Algebra, words: &[&str]) -> TensorElement {
        pure(words.iter().map(|w| alg.parse_word(w).unwrap()).collect())
    }

    #[test]
    fn faces_of_x_tensor_y() {
        let a = Algebra::jordan(6);
        let e = t(&a, &["x", "y"]);
        assert!(face(&a, 0, &e).unwrap().is_zero());
        assert_eq!(face(&a, 1, &e).unwrap(), t(&a, &["xy"]));
        assert!(face(&a, 2, &e).unwrap().is_zero());
        assert!(face(&a, 3, &e).is_err());
    }

    #[test]
    fn degeneracies() {
        let a = Algebra::jordan(6);
        let x = t(&a, &["x"]);
        assert_eq!(degeneracy(0, &x).unwrap(), t(&a, &["1", "x"]));
        assert_eq!(degeneracy(1, &x).unwrap(), t(&a, &["x", "1"]));
        assert!(degeneracy(0, &LinComb::zero()).unwrap().is_zero());
    }

    #[test]
    fn simplicial_differential_examples() {
        let a = Algebra::jordan(6);
        assert!(simplicial_differential(&a, &t(&a, &["x"])).unwrap().is_zero());
        assert_eq!(
            simplicial_differential(&a, &t(&a, &["x", "y"])).unwrap(),
            t(&a, &["xy"]).neg()
        );
    }

    #[test]
    fn bar_differential_examples() {
        let a = Algebra::jordan(6);
        let d0 = bar_differential(&a, &t(&a, &["1", "x", "1"])).unwrap();
        assert_eq!(d0, t(&a, &["x", "1"]).minus(&t(&a, &["1", "x"])));
        let d1 = bar_differential(&a, &t(&a, &["1", "x", "y", "1"])).unwrap();
        let expected = t(&a, &["x", "y", "1"])
            .minus(&t(&a, &["1", "xy", "1"]))
            .plus(&t(&a, &["1", "x", "y"]));
        assert_eq!(d1, expected);
        assert!(bar_differential(&a, &LinComb::zero()).unwrap().is_zero());
    }

    #[test]
    fn contracting_homotopy_identity() {
        let a = Algebra::super_jordan(8);
        for e in [
            t(&a, &["x", "1"]),
            t(&a, &["xy", "y", "x"]),
            t(&a, &["y", "yx", "y", "1"]),
        ] {
            let lhs = bar_differential(&a, &bar_contracting_homotopy(&e))
                .unwrap()
                .plus(&bar_contracting_homotopy(&bar_differential(&a, &e).unwrap()));
            assert_eq!(lhs, e);
        }
        assert_eq!(bar_contracting_homotopy(&t(&a, &["x", "1"])), t(&a, &["1", "x", "1"]));
    }

    #[test]
    fn right_contracting_homotopy_identity() {
        let a = Algebra::super_jordan(8);
        for e in [
            t(&a, &["x", "y"]),
            t(&a, &["xy", "y", "x"]),
            t(&a, &["y", "yx", "y", "1"]),
        ] {
            let s = bar_right_contracting_homotopy;
            let lhs = bar_differential(&a, &s(&e))
                .unwrap()
                .plus(&s(&bar_differential(&a, &e).unwrap()));
            assert_eq!(lhs, e);
        }
    }

    #[test]
    fn dec_relabels() {
        let a = Algebra::jordan(4);
        let e = t(&a, &["x", "y"]);
        let d = dec(1, 1, &e).unwrap();
        assert_eq!(d.coeff(&(1, vec![a.parse_word("x").unwrap(), a.parse_word("y").unwrap()])), int(1));
        assert!(dec(1, 1, &LinComb::zero()).unwrap().is_zero());
    }

    #[test]
    fn aw_examples() {
        let a = Algebra::jordan(4);
        let e = t(&a, &["x", "1", "1", "y"]);
        assert_eq!(aw(1, 1, &e).unwrap(), t(&a, &["x", "y"]));
        assert!(aw(1, 1, &t(&a, &["x", "y", "1", "y"])).unwrap().is_zero());
        assert_eq!(aw(0, 0, &unit_tensor(0)).unwrap(), unit_tensor(0));
    }

    #[test]
    fn g_map_unfolds() {
        let a = Algebra::jordan(6);
        // g2((a⊗b)⊗(c⊗d)) = a ⊗ t^{|b|}c ⊗ b ⊗ d
        let e = t(&a, &["x", "y", "y", "x"]);
        let expected = t(&a, &["x", "x", "y", "x"]).plus(&t(&a, &["x", "y", "y", "x"]));
        assert_eq!(g_map(&a, &e).unwrap(), expected);
        let one_pair = t(&a, &["xy", "y"]);
        assert_eq!(g_map(&a, &one_pair).unwrap(), one_pair);
        assert!(g_map(&a, &LinComb::zero()).unwrap().is_zero());
    }

    #[test]
    fn dec_identities_small() {
        let a = Algebra::jordan(4);
        assert!(verify_dec_cocommutativity(&a, 1, 1, 4).unwrap().passed());
        assert!(verify_dec_cocommutativity(&a, 0, 2, 3).unwrap().passed());
        let s = Algebra::super_jordan(4);
        assert!(verify_dec_cocommutativity(&s, 2, 1, 3).unwrap().passed());
    }

    #[test]
    fn twisted_aw_two_one_example() {
        // For p=2, q=1 the twisted map equals c_{A, A⊗A} with sign +1.
        let s = Algebra::super_jordan(6);
        let e = t(&s, &["y", "x", "y"]);
        let image = g_map(&s, &s_delta(&s, &e).unwrap()).unwrap();
        let lhs = aw_twisted(2, 1, &image).unwrap();
        let tx = s.act(1, &s.generator(0)).unwrap();
        let ty = s.act(1, &s.generator(1)).unwrap();
        let expected = tensor_of(&[tx, ty, s.generator(1)]);
        assert_eq!(lhs, expected);
    }

    #[test]
    fn bar_basis_counts() {
        let a = Algebra::jordan(6);
        let b = BarComplex::new(&a);
        // B̄_0 in degree 1: x⊗1, y⊗1, 1⊗x, 1⊗y.
        assert_eq!(b.basis(0, 1).unwrap().len(), 4);
        // B̄_1 in degree 1: 1⊗x⊗1, 1⊗y⊗1.
        assert_eq!(b.basis(1, 1).unwrap().len(), 2);
        assert_eq!(b.generators(2, 2).unwrap().len(), 4);
    }
}
