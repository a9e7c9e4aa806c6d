//! The two monoidal products on graded A-bimodules with t-action and the coduoid
//! structure on a free resolution.
//!
//! `M ⊙ N` is `M ⊗ N` over k with actions through the coproduct and the braiding:
//! `a·(m⊗n) = a₁·(t^{|a₂|}m) ⊗ a₂·n` and `(m⊗n)·a = m·(t^{|n|}a₁) ⊗ n·a₂`.
//! `M ⊗_A N` is the balanced tensor product. For a resolution `P` of `A` the maps
//! `ω: P → P ⊗_A P` and `δ: P → P ⊙ P` are lifts of `A ≅ A ⊗_A A` and `Δ`.

use crate::algebra::{Algebra, Word};
use crate::braided::coproduct_word;
use crate::error::{Error, Result};
use crate::lifting::{
    act_element, apply_on_generators, differential_element, find_homotopy, twist_element,
    BimoduleComplex, FreeBimoduleComplex, HomotopyOutcome, Lift, LiftStrategy,
};
use crate::linear::LinComb;
use crate::resolution::{pkey, FreeBimoduleResolution, GenId, PElement, PKey};
use crate::scalar::{one, sign, Scalar};

/// Sign of moving a degree-`k` map past a degree-`n` element.
pub fn interchange_graded_sign(n: usize, k: usize) -> i64 {
    if n * k % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn pair_product<A: Ord + Clone, B: Ord + Clone>(x: &LinComb<A>, y: &LinComb<B>) -> LinComb<(A, B)> {
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_term((a.clone(), b.clone()), ca * cb);
        }
    }
    out
}

fn split_degrees(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for d in 0..=total {
        for mut rest in split_degrees(total - d, parts - 1) {
            rest.insert(0, d);
            out.push(rest);
        }
    }
    out
}

fn words_of_degrees(alg: &Algebra, degrees: &[u32]) -> Result<Vec<Vec<Word>>> {
    let mut out = vec![Vec::new()];
    for &d in degrees {
        let basis = alg.graded_basis(d)?;
        let mut next = Vec::new();
        for prefix in &out {
            for w in &basis {
                let mut v: Vec<Word> = prefix.clone();
                v.push(w.clone());
                next.push(v);
            }
        }
        out = next;
    }
    Ok(out)
}

/// `M ⊙ N`.
pub struct Odot<'a, M, N> {
    pub left: &'a M,
    pub right: &'a N,
}

impl<'a, M: BimoduleComplex, N: BimoduleComplex> Odot<'a, M, N> {
    pub fn new(left: &'a M, right: &'a N) -> Self {
        Odot { left, right }
    }

    pub fn pair(&self, x: &LinComb<M::Key>, y: &LinComb<N::Key>) -> LinComb<(M::Key, N::Key)> {
        pair_product(x, y)
    }
}

impl<M: BimoduleComplex, N: BimoduleComplex> BimoduleComplex for Odot<'_, M, N> {
    type Key = (M::Key, N::Key);

    fn algebra(&self) -> &Algebra {
        self.left.algebra()
    }

    fn basis(&self, hdeg: usize, ideg: u32) -> Result<Vec<Self::Key>> {
        let mut out = Vec::new();
        for n1 in 0..=hdeg {
            for e1 in 0..=ideg {
                let a = self.left.basis(n1, e1)?;
                if a.is_empty() {
                    continue;
                }
                let b = self.right.basis(hdeg - n1, ideg - e1)?;
                for x in &a {
                    for y in &b {
                        out.push((x.clone(), y.clone()));
                    }
                }
            }
        }
        Ok(out)
    }

    fn hdeg(&self, key: &Self::Key) -> usize {
        self.left.hdeg(&key.0) + self.right.hdeg(&key.1)
    }

    fn ideg(&self, key: &Self::Key) -> u32 {
        self.left.ideg(&key.0) + self.right.ideg(&key.1)
    }

    fn act(&self, u: &Word, key: &Self::Key, v: &Word) -> Result<LinComb<Self::Key>> {
        let alg = self.algebra();
        let unit = Word::unit();
        let (m, n) = key;
        let mut left_done = LinComb::zero();
        for (t, c) in coproduct_word(alg, u)?.iter() {
            let moved = self.left.twist(alg.word_degree(&t[1]) as i64, m)?;
            let x = act_element(self.left, &t[0], &moved, &unit)?;
            let y = self.right.act(&t[1], n, &unit)?;
            left_done.add_scaled(&pair_product(&x, &y), c);
        }
        if v.is_unit() {
            return Ok(left_done);
        }
        let dv = coproduct_word(alg, v)?;
        let mut out = LinComb::zero();
        for ((m2, n2), c0) in left_done.iter() {
            for (t, c) in dv.iter() {
                let moved = alg.act_word(self.right.ideg(n2) as i64, &t[0])?;
                let x = moved.flat_map(|w| self.left.act(&unit, m2, w))?;
                let y = self.right.act(&unit, n2, &t[1])?;
                out.add_scaled(&pair_product(&x, &y), &(c0 * c));
            }
        }
        Ok(out)
    }

    fn twist(&self, k: i64, key: &Self::Key) -> Result<LinComb<Self::Key>> {
        Ok(pair_product(
            &self.left.twist(k, &key.0)?,
            &self.right.twist(k, &key.1)?,
        ))
    }

    fn differential(&self, key: &Self::Key) -> Result<LinComb<Self::Key>> {
        let (m, n) = key;
        let mut out = pair_product(&self.left.differential(m)?, &LinComb::basis(n.clone()));
        let s = sign(self.left.hdeg(m) as i64);
        out.add_scaled(
            &pair_product(&LinComb::basis(m.clone()), &self.right.differential(n)?),
            &s,
        );
        Ok(out)
    }
}

/// `left ⊗ g ⊗ mid ⊗ h ⊗ right`, a basis element of `M ⊗_A N` for free `M`, `N`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TaKey<G, H> {
    pub left: Word,
    pub g: G,
    pub mid: Word,
    pub h: H,
    pub right: Word,
}

/// `M ⊗_A N` for complexes of free bimodules.
pub struct TensorOverA<'a, M, N> {
    pub left: &'a M,
    pub right: &'a N,
}

impl<'a, M: FreeBimoduleComplex, N: FreeBimoduleComplex> TensorOverA<'a, M, N> {
    pub fn new(left: &'a M, right: &'a N) -> Self {
        TensorOverA { left, right }
    }

    /// The projection `M ⊗ N → M ⊗_A N` on basis elements.
    pub fn pi(&self, m: &M::Key, n: &N::Key) -> Result<LinComb<TaKey<M::Gen, N::Gen>>> {
        let (a, g, b) = self.left.split(m);
        let (c, h, d) = self.right.split(n);
        let mid = self.left.algebra().multiply_words(&b, &c)?;
        Ok(mid
            .iter()
            .map(|(w, coeff)| {
                (
                    TaKey {
                        left: a.clone(),
                        g: g.clone(),
                        mid: w.clone(),
                        h: h.clone(),
                        right: d.clone(),
                    },
                    coeff.clone(),
                )
            })
            .collect())
    }

    pub fn pi_elements(
        &self,
        x: &LinComb<M::Key>,
        y: &LinComb<N::Key>,
    ) -> Result<LinComb<TaKey<M::Gen, N::Gen>>> {
        let mut out = LinComb::zero();
        for (m, cm) in x.iter() {
            for (n, cn) in y.iter() {
                out.add_scaled(&self.pi(m, n)?, &(cm * cn));
            }
        }
        Ok(out)
    }

    /// A representative `(a·g·mid) ⊗ (h·right)`.
    pub fn halves(&self, k: &TaKey<M::Gen, N::Gen>) -> Result<(LinComb<M::Key>, LinComb<N::Key>)> {
        let unit = Word::unit();
        Ok((
            self.left.act(&k.left, &self.left.gen_key(&k.g), &k.mid)?,
            self.right.act(&unit, &self.right.gen_key(&k.h), &k.right)?,
        ))
    }
}

impl<M: FreeBimoduleComplex, N: FreeBimoduleComplex> BimoduleComplex for TensorOverA<'_, M, N> {
    type Key = TaKey<M::Gen, N::Gen>;

    fn algebra(&self) -> &Algebra {
        self.left.algebra()
    }

    fn basis(&self, hdeg: usize, ideg: u32) -> Result<Vec<Self::Key>> {
        let alg = self.algebra();
        let mut out = Vec::new();
        for n1 in 0..=hdeg {
            for eg in 0..=ideg {
                let gs = self.left.generators(n1, eg)?;
                if gs.is_empty() {
                    continue;
                }
                for eh in 0..=ideg - eg {
                    let hs = self.right.generators(hdeg - n1, eh)?;
                    if hs.is_empty() {
                        continue;
                    }
                    for degrees in split_degrees(ideg - eg - eh, 3) {
                        for words in words_of_degrees(alg, &degrees)? {
                            for g in &gs {
                                for h in &hs {
                                    out.push(TaKey {
                                        left: words[0].clone(),
                                        g: g.clone(),
                                        mid: words[1].clone(),
                                        h: h.clone(),
                                        right: words[2].clone(),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    fn hdeg(&self, key: &Self::Key) -> usize {
        self.left.gen_hdeg(&key.g) + self.right.gen_hdeg(&key.h)
    }

    fn ideg(&self, key: &Self::Key) -> u32 {
        let alg = self.algebra();
        alg.word_degree(&key.left)
            + self.left.gen_ideg(&key.g)
            + alg.word_degree(&key.mid)
            + self.right.gen_ideg(&key.h)
            + alg.word_degree(&key.right)
    }

    fn act(&self, u: &Word, key: &Self::Key, v: &Word) -> Result<LinComb<Self::Key>> {
        let (x, y) = self.halves(key)?;
        let unit = Word::unit();
        self.pi_elements(
            &act_element(self.left, u, &x, &unit)?,
            &act_element(self.right, &unit, &y, v)?,
        )
    }

    fn twist(&self, k: i64, key: &Self::Key) -> Result<LinComb<Self::Key>> {
        let (x, y) = self.halves(key)?;
        self.pi_elements(
            &twist_element(self.left, k, &x)?,
            &twist_element(self.right, k, &y)?,
        )
    }

    fn differential(&self, key: &Self::Key) -> Result<LinComb<Self::Key>> {
        let (x, y) = self.halves(key)?;
        let mut out = self.pi_elements(&differential_element(self.left, &x)?, &y)?;
        let s = sign(self.left.gen_hdeg(&key.g) as i64);
        out.add_scaled(
            &self.pi_elements(&x, &differential_element(self.right, &y)?)?,
            &s,
        );
        Ok(out)
    }
}

/// A itself as a complex concentrated in homological degree 0.
pub struct RegularBimodule<'a> {
    pub alg: &'a Algebra,
}

impl BimoduleComplex for RegularBimodule<'_> {
    type Key = Word;

    fn algebra(&self) -> &Algebra {
        self.alg
    }

    fn basis(&self, hdeg: usize, ideg: u32) -> Result<Vec<Word>> {
        if hdeg > 0 {
            return Ok(Vec::new());
        }
        self.alg.graded_basis(ideg)
    }

    fn hdeg(&self, _: &Word) -> usize {
        0
    }

    fn ideg(&self, key: &Word) -> u32 {
        self.alg.word_degree(key)
    }

    fn act(&self, left: &Word, key: &Word, right: &Word) -> Result<LinComb<Word>> {
        let a = self.alg.multiply_words(left, key)?;
        a.flat_map(|w| self.alg.multiply_words(w, right))
    }

    fn twist(&self, k: i64, key: &Word) -> Result<LinComb<Word>> {
        self.alg.act_word(k, key)
    }

    fn differential(&self, _: &Word) -> Result<LinComb<Word>> {
        Ok(LinComb::zero())
    }
}

/// Dimension of `(M_{h1} ⊗ N_{h2})_e` modulo the span of `m·a ⊗ n − m ⊗ a·n` over
/// basis elements and generators `a` of A.
pub fn balanced_quotient_dim<M: BimoduleComplex, N: BimoduleComplex>(
    m: &M,
    n: &N,
    h1: usize,
    h2: usize,
    ideg: u32,
) -> Result<usize> {
    let alg = m.algebra();
    let mut total = 0;
    let mut ech = crate::linalg::Echelon::new();
    let mut index: std::collections::HashMap<(M::Key, N::Key), usize> = Default::default();
    let mut slot = |k: (M::Key, N::Key)| -> usize {
        let len = index.len();
        *index.entry(k).or_insert(len)
    };
    for e1 in 0..=ideg {
        let left = m.basis(h1, e1)?;
        let right = n.basis(h2, ideg - e1)?;
        total += left.len() * right.len();
        for x in &left {
            for y in &right {
                slot((x.clone(), y.clone()));
            }
        }
    }
    let unit = Word::unit();
    for e1 in 0..ideg {
        for x in m.basis(h1, e1)? {
            for g in 0..alg.num_generators() {
                let a = Word::letter(g as u8);
                let da = alg.word_degree(&a);
                if e1 + da > ideg {
                    continue;
                }
                for y in n.basis(h2, ideg - e1 - da)? {
                    let lhs = pair_product(&m.act(&unit, &x, &a)?, &LinComb::basis(y.clone()));
                    let rhs = pair_product(&LinComb::basis(x.clone()), &n.act(&a, &y, &unit)?);
                    let rel = lhs.minus(&rhs);
                    let v: crate::linalg::SparseVec =
                        rel.iter().map(|(k, c)| (slot(k.clone()), c.clone())).collect();
                    ech.insert(&v);
                }
            }
        }
    }
    Ok(total - ech.rank())
}

pub type PTensorKey = TaKey<GenId, GenId>;
pub type POdotKey = (PKey, PKey);
/// A basis element of `(P ⊗_A P) ⊙ (P ⊗_A P)`.
pub type InterchangeKey = (PTensorKey, PTensorKey);

/// `ζ((m₁⊗n₁) ⊗_A (m₂⊗n₂)) = (-1)^{|n₁||m₂|} (m₁ ⊗_A t^{|n₁|}m₂) ⊙ (n₁ ⊗_A n₂)`,
/// with homological degrees in the sign and the internal degree in the twist.
pub fn zeta(
    res: &FreeBimoduleResolution,
    x: &POdotKey,
    y: &POdotKey,
) -> Result<LinComb<InterchangeKey>> {
    let ta = TensorOverA::new(res, res);
    let (m1, n1) = x;
    let (m2, n2) = y;
    let s = sign((n1.gen.hdeg * m2.gen.hdeg) as i64);
    let moved = res.twist(res.ideg(n1) as i64, m2)?;
    let first = ta.pi_elements(&LinComb::basis(m1.clone()), &moved)?;
    let second = ta.pi(n1, n2)?;
    Ok(pair_product(&first, &second).scaled(&s))
}

/// Bilinear extension of [`zeta`] to `(P⊙P) ⊗ (P⊙P)`.
pub fn zeta_elements(
    res: &FreeBimoduleResolution,
    x: &LinComb<POdotKey>,
    y: &LinComb<POdotKey>,
) -> Result<LinComb<InterchangeKey>> {
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&zeta(res, a, b)?, &(ca * cb));
        }
    }
    Ok(out)
}

fn p0() -> GenId {
    GenId { hdeg: 0, index: 0 }
}

fn unit_pkey() -> PKey {
    pkey(Word::unit(), p0(), Word::unit())
}

/// The two comultiplications of a resolution, as lifts.
pub struct Comultiplications<'a> {
    pub res: &'a FreeBimoduleResolution,
    pub odot: &'a Odot<'a, FreeBimoduleResolution, FreeBimoduleResolution>,
    pub tensor: &'a TensorOverA<'a, FreeBimoduleResolution, FreeBimoduleResolution>,
    pub omega: Lift<'a, FreeBimoduleResolution, TensorOverA<'a, FreeBimoduleResolution, FreeBimoduleResolution>>,
    pub delta: Lift<'a, FreeBimoduleResolution, Odot<'a, FreeBimoduleResolution, FreeBimoduleResolution>>,
}

impl<'a> Comultiplications<'a> {
    pub fn new(
        res: &'a FreeBimoduleResolution,
        odot: &'a Odot<'a, FreeBimoduleResolution, FreeBimoduleResolution>,
        tensor: &'a TensorOverA<'a, FreeBimoduleResolution, FreeBimoduleResolution>,
        strategy: LiftStrategy,
        max_ideg: u32,
    ) -> Self {
        let omega = Lift::new(
            res,
            tensor,
            |_: &GenId| {
                Ok(LinComb::basis(TaKey {
                    left: Word::unit(),
                    g: p0(),
                    mid: Word::unit(),
                    h: p0(),
                    right: Word::unit(),
                }))
            },
            strategy,
        )
        .equivariant(max_ideg);
        let delta = Lift::new(
            res,
            odot,
            |_: &GenId| Ok(LinComb::basis((unit_pkey(), unit_pkey()))),
            strategy,
        )
        .equivariant(max_ideg);
        Comultiplications {
            res,
            odot,
            tensor,
            omega,
            delta,
        }
    }

    pub fn omega_element(&self, e: &PElement) -> Result<LinComb<PTensorKey>> {
        apply_on_generators(self.res, self.tensor, e, |g| self.omega.value(g))
    }

    pub fn delta_element(&self, e: &PElement) -> Result<LinComb<POdotKey>> {
        apply_on_generators(self.res, self.odot, e, |g| self.delta.value(g))
    }

    /// `ζ ∘ (δ ⊗_A δ) ∘ ω` on a generator.
    pub fn zeta_route(&self, gen: &GenId) -> Result<LinComb<InterchangeKey>> {
        let mut out = LinComb::zero();
        for (k, c) in self.omega.value(gen)?.iter() {
            let (x, y) = self.tensor.halves(k)?;
            let dx = self.delta_element(&x)?;
            let dy = self.delta_element(&y)?;
            out.add_scaled(&zeta_elements(self.res, &dx, &dy)?, c);
        }
        Ok(out)
    }

    /// `(ω ⊙ ω) ∘ δ` on a generator.
    pub fn odot_route(&self, gen: &GenId) -> Result<LinComb<InterchangeKey>> {
        let mut out = LinComb::zero();
        for ((m, n), c) in self.delta.value(gen)?.iter() {
            let a = self.omega_element(&LinComb::basis(m.clone()))?;
            let b = self.omega_element(&LinComb::basis(n.clone()))?;
            out.add_scaled(&pair_product(&a, &b), c);
        }
        Ok(out)
    }

    /// `ε ⊙ id` (`left = true`) or `id ⊙ ε` after δ.
    pub fn odot_counit(&self, gen: &GenId, left: bool) -> Result<PElement> {
        let mut out = LinComb::zero();
        for ((m, n), c) in self.delta.value(gen)?.iter() {
            let (killed, kept) = if left { (m, n) } else { (n, m) };
            if killed.gen.hdeg != 0 {
                continue;
            }
            let e = self.res.algebra_arc().augment_word(&killed.left)
                * self.res.algebra_arc().augment_word(&killed.right);
            out.add_term(kept.clone(), c * e);
        }
        Ok(out)
    }

    /// `μ ⊗_A id` (`left = true`) or `id ⊗_A μ` after ω.
    pub fn tensor_counit(&self, gen: &GenId, left: bool) -> Result<PElement> {
        let mut out = LinComb::zero();
        for (k, c) in self.omega.value(gen)?.iter() {
            let v = if left {
                if k.g.hdeg != 0 {
                    continue;
                }
                let a = self.res.algebra_arc().multiply_words(&k.left, &k.mid)?;
                a.flat_map(|w| self.res.act(w, &pkey(Word::unit(), k.h, Word::unit()), &k.right))?
            } else {
                if k.h.hdeg != 0 {
                    continue;
                }
                let b = self.res.algebra_arc().multiply_words(&k.mid, &k.right)?;
                b.flat_map(|w| self.res.act(&k.left, &pkey(Word::unit(), k.g, Word::unit()), w))?
            };
            out.add_scaled(&v, c);
        }
        Ok(out)
    }
}

#[derive(Clone, Debug)]
pub struct CoduoidReport {
    pub max_hdeg: usize,
    pub max_ideg: u32,
    /// The two routes agree on the generator of `P_0`.
    pub degree_zero_square: bool,
    /// Both routes commute with the differentials in the window.
    pub routes_are_chain_maps: bool,
    /// Generators on which the two routes differ before correcting by a homotopy.
    pub differing_generators: Vec<String>,
    pub counits: Vec<(String, bool)>,
    pub outcome: HomotopyOutcome<GenId, InterchangeKey>,
    /// Set when ω or δ has no t-equivariant lift; the other fields are then empty.
    pub obstruction: Option<String>,
}

impl CoduoidReport {
    pub fn passed(&self) -> bool {
        self.obstruction.is_none()
            && self.degree_zero_square
            && self.routes_are_chain_maps
            && self.counits.iter().all(|(_, ok)| *ok)
            && self.outcome.is_found()
    }

    pub fn homotopy_size(&self) -> usize {
        match &self.outcome {
            HomotopyOutcome::Found { homotopy, .. } => homotopy.values().map(|v| v.len()).sum(),
            _ => 0,
        }
    }
}

/// Searches for a homotopy `ζ∘(δ⊗_Aδ)∘ω ≃ (ω⊙ω)∘δ` on generators of homological
/// degree ≤ `max_hdeg` and internal degree ≤ `max_ideg`, and checks the counit laws
/// up to homotopy. The resolution has to reach `max_hdeg + 1`.
pub fn verify_coduoid(
    res: &FreeBimoduleResolution,
    max_hdeg: usize,
    max_ideg: u32,
) -> Result<CoduoidReport> {
    let odot = Odot::new(res, res);
    let tensor = TensorOverA::new(res, res);
    let target_tensor = TensorOverA::new(res, res);
    let target = Odot::new(&target_tensor, &target_tensor);
    let co = Comultiplications::new(res, &odot, &tensor, LiftStrategy::FirstPivot, max_ideg);
    for n in 1..=max_hdeg {
        for id in res.all_generators(n)? {
            if res.generator(id).degree > max_ideg {
                continue;
            }
            for r in [co.omega.value(&id).map(|_| ()), co.delta.value(&id).map(|_| ())] {
                match r {
                    Ok(()) => {}
                    Err(Error::Unsolvable(msg)) => {
                        return Ok(CoduoidReport {
                            max_hdeg,
                            max_ideg,
                            degree_zero_square: false,
                            routes_are_chain_maps: false,
                            differing_generators: Vec::new(),
                            counits: Vec::new(),
                            outcome: HomotopyOutcome::Inconclusive {
                                reason: format!("at {}: {msg}", res.label(id)),
                            },
                            obstruction: Some(format!("at {}: {msg}", res.label(id))),
                        })
                    }
                    Err(e) => return Err(e),
                }
            }
        }
    }

    let degree_zero_square = co.zeta_route(&p0())? == co.odot_route(&p0())?;
    let routes_are_chain_maps = crate::lifting::check_chain_map(res, &target, |g| co.zeta_route(g), max_hdeg, max_ideg)?
        .is_none()
        && crate::lifting::check_chain_map(res, &target, |g| co.odot_route(g), max_hdeg, max_ideg)?
            .is_none();

    let mut differing_generators = Vec::new();
    for n in 0..=max_hdeg {
        for id in res.all_generators(n)? {
            if res.generator(id).degree <= max_ideg && co.zeta_route(&id)? != co.odot_route(&id)? {
                differing_generators.push(res.label(id).to_string());
            }
        }
    }

    let id = |g: &GenId| Ok(res.gen_element(*g));
    let mut counits = Vec::new();
    for (name, left, odot_side) in [
        ("(ε ⊙ id) δ ≃ id", true, true),
        ("(id ⊙ ε) δ ≃ id", false, true),
        ("(μ ⊗_A id) ω ≃ id", true, false),
        ("(id ⊗_A μ) ω ≃ id", false, false),
    ] {
        let outcome = if odot_side {
            find_homotopy(res, res, |g| co.odot_counit(g, left), id, max_hdeg, max_ideg)?
        } else {
            find_homotopy(res, res, |g| co.tensor_counit(g, left), id, max_hdeg, max_ideg)?
        };
        counits.push((name.to_string(), outcome.is_found()));
    }

    let outcome = find_homotopy(
        res,
        &target,
        |g| co.zeta_route(g),
        |g| co.odot_route(g),
        max_hdeg,
        max_ideg,
    )?;
    Ok(CoduoidReport {
        max_hdeg,
        max_ideg,
        degree_zero_square,
        routes_are_chain_maps,
        differing_generators,
        counits,
        outcome,
        obstruction: None,
    })
}

/// `Σ c·(a ⊗ b)` with `a ⊗ b` the unit of `A ⊙ A`, for tests.
pub fn unit_coefficient(e: &LinComb<InterchangeKey>) -> Scalar {
    e.iter()
        .filter(|((x, y), _)| {
            x.left.is_unit() && x.mid.is_unit() && x.right.is_unit() && y.left.is_unit() && y.mid.is_unit() && y.right.is_unit()
        })
        .fold(crate::scalar::zero(), |acc, (_, c)| acc + c)
        * one()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::Arc;

    fn jordan() -> FreeBimoduleResolution {
        FreeBimoduleResolution::builtin_jordan(Arc::new(Algebra::jordan(6))).unwrap()
    }

    fn gid(res: &FreeBimoduleResolution, n: usize, label: &str) -> GenId {
        res.generator_by_label(n, label).unwrap()
    }

    #[test]
    fn signs() {
        assert_eq!(interchange_graded_sign(1, 1), -1);
        assert_eq!(interchange_graded_sign(2, 3), 1);
        assert_eq!(interchange_graded_sign(0, 5), 1);
    }

    #[test]
    fn odot_is_a_bimodule() {
        let res = jordan();
        let odot = Odot::new(&res, &res);
        let x = Word::letter(0);
        let y = Word::letter(1);
        let key = (
            pkey(Word::unit(), gid(&res, 1, "y"), x.clone()),
            pkey(y.clone(), gid(&res, 1, "x"), Word::unit()),
        );
        // (u·key)·v = u·(key·v) and (uv)·key = u·(v·key).
        let a = odot.act(&y, &key, &Word::unit()).unwrap();
        let lhs = a.flat_map(|k| odot.act(&Word::unit(), k, &x)).unwrap();
        let b = odot.act(&Word::unit(), &key, &x).unwrap();
        let rhs = b.flat_map(|k| odot.act(&y, k, &Word::unit())).unwrap();
        assert_eq!(lhs, rhs);
        let yx = res.algebra_arc().multiply_words(&y, &x).unwrap();
        let lhs = yx.flat_map(|w| odot.act(w, &key, &Word::unit())).unwrap();
        let inner = odot.act(&x, &key, &Word::unit()).unwrap();
        let rhs = inner.flat_map(|k| odot.act(&y, k, &Word::unit())).unwrap();
        assert_eq!(lhs, rhs);
        // and the differential is a bimodule map
        let d1 = odot.differential(&key).unwrap();
        let lhs = differential_element(&odot, &odot.act(&y, &key, &x).unwrap()).unwrap();
        let rhs = d1.flat_map(|k| odot.act(&y, k, &x)).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn tensor_over_a_balances() {
        let res = jordan();
        let ta = TensorOverA::new(&res, &res);
        let m = pkey(Word::unit(), gid(&res, 1, "x"), Word::letter(1));
        let n = pkey(Word::letter(1), gid(&res, 1, "y"), Word::unit());
        let m2 = pkey(Word::unit(), gid(&res, 1, "x"), Word(vec![1, 1]));
        let n2 = pkey(Word::unit(), gid(&res, 1, "y"), Word::unit());
        assert_eq!(ta.pi(&m, &n).unwrap(), ta.pi(&m2, &n2).unwrap());
        let d2 = differential_element(&ta, &ta.pi(&m, &n).unwrap()).unwrap();
        assert!(differential_element(&ta, &d2).unwrap().is_zero());
    }

    #[test]
    fn zeta_is_balanced() {
        let res = jordan();
        let odot = Odot::new(&res, &res);
        let x = (
            pkey(Word::unit(), gid(&res, 1, "x"), Word::unit()),
            pkey(Word::unit(), gid(&res, 1, "y"), Word::unit()),
        );
        let y = (
            pkey(Word::unit(), gid(&res, 1, "y"), Word::unit()),
            pkey(Word::unit(), p0(), Word::letter(0)),
        );
        for a in [Word::letter(0), Word::letter(1), Word(vec![0, 1])] {
            let xa = odot.act(&Word::unit(), &x, &a).unwrap();
            let ay = odot.act(&a, &y, &Word::unit()).unwrap();
            let lhs = zeta_elements(&res, &xa, &LinComb::basis(y.clone())).unwrap();
            let rhs = zeta_elements(&res, &LinComb::basis(x.clone()), &ay).unwrap();
            assert_eq!(lhs, rhs, "{a:?}");
        }
    }

    #[test]
    fn jordan_coduoid() {
        let res = jordan();
        let report = verify_coduoid(&res, 2, 6).unwrap();
        assert!(report.degree_zero_square);
        assert!(report.routes_are_chain_maps);
        assert!(report.counits.iter().all(|(_, ok)| *ok), "{:?}", report.counits);
        assert!(
            matches!(report.outcome, HomotopyOutcome::Found { exhaustive: true, .. }),
            "{:?}",
            report.outcome
        );
    }

    #[test]
    fn super_jordan_has_no_equivariant_omega() {
        let res = FreeBimoduleResolution::builtin_super_jordan(Arc::new(Algebra::super_jordan(6)), 3).unwrap();
        let report = verify_coduoid(&res, 2, 3).unwrap();
        assert!(!report.passed());
        assert!(report.obstruction.unwrap().contains("homological degree 2"));
    }

    #[test]
    fn regular_bimodule_odot_examples() {
        let j = Algebra::jordan(4);
        let a = RegularBimodule { alg: &j };
        let aa = Odot::new(&a, &a);
        let x = Word::letter(0);
        let got = aa.act(&x, &(Word::unit(), Word::unit()), &Word::unit()).unwrap();
        let want: LinComb<(Word, Word)> = [((x.clone(), Word::unit()), one()), ((Word::unit(), x.clone()), one())]
            .into_iter()
            .collect();
        assert_eq!(got, want);
        let s = Algebra::super_jordan(4);
        let a = RegularBimodule { alg: &s };
        let aa = Odot::new(&a, &a);
        let got = aa.act(&x, &(x.clone(), Word::unit()), &Word::unit()).unwrap();
        assert_eq!(got, LinComb::single((x.clone(), x.clone()), crate::scalar::int(-1)));
        let key = (Word(vec![1, 1]), Word::letter(1));
        assert_eq!(aa.act(&Word::unit(), &key, &Word::unit()).unwrap(), LinComb::basis(key));
    }

    #[test]
    fn balanced_quotients() {
        for alg in [Algebra::jordan(5), Algebra::super_jordan(5)] {
            let a = RegularBimodule { alg: &alg };
            for e in 0..=4 {
                assert_eq!(balanced_quotient_dim(&a, &a, 0, 0, e).unwrap(), alg.dimension(e).unwrap());
            }
        }
        let res = jordan();
        let ta = TensorOverA::new(&res, &res);
        for (h1, h2) in [(0, 0), (1, 0), (1, 1), (2, 1)] {
            for e in 0..=4 {
                let free = ta
                    .basis(h1 + h2, e)
                    .unwrap()
                    .into_iter()
                    .filter(|k| k.g.hdeg == h1)
                    .count();
                assert_eq!(balanced_quotient_dim(&res, &res, h1, h2, e).unwrap(), free, "{h1} {h2} {e}");
            }
        }
    }

    #[test]
    fn degree_zero_values() {
        let res = jordan();
        let odot = Odot::new(&res, &res);
        let tensor = TensorOverA::new(&res, &res);
        let co = Comultiplications::new(&res, &odot, &tensor, LiftStrategy::FirstPivot, 6);
        let z = co.zeta_route(&p0()).unwrap();
        assert_eq!(z.len(), 1);
        assert_eq!(unit_coefficient(&z), one());
    }
}
