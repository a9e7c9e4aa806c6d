//! Comparison maps between a small resolution and the normalized bar resolution,
//! the opposite cup product on trivial-coefficient cochains, and the check that it
//! is graded braided commutative.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use crate::algebra::{Presentation, Word};
use crate::bar::{normalize_bar, BarComplex};
use crate::braided::{act_tensor, pure, tensor_product, Tensor, TensorElement};
use crate::complex::ComplexOfGVS;
use crate::error::{Error, Result};
use crate::lifting::{FreeBimoduleComplex, Lift, LiftStrategy};
use crate::linalg::{Echelon, SparseVec};
use crate::linear::LinComb;
use crate::resolution::{induced_trivial_cochain, pkey, FreeBimoduleResolution, GenId, PElement};
use crate::scalar::{format_scalar, int, one, sign, zero, Scalar};

/// An A-bimodule map `P_p → k`, given by its values on the generators of `V_p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CochainFunctional {
    pub hdeg: usize,
    pub values: BTreeMap<GenId, Scalar>,
}

impl CochainFunctional {
    pub fn zero(hdeg: usize) -> CochainFunctional {
        CochainFunctional {
            hdeg,
            values: BTreeMap::new(),
        }
    }

    /// The dual basis functional of a generator.
    pub fn dual(id: GenId) -> CochainFunctional {
        CochainFunctional {
            hdeg: id.hdeg,
            values: BTreeMap::from([(id, one())]),
        }
    }

    /// Value 1 on the generator of `P_0 = A ⊗ A`.
    pub fn unit() -> CochainFunctional {
        CochainFunctional::dual(GenId { hdeg: 0, index: 0 })
    }

    pub fn from_values(hdeg: usize, values: impl IntoIterator<Item = (GenId, Scalar)>) -> CochainFunctional {
        let values = values
            .into_iter()
            .filter(|(_, c)| *c != zero())
            .collect();
        CochainFunctional { hdeg, values }
    }

    pub fn value(&self, id: GenId) -> Scalar {
        self.values.get(&id).cloned().unwrap_or_else(zero)
    }

    pub fn eval(&self, v: &LinComb<GenId>) -> Scalar {
        v.iter()
            .fold(zero(), |acc, (id, c)| acc + c * self.value(*id))
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn scaled(&self, c: &Scalar) -> CochainFunctional {
        CochainFunctional::from_values(self.hdeg, self.values.iter().map(|(k, v)| (*k, v * c)))
    }

    pub fn plus(&self, other: &CochainFunctional) -> CochainFunctional {
        let mut values = self.values.clone();
        for (k, v) in &other.values {
            *values.entry(*k).or_insert_with(zero) += v;
        }
        CochainFunctional::from_values(self.hdeg, values)
    }

    /// Internal degrees of the generators it is nonzero on; the functional lives in
    /// the negatives of these.
    pub fn support_degrees(&self, res: &FreeBimoduleResolution) -> Vec<u32> {
        let mut d: Vec<u32> = self
            .values
            .keys()
            .map(|id| res.generator(*id).degree)
            .collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn format(&self, res: &FreeBimoduleResolution) -> String {
        if self.values.is_empty() {
            return "0".into();
        }
        crate::algebra::format_terms(
            self.values
                .iter()
                .map(|(id, c)| (format!("{}*", res.label(*id)), c)),
        )
    }
}

/// `(t^k·φ)(g) = φ(t^{-k}·g)`, with t acting trivially on k.
pub fn act_on_functional(
    res: &FreeBimoduleResolution,
    k: i64,
    phi: &CochainFunctional,
) -> Result<CochainFunctional> {
    if k == 0 {
        return Ok(phi.clone());
    }
    let mut values = Vec::new();
    for id in res.all_generators(phi.hdeg)? {
        let moved = res.collapse(&crate::lifting::BimoduleComplex::twist(
            res,
            -k,
            &res.gen_key(&id),
        )?);
        values.push((id, phi.eval(&moved)));
    }
    Ok(CochainFunctional::from_values(phi.hdeg, values))
}

/// `c_{p,q}(1⊗u⊗w⊗1) = 1⊗(t^{|u|}·w)⊗u⊗1` on bar tensors of arity p+q+2.
pub fn braid_bar_segment(
    alg: &crate::algebra::Algebra,
    p: usize,
    q: usize,
    e: &TensorElement,
) -> Result<TensorElement> {
    e.flat_map(|t| {
        if t.len() != p + q + 2 {
            return Err(Error::Arity {
                expected: p + q + 2,
                found: t.len(),
            });
        }
        let u = &t[1..p + 1];
        let w = &t[p + 1..p + q + 1];
        let du: u32 = u.iter().map(|x| alg.word_degree(x)).sum();
        let moved = act_tensor(alg, du as i64, w)?;
        let head = pure(vec![t[0].clone()]);
        let tail = pure(
            u.iter()
                .cloned()
                .chain(std::iter::once(t[p + q + 1].clone()))
                .collect(),
        );
        Ok(tensor_product(&tensor_product(&head, &moved), &tail))
    })
}

/// Which built-in family a resolution belongs to, for the closed-form seeds.
fn family(res: &FreeBimoduleResolution) -> Option<&'static str> {
    let p = res.algebra_arc().presentation();
    if *p == Presentation::jordan() && res.name() == "jordan" {
        Some("jordan")
    } else if *p == Presentation::super_jordan() && res.name() == "super_jordan" {
        Some("super_jordan")
    } else {
        None
    }
}

fn xs(n: usize) -> Word {
    Word(vec![0; n])
}

/// Closed-form g₁ for the Jordan plane: `1⊗x^k y^l⊗1 ↦ Σ_i x^i⊗x⊗x^{k-1-i}y^l + Σ_j x^k y^j⊗y⊗y^{l-1-j}`.
pub fn jordan_g1(k: usize, l: usize) -> PElement {
    let gx = GenId { hdeg: 1, index: 0 };
    let gy = GenId { hdeg: 1, index: 1 };
    let mut out = LinComb::zero();
    for i in 0..k {
        let mut right = vec![0; k - 1 - i];
        right.extend(std::iter::repeat_n(1, l));
        out.add_term(pkey(xs(i), gx, Word(right)), one());
    }
    for j in 0..l {
        let mut left = vec![0; k];
        left.extend(std::iter::repeat_n(1, j));
        out.add_term(pkey(Word(left), gy, Word(vec![1; l - 1 - j])), one());
    }
    out
}

/// The same formula with `x^k` instead of `x^k y^j` in the second sum.
pub fn jordan_g1_literal(k: usize, l: usize) -> PElement {
    let gx = GenId { hdeg: 1, index: 0 };
    let gy = GenId { hdeg: 1, index: 1 };
    let mut out = jordan_g1(k, 0).map_keys(|key| {
        let mut right = key.right.0.clone();
        right.extend(std::iter::repeat_n(1, l));
        pkey(key.left.clone(), gx, Word(right))
    });
    for j in 0..l {
        out.add_term(pkey(xs(k), gy, Word(vec![1; l - 1 - j])), one());
    }
    out
}

fn split_xy(w: &Word) -> Option<(usize, usize)> {
    let k = w.0.iter().take_while(|&&c| c == 0).count();
    if w.0[k..].iter().all(|&c| c == 1) {
        Some((k, w.len() - k))
    } else {
        None
    }
}

fn jordan_g_seed(gen: &Tensor) -> Option<PElement> {
    if gen.len() != 1 {
        return None;
    }
    let (k, l) = split_xy(&gen[0])?;
    Some(jordan_g1(k, l))
}

/// `1⊗a₁…a_k⊗1 ↦ Σ_i a₁…a_{i-1}⊗a_i⊗a_{i+1}…a_k` for a normal word.
pub fn letter_split_g1(w: &Word) -> PElement {
    let mut out = LinComb::zero();
    for i in 0..w.len() {
        let g = GenId {
            hdeg: 1,
            index: w.0[i] as usize,
        };
        out.add_term(
            pkey(Word(w.0[..i].to_vec()), g, Word(w.0[i + 1..].to_vec())),
            one(),
        );
    }
    out
}

fn super_jordan_g_seed(gen: &Tensor) -> Option<PElement> {
    let n = gen.len();
    if n == 1 {
        return Some(letter_split_g1(&gen[0]));
    }
    if n < 2 {
        return None;
    }
    let x = Word::letter(0);
    let xy = Word(vec![0, 1]);
    let yy = Word(vec![1, 1]);
    let yx = Word(vec![1, 0]);
    let special: Vec<usize> = (0..n).filter(|&i| gen[i] != x).collect();
    if special.len() != 1 {
        return None;
    }
    let i = special[0];
    let w = &gen[i];
    let xn = GenId { hdeg: n, index: 0 };
    let yn = GenId { hdeg: n, index: 1 };
    if *w == xy {
        if i == n - 1 {
            return Some(LinComb::basis(pkey(Word::unit(), xn, Word::letter(1))));
        }
        return Some(LinComb::zero());
    }
    if *w == yy || *w == yx {
        if i >= 1 {
            return Some(LinComb::zero());
        }
        if *w == yy {
            return Some(LinComb::basis(pkey(Word::unit(), yn, Word::unit())));
        }
        return Some(LinComb::basis(pkey(Word::letter(1), xn, Word::unit())));
    }
    None
}

fn jordan_f_seed(id: &GenId) -> Option<TensorElement> {
    let x = Word::letter(0);
    let y = Word::letter(1);
    let u = Word::unit;
    match (id.hdeg, id.index) {
        (1, 0) => Some(pure(vec![u(), x, u()])),
        (1, 1) => Some(pure(vec![u(), y, u()])),
        (2, 0) => {
            let mut e = pure(vec![u(), y.clone(), x.clone(), u()]);
            e.add_term(vec![u(), x.clone(), y, u()], int(-1));
            e.add_term(vec![u(), x.clone(), x, u()], crate::scalar::ratio(1, 2));
            Some(e)
        }
        _ => None,
    }
}

/// `f_{1+q}(1⊗y²x^q⊗1)` as stated for the super Jordan plane.
pub fn super_jordan_f_y2x(q: usize) -> TensorElement {
    let u = Word::unit;
    let x = Word::letter(0);
    let y = Word::letter(1);
    let y2 = Word(vec![1, 1]);
    let yx = Word(vec![1, 0]);
    let xq = |n: usize| vec![x.clone(); n];
    let mut out = LinComb::zero();
    let mut push = |parts: Vec<Word>, c: Scalar| {
        let mut key = vec![u()];
        key.extend(parts);
        key.push(u());
        out.add_term(key, c);
    };
    let mut t = vec![y.clone(), yx.clone()];
    t.extend(xq(q - 1));
    push(t, one());
    for mid in [y2.clone(), yx.clone()] {
        let mut t = vec![x.clone(), mid];
        t.extend(xq(q - 1));
        push(t, int(-1));
    }
    for i in 0..q.saturating_sub(1) {
        for mid in [y2.clone(), yx.clone()] {
            let mut t = xq(2 + i);
            t.push(mid);
            t.extend(xq(q - 2 - i));
            push(t, sign(i as i64));
        }
    }
    out
}

fn super_jordan_f_seed(id: &GenId) -> Option<TensorElement> {
    let u = Word::unit;
    match (id.hdeg, id.index) {
        (0, _) => None,
        (1, i) => Some(pure(vec![u(), Word::letter(i as u8), u()])),
        (n, 0) => {
            let mut t = vec![u()];
            t.extend(vec![Word::letter(0); n]);
            t.push(u());
            Some(pure(t))
        }
        (n, _) => Some(super_jordan_f_y2x(n - 1)),
    }
}

/// How the comparison maps are built.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComparisonOptions {
    /// Use the closed-form values for the built-in resolutions where they satisfy
    /// the lifting equations.
    pub seed_paper_maps: bool,
    pub g_strategy: LiftStrategy,
}

impl Default for ComparisonOptions {
    fn default() -> Self {
        ComparisonOptions {
            seed_paper_maps: false,
            g_strategy: LiftStrategy::FirstPivot,
        }
    }
}

type FLift<'a> = Lift<'a, FreeBimoduleResolution, BarComplex<'a>>;
type GLift<'a> = Lift<'a, BarComplex<'a>, FreeBimoduleResolution>;

/// `f: P → B̄` built with the right-handed bar contraction.
pub fn comparison_f<'a>(
    res: &'a FreeBimoduleResolution,
    bar: &'a BarComplex<'a>,
    seed_paper_maps: bool,
) -> FLift<'a> {
    let base = |_: &GenId| -> Result<TensorElement> {
        Ok(pure(vec![Word::unit(), Word::unit()]))
    };
    let lift = Lift::new(res, bar, base, LiftStrategy::FirstPivot)
        .with_contraction(move |rhs| Ok(bar.right_contracting_homotopy(rhs)));
    match (seed_paper_maps, family(res)) {
        (true, Some("jordan")) => lift.with_seed_fn(jordan_f_seed),
        (true, Some("super_jordan")) => lift.with_seed_fn(super_jordan_f_seed),
        _ => lift,
    }
}

/// `g: B̄ → P` built by exact solves in `P`.
pub fn comparison_g<'a>(
    res: &'a FreeBimoduleResolution,
    bar: &'a BarComplex<'a>,
    seed_paper_maps: bool,
    strategy: LiftStrategy,
) -> GLift<'a> {
    let base = |_: &Tensor| -> Result<PElement> {
        Ok(LinComb::basis(pkey(
            Word::unit(),
            GenId { hdeg: 0, index: 0 },
            Word::unit(),
        )))
    };
    let lift = Lift::new(bar, res, base, strategy);
    match (seed_paper_maps, family(res)) {
        (true, Some("jordan")) => lift.with_seed_fn(jordan_g_seed),
        (true, Some("super_jordan")) => lift.with_seed_fn(super_jordan_g_seed),
        _ => lift,
    }
}

/// Cup products computed through `f` and `g`.
pub struct CupEngine<'a> {
    res: &'a FreeBimoduleResolution,
    f: FLift<'a>,
    g: GLift<'a>,
    segments: RwLock<HashMap<Tensor, LinComb<GenId>>>,
}

impl<'a> CupEngine<'a> {
    pub fn new(
        res: &'a FreeBimoduleResolution,
        bar: &'a BarComplex<'a>,
        options: ComparisonOptions,
    ) -> CupEngine<'a> {
        CupEngine {
            res,
            f: comparison_f(res, bar, options.seed_paper_maps),
            g: comparison_g(res, bar, options.seed_paper_maps, options.g_strategy),
            segments: RwLock::new(HashMap::new()),
        }
    }

    pub fn resolution(&self) -> &FreeBimoduleResolution {
        self.res
    }

    pub fn f(&self) -> &FLift<'a> {
        &self.f
    }

    pub fn g(&self) -> &GLift<'a> {
        &self.g
    }

    /// `f(1⊗w⊗1)`.
    pub fn f_value(&self, w: GenId) -> Result<TensorElement> {
        self.f.value(&w)
    }

    /// `(ε⊗id⊗ε)(g(1⊗a₁⊗…⊗a_n⊗1))` in `V_n`.
    pub fn segment(&self, seg: &[Word]) -> Result<LinComb<GenId>> {
        if seg.iter().any(|w| w.is_unit()) {
            return Ok(LinComb::zero());
        }
        if let Some(v) = self.segments.read().unwrap().get(seg) {
            return Ok(v.clone());
        }
        let v = self.res.collapse(&self.g.value(&seg.to_vec())?);
        self.segments
            .write()
            .unwrap()
            .insert(seg.to_vec(), v.clone());
        Ok(v)
    }

    /// `(ψ∘g_p ⌣ φ∘g_q)` on a bar element of arity p+q+2: φ reads the first q
    /// factors and ψ the last p.
    pub fn cup_on_bar(
        &self,
        psi: &CochainFunctional,
        phi: &CochainFunctional,
        e: &TensorElement,
    ) -> Result<Scalar> {
        let (p, q) = (psi.hdeg, phi.hdeg);
        let mut total = zero();
        for (t, c) in e.iter() {
            if t.len() != p + q + 2 {
                return Err(Error::Arity {
                    expected: p + q + 2,
                    found: t.len(),
                });
            }
            if !t[0].is_unit() || !t[p + q + 1].is_unit() {
                continue;
            }
            let a = phi.eval(&self.segment(&t[1..q + 1])?);
            if a == zero() {
                continue;
            }
            let b = psi.eval(&self.segment(&t[q + 1..p + q + 1])?);
            total += c * a * b;
        }
        Ok(total)
    }

    /// `ψ ⌣ φ` as a functional on `V_{p+q}`.
    pub fn cup_opposite(
        &self,
        psi: &CochainFunctional,
        phi: &CochainFunctional,
    ) -> Result<CochainFunctional> {
        let n = psi.hdeg + phi.hdeg;
        let mut values = Vec::new();
        for w in self.res.all_generators(n)? {
            values.push((w, self.cup_on_bar(psi, phi, &self.f_value(w)?)?));
        }
        Ok(CochainFunctional::from_values(n, values))
    }

    /// The classical order: `α` reads the leading segment.
    pub fn cup_standard(
        &self,
        alpha: &CochainFunctional,
        beta: &CochainFunctional,
    ) -> Result<CochainFunctional> {
        self.cup_opposite(beta, alpha)
    }

    /// Bilinear tables `(φ-generator, ψ-generator) ↦ value` of the cup on `e`.
    fn bilinear(&self, p: usize, q: usize, e: &TensorElement) -> Result<BTreeMap<(GenId, GenId), Scalar>> {
        let mut out: BTreeMap<(GenId, GenId), Scalar> = BTreeMap::new();
        for (t, c) in e.iter() {
            if !t[0].is_unit() || !t[p + q + 1].is_unit() {
                continue;
            }
            let a = self.segment(&t[1..q + 1])?;
            if a.is_zero() {
                continue;
            }
            let b = self.segment(&t[q + 1..p + q + 1])?;
            for (ga, ca) in a.iter() {
                for (gb, cb) in b.iter() {
                    *out.entry((*ga, *gb)).or_insert_with(zero) += c * ca * cb;
                }
            }
        }
        out.retain(|_, v| *v != zero());
        Ok(out)
    }

    /// Checks `(ψ⌣φ)∘c_{p,q}∘f = (-1)^{pq} (ψ⌣φ)∘f` on every generator of `P_{p+q}`,
    /// exactly when the resolution is minimal and up to coboundaries otherwise.
    pub fn verify_braided_commutativity(&self, p: usize, q: usize) -> Result<CommutativityReport> {
        let res = self.res;
        let alg = res.algebra_arc().as_ref();
        let n = p + q;
        let s = sign((p * q) as i64);
        let ws = res.all_generators(n)?;
        let mut plain = Vec::new();
        let mut braided = Vec::new();
        for w in &ws {
            let fw = self.f_value(*w)?;
            plain.push(self.bilinear(p, q, &fw)?);
            braided.push(self.bilinear(p, q, &normalize_bar(&braid_bar_segment(alg, p, q, &fw)?))?);
        }
        let cochain = induced_trivial_cochain(res, n)?;
        let minimal = cochain.maps.iter().all(|m| m.is_zero());
        let psis = cocycle_basis(res, &cochain, p)?;
        let phis = cocycle_basis(res, &cochain, q)?;
        let coboundaries = coboundary_echelon(res, &cochain, n)?;
        let mut rows = Vec::new();
        for psi in &psis {
            for phi in &phis {
                let pair_value = |table: &BTreeMap<(GenId, GenId), Scalar>| -> Scalar {
                    table.iter().fold(zero(), |acc, ((ga, gb), c)| {
                        acc + c * phi.value(*ga) * psi.value(*gb)
                    })
                };
                let lhs: Vec<Scalar> = braided.iter().map(pair_value).collect();
                let rhs: Vec<Scalar> = plain.iter().map(|t| pair_value(t) * &s).collect();
                let cohomologous = if minimal {
                    lhs == rhs
                } else {
                    let diff: SparseVec = lhs
                        .iter()
                        .zip(&rhs)
                        .enumerate()
                        .filter(|(_, (l, r))| l != r)
                        .map(|(i, (l, r))| (i, l - r))
                        .collect();
                    coboundaries.contains(&diff)
                };
                for (i, w) in ws.iter().enumerate() {
                    rows.push(CommutativityRow {
                        p,
                        q,
                        generator: res.label(*w).to_string(),
                        psi: psi.format(res),
                        phi: phi.format(res),
                        lhs: lhs[i].clone(),
                        rhs: rhs[i].clone(),
                        cup: &rhs[i] * &s,
                        sign: if p * q % 2 == 0 { 1 } else { -1 },
                        pass: if minimal { lhs[i] == rhs[i] } else { cohomologous },
                    });
                }
            }
        }
        let mut seed_conflicts: Vec<String> = self
            .f
            .seed_conflicts()
            .iter()
            .map(|id| format!("f at {}", res.label(*id)))
            .collect();
        seed_conflicts.extend(self.g.seed_conflicts().iter().map(|t| {
            format!(
                "g at 1⊗{}⊗1",
                t.iter()
                    .map(|w| alg.presentation().format_word(w))
                    .collect::<Vec<_>>()
                    .join("⊗")
            )
        }));
        Ok(CommutativityReport {
            p,
            q,
            minimal,
            rows,
            seed_conflicts,
        })
    }
}

/// A basis of the degree-`n` cocycles: the dual basis when the induced differential
/// out of degree `n` vanishes.
pub fn cocycle_basis(
    res: &FreeBimoduleResolution,
    cochain: &ComplexOfGVS,
    n: usize,
) -> Result<Vec<CochainFunctional>> {
    let gens = res.all_generators(n)?;
    if n >= cochain.maps.len() || cochain.maps[n].is_zero() {
        return Ok(gens.into_iter().map(CochainFunctional::dual).collect());
    }
    let map = &cochain.maps[n];
    let mut out = Vec::new();
    for d in map.source.degrees().collect::<Vec<_>>() {
        let e = (-d) as u32;
        let in_degree: Vec<GenId> = gens
            .iter()
            .copied()
            .filter(|g| res.generator(*g).degree == e)
            .collect();
        for v in map.block(d).kernel_basis() {
            out.push(CochainFunctional::from_values(
                n,
                in_degree.iter().copied().zip(v),
            ));
        }
    }
    Ok(out)
}

fn coboundary_echelon(
    res: &FreeBimoduleResolution,
    cochain: &ComplexOfGVS,
    n: usize,
) -> Result<Echelon> {
    let mut ech = Echelon::new();
    if n == 0 || n > cochain.maps.len() {
        return Ok(ech);
    }
    let gens = res.all_generators(n)?;
    let prev = res.all_generators(n - 1)?;
    for g in prev {
        // d*(g*) evaluated on every generator of V_n.
        let v: SparseVec = gens
            .iter()
            .enumerate()
            .filter_map(|(i, w)| {
                let c = res.collapse(&res.generator(*w).differential).coeff(&g);
                (c != zero()).then_some((i, c))
            })
            .collect();
        ech.insert(&v);
    }
    Ok(ech)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutativityRow {
    pub p: usize,
    pub q: usize,
    pub generator: String,
    pub psi: String,
    pub phi: String,
    /// `(ψ⌣φ)(c_{p,q}(f(w)))`.
    pub lhs: Scalar,
    /// `(-1)^{pq} (ψ⌣φ)(f(w))`.
    pub rhs: Scalar,
    /// `(ψ⌣φ)(f(w))`.
    pub cup: Scalar,
    pub sign: i64,
    pub pass: bool,
}

#[derive(Clone, Debug)]
pub struct CommutativityReport {
    pub p: usize,
    pub q: usize,
    pub minimal: bool,
    pub rows: Vec<CommutativityRow>,
    pub seed_conflicts: Vec<String>,
}

impl CommutativityReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn row(&self, psi: &str, phi: &str, generator: &str) -> Option<&CommutativityRow> {
        self.rows
            .iter()
            .find(|r| r.psi == psi && r.phi == phi && r.generator == generator)
    }
}

impl CommutativityRow {
    pub fn describe(&self) -> String {
        format!(
            "p={} q={} w={} ψ={} φ={}: lhs={} rhs={}",
            self.p,
            self.q,
            self.generator,
            self.psi,
            self.phi,
            format_scalar(&self.lhs),
            format_scalar(&self.rhs)
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Algebra;
    use crate::lifting::check_chain_map;
    use crate::scalar::ratio;
    use std::sync::Arc;

    fn jordan() -> FreeBimoduleResolution {
        FreeBimoduleResolution::builtin_jordan(Arc::new(Algebra::jordan(6))).unwrap()
    }

    fn super_jordan(n: usize, d: u32) -> FreeBimoduleResolution {
        FreeBimoduleResolution::builtin_super_jordan(Arc::new(Algebra::super_jordan(d)), n).unwrap()
    }

    #[test]
    fn jordan_f_matches_closed_form() {
        let res = jordan();
        let bar = BarComplex::new(res.algebra_arc());
        let f = comparison_f(&res, &bar, false);
        for n in 1..=2 {
            for id in res.all_generators(n).unwrap() {
                assert_eq!(f.value(&id).unwrap(), jordan_f_seed(&id).unwrap());
            }
        }
        let p0 = GenId { hdeg: 0, index: 0 };
        assert_eq!(f.value(&p0).unwrap(), pure(vec![Word::unit(), Word::unit()]));
    }

    #[test]
    fn super_jordan_f_matches_closed_form() {
        let res = super_jordan(5, 7);
        let bar = BarComplex::new(res.algebra_arc());
        let f = comparison_f(&res, &bar, false);
        for n in 1..=5 {
            for id in res.all_generators(n).unwrap() {
                let unit_ends = |t: &Tensor| t[0].is_unit() && t[t.len() - 1].is_unit();
                assert_eq!(
                    f.value(&id).unwrap().filter(unit_ends),
                    super_jordan_f_seed(&id).unwrap(),
                    "{id:?}"
                );
            }
        }
        assert!(check_chain_map(&res, &bar, |g| f.value(g), 5, 7).unwrap().is_none());
        let seeded = comparison_f(&res, &bar, true);
        for n in 1..=4 {
            for id in res.all_generators(n).unwrap() {
                seeded.value(&id).unwrap();
            }
        }
        // The closed form only lists the part with unit outer factors.
        assert!(seeded.seed_conflicts().iter().all(|id| id.index == 1));
        assert_eq!(seeded.seed_conflicts().len(), 3);
    }

    #[test]
    fn jordan_g_seed_is_a_valid_lift_and_the_literal_one_is_not() {
        let res = jordan();
        let bar = BarComplex::new(res.algebra_arc());
        let g = comparison_g(&res, &bar, true, LiftStrategy::FirstPivot);
        for (k, l) in [(1, 1), (2, 1), (0, 3), (2, 2), (1, 3)] {
            let mut w = vec![0; k];
            w.extend(std::iter::repeat_n(1, l));
            g.value(&vec![Word(w)]).unwrap();
        }
        assert!(g.seed_conflicts().is_empty());
        assert_eq!(
            g.value(&vec![Word(vec![0, 1])]).unwrap(),
            jordan_g1(1, 1)
        );
        let literal = Lift::new(&bar, &res, |_: &Tensor| {
            Ok(LinComb::basis(pkey(Word::unit(), GenId { hdeg: 0, index: 0 }, Word::unit())))
        }, LiftStrategy::FirstPivot)
        .with_seed_fn(|t: &Tensor| split_xy(&t[0]).map(|(k, l)| jordan_g1_literal(k, l)));
        literal.value(&vec![Word(vec![0, 1])]).unwrap();
        assert!(literal.seed_conflicts().is_empty());
        literal.value(&vec![Word(vec![0, 1, 1])]).unwrap();
        assert_eq!(literal.seed_conflicts().len(), 1);
    }

    #[test]
    fn jordan_one_one_table() {
        let res = jordan();
        let bar = BarComplex::new(res.algebra_arc());
        let engine = CupEngine::new(&res, &bar, ComparisonOptions::default());
        let report = engine.verify_braided_commutativity(1, 1).unwrap();
        assert!(report.passed());
        assert!(report.minimal);
        // ψ = x*, φ = x*: ½; ψ = x*, φ = y*: 1; ψ = y*, φ = x*: -1; ψ = y*, φ = y*: 0.
        let expect = [("x*", "x*", ratio(1, 2)), ("x*", "y*", int(1)), ("y*", "x*", int(-1)), ("y*", "y*", int(0))];
        for (psi, phi, v) in expect {
            let row = report.row(psi, phi, "r").unwrap();
            assert_eq!(row.cup, v);
            assert_eq!(row.lhs, -v.clone());
        }
    }

    #[test]
    fn super_jordan_small_tables() {
        let res = super_jordan(4, 6);
        let bar = BarComplex::new(res.algebra_arc());
        let engine = CupEngine::new(&res, &bar, ComparisonOptions::default());
        for (p, q) in [(1, 1), (1, 2), (2, 1), (2, 2), (1, 3)] {
            let report = engine.verify_braided_commutativity(p, q).unwrap();
            assert!(report.passed(), "{:?}", report.rows.iter().filter(|r| !r.pass).map(|r| r.describe()).collect::<Vec<_>>());
        }
    }

    #[test]
    fn seeded_and_unseeded_tables_agree() {
        let res = super_jordan(4, 6);
        let bar = BarComplex::new(res.algebra_arc());
        let plain = CupEngine::new(&res, &bar, ComparisonOptions::default());
        let seeded = CupEngine::new(
            &res,
            &bar,
            ComparisonOptions {
                seed_paper_maps: true,
                g_strategy: LiftStrategy::Perturbed { seed: 7 },
            },
        );
        for (p, q) in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 1)] {
            let a = plain.verify_braided_commutativity(p, q).unwrap();
            let b = seeded.verify_braided_commutativity(p, q).unwrap();
            assert_eq!(a.rows, b.rows);
            let g_conflicts: Vec<_> = b.seed_conflicts.iter().filter(|c| c.starts_with("g ")).collect();
            if p + q <= 3 {
                assert!(g_conflicts.is_empty(), "{g_conflicts:?}");
            }
        }
    }

    #[test]
    fn unit_and_zero() {
        let res = jordan();
        let bar = BarComplex::new(res.algebra_arc());
        let engine = CupEngine::new(&res, &bar, ComparisonOptions::default());
        let x = CochainFunctional::dual(res.generator_by_label(1, "x").unwrap());
        let u = CochainFunctional::unit();
        assert_eq!(engine.cup_opposite(&x, &u).unwrap(), x);
        assert_eq!(engine.cup_opposite(&u, &x).unwrap(), x);
        let z = CochainFunctional::zero(1);
        assert!(engine.cup_opposite(&x, &z).unwrap().is_zero());
    }

    #[test]
    fn braid_segments() {
        let a = Algebra::jordan(4);
        let u = Word::unit;
        let e = pure(vec![u(), Word::letter(1), Word::letter(0), u()]);
        assert_eq!(
            braid_bar_segment(&a, 1, 1, &e).unwrap(),
            pure(vec![u(), Word::letter(0), Word::letter(1), u()])
        );
        let s = Algebra::super_jordan(6);
        let e = pure(vec![u(), Word::letter(0), Word::letter(0), Word::letter(0), u()]);
        assert_eq!(
            braid_bar_segment(&s, 1, 2, &e).unwrap(),
            e.clone()
        );
        assert_eq!(braid_bar_segment(&s, 0, 3, &e).unwrap(), e);
    }

    #[test]
    fn functional_actions() {
        let res = jordan();
        let r = CochainFunctional::dual(res.generator_by_label(2, "r").unwrap());
        assert_eq!(act_on_functional(&res, 1, &r).unwrap(), r);
        assert_eq!(act_on_functional(&res, 0, &r).unwrap(), r);
        let s = super_jordan(3, 6);
        let x2 = CochainFunctional::dual(s.generator_by_label(2, "x^2").unwrap());
        let moved = act_on_functional(&s, 1, &x2).unwrap();
        assert_eq!(moved.value(s.generator_by_label(2, "x^2").unwrap()), int(1));
    }
}
