//! Complexes of graded bimodules, chain maps between them, lifting and homotopies.
//!
//! Free complexes are described by generators and the differential on them; maps out
//! of a free complex are determined by their values on generators. Lifts and
//! homotopies are found by exact linear solves in one bidegree at a time.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Debug;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, RwLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Word};
use crate::error::{Error, Result};
use crate::linalg::{Echelon, SparseVec};
use crate::linear::LinComb;
use crate::scalar::{int, Scalar};

/// A complex of graded A-bimodules with a t-action, described by k-bases per bidegree.
pub trait BimoduleComplex {
    type Key: Clone + Ord + Hash + Debug + Send + Sync;

    fn algebra(&self) -> &Algebra;
    /// A k-basis of the piece in homological degree `hdeg` and internal degree `ideg`.
    fn basis(&self, hdeg: usize, ideg: u32) -> Result<Vec<Self::Key>>;
    fn hdeg(&self, key: &Self::Key) -> usize;
    fn ideg(&self, key: &Self::Key) -> u32;
    /// `left · key · right`.
    fn act(&self, left: &Word, key: &Self::Key, right: &Word) -> Result<LinComb<Self::Key>>;
    /// `t^k · key`.
    fn twist(&self, k: i64, key: &Self::Key) -> Result<LinComb<Self::Key>>;
    /// The differential, lowering the homological degree by one (zero in degree 0).
    fn differential(&self, key: &Self::Key) -> Result<LinComb<Self::Key>>;
}

/// A complex whose terms are free bimodules on listed generators.
pub trait FreeBimoduleComplex: BimoduleComplex {
    type Gen: Clone + Ord + Hash + Debug + Send + Sync;

    /// Generators of homological degree `hdeg` and internal degree exactly `ideg`.
    fn generators(&self, hdeg: usize, ideg: u32) -> Result<Vec<Self::Gen>>;
    fn gen_key(&self, gen: &Self::Gen) -> Self::Key;
    fn split(&self, key: &Self::Key) -> (Word, Self::Gen, Word);
    fn gen_hdeg(&self, gen: &Self::Gen) -> usize;
    fn gen_ideg(&self, gen: &Self::Gen) -> u32;
    /// Whether every generator lies in homological degree ≤ `max_hdeg` and internal
    /// degree ≤ `max_ideg`.
    fn within_window(&self, max_hdeg: usize, max_ideg: u32) -> bool;
}

pub fn act_element<C: BimoduleComplex>(
    c: &C,
    left: &Word,
    e: &LinComb<C::Key>,
    right: &Word,
) -> Result<LinComb<C::Key>> {
    e.flat_map(|k| c.act(left, k, right))
}

pub fn differential_element<C: BimoduleComplex>(
    c: &C,
    e: &LinComb<C::Key>,
) -> Result<LinComb<C::Key>> {
    e.flat_map(|k| c.differential(k))
}

pub fn twist_element<C: BimoduleComplex>(
    c: &C,
    k: i64,
    e: &LinComb<C::Key>,
) -> Result<LinComb<C::Key>> {
    e.flat_map(|key| c.twist(k, key))
}

/// Extends generator values bilinearly: `a·gen·b ↦ a·value(gen)·b`.
pub fn apply_on_generators<S, T, F>(
    source: &S,
    target: &T,
    e: &LinComb<S::Key>,
    mut value: F,
) -> Result<LinComb<T::Key>>
where
    S: FreeBimoduleComplex,
    T: BimoduleComplex,
    F: FnMut(&S::Gen) -> Result<LinComb<T::Key>>,
{
    e.flat_map(|key| {
        let (a, g, b) = source.split(key);
        let v = value(&g)?;
        act_element(target, &a, &v, &b)
    })
}

/// Solves `d x = y` in one bidegree of a target complex.
pub struct DegreeSolver<K> {
    columns: Vec<K>,
    rows: HashMap<K, usize>,
    echelon: Echelon,
    kernel: Vec<SparseVec>,
}

impl<K: Clone + Ord + Hash + Debug> DegreeSolver<K> {
    pub fn new<T>(target: &T, hdeg: usize, ideg: u32) -> Result<DegreeSolver<K>>
    where
        T: BimoduleComplex<Key = K>,
    {
        let columns = target.basis(hdeg, ideg)?;
        let images = columns
            .iter()
            .map(|key| target.differential(key))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_images(columns, &images))
    }

    /// A solver for the linear map sending `columns[j]` to `images[j]`.
    pub fn from_images(columns: Vec<K>, images: &[LinComb<K>]) -> DegreeSolver<K> {
        let mut rows: HashMap<K, usize> = HashMap::new();
        let mut echelon = Echelon::tracking();
        let mut kernel = Vec::new();
        for (j, image) in images.iter().enumerate() {
            let v = Self::index(&mut rows, image);
            if let Some(dep) = echelon.insert(&v) {
                let mut k = SparseVec::new();
                k.insert(j, int(1));
                for (i, c) in dep {
                    *k.entry(i).or_insert_with(|| int(0)) -= c;
                }
                k.retain(|_, c| *c != int(0));
                kernel.push(k);
            }
        }
        DegreeSolver {
            columns,
            rows,
            echelon,
            kernel,
        }
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    fn index(rows: &mut HashMap<K, usize>, e: &LinComb<K>) -> SparseVec {
        let mut v = SparseVec::new();
        for (k, c) in e.iter() {
            let n = rows.len();
            let i = *rows.entry(k.clone()).or_insert(n);
            v.insert(i, c.clone());
        }
        v
    }

    pub fn kernel_dim(&self) -> usize {
        self.kernel.len()
    }

    /// A preimage of `y`, with free columns set to zero.
    pub fn solve(&self, y: &LinComb<K>) -> Option<LinComb<K>> {
        let mut v = SparseVec::new();
        for (k, c) in y.iter() {
            let i = *self.rows.get(k)?;
            v.insert(i, c.clone());
        }
        let comb = self.echelon.solve(&v)?;
        Some(
            comb.into_iter()
                .map(|(j, c)| (self.columns[j].clone(), c))
                .collect(),
        )
    }

    /// A kernel element with small random integer coordinates in the kernel basis.
    pub fn random_kernel_element(&self, rng: &mut ChaCha8Rng) -> LinComb<K> {
        let mut out = LinComb::zero();
        for k in &self.kernel {
            let r: i64 = rng.gen_range(-2..=2);
            if r == 0 {
                continue;
            }
            for (j, c) in k {
                out.add_term(self.columns[*j].clone(), c * int(r));
            }
        }
        out
    }
}

/// How a lift picks one solution among many.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LiftStrategy {
    /// The solution with every free column set to zero.
    FirstPivot,
    /// The first-pivot solution plus a pseudo-random kernel element.
    Perturbed { seed: u64 },
}

type Base<'a, S, T> = Box<
    dyn Fn(&<S as FreeBimoduleComplex>::Gen) -> Result<LinComb<<T as BimoduleComplex>::Key>>
        + Send
        + Sync
        + 'a,
>;

type SeedFn<'a, S, T> = Box<
    dyn Fn(&<S as FreeBimoduleComplex>::Gen) -> Option<LinComb<<T as BimoduleComplex>::Key>>
        + Send
        + Sync
        + 'a,
>;

type Contraction<'a, T> = Box<
    dyn Fn(&LinComb<<T as BimoduleComplex>::Key>) -> Result<LinComb<<T as BimoduleComplex>::Key>>
        + Send
        + Sync
        + 'a,
>;

/// A chain map out of a free complex, computed on demand generator by generator
/// by solving `d ∘ f_n = f_{n-1} ∘ d`.
pub struct Lift<'a, S: FreeBimoduleComplex, T: BimoduleComplex> {
    source: &'a S,
    target: &'a T,
    base: Base<'a, S, T>,
    strategy: LiftStrategy,
    seeds: Option<SeedFn<'a, S, T>>,
    contraction: Option<Contraction<'a, T>>,
    equivariant: Option<u32>,
    values: RwLock<HashMap<S::Gen, LinComb<T::Key>>>,
    solvers: RwLock<HashMap<(usize, u32), Arc<DegreeSolver<T::Key>>>>,
    seed_conflicts: Mutex<Vec<S::Gen>>,
}

impl<'a, S: FreeBimoduleComplex, T: BimoduleComplex> Lift<'a, S, T> {
    /// `base` gives the values on generators of homological degree 0.
    pub fn new<F>(source: &'a S, target: &'a T, base: F, strategy: LiftStrategy) -> Self
    where
        F: Fn(&S::Gen) -> Result<LinComb<T::Key>> + Send + Sync + 'a,
    {
        Lift {
            source,
            target,
            base: Box::new(base),
            strategy,
            seeds: None,
            contraction: None,
            equivariant: None,
            values: RwLock::new(HashMap::new()),
            solvers: RwLock::new(HashMap::new()),
            seed_conflicts: Mutex::new(Vec::new()),
        }
    }

    /// Proposed values that are used when they satisfy the lifting equation and
    /// recorded as conflicts otherwise.
    pub fn with_seeds(self, seeds: HashMap<S::Gen, LinComb<T::Key>>) -> Self {
        self.with_seed_fn(move |g| seeds.get(g).cloned())
    }

    pub fn with_seed_fn<F>(mut self, seeds: F) -> Self
    where
        F: Fn(&S::Gen) -> Option<LinComb<T::Key>> + Send + Sync + 'a,
    {
        self.seeds = Some(Box::new(seeds));
        self
    }

    /// Uses `h(required boundary)` instead of a linear solve, where `h` is a
    /// contracting homotopy of the target (`d h + h d = id` in positive degrees).
    pub fn with_contraction<F>(mut self, h: F) -> Self
    where
        F: Fn(&LinComb<T::Key>) -> Result<LinComb<T::Key>> + Send + Sync + 'a,
    {
        self.contraction = Some(Box::new(h));
        self
    }

    /// Solves for all generators of a homological degree with internal degree at most
    /// `max_ideg` at once, subject to `f(t·g) = t·f(g)`, so that the lift commutes
    /// with t.
    pub fn equivariant(mut self, max_ideg: u32) -> Self {
        self.equivariant = Some(max_ideg);
        self
    }

    /// Fixes a value without checking; used for values known in closed form.
    pub fn preset(&self, gen: S::Gen, value: LinComb<T::Key>) {
        self.values.write().unwrap().insert(gen, value);
    }

    pub fn seed_conflicts(&self) -> Vec<S::Gen> {
        self.seed_conflicts.lock().unwrap().clone()
    }

    pub fn source(&self) -> &S {
        self.source
    }

    pub fn target(&self) -> &T {
        self.target
    }

    fn solver(&self, hdeg: usize, ideg: u32) -> Result<Arc<DegreeSolver<T::Key>>> {
        if let Some(s) = self.solvers.read().unwrap().get(&(hdeg, ideg)) {
            return Ok(s.clone());
        }
        let s = Arc::new(DegreeSolver::new(self.target, hdeg, ideg)?);
        self.solvers
            .write()
            .unwrap()
            .insert((hdeg, ideg), s.clone());
        Ok(s)
    }

    /// What `d(f(gen))` has to equal.
    pub fn required_boundary(&self, gen: &S::Gen) -> Result<LinComb<T::Key>> {
        let d = self.source.differential(&self.source.gen_key(gen))?;
        apply_on_generators(self.source, self.target, &d, |g| self.value(g))
    }

    pub fn value(&self, gen: &S::Gen) -> Result<LinComb<T::Key>> {
        if let Some(v) = self.values.read().unwrap().get(gen) {
            return Ok(v.clone());
        }
        let n = self.source.gen_hdeg(gen);
        let value = if n == 0 {
            (self.base)(gen)?
        } else {
            let rhs = self.required_boundary(gen)?;
            let seeded = match self.seeds.as_ref().and_then(|f| f(gen)) {
                Some(seed) => {
                    if differential_element(self.target, &seed)? == rhs {
                        Some(seed)
                    } else {
                        self.seed_conflicts.lock().unwrap().push(gen.clone());
                        None
                    }
                }
                None => None,
            };
            match (seeded, &self.contraction) {
                (Some(v), _) => v,
                (None, _) if self.equivariant.is_some() => {
                    let max = self.equivariant.unwrap();
                    let e = self.source.gen_ideg(gen);
                    if e > max {
                        return Err(Error::Truncation { degree: e, limit: max });
                    }
                    self.solve_equivariant(n, max)?;
                    return self.values.read().unwrap().get(gen).cloned().ok_or_else(|| {
                        Error::Unsolvable(format!("no equivariant value at generator {gen:?}"))
                    });
                }
                (None, Some(h)) => {
                    let x = h(&rhs)?;
                    if differential_element(self.target, &x)? != rhs {
                        return Err(Error::Unsolvable(format!(
                            "contraction does not give a lift at generator {gen:?}"
                        )));
                    }
                    x
                }
                (None, None) => {
                    let e = self.source.gen_ideg(gen);
                    let solver = self.solver(n, e)?;
                    let mut x = solver.solve(&rhs).ok_or(Error::Exactness { hdeg: n, ideg: e })?;
                    if let LiftStrategy::Perturbed { seed } = self.strategy {
                        let mut h = std::collections::hash_map::DefaultHasher::new();
                        format!("{gen:?}").hash(&mut h);
                        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ h.finish());
                        x.add_assign(&solver.random_kernel_element(&mut rng));
                    }
                    if differential_element(self.target, &x)? != rhs {
                        return Err(Error::Unsolvable(format!(
                            "lift check failed at generator {gen:?}"
                        )));
                    }
                    x
                }
            }
        };
        self.values
            .write()
            .unwrap()
            .insert(gen.clone(), value.clone());
        Ok(value)
    }

    /// Values on every generator of homological degree `n` and internal degree at
    /// most `max_ideg`, solving `d f(g) = f(d g)` and `f(t·g) = t·f(g)` together.
    fn solve_equivariant(&self, n: usize, max_ideg: u32) -> Result<()> {
        let mut gens = Vec::new();
        for e in 0..=max_ideg {
            gens.extend(self.source.generators(n, e)?);
        }
        let index: HashMap<&S::Gen, usize> = gens.iter().enumerate().map(|(i, g)| (g, i)).collect();
        let mut columns = Vec::new();
        for g in &gens {
            columns.push(self.target.basis(n, self.source.gen_ideg(g))?);
        }
        // Slot 0: unknowns, 1: boundary equations, 2: equivariance equations.
        let mut vars = Vec::new();
        let mut images: Vec<LinComb<(u8, usize, T::Key)>> = Vec::new();
        let mut offsets = Vec::new();
        for (i, cols) in columns.iter().enumerate() {
            offsets.push(vars.len());
            for col in cols {
                let mut image: LinComb<(u8, usize, T::Key)> = self
                    .target
                    .differential(col)?
                    .map_keys(|k| (1, i, k.clone()));
                image.sub_assign(&self.target.twist(1, col)?.map_keys(|k| (2, i, k.clone())));
                vars.push((0u8, i, col.clone()));
                images.push(image);
            }
        }
        let mut rhs: LinComb<(u8, usize, T::Key)> = LinComb::zero();
        for (i, g) in gens.iter().enumerate() {
            rhs.add_assign(&self.required_boundary(g)?.map_keys(|k| (1, i, k.clone())));
            let tg = self.source.twist(1, &self.source.gen_key(g))?;
            for (key, c) in tg.iter() {
                let (a, h, b) = self.source.split(key);
                match index.get(&h) {
                    // x_i appears in equation i through `Σ c·a·x_j·b`.
                    Some(&j) => {
                        for (k, col) in columns[j].iter().enumerate() {
                            let moved = self.target.act(&a, col, &b)?;
                            images[offsets[j] + k].add_scaled(&moved.map_keys(|m| (2, i, m.clone())), c);
                        }
                    }
                    None => {
                        let v = act_element(self.target, &a, &self.value(&h)?, &b)?;
                        rhs.add_scaled(&v.map_keys(|k| (2, i, k.clone())), &-c.clone());
                    }
                }
            }
        }
        let solver = DegreeSolver::from_images(vars, &images);
        let mut x = solver.solve(&rhs).ok_or_else(|| {
            Error::Unsolvable(format!(
                "no t-equivariant lift in homological degree {n} up to internal degree {max_ideg}"
            ))
        })?;
        if let LiftStrategy::Perturbed { seed } = self.strategy {
            let mut rng = ChaCha8Rng::seed_from_u64(seed ^ n as u64);
            x.add_assign(&solver.random_kernel_element(&mut rng));
        }
        let mut values = vec![LinComb::zero(); gens.len()];
        for ((_, i, k), c) in x.iter() {
            values[*i].add_term(k.clone(), c.clone());
        }
        for (g, v) in gens.iter().zip(values) {
            let d = differential_element(self.target, &v)?;
            if d != self.required_boundary(g)? {
                return Err(Error::Unsolvable(format!("equivariant lift check failed at {g:?}")));
            }
            self.values.write().unwrap().insert(g.clone(), v);
        }
        Ok(())
    }

    /// Applies the lift to an element of the source.
    pub fn apply(&self, e: &LinComb<S::Key>) -> Result<LinComb<T::Key>> {
        apply_on_generators(self.source, self.target, e, |g| self.value(g))
    }

    /// Computes every generator value in the window and freezes them.
    pub fn materialize(&self, max_hdeg: usize, max_ideg: u32) -> Result<ChainMapData<S::Gen, T::Key>> {
        let mut values = BTreeMap::new();
        for n in 0..=max_hdeg {
            for e in 0..=max_ideg {
                for g in self.source.generators(n, e)? {
                    values.insert(g.clone(), self.value(&g)?);
                }
            }
        }
        Ok(ChainMapData {
            values,
            max_hdeg,
            max_ideg,
            verified: true,
        })
    }
}

/// Values of a chain map on the generators of a free complex within a window.
#[derive(Clone, Debug)]
pub struct ChainMapData<G: Ord, K: Ord> {
    pub values: BTreeMap<G, LinComb<K>>,
    pub max_hdeg: usize,
    pub max_ideg: u32,
    /// Set when `d ∘ f = f ∘ d` was checked on every generator in the window.
    pub verified: bool,
}

impl<G: Ord + Clone + Debug, K: Ord + Clone> ChainMapData<G, K> {
    pub fn value(&self, g: &G) -> Result<LinComb<K>> {
        self.values
            .get(g)
            .cloned()
            .ok_or_else(|| Error::Degree(format!("generator {g:?} is outside the computed window")))
    }
}

/// Lifts a map given in homological degree 0 to a chain map on the window.
pub fn lift_chain_map<S, T, F>(
    source: &S,
    target: &T,
    base: F,
    max_hdeg: usize,
    max_ideg: u32,
    strategy: LiftStrategy,
) -> Result<ChainMapData<S::Gen, T::Key>>
where
    S: FreeBimoduleComplex,
    T: BimoduleComplex,
    F: Fn(&S::Gen) -> Result<LinComb<T::Key>> + Send + Sync,
{
    let lift = Lift::new(source, target, base, strategy);
    lift.materialize(max_hdeg, max_ideg)
}

/// Checks `d(f(g)) = f(d(g))` on every generator in the window, returning the first
/// generator where it fails.
pub fn check_chain_map<S, T, F>(
    source: &S,
    target: &T,
    f: F,
    max_hdeg: usize,
    max_ideg: u32,
) -> Result<Option<S::Gen>>
where
    S: FreeBimoduleComplex,
    T: BimoduleComplex,
    F: Fn(&S::Gen) -> Result<LinComb<T::Key>>,
{
    for n in 1..=max_hdeg {
        for e in 0..=max_ideg {
            for g in source.generators(n, e)? {
                let lhs = differential_element(target, &f(&g)?)?;
                let d = source.differential(&source.gen_key(&g))?;
                let rhs = apply_on_generators(source, target, &d, &f)?;
                if lhs != rhs {
                    return Ok(Some(g));
                }
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug)]
pub enum HomotopyOutcome<G: Ord, K: Ord> {
    /// `f - g = d h + h d` on every generator in the window. `exhaustive` is set when
    /// the window contains every generator of the source.
    Found {
        homotopy: BTreeMap<G, LinComb<K>>,
        exhaustive: bool,
    },
    /// No homotopy exists: the equation has no solution at this generator.
    NotHomotopic { hdeg: usize, generator: G },
    /// A computation needed for the decision exceeded the truncation.
    Inconclusive { reason: String },
}

impl<G: Ord, K: Ord> HomotopyOutcome<G, K> {
    pub fn is_found(&self) -> bool {
        matches!(self, HomotopyOutcome::Found { .. })
    }
}

/// Searches for a homotopy `h` with `f - g = d∘h + h∘d` generator by generator.
pub fn find_homotopy<S, T, F, G>(
    source: &S,
    target: &T,
    f: F,
    g: G,
    max_hdeg: usize,
    max_ideg: u32,
) -> Result<HomotopyOutcome<S::Gen, T::Key>>
where
    S: FreeBimoduleComplex,
    T: BimoduleComplex,
    F: Fn(&S::Gen) -> Result<LinComb<T::Key>>,
    G: Fn(&S::Gen) -> Result<LinComb<T::Key>>,
{
    let mut h: BTreeMap<S::Gen, LinComb<T::Key>> = BTreeMap::new();
    let mut solvers: HashMap<(usize, u32), DegreeSolver<T::Key>> = HashMap::new();
    let truncated = |e: Error| -> Result<HomotopyOutcome<S::Gen, T::Key>> {
        match e {
            Error::Truncation { degree, limit } => Ok(HomotopyOutcome::Inconclusive {
                reason: format!("internal degree {degree} exceeds truncation {limit}"),
            }),
            other => Err(other),
        }
    };
    for n in 0..=max_hdeg {
        for e in 0..=max_ideg {
            let gens = match source.generators(n, e) {
                Ok(v) => v,
                Err(err) => return truncated(err),
            };
            for gen in gens {
                let mut step = || -> Result<Option<LinComb<T::Key>>> {
                    let mut rhs = f(&gen)?.minus(&g(&gen)?);
                    if n > 0 {
                        let d = source.differential(&source.gen_key(&gen))?;
                        let hd = apply_on_generators(source, target, &d, |x| {
                            Ok(h.get(x).cloned().unwrap_or_default())
                        })?;
                        rhs.sub_assign(&hd);
                    }
                    if rhs.is_zero() {
                        return Ok(Some(LinComb::zero()));
                    }
                    if !solvers.contains_key(&(n + 1, e)) {
                        solvers.insert((n + 1, e), DegreeSolver::new(target, n + 1, e)?);
                    }
                    let x = solvers[&(n + 1, e)].solve(&rhs);
                    if let Some(x) = &x {
                        if differential_element(target, x)? != rhs {
                            return Err(Error::Unsolvable("homotopy check failed".into()));
                        }
                    }
                    Ok(x)
                };
                match step() {
                    Ok(Some(x)) => {
                        h.insert(gen, x);
                    }
                    Ok(None) => {
                        return Ok(HomotopyOutcome::NotHomotopic {
                            hdeg: n,
                            generator: gen,
                        })
                    }
                    Err(err) => return truncated(err),
                }
            }
        }
    }
    Ok(HomotopyOutcome::Found {
        homotopy: h,
        exhaustive: source.within_window(max_hdeg, max_ideg),
    })
}

/// `Σ_i c_i · value_i` helper for building generator values by hand.
pub fn combination<K: Ord + Clone>(terms: &[(K, Scalar)]) -> LinComb<K> {
    terms.iter().cloned().collect()
}
