//! One PASS/FAIL line per acceptance criterion.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use braidcoh_core::algebra::{Algebra, Word};
use braidcoh_core::bar::{verify_dec_splits, BarComplex};
use braidcoh_core::braided::{braid_at, braid_blocks, check_bimonoid_axioms, tensor_of};
use braidcoh_core::cup::{CochainFunctional, ComparisonOptions, CommutativityReport, CupEngine};
use braidcoh_core::duoidal::verify_coduoid;
use braidcoh_core::lifting::{HomotopyOutcome, LiftStrategy};
use braidcoh_core::resolution::{cohomology_dims, validate, FreeBimoduleResolution};
use braidcoh_core::scalar::{int, one, ratio, zero, Scalar};

type Check = Result<String, String>;

fn jordan(d: u32) -> FreeBimoduleResolution {
    FreeBimoduleResolution::builtin_jordan(Arc::new(Algebra::jordan(d))).unwrap()
}

fn super_jordan(n: usize, d: u32) -> FreeBimoduleResolution {
    FreeBimoduleResolution::builtin_super_jordan(Arc::new(Algebra::super_jordan(d)), n).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<String, String> {
    let elapsed = start.elapsed();
    ensure(elapsed < limit, || format!("took {elapsed:?}, limit {limit:?}"))?;
    Ok(format!("{:.3}s", elapsed.as_secs_f64()))
}

fn failing_rows(report: &CommutativityReport) -> String {
    report
        .rows
        .iter()
        .filter(|r| !r.pass)
        .take(3)
        .map(|r| r.describe())
        .collect::<Vec<_>>()
        .join("; ")
}

fn criterion_1() -> Check {
    let start = Instant::now();
    let res = jordan(4);
    let bar = BarComplex::new(res.algebra_arc());
    let engine = CupEngine::new(&res, &bar, ComparisonOptions::default());
    let report = engine.verify_braided_commutativity(1, 1).map_err(|e| e.to_string())?;
    ensure(report.passed(), || failing_rows(&report))?;
    let x = res.generator_by_label(1, "x").unwrap();
    let y = res.generator_by_label(1, "y").unwrap();
    let r = res.generator_by_label(2, "r").unwrap();
    let half = ratio(1, 2);
    let mut pairs = 0;
    for a in [x, y] {
        for b in [x, y] {
            let (psi, phi) = (CochainFunctional::dual(a), CochainFunctional::dual(b));
            let expected = phi.value(y) * psi.value(x) - phi.value(x) * psi.value(y)
                + &half * phi.value(x) * psi.value(x);
            let cup = engine.cup_opposite(&psi, &phi).map_err(|e| e.to_string())?.value(r);
            ensure(cup == expected, || {
                format!("({}⌣{})(r) = {cup}, expected {expected}", psi.format(&res), phi.format(&res))
            })?;
            let row = report
                .row(&psi.format(&res), &phi.format(&res), "r")
                .ok_or_else(|| "missing row".to_string())?;
            ensure(row.cup == cup && row.lhs == -cup.clone(), || row.describe())?;
            pairs += 1;
        }
    }
    let t = within(start, Duration::from_secs(1))?;
    Ok(format!("{pairs} dual pairs, L = -cup, {t}"))
}

fn label_x(n: usize) -> String {
    if n == 1 { "x".into() } else { format!("x^{n}") }
}

fn label_y2x(j: usize) -> String {
    match j {
        0 => "y2".into(),
        1 => "y2x".into(),
        _ => format!("y2x^{j}"),
    }
}

/// Expected `(ψ⌣φ)(w)` for dual functionals on the super Jordan resolution.
fn super_jordan_cup(p: usize, q: usize, psi: &str, phi: &str, w: &str) -> Scalar {
    let n = p + q;
    let is = |s: &str, l: String| s == format!("{l}*");
    if p == 0 {
        return if phi == format!("{w}*") { one() } else { zero() };
    }
    if q == 0 {
        return if psi == format!("{w}*") { one() } else { zero() };
    }
    let mut v = zero();
    if w == label_x(n) && is(phi, label_x(q)) && is(psi, label_x(p)) {
        v += one();
    }
    if w == label_y2x(n - 1) {
        if q >= 2 && is(phi, label_y2x(q - 1)) && is(psi, label_x(p)) {
            v += one();
        }
        if p >= 2 && is(phi, label_x(q)) && is(psi, label_y2x(p - 1)) {
            v += if q % 2 == 0 { one() } else { int(-1) };
        }
    }
    v
}

fn criterion_2() -> Check {
    let start = Instant::now();
    let mut rows = 0;
    for n in 1..=6usize {
        let res = super_jordan(n, n as u32 + 2);
        let bar = BarComplex::new(res.algebra_arc());
        let engine = CupEngine::new(&res, &bar, ComparisonOptions::default());
        for p in 0..=n {
            let q = n - p;
            let report = engine.verify_braided_commutativity(p, q).map_err(|e| e.to_string())?;
            ensure(report.passed(), || format!("p={p} q={q}: {}", failing_rows(&report)))?;
            let sign = if p * q % 2 == 0 { one() } else { int(-1) };
            for row in &report.rows {
                let expected = super_jordan_cup(p, q, &row.psi, &row.phi, &row.generator);
                ensure(row.cup == expected && row.lhs == &sign * &expected, || {
                    format!("expected cup {expected}: {}", row.describe())
                })?;
                rows += 1;
            }
        }
    }
    let t = within(start, Duration::from_secs(60))?;
    Ok(format!("{rows} table entries for p+q ≤ 6 match the closed form, {t}"))
}

fn criterion_3() -> Check {
    let j = cohomology_dims(&jordan(7), 5).map_err(|e| e.to_string())?;
    ensure(j == vec![1, 2, 1, 0, 0, 0], || format!("Jordan H = {j:?}"))?;
    let s = cohomology_dims(&super_jordan(6, 7), 5).map_err(|e| e.to_string())?;
    ensure(s == vec![1, 2, 2, 2, 2, 2], || format!("super Jordan H = {s:?}"))?;
    Ok(format!("Jordan {j:?}, super Jordan {s:?}"))
}

fn criterion_4() -> Check {
    let start = Instant::now();
    let mut tensors = 0;
    for alg in [Algebra::jordan(5), Algebra::super_jordan(5)] {
        for n in 1..=4 {
            let splits: Vec<_> = (0..=n).map(|p| (p, n - p)).collect();
            for report in verify_dec_splits(&alg, n, &splits, 5).map_err(|e| e.to_string())? {
                ensure(report.passed(), || {
                    let w = &report.failures[0];
                    format!("p={} q={}: {} fails on {}", w.p, w.q, w.identity, w.tensor)
                })?;
                tensors += report.tensors_checked;
            }
        }
    }
    let t = within(start, Duration::from_secs(120))?;
    Ok(format!("{tensors} (split, tensor) cases on both algebras, {t}"))
}

fn criterion_5() -> Check {
    let res = jordan(6);
    let report = verify_coduoid(&res, 2, 6).map_err(|e| e.to_string())?;
    ensure(report.passed(), || format!("{:?} {:?}", report.obstruction, report.outcome))?;
    match report.outcome {
        HomotopyOutcome::Found { exhaustive, .. } => Ok(format!(
            "homotopy with {} terms (exhaustive: {exhaustive})",
            report.homotopy_size()
        )),
        other => Err(format!("{other:?}")),
    }
}

fn random_element(alg: &Algebra, rng: &mut ChaCha8Rng, max_degree: u32) -> braidcoh_core::algebra::AlgebraElement {
    let d = rng.gen_range(0..=max_degree);
    let basis = alg.graded_basis(d).unwrap();
    basis
        .into_iter()
        .filter_map(|w| {
            let c = rng.gen_range(-2i64..=2);
            (c != 0).then(|| (w, int(c)))
        })
        .collect()
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut braid_cases = 0;
    for alg in [Algebra::jordan(12), Algebra::super_jordan(12)] {
        for _ in 0..120 {
            let e = tensor_of(&[
                random_element(&alg, &mut rng, 4),
                random_element(&alg, &mut rng, 4),
                random_element(&alg, &mut rng, 4),
            ]);
            let b = |e, i| braid_at(&alg, &e, i).unwrap();
            ensure(b(b(b(e.clone(), 0), 1), 0) == b(b(b(e.clone(), 1), 0), 1), || "braid equation".into())?;
            ensure(braid_blocks(&alg, &e, 2).unwrap() == b(b(e.clone(), 1), 0), || "hexagon (uv, w)".into())?;
            ensure(braid_blocks(&alg, &e, 1).unwrap() == b(b(e.clone(), 0), 1), || "hexagon (u, vw)".into())?;
            braid_cases += 1;
        }
        let bimonoid = check_bimonoid_axioms(&alg.with_truncation(10).unwrap(), 5).map_err(|e| e.to_string())?;
        ensure(bimonoid.passed(), || format!("{:?}", bimonoid.failures.first()))?;
        let conf = alg.complete_overlaps(6);
        ensure(conf.confluent, || format!("{} overlaps, not confluent", conf.ambiguities.len()))?;
    }
    for res in [jordan(8), super_jordan(9, 8)] {
        let v = validate(&res, 8).map_err(|e| e.to_string())?;
        ensure(v.passed(), || format!("{}: {:?}", res.name(), v.failures.first()))?;
        ensure(v.minimal, || format!("{} is not minimal", res.name()))?;
    }
    for (res, top) in [(jordan(6), 3usize), (super_jordan(4, 6), 4)] {
        let bar = BarComplex::new(res.algebra_arc());
        let a = CupEngine::new(&res, &bar, ComparisonOptions::default());
        let b = CupEngine::new(
            &res,
            &bar,
            ComparisonOptions { seed_paper_maps: false, g_strategy: LiftStrategy::Perturbed { seed: 11 } },
        );
        for n in 1..=top {
            for p in 0..=n {
                let (ra, rb) = (
                    a.verify_braided_commutativity(p, n - p).map_err(|e| e.to_string())?,
                    b.verify_braided_commutativity(p, n - p).map_err(|e| e.to_string())?,
                );
                ensure(ra.rows == rb.rows, || format!("{} tables differ at p={p}", res.name()))?;
            }
        }
    }
    Ok(format!(
        "{braid_cases} braid/hexagon cases, bimonoid ≤ 5, resolutions ≤ 8 incl. t-equivariance, confluence, two g lifts agree"
    ))
}

fn criterion_7() -> Check {
    let alg = Algebra::super_jordan(10);
    let mut dims = Vec::new();
    for n in 0..=10u32 {
        let brute: BTreeSet<Word> = (0..1u32 << n)
            .map(|bits| Word((0..n).map(|i| ((bits >> i) & 1) as u8).collect()))
            .filter(|w| {
                let s = &w.0;
                !s.windows(2).any(|p| p == [0, 0]) && !s.windows(3).any(|p| p == [1, 1, 0])
            })
            .collect();
        let basis: BTreeSet<Word> = alg.graded_basis(n).unwrap().into_iter().collect();
        ensure(basis.len() == brute.len(), || format!("n={n}: {} vs {}", basis.len(), brute.len()))?;
        ensure(basis == brute, || format!("n={n}: bases differ"))?;
        dims.push(basis.len());
    }
    Ok(format!("dims {dims:?}"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 7] = [
        ("Jordan cup table", criterion_1),
        ("super Jordan commutativity", criterion_2),
        ("cohomology dimensions", criterion_3),
        ("Dec identities", criterion_4),
        ("Jordan coduoid", criterion_5),
        ("property suites", criterion_6),
        ("super Jordan dimensions", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS {}: {name} ({detail})", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}: {name} ({why})", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
