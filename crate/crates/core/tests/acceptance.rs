//! End-to-end acceptance criteria. Runs as a plain binary and prints one
//! PASS/FAIL line per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use superwpt::bimodule::*;
use superwpt::catalog::*;
use superwpt::cohomology::*;
use superwpt::exactla::{rank, Rat, RatMat, RatVec};
use superwpt::superalg::*;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn e<T, E: std::fmt::Display>(r: Result<T, E>) -> Result<T, String> {
    r.map_err(|x| x.to_string())
}

fn identity_suite() -> Result<String, String> {
    let mut list = vec![("K10".to_string(), build_k10()), ("K3".into(), build_k3()), ("K3#".into(), build_k3_hull())];
    for t in [r(-1), r(0), r(1), r(2), Rat::new(5, 3)] {
        list.push((format!("D_{t}"), build_dt(&t)));
    }
    list.push(("superform(3,1)".into(), e(build_superform(3, 1))?));
    list.push(("superform(4,1)".into(), e(build_superform(4, 1))?));
    for (name, a) in &list {
        ensure(check_supercommutativity(a).holds, format!("{name}: supercommutativity"))?;
        ensure(e(check_super_jordan(a))?.holds, format!("{name}: super-Jordan"))?;
        ensure(e(check_operator_identity(a))?.holds, format!("{name}: operator identity"))?;
        ensure(e(grassmann_envelope_check(a, 2))?.holds, format!("{name}: envelope"))?;
    }
    Ok(format!("{} algebras, 4 checks each", list.len()))
}

fn counterexamples() -> Result<String, String> {
    let mut cases = Vec::new();
    for t in [0, 1, 2] {
        cases.push((format!("D_{t}"), counterexample_dt(&r(t))));
    }
    cases.push(("superform odd (3,1)".into(), e(counterexample_superform_odd(3, 1))?));
    cases.push(("superform even (4,1)".into(), e(counterexample_superform_even(4, 1))?));
    let mut worst = Duration::ZERO;
    for (name, cx) in &cases {
        let t0 = Instant::now();
        let x = e(extract_cocycle(&cx.algebra, &cx.radical, None))?;
        let SplittingResult::Obstructed(o) = e(solve_splitting(&cx.algebra, &cx.radical))? else {
            return Err(format!("{name}: split"));
        };
        ensure(o.verify(&SplittingSystem::new(&x)), format!("{name}: certificate does not verify"))?;
        let el = t0.elapsed();
        ensure(el < Duration::from_secs(120), format!("{name}: {el:?}"))?;
        worst = worst.max(el);
    }
    Ok(format!("{} obstructions certified, slowest {worst:.2?}", cases.len()))
}

fn k10_splitting() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(2024);
    let k = build_k10();
    let m = regular_bimodule(&k);
    for round in 0..10 {
        let f = rand_graded_map(&mut rng, &m, 10);
        let mu = e(coboundary(&m, &f))?;
        let ext = e(build_extension(&m, &mu))?;
        let n = ext.radical();
        let SplittingResult::Split(s) = e(solve_splitting(&ext.algebra, &n))? else {
            return Err(format!("round {round}: obstructed"));
        };
        ensure(e(verify_splitting(&ext.algebra, &n, &s))?.holds, format!("round {round}: verify"))?;
        let lifts: Vec<RatVec> = (0..k.dim()).map(|i| s.lifted(i)).collect();
        let span = e(Subspace::new(ext.algebra.dim(), &lifts))?;
        for i in 0..k.dim() {
            for j in 0..k.dim() {
                let p = e(ext.algebra.multiply(&lifts[i], &lifts[j]))?;
                let want: RatVec = (0..ext.algebra.dim())
                    .map(|c| k.product(i, j).iter().map(|(l, x)| x * &lifts[*l][c]).sum())
                    .collect();
                ensure(p == want && span.contains(&p), format!("round {round}: constants at ({i},{j})"))?;
            }
        }
    }
    let d = e(h2_dimensions(&m))?;
    ensure(d.h2 == 0, format!("{d:?}"))?;
    Ok(format!("10/10 split with K10 constants; Z2 = B2 = {}, H2 = 0", d.z2))
}

fn superform_boundary() -> Result<String, String> {
    let m = e(clifford_quotient_bimodule_u(3, 1, 2))?;
    let d = e(h2_dimensions(&m))?;
    ensure(d.h2 == 0, format!("r = 2 module: {d:?}"))?;
    let ext = e(split_null_extension(&m))?;
    ensure(e(solve_splitting(&ext.algebra, &ext.radical()))?.is_split(), "zero cocycle obstructed")?;
    ensure(clifford_quotient_bimodule(3, 1, 2).is_err(), "untwisted r = 2 window accepted")?;
    let cx = e(counterexample_superform_odd(3, 1))?;
    ensure(!e(solve_splitting(&cx.algebra, &cx.radical))?.is_split(), "r = n = 3 cocycle split")?;
    Ok(format!("r = 2: Z2 = B2 = {}, H2 = 0; r = n = 3 obstructed", d.z2))
}

fn k3_splitting() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(77);
    let m = regular_bimodule(&build_k3()).over_unital_hull();
    for round in 0..5 {
        let mu = e(coboundary(&m, &rand_graded_map(&mut rng, &m, 10)))?;
        let ext = e(build_extension(&m, &mu))?;
        let n = ext.radical();
        let SplittingResult::Split(s) = e(solve_splitting(&ext.algebra, &n))? else {
            return Err(format!("round {round}: obstructed"));
        };
        ensure(e(verify_splitting(&ext.algebra, &n, &s))?.holds, format!("round {round}: verify"))?;
    }
    Ok("5/5 coboundary extensions of K3# split".into())
}

fn dt_machinery() -> Result<String, String> {
    for t in [0, 2] {
        let d = build_dt(&r(t));
        let m = regular_bimodule(&d);
        let x = e(m.action_matrix(&d.basis_vector(2)))?;
        let y = e(m.action_matrix(&d.basis_vector(3)))?;
        let em = e(m.action_matrix(&d.basis_vector(0)))?;
        for sq in [e(x.mul(&x))?, e(y.mul(&y))?] {
            ensure(e(e(sq.mul(&em))?.sub(&e(em.mul(&sq))?))?.is_zero(), format!("t={t}: commutator"))?;
        }
        ensure(e(check_sl2_relations(&m, &x, &y, &[d.basis_vector(0)]))?.holds, format!("t={t}: n = 0"))?;
        let labels = [d.basis_vector(2), d.basis_vector(3)];
        ensure(e(check_sl2_relations(&m, &x, &y, &labels))?.holds, format!("t={t}: n = 1"))?;
        let scaled = e(check_sl2_relations(&m, &x.scale(&r(2)), &y, &labels))?;
        ensure(!scaled.holds, format!("t={t}: scaled perturbation accepted"))?;
    }
    Ok("commutators vanish; n = 0 passes; scaled n = 1 fails".into())
}

fn oracle_equivalence() -> Result<String, String> {
    let mut count = 0;
    for (n, m, u) in [(2usize, 1usize, false), (3, 1, false), (4, 1, true)] {
        let mut gens: Vec<Generator> = (1..=n).map(Generator::V).collect();
        gens.extend((1..=2 * m).map(Generator::W));
        for deg in 0..=4 {
            for x in monomials(n, m, deg, u) {
                for &g in &gens {
                    let q = e(CWMonomial::generator(n, m, g))?;
                    let mut a = e(symmetric_product_formula(&x, g))?;
                    let mut b = e(symmetric_product(&x, &q))?;
                    a.sort_by(|p, q| p.1.cmp(&q.1));
                    b.sort_by(|p, q| p.1.cmp(&q.1));
                    ensure(a == b, format!("{x} o {g:?}"))?;
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} monomial-generator pairs agree"))
}

fn coherence() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(8);
    let pairs = [
        ("K10", regular_bimodule(&build_k10())),
        ("D_2", regular_bimodule(&build_dt(&r(2)))),
        ("K3#", regular_bimodule(&build_k3()).over_unital_hull()),
    ];
    let mut summary = Vec::new();
    for (name, m) in &pairs {
        let cond = CocycleConditions::new(m);
        let b = e(coboundary_matrix(m))?;
        for c in 0..b.cols() {
            let col: RatVec = (0..b.rows()).map(|x| b[(x, c)].clone()).collect();
            ensure(cond.satisfied_by(&col), format!("{name}: coboundary column {c} not a cocycle"))?;
        }
        let z = e(cocycle_space(m))?;
        for (x, mu) in z.iter().enumerate() {
            let ext = e(build_extension(m, mu))?;
            ensure(e(check_super_jordan(&ext.algebra))?.holds, format!("{name}: Z2 basis element {x}"))?;
        }
        let rb = rank(&b);
        let (mut split, mut obstructed) = (0, 0);
        for _ in 0..20 {
            let mu = if rng.gen_bool(0.5) {
                combination(&mut rng, m, &z, 5)
            } else {
                e(coboundary(m, &rand_graded_map(&mut rng, m, 5)))?
            };
            let col = e(RatMat::from_rows(1, cond.index.coords(&mu).into_iter().map(|c| vec![c]).collect()))?;
            let by_rank = rank(&e(b.hstack(&col))?) == rb;
            let ext = e(build_extension(m, &mu))?;
            let solved = e(solve_splitting(&ext.algebra, &ext.radical()))?.is_split();
            ensure(by_rank == solved, format!("{name}: rank test and solver disagree"))?;
            if solved {
                split += 1;
            } else {
                obstructed += 1;
            }
        }
        summary.push(format!("{name} Z2={} B2={rb} ({split} split/{obstructed} obstructed)", z.len()));
    }
    Ok(summary.join("; "))
}

fn peirce_suite() -> Result<String, String> {
    let k = build_k10();
    let b = |n: &str| k.basis_vector(k.index_of(n).unwrap());
    let p = e(peirce_decomposition(&k, &[b("e"), b("f")]))?;
    ensure(p.report.holds, "K10 relations")?;
    let dims = |p: &PeirceDecomposition| [(0, 0), (1, 1), (0, 1)].map(|(i, j)| p.component(i, j).unwrap().dim());
    ensure(dims(&p) == [5, 1, 4], format!("K10 dims {:?}", dims(&p)))?;
    for t in [r(0), r(2), Rat::new(5, 3)] {
        let d = build_dt(&t);
        let p = e(peirce_decomposition(&d, &[d.basis_vector(0), d.basis_vector(1)]))?;
        ensure(p.report.holds && dims(&p) == [1, 1, 2], format!("D_{t}"))?;
    }
    Ok("K10 (5,1,4), D_t (1,1,2), relations hold".into())
}

fn reductions() -> Result<String, String> {
    let mut rng = StdRng::seed_from_u64(31);
    let h = build_k3().unital_hull();
    ensure(h.unit().is_some() && h.find_unit() == h.unit().cloned(), "hull not unital")?;
    let bases = [(build_k10(), "e"), (build_dt(&r(2)), "e1"), (build_k3_hull(), "1")];
    for round in 0..10 {
        let (j, name) = &bases[round % bases.len()];
        let m = regular_bimodule(j);
        let ext = e(split_null_extension(&m))?;
        let n = ext.radical();
        let mut x = vec![Rat::zero(); ext.algebra.dim()];
        x[ext.base_indices[j.index_of(name).unwrap()]] = r(1);
        for t in 0..m.dim() {
            if m.parity(t) == 0 && rng.gen_bool(0.7) {
                x[ext.module_indices[t]] = rand_rat(&mut rng, 10);
            }
        }
        let l = e(lift_idempotent(&ext.algebra, &x, &n))?;
        ensure(e(ext.algebra.multiply(&l, &l))? == l, format!("round {round}: not idempotent"))?;
        let diff: RatVec = l.iter().zip(&x).map(|(a, b)| a - b).collect();
        ensure(n.contains(&diff), format!("round {round}: not congruent"))?;
    }
    let mut built: Vec<(SuperAlgebra, SuperAlgebra, Subspace)> = Vec::new();
    for t in [0, 1, 2] {
        let cx = counterexample_dt(&r(t));
        built.push((build_dt(&r(t)), cx.algebra, cx.radical));
    }
    for (cx, j) in [
        (e(counterexample_superform_odd(3, 1))?, e(build_superform(3, 1))?),
        (e(counterexample_superform_even(4, 1))?, e(build_superform(4, 1))?),
    ] {
        built.push((j, cx.algebra, cx.radical));
    }
    for j in [build_k10(), build_k3_hull()] {
        let m = if j.dim() == 4 { regular_bimodule(&build_k3()).over_unital_hull() } else { regular_bimodule(&j) };
        let mu = e(coboundary(&m, &rand_graded_map(&mut rng, &m, 10)))?;
        let ext = e(build_extension(&m, &mu))?;
        let n = ext.radical();
        built.push((j, ext.algebra, n));
    }
    for (j, a, n) in &built {
        let q = e(quotient(a, n))?;
        ensure(&q.algebra == j, format!("quotient differs from {:?}", j.names()))?;
    }
    Ok(format!("hull unital; 10 lifts exact; {} quotients match", built.len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, Check, u64); 10] = [
        ("identity suite", identity_suite, 60),
        ("counterexample certification", counterexamples, 5 * 120),
        ("K10 splitting", k10_splitting, 600),
        ("superform boundary", superform_boundary, 900),
        ("K3 splitting", k3_splitting, 60),
        ("D_t sl2 machinery", dt_machinery, 10),
        ("symmetric product oracle", oracle_equivalence, 60),
        ("cohomology coherence", coherence, 900),
        ("Peirce suite", peirce_suite, 5),
        ("reduction machinery", reductions, 30),
    ];
    let mut failed = 0;
    for (i, (name, check, limit)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let out = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let el = t0.elapsed();
        let out = out.and_then(|s| if el.as_secs() < *limit { Ok(s) } else { Err(format!("over {limit}s")) });
        match out {
            Ok(s) => println!("criterion {:>2} {name}: PASS ({el:.2?}, limit {limit}s) {s}", i + 1),
            Err(s) => {
                failed += 1;
                println!("criterion {:>2} {name}: FAIL ({el:.2?}, limit {limit}s) {s}", i + 1);
            }
        }
    }
    println!("acceptance: {}/10 criteria pass", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
