mod common;

use common::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use superwpt::bimodule::*;
use superwpt::catalog::*;
use superwpt::cohomology::*;
use superwpt::exactla::{rank, to_dense, Rat, RatVec};
use superwpt::superalg::*;

fn dense(mu: &Cocycle, i: usize, j: usize) -> RatVec {
    to_dense(mu.value(i, j), mu.module_dim())
}

#[test]
fn split_null_extension_has_zero_cocycle_and_zero_corrections() {
    for j in [build_k10(), build_dt(&r(2)), build_k3()] {
        let m = regular_bimodule(&j);
        let e = split_null_extension(&m).unwrap();
        let x = extract_cocycle(&e.algebra, &e.radical(), None).unwrap();
        assert!(x.cocycle.is_zero());
        assert_eq!(x.base, j);
        match solve_splitting(&e.algebra, &e.radical()).unwrap() {
            SplittingResult::Split(s) => {
                assert!(s.corrections.iter().flatten().all(Rat::is_zero));
                assert!(verify_splitting(&e.algebra, &e.radical(), &s).unwrap().holds);
            }
            SplittingResult::Obstructed(_) => panic!("split null extension obstructed"),
        }
    }
}

#[test]
fn extracted_counterexample_cocycles() {
    for t in [r(0), r(1), r(2), Rat::new(-7, 3)] {
        let cx = counterexample_dt(&t);
        let x = extract_cocycle(&cx.algebra, &cx.radical, None).unwrap();
        assert_eq!(x.base.names(), ["e1", "e2", "x", "y"]);
        assert_eq!(x.module.names(), ["a1", "a2", "v", "w"]);
        for i in 0..4 {
            for j in 0..4 {
                let expect = if (i, j) == (2, 3) || (i, j) == (3, 2) {
                    let s = if i == 2 { r(1) } else { r(-1) };
                    vec![s.clone(), &s * &(r(-2) - &t), r(0), r(0)]
                } else {
                    vec![r(0); 4]
                };
                assert_eq!(dense(&x.cocycle, i, j), expect, "({i},{j}) t={t}");
            }
        }
    }
    let cx = counterexample_superform_odd(3, 1).unwrap();
    let x = extract_cocycle(&cx.algebra, &cx.radical, None).unwrap();
    let (w1, w2) = (x.base.index("w1").unwrap(), x.base.index("w2").unwrap());
    let top = x.module.index_of("[v1v2v3]").unwrap();
    assert_eq!(x.cocycle.value(w1, w2), &vec![(top, r(1))]);
}

#[test]
fn coboundary_of_zero_map_is_zero() {
    let m = regular_bimodule(&build_k10());
    let f = vec![vec![Rat::zero(); 10]; 10];
    assert!(coboundary(&m, &f).unwrap().is_zero());
}

#[test]
fn k10_odd_shift_coboundary() {
    let k = build_k10();
    let m = regular_bimodule(&k);
    let beta = Rat::new(3, 7);
    let mut f = vec![vec![Rat::zero(); 10]; 10];
    for name in ["x1", "x2", "y1", "y2"] {
        let i = k.index_of(name).unwrap();
        f[i][i] = beta.clone();
    }
    let mu = coboundary(&m, &f).unwrap();
    let (x1, x2, y1) = (k.index_of("x1").unwrap(), k.index_of("x2").unwrap(), k.index_of("y1").unwrap());
    let two_beta = &r(2) * &beta;
    let want: RatVec = k.element(&[("e", two_beta.clone()), ("f", &r(-3) * &two_beta)]).unwrap();
    assert_eq!(dense(&mu, x1, y1), want);
    let x1x2: RatVec = k.multiply(&k.basis_vector(x1), &k.basis_vector(x2)).unwrap();
    assert_eq!(dense(&mu, x1, x2), x1x2.iter().map(|c| c * &two_beta).collect::<RatVec>());
}

#[test]
fn coboundary_matrix_of_zero_module_is_zero() {
    let m = SuperBimodule::new(build_k3(), vec![], vec![], vec![]).unwrap();
    let b = coboundary_matrix(&m).unwrap();
    assert!(b.is_zero());
    assert_eq!(h2_dimensions(&m).unwrap(), H2Dimensions { z2: 0, b2: 0, h2: 0 });
}

#[test]
fn h2_of_catalog_pairs() {
    let k = h2_dimensions(&regular_bimodule(&build_k10())).unwrap();
    assert_eq!(k.h2, 0);
    assert!(h2_dimensions(&regular_bimodule(&build_dt(&r(2)))).unwrap().h2 >= 1);
    let hull = regular_bimodule(&build_k3()).over_unital_hull();
    assert_eq!(h2_dimensions(&hull).unwrap().h2, 0);
}

#[test]
fn counterexample_cocycles_are_cocycles_but_not_coboundaries() {
    let cases = [
        counterexample_dt(&r(2)),
        counterexample_superform_odd(3, 1).unwrap(),
    ];
    for cx in cases {
        let x = extract_cocycle(&cx.algebra, &cx.radical, None).unwrap();
        let cond = CocycleConditions::new(&x.module);
        assert!(cond.satisfied_by(&cond.index.coords(&x.cocycle)));
        assert!(!is_coboundary(&x.module, &x.cocycle).unwrap());
    }
}

#[test]
fn cocycle_space_extensions_are_jordan_and_complement_is_not() {
    let mut rng = StdRng::seed_from_u64(11);
    for m in [regular_bimodule(&build_dt(&r(2))), regular_bimodule(&build_k3()).over_unital_hull()] {
        let z = cocycle_space(&m).unwrap();
        for mu in &z {
            let e = build_extension(&m, mu).unwrap();
            assert!(check_super_jordan(&e.algebra).unwrap().holds);
        }
        let cond = CocycleConditions::new(&m);
        let mut broken = 0;
        for _ in 0..5 {
            let coords: RatVec = (0..cond.index.len()).map(|_| rand_rat(&mut rng, 5)).collect();
            if cond.satisfied_by(&coords) {
                continue;
            }
            broken += 1;
            let mu = cond.index.cocycle(&m, &coords).unwrap();
            assert!(!check_super_jordan(&build_extension(&m, &mu).unwrap().algebra).unwrap().holds);
        }
        assert!(broken > 0);
    }
}

#[test]
fn feasibility_matches_rank_test_and_round_trips() {
    let mut rng = StdRng::seed_from_u64(5);
    let m = regular_bimodule(&build_dt(&r(2)));
    let z = cocycle_space(&m).unwrap();
    let b = coboundary_matrix(&m).unwrap();
    let idx = CochainIndex::new(&m);
    let (mut yes, mut no) = (0, 0);
    for _ in 0..12 {
        let mu = combination(&mut rng, &m, &z, 4);
        let e = build_extension(&m, &mu).unwrap();
        let col = superwpt::exactla::RatMat::from_rows(1, idx.coords(&mu).into_iter().map(|c| vec![c]).collect()).unwrap();
        let rank_says = rank(&b.hstack(&col).unwrap()) == rank(&b);
        let result = solve_splitting(&e.algebra, &e.radical()).unwrap();
        assert_eq!(result.is_split(), rank_says);
        match result {
            SplittingResult::Split(s) => {
                yes += 1;
                assert!(verify_splitting(&e.algebra, &e.radical(), &s).unwrap().holds);
            }
            SplittingResult::Obstructed(o) => {
                no += 1;
                let x = extract_cocycle(&e.algebra, &e.radical(), None).unwrap();
                assert!(o.verify(&SplittingSystem::new(&x)));
            }
        }
    }
    assert!(no > 0);
    let _ = yes;
}

#[test]
fn perturbed_corrections_fail_with_pair_witness() {
    let mut rng = StdRng::seed_from_u64(3);
    let k = build_k10();
    let m = regular_bimodule(&k);
    let mu = coboundary(&m, &rand_graded_map(&mut rng, &m, 10)).unwrap();
    let e = build_extension(&m, &mu).unwrap();
    let n = e.radical();
    let SplittingResult::Split(mut s) = solve_splitting(&e.algebra, &n).unwrap() else { panic!("obstructed") };
    let x1 = k.index_of("x1").unwrap();
    let target = 10 + x1;
    s.corrections[x1][target] += r(1);
    let rep = verify_splitting(&e.algebra, &n, &s).unwrap();
    assert!(!rep.holds);
    assert_eq!(rep.witness.unwrap().indices.len(), 2);
}

#[test]
fn section_choice_does_not_change_verdict() {
    let mut rng = StdRng::seed_from_u64(9);
    for cx in [counterexample_dt(&r(1)), counterexample_dt(&r(-1))] {
        let n = &cx.radical;
        let x = extract_cocycle(&cx.algebra, n, None).unwrap();
        let shifted: Vec<RatVec> = x
            .section
            .iter()
            .enumerate()
            .map(|(i, s)| {
                let mut v = s.clone();
                for (b, &p) in n.basis().iter().zip(n.pivots()) {
                    if cx.algebra.parity(p) == x.base.parity(i) && rng.gen_bool(0.7) {
                        let c = rand_rat(&mut rng, 6);
                        for (a, y) in v.iter_mut().zip(b) {
                            *a += &c * y;
                        }
                    }
                }
                v
            })
            .collect();
        let y = extract_cocycle(&cx.algebra, n, Some(&shifted)).unwrap();
        assert_ne!(x.cocycle, y.cocycle);
        assert_eq!(solve_extracted(&x).0.is_split(), solve_extracted(&y).0.is_split());
        assert_eq!(x.base, y.base);
    }
}

#[test]
fn non_ideal_and_non_square_zero_are_rejected() {
    let k = build_k10();
    let n = Subspace::coordinate(10, &[0]);
    assert!(extract_cocycle(&k, &n, None).is_err());
    let d = build_dt(&r(2));
    assert!(solve_splitting(&d, &Subspace::whole(4)).is_err());
}

#[test]
fn superform_boundary() {
    let j = build_superform(3, 1).unwrap();
    let m = clifford_quotient_bimodule_u(3, 1, 2).unwrap();
    assert_eq!(m.base(), &j);
    assert_eq!(h2_dimensions(&m).unwrap().h2, 0);
    let e = split_null_extension(&m).unwrap();
    assert!(solve_splitting(&e.algebra, &e.radical()).unwrap().is_split());
    assert!(clifford_quotient_bimodule(3, 1, 2).is_err());
    let cx = counterexample_superform_odd(3, 1).unwrap();
    assert!(!solve_splitting(&cx.algebra, &cx.radical).unwrap().is_split());
}
