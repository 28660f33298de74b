use superwpt::catalog::*;
use superwpt::exactla::Rat;
use superwpt::superalg::*;

fn r(n: i64) -> Rat {
    Rat::from_int(n)
}

fn all_checks(a: &SuperAlgebra) -> [bool; 4] {
    [
        check_supercommutativity(a).holds,
        check_super_jordan(a).unwrap().holds,
        check_operator_identity(a).unwrap().holds,
        grassmann_envelope_check(a, 2).unwrap().holds,
    ]
}

fn catalog() -> Vec<(String, SuperAlgebra)> {
    let mut v = vec![("K10".to_string(), build_k10()), ("K3".into(), build_k3()), ("K3#".into(), build_k3_hull())];
    for t in [r(-1), r(0), r(1), r(2), Rat::new(5, 3)] {
        v.push((format!("D_{t}"), build_dt(&t)));
    }
    for (n, m) in [(2, 1), (3, 1), (4, 1), (2, 2)] {
        v.push((format!("superform({n},{m})"), build_superform(n, m).unwrap()));
    }
    v
}

#[test]
fn catalog_passes_every_check() {
    for (name, a) in catalog() {
        assert_eq!(all_checks(&a), [true; 4], "{name}");
    }
}

#[test]
fn envelope_with_three_generators_agrees() {
    for (name, a) in catalog().into_iter().filter(|(_, a)| a.dim() <= 7) {
        assert!(grassmann_envelope_check(&a, 3).unwrap().holds, "{name}");
    }
}

#[test]
fn k10_products() {
    let k = build_k10();
    let e = |terms: &[(&str, Rat)]| k.element(terms).unwrap();
    let b = |n: &str| e(&[(n, r(1))]);
    assert_eq!(k.multiply(&b("v1"), &b("v2")).unwrap(), e(&[("e", r(2))]));
    assert_eq!(k.multiply(&b("x1"), &b("y1")).unwrap(), e(&[("e", r(1)), ("f", r(-3))]));
    assert_eq!(k.multiply(&b("e"), &b("f")).unwrap(), vec![Rat::zero(); 10]);
    assert_eq!(k.multiply(&b("y1"), &b("v1")).unwrap(), b("x2"));
    assert_eq!(k.multiply(&b("x2"), &b("v3")).unwrap(), b("x1"));
    assert_eq!(k.unit(), Some(&e(&[("e", r(1)), ("f", r(1))])));
    assert_eq!(k.find_unit(), k.unit().cloned());
}

#[test]
fn dt_k3_superform_products() {
    let d = build_dt(&r(2));
    let x = d.basis_vector(2);
    let y = d.basis_vector(3);
    assert_eq!(d.multiply(&x, &y).unwrap(), d.element(&[("e1", r(1)), ("e2", r(2))]).unwrap());
    assert_eq!(d.multiply(&y, &x).unwrap(), d.element(&[("e1", r(-1)), ("e2", r(-2))]).unwrap());
    assert_eq!(d.multiply(&d.basis_vector(0), &x).unwrap(), d.element(&[("x", Rat::new(1, 2))]).unwrap());

    let k3 = build_k3();
    assert_eq!(k3.unit(), None);
    assert_eq!(k3.find_unit(), None);
    let h = build_k3_hull();
    assert_eq!(h.dim(), 4);
    let one = h.basis_vector(h.index("1").unwrap());
    let hy = h.basis_vector(h.index("y").unwrap());
    assert_eq!(h.multiply(&one, &hy).unwrap(), hy);

    let s = build_superform(3, 1).unwrap();
    let v2 = s.basis_vector(s.index("v2").unwrap());
    assert_eq!(s.multiply(&v2, &v2).unwrap(), s.basis_vector(0));
    let (w1, w2) = (s.basis_vector(4), s.basis_vector(5));
    assert_eq!(s.multiply(&w1, &w2).unwrap(), s.basis_vector(0));
    assert_eq!(s.multiply(&w2, &w1).unwrap(), s.element(&[("1", r(-1))]).unwrap());
    assert!(s.multiply(&s.basis_vector(1), &w1).unwrap().iter().all(Rat::is_zero));
    assert_eq!(s.unit(), Some(&s.basis_vector(0)));
    assert!(build_superform(1, 1).is_err());
}

#[test]
fn corrupted_k10_is_caught() {
    let k = build_k10();
    let (x1, y1) = (k.index("x1").unwrap(), k.index("y1").unwrap());
    let bad = k.with_product(x1, y1, &k.element(&[("e", r(1)), ("f", r(3))]).unwrap()).unwrap();
    let rep = check_supercommutativity(&bad);
    assert_eq!(rep.witness.unwrap().indices, vec![x1, y1]);
    assert!(check_super_jordan(&bad).is_err());

    let (v1, v2) = (k.index("v1").unwrap(), k.index("v2").unwrap());
    let e = k.basis_vector(0);
    let bad = k.with_product(v1, v2, &e).unwrap().with_product(v2, v1, &e).unwrap();
    assert_eq!(all_checks(&bad), [true, false, false, false]);
}

#[test]
fn superform_counterexamples_are_jordan() {
    let odd = counterexample_superform_odd(3, 1).unwrap();
    assert_eq!(odd.algebra.dim(), 38);
    assert!(check_super_jordan(&odd.algebra).unwrap().holds);
    let even = counterexample_superform_even(4, 1).unwrap();
    assert_eq!(even.algebra.dim(), 87);
    assert!(check_super_jordan(&even.algebra).unwrap().holds);
    assert!(counterexample_superform_odd(4, 1).is_err());
    assert!(counterexample_superform_even(3, 1).is_err());
}
