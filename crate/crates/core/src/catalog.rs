//! Concrete superalgebras: `K10`, `D_t`, `K3` and its unital hull, superform
//! algebras, and three families of non-split extensions.

use crate::bimodule::{
    build_extension, clifford_quotient_bimodule, clifford_quotient_bimodule_u, regular_bimodule, CWMonomial,
    Cocycle,
};
use crate::error::{Error, Result};
use crate::exactla::{to_dense, Rat};
use crate::superalg::{q, AlgebraBuilder, Subspace, SuperAlgebra};

fn r(n: i64) -> Rat {
    Rat::from_int(n)
}

/// The ten-dimensional Kac superalgebra with even part `e, v1..v4, f` and odd
/// part `x1, x2, y1, y2`; unit `e + f`.
pub fn build_k10() -> SuperAlgebra {
    let mut b = AlgebraBuilder::new(&["e", "v1", "v2", "v3", "v4", "f"], &["x1", "x2", "y1", "y2"]);
    let half = q(1, 2);
    (|| -> Result<()> {
        b.set_super("e", "e", &[("e", r(1))])?;
        for v in ["v1", "v2", "v3", "v4"] {
            b.set_super("e", v, &[(v, r(1))])?;
        }
        b.set_super("f", "f", &[("f", r(1))])?;
        b.set_super("v1", "v2", &[("e", r(2))])?;
        b.set_super("v3", "v4", &[("e", r(2))])?;
        for x in ["x1", "x2", "y1", "y2"] {
            b.set_super("e", x, &[(x, half.clone())])?;
            b.set_super("f", x, &[(x, half.clone())])?;
        }
        b.set_super("y1", "v1", &[("x2", r(1))])?;
        b.set_super("y2", "v1", &[("x1", r(-1))])?;
        b.set_super("x1", "v2", &[("y2", r(-1))])?;
        b.set_super("x2", "v2", &[("y1", r(1))])?;
        b.set_super("x2", "v3", &[("x1", r(1))])?;
        b.set_super("y1", "v3", &[("y2", r(1))])?;
        b.set_super("x1", "v4", &[("x2", r(1))])?;
        b.set_super("y2", "v4", &[("y1", r(1))])?;
        b.set_super("x1", "x2", &[("v1", r(1))])?;
        b.set_super("x1", "y2", &[("v3", r(1))])?;
        b.set_super("x2", "y1", &[("v4", r(1))])?;
        b.set_super("y1", "y2", &[("v2", r(1))])?;
        b.set_super("x1", "y1", &[("e", r(1)), ("f", r(-3))])?;
        b.set_super("x2", "y2", &[("e", r(1)), ("f", r(-3))])?;
        b.unit(&[("e", r(1)), ("f", r(1))]);
        Ok(())
    })()
    .expect("static table");
    b.build().expect("static table")
}

/// `D_t`: even `e1, e2`, odd `x, y`, with `xy = -yx = e1 + t e2`; unit `e1 + e2`.
pub fn build_dt(t: &Rat) -> SuperAlgebra {
    let mut b = AlgebraBuilder::new(&["e1", "e2"], &["x", "y"]);
    let half = q(1, 2);
    (|| -> Result<()> {
        for e in ["e1", "e2"] {
            b.set_super(e, e, &[(e, r(1))])?;
            b.set_super(e, "x", &[("x", half.clone())])?;
            b.set_super(e, "y", &[("y", half.clone())])?;
        }
        b.set_super("x", "y", &[("e1", r(1)), ("e2", t.clone())])?;
        b.unit(&[("e1", r(1)), ("e2", r(1))]);
        Ok(())
    })()
    .expect("static table");
    b.build().expect("static table")
}

/// `K3`: even `e`, odd `x, y`, with `xy = -yx = e`. Not unital.
pub fn build_k3() -> SuperAlgebra {
    let mut b = AlgebraBuilder::new(&["e"], &["x", "y"]);
    let half = q(1, 2);
    (|| -> Result<()> {
        b.set_super("e", "e", &[("e", r(1))])?;
        b.set_super("e", "x", &[("x", half.clone())])?;
        b.set_super("e", "y", &[("y", half.clone())])?;
        b.set_super("x", "y", &[("e", r(1))])?;
        Ok(())
    })()
    .expect("static table");
    b.build().expect("static table")
}

/// `K3` with an adjoined unit `1`.
pub fn build_k3_hull() -> SuperAlgebra {
    build_k3().unital_hull()
}

/// Superalgebra of a superform: `1, v1..vn` even, `w1..w2m` odd, with
/// `v_i v_j = delta_ij 1` and `w_{2p-1} w_{2p} = 1 = -w_{2p} w_{2p-1}`.
pub fn build_superform(n: usize, m: usize) -> Result<SuperAlgebra> {
    if n < 2 || m < 1 {
        return Err(Error::Precondition("superform needs n >= 2 and m >= 1".into()));
    }
    let mut even = vec!["1".to_string()];
    even.extend((1..=n).map(|i| format!("v{i}")));
    let odd: Vec<String> = (1..=2 * m).map(|p| format!("w{p}")).collect();
    let mut b = AlgebraBuilder::new(&even, &odd);
    for x in even.iter().chain(&odd) {
        b.set_super("1", x, &[(x.as_str(), r(1))])?;
    }
    for v in &even[1..] {
        b.set_super(v, v, &[("1", r(1))])?;
    }
    for p in 1..=m {
        b.set_super(&format!("w{}", 2 * p - 1), &format!("w{}", 2 * p), &[("1", r(1))])?;
    }
    b.unit(&[("1", r(1))]);
    b.build()
}

/// An algebra from the catalog together with a distinguished square-zero ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct CatalogExtension {
    pub algebra: SuperAlgebra,
    pub radical: Subspace,
    /// Set when the parameters fall outside the range where the extension is
    /// known not to split.
    pub warning: Option<String>,
}

/// Eight-dimensional extension of `D_t` by its regular module (renamed
/// `a1, a2 | v, w`) twisted by `mu(x, y) = a1 + (-2 - t) a2`.
pub fn counterexample_dt(t: &Rat) -> CatalogExtension {
    let dt = build_dt(t);
    let m = regular_bimodule(&dt).renamed(&["a1", "a2", "v", "w"]).expect("four names");
    let mut mu = Cocycle::zero(&m);
    let val = vec![r(1), r(-2) - t, Rat::zero(), Rat::zero()];
    mu.set(2, 3, &val).expect("even value on an odd pair");
    let ext = build_extension(&m, &mu).expect("sizes match");
    let warning = (*t == r(-1)).then(|| "t = -1: this extension splits".to_string());
    CatalogExtension { radical: ext.radical(), algebra: ext.algebra, warning }
}

fn superform_counterexample(n: usize, m: usize, u: bool) -> Result<CatalogExtension> {
    let module = if u { clifford_quotient_bimodule_u(n, m, n as u32)? } else { clifford_quotient_bimodule(n, m, n as u32)? };
    let top = CWMonomial::new(u, vec![1; n], vec![0; 2 * m])?;
    let t = module.index_of(&top.name()).expect("top monomial lies in the window");
    let mut mu = Cocycle::zero(&module);
    let base = module.base();
    let (w1, w2) = (base.index("w1")?, base.index("w2")?);
    mu.set(w1, w2, &to_dense(&vec![(t, Rat::one())], module.dim()))?;
    let ext = build_extension(&module, &mu)?;
    Ok(CatalogExtension { radical: ext.radical(), algebra: ext.algebra, warning: None })
}

/// Superform algebra extended by `C_n / C_{n-2}` with `w1 w2 = 1 + v1...vn`
/// (`n` odd).
pub fn counterexample_superform_odd(n: usize, m: usize) -> Result<CatalogExtension> {
    if n < 3 || n % 2 == 0 || m < 1 {
        return Err(Error::Precondition("needs odd n >= 3 and m >= 1".into()));
    }
    superform_counterexample(n, m, false)
}

/// Superform algebra extended by `u C_n / u C_{n-2}` with
/// `w1 w2 = 1 + u v1...vn` (`n` even).
pub fn counterexample_superform_even(n: usize, m: usize) -> Result<CatalogExtension> {
    if n < 2 || n % 2 == 1 || m < 1 {
        return Err(Error::Precondition("needs even n >= 2 and m >= 1".into()));
    }
    superform_counterexample(n, m, true)
}
