use super::SuperBimodule;
use crate::error::{Error, Result};
use crate::exactla::{Rat, RatMat, RatVec};
use crate::superalg::{IdentityReport, SuperAlgebra};

/// Relation labels used in sl2 witnesses (`indices = [relation as usize, i]`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sl2Relation {
    /// `l_i (XY + YX) = ((1+t)/2)(n - 2i) l_i`
    H = 0,
    /// `l_i X^2 = ((1+t)/2)(i(i-1) - in) l_{i-1}`, zero for `i = 0`
    XSquare = 1,
    /// `l_i Y^2 = ((1+t)/2) l_{i+1}`, zero for `i = n`
    YSquare = 2,
    /// `[X^2, E] = 0`
    XSquareCommutes = 3,
    /// `[Y^2, E] = 0`
    YSquareCommutes = 4,
}

/// Reads `t` off a table shaped like `D_t`: even `e1, e2`, odd `x, y`, `xy = e1 + t e2`.
fn dt_parameter(a: &SuperAlgebra) -> Result<Rat> {
    if a.n_even() != 2 || a.n_odd() != 2 {
        return Err(Error::Precondition("base algebra must have the shape of D_t".into()));
    }
    let xy = a.product_dense(2, 3);
    if !xy[0].is_one() {
        return Err(Error::Precondition("base algebra must satisfy xy = e1 + t e2".into()));
    }
    Ok(xy[1].clone())
}

fn row_times(v: &RatVec, m: &RatMat) -> RatVec {
    m.vec_mul(v).expect("sizes checked")
}

/// Verifies the standard sl2 basis relations for candidate action matrices
/// `X`, `Y` (row-vector convention, `v -> v X`) on a module over `D_t`, with
/// `E` the action of `e1`. The `h` operator is `XY + YX`.
pub fn check_sl2_relations(m: &SuperBimodule, x: &RatMat, y: &RatMat, labels: &[RatVec]) -> Result<IdentityReport> {
    let t = dt_parameter(m.base())?;
    if t == Rat::from_int(-1) {
        return Err(Error::Precondition("t = -1 is excluded".into()));
    }
    let d = m.dim();
    for mat in [x, y] {
        if mat.rows() != d || mat.cols() != d {
            return Err(crate::exactla::DimensionMismatch { expected: d, got: mat.rows() }.into());
        }
    }
    if labels.is_empty() {
        return Err(Error::Precondition("at least one label is needed".into()));
    }
    for l in labels {
        if l.len() != d {
            return Err(crate::exactla::DimensionMismatch { expected: d, got: l.len() }.into());
        }
    }
    let n = labels.len() as i64 - 1;
    let c = (Rat::one() + &t) * Rat::new(1, 2);
    let h = x.mul(y)?.add(&y.mul(x)?)?;
    let x2 = x.mul(x)?;
    let y2 = y.mul(y)?;
    let zero = vec![Rat::zero(); d];
    let scaled = |v: &RatVec, s: &Rat| -> RatVec { v.iter().map(|a| a * s).collect() };
    let diff = |a: RatVec, b: RatVec| -> RatVec { a.iter().zip(&b).map(|(p, q)| p - q).collect() };
    for (i, l) in labels.iter().enumerate() {
        let ii = i as i64;
        let checks = [
            (Sl2Relation::H, row_times(l, &h), scaled(l, &(&c * &Rat::from_int(n - 2 * ii)))),
            (
                Sl2Relation::XSquare,
                row_times(l, &x2),
                if i == 0 { zero.clone() } else { scaled(&labels[i - 1], &(&c * &Rat::from_int(ii * (ii - 1) - ii * n))) },
            ),
            (
                Sl2Relation::YSquare,
                row_times(l, &y2),
                if i as i64 == n { zero.clone() } else { scaled(&labels[i + 1], &c) },
            ),
        ];
        for (rel, got, want) in checks {
            let defect = diff(got, want);
            if defect.iter().any(|a| !a.is_zero()) {
                return Ok(IdentityReport::fail(vec![rel as usize, i], defect));
            }
        }
    }
    let e1 = m.base().basis_vector(0);
    let e = m.action_matrix(&e1)?;
    for (rel, sq) in [(Sl2Relation::XSquareCommutes, &x2), (Sl2Relation::YSquareCommutes, &y2)] {
        let comm = sq.mul(&e)?.sub(&e.mul(sq)?)?;
        if let Some(r) = (0..d).find(|&r| comm.row(r).iter().any(|a| !a.is_zero())) {
            return Ok(IdentityReport::fail(vec![rel as usize, r], comm.row(r).to_vec()));
        }
    }
    Ok(IdentityReport::pass())
}
