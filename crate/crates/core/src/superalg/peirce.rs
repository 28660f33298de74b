use super::algebra::SuperAlgebra;
use super::identities::IdentityReport;
use super::subspace::{is_ideal, subspace_product, Subspace};
use crate::error::{Error, Result};
use crate::exactla::{kernel_basis, Rat, RatMat, RatVec};

/// Peirce component `J_ij` (indices into the idempotent list, `i <= j`).
#[derive(Clone, Debug, PartialEq)]
pub struct PeirceComponent {
    pub i: usize,
    pub j: usize,
    pub space: Subspace,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PeirceDecomposition {
    pub components: Vec<PeirceComponent>,
    /// Fails with an empty witness if the dimensions do not add up; otherwise
    /// the witness is `[i, j, k, l]` for a product `J_ij J_kl` leaving its
    /// allowed target, with the offending product as defect.
    pub report: IdentityReport,
}

impl PeirceDecomposition {
    pub fn component(&self, i: usize, j: usize) -> Option<&Subspace> {
        let (i, j) = (i.min(j), i.max(j));
        self.components.iter().find(|c| c.i == i && c.j == j).map(|c| &c.space)
    }
}

fn sub(a: &[Rat], b: &[Rat]) -> RatVec {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn eigenspace(a: &SuperAlgebra, conditions: &[(&RatVec, Rat)]) -> Result<Subspace> {
    let d = a.dim();
    // x R_e = lambda x, as (R_e - lambda)^T x^T = 0
    let mut rows = Vec::new();
    for (e, lambda) in conditions {
        let m = a.right_mult_matrix(e)?.sub(&RatMat::identity(d).scale(lambda))?.transpose();
        rows.extend(m.row_vecs());
    }
    let m = RatMat::from_rows(d, rows)?;
    Subspace::new(d, &kernel_basis(&m))
}

/// Peirce decomposition relative to a complete system of orthogonal idempotents.
pub fn peirce_decomposition(a: &SuperAlgebra, idempotents: &[RatVec]) -> Result<PeirceDecomposition> {
    let d = a.dim();
    if idempotents.is_empty() {
        return Err(Error::Precondition("no idempotents given".into()));
    }
    for e in idempotents {
        a.check_len(e)?;
        if a.homogeneous_parity(e) != Some(0) {
            return Err(Error::Precondition("idempotents must be even".into()));
        }
        if &a.multiply(e, e)? != e {
            return Err(Error::Precondition("element is not idempotent".into()));
        }
    }
    for (x, e) in idempotents.iter().enumerate() {
        for f in &idempotents[x + 1..] {
            if a.multiply(e, f)?.iter().any(|c| !c.is_zero()) {
                return Err(Error::Precondition("idempotents are not orthogonal".into()));
            }
        }
    }
    let mut total = vec![Rat::zero(); d];
    for e in idempotents {
        for (t, c) in total.iter_mut().zip(e) {
            *t += c;
        }
    }
    let unit = a.unit().cloned().or_else(|| a.find_unit());
    if unit.as_ref() != Some(&total) {
        return Err(Error::Precondition("idempotents do not sum to the unit".into()));
    }

    let half = Rat::new(1, 2);
    let n = idempotents.len();
    let mut components = Vec::new();
    for i in 0..n {
        for j in i..n {
            let space = if i == j {
                eigenspace(a, &[(&idempotents[i], Rat::one())])?
            } else {
                eigenspace(a, &[(&idempotents[i], half.clone()), (&idempotents[j], half.clone())])?
            };
            components.push(PeirceComponent { i, j, space });
        }
    }
    let mut dec = PeirceDecomposition { components, report: IdentityReport::pass() };
    let sum: usize = dec.components.iter().map(|c| c.space.dim()).sum();
    if sum != d {
        dec.report = IdentityReport::fail(Vec::new(), Vec::new());
        return Ok(dec);
    }
    for x in 0..dec.components.len() {
        for y in 0..dec.components.len() {
            let (cx, cy) = (&dec.components[x], &dec.components[y]);
            let target = peirce_target(&dec, (cx.i, cx.j), (cy.i, cy.j), d)?;
            let prod = subspace_product(a, &cx.space, &cy.space)?;
            if let Some(v) = prod.basis().iter().find(|v| !target.contains(v)) {
                dec.report = IdentityReport::fail(vec![cx.i, cx.j, cy.i, cy.j], v.clone());
                return Ok(dec);
            }
        }
    }
    Ok(dec)
}

/// The subspace that `J_ab J_cd` must lie in.
fn peirce_target(dec: &PeirceDecomposition, (a, b): (usize, usize), (c, e): (usize, usize), d: usize) -> Result<Subspace> {
    let comp = |i: usize, j: usize| dec.component(i, j).cloned().unwrap();
    let zero = Subspace::zero(d);
    Ok(match (a == b, c == e) {
        (true, true) => {
            if a == c {
                comp(a, a)
            } else {
                zero
            }
        }
        (true, false) => {
            if a == c || a == e {
                comp(c, e)
            } else {
                zero
            }
        }
        (false, true) => {
            if c == a || c == b {
                comp(a, b)
            } else {
                zero
            }
        }
        (false, false) => {
            let s1 = [a, b];
            let shared: Vec<usize> = s1.iter().copied().filter(|x| *x == c || *x == e).collect();
            match shared.len() {
                2 => comp(a, a).sum(&comp(b, b))?,
                1 => {
                    let s = shared[0];
                    let y = if a == s { b } else { a };
                    let z = if c == s { e } else { c };
                    comp(y, z)
                }
                _ => zero,
            }
        }
    })
}

/// Lifts `e` (idempotent modulo a square-zero graded ideal `N`) to the
/// idempotent `3e^2 - 2e^3`.
pub fn lift_idempotent(a: &SuperAlgebra, e: &[Rat], n: &Subspace) -> Result<RatVec> {
    a.check_len(e)?;
    if a.homogeneous_parity(e) != Some(0) {
        return Err(Error::Precondition("element to lift must be even".into()));
    }
    if !is_ideal(a, n) {
        return Err(Error::NotIdeal);
    }
    if !n.is_graded(a) {
        return Err(Error::NotGraded);
    }
    if !subspace_product(a, n, n)?.is_zero() {
        return Err(Error::Precondition("ideal does not square to zero".into()));
    }
    let e2 = a.multiply(e, e)?;
    if !n.contains(&sub(&e2, e)) {
        return Err(Error::Precondition("element is not idempotent modulo the ideal".into()));
    }
    let e3 = a.multiply(&e2, e)?;
    let (three, two) = (Rat::from_int(3), Rat::from_int(2));
    Ok(e2.iter().zip(&e3).map(|(x, y)| &three * x - &two * y).collect())
}
