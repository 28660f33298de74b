use super::algebra::SuperAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{to_sparse, DimensionMismatch, Echelon, Rat, RatMat, RatVec, SparseVec};

/// Subspace of coordinate space, stored as the reduced row echelon basis of
/// its spanning vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<RatVec>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn new(ambient: usize, spanning: &[RatVec]) -> Result<Subspace> {
        let mut e = Echelon::new(ambient, false);
        for v in spanning {
            if v.len() != ambient {
                return Err(DimensionMismatch { expected: ambient, got: v.len() }.into());
            }
            e.insert(to_sparse(v), Rat::zero());
        }
        Ok(Subspace::from_echelon(&e))
    }

    fn from_echelon(e: &Echelon) -> Subspace {
        let mut basis = Vec::new();
        let mut pivots = Vec::new();
        for (p, coeffs, _) in e.reduced_rows() {
            let mut v = vec![Rat::zero(); e.ncols()];
            for (c, x) in coeffs {
                v[c] = x;
            }
            basis.push(v);
            pivots.push(p);
        }
        Subspace { ambient: e.ncols(), basis, pivots }
    }

    pub fn zero(ambient: usize) -> Subspace {
        Subspace { ambient, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn whole(ambient: usize) -> Subspace {
        Subspace::coordinate(ambient, &(0..ambient).collect::<Vec<_>>())
    }

    /// Span of the given coordinate axes.
    pub fn coordinate(ambient: usize, axes: &[usize]) -> Subspace {
        let vs: Vec<RatVec> = axes
            .iter()
            .map(|&i| {
                let mut v = vec![Rat::zero(); ambient];
                v[i] = Rat::one();
                v
            })
            .collect();
        Subspace::new(ambient, &vs).expect("axes inside ambient space")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[RatVec] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates that are not pivots of the echelon basis, in increasing order.
    pub fn complement_axes(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    /// Coefficients of `v` in the echelon basis, if `v` lies in the subspace.
    pub fn coords(&self, v: &[Rat]) -> Option<RatVec> {
        if v.len() != self.ambient {
            return None;
        }
        let c: RatVec = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let mut r = v.to_vec();
        for (b, x) in self.basis.iter().zip(&c) {
            if x.is_zero() {
                continue;
            }
            for (k, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    r[k] -= x * y;
                }
            }
        }
        r.iter().all(Rat::is_zero).then_some(c)
    }

    pub fn contains(&self, v: &[Rat]) -> bool {
        self.coords(v).is_some()
    }

    pub fn contains_sparse(&self, v: &SparseVec) -> bool {
        let mut d = vec![Rat::zero(); self.ambient];
        for (i, x) in v {
            d[*i] = x.clone();
        }
        self.contains(&d)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient != other.ambient {
            return Err(DimensionMismatch { expected: self.ambient, got: other.ambient }.into());
        }
        let vs: Vec<RatVec> = self.basis.iter().chain(&other.basis).cloned().collect();
        Subspace::new(self.ambient, &vs)
    }

    /// Whether the subspace is the sum of its even and odd parts.
    pub fn is_graded(&self, a: &SuperAlgebra) -> bool {
        let ne = a.n_even();
        self.basis.iter().all(|v| {
            let mut even = v.clone();
            for x in even.iter_mut().skip(ne) {
                *x = Rat::zero();
            }
            self.contains(&even)
        })
    }

    pub fn as_matrix(&self) -> RatMat {
        RatMat::from_rows(self.ambient, self.basis.clone()).expect("rows have ambient length")
    }
}

fn same_ambient(a: &SuperAlgebra, u: &Subspace) -> Result<()> {
    if u.ambient_dim() != a.dim() {
        return Err(DimensionMismatch { expected: a.dim(), got: u.ambient_dim() }.into());
    }
    Ok(())
}

/// Span of all products `u w` with `u` in `U`, `w` in `W`.
pub fn subspace_product(a: &SuperAlgebra, u: &Subspace, w: &Subspace) -> Result<Subspace> {
    same_ambient(a, u)?;
    same_ambient(a, w)?;
    let mut e = Echelon::new(a.dim(), false);
    let us: Vec<SparseVec> = u.basis().iter().map(|v| to_sparse(v)).collect();
    let ws: Vec<SparseVec> = w.basis().iter().map(|v| to_sparse(v)).collect();
    for x in &us {
        for y in &ws {
            let p = a.mul_sparse(x, y);
            if !p.is_empty() {
                e.insert(p, Rat::zero());
            }
        }
    }
    Ok(Subspace::from_echelon(&e))
}

/// `b U + U b` is contained in `U` for every basis element `b`.
pub fn is_ideal(a: &SuperAlgebra, u: &Subspace) -> bool {
    if u.ambient_dim() != a.dim() {
        return false;
    }
    let us: Vec<SparseVec> = u.basis().iter().map(|v| to_sparse(v)).collect();
    (0..a.dim()).all(|i| {
        let b = vec![(i, Rat::one())];
        us.iter().all(|x| u.contains_sparse(&a.mul_sparse(&b, x)) && u.contains_sparse(&a.mul_sparse(x, &b)))
    })
}

/// `U, U^2, (U^2)^2, ...` until the terms stop shrinking.
pub fn derived_series(a: &SuperAlgebra, u: &Subspace) -> Result<Vec<Subspace>> {
    if !is_ideal(a, u) {
        return Err(Error::NotIdeal);
    }
    let mut series = vec![u.clone()];
    loop {
        let last = series.last().unwrap();
        if last.is_zero() {
            break;
        }
        let next = subspace_product(a, last, last)?;
        if next.dim() == last.dim() {
            break;
        }
        series.push(next);
    }
    Ok(series)
}

pub fn is_solvable(a: &SuperAlgebra, u: &Subspace) -> Result<bool> {
    Ok(derived_series(a, u)?.last().unwrap().is_zero())
}

/// Quotient by a graded ideal and the projection onto it.
#[derive(Clone, Debug, PartialEq)]
pub struct Quotient {
    pub algebra: SuperAlgebra,
    /// Row `i` holds the quotient coordinates of `b_i`.
    pub projection: RatMat,
    /// Ambient basis indices representing the quotient basis.
    pub section: Vec<usize>,
}

/// Quotient `A / N` on the complement spanned by the non-pivot coordinates of
/// the echelon basis of `N`.
pub fn quotient(a: &SuperAlgebra, n: &Subspace) -> Result<Quotient> {
    same_ambient(a, n)?;
    if !is_ideal(a, n) {
        return Err(Error::NotIdeal);
    }
    if !n.is_graded(a) {
        return Err(Error::NotGraded);
    }
    let section = n.complement_axes();
    let q = section.len();
    let project = |v: &[Rat]| -> RatVec {
        let mut out: RatVec = section.iter().map(|&c| v[c].clone()).collect();
        for (b, &p) in n.basis().iter().zip(n.pivots()) {
            let beta = &v[p];
            if beta.is_zero() {
                continue;
            }
            for (i, &c) in section.iter().enumerate() {
                if !b[c].is_zero() {
                    out[i] -= beta * &b[c];
                }
            }
        }
        out
    };
    let projection = RatMat::from_rows(q, (0..a.dim()).map(|i| project(&a.basis_vector(i))).collect())?;
    let mut table = Vec::with_capacity(q * q);
    for &ci in &section {
        for &cj in &section {
            table.push(to_sparse(&project(&a.product_dense(ci, cj))));
        }
    }
    let ne = section.iter().filter(|&&c| a.parity(c) == 0).count();
    let names: Vec<String> = section.iter().map(|&c| a.name(c).to_string()).collect();
    let unit = a.unit().map(|u| project(u));
    let algebra = SuperAlgebra::new(names[..ne].to_vec(), names[ne..].to_vec(), table, unit)?;
    Ok(Quotient { algebra, projection, section })
}
