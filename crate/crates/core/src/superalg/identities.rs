use serde::Serialize;

use super::algebra::SuperAlgebra;
use crate::error::{Error, Result};
use crate::exactla::{to_dense, Accumulator, Rat, RatVec, SparseVec};

/// A failing tuple of basis indices with the nonzero defect it produces.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Witness {
    pub indices: Vec<usize>,
    pub defect: RatVec,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub holds: bool,
    pub witness: Option<Witness>,
}

impl IdentityReport {
    pub fn pass() -> IdentityReport {
        IdentityReport { holds: true, witness: None }
    }

    pub fn fail(indices: Vec<usize>, defect: RatVec) -> IdentityReport {
        IdentityReport { holds: false, witness: Some(Witness { indices, defect }) }
    }
}

/// `b_j b_i = (-1)^{|i||j|} b_i b_j` for every pair; the witness is the first
/// failing pair `(i, j)`, `i <= j`, in lexicographic order.
pub fn check_supercommutativity(a: &SuperAlgebra) -> IdentityReport {
    let d = a.dim();
    for i in 0..d {
        for j in i..d {
            let s = Rat::sign(a.parity(i) * a.parity(j));
            let mut acc = Accumulator::new(d);
            acc.add_scaled(a.product(j, i), &Rat::one());
            acc.add_scaled(a.product(i, j), &-s);
            let defect = acc.take();
            if !defect.is_empty() {
                return IdentityReport::fail(vec![i, j], to_dense(&defect, d));
            }
        }
    }
    IdentityReport::pass()
}

/// Precomputed products used by the quadruple checks.
struct Products<'a> {
    a: &'a SuperAlgebra,
    d: usize,
    // (b_i b_j) b_k at index (i * d + j) * d + k
    triple: Vec<SparseVec>,
}

impl<'a> Products<'a> {
    fn new(a: &'a SuperAlgebra) -> Products<'a> {
        let d = a.dim();
        let mut acc = Accumulator::new(d);
        let mut triple = Vec::with_capacity(d * d * d);
        for i in 0..d {
            for j in 0..d {
                let p = a.product(i, j);
                for k in 0..d {
                    if p.is_empty() {
                        triple.push(Vec::new());
                        continue;
                    }
                    for (m, c) in p {
                        acc.add_scaled(a.product(*m, k), c);
                    }
                    triple.push(acc.take());
                }
            }
        }
        Products { a, d, triple }
    }

    #[inline]
    fn p(&self, i: usize, j: usize) -> &SparseVec {
        self.a.product(i, j)
    }

    #[inline]
    fn t(&self, i: usize, j: usize, k: usize) -> &SparseVec {
        &self.triple[(i * self.d + j) * self.d + k]
    }

    /// acc += c * (x b_l)
    #[inline]
    fn add_times_basis(&self, x: &SparseVec, l: usize, c: &Rat, acc: &mut Accumulator) {
        for (m, y) in x {
            let p = self.p(*m, l);
            if !p.is_empty() {
                acc.add_scaled(p, &(c * y));
            }
        }
    }

    /// acc += c * (b_l x)
    #[inline]
    fn add_basis_times(&self, l: usize, x: &SparseVec, c: &Rat, acc: &mut Accumulator) {
        for (m, y) in x {
            let p = self.p(l, *m);
            if !p.is_empty() {
                acc.add_scaled(p, &(c * y));
            }
        }
    }

    /// acc += c * (x y)
    #[inline]
    fn add_product(&self, x: &SparseVec, y: &SparseVec, c: &Rat, acc: &mut Accumulator) {
        if x.is_empty() || y.is_empty() {
            return;
        }
        self.a.mul_sparse_into(x, y, c, acc);
    }

    /// Defect of the super-Jordan identity on `(b_i, b_j, b_k, b_l)`:
    /// ((ij)k)l + s ((il)k)j + s' ((jl)k)i - (ij)(kl) - r (il)(jk) - r' (ik)(jl).
    fn jordan_defect(&self, q: [usize; 4], acc: &mut Accumulator) -> Option<SparseVec> {
        let [i, j, k, l] = q;
        let (t1, t2, t3) = (self.t(i, j, k), self.t(i, l, k), self.t(j, l, k));
        let (pij, pkl, pil, pjk, pik, pjl) =
            (self.p(i, j), self.p(k, l), self.p(i, l), self.p(j, k), self.p(i, k), self.p(j, l));
        if t1.is_empty()
            && t2.is_empty()
            && t3.is_empty()
            && (pij.is_empty() || pkl.is_empty())
            && (pil.is_empty() || pjk.is_empty())
            && (pik.is_empty() || pjl.is_empty())
        {
            return None;
        }
        let a = self.a;
        let (pi, pj, pk, pl) = (a.parity(i), a.parity(j), a.parity(k), a.parity(l));
        let one = Rat::one();
        self.add_times_basis(t1, l, &one, acc);
        self.add_times_basis(t2, j, &Rat::sign(pl * (pk + pj) + pk * pj), acc);
        self.add_times_basis(t3, i, &Rat::sign(pi * (pj + pk + pl) + pk * pl), acc);
        self.add_product(pij, pkl, &-&one, acc);
        self.add_product(pil, pjk, &-Rat::sign(pl * (pk + pj)), acc);
        self.add_product(pik, pjl, &-Rat::sign(pj * pk), acc);
        let v = acc.take();
        (!v.is_empty()).then_some(v)
    }

    /// Operator identity applied to `b_x`:
    /// x(R_i R_j R_k + s R_k R_j R_i + (-1)^{jk} R_{(ik)j} - R_i R_{jk} - s R_k R_{ji} - (-1)^{ij} R_j R_{ik}),
    /// with `s = (-1)^{ij+ik+jk}` and operator words applied left to right.
    fn operator_defect(&self, i: usize, j: usize, k: usize, x: usize, acc: &mut Accumulator) -> Option<SparseVec> {
        let a = self.a;
        let (pi, pj, pk) = (a.parity(i), a.parity(j), a.parity(k));
        let s = Rat::sign(pi * pj + pi * pk + pj * pk);
        let one = Rat::one();
        self.add_times_basis(self.t(x, i, j), k, &one, acc);
        self.add_times_basis(self.t(x, k, j), i, &s, acc);
        self.add_basis_times(x, self.t(i, k, j), &Rat::sign(pj * pk), acc);
        self.add_product(self.p(x, i), self.p(j, k), &-&one, acc);
        self.add_product(self.p(x, k), self.p(j, i), &-&s, acc);
        self.add_product(self.p(x, j), self.p(i, k), &-Rat::sign(pi * pj), acc);
        let v = acc.take();
        (!v.is_empty()).then_some(v)
    }
}

fn require_supercommutative(a: &SuperAlgebra) -> Result<()> {
    let r = check_supercommutativity(a);
    if let Some(w) = r.witness {
        return Err(Error::Precondition(format!(
            "table is not supercommutative at ({}, {})",
            a.name(w.indices[0]),
            a.name(w.indices[1])
        )));
    }
    Ok(())
}

/// Evaluates the super-Jordan identity on all `dim^4` quadruples of basis
/// elements. The witness is the first failing quadruple in lexicographic order.
pub fn check_super_jordan(a: &SuperAlgebra) -> Result<IdentityReport> {
    require_supercommutative(a)?;
    let d = a.dim();
    let pr = Products::new(a);
    let mut acc = Accumulator::new(d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for l in 0..d {
                    if let Some(v) = pr.jordan_defect([i, j, k, l], &mut acc) {
                        return Ok(IdentityReport::fail(vec![i, j, k, l], to_dense(&v, d)));
                    }
                }
            }
        }
    }
    Ok(IdentityReport::pass())
}

/// Same verdict and witness as [`check_super_jordan`] when the basis elements
/// listed in `ideal` span an ideal of square zero: quadruples with two or more
/// entries from that ideal contribute nothing and are skipped. If the listed
/// coordinates are not a square-zero ideal the full check runs instead.
pub fn check_super_jordan_square_zero(a: &SuperAlgebra, ideal: &[usize]) -> Result<IdentityReport> {
    let d = a.dim();
    let mut inside = vec![false; d];
    for &m in ideal {
        inside[m] = true;
    }
    let square_zero_ideal = (0..d).all(|x| {
        ideal.iter().all(|&m| {
            let ok = |p: &SparseVec| p.iter().all(|(k, _)| inside[*k]);
            ok(a.product(x, m)) && ok(a.product(m, x)) && (!inside[x] || a.product(x, m).is_empty())
        })
    });
    if !square_zero_ideal {
        return check_super_jordan(a);
    }
    require_supercommutative(a)?;
    let pr = Products::new(a);
    let mut acc = Accumulator::new(d);
    let c = |x: usize| inside[x] as u32;
    for i in 0..d {
        for j in 0..d {
            if c(i) + c(j) > 1 {
                continue;
            }
            for k in 0..d {
                if c(i) + c(j) + c(k) > 1 {
                    continue;
                }
                for l in 0..d {
                    if c(i) + c(j) + c(k) + c(l) > 1 {
                        continue;
                    }
                    if let Some(v) = pr.jordan_defect([i, j, k, l], &mut acc) {
                        return Ok(IdentityReport::fail(vec![i, j, k, l], to_dense(&v, d)));
                    }
                }
            }
        }
    }
    Ok(IdentityReport::pass())
}

/// Checks the operator form of the super-Jordan identity on every triple of
/// basis elements, applying each operator to every basis vector. The witness
/// is `[i, j, k, x]`, with `x` the basis vector the operator fails on.
pub fn check_operator_identity(a: &SuperAlgebra) -> Result<IdentityReport> {
    require_supercommutative(a)?;
    let d = a.dim();
    let pr = Products::new(a);
    let mut acc = Accumulator::new(d);
    for i in 0..d {
        for j in 0..d {
            for k in 0..d {
                for x in 0..d {
                    if let Some(v) = pr.operator_defect(i, j, k, x, &mut acc) {
                        return Ok(IdentityReport::fail(vec![i, j, k, x], to_dense(&v, d)));
                    }
                }
            }
        }
    }
    Ok(IdentityReport::pass())
}
