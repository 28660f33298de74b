//! Cocycles of square-zero extensions, `Z^2`, `B^2`, `H^2`, and the splitting
//! problem as one exact linear system.

use std::collections::HashMap;

use crate::bimodule::{Cocycle, SuperBimodule};
use crate::error::{Error, Result};
use crate::exactla::{
    dot_dense, rank, to_dense, to_sparse, Accumulator, Certificate, DimensionMismatch, Echelon, Insert, Rat,
    RatMat, RatVec, SparseVec,
};
use crate::superalg::{is_ideal, quotient, subspace_product, IdentityReport, Subspace, SuperAlgebra};

/// Coordinates of a cocycle: `mu(i, j)_t` for `i <= j` with `|t| = |i| + |j|`,
/// skipping `i = j` odd where super-symmetry forces zero.
#[derive(Clone, Debug)]
pub struct CochainIndex {
    entries: Vec<(usize, usize, usize)>,
    lookup: HashMap<(usize, usize, usize), usize>,
    base_parity: Vec<u32>,
}

impl CochainIndex {
    pub fn new(m: &SuperBimodule) -> CochainIndex {
        let j = m.base();
        let mut entries = Vec::new();
        for a in 0..j.dim() {
            for b in a..j.dim() {
                if a == b && j.parity(a) == 1 {
                    continue;
                }
                for t in 0..m.dim() {
                    if m.parity(t) == j.parity(a) ^ j.parity(b) {
                        entries.push((a, b, t));
                    }
                }
            }
        }
        let lookup = entries.iter().enumerate().map(|(x, e)| (*e, x)).collect();
        CochainIndex { entries, lookup, base_parity: (0..j.dim()).map(|a| j.parity(a)).collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entry(&self, x: usize) -> (usize, usize, usize) {
        self.entries[x]
    }

    /// Coordinate of `mu(a, b)_t` for any ordered pair, with the sign relating
    /// it to the stored `a <= b` value.
    pub fn var(&self, a: usize, b: usize, t: usize) -> Option<(usize, Rat)> {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let x = *self.lookup.get(&(lo, hi, t))?;
        let s = if a <= b { Rat::one() } else { Rat::sign(self.base_parity[a] * self.base_parity[b]) };
        Some((x, s))
    }

    pub fn coords(&self, mu: &Cocycle) -> RatVec {
        let md = mu.module_dim();
        let mut cache: HashMap<(usize, usize), RatVec> = HashMap::new();
        self.entries
            .iter()
            .map(|&(a, b, t)| cache.entry((a, b)).or_insert_with(|| to_dense(mu.value(a, b), md))[t].clone())
            .collect()
    }

    pub fn cocycle(&self, m: &SuperBimodule, coords: &[Rat]) -> Result<Cocycle> {
        if coords.len() != self.len() {
            return Err(DimensionMismatch { expected: self.len(), got: coords.len() }.into());
        }
        let mut vals: HashMap<(usize, usize), RatVec> = HashMap::new();
        for (x, &(a, b, t)) in self.entries.iter().enumerate() {
            if !coords[x].is_zero() {
                vals.entry((a, b)).or_insert_with(|| vec![Rat::zero(); m.dim()])[t] = coords[x].clone();
            }
        }
        let mut mu = Cocycle::zero(m);
        let mut keys: Vec<_> = vals.keys().copied().collect();
        keys.sort_unstable();
        for (a, b) in keys {
            mu.set(a, b, &vals[&(a, b)])?;
        }
        Ok(mu)
    }
}

fn graded_map_check(m: &SuperBimodule, f: &[RatVec]) -> Result<()> {
    let j = m.base();
    if f.len() != j.dim() {
        return Err(DimensionMismatch { expected: j.dim(), got: f.len() }.into());
    }
    for (a, v) in f.iter().enumerate() {
        if v.len() != m.dim() {
            return Err(DimensionMismatch { expected: m.dim(), got: v.len() }.into());
        }
        if v.iter().enumerate().any(|(t, c)| !c.is_zero() && m.parity(t) != j.parity(a)) {
            return Err(Error::Grading("linear map does not preserve parity".into()));
        }
    }
    Ok(())
}

/// `(delta f)(a, b) = a f(b) + f(a) b - f(ab)` for a parity-preserving map
/// given by the images `f[a]` of the basis elements.
pub fn coboundary(m: &SuperBimodule, f: &[RatVec]) -> Result<Cocycle> {
    graded_map_check(m, f)?;
    let j = m.base();
    let fs: Vec<SparseVec> = f.iter().map(|v| to_sparse(v)).collect();
    let mut mu = Cocycle::zero(m);
    for a in 0..j.dim() {
        for b in a..j.dim() {
            let mut acc = Accumulator::new(m.dim());
            acc.add_scaled(&m.act(&vec![(a, Rat::one())], &fs[b]), &Rat::one());
            acc.add_scaled(&m.act_right(&fs[a], &vec![(b, Rat::one())]), &Rat::one());
            for (c, x) in j.product(a, b) {
                acc.add_scaled(&fs[*c], &-x);
            }
            let v = to_dense(&acc.take(), m.dim());
            mu.set(a, b, &v)?;
        }
    }
    Ok(mu)
}

/// Columns indexed by the graded maps `b_a -> m_t` (`|a| = |t|`), rows by
/// [`CochainIndex`]; the column space is `B^2`.
pub fn coboundary_matrix(m: &SuperBimodule) -> Result<RatMat> {
    let idx = CochainIndex::new(m);
    let j = m.base();
    let mut cols = Vec::new();
    for a in 0..j.dim() {
        for t in 0..m.dim() {
            if m.parity(t) != j.parity(a) {
                continue;
            }
            let mut f = vec![vec![Rat::zero(); m.dim()]; j.dim()];
            f[a][t] = Rat::one();
            cols.push(idx.coords(&coboundary(m, &f)?));
        }
    }
    if cols.is_empty() {
        return Ok(RatMat::zeros(idx.len(), 0));
    }
    Ok(RatMat::from_rows(idx.len(), cols)?.transpose())
}

/// Symbolic module element: coefficient of `mu`-coordinate `var` along module basis `t`.
struct Sym<'a> {
    m: &'a SuperBimodule,
    idx: &'a CochainIndex,
    terms: HashMap<(usize, usize), Rat>,
}

impl<'a> Sym<'a> {
    fn new(m: &'a SuperBimodule, idx: &'a CochainIndex) -> Sym<'a> {
        Sym { m, idx, terms: HashMap::new() }
    }

    fn add(&mut self, t: usize, var: usize, c: Rat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((t, var)).or_insert_with(Rat::zero);
        *e += c;
    }

    /// `mu(x, y)` for base vectors `x`, `y`, scaled by `c`, acted on by `then`.
    fn mu_into(&self, x: &SparseVec, y: &SparseVec, c: &Rat, out: &mut Vec<(usize, usize, Rat)>) {
        for (a, xa) in x {
            for (b, yb) in y {
                let k = &(c * xa) * yb;
                for t in 0..self.m.dim() {
                    if let Some((var, s)) = self.idx.var(*a, *b, t) {
                        out.push((t, var, &k * &s));
                    }
                }
            }
        }
    }

    fn right_act(&self, terms: Vec<(usize, usize, Rat)>, y: &SparseVec) -> Vec<(usize, usize, Rat)> {
        let mut out = Vec::new();
        for (t, var, c) in terms {
            for (b, yb) in y {
                for (t2, z) in self.m.right(t, *b) {
                    out.push((t2, var, &(&c * yb) * &z));
                }
            }
        }
        out
    }

    fn left_act(&self, x: &SparseVec, terms: Vec<(usize, usize, Rat)>) -> Vec<(usize, usize, Rat)> {
        let mut out = Vec::new();
        for (t, var, c) in terms {
            for (a, xa) in x {
                for (t2, z) in self.m.left(*a, t) {
                    out.push((*t2, var, &(&c * xa) * z));
                }
            }
        }
        out
    }

    fn absorb(&mut self, terms: Vec<(usize, usize, Rat)>, s: &Rat) {
        for (t, var, c) in terms {
            self.add(t, var, &c * s);
        }
    }
}

/// The linear conditions on a cocycle coming from the super-Jordan identity
/// of the extension, in [`CochainIndex`] coordinates.
pub struct CocycleConditions {
    pub index: CochainIndex,
    echelon: Echelon,
}

impl CocycleConditions {
    pub fn new(m: &SuperBimodule) -> CocycleConditions {
        let idx = CochainIndex::new(m);
        let j = m.base();
        let d = j.dim();
        let mut echelon = Echelon::new(idx.len(), false);
        let e = |a: usize| -> SparseVec { vec![(a, Rat::one())] };
        let p = |a: usize, b: usize| j.product(a, b).clone();
        let one = Rat::one();
        for i in 0..d {
            for jj in 0..d {
                for k in 0..d {
                    for l in 0..d {
                        let mut sym = Sym::new(m, &idx);
                        let (pi, pj, pk, pl) = (j.parity(i), j.parity(jj), j.parity(k), j.parity(l));
                        // ((ab)c)d
                        let assoc = |a: usize, b: usize, c: usize, dd: usize, s: &Rat, sym: &mut Sym| {
                            let pab = p(a, b);
                            let pabc = j.mul_sparse(&pab, &e(c));
                            let mut t = Vec::new();
                            sym.mu_into(&pabc, &e(dd), &one, &mut t);
                            let mut inner = Vec::new();
                            sym.mu_into(&pab, &e(c), &one, &mut inner);
                            let mut first = Vec::new();
                            sym.mu_into(&e(a), &e(b), &one, &mut first);
                            inner.extend(sym.right_act(first, &e(c)));
                            t.extend(sym.right_act(inner, &e(dd)));
                            sym.absorb(t, s);
                        };
                        assoc(i, jj, k, l, &one, &mut sym);
                        assoc(i, l, k, jj, &Rat::sign(pl * (pk + pj) + pk * pj), &mut sym);
                        assoc(jj, l, k, i, &Rat::sign(pi * (pj + pk + pl) + pk * pl), &mut sym);
                        // (ab)(cd)
                        let pair = |a: usize, b: usize, c: usize, dd: usize, s: &Rat, sym: &mut Sym| {
                            let (pab, pcd) = (p(a, b), p(c, dd));
                            let mut t = Vec::new();
                            sym.mu_into(&pab, &pcd, &one, &mut t);
                            let mut mcd = Vec::new();
                            sym.mu_into(&e(c), &e(dd), &one, &mut mcd);
                            t.extend(sym.left_act(&pab, mcd));
                            let mut mab = Vec::new();
                            sym.mu_into(&e(a), &e(b), &one, &mut mab);
                            t.extend(sym.right_act(mab, &pcd));
                            sym.absorb(t, &-s);
                        };
                        pair(i, jj, k, l, &one, &mut sym);
                        pair(i, l, jj, k, &Rat::sign(pl * (pk + pj)), &mut sym);
                        pair(i, k, jj, l, &Rat::sign(pj * pk), &mut sym);

                        let mut rows: HashMap<usize, SparseVec> = HashMap::new();
                        for ((t, var), c) in sym.terms {
                            if !c.is_zero() {
                                rows.entry(t).or_default().push((var, c));
                            }
                        }
                        let mut ts: Vec<usize> = rows.keys().copied().collect();
                        ts.sort_unstable();
                        for t in ts {
                            let mut row = rows.remove(&t).unwrap();
                            row.sort_by_key(|(v, _)| *v);
                            echelon.insert(row, Rat::zero());
                        }
                    }
                }
            }
        }
        CocycleConditions { index: idx, echelon }
    }

    /// Number of independent conditions.
    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    /// Whether a coordinate vector satisfies every condition.
    pub fn satisfied_by(&self, coords: &[Rat]) -> bool {
        self.echelon.reduced_rows().iter().all(|(_, row, _)| dot_dense(row, coords).is_zero())
    }

    pub fn kernel_basis(&self) -> Vec<RatVec> {
        self.echelon.kernel_basis()
    }
}

/// Basis of `Z^2(J, M)`.
pub fn cocycle_space(m: &SuperBimodule) -> Result<Vec<Cocycle>> {
    let cond = CocycleConditions::new(m);
    cond.kernel_basis().iter().map(|v| cond.index.cocycle(m, v)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct H2Dimensions {
    #[serde(rename = "Z2")]
    pub z2: usize,
    #[serde(rename = "B2")]
    pub b2: usize,
    #[serde(rename = "H2")]
    pub h2: usize,
}

/// `dim Z^2`, `dim B^2` and their difference. Fails if some coboundary does
/// not satisfy the cocycle conditions, which happens only for a module whose
/// split null extension is not Jordan.
pub fn h2_dimensions(m: &SuperBimodule) -> Result<H2Dimensions> {
    let cond = CocycleConditions::new(m);
    let z2 = cond.index.len() - cond.rank();
    let b = coboundary_matrix(m)?;
    let rows = cond.echelon.reduced_rows();
    for c in 0..b.cols() {
        let col: RatVec = (0..b.rows()).map(|r| b[(r, c)].clone()).collect();
        if !rows.iter().all(|(_, row, _)| dot_dense(row, &col).is_zero()) {
            return Err(Error::NotJordan("a coboundary violates the cocycle conditions".into()));
        }
    }
    let b2 = rank(&b);
    Ok(H2Dimensions { z2, b2, h2: z2 - b2 })
}

/// Whether `mu` lies in `B^2`, by comparing `rank [B | mu]` with `rank B`.
pub fn is_coboundary(m: &SuperBimodule, mu: &Cocycle) -> Result<bool> {
    let b = coboundary_matrix(m)?;
    let idx = CochainIndex::new(m);
    let col = RatMat::from_rows(1, idx.coords(mu).into_iter().map(|x| vec![x]).collect())?;
    Ok(rank(&b.hstack(&col)?) == rank(&b))
}

/// A square-zero extension read back as base algebra, module and cocycle
/// relative to a section.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtractedExtension {
    pub base: SuperAlgebra,
    pub module: SuperBimodule,
    pub cocycle: Cocycle,
    /// Lift of each base basis element into the extension.
    pub section: Vec<RatVec>,
    /// The ideal, whose echelon basis is the module basis.
    pub ideal: Subspace,
}

fn square_zero_graded_ideal(e: &SuperAlgebra, n: &Subspace) -> Result<()> {
    if n.ambient_dim() != e.dim() {
        return Err(DimensionMismatch { expected: e.dim(), got: n.ambient_dim() }.into());
    }
    if !is_ideal(e, n) {
        return Err(Error::NotIdeal);
    }
    if !n.is_graded(e) {
        return Err(Error::NotGraded);
    }
    if !subspace_product(e, n, n)?.is_zero() {
        return Err(Error::Precondition("ideal does not square to zero".into()));
    }
    Ok(())
}

/// Reads the cocycle `mu(i, j)` = ideal component of `s_i s_j` relative to a
/// section `s`. Without a section, the non-pivot basis vectors of the ideal's
/// echelon form are used.
pub fn extract_cocycle(e: &SuperAlgebra, n: &Subspace, section: Option<&[RatVec]>) -> Result<ExtractedExtension> {
    square_zero_graded_ideal(e, n)?;
    let q = quotient(e, n)?;
    let base = q.algebra;
    let qd = base.dim();
    let section: Vec<RatVec> = match section {
        None => q.section.iter().map(|&c| e.basis_vector(c)).collect(),
        Some(s) => {
            if s.len() != qd {
                return Err(DimensionMismatch { expected: qd, got: s.len() }.into());
            }
            for (i, v) in s.iter().enumerate() {
                e.check_len(v)?;
                let image = q.projection.vec_mul(v)?;
                if image != base.basis_vector(i) {
                    return Err(Error::Precondition(format!("section element {i} does not project to {}", base.name(i))));
                }
                if e.homogeneous_parity(v).is_some_and(|p| p != base.parity(i)) || e.homogeneous_parity(v).is_none() {
                    return Err(Error::Precondition(format!("section element {i} is not homogeneous of the right parity")));
                }
            }
            s.to_vec()
        }
    };
    let nb = n.basis();
    let names: Vec<String> = nb
        .iter()
        .enumerate()
        .map(|(s, v)| {
            let nz: Vec<usize> = (0..v.len()).filter(|&c| !v[c].is_zero()).collect();
            if nz.len() == 1 && v[nz[0]].is_one() {
                e.name(nz[0]).to_string()
            } else {
                format!("n{}", s + 1)
            }
        })
        .collect();
    let ne = n.pivots().iter().filter(|&&p| e.parity(p) == 0).count();
    let ncoords = |v: &[Rat]| -> Result<RatVec> {
        n.coords(v).ok_or_else(|| Error::Precondition("product left the ideal".into()))
    };
    let mut action = Vec::with_capacity(qd * nb.len());
    for s in &section {
        for v in nb {
            action.push(to_sparse(&ncoords(&e.multiply(s, v)?)?));
        }
    }
    let module = SuperBimodule::unchecked(base.clone(), names[..ne].to_vec(), names[ne..].to_vec(), action)?;
    let mut mu = Cocycle::zero(&module);
    for i in 0..qd {
        for j in i..qd {
            let mut v = e.multiply(&section[i], &section[j])?;
            for (k, c) in base.product(i, j) {
                for (x, y) in v.iter_mut().zip(&section[*k]) {
                    *x -= c * y;
                }
            }
            mu.set(i, j, &ncoords(&v)?)?;
        }
    }
    Ok(ExtractedExtension { base, module, cocycle: mu, section, ideal: n.clone() })
}

/// The system `mu(i, j) + b_i c_j + c_i b_j - sum_k q_ij^k c_k = 0` over all
/// ordered pairs, in the unknown corrections `c_i` (ideal coordinates of
/// matching parity).
#[derive(Clone, Debug)]
pub struct SplittingSystem {
    pub rows: Vec<SparseVec>,
    pub rhs: Vec<Rat>,
    /// `(i, j, t)`: pair of base elements and ideal coordinate.
    pub row_labels: Vec<(usize, usize, usize)>,
    /// `(i, t)`: base element and ideal coordinate of its correction.
    pub col_labels: Vec<(usize, usize)>,
}

impl SplittingSystem {
    pub fn new(x: &ExtractedExtension) -> SplittingSystem {
        let (j, m, mu) = (&x.base, &x.module, &x.cocycle);
        let mut col_labels = Vec::new();
        let mut col = HashMap::new();
        for i in 0..j.dim() {
            for t in 0..m.dim() {
                if m.parity(t) == j.parity(i) {
                    col.insert((i, t), col_labels.len());
                    col_labels.push((i, t));
                }
            }
        }
        let (mut rows, mut rhs, mut row_labels) = (Vec::new(), Vec::new(), Vec::new());
        for a in 0..j.dim() {
            for b in 0..j.dim() {
                let mut per_t: Vec<Vec<(usize, Rat)>> = vec![Vec::new(); m.dim()];
                // b_a c_b
                for s in 0..m.dim() {
                    if let Some(&v) = col.get(&(b, s)) {
                        for (t, c) in m.left(a, s) {
                            per_t[*t].push((v, c.clone()));
                        }
                    }
                    if let Some(&v) = col.get(&(a, s)) {
                        for (t, c) in m.right(s, b) {
                            per_t[t].push((v, c));
                        }
                    }
                }
                for (k, c) in j.product(a, b) {
                    for (t, entries) in per_t.iter_mut().enumerate() {
                        if let Some(&v) = col.get(&(*k, t)) {
                            entries.push((v, -c));
                        }
                    }
                }
                let muv = to_dense(mu.value(a, b), m.dim());
                for (t, entries) in per_t.into_iter().enumerate() {
                    let mut acc = Accumulator::new(col_labels.len());
                    for (v, c) in entries {
                        acc.add(v, &c);
                    }
                    let row = acc.take();
                    if row.is_empty() && muv[t].is_zero() {
                        continue;
                    }
                    rows.push(row);
                    rhs.push(-&muv[t]);
                    row_labels.push((a, b, t));
                }
            }
        }
        SplittingSystem { rows, rhs, row_labels, col_labels }
    }

    pub fn ncols(&self) -> usize {
        self.col_labels.len()
    }
}

/// Lifts of the base basis into the extension that close under the product.
#[derive(Clone, Debug, PartialEq)]
pub struct Splitting {
    /// Correction of each base basis element, in extension coordinates.
    pub corrections: Vec<RatVec>,
    /// The section the corrections are added to.
    pub section: Vec<RatVec>,
}

impl Splitting {
    pub fn lifted(&self, i: usize) -> RatVec {
        self.section[i].iter().zip(&self.corrections[i]).map(|(a, b)| a + b).collect()
    }
}

/// Inconsistent combination of the splitting equations.
#[derive(Clone, Debug, PartialEq)]
pub struct Obstruction {
    pub certificate: Certificate,
}

impl Obstruction {
    /// Re-checks the certificate against a freshly assembled system.
    pub fn verify(&self, system: &SplittingSystem) -> bool {
        self.certificate.verify(&system.rows, &system.rhs, system.ncols())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SplittingResult {
    Split(Splitting),
    Obstructed(Obstruction),
}

impl SplittingResult {
    pub fn is_split(&self) -> bool {
        matches!(self, SplittingResult::Split(_))
    }
}

/// Decides whether `E` contains a subalgebra complementary to the
/// square-zero ideal `N`.
pub fn solve_splitting(e: &SuperAlgebra, n: &Subspace) -> Result<SplittingResult> {
    let x = extract_cocycle(e, n, None)?;
    Ok(solve_extracted(&x).0)
}

/// Splitting of an extracted extension together with the system it solved.
pub fn solve_extracted(x: &ExtractedExtension) -> (SplittingResult, SplittingSystem) {
    let sys = SplittingSystem::new(x);
    let mut ech = Echelon::new(sys.ncols(), true);
    for (row, b) in sys.rows.iter().zip(&sys.rhs) {
        if let Insert::Inconsistent(certificate) = ech.insert(row.clone(), b.clone()) {
            return (SplittingResult::Obstructed(Obstruction { certificate }), sys);
        }
    }
    let sol = ech.particular_solution();
    let d = x.section.first().map_or(0, |s| s.len());
    let mut corrections = vec![vec![Rat::zero(); d]; x.base.dim()];
    for (v, &(i, t)) in sys.col_labels.iter().enumerate() {
        if sol[v].is_zero() {
            continue;
        }
        for (c, y) in corrections[i].iter_mut().zip(&x.ideal.basis()[t]) {
            *c += &sol[v] * y;
        }
    }
    (SplittingResult::Split(Splitting { corrections, section: x.section.clone() }), sys)
}

/// Checks that the lifted basis `s_i + c_i` multiplies with the quotient's
/// structure constants and meets the ideal trivially. The witness is the
/// first failing pair `[i, j]` with the defect in extension coordinates.
pub fn verify_splitting(e: &SuperAlgebra, n: &Subspace, s: &Splitting) -> Result<IdentityReport> {
    let x = extract_cocycle(e, n, Some(&s.section))?;
    let qd = x.base.dim();
    if s.corrections.len() != qd {
        return Err(DimensionMismatch { expected: qd, got: s.corrections.len() }.into());
    }
    for (i, c) in s.corrections.iter().enumerate() {
        e.check_len(c)?;
        if !n.contains(c) {
            return Err(Error::Precondition(format!("correction {i} is not in the ideal")));
        }
        if e.homogeneous_parity(c).is_none() || (c.iter().any(|a| !a.is_zero()) && e.homogeneous_parity(c) != Some(x.base.parity(i))) {
            return Err(Error::Precondition(format!("correction {i} has the wrong parity")));
        }
    }
    let lifts: Vec<RatVec> = (0..qd).map(|i| s.lifted(i)).collect();
    for i in 0..qd {
        for j in 0..qd {
            let mut v = e.multiply(&lifts[i], &lifts[j])?;
            for (k, c) in x.base.product(i, j) {
                for (a, b) in v.iter_mut().zip(&lifts[*k]) {
                    *a -= c * b;
                }
            }
            if v.iter().any(|a| !a.is_zero()) {
                return Ok(IdentityReport::fail(vec![i, j], v));
            }
        }
    }
    let mut all = lifts.clone();
    all.extend(n.basis().iter().cloned());
    if Subspace::new(e.dim(), &all)?.dim() != qd + n.dim() {
        return Ok(IdentityReport::fail(Vec::new(), Vec::new()));
    }
    Ok(IdentityReport::pass())
}
