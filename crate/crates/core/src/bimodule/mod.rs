//! Superbimodules, split null extensions and cocycle-twisted extensions, the
//! Clifford–Weyl monomial calculus and sl2 relation checks.

mod clifford;
mod sl2;

pub use clifford::{
    clifford_quotient_bimodule, clifford_quotient_bimodule_u, cw_normal_product, monomials, symmetric_product,
    symmetric_product_formula, window_monomials, CWMonomial, Generator,
};
pub use sl2::{check_sl2_relations, Sl2Relation};

use crate::error::{Error, Result};
use crate::exactla::{to_dense, to_sparse, Accumulator, DimensionMismatch, Rat, RatMat, RatVec, SparseVec};
use crate::superalg::{check_super_jordan_square_zero, Subspace, SuperAlgebra};

/// Graded module over a superalgebra, given by the left action `b_i m_t`.
/// The right action follows from supercommutativity:
/// `m b = (-1)^{|m||b|} b m`.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperBimodule {
    base: SuperAlgebra,
    names: Vec<String>,
    n_even: usize,
    // b_i m_t at index i * dim + t
    action: Vec<SparseVec>,
}

impl SuperBimodule {
    /// Builds the module and checks that its split null extension is a
    /// Jordan superalgebra.
    pub fn new(base: SuperAlgebra, even: Vec<String>, odd: Vec<String>, action: Vec<SparseVec>) -> Result<SuperBimodule> {
        let m = SuperBimodule::unchecked(base, even, odd, action)?;
        let ext = split_null_extension(&m)?;
        let r = check_super_jordan_square_zero(&ext.algebra, &ext.module_indices)?;
        if let Some(w) = r.witness {
            let names: Vec<&str> = w.indices.iter().map(|&i| ext.algebra.name(i)).collect();
            return Err(Error::NotJordan(format!("split null extension fails on ({})", names.join(", "))));
        }
        Ok(m)
    }

    /// Builds the module checking only sizes and grading.
    pub fn unchecked(base: SuperAlgebra, even: Vec<String>, odd: Vec<String>, action: Vec<SparseVec>) -> Result<SuperBimodule> {
        let n_even = even.len();
        let mut names = even;
        names.extend(odd);
        let mut seen = std::collections::HashSet::new();
        for n in &names {
            if !seen.insert(n.clone()) {
                return Err(Error::DuplicateName(n.clone()));
            }
        }
        let d = names.len();
        if action.len() != base.dim() * d {
            return Err(DimensionMismatch { expected: base.dim() * d, got: action.len() }.into());
        }
        let m = SuperBimodule { base, names, n_even, action };
        for i in 0..m.base.dim() {
            for t in 0..d {
                for (s, _) in m.left(i, t) {
                    if *s >= d {
                        return Err(DimensionMismatch { expected: d, got: s + 1 }.into());
                    }
                    if m.parity(*s) != m.base.parity(i) ^ m.parity(t) {
                        return Err(Error::Grading(format!(
                            "{}*{} has a component along {}",
                            m.base.name(i),
                            m.names[t],
                            m.names[*s]
                        )));
                    }
                }
            }
        }
        Ok(m)
    }

    pub fn base(&self) -> &SuperAlgebra {
        &self.base
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn n_even(&self) -> usize {
        self.n_even
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn even_names(&self) -> &[String] {
        &self.names[..self.n_even]
    }

    pub fn odd_names(&self) -> &[String] {
        &self.names[self.n_even..]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    #[inline]
    pub fn parity(&self, t: usize) -> u32 {
        (t >= self.n_even) as u32
    }

    /// `b_i m_t` in module coordinates.
    #[inline]
    pub fn left(&self, i: usize, t: usize) -> &SparseVec {
        &self.action[i * self.names.len() + t]
    }

    /// `m_t b_i` in module coordinates.
    pub fn right(&self, t: usize, i: usize) -> SparseVec {
        let s = Rat::sign(self.parity(t) * self.base.parity(i));
        self.left(i, t).iter().map(|(k, c)| (*k, c * &s)).collect()
    }

    /// `a m` for an algebra element `a` and module element `m`.
    pub fn act(&self, a: &SparseVec, m: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new(self.dim());
        for (i, x) in a {
            for (t, y) in m {
                acc.add_scaled(self.left(*i, *t), &(x * y));
            }
        }
        acc.take()
    }

    /// `m a` for a module element `m` and algebra element `a`.
    pub fn act_right(&self, m: &SparseVec, a: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new(self.dim());
        for (t, y) in m {
            for (i, x) in a {
                acc.add_scaled(&self.right(*t, *i), &(x * y));
            }
        }
        acc.take()
    }

    /// Matrix of `m -> m a` on row vectors for a homogeneous algebra element.
    pub fn action_matrix(&self, a: &[Rat]) -> Result<RatMat> {
        self.base.check_len(a)?;
        if self.base.homogeneous_parity(a).is_none() {
            return Err(Error::Precondition("action matrix needs a homogeneous element".into()));
        }
        let asp = to_sparse(a);
        let rows = (0..self.dim()).map(|t| to_dense(&self.act_right(&vec![(t, Rat::one())], &asp), self.dim())).collect();
        Ok(RatMat::from_rows(self.dim(), rows)?)
    }

    /// Same action with module basis renamed (parities must be kept).
    pub fn renamed<S: AsRef<str>>(&self, names: &[S]) -> Result<SuperBimodule> {
        if names.len() != self.dim() {
            return Err(DimensionMismatch { expected: self.dim(), got: names.len() }.into());
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        SuperBimodule::unchecked(
            self.base.clone(),
            names[..self.n_even].to_vec(),
            names[self.n_even..].to_vec(),
            self.action.clone(),
        )
    }

    /// The same module over the unital hull of the base, with the new unit
    /// acting as the identity.
    pub fn over_unital_hull(&self) -> SuperBimodule {
        let hull = self.base.unital_hull();
        let d = self.dim();
        let mut action = Vec::with_capacity(hull.dim() * d);
        for t in 0..d {
            action.push(vec![(t, Rat::one())]);
        }
        action.extend(self.action.iter().cloned());
        SuperBimodule::unchecked(hull, self.even_names().to_vec(), self.odd_names().to_vec(), action)
            .expect("hull action is graded")
    }
}

/// The algebra acting on itself; module basis names carry a trailing `'`.
pub fn regular_bimodule(j: &SuperAlgebra) -> SuperBimodule {
    let prime = |s: &String| format!("{s}'");
    let even = j.even_names().iter().map(prime).collect();
    let odd = j.odd_names().iter().map(prime).collect();
    let d = j.dim();
    let action = (0..d * d).map(|x| j.product(x / d, x % d).clone()).collect();
    SuperBimodule::unchecked(j.clone(), even, odd, action).expect("regular action is graded")
}

/// Parity-swapped module with `a m^op = (-1)^{|a|} (a m)^op`.
pub fn opposite_bimodule(m: &SuperBimodule) -> SuperBimodule {
    let d = m.dim();
    // new order: old odd elements, then old even elements
    let old_of_new: Vec<usize> = (m.n_even..d).chain(0..m.n_even).collect();
    let mut new_of_old = vec![0; d];
    for (n, &o) in old_of_new.iter().enumerate() {
        new_of_old[o] = n;
    }
    let op = |s: &String| {
        s.strip_suffix("^op").map(str::to_string).unwrap_or_else(|| format!("{s}^op"))
    };
    let even = m.odd_names().iter().map(op).collect();
    let odd = m.even_names().iter().map(op).collect();
    let mut action = Vec::with_capacity(m.base.dim() * d);
    for i in 0..m.base.dim() {
        let s = Rat::sign(m.base.parity(i));
        for &o in &old_of_new {
            let mut v: SparseVec = m.left(i, o).iter().map(|(k, c)| (new_of_old[*k], c * &s)).collect();
            v.sort_by_key(|(k, _)| *k);
            action.push(v);
        }
    }
    SuperBimodule::unchecked(m.base.clone(), even, odd, action).expect("opposite action is graded")
}

/// Graded, super-symmetric bilinear map from the base algebra into a module.
#[derive(Clone, Debug, PartialEq)]
pub struct Cocycle {
    base_parity: Vec<u32>,
    module_parity: Vec<u32>,
    // value at (i, j) at index i * base_dim + j
    values: Vec<SparseVec>,
}

impl Cocycle {
    pub fn zero(m: &SuperBimodule) -> Cocycle {
        let jd = m.base.dim();
        Cocycle {
            base_parity: (0..jd).map(|i| m.base.parity(i)).collect(),
            module_parity: (0..m.dim()).map(|t| m.parity(t)).collect(),
            values: vec![Vec::new(); jd * jd],
        }
    }

    pub fn base_dim(&self) -> usize {
        self.base_parity.len()
    }

    pub fn module_dim(&self) -> usize {
        self.module_parity.len()
    }

    pub fn value(&self, i: usize, j: usize) -> &SparseVec {
        &self.values[i * self.base_dim() + j]
    }

    /// Sets `mu(i, j)` and `mu(j, i) = (-1)^{|i||j|} mu(i, j)`.
    pub fn set(&mut self, i: usize, j: usize, value: &[Rat]) -> Result<()> {
        if value.len() != self.module_dim() {
            return Err(DimensionMismatch { expected: self.module_dim(), got: value.len() }.into());
        }
        let p = self.base_parity[i] ^ self.base_parity[j];
        let v = to_sparse(value);
        if v.iter().any(|(t, _)| self.module_parity[*t] != p) {
            return Err(Error::Grading("cocycle value has the wrong parity".into()));
        }
        let s = Rat::sign(self.base_parity[i] * self.base_parity[j]);
        if i == j && s != Rat::one() && !v.is_empty() {
            return Err(Error::Precondition("cocycle must vanish on the square of an odd element".into()));
        }
        let jd = self.base_dim();
        self.values[j * jd + i] = v.iter().map(|(t, c)| (*t, c * &s)).collect();
        self.values[i * jd + j] = v;
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Vec::is_empty)
    }

    pub fn add_scaled(&self, other: &Cocycle, c: &Rat) -> Cocycle {
        let values = self.values.iter().zip(&other.values).map(|(a, b)| crate::exactla::axpy(a, c, b)).collect();
        Cocycle { values, ..self.clone() }
    }
}

/// An extension `J + M` together with where the two parts sit in its basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Extension {
    pub algebra: SuperAlgebra,
    pub base_indices: Vec<usize>,
    pub module_indices: Vec<usize>,
}

impl Extension {
    pub fn radical(&self) -> Subspace {
        Subspace::coordinate(self.algebra.dim(), &self.module_indices)
    }
}

/// `J + M` with `(a, m)(b, n) = (ab, mu(a, b) + a n + m b)`. The basis is
/// the even part of `J`, the even part of `M`, the odd part of `J`, the odd
/// part of `M`.
pub fn build_extension(m: &SuperBimodule, mu: &Cocycle) -> Result<Extension> {
    let j = &m.base;
    if mu.base_dim() != j.dim() || mu.module_dim() != m.dim() {
        return Err(DimensionMismatch { expected: j.dim() * m.dim(), got: mu.base_dim() * mu.module_dim() }.into());
    }
    let (jd, md) = (j.dim(), m.dim());
    let (je, me) = (j.n_even(), m.n_even());
    let bi: Vec<usize> = (0..jd).map(|i| if i < je { i } else { i + me }).collect();
    let mi: Vec<usize> = (0..md).map(|t| if t < me { je + t } else { jd + t }).collect();
    let d = jd + md;
    let mut table = vec![Vec::new(); d * d];
    let lift = |v: &SparseVec, map: &[usize]| -> SparseVec {
        let mut w: SparseVec = v.iter().map(|(k, c)| (map[*k], c.clone())).collect();
        w.sort_by_key(|(k, _)| *k);
        w
    };
    for x in 0..jd {
        for y in 0..jd {
            let mut v = lift(j.product(x, y), &bi);
            v.extend(lift(mu.value(x, y), &mi));
            v.sort_by_key(|(k, _)| *k);
            table[bi[x] * d + bi[y]] = v;
        }
        for t in 0..md {
            table[bi[x] * d + mi[t]] = lift(m.left(x, t), &mi);
            table[mi[t] * d + bi[x]] = lift(&m.right(t, x), &mi);
        }
    }
    let mut even = j.even_names().to_vec();
    even.extend(m.even_names().iter().cloned());
    let mut odd = j.odd_names().to_vec();
    odd.extend(m.odd_names().iter().cloned());
    let mut algebra = SuperAlgebra::new(even.clone(), odd.clone(), table.clone(), None)?;
    if j.unit().is_some() {
        if let Some(u) = algebra.find_unit() {
            algebra = SuperAlgebra::new(even, odd, table, Some(u))?;
        }
    }
    Ok(Extension { algebra, base_indices: bi, module_indices: mi })
}

/// `J + M` with `M^2 = 0` and no twisting.
pub fn split_null_extension(m: &SuperBimodule) -> Result<Extension> {
    build_extension(m, &Cocycle::zero(m))
}

/// Dense module vector from sparse coordinates.
pub fn module_vector(m: &SuperBimodule, v: &SparseVec) -> RatVec {
    to_dense(v, m.dim())
}
