use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactla::{to_dense, to_sparse, Accumulator, Echelon, Insert, Rat, RatMat, RatVec, SparseVec};

/// Element coordinates in the basis of an algebra.
pub type Element = RatVec;

/// Z2-graded algebra given by structure constants.
///
/// The basis is ordered with all even elements first. The product of every
/// ordered pair of basis elements is stored, so a table that breaks
/// supercommutativity is representable and can be reported.
#[derive(Clone, Debug, PartialEq)]
pub struct SuperAlgebra {
    names: Vec<String>,
    n_even: usize,
    table: Vec<SparseVec>,
    unit: Option<RatVec>,
}

impl SuperAlgebra {
    /// `table[i * dim + j]` is the product `b_i b_j`.
    pub fn new(
        even: Vec<String>,
        odd: Vec<String>,
        table: Vec<SparseVec>,
        unit: Option<RatVec>,
    ) -> Result<SuperAlgebra> {
        let n_even = even.len();
        let mut names = even;
        names.extend(odd);
        let dim = names.len();
        let mut seen = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if seen.insert(n.clone(), i).is_some() {
                return Err(Error::DuplicateName(n.clone()));
            }
        }
        if table.len() != dim * dim {
            return Err(crate::exactla::DimensionMismatch { expected: dim * dim, got: table.len() }.into());
        }
        let alg = SuperAlgebra { names, n_even, table, unit: None };
        for i in 0..dim {
            for j in 0..dim {
                let p = alg.parity(i) ^ alg.parity(j);
                for (k, _) in alg.product(i, j) {
                    if *k >= dim {
                        return Err(crate::exactla::DimensionMismatch { expected: dim, got: *k + 1 }.into());
                    }
                    if alg.parity(*k) != p {
                        return Err(Error::Grading(format!(
                            "{}*{} has a component along {}",
                            alg.names[i], alg.names[j], alg.names[*k]
                        )));
                    }
                }
            }
        }
        let mut alg = alg;
        if let Some(u) = unit {
            alg.check_len(&u)?;
            if !alg.acts_as_unit(&u) {
                return Err(Error::Precondition("declared unit does not act as identity".into()));
            }
            alg.unit = Some(u);
        }
        Ok(alg)
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn n_even(&self) -> usize {
        self.n_even
    }

    pub fn n_odd(&self) -> usize {
        self.names.len() - self.n_even
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

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    /// 0 for even basis elements, 1 for odd ones.
    #[inline]
    pub fn parity(&self, i: usize) -> u32 {
        (i >= self.n_even) as u32
    }

    pub fn unit(&self) -> Option<&RatVec> {
        self.unit.as_ref()
    }

    #[inline]
    pub fn product(&self, i: usize, j: usize) -> &SparseVec {
        &self.table[i * self.dim() + j]
    }

    pub fn product_dense(&self, i: usize, j: usize) -> RatVec {
        to_dense(self.product(i, j), self.dim())
    }

    pub fn basis_vector(&self, i: usize) -> RatVec {
        let mut v = vec![Rat::zero(); self.dim()];
        v[i] = Rat::one();
        v
    }

    /// Element from `(name, coefficient)` pairs.
    pub fn element(&self, terms: &[(&str, Rat)]) -> Result<RatVec> {
        let mut v = vec![Rat::zero(); self.dim()];
        for (n, c) in terms {
            v[self.index(n)?] += c;
        }
        Ok(v)
    }

    pub(crate) fn check_len(&self, v: &[Rat]) -> Result<()> {
        if v.len() != self.dim() {
            return Err(crate::exactla::DimensionMismatch { expected: self.dim(), got: v.len() }.into());
        }
        Ok(())
    }

    pub(crate) fn mul_sparse_into(&self, a: &SparseVec, b: &SparseVec, c: &Rat, acc: &mut Accumulator) {
        for (i, x) in a {
            for (j, y) in b {
                let p = self.product(*i, *j);
                if !p.is_empty() {
                    acc.add_scaled(p, &(c * &(x * y)));
                }
            }
        }
    }

    pub fn mul_sparse(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut acc = Accumulator::new(self.dim());
        self.mul_sparse_into(a, b, &Rat::one(), &mut acc);
        acc.take()
    }

    /// Bilinear product of two elements.
    pub fn multiply(&self, a: &[Rat], b: &[Rat]) -> Result<RatVec> {
        self.check_len(a)?;
        self.check_len(b)?;
        Ok(to_dense(&self.mul_sparse(&to_sparse(a), &to_sparse(b)), self.dim()))
    }

    /// `Some(parity)` if `v` is homogeneous; zero counts as even.
    pub fn homogeneous_parity(&self, v: &[Rat]) -> Option<u32> {
        let even = v[..self.n_even].iter().any(|x| !x.is_zero());
        let odd = v[self.n_even..].iter().any(|x| !x.is_zero());
        match (even, odd) {
            (true, true) => None,
            (false, true) => Some(1),
            _ => Some(0),
        }
    }

    fn acts_as_unit(&self, u: &[Rat]) -> bool {
        let us = to_sparse(u);
        (0..self.dim()).all(|i| {
            let b = vec![(i, Rat::one())];
            let l = self.mul_sparse(&us, &b);
            let r = self.mul_sparse(&b, &us);
            l == b && r == b
        })
    }

    /// Searches for a two-sided identity element by solving the linear system
    /// `u b_i = b_i = b_i u`.
    pub fn find_unit(&self) -> Option<RatVec> {
        let d = self.dim();
        let mut e = Echelon::new(d, false);
        for i in 0..d {
            let mut left: Vec<SparseVec> = vec![Vec::new(); d];
            let mut right: Vec<SparseVec> = vec![Vec::new(); d];
            for a in 0..d {
                for (k, c) in self.product(a, i) {
                    left[*k].push((a, c.clone()));
                }
                for (k, c) in self.product(i, a) {
                    right[*k].push((a, c.clone()));
                }
            }
            for (k, (l, r)) in left.into_iter().zip(right).enumerate() {
                let target = if i == k { Rat::one() } else { Rat::zero() };
                for row in [l, r] {
                    if let Insert::Inconsistent(_) = e.insert(row, target.clone()) {
                        return None;
                    }
                }
            }
        }
        let u = e.particular_solution();
        self.acts_as_unit(&u).then_some(u)
    }

    /// Matrix of `x -> x a` acting on row vectors: row `i` holds `b_i a`.
    pub fn right_mult_matrix(&self, a: &[Rat]) -> Result<RatMat> {
        self.check_len(a)?;
        if self.homogeneous_parity(a).is_none() {
            return Err(Error::Precondition("right multiplication needs a homogeneous element".into()));
        }
        let asp = to_sparse(a);
        let rows = (0..self.dim())
            .map(|i| to_dense(&self.mul_sparse(&vec![(i, Rat::one())], &asp), self.dim()))
            .collect();
        Ok(RatMat::from_rows(self.dim(), rows)?)
    }

    /// Copy with the product `b_i b_j` replaced; the grading is re-checked.
    pub fn with_product(&self, i: usize, j: usize, value: &[Rat]) -> Result<SuperAlgebra> {
        self.check_len(value)?;
        let mut table = self.table.clone();
        table[i * self.dim() + j] = to_sparse(value);
        SuperAlgebra::new(self.even_names().to_vec(), self.odd_names().to_vec(), table, None)
    }

    /// Adjoins a new even basis element acting as a two-sided identity. It is
    /// placed first and named `1`, or `1#` (with more `#` as needed) if `1` is taken.
    pub fn unital_hull(&self) -> SuperAlgebra {
        let mut one = "1".to_string();
        while self.index_of(&one).is_some() {
            one.push('#');
        }
        let d = self.dim() + 1;
        let mut table = vec![Vec::new(); d * d];
        table[0] = vec![(0, Rat::one())];
        for i in 1..d {
            table[i] = vec![(i, Rat::one())];
            table[i * d] = vec![(i, Rat::one())];
            for j in 1..d {
                table[i * d + j] = self.product(i - 1, j - 1).iter().map(|(k, c)| (k + 1, c.clone())).collect();
            }
        }
        let mut even = vec![one];
        even.extend(self.even_names().iter().cloned());
        let mut unit = vec![Rat::zero(); d];
        unit[0] = Rat::one();
        SuperAlgebra::new(even, self.odd_names().to_vec(), table, Some(unit)).expect("hull of a valid algebra")
    }
}

/// Incremental construction of a table from named products.
#[derive(Clone, Debug)]
pub struct AlgebraBuilder {
    even: Vec<String>,
    odd: Vec<String>,
    index: HashMap<String, usize>,
    table: Vec<Option<SparseVec>>,
    unit: Option<Vec<(String, Rat)>>,
}

impl AlgebraBuilder {
    pub fn new<S: AsRef<str>>(even: &[S], odd: &[S]) -> AlgebraBuilder {
        let even: Vec<String> = even.iter().map(|s| s.as_ref().to_string()).collect();
        let odd: Vec<String> = odd.iter().map(|s| s.as_ref().to_string()).collect();
        let index = even.iter().chain(&odd).enumerate().map(|(i, n)| (n.clone(), i)).collect();
        let d = even.len() + odd.len();
        AlgebraBuilder { even, odd, index, table: vec![None; d * d], unit: None }
    }

    fn dim(&self) -> usize {
        self.even.len() + self.odd.len()
    }

    fn idx(&self, name: &str) -> Result<usize> {
        self.index.get(name).copied().ok_or_else(|| Error::UnknownName(name.to_string()))
    }

    fn vector(&self, value: &[(&str, Rat)]) -> Result<SparseVec> {
        let mut v = vec![Rat::zero(); self.dim()];
        for (n, c) in value {
            v[self.idx(n)?] += c;
        }
        Ok(to_sparse(&v))
    }

    pub fn parity_of(&self, name: &str) -> Result<u32> {
        Ok((self.idx(name)? >= self.even.len()) as u32)
    }

    /// Whether a product for this ordered pair was set.
    pub fn is_set(&self, left: &str, right: &str) -> Result<bool> {
        let (i, j) = (self.idx(left)?, self.idx(right)?);
        Ok(self.table[i * self.dim() + j].is_some())
    }

    pub fn get(&self, left: &str, right: &str) -> Result<Option<SparseVec>> {
        let (i, j) = (self.idx(left)?, self.idx(right)?);
        Ok(self.table[i * self.dim() + j].clone())
    }

    /// Sets `left * right` only.
    pub fn set(&mut self, left: &str, right: &str, value: &[(&str, Rat)]) -> Result<&mut Self> {
        let v = self.vector(value)?;
        self.set_sparse(left, right, v)
    }

    pub fn set_sparse(&mut self, left: &str, right: &str, value: SparseVec) -> Result<&mut Self> {
        let (i, j) = (self.idx(left)?, self.idx(right)?);
        let d = self.dim();
        self.table[i * d + j] = Some(value);
        Ok(self)
    }

    /// Sets `left * right` and the opposite order by supercommutativity.
    pub fn set_super(&mut self, left: &str, right: &str, value: &[(&str, Rat)]) -> Result<&mut Self> {
        let v = self.vector(value)?;
        let s = Rat::sign(self.parity_of(left)? * self.parity_of(right)?);
        let w = v.iter().map(|(k, c)| (*k, c * &s)).collect();
        self.set_sparse(left, right, v)?;
        self.set_sparse(right, left, w)
    }

    pub fn unit(&mut self, value: &[(&str, Rat)]) -> &mut Self {
        self.unit = Some(value.iter().map(|(n, c)| (n.to_string(), c.clone())).collect());
        self
    }

    pub fn build(&self) -> Result<SuperAlgebra> {
        let table = self.table.iter().map(|v| v.clone().unwrap_or_default()).collect();
        let unit = match &self.unit {
            None => None,
            Some(terms) => {
                let mut u = vec![Rat::zero(); self.dim()];
                for (n, c) in terms {
                    u[self.idx(n)?] += c;
                }
                Some(u)
            }
        };
        SuperAlgebra::new(self.even.clone(), self.odd.clone(), table, unit)
    }
}

/// Shorthand for building rationals in tables.
pub fn q(n: i64, d: i64) -> Rat {
    Rat::new(n, d)
}
