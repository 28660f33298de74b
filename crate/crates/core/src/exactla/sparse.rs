use super::rat::Rat;

/// Sparse vector as `(index, value)` pairs, strictly increasing indices, no zero values.
pub type SparseVec = Vec<(usize, Rat)>;

pub fn to_sparse(v: &[Rat]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, x.clone()))
        .collect()
}

pub fn to_dense(v: &SparseVec, len: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `a + c * b`.
pub fn axpy(a: &SparseVec, c: &Rat, b: &SparseVec) -> SparseVec {
    if c.is_zero() {
        return a.clone();
    }
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
            out.push(a[i].clone());
            i += 1;
        } else if i == a.len() || b[j].0 < a[i].0 {
            out.push((b[j].0, c * &b[j].1));
            j += 1;
        } else {
            let s = &a[i].1 + &(c * &b[j].1);
            if !s.is_zero() {
                out.push((a[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(a: &SparseVec, c: &Rat) -> SparseVec {
    if c.is_zero() {
        return Vec::new();
    }
    a.iter().map(|(i, x)| (*i, x * c)).collect()
}

pub fn dot_dense(a: &SparseVec, b: &[Rat]) -> Rat {
    let mut s = Rat::zero();
    for (i, x) in a {
        if !b[*i].is_zero() {
            s += x * &b[*i];
        }
    }
    s
}

/// Dense scratch accumulator that remembers which slots were touched.
#[derive(Clone, Debug)]
pub struct Accumulator {
    vals: Vec<Rat>,
    touched: Vec<usize>,
    mark: Vec<bool>,
}

impl Accumulator {
    pub fn new(len: usize) -> Accumulator {
        Accumulator { vals: vec![Rat::zero(); len], touched: Vec::new(), mark: vec![false; len] }
    }

    #[inline]
    pub fn add(&mut self, i: usize, x: &Rat) {
        if !self.mark[i] {
            self.mark[i] = true;
            self.touched.push(i);
        }
        self.vals[i] += x;
    }

    #[inline]
    pub fn add_scaled(&mut self, v: &SparseVec, c: &Rat) {
        for (i, x) in v {
            let p = x * c;
            self.add(*i, &p);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.touched.iter().all(|&i| self.vals[i].is_zero())
    }

    /// Returns the accumulated vector and resets the accumulator.
    pub fn take(&mut self) -> SparseVec {
        self.touched.sort_unstable();
        let mut out = Vec::new();
        for &i in &self.touched {
            let x = std::mem::take(&mut self.vals[i]);
            if !x.is_zero() {
                out.push((i, x));
            }
            self.mark[i] = false;
        }
        self.touched.clear();
        out
    }

    pub fn clear(&mut self) {
        for &i in &self.touched {
            self.vals[i] = Rat::zero();
            self.mark[i] = false;
        }
        self.touched.clear();
    }
}
