use super::rat::Rat;
use super::sparse::{axpy, scale, SparseVec};

/// A linear combination of inserted rows proving `0 = rhs` with `rhs != 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    /// Multipliers indexed by insertion order of the original rows.
    pub multipliers: SparseVec,
    pub rhs: Rat,
}

impl Certificate {
    /// Checks `y^T A = 0` and `y^T b = rhs != 0` against the original system.
    pub fn verify(&self, rows: &[SparseVec], rhs: &[Rat], ncols: usize) -> bool {
        let mut acc = vec![Rat::zero(); ncols];
        let mut b = Rat::zero();
        for (r, y) in &self.multipliers {
            let Some(row) = rows.get(*r) else { return false };
            for (c, x) in row {
                acc[*c] += y * x;
            }
            b += y * &rhs[*r];
        }
        acc.iter().all(Rat::is_zero) && b == self.rhs && !b.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Insert {
    /// New pivot at this column.
    Pivot(usize),
    Redundant,
    Inconsistent(Certificate),
}

#[derive(Clone, Debug)]
struct Row {
    coeffs: SparseVec,
    rhs: Rat,
    comb: SparseVec,
}

/// Incremental row echelon form over `Q` with sparse rows.
///
/// Every stored row has leading coefficient 1 and a distinct leading column.
/// The set of leading columns equals the pivot set of the reduced row echelon
/// form of everything inserted, whatever the insertion order.
#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<Row>,
    pivot_row: Vec<Option<usize>>,
    track: bool,
    inserted: usize,
}

impl Echelon {
    pub fn new(ncols: usize, track_provenance: bool) -> Echelon {
        Echelon { ncols, rows: Vec::new(), pivot_row: vec![None; ncols], track: track_provenance, inserted: 0 }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn inserted(&self) -> usize {
        self.inserted
    }

    /// Sorted pivot columns.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| self.pivot_row[*c].is_some()).collect()
    }

    fn reduce(&self, mut coeffs: SparseVec, mut rhs: Rat, mut comb: SparseVec) -> Row {
        while let Some((lead, c)) = coeffs.first().cloned() {
            let Some(r) = self.pivot_row[lead] else { break };
            let p = &self.rows[r];
            let m = -c;
            coeffs = axpy(&coeffs, &m, &p.coeffs);
            rhs += &m * &p.rhs;
            if self.track {
                comb = axpy(&comb, &m, &p.comb);
            }
        }
        Row { coeffs, rhs, comb }
    }

    /// Inserts the equation `row . x = rhs`.
    pub fn insert(&mut self, row: SparseVec, rhs: Rat) -> Insert {
        let id = self.inserted;
        self.inserted += 1;
        debug_assert!(row.iter().all(|(c, x)| *c < self.ncols && !x.is_zero()));
        let comb = if self.track { vec![(id, Rat::one())] } else { Vec::new() };
        let red = self.reduce(row, rhs, comb);
        match red.coeffs.first() {
            None if red.rhs.is_zero() => Insert::Redundant,
            None => Insert::Inconsistent(Certificate { multipliers: red.comb, rhs: red.rhs }),
            Some((lead, c)) => {
                let lead = *lead;
                let inv = c.recip();
                let row = Row {
                    coeffs: scale(&red.coeffs, &inv),
                    rhs: &red.rhs * &inv,
                    comb: if self.track { scale(&red.comb, &inv) } else { Vec::new() },
                };
                self.pivot_row[lead] = Some(self.rows.len());
                self.rows.push(row);
                Insert::Pivot(lead)
            }
        }
    }

    /// Whether `row` lies in the span of the inserted rows.
    pub fn in_row_space(&self, row: &SparseVec) -> bool {
        self.reduce(row.clone(), Rat::zero(), Vec::new()).coeffs.is_empty()
    }

    /// Fully reduced rows sorted by pivot column, as `(pivot, coeffs, rhs)`.
    pub fn reduced_rows(&self) -> Vec<(usize, SparseVec, Rat)> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.rows[r].coeffs[0].0);
        let mut done: Vec<Option<(SparseVec, Rat)>> = vec![None; self.rows.len()];
        for &r in order.iter().rev() {
            let mut coeffs = self.rows[r].coeffs.clone();
            let mut rhs = self.rows[r].rhs.clone();
            let lead = coeffs[0].0;
            loop {
                let next = coeffs
                    .iter()
                    .find(|(c, _)| *c != lead && self.pivot_row[*c].is_some())
                    .cloned();
                let Some((col, x)) = next else { break };
                let pr = self.pivot_row[col].unwrap();
                let (pc, prhs) = done[pr].as_ref().expect("rows with larger pivots are reduced first");
                let m = -x;
                coeffs = axpy(&coeffs, &m, pc);
                rhs += &m * prhs;
            }
            done[r] = Some((coeffs, rhs));
        }
        order
            .into_iter()
            .map(|r| {
                let (c, b) = done[r].take().unwrap();
                (c[0].0, c, b)
            })
            .collect()
    }

    /// Solution with every free variable set to zero. Only meaningful when no
    /// insertion was inconsistent.
    pub fn particular_solution(&self) -> Vec<Rat> {
        let mut x = vec![Rat::zero(); self.ncols];
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| std::cmp::Reverse(self.rows[r].coeffs[0].0));
        for r in order {
            let row = &self.rows[r];
            let lead = row.coeffs[0].0;
            let mut v = row.rhs.clone();
            for (c, a) in &row.coeffs[1..] {
                if !x[*c].is_zero() {
                    v -= a * &x[*c];
                }
            }
            x[lead] = v;
        }
        x
    }

    /// Basis of the null space of the coefficient matrix, one vector per free
    /// column in increasing order, with a 1 in that column.
    pub fn kernel_basis(&self) -> Vec<Vec<Rat>> {
        let rows = self.reduced_rows();
        let free: Vec<usize> = (0..self.ncols).filter(|c| self.pivot_row[*c].is_none()).collect();
        let mut pos = vec![usize::MAX; self.ncols];
        for (k, f) in free.iter().enumerate() {
            pos[*f] = k;
        }
        let mut basis: Vec<Vec<Rat>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![Rat::zero(); self.ncols];
                v[f] = Rat::one();
                v
            })
            .collect();
        for (p, coeffs, _) in &rows {
            for (c, a) in &coeffs[1..] {
                basis[pos[*c]][*p] = -a;
            }
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(v: &[(usize, i64)]) -> SparseVec {
        v.iter().map(|(i, x)| (*i, Rat::from_int(*x))).collect()
    }

    #[test]
    fn order_independent_pivots() {
        let rows = [sv(&[(1, 1), (2, 1)]), sv(&[(0, 1), (1, 1)]), sv(&[(0, 1), (2, -1)])];
        let mut a = Echelon::new(3, false);
        let mut b = Echelon::new(3, false);
        for r in rows.iter() {
            a.insert(r.clone(), Rat::zero());
        }
        for r in rows.iter().rev() {
            b.insert(r.clone(), Rat::zero());
        }
        assert_eq!(a.pivots(), vec![0, 1]);
        assert_eq!(b.pivots(), vec![0, 1]);
        assert_eq!(a.reduced_rows(), b.reduced_rows());
    }

    #[test]
    fn certificate_verifies() {
        let rows = vec![sv(&[(0, 1), (1, 1)]), sv(&[(0, 2), (1, 2)])];
        let rhs = vec![Rat::one(), Rat::from_int(3)];
        let mut e = Echelon::new(2, true);
        assert_eq!(e.insert(rows[0].clone(), rhs[0].clone()), Insert::Pivot(0));
        let Insert::Inconsistent(cert) = e.insert(rows[1].clone(), rhs[1].clone()) else {
            panic!("expected inconsistency")
        };
        assert!(cert.verify(&rows, &rhs, 2));
        assert_eq!(cert.rhs, Rat::one());
    }
}
