use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use super::SuperBimodule;
use crate::catalog::build_superform;
use crate::error::{Error, Result};
use crate::exactla::{Rat, SparseVec};

/// Normal-ordered monomial `u^e v_1^{i_1} ... v_n^{i_n} w_1^{k_1} ... w_{2m}^{k_{2m}}`
/// of the Clifford–Weyl algebra.
///
/// The `v`s are even, square to 1 and anticommute with each other and with
/// every `w`. The `w`s are odd; `w_{2s-1} w_{2s} - w_{2s} w_{2s-1} = 2` and
/// `w`s from different pairs commute. The optional `u` is one more even
/// generator with `u^2 = 1` anticommuting with all `v`s and `w`s; it is kept
/// leftmost.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CWMonomial {
    u: bool,
    i: Vec<u8>,
    k: Vec<u32>,
}

/// Generators with 1-based indices, matching the names `v1`, `w1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    U,
    V(usize),
    W(usize),
}

impl CWMonomial {
    pub fn new(u: bool, i: Vec<u8>, k: Vec<u32>) -> Result<CWMonomial> {
        if i.iter().any(|&b| b > 1) {
            return Err(Error::Precondition("v exponents must be 0 or 1".into()));
        }
        if k.len() % 2 != 0 {
            return Err(Error::Precondition("there must be an even number of w generators".into()));
        }
        Ok(CWMonomial { u, i, k })
    }

    pub fn one(n: usize, m: usize) -> CWMonomial {
        CWMonomial { u: false, i: vec![0; n], k: vec![0; 2 * m] }
    }

    pub fn generator(n: usize, m: usize, g: Generator) -> Result<CWMonomial> {
        let mut x = CWMonomial::one(n, m);
        match g {
            Generator::U => x.u = true,
            Generator::V(j) if (1..=n).contains(&j) => x.i[j - 1] = 1,
            Generator::W(p) if (1..=2 * m).contains(&p) => x.k[p - 1] = 1,
            _ => return Err(Error::Precondition(format!("generator {g:?} out of range"))),
        }
        Ok(x)
    }

    pub fn has_u(&self) -> bool {
        self.u
    }

    pub fn i(&self) -> &[u8] {
        &self.i
    }

    pub fn k(&self) -> &[u32] {
        &self.k
    }

    pub fn n(&self) -> usize {
        self.i.len()
    }

    pub fn m(&self) -> usize {
        self.k.len() / 2
    }

    fn v_deg(&self) -> u32 {
        self.i.iter().map(|&b| b as u32).sum()
    }

    fn w_deg(&self) -> u32 {
        self.k.iter().sum()
    }

    /// `|I| + |K|`; the `u` factor does not count.
    pub fn degree(&self) -> u32 {
        self.v_deg() + self.w_deg()
    }

    /// `|K| mod 2`.
    pub fn parity(&self) -> u32 {
        self.w_deg() % 2
    }

    /// Name used for module basis elements, such as `[v1v3w1^2]` or `[u]`.
    pub fn name(&self) -> String {
        format!("[{self}]")
    }

    fn compatible(&self, other: &CWMonomial) -> bool {
        self.i.len() == other.i.len() && self.k.len() == other.k.len()
    }

    fn generators(&self) -> Vec<Generator> {
        let mut g = Vec::new();
        if self.u {
            g.push(Generator::U);
        }
        for (j, &b) in self.i.iter().enumerate() {
            if b == 1 {
                g.push(Generator::V(j + 1));
            }
        }
        for (p, &e) in self.k.iter().enumerate() {
            for _ in 0..e {
                g.push(Generator::W(p + 1));
            }
        }
        g
    }

    fn sort_key(&self) -> (u32, std::cmp::Reverse<(Vec<u8>, Vec<u32>)>) {
        (self.degree(), std::cmp::Reverse((self.i.clone(), self.k.clone())))
    }
}

impl fmt::Display for CWMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        if self.u {
            s.push('u');
        }
        for (j, &b) in self.i.iter().enumerate() {
            if b == 1 {
                s.push_str(&format!("v{}", j + 1));
            }
        }
        for (p, &e) in self.k.iter().enumerate() {
            match e {
                0 => {}
                1 => s.push_str(&format!("w{}", p + 1)),
                _ => s.push_str(&format!("w{}^{}", p + 1, e)),
            }
        }
        if s.is_empty() {
            s.push('1');
        }
        f.write_str(&s)
    }
}

type Poly = BTreeMap<CWMonomial, Rat>;

fn add_term(p: &mut Poly, x: CWMonomial, c: Rat) {
    if c.is_zero() {
        return;
    }
    match p.entry(x) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(c);
        }
    }
}

/// `x g` brought back to normal order.
fn mul_generator_right(x: &CWMonomial, c: &Rat, g: Generator, out: &mut Poly) {
    match g {
        Generator::U => {
            let mut y = x.clone();
            y.u = !y.u;
            add_term(out, y, c * &Rat::sign(x.v_deg() + x.w_deg()));
        }
        Generator::V(j) => {
            let j = j - 1;
            let later: u32 = x.i[j + 1..].iter().map(|&b| b as u32).sum();
            let mut y = x.clone();
            y.i[j] ^= 1;
            add_term(out, y, c * &Rat::sign(x.w_deg() + later));
        }
        Generator::W(p) => {
            let p = p - 1;
            let mut y = x.clone();
            y.k[p] += 1;
            add_term(out, y, c.clone());
            // w_{2s}^b w_{2s-1} = w_{2s-1} w_{2s}^b - 2b w_{2s}^{b-1}
            if p % 2 == 0 && x.k[p + 1] > 0 {
                let b = x.k[p + 1];
                let mut z = x.clone();
                z.k[p + 1] -= 1;
                add_term(out, z, c * &Rat::from_int(-2 * b as i64));
            }
        }
    }
}

fn to_terms(p: Poly) -> Vec<(Rat, CWMonomial)> {
    p.into_iter().map(|(x, c)| (c, x)).collect()
}

/// Associative product of two monomials, expanded in normal order.
pub fn cw_normal_product(p: &CWMonomial, q: &CWMonomial) -> Result<Vec<(Rat, CWMonomial)>> {
    if !p.compatible(q) {
        return Err(Error::Precondition("monomials over different generator sets".into()));
    }
    let mut cur: Poly = BTreeMap::new();
    cur.insert(p.clone(), Rat::one());
    for g in q.generators() {
        let mut next = BTreeMap::new();
        for (x, c) in &cur {
            mul_generator_right(x, c, g, &mut next);
        }
        cur = next;
    }
    Ok(to_terms(cur))
}

/// `(pq + (-1)^{|p||q|} qp) / 2` from the associative product.
pub fn symmetric_product(p: &CWMonomial, q: &CWMonomial) -> Result<Vec<(Rat, CWMonomial)>> {
    let half = Rat::new(1, 2);
    let s = Rat::sign(p.parity() * q.parity());
    let mut out = BTreeMap::new();
    for (c, x) in cw_normal_product(p, q)? {
        add_term(&mut out, x, &c * &half);
    }
    for (c, x) in cw_normal_product(q, p)? {
        add_term(&mut out, x, &(&c * &half) * &s);
    }
    Ok(to_terms(out))
}

/// Closed form of the symmetric product `p o g` with a generator `v_j` or `w_p`.
///
/// With `|eta| = |I| + |K|` and `s_j = i_1 + ... + i_{j-1}`:
///
/// * `eta o v_j = (1/2)(-1)^{s_j} (1 + (-1)^{|eta| - i_j}) V_{I xor e_j} W_K`;
///   for `u`-monomials the bracket is `((-1)^{|eta| - i_j} - 1)`.
/// * `eta o w_p = (1/2)(1 + (-1)^{|eta|}) V_I W_{K + e_p} - c k_q V_I W_{K - e_q}`,
///   where `q` is the partner of `p` in its pair, `c = 1` for odd `p` and
///   `c = (-1)^{|eta|}` for even `p`. For `u`-monomials the first bracket is
///   `(1 - (-1)^{|eta|})` and `c` changes sign for even `p`.
pub fn symmetric_product_formula(x: &CWMonomial, g: Generator) -> Result<Vec<(Rat, CWMonomial)>> {
    let (n, m) = (x.n(), x.m());
    let eta = x.degree();
    let half = Rat::new(1, 2);
    let mut out = BTreeMap::new();
    match g {
        Generator::U => return Err(Error::Precondition("closed form covers v and w generators only".into())),
        Generator::V(j) => {
            if !(1..=n).contains(&j) {
                return Err(Error::Precondition(format!("v{j} out of range")));
            }
            let ij = x.i[j - 1] as u32;
            let sj: u32 = x.i[..j - 1].iter().map(|&b| b as u32).sum();
            let bracket = if x.u {
                Rat::sign(eta + 2 - ij) - Rat::one()
            } else {
                Rat::one() + Rat::sign(eta + 2 - ij)
            };
            let mut y = x.clone();
            y.i[j - 1] ^= 1;
            add_term(&mut out, y, &(&half * &Rat::sign(sj)) * &bracket);
        }
        Generator::W(p) => {
            if !(1..=2 * m).contains(&p) {
                return Err(Error::Precondition(format!("w{p} out of range")));
            }
            let bracket = if x.u { Rat::one() - Rat::sign(eta) } else { Rat::one() + Rat::sign(eta) };
            let mut up = x.clone();
            up.k[p - 1] += 1;
            add_term(&mut out, up, &half * &bracket);
            let (q, c) = if p % 2 == 1 {
                (p + 1, Rat::one())
            } else if x.u {
                (p - 1, -Rat::sign(eta))
            } else {
                (p - 1, Rat::sign(eta))
            };
            let kq = x.k[q - 1];
            if kq > 0 {
                let mut down = x.clone();
                down.k[q - 1] -= 1;
                add_term(&mut out, down, -(&c * &Rat::from_int(kq as i64)));
            }
        }
    }
    Ok(to_terms(out))
}

fn compositions(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if parts == 1 {
        prefix.push(total);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for a in 0..=total {
        prefix.push(a);
        compositions(total - a, parts - 1, prefix, out);
        prefix.pop();
    }
}

/// All monomials of the given degree, ordered by decreasing exponent vector `(I, K)`.
pub fn monomials(n: usize, m: usize, degree: u32, u: bool) -> Vec<CWMonomial> {
    let mut out = Vec::new();
    for bits in 0u64..(1 << n) {
        let i: Vec<u8> = (0..n).map(|j| ((bits >> j) & 1) as u8).collect();
        let vd: u32 = i.iter().map(|&b| b as u32).sum();
        if vd > degree {
            continue;
        }
        let mut ks = Vec::new();
        if m == 0 {
            if vd == degree {
                ks.push(Vec::new());
            }
        } else {
            compositions(degree - vd, 2 * m, &mut Vec::new(), &mut ks);
        }
        for k in ks {
            out.push(CWMonomial { u, i: i.clone(), k });
        }
    }
    out.sort_by_key(|x| x.sort_key());
    out
}

/// Monomials of degree `r - 1` and `r`, even ones (`|K|` even) first.
pub fn window_monomials(n: usize, m: usize, r: u32, u: bool) -> Vec<CWMonomial> {
    let mut all = Vec::new();
    if r >= 1 {
        all.extend(monomials(n, m, r - 1, u));
    }
    all.extend(monomials(n, m, r, u));
    let (mut even, odd): (Vec<_>, Vec<_>) = all.into_iter().partition(|x| x.parity() == 0);
    even.extend(odd);
    even
}

fn quotient_module(n: usize, m: usize, r: u32, u: bool) -> Result<SuperBimodule> {
    let base = build_superform(n, m)?;
    let basis = window_monomials(n, m, r, u);
    let index: HashMap<&CWMonomial, usize> = basis.iter().enumerate().map(|(t, x)| (x, t)).collect();
    let d = basis.len();
    let truncate = |terms: Vec<(Rat, CWMonomial)>, s: &Rat| -> SparseVec {
        let mut v: SparseVec =
            terms.into_iter().filter_map(|(c, x)| index.get(&x).map(|&t| (t, &c * s))).collect();
        v.sort_by_key(|(t, _)| *t);
        v
    };
    let mut action = Vec::with_capacity(base.dim() * d);
    for b in 0..base.dim() {
        let name = base.name(b);
        for (t, x) in basis.iter().enumerate() {
            let v = if name == "1" {
                vec![(t, Rat::one())]
            } else if let Some(j) = name.strip_prefix('v') {
                truncate(symmetric_product_formula(x, Generator::V(j.parse().unwrap()))?, &Rat::one())
            } else {
                let p = name.strip_prefix('w').unwrap().parse().unwrap();
                // b eta = (-1)^{|b||eta|} eta o b
                truncate(symmetric_product_formula(x, Generator::W(p))?, &Rat::sign(x.parity()))
            };
            action.push(v);
        }
    }
    let ne = basis.iter().filter(|x| x.parity() == 0).count();
    let names: Vec<String> = basis.iter().map(CWMonomial::name).collect();
    SuperBimodule::new(base, names[..ne].to_vec(), names[ne..].to_vec(), action)
}

/// `C_r / C_{r-2}` over the superform algebra with `n` even and `2m` odd
/// generators: monomials of degree `r - 1` and `r`, acted on by the symmetric
/// product with lower-degree terms dropped. The result is validated as a
/// Jordan bimodule, which only succeeds for odd `r`; see
/// [`clifford_quotient_bimodule_u`] for even `r`.
pub fn clifford_quotient_bimodule(n: usize, m: usize, r: u32) -> Result<SuperBimodule> {
    if r < 1 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    quotient_module(n, m, r, false)
}

/// `u C_r / u C_{r-2}` for even `r`.
pub fn clifford_quotient_bimodule_u(n: usize, m: usize, r: u32) -> Result<SuperBimodule> {
    if r < 2 || r % 2 != 0 {
        return Err(Error::Precondition("r must be a positive even integer".into()));
    }
    quotient_module(n, m, r, true)
}
