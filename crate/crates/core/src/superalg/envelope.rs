use super::algebra::SuperAlgebra;
use super::identities::{check_super_jordan, check_supercommutativity, IdentityReport};
use crate::error::{Error, Result};
use crate::exactla::{Accumulator, Rat, SparseVec};

/// Product of Grassmann monomials given as generator bitmasks: `None` when
/// they share a generator, otherwise the sign and the union.
pub fn grassmann_mul(g: u32, h: u32) -> Option<(Rat, u32)> {
    if g & h != 0 {
        return None;
    }
    // each generator of h moves left past the generators of g with larger index
    let mut swaps = 0;
    let mut rest = h;
    while rest != 0 {
        let b = rest.trailing_zeros();
        swaps += (g >> (b + 1)).count_ones();
        rest &= rest - 1;
    }
    Some((Rat::sign(swaps), g | h))
}

fn mask_name(g: u32) -> String {
    if g == 0 {
        return "1".into();
    }
    (0..32).filter(|b| g >> b & 1 == 1).map(|b| format!("g{}", b + 1)).collect::<Vec<_>>().join("")
}

/// The ordinary algebra `G_0 (x) A_0 + G_1 (x) A_1` over the Grassmann algebra
/// with `g` generators, as a superalgebra whose basis is entirely even.
///
/// Basis elements are `gamma (x) a` with matching parities; products are
/// `(gamma (x) a)(delta (x) b) = (-1)^{|a||delta|} gamma delta (x) ab`.
pub fn grassmann_envelope(a: &SuperAlgebra, g: u32) -> Result<SuperAlgebra> {
    if !(2..=16).contains(&g) {
        return Err(Error::Precondition("number of Grassmann generators must be between 2 and 16".into()));
    }
    let mut basis: Vec<(u32, usize)> = Vec::new();
    for x in 0..a.dim() {
        for mask in 0u32..(1 << g) {
            if mask.count_ones() % 2 == a.parity(x) {
                basis.push((mask, x));
            }
        }
    }
    let index: std::collections::HashMap<(u32, usize), usize> =
        basis.iter().enumerate().map(|(i, k)| (*k, i)).collect();
    let d = basis.len();
    let mut acc = Accumulator::new(d);
    let mut table: Vec<SparseVec> = Vec::with_capacity(d * d);
    for &(gm, x) in &basis {
        for &(hm, y) in &basis {
            if let Some((s, m)) = grassmann_mul(gm, hm) {
                let s = &s * &Rat::sign(a.parity(x) * (hm.count_ones() % 2));
                for (z, c) in a.product(x, y) {
                    acc.add(index[&(m, *z)], &(&s * c));
                }
            }
            table.push(acc.take());
        }
    }
    let names = basis.iter().map(|(m, x)| format!("{}*{}", mask_name(*m), a.name(*x))).collect();
    SuperAlgebra::new(names, Vec::new(), table, None)
}

/// Commutativity and the Jordan identity on the Grassmann envelope.
pub fn grassmann_envelope_check(a: &SuperAlgebra, g: u32) -> Result<IdentityReport> {
    let env = grassmann_envelope(a, g)?;
    let c = check_supercommutativity(&env);
    if !c.holds {
        return Ok(c);
    }
    check_super_jordan(&env)
}
