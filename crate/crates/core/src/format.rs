//! JSON file formats for superalgebras, bimodules, cocycles and subspaces.
//!
//! Rationals are strings such as `"3"` or `"-2/5"`. Vectors are maps from
//! basis names to coefficients with zero entries omitted.

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::bimodule::{Cocycle, SuperBimodule};
use crate::error::{Error, Result};
use crate::exactla::{to_sparse, Rat, RatVec, SparseVec};
use crate::superalg::{AlgebraBuilder, Subspace, SuperAlgebra};

pub type NamedVector = IndexMap<String, Rat>;

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductEntry {
    pub left: String,
    pub right: String,
    pub value: NamedVector,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraFile {
    pub even: Vec<String>,
    pub odd: Vec<String>,
    #[serde(default)]
    pub unit: Option<NamedVector>,
    #[serde(default)]
    pub products: Vec<ProductEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ActionEntry {
    pub alg: String,
    #[serde(rename = "mod")]
    pub module: String,
    pub value: NamedVector,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleFile {
    pub module_even: Vec<String>,
    pub module_odd: Vec<String>,
    #[serde(default)]
    pub action: Vec<ActionEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CocycleFile {
    #[serde(default)]
    pub pairs: Vec<ProductEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SubspaceFile {
    pub basis: Vec<NamedVector>,
}

/// A parsed algebra and the ordered pairs whose product was filled in by
/// supercommutativity.
#[derive(Clone, Debug)]
pub struct LoadedAlgebra {
    pub algebra: SuperAlgebra,
    pub inferred: Vec<(String, String)>,
}

pub fn named_vector(names: &[String], v: &[Rat]) -> NamedVector {
    names.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(n, c)| (n.clone(), c.clone())).collect()
}

pub fn named_sparse(names: &[String], v: &SparseVec) -> NamedVector {
    v.iter().map(|(i, c)| (names[*i].clone(), c.clone())).collect()
}

fn lookup(names: &[String], name: &str) -> Result<usize> {
    names.iter().position(|n| n == name).ok_or_else(|| Error::UnknownName(name.to_string()))
}

/// Dense vector from a named map over `names`.
pub fn dense_from_named(names: &[String], v: &NamedVector) -> Result<RatVec> {
    let mut out = vec![Rat::zero(); names.len()];
    for (n, c) in v {
        out[lookup(names, n)?] += c;
    }
    Ok(out)
}

impl AlgebraFile {
    pub fn from_algebra(a: &SuperAlgebra) -> AlgebraFile {
        let names = a.names();
        let mut products = Vec::new();
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let p = a.product(i, j);
                if !p.is_empty() {
                    products.push(ProductEntry { left: names[i].clone(), right: names[j].clone(), value: named_sparse(names, p) });
                }
            }
        }
        AlgebraFile {
            even: a.even_names().to_vec(),
            odd: a.odd_names().to_vec(),
            unit: a.unit().map(|u| named_vector(names, u)),
            products,
        }
    }

    pub fn load(&self) -> Result<LoadedAlgebra> {
        let names: Vec<String> = self.even.iter().chain(&self.odd).cloned().collect();
        let mut b = AlgebraBuilder::new(&self.even, &self.odd);
        for p in &self.products {
            if b.is_set(&p.left, &p.right)? {
                return Err(Error::Format(format!("product {} * {} given twice", p.left, p.right)));
            }
            b.set_sparse(&p.left, &p.right, to_sparse(&dense_from_named(&names, &p.value)?))?;
        }
        let mut inferred = Vec::new();
        for p in &self.products {
            let s = Rat::sign(b.parity_of(&p.left)? * b.parity_of(&p.right)?);
            let v = b.get(&p.left, &p.right)?.unwrap_or_default();
            let w: SparseVec = v.iter().map(|(k, c)| (*k, c * &s)).collect();
            match b.get(&p.right, &p.left)? {
                Some(x) if x != w => {
                    return Err(Error::Format(format!(
                        "products {} * {} and {} * {} violate supercommutativity",
                        p.left, p.right, p.right, p.left
                    )))
                }
                Some(_) => {}
                None => {
                    b.set_sparse(&p.right, &p.left, w)?;
                    inferred.push((p.right.clone(), p.left.clone()));
                }
            }
        }
        if let Some(u) = &self.unit {
            let terms: Vec<(&str, Rat)> = u.iter().map(|(n, c)| (n.as_str(), c.clone())).collect();
            b.unit(&terms);
        }
        Ok(LoadedAlgebra { algebra: b.build()?, inferred })
    }
}

pub fn algebra_to_json(a: &SuperAlgebra) -> String {
    serde_json::to_string_pretty(&AlgebraFile::from_algebra(a)).expect("serializable")
}

pub fn algebra_from_json(s: &str) -> Result<LoadedAlgebra> {
    serde_json::from_str::<AlgebraFile>(s)?.load()
}

impl BimoduleFile {
    pub fn from_bimodule(m: &SuperBimodule) -> BimoduleFile {
        let (an, mn) = (m.base().names(), m.names());
        let mut action = Vec::new();
        for i in 0..m.base().dim() {
            for t in 0..m.dim() {
                let v = m.left(i, t);
                if !v.is_empty() {
                    action.push(ActionEntry { alg: an[i].clone(), module: mn[t].clone(), value: named_sparse(mn, v) });
                }
            }
        }
        BimoduleFile { module_even: m.even_names().to_vec(), module_odd: m.odd_names().to_vec(), action }
    }

    /// Builds the bimodule over `base`; runs the same Jordan check as
    /// [`SuperBimodule::new`].
    pub fn load(&self, base: &SuperAlgebra) -> Result<SuperBimodule> {
        let mn: Vec<String> = self.module_even.iter().chain(&self.module_odd).cloned().collect();
        let md = mn.len();
        let mut action: Vec<Option<SparseVec>> = vec![None; base.dim() * md];
        for e in &self.action {
            let (i, t) = (base.index(&e.alg)?, lookup(&mn, &e.module)?);
            if action[i * md + t].is_some() {
                return Err(Error::Format(format!("action {} . {} given twice", e.alg, e.module)));
            }
            action[i * md + t] = Some(to_sparse(&dense_from_named(&mn, &e.value)?));
        }
        SuperBimodule::new(
            base.clone(),
            self.module_even.clone(),
            self.module_odd.clone(),
            action.into_iter().map(Option::unwrap_or_default).collect(),
        )
    }
}

pub fn bimodule_to_json(m: &SuperBimodule) -> String {
    serde_json::to_string_pretty(&BimoduleFile::from_bimodule(m)).expect("serializable")
}

pub fn bimodule_from_json(base: &SuperAlgebra, s: &str) -> Result<SuperBimodule> {
    serde_json::from_str::<BimoduleFile>(s)?.load(base)
}

impl CocycleFile {
    /// Values for `i <= j`; the rest follow by super-symmetry.
    pub fn from_cocycle(m: &SuperBimodule, mu: &Cocycle) -> CocycleFile {
        let (an, mn) = (m.base().names(), m.names());
        let mut pairs = Vec::new();
        for i in 0..mu.base_dim() {
            for j in i..mu.base_dim() {
                let v = mu.value(i, j);
                if !v.is_empty() {
                    pairs.push(ProductEntry { left: an[i].clone(), right: an[j].clone(), value: named_sparse(mn, v) });
                }
            }
        }
        CocycleFile { pairs }
    }

    pub fn load(&self, m: &SuperBimodule) -> Result<Cocycle> {
        let mut mu = Cocycle::zero(m);
        let mut seen = std::collections::HashSet::new();
        for p in &self.pairs {
            let (i, j) = (m.base().index(&p.left)?, m.base().index(&p.right)?);
            let v = dense_from_named(m.names(), &p.value)?;
            if !seen.insert((i.min(j), i.max(j))) {
                if crate::exactla::to_dense(mu.value(i, j), m.dim()) != v {
                    return Err(Error::Format(format!("cocycle values for {} and {} conflict", p.left, p.right)));
                }
                continue;
            }
            mu.set(i, j, &v)?;
        }
        Ok(mu)
    }
}

pub fn cocycle_to_json(m: &SuperBimodule, mu: &Cocycle) -> String {
    serde_json::to_string_pretty(&CocycleFile::from_cocycle(m, mu)).expect("serializable")
}

pub fn cocycle_from_json(m: &SuperBimodule, s: &str) -> Result<Cocycle> {
    serde_json::from_str::<CocycleFile>(s)?.load(m)
}

pub fn subspace_to_json(a: &SuperAlgebra, n: &Subspace) -> String {
    let f = SubspaceFile { basis: n.basis().iter().map(|v| named_vector(a.names(), v)).collect() };
    serde_json::to_string_pretty(&f).expect("serializable")
}

pub fn subspace_from_json(a: &SuperAlgebra, s: &str) -> Result<Subspace> {
    let f: SubspaceFile = serde_json::from_str(s)?;
    let vs = f.basis.iter().map(|v| dense_from_named(a.names(), v)).collect::<Result<Vec<_>>>()?;
    Subspace::new(a.dim(), &vs)
}
