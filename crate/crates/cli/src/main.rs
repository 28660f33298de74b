use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use superwpt::bimodule::{regular_bimodule, SuperBimodule};
use superwpt::catalog::*;
use superwpt::cohomology::{extract_cocycle, h2_dimensions, solve_extracted, SplittingResult};
use superwpt::exactla::Rat;
use superwpt::format::*;
use superwpt::superalg::*;

#[derive(Parser)]
#[command(name = "cli", about = "Exact checks for finite-dimensional Jordan superalgebras and their square-zero extensions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CatalogName {
    K10,
    K3,
    K3Hull,
    Dt,
    Superform,
    CxSuperformOdd,
    CxSuperformEven,
    CxDt,
}

#[derive(Subcommand)]
enum Command {
    /// Write a built-in superalgebra or extension.
    Catalog {
        name: CatalogName,
        /// Parameter of D_t, e.g. 2/3.
        #[arg(long, allow_hyphen_values = true)]
        t: Option<Rat>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Where to write the radical of an extension.
        #[arg(long)]
        radical: Option<PathBuf>,
    },
    /// Check supercommutativity and the super-Jordan identity.
    Verify {
        file: PathBuf,
        /// Also check the Grassmann envelope on this many generators.
        #[arg(long)]
        envelope: Option<u32>,
    },
    /// Look for a subalgebra complementary to a square-zero ideal.
    Wpt {
        algebra: PathBuf,
        radical: PathBuf,
        /// Also report the cohomology dimensions of the quotient and ideal.
        #[arg(long)]
        dims: bool,
    },
    /// Dimensions of Z^2, B^2 and H^2 of an algebra with coefficients in a bimodule.
    H2 { algebra: PathBuf, module: PathBuf },
    /// Peirce decomposition relative to orthogonal idempotents given by basis name.
    Peirce {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        idempotents: Vec<String>,
    },
    /// Write the regular bimodule of an algebra.
    Regular {
        file: PathBuf,
        /// Build it over the unital hull instead, with the new unit acting as identity.
        #[arg(long)]
        hull: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

fn read(path: &Path) -> anyhow::Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn write_or_print(path: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match path {
        Some(p) => fs::write(p, format!("{text}\n")).with_context(|| format!("writing {}", p.display())),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn load_algebra(path: &Path) -> anyhow::Result<SuperAlgebra> {
    let loaded = algebra_from_json(&read(path)?).with_context(|| format!("loading {}", path.display()))?;
    if !loaded.inferred.is_empty() {
        eprintln!("{}: {} products inferred by supercommutativity", path.display(), loaded.inferred.len());
    }
    Ok(loaded.algebra)
}

fn witness_json(names: &[String], rep: &IdentityReport) -> Value {
    match &rep.witness {
        None => Value::Null,
        Some(w) => json!({
            "indices": w.indices.iter().map(|&i| names[i].clone()).collect::<Vec<_>>(),
            "defect": named_vector(names, &w.defect),
        }),
    }
}

fn report_json(names: &[String], rep: &IdentityReport) -> Value {
    json!({ "holds": rep.holds, "witness": witness_json(names, rep) })
}

fn emit(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn need<T>(v: Option<T>, flag: &str) -> anyhow::Result<T> {
    v.with_context(|| format!("missing --{flag}"))
}

fn catalog(
    name: CatalogName,
    t: Option<Rat>,
    n: Option<usize>,
    m: Option<usize>,
    output: Option<&Path>,
    radical: Option<&Path>,
) -> anyhow::Result<u8> {
    let (algebra, ideal, warning) = match name {
        CatalogName::K10 => (build_k10(), None, None),
        CatalogName::K3 => (build_k3(), None, None),
        CatalogName::K3Hull => (build_k3_hull(), None, None),
        CatalogName::Dt => (build_dt(&need(t, "t")?), None, None),
        CatalogName::Superform => (build_superform(need(n, "n")?, need(m, "m")?)?, None, None),
        CatalogName::CxDt | CatalogName::CxSuperformOdd | CatalogName::CxSuperformEven => {
            let cx = match name {
                CatalogName::CxDt => counterexample_dt(&need(t, "t")?),
                CatalogName::CxSuperformOdd => counterexample_superform_odd(need(n, "n")?, need(m, "m")?)?,
                _ => counterexample_superform_even(need(n, "n")?, need(m, "m")?)?,
            };
            (cx.algebra, Some(cx.radical), cx.warning)
        }
    };
    if let Some(w) = warning {
        eprintln!("warning: {w}");
    }
    match (radical, &ideal) {
        (Some(_), None) => bail!("--radical only applies to extensions"),
        (Some(p), Some(n)) => write_or_print(Some(p), &subspace_to_json(&algebra, n))?,
        _ => {}
    }
    write_or_print(output, &algebra_to_json(&algebra))?;
    eprintln!("dimension {} ({} even, {} odd)", algebra.dim(), algebra.n_even(), algebra.n_odd());
    Ok(0)
}

fn verify(file: &Path, envelope: Option<u32>) -> anyhow::Result<u8> {
    let a = load_algebra(file)?;
    let names = a.names();
    let sc = check_supercommutativity(&a);
    let (jordan, operator) = if sc.holds {
        (Some(check_super_jordan(&a)?), Some(check_operator_identity(&a)?))
    } else {
        (None, None)
    };
    let env = match envelope {
        Some(g) if sc.holds => Some(grassmann_envelope_check(&a, g)?),
        _ => None,
    };
    let ok = sc.holds && jordan.as_ref().is_some_and(|r| r.holds);
    if let (Some(j), Some(e)) = (&jordan, &env) {
        if j.holds != e.holds {
            eprintln!("warning: envelope check disagrees with the super-Jordan check");
        }
    }
    let opt = |r: &Option<IdentityReport>| r.as_ref().map_or(Value::Null, |r| report_json(names, r));
    emit(&json!({
        "holds": ok,
        "supercommutativity": report_json(names, &sc),
        "super_jordan": opt(&jordan),
        "operator_identity": opt(&operator),
        "envelope": env.as_ref().map_or(Value::Null, |r| json!({"generators": envelope, "holds": r.holds})),
    }));
    eprintln!("{}: {}", file.display(), if ok { "Jordan superalgebra" } else { "identity fails" });
    Ok(if ok { 0 } else { 2 })
}

fn wpt(algebra: &Path, radical: &Path, dims: bool) -> anyhow::Result<u8> {
    let e = load_algebra(algebra)?;
    let n = subspace_from_json(&e, &read(radical)?)?;
    let x = extract_cocycle(&e, &n, None)?;
    let (result, system) = solve_extracted(&x);
    let names = e.names();
    let dims_json = if dims { serde_json::to_value(h2_dimensions(&x.module)?)? } else { Value::Null };
    let (feasible, corrections, witness) = match &result {
        SplittingResult::Split(s) => {
            let mut c = serde_json::Map::new();
            for (i, v) in s.corrections.iter().enumerate() {
                c.insert(x.base.name(i).to_string(), json!(named_vector(names, v)));
            }
            (true, Value::Object(c), Value::Null)
        }
        SplittingResult::Obstructed(o) => {
            let rows: Vec<Value> = o
                .certificate
                .multipliers
                .iter()
                .map(|(r, c)| {
                    let (i, j, t) = system.row_labels[*r];
                    json!({
                        "pair": [x.base.name(i), x.base.name(j)],
                        "coordinate": x.module.names()[t],
                        "multiplier": c,
                    })
                })
                .collect();
            (false, Value::Null, json!({"combination": rows, "rhs": o.certificate.rhs, "verified": o.verify(&system)}))
        }
    };
    emit(&json!({"feasible": feasible, "corrections": corrections, "witness": witness, "dims": dims_json}));
    eprintln!(
        "{}",
        if feasible { "splits: corrected lifts span a complementary subalgebra" } else { "does not split" }
    );
    Ok(if feasible { 0 } else { 2 })
}

fn h2(algebra: &Path, module: &Path) -> anyhow::Result<u8> {
    let j = load_algebra(algebra)?;
    let m: SuperBimodule = bimodule_from_json(&j, &read(module)?)?;
    let d = h2_dimensions(&m)?;
    emit(&serde_json::to_value(d)?);
    eprintln!("dim Z2 = {}, dim B2 = {}, dim H2 = {}", d.z2, d.b2, d.h2);
    Ok(0)
}

fn peirce(file: &Path, idempotents: &[String]) -> anyhow::Result<u8> {
    let a = load_algebra(file)?;
    let es = idempotents.iter().map(|n| Ok(a.basis_vector(a.index(n)?))).collect::<superwpt::Result<Vec<_>>>()?;
    let p = peirce_decomposition(&a, &es)?;
    let names = a.names();
    let label = |i: usize| if i < idempotents.len() { idempotents[i].clone() } else { "0".to_string() };
    let comps: Vec<Value> = p
        .components
        .iter()
        .map(|c| {
            json!({
                "i": label(c.i),
                "j": label(c.j),
                "dim": c.space.dim(),
                "basis": c.space.basis().iter().map(|v| named_vector(names, v)).collect::<Vec<_>>(),
            })
        })
        .collect();
    emit(&json!({"components": comps, "relations": report_json(names, &p.report)}));
    let dims: Vec<String> = p.components.iter().map(|c| format!("J{}{}={}", label(c.i), label(c.j), c.space.dim())).collect();
    eprintln!("{}", dims.join(" "));
    Ok(if p.report.holds { 0 } else { 2 })
}

fn regular(file: &Path, hull: bool, output: Option<&Path>) -> anyhow::Result<u8> {
    let a = load_algebra(file)?;
    let m = regular_bimodule(&a);
    let m = if hull { m.over_unital_hull() } else { m };
    write_or_print(output, &bimodule_to_json(&m))?;
    Ok(0)
}

fn run(cli: Cli) -> anyhow::Result<u8> {
    match cli.command {
        Command::Catalog { name, t, n, m, output, radical } => {
            catalog(name, t, n, m, output.as_deref(), radical.as_deref())
        }
        Command::Verify { file, envelope } => verify(&file, envelope),
        Command::Wpt { algebra, radical, dims } => wpt(&algebra, &radical, dims),
        Command::H2 { algebra, module } => h2(&algebra, &module),
        Command::Peirce { file, idempotents } => peirce(&file, &idempotents),
        Command::Regular { file, hull, output } => regular(&file, hull, output.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
