use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use yhe_core::braidsties::{BraidsTies, EtCellularBasis, EtElement};
use yhe_core::combinatorics::{bell, faa_di_bruno, factorial, lambda_shapes, std_count_formula, Partition};
use yhe_core::report::Report;
use yhe_core::scalars::{Scalar, ScalarError};
use yhe_core::tensorrep::TensorSpace;
use yhe_core::verify::{run_suites, VerifyConfig, VerifyError, SUITES};
use yhe_core::yokonuma::{AlgebraError, YElement, Yokonuma, DEFAULT_BUDGET};

#[derive(Parser, Debug)]
#[command(name = "yhe", version, about = "Exact computation in Yokonuma-Hecke and braids-and-ties algebras")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Multiply elements given in the element grammar.
    Mul {
        #[command(flatten)]
        common: Common,
        #[arg(required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Run verification suites.
    Verify {
        #[command(flatten)]
        common: Common,
        /// Suite names, or `all`.
        #[arg(required = true)]
        suites: Vec<String>,
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
    /// List the cellular basis.
    Basis {
        #[command(flatten)]
        common: Common,
    },
    /// Dimension of the algebra, or of the component of type `--alpha`.
    Dim {
        #[command(flatten)]
        common: Common,
        /// Also list the shapes with their numbers of standard tableaux.
        #[arg(long)]
        shapes: bool,
    },
    /// Matrix of an element acting on the tensor space.
    Rep {
        #[command(flatten)]
        common: Common,
        #[arg(long, allow_hyphen_values = true)]
        elem: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Alg {
    Y,
    Et,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, value_enum, default_value = "y")]
    alg: Alg,
    #[arg(short, default_value_t = 2)]
    r: usize,
    #[arg(short, default_value_t = 2)]
    n: usize,
    /// Type of a set partition, e.g. `2,1`.
    #[arg(long, value_parser = parse_alpha)]
    alpha: Option<Partition>,
    #[arg(long, env = "YHE_BUDGET", default_value_t = DEFAULT_BUDGET)]
    budget: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

fn parse_alpha(s: &str) -> Result<Partition, String> {
    Partition::parse(s).map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Budget(String),
    Verify,
}

impl From<AlgebraError> for Failure {
    fn from(e: AlgebraError) -> Self {
        match e {
            AlgebraError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

impl From<ScalarError> for Failure {
    fn from(e: ScalarError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Budget { .. } => Failure::Budget(e.to_string()),
            e => Failure::Usage(e.to_string()),
        }
    }
}

fn json<T: serde::Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable")
}

fn et_csv(x: &EtElement<Scalar>) -> String {
    let mut s = String::from("coeff,A,w\n");
    for (k, c) in x.terms() {
        let w: Vec<String> = k.w.images().iter().map(|i| i.to_string()).collect();
        let _ = writeln!(s, "\"{c}\",\"{}\",\"{}\"", k.a, w.join(" "));
    }
    s
}

fn y_csv(x: &YElement<Scalar>, n: usize) -> String {
    let mut s = String::from("coeff,t,w\n");
    for (k, c) in x.terms() {
        let t: Vec<String> = k.t.to_vec(n).iter().map(|i| i.to_string()).collect();
        let w: Vec<String> = k.w.images().iter().map(|i| i.to_string()).collect();
        let _ = writeln!(s, "\"{c}\",\"{}\",\"{}\"", t.join(" "), w.join(" "));
    }
    s
}

fn budget_ok(dim: usize, budget: usize) -> Result<(), Failure> {
    if dim > budget {
        return Err(Failure::Budget(format!("basis of size {dim} exceeds the budget {budget}")));
    }
    Ok(())
}

fn cmd_mul(c: &Common, exprs: &[String]) -> Result<String, Failure> {
    match c.alg {
        Alg::Y => {
            let y = Yokonuma::new(c.r, c.n)?;
            let mut acc = y.one();
            for e in exprs {
                acc = y.mul(&acc, &y.parse(e)?);
            }
            Ok(match c.format {
                Format::Text => acc.to_string(),
                Format::Json => json(&y.to_json(&acc)),
                Format::Csv => y_csv(&acc, c.n),
            })
        }
        Alg::Et => {
            let et = BraidsTies::new(c.n)?;
            let mut acc = et.one();
            for e in exprs {
                acc = et.mul(&acc, &et.parse(e)?);
            }
            Ok(match c.format {
                Format::Text => acc.to_string(),
                Format::Json => json(&et.to_json(&acc)),
                Format::Csv => et_csv(&acc),
            })
        }
    }
}

fn cmd_verify(c: &Common, suites: &[String], samples: usize) -> Result<String, Failure> {
    let names: Vec<&str> = if suites.iter().any(|s| s == "all") {
        SUITES.to_vec()
    } else {
        suites.iter().map(String::as_str).collect()
    };
    if let Some(bad) = names.iter().find(|s| !SUITES.contains(s)) {
        return Err(Failure::Usage(format!("unknown suite '{bad}'; known: {}", SUITES.join(", "))));
    }
    let cfg = VerifyConfig { r: c.r, n: c.n, alpha: c.alpha.clone(), budget: c.budget, seed: c.seed, samples };
    let reports: Vec<Report> = run_suites(&names, &cfg).into_iter().collect::<Result<_, _>>()?;
    let passed = reports.iter().all(Report::passed);
    let out = match c.format {
        Format::Text => reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n\n"),
        Format::Json => json(&reports),
        Format::Csv => {
            let mut s = String::from("suite,seed,check,pass,detail\n");
            for r in &reports {
                for ch in &r.checks {
                    let _ = writeln!(s, "{},{},\"{}\",{},\"{}\"", r.suite, r.seed, ch.name, ch.pass, ch.detail.replace('"', "'"));
                }
            }
            s
        }
    };
    if passed {
        Ok(out)
    } else {
        println!("{out}");
        Err(Failure::Verify)
    }
}

fn cmd_basis(c: &Common) -> Result<String, Failure> {
    let mut rows: Vec<(String, String, String, String, serde_json::Value)> = Vec::new();
    match c.alg {
        Alg::Y => {
            let y = Yokonuma::new(c.r, c.n)?;
            let b = y.cellular_basis(c.budget)?;
            for (ix, x) in b.index.iter().zip(&b.elements) {
                rows.push((
                    b.shapes[ix.shape].to_string(),
                    b.tableau(ix.shape, ix.s).to_string(),
                    b.tableau(ix.shape, ix.t).to_string(),
                    x.to_string(),
                    serde_json::to_value(y.to_json(x)).expect("serializable"),
                ));
            }
        }
        Alg::Et => {
            let et = BraidsTies::new(c.n)?;
            let b: EtCellularBasis<Scalar> = et.cellular_basis(c.budget)?;
            for (ix, x) in b.index.iter().zip(&b.elements) {
                if let Some(alpha) = &c.alpha {
                    if &b.shapes[ix.shape].type_partition() != alpha {
                        continue;
                    }
                }
                rows.push((
                    b.shapes[ix.shape].to_string(),
                    b.tableau(ix.shape, ix.s).to_string(),
                    b.tableau(ix.shape, ix.t).to_string(),
                    x.to_string(),
                    serde_json::to_value(et.to_json(x)).expect("serializable"),
                ));
            }
        }
    }
    Ok(match c.format {
        Format::Text => rows.iter().map(|r| format!("{} {} {}\t{}", r.0, r.1, r.2, r.3)).collect::<Vec<_>>().join("\n"),
        Format::Json => {
            let v: Vec<serde_json::Value> = rows
                .into_iter()
                .map(|r| serde_json::json!({ "shape": r.0, "s": r.1, "t": r.2, "element": r.4 }))
                .collect();
            json(&v)
        }
        Format::Csv => {
            let mut s = String::from("shape,s,t,element\n");
            for r in rows {
                let _ = writeln!(s, "\"{}\",\"{}\",\"{}\",\"{}\"", r.0, r.1, r.2, r.3);
            }
            s
        }
    })
}

fn cmd_dim(c: &Common, list: bool) -> Result<String, Failure> {
    let (n, nf) = (c.n, factorial(c.n));
    if n == 0 || c.r == 0 {
        return Err(Failure::Usage("r and n must be positive".into()));
    }
    let dim = match (c.alg, &c.alpha) {
        (Alg::Y, None) => (c.r as u128).pow(n as u32) * nf,
        (Alg::Y, Some(_)) => return Err(Failure::Usage("--alpha applies to --alg et".into())),
        (Alg::Et, Some(a)) if a.size() != n => return Err(Failure::Usage(format!("{a} is not a partition of {n}"))),
        (Alg::Et, Some(a)) => faa_di_bruno(a) * nf,
        (Alg::Et, None) => bell(n) * nf,
    };
    if !list {
        return Ok(match c.format {
            Format::Json => serde_json::json!({ "dim": dim.to_string() }).to_string(),
            _ => dim.to_string(),
        });
    }
    if c.alg == Alg::Y {
        return Err(Failure::Usage("--shapes applies to --alg et".into()));
    }
    let shapes: Vec<_> = lambda_shapes(n)
        .into_iter()
        .filter(|s| c.alpha.as_ref().is_none_or(|a| &s.type_partition() == a))
        .map(|s| {
            let k = std_count_formula(&s);
            (s.to_string(), k)
        })
        .collect();
    Ok(match c.format {
        Format::Json => {
            let v: Vec<_> = shapes.iter().map(|(s, k)| serde_json::json!({ "shape": s, "std": k.to_string() })).collect();
            json(&serde_json::json!({ "dim": dim.to_string(), "shapes": v }))
        }
        Format::Csv => {
            let mut s = String::from("shape,std\n");
            for (sh, k) in &shapes {
                let _ = writeln!(s, "\"{sh}\",{k}");
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for (sh, k) in &shapes {
                let _ = writeln!(s, "{sh}\t{k}");
            }
            let _ = write!(s, "{dim}");
            s
        }
    })
}

fn cmd_rep(c: &Common, elem: &str) -> Result<String, Failure> {
    if c.alg == Alg::Et {
        return Err(Failure::Usage("the tensor representation is defined for --alg y".into()));
    }
    let y = Yokonuma::new(c.r, c.n)?;
    let ts = TensorSpace::new(c.r, c.n, c.budget)?;
    budget_ok(ts.dim(), c.budget)?;
    let m = ts.rho(&y, &y.parse(elem)?)?;
    Ok(match c.format {
        Format::Json => json(&m.to_json(c.r, c.n)),
        Format::Csv => m.to_csv(),
        Format::Text => {
            let mut s = format!("dim {}\n", m.dim());
            for (i, j, v) in m.entries() {
                let _ = writeln!(s, "{i} {j} {v}");
            }
            s.trim_end().to_string()
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.cmd {
        Cmd::Mul { common, exprs } => cmd_mul(common, exprs),
        Cmd::Verify { common, suites, samples } => cmd_verify(common, suites, *samples),
        Cmd::Basis { common } => cmd_basis(common),
        Cmd::Dim { common, shapes } => cmd_dim(common, *shapes),
        Cmd::Rep { common, elem } => cmd_rep(common, elem),
    };
    match result {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}
