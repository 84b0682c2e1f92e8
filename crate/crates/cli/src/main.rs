//! Command-line front end: evaluation, identity verification, table
//! regeneration, quasi-symmetric algebra and duality tooling. Reports are
//! line-delimited JSON; exit code 0 means all checks passed, 1 flags an
//! identity failure or tolerance miss, 2 an input error.

mod input;

use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use schurzeta::enumerate::{
    preceq_set, rim_decompositions, ssyt_iter, PreceqVariant, RimKind,
};
use schurzeta::identities::{
    dual_cauchy, giambelli, jacobi_trudi, rim_sum, sweep_dual_cauchy, sweep_giambelli,
    sweep_jacobi_trudi, sweep_rim, sweep_skew_jacobi_trudi, IdentityReport,
};
use schurzeta::qsym::{
    antipode, det_qsym, qsym_dual_cauchy, qsym_dual_cauchy_antipode, qsym_giambelli_det,
    qsym_jt_matrix_e, qsym_jt_matrix_m, quasi_shuffle, schur_qsym, QSymExpr,
};
use schurzeta::scalar::Exponent;
use schurzeta::shapes::{Partition, RibbonSpec, SkewShape, Tableau};
use schurzeta::specials::smzv_constant_exact;
use schurzeta::words::{check_duality_numeric, dual_ribbon};
use schurzeta::zeta::{smzv_trunc, smzv_trunc_det};

use input::{load_pair, load_tableau_exponent, load_tableau_u32, parse_diag, parse_expr};

#[derive(Parser)]
#[command(name = "schurzeta", version, about = "Schur multiple zeta toolkit")]
struct Cli {
    /// JSON config file; flags take precedence over its values
    #[arg(long, global = true)]
    config: Option<std::path::PathBuf>,
    /// Worker threads for sweeps (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a truncated Schur multiple zeta value from a tableau file
    Eval(EvalArgs),
    /// Verify determinant identities at finite truncation
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Regenerate the constant-entry value tables as exact π powers
    Tables(TablesArgs),
    /// Quasi-symmetric function algebra
    #[command(subcommand)]
    Qsym(QsymCmd),
    /// Integral-word duality tooling
    #[command(subcommand)]
    Duality(DualityCmd),
    /// Enumeration utilities
    #[command(subcommand)]
    Enumerate(EnumerateCmd),
}

#[derive(Clone, Copy, ValueEnum)]
enum Backend {
    Exact,
    Float,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    H,
    E,
}

impl From<KindArg> for RimKind {
    fn from(k: KindArg) -> RimKind {
        match k {
            KindArg::H => RimKind::H,
            KindArg::E => RimKind::E,
        }
    }
}

#[derive(Args)]
struct EvalArgs {
    #[arg(long)]
    tableau: std::path::PathBuf,
    #[arg(long)]
    n: Option<u32>,
    #[arg(long, value_enum, default_value_t = Backend::Exact)]
    backend: Backend,
}

#[derive(Subcommand)]
enum VerifyCmd {
    /// Jacobi-Trudi: determinant of star/strict values vs the direct sum
    Jt {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        diag: String,
        #[arg(long, default_value_t = 4)]
        n: u32,
        #[arg(long, value_enum, default_value_t = KindArg::H)]
        kind: KindArg,
    },
    /// Giambelli hook determinant
    Giambelli {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        diag: String,
        #[arg(long, default_value_t = 4)]
        n: u32,
    },
    /// Dual Cauchy block determinant
    DualCauchy {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        s: usize,
        #[arg(long)]
        a_diag: String,
        #[arg(long)]
        b_diag: String,
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long, default_value_t = 3)]
        m: u32,
    },
    /// Signed rim-decomposition sum
    Rim {
        #[arg(long)]
        shape: String,
        #[arg(long)]
        diag: String,
        #[arg(long, default_value_t = 4)]
        n: u32,
        #[arg(long, value_enum, default_value_t = KindArg::H)]
        kind: KindArg,
    },
    /// Run a full battery; one JSON line per instance
    Sweep {
        #[arg(long, default_value = "core")]
        suite: String,
    },
}

#[derive(Args)]
struct TablesArgs {
    /// Weight of the shapes (3 or 4 regenerate the reference tables)
    #[arg(long, default_value_t = 3)]
    n: usize,
    /// Range of k, e.g. "1..4"
    #[arg(long, default_value = "1..4")]
    k: String,
    #[arg(long, default_value = "markdown")]
    format: String,
}

#[derive(Subcommand)]
enum QsymCmd {
    /// Antipode of an expression like "M[2,1,3]" or "E[1,2]"
    Antipode {
        #[arg(long)]
        expr: String,
    },
    /// M-basis expansion of the Schur-type element of a tableau
    Schur {
        #[arg(long)]
        tableau: std::path::PathBuf,
    },
    /// Quasi-shuffle product of two expressions
    Product {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
    },
    /// Verify a ring identity on given data
    Identity {
        /// jt | giambelli | dual-cauchy | dual-cauchy-antipode
        #[arg(long)]
        which: String,
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        diag: Option<String>,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        s: Option<usize>,
        #[arg(long)]
        a_diag: Option<String>,
        #[arg(long)]
        b_diag: Option<String>,
    },
}

#[derive(Subcommand)]
enum DualityCmd {
    /// Dual tableau of a ribbon tableau, or "non-ribbon"
    Dual {
        #[arg(long)]
        tableau: std::path::PathBuf,
    },
    /// Numeric check of a dual pair
    Check {
        #[arg(long)]
        pair: std::path::PathBuf,
        #[arg(long)]
        tol: Option<f64>,
    },
}

#[derive(Subcommand)]
enum EnumerateCmd {
    /// Bounded semistandard tableaux of a shape
    Ssyt {
        #[arg(long)]
        shape: String,
        #[arg(long, default_value_t = 3)]
        n: u32,
        #[arg(long)]
        count: bool,
    },
    /// Rim decompositions with signs
    Rims {
        #[arg(long)]
        shape: String,
        #[arg(long, value_enum, default_value_t = KindArg::H)]
        kind: KindArg,
    },
    /// Blocked coarsenings of reading words
    Preceq {
        #[arg(long)]
        shape: String,
        #[arg(long, default_value = "direct")]
        variant: String,
        #[arg(long)]
        count: bool,
    },
}

#[derive(Default)]
struct FileConfig {
    threads: Option<usize>,
    n: Option<u32>,
    tol: Option<f64>,
}

fn load_config(path: &std::path::Path) -> Result<FileConfig, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("cannot read {}: {e}", path.display()))?;
    let v: serde_json::Value =
        serde_json::from_str(&text).map_err(|e| format!("bad config JSON: {e}"))?;
    Ok(FileConfig {
        threads: v.get("threads").and_then(|x| x.as_u64()).map(|x| x as usize),
        n: v.get("n").and_then(|x| x.as_u64()).map(|x| x as u32),
        tol: v.get("tol").and_then(|x| x.as_f64()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match cli.config.as_deref().map(load_config).transpose() {
        Ok(c) => c.unwrap_or_default(),
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Some(threads) = cli.threads.or(config.threads) {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global();
    }
    match run(cli, &config) {
        Ok(all_pass) => {
            if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit_reports(mut reports: Vec<IdentityReport>) -> bool {
    reports.sort_by(|a, b| {
        (&a.identity, &a.shape, &a.diag, a.n, a.m).cmp(&(&b.identity, &b.shape, &b.diag, b.n, b.m))
    });
    let all = reports.iter().all(|r| r.equal);
    if let Some(bad) = reports.iter().find(|r| !r.equal) {
        eprintln!("failure: {}", bad.to_json());
    }
    for r in reports {
        println!("{}", r.to_json());
    }
    all
}

fn run(cli: Cli, config: &FileConfig) -> Result<bool, String> {
    match cli.command {
        Command::Eval(args) => {
            let n = args.n.or(config.n).unwrap_or(1000);
            let t = load_tableau_exponent(&args.tableau)?;
            let t = match args.backend {
                Backend::Exact => t,
                Backend::Float => {
                    let entries: BTreeMap<_, _> = t
                        .entries()
                        .iter()
                        .map(|(&c, e)| (c, Exponent::Real(e.to_f64())))
                        .collect();
                    Tableau::new(t.shape().clone(), entries).map_err(|e| e.to_string())?
                }
            };
            let value = if t.is_diagonal() && n > 200 {
                smzv_trunc_det(&t, n).map_err(|e| e.to_string())?
            } else {
                smzv_trunc(&t, n)
            };
            let backend = if value.is_exact() { "exact" } else { "float" };
            println!(
                "{}",
                serde_json::json!({ "value": value.to_string(), "N": n, "backend": backend })
            );
            Ok(true)
        }
        Command::Verify(cmd) => run_verify(cmd),
        Command::Tables(args) => run_tables(args),
        Command::Qsym(cmd) => run_qsym(cmd),
        Command::Duality(cmd) => run_duality(cmd, config),
        Command::Enumerate(cmd) => run_enumerate(cmd),
    }
}

fn run_verify(cmd: VerifyCmd) -> Result<bool, String> {
    match cmd {
        VerifyCmd::Jt { shape, diag, n, kind } => {
            let shape = SkewShape::parse(&shape).map_err(|e| e.to_string())?;
            let diag = parse_diag(&diag)?;
            let report =
                jacobi_trudi(&shape, &diag, n, kind.into()).map_err(|e| e.to_string())?;
            Ok(emit_reports(vec![report]))
        }
        VerifyCmd::Giambelli { shape, diag, n } => {
            let shape = Partition::parse(&shape).map_err(|e| e.to_string())?;
            let diag = parse_diag(&diag)?;
            let report = giambelli(&shape, &diag, n).map_err(|e| e.to_string())?;
            Ok(emit_reports(vec![report]))
        }
        VerifyCmd::DualCauchy { r, s, a_diag, b_diag, n, m } => {
            let a = parse_diag(&a_diag)?;
            let b = parse_diag(&b_diag)?;
            let report = dual_cauchy(r, s, &a, &b, n, m).map_err(|e| e.to_string())?;
            Ok(emit_reports(vec![report]))
        }
        VerifyCmd::Rim { shape, diag, n, kind } => {
            let shape = Partition::parse(&shape).map_err(|e| e.to_string())?;
            let diag = parse_diag(&diag)?;
            let report = rim_sum(&shape, &diag, n, kind.into()).map_err(|e| e.to_string())?;
            Ok(emit_reports(vec![report]))
        }
        VerifyCmd::Sweep { suite } => {
            let mut reports = Vec::new();
            match suite.as_str() {
                "core" => {
                    reports.extend(sweep_jacobi_trudi(6, &[1, 2, 3], 5));
                    reports.extend(sweep_skew_jacobi_trudi(&[1, 2, 3], 5));
                    reports.extend(sweep_giambelli(6, &[1, 2, 3], 4));
                    reports.extend(sweep_dual_cauchy(&[(1, 1), (1, 2), (2, 2), (2, 3)], &[1, 2], 3));
                    reports.extend(sweep_rim(5, &[1, 2, 3], 4));
                }
                "smoke" => {
                    reports.extend(sweep_jacobi_trudi(4, &[1, 2], 3));
                    reports.extend(sweep_rim(3, &[1, 2], 3));
                }
                other => return Err(format!("unknown suite {other:?}")),
            }
            Ok(emit_reports(reports))
        }
    }
}

fn parse_k_range(text: &str) -> Result<(usize, usize), String> {
    if let Some((lo, hi)) = text.split_once("..") {
        let lo: usize = lo.parse().map_err(|_| format!("bad range {text:?}"))?;
        let hi: usize = hi.parse().map_err(|_| format!("bad range {text:?}"))?;
        if lo == 0 || hi < lo {
            return Err(format!("bad range {text:?}"));
        }
        Ok((lo, hi))
    } else {
        let k: usize = text.parse().map_err(|_| format!("bad range {text:?}"))?;
        Ok((k, k))
    }
}

fn run_tables(args: TablesArgs) -> Result<bool, String> {
    let (k_lo, k_hi) = parse_k_range(&args.k)?;
    let shapes = Partition::all_of_weight(args.n);
    if args.format == "markdown" {
        let header: Vec<String> = (k_lo..=k_hi).map(|k| format!("k={k}")).collect();
        println!("| shape | {} |", header.join(" | "));
        println!("|---|{}|", vec!["---"; header.len()].join("|"));
        for lambda in &shapes {
            let mut cells = Vec::new();
            for k in k_lo..=k_hi {
                let v = smzv_constant_exact(lambda, 2 * k).map_err(|e| e.to_string())?;
                cells.push(format!("{}·π^{}", v.coeff, v.power));
            }
            println!("| ({lambda}) | {} |", cells.join(" | "));
        }
    } else {
        for lambda in &shapes {
            for k in k_lo..=k_hi {
                let v = smzv_constant_exact(lambda, 2 * k).map_err(|e| e.to_string())?;
                println!(
                    "{}",
                    serde_json::json!({
                        "lambda": lambda.parts(),
                        "k": k,
                        "coeff": v.coeff.to_string(),
                        "pi_power": v.power,
                    })
                );
            }
        }
    }
    Ok(true)
}

fn print_qsym(x: &QSymExpr) {
    println!("{}", x.to_json());
}

fn run_qsym(cmd: QsymCmd) -> Result<bool, String> {
    match cmd {
        QsymCmd::Antipode { expr } => {
            let x = parse_expr(&expr)?;
            print_qsym(&antipode(&x));
            Ok(true)
        }
        QsymCmd::Schur { tableau } => {
            let t = load_tableau_u32(&tableau)?;
            print_qsym(&schur_qsym(&t));
            Ok(true)
        }
        QsymCmd::Product { a, b } => {
            let xa = parse_expr(&a)?;
            let xb = parse_expr(&b)?;
            print_qsym(&quasi_shuffle(&xa, &xb));
            Ok(true)
        }
        QsymCmd::Identity { which, shape, diag, r, s, a_diag, b_diag } => {
            let need = |o: Option<String>, name: &str| o.ok_or(format!("--{name} required"));
            let parse_u32_diag = |text: &str| -> Result<BTreeMap<i64, u32>, String> {
                parse_diag(text)?
                    .into_iter()
                    .map(|(k, e)| match e {
                        Exponent::Int(v) if v >= 1 => Ok((k, v as u32)),
                        _ => Err("ring identities need positive integer entries".to_string()),
                    })
                    .collect()
            };
            let (lhs, rhs, label) = match which.as_str() {
                "jt" => {
                    let shape =
                        SkewShape::parse(&need(shape, "shape")?).map_err(|e| e.to_string())?;
                    let diag = parse_u32_diag(&need(diag, "diag")?)?;
                    let t = Tableau::diagonal(shape.clone(), &diag).map_err(|e| e.to_string())?;
                    let lhs = schur_qsym(&t);
                    let e_det = det_qsym(&qsym_jt_matrix_e(&shape, &diag).map_err(|e| e.to_string())?);
                    let m_det = det_qsym(&qsym_jt_matrix_m(&shape, &diag).map_err(|e| e.to_string())?);
                    let both = lhs == e_det && lhs == m_det;
                    println!(
                        "{}",
                        serde_json::json!({"identity": "qsym-jt", "equal": both})
                    );
                    return Ok(both);
                }
                "giambelli" => {
                    let p =
                        Partition::parse(&need(shape, "shape")?).map_err(|e| e.to_string())?;
                    let diag = parse_u32_diag(&need(diag, "diag")?)?;
                    let t = Tableau::diagonal(SkewShape::straight(p.clone()), &diag)
                        .map_err(|e| e.to_string())?;
                    (
                        schur_qsym(&t),
                        qsym_giambelli_det(&p, &diag).map_err(|e| e.to_string())?,
                        "qsym-giambelli",
                    )
                }
                "dual-cauchy" => {
                    let r = r.ok_or("--r required")?;
                    let s = s.ok_or("--s required")?;
                    let c = parse_u32_diag(&need(a_diag, "a-diag")?)?;
                    let d = parse_u32_diag(&need(b_diag, "b-diag")?)?;
                    let (lhs, rhs) = qsym_dual_cauchy(r, s, &c, &d).map_err(|e| e.to_string())?;
                    (lhs, rhs, "qsym-dual-cauchy")
                }
                "dual-cauchy-antipode" => {
                    let r = r.ok_or("--r required")?;
                    let s = s.ok_or("--s required")?;
                    let c = parse_u32_diag(&need(a_diag, "a-diag")?)?;
                    let d = parse_u32_diag(&need(b_diag, "b-diag")?)?;
                    let (lhs, rhs) =
                        qsym_dual_cauchy_antipode(r, s, &c, &d).map_err(|e| e.to_string())?;
                    (lhs, rhs, "qsym-dual-cauchy-antipode")
                }
                other => return Err(format!("unknown identity {other:?}")),
            };
            let equal = lhs == rhs;
            println!("{}", serde_json::json!({"identity": label, "equal": equal}));
            Ok(equal)
        }
    }
}

fn run_duality(cmd: DualityCmd, config: &FileConfig) -> Result<bool, String> {
    match cmd {
        DualityCmd::Dual { tableau } => {
            let t = load_tableau_u32(&tableau)?;
            let spec = RibbonSpec::from_shape(t.shape()).map_err(|e| e.to_string())?;
            match dual_ribbon(&spec, &t).map_err(|e| e.to_string())? {
                Some((dspec, dt)) => {
                    let entries: Vec<_> = dt
                        .entries()
                        .iter()
                        .map(|(&(i, j), &v)| serde_json::json!([i, j, v]))
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({
                            "dual": "ribbon",
                            "hooks": dspec.hooks(),
                            "shape": {
                                "outer": dt.shape().outer().parts(),
                                "inner": dt.shape().inner().parts(),
                            },
                            "entries": entries,
                        })
                    );
                }
                None => println!("{}", serde_json::json!({"dual": "non-ribbon"})),
            }
            Ok(true)
        }
        DualityCmd::Check { pair, tol } => {
            let tol = tol.or(config.tol).unwrap_or(1e-4);
            let (left, right) = load_pair(&pair)?;
            let lspec = RibbonSpec::from_shape(left.shape()).map_err(|e| e.to_string())?;
            let rspec = RibbonSpec::from_shape(right.shape()).map_err(|e| e.to_string())?;
            let report = check_duality_numeric((&lspec, &left), (&rspec, &right), tol)
                .map_err(|e| e.to_string())?;
            println!("{}", serde_json::to_string(&report).unwrap());
            Ok(report.pass)
        }
    }
}

fn run_enumerate(cmd: EnumerateCmd) -> Result<bool, String> {
    match cmd {
        EnumerateCmd::Ssyt { shape, n, count } => {
            let shape = SkewShape::parse(&shape).map_err(|e| e.to_string())?;
            let cap: u64 = std::env::var("SCHURZETA_SSYT_CAP")
                .ok()
                .and_then(|v| v.parse().ok())
                .unwrap_or(10_000_000);
            if count {
                let mut total = 0u64;
                for _ in ssyt_iter(&shape, n) {
                    total += 1;
                    if total > cap {
                        return Err(format!("enumeration exceeds cap {cap}"));
                    }
                }
                println!("{}", serde_json::json!({"count": total}));
            } else {
                for (idx, t) in ssyt_iter(&shape, n).enumerate() {
                    if idx as u64 >= cap {
                        return Err(format!("enumeration exceeds cap {cap}"));
                    }
                    let entries: Vec<_> = t
                        .entries()
                        .iter()
                        .map(|(&(i, j), &v)| serde_json::json!([i, j, v]))
                        .collect();
                    println!("{}", serde_json::json!({"entries": entries}));
                }
            }
            Ok(true)
        }
        EnumerateCmd::Rims { shape, kind } => {
            let shape = SkewShape::parse(&shape).map_err(|e| e.to_string())?;
            for rim in rim_decompositions(&shape, kind.into()) {
                // serialize as the tableau filled with ribbon indices
                let mut filling: Vec<serde_json::Value> = Vec::new();
                for (idx, ribbon) in rim.ribbons.iter().enumerate() {
                    for &(i, j) in ribbon {
                        filling.push(serde_json::json!([i, j, idx + 1]));
                    }
                }
                filling.sort_by_key(|v| (v[0].as_u64(), v[1].as_u64()));
                println!(
                    "{}",
                    serde_json::json!({
                        "sign": rim.sign,
                        "perm": rim.perm,
                        "filling": filling,
                    })
                );
            }
            Ok(true)
        }
        EnumerateCmd::Preceq { shape, variant, count } => {
            let shape = SkewShape::parse(&shape).map_err(|e| e.to_string())?;
            let v = match variant.as_str() {
                "direct" => PreceqVariant::Direct,
                "conjugate" => PreceqVariant::Conjugate,
                other => return Err(format!("unknown variant {other:?}")),
            };
            let set = preceq_set(&shape, v);
            if count {
                println!("{}", serde_json::json!({"count": set.len()}));
            } else {
                for bs in set {
                    let blocks: Vec<Vec<[usize; 2]>> = bs
                        .blocks
                        .iter()
                        .map(|b| b.iter().map(|&(i, j)| [i, j]).collect())
                        .collect();
                    println!(
                        "{}",
                        serde_json::json!({"sign": bs.sign(), "blocks": blocks})
                    );
                }
            }
            Ok(true)
        }
    }
}
