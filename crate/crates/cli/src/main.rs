//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3
//! mathematical precondition violated.

mod bundles;
mod expr;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use thetasheaf::group::GroupSpec;
use thetasheaf::rep::{ModuleSpec, Representation};
use thetasheaf::sheaf::{Operator, ReportOptions, SheafReport};
use thetasheaf::{Error, GroupDescriptor};

#[derive(Parser, Debug)]
#[command(name = "thetasheaf", version, about = "Global operators and their sheaves over F_p")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Built-in group name (sl2, sl3, ea(r), ga(r), u(n), e(n)) or a JSON file.
    #[arg(long, global = true)]
    group: Option<String>,
    /// Module expression or a JSON file.
    #[arg(long, global = true)]
    module: Option<String>,
    /// Characteristic (default 3).
    #[arg(long, global = true)]
    p: Option<u32>,
    #[arg(long, global = true)]
    i: Option<u32>,
    #[arg(long, global = true)]
    j: Option<u32>,
    /// Rank parameter for verification bundles.
    #[arg(long, global = true)]
    r: Option<usize>,
    /// Point as `1,0,..` or `x1=1,x2=1`.
    #[arg(long, global = true)]
    point: Option<String>,
    #[arg(long, global = true)]
    sample: Option<usize>,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a sheaf attached to the module.
    Compute {
        #[arg(value_enum)]
        kind: Kind,
    },
    /// Local Jordan types at a point or over a sample.
    Jtype,
    /// Run a verification bundle.
    Verify {
        #[arg(value_enum)]
        which: Bundle,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    H,
    F,
    Ker,
    Im,
    Coker,
    Support,
    Theta,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Bundle {
    Fig1,
    #[value(name = "sl2-regular")]
    Sl2Regular,
    #[value(name = "bgg-values")]
    BggValues,
    Fomega,
    Thick,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Math(Error),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::InvalidModulus(_) | Error::Shape(_) => Failure::Input(e.to_string()),
            e => Failure::Math(e),
        }
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

struct Rendered {
    json: Value,
    text: String,
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Outcome<T> {
    let raw = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&raw).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn is_file(s: &str) -> bool {
    s.ends_with(".json") || Path::new(s).is_file()
}

fn load_group(cli: &Cli) -> Outcome<Option<Arc<GroupDescriptor>>> {
    let Some(name) = &cli.group else {
        return Ok(None);
    };
    let g = if is_file(name) {
        let mut spec: GroupSpec = read_json(Path::new(name))?;
        if let Some(p) = cli.p {
            spec.p = p;
        }
        GroupDescriptor::from_spec(&spec)?
    } else {
        GroupDescriptor::builtin(name, cli.p.unwrap_or(3))?
    };
    Ok(Some(Arc::new(g)))
}

fn load_module(cli: &Cli) -> Outcome<(Arc<GroupDescriptor>, Representation, String)> {
    let group = load_group(cli)?;
    let Some(src) = &cli.module else {
        return Err(Failure::Input("--module is required".into()));
    };
    if is_file(src) {
        let spec: ModuleSpec = read_json(Path::new(src))?;
        let m = Representation::from_spec(&spec)?;
        if let Some(g) = group {
            if *g != **m.group() {
                return Err(Failure::Math(Error::GroupMismatch));
            }
        }
        return Ok((m.group().clone(), m, src.clone()));
    }
    let Some(group) = group else {
        return Err(Failure::Input("--group is required for a module expression".into()));
    };
    let e = expr::parse(src)?;
    let m = expr::eval(&e, &group)?;
    Ok((group, m, src.clone()))
}

fn header(group: &GroupDescriptor, module: &str) -> serde_json::Map<String, Value> {
    let mut h = serde_json::Map::new();
    h.insert("group".into(), json!(group.name()));
    h.insert("p".into(), json!(group.p()));
    h.insert("module".into(), json!(module));
    h
}

fn report_text(r: &SheafReport) -> String {
    let mut s = format!(
        "sheaf: {}\nmodule_zero: {}\nsheaf_zero: {}\n",
        r.sheaf, r.module_zero, r.sheaf_zero
    );
    if let Some(ideal) = &r.support_ideal {
        s += &format!("support_ideal: ({})\n", ideal.join(", "));
    }
    match r.locally_free_rank {
        Some(k) => s += &format!("locally_free_rank: {k}\n"),
        None => s += "locally_free_rank: none\n",
    }
    if let Some(fp) = &r.fingerprint {
        let hf: Vec<String> = fp.hilbert.iter().map(|(d, v)| format!("{d}:{v}")).collect();
        let fit: Vec<String> = fp.fitting.iter().map(|f| format!("{f:?}")).collect();
        s += &format!("hilbert: {}\nfitting: {}\n", hf.join(" "), fit.join(", "));
    }
    s
}

fn index(value: Option<u32>, lo: u32, hi: u32, what: &str) -> Outcome<u32> {
    let v = value.unwrap_or(1);
    if v < lo || v > hi {
        return Err(Failure::Math(Error::Range(format!("{what} = {v} outside {lo}..={hi}"))));
    }
    Ok(v)
}

fn compute(cli: &Cli, kind: Kind) -> Outcome<Rendered> {
    let (group, m, name) = load_module(cli)?;
    let mut out = header(&group, &name);
    out.insert("kind".into(), json!(format!("{kind:?}").to_lowercase()));
    let theta = m.assemble_theta()?;
    if kind == Kind::Theta {
        let rows: Vec<Vec<String>> = theta
            .entries()
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect())
            .collect();
        let text = rows.iter().map(|r| format!("[{}]", r.join(", "))).collect::<Vec<_>>().join("\n") + "\n";
        out.insert("theta".into(), json!(rows));
        out.insert("row_degrees".into(), json!(theta.row_degrees()));
        out.insert("col_degrees".into(), json!(theta.col_degrees()));
        return Ok(Rendered { json: Value::Object(out), text });
    }
    let p = m.p();
    let op = Operator::new(theta, p)?;
    let (sheaf, opts) = match kind {
        Kind::H => {
            let i = index(cli.i, 1, p - 1, "i")?;
            out.insert("i".into(), json!(i));
            (op.h_sheaf(i)?, ReportOptions::all())
        }
        Kind::Support => {
            let i = index(cli.i, 1, p - 1, "i")?;
            out.insert("i".into(), json!(i));
            let opts = ReportOptions {
                support: true,
                ..ReportOptions::default()
            };
            (op.h_sheaf(i)?, opts)
        }
        Kind::F => {
            let i = index(cli.i, 1, p, "i")?;
            out.insert("i".into(), json!(i));
            (op.f_sheaf(i)?, ReportOptions::all())
        }
        Kind::Ker | Kind::Im | Kind::Coker => {
            let j = index(cli.j, 1, p, "j")?;
            out.insert("j".into(), json!(j));
            let (ker, im, coker) = op.ker_im_coker(j)?;
            let s = match kind {
                Kind::Ker => ker,
                Kind::Im => im,
                _ => coker,
            };
            (s, ReportOptions::all())
        }
        Kind::Theta => unreachable!(),
    };
    let report = SheafReport::build(&sheaf, opts)?;
    let text = report_text(&report);
    out.insert("report".into(), serde_json::to_value(&report).expect("serializable"));
    Ok(Rendered { json: Value::Object(out), text })
}

fn jtype(cli: &Cli) -> Outcome<Rendered> {
    let (group, m, name) = load_module(cli)?;
    let points = match (&cli.point, cli.sample) {
        (Some(pt), None) => vec![group.parse_point(pt)?],
        (None, Some(n)) if n > 0 => group.sample_points(n, cli.seed)?,
        (None, Some(_)) => return Err(Failure::Input("--sample must be positive".into())),
        (Some(_), Some(_)) => return Err(Failure::Input("use either --point or --sample".into())),
        (None, None) => return Err(Failure::Input("--point or --sample is required".into())),
    };
    let reports = m.jordan_reports(&points)?;
    let constant = m.constant_jt_check(&points)?.map(|p| p.to_string());
    let mut text = String::new();
    for r in &reports {
        let coords: Vec<String> = r.point.coords().iter().map(|c| c.to_string()).collect();
        text += &format!(
            "{}  {}  ranks {:?}{}\n",
            coords.join(","),
            r.partition,
            r.ranks,
            if r.projective { "  projective" } else { "" }
        );
    }
    text += &format!("constant: {}\n", constant.as_deref().unwrap_or("none"));
    let mut out = header(&group, &name);
    out.insert("reports".into(), serde_json::to_value(&reports).expect("serializable"));
    out.insert("constant".into(), json!(constant));
    Ok(Rendered { json: Value::Object(out), text })
}

#[derive(Serialize)]
struct VerifySummary<'a> {
    bundle: &'a str,
    passed: bool,
    checks: &'a [bundles::Check],
}

fn verify(cli: &Cli, which: Bundle) -> Outcome<(Rendered, bool)> {
    let params = bundles::Params {
        p: cli.p,
        r: cli.r,
        seed: cli.seed,
    };
    let group = cli.group.as_deref().unwrap_or("ea(2)");
    let (name, checks) = match which {
        Bundle::Fig1 => ("fig1", bundles::fig1()?),
        Bundle::Sl2Regular => ("sl2-regular", bundles::sl2_regular(params)?),
        Bundle::BggValues => ("bgg-values", bundles::bgg_values(params)?),
        Bundle::Fomega => ("fomega", bundles::fomega(group, params)?),
        Bundle::Thick => ("thick", bundles::thick(group, params)?),
    };
    let passed = checks.iter().all(|c| c.pass);
    let mut text = String::new();
    for c in &checks {
        text += &format!("{}  {:<28} {}\n", if c.pass { "PASS" } else { "FAIL" }, c.name, c.detail);
    }
    text += &format!(
        "{}: {}/{} checks passed\n",
        name,
        checks.iter().filter(|c| c.pass).count(),
        checks.len()
    );
    let json = serde_json::to_value(VerifySummary {
        bundle: name,
        passed,
        checks: &checks,
    })
    .expect("serializable");
    Ok((Rendered { json, text }, passed))
}

fn emit(cli: &Cli, r: &Rendered) -> Outcome<()> {
    let body = match cli.format {
        Format::Json => serde_json::to_string_pretty(&r.json).expect("serializable") + "\n",
        Format::Text => r.text.clone(),
    };
    match &cli.out {
        Some(path) => fs::write(path, body).map_err(|e| Failure::Input(format!("{}: {e}", path.display()))),
        None => {
            print!("{body}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> Outcome<()> {
    match cli.command {
        Command::Compute { kind } => emit(cli, &compute(cli, kind)?),
        Command::Jtype => emit(cli, &jtype(cli)?),
        Command::Verify { which } => {
            let (r, passed) = verify(cli, which)?;
            emit(cli, &r)?;
            if passed {
                Ok(())
            } else {
                Err(Failure::Verify)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verify) => ExitCode::from(1),
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Math(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(3)
        }
    }
}
