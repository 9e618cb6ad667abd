use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use supersym::groupoid::{self, PointSet};
use supersym::json::PolynomialJson;
use supersym::laurent::{self, SignaturePair};
use supersym::osp::{self, OspKind, OspSpec};
use supersym::{selftest, supersym as ss, Error, Partition, Point, Polynomial};

#[derive(Parser)]
#[command(name = "supersym", version, about = "Exact computations with supersymmetric polynomials")]
struct Cli {
    /// Seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest total degree accepted by `decompose`.
    #[arg(long, global = true, default_value_t = ss::DEFAULT_DEGREE_CAP)]
    degree_cap: u32,
    /// Shift depth per chain for `orbit --groupoid`.
    #[arg(long, global = true, default_value_t = 8)]
    depth_cap: usize,
    /// Human-readable output instead of compact JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// JSON input file; standard input when absent.
    #[arg(long = "in", value_name = "FILE")]
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Super Schur polynomial F_λ in m x- and n y-variables.
    Superschur {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        /// Parts separated by commas, e.g. `3,1,1`; empty for λ = ().
        #[arg(long, default_value = "")]
        partition: String,
        /// Build T·S_μ(x)·S_ν(y) instead (requires λ ∈ H⁰).
        #[arg(long)]
        factored: bool,
    },
    /// Supersymmetry test (Laurent supersymmetry for Laurent input).
    Check(Input),
    /// Coordinates in the F_λ basis.
    Decompose(Input),
    /// Evaluation map dropping x_m and y_n.
    Phi(Input),
    /// The four conditions at (x_1, y_1) and the R + Sz splitting.
    LaurentCheck {
        #[command(flatten)]
        input: Input,
        #[arg(long, default_value_t = laurent::DEFAULT_TORUS_SAMPLES)]
        samples: usize,
    },
    /// K_{λ,μ} from `--lambda`/`--mu` or a {"lambda":..,"mu":..} document.
    KElement {
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        mu: Option<String>,
        #[command(flatten)]
        input: Input,
    },
    /// Weyl orbit, or groupoid orbit with `--groupoid`.
    Orbit {
        #[arg(long)]
        point: Option<String>,
        #[arg(long)]
        groupoid: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Degree of atypicality of a point.
    Atypicality {
        #[arg(long)]
        point: Option<String>,
        #[command(flatten)]
        input: Input,
    },
    /// Separating polynomial for an invariant set and an outside point.
    Separate {
        /// JSON array of points.
        #[arg(long)]
        set: Option<String>,
        #[arg(long)]
        point: Option<String>,
        /// Document {"set": [...], "point": {...}} used when the flags are absent.
        #[command(flatten)]
        input: Input,
    },
    /// Membership in the image I(h) for glmn, ospodd or ospeven.
    OspCheck {
        #[arg(long)]
        kind: OspKind,
        #[command(flatten)]
        input: Input,
    },
    /// Value of a polynomial at a point.
    Eval {
        #[arg(long)]
        point: String,
        #[command(flatten)]
        input: Input,
    },
    /// Runs the acceptance checks.
    Selftest {
        /// Only this criterion (1-10).
        #[arg(long)]
        criterion: Option<u32>,
    },
}

enum Failure {
    Usage(String),
    Malformed(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_usage() {
            Failure::Malformed(e.to_string())
        } else {
            Failure::Domain(e)
        }
    }
}

enum Output {
    Poly(Polynomial),
    Json(Value),
    Report(Vec<selftest::CriterionReport>),
}

fn read_input(input: &Input) -> Result<String, Failure> {
    match &input.input {
        Some(path) => fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display()))),
        None => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(e.to_string()))?;
            Ok(s)
        }
    }
}

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Malformed(e.to_string()))
}

fn read_poly(input: &Input) -> Result<Polynomial, Failure> {
    parse(&read_input(input)?)
}

fn read_point(inline: &Option<String>, input: &Input) -> Result<Point, Failure> {
    match inline {
        Some(text) => parse(text),
        None => parse(&read_input(input)?),
    }
}

fn int_list<T: std::str::FromStr>(s: &str) -> Result<Vec<T>, Failure> {
    s.split([',', ' '])
        .filter(|t| !t.is_empty())
        .map(|t| t.trim().parse().map_err(|_| Failure::Usage(format!("not an integer: {t:?}"))))
        .collect()
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    let out = match &cli.command {
        Command::Superschur { m, n, partition, factored } => {
            let lambda = Partition::new(int_list(partition)?).map_err(|e| Failure::Usage(e.to_string()))?;
            let f = if *factored {
                ss::super_schur_factored(&lambda, *m, *n)?
            } else {
                ss::super_schur(&lambda, *m, *n)?
            };
            Output::Poly(f)
        }
        Command::Check(input) => {
            let f = read_poly(input)?;
            if f.spec().laurent {
                Output::Json(json!({ "laurent_supersymmetric": laurent::is_laurent_supersymmetric(&f) }))
            } else {
                Output::Json(json!({ "supersymmetric": ss::is_supersymmetric(&f) }))
            }
        }
        Command::Decompose(input) => {
            let f = read_poly(input)?;
            Output::Json(to_json(&ss::decompose_with_cap(&f, cli.degree_cap)?))
        }
        Command::Phi(input) => {
            let f = read_poly(input)?;
            Output::Poly(if f.spec().laurent { laurent::phi_l(&f)? } else { ss::phi_s(&f)? })
        }
        Command::LaurentCheck { input, samples } => {
            let f = read_poly(input)?;
            let c = laurent::cod_check_with_samples(&f, cli.seed, *samples)?;
            let split = laurent::decompose_r_sz(&f).ok().map(|(r, s)| json!({ "r": to_json(&r), "s": to_json(&s) }));
            Output::Json(json!({ "a": c.a, "b": c.b, "c": c.c, "d": c.d, "r_sz": split }))
        }
        Command::KElement { lambda, mu, input } => {
            let sig = match (lambda, mu) {
                (None, None) => parse::<SignaturePair>(&read_input(input)?)?,
                _ => {
                    let l = int_list(lambda.as_deref().unwrap_or(""))?;
                    let m = int_list(mu.as_deref().unwrap_or(""))?;
                    SignaturePair::from_vecs(l, m).map_err(|e| Failure::Usage(e.to_string()))?
                }
            };
            Output::Poly(laurent::k_element(&sig)?)
        }
        Command::Orbit { point, groupoid: closure, input } => {
            let p = read_point(point, input)?;
            let (set, truncated) =
                if *closure { groupoid::groupoid_orbit(&p, cli.depth_cap) } else { (groupoid::weyl_orbit(&p), false) };
            Output::Json(json!({ "points": to_json(&set), "truncated": truncated }))
        }
        Command::Atypicality { point, input } => {
            let p = read_point(point, input)?;
            Output::Json(json!({ "r": groupoid::atypicality(&p) }))
        }
        Command::Separate { set, point, input } => {
            let (v, p): (PointSet, Point) = match (set, point) {
                (Some(s), Some(p)) => (parse(s)?, parse(p)?),
                (None, None) => {
                    let doc: Value = parse(&read_input(input)?)?;
                    let field = |k: &str| doc.get(k).cloned().ok_or_else(|| Failure::Malformed(format!("missing field {k:?}")));
                    let v = serde_json::from_value(field("set")?).map_err(|e| Failure::Malformed(e.to_string()))?;
                    let p = serde_json::from_value(field("point")?).map_err(|e| Failure::Malformed(e.to_string()))?;
                    (v, p)
                }
                _ => return Err(Failure::Usage("--set and --point must be given together".into())),
            };
            Output::Poly(groupoid::separating_polynomial(&v, &p, cli.seed)?)
        }
        Command::OspCheck { kind, input } => {
            let f = read_poly(input)?;
            let spec = OspSpec::new(*kind, f.spec().m, f.spec().n);
            let member = osp::ih_membership(&f, spec)?;
            let mut out = json!({ "member": member });
            if *kind == OspKind::Ospeven {
                let (f1, fs) = osp::sigma_decompose(&f)?;
                out["invariant_part"] = to_json(&PolynomialJson::from(&f1).with_names("h", "h'"));
                out["skew_part"] = to_json(&PolynomialJson::from(&fs).with_names("h", "h'"));
            }
            Output::Json(out)
        }
        Command::Eval { point, input } => {
            let f = read_poly(input)?;
            let p: Point = parse(point)?;
            Output::Json(json!({ "value": f.evaluate(&p)?.to_string() }))
        }
        Command::Selftest { criterion } => match criterion {
            Some(id) => {
                let r = selftest::run(*id, cli.seed)
                    .ok_or_else(|| Failure::Usage(format!("criterion must be in 1..={}", selftest::CRITERION_COUNT)))?;
                Output::Report(vec![r])
            }
            None => Output::Report(selftest::run_all(cli.seed)),
        },
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(Output::Poly(f)) => {
            if cli.pretty {
                println!("{f}");
            } else {
                println!("{}", serde_json::to_string(&f).expect("serializable"));
            }
            ExitCode::SUCCESS
        }
        Ok(Output::Json(v)) => {
            print_json(&v, cli.pretty);
            ExitCode::SUCCESS
        }
        Ok(Output::Report(reports)) => {
            if cli.pretty {
                for r in &reports {
                    println!("{r}");
                }
            } else {
                print_json(&to_json(&reports), false);
            }
            if reports.iter().all(|r| r.passed) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Domain(e)) => {
            eprintln!("{}", json!({ "error": e.code(), "detail": e.to_string() }));
            ExitCode::from(1)
        }
        Err(Failure::Usage(detail)) => {
            eprintln!("{}", json!({ "error": "usage", "detail": detail }));
            ExitCode::from(2)
        }
        Err(Failure::Malformed(detail)) => {
            eprintln!("{}", json!({ "error": "parse", "detail": detail }));
            ExitCode::from(2)
        }
    }
}

fn print_json(v: &Value, pretty: bool) {
    if pretty {
        println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
    } else {
        println!("{v}");
    }
}
