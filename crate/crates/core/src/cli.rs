//! The `eqtwist` command line: JSON inputs, one subcommand per computation,
//! deterministic JSON or text output.
//!
//! Exit codes: 0 success, 1 parse or validation failure, 2 budget exhausted,
//! 3 internal invariant breach (including a cross-check mismatch).

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::abelian::{FgAbGroup, NormalForm};
use crate::cartan::{check_axioms, crosscheck};
use crate::cohomology::equivariant_cohomology;
use crate::em::CochainModel;
use crate::error::Error;
use crate::io::{self, Parsed, Sources, TheoryJson};
use crate::report::ValidationReport;
use crate::simplicial::{validate_complex, FiniteLevels};

#[derive(Debug, Parser)]
#[command(
    name = "eqtwist",
    version,
    about = "Equivariant twisted cohomology of finite G-simplicial sets"
)]
pub struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Upper bound on enumerated elements or search candidates.
    #[arg(long, default_value_t = 1 << 16, global = true)]
    pub budget: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Args)]
pub struct Inputs {
    #[arg(long)]
    pub complex: PathBuf,
    #[arg(long)]
    pub group: Option<PathBuf>,
    #[arg(long)]
    pub coeffs: Option<PathBuf>,
    #[arg(long)]
    pub twist: Option<PathBuf>,
    #[arg(long)]
    pub action: Option<PathBuf>,
}

impl Inputs {
    fn parse(&self) -> Result<Parsed, Error> {
        Sources::from_paths(
            &self.complex,
            self.group.as_deref(),
            self.coeffs.as_deref(),
            self.twist.as_deref(),
            self.action.as_deref(),
        )?
        .parse()
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate the complex, action, coefficients, twist and action data.
    Validate {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Simplex counts and connectivity of every fixed-point complex.
    Fixedpoints {
        #[command(flatten)]
        inputs: Inputs,
    },
    /// Untwisted Bredon cohomology in one degree.
    Bredon {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        degree: usize,
    },
    /// Twisted equivariant cohomology in one degree.
    Twisted {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long)]
        degree: usize,
    },
    /// Check the Cartan-theory axioms for a generated theory.
    CartanCheck {
        #[arg(long)]
        theory: PathBuf,
        /// `i_max,p_max`.
        #[arg(long, value_parser = parse_bounds)]
        bounds: Option<(usize, usize)>,
    },
    /// Compare twisted Bredon cohomology with the lift complex of the canonical theory.
    Crosscheck {
        #[command(flatten)]
        inputs: Inputs,
        #[arg(long, default_value_t = 2)]
        nmax: usize,
    },
    /// Level cardinalities of the cochain models `K(A,n)` or `C(A,n)`.
    EmInfo {
        #[arg(long = "A")]
        a: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        q: usize,
        #[arg(long, value_enum, default_value_t = Model::K)]
        model: Model,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    K,
    C,
}

fn parse_bounds(s: &str) -> Result<(usize, usize), String> {
    let (i, p) = s.split_once(',').ok_or("expected `i,p`")?;
    let num = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("`{t}`: {e}"));
    Ok((num(i)?, num(p)?))
}

/// What a command prints and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Budget(_) => 2,
        Error::Internal(_) => 3,
        _ => 1,
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            if code == 0 {
                Outcome {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            }
        }
    }
}

struct Done {
    ok: bool,
    code_on_failure: i32,
    json: Value,
    text: String,
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok(d) => {
            let stdout = match cli.format {
                Format::Json => serde_json::to_string_pretty(&d.json).expect("values serialize") + "\n",
                Format::Text => d.text,
            };
            Outcome {
                code: if d.ok { 0 } else { d.code_on_failure },
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn cohomology_json(n: usize, g: &NormalForm) -> Value {
    let mut v = serde_json::to_value(g).expect("normal forms serialize");
    v["degree"] = json!(n);
    v
}

fn reports_text(reports: &[ValidationReport]) -> String {
    reports
        .iter()
        .map(|r| format!("{r}\n"))
        .collect::<String>()
        .replace("\n\n", "\n")
}

fn dispatch(cli: &Cli) -> Result<Done, Error> {
    match &cli.command {
        Command::Validate { inputs } => validate(inputs),
        Command::Fixedpoints { inputs } => {
            let space = inputs.parse()?.space()?;
            let orbit = space.orbit_category();
            let conn = space.check_g_connected();
            let mut rows = Vec::new();
            let mut text = String::new();
            for h in orbit.objects() {
                let c = &space.fixed_points(h).complex;
                let connected = !conn.failures.contains(&orbit.key(h));
                text += &format!("X^{}: counts {:?}, connected {connected}\n", orbit.key(h), c.counts());
                rows.push(json!({ "subgroup": orbit.key(h), "counts": c.counts(), "connected": connected }));
            }
            Ok(Done {
                ok: true,
                code_on_failure: 1,
                json: json!({ "fixed_points": rows, "g_connected": conn.connected }),
                text,
            })
        }
        Command::Bredon { inputs, degree } => {
            if inputs.twist.is_some() || inputs.action.is_some() {
                return Err(Error::Invalid("bredon takes no twist; use `twisted`".into()));
            }
            cohomology(inputs, *degree)
        }
        Command::Twisted { inputs, degree } => cohomology(inputs, *degree),
        Command::CartanCheck { theory, bounds } => {
            let t: TheoryJson = io::read(theory)?;
            let theory = io::theory_from_json(&t, *bounds, cli.budget)?;
            let r = check_axioms(&theory, cli.budget)?;
            let axioms: Vec<Value> = r
                .axioms
                .iter()
                .enumerate()
                .map(|(k, a)| {
                    json!({
                        "axiom": k + 1,
                        "pass": a.is_ok(),
                        "checks": a.checks,
                        "violations": a.violations.iter().take(5).collect::<Vec<_>>(),
                        "violation_count": a.violations.len(),
                    })
                })
                .collect();
            let text = r
                .axioms
                .iter()
                .enumerate()
                .map(|(k, a)| format!("axiom {}: {}\n", k + 1, if a.is_ok() { "pass" } else { "FAIL" }))
                .collect();
            Ok(Done {
                ok: r.is_ok(),
                code_on_failure: 1,
                json: json!({ "bounds": [r.i_max, r.p_max], "axioms": axioms, "ok": r.is_ok() }),
                text,
            })
        }
        Command::Crosscheck { inputs, nmax } => {
            let twist = inputs.parse()?.twist()?;
            let c = crosscheck(twist.as_ref(), *nmax)?;
            let rows: Vec<Value> = c
                .rows
                .iter()
                .map(|r| json!({ "degree": r.degree, "bredon": r.bredon, "lift": r.lift, "match": r.matches() }))
                .collect();
            let status = if c.is_ok() { "match" } else { "mismatch" };
            let mut text: String = c
                .rows
                .iter()
                .map(|r| format!("H^{}: bredon {}, lift {}\n", r.degree, r.bredon, r.lift))
                .collect();
            text += &format!("{}\n{status}\n", c.cochain_map);
            Ok(Done {
                ok: c.is_ok(),
                code_on_failure: 3,
                json: json!({ "rows": rows, "cochain_map": c.cochain_map, "status": status }),
                text,
            })
        }
        Command::EmInfo { a, n, q, model } => {
            let group: FgAbGroup = io::parse_abelian(a)?;
            let m = match model {
                Model::K => CochainModel::k(group.clone(), *n),
                Model::C => CochainModel::c(group.clone(), *n),
            }
            .with_budget(cli.budget);
            let counts = (0..=*q)
                .map(|k| m.simplices(k).map(|s| s.len()))
                .collect::<Result<Vec<_>, _>>()?;
            let name = match model {
                Model::K => "K",
                Model::C => "C",
            };
            Ok(Done {
                ok: true,
                code_on_failure: 1,
                json: json!({ "A": group.normal_form().to_string(), "n": n, "model": name, "cardinalities": counts }),
                text: format!("|{name}({}, {n})_q| for q = 0..{q}: {counts:?}\n", group.normal_form()),
            })
        }
    }
}

fn cohomology(inputs: &Inputs, n: usize) -> Result<Done, Error> {
    let twist = inputs.parse()?.twist()?;
    let g = equivariant_cohomology(twist.as_ref(), n)?;
    Ok(Done {
        ok: true,
        code_on_failure: 1,
        json: cohomology_json(n, g.normal_form()),
        text: format!("H^{n} = {}\n", g.normal_form()),
    })
}

fn validate(inputs: &Inputs) -> Result<Done, Error> {
    let parsed = inputs.parse()?;
    let mut reports = Vec::new();
    let complex = io::complex_from_json(&parsed.complex)?;
    reports.push(validate_complex(&complex));
    if reports[0].is_ok() {
        match parsed.space() {
            Ok(space) => {
                let mut r = space.validate_phi();
                r.subject = "fixed-point inclusions".into();
                reports.push(r);
                if parsed.coeffs.is_some() {
                    let q_max = complex.truncation();
                    let twist = parsed.twist()?;
                    reports.push(twist.validate(q_max)?);
                }
            }
            Err(Error::Invalid(msg)) => {
                let mut r = ValidationReport::new("group action");
                r.fail("action", msg);
                reports.push(r);
            }
            Err(e) => return Err(e),
        }
    }
    let ok = reports.iter().all(ValidationReport::is_ok);
    Ok(Done {
        ok,
        code_on_failure: 1,
        json: json!({ "ok": ok, "reports": reports }),
        text: reports_text(&reports),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fx(name: &str) -> String {
        format!("{}/fixtures/{name}", env!("CARGO_MANIFEST_DIR"))
    }

    #[test]
    fn bounds_parse() {
        assert_eq!(parse_bounds("2, 3"), Ok((2, 3)));
        assert!(parse_bounds("2").is_err());
    }

    #[test]
    fn twisted_circle_degree_one() {
        let o = run_args([
            "eqtwist",
            "twisted",
            "--complex",
            &fx("circle.json"),
            "--coeffs",
            &fx("const_z.json"),
            "--twist",
            &fx("circle_tau.json"),
            "--action",
            &fx("negate_z.json"),
            "--degree",
            "1",
        ]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        let v: Value = serde_json::from_str(&o.stdout).unwrap();
        assert_eq!(v, json!({ "degree": 1, "rank": 0, "torsion": [2] }));
    }

    #[test]
    fn usage_errors_exit_one() {
        assert_eq!(run_args(["eqtwist", "twisted"]).code, 1);
        assert_eq!(run_args(["eqtwist", "--help"]).code, 0);
    }
}
