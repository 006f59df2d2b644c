//! The `colorfan` command line.
//!
//! Every subcommand renders its result as text, JSON (`--json`) or CSV
//! (`--csv`). Exit codes: 0 success, 1 a verification came out false,
//! 2 bad input or exhausted budget, 3 an internal consistency check failed.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::chow::{degree_product, Basis};
use crate::error::{Error, Result};
use crate::fan::Fan;
use crate::geometry::complex::DEFAULT_TRANSVERSAL_BUDGET_N;
use crate::geometry::svg::{ipc_svg, normal_complex_svg};
use crate::geometry::{compare_normal_complex, normal_complex_piece, orthant_volumes};
use crate::ground::{Chain, GroundSet};
use crate::harness::{run_suite, verify_a, verify_b, volumes, SuiteConfig, VerificationReport, VolumeMethod};
use crate::io;
use crate::multimatroid::{random_r_multimatroid, RankFunction, SamplerMode};

#[derive(Debug, Parser)]
#[command(name = "colorfan", version, about = "Exact intersection theory on the π-colored fan")]
pub struct Cli {
    #[command(flatten)]
    pub format: FormatArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, Args)]
pub struct FormatArgs {
    /// Print machine-readable JSON.
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,
    /// Print CSV.
    #[arg(long, global = true)]
    pub csv: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Rays, cone counts, unimodularity and balancing of the fan.
    DescribeFan { ground: PathBuf },
    /// Rewrite a divisor in another basis.
    ConvertBasis {
        ground: PathBuf,
        #[arg(long)]
        divisor: PathBuf,
        /// Basis for divisors that do not name one.
        #[arg(long, default_value = "X")]
        from: Basis,
        #[arg(long, default_value = "H")]
        to: Basis,
    },
    /// Degree of a product of n divisors.
    Degree {
        ground: PathBuf,
        #[arg(long)]
        divisors: PathBuf,
        /// Basis for divisors that do not name one.
        #[arg(long, default_value = "X")]
        basis: Basis,
    },
    /// R1-R3 and BR1-BR4 for a rank function.
    CheckAxioms { ground: PathBuf, ranks: PathBuf },
    /// Cubical, pseudo-cubical or neither, with a witness chain.
    Cubicality { ground: PathBuf, ranks: PathBuf },
    /// Normalized volume of the independence polytopal complex.
    IpcVolume {
        ground: PathBuf,
        ranks: PathBuf,
        #[command(flatten)]
        volume: VolumeArgs,
        /// Write an SVG of the orthant polytopes (n = 2 only).
        #[arg(long)]
        emit_svg: Option<PathBuf>,
    },
    /// A piece of the normal complex of D_M, or its comparison with IPC(M).
    NormalComplex {
        ground: PathBuf,
        ranks: PathBuf,
        /// Maximal chain, sets separated by `;` and labels by `,`,
        /// e.g. `1;1,2`. Without it the whole complex is compared.
        #[arg(long)]
        chain: Option<String>,
        /// Write an SVG of the pieces (n = 2 only).
        #[arg(long)]
        emit_svg: Option<PathBuf>,
    },
    /// Degree of an h-monomial against the transversal count.
    VerifyA {
        ground: PathBuf,
        #[arg(long)]
        sets: PathBuf,
    },
    /// Degree of D_M^n against the IPC volume.
    VerifyB {
        ground: PathBuf,
        ranks: PathBuf,
        #[command(flatten)]
        volume: VolumeArgs,
    },
    /// Seeded verification suite with a JSON summary.
    RunSuite {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Sample a random ℝ-multimatroid.
    Random {
        ground: PathBuf,
        #[arg(long, default_value = "general")]
        mode: SamplerMode,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, Args)]
pub struct VolumeArgs {
    #[arg(long, default_value = "triangulation")]
    pub method: VolumeMethod,
    /// Largest n for which the transversal oracle runs.
    #[arg(long, default_value_t = DEFAULT_TRANSVERSAL_BUDGET_N)]
    pub budget_n: usize,
}

/// What a subcommand produced.
struct Output {
    value: Value,
    text: String,
    ok: bool,
}

impl Output {
    fn new(value: Value, text: String) -> Self {
        Output { value, text, ok: true }
    }

    fn checked(value: Value, text: String, ok: bool) -> Self {
        Output { value, text, ok }
    }
}

fn ranks(ground: &Path, ranks: &Path) -> Result<RankFunction> {
    let g = io::read_ground_set(ground)?;
    io::read_ranks(&g, ranks)
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

fn report_output(r: VerificationReport) -> Output {
    let third = r.third.map(|t| format!("\noracle  {t}")).unwrap_or_default();
    let text = format!("lhs     {}\nrhs     {}{third}\nequal   {}", r.lhs, r.rhs, r.equal);
    Output::checked(to_value(&r), text, r.equal)
}

fn parse_chain(g: &GroundSet, s: &str) -> Result<Chain> {
    let sets = s
        .split(';')
        .map(|part| {
            let labels: Vec<&str> = part.split(',').map(str::trim).filter(|l| !l.is_empty()).collect();
            g.set_from_labels(&labels)
        })
        .collect::<Result<Vec<_>>>()?;
    Chain::new(sets)
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::InvalidInput(format!("cannot write {}: {e}", path.display())))
}

fn describe_fan(ground: &Path) -> Result<Output> {
    let g = io::read_ground_set(ground)?;
    let fan = Fan::build(&g)?;
    let unimodular = fan.check_unimodular();
    let balancing = fan.check_balancing(&fan.top_cycle());
    let counts = fan.cone_counts();
    let ok = unimodular.unimodular && balancing.balanced;
    let value = json!({
        "ground_set": g.spec(),
        "ambient_dim": fan.ambient_dim(),
        "dim": fan.dim(),
        "num_rays": fan.num_rays(),
        "cone_counts": counts,
        "unimodularity": unimodular,
        "balancing": balancing,
    });
    let text = format!(
        "ambient dimension  {}\nrays               {}\ncones by dimension {:?}\nunimodular         {}\ntop cycle balanced {}",
        fan.ambient_dim(),
        fan.num_rays(),
        counts,
        unimodular.unimodular,
        balancing.balanced,
    );
    Ok(Output::checked(value, text, ok))
}

fn dispatch(command: Command) -> Result<Output> {
    match command {
        Command::DescribeFan { ground } => describe_fan(&ground),
        Command::ConvertBasis {
            ground,
            divisor,
            from,
            to,
        } => {
            let g = io::read_ground_set(&ground)?;
            let ds = io::parse_divisors(&g, &io::read_to_string(&divisor)?, from)?;
            let out: Vec<_> = ds.iter().map(|d| d.convert(to)).collect();
            let text = out.iter().map(|d| d.display()).collect::<Vec<_>>().join("\n");
            let value = if out.len() == 1 {
                to_value(&io::divisor_to_json(&out[0]))
            } else {
                json!({ "divisors": out.iter().map(io::divisor_to_json).collect::<Vec<_>>() })
            };
            Ok(Output::new(value, text))
        }
        Command::Degree {
            ground,
            divisors,
            basis,
        } => {
            let g = io::read_ground_set(&ground)?;
            let ds = io::parse_divisors(&g, &io::read_to_string(&divisors)?, basis)?;
            let fan = Fan::build(&g)?;
            let degree = degree_product(&fan, &ds)?;
            Ok(Output::new(json!({ "degree": degree.to_string() }), degree.to_string()))
        }
        Command::CheckAxioms { ground, ranks: r } => {
            let rk = ranks(&ground, &r)?;
            let real = rk.check_r_axioms();
            let multi = rk.check_multimatroid_axioms();
            let mut text = String::new();
            for c in real.checks.iter().chain(&multi.checks) {
                let status = if c.passed { "pass" } else { "fail" };
                let w = c.witness.as_deref().map(|w| format!("  {w}")).unwrap_or_default();
                text.push_str(&format!("{:<12} {status}{w}\n", c.axiom));
            }
            let value = json!({
                "r_multimatroid": real.passed(),
                "multimatroid": multi.passed(),
                "checks": real.checks.iter().chain(&multi.checks).collect::<Vec<_>>(),
            });
            // Failing BR axioms is a classification, not an error; only a
            // function that is not even an ℝ-multimatroid exits with 1.
            Ok(Output::checked(value, text.trim_end().into(), real.passed()))
        }
        Command::Cubicality { ground, ranks: r } => {
            let rep = ranks(&ground, &r)?.cubicality();
            let mut text = rep.class.to_string();
            if let Some(c) = &rep.witness_chain {
                text.push_str(&format!("\nchain    {c}"));
            }
            if let Some(w) = &rep.witness {
                text.push_str(&format!("\nwitness  {w}"));
            }
            Ok(Output::new(to_value(&rep), text))
        }
        Command::IpcVolume {
            ground,
            ranks: r,
            volume,
            emit_svg,
        } => {
            let rk = ranks(&ground, &r)?;
            let (vol, oracle) = volumes(&rk, volume.method, volume.budget_n)?;
            if let Some(path) = emit_svg {
                write_file(&path, &ipc_svg(&rk)?)?;
            }
            let g = rk.ground();
            let orthants: Vec<Value> = if volume.method == VolumeMethod::Transversal {
                Vec::new()
            } else {
                orthant_volumes(&rk)?
                    .iter()
                    .map(|(t, v)| json!({ "orthant": g.labels_of(t), "volume": v.to_string() }))
                    .collect()
            };
            let ok = oracle.is_none_or(|o| o == vol);
            let mut value = json!({ "volume": vol.to_string(), "orthants": orthants });
            let mut text = format!("volume  {vol}");
            if let Some(o) = oracle {
                value["transversal_volume"] = json!(o.to_string());
                value["equal"] = json!(ok);
                text.push_str(&format!("\noracle  {o}\nequal   {ok}"));
            }
            Ok(Output::checked(value, text, ok))
        }
        Command::NormalComplex {
            ground,
            ranks: r,
            chain,
            emit_svg,
        } => {
            let rk = ranks(&ground, &r)?;
            let d = rk.divisor();
            if let Some(path) = emit_svg {
                write_file(&path, &normal_complex_svg(&d)?)?;
            }
            match chain {
                Some(c) => {
                    let chain = parse_chain(rk.ground(), &c)?;
                    let piece = normal_complex_piece(&d, &chain)?.to_json()?;
                    let value = json!({
                        "chain": rk.ground().display_chain(&chain),
                        "piece": piece,
                    });
                    let text = serde_json::to_string_pretty(&value).expect("serializable");
                    Ok(Output::new(value, text))
                }
                None => {
                    let rep = compare_normal_complex(&rk)?;
                    let text = format!(
                        "class            {}\npieces equal     {}/{}\northants equal   {}/{}\nequal to IPC     {}",
                        rep.class,
                        rep.pieces_equal_global,
                        rep.pieces_checked,
                        rep.orthants_equal,
                        rep.orthants_checked,
                        rep.equal
                    );
                    Ok(Output::new(to_value(&rep), text))
                }
            }
        }
        Command::VerifyA { ground, sets } => {
            let g = io::read_ground_set(&ground)?;
            let sets = io::parse_sets(&g, &io::read_to_string(&sets)?)?;
            let fan = Fan::build(&g)?;
            Ok(report_output(verify_a(&fan, &sets)?))
        }
        Command::VerifyB {
            ground,
            ranks: r,
            volume,
        } => {
            let rk = ranks(&ground, &r)?;
            Ok(report_output(verify_b(&rk, volume.method, volume.budget_n)?))
        }
        Command::RunSuite { config, seed } => {
            let mut cfg: SuiteConfig = match config {
                Some(p) => serde_json::from_str(&io::read_to_string(&p)?)?,
                None => SuiteConfig::default(),
            };
            if let Some(s) = seed {
                cfg.seed = s;
            }
            let summary = run_suite(&cfg);
            let mut text = format!("seed {}: {}/{} passed", summary.seed, summary.passed, summary.total);
            for f in &summary.failures {
                text.push_str(&format!("\nFAIL {f}"));
            }
            let ok = summary.all_passed();
            Ok(Output::checked(to_value(&summary), text, ok))
        }
        Command::Random { ground, mode, seed } => {
            let g = io::read_ground_set(&ground)?;
            let rk = random_r_multimatroid(&g, seed, mode)?;
            let value = to_value(&io::ranks_to_json(&rk));
            let text = g
                .nonempty_sets()
                .iter()
                .map(|s| format!("{}  {}", g.display(s), rk.rank(s)))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Output::new(value, text))
        }
    }
}

fn csv_field(v: &Value) -> String {
    let s = match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        Value::Array(items) if items.iter().all(Value::is_string) => items
            .iter()
            .map(|i| i.as_str().unwrap_or_default())
            .collect::<Vec<_>>()
            .join(" "),
        other => other.to_string(),
    };
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}

fn csv_table(rows: &[Value]) -> String {
    let mut header: Vec<String> = Vec::new();
    for r in rows {
        if let Value::Object(m) = r {
            for k in m.keys() {
                if !header.contains(k) {
                    header.push(k.clone());
                }
            }
        }
    }
    let mut out = header.join(",");
    for r in rows {
        let line: Vec<String> = header.iter().map(|k| csv_field(&r[k.as_str()])).collect();
        out.push('\n');
        out.push_str(&line.join(","));
    }
    out
}

/// Flattens a result for CSV: an array of records becomes a table, a record
/// holding exactly one such array becomes that table, anything else becomes
/// `key,value` rows.
pub fn to_csv(v: &Value) -> String {
    let is_records = |v: &Value| matches!(v, Value::Array(a) if !a.is_empty() && a.iter().all(Value::is_object));
    if is_records(v) {
        return csv_table(v.as_array().expect("array"));
    }
    if let Value::Object(m) = v {
        let tables: Vec<&Value> = m.values().filter(|x| is_records(x)).collect();
        if tables.len() == 1 {
            return csv_table(tables[0].as_array().expect("array"));
        }
        let mut out = String::from("key,value");
        for (k, x) in m {
            out.push_str(&format!("\n{},{}", csv_field(&Value::String(k.clone())), csv_field(x)));
        }
        return out;
    }
    csv_field(v)
}

/// Parses `args` (including the program name), runs the command, prints the
/// result and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let format = cli.format;
    match dispatch(cli.command) {
        Ok(out) => {
            if format.json {
                println!("{}", serde_json::to_string_pretty(&out.value).expect("serializable"));
            } else if format.csv {
                println!("{}", to_csv(&out.value));
            } else {
                println!("{}", out.text);
            }
            if out.ok {
                0
            } else {
                1
            }
        }
        Err(e) => {
            if format.json {
                println!("{}", json!({ "error": e.to_string(), "exit_code": e.exit_code() }));
            }
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn main() -> i32 {
    run(std::env::args_os())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_shapes() {
        let v = json!({ "ranks": [{ "set": ["1", "2"], "rank": "6" }, { "set": ["1"], "rank": "5" }] });
        assert_eq!(to_csv(&v), "set,rank\n1 2,6\n1,5");
        let v = json!({ "degree": "68", "note": "a,b" });
        assert_eq!(to_csv(&v), "key,value\ndegree,68\nnote,\"a,b\"");
    }

    #[test]
    fn chain_parsing() {
        let g = crate::fixtures::b2();
        let c = parse_chain(&g, "1; 1,2bar").unwrap();
        assert_eq!(g.display_chain(&c), "{1} ⊊ {1,2bar}");
        assert!(parse_chain(&g, "1,2;1").is_err());
    }

    #[test]
    fn bad_arguments_exit_2() {
        assert_eq!(run(["colorfan", "no-such-command"]), 2);
        assert_eq!(run(["colorfan", "describe-fan", "/nonexistent.json"]), 2);
    }
}
