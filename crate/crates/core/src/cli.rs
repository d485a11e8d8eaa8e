//! The `ipc` command line. Output records are documented in `FORMAT.md`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use crate::formula::{variables_of, Formula};
use crate::kernel::check;
use crate::lindenbaum::{
    complete, countermodel_run, extract_valuation, verify_valuation_claim, CompletionTrace,
    CountermodelConfig, FormulaValuation,
};
use crate::metatheory::{deduction_transform, derive_lemma, prove_identity, Lemma};
use crate::oracle::OracleMode;
use crate::parser::parse;
use crate::proof::{Extension, ProofBuilder};
use crate::proof_file::{parse_proof_file, print_proof, print_proof_file, ProofFile};
use crate::scheme::SchemeId;
use crate::semantics::is_tautology;
use crate::universe::enumerate;

#[derive(Debug, Parser)]
#[command(name = "ipc", about = "Implicational propositional calculus toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check a proof file
    Check { file: PathBuf },
    /// Decide whether a formula is a tautology
    Taut { formula: String },
    /// Discharge a hypothesis from a proof file
    Dt {
        file: PathBuf,
        #[arg(long)]
        discharge: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Emit a proof of one of the eight library lemmas, e.g. `thm1.7`
    Derive {
        lemma: String,
        #[arg(long, default_value = "q")]
        q: String,
        #[arg(long, default_value = "p")]
        a: String,
        #[arg(long, default_value = "r")]
        b: String,
        #[arg(long, default_value = "s")]
        c: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the completion procedure and print the trace and valuation
    Complete {
        #[command(flatten)]
        run: RunArgs,
        /// Comma-separated variables of the universe; defaults to those of --q
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
        /// Starting axioms, separated by ';'
        #[arg(long)]
        ext: Option<String>,
    },
    /// Extract a falsifying assignment for a non-tautology
    Countermodel {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Build and check the lemma library and a few small completions
    Selftest,
}

#[derive(Debug, Args)]
struct RunArgs {
    #[arg(long)]
    q: String,
    #[arg(long, default_value_t = 3)]
    bound: usize,
    /// `semantic` or `search:<depth>`
    #[arg(long, default_value = "semantic")]
    oracle: String,
    /// Write the per-step trace here instead of standard output
    #[arg(long)]
    trace: Option<PathBuf>,
}

impl RunArgs {
    fn oracle(&self) -> Result<OracleMode> {
        Ok(self.oracle.parse()?)
    }
}

fn formula_arg(name: &str, text: &str) -> Result<Formula> {
    parse(text).with_context(|| format!("in --{name} '{text}'"))
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) => fs::write(p, text).with_context(|| format!("cannot write {}", p.display())),
        None => Ok(out.write_all(text.as_bytes())?),
    }
}

/// Parses `thm1.<k>`.
fn lemma_arg(s: &str) -> Result<Lemma> {
    s.strip_prefix("thm1.")
        .and_then(|k| k.parse().ok())
        .and_then(Lemma::from_index)
        .ok_or_else(|| anyhow!("unknown lemma '{s}' (expected thm1.1 .. thm1.8)"))
}

pub fn trace_records(trace: &CompletionTrace) -> String {
    let mut s = String::new();
    for r in &trace.records {
        let verdict = if r.qqa_theorem { "qqa-theorem" } else { "qqa-open" };
        let added = if r.added { "added" } else { "kept" };
        s.push_str(&format!("step {} {verdict} {added} {}\n", r.index, r.formula));
    }
    s
}

fn summary_records(trace: &CompletionTrace, v: &FormulaValuation) -> String {
    let mut s = String::new();
    for (k, a) in trace.extension.added_axioms.iter().enumerate() {
        s.push_str(&format!("axiom {k} {a}\n"));
    }
    for (f, value) in v.entries() {
        s.push_str(&format!("value {} {f}\n", u8::from(*value)));
    }
    for (var, value) in v.assignment().iter() {
        s.push_str(&format!("assign {var} {}\n", u8::from(value)));
    }
    let report = verify_valuation_claim(v);
    s.push_str(&format!("claim {} {}\n", report.checked, report.violations.len()));
    for viol in &report.violations {
        s.push_str(&format!("violation {}\n", viol.implication));
    }
    s
}

fn cmd_check(out: &mut dyn Write, file: &Path) -> Result<i32> {
    let pf = parse_proof_file(&read(file)?).with_context(|| format!("in {}", file.display()))?;
    match check(&pf.proof, &pf.ext) {
        Ok(conclusion) => {
            writeln!(out, "valid")?;
            writeln!(out, "conclusion {conclusion}")?;
            writeln!(out, "steps {}", pf.proof.len())?;
            Ok(0)
        }
        Err(e) => {
            writeln!(out, "invalid")?;
            writeln!(out, "error {e}")?;
            Ok(1)
        }
    }
}

fn cmd_taut(out: &mut dyn Write, text: &str) -> Result<i32> {
    let f = formula_arg("formula", text)?;
    let verdict = is_tautology(&f)?;
    if verdict.tautology {
        writeln!(out, "tautology")?;
        writeln!(out, "formula {f}")?;
    } else {
        writeln!(out, "not-tautology")?;
        writeln!(out, "formula {f}")?;
        writeln!(out, "countermodel {}", verdict.countermodel.unwrap_or_default())?;
    }
    Ok(0)
}

fn cmd_complete(out: &mut dyn Write, run: &RunArgs, vars: &[String], ext: Option<&str>) -> Result<i32> {
    let q = formula_arg("q", &run.q)?;
    let oracle = run.oracle()?;
    let vars: Vec<String> = if vars.is_empty() {
        variables_of(&q).iter().map(|v| v.to_string()).collect()
    } else {
        vars.to_vec()
    };
    let start = match ext {
        Some(list) if !list.trim().is_empty() => Extension::new(
            list.split(';')
                .map(|s| formula_arg("ext", s.trim()))
                .collect::<Result<_>>()?,
        ),
        _ => Extension::base(),
    };
    let universe = enumerate(&vars, run.bound)?;
    let trace = complete(&start, &q, &universe, oracle)?;
    emit(out, run.trace.as_deref(), &trace_records(&trace))?;
    match extract_valuation(&trace, oracle) {
        Ok(v) => {
            out.write_all(summary_records(&trace, &v).as_bytes())?;
            Ok(0)
        }
        Err(crate::lindenbaum::LindenbaumError::Undefined { formulas }) => {
            for f in formulas {
                writeln!(out, "undefined {f}")?;
            }
            Ok(1)
        }
        Err(e) => Err(e.into()),
    }
}

fn cmd_countermodel(out: &mut dyn Write, run: &RunArgs) -> Result<i32> {
    let q = formula_arg("q", &run.q)?;
    let config = CountermodelConfig::new(run.bound, run.oracle()?);
    let result = countermodel_run(&q, &config)?;
    emit(out, run.trace.as_deref(), &trace_records(&result.trace))?;
    out.write_all(summary_records(&result.trace, &result.valuation).as_bytes())?;
    writeln!(out, "countermodel {}", result.assignment)?;
    Ok(0)
}

fn selftest_rows() -> Vec<(String, Result<()>)> {
    let mut rows = Vec::new();
    let f = |s: &str| parse(s).expect("selftest formula");
    let (q, a, b, c) = (f("q"), f("p"), f("r"), f("s"));
    let base = Extension::base();

    for lemma in Lemma::ALL {
        let result = (|| {
            let proof = derive_lemma(lemma, &q, &a, &b, &c);
            let conclusion = check(&proof, &base)?;
            if conclusion != lemma.statement(&q, &a, &b, &c) {
                bail!("unexpected conclusion {conclusion}");
            }
            let ax3 = proof.scheme_count(SchemeId::Ax3);
            if lemma.requires_peirce() != (ax3 > 0) {
                bail!("{ax3} AX3 steps");
            }
            if !is_tautology(&conclusion)?.tautology {
                bail!("conclusion is not a tautology");
            }
            let text = print_proof(&proof, &base);
            if print_proof_file(&parse_proof_file(&text)?) != text {
                bail!("proof file does not round-trip");
            }
            Ok(())
        })();
        rows.push((lemma.to_string(), result));
    }

    rows.push((
        "identity".into(),
        (|| {
            let p = prove_identity(&a);
            check(&p, &base)?;
            if p.len() != 5 {
                bail!("{} steps", p.len());
            }
            Ok(())
        })(),
    ));

    rows.push((
        "deduction".into(),
        (|| {
            let mut pb = ProofBuilder::new();
            let s1 = pb.hyp(&a);
            let s2 = pb.hyp(&f("p -> q"));
            pb.mp(s2, s1);
            let out = deduction_transform(&pb.finish(), &base, &a)?;
            if check(&out, &base)? != f("p -> q") || out.hypotheses != vec![f("p -> q")] {
                bail!("wrong discharge result");
            }
            Ok(())
        })(),
    ));

    for (text, expected) in [("p", "p=0"), ("(p -> q) -> q", "p=0 q=0"), ("p -> q", "p=1 q=0")] {
        rows.push((
            format!("countermodel {text}"),
            (|| {
                let run = countermodel_run(&f(text), &CountermodelConfig::new(3, OracleMode::Semantic))?;
                if run.assignment.to_string() != expected {
                    bail!("got {}", run.assignment);
                }
                if !run.claim.holds() {
                    bail!("{} claim violations", run.claim.violations.len());
                }
                Ok(())
            })(),
        ));
    }
    rows
}

fn cmd_selftest(out: &mut dyn Write) -> Result<i32> {
    let rows = selftest_rows();
    let passed = rows.iter().filter(|(_, r)| r.is_ok()).count();
    for (name, result) in &rows {
        match result {
            Ok(()) => writeln!(out, "pass {name}")?,
            Err(e) => writeln!(out, "fail {name} {e}")?,
        }
    }
    writeln!(out, "selftest {passed}/{}", rows.len())?;
    Ok(if passed == rows.len() { 0 } else { 1 })
}

fn dispatch(cli: Cli, out: &mut dyn Write) -> Result<i32> {
    match cli.command {
        Command::Check { file } => cmd_check(out, &file),
        Command::Taut { formula } => cmd_taut(out, &formula),
        Command::Dt {
            file,
            discharge,
            output,
        } => {
            let pf = parse_proof_file(&read(&file)?).with_context(|| format!("in {}", file.display()))?;
            let a = formula_arg("discharge", &discharge)?;
            let proof = deduction_transform(&pf.proof, &pf.ext, &a)?;
            let text = print_proof_file(&ProofFile { ext: pf.ext, proof });
            emit(out, output.as_deref(), &text)?;
            Ok(0)
        }
        Command::Derive {
            lemma,
            q,
            a,
            b,
            c,
            output,
        } => {
            let lemma = lemma_arg(&lemma)?;
            let proof = derive_lemma(
                lemma,
                &formula_arg("q", &q)?,
                &formula_arg("a", &a)?,
                &formula_arg("b", &b)?,
                &formula_arg("c", &c)?,
            );
            emit(out, output.as_deref(), &print_proof(&proof, &Extension::base()))?;
            Ok(0)
        }
        Command::Complete { run, vars, ext } => cmd_complete(out, &run, &vars, ext.as_deref()),
        Command::Countermodel { run } => cmd_countermodel(out, &run),
        Command::Selftest => cmd_selftest(out),
    }
}

/// Runs the command line `argv` (including the program name) and returns the
/// process exit code: 0 on success, 1 on a failed check or error, 2 on a usage
/// error.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = target.write_all(text.as_bytes());
            return e.exit_code();
        }
    };
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}
