//! Command-line front end. Exit codes: 0 on completion (unknown verdicts
//! included), 2 on input errors, 3 on budget-cap aborts. JSON output is
//! byte-identical across runs on identical inputs.

use clap::{Args, Parser, Subcommand};
use fsing::cartier::cartier_untwisted;
use fsing::classify::Classifier;
use fsing::cohomology::{compare_windows, materialize_h};
use fsing::deform::{CertifyOutcome, DeformationContext, TargetProperty};
use fsing::error::Error;
use fsing::fixtures;
use fsing::groebner::Budget;
use fsing::input::{parse_input, RingInput};
use fsing::koszul::koszul_oracle;
use fsing::report::{self, to_json_string};

#[derive(Parser)]
#[command(name = "fsing", version, about = "Frobenius-theoretic classification of graded quotient rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BudgetArgs {
    /// S-pair cap for Groebner runs; hitting it yields unknown verdicts
    #[arg(long, default_value_t = 200_000)]
    pair_cap: usize,
}

impl BudgetArgs {
    fn budget(&self) -> Budget {
        Budget { pair_cap: self.pair_cap, hsl_cap: 30 }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Classify a quotient ring: F-pure, F-injective, F-full, per-index
    /// verdicts, depth, dimension and the finiteness dimension
    Classify {
        /// Path to a .fring input file
        file: String,
        /// Restrict to one cohomological index
        #[arg(long)]
        index: Option<usize>,
        /// Emit the JSON report instead of the plain summary
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Apply the deformation rules to certify a property of R from R/(x)
    Deform {
        file: String,
        /// Name of a declared element
        #[arg(long)]
        element: String,
        /// Target property: f-full | f-injective | strongly-f-injective | anti-nilpotent
        #[arg(long)]
        target: String,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Re-run a bundled fixture's assertion bundle
    Reproduce {
        /// One of: ex-semigroup, ex-segre-p2, ex-segre-p7, ex-fedder-singh, ex-nonperfect
        fixture: String,
        /// Run the slow assertions (the p = 7 Segre purity computation)
        #[arg(long)]
        slow: bool,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
    /// Compare the duality route against the Koszul oracle on a window
    OracleCheck {
        file: String,
        /// Cohomological index i
        #[arg(long)]
        index: usize,
        /// Degree window lo..hi (inclusive)
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        /// Koszul starting stage t
        #[arg(long)]
        stage: usize,
        #[arg(long)]
        json: bool,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

fn exit_code(err: &Error) -> i32 {
    match err {
        Error::PairCapExceeded { .. } | Error::CapExceeded(_) | Error::DimensionCapExceeded { .. } => 3,
        _ => 2,
    }
}

fn load_input(path: &str) -> Result<RingInput, Error> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse { line: 0, col: 0, msg: format!("cannot read {}: {}", path, e) })?;
    parse_input(&text)
}

fn parse_window(s: &str) -> Result<(i64, i64), Error> {
    let Some((lo, hi)) = s.split_once("..") else {
        return Err(Error::Parse { line: 0, col: 0, msg: format!("window must be lo..hi, got {:?}", s) });
    };
    let lo: i64 = lo
        .trim()
        .parse()
        .map_err(|_| Error::Parse { line: 0, col: 0, msg: format!("bad window bound {:?}", lo) })?;
    let hi: i64 = hi
        .trim()
        .parse()
        .map_err(|_| Error::Parse { line: 0, col: 0, msg: format!("bad window bound {:?}", hi) })?;
    Ok((lo, hi))
}

fn run() -> Result<(), Error> {
    let cli = Cli::parse();
    let started = std::time::Instant::now();
    let seed = report::seed_from_env();
    match cli.command {
        Command::Classify { file, index, json, budget } => {
            let budget = budget.budget();
            let input = load_input(&file)?;
            let mut classification =
                fsing::deform::classify_with_deformation(&input.ideal, &input.elements, budget)?;
            if let Some(i) = index {
                if i > classification.dim {
                    return Err(Error::Parse {
                        line: 0,
                        col: 0,
                        msg: format!("index {} exceeds dim = {}", i, classification.dim),
                    });
                }
                classification.per_index.retain(|r| r.i == i);
            }
            let out = report::ClassifyJson {
                schema: report::SCHEMA_VERSION,
                tool: "fsing classify",
                seed,
                input: report::input_echo(&file, &input),
                index,
                classification,
            };
            if json {
                print!("{}", to_json_string(&out));
            } else {
                print_classification(&out);
            }
        }
        Command::Deform { file, element, target, json, budget } => {
            let budget = budget.budget();
            let input = load_input(&file)?;
            let Some(x) = input.element(&element) else {
                return Err(Error::Parse {
                    line: 0,
                    col: 0,
                    msg: format!("element {:?} is not declared in {}", element, file),
                });
            };
            let Some(target_prop) = TargetProperty::parse(&target) else {
                return Err(Error::Parse {
                    line: 0,
                    col: 0,
                    msg: format!(
                        "unknown target {:?}; use f-full, f-injective, strongly-f-injective or anti-nilpotent",
                        target
                    ),
                });
            };
            let ctx = DeformationContext::new(&input.ideal, x, budget)?;
            let result = ctx.certify(target_prop)?;
            let out = report::DeformJson {
                schema: report::SCHEMA_VERSION,
                tool: "fsing deform",
                seed,
                input: report::input_echo(&file, &input),
                element,
                target: target_prop.label().to_string(),
                result,
            };
            if json {
                print!("{}", to_json_string(&out));
            } else {
                print_deform(&out);
            }
        }
        Command::Reproduce { fixture, slow, json, budget } => {
            let outcome = fixtures::reproduce(&fixture, slow, budget.budget())?;
            let out = report::ReproduceJson {
                schema: report::SCHEMA_VERSION,
                tool: "fsing reproduce",
                seed,
                fixture: outcome.fixture.clone(),
                assertions: outcome
                    .assertions
                    .iter()
                    .map(|a| report::AssertionJson {
                        name: a.name.clone(),
                        passed: a.passed,
                        detail: a.detail.clone(),
                    })
                    .collect(),
                all_passed: outcome.all_passed(),
            };
            if json {
                print!("{}", to_json_string(&out));
            } else {
                println!("fixture {}", out.fixture);
                for a in &out.assertions {
                    println!("  [{}] {} — {}", if a.passed { "pass" } else { "FAIL" }, a.name, a.detail);
                }
                println!("{}", if out.all_passed { "all assertions passed" } else { "FAILURES present" });
            }
            if !out.all_passed {
                std::process::exit(1);
            }
        }
        Command::OracleCheck { file, index, window, stage, json, budget } => {
            let budget = budget.budget();
            let (lo, hi) = parse_window(&window)?;
            let input = load_input(&file)?;
            let classifier = Classifier::new(&input.ideal, budget)?;
            let n = input.ring.n();
            // finite-length expectation at the index, verified first
            let next = &classifier.data.exts[n - index];
            if next.pres.finite_length(budget)?.is_none() {
                return Err(Error::PreconditionViolated(format!(
                    "H^{} is not finite length; the oracle's authority needs a finite-length window",
                    index
                )));
            }
            let theta = cartier_untwisted(&classifier.data, n - index, budget)?;
            let duality = materialize_h(&classifier.data, &theta, index, lo, hi, budget)?;
            let oracle = koszul_oracle(&input.ideal, index, stage, lo, hi, budget)?;
            let agreement = compare_windows(&duality, &oracle.dims, &oracle.frobenius, input.ring.p());
            let agrees = agreement.agrees();
            let out = report::OracleCheckJson {
                schema: report::SCHEMA_VERSION,
                tool: "fsing oracle-check",
                seed,
                input: report::input_echo(&file, &input),
                index,
                window: (lo, hi),
                stage,
                agreement,
                agrees,
            };
            if json {
                print!("{}", to_json_string(&out));
            } else {
                println!("oracle check at i = {} over [{}, {}] (stage {})", index, lo, hi, stage);
                for row in &out.agreement.detail {
                    println!(
                        "  d = {:>3}: dims {}/{}  F-rank {}/{}  zero {}/{}",
                        row.d,
                        row.dim_duality,
                        row.dim_koszul,
                        row.frobenius_rank_duality,
                        row.frobenius_rank_koszul,
                        row.frobenius_zero_duality,
                        row.frobenius_zero_koszul
                    );
                }
                println!("{}", if agrees { "exact agreement" } else { "MISMATCH" });
            }
            if !agrees {
                std::process::exit(1);
            }
        }
    }
    eprintln!("elapsed: {:?}", started.elapsed());
    Ok(())
}

fn print_classification(out: &report::ClassifyJson) {
    let c = &out.classification;
    println!("ring: F_{}[{} variables], ideal with {} generators", out.input.characteristic, out.input.vars.len(), out.input.ideal.len());
    println!("dim = {}   depth = {}   f_m = {}   CM = {}   gCM = {}",
        c.dim,
        c.depth,
        c.f_m.map_or("infinity".to_string(), |v| v.to_string()),
        c.is_cm,
        c.is_gcm
    );
    let fmt = |v: &fsing::classify::VerdictW| -> String {
        match &v.witness {
            Some(w) => format!("{:?} ({})", v.status, w),
            None => format!("{:?}", v.status),
        }
    };
    println!("F-pure:               {}", fmt(&c.f_pure));
    println!("F-injective:          {}", fmt(&c.f_injective));
    println!("F-full:               {}", fmt(&c.f_full));
    println!("strongly F-injective: {}", fmt(&c.strongly_f_injective));
    println!("F-anti-nilpotent:     {}", fmt(&c.f_anti_nilpotent));
    if let Some(cert) = &c.anti_nilpotent_certificate {
        for line in cert {
            println!("  certificate: {}", line);
        }
    }
    for r in &c.per_index {
        println!(
            "  i = {}: F-injective {}   F-full {}   F-nilpotent {}",
            r.i,
            fmt(&r.f_injective),
            fmt(&r.f_full),
            fmt(&r.f_nilpotent)
        );
    }
}

fn print_deform(out: &report::DeformJson) {
    println!("element {} , target {}", out.element, out.target);
    match &out.result {
        CertifyOutcome::Certified(cert) => {
            println!("CERTIFIED via chain:");
            for step in &cert.chain {
                println!("  [{}] {}", step.rule, step.statement);
                for p in &step.premises {
                    println!("      premise: {} [{:?}]", p.description, p.status);
                }
            }
        }
        CertifyOutcome::Unprovable { blocked, .. } => {
            println!("UNPROVABLE; blocking premises:");
            for p in blocked {
                println!("  {} [{:?}]", p.description, p.status);
            }
        }
    }
}

fn main() {
    match run() {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {}", e);
            std::process::exit(exit_code(&e));
        }
    }
}
