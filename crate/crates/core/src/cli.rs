//! Command-line front end.
//!
//! Exit codes: 0 on success with all checked properties holding, 1 when a
//! verification target finds a violated property, 2 on usage or input
//! errors. Reports go to standard output, diagnostics to standard error.
//! All randomness flows from `--seed`.

use crate::element::FreeElement;
use crate::enumeration::{count_submodules, enumerate_monomial_submodules};
use crate::field::{PrimeField, DEFAULT_CHARACTERISTIC};
use crate::grading::Grading;
use crate::groebner::GroebnerConfig;
use crate::order::MonomialOrder;
use crate::parity::{
    cancellation_table, check_duality, check_hom_ij_graded, check_hom_ij_monomial,
    check_parity_graded, check_parity_monomial, semicontinuity_check, spectrum,
};
use crate::random::{random_graded_submodule, RandomRecipe};
use crate::report::{self, Format, VerifyJson};
use crate::submodule::{GradedSubmodule, MonomialSubmodule, QuotientModule};
use crate::text::{parse_generators, parse_grading_spec, parse_submodule_file, print_monomial};
use crate::{Error, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;
use std::time::Instant;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Format {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "quotlab", version, about = "Tangent spaces to Hilbert and Quot schemes of points, with verification sweeps")]
struct Cli {
    /// Field characteristic (prime, < 2^31).
    #[arg(long = "char", global = true, env = "QUOTLAB_CHAR", default_value_t = DEFAULT_CHARACTERISTIC)]
    characteristic: u64,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Text)]
    format: FormatArg,
    /// Worker threads for fan-out subcommands (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Budget on Gröbner/reduction steps.
    #[arg(long, global = true, default_value_t = 4_000_000)]
    max_steps: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Args)]
struct InputArgs {
    /// Ambient variable count.
    #[arg(long)]
    vars: Option<usize>,
    /// Free module rank.
    #[arg(long, default_value_t = 1)]
    rank: usize,
    /// Inline generators, comma separated, in `x1^2*x3*e2` syntax.
    #[arg(long)]
    gens: Option<String>,
    /// Generator file with `vars:`/`rank:`/`grading:` headers.
    #[arg(long)]
    file: Option<String>,
    /// `standard`, `weights 4 5 6`, or `weights 1,0,0; 0,1,1`.
    #[arg(long, default_value = "standard")]
    grading: String,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// List all monomial submodules of the given colength.
    Enumerate {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        points: u64,
        #[arg(long, default_value_t = 1)]
        rank: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// Count monomial submodules via the generating-function oracles.
    Count {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        points: u64,
        #[arg(long, default_value_t = 1)]
        rank: usize,
    },
    /// Tangent-space dimension hom(K, F/K) at one point.
    Tangent {
        #[command(flatten)]
        input: InputArgs,
    },
    /// Graded Ext dimension table of (F/K, F/L).
    ExtTable {
        #[command(flatten)]
        input: InputArgs,
        /// Second submodule; defaults to the first.
        #[arg(long)]
        gens2: Option<String>,
    },
    /// Tangent dimension spectrum over all monomial points of fixed (n, r, d).
    Spectrum {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        points: u64,
        #[arg(long, default_value_t = 1)]
        rank: usize,
    },
    /// Verification sweeps; exit 1 when a checked property fails.
    Verify {
        #[command(subcommand)]
        target: VerifyCmd,
    },
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long, default_value_t = 3)]
    vars: usize,
    #[arg(long, default_value_t = 1)]
    rank: usize,
    /// Colength bound for the monomial sweep / random inputs.
    #[arg(long, default_value_t = 6)]
    points: u64,
    #[arg(long, default_value_t = 0)]
    trials: u64,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value = "standard")]
    grading: String,
}

#[derive(Debug, Subcommand)]
enum VerifyCmd {
    /// hom(K, M) == rd (mod 2): monomial sweep plus seeded graded trials.
    Parity {
        #[command(flatten)]
        sweep: SweepArgs,
        /// Deliberately corrupt computed dimensions (self-test of the harness).
        #[arg(long, hide = true)]
        inject_parity_bug: bool,
    },
    /// Graded Ext duality on seeded random pairs.
    Duality {
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// Consecutive-cancellation ledger on seeded random graded ideals.
    Cancellation {
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// hom(I, S/J) + hom(J, S/I) congruence in three variables.
    Homij {
        #[command(flatten)]
        sweep: SweepArgs,
    },
    /// hom(K, M) <= hom(K', M') with even gap over three variables.
    Semicontinuity {
        #[command(flatten)]
        sweep: SweepArgs,
    },
}

pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            let _ = e.print();
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(cli.jobs.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            eprintln!("quotlab: {e}");
            return 2;
        }
    };
    match pool.install(|| dispatch(&cli)) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("quotlab: {e}");
            2
        }
    }
}

struct ParsedInput {
    grading: Grading,
    generators: Vec<FreeElement>,
}

fn parse_input(input: &InputArgs, field: &PrimeField) -> Result<ParsedInput> {
    let order = MonomialOrder::grevlex_top();
    if let Some(path) = &input.file {
        let content = std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("cannot read {path}: {e}")))?;
        let f = parse_submodule_file(&content, field, &order)?;
        return Ok(ParsedInput { grading: f.grading, generators: f.generators });
    }
    let vars = input
        .vars
        .ok_or_else(|| Error::InvalidInput("--vars is required with --gens".into()))?;
    let gens = input
        .gens
        .as_ref()
        .ok_or_else(|| Error::InvalidInput("provide --gens or --file".into()))?;
    let grading = parse_grading_spec(&input.grading, vars, input.rank)?;
    let generators = parse_generators(gens, vars, input.rank, field, &order)?;
    Ok(ParsedInput { grading, generators })
}

fn as_monomial_submodule(p: &ParsedInput) -> Option<MonomialSubmodule> {
    let mut gens = Vec::new();
    for g in &p.generators {
        let t = match g.terms() {
            [t] if t.coeff == 1 => t,
            _ => return None,
        };
        gens.push((t.monomial.clone(), t.component));
    }
    MonomialSubmodule::new(p.grading.nvars(), p.grading.rank(), gens).ok()
}

fn build_graded(p: &ParsedInput, field: &PrimeField, cfg: &GroebnerConfig) -> Result<GradedSubmodule> {
    let order = MonomialOrder::degree_refined(&p.grading);
    GradedSubmodule::new(p.grading.clone(), p.generators.clone(), order, field, cfg)
}

fn dispatch(cli: &Cli) -> Result<bool> {
    let field = PrimeField::new(cli.characteristic)?;
    let cfg = GroebnerConfig { max_steps: cli.max_steps };
    let format: Format = cli.format.into();
    let start = Instant::now();
    match &cli.cmd {
        Cmd::Enumerate { vars, points, rank, count_only } => {
            let stream = enumerate_monomial_submodules(*vars, *rank, *points);
            let elapsed = start.elapsed().as_millis() as u64;
            if *count_only {
                match format {
                    Format::Json => println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "params": {"vars": vars, "rank": rank, "points": points},
                            "count": stream.len(),
                            "elapsed_ms": elapsed,
                        }))
                        .unwrap()
                    ),
                    _ => println!("{}", stream.len()),
                }
                return Ok(true);
            }
            match format {
                Format::Json => {
                    let records: Vec<serde_json::Value> = stream
                        .items()
                        .iter()
                        .map(|k| {
                            let comps: Vec<Vec<Vec<u32>>> = k.staircase_key().unwrap();
                            json!({ "staircase": comps })
                        })
                        .collect();
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&json!({
                            "params": {"vars": vars, "rank": rank, "points": points},
                            "count": records.len(),
                            "records": records,
                            "elapsed_ms": elapsed,
                        }))
                        .unwrap()
                    );
                }
                Format::Csv => {
                    println!("record,component,generator");
                    for (i, k) in stream.items().iter().enumerate() {
                        for c in 0..k.rank() {
                            for m in k.component(c) {
                                println!("{},{},{}", i, c + 1, print_monomial(m));
                            }
                        }
                    }
                }
                Format::Text => {
                    for k in stream.items() {
                        let parts: Vec<String> = (0..k.rank())
                            .map(|c| {
                                let gens: Vec<String> =
                                    k.component(c).iter().map(print_monomial).collect();
                                format!("e{}: ({})", c + 1, gens.join(", "))
                            })
                            .collect();
                        println!("{}", parts.join("  "));
                    }
                }
            }
            Ok(true)
        }
        Cmd::Count { vars, points, rank } => {
            let count = count_submodules(*vars, *rank, *points)?;
            match format {
                Format::Json => println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "params": {"vars": vars, "rank": rank, "points": points},
                        "count": count,
                    }))
                    .unwrap()
                ),
                _ => println!("{count}"),
            }
            Ok(true)
        }
        Cmd::Tangent { input } => {
            let parsed = parse_input(input, &field)?;
            let rep = match as_monomial_submodule(&parsed) {
                Some(k) => check_parity_monomial(&k)?,
                None => {
                    let k = build_graded(&parsed, &field, &cfg)?;
                    check_parity_graded(&k, &field, &cfg)?
                }
            };
            let elapsed = start.elapsed().as_millis() as u64;
            print!("{}", report::tangent_output(&rep, field.characteristic(), elapsed, format));
            Ok(true)
        }
        Cmd::ExtTable { input, gens2 } => {
            let parsed = parse_input(input, &field)?;
            let k1 = build_graded(&parsed, &field, &cfg)?;
            let m = QuotientModule::from_graded(&k1, &field, &cfg)?;
            let n_mod = match gens2 {
                None => m.clone(),
                Some(g2) => {
                    let parsed2 = ParsedInput {
                        grading: parsed.grading.clone(),
                        generators: parse_generators(
                            g2,
                            parsed.grading.nvars(),
                            parsed.grading.rank(),
                            &field,
                            &MonomialOrder::grevlex_top(),
                        )?,
                    };
                    let k2 = build_graded(&parsed2, &field, &cfg)?;
                    QuotientModule::from_graded(&k2, &field, &cfg)?
                }
            };
            let table = crate::ext::ext_table(&m, &n_mod, &cfg)?;
            let elapsed = start.elapsed().as_millis() as u64;
            print!("{}", report::ext_table_output(&table, field.characteristic(), elapsed, format));
            Ok(true)
        }
        Cmd::Spectrum { vars, points, rank } => {
            let s = spectrum(*vars, *rank, *points)?;
            let elapsed = start.elapsed().as_millis() as u64;
            print!("{}", report::spectrum_output(&s, field.characteristic(), elapsed, format));
            Ok(true)
        }
        Cmd::Verify { target } => run_verify(target, &field, &cfg, format, start),
    }
}

fn run_verify(
    target: &VerifyCmd,
    field: &PrimeField,
    cfg: &GroebnerConfig,
    format: Format,
    start: Instant,
) -> Result<bool> {
    let (sweep, label) = match target {
        VerifyCmd::Parity { sweep, .. } => (sweep, "parity"),
        VerifyCmd::Duality { sweep } => (sweep, "duality"),
        VerifyCmd::Cancellation { sweep } => (sweep, "cancellation"),
        VerifyCmd::Homij { sweep } => (sweep, "homij"),
        VerifyCmd::Semicontinuity { sweep } => (sweep, "semicontinuity"),
    };
    let grading = parse_grading_spec(&sweep.grading, sweep.vars, sweep.rank)?;
    let mut trials = 0u64;
    let mut failures = 0u64;
    let mut extra = serde_json::Map::new();
    match target {
        VerifyCmd::Parity { sweep, inject_parity_bug } => {
            let corrupt = |d: u64| if *inject_parity_bug { d + 1 } else { d };
            let mut mismatches = 0u64;
            for d in 0..=sweep.points {
                for k in enumerate_monomial_submodules(sweep.vars, sweep.rank, d).items() {
                    let rep = check_parity_monomial(k)?;
                    trials += 1;
                    let dim = corrupt(rep.dim);
                    if dim % 2 != rep.expected_parity {
                        mismatches += 1;
                    }
                }
            }
            let recipe = RandomRecipe::for_target(sweep.vars, sweep.rank, sweep.points);
            for t in 0..sweep.trials {
                let k = random_graded_submodule(
                    sweep.seed.wrapping_add(t),
                    &grading,
                    field,
                    cfg,
                    &recipe,
                )?;
                let rep = check_parity_graded(&k, field, cfg)?;
                trials += 1;
                let dim = corrupt(rep.dim);
                if dim % 2 != rep.expected_parity {
                    mismatches += 1;
                }
            }
            extra.insert("parity_mismatches".into(), json!(mismatches));
            // the parity theorem covers three variables; elsewhere mismatches
            // are data, not failures
            if sweep.vars == 3 {
                failures = mismatches;
            }
        }
        VerifyCmd::Duality { sweep } => {
            let recipe = RandomRecipe::for_target(sweep.vars, 1, sweep.points);
            let pair_grading = parse_grading_spec(&sweep.grading, sweep.vars, 1)?;
            for t in 0..sweep.trials.max(1) {
                let a = random_graded_submodule(
                    sweep.seed.wrapping_add(2 * t),
                    &pair_grading,
                    field,
                    cfg,
                    &recipe,
                )?;
                let b = random_graded_submodule(
                    sweep.seed.wrapping_add(2 * t + 1),
                    &pair_grading,
                    field,
                    cfg,
                    &recipe,
                )?;
                let ma = QuotientModule::from_graded(&a, field, cfg)?;
                let mb = QuotientModule::from_graded(&b, field, cfg)?;
                let rep = check_duality(&ma, &mb, cfg)?;
                trials += 1;
                if !rep.ok {
                    failures += 1;
                }
                let euler = crate::ext::euler_characteristic(&ma, &mb, cfg)?;
                if euler != 0 {
                    failures += 1;
                }
            }
        }
        VerifyCmd::Cancellation { sweep } => {
            let recipe = RandomRecipe::for_target(sweep.vars, sweep.rank, sweep.points);
            let sigma = grading.socle_shift();
            let odd_sigma = sigma.iter().any(|x| x % 2 != 0);
            for t in 0..sweep.trials.max(1) {
                let k = random_graded_submodule(sweep.seed.wrapping_add(t), &grading, field, cfg, &recipe)?;
                let table = cancellation_table(&k, field, cfg)?;
                trials += 1;
                let mut ok = table.nonnegative && table.boundary_ok && table.reconstructs_tables();
                if sweep.vars == 3 && odd_sigma {
                    ok = ok && table.symmetric_under(&sigma);
                    let semi = semicontinuity_check(&k, field, cfg)?;
                    ok = ok && semi.gap_even && semi.gap == semi.delta1_sum;
                }
                if !ok {
                    failures += 1;
                }
            }
        }
        VerifyCmd::Homij { sweep } => {
            if sweep.vars != 3 {
                return Err(Error::InvalidInput("the Hom congruence holds over three variables".into()));
            }
            // monomial sweep over all pairs with colengths up to the bound
            let ideals: Vec<MonomialSubmodule> = (0..=sweep.points)
                .flat_map(|d| {
                    enumerate_monomial_submodules(3, 1, d)
                        .items()
                        .to_vec()
                })
                .collect();
            for i in &ideals {
                for j in &ideals {
                    let rep = check_hom_ij_monomial(i, j)?;
                    trials += 1;
                    if !rep.congruent {
                        failures += 1;
                    }
                }
            }
            let recipe = RandomRecipe::for_target(3, 1, sweep.points);
            let pair_grading = parse_grading_spec(&sweep.grading, 3, 1)?;
            for t in 0..sweep.trials {
                let a = random_graded_submodule(sweep.seed.wrapping_add(2 * t), &pair_grading, field, cfg, &recipe)?;
                let b = random_graded_submodule(sweep.seed.wrapping_add(2 * t + 1), &pair_grading, field, cfg, &recipe)?;
                let rep = check_hom_ij_graded(&a, &b, field, cfg)?;
                trials += 1;
                if !rep.congruent {
                    failures += 1;
                }
            }
        }
        VerifyCmd::Semicontinuity { sweep } => {
            let recipe = RandomRecipe::for_target(sweep.vars, sweep.rank, sweep.points);
            for t in 0..sweep.trials.max(1) {
                let k = random_graded_submodule(sweep.seed.wrapping_add(t), &grading, field, cfg, &recipe)?;
                let semi = semicontinuity_check(&k, field, cfg)?;
                trials += 1;
                let mut ok = semi.gap >= 0 && semi.gap == semi.delta1_sum;
                if sweep.vars == 3 {
                    ok = ok && semi.gap_even;
                }
                if !ok {
                    failures += 1;
                }
            }
        }
    }
    let elapsed = start.elapsed().as_millis() as u64;
    let mut params = serde_json::Map::new();
    params.insert("target".into(), json!(label));
    params.insert("vars".into(), json!(sweep.vars));
    params.insert("rank".into(), json!(sweep.rank));
    params.insert("points".into(), json!(sweep.points));
    params.insert("seed".into(), json!(sweep.seed));
    params.insert("grading".into(), json!(sweep.grading));
    params.insert("characteristic".into(), json!(field.characteristic()));
    for (k, v) in extra {
        params.insert(k, v);
    }
    let body = VerifyJson {
        params: serde_json::Value::Object(params),
        trials,
        failures,
        ok: failures == 0,
        elapsed_ms: elapsed,
    };
    print!("{}", report::verify_output(&body, format));
    Ok(failures == 0)
}
