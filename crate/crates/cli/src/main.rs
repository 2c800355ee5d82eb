use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use fincat::cover::{self, InvariantResult, InvariantValue};
use fincat::harness::{self, SuiteConfig};
use fincat::homotopy::is_homotopic;
use fincat::poset::Product;
use fincat::whitehead::{liftcat_wg, WgResult, WgStats, WgWitnessJson};
use fincat::{catalog, ContinuousMap, FiniteSpace, MapJson, Settings, Space, SpaceJson};

/// Exact category invariants of finite T0 spaces.
#[derive(Parser)]
#[command(name = "fincat", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute an invariant with its certificate.
    Invariant {
        kind: Kind,
        #[command(flatten)]
        inputs: Inputs,
        /// Use the Whitehead (fat wedge) characterization.
        #[arg(long)]
        wg: bool,
        /// Distance only: lift `(f, g)` through the diagonal instead of
        /// searching covers directly.
        #[arg(long)]
        direct: bool,
        #[command(flatten)]
        opts: Opts,
    },
    /// Decide whether two maps are homotopic.
    Homotopic {
        #[command(flatten)]
        inputs: Inputs,
        #[command(flatten)]
        opts: Opts,
    },
    /// Run the property suite from a JSON configuration file.
    Suite {
        config: PathBuf,
        /// Also write the JSON report here.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the JSON report instead of the table.
        #[arg(long)]
        json: bool,
    },
    /// Print a space or map in the JSON exchange format.
    Show {
        #[command(flatten)]
        inputs: Inputs,
        /// Only the JSON, without the summary.
        #[arg(long)]
        json: bool,
    },
    /// List the built-in spaces and maps.
    Catalog,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Cat,
    Tc,
    Secat,
    Liftcat,
    Dist,
}

#[derive(Args)]
struct Inputs {
    /// A catalog name (`catalog:pseudocircle`) or a JSON space file.
    #[arg(long = "space")]
    spaces: Vec<String>,
    /// A catalog name (`catalog:pr1:diamond`) or a JSON map file.
    #[arg(long = "map")]
    maps: Vec<String>,
}

#[derive(Args)]
struct Opts {
    /// Basepoint-preserving maps and basepoint-stationary homotopies.
    #[arg(long)]
    pointed: bool,
    /// Cap on maps, open sets and set-cover nodes visited by each search.
    #[arg(long)]
    budget: Option<usize>,
    /// Omit certificates.
    #[arg(long)]
    quiet: bool,
    #[arg(long)]
    json: bool,
    /// Run single-threaded.
    #[arg(long)]
    sequential: bool,
}

impl Opts {
    fn settings(&self) -> Settings {
        let mut s = if self.sequential { Settings::sequential() } else { Settings::default() };
        if let Some(n) = self.budget {
            s.budget.max_maps = n;
            s.budget.max_opens = n;
            s.budget.max_cover_nodes = n;
        }
        s
    }
}

/// Computed values exit 0, budget exhaustion 2, bad input 1, failed suite
/// properties 3.
const EXIT_BUDGET: u8 = 2;
const EXIT_INPUT: u8 = 1;
const EXIT_SUITE_FAILED: u8 = 3;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let budget = e.downcast_ref::<fincat::Error>().is_some_and(fincat::Error::is_budget);
            eprintln!("error: {e:#}");
            ExitCode::from(if budget { EXIT_BUDGET } else { EXIT_INPUT })
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Invariant {
            kind,
            inputs,
            wg,
            direct,
            opts,
        } => invariant(kind, &inputs, wg, direct, &opts),
        Command::Homotopic { inputs, opts } => homotopic(&inputs, &opts),
        Command::Suite { config, out, json } => suite(&config, out.as_deref(), json),
        Command::Show { inputs, json } => show(&inputs, json),
        Command::Catalog => {
            println!("spaces (append @<point> for a basepoint):");
            for n in catalog::SPACE_NAMES {
                println!("  {n}");
            }
            println!("maps:");
            for n in ["id:<space>", "const:<space>:<point>", "pr1:<space>", "pr2:<space>", "diag:<space>", "incl-u1", "incl-u2"] {
                println!("  {n}");
            }
            Ok(0)
        }
    }
}

fn read(path: &str) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read `{path}`"))
}

/// Catalog names win unless a file of that name exists.
fn resolve_space(arg: &str) -> Result<Space> {
    if !arg.starts_with("catalog:") && Path::new(arg).is_file() {
        let json: SpaceJson = serde_json::from_str(&read(arg)?).with_context(|| format!("malformed space JSON in `{arg}`"))?;
        let built = FiniteSpace::from_json(&json)?;
        if built.quotient.is_some() {
            eprintln!("note: `{arg}` is not antisymmetric; equivalent points were identified");
        }
        return Ok(built.space);
    }
    catalog::space(arg).map_err(|e| anyhow!("`{arg}` is neither a catalog space nor a file: {e}"))
}

fn resolve_map(arg: &str) -> Result<ContinuousMap> {
    if !arg.starts_with("catalog:") && Path::new(arg).is_file() {
        let json: MapJson = serde_json::from_str(&read(arg)?).with_context(|| format!("malformed map JSON in `{arg}`"))?;
        return Ok(ContinuousMap::from_json(&json)?);
    }
    catalog::map(arg).map_err(|e| anyhow!("`{arg}` is neither a catalog map nor a file: {e}"))
}

fn one_space(inputs: &Inputs, what: &str) -> Result<Space> {
    match (inputs.spaces.as_slice(), inputs.maps.len()) {
        ([s], 0) => resolve_space(s),
        _ => bail!("{what} takes exactly one --space"),
    }
}

fn maps(inputs: &Inputs, n: usize, what: &str) -> Result<Vec<ContinuousMap>> {
    if inputs.maps.len() != n || !inputs.spaces.is_empty() {
        bail!("{what} takes exactly {n} --map argument{}", if n == 1 { "" } else { "s" });
    }
    inputs.maps.iter().map(|m| resolve_map(m)).collect()
}

fn invariant(kind: Kind, inputs: &Inputs, wg: bool, direct: bool, opts: &Opts) -> Result<u8> {
    let st = opts.settings();
    if wg && opts.pointed {
        bail!("--wg computes the free invariant only");
    }
    if direct && kind != Kind::Dist {
        bail!("--direct applies to dist only");
    }
    let label = match kind {
        Kind::Cat => "cat",
        Kind::Tc => "TC",
        Kind::Secat => "secat",
        Kind::Liftcat => "liftcat",
        Kind::Dist => "D",
    };
    if wg {
        let (f, iota) = match kind {
            Kind::Cat => {
                let f = cat_input(inputs)?;
                if !f.codomain().is_path_connected() {
                    return Err(fincat::Error::NotPathConnected.into());
                }
                let c = cover::base_inclusion(f.codomain(), false)?;
                (f, c)
            }
            Kind::Tc => {
                let y = one_space(inputs, "tc")?;
                let p = Product::new(&y, &y)?;
                let id = ContinuousMap::identity(&y);
                (ContinuousMap::identity(&p.space), id.whisker_into(&id, &p)?)
            }
            Kind::Secat => {
                let iota = maps(inputs, 1, "secat")?.remove(0);
                (ContinuousMap::identity(iota.codomain()), iota)
            }
            Kind::Liftcat => {
                let mut m = maps(inputs, 2, "liftcat")?;
                let iota = m.pop().unwrap();
                (m.pop().unwrap(), iota)
            }
            Kind::Dist => bail!("--wg does not apply to dist"),
        };
        let r = liftcat_wg(&f, &iota, &st)?;
        return report_wg(label, &r, &f, &iota, opts);
    }
    let r = match kind {
        Kind::Cat => cover::ls_category(&cat_input(inputs)?, opts.pointed, &st)?,
        Kind::Tc => cover::topological_complexity(&one_space(inputs, "tc")?, opts.pointed, &st)?,
        Kind::Secat => cover::secat_op(&maps(inputs, 1, "secat")?[0], opts.pointed, &st)?,
        Kind::Liftcat => {
            let m = maps(inputs, 2, "liftcat")?;
            cover::liftcat_op(&m[0], &m[1], opts.pointed, &st)?
        }
        Kind::Dist => {
            let m = maps(inputs, 2, "dist")?;
            if direct {
                cover::homotopic_distance_direct(&m[0], &m[1], opts.pointed, &st)?
            } else {
                cover::homotopic_distance(&m[0], &m[1], opts.pointed, &st)?
            }
        }
    };
    report(label, &r, opts)
}

/// `cat` of a space (its identity) or of a map.
fn cat_input(inputs: &Inputs) -> Result<ContinuousMap> {
    match (inputs.spaces.as_slice(), inputs.maps.as_slice()) {
        ([s], []) => Ok(ContinuousMap::identity(&resolve_space(s)?)),
        ([], [m]) => resolve_map(m),
        _ => bail!("cat takes one --space or one --map"),
    }
}

fn exit_for(v: InvariantValue) -> u8 {
    if v.is_budget() {
        EXIT_BUDGET
    } else {
        0
    }
}

fn report(label: &str, r: &InvariantResult, opts: &Opts) -> Result<u8> {
    if opts.json {
        let mut j = r.to_json();
        if opts.quiet {
            j.certificate = None;
        }
        println!("{}", serde_json::to_string_pretty(&j)?);
        return Ok(exit_for(r.value));
    }
    println!("{label} = {}", r.value);
    if let InvariantValue::BudgetExceeded { kind, cap } = r.value {
        println!("{kind} budget {cap} exhausted before the value was settled");
    }
    if opts.quiet {
        return Ok(exit_for(r.value));
    }
    if let Some(cover) = &r.certificate {
        let x = cover.target();
        println!("cover ({} parts):", cover.parts.len());
        for (i, p) in cover.parts.iter().enumerate() {
            println!("  U{i} = {{{}}}", x.set_names(&p.members).join(", "));
            if let Some(l) = &p.lift {
                println!("    lift {}", table(l));
            }
            println!("    fence of {} maps", p.fence.len());
            for step in p.fence.steps() {
                println!("      {}", table(step));
            }
        }
    } else if let Some(pt) = &r.exhaustion.uncoverable {
        println!("no admissible open contains {pt}");
    }
    let e = &r.exhaustion;
    println!(
        "search: {} maximal admissible opens, {} opens evaluated, {} maps visited, {} cover nodes",
        e.maximal_opens, e.opens_evaluated, e.maps_visited, e.cover_nodes
    );
    Ok(exit_for(r.value))
}

fn table(f: &ContinuousMap) -> String {
    let t: Vec<String> = f.table().into_iter().map(|(k, v)| format!("{k}->{v}")).collect();
    t.join(" ")
}

#[derive(Serialize)]
struct WgReport {
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<WgWitnessJson>,
    stats: WgStats,
}

fn report_wg(label: &str, r: &WgResult, f: &ContinuousMap, iota: &ContinuousMap, opts: &Opts) -> Result<u8> {
    let witness = if opts.quiet { None } else { r.witness.as_ref().map(|w| w.to_json(f, iota)) };
    if opts.json {
        let j = WgReport {
            value: r.value.to_string(),
            witness,
            stats: r.stats,
        };
        println!("{}", serde_json::to_string_pretty(&j)?);
        return Ok(exit_for(r.value));
    }
    println!("{label}^WG = {}", r.value);
    if let Some(w) = witness {
        println!(
            "witness: {} maps into {}, preimages of {{{}}} cover the domain",
            w.maps.len(),
            if w.cylinder { "the mapping cylinder" } else { "the codomain" },
            w.closed_part.join(", ")
        );
        for (l, fence) in w.maps.iter().zip(&w.fences) {
            let t: Vec<String> = l.iter().map(|(k, v)| format!("{k}->{v}")).collect();
            println!("  {}  (fence of {} maps)", t.join(" "), fence.len());
        }
    }
    println!(
        "search: class of {} maps, {} distinct preimages, {} cover nodes",
        r.stats.class_size, r.stats.distinct_preimages, r.stats.cover_nodes
    );
    Ok(exit_for(r.value))
}

fn homotopic(inputs: &Inputs, opts: &Opts) -> Result<u8> {
    let m = maps(inputs, 2, "homotopic")?;
    let v = is_homotopic(&m[0], &m[1], opts.pointed, &opts.settings())?;
    let fence = if opts.quiet { None } else { v.certificate.as_ref().map(|f| f.to_json()) };
    if opts.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&serde_json::json!({ "homotopic": v.homotopic, "fence": fence }))?
        );
        return Ok(0);
    }
    println!("{}", if v.homotopic { "homotopic" } else { "not homotopic" });
    if let (Some(f), Some(fj)) = (&v.certificate, fence) {
        println!("fence of {} maps", fj.steps.len());
        for step in f.steps() {
            println!("  {}", table(step));
        }
    }
    Ok(0)
}

fn suite(path: &Path, out: Option<&Path>, json: bool) -> Result<u8> {
    let text = std::fs::read_to_string(path).with_context(|| format!("cannot read `{}`", path.display()))?;
    let cfg = SuiteConfig::from_json(&text).with_context(|| format!("bad suite configuration `{}`", path.display()))?;
    let report = harness::run_suite(&cfg)?;
    let encoded = serde_json::to_string_pretty(&report)?;
    if let Some(out) = out {
        std::fs::write(out, &encoded).with_context(|| format!("cannot write `{}`", out.display()))?;
    }
    if json {
        println!("{encoded}");
    } else {
        print!("{}", report.table());
    }
    Ok(if report.ok() { 0 } else { EXIT_SUITE_FAILED })
}

fn show(inputs: &Inputs, json: bool) -> Result<u8> {
    match (inputs.spaces.as_slice(), inputs.maps.as_slice()) {
        ([s], []) => {
            let x = resolve_space(s)?;
            if !json {
                let (normal, _) = x.is_normal();
                let core = fincat::poset::CoreReduction::compute(&x, None);
                println!(
                    "{} points, {} path components, {}normal, core of {} points",
                    x.len(),
                    x.components().len(),
                    if normal { "" } else { "not " },
                    core.core.len()
                );
            }
            println!("{}", serde_json::to_string_pretty(&x.to_json())?);
        }
        ([], [m]) => {
            let f = resolve_map(m)?;
            if !json {
                println!("{} -> {} points, {}", f.domain().len(), f.codomain().len(), table(&f));
            }
            println!("{}", serde_json::to_string_pretty(&f.to_json())?);
        }
        _ => bail!("show takes one --space or one --map"),
    }
    Ok(0)
}
