mod cache;
mod json;
mod plan;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use hdcoh::dirac::{self, ParabolicBlock};
use hdcoh::verify::{run_system, VerificationReport};
use hdcoh::weylgroup::DEFAULT_SIZE_CAP;
use hdcoh::{CartanType, CoxeterSystem, Elem, GenSet, KlEngine, ParabolicType, RootSystem, Weight};
use serde_json::{json, Map, Value};

/// Kazhdan–Lusztig combinatorics and Dirac cohomology of simple modules in
/// parabolic category O.
///
/// Simple roots are numbered from 1 in Bourbaki order. Weights are comma
/// separated rationals such as `0,-1/2,3` in fundamental-weight coordinates
/// (or simple-root coordinates with `--basis root`). Elements are words
/// such as `s2*s1*s3` or `e`.
#[derive(Parser, Debug)]
#[command(name = "hdcoh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Cartan type, e.g. `A3`, `B2`, `A1xA1`.
    #[arg(long = "type", global = true, value_name = "TYPE")]
    cartan: Option<String>,

    /// Parabolic subset I as 1-based indices, e.g. `1,3`; empty for I = ∅.
    #[arg(long, global = true, default_value = "", value_name = "INDICES")]
    parabolic: String,

    /// Weight λ.
    #[arg(long, global = true, allow_hyphen_values = true, value_name = "WEIGHT")]
    weight: Option<String>,

    /// Coordinates used for `--weight`.
    #[arg(long, global = true, value_enum, default_value_t = Basis::Fundamental)]
    basis: Basis,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Persistent KL cache file for `kl` and `pkl`.
    #[arg(long, global = true, value_name = "PATH")]
    cache: Option<PathBuf>,

    /// Refuse Weyl groups larger than this.
    #[arg(long, global = true, default_value_t = DEFAULT_SIZE_CAP)]
    size_cap: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Basis {
    Fundamental,
    Root,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Module {
    Verma,
    Parabolic,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Root system summary, with parabolic data when `--parabolic` is set.
    Roots,
    /// Kazhdan–Lusztig polynomial P_{x,w}.
    Kl {
        x: String,
        w: String,
        /// Write the Bruhat interval [x, w] as a DOT graph.
        #[arg(long, value_name = "PATH")]
        emit_dot: Option<PathBuf>,
    },
    /// Deodhar parabolic polynomial P^{J,y}_{u,v}.
    Pkl {
        #[arg(long = "J", default_value = "", value_name = "INDICES")]
        j: String,
        #[arg(long, default_value = "q", value_name = "q|neg1")]
        y: String,
        u: String,
        v: String,
    },
    /// Relative KLV polynomial of the block of `--weight`; elements are
    /// words in the simple reflections of the integral Weyl group.
    Klv {
        x: String,
        w: String,
        /// Use the regular-weight form on all of ^I W_[λ].
        #[arg(long)]
        regular: bool,
    },
    /// Dirac cohomology of L(λ).
    Hd,
    /// Dirac cohomology of the parabolic Verma module M_I(λ).
    HdVerma,
    /// The weight set parameterizing H_D(L(λ)).
    Wset,
    /// All parameterizing sets with inclusion flags.
    Params,
    /// Whether L(λ) is a Kostant module.
    Kostant,
    /// Simplicity criteria for Verma or parabolic Verma modules.
    Simple {
        #[arg(long, value_enum)]
        module: Module,
    },
    /// Exhaustive verification sweep.
    Verify {
        /// Comma-separated Cartan types with default settings, or a JSON plan file.
        #[arg(long, value_name = "PLAN")]
        plan: String,
        /// Systems verified in parallel.
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Include per-check wall-clock totals (breaks byte-identical output).
        #[arg(long)]
        timings: bool,
    },
}

struct Outcome {
    text: String,
    code: u8,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0 }
    }
}

struct Ctx {
    cartan: CartanType,
    rs: RootSystem,
    set: GenSet,
}

impl Cli {
    fn ctx(&self) -> Result<Ctx> {
        let text = self.cartan.as_deref().context("--type is required")?;
        let cartan: CartanType = text.parse().with_context(|| format!("in --type {text:?}"))?;
        let rs = RootSystem::new(&cartan)?;
        let set: GenSet = self.parabolic.parse().with_context(|| format!("in --parabolic {:?}", self.parabolic))?;
        if let Some(i) = set.max_index().filter(|&i| i >= rs.rank()) {
            return Err(hdcoh::Error::InvalidGenerator(i)).context("in --parabolic");
        }
        Ok(Ctx { cartan, rs, set })
    }

    fn lambda(&self, ctx: &Ctx) -> Result<Weight> {
        let text = self.weight.as_deref().context("--weight is required")?;
        let w: Weight = text.parse().with_context(|| format!("in --weight {text:?}"))?;
        ctx.rs.check_dim(&w)?;
        Ok(match self.basis {
            Basis::Fundamental => w,
            Basis::Root => ctx.rs.root_coords_to_weight(w.coords()),
        })
    }

    fn group(&self, ctx: &Ctx) -> Result<Arc<CoxeterSystem>> {
        Ok(Arc::new(CoxeterSystem::with_cap(ctx.cartan.cartan_matrix(), self.size_cap)?))
    }
}

fn render(format: Format, body: Map<String, Value>, table: impl FnOnce() -> String) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&json::with_schema(body)).expect("serializable");
            s.push('\n');
            s
        }
        Format::Table => table(),
    }
}

fn obj(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("object literal"),
    }
}

fn weight_list<'a>(ws: impl IntoIterator<Item = &'a Weight>) -> String {
    ws.into_iter().map(|w| format!("({w})")).collect::<Vec<_>>().join(" ")
}

fn run(cli: &Cli) -> Result<Outcome> {
    let fmt = cli.format;
    match &cli.command {
        Command::Roots => {
            let ctx = cli.ctx()?;
            let g = cli.group(&ctx)?;
            let rs = &ctx.rs;
            let pd = rs.parabolic_data(ctx.set);
            let body = obj(json!({
                "type": ctx.cartan.to_string(),
                "rank": rs.rank(),
                "cartan": rs.cartan(),
                "weyl_order": g.size(),
                "positive_roots": rs.positive_roots().iter().map(json::root).collect::<Vec<_>>(),
                "rho": json::weight(rs.rho()),
                "I": json::genset(ctx.set),
                "levi_positive_roots": pd.positive.iter().map(json::root).collect::<Vec<_>>(),
                "rho_l": json::weight(&pd.rho_l),
                "rho_u": json::weight(&pd.rho_u),
            }));
            Ok(Outcome::ok(render(fmt, body, || {
                let mut s = String::new();
                let _ = writeln!(s, "type: {}", ctx.cartan);
                let _ = writeln!(s, "rank: {}", rs.rank());
                let _ = writeln!(s, "|W|: {}", g.size());
                let roots: Vec<String> = rs.positive_roots().iter().map(|r| r.to_string()).collect();
                let _ = writeln!(s, "positive roots ({}): {}", roots.len(), roots.join(" "));
                let _ = writeln!(s, "rho: ({})", rs.rho());
                let _ = writeln!(s, "I: {{{}}}", ctx.set);
                let _ = writeln!(s, "rho_l: ({})  rho_u: ({})", pd.rho_l, pd.rho_u);
                s
            })))
        }
        Command::Kl { x, w, emit_dot } => {
            let ctx = cli.ctx()?;
            let g = cli.group(&ctx)?;
            let (xe, we) = (g.parse_elem(x).context("in x")?, g.parse_elem(w).context("in w")?);
            let eng = KlEngine::new(g.clone());
            if let Some(path) = &cli.cache {
                cache::load(path, &ctx.cartan, &eng);
            }
            let p = eng.kl(xe, we)?;
            let mu = if g.bruhat_leq(xe, we) && xe != we { eng.mu(xe, we)? } else { 0 };
            if let Some(path) = &cli.cache {
                cache::store(path, &ctx.cartan, &eng)?;
            }
            if let Some(path) = emit_dot {
                std::fs::write(path, bruhat_dot(&g, xe, we)).with_context(|| format!("writing {}", path.display()))?;
            }
            let body = obj(json!({
                "type": ctx.cartan.to_string(),
                "x": g.render(xe),
                "w": g.render(we),
                "poly": json::poly(&p),
                "mu": mu,
            }));
            Ok(Outcome::ok(render(fmt, body, || format!("{p}\n"))))
        }
        Command::Pkl { j, y, u, v } => {
            let ctx = cli.ctx()?;
            let g = cli.group(&ctx)?;
            let jset: GenSet = j.parse().context("in --J")?;
            if let Some(i) = jset.max_index().filter(|&i| i >= g.rank()) {
                return Err(hdcoh::Error::InvalidGenerator(i)).context("in --J");
            }
            let ty: ParabolicType = y.parse().context("in --y")?;
            let (ue, ve) = (g.parse_elem(u).context("in u")?, g.parse_elem(v).context("in v")?);
            let eng = KlEngine::new(g.clone());
            if let Some(path) = &cli.cache {
                cache::load(path, &ctx.cartan, &eng);
            }
            let p = eng.parabolic_p(jset, ty, ue, ve)?;
            let r = eng.parabolic_r(jset, ty, ue, ve)?;
            if let Some(path) = &cli.cache {
                cache::store(path, &ctx.cartan, &eng)?;
            }
            let body = obj(json!({
                "type": ctx.cartan.to_string(),
                "J": json::genset(jset),
                "y": if ty == ParabolicType::Q { "q" } else { "neg1" },
                "u": g.render(ue),
                "v": g.render(ve),
                "poly": json::poly(&p),
                "r_poly": json::poly(&r),
            }));
            Ok(Outcome::ok(render(fmt, body, || format!("{p}\n"))))
        }
        Command::Klv { x, w, regular } => {
            let ctx = cli.ctx()?;
            let lam = cli.lambda(&ctx)?;
            let pb = ParabolicBlock::new(&ctx.rs, ctx.set, &lam)?;
            let g = pb.block().group();
            let (xe, we) = (g.parse_elem(x).context("in x")?, g.parse_elem(w).context("in w")?);
            let p = if *regular { pb.klv_regular(xe, we)? } else { pb.klv(xe, we)? };
            let body = obj(json!({
                "lambda": json::weight(&lam),
                "I": json::genset(ctx.set),
                "integral_simple_roots": pb.block().delta_int().iter().map(json::root).collect::<Vec<_>>(),
                "x": g.render(xe),
                "w": g.render(we),
                "poly": json::poly(&p),
            }));
            Ok(Outcome::ok(render(fmt, body, || format!("{p}\n"))))
        }
        Command::Hd | Command::HdVerma => {
            let ctx = cli.ctx()?;
            let lam = cli.lambda(&ctx)?;
            let hd = if matches!(cli.command, Command::Hd) {
                dirac::dirac_cohomology_simple(&ctx.rs, ctx.set, &lam)?
            } else {
                dirac::dirac_cohomology_parabolic_verma(&ctx.rs, ctx.set, &lam)?
            };
            let body = obj(json!({
                "lambda": json::weight(&lam),
                "I": json::genset(ctx.set),
                "entries": json::multiset(&hd),
            }));
            Ok(Outcome::ok(render(fmt, body, || {
                hd.iter().map(|(w, m)| format!("({w}) : {m}\n")).collect()
            })))
        }
        Command::Wset => {
            let ctx = cli.ctx()?;
            let lam = cli.lambda(&ctx)?;
            let ws = dirac::w_set(&ctx.rs, ctx.set, &lam)?;
            let body = obj(json!({
                "lambda": json::weight(&lam),
                "I": json::genset(ctx.set),
                "w_set": json::weights(&ws),
            }));
            Ok(Outcome::ok(render(fmt, body, || format!("{}\n", weight_list(&ws)))))
        }
        Command::Params => {
            let ctx = cli.ctx()?;
            let lam = cli.lambda(&ctx)?;
            let p = ParabolicBlock::new(&ctx.rs, ctx.set, &lam)?.params()?;
            let mut body = obj(json::params(&p));
            body.insert("lambda".into(), json::weight(&lam));
            body.insert("I".into(), json::genset(ctx.set));
            Ok(Outcome::ok(render(fmt, body, || {
                let mut s = String::new();
                for (name, set) in [
                    ("w_set", &p.w_set),
                    ("hull_set", &p.hull_set),
                    ("linkage_set", &p.linkage_set),
                    ("mult_set", &p.mult_set),
                    ("embed_set", &p.embed_set),
                ] {
                    let _ = writeln!(s, "{name}: {}", weight_list(set));
                }
                let _ = writeln!(s, "chain: {}", p.chain_holds());
                let _ = writeln!(s, "geometric_equal: {}", p.geometric_equal());
                let _ = writeln!(s, "algebraic_equal: {}", p.algebraic_equal());
                s
            })))
        }
        Command::Kostant => {
            let ctx = cli.ctx()?;
            let lam = cli.lambda(&ctx)?;
            let pb = ParabolicBlock::new(&ctx.rs, ctx.set, &lam)?;
            let k = pb.is_kostant()?;
            let wbar = pb.block().group().render(pb.wbar());
            let body = obj(json!({
                "lambda": json::weight(&lam),
                "I": json::genset(ctx.set),
                "kostant": k,
                "wbar": wbar,
            }));
            Ok(Outcome::ok(render(fmt, body, || format!("kostant: {k}\nwbar: {wbar}\n"))))
        }
        Command::Simple { module } => {
            let ctx = cli.ctx()?;
            let lam = cli.lambda(&ctx)?;
            let (v, sides) = match module {
                Module::Verma => (dirac::verma_is_simple(&ctx.rs, &lam)?, ["antidominant", "linkage_singleton"]),
                Module::Parabolic => {
                    (dirac::parabolic_verma_is_simple(&ctx.rs, ctx.set, &lam)?, ["wbar_is_identity", "psi_plus_empty"])
                }
            };
            let mut body = obj(json!({
                "lambda": json::weight(&lam),
                "I": json::genset(ctx.set),
                "module": if *module == Module::Verma { "verma" } else { "parabolic" },
                "simple": v.simple,
            }));
            body.insert(sides[0].into(), json!(v.twist_side));
            body.insert(sides[1].into(), json!(v.criterion_side));
            Ok(Outcome::ok(render(fmt, body, || {
                format!("simple: {}\n{}: {}\n{}: {}\n", v.simple, sides[0], v.twist_side, sides[1], v.criterion_side)
            })))
        }
        Command::Verify { plan, workers, timings } => {
            let plan = plan::load(plan)?;
            let report = sweep(&plan, (*workers).max(1), *timings);
            let text = match fmt {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&json::report(&report, *timings))?;
                    s.push('\n');
                    s
                }
                Format::Table => report_table(&report, *timings),
            };
            Ok(Outcome { text, code: if report.passed() { 0 } else { 2 } })
        }
    }
}

fn sweep(plan: &hdcoh::verify::SweepPlan, workers: usize, timings: bool) -> VerificationReport {
    let start = Instant::now();
    let clock = move || start.elapsed().as_nanos() as u64;
    let clock_ref: Option<&dyn Fn() -> u64> = if timings { Some(&clock) } else { None };
    let systems = &plan.systems;
    let mut parts: Vec<Option<VerificationReport>> = vec![None; systems.len()];
    if workers <= 1 {
        for (slot, sp) in parts.iter_mut().zip(systems) {
            *slot = Some(run_system(sp, clock_ref));
        }
    } else {
        let next = std::sync::atomic::AtomicUsize::new(0);
        let results = std::sync::Mutex::new(&mut parts);
        std::thread::scope(|s| {
            for _ in 0..workers.min(systems.len()) {
                s.spawn(|| loop {
                    let k = next.fetch_add(1, std::sync::atomic::Ordering::Relaxed);
                    let Some(sp) = systems.get(k) else { break };
                    let local = move || start.elapsed().as_nanos() as u64;
                    let local_ref: Option<&dyn Fn() -> u64> = if timings { Some(&local) } else { None };
                    let r = run_system(sp, local_ref);
                    results.lock().expect("worker panicked")[k] = Some(r);
                });
            }
        });
    }
    let mut report = VerificationReport::default();
    for part in parts.into_iter().flatten() {
        report.merge(part);
    }
    report
}

fn report_table(r: &VerificationReport, timings: bool) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{:<24} {:>8} {:>8}", "check", "passed", "failed");
    for (k, v) in &r.stats {
        let _ = writeln!(s, "{k:<24} {:>8} {:>8}", v.passed, v.failed);
    }
    for c in &r.coverage {
        let _ = writeln!(
            s,
            "coverage {}: {} weights, {} singular, {} non-integral{}",
            c.system,
            c.weights,
            c.singular,
            c.non_integral,
            if c.complete() { "" } else { " (incomplete)" }
        );
    }
    for (k, v) in &r.witnesses {
        let _ = writeln!(s, "witness {k}: {v}");
    }
    for (sys, e) in &r.system_errors {
        let _ = writeln!(s, "error {sys}: {e}");
    }
    for f in &r.failures {
        let eta = f.eta.as_ref().map(|e| format!(" η=({e})")).unwrap_or_default();
        let _ = writeln!(s, "FAIL {} {} I={{{}}} λ=({}){eta}: {}", f.theorem, f.system, f.parabolic, f.lambda, f.detail);
    }
    if timings {
        for (k, v) in &r.timings {
            let _ = writeln!(s, "time {k}: {:.3} ms", *v as f64 / 1e6);
        }
    }
    let _ = writeln!(s, "result: {}", if r.passed() { "pass" } else { "fail" });
    s
}

/// DOT graph of the Bruhat interval `[x, w]` with covering relations.
fn bruhat_dot(g: &CoxeterSystem, x: Elem, w: Elem) -> String {
    let nodes: Vec<Elem> = g.elements().filter(|&z| g.bruhat_leq(x, z) && g.bruhat_leq(z, w)).collect();
    let mut s = String::from("digraph bruhat {\n  rankdir=BT;\n");
    for &z in &nodes {
        let _ = writeln!(s, "  \"{}\";", g.render(z));
    }
    for &a in &nodes {
        for &b in &nodes {
            if g.length(b) == g.length(a) + 1 && g.bruhat_leq(a, b) {
                let _ = writeln!(s, "  \"{}\" -> \"{}\";", g.render(a), g.render(b));
            }
        }
    }
    s.push_str("}\n");
    s
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
