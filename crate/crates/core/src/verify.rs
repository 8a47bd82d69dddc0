//! Exhaustive desk-scale harness: enumerates weights per system and parabolic
//! subset, runs every structural check, and collects a deterministic report.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_rational::Ratio;

use crate::blocks::in_integral_weyl_group;
use crate::dirac::{self, ParabolicBlock, WeightMultiset};
use crate::error::{Error, Result};
use crate::rootsys::{CartanType, GenSet, ParabolicSubset, RootSystem, Weight};
use crate::weylgroup::{CoxeterSystem, Elem, DEFAULT_SIZE_CAP};

/// Checks evaluated on a single weight.
pub const SINGLE_CHECKS: &[&str] = &[
    "chain",
    "geometric",
    "algebraic",
    "top_term",
    "support",
    "klv_support",
    "klv_nonzero",
    "klv_one",
    "coset_bruhat",
    "order_relations",
    "coset_cone",
    "integral_group",
    "verma_simple",
    "parabolic_verma_simple",
    "jantzen",
    "hd_verma",
    "kostant",
];

/// Checks evaluated on a pair of weights.
pub const PAIR_CHECKS: &[&str] = &["injective", "bgg_extended", "kostant_equiv"];

/// Root system, ambient Weyl group, and their Cartan type.
pub struct SystemData {
    cartan: CartanType,
    rs: RootSystem,
    group: CoxeterSystem,
}

impl SystemData {
    pub fn new(cartan: &CartanType) -> Result<Self> {
        Self::with_cap(cartan, DEFAULT_SIZE_CAP)
    }

    pub fn with_cap(cartan: &CartanType, cap: usize) -> Result<Self> {
        let rs = RootSystem::new(cartan)?;
        let group = CoxeterSystem::with_cap(cartan.cartan_matrix(), cap)?;
        Ok(SystemData { cartan: cartan.clone(), rs, group })
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn group(&self) -> &CoxeterSystem {
        &self.group
    }

    /// `W·seed` under the dot action.
    pub fn dot_orbit(&self, seed: &Weight) -> Result<BTreeSet<Weight>> {
        self.group.elements().map(|w| self.group.dot_act(w, seed)).collect()
    }
}

/// Outcome of one named check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckRecord {
    pub theorem: String,
    pub clauses: Vec<(String, bool)>,
    pub sets: Vec<(String, BTreeSet<Weight>)>,
}

impl CheckRecord {
    fn new(theorem: &str) -> Self {
        CheckRecord { theorem: theorem.to_string(), clauses: Vec::new(), sets: Vec::new() }
    }

    fn clause(&mut self, name: &str, holds: bool) -> &mut Self {
        self.clauses.push((name.to_string(), holds));
        self
    }

    fn set(&mut self, name: &str, s: &BTreeSet<Weight>) -> &mut Self {
        self.sets.push((name.to_string(), s.clone()));
        self
    }

    pub fn passed(&self) -> bool {
        self.clauses.iter().all(|(_, b)| *b)
    }
}

fn require_regular(rs: &RootSystem, lambda: &Weight) -> Result<()> {
    if rs.is_regular(lambda) {
        Ok(())
    } else {
        Err(Error::Singular)
    }
}

/// Internal-consistency errors become failing clauses; everything else
/// propagates.
fn consistency<T>(rec: &mut CheckRecord, name: &str, r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::Internal(msg)) => {
            rec.clause(&format!("{name}: {msg}"), false);
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// Runs the named check on `λ` (and `η` for pair checks).
pub fn check_theorem(
    name: &str,
    sys: &SystemData,
    set: ParabolicSubset,
    lambda: &Weight,
    eta: Option<&Weight>,
) -> Result<CheckRecord> {
    if PAIR_CHECKS.contains(&name) {
        let eta = eta.ok_or_else(|| Error::InvalidParameter(format!("check {name} needs a second weight")))?;
        let rs = &sys.rs;
        let hd = dirac::dirac_cohomology_simple(rs, set, lambda)?;
        let hd_eta = dirac::dirac_cohomology_simple(rs, set, eta)?;
        let pair = PairData { set, lambda, eta, hd: &hd, hd_eta: &hd_eta };
        return match name {
            "injective" => check_injective(&pair),
            "bgg_extended" => {
                let empty = dirac::w_set(rs, GenSet::EMPTY, lambda)?;
                let empty_eta = dirac::w_set(rs, GenSet::EMPTY, eta)?;
                check_bgg(rs, &pair, &empty, &empty_eta)
            }
            _ => {
                if !dirac::is_kostant(rs, set, lambda)? {
                    return Err(Error::InvalidParameter("L(λ) is not a Kostant module".into()));
                }
                check_kostant_equiv(rs, &pair)
            }
        };
    }
    if !SINGLE_CHECKS.contains(&name) {
        return Err(Error::UnknownTheorem(name.to_string()));
    }
    let rs = &sys.rs;
    let pb = ParabolicBlock::new(rs, set, lambda)?;
    let mut rec = CheckRecord::new(name);
    match name {
        "chain" => {
            let p = pb.params()?;
            rec.clause("w_set ⊆ linkage_set", p.w_set.is_subset(&p.linkage_set))
                .clause("linkage_set ⊆ embed_set", p.linkage_set.is_subset(&p.embed_set_shifted))
                .clause("embed_set = mult_set", p.embed_set_shifted == p.mult_set_shifted)
                .clause("mult_set ⊆ hull_set", p.mult_set_shifted.is_subset(&p.hull_set))
                .set("w_set", &p.w_set)
                .set("linkage_set", &p.linkage_set)
                .set("embed_set", &p.embed_set_shifted)
                .set("hull_set", &p.hull_set);
        }
        "geometric" => {
            require_regular(rs, lambda)?;
            let w = pb.w_set()?;
            let (hull, link) = (pb.hull_set(), pb.linkage_set()?);
            rec.clause("w_set = hull_set", w == hull)
                .clause("hull_set = linkage_set", hull == link)
                .set("w_set", &w)
                .set("hull_set", &hull)
                .set("linkage_set", &link);
        }
        "algebraic" => {
            require_regular(rs, lambda)?;
            let w = pb.w_set()?;
            let (mult, embed) = dirac::algebraic_params(rs, set, lambda)?;
            rec.clause("w_set = mult_set", w == mult)
                .clause("mult_set = embed_set", mult == embed)
                .set("w_set", &w)
                .set("mult_set", &mult)
                .set("embed_set", &embed);
        }
        "top_term" => {
            if let Some(hd) = consistency(&mut rec, "hd", pb.dirac_cohomology())? {
                rec.clause("λ+ρ has multiplicity 1", dirac::top_term_is_simple(rs, lambda, &hd))
                    .set("w_set", &hd.support());
            }
        }
        "support" => {
            if let Some(hd) = consistency(&mut rec, "hd", pb.dirac_cohomology())? {
                rec.clause("keys ⊆ W(λ+ρ)", dirac::support_in_weyl_orbit(rs, lambda, &hd))
                    .set("w_set", &hd.support());
            }
        }
        "klv_support" => check_klv_support(&pb, &mut rec)?,
        "klv_nonzero" => {
            require_regular(rs, lambda)?;
            let g = pb.block().group();
            let reps = pb.reps();
            let mut ok = true;
            for &x in &reps {
                for &w in &reps {
                    let Some(p) = consistency(&mut rec, "klv_regular", pb.klv_regular(x, w))? else {
                        return Ok(rec);
                    };
                    let leq = g.bruhat_leq(g.mul(pb.w_i(), x), g.mul(pb.w_i(), w));
                    ok &= (p.eval_at_one() != 0) == leq;
                }
            }
            rec.clause("value(1) ≠ 0 ⟺ w_I x ≤ w_I w", ok);
        }
        "klv_one" => {
            if !set.is_empty() {
                return Err(Error::InvalidParameter("klv_one requires I = ∅".into()));
            }
            let g = pb.block().group();
            let mut ok = true;
            for &w in pb.reps_sigma() {
                if let Some(&first) = g.word(w).first() {
                    let x = g.lmul(first as usize, w);
                    let Some(p) = consistency(&mut rec, "klv", pb.klv(x, w))? else {
                        return Ok(rec);
                    };
                    ok &= p.is_one();
                }
            }
            rec.clause("klv(s w, w) = 1", ok);
        }
        "coset_bruhat" => {
            let g = pb.block().group();
            let reps = pb.reps();
            let wi = pb.w_i();
            let ok = reps.iter().all(|&x| {
                reps.iter().all(|&w| g.bruhat_leq(x, w) == g.bruhat_leq(g.mul(wi, x), g.mul(wi, w)))
            });
            rec.clause("x ≤ w ⟺ w_I x ≤ w_I w", ok);
        }
        "order_relations" => {
            let block = pb.block();
            let gens = block.embedding(&sys.group)?;
            let (mut chain, mut equal) = (true, true);
            for x in block.group().elements() {
                for w in block.group().elements() {
                    let r = block.order_relations(&sys.group, &gens, x, w)?;
                    chain &= r.chain_holds();
                    equal &= r.all_equal();
                }
            }
            rec.clause("implication chain", chain);
            if block.is_regular() {
                rec.clause("all orders agree", equal);
            }
        }
        "coset_cone" => {
            let block = pb.block();
            let g = block.group();
            let reps: BTreeSet<Elem> = pb.reps().into_iter().collect();
            let cone: BTreeSet<Elem> = g
                .elements()
                .filter(|&x| rs.in_levi_cone(set, &block.orbit_point(x).add(rs.rho()).neg()))
                .collect();
            rec.clause("^I W ⊆ cone preimage", reps.is_subset(&cone));
            if block.is_regular() {
                rec.clause("^I W = cone preimage", reps == cone);
            }
        }
        "integral_group" => {
            let block = pb.block();
            let gens = block.embedding(&sys.group)?;
            let image: BTreeSet<Elem> = block.group().elements().map(|x| block.embed(&sys.group, &gens, x)).collect();
            let mut defined = BTreeSet::new();
            for w in sys.group.elements() {
                if in_integral_weyl_group(rs, &sys.group, w, lambda)? {
                    defined.insert(w);
                }
            }
            rec.clause("reflection group = {w : w·λ - λ ∈ Λ_r}", image == defined);
        }
        "verma_simple" => {
            if let Some(v) = consistency(&mut rec, "verma", dirac::verma_is_simple(rs, lambda))? {
                rec.clause("antidominant ⟺ linkage singleton", v.twist_side == v.criterion_side);
            }
        }
        "parabolic_verma_simple" => {
            require_regular(rs, lambda)?;
            let block = pb.block();
            let twisted = block.dot_act(pb.w_i(), block.mu())?;
            rec.clause("w̄ = e ⟺ λ = w_I·μ", (pb.wbar() == Elem::IDENTITY) == (&twisted == lambda));
        }
        "jantzen" => {
            if let Some(v) = consistency(&mut rec, "parabolic verma", dirac::parabolic_verma_is_simple(rs, set, lambda))? {
                rec.clause("w̄ = e ⟺ Ψ⁺_λ = ∅", v.twist_side == v.criterion_side);
            }
        }
        "hd_verma" => {
            require_regular(rs, lambda)?;
            let hd = pb.dirac_cohomology()?;
            let verma = dirac::dirac_cohomology_parabolic_verma(rs, set, lambda)?;
            let simple = dirac::parabolic_verma_is_simple(rs, set, lambda)?.simple;
            rec.clause("H_D(L) = H_D(M_I) ⟺ M_I simple", (hd == verma) == simple);
        }
        "kostant" => {
            require_regular(rs, lambda)?;
            let kostant = pb.is_kostant()?;
            rec.clause("w̄ = e ⟹ Kostant", pb.wbar() != Elem::IDENTITY || kostant);
            rec.clause(if kostant { "kostant" } else { "non-kostant" }, true);
        }
        _ => unreachable!("name validated above"),
    }
    Ok(rec)
}

fn check_klv_support(pb: &ParabolicBlock<'_>, rec: &mut CheckRecord) -> Result<()> {
    let g = pb.block().group();
    let reps = pb.reps_sigma();
    let (mut diag, mut support, mut nonneg) = (true, true, true);
    for &x in reps {
        for &w in reps {
            let Some(p) = consistency(rec, "klv", pb.klv(x, w))? else {
                return Ok(());
            };
            if x == w {
                diag &= p.is_one();
            }
            nonneg &= p.has_nonnegative_coeffs();
            if p.eval_at_one() != 0 {
                support &= g.bruhat_leq(g.mul(pb.w_i(), x), g.mul(pb.w_i(), w));
            }
        }
    }
    rec.clause("klv(w, w) = 1", diag)
        .clause("value(1) ≠ 0 ⟹ w_I x ≤ w_I w", support)
        .clause("nonnegative coefficients", nonneg);
    Ok(())
}

struct PairData<'p> {
    set: ParabolicSubset,
    lambda: &'p Weight,
    eta: &'p Weight,
    hd: &'p WeightMultiset,
    hd_eta: &'p WeightMultiset,
}

fn check_injective(p: &PairData<'_>) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("injective");
    let (a, b) = (p.hd.support(), p.hd_eta.support());
    rec.clause("λ ≠ η ⟹ w_set(λ) ≠ w_set(η)", p.lambda == p.eta || a != b)
        .set("w_set(λ)", &a)
        .set("w_set(η)", &b);
    Ok(rec)
}

fn check_bgg(
    rs: &RootSystem,
    p: &PairData<'_>,
    empty: &BTreeSet<Weight>,
    empty_eta: &BTreeSet<Weight>,
) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("bgg_extended");
    let (a, b) = (p.hd.support(), p.hd_eta.support());
    let eq = dirac::bgg_equivalences(rs, p.set, p.lambda, p.eta, (&a, &b), (empty, empty_eta))?;
    let names = ["multiplicity", "embedding", "linked", "integrally linked", "order and orbit", "w_set", "w_set(∅)"];
    for (n, v) in names.iter().zip(eq.as_array()) {
        rec.clause(&format!("{n} = {v}"), true);
    }
    rec.clause("all agree", eq.all_agree()).set("w_set(λ)", &a).set("w_set(η)", &b);
    Ok(rec)
}

fn check_kostant_equiv(rs: &RootSystem, p: &PairData<'_>) -> Result<CheckRecord> {
    let mut rec = CheckRecord::new("kostant_equiv");
    let eq = dirac::kostant_equivalences_from(rs, p.set, p.lambda, p.eta, p.hd, p.hd_eta)?;
    let names = ["quotient", "integrally linked", "linked", "embedding", "multiplicity", "order and orbit"];
    for (n, v) in names.iter().zip(eq.as_array()) {
        rec.clause(&format!("{n} = {v}"), true);
    }
    rec.clause("all agree", eq.all_agree());
    Ok(rec)
}

/// One system of a sweep.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemPlan {
    pub cartan: CartanType,
    pub parabolics: Vec<ParabolicSubset>,
    pub seeds: Vec<Weight>,
    pub pair_checks: bool,
}

impl SystemPlan {
    /// All parabolic subsets; seeds `0`, `-ϖ_i`, and half-integral
    /// `ϖ_1/2` and `ϖ_n/2`.
    pub fn with_defaults(cartan: CartanType) -> Self {
        let n = cartan.rank();
        let parabolics = GenSet::all_subsets(n).collect();
        SystemPlan { seeds: default_seeds(n), parabolics, cartan, pair_checks: true }
    }
}

pub fn default_seeds(rank: usize) -> Vec<Weight> {
    let mut seeds = alloc::vec![Weight::zero(rank)];
    seeds.extend((0..rank).map(|i| Weight::neg_fundamental(rank, i)));
    for i in [0, rank.saturating_sub(1)] {
        if rank == 0 {
            break;
        }
        let mut c = Weight::zero(rank).coords().to_vec();
        c[i] = Ratio::new(1, 2);
        let w = Weight::new(c);
        if !seeds.contains(&w) {
            seeds.push(w);
        }
    }
    seeds
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepPlan {
    pub systems: Vec<SystemPlan>,
}

impl SweepPlan {
    pub fn with_defaults(types: impl IntoIterator<Item = CartanType>) -> Self {
        SweepPlan { systems: types.into_iter().map(SystemPlan::with_defaults).collect() }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CheckStats {
    pub passed: u64,
    pub failed: u64,
}

/// Full inputs and failing clauses of a check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Failure {
    pub system: String,
    pub parabolic: ParabolicSubset,
    pub lambda: Weight,
    pub eta: Option<Weight>,
    pub theorem: String,
    pub detail: String,
    pub sets: Vec<(String, BTreeSet<Weight>)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Coverage {
    pub system: String,
    pub weights: u64,
    pub singular: u64,
    pub non_integral: u64,
}

impl Coverage {
    pub fn complete(&self) -> bool {
        self.singular > 0 && self.non_integral > 0
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VerificationReport {
    pub stats: BTreeMap<String, CheckStats>,
    pub failures: Vec<Failure>,
    pub system_errors: Vec<(String, String)>,
    pub coverage: Vec<Coverage>,
    /// Named witness counts such as Kostant and non-Kostant modules.
    pub witnesses: BTreeMap<String, u64>,
    /// Nanoseconds per check, filled only when a clock is supplied.
    pub timings: BTreeMap<String, u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.system_errors.is_empty()
    }

    pub fn total_checks(&self) -> u64 {
        self.stats.values().map(|s| s.passed + s.failed).sum()
    }

    pub fn incomplete_coverage(&self) -> bool {
        self.coverage.iter().any(|c| !c.complete())
    }

    pub fn witness(&self, name: &str) -> u64 {
        self.witnesses.get(name).copied().unwrap_or(0)
    }

    /// Appends `other`, as if its systems followed this report's.
    pub fn merge(&mut self, other: VerificationReport) {
        for (k, s) in other.stats {
            let e = self.stats.entry(k).or_default();
            e.passed += s.passed;
            e.failed += s.failed;
        }
        self.failures.extend(other.failures);
        self.system_errors.extend(other.system_errors);
        self.coverage.extend(other.coverage);
        for (k, v) in other.witnesses {
            *self.witnesses.entry(k).or_default() += v;
        }
        for (k, v) in other.timings {
            *self.timings.entry(k).or_default() += v;
        }
    }
}

pub type Clock<'c> = &'c dyn Fn() -> u64;

struct Recorder<'c> {
    report: VerificationReport,
    clock: Option<Clock<'c>>,
    system: String,
}

impl Recorder<'_> {
    fn run(
        &mut self,
        name: &str,
        set: ParabolicSubset,
        lambda: &Weight,
        eta: Option<&Weight>,
        f: impl FnOnce() -> Result<CheckRecord>,
    ) -> Option<CheckRecord> {
        let start = self.clock.map(|c| c());
        let outcome = f();
        if let (Some(c), Some(s)) = (self.clock, start) {
            *self.report.timings.entry(name.to_string()).or_default() += c().saturating_sub(s);
        }
        let stats = self.report.stats.entry(name.to_string()).or_default();
        let (detail, sets, rec) = match outcome {
            Ok(rec) if rec.passed() => {
                stats.passed += 1;
                return Some(rec);
            }
            Ok(rec) => {
                let failed: Vec<&str> = rec.clauses.iter().filter(|(_, b)| !b).map(|(n, _)| n.as_str()).collect();
                (failed.join("; "), rec.sets.clone(), Some(rec))
            }
            Err(e) => (format!("error: {e}"), Vec::new(), None),
        };
        stats.failed += 1;
        self.report.failures.push(Failure {
            system: self.system.clone(),
            parabolic: set,
            lambda: lambda.clone(),
            eta: eta.cloned(),
            theorem: name.to_string(),
            detail,
            sets,
        });
        rec
    }
}

/// Per-weight data shared by pair checks.
struct Entry {
    lambda: Weight,
    family: usize,
    regular: bool,
    hd: WeightMultiset,
    empty_w_set: BTreeSet<Weight>,
    kostant: bool,
}

/// Runs every applicable check of the plan; failures never stop the sweep.
pub fn run_sweep(plan: &SweepPlan, clock: Option<Clock<'_>>) -> VerificationReport {
    let mut rec = Recorder { report: VerificationReport::default(), clock, system: String::new() };
    for sp in &plan.systems {
        rec.system = sp.cartan.to_string();
        match SystemData::new(&sp.cartan) {
            Ok(sys) => sweep_system(&mut rec, &sys, sp),
            Err(e) => rec.report.system_errors.push((rec.system.clone(), e.to_string())),
        }
    }
    rec.report
}

/// Runs a single system; used to parallelize across systems.
pub fn run_system(sp: &SystemPlan, clock: Option<Clock<'_>>) -> VerificationReport {
    run_sweep(&SweepPlan { systems: alloc::vec![sp.clone()] }, clock)
}

fn sweep_system(rec: &mut Recorder<'_>, sys: &SystemData, sp: &SystemPlan) {
    let rs = &sys.rs;
    let mut coverage = Coverage { system: rec.system.clone(), ..Coverage::default() };
    let mut orbits = Vec::new();
    for seed in &sp.seeds {
        match sys.dot_orbit(seed) {
            Ok(o) => orbits.push(o),
            Err(e) => {
                rec.report.system_errors.push((rec.system.clone(), format!("seed {seed}: {e}")));
                return;
            }
        }
    }
    let mut counted = BTreeSet::new();
    for &set in &sp.parabolics {
        if let Some(i) = set.max_index().filter(|&i| i >= rs.rank()) {
            rec.report.system_errors.push((rec.system.clone(), Error::InvalidGenerator(i).to_string()));
            continue;
        }
        let mut entries: Vec<Entry> = Vec::new();
        for (family, orbit) in orbits.iter().enumerate() {
            for lambda in orbit.iter().filter(|l| rs.is_dominant_integral_for(set, l)) {
                if counted.insert(lambda.clone()) {
                    coverage.weights += 1;
                    coverage.singular += u64::from(!rs.is_regular(lambda));
                    coverage.non_integral += u64::from(!lambda.is_integral());
                }
                if let Some(e) = sweep_weight(rec, sys, set, lambda, family) {
                    entries.push(e);
                }
            }
        }
        if sp.pair_checks {
            sweep_pairs(rec, rs, set, &entries);
        }
    }
    rec.report.coverage.push(coverage);
}

fn sweep_weight(
    rec: &mut Recorder<'_>,
    sys: &SystemData,
    set: ParabolicSubset,
    lambda: &Weight,
    family: usize,
) -> Option<Entry> {
    let rs = &sys.rs;
    let regular = rs.is_regular(lambda);
    for &name in SINGLE_CHECKS {
        let applicable = match name {
            "geometric" | "algebraic" | "klv_nonzero" | "parabolic_verma_simple" | "jantzen" | "hd_verma"
            | "kostant" => regular,
            "klv_one" | "verma_simple" => set.is_empty(),
            _ => true,
        };
        if !applicable {
            continue;
        }
        let r = rec.run(name, set, lambda, None, || check_theorem(name, sys, set, lambda, None));
        if name == "kostant" {
            if let Some(r) = &r {
                let kind = if r.clauses.iter().any(|(n, _)| n == "kostant") { "kostant" } else { "non-kostant" };
                *rec.report.witnesses.entry(kind.to_string()).or_default() += 1;
            }
        }
        if name == "chain" && !regular {
            if let Some(r) = &r {
                let get = |k: &str| r.sets.iter().find(|(n, _)| n == k).map(|(_, s)| s);
                if let (Some(w), Some(h)) = (get("w_set"), get("hull_set")) {
                    if w.len() < h.len() {
                        *rec.report.witnesses.entry("strict-hull".to_string()).or_default() += 1;
                    }
                }
            }
        }
    }
    let hd = dirac::dirac_cohomology_simple(rs, set, lambda).ok()?;
    let empty_w_set = dirac::w_set(rs, GenSet::EMPTY, lambda).ok()?;
    let kostant = regular && dirac::is_kostant(rs, set, lambda).unwrap_or(false);
    Some(Entry { lambda: lambda.clone(), family, regular, hd, empty_w_set, kostant })
}

fn sweep_pairs(rec: &mut Recorder<'_>, rs: &RootSystem, set: ParabolicSubset, entries: &[Entry]) {
    for a in entries {
        for b in entries {
            let pair = PairData { set, lambda: &a.lambda, eta: &b.lambda, hd: &a.hd, hd_eta: &b.hd };
            if a.family == b.family {
                rec.run("injective", set, &a.lambda, Some(&b.lambda), || check_injective(&pair));
                if a.regular {
                    rec.run("bgg_extended", set, &a.lambda, Some(&b.lambda), || {
                        check_bgg(rs, &pair, &a.empty_w_set, &b.empty_w_set)
                    });
                }
            }
            if a.kostant {
                rec.run("kostant_equiv", set, &a.lambda, Some(&b.lambda), || check_kostant_equiv(rs, &pair));
            }
        }
    }
}
