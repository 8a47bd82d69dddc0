//! Relative Kazhdan–Lusztig–Vogan polynomials, Dirac cohomology of simple and
//! parabolic Verma modules, the weight set `𝒲_I(λ)` with its geometric and
//! algebraic descriptions, Kostant modules, and simplicity criteria.

use alloc::collections::{btree_map, BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_traits::Signed;

use crate::blocks::{is_strongly_linked, strong_linkage_set, Block, LinkageMode};
use crate::error::{Error, Result};
use crate::klpoly::ParabolicType;
use crate::poly::IntPoly;
use crate::rootsys::{GenSet, ParabolicSubset, Root, RootSystem, Weight};
use crate::weylgroup::Elem;

/// Finite multiset of weights with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset {
    entries: BTreeMap<Weight, u64>,
}

impl WeightMultiset {
    pub fn new() -> Self {
        WeightMultiset::default()
    }

    /// Adds `mult` copies; zero is ignored.
    pub fn insert(&mut self, w: Weight, mult: u64) {
        if mult > 0 {
            *self.entries.entry(w).or_insert(0) += mult;
        }
    }

    pub fn mult(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, Weight, u64> {
        self.entries.iter()
    }

    pub fn support(&self) -> BTreeSet<Weight> {
        self.entries.keys().cloned().collect()
    }

    /// Every multiplicity here is at most the one in `other`.
    pub fn dominated_by(&self, other: &WeightMultiset) -> bool {
        self.entries.iter().all(|(w, &m)| m <= other.mult(w))
    }
}

impl FromIterator<(Weight, u64)> for WeightMultiset {
    fn from_iter<T: IntoIterator<Item = (Weight, u64)>>(iter: T) -> Self {
        let mut m = WeightMultiset::new();
        for (w, k) in iter {
            m.insert(w, k);
        }
        m
    }
}

/// A block together with a parabolic subset `I` for which `λ ∈ Λ_I^+`.
pub struct ParabolicBlock<'a> {
    block: Block<'a>,
    set: ParabolicSubset,
    i_abs: GenSet,
    w_i: Elem,
    wbar: Elem,
    reps_sigma: Vec<Elem>,
}

impl<'a> ParabolicBlock<'a> {
    pub fn new(rs: &'a RootSystem, set: ParabolicSubset, lambda: &Weight) -> Result<Self> {
        check_parabolic(rs, set)?;
        rs.check_dim(lambda)?;
        if !rs.is_dominant_integral_for(set, lambda) {
            return Err(Error::NotInLambdaIPlus);
        }
        let block = Block::new(rs, lambda)?;
        let i_abs = block.parabolic(set)?;
        let w_i = block.group().longest_element(i_abs);
        let wbar = block.wbar(set)?;
        let reps_sigma = block.coset_reps_sigma(set)?;
        Ok(ParabolicBlock { block, set, i_abs, w_i, wbar, reps_sigma })
    }

    pub fn block(&self) -> &Block<'a> {
        &self.block
    }

    pub fn set(&self) -> ParabolicSubset {
        self.set
    }

    /// `I` as generators of `W_[λ]`.
    pub fn abstract_set(&self) -> GenSet {
        self.i_abs
    }

    pub fn w_i(&self) -> Elem {
        self.w_i
    }

    pub fn wbar(&self) -> Elem {
        self.wbar
    }

    /// `^I W_[λ]^{Σ_μ}`.
    pub fn reps_sigma(&self) -> &[Elem] {
        &self.reps_sigma
    }

    /// `^I W_[λ]`.
    pub fn reps(&self) -> Vec<Elem> {
        self.block.group().min_coset_reps(self.i_abs)
    }

    fn rs(&self) -> &'a RootSystem {
        self.block.root_system()
    }

    /// `w_I x · μ`.
    pub fn twisted_point(&self, x: Elem) -> Weight {
        self.block.orbit_point(self.block.group().mul(self.w_i, x))
    }

    fn check_sigma_rep(&self, x: Elem, which: &'static str) -> Result<()> {
        if x.index() >= self.block.group().size() || !self.block.is_sigma_rep(self.set, x)? {
            return Err(Error::NotCosetRep(which));
        }
        Ok(())
    }

    /// `^I P^{Σ_μ}_{x,w}`, computed as a type-`q` parabolic polynomial and
    /// cross-checked against the alternating sum over `W_{Σ_μ}`.
    pub fn klv(&self, x: Elem, w: Elem) -> Result<IntPoly> {
        self.check_sigma_rep(x, "x")?;
        self.check_sigma_rep(w, "w")?;
        let g = self.block.group();
        let eng = self.block.engine();
        let sigma = self.block.sigma();
        let (wx, ww) = (g.mul(self.w_i, x), g.mul(self.w_i, w));
        let via_parabolic = eng.parabolic_p(sigma, ParabolicType::Q, g.inverse(wx), g.inverse(ww))?;
        let mut via_sum = IntPoly::zero();
        for t in g.parabolic_elements(sigma) {
            let p = eng.kl(g.mul(wx, t), ww)?;
            via_sum = if g.length(t) % 2 == 0 { &via_sum + &p } else { &via_sum - &p };
        }
        if via_sum != via_parabolic {
            return Err(Error::Internal(alloc::format!(
                "KLV mismatch at ({}, {}): {via_parabolic} vs {via_sum}",
                g.render(x),
                g.render(w)
            )));
        }
        Ok(via_parabolic)
    }

    /// `^I P^μ_{x,w}` for regular `λ` and `x, w ∈ ^I W_[λ]`, by three routes
    /// that must agree.
    pub fn klv_regular(&self, x: Elem, w: Elem) -> Result<IntPoly> {
        if !self.block.is_regular() {
            return Err(Error::Singular);
        }
        let g = self.block.group();
        for (e, which) in [(x, "x"), (w, "w")] {
            if e.index() >= g.size() || !g.is_min_left_coset_rep(e, self.i_abs) {
                return Err(Error::NotCosetRep(which));
            }
        }
        let eng = self.block.engine();
        let a = self.klv(x, w)?;
        let b = eng.kl(g.mul(self.w_i, x), g.mul(self.w_i, w))?;
        let c = eng.parabolic_p(self.i_abs, ParabolicType::NegOne, x, w)?;
        if a != b || b != c {
            return Err(Error::Internal(alloc::format!("regular KLV routes disagree: {a}, {b}, {c}")));
        }
        Ok(a)
    }

    /// `H_D(L(λ))` as `{w_I x·μ + ρ : ^I P^{Σ_μ}_{x,w̄}(1)}`.
    pub fn dirac_cohomology(&self) -> Result<WeightMultiset> {
        let rho = self.rs().rho();
        let mut out = WeightMultiset::new();
        for &x in &self.reps_sigma {
            let p = self.klv(x, self.wbar)?;
            if !p.has_nonnegative_coeffs() {
                return Err(Error::Internal(alloc::format!("KLV polynomial {p} has a negative coefficient")));
            }
            let v = p.eval_at_one();
            if v != 0 {
                out.insert(self.twisted_point(x).add(rho), v as u64);
            }
        }
        Ok(out)
    }

    pub fn w_set(&self) -> Result<BTreeSet<Weight>> {
        Ok(self.dirac_cohomology()?.support())
    }

    /// `W_[λ](λ+ρ) ∩ ℒ_{λ+ρ} ∩ C_𝔩`.
    pub fn hull_set(&self) -> BTreeSet<Weight> {
        let rs = self.rs();
        let top = self.block.lambda().add(rs.rho());
        self.block
            .group()
            .elements()
            .map(|x| self.block.act(x, &top).expect("dimensions agree"))
            .filter(|nu| rs.weight_leq(nu, &top) && rs.in_levi_cone(self.set, nu))
            .collect()
    }

    /// `(𝒮_[λ](λ) + ρ) ∩ C_𝔩`.
    pub fn linkage_set(&self) -> Result<BTreeSet<Weight>> {
        let rs = self.rs();
        Ok(strong_linkage_set(rs, self.block.lambda(), LinkageMode::Integral)?
            .into_iter()
            .map(|nu| nu.add(rs.rho()))
            .filter(|nu| rs.in_levi_cone(self.set, nu))
            .collect())
    }

    pub fn params(&self) -> Result<ParamReport> {
        let rs = self.rs();
        let (mult_set, embed_set) = algebraic_sets(rs, self.set, self.block.lambda(), Filter::Dominant)?;
        let (mult_set_shifted, embed_set_shifted) =
            algebraic_sets(rs, self.set, self.block.lambda(), Filter::ShiftedDominant)?;
        Ok(ParamReport {
            regular: self.block.is_regular(),
            w_set: self.w_set()?,
            hull_set: self.hull_set(),
            linkage_set: self.linkage_set()?,
            mult_set,
            embed_set,
            mult_set_shifted,
            embed_set_shifted,
        })
    }

    /// `L(λ)` is a Kostant module: `^I P^μ_{x,w̄} = 1` whenever `x ≤_[λ] w̄`.
    pub fn is_kostant(&self) -> Result<bool> {
        if !self.block.is_regular() {
            return Err(Error::Singular);
        }
        let g = self.block.group();
        for x in self.reps() {
            if g.bruhat_leq(x, self.wbar) && !self.klv_regular(x, self.wbar)?.is_one() {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn check_parabolic(rs: &RootSystem, set: ParabolicSubset) -> Result<()> {
    match set.max_index() {
        Some(i) if i >= rs.rank() => Err(Error::InvalidGenerator(i)),
        _ => Ok(()),
    }
}

#[derive(Clone, Copy)]
enum Filter {
    /// `ν ∈ Λ_I^+`.
    Dominant,
    /// `ν ∈ Λ_I^+ - ρ`.
    ShiftedDominant,
}

/// The multiplicity and embedding sets, both read off the BGG linkage set.
fn algebraic_sets(
    rs: &RootSystem,
    set: ParabolicSubset,
    lambda: &Weight,
    filter: Filter,
) -> Result<(BTreeSet<Weight>, BTreeSet<Weight>)> {
    let linked = strong_linkage_set(rs, lambda, LinkageMode::Full)?;
    let keep = |nu: &Weight| match filter {
        Filter::Dominant => rs.is_dominant_integral_for(set, nu),
        Filter::ShiftedDominant => rs.is_dominant_integral_for(set, &nu.add(rs.rho())),
    };
    // [M(λ) : L(ν)] ≠ 0 ⟺ ν ↑ λ
    let mult: BTreeSet<Weight> = linked.iter().filter(|nu| keep(nu)).map(|nu| nu.add(rs.rho())).collect();
    // M(ν) ↪ M(λ) ⟺ ν ↑ λ
    let embed: BTreeSet<Weight> = linked.into_iter().filter(|nu| keep(nu)).map(|nu| nu.add(rs.rho())).collect();
    Ok((mult, embed))
}

/// All parameterizing sets of `H_D(L(λ))`. The `_shifted` variants filter by
/// `Λ_I^+ - ρ` instead of `Λ_I^+`; the two coincide for regular `λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamReport {
    pub regular: bool,
    pub w_set: BTreeSet<Weight>,
    pub hull_set: BTreeSet<Weight>,
    pub linkage_set: BTreeSet<Weight>,
    pub mult_set: BTreeSet<Weight>,
    pub embed_set: BTreeSet<Weight>,
    pub mult_set_shifted: BTreeSet<Weight>,
    pub embed_set_shifted: BTreeSet<Weight>,
}

impl ParamReport {
    /// `𝒲_I ⊆ linkage ⊆ embed = mult ⊆ hull`, valid for every `λ ∈ Λ_I^+`.
    pub fn chain_holds(&self) -> bool {
        self.w_set.is_subset(&self.linkage_set)
            && self.linkage_set.is_subset(&self.embed_set_shifted)
            && self.embed_set_shifted == self.mult_set_shifted
            && self.mult_set_shifted.is_subset(&self.hull_set)
    }

    /// `𝒲_I = hull = linkage`.
    pub fn geometric_equal(&self) -> bool {
        self.w_set == self.hull_set && self.hull_set == self.linkage_set
    }

    /// `𝒲_I = mult = embed`.
    pub fn algebraic_equal(&self) -> bool {
        self.w_set == self.mult_set && self.mult_set == self.embed_set
    }

    pub fn mult_equals_embed(&self) -> bool {
        self.mult_set == self.embed_set
    }
}

pub fn klv(rs: &RootSystem, set: ParabolicSubset, lambda: &Weight, x: Elem, w: Elem) -> Result<IntPoly> {
    ParabolicBlock::new(rs, set, lambda)?.klv(x, w)
}

pub fn klv_regular(rs: &RootSystem, set: ParabolicSubset, lambda: &Weight, x: Elem, w: Elem) -> Result<IntPoly> {
    ParabolicBlock::new(rs, set, lambda)?.klv_regular(x, w)
}

pub fn w_set(rs: &RootSystem, set: ParabolicSubset, lambda: &Weight) -> Result<BTreeSet<Weight>> {
    ParabolicBlock::new(rs, set, lambda)?.w_set()
}

pub fn dirac_cohomology_simple(rs: &RootSystem, set: ParabolicSubset, lambda: &Weight) -> Result<WeightMultiset> {
    ParabolicBlock::new(rs, set, lambda)?.dirac_cohomology()
}

/// `H_D(M_I(λ)) = {λ + ρ : 1}`.
pub fn dirac_cohomology_parabolic_verma(
    rs: &RootSystem,
    set: ParabolicSubset,
    lambda: &Weight,
) -> Result<WeightMultiset> {
    check_parabolic(rs, set)?;
    rs.check_dim(lambda)?;
    if !rs.is_dominant_integral_for(set, lambda) {
        return Err(Error::NotInLambdaIPlus);
    }
    Ok([(lambda.add(rs.rho()), 1)].into_iter().collect())
}

/// `(hull_set, linkage_set)`.
pub fn geometric_params(
    rs: &RootSystem,
    set: ParabolicSubset,
    lambda: &Weight,
) -> Result<(BTreeSet<Weight>, BTreeSet<Weight>)> {
    let pb = ParabolicBlock::new(rs, set, lambda)?;
    Ok((pb.hull_set(), pb.linkage_set()?))
}

/// `(mult_set, embed_set)` with the `Λ_I^+` filter.
pub fn algebraic_params(
    rs: &RootSystem,
    set: ParabolicSubset,
    lambda: &Weight,
) -> Result<(BTreeSet<Weight>, BTreeSet<Weight>)> {
    check_parabolic(rs, set)?;
    rs.check_dim(lambda)?;
    if !rs.is_dominant_integral_for(set, lambda) {
        return Err(Error::NotInLambdaIPlus);
    }
    algebraic_sets(rs, set, lambda, Filter::Dominant)
}

/// `Ψ^+_λ = {β ∈ Φ^+ \ Φ_I^+ : <λ+ρ, β^∨> ∈ Z_{>0}}`.
pub fn psi_plus(rs: &RootSystem, set: ParabolicSubset, lambda: &Weight) -> Result<Vec<Root>> {
    check_parabolic(rs, set)?;
    rs.check_dim(lambda)?;
    let mut out = Vec::new();
    for beta in rs.positive_roots() {
        if beta.support().is_subset(set) {
            continue;
        }
        let p = rs.shifted_pairing(lambda, beta)?;
        if p.is_integer() && p.is_positive() {
            out.push(beta.clone());
        }
    }
    Ok(out)
}

/// Both sides of a simplicity criterion and the resulting verdict.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SimplicityVerdict {
    pub simple: bool,
    /// Antidominance of `λ` (Verma), or `w̄ = e` (parabolic Verma).
    pub twist_side: bool,
    /// `𝒮(λ) = {λ}` (Verma), or `Ψ^+_λ = ∅` (parabolic Verma).
    pub criterion_side: bool,
}

pub fn verma_is_simple(rs: &RootSystem, lambda: &Weight) -> Result<SimplicityVerdict> {
    rs.check_dim(lambda)?;
    let antidominant = rs.is_antidominant(lambda);
    let singleton = strong_linkage_set(rs, lambda, LinkageMode::Full)?.len() == 1;
    if antidominant != singleton {
        return Err(Error::Internal(alloc::format!(
            "Verma simplicity sides disagree at {lambda}: antidominant {antidominant}, linkage singleton {singleton}"
        )));
    }
    Ok(SimplicityVerdict { simple: antidominant, twist_side: antidominant, criterion_side: singleton })
}

pub fn parabolic_verma_is_simple(rs: &RootSystem, set: ParabolicSubset, lambda: &Weight) -> Result<SimplicityVerdict> {
    let pb = ParabolicBlock::new(rs, set, lambda)?;
    if !pb.block().is_regular() {
        return Err(Error::Singular);
    }
    let twist = pb.wbar() == Elem::IDENTITY;
    let jantzen = psi_plus(rs, set, lambda)?.is_empty();
    if twist != jantzen {
        return Err(Error::Internal(alloc::format!(
            "parabolic Verma simplicity sides disagree at {lambda}: w̄ = e is {twist}, Ψ⁺ empty is {jantzen}"
        )));
    }
    Ok(SimplicityVerdict { simple: twist, twist_side: twist, criterion_side: jantzen })
}

pub fn is_kostant(rs: &RootSystem, set: ParabolicSubset, lambda: &Weight) -> Result<bool> {
    ParabolicBlock::new(rs, set, lambda)?.is_kostant()
}

/// The six statements compared for a Kostant module `L(λ)` against `L(λ′)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct KostantEquivalences {
    /// `H_D(L(λ))` is a quotient of `H_D(L(λ′))`.
    pub quotient: bool,
    /// `λ ↑_[λ′] λ′`.
    pub integral_linked: bool,
    /// `λ ↑ λ′`.
    pub linked: bool,
    /// `M(λ) ↪ M(λ′)`.
    pub embeds: bool,
    /// `[M(λ′) : L(λ)] ≠ 0`.
    pub multiplicity: bool,
    /// `λ ≤ λ′` and `λ ∈ W_[λ′]·λ′`.
    pub order_orbit: bool,
}

impl KostantEquivalences {
    pub fn as_array(&self) -> [bool; 6] {
        [self.quotient, self.integral_linked, self.linked, self.embeds, self.multiplicity, self.order_orbit]
    }

    pub fn all_agree(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&b| b == a[0])
    }
}

pub fn kostant_equivalences(
    rs: &RootSystem,
    set: ParabolicSubset,
    lambda: &Weight,
    lambda_p: &Weight,
) -> Result<KostantEquivalences> {
    let pb = ParabolicBlock::new(rs, set, lambda)?;
    let pb_p = ParabolicBlock::new(rs, set, lambda_p)?;
    if !pb.block().is_regular() && !pb_p.block().is_regular() {
        return Err(Error::Singular);
    }
    if !pb.is_kostant()? {
        return Err(Error::InvalidParameter("L(λ) is not a Kostant module".into()));
    }
    kostant_equivalences_from(rs, set, lambda, lambda_p, &pb.dirac_cohomology()?, &pb_p.dirac_cohomology()?)
}

/// The six statements given both Dirac cohomologies; no preconditions are
/// rechecked.
pub(crate) fn kostant_equivalences_from(
    rs: &RootSystem,
    set: ParabolicSubset,
    lambda: &Weight,
    lambda_p: &Weight,
    hd: &WeightMultiset,
    hd_p: &WeightMultiset,
) -> Result<KostantEquivalences> {
    let (mult, embed) = algebraic_sets(rs, set, lambda_p, Filter::Dominant)?;
    let shifted = lambda.add(rs.rho());
    let orbit = Block::new(rs, lambda_p)?.dot_orbit();
    Ok(KostantEquivalences {
        quotient: hd.dominated_by(hd_p),
        integral_linked: is_strongly_linked(rs, lambda, lambda_p, LinkageMode::Integral)?,
        linked: is_strongly_linked(rs, lambda, lambda_p, LinkageMode::Full)?,
        embeds: embed.contains(&shifted),
        multiplicity: mult.contains(&shifted),
        order_orbit: rs.weight_leq(lambda, lambda_p) && orbit.contains(lambda),
    })
}

/// The seven statements of the extended Verma–BGG theorem for `η` against a
/// regular `λ`, both in `Λ_I^+`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BggEquivalences {
    pub multiplicity: bool,
    pub embeds: bool,
    pub linked: bool,
    pub integral_linked: bool,
    pub order_orbit: bool,
    pub w_set_contained: bool,
    pub w_set_empty_contained: bool,
}

impl BggEquivalences {
    pub fn as_array(&self) -> [bool; 7] {
        [
            self.multiplicity,
            self.embeds,
            self.linked,
            self.integral_linked,
            self.order_orbit,
            self.w_set_contained,
            self.w_set_empty_contained,
        ]
    }

    pub fn all_agree(&self) -> bool {
        let a = self.as_array();
        a.iter().all(|&b| b == a[0])
    }
}

/// Evaluates the seven statements given precomputed weight sets
/// (`𝒲_I` and `𝒲_∅` of both weights).
pub fn bgg_equivalences(
    rs: &RootSystem,
    set: ParabolicSubset,
    lambda: &Weight,
    eta: &Weight,
    w_sets: (&BTreeSet<Weight>, &BTreeSet<Weight>),
    w_sets_empty: (&BTreeSet<Weight>, &BTreeSet<Weight>),
) -> Result<BggEquivalences> {
    if !rs.is_regular(lambda) {
        return Err(Error::Singular);
    }
    if !rs.is_dominant_integral_for(set, lambda) || !rs.is_dominant_integral_for(set, eta) {
        return Err(Error::NotInLambdaIPlus);
    }
    let (mult, embed) = algebraic_sets(rs, set, lambda, Filter::Dominant)?;
    let shifted = eta.add(rs.rho());
    let orbit = Block::new(rs, lambda)?.dot_orbit();
    Ok(BggEquivalences {
        multiplicity: mult.contains(&shifted),
        embeds: embed.contains(&shifted),
        linked: is_strongly_linked(rs, eta, lambda, LinkageMode::Full)?,
        integral_linked: is_strongly_linked(rs, eta, lambda, LinkageMode::Integral)?,
        order_orbit: rs.weight_leq(eta, lambda) && orbit.contains(eta),
        w_set_contained: w_sets.1.is_subset(w_sets.0),
        w_set_empty_contained: w_sets_empty.1.is_subset(w_sets_empty.0),
    })
}

/// Every key of `H_D(L(λ))` lies in `W(λ+ρ)`: checked by comparing against
/// the full Weyl orbit computed with plain reflections.
pub fn support_in_weyl_orbit(rs: &RootSystem, lambda: &Weight, hd: &WeightMultiset) -> bool {
    let top = lambda.add(rs.rho());
    let mut orbit = BTreeSet::from([top.clone()]);
    let mut frontier = alloc::vec![top];
    while let Some(v) = frontier.pop() {
        for i in 0..rs.rank() {
            let r = rs.simple_reflect_weight(i, &v);
            if orbit.insert(r.clone()) {
                frontier.push(r);
            }
        }
    }
    hd.iter().all(|(w, _)| orbit.contains(w))
}

/// `λ + ρ ∈ 𝒲_I(λ)` with multiplicity one.
pub fn top_term_is_simple(rs: &RootSystem, lambda: &Weight, hd: &WeightMultiset) -> bool {
    hd.mult(&lambda.add(rs.rho())) == 1
}
