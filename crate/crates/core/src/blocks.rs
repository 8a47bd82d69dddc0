//! Block combinatorics of a weight `λ`: the integral root system, the integral
//! Weyl group as an abstract Coxeter system, the antidominant representative
//! of the dot orbit, its singular simple roots, and the coset sets used by the
//! relative Kazhdan–Lusztig–Vogan polynomials.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::sync::Arc;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::klpoly::KlEngine;
use crate::rootsys::{GenSet, ParabolicSubset, Root, RootSystem, Weight};
use crate::weylgroup::{CoxeterSystem, Elem};

/// Which roots may be used in a strong-linkage step.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinkageMode {
    /// Any positive root (`↑`).
    Full,
    /// Positive roots of `Φ_[λ]` only (`↑_[λ]`).
    Integral,
}

/// `Φ_[λ]` (lexicographic) and `Δ_[λ]` ordered by height, then by
/// decreasing coordinates, so an integral weight yields `α_1, …, α_n`.
pub fn integral_subsystem(rs: &RootSystem, lambda: &Weight) -> Result<(Vec<Root>, Vec<Root>)> {
    rs.check_dim(lambda)?;
    let phi: Vec<Root> = rs
        .roots()
        .iter()
        .filter(|r| rs.pairing(lambda, r).is_ok_and(|p| p.is_integer()))
        .cloned()
        .collect();
    let pos: Vec<&Root> = phi.iter().filter(|r| r.is_positive()).collect();
    let sums: BTreeSet<Root> =
        pos.iter().flat_map(|a| pos.iter().map(move |b| a.add(b))).collect();
    let mut delta: Vec<Root> = pos.into_iter().filter(|r| !sums.contains(*r)).cloned().collect();
    delta.sort_by(|a, b| a.height().cmp(&b.height()).then_with(|| b.cmp(a)));
    Ok((phi, delta))
}

/// `{ν : ν ↑ λ}` (or `↑_[λ]`), by downward breadth-first search.
pub fn strong_linkage_set(rs: &RootSystem, lambda: &Weight, mode: LinkageMode) -> Result<BTreeSet<Weight>> {
    rs.check_dim(lambda)?;
    let roots: Vec<&Root> = match mode {
        LinkageMode::Full => rs.positive_roots().iter().collect(),
        LinkageMode::Integral => rs
            .positive_roots()
            .iter()
            .filter(|r| rs.pairing(lambda, r).is_ok_and(|p| p.is_integer()))
            .collect(),
    };
    let mut seen = BTreeSet::new();
    seen.insert(lambda.clone());
    let mut queue = VecDeque::from([lambda.clone()]);
    while let Some(eta) = queue.pop_front() {
        for alpha in &roots {
            let p = rs.shifted_pairing(&eta, alpha)?;
            if p.is_integer() && p.is_positive() {
                let nu = rs.dot_reflect(&eta, alpha)?;
                if seen.insert(nu.clone()) {
                    queue.push_back(nu);
                }
            }
        }
    }
    Ok(seen)
}

/// `ν ↑ η` (or `↑_[η]`).
pub fn is_strongly_linked(rs: &RootSystem, nu: &Weight, eta: &Weight, mode: LinkageMode) -> Result<bool> {
    if !rs.weight_leq(nu, eta) {
        return Ok(false);
    }
    Ok(strong_linkage_set(rs, eta, mode)?.contains(nu))
}

/// Four order relations between two elements of a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OrderRelations {
    /// `x ≤ w` in the ambient Weyl group.
    pub ambient: bool,
    /// `x ≤_[λ] w` in the abstract integral Weyl group.
    pub abstract_order: bool,
    /// `x·μ ↑_[λ] w·μ`.
    pub linked: bool,
    /// `x·μ ≤ w·μ`.
    pub weight_order: bool,
}

impl OrderRelations {
    /// The implication chain that holds for every block.
    pub fn chain_holds(&self) -> bool {
        self.ambient == self.abstract_order
            && (!self.abstract_order || self.linked)
            && (!self.linked || self.weight_order)
    }

    pub fn all_equal(&self) -> bool {
        self.ambient == self.abstract_order
            && self.abstract_order == self.linked
            && self.linked == self.weight_order
    }
}

/// Block data of a single weight.
pub struct Block<'a> {
    rs: &'a RootSystem,
    lambda: Weight,
    phi_int: Vec<Root>,
    delta_int: Vec<Root>,
    engine: KlEngine,
    mu: Weight,
    to_mu: Elem,
    sigma: GenSet,
}

impl<'a> Block<'a> {
    pub fn new(rs: &'a RootSystem, lambda: &Weight) -> Result<Self> {
        let (phi_int, delta_int) = integral_subsystem(rs, lambda)?;
        let m = delta_int.len();
        let mut cartan = alloc::vec![alloc::vec![0i32; m]; m];
        for (i, bi) in delta_int.iter().enumerate() {
            for (j, bj) in delta_int.iter().enumerate() {
                let p = rs.pairing(&rs.root_to_weight(bj), bi)?;
                cartan[i][j] = p.to_integer() as i32;
            }
        }
        let sys = Arc::new(CoxeterSystem::new(cartan)?);

        let mut nu = lambda.clone();
        let mut to_mu = Elem::IDENTITY;
        loop {
            let step = delta_int.iter().position(|b| {
                rs.shifted_pairing(&nu, b).expect("integral root").is_positive()
            });
            match step {
                Some(k) => {
                    nu = rs.dot_reflect(&nu, &delta_int[k])?;
                    to_mu = sys.lmul(k, to_mu);
                }
                None => break,
            }
        }
        if !rs.is_antidominant(&nu) {
            return Err(Error::Internal("greedy descent ended at a non-antidominant weight".into()));
        }
        let sigma = GenSet::from_indices(
            (0..m).filter(|&k| rs.shifted_pairing(&nu, &delta_int[k]).unwrap().is_zero()),
        );
        Ok(Block {
            rs,
            lambda: lambda.clone(),
            phi_int,
            delta_int,
            engine: KlEngine::new(sys),
            mu: nu,
            to_mu,
            sigma,
        })
    }

    pub fn root_system(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn lambda(&self) -> &Weight {
        &self.lambda
    }

    pub fn phi_int(&self) -> &[Root] {
        &self.phi_int
    }

    pub fn delta_int(&self) -> &[Root] {
        &self.delta_int
    }

    /// The abstract integral Weyl group `W_[λ]`, generated by `Δ_[λ]`.
    pub fn group(&self) -> &CoxeterSystem {
        self.engine.system()
    }

    pub fn engine(&self) -> &KlEngine {
        &self.engine
    }

    /// The antidominant weight `μ ∈ W_[λ]·λ`.
    pub fn mu(&self) -> &Weight {
        &self.mu
    }

    /// The element found by the greedy descent, with `μ = w·λ`.
    pub fn to_mu(&self) -> Elem {
        self.to_mu
    }

    /// `Σ_μ` as abstract generator indices.
    pub fn sigma(&self) -> GenSet {
        self.sigma
    }

    pub fn sigma_roots(&self) -> Vec<Root> {
        self.sigma.iter().map(|k| self.delta_int[k].clone()).collect()
    }

    pub fn is_regular(&self) -> bool {
        self.rs.is_regular(&self.lambda)
    }

    /// Linear action of an abstract element on `h*`.
    pub fn act(&self, x: Elem, nu: &Weight) -> Result<Weight> {
        let mut v = nu.clone();
        for &k in self.group().word(x).iter().rev() {
            v = self.rs.reflect_weight(&v, &self.delta_int[k as usize])?;
        }
        Ok(v)
    }

    /// Dot action of an abstract element on `h*`.
    pub fn dot_act(&self, x: Elem, nu: &Weight) -> Result<Weight> {
        let mut v = nu.clone();
        for &k in self.group().word(x).iter().rev() {
            v = self.rs.dot_reflect(&v, &self.delta_int[k as usize])?;
        }
        Ok(v)
    }

    /// `x·μ`.
    pub fn orbit_point(&self, x: Elem) -> Weight {
        self.dot_act(x, &self.mu).expect("dimensions agree")
    }

    /// Images `s_β ∈ W` of the abstract generators.
    pub fn embedding(&self, ambient: &CoxeterSystem) -> Result<Vec<Elem>> {
        let rs = self.rs;
        let n = rs.rank();
        self.delta_int
            .iter()
            .map(|beta| {
                let co = rs.coroot(beta)?;
                let mut m = alloc::vec![0i32; n * n];
                for j in 0..n {
                    let p: i32 = (0..n).map(|k| co[k] * rs.cartan()[k][j]).sum();
                    for r in 0..n {
                        m[r * n + j] = i32::from(r == j) - p * beta.coords()[r];
                    }
                }
                ambient
                    .from_matrix(&m)
                    .ok_or_else(|| Error::Internal("reflection missing from the ambient group".into()))
            })
            .collect()
    }

    /// Image of an abstract element under the embedding.
    pub fn embed(&self, ambient: &CoxeterSystem, gens: &[Elem], x: Elem) -> Elem {
        self.group().word(x).iter().fold(Elem::IDENTITY, |acc, &k| ambient.mul(acc, gens[k as usize]))
    }

    /// `I` re-expressed as abstract generators; requires `λ ∈ Λ_I^+`.
    pub fn parabolic(&self, set: ParabolicSubset) -> Result<GenSet> {
        if !self.rs.is_dominant_integral_for(set, &self.lambda) {
            return Err(Error::NotInLambdaIPlus);
        }
        let mut out = GenSet::EMPTY;
        for i in set.iter() {
            let simple = Root::simple(self.rs.rank(), i);
            let k = self
                .delta_int
                .iter()
                .position(|b| *b == simple)
                .ok_or_else(|| Error::Internal("simple root of I missing from Δ_[λ]".into()))?;
            out.insert(k);
        }
        Ok(out)
    }

    /// `w_I` inside `W_[λ]`.
    pub fn w_i(&self, set: ParabolicSubset) -> Result<Elem> {
        Ok(self.group().longest_element(self.parabolic(set)?))
    }

    /// `^I W_[λ]`.
    pub fn coset_reps(&self, set: ParabolicSubset) -> Result<Vec<Elem>> {
        Ok(self.group().min_coset_reps(self.parabolic(set)?))
    }

    /// `^I W_[λ]^{Σ_μ}`.
    pub fn coset_reps_sigma(&self, set: ParabolicSubset) -> Result<Vec<Elem>> {
        let i_abs = self.parabolic(set)?;
        let g = self.group();
        Ok(g.elements().filter(|&x| self.in_sigma_reps(g, i_abs, x)).collect())
    }

    fn in_sigma_reps(&self, g: &CoxeterSystem, i_abs: GenSet, x: Elem) -> bool {
        g.is_min_left_coset_rep(x, i_abs)
            && self.sigma.iter().all(|k| {
                !g.right_descents(x).contains(k) && g.is_min_left_coset_rep(g.rmul(x, k), i_abs)
            })
    }

    pub fn is_sigma_rep(&self, set: ParabolicSubset, x: Elem) -> Result<bool> {
        let i_abs = self.parabolic(set)?;
        Ok(self.in_sigma_reps(self.group(), i_abs, x))
    }

    /// The unique `w̄ ∈ ^I W_[λ]^{Σ_μ}` with `λ = w_I w̄ · μ`.
    pub fn wbar(&self, set: ParabolicSubset) -> Result<Elem> {
        let wi = self.w_i(set)?;
        let g = self.group();
        let mut found = None;
        for x in self.coset_reps_sigma(set)? {
            if self.orbit_point(g.mul(wi, x)) == self.lambda {
                if found.is_some() {
                    return Err(Error::Internal("w̄ is not unique".into()));
                }
                found = Some(x);
            }
        }
        found.ok_or_else(|| Error::Internal("no w̄ with λ = w_I w̄·μ".into()))
    }

    /// `{x ∈ W_[λ] : x·μ = μ}`.
    pub fn dot_stabilizer(&self) -> Vec<Elem> {
        self.group().elements().filter(|&x| self.orbit_point(x) == self.mu).collect()
    }

    /// The distinct weights of `W_[λ]·λ`.
    pub fn dot_orbit(&self) -> BTreeSet<Weight> {
        self.group().elements().map(|x| self.orbit_point(x)).collect()
    }

    /// Compares the four order relations on a pair of abstract elements.
    pub fn order_relations(&self, ambient: &CoxeterSystem, gens: &[Elem], x: Elem, w: Elem) -> Result<OrderRelations> {
        let (xm, wm) = (self.orbit_point(x), self.orbit_point(w));
        Ok(OrderRelations {
            ambient: ambient.bruhat_leq(self.embed(ambient, gens, x), self.embed(ambient, gens, w)),
            abstract_order: self.group().bruhat_leq(x, w),
            linked: is_strongly_linked(self.rs, &xm, &wm, LinkageMode::Integral)?,
            weight_order: self.rs.weight_leq(&xm, &wm),
        })
    }
}

/// Agreement of the abstract Bruhat order with the ambient one on a pair.
pub fn bruhat_consistency(block: &Block<'_>, ambient: &CoxeterSystem, gens: &[Elem], x: Elem, w: Elem) -> bool {
    block.group().bruhat_leq(x, w)
        == ambient.bruhat_leq(block.embed(ambient, gens, x), block.embed(ambient, gens, w))
}

/// Membership in `{w ∈ W : w·λ - λ ∈ Λ_r}`.
pub fn in_integral_weyl_group(rs: &RootSystem, ambient: &CoxeterSystem, w: Elem, lambda: &Weight) -> Result<bool> {
    let moved = ambient.dot_act(w, lambda)?;
    Ok(rs.same_root_coset(&moved, lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn rs(t: &str) -> RootSystem {
        RootSystem::new(&t.parse::<CartanType>().unwrap()).unwrap()
    }

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    #[test]
    fn subsystems() {
        let a1 = rs("A1");
        let (phi, delta) = integral_subsystem(&a1, &w("1/2")).unwrap();
        assert!(phi.is_empty() && delta.is_empty());
        let a2 = rs("A2");
        let (phi, delta) = integral_subsystem(&a2, &w("0,0")).unwrap();
        assert_eq!(phi.len(), 6);
        assert_eq!(delta, a2.simple_roots());
        let b2 = rs("B2");
        let (phi, delta) = integral_subsystem(&b2, &w("0,1/2")).unwrap();
        assert_eq!(phi, [Root::new(alloc::vec![-1, 0]), Root::new(alloc::vec![1, 0])]);
        assert_eq!(delta, [Root::new(alloc::vec![1, 0])]);
    }

    #[test]
    fn antidominant_examples() {
        let a1 = rs("A1");
        let b = Block::new(&a1, &w("0")).unwrap();
        assert_eq!(b.mu(), &w("-2"));
        assert_eq!(b.to_mu(), b.group().generator(0).unwrap());
        let b = Block::new(&a1, &w("1/2")).unwrap();
        assert_eq!(b.mu(), &w("1/2"));
        assert_eq!(b.group().size(), 1);
        let a2 = rs("A2");
        let b = Block::new(&a2, &w("0,0")).unwrap();
        assert_eq!(b.mu(), &w("-2,-2"));
        assert_eq!(b.to_mu(), b.group().longest_element(GenSet::full(2)));
    }

    #[test]
    fn singular_examples() {
        let a1 = rs("A1");
        let b = Block::new(&a1, &w("-1")).unwrap();
        assert_eq!(b.mu(), &w("-1"));
        assert_eq!(b.sigma(), GenSet::full(1));
        let a2 = rs("A2");
        assert!(Block::new(&a2, &w("0,0")).unwrap().sigma().is_empty());
        let b = Block::new(&a2, &w("-1,0")).unwrap();
        // ⟨λ+ρ, α1^∨⟩ = 0 already; descend along α2 then α1+α2 side
        assert!(a2.is_antidominant(b.mu()));
        assert_eq!(b.sigma().len(), 1);
        assert!(!a2.is_regular(&w("-1,0")));
        assert!(a2.is_regular(&w("0,-1/2")));
    }

    #[test]
    fn coset_examples() {
        let a2 = rs("A2");
        let b = Block::new(&a2, &w("0,0")).unwrap();
        assert_eq!(b.coset_reps(GenSet::EMPTY).unwrap().len(), 6);
        assert_eq!(b.coset_reps_sigma(GenSet::EMPTY).unwrap().len(), 6);
        assert_eq!(b.coset_reps(GenSet::full(2)).unwrap(), [Elem::IDENTITY]);
        assert_eq!(b.coset_reps(GenSet::from_indices([0])).unwrap().len(), 3);
        let wbar = b.wbar(GenSet::from_indices([0])).unwrap();
        assert_eq!(b.group().render(wbar), "s2*s1");
        let neg = Block::new(&a2, &w("-1,0")).unwrap();
        assert_eq!(neg.parabolic(GenSet::from_indices([0])), Err(Error::NotInLambdaIPlus));
        let a1 = rs("A1");
        let b = Block::new(&a1, &w("0")).unwrap();
        assert_eq!(b.wbar(GenSet::EMPTY).unwrap(), b.group().generator(0).unwrap());
    }

    #[test]
    fn linkage_examples() {
        let a1 = rs("A1");
        let s = strong_linkage_set(&a1, &w("0"), LinkageMode::Full).unwrap();
        assert_eq!(s.into_iter().collect::<Vec<_>>(), [w("-2"), w("0")]);
        let a2 = rs("A2");
        assert_eq!(strong_linkage_set(&a2, &w("0,0"), LinkageMode::Integral).unwrap().len(), 6);
        assert_eq!(strong_linkage_set(&a2, &w("-2,-2"), LinkageMode::Full).unwrap().len(), 1);
    }
}
