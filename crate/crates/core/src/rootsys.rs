//! Finite crystallographic root systems, rational weights, and parabolic
//! subsets of the simple roots.
//!
//! Conventions:
//! * the Cartan matrix is `a[i][j] = <α_j, α_i^∨>` (Bourbaki numbering);
//! * roots are integer vectors over the simple roots;
//! * weights are rational vectors over the fundamental weights, so that
//!   coordinate `i` of `λ` is `<λ, α_i^∨>`.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Q = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    fn admits(self, rank: usize) -> bool {
        match self {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        }
    }
}

/// Direct sum of simple Cartan types, e.g. `A2xA1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CartanType {
    factors: Vec<(Family, usize)>,
}

impl CartanType {
    pub fn new(factors: Vec<(Family, usize)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidParameter("empty Cartan type".into()));
        }
        for &(family, rank) in &factors {
            if !family.admits(rank) {
                return Err(Error::InadmissibleType { family: family.letter(), rank });
            }
        }
        Ok(CartanType { factors })
    }

    pub fn factors(&self) -> &[(Family, usize)] {
        &self.factors
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.1).sum()
    }

    /// Block-diagonal Cartan matrix, `a[i][j] = <α_j, α_i^∨>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let n = self.rank();
        let mut a = alloc::vec![alloc::vec![0i32; n]; n];
        let mut off = 0;
        for &(family, rank) in &self.factors {
            let block = simple_cartan(family, rank);
            for i in 0..rank {
                for j in 0..rank {
                    a[off + i][off + j] = block[i][j];
                }
            }
            off += rank;
        }
        a
    }
}

fn simple_cartan(family: Family, n: usize) -> Vec<Vec<i32>> {
    let mut a = alloc::vec![alloc::vec![0i32; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |i: usize, j: usize| {
        a[i][j] = -1;
        a[j][i] = -1;
    };
    match family {
        Family::A | Family::B | Family::C => {
            for i in 0..n - 1 {
                link(i, i + 1);
            }
        }
        Family::D => {
            for i in 0..n - 2 {
                link(i, i + 1);
            }
            link(n - 3, n - 1);
        }
        Family::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..n - 1 {
                link(i, i + 1);
            }
        }
        Family::F => {
            link(0, 1);
            link(1, 2);
            link(2, 3);
        }
        Family::G => link(0, 1),
    }
    match family {
        // α_n short
        Family::B => a[n - 1][n - 2] = -2,
        // α_n long
        Family::C => a[n - 2][n - 1] = -2,
        // α_1, α_2 long; α_3, α_4 short
        Family::F => a[2][1] = -2,
        // α_1 short, α_2 long
        Family::G => a[0][1] = -3,
        _ => {}
    }
    a
}

impl FromStr for CartanType {
    type Err = Error;

    /// Grammar: factors like `A3`, `B2`, `G2` joined by `x`.
    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s.chars().collect();
        let mut factors = Vec::new();
        let mut pos = 0;
        loop {
            let start = pos;
            let Some(&c) = chars.get(pos) else {
                return Err(Error::Parse { pos, msg: "expected a family letter A-G".into() });
            };
            let Some(family) = Family::from_letter(c) else {
                return Err(Error::Parse { pos, msg: alloc::format!("unknown family `{c}`") });
            };
            pos += 1;
            let digits_start = pos;
            while chars.get(pos).is_some_and(|c| c.is_ascii_digit()) {
                pos += 1;
            }
            if pos == digits_start {
                return Err(Error::Parse { pos, msg: "expected a rank".into() });
            }
            let digits: String = chars[digits_start..pos].iter().collect();
            let rank: usize = digits
                .parse()
                .map_err(|_| Error::Parse { pos: digits_start, msg: "rank out of range".into() })?;
            if !family.admits(rank) {
                return Err(Error::Parse {
                    pos: start,
                    msg: Error::InadmissibleType { family: family.letter(), rank }.to_string(),
                });
            }
            factors.push((family, rank));
            match chars.get(pos) {
                None => break,
                Some('x') | Some('X') => pos += 1,
                Some(c) => {
                    return Err(Error::Parse { pos, msg: alloc::format!("unexpected `{c}`") })
                }
            }
        }
        CartanType::new(factors)
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (family, rank)) in self.factors.iter().enumerate() {
            if k > 0 {
                f.write_str("x")?;
            }
            write!(f, "{}{}", family.letter(), rank)?;
        }
        Ok(())
    }
}

/// Element of `h*` in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(Vec<Q>);

impl Weight {
    pub fn new(coords: Vec<Q>) -> Self {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(alloc::vec![Q::zero(); rank])
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| Q::from_integer(c)).collect())
    }

    /// `-ϖ_i` for a 0-based index.
    pub fn neg_fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[i] = -Q::one();
        w
    }

    pub fn coords(&self) -> &[Q] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: Q) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-Q::one())
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Grammar: comma-separated integers or fractions `p/q`, e.g. `0,1/2,-3`.
    /// The empty string is the rank-0 weight.
    fn from_str(s: &str) -> Result<Self> {
        let mut coords = Vec::new();
        if s.trim().is_empty() {
            return Ok(Weight(coords));
        }
        let mut offset = 0;
        for part in s.split(',') {
            coords.push(parse_rational(part, offset)?);
            offset += part.chars().count() + 1;
        }
        Ok(Weight(coords))
    }
}

fn parse_rational(part: &str, offset: usize) -> Result<Q> {
    let lead = part.chars().take_while(|c| c.is_whitespace()).count();
    let body = part.trim();
    let pos = offset + lead;
    if body.is_empty() {
        return Err(Error::Parse { pos, msg: "empty coordinate".into() });
    }
    let bad = |k: usize, msg: &str| Error::Parse { pos: pos + k, msg: msg.into() };
    if let Some(k) = body.chars().position(|c| !(c.is_ascii_digit() || c == '-' || c == '+' || c == '/')) {
        return Err(bad(k, "expected an integer or p/q (irrational weights are not supported)"));
    }
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let n: i64 = num.parse().map_err(|_| bad(0, "malformed numerator"))?;
    let d: i64 = match den {
        Some(d) => d.parse().map_err(|_| bad(num.len() + 1, "malformed denominator"))?,
        None => 1,
    };
    if d == 0 {
        return Err(bad(num.len() + 1, "zero denominator"));
    }
    Ok(Q::new(n, d))
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Root in simple-root coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coords: Vec<i32>) -> Self {
        Root(coords)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = alloc::vec![0; rank];
        c[i] = 1;
        Root(c)
    }

    pub fn coords(&self) -> &[i32] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Support as a set of simple-root indices.
    pub fn support(&self) -> GenSet {
        GenSet::from_indices(self.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i))
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

/// Set of generator (simple-root) indices, 0-based internally.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenSet(u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn full(rank: usize) -> Self {
        GenSet(if rank >= 64 { u64::MAX } else { (1u64 << rank) - 1 })
    }

    pub fn from_indices(it: impl IntoIterator<Item = usize>) -> Self {
        GenSet(it.into_iter().fold(0, |m, i| m | (1 << i)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn from_bits(bits: u64) -> Self {
        GenSet(bits)
    }

    pub fn contains(self, i: usize) -> bool {
        i < 64 && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << i;
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: GenSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&i| self.contains(i))
    }

    /// Every subset of `{0, .., rank-1}`, in increasing bitmask order.
    pub fn all_subsets(rank: usize) -> impl Iterator<Item = GenSet> {
        (0..1u64 << rank).map(GenSet)
    }

    pub fn max_index(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }
}

/// Parabolic subsets are written as 1-based index lists (`1,3`); the empty
/// string is the empty subset.
impl FromStr for GenSet {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut set = GenSet::EMPTY;
        if s.trim().is_empty() {
            return Ok(set);
        }
        let mut offset = 0;
        for part in s.split(',') {
            let lead = part.chars().take_while(|c| c.is_whitespace()).count();
            let idx: usize = part.trim().parse().map_err(|_| Error::Parse {
                pos: offset + lead,
                msg: "expected a 1-based simple-root index".into(),
            })?;
            if idx == 0 || idx > 64 {
                return Err(Error::Parse { pos: offset + lead, msg: "index out of range".into() });
            }
            set.insert(idx - 1);
            offset += part.chars().count() + 1;
        }
        Ok(set)
    }
}

impl fmt::Display for GenSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        Ok(())
    }
}

/// The parabolic subset `I ⊆ Δ`.
pub type ParabolicSubset = GenSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicData {
    pub roots: Vec<Root>,
    pub positive: Vec<Root>,
    pub rho_l: Weight,
    pub rho_u: Weight,
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i32>>,
    cartan_inv: Vec<Vec<Q>>,
    symmetrizer: Vec<Q>,
    /// All roots, lexicographic.
    roots: Vec<Root>,
    /// Coroot of `roots[k]` in simple-coroot coordinates.
    coroots: Vec<Vec<i32>>,
    positive: Vec<Root>,
    rho: Weight,
}

impl RootSystem {
    pub fn new(ct: &CartanType) -> Result<Self> {
        let cartan = ct.cartan_matrix();
        let n = cartan.len();
        let symmetrizer = symmetrize(&cartan)?;

        let mut seen: BTreeSet<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
        let mut queue: VecDeque<Root> = seen.iter().cloned().collect();
        while let Some(beta) = queue.pop_front() {
            for i in 0..n {
                let img = reflect_root(&cartan, i, &beta);
                if seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let roots: Vec<Root> = seen.into_iter().collect();
        if let Some(bad) = roots.iter().find(|r| !r.is_positive() && !r.neg().is_positive()) {
            return Err(Error::Internal(alloc::format!("mixed-sign root {bad}")));
        }
        let coroots = roots
            .iter()
            .map(|r| coroot_of(&cartan, &symmetrizer, r))
            .collect::<Result<Vec<_>>>()?;
        let positive = roots.iter().filter(|r| r.is_positive()).cloned().collect();
        let cartan_inv = invert(&cartan)?;
        Ok(RootSystem {
            cartan_type: ct.clone(),
            rho: Weight::from_ints(&alloc::vec![1; n]),
            cartan,
            cartan_inv,
            symmetrizer,
            roots,
            coroots,
            positive,
        })
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn symmetrizer(&self) -> &[Q] {
        &self.symmetrizer
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn simple_roots(&self) -> Vec<Root> {
        (0..self.rank()).map(|i| Root::simple(self.rank(), i)).collect()
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.roots.binary_search(r).is_ok()
    }

    /// Coroot of `r` in simple-coroot coordinates.
    pub fn coroot(&self, r: &Root) -> Result<&[i32]> {
        self.roots
            .binary_search(r)
            .map(|k| self.coroots[k].as_slice())
            .map_err(|_| Error::NotARoot)
    }

    /// `<λ, α^∨>`, exact.
    pub fn pairing(&self, lambda: &Weight, alpha: &Root) -> Result<Q> {
        self.check_dim(lambda)?;
        let co = self.coroot(alpha)?;
        Ok(co.iter().zip(lambda.coords()).map(|(&c, x)| x * Q::from_integer(c as i64)).sum())
    }

    /// `<λ + ρ, α^∨>`.
    pub fn shifted_pairing(&self, lambda: &Weight, alpha: &Root) -> Result<Q> {
        Ok(self.pairing(lambda, alpha)? + self.pairing(&self.rho, alpha)?)
    }

    pub fn check_dim(&self, lambda: &Weight) -> Result<()> {
        if lambda.rank() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), found: lambda.rank() });
        }
        Ok(())
    }

    /// A root re-expressed in fundamental-weight coordinates.
    pub fn root_to_weight(&self, r: &Root) -> Weight {
        let n = self.rank();
        Weight::new(
            (0..n)
                .map(|i| {
                    let s: i64 = (0..n).map(|j| self.cartan[i][j] as i64 * r.0[j] as i64).sum();
                    Q::from_integer(s)
                })
                .collect(),
        )
    }

    /// Fundamental coordinates of an arbitrary rational combination of simple
    /// roots.
    pub fn root_coords_to_weight(&self, c: &[Q]) -> Weight {
        let n = self.rank();
        Weight::new(
            (0..n)
                .map(|i| (0..n).map(|j| c[j] * Q::from_integer(self.cartan[i][j] as i64)).sum())
                .collect(),
        )
    }

    /// Coordinates of `λ` over the simple roots (rational in general).
    pub fn weight_to_root_coords(&self, lambda: &Weight) -> Vec<Q> {
        let n = self.rank();
        (0..n)
            .map(|i| (0..n).map(|j| self.cartan_inv[i][j] * lambda.coords()[j]).sum())
            .collect()
    }

    /// `s_β(λ) = λ - <λ, β^∨> β`.
    pub fn reflect_weight(&self, lambda: &Weight, beta: &Root) -> Result<Weight> {
        let c = self.pairing(lambda, beta)?;
        Ok(lambda.sub(&self.root_to_weight(beta).scale(c)))
    }

    /// `s_β · λ = s_β(λ + ρ) - ρ`.
    pub fn dot_reflect(&self, lambda: &Weight, beta: &Root) -> Result<Weight> {
        let c = self.shifted_pairing(lambda, beta)?;
        Ok(lambda.sub(&self.root_to_weight(beta).scale(c)))
    }

    /// `s_i(λ)` for a simple index; reads coordinate `i` directly.
    pub fn simple_reflect_weight(&self, i: usize, lambda: &Weight) -> Weight {
        let c = lambda.coords()[i];
        let n = self.rank();
        Weight::new(
            (0..n)
                .map(|k| lambda.coords()[k] - c * Q::from_integer(self.cartan[k][i] as i64))
                .collect(),
        )
    }

    pub fn simple_reflect_root(&self, i: usize, r: &Root) -> Root {
        reflect_root(&self.cartan, i, r)
    }

    /// `Φ_I`, `Φ_I^+`, `ρ_l` and `ρ(u) = ρ - ρ_l`.
    pub fn parabolic_data(&self, set: ParabolicSubset) -> ParabolicData {
        let roots: Vec<Root> =
            self.roots.iter().filter(|r| r.support().is_subset(set)).cloned().collect();
        let positive: Vec<Root> = roots.iter().filter(|r| r.is_positive()).cloned().collect();
        let n = self.rank();
        let mut sum = alloc::vec![Q::zero(); n];
        for r in &positive {
            for (s, &c) in sum.iter_mut().zip(r.coords()) {
                *s += Q::from_integer(c as i64);
            }
        }
        let half: Vec<Q> = sum.into_iter().map(|s| s / Q::from_integer(2)).collect();
        let rho_l = self.root_coords_to_weight(&half);
        let rho_u = self.rho.sub(&rho_l);
        ParabolicData { roots, positive, rho_l, rho_u }
    }

    /// Membership in `Λ_I^+`: `<λ, α^∨> ∈ Z_{≥0}` for every `α ∈ Φ_I^+`.
    pub fn is_dominant_integral_for(&self, set: ParabolicSubset, lambda: &Weight) -> bool {
        self.positive.iter().filter(|r| r.support().is_subset(set)).all(|r| {
            self.pairing(lambda, r).is_ok_and(|p| p.is_integer() && !p.is_negative())
        })
    }

    /// `ν ≤ η`: `η - ν` is a non-negative integer combination of simple roots.
    pub fn weight_leq(&self, nu: &Weight, eta: &Weight) -> bool {
        self.weight_to_root_coords(&eta.sub(nu))
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// `η - ν` lies in the root lattice.
    pub fn same_root_coset(&self, nu: &Weight, eta: &Weight) -> bool {
        self.weight_to_root_coords(&eta.sub(nu)).iter().all(|c| c.is_integer())
    }

    /// Antidominance: `<λ + ρ, α^∨> ∉ Z_{>0}` for every positive root.
    pub fn is_antidominant(&self, lambda: &Weight) -> bool {
        self.positive.iter().all(|a| {
            let p = self.shifted_pairing(lambda, a).expect("positive root");
            !(p.is_integer() && p.is_positive())
        })
    }

    /// `<λ + ρ, α^∨> ≠ 0` for every root.
    pub fn is_regular(&self, lambda: &Weight) -> bool {
        self.positive.iter().all(|a| !self.shifted_pairing(lambda, a).expect("positive root").is_zero())
    }

    /// The cone `C_l = {ν : <ν, α^∨> ≥ 0 for all α ∈ I}`.
    pub fn in_levi_cone(&self, set: ParabolicSubset, nu: &Weight) -> bool {
        set.iter().all(|i| !nu.coords()[i].is_negative())
    }
}

fn reflect_root(cartan: &[Vec<i32>], i: usize, beta: &Root) -> Root {
    let p: i32 = (0..cartan.len()).map(|j| cartan[i][j] * beta.0[j]).sum();
    let mut c = beta.0.clone();
    c[i] -= p;
    Root(c)
}

/// Positive `d` with `d_i a_ij = d_j a_ji`, one free scale per component.
fn symmetrize(cartan: &[Vec<i32>]) -> Result<Vec<Q>> {
    let n = cartan.len();
    let mut d: Vec<Option<Q>> = alloc::vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Q::one());
        let mut stack = alloc::vec![start];
        while let Some(i) = stack.pop() {
            let di = d[i].unwrap();
            for j in 0..n {
                if j == i || cartan[i][j] == 0 {
                    continue;
                }
                if cartan[j][i] == 0 {
                    return Err(Error::InvalidCartan("asymmetric zero pattern".into()));
                }
                let dj = di * Q::new(cartan[i][j] as i64, cartan[j][i] as i64);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                    Some(prev) if prev != dj => {
                        return Err(Error::InvalidCartan("not symmetrizable".into()))
                    }
                    _ => {}
                }
            }
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap()).collect())
}

fn coroot_of(cartan: &[Vec<i32>], d: &[Q], r: &Root) -> Result<Vec<i32>> {
    let n = cartan.len();
    let c = &r.0;
    let mut norm = Q::zero();
    for i in 0..n {
        for j in 0..n {
            norm += d[i] * Q::from_integer((c[i] * c[j] * cartan[i][j]) as i64);
        }
    }
    let half = norm / Q::from_integer(2);
    (0..n)
        .map(|j| {
            let v = Q::from_integer(c[j] as i64) * d[j] / half;
            if v.is_integer() {
                Ok(v.to_integer() as i32)
            } else {
                Err(Error::Internal(alloc::format!("non-integral coroot for {r}")))
            }
        })
        .collect()
}

fn invert(m: &[Vec<i32>]) -> Result<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Q> = row.iter().map(|&x| Q::from_integer(x as i64)).collect();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or_else(|| Error::InvalidCartan("singular matrix".into()))?;
        a.swap(col, piv);
        let p = a[col][col];
        for x in a[col].iter_mut() {
            *x /= p;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                for k in 0..2 * n {
                    let v = a[col][k] * f;
                    a[r][k] -= v;
                }
            }
        }
    }
    Ok(a.into_iter().map(|r| r[n..].to_vec()).collect())
}
