//! Finite Coxeter systems given by an integer Cartan matrix.
//!
//! Every element is enumerated once. Elements are small handles (`Elem`)
//! into the table, ordered by length and then by their action matrix on the
//! root lattice, so the numbering is deterministic.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rootsys::{GenSet, Weight, Q};

/// Default refusal threshold for `|W|`.
pub const DEFAULT_SIZE_CAP: usize = 1_000_000;

/// Groups up to this order get precomputed Bruhat lower ideals.
const EAGER_BRUHAT_LIMIT: usize = 4096;

/// Handle to an element of a particular `CoxeterSystem`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Elem(u32);

impl Elem {
    pub const IDENTITY: Elem = Elem(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(i: usize) -> Elem {
        Elem(i as u32)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DescentData {
    pub left: GenSet,
    pub right: GenSet,
}

#[derive(Clone, Debug)]
pub struct CoxeterSystem {
    cartan: Vec<Vec<i32>>,
    rank: usize,
    /// Row-major `rank x rank` matrices; column `j` is `w(α_j)`.
    mats: Vec<Vec<i32>>,
    index: BTreeMap<Vec<i32>, u32>,
    lengths: Vec<u32>,
    right: Vec<u32>,
    left: Vec<u32>,
    inv: Vec<u32>,
    words: Vec<Vec<u8>>,
    right_desc: Vec<GenSet>,
    left_desc: Vec<GenSet>,
    /// `ideals[w]` is the bitset of `{x : x ≤ w}` when present.
    ideals: Option<Vec<Vec<u64>>>,
}

fn validate_cartan(cartan: &[Vec<i32>]) -> Result<()> {
    let n = cartan.len();
    if n > 63 {
        return Err(Error::InvalidCartan("rank above 63".into()));
    }
    for (i, row) in cartan.iter().enumerate() {
        if row.len() != n {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        for (j, &a) in row.iter().enumerate() {
            if i == j && a != 2 {
                return Err(Error::InvalidCartan("diagonal entry differs from 2".into()));
            }
            if i != j && (a > 0 || (a == 0) != (cartan[j][i] == 0)) {
                return Err(Error::InvalidCartan("bad off-diagonal entry".into()));
            }
        }
    }
    Ok(())
}

impl CoxeterSystem {
    pub fn new(cartan: Vec<Vec<i32>>) -> Result<Self> {
        Self::with_cap(cartan, DEFAULT_SIZE_CAP)
    }

    /// Enumerates the group, failing with `GroupTooLarge` past `cap` elements
    /// (which also catches infinite groups).
    pub fn with_cap(cartan: Vec<Vec<i32>>, cap: usize) -> Result<Self> {
        validate_cartan(&cartan)?;
        let n = cartan.len();
        let mut identity = alloc::vec![0i32; n * n];
        for i in 0..n {
            identity[i * n + i] = 1;
        }

        // Breadth-first closure under right multiplication; BFS depth is length.
        let mut found: BTreeMap<Vec<i32>, u32> = BTreeMap::new();
        let mut layer = alloc::vec![identity.clone()];
        found.insert(identity, 0);
        let mut depth = 0u32;
        while !layer.is_empty() {
            depth += 1;
            let mut next = Vec::new();
            for m in &layer {
                for i in 0..n {
                    let p = right_mul_gen(&cartan, m, i);
                    if !found.contains_key(&p) {
                        if found.len() >= cap {
                            return Err(Error::GroupTooLarge { cap });
                        }
                        found.insert(p.clone(), depth);
                        next.push(p);
                    }
                }
            }
            layer = next;
        }

        let mut order: Vec<(u32, Vec<i32>)> = found.into_iter().map(|(m, l)| (l, m)).collect();
        order.sort();
        let size = order.len();
        let lengths: Vec<u32> = order.iter().map(|(l, _)| *l).collect();
        let mats: Vec<Vec<i32>> = order.into_iter().map(|(_, m)| m).collect();
        let index: BTreeMap<Vec<i32>, u32> =
            mats.iter().enumerate().map(|(k, m)| (m.clone(), k as u32)).collect();

        let mut right = alloc::vec![0u32; size * n];
        let mut left = alloc::vec![0u32; size * n];
        for (k, m) in mats.iter().enumerate() {
            for i in 0..n {
                right[k * n + i] = index[&right_mul_gen(&cartan, m, i)];
                left[k * n + i] = index[&left_mul_gen(&cartan, m, i)];
            }
        }
        let desc = |table: &[u32], k: usize| {
            GenSet::from_indices((0..n).filter(|&i| lengths[table[k * n + i] as usize] < lengths[k]))
        };
        let right_desc: Vec<GenSet> = (0..size).map(|k| desc(&right, k)).collect();
        let left_desc: Vec<GenSet> = (0..size).map(|k| desc(&left, k)).collect();

        let mut words: Vec<Vec<u8>> = alloc::vec![Vec::new(); size];
        let mut inv = alloc::vec![0u32; size];
        for k in 1..size {
            let s = right_desc[k].iter().next().expect("non-identity has a descent");
            let shorter = right[k * n + s] as usize;
            let mut w = words[shorter].clone();
            w.push(s as u8);
            words[k] = w;
            inv[k] = left[inv[shorter] as usize * n + s];
        }

        let mut sys = CoxeterSystem {
            cartan,
            rank: n,
            mats,
            index,
            lengths,
            right,
            left,
            inv,
            words,
            right_desc,
            left_desc,
            ideals: None,
        };
        if size <= EAGER_BRUHAT_LIMIT {
            sys.ideals = Some(sys.build_ideals());
        }
        Ok(sys)
    }

    fn build_ideals(&self) -> Vec<Vec<u64>> {
        let size = self.size();
        let blocks = size.div_ceil(64);
        let mut ideals: Vec<Vec<u64>> = Vec::with_capacity(size);
        for k in 0..size {
            let mut bits = alloc::vec![0u64; blocks];
            if k == 0 {
                bits[0] = 1;
            } else {
                // [e, w] = [e, ws] ∪ [e, ws]·s for a right descent s
                let s = self.right_desc[k].iter().next().unwrap();
                let shorter = self.right[k * self.rank + s] as usize;
                bits.copy_from_slice(&ideals[shorter]);
                for x in iter_bits(&ideals[shorter]) {
                    let xs = self.right[x * self.rank + s] as usize;
                    bits[xs / 64] |= 1 << (xs % 64);
                }
            }
            ideals.push(bits);
        }
        ideals
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn size(&self) -> usize {
        self.mats.len()
    }

    pub fn identity(&self) -> Elem {
        Elem::IDENTITY
    }

    pub fn generator(&self, i: usize) -> Result<Elem> {
        if i >= self.rank {
            return Err(Error::InvalidGenerator(i));
        }
        Ok(self.rmul(Elem::IDENTITY, i))
    }

    /// All elements, in canonical order.
    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.size()).map(Elem::from_index)
    }

    pub fn length(&self, w: Elem) -> usize {
        self.lengths[w.index()] as usize
    }

    /// `w s_i`.
    pub fn rmul(&self, w: Elem, i: usize) -> Elem {
        Elem(self.right[w.index() * self.rank + i])
    }

    /// `s_i w`.
    pub fn lmul(&self, i: usize, w: Elem) -> Elem {
        Elem(self.left[w.index() * self.rank + i])
    }

    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        self.word(y).iter().fold(x, |acc, &i| self.rmul(acc, i as usize))
    }

    pub fn inverse(&self, w: Elem) -> Elem {
        Elem(self.inv[w.index()])
    }

    /// Greedy reduced word: the last letter is the smallest right descent.
    pub fn word(&self, w: Elem) -> &[u8] {
        &self.words[w.index()]
    }

    pub fn matrix(&self, w: Elem) -> &[i32] {
        &self.mats[w.index()]
    }

    pub fn from_matrix(&self, m: &[i32]) -> Option<Elem> {
        self.index.get(m).map(|&k| Elem(k))
    }

    /// Product of an arbitrary (not necessarily reduced) word.
    pub fn from_word(&self, word: &[usize]) -> Result<Elem> {
        word.iter().try_fold(Elem::IDENTITY, |acc, &i| {
            if i >= self.rank {
                Err(Error::InvalidGenerator(i))
            } else {
                Ok(self.rmul(acc, i))
            }
        })
    }

    pub fn right_descents(&self, w: Elem) -> GenSet {
        self.right_desc[w.index()]
    }

    pub fn left_descents(&self, w: Elem) -> GenSet {
        self.left_desc[w.index()]
    }

    pub fn descents(&self, w: Elem) -> DescentData {
        DescentData { left: self.left_descents(w), right: self.right_descents(w) }
    }

    /// Generators occurring in a (any) reduced word of `w`.
    pub fn support(&self, w: Elem) -> GenSet {
        GenSet::from_indices(self.word(w).iter().map(|&i| i as usize))
    }

    pub fn in_parabolic(&self, w: Elem, j: GenSet) -> bool {
        self.support(w).is_subset(j)
    }

    pub fn parabolic_elements(&self, j: GenSet) -> Vec<Elem> {
        self.elements().filter(|&w| self.in_parabolic(w, j)).collect()
    }

    /// `w_J`, the longest element of `W_J`.
    pub fn longest_element(&self, j: GenSet) -> Elem {
        let mut w = Elem::IDENTITY;
        while let Some(i) = j.iter().find(|&i| i < self.rank && !self.right_descents(w).contains(i)) {
            w = self.rmul(w, i);
        }
        w
    }

    /// `^J W`: elements with no left descent in `J`.
    pub fn min_coset_reps(&self, j: GenSet) -> Vec<Elem> {
        self.elements().filter(|&w| !self.left_descents(w).intersects(j)).collect()
    }

    /// `W^J = (^J W)^{-1}`: elements with no right descent in `J`.
    pub fn min_coset_reps_right(&self, j: GenSet) -> Vec<Elem> {
        self.elements().filter(|&w| !self.right_descents(w).intersects(j)).collect()
    }

    pub fn is_min_left_coset_rep(&self, w: Elem, j: GenSet) -> bool {
        !self.left_descents(w).intersects(j)
    }

    /// Bruhat order.
    pub fn bruhat_leq(&self, x: Elem, w: Elem) -> bool {
        if let Some(ideals) = &self.ideals {
            let k = x.index();
            return ideals[w.index()][k / 64] >> (k % 64) & 1 == 1;
        }
        self.bruhat_leq_lifting(x, w)
    }

    /// Bruhat order by the lifting property, one descent at a time.
    pub fn bruhat_leq_lifting(&self, mut x: Elem, mut w: Elem) -> bool {
        loop {
            if self.length(x) > self.length(w) {
                return false;
            }
            if w == Elem::IDENTITY {
                return x == Elem::IDENTITY;
            }
            let s = self.right_descents(w).iter().next().unwrap();
            if self.right_descents(x).contains(s) {
                x = self.rmul(x, s);
            }
            w = self.rmul(w, s);
        }
    }

    /// `{x : x ≤ w}` in canonical order.
    pub fn lower_ideal(&self, w: Elem) -> Vec<Elem> {
        match &self.ideals {
            Some(ideals) => iter_bits(&ideals[w.index()]).map(Elem::from_index).collect(),
            None => (0..=w.index())
                .map(Elem::from_index)
                .filter(|&x| self.bruhat_leq_lifting(x, w))
                .collect(),
        }
    }

    /// Linear action on weights in this system's fundamental coordinates.
    pub fn act(&self, w: Elem, lambda: &Weight) -> Result<Weight> {
        if lambda.rank() != self.rank {
            return Err(Error::DimensionMismatch { expected: self.rank, found: lambda.rank() });
        }
        let mut v: Vec<Q> = lambda.coords().to_vec();
        for &i in self.word(w).iter().rev() {
            let c = v[i as usize];
            if c.is_zero() {
                continue;
            }
            for (k, x) in v.iter_mut().enumerate() {
                *x -= c * Q::from_integer(self.cartan[k][i as usize] as i64);
            }
        }
        Ok(Weight::new(v))
    }

    /// `w(λ + ρ) - ρ` with `ρ` the all-ones weight of this system.
    pub fn dot_act(&self, w: Elem, lambda: &Weight) -> Result<Weight> {
        let rho = Weight::from_ints(&alloc::vec![1; self.rank]);
        Ok(self.act(w, &lambda.add(&rho))?.sub(&rho))
    }

    /// `w(β)` for `β` in simple-root coordinates.
    pub fn act_on_root(&self, w: Elem, beta: &[i32]) -> Vec<i32> {
        let m = self.matrix(w);
        let n = self.rank;
        (0..n).map(|r| (0..n).map(|c| m[r * n + c] * beta[c]).sum()).collect()
    }

    /// Renders as `s2*s1*s3` (1-based), `e` for the identity.
    pub fn render(&self, w: Elem) -> String {
        render_word(self.word(w))
    }

    /// Parses `e` or `s2*s1*s3` (1-based, not necessarily reduced).
    pub fn parse_elem(&self, s: &str) -> Result<Elem> {
        let word = parse_word(s)?;
        if let Some((k, _)) = word.iter().enumerate().find(|(_, &i)| i >= self.rank) {
            return Err(Error::Parse {
                pos: s.split('*').take(k).map(|p| p.chars().count() + 1).sum(),
                msg: alloc::format!("generator s{} out of range", word[k] + 1),
            });
        }
        self.from_word(&word)
    }
}

pub fn render_word(word: &[u8]) -> String {
    if word.is_empty() {
        return "e".into();
    }
    let mut out = String::new();
    for (k, &i) in word.iter().enumerate() {
        if k > 0 {
            out.push('*');
        }
        let _ = write!(out, "s{}", i as usize + 1);
    }
    out
}

/// Parses a word into 0-based generator indices.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    if t == "e" || t == "1" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = 0;
    for part in s.split('*') {
        let lead = part.chars().take_while(|c| c.is_whitespace()).count();
        let body = part.trim();
        let err = |msg: &str| Error::Parse { pos: pos + lead, msg: msg.into() };
        let digits = body.strip_prefix('s').ok_or_else(|| err("expected `s<index>` or `e`"))?;
        let idx: usize = digits.parse().map_err(|_| err("expected a generator index"))?;
        if idx == 0 {
            return Err(err("generator indices are 1-based"));
        }
        out.push(idx - 1);
        pos += part.chars().count() + 1;
    }
    Ok(out)
}

fn iter_bits(bits: &[u64]) -> impl Iterator<Item = usize> + '_ {
    bits.iter().enumerate().flat_map(|(b, &word)| {
        let mut w = word;
        core::iter::from_fn(move || {
            if w == 0 {
                return None;
            }
            let t = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b * 64 + t)
        })
    })
}

/// `M · S_i`: column `j` becomes `col_j - a_ij col_i`.
fn right_mul_gen(cartan: &[Vec<i32>], m: &[i32], i: usize) -> Vec<i32> {
    let n = cartan.len();
    let mut out = m.to_vec();
    for j in 0..n {
        let a = cartan[i][j];
        if j != i && a != 0 {
            for r in 0..n {
                out[r * n + j] -= a * m[r * n + i];
            }
        }
    }
    for r in 0..n {
        out[r * n + i] = -m[r * n + i];
    }
    out
}

/// `S_i · M`: row `i` becomes `-row_i - Σ_{k≠i} a_ik row_k`.
fn left_mul_gen(cartan: &[Vec<i32>], m: &[i32], i: usize) -> Vec<i32> {
    let n = cartan.len();
    let mut out = m.to_vec();
    for c in 0..n {
        let mut v = -m[i * n + c];
        for k in 0..n {
            if k != i {
                v -= cartan[i][k] * m[k * n + c];
            }
        }
        out[i * n + c] = v;
    }
    out
}
