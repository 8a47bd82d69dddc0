//! Kazhdan–Lusztig polynomials and Deodhar's parabolic variants.
//!
//! `KlEngine` wraps a shared `CoxeterSystem` together with memo tables. The
//! tables sit behind `RefCell`, so an engine is meant to be owned by a single
//! worker; concurrent sweeps give each worker its own engine. Every entry is a
//! pure function of the system, so results never depend on cache state.

use alloc::collections::BTreeMap;
use alloc::rc::Rc;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cell::RefCell;

use crate::error::{Error, Result};
use crate::poly::IntPoly;
use crate::rootsys::GenSet;
use crate::weylgroup::{CoxeterSystem, Elem};

/// The parameter `y ∈ {-1, q}` of Deodhar's polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ParabolicType {
    NegOne,
    Q,
}

impl core::str::FromStr for ParabolicType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "q" => Ok(ParabolicType::Q),
            "neg1" | "-1" => Ok(ParabolicType::NegOne),
            other => Err(Error::InvalidParameter(alloc::format!(
                "parabolic type must be `q` or `neg1`, got `{other}`"
            ))),
        }
    }
}

type Column = Rc<Vec<IntPoly>>;
type PairKey = (u64, ParabolicType, u32, u32);

pub struct KlEngine {
    sys: Arc<CoxeterSystem>,
    columns: RefCell<BTreeMap<u32, Column>>,
    par_r: RefCell<BTreeMap<PairKey, IntPoly>>,
    par_p: RefCell<BTreeMap<PairKey, IntPoly>>,
}

/// Exported ordinary-KL columns: `(w, [(x, coefficients)])`, nonzero entries only.
pub type ColumnDump = Vec<(u32, Vec<(u32, Vec<i64>)>)>;

impl KlEngine {
    pub fn new(sys: Arc<CoxeterSystem>) -> Self {
        KlEngine {
            sys,
            columns: RefCell::new(BTreeMap::new()),
            par_r: RefCell::new(BTreeMap::new()),
            par_p: RefCell::new(BTreeMap::new()),
        }
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn shared_system(&self) -> Arc<CoxeterSystem> {
        self.sys.clone()
    }

    pub fn clear_cache(&self) {
        self.columns.borrow_mut().clear();
        self.par_r.borrow_mut().clear();
        self.par_p.borrow_mut().clear();
    }

    pub fn cached_columns(&self) -> usize {
        self.columns.borrow().len()
    }

    /// `P_{x,w}`.
    pub fn kl(&self, x: Elem, w: Elem) -> Result<IntPoly> {
        self.check(x)?;
        self.check(w)?;
        if !self.sys.bruhat_leq(x, w) {
            return Ok(IntPoly::zero());
        }
        Ok(self.column(w)?[x.index()].clone())
    }

    /// `μ(x, w)`: coefficient of `q^{(ℓ(w)-ℓ(x)-1)/2}` in `P_{x,w}`, zero when
    /// that exponent is not a non-negative integer.
    pub fn mu(&self, x: Elem, w: Elem) -> Result<i64> {
        let d = self.sys.length(w) as i64 - self.sys.length(x) as i64 - 1;
        if d < 0 || d % 2 != 0 {
            return Ok(0);
        }
        Ok(self.kl(x, w)?.coeff(d as usize / 2))
    }

    fn check(&self, w: Elem) -> Result<()> {
        if w.index() >= self.sys.size() {
            return Err(Error::InvalidParameter("element outside the system".into()));
        }
        Ok(())
    }

    /// The full column `x ↦ P_{x,w}`, indexed by element number.
    fn column(&self, w: Elem) -> Result<Column> {
        if let Some(c) = self.columns.borrow().get(&(w.index() as u32)) {
            return Ok(c.clone());
        }
        let sys = &*self.sys;
        let n = sys.size();
        let mut col = alloc::vec![IntPoly::zero(); n];
        if w == Elem::IDENTITY {
            col[0] = IntPoly::one();
        } else {
            let s = sys.right_descents(w).iter().next().unwrap();
            let v = sys.rmul(w, s);
            let col_v = self.column(v)?;
            let lw = sys.length(w);
            let mut corrections: Vec<(IntPoly, Column)> = Vec::new();
            for z in sys.lower_ideal(v) {
                if z == v || !sys.right_descents(z).contains(s) {
                    continue;
                }
                let d = sys.length(v) - sys.length(z) - 1;
                if d % 2 != 0 {
                    continue;
                }
                let m = col_v[z.index()].coeff(d / 2);
                if m != 0 {
                    let factor = IntPoly::monomial(m, (lw - sys.length(z)) / 2);
                    corrections.push((factor, self.column(z)?));
                }
            }
            for x in sys.lower_ideal(w) {
                let xs = sys.rmul(x, s);
                let descends = sys.right_descents(x).contains(s);
                let (a, b) = (&col_v[xs.index()], &col_v[x.index()]);
                let mut p = if descends { a + &b.shift(1) } else { &a.shift(1) + b };
                for (factor, col_z) in &corrections {
                    let pz = &col_z[x.index()];
                    if !pz.is_zero() {
                        p = &p - &(factor * pz);
                    }
                }
                if !p.has_nonnegative_coeffs() {
                    return Err(Error::Internal(alloc::format!(
                        "negative coefficient in P_{{{},{}}} = {p}",
                        sys.render(x),
                        sys.render(w)
                    )));
                }
                col[x.index()] = p;
            }
        }
        let col = Rc::new(col);
        self.columns.borrow_mut().insert(w.index() as u32, col.clone());
        Ok(col)
    }

    fn check_rep(&self, j: GenSet, u: Elem, which: &'static str) -> Result<()> {
        self.check(u)?;
        if !self.sys.is_min_left_coset_rep(u, j) {
            return Err(Error::NotCosetRep(which));
        }
        Ok(())
    }

    /// Deodhar's `R^{J,y}_{u,v}` for `u, v ∈ ^J W`.
    pub fn parabolic_r(&self, j: GenSet, y: ParabolicType, u: Elem, v: Elem) -> Result<IntPoly> {
        self.check_rep(j, u, "u")?;
        self.check_rep(j, v, "v")?;
        self.par_r_rec(j, y, u, v)
    }

    fn par_r_rec(&self, j: GenSet, y: ParabolicType, u: Elem, v: Elem) -> Result<IntPoly> {
        let sys = &*self.sys;
        if u == v {
            return Ok(IntPoly::one());
        }
        if !sys.bruhat_leq(u, v) {
            return Ok(IntPoly::zero());
        }
        let key = (j.bits(), y, u.index() as u32, v.index() as u32);
        if let Some(p) = self.par_r.borrow().get(&key) {
            return Ok(p.clone());
        }
        let s = sys.right_descents(v).iter().next().unwrap();
        let vs = sys.rmul(v, s);
        let us = sys.rmul(u, s);
        let p = if sys.right_descents(u).contains(s) {
            self.par_r_rec(j, y, us, vs)?
        } else if sys.is_min_left_coset_rep(us, j) {
            let q_minus_1 = IntPoly::from_coeffs(alloc::vec![-1, 1]);
            &(&q_minus_1 * &self.par_r_rec(j, y, u, vs)?) + &self.par_r_rec(j, y, us, vs)?.shift(1)
        } else {
            // q - 1 - y
            let factor = match y {
                ParabolicType::Q => IntPoly::constant(-1),
                ParabolicType::NegOne => IntPoly::q(),
            };
            &factor * &self.par_r_rec(j, y, u, vs)?
        };
        self.par_r.borrow_mut().insert(key, p.clone());
        Ok(p)
    }

    /// Deodhar's `P^{J,y}_{u,v}` for `u, v ∈ ^J W`. Type `q` is computed by
    /// both the alternating sum and the recursion, which must agree.
    pub fn parabolic_p(&self, j: GenSet, y: ParabolicType, u: Elem, v: Elem) -> Result<IntPoly> {
        self.check_rep(j, u, "u")?;
        self.check_rep(j, v, "v")?;
        match y {
            ParabolicType::NegOne => {
                let wj = self.sys.longest_element(j);
                self.kl(self.sys.mul(wj, u), self.sys.mul(wj, v))
            }
            ParabolicType::Q => {
                let alt = self.parabolic_p_alternating(j, u, v)?;
                let rec = self.parabolic_p_recursive(j, u, v)?;
                if alt != rec {
                    return Err(Error::Internal(alloc::format!(
                        "P^{{J,q}} mismatch for ({}, {}): alternating {alt}, recursive {rec}",
                        self.sys.render(u),
                        self.sys.render(v)
                    )));
                }
                Ok(rec)
            }
        }
    }

    /// `Σ_{w ∈ W_J} (-1)^{ℓ(w)} P_{wu,v}`.
    pub fn parabolic_p_alternating(&self, j: GenSet, u: Elem, v: Elem) -> Result<IntPoly> {
        self.check_rep(j, u, "u")?;
        self.check_rep(j, v, "v")?;
        let mut acc = IntPoly::zero();
        for w in self.sys.parabolic_elements(j) {
            let p = self.kl(self.sys.mul(w, u), v)?;
            acc = if self.sys.length(w) % 2 == 0 { &acc + &p } else { &acc - &p };
        }
        Ok(acc)
    }

    /// Type-`q` polynomial by the descent recursion alone.
    pub fn parabolic_p_recursive(&self, j: GenSet, u: Elem, v: Elem) -> Result<IntPoly> {
        self.check_rep(j, u, "u")?;
        self.check_rep(j, v, "v")?;
        self.par_pq_rec(j, u, v)
    }

    fn par_pq_rec(&self, j: GenSet, u: Elem, v: Elem) -> Result<IntPoly> {
        let sys = &*self.sys;
        if u == v {
            return Ok(IntPoly::one());
        }
        if !sys.bruhat_leq(u, v) {
            return Ok(IntPoly::zero());
        }
        let key = (j.bits(), ParabolicType::Q, u.index() as u32, v.index() as u32);
        if let Some(p) = self.par_p.borrow().get(&key) {
            return Ok(p.clone());
        }
        let s = sys.right_descents(v).iter().next().unwrap();
        let vs = sys.rmul(v, s);
        let us = sys.rmul(u, s);
        let mut p = if sys.right_descents(u).contains(s) {
            &self.par_pq_rec(j, us, vs)? + &self.par_pq_rec(j, u, vs)?.shift(1)
        } else if sys.is_min_left_coset_rep(us, j) {
            &self.par_pq_rec(j, us, vs)?.shift(1) + &self.par_pq_rec(j, u, vs)?
        } else {
            IntPoly::zero()
        };
        let lv = sys.length(v);
        for w in sys.lower_ideal(vs) {
            if w == vs
                || !sys.right_descents(w).contains(s)
                || !sys.is_min_left_coset_rep(w, j)
                || !sys.bruhat_leq(u, w)
            {
                continue;
            }
            let m = self.mu_tilde_rec(j, w, vs)?;
            if m != 0 {
                let term = &IntPoly::monomial(m, (lv - sys.length(w)) / 2) * &self.par_pq_rec(j, u, w)?;
                p = &p - &term;
            }
        }
        self.par_p.borrow_mut().insert(key, p.clone());
        Ok(p)
    }

    fn mu_tilde_rec(&self, j: GenSet, u: Elem, v: Elem) -> Result<i64> {
        let d = self.sys.length(v) as i64 - self.sys.length(u) as i64 - 1;
        if d < 0 || d % 2 != 0 {
            return Ok(0);
        }
        Ok(self.par_pq_rec(j, u, v)?.coeff(d as usize / 2))
    }

    /// `μ̃(u, v)`: coefficient of `q^{(ℓ(v)-ℓ(u)-1)/2}` in `P^{J,q}_{u,v}`.
    pub fn mu_tilde(&self, j: GenSet, u: Elem, v: Elem) -> Result<i64> {
        self.check_rep(j, u, "u")?;
        self.check_rep(j, v, "v")?;
        self.mu_tilde_rec(j, u, v)
    }

    /// Nonzero entries of every cached ordinary-KL column.
    pub fn export_columns(&self) -> ColumnDump {
        self.columns
            .borrow()
            .iter()
            .map(|(&w, col)| {
                let entries = col
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| !p.is_zero())
                    .map(|(x, p)| (x as u32, p.coeffs().to_vec()))
                    .collect();
                (w, entries)
            })
            .collect()
    }

    /// Loads columns produced by `export_columns` on an identical system.
    /// Malformed entries are rejected wholesale.
    pub fn import_columns(&self, dump: &ColumnDump) -> Result<()> {
        let n = self.sys.size();
        let mut staged = Vec::with_capacity(dump.len());
        for (w, entries) in dump {
            if *w as usize >= n {
                return Err(Error::InvalidParameter("cached element outside the system".into()));
            }
            let mut col = alloc::vec![IntPoly::zero(); n];
            for (x, coeffs) in entries {
                let slot = col
                    .get_mut(*x as usize)
                    .ok_or_else(|| Error::InvalidParameter("cached element outside the system".into()))?;
                *slot = IntPoly::from_coeffs(coeffs.clone());
            }
            staged.push((*w, Rc::new(col)));
        }
        self.columns.borrow_mut().extend(staged);
        Ok(())
    }
}
