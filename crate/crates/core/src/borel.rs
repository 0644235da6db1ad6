//! Borel subalgebras with a fixed even part, odd reflections and
//! highest weight tracking.

use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{form, root_literal, Kind, RootSystem};
use crate::weight::{q, qf, Weight};

/// A Borel subalgebra, recorded by its positive odd roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Borel {
    pub odd_positive: Vec<Weight>,
    pub simple: Vec<Weight>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Rho {
    pub rho0: Weight,
    pub rho1: Weight,
    pub rho: Weight,
}

/// One slot of a rank order: an ε or δ coordinate, optionally negated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    E(usize),
    D(usize),
    NegE(usize),
}

impl Borel {
    fn build(rs: &RootSystem, mut odd_positive: Vec<Weight>) -> Borel {
        odd_positive.sort();
        odd_positive.dedup();
        let mut all = rs.even_positive.clone();
        all.extend(odd_positive.iter().cloned());
        let simple = RootSystem::indecomposables(&all);
        Borel { odd_positive, simple }
    }

    pub fn distinguished(rs: &RootSystem) -> Borel {
        Borel::build(rs, rs.odd_positive.clone())
    }

    /// Positive system cut out by a linear functional (Euclidean pairing).
    pub fn from_functional(rs: &RootSystem, f: &Weight) -> Result<Borel> {
        let ev = |w: &Weight| -> crate::weight::Q {
            w.eps.iter().zip(&f.eps).chain(w.del.iter().zip(&f.del)).map(|(a, b)| a * b).sum()
        };
        for a in &rs.even_positive {
            if ev(a) <= Zero::zero() {
                return Err(Error::Precondition(format!(
                    "functional does not preserve the even positive root {}",
                    root_literal(a)
                )));
            }
        }
        let mut pos = Vec::new();
        for r in &rs.odd {
            let v = ev(r);
            if v.is_zero() {
                return Err(Error::Precondition("functional vanishes on an odd root".into()));
            }
            if v > Zero::zero() {
                pos.push(r.clone());
            }
        }
        Ok(Borel::build(rs, pos))
    }

    /// Positive system from a descending order of coordinates, all of them positive.
    pub fn from_rank_order(rs: &RootSystem, order: &[Slot]) -> Result<Borel> {
        let mut f = rs.zero();
        let len = order.len() as i64;
        for (k, s) in order.iter().enumerate() {
            let v = q(len - k as i64);
            match *s {
                Slot::E(i) => f.eps[i] = v,
                Slot::NegE(i) => f.eps[i] = -v,
                Slot::D(j) => f.del[j] = v,
            }
        }
        Borel::from_functional(rs, &f)
    }

    /// gl: all δ above all ε. For gl(2|1) the simple roots are δ1−ε1, ε1−ε2.
    pub fn anti_distinguished(rs: &RootSystem) -> Result<Borel> {
        let (ne, nd) = rs.dims();
        let order: Vec<Slot> = (0..nd).map(Slot::D).chain((0..ne).map(Slot::E)).collect();
        Borel::from_rank_order(rs, &order)
    }

    /// osp: δ1 > … > δ(n−1) > ε1 > … > εd > δn.
    pub fn osp_hat(rs: &RootSystem) -> Result<Borel> {
        let (ne, nd) = rs.dims();
        let order: Vec<Slot> = (0..nd - 1)
            .map(Slot::D)
            .chain((0..ne).map(Slot::E))
            .chain(std::iter::once(Slot::D(nd - 1)))
            .collect();
        Borel::from_rank_order(rs, &order)
    }

    /// osp: ε1 > … > εd > δ1 > … > δn.
    pub fn osp_tilde(rs: &RootSystem) -> Result<Borel> {
        let (ne, nd) = rs.dims();
        let order: Vec<Slot> = (0..ne).map(Slot::E).chain((0..nd).map(Slot::D)).collect();
        Borel::from_rank_order(rs, &order)
    }

    /// Checks that the set is a Borel in the class of the distinguished one.
    pub fn from_odd_positive(rs: &RootSystem, odd_positive: Vec<Weight>) -> Result<Borel> {
        let set: HashSet<&Weight> = odd_positive.iter().collect();
        for r in &rs.odd {
            if set.contains(r) == set.contains(&-r) {
                return Err(Error::Precondition(format!(
                    "exactly one of ±{} must be positive",
                    root_literal(r)
                )));
            }
        }
        if set.len() != odd_positive.len() || odd_positive.iter().any(|r| !rs.is_odd_root(r)) {
            return Err(Error::Precondition("not a set of odd roots".into()));
        }
        let b = Borel::build(rs, odd_positive);
        let d = Borel::distinguished(rs);
        path(rs, &d, &b)?;
        Ok(b)
    }

    pub fn positive(&self, rs: &RootSystem) -> Vec<Weight> {
        let mut all = rs.even_positive.clone();
        all.extend(self.odd_positive.iter().cloned());
        all.sort();
        all.dedup();
        all
    }

    pub fn is_positive(&self, rs: &RootSystem, w: &Weight) -> bool {
        self.odd_positive.binary_search(w).is_ok() || rs.even_positive.contains(w)
    }

    pub fn is_simple(&self, w: &Weight) -> bool {
        self.simple.binary_search(w).is_ok()
    }

    /// Isotropic simple roots, in increasing order.
    pub fn isotropic_simple(&self, rs: &RootSystem) -> Vec<Weight> {
        if rs.family.kind == Kind::Queer {
            return vec![];
        }
        self.simple.iter().filter(|a| rs.is_odd_root(a) && rs.is_isotropic(a)).cloned().collect()
    }

    /// α is simple, or α/2 is a simple odd root.
    pub fn has_simple_or_half(&self, alpha: &Weight) -> bool {
        self.is_simple(alpha) || self.is_simple(&alpha.scale(qf(1, 2)))
    }

    pub fn rho(&self, rs: &RootSystem) -> Rho {
        let half = qf(1, 2);
        let mut rho0 = rs.zero();
        for a in &rs.even_positive {
            rho0 += a;
        }
        let mut rho1 = rs.zero();
        for a in &self.odd_positive {
            rho1 += a;
        }
        let rho0 = rho0.scale(half);
        let rho1 = rho1.scale(half);
        let rho = &rho0 - &rho1;
        Rho { rho0, rho1, rho }
    }

    pub fn odd_reflect(&self, rs: &RootSystem, gamma: &Weight) -> Result<Borel> {
        if rs.family.kind == Kind::Queer {
            return Err(Error::Unsupported("odd reflections for q(n)".into()));
        }
        if !self.is_simple(gamma) || !rs.is_odd_root(gamma) {
            return Err(Error::NotSimple(root_literal(gamma)));
        }
        if !rs.is_isotropic(gamma) {
            return Err(Error::NotIsotropic(root_literal(gamma)));
        }
        let ng = -gamma;
        let pos = self.odd_positive.iter().map(|r| if r == gamma { ng.clone() } else { r.clone() }).collect();
        Ok(Borel::build(rs, pos))
    }

    /// Simple roots as readable literals.
    pub fn simple_literals(&self) -> Vec<String> {
        self.simple.iter().map(root_literal).collect()
    }
}

/// All Borels reachable from the distinguished one by odd reflections.
pub fn enumerate(rs: &RootSystem, cap: usize) -> Result<Vec<Borel>> {
    let start = Borel::distinguished(rs);
    let mut seen: HashMap<Borel, ()> = HashMap::new();
    let mut out = vec![start.clone()];
    seen.insert(start.clone(), ());
    let mut queue = VecDeque::from([start]);
    while let Some(b) = queue.pop_front() {
        for g in b.isotropic_simple(rs) {
            let nb = b.odd_reflect(rs, &g)?;
            if seen.insert(nb.clone(), ()).is_none() {
                if out.len() >= cap {
                    return Err(Error::CapExceeded { what: "Borel enumeration".into(), cap });
                }
                out.push(nb.clone());
                queue.push_back(nb);
            }
        }
    }
    Ok(out)
}

/// Greedy odd reflection path: at each step the least isotropic simple root
/// of the current Borel that is negative for the target.
pub fn path(rs: &RootSystem, from: &Borel, to: &Borel) -> Result<Vec<Weight>> {
    let mut cur = from.clone();
    let mut out = Vec::new();
    let bound = rs.odd.len() / 2 + 1;
    while cur != *to {
        let g = cur
            .isotropic_simple(rs)
            .into_iter()
            .find(|g| to.odd_positive.binary_search(g).is_err())
            .ok_or_else(|| Error::InvalidPath("target is not reachable by odd reflections".into()))?;
        cur = cur.odd_reflect(rs, &g)?;
        out.push(g);
        if out.len() > bound {
            return Err(Error::InvalidPath("path does not terminate".into()));
        }
    }
    Ok(out)
}

/// Borel at the end of a path, validating each step.
pub fn follow(rs: &RootSystem, from: &Borel, path: &[Weight]) -> Result<Borel> {
    let mut cur = from.clone();
    for g in path {
        cur = cur.odd_reflect(rs, g)?;
    }
    Ok(cur)
}

/// Negated reversed path, leading back to the starting Borel.
pub fn reverse_path(path: &[Weight]) -> Vec<Weight> {
    path.iter().rev().map(|g| -g).collect()
}

/// Highest weight of L(λ) with respect to the Borel at the end of the path.
pub fn track(rs: &RootSystem, from: &Borel, path: &[Weight], lambda: &Weight) -> Result<Weight> {
    let mut cur = from.clone();
    let mut rho = from.rho(rs).rho;
    let mut l = lambda.clone();
    for g in path {
        let next = cur.odd_reflect(rs, g)?;
        if !form(&(&l + &rho), g).is_zero() {
            l -= g;
        }
        rho += g;
        cur = next;
    }
    Ok(l)
}

/// Same result as [`track`], computed in closed form: the steps where λ
/// survives are those γ(k) with ⟨λ + ρ + Σ γ(j), γ(k)⟩ = 0, the sum over
/// earlier surviving steps.
pub fn track_cumulative(rs: &RootSystem, from: &Borel, path: &[Weight], lambda: &Weight) -> Weight {
    let base = lambda + &from.rho(rs).rho;
    let mut acc = rs.zero();
    let mut lost = rs.zero();
    for g in path {
        if form(&(&base + &acc), g).is_zero() {
            acc += g;
        } else {
            lost += g;
        }
    }
    lambda - &lost
}
