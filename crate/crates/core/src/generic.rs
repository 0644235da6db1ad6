//! Generic and weakly generic weights, and the partial order on weights.

use std::collections::BTreeMap;

use num_traits::Signed;
use serde::Serialize;

use crate::borel::Borel;
use crate::error::{Error, Result};
use crate::linalg;
use crate::rootdata::{pair_coroot, RootSystem};
use crate::weight::{is_int, Weight, Q};
use crate::weyl::{chamber, is_open_chamber, rho0, IntegralData, WeylGroup};

pub const DEFAULT_GAMMA_CAP: usize = 24;

/// Multiset of weights.
pub type Multiset = BTreeMap<Weight, u64>;

/// All subset sums of `roots`, with multiplicity.
pub fn subset_sums(zero: &Weight, roots: &[Weight], cap: usize) -> Result<Multiset> {
    if roots.len() > cap {
        return Err(Error::CapExceeded { what: "number of odd roots in subset sums".into(), cap });
    }
    let mut acc: Multiset = BTreeMap::from([(zero.clone(), 1)]);
    for r in roots {
        let mut next = acc.clone();
        for (w, m) in &acc {
            *next.entry(w + r).or_insert(0) += m;
        }
        acc = next;
    }
    Ok(acc)
}

/// λ ≥ μ iff λ − μ lies in the Z≥0-span of a linearly independent set.
#[derive(Clone, Debug)]
pub struct Order {
    pub basis: Vec<Weight>,
}

impl Order {
    /// Ordered by the simple roots of a Borel.
    pub fn of(b: &Borel) -> Order {
        Order { basis: b.simple.clone() }
    }

    pub fn geq(&self, a: &Weight, b: &Weight) -> bool {
        match linalg::coordinates(&self.basis, &(a - b)) {
            Some(c) => c.iter().all(|x| is_int(x) && !x.is_negative()),
            None => false,
        }
    }

    pub fn gt(&self, a: &Weight, b: &Weight) -> bool {
        a != b && self.geq(a, b)
    }
}

/// Γ (subset sums of negative odd roots) and Γ̃ (of all odd roots) for a Borel.
#[derive(Clone, Debug)]
pub struct GenericTester {
    pub gamma: Multiset,
    pub gamma_tilde: Multiset,
    /// min and max of ⟨γ, α∨⟩ over γ ∈ Γ̃, per positive even root
    ranges: Vec<(Q, Q)>,
    rho0: Weight,
    rs: RootSystem,
}

impl GenericTester {
    pub fn new(rs: &RootSystem, b: &Borel, cap: usize) -> Result<GenericTester> {
        let neg: Vec<Weight> = b.odd_positive.iter().map(|r| -r).collect();
        let zero = rs.zero();
        let gamma = subset_sums(&zero, &neg, cap)?;
        let gamma_tilde = subset_sums(&zero, &rs.odd, cap)?;
        let ranges = rs
            .even_positive
            .iter()
            .map(|a| {
                let vals = gamma_tilde.keys().map(|g| pair_coroot(g, a));
                let lo = vals.clone().min().unwrap();
                let hi = vals.max().unwrap();
                (lo, hi)
            })
            .collect();
        Ok(GenericTester { gamma, gamma_tilde, ranges, rho0: rho0(rs), rs: rs.clone() })
    }

    /// λ + Γ̃ lies in a single open chamber.
    pub fn is_weakly_generic(&self, l: &Weight) -> bool {
        let x = l + &self.rho0;
        self.rs.even_positive.iter().zip(&self.ranges).all(|(a, (lo, hi))| {
            let v = pair_coroot(&x, a);
            (v + lo).is_positive() || (v + hi).is_negative()
        })
    }

    /// Direct check over every element of λ + Γ̃.
    pub fn is_weakly_generic_naive(&self, l: &Weight) -> bool {
        let mut first: Option<Vec<i8>> = None;
        for g in self.gamma_tilde.keys() {
            let c = chamber(&self.rs, &(l + g));
            if !is_open_chamber(&c) {
                return false;
            }
            match &first {
                None => first = Some(c),
                Some(f) if *f != c => return false,
                _ => {}
            }
        }
        true
    }

    /// Every element of λ + Γ is weakly generic.
    pub fn is_generic(&self, l: &Weight) -> bool {
        self.gamma.keys().all(|g| self.is_weakly_generic(&(l + g)))
    }

    /// is_generic at every w·λ.
    pub fn is_generic_orbitwise(&self, w: &WeylGroup, rho: &Weight, l: &Weight) -> bool {
        (0..w.size()).all(|e| self.is_generic(&w.shifted(e, l, rho)))
    }
}

/// No u ∈ W_λ with u·λ > λ.
pub fn is_orbit_maximal(rs: &RootSystem, b: &Borel, w: &WeylGroup, l: &Weight) -> Result<bool> {
    let d = IntegralData::new(rs, w, l)?;
    let rho = b.rho(rs).rho;
    let ord = Order::of(b);
    Ok(d.embed.iter().all(|&u| !ord.gt(&w.shifted(u, l, &rho), l)))
}

#[derive(Clone, Debug, Serialize)]
pub struct GenericReport {
    pub weakly_generic: bool,
    pub generic: bool,
    pub orbit_maximal: bool,
    pub chamber: Vec<i8>,
}

pub fn report(rs: &RootSystem, b: &Borel, w: &WeylGroup, l: &Weight, cap: usize) -> Result<GenericReport> {
    let t = GenericTester::new(rs, b, cap)?;
    Ok(GenericReport {
        weakly_generic: t.is_weakly_generic(l),
        generic: t.is_generic(l),
        orbit_maximal: is_orbit_maximal(rs, b, w, l)?,
        chamber: chamber(rs, l),
    })
}
