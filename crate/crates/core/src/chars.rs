//! Finite weight multisets standing in for characters: Verma restrictions,
//! the twisted Verma identity, generic restrictions and the q(n)
//! decomposition of integral weakly generic simples.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::borel::Borel;
use crate::error::{Error, Result};
use crate::generic::{subset_sums, GenericTester};
use crate::rootdata::{form, reflect, Kind, RootSystem};
use crate::typicality::bar;
use crate::weight::Weight;
use crate::weyl::{rho0, WeylGroup};

/// Weights with positive multiplicities.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightMultiset(pub BTreeMap<Weight, u64>);

impl WeightMultiset {
    pub fn new() -> WeightMultiset {
        WeightMultiset::default()
    }

    pub fn insert(&mut self, w: Weight, m: u64) {
        if m > 0 {
            *self.0.entry(w).or_insert(0) += m;
        }
    }

    pub fn total(&self) -> u64 {
        self.0.values().sum()
    }

    pub fn distinct(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, w: &Weight) -> bool {
        self.0.contains_key(w)
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.0.get(w).copied().unwrap_or(0)
    }

    pub fn map(&self, f: impl Fn(&Weight) -> Weight) -> WeightMultiset {
        let mut out = WeightMultiset::new();
        for (w, m) in &self.0 {
            out.insert(f(w), *m);
        }
        out
    }

    pub fn translate(&self, by: &Weight) -> WeightMultiset {
        self.map(|w| w + by)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, &u64)> {
        self.0.iter()
    }
}

#[derive(Serialize)]
struct Entry<'a> {
    weight: &'a Weight,
    multiplicity: u64,
}

impl Serialize for WeightMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.0.iter().map(|(weight, &multiplicity)| Entry { weight, multiplicity }))
    }
}

/// Highest weights of a Verma flag of the restriction, with an unnamed common
/// multiplicity for q(n).
#[derive(Clone, Debug, Serialize)]
pub struct Restriction {
    pub weights: WeightMultiset,
    pub symbolic_factor: Option<String>,
}

fn gamma(rs: &RootSystem, b: &Borel, cap: usize) -> Result<WeightMultiset> {
    let neg: Vec<Weight> = b.odd_positive.iter().map(|r| -r).collect();
    Ok(WeightMultiset(subset_sums(&rs.zero(), &neg, cap)?))
}

fn factor(rs: &RootSystem) -> Option<String> {
    (rs.family.kind == Kind::Queer).then(|| "k".to_string())
}

/// {λ + Σ_{β∈I} β : I ⊆ Δ1⁻}.
pub fn verma_restriction_weights(rs: &RootSystem, b: &Borel, l: &Weight, cap: usize) -> Result<Restriction> {
    Ok(Restriction { weights: gamma(rs, b, cap)?.translate(l), symbolic_factor: factor(rs) })
}

fn circle(rs: &RootSystem, alpha: &Weight, x: &Weight) -> Weight {
    let r0 = rho0(rs);
    &reflect(&(x + &r0), alpha) - &r0
}

/// s_α∘(λ+Γ) = s_α·λ + Γ as multisets.
pub fn twisted_verma_character_equal(rs: &RootSystem, b: &Borel, l: &Weight, alpha: usize, cap: usize) -> Result<bool> {
    let a = rs
        .even_simple
        .get(alpha)
        .ok_or_else(|| Error::Precondition(format!("no even simple root {alpha}")))?;
    let g = gamma(rs, b, cap)?;
    let rho = b.rho(rs).rho;
    let lhs = g.translate(l).map(|x| circle(rs, a, x));
    let dot = &reflect(&(l + &rho), a) - &rho;
    Ok(lhs == g.translate(&dot))
}

/// w∘(λ+Γ) = w·λ + Γ for every w ∈ W.
pub fn verma_equivariance(rs: &RootSystem, b: &Borel, w: &WeylGroup, l: &Weight, cap: usize) -> Result<bool> {
    let g = gamma(rs, b, cap)?;
    let rho = b.rho(rs).rho;
    let r0 = rho0(rs);
    let base = g.translate(l);
    Ok((0..w.size()).all(|e| base.map(|x| w.shifted(e, x, &r0)) == g.translate(&w.shifted(e, l, &rho))))
}

/// For weakly generic λ the restriction is completely reducible with highest
/// weights among λ + Γ; this returns that bound.
pub fn generic_restriction_decomposition(
    rs: &RootSystem,
    b: &Borel,
    tester: &GenericTester,
    l: &Weight,
    cap: usize,
) -> Result<Restriction> {
    if !tester.is_weakly_generic(l) {
        return Err(Error::Precondition("weight is not weakly generic".into()));
    }
    verma_restriction_weights(rs, b, l, cap)
}

/// Which pairing selects S_λ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Pairing {
    /// ⟨β̄, λ⟩, the pairing that governs q(n) atypicality
    Bar,
    /// ⟨β, λ⟩
    Plain,
}

#[derive(Clone, Debug, Serialize)]
pub struct PenkovDecomposition {
    pub pairing: Pairing,
    pub s_lambda: Vec<String>,
    pub weights: WeightMultiset,
    pub symbolic_factor: String,
}

/// S_λ = {β ∈ Δ1⁺ : pairing(β, λ) ≠ 0} and {λ − Σ_{β∈I} β : I ⊆ S_λ}.
pub fn penkov_decomposition_q(
    rs: &RootSystem,
    tester: &GenericTester,
    l: &Weight,
    pairing: Pairing,
    cap: usize,
) -> Result<PenkovDecomposition> {
    if rs.family.kind != Kind::Queer {
        return Err(Error::Precondition("only for q(n)".into()));
    }
    if !l.is_integral() {
        return Err(Error::Precondition("weight is not integral".into()));
    }
    if !tester.is_weakly_generic(l) {
        return Err(Error::Precondition("weight is not weakly generic".into()));
    }
    let s: Vec<Weight> = Borel::distinguished(rs)
        .odd_positive
        .iter()
        .filter(|beta| {
            let p = match pairing {
                Pairing::Bar => form(&bar(beta), l),
                Pairing::Plain => form(beta, l),
            };
            p != num_traits::Zero::zero()
        })
        .cloned()
        .collect();
    let neg: Vec<Weight> = s.iter().map(|r| -r).collect();
    let weights = WeightMultiset(subset_sums(&rs.zero(), &neg, cap)?).translate(l);
    Ok(PenkovDecomposition {
        pairing,
        s_lambda: s.iter().map(crate::rootdata::root_literal).collect(),
        weights,
        symbolic_factor: "k".into(),
    })
}
