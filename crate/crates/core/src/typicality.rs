//! Atypicality, regularity and the two lemmas on atypical roots of
//! regular weights.

use num_traits::Zero;
use serde::Serialize;

use crate::borel::Borel;
use crate::error::{Error, Result};
use crate::rootdata::{form, pair_coroot, Kind, RootSystem};
use crate::weight::Weight;
use crate::weyl::rho0;

/// ᾱ for a root εi − εj of q(n): εi + εj.
pub fn bar(alpha: &Weight) -> Weight {
    Weight::new(alpha.eps.iter().map(|x| if *x < Zero::zero() { -x } else { *x }).collect(), alpha.del.clone())
}

/// Positive atypical roots of λ with respect to b.
pub fn atypical_roots(rs: &RootSystem, b: &Borel, l: &Weight) -> Vec<Weight> {
    if rs.family.kind == Kind::Queer {
        return rs.even_positive.iter().filter(|a| form(l, &bar(a)).is_zero()).cloned().collect();
    }
    let x = l + &b.rho(rs).rho;
    b.odd_positive.iter().filter(|g| rs.is_isotropic(g) && form(&x, g).is_zero()).cloned().collect()
}

pub fn is_typical(rs: &RootSystem, b: &Borel, l: &Weight) -> bool {
    atypical_roots(rs, b, l).is_empty()
}

/// ⟨λ+ρ, γ⟩ ≠ 0 for all positive odd γ. For q(n) only the approximate test
/// (typical and every ⟨λ, εi⟩ ≠ 0) is available, and only on request.
pub fn is_strongly_typical(rs: &RootSystem, b: &Borel, l: &Weight, allow_approx: bool) -> Result<bool> {
    if rs.family.kind == Kind::Queer {
        if !allow_approx {
            return Err(Error::Unsupported("strong typicality for q(n) is only available as an approximation".into()));
        }
        return Ok(is_typical(rs, b, l) && l.eps.iter().all(|x| !x.is_zero()));
    }
    let x = l + &b.rho(rs).rho;
    Ok(b.odd_positive.iter().all(|g| !form(&x, g).is_zero()))
}

/// ⟨λ + ρ0, α∨⟩ ≠ 0 for every even root.
pub fn is_regular(rs: &RootSystem, l: &Weight) -> bool {
    let x = l + &rho0(rs);
    rs.even_positive.iter().all(|a| !pair_coroot(&x, a).is_zero())
}

/// ⟨λ + ρ, α∨⟩ ≠ 0 for every even root.
pub fn is_dot_regular(rs: &RootSystem, b: &Borel, l: &Weight) -> bool {
    let x = l + &b.rho(rs).rho;
    rs.even_positive.iter().all(|a| !pair_coroot(&x, a).is_zero())
}

/// For dot-regular λ: no two atypical roots γ, γ' with ⟨γ, γ'⟩ ≠ 0.
pub fn no_linked_atypical_pair(rs: &RootSystem, b: &Borel, l: &Weight) -> Result<bool> {
    if !is_dot_regular(rs, b, l) {
        return Err(Error::Precondition("weight is not regular".into()));
    }
    let at = atypical_roots(rs, b, l);
    Ok(at.iter().enumerate().all(|(i, g)| at[i + 1..].iter().all(|h| form(g, h).is_zero())))
}

/// For regular λ and λ + sign·γ with γ atypical for λ: the atypical sets agree.
pub fn atypicality_preserved(rs: &RootSystem, b: &Borel, l: &Weight, gamma: &Weight, sign: i64) -> Result<bool> {
    let at = atypical_roots(rs, b, l);
    if !at.contains(gamma) {
        return Err(Error::Precondition("root is not atypical for the weight".into()));
    }
    let shifted = l + &gamma.scale(crate::weight::q(sign));
    if !is_dot_regular(rs, b, l) || !is_dot_regular(rs, b, &shifted) {
        return Err(Error::Precondition("weight is not regular".into()));
    }
    Ok(atypical_roots(rs, b, &shifted) == at)
}

#[derive(Clone, Debug, Serialize)]
pub struct TypicalityReport {
    pub typical: bool,
    pub atypical_roots: Vec<String>,
    pub strongly_typical: Option<bool>,
    pub strongly_typical_is_approximate: bool,
    pub regular: bool,
    pub dot_regular: bool,
}

pub fn report(rs: &RootSystem, b: &Borel, l: &Weight, allow_approx: bool) -> TypicalityReport {
    let at = atypical_roots(rs, b, l);
    TypicalityReport {
        typical: at.is_empty(),
        atypical_roots: at.iter().map(crate::rootdata::root_literal).collect(),
        strongly_typical: is_strongly_typical(rs, b, l, allow_approx).ok(),
        strongly_typical_is_approximate: rs.family.kind == Kind::Queer,
        regular: is_regular(rs, l),
        dot_regular: is_dot_regular(rs, b, l),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{parse_linear, Family};

    fn setup(f: &str) -> (RootSystem, Borel) {
        let rs = RootSystem::new(f.parse::<Family>().unwrap());
        let b = Borel::distinguished(&rs);
        (rs, b)
    }

    #[test]
    fn gl21_zero_is_atypical_for_e2_minus_d1() {
        let (rs, b) = setup("gl:2,1");
        let at = atypical_roots(&rs, &b, &rs.zero());
        assert_eq!(at, vec![parse_linear("e2-d1", (2, 1)).unwrap()]);
    }

    #[test]
    fn q2_atypicality_uses_bar() {
        let (rs, b) = setup("q:2");
        assert!(!is_typical(&rs, &b, &Weight::from_ints(&[3, -3], &[])));
        assert!(is_typical(&rs, &b, &Weight::from_ints(&[3, 1], &[])));
        assert!(is_strongly_typical(&rs, &b, &Weight::from_ints(&[3, 1], &[]), false).is_err());
        assert_eq!(is_strongly_typical(&rs, &b, &Weight::from_ints(&[3, 0], &[]), true), Ok(false));
    }

    #[test]
    fn osp_strong_typicality_sees_nonisotropic_roots() {
        let (rs, b) = setup("osp:1,2");
        // ρ = δ/2, so λ = −δ/2 gives ⟨λ+ρ, δ⟩ = 0
        let l = Weight::new(vec![], vec![crate::weight::qf(-1, 2)]);
        assert!(is_typical(&rs, &b, &l));
        assert_eq!(is_strongly_typical(&rs, &b, &l, false), Ok(false));
    }

    #[test]
    fn regularity_differs_between_shifts_for_osp() {
        let (rs, b) = setup("osp:1,2");
        // ρ0 = δ, ρ = δ/2
        let l = Weight::from_ints(&[], &[-1]);
        assert!(!is_regular(&rs, &l));
        assert!(is_dot_regular(&rs, &b, &l));
    }

    #[test]
    fn lemma_preconditions() {
        let (rs, b) = setup("gl:2,1");
        let sing = Weight::from_ints(&[0, 1], &[0]);
        assert!(no_linked_atypical_pair(&rs, &b, &sing).is_err());
        let g = parse_linear("e1-d1", (2, 1)).unwrap();
        assert!(atypicality_preserved(&rs, &b, &rs.zero(), &g, 1).is_err());
    }
}
