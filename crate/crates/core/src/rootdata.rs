//! Families, the bilinear form and root systems.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg;
use crate::weight::{is_int, q, Weight, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Gl,
    Sl,
    Osp,
    Queer,
}

/// A family together with its rank data.
///
/// For `Osp` the field `n` counts δ-coordinates, so `osp(m|2n)`.
/// For `Queer` only `m` is used.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Family {
    pub kind: Kind,
    pub m: usize,
    pub n: usize,
}

impl Family {
    pub fn gl(m: usize, n: usize) -> Result<Family> {
        if m == 0 && n == 0 {
            return Err(Error::InvalidFamily("gl(0|0)".into()));
        }
        Ok(Family { kind: Kind::Gl, m, n })
    }

    pub fn sl(m: usize, n: usize) -> Result<Family> {
        if m == n {
            return Err(Error::InvalidFamily(format!("sl({m}|{n}) with m = n")));
        }
        Ok(Family { kind: Kind::Sl, m, n })
    }

    /// `osp(m|two_n)`.
    pub fn osp(m: usize, two_n: usize) -> Result<Family> {
        if two_n == 0 || two_n % 2 == 1 || m == 0 {
            return Err(Error::InvalidFamily(format!("osp({m}|{two_n})")));
        }
        Ok(Family { kind: Kind::Osp, m, n: two_n / 2 })
    }

    pub fn queer(n: usize) -> Result<Family> {
        if n == 0 {
            return Err(Error::InvalidFamily("q(0)".into()));
        }
        Ok(Family { kind: Kind::Queer, m: n, n: 0 })
    }

    pub fn eps_len(&self) -> usize {
        match self.kind {
            Kind::Osp => self.m / 2,
            _ => self.m,
        }
    }

    pub fn del_len(&self) -> usize {
        match self.kind {
            Kind::Queer => 0,
            _ => self.n,
        }
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.eps_len(), self.del_len())
    }

    pub fn is_type_one(&self) -> bool {
        matches!(self.kind, Kind::Gl | Kind::Sl) || (self.kind == Kind::Osp && self.m == 2)
    }

    /// The supertrace weight Σε_i − Σδ_j, orthogonal to every root of gl.
    pub fn supertrace(&self) -> Weight {
        let mut w = self.zero();
        w.eps.iter_mut().for_each(|x| *x = q(1));
        w.del.iter_mut().for_each(|x| *x = q(-1));
        w
    }

    pub fn validate(&self, w: &Weight) -> Result<()> {
        if w.dims() != (self.eps_len(), self.del_len()) {
            return Err(Error::DimensionMismatch {
                exp_eps: self.eps_len(),
                exp_del: self.del_len(),
                got_eps: w.eps.len(),
                got_del: w.del.len(),
            });
        }
        if self.kind == Kind::Sl && !w.coord_sum().is_zero() {
            return Err(Error::TraceConstraint);
        }
        Ok(())
    }

    /// Representative of a gl weight in sl coordinates (coordinate sum zero).
    pub fn sl_normalize(&self, w: &Weight) -> Weight {
        if self.kind != Kind::Sl {
            return w.clone();
        }
        let c = w.coord_sum() / q(self.m as i64 - self.n as i64);
        w - &self.supertrace().scale(c)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            Kind::Gl => write!(f, "gl:{},{}", self.m, self.n),
            Kind::Sl => write!(f, "sl:{},{}", self.m, self.n),
            Kind::Osp => write!(f, "osp:{},{}", self.m, 2 * self.n),
            Kind::Queer => write!(f, "q:{}", self.m),
        }
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        let bad = || Error::Parse(format!("bad family '{s}'"));
        let (name, args) = s.trim().split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (name.to_ascii_lowercase().as_str(), nums.as_slice()) {
            ("gl", [m, n]) => Family::gl(*m, *n),
            ("sl", [m, n]) => Family::sl(*m, *n),
            ("osp", [m, n]) => Family::osp(*m, *n),
            ("q", [n]) => Family::queer(*n),
            _ => Err(bad()),
        }
    }
}

impl Serialize for Family {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// ⟨ε_i,ε_j⟩ = δ_ij, ⟨δ_i,δ_j⟩ = −δ_ij, ⟨ε,δ⟩ = 0.
pub fn form(a: &Weight, b: &Weight) -> Q {
    let e: Q = a.eps.iter().zip(&b.eps).map(|(x, y)| x * y).sum();
    let d: Q = a.del.iter().zip(&b.del).map(|(x, y)| x * y).sum();
    e - d
}

/// ⟨λ, α∨⟩ for a non-isotropic α.
pub fn pair_coroot(l: &Weight, alpha: &Weight) -> Q {
    let n = form(alpha, alpha);
    assert!(!n.is_zero(), "coroot of an isotropic root");
    q(2) * form(l, alpha) / n
}

/// s_α(λ) = λ − ⟨λ, α∨⟩ α.
pub fn reflect(l: &Weight, alpha: &Weight) -> Weight {
    l - &alpha.scale(pair_coroot(l, alpha))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Root {
    pub weight: Weight,
    pub parity: Parity,
    pub isotropic: bool,
}

/// Root data of a family. Even positive roots are fixed once and for all.
#[derive(Clone, Debug)]
pub struct RootSystem {
    pub family: Family,
    /// Simple roots of Δ0⁺ in generator order.
    pub even_simple: Vec<Weight>,
    pub even_positive: Vec<Weight>,
    /// All odd roots (both signs).
    pub odd: Vec<Weight>,
    /// The distinguished choice of positive odd roots.
    pub odd_positive: Vec<Weight>,
}

impl RootSystem {
    pub fn new(family: Family) -> RootSystem {
        let (ne, nd) = (family.eps_len(), family.del_len());
        let e = |i: usize| Weight::eps_unit(ne, nd, i);
        let d = |j: usize| Weight::del_unit(ne, nd, j);
        let mut even_simple = Vec::new();
        let mut even_positive = Vec::new();
        let mut odd = Vec::new();
        let mut odd_positive = Vec::new();
        match family.kind {
            Kind::Gl | Kind::Sl | Kind::Queer => {
                for i in 0..ne {
                    for k in i + 1..ne {
                        even_positive.push(e(i) - e(k));
                    }
                }
                for j in 0..nd {
                    for k in j + 1..nd {
                        even_positive.push(d(j) - d(k));
                    }
                }
                for i in 0..ne.saturating_sub(1) {
                    even_simple.push(e(i) - e(i + 1));
                }
                for j in 0..nd.saturating_sub(1) {
                    even_simple.push(d(j) - d(j + 1));
                }
                if family.kind == Kind::Queer {
                    for i in 0..ne {
                        for k in 0..ne {
                            if i != k {
                                odd.push(e(i) - e(k));
                            }
                        }
                    }
                    odd_positive = even_positive.clone();
                } else {
                    for i in 0..ne {
                        for j in 0..nd {
                            odd.push(e(i) - d(j));
                            odd.push(d(j) - e(i));
                            odd_positive.push(e(i) - d(j));
                        }
                    }
                }
            }
            Kind::Osp => {
                let odd_m = family.m % 2 == 1;
                for i in 0..ne {
                    for k in i + 1..ne {
                        even_positive.push(e(i) - e(k));
                        even_positive.push(e(i) + e(k));
                    }
                    if odd_m {
                        even_positive.push(e(i));
                    }
                }
                for j in 0..nd {
                    for k in j + 1..nd {
                        even_positive.push(d(j) - d(k));
                        even_positive.push(d(j) + d(k));
                    }
                    even_positive.push(d(j).scale(q(2)));
                }
                for i in 0..ne.saturating_sub(1) {
                    even_simple.push(e(i) - e(i + 1));
                }
                if ne >= 1 && odd_m {
                    even_simple.push(e(ne - 1));
                } else if ne >= 2 {
                    even_simple.push(e(ne - 2) + e(ne - 1));
                }
                for j in 0..nd - 1 {
                    even_simple.push(d(j) - d(j + 1));
                }
                even_simple.push(d(nd - 1).scale(q(2)));
                for j in 0..nd {
                    for i in 0..ne {
                        for s in [q(1), q(-1)] {
                            let r = d(j) + e(i).scale(s);
                            odd.push(-&r);
                            odd_positive.push(r.clone());
                            odd.push(r);
                        }
                    }
                    if odd_m {
                        odd.push(d(j));
                        odd.push(-d(j));
                        odd_positive.push(d(j));
                    }
                }
            }
        }
        even_positive.sort();
        odd.sort();
        odd_positive.sort();
        RootSystem { family, even_simple, even_positive, odd, odd_positive }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.family.eps_len(), self.family.del_len())
    }

    pub fn zero(&self) -> Weight {
        self.family.zero()
    }

    pub fn even_roots(&self) -> Vec<Weight> {
        self.even_positive.iter().flat_map(|a| [a.clone(), -a]).collect()
    }

    pub fn is_even_root(&self, w: &Weight) -> bool {
        self.even_positive.contains(w) || self.even_positive.contains(&-w)
    }

    pub fn is_odd_root(&self, w: &Weight) -> bool {
        self.odd.contains(w)
    }

    pub fn is_isotropic(&self, w: &Weight) -> bool {
        form(w, w).is_zero()
    }

    /// Every root with its parity; roots of both parities appear twice.
    pub fn roots(&self) -> Vec<Root> {
        let mut out: Vec<Root> = self
            .even_roots()
            .into_iter()
            .map(|w| Root { isotropic: false, weight: w, parity: Parity::Even })
            .collect();
        out.extend(self.odd.iter().map(|w| Root {
            isotropic: self.family.kind != Kind::Queer && self.is_isotropic(w),
            weight: w.clone(),
            parity: Parity::Odd,
        }));
        out
    }

    pub fn even_simple_index(&self, alpha: &Weight) -> Option<usize> {
        self.even_simple.iter().position(|a| a == alpha)
    }

    /// Membership in the even root lattice ZΔ0.
    pub fn in_even_root_lattice(&self, x: &Weight) -> bool {
        match linalg::coordinates(&self.even_simple, x) {
            Some(c) => c.iter().all(is_int),
            None => false,
        }
    }

    /// Parses "e1-e2", "2d1", "d1+e2", "-e1" and checks that the result is a root.
    pub fn parse_root(&self, s: &str) -> Result<Weight> {
        let w = parse_linear(s, self.dims())?;
        if self.is_even_root(&w) || self.is_odd_root(&w) {
            Ok(w)
        } else {
            Err(Error::NotARoot(s.to_string()))
        }
    }

    /// Parses an even simple root given as a literal or as a generator index.
    pub fn parse_even_simple(&self, s: &str) -> Result<usize> {
        if let Ok(i) = s.trim().parse::<usize>() {
            if i < self.even_simple.len() {
                return Ok(i);
            }
        }
        let w = parse_linear(s, self.dims())?;
        self.even_simple_index(&w).ok_or_else(|| Error::NotSimple(s.to_string()))
    }

    /// Positive roots that are not sums of two positive roots.
    pub fn indecomposables(positive: &[Weight]) -> Vec<Weight> {
        let set: HashSet<&Weight> = positive.iter().collect();
        let mut out: Vec<Weight> = positive
            .iter()
            .filter(|a| !positive.iter().any(|b| set.contains(&(*a - b))))
            .cloned()
            .collect();
        out.sort();
        out.dedup();
        out
    }
}

/// Literal such as "2d1-e3" into a weight of the given shape.
pub fn parse_linear(s: &str, dims: (usize, usize)) -> Result<Weight> {
    let bad = |m: &str, at: usize| Error::Parse(format!("bad root literal '{s}' at column {}: {m}", at + 1));
    let mut w = Weight::zero(dims.0, dims.1);
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let b = t.as_bytes();
    let mut i = 0;
    if b.is_empty() {
        return Err(bad("empty", 0));
    }
    while i < b.len() {
        let mut sign = 1i64;
        if b[i] == b'+' || b[i] == b'-' {
            if b[i] == b'-' {
                sign = -1;
            }
            i += 1;
        }
        let start = i;
        while i < b.len() && (b[i].is_ascii_digit() || b[i] == b'/') {
            i += 1;
        }
        let coef = if start == i { q(1) } else { crate::weight::parse_q(&t[start..i]).map_err(|_| bad("bad coefficient", start))? };
        if i >= b.len() {
            return Err(bad("missing symbol", i));
        }
        let sym = b[i];
        i += 1;
        let st = i;
        while i < b.len() && b[i].is_ascii_digit() {
            i += 1;
        }
        let idx: usize = t[st..i].parse().map_err(|_| bad("missing index", st))?;
        if idx == 0 {
            return Err(bad("indices start at 1", st));
        }
        let c = coef * q(sign);
        match sym {
            b'e' if idx <= dims.0 => w.eps[idx - 1] += c,
            b'd' if idx <= dims.1 => w.del[idx - 1] += c,
            _ => return Err(bad("unknown symbol or index out of range", st - 1)),
        }
    }
    Ok(w)
}

/// Compact literal for a weight, e.g. "e1-d2" or "2d1".
pub fn root_literal(w: &Weight) -> String {
    let mut out = String::new();
    let terms = w
        .eps
        .iter()
        .enumerate()
        .map(|(i, c)| (*c, format!("e{}", i + 1)))
        .chain(w.del.iter().enumerate().map(|(j, c)| (*c, format!("d{}", j + 1))));
    for (c, sym) in terms {
        if c.is_zero() {
            continue;
        }
        if c < Q::zero() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let a = if c < Q::zero() { -c } else { c };
        if a != q(1) {
            out.push_str(&a.to_string());
        }
        out.push_str(&sym);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> Family {
        s.parse().unwrap()
    }

    #[test]
    fn family_parsing() {
        assert_eq!(fam("gl:2,1").to_string(), "gl:2,1");
        assert_eq!(fam("osp:3,2"), Family { kind: Kind::Osp, m: 3, n: 1 });
        assert!("sl:2,2".parse::<Family>().is_err());
        assert!("osp:3,3".parse::<Family>().is_err());
        assert!("osp:3,0".parse::<Family>().is_err());
        assert!("so:3".parse::<Family>().is_err());
    }

    #[test]
    fn root_counts() {
        let gl32 = RootSystem::new(fam("gl:3,2"));
        assert_eq!(gl32.even_positive.len(), 4);
        assert_eq!(gl32.odd.len(), 12);
        let osp = RootSystem::new(fam("osp:1,2"));
        assert_eq!(osp.even_positive, vec![Weight::from_ints(&[], &[2])]);
        assert_eq!(osp.odd_positive, vec![Weight::from_ints(&[], &[1])]);
        let osp34 = RootSystem::new(fam("osp:3,4"));
        // B1 x C2 and 2·(2n·d + n) odd roots
        assert_eq!(osp34.even_positive.len(), 1 + 4);
        assert_eq!(osp34.odd.len(), 2 * (2 * 2 + 2));
        let q3 = RootSystem::new(fam("q:3"));
        assert_eq!(q3.odd.len(), 6);
        assert!(q3.roots().iter().all(|r| !r.isotropic));
    }

    #[test]
    fn isotropy() {
        let osp = RootSystem::new(fam("osp:3,2"));
        for r in osp.roots().iter().filter(|r| r.parity == Parity::Odd) {
            let nonzero_eps = r.weight.eps.iter().any(|x| !x.is_zero());
            assert_eq!(r.isotropic, nonzero_eps);
        }
    }

    #[test]
    fn reflections_preserve_roots() {
        for f in ["gl:3,2", "osp:4,4", "osp:5,2", "q:3"] {
            let rs = RootSystem::new(fam(f));
            let all = rs.roots();
            for a in &rs.even_positive {
                for r in &all {
                    let s = reflect(&r.weight, a);
                    assert!(all.iter().any(|x| x.weight == s && x.parity == r.parity), "{f}");
                }
            }
        }
    }

    #[test]
    fn even_simple_roots_are_the_indecomposables() {
        for f in ["gl:3,2", "osp:4,4", "osp:5,4", "osp:2,4", "q:4"] {
            let rs = RootSystem::new(fam(f));
            let mut es = rs.even_simple.clone();
            es.sort();
            assert_eq!(es, RootSystem::indecomposables(&rs.even_positive), "{f}");
        }
    }

    #[test]
    fn root_literals() {
        let rs = RootSystem::new(fam("osp:3,2"));
        assert_eq!(rs.parse_root("2d1").unwrap(), Weight::from_ints(&[0], &[2]));
        assert_eq!(rs.parse_root("d1-e1").unwrap(), Weight::from_ints(&[-1], &[1]));
        assert!(rs.parse_root("e1+e1").is_err());
        assert!(rs.parse_root("e2").is_err());
        assert_eq!(root_literal(&Weight::from_ints(&[-1], &[1])), "-e1+d1");
    }

    #[test]
    fn sl_trace() {
        let f = fam("sl:2,1");
        assert!(f.validate(&Weight::from_ints(&[1, 0], &[0])).is_err());
        assert!(f.validate(&Weight::from_ints(&[1, 0], &[-1])).is_ok());
        let w = f.sl_normalize(&Weight::from_ints(&[3, 3], &[-3]));
        assert!(w.is_zero());
    }

    #[test]
    fn root_lattice() {
        let rs = RootSystem::new(fam("osp:4,2"));
        assert!(!rs.in_even_root_lattice(&Weight::from_ints(&[1, 0], &[0])));
        assert!(rs.in_even_root_lattice(&Weight::from_ints(&[1, 1], &[2])));
        assert!(!rs.in_even_root_lattice(&Weight::from_ints(&[0, 0], &[1])));
    }
}
