//! Exact rational weights in ε/δ coordinates.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Q = Rational64;

pub fn q(n: i64) -> Q {
    Q::from_integer(n)
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

pub fn parse_q(s: &str) -> Result<Q> {
    let t = s.trim();
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: i64 = n.parse().map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
    let d: i64 = d.parse().map_err(|_| Error::Parse(format!("bad rational '{s}'")))?;
    if d == 0 {
        return Err(Error::Parse(format!("zero denominator in '{s}'")));
    }
    Ok(Q::new(n, d))
}

pub fn is_int(x: &Q) -> bool {
    x.is_integer()
}

/// Positive integer (1, 2, ...).
pub fn is_pos_int(x: &Q) -> bool {
    x.is_integer() && x.is_positive()
}

/// A weight Σ a_i ε_i + Σ b_j δ_j.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight {
    pub eps: Vec<Q>,
    pub del: Vec<Q>,
}

impl Weight {
    pub fn new(eps: Vec<Q>, del: Vec<Q>) -> Self {
        Weight { eps, del }
    }

    pub fn from_ints(eps: &[i64], del: &[i64]) -> Self {
        Weight {
            eps: eps.iter().map(|&x| q(x)).collect(),
            del: del.iter().map(|&x| q(x)).collect(),
        }
    }

    pub fn zero(ne: usize, nd: usize) -> Self {
        Weight { eps: vec![Q::zero(); ne], del: vec![Q::zero(); nd] }
    }

    pub fn eps_unit(ne: usize, nd: usize, i: usize) -> Self {
        let mut w = Self::zero(ne, nd);
        w.eps[i] = q(1);
        w
    }

    pub fn del_unit(ne: usize, nd: usize, j: usize) -> Self {
        let mut w = Self::zero(ne, nd);
        w.del[j] = q(1);
        w
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.eps.len(), self.del.len())
    }

    pub fn len(&self) -> usize {
        self.eps.len() + self.del.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Coordinate by flat index (ε block first).
    pub fn coord(&self, k: usize) -> Q {
        if k < self.eps.len() {
            self.eps[k]
        } else {
            self.del[k - self.eps.len()]
        }
    }

    pub fn coord_mut(&mut self, k: usize) -> &mut Q {
        let ne = self.eps.len();
        if k < ne {
            &mut self.eps[k]
        } else {
            &mut self.del[k - ne]
        }
    }

    pub fn is_zero(&self) -> bool {
        self.eps.iter().chain(&self.del).all(|x| x.is_zero())
    }

    pub fn is_integral(&self) -> bool {
        self.eps.iter().chain(&self.del).all(is_int)
    }

    pub fn coord_sum(&self) -> Q {
        self.eps.iter().chain(&self.del).sum()
    }

    pub fn scale(&self, c: Q) -> Weight {
        Weight {
            eps: self.eps.iter().map(|x| x * c).collect(),
            del: self.del.iter().map(|x| x * c).collect(),
        }
    }

    /// Parses "a,b|c,d"; without a bar every entry is an ε coordinate.
    /// Errors name the 1-based column of the offending entry.
    pub fn parse_literal(s: &str) -> Result<Weight> {
        if s.matches('|').count() > 1 {
            let col = s.rfind('|').unwrap() + 1;
            return Err(Error::Parse(format!("second '|' at column {col} in '{s}'")));
        }
        let (e, d, off) = match s.split_once('|') {
            Some((e, d)) => (e, Some(d), e.len() + 1),
            None => (s, None, 0),
        };
        let list = |t: &str, base: usize| -> Result<Vec<Q>> {
            if t.trim().is_empty() {
                return Ok(vec![]);
            }
            let mut out = Vec::new();
            let mut col = base;
            for part in t.split(',') {
                out.push(parse_q(part).map_err(|_| {
                    Error::Parse(format!("bad rational '{}' at column {} in '{s}'", part.trim(), col + 1))
                })?);
                col += part.len() + 1;
            }
            Ok(out)
        };
        Ok(Weight { eps: list(e, 0)?, del: d.map(|d| list(d, off)).transpose()?.unwrap_or_default() })
    }

    /// Human readable form such as "3ε1 - ε2 + 1/2δ1".
    pub fn pretty(&self) -> String {
        let mut out = String::new();
        let terms = self
            .eps
            .iter()
            .enumerate()
            .map(|(i, c)| (c, format!("ε{}", i + 1)))
            .chain(self.del.iter().enumerate().map(|(j, c)| (c, format!("δ{}", j + 1))));
        for (c, sym) in terms {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
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
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[Q]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "{}", join(&self.eps))?;
        if !self.del.is_empty() {
            write!(f, "|{}", join(&self.del))?;
        }
        Ok(())
    }
}

impl FromStr for Weight {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Weight::parse_literal(s)
    }
}

#[derive(Serialize, Deserialize)]
struct WeightRepr {
    eps: Vec<String>,
    del: Vec<String>,
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WeightRepr {
            eps: self.eps.iter().map(|x| x.to_string()).collect(),
            del: self.del.iter().map(|x| x.to_string()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = WeightRepr::deserialize(d)?;
        let conv = |v: Vec<String>| -> std::result::Result<Vec<Q>, D::Error> {
            v.iter().map(|s| parse_q(s).map_err(serde::de::Error::custom)).collect()
        };
        Ok(Weight { eps: conv(r.eps)?, del: conv(r.del)? })
    }
}

fn zip_with(a: &Weight, b: &Weight, f: impl Fn(Q, Q) -> Q) -> Weight {
    assert_eq!(a.dims(), b.dims(), "weight dimension mismatch");
    Weight {
        eps: a.eps.iter().zip(&b.eps).map(|(x, y)| f(*x, *y)).collect(),
        del: a.del.iter().zip(&b.del).map(|(x, y)| f(*x, *y)).collect(),
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        zip_with(self, o, |x, y| x + y)
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        zip_with(self, o, |x, y| x - y)
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(self, o: Weight) -> Weight {
        &self + &o
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(self, o: Weight) -> Weight {
        &self - &o
    }
}

impl Add<&Weight> for Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        &self + o
    }
}

impl Sub<&Weight> for Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        &self - o
    }
}

impl AddAssign<&Weight> for Weight {
    fn add_assign(&mut self, o: &Weight) {
        assert_eq!(self.dims(), o.dims(), "weight dimension mismatch");
        for (x, y) in self.eps.iter_mut().zip(&o.eps) {
            *x += y;
        }
        for (x, y) in self.del.iter_mut().zip(&o.del) {
            *x += y;
        }
    }
}

impl SubAssign<&Weight> for Weight {
    fn sub_assign(&mut self, o: &Weight) {
        assert_eq!(self.dims(), o.dims(), "weight dimension mismatch");
        for (x, y) in self.eps.iter_mut().zip(&o.eps) {
            *x -= y;
        }
        for (x, y) in self.del.iter_mut().zip(&o.del) {
            *x -= y;
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(q(-1))
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(q(-1))
    }
}

impl Mul<&Weight> for Q {
    type Output = Weight;
    fn mul(self, w: &Weight) -> Weight {
        w.scale(self)
    }
}
