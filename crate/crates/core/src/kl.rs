//! Kazhdan–Lusztig and R-polynomials, μ-coefficients, the left preorder
//! and left cells of a finite Weyl group.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::weyl::{BruhatTable, WeylGroup};

pub const DEFAULT_KL_CAP: usize = 10_000;

/// Integer polynomial in q, lowest degree first, without trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly(pub Vec<i64>);

impl Poly {
    pub fn zero() -> Poly {
        Poly(vec![])
    }

    pub fn one() -> Poly {
        Poly(vec![1])
    }

    pub fn monomial(c: i64, d: usize) -> Poly {
        let mut v = vec![0; d + 1];
        v[d] = c;
        Poly(v).trim()
    }

    fn trim(mut self) -> Poly {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn coeff(&self, d: usize) -> i64 {
        self.0.get(d).copied().unwrap_or(0)
    }

    pub fn shift(&self, d: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![0; d];
        v.extend_from_slice(&self.0);
        Poly(v)
    }

    /// Terms of degree ≤ d.
    pub fn truncate(&self, d: usize) -> Poly {
        Poly(self.0.iter().take(d + 1).copied().collect()).trim()
    }

    /// q^d · p(1/q); requires deg p ≤ d.
    pub fn reverse(&self, d: usize) -> Poly {
        assert!(self.0.len() <= d + 1);
        let mut v = vec![0; d + 1];
        for (i, c) in self.0.iter().enumerate() {
            v[d - i] = *c;
        }
        Poly(v).trim()
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, c| acc * x + c)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly((0..n).map(|i| self.coeff(i) + o.coeff(i)).collect()).trim()
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.0.len().max(o.0.len());
        Poly((0..n).map(|i| self.coeff(i) - o.coeff(i)).collect()).trim()
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly(self.0.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![0; self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly(v).trim()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (d, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let a = c.abs();
            let body = match (d, a) {
                (0, _) => a.to_string(),
                (1, 1) => "q".into(),
                (1, _) => format!("{a}q"),
                (_, 1) => format!("q^{d}"),
                _ => format!("{a}q^{d}"),
            };
            write!(f, "{sign}{body}")?;
            first = false;
        }
        Ok(())
    }
}

impl Serialize for Poly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A table indexed by pairs (x, w) of group elements.
#[derive(Clone, Debug)]
pub struct PairTable {
    n: usize,
    data: Vec<Poly>,
}

impl PairTable {
    fn new(n: usize) -> PairTable {
        PairTable { n, data: vec![Poly::zero(); n * n] }
    }

    pub fn get(&self, x: usize, w: usize) -> &Poly {
        &self.data[x * self.n + w]
    }

    fn set(&mut self, x: usize, w: usize, p: Poly) {
        self.data[x * self.n + w] = p;
    }

    pub fn size(&self) -> usize {
        self.n
    }
}

fn check_cap(w: &WeylGroup, cap: usize) -> Result<()> {
    if w.size() > cap {
        return Err(Error::CapExceeded { what: "group size for Kazhdan–Lusztig computations".into(), cap });
    }
    Ok(())
}

fn by_length(w: &WeylGroup) -> Vec<usize> {
    let mut v: Vec<usize> = (0..w.size()).collect();
    v.sort_by_key(|&e| w.length(e));
    v
}

/// μ(x, w): coefficient of q^{(l(w)−l(x)−1)/2} in P_{x,w}, zero unless x < w
/// with odd length difference.
pub fn mu_of(w: &WeylGroup, p: &PairTable, x: usize, y: usize) -> i64 {
    let (lx, ly) = (w.length(x), w.length(y));
    if ly <= lx || (ly - lx) % 2 == 0 {
        return 0;
    }
    p.get(x, y).coeff((ly - lx - 1) / 2)
}

/// P_{x,w} by the standard recursion on a left descent s of w (v = sw):
/// P_{x,w} = q^{1−c} P_{sx,v} + q^c P_{x,v} − Σ_{z<v, sz<z} μ(z,v) q^{(l(w)−l(z))/2} P_{x,z},
/// with c = 1 when sx < x and c = 0 otherwise.
pub fn kl_polynomials(w: &WeylGroup, cap: usize) -> Result<PairTable> {
    check_cap(w, cap)?;
    let n = w.size();
    let br = w.bruhat_table();
    let mut p = PairTable::new(n);
    p.set(0, 0, Poly::one());
    for &y in by_length(w).iter().skip(1) {
        let s = w.word(y)[0];
        let v = w.lmul(s, y);
        let ly = w.length(y);
        let corr: Vec<(usize, i64)> = (0..n)
            .filter(|&z| br.leq(z, v) && z != v && w.length(w.lmul(s, z)) < w.length(z))
            .map(|z| (z, mu_of(w, &p, z, v)))
            .filter(|&(_, m)| m != 0)
            .collect();
        for x in 0..n {
            if !br.leq(x, y) {
                continue;
            }
            let sx = w.lmul(s, x);
            let c = usize::from(w.length(sx) < w.length(x));
            let mut acc = &p.get(sx, v).shift(1 - c) + &p.get(x, v).shift(c);
            for &(z, m) in &corr {
                let t = p.get(x, z);
                if !t.is_zero() {
                    acc = &acc - &(&Poly::monomial(m, (ly - w.length(z)) / 2) * t);
                }
            }
            p.set(x, y, acc);
        }
    }
    Ok(p)
}

/// R_{x,w}: for a left descent s of w, R_{x,w} = R_{sx,sw} if sx < x and
/// (q−1) R_{x,sw} + q R_{sx,sw} otherwise.
pub fn r_polynomials(w: &WeylGroup, cap: usize) -> Result<PairTable> {
    check_cap(w, cap)?;
    let n = w.size();
    let mut r = PairTable::new(n);
    r.set(0, 0, Poly::one());
    let qm1 = Poly(vec![-1, 1]);
    for &y in by_length(w).iter().skip(1) {
        let s = w.word(y)[0];
        let v = w.lmul(s, y);
        for x in 0..n {
            let sx = w.lmul(s, x);
            let val = if w.length(sx) < w.length(x) {
                r.get(sx, v).clone()
            } else {
                &(&qm1 * r.get(x, v)) + &r.get(sx, v).shift(1)
            };
            r.set(x, y, val);
        }
    }
    Ok(r)
}

/// P from R through q^{l(w)−l(x)} P̄_{x,w} − P_{x,w} = Σ_{x<y≤w} R_{x,y} P_{y,w}
/// and the degree bound on P.
pub fn kl_polynomials_via_r(w: &WeylGroup, cap: usize) -> Result<PairTable> {
    let r = r_polynomials(w, cap)?;
    let n = w.size();
    let br = w.bruhat_table();
    let mut p = PairTable::new(n);
    for y in 0..n {
        let ly = w.length(y);
        let mut below: Vec<usize> = (0..n).filter(|&x| br.leq(x, y)).collect();
        below.sort_by_key(|&x| std::cmp::Reverse(w.length(x)));
        for x in below {
            if x == y {
                p.set(y, y, Poly::one());
                continue;
            }
            let d = ly - w.length(x);
            let mut s = Poly::zero();
            for z in 0..n {
                if z != x && br.leq(x, z) && br.leq(z, y) {
                    s = &s + &(r.get(x, z) * p.get(z, y));
                }
            }
            let low = -&s.truncate((d - 1) / 2);
            let high = &s + &low;
            if high != low.reverse(d) {
                return Err(Error::Precondition("R-polynomial identity fails".into()));
            }
            p.set(x, y, low);
        }
    }
    Ok(p)
}

/// The left preorder: x ≤_L y generated by μ̃(x,y) ≠ 0 and L(x) ⊄ L(y),
/// L the left descent set. Identity is the top, w0 the bottom.
#[derive(Clone, Debug)]
pub struct LeftOrder {
    leq: Vec<Vec<bool>>,
}

impl LeftOrder {
    pub fn new(w: &WeylGroup, p: &PairTable) -> LeftOrder {
        let n = w.size();
        let desc: Vec<Vec<usize>> = (0..n).map(|e| w.left_descents(e)).collect();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    continue;
                }
                let m = mu_of(w, p, x, y) != 0 || mu_of(w, p, y, x) != 0;
                if m && desc[x].iter().any(|s| !desc[y].contains(s)) {
                    adj[x].push(y);
                }
            }
        }
        let mut leq = vec![vec![false; n]; n];
        for (x, row) in leq.iter_mut().enumerate() {
            let mut stack = vec![x];
            row[x] = true;
            while let Some(u) = stack.pop() {
                for &v in &adj[u] {
                    if !row[v] {
                        row[v] = true;
                        stack.push(v);
                    }
                }
            }
        }
        LeftOrder { leq }
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn equivalent(&self, x: usize, y: usize) -> bool {
        self.leq[x][y] && self.leq[y][x]
    }

    /// Left cells, each sorted, listed by smallest member.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        let n = self.leq.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for x in 0..n {
            if seen[x] {
                continue;
            }
            let cell: Vec<usize> = (0..n).filter(|&y| self.equivalent(x, y)).collect();
            for &y in &cell {
                seen[y] = true;
            }
            out.push(cell);
        }
        out
    }
}

/// Everything the CLI reports about a group.
#[derive(Clone, Debug, Serialize)]
pub struct KlReport {
    pub size: usize,
    pub words: Vec<Vec<usize>>,
    pub nontrivial_polynomials: Vec<(usize, usize, Poly)>,
    pub left_cells: Vec<Vec<usize>>,
    pub left_order_covers: Vec<(usize, usize)>,
}

pub fn report(w: &WeylGroup, cap: usize) -> Result<KlReport> {
    let p = kl_polynomials(w, cap)?;
    let br: BruhatTable = w.bruhat_table();
    let n = w.size();
    let mut nontrivial = Vec::new();
    for x in 0..n {
        for y in 0..n {
            if br.leq(x, y) && *p.get(x, y) != Poly::one() {
                nontrivial.push((x, y, p.get(x, y).clone()));
            }
        }
    }
    let lo = LeftOrder::new(w, &p);
    let cells = lo.cells();
    // covers between cells
    let mut covers = Vec::new();
    for (i, a) in cells.iter().enumerate() {
        for (j, b) in cells.iter().enumerate() {
            if i == j || !lo.leq(a[0], b[0]) {
                continue;
            }
            let between = cells.iter().enumerate().any(|(k, c)| {
                k != i && k != j && lo.leq(a[0], c[0]) && lo.leq(c[0], b[0])
            });
            if !between {
                covers.push((i, j));
            }
        }
    }
    Ok(KlReport {
        size: n,
        words: (0..n).map(|e| w.word(e).to_vec()).collect(),
        nontrivial_polynomials: nontrivial,
        left_cells: cells,
        left_order_covers: covers,
    })
}
