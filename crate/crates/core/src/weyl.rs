//! Weyl groups as groups of signed permutations of the ε/δ coordinates.

use std::collections::{HashMap, HashSet};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rootdata::{pair_coroot, reflect, RootSystem};
use crate::weight::{is_int, qf, Weight};

/// w(e_k) = ±e_{img[k]} on the flat coordinate space (ε block first).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignedPerm {
    pub img: Vec<u16>,
    pub neg: Vec<bool>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> SignedPerm {
        SignedPerm { img: (0..n as u16).collect(), neg: vec![false; n] }
    }

    /// The reflection s_α, if it permutes coordinates up to sign.
    pub fn reflection(alpha: &Weight) -> Option<SignedPerm> {
        let (ne, nd) = alpha.dims();
        let n = ne + nd;
        let mut img = Vec::with_capacity(n);
        let mut neg = Vec::with_capacity(n);
        for k in 0..n {
            let mut e = Weight::zero(ne, nd);
            *e.coord_mut(k) = crate::weight::q(1);
            let v = reflect(&e, alpha);
            let nz: Vec<usize> = (0..n).filter(|&i| !v.coord(i).is_zero()).collect();
            if nz.len() != 1 || v.coord(nz[0]).abs() != crate::weight::q(1) {
                return None;
            }
            img.push(nz[0] as u16);
            neg.push(v.coord(nz[0]).is_negative());
        }
        Some(SignedPerm { img, neg })
    }

    /// (self ∘ other)
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        let n = self.img.len();
        let mut img = Vec::with_capacity(n);
        let mut neg = Vec::with_capacity(n);
        for k in 0..n {
            let j = other.img[k] as usize;
            img.push(self.img[j]);
            neg.push(other.neg[k] ^ self.neg[j]);
        }
        SignedPerm { img, neg }
    }

    pub fn apply(&self, w: &Weight) -> Weight {
        let mut out = Weight::zero(w.eps.len(), w.del.len());
        for k in 0..self.img.len() {
            let c = w.coord(k);
            *out.coord_mut(self.img[k] as usize) = if self.neg[k] { -c } else { c };
        }
        out
    }
}

/// A finite group generated by reflections in a list of roots, with
/// lengths and words taken with respect to those generators.
#[derive(Clone, Debug)]
pub struct WeylGroup {
    pub gens: Vec<Weight>,
    gen_perms: Vec<SignedPerm>,
    elems: Vec<SignedPerm>,
    words: Vec<Vec<usize>>,
    index: HashMap<SignedPerm, usize>,
    lmul: Vec<Vec<u32>>,
    rmul: Vec<Vec<u32>>,
}

/// Serializable view of one element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeylElt {
    pub word: Vec<usize>,
    pub length: usize,
    pub perm: SignedPerm,
}

pub const DEFAULT_WEYL_CAP: usize = 1_000_000;

impl WeylGroup {
    pub fn new(rs: &RootSystem, cap: usize) -> Result<WeylGroup> {
        WeylGroup::generated(rs.dims(), rs.even_simple.clone(), cap)
    }

    /// Breadth-first closure. Words are the lexicographically least reduced words.
    pub fn generated(dims: (usize, usize), gens: Vec<Weight>, cap: usize) -> Result<WeylGroup> {
        let n = dims.0 + dims.1;
        let gen_perms: Vec<SignedPerm> = gens
            .iter()
            .map(|g| SignedPerm::reflection(g).ok_or_else(|| Error::Precondition("generator is not a signed permutation".into())))
            .collect::<Result<_>>()?;
        let id = SignedPerm::identity(n);
        let mut elems = vec![id.clone()];
        let mut words = vec![vec![]];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut rmul: Vec<Vec<u32>> = vec![Vec::new(); gens.len()];
        let mut head = 0;
        while head < elems.len() {
            for (g, gp) in gen_perms.iter().enumerate() {
                let p = elems[head].compose(gp);
                let j = match index.get(&p) {
                    Some(&j) => j,
                    None => {
                        if elems.len() >= cap {
                            return Err(Error::CapExceeded { what: "Weyl group size".into(), cap });
                        }
                        let j = elems.len();
                        let mut w = words[head].clone();
                        w.push(g);
                        words.push(w);
                        index.insert(p.clone(), j);
                        elems.push(p);
                        j
                    }
                };
                rmul[g].push(j as u32);
            }
            head += 1;
        }
        let lmul = gen_perms
            .iter()
            .map(|gp| elems.iter().map(|e| index[&gp.compose(e)] as u32).collect())
            .collect();
        Ok(WeylGroup { gens, gen_perms, elems, words, index, lmul, rmul })
    }

    pub fn size(&self) -> usize {
        self.elems.len()
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn word(&self, w: usize) -> &[usize] {
        &self.words[w]
    }

    pub fn length(&self, w: usize) -> usize {
        self.words[w].len()
    }

    pub fn perm(&self, w: usize) -> &SignedPerm {
        &self.elems[w]
    }

    pub fn gen_perm(&self, g: usize) -> &SignedPerm {
        &self.gen_perms[g]
    }

    pub fn elt(&self, w: usize) -> WeylElt {
        WeylElt { word: self.words[w].clone(), length: self.length(w), perm: self.elems[w].clone() }
    }

    pub fn find(&self, p: &SignedPerm) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// s_g · w
    pub fn lmul(&self, g: usize, w: usize) -> usize {
        self.lmul[g][w] as usize
    }

    /// w · s_g
    pub fn rmul(&self, w: usize, g: usize) -> usize {
        self.rmul[g][w] as usize
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.index[&self.elems[a].compose(&self.elems[b])]
    }

    pub fn inverse(&self, w: usize) -> usize {
        self.words[w].iter().fold(0, |acc, &g| self.lmul(g, acc))
    }

    /// Product s_{a1} ⋯ s_{ak}; the word need not be reduced.
    pub fn from_word(&self, word: &[usize]) -> Result<usize> {
        let mut w = 0;
        for &g in word {
            if g >= self.rank() {
                return Err(Error::Precondition(format!("generator index {g} out of range")));
            }
            w = self.rmul(w, g);
        }
        Ok(w)
    }

    pub fn longest(&self) -> usize {
        (0..self.size()).max_by_key(|&w| self.length(w)).unwrap_or(0)
    }

    pub fn act(&self, w: usize, l: &Weight) -> Weight {
        self.elems[w].apply(l)
    }

    /// w(λ + shift) − shift; ρ gives the dot action, ρ0 the circle action.
    pub fn shifted(&self, w: usize, l: &Weight, shift: &Weight) -> Weight {
        &self.act(w, &(l + shift)) - shift
    }

    pub fn left_descents(&self, w: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&g| self.length(self.lmul(g, w)) < self.length(w)).collect()
    }

    pub fn right_descents(&self, w: usize) -> Vec<usize> {
        (0..self.rank()).filter(|&g| self.length(self.rmul(w, g)) < self.length(w)).collect()
    }

    pub fn reduced_words(&self, w: usize) -> Vec<Vec<usize>> {
        let mut memo: HashMap<usize, Vec<Vec<usize>>> = HashMap::new();
        self.reduced_words_memo(w, &mut memo)
    }

    fn reduced_words_memo(&self, w: usize, memo: &mut HashMap<usize, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
        if w == 0 {
            return vec![vec![]];
        }
        if let Some(v) = memo.get(&w) {
            return v.clone();
        }
        let mut out = Vec::new();
        for g in self.right_descents(w) {
            for mut p in self.reduced_words_memo(self.rmul(w, g), memo) {
                p.push(g);
                out.push(p);
            }
        }
        out.sort();
        memo.insert(w, out.clone());
        out
    }

    /// Bruhat order via the lifting property: with s a left descent of y,
    /// x ≤ y iff (sx < x ? sx ≤ sy : x ≤ sy).
    pub fn bruhat_leq(&self, x: usize, y: usize) -> bool {
        if self.length(x) > self.length(y) {
            return false;
        }
        if y == 0 {
            return x == 0;
        }
        let s = self.words[y][0];
        let sy = self.lmul(s, y);
        let sx = self.lmul(s, x);
        if self.length(sx) < self.length(x) {
            self.bruhat_leq(sx, sy)
        } else {
            self.bruhat_leq(x, sy)
        }
    }

    /// Full Bruhat table from the subword property of the canonical words.
    pub fn bruhat_table(&self) -> BruhatTable {
        let n = self.size();
        let words = n.div_ceil(64);
        let mut below: Vec<Vec<u64>> = vec![vec![0; words]; n];
        below[0][0] = 1;
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&w| self.length(w));
        for &y in order.iter().skip(1) {
            let g = *self.words[y].last().unwrap();
            let p = self.rmul(y, g);
            let mut set = below[p].clone();
            for x in 0..n {
                if below[p][x / 64] >> (x % 64) & 1 == 1 {
                    let xs = self.rmul(x, g);
                    set[xs / 64] |= 1 << (xs % 64);
                }
            }
            below[y] = set;
        }
        BruhatTable { below }
    }

    /// Left weak order: a ≤ b iff l(b) = l(b a⁻¹) + l(a).
    pub fn left_weak_leq(&self, a: usize, b: usize) -> bool {
        let z = self.mul(b, self.inverse(a));
        self.length(b) == self.length(z) + self.length(a)
    }
}

#[derive(Clone, Debug)]
pub struct BruhatTable {
    below: Vec<Vec<u64>>,
}

impl BruhatTable {
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.below[y][x / 64] >> (x % 64) & 1 == 1
    }
}

pub fn rho0(rs: &RootSystem) -> Weight {
    let mut r = rs.zero();
    for a in &rs.even_positive {
        r += a;
    }
    r.scale(qf(1, 2))
}

/// Signs of ⟨λ + ρ0, α∨⟩ over Δ0⁺ (in the order of `rs.even_positive`).
pub fn chamber(rs: &RootSystem, l: &Weight) -> Vec<i8> {
    let x = l + &rho0(rs);
    rs.even_positive
        .iter()
        .map(|a| {
            let v = pair_coroot(&x, a);
            if v.is_zero() {
                0
            } else if v.is_positive() {
                1
            } else {
                -1
            }
        })
        .collect()
}

pub fn is_open_chamber(c: &[i8]) -> bool {
    c.iter().all(|&s| s != 0)
}

/// Positive even roots α with ⟨λ, α∨⟩ ∈ Z.
pub fn integral_positive_roots(rs: &RootSystem, l: &Weight) -> Vec<Weight> {
    rs.even_positive.iter().filter(|a| is_int(&pair_coroot(l, a))).cloned().collect()
}

/// Simple system Π_λ of the integral root system.
pub fn integral_simple_roots(rs: &RootSystem, l: &Weight) -> Vec<Weight> {
    RootSystem::indecomposables(&integral_positive_roots(rs, l))
}

/// W_λ inside W together with the coset representatives W^λ.
#[derive(Clone, Debug)]
pub struct IntegralData {
    pub simple: Vec<Weight>,
    pub sub: WeylGroup,
    /// sub index to W index
    pub embed: Vec<usize>,
    /// W^λ = {w : w(Π_λ) ⊂ Δ⁺}, as W indices
    pub cosets: Vec<usize>,
}

impl IntegralData {
    pub fn new(rs: &RootSystem, w: &WeylGroup, l: &Weight) -> Result<IntegralData> {
        let simple = integral_simple_roots(rs, l);
        let sub = WeylGroup::generated(rs.dims(), simple.clone(), w.size())?;
        let embed = (0..sub.size())
            .map(|i| w.find(sub.perm(i)).ok_or_else(|| Error::Precondition("subgroup element outside W".into())))
            .collect::<Result<Vec<_>>>()?;
        let pos: HashSet<&Weight> = rs.even_positive.iter().collect();
        let cosets = (0..w.size())
            .filter(|&x| simple.iter().all(|b| pos.contains(&w.act(x, b))))
            .collect();
        Ok(IntegralData { simple, sub, embed, cosets })
    }

    /// w = x·u with x ∈ W^λ and u ∈ W_λ; u is returned as a subgroup index.
    pub fn factor(&self, w: &WeylGroup, e: usize) -> (usize, usize) {
        let back: HashMap<usize, usize> = self.embed.iter().enumerate().map(|(i, &g)| (g, i)).collect();
        for &x in &self.cosets {
            let u = w.mul(w.inverse(x), e);
            if let Some(&ui) = back.get(&u) {
                return (x, ui);
            }
        }
        unreachable!("coset representatives cover W")
    }

    /// Compares the generated subgroup with {w : wλ − λ ∈ ZΔ0}.
    pub fn lattice_description_agrees(&self, rs: &RootSystem, w: &WeylGroup, l: &Weight) -> bool {
        let gen: HashSet<usize> = self.embed.iter().copied().collect();
        (0..w.size()).all(|x| gen.contains(&x) == rs.in_even_root_lattice(&(&w.act(x, l) - l)))
    }
}
