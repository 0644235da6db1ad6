//! Star actions: deformations of the ρ-shifted Weyl group action built
//! from odd reflections, the q(n) variant, orbits and α-finiteness.

use std::collections::{HashMap, VecDeque};

use num_traits::Zero;
use serde::Serialize;

use crate::borel::{self, Borel};
use crate::error::{Error, Result};
use crate::generic::{GenericTester, Order};
use crate::rootdata::{form, pair_coroot, reflect, root_literal, Kind, RootSystem};
use crate::typicality::bar;
use crate::weight::{is_int, is_pos_int, q, Weight};
use crate::weyl::{chamber, WeylGroup};

/// Something that lets each even simple root act on weights.
pub trait StarAction {
    fn system(&self) -> &RootSystem;

    /// s_α ∗ λ for the generator with index `alpha` in `even_simple`.
    fn apply(&self, alpha: usize, l: &Weight) -> Result<Weight>;

    fn rank(&self) -> usize {
        self.system().even_simple.len()
    }

    /// s_{a1} ⋯ s_{ak} ∗ λ, rightmost letter first.
    fn apply_word(&self, word: &[usize], l: &Weight) -> Result<Weight> {
        let mut x = l.clone();
        for &a in word.iter().rev() {
            x = self.apply(a, &x)?;
        }
        Ok(x)
    }
}

#[derive(Clone, Debug)]
struct Slot {
    target: Borel,
    path: Vec<Weight>,
    back: Vec<Weight>,
    rho_hat: Weight,
}

/// A star action map: one Borel (sharing the even part) per even simple root.
#[derive(Clone, Debug)]
pub struct StarMap {
    pub name: String,
    rs: RootSystem,
    pub reference: Borel,
    slots: Vec<Slot>,
}

impl StarMap {
    pub fn new(rs: &RootSystem, reference: Borel, assignment: Vec<Borel>, name: &str) -> Result<StarMap> {
        if rs.family.kind == Kind::Queer {
            return Err(Error::Unsupported("star maps are for basic classical families; use QueerStar".into()));
        }
        if assignment.len() != rs.even_simple.len() {
            return Err(Error::Precondition("one Borel per even simple root is required".into()));
        }
        let mut slots = Vec::new();
        for (a, t) in rs.even_simple.iter().zip(assignment) {
            if !t.has_simple_or_half(a) {
                return Err(Error::NotSimple(format!("{} (nor its half) in the assigned Borel", root_literal(a))));
            }
            let path = borel::path(rs, &reference, &t)?;
            let back = borel::reverse_path(&path);
            let rho_hat = t.rho(rs).rho;
            slots.push(Slot { target: t, path, back, rho_hat });
        }
        Ok(StarMap { name: name.into(), rs: rs.clone(), reference, slots })
    }

    /// Every α sent to the distinguished Borel. Valid for type I.
    pub fn trivial(rs: &RootSystem) -> Result<StarMap> {
        let d = Borel::distinguished(rs);
        StarMap::new(rs, d.clone(), vec![d; rs.even_simple.len()], "trivial")
    }

    /// gl/sl: every α sent to the Borel with all δ above all ε.
    pub fn anti_distinguished(rs: &RootSystem) -> Result<StarMap> {
        if !matches!(rs.family.kind, Kind::Gl | Kind::Sl) {
            return Err(Error::Unsupported("anti-distinguished map is defined for gl and sl".into()));
        }
        let t = Borel::anti_distinguished(rs)?;
        StarMap::new(rs, Borel::distinguished(rs), vec![t; rs.even_simple.len()], "anti")
    }

    /// ∗′: 2δn to the Borel with δn lowest, everything else to the reference.
    pub fn osp_prime(rs: &RootSystem) -> Result<StarMap> {
        Self::osp_variant(rs, Borel::osp_hat(rs)?, "osp-prime", |a| *a == last_c(rs))
    }

    /// ∗: so(m) roots to the reference, sp(2n) roots to the Borel with ε above δ.
    pub fn osp_star(rs: &RootSystem) -> Result<StarMap> {
        Self::osp_variant(rs, Borel::osp_tilde(rs)?, "osp-star", |a| a.eps.iter().all(|x| x.is_zero()))
    }

    fn osp_variant(rs: &RootSystem, other: Borel, name: &str, use_other: impl Fn(&Weight) -> bool) -> Result<StarMap> {
        if rs.family.kind != Kind::Osp {
            return Err(Error::Unsupported(format!("{name} is defined for osp")));
        }
        let d = Borel::distinguished(rs);
        let asg = rs.even_simple.iter().map(|a| if use_other(a) { other.clone() } else { d.clone() }).collect();
        StarMap::new(rs, d, asg, name)
    }

    /// Assignment chosen by `pick` among all admissible Borels for each α.
    pub fn from_choices(rs: &RootSystem, cap: usize, mut pick: impl FnMut(usize, usize) -> usize) -> Result<StarMap> {
        let all = borel::enumerate(rs, cap)?;
        let mut asg = Vec::new();
        for (i, a) in rs.even_simple.iter().enumerate() {
            let ok: Vec<&Borel> = all.iter().filter(|b| b.has_simple_or_half(a)).collect();
            asg.push(ok[pick(i, ok.len()) % ok.len()].clone());
        }
        StarMap::new(rs, Borel::distinguished(rs), asg, "custom")
    }

    /// Built-in maps by name: trivial, anti (alias example71), osp-prime, osp-star.
    pub fn by_name(rs: &RootSystem, name: &str) -> Result<StarMap> {
        match name {
            "trivial" | "dot" => StarMap::trivial(rs),
            "anti" | "example71" => StarMap::anti_distinguished(rs).map(|mut m| {
                m.name = name.into();
                m
            }),
            "osp-prime" | "prime" => StarMap::osp_prime(rs),
            "osp-star" | "star" => StarMap::osp_star(rs),
            _ => Err(Error::Parse(format!("unknown star map '{name}'"))),
        }
    }

    /// Built-in maps valid for the family.
    pub fn builtins(rs: &RootSystem) -> Vec<StarMap> {
        ["trivial", "anti", "osp-prime", "osp-star"].iter().filter_map(|n| StarMap::by_name(rs, n).ok()).collect()
    }

    pub fn assignment(&self, alpha: usize) -> &Borel {
        &self.slots[alpha].target
    }

    pub fn path(&self, alpha: usize) -> &[Weight] {
        &self.slots[alpha].path
    }

    /// λ̂: highest weight of L(λ) for the Borel assigned to α.
    pub fn transported(&self, alpha: usize, l: &Weight) -> Result<Weight> {
        borel::track(&self.rs, &self.reference, &self.slots[alpha].path, l)
    }
}

fn last_c(rs: &RootSystem) -> Weight {
    rs.even_simple.last().cloned().unwrap()
}

impl StarAction for StarMap {
    fn system(&self) -> &RootSystem {
        &self.rs
    }

    fn apply(&self, alpha: usize, l: &Weight) -> Result<Weight> {
        let s = self.slots.get(alpha).ok_or_else(|| Error::Precondition(format!("no even simple root {alpha}")))?;
        let a = &self.rs.even_simple[alpha];
        let hat = borel::track(&self.rs, &self.reference, &s.path, l)?;
        let moved = &reflect(&(&hat + &s.rho_hat), a) - &s.rho_hat;
        borel::track(&self.rs, &s.target, &s.back, &moved)
    }
}

/// The q(n) star action: s_αλ, shifted by −α when ⟨λ, ᾱ⟩ = 0.
#[derive(Clone, Debug)]
pub struct QueerStar {
    rs: RootSystem,
}

impl QueerStar {
    pub fn new(rs: &RootSystem) -> Result<QueerStar> {
        if rs.family.kind != Kind::Queer {
            return Err(Error::Unsupported("the q(n) star action needs a q(n) family".into()));
        }
        Ok(QueerStar { rs: rs.clone() })
    }
}

impl StarAction for QueerStar {
    fn system(&self) -> &RootSystem {
        &self.rs
    }

    fn apply(&self, alpha: usize, l: &Weight) -> Result<Weight> {
        let a = self.rs.even_simple.get(alpha).ok_or_else(|| Error::Precondition(format!("no even simple root {alpha}")))?;
        let s = reflect(l, a);
        Ok(if form(l, &bar(a)).is_zero() { &s - a } else { s })
    }
}

/// Either kind of star action, chosen at run time.
pub enum AnyStar {
    Map(StarMap),
    Queer(QueerStar),
}

impl AnyStar {
    /// The q(n) action for q families, otherwise the named map.
    pub fn for_family(rs: &RootSystem, map: &str) -> Result<AnyStar> {
        if rs.family.kind == Kind::Queer {
            Ok(AnyStar::Queer(QueerStar::new(rs)?))
        } else {
            Ok(AnyStar::Map(StarMap::by_name(rs, map)?))
        }
    }
}

impl StarAction for AnyStar {
    fn system(&self) -> &RootSystem {
        match self {
            AnyStar::Map(m) => m.system(),
            AnyStar::Queer(m) => m.system(),
        }
    }

    fn apply(&self, alpha: usize, l: &Weight) -> Result<Weight> {
        match self {
            AnyStar::Map(m) => m.apply(alpha, l),
            AnyStar::Queer(m) => m.apply(alpha, l),
        }
    }
}

/// The osp formula for s_{2δn} ∗′ λ, valid for weakly generic λ.
pub fn star_closed_form_osp(rs: &RootSystem, tester: &GenericTester, l: &Weight) -> Result<Weight> {
    if rs.family.kind != Kind::Osp {
        return Err(Error::Unsupported("closed form is for osp".into()));
    }
    if !tester.is_weakly_generic(l) {
        return Err(Error::Precondition("weight is not weakly generic".into()));
    }
    let (ne, nd) = rs.dims();
    let b = Borel::distinguished(rs);
    let rho = b.rho(rs).rho;
    let a = last_c(rs);
    let base = &reflect(&(l + &rho), &a) - &rho;
    let dn = Weight::del_unit(ne, nd, nd - 1);
    let x = l + &rho;
    for i in 0..ne {
        let ei = Weight::eps_unit(ne, nd, i);
        if form(&x, &(&dn - &ei)).is_zero() {
            return Ok(&(&base - &dn) - &ei);
        }
        if form(&x, &(&dn + &ei)).is_zero() {
            return Ok(&(&base - &dn) + &ei);
        }
    }
    Ok(base)
}

/// For weakly generic λ: s_{ak}⋯s_{a1} ∗ λ = w(λ + Σγ), the sum over positive
/// γ with ⟨γ̄, λ⟩ = 0 and w(γ) < 0.
pub fn star_closed_form_q(rs: &RootSystem, w: &WeylGroup, word: &[usize], l: &Weight) -> Result<Weight> {
    if rs.family.kind != Kind::Queer {
        return Err(Error::Unsupported("closed form is for q(n)".into()));
    }
    let e = w.from_word(word)?;
    let mut x = l.clone();
    for g in &rs.even_positive {
        if form(l, &bar(g)).is_zero() && !rs.even_positive.contains(&w.act(e, g)) {
            x += g;
        }
    }
    Ok(w.act(e, &x))
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitEdge {
    pub from: usize,
    pub label: String,
    pub to: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct Orbit {
    pub base: Weight,
    pub vertices: Vec<Weight>,
    pub edges: Vec<OrbitEdge>,
    pub truncated: bool,
}

/// Breadth-first closure of λ under all generators, capped at `max_vertices`.
pub fn orbit(action: &dyn StarAction, l: &Weight, max_vertices: usize) -> Result<Orbit> {
    let rs = action.system();
    let mut index: HashMap<Weight, usize> = HashMap::from([(l.clone(), 0)]);
    let mut vertices = vec![l.clone()];
    let mut edges = Vec::new();
    let mut truncated = false;
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for a in 0..action.rank() {
            let y = action.apply(a, &vertices[i])?;
            let j = match index.get(&y) {
                Some(&j) => j,
                None => {
                    if vertices.len() >= max_vertices {
                        truncated = true;
                        continue;
                    }
                    let j = vertices.len();
                    index.insert(y.clone(), j);
                    vertices.push(y);
                    queue.push_back(j);
                    j
                }
            };
            edges.push(OrbitEdge { from: i, label: root_literal(&rs.even_simple[a]), to: j });
        }
    }
    Ok(Orbit { base: l.clone(), vertices, edges, truncated })
}

impl Orbit {
    /// DOT graph with one fill colour per chamber.
    pub fn to_dot(&self, rs: &RootSystem) -> String {
        const PALETTE: [&str; 12] = [
            "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5", "#d9d9d9",
            "#bc80bd", "#ccebc5", "#ffed6f",
        ];
        let mut colours: HashMap<Vec<i8>, usize> = HashMap::new();
        let mut out = String::from("graph orbit {\n  node [style=filled];\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let c = chamber(rs, v);
            let n = colours.len();
            let k = *colours.entry(c).or_insert(n);
            out.push_str(&format!("  v{i} [label=\"{}\", fillcolor=\"{}\"];\n", v, PALETTE[k % PALETTE.len()]));
        }
        for e in &self.edges {
            if e.from < e.to {
                out.push_str(&format!("  v{} -- v{} [label=\"{}\"];\n", e.from, e.to, e.label));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Which rule decides α-finiteness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    /// pick from the family
    Auto,
    /// ⟨λ+ρ, α∨⟩ ∈ N with the distinguished Borel of gl/sl
    TypeOne,
    /// integral and s_α ∗′ λ < λ
    OspPrime,
    /// integral and s_α ∗ λ < λ
    Queer,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "result", content = "reason")]
pub enum Finiteness {
    Finite,
    Free,
    Undecidable(String),
}

impl Finiteness {
    fn of(b: bool) -> Finiteness {
        if b {
            Finiteness::Finite
        } else {
            Finiteness::Free
        }
    }

    pub fn is_finite(&self) -> Option<bool> {
        match self {
            Finiteness::Finite => Some(true),
            Finiteness::Free => Some(false),
            Finiteness::Undecidable(_) => None,
        }
    }
}

/// Whether L(λ) is α-finite, for α = even_simple[alpha].
pub fn alpha_finite(rs: &RootSystem, l: &Weight, alpha: usize, crit: Criterion) -> Result<Finiteness> {
    let a = rs.even_simple.get(alpha).ok_or_else(|| Error::Precondition(format!("no even simple root {alpha}")))?;
    let crit = match (crit, rs.family.kind) {
        (Criterion::Auto, Kind::Gl | Kind::Sl) => Criterion::TypeOne,
        (Criterion::Auto, Kind::Osp) => Criterion::OspPrime,
        (Criterion::Auto, Kind::Queer) => Criterion::Queer,
        (c, _) => c,
    };
    let b = Borel::distinguished(rs);
    match (crit, rs.family.kind) {
        (Criterion::TypeOne, Kind::Gl | Kind::Sl) => {
            Ok(Finiteness::of(is_pos_int(&pair_coroot(&(l + &b.rho(rs).rho), a))))
        }
        (Criterion::OspPrime, Kind::Osp) => {
            let m = StarMap::osp_prime(rs)?;
            let ok = is_int(&pair_coroot(l, a)) && Order::of(&b).gt(l, &m.apply(alpha, l)?);
            Ok(Finiteness::of(ok))
        }
        (Criterion::Queer, Kind::Queer) => {
            let m = QueerStar::new(rs)?;
            let ok = is_int(&pair_coroot(l, a)) && Order::of(&b).gt(l, &m.apply(alpha, l)?);
            Ok(Finiteness::of(ok))
        }
        (c, k) => Ok(Finiteness::Undecidable(format!("criterion {c:?} does not apply to family kind {k:?}"))),
    }
}

/// α-finiteness by transport to a Borel where α or α/2 is simple, then
/// s_α(λ̂+ρ̂) < λ̂+ρ̂ there (with ⟨λ, α∨⟩ integral).
pub fn alpha_finite_direct(rs: &RootSystem, l: &Weight, alpha: usize, cap: usize) -> Result<bool> {
    if rs.family.kind == Kind::Queer {
        return Err(Error::Unsupported("no odd reflections for q(n)".into()));
    }
    let a = &rs.even_simple[alpha];
    if !is_int(&pair_coroot(l, a)) {
        return Ok(false);
    }
    let d = Borel::distinguished(rs);
    let t = if d.has_simple_or_half(a) {
        d.clone()
    } else {
        borel::enumerate(rs, cap)?
            .into_iter()
            .find(|b| b.has_simple_or_half(a))
            .ok_or_else(|| Error::Precondition("no Borel with α simple".into()))?
    };
    let p = borel::path(rs, &d, &t)?;
    let hat = borel::track(rs, &d, &p, l)?;
    let x = &hat + &t.rho(rs).rho;
    Ok(Order::of(&t).gt(&x, &reflect(&x, a)))
}

/// s_α ∗ λ − s_α · λ, which must lie in the Z-span of the odd roots.
pub fn central_shadow(action: &dyn StarAction, rho: &Weight, alpha: usize, l: &Weight) -> Result<Weight> {
    let rs = action.system();
    let a = &rs.even_simple[alpha];
    let dot = &reflect(&(l + rho), a) - rho;
    Ok(&action.apply(alpha, l)? - &dot)
}

/// Whether x lies in the Z-span of the odd roots.
pub fn in_odd_lattice(rs: &RootSystem, x: &Weight) -> bool {
    if !x.is_integral() {
        return false;
    }
    match rs.family.kind {
        // ε_i − δ_j span {x integral : Σ x = 0}
        Kind::Gl | Kind::Sl | Kind::Queer => x.coord_sum().is_zero(),
        Kind::Osp if rs.family.m % 2 == 1 => true,
        Kind::Osp => {
            let s: crate::weight::Q = x.coord_sum();
            (s / q(2)).is_integer()
        }
    }
}
