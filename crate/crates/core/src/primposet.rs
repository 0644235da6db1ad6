//! Graphs of inclusions between primitive ideals J(λ) = Ann L(λ).
//!
//! An edge `from → to` records J(from) ⊆ J(to); `strict` marks a proper
//! inclusion. Absence of an edge is only meaningful where the generating rule
//! is an equivalence.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt::Write as _;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::borel::{self, Borel};
use crate::error::{Error, Result};
use crate::generic::{GenericTester, DEFAULT_GAMMA_CAP};
use crate::kl::{kl_polynomials, LeftOrder, DEFAULT_KL_CAP};
use crate::rootdata::{form, pair_coroot, reflect, Kind, RootSystem};
use crate::star::{alpha_finite, AnyStar, Criterion, Finiteness, StarAction};
use crate::typicality::{atypical_roots, is_dot_regular};
use crate::weight::{is_int, is_pos_int, Weight};
use crate::weyl::{chamber, IntegralData, WeylGroup, DEFAULT_WEYL_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub tag: String,
    pub strict: bool,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct InclusionGraph {
    pub vertices: Vec<Weight>,
    pub edges: Vec<Edge>,
    /// (weight, reason) pairs where a rule could not be decided
    pub skipped: Vec<(Weight, String)>,
    #[serde(skip)]
    index: HashMap<Weight, usize>,
}

/// Equality classes and covering relations between them.
#[derive(Clone, Debug, Serialize)]
pub struct Hasse {
    pub classes: Vec<Vec<Weight>>,
    pub covers: Vec<Edge>,
}

impl InclusionGraph {
    pub fn new() -> InclusionGraph {
        InclusionGraph::default()
    }

    pub fn node(&mut self, w: &Weight) -> usize {
        if let Some(&i) = self.index.get(w) {
            return i;
        }
        self.vertices.push(w.clone());
        self.index.insert(w.clone(), self.vertices.len() - 1);
        self.vertices.len() - 1
    }

    pub fn find(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    /// J(from) ⊆ J(to).
    pub fn include(&mut self, from: &Weight, to: &Weight, tag: &str, strict: bool) {
        let (a, b) = (self.node(from), self.node(to));
        if a == b {
            return;
        }
        let e = Edge { from: a, to: b, tag: tag.into(), strict };
        if !self.edges.contains(&e) {
            self.edges.push(e);
        }
    }

    pub fn equal(&mut self, a: &Weight, b: &Weight, tag: &str) {
        self.include(a, b, tag, false);
        self.include(b, a, tag, false);
    }

    pub fn merge(&mut self, other: &InclusionGraph) {
        for v in &other.vertices {
            self.node(v);
        }
        for e in &other.edges {
            let (a, b) = (other.vertices[e.from].clone(), other.vertices[e.to].clone());
            self.include(&a, &b, &e.tag, e.strict);
        }
        self.skipped.extend(other.skipped.iter().cloned());
    }

    /// Reflexive-transitive reachability.
    pub fn reach(&self) -> Vec<Vec<bool>> {
        let n = self.vertices.len();
        let mut adj = vec![Vec::new(); n];
        for e in &self.edges {
            adj[e.from].push(e.to);
        }
        (0..n)
            .map(|s| {
                let mut seen = vec![false; n];
                seen[s] = true;
                let mut q = VecDeque::from([s]);
                while let Some(u) = q.pop_front() {
                    for &v in &adj[u] {
                        if !seen[v] {
                            seen[v] = true;
                            q.push_back(v);
                        }
                    }
                }
                seen
            })
            .collect()
    }

    /// Pairs joined by a path through at least one strict edge.
    fn strict_reach(&self, reach: &[Vec<bool>]) -> Vec<Vec<bool>> {
        let n = self.vertices.len();
        let mut out = vec![vec![false; n]; n];
        for e in self.edges.iter().filter(|e| e.strict) {
            for a in (0..n).filter(|&a| reach[a][e.from]) {
                for b in (0..n).filter(|&b| reach[e.to][b]) {
                    out[a][b] = true;
                }
            }
        }
        out
    }

    /// Every implied inclusion as an edge.
    pub fn transitive_closure(&self) -> InclusionGraph {
        let reach = self.reach();
        let strict = self.strict_reach(&reach);
        let mut g = InclusionGraph::new();
        for v in &self.vertices {
            g.node(v);
        }
        let n = self.vertices.len();
        for a in 0..n {
            for b in 0..n {
                if a != b && reach[a][b] {
                    let tag = self
                        .edges
                        .iter()
                        .find(|e| e.from == a && e.to == b)
                        .map_or("closure".to_string(), |e| e.tag.clone());
                    g.edges.push(Edge { from: a, to: b, tag, strict: strict[a][b] });
                }
            }
        }
        g.skipped = self.skipped.clone();
        g
    }

    /// Non-reflexive inclusion pairs after closure.
    pub fn relation(&self) -> BTreeSet<(Weight, Weight)> {
        let reach = self.reach();
        let n = self.vertices.len();
        let mut out = BTreeSet::new();
        for a in 0..n {
            for b in 0..n {
                if a != b && reach[a][b] {
                    out.insert((self.vertices[a].clone(), self.vertices[b].clone()));
                }
            }
        }
        out
    }

    /// Classes of mutually included ideals, ordered by first vertex.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let reach = self.reach();
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for a in 0..n {
            if seen[a] {
                continue;
            }
            let c: Vec<usize> = (0..n).filter(|&b| reach[a][b] && reach[b][a]).collect();
            for &b in &c {
                seen[b] = true;
            }
            out.push(c);
        }
        out
    }

    /// No strict inclusion inside an equality class.
    pub fn is_consistent(&self) -> bool {
        let reach = self.reach();
        let strict = self.strict_reach(&reach);
        let n = self.vertices.len();
        (0..n).all(|a| (0..n).all(|b| !(strict[a][b] && reach[b][a])))
    }

    pub fn hasse(&self) -> Hasse {
        let reach = self.reach();
        let strict = self.strict_reach(&reach);
        let classes = self.classes();
        let rep: Vec<usize> = classes.iter().map(|c| c[0]).collect();
        let k = classes.len();
        let below = |i: usize, j: usize| i != j && reach[rep[i]][rep[j]];
        let mut covers = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if below(i, j) && !(0..k).any(|m| m != i && m != j && below(i, m) && below(m, j)) {
                    let tags: BTreeSet<&str> = self
                        .edges
                        .iter()
                        .filter(|e| classes[i].contains(&e.from) && classes[j].contains(&e.to))
                        .map(|e| e.tag.as_str())
                        .collect();
                    let tag = if tags.is_empty() { "closure".to_string() } else { tags.into_iter().collect::<Vec<_>>().join(",") };
                    covers.push(Edge { from: i, to: j, tag, strict: strict[rep[i]][rep[j]] });
                }
            }
        }
        Hasse {
            classes: classes.iter().map(|c| c.iter().map(|&v| self.vertices[v].clone()).collect()).collect(),
            covers,
        }
    }

    /// Hasse diagram in DOT; dashed edges are not known to be proper.
    pub fn to_dot(&self) -> String {
        let h = self.hasse();
        let mut s = String::from("digraph ideals {\n  rankdir=BT;\n  node [shape=box];\n");
        for (i, c) in h.classes.iter().enumerate() {
            let label: Vec<String> = c.iter().map(|w| w.to_string()).collect();
            let _ = writeln!(s, "  c{i} [label=\"{}\"];", label.join(" = "));
        }
        for e in &h.covers {
            let style = if e.strict { "solid" } else { "dashed" };
            let _ = writeln!(s, "  c{} -> c{} [label=\"{}\", style={style}];", e.from, e.to, e.tag);
        }
        s.push_str("}\n");
        s
    }
}

/// Which of the three rank-one classifications applies.
fn small_rank_kind(rs: &RootSystem) -> Option<&'static str> {
    let f = &rs.family;
    match (f.kind, f.m, f.n) {
        (Kind::Osp, 1, 1) => Some("osp12"),
        (Kind::Queer, 2, _) => Some("q2"),
        (Kind::Sl, 2, 1) => Some("sl21"),
        _ => None,
    }
}

/// The complete classification for osp(1|2), q(2) and sl(2|1), restricted
/// to the orbit of λ.
pub fn small_rank_poset(rs: &RootSystem, l: &Weight) -> Result<InclusionGraph> {
    let kind = small_rank_kind(rs).ok_or_else(|| Error::Unsupported(format!("no small-rank classification for {}", rs.family)))?;
    rs.family.validate(l)?;
    let l = rs.family.sl_normalize(l);
    let a = rs.even_simple[0].clone();
    let b = Borel::distinguished(rs);
    let rho = b.rho(rs).rho;
    let dot = |x: &Weight| &reflect(&(x + &rho), &a) - &rho;
    let mut g = InclusionGraph::new();
    let integral = is_int(&pair_coroot(&l, &a));
    match kind {
        "osp12" | "sl21" => {
            let mu = dot(&l);
            g.node(&l);
            g.node(&mu);
            if !integral {
                g.equal(&l, &mu, "non-integral");
            } else {
                for (x, y) in [(&l, &mu), (&mu, &l)] {
                    let dominant = if kind == "osp12" {
                        !pair_coroot(x, &a).is_negative()
                    } else {
                        is_pos_int(&pair_coroot(&(x + &rho), &a))
                    };
                    if dominant && x != y {
                        g.include(y, x, "dominant", true);
                    }
                }
            }
            if kind == "sl21" {
                let zero = rs.zero();
                let e2d = rs.family.sl_normalize(&crate::rootdata::parse_linear("e2-d1", rs.dims())?);
                if [zero.clone(), dot(&zero), e2d.clone()].contains(&l) {
                    let z1 = dot(&zero);
                    g.include(&z1, &zero, "dominant", true);
                    g.include(&e2d, &zero, "extra", true);
                }
            }
        }
        "q2" => {
            let sl = reflect(&l, &a);
            let sum = &l.eps[0] + &l.eps[1];
            let mu = if sum.is_zero() { &sl - &a } else { sl };
            g.node(&l);
            g.node(&mu);
            if !integral {
                g.equal(&l, &mu, "non-integral");
            } else {
                for (x, y) in [(&l, &mu), (&mu, &l)] {
                    let d = pair_coroot(x, &a);
                    let dominant = is_pos_int(&d) || x.is_zero();
                    if dominant && x != y {
                        g.include(y, x, "dominant", true);
                    }
                }
            }
        }
        _ => unreachable!(),
    }
    Ok(g)
}

/// Edges from star maps: equality across non-integral reflections and
/// J(s_α∗λ) ⊆ J(λ) when L(λ) is α-finite. Explores the orbits of `seeds`
/// under all maps up to `max_vertices` weights.
pub fn star_inclusion_edges(
    maps: &[&dyn StarAction],
    seeds: &[Weight],
    crit: Criterion,
    max_vertices: usize,
) -> Result<InclusionGraph> {
    let rs = maps.first().ok_or_else(|| Error::Precondition("no star maps given".into()))?.system().clone();
    let mut g = InclusionGraph::new();
    let mut queue: VecDeque<Weight> = VecDeque::new();
    for s in seeds {
        rs.family.validate(s)?;
        let s = rs.family.sl_normalize(s);
        if g.find(&s).is_none() {
            g.node(&s);
            queue.push_back(s);
        }
    }
    while let Some(l) = queue.pop_front() {
        for m in maps {
            for (i, a) in rs.even_simple.iter().enumerate() {
                let mu = m.apply(i, &l)?;
                let fresh = g.find(&mu).is_none();
                if fresh && g.vertices.len() >= max_vertices {
                    g.skipped.push((l.clone(), "vertex cap reached".into()));
                    continue;
                }
                if !is_int(&pair_coroot(&l, a)) {
                    g.equal(&l, &mu, "non-integral");
                } else {
                    match alpha_finite(&rs, &l, i, crit)? {
                        Finiteness::Finite => g.include(&mu, &l, "alpha-finite", false),
                        Finiteness::Free => {
                            g.node(&mu);
                        }
                        Finiteness::Undecidable(r) => {
                            g.node(&mu);
                            g.skipped.push((l.clone(), r));
                        }
                    }
                }
                if fresh {
                    queue.push_back(mu);
                }
            }
        }
    }
    Ok(g)
}

/// How the q(n) non-integral generic case is ordered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenericMode {
    /// only the sufficient cell / left Bruhat condition inside W_λ
    Proved,
    /// the left Kazhdan–Lusztig order inside W_λ
    Conjectural,
}

/// Classical ideal order on a Weyl group: I(x·Λ) ⊆ I(y·Λ) for dominant
/// regular Λ, i.e. x⁻¹ ≤_L y⁻¹ in the left preorder.
pub struct IdealOrder {
    pub group: WeylGroup,
    pub left: LeftOrder,
}

impl IdealOrder {
    pub fn new(group: WeylGroup) -> Result<IdealOrder> {
        let p = kl_polynomials(&group, DEFAULT_KL_CAP)?;
        let left = LeftOrder::new(&group, &p);
        Ok(IdealOrder { group, left })
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.left.leq(self.group.inverse(x), self.group.inverse(y))
    }

    /// Elements with the same ideal as x.
    pub fn class(&self, x: usize) -> Vec<usize> {
        (0..self.group.size()).filter(|&y| self.leq(x, y) && self.leq(y, x)).collect()
    }

    /// The source's sufficient condition: v1 ~ u1, v2 ~ u2 and v2 below v1 in
    /// the left weak order, all read through inverses.
    pub fn proved_leq(&self, u1: usize, u2: usize) -> bool {
        let w = &self.group;
        let c1 = self.class(u1);
        let c2 = self.class(u2);
        c1.iter().any(|&v1| c2.iter().any(|&v2| w.left_weak_leq(w.inverse(v2), w.inverse(v1))))
    }
}

/// Ideal order of a product group, compared factor by factor.
struct ProductOrder {
    parts: Vec<(IdealOrder, Vec<usize>)>,
    /// element of the whole group → component indices
    split: Vec<Vec<usize>>,
}

impl ProductOrder {
    /// Splits `whole` by sorting its generators into classes by `class_of`.
    fn new(whole: &WeylGroup, gens: &[Weight], class_of: impl Fn(&Weight) -> usize, classes: usize) -> Result<ProductOrder> {
        let dims = gens.first().map(|g| g.dims()).unwrap_or((0, 0));
        let mut parts = Vec::new();
        for c in 0..classes {
            let idx: Vec<usize> = (0..gens.len()).filter(|&i| class_of(&gens[i]) == c).collect();
            let sub = WeylGroup::generated(dims, idx.iter().map(|&i| gens[i].clone()).collect(), whole.size())?;
            parts.push((IdealOrder::new(sub)?, idx));
        }
        let mut split = Vec::new();
        for e in 0..whole.size() {
            let word = whole.word(e);
            let mut comps = Vec::new();
            for (ord, idx) in &parts {
                let sub_word: Vec<usize> =
                    word.iter().filter_map(|g| idx.iter().position(|i| i == g)).collect();
                comps.push(ord.group.from_word(&sub_word)?);
            }
            split.push(comps);
        }
        Ok(ProductOrder { parts, split })
    }

    fn leq(&self, x: usize, y: usize) -> bool {
        self.parts.iter().enumerate().all(|(k, (o, _))| o.leq(self.split[x][k], self.split[y][k]))
    }
}

fn dominant_regular(rs: &RootSystem, shift: &Weight, l: &Weight) -> bool {
    rs.even_positive.iter().all(|a| {
        let v = pair_coroot(&(l + shift), a);
        !is_int(&v) || v.is_positive()
    })
}

/// Nodes {w∗Λ} with the order given by the matching classification theorem.
pub fn generic_poset(rs: &RootSystem, l: &Weight, mode: GenericMode, weyl_cap: usize) -> Result<InclusionGraph> {
    rs.family.validate(l)?;
    let l = rs.family.sl_normalize(l);
    let w = WeylGroup::new(rs, weyl_cap)?;
    if w.size() > DEFAULT_KL_CAP {
        return Err(Error::CapExceeded { what: "group size for Kazhdan–Lusztig computations".into(), cap: DEFAULT_KL_CAP });
    }
    let b = Borel::distinguished(rs);
    let d = IntegralData::new(rs, &w, &l)?;
    let factors: Vec<(usize, usize)> = (0..w.size()).map(|e| d.factor(&w, e)).collect();
    let (nodes, tag): (Vec<Weight>, &str) = match rs.family.kind {
        Kind::Gl | Kind::Sl => {
            let rho = b.rho(rs).rho;
            if !dominant_regular(rs, &rho, &l) {
                return Err(Error::Precondition("weight is not dominant regular".into()));
            }
            ((0..w.size()).map(|e| w.shifted(e, &l, &rho)).collect(), "type-one")
        }
        Kind::Osp | Kind::Queer => {
            let t = GenericTester::new(rs, &b, DEFAULT_GAMMA_CAP)?;
            if !t.is_weakly_generic(&l) || chamber(rs, &l).iter().any(|&c| c != 1) {
                return Err(Error::Precondition("weight is not weakly generic dominant".into()));
            }
            let star = AnyStar::for_family(rs, "osp-star")?;
            let w0 = w.longest();
            if !t.is_generic(&star.apply_word(w.word(w0), &l)?) {
                return Err(Error::Precondition("w0 ∗ Λ is not generic".into()));
            }
            let nodes = (0..w.size()).map(|e| star.apply_word(w.word(e), &l)).collect::<Result<Vec<_>>>()?;
            (nodes, if rs.family.kind == Kind::Osp { "osp-product" } else { "queer" })
        }
    };
    let distinct: BTreeSet<&Weight> = nodes.iter().collect();
    if distinct.len() != nodes.len() {
        return Err(Error::Precondition("orbit is not regular".into()));
    }
    let sub = IntegralData::new(rs, &w, &l)?.sub;
    let leq: Box<dyn Fn(usize, usize) -> bool> = match rs.family.kind {
        Kind::Osp => {
            let po = ProductOrder::new(&sub, &d.simple, |g| usize::from(g.eps.iter().all(Zero::is_zero)), 2)?;
            Box::new(move |u1, u2| po.leq(u1, u2))
        }
        Kind::Queer if mode == GenericMode::Proved && sub.size() != w.size() => {
            let o = IdealOrder::new(sub)?;
            Box::new(move |u1, u2| o.proved_leq(u1, u2))
        }
        _ => {
            let o = IdealOrder::new(sub)?;
            Box::new(move |u1, u2| o.leq(u1, u2))
        }
    };
    let sufficient_only = rs.family.kind == Kind::Queer && mode == GenericMode::Proved && d.sub.size() != w.size();
    let tag = if sufficient_only { "left-cell-criterion" } else { tag };
    let mut g = InclusionGraph::new();
    for n in &nodes {
        g.node(n);
    }
    for e1 in 0..w.size() {
        for e2 in 0..w.size() {
            let (u1, u2) = (factors[e1].1, factors[e2].1);
            if e1 != e2 && leq(u1, u2) {
                let strict = !sufficient_only && !leq(u2, u1);
                g.include(&nodes[e1], &nodes[e2], tag, strict);
            }
        }
    }
    Ok(g)
}

/// J(λ+γ) ⊂ J(λ) for regular singly atypical λ with atypical root γ, one edge
/// per even simple α with ⟨λ+ρ, α∨⟩ ∈ N and ⟨λ+γ+ρ, α⟩ = 0.
pub fn extra_inclusions_singly_atypical(rs: &RootSystem, l: &Weight) -> Result<InclusionGraph> {
    let ok = match rs.family.kind {
        Kind::Gl | Kind::Sl => true,
        Kind::Osp => rs.family.m == 2,
        Kind::Queer => false,
    };
    if !ok {
        return Err(Error::Unsupported("singly atypical inclusions are for gl, sl and osp(2|2n)".into()));
    }
    rs.family.validate(l)?;
    let l = rs.family.sl_normalize(l);
    let b = Borel::distinguished(rs);
    if !is_dot_regular(rs, &b, &l) {
        return Err(Error::Precondition("weight is not regular".into()));
    }
    let at = atypical_roots(rs, &b, &l);
    if at.len() != 1 {
        return Err(Error::Precondition(format!("weight has {} atypical roots, expected one", at.len())));
    }
    let gamma = &at[0];
    let rho = b.rho(rs).rho;
    let up = &l + gamma;
    let mut g = InclusionGraph::new();
    g.node(&l);
    for a in &rs.even_simple {
        if is_pos_int(&pair_coroot(&(&l + &rho), a)) && form(&(&up + &rho), a).is_zero() {
            g.include(&up, &l, "singly-atypical", true);
        }
    }
    Ok(g)
}

/// A Borel B with s_α ∗_B λ = λ + γ, if one exists; the route the inclusion
/// above is proved by.
pub fn witness_borel(rs: &RootSystem, l: &Weight, alpha: usize, target: &Weight) -> Result<Option<Borel>> {
    let d = Borel::distinguished(rs);
    let a = &rs.even_simple[alpha];
    for t in borel::enumerate(rs, DEFAULT_WEYL_CAP)? {
        if !t.has_simple_or_half(a) {
            continue;
        }
        let mut asg = vec![d.clone(); rs.even_simple.len()];
        asg[alpha] = t.clone();
        let m = crate::star::StarMap::new(rs, d.clone(), asg, "witness")?;
        if &m.apply(alpha, l)? == target {
            return Ok(Some(t));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{parse_linear, Family};
    use crate::star::{QueerStar, StarMap};

    fn rs(f: &str) -> RootSystem {
        RootSystem::new(f.parse::<Family>().unwrap())
    }

    fn w(s: &str) -> Weight {
        Weight::parse_literal(s).unwrap()
    }

    #[test]
    fn closure_and_hasse() {
        let mut g = InclusionGraph::new();
        let (a, b, c) = (w("1|0"), w("2|0"), w("3|0"));
        g.include(&a, &b, "x", true);
        g.include(&b, &c, "x", false);
        let cl = g.transitive_closure();
        assert_eq!(cl.edges.len(), 3);
        assert!(cl.edges.iter().any(|e| e.from == 0 && e.to == 2 && e.strict));
        assert_eq!(cl.hasse().covers.len(), 2);
        let mut g = InclusionGraph::new();
        g.equal(&a, &b, "eq");
        assert_eq!(g.hasse().classes.len(), 1);
        assert!(InclusionGraph::new().transitive_closure().edges.is_empty());
        let mut bad = InclusionGraph::new();
        bad.include(&a, &b, "x", true);
        bad.include(&b, &a, "x", false);
        assert!(!bad.is_consistent());
    }

    #[test]
    fn small_rank_examples() {
        let r = rs("osp:1,2");
        let g = small_rank_poset(&r, &w("|1/3")).unwrap();
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.classes().len(), 1);
        let g = small_rank_poset(&r, &w("|2")).unwrap();
        assert_eq!(g.relation(), BTreeSet::from([(w("|-3"), w("|2"))]));

        let r = rs("q:2");
        let g = small_rank_poset(&r, &w("3,1")).unwrap();
        assert_eq!(g.relation(), BTreeSet::from([(w("1,3"), w("3,1"))]));
        let g = small_rank_poset(&r, &w("0,0")).unwrap();
        assert_eq!(g.relation(), BTreeSet::from([(w("-1,1"), w("0,0"))]));

        let r = rs("sl:2,1");
        let g = small_rank_poset(&r, &w("0,0|0")).unwrap();
        assert_eq!(g.vertices.len(), 3);
        assert!(g.relation().contains(&(w("0,1|-1"), w("0,0|0"))));
        assert!(g.relation().contains(&(w("-1,1|0"), w("0,0|0"))));
        assert!(small_rank_poset(&rs("gl:2,1"), &w("0,0|0")).is_err());
    }

    #[test]
    fn star_edges_gl21_example() {
        let r = rs("gl:2,1");
        let anti = StarMap::anti_distinguished(&r).unwrap();
        let g = star_inclusion_edges(&[&anti], &[r.zero()], Criterion::Auto, 50).unwrap();
        assert!(g.relation().contains(&(w("0,1|-1"), w("0,0|0"))));
        // non-integral: one equality class
        let l = w("1/2,0|0");
        let g = star_inclusion_edges(&[&anti], &[l.clone()], Criterion::Auto, 50).unwrap();
        assert_eq!(g.classes().len(), 1);
        assert_eq!(g.vertices.len(), 2);
    }

    #[test]
    fn q2_generic_chain() {
        let r = rs("q:2");
        let g = generic_poset(&r, &w("9,-4"), GenericMode::Proved, DEFAULT_WEYL_CAP).unwrap();
        let s = QueerStar::new(&r).unwrap().apply(0, &w("9,-4")).unwrap();
        assert_eq!(g.relation(), BTreeSet::from([(s, w("9,-4"))]));
        assert!(g.edges[0].strict);
    }

    #[test]
    fn osp32_generic_is_product() {
        let r = rs("osp:3,2");
        let l = w("40|17");
        let g = generic_poset(&r, &l, GenericMode::Proved, DEFAULT_WEYL_CAP).unwrap();
        assert_eq!(g.vertices.len(), 4);
        // W = Z2 × Z2: Λ on top, the far corner at the bottom, the two others incomparable
        let h = g.hasse();
        assert_eq!(h.classes.len(), 4);
        assert_eq!(h.covers.len(), 4);
    }

    #[test]
    fn singly_atypical_sl21() {
        let r = rs("sl:2,1");
        let g = extra_inclusions_singly_atypical(&r, &r.zero()).unwrap();
        assert_eq!(g.relation(), BTreeSet::from([(w("0,1|-1"), w("0,0|0"))]));
        let witness = witness_borel(&r, &r.zero(), 0, &w("0,1|-1")).unwrap();
        assert!(witness.is_some());
        let typical = w("5,1|-3");
        assert!(extra_inclusions_singly_atypical(&r, &typical).is_err());
        let r = rs("gl:3,1");
        let l = parse_linear("4e1+e2+e3-d1", (3, 1)).unwrap();
        let g = extra_inclusions_singly_atypical(&r, &l).unwrap();
        let up = w("4,1,2|-2");
        assert_eq!(g.relation(), BTreeSet::from([(up.clone(), l.clone())]));
        assert!(witness_borel(&r, &l, 1, &up).unwrap().is_some());
        let g = extra_inclusions_singly_atypical(&r, &w("4,1,0|0")).unwrap();
        assert!(g.edges.is_empty());
    }
}
