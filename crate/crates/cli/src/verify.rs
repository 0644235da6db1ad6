//! Named property suites for `superstar verify`. Deterministic given a seed.

use std::collections::{BTreeSet, HashSet};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use superstar::borel::Borel;
use superstar::chars::twisted_verma_character_equal;
use superstar::generic::{GenericTester, DEFAULT_GAMMA_CAP};
use superstar::primposet::{small_rank_poset, star_inclusion_edges, InclusionGraph};
use superstar::rootdata::{form, Kind};
use superstar::star::{alpha_finite, alpha_finite_direct, orbit, Criterion, QueerStar, StarAction, StarMap};
use superstar::weight::qf;
use superstar::weyl::{chamber, is_open_chamber, IntegralData, WeylGroup, DEFAULT_WEYL_CAP};
use superstar::{Family, Result, RootSystem, Weight, Q};

pub const SUITES: [&str; 6] = ["involution", "prop7.2", "thm7.3", "lemma8.1", "charverma", "smallrank"];

#[derive(Debug, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: usize,
    pub failures: Vec<String>,
    pub passed: bool,
}

struct Run {
    rng: ChaCha8Rng,
    checks: usize,
    failures: Vec<String>,
}

impl Run {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }
}

fn system(f: &str) -> RootSystem {
    RootSystem::new(f.parse::<Family>().expect("built-in family"))
}

fn random_weight(rs: &RootSystem, rng: &mut ChaCha8Rng, range: i64) -> Weight {
    const DENS: [i64; 6] = [1, 1, 1, 2, 3, 4];
    let (ne, nd) = rs.dims();
    let mut c = |_| {
        let d = DENS[rng.gen_range(0..DENS.len())];
        qf(rng.gen_range(-range * d..=range * d), d)
    };
    let w = Weight::new((0..ne).map(&mut c).collect(), (0..nd).map(&mut c).collect());
    rs.family.sl_normalize(&w)
}

/// Moves λ onto an atypicality hyperplane of a random positive odd root.
fn force_atypical(rs: &RootSystem, rng: &mut ChaCha8Rng, l: &Weight) -> Weight {
    let mut x = l.clone();
    if rs.family.kind == Kind::Queer {
        let n = rs.family.m;
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        x.eps[j] = -x.eps[i];
        return x;
    }
    let b = Borel::distinguished(rs);
    let iso: Vec<&Weight> = b.odd_positive.iter().filter(|g| rs.is_isotropic(g)).collect();
    if iso.is_empty() {
        return x;
    }
    let g = iso[rng.gen_range(0..iso.len())];
    let rho = b.rho(rs).rho;
    let (ne, nd) = rs.dims();
    let j = g.del.iter().position(|c| *c != Q::from_integer(0)).expect("odd roots have a δ part");
    let unit = Weight::del_unit(ne, nd, j);
    let shift = form(&(&x + &rho), g) / form(&unit, g);
    x.del[j] -= shift;
    rs.family.sl_normalize(&x)
}

fn maps(rs: &RootSystem, rng: &mut ChaCha8Rng) -> Result<Vec<Box<dyn StarAction>>> {
    if rs.family.kind == Kind::Queer {
        return Ok(vec![Box::new(QueerStar::new(rs)?)]);
    }
    let mut v: Vec<Box<dyn StarAction>> =
        StarMap::builtins(rs).into_iter().map(|m| Box::new(m) as Box<dyn StarAction>).collect();
    let seed: u64 = rng.gen();
    v.push(Box::new(StarMap::from_choices(rs, 10_000, |i, n| ((seed >> (4 * i)) as usize) % n)?));
    Ok(v)
}

pub fn run(suite: &str, seed: u64, count: usize) -> Result<SuiteReport> {
    let mut r = Run { rng: ChaCha8Rng::seed_from_u64(seed), checks: 0, failures: Vec::new() };
    match suite {
        "involution" => involution(&mut r, count)?,
        "prop7.2" => cosets(&mut r, count)?,
        "thm7.3" => generic_orbits(&mut r, count)?,
        "lemma8.1" => finiteness_grid(&mut r)?,
        "charverma" => twisted(&mut r, count)?,
        "smallrank" => small_rank(&mut r)?,
        other => {
            return Err(superstar::Error::Parse(format!("unknown suite '{other}'; expected one of {}", SUITES.join(", "))))
        }
    }
    Ok(SuiteReport { suite: suite.into(), seed, checks: r.checks, passed: r.failures.is_empty(), failures: r.failures })
}

fn involution(r: &mut Run, count: usize) -> Result<()> {
    for f in ["gl:2,1", "gl:3,2", "sl:3,1", "osp:3,2", "osp:4,2", "q:3"] {
        let rs = system(f);
        let ms = maps(&rs, &mut r.rng)?;
        for _ in 0..count {
            let mut l = random_weight(&rs, &mut r.rng, 6);
            if r.rng.gen_bool(0.5) {
                l = force_atypical(&rs, &mut r.rng, &l);
            }
            for m in &ms {
                for a in 0..m.rank() {
                    let back = m.apply(a, &m.apply(a, &l)?)?;
                    r.check(back == l, || format!("{f}: s{a} is not an involution at {l}"));
                }
            }
        }
    }
    Ok(())
}

fn cosets(r: &mut Run, count: usize) -> Result<()> {
    for f in ["gl:3,2", "osp:3,2", "q:3"] {
        let rs = system(f);
        let w = WeylGroup::new(&rs, DEFAULT_WEYL_CAP)?;
        let ms = maps(&rs, &mut r.rng)?;
        let mut seen = 0;
        while seen < count {
            let mut l = random_weight(&rs, &mut r.rng, 5);
            if r.rng.gen_bool(0.5) {
                l = force_atypical(&rs, &mut r.rng, &l);
            }
            let d = IntegralData::new(&rs, &w, &l)?;
            if d.cosets.len() < 2 {
                continue;
            }
            seen += 1;
            for &x in &d.cosets {
                let words = w.reduced_words(x);
                let first = ms[0].apply_word(&words[0], &l)?;
                for m in &ms {
                    for word in &words {
                        let got = m.apply_word(word, &l)?;
                        r.check(got == first, || format!("{f}: λ = {l}, word {word:?} gives {got}, expected {first}"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn generic_orbits(r: &mut Run, count: usize) -> Result<()> {
    for f in ["gl:2,1", "gl:3,2", "osp:3,2", "osp:4,2", "q:3"] {
        let rs = system(f);
        let b = Borel::distinguished(&rs);
        let t = GenericTester::new(&rs, &b, DEFAULT_GAMMA_CAP)?;
        let w = WeylGroup::new(&rs, DEFAULT_WEYL_CAP)?;
        let ms = maps(&rs, &mut r.rng)?;
        let mut seen = 0;
        while seen < count {
            let mut l = random_weight(&rs, &mut r.rng, 400);
            if r.rng.gen_bool(0.5) {
                l = force_atypical(&rs, &mut r.rng, &l);
            }
            if !t.is_generic(&l) {
                continue;
            }
            seen += 1;
            let o = orbit(ms[0].as_ref(), &l, 4 * w.size())?;
            r.check(o.vertices.len() == w.size(), || format!("{f}: orbit of {l} has {} vertices", o.vertices.len()));
            let ch: BTreeSet<Vec<i8>> = o.vertices.iter().map(|x| chamber(&rs, x)).collect();
            r.check(ch.len() == w.size() && ch.iter().all(|c| is_open_chamber(c)), || format!("{f}: chambers of {l}"));
            let vs: HashSet<&Weight> = o.vertices.iter().collect();
            for e in 0..w.size() {
                let want = ms[0].apply_word(w.word(e), &l)?;
                r.check(vs.contains(&want), || format!("{f}: {want} missing from the orbit of {l}"));
                for m in &ms[1..] {
                    let got = m.apply_word(w.word(e), &l)?;
                    r.check(got == want, || format!("{f}: map dependence at {l}"));
                }
            }
            for _ in 0..5 {
                let word: Vec<usize> = (0..r.rng.gen_range(0..=8)).map(|_| r.rng.gen_range(0..w.rank())).collect();
                let e = w.from_word(&word)?;
                let a = ms[0].apply_word(&word, &l)?;
                let b = ms[0].apply_word(w.word(e), &l)?;
                r.check(a == b, || format!("{f}: word {word:?} at {l}"));
            }
        }
    }
    Ok(())
}

fn finiteness_grid(r: &mut Run) -> Result<()> {
    let rs = system("osp:3,2");
    let grid: Vec<Q> = (-10..=10).map(|n| qf(n, 2)).collect();
    for x in &grid {
        for y in &grid {
            let l = Weight::new(vec![*x], vec![*y]);
            for a in 0..rs.even_simple.len() {
                let star = alpha_finite(&rs, &l, a, Criterion::OspPrime)?.is_finite();
                let direct = alpha_finite_direct(&rs, &l, a, 10_000)?;
                r.check(star == Some(direct), || format!("λ = {l}, root {a}: star {star:?}, direct {direct}"));
            }
        }
    }
    Ok(())
}

fn twisted(r: &mut Run, count: usize) -> Result<()> {
    for f in ["gl:2,1", "gl:3,2", "sl:3,1", "osp:1,2", "osp:3,2", "osp:4,2", "q:2", "q:3"] {
        let rs = system(f);
        let b = Borel::distinguished(&rs);
        for _ in 0..count {
            let mut l = random_weight(&rs, &mut r.rng, 8);
            if r.rng.gen_bool(0.5) {
                l = force_atypical(&rs, &mut r.rng, &l);
            }
            for a in 0..rs.even_simple.len() {
                let ok = twisted_verma_character_equal(&rs, &b, &l, a, DEFAULT_GAMMA_CAP)?;
                r.check(ok, || format!("{f}: λ = {l}, root {a}"));
            }
        }
    }
    Ok(())
}

fn small_rank(r: &mut Run) -> Result<()> {
    let half: Vec<Q> = (-6..=6).map(|n| qf(n, 2)).collect();
    let cases: Vec<(&str, Vec<Weight>)> = vec![
        ("osp:1,2", (-24..=24).map(|n| Weight::new(vec![], vec![qf(n, 6)])).collect()),
        ("q:2", half.iter().flat_map(|a| half.iter().map(move |b| Weight::new(vec![*a, *b], vec![]))).collect()),
        (
            "sl:2,1",
            half.iter()
                .flat_map(|a| half.iter().flat_map(move |b| (-4..=4).map(move |c| Weight::new(vec![*a, *b], vec![qf(c, 2)]))))
                .collect(),
        ),
    ];
    for (f, grid) in cases {
        let rs = system(f);
        let ms: Vec<Box<dyn StarAction>> = match rs.family.kind {
            Kind::Queer => vec![Box::new(QueerStar::new(&rs)?)],
            _ => StarMap::builtins(&rs).into_iter().map(|m| Box::new(m) as Box<dyn StarAction>).collect(),
        };
        let refs: Vec<&dyn StarAction> = ms.iter().map(|m| m.as_ref()).collect();
        for l in grid {
            let l = rs.family.sl_normalize(&l);
            let g = star_inclusion_edges(&refs, &[l.clone()], Criterion::Auto, 64)?;
            let mut s = InclusionGraph::new();
            for v in &g.vertices {
                s.merge(&small_rank_poset(&rs, v)?);
            }
            r.check(g.skipped.is_empty() && g.relation() == s.relation(), || format!("{f}: graphs differ at {l}"));
        }
    }
    Ok(())
}
