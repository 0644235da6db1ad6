#![allow(dead_code)]

pub mod hecke;

use rand::Rng;
use rand_chacha::ChaCha8Rng;

use superstar::borel::Borel;
use superstar::generic::{GenericTester, DEFAULT_GAMMA_CAP};
use superstar::rootdata::{form, Family, Kind, RootSystem};
use superstar::star::{AnyStar, QueerStar, StarAction, StarMap};
use superstar::weight::{qf, Q};
use superstar::Weight;

pub fn system(f: &str) -> RootSystem {
    RootSystem::new(f.parse::<Family>().unwrap())
}

pub fn rational(rng: &mut ChaCha8Rng, range: i64) -> Q {
    const DENS: [i64; 8] = [1, 1, 1, 2, 2, 3, 4, 5];
    let d = DENS[rng.gen_range(0..DENS.len())];
    qf(rng.gen_range(-range * d..=range * d), d)
}

pub fn random_weight(rs: &RootSystem, rng: &mut ChaCha8Rng, range: i64) -> Weight {
    let (ne, nd) = rs.dims();
    let w = Weight::new((0..ne).map(|_| rational(rng, range)).collect(), (0..nd).map(|_| rational(rng, range)).collect());
    rs.family.sl_normalize(&w)
}

pub fn random_int_weight(rs: &RootSystem, rng: &mut ChaCha8Rng, range: i64) -> Weight {
    let (ne, nd) = rs.dims();
    let w = Weight::new(
        (0..ne).map(|_| qf(rng.gen_range(-range..=range), 1)).collect(),
        (0..nd).map(|_| qf(rng.gen_range(-range..=range), 1)).collect(),
    );
    rs.family.sl_normalize(&w)
}

/// Moves λ onto the hyperplane ⟨λ+ρ, γ⟩ = 0 (q(n): ⟨λ, γ̄⟩ = 0) for a random
/// positive odd γ, changing a single coordinate. No-op without isotropic roots.
pub fn force_atypical(rs: &RootSystem, rng: &mut ChaCha8Rng, l: &Weight) -> Weight {
    let b = Borel::distinguished(rs);
    let mut x = l.clone();
    if rs.family.kind == Kind::Queer {
        let n = rs.family.m;
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        x.eps[j] = -x.eps[i];
        return x;
    }
    let iso: Vec<&Weight> = b.odd_positive.iter().filter(|g| rs.is_isotropic(g)).collect();
    if iso.is_empty() {
        return x;
    }
    let g = iso[rng.gen_range(0..iso.len())];
    let rho = b.rho(rs).rho;
    let (ne, _) = rs.dims();
    let j = g.del.iter().position(|c| *c != Q::from_integer(0)).unwrap();
    let unit = Weight::del_unit(ne, g.del.len(), j);
    let f = form(&(&x + &rho), g);
    let d = form(&unit, g);
    x.del[j] -= f / d;
    if rs.family.kind == Kind::Sl {
        // keep the representative; the shift is orthogonal to roots
        x = rs.family.sl_normalize(&x);
    }
    x
}

/// Weights spread far apart, half of them forced atypical, filtered by genericity.
pub fn generic_weights(rs: &RootSystem, rng: &mut ChaCha8Rng, count: usize, integral: bool) -> Vec<Weight> {
    let b = Borel::distinguished(rs);
    let t = GenericTester::new(rs, &b, DEFAULT_GAMMA_CAP).unwrap();
    let mut out = Vec::new();
    let mut tries = 0;
    while out.len() < count {
        tries += 1;
        assert!(tries < 200 * count, "could not generate generic weights for {}", rs.family);
        let mut l = if integral { random_int_weight(rs, rng, 400) } else { random_weight(rs, rng, 400) };
        if rng.gen_bool(0.5) {
            l = force_atypical(rs, rng, &l);
        }
        if t.is_generic(&l) {
            out.push(l);
        }
    }
    out
}

/// Star actions to test for a family: built-ins and two random assignments.
pub fn star_actions(rs: &RootSystem, rng: &mut ChaCha8Rng) -> Vec<Box<dyn StarAction>> {
    if rs.family.kind == Kind::Queer {
        return vec![Box::new(QueerStar::new(rs).unwrap())];
    }
    let mut v: Vec<Box<dyn StarAction>> =
        StarMap::builtins(rs).into_iter().map(|m| Box::new(m) as Box<dyn StarAction>).collect();
    for _ in 0..2 {
        let seed: u64 = rng.gen();
        let m = StarMap::from_choices(rs, 10_000, |i, n| ((seed >> (4 * i)) as usize) % n).unwrap();
        v.push(Box::new(m));
    }
    v
}

pub fn default_action(rs: &RootSystem) -> AnyStar {
    let name = match rs.family.kind {
        Kind::Osp => "osp-star",
        _ => "trivial",
    };
    AnyStar::for_family(rs, name).unwrap()
}

/// Rational weights for `rs`, half of them moved onto an atypicality hyperplane.
pub fn weights(rs: &RootSystem, range: i64) -> impl proptest::strategy::Strategy<Value = Weight> {
    use proptest::prelude::*;
    let (ne, nd) = rs.dims();
    let coord = (-range..=range, prop::sample::select(vec![1i64, 1, 2, 3, 6])).prop_map(|(n, d)| qf(n, d));
    let rs = rs.clone();
    (prop::collection::vec(coord.clone(), ne), prop::collection::vec(coord, nd), any::<u64>(), any::<bool>()).prop_map(
        move |(e, d, seed, atyp)| {
            use rand::SeedableRng;
            let w = rs.family.sl_normalize(&Weight::new(e, d));
            if atyp {
                force_atypical(&rs, &mut ChaCha8Rng::seed_from_u64(seed), &w)
            } else {
                w
            }
        },
    )
}
