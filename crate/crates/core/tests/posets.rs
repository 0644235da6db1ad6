mod common;

use std::collections::BTreeSet;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::{generic_weights, system, weights};
use superstar::borel::Borel;
use superstar::kl::{kl_polynomials, r_polynomials, Poly, DEFAULT_KL_CAP};
use superstar::primposet::{
    extra_inclusions_singly_atypical, generic_poset, small_rank_poset, star_inclusion_edges, GenericMode, IdealOrder,
    InclusionGraph,
};
use superstar::rootdata::{pair_coroot, Kind, RootSystem};
use superstar::star::{alpha_finite, Criterion, StarAction, StarMap};
use superstar::typicality::atypical_roots;
use superstar::weight::is_pos_int;
use superstar::weyl::{chamber, IntegralData, WeylGroup, DEFAULT_WEYL_CAP};
use superstar::Weight;

fn finite_set(rs: &RootSystem, l: &Weight) -> BTreeSet<usize> {
    (0..rs.even_simple.len())
        .filter(|&a| alpha_finite(rs, l, a, Criterion::Auto).unwrap().is_finite() == Some(true))
        .collect()
}

#[test]
fn r_polynomial_identity() {
    // q^{l(w)-l(x)} P_{x,w}(1/q) = Σ_{x≤y≤w} R_{x,y} P_{y,w}
    for f in ["gl:4,0", "osp:1,6"] {
        let w = WeylGroup::new(&system(f), DEFAULT_WEYL_CAP).unwrap();
        let p = kl_polynomials(&w, DEFAULT_KL_CAP).unwrap();
        let r = r_polynomials(&w, DEFAULT_KL_CAP).unwrap();
        for x in 0..w.size() {
            for y in 0..w.size() {
                if !w.bruhat_leq(x, y) {
                    continue;
                }
                let mut sum = Poly::zero();
                for z in 0..w.size() {
                    if w.bruhat_leq(x, z) && w.bruhat_leq(z, y) {
                        sum = &sum + &(r.get(x, z) * p.get(z, y));
                    }
                }
                assert_eq!(p.get(x, y).reverse(w.length(y) - w.length(x)), sum, "{f} ({x},{y})");
            }
        }
    }
}

#[test]
fn type_one_posets_respect_tau() {
    let mut rng = ChaCha8Rng::seed_from_u64(111);
    for f in ["gl:2,1", "gl:2,2", "sl:3,1", "gl:3,2"] {
        let rs = system(f);
        let rho = Borel::distinguished(&rs).rho(&rs).rho;
        let mut done = 0;
        while done < 3 {
            let l = generic_weights(&rs, &mut rng, 1, true).remove(0);
            if !rs.even_positive.iter().all(|a| is_pos_int(&pair_coroot(&(&l + &rho), a))) {
                continue;
            }
            let g = generic_poset(&rs, &l, GenericMode::Proved, DEFAULT_WEYL_CAP).unwrap();
            let w = WeylGroup::new(&rs, DEFAULT_WEYL_CAP).unwrap();
            assert_eq!(g.vertices.len(), w.size());
            assert!(g.is_consistent());
            for (x, y) in g.relation() {
                assert!(finite_set(&rs, &x).is_subset(&finite_set(&rs, &y)), "{f}: {x} ⊆ {y}");
            }
            // the dominant weight is the top and w0·Λ the bottom
            let top = &l;
            let bottom = &w.act(w.longest(), &(&l + &rho)) - &rho;
            let rel = g.relation();
            for v in &g.vertices {
                if v != top {
                    assert!(rel.contains(&(v.clone(), top.clone())));
                }
                if *v != bottom {
                    assert!(rel.contains(&(bottom.clone(), v.clone())));
                }
            }
            done += 1;
        }
    }
}

#[test]
fn queer_proved_inside_conjectural() {
    let mut rng = ChaCha8Rng::seed_from_u64(112);
    let rs = system("q:3");
    let w = WeylGroup::new(&rs, DEFAULT_WEYL_CAP).unwrap();
    let mut seen = 0;
    while seen < 5 {
        let l = generic_weights(&rs, &mut rng, 1, false).remove(0);
        let l = sort_desc(&l);
        if chamber(&rs, &l).iter().any(|&c| c != 1) {
            continue;
        }
        let d = IntegralData::new(&rs, &w, &l).unwrap();
        if d.sub.size() == w.size() || d.sub.size() == 1 {
            continue;
        }
        let (Ok(p), Ok(c)) = (
            generic_poset(&rs, &l, GenericMode::Proved, DEFAULT_WEYL_CAP),
            generic_poset(&rs, &l, GenericMode::Conjectural, DEFAULT_WEYL_CAP),
        ) else {
            continue;
        };
        assert!(p.relation().is_subset(&c.relation()), "{l}");
        assert!(p.edges.iter().all(|e| e.tag == "left-cell-criterion" && !e.strict));
        seen += 1;
    }
}

fn sort_desc(l: &Weight) -> Weight {
    let mut e = l.eps.clone();
    e.sort_by(|a, b| b.cmp(a));
    Weight::new(e, l.del.clone())
}

#[test]
fn osp_product_matches_whole_group() {
    // for integral Λ the componentwise order on W(so)×W(sp) is the order of W
    let mut rng = ChaCha8Rng::seed_from_u64(113);
    for f in ["osp:3,2", "osp:4,2"] {
        let rs = system(f);
        let w = WeylGroup::new(&rs, DEFAULT_WEYL_CAP).unwrap();
        let whole = IdealOrder::new(w.clone()).unwrap();
        let mut seen = 0;
        while seen < 2 {
            let l = generic_weights(&rs, &mut rng, 1, true).remove(0);
            let Ok(g) = generic_poset(&rs, &l, GenericMode::Proved, DEFAULT_WEYL_CAP) else {
                continue;
            };
            let star = superstar::star::AnyStar::for_family(&rs, "osp-star").unwrap();
            let node: Vec<Weight> = (0..w.size()).map(|e| star.apply_word(w.word(e), &l).unwrap()).collect();
            let mut want = BTreeSet::new();
            for x in 0..w.size() {
                for y in 0..w.size() {
                    if x != y && whole.leq(x, y) {
                        want.insert((node[x].clone(), node[y].clone()));
                    }
                }
            }
            assert_eq!(g.relation(), want, "{f} {l}");
            seen += 1;
        }
    }
}

#[test]
fn singly_atypical_edges_are_shifts() {
    let mut rng = ChaCha8Rng::seed_from_u64(114);
    for f in ["sl:3,1", "gl:2,2", "osp:2,4"] {
        let rs = system(f);
        let b = Borel::distinguished(&rs);
        let mut found = 0;
        for _ in 0..3000 {
            let l = common::random_int_weight(&rs, &mut rng, 4);
            let l = common::force_atypical(&rs, &mut rng, &l);
            let Ok(g) = extra_inclusions_singly_atypical(&rs, &l) else {
                continue;
            };
            let at = atypical_roots(&rs, &b, &l);
            assert_eq!(at.len(), 1);
            for e in &g.edges {
                assert_eq!(g.vertices[e.to], l);
                assert_eq!(g.vertices[e.from], rs.family.sl_normalize(&(&l + &at[0])));
                assert!(e.strict);
                found += 1;
            }
        }
        assert!(found > 0, "{f}: no extra inclusions generated");
    }
}

fn small_rank_matches(f: &str, l: &Weight) -> Result<(), TestCaseError> {
    let rs = system(f);
    let maps: Vec<Box<dyn StarAction>> = match rs.family.kind {
        Kind::Queer => vec![Box::new(superstar::star::QueerStar::new(&rs).unwrap())],
        _ => StarMap::builtins(&rs).into_iter().map(|m| Box::new(m) as Box<dyn StarAction>).collect(),
    };
    let refs: Vec<&dyn StarAction> = maps.iter().map(|m| m.as_ref()).collect();
    let g = star_inclusion_edges(&refs, &[l.clone()], Criterion::Auto, 64).unwrap();
    let mut s = InclusionGraph::new();
    for v in &g.vertices {
        s.merge(&small_rank_poset(&rs, v).unwrap());
    }
    prop_assert_eq!(g.relation(), s.relation());
    Ok(())
}

proptest! {
    #[test]
    fn small_rank_sl21(l in weights(&system("sl:2,1"), 12)) { small_rank_matches("sl:2,1", &l)?; }

    #[test]
    fn small_rank_q2(l in weights(&system("q:2"), 12)) { small_rank_matches("q:2", &l)?; }

    #[test]
    fn small_rank_osp12(l in weights(&system("osp:1,2"), 12)) { small_rank_matches("osp:1,2", &l)?; }
}
