//! Checks KL polynomials and the left preorder against the Hecke algebra oracle.

mod common;

use common::hecke::{canonical_basis, oracle_left_leq};
use superstar::kl::{kl_polynomials, kl_polynomials_via_r, LeftOrder, Poly, DEFAULT_KL_CAP};
use superstar::rootdata::{Family, RootSystem};
use superstar::weyl::{WeylGroup, DEFAULT_WEYL_CAP};
use superstar::Weight;

fn check(w: &WeylGroup) {
    let p = kl_polynomials(w, DEFAULT_KL_CAP).unwrap();
    let pr = kl_polynomials_via_r(w, DEFAULT_KL_CAP).unwrap();
    let basis = canonical_basis(w);
    let br = w.bruhat_table();
    for x in 0..w.size() {
        for y in 0..w.size() {
            assert_eq!(p.get(x, y), &basis[y][x], "P({x},{y})");
            assert_eq!(p.get(x, y), pr.get(x, y));
            assert_eq!(br.leq(x, y), !p.get(x, y).is_zero());
            if br.leq(x, y) {
                assert_eq!(p.get(x, y).coeff(0), 1);
                assert!(p.get(x, y).0.iter().all(|&c| c >= 0));
                if w.length(y) - w.length(x) <= 2 {
                    assert_eq!(p.get(x, y), &Poly::one());
                }
            }
        }
    }
    let lo = LeftOrder::new(w, &p);
    let want = oracle_left_leq(w, &basis);
    for x in 0..w.size() {
        for y in 0..w.size() {
            assert_eq!(lo.leq(x, y), want[x][y], "left order at ({x},{y})");
        }
    }
    for cell in lo.cells() {
        let r = w.right_descents(cell[0]);
        assert!(cell.iter().all(|&e| w.right_descents(e) == r));
    }
}

fn sym(n: usize) -> WeylGroup {
    WeylGroup::new(&RootSystem::new(Family::gl(n, 0).unwrap()), DEFAULT_WEYL_CAP).unwrap()
}

fn type_b(n: usize) -> WeylGroup {
    let mut gens: Vec<Weight> = (0..n - 1)
        .map(|i| &Weight::eps_unit(n, 0, i) - &Weight::eps_unit(n, 0, i + 1))
        .collect();
    gens.push(Weight::eps_unit(n, 0, n - 1));
    WeylGroup::generated((n, 0), gens, DEFAULT_WEYL_CAP).unwrap()
}

#[test]
fn s3_and_s4() {
    check(&sym(3));
    let w = sym(4);
    check(&w);
    let p = kl_polynomials(&w, DEFAULT_KL_CAP).unwrap();
    // left cells of S4 are in bijection with involutions
    assert_eq!(LeftOrder::new(&w, &p).cells().len(), 10);
    let nontrivial = (0..24)
        .flat_map(|x| (0..24).map(move |y| (x, y)))
        .filter(|&(x, y)| !p.get(x, y).is_zero() && *p.get(x, y) != Poly::one())
        .count();
    assert!(nontrivial > 0);
    assert!((0..24).all(|x| (0..24).all(|y| p.get(x, y).degree().unwrap_or(0) <= 1)));
}

#[test]
fn b2_and_b3() {
    let w = type_b(2);
    assert_eq!(w.size(), 8);
    check(&w);
    let p = kl_polynomials(&w, DEFAULT_KL_CAP).unwrap();
    let sizes: Vec<usize> = {
        let mut v: Vec<usize> = LeftOrder::new(&w, &p).cells().iter().map(Vec::len).collect();
        v.sort();
        v
    };
    assert_eq!(sizes, vec![1, 1, 3, 3]);
    let w = type_b(3);
    assert_eq!(w.size(), 48);
    check(&w);
}

#[test]
fn s5_routes_agree() {
    let w = sym(5);
    let a = kl_polynomials(&w, DEFAULT_KL_CAP).unwrap();
    let b = kl_polynomials_via_r(&w, DEFAULT_KL_CAP).unwrap();
    let cells = LeftOrder::new(&w, &a).cells();
    // number of involutions in S5
    assert_eq!(cells.len(), 26);
    for x in 0..w.size() {
        for y in 0..w.size() {
            assert_eq!(a.get(x, y), b.get(x, y));
        }
    }
}
