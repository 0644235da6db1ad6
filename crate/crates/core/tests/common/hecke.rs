//! Direct computation in the Hecke algebra: C̃_w = Σ_x P_{x,w} T_x built by
//! multiplying with C̃_s and peeling off terms that break the degree bound.

use superstar::kl::Poly;
use superstar::weyl::WeylGroup;

pub type Elt = Vec<Poly>;

fn t_s_times(w: &WeylGroup, s: usize, x: &Elt) -> Elt {
    let mut out = vec![Poly::zero(); w.size()];
    let qm1 = Poly(vec![-1, 1]);
    for (e, c) in x.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let se = w.lmul(s, e);
        if w.length(se) > w.length(e) {
            out[se] = &out[se] + c;
        } else {
            out[e] = &out[e] + &(&qm1 * c);
            out[se] = &out[se] + &c.shift(1);
        }
    }
    out
}

fn cs_times(w: &WeylGroup, s: usize, x: &Elt) -> Elt {
    let t = t_s_times(w, s, x);
    t.iter().zip(x).map(|(a, b)| a + b).collect()
}

fn sub_scaled(x: &mut Elt, c: &Poly, y: &Elt) {
    for (a, b) in x.iter_mut().zip(y) {
        *a = &*a - &(c * b);
    }
}

fn desc_length(w: &WeylGroup) -> Vec<usize> {
    let mut v: Vec<usize> = (0..w.size()).collect();
    v.sort_by_key(|&e| std::cmp::Reverse(w.length(e)));
    v
}

pub fn canonical_basis(w: &WeylGroup) -> Vec<Elt> {
    let n = w.size();
    let mut basis: Vec<Option<Elt>> = vec![None; n];
    let mut e = vec![Poly::zero(); n];
    e[0] = Poly::one();
    basis[0] = Some(e);
    let mut order: Vec<usize> = (1..n).collect();
    order.sort_by_key(|&e| w.length(e));
    let desc = desc_length(w);
    for y in order {
        let s = w.word(y)[0];
        let v = w.lmul(s, y);
        let mut x = cs_times(w, s, basis[v].as_ref().unwrap());
        let ly = w.length(y);
        for &z in &desc {
            if z == y || w.length(z) >= ly {
                continue;
            }
            let a = x[z].clone();
            let high = &a - &a.truncate((ly - w.length(z) - 1) / 2);
            if !high.is_zero() {
                let cz = basis[z].clone().unwrap();
                sub_scaled(&mut x, &high, &cz);
            }
        }
        basis[y] = Some(x);
    }
    basis.into_iter().map(Option::unwrap).collect()
}

/// Coordinates of x in the C̃ basis.
fn decompose(w: &WeylGroup, basis: &[Elt], x: &Elt) -> Vec<Poly> {
    let mut r = x.clone();
    let mut out = vec![Poly::zero(); w.size()];
    for &z in &desc_length(w) {
        let c = r[z].clone();
        if !c.is_zero() {
            sub_scaled(&mut r, &c, &basis[z]);
            out[z] = c;
        }
    }
    assert!(r.iter().all(Poly::is_zero));
    out
}

pub fn oracle_left_leq(w: &WeylGroup, basis: &[Elt]) -> Vec<Vec<bool>> {
    let n = w.size();
    let mut adj = vec![vec![false; n]; n];
    for y in 0..n {
        for s in 0..w.rank() {
            let prod = cs_times(w, s, &basis[y]);
            for (x, c) in decompose(w, basis, &prod).iter().enumerate() {
                if !c.is_zero() {
                    adj[x][y] = true;
                }
            }
        }
    }
    for (x, row) in adj.iter_mut().enumerate() {
        row[x] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if adj[i][k] {
                for j in 0..n {
                    if adj[k][j] {
                        adj[i][j] = true;
                    }
                }
            }
        }
    }
    adj
}
