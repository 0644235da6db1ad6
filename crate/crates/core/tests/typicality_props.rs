mod common;

use proptest::prelude::*;

use common::{system, weights};
use superstar::borel::{self, Borel};
use superstar::typicality::{atypical_roots, atypicality_preserved, is_dot_regular, no_linked_atypical_pair};
use superstar::Weight;

fn lemmas(f: &str, l: &Weight, b: &Borel) -> Result<(), TestCaseError> {
    let rs = system(f);
    prop_assume!(is_dot_regular(&rs, b, l));
    prop_assert!(no_linked_atypical_pair(&rs, b, l).unwrap());
    for g in atypical_roots(&rs, b, l) {
        for sign in [1i64, -1] {
            let m = l + &g.scale(superstar::weight::q(sign));
            if is_dot_regular(&rs, b, &m) {
                prop_assert!(atypicality_preserved(&rs, b, l, &g, sign).unwrap());
            }
        }
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn gl22(l in weights(&system("gl:2,2"), 4)) {
        let rs = system("gl:2,2");
        lemmas("gl:2,2", &l, &Borel::distinguished(&rs))?;
    }

    #[test]
    fn osp25(l in weights(&system("osp:5,2"), 4)) {
        let rs = system("osp:5,2");
        lemmas("osp:5,2", &l, &Borel::distinguished(&rs))?;
    }

    #[test]
    fn q4(l in weights(&system("q:4"), 4)) {
        let rs = system("q:4");
        lemmas("q:4", &l, &Borel::distinguished(&rs))?;
    }

    #[test]
    fn any_borel_gl21(l in weights(&system("gl:2,1"), 4), k in 0usize..3) {
        let rs = system("gl:2,1");
        let all = borel::enumerate(&rs, 100).unwrap();
        lemmas("gl:2,1", &l, &all[k % all.len()])?;
    }
}
