//! wasm-bindgen bindings for the browser demo in `www/`.
//!
//! Every export takes plain strings and returns a JSON string. The `*_json`
//! functions are the native entry points and are what the tests exercise.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use superstar::borel::Borel;
use superstar::generic;
use superstar::primposet::{extra_inclusions_singly_atypical, generic_poset, small_rank_poset, star_inclusion_edges, GenericMode};
use superstar::rootdata::{parse_linear, Kind};
use superstar::star::{alpha_finite, orbit, AnyStar, Criterion, StarAction, StarMap};
use superstar::typicality;
use superstar::weyl::{chamber, is_open_chamber, WeylGroup, DEFAULT_WEYL_CAP};
use superstar::{Error, Family, RootSystem, Weight};

const GAMMA_CAP: usize = 20_000;

fn system(family: &str) -> Result<RootSystem, Error> {
    Ok(RootSystem::new(family.trim().parse::<Family>()?))
}

fn weight(rs: &RootSystem, s: &str) -> Result<Weight, Error> {
    let s = s.trim();
    let w = if s.contains('e') || s.contains('d') { parse_linear(s, rs.dims())? } else { Weight::parse_literal(s)? };
    if w.dims() != rs.dims() {
        rs.family.validate(&w)?;
    }
    Ok(rs.family.sl_normalize(&w))
}

fn action(rs: &RootSystem, map: &str) -> Result<AnyStar, Error> {
    let map = match map.trim() {
        "" if rs.family.kind == Kind::Osp => "osp-star",
        "" => "trivial",
        m => m,
    };
    AnyStar::for_family(rs, map)
}

/// Star orbit of λ with its DOT rendering.
pub fn star_orbit_json(family: &str, weight_str: &str, map: &str, max_vertices: usize) -> Result<String, String> {
    let go = || -> Result<Value, Error> {
        let rs = system(family)?;
        let l = weight(&rs, weight_str)?;
        let o = orbit(&action(&rs, map)?, &l, max_vertices)?;
        Ok(json!({
            "base": o.base.to_string(),
            "vertices": o.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "edges": o.edges,
            "truncated": o.truncated,
            "dot": o.to_dot(&rs),
        }))
    };
    go().map(|v| v.to_string()).map_err(|e| e.to_string())
}

/// Chamber, α-finiteness, typicality and genericity of λ for the distinguished Borel.
pub fn classify_json(family: &str, weight_str: &str) -> Result<String, String> {
    let go = || -> Result<Value, Error> {
        let rs = system(family)?;
        let l = weight(&rs, weight_str)?;
        let b = Borel::distinguished(&rs);
        let c = chamber(&rs, &l);
        let finite: Vec<usize> = (0..rs.even_simple.len())
            .filter(|&a| matches!(alpha_finite(&rs, &l, a, Criterion::Auto), Ok(f) if f.is_finite() == Some(true)))
            .collect();
        let w = WeylGroup::new(&rs, DEFAULT_WEYL_CAP)?;
        let generic = match generic::report(&rs, &b, &w, &l, GAMMA_CAP) {
            Ok(r) => json!(r),
            Err(e) => json!({ "error": e.to_string() }),
        };
        Ok(json!({
            "weight": l.to_string(),
            "pretty": l.pretty(),
            "chamber": c,
            "open": is_open_chamber(&c),
            "alpha_finite": finite,
            "typicality": typicality::report(&rs, &b, &l, true),
            "generic": generic,
        }))
    };
    go().map(|v| v.to_string()).map_err(|e| e.to_string())
}

/// Inclusion graph of primitive ideals. `mode` is one of small-rank, star,
/// generic, singly-atypical.
pub fn prim_poset_json(family: &str, weight_str: &str, mode: &str) -> Result<String, String> {
    let go = || -> Result<Value, Error> {
        let rs = system(family)?;
        let l = weight(&rs, weight_str)?;
        let g = match mode.trim() {
            "small-rank" => small_rank_poset(&rs, &l)?,
            "star" => {
                let acts: Vec<Box<dyn StarAction>> = if rs.family.kind == Kind::Queer {
                    vec![Box::new(AnyStar::for_family(&rs, "")?)]
                } else {
                    StarMap::builtins(&rs).into_iter().map(|m| Box::new(m) as Box<dyn StarAction>).collect()
                };
                let refs: Vec<&dyn StarAction> = acts.iter().map(|a| a.as_ref()).collect();
                star_inclusion_edges(&refs, &[l], Criterion::Auto, 256)?
            }
            "generic" => generic_poset(&rs, &l, GenericMode::Proved, DEFAULT_WEYL_CAP)?,
            "singly-atypical" => extra_inclusions_singly_atypical(&rs, &l)?,
            other => return Err(Error::Parse(format!("unknown mode '{other}'"))),
        };
        Ok(json!({
            "vertices": g.vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "relation": g.relation().iter().map(|(a, b)| [a.to_string(), b.to_string()]).collect::<Vec<_>>(),
            "hasse": g.hasse(),
            "consistent": g.is_consistent(),
            "dot": g.to_dot(),
        }))
    };
    go().map(|v| v.to_string()).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = starOrbit)]
pub fn star_orbit(family: &str, weight: &str, map: &str, max_vertices: usize) -> Result<String, JsValue> {
    star_orbit_json(family, weight, map, max_vertices).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn classify(family: &str, weight: &str) -> Result<String, JsValue> {
    classify_json(family, weight).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = primPoset)]
pub fn prim_poset(family: &str, weight: &str, mode: &str) -> Result<String, JsValue> {
    prim_poset_json(family, weight, mode).map_err(|e| JsValue::from_str(&e))
}
