use num_traits::{Signed, Zero};
use serde_json::{json, Value};
use tropical_kummer::exactcore::{int, parse_rational};
use tropical_kummer::kummer::{build_quartic, psi_eval, KummerQuartic};
use tropical_kummer::lattice::CellKind;
use tropical_kummer::nonarch::{build_series, safe_cutoff, tropicalize_series};
use tropical_kummer::theta::theta_eval;
use tropical_kummer::{PrincipallyPolarizedSurface, Rational, ThetaCharacteristic, Vec2};

use crate::error::CliError;
use crate::json::{rational, vec2, vec3};

/// Parses `"x1,x2"`.
pub fn parse_point(text: &str) -> Result<Vec2, CliError> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != 2 {
        return Err(CliError::Argument(format!(
            "point must have two comma-separated coordinates, got {text:?}"
        )));
    }
    Ok(Vec2::new(
        parse_rational(parts[0])?,
        parse_rational(parts[1])?,
    ))
}

pub fn parse_characteristic(text: &str) -> Result<ThetaCharacteristic, CliError> {
    text.parse().map_err(CliError::Argument)
}

pub fn classify(s: &PrincipallyPolarizedSurface) -> Value {
    let rb = s.reduced_basis();
    json!({
        "class": s.classify().as_str(),
        "reduced_basis": { "u": vec2(&rb.u), "v": vec2(&rb.v) },
        "norms": {
            "uu": rational(&rb.norms.0),
            "vv": rational(&rb.norms.1),
            "uv": rational(&rb.norms.2),
        },
    })
}

pub fn voronoi(s: &PrincipallyPolarizedSurface) -> Result<Value, CliError> {
    let cell = s.voronoi_cell();
    let mut out = json!({
        "kind": cell.kind.as_str(),
        "relevant_vectors": cell.relevant_vectors.iter().map(vec2).collect::<Vec<_>>(),
        "facets": cell.facets.iter().map(vec2).collect::<Vec<_>>(),
        "vertices": cell.vertices.iter().map(vec2).collect::<Vec<_>>(),
        "area": rational(&cell.area()),
    });
    if cell.kind == CellKind::Hexagon {
        let complex = s.subdivide()?;
        out["cells"] = complex
            .cells
            .iter()
            .map(|c| {
                json!({
                    "label": c.label.to_string(),
                    "vertices": c.vertices.iter().map(vec2).collect::<Vec<_>>(),
                    "area": rational(&c.area()),
                })
            })
            .collect();
    }
    Ok(out)
}

pub fn theta(s: &PrincipallyPolarizedSurface, chi: ThetaCharacteristic, x: &Vec2) -> Value {
    let tv = theta_eval(s, chi, x);
    json!({
        "characteristic": chi.to_string(),
        "point": vec2(x),
        "value": rational(&tv.value),
        "minimizer": vec2(&tv.minimizer),
    })
}

pub fn embed(s: &PrincipallyPolarizedSurface, x: &Vec2) -> Result<Value, CliError> {
    let p = psi_eval(s, x);
    let mut out = json!({ "point": vec2(x), "psi": vec3(&p) });
    if s.is_irreducible() {
        let k = build_quartic(s)?;
        out["faces"] = k.faces_containing(&p).into_iter().collect();
    }
    Ok(out)
}

pub fn surface_json(k: &KummerQuartic) -> Value {
    let (a, b, c) = &k.theta_constants;
    json!({
        "theta_constants": [rational(a), rational(b), rational(c)],
        "vertices": k.labelled_vertices().map(|(l, p)| json!({
            "label": l.to_string(),
            "coords": vec3(p),
        })).collect::<Vec<_>>(),
        "faces": k.faces.iter().map(|f| json!({
            "equation": f.to_string(),
            "normal": f.normal.to_vec(),
            "offset": rational(&f.offset),
            "vertices": f.vertex_ids.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
            "source_cells": f.source_cells.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    })
}

/// `r` rounded to `digits` decimal places.
pub fn decimal(r: &Rational, digits: u32) -> String {
    let scale = num_traits::pow(int(10), digits as usize);
    let scaled = (r.abs() * &scale).round().to_integer();
    let mut body = scaled.to_string();
    let d = digits as usize;
    if d > 0 {
        if body.len() <= d {
            body = format!("{}{}", "0".repeat(d + 1 - body.len()), body);
        }
        body.insert(body.len() - d, '.');
    }
    if r.is_negative() && !scaled.is_zero() {
        format!("-{body}")
    } else {
        body
    }
}

/// Object File Format: header, counts, vertex lines, then quadrilateral faces.
pub fn surface_off(k: &KummerQuartic, digits: u32) -> String {
    let mut out = String::from("OFF\n");
    out.push_str(&format!("{} {} 0\n", k.vertices.len(), k.faces.len()));
    for v in &k.vertices {
        let coords: Vec<String> = v.components().iter().map(|c| decimal(c, digits)).collect();
        out.push_str(&coords.join(" "));
        out.push('\n');
    }
    for f in &k.faces {
        let ids: Vec<String> = f.vertex_ids.iter().map(|v| v.slot().to_string()).collect();
        out.push_str(&format!("4 {}\n", ids.join(" ")));
    }
    out
}

pub fn series(
    s: &PrincipallyPolarizedSurface,
    chi: ThetaCharacteristic,
    x: &Vec2,
    cutoff: Option<u64>,
) -> Result<Value, CliError> {
    let (r, source) = match cutoff {
        Some(r) => (r, "given"),
        None => (safe_cutoff(s, chi, &x.sup_norm()), "auto"),
    };
    let series = build_series(s, chi, r);
    let value = tropicalize_series(&series, x)?;
    Ok(json!({
        "characteristic": chi.to_string(),
        "point": vec2(x),
        "cutoff": r,
        "cutoff_source": source,
        "terms": series.support.len(),
        "constant_shift": rational(&series.constant_shift),
        "value": rational(&value),
    }))
}
