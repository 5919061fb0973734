//! The `verify` report: every module invariant checked on seeded samples.
//!
//! Sample `k` of check `c` draws from a ChaCha8 stream keyed by
//! `(seed, c, k)`, so results do not depend on the sample count of other
//! checks or on how rayon schedules the work.

use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Map, Value};
use tropical_kummer::exactcore::{half, int, rat, Matrix2};
use tropical_kummer::kummer::{
    affine_pieces, build_quartic, coplanarity_report, injectivity_check, psi_eval,
    two_torsion_images, VertexLabel,
};
use tropical_kummer::lattice::{CellLabel, PieceKind};
use tropical_kummer::nonarch::{build_series, descent_datum, safe_cutoff, tropicalize_series};
use tropical_kummer::theta::{
    certified_radius, quasi_periodicity_defect, theta_constants, theta_eval, theta_eval_bruteforce,
    translation_identity_holds,
};
use tropical_kummer::{PrincipallyPolarizedSurface, ThetaCharacteristic, Vec2};

use crate::json::{int_matrix, matrix2, rational, vec2, vec3};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VerifyOptions {
    pub seed: u64,
    pub samples: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            seed: 0,
            samples: 200,
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub samples: u64,
    pub details: Value,
    pub counterexample: Option<Value>,
    pub elapsed: Duration,
}

impl CheckResult {
    fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "status": if self.passed { "pass" } else { "fail" },
            "samples": self.samples,
            "details": self.details,
            "counterexample": self.counterexample,
        })
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub gram: Matrix2,
    pub class: &'static str,
    pub options: VerifyOptions,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&CheckResult> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Elapsed times go in a separate `timings_ms` section, and only on
    /// request, so the default report is reproducible byte for byte.
    pub fn to_json(&self, timings: bool) -> Value {
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        let mut out = json!({
            "gram": matrix2(&self.gram),
            "class": self.class,
            "seed": self.options.seed,
            "samples": self.options.samples,
            "checks": self.checks.iter().map(CheckResult::to_json).collect::<Vec<_>>(),
            "summary": {
                "total": self.checks.len(),
                "passed": self.checks.len() - failed,
                "failed": failed,
            },
            "status": if failed == 0 { "pass" } else { "fail" },
        });
        if timings {
            let t: Map<String, Value> = self
                .checks
                .iter()
                .map(|c| (c.name.to_string(), json!(c.elapsed.as_secs_f64() * 1000.0)))
                .collect();
            out["timings_ms"] = Value::Object(t);
        }
        out
    }
}

fn sample_rng(seed: u64, check: u64, k: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream((check << 32) | k);
    rng
}

/// A random rational point with coordinates in `[−span, span]`.
pub fn random_point<R: Rng>(rng: &mut R, span: i64) -> Vec2 {
    let d1 = rng.random_range(1..=17i64);
    let d2 = rng.random_range(1..=17i64);
    Vec2::new(
        rat(rng.random_range(-span * d1..=span * d1), d1),
        rat(rng.random_range(-span * d2..=span * d2), d2),
    )
}

pub fn random_lattice_point<R: Rng>(rng: &mut R, span: i64) -> Vec2 {
    Vec2::from_ints(
        rng.random_range(-span..=span),
        rng.random_range(-span..=span),
    )
}

fn random_characteristic<R: Rng>(rng: &mut R) -> ThetaCharacteristic {
    ThetaCharacteristic::ALL[rng.random_range(0..4usize)]
}

struct Runner {
    opts: VerifyOptions,
    next_id: u64,
    checks: Vec<CheckResult>,
}

impl Runner {
    /// Runs `f` on each sample index in parallel; the first failing index
    /// (in index order) becomes the counterexample.
    fn sampled<F>(&mut self, name: &'static str, n: u64, details: Value, f: F)
    where
        F: Fn(&mut ChaCha8Rng) -> Option<Value> + Sync,
    {
        let id = self.next_id;
        self.next_id += 1;
        let seed = self.opts.seed;
        let start = Instant::now();
        let failures: Vec<(u64, Value)> = (0..n)
            .into_par_iter()
            .filter_map(|k| f(&mut sample_rng(seed, id, k)).map(|cx| (k, cx)))
            .collect();
        let counterexample = failures.into_iter().next().map(|(k, mut cx)| {
            cx["sample_index"] = json!(k);
            cx
        });
        self.checks.push(CheckResult {
            name,
            passed: counterexample.is_none(),
            samples: n,
            details,
            counterexample,
            elapsed: start.elapsed(),
        });
    }

    /// A check without sampling.
    fn single<F>(&mut self, name: &'static str, f: F)
    where
        F: FnOnce() -> Result<Value, Value>,
    {
        self.next_id += 1;
        let start = Instant::now();
        let (passed, details, counterexample) = match f() {
            Ok(d) => (true, d, None),
            Err(cx) => (false, Value::Null, Some(cx)),
        };
        self.checks.push(CheckResult {
            name,
            passed,
            samples: 1,
            details,
            counterexample,
            elapsed: start.elapsed(),
        });
    }
}

fn err(message: impl Into<String>) -> Value {
    json!({ "message": message.into() })
}

pub fn run_verification(
    s: &PrincipallyPolarizedSurface,
    opts: VerifyOptions,
) -> VerificationReport {
    let mut r = Runner {
        opts,
        next_id: 0,
        checks: Vec::new(),
    };
    let n = opts.samples;

    r.single("riemann_relation", || {
        if s.riemann_relation_holds() {
            Ok(json!({ "n_basis": matrix2(s.n_basis()) }))
        } else {
            Err(err("Q(f'_i, n_j) is not the identity"))
        }
    });

    r.single("voronoi_cell", || {
        let cell = s.voronoi_cell();
        cell.check_invariants(s).map_err(|e| err(e.to_string()))?;
        if cell.area() != int(1) {
            return Err(err(format!("cell area {} != 1", cell.area())));
        }
        Ok(json!({
            "kind": cell.kind.as_str(),
            "vertices": cell.vertices.iter().map(vec2).collect::<Vec<_>>(),
        }))
    });

    r.sampled("reduce_point", n, Value::Null, |rng| {
        let x = random_point(rng, 20);
        let (y, p) = s.reduce_point(&x);
        (!s.in_voronoi(&y) || !p.is_integral() || &y + &p != x)
            .then(|| json!({ "x": vec2(&x), "reduced": vec2(&y), "shift": vec2(&p) }))
    });

    r.sampled("theta_oracle", n, Value::Null, |rng| {
        let x = random_point(rng, 4);
        for chi in ThetaCharacteristic::ALL {
            let fast = theta_eval(s, chi, &x);
            let radius = certified_radius(s, chi, &x);
            let slow = match theta_eval_bruteforce(s, chi, &x, radius) {
                Ok(v) => v,
                Err(e) => return Some(json!({ "x": vec2(&x), "error": e.to_string() })),
            };
            if fast.value != slow.value || !fast.reproduces(s, chi, &x) {
                return Some(json!({
                    "x": vec2(&x),
                    "characteristic": chi.to_string(),
                    "fast": rational(&fast.value),
                    "bruteforce": rational(&slow.value),
                }));
            }
        }
        None
    });

    r.sampled("theta_zero_on_cell", n, Value::Null, |rng| {
        let (x, _) = s.reduce_point(&random_point(rng, 10));
        let v = theta_eval(s, ThetaCharacteristic::B0, &x).value;
        (!v.is_zero()).then(|| json!({ "x": vec2(&x), "value": rational(&v) }))
    });

    r.sampled("theta_evenness", n, Value::Null, |rng| {
        let x = random_point(rng, 10);
        let chi = random_characteristic(rng);
        let (a, b) = (theta_eval(s, chi, &x).value, theta_eval(s, chi, &-&x).value);
        (a != b).then(|| {
            json!({ "x": vec2(&x), "characteristic": chi.to_string(),
                    "at_x": rational(&a), "at_minus_x": rational(&b) })
        })
    });

    r.sampled("theta_quasi_periodicity", n, Value::Null, |rng| {
        let x = random_point(rng, 10);
        let p = random_lattice_point(rng, 6);
        let chi = random_characteristic(rng);
        let d = quasi_periodicity_defect(s, chi, &x, &p);
        (!d.is_zero()).then(|| {
            json!({ "x": vec2(&x), "period": vec2(&p),
                    "characteristic": chi.to_string(), "defect": rational(&d) })
        })
    });

    r.sampled("theta_translation", n, Value::Null, |rng| {
        let x = random_point(rng, 10);
        let chi = ThetaCharacteristic::ALL[1 + rng.random_range(0..3usize)];
        (!translation_identity_holds(s, chi, &x))
            .then(|| json!({ "x": vec2(&x), "characteristic": chi.to_string() }))
    });

    r.sampled("theta_concavity", n, Value::Null, |rng| {
        let x = random_point(rng, 10);
        let y = random_point(rng, 10);
        let chi = random_characteristic(rng);
        let mid = theta_eval(s, chi, &(&x + &y).halve()).value;
        let avg = (theta_eval(s, chi, &x).value + theta_eval(s, chi, &y).value) * half();
        (mid < avg)
            .then(|| json!({ "x": vec2(&x), "y": vec2(&y), "characteristic": chi.to_string() }))
    });

    r.sampled("psi_periodicity", n, Value::Null, |rng| {
        let x = random_point(rng, 10);
        let p = random_lattice_point(rng, 6);
        (psi_eval(s, &x) != psi_eval(s, &(&x + &p)))
            .then(|| json!({ "x": vec2(&x), "period": vec2(&p) }))
    });

    r.sampled("descent_cocycle", n, Value::Null, |rng| {
        let d = descent_datum(s);
        let a = random_lattice_point(rng, 10);
        let b = random_lattice_point(rng, 10);
        let defect = d.cocycle_defect(&a, &b);
        (!defect.is_zero() || d.gamma(&a) != d.gamma(&-&a))
            .then(|| json!({ "u1": vec2(&a), "u2": vec2(&b), "defect": rational(&defect) }))
    });

    {
        let bound = int(2);
        let series: Vec<_> = ThetaCharacteristic::ALL
            .iter()
            .map(|&chi| {
                let r = safe_cutoff(s, chi, &bound);
                (chi, build_series(s, chi, r), build_series(s, chi, 2 * r))
            })
            .collect();
        let details = json!({
            "region_bound": rational(&bound),
            "cutoffs": series.iter().map(|(chi, a, _)| (chi.to_string(), json!(a.cutoff)))
                .collect::<Map<_, _>>(),
        });
        r.sampled("series_lift", n, details, |rng| {
            let v = Vec2::new(
                rat(rng.random_range(-40..=40), 20),
                rat(rng.random_range(-40..=40), 20),
            );
            for (chi, short, long) in &series {
                let a = tropicalize_series(short, &v).ok()?;
                let b = tropicalize_series(long, &v).ok()?;
                let t = theta_eval(s, *chi, &v).value;
                if a != b || a != t {
                    return Some(json!({
                        "v": vec2(&v), "characteristic": chi.to_string(),
                        "series": rational(&a), "doubled": rational(&b), "theta": rational(&t),
                    }));
                }
            }
            None
        });
    }

    if s.is_irreducible() {
        irreducible_checks(&mut r, s);
    } else {
        let rb = s.reduced_basis().clone();
        r.sampled("product_non_injectivity", n, Value::Null, |rng| {
            let a = rat(rng.random_range(-60..=60), rng.random_range(1..=13));
            let b = rat(rng.random_range(-60..=60), rng.random_range(1..=13));
            let x = &rb.u.scale(&a) + &rb.v.scale(&b);
            let y = &rb.u.scale(&a) - &rb.v.scale(&b);
            (psi_eval(s, &x) != psi_eval(s, &y))
                .then(|| json!({ "x": vec2(&x), "reflected": vec2(&y) }))
        });
    }

    VerificationReport {
        gram: s.gram().clone(),
        class: s.classify().as_str(),
        options: opts,
        checks: r.checks,
    }
}

fn irreducible_checks(r: &mut Runner, s: &PrincipallyPolarizedSurface) {
    let n = r.opts.samples;

    r.single("theta_constants", || {
        let (a, b, c) = theta_constants(s).map_err(|e| err(e.to_string()))?;
        let at_zero: Vec<_> = ThetaCharacteristic::ALL
            .iter()
            .map(|&chi| theta_eval(s, chi, &Vec2::zero()).value)
            .collect();
        if at_zero != [int(0), a.clone(), b.clone(), c.clone()] {
            return Err(err("theta constants differ from theta values at 0"));
        }
        Ok(json!([rational(&a), rational(&b), rational(&c)]))
    });

    r.single("subdivision", || {
        let complex = s.subdivide().map_err(|e| err(e.to_string()))?;
        if complex.cells.len() != 18 || complex.total_area() != int(1) {
            return Err(err(format!(
                "{} cells of total area {}",
                complex.cells.len(),
                complex.total_area()
            )));
        }
        Ok(json!({ "cells": 18 }))
    });

    let quartic = build_quartic(s);
    r.single("quartic_structure", || {
        let k = quartic.as_ref().map_err(|e| err(e.to_string()))?;
        Ok(json!({
            "vertices": k.labelled_vertices()
                .map(|(l, p)| (l.to_string(), vec3(p)))
                .collect::<Map<_, _>>(),
            "edges": k.edge_vectors().iter().map(vec3).collect::<Vec<_>>(),
        }))
    });

    let Ok(k) = quartic else { return };

    r.sampled("quartic_coverage", n, Value::Null, |rng| {
        let x = random_point(rng, 10);
        let p = psi_eval(s, &x);
        (!k.contains(&p)).then(|| json!({ "x": vec2(&x), "psi": vec3(&p) }))
    });

    r.sampled("injectivity", n, Value::Null, |rng| {
        let y = random_point(rng, 5);
        let p = random_lattice_point(rng, 4);
        let y2 = match rng.random_range(0..4u8) {
            0 => &y + &p,
            1 => &p - &y,
            2 => random_point(rng, 5),
            _ => &y + &Vec2::new(rat(1, rng.random_range(2..=50)), int(0)),
        };
        match injectivity_check(s, &y, &y2) {
            Ok(v) if v.is_equivalent() == (psi_eval(s, &y) == psi_eval(s, &y2)) => None,
            Ok(_) => Some(json!({ "y": vec2(&y), "y_prime": vec2(&y2), "message": "verdict disagrees with psi" })),
            Err(e) => Some(json!({ "y": vec2(&y), "y_prime": vec2(&y2), "message": e.to_string() })),
        }
    });

    r.single("unimodularity", || {
        let pieces = affine_pieces(s).map_err(|e| err(e.to_string()))?;
        if let Some(bad) = pieces.iter().find(|p| !p.unimodular) {
            return Err(json!({
                "cell": bad.cell.label.to_string(),
                "linear_part_n": int_matrix(&bad.linear_part_n),
            }));
        }
        let sigma = CellLabel::new(PieceKind::Sigma, 1);
        let sigma_piece = pieces
            .iter()
            .find(|p| p.cell.label == sigma)
            .expect("sigma1 exists");
        Ok(json!({
            "pieces": pieces.len(),
            "sigma1_linear_part_n": int_matrix(&sigma_piece.linear_part_n),
        }))
    });

    r.single("face_table", || {
        let report = coplanarity_report(s).map_err(|e| err(e.to_string()))?;
        let faces: Vec<Value> = report
            .faces
            .iter()
            .map(|f| {
                json!({
                    "equation": f.face.to_string(),
                    "observed": f.observed.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    "expected": f.face.source_cells.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                })
            })
            .collect();
        if report.matches_table() && report.parallel_pairs().len() == 3 {
            Ok(json!({ "faces": faces }))
        } else {
            Err(json!({
                "faces": faces,
                "unassigned": report.unassigned.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
            }))
        }
    });

    r.single("tau3_sign", || {
        let (a, b, c) = k.theta_constants.clone();
        let tau3 = k.vertex(VertexLabel::tau(3));
        let face = k
            .faces
            .iter()
            .find(|f| f.normal == [1, -1, -1] && f.offset == -&a + &b + &c)
            .ok_or_else(|| err("face T1-T2-T3 = -a+b+c missing"))?;
        let minus = face.on_plane(tau3) && tau3.z == -&c;
        let plus_reading = tropical_kummer::Vec3::new(&b - &c, &a - &c, c.clone());
        let plus = face.on_plane(&plus_reading);
        if !minus {
            return Err(json!({ "tau3": vec3(tau3) }));
        }
        Ok(json!({
            "tau3": vec3(tau3),
            "minus_theta11_consistent": minus,
            "plus_theta11_consistent": plus,
        }))
    });

    r.single("two_torsion_images", || {
        let imgs = two_torsion_images(s).map_err(|e| err(e.to_string()))?;
        Ok(Value::Array(
            imgs.iter()
                .map(|t| {
                    json!({
                        "representative": vec2(&t.representative),
                        "image": vec3(&t.image),
                        "is_vertex": t.is_vertex,
                    })
                })
                .collect(),
        ))
    });
}
