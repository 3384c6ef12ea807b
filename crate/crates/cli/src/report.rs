//! Builders for the JSON sections of the reports printed by the binary.
//!
//! Every builder produces `serde_json` values with a fixed key order, so a
//! report is byte-identical across runs with the same input and seed.  A few
//! sections also run cross-checks (gcd oracle, Poincaré duality, sampled
//! characteristic-variety ranks); their [`Outcome`] records whether a check
//! failed, which the binary turns into exit code 2.

use linarr_core::alexander::{
    alexander_polynomial, characteristic_variety_v11, sample_point_on_subtorus, twisted_alexander,
    ClassicalAlexander,
};
use linarr_core::arrangement::{ArrClass, Arrangement};
use linarr_core::cohomology::{
    double, eta_form, expected_generated, generated_in_degree_one, os_algebra, pd_check,
};
use linarr_core::graph::build_graph;
use linarr_core::holonomy::{graded_ranks, holonomy_complement, holonomy_double, LiePresentation};
use linarr_core::loci::{formality as formality_verdict, r11, R11Report};
use linarr_core::matrix::smith_invariant_factors;
use linarr_core::polytope::{bns_component_count, twisted_ball_equivalent, z_matrix, NormBall};
use linarr_core::presentation::{
    alexander_gcd_oracle, fox_jacobian, minimal_presentation, Representation,
};
use linarr_core::scalar::{sample_nonzero_rat, seeded_rng, ChaCha8Rng};
use linarr_core::{Error, Field, Rat, Result};
use num::{BigInt, One};
use serde_json::{json, Value};

use crate::repfile::RepFile;

/// Matrix-size limit for the automatic oracle cross-check inside `all`; the
/// exact minor enumeration grows quickly with the matrix, so larger inputs
/// run it only on explicit request via `alexander --oracle`.
const ORACLE_AUTO_LIMIT: usize = 14;

/// Holonomy degree prefix reported by `all`; `holonomy --max-degree` goes
/// deeper on request.
const ALL_HOLONOMY_DEPTH: usize = 4;

/// A report section plus the process-level flags the binary turns into exit
/// codes.
pub struct Outcome {
    pub value: Value,
    /// A computed invariant disagreed with its cross-check (exit 2).
    pub consistency_failed: bool,
    /// An explicitly requested computation hit the work cap (exit 3).
    pub capped: bool,
}

impl Outcome {
    pub fn plain(value: Value) -> Outcome {
        Outcome {
            value,
            consistency_failed: false,
            capped: false,
        }
    }
}

pub fn classify(arr: &Arrangement) -> Value {
    let class = arr.arrangement_class();
    let dense = arr.dense_edges();
    let note = if class.class == ArrClass::Pencil {
        json!("Delta = 0: the Alexander polynomial of a pencil vanishes identically")
    } else {
        Value::Null
    };
    json!({
        "class": class.class.name(),
        "aspherical": class.aspherical,
        "dense_edges": {"multiple_points": dense.r, "size": dense.size},
        "note": note,
    })
}

pub fn graph(arr: &Arrangement) -> Result<Value> {
    let graph = build_graph(arr)?;
    let mut value = graph.to_json();
    value["genus"] = json!(graph.genus());
    Ok(value)
}

pub fn presentation(arr: &Arrangement) -> Value {
    let pres = minimal_presentation(arr);
    let generators: Vec<String> = pres.generators.iter().map(|g| g.name()).collect();
    let relators: Vec<Value> = pres
        .relators
        .iter()
        .map(|(label, word)| json!({"label": label, "word": word.render()}))
        .collect();
    let rows: Vec<Vec<BigInt>> = pres
        .relators
        .iter()
        .map(|(_, word)| {
            pres.generators
                .iter()
                .map(|g| BigInt::from(word.exponent_sum(g)))
                .collect()
        })
        .collect();
    let factors = smith_invariant_factors(&rows);
    let torsion: Vec<String> = factors
        .iter()
        .filter(|f| **f > BigInt::one())
        .map(|f| f.to_string())
        .collect();
    json!({
        "generators": generators,
        "generator_count": pres.generators.len(),
        "relators": relators,
        "relator_count": pres.relators.len(),
        "abelianization": {
            "rank": pres.generators.len() - factors.len(),
            "torsion": torsion,
        },
        "text": pres.render(),
    })
}

pub fn alexander(arr: &Arrangement, oracle: bool, rep: Option<&RepFile>) -> Result<Outcome> {
    let classical = alexander_polynomial(arr)?;
    let mut section = json!({
        "delta": {
            "factored": classical.delta.render(),
            "zero": classical.delta.is_zero(),
            "variables": arr.n(),
        },
        "note": classical.diagnostic,
    });
    let mut failed = false;
    if oracle {
        let (value, matches) = oracle_check(arr, &classical)?;
        failed = failed || !matches;
        section["oracle"] = value;
    }
    if let Some(rep) = rep {
        section["twisted"] = match rep {
            RepFile::Rational { dim, rep } => twisted(arr, *dim, rep, &classical)?,
            RepFile::Gaussian { dim, rep } => twisted(arr, *dim, rep, &classical)?,
        };
    }
    Ok(Outcome {
        value: section,
        consistency_failed: failed,
        capped: false,
    })
}

/// Recomputes the Alexander polynomial as the gcd of the codimension-one
/// minors of the Fox Jacobian and compares it, up to units, with the closed
/// form.
fn oracle_check(arr: &Arrangement, classical: &ClassicalAlexander) -> Result<(Value, bool)> {
    let pres = minimal_presentation(arr);
    let matrix = fox_jacobian(arr, &pres);
    let outcome = alexander_gcd_oracle(&matrix)?;
    let matches = outcome.delta.unit_equivalent(&classical.delta.expand());
    let value = json!({
        "delta": outcome.delta.render(),
        "probabilistic": outcome.probabilistic,
        "note": outcome.diagnostic,
        "matches_closed_form": matches,
    });
    Ok((value, matches))
}

fn twisted<F: Field>(
    arr: &Arrangement,
    dim: usize,
    rep: &Representation<F>,
    classical: &ClassicalAlexander,
) -> Result<Value> {
    let delta_phi = twisted_alexander(arr, rep)?;
    let ball = if classical.delta.is_zero() || delta_phi.is_zero() {
        json!({
            "equivalent": Value::Null,
            "note": "comparison undefined: a polynomial vanishes",
        })
    } else {
        let z = z_matrix(&classical.delta)?;
        let z_phi = z_matrix(&delta_phi)?;
        let equivalent = twisted_ball_equivalent(&classical.delta, &delta_phi, dim)?;
        json!({
            "equivalent": equivalent,
            "scale": dim,
            "z_columns": z.cols,
            "z_phi_columns": z_phi.cols,
        })
    };
    Ok(json!({
        "dimension": dim,
        "field": F::TAG,
        "delta_phi": {"factored": delta_phi.render(), "zero": delta_phi.is_zero()},
        "ball": ball,
    }))
}

pub fn norm_ball(arr: &Arrangement) -> Result<Value> {
    let classical = alexander_polynomial(arr)?;
    let ball = NormBall::new(&classical.delta)?;
    Ok(json!({
        "variables": arr.n(),
        "vertices": ball.support(),
        "vertex_count": ball.support().len(),
    }))
}

pub fn bns(arr: &Arrangement) -> Result<Value> {
    let report = bns_component_count(arr)?;
    let faces: Vec<Value> = report
        .faces
        .iter()
        .map(|f| json!({"vertex": f.vertex, "cone_signs": f.cone_signs}))
        .collect();
    Ok(json!({
        "component_count": report.component_count,
        "z_matrix": {"variables": report.z.n, "columns": report.z.cols},
        "poincare": report.poincare,
        "poincare_rendered": render_poly_t(&report.poincare),
        "faces": faces,
        "pm_one_vertices": report.pm_one_vertices,
    }))
}

pub fn cohomology(arr: &Arrangement) -> Outcome {
    let algebra = double(os_algebra(arr));
    let eta = eta_form(arr);
    let labels = algebra.deg1_labels();
    let terms: Vec<Value> = eta
        .records(&labels)
        .into_iter()
        .map(|(a, b, c, coeff)| json!([a, b, c, coeff]))
        .collect();
    let term_count = terms.len();
    let duality = pd_check(&algebra);
    let generated = generated_in_degree_one(&algebra);
    let expected = expected_generated(arr);
    let quadratic = [1i64, algebra.dim1() as i64 - 1, 1];
    let value = json!({
        "betti": algebra.betti(),
        "poincare": algebra.poincare_polynomial(),
        "poincare_factored": format!("(1 + t)*({})", render_poly_t(&quadratic)),
        "eta": {"terms": terms, "term_count": term_count, "zero": eta.is_zero()},
        "poincare_duality": duality,
        "generated_in_degree_one": generated,
        "generation_expected": expected,
    });
    Outcome {
        value,
        consistency_failed: !duality || generated != expected,
        capped: false,
    }
}

pub fn holonomy(arr: &Arrangement, max_degree: usize) -> Outcome {
    let (complement, capped_c) = algebra_ranks(&holonomy_complement(arr), max_degree);
    let (dbl, capped_d) = algebra_ranks(&holonomy_double(arr), max_degree);
    Outcome {
        value: json!({
            "max_degree": max_degree,
            "complement": complement,
            "double": dbl,
        }),
        consistency_failed: false,
        capped: capped_c || capped_d,
    }
}

fn algebra_ranks(pres: &LiePresentation, max_degree: usize) -> (Value, bool) {
    let ranks = graded_ranks(pres, max_degree);
    let relations: Vec<String> = pres
        .relations
        .iter()
        .map(|r| pres.render_relation(r))
        .collect();
    let capped = ranks.capped();
    let value = json!({
        "generators": pres.labels,
        "relations": relations,
        "ranks": ranks.dims,
        "depth": ranks.depth,
        "requested_depth": ranks.requested,
        "capped": capped,
        "series": ranks.hilbert_prefix(),
    });
    (value, capped)
}

pub fn loci(arr: &Arrangement, samples: usize, seed: u64) -> Result<Outcome> {
    let graph = build_graph(arr)?;
    let variety = characteristic_variety_v11(arr, &graph);
    let pres = minimal_presentation(arr);
    let matrix = fox_jacobian(arr, &pres);
    let size = matrix.size();
    let n = arr.n();
    let pencil = arr.arrangement_class().class == ArrClass::Pencil;
    let mut rng = seeded_rng(seed);
    let mut consistent = true;

    let mut subtori = Vec::new();
    for monomial in &variety.subtori {
        let mut ranks = Vec::new();
        for _ in 0..samples {
            let point = subtorus_sample(monomial, n, size - n, &mut rng)?;
            ranks.push(matrix.rank_at(&point)?);
        }
        let within = ranks.iter().all(|&r| r + 2 <= size);
        consistent = consistent && within;
        subtori.push(json!({
            "monomial": monomial,
            "ranks": ranks,
            "max_allowed": size - 2,
            "within_bound": within,
        }));
    }

    let mut generic_ranks = Vec::new();
    for _ in 0..samples {
        let point: Vec<Rat> = (0..size).map(|_| sample_nonzero_rat(&mut rng)).collect();
        generic_ranks.push(matrix.rank_at(&point)?);
    }
    let generic_ok = pencil || generic_ranks.iter().all(|&r| r == size - 1);
    consistent = consistent && generic_ok;

    let r11_report = r11(arr)?;
    let value = json!({
        "characteristic_variety": {
            "subtorus_count": variety.subtori.len(),
            "subtori": variety.subtori,
            "equations": variety.render(),
        },
        "sampling": {
            "seed": seed,
            "samples_per_subtorus": samples,
            "matrix_size": size,
            "subtori": subtori,
            "generic": {
                "ranks": generic_ranks,
                "expected": if pencil { Value::Null } else { json!(size - 1) },
                "note": if pencil {
                    json!("Delta = 0: the matrix is rank-deficient everywhere")
                } else {
                    Value::Null
                },
                "as_expected": generic_ok,
            },
        },
        "resonance": {"r11": r11_value(&r11_report)},
        "consistent": consistent,
    });
    Ok(Outcome {
        value,
        consistency_failed: !consistent,
        capped: false,
    })
}

/// A random point whose `t`-part lies on the given subtorus and whose
/// `s`-part is unconstrained.  The zero monomial (a pencil's full-torus
/// component) puts no condition on the `t`-part.
fn subtorus_sample(
    monomial: &[i64],
    n: usize,
    s_len: usize,
    rng: &mut ChaCha8Rng,
) -> Result<Vec<Rat>> {
    let mut point = if monomial.iter().all(|&e| e == 0) {
        (0..n).map(|_| sample_nonzero_rat(rng)).collect()
    } else {
        sample_point_on_subtorus(monomial, rng)?
    };
    point.extend((0..s_len).map(|_| sample_nonzero_rat(rng)));
    Ok(point)
}

fn r11_value(report: &R11Report) -> Value {
    json!({
        "class": report.class.name(),
        "dimension": report.dimension,
        "ambient": report.ambient,
        "description": report.render(),
    })
}

pub fn formality(arr: &Arrangement) -> Result<Value> {
    let report = formality_verdict(arr)?;
    let witness: Value = match &report.witness {
        None => Value::Null,
        Some(point) => json!(point.iter().map(|c| c.to_string()).collect::<Vec<_>>()),
    };
    Ok(json!({
        "formal": report.formal,
        "reason": report.reason.label(),
        "subtori": report.subtori,
        "tangent_cone": {
            "full_space": report.tc_is_full_space,
            "hyperplanes": report.render_hyperplanes(),
            "hyperplane_count": report.tc_hyperplanes.len(),
        },
        "r11": r11_value(&report.r11),
        "witness": witness,
    }))
}

pub fn all(arr: &Arrangement, seed: u64) -> Result<Outcome> {
    let mut failed = false;

    let size = arr.n() + arr.nbc2().len();
    let run_oracle = size <= ORACLE_AUTO_LIMIT;
    let mut alexander_section = alexander(arr, run_oracle, None)?;
    failed = failed || alexander_section.consistency_failed;
    if !run_oracle {
        alexander_section.value["oracle"] = json!({
            "skipped": format!(
                "matrix size {size} exceeds the quick-report limit; run `alexander --oracle`"
            ),
        });
    }

    let norm_ball_section = match norm_ball(arr) {
        Ok(value) => value,
        Err(Error::ZeroPolynomial) => {
            json!({"skipped": "the Alexander polynomial vanishes; the norm ball is undefined"})
        }
        Err(e) => return Err(e),
    };
    let bns_section = match bns(arr) {
        Ok(value) => value,
        Err(Error::InvalidArrangement(reason)) => json!({"skipped": reason}),
        Err(e) => return Err(e),
    };

    let cohomology_section = cohomology(arr);
    failed = failed || cohomology_section.consistency_failed;

    let holonomy_section = holonomy(arr, ALL_HOLONOMY_DEPTH);

    let loci_section = loci(arr, 3, seed)?;
    failed = failed || loci_section.consistency_failed;

    let value = json!({
        "classify": classify(arr),
        "graph": graph(arr)?,
        "presentation": presentation(arr),
        "alexander": alexander_section.value,
        "norm_ball": norm_ball_section,
        "bns": bns_section,
        "cohomology": cohomology_section.value,
        "holonomy": holonomy_section.value,
        "loci": loci_section.value,
        "formality": formality(arr)?,
    });
    Ok(Outcome {
        value,
        consistency_failed: failed,
        capped: false,
    })
}

/// Rendering of `Σ cₖ tᵏ` in the style `1 + 7*t + 21*t^2`.
fn render_poly_t(coeffs: &[i64]) -> String {
    let mut parts: Vec<String> = Vec::new();
    for (k, &c) in coeffs.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let magnitude = c.abs();
        let body = match (k, magnitude) {
            (0, _) => format!("{magnitude}"),
            (1, 1) => "t".to_string(),
            (1, _) => format!("{magnitude}*t"),
            (_, 1) => format!("t^{k}"),
            _ => format!("{magnitude}*t^{k}"),
        };
        if parts.is_empty() {
            parts.push(if c < 0 { format!("-{body}") } else { body });
        } else {
            parts.push(format!("{} {body}", if c < 0 { "-" } else { "+" }));
        }
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" ")
    }
}
