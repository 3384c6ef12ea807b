//! Closed-form classical and twisted Alexander polynomials from the
//! weighted graph, and the first characteristic variety.
//!
//! Each graph vertex `v` carries a meridian class `z_v` whose abelianized
//! image is a monomial `t_v` in `t₁..t_n` (the coordinate `t₀` of `ℓ₀` is
//! eliminated via `t₀ = (t₁⋯t_n)⁻¹`):
//!
//! * `Line(i)`, `i ≥ 1` → `t_i`;
//! * `Line(0)` → `(t₁⋯t_n)⁻¹`;
//! * `Point(I)` with `0 ∉ I` → `∏_{i∈I} t_i`;
//! * `Point(I)` with `0 ∈ I` → `∏_{i ∉ I∖{0}} t_i^{-1}`.
//!
//! The classical Alexander polynomial is the product over vertices of
//! `(t_v − 1)^{m_v − 2}` where `m_v` is the vertex degree; associate
//! factors (e.g. the `v₀` and far-vertex factors of a near-pencil) merge
//! with summed multiplicities under the canonical binomial orientation.
//! The twisted polynomial replaces `t_v − 1` by the characteristic
//! polynomial `det(t_v·Id − φ(z_v))` of the meridian image under a
//! representation `φ`.  The first characteristic variety is the union of
//! codimension-one subtori `{t_v = 1}` over vertices with `m_v ≥ 3`.
//!
//! A pencil of `n + 1 ≥ 3` lines has free-by-cyclic boundary group with
//! vanishing Alexander polynomial; two lines give the trivial polynomial.

use num_traits::{One, Zero};

use crate::arrangement::{ArrClass, Arrangement};
use crate::error::{Error, Result};
use crate::graph::{build_graph, VertexKind, WeightedGraph};
use crate::laurent::{char_poly_in_monomial, FactoredLaurent, LaurentPoly};
use crate::presentation::{minimal_presentation, vertex_word, Representation};
use crate::scalar::{Field, Rat};
use rand_chacha::ChaCha8Rng;

/// The abelianized meridian monomial of a graph vertex, as an exponent
/// vector over `t₁..t_n`.
pub fn vertex_monomial(n: usize, v: &VertexKind) -> Vec<i64> {
    let mut e = vec![0i64; n];
    match v {
        VertexKind::Line(0) => e.iter_mut().for_each(|x| *x = -1),
        VertexKind::Line(i) => e[*i - 1] = 1,
        VertexKind::Point(lines) => {
            if lines[0] == 0 {
                e.iter_mut().for_each(|x| *x = -1);
                for &i in &lines[1..] {
                    e[i - 1] = 0;
                }
            } else {
                for &i in lines {
                    e[i - 1] = 1;
                }
            }
        }
    }
    e
}

/// `(t_v − 1)^{m−2}` as a factored polynomial; trivial when `m = 2`.
pub fn vertex_factor(n: usize, m: usize, t_v: &[i64]) -> Result<FactoredLaurent<Rat>> {
    if m < 2 {
        return Err(Error::Internal(format!(
            "vertex multiplicity {m} below 2"
        )));
    }
    let mut out = FactoredLaurent::one(n);
    let binomial = LaurentPoly::term(n, t_v.to_vec(), Rat::one()).sub(&LaurentPoly::one(n));
    out.push_factor(&binomial, (m - 2) as u32);
    Ok(out)
}

/// Classical Alexander polynomial with an optional degeneracy note.
#[derive(Clone, Debug)]
pub struct ClassicalAlexander {
    pub delta: FactoredLaurent<Rat>,
    /// Set for pencils, whose boundary group has free part of rank ≥ 2.
    pub diagnostic: Option<String>,
}

/// `Δ(G) = ∏_v (t_v − 1)^{m_v − 2}` over the graph vertices.
pub fn alexander_polynomial(arr: &Arrangement) -> Result<ClassicalAlexander> {
    let n = arr.n();
    if arr.arrangement_class().class == ArrClass::Pencil {
        if n == 1 {
            return Ok(ClassicalAlexander {
                delta: FactoredLaurent::one(1),
                diagnostic: None,
            });
        }
        return Ok(ClassicalAlexander {
            delta: FactoredLaurent::zero(n),
            diagnostic: Some(format!(
                "pencil: the group contains a free factor F_{n}, so the Alexander polynomial vanishes"
            )),
        });
    }
    let graph = build_graph(arr)?;
    let mut delta = FactoredLaurent::one(n);
    for (v, vk) in graph.vertices.iter().enumerate() {
        let t_v = vertex_monomial(n, vk);
        delta = delta.mul(&vertex_factor(n, graph.multiplicities[v], &t_v)?);
    }
    Ok(ClassicalAlexander {
        delta,
        diagnostic: None,
    })
}

/// `Δ^φ(G) = ∏_v det(t_v·Id − φ(z_v))^{m_v − 2}` for a verified
/// representation `φ` of the minimal presentation.
pub fn twisted_alexander<F: Field>(
    arr: &Arrangement,
    rep: &Representation<F>,
) -> Result<FactoredLaurent<F>> {
    let n = arr.n();
    if arr.arrangement_class().class == ArrClass::Pencil {
        return Ok(if n == 1 {
            FactoredLaurent::one(1)
        } else {
            FactoredLaurent::zero(n)
        });
    }
    let pres = minimal_presentation(arr);
    if let Some(index) = pres
        .relators
        .iter()
        .position(|(_, w)| !rep.evaluate(w).is_identity())
    {
        return Err(Error::NotARepresentation { index });
    }
    let graph = build_graph(arr)?;
    let mut delta = FactoredLaurent::one(n);
    for (v, vk) in graph.vertices.iter().enumerate() {
        let m = graph.multiplicities[v];
        if m == 2 {
            continue;
        }
        let image = rep.evaluate(&vertex_word(arr, vk));
        let p = char_poly_in_monomial(&image, &vertex_monomial(n, vk))?;
        let mut factor = FactoredLaurent::one(n);
        factor.push_factor(&p, (m - 2) as u32);
        delta = delta.mul(&factor);
    }
    Ok(delta)
}

/// True iff two multiplicity ≥ 3 points jointly touch every line.
pub fn covering_pair_predicate(arr: &Arrangement) -> bool {
    let points: Vec<&crate::arrangement::IntersectionPoint> = arr.multiple_points().collect();
    for (a, p) in points.iter().enumerate() {
        for q in &points[a + 1..] {
            let mut covered = vec![false; arr.num_lines()];
            for &i in p.lines.iter().chain(&q.lines) {
                covered[i] = true;
            }
            if covered.iter().all(|&c| c) {
                return true;
            }
        }
    }
    false
}

/// The first characteristic variety: codimension-one subtori
/// `{t_v = 1}`, one per vertex of multiplicity ≥ 3, deduplicated.
#[derive(Clone, Debug)]
pub struct CharacteristicVarietyDescription {
    pub n: usize,
    /// Canonically oriented monomial exponent vectors, one per subtorus.
    pub subtori: Vec<Vec<i64>>,
}

impl CharacteristicVarietyDescription {
    /// Equations like `t1*t2*t3 - 1 = 0`.
    pub fn render(&self) -> Vec<String> {
        self.subtori
            .iter()
            .map(|m| {
                let b = LaurentPoly::term(self.n, m.clone(), Rat::one())
                    .sub(&LaurentPoly::one(self.n));
                format!("{} = 0", b.render())
            })
            .collect()
    }
}

/// Canonical orientation of a subtorus monomial: first nonzero exponent
/// positive.
fn orient(mut e: Vec<i64>) -> Vec<i64> {
    if let Some(first) = e.iter().find(|&&x| x != 0) {
        if *first < 0 {
            for x in &mut e {
                *x = -*x;
            }
        }
    }
    e
}

/// `V¹₁(G) = ⋃_{m_v ≥ 3} {t_v = 1}` from the graph.
pub fn characteristic_variety_v11(
    arr: &Arrangement,
    graph: &WeightedGraph,
) -> CharacteristicVarietyDescription {
    let n = arr.n();
    let mut subtori: Vec<Vec<i64>> = Vec::new();
    for (v, vk) in graph.vertices.iter().enumerate() {
        if graph.multiplicities[v] < 3 {
            continue;
        }
        let m = orient(vertex_monomial(n, vk));
        if !subtori.contains(&m) {
            subtori.push(m);
        }
    }
    CharacteristicVarietyDescription { n, subtori }
}

/// A random point of the torus lying on the subtorus `{t^monomial = 1}`:
/// all coordinates are nonzero rationals and the monomial evaluates to 1.
/// Requires the leading exponent of the (oriented) monomial to be `1`,
/// which holds for every vertex monomial.
pub fn sample_point_on_subtorus(monomial: &[i64], rng: &mut ChaCha8Rng) -> Result<Vec<Rat>> {
    let m = orient(monomial.to_vec());
    let pivot = m
        .iter()
        .position(|&x| x != 0)
        .ok_or_else(|| Error::Internal("subtorus monomial is trivial".into()))?;
    if m[pivot] != 1 {
        return Err(Error::Internal(
            "subtorus pivot exponent is not 1".into(),
        ));
    }
    let mut point: Vec<Rat> = (0..m.len())
        .map(|_| crate::scalar::sample_nonzero_rat(rng))
        .collect();
    // Solve t_pivot = ∏_{i ≠ pivot} t_i^{-e_i}.
    let mut val = Rat::one();
    for (i, &e) in m.iter().enumerate() {
        if i == pivot || e == 0 {
            continue;
        }
        for _ in 0..e.unsigned_abs() {
            if e > 0 {
                val = val / point[i].clone();
            } else {
                val = val * point[i].clone();
            }
        }
    }
    if val.is_zero() {
        return Err(Error::Internal("subtorus sample collapsed to zero".into()));
    }
    point[pivot] = val;
    Ok(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::scalar::{rat, ratio, seeded_rng};

    fn binomial(n: usize, exps: &[i64]) -> LaurentPoly<Rat> {
        LaurentPoly::term(n, exps.to_vec(), Rat::one()).sub(&LaurentPoly::one(n))
    }

    fn expected(n: usize, factors: &[(&[i64], u32)]) -> FactoredLaurent<Rat> {
        let mut f = FactoredLaurent::one(n);
        for (e, m) in factors {
            f.push_factor(&binomial(n, e), *m);
        }
        f
    }

    #[test]
    fn vertex_factor_examples() {
        assert!(vertex_factor(5, 2, &[1, 0, 0, 0, 0]).unwrap().expand().is_one());
        let sq = vertex_factor(5, 4, &[1, 0, 0, 0, 0]).unwrap();
        assert!(sq
            .expand()
            .unit_equivalent(&binomial(5, &[1, 0, 0, 0, 0]).pow(2)));
        let t345 = vertex_factor(5, 3, &[0, 0, 1, 1, 1]).unwrap();
        assert_eq!(t345.render(), "(t3*t4*t5 - 1)");
        assert!(vertex_factor(5, 1, &[1, 0, 0, 0, 0]).is_err());
    }

    #[test]
    fn first_six_line_family_matches_closed_form() {
        let arr = corpus::falk_one();
        let delta = alexander_polynomial(&arr).unwrap();
        assert!(delta.diagnostic.is_none());
        let want = expected(
            5,
            &[
                (&[1, 0, 0, 0, 0], 2),
                (&[0, 1, 0, 0, 0], 2),
                (&[0, 0, 1, 0, 0], 2),
                (&[0, 0, 0, 1, 0], 2),
                (&[0, 0, 0, 0, 1], 2),
                (&[1, 1, 1, 1, 1], 2),
                (&[0, 0, 1, 1, 1], 2),
            ],
        );
        assert!(delta.delta.unit_equivalent(&want));
    }

    #[test]
    fn second_six_line_family_matches_closed_form() {
        let arr = corpus::falk_two();
        let delta = alexander_polynomial(&arr).unwrap().delta;
        let want = expected(
            5,
            &[
                (&[1, 0, 0, 0, 0], 2),
                (&[0, 1, 0, 0, 0], 2),
                (&[0, 0, 1, 0, 0], 2),
                (&[0, 0, 0, 1, 0], 2),
                (&[0, 0, 0, 0, 1], 3),
                (&[1, 1, 1, 1, 1], 1),
                (&[0, 0, 1, 1, 1], 1),
                (&[1, 1, 0, 0, 1], 1),
            ],
        );
        assert!(delta.unit_equivalent(&want));
    }

    #[test]
    fn near_pencil_factors_merge_across_the_two_big_vertices() {
        for n in [3usize, 4, 5] {
            let arr = corpus::near_pencil(n + 1);
            let delta = alexander_polynomial(&arr).unwrap().delta;
            let all_ones: Vec<i64> = vec![1; n];
            let want = expected(n, &[(&all_ones, 2 * (n as u32 - 2))]);
            assert!(delta.unit_equivalent(&want), "near-pencil on {} lines", n + 1);
            assert_eq!(delta.distinct_factor_count(), 1);
        }
    }

    #[test]
    fn general_position_closed_form() {
        // n + 1 lines in general position: [(t₁−1)⋯(t_n−1)(t₁⋯t_n−1)]^{n−2}.
        for total in [4usize, 5] {
            let n = total - 1;
            let arr = corpus::general_position(total);
            let delta = alexander_polynomial(&arr).unwrap().delta;
            let mut factors: Vec<(Vec<i64>, u32)> = Vec::new();
            for i in 0..n {
                let mut e = vec![0i64; n];
                e[i] = 1;
                factors.push((e, n as u32 - 2));
            }
            factors.push((vec![1; n], n as u32 - 2));
            let refs: Vec<(&[i64], u32)> =
                factors.iter().map(|(e, m)| (e.as_slice(), *m)).collect();
            assert!(delta.unit_equivalent(&expected(n, &refs)));
        }
    }

    #[test]
    fn pencils_degenerate_to_zero_or_one() {
        let big = alexander_polynomial(&corpus::pencil(4)).unwrap();
        assert!(big.delta.is_zero());
        assert!(big.diagnostic.as_deref().unwrap().contains("free factor"));
        let two = alexander_polynomial(&corpus::pencil(2)).unwrap();
        assert!(two.delta.expand().is_one());
    }

    #[test]
    fn trivial_representation_recovers_classical_polynomial() {
        let arr = corpus::falk_one();
        let rep = Representation::<Rat>::identity(1);
        let twisted = twisted_alexander(&arr, &rep).unwrap();
        let classical = alexander_polynomial(&arr).unwrap().delta;
        assert!(twisted.unit_equivalent(&classical));
    }

    #[test]
    fn identity_representation_scales_every_exponent() {
        // The per-vertex characteristic polynomial (t_v − 1)^k is stored
        // unsplit, so compare the expansions.
        let arr = corpus::near_pencil(4);
        let rep = Representation::<Rat>::identity(2);
        let twisted = twisted_alexander(&arr, &rep).unwrap();
        let classical = alexander_polynomial(&arr).unwrap().delta;
        assert!(twisted
            .expand()
            .unit_equivalent(&classical.mul(&classical).expand()));
    }

    #[test]
    fn diagonal_representation_on_near_pencil_by_hand() {
        use crate::matrix::Mat;
        use crate::presentation::Gen;
        let arr = corpus::near_pencil(4);
        let mut rep = Representation::<Rat>::identity(2);
        for j in 1..=3 {
            rep.set(
                Gen::X(j),
                Mat::from_rows(vec![vec![rat(2), rat(0)], vec![rat(0), ratio(1, 2)]]).unwrap(),
            )
            .unwrap();
        }
        let twisted = twisted_alexander(&arr, &rep).unwrap();
        // Both multiplicity-3 vertices contribute (t₁t₂t₃ − 8)(t₁t₂t₃ − 1/8).
        let t = |c: Rat| {
            LaurentPoly::from_terms(3, [(vec![1, 1, 1], Rat::one()), (vec![0, 0, 0], -c)])
        };
        let mut want = FactoredLaurent::one(3);
        want.push_factor(&t(rat(8)), 2);
        want.push_factor(&t(ratio(1, 8)), 2);
        assert!(twisted.expand().unit_equivalent(&want.expand()));
        // The two vertex factors canonicalize identically and merge.
        assert_eq!(twisted.distinct_factor_count(), 1);
    }

    #[test]
    fn unverified_representation_is_rejected() {
        use crate::matrix::Mat;
        use crate::presentation::Gen;
        let arr = corpus::general_position(4);
        let mut rep = Representation::<Rat>::identity(2);
        rep.set(
            Gen::X(1),
            Mat::from_rows(vec![vec![rat(1), rat(1)], vec![rat(0), rat(1)]]).unwrap(),
        )
        .unwrap();
        rep.set(
            Gen::X(2),
            Mat::from_rows(vec![vec![rat(1), rat(0)], vec![rat(1), rat(1)]]).unwrap(),
        )
        .unwrap();
        assert!(matches!(
            twisted_alexander(&arr, &rep),
            Err(Error::NotARepresentation { .. })
        ));
    }

    #[test]
    fn factor_counts_follow_the_covering_pair_rule() {
        let f1 = corpus::falk_one();
        let d1 = alexander_polynomial(&f1).unwrap().delta;
        assert!(covering_pair_predicate(&f1));
        assert_eq!(d1.distinct_factor_count(), f1.dense_edges().size - 1);
        assert_eq!(d1.distinct_factor_count(), 7);

        let f2 = corpus::falk_two();
        let d2 = alexander_polynomial(&f2).unwrap().delta;
        assert!(!covering_pair_predicate(&f2));
        assert_eq!(d2.distinct_factor_count(), f2.dense_edges().size);
        assert_eq!(d2.distinct_factor_count(), 8);

        let gp = corpus::general_position(5);
        let dg = alexander_polynomial(&gp).unwrap().delta;
        assert!(!covering_pair_predicate(&gp));
        assert_eq!(dg.distinct_factor_count(), gp.dense_edges().size);
        assert_eq!(dg.distinct_factor_count(), 5);
    }

    #[test]
    fn characteristic_variety_counts() {
        let f2 = corpus::falk_two();
        let g2 = build_graph(&f2).unwrap();
        assert_eq!(characteristic_variety_v11(&f2, &g2).subtori.len(), 8);

        let np = corpus::near_pencil(4);
        let gn = build_graph(&np).unwrap();
        let v = characteristic_variety_v11(&np, &gn);
        assert_eq!(v.subtori, vec![vec![1, 1, 1]]);
        assert_eq!(v.render(), vec!["t1*t2*t3 - 1 = 0"]);

        let gp = corpus::general_position(5);
        let gg = build_graph(&gp).unwrap();
        let vg = characteristic_variety_v11(&gp, &gg);
        assert_eq!(vg.subtori.len(), 5);
    }

    #[test]
    fn alexander_zero_locus_is_the_characteristic_variety() {
        let arr = corpus::falk_two();
        let graph = build_graph(&arr).unwrap();
        let delta = alexander_polynomial(&arr).unwrap().delta.expand();
        let v = characteristic_variety_v11(&arr, &graph);
        let mut rng = seeded_rng(7);
        for sub in &v.subtori {
            for _ in 0..3 {
                let p = sample_point_on_subtorus(sub, &mut rng).unwrap();
                // The defining monomial evaluates to 1 on the subtorus.
                let mono = LaurentPoly::term(5, sub.clone(), Rat::one());
                assert!(mono.eval(&p).unwrap().is_one());
                assert!(delta.eval(&p).unwrap().is_zero());
            }
        }
        // A generic point misses the variety.
        let generic: Vec<Rat> = (2..7).map(|k| rat(k)).collect();
        assert!(!delta.eval(&generic).unwrap().is_zero());
    }

    #[test]
    fn closed_form_matches_the_group_theoretic_oracle() {
        use crate::presentation::{alexander_gcd_oracle, fox_jacobian};
        for arr in [
            corpus::near_pencil(4),
            corpus::general_position(4),
            corpus::falk_one(),
        ] {
            let pres = minimal_presentation(&arr);
            let matrix = fox_jacobian(&arr, &pres);
            let oracle = alexander_gcd_oracle(&matrix).unwrap();
            assert!(!oracle.probabilistic);
            let closed = alexander_polynomial(&arr).unwrap().delta.expand();
            assert!(oracle.delta.unit_equivalent(&closed));
        }
    }
}
