//! Newton polytopes of Alexander polynomials as zonotopes, the Alexander
//! norm, and chamber counts of the secondary arrangement.
//!
//! The Alexander polynomial of the boundary manifold factors as
//! Δ = ∏_v (t^{q_v} − 1)^{d_v}, so its Newton polytope is a Minkowski sum of
//! the segments [0, d_v·q_v] — a zonotope, recorded by the integer matrix Z
//! whose columns are the vectors d_v·q_v, one per distinct factor.  The
//! columns of Z also define a "secondary" arrangement S = {x : q_i·x = 0} in
//! Rⁿ whose chambers biject with the zonotope's vertices: the chamber with
//! sign vector σ picks the vertex Σ_{σ_i > 0} q_i.  Zaslavsky's theorem
//! counts the chambers as P(S,1), where P(S,t) = Σ_X μ(X)(−t)^{rank X} runs
//! over the intersection poset of S with its Möbius function μ.
//!
//! The Alexander norm ‖ξ‖_A = sup_{i,j} ξ(g_i − g_j), a supremum over pairs
//! of exponents of Δ, is the width of the Newton polytope in direction ξ and
//! is computed here from the zonotope's vertex list.  The number of
//! connected components of the BNS invariant Σ_{G,B} equals the chamber
//! count of the secondary arrangement, and each component corresponds to a
//! top-dimensional face of the Alexander ball, i.e. to a vertex of the
//! zonotope together with its normal cone.

use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::alexander::alexander_polynomial;
use crate::arrangement::{ArrClass, Arrangement};
use crate::error::{Error, Result};
use crate::laurent::{FactoredLaurent, LaurentPoly};
use crate::matrix::{feasible, Mat, Rel};
use crate::scalar::{rat, Field, Rat};

/// The integer matrix determining the Newton polytope of a factored
/// Alexander polynomial: one column d·q per distinct factor with segment
/// support {0, q} and multiplicity d.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZMatrix {
    /// Ambient dimension (number of t-variables).
    pub n: usize,
    /// Columns in canonical factor order; no column is zero.
    pub cols: Vec<Vec<i64>>,
}

impl ZMatrix {
    /// Number of columns.
    pub fn num_cols(&self) -> usize {
        self.cols.len()
    }

    /// Exact rank over Q.
    pub fn rank(&self) -> usize {
        if self.cols.is_empty() {
            return 0;
        }
        let rows: Vec<Vec<Rat>> = self
            .cols
            .iter()
            .map(|c| c.iter().map(|&x| rat(x)).collect())
            .collect();
        Mat::from_rows(rows).expect("columns share the ambient dimension").rank()
    }

    /// The matrix with every column multiplied by `k`.
    pub fn scaled(&self, k: i64) -> ZMatrix {
        ZMatrix {
            n: self.n,
            cols: self
                .cols
                .iter()
                .map(|c| c.iter().map(|&x| k * x).collect())
                .collect(),
        }
    }

    /// Columns with a canonical per-column sign (first nonzero entry
    /// positive), sorted; used for order- and sign-insensitive comparison.
    pub fn canonical_columns(&self) -> Vec<Vec<i64>> {
        let mut cols: Vec<Vec<i64>> = self.cols.iter().map(|c| orient_column(c)).collect();
        cols.sort_unstable();
        cols
    }

    /// Plain-text rows, entries space-separated.
    pub fn render(&self) -> String {
        (0..self.n)
            .map(|r| {
                self.cols
                    .iter()
                    .map(|c| c[r].to_string())
                    .collect::<Vec<_>>()
                    .join(" ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

fn orient_column(c: &[i64]) -> Vec<i64> {
    match c.iter().find(|&&x| x != 0) {
        Some(&x) if x < 0 => c.iter().map(|&v| -v).collect(),
        _ => c.to_vec(),
    }
}

/// Build the Z-matrix of a nonzero factored polynomial: one column
/// `mult × (endpoint of the factor's segment support)` per distinct factor.
///
/// Every factor must have support on a segment from the origin (true for
/// (t^q − 1) factors and for characteristic polynomials of automorphisms
/// evaluated in a monomial); a non-collinear support is rejected as an
/// internal error.
pub fn z_matrix<F: Field>(delta: &FactoredLaurent<F>) -> Result<ZMatrix> {
    if delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = delta.nvars();
    let mut cols = Vec::with_capacity(delta.factors().len());
    for (factor, mult) in delta.factors() {
        let support: Vec<&Vec<i64>> = factor.terms().map(|(e, _)| e).collect();
        let endpoint: Vec<i64> = (*support.iter().max().expect("factors are nonzero")).clone();
        for p in &support {
            for a in 0..n {
                for b in (a + 1)..n {
                    if (p[a] as i128) * (endpoint[b] as i128)
                        != (p[b] as i128) * (endpoint[a] as i128)
                    {
                        return Err(Error::Internal(
                            "factor support is not a segment through the origin".into(),
                        ));
                    }
                }
            }
        }
        let col: Vec<i64> = endpoint.iter().map(|&q| q * (*mult as i64)).collect();
        if col.iter().all(|&x| x == 0) {
            return Err(Error::Internal("factor with a single-point support".into()));
        }
        cols.push(col);
    }
    Ok(ZMatrix { n, cols })
}

/// A zonotope given by its generating segments [0, column].
#[derive(Clone, Debug)]
pub struct Zonotope {
    pub generators: ZMatrix,
}

impl Zonotope {
    /// The vertex set, one vertex per chamber of the secondary arrangement.
    pub fn vertices(&self) -> Vec<Vec<i64>> {
        zonotope_vertices(&self.generators)
    }
}

/// One element of the intersection poset of the secondary arrangement.
#[derive(Clone, Debug)]
pub struct PosetElement {
    /// Canonical reduced row-echelon basis of the normals defining the
    /// subspace; empty for the bottom element Rⁿ.
    pub normals: Vec<Vec<Rat>>,
    /// Codimension of the subspace.
    pub rank: usize,
    /// Indices of the hyperplanes containing the subspace.
    pub incident: Vec<usize>,
    /// Möbius value μ(bottom, x).
    pub mu: i64,
}

/// The full intersection poset of the secondary arrangement, bottom first,
/// sorted by rank.
#[derive(Clone, Debug)]
pub struct IntersectionPoset {
    /// Ambient dimension.
    pub dim: usize,
    /// Normal vector of each hyperplane (primitive, sign-normalized).
    pub hyperplanes: Vec<Vec<i64>>,
    pub elements: Vec<PosetElement>,
}

/// Intersection poset, Poincaré polynomial coefficients (index = degree),
/// and Zaslavsky chamber count `P(S,1)` of the secondary arrangement of `Z`.
pub fn chambers_and_char_poly(z: &ZMatrix) -> (IntersectionPoset, Vec<i64>, u64) {
    let dirs = distinct_directions(z);
    let poset = build_poset(z.n, &dirs);
    let mut poincare = vec![0i64; poset.elements.iter().map(|e| e.rank).max().unwrap_or(0) + 1];
    for e in &poset.elements {
        poincare[e.rank] += if e.rank % 2 == 0 { e.mu } else { -e.mu };
    }
    let count: i64 = poincare.iter().sum();
    debug_assert!(count > 0, "a real arrangement has at least one chamber");
    (poset, poincare, count as u64)
}

/// The vertices of the zonotope generated by the columns of `Z`, one per
/// chamber of the secondary arrangement, sorted; duplicates removed.
pub fn zonotope_vertices(z: &ZMatrix) -> Vec<Vec<i64>> {
    let dirs = distinct_directions(z);
    let orient = column_orientations(z, &dirs);
    let chambers = enumerate_chambers(z.n, &dirs);
    let mut vertices = BTreeSet::new();
    for signs in &chambers {
        let mut v = vec![0i64; z.n];
        for (col, &(dir, eps)) in z.cols.iter().zip(orient.iter()) {
            if eps != 0 && signs[dir] * eps > 0 {
                for (vi, ci) in v.iter_mut().zip(col.iter()) {
                    *vi += ci;
                }
            }
        }
        vertices.insert(v);
    }
    vertices.into_iter().collect()
}

/// Primitive sign-normalized normal directions of the nonzero columns, in
/// order of first appearance.
fn distinct_directions(z: &ZMatrix) -> Vec<Vec<i64>> {
    let mut dirs: Vec<Vec<i64>> = Vec::new();
    for col in &z.cols {
        if let Some(d) = primitive_direction(col) {
            if !dirs.contains(&d) {
                dirs.push(d);
            }
        }
    }
    dirs
}

/// (direction index, ±1) per column: the column equals a positive multiple
/// of the direction (+1) or a negative one (−1); zero columns get (0, 0).
fn column_orientations(z: &ZMatrix, dirs: &[Vec<i64>]) -> Vec<(usize, i8)> {
    z.cols
        .iter()
        .map(|col| match primitive_direction(col) {
            None => (0, 0),
            Some(d) => {
                let idx = dirs.iter().position(|x| *x == d).expect("direction recorded");
                let lead = col.iter().find(|&&x| x != 0).expect("nonzero column");
                (idx, if *lead > 0 { 1 } else { -1 })
            }
        })
        .collect()
}

/// Divide by the gcd of the entries and make the first nonzero entry
/// positive; `None` for the zero vector.
fn primitive_direction(col: &[i64]) -> Option<Vec<i64>> {
    let mut g: i64 = 0;
    for &x in col {
        g = num::integer::gcd(g, x.abs());
    }
    if g == 0 {
        return None;
    }
    Some(orient_column(&col.iter().map(|&x| x / g).collect::<Vec<_>>()))
}

/// Breadth-first enumeration of the realizable sign vectors (chambers) of
/// the central arrangement with the given distinct normals, seeded from a
/// generic point and expanded by single-hyperplane sign flips with exact
/// rational feasibility tests.
fn enumerate_chambers(n: usize, dirs: &[Vec<i64>]) -> Vec<Vec<i8>> {
    if dirs.is_empty() {
        return vec![Vec::new()];
    }
    let seed = generic_seed_signs(n, dirs);
    let mut seen: BTreeSet<Vec<i8>> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(seed.clone());
    queue.push_back(seed);
    while let Some(signs) = queue.pop_front() {
        for i in 0..dirs.len() {
            let mut flipped = signs.clone();
            flipped[i] = -flipped[i];
            if seen.contains(&flipped) {
                continue;
            }
            if chamber_realizable(n, dirs, &flipped) {
                seen.insert(flipped.clone());
                queue.push_back(flipped);
            }
        }
    }
    seen.into_iter().collect()
}

/// Signs of a point chosen off every hyperplane: try moment-curve points
/// (1, θ, θ², …) for increasing θ; each hyperplane excludes at most n − 1
/// values of θ, so a valid point appears quickly.
fn generic_seed_signs(n: usize, dirs: &[Vec<i64>]) -> Vec<i8> {
    let mut theta: i64 = 2;
    loop {
        let point: Vec<i64> = (0..n)
            .scan(1i64, |acc, _| {
                let v = *acc;
                *acc = acc.saturating_mul(theta);
                Some(v)
            })
            .collect();
        let dots: Vec<i128> = dirs
            .iter()
            .map(|d| d.iter().zip(&point).map(|(&a, &b)| a as i128 * b as i128).sum())
            .collect();
        if dots.iter().all(|&x| x != 0) {
            return dots.iter().map(|&x| if x > 0 { 1 } else { -1 }).collect();
        }
        theta += 1;
    }
}

/// Exact feasibility of the open cone { x : signᵢ·(dirᵢ·x) > 0 ∀i }.  The
/// cone is nonempty iff the inhomogeneous system signᵢ·(dirᵢ·x) ≥ 1 is
/// solvable, by homogeneous rescaling.
fn chamber_realizable(n: usize, dirs: &[Vec<i64>], signs: &[i8]) -> bool {
    let rows: Vec<(Vec<Rat>, Rel, Rat)> = dirs
        .iter()
        .zip(signs)
        .map(|(d, &s)| {
            let coeffs = d.iter().map(|&x| rat(x * s as i64)).collect();
            (coeffs, Rel::Ge, Rat::one())
        })
        .collect();
    feasible(n, &rows, false)
}

fn build_poset(dim: usize, dirs: &[Vec<i64>]) -> IntersectionPoset {
    // Subspaces are keyed by the canonical reduced row-echelon basis of
    // their defining normals; breadth-first closure under adding one
    // hyperplane at a time reaches every intersection.
    let dir_rows: Vec<Vec<Rat>> = dirs
        .iter()
        .map(|d| d.iter().map(|&x| rat(x)).collect())
        .collect();
    let mut elements: BTreeMap<Vec<Vec<Rat>>, (usize, BTreeSet<usize>)> = BTreeMap::new();
    let bottom: Vec<Vec<Rat>> = Vec::new();
    elements.insert(bottom.clone(), (0, incident_set(&bottom, &dir_rows)));
    let mut queue = VecDeque::new();
    queue.push_back(bottom);
    while let Some(key) = queue.pop_front() {
        let (rank, incident) = elements[&key].clone();
        for i in 0..dir_rows.len() {
            if incident.contains(&i) {
                continue;
            }
            let mut rows = key.clone();
            rows.push(dir_rows[i].clone());
            let (next_key, next_rank) = canonical_rowspace(&rows);
            debug_assert_eq!(next_rank, rank + 1);
            if !elements.contains_key(&next_key) {
                let inc = incident_set(&next_key, &dir_rows);
                elements.insert(next_key.clone(), (next_rank, inc));
                queue.push_back(next_key);
            }
        }
    }
    // Möbius values by the defining recursion, in rank order; y ≤ x in the
    // intersection lattice iff the hyperplane set of y is contained in that
    // of x (flats are determined by their incident hyperplanes).
    let mut flats: Vec<(Vec<Vec<Rat>>, usize, BTreeSet<usize>)> = elements
        .into_iter()
        .map(|(k, (r, inc))| (k, r, inc))
        .collect();
    flats.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| a.2.cmp(&b.2)));
    let mut mu: Vec<i64> = Vec::with_capacity(flats.len());
    for x in 0..flats.len() {
        if flats[x].1 == 0 {
            mu.push(1);
            continue;
        }
        let mut below = 0i64;
        for y in 0..x {
            if flats[y].1 < flats[x].1 && flats[y].2.is_subset(&flats[x].2) {
                below += mu[y];
            }
        }
        mu.push(-below);
    }
    IntersectionPoset {
        dim,
        hyperplanes: dirs.to_vec(),
        elements: flats
            .into_iter()
            .zip(mu)
            .map(|((normals, rank, incident), mu)| PosetElement {
                normals,
                rank,
                incident: incident.into_iter().collect(),
                mu,
            })
            .collect(),
    }
}

/// Hyperplanes whose normal lies in the row space spanned by `rows`.
fn incident_set(rows: &[Vec<Rat>], dir_rows: &[Vec<Rat>]) -> BTreeSet<usize> {
    let (_, base_rank) = canonical_rowspace(rows);
    (0..dir_rows.len())
        .filter(|&i| {
            let mut stacked = rows.to_vec();
            stacked.push(dir_rows[i].clone());
            canonical_rowspace(&stacked).1 == base_rank
        })
        .collect()
}

/// Reduced row-echelon basis (zero rows dropped) and its rank.
fn canonical_rowspace(rows: &[Vec<Rat>]) -> (Vec<Vec<Rat>>, usize) {
    if rows.is_empty() {
        return (Vec::new(), 0);
    }
    let m = Mat::from_rows(rows.to_vec()).expect("normal vectors share the dimension");
    let (r, pivots) = m.rref();
    let rank = pivots.len();
    (r.a.into_iter().take(rank).collect(), rank)
}

/// The support of the Alexander norm ball's dual: the vertex list of the
/// Newton polytope, from which the norm is evaluated as a support-function
/// width.
#[derive(Clone, Debug)]
pub struct NormBall {
    n: usize,
    support: Vec<Vec<i64>>,
}

impl NormBall {
    pub fn new<F: Field>(delta: &FactoredLaurent<F>) -> Result<Self> {
        let z = z_matrix(delta)?;
        Ok(NormBall {
            n: z.n,
            support: zonotope_vertices(&z),
        })
    }

    /// Vertices of the Newton polytope.
    pub fn support(&self) -> &[Vec<i64>] {
        &self.support
    }

    /// ‖ξ‖ = max over vertex pairs of ξ·(gᵢ − gⱼ).
    pub fn norm(&self, xi: &[Rat]) -> Result<Rat> {
        if xi.len() != self.n {
            return Err(Error::VarMismatch(xi.len(), self.n));
        }
        let dots: Vec<Rat> = self
            .support
            .iter()
            .map(|v| {
                v.iter()
                    .zip(xi)
                    .map(|(&a, b)| rat(a) * b.clone())
                    .fold(Rat::zero(), |acc, x| acc + x)
            })
            .collect();
        let max = dots.iter().max().expect("the polytope has a vertex").clone();
        let min = dots.iter().min().expect("the polytope has a vertex").clone();
        Ok(max - min)
    }
}

/// The Alexander norm of the cohomology class `ξ` for a nonzero Alexander
/// polynomial.
pub fn alexander_norm<F: Field>(delta: &FactoredLaurent<F>, xi: &[Rat]) -> Result<Rat> {
    NormBall::new(delta)?.norm(xi)
}

/// Whether the twisted Alexander ball of a k-dimensional representation is
/// equivalent to the untwisted one: the twisted Newton polytope must be the
/// zonotope of k·Z, compared up to column order and sign.
pub fn twisted_ball_equivalent<F: Field, G: Field>(
    delta: &FactoredLaurent<F>,
    delta_phi: &FactoredLaurent<G>,
    k: usize,
) -> Result<bool> {
    let z = z_matrix(delta)?;
    let z_phi = z_matrix(delta_phi)?;
    if z.n != z_phi.n {
        return Err(Error::VarMismatch(z.n, z_phi.n));
    }
    Ok(z_phi.canonical_columns() == z.scaled(k as i64).canonical_columns())
}

/// One top-dimensional face of the Alexander ball: a zonotope vertex and
/// the sign vector of its normal cone (one sign per secondary hyperplane).
#[derive(Clone, Debug)]
pub struct BnsFace {
    pub vertex: Vec<i64>,
    pub cone_signs: Vec<i8>,
}

/// The BNS component count with its supporting data.
#[derive(Clone, Debug)]
pub struct BnsReport {
    /// Number of connected components of the BNS invariant = P(S,1).
    pub component_count: u64,
    pub z: ZMatrix,
    /// Poincaré polynomial of the secondary arrangement, index = degree.
    pub poincare: Vec<i64>,
    /// Vertex–normal-cone pairs, one per component.
    pub faces: Vec<BnsFace>,
    /// For small arrangements: verification that every vertex coefficient
    /// of the expanded polynomial is ±1; `None` when skipped.
    pub pm_one_vertices: Option<bool>,
}

/// Chamber count of the secondary arrangement of Δ(G) together with the
/// face report.  Requires an essential arrangement (not a pencil).
pub fn bns_component_count(arr: &Arrangement) -> Result<BnsReport> {
    if arr.arrangement_class().class == ArrClass::Pencil {
        return Err(Error::InvalidArrangement(
            "the BNS report needs an essential arrangement; a pencil has zero Alexander polynomial"
                .into(),
        ));
    }
    let delta = alexander_polynomial(arr)?.delta;
    let z = z_matrix(&delta)?;
    let (_, poincare, component_count) = chambers_and_char_poly(&z);
    let dirs = distinct_directions(&z);
    let orient = column_orientations(&z, &dirs);
    let mut faces: Vec<BnsFace> = enumerate_chambers(z.n, &dirs)
        .into_iter()
        .map(|signs| {
            let mut v = vec![0i64; z.n];
            for (col, &(dir, eps)) in z.cols.iter().zip(orient.iter()) {
                if eps != 0 && signs[dir] * eps > 0 {
                    for (vi, ci) in v.iter_mut().zip(col.iter()) {
                        *vi += ci;
                    }
                }
            }
            BnsFace {
                vertex: v,
                cone_signs: signs,
            }
        })
        .collect();
    faces.sort_by(|a, b| a.vertex.cmp(&b.vertex));
    let pm_one_vertices = if arr.num_lines() <= 6 {
        Some(pm_one_vertex_check(&delta)?)
    } else {
        None
    };
    Ok(BnsReport {
        component_count,
        z,
        poincare,
        faces,
        pm_one_vertices,
    })
}

/// Debug check behind the BNS face report: expand the factored polynomial
/// (ignoring its unit) and verify that the coefficient at every vertex of
/// its Newton polytope is ±1.
pub fn pm_one_vertex_check<F: Field>(delta: &FactoredLaurent<F>) -> Result<bool> {
    if delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = delta.nvars();
    let mut product = LaurentPoly::one(n);
    for (factor, mult) in delta.factors() {
        product = product.mul(&factor.pow(*mult));
    }
    let coeffs: BTreeMap<&Vec<i64>, &F> = product.terms().collect();
    let z = z_matrix(delta)?;
    let minus_one = -F::one();
    Ok(zonotope_vertices(&z).iter().all(|v| match coeffs.get(v) {
        Some(&c) => *c == F::one() || *c == minus_one,
        None => false,
    }))
}

/// Independent brute-force zonotope vertex enumeration for cross-validation:
/// form all subset sums of the columns and keep the points that a linear
/// functional strictly separates from the rest.  Exponential in the column
/// count, so capped.
pub fn subset_sum_hull_vertices(z: &ZMatrix) -> Result<Vec<Vec<i64>>> {
    let j = z.cols.len();
    if j > 12 {
        return Err(Error::CapExceeded(format!(
            "brute-force hull enumeration over {j} columns (limit 12)"
        )));
    }
    let mut sums: BTreeSet<Vec<i64>> = BTreeSet::new();
    for mask in 0u32..(1 << j) {
        let mut v = vec![0i64; z.n];
        for (i, col) in z.cols.iter().enumerate() {
            if mask & (1 << i) != 0 {
                for (vi, ci) in v.iter_mut().zip(col.iter()) {
                    *vi += ci;
                }
            }
        }
        sums.insert(v);
    }
    let points: Vec<Vec<i64>> = sums.into_iter().collect();
    let vertices = points
        .iter()
        .filter(|p| {
            let rows: Vec<(Vec<Rat>, Rel, Rat)> = points
                .iter()
                .filter(|q| q != p)
                .map(|q| {
                    let coeffs = p.iter().zip(q.iter()).map(|(&a, &b)| rat(a - b)).collect();
                    (coeffs, Rel::Ge, Rat::one())
                })
                .collect();
            feasible(z.n, &rows, false)
        })
        .cloned()
        .collect();
    Ok(vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alexander::twisted_alexander;
    use crate::corpus;
    use crate::matrix::Mat;
    use crate::presentation::Representation;
    use crate::scalar::ratio;

    fn falk_z1() -> ZMatrix {
        ZMatrix {
            n: 5,
            cols: vec![
                vec![2, 0, 0, 0, 0],
                vec![0, 2, 0, 0, 0],
                vec![0, 0, 2, 0, 0],
                vec![0, 0, 0, 2, 0],
                vec![0, 0, 0, 0, 2],
                vec![2, 2, 2, 2, 2],
                vec![0, 0, 2, 2, 2],
            ],
        }
    }

    fn falk_z2() -> ZMatrix {
        ZMatrix {
            n: 5,
            cols: vec![
                vec![2, 0, 0, 0, 0],
                vec![0, 2, 0, 0, 0],
                vec![0, 0, 2, 0, 0],
                vec![0, 0, 0, 2, 0],
                vec![0, 0, 0, 0, 3],
                vec![1, 1, 1, 1, 1],
                vec![0, 0, 1, 1, 1],
                vec![1, 1, 0, 0, 1],
            ],
        }
    }

    #[test]
    fn z_matrix_of_single_variable_factor_is_one_column() {
        let mut delta = FactoredLaurent::<Rat>::one(3);
        let t1_minus_1 = LaurentPoly::var(3, 0).sub(&LaurentPoly::one(3));
        delta.push_factor(&t1_minus_1, 1);
        let z = z_matrix(&delta).unwrap();
        assert_eq!(z.cols, vec![vec![1, 0, 0]]);
    }

    #[test]
    fn z_matrix_of_zero_polynomial_is_rejected() {
        let delta = FactoredLaurent::<Rat>::zero(2);
        assert!(matches!(z_matrix(&delta), Err(Error::ZeroPolynomial)));
    }

    #[test]
    fn z_matrices_of_both_example_arrangements_match_the_known_ones() {
        let d1 = alexander_polynomial(&corpus::falk_one()).unwrap().delta;
        let z1 = z_matrix(&d1).unwrap();
        assert_eq!(z1.canonical_columns(), falk_z1().canonical_columns());

        let d2 = alexander_polynomial(&corpus::falk_two()).unwrap().delta;
        let z2 = z_matrix(&d2).unwrap();
        assert_eq!(z2.canonical_columns(), falk_z2().canonical_columns());
    }

    #[test]
    fn chamber_counts_of_the_two_secondary_arrangements() {
        let (poset1, p1, c1) = chambers_and_char_poly(&falk_z1());
        assert_eq!(p1, vec![1, 7, 21, 33, 27, 9]);
        assert_eq!(c1, 98);
        assert_eq!(poset1.elements[0].mu, 1);

        let (_, p2, c2) = chambers_and_char_poly(&falk_z2());
        assert_eq!(p2, vec![1, 8, 28, 51, 47, 17]);
        assert_eq!(c2, 152);
    }

    #[test]
    fn boolean_arrangement_has_binomial_poincare_polynomial() {
        for n in 1..=4 {
            let z = ZMatrix {
                n,
                cols: (0..n)
                    .map(|i| (0..n).map(|j| if i == j { 1 } else { 0 }).collect())
                    .collect(),
            };
            let (_, p, count) = chambers_and_char_poly(&z);
            let binomial: Vec<i64> = (0..=n as u32)
                .map(|k| num::integer::binomial(n as i64, k as i64))
                .collect();
            assert_eq!(p, binomial);
            assert_eq!(count, 1 << n);
            assert_eq!(zonotope_vertices(&z).len(), 1 << n);
        }
    }

    #[test]
    fn mobius_recursion_holds_on_the_poset() {
        for z in [falk_z1(), falk_z2()] {
            let (poset, p, _) = chambers_and_char_poly(&z);
            // Σ_{y ≤ x} μ(y) = 0 for every x above the bottom.
            for (xi, x) in poset.elements.iter().enumerate() {
                if x.rank == 0 {
                    assert_eq!(x.mu, 1);
                    continue;
                }
                let x_set: BTreeSet<usize> = x.incident.iter().copied().collect();
                let total: i64 = poset
                    .elements
                    .iter()
                    .enumerate()
                    .filter(|(yi, y)| {
                        *yi == xi || {
                            let y_set: BTreeSet<usize> = y.incident.iter().copied().collect();
                            y.rank < x.rank && y_set.is_subset(&x_set)
                        }
                    })
                    .map(|(_, y)| y.mu)
                    .sum();
                assert_eq!(total, 0);
            }
            assert!(p.iter().all(|&c| c >= 0));
            assert_eq!(p[0], 1);
            assert_eq!(p.len() - 1, z.rank());
        }
    }

    #[test]
    fn zonotope_vertex_counts_match_chamber_counts_on_the_examples() {
        for (z, expect) in [(falk_z1(), 98usize), (falk_z2(), 152usize)] {
            let verts = zonotope_vertices(&z);
            assert_eq!(verts.len(), expect);
            let (_, _, count) = chambers_and_char_poly(&z);
            assert_eq!(verts.len(), count as usize);
        }
    }

    #[test]
    fn single_column_zonotope_is_a_segment() {
        let z = ZMatrix {
            n: 4,
            cols: vec![vec![3, 0, -1, 2]],
        };
        let verts = zonotope_vertices(&z);
        assert_eq!(verts, vec![vec![0, 0, 0, 0], vec![3, 0, -1, 2]]);
    }

    #[test]
    fn parallel_generators_scale_without_subdividing() {
        // Two parallel and one antiparallel generator: still one direction,
        // so two chambers, and the vertices are the segment's endpoints.
        let z = ZMatrix {
            n: 2,
            cols: vec![vec![1, 1], vec![2, 2], vec![-3, -3]],
        };
        let (_, p, count) = chambers_and_char_poly(&z);
        assert_eq!(p, vec![1, 1]);
        assert_eq!(count, 2);
        let verts = zonotope_vertices(&z);
        assert_eq!(verts, vec![vec![-3, -3], vec![3, 3]]);
    }

    #[test]
    fn random_matrices_agree_with_the_brute_force_hull() {
        use rand::Rng;
        let mut rng = crate::scalar::seeded_rng(420);
        for trial in 0..20 {
            let n = rng.gen_range(1..=4);
            let j = rng.gen_range(1..=6);
            let cols: Vec<Vec<i64>> = (0..j)
                .map(|_| loop {
                    let c: Vec<i64> = (0..n).map(|_| rng.gen_range(-3i64..=3)).collect();
                    if c.iter().any(|&x| x != 0) {
                        break c;
                    }
                })
                .collect();
            let z = ZMatrix { n, cols };
            let fast = zonotope_vertices(&z);
            let brute = subset_sum_hull_vertices(&z).unwrap();
            assert_eq!(fast, brute, "trial {trial}: Z = {:?}", z);
            let (_, _, count) = chambers_and_char_poly(&z);
            assert_eq!(fast.len(), count as usize, "trial {trial}");
        }
    }

    #[test]
    fn minkowski_sum_of_newton_polytopes_under_multiplication() {
        // N(p·q) = N(p) + N(q): check the zonotope of a two-factor product
        // against the brute-force hull of the expanded product's support.
        let t = |i: usize| LaurentPoly::<Rat>::var(3, i);
        let one = LaurentPoly::<Rat>::one(3);
        let mut delta = FactoredLaurent::one(3);
        delta.push_factor(&t(0).sub(&one), 1);
        delta.push_factor(&t(1).sub(&one), 2);
        delta.push_factor(&t(0).mul(&t(1)).mul(&t(2)).sub(&one), 1);
        let z = z_matrix(&delta).unwrap();
        let zonotope = zonotope_vertices(&z);

        let expanded = delta.expand();
        let support = ZMatrix {
            n: 3,
            cols: Vec::new(),
        };
        // Hull of the expanded support via the same separation test.
        let points: Vec<Vec<i64>> = expanded.terms().map(|(e, _)| e.clone()).collect();
        let hull: Vec<Vec<i64>> = points
            .iter()
            .filter(|p| {
                let rows: Vec<(Vec<Rat>, Rel, Rat)> = points
                    .iter()
                    .filter(|q| q != p)
                    .map(|q| {
                        let coeffs =
                            p.iter().zip(q.iter()).map(|(&a, &b)| rat(a - b)).collect();
                        (coeffs, Rel::Ge, Rat::one())
                    })
                    .collect();
                feasible(3, &rows, false)
            })
            .cloned()
            .collect();
        // The expanded polynomial carries the canonical unit's monomial
        // shift; realign both vertex sets at their minimum.
        let shift = |vs: &[Vec<i64>]| -> BTreeSet<Vec<i64>> {
            let m: Vec<i64> = (0..3)
                .map(|k| vs.iter().map(|v| v[k]).min().unwrap())
                .collect();
            vs.iter()
                .map(|v| v.iter().zip(&m).map(|(a, b)| a - b).collect())
                .collect()
        };
        assert_eq!(shift(&zonotope), shift(&hull));
        drop(support);
    }

    #[test]
    fn alexander_norm_of_the_near_pencil() {
        let delta = alexander_polynomial(&corpus::near_pencil(4)).unwrap().delta;
        let xi = vec![Rat::one(), Rat::zero(), Rat::zero()];
        assert_eq!(alexander_norm(&delta, &xi).unwrap(), rat(2));
        let zero = vec![Rat::zero(); 3];
        assert_eq!(alexander_norm(&delta, &zero).unwrap(), rat(0));
        let neg: Vec<Rat> = xi.iter().map(|x| -x.clone()).collect();
        assert_eq!(
            alexander_norm(&delta, &xi).unwrap(),
            alexander_norm(&delta, &neg).unwrap()
        );
    }

    #[test]
    fn norm_is_subadditive_and_homogeneous_on_samples() {
        let delta = alexander_polynomial(&corpus::falk_one()).unwrap().delta;
        let ball = NormBall::new(&delta).unwrap();
        let mut rng = crate::scalar::seeded_rng(7);
        use rand::Rng;
        for _ in 0..25 {
            let xi: Vec<Rat> = (0..5).map(|_| rat(rng.gen_range(-5i64..=5))).collect();
            let eta: Vec<Rat> = (0..5).map(|_| rat(rng.gen_range(-5i64..=5))).collect();
            let sum: Vec<Rat> = xi.iter().zip(&eta).map(|(a, b)| a.clone() + b.clone()).collect();
            let nx = ball.norm(&xi).unwrap();
            let ne = ball.norm(&eta).unwrap();
            let ns = ball.norm(&sum).unwrap();
            assert!(ns <= nx.clone() + ne.clone());
            assert!(nx >= Rat::zero());
            let scaled: Vec<Rat> = xi.iter().map(|x| x.clone() * ratio(3, 2)).collect();
            assert_eq!(ball.norm(&scaled).unwrap(), nx * ratio(3, 2));
        }
    }

    #[test]
    fn norm_from_vertices_equals_norm_from_expanded_support() {
        for arr in [corpus::near_pencil(5), corpus::falk_two()] {
            let delta = alexander_polynomial(&arr).unwrap().delta;
            let ball = NormBall::new(&delta).unwrap();
            let mut product = LaurentPoly::<Rat>::one(delta.nvars());
            for (f, m) in delta.factors() {
                product = product.mul(&f.pow(*m));
            }
            let support: Vec<&Vec<i64>> = product.terms().map(|(e, _)| e).collect();
            let mut rng = crate::scalar::seeded_rng(11);
            use rand::Rng;
            for _ in 0..10 {
                let xi: Vec<Rat> = (0..delta.nvars())
                    .map(|_| rat(rng.gen_range(-4i64..=4)))
                    .collect();
                let dots: Vec<Rat> = support
                    .iter()
                    .map(|e| {
                        e.iter()
                            .zip(&xi)
                            .map(|(&a, b)| rat(a) * b.clone())
                            .fold(Rat::zero(), |acc, x| acc + x)
                    })
                    .collect();
                let brute = dots.iter().max().unwrap().clone() - dots.iter().min().unwrap().clone();
                assert_eq!(ball.norm(&xi).unwrap(), brute);
            }
        }
    }

    #[test]
    fn twisted_ball_equivalence_for_identity_representations() {
        let arr = corpus::near_pencil(4);
        let delta = alexander_polynomial(&arr).unwrap().delta;
        for k in 1..=3usize {
            let rep = Representation::<Rat>::identity(k);
            let twisted = twisted_alexander(&arr, &rep).unwrap();
            assert!(twisted_ball_equivalent(&delta, &twisted, k).unwrap());
        }
    }

    #[test]
    fn twisted_ball_equivalence_for_the_diagonal_representation() {
        let arr = corpus::near_pencil(4);
        let delta = alexander_polynomial(&arr).unwrap().delta;
        let diag = Mat::from_rows(vec![
            vec![rat(2), rat(0)],
            vec![rat(0), ratio(1, 2)],
        ])
        .unwrap();
        let mut rep = Representation::<Rat>::identity(2);
        for j in 1..=3 {
            rep.set(crate::presentation::Gen::X(j), diag.clone()).unwrap();
        }
        let twisted = twisted_alexander(&arr, &rep).unwrap();
        assert!(twisted_ball_equivalent(&delta, &twisted, 2).unwrap());
        assert_eq!(
            z_matrix(&twisted).unwrap().canonical_columns(),
            z_matrix(&delta).unwrap().scaled(2).canonical_columns()
        );
    }

    #[test]
    fn bns_component_counts_for_the_example_arrangements() {
        let r1 = bns_component_count(&corpus::falk_one()).unwrap();
        assert_eq!(r1.component_count, 98);
        assert_eq!(r1.faces.len(), 98);
        assert_eq!(r1.pm_one_vertices, Some(true));

        let r2 = bns_component_count(&corpus::falk_two()).unwrap();
        assert_eq!(r2.component_count, 152);
        assert_eq!(r2.poincare, vec![1, 8, 28, 51, 47, 17]);
        assert_eq!(r2.pm_one_vertices, Some(true));
    }

    #[test]
    fn bns_of_a_single_factor_polynomial_has_two_components() {
        // Δ = (t₁t₂t₃ − 1)^d: one segment, two vertices, two components.
        let r = bns_component_count(&corpus::near_pencil(4)).unwrap();
        assert_eq!(r.component_count, 2);
        assert_eq!(r.faces.len(), 2);
    }

    #[test]
    fn bns_rejects_pencils() {
        assert!(matches!(
            bns_component_count(&corpus::pencil(4)),
            Err(Error::InvalidArrangement(_))
        ));
    }

    #[test]
    fn brute_force_cap_is_enforced() {
        let z = ZMatrix {
            n: 2,
            cols: (0..13).map(|i| vec![1, i]).collect(),
        };
        assert!(matches!(
            subset_sum_hull_vertices(&z),
            Err(Error::CapExceeded(_))
        ));
    }
}
