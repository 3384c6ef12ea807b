//! Line arrangements in the complex projective plane, with exact rational
//! coordinates or purely combinatorial incidence data.
//!
//! An arrangement `A = {ℓ₀, ℓ₁, …, ℓ_n}` consists of `n+1 ≥ 2` distinct
//! lines; `ℓ₀` is the designated line at infinity for the decone
//! `dA = A ∖ {ℓ₀}` in the affine chart `C² = CP² ∖ ℓ₀`.  All geometry is
//! exact: lines are rational coefficient triples up to scale, intersection
//! points are computed by cross products, and incidence is decided by exact
//! projective equality.
//!
//! The line ordering is normalized so that each parallel family of the
//! decone — lines meeting `ℓ₀` at a common point of multiplicity ≥ 3 — is
//! indexed consecutively, with lines transverse to `ℓ₀` last.  The applied
//! permutation is recorded so callers can map results back to input order.
//!
//! Combinatorial invariants derived here:
//! * `nbc2`: the pairs `(i,k)`, `i < k`, such that `ℓ_i ∩ ℓ_k` is an honest
//!   point of the decone and no line with smaller index passes through it
//!   (the degree-two no-broken-circuit sets of `dA`); their number equals
//!   `b₂` of the decone complement, computed independently from the Möbius
//!   function of the affine intersection poset.
//! * `dense_edges`: the lines together with all points of multiplicity ≥ 3.
//! * `arrangement_class`: pencil / near-pencil / general, with the
//!   asphericity verdict for the boundary manifold.

use std::collections::{BTreeMap, BTreeSet};

use serde_json::Value;

use crate::error::{Error, Result};
use crate::scalar::{parse_rat, Rat};

/// An intersection point of the arrangement: the sorted set of incident
/// line indexes, with projective coordinates when available (geometric
/// mode).  Coordinates are canonicalized so the first nonzero entry is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionPoint {
    pub lines: Vec<usize>,
    pub coords: Option<Vec<Rat>>,
}

impl IntersectionPoint {
    pub fn multiplicity(&self) -> usize {
        self.lines.len()
    }

    pub fn on_line(&self, i: usize) -> bool {
        self.lines.binary_search(&i).is_ok()
    }
}

/// Coarse classification of the arrangement.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrClass {
    /// All lines through one point.
    Pencil,
    /// All but one line through one point.
    NearPencil,
    /// Essential and not a near-pencil.
    General,
}

impl ArrClass {
    pub fn name(&self) -> &'static str {
        match self {
            ArrClass::Pencil => "pencil",
            ArrClass::NearPencil => "near-pencil",
            ArrClass::General => "general",
        }
    }
}

/// Classification report: the class plus the asphericity verdict for the
/// boundary manifold (aspherical exactly when the arrangement is not a
/// pencil).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClassReport {
    pub class: ArrClass,
    pub aspherical: bool,
}

/// The sizes reported for the set of dense edges: all lines plus the `r`
/// points of multiplicity ≥ 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DenseEdges {
    /// Number of multiplicity ≥ 3 points.
    pub r: usize,
    /// Total `|D(A)| = (n+1) + r`.
    pub size: usize,
}

/// A validated, normalized line arrangement.
#[derive(Clone, Debug)]
pub struct Arrangement {
    /// Number of decone lines; the arrangement has `n + 1` lines `ℓ₀..ℓ_n`.
    n: usize,
    /// Canonicalized coefficient triples (index 0 = line at infinity), or
    /// `None` for combinatorial input.
    lines: Option<Vec<Vec<Rat>>>,
    /// All intersection points, deduplicated, sorted by incident line set.
    points: Vec<IntersectionPoint>,
    /// `permutation[new_index] = input_index` for mapping results back.
    permutation: Vec<usize>,
}

fn canonicalize_triple(c: &[Rat]) -> Result<Vec<Rat>> {
    if c.len() != 3 {
        return Err(Error::Parse(format!(
            "line must have 3 coefficients, got {}",
            c.len()
        )));
    }
    let lead = c.iter().find(|x| !num_traits::Zero::is_zero(*x));
    let Some(lead) = lead else {
        return Err(Error::Parse("zero coefficient triple".into()));
    };
    Ok(c.iter().map(|x| x / lead).collect())
}

fn cross(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

impl Arrangement {
    /// Parse the JSON input document.  Accepted forms:
    /// `{"lines": [["1","0","0"], …], "infinity_index": 0}` with rational
    /// coefficients as `"p/q"` strings (or integers), and
    /// `{"combinatorial": {"n_lines": 6, "multiple_points": [[0,1,2], …]},
    /// "infinity_index": 0}`.  `infinity_index` defaults to 0.
    pub fn parse(input: &str) -> Result<Arrangement> {
        let v: Value = serde_json::from_str(input)
            .map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse("top-level JSON object expected".into()))?;
        let infinity = match obj.get("infinity_index") {
            None => 0usize,
            Some(x) => x
                .as_u64()
                .ok_or_else(|| Error::Parse("infinity_index must be a nonnegative integer".into()))?
                as usize,
        };
        if let Some(lines) = obj.get("lines") {
            let arr = lines
                .as_array()
                .ok_or_else(|| Error::Parse("\"lines\" must be an array".into()))?;
            let mut parsed: Vec<Vec<Rat>> = Vec::with_capacity(arr.len());
            for line in arr {
                let triple = line
                    .as_array()
                    .ok_or_else(|| Error::Parse("each line must be an array of 3 rationals".into()))?;
                let mut coeffs = Vec::with_capacity(3);
                for c in triple {
                    let r = match c {
                        Value::String(s) => parse_rat(s)?,
                        Value::Number(n) => {
                            parse_rat(&n.to_string())?
                        }
                        _ => {
                            return Err(Error::Parse(
                                "line coefficients must be rational strings or integers".into(),
                            ))
                        }
                    };
                    coeffs.push(r);
                }
                parsed.push(coeffs);
            }
            return Arrangement::from_lines(parsed, infinity);
        }
        if let Some(comb) = obj.get("combinatorial") {
            let c = comb
                .as_object()
                .ok_or_else(|| Error::Parse("\"combinatorial\" must be an object".into()))?;
            let n_lines = c
                .get("n_lines")
                .and_then(|x| x.as_u64())
                .ok_or_else(|| Error::Parse("combinatorial.n_lines missing".into()))?
                as usize;
            let mp = match c.get("multiple_points") {
                None => Vec::new(),
                Some(x) => {
                    let arr = x
                        .as_array()
                        .ok_or_else(|| Error::Parse("multiple_points must be an array".into()))?;
                    let mut out = Vec::new();
                    for p in arr {
                        let idxs = p
                            .as_array()
                            .ok_or_else(|| Error::Parse("each multiple point must be an index array".into()))?
                            .iter()
                            .map(|i| {
                                i.as_u64().map(|x| x as usize).ok_or_else(|| {
                                    Error::Parse("line indexes must be nonnegative integers".into())
                                })
                            })
                            .collect::<Result<Vec<usize>>>()?;
                        out.push(idxs);
                    }
                    out
                }
            };
            return Arrangement::from_combinatorial(n_lines, mp, infinity);
        }
        Err(Error::Parse(
            "expected either \"lines\" or \"combinatorial\" in input".into(),
        ))
    }

    /// Build from exact coefficient triples; `infinity` selects `ℓ₀`.
    pub fn from_lines(lines: Vec<Vec<Rat>>, infinity: usize) -> Result<Arrangement> {
        if lines.len() < 2 {
            return Err(Error::Parse(format!(
                "an arrangement needs at least 2 lines, got {}",
                lines.len()
            )));
        }
        if infinity >= lines.len() {
            return Err(Error::Parse(format!(
                "infinity_index {} out of range for {} lines",
                infinity,
                lines.len()
            )));
        }
        let canon: Vec<Vec<Rat>> = lines
            .iter()
            .map(|c| canonicalize_triple(c))
            .collect::<Result<_>>()?;
        let mut seen: BTreeMap<Vec<Rat>, usize> = BTreeMap::new();
        for (i, c) in canon.iter().enumerate() {
            if let Some(&j) = seen.get(c) {
                return Err(Error::Parse(format!(
                    "duplicate lines at input indexes {j} and {i}"
                )));
            }
            seen.insert(c.clone(), i);
        }
        // Put the infinity line first, keeping the rest in input order.
        let mut order: Vec<usize> = vec![infinity];
        order.extend((0..canon.len()).filter(|&i| i != infinity));
        let arranged: Vec<Vec<Rat>> = order.iter().map(|&i| canon[i].clone()).collect();
        let pre = Arrangement {
            n: arranged.len() - 1,
            points: compute_points(&arranged),
            lines: Some(arranged),
            permutation: order,
        };
        Ok(pre.normalize_ordering().0)
    }

    /// Build from incidence data alone.  `multiple_points` lists the sets of
    /// concurrent lines of size ≥ 3; all remaining pairs meet transversely.
    /// Realizability is not checked.
    pub fn from_combinatorial(
        n_lines: usize,
        multiple_points: Vec<Vec<usize>>,
        infinity: usize,
    ) -> Result<Arrangement> {
        if n_lines < 2 {
            return Err(Error::Parse(format!(
                "an arrangement needs at least 2 lines, got {n_lines}"
            )));
        }
        if infinity >= n_lines {
            return Err(Error::Parse(format!(
                "infinity_index {infinity} out of range for {n_lines} lines"
            )));
        }
        let mut cleaned: Vec<Vec<usize>> = Vec::new();
        for p in &multiple_points {
            let set: BTreeSet<usize> = p.iter().copied().collect();
            if set.len() != p.len() {
                return Err(Error::Parse(format!(
                    "multiple point {p:?} repeats a line index"
                )));
            }
            if set.len() < 3 {
                return Err(Error::Parse(format!(
                    "multiple point {p:?} must list at least 3 lines"
                )));
            }
            if let Some(&bad) = set.iter().find(|&&i| i >= n_lines) {
                return Err(Error::Parse(format!(
                    "multiple point {p:?} references line {bad} out of range"
                )));
            }
            cleaned.push(set.into_iter().collect());
        }
        for a in 0..cleaned.len() {
            for b in a + 1..cleaned.len() {
                let sa: BTreeSet<_> = cleaned[a].iter().collect();
                let common = cleaned[b].iter().filter(|i| sa.contains(i)).count();
                if common >= 2 {
                    return Err(Error::Parse(format!(
                        "multiple points {:?} and {:?} share two lines",
                        cleaned[a], cleaned[b]
                    )));
                }
            }
        }
        // Relabel so the infinity line is index 0.
        let mut order: Vec<usize> = vec![infinity];
        order.extend((0..n_lines).filter(|&i| i != infinity));
        let mut old_to_new = vec![0usize; n_lines];
        for (new, &old) in order.iter().enumerate() {
            old_to_new[old] = new;
        }
        let relabeled: Vec<Vec<usize>> = cleaned
            .iter()
            .map(|p| {
                let mut q: Vec<usize> = p.iter().map(|&i| old_to_new[i]).collect();
                q.sort_unstable();
                q
            })
            .collect();
        let pre = Arrangement {
            n: n_lines - 1,
            points: points_from_multiples(n_lines, &relabeled),
            lines: None,
            permutation: order,
        };
        Ok(pre.normalize_ordering().0)
    }

    /// Number of decone lines (the arrangement has `n + 1` lines).
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_lines(&self) -> usize {
        self.n + 1
    }

    /// Canonical coefficient triples, absent in combinatorial mode.
    pub fn lines(&self) -> Option<&[Vec<Rat>]> {
        self.lines.as_deref()
    }

    /// `permutation[current_index] = input_index`.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// All intersection points, each line pair covered exactly once.
    pub fn intersection_data(&self) -> &[IntersectionPoint] {
        &self.points
    }

    /// Points of multiplicity ≥ 3, sorted lexicographically by line set.
    pub fn multiple_points(&self) -> impl Iterator<Item = &IntersectionPoint> {
        self.points.iter().filter(|p| p.multiplicity() >= 3)
    }

    /// Transverse pairs `(i, j)`, `i < j`, meeting at a double point.
    pub fn doubles(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.points
            .iter()
            .filter(|p| p.multiplicity() == 2)
            .map(|p| (p.lines[0], p.lines[1]))
    }

    /// The point where `ℓ_i` and `ℓ_j` meet.
    pub fn point_through(&self, i: usize, j: usize) -> &IntersectionPoint {
        self.points
            .iter()
            .find(|p| p.on_line(i) && p.on_line(j))
            .expect("every line pair meets at exactly one point")
    }

    /// Lines plus multiplicity ≥ 3 points.
    pub fn dense_edges(&self) -> DenseEdges {
        let r = self.multiple_points().count();
        DenseEdges {
            r,
            size: self.num_lines() + r,
        }
    }

    /// Number of multiplicity ≥ 3 points on `ℓ_i`.
    pub fn high_points_on_line(&self, i: usize) -> usize {
        self.multiple_points().filter(|p| p.on_line(i)).count()
    }

    /// Pencil / near-pencil / general classification with asphericity.
    pub fn arrangement_class(&self) -> ClassReport {
        let total = self.num_lines();
        let max_mult = self
            .points
            .iter()
            .map(|p| p.multiplicity())
            .max()
            .unwrap_or(0);
        let class = if max_mult == total {
            ArrClass::Pencil
        } else if max_mult == total - 1 {
            ArrClass::NearPencil
        } else {
            ArrClass::General
        };
        ClassReport {
            class,
            aspherical: class != ArrClass::Pencil,
        }
    }

    /// Reorder decone lines so parallel families (blocks of lines meeting
    /// `ℓ₀` at a common multiplicity ≥ 3 point) are consecutive and lines
    /// transverse to `ℓ₀` come last; ties broken by smallest current index.
    /// Returns the normalized arrangement and the applied permutation
    /// (`perm[new] = old` over all `n+1` indexes).  Idempotent.
    pub fn normalize_ordering(&self) -> (Arrangement, Vec<usize>) {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut in_block: BTreeSet<usize> = BTreeSet::new();
        for p in self.multiple_points() {
            if p.on_line(0) {
                let family: Vec<usize> = p.lines.iter().copied().filter(|&i| i != 0).collect();
                for &i in &family {
                    in_block.insert(i);
                }
                blocks.push(family);
            }
        }
        blocks.sort_by_key(|b| b[0]);
        let mut order: Vec<usize> = vec![0];
        for b in &blocks {
            order.extend(b.iter().copied());
        }
        order.extend((1..=self.n).filter(|i| !in_block.contains(i)));
        let mut old_to_new = vec![0usize; self.n + 1];
        for (new, &old) in order.iter().enumerate() {
            old_to_new[old] = new;
        }
        let lines = self
            .lines
            .as_ref()
            .map(|ls| order.iter().map(|&i| ls[i].clone()).collect::<Vec<_>>());
        let points = {
            let mut pts: Vec<IntersectionPoint> = self
                .points
                .iter()
                .map(|p| {
                    let mut lines: Vec<usize> = p.lines.iter().map(|&i| old_to_new[i]).collect();
                    lines.sort_unstable();
                    IntersectionPoint {
                        lines,
                        coords: p.coords.clone(),
                    }
                })
                .collect();
            pts.sort_by(|a, b| a.lines.cmp(&b.lines));
            pts
        };
        let permutation: Vec<usize> = order.iter().map(|&i| self.permutation[i]).collect();
        (
            Arrangement {
                n: self.n,
                lines,
                points,
                permutation,
            },
            order,
        )
    }

    /// The partition `Π₀` of decone lines by their intersection with `ℓ₀`:
    /// multi-line blocks first (each a consecutive index range after
    /// normalization), then transverse singletons, in index order.
    pub fn pi0_blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut in_block: BTreeSet<usize> = BTreeSet::new();
        for p in self.multiple_points() {
            if p.on_line(0) {
                let family: Vec<usize> = p.lines.iter().copied().filter(|&i| i != 0).collect();
                for &i in &family {
                    in_block.insert(i);
                }
                blocks.push(family);
            }
        }
        blocks.sort_by_key(|b| b[0]);
        for i in 1..=self.n {
            if !in_block.contains(&i) {
                blocks.push(vec![i]);
            }
        }
        blocks
    }

    /// Degree-two no-broken-circuit pairs of the decone, sorted
    /// lexicographically: `(i,k)` with `i < k`, `ℓ_i ∩ ℓ_k` off `ℓ₀`, and no
    /// smaller-indexed line through the same point.
    pub fn nbc2(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for k in i + 1..=self.n {
                let p = self.point_through(i, k);
                if p.on_line(0) {
                    continue;
                }
                if p.lines.iter().any(|&j| j < i) {
                    continue;
                }
                out.push((i, k));
            }
        }
        out
    }

    /// For an nbc₂ pair `(i,k)`: all decone lines through `ℓ_i ∩ ℓ_k`.
    pub fn incident_set(&self, i: usize, k: usize) -> Vec<usize> {
        self.point_through(i, k)
            .lines
            .iter()
            .copied()
            .filter(|&j| j != 0)
            .collect()
    }

    /// Second Betti number of the decone complement via the Möbius function
    /// of the affine intersection poset: `b₂ = Σ_p |μ(p)|` over points of
    /// the decone (independent of the nbc₂ enumeration).
    pub fn b2_decone_moebius(&self) -> usize {
        let mu_hat = 1i64; // μ(0̂)
        let mut b2 = 0i64;
        for p in &self.points {
            if p.on_line(0) {
                continue; // a direction at infinity, not an affine point
            }
            // Lines of the decone through p each have μ = −1.
            let m = p.multiplicity() as i64;
            let mu_p = -(mu_hat + m * (-1));
            b2 += mu_p.abs();
        }
        b2 as usize
    }
}

/// All pairwise intersections of the given canonical lines, deduplicated by
/// exact projective equality.
fn compute_points(lines: &[Vec<Rat>]) -> Vec<IntersectionPoint> {
    let mut by_coords: BTreeMap<Vec<Rat>, BTreeSet<usize>> = BTreeMap::new();
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            let raw = cross(&lines[i], &lines[j]);
            let coords = canonicalize_triple(&raw)
                .expect("distinct projective lines always meet in a point");
            let entry = by_coords.entry(coords).or_default();
            entry.insert(i);
            entry.insert(j);
        }
    }
    let mut pts: Vec<IntersectionPoint> = by_coords
        .into_iter()
        .map(|(coords, lines)| IntersectionPoint {
            lines: lines.into_iter().collect(),
            coords: Some(coords),
        })
        .collect();
    pts.sort_by(|a, b| a.lines.cmp(&b.lines));
    pts
}

/// Points from declared multiplicity ≥ 3 sets plus implied transverse pairs.
fn points_from_multiples(n_lines: usize, multiples: &[Vec<usize>]) -> Vec<IntersectionPoint> {
    let mut covered: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut pts: Vec<IntersectionPoint> = Vec::new();
    for m in multiples {
        for a in 0..m.len() {
            for b in a + 1..m.len() {
                covered.insert((m[a], m[b]));
            }
        }
        pts.push(IntersectionPoint {
            lines: m.clone(),
            coords: None,
        });
    }
    for i in 0..n_lines {
        for j in i + 1..n_lines {
            if !covered.contains(&(i, j)) {
                pts.push(IntersectionPoint {
                    lines: vec![i, j],
                    coords: None,
                });
            }
        }
    }
    pts.sort_by(|a, b| a.lines.cmp(&b.lines));
    pts
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn lines_from_ints(ls: &[[i64; 3]]) -> Vec<Vec<Rat>> {
        ls.iter()
            .map(|c| c.iter().map(|&x| rat(x)).collect())
            .collect()
    }

    pub(crate) fn falk_one() -> Arrangement {
        // x₀ (x₁+x₀) (x₁−x₀) (x₁+x₂) x₂ (x₁−x₂)
        Arrangement::from_lines(
            lines_from_ints(&[
                [1, 0, 0],
                [1, 1, 0],
                [-1, 1, 0],
                [0, 1, 1],
                [0, 0, 1],
                [0, 1, -1],
            ]),
            0,
        )
        .unwrap()
    }

    pub(crate) fn falk_two() -> Arrangement {
        // x₀ (x₁+x₀) (x₁−x₀) (x₂+x₀) (x₂−x₀) (x₂+x₁−x₀)
        Arrangement::from_lines(
            lines_from_ints(&[
                [1, 0, 0],
                [1, 1, 0],
                [-1, 1, 0],
                [1, 0, 1],
                [-1, 0, 1],
                [-1, 1, 1],
            ]),
            0,
        )
        .unwrap()
    }

    #[test]
    fn falk_one_has_expected_triple_points() {
        let arr = falk_one();
        let mult: Vec<Vec<usize>> = arr.multiple_points().map(|p| p.lines.clone()).collect();
        assert_eq!(mult, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        // Already normalized: the block {1,2} is consecutive, 3..5 transverse.
        assert_eq!(arr.permutation(), &[0, 1, 2, 3, 4, 5]);
        let report = arr.arrangement_class();
        assert_eq!(report.class, ArrClass::General);
        assert!(report.aspherical);
    }

    #[test]
    fn falk_two_dense_edge_counts() {
        let arr = falk_two();
        let d = arr.dense_edges();
        assert_eq!(d.r, 2);
        assert_eq!(d.size, 8);
        let mult: Vec<Vec<usize>> = arr.multiple_points().map(|p| p.lines.clone()).collect();
        assert_eq!(mult, vec![vec![0, 1, 2], vec![0, 3, 4]]);
        assert_eq!(arr.high_points_on_line(0), 2);
    }

    #[test]
    fn pencil_has_single_point_of_full_multiplicity() {
        // x₁³ − x₂³ up to scale: three lines through [1:0:0], plus we use
        // rational slopes instead of roots of unity.
        let arr = Arrangement::from_lines(
            lines_from_ints(&[[0, 1, 0], [0, 1, -1], [0, 1, 1]]),
            0,
        )
        .unwrap();
        assert_eq!(arr.intersection_data().len(), 1);
        assert_eq!(arr.intersection_data()[0].multiplicity(), 3);
        let report = arr.arrangement_class();
        assert_eq!(report.class, ArrClass::Pencil);
        assert!(!report.aspherical);
        assert!(arr.nbc2().is_empty());
        assert_eq!(arr.b2_decone_moebius(), 0);
    }

    #[test]
    fn near_pencil_class_and_dense_edges() {
        // x₀(x₁² − x₂²) pattern with rational lines: ℓ₀ = x₀ plus n lines
        // through [1:0:0].
        let arr = Arrangement::from_lines(
            lines_from_ints(&[[1, 0, 0], [0, 1, 0], [0, 1, -1], [0, 1, 1]]),
            0,
        )
        .unwrap();
        let report = arr.arrangement_class();
        assert_eq!(report.class, ArrClass::NearPencil);
        assert!(report.aspherical);
        // n+1 lines plus the single multiple point.
        assert_eq!(arr.dense_edges().size, arr.num_lines() + 1);
    }

    #[test]
    fn four_general_lines_have_six_double_points() {
        let arr = Arrangement::from_lines(
            lines_from_ints(&[[0, 0, 1], [1, -2, 1], [4, -4, 1], [9, -6, 1]]),
            0,
        )
        .unwrap();
        assert_eq!(arr.intersection_data().len(), 6);
        assert!(arr.intersection_data().iter().all(|p| p.multiplicity() == 2));
        assert_eq!(arr.dense_edges().r, 0);
        assert_eq!(arr.nbc2(), vec![(1, 2), (1, 3), (2, 3)]);
        assert_eq!(arr.b2_decone_moebius(), 3);
    }

    #[test]
    fn duplicate_zero_and_short_inputs_are_rejected() {
        assert!(Arrangement::from_lines(
            lines_from_ints(&[[1, 0, 0], [2, 0, 0], [0, 1, 0]]),
            0
        )
        .is_err());
        assert!(Arrangement::from_lines(
            lines_from_ints(&[[1, 0, 0], [0, 0, 0], [0, 1, 0]]),
            0
        )
        .is_err());
        assert!(Arrangement::from_lines(lines_from_ints(&[[1, 0, 0]]), 0).is_err());
    }

    #[test]
    fn scaling_does_not_change_the_arrangement() {
        let a = Arrangement::from_lines(
            lines_from_ints(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
            0,
        )
        .unwrap();
        let b = Arrangement::from_lines(
            lines_from_ints(&[[7, 0, 0], [0, -3, 0], [0, 0, 5]]),
            0,
        )
        .unwrap();
        assert_eq!(a.lines(), b.lines());
        assert_eq!(a.intersection_data(), b.intersection_data());
    }

    #[test]
    fn moebius_and_nbc_counts_agree_on_falk_arrangements() {
        for arr in [falk_one(), falk_two()] {
            assert_eq!(arr.nbc2().len(), arr.b2_decone_moebius());
        }
        assert_eq!(falk_one().nbc2().len(), 8);
        assert_eq!(falk_two().nbc2().len(), 8);
    }

    #[test]
    fn pair_coverage_identity_holds() {
        for arr in [falk_one(), falk_two()] {
            let total: usize = arr
                .intersection_data()
                .iter()
                .map(|p| p.multiplicity() * (p.multiplicity() - 1) / 2)
                .sum();
            let n1 = arr.num_lines();
            assert_eq!(total, n1 * (n1 - 1) / 2);
        }
    }

    #[test]
    fn normalization_makes_scattered_family_consecutive() {
        // Same lines as F₂ but with the family {ℓ₁,ℓ₂} (through [0:0:1])
        // interleaved with the others in the input.
        let arr = Arrangement::from_lines(
            lines_from_ints(&[
                [1, 0, 0],
                [1, 1, 0],
                [1, 0, 1],
                [-1, 1, 0],
                [-1, 0, 1],
                [-1, 1, 1],
            ]),
            0,
        )
        .unwrap();
        // Blocks {x₁±x₀} and {x₂±x₀} must be consecutive.
        let mult: Vec<Vec<usize>> = arr.multiple_points().map(|p| p.lines.clone()).collect();
        assert_eq!(mult, vec![vec![0, 1, 2], vec![0, 3, 4]]);
        // Input index order recorded: ℓ₁ = input 1, ℓ₂ = input 3, etc.
        assert_eq!(arr.permutation(), &[0, 1, 3, 2, 4, 5]);
        // Idempotent.
        let (again, perm) = arr.normalize_ordering();
        assert_eq!(perm, vec![0, 1, 2, 3, 4, 5]);
        assert_eq!(again.permutation(), arr.permutation());
    }

    #[test]
    fn combinatorial_mode_matches_geometric_invariants() {
        let arr = Arrangement::from_combinatorial(6, vec![vec![0, 1, 2], vec![3, 4, 5]], 0).unwrap();
        let geo = falk_one();
        assert_eq!(arr.nbc2(), geo.nbc2());
        assert_eq!(arr.b2_decone_moebius(), geo.b2_decone_moebius());
        assert_eq!(arr.dense_edges(), geo.dense_edges());
        assert_eq!(
            arr.arrangement_class().class,
            geo.arrangement_class().class
        );
        // Invalid combinatorics are rejected.
        assert!(Arrangement::from_combinatorial(6, vec![vec![0, 1, 2], vec![1, 2, 3]], 0).is_err());
        assert!(Arrangement::from_combinatorial(6, vec![vec![0, 1]], 0).is_err());
    }

    #[test]
    fn parse_accepts_both_documented_forms() {
        let geo = r#"{ "lines": [["1","0","0"], ["1","1","0"], ["-1","1","0"],
                                  ["0","1","1"], ["0","0","1"], ["0","1","-1"]],
                       "infinity_index": 0 }"#;
        let a = Arrangement::parse(geo).unwrap();
        assert_eq!(a.nbc2().len(), 8);
        let comb = r#"{ "combinatorial": { "n_lines": 6,
                        "multiple_points": [[0,1,2],[3,4,5]] } }"#;
        let b = Arrangement::parse(comb).unwrap();
        assert_eq!(b.nbc2().len(), 8);
        assert!(Arrangement::parse("{}").is_err());
        assert!(Arrangement::parse("{\"lines\": [[\"1/0\",\"0\",\"0\"]]}").is_err());
    }

    #[test]
    fn infinity_index_selects_the_deconed_line() {
        // Pick ℓ₂ = x₂ as infinity in the coordinate triangle.
        let arr = Arrangement::from_lines(
            lines_from_ints(&[[1, 0, 0], [0, 1, 0], [0, 0, 1]]),
            2,
        )
        .unwrap();
        assert_eq!(arr.permutation()[0], 2);
        assert_eq!(arr.num_lines(), 3);
    }
}
