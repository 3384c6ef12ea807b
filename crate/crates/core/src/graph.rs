//! The weighted incidence graph of an arrangement.
//!
//! The graph `Γ` has a vertex `v_i` for each line `ℓ_i` and a vertex `v_J`
//! for each point of multiplicity ≥ 3 (with `J` its sorted set of incident
//! lines).  There is an edge `e_{i,j}` from `v_i` to `v_j` (`i < j`) for
//! each transverse pair, and an edge `e_{J,i}` from `v_J` to `v_i` for each
//! line through a multiple point.  The boundary manifold of the arrangement
//! is the graph manifold obtained by plumbing on `Γ` with vertex weights
//! `w_i = 1 − pᵢ` (`pᵢ` = number of multiple points on `ℓ_i`) and
//! `w_J = −1` — the self-intersection numbers of the exceptional curves in
//! the blow-up of the projective plane at the multiple points.
//!
//! Canonical ordering, used by everything downstream:
//! * vertices: `v_{J₁}, …, v_{J_r}` (points, lexicographic by `J`), then
//!   `v_1, …, v_n`, then `v_0` last;
//! * edges: transverse `e_{i,j}` sorted by `(i,j)`, then `e_{J,i}` sorted by
//!   `(J,i)`; orientations are never flipped by consumers.
//!
//! The maximal tree `T` consists of all edges at the vertices of `ℓ₀`
//! (its transverse edges `e_{0,i}` and every edge of every multiple point on
//! `ℓ₀`) plus the edge `e_{J, min J}` for each multiple point off `ℓ₀`.  The
//! complementary cycle edges are in canonical bijection with the degree-two
//! no-broken-circuit pairs of the decone: `e_{i,j} ↦ (i,j)` and
//! `e_{J,i} ↦ (min J, i)`; they are ordered lexicographically by label.

use serde_json::{json, Value};

use crate::arrangement::{ArrClass, Arrangement};
use crate::error::{Error, Result};

/// Graph vertex: a line of the arrangement or a multiple point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VertexKind {
    /// The point with the given sorted set of ≥ 3 incident lines.
    Point(Vec<usize>),
    /// The line `ℓ_i`.
    Line(usize),
}

impl VertexKind {
    pub fn label(&self) -> String {
        match self {
            VertexKind::Line(i) => format!("v{i}"),
            VertexKind::Point(j) => {
                let parts: Vec<String> = j.iter().map(|i| i.to_string()).collect();
                format!("v{{{}}}", parts.join(","))
            }
        }
    }
}

/// An oriented edge between vertex indexes (into `WeightedGraph::vertices`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub in_tree: bool,
    pub label: EdgeLabel,
}

/// Identity of an edge in arrangement terms.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum EdgeLabel {
    /// `e_{i,j}`, `i < j`: the lines meet transversely.
    Transverse(usize, usize),
    /// `e_{J,i}`: the multiple point `J` lies on `ℓ_i`.
    PointLine(Vec<usize>, usize),
}

/// The weighted graph with its canonical vertex/edge order, maximal tree,
/// and cycle-edge labeling.
#[derive(Clone, Debug)]
pub struct WeightedGraph {
    pub vertices: Vec<VertexKind>,
    pub edges: Vec<Edge>,
    /// Plumbing weight of each vertex.
    pub weights: Vec<i64>,
    /// Degree of each vertex.
    pub multiplicities: Vec<usize>,
    /// Edge indexes forming the maximal tree `T`.
    pub tree_edges: Vec<usize>,
    /// Edge indexes of `C = E ∖ T`, sorted by their nbc₂ labels.
    pub cycle_edges: Vec<usize>,
    /// The nbc₂ pair `(i,k)` of each cycle edge, parallel to `cycle_edges`.
    pub cycle_labels: Vec<(usize, usize)>,
}

impl WeightedGraph {
    /// Number of independent cycles `g = b₁(Γ)`.
    pub fn genus(&self) -> usize {
        self.cycle_edges.len()
    }

    /// Vertex index of `v_i`.
    pub fn line_vertex(&self, i: usize) -> usize {
        self.vertices
            .iter()
            .position(|v| matches!(v, VertexKind::Line(j) if *j == i))
            .expect("line vertex exists")
    }

    /// Vertex index of `v_J`.
    pub fn point_vertex(&self, j: &[usize]) -> Option<usize> {
        self.vertices
            .iter()
            .position(|v| matches!(v, VertexKind::Point(k) if k.as_slice() == j))
    }

    /// The cycle-edge position of an edge, if it is a cycle edge.
    pub fn cycle_index(&self, edge: usize) -> Option<usize> {
        self.cycle_edges.iter().position(|&e| e == edge)
    }

    /// Structured export for external viewers.
    pub fn to_json(&self) -> Value {
        let vertices: Vec<Value> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| {
                json!({
                    "label": v.label(),
                    "weight": self.weights[i],
                    "multiplicity": self.multiplicities[i],
                })
            })
            .collect();
        let edges: Vec<Value> = self
            .edges
            .iter()
            .enumerate()
            .map(|(e, edge)| {
                let mut o = json!({
                    "from": self.vertices[edge.from].label(),
                    "to": self.vertices[edge.to].label(),
                    "in_tree": edge.in_tree,
                });
                if let Some(c) = self.cycle_index(e) {
                    o["cycle_label"] = json!(format!(
                        "({},{})",
                        self.cycle_labels[c].0, self.cycle_labels[c].1
                    ));
                }
                o
            })
            .collect();
        json!({ "vertices": vertices, "edges": edges })
    }
}

/// Build the weighted graph of a normalized arrangement.
pub fn build_graph(arr: &Arrangement) -> Result<WeightedGraph> {
    let n = arr.n();
    // Vertices: points (lex by incident set), lines 1..n, line 0 last.
    let mut vertices: Vec<VertexKind> = arr
        .multiple_points()
        .map(|p| VertexKind::Point(p.lines.clone()))
        .collect();
    for i in 1..=n {
        vertices.push(VertexKind::Line(i));
    }
    vertices.push(VertexKind::Line(0));
    let vid_line = |i: usize| -> usize {
        let r = vertices.len() - 1 - n;
        if i == 0 {
            vertices.len() - 1
        } else {
            r + i - 1
        }
    };

    // Edges: transverse pairs sorted by (i, j), then point-line by (J, i).
    let mut edges: Vec<Edge> = Vec::new();
    for (i, j) in arr.doubles() {
        edges.push(Edge {
            from: vid_line(i),
            to: vid_line(j),
            in_tree: i == 0,
            label: EdgeLabel::Transverse(i, j),
        });
    }
    for (pidx, p) in arr.multiple_points().enumerate() {
        let on_infinity = p.on_line(0);
        let min = p.lines[0];
        for &i in &p.lines {
            let in_tree = on_infinity || i == min;
            edges.push(Edge {
                from: pidx,
                to: vid_line(i),
                in_tree,
                label: EdgeLabel::PointLine(p.lines.clone(), i),
            });
        }
    }

    // Degrees and weights.
    let mut multiplicities = vec![0usize; vertices.len()];
    for e in &edges {
        multiplicities[e.from] += 1;
        multiplicities[e.to] += 1;
    }
    let weights: Vec<i64> = vertices
        .iter()
        .map(|v| match v {
            VertexKind::Line(i) => 1 - arr.high_points_on_line(*i) as i64,
            VertexKind::Point(_) => -1,
        })
        .collect();

    // The tree and the labeled cycle edges.
    let tree_edges: Vec<usize> = (0..edges.len()).filter(|&e| edges[e].in_tree).collect();
    let mut cycles: Vec<((usize, usize), usize)> = Vec::new();
    for (e, edge) in edges.iter().enumerate() {
        if edge.in_tree {
            continue;
        }
        let label = match &edge.label {
            EdgeLabel::Transverse(i, j) => (*i, *j),
            EdgeLabel::PointLine(j, i) => (j[0], *i),
        };
        cycles.push((label, e));
    }
    cycles.sort();
    let cycle_labels: Vec<(usize, usize)> = cycles.iter().map(|(l, _)| *l).collect();
    let cycle_edges: Vec<usize> = cycles.iter().map(|(_, e)| *e).collect();

    // Sanity: T must be a spanning tree and the labels must be exactly nbc₂.
    if tree_edges.len() + 1 != vertices.len() {
        return Err(Error::Internal(format!(
            "tree size {} does not span {} vertices",
            tree_edges.len(),
            vertices.len()
        )));
    }
    let mut reach = vec![false; vertices.len()];
    let mut stack = vec![0usize];
    reach[0] = true;
    while let Some(v) = stack.pop() {
        for &e in &tree_edges {
            let (a, b) = (edges[e].from, edges[e].to);
            for (x, y) in [(a, b), (b, a)] {
                if x == v && !reach[y] {
                    reach[y] = true;
                    stack.push(y);
                }
            }
        }
    }
    if !reach.iter().all(|&r| r) {
        return Err(Error::Internal("maximal tree is not connected".into()));
    }
    if cycle_labels != arr.nbc2() {
        return Err(Error::Internal(
            "cycle-edge labels do not reproduce the nbc₂ pairs".into(),
        ));
    }
    if arr.arrangement_class().class != ArrClass::Pencil {
        if let Some(v) = multiplicities.iter().position(|&m| m < 2) {
            return Err(Error::Internal(format!(
                "vertex {} has degree < 2 in a non-pencil arrangement",
                vertices[v].label()
            )));
        }
    }

    Ok(WeightedGraph {
        vertices,
        edges,
        weights,
        multiplicities,
        tree_edges,
        cycle_edges,
        cycle_labels,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;

    #[test]
    fn near_pencil_graph_matches_hand_construction() {
        let arr = corpus::near_pencil(4);
        let g = build_graph(&arr).unwrap();
        let labels: Vec<String> = g.vertices.iter().map(|v| v.label()).collect();
        assert_eq!(labels, ["v{1,2,3}", "v1", "v2", "v3", "v0"]);
        // T = {e_{0,1}, e_{0,2}, e_{0,3}, e_{123,1}}, C = {e_{123,2}, e_{123,3}}.
        assert_eq!(g.tree_edges.len(), 4);
        assert_eq!(g.genus(), 2);
        assert_eq!(g.cycle_labels, vec![(1, 2), (1, 3)]);
        // Weights: w₀ = 1, line weights 0, point weight −1.
        assert_eq!(g.weights[g.line_vertex(0)], 1);
        for i in 1..=3 {
            assert_eq!(g.weights[g.line_vertex(i)], 0);
        }
        assert_eq!(g.weights[0], -1);
        // Degrees: apex and v₀ have degree 3, decone lines degree 2.
        assert_eq!(g.multiplicities[0], 3);
        assert_eq!(g.multiplicities[g.line_vertex(0)], 3);
        assert_eq!(g.multiplicities[g.line_vertex(2)], 2);
    }

    #[test]
    fn general_position_graph_is_complete() {
        let arr = corpus::general_position(5);
        let g = build_graph(&arr).unwrap();
        assert_eq!(g.vertices.len(), 5);
        assert_eq!(g.edges.len(), 10); // K₅
        assert_eq!(g.tree_edges.len(), 4); // the star at v₀
        assert_eq!(g.genus(), 6); // C(4,2)
        assert!(g.weights.iter().all(|&w| w == 1));
        for e in &g.tree_edges {
            assert!(matches!(g.edges[*e].label, EdgeLabel::Transverse(0, _)));
        }
    }

    #[test]
    fn falk_two_adjacency_matches_picture() {
        let arr = corpus::falk_two();
        let g = build_graph(&arr).unwrap();
        // v₅ is adjacent to every line vertex (5 transverse intersections).
        let v5 = g.line_vertex(5);
        let deg5 = g
            .edges
            .iter()
            .filter(|e| e.from == v5 || e.to == v5)
            .count();
        assert_eq!(deg5, 5);
        // The two triple points on ℓ₀ connect to their three lines each.
        assert_eq!(g.multiplicities[0], 3);
        assert_eq!(g.multiplicities[1], 3);
        // ℓ₀ carries both triple points: weight 1 − 2 = −1.
        assert_eq!(g.weights[g.line_vertex(0)], -1);
    }

    #[test]
    fn falk_one_infinity_weight_is_zero() {
        let arr = corpus::falk_one();
        let g = build_graph(&arr).unwrap();
        assert_eq!(g.weights[g.line_vertex(0)], 0);
    }

    #[test]
    fn graph_identities_hold_across_corpus() {
        for (name, arr) in corpus::standard_corpus() {
            let g = build_graph(&arr).unwrap();
            assert_eq!(
                g.tree_edges.len() + 1,
                g.vertices.len(),
                "spanning tree size for {name}"
            );
            assert_eq!(
                g.edges.len(),
                g.tree_edges.len() + g.cycle_edges.len(),
                "edge partition for {name}"
            );
            let degree_sum: usize = g.multiplicities.iter().sum();
            assert_eq!(degree_sum, 2 * g.edges.len(), "handshake for {name}");
            assert_eq!(
                g.cycle_labels,
                arr.nbc2(),
                "cycle labels equal nbc₂ pairs for {name}"
            );
        }
    }

    #[test]
    fn json_export_is_deterministic_and_labels_cycles() {
        let g = build_graph(&corpus::near_pencil(4)).unwrap();
        let v = g.to_json();
        assert_eq!(v["vertices"][0]["label"], "v{1,2,3}");
        assert_eq!(v["vertices"][0]["weight"], -1);
        let edges = v["edges"].as_array().unwrap();
        let cycle_count = edges
            .iter()
            .filter(|e| e.get("cycle_label").is_some())
            .count();
        assert_eq!(cycle_count, 2);
    }
}
