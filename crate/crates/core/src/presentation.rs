//! Presentations of the fundamental group of the boundary manifold, Fox
//! calculus, and the minor-gcd Alexander oracle.
//!
//! Two presentations are built from the weighted graph `Γ`:
//!
//! * The **raw** plumbing presentation: one generator per vertex
//!   (`x₀, …, x_n`, one `x_J` per multiple point) plus one `γ` per cycle
//!   edge; relators `[x_v, x_w^{u_{v,w}}]` per oriented edge and
//!   `R_v = ∏_w x_w^{u_{v,w}}` per vertex, where the conjugating word
//!   `u_{v,w}` is trivial on tree edges, `γ_k` on the `k`-th cycle edge,
//!   `γ_k^{-1}` against its orientation, and `u_{v,v} = w_v` contributes the
//!   weight power `x_v^{w_v}`.
//! * The **minimal** presentation on `x_1, …, x_n` and `γ_{i,k}` for
//!   `(i,k) ∈ nbc₂`: relators `R_j` (one per line) and
//!   `R_{i,k} = [z_{I(i,k)}, x_k^{γ_{i,k}}]` (one per pair), with
//!   `z_I = x_{j_1} x_{j_2}^{γ_{j_1,j_2}} ⋯ x_{j_q}^{γ_{j_1,j_q}}` the local
//!   meridian product at a multiple point and `ζ_{0,j}` the product over the
//!   parallel family of `j` (or `x_j` when `ℓ_j` is transverse to `ℓ₀`).
//!
//! Every relator has zero exponent sum in every generator, so `H₁(M)` is
//! free abelian of rank `N = n + |nbc₂|`; the abelianized Fox Jacobian is an
//! `N×N` matrix of Laurent polynomials in `t_1..t_n` (line generators) and
//! `s_{i,k}` (cycle generators).  Specializing all `s_{i,k} → 1` and taking
//! the gcd of the codimension-1 minors yields the Alexander polynomial — an
//! oracle computed here straight from the group, independent of the
//! closed-form product over graph vertices.  Conventions:
//! `[a,b] = aba⁻¹b⁻¹` and `a^b = b⁻¹ab`.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::graph::{VertexKind, WeightedGraph};
use crate::laurent::{det, LaurentPoly};
use crate::matrix::Mat;
use crate::scalar::{rat, seeded_rng, Field, Rat};
use rand::Rng;

/// A generator of one of the two presentations.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    /// Meridian `x_j` of `ℓ_j`, `1 ≤ j ≤ n`.
    X(usize),
    /// Cycle generator `γ_{i,k}`, `(i,k) ∈ nbc₂`.
    Gamma(usize, usize),
    /// Meridian `x₀` of `ℓ₀` (raw presentation only).
    X0,
    /// Vertex generator `x_J` of a multiple point (raw presentation only).
    XJ(Vec<usize>),
}

impl Gen {
    /// Text name: `x3`, `g1_2`, `x0`, `p0_1_2`; inverses capitalize.
    pub fn name(&self) -> String {
        match self {
            Gen::X(j) => format!("x{j}"),
            Gen::Gamma(i, k) => format!("g{i}_{k}"),
            Gen::X0 => "x0".to_string(),
            Gen::XJ(j) => {
                let parts: Vec<String> = j.iter().map(|i| i.to_string()).collect();
                format!("p{}", parts.join("_"))
            }
        }
    }

    fn name_with_sign(&self, e: i32) -> String {
        let n = self.name();
        if e > 0 {
            n
        } else {
            let mut c = n.chars();
            let head = c.next().unwrap().to_ascii_uppercase();
            format!("{head}{}", c.as_str())
        }
    }
}

/// A freely reduced word in the generators.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Word {
    letters: Vec<(Gen, i32)>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn gen(g: Gen) -> Self {
        Word {
            letters: vec![(g, 1)],
        }
    }

    pub fn gen_pow(g: Gen, e: i64) -> Self {
        let mut w = Word::empty();
        let sign = if e >= 0 { 1 } else { -1 };
        for _ in 0..e.unsigned_abs() {
            w.push(g.clone(), sign);
        }
        w
    }

    pub fn letters(&self) -> &[(Gen, i32)] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn push(&mut self, g: Gen, e: i32) {
        debug_assert!(e == 1 || e == -1);
        if let Some((lg, le)) = self.letters.last() {
            if *lg == g && le + e == 0 {
                self.letters.pop();
                return;
            }
        }
        self.letters.push((g, e));
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut w = self.clone();
        for (g, e) in &other.letters {
            w.push(g.clone(), *e);
        }
        w
    }

    pub fn inv(&self) -> Word {
        Word {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|(g, e)| (g.clone(), -e))
                .collect(),
        }
    }

    /// `self` conjugated by `b`: `b⁻¹ · self · b`.
    pub fn conj(&self, b: &Word) -> Word {
        b.inv().mul(self).mul(b)
    }

    /// `[self, other] = self·other·self⁻¹·other⁻¹`.
    pub fn commutator(&self, other: &Word) -> Word {
        self.mul(other).mul(&self.inv()).mul(&other.inv())
    }

    pub fn exponent_sum(&self, g: &Gen) -> i64 {
        self.letters
            .iter()
            .filter(|(h, _)| h == g)
            .map(|(_, e)| *e as i64)
            .sum()
    }

    /// Render like `x1 g1_2 X1 G1_2`; the empty word renders as `1`.
    pub fn render(&self) -> String {
        if self.letters.is_empty() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|(g, e)| g.name_with_sign(*e))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// An ordered, labeled presentation.
#[derive(Clone, Debug)]
pub struct GroupPresentation {
    pub generators: Vec<Gen>,
    /// `(label, relator)` pairs in canonical order.
    pub relators: Vec<(String, Word)>,
}

impl GroupPresentation {
    /// One relator per line in the `x3 / g1_2 / X3 / G1_2` letter format.
    pub fn render(&self) -> String {
        let gens: Vec<String> = self.generators.iter().map(|g| g.name()).collect();
        let mut out = format!("generators: {}\n", gens.join(" "));
        for (label, w) in &self.relators {
            out.push_str(&format!("{label}: {}\n", w.render()));
        }
        out
    }

    /// Exponent-sum matrix (relators × generators) over the integers.
    pub fn exponent_matrix(&self) -> Vec<Vec<i64>> {
        self.relators
            .iter()
            .map(|(_, w)| self.generators.iter().map(|g| w.exponent_sum(g)).collect())
            .collect()
    }
}

/// The raw plumbing presentation of the graph group.
pub fn raw_presentation(graph: &WeightedGraph) -> GroupPresentation {
    let vertex_gen = |v: &VertexKind| -> Gen {
        match v {
            VertexKind::Line(0) => Gen::X0,
            VertexKind::Line(i) => Gen::X(*i),
            VertexKind::Point(j) => Gen::XJ(j.clone()),
        }
    };
    // Display order: x₀..x_n, then the x_J, then the γ's.
    let mut generators: Vec<Gen> = Vec::new();
    generators.push(Gen::X0);
    let mut lines: Vec<usize> = Vec::new();
    let mut points: Vec<Vec<usize>> = Vec::new();
    for v in &graph.vertices {
        match v {
            VertexKind::Line(i) if *i > 0 => lines.push(*i),
            VertexKind::Point(j) => points.push(j.clone()),
            _ => {}
        }
    }
    lines.sort_unstable();
    generators.extend(lines.iter().map(|&i| Gen::X(i)));
    generators.extend(points.iter().map(|j| Gen::XJ(j.clone())));
    generators.extend(graph.cycle_labels.iter().map(|&(i, k)| Gen::Gamma(i, k)));

    // The conjugating word of an oriented edge (v → w as stored).
    let edge_u = |e: usize| -> Word {
        match graph.cycle_index(e) {
            None => Word::empty(),
            Some(c) => {
                let (i, k) = graph.cycle_labels[c];
                Word::gen(Gen::Gamma(i, k))
            }
        }
    };

    let mut relators: Vec<(String, Word)> = Vec::new();
    for (e, edge) in graph.edges.iter().enumerate() {
        let xa = Word::gen(vertex_gen(&graph.vertices[edge.from]));
        let xb = Word::gen(vertex_gen(&graph.vertices[edge.to]));
        let r = xa.commutator(&xb.conj(&edge_u(e)));
        let label = format!(
            "edge {} {}",
            graph.vertices[edge.from].label(),
            graph.vertices[edge.to].label()
        );
        relators.push((label, r));
    }
    for (v, vk) in graph.vertices.iter().enumerate() {
        let mut r = Word::empty();
        for (w, wk) in graph.vertices.iter().enumerate() {
            if w == v {
                r = r.mul(&Word::gen_pow(vertex_gen(vk), graph.weights[v]));
                continue;
            }
            // At most one edge joins v and w, in either orientation.
            for (e, edge) in graph.edges.iter().enumerate() {
                let xw = Word::gen(vertex_gen(wk));
                if edge.from == v && edge.to == w {
                    r = r.mul(&xw.conj(&edge_u(e)));
                } else if edge.from == w && edge.to == v {
                    r = r.mul(&xw.conj(&edge_u(e).inv()));
                }
            }
        }
        relators.push((format!("vertex {}", vk.label()), r));
    }
    GroupPresentation {
        generators,
        relators,
    }
}

/// The local meridian product `z_I` at a multiple point off `ℓ₀`
/// (`I` sorted, `0 ∉ I`): `x_{j₁} · x_{j₂}^{γ_{j₁,j₂}} ⋯ x_{j_q}^{γ_{j₁,j_q}}`.
pub fn z_word(incident: &[usize]) -> Word {
    let j1 = incident[0];
    let mut w = Word::gen(Gen::X(j1));
    for &jq in &incident[1..] {
        let conj = Word::gen(Gen::Gamma(j1, jq));
        w = w.mul(&Word::gen(Gen::X(jq)).conj(&conj));
    }
    w
}

/// `x₁ x₂ ⋯ x_n`.
pub fn full_product(n: usize) -> Word {
    let mut w = Word::empty();
    for j in 1..=n {
        w = w.mul(&Word::gen(Gen::X(j)));
    }
    w
}

/// `ζ_{0,j}`: the product over the parallel family of `j` (consecutive by
/// normalization), or `x_j` when `ℓ_j` is transverse to `ℓ₀`.
fn zeta(arr: &Arrangement, j: usize) -> Word {
    for block in arr.pi0_blocks() {
        if block.len() >= 2 && block.contains(&j) {
            let mut w = Word::empty();
            for &i in &block {
                w = w.mul(&Word::gen(Gen::X(i)));
            }
            return w;
        }
    }
    Word::gen(Gen::X(j))
}

/// The word of the vertex `v` whose conjugacy class carries the Alexander
/// factor: `x_j` for a decone line; `(x₁⋯x_n)⁻¹` for `ℓ₀`; `z_I` for a
/// multiple point off `ℓ₀`; the plain meridian product
/// `x_{j₂} ⋯ x_{j_q} (x₁⋯x_n)⁻¹` for a multiple point on `ℓ₀`.
pub fn vertex_word(arr: &Arrangement, v: &VertexKind) -> Word {
    match v {
        VertexKind::Line(0) => full_product(arr.n()).inv(),
        VertexKind::Line(i) => Word::gen(Gen::X(*i)),
        VertexKind::Point(lines) => {
            if lines[0] == 0 {
                let mut w = Word::empty();
                for &j in &lines[1..] {
                    w = w.mul(&Word::gen(Gen::X(j)));
                }
                w.mul(&full_product(arr.n()).inv())
            } else {
                z_word(lines)
            }
        }
    }
}

/// The minimal presentation on `x_1..x_n, γ_{i,k}`.
pub fn minimal_presentation(arr: &Arrangement) -> GroupPresentation {
    let n = arr.n();
    let nbc = arr.nbc2();
    let mut generators: Vec<Gen> = (1..=n).map(Gen::X).collect();
    generators.extend(nbc.iter().map(|&(i, k)| Gen::Gamma(i, k)));

    // Multiple points of the decone (off ℓ₀), in lexicographic order.
    let dense: Vec<Vec<usize>> = arr
        .multiple_points()
        .filter(|p| !p.on_line(0))
        .map(|p| p.lines.clone())
        .collect();
    let doubles: Vec<(usize, usize)> = arr.doubles().filter(|&(i, _)| i >= 1).collect();

    let trailing = full_product(n).inv();
    let mut relators: Vec<(String, Word)> = Vec::new();
    for j in 1..=n {
        let mut r = zeta(arr, j);
        for i_set in &dense {
            if !i_set.contains(&j) {
                continue;
            }
            let z = z_word(i_set);
            if i_set[0] == j {
                r = r.mul(&Word::gen(Gen::X(j)).inv()).mul(&z);
            } else {
                let g = Word::gen(Gen::Gamma(i_set[0], j));
                r = r
                    .mul(&g)
                    .mul(&z)
                    .mul(&g.inv())
                    .mul(&Word::gen(Gen::X(j)).inv());
            }
        }
        for &(i, k) in &doubles {
            if k == j {
                // x_i conjugated by γ_{i,j}⁻¹.
                let g = Word::gen(Gen::Gamma(i, j));
                r = r.mul(&Word::gen(Gen::X(i)).conj(&g.inv()));
            } else if i == j {
                // x_k conjugated by γ_{j,k}.
                let g = Word::gen(Gen::Gamma(j, k));
                r = r.mul(&Word::gen(Gen::X(k)).conj(&g));
            }
        }
        r = r.mul(&trailing);
        relators.push((format!("R{j}"), r));
    }
    for &(i, k) in &nbc {
        let z = z_word(&arr.incident_set(i, k));
        let xk = Word::gen(Gen::X(k)).conj(&Word::gen(Gen::Gamma(i, k)));
        relators.push((format!("R{i}_{k}"), z.commutator(&xk)));
    }
    GroupPresentation {
        generators,
        relators,
    }
}

/// The abelianized Fox Jacobian of a minimal presentation: rows = relators,
/// columns = generators, entries in `Λ = Q[t₁^{±1}..t_n^{±1},
/// s^{±1}_{(i,k)}]` with the variable order `t_1..t_n` then `s_{i,k}`
/// lexicographically.
#[derive(Clone, Debug)]
pub struct AlexanderMatrix {
    /// Number of line generators (`t`-variables).
    pub n: usize,
    /// The nbc₂ pairs indexing the `s`-variables, in order.
    pub pairs: Vec<(usize, usize)>,
    /// `N×N` entries, `N = n + pairs.len()`.
    pub entries: Vec<Vec<LaurentPoly<Rat>>>,
}

impl AlexanderMatrix {
    pub fn size(&self) -> usize {
        self.n + self.pairs.len()
    }

    /// The abelianized image of a generator as an exponent vector.
    fn image(&self, g: &Gen) -> Vec<i64> {
        let nv = self.size();
        let mut e = vec![0i64; nv];
        match g {
            Gen::X(j) => e[j - 1] = 1,
            Gen::Gamma(i, k) => {
                let pos = self
                    .pairs
                    .iter()
                    .position(|p| p == &(*i, *k))
                    .expect("gamma index is an nbc pair");
                e[self.n + pos] = 1;
            }
            _ => panic!("raw generators have no column in the Alexander matrix"),
        }
        e
    }

    /// Set all `s`-variables to 1, leaving an `N×N` matrix over `t_1..t_n`.
    pub fn specialize_cycles(&self) -> Vec<Vec<LaurentPoly<Rat>>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|p| {
                        let mut q = LaurentPoly::zero(self.n);
                        for (e, c) in p.terms() {
                            let te: Vec<i64> = e[..self.n].to_vec();
                            q = q.add(&LaurentPoly::term(self.n, te, c.clone()));
                        }
                        q
                    })
                    .collect()
            })
            .collect()
    }

    /// Exact rank of the matrix evaluated at a point of the algebraic torus
    /// (all coordinates nonzero), in the order `t₁..t_n, s_{i,k}…`.
    pub fn rank_at(&self, point: &[Rat]) -> Result<usize> {
        let nv = self.size();
        if point.len() != nv {
            return Err(Error::VarMismatch(point.len(), nv));
        }
        if let Some(i) = point.iter().position(|x| x.is_zero()) {
            return Err(Error::ZeroEvaluation(i));
        }
        let mut m = Mat::zero(nv, nv);
        for (i, row) in self.entries.iter().enumerate() {
            for (j, p) in row.iter().enumerate() {
                m.a[i][j] = p.eval(point)?;
            }
        }
        Ok(m.rank())
    }
}

/// Fox Jacobian of the minimal presentation, abelianized.
pub fn fox_jacobian(arr: &Arrangement, pres: &GroupPresentation) -> AlexanderMatrix {
    let n = arr.n();
    let pairs = arr.nbc2();
    let nv = n + pairs.len();
    let mut matrix = AlexanderMatrix {
        n,
        pairs,
        entries: vec![vec![LaurentPoly::zero(nv); nv]; nv],
    };
    assert_eq!(pres.relators.len(), nv, "minimal presentation is square");
    let col_of = |g: &Gen| -> usize {
        match g {
            Gen::X(j) => j - 1,
            Gen::Gamma(i, k) => {
                n + matrix
                    .pairs
                    .iter()
                    .position(|p| p == &(*i, *k))
                    .expect("gamma index is an nbc pair")
            }
            _ => panic!("raw generators have no column"),
        }
    };
    let images: BTreeMap<Gen, Vec<i64>> = pres
        .generators
        .iter()
        .map(|g| (g.clone(), matrix.image(g)))
        .collect();
    for (r, (_, word)) in pres.relators.iter().enumerate() {
        let mut prefix = vec![0i64; nv];
        for (g, e) in word.letters() {
            let img = &images[g];
            let c = col_of(g);
            if *e == 1 {
                let term = LaurentPoly::term(nv, prefix.clone(), rat(1));
                matrix.entries[r][c] = matrix.entries[r][c].add(&term);
                for (p, d) in prefix.iter_mut().zip(img) {
                    *p += d;
                }
            } else {
                for (p, d) in prefix.iter_mut().zip(img) {
                    *p -= d;
                }
                let term = LaurentPoly::term(nv, prefix.clone(), rat(-1));
                matrix.entries[r][c] = matrix.entries[r][c].add(&term);
            }
        }
    }
    matrix
}

/// Result of the minor-gcd computation.
#[derive(Clone, Debug)]
pub struct OracleOutcome {
    /// Canonical gcd of the codimension-1 minors after `s → 1`; zero when
    /// every minor vanishes.
    pub delta: LaurentPoly<Rat>,
    /// True when the minors were sampled rather than enumerated exactly.
    pub probabilistic: bool,
    /// Set when every minor vanished.
    pub diagnostic: Option<String>,
}

/// Size cap for the exact minor-gcd path (all corpus arrangements fit).
const ORACLE_EXACT_CAP: usize = 18;
/// Number of sampled minors above the cap.
const ORACLE_SAMPLES: usize = 200;

/// Alexander polynomial straight from the group: gcd of the codimension-1
/// minors of the cycle-specialized Fox Jacobian.
///
/// The fundamental identity `Σ_c J_{a,c}(t̄_c − 1) = 0` makes the signed
/// minors along a row proportional to `(t̄_c − 1)`, so for `N ≤ 18` the full
/// gcd is obtained exactly from the `N` minors that delete the first column:
/// `gcd_{a,c} M_{a,c} = gcd_a M_{a,1}/(t₁−1) · gcd_c (t_c−1)`, and the
/// second factor is 1 as soon as `n ≥ 2`.  All first-column minors come
/// from one shared fraction-free elimination.  Larger matrices fall back
/// to a seeded random sample of minors and are flagged probabilistic.
pub fn alexander_gcd_oracle(matrix: &AlexanderMatrix) -> Result<OracleOutcome> {
    let nv = matrix.size();
    let n = matrix.n;
    let spec = matrix.specialize_cycles();
    if nv == 1 {
        // The only codimension-1 minor is the empty determinant 1.
        return Ok(OracleOutcome {
            delta: LaurentPoly::one(n),
            probabilistic: false,
            diagnostic: None,
        });
    }
    let mut g = LaurentPoly::zero(n);
    let mut any_nonzero = false;
    if nv <= ORACLE_EXACT_CAP {
        let col_deleted: Vec<Vec<LaurentPoly<Rat>>> = spec
            .iter()
            .map(|row| row[1..].to_vec())
            .collect();
        let minors = match crate::zdet::row_deleted_minors_int(&col_deleted)? {
            Some(fast) => fast,
            None => crate::laurent::row_deleted_minors(&col_deleted)?,
        };
        for m in &minors {
            if m.is_zero() {
                continue;
            }
            any_nonzero = true;
            g = crate::laurent::gcd(&g, m);
        }
        if any_nonzero {
            let t1_minus_1 = LaurentPoly::var(n, 0).sub(&LaurentPoly::one(n));
            g = g.try_div_exact(&t1_minus_1).ok_or_else(|| {
                Error::Internal("minor gcd is not divisible by t1 - 1".into())
            })?;
        }
        let diagnostic = if any_nonzero {
            None
        } else {
            Some("all codimension-1 minors vanish".to_string())
        };
        Ok(OracleOutcome {
            delta: g.canonicalize().1,
            probabilistic: false,
            diagnostic,
        })
    } else {
        let minor = |a: usize, c: usize| -> Result<LaurentPoly<Rat>> {
            let sub: Vec<Vec<LaurentPoly<Rat>>> = (0..nv)
                .filter(|&i| i != a)
                .map(|i| {
                    (0..nv)
                        .filter(|&j| j != c)
                        .map(|j| spec[i][j].clone())
                        .collect()
                })
                .collect();
            det(&sub)
        };
        let mut rng = seeded_rng(0x5eed);
        for _ in 0..ORACLE_SAMPLES {
            let a = rng.gen_range(0..nv);
            let c = rng.gen_range(0..nv);
            let m = minor(a, c)?;
            if m.is_zero() {
                continue;
            }
            any_nonzero = true;
            g = crate::laurent::gcd(&g, &m);
            if g.is_one() {
                break;
            }
        }
        let diagnostic = if any_nonzero {
            None
        } else {
            Some("all sampled codimension-1 minors vanish".to_string())
        };
        Ok(OracleOutcome {
            delta: g.canonicalize().1,
            probabilistic: true,
            diagnostic,
        })
    }
}

/// An assignment of invertible matrices to generators; unassigned
/// generators act as the identity.
#[derive(Clone, Debug)]
pub struct Representation<F: Field> {
    pub dim: usize,
    map: BTreeMap<Gen, (Mat<F>, Mat<F>)>,
}

impl<F: Field> Representation<F> {
    pub fn identity(dim: usize) -> Self {
        Representation {
            dim,
            map: BTreeMap::new(),
        }
    }

    /// Assign a generator image; the matrix must be square of the
    /// representation's dimension and invertible.
    pub fn set(&mut self, g: Gen, m: Mat<F>) -> Result<()> {
        if m.rows != self.dim || m.cols != self.dim {
            return Err(Error::InvalidRepresentation(format!(
                "matrix for {} is {}×{}, expected {}×{}",
                g.name(),
                m.rows,
                m.cols,
                self.dim,
                self.dim
            )));
        }
        let inv = m.inverse().ok_or_else(|| {
            Error::InvalidRepresentation(format!("matrix for {} is singular", g.name()))
        })?;
        self.map.insert(g, (m, inv));
        Ok(())
    }

    pub fn image(&self, g: &Gen, e: i32) -> Mat<F> {
        match self.map.get(g) {
            None => Mat::identity(self.dim),
            Some((m, mi)) => {
                if e >= 0 {
                    m.clone()
                } else {
                    mi.clone()
                }
            }
        }
    }

    /// Evaluate a word under the representation.
    pub fn evaluate(&self, w: &Word) -> Mat<F> {
        let mut acc = Mat::identity(self.dim);
        for (g, e) in w.letters() {
            acc = acc
                .mul(&self.image(g, *e))
                .expect("all images share the representation dimension");
        }
        acc
    }
}

/// True iff every relator maps to the identity matrix.
pub fn verify_representation<F: Field>(
    pres: &GroupPresentation,
    rep: &Representation<F>,
) -> bool {
    pres.relators
        .iter()
        .all(|(_, w)| rep.evaluate(w).is_identity())
}


#[cfg(test)]
mod profiling {
    use super::*;
    use crate::corpus;
    use std::time::Instant;

    #[test]
    #[ignore]
    fn profile_oracle_falk_one() {
        let arr = corpus::falk_one();
        let t0 = Instant::now();
        let pres = minimal_presentation(&arr);
        let m = fox_jacobian(&arr, &pres);
        eprintln!("fox: {:?}", t0.elapsed());
        let t1 = Instant::now();
        let spec = m.specialize_cycles();
        let col_deleted: Vec<Vec<LaurentPoly<Rat>>> =
            spec.iter().map(|row| row[1..].to_vec()).collect();
        let minors = crate::zdet::row_deleted_minors_int(&col_deleted)
            .unwrap()
            .expect("packable");
        eprintln!("minors: {:?}", t1.elapsed());
        for (i, mm) in minors.iter().enumerate() {
            eprintln!("  minor {i}: {} terms", mm.num_terms());
        }
        let mut g = LaurentPoly::zero(m.n);
        for (i, mm) in minors.iter().enumerate() {
            if mm.is_zero() {
                continue;
            }
            let t2 = Instant::now();
            g = crate::laurent::gcd(&g, mm);
            eprintln!("gcd after minor {i}: {} terms, {:?}", g.num_terms(), t2.elapsed());
        }
    }
}
