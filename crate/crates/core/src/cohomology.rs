//! The degree ≤ 2 Orlik–Solomon algebra of the decone, its graded double,
//! and the 3-form classifying the cohomology ring of the boundary manifold.
//!
//! The integral cohomology A = H*(X;Z) of the decone complement is generated
//! in degree 1 by classes e₁..e_n dual to the meridians, with A² free on
//! classes f_{i,k} for (i,k) ∈ nbc₂ and multiplication
//!
//!   μ(e_i, e_j) = f_{i,j}              if (i,j) ∈ nbc₂,
//!              = f_{k,j} − f_{k,i}     if some (k,i), (k,j) ∈ nbc₂,
//!              = 0                     otherwise (parallel lines).
//!
//! The cohomology of the boundary manifold M is the graded double
//! Â = A ⊕ Ā with multiplication (a,f)·(b,g) = (ab, ag + fb) and grading
//! Â^k = A^k ⊕ Ā^{3−k}; it is a Poincaré-duality algebra of formal
//! dimension 3, generated in degree 1 exactly when the arrangement is not a
//! pencil.  Its full ring structure is encoded by the alternating 3-form
//!
//!   η_M = Σ_{(i,k) ∈ nbc₂} e_{I(i,k)} ∧ e_k ∧ f̄_{i,k}
//!       = Σ_{i<j} Σ_k μ_{i,j,k} e_i ∧ e_j ∧ f̄_k,
//!
//! where e_J = Σ_{j∈J} e_j.  Bases are ordered e₁..e_n then f̄ (nbc₂ order)
//! in degree 1, and f (nbc₂ order) then ē₁..ē_n in degree 2.

use num::bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;

use crate::arrangement::{ArrClass, Arrangement};
use crate::matrix::smith_invariant_factors;

/// Orlik–Solomon algebra of the decone in degrees ≤ 2.
#[derive(Clone, Debug)]
pub struct OSAlgebra {
    /// b₁ = number of decone lines.
    pub n: usize,
    /// nbc₂ pairs indexing the degree-2 basis f_{i,k}, in lexicographic
    /// order.
    pub pairs: Vec<(usize, usize)>,
    /// Structure tensor: `mu[i-1][j-1][k]` is the coefficient of f_k in
    /// e_i·e_j; antisymmetric in the first two indices.
    pub mu: Vec<Vec<Vec<i64>>>,
}

impl OSAlgebra {
    /// b₂ = |nbc₂|.
    pub fn b2(&self) -> usize {
        self.pairs.len()
    }

    /// Coefficients of e_i·e_j in the f-basis (1-based line indices).
    pub fn mu_row(&self, i: usize, j: usize) -> &[i64] {
        &self.mu[i - 1][j - 1]
    }

    /// Rank of μ as a map Λ²A¹ → A²; equals b₂ (μ is onto).
    pub fn mu_rank(&self) -> usize {
        let rows: Vec<Vec<BigInt>> = (1..=self.n)
            .flat_map(|i| (i + 1..=self.n).map(move |j| (i, j)))
            .map(|(i, j)| self.mu_row(i, j).iter().map(|&c| BigInt::from(c)).collect())
            .collect();
        smith_invariant_factors(&rows)
            .iter()
            .filter(|d| !d.is_zero())
            .count()
    }

    pub fn e_label(&self, i: usize) -> String {
        format!("e{i}")
    }

    pub fn f_label(&self, k: usize) -> String {
        let (i, j) = self.pairs[k];
        format!("f{i}_{j}")
    }
}

/// The Orlik–Solomon algebra of the decone of `arr` in degrees ≤ 2, with
/// the multiplication tensor computed from the intersection lattice.
pub fn os_algebra(arr: &Arrangement) -> OSAlgebra {
    let n = arr.n();
    let pairs = arr.nbc2();
    let index: BTreeMap<(usize, usize), usize> = pairs
        .iter()
        .enumerate()
        .map(|(idx, &p)| (p, idx))
        .collect();
    let b2 = pairs.len();
    let mut mu = vec![vec![vec![0i64; b2]; n]; n];
    for i in 1..=n {
        for j in (i + 1)..=n {
            let point = arr.point_through(i, j);
            let mut row = vec![0i64; b2];
            if !point.on_line(0) {
                let k = *point
                    .lines
                    .iter()
                    .find(|&&l| l >= 1)
                    .expect("an off-infinity point lies on a decone line");
                if k == i {
                    row[index[&(i, j)]] = 1;
                } else {
                    row[index[&(k, j)]] = 1;
                    row[index[&(k, i)]] = -1;
                }
            }
            for k in 0..b2 {
                mu[i - 1][j - 1][k] = row[k];
                mu[j - 1][i - 1][k] = -row[k];
            }
        }
    }
    let os = OSAlgebra { n, pairs, mu };
    debug_assert_eq!(os.mu_rank(), os.b2(), "the multiplication map is onto");
    os
}

/// The graded double Â = A ⊕ Ā of the Orlik–Solomon algebra: the cohomology
/// ring of the boundary manifold, with all multiplication tables in the
/// canonical bases.
#[derive(Clone, Debug)]
pub struct DoubledAlgebra {
    pub os: OSAlgebra,
    /// Product Â¹ ⊗ Â¹ → Â²: `deg1_sq[p][q]` is the coefficient vector of
    /// the product of basis elements p, q of Â¹ in the basis of Â².
    pub deg1_sq: Vec<Vec<Vec<i64>>>,
    /// Pairing Â¹ ⊗ Â² → Â³ ≅ Z·ω: `deg1_deg2[p][q]` is the ω-coefficient
    /// of the product.
    pub deg1_deg2: Vec<Vec<i64>>,
}

impl DoubledAlgebra {
    /// Dimension of Â¹ (= dimension of Â²).
    pub fn dim1(&self) -> usize {
        self.os.n + self.os.b2()
    }

    /// Betti numbers (1, n+b₂, n+b₂, 1) of the boundary manifold.
    pub fn betti(&self) -> [usize; 4] {
        [1, self.dim1(), self.dim1(), 1]
    }

    /// Poincaré polynomial coefficients of the boundary manifold, index =
    /// degree.
    pub fn poincare_polynomial(&self) -> Vec<i64> {
        [1, self.dim1() as i64, self.dim1() as i64, 1].to_vec()
    }

    /// Labels of the degree-1 basis: e₁..e_n then f̄ in nbc₂ order.
    pub fn deg1_labels(&self) -> Vec<String> {
        let mut out: Vec<String> = (1..=self.os.n).map(|i| self.os.e_label(i)).collect();
        for k in 0..self.os.b2() {
            out.push(format!("{}~", self.os.f_label(k)));
        }
        out
    }

    /// Labels of the degree-2 basis: f in nbc₂ order, then ē₁..ē_n.
    pub fn deg2_labels(&self) -> Vec<String> {
        let mut out: Vec<String> = (0..self.os.b2()).map(|k| self.os.f_label(k)).collect();
        for i in 1..=self.os.n {
            out.push(format!("{}~", self.os.e_label(i)));
        }
        out
    }
}

/// The graded double of an Orlik–Solomon algebra, with its multiplication
/// tables: on A¹⊗A¹ the product is μ; on A¹⊗Ā² it is
/// μ̂(e_j, f̄_k) = Σ_i μ_{i,j,k} ē_i; Ā²⊗Ā² vanishes; and the degree-(1,2)
/// pairing evaluates dual elements on their partners.
pub fn double(os: OSAlgebra) -> DoubledAlgebra {
    let n = os.n;
    let b2 = os.b2();
    let d1 = n + b2;
    let mut deg1_sq = vec![vec![vec![0i64; d1]; d1]; d1];
    for i in 1..=n {
        for j in 1..=n {
            if i == j {
                continue;
            }
            // e_i · e_j lands in the f-block of Â².
            for k in 0..b2 {
                deg1_sq[i - 1][j - 1][k] = os.mu[i - 1][j - 1][k];
            }
        }
    }
    for j in 1..=n {
        for k in 0..b2 {
            // e_j · f̄_k = Σ_i μ_{i,j,k} ē_i, and f̄_k · e_j its negative.
            for i in 1..=n {
                let c = os.mu[i - 1][j - 1][k];
                deg1_sq[j - 1][n + k][b2 + i - 1] = c;
                deg1_sq[n + k][j - 1][b2 + i - 1] = -c;
            }
        }
    }
    let mut deg1_deg2 = vec![vec![0i64; d1]; d1];
    for j in 1..=n {
        // e_j · ē_i = δ_{ij} ω.
        deg1_deg2[j - 1][b2 + j - 1] = 1;
    }
    for k in 0..b2 {
        // f̄_k · f_{k'} = δ_{k,k'} ω.
        deg1_deg2[n + k][k] = 1;
    }
    DoubledAlgebra {
        os,
        deg1_sq,
        deg1_deg2,
    }
}

/// Whether Â is a Poincaré-duality algebra of formal dimension 3: the
/// pairings Â^k ⊗ Â^{3−k} → Â³ must be unimodular over Z for k = 0, 1.
pub fn pd_check(a: &DoubledAlgebra) -> bool {
    // k = 0: Â⁰ ⊗ Â³ → Â³ is 1·ω ↦ ω.
    let deg0: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    if !unimodular(&deg0, 1) {
        return false;
    }
    let rows: Vec<Vec<BigInt>> = a
        .deg1_deg2
        .iter()
        .map(|r| r.iter().map(|&c| BigInt::from(c)).collect())
        .collect();
    unimodular(&rows, a.dim1())
}

fn unimodular(rows: &[Vec<BigInt>], expected_rank: usize) -> bool {
    let factors = smith_invariant_factors(rows);
    factors.len() >= expected_rank
        && factors.iter().take(expected_rank).all(|d| d.is_one())
        && factors.iter().skip(expected_rank).all(|d| d.is_zero())
}

/// Whether the degree-1 part generates Â: the products of degree-1 basis
/// elements must span Â² over Z.  True exactly when the arrangement is not
/// a pencil.
pub fn generated_in_degree_one(a: &DoubledAlgebra) -> bool {
    let d1 = a.dim1();
    let rows: Vec<Vec<BigInt>> = (0..d1)
        .flat_map(|p| (p + 1..d1).map(move |q| (p, q)))
        .map(|(p, q)| {
            a.deg1_sq[p][q]
                .iter()
                .map(|&c| BigInt::from(c))
                .collect()
        })
        .collect();
    unimodular(&rows, d1)
}

/// An alternating integer 3-form on Â¹, stored on strictly increasing index
/// triples of the degree-1 basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeForm {
    /// Dimension of Â¹.
    pub dim: usize,
    coeffs: BTreeMap<(usize, usize, usize), i64>,
}

impl ThreeForm {
    pub fn new(dim: usize) -> Self {
        ThreeForm {
            dim,
            coeffs: BTreeMap::new(),
        }
    }

    /// Add `c · (x_p ∧ x_q ∧ x_r)`; the triple is sorted with the sign of
    /// the permutation, and repeated indices contribute nothing.
    pub fn add_term(&mut self, p: usize, q: usize, r: usize, c: i64) {
        if p == q || q == r || p == r || c == 0 {
            return;
        }
        let (mut t, mut sign) = ([p, q, r], 1i64);
        // Three-element sort, tracking the permutation sign.
        for a in 0..2 {
            for b in 0..2 - a {
                if t[b] > t[b + 1] {
                    t.swap(b, b + 1);
                    sign = -sign;
                }
            }
        }
        let entry = self.coeffs.entry((t[0], t[1], t[2])).or_insert(0);
        *entry += sign * c;
        if *entry == 0 {
            self.coeffs.remove(&(t[0], t[1], t[2]));
        }
    }

    /// Coefficient of x_p ∧ x_q ∧ x_r for any index order.
    pub fn coefficient(&self, p: usize, q: usize, r: usize) -> i64 {
        if p == q || q == r || p == r {
            return 0;
        }
        let (mut t, mut sign) = ([p, q, r], 1i64);
        for a in 0..2 {
            for b in 0..2 - a {
                if t[b] > t[b + 1] {
                    t.swap(b, b + 1);
                    sign = -sign;
                }
            }
        }
        sign * self.coeffs.get(&(t[0], t[1], t[2])).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Trilinear evaluation on coefficient vectors.
    pub fn evaluate(&self, u: &[i64], v: &[i64], w: &[i64]) -> i64 {
        let mut total = 0i64;
        for (&(p, q, r), &c) in &self.coeffs {
            // Expand the determinant of the 3×3 minor on coordinates p,q,r.
            let det = u[p] * (v[q] * w[r] - v[r] * w[q]) - u[q] * (v[p] * w[r] - v[r] * w[p])
                + u[r] * (v[p] * w[q] - v[q] * w[p]);
            total += c * det;
        }
        total
    }

    /// Sorted (label, label, label, coefficient) records on increasing
    /// triples.
    pub fn records(&self, labels: &[String]) -> Vec<(String, String, String, i64)> {
        self.coeffs
            .iter()
            .map(|(&(p, q, r), &c)| {
                (
                    labels[p].clone(),
                    labels[q].clone(),
                    labels[r].clone(),
                    c,
                )
            })
            .collect()
    }

    /// The Eq.-style expansion Σ_{i<j} Σ_k μ_{i,j,k} e_i ∧ e_j ∧ f̄_k.
    pub fn from_mu(os: &OSAlgebra) -> ThreeForm {
        let n = os.n;
        let mut form = ThreeForm::new(n + os.b2());
        for i in 1..=n {
            for j in (i + 1)..=n {
                for k in 0..os.b2() {
                    form.add_term(i - 1, j - 1, n + k, os.mu[i - 1][j - 1][k]);
                }
            }
        }
        form
    }
}

/// The 3-form η_M = Σ_{(i,k) ∈ nbc₂} e_{I(i,k)} ∧ e_k ∧ f̄_{i,k} on the
/// degree-1 basis of the double (e₁..e_n, then f̄ in nbc₂ order).
pub fn eta_form(arr: &Arrangement) -> ThreeForm {
    let n = arr.n();
    let pairs = arr.nbc2();
    let mut form = ThreeForm::new(n + pairs.len());
    for (idx, &(i, k)) in pairs.iter().enumerate() {
        for j in arr.incident_set(i, k) {
            form.add_term(j - 1, k - 1, n + idx, 1);
        }
    }
    debug_assert_eq!(
        form,
        ThreeForm::from_mu(&os_algebra(arr)),
        "the two expansions of the 3-form agree"
    );
    form
}

/// Classification helper: the double is generated in degree 1 exactly for
/// non-pencils, so expose the expectation for cross-checks.
pub fn expected_generated(arr: &Arrangement) -> bool {
    arr.arrangement_class().class != ArrClass::Pencil
}
