//! Resonance varieties of the doubled algebra via symbolic matrices,
//! tangent-cone comparison with the first characteristic variety, and the
//! formality verdict.
//!
//! With μ the structure tensor of the Orlik–Solomon algebra, the linear
//! forms Θ_{j,k} = Σ_i μ_{i,j,k} x_i assemble into a b₁×b₂ matrix Θ whose
//! rank at a point governs resonance of the complement:
//! a ∈ R¹_d(A) iff b₁ − 1 − rank Θ(a) ≥ d, equivalently iff all minors
//! of size b₁ − d vanish at a.  For the boundary manifold the relevant
//! matrix is the skew-symmetric block matrix
//!
//!   Θ̂ = [[Φ, Θ], [−Θᵀ, 0]],   Φ_{i,j} = Σ_k μ_{i,j,k} y_k,
//!
//! of size (b₁+b₂)×(b₁+b₂) over the variables x₁..x_{b₁}, y₁..y_{b₂},
//! and a ∈ R¹_d(Â) iff (b₁+b₂) − 1 − rank Θ̂(a) ≥ d.  The first
//! resonance variety obeys a trichotomy: it is C^n for a pencil,
//! C^{2(n−1)} for a near-pencil, and all of C^{b₁+b₂} otherwise.
//!
//! The boundary manifold is formal exactly when the arrangement is a
//! pencil or a near-pencil.  For every other arrangement the tangent cone
//! to the first characteristic variety — a finite union of hyperplanes
//! {Σ_{i∈v} λ_i = 0}, the logarithms of the codimension-one subtori — is
//! a proper subset of R¹₁, and a rational witness point lying in R¹₁ but
//! on no hyperplane certifies the mismatch.

use num_traits::{One, Zero};

use crate::alexander::characteristic_variety_v11;
use crate::arrangement::{ArrClass, Arrangement};
use crate::cohomology::{os_algebra, OSAlgebra};
use crate::error::{Error, Result};
use crate::graph::build_graph;
use crate::laurent::{self, LaurentPoly};
use crate::matrix::Mat;
use crate::scalar::{sample_nonzero_rat, seeded_rng, Rat};

/// A linear form as its coefficient vector.
pub type LinearForm = Vec<i64>;

/// Default cap on the number of symbolic minors generated at once.
pub const ED_MINOR_CAP: usize = 200_000;

fn dot(form: &[i64], point: &[Rat]) -> Rat {
    let mut acc = Rat::zero();
    for (c, p) in form.iter().zip(point) {
        if *c != 0 {
            acc += Rat::from_integer((*c).into()) * p.clone();
        }
    }
    acc
}

fn render_form(form: &[i64], names: &dyn Fn(usize) -> String) -> String {
    let mut out = String::new();
    for (i, &c) in form.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let name = names(i);
        if out.is_empty() {
            match c {
                1 => out.push_str(&name),
                -1 => out.push_str(&format!("-{name}")),
                _ => out.push_str(&format!("{c}*{name}")),
            }
        } else {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if mag == 1 {
                out.push_str(&format!(" {sign} {name}"));
            } else {
                out.push_str(&format!(" {sign} {mag}*{name}"));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn xy_name(b1: usize) -> impl Fn(usize) -> String {
    move |i| {
        if i < b1 {
            format!("x{}", i + 1)
        } else {
            format!("y{}", i + 1 - b1)
        }
    }
}

/// The b₁×b₂ matrix of linear forms Θ_{j,k} = Σ_i μ_{i,j,k} x_i over the
/// variables x₁..x_{b₁}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThetaMatrix {
    pub b1: usize,
    pub b2: usize,
    /// `entries[j][k]` = coefficient vector of length b₁.
    pub entries: Vec<Vec<LinearForm>>,
}

impl ThetaMatrix {
    /// Evaluate at a point of C^{b₁}.
    pub fn evaluate(&self, x: &[Rat]) -> Result<Mat<Rat>> {
        if x.len() != self.b1 {
            return Err(Error::VarMismatch(x.len(), self.b1));
        }
        let rows: Vec<Vec<Rat>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|f| dot(f, x)).collect())
            .collect();
        Mat::from_rows(rows)
    }

    pub fn rank_at(&self, x: &[Rat]) -> Result<usize> {
        Ok(self.evaluate(x)?.rank())
    }

    /// Entries as readable strings.
    pub fn render(&self) -> Vec<Vec<String>> {
        let name = |i: usize| format!("x{}", i + 1);
        self.entries
            .iter()
            .map(|row| row.iter().map(|f| render_form(f, &name)).collect())
            .collect()
    }
}

/// Build Θ from the Orlik–Solomon structure tensor.
pub fn theta(os: &OSAlgebra) -> ThetaMatrix {
    let b1 = os.n;
    let b2 = os.b2();
    let mut entries = vec![vec![vec![0i64; b1]; b2]; b1];
    for j in 0..b1 {
        for k in 0..b2 {
            for i in 0..b1 {
                entries[j][k][i] = os.mu[i][j][k];
            }
        }
    }
    ThetaMatrix { b1, b2, entries }
}

/// The (b₁+b₂)×(b₁+b₂) block matrix [[Φ, Θ], [−Θᵀ, 0]] of linear forms
/// over x₁..x_{b₁}, y₁..y_{b₂}, with Φ_{i,j} = Σ_k μ_{i,j,k} y_k.  The
/// whole matrix is skew-symmetric, so its rank at any point is even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockTheta {
    pub b1: usize,
    pub b2: usize,
    /// `entries[r][c]` = coefficient vector of length b₁+b₂ (x's then y's).
    pub entries: Vec<Vec<LinearForm>>,
}

impl BlockTheta {
    pub fn size(&self) -> usize {
        self.b1 + self.b2
    }

    /// Evaluate at a point of C^{b₁+b₂} (x-coordinates then y-coordinates).
    pub fn evaluate(&self, point: &[Rat]) -> Result<Mat<Rat>> {
        if point.len() != self.size() {
            return Err(Error::VarMismatch(point.len(), self.size()));
        }
        let rows: Vec<Vec<Rat>> = self
            .entries
            .iter()
            .map(|row| row.iter().map(|f| dot(f, point)).collect())
            .collect();
        Mat::from_rows(rows)
    }

    pub fn rank_at(&self, point: &[Rat]) -> Result<usize> {
        Ok(self.evaluate(point)?.rank())
    }

    /// Entries as readable strings.
    pub fn render(&self) -> Vec<Vec<String>> {
        let name = xy_name(self.b1);
        self.entries
            .iter()
            .map(|row| row.iter().map(|f| render_form(f, &name)).collect())
            .collect()
    }
}

/// Build Θ̂ from the Orlik–Solomon structure tensor.
pub fn theta_double(os: &OSAlgebra) -> BlockTheta {
    let b1 = os.n;
    let b2 = os.b2();
    let nv = b1 + b2;
    let mut entries = vec![vec![vec![0i64; nv]; nv]; nv];
    for i in 0..b1 {
        // Φ block: Φ_{i,j} = Σ_k μ_{i,j,k} y_k.
        for j in 0..b1 {
            for k in 0..b2 {
                entries[i][j][b1 + k] = os.mu[i][j][k];
            }
        }
        // Θ block and its negated transpose.
        for k in 0..b2 {
            for ii in 0..b1 {
                entries[i][b1 + k][ii] = os.mu[ii][i][k];
                entries[b1 + k][i][ii] = -os.mu[ii][i][k];
            }
        }
    }
    debug_assert!({
        let bt = BlockTheta {
            b1,
            b2,
            entries: entries.clone(),
        };
        (0..nv).all(|r| {
            (0..nv).all(|c| {
                bt.entries[r][c]
                    .iter()
                    .zip(&bt.entries[c][r])
                    .all(|(a, b)| *a == -*b)
            })
        })
    });
    BlockTheta { b1, b2, entries }
}

fn require_nonzero(point: &[Rat]) -> Result<()> {
    if point.iter().all(|p| p.is_zero()) {
        return Err(Error::ZeroVector);
    }
    Ok(())
}

/// Membership of a nonzero point in R¹_d(Â): the cochain-complex rank
/// formula (b₁+b₂) − 1 − rank Θ̂(point) ≥ d.
pub fn resonance_membership(bt: &BlockTheta, point: &[Rat], d: usize) -> Result<bool> {
    require_nonzero(point)?;
    let rank = bt.rank_at(point)?;
    Ok(bt.size() - 1 - rank >= d)
}

/// Membership of a nonzero point in R¹_d(A) for the complement algebra:
/// b₁ − 1 − rank Θ(point) ≥ d.
pub fn complement_membership(th: &ThetaMatrix, x: &[Rat], d: usize) -> Result<bool> {
    require_nonzero(x)?;
    let rank = th.rank_at(x)?;
    Ok(th.b1 - 1 - rank >= d)
}

/// The first-resonance trichotomy value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct R11Report {
    pub class: ArrClass,
    /// Dimension of R¹₁ as an affine subvariety of C^{b₁+b₂}.
    pub dimension: usize,
    /// Ambient dimension b₁+b₂.
    pub ambient: usize,
}

impl R11Report {
    pub fn render(&self) -> String {
        format!("C^{}", self.dimension)
    }

    pub fn is_full(&self) -> bool {
        self.dimension == self.ambient
    }
}

/// R¹₁ of the doubled algebra: C^n for a pencil, C^{2(n−1)} for a
/// near-pencil, all of C^{b₁+b₂} otherwise.
pub fn r11(arr: &Arrangement) -> Result<R11Report> {
    let n = arr.n();
    if n < 2 {
        return Err(Error::InvalidArrangement(
            "the resonance trichotomy needs at least three lines".into(),
        ));
    }
    let os = os_algebra(arr);
    let ambient = os.n + os.b2();
    let class = arr.arrangement_class().class;
    let dimension = match class {
        ArrClass::Pencil => n,
        ArrClass::NearPencil => 2 * (n - 1),
        ArrClass::General => ambient,
    };
    Ok(R11Report {
        class,
        dimension,
        ambient,
    })
}

fn linear_entry_poly(nvars: usize, form: &[i64]) -> LaurentPoly<Rat> {
    LaurentPoly::from_terms(
        nvars,
        form.iter().enumerate().filter(|(_, c)| **c != 0).map(|(i, c)| {
            let mut e = vec![0i64; nvars];
            e[i] = 1;
            (e, Rat::from_integer((*c).into()))
        }),
    )
}

fn size_s_subsets(n: usize, s: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..s).collect();
    if s > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        // Advance the lexicographically-ordered index set.
        let mut i = s;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + n - s {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in (i + 1)..s {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

fn minors_of_linear_matrix(
    entries: &[Vec<LinearForm>],
    nvars: usize,
    size: usize,
    cap: usize,
) -> Result<Vec<LaurentPoly<Rat>>> {
    let rows = entries.len();
    let cols = entries.first().map_or(0, |r| r.len());
    if size == 0 {
        return Ok(vec![LaurentPoly::one(nvars)]);
    }
    if size > rows || size > cols {
        return Ok(Vec::new());
    }
    let row_sets = size_s_subsets(rows, size);
    let col_sets = size_s_subsets(cols, size);
    let count = row_sets.len().saturating_mul(col_sets.len());
    if count > cap {
        return Err(Error::CapExceeded(format!(
            "{count} minors of size {size} requested, cap is {cap}"
        )));
    }
    let polys: Vec<Vec<LaurentPoly<Rat>>> = entries
        .iter()
        .map(|row| row.iter().map(|f| linear_entry_poly(nvars, f)).collect())
        .collect();
    let mut out = Vec::with_capacity(count);
    for rs in &row_sets {
        for cs in &col_sets {
            let sub: Vec<Vec<LaurentPoly<Rat>>> = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| polys[r][c].clone()).collect())
                .collect();
            out.push(laurent::det(&sub)?);
        }
    }
    Ok(out)
}

/// Generators of E_d(Θ̂): all minors of size (b₁+b₂) − d, as polynomials
/// in x₁..x_{b₁}, y₁..y_{b₂}.  Their common zero locus is R¹_d(Â).
pub fn ed_minors_double(
    bt: &BlockTheta,
    d: usize,
    cap: usize,
) -> Result<Vec<LaurentPoly<Rat>>> {
    if d > bt.size() {
        return Err(Error::InvalidArrangement(format!(
            "resonance depth {d} exceeds the ambient dimension {}",
            bt.size()
        )));
    }
    minors_of_linear_matrix(&bt.entries, bt.size(), bt.size() - d, cap)
}

/// Generators of E_d(Θ): all minors of size b₁ − d, as polynomials in
/// x₁..x_{b₁}.  Their common zero locus is R¹_d(A).
pub fn ed_minors_complement(
    th: &ThetaMatrix,
    d: usize,
    cap: usize,
) -> Result<Vec<LaurentPoly<Rat>>> {
    if d > th.b1 {
        return Err(Error::InvalidArrangement(format!(
            "resonance depth {d} exceeds the ambient dimension {}",
            th.b1
        )));
    }
    minors_of_linear_matrix(&th.entries, th.b1, th.b1 - d, cap)
}

/// Render a minor in the mixed variables x₁..x_{b₁}, y₁..y_{b₂}.
pub fn render_minor(p: &LaurentPoly<Rat>, b1: usize) -> String {
    let name = xy_name(b1);
    let mut out = String::new();
    for (e, c) in p.terms() {
        let mono: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| {
                if x == 1 {
                    name(i)
                } else {
                    format!("{}^{}", name(i), x)
                }
            })
            .collect();
        let mono = mono.join("*");
        let cs = c.to_string();
        let (sign, mag) = if cs.starts_with('-') {
            ("-", cs[1..].to_string())
        } else {
            ("+", cs)
        };
        let body = if mono.is_empty() {
            mag
        } else if mag == "1" {
            mono
        } else {
            format!("{mag}*{mono}")
        };
        if out.is_empty() {
            if sign == "-" {
                out.push('-');
            }
            out.push_str(&body);
        } else {
            out.push_str(&format!(" {sign} {body}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Why the boundary manifold is or is not formal.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormalityReason {
    Pencil,
    NearPencil,
    TangentConeMismatch,
}

impl FormalityReason {
    pub fn label(&self) -> &'static str {
        match self {
            FormalityReason::Pencil => "pencil",
            FormalityReason::NearPencil => "near-pencil",
            FormalityReason::TangentConeMismatch => "tangent-cone-mismatch",
        }
    }
}

/// Formality verdict with the tangent-cone evidence.
#[derive(Clone, Debug)]
pub struct FormalityReport {
    pub formal: bool,
    pub reason: FormalityReason,
    /// Subtorus monomials of V¹₁ over t₁..t_n.
    pub subtori: Vec<Vec<i64>>,
    /// Logarithms of the nontrivial subtori: linear forms on C^{b₁+b₂}
    /// (coefficients on the x-part; the y-part is unconstrained).
    pub tc_hyperplanes: Vec<LinearForm>,
    /// Set when a subtorus is the whole torus (pencils), making the
    /// tangent cone all of C^{b₁+b₂}.
    pub tc_is_full_space: bool,
    pub r11: R11Report,
    /// For the non-formal case: a point of R¹₁ on no tangent-cone
    /// hyperplane, witnessing TC₁(V¹₁) ⊊ R¹₁.
    pub witness: Option<Vec<Rat>>,
}

impl FormalityReport {
    /// The hyperplanes as readable equations.
    pub fn render_hyperplanes(&self) -> Vec<String> {
        let name = |i: usize| format!("l{}", i + 1);
        self.tc_hyperplanes
            .iter()
            .map(|f| format!("{} = 0", render_form(f, &name)))
            .collect()
    }
}

/// Formality of the boundary manifold: formal exactly for pencils and
/// near-pencils; otherwise the tangent cone to V¹₁ (a hyperplane union)
/// is a proper subset of R¹₁ = C^{b₁+b₂} and a witness point is returned.
pub fn formality(arr: &Arrangement) -> Result<FormalityReport> {
    let class = arr.arrangement_class().class;
    let report_r11 = r11(arr)?;
    let os = os_algebra(arr);
    let ambient = os.n + os.b2();
    let graph = build_graph(arr)?;
    let v11 = characteristic_variety_v11(arr, &graph);
    let mut tc_hyperplanes: Vec<LinearForm> = Vec::new();
    let mut tc_is_full_space = false;
    for sub in &v11.subtori {
        if sub.iter().all(|&e| e == 0) {
            tc_is_full_space = true;
            continue;
        }
        let mut form = vec![0i64; ambient];
        form[..os.n].copy_from_slice(sub);
        tc_hyperplanes.push(form);
    }
    let (formal, reason) = match class {
        ArrClass::Pencil => (true, FormalityReason::Pencil),
        ArrClass::NearPencil => (true, FormalityReason::NearPencil),
        ArrClass::General => (false, FormalityReason::TangentConeMismatch),
    };
    let witness = if formal {
        None
    } else {
        let bt = theta_double(&os);
        Some(mismatch_witness(&bt, &tc_hyperplanes)?)
    };
    Ok(FormalityReport {
        formal,
        reason,
        subtori: v11.subtori,
        tc_hyperplanes,
        tc_is_full_space,
        r11: report_r11,
        witness,
    })
}

/// A rational point in R¹₁ avoiding every tangent-cone hyperplane.  The
/// all-ones point works whenever the hyperplane forms are nonnegative
/// (they are: subtorus monomials orient to indicator vectors); seeded
/// random retries cover any remaining case.
fn mismatch_witness(bt: &BlockTheta, hyperplanes: &[LinearForm]) -> Result<Vec<Rat>> {
    let size = bt.size();
    let mut rng = seeded_rng(0x10c1);
    let mut candidate: Vec<Rat> = vec![Rat::one(); size];
    for _ in 0..32 {
        let off_cone = hyperplanes.iter().all(|h| !dot(h, &candidate).is_zero());
        if off_cone && resonance_membership(bt, &candidate, 1)? {
            return Ok(candidate);
        }
        candidate = (0..size).map(|_| sample_nonzero_rat(&mut rng)).collect();
    }
    Err(Error::Internal(
        "no tangent-cone mismatch witness found; the first resonance \
         variety does not look full"
            .into(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::corpus;
    use crate::scalar::rat;

    fn form(nv: usize, terms: &[(usize, i64)]) -> LinearForm {
        let mut f = vec![0i64; nv];
        for &(i, c) in terms {
            f[i] = c;
        }
        f
    }

    #[test]
    fn theta_of_three_general_position_lines_by_hand() {
        let os = os_algebra(&corpus::general_position(4));
        let th = theta(&os);
        assert_eq!((th.b1, th.b2), (3, 3));
        // Columns ordered (1,2), (1,3), (2,3).
        let want = vec![
            vec![form(3, &[(1, -1)]), form(3, &[(2, -1)]), form(3, &[])],
            vec![form(3, &[(0, 1)]), form(3, &[]), form(3, &[(2, -1)])],
            vec![form(3, &[]), form(3, &[(0, 1)]), form(3, &[(1, 1)])],
        ];
        assert_eq!(th.entries, want);
        assert_eq!(th.render()[0], vec!["-x2", "-x3", "0"]);
        assert_eq!(th.render()[2], vec!["0", "x1", "x2"]);
    }

    #[test]
    fn pencil_theta_is_empty_and_block_matrix_vanishes() {
        let os = os_algebra(&corpus::pencil(4));
        let th = theta(&os);
        assert_eq!((th.b1, th.b2), (3, 0));
        assert!(th.entries.iter().all(|row| row.is_empty()));
        let bt = theta_double(&os);
        assert_eq!(bt.size(), 3);
        assert!(bt
            .entries
            .iter()
            .all(|row| row.iter().all(|f| f.iter().all(|&c| c == 0))));
        // Every nonzero point resonates: rank 0 against size 3.
        let p = vec![rat(1), rat(2), rat(3)];
        assert!(resonance_membership(&bt, &p, 1).unwrap());
        assert!(resonance_membership(&bt, &p, 2).unwrap());
        assert!(!resonance_membership(&bt, &p, 3).unwrap());
    }

    #[test]
    fn block_matrix_is_skew_symmetric_with_pure_blocks() {
        for (name, arr) in corpus::standard_corpus() {
            let os = os_algebra(&arr);
            let bt = theta_double(&os);
            let (b1, nv) = (bt.b1, bt.size());
            for r in 0..nv {
                for c in 0..nv {
                    let lhs = &bt.entries[r][c];
                    let neg: LinearForm = bt.entries[c][r].iter().map(|&x| -x).collect();
                    assert_eq!(*lhs, neg, "{name} entry ({r},{c})");
                    // Φ block is y-pure, Θ block x-pure, lower-right zero.
                    if r < b1 && c < b1 {
                        assert!(lhs[..b1].iter().all(|&x| x == 0), "{name} Φ x-part");
                    } else if r >= b1 && c >= b1 {
                        assert!(lhs.iter().all(|&x| x == 0), "{name} corner");
                    } else {
                        assert!(lhs[b1..].iter().all(|&x| x == 0), "{name} Θ y-part");
                    }
                }
            }
        }
    }

    #[test]
    fn evaluated_rank_is_always_even() {
        let mut rng = seeded_rng(41);
        for arr in [
            corpus::near_pencil(4),
            corpus::general_position(5),
            corpus::falk_one(),
        ] {
            let bt = theta_double(&os_algebra(&arr));
            for _ in 0..3 {
                let p: Vec<Rat> = (0..bt.size())
                    .map(|_| sample_nonzero_rat(&mut rng))
                    .collect();
                assert_eq!(bt.rank_at(&p).unwrap() % 2, 0);
            }
        }
    }

    #[test]
    fn near_pencil_resonance_is_the_single_hyperplane() {
        // Θ̂ is 5×5; R¹₁ = C⁴ is cut out by x₁+x₂+x₃ = 0.
        let bt = theta_double(&os_algebra(&corpus::near_pencil(4)));
        assert_eq!(bt.size(), 5);
        let off = vec![rat(1), rat(1), rat(1), rat(1), rat(1)];
        assert_eq!(bt.rank_at(&off).unwrap(), 4);
        assert!(!resonance_membership(&bt, &off, 1).unwrap());
        let on = vec![rat(1), rat(-1), rat(0), rat(2), rat(5)];
        assert!(resonance_membership(&bt, &on, 1).unwrap());
        assert!(bt.rank_at(&on).unwrap() <= 2);
    }

    #[test]
    fn beta_bound_holds_at_random_points_of_general_arrangements() {
        let mut rng = seeded_rng(42);
        for (name, arr) in corpus::standard_corpus() {
            if arr.arrangement_class().class != ArrClass::General {
                continue;
            }
            let os = os_algebra(&arr);
            let (b1, b2) = (os.n, os.b2());
            assert!(b2 + 1 > b1, "{name} should have positive beta");
            let beta = b2 + 1 - b1;
            let bt = theta_double(&os);
            for _ in 0..5 {
                let p: Vec<Rat> = (0..bt.size())
                    .map(|_| sample_nonzero_rat(&mut rng))
                    .collect();
                for d in 1..=beta {
                    assert!(
                        resonance_membership(&bt, &p, d).unwrap(),
                        "{name} at depth {d}"
                    );
                }
            }
        }
    }

    #[test]
    fn local_complement_resonance_shifts_into_the_double() {
        // A point supported on the lines of a multiple point with zero sum
        // lies in R¹_d(A) for d up to multiplicity − 2, and (a, 0) then
        // lies in R¹_{d+β}(Â).
        for (arr, lines, depth) in [
            (corpus::falk_one(), vec![3usize, 4, 5], 1usize),
            (corpus::near_pencil(5), vec![1, 2, 3, 4], 2),
        ] {
            let os = os_algebra(&arr);
            let th = theta(&os);
            let mut a = vec![Rat::zero(); os.n];
            for (pos, &i) in lines.iter().enumerate() {
                a[i - 1] = if pos == 0 {
                    rat(-(lines.len() as i64 - 1))
                } else {
                    Rat::one()
                };
            }
            assert!(complement_membership(&th, &a, depth).unwrap());
            let beta = (1 + os.b2() as i64 - os.n as i64).max(0) as usize;
            let bt = theta_double(&os);
            let mut point = a.clone();
            point.extend(std::iter::repeat(Rat::zero()).take(os.b2()));
            assert!(resonance_membership(&bt, &point, depth + beta).unwrap());
        }
    }

    #[test]
    fn single_cycle_directions_resonate_maximally() {
        // At (0, δ_k) the block matrix collapses to Φ(δ_k), whose rank is
        // the rank of one μ 2-form; membership holds up to the shift b₂.
        let os = os_algebra(&corpus::falk_one());
        let bt = theta_double(&os);
        let (b1, b2) = (os.n, os.b2());
        let mut point = vec![Rat::zero(); b1 + b2];
        point[b1] = Rat::one();
        let rank = bt.rank_at(&point).unwrap();
        assert_eq!(rank, 2);
        let d = b1 - 1 - rank;
        assert!(resonance_membership(&bt, &point, d + b2).unwrap());
        assert!(!resonance_membership(&bt, &point, d + b2 + 1).unwrap());
    }

    #[test]
    fn trichotomy_values_across_the_corpus() {
        assert_eq!(r11(&corpus::pencil(4)).unwrap().render(), "C^3");
        assert!(r11(&corpus::pencil(4)).unwrap().is_full());
        assert_eq!(r11(&corpus::near_pencil(4)).unwrap().render(), "C^4");
        assert_eq!(r11(&corpus::near_pencil(6)).unwrap().render(), "C^8");
        let f1 = r11(&corpus::falk_one()).unwrap();
        assert_eq!(f1.render(), "C^13");
        assert!(f1.is_full());
        assert_eq!(r11(&corpus::two_pencils(3, 3)).unwrap().render(), "C^15");
        assert!(r11(&corpus::pencil(2)).is_err());
    }

    #[test]
    fn minors_vanish_exactly_where_the_rank_drops() {
        let bt = theta_double(&os_algebra(&corpus::near_pencil(4)));
        let minors = ed_minors_double(&bt, 1, ED_MINOR_CAP).unwrap();
        assert_eq!(minors.len(), 25);
        let on = vec![rat(1), rat(-1), rat(0), rat(2), rat(5)];
        assert!(minors
            .iter()
            .all(|m| m.is_zero() || m.eval_allow_zero(&on).is_zero()));
        let off = vec![rat(1), rat(1), rat(1), rat(1), rat(1)];
        assert!(minors
            .iter()
            .any(|m| !m.is_zero() && !m.eval_allow_zero(&off).is_zero()));
    }

    #[test]
    fn complement_minors_track_the_theta_rank() {
        let th = theta(&os_algebra(&corpus::general_position(4)));
        let minors = ed_minors_complement(&th, 1, ED_MINOR_CAP).unwrap();
        // 2×2 minors of a 3×3 matrix.
        assert_eq!(minors.len(), 9);
        let mut rng = seeded_rng(7);
        for _ in 0..4 {
            let x: Vec<Rat> = (0..3).map(|_| sample_nonzero_rat(&mut rng)).collect();
            let all_vanish = minors
                .iter()
                .all(|m| m.is_zero() || m.eval_allow_zero(&x).is_zero());
            assert_eq!(all_vanish, th.rank_at(&x).unwrap() < 2);
        }
    }

    #[test]
    fn minor_cap_is_enforced() {
        let bt = theta_double(&os_algebra(&corpus::falk_one()));
        assert!(matches!(
            ed_minors_double(&bt, 7, 1000),
            Err(Error::CapExceeded(_))
        ));
    }

    #[test]
    fn minor_rendering_uses_the_mixed_variables() {
        let os = os_algebra(&corpus::near_pencil(4));
        let bt = theta_double(&os);
        // Φ_{1,2} = Σ_k μ_{1,2,k} y_k = y₁ (the pair (1,2) row).
        let rendered = bt.render();
        assert_eq!(rendered[0][1], "y1");
        let p = linear_entry_poly(5, &bt.entries[0][1]);
        assert_eq!(render_minor(&p, 3), "y1");
    }

    #[test]
    fn membership_rejects_degenerate_points() {
        let bt = theta_double(&os_algebra(&corpus::near_pencil(4)));
        let zero = vec![Rat::zero(); 5];
        assert!(matches!(
            resonance_membership(&bt, &zero, 1),
            Err(Error::ZeroVector)
        ));
        let short = vec![Rat::one(); 3];
        assert!(matches!(
            resonance_membership(&bt, &short, 1),
            Err(Error::VarMismatch(3, 5))
        ));
    }

    #[test]
    fn formality_matches_the_classification() {
        for (name, arr) in corpus::standard_corpus() {
            let class = arr.arrangement_class().class;
            let report = formality(&arr).unwrap();
            assert_eq!(
                report.formal,
                class != ArrClass::General,
                "{name}"
            );
            match class {
                ArrClass::Pencil => {
                    assert_eq!(report.reason, FormalityReason::Pencil);
                    assert!(report.tc_is_full_space, "{name}");
                    assert!(report.r11.is_full(), "{name}");
                }
                ArrClass::NearPencil => {
                    assert_eq!(report.reason, FormalityReason::NearPencil);
                    assert_eq!(report.tc_hyperplanes.len(), 1, "{name}");
                    // The single hyperplane has the dimension of R¹₁.
                    assert_eq!(report.r11.dimension, report.r11.ambient - 1);
                }
                ArrClass::General => {
                    assert_eq!(report.reason, FormalityReason::TangentConeMismatch);
                    assert!(!report.tc_is_full_space, "{name}");
                    assert_eq!(
                        report.tc_hyperplanes.len(),
                        report.subtori.len(),
                        "{name}"
                    );
                    assert!(
                        report
                            .tc_hyperplanes
                            .iter()
                            .all(|h| h.iter().any(|&c| c != 0)),
                        "{name}: hyperplanes must be proper"
                    );
                    let witness = report.witness.as_ref().expect(name);
                    for h in &report.tc_hyperplanes {
                        assert!(!dot(h, witness).is_zero(), "{name}");
                    }
                    let bt = theta_double(&os_algebra(&arr));
                    assert!(resonance_membership(&bt, witness, 1).unwrap(), "{name}");
                }
            }
        }
    }

    #[test]
    fn near_pencil_tangent_cone_equation_is_the_full_sum() {
        let report = formality(&corpus::near_pencil(4)).unwrap();
        assert_eq!(report.render_hyperplanes(), vec!["l1 + l2 + l3 = 0"]);
        assert_eq!(report.subtori, vec![vec![1, 1, 1]]);
    }
}
