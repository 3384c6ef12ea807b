//! Exact dense linear algebra over a field, Smith normal form over Z,
//! a phase-1 simplex oracle for linear feasibility, and a sparse integer
//! row-echelon accumulator.
//!
//! Sizes in this crate are small (tens of rows); all routines favor
//! simplicity and exactness over asymptotics.

use std::collections::BTreeMap;

use num::bigint::BigInt;
use num::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{Field, Rat};

/// Dense matrix over an exact field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mat<F> {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<Vec<F>>,
}

impl<F: Field> Mat<F> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            a: vec![vec![F::zero(); cols]; rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.a[i][i] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Internal("ragged matrix rows".into()));
        }
        Ok(Mat {
            rows: r,
            cols: c,
            a: rows,
        })
    }

    pub fn transpose(&self) -> Self {
        let mut t = Mat::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.a[j][i] = self.a[i][j].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::VarMismatch(self.cols, other.rows));
        }
        let mut m: Mat<F> = Mat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                if self.a[i][k].is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let t = self.a[i][k].clone() * other.a[k][j].clone();
                    m.a[i][j] = m.a[i][j].clone() + t;
                }
            }
        }
        Ok(m)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    if i == j {
                        self.a[i][j].is_one()
                    } else {
                        self.a[i][j].is_zero()
                    }
                })
            })
    }

    /// Reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.a[i][c].is_zero()) else {
                continue;
            };
            m.a.swap(r, p);
            let inv = m.a[r][c].inv();
            for j in c..m.cols {
                m.a[r][j] = m.a[r][j].clone() * inv.clone();
            }
            for i in 0..m.rows {
                if i != r && !m.a[i][c].is_zero() {
                    let f = m.a[i][c].clone();
                    for j in c..m.cols {
                        let t = f.clone() * m.a[r][j].clone();
                        m.a[i][j] = m.a[i][j].clone() - t;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug = Mat::zero(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug.a[i][j] = self.a[i][j].clone();
            }
            aug.a[i][n + i] = F::one();
        }
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(k, &c)| c != k) {
            return None;
        }
        let mut inv = Mat::zero(n, n);
        for i in 0..n {
            for j in 0..n {
                inv.a[i][j] = r.a[i][n + j].clone();
            }
        }
        Some(inv)
    }

    /// Basis of the right kernel `{x : M x = 0}`.
    pub fn kernel_basis(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let piv_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if piv_set.contains(&free) {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -r.a[row][free].clone();
            }
            basis.push(v);
        }
        basis
    }
}

/// Nonzero invariant factors `d₁ | d₂ | …` of an integer matrix.
///
/// The matrix is reduced by elementary row and column operations; the
/// returned list is the diagonal of the Smith normal form restricted to its
/// nonzero entries, each normalized to be positive.
pub fn smith_invariant_factors(input: &[Vec<BigInt>]) -> Vec<BigInt> {
    let rows = input.len();
    let cols = input.first().map_or(0, |r| r.len());
    let mut m: Vec<Vec<BigInt>> = input.to_vec();
    let mut diag: Vec<BigInt> = Vec::new();
    let mut t = 0usize;
    while t < rows.min(cols) {
        // Locate a nonzero entry of minimal absolute value in the active block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero()
                    && best
                        .map(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                        .unwrap_or(true)
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else {
            break;
        };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        // Clear row t and column t; restart whenever a remainder shrinks the pivot.
        loop {
            let mut clean = true;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = div_round(&m[i][t], &m[t][t]);
                for j in t..cols {
                    let s = &q * &m[t][j];
                    m[i][j] -= s;
                }
                if !m[i][t].is_zero() {
                    m.swap(t, i);
                    clean = false;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = div_round(&m[t][j], &m[t][t]);
                for row in m.iter_mut().take(rows).skip(t) {
                    let s = &q * &row[t];
                    row[j] -= s;
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    // Enforce the divisibility chain d₁ | d₂ | … by gcd/lcm exchanges.
    let n = diag.len();
    loop {
        let mut changed = false;
        for i in 0..n.saturating_sub(1) {
            for j in i + 1..n {
                if (&diag[j] % &diag[i]).is_zero() {
                    continue;
                }
                let g = diag[i].gcd(&diag[j]);
                let l = (&diag[i] / &g) * &diag[j];
                diag[i] = g;
                diag[j] = l;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    diag
}

/// Round-to-nearest integer division (minimizes the remainder's absolute value).
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if BigInt::from(2) * r.abs() > b.abs() {
        if r.sign() == b.sign() {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Relation of a linear constraint row.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rel {
    Ge,
    Eq,
}

/// Exact feasibility test for `{ x : aᵣ·x ⟨relᵣ⟩ bᵣ }` via a phase-1 simplex
/// with Bland's anti-cycling rule.  When `nonneg` is false the variables are
/// free (internally split as differences of nonnegative variables).
pub fn feasible(n_vars: usize, rows: &[(Vec<Rat>, Rel, Rat)], nonneg: bool) -> bool {
    let m = rows.len();
    if m == 0 {
        return true;
    }
    let ny = if nonneg { n_vars } else { 2 * n_vars };
    let n_slack: usize = rows.iter().filter(|r| r.1 == Rel::Ge).count();
    let total = ny + n_slack + m; // structural + slack + artificial
    let mut tab: Vec<Vec<Rat>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rat> = Vec::with_capacity(m);
    let mut slack_idx = 0usize;
    for (r, (coeffs, rel, b)) in rows.iter().enumerate() {
        assert_eq!(coeffs.len(), n_vars, "constraint arity mismatch");
        let mut row = vec![Rat::zero(); total];
        let flip = b < &Rat::zero();
        let sgn = if flip { -Rat::one() } else { Rat::one() };
        for (j, c) in coeffs.iter().enumerate() {
            if nonneg {
                row[j] = sgn.clone() * c.clone();
            } else {
                row[j] = sgn.clone() * c.clone();
                row[n_vars + j] = -sgn.clone() * c.clone();
            }
        }
        if *rel == Rel::Ge {
            // a·x − s = b (or negated when b < 0).
            row[ny + slack_idx] = -sgn.clone();
            slack_idx += 1;
        }
        row[ny + n_slack + r] = Rat::one();
        tab.push(row);
        rhs.push(if flip { -b.clone() } else { b.clone() });
    }
    // Objective: minimize the sum of artificials.  Maintain reduced costs.
    let mut obj = vec![Rat::zero(); total];
    let mut obj_rhs = Rat::zero();
    for j in 0..total {
        let mut s = Rat::zero();
        for row in tab.iter() {
            s += row[j].clone();
        }
        let c = if j >= ny + n_slack { Rat::one() } else { Rat::zero() };
        obj[j] = c - s;
    }
    for b in rhs.iter() {
        obj_rhs -= b.clone();
    }
    let mut basis: Vec<usize> = (0..m).map(|r| ny + n_slack + r).collect();
    loop {
        // Bland: entering = smallest index with negative reduced cost.
        let Some(enter) = (0..total).find(|&j| obj[j] < Rat::zero()) else {
            break;
        };
        // Ratio test; Bland tie-break on basis variable index.
        let mut leave: Option<usize> = None;
        let mut best: Option<Rat> = None;
        for i in 0..m {
            if tab[i][enter] > Rat::zero() {
                let ratio = rhs[i].clone() / tab[i][enter].clone();
                let better = match &best {
                    None => true,
                    Some(b) => {
                        ratio < *b || (ratio == *b && basis[i] < basis[leave.unwrap()])
                    }
                };
                if better {
                    best = Some(ratio);
                    leave = Some(i);
                }
            }
        }
        let Some(li) = leave else {
            // Phase-1 objective is bounded below by zero, so this is unreachable;
            // treat defensively as infeasible.
            return false;
        };
        // Pivot on (li, enter).
        let piv = tab[li][enter].clone();
        for j in 0..total {
            tab[li][j] = tab[li][j].clone() / piv.clone();
        }
        rhs[li] = rhs[li].clone() / piv.clone();
        for i in 0..m {
            if i != li && !tab[i][enter].is_zero() {
                let f = tab[i][enter].clone();
                for j in 0..total {
                    let t = f.clone() * tab[li][j].clone();
                    tab[i][j] = tab[i][j].clone() - t;
                }
                let t = f * rhs[li].clone();
                rhs[i] = rhs[i].clone() - t;
            }
        }
        if !obj[enter].is_zero() {
            let f = obj[enter].clone();
            for j in 0..total {
                let t = f.clone() * tab[li][j].clone();
                obj[j] = obj[j].clone() - t;
            }
            obj_rhs -= f * rhs[li].clone();
        }
        basis[li] = enter;
    }
    obj_rhs.is_zero()
}

/// Sparse integer row-echelon accumulator used for incremental rank
/// computations over Q (integer rows, content-reduced combinations).
#[derive(Default, Debug)]
pub struct IntEchelon {
    /// lead column → content-free sparse row with positive leading entry.
    pivots: BTreeMap<usize, Vec<(usize, BigInt)>>,
}

impl IntEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `row` against the echelon and insert the remainder if nonzero.
    /// Returns true when the rank grew.
    pub fn insert(&mut self, mut row: Vec<(usize, BigInt)>) -> bool {
        row.retain(|(_, v)| !v.is_zero());
        loop {
            row.sort_by_key(|(c, _)| *c);
            let Some(&(lead, ref lv)) = row.first() else {
                return false;
            };
            let lv = lv.clone();
            match self.pivots.get(&lead) {
                None => {
                    normalize_int_row(&mut row);
                    self.pivots.insert(lead, row);
                    return true;
                }
                Some(p) => {
                    let pv = p[0].1.clone();
                    let g = pv.gcd(&lv);
                    let (ca, cb) = (&pv / &g, &lv / &g);
                    row = combine_sparse(&row, &ca, p, &cb);
                }
            }
        }
    }
}

/// `a*ca − b*cb` on sorted sparse rows, content-reduced.
fn combine_sparse(
    a: &[(usize, BigInt)],
    ca: &BigInt,
    b: &[(usize, BigInt)],
    cb: &BigInt,
) -> Vec<(usize, BigInt)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < a.len() || j < b.len() {
        match (a.get(i), b.get(j)) {
            (Some(&(c1, ref v1)), Some(&(c2, ref v2))) => {
                use std::cmp::Ordering::*;
                match c1.cmp(&c2) {
                    Less => {
                        out.push((c1, ca * v1));
                        i += 1;
                    }
                    Greater => {
                        out.push((c2, -(cb * v2)));
                        j += 1;
                    }
                    Equal => {
                        let v = ca * v1 - cb * v2;
                        if !v.is_zero() {
                            out.push((c1, v));
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
            (Some(&(c1, ref v1)), None) => {
                out.push((c1, ca * v1));
                i += 1;
            }
            (None, Some(&(c2, ref v2))) => {
                out.push((c2, -(cb * v2)));
                j += 1;
            }
            (None, None) => unreachable!(),
        }
    }
    let mut out = out;
    normalize_int_row(&mut out);
    out
}

/// Divide by the content and make the leading entry positive.
fn normalize_int_row(row: &mut Vec<(usize, BigInt)>) {
    row.retain(|(_, v)| !v.is_zero());
    if row.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        g = g.gcd(v);
    }
    if row[0].1.sign() == num::bigint::Sign::Minus {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in row.iter_mut() {
            *v = &*v / &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, ratio};

    fn qmat(rows: &[&[i64]]) -> Mat<Rat> {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect())
            .unwrap()
    }

    #[test]
    fn rank_and_kernel_of_a_rank_deficient_matrix() {
        let m = qmat(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 1);
        for row in &m.a {
            let s: Rat = row
                .iter()
                .zip(&k[0])
                .map(|(a, b)| a.clone() * b.clone())
                .fold(rat(0), |acc, x| acc + x);
            assert_eq!(s, rat(0));
        }
    }

    #[test]
    fn rref_produces_unit_pivots() {
        let m = qmat(&[&[0, 2], &[3, 1]]);
        let (r, p) = m.rref();
        assert_eq!(p, vec![0, 1]);
        assert!(r.is_identity());
    }

    #[test]
    fn smith_form_detects_torsion_and_rank() {
        // Content 2, determinant 24: invariant factors 2 | 12.
        let m = vec![
            vec![BigInt::from(2), BigInt::from(4)],
            vec![BigInt::from(-2), BigInt::from(8)],
        ];
        let d = smith_invariant_factors(&m);
        assert_eq!(d, vec![BigInt::from(2), BigInt::from(12)]);
    }

    #[test]
    fn smith_form_of_unimodular_pairing_is_all_ones() {
        let m = vec![
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(0)],
        ];
        assert_eq!(
            smith_invariant_factors(&m),
            vec![BigInt::from(1), BigInt::from(1)]
        );
    }

    #[test]
    fn simplex_separates_feasible_from_infeasible_cones() {
        // x > 0 and x < 0 simultaneously: infeasible.
        let rows = vec![
            (vec![rat(1)], Rel::Ge, rat(1)),
            (vec![rat(-1)], Rel::Ge, rat(1)),
        ];
        assert!(!feasible(1, &rows, false));
        // A full-dimensional chamber in the plane.
        let rows = vec![
            (vec![rat(1), rat(0)], Rel::Ge, rat(1)),
            (vec![rat(0), rat(1)], Rel::Ge, rat(1)),
            (vec![rat(1), rat(1)], Rel::Ge, rat(1)),
        ];
        assert!(feasible(2, &rows, false));
    }

    #[test]
    fn simplex_handles_equalities_with_nonneg_variables() {
        // Convex combination reaching an interior point: feasible.
        let rows = vec![
            (vec![rat(0), rat(1)], Rel::Eq, ratio(1, 2)),
            (vec![rat(1), rat(1)], Rel::Eq, rat(1)),
        ];
        assert!(feasible(2, &rows, true));
        // Convex combination reaching a point outside the hull: infeasible.
        let rows = vec![
            (vec![rat(0), rat(1)], Rel::Eq, rat(2)),
            (vec![rat(1), rat(1)], Rel::Eq, rat(1)),
        ];
        assert!(!feasible(2, &rows, true));
    }

    #[test]
    fn integer_echelon_accumulates_rank_with_content_reduction() {
        let mut e = IntEchelon::new();
        assert!(e.insert(vec![(0, BigInt::from(2)), (2, BigInt::from(4))]));
        assert!(!e.insert(vec![(0, BigInt::from(3)), (2, BigInt::from(6))]));
        assert!(e.insert(vec![(1, BigInt::from(5))]));
        assert_eq!(e.rank(), 2);
    }
}
