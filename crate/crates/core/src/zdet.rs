//! Fast fraction-free elimination for matrices of integer Laurent
//! polynomials, used by the minor-gcd Alexander oracle.
//!
//! Bareiss intermediate entries are true minors of the input, so on an
//! integer-coefficient matrix every division is exact over `Z[t]`.  This
//! module packs exponent vectors into a single `u64` (per-variable bit
//! fields sized from a priori degree bounds — a minor's degree in `t_i` is
//! at most the sum over rows of the row's maximal `t_i`-degree, and a
//! product of two minors at most twice that) and stores polynomials as flat
//! coefficient vectors sorted by packed key, avoiding the tree maps and
//! rational normalization of the generic representation.  Coefficients are
//! `i128` with checked arithmetic; on overflow the elimination restarts
//! with big integers, and when the exponent bounds do not fit in 64 bits
//! the caller's generic path takes over.

use num::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::scalar::Rat;

/// Exact integer arithmetic that may refuse (overflow) — refusal aborts the
/// current elimination and triggers the wider fallback.
trait Coeff: Clone + Sized {
    /// True when the arithmetic can never refuse (arbitrary precision).
    const EXACT: bool;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn checked_add(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    /// Exact quotient, `None` when the division leaves a remainder.
    fn exact_div(&self, other: &Self) -> Option<Self>;
    fn from_bigint(b: &BigInt) -> Option<Self>;
    fn to_rat(&self) -> Rat;
}

impl Coeff for i128 {
    const EXACT: bool = false;
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        i128::checked_add(*self, *other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        i128::checked_sub(*self, *other)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        i128::checked_mul(*self, *other)
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if *other == 0 || self % other != 0 {
            None
        } else {
            Some(self / other)
        }
    }
    fn from_bigint(b: &BigInt) -> Option<Self> {
        b.to_i128()
    }
    fn to_rat(&self) -> Rat {
        Rat::from_integer(BigInt::from(*self))
    }
}

impl Coeff for BigInt {
    const EXACT: bool = true;
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn checked_add(&self, other: &Self) -> Option<Self> {
        Some(self + other)
    }
    fn checked_sub(&self, other: &Self) -> Option<Self> {
        Some(self - other)
    }
    fn checked_mul(&self, other: &Self) -> Option<Self> {
        Some(self * other)
    }
    fn exact_div(&self, other: &Self) -> Option<Self> {
        if Zero::is_zero(other) {
            return None;
        }
        let (q, r) = num::Integer::div_rem(self, other);
        if Zero::is_zero(&r) {
            Some(q)
        } else {
            None
        }
    }
    fn from_bigint(b: &BigInt) -> Option<Self> {
        Some(b.clone())
    }
    fn to_rat(&self) -> Rat {
        Rat::from_integer(self.clone())
    }
}

/// Packed-exponent integer polynomial; terms sorted by ascending key.
#[derive(Clone, Debug)]
struct ZPoly<C> {
    terms: Vec<(u64, C)>,
}

impl<C: Coeff> ZPoly<C> {
    fn zero() -> Self {
        ZPoly { terms: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn one() -> Self {
        ZPoly {
            terms: vec![(0, C::one())],
        }
    }

    /// Product; `None` on coefficient overflow.
    fn mul(&self, other: &Self) -> Option<Self> {
        if self.is_zero() || other.is_zero() {
            return Some(ZPoly::zero());
        }
        // Multiply the smaller into the larger.
        let (small, large) = if self.num_terms() <= other.num_terms() {
            (self, other)
        } else {
            (other, self)
        };
        if small.num_terms() == 1 {
            let (k, c) = &small.terms[0];
            let mut terms = Vec::with_capacity(large.num_terms());
            for (k2, c2) in &large.terms {
                terms.push((k + k2, c.checked_mul(c2)?));
            }
            return Some(ZPoly { terms });
        }
        let mut prods: Vec<(u64, C)> = Vec::with_capacity(small.num_terms() * large.num_terms());
        for (ka, ca) in &small.terms {
            for (kb, cb) in &large.terms {
                prods.push((ka + kb, ca.checked_mul(cb)?));
            }
        }
        prods.sort_unstable_by_key(|(k, _)| *k);
        let mut out: Vec<(u64, C)> = Vec::with_capacity(prods.len());
        for (k, c) in prods {
            match out.last_mut() {
                Some((lk, lc)) if *lk == k => {
                    *lc = lc.checked_add(&c)?;
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push((k, c)),
            }
        }
        Some(ZPoly { terms: out })
    }

    /// Sum; `None` on coefficient overflow.
    fn add(&self, other: &Self) -> Option<Self> {
        let mut out: Vec<(u64, C)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (ka, ca) = &self.terms[i];
            let (kb, cb) = &other.terms[j];
            match ka.cmp(kb) {
                std::cmp::Ordering::Less => {
                    out.push((*ka, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*kb, cb.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca.checked_add(cb)?;
                    if !c.is_zero() {
                        out.push((*ka, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().map(|(k, c)| (*k, c.clone())));
        out.extend(other.terms[j..].iter().map(|(k, c)| (*k, c.clone())));
        Some(ZPoly { terms: out })
    }

    /// Difference; `None` on coefficient overflow.
    fn sub(&self, other: &Self) -> Option<Self> {
        let mut out: Vec<(u64, C)> = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let zero_minus = |c: &C| C::one().checked_sub(&C::one())?.checked_sub(c);
        while i < self.terms.len() && j < other.terms.len() {
            let (ka, ca) = &self.terms[i];
            let (kb, cb) = &other.terms[j];
            match ka.cmp(kb) {
                std::cmp::Ordering::Less => {
                    out.push((*ka, ca.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*kb, zero_minus(cb)?));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = ca.checked_sub(cb)?;
                    if !c.is_zero() {
                        out.push((*ka, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().map(|(k, c)| (*k, c.clone())));
        for (k, c) in &other.terms[j..] {
            out.push((*k, zero_minus(c)?));
        }
        Some(ZPoly { terms: out })
    }

    /// Exact division; `None` when not exact or on overflow (never expected
    /// in Bareiss).
    fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if self.is_zero() {
            return Some(ZPoly::zero());
        }
        if divisor.is_zero() {
            return None;
        }
        if divisor.num_terms() == 1 {
            let (dk, dc) = &divisor.terms[0];
            let mut out = Vec::with_capacity(self.terms.len());
            for (k, c) in &self.terms {
                if k < dk {
                    return None;
                }
                out.push((k - dk, c.exact_div(dc)?));
            }
            // Monomial keys subtract field-wise only if no borrow occurred;
            // a borrow would scramble ordering, so verify monotonicity.
            if out.windows(2).any(|w| w[0].0 >= w[1].0) {
                return None;
            }
            return Some(ZPoly { terms: out });
        }
        let (dk, dc) = divisor.terms.last().unwrap();
        let mut rem = self.clone();
        let mut quo: Vec<(u64, C)> = Vec::new();
        while !rem.is_zero() {
            let (rk, rc) = rem.terms.last().unwrap();
            if rk < dk {
                return None;
            }
            let qk = rk - dk;
            let qc = rc.exact_div(dc)?;
            let qterm = ZPoly {
                terms: vec![(qk, qc.clone())],
            };
            rem = rem.sub(&qterm.mul(divisor)?)?;
            quo.push((qk, qc));
        }
        quo.reverse();
        // Quotient keys were produced in strictly descending order.
        if quo.windows(2).any(|w| w[0].0 >= w[1].0) {
            return None;
        }
        Some(ZPoly { terms: quo })
    }
}

/// Per-variable bit layout for packing exponents into a `u64`.
struct Packing {
    shifts: Vec<u32>,
    widths: Vec<u32>,
}

impl Packing {
    /// Build a layout from per-variable degree bounds; `None` if > 64 bits.
    /// Fields are sized for **twice** the bound so that a product of two
    /// minors (a transient in every Bareiss update) cannot carry into the
    /// neighbouring field.
    fn new(bounds: &[i64]) -> Option<Packing> {
        let mut shifts = Vec::with_capacity(bounds.len());
        let mut widths = Vec::with_capacity(bounds.len());
        let mut total = 0u32;
        for &b in bounds {
            let w = 64 - (2 * (b.max(1) as u64) + 1).leading_zeros();
            shifts.push(total);
            widths.push(w);
            total += w;
            if total > 64 {
                return None;
            }
        }
        Some(Packing { shifts, widths })
    }

    fn pack(&self, exps: &[i64]) -> Option<u64> {
        let mut key = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            if e < 0 || (e as u64) >= (1u64 << self.widths[i]) {
                return None;
            }
            key |= (e as u64) << self.shifts[i];
        }
        Some(key)
    }

    fn unpack(&self, key: u64, nvars: usize) -> Vec<i64> {
        (0..nvars)
            .map(|i| ((key >> self.shifts[i]) & ((1u64 << self.widths[i]) - 1)) as i64)
            .collect()
    }
}

/// Fast integer path for [`crate::laurent::row_deleted_minors`]: all `N`
/// row-deleted maximal minors of an `N×(N−1)` matrix over `Q[t^{±1}]` with
/// integer coefficients, up to monomial units and signs.  Returns `None`
/// when the input does not fit the packed representation.
pub(crate) fn row_deleted_minors_int(
    m: &[Vec<LaurentPoly<Rat>>],
) -> Result<Option<Vec<LaurentPoly<Rat>>>> {
    let n = m.len();
    let Some(first) = m.first() else {
        return Ok(Some(Vec::new()));
    };
    let width = first.len();
    let nvars = first.first().map(|p| p.nvars()).unwrap_or(0);
    if width + 1 != n {
        return Err(Error::Internal(
            "row-deleted minors need an N×(N−1) matrix".into(),
        ));
    }
    if n == 1 {
        return Ok(Some(vec![LaurentPoly::one(nvars)]));
    }
    // Shift every row to nonnegative support (changes minors by units).
    let mut shifted: Vec<Vec<LaurentPoly<Rat>>> = Vec::with_capacity(n);
    for row in m {
        let mut mins: Option<Vec<i64>> = None;
        for p in row {
            if p.is_zero() {
                continue;
            }
            let sm = p.support_min();
            mins = Some(match mins {
                None => sm,
                Some(mut acc) => {
                    for (x, y) in acc.iter_mut().zip(sm) {
                        *x = (*x).min(y);
                    }
                    acc
                }
            });
        }
        let shift: Vec<i64> = mins
            .map(|v| v.iter().map(|&x| -x).collect())
            .unwrap_or_else(|| vec![0; nvars]);
        shifted.push(row.iter().map(|p| p.mul_monomial(&shift)).collect());
    }
    // Degree bounds: a minor's degree in t_i is at most the sum over rows
    // of the row's maximal degree in t_i.
    let mut bounds = vec![0i64; nvars];
    for row in &shifted {
        let mut rowmax = vec![0i64; nvars];
        for p in row {
            for (e, _) in p.terms() {
                for (rm, &x) in rowmax.iter_mut().zip(e) {
                    *rm = (*rm).max(x);
                }
            }
        }
        for (b, rm) in bounds.iter_mut().zip(rowmax) {
            *b += rm;
        }
    }
    let Some(packing) = Packing::new(&bounds) else {
        return Ok(None);
    };
    // Sparse matrices (the typical shape here: most columns have very few
    // nonzero entries) are far better served by memoized Laplace expansion,
    // which shares subdeterminants across all N row deletions and performs
    // no division.  Dense or overflowing inputs fall back to fraction-free
    // elimination, and coefficient overflow there to big integers.
    if n <= 32 && width <= 32 {
        if let Some(minors) = expand_minors(&shifted, &packing, n, width, nvars)? {
            return Ok(Some(minors));
        }
    }
    match eliminate::<i128>(&shifted, &packing, n, width, nvars)? {
        Some(minors) => Ok(Some(minors)),
        // Coefficient overflow: redo with arbitrary precision.
        None => eliminate::<BigInt>(&shifted, &packing, n, width, nvars),
    }
}

/// Budget on memoized subdeterminant states before declaring the matrix too
/// dense for Laplace expansion.
const EXPAND_STATE_BUDGET: usize = 1 << 21;

struct Expander<'a> {
    m: &'a [Vec<ZPoly<i128>>],
    n: usize,
    memo: std::collections::HashMap<u64, std::rc::Rc<ZPoly<i128>>>,
    states: usize,
}

enum Bail {
    /// Overflow or state budget exhausted: use elimination instead.
    TooHard,
}

impl<'a> Expander<'a> {
    /// Determinant of the submatrix on `rows` × `cols` (bit masks, equal
    /// cardinality), by expansion along the column with fewest nonzeros.
    fn det(&mut self, rows: u64, cols: u64) -> std::result::Result<std::rc::Rc<ZPoly<i128>>, Bail> {
        if cols == 0 {
            return Ok(std::rc::Rc::new(ZPoly::one()));
        }
        let key = (rows << 32) | cols;
        if let Some(hit) = self.memo.get(&key) {
            return Ok(hit.clone());
        }
        self.states += 1;
        if self.states > EXPAND_STATE_BUDGET {
            return Err(Bail::TooHard);
        }
        // Column of minimum occupancy within the live rows.
        let mut best: Option<(usize, usize)> = None;
        for c in 0..32 {
            if cols & (1 << c) == 0 {
                continue;
            }
            let nnz = (0..self.n)
                .filter(|&r| rows & (1 << r) != 0 && !self.m[r][c].is_zero())
                .count();
            if best.map_or(true, |(_, b)| nnz < b) {
                best = Some((c, nnz));
            }
            if nnz == 0 {
                break;
            }
        }
        let (c, nnz) = best.expect("cols mask is nonempty");
        if nnz == 0 {
            let z = std::rc::Rc::new(ZPoly::zero());
            self.memo.insert(key, z.clone());
            return Ok(z);
        }
        let col_pos = (cols & ((1u64 << c) - 1)).count_ones();
        let mut acc = ZPoly::zero();
        let mut row_pos = 0u32;
        for r in 0..self.n {
            if rows & (1 << r) == 0 {
                continue;
            }
            if !self.m[r][c].is_zero() {
                let sub = self.det(rows & !(1 << r), cols & !(1 << c))?;
                let prod = self.m[r][c].mul(&sub).ok_or(Bail::TooHard)?;
                acc = if (row_pos + col_pos) % 2 == 0 {
                    acc.add(&prod).ok_or(Bail::TooHard)?
                } else {
                    acc.sub(&prod).ok_or(Bail::TooHard)?
                };
            }
            row_pos += 1;
        }
        let rc = std::rc::Rc::new(acc);
        self.memo.insert(key, rc.clone());
        Ok(rc)
    }
}

/// All `N` row-deleted maximal minors by memoized sparse Laplace expansion;
/// `Ok(None)` when the matrix is too dense or coefficients overflow.
fn expand_minors(
    shifted: &[Vec<LaurentPoly<Rat>>],
    packing: &Packing,
    n: usize,
    width: usize,
    nvars: usize,
) -> Result<Option<Vec<LaurentPoly<Rat>>>> {
    let mut zm: Vec<Vec<ZPoly<i128>>> = Vec::with_capacity(n);
    for row in shifted {
        let mut zrow = Vec::with_capacity(width);
        for p in row {
            let mut terms: Vec<(u64, i128)> = Vec::with_capacity(p.num_terms());
            for (e, c) in p.terms() {
                if !c.denom().is_one() {
                    return Ok(None);
                }
                let Some(key) = packing.pack(e) else {
                    return Ok(None);
                };
                let Some(coeff) = c.numer().to_i128() else {
                    return Ok(None);
                };
                terms.push((key, coeff));
            }
            terms.sort_unstable_by_key(|(k, _)| *k);
            zrow.push(ZPoly { terms });
        }
        zm.push(zrow);
    }
    let mut ex = Expander {
        m: &zm,
        n,
        memo: std::collections::HashMap::new(),
        states: 0,
    };
    let all_cols = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
    let mut minors = Vec::with_capacity(n);
    for a in 0..n {
        let rows = ((1u64 << n) - 1) & !(1 << a);
        match ex.det(rows, all_cols) {
            Ok(z) => {
                minors.push(LaurentPoly::from_terms(
                    nvars,
                    z.terms.iter().map(|(key, c)| {
                        (
                            packing.unpack(*key, nvars),
                            Rat::from_integer(BigInt::from(*c)),
                        )
                    }),
                ));
            }
            Err(Bail::TooHard) => return Ok(None),
        }
    }
    Ok(Some(minors))
}

/// One fraction-free elimination over coefficient type `C`, returning the
/// row-deleted minors carried in an augmented identity block.  `Ok(None)`
/// signals coefficient overflow.
fn eliminate<C: Coeff>(
    shifted: &[Vec<LaurentPoly<Rat>>],
    packing: &Packing,
    n: usize,
    width: usize,
    nvars: usize,
) -> Result<Option<Vec<LaurentPoly<Rat>>>> {
    let total = width + n;
    let mut a: Vec<Vec<ZPoly<C>>> = Vec::with_capacity(n);
    for (r, row) in shifted.iter().enumerate() {
        let mut zrow = Vec::with_capacity(total);
        for p in row {
            let mut terms: Vec<(u64, C)> = Vec::with_capacity(p.num_terms());
            for (e, c) in p.terms() {
                if !c.denom().is_one() {
                    return Ok(None);
                }
                let Some(key) = packing.pack(e) else {
                    return Ok(None);
                };
                let Some(coeff) = C::from_bigint(c.numer()) else {
                    return Ok(None);
                };
                terms.push((key, coeff));
            }
            terms.sort_unstable_by_key(|(k, _)| *k);
            zrow.push(ZPoly { terms });
        }
        zrow.resize_with(total, ZPoly::zero);
        zrow[width + r] = ZPoly::one();
        a.push(zrow);
    }
    let mut prev = ZPoly::<C>::one();
    for k in 0..width {
        // Pivot choice: fewest terms, then least fill (Markowitz cost).
        let mut pivot: Option<(usize, usize, usize, usize)> = None;
        for i in k..n {
            let row_nnz = (k..width).filter(|&j| !a[i][j].is_zero()).count();
            for j in k..width {
                if a[i][j].is_zero() {
                    continue;
                }
                let col_nnz = (k..n).filter(|&r| !a[r][j].is_zero()).count();
                let w = a[i][j].num_terms();
                let fill = (row_nnz - 1) * (col_nnz - 1);
                let better = match pivot {
                    None => true,
                    Some((_, _, pw, pf)) => w < pw || (w == pw && fill < pf),
                };
                if better {
                    pivot = Some((i, j, w, fill));
                }
            }
        }
        let Some((pi, pj, _, _)) = pivot else {
            return Ok(Some(vec![LaurentPoly::zero(nvars); n]));
        };
        if pi != k {
            a.swap(pi, k);
        }
        if pj != k {
            for row in a.iter_mut() {
                row.swap(pj, k);
            }
        }
        for i in k + 1..n {
            let lower_zero = a[i][k].is_zero();
            for j in (k + 1..width).chain(width..total) {
                let num = if lower_zero {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    a[k][k].mul(&a[i][j])
                } else {
                    if a[i][j].is_zero() && a[k][j].is_zero() {
                        continue;
                    }
                    match (a[k][k].mul(&a[i][j]), a[i][k].mul(&a[k][j])) {
                        (Some(x), Some(y)) => x.sub(&y),
                        _ => None,
                    }
                };
                let Some(num) = num else {
                    return Ok(None);
                };
                if num.is_zero() {
                    a[i][j] = num;
                    continue;
                }
                match num.div_exact(&prev) {
                    Some(q) => a[i][j] = q,
                    // With big integers every Bareiss division is exact, so
                    // a failure there is a real inconsistency; with i128 it
                    // can only be a masked overflow — fall back.
                    None if C::EXACT => {
                        return Err(Error::Internal("Bareiss division not exact".into()));
                    }
                    None => return Ok(None),
                }
            }
            a[i][k] = ZPoly::zero();
        }
        prev = a[k][k].clone();
    }
    let last = &a[n - 1];
    let minors = (0..n)
        .map(|r| {
            let z = &last[width + r];
            LaurentPoly::from_terms(
                nvars,
                z.terms
                    .iter()
                    .map(|(key, c)| (packing.unpack(*key, nvars), c.to_rat())),
            )
        })
        .collect();
    Ok(Some(minors))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laurent::{det, row_deleted_minors};
    use crate::scalar::{rat, seeded_rng};
    use rand::Rng;

    fn random_poly(rng: &mut rand_chacha::ChaCha8Rng, nvars: usize) -> LaurentPoly<Rat> {
        let mut p = LaurentPoly::zero(nvars);
        for _ in 0..rng.gen_range(0..3) {
            let exps: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-1..3)).collect();
            let c = rat(rng.gen_range(-3..=3));
            p = p.add(&LaurentPoly::term(nvars, exps, c));
        }
        p
    }

    #[test]
    fn packed_minors_agree_with_generic_elimination_and_determinants() {
        let mut rng = seeded_rng(99);
        for trial in 0..12 {
            let n = 2 + (trial % 4);
            let m: Vec<Vec<LaurentPoly<Rat>>> = (0..n)
                .map(|_| (0..n - 1).map(|_| random_poly(&mut rng, 3)).collect())
                .collect();
            let fast = row_deleted_minors_int(&m).unwrap().expect("packable");
            let slow = row_deleted_minors(&m).unwrap();
            for a in 0..n {
                let sub: Vec<Vec<LaurentPoly<Rat>>> = (0..n)
                    .filter(|&i| i != a)
                    .map(|i| m[i].clone())
                    .collect();
                let reference = det(&sub).unwrap();
                let fz = fast[a].is_zero();
                assert_eq!(fz, reference.is_zero(), "trial {trial} minor {a}");
                assert_eq!(fz, slow[a].is_zero(), "trial {trial} minor {a} generic");
                if !fz {
                    assert!(
                        fast[a].unit_equivalent(&reference),
                        "trial {trial} minor {a}: fast path disagrees"
                    );
                    assert!(
                        slow[a].unit_equivalent(&reference),
                        "trial {trial} minor {a}: generic path disagrees"
                    );
                }
            }
        }
    }

    #[test]
    fn big_integer_fallback_matches_the_narrow_path() {
        let mut rng = seeded_rng(31);
        for _ in 0..6 {
            let n = 4;
            let m: Vec<Vec<LaurentPoly<Rat>>> = (0..n)
                .map(|_| (0..n - 1).map(|_| random_poly(&mut rng, 2)).collect())
                .collect();
            let mut bounds = vec![0i64; 2];
            let mut shifted = Vec::new();
            for row in &m {
                let mut mins = vec![0i64; 2];
                for p in row {
                    if p.is_zero() {
                        continue;
                    }
                    for (x, y) in mins.iter_mut().zip(p.support_min()) {
                        *x = (*x).min(y);
                    }
                }
                let shift: Vec<i64> = mins.iter().map(|&x| -x).collect();
                let srow: Vec<_> = row.iter().map(|p| p.mul_monomial(&shift)).collect();
                let mut rowmax = vec![0i64; 2];
                for p in &srow {
                    for (e, _) in p.terms() {
                        for (rm, &x) in rowmax.iter_mut().zip(e) {
                            *rm = (*rm).max(x);
                        }
                    }
                }
                for (b, rm) in bounds.iter_mut().zip(rowmax) {
                    *b += rm;
                }
                shifted.push(srow);
            }
            let packing = Packing::new(&bounds).unwrap();
            let narrow = eliminate::<i128>(&shifted, &packing, n, n - 1, 2)
                .unwrap()
                .expect("no overflow on tiny inputs");
            let wide = eliminate::<BigInt>(&shifted, &packing, n, n - 1, 2)
                .unwrap()
                .expect("big integers never overflow");
            for (a, b) in narrow.iter().zip(&wide) {
                assert_eq!(a.is_zero(), b.is_zero());
                if !a.is_zero() {
                    assert!(a.unit_equivalent(b));
                }
            }
        }
    }

    #[test]
    fn zpoly_division_round_trip() {
        let mut rng = seeded_rng(5);
        for _ in 0..40 {
            let a = random_poly(&mut rng, 2);
            let b = random_poly(&mut rng, 2);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let m: Vec<Vec<LaurentPoly<Rat>>> = vec![vec![a.mul(&b)], vec![b.clone()]];
            // Divide via the packed representation by asking for minors of
            // a 2×1 matrix: minors are the entries themselves.
            let minors = row_deleted_minors_int(&m).unwrap().unwrap();
            assert!(minors[0].unit_equivalent(&b));
            assert!(minors[1].unit_equivalent(&a.mul(&b)));
        }
    }
}
