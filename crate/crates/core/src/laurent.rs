//! Exact multivariable Laurent polynomials over an exact field.
//!
//! The ring is `Λ = F[t₁^{±1}, …, t_n^{±1}]`.  Units of `Λ` are the terms
//! `c·t^a` with `c ∈ F*`; most invariants built here (Alexander polynomials,
//! their factors, gcds of Fox minors) are well defined only up to such units,
//! so the module provides a canonical representative for each unit class:
//!
//! * translate exponents so the lexicographically least exponent vector is 0,
//! * scale so the lexicographically greatest term has coefficient 1.
//!
//! For a binomial `t^a − 1` this reproduces the familiar normalization that
//! flips `a ↦ −a` when the first nonzero entry of `a` is negative.
//!
//! [`FactoredLaurent`] keeps products such as `∏ (t_v − 1)^{m_v−2}` in
//! factored normal form: a unit times canonical, pairwise non-associate
//! factors with positive multiplicities, sorted deterministically.
//!
//! Also provided: exact determinants by fraction-free (Bareiss) elimination,
//! characteristic polynomials `det(t^q·I − A)`, a multivariate gcd by
//! content/primitive-part recursion, and the substitution eliminating `t₀`
//! through the relation `t₀t₁⋯t_n = 1`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matrix::Mat;
use crate::scalar::Field;

/// A Laurent polynomial: finite map from exponent vectors to nonzero
/// coefficients.  The number of variables is fixed per value.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly<F: Field> {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, F>,
}

/// A unit `coeff · t^exps` of the Laurent ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unit<F: Field> {
    pub coeff: F,
    pub exps: Vec<i64>,
}

impl<F: Field> LaurentPoly<F> {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    /// The variable `t_{index}` (0-based).
    pub fn var(nvars: usize, index: usize) -> Self {
        let mut e = vec![0; nvars];
        e[index] = 1;
        Self::term(nvars, e, F::one())
    }

    /// The single term `c·t^exps`.
    pub fn term(nvars: usize, exps: Vec<i64>, c: F) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Vec<i64>, F)>) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &F)> {
        self.terms.iter()
    }

    /// True when the polynomial is a unit `c·t^a` (exactly one term).
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    fn add_term(&mut self, e: Vec<i64>, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut p = self.clone();
        for (e, c) in other.terms.iter() {
            p.add_term(e.clone(), c.clone());
        }
        p
    }

    pub fn neg(&self) -> Self {
        let mut p = self.clone();
        for c in p.terms.values_mut() {
            *c = -c.clone();
        }
        p
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut p = Self::zero(self.nvars);
        for (e1, c1) in self.terms.iter() {
            for (e2, c2) in other.terms.iter() {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                p.add_term(e, c1.clone() * c2.clone());
            }
        }
        p
    }

    pub fn mul_scalar(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        let mut p = self.clone();
        for v in p.terms.values_mut() {
            *v = v.clone() * c.clone();
        }
        p
    }

    /// Multiply by the monomial `t^shift`.
    pub fn mul_monomial(&self, shift: &[i64]) -> Self {
        assert_eq!(shift.len(), self.nvars);
        let mut p = Self::zero(self.nvars);
        for (e, c) in self.terms.iter() {
            let e: Vec<i64> = e.iter().zip(shift).map(|(a, b)| a + b).collect();
            p.terms.insert(e, c.clone());
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate at a point with all coordinates of negatively-powered
    /// variables nonzero.
    pub fn eval(&self, point: &[F]) -> Result<F> {
        if point.len() != self.nvars {
            return Err(Error::VarMismatch(point.len(), self.nvars));
        }
        let mut acc = F::zero();
        for (e, c) in self.terms.iter() {
            let mut term = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                if exp == 0 {
                    continue;
                }
                if point[i].is_zero() {
                    return Err(Error::ZeroEvaluation(i));
                }
                let base = if exp > 0 {
                    point[i].clone()
                } else {
                    point[i].inv()
                };
                for _ in 0..exp.unsigned_abs() {
                    term = term * base.clone();
                }
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    /// Evaluate a polynomial (nonnegative support) at any point: terms
    /// touching a zero coordinate with a positive exponent vanish.  Panics
    /// on negative exponents, which have no polynomial evaluation.
    pub fn eval_allow_zero(&self, point: &[F]) -> F {
        assert_eq!(point.len(), self.nvars, "evaluation point length");
        let mut acc = F::zero();
        'terms: for (e, c) in self.terms.iter() {
            let mut term = c.clone();
            for (i, &exp) in e.iter().enumerate() {
                assert!(exp >= 0, "polynomial evaluation of a negative power");
                if exp == 0 {
                    continue;
                }
                if point[i].is_zero() {
                    continue 'terms;
                }
                for _ in 0..exp {
                    term = term * point[i].clone();
                }
            }
            acc = acc + term;
        }
        acc
    }

    /// Substitute `t₀ ↦ (t₁⋯t_n)^{-1}` and drop the variable `t₀`
    /// (variable index 0).  The result lives in `n = nvars − 1` variables.
    pub fn eliminate_t0(&self) -> Self {
        assert!(self.nvars >= 1);
        let n = self.nvars - 1;
        let mut p = Self::zero(n);
        for (e, c) in self.terms.iter() {
            let e0 = e[0];
            let rest: Vec<i64> = e[1..].iter().map(|&x| x - e0).collect();
            p.add_term(rest, c.clone());
        }
        p
    }

    /// Componentwise minimum of the exponent vectors of the support.
    pub(crate) fn support_min(&self) -> Vec<i64> {
        let mut m = vec![i64::MAX; self.nvars];
        for e in self.terms.keys() {
            for (mi, &x) in m.iter_mut().zip(e) {
                *mi = (*mi).min(x);
            }
        }
        m
    }

    /// Shift exponents so every variable has minimum exponent 0; returns the
    /// shift that was subtracted (i.e. `self = t^shift · result`).
    fn to_poly_support(&self) -> (Vec<i64>, Self) {
        if self.is_zero() {
            return (vec![0; self.nvars], self.clone());
        }
        let m = self.support_min();
        let neg: Vec<i64> = m.iter().map(|&x| -x).collect();
        (m, self.mul_monomial(&neg))
    }

    /// Canonical form: `self = unit · canonical`, where the canonical
    /// representative has lexicographically least exponent vector 0 and
    /// lexicographically greatest coefficient 1.
    pub fn canonicalize(&self) -> (Unit<F>, Self) {
        if self.is_zero() {
            return (
                Unit {
                    coeff: F::one(),
                    exps: vec![0; self.nvars],
                },
                self.clone(),
            );
        }
        let least = self.terms.keys().next().unwrap().clone();
        let neg: Vec<i64> = least.iter().map(|&x| -x).collect();
        let shifted = self.mul_monomial(&neg);
        let lead = shifted.terms.values().next_back().unwrap().clone();
        let canon = shifted.mul_scalar(&lead.inv());
        (Unit { coeff: lead, exps: least }, canon)
    }

    /// Equality up to multiplication by a unit of `Λ`.
    pub fn unit_equivalent(&self, other: &Self) -> bool {
        if self.nvars != other.nvars {
            return false;
        }
        self.canonicalize().1 == other.canonicalize().1
    }

    /// Exact division in `Λ`: returns `self / divisor` when the division is
    /// exact, `None` otherwise.  `divisor` must be nonzero.
    pub fn try_div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        assert_eq!(self.nvars, divisor.nvars);
        if self.is_zero() {
            return Some(self.clone());
        }
        let (sp, p) = self.to_poly_support();
        let (sq, q) = divisor.to_poly_support();
        // Single-divisor reduction in F[t] by lex-greatest terms.  If the
        // division is exact every intermediate remainder is a multiple of q,
        // so a non-divisible leading term proves inexactness immediately.
        let (qe, qc) = {
            let (e, c) = q.terms.iter().next_back().unwrap();
            (e.clone(), c.clone())
        };
        let mut r = p;
        let mut quot = Self::zero(self.nvars);
        while !r.is_zero() {
            let (re, rc) = {
                let (e, c) = r.terms.iter().next_back().unwrap();
                (e.clone(), c.clone())
            };
            if re.iter().zip(&qe).any(|(a, b)| a < b) {
                return None;
            }
            let me: Vec<i64> = re.iter().zip(&qe).map(|(a, b)| a - b).collect();
            let mc = rc / qc.clone();
            let m = Self::term(self.nvars, me, mc);
            r = r.sub(&m.mul(&q));
            quot = quot.add(&m);
        }
        // self / divisor = t^(sp − sq) · (p / q).
        let shift: Vec<i64> = sp.iter().zip(&sq).map(|(a, b)| a - b).collect();
        Some(quot.mul_monomial(&shift))
    }

    /// Degree in variable `v` (max exponent over the support); support must
    /// be nonnegative in `v`.  Zero polynomial has degree 0 by convention.
    fn deg_in(&self, v: usize) -> i64 {
        self.terms.keys().map(|e| e[v]).max().unwrap_or(0)
    }

    /// Leading coefficient with respect to variable `v`: the sub-polynomial
    /// of terms with maximal `v`-exponent, with that exponent set to zero.
    fn lead_coeff_in(&self, v: usize) -> Self {
        let d = self.deg_in(v);
        let mut p = Self::zero(self.nvars);
        for (e, c) in self.terms.iter() {
            if e[v] == d {
                let mut e2 = e.clone();
                e2[v] = 0;
                p.terms.insert(e2, c.clone());
            }
        }
        p
    }

    /// Highest variable index occurring with a nonzero exponent, if any.
    fn top_var(&self) -> Option<usize> {
        let mut top = None;
        for e in self.terms.keys() {
            for (i, &x) in e.iter().enumerate() {
                if x != 0 {
                    top = Some(top.map_or(i, |t: usize| t.max(i)));
                }
            }
        }
        top
    }

    /// Render with terms in descending lexicographic order, e.g.
    /// `t1*t2^-1 - 1`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (e, c) in self.terms.iter().rev() {
            let mono = render_monomial(e);
            let cs = c.render();
            let (sign, body) = term_body::<F>(&cs, &mono);
            if out.is_empty() {
                if sign {
                    out.push('-');
                }
                out.push_str(&body);
            } else {
                out.push_str(if sign { " - " } else { " + " });
                out.push_str(&body);
            }
        }
        out
    }
}

/// Split a rendered coefficient+monomial into (leading-minus, body).
fn term_body<F: Field>(coeff: &str, mono: &str) -> (bool, String) {
    let (neg, mag) = match coeff.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, coeff.to_string()),
    };
    let needs_parens = mag.contains('+') || mag.contains('-');
    let body = if mono.is_empty() {
        if needs_parens && neg {
            // e.g. -(1-i); keep magnitude parenthesized for readability
            format!("({mag})")
        } else {
            mag.clone()
        }
    } else if mag == "1" && !needs_parens {
        mono.to_string()
    } else if needs_parens {
        format!("({mag})*{mono}")
    } else {
        format!("{mag}*{mono}")
    };
    (neg, body)
}

fn render_monomial(e: &[i64]) -> String {
    let mut parts = Vec::new();
    for (i, &x) in e.iter().enumerate() {
        if x == 0 {
            continue;
        }
        if x == 1 {
            parts.push(format!("t{}", i + 1));
        } else {
            parts.push(format!("t{}^{}", i + 1, x));
        }
    }
    parts.join("*")
}

/// Greatest common divisor in `Λ`, canonicalized.  Monomials are units, so
/// any monomial input yields 1 (unless both inputs are zero).
pub fn gcd<F: Field>(p: &LaurentPoly<F>, q: &LaurentPoly<F>) -> LaurentPoly<F> {
    assert_eq!(p.nvars(), q.nvars());
    if p.is_zero() {
        return q.canonicalize().1;
    }
    if q.is_zero() {
        return p.canonicalize().1;
    }
    let (_, a) = p.to_poly_support();
    let (_, b) = q.to_poly_support();
    gcd_poly(&a, &b).canonicalize().1
}

/// gcd of polynomials with nonnegative support (still carried as
/// `LaurentPoly` values).
fn gcd_poly<F: Field>(a: &LaurentPoly<F>, b: &LaurentPoly<F>) -> LaurentPoly<F> {
    if a.is_zero() {
        return b.clone();
    }
    if b.is_zero() {
        return a.clone();
    }
    if a.is_unit() || b.is_unit() {
        return LaurentPoly::one(a.nvars());
    }
    // Fast path: exact divisibility either way.
    if a.try_div_exact(b).is_some() {
        return b.clone();
    }
    if b.try_div_exact(a).is_some() {
        return a.clone();
    }
    let va = a.top_var();
    let vb = b.top_var();
    let v = match (va, vb) {
        (Some(x), Some(y)) => x.max(y),
        _ => return LaurentPoly::one(a.nvars()),
    };
    // Contents with respect to v live in strictly fewer variables.
    let (ca, pa) = content_and_primitive(a, v);
    let (cb, pb) = content_and_primitive(b, v);
    let cg = gcd_poly(&ca, &cb);
    // Primitive pseudo-remainder sequence in the main variable v.
    let (mut f, mut g) = if pa.deg_in(v) >= pb.deg_in(v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            break;
        }
        let (_, pr) = content_and_primitive(&r, v);
        f = g;
        g = pr;
    }
    cg.mul(&g)
}

/// Content (gcd of v-coefficients) and primitive part with respect to `v`.
fn content_and_primitive<F: Field>(p: &LaurentPoly<F>, v: usize) -> (LaurentPoly<F>, LaurentPoly<F>) {
    // Collect coefficients of each power of v.
    let mut coeffs: BTreeMap<i64, LaurentPoly<F>> = BTreeMap::new();
    for (e, c) in p.terms() {
        let mut e2 = e.clone();
        let d = e2[v];
        e2[v] = 0;
        coeffs
            .entry(d)
            .or_insert_with(|| LaurentPoly::zero(p.nvars()))
            .add_term(e2, c.clone());
    }
    let mut content = LaurentPoly::zero(p.nvars());
    for c in coeffs.values() {
        content = gcd_poly(&content, c);
        if content.is_unit() {
            content = LaurentPoly::one(p.nvars());
            break;
        }
    }
    let prim = p
        .try_div_exact(&content)
        .expect("content must divide exactly");
    (content, prim)
}

/// Pseudo-remainder of `f` by `g` in variable `v` (deg_v f ≥ deg_v g > 0 or
/// the loop is vacuous): repeatedly cancel the leading v-term after scaling
/// by g's leading coefficient.
fn pseudo_rem<F: Field>(f: &LaurentPoly<F>, g: &LaurentPoly<F>, v: usize) -> LaurentPoly<F> {
    let dg = g.deg_in(v);
    let lg = g.lead_coeff_in(v);
    let mut r = f.clone();
    while !r.is_zero() && r.deg_in(v) >= dg {
        let dr = r.deg_in(v);
        let lr = r.lead_coeff_in(v);
        let mut shift = vec![0i64; f.nvars()];
        shift[v] = dr - dg;
        // r ← lg·r − lr·t_v^{dr−dg}·g  (cancels the degree-dr coefficient)
        r = r.mul(&lg).sub(&lr.mul_monomial(&shift).mul(g));
    }
    r
}

/// Exact determinant of a square matrix of Laurent polynomials via
/// fraction-free Bareiss elimination with full (sparsest-entry) pivoting.
pub fn det<F: Field>(m: &[Vec<LaurentPoly<F>>]) -> Result<LaurentPoly<F>> {
    let n = m.len();
    let nvars = m
        .iter()
        .flat_map(|r| r.iter())
        .map(|p| p.nvars())
        .next()
        .unwrap_or(0);
    if n == 0 {
        return Ok(LaurentPoly::one(nvars));
    }
    for row in m {
        if row.len() != n {
            return Err(Error::Internal("determinant of non-square matrix".into()));
        }
    }
    // Normalize rows to polynomial support, tracking the extracted unit.
    let mut unit_shift = vec![0i64; nvars];
    let mut a: Vec<Vec<LaurentPoly<F>>> = Vec::with_capacity(n);
    for row in m {
        let mut mins = vec![0i64; nvars];
        let mut any = false;
        for p in row {
            if p.is_zero() {
                continue;
            }
            let sm = p.support_min();
            if !any {
                mins = sm;
                any = true;
            } else {
                for (a, b) in mins.iter_mut().zip(sm) {
                    *a = (*a).min(b);
                }
            }
        }
        if !any {
            return Ok(LaurentPoly::zero(nvars));
        }
        let neg: Vec<i64> = mins.iter().map(|&x| -x).collect();
        for (u, s) in unit_shift.iter_mut().zip(&mins) {
            *u += s;
        }
        a.push(row.iter().map(|p| p.mul_monomial(&neg)).collect());
    }
    let mut sign_flip = false;
    let mut prev = LaurentPoly::one(nvars);
    for k in 0..n {
        // Sparsest nonzero pivot in the trailing block.
        let mut pivot: Option<(usize, usize, usize)> = None;
        for i in k..n {
            for j in k..n {
                if !a[i][j].is_zero() {
                    let w = a[i][j].num_terms();
                    if pivot.map(|(_, _, pw)| w < pw).unwrap_or(true) {
                        pivot = Some((i, j, w));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = pivot else {
            return Ok(LaurentPoly::zero(nvars));
        };
        if pi != k {
            a.swap(pi, k);
            sign_flip = !sign_flip;
        }
        if pj != k {
            for row in a.iter_mut() {
                row.swap(pj, k);
            }
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                a[i][j] = num
                    .try_div_exact(&prev)
                    .ok_or_else(|| Error::Internal("Bareiss division not exact".into()))?;
            }
        }
        for i in k + 1..n {
            a[i][k] = LaurentPoly::zero(nvars);
        }
        prev = a[k][k].clone();
    }
    let mut d = a[n - 1][n - 1].mul_monomial(&unit_shift);
    if sign_flip {
        d = d.neg();
    }
    Ok(d)
}

/// All `N` maximal minors of an `N×(N−1)` matrix (delete one row at a
/// time), up to monomial units and signs, from a single fraction-free
/// elimination of the matrix augmented with an identity block: after
/// `N−1` Bareiss steps pivoting only in the real columns, the surviving
/// row's entry in augmented column `a` is `±det([A | e_a]) =
/// ±det(A with row a deleted)`.
///
/// Units and signs are deliberately not tracked — callers use the minors
/// only through gcds, which monomial units cannot affect.  A matrix of
/// rank below `N−1` returns all zeros.
pub fn row_deleted_minors<F: Field>(m: &[Vec<LaurentPoly<F>>]) -> Result<Vec<LaurentPoly<F>>> {
    let n = m.len();
    let Some(first) = m.first() else {
        return Ok(Vec::new());
    };
    let width = first.len();
    let nvars = first.first().map(|p| p.nvars()).unwrap_or(0);
    if width + 1 != n {
        return Err(Error::Internal(
            "row-deleted minors need an N×(N−1) matrix".into(),
        ));
    }
    if n == 1 {
        return Ok(vec![LaurentPoly::one(nvars)]);
    }
    // Augment with the identity; normalize each row by a monomial unit so
    // supports are nonnegative and small.
    let total = width + n;
    let mut a: Vec<Vec<LaurentPoly<F>>> = Vec::with_capacity(n);
    for (r, row) in m.iter().enumerate() {
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
        let mut full: Vec<LaurentPoly<F>> = row.iter().map(|p| p.mul_monomial(&shift)).collect();
        full.resize(total, LaurentPoly::zero(nvars));
        full[width + r] = LaurentPoly::one(nvars);
        a.push(full);
    }
    let mut prev = LaurentPoly::one(nvars);
    for k in 0..width {
        // Sparsest nonzero pivot among remaining rows × real columns.
        let mut pivot: Option<(usize, usize, usize)> = None;
        for i in k..n {
            for j in k..width {
                if !a[i][j].is_zero() {
                    let w = a[i][j].num_terms();
                    if pivot.map(|(_, _, pw)| w < pw).unwrap_or(true) {
                        pivot = Some((i, j, w));
                    }
                }
            }
        }
        let Some((pi, pj, _)) = pivot else {
            return Ok(vec![LaurentPoly::zero(nvars); n]);
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
            if a[i][k].is_zero() {
                // Still must scale the row to keep the Bareiss invariant.
                for j in (k + 1..width).chain(width..total) {
                    if a[i][j].is_zero() {
                        continue;
                    }
                    let num = a[k][k].mul(&a[i][j]);
                    a[i][j] = num
                        .try_div_exact(&prev)
                        .ok_or_else(|| Error::Internal("Bareiss division not exact".into()))?;
                }
                continue;
            }
            for j in (k + 1..width).chain(width..total) {
                if a[i][j].is_zero() && a[k][j].is_zero() {
                    continue;
                }
                let num = a[k][k].mul(&a[i][j]).sub(&a[i][k].mul(&a[k][j]));
                if num.is_zero() {
                    a[i][j] = num;
                    continue;
                }
                a[i][j] = num
                    .try_div_exact(&prev)
                    .ok_or_else(|| Error::Internal("Bareiss division not exact".into()))?;
            }
            a[i][k] = LaurentPoly::zero(nvars);
        }
        prev = a[k][k].clone();
    }
    let last = &a[n - 1];
    Ok((0..n).map(|r| last[width + r].clone()).collect())
}

/// `det(t^q·I − A)` as a Laurent polynomial in `nvars` variables, where
/// `t^q` is the monomial with exponent vector `q`.
pub fn char_poly_in_monomial<F: Field>(a: &Mat<F>, q: &[i64]) -> Result<LaurentPoly<F>> {
    if a.rows != a.cols {
        return Err(Error::Internal("characteristic polynomial of non-square matrix".into()));
    }
    let nvars = q.len();
    let k = a.rows;
    let mut m: Vec<Vec<LaurentPoly<F>>> = vec![vec![LaurentPoly::zero(nvars); k]; k];
    for i in 0..k {
        for j in 0..k {
            let mut p = LaurentPoly::constant(nvars, -a.a[i][j].clone());
            if i == j {
                p = p.add(&LaurentPoly::term(nvars, q.to_vec(), F::one()));
            }
            m[i][j] = p;
        }
    }
    det(&m)
}

/// A Laurent polynomial in factored normal form: `unit · ∏ factorᵢ^{multᵢ}`
/// with canonical, pairwise non-associate factors sorted by their rendering.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactoredLaurent<F: Field> {
    nvars: usize,
    zero: bool,
    pub unit: Unit<F>,
    factors: Vec<(LaurentPoly<F>, u32)>,
}

impl<F: Field> FactoredLaurent<F> {
    pub fn one(nvars: usize) -> Self {
        FactoredLaurent {
            nvars,
            zero: false,
            unit: Unit {
                coeff: F::one(),
                exps: vec![0; nvars],
            },
            factors: Vec::new(),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        let mut f = Self::one(nvars);
        f.zero = true;
        f
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    pub fn factors(&self) -> &[(LaurentPoly<F>, u32)] {
        &self.factors
    }

    /// Number of distinct (non-associate) non-unit factors.
    pub fn distinct_factor_count(&self) -> usize {
        self.factors.len()
    }

    /// Multiply in `p^mult`, canonicalizing and merging associates.
    pub fn push_factor(&mut self, p: &LaurentPoly<F>, mult: u32) {
        assert_eq!(p.nvars(), self.nvars);
        if self.zero || mult == 0 {
            return;
        }
        if p.is_zero() {
            self.zero = true;
            self.factors.clear();
            return;
        }
        let (u, canon) = p.canonicalize();
        for _ in 0..mult {
            self.unit.coeff = self.unit.coeff.clone() * u.coeff.clone();
            for (a, b) in self.unit.exps.iter_mut().zip(&u.exps) {
                *a += b;
            }
        }
        if canon.is_one() {
            return;
        }
        if let Some(slot) = self.factors.iter_mut().find(|(f, _)| *f == canon) {
            slot.1 += mult;
        } else {
            self.factors.push((canon, mult));
            self.factors.sort_by_key(|(f, _)| f.render());
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        if self.zero || other.zero {
            return Self::zero(self.nvars);
        }
        let mut out = self.clone();
        out.unit.coeff = out.unit.coeff * other.unit.coeff.clone();
        for (a, b) in out.unit.exps.iter_mut().zip(&other.unit.exps) {
            *a += b;
        }
        for (f, m) in &other.factors {
            out.push_factor(f, *m);
        }
        out
    }

    /// Expand to an ordinary Laurent polynomial.
    pub fn expand(&self) -> LaurentPoly<F> {
        if self.zero {
            return LaurentPoly::zero(self.nvars);
        }
        let mut p = LaurentPoly::term(self.nvars, self.unit.exps.clone(), self.unit.coeff.clone());
        for (f, m) in &self.factors {
            p = p.mul(&f.pow(*m));
        }
        p
    }

    /// Equality up to a unit: same canonical factors with equal
    /// multiplicities (units ignored), or both zero.
    pub fn unit_equivalent(&self, other: &Self) -> bool {
        if self.nvars != other.nvars {
            return false;
        }
        if self.zero || other.zero {
            return self.zero == other.zero;
        }
        self.factors == other.factors
    }

    /// Canonical text form, e.g. `(t1*t2 - 1)^2 * (t3 - 1)`.
    pub fn render(&self) -> String {
        if self.zero {
            return "0".to_string();
        }
        let mut parts: Vec<String> = Vec::new();
        let unit_mono = render_monomial(&self.unit.exps);
        let coeff = self.unit.coeff.render();
        if coeff != "1" || !unit_mono.is_empty() {
            let (neg, body) = term_body::<F>(&coeff, &unit_mono);
            parts.push(if neg { format!("-{body}") } else { body });
        }
        for (f, m) in &self.factors {
            if *m == 1 {
                parts.push(format!("({})", f.render()));
            } else {
                parts.push(format!("({})^{}", f.render(), m));
            }
        }
        if parts.is_empty() {
            return "1".to_string();
        }
        parts.join(" * ")
    }
}
