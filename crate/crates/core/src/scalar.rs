//! Exact coefficient fields: the rationals Q and the Gaussian rationals Q(i).
//!
//! Every computation in this crate is exact.  Geometry and most invariants
//! live over `Rat` (arbitrary-precision rationals); twisted representations
//! may instead use `GaussRat` (complex numbers with rational real and
//! imaginary parts).  The [`Field`] trait is the small common interface the
//! generic algebra (Laurent polynomials, matrices) needs.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::Complex;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
pub use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Arbitrary-precision rational numbers.
pub type Rat = BigRational;

/// Gaussian rationals: complex numbers with rational real and imaginary parts.
pub type GaussRat = Complex<BigRational>;

/// An exact field of characteristic zero.
///
/// Implemented by [`Rat`] and [`GaussRat`].  `Num` supplies the ring and
/// division operations; all implementations must have exact division (this
/// is a field, so division by any nonzero element succeeds).
pub trait Field:
    num_traits::Num + Clone + Eq + std::hash::Hash + std::fmt::Debug + std::ops::Neg<Output = Self>
{
    /// Short tag used in reports and representation files ("Q" or "Qi").
    const TAG: &'static str;

    /// Embed a rational number.
    fn from_ratio(r: &BigRational) -> Self;

    /// Multiplicative inverse.  Callers must ensure `self` is nonzero.
    fn inv(&self) -> Self {
        Self::one() / self.clone()
    }

    /// Canonical human-readable form ("3/2", "1-2/3i", …).
    fn render(&self) -> String;
}

impl Field for Rat {
    const TAG: &'static str = "Q";

    fn from_ratio(r: &BigRational) -> Self {
        r.clone()
    }

    fn render(&self) -> String {
        self.to_string()
    }
}

impl Field for GaussRat {
    const TAG: &'static str = "Qi";

    fn from_ratio(r: &BigRational) -> Self {
        Complex::new(r.clone(), BigRational::from_integer(BigInt::from(0)))
    }

    fn render(&self) -> String {
        let zero = BigRational::from_integer(BigInt::from(0));
        if self.im == zero {
            return self.re.to_string();
        }
        let im = if self.im == BigRational::from_integer(BigInt::from(1)) {
            "i".to_string()
        } else if self.im == -BigRational::from_integer(BigInt::from(1)) {
            "-i".to_string()
        } else {
            format!("{}i", self.im)
        };
        if self.re == zero {
            im
        } else if self.im > zero {
            format!("{}+{}", self.re, im)
        } else {
            format!("{}{}", self.re, im)
        }
    }
}

/// Construct the rational `n/d`; `d` must be nonzero.
pub fn ratio(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Construct the integer rational `n`.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Parse a rational from a decimal-free string: "p", "-p", or "p/q".
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t = s.trim();
    // Reject zero denominators up front: BigRational's parser would panic.
    if let Some((_, den)) = t.split_once('/') {
        let d = den
            .trim()
            .parse::<num::BigInt>()
            .map_err(|e| Error::Parse(format!("bad rational `{t}`: {e}")))?;
        if num_traits::Zero::is_zero(&d) {
            return Err(Error::Parse(format!("bad rational `{t}`: zero denominator")));
        }
    }
    t.parse::<BigRational>()
        .map_err(|e| Error::Parse(format!("bad rational `{t}`: {e}")))
}

/// Deterministic random stream used wherever sampling is required.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Draw a nonzero rational with small numerator and denominator.
///
/// The values are generic enough for rank sampling (they avoid 0 and avoid
/// being roots of unity other than ±1 trivially; callers that need to avoid
/// ±1 as well should resample).
pub fn sample_nonzero_rat(rng: &mut ChaCha8Rng) -> Rat {
    loop {
        let n: i64 = rng.gen_range(-9..=9);
        if n == 0 {
            continue;
        }
        let d: i64 = rng.gen_range(1..=9);
        return ratio(n, d);
    }
}
