//! Topological invariants of the boundary manifold of a line arrangement.
//!
//! Let `A = {ℓ₀, …, ℓₙ}` be an arrangement of n+1 distinct lines in the
//! complex projective plane, and let `M` be the boundary of a closed regular
//! neighborhood of the union of the lines.  `M` is a 3-dimensional graph
//! manifold whose structure is governed by a weighted graph `Γ` built from
//! the incidence combinatorics of the arrangement.  This crate computes, by
//! exact arithmetic throughout:
//!
//! * the intersection lattice, dense edges, decone data and nbc₂ pairs of
//!   the arrangement ([`arrangement`]);
//! * the weighted graph `Γ` with its maximal tree and cycle edges
//!   ([`graph`]);
//! * presentations of `G = π₁(M)` — both the unsimplified graph-of-groups
//!   presentation and the minimal commutator-relators presentation — plus
//!   the Fox-calculus Alexander matrix ([`presentation`]);
//! * the multivariable Alexander polynomial of `M` in factored closed form,
//!   its twisted analogues, and the degree-1 characteristic variety
//!   ([`alexander`]);
//! * the Newton polytope of the Alexander polynomial as a zonotope, the
//!   Alexander norm, chamber counts of the dual arrangement, and the number
//!   of components of the BNS invariant ([`polytope`]);
//! * the cohomology ring `H*(M; Z)` as the double of the Orlik–Solomon
//!   algebra, its Poincaré-duality pairing and the 3-form η ([`cohomology`]);
//! * graded ranks of the holonomy Lie algebra of `H*(M)` ([`holonomy`]);
//! * resonance-variety membership tests, the tangent-cone comparison, and
//!   the formality verdict ([`loci`]).
//!
//! All geometry is done over the rationals and all module-level algebra over
//! the rationals or the Gaussian rationals; there is no floating point.

pub mod alexander;
pub mod arrangement;
pub mod cohomology;
pub mod corpus;
pub mod error;
pub mod graph;
pub mod holonomy;
pub mod laurent;
pub mod loci;
pub mod matrix;
pub mod polytope;
pub mod presentation;
pub mod scalar;
mod zdet;

pub use error::{Error, Result};
pub use scalar::{Field, GaussRat, Rat};

#[cfg(test)]
mod scratch {
    use crate::corpus;
    use crate::presentation::*;

    #[test]
    #[ignore]
    fn profile_large_oracles() {
        for (name, arr) in [
            ("two_pencils", corpus::two_pencils(3, 3)),
            ("mixed_pencils", corpus::mixed_pencils(3, 3)),
        ] {
            let t0 = std::time::Instant::now();
            let pres = minimal_presentation(&arr);
            let m = fox_jacobian(&arr, &pres);
            let out = alexander_gcd_oracle(&m).unwrap();
            let closed = crate::alexander::alexander_polynomial(&arr).unwrap();
            let agree = closed.delta.expand().unit_equivalent(&out.delta);
            eprintln!(
                "{name}: N={} time={:?} probabilistic={} delta_terms={} agrees_with_closed_form={agree}",
                m.size(),
                t0.elapsed(),
                out.probabilistic,
                out.delta.num_terms()
            );
        }
    }
}
