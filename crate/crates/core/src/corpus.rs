//! A gallery of named example arrangements with exact rational realizations.
//!
//! Every constructor returns a normalized [`Arrangement`] with `ℓ₀` chosen
//! as the line at infinity.  The gallery covers all combinatorial classes
//! the library's invariants distinguish: pencils, near-pencils, generic
//! arrangements, arrangements with several large multiple points on or off
//! `ℓ₀`, and the two classical six-line arrangements with identical Poincaré
//! polynomials but different boundary-manifold invariants (here `falk_one`
//! and `falk_two`, after M. Falk's homotopy-equivalence examples).

use crate::arrangement::Arrangement;
use crate::scalar::{rat, Rat};

fn lines_from_ints(ls: &[[i64; 3]]) -> Vec<Vec<Rat>> {
    ls.iter()
        .map(|c| c.iter().map(|&x| rat(x)).collect())
        .collect()
}

/// `total ≥ 2` lines through the single point `[0:0:1]`.
pub fn pencil(total: usize) -> Arrangement {
    assert!(total >= 2);
    let mut ls = vec![[0, 1, 0]];
    for j in 0..total - 1 {
        ls.push([1, j as i64, 0]);
    }
    Arrangement::from_lines(lines_from_ints(&ls), 0).unwrap()
}

/// `total ≥ 3` lines: `ℓ₀ = {x₀ = 0}` plus `total − 1` lines through
/// `[1:0:0] ∉ ℓ₀`.
pub fn near_pencil(total: usize) -> Arrangement {
    assert!(total >= 3);
    let mut ls = vec![[1, 0, 0], [0, 0, 1]];
    for c in 0..total - 2 {
        ls.push([0, 1, c as i64]);
    }
    Arrangement::from_lines(lines_from_ints(&ls), 0).unwrap()
}

/// `total ≥ 3` tangent lines to the conic `x₁² = x₀x₂`: no two parallel, no
/// three concurrent.
pub fn general_position(total: usize) -> Arrangement {
    assert!(total >= 3);
    let ls: Vec<[i64; 3]> = (0..total as i64).map(|a| [a * a, -2 * a, 1]).collect();
    Arrangement::from_lines(lines_from_ints(&ls), 0).unwrap()
}

/// Six lines with triple points `{0,1,2}` (on `ℓ₀`) and `{3,4,5}` (off it):
/// `x₀ (x₁+x₀)(x₁−x₀)(x₁+x₂) x₂ (x₁−x₂)`.
pub fn falk_one() -> Arrangement {
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

/// Six lines with triple points `{0,1,2}` and `{0,3,4}`, both on `ℓ₀`:
/// `x₀ (x₁+x₀)(x₁−x₀)(x₂+x₀)(x₂−x₀)(x₂+x₁−x₀)`.
pub fn falk_two() -> Arrangement {
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

/// `m + n + 1` lines: `ℓ₀` plus a pencil of `m` lines through `[0:0:1] ∈ ℓ₀`
/// and a pencil of `n` lines through `[0:1:0] ∈ ℓ₀` (two multiple points of
/// multiplicities `m+1`, `n+1`, both on `ℓ₀`; all other points double).
pub fn two_pencils(m: usize, n: usize) -> Arrangement {
    assert!(m >= 2 && n >= 2);
    let mut ls = vec![[1i64, 0, 0]];
    for c in 0..m as i64 {
        ls.push([1, 2 * c - 1, 0]); // x₀ + (2c−1)x₁, through [0:0:1]
    }
    for c in 0..n as i64 {
        ls.push([1, 0, 2 * c - 1]); // x₀ + (2c−1)x₂, through [0:1:0]
    }
    Arrangement::from_lines(lines_from_ints(&ls), 0).unwrap()
}

/// `m + n + 1` lines: a pencil of `m` lines (plus `ℓ₀`) through
/// `[0:1:0] ∈ ℓ₀`, and a pencil of `n` lines through `[1:0:0] ∉ ℓ₀`.
pub fn mixed_pencils(m: usize, n: usize) -> Arrangement {
    assert!(m >= 2 && n >= 2);
    let mut ls = vec![[1i64, 0, 0]];
    for c in 0..m as i64 {
        ls.push([1, 0, 2 * c - 1]); // x₀ + (2c−1)x₂, through [0:1:0] ∈ ℓ₀
    }
    for c in 0..n as i64 {
        ls.push([0, 1, -(c + 1)]); // x₁ − (c+1)x₂, through [1:0:0] ∉ ℓ₀
    }
    Arrangement::from_lines(lines_from_ints(&ls), 0).unwrap()
}

/// `ℓ₀` plus `m` "vertical" and `n` "horizontal" affine lines; the decone
/// complement is a product of punctured complex lines.
pub fn grid(m: usize, n: usize) -> Arrangement {
    assert!(m >= 2 && n >= 2);
    let mut ls = vec![[1i64, 0, 0]];
    for c in 0..m as i64 {
        ls.push([2 * c - 1, 1, 0]); // x₁ = (1−2c)x₀, through [0:0:1] ∈ ℓ₀
    }
    for c in 0..n as i64 {
        ls.push([c - 1, 0, 1]); // x₂ = (1−c)x₀, through [0:1:0] ∈ ℓ₀
    }
    Arrangement::from_lines(lines_from_ints(&ls), 0).unwrap()
}

/// The braid arrangement (complete quadrilateral): six lines, four triple
/// points, three double points.
pub fn braid() -> Arrangement {
    Arrangement::from_lines(
        lines_from_ints(&[
            [1, 0, 0],
            [1, 1, 0],
            [-1, 1, 0],
            [1, 0, 1],
            [-1, 0, 1],
            [0, -1, 1],
        ]),
        0,
    )
    .unwrap()
}

/// The standard example gallery used by the test suite and CLI fixtures.
pub fn standard_corpus() -> Vec<(&'static str, Arrangement)> {
    vec![
        ("pencil_3", pencil(3)),
        ("pencil_4", pencil(4)),
        ("pencil_5", pencil(5)),
        ("near_pencil_4", near_pencil(4)),
        ("near_pencil_5", near_pencil(5)),
        ("near_pencil_6", near_pencil(6)),
        ("general_position_4", general_position(4)),
        ("general_position_5", general_position(5)),
        ("falk_f1", falk_one()),
        ("falk_f2", falk_two()),
        ("two_pencils_3_3", two_pencils(3, 3)),
        ("mixed_pencils_3_3", mixed_pencils(3, 3)),
        ("grid_2_3", grid(2, 3)),
        ("braid", braid()),
    ]
}
