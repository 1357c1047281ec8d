//! Explicit generators of the automorphism groups of the Laderman and
//! Hopcroft algorithms, named `F1`, `F2`, ... in the relation words.

use super::{FactorPermutation, IsotropyElement};
use crate::algebra::Format;
use crate::exact::Matrix;

/// Transposition matrix of `e_i` and `e_j` in dimension `n` (one-based).
pub(crate) fn transposition(n: usize, i: usize, j: usize) -> Matrix {
    let mut entries = vec![0i64; n * n];
    for k in 0..n {
        let image = if k + 1 == i {
            j - 1
        } else if k + 1 == j {
            i - 1
        } else {
            k
        };
        entries[image * n + k] = 1;
    }
    Matrix::from_ints(n, n, &entries)
}

/// `diag(1, ..., -1, ..., 1)` with the sign at position `i` (one-based).
pub(crate) fn sign_flip(n: usize, i: usize) -> Matrix {
    let mut entries = vec![0i64; n * n];
    for k in 0..n {
        entries[k * n + k] = if k + 1 == i { -1 } else { 1 };
    }
    Matrix::from_ints(n, n, &entries)
}

fn element(
    format: Format,
    sigma: FactorPermutation,
    a: Matrix,
    b: Matrix,
    c: Matrix,
) -> IsotropyElement {
    IsotropyElement::new(format, sigma, a, b, c).expect("generator data is valid")
}

fn product(x: &Matrix, y: &Matrix) -> Matrix {
    x.mul(y).expect("square matrices of one size")
}

/// `F1 = T(π23, π13, 1)`, `F2 = T(π23, 1, π23)`, `F3 = T(1, ε2, 1)∘ρ_(12)`,
/// `F4 = T(ε1, π12, ε1π12)∘ρ_(123)`.
pub fn laderman_generators() -> Vec<(String, IsotropyElement)> {
    let f = Format { m: 3, n: 3, p: 3 };
    let id = Matrix::identity(3);
    let (p12, p13, p23) = (
        transposition(3, 1, 2),
        transposition(3, 1, 3),
        transposition(3, 2, 3),
    );
    let (e1, e2) = (sign_flip(3, 1), sign_flip(3, 2));
    use FactorPermutation::*;
    vec![
        (
            "F1".into(),
            element(f, Identity, p23.clone(), p13, id.clone()),
        ),
        (
            "F2".into(),
            element(f, Identity, p23.clone(), id.clone(), p23),
        ),
        ("F3".into(), element(f, Swap12, id.clone(), e2, id)),
        (
            "F4".into(),
            element(f, Cycle123, e1.clone(), p12.clone(), product(&e1, &p12)),
        ),
    ]
}

pub fn laderman_relations() -> Vec<&'static str> {
    vec![
        "F1^2 = 1",
        "F2^2 = 1",
        "F3^2 = 1",
        "F4^3 = 1",
        "F1 F2 = F2 F1",
        "F3 F1 F3 = F1 F2",
        "F3 F2 F3 = F2",
        "F4 F1 F4^-1 = F1 F2",
        "F4 F2 F4^-1 = F1",
        "F3 F4 F3 = F4^-1",
    ]
}

/// `T(1, 1, π23)`: the sign pattern `(ε,η,θ) = (0,0,1)` among the
/// factor-preserving candidates `T(π23^ε, π13^η, π23^θ)`. It does not map the
/// Laderman algorithm, or even its type-(1,1,1) part, to itself.
pub fn laderman_rejected_element() -> IsotropyElement {
    let f = Format { m: 3, n: 3, p: 3 };
    let id = Matrix::identity(3);
    element(
        f,
        FactorPermutation::Identity,
        id.clone(),
        id,
        transposition(3, 2, 3),
    )
}

/// `F1 = T(π123, d, π123)` with `d = [[0,-1],[1,-1]]`,
/// `F2 = T(π13, π12, π13)`, `F3 = T(1, ε1π12, 1)∘ρ_(12)`.
pub fn hopcroft_generators() -> Vec<(String, IsotropyElement)> {
    let f = Format { m: 3, n: 2, p: 3 };
    let p123 = Matrix::from_ints(3, 3, &[0, 0, 1, 1, 0, 0, 0, 1, 0]);
    let d = Matrix::from_ints(2, 2, &[0, -1, 1, -1]);
    let p13 = transposition(3, 1, 3);
    let p12 = transposition(2, 1, 2);
    let e1 = sign_flip(2, 1);
    use FactorPermutation::*;
    vec![
        ("F1".into(), element(f, Identity, p123.clone(), d, p123)),
        (
            "F2".into(),
            element(f, Identity, p13.clone(), p12.clone(), p13),
        ),
        (
            "F3".into(),
            element(
                f,
                Swap12,
                Matrix::identity(3),
                product(&e1, &p12),
                Matrix::identity(3),
            ),
        ),
    ]
}

pub fn hopcroft_relations() -> Vec<&'static str> {
    vec![
        "F1^3 = 1",
        "F2^2 = 1",
        "F3^2 = 1",
        "F2 F1 F2 = F1^-1",
        "F3 F1 = F1 F3",
        "F3 F2 = F2 F3",
    ]
}
