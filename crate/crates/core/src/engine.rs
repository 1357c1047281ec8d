//! Running a bilinear algorithm on concrete matrices.
//!
//! Evaluation is the literal three-phase scheme: form `d_l = Σ a_{uv,l} X_{uv}`
//! and `f_l = Σ b_{vw,l} Y_{vw}`, multiply `p_l = d_l f_l`, then assemble
//! `Z_{ik} = Σ c_{ik,l} p_l`. A sum of `k` nonzero terms costs `k - 1`
//! additions, a coefficient other than `±1` costs one scalar multiplication,
//! and negation is free. In the recursive version the entries are blocks,
//! and each block operation is charged per entry.

use std::ops::{Add, AddAssign};

use serde::Serialize;

use crate::algebra::{brent_check, BilinearAlgorithm, Format};
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OpCount {
    pub nonscalar_mults: u64,
    pub scalar_mults: u64,
    pub additions: u64,
}

impl Add for OpCount {
    type Output = OpCount;

    fn add(self, other: OpCount) -> OpCount {
        OpCount {
            nonscalar_mults: self.nonscalar_mults + other.nonscalar_mults,
            scalar_mults: self.scalar_mults + other.scalar_mults,
            additions: self.additions + other.additions,
        }
    }
}

impl AddAssign for OpCount {
    fn add_assign(&mut self, other: OpCount) {
        *self = *self + other;
    }
}

/// An algorithm whose Brent equations have been checked.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifiedAlgorithm(BilinearAlgorithm);

impl VerifiedAlgorithm {
    pub fn new(alg: BilinearAlgorithm) -> Result<Self> {
        let report = brent_check(&alg);
        if !report.passed {
            return Err(Error::Contract(format!(
                "algorithm fails {} of {} Brent equations",
                report.violations, report.equations
            )));
        }
        Ok(VerifiedAlgorithm(alg))
    }

    pub fn algorithm(&self) -> &BilinearAlgorithm {
        &self.0
    }

    pub fn into_inner(self) -> BilinearAlgorithm {
        self.0
    }
}

/// The schoolbook product with its cost: `m n p` multiplications and
/// `m p (n - 1)` additions.
pub fn naive_multiply(x: &Matrix, y: &Matrix) -> Result<(Matrix, OpCount)> {
    let z = x.mul(y)?;
    let (m, n, p) = (x.rows() as u64, x.cols() as u64, y.cols() as u64);
    Ok((
        z,
        OpCount {
            nonscalar_mults: m * n * p,
            scalar_mults: 0,
            additions: m * p * (n - 1),
        },
    ))
}

/// Linear combination `Σ coef_j · terms_j` over the nonzero coefficients,
/// charging `block_entries` per block-level operation.
fn combine(
    coefs: &[Rational],
    terms: &[&Matrix],
    block_entries: u64,
    count: &mut OpCount,
) -> Option<Matrix> {
    let mut acc: Option<Matrix> = None;
    for (coef, term) in coefs.iter().zip(terms) {
        if coef.is_zero() {
            continue;
        }
        let scaled = if coef.is_one() {
            (*term).clone()
        } else {
            if !coef.is_unit_sign() {
                count.scalar_mults += block_entries;
            }
            term.scale(coef)
        };
        acc = Some(match acc {
            None => scaled,
            Some(sum) => {
                count.additions += block_entries;
                sum.add(&scaled).expect("blocks share a shape")
            }
        });
    }
    acc
}

fn block(x: &Matrix, bi: usize, bj: usize, rows: usize, cols: usize) -> Matrix {
    let mut out = Matrix::zeros(rows, cols);
    for i in 0..rows {
        for j in 0..cols {
            out.set(i, j, x.get(bi * rows + i, bj * cols + j).clone());
        }
    }
    out
}

/// One level of the algorithm on a block matrix: `x` is split into an
/// `m x n` grid, `y` into `n x p`. `inner` multiplies the block pairs.
fn one_level(
    alg: &BilinearAlgorithm,
    x: &Matrix,
    y: &Matrix,
    mut inner: impl FnMut(&Matrix, &Matrix) -> Result<(Matrix, OpCount)>,
) -> Result<(Matrix, OpCount)> {
    let Format { m, n, p } = alg.format();
    let (br, bk, bc) = (x.rows() / m, x.cols() / n, y.cols() / p);
    let x_blocks: Vec<Matrix> = (0..m * n).map(|k| block(x, k / n, k % n, br, bk)).collect();
    let y_blocks: Vec<Matrix> = (0..n * p).map(|k| block(y, k / p, k % p, bk, bc)).collect();
    let x_refs: Vec<&Matrix> = x_blocks.iter().collect();
    let y_refs: Vec<&Matrix> = y_blocks.iter().collect();
    let mut count = OpCount::default();
    let mut products = Vec::with_capacity(alg.rank());
    for t in alg.triples() {
        let d =
            combine(t.a().entries(), &x_refs, (br * bk) as u64, &mut count).expect("a is nonzero");
        let f =
            combine(t.b().entries(), &y_refs, (bk * bc) as u64, &mut count).expect("b is nonzero");
        let (prod, sub) = inner(&d, &f)?;
        count += sub;
        products.push(prod);
    }
    let product_refs: Vec<&Matrix> = products.iter().collect();
    let mut z = Matrix::zeros(x.rows(), y.cols());
    for i in 0..m {
        for k in 0..p {
            let coefs: Vec<Rational> = alg
                .triples()
                .iter()
                .map(|t| t.c().get(i, k).clone())
                .collect();
            if let Some(zb) = combine(&coefs, &product_refs, (br * bc) as u64, &mut count) {
                for u in 0..br {
                    for v in 0..bc {
                        z.set(i * br + u, k * bc + v, zb.get(u, v).clone());
                    }
                }
            }
        }
    }
    Ok((z, count))
}

/// `X·Y` by one application of the algorithm; exactly `r` non-scalar
/// multiplications.
pub fn multiply_once(alg: &VerifiedAlgorithm, x: &Matrix, y: &Matrix) -> Result<(Matrix, OpCount)> {
    let Format { m, n, p } = alg.algorithm().format();
    if x.shape() != (m, n) || y.shape() != (n, p) {
        return Err(Error::Shape(format!(
            "algorithm of format ({m},{n},{p}) cannot multiply {}x{} by {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    one_level(alg.algorithm(), x, y, |d, f| {
        Ok((
            d.mul(f)?,
            OpCount {
                nonscalar_mults: 1,
                ..OpCount::default()
            },
        ))
    })
}

fn pad(x: &Matrix, size: usize) -> Matrix {
    let mut out = Matrix::zeros(size, size);
    for i in 0..x.rows() {
        for j in 0..x.cols() {
            out.set(i, j, x.get(i, j).clone());
        }
    }
    out
}

fn recurse(
    alg: &BilinearAlgorithm,
    x: &Matrix,
    y: &Matrix,
    cutoff: usize,
) -> Result<(Matrix, OpCount)> {
    if x.rows() <= cutoff {
        return naive_multiply(x, y);
    }
    one_level(alg, x, y, |d, f| recurse(alg, d, f, cutoff))
}

/// `X·Y` for square `N x N` inputs with a square-format algorithm `(q,q,q)`:
/// zero-pad to the next power of `q`, apply the algorithm to blocks while
/// the block size exceeds `cutoff`, and finish with the schoolbook product.
pub fn multiply_recursive(
    alg: &VerifiedAlgorithm,
    x: &Matrix,
    y: &Matrix,
    cutoff: usize,
) -> Result<(Matrix, OpCount)> {
    let Format { m, n, p } = alg.algorithm().format();
    if m != n || n != p {
        return Err(Error::Shape(format!(
            "recursion needs a square format, got ({m},{n},{p})"
        )));
    }
    let size = x.rows();
    if !x.is_square() || y.shape() != x.shape() || size == 0 {
        return Err(Error::Shape(format!(
            "expected two N x N matrices, got {}x{} and {}x{}",
            x.rows(),
            x.cols(),
            y.rows(),
            y.cols()
        )));
    }
    if cutoff == 0 {
        return Err(Error::Domain("cutoff must be at least 1".into()));
    }
    let q = m;
    if size <= cutoff {
        return naive_multiply(x, y);
    }
    if q < 2 {
        return Err(Error::Domain(
            "a (1,1,1) algorithm cannot split blocks".into(),
        ));
    }
    let mut padded = 1;
    while padded < size {
        padded *= q;
    }
    let (z, count) = recurse(alg.algorithm(), &pad(x, padded), &pad(y, padded), cutoff)?;
    Ok((block(&z, 0, 0, size, size), count))
}

/// `3 ln r / ln(mnp)`: the exponent `τ` with `N^τ` growth under recursion.
pub fn exponent_estimate(alg: &BilinearAlgorithm) -> Result<f64> {
    let volume = alg.format().volume();
    if volume < 2 {
        return Err(Error::Domain("the exponent needs mnp >= 2".into()));
    }
    Ok(3.0 * (alg.rank() as f64).ln() / (volume as f64).ln())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{hopcroft, laderman, naive, strassen};

    fn verified(alg: BilinearAlgorithm) -> VerifiedAlgorithm {
        VerifiedAlgorithm::new(alg).unwrap()
    }

    #[test]
    fn strassen_identity_and_counts() {
        let s = verified(strassen());
        let i = Matrix::identity(2);
        let (z, count) = multiply_once(&s, &i, &i).unwrap();
        assert_eq!(z, i);
        assert_eq!(count.nonscalar_mults, 7);
        assert_eq!(count.additions, 18);
        assert_eq!(count.scalar_mults, 0);
    }

    #[test]
    fn laderman_all_ones() {
        let l = verified(laderman());
        let ones = Matrix::from_ints(3, 3, &[1; 9]);
        let (z, count) = multiply_once(&l, &ones, &ones).unwrap();
        assert_eq!(z, Matrix::from_ints(3, 3, &[3; 9]));
        assert_eq!(count.nonscalar_mults, 23);
    }

    #[test]
    fn hopcroft_matches_naive() {
        let h = verified(hopcroft());
        let x = Matrix::from_ints(3, 2, &[1, -2, 3, 0, 5, 7]);
        let y = Matrix::from_ints(2, 3, &[2, 1, 0, -1, 4, 6]);
        let (z, _) = multiply_once(&h, &x, &y).unwrap();
        assert_eq!(z, x.mul(&y).unwrap());
        assert!(multiply_once(&h, &y, &x).is_err());
    }

    #[test]
    fn naive_algorithm_costs() {
        let alg = verified(naive(2, 3, 2).unwrap());
        let x = Matrix::from_ints(2, 3, &[1, 2, 3, 4, 5, 6]);
        let y = Matrix::from_ints(3, 2, &[1, 0, 0, 1, 1, 1]);
        let (z, count) = multiply_once(&alg, &x, &y).unwrap();
        let (expected, naive_count) = naive_multiply(&x, &y).unwrap();
        assert_eq!(z, expected);
        assert_eq!(count, naive_count);
    }

    #[test]
    fn recursion_counts() {
        let s = verified(strassen());
        for k in 0..=3u32 {
            let size = 1usize << k;
            let x = Matrix::from_ints(
                size,
                size,
                &(0..size * size).map(|v| v as i64 - 3).collect::<Vec<_>>(),
            );
            let y = x.transpose();
            let (z, count) = multiply_recursive(&s, &x, &y, 1).unwrap();
            assert_eq!(z, x.mul(&y).unwrap());
            assert_eq!(count.nonscalar_mults, 7u64.pow(k));
        }
        let x = Matrix::from_ints(3, 3, &[1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let y = Matrix::identity(3);
        for cutoff in [1, 2, 4] {
            let (z, _) = multiply_recursive(&s, &x, &y, cutoff).unwrap();
            assert_eq!(z, x);
        }
        let (_, c) = multiply_recursive(&s, &Matrix::identity(1), &Matrix::identity(1), 1).unwrap();
        assert_eq!(c.nonscalar_mults, 1);
        assert!(multiply_recursive(&verified(hopcroft()), &x, &y, 1).is_err());
        assert!(multiply_recursive(&s, &x, &y, 0).is_err());
    }

    #[test]
    fn rejects_invalid_algorithms() {
        let alg = strassen();
        let triples = alg.triples()[1..].to_vec();
        let broken = BilinearAlgorithm::new(alg.format(), triples, None).unwrap();
        assert!(matches!(
            VerifiedAlgorithm::new(broken),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn exponents() {
        assert!((exponent_estimate(&strassen()).unwrap() - 2.807354922058).abs() < 1e-12);
        assert_eq!(exponent_estimate(&naive(2, 2, 2).unwrap()).unwrap(), 3.0);
        let h = exponent_estimate(&hopcroft()).unwrap();
        assert!((h - 3.0 * 15f64.ln() / 18f64.ln()).abs() < 1e-15);
        assert!(exponent_estimate(&naive(1, 1, 1).unwrap()).is_err());
    }
}
