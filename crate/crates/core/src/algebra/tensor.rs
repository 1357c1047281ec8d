use serde::Serialize;

use super::{BilinearAlgorithm, Format};
use crate::exact::{Matrix, Rational};

const MAX_REPORTED: usize = 10;

/// A general element of `M_{mn} ⊗ M_{np} ⊗ M_{pm}`, stored densely.
///
/// The basis element `e_{ij} ⊗ e_{j'k} ⊗ e_{k'i'}` sits at flat index
/// `(x * np + y) * pm + z` with `x = i*n + j`, `y = j'*p + k`, `z = k'*m + i'`
/// (zero-based, row-major within each factor).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorElement {
    format: Format,
    coefficients: Vec<Rational>,
}

impl TensorElement {
    pub fn zero(format: Format) -> Self {
        let [d1, d2, d3] = Self::factor_dims(format);
        TensorElement {
            format,
            coefficients: vec![Rational::zero(); d1 * d2 * d3],
        }
    }

    fn factor_dims(format: Format) -> [usize; 3] {
        let Format { m, n, p } = format;
        [m * n, n * p, p * m]
    }

    pub fn format(&self) -> Format {
        self.format
    }

    pub fn dimension(&self) -> usize {
        self.coefficients.len()
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coefficients
    }

    fn flat_index(&self, x: usize, y: usize, z: usize) -> usize {
        let [_, d2, d3] = Self::factor_dims(self.format);
        (x * d2 + y) * d3 + z
    }

    /// Coefficient at `e_{ij} ⊗ e_{j'k} ⊗ e_{k'i'}` (zero-based indices).
    pub fn coefficient(
        &self,
        i: usize,
        j: usize,
        j1: usize,
        k: usize,
        k1: usize,
        i1: usize,
    ) -> &Rational {
        let Format { m, n, p } = self.format;
        &self.coefficients[self.flat_index(i * n + j, j1 * p + k, k1 * m + i1)]
    }

    /// `self += x ⊗ y ⊗ z` for matrices shaped like the three factors.
    pub fn add_decomposable(&mut self, x: &Matrix, y: &Matrix, z: &Matrix) {
        let [d1, d2, d3] = Self::factor_dims(self.format);
        debug_assert_eq!(x.entries().len(), d1);
        debug_assert_eq!(y.entries().len(), d2);
        debug_assert_eq!(z.entries().len(), d3);
        for (xi, xv) in x.entries().iter().enumerate() {
            if xv.is_zero() {
                continue;
            }
            for (yi, yv) in y.entries().iter().enumerate() {
                if yv.is_zero() {
                    continue;
                }
                let xy = xv * yv;
                for (zi, zv) in z.entries().iter().enumerate() {
                    if !zv.is_zero() {
                        let idx = (xi * d2 + yi) * d3 + zi;
                        self.coefficients[idx] += &(&xy * zv);
                    }
                }
            }
        }
    }

    /// Visits the nonzero coefficients together with the basis matrices of
    /// each factor.
    pub fn for_each_term(&self, mut f: impl FnMut(&Rational, [Matrix; 3])) {
        let [_, d2, d3] = Self::factor_dims(self.format);
        let [s1, s2, s3] = self.format.factor_shapes();
        for (idx, coef) in self.coefficients.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let (x, y, z) = (idx / (d2 * d3), (idx / d3) % d2, idx % d3);
            f(
                coef,
                [
                    Matrix::unit(s1.0, s1.1, x / s1.1, x % s1.1),
                    Matrix::unit(s2.0, s2.1, y / s2.1, y % s2.1),
                    Matrix::unit(s3.0, s3.1, z / s3.1, z % s3.1),
                ],
            );
        }
    }

    pub fn nonzero_count(&self) -> usize {
        self.coefficients.iter().filter(|c| !c.is_zero()).count()
    }

    /// Tensor form of an algorithm: `Σ a ⊗ b ⊗ cᵗ`.
    pub fn from_algorithm(alg: &BilinearAlgorithm) -> Self {
        let mut t = TensorElement::zero(alg.format());
        for triple in alg.triples() {
            let [x, y, z] = triple.tensor_factors();
            t.add_decomposable(&x, &y, &z);
        }
        t
    }
}

/// The structure tensor `Σ e_{ij} ⊗ e_{jk} ⊗ e_{ki}` of the format.
pub fn mmp_tensor(format: Format) -> TensorElement {
    let Format { m, n, p } = format;
    let mut t = TensorElement::zero(format);
    for i in 0..m {
        for j in 0..n {
            for k in 0..p {
                let idx = t.flat_index(i * n + j, j * p + k, k * m + i);
                t.coefficients[idx] = Rational::one();
            }
        }
    }
    t
}

/// A failed equation, with one-based indices as in
/// `Σ_l a_{ij} b_{j'k} c_{i'k'} = δ_{ii'} δ_{jj'} δ_{kk'}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub a_index: (usize, usize),
    pub b_index: (usize, usize),
    pub c_index: (usize, usize),
    /// Left side minus right side.
    #[serde(serialize_with = "serialize_display")]
    pub residual: Rational,
}

fn serialize_display<S: serde::Serializer>(v: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check: &'static str,
    pub passed: bool,
    pub equations: usize,
    pub violations: usize,
    /// At most the first ten violations, in index order.
    pub first_violations: Vec<Violation>,
}

impl VerificationReport {
    fn new(check: &'static str) -> Self {
        VerificationReport {
            check,
            passed: true,
            equations: 0,
            violations: 0,
            first_violations: Vec::new(),
        }
    }

    fn record(&mut self, index: [usize; 6], residual: Rational) {
        self.equations += 1;
        if residual.is_zero() {
            return;
        }
        self.passed = false;
        self.violations += 1;
        if self.first_violations.len() < MAX_REPORTED {
            let [i, j, j1, k, k1, i1] = index.map(|v| v + 1);
            self.first_violations.push(Violation {
                a_index: (i, j),
                b_index: (j1, k),
                c_index: (i1, k1),
                residual,
            });
        }
    }
}

fn delta(a: usize, b: usize) -> bool {
    a == b
}

/// Evaluates all `(mnp)²` Brent equations directly from the triples.
pub fn brent_check(alg: &BilinearAlgorithm) -> VerificationReport {
    let Format { m, n, p } = alg.format();
    let mut report = VerificationReport::new("brent");
    let triples = alg.triples();
    for i in 0..m {
        for j in 0..n {
            for j1 in 0..n {
                for k in 0..p {
                    for k1 in 0..p {
                        for i1 in 0..m {
                            let mut sum = Rational::zero();
                            for t in triples {
                                let a = t.a().get(i, j);
                                if a.is_zero() {
                                    continue;
                                }
                                let b = t.b().get(j1, k);
                                if b.is_zero() {
                                    continue;
                                }
                                let c = t.c().get(i1, k1);
                                if !c.is_zero() {
                                    sum += &(&(a * b) * c);
                                }
                            }
                            if delta(i, i1) && delta(j, j1) && delta(k, k1) {
                                sum -= &Rational::one();
                            }
                            report.record([i, j, j1, k, k1, i1], sum);
                        }
                    }
                }
            }
        }
    }
    report
}

/// Builds `Σ a ⊗ b ⊗ cᵗ` and compares it with the structure tensor
/// coefficient by coefficient.
pub fn tensor_sum_check(alg: &BilinearAlgorithm) -> VerificationReport {
    let Format { m, n, p } = alg.format();
    let sum = TensorElement::from_algorithm(alg);
    let target = mmp_tensor(alg.format());
    let mut report = VerificationReport::new("tensor_sum");
    for i in 0..m {
        for j in 0..n {
            for j1 in 0..n {
                for k in 0..p {
                    for k1 in 0..p {
                        for i1 in 0..m {
                            let diff = sum.coefficient(i, j, j1, k, k1, i1)
                                - target.coefficient(i, j, j1, k, k1, i1);
                            report.record([i, j, j1, k, k1, i1], diff);
                        }
                    }
                }
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{hopcroft, laderman, naive, strassen, Triple};

    #[test]
    fn structure_tensor_support() {
        let t = mmp_tensor(Format::new(1, 1, 1).unwrap());
        assert_eq!(t.dimension(), 1);
        assert_eq!(t.nonzero_count(), 1);
        let t = mmp_tensor(Format::square(2).unwrap());
        assert_eq!(t.nonzero_count(), 8);
        let t = mmp_tensor(Format::square(3).unwrap());
        assert_eq!(t.nonzero_count(), 27);
        assert!(t.coefficients().iter().all(|c| c.is_zero() || c.is_one()));
        let f = Format::new(3, 2, 4).unwrap();
        let t = mmp_tensor(f);
        assert_eq!(t.dimension(), 6 * 8 * 12);
        assert_eq!(t.nonzero_count(), 24);
    }

    #[test]
    fn builtins_pass_both_checks() {
        for alg in [strassen(), laderman(), hopcroft(), naive(2, 2, 2).unwrap()] {
            let b = brent_check(&alg);
            assert!(b.passed, "{:?}", alg.name());
            assert_eq!(b.equations, alg.format().volume().pow(2));
            assert!(tensor_sum_check(&alg).passed);
        }
    }

    #[test]
    fn strassen_sign_flip_is_caught() {
        let alg = strassen();
        let mut triples = alg.triples().to_vec();
        let t = &triples[0];
        triples[0] = Triple::new(
            t.a().clone(),
            t.b().clone(),
            t.c().scale(&Rational::from(-1)),
        )
        .unwrap();
        let broken = BilinearAlgorithm::new(alg.format(), triples, None).unwrap();
        let report = brent_check(&broken);
        assert!(!report.passed);
        // a_1 ⊗ b_1 ⊗ c_1 has 1*2*2 nonzero products, each now off by ±2.
        assert_eq!(report.violations, 4);
        assert!(report
            .first_violations
            .iter()
            .all(|v| v.residual == Rational::from(2) || v.residual == Rational::from(-2)));
        assert_eq!(tensor_sum_check(&broken).violations, 4);
    }

    #[test]
    fn hopcroft_missing_triple_fails() {
        let alg = hopcroft();
        let triples = alg.triples()[1..].to_vec();
        let broken = BilinearAlgorithm::new(alg.format(), triples, None).unwrap();
        assert!(!tensor_sum_check(&broken).passed);
        assert!(!brent_check(&broken).passed);
    }
}
