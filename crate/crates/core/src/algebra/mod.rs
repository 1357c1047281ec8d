//! Bilinear algorithms in matrix form and their tensor form.
//!
//! An algorithm for multiplying an `m x n` matrix by an `n x p` matrix is a
//! list of triples `(a, b, c)` of sizes `m x n`, `n x p` and `m x p`. Its
//! tensor form is the list of decomposable tensors `a ⊗ b ⊗ cᵗ` in
//! `M_{mn} ⊗ M_{np} ⊗ M_{pm}`; the transpose on the third factor is only
//! applied at that boundary.

mod builtins;
mod factor;
pub(crate) mod io;
mod tensor;

use std::fmt;

use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};

pub use builtins::{builtin, hopcroft, laderman, naive, strassen};
pub use factor::{
    fine_factorization, triple_type, type_census, vector_label, FineFactorization, TripleType,
};
pub use io::{algorithm_to_value, parse_algorithm, serialize_algorithm};
pub use tensor::{
    brent_check, mmp_tensor, tensor_sum_check, TensorElement, VerificationReport, Violation,
};

/// Matrix multiplication format `(m, n, p)`: an `m x n` times `n x p` product.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Format {
    pub m: usize,
    pub n: usize,
    pub p: usize,
}

impl Format {
    pub fn new(m: usize, n: usize, p: usize) -> Result<Self> {
        if m == 0 || n == 0 || p == 0 {
            return Err(Error::Domain(format!(
                "format ({m},{n},{p}) has a zero dimension"
            )));
        }
        Ok(Format { m, n, p })
    }

    pub fn square(q: usize) -> Result<Self> {
        Format::new(q, q, q)
    }

    /// Shapes of the three tensor factors `M_{mn}`, `M_{np}`, `M_{pm}`.
    pub fn factor_shapes(&self) -> [(usize, usize); 3] {
        [(self.m, self.n), (self.n, self.p), (self.p, self.m)]
    }

    /// Shapes of the matrix-form triple `(a, b, c)`.
    pub fn triple_shapes(&self) -> [(usize, usize); 3] {
        [(self.m, self.n), (self.n, self.p), (self.m, self.p)]
    }

    /// Sizes of the general linear groups acting on the three index sets.
    pub fn dims(&self) -> [usize; 3] {
        [self.m, self.n, self.p]
    }

    pub fn volume(&self) -> usize {
        self.m * self.n * self.p
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.m, self.n, self.p)
    }
}

/// One multiplication of a bilinear algorithm: `(Σ a∘X)(Σ b∘Y)` feeding the
/// output entries with weights `c`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Triple {
    a: Matrix,
    b: Matrix,
    c: Matrix,
}

impl Triple {
    /// Checks that the shapes fit together and no factor is zero.
    pub fn new(a: Matrix, b: Matrix, c: Matrix) -> Result<Self> {
        if a.cols() != b.rows() || a.rows() != c.rows() || b.cols() != c.cols() {
            return Err(Error::Shape(format!(
                "triple shapes {}x{}, {}x{}, {}x{} do not form an (m,n,p) format",
                a.rows(),
                a.cols(),
                b.rows(),
                b.cols(),
                c.rows(),
                c.cols()
            )));
        }
        for (name, factor) in [("a", &a), ("b", &b), ("c", &c)] {
            if factor.is_zero() {
                return Err(Error::Domain(format!("factor {name} of a triple is zero")));
            }
        }
        Ok(Triple { a, b, c })
    }

    /// Reads a decomposable tensor `x ⊗ y ⊗ z` back as the triple `(x, y, zᵗ)`.
    pub fn from_tensor(x: Matrix, y: Matrix, z: Matrix) -> Result<Self> {
        Triple::new(x, y, z.transpose())
    }

    pub fn a(&self) -> &Matrix {
        &self.a
    }

    pub fn b(&self) -> &Matrix {
        &self.b
    }

    pub fn c(&self) -> &Matrix {
        &self.c
    }

    pub fn format(&self) -> Format {
        Format {
            m: self.a.rows(),
            n: self.a.cols(),
            p: self.b.cols(),
        }
    }

    /// The factors of the tensor form, `[a, b, cᵗ]`.
    pub fn tensor_factors(&self) -> [Matrix; 3] {
        [self.a.clone(), self.b.clone(), self.c.transpose()]
    }

    /// Representative of the same tensor with `a` and `b` scaled to lead
    /// entry 1 and the scalar residue pushed into `c`.
    pub fn canonical(&self) -> Triple {
        let (a, la) = self.a.canonical_scaling();
        let (b, lb) = self.b.canonical_scaling();
        let c = self.c.scale(&(la * lb));
        Triple { a, b, c }
    }
}

/// A bilinear matrix multiplication algorithm in matrix form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BilinearAlgorithm {
    format: Format,
    triples: Vec<Triple>,
    name: Option<String>,
}

impl BilinearAlgorithm {
    pub fn new(format: Format, triples: Vec<Triple>, name: Option<String>) -> Result<Self> {
        if triples.is_empty() {
            return Err(Error::Domain(
                "an algorithm needs at least one triple".into(),
            ));
        }
        for (l, t) in triples.iter().enumerate() {
            if t.format() != format {
                return Err(Error::Shape(format!(
                    "triple {} has format {} but the algorithm is {}",
                    l + 1,
                    t.format(),
                    format
                )));
            }
        }
        Ok(BilinearAlgorithm {
            format,
            triples,
            name,
        })
    }

    /// Builds an algorithm from its tensor form `x ⊗ y ⊗ z`.
    pub fn from_tensors(
        format: Format,
        tensors: Vec<[Matrix; 3]>,
        name: Option<String>,
    ) -> Result<Self> {
        let triples = tensors
            .into_iter()
            .map(|[x, y, z]| Triple::from_tensor(x, y, z))
            .collect::<Result<Vec<_>>>()?;
        BilinearAlgorithm::new(format, triples, name)
    }

    pub fn format(&self) -> Format {
        self.format
    }

    /// Number of non-scalar multiplications.
    pub fn rank(&self) -> usize {
        self.triples.len()
    }

    pub fn triples(&self) -> &[Triple] {
        &self.triples
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    /// Canonical triples in sorted order: equal iff the tensor multisets are
    /// equal.
    pub fn canonical_multiset(&self) -> Vec<Triple> {
        let mut v: Vec<Triple> = self.triples.iter().map(Triple::canonical).collect();
        v.sort();
        v
    }

    pub fn same_multiset(&self, other: &BilinearAlgorithm) -> bool {
        self.format == other.format && self.canonical_multiset() == other.canonical_multiset()
    }
}

/// Parses sums of matrix units such as `"e11+e12-e21"` or `"-2e13+e31"`
/// into a `rows x cols` matrix. Indices are single digits, one-based.
pub fn matrix_units(rows: usize, cols: usize, expr: &str) -> Result<Matrix> {
    let err = |msg: String| Error::parse(format!("{expr:?}"), msg);
    let compact: String = expr.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty expression".into()));
    }
    let mut out = Matrix::zeros(rows, cols);
    let bytes = compact.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let mut sign = 1i64;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -1;
            }
            pos += 1;
        } else if pos > 0 {
            return Err(err(format!("expected + or - at offset {pos}")));
        }
        let start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let coef: i64 = if pos > start {
            compact[start..pos]
                .parse()
                .map_err(|_| err("bad coefficient".into()))?
        } else {
            1
        };
        if pos + 3 > bytes.len() || bytes[pos] != b'e' {
            return Err(err(format!("expected a matrix unit at offset {pos}")));
        }
        let digit = |b: u8| -> Result<usize> {
            if (b'1'..=b'9').contains(&b) {
                Ok((b - b'1') as usize)
            } else {
                Err(err("matrix unit indices must be digits 1-9".into()))
            }
        };
        let (i, j) = (digit(bytes[pos + 1])?, digit(bytes[pos + 2])?);
        pos += 3;
        if i >= rows || j >= cols {
            return Err(err(format!(
                "e{}{} lies outside {rows}x{cols}",
                i + 1,
                j + 1
            )));
        }
        let updated = out.get(i, j) + &Rational::from(sign * coef);
        out.set(i, j, updated);
    }
    Ok(out)
}
