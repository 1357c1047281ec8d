//! Exact rational scalars and small dense matrices.
//!
//! Every coefficient in the crate lives in [`Rational`]; there are no
//! tolerances anywhere. Matrices are dense and row-major, which is all the
//! tensor-level code needs (nothing larger than 9x9 appears there).

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number, always stored in lowest terms with a positive
/// denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_integer(value: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(value)))
    }

    /// Builds `numerator / denominator`, reducing to lowest terms.
    pub fn new(numerator: i64, denominator: i64) -> Result<Self> {
        if denominator == 0 {
            return Err(Error::Domain("zero denominator".into()));
        }
        Ok(Rational(BigRational::new(
            BigInt::from(numerator),
            BigInt::from(denominator),
        )))
    }

    pub fn numerator(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denominator(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// True for `1` and `-1`: multiplying by these is free in operation counts.
    pub fn is_unit_sign(&self) -> bool {
        self.0.denom().is_one() && self.0.numer().abs().is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn recip(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("reciprocal of zero".into()));
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0.to_f64().unwrap_or(f64::NAN)
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_integer(value)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Literal grammar: optional sign, decimal digits, optionally `/` followed
/// by a positive decimal integer. No whitespace.
impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = |msg: &str| Error::parse(format!("{s:?}"), msg.to_string());
        let (num_part, den_part) = match s.split_once('/') {
            Some((n, d)) => (n, Some(d)),
            None => (s, None),
        };
        let digits = num_part
            .strip_prefix('-')
            .or_else(|| num_part.strip_prefix('+'))
            .unwrap_or(num_part);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad("expected an optionally signed integer numerator"));
        }
        let numerator: BigInt = num_part
            .trim_start_matches('+')
            .parse()
            .map_err(|_| bad("invalid numerator"))?;
        let denominator = match den_part {
            None => BigInt::one(),
            Some(d) => {
                if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(bad("denominator must be a positive integer"));
                }
                let d: BigInt = d.parse().map_err(|_| bad("invalid denominator"))?;
                if d.is_zero() {
                    return Err(bad("denominator must be positive"));
                }
                d
            }
        };
        Ok(Rational(BigRational::new(numerator, denominator)))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
        impl $trait<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0.$method(rhs.0))
            }
        }
        impl $trait<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational(self.0.$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

// Division by zero panics, as for the primitive numeric types. Library code
// only divides by values it has already checked to be nonzero.
forward_binop!(Div, div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Rational::one();
        }
        m
    }

    /// The matrix unit with a single 1 at (`i`, `j`), zero-based.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Matrix::zeros(rows, cols);
        m.data[i * cols + j] = Rational::one();
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        let mut m = Matrix::zeros(n, n);
        for (i, e) in entries.iter().enumerate() {
            m.data[i * n + i] = e.clone();
        }
        m
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries supplied for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Matrix::from_vec(r, c, rows.into_iter().flatten().collect())
    }

    /// Integer matrix from row-major entries. Panics on a length mismatch;
    /// intended for literals.
    pub fn from_ints(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols, "literal has wrong length");
        Matrix {
            rows,
            cols,
            data: entries.iter().map(|&v| Rational::from(v)).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    /// First nonzero entry in row-major order.
    pub fn lead_entry(&self) -> Option<&Rational> {
        self.data.iter().find(|x| !x.is_zero())
    }

    pub fn scale(&self, factor: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * factor).collect(),
        }
    }

    /// Scales so the lead entry is 1 and returns the removed factor, i.e.
    /// `self == canonical.scale(&factor)`. The zero matrix is returned
    /// unchanged with factor 1.
    pub fn canonical_scaling(&self) -> (Matrix, Rational) {
        match self.lead_entry() {
            None => (self.clone(), Rational::one()),
            Some(lead) if lead.is_one() => (self.clone(), Rational::one()),
            Some(lead) => {
                let lead = lead.clone();
                let inv = lead.recip().expect("lead entry is nonzero");
                (self.scale(&inv), lead)
            }
        }
    }

    pub fn canonical(&self) -> Matrix {
        self.canonical_scaling().0
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "add")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| x + y)
                .collect(),
        })
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other, "subtract")?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(x, y)| x - y)
                .collect(),
        })
    }

    fn check_same_shape(&self, other: &Matrix, op: &str) -> Result<()> {
        if self.shape() != other.shape() {
            return Err(Error::Shape(format!(
                "cannot {op} {}x{} and {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let y = other.get(k, j);
                    if !y.is_zero() {
                        out.data[i * other.cols + j] += &(x * y);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Matrix {
        let mut out = Matrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.data[j * self.rows + i] = self.get(i, j).clone();
            }
        }
        out
    }

    /// Gauss-Jordan inversion with the first nonzero entry of each column as
    /// pivot.
    pub fn inverse(&self) -> Result<Matrix> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "cannot invert a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        let mut work = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !work.get(r, col).is_zero())
                .ok_or(Error::Singular)?;
            work.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let scale = work.get(col, col).recip()?;
            work.scale_row(col, &scale);
            inv.scale_row(col, &scale);
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = work.get(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                work.sub_row_multiple(r, col, &factor);
                inv.sub_row_multiple(r, col, &factor);
            }
        }
        Ok(inv)
    }

    /// `(self^T)^{-1}`.
    pub fn contragredient(&self) -> Result<Matrix> {
        self.transpose().inverse()
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().rows
    }

    /// Reduced row echelon form with zero rows dropped. Two matrices with
    /// the same number of columns have equal results iff their row spaces
    /// coincide.
    pub fn row_echelon(&self) -> Matrix {
        let mut work = self.clone();
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(pivot) = (pivot_row..self.rows).find(|&r| !work.get(r, col).is_zero()) else {
                continue;
            };
            work.swap_rows(pivot, pivot_row);
            let scale = work.get(pivot_row, col).recip().expect("pivot is nonzero");
            work.scale_row(pivot_row, &scale);
            for r in 0..self.rows {
                if r != pivot_row {
                    let factor = work.get(r, col).clone();
                    if !factor.is_zero() {
                        work.sub_row_multiple(r, pivot_row, &factor);
                    }
                }
            }
            pivot_row += 1;
        }
        work.data.truncate(pivot_row * self.cols);
        work.rows = pivot_row;
        work
    }

    /// Canonical basis of the row space (see [`Matrix::row_echelon`]).
    pub fn row_space(&self) -> Matrix {
        self.row_echelon()
    }

    /// Canonical basis of the column space, as the rows of the result.
    pub fn column_space(&self) -> Matrix {
        self.transpose().row_echelon()
    }

    /// Factors a rank-one matrix as `column * row`, with the column's lead
    /// entry equal to 1.
    pub fn rank_one_factor(&self) -> Result<(Matrix, Matrix)> {
        let rank = self.rank();
        if rank != 1 {
            return Err(Error::Rank {
                expected: "rank 1".into(),
                found: rank,
            });
        }
        let lead = self
            .data
            .iter()
            .position(|x| !x.is_zero())
            .expect("rank one matrix has a nonzero entry");
        let (i0, j0) = (lead / self.cols, lead % self.cols);
        let pivot_inv = self.get(i0, j0).recip()?;
        let column = Matrix {
            rows: self.rows,
            cols: 1,
            data: (0..self.rows)
                .map(|i| self.get(i, j0) * &pivot_inv)
                .collect(),
        };
        let row = Matrix {
            rows: 1,
            cols: self.cols,
            data: self.row(i0).to_vec(),
        };
        Ok((column, row))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, factor: &Rational) {
        for x in &mut self.data[r * self.cols..(r + 1) * self.cols] {
            *x = &*x * factor;
        }
    }

    /// row[target] -= factor * row[source]
    fn sub_row_multiple(&mut self, target: usize, source: usize, factor: &Rational) {
        for j in 0..self.cols {
            let delta = self.get(source, j) * factor;
            self.data[target * self.cols + j] -= &delta;
        }
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} {}", self.rows, self.cols, self)
    }
}
