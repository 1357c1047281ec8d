use std::collections::BTreeMap;
use std::fmt;

use super::{BilinearAlgorithm, Triple};
use crate::error::{Error, Result};
use crate::exact::Matrix;

/// Ranks of the three tensor factors. Invariant under the factor-preserving
/// part of the isotropy group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TripleType(pub usize, pub usize, pub usize);

impl TripleType {
    pub fn as_array(&self) -> [usize; 3] {
        [self.0, self.1, self.2]
    }
}

impl fmt::Display for TripleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.0, self.1, self.2)
    }
}

pub fn triple_type(t: &Triple) -> TripleType {
    TripleType(t.a().rank(), t.b().rank(), t.c().rank())
}

pub fn type_census(alg: &BilinearAlgorithm) -> BTreeMap<TripleType, usize> {
    let mut census = BTreeMap::new();
    for t in alg.triples() {
        *census.entry(triple_type(t)).or_insert(0) += 1;
    }
    census
}

/// A type-(1,1,1) triple split into six vectors:
/// `a = d e'`, `b = e f'`, `cᵗ = f d'`. Columns `d`, `e`, `f` have lead
/// entry 1; the primed rows carry the scalars.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FineFactorization {
    pub d: Matrix,
    pub e_dual: Matrix,
    pub e: Matrix,
    pub f_dual: Matrix,
    pub f: Matrix,
    pub d_dual: Matrix,
}

impl FineFactorization {
    /// The six vectors in column order `d, e', e, f', f, d'`.
    pub fn vectors(&self) -> [&Matrix; 6] {
        [
            &self.d,
            &self.e_dual,
            &self.e,
            &self.f_dual,
            &self.f,
            &self.d_dual,
        ]
    }

    pub fn recombine(&self) -> Result<Triple> {
        Triple::from_tensor(
            self.d.mul(&self.e_dual)?,
            self.e.mul(&self.f_dual)?,
            self.f.mul(&self.d_dual)?,
        )
    }

    /// Space-separated [`vector_label`]s, e.g. `"1-3 -1 1-2 3 1+3 3"`.
    pub fn pattern(&self) -> String {
        self.vectors().map(vector_label).join(" ")
    }
}

pub fn fine_factorization(t: &Triple) -> Result<FineFactorization> {
    let ty = triple_type(t);
    if ty != TripleType(1, 1, 1) {
        return Err(Error::Rank {
            expected: "type (1,1,1)".into(),
            found: ty.as_array().into_iter().max().unwrap_or(0),
        });
    }
    let [x, y, z] = t.tensor_factors();
    let (d, e_dual) = x.rank_one_factor()?;
    let (e, f_dual) = y.rank_one_factor()?;
    let (f, d_dual) = z.rank_one_factor()?;
    Ok(FineFactorization {
        d,
        e_dual,
        e,
        f_dual,
        f,
        d_dual,
    })
}

/// Compact label of a coordinate vector: basis indices joined by signs,
/// `(1,0,-1)` is `"1-3"`, `(-1,1,0)` is `"-1+2"`. Coefficients other than
/// ±1 are written as `c*i`.
pub fn vector_label(v: &Matrix) -> String {
    let mut out = String::new();
    for (idx, c) in v.entries().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let k = idx + 1;
        let negative = c.is_negative();
        if negative {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        if c.is_unit_sign() {
            out.push_str(&k.to_string());
        } else {
            let magnitude = if negative { -c } else { c.clone() };
            out.push_str(&format!("{magnitude}*{k}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
