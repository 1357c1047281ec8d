//! Decomposable symmetries of the structure tensor `⟨m,n,p⟩`.
//!
//! Every element is stored as `g = T(a,b,c) ∘ ρ_σ` where
//! `T(a,b,c)(x⊗y⊗z) = a x b⁻¹ ⊗ b y c⁻¹ ⊗ c z a⁻¹` and `ρ_σ` moves the factor
//! in slot `i` to slot `σ(i)`, transposing every factor when `σ` is odd.
//! `a`, `b`, `c` are only defined up to independent nonzero scalars, so they
//! are kept with lead entry 1 and equality is plain structural equality.

mod generators;
mod group;
mod io;
mod search;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use crate::algebra::{BilinearAlgorithm, Format, TensorElement, Triple};
use crate::error::{Error, Result};
use crate::exact::Matrix;

pub use generators::{
    hopcroft_generators, hopcroft_relations, laderman_generators, laderman_rejected_element,
    laderman_relations,
};
pub use group::{
    check_relations, group_closure, orbits, OrbitPartition, RelationResult, DEFAULT_CLOSURE_CAP,
};
pub use io::{
    element_from_value, element_to_value, parse_element, parse_elements, serialize_element,
};
pub use search::{search_automorphisms, SearchLimits, SearchPool, SearchReport};

/// A permutation of the three tensor factors.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FactorPermutation {
    Identity,
    Swap12,
    Swap13,
    Swap23,
    Cycle123,
    Cycle132,
}

impl FactorPermutation {
    pub const ALL: [FactorPermutation; 6] = [
        FactorPermutation::Identity,
        FactorPermutation::Swap12,
        FactorPermutation::Swap13,
        FactorPermutation::Swap23,
        FactorPermutation::Cycle123,
        FactorPermutation::Cycle132,
    ];

    /// Zero-based images `[σ(1), σ(2), σ(3)]`.
    pub fn images(self) -> [usize; 3] {
        use FactorPermutation::*;
        match self {
            Identity => [0, 1, 2],
            Swap12 => [1, 0, 2],
            Swap13 => [2, 1, 0],
            Swap23 => [0, 2, 1],
            Cycle123 => [1, 2, 0],
            Cycle132 => [2, 0, 1],
        }
    }

    fn from_images(images: [usize; 3]) -> Self {
        Self::ALL
            .into_iter()
            .find(|s| s.images() == images)
            .expect("images form a permutation of three points")
    }

    pub fn is_odd(self) -> bool {
        use FactorPermutation::*;
        matches!(self, Swap12 | Swap13 | Swap23)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn then_after(self, other: FactorPermutation) -> Self {
        let (g, h) = (self.images(), other.images());
        Self::from_images([g[h[0]], g[h[1]], g[h[2]]])
    }

    pub fn inverse(self) -> Self {
        let g = self.images();
        let mut inv = [0; 3];
        for (i, &gi) in g.iter().enumerate() {
            inv[gi] = i;
        }
        Self::from_images(inv)
    }

    pub fn name(self) -> &'static str {
        use FactorPermutation::*;
        match self {
            Identity => "e",
            Swap12 => "(12)",
            Swap13 => "(13)",
            Swap23 => "(23)",
            Cycle123 => "(123)",
            Cycle132 => "(132)",
        }
    }

    /// `ρ_σ` maps `M_{mn} ⊗ M_{np} ⊗ M_{pm}` to itself only when the moved
    /// factors have matching shapes: `m = p` for (12), `n = p` for (13),
    /// `m = n` for (23) and `m = n = p` for the 3-cycles.
    ///
    /// For `(1,1,1)` every `ρ_σ` is the identity map of a one-dimensional
    /// space, so only `e` is admitted to keep elements unique.
    pub fn is_admissible(self, format: Format) -> bool {
        if format.volume() == 1 {
            return self == FactorPermutation::Identity;
        }
        let shapes = format.factor_shapes();
        let images = self.images();
        (0..3).all(|i| {
            let (r, c) = shapes[i];
            let moved = if self.is_odd() { (c, r) } else { (r, c) };
            moved == shapes[images[i]]
        })
    }

    pub fn admissible(format: Format) -> Vec<FactorPermutation> {
        Self::ALL
            .into_iter()
            .filter(|s| s.is_admissible(format))
            .collect()
    }

    /// `ρ_σ` on a decomposable tensor given by its three factors.
    pub fn permute_factors(self, factors: [Matrix; 3]) -> [Matrix; 3] {
        let images = self.images();
        let odd = self.is_odd();
        let mut out: [Option<Matrix>; 3] = [None, None, None];
        for (i, f) in factors.into_iter().enumerate() {
            out[images[i]] = Some(if odd { f.transpose() } else { f });
        }
        out.map(|f| f.expect("every slot receives a factor"))
    }
}

impl fmt::Display for FactorPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FactorPermutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let normalized = match trimmed.as_str() {
            "" | "1" | "id" => "e",
            "(21)" => "(12)",
            "(31)" => "(13)",
            "(32)" => "(23)",
            "(231)" | "(312)" => "(123)",
            "(321)" | "(213)" => "(132)",
            other => other,
        };
        Self::ALL
            .into_iter()
            .find(|p| p.name() == normalized)
            .ok_or_else(|| Error::parse("sigma", format!("unknown factor permutation {s:?}")))
    }
}

fn mul(x: &Matrix, y: &Matrix) -> Matrix {
    x.mul(y).expect("conforming shapes")
}

/// An element `T(a,b,c) ∘ ρ_σ` of the isotropy group of `⟨m,n,p⟩`.
#[derive(Clone)]
pub struct IsotropyElement {
    sigma: FactorPermutation,
    mats: [Matrix; 3],
    inverses: [Matrix; 3],
}

impl IsotropyElement {
    /// General constructor: checks sizes, invertibility and admissibility,
    /// then canonicalizes.
    pub fn new(
        format: Format,
        sigma: FactorPermutation,
        a: Matrix,
        b: Matrix,
        c: Matrix,
    ) -> Result<Self> {
        if !sigma.is_admissible(format) {
            return Err(Error::Admissibility {
                sigma: sigma.to_string(),
                format: format.to_string(),
            });
        }
        let mats = [a, b, c];
        for ((name, m), size) in ["a", "b", "c"].iter().zip(&mats).zip(format.dims()) {
            if m.shape() != (size, size) {
                return Err(Error::Shape(format!(
                    "{name} is {}x{} but format {format} needs {size}x{size}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        let inverses = [mats[0].inverse()?, mats[1].inverse()?, mats[2].inverse()?];
        Ok(Self::canonicalized(sigma, mats, inverses))
    }

    /// `T(a,b,c)`, the factor-preserving part.
    pub fn make_t(format: Format, a: Matrix, b: Matrix, c: Matrix) -> Result<Self> {
        Self::new(format, FactorPermutation::Identity, a, b, c)
    }

    /// `ρ_σ` alone.
    pub fn make_rho(format: Format, sigma: FactorPermutation) -> Result<Self> {
        let [m, n, p] = format.dims();
        Self::new(
            format,
            sigma,
            Matrix::identity(m),
            Matrix::identity(n),
            Matrix::identity(p),
        )
    }

    pub fn identity(format: Format) -> Self {
        Self::make_rho(format, FactorPermutation::Identity).expect("identity is admissible")
    }

    fn canonicalized(sigma: FactorPermutation, mats: [Matrix; 3], inverses: [Matrix; 3]) -> Self {
        let [(a, ai), (b, bi), (c, ci)] = [0, 1, 2].map(|k| {
            let (canon, lead) = mats[k].canonical_scaling();
            let inv = if lead.is_one() {
                inverses[k].clone()
            } else {
                inverses[k].scale(&lead)
            };
            (canon, inv)
        });
        IsotropyElement {
            sigma,
            mats: [a, b, c],
            inverses: [ai, bi, ci],
        }
    }

    pub fn sigma(&self) -> FactorPermutation {
        self.sigma
    }

    pub fn a(&self) -> &Matrix {
        &self.mats[0]
    }

    pub fn b(&self) -> &Matrix {
        &self.mats[1]
    }

    pub fn c(&self) -> &Matrix {
        &self.mats[2]
    }

    pub fn format(&self) -> Format {
        Format {
            m: self.mats[0].rows(),
            n: self.mats[1].rows(),
            p: self.mats[2].rows(),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.sigma == FactorPermutation::Identity
            && self.mats.iter().all(|m| *m == Matrix::identity(m.rows()))
    }

    /// Image of the decomposable tensor `x ⊗ y ⊗ z`.
    pub fn apply_to_factors(&self, factors: [Matrix; 3]) -> Result<[Matrix; 3]> {
        let shapes = self.format().factor_shapes();
        for (k, f) in factors.iter().enumerate() {
            if f.shape() != shapes[k] {
                return Err(Error::Shape(format!(
                    "tensor factor {} is {}x{} but format {} needs {}x{}",
                    k + 1,
                    f.rows(),
                    f.cols(),
                    self.format(),
                    shapes[k].0,
                    shapes[k].1
                )));
            }
        }
        let [x, y, z] = self.sigma.permute_factors(factors);
        let [a, b, c] = &self.mats;
        let [ai, bi, ci] = &self.inverses;
        Ok([
            mul(&mul(a, &x), bi),
            mul(&mul(b, &y), ci),
            mul(&mul(c, &z), ai),
        ])
    }

    /// Image of a triple through its tensor `a ⊗ b ⊗ cᵗ`, read back in
    /// canonical scaling.
    pub fn apply_to_triple(&self, t: &Triple) -> Result<Triple> {
        let [x, y, z] = self.apply_to_factors(t.tensor_factors())?;
        Ok(Triple::from_tensor(x, y, z)?.canonical())
    }

    pub fn apply_to_tensor(&self, t: &TensorElement) -> Result<TensorElement> {
        if t.format() != self.format() {
            return Err(Error::Shape(format!(
                "tensor of format {} acted on by element of format {}",
                t.format(),
                self.format()
            )));
        }
        let mut out = TensorElement::zero(t.format());
        let mut failure = None;
        t.for_each_term(|coef, factors| match self.apply_to_factors(factors) {
            Ok([x, y, z]) => out.add_decomposable(&x.scale(coef), &y, &z),
            Err(e) => failure = Some(e),
        });
        match failure {
            Some(e) => Err(e),
            None => Ok(out),
        }
    }

    /// `ρ_σ T(a,b,c) ρ_σ⁻¹` written as `T(a',b',c')`.
    fn conjugate_t(
        sigma: FactorPermutation,
        mats: &[Matrix; 3],
        inverses: &[Matrix; 3],
    ) -> ([Matrix; 3], [Matrix; 3]) {
        use FactorPermutation::*;
        let [a, b, c] = mats.clone();
        let [ai, bi, ci] = inverses.clone();
        // x^∨ = (xᵗ)⁻¹, whose inverse is xᵗ.
        let dual = |x: Matrix, xi: Matrix| (xi.transpose(), x.transpose());
        match sigma {
            Identity => ([a, b, c], [ai, bi, ci]),
            Cycle123 => ([c, a, b], [ci, ai, bi]),
            Cycle132 => ([b, c, a], [bi, ci, ai]),
            Swap12 => {
                let ((a2, a2i), (b2, b2i), (c2, c2i)) = (dual(c, ci), dual(b, bi), dual(a, ai));
                ([a2, b2, c2], [a2i, b2i, c2i])
            }
            Swap13 => {
                let ((a2, a2i), (b2, b2i), (c2, c2i)) = (dual(a, ai), dual(c, ci), dual(b, bi));
                ([a2, b2, c2], [a2i, b2i, c2i])
            }
            Swap23 => {
                let ((a2, a2i), (b2, b2i), (c2, c2i)) = (dual(b, bi), dual(a, ai), dual(c, ci));
                ([a2, b2, c2], [a2i, b2i, c2i])
            }
        }
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &IsotropyElement) -> Result<IsotropyElement> {
        if self.format() != other.format() {
            return Err(Error::Shape(format!(
                "cannot compose elements of formats {} and {}",
                self.format(),
                other.format()
            )));
        }
        let (cm, ci) = Self::conjugate_t(self.sigma, &other.mats, &other.inverses);
        let mats = [0, 1, 2].map(|k| mul(&self.mats[k], &cm[k]));
        let inverses = [0, 1, 2].map(|k| mul(&ci[k], &self.inverses[k]));
        Ok(Self::canonicalized(
            self.sigma.then_after(other.sigma),
            mats,
            inverses,
        ))
    }

    pub fn inverse(&self) -> IsotropyElement {
        let sigma = self.sigma.inverse();
        let (mats, inverses) = Self::conjugate_t(sigma, &self.inverses, &self.mats);
        Self::canonicalized(sigma, mats, inverses)
    }

    pub fn pow(&self, k: i64) -> IsotropyElement {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = IsotropyElement::identity(self.format());
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose(&base).expect("same format");
        }
        acc
    }

    /// Image algorithm, triple order preserved, each triple canonical.
    pub fn act_on_algorithm(&self, alg: &BilinearAlgorithm) -> Result<BilinearAlgorithm> {
        let triples = alg
            .triples()
            .iter()
            .map(|t| self.apply_to_triple(t))
            .collect::<Result<Vec<_>>>()?;
        BilinearAlgorithm::new(alg.format(), triples, alg.name().map(str::to_string))
    }

    pub fn is_automorphism(&self, alg: &BilinearAlgorithm) -> Result<bool> {
        Ok(self.act_on_algorithm(alg)?.same_multiset(alg))
    }

    fn key(&self) -> (FactorPermutation, &[Matrix; 3]) {
        (self.sigma, &self.mats)
    }
}

impl PartialEq for IsotropyElement {
    fn eq(&self, other: &Self) -> bool {
        self.key() == other.key()
    }
}

impl Eq for IsotropyElement {}

impl Hash for IsotropyElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.key().hash(state);
    }
}

impl PartialOrd for IsotropyElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for IsotropyElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Debug for IsotropyElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "T({:?}, {:?}, {:?})∘ρ{}",
            self.mats[0], self.mats[1], self.mats[2], self.sigma
        )
    }
}
