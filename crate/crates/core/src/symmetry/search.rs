//! Bounded enumeration of automorphisms `T(a,b,c)∘ρ_σ` with `a`, `b`, `c`
//! drawn from a finite pool of matrices.
//!
//! For a fixed `σ`, write `s_l = ρ_σ(t_l)` and look for `T(a,b,c)` taking
//! the multiset `{s_l}` onto `{t_l}`. Since `x ↦ a x b⁻¹` moves column spaces
//! by `a` and row spaces by `b⁻¹`, each of `a`, `b`, `c` can be filtered on
//! its own: `a` must carry the column spaces of the first factors of the
//! `s_l` onto those of the `t_l` (as multisets, keyed by triple type), and
//! must carry the row spaces of the third factors of the `t_l` onto those of
//! the `s_l`. `b` and `c` are filtered the same way on the other factors.
//! Survivors are combined and each combination is checked exactly.

use std::collections::{BTreeSet, HashMap};
use std::str::FromStr;

use serde::Serialize;

use super::{FactorPermutation, IsotropyElement};
use crate::algebra::BilinearAlgorithm;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};

/// Matrix entries allowed for `a`, `b`, `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchPool {
    entries: Vec<Rational>,
}

impl SearchPool {
    pub fn new(entries: Vec<Rational>) -> Result<Self> {
        let set: BTreeSet<Rational> = entries.into_iter().collect();
        if !set.iter().any(|x| !x.is_zero()) {
            return Err(Error::Domain(
                "the search pool needs a nonzero entry".into(),
            ));
        }
        Ok(SearchPool {
            entries: set.into_iter().collect(),
        })
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    /// All invertible `k x k` matrices over the pool, scaled to lead entry 1
    /// and deduplicated. The number of matrices enumerated is added to
    /// `spent`; `None` means the budget ran out.
    fn matrices(&self, k: usize, budget: u64, spent: &mut u64) -> Option<Vec<Matrix>> {
        let cells = k * k;
        let base = self.entries.len();
        let total = (base as u64).checked_pow(cells as u32)?;
        if spent.saturating_add(total) > budget {
            *spent = budget;
            return None;
        }
        *spent += total;
        let mut found = BTreeSet::new();
        let mut digits = vec![0usize; cells];
        loop {
            let data: Vec<Rational> = digits.iter().map(|&d| self.entries[d].clone()).collect();
            let m = Matrix::from_vec(k, k, data).expect("k*k entries");
            if m.rank() == k {
                found.insert(m.canonical());
            }
            let mut pos = cells;
            loop {
                if pos == 0 {
                    return Some(found.into_iter().collect());
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < base {
                    break;
                }
                digits[pos] = 0;
            }
        }
    }
}

impl Default for SearchPool {
    fn default() -> Self {
        SearchPool::new(vec![Rational::from(-1), Rational::zero(), Rational::one()])
            .expect("nonzero entries")
    }
}

impl FromStr for SearchPool {
    type Err = Error;

    /// Comma-separated rationals, e.g. `"-1,0,1"`.
    fn from_str(s: &str) -> Result<Self> {
        let entries = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<Rational>()
                    .map_err(|e| Error::parse("pool entries", format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SearchPool::new(entries)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchLimits {
    /// Upper bound on pool matrices enumerated plus candidate matrices
    /// filtered plus combinations verified.
    pub budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { budget: 10_000_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SigmaStats {
    pub sigma: String,
    /// Filter survivors for `a`, `b`, `c`.
    pub survivors: [usize; 3],
    pub combinations: u64,
    pub automorphisms: usize,
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    /// Verified automorphisms, sorted.
    pub found: Vec<IsotropyElement>,
    pub candidates: u64,
    /// `false` when the budget ran out before the enumeration finished.
    pub complete: bool,
    pub per_sigma: Vec<SigmaStats>,
}

type SpaceKey = ([usize; 3], Matrix);

/// One subspace-multiset condition on a candidate matrix `g`: the bases in
/// `mapped`, multiplied on the right by `g` (or `gᵗ`), must reproduce
/// `reference` with multiplicities.
struct SpaceCondition {
    mapped: Vec<(SpaceKey, usize)>,
    reference: HashMap<SpaceKey, usize>,
    transpose: bool,
}

impl SpaceCondition {
    fn new(mapped: Vec<SpaceKey>, reference: Vec<SpaceKey>, transpose: bool) -> Self {
        let mut counts: HashMap<SpaceKey, usize> = HashMap::new();
        for k in mapped {
            *counts.entry(k).or_insert(0) += 1;
        }
        let mut mapped: Vec<(SpaceKey, usize)> = counts.into_iter().collect();
        mapped.sort();
        let mut reference_counts = HashMap::new();
        for k in reference {
            *reference_counts.entry(k).or_insert(0) += 1;
        }
        SpaceCondition {
            mapped,
            reference: reference_counts,
            transpose,
        }
    }

    fn accepts(&self, g: &Matrix) -> bool {
        let g = if self.transpose {
            g.transpose()
        } else {
            g.clone()
        };
        self.mapped.iter().all(|((ty, basis), count)| {
            let image = basis.mul(&g).expect("basis width matches").row_echelon();
            self.reference.get(&(*ty, image)) == Some(count)
        })
    }
}

fn factor_type(factors: &[Matrix; 3]) -> [usize; 3] {
    [factors[0].rank(), factors[1].rank(), factors[2].rank()]
}

/// Conditions on `a`, `b`, `c` for one factor permutation.
fn conditions(source: &[[Matrix; 3]], target: &[[Matrix; 3]]) -> [Vec<SpaceCondition>; 3] {
    let st: Vec<[usize; 3]> = source.iter().map(factor_type).collect();
    let tt: Vec<[usize; 3]> = target.iter().map(factor_type).collect();
    let cols = |set: &[[Matrix; 3]], types: &[[usize; 3]], slot: usize| -> Vec<SpaceKey> {
        set.iter()
            .zip(types)
            .map(|(f, t)| (*t, f[slot].column_space()))
            .collect()
    };
    let rows = |set: &[[Matrix; 3]], types: &[[usize; 3]], slot: usize| -> Vec<SpaceKey> {
        set.iter()
            .zip(types)
            .map(|(f, t)| (*t, f[slot].row_space()))
            .collect()
    };
    [
        vec![
            SpaceCondition::new(cols(source, &st, 0), cols(target, &tt, 0), true),
            SpaceCondition::new(rows(target, &tt, 2), rows(source, &st, 2), false),
        ],
        vec![
            SpaceCondition::new(cols(source, &st, 1), cols(target, &tt, 1), true),
            SpaceCondition::new(rows(target, &tt, 0), rows(source, &st, 0), false),
        ],
        vec![
            SpaceCondition::new(cols(source, &st, 2), cols(target, &tt, 2), true),
            SpaceCondition::new(rows(target, &tt, 1), rows(source, &st, 1), false),
        ],
    ]
}

/// Enumerates `T(a,b,c)∘ρ_σ` over every admissible `σ` and pool matrices
/// `a`, `b`, `c`, returning the automorphisms of `alg` found within the
/// budget.
pub fn search_automorphisms(
    alg: &BilinearAlgorithm,
    pool: &SearchPool,
    limits: SearchLimits,
) -> Result<SearchReport> {
    let format = alg.format();
    let budget = limits.budget;
    let mut spent = 0u64;
    let mut complete = true;
    let mut found = BTreeSet::new();
    let mut per_sigma = Vec::new();

    let mut pools: HashMap<usize, Vec<Matrix>> = HashMap::new();
    for k in format.dims() {
        if pools.contains_key(&k) {
            continue;
        }
        match pool.matrices(k, budget, &mut spent) {
            Some(list) => {
                pools.insert(k, list);
            }
            None => {
                return Ok(SearchReport {
                    found: Vec::new(),
                    candidates: spent,
                    complete: false,
                    per_sigma,
                })
            }
        }
    }

    let target: Vec<[Matrix; 3]> = alg.triples().iter().map(|t| t.tensor_factors()).collect();
    'sigma: for sigma in FactorPermutation::admissible(format) {
        let source: Vec<[Matrix; 3]> = target
            .iter()
            .map(|f| sigma.permute_factors(f.clone()))
            .collect();
        let conds = conditions(&source, &target);
        let mut survivors: [Vec<Matrix>; 3] = [Vec::new(), Vec::new(), Vec::new()];
        for (slot, size) in format.dims().into_iter().enumerate() {
            for g in &pools[&size] {
                if spent >= budget {
                    complete = false;
                    break 'sigma;
                }
                spent += 1;
                if conds[slot].iter().all(|c| c.accepts(g)) {
                    survivors[slot].push(g.clone());
                }
            }
        }
        let combinations = survivors.iter().map(|s| s.len() as u64).product::<u64>();
        let mut automorphisms = 0;
        'combos: for a in &survivors[0] {
            for b in &survivors[1] {
                for c in &survivors[2] {
                    if spent >= budget {
                        complete = false;
                        break 'combos;
                    }
                    spent += 1;
                    let g = IsotropyElement::new(format, sigma, a.clone(), b.clone(), c.clone())?;
                    if g.is_automorphism(alg)? {
                        automorphisms += 1;
                        found.insert(g);
                    }
                }
            }
        }
        per_sigma.push(SigmaStats {
            sigma: sigma.name().to_string(),
            survivors: [survivors[0].len(), survivors[1].len(), survivors[2].len()],
            combinations,
            automorphisms,
        });
        if !complete {
            break;
        }
    }
    Ok(SearchReport {
        found: found.into_iter().collect(),
        candidates: spent,
        complete,
        per_sigma,
    })
}
