use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use serde::Serialize;

use super::IsotropyElement;
use crate::algebra::{BilinearAlgorithm, Format, Triple};
use crate::error::{Error, Result};

pub const DEFAULT_CLOSURE_CAP: usize = 10_000;

/// Breadth-first closure of `generators` under composition. The identity
/// comes first, then elements in discovery order, so the output is
/// deterministic for a given generator list.
pub fn group_closure(
    format: Format,
    generators: &[IsotropyElement],
    cap: usize,
) -> Result<Vec<IsotropyElement>> {
    for g in generators {
        if g.format() != format {
            return Err(Error::Shape(format!(
                "generator of format {} in a closure over {format}",
                g.format()
            )));
        }
    }
    let identity = IsotropyElement::identity(format);
    let mut seen: HashSet<IsotropyElement> = HashSet::from([identity.clone()]);
    let mut elements = vec![identity];
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    while let Some(idx) = queue.pop_front() {
        for g in generators {
            let next = elements[idx].compose(g)?;
            if seen.insert(next.clone()) {
                if elements.len() == cap {
                    return Err(Error::ClosureCap { cap });
                }
                elements.push(next);
                queue.push_back(elements.len() - 1);
            }
        }
    }
    Ok(elements)
}

/// A partition of the one-based triple indices `1..=r`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct OrbitPartition {
    blocks: Vec<Vec<usize>>,
}

impl OrbitPartition {
    /// Blocks sorted internally and by least element.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn block_of(&self, index: usize) -> Option<&[usize]> {
        self.blocks
            .iter()
            .find(|b| b.contains(&index))
            .map(Vec::as_slice)
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut root = x;
    while parent[root] != root {
        root = parent[root];
    }
    let mut cur = x;
    while parent[cur] != root {
        let next = parent[cur];
        parent[cur] = root;
        cur = next;
    }
    root
}

/// Orbits of the triples under the group generated by `elements`. Every
/// element must be an automorphism of `alg`.
pub fn orbits(elements: &[IsotropyElement], alg: &BilinearAlgorithm) -> Result<OrbitPartition> {
    let r = alg.rank();
    let canonical: Vec<Triple> = alg.triples().iter().map(Triple::canonical).collect();
    let mut position: HashMap<&Triple, Vec<usize>> = HashMap::new();
    for (l, t) in canonical.iter().enumerate() {
        position.entry(t).or_default().push(l);
    }
    let mut parent: Vec<usize> = (0..r).collect();
    for (l, t) in canonical.iter().enumerate() {
        for same in &position[t] {
            let (x, y) = (find(&mut parent, l), find(&mut parent, *same));
            parent[x.max(y)] = x.min(y);
        }
    }
    for g in elements {
        let image = g.act_on_algorithm(alg)?;
        if !image.same_multiset(alg) {
            return Err(Error::Contract(format!(
                "{g:?} is not an automorphism of the algorithm"
            )));
        }
        for (l, t) in image.triples().iter().enumerate() {
            let targets = &position[t];
            let (x, y) = (find(&mut parent, l), find(&mut parent, targets[0]));
            parent[x.max(y)] = x.min(y);
        }
    }
    let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for l in 0..r {
        let root = find(&mut parent, l);
        blocks.entry(root).or_default().push(l + 1);
    }
    Ok(OrbitPartition {
        blocks: blocks.into_values().collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationResult {
    pub relation: String,
    pub holds: bool,
}

/// Evaluates a word such as `F4 F1 F4^-1`; `1` is the empty word. Products
/// read as composition, so the rightmost letter acts first.
fn evaluate_word(
    word: &str,
    assignment: &BTreeMap<String, IsotropyElement>,
    format: Format,
) -> Result<IsotropyElement> {
    let mut acc = IsotropyElement::identity(format);
    for token in word.split_whitespace() {
        if token == "1" {
            continue;
        }
        let (name, exponent) = match token.split_once('^') {
            Some((name, exp)) => {
                let k: i64 = exp
                    .parse()
                    .map_err(|_| Error::parse(word, format!("bad exponent in {token:?}")))?;
                (name, k)
            }
            None => (token, 1),
        };
        let g = assignment
            .get(name)
            .ok_or_else(|| Error::UnknownName(name.to_string()))?;
        acc = acc.compose(&g.pow(exponent))?;
    }
    Ok(acc)
}

/// Checks relations written as `lhs = rhs` or as a bare word `w`, meaning
/// `w = 1`.
pub fn check_relations(
    assignment: &BTreeMap<String, IsotropyElement>,
    relations: &[&str],
) -> Result<Vec<RelationResult>> {
    let format = match assignment.values().next() {
        Some(g) => g.format(),
        None => return Err(Error::Domain("empty generator assignment".into())),
    };
    relations
        .iter()
        .map(|rel| {
            let (lhs, rhs) = rel.split_once('=').unwrap_or((rel, "1"));
            let holds =
                evaluate_word(lhs, assignment, format)? == evaluate_word(rhs, assignment, format)?;
            Ok(RelationResult {
                relation: rel.trim().to_string(),
                holds,
            })
        })
        .collect()
}
