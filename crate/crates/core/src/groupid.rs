//! Recognition of small groups from their multiplication structure.
//!
//! A group is summarized by its order, the histogram of element orders,
//! commutativity and the size of its center. Among the groups listed in
//! [`reference_table`] these invariants already separate every entry.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::symmetry::IsotropyElement;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupFingerprint {
    pub order: usize,
    pub element_order_histogram: BTreeMap<usize, usize>,
    pub is_abelian: bool,
    pub center_size: usize,
}

impl fmt::Display for GroupFingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let hist: Vec<String> = self
            .element_order_histogram
            .iter()
            .map(|(o, c)| format!("{o}:{c}"))
            .collect();
        write!(
            f,
            "order {} {{{}}} {} center {}",
            self.order,
            hist.join(", "),
            if self.is_abelian {
                "abelian"
            } else {
                "non-abelian"
            },
            self.center_size
        )
    }
}

/// Fingerprint of the finite set `elements` under `op`, which must be
/// closed, contain an identity and inverses. Elements are compared by `Eq`.
pub fn fingerprint_by<T, F>(elements: &[T], op: F) -> Result<GroupFingerprint>
where
    T: Clone + Eq + Hash,
    F: Fn(&T, &T) -> T,
{
    let n = elements.len();
    if n == 0 {
        return Err(Error::Contract("a group has at least one element".into()));
    }
    let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, x)| (x, i)).collect();
    if index.len() != n {
        return Err(Error::Contract("element list contains duplicates".into()));
    }
    let mut table = vec![0usize; n * n];
    for (i, x) in elements.iter().enumerate() {
        for (j, y) in elements.iter().enumerate() {
            let z = op(x, y);
            table[i * n + j] = *index.get(&z).ok_or_else(|| {
                Error::Contract(format!("product of elements {i} and {j} leaves the set"))
            })?;
        }
    }
    let mul = |i: usize, j: usize| table[i * n + j];
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| mul(e, x) == x && mul(x, e) == x))
        .ok_or_else(|| Error::Contract("no identity element".into()))?;
    for x in 0..n {
        if !(0..n).any(|y| mul(x, y) == identity) {
            return Err(Error::Contract(format!("element {x} has no inverse")));
        }
    }
    let mut histogram = BTreeMap::new();
    for x in 0..n {
        let mut k = 1;
        let mut power = x;
        while power != identity {
            power = mul(power, x);
            k += 1;
        }
        *histogram.entry(k).or_insert(0) += 1;
    }
    let central = |x: usize| (0..n).all(|y| mul(x, y) == mul(y, x));
    let center_size = (0..n).filter(|&x| central(x)).count();
    Ok(GroupFingerprint {
        order: n,
        element_order_histogram: histogram,
        is_abelian: center_size == n,
        center_size,
    })
}

/// Fingerprint of a finite set of isotropy elements under composition.
pub fn fingerprint(elements: &[IsotropyElement]) -> Result<GroupFingerprint> {
    fingerprint_by(elements, |g, h| {
        g.compose(h).expect("elements share a format")
    })
}

fn fp(order: usize, hist: &[(usize, usize)], center_size: usize) -> GroupFingerprint {
    GroupFingerprint {
        order,
        element_order_histogram: hist.iter().copied().collect(),
        is_abelian: center_size == order,
        center_size,
    }
}

fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|k| gcd(*k, n) == 1).count()
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Largest order covered by the table.
pub const MAX_ORDER: usize = 36;

/// Named fingerprints: the trivial group, cyclic groups `Z2` to `Z36`, and
/// `Z2xZ2`, `S3`, `D4`, `Q8`, `A4`, `S3xZ2` (the same class as `D6`), `S4`,
/// `S3xS3`.
pub fn reference_table() -> Vec<(String, GroupFingerprint)> {
    let mut table = vec![("trivial".to_string(), fp(1, &[(1, 1)], 1))];
    for n in 2..=MAX_ORDER {
        let hist: Vec<(usize, usize)> = (1..=n)
            .filter(|d| n % d == 0)
            .map(|d| (d, euler_phi(d)))
            .collect();
        table.push((format!("Z{n}"), fp(n, &hist, n)));
    }
    let named = [
        ("Z2xZ2", fp(4, &[(1, 1), (2, 3)], 4)),
        ("S3", fp(6, &[(1, 1), (2, 3), (3, 2)], 1)),
        ("D4", fp(8, &[(1, 1), (2, 5), (4, 2)], 2)),
        ("Q8", fp(8, &[(1, 1), (2, 1), (4, 6)], 2)),
        ("A4", fp(12, &[(1, 1), (2, 3), (3, 8)], 1)),
        ("S3xZ2", fp(12, &[(1, 1), (2, 7), (3, 2), (6, 2)], 2)),
        ("S4", fp(24, &[(1, 1), (2, 9), (3, 8), (4, 6)], 1)),
        ("S3xS3", fp(36, &[(1, 1), (2, 15), (3, 8), (6, 12)], 1)),
    ];
    table.extend(named.into_iter().map(|(n, f)| (n.to_string(), f)));
    table
}

/// Name of the unique table entry with this fingerprint, `"ambiguous:<a>,<b>"`
/// when several match, `"unrecognized"` when none does.
pub fn identify(fingerprint: &GroupFingerprint) -> String {
    identify_in(fingerprint, &reference_table())
}

/// [`identify`] against a caller-supplied table.
pub fn identify_in(fingerprint: &GroupFingerprint, table: &[(String, GroupFingerprint)]) -> String {
    let matches: Vec<&str> = table
        .iter()
        .filter(|(_, f)| f == fingerprint)
        .map(|(name, _)| name.as_str())
        .collect();
    match matches.len() {
        0 => "unrecognized".to_string(),
        1 => matches[0].to_string(),
        _ => format!("ambiguous:{}", matches.join(",")),
    }
}

#[cfg(test)]
mod tests {
    use std::collections::{HashSet, VecDeque};

    use super::*;

    type Perm = Vec<usize>;

    /// `(p ∘ q)(i) = p(q(i))`
    fn compose(p: &Perm, q: &Perm) -> Perm {
        q.iter().map(|&i| p[i]).collect()
    }

    fn cycle(n: usize, points: &[usize]) -> Perm {
        let mut p: Perm = (0..n).collect();
        for (k, &x) in points.iter().enumerate() {
            p[x] = points[(k + 1) % points.len()];
        }
        p
    }

    fn generate(n: usize, gens: &[Perm]) -> Vec<Perm> {
        let id: Perm = (0..n).collect();
        let mut seen = HashSet::from([id.clone()]);
        let mut out = vec![id];
        let mut queue = VecDeque::from([0]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let next = compose(&out[i], g);
                if seen.insert(next.clone()) {
                    out.push(next);
                    queue.push_back(out.len() - 1);
                }
            }
        }
        out
    }

    fn perm_fp(n: usize, gens: &[Perm]) -> GroupFingerprint {
        fingerprint_by(&generate(n, gens), compose).unwrap()
    }

    /// Quaternion units as (sign, unit) with unit 0..4 = 1, i, j, k.
    fn quaternion_mul(x: &(i8, u8), y: &(i8, u8)) -> (i8, u8) {
        const TABLE: [[(i8, u8); 4]; 4] = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (-1, 3), (-1, 0), (1, 1)],
            [(1, 3), (1, 2), (-1, 1), (-1, 0)],
        ];
        let (s, u) = TABLE[x.1 as usize][y.1 as usize];
        (s * x.0 * y.0, u)
    }

    #[test]
    fn table_matches_reference_constructions() {
        let reference: HashMap<String, GroupFingerprint> = reference_table().into_iter().collect();
        let built: Vec<(&str, GroupFingerprint)> = vec![
            ("trivial", perm_fp(1, &[])),
            ("Z2xZ2", perm_fp(4, &[cycle(4, &[0, 1]), cycle(4, &[2, 3])])),
            ("S3", perm_fp(3, &[cycle(3, &[0, 1]), cycle(3, &[0, 1, 2])])),
            (
                "D4",
                perm_fp(4, &[cycle(4, &[0, 1, 2, 3]), cycle(4, &[0, 2])]),
            ),
            (
                "A4",
                perm_fp(
                    4,
                    &[
                        cycle(4, &[0, 1, 2]),
                        compose(&cycle(4, &[0, 1]), &cycle(4, &[2, 3])),
                    ],
                ),
            ),
            (
                "S3xZ2",
                perm_fp(
                    5,
                    &[cycle(5, &[0, 1]), cycle(5, &[0, 1, 2]), cycle(5, &[3, 4])],
                ),
            ),
            (
                "S4",
                perm_fp(4, &[cycle(4, &[0, 1]), cycle(4, &[0, 1, 2, 3])]),
            ),
            (
                "S3xS3",
                perm_fp(
                    6,
                    &[
                        cycle(6, &[0, 1]),
                        cycle(6, &[0, 1, 2]),
                        cycle(6, &[3, 4]),
                        cycle(6, &[3, 4, 5]),
                    ],
                ),
            ),
        ];
        for (name, f) in built {
            assert_eq!(reference[name], f, "{name}");
            assert_eq!(identify(&f), name);
        }
        let q8: Vec<(i8, u8)> = [1, -1]
            .iter()
            .flat_map(|&s| (0..4).map(move |u| (s, u)))
            .collect();
        let f = fingerprint_by(&q8, quaternion_mul).unwrap();
        assert_eq!(reference["Q8"], f);
        for n in 2..=MAX_ORDER {
            let zn: Vec<usize> = (0..n).collect();
            let f = fingerprint_by(&zn, |a, b| (a + b) % n).unwrap();
            assert_eq!(reference[&format!("Z{n}")], f);
            assert_eq!(identify(&f), format!("Z{n}"));
        }
        // D6 is the same class as S3xZ2.
        assert_eq!(
            identify(&perm_fp(
                6,
                &[
                    cycle(6, &[0, 1, 2, 3, 4, 5]),
                    compose(&cycle(6, &[1, 5]), &cycle(6, &[2, 4]))
                ]
            )),
            "S3xZ2"
        );
    }

    #[test]
    fn fingerprints_are_pairwise_distinct() {
        let table = reference_table();
        for (i, (a, fa)) in table.iter().enumerate() {
            for (b, fb) in &table[i + 1..] {
                assert_ne!(fa, fb, "{a} vs {b}");
            }
        }
    }

    #[test]
    fn shuffling_does_not_matter() {
        let mut s4 = generate(4, &[cycle(4, &[0, 1]), cycle(4, &[0, 1, 2, 3])]);
        let before = fingerprint_by(&s4, compose).unwrap();
        s4.reverse();
        s4.rotate_left(7);
        assert_eq!(fingerprint_by(&s4, compose).unwrap(), before);
    }

    #[test]
    fn rejects_non_groups_and_unknowns() {
        let s4 = generate(4, &[cycle(4, &[0, 1]), cycle(4, &[0, 1, 2, 3])]);
        assert!(matches!(
            fingerprint_by(&s4[..5], compose),
            Err(Error::Contract(_))
        ));
        assert!(fingerprint_by::<usize, _>(&[], |a, b| a + b).is_err());
        // Z4 x Z2 is not in the table.
        let z4z2: Vec<(usize, usize)> = (0..4).flat_map(|a| (0..2).map(move |b| (a, b))).collect();
        let f = fingerprint_by(&z4z2, |x, y| ((x.0 + y.0) % 4, (x.1 + y.1) % 2)).unwrap();
        assert_eq!(identify(&f), "unrecognized");
        // Z2xZ4 and Z4xZ2 cannot be told apart by fingerprint.
        let table = vec![
            ("Z4xZ2".to_string(), f.clone()),
            ("Z2xZ4".to_string(), f.clone()),
        ];
        assert_eq!(identify_in(&f, &table), "ambiguous:Z4xZ2,Z2xZ4");
    }
}
