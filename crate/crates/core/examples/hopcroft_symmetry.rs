// Symmetries of the rank-15 Hopcroft algorithm for the (3,2,3) format,
// where only the factor permutations that keep shapes are admissible.

use std::collections::BTreeMap;

use mmsym::algebra::hopcroft;
use mmsym::groupid::{fingerprint, identify};
use mmsym::symmetry::{
    check_relations, group_closure, hopcroft_generators, hopcroft_relations, orbits,
    FactorPermutation, DEFAULT_CLOSURE_CAP,
};

pub struct HopcroftSymmetry {
    pub admissible: Vec<FactorPermutation>,
    pub all_relations_hold: bool,
    pub order: usize,
    pub group: String,
    pub orbit_sizes: Vec<usize>,
}

pub fn run_example() -> mmsym::Result<HopcroftSymmetry> {
    let alg = hopcroft();
    let admissible = FactorPermutation::admissible(alg.format());
    let names: Vec<String> = admissible.iter().map(|s| s.to_string()).collect();
    println!(
        "format {}: admissible factor permutations {names:?}",
        alg.format()
    );

    let named = hopcroft_generators();
    let assignment: BTreeMap<_, _> = named.iter().cloned().collect();
    let results = check_relations(&assignment, &hopcroft_relations())?;
    for r in &results {
        println!(
            "  {:<20} {}",
            r.relation,
            if r.holds { "holds" } else { "FAILS" }
        );
    }

    let gens: Vec<_> = named.into_iter().map(|(_, g)| g).collect();
    let group = group_closure(alg.format(), &gens, DEFAULT_CLOSURE_CAP)?;
    let fp = fingerprint(&group)?;
    let name = identify(&fp);
    println!("group: {fp} -> {name}");
    let partition = orbits(&gens, &alg)?;
    let orbit_sizes: Vec<usize> = partition.blocks().iter().map(Vec::len).collect();
    println!("orbit sizes {orbit_sizes:?}");

    Ok(HopcroftSymmetry {
        admissible,
        all_relations_hold: results.iter().all(|r| r.holds),
        order: group.len(),
        group: name,
        orbit_sizes,
    })
}

fn main() -> mmsym::Result<()> {
    run_example().map(|_| ())
}
