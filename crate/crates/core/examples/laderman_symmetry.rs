// The four generators of the Laderman symmetry group: relations, the
// group they close to, the orbits on the 23 triples, and a sign pattern
// that is not a symmetry.

use std::collections::BTreeMap;

use mmsym::algebra::{laderman, type_census};
use mmsym::groupid::{fingerprint, identify};
use mmsym::symmetry::{
    check_relations, group_closure, laderman_generators, laderman_rejected_element,
    laderman_relations, orbits, DEFAULT_CLOSURE_CAP,
};

pub struct LadermanSymmetry {
    pub generators_fix: bool,
    pub relations_hold: usize,
    pub relations: usize,
    pub order: usize,
    pub group: String,
    pub orbits: Vec<Vec<usize>>,
    pub rejected_is_symmetry: bool,
}

pub fn run_example() -> mmsym::Result<LadermanSymmetry> {
    let alg = laderman();
    println!("triple types:");
    for (ty, count) in type_census(&alg) {
        println!("  {ty}: {count}");
    }

    let named = laderman_generators();
    let mut generators_fix = true;
    for (name, g) in &named {
        let fixes = g.is_automorphism(&alg)?;
        generators_fix &= fixes;
        println!(
            "{name} (factor permutation {}) fixes the algorithm: {fixes}",
            g.sigma()
        );
    }

    let assignment: BTreeMap<_, _> = named.iter().cloned().collect();
    let results = check_relations(&assignment, &laderman_relations())?;
    for r in &results {
        println!(
            "  {:<28} {}",
            r.relation,
            if r.holds { "holds" } else { "FAILS" }
        );
    }

    let gens: Vec<_> = named.into_iter().map(|(_, g)| g).collect();
    let group = group_closure(alg.format(), &gens, DEFAULT_CLOSURE_CAP)?;
    let name = identify(&fingerprint(&group)?);
    let partition = orbits(&gens, &alg)?;
    println!("group of order {} ({name})", group.len());
    for block in partition.blocks() {
        println!("  orbit {block:?}");
    }

    let rejected = laderman_rejected_element();
    let rejected_is_symmetry = rejected.is_automorphism(&alg)?;
    println!("T(1, 1, pi23) is a symmetry: {rejected_is_symmetry}");

    Ok(LadermanSymmetry {
        generators_fix,
        relations_hold: results.iter().filter(|r| r.holds).count(),
        relations: results.len(),
        order: group.len(),
        group: name,
        orbits: partition.blocks().to_vec(),
        rejected_is_symmetry,
    })
}

fn main() -> mmsym::Result<()> {
    run_example().map(|_| ())
}
