// Searches for automorphisms with matrix entries in {-1, 0, 1} and names
// the group they generate.

use mmsym::algebra::{hopcroft, laderman, strassen, BilinearAlgorithm};
use mmsym::groupid::{fingerprint, identify};
use mmsym::symmetry::{
    group_closure, orbits, search_automorphisms, SearchLimits, SearchPool, DEFAULT_CLOSURE_CAP,
};

pub struct Found {
    pub algorithm: String,
    pub order: usize,
    pub group: String,
    pub orbits: Vec<Vec<usize>>,
    pub complete: bool,
}

fn search(alg: &BilinearAlgorithm) -> mmsym::Result<Found> {
    let report = search_automorphisms(alg, &SearchPool::default(), SearchLimits::default())?;
    for s in &report.per_sigma {
        println!(
            "  sigma {:>5}: survivors a/b/c = {:?}, {} combinations, {} automorphisms",
            s.sigma, s.survivors, s.combinations, s.automorphisms
        );
    }
    let group = group_closure(alg.format(), &report.found, DEFAULT_CLOSURE_CAP)?;
    let fp = fingerprint(&group)?;
    let partition = orbits(&report.found, alg)?;
    Ok(Found {
        algorithm: alg.name().unwrap_or("unnamed").to_string(),
        order: group.len(),
        group: identify(&fp),
        orbits: partition.blocks().to_vec(),
        complete: report.complete,
    })
}

pub fn run_example() -> mmsym::Result<Vec<Found>> {
    let mut out = Vec::new();
    for alg in [strassen(), hopcroft(), laderman()] {
        println!("{}:", alg.name().unwrap_or("unnamed"));
        let found = search(&alg)?;
        println!(
            "  group of order {} ({}), orbits {:?}, search complete: {}",
            found.order, found.group, found.orbits, found.complete
        );
        out.push(found);
    }
    Ok(out)
}

fn main() -> mmsym::Result<()> {
    run_example().map(|_| ())
}
