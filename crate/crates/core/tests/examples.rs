//! Runs every example and checks what it reports.

macro_rules! example {
    ($name:ident) => {
        #[allow(dead_code)]
        mod $name {
            include!(concat!("../examples/", stringify!($name), ".rs"));
        }
    };
}

example!(verify_builtins);
example!(laderman_symmetry);
example!(hopcroft_symmetry);
example!(automorphism_search);
example!(recursive_strassen);
example!(laderman_factorization);
example!(act_and_serialize);
example!(cli_session);

use mmsym::symmetry::FactorPermutation;

#[test]
fn verify_builtins_example() {
    let checked = verify_builtins::run_example().unwrap();
    let (good, bad) = checked.split_at(4);
    for c in good {
        assert_eq!(c.violations, 0, "{}", c.name);
        assert!(c.tensor_sum, "{}", c.name);
    }
    assert_eq!(good[1].equations, 729);
    assert!(bad[0].violations > 0 && !bad[0].tensor_sum);
}

#[test]
fn laderman_symmetry_example() {
    let s = laderman_symmetry::run_example().unwrap();
    assert!(s.generators_fix);
    assert_eq!((s.relations_hold, s.relations), (10, 10));
    assert_eq!((s.order, s.group.as_str()), (24, "S4"));
    assert_eq!(
        s.orbits,
        vec![
            vec![1, 3, 6, 10, 11, 14],
            vec![2, 5, 8, 9, 13, 15, 17, 18],
            vec![4, 7, 12, 16],
            vec![19],
            vec![20, 21, 22, 23],
        ]
    );
    assert!(!s.rejected_is_symmetry);
}

#[test]
fn hopcroft_symmetry_example() {
    let s = hopcroft_symmetry::run_example().unwrap();
    assert_eq!(
        s.admissible,
        vec![FactorPermutation::Identity, FactorPermutation::Swap12]
    );
    assert!(s.all_relations_hold);
    assert_eq!((s.order, s.group.as_str()), (12, "S3xZ2"));
    let mut sizes = s.orbit_sizes.clone();
    sizes.sort();
    assert_eq!(sizes, vec![3, 6, 6]);
}

#[test]
fn automorphism_search_example() {
    let found = automorphism_search::run_example().unwrap();
    let summary: Vec<(&str, usize, &str, usize, bool)> = found
        .iter()
        .map(|f| {
            (
                f.algorithm.as_str(),
                f.order,
                f.group.as_str(),
                f.orbits.len(),
                f.complete,
            )
        })
        .collect();
    assert_eq!(
        summary,
        vec![
            ("strassen", 36, "S3xS3", 2, true),
            ("hopcroft", 12, "S3xZ2", 3, true),
            ("laderman", 24, "S4", 5, true),
        ]
    );
}

#[test]
fn recursive_strassen_example() {
    let runs = recursive_strassen::run_example().unwrap();
    for (k, r) in runs.iter().enumerate() {
        let k = k as u32 + 1;
        assert!(r.correct);
        assert_eq!(r.size, 1 << k);
        assert_eq!(r.strassen.nonscalar_mults, 7u64.pow(k));
        assert_eq!(r.naive.nonscalar_mults, 8u64.pow(k));
    }
    assert_eq!(runs[0].strassen.additions, 18);
}

#[test]
fn laderman_factorization_example() {
    let rows = laderman_factorization::run_example().unwrap();
    let indices: Vec<usize> = rows.iter().map(|r| r.index).collect();
    assert_eq!(
        indices,
        vec![2, 5, 8, 9, 13, 15, 17, 18, 19, 20, 21, 22, 23]
    );
    assert!(rows.iter().all(|r| r.recombines && r.vectors.len() == 6));
    assert_eq!(rows[12].vectors, vec!["3"; 6]);
}

#[test]
fn act_and_serialize_example() {
    let m = act_and_serialize::run_example().unwrap();
    assert!(m.image_valid && !m.is_automorphism);
    assert!(m.algorithm_round_trip && m.element_round_trip && m.inverse_restores);
}

#[test]
fn cli_session_example() {
    let s = cli_session::run_example().unwrap();
    assert_eq!(s.verify.exit_code, 0);
    assert_eq!(s.autgroup["order"], 24);
    assert_eq!(s.autgroup["group"], "S4");
    assert_eq!(s.multiply["passed"], true);
    assert_eq!(s.multiply["ops"]["nonscalar_mults"], 7);
}
