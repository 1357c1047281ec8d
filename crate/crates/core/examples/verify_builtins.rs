// Checks the built-in algorithms against the Brent equations and the
// tensor sum, then shows what a single wrong sign does.

use mmsym::algebra::{brent_check, builtin, strassen, tensor_sum_check, BilinearAlgorithm, Triple};
use mmsym::Rational;

pub struct Checked {
    pub name: String,
    pub equations: usize,
    pub violations: usize,
    pub tensor_sum: bool,
}

fn check(alg: &BilinearAlgorithm) -> Checked {
    let brent = brent_check(alg);
    let sum = tensor_sum_check(alg);
    let name = alg.name().unwrap_or("unnamed").to_string();
    println!(
        "{name:>14} {} rank {:>2}: {:>4} equations, {:>2} violated, tensor sum {}",
        alg.format(),
        alg.rank(),
        brent.equations,
        brent.violations,
        if sum.passed { "ok" } else { "differs" }
    );
    Checked {
        name,
        equations: brent.equations,
        violations: brent.violations,
        tensor_sum: sum.passed,
    }
}

/// Flips the sign of one entry of the first factor of the first triple.
fn corrupt(alg: &BilinearAlgorithm) -> mmsym::Result<BilinearAlgorithm> {
    let mut triples = alg.triples().to_vec();
    let t = &triples[0];
    let mut a = t.a().clone();
    let v = a.get(0, 0).clone();
    a.set(0, 0, if v.is_zero() { Rational::one() } else { -v });
    triples[0] = Triple::new(a, t.b().clone(), t.c().clone())?;
    BilinearAlgorithm::new(alg.format(), triples, Some("strassen-typo".into()))
}

pub fn run_example() -> mmsym::Result<Vec<Checked>> {
    let mut out = Vec::new();
    for name in ["strassen", "laderman", "hopcroft", "naive:2x3x4"] {
        out.push(check(&builtin(name)?));
    }
    let broken = corrupt(&strassen())?;
    let report = brent_check(&broken);
    out.push(check(&broken));
    for v in report.first_violations.iter().take(3) {
        println!(
            "    a{:?} b{:?} c{:?}: residual {}",
            v.a_index, v.b_index, v.c_index, v.residual
        );
    }
    Ok(out)
}

fn main() -> mmsym::Result<()> {
    run_example().map(|_| ())
}
