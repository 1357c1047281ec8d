// Runs Strassen's algorithm recursively on random integer matrices and
// compares the operation counts with the schoolbook product.

use mmsym::algebra::{laderman, strassen};
use mmsym::engine::{
    exponent_estimate, multiply_recursive, naive_multiply, OpCount, VerifiedAlgorithm,
};
use mmsym::Matrix;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub struct Run {
    pub size: usize,
    pub correct: bool,
    pub strassen: OpCount,
    pub naive: OpCount,
}

fn random(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let entries: Vec<i64> = (0..n * n).map(|_| rng.gen_range(-9..=9)).collect();
    Matrix::from_ints(n, n, &entries)
}

pub fn run_example() -> mmsym::Result<Vec<Run>> {
    let s = VerifiedAlgorithm::new(strassen())?;
    println!(
        "exponent: strassen {:.4}, laderman {:.4}",
        exponent_estimate(&strassen())?,
        exponent_estimate(&laderman())?
    );
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut out = Vec::new();
    println!(
        "{:>4} {:>8} {:>9} {:>8} {:>9}",
        "N", "mults", "adds", "naive", "adds"
    );
    for k in 1..=5 {
        let n = 1 << k;
        let (x, y) = (random(&mut rng, n), random(&mut rng, n));
        let (z, ops) = multiply_recursive(&s, &x, &y, 1)?;
        let (reference, naive) = naive_multiply(&x, &y)?;
        println!(
            "{n:>4} {:>8} {:>9} {:>8} {:>9}",
            ops.nonscalar_mults, ops.additions, naive.nonscalar_mults, naive.additions
        );
        out.push(Run {
            size: n,
            correct: z == reference,
            strassen: ops,
            naive,
        });
    }
    let (x, y) = (random(&mut rng, 5), random(&mut rng, 5));
    let (z, ops) = multiply_recursive(&s, &x, &y, 2)?;
    println!(
        "N = 5 padded to 8 with cutoff 2: {} multiplications, correct {}",
        ops.nonscalar_mults,
        z == x.mul(&y)?
    );
    Ok(out)
}

fn main() -> mmsym::Result<()> {
    run_example().map(|_| ())
}
