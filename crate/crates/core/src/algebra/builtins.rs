//! Hard-coded reference algorithms.
//!
//! Strassen is entered in matrix form. Laderman and Hopcroft are entered from
//! their tensor forms `x ⊗ y ⊗ z`; the triple stores `c = zᵗ`. Whether they
//! really multiply matrices is checked by the Brent equations in tests, not
//! assumed here.

use super::{matrix_units, BilinearAlgorithm, Format, Triple};
use crate::error::{Error, Result};
use crate::exact::Matrix;

fn units(rows: usize, cols: usize, expr: &str) -> Matrix {
    matrix_units(rows, cols, expr).expect("builtin literal")
}

fn from_tensor_table(format: Format, name: &str, table: &[[&str; 3]]) -> BilinearAlgorithm {
    let [(r1, c1), (r2, c2), (r3, c3)] = format.factor_shapes();
    let tensors = table
        .iter()
        .map(|[x, y, z]| [units(r1, c1, x), units(r2, c2, y), units(r3, c3, z)])
        .collect();
    BilinearAlgorithm::from_tensors(format, tensors, Some(name.to_string()))
        .expect("builtin algorithm")
}

/// Strassen's 7-multiplication algorithm for 2x2 matrices.
pub fn strassen() -> BilinearAlgorithm {
    let f = Format { m: 2, n: 2, p: 2 };
    let rows: [[&str; 3]; 7] = [
        ["e11", "e12+e22", "e12-e22"],
        ["e11-e12", "e22", "-e11-e12"],
        ["-e21+e22", "e11", "-e21-e22"],
        ["e22", "e11+e21", "-e11+e21"],
        ["e11+e22", "e11+e22", "e11+e22"],
        ["e11+e21", "e11-e12", "-e22"],
        ["e12+e22", "e21-e22", "e11"],
    ];
    let triples = rows
        .iter()
        .map(|[a, b, c]| {
            Triple::new(units(2, 2, a), units(2, 2, b), units(2, 2, c)).expect("builtin triple")
        })
        .collect();
    BilinearAlgorithm::new(f, triples, Some("strassen".into())).expect("builtin algorithm")
}

/// Laderman's 23-multiplication algorithm for 3x3 matrices.
pub fn laderman() -> BilinearAlgorithm {
    const TABLE: [[&str; 3]; 23] = [
        ["e11+e12+e13-e21-e22-e32-e33", "e22", "e21"],
        ["e11-e21", "-e12+e22", "e12+e22"],
        ["e22", "-e11+e12+e21-e22-e23-e31+e33", "e12"],
        ["-e11+e21+e22", "e11-e12+e22", "e21+e12+e22"],
        ["e21+e22", "-e11+e12", "e21+e22"],
        ["e11", "e11", "e11+e21+e31+e12+e22+e13+e33"],
        ["-e11+e31+e32", "e11-e13+e23", "e31+e13+e33"],
        ["-e11+e31", "e13-e23", "e13+e33"],
        ["e31+e32", "-e11+e13", "e31+e33"],
        ["e11+e12+e13-e22-e23-e31-e32", "e23", "e31"],
        ["e32", "-e11+e13+e21-e22-e23-e31+e32", "e13"],
        ["-e13+e32+e33", "e22+e31-e32", "e21+e13+e23"],
        ["e13-e33", "e22-e32", "e13+e23"],
        ["e13", "e31", "e11+e21+e31+e12+e32+e13+e23"],
        ["e32+e33", "-e31+e32", "e21+e23"],
        ["-e13+e22+e23", "e23+e31-e33", "e31+e12+e32"],
        ["e13-e23", "e23-e33", "e12+e32"],
        ["e22+e23", "-e31+e33", "e31+e32"],
        ["e12", "e21", "e11"],
        ["e23", "e32", "e22"],
        ["e21", "e13", "e32"],
        ["e31", "e12", "e23"],
        ["e33", "e33", "e33"],
    ];
    from_tensor_table(Format { m: 3, n: 3, p: 3 }, "laderman", &TABLE)
}

/// Hopcroft's 15-multiplication algorithm for a 3x2 by 2x3 product.
pub fn hopcroft() -> BilinearAlgorithm {
    const TABLE: [[&str; 3]; 15] = [
        ["e11-e12", "e11", "e11-e31-e12"],
        ["e12", "e11+e21", "e11-e21-e13"],
        ["e21", "e12", "-e21+e22-e32"],
        ["e22", "e22", "-e12+e22-e23"],
        ["e31", "e13+e23", "e33-e31-e23"],
        ["-e31+e32", "e23", "e33-e13-e32"],
        ["e11+e21", "e11+e12+e21+e22", "e21"],
        ["e11-e12+e21", "e11+e21+e22", "e12-e21"],
        ["e11-e12+e21-e22", "e21+e22", "-e12"],
        ["e22+e32", "e12+e13+e22+e23", "e23"],
        ["e22-e31+e32", "e12+e13+e23", "-e23+e32"],
        ["-e21+e22-e31+e32", "e12+e13", "-e32"],
        ["e12+e31", "e11-e23", "e13-e31"],
        ["e12+e32", "e21+e23", "e13"],
        ["e11+e31", "e11+e13", "e31"],
    ];
    from_tensor_table(Format { m: 3, n: 2, p: 3 }, "hopcroft", &TABLE)
}

/// The schoolbook algorithm: triples `(e_{ij}, e_{jk}, e_{ik})`.
pub fn naive(m: usize, n: usize, p: usize) -> Result<BilinearAlgorithm> {
    let format = Format::new(m, n, p)?;
    let mut triples = Vec::with_capacity(m * n * p);
    for i in 0..m {
        for j in 0..n {
            for k in 0..p {
                triples.push(Triple::new(
                    Matrix::unit(m, n, i, j),
                    Matrix::unit(n, p, j, k),
                    Matrix::unit(m, p, i, k),
                )?);
            }
        }
    }
    BilinearAlgorithm::new(format, triples, Some(format!("naive:{m}x{n}x{p}")))
}

/// Looks up `strassen`, `laderman`, `hopcroft` or `naive:MxNxP`.
pub fn builtin(name: &str) -> Result<BilinearAlgorithm> {
    match name {
        "strassen" => Ok(strassen()),
        "laderman" => Ok(laderman()),
        "hopcroft" => Ok(hopcroft()),
        other => {
            let dims = other
                .strip_prefix("naive:")
                .ok_or_else(|| Error::UnknownName(other.to_string()))?;
            let parts: Vec<&str> = dims.split('x').collect();
            let parsed: Vec<usize> = parts.iter().filter_map(|d| d.parse().ok()).collect();
            match parsed[..] {
                [m, n, p] if parts.len() == 3 => naive(m, n, p),
                _ => Err(Error::UnknownName(other.to_string())),
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranks_and_formats() {
        assert_eq!(strassen().rank(), 7);
        assert_eq!(laderman().rank(), 23);
        assert_eq!(hopcroft().rank(), 15);
        assert_eq!(hopcroft().format(), Format::new(3, 2, 3).unwrap());
        assert_eq!(naive(2, 3, 4).unwrap().rank(), 24);
        assert!(naive(0, 1, 1).is_err());
    }

    #[test]
    fn strassen_tensor_form_matches_listing() {
        // First and fourth summands of the tensor form as printed alongside
        // the matrix form.
        let s = strassen();
        let [x, y, z] = s.triples()[0].tensor_factors();
        assert_eq!(x, units(2, 2, "e11"));
        assert_eq!(y, units(2, 2, "e12+e22"));
        assert_eq!(z, units(2, 2, "e21-e22"));
        let [x, y, z] = s.triples()[3].tensor_factors();
        assert_eq!(x, units(2, 2, "e22"));
        assert_eq!(y, units(2, 2, "e11+e21"));
        assert_eq!(z, units(2, 2, "-e11+e12"));
    }

    #[test]
    fn laderman_c_is_transposed_third_factor() {
        // t_19 = e12 ⊗ e21 ⊗ e11 and t_21 = e21 ⊗ e13 ⊗ e32.
        let l = laderman();
        assert_eq!(l.triples()[18].c(), &units(3, 3, "e11"));
        assert_eq!(l.triples()[20].c(), &units(3, 3, "e23"));
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(builtin("laderman").unwrap().rank(), 23);
        assert_eq!(builtin("naive:2x3x4").unwrap().rank(), 24);
        assert!(matches!(builtin("winograd"), Err(Error::UnknownName(_))));
        assert!(builtin("naive:2x3").is_err());
        assert!(builtin("naive:0x1x1").is_err());
    }
}
