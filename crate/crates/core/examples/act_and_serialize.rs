// Moves Strassen's algorithm by an element that is not one of its
// symmetries, checks that the image is still a valid algorithm, and round
// trips both the image and the element through JSON.

use mmsym::algebra::{brent_check, parse_algorithm, serialize_algorithm, strassen};
use mmsym::symmetry::{parse_element, serialize_element, FactorPermutation, IsotropyElement};
use mmsym::Matrix;

pub struct Moved {
    pub image_valid: bool,
    pub is_automorphism: bool,
    pub algorithm_round_trip: bool,
    pub element_round_trip: bool,
    pub inverse_restores: bool,
}

pub fn run_example() -> mmsym::Result<Moved> {
    let alg = strassen();
    let g = IsotropyElement::new(
        alg.format(),
        FactorPermutation::Cycle123,
        Matrix::from_ints(2, 2, &[1, 1, 0, 1]),
        Matrix::from_ints(2, 2, &[2, 0, 1, 1]),
        Matrix::from_ints(2, 2, &[0, 1, -1, 0]),
    )?;
    let image = g.act_on_algorithm(&alg)?;
    let image_valid = brent_check(&image).passed;
    let is_automorphism = g.is_automorphism(&alg)?;
    println!(
        "image satisfies the Brent equations: {image_valid}; g is a symmetry: {is_automorphism}"
    );

    let text = serialize_algorithm(&image);
    println!("{text}");
    let algorithm_round_trip = parse_algorithm(&text)? == image;

    let element_text = serialize_element(&g);
    println!("element: {element_text}");
    let element_round_trip = parse_element(&element_text)? == g;

    let back = g.inverse().act_on_algorithm(&image)?;
    let inverse_restores = back.same_multiset(&alg);
    println!("g^-1 restores the original triples: {inverse_restores}");

    Ok(Moved {
        image_valid,
        is_automorphism,
        algorithm_round_trip,
        element_round_trip,
        inverse_restores,
    })
}

fn main() -> mmsym::Result<()> {
    run_example().map(|_| ())
}
