// Writes every type-(1,1,1) Laderman triple as six vectors in terms of
// the standard basis e1, e2, e3 and checks that they recombine.

use mmsym::algebra::{fine_factorization, laderman, triple_type, vector_label, TripleType};

pub struct Row {
    pub index: usize,
    pub vectors: Vec<String>,
    pub recombines: bool,
}

pub fn run_example() -> mmsym::Result<Vec<Row>> {
    let alg = laderman();
    let mut rows = Vec::new();
    println!(
        "{:>3}  {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}",
        "l", "d", "e'", "e", "f'", "f", "d'"
    );
    for (l, t) in alg.triples().iter().enumerate() {
        if triple_type(t) != TripleType(1, 1, 1) {
            continue;
        }
        let f = fine_factorization(t)?;
        let vectors: Vec<String> = f.vectors().iter().map(|v| vector_label(v)).collect();
        let cells: Vec<String> = vectors.iter().map(|v| format!("{v:>6}")).collect();
        println!("{:>3}  {}", l + 1, cells.join(" "));
        rows.push(Row {
            index: l + 1,
            recombines: f.recombine()?.canonical() == t.canonical(),
            vectors,
        });
    }
    Ok(rows)
}

fn main() -> mmsym::Result<()> {
    run_example().map(|_| ())
}
