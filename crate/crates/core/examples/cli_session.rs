// Drives the command line in-process: writes a generator file, then runs
// `verify`, `autgroup --generators` and `multiply`.

use std::fs;

use mmsym::cli::{generators_document, run, CommandResult};
use mmsym::symmetry::laderman_generators;
use serde_json::Value;

pub struct Session {
    pub verify: CommandResult,
    pub autgroup: Value,
    pub multiply: Value,
}

pub fn run_example() -> std::io::Result<Session> {
    let dir = std::env::temp_dir().join(format!("mmsym-cli-session-{}", std::process::id()));
    fs::create_dir_all(&dir)?;
    let gens = dir.join("laderman-generators.json");
    fs::write(&gens, generators_document(&laderman_generators()))?;
    let x = dir.join("x.json");
    let y = dir.join("y.json");
    fs::write(&x, r#"[["1", "2"], ["3", "4"]]"#)?;
    fs::write(&y, r#"[["5", "6"], ["7", "1/2"]]"#)?;

    let verify = run(["mmsym", "verify", "--builtin", "laderman"]);
    print!("{}", verify.stderr);

    let autgroup = run([
        "mmsym".as_ref(),
        "autgroup".as_ref(),
        "--builtin".as_ref(),
        "laderman".as_ref(),
        "--generators".as_ref(),
        gens.as_os_str(),
    ]);
    print!("{}", autgroup.stderr);

    let multiply = run([
        "mmsym".as_ref(),
        "multiply".as_ref(),
        "--builtin".as_ref(),
        "strassen".as_ref(),
        x.as_os_str(),
        y.as_os_str(),
    ]);
    print!("{}", multiply.stderr);
    let product: Value = serde_json::from_str(&multiply.stdout)?;
    println!("product {}", product["product"]);

    fs::remove_dir_all(&dir)?;
    Ok(Session {
        autgroup: serde_json::from_str(&autgroup.stdout)?,
        verify,
        multiply: product,
    })
}

fn main() -> std::io::Result<()> {
    run_example().map(|_| ())
}
