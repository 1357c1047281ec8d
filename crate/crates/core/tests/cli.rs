//! The `mmsym` binary end to end: exit codes, JSON documents and byte
//! stability.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

struct Output {
    code: i32,
    json: Value,
    stdout: String,
    stderr: String,
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name]
        .iter()
        .collect();
    p.to_string_lossy().into_owned()
}

fn mmsym(args: &[&str]) -> Output {
    let out = Command::new(env!("CARGO_BIN_EXE_mmsym"))
        .args(args)
        .output()
        .unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = serde_json::from_str(&stdout).unwrap_or(Value::Null);
    Output {
        code: out.status.code().unwrap(),
        json,
        stdout,
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

#[test]
fn verify_builtins_pass() {
    for (name, r, equations) in [
        ("strassen", 7, 64),
        ("laderman", 23, 729),
        ("hopcroft", 15, 324),
        ("naive:3x3x3", 27, 729),
    ] {
        let o = mmsym(&["verify", "--builtin", name]);
        assert_eq!(o.code, 0, "{name}: {}", o.stderr);
        assert_eq!(o.json["schema"], "mmsym/1");
        assert_eq!(o.json["command"], "verify");
        assert_eq!(o.json["algorithm"]["rank"], r);
        assert_eq!(o.json["brent"]["equations"], equations);
        assert_eq!(o.json["tensor_sum"]["passed"], true);
    }
}

#[test]
fn verify_broken_fixture_fails_with_violations() {
    let o = mmsym(&["verify", &fixture("broken.json")]);
    assert_eq!(o.code, 1);
    assert_eq!(o.json["passed"], false);
    assert_eq!(o.json["brent"]["violations"], 4);
    assert_eq!(
        o.json["brent"]["first_violations"]
            .as_array()
            .unwrap()
            .len(),
        4
    );
    assert!(o.stderr.contains("violated"));
    let same = mmsym(&["verify", "--file", &fixture("broken.json")]);
    assert_eq!(same.stdout, o.stdout);
}

#[test]
fn malformed_inputs_exit_2() {
    let o = mmsym(&["verify", &fixture("malformed.json")]);
    assert_eq!(o.code, 2);
    assert!(
        o.json["error"].as_str().unwrap().contains("triples[0].a"),
        "{}",
        o.stdout
    );
    assert_eq!(mmsym(&["verify", &fixture("truncated.json")]).code, 2);
    assert_eq!(mmsym(&["verify", &fixture("missing.json")]).code, 2);
    assert_eq!(mmsym(&["verify", "--builtin", "winograd"]).code, 2);
    assert_eq!(mmsym(&["verify", "--builtin", "naive:2x2"]).code, 2);
    assert_eq!(mmsym(&["verify"]).code, 2);
    assert_eq!(mmsym(&["frobnicate"]).code, 2);
    assert_eq!(
        mmsym(&["verify", "--builtin", "strassen", "--format", "yaml"]).code,
        2
    );
    let o = mmsym(&["act", "--builtin", "strassen", &fixture("phi2.json")]);
    assert_eq!(o.code, 2, "format mismatch: {}", o.stderr);
}

#[test]
fn act_reports_automorphism() {
    let o = mmsym(&["act", "--builtin", "laderman", &fixture("phi2.json")]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.json["automorphism"], true);
    assert_eq!(o.json["image"]["triples"].as_array().unwrap().len(), 23);

    let o = mmsym(&[
        "act",
        "--builtin",
        "laderman",
        &fixture("identity_333.json"),
    ]);
    assert_eq!(
        (o.code, o.json["automorphism"].clone()),
        (0, Value::Bool(true))
    );

    let o = mmsym(&[
        "act",
        "--builtin",
        "hopcroft",
        &fixture("rho12_hopcroft.json"),
    ]);
    assert_eq!(o.code, 1);
    assert_eq!(o.json["automorphism"], false);
}

#[test]
fn autgroup_from_generators_and_search() {
    let dir = std::env::temp_dir().join(format!("mmsym-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let gens = dir.join("laderman.json");
    std::fs::write(
        &gens,
        mmsym::cli::generators_document(&mmsym::symmetry::laderman_generators()),
    )
    .unwrap();
    let o = mmsym(&[
        "autgroup",
        "--builtin",
        "laderman",
        "--generators",
        gens.to_str().unwrap(),
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.json["order"], 24);
    assert_eq!(o.json["group"], "S4");
    assert_eq!(o.json["orbits"].as_array().unwrap().len(), 5);
    std::fs::remove_dir_all(&dir).unwrap();

    let o = mmsym(&[
        "autgroup",
        "--builtin",
        "hopcroft",
        "--search",
        "--pool-entries",
        "-1,0,1",
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.json["order"], 12);
    assert_eq!(o.json["group"], "S3xZ2");
    assert_eq!(
        o.json["orbits"],
        serde_json::json!([[1, 2, 3, 4, 5, 6], [7, 9, 10, 12, 14, 15], [8, 11, 13]])
    );
    assert_eq!(o.json["search"]["complete"], true);

    let o = mmsym(&[
        "autgroup",
        "--builtin",
        "naive:2x2x2",
        "--generators",
        &fixture("no_generators.json"),
    ]);
    assert_eq!(o.code, 0);
    assert_eq!(o.json["order"], 1);
    assert_eq!(o.json["group"], "trivial");

    let o = mmsym(&[
        "autgroup",
        "--builtin",
        "laderman",
        "--search",
        "--budget",
        "1000",
    ]);
    assert_eq!(o.code, 1, "an exhausted budget is not a pass");
    assert_eq!(o.json["search"]["complete"], false);

    let o = mmsym(&[
        "autgroup",
        "--builtin",
        "hopcroft",
        "--generators",
        &fixture("rho12_hopcroft.json"),
    ]);
    assert_eq!(o.code, 1);
    assert_eq!(o.json["not_automorphisms"], serde_json::json!([0]));

    assert_eq!(mmsym(&["autgroup", "--builtin", "hopcroft"]).code, 2);
    assert_eq!(
        mmsym(&[
            "autgroup",
            "--builtin",
            "hopcroft",
            "--search",
            "--pool-entries",
            "1,x"
        ])
        .code,
        2
    );
}

#[test]
fn multiply_once_and_recursive() {
    let o = mmsym(&[
        "multiply",
        "--builtin",
        "hopcroft",
        &fixture("y32.json"),
        &fixture("x23.json"),
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.json["ops"]["nonscalar_mults"], 15);
    assert_eq!(
        o.json["product"],
        serde_json::json!([["2", "1", "-1/3"], ["1/2", "-1", "1/6"], ["-3", "41", "-8"]])
    );

    let o = mmsym(&[
        "multiply",
        "--builtin",
        "strassen",
        "--recursive",
        "--cutoff",
        "1",
        &fixture("x33.json"),
        &fixture("y33.json"),
    ]);
    assert_eq!(o.code, 0, "{}", o.stderr);
    assert_eq!(o.json["mode"], "recursive");
    assert_eq!(o.json["ops"]["nonscalar_mults"], 49);
    let naive = mmsym(&[
        "multiply",
        "--builtin",
        "naive:3x3x3",
        &fixture("x33.json"),
        &fixture("y33.json"),
    ]);
    assert_eq!(o.json["product"], naive.json["product"]);

    let o = mmsym(&[
        "multiply",
        "--builtin",
        "strassen",
        &fixture("x23.json"),
        &fixture("y32.json"),
    ]);
    assert_eq!(o.code, 2);
    let o = mmsym(&[
        "multiply",
        "--builtin",
        "hopcroft",
        "--recursive",
        &fixture("x33.json"),
        &fixture("y33.json"),
    ]);
    assert_eq!(o.code, 2);
    let o = mmsym(&[
        "multiply",
        "--file",
        &fixture("broken.json"),
        &fixture("x33.json"),
        &fixture("y33.json"),
    ]);
    assert_eq!(o.code, 1, "a broken algorithm is refused before running");
}

#[test]
fn table1_rows() {
    let o = mmsym(&["table1"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.json["count"], 13);
    let rows = o.json["rows"].as_array().unwrap();
    assert_eq!(rows[8]["index"], 19);
    assert_eq!(rows[8]["pattern"], "1 2 2 1 1 1");
    assert_eq!(rows[12]["pattern"], "3 3 3 3 3 3");
}

#[test]
fn output_is_byte_stable() {
    for args in [
        vec!["table1"],
        vec!["verify", "--builtin", "laderman"],
        vec!["autgroup", "--builtin", "hopcroft", "--search"],
    ] {
        let (a, b) = (mmsym(&args), mmsym(&args));
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(a.stderr, b.stderr, "{args:?}");
    }
}

#[test]
fn help_and_version_exit_0() {
    let o = mmsym(&["--help"]);
    assert_eq!(o.code, 0);
    assert!(o.stdout.contains("autgroup"));
    assert_eq!(mmsym(&["--version"]).code, 0);
}
