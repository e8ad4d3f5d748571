use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    let p: PathBuf = [
        env!("CARGO_MANIFEST_DIR"),
        "fixtures",
        &format!("{name}.json"),
    ]
    .iter()
    .collect();
    p.to_string_lossy().into_owned()
}

fn pomlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pomlab"))
        .args(args)
        .env_remove("POMLAB_CAP")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn check_exit_codes() {
    let ok = pomlab(&[
        "check",
        &fixture("diamond"),
        "--prop",
        "orthomodular,lattice",
    ]);
    assert_eq!(code(&ok), 0);
    assert!(stdout(&ok).contains("orthomodular holds"));

    let fails = pomlab(&["check", &fixture("fig1"), "--prop", "modular,distributive"]);
    assert_eq!(code(&fails), 1);

    assert_eq!(
        code(&pomlab(&["check", &fixture("fig1"), "--prop", "bogus"])),
        2
    );
    assert_eq!(
        code(&pomlab(&[
            "check",
            "/no/such/file.json",
            "--prop",
            "modular"
        ])),
        2
    );
    assert_eq!(code(&pomlab(&["frobnicate"])), 2);
}

#[test]
fn check_json_reports_witness() {
    let o = pomlab(&["--json", "check", &fixture("fig3"), "--prop", "modular"]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["holds"], false);
    let r = &v["results"][0];
    assert_eq!(r["property"], "modular");
    assert_eq!(r["witness_labels"]["x"], "a");
    assert_eq!(r["witness_labels"]["z"], "c'");
}

#[test]
fn directoid_classes_on_posets() {
    let o = pomlab(&[
        "check",
        &fixture("fig5"),
        "--prop",
        "para-directoid-weak",
        "--policy",
        "relaxed",
        "--chooser",
        "all",
    ]);
    assert_eq!(code(&o), 0);
    let o = pomlab(&["check", &fixture("fig4-b6"), "--prop", "cond6"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn witness_roles() {
    let o = pomlab(&["--json", "witness", &fixture("fig4-b6")]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["paraorthomodular"], false);
    let roles = v["witness"]["roles"].as_object().unwrap();
    assert_eq!(roles.len(), 6);
    assert_eq!(roles["a"], 1);
    assert_eq!(code(&pomlab(&["witness", &fixture("diamond")])), 0);
}

#[test]
fn dot_draws_involution_dashed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b6.dot");
    let p = path.to_str().unwrap();
    pomlab(&[
        "--dot",
        p,
        "check",
        &fixture("fig4-b6"),
        "--prop",
        "orthoposet",
    ]);
    let dot = std::fs::read_to_string(&path).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("dir=none, style=dashed").count(), 3);
}

#[test]
fn complete_exports_embedding() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let o = pomlab(&[
        "complete",
        &fixture("fig2"),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["kind"], "poset");
    assert_eq!(v["size"], 7);
    assert_eq!(v["embedding"].as_array().unwrap().len(), 6);

    let o = pomlab(&["--json", "complete", &fixture("fig4-b6")]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["paraorthomodular"], false);
    assert_eq!(v["agree"], true);

    let raw = pomlab(&["complete", &fixture("fig2"), "--mode", "raw"]);
    assert_eq!(code(&raw), 0);
}

#[test]
fn convert_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path().join("d.json");
    let o = pomlab(&["convert", &fixture("boolean-ea"), "--to", "directoid"]);
    assert_eq!(code(&o), 0);
    std::fs::write(&d, stdout(&o)).unwrap();
    let back = pomlab(&["convert", d.to_str().unwrap(), "--to", "orthoalgebra"]);
    assert_eq!(code(&back), 0);
    let v: Value = serde_json::from_str(&stdout(&back)).unwrap();
    let orig: Value =
        serde_json::from_str(&std::fs::read_to_string(fixture("boolean-ea")).unwrap()).unwrap();
    assert_eq!(v["oplus"], orig["oplus"]);

    let p = pomlab(&["convert", &fixture("fig5-directoid"), "--to", "poset"]);
    assert_eq!(code(&p), 0);
    let v: Value = serde_json::from_str(&stdout(&p)).unwrap();
    assert_eq!(v["kind"], "poset");
    assert_eq!(v["size"], 8);

    let q = pomlab(&["convert", &fixture("diamond"), "--to", "directoid"]);
    assert_eq!(code(&q), 0);
    assert!(stdout(&q).contains("\"meet\""));

    assert_eq!(
        code(&pomlab(&[
            "convert",
            &fixture("three-chain-ea"),
            "--to",
            "orthoalgebra"
        ])),
        1
    );
    assert_eq!(
        code(&pomlab(&["convert", &fixture("fig1"), "--to", "sheaf"])),
        2
    );
}

#[test]
fn eval_catalog_and_files() {
    let o = pomlab(&["eval", &fixture("fig5-directoid"), "catalog"]);
    let out = stdout(&o);
    assert!(out.contains("idempotent: holds"));
    assert!(out.contains("(8): fails at x=a, y=b"));
    assert_eq!(code(&o), 1);

    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.pom");
    std::fs::write(&good, "# comment\n[refl] x <= x\nx'' = x\n").unwrap();
    assert_eq!(
        code(&pomlab(&["eval", &fixture("fig1"), good.to_str().unwrap()])),
        0
    );
    let bad = dir.path().join("bad.pom");
    std::fs::write(&bad, "x <=\n").unwrap();
    let o = pomlab(&["eval", &fixture("fig1"), bad.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains(":1:"));
}

#[test]
fn enumerate_table_and_json() {
    let o = pomlab(&["enumerate", "--n", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().any(|l| l == "4\tposets\t3"));

    let o = pomlab(&["--json", "enumerate", "--n", "4"]);
    let lines: Vec<Value> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(lines.len(), 3);
    assert!(lines.iter().all(|v| v["kind"] == "poset" && v["size"] == 4));

    let o = pomlab(&["--json", "enumerate", "--n", "6", "--prop", "orthomodular"]);
    assert_eq!(stdout(&o).lines().count(), 1);
}

#[test]
fn enumerate_is_thread_independent() {
    let one = pomlab(&["--threads", "1", "--json", "enumerate", "--n", "8"]);
    let four = pomlab(&["--threads", "4", "--json", "enumerate", "--n", "8"]);
    assert_eq!(code(&one), 0);
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn cap_from_flag_and_environment() {
    assert_eq!(code(&pomlab(&["--cap", "5", "enumerate", "--n", "6"])), 2);
    let o = Command::new(env!("CARGO_BIN_EXE_pomlab"))
        .args(["enumerate", "--n", "6"])
        .env("POMLAB_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn reproduce_targets() {
    for t in [
        "fig1",
        "fig2",
        "fig3",
        "fig4",
        "fig5",
        "corollary-dm",
        "roundtrip-oa",
    ] {
        let o = pomlab(&["reproduce", t]);
        assert_eq!(code(&o), 0, "{t}: {}", stdout(&o));
    }
    let o = pomlab(&["--json", "reproduce", "fig1"]);
    let v: Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["confirmed"], true);
}
