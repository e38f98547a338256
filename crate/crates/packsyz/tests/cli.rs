//! End-to-end runs of the `packsyz` binary.

use std::path::Path;
use std::process::{Command, Output};

use packsyz::json::{Homology, Scan, Table};

fn run(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_packsyz"));
    cmd.args(args);
    match cache {
        Some(dir) => cmd.env("PACKSYZ_CACHE_DIR", dir),
        None => cmd.env_remove("PACKSYZ_CACHE_DIR").arg("--no-cache"),
    };
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn homology_text() {
    let o = run(&["homology", "--N", "3,3", "--d", "1,1"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("H̃₁ = [(1,1,1)x(2,1)] + [(2,1)x(1,1,1)]  (dim 4)"), "{text}");
    assert!(text.contains("H̃₀ = 0"));

    let o = run(&["homology", "--N", "2,2", "--d", "1,1", "--k", "0"], None);
    assert_eq!(stdout(&o), "H̃₀ = [(1,1)x(1,1)]  (dim 1)\n");

    let o = run(&["homology", "--N", "1,1", "--d", "2,1"], None);
    assert_eq!(stdout(&o), "empty complex; H̃₋₁ = trivial\n");
}

#[test]
fn betti_text_and_json() {
    let o = run(&["betti", "--pmax", "4", "--qmax", "2", "--d", "1,1", "--b", "0,0"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    let rows: Vec<&str> = text.lines().collect();
    assert_eq!(rows.len(), 4);
    assert!(rows[1].starts_with("0   | K | -"));
    assert!(rows[2].contains("(3,1)x(1,1,1,1) + (2,1,1)x(2,1,1) + (1,1,1,1)x(3,1)"));
    assert!(rows[3].ends_with("| (2,2,2)x(2,2,2)"));

    let o = run(&["--format", "json", "betti", "--pmax", "2", "--qmax", "1", "--d", "1,1", "--b", "0,0"], None);
    let table: Table = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(table.cells.len(), 6);
    let k21 = table.cells.iter().find(|c| c.p == 2 && c.q == 1).unwrap();
    assert_eq!(k21.entries.len(), 2);
    assert_eq!(k21.entries[0].lambda, vec![vec![1, 1, 1], vec![2, 1]]);
    assert_eq!(serde_json::to_value(&table).unwrap(), serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap());
}

#[test]
fn negative_twists_print_dashes() {
    let o = run(&["betti", "--pmax", "1", "--qmax", "1", "--d", "1,1", "--b", "-2,0"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().skip(1).all(|l| l.split(" | ").skip(1).all(|c| c.trim() == "-")), "{text}");
}

#[test]
fn output_is_byte_stable_and_cache_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["--format", "json", "homology", "--N", "4,3", "--d", "1,1"];
    let miss = run(&args, Some(dir.path()));
    assert!(std::fs::read_dir(dir.path()).unwrap().count() > 0);
    let hit = run(&args, Some(dir.path()));
    let fresh = run(&args, None);
    assert_eq!(miss.stdout, hit.stdout);
    assert_eq!(miss.stdout, fresh.stdout);
    let doc: Homology = serde_json::from_slice(&hit.stdout).unwrap();
    assert_eq!(doc.sizes, vec![4, 3]);
    assert_eq!(doc.degrees.iter().map(|d| d.k).collect::<Vec<_>>(), vec![-1, 0, 1, 2]);
}

#[test]
fn scans() {
    let o = run(&["scan", "--d", "1,1", "--k", "1", "--fix", "N2=3", "--range", "N1=3..7"], None);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("m = 3, bound N1 >= 6"), "{text}");
    assert!(text.contains("N=(4,3): [(2,2)x(1,1,1)]"));

    let o = run(
        &["--format", "json", "scan", "--syzygy", "--p", "2", "--q", "0", "--d", "1,1", "--fix", "b2=0", "--range", "b1=0..4"],
        None,
    );
    assert!(o.status.success());
    let scan: Scan = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(scan.sharp, Some(true));
    assert_eq!(scan.stable_from, vec![vec![4, 2]]);
    assert!(scan.passed && scan.margin_ok);
}

#[test]
fn exit_codes() {
    let o = run(&["scan", "--d", "1,1", "--k", "1", "--fix", "N2=3", "--range", "N1=7..3"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["homology", "--N", "3", "--d", "1,1"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["frobnicate"], None);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["--max-simplices", "100", "homology", "--N", "5,5", "--d", "1,1"], None);
    assert_eq!(o.status.code(), Some(3));
    let o = run(&["scan", "--syzygy", "--p", "1", "--q", "0", "--d", "1,1", "--fix", "b2=1", "--range", "b1=0..3"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn config_file() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.toml");
    std::fs::write(&good, "format = \"json\"\nmax_simplices = 50\n").unwrap();
    let o = run(&["--config", good.to_str().unwrap(), "homology", "--N", "2,2", "--d", "1,1"], None);
    assert!(o.status.success());
    assert!(serde_json::from_slice::<Homology>(&o.stdout).is_ok());
    let o = run(&["--config", good.to_str().unwrap(), "homology", "--N", "4,4", "--d", "1,1"], None);
    assert_eq!(o.status.code(), Some(3));

    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "colour = \"blue\"\n").unwrap();
    let o = run(&["--config", bad.to_str().unwrap(), "homology", "--N", "2,2", "--d", "1,1"], None);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_and_linear_strand() {
    let o = run(&["verify", "betti-table"], None);
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(stdout(&o).ends_with("suite betti-table: PASS (15/15)\n"));

    let o = run(&["linear-strand", "segre", "--p", "2", "--a", "2", "--n", "2", "--check"], None);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "(2,2)x(1,1) + (2,1,1)x(2)\nhomology: (2,2)x(1,1) + (2,1,1)x(2)\nPASS\n");

    let o = run(&["linear-strand", "mpower", "--a", "2", "--pmax", "2"], None);
    assert_eq!(stdout(&o), "K_0 = (2)\nK_1 = (2,1)\nK_2 = (2,1,1)\n");
}

#[test]
fn export_complex() {
    let o = run(&["export-complex", "--N", "2,2", "--d", "1,1"], None);
    assert!(o.status.success());
    let faces = stdout(&o);
    assert_eq!(faces.lines().count(), 6, "{faces}");
    assert!(faces.lines().any(|l| l == "(1|1) (2|2)"), "{faces}");

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.json");
    let o = run(
        &["--format", "json", "export-complex", "--N", "3,2", "--d", "1,1", "--output", path.to_str().unwrap()],
        None,
    );
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["f_vector"], serde_json::json!([1, 6, 6]));
}
