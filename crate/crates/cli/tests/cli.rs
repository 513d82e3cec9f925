use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const EXAMPLE: &str = r#"{"elements":["a","b","c","d"],"covers":[["a","c"],["b","c"],["b","d"]]}"#;
const K22: &str = r#"{"left":["x1","x2"],"right":["y1","y2"],"edges":[["x1","y1"],["x1","y2"],["x2","y1"],["x2","y2"]]}"#;
const ANTICHAIN4: &str = r#"{"elements":["p1","p2","p3","p4"],"covers":[]}"#;

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn distlat(args: &[&str], input: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_distlat"))
        .args(args)
        .arg(input)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn betti_on_the_worked_example() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.json", EXAMPLE);
    let o = distlat(&["betti"], &p);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("total:  8 10  3"), "{text}");
    assert!(text.contains("euler=1"), "{text}");
    assert!(text.contains("pd=2 sperner=2"), "{text}");
}

#[test]
fn multiplicity_on_the_worked_example() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.json", EXAMPLE);
    let o = distlat(&["multiplicity"], &p);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pairs=7 formula=7"));
}

#[test]
fn ideal_prints_the_generators() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.json", EXAMPLE);
    let o = distlat(&["ideal"], &p);
    assert!(stdout(&o).contains("H_P = (uvwx, avwx, buwx, abwx, bduw, abcx, abdw, abcd)"));
}

#[test]
fn k22_is_not_cm_and_that_is_not_a_failure() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g.json", K22);
    let o = distlat(&["cm", "--json"], &g);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["schema_version"], 1);
    assert_eq!(doc["report"]["recognition"]["verdict"], "not-cm");
    assert_eq!(doc["report"]["recognition"]["failure_witness"]["kind"], "antisymmetry");
}

#[test]
fn json_reports_are_byte_identical() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.json", EXAMPLE);
    for cmd in ["lattice", "ideal", "resolution", "betti", "multiplicity", "groebner", "dual", "cm", "oracle"] {
        let a = distlat(&[cmd, "--json", "--seed", "5", "--trials", "20"], &p);
        let b = distlat(&[cmd, "--json", "--seed", "5", "--trials", "20"], &p);
        assert_eq!(a.status.code(), Some(0), "{cmd}: {}", String::from_utf8_lossy(&a.stderr));
        assert_eq!(a.stdout, b.stdout, "{cmd}");
        let doc: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
        assert_eq!(doc["schema_version"], 1, "{cmd}");
        assert_eq!(doc["command"], cmd);
    }
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.json", r#"{"elements":["a","b"],"covers":[["a","c"]]}"#);
    assert_eq!(distlat(&["betti"], &bad).status.code(), Some(2));
    let cyclic = write(&dir, "cyc.json", r#"{"elements":["a","b"],"covers":[["a","b"],["b","a"]]}"#);
    assert_eq!(distlat(&["lattice"], &cyclic).status.code(), Some(2));
    let truncated = write(&dir, "t.json", r#"{"elements":["a""#);
    let o = distlat(&["lattice"], &truncated);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 1 column"));
    let anti = write(&dir, "anti.json", ANTICHAIN4);
    assert_eq!(distlat(&["groebner"], &anti).status.code(), Some(3));
    assert_eq!(distlat(&["groebner", "--guard-z", "16", "--trials", "10"], &anti).status.code(), Some(0));
    assert_eq!(distlat(&["resolution", "--guard-basis", "10"], &anti).status.code(), Some(3));
    let g = write(&dir, "g.json", K22);
    assert_eq!(distlat(&["betti"], &g).status.code(), Some(2));
    assert_eq!(distlat(&["betti", "--field", "prime:4"], &anti).status.code(), Some(2));
}

#[test]
fn dot_output() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.json", EXAMPLE);
    let dot = dir.path().join("lattice.dot");
    let o = distlat(&["lattice", "--dot", dot.to_str().unwrap()], &p);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph lattice"));
    let g = write(&dir, "g.json", K22);
    let gdot = dir.path().join("g.dot");
    distlat(&["cm", "--dot", gdot.to_str().unwrap()], &g);
    assert!(std::fs::read_to_string(&gdot).unwrap().contains("rank=same"));
}

#[test]
fn resolution_over_a_prime_field() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "p.json", EXAMPLE);
    let o = distlat(&["resolution", "--field", "prime:32003", "--degree-bound", "9"], &p);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("strands over prime:32003 up to degree 9: exact"));
    let low = distlat(&["resolution", "--degree-bound", "2"], &p);
    assert_eq!(low.status.code(), Some(2));
}

#[test]
fn oracles_by_input_kind() {
    let dir = TempDir::new().unwrap();
    let anti = write(&dir, "anti.json", ANTICHAIN4);
    let o = distlat(&["oracle"], &anti);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("16 32 24 8 1"));
    let ideal = write(&dir, "i.json", r#"{"variables":["x1","x2","y1","y2"],"generators":["y1*y2","x1*y2","x1*x2"]}"#);
    assert!(stdout(&distlat(&["oracle"], &ideal)).contains("betti (taylor, rational): 3 2"));
    let complex = write(&dir, "c.json", r#"{"vertices":["x1","x2","y1","y2"],"facets":[["x1","x2"],["y1","y2"]]}"#);
    assert!(stdout(&distlat(&["oracle"], &complex)).contains("not CM"));
    let g = write(&dir, "g.json", K22);
    assert!(stdout(&distlat(&["oracle"], &g)).contains("agree: ok"));
}
