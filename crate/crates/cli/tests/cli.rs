use std::path::PathBuf;
use std::process::Command;

use predim::io::matroid_json;
use predim::subset::{Ground, Subset};
use predim::Matroid;
use serde_json::{json, Value};

struct Dir(PathBuf);

impl Dir {
    fn new(tag: &str) -> Dir {
        let p = std::env::temp_dir().join(format!("predim-cli-{tag}-{}", std::process::id()));
        std::fs::create_dir_all(&p).unwrap();
        Dir(p)
    }

    fn file(&self, name: &str, text: &str) -> String {
        let p = self.0.join(name);
        std::fs::write(&p, text).unwrap();
        p.display().to_string()
    }
}

impl Drop for Dir {
    fn drop(&mut self) {
        let _ = std::fs::remove_dir_all(&self.0);
    }
}

fn run(args: &[&str]) -> (Value, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_predim"))
        .args(args)
        .output()
        .unwrap();
    let code = out.status.code().unwrap();
    let text = if out.stdout.is_empty() {
        out.stderr
    } else {
        out.stdout
    };
    (serde_json::from_slice(&text).unwrap_or(Value::Null), code)
}

/// Graphic matroid of K4 on its six edges.
fn k4() -> Matroid {
    let ends = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
    let ground = Ground::new(["12", "13", "14", "23", "24", "34"]).unwrap();
    let spanning_tree = |b: Subset| {
        let mut parent = [0, 1, 2, 3];
        fn root(p: &[usize; 4], mut v: usize) -> usize {
            while p[v] != v {
                v = p[v];
            }
            v
        }
        b.iter().all(|e| {
            let (u, v) = (root(&parent, ends[e].0), root(&parent, ends[e].1));
            parent[u] = v;
            u != v
        })
    };
    let bases: Vec<Subset> = Subset::full(6)
        .subsets()
        .filter(|b| b.len() == 3 && spanning_tree(*b))
        .collect();
    Matroid::from_bases(ground, &bases).unwrap()
}

#[test]
fn k4_is_not_flat() {
    let dir = Dir::new("k4");
    let mk4 = dir.file("mk4.json", &matroid_json(&k4()).unwrap());
    let (out, code) = run(&["flat?", &mk4]);
    assert_eq!(code, 1);
    assert_eq!(out["flat"], json!(false));
    assert_eq!(
        out["witness"]["subset"],
        json!(["12", "13", "14", "23", "24", "34"])
    );
    assert_eq!(out["witness"]["alpha"], json!(-1));
    let (_, code) = run(&["present", &mk4]);
    assert_eq!(code, 1);
}

#[test]
fn uniform_examples() {
    let dir = Dir::new("u23");
    let u23 = dir.file(
        "u23.json",
        r#"{"elements":["a","b","c"],"relations":[["a","b","c"]]}"#,
    );
    assert_eq!(
        run(&["present", &u23]),
        (json!({"elements":["a","b","c"],"relations":[["a","b","c"]]}), 0)
    );
    assert_eq!(run(&["min-arity", &u23]), (json!({"flat":true,"min_arity":3}), 0));
    let (out, code) = run(&["closure", &u23, "--set", "a,b"]);
    assert_eq!((out["closure"].clone(), code), (json!(["a", "b", "c"]), 0));
    let (out, _) = run(&["dim", &u23, "--set", "a,b"]);
    assert_eq!(out["dimension"], json!(2));
}

#[test]
fn class_membership_exit_codes() {
    let dir = Dir::new("check");
    let empty = dir.file("empty.json", r#"{"elements":[],"relations":[]}"#);
    assert_eq!(run(&["check", &empty]).1, 0);
    let neg = dir.file(
        "neg.json",
        r#"{"elements":["a","b"],"relations":[["a"],["b"],["a","b"]]}"#,
    );
    let (out, code) = run(&["check", &neg]);
    assert_eq!(code, 1);
    assert_eq!(out["violator"], json!(["a", "b"]));
}

#[test]
fn bad_input_exits_with_two() {
    let dir = Dir::new("bad");
    let bad = dir.file("bad.json", r#"{"elements":["a"],"relations":[["z"]]}"#);
    let (out, code) = run(&["check", &bad]);
    assert_eq!(code, 2);
    assert!(out["error"].is_string());
    let unknown = dir.file("extra.json", r#"{"elements":[],"relations":[],"weights":[]}"#);
    assert_eq!(run(&["check", &unknown]).1, 2);
    assert_eq!(run(&["check", "/nonexistent/predim.json"]).1, 2);
    assert_eq!(run(&["--cap", "30", "check", &bad]).1, 2);
}

#[test]
fn ground_set_above_cap_is_rejected() {
    let dir = Dir::new("cap");
    let labels: Vec<String> = (0..5).map(|i| format!("e{i}")).collect();
    let sys = dir.file(
        "five.json",
        &json!({"elements": labels, "relations": []}).to_string(),
    );
    assert_eq!(run(&["check", &sys]).1, 0);
    assert_eq!(run(&["--cap", "4", "check", &sys]).1, 2);
}
