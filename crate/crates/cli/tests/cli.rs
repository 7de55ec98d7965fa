use std::path::Path;
use std::process::{Command, Output};

fn postpfa(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_postpfa")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn build_then_run() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("equal.json");
    let o = postpfa(&["build", "--family", "equal", "--x", "1/4", "--out", path(&f)]);
    assert!(o.status.success(), "{o:?}");
    let o = postpfa(&["run", "--automaton", path(&f), "--input", "010"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("acceptance       4/5 (0.8)"), "{out}");
    assert!(out.contains("accept_mass      1/512"), "{out}");
}

#[test]
fn monte_carlo_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("equal.json");
    assert!(postpfa(&["build", "--family", "equal", "--x", "1/4", "--out", path(&f)]).status.success());
    let run = || stdout(&postpfa(&["mc", "--automaton", path(&f), "--input", "010", "--trials", "2000", "--seed", "5"]));
    let a = run();
    assert!(a.contains("trials           2000"), "{a}");
    assert_eq!(a, run());
}

#[test]
fn certificates() {
    assert_eq!(stdout(&postpfa(&["cert", "--protocol", "usquare", "--n", "9"])), "aaabbb$\n");
    assert_eq!(stdout(&postpfa(&["cert", "--protocol", "upower", "--n", "8"])), "0001011$\n");
    let o = postpfa(&["cert", "--protocol", "upower", "--n", "6"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn soundness_search() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("upower.json");
    assert!(postpfa(&["build", "--family", "upower", "--x", "1/2", "--out", path(&f)]).status.success());
    let o = postpfa(&["soundness", "--automaton", path(&f), "--input", "00000", "--max-prefix", "7"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("max_acceptance   1/5 (0.2)"), "{}", stdout(&o));
    let o = postpfa(&["run", "--automaton", path(&f), "--input", "0000", "--cert", "011$"]);
    assert!(stdout(&o).contains("acceptance       1/1 (1)"), "{}", stdout(&o));
}

#[test]
fn coin_exact() {
    let o = postpfa(&["coin", "--bits", "101", "--k", "1", "--exact"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("p_hat            2665/4096"), "{out}");
    assert!(out.contains("bit              1"), "{out}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(postpfa(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(postpfa(&["build", "--family", "equal"]).status.code(), Some(2));
    assert_eq!(postpfa(&["build", "--family", "equal", "--x", "one"]).status.code(), Some(2));
    assert_eq!(postpfa(&["suite", "--name", "nope"]).status.code(), Some(2));
}

#[test]
fn module_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let f = dir.path().join("bad.json");
    std::fs::write(&f, r#"{"kind":"pfa","alphabet":["0"],"states":["s","a","r"],"start":"s","accept":"a","reject":"r","transitions":[]}"#).unwrap();
    let o = postpfa(&["run", "--automaton", path(&f), "--input", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("sums to 0"));
    assert_eq!(postpfa(&["build", "--family", "equal", "--x", "1/2"]).status.code(), Some(1));
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("cfg.toml");
    std::fs::write(&cfg, "seed = 3\ntrials = 500\nformat = \"csv\"\n").unwrap();
    let o = postpfa(&["--config", path(&cfg), "coin", "--bits", "1"]);
    let out = stdout(&o);
    assert!(out.contains("trials           500") && out.contains("seed             3"), "{out}");
    let o = postpfa(&["--config", path(&cfg), "coin", "--bits", "1", "--seed", "4"]);
    assert!(stdout(&o).contains("seed             4"));
    std::fs::write(&cfg, "colour = 1\n").unwrap();
    assert_eq!(postpfa(&["--config", path(&cfg), "coin", "--bits", "1"]).status.code(), Some(2));
}

#[test]
fn suite_csv_is_stable() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.csv"), dir.path().join("b.csv"));
    for f in [&a, &b] {
        let o = postpfa(&["suite", "--name", "coin-guess", "--trials", "2000", "--seed", "7", "--csv", path(f)]);
        assert!(o.status.success(), "{}", stdout(&o));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert!(text.starts_with("criterion,construction,parameters,input,exact,decimal,bound,pass\n"));
    let o = postpfa(&["suite", "--name", "3", "--format", "json"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("\"criterion\": 3"));
}
