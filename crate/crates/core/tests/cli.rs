use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nielsen")).args(args).output().expect("binary runs")
}

fn lines(o: &Output) -> Vec<serde_json::Value> {
    String::from_utf8_lossy(&o.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn entries(o: &Output) -> usize {
    lines(o)[0]["perms"].as_array().unwrap().len()
}

#[test]
fn construct_commands() {
    let o = run(&["construct", "family", "--n", "7", "--g", "3", "--kind", "dt"]);
    assert!(o.status.success());
    assert_eq!(entries(&o), 9);
    let o = run(&["construct", "tau"]);
    assert_eq!((lines(&o)[0]["n"].as_u64(), entries(&o)), (Some(6), 7));
    let o = run(&["construct", "exceptional", "--case", "agl32"]);
    assert_eq!((lines(&o)[0]["n"].as_u64(), entries(&o)), (Some(8), 10));
    let o = run(&["construct", "family", "--n", "4", "--g", "3", "--kind", "dt"]);
    assert!(!o.status.success());
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", "clebsch", "--n", "3", "--r", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(lines(&o)[0]["status"], "pass");
    let o = run(&["verify", "parity", "--n", "6"]);
    assert_eq!(lines(&o)[0]["observed"], -1);
    // a cap is never a verdict
    let o = run(&["verify", "fried-genus0", "--n", "6", "--cap-memory", "0"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(lines(&o)[0]["status"], "inconclusive");
    assert!(!run(&["verify", "no-such-claim"]).status.success());
}

#[test]
fn reports_are_byte_identical() {
    let a = run(&["verify", "fried-two-orbits", "--n", "5", "--g", "1", "--workers", "1"]);
    let b = run(&["verify", "fried-two-orbits", "--n", "5", "--g", "1", "--workers", "2"]);
    assert_eq!(a.stdout, b.stdout);
    let a = run(&["orbit", "--kind", "tc", "--n", "6", "--g", "0", "--workers", "1"]);
    let b = run(&["orbit", "--kind", "tc", "--n", "6", "--g", "0"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn list_claims_covers_the_registry() {
    let o = run(&["list-claims"]);
    let ids: Vec<String> = lines(&o).iter().map(|v| v["claim_id"].as_str().unwrap().to_string()).collect();
    for id in ["clebsch", "fried-genus0", "fried-two-orbits", "tc-equals-tca", "gl32-six-tuples", "dt73-gl32"] {
        assert!(ids.iter().any(|x| x == id), "{id} missing");
    }
}
