use std::process::{Command, Output};

use cagegen::planar_code::decode;
use cagegen::PrimalFullerene;

fn cagegen(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cagegen")).args(args).output().unwrap()
}

fn counts(o: &Output) -> Vec<(usize, u64)> {
    String::from_utf8_lossy(&o.stderr)
        .lines()
        .filter_map(|l| {
            let (a, b) = l.split_once(": ")?;
            Some((a.parse().ok()?, b.parse().ok()?))
        })
        .collect()
}

#[test]
fn counts_on_stderr() {
    let o = cagegen(&["40", "--start", "36", "--counts-only"]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(counts(&o), [(36, 15), (38, 17), (40, 40)]);
}

#[test]
fn writes_planar_code() {
    let o = cagegen(&["32"]);
    assert!(o.status.success());
    let graphs = decode(&o.stdout).unwrap();
    assert_eq!(graphs.len(), 6);
    for rot in graphs {
        let p = PrimalFullerene::from_rotations(&rot).unwrap();
        assert_eq!(p.order(), 32);
    }
}

#[test]
fn dual_output() {
    let o = cagegen(&["30", "--dual"]);
    let graphs = decode(&o.stdout).unwrap();
    assert_eq!(graphs.len(), 3);
    assert!(graphs.iter().all(|g| g.len() == 17));
}

#[test]
fn split_runs_add_up() {
    let total: u64 = (0..3)
        .map(|r| counts(&cagegen(&["44", "--counts-only", "--mod", &format!("{r}/3")]))[0].1)
        .sum();
    assert_eq!(total, 89);
}

#[test]
fn ipr_and_hamiltonian_check() {
    let o = cagegen(&["70", "--start", "60", "--ipr", "--counts-only", "--ham-check"]);
    assert!(o.status.success());
    let c = counts(&o);
    assert_eq!(c.first(), Some(&(60, 1)));
    assert_eq!(c.last(), Some(&(70, 1)));
    assert!(String::from_utf8_lossy(&o.stderr).contains("non-Hamiltonian: 0"));
}

#[test]
fn rejects_bad_input() {
    for args in [&["21"][..], &["40", "--mod", "4/4"], &["40", "--mod", "x"]] {
        assert!(!cagegen(args).status.success());
    }
}
