use std::path::PathBuf;
use std::process::{Command, Output};

use g2_core::actions::{table_source, Side, Variant};
use g2_core::weyl::Frame;

fn g2ido(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_g2ido"))
        .args(args)
        .env_remove(g2_cli::OUTPUT_DIR_ENV)
        .output()
        .expect("spawn g2ido")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("g2ido-cli-{}-{name}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn emit_family_one_plain() {
    let o = g2ido(&["emit", "--family", "i", "--p", "1", "--frame", "final", "--format", "plain"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "Domega - 1/2*xi2*Dxi1 - 1/2*zeta*Deta1 - eta2*Dzeta\n");
}

#[test]
fn emit_rejects_excluded_parameters() {
    let o = g2ido(&["emit", "--family", "iii", "--p", "2", "--q", "1"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("excluded: p = 2q"));
    let o = g2ido(&["emit", "--family", "i", "--p", "0"]);
    assert!(!o.status.success());
}

#[test]
fn emit_family_two_latex() {
    let o = g2ido(&["emit", "--family", "ii", "--p", "1", "--format", "latex"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "-\\frac{1}{2} \\partial_{\\xi_2}^{2} + \\partial_{\\eta_2}\n");
}

#[test]
fn emit_is_byte_stable() {
    let args = ["emit", "--family", "v", "--p", "2", "--frame", "original", "--format", "machine"];
    assert_eq!(g2ido(&args).stdout, g2ido(&args).stdout);
}

#[test]
fn verify_relations_final() {
    let o = g2ido(&["verify", "--suite", "relations", "--frame", "final"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.lines().any(|l| l.starts_with("relations.left.final PASS 105/105 pairs OK")), "{text}");
}

#[test]
fn verify_intertwine_small_grid() {
    let o = g2ido(&["verify", "--suite", "intertwine", "--max-p", "2", "--max-q", "2", "--central", "fixed:1"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn verify_intertwine_symbolic_reports_constraints() {
    let o = g2ido(&["verify", "--suite", "intertwine", "--max-p", "1", "--max-q", "2", "--central", "symbolic"]);
    let text = stdout(&o);
    assert!(o.status.success(), "{text}");
    assert!(text.contains("intertwine.ii(p=1).final PASS") && text.contains("Lh constraint {Lh = 1}"), "{text}");
    assert!(text.contains("Lh constraint all Lh"), "{text}");
}

#[test]
fn corrupted_table_names_failing_pair() {
    let text = table_source(Side::Left, Frame::Original, Variant::Primary).unwrap();
    let line = "1/2 | 0 0 0 0 0 1 | 0 0 0 0 1 0";
    assert!(text.contains(line));
    let bad = text.replacen(line, "1/3 | 0 0 0 0 0 1 | 0 0 0 0 1 0", 1);
    let dir = scratch("table");
    let path = dir.join("left.txt");
    std::fs::write(&path, bad).unwrap();
    let o = g2ido(&["verify", "--suite", "relations", "--table-file", path.to_str().unwrap()]);
    let out = stdout(&o);
    assert!(!o.status.success());
    assert!(out.contains("relations.file.left.original FAIL") && out.contains("b2+"), "{out}");

    std::fs::write(&path, text).unwrap();
    assert!(g2ido(&["verify", "--suite", "relations", "--table-file", path.to_str().unwrap()]).status.success());
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn search_examples() {
    let o = g2ido(&["search", "--lambda", "0,0", "--mu", "1/2,-1/2"]);
    let text = stdout(&o);
    assert!(text.contains("dimension 1") && text.lines().any(|l| l == "d+|0>"), "{text}");
    let o = g2ido(&["search", "--family", "ii", "--p", "1"]);
    let text = stdout(&o);
    assert!(o.status.success());
    assert_eq!(text.matches("dimension 1; matches closed form").count(), 3, "{text}");
    let o = g2ido(&["search", "--lambda", "1/3,1/7", "--mu", "1/2,-1/2"]);
    assert!(stdout(&o).contains("dimension 0"));
    assert!(!g2ido(&["search", "--lambda", "1/3", "--mu", "1/2,-1/2"]).status.success());
}

#[test]
fn output_directory_from_environment() {
    let dir = scratch("env");
    let o = Command::new(env!("CARGO_BIN_EXE_g2ido"))
        .args(["verify", "--suite", "simplified"])
        .env(g2_cli::OUTPUT_DIR_ENV, &dir)
        .output()
        .unwrap();
    assert!(o.status.success());
    let written = std::fs::read(dir.join("verify-simplified.txt")).unwrap();
    assert_eq!(written, o.stdout);
    let _ = std::fs::remove_dir_all(dir);
}

#[test]
fn lr_commute_failure_is_reported() {
    let o = g2ido(&["verify", "--suite", "lr-commute", "--frame", "final"]);
    assert!(!o.status.success());
    assert!(stdout(&o).starts_with("lr-commute.final FAIL 52/90"));
}

#[test]
fn in_process_run_matches_binary() {
    let args = ["g2ido", "verify", "--suite", "frames", "--seed", "9"];
    let inproc = g2_cli::run_args(args).unwrap();
    let bin = g2ido(&args[1..]);
    assert_eq!(inproc.text.as_bytes(), bin.stdout.as_slice());
    assert_eq!(inproc.exit_code, bin.status.code().unwrap());
}
