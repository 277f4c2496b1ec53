use std::process::{Command, Output};

fn qaffine(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qaffine"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is JSON"))
        .collect()
}

#[test]
fn show_alpha_text() {
    let o = qaffine(&["show", "alpha", "1", "1", "0"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "q^1 + q^-1");
}

#[test]
fn show_omega_degenerate_warns() {
    let o = qaffine(&["show", "omega", "1", "1", "1"]);
    assert!(o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("degenerate"));
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn show_matrix_is_two_by_two() {
    let o = qaffine(&["show", "matrix", "1", "1", "1", "--norm", "unit"]);
    assert!(o.status.success());
    let m: Vec<Vec<String>> = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(m, vec![vec!["y^1*q^-1", "x^1*q^-2"], vec!["q^-1", "1"]]);
}

#[test]
fn basis_generic_point_is_basis() {
    let o = qaffine(&["basis", "2", "1", "--q", "2", "--x", "3", "--y", "5", "--json"]);
    assert!(o.status.success());
    let r = &json_lines(&o)[0];
    assert_eq!(r["criterion_pass"], true);
    assert_eq!(r["rank"], 6);
    assert_eq!(r["expected_rank"], 6);
}

#[test]
fn basis_degenerate_point() {
    let o = qaffine(&["basis", "1", "1", "--q", "2", "--x", "1", "--y", "1/4", "--json"]);
    let r = &json_lines(&o)[0];
    assert_eq!(r["criterion_pass"], false);
    assert_eq!(r["failing_j"], serde_json::json!([0]));
    assert!(r["rank"].as_u64().unwrap() < 4);
}

#[test]
fn basis_dual_criterion_fails_at_displayed_point() {
    let o = qaffine(&[
        "basis", "1", "1", "--dual", "--q", "2", "--x", "1", "--y", "4", "--json",
    ]);
    let r = &json_lines(&o)[0];
    assert_eq!(r["criterion_pass"], false);
    assert_eq!(r["failing_j"], serde_json::json!([0]));
}

#[test]
fn basis_rejects_n_above_m() {
    let o = qaffine(&["basis", "1", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_config_is_usage_error() {
    assert_eq!(
        qaffine(&["verify", "relations", "--max-m", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(qaffine(&["verify", "basis", "--q", "1"]).status.code(), Some(2));
}

#[test]
fn verify_relations_small() {
    let o = qaffine(&["verify", "relations", "--max-m", "2", "--max-n", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).ends_with("9 checks, 0 failed\n"));
}

#[test]
fn verify_identities_to_12() {
    let o = qaffine(&["verify", "identities", "--max-m", "12"]);
    assert!(o.status.success(), "{}", stdout(&o));
}

#[test]
fn verify_determinant_reports() {
    let o = qaffine(&["verify", "determinant", "--max-m", "3", "--json"]);
    assert!(o.status.success());
    let lines = json_lines(&o);
    let (summary, records) = lines.split_last().unwrap();
    assert_eq!(summary["summary"]["failed"], 0);
    for r in records {
        let rep = &r["report"];
        assert!(rep["det"].is_string() && rep["closed_form"].is_string());
        assert!(rep["factored"]
            .as_array()
            .unwrap()
            .iter()
            .all(|f| f["multiplicity"].is_u64()));
    }
    // n <= m <= 3, l < n, both normalizations
    assert_eq!(records.len(), 2 * 10);
}

#[test]
fn displayed_determinant_constant_fails() {
    let o = qaffine(&[
        "verify",
        "determinant",
        "--max-m",
        "2",
        "--norm",
        "unit",
        "--as-printed",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let lines = json_lines(&o);
    let failed: Vec<_> = lines.iter().filter(|r| r["pass"] == false).collect();
    // only |Δ_2| for (2, 2) carries a nontrivial factorial product
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["params"]["l"], 1);
}

#[test]
fn swapped_legs_break_lemmas() {
    let o = qaffine(&["verify", "lemmas", "--max-m", "2", "--max-l", "1", "--swap-legs"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn output_is_independent_of_thread_count() {
    let run = |threads: &str| {
        let o = Command::new(env!("CARGO_BIN_EXE_qaffine"))
            .args(["verify", "all", "--max-m", "2", "--cases", "200", "--json"])
            .env("QAFFINE_THREADS", threads)
            .output()
            .unwrap();
        assert!(o.status.success());
        o.stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn scalar_sweep_seeded() {
    let a = qaffine(&["verify", "scalars", "--cases", "150", "--seed", "7", "--json"]);
    assert!(a.status.success());
    let recs = json_lines(&a);
    assert_eq!(recs.len(), 3);
    assert_eq!(recs[0]["params"]["seed"], 7);
}
