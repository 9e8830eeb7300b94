//! End-to-end checks of the command-line surface: exit codes, output
//! formats, and determinism.

use std::process::Command;

fn esc(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_esc"))
        .args(args)
        .output()
        .expect("failed to launch esc");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn verify_valid_solution_exits_zero() {
    let (stdout, _, code) = esc(&["verify", "5", "2", "4", "20"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("typeI"), "{stdout}");
}

#[test]
fn verify_trivial_solution_exits_zero() {
    let (stdout, _, code) = esc(&["verify", "7", "4", "4", "14"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("trivial"), "{stdout}");
}

#[test]
fn verify_invalid_solution_exits_one() {
    let (stdout, _, code) = esc(&["verify", "5", "2", "4", "21"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("invalid"), "{stdout}");
}

#[test]
fn verify_usage_errors_exit_two() {
    let (_, _, code) = esc(&["verify", "5", "2", "4"]);
    assert_eq!(code, 2);
    let (_, _, code) = esc(&["verify", "5", "2", "4", "x"]);
    assert_eq!(code, 2);
    let (_, stderr, code) = esc(&["verify", "5", "0", "4", "20"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("positive"));
}

#[test]
fn verify_overflow_exits_three() {
    let big = u128::MAX.to_string();
    let (_, stderr, code) = esc(&["verify", &big, &big, &big, &big]);
    assert_eq!(code, 3);
    assert!(stderr.contains("overflow"), "{stderr}");
}

#[test]
fn enumerate_lists_solutions_in_lex_order() {
    let (stdout, _, code) = esc(&["enumerate", "7", "--csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = stdout.lines().collect();
    assert_eq!(
        lines,
        vec![
            "p,x,y,z,kind",
            "7,2,15,210,typeI",
            "7,2,16,112,typeI",
            "7,2,18,63,typeI",
            "7,2,21,42,typeII",
            "7,3,6,14,typeI",
        ]
    );
}

#[test]
fn enumerate_rejects_non_prime() {
    let (_, stderr, code) = esc(&["enumerate", "9"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not prime"), "{stderr}");
}

#[test]
fn tables_emit_triple_columns() {
    let (stdout, _, code) = esc(&["tables", "second", "3", "--csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "p,x,y,z,A,B,C\n3,1,4,12,24,143,145\n");
    let (stdout, _, code) = esc(&["tables", "third", "3", "--csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "p,x,y,z,A,B,C\n3,1,4,12,6,8,10\n");
}

#[test]
fn tables_json_rows_carry_named_keys() {
    let (stdout, _, code) = esc(&["tables", "first", "3", "--json"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "{\"p\":3,\"x\":1,\"y\":4,\"z\":12,\"A\":8,\"B\":15,\"C\":17}\n"
    );
}

#[test]
fn search_finds_expected_certificates() {
    let (stdout, _, code) = esc(&["search", "5", "typeII", "10", "10", "--csv"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("5,2,5,10,typeII,1,2"), "{stdout}");
    let (stdout, _, code) = esc(&["search", "5", "typeI", "10", "10", "--csv"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("5,2,4,20,typeI,2,1"), "{stdout}");
}

#[test]
fn search_rejects_non_prime_and_bad_flags() {
    let (_, stderr, code) = esc(&["search", "4", "typeI", "10", "10"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("not prime"), "{stderr}");
    let (_, _, code) = esc(&["search", "5", "typeI", "10", "10", "--reduced"]);
    assert_eq!(code, 2);
}

#[test]
fn search_reduced_reports_lifted_solutions() {
    let (stdout, _, code) = esc(&["search", "5", "typeII", "10", "10", "--reduced", "--csv"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("5,2,5,10,typeII,1,1"), "{stdout}");
}

#[test]
fn berggren_tree_and_path() {
    let (stdout, _, code) = esc(&["berggren", "tree", "1", "--csv"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "a,b,c,depth,path\n3,4,5,0,-\n5,12,13,1,M1\n21,20,29,1,M2\n15,8,17,1,M3\n"
    );
    let (stdout, _, code) = esc(&["berggren", "path", "5", "12", "13"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.trim(), "M1");
    let (_, stderr, code) = esc(&["berggren", "path", "6", "8", "10"]);
    assert_eq!(code, 1);
    assert!(stderr.contains("primitive"), "{stderr}");
}

#[test]
fn berggren_tree_respects_hypotenuse_bound() {
    let (stdout, _, code) = esc(&["berggren", "tree", "9", "--max-hypotenuse", "100", "--csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout.lines().count(), 17); // header + 16 primitive triples
}

#[test]
fn range_output_independent_of_workers() {
    let (one, _, code1) = esc(&["range", "3", "100", "--workers", "1", "--csv"]);
    let (eight, _, code8) = esc(&["range", "3", "100", "--workers", "8", "--csv"]);
    assert_eq!(code1, 0);
    assert_eq!(code8, 0);
    assert_eq!(one, eight, "worker count changed the output bytes");
    assert_eq!(one.lines().count(), 25); // header + 24 primes
}

#[test]
fn range_reports_witness_for_five() {
    let (stdout, stderr, code) = esc(&["range", "5", "5", "--csv"]);
    assert_eq!(code, 0);
    assert_eq!(stdout, "p,x,y,z,kind,trivial\n5,2,4,20,typeI,0\n");
    assert!(stderr.contains("checked 1 primes"), "{stderr}");
}

#[test]
fn range_reports_two_with_trivial_only() {
    // p = 2 has no non-trivial solution; its closed form is listed but the
    // scan must not count it as missing
    let (stdout, _, code) = esc(&["range", "2", "5", "--csv"]);
    assert_eq!(code, 0);
    assert_eq!(
        stdout,
        "p,x,y,z,kind,trivial\n2,1,2,2,trivial,1\n3,1,4,12,typeI,2\n5,2,4,20,typeI,0\n"
    );
}

#[test]
fn range_validates_bounds() {
    let (_, _, code) = esc(&["range", "10", "3"]);
    assert_eq!(code, 2);
    let (_, _, code) = esc(&["range", "3", "100", "--workers", "0"]);
    assert_eq!(code, 2);
}

#[test]
fn quiet_suppresses_rows() {
    let (stdout, _, code) = esc(&["enumerate", "7", "--quiet"]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let (stdout, stderr, code) = esc(&["range", "3", "50", "--quiet"]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    assert!(stderr.contains("missing witnesses: none"), "{stderr}");
}

#[test]
fn csv_and_json_conflict() {
    let (_, _, code) = esc(&["enumerate", "7", "--csv", "--json"]);
    assert_eq!(code, 2);
}
