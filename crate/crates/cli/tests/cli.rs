use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    let mut p = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    p.push("tests/data");
    p.push(name);
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_greenbox"))
        .args(args)
        .output()
        .expect("failed to spawn greenbox")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn eggbox_t3_golden() {
    let o = run(&["eggbox", &data("t3.sg")]);
    assert_eq!(o.status.code(), Some(0));
    let expected = "\
D-class 1 (3 R-classes x 3 L-classes)
{112 221}  {223* 332} {331 113*}
{121* 212} {232 323*} {313 131}
{211 122*} {322 233}  {133* 311}

D-class 0 (1 R-classes x 1 L-classes)
{231 213 312 132 321 123*}

D-class 2 (1 R-classes x 3 L-classes)
{111*} {222*} {333*}
";
    assert_eq!(stdout(&o), expected);
}

#[test]
fn eggbox_trivial() {
    let o = run(&["eggbox", &data("trivial.sg")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "D-class 0 (1 R-classes x 1 L-classes)\n{0*}\n");
}

#[test]
fn inverse_along_found() {
    let o = run(&["inverse", &data("t3.sg"), "--a", "221", "--along", "232"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "323 inner=true e=121 f=223 (ad)#=332 d(ad)#=323\n"
    );
}

#[test]
fn inverse_along_not_inner() {
    let o = run(&["inverse", &data("t3.sg"), "--a", "123", "--along", "232"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("323 inner=false "), "{}", stdout(&o));
}

#[test]
fn inverse_along_missing() {
    let o = run(&["inverse", &data("t3.sg"), "--a", "111", "--along", "232"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "none\n");
}

#[test]
fn inverse_along_matrix_letters() {
    let o = run(&[
        "inverse",
        &data("matrix_example.sg"),
        "--a",
        "b",
        "--along",
        "c",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(
        out.starts_with("[[0,1,0],[1,0,0],[0,0,0]] inner=true "),
        "{out}"
    );
    assert!(out.contains("(ad)#=[[1,0,0],[0,1,0],[0,0,0]]"), "{out}");
}

#[test]
fn group_and_drazin() {
    let o = run(&["group", &data("t3.sg"), "--a", "231"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "312\n"));
    let o = run(&["group", &data("t3.sg"), "--a", "233"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(1), "none\n"));
    let o = run(&["drazin", &data("t3.sg"), "--a", "233"]);
    assert_eq!(
        (o.status.code(), stdout(&o).as_str()),
        (Some(0), "333 m=2\n")
    );
}

#[test]
fn moore_penrose_with_transpose() {
    let o = run(&["mp", &data("bool2.sg"), "--a", "[[1,1],[0,0]]"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "[[1,0],[1,0]]\n");
}

#[test]
fn moore_penrose_without_involution() {
    let o = run(&["mp", &data("bool2_plain.sg"), "--a", "[[1,1],[0,0]]"]);
    assert_eq!(o.status.code(), Some(5));
    assert!(stderr(&o).contains("involution"));
}

#[test]
fn unknown_element() {
    let o = run(&["group", &data("t3.sg"), "--a", "999"]);
    assert_eq!(o.status.code(), Some(4));
    assert!(stderr(&o).contains("999"));
}

#[test]
fn parse_error_reports_line() {
    let o = run(&["eggbox", &data("badparse.sg")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 3"), "{}", stderr(&o));
}

#[test]
fn missing_file() {
    let o = run(&["eggbox", &data("no_such_file.sg")]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn validation_errors() {
    let o = run(&["eggbox", &data("nonassoc.sg")]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("not associative"));
    let o = run(&["eggbox", &data("bad_involution.sg")]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn verify_file_passes() {
    let o = run(&["verify", &data("t3.sg")]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("SKIP thm-koliha (no involution)"), "{out}");
    assert!(
        out.ends_with("SUMMARY semigroups=1 involutions=0 failures=0\n"),
        "{out}"
    );

    let o = run(&["verify", &data("bool2.sg")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("CHECK thm-koliha instances=16 failures=0"));
}

#[test]
fn verify_sweep_orders() {
    let o = run(&["verify", "--order", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("ORDER 1 semigroups=1\n"));
    assert!(out.contains("ORDER 2 semigroups=8\n"));
    assert!(out.contains("SUMMARY semigroups=9 "));
}

#[test]
fn verify_single_check() {
    let o = run(&["verify", "--order", "1", "--check", "uniqueness"]);
    assert_eq!(o.status.code(), Some(0));
    let checks: Vec<_> = stdout(&o)
        .lines()
        .filter(|l| l.starts_with("CHECK"))
        .map(str::to_owned)
        .collect();
    assert_eq!(checks.len(), 1);
    assert!(checks[0].starts_with("CHECK uniqueness "));
}

#[test]
fn order_four_needs_deep() {
    let o = run(&["verify", "--order", "4"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--deep"));
}

#[test]
fn enumerate_count() {
    let o = run(&["enumerate", "--order", "3", "--count"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "113\n"));
}
