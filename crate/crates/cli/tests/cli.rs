use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::TempDir;

const APPLICATION: &str = "6x1 - 12x2 - 8x3 + 22x4 = 14\n";
const EXAMPLE1: &str = "17x - 7y + 10z = -12\n";
const EXAMPLE3: &str = "\
3x1 + 4x2 + 22x4 - 8x5 = 25
6x1 + 46x4 - 12x5 = 2
4x2 + 3x3 - x4 + 9x5 = 26
";
const EXAMPLE5: &str = "\
3x1 + 6x3 + 2x4 = 0
4x2 - 2x3 - 7x5 = -1
";
const EQ8: &str = "-13x1 + 3x2 - 4x3 = 0\n";

fn dioph() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dioph"))
}

fn run(args: &[&str]) -> Output {
    dioph().args(args).output().expect("binary runs")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = dioph()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Files(tempfile::tempdir().unwrap())
    }

    fn put(&self, name: &str, text: &str) -> PathBuf {
        let p = self.0.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn machine_solution(vars: &[&str], c: &[&[i64]], d: &[i64]) -> String {
    let doc = serde_json::json!({
        "status": "solution",
        "vars": vars,
        "p": c.first().map_or(0, |r| r.len()),
        "C": c.iter().map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "d": d.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
    });
    doc.to_string()
}

fn parse_tuple(s: &str) -> Vec<i64> {
    s.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|v| v.trim().parse().unwrap())
        .collect()
}

// ---- solve ----

#[test]
fn solve_gcd_method_on_the_application() {
    let f = Files::new();
    let input = f.put("app.txt", APPLICATION);
    let o = run(&["solve", "--algorithm", "e1", "--input", s(&input)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().any(|l| l == "x2 = k1"), "{out}");
    assert!(out.contains("k3") && !out.contains("k4"), "{out}");
}

#[test]
fn solve_reports_the_parity_witness() {
    let o = run_stdin(&["solve"], "2x + 4y = 7\n");
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("gcd 2"), "{}", stdout(&o));

    let o = run_stdin(&["solve", "--format", "machine", "--input", "-"], "2x + 4y = 7\n");
    assert_eq!(code(&o), 1);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["status"], "no_solution");
    assert_eq!(doc["witness"], serde_json::json!({"gcd": "2", "b": "7"}));
    assert!(doc["reason"].is_string());
}

#[test]
fn solve_fraction_method_on_example_three() {
    let f = Files::new();
    let input = f.put("ex3.txt", EXAMPLE3);
    let o = run(&["solve", "--algorithm", "s3", "--format", "machine", "--input", s(&input)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["status"], "solution");
    assert_eq!(doc["p"], 2);
    // first-appearance order: x3 only shows up in the third line
    assert_eq!(doc["vars"], serde_json::json!(["x1", "x2", "x4", "x5", "x3"]));
    assert!(doc["C"][0][0].is_string());
}

#[test]
fn solve_trace_appends_statistics() {
    let o = run_stdin(&["solve", "--algorithm", "e2", "--trace"], EXAMPLE1);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert!(out.contains("iterations: 2\n"), "{out}");
    assert!(out.contains("substitutions: ") && out.contains("peak_coeff: "), "{out}");

    let o = run_stdin(&["solve", "--algorithm", "e2", "--trace", "--format", "machine"], EXAMPLE1);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["trace"]["iterations"], 2);
}

#[test]
fn solve_every_algorithm_on_a_system() {
    for alg in ["s1", "s2", "s3", "s4", "s5", "auto"] {
        let o = run_stdin(&["solve", "-a", alg], EXAMPLE5);
        assert_eq!(code(&o), 0, "{alg}: {}", stderr(&o));
        assert_eq!(stdout(&o).lines().count(), 5);
    }
}

#[test]
fn solve_usage_errors_exit_2() {
    let o = run_stdin(&["solve", "--algorithm", "e1"], EXAMPLE5);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).is_empty());
    assert!(!stderr(&o).is_empty());

    assert_eq!(code(&run_stdin(&["solve"], "3x + = 2\n")), 2);
    assert_eq!(code(&run_stdin(&["solve"], "3x + 2\n")), 2);
    assert_eq!(code(&run_stdin(&["solve"], "\n# only a comment\n")), 2);
    assert_eq!(code(&run(&["solve", "--input", "/nonexistent/file.txt"])), 2);
    assert_eq!(code(&run(&["solve", "--algorithm", "s9"])), 2);
    assert_eq!(code(&run(&["solve", "--format", "xml"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn solve_inconsistent_system_exits_1() {
    let o = run_stdin(&["solve", "--format", "machine"], "x + y = 1\nx + y = 2\n");
    assert_eq!(code(&o), 1);
    let doc: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["status"], "no_solution");
}

// ---- verify ----

#[test]
fn verify_accepts_example_five() {
    let f = Files::new();
    let sys = f.put("ex5.txt", EXAMPLE5);
    let sol = f.put(
        "ex5.json",
        &machine_solution(
            &["x1", "x2", "x3", "x4", "x5"],
            &[&[-6, -4, -2], &[-2, 1, 0], &[3, 2, 0], &[0, 0, 3], &[-2, 0, 0]],
            &[2, 1, -1, 0, 1],
        ),
    );
    let o = run(&["verify", "--system", s(&sys), "--solution", s(&sol)]);
    assert_eq!(code(&o), 0, "{}{}", stdout(&o), stderr(&o));
    assert!(stdout(&o).contains("generality on box 10: pass"));
}

#[test]
fn verify_rejects_the_candidate_with_a_counterexample() {
    let f = Files::new();
    let sys = f.put("eq8.txt", EQ8);
    let sol = f.put(
        "cand.json",
        &machine_solution(&["x1", "x2", "x3"], &[&[-1, 1], &[5, 3], &[7, -1]], &[0, 0, 0]),
    );
    let o = run(&["verify", "--system", s(&sys), "--solution", s(&sol), "--box", "10"]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("substitution: pass"), "{out}");
    let line = out.lines().find(|l| l.starts_with("generality")).unwrap();
    assert!(line.contains("FAIL"), "{line}");
    let x = parse_tuple(line.split("counterexample").nth(1).unwrap().trim_end_matches(')'));
    assert_eq!(-13 * x[0] + 3 * x[1] - 4 * x[2], 0);
    // not of the form a(-1,5,7) + b(1,3,-1)
    let num = x[1] - 3 * x[0];
    let member = num % 8 == 0 && {
        let a = num / 8;
        let b = x[0] + a;
        7 * a - b == x[2]
    };
    assert!(!member, "{x:?}");
}

#[test]
fn verify_round_trips_solver_output() {
    let f = Files::new();
    let sys = f.put("ex3.txt", EXAMPLE3);
    let o = run(&["solve", "--format", "machine", "--input", s(&sys)]);
    let sol = f.put("ex3.json", &stdout(&o));
    let o = run(&["verify", "--system", s(&sys), "--solution", s(&sol), "--box", "3"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn verify_reorders_variables_by_name() {
    let f = Files::new();
    let sys = f.put("sys.txt", "x - y = 0\n");
    let sol = f.put("sol.json", &machine_solution(&["y", "x"], &[&[1], &[1]], &[0, 0]));
    assert_eq!(code(&run(&["verify", "--system", s(&sys), "--solution", s(&sol)])), 0);
}

#[test]
fn verify_reports_a_non_solution() {
    let f = Files::new();
    let sys = f.put("sys.txt", "x + y = 1\n");
    let sol = f.put("sol.json", &machine_solution(&["x", "y"], &[&[1], &[1]], &[1, 0]));
    let o = run(&["verify", "--system", s(&sys), "--solution", s(&sol)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("substitution: FAIL (A·c1 = (2))"), "{}", stdout(&o));
}

#[test]
fn verify_checks_no_solution_witnesses() {
    let f = Files::new();
    let sys = f.put("sys.txt", "2x + 4y = 7\n");
    let o = run(&["solve", "--format", "machine", "--input", s(&sys)]);
    let doc = f.put("ns.json", &stdout(&o));
    assert_eq!(code(&run(&["verify", "--system", s(&sys), "--solution", s(&doc)])), 0);
    let other = f.put("other.txt", "2x + 4y = 8\n");
    assert_eq!(code(&run(&["verify", "--system", s(&other), "--solution", s(&doc)])), 1);
}

#[test]
fn verify_dimension_mismatch_exits_2() {
    let f = Files::new();
    let sys = f.put("eq8.txt", EQ8);
    let sol = f.put("sol.json", &machine_solution(&["x", "y"], &[&[1], &[1]], &[0, 0]));
    let o = run(&["verify", "--system", s(&sys), "--solution", s(&sol)]);
    assert_eq!(code(&o), 2);
    assert!(stdout(&o).is_empty());

    let renamed = f.put("r.json", &machine_solution(&["a", "b", "c"], &[&[1], &[1], &[1]], &[0, 0, 0]));
    assert_eq!(code(&run(&["verify", "--system", s(&sys), "--solution", s(&renamed)])), 2);

    let junk = f.put("junk.json", "{not json");
    assert_eq!(code(&run(&["verify", "--system", s(&sys), "--solution", s(&junk)])), 2);
    assert_eq!(code(&run(&["verify", "--system", s(&sys)])), 2);
}

// ---- bench ----

#[test]
fn bench_on_example_one_reports_two_rounds() {
    let f = Files::new();
    let input = f.put("eqs.txt", EXAMPLE1);
    let o = run(&["bench", "--input", s(&input)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some("instance_id,n,e1_iterations,e2_iterations,e1_peak_coeff,e2_peak_coeff")
    );
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[0], "0");
    assert_eq!(row[1], "3");
    assert_eq!(row[3], "2");
    assert!(stderr(&o).contains("fraction"));
}

#[test]
fn bench_with_zero_trials_is_header_only() {
    let f = Files::new();
    let out = f.path("empty.csv");
    let o = run(&["bench", "--trials", "0", "--output", s(&out)]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        std::fs::read_to_string(&out).unwrap(),
        "instance_id,n,e1_iterations,e2_iterations,e1_peak_coeff,e2_peak_coeff\n"
    );
    assert!(stdout(&o).contains("fraction"));
}

#[test]
fn bench_is_deterministic_for_a_seed() {
    let f = Files::new();
    let (a, b) = (f.path("a.csv"), f.path("b.csv"));
    let args = ["bench", "--trials", "60", "--seed", "42", "--max-n", "5", "--max-coeff", "50"];
    for p in [&a, &b] {
        let mut v = args.to_vec();
        v.extend(["--output", s(p)]);
        assert_eq!(code(&run(&v)), 0);
    }
    let (ca, cb) = (std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(ca, cb);
    assert_eq!(String::from_utf8(ca).unwrap().lines().count(), 61);

    let o = run(&["bench", "--trials", "60", "--seed", "43", "--max-n", "5", "--max-coeff", "50"]);
    assert_ne!(o.stdout, cb);
}

#[test]
fn bench_usage_errors_exit_2() {
    assert_eq!(code(&run(&["bench", "--max-n", "0"])), 2);
    assert_eq!(code(&run(&["bench", "--max-coeff", "0"])), 2);
    assert_eq!(code(&run(&["bench", "--trials", "-1"])), 2);
    assert_eq!(code(&run(&["bench", "--input", "/nonexistent"])), 2);
    assert_eq!(code(&run(&["bench", "--input", "x.txt", "--seed", "3"])), 2);
}

// ---- enumerate ----

#[test]
fn enumerate_small_boxes() {
    let f = Files::new();
    let sys = f.put("sum.txt", "x + y = 1\n");
    let o = run(&["enumerate", "--system", s(&sys), "--box", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "(0, 1)\n(1, 0)\n");

    let five = f.put("five.txt", "x = 5\n");
    let o = run(&["enumerate", "--system", s(&five), "--box", "2"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
}

#[test]
fn enumerate_prints_only_solutions() {
    let f = Files::new();
    let sys = f.put("eq8.txt", EQ8);
    let o = run(&["enumerate", "--system", s(&sys), "--box", "2"]);
    assert_eq!(code(&o), 0);
    let pts: Vec<Vec<i64>> = stdout(&o).lines().map(parse_tuple).collect();
    assert!(!pts.is_empty());
    for x in &pts {
        assert_eq!(-13 * x[0] + 3 * x[1] - 4 * x[2], 0, "{x:?}");
        assert!(x.iter().all(|v| v.abs() <= 2));
    }
    let mut sorted = pts.clone();
    sorted.sort();
    assert_eq!(sorted, pts);
}

#[test]
fn enumerate_budget_exceeded_exits_1() {
    let f = Files::new();
    let sys = f.put("eq8.txt", EQ8);
    let o = dioph()
        .args(["enumerate", "--system", s(&sys), "--box", "3"])
        .env("DIOPH_ENUM_BUDGET", "100")
        .output()
        .unwrap();
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("budget"));
    assert_eq!(code(&run(&["enumerate", "--box", "1"])), 2);
}
