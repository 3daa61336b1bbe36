//! End-to-end tests of the `subword` binary: output formats and exit codes.

use std::ffi::OsStr;
use std::io::Write as _;
use std::process::Output;

const Q: &str = "s2 s3 s1 s3 s2 s1 s2 s3 s1";
const RHO: &str = "s2 s3 s2 s1";

fn run<I, S>(args: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: AsRef<OsStr>,
{
    std::process::Command::new(env!("CARGO_BIN_EXE_subword"))
        .args(args)
        .output()
        .expect("spawn subword")
}

fn example(cmd: &str, extra: &[&str]) -> Vec<String> {
    let mut v: Vec<String> = [cmd, "--type", "A3", "--word", Q, "--rho", RHO]
        .iter()
        .map(|s| s.to_string())
        .collect();
    v.extend(extra.iter().map(|s| s.to_string()));
    v
}

fn stdout_of<I, S>(args: I) -> String
where
    I: IntoIterator<Item = S>,
    S: AsRef<OsStr>,
{
    let out = run(args);
    assert!(
        out.status.success(),
        "expected success, got {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code_of<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: AsRef<OsStr>,
{
    let out = run(args);
    (
        out.status.code().unwrap(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn greedy_facets_of_the_example() {
    assert_eq!(stdout_of(example("greedy", &["--sign=+"])), "1 2 3 5 6\n");
    assert_eq!(stdout_of(example("greedy", &["--sign=-"])), "3 4 7 8 9\n");
    // Spelled-out aliases for shells where = is awkward.
    assert_eq!(
        stdout_of(example("greedy", &["--sign", "pos"])),
        "1 2 3 5 6\n"
    );
    assert_eq!(
        stdout_of(example("greedy", &["--sign", "neg"])),
        "3 4 7 8 9\n"
    );
}

#[test]
fn count_and_permutation_target_notation() {
    assert_eq!(stdout_of(example("count", &[])), "12\n");
    let args = ["count", "--type", "A3", "--word", Q, "--rho", "[4,1,3,2]"];
    assert_eq!(stdout_of(args), "12\n");
}

#[test]
fn enumerate_streams_and_sorts() {
    let sorted = stdout_of(example("enumerate", &["--sort"]));
    let lines: Vec<&str> = sorted.lines().collect();
    assert_eq!(lines.len(), 12);
    assert_eq!(lines[0], "1 2 3 5 6");
    assert_eq!(lines[11], "3 4 7 8 9");

    // Every algorithm yields the same sorted listing.
    for algo in ["inductive", "greedy-pos", "greedy-neg", "bfs"] {
        assert_eq!(
            stdout_of(example("enumerate", &["--sort", "--algo", algo])),
            sorted,
            "algorithm {algo} disagrees"
        );
    }

    // Unsorted greedy-neg streams in tree preorder: the root comes first.
    let streamed = stdout_of(example("enumerate", &[]));
    assert_eq!(streamed.lines().next(), Some("3 4 7 8 9"));
    let mut resorted: Vec<&str> = streamed.lines().collect();
    resorted.sort();
    assert_eq!(resorted, lines);
}

#[test]
fn enumerate_is_deterministic() {
    let a = stdout_of(example("enumerate", &[]));
    let b = stdout_of(example("enumerate", &[]));
    assert_eq!(a, b);
    let dot_a = stdout_of(example("graph", &["--dot"]));
    let dot_b = stdout_of(example("graph", &["--dot"]));
    assert_eq!(dot_a, dot_b);
}

#[test]
fn empty_complexes_are_quiet_successes_except_for_greedy() {
    let base = ["--type", "A2", "--word", "s1 s1", "--rho", "s2"];
    let with = |cmd: &str| {
        let mut v = vec![cmd.to_string()];
        v.extend(base.iter().map(|s| s.to_string()));
        v
    };
    assert_eq!(stdout_of(with("enumerate")), "");
    assert_eq!(stdout_of(with("count")), "0\n");
    assert_eq!(stdout_of(with("check")), "facets: 0\nverdict: empty\n");

    let mut greedy = with("greedy");
    greedy.push("--sign=-".into());
    let (code, stderr) = code_of(greedy);
    assert_eq!(code, 2);
    assert!(stderr.contains("empty complex"));

    let mut tree = with("tree");
    tree.push("--sign=+".into());
    let (code, stderr) = code_of(tree);
    assert_eq!(code, 2);
    assert!(stderr.contains("empty complex"));
}

#[test]
fn identity_target_keeps_every_position() {
    let args = [
        "enumerate",
        "--type",
        "A2",
        "--word",
        "s1 s2 s1",
        "--rho",
        "s1 s1",
    ];
    assert_eq!(stdout_of(args), "1 2 3\n");
}

#[test]
fn w0_target_and_sphere_check() {
    let base = ["--type", "A2", "--word", "s1 s2 s1 s2 s1", "--rho", "w0"];
    let with = |cmd: &str| {
        let mut v = vec![cmd.to_string()];
        v.extend(base.iter().map(|s| s.to_string()));
        v
    };
    assert_eq!(stdout_of(with("count")), "5\n");
    assert_eq!(
        stdout_of(with("check")),
        "facets: 5\n\
         target is the Demazure product of the word: yes\n\
         reduced euler characteristic: -1\n\
         verdict: sphere\n"
    );
}

#[test]
fn check_reports_balls() {
    assert_eq!(
        stdout_of(example("check", &[])),
        "facets: 12\n\
         target is the Demazure product of the word: no\n\
         reduced euler characteristic: 0\n\
         verdict: ball\n"
    );
}

#[test]
fn matrix_files_replace_type_labels() {
    let mut file = tempfile::NamedTempFile::new().unwrap();
    writeln!(file, "3\n1 3 2\n3 1 3\n2 3 1").unwrap();
    let path = file.path().to_str().unwrap();
    let args = [
        "greedy", "--matrix", path, "--word", Q, "--rho", RHO, "--sign=+",
    ];
    assert_eq!(stdout_of(args), "1 2 3 5 6\n");

    let mut bad = tempfile::NamedTempFile::new().unwrap();
    writeln!(bad, "2\n1 3\n4 1").unwrap();
    let bad_path = bad.path().to_str().unwrap();
    let args = ["count", "--matrix", bad_path, "--word", "s1", "--rho", "s1"];
    let (code, stderr) = code_of(args);
    assert_eq!(code, 2);
    assert!(stderr.contains("symmetric"), "stderr: {stderr}");
}

#[test]
fn tree_and_graph_listings() {
    let tree = stdout_of(example("tree", &["--sign=-"]));
    assert_eq!(tree.lines().next(), Some("12 facets, 11 arcs"));
    assert!(tree.lines().any(|l| l == "0: 3 4 7 8 9"));
    assert_eq!(tree.lines().filter(|l| l.contains(" -> ")).count(), 11);

    let dot = stdout_of(example("tree", &["--sign=-", "--dot"]));
    assert!(dot.starts_with("digraph greedy_tree {"));
    assert_eq!(dot.lines().filter(|l| l.contains(" -> ")).count(), 11);

    let graph = stdout_of(example("graph", &[]));
    assert_eq!(graph.lines().next(), Some("12 facets, 20 edges"));
    assert_eq!(graph.lines().filter(|l| l.contains(" -> ")).count(), 20);

    let dot = stdout_of(example("graph", &["--dot"]));
    assert!(dot.starts_with("digraph flip_graph {"));
    assert!(dot.contains("n0 [label=\"12356\"]"));
}

#[test]
fn render_matches_the_golden_diagram() {
    let ascii = stdout_of(example("render", &["--facet", "1 3 4 7 9"]));
    assert_eq!(
        ascii,
        "4 -X-v---X- 2\n\
         3 vX-^X-vX- 3\n\
         2 ^-v-XX^-v 1\n\
         1 --^--X--^ 4\n  123456789\n"
    );

    let svg = stdout_of(example("render", &["--format", "svg"]));
    assert!(svg.starts_with("<svg "));
    assert!(svg.trim_end().ends_with("</svg>"));

    let (code, stderr) = code_of(example("render", &["--facet", "1 2 3"]));
    assert_eq!(code, 2);
    assert!(stderr.contains("not a facet") || stderr.contains("do not form a facet"));

    let args = ["render", "--type", "B2", "--word", "s1 s2", "--rho", "s1"];
    let (code, stderr) = code_of(args);
    assert_eq!(code, 2);
    assert!(stderr.contains("type A"));
}

#[test]
fn bench_emits_cross_checked_csv() {
    let out = stdout_of([
        "bench",
        "--type",
        "A",
        "--k-range",
        "1",
        "--n-range",
        "2..3",
        "--algos",
        "greedy-neg,inductive",
    ]);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "type,k,n,m,facets,total_ms,us_per_facet,algo");
    assert_eq!(lines.len(), 5);
    for (i, prefix) in [
        (1, "A2,1,2,5,5,"),
        (2, "A2,1,2,5,5,"),
        (3, "A3,1,3,9,14,"),
        (4, "A3,1,3,9,14,"),
    ] {
        assert!(lines[i].starts_with(prefix), "row {i}: {}", lines[i]);
    }
    assert!(lines[1].ends_with(",greedy-neg"));
    assert!(lines[2].ends_with(",inductive"));
}

#[test]
fn user_errors_exit_with_two() {
    // Malformed bench range.
    let (code, stderr) = code_of([
        "bench",
        "--type",
        "A",
        "--k-range",
        "x..3",
        "--n-range",
        "2",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("malformed --k-range"));

    // Unknown type label.
    let (code, _) = code_of(["count", "--type", "Z4", "--word", "s1", "--rho", "s1"]);
    assert_eq!(code, 2);

    // Letter out of range for the rank.
    let (code, _) = code_of(["count", "--type", "A3", "--word", "s5", "--rho", "s1"]);
    assert_eq!(code, 2);

    // Neither --type nor --matrix.
    let (code, stderr) = code_of(["count", "--word", "s1", "--rho", "s1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--type") && stderr.contains("--matrix"));

    // Permutation targets outside type A, and of the wrong size.
    let args = ["count", "--type", "B2", "--word", "s1 s2", "--rho", "[2,1]"];
    let (code, stderr) = code_of(args);
    assert_eq!(code, 2);
    assert!(stderr.contains("type A"));
    let args = ["count", "--type", "A3", "--word", Q, "--rho", "[4,1,3]"];
    let (code, _) = code_of(args);
    assert_eq!(code, 2);

    // Unknown --algo value is a clap usage error.
    let (code, _) = code_of(example("enumerate", &["--algo", "quantum"]));
    assert_eq!(code, 2);
}
