use std::io::Write;
use std::process::{Command, Output, Stdio};

fn zopoly(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_zopoly"))
        .args(args)
        .env_remove("ZOPOLY_THREADS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    let mut pipe = child.stdin.take().expect("stdin");
    if let Some(text) = stdin {
        pipe.write_all(text.as_bytes()).expect("write stdin");
    }
    drop(pipe);
    child.wait_with_output().expect("binary finishes")
}

fn ok(args: &[&str], stdin: Option<&str>) -> String {
    let out = zopoly(args, stdin);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf-8 output")
}

fn value<'a>(report: &'a str, key: &str) -> &'a str {
    report
        .lines()
        .find_map(|l| l.strip_prefix(key).and_then(|r| r.strip_prefix('=')))
        .unwrap_or_else(|| panic!("no {key} in\n{report}"))
}

#[test]
fn cut4_pipeline() {
    let gen = ok(&["gen", "cut", "4"], None);
    let hulled = ok(&["hull", "--oracle", "both"], Some(&gen));
    let report = ok(&["analyze"], Some(&hulled));
    assert_eq!(value(&report, "facets"), "16");
    assert_eq!(value(&report, "dim"), "6");
    assert_eq!(value(&report, "centered"), "true");
    assert_eq!(value(&report, "diameter"), "1");
    // the same report without the precomputed facets
    assert_eq!(ok(&["analyze"], Some(&gen)), report);
}

#[test]
fn singular_probability_estimate() {
    let args = ["rand", "pd", "3", "--trials", "100000", "--seed", "1"];
    let report = ok(&args, None);
    let est: f64 = value(&report, "estimate").parse().unwrap();
    let sigma = (0.66015625f64 * (1.0 - 0.66015625) / 100000.0).sqrt();
    assert!((est - 0.66015625).abs() <= 4.0 * sigma, "{est}");
    for threads in ["1", "2", "3"] {
        let mut a = vec!["--threads", threads];
        a.extend_from_slice(&args);
        assert_eq!(ok(&a, None), report);
    }
}

#[test]
fn classify_and_tiers() {
    let report = ok(&["classify", "2"], None);
    assert_eq!(value(&report, "classes"), "2");
    assert_eq!(report.lines().filter(|l| l.starts_with("key=")).count(), 2);
    assert_eq!(zopoly(&["classify", "4"], None).status.code(), Some(2));
    assert_eq!(zopoly(&["rand", "rho", "6"], None).status.code(), Some(2));
    assert_eq!(zopoly(&["rand", "md", "7", "--long"], None).status.code(), Some(2));
}

#[test]
fn usage_errors() {
    assert_eq!(zopoly(&["gen", "bogus"], None).status.code(), Some(1));
    assert_eq!(zopoly(&[], None).status.code(), Some(1));
    assert_eq!(zopoly(&["analyze"], Some("GRAPH\n1 0\n")).status.code(), Some(1));
    assert_eq!(zopoly(&["gen", "fd", "3", "12"], None).status.code(), Some(1));
    assert_eq!(zopoly(&["alonvu", "2"], None).status.code(), Some(1));
    assert_eq!(zopoly(&["--help"], None).status.code(), Some(0));
    // a row that is not a facet
    let bad = "VERTICES\n1 0 0\n1 1 0\n1 0 1\n\nFACETS\n1 -1 -1\n2 -1 -1\n";
    assert_eq!(zopoly(&["analyze"], Some(bad)).status.code(), Some(1));
}

#[test]
fn files_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = |name: &str| dir.path().join(name).to_str().unwrap().to_string();
    let square = path("square.poly");
    let segment = path("segment.poly");
    ok(&["gen", "cube", "2", "-o", &square], None);
    ok(&["gen", "cube", "1", "-o", &segment], None);
    let sum = ok(&["gen", "sum", &square, &segment], None);
    assert_eq!(sum.lines().filter(|l| l.starts_with("1 ")).count(), 6);

    let simplex = path("alonvu.poly");
    let report = ok(&["alonvu", "3", "-o", &simplex], None);
    assert_eq!(value(&report, "det_a"), "128");
    assert_eq!(value(&report, "x_i0"), "4");
    assert_eq!(value(&report, "hull_check"), "agree");

    let hulled = path("cut4.poly");
    let gen = ok(&["gen", "cut", "4"], None);
    ok(&["hull", "-o", &hulled], Some(&gen));

    for file in [&square, &segment, &simplex, &hulled] {
        let text = std::fs::read_to_string(file).unwrap();
        assert_eq!(ok(&["convert", file], None), text, "{file}");
        let again = path("again.poly");
        ok(&["convert", file, "-o", &again], None);
        assert_eq!(std::fs::read_to_string(&again).unwrap(), text);
        assert_eq!(ok(&["analyze", file], None), ok(&["analyze", &again], None));
    }
}

#[test]
fn metric_polytope_file() {
    let text = ok(&["gen", "met", "3"], None);
    assert!(text.starts_with("FACETS\n"));
    assert!(text.ends_with("DIMENSION\n3\n"));
    assert_eq!(ok(&["convert"], Some(&text)), text);
}

#[test]
fn table_format() {
    let t = ok(&["--format", "table", "rand", "md", "2"], None);
    assert!(t.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["singular", "10"]));
}

#[test]
fn thread_count_from_environment() {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_zopoly"));
    let out = cmd
        .args(["rand", "polytope", "4", "6", "--trials", "3000", "--seed", "9"])
        .env("ZOPOLY_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success());
    let plain = ok(&["rand", "polytope", "4", "6", "--trials", "3000", "--seed", "9"], None);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), plain);
}
