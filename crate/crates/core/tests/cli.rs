use surface_braid::cli::{run, EXIT_FAILED, EXIT_OK, EXIT_USAGE};

const EQ1: &str = "(a1 b1 a1)^4 (a2 b2 (a1 b1 a1)^-1 w1 a1 b1 a1^2 b1)^-3";

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("surface-braid").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn act_braiding_on_y1() {
    let (code, out, _) = cli(&["act", "--genus", "5", "--word", "y1", "beta(2,3)"]);
    assert_eq!(code, EXIT_OK);
    let r3 = "y1 x1 y1^-1 x1^-1 y2 x2 y2^-1 x2^-1 y3 x3 y3^-1 x3^-1";
    let r3_inv = "x3 y3 x3^-1 y3^-1 x2 y2 x2^-1 y2^-1 x1 y1 x1^-1 y1^-1";
    assert_eq!(out.trim(), format!("{r3} y4 {r3_inv}"));
}

#[test]
fn act_fixes_unlisted_generators() {
    assert_eq!(
        cli(&["act", "--genus", "2", "--word", "x2", "a1"]).1.trim(),
        "x2"
    );
    assert_eq!(
        cli(&["act", "--genus", "1", "--word", "x1", "1"]).1.trim(),
        "x1"
    );
    assert_eq!(
        cli(&["act", "--genus", "2", "--word", "1", "beta(1)"])
            .1
            .trim(),
        "1"
    );
}

#[test]
fn eq_examples() {
    let (code, out, _) = cli(&["eq", "--genus", "2", EQ1, "hR' hA"]);
    assert_eq!((code, out.trim()), (EXIT_OK, "equal"));
    let (code, _, _) = cli(&[
        "eq",
        "--genus",
        "3",
        "beta(1) beta(2) beta(1)",
        "beta(2) beta(1) beta(2)",
    ]);
    assert_eq!(code, EXIT_OK);
    let (code, out, _) = cli(&["eq", "--genus", "2", "beta(1)", "t(R1)"]);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.starts_with("not equal\nfirst difference: x1: "));
    assert!(out.contains("differing generators: x1, y1, x2, y2"));
}

#[test]
fn eq_is_symmetric_and_reflexive() {
    for (a, b) in [("a1 b1", "b1 a1"), ("hR", "hR'^-1"), ("beta(1)", "phi(s1)")] {
        let ab = cli(&["eq", "--genus", "2", a, b]).0;
        let ba = cli(&["eq", "--genus", "2", b, a]).0;
        assert_eq!(ab, ba, "{a} vs {b}");
        assert_eq!(cli(&["eq", "--genus", "2", a, a]).0, EXIT_OK);
    }
}

#[test]
fn structured_eq() {
    let (code, out, _) = cli(&["eq", "--genus", "2", "--format", "structured", "a1", "b1"]);
    assert_eq!(code, EXIT_FAILED);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["equal"], false);
    assert_eq!(value["differences"][0]["generator"], "x1");
}

#[test]
fn eval_prints_fixture_table() {
    let (code, out, _) = cli(&["eval", "--genus", "2", EQ1]);
    assert_eq!(code, EXIT_OK);
    let table: surface_braid::Endo = out.parse().unwrap();
    assert_eq!(&table, surface_braid::beta_local(1, 2).unwrap().endo());
    let (code, out, _) = cli(&[
        "eval",
        "--genus",
        "3",
        "--format",
        "structured",
        "artin(s1)",
    ]);
    assert_eq!(code, EXIT_OK);
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["images"]["x2"], "x1");
}

#[test]
fn errors_exit_with_usage_code() {
    let (code, _, err) = cli(&["eval", "--genus", "2", "q7"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("unknown atom `q7`"));
    assert_eq!(cli(&["eval", "--genus", "2", "(a1"]).0, EXIT_USAGE);
    assert_eq!(cli(&["eval", "--genus", "2", "w2"]).0, EXIT_USAGE);
    assert_eq!(cli(&["eval", "a1"]).0, EXIT_USAGE, "genus is required");
    assert_eq!(
        cli(&["act", "--genus", "2", "--word", "x3", "a1"]).0,
        EXIT_USAGE
    );
    assert_eq!(cli(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
    assert_eq!(cli(&["frobnicate"]).0, EXIT_USAGE);
    assert_eq!(cli(&["--help"]).0, EXIT_OK);
}

#[test]
fn verify_default_and_subsets() {
    let (code, out, _) = cli(&["verify"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("0 failed\n"));
    let (code, small, _) = cli(&["verify", "--max-genus", "2"]);
    assert_eq!(code, EXIT_OK);
    assert!(small.lines().count() < out.lines().count());
    let (code, only, _) = cli(&[
        "verify", "--suite", "category", "--suite", "words", "--max-rs", "4",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(only
        .lines()
        .any(|l| l.starts_with("PASS hexagon_b(r=1,s=1,t=2)")));
    assert!(!only.contains("beta_three_way"));
    assert!(!only.contains("hexagon_b(r=1,s=1,t=3)"));
}

#[test]
fn verify_structured_is_deterministic_json_lines() {
    let args = [
        "verify",
        "--format",
        "structured",
        "--seed",
        "7",
        "--max-genus",
        "3",
    ];
    let (code, first, _) = cli(&args);
    assert_eq!(code, EXIT_OK);
    assert_eq!(first, cli(&args).1);
    let records: Vec<serde_json::Value> = first
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records[0]["record"], "header");
    assert_eq!(
        records[0]["total"].as_u64().unwrap() as usize,
        records.len() - 1
    );
    for check in &records[1..] {
        assert_eq!(check["record"], "check");
        assert!(check["citation"].as_str().is_some_and(|c| !c.is_empty()));
        assert_eq!(check["witness"].is_null(), check["passed"] == true);
    }
}

#[test]
fn fault_injection_gives_failure_exit() {
    let (code, out, _) = cli(&[
        "verify",
        "--max-genus",
        "2",
        "--inject-fault",
        "corrupt-beta1",
    ]);
    assert_eq!(code, EXIT_FAILED);
    assert!(out.contains("FAIL beta11_dehn_word_matches_table(g=2) -- y2: "));
}
