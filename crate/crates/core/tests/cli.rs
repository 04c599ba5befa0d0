use std::path::PathBuf;
use std::process::Command;

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn hyperq(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hyperq"))
        .args(args)
        .env_remove("HYPERQ_LIMIT")
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn result_line(stdout: &str) -> &str {
    stdout
        .lines()
        .find_map(|l| l.trim_start_matches("# ").strip_prefix("RESULT: "))
        .expect("RESULT line")
}

#[test]
fn check_total2_lists_all_flags() {
    let (code, out, _) = hyperq(&["check", &fixture("total2.hqg")]);
    assert_eq!(code, 0);
    assert_eq!(
        result_line(&out),
        "hypergroupoid=true hyperquasigroup=true hypergroup=true regular=true"
    );
}

#[test]
fn check_reports_reproducibility_failure() {
    let dir = std::env::temp_dir().join(format!("hyperq-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("stuck.hqg");
    std::fs::write(&path, "hqg 2\n0 0 : 0\n0 1 : 0\n1 0 : 0\n1 1 : 0").unwrap();
    let (code, out, _) = hyperq(&["check", path.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("x=0"));
    assert!(result_line(&out).contains("hyperquasigroup=false"));
}

#[test]
fn ifsh_check_names_the_witness() {
    let (code, out, _) = hyperq(&["ifsh-check", &fixture("z2.hqg"), &fixture("bad.ifs")]);
    assert_eq!(code, 1);
    assert!(out.contains("condition 1 at x=1 y=1"));
    assert_eq!(result_line(&out), "ifsh=false condition=1 witness=1,1 method=direct");
}

#[test]
fn methods_agree_at_the_command_line() {
    let cases = [
        ("z2.hqg", "bad.ifs"),
        ("z2.hqg", "good.ifs"),
        ("z2.hqg", "const.ifs"),
        ("total2.hqg", "bad.ifs"),
        ("z4.hqg", "z4_half.ifs"),
        ("z4.hqg", "z4_even.ifs"),
        ("block4.hqg", "block4_skew.ifs"),
    ];
    for (h, a) in cases {
        let codes: Vec<i32> = ["direct", "cuts", "both"]
            .iter()
            .map(|m| hyperq(&["ifsh-check", &fixture(h), &fixture(a), "--method", m]).0)
            .collect();
        assert!(codes.iter().all(|&c| c == codes[0] && c != 2), "{h} {a}: {codes:?}");
    }
}

#[test]
fn shared_witness_only_with_direct() {
    let (code, _, _) = hyperq(&[
        "ifsh-check",
        &fixture("z2.hqg"),
        &fixture("good.ifs"),
        "--shared-witness",
    ]);
    assert_eq!(code, 0);
    let (code, _, err) = hyperq(&[
        "ifsh-check",
        &fixture("z2.hqg"),
        &fixture("good.ifs"),
        "--method",
        "cuts",
        "--shared-witness",
    ]);
    assert_eq!(code, 2);
    assert!(err.contains("direct"));
}

#[test]
fn input_errors_exit_two_with_position() {
    let (code, _, err) = hyperq(&["ifsh-check", &fixture("z2.hqg"), &fixture("z4_half.ifs")]);
    assert_eq!(code, 2);
    assert!(err.contains("4 elements"));
    let (code, _, err) = hyperq(&["check", &fixture("bad.ifs")]);
    assert_eq!(code, 2);
    assert!(err.contains(":1:1:"), "{err}");
    let (code, _, _) = hyperq(&["equipotence", &fixture("z4.hqg"), "--alpha", "0"]);
    assert_eq!(code, 2);
    let (code, _, _) = hyperq(&["equipotence", &fixture("z4.hqg"), "--alpha", "3/2"]);
    assert_eq!(code, 2);
}

#[test]
fn cuts_marks_empty_cuts_vacuous() {
    let (code, out, _) = hyperq(&["cuts", &fixture("z2.hqg"), &fixture("bad.ifs")]);
    assert_eq!(code, 1);
    assert!(out.contains("vacuous"));
    assert_eq!(result_line(&out), "thresholds=5 failing_cuts=1");
}

#[test]
fn chain_outputs_a_parseable_ifsh() {
    let (code, out, _) = hyperq(&[
        "chain",
        &fixture("z4.hqg"),
        "--level",
        "3/5:0",
        "--level",
        "1/5:0,1,2,3",
    ]);
    assert_eq!(code, 0);
    let (mu, lambda) = hyperq::io::parse_ifs(&out).unwrap();
    let a = hyperq::ifs_validate(mu, lambda).unwrap();
    assert!(hyperq::check_ifsh(&hyperq::fixtures::zgroup(4), &a).unwrap().holds);

    let (code, _, _) = hyperq(&["chain", &fixture("z4.hqg"), "--level", "1:0", "--level", "1/5:0,1,2,3"]);
    assert_eq!(code, 1, "constraint violated");
    let (code, _, _) = hyperq(&[
        "chain",
        &fixture("z4.hqg"),
        "--level",
        "1:0,1",
        "--level",
        "1/5:0,1,2,3",
    ]);
    assert_eq!(code, 2, "level set is not a sub-hyperquasigroup");
    let (code, _, _) = hyperq(&["chain", &fixture("z4.hqg"), "--level", "1/2:0", "--level", "1/2:0,2"]);
    assert_eq!(code, 2, "repeated threshold");
}

#[test]
fn classify_and_equipotence() {
    let (code, out, _) = hyperq(&[
        "classify",
        &fixture("z4.hqg"),
        "--alpha",
        "1/2",
        "--rel",
        "U",
        &fixture("z4_half.ifs"),
        &fixture("z4_even.ifs"),
        &fixture("z4_zero.ifs"),
        &fixture("z4_all.ifs"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(result_line(&out), "rel=U alpha=1/2 classes=3");

    for h in [
        "total2.hqg",
        "total3.hqg",
        "z2.hqg",
        "z3.hqg",
        "z4.hqg",
        "pair3.hqg",
        "block4.hqg",
    ] {
        let (code, out, _) = hyperq(&["equipotence", &fixture(h), "--alpha", "1/4"]);
        assert_eq!(code, 0, "{h}");
        assert!(result_line(&out).ends_with("equipotent=true"));
    }
}

#[test]
fn limit_flag_and_environment() {
    let (code, _, err) = hyperq(&["subs", &fixture("z4.hqg"), "--limit", "3"]);
    assert_eq!(code, 2);
    assert!(err.contains("limit"));
    let out = Command::new(env!("CARGO_BIN_EXE_hyperq"))
        .args(["subs", &fixture("z4.hqg")])
        .env("HYPERQ_LIMIT", "3")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let (code, out, _) = hyperq(&["subs", &fixture("z4.hqg")]);
    assert_eq!(code, 0);
    assert_eq!(result_line(&out), "count=3");
}

#[test]
fn fundamental_of_block4() {
    let (code, out, _) = hyperq(&["fundamental", &fixture("block4.hqg")]);
    assert_eq!(code, 0);
    assert!(out.contains("class 0: {0,1}\nclass 1: {2,3}"));
    assert!(out.contains("qsg 2\nmult\n0 1\n1 0\nldiv\n0 1\n1 0\nrdiv\n0 1\n1 0"));
    assert_eq!(result_line(&out), "quotient=true classes=2 regular=true");
}

#[test]
fn pushforward_notes_the_lambda_rule() {
    let (code, out, _) = hyperq(&["pushforward", &fixture("block4.hqg"), &fixture("block4_skew.ifs")]);
    assert_eq!(code, 0);
    assert!(out.contains("classwise min"));
    assert!(out.contains("ifs 2\n0 : 4/5 0\n1 : 1/5 1/2"));
}

#[test]
fn random_is_byte_identical() {
    let a = hyperq(&["random", "--order", "3", "--seed", "7"]);
    let b = hyperq(&["random", "--order", "3", "--seed", "7"]);
    assert_eq!(a, b);
    assert_eq!(a.0, 0);
    assert!(hyperq::io::parse_hqg(&a.1).unwrap().is_hyperquasigroup());
    let c = hyperq(&["random", "--order", "3", "--seed", "8"]);
    assert_ne!(a.1, c.1);
    let (code, out, _) = hyperq(&["random", "--order", "4", "--seed", "7", "--regular"]);
    assert_eq!(code, 0);
    assert!(hyperq::io::parse_hqg(&out).unwrap().is_regular());
}
