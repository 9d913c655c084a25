use std::process::{Command, Output};

fn ffpow(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffpow"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

#[test]
fn machine_is_power_record() {
    let out = ffpow(&[
        "--machine", "is-power", "--field", "F(13^3; t^3+2*t+11)", "--element", "5+t+8*t^2", "--r", "2",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "field=F(13^3; 11+2*t+t^3)\telement=5+t+8*t^2\tr=2\td=2\teuler_value=1\t\
         is_power=true\tnum_roots=2\tcanonical_root=7+t+2*t^2\n"
    );
    assert!(out.stderr.is_empty());
}

#[test]
fn oracle_agreement_exits_zero() {
    let out = ffpow(&[
        "--machine", "is-power", "--field", "F(5^2)", "--element", "[2,0]", "--r", "3", "--oracle",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).trim_end().ends_with("oracle=AGREE"));
}

#[test]
fn identity_remainder_over_f25() {
    let out = ffpow(&[
        "--machine", "verify-identity", "--field", "F(5^2)", "--element", "[2,0]", "--r", "3",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("verified=true"));
}

#[test]
fn output_is_deterministic() {
    let args = ["--machine", "table", "--field", "F(3^3)", "--r", "2", "--limit", "20"];
    assert_eq!(ffpow(&args).stdout, ffpow(&args).stdout);
}

#[test]
fn parse_errors_exit_one_with_single_line() {
    let out = ffpow(&["is-power", "--field", "F(5)", "--element", "2 3", "--r", "2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let err = stderr(&out);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with("error:"));
}

#[test]
fn domain_errors_exit_two_with_single_line() {
    for args in [
        &["field", "4", "1"][..],
        &["field", "5", "2", "--modulus", "t^2+1"],
        &["field", "2", "63"],
    ] {
        let out = ffpow(args);
        let err = stderr(&out);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {err}");
        assert_eq!(err.lines().count(), 1, "{args:?}: {err}");
    }
}

#[test]
fn zero_exponent_is_a_usage_error() {
    let out = ffpow(&["is-power", "--field", "F(5^2)", "--element", "1", "--r", "0"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn help_goes_to_stdout() {
    let out = ffpow(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("is-power"));
}
