use std::process::Command;

use monideal::{verify_main_theorem, PrimeField, SquareFreeIdeal, Subset, Variables};
use monideal_cli::report::JsonReport;
use monideal_cli::run;
use proptest::prelude::*;

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn cli(args: &[&str]) -> Output {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("monideal").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = cli(&full);
    assert_eq!(o.code, 0, "{}", o.stderr);
    serde_json::from_str(o.stdout.trim()).unwrap()
}

#[test]
fn verify_path_with_oracle() {
    let v = json(&["verify", "x1*x2,x2*x3,x3*x4", "--field", "2", "--oracle"]);
    assert_eq!(v["pd"], 2);
    assert_eq!(v["big_height"], 2);
    assert_eq!(v["is_scm"], true);
    assert_eq!(v["oracle_agrees"], true);
    assert_eq!(v["field"], 2);
    assert_eq!(
        v["minimal_primes"],
        serde_json::json!([["x1", "x3"], ["x2", "x3"], ["x2", "x4"]])
    );
}

#[test]
fn big_height_through_polarization() {
    let o = cli(&["big-height", "x^2,x*y"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.trim(), "2");
    assert_eq!(cli(&["pd", "x^2,x*y"]).stdout.trim(), "2");
    // k[x,y]/(x^2,xy) has the maximal ideal as an associated prime.
    assert_eq!(cli(&["depth", "x^2,x*y"]).stdout.trim(), "0");
    assert_eq!(cli(&["dim", "x^2,x*y"]).stdout.trim(), "1");
}

#[test]
fn named_cases() {
    let c4 = "x1*x2,x2*x3,x3*x4,x1*x4";
    assert_eq!(cli(&["pd", c4]).stdout.trim(), "3");
    assert_eq!(cli(&["big-height", c4]).stdout.trim(), "2");
    assert_eq!(cli(&["is-scm", c4]).stdout.trim(), "false");
    let c5 = "x1*x2,x2*x3,x3*x4,x4*x5,x1*x5";
    assert_eq!(cli(&["pd", c5, "--oracle"]).stdout.trim(), "3");
    assert_eq!(cli(&["is-cm", c5]).stdout.trim(), "true");
    assert_eq!(cli(&["pd", "x1,x2,x3"]).stdout.trim(), "3");
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["pd", ""]).code, 2);
    assert_eq!(cli(&["pd", "x,,y"]).code, 2);
    assert_eq!(cli(&["pd", "x", "--field", "4"]).code, 2);
    assert_eq!(cli(&["pd", "x", "--vars", "y"]).code, 2);
    assert_eq!(cli(&["no-such-command"]).code, 2);
    assert_eq!(
        cli(&["pd", "x*y*z", "--oracle", "--oracle-cap", "2"]).code,
        3
    );
    assert_eq!(cli(&["betti", "x*y*z", "--oracle-cap", "2"]).code, 3);
    assert_eq!(cli(&["gen", "cycle", "-n", "2"]).code, 2);
    assert_eq!(cli(&["--help"]).code, 0);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_monideal");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["pd", "x1*x2,x2*x3"]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&ok.stdout).trim(), "2");
    assert_eq!(status(&["pd", ""]).status.code(), Some(2));
    assert_eq!(
        status(&["pd", "a*b*c", "--oracle", "--oracle-cap", "1"])
            .status
            .code(),
        Some(3)
    );
}

#[test]
fn minimalization_warning() {
    let o = cli(&["pd", "x1*x2, x1*x2*x3"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.stdout.trim(), "1");
    assert!(o
        .stderr
        .contains("warning: generator x1*x2*x3 is a multiple"));
}

#[test]
fn ideal_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ideal.txt");
    std::fs::write(&path, "x1*x2\nx2*x3\nx3*x4\n").unwrap();
    let arg = format!("@{}", path.display());
    assert_eq!(cli(&["pd", &arg]).stdout.trim(), "2");
    assert_eq!(cli(&["pd", "@/no/such/file"]).code, 2);
}

#[test]
fn primes_betti_and_polarize_output() {
    assert_eq!(cli(&["primes", "x*y,y*z"]).stdout, "(y)\n(x, z)\n");
    let b = json(&["betti", "x*y,y*z"]);
    assert_eq!(b["totals"], serde_json::json!([1, 2, 1]));
    assert_eq!(b["pd"], 2);
    assert_eq!(
        cli(&["polarize", "x^2,x*y"]).stdout.trim(),
        "x.1*y.1, x.1*x.2"
    );
    let p = json(&["polarize", "x^2,x*y"]);
    assert_eq!(p["variables"], serde_json::json!(["x.1", "x.2", "y.1"]));
}

#[test]
fn gen_is_deterministic_and_parsable() {
    let a = cli(&["gen", "tree", "-n", "7", "--seed", "11"]);
    let b = cli(&["gen", "tree", "-n", "7", "--seed", "11"]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout.matches('*').count(), 6);
    let pd = cli(&["pd", a.stdout.trim()]);
    assert_eq!(pd.code, 0);
    let m = cli(&["gen", "random_monomial", "-n", "3", "--seed", "2"]);
    assert_eq!(cli(&["verify", m.stdout.trim()]).code, 0);
}

#[test]
fn batch_is_byte_identical() {
    let args = [
        "batch",
        "random_squarefree",
        "-n",
        "7",
        "--count",
        "12",
        "--seed",
        "5",
        "--field",
        "3",
        "--oracle",
    ];
    let a = cli(&args);
    let b = cli(&args);
    assert_eq!(a.code, 0, "{}", a.stderr);
    assert_eq!(a.stdout, b.stdout);
    let lines: Vec<&str> = a.stdout.lines().collect();
    assert_eq!(
        lines[0],
        "kind,seed,n,gens,field,d_min,d_max,dim,depth,pd,pd_oracle,is_cm,is_scm,ineq_depth,ineq_pd,scm_equality,oracle_agrees"
    );
    assert_eq!(lines.len(), 13);
    for (k, line) in lines[1..].iter().enumerate() {
        assert!(
            line.starts_with(&format!("random_squarefree,{},7,", 5 + k)),
            "{line}"
        );
        assert!(line.ends_with(",true,true,true,true"), "{line}");
    }
}

#[test]
fn batch_json_lines_match_csv() {
    let csv_out = cli(&["batch", "tree", "-n", "6", "--count", "4"]).stdout;
    let json_out = cli(&["--json", "batch", "tree", "-n", "6", "--count", "4"]).stdout;
    let mut reader = csv::Reader::from_reader(csv_out.as_bytes());
    let from_csv: Vec<monideal_cli::report::BatchRow> =
        reader.deserialize().map(Result::unwrap).collect();
    let from_json: Vec<monideal_cli::report::BatchRow> = json_out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(from_csv, from_json);
    assert!(from_json.iter().all(|r| r.is_scm && r.pd == r.d_max));
}

/// Rebuilds the ideal from the names in a JSON report and recomputes.
fn recompute(report: &JsonReport) -> JsonReport {
    let vars = Variables::new(report.variables.iter().cloned()).unwrap();
    let gens: Vec<Subset> = report
        .generators
        .iter()
        .map(|g| g.iter().map(|name| vars.index_of(name).unwrap()).collect())
        .collect();
    let ideal = SquareFreeIdeal::new(vars, gens).unwrap();
    let field = PrimeField::new(report.field).unwrap();
    let cap = report
        .report
        .pd_oracle
        .map(|_| monideal::DEFAULT_ORACLE_CAP);
    JsonReport::new(
        &ideal,
        verify_main_theorem(&ideal, field, cap).unwrap(),
        report.polarized,
    )
}

fn monomial_text() -> impl Strategy<Value = String> {
    let factor = (0usize..4, 1u32..3).prop_map(|(v, e)| match e {
        1 => format!("v{v}"),
        _ => format!("v{v}^{e}"),
    });
    let generator = prop::collection::vec(factor, 1..4).prop_map(|f| f.join("*"));
    prop::collection::vec(generator, 1..5).prop_map(|g| g.join(", "))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn json_round_trip(text in monomial_text(), p in prop::sample::select(vec!["2", "3"])) {
        let o = cli(&["--json", "verify", &text, "--field", p, "--oracle"]);
        prop_assert_eq!(o.code, 0, "{}", o.stderr);
        let report: JsonReport = serde_json::from_str(o.stdout.trim()).unwrap();
        prop_assert_eq!(recompute(&report), report);
    }

    #[test]
    fn unused_variable_shifts(text in monomial_text()) {
        let base = json(&["verify", &text]);
        let mut labels = monideal_cli::parse_ideal(&text, None).unwrap().ideal.vars().labels().to_vec();
        labels.push("extra".to_string());
        let vars = labels.join(",");
        for cmd in ["pd", "big-height", "dim", "depth"] {
            let before: i64 = cli(&[cmd, &text]).stdout.trim().parse().unwrap();
            let after: i64 = cli(&[cmd, &text, "--vars", &vars]).stdout.trim().parse().unwrap();
            let shift = if cmd == "dim" || cmd == "depth" { 1 } else { 0 };
            prop_assert_eq!(after, before + shift, "{}", cmd);
        }
        let wider = json(&["verify", &text, "--vars", &vars]);
        prop_assert_eq!(wider["n"].as_i64().unwrap(), base["n"].as_i64().unwrap() + 1);
    }
}
