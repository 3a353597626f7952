use std::collections::BTreeMap;
use std::path::Path;
use std::process::{Command, Output};

use dense_coding::densecoding::capacity_closed;
use dense_coding::spinmodels::ModelParams;
use dense_coding_cli::format::{format_sig, CSV_HEADER};

fn densecoding(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_densecoding"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

type Row = BTreeMap<String, String>;

fn parse_csv(text: &str) -> Vec<Row> {
    let mut lines = text.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    lines
        .map(|line| {
            let fields: Vec<&str> = line.split(',').collect();
            assert_eq!(fields.len(), header.len(), "{line}");
            header.iter().map(|h| h.to_string()).zip(fields.iter().map(|f| f.to_string())).collect()
        })
        .collect()
}

fn num(row: &Row, key: &str) -> f64 {
    row[key].parse().unwrap()
}

fn params_of(row: &Row) -> ModelParams {
    let (j, t) = (num(row, "J"), num(row, "T"));
    match row["model"].as_str() {
        "xxz" => ModelParams::xxz(j, num(row, "Delta"), t),
        "dm" => ModelParams::dm(j, num(row, "D"), t),
        other => panic!("unknown model {other}"),
    }
}

#[test]
fn point_examples() {
    let out = densecoding(&["point", "--model", "xxz", "--j", "1", "--delta", "0", "--t", "0.005"]);
    assert!(out.status.success());
    let rows = parse_csv(&stdout(&out));
    assert_eq!(rows.len(), 1);
    assert!((num(&rows[0], "chi") - 2.0).abs() < 1e-9);
    assert_eq!(rows[0]["D"], "");
    assert_eq!(rows[0]["valid"], "true");

    let dm = densecoding(&["point", "--model", "dm", "--j", "1", "--d", "0", "--t", "0.5"]);
    let xxz = densecoding(&["point", "--model", "xxz", "--j", "1", "--delta", "1", "--t", "0.5"]);
    let (dm, xxz) = (parse_csv(&stdout(&dm)), parse_csv(&stdout(&xxz)));
    assert_eq!(dm[0]["chi"], xxz[0]["chi"]);
    assert_eq!(dm[0]["concurrence"], xxz[0]["concurrence"]);
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| densecoding(args).status.code().unwrap();
    assert_eq!(code(&["point", "--model", "xxz", "--j", "1", "--delta", "0", "--t", "-1"]), 3);
    assert_eq!(code(&["point", "--model", "xxz", "--j", "0", "--delta", "0", "--t", "1"]), 3);
    assert_eq!(code(&["point", "--model", "heisenberg", "--j", "1", "--delta", "0", "--t", "1"]), 2);
    assert_eq!(code(&["point", "--model", "xxz", "--j", "1", "--t", "1"]), 2);
    assert_eq!(code(&["sweep", "--model", "xxz", "--j", "1", "--t", "1", "--axis", "D:0:1:3"]), 2);
    assert_eq!(code(&["sweep", "--model", "xxz", "--j", "1", "--t", "1", "--axis", "Delta:0:1"]), 2);
    assert_eq!(
        code(&["sweep", "--model", "xxz", "--j", "1", "--t", "1", "--axis", "Delta:0:1:3", "--out", "/nonexistent-dir/x.csv"]),
        4
    );
    assert_eq!(code(&["figure", "0"]), 2);
    assert_eq!(code(&["figure", "7"]), 2);
    assert_eq!(code(&["critical-temp", "--model", "xxz", "--j", "1", "--delta", "0", "--t-lo", "2", "--t-hi", "1"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn critical_temp_examples() {
    let out = densecoding(&["critical-temp", "--model", "xxz", "--j", "1", "--delta", "-2", "--t-lo", "0.01", "--t-hi", "10"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "none\n");

    let roots: Vec<f64> = ["1", "0", "-0.9"]
        .iter()
        .map(|delta| {
            let out = densecoding(&["critical-temp", "--model", "xxz", "--j", "1", "--delta", delta]);
            stdout(&out).trim().parse().unwrap()
        })
        .collect();
    assert!(roots[0] > roots[1] && roots[1] > roots[2], "{roots:?}");

    // The ferromagnetic DM chain at D = 0 never reaches chi = 1.
    let out = densecoding(&["critical-temp", "--model", "dm", "--j", "-1", "--d", "0", "--all"]);
    assert_eq!(stdout(&out), "none\n");

    let out = densecoding(&["critical-temp", "--model", "xxz", "--j", "1", "--delta", "1", "--all"]);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("t_lo,t_hi,t_critical"));
    let fields: Vec<f64> = lines.next().unwrap().split(',').map(|f| f.parse().unwrap()).collect();
    assert!(fields[0] <= fields[2] && fields[2] <= fields[1]);
    assert_eq!(format_sig(fields[2]), format_sig(roots[0]));
    assert!(lines.next().is_none());
}

#[test]
fn sweep_output_is_deterministic_and_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.csv");
    let args = [
        "sweep", "--model", "dm", "--t", "0.5", "--axis", "J:-2:2:9", "--axis", "D:0:4:11", "--out",
        path.to_str().unwrap(),
    ];
    assert!(densecoding(&args).status.success());
    let first = std::fs::read(&path).unwrap();
    assert!(densecoding(&args).status.success());
    assert_eq!(first, std::fs::read(&path).unwrap());

    let text = String::from_utf8(first).unwrap();
    assert!(text.starts_with(&format!("{CSV_HEADER}\n")));
    assert!(!text.contains('\r'));
    let rows = parse_csv(&text);
    assert_eq!(rows.len(), 99);
    // row-major: J outermost
    assert_eq!((rows[0]["J"].as_str(), rows[0]["D"].as_str()), ("-2", "0"));
    assert_eq!((rows[1]["J"].as_str(), rows[1]["D"].as_str()), ("-2", "0.4"));
    assert_eq!(rows[11]["J"], "-1.5");
    for row in &rows {
        for key in ["J", "D", "T", "chi", "entropy_rho", "concurrence"] {
            let v: f64 = row[key].parse().unwrap();
            assert!(v.is_finite());
            assert_eq!(format_sig(v), row[key], "{key} does not round-trip");
        }
        assert_eq!(row["Delta"], "");
        assert!(row["valid"] == "true" || row["valid"] == "false");
        let params = params_of(row);
        if params.j != 0.0 {
            assert_eq!(row["chi"], format_sig(capacity_closed(&params).unwrap()));
        }
    }
}

#[test]
fn sweep_json_matches_csv() {
    let base = ["sweep", "--model", "xxz", "--j", "-1", "--t", "0.3", "--axis", "Delta:-3:3:7", "--outputs", "chi,valid"];
    let csv = parse_csv(&stdout(&densecoding(&base)));
    let mut json_args = base.to_vec();
    json_args.extend(["--format", "json"]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&densecoding(&json_args))).unwrap();
    let records = json.as_array().unwrap();
    assert_eq!(records.len(), csv.len());
    for (rec, row) in records.iter().zip(&csv) {
        assert_eq!(rec["chi"].as_f64().unwrap(), num(row, "chi"));
        assert_eq!(rec["valid"].as_bool().unwrap().to_string(), row["valid"]);
        assert!(rec["D"].is_null());
        assert!(rec["concurrence"].is_null());
        assert_eq!(row["concurrence"], "");
    }
}

fn write_figure(n: u8, dir: &Path) -> Vec<Row> {
    let out = densecoding(&["figure", &n.to_string(), "--out-dir", dir.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let script = std::fs::read_to_string(dir.join(format!("fig{n}.gp"))).unwrap();
    assert!(script.contains(&format!("'fig{n}.csv'")));
    parse_csv(&std::fs::read_to_string(dir.join(format!("fig{n}.csv"))).unwrap())
}

/// Checks that the curves named in `series` run top to bottom at every
/// sample for both signs of J.
fn assert_ordered(rows: &[Row], series_key: &str, series: &[&str]) {
    for j in ["1", "-1"] {
        let curves: Vec<Vec<f64>> = series
            .iter()
            .map(|s| {
                rows.iter()
                    .filter(|r| r["J"] == j && r[series_key] == *s)
                    .map(|r| num(r, "chi"))
                    .collect()
            })
            .collect();
        assert!(curves.iter().all(|c| c.len() == 401));
        for k in 0..401 {
            for pair in curves.windows(2) {
                assert!(pair[0][k] >= pair[1][k] - 1e-12, "J={j} sample {k}");
            }
        }
    }
}

#[test]
fn figure_grids_and_orderings() {
    let dir = tempfile::tempdir().unwrap();

    let fig2 = write_figure(2, dir.path());
    assert_eq!(fig2.len(), 6 * 401);
    assert_ordered(&fig2, "T", &["0.005", "0.5", "1"]);

    let fig3 = write_figure(3, dir.path());
    assert_eq!(fig3.len(), 8 * 401);
    let mut curves: Vec<(String, String)> = fig3.iter().map(|r| (r["J"].clone(), r["Delta"].clone())).collect();
    curves.dedup();
    let want: Vec<(String, String)> = [("1", "-2"), ("1", "-0.9"), ("1", "0"), ("1", "1"), ("-1", "-1"), ("-1", "0"), ("-1", "0.9"), ("-1", "2")]
        .iter()
        .map(|(a, b)| (a.to_string(), b.to_string()))
        .collect();
    assert_eq!(curves, want);

    let fig4 = write_figure(4, dir.path());
    assert_eq!(fig4.len(), 101 * 101);
    assert!(fig4.iter().all(|r| r["T"] == "0.5" && r["model"] == "dm"));

    assert_ordered(&write_figure(5, dir.path()), "T", &["0.3", "0.5", "0.8"]);
    assert_ordered(&write_figure(6, dir.path()), "D", &["5", "1", "0"]);
}

#[test]
fn figure_one_surface() {
    let dir = tempfile::tempdir().unwrap();
    let rows = write_figure(1, dir.path());
    assert_eq!(rows.len(), 101 * 101);
    assert!(rows.iter().all(|r| r["T"] == "0.05" && r["model"] == "xxz"));
    assert_eq!((rows[0]["J"].as_str(), rows[0]["Delta"].as_str()), ("-2", "-3"));
    assert_eq!((rows[101 * 101 - 1]["J"].as_str(), rows[101 * 101 - 1]["Delta"].as_str()), ("2", "3"));
    // the J = 0 row is the uncoupled, maximally mixed state
    let zero: Vec<&Row> = rows.iter().filter(|r| r["J"] == "0").collect();
    assert_eq!(zero.len(), 101);
    assert!(zero.iter().all(|r| num(r, "chi").abs() < 1e-12 && r["valid"] == "false"));
}
