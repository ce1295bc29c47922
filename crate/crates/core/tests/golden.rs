//! Rendered reports compared byte for byte against checked-in goldens.
//! The APA goldens were checked by hand against the published tables.

mod common;

use common::*;
use rook_spectral::io::{load_fixture, parse_ballots, render_csv, run, OutputFormat, RunConfig};
use rook_spectral::spectral::{Association, InnerProduct};
use serde_json::Value;

fn apa_config(format: OutputFormat) -> RunConfig {
    RunConfig {
        ranks: Some(vec![3]),
        format,
        energy_subset: vec![partition(&[3]), partition(&[2, 1])],
        ..Default::default()
    }
}

#[test]
fn apa_text_report_matches_golden() {
    let out = run(&apa_config(OutputFormat::Text), &load_fixture("apa-rank3").unwrap()).unwrap();
    assert_eq!(out, include_str!("golden/apa-rank3.text"));
}

#[test]
fn apa_csv_report_matches_golden() {
    let out = run(&apa_config(OutputFormat::Csv), &load_fixture("apa-rank3").unwrap()).unwrap();
    assert_eq!(out, include_str!("golden/apa-rank3.csv"));
}

#[test]
fn natural_inner_product_report_matches_golden() {
    let config = RunConfig {
        association: Association::Semigroup,
        inner_product: InnerProduct::Natural,
        max_order: 1,
        ..Default::default()
    };
    let out = run(&config, &load_fixture("example-4-7").unwrap()).unwrap();
    assert_eq!(out, include_str!("golden/example-4-7-natural.text"));
}

#[test]
fn csv_rows_carry_the_first_order_table() {
    let golden = include_str!("golden/apa-rank3.csv");
    let row = golden
        .lines()
        .find(|l| l.starts_with("statistic,3,\"1,4,5\",\"1,2,3\",1,,4->2,"))
        .unwrap();
    assert!(row.ends_with(",1.67,5/3"), "{row}");
}

#[test]
fn json_report_is_consistent_with_text() {
    let out = run(&apa_config(OutputFormat::Json), &load_fixture("apa-rank3").unwrap()).unwrap();
    let v: Value = serde_json::from_str(&out).unwrap();
    let rank = v["ranks"].as_array().unwrap().iter().find(|r| r["rank"] == 3).unwrap();
    let retained = &rank["energy"]["retained"];
    assert_eq!(retained["num"], 145867);
    assert_eq!(retained["den"], 146748);
    let block = rank["blocks"]
        .as_array()
        .unwrap()
        .iter()
        .find(|b| b["domain"] == serde_json::json!([1, 4, 5]) && b["range"] == serde_json::json!([1, 2, 3]))
        .unwrap();
    let stat = block["statistics"].as_array().unwrap().iter().find(|s| s["cell"] == "{1,4}->{1,2}").unwrap();
    assert_eq!(stat["value"]["rounded"], "-27.33");
    assert_eq!(stat["flavor"], "unordered");
}

#[test]
fn output_is_deterministic() {
    let data = load_fixture("apa-rank3").unwrap();
    for format in [OutputFormat::Text, OutputFormat::Csv, OutputFormat::Json] {
        let config = apa_config(format);
        assert_eq!(run(&config, &data).unwrap(), run(&config, &data).unwrap());
    }
}

#[test]
fn canonical_csv_roundtrips_the_fixture() {
    let data = load_fixture("apa-rank3").unwrap();
    let text = render_csv(&data);
    let again = parse_ballots(&text, Some(5)).unwrap();
    assert_eq!(again.total(), 2108);
    assert_eq!(render_csv(&again), text);
}
