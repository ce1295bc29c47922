//! Ballot input, embedded fixtures, run configuration and report rendering.
//!
//! Ballots are CSV with header `vote,count`, one `[3,-,-,2,1],75` row per
//! line, or JSON: either `{"n": 5, "ballots": [{"vote": ..., "count": ...}]}`
//! or the bare ballot array.

use std::fmt::Write as _;

use num_traits::Zero;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rook::{PartialRanking, Subset};
use crate::spectral::{
    analyze, AnalysisOptions, Association, BlockReport, CellStatistic, InnerProduct, RankReport, SpectralReport,
};
use crate::symmetric::{Cell, Flavor, IntegerPartition};
use crate::{Dataset, Rational};

/// An embedded dataset.
#[derive(Clone, Copy, Debug)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    pub n: usize,
    pub csv: &'static str,
}

pub const FIXTURES: &[Fixture] = &[
    Fixture {
        name: "apa-rank3",
        description: "APA presidential election ballots ranking exactly three of five candidates (2108 votes)",
        n: 5,
        csv: include_str!("../fixtures/apa-rank3.csv"),
    },
    Fixture {
        name: "example-4-7",
        description: "small R_2 example with one count on every element except 2->2",
        n: 2,
        csv: include_str!("../fixtures/example-4-7.csv"),
    },
];

pub fn fixture(name: &str) -> Option<&'static Fixture> {
    FIXTURES.iter().find(|f| f.name == name)
}

pub fn load_fixture(name: &str) -> Result<Dataset> {
    let f = fixture(name).ok_or_else(|| Error::Config(format!("no fixture named {name:?}")))?;
    parse_ballots(f.csv, Some(f.n))
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_vote(text: &str, line: usize) -> Result<PartialRanking> {
    text.trim().parse::<PartialRanking>().map_err(|e| match e {
        Error::Parse { message, .. } => parse_error(line, message),
        other => parse_error(line, other.to_string()),
    })
}

fn parse_count(text: &str, line: usize) -> Result<u64> {
    let text = text.trim();
    if text.starts_with('-') {
        return Err(parse_error(line, format!("negative count {text}")));
    }
    text.parse().map_err(|_| parse_error(line, format!("invalid count {text:?}")))
}

struct Builder {
    n: Option<usize>,
    rows: Vec<(PartialRanking, u64)>,
}

impl Builder {
    fn push(&mut self, vote: PartialRanking, count: u64, line: usize) -> Result<()> {
        match self.n {
            Some(n) if n != vote.n() => {
                return Err(parse_error(line, format!("ranking {vote} has {} entries, expected {n}", vote.n())));
            }
            None => self.n = Some(vote.n()),
            _ => {}
        }
        self.rows.push((vote, count));
        Ok(())
    }

    fn finish(self) -> Result<Dataset> {
        let n = self
            .n
            .ok_or_else(|| Error::Config("no ballots to infer n from; pass n explicitly".into()))?;
        Dataset::from_counts(n, self.rows)
    }
}

/// Parses CSV or JSON ballots. `n`, when given, is enforced on every row and
/// also fixes the size of an empty dataset.
pub fn parse_ballots(input: &str, n: Option<usize>) -> Result<Dataset> {
    let input = input.strip_prefix('\u{feff}').unwrap_or(input);
    let trimmed = input.trim_start();
    if trimmed.starts_with('{') || (trimmed.starts_with('[') && looks_like_json(trimmed)) {
        parse_json(input, n)
    } else {
        parse_csv(input, n)
    }
}

fn looks_like_json(text: &str) -> bool {
    // A JSON ballot array opens with `[` followed by `{` or `]`.
    text[1..].trim_start().starts_with(['{', ']'])
}

fn parse_csv(input: &str, n: Option<usize>) -> Result<Dataset> {
    let mut builder = Builder { n, rows: Vec::new() };
    let mut header_seen = false;
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim_end_matches('\r').trim();
        if line.is_empty() {
            continue;
        }
        if !header_seen {
            let header: Vec<String> = line.split(',').map(|h| h.trim().to_ascii_lowercase()).collect();
            if header != ["vote", "count"] {
                return Err(parse_error(line_no, format!("expected header `vote,count`, found {line:?}")));
            }
            header_seen = true;
            continue;
        }
        let (vote, count) = if let Some(rest) = line.strip_prefix('"') {
            let end = rest
                .find('"')
                .ok_or_else(|| parse_error(line_no, "unterminated quoted vote"))?;
            let tail = rest[end + 1..].trim_start();
            let count = tail
                .strip_prefix(',')
                .ok_or_else(|| parse_error(line_no, "missing count column"))?;
            (&rest[..end], count)
        } else {
            let comma = line.rfind(',').ok_or_else(|| parse_error(line_no, "missing count column"))?;
            (&line[..comma], &line[comma + 1..])
        };
        let vote = parse_vote(vote, line_no)?;
        let count = parse_count(count, line_no)?;
        builder.push(vote, count, line_no)?;
    }
    if !header_seen {
        return Err(parse_error(1, "missing header `vote,count`"));
    }
    builder.finish()
}

#[derive(Deserialize)]
struct JsonBallot {
    vote: String,
    count: i64,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum JsonInput {
    Wrapped { n: Option<usize>, ballots: Vec<JsonBallot> },
    Bare(Vec<JsonBallot>),
}

fn parse_json(input: &str, n: Option<usize>) -> Result<Dataset> {
    let parsed: JsonInput =
        serde_json::from_str(input).map_err(|e| parse_error(e.line(), format!("invalid JSON ballots: {e}")))?;
    let (declared, ballots) = match parsed {
        JsonInput::Wrapped { n, ballots } => (n, ballots),
        JsonInput::Bare(ballots) => (None, ballots),
    };
    let n = match (n, declared) {
        (Some(a), Some(b)) if a != b => {
            return Err(Error::Config(format!("n = {a} requested but the file declares n = {b}")));
        }
        (a, b) => a.or(b),
    };
    let mut builder = Builder { n, rows: Vec::new() };
    // Entries are numbered from 1 in place of line numbers.
    for (idx, ballot) in ballots.into_iter().enumerate() {
        let entry = idx + 1;
        let vote = parse_vote(&ballot.vote, entry)?;
        if ballot.count < 0 {
            return Err(parse_error(entry, format!("negative count {}", ballot.count)));
        }
        builder.push(vote, ballot.count as u64, entry)?;
    }
    builder.finish()
}

/// The canonical CSV form: header, then one row per ranking in canonical order.
pub fn render_csv(dataset: &Dataset) -> String {
    let mut out = String::from("vote,count\n");
    for (s, c) in dataset.iter() {
        let _ = writeln!(out, "{s},{c}");
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Config(format!("unknown format {other:?} (text|csv|json)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub association: Association,
    pub inner_product: InnerProduct,
    pub max_order: usize,
    /// `None` means every rank.
    pub ranks: Option<Vec<usize>>,
    pub format: OutputFormat,
    /// Partitions whose combined energy share is reported per rank.
    pub energy_subset: Vec<IntegerPartition>,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            association: Association::Groupoid,
            inner_product: InnerProduct::Groupoid,
            max_order: 2,
            ranks: None,
            format: OutputFormat::Text,
            energy_subset: Vec::new(),
        }
    }
}

impl RunConfig {
    pub fn validate(&self, dataset: &Dataset) -> Result<()> {
        let n = dataset.n();
        if let Some(&max_rank) = dataset.ranks().iter().next_back() {
            if self.max_order > max_rank {
                return Err(Error::Config(format!(
                    "order {} exceeds the largest rank present ({max_rank})",
                    self.max_order
                )));
            }
        }
        if let Some(ranks) = &self.ranks {
            if let Some(bad) = ranks.iter().find(|&&k| k > n) {
                return Err(Error::Config(format!("rank {bad} exceeds n = {n}")));
            }
        }
        if let Some(bad) = self.energy_subset.iter().find(|l| l.weight() > n) {
            return Err(Error::Config(format!("partition {bad} has weight above n = {n}")));
        }
        Ok(())
    }

    fn options(&self) -> AnalysisOptions {
        AnalysisOptions { max_order: self.max_order, ranks: self.ranks.clone(), inner_product: self.inner_product }
    }
}

/// Validates the config, runs the analysis and renders it.
pub fn run(config: &RunConfig, dataset: &Dataset) -> Result<String> {
    config.validate(dataset)?;
    let report = analyze(dataset, config.association, &config.options())?;
    Ok(match config.format {
        OutputFormat::Text => render_text(&report, &config.energy_subset),
        OutputFormat::Csv => render_report_csv(&report, &config.energy_subset),
        OutputFormat::Json => render_json(&report, &config.energy_subset),
    })
}

/// Two-decimal rendering, rounding half away from zero.
pub fn round2(x: Rational) -> String {
    let scaled = (x * Rational::from_integer(100)).round().to_integer();
    let sign = if scaled < 0 { "-" } else { "" };
    let a = scaled.unsigned_abs();
    format!("{sign}{}.{:02}", a / 100, a % 100)
}

fn exact(x: Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

fn table(corner: &str, columns: &[String], rows: &[(String, Vec<String>)]) -> String {
    let label_width = rows.iter().map(|(l, _)| l.chars().count()).chain([corner.chars().count()]).max().unwrap_or(0);
    let mut widths: Vec<usize> = columns.iter().map(|c| c.chars().count()).collect();
    for (_, cells) in rows {
        for (w, c) in widths.iter_mut().zip(cells) {
            *w = (*w).max(c.chars().count());
        }
    }
    let mut out = String::new();
    let pad = |s: &str, w: usize| format!("{}{s}", " ".repeat(w - s.chars().count()));
    let _ = write!(out, "{corner}{}", " ".repeat(label_width - corner.chars().count()));
    for (c, &w) in columns.iter().zip(&widths) {
        let _ = write!(out, "  {}", pad(c, w));
    }
    out.push('\n');
    for (label, cells) in rows {
        let _ = write!(out, "{label}{}", " ".repeat(label_width - label.chars().count()));
        for (c, &w) in cells.iter().zip(&widths) {
            let _ = write!(out, "  {}", pad(c, w));
        }
        out.push('\n');
    }
    out
}

/// Zeroth-order table of one rank: rows are domains, columns ranges.
pub fn render_zeroth_table(rank: &RankReport, n: usize) -> String {
    let subsets = Subset::k_subsets(n, rank.k);
    let columns: Vec<String> = subsets.iter().map(|s| s.to_string()).collect();
    let rows: Vec<(String, Vec<String>)> = subsets
        .iter()
        .map(|&d| {
            let cells = subsets
                .iter()
                .map(|&r| rank.block(d, r).map_or_else(|| round2(Rational::zero()), |b| round2(b.zeroth())))
                .collect();
            (d.to_string(), cells)
        })
        .collect();
    table("D \\ R", &columns, &rows)
}

/// First-order table of one block: rows candidates in `D`, columns ranks in `R`.
pub fn render_first_order(block: &BlockReport) -> String {
    let columns: Vec<String> = block.range.iter().map(|j| j.to_string()).collect();
    let rows: Vec<(String, Vec<String>)> = block
        .domain
        .iter()
        .map(|i| {
            let cells = block
                .range
                .iter()
                .map(|j| block.lookup(&Cell::first(i, j)).map_or_else(String::new, |s| round2(s.value)))
                .collect();
            (i.to_string(), cells)
        })
        .collect();
    table("i \\ j", &columns, &rows)
}

/// Unordered order-`m` table of one block: rows candidate sets, columns rank sets.
pub fn render_unordered(block: &BlockReport, order: usize) -> String {
    let stats: Vec<&CellStatistic> = block.of_order(order, Some(Flavor::Unordered)).collect();
    let mut froms: Vec<Subset> = Vec::new();
    let mut tos: Vec<Subset> = Vec::new();
    for s in &stats {
        if let Cell::Unordered { from, to } = s.cell {
            if !froms.contains(&from) {
                froms.push(from);
            }
            if !tos.contains(&to) {
                tos.push(to);
            }
        }
    }
    let columns: Vec<String> = tos.iter().map(|s| s.to_string()).collect();
    let rows: Vec<(String, Vec<String>)> = froms
        .iter()
        .map(|&from| {
            let cells = tos
                .iter()
                .map(|&to| {
                    stats
                        .iter()
                        .find(|s| s.cell == Cell::Unordered { from, to })
                        .map_or_else(String::new, |s| round2(s.value))
                })
                .collect();
            (from.to_string(), cells)
        })
        .collect();
    table("I \\ J", &columns, &rows)
}

fn render_cell_list(stats: &[&CellStatistic]) -> String {
    let rows: Vec<(String, Vec<String>)> = stats
        .iter()
        .map(|s| (s.cell.to_string(), vec![s.partition.to_string(), round2(s.value)]))
        .collect();
    table("cell", &["partition".to_string(), "value".to_string()], &rows)
}

fn render_energy_text(rank: &RankReport, subset: &[IntegerPartition]) -> String {
    let e = &rank.energy;
    let rows: Vec<(String, Vec<String>)> = e
        .partitions
        .iter()
        .map(|p| {
            (
                p.partition.to_string(),
                vec![
                    exact(p.norm_sq),
                    round2(p.normalized),
                    p.fraction.map_or_else(|| "-".to_string(), |f| format!("{:.6}", to_f64(f))),
                ],
            )
        })
        .collect();
    let mut out = format!("norm^2 of rank-{} part: {}\n", rank.k, exact(e.norm_sq));
    out.push_str(&table(
        "partition",
        &["norm^2".into(), "normalized".into(), "fraction".into()],
        &rows,
    ));
    let chosen: Vec<IntegerPartition> = subset.iter().filter(|l| l.weight() == rank.k).cloned().collect();
    if !chosen.is_empty() {
        let labels: Vec<String> = chosen.iter().map(|l| l.to_string()).collect();
        let _ = writeln!(
            out,
            "retained {}: {}",
            labels.join(" + "),
            e.fraction(&chosen).map_or_else(|| "-".to_string(), |f| format!("{:.6}", to_f64(f)))
        );
    }
    out
}

fn to_f64(x: Rational) -> f64 {
    *x.numer() as f64 / *x.denom() as f64
}

fn render_natural_text(block: &BlockReport) -> String {
    let rows: Vec<(String, Vec<String>)> = block
        .statistics
        .iter()
        .filter_map(|s| {
            let d = s.natural.as_ref()?;
            Some((
                s.cell.to_string(),
                vec![
                    s.partition.to_string(),
                    round2(d.projection_vs_semigroup_indicator),
                    round2(d.projection_vs_groupoid_indicator),
                    round2(d.data_vs_projected_indicator),
                ],
            ))
        })
        .collect();
    table(
        "cell",
        &["partition".into(), "<f^l,E_S>_s".into(), "<f^l,E_G>_s".into(), "<f,E_S^l>_s".into()],
        &rows,
    )
}

/// The full human-readable report.
pub fn render_text(report: &SpectralReport, energy_subset: &[IntegerPartition]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n: {}", report.n);
    let _ = writeln!(out, "association: {}", report.association);
    let _ = writeln!(out, "inner product: {}", report.inner_product);
    let _ = writeln!(out, "max order: {}", report.max_order);
    let _ = writeln!(out, "norm^2: {}", exact(report.norm_sq));
    for rank in &report.ranks {
        let _ = writeln!(out, "\n=== rank {} ===", rank.k);
        let _ = writeln!(out, "\n--- zeroth order ---");
        out.push_str(&render_zeroth_table(rank, report.n));
        let _ = writeln!(out, "\n--- energy ---");
        out.push_str(&render_energy_text(rank, energy_subset));
        if rank.k == 0 {
            continue;
        }
        for block in &rank.blocks {
            let _ = writeln!(out, "\n--- block D={} R={} ---", block.domain, block.range);
            if report.max_order >= 1 {
                let _ = writeln!(out, "first order");
                out.push_str(&render_first_order(block));
            }
            for m in 2..=report.max_order.min(rank.k) {
                let _ = writeln!(out, "order {m} unordered");
                out.push_str(&render_unordered(block, m));
                let ordered: Vec<&CellStatistic> = block.of_order(m, Some(Flavor::Ordered)).collect();
                let _ = writeln!(out, "order {m} ordered");
                out.push_str(&render_cell_list(&ordered));
            }
            if report.inner_product == InnerProduct::Natural {
                let _ = writeln!(out, "natural inner product");
                out.push_str(&render_natural_text(block));
            }
        }
    }
    out
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn flavor_label(cell: &Cell) -> &'static str {
    match cell.flavor() {
        None => "",
        Some(Flavor::Unordered) => "unordered",
        Some(Flavor::Ordered) => "ordered",
    }
}

/// Long-format CSV: one row per number.
pub fn render_report_csv(report: &SpectralReport, energy_subset: &[IntegerPartition]) -> String {
    let mut out = String::from("kind,rank,domain,range,order,flavor,cell,partition,value,exact\n");
    let mut row = |kind: &str, k: usize, d: &str, r: &str, order: &str, flavor: &str, cell: &str, part: &str, x: Rational| {
        let fields = [
            kind.to_string(),
            k.to_string(),
            csv_field(d),
            csv_field(r),
            order.to_string(),
            flavor.to_string(),
            csv_field(cell),
            csv_field(part),
            round2(x),
            exact(x),
        ];
        out.push_str(&fields.join(","));
        out.push('\n');
    };
    for rank in &report.ranks {
        for block in &rank.blocks {
            let (d, r) = (block.domain.label(), block.range.label());
            for s in &block.statistics {
                let order = s.cell.order().to_string();
                let flavor = flavor_label(&s.cell);
                let cell = s.cell.to_string();
                let part = s.partition.to_string();
                row("statistic", rank.k, &d, &r, &order, flavor, &cell, &part, s.value);
                if let Some(n) = &s.natural {
                    row("natural_fl_es", rank.k, &d, &r, &order, flavor, &cell, &part, n.projection_vs_semigroup_indicator);
                    row("natural_fl_eg", rank.k, &d, &r, &order, flavor, &cell, &part, n.projection_vs_groupoid_indicator);
                    row("natural_f_esl", rank.k, &d, &r, &order, flavor, &cell, &part, n.data_vs_projected_indicator);
                }
            }
        }
        let e = &rank.energy;
        row("energy_rank", rank.k, "", "", "", "", "", "", e.norm_sq);
        for p in &e.partitions {
            let part = p.partition.to_string();
            row("energy", rank.k, "", "", "", "", "", &part, p.norm_sq);
            row("energy_normalized", rank.k, "", "", "", "", "", &part, p.normalized);
            if let Some(f) = p.fraction {
                row("energy_fraction", rank.k, "", "", "", "", "", &part, f);
            }
        }
        let chosen: Vec<IntegerPartition> = energy_subset.iter().filter(|l| l.weight() == rank.k).cloned().collect();
        if !chosen.is_empty() {
            if let Some(f) = e.fraction(&chosen) {
                let labels: Vec<String> = chosen.iter().map(|l| l.to_string()).collect();
                row("energy_retained", rank.k, "", "", "", "", "", &labels.join("+"), f);
            }
        }
    }
    out
}

fn rational_json(x: Rational) -> Value {
    json!({ "num": x.numer(), "den": x.denom(), "rounded": round2(x) })
}

fn statistic_json(s: &CellStatistic) -> Value {
    let mut v = json!({
        "cell": s.cell.to_string(),
        "order": s.cell.order(),
        "partition": s.partition.to_string(),
        "value": rational_json(s.value),
    });
    if let Some(flavor) = s.cell.flavor() {
        v["flavor"] = json!(flavor);
    }
    if let Some(n) = &s.natural {
        v["natural"] = json!({
            "projection_vs_semigroup_indicator": rational_json(n.projection_vs_semigroup_indicator),
            "projection_vs_groupoid_indicator": rational_json(n.projection_vs_groupoid_indicator),
            "data_vs_projected_indicator": rational_json(n.data_vs_projected_indicator),
        });
    }
    v
}

/// JSON report with exact (`num`/`den`) and rounded values.
pub fn render_json(report: &SpectralReport, energy_subset: &[IntegerPartition]) -> String {
    let ranks: Vec<Value> = report
        .ranks
        .iter()
        .map(|rank| {
            let blocks: Vec<Value> = rank
                .blocks
                .iter()
                .map(|b| {
                    json!({
                        "domain": b.domain.to_vec(),
                        "range": b.range.to_vec(),
                        "statistics": b.statistics.iter().map(statistic_json).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let partitions: Vec<Value> = rank
                .energy
                .partitions
                .iter()
                .map(|p| {
                    json!({
                        "partition": p.partition.to_string(),
                        "norm_sq": rational_json(p.norm_sq),
                        "normalized": rational_json(p.normalized),
                        "fraction": p.fraction.map(rational_json),
                    })
                })
                .collect();
            let chosen: Vec<IntegerPartition> =
                energy_subset.iter().filter(|l| l.weight() == rank.k).cloned().collect();
            let retained = if chosen.is_empty() { None } else { rank.energy.fraction(&chosen) };
            json!({
                "rank": rank.k,
                "blocks": blocks,
                "energy": {
                    "norm_sq": rational_json(rank.energy.norm_sq),
                    "partitions": partitions,
                    "retained": retained.map(rational_json),
                },
            })
        })
        .collect();
    let v = json!({
        "n": report.n,
        "association": report.association,
        "inner_product": report.inner_product,
        "max_order": report.max_order,
        "norm_sq": rational_json(report.norm_sq),
        "ranks": ranks,
    });
    let mut s = serde_json::to_string_pretty(&v).expect("report serializes");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round2(Rational::new(-115, 3)), "-38.33");
        assert_eq!(round2(Rational::new(143, 3)), "47.67");
        assert_eq!(round2(Rational::new(-1, 1000)), "0.00");
        assert_eq!(round2(Rational::new(1, 200)), "0.01");
        assert_eq!(round2(Rational::new(-1, 200)), "-0.01");
        assert_eq!(round2(Rational::from_integer(309)), "309.00");
    }

    #[test]
    fn csv_rows() {
        let d = parse_ballots("vote,count\n[3,-,-,2,1],75\n[1,2,3,4,5],1\n", None).unwrap();
        assert_eq!(d.n(), 5);
        let s: PartialRanking = "[3,-,-,2,1]".parse().unwrap();
        assert_eq!(d.get(&s), 75);
        assert_eq!((s.get(1), s.get(4), s.get(5)), (Some(3), Some(2), Some(1)));
        assert_eq!(d.get(&PartialRanking::identity(5)), 1);
    }

    #[test]
    fn csv_errors_carry_line_numbers() {
        let err = parse_ballots("vote,count\n[1,2,-,-,-],3\n[1,1,-,-,-],1\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err:?}");
        let err = parse_ballots("vote,count\n[1,2,-],-3\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_ballots("vote,count\n[1,2,-],3\n[1,2],3\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = parse_ballots("ballot,n\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_ballots("vote,count\n[1,6,-,-,-],3\n", None).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn duplicates_accumulate_and_quotes_work() {
        let d = parse_ballots("vote,count\n\"[1,-]\",2\n[1,-],3\n", None).unwrap();
        assert_eq!(d.get(&"[1,-]".parse().unwrap()), 5);
    }

    #[test]
    fn json_forms() {
        let a = parse_ballots(r#"{"n": 2, "ballots": [{"vote": "[1,-]", "count": 2}]}"#, None).unwrap();
        let b = parse_ballots(r#"[{"vote": "[1,-]", "count": 2}]"#, None).unwrap();
        assert_eq!(a, b);
        let empty = parse_ballots(r#"{"n": 3, "ballots": []}"#, None).unwrap();
        assert_eq!(empty.n(), 3);
        assert!(matches!(
            parse_ballots(r#"[{"vote": "[1,-]", "count": -2}]"#, None),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn empty_input_needs_n() {
        assert!(matches!(parse_ballots("vote,count\n", None), Err(Error::Config(_))));
        assert_eq!(parse_ballots("vote,count\n", Some(4)).unwrap().n(), 4);
    }

    #[test]
    fn fixtures_load() {
        let apa = load_fixture("apa-rank3").unwrap();
        assert_eq!(apa.total(), 2108);
        assert_eq!(apa.iter().count(), 60);
        let small = load_fixture("example-4-7").unwrap();
        assert_eq!(small.total(), 23);
        assert!(load_fixture("nope").is_err());
    }

    #[test]
    fn canonical_csv_roundtrip() {
        let apa = load_fixture("apa-rank3").unwrap();
        assert_eq!(parse_ballots(&render_csv(&apa), None).unwrap(), apa);
    }

    #[test]
    fn config_validation() {
        let small = load_fixture("example-4-7").unwrap();
        let config = RunConfig { max_order: 3, ..Default::default() };
        assert!(matches!(run(&config, &small), Err(Error::Config(_))));
        let config = RunConfig { energy_subset: vec!["3".parse().unwrap()], ..Default::default() };
        assert!(matches!(run(&config, &small), Err(Error::Config(_))));
    }
}
