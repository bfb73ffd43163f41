//! Text renderings of experiment reports.
//!
//! Table format: tab-separated, one header row naming every column, one row
//! per measurement. Sandwich columns are `n seed facts code_len mi vocab
//! order` (`facts` is `NA` for sources without facts); consistency columns
//! are `n seed order`; corpus columns are `n types mi` (`mi` is `NA` past
//! the last block pair).
//!
//! Summary format: `key=value` lines. The first lines are always `tool=`,
//! `version=` and `report=`, followed by a `config.*` echo. A sandwich
//! summary has exactly four `exponent.*` lines (facts, redundancy, mi,
//! words) and one `ordering.<lower><=<upper>=` line per pair of terms.
//! Real numbers are printed with six decimals.

use std::fmt::Write as _;
use std::io::Write;
use std::str::FromStr;

use super::{
    ConsistencyReport, CorpusReport, ExperimentConfig, SandwichReport, ORDERING_TOLERANCE,
};
use crate::error::{Error, Result};
use crate::VERSION;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Table,
    Summary,
}

impl FromStr for ReportFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table" => Ok(ReportFormat::Table),
            "summary" => Ok(ReportFormat::Summary),
            other => Err(Error::Parameter(format!(
                "unknown report format {other:?} (expected table or summary)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy)]
pub enum Report<'a> {
    Sandwich(&'a SandwichReport),
    Consistency(&'a ConsistencyReport),
    Corpus(&'a CorpusReport),
}

fn opt<T: std::fmt::Display>(v: Option<T>) -> String {
    v.map_or_else(|| "NA".to_string(), |v| v.to_string())
}

fn header(out: &mut String, kind: &str) {
    let _ = writeln!(out, "tool=perigraph");
    let _ = writeln!(out, "version={VERSION}");
    let _ = writeln!(out, "report={kind}");
}

fn echo_config(out: &mut String, source: &str, cfg: &ExperimentConfig) {
    let grid: Vec<String> = cfg.grid.iter().map(|n| n.to_string()).collect();
    let seeds: Vec<String> = cfg.seeds.iter().map(|s| s.to_string()).collect();
    let _ = writeln!(out, "config.source={source}");
    let _ = writeln!(out, "config.oracle={}", cfg.oracle);
    let _ = writeln!(out, "config.grid={}", grid.join(","));
    let _ = writeln!(out, "config.seeds={}", cfg.seeds.len());
    let _ = writeln!(out, "config.seed_list={}", seeds.join(","));
}

fn sandwich_table(r: &SandwichReport) -> String {
    let mut out = String::from("n\tseed\tfacts\tcode_len\tmi\tvocab\torder\n");
    for row in &r.rows {
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{:.6}\t{:.6}\t{}\t{}",
            row.n,
            row.seed,
            opt(row.facts),
            row.code_len,
            row.mi,
            row.vocab,
            row.order
        );
    }
    out
}

fn sandwich_summary(r: &SandwichReport) -> String {
    let mut out = String::new();
    header(&mut out, "sandwich");
    echo_config(&mut out, &r.source, &r.config);
    let _ = writeln!(out, "config.ordering_tolerance={ORDERING_TOLERANCE}");
    let _ = writeln!(out, "h_hat={:.6}", r.h_hat);
    let _ = writeln!(
        out,
        "redundancy_surrogate=mean code_len(x_1^n) - h_hat*n, h_hat = mean code rate at n={}",
        r.config.grid_max()
    );
    for m in &r.means {
        let _ = writeln!(
            out,
            "mean.n={} facts={} code_len={:.6} redundancy={:.6} mi={:.6} vocab={:.6} median_order={:.1}",
            m.n,
            m.facts.map_or("NA".to_string(), |f| format!("{f:.6}")),
            m.code_len,
            m.redundancy,
            m.mi,
            m.vocab,
            m.median_order
        );
    }
    let _ = writeln!(out, "exponent.facts={}", r.facts_exp);
    let _ = writeln!(out, "exponent.redundancy={}", r.redundancy_exp);
    let _ = writeln!(out, "exponent.mi={}", r.mi_exp);
    let _ = writeln!(out, "exponent.words={}", r.words_exp);
    for o in &r.orderings {
        let _ = writeln!(
            out,
            "ordering.{}<={}={}{}",
            o.lower,
            o.upper,
            opt(o.holds),
            if o.is_adjacent() { " adjacent" } else { "" }
        );
    }
    let _ = writeln!(out, "insufficient={}", r.is_insufficient());
    out
}

fn consistency_table(r: &ConsistencyReport) -> String {
    let mut out = String::from("n\tseed\torder\n");
    for (n, seed, order) in &r.rows {
        let _ = writeln!(out, "{n}\t{seed}\t{order}");
    }
    out
}

fn consistency_summary(r: &ConsistencyReport) -> String {
    let mut out = String::new();
    header(&mut out, "consistency");
    echo_config(&mut out, &r.source, &r.config);
    let _ = writeln!(out, "true_order={}", opt(r.true_order));
    for s in &r.summary {
        let _ = writeln!(
            out,
            "order.n={} median={:.1} mean={:.6} fraction_correct={}",
            s.n,
            s.median,
            s.mean,
            s.fraction_correct
                .map_or("NA".to_string(), |f| format!("{f:.6}"))
        );
    }
    let _ = writeln!(out, "median_non_decreasing={}", r.median_non_decreasing());
    out
}

fn corpus_table(r: &CorpusReport) -> String {
    let mut out = String::from("n\ttypes\tmi\n");
    for &(n, types) in &r.words.type_token_curve {
        let mi = r
            .mi_points
            .iter()
            .find(|p| p.0 == n)
            .map_or("NA".to_string(), |p| format!("{:.6}", p.1));
        let _ = writeln!(out, "{n}\t{types}\t{mi}");
    }
    out
}

fn corpus_summary(r: &CorpusReport) -> String {
    let mut out = String::new();
    header(&mut out, "corpus");
    for (k, v) in &r.config {
        let _ = writeln!(out, "config.{k}={v}");
    }
    let _ = writeln!(out, "config.oracle={}", r.oracle);
    let _ = writeln!(out, "symbols={}", r.symbols);
    let _ = writeln!(out, "alphabet_size={}", r.alphabet_size);
    let _ = writeln!(out, "tokens={}", r.words.tokens);
    let _ = writeln!(out, "types={}", r.words.types);
    let _ = writeln!(
        out,
        "exponent.heaps={}",
        r.words
            .heaps_fit
            .map_or("insufficient".to_string(), |f| f.to_kv_line())
    );
    let _ = writeln!(
        out,
        "zipf_slope={}",
        r.words
            .zipf_slope
            .map_or("NA".to_string(), |s| format!("{s:.6}"))
    );
    let _ = writeln!(out, "exponent.mi={}", r.mi_exp);
    for (rank, (word, freq)) in r.words.rank_freq.iter().take(20).enumerate() {
        let _ = writeln!(out, "rank.{}={}\t{}", rank + 1, word, freq);
    }
    out
}

pub fn render_report(report: Report<'_>, format: ReportFormat) -> String {
    match (report, format) {
        (Report::Sandwich(r), ReportFormat::Table) => sandwich_table(r),
        (Report::Sandwich(r), ReportFormat::Summary) => sandwich_summary(r),
        (Report::Consistency(r), ReportFormat::Table) => consistency_table(r),
        (Report::Consistency(r), ReportFormat::Summary) => consistency_summary(r),
        (Report::Corpus(r), ReportFormat::Table) => corpus_table(r),
        (Report::Corpus(r), ReportFormat::Summary) => corpus_summary(r),
    }
}

pub fn emit_report<W: Write>(mut w: W, report: Report<'_>, format: ReportFormat) -> Result<()> {
    w.write_all(render_report(report, format).as_bytes())?;
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complexity::OracleKind;
    use crate::experiments::{run_markov_consistency, Source};
    use crate::processes::MarkovSpec;

    #[test]
    fn empty_consistency_table_is_header_only() {
        let r = ConsistencyReport {
            source: "none".into(),
            config: ExperimentConfig {
                grid: vec![],
                seeds: vec![],
                oracle: OracleKind::Lz78,
            },
            true_order: None,
            rows: vec![],
            summary: vec![],
        };
        assert_eq!(
            render_report(Report::Consistency(&r), ReportFormat::Table),
            "n\tseed\torder\n"
        );
    }

    #[test]
    fn summary_echoes_version_and_config() {
        let src = Source::markov(MarkovSpec::iid(vec![0.5, 0.5]).unwrap());
        let cfg = ExperimentConfig::dyadic(4, 6, 2, 9, OracleKind::Lz78).unwrap();
        let r = run_markov_consistency(&src, &cfg).unwrap();
        let s = render_report(Report::Consistency(&r), ReportFormat::Summary);
        assert!(s.starts_with("tool=perigraph\nversion="));
        assert!(s.contains("config.grid=16,32,64\n"));
        assert!(s.contains("config.seed_list=9,10\n"));
        assert!(s.contains("true_order=0\n"));
    }

    #[test]
    fn format_names() {
        assert_eq!(
            "table".parse::<ReportFormat>().unwrap(),
            ReportFormat::Table
        );
        assert!("json".parse::<ReportFormat>().is_err());
    }
}
