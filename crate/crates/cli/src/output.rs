use std::io::Write;

use anyhow::Result;
use clap::ValueEnum;
use semigroup_ranks::ranks::ReportRecord;
use semigroup_ranks::verify::TheoremCheck;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Csv,
}

fn tag<T: Serialize>(value: &T) -> String {
    match serde_json::to_value(value) {
        Ok(serde_json::Value::String(s)) => s,
        other => format!("{other:?}"),
    }
}

#[derive(Serialize)]
pub struct RankOutput {
    pub universe: String,
    pub n: usize,
    pub size: usize,
    pub reports: Vec<ReportRecord>,
}

pub fn write_reports(out: &mut impl Write, format: Format, data: &RankOutput) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(data)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["rank", "value", "status", "method", "elapsed_ms", "certified_lower", "witness"])?;
            for r in &data.reports {
                w.write_record([
                    tag(&r.rank),
                    r.value.to_string(),
                    tag(&r.status),
                    tag(&r.method),
                    r.elapsed_ms.to_string(),
                    r.certified_lower.map(|c| c.to_string()).unwrap_or_default(),
                    r.witness.join(" "),
                ])?;
            }
            w.flush()?;
        }
        Format::Table => {
            writeln!(out, "{} at n = {} ({} elements)", data.universe, data.n, data.size)?;
            writeln!(out, "{:<6} {:>6}  {:<12} {:<18} {:>9}  witness", "rank", "value", "status", "method", "elapsed")?;
            for r in &data.reports {
                writeln!(
                    out,
                    "{:<6} {:>6}  {:<12} {:<18} {:>7}ms  {{{}}}",
                    tag(&r.rank),
                    r.value,
                    tag(&r.status),
                    tag(&r.method),
                    r.elapsed_ms,
                    abbreviate(&r.witness)
                )?;
                if let Some(c) = r.certified_lower {
                    writeln!(out, "       certified lower bound: {c}")?;
                }
                if let Some(note) = &r.note {
                    writeln!(out, "       note: {note}")?;
                }
            }
        }
    }
    Ok(())
}

/// Long witnesses are cut short in tables; json and csv carry them whole.
fn abbreviate(witness: &[String]) -> String {
    const SHOWN: usize = 8;
    if witness.len() <= SHOWN {
        return witness.join(", ");
    }
    format!("{}, ... {} more", witness[..SHOWN].join(", "), witness.len() - SHOWN)
}

pub fn write_checks(out: &mut impl Write, format: Format, checks: &[TheoremCheck]) -> Result<()> {
    match format {
        Format::Json => writeln!(out, "{}", serde_json::to_string_pretty(checks)?)?,
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["id", "n", "outcome", "description", "details"])?;
            for c in checks {
                w.write_record([&c.id, &c.n.to_string(), &tag(&c.outcome), &c.description, &c.details])?;
            }
            w.flush()?;
        }
        Format::Table => {
            let width = checks.iter().map(|c| c.id.len()).max().unwrap_or(0);
            for c in checks {
                writeln!(out, "{:<width$}  {:<18}  {}", c.id, c.outcome.to_string(), c.details)?;
            }
        }
    }
    Ok(())
}
