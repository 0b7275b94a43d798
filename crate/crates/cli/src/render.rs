use std::io::Write;

use serde::Serialize;

use genocchi_core::verify::IdentityReport;
use genocchi_core::{FamilySpec, FamilyValue, Rational, TermRecord};

#[derive(Serialize)]
struct TableRow<'a> {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<Rational>,
    terms: &'a genocchi_core::BivarPoly,
}

#[derive(Serialize)]
struct Table<'a> {
    family: &'a str,
    j: Option<u32>,
    a: Option<u32>,
    numbers: bool,
    n_max: usize,
    rows: Vec<TableRow<'a>>,
}

pub fn table_json(
    out: &mut dyn Write,
    spec: &FamilySpec,
    symbolic: bool,
    n_max: usize,
    rows: &[FamilyValue],
) -> anyhow::Result<()> {
    let table = Table {
        family: spec.family.name(),
        j: spec.j,
        a: spec.a,
        numbers: !symbolic,
        n_max,
        rows: rows
            .iter()
            .map(|r| TableRow {
                n: r.n,
                value: if symbolic {
                    None
                } else {
                    r.value.as_constant()
                },
                terms: &r.value,
            })
            .collect(),
    };
    serde_json::to_writer_pretty(&mut *out, &table)?;
    writeln!(out)?;
    Ok(())
}

/// `degx:degy:p/q` tokens joined by `;`, highest terms first.
pub fn monomial_tokens(records: &[TermRecord]) -> String {
    records
        .iter()
        .map(|t| format!("{}:{}:{}", t.degx, t.degy, t.coeff))
        .collect::<Vec<_>>()
        .join(";")
}

pub fn table_csv(out: &mut dyn Write, symbolic: bool, rows: &[FamilyValue]) -> anyhow::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(["n", if symbolic { "terms" } else { "value" }])?;
    for row in rows {
        let cell = if symbolic {
            monomial_tokens(&row.value.to_records())
        } else {
            row.value
                .as_constant()
                .expect("number rows are constant")
                .to_string()
        };
        w.write_record([row.n.to_string(), cell])?;
    }
    w.flush()?;
    Ok(())
}

#[derive(Serialize)]
pub struct EvalPoint<'a> {
    #[serde(flatten)]
    pub spec: &'a FamilySpec,
    pub n: usize,
    pub numbers: bool,
    pub x: &'a Rational,
    pub y: &'a Rational,
    pub value: &'a Rational,
}

pub fn eval_json(out: &mut dyn Write, point: &EvalPoint) -> anyhow::Result<()> {
    serde_json::to_writer(&mut *out, point)?;
    writeln!(out)?;
    Ok(())
}

pub fn eval_csv(out: &mut dyn Write, point: &EvalPoint) -> anyhow::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    let opt = |v: Option<u32>| v.map(|v| v.to_string()).unwrap_or_default();
    w.write_record(["family", "j", "a", "n", "x", "y", "value"])?;
    w.write_record([
        point.spec.family.name().to_string(),
        opt(point.spec.j),
        opt(point.spec.a),
        point.n.to_string(),
        point.x.to_string(),
        point.y.to_string(),
        point.value.to_string(),
    ])?;
    w.flush()?;
    Ok(())
}

/// One JSON object per line, in report order.
pub fn reports_json(out: &mut dyn Write, reports: &[IdentityReport]) -> anyhow::Result<()> {
    for r in reports {
        serde_json::to_writer(&mut *out, &r.to_record())?;
        writeln!(out)?;
    }
    Ok(())
}

pub fn reports_csv(out: &mut dyn Write, reports: &[IdentityReport]) -> anyhow::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record([
        "identity",
        "status",
        "cases",
        "failures",
        "observations",
        "elapsed_ms",
    ])?;
    for r in reports {
        let rec = r.to_record();
        w.write_record([
            rec.identity,
            serde_json::to_value(rec.status)?
                .as_str()
                .unwrap_or_default()
                .to_string(),
            rec.grid.len().to_string(),
            rec.failures.len().to_string(),
            rec.observations.len().to_string(),
            rec.elapsed_ms.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
