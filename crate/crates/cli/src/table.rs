//! CSV rows, one per zero, gap, triple, grid point, bound or sweep issue.
//! Every file starts with a header and a `kind` column.

use std::io;
use std::path::Path;

use ortho_zeros::bounds::Side;
use ortho_zeros::convexity::Provenance;
use ortho_zeros::sweep::{IssueKind, SweepSummary};
use ortho_zeros::{BoundSource, BoundSuiteReport, Label, Verdict, ZeroSet};
use serde::Serialize;

use crate::report::{ClassificationPayload, NormalFormPayload, Payload};

#[derive(Serialize)]
struct ZeroRow {
    kind: &'static str,
    k: usize,
    value: f64,
}

#[derive(Serialize)]
struct PointRow {
    kind: &'static str,
    t: f64,
    f: f64,
    j: Option<f64>,
}

#[derive(Clone, Copy, Serialize)]
struct ClassifyRow {
    kind: &'static str,
    k: usize,
    lo: Option<f64>,
    hi: Option<f64>,
    label: Option<Label>,
    provenance: Option<Provenance>,
    second_difference: Option<f64>,
    sign: Option<i8>,
    verdict: Option<Verdict>,
    piece: Option<usize>,
}

#[derive(Serialize)]
struct BoundRow {
    kind: &'static str,
    k: usize,
    x_k: f64,
    x_k1: f64,
    spacing: f64,
    side: Side,
    source: BoundSource,
    bound: f64,
    satisfied: bool,
    margin: f64,
}

#[derive(Serialize)]
struct SweepRow {
    kind: &'static str,
    name: Option<&'static str>,
    count: Option<usize>,
    spec: Option<String>,
    issue: Option<IssueKind>,
    k: Option<usize>,
    detail: Option<String>,
    margin: Option<f64>,
}

pub fn write_csv(path: &Path, payload: &Payload) -> io::Result<()> {
    let mut w = csv::Writer::from_path(path)?;
    match payload {
        Payload::Zeros(zs) => zero_rows(&mut w, zs)?,
        Payload::NormalForm(nf) => point_rows(&mut w, nf)?,
        Payload::Classification(c) => classify_rows(&mut w, c)?,
        Payload::Bounds(b) => bound_rows(&mut w, b)?,
        Payload::Sweep(s) => sweep_rows(&mut w, s)?,
    }
    w.flush()
}

type Writer = csv::Writer<std::fs::File>;

fn zero_rows(w: &mut Writer, zs: &ZeroSet) -> csv::Result<()> {
    let series = [
        ("zero", &zs.zeros),
        ("gap", &zs.spacings),
        ("triple", &zs.second_differences),
    ];
    for (kind, values) in series {
        for (i, &value) in values.iter().enumerate() {
            w.serialize(ZeroRow {
                kind,
                k: i + 1,
                value,
            })?;
        }
    }
    Ok(())
}

fn point_rows(w: &mut Writer, nf: &NormalFormPayload) -> csv::Result<()> {
    for p in &nf.grid {
        w.serialize(PointRow {
            kind: "point",
            t: p.t,
            f: p.f,
            j: p.j,
        })?;
    }
    Ok(())
}

fn classify_rows(w: &mut Writer, c: &ClassificationPayload) -> csv::Result<()> {
    let blank = ClassifyRow {
        kind: "",
        k: 0,
        lo: None,
        hi: None,
        label: None,
        provenance: None,
        second_difference: None,
        sign: None,
        verdict: None,
        piece: None,
    };
    for (i, p) in c.report.partition.iter().enumerate() {
        w.serialize(ClassifyRow {
            kind: "piece",
            k: i + 1,
            lo: Some(p.interval.lo),
            hi: Some(p.interval.hi),
            label: Some(p.label),
            provenance: Some(p.provenance),
            ..blank
        })?;
    }
    if let Some(emp) = &c.empirical {
        for t in &emp.triples {
            w.serialize(ClassifyRow {
                kind: "triple",
                k: t.k,
                second_difference: Some(t.second_difference),
                sign: Some(t.sign),
                verdict: Some(t.verdict),
                piece: t.piece,
                ..blank
            })?;
        }
    }
    Ok(())
}

fn bound_rows(w: &mut Writer, b: &BoundSuiteReport) -> csv::Result<()> {
    for r in &b.records {
        let sides = [
            (
                Side::Lower,
                r.lower,
                r.lower_source,
                r.lower_satisfied,
                r.lower_margin,
            ),
            (
                Side::Upper,
                r.upper,
                r.upper_source,
                r.upper_satisfied,
                r.upper_margin,
            ),
        ];
        for (side, bound, source, satisfied, margin) in sides {
            let (Some(bound), Some(source), Some(satisfied), Some(margin)) =
                (bound, source, satisfied, margin)
            else {
                continue;
            };
            w.serialize(BoundRow {
                kind: "bound",
                k: r.k,
                x_k: r.x_k,
                x_k1: r.x_k1,
                spacing: r.spacing,
                side,
                source,
                bound,
                satisfied,
                margin,
            })?;
        }
    }
    Ok(())
}

fn sweep_rows(w: &mut Writer, s: &SweepSummary) -> csv::Result<()> {
    let t = &s.totals;
    let totals = [
        ("specs_run", t.specs_run),
        ("specs_failed", t.specs_failed),
        ("triples_classified", t.triples_classified),
        ("agreements", t.agreements),
        ("disagreements", t.disagreements),
        ("straddles", t.straddles),
        ("below_tolerance", t.below_tolerance),
        ("bound_checks", t.bound_checks),
        ("violations", t.violations),
        ("laguerre_literal_checks", t.laguerre_literal_checks),
        ("laguerre_literal_failures", t.laguerre_literal_failures),
        ("interlacing_checks", t.interlacing_checks),
        ("interlacing_failures", t.interlacing_failures),
        ("laguerre_concave_triples", t.laguerre_concave_triples),
    ];
    for (name, count) in totals {
        w.serialize(SweepRow {
            kind: "total",
            name: Some(name),
            count: Some(count),
            spec: None,
            issue: None,
            k: None,
            detail: None,
            margin: None,
        })?;
    }
    for issue in s
        .violation_details
        .iter()
        .chain(&s.laguerre_literal_details)
    {
        w.serialize(SweepRow {
            kind: "issue",
            name: None,
            count: None,
            spec: Some(issue.spec.to_string()),
            issue: Some(issue.kind),
            k: issue.k,
            detail: Some(issue.detail.clone()),
            margin: issue.margin,
        })?;
    }
    Ok(())
}
