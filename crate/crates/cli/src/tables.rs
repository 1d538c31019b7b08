//! The stored tables of certified codes, regenerated from scratch and
//! diffed against golden JSONL files.

use std::path::Path;

use bchcert::bounds::classify;
use bchcert::locator::{
    construct_nonprimitive_family, construct_qt_family, construct_small_delta, search_and_lift,
    Certificate, SearchOutcome,
};
use bchcert::oracle::{min_distance_full, min_distance_support, SupportOutcome};
use bchcert::record::{verify_certificate_record, CertificateRecord};
use bchcert::Error;
use clap::ValueEnum;
use serde::Serialize;
use serde_json::{json, Value};

use crate::{certificate_digest, certificate_json, CliError, CliResult, Output};
use crate::{EXIT_BAD_ARGS, EXIT_VALIDATION};

/// Messages enumerated by the full oracle column.
const FULL_ORACLE_LIMIT: u128 = 1 << 20;
/// Supports scanned by the support oracle column.
const SUPPORT_ORACLE_LIMIT: u128 = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Ternary,
    Quaternary,
    SmallDelta,
    #[value(alias = "qt-family")]
    #[serde(rename = "qt-family")]
    Qt,
    Nonprimitive,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Ternary,
        Family::Quaternary,
        Family::SmallDelta,
        Family::Qt,
        Family::Nonprimitive,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Ternary => "ternary",
            Family::Quaternary => "quaternary",
            Family::SmallDelta => "small-delta",
            Family::Qt => "qt-family",
            Family::Nonprimitive => "nonprimitive",
        }
    }
}

#[derive(Debug, Clone, Copy)]
enum Construction {
    /// Search at length `q^h - 1`, lift to `q^m - 1`.
    Lifted { q: u64, delta: usize, m: u32, h: u32 },
    SmallDelta { q: u64, m: u32, delta: usize },
    Qt { q: u64, t: u32, m: u32 },
    Nonprimitive { p: u32, e: u32, lambda: u64 },
}

impl Construction {
    fn q(self) -> u64 {
        match self {
            Construction::Lifted { q, .. }
            | Construction::SmallDelta { q, .. }
            | Construction::Qt { q, .. } => q,
            Construction::Nonprimitive { p, e, .. } => (p as u64).pow(e),
        }
    }

    fn params(self) -> Value {
        match self {
            Construction::Lifted { q, delta, m, h } => json!({"q": q, "delta": delta, "m": m, "h": h}),
            Construction::SmallDelta { q, m, delta } => json!({"q": q, "m": m, "delta": delta}),
            Construction::Qt { q, t, m } => json!({"q": q, "t": t, "m": m}),
            Construction::Nonprimitive { p, e, lambda } => json!({"p": p, "e": e, "lambda": lambda}),
        }
    }

    /// `None` when the lifted base search finds nothing.
    fn build(self) -> bchcert::Result<Option<Certificate>> {
        Ok(Some(match self {
            Construction::Lifted { q, delta, m, h } => match search_and_lift(q, delta, h, m, u64::MAX)? {
                SearchOutcome::Found(c) => c,
                SearchOutcome::Exhausted { .. } => return Ok(None),
            },
            Construction::SmallDelta { q, m, delta } => construct_small_delta(q, m, delta)?,
            Construction::Qt { q, t, m } => construct_qt_family(q, t, m)?,
            Construction::Nonprimitive { p, e, lambda } => construct_nonprimitive_family(p, e, lambda)?,
        }))
    }
}

#[derive(Debug, Clone, Copy)]
struct RowDef {
    construction: Construction,
    n: usize,
    k: usize,
    d: usize,
    d_best: Option<usize>,
}

const fn row(construction: Construction, n: usize, k: usize, d: usize, d_best: Option<usize>) -> RowDef {
    RowDef {
        construction,
        n,
        k,
        d,
        d_best,
    }
}

const fn lifted(q: u64, delta: usize, m: u32, h: u32) -> Construction {
    Construction::Lifted { q, delta, m, h }
}

const fn qt(q: u64, t: u32, m: u32) -> Construction {
    Construction::Qt { q, t, m }
}

const fn np(p: u32, e: u32, lambda: u64) -> Construction {
    Construction::Nonprimitive { p, e, lambda }
}

const fn sd(q: u64, m: u32, delta: usize) -> Construction {
    Construction::SmallDelta { q, m, delta }
}

const TERNARY: [RowDef; 8] = [
    row(lifted(3, 5, 3, 3), 26, 17, 5, Some(6)),
    row(lifted(3, 5, 4, 2), 80, 68, 5, Some(6)),
    row(lifted(3, 5, 6, 3), 728, 710, 5, None),
    row(lifted(3, 7, 3, 3), 26, 14, 7, Some(7)),
    row(lifted(3, 7, 4, 4), 80, 64, 7, Some(8)),
    row(lifted(3, 7, 6, 3), 728, 704, 7, None),
    row(lifted(3, 8, 3, 3), 26, 11, 8, Some(9)),
    row(lifted(3, 8, 6, 3), 728, 698, 8, None),
];

const QUATERNARY: [RowDef; 9] = [
    row(lifted(4, 5, 2, 2), 15, 9, 5, Some(5)),
    row(lifted(4, 5, 3, 3), 63, 54, 5, Some(5)),
    row(lifted(4, 5, 4, 2), 255, 243, 5, Some(5)),
    row(lifted(4, 6, 2, 2), 15, 8, 6, Some(6)),
    row(lifted(4, 6, 3, 3), 63, 51, 6, Some(6)),
    row(lifted(4, 6, 4, 2), 255, 239, 6, Some(6)),
    row(lifted(4, 7, 2, 2), 15, 6, 7, Some(8)),
    row(lifted(4, 7, 3, 3), 63, 48, 7, Some(8)),
    row(lifted(4, 7, 4, 2), 255, 235, 7, Some(8)),
];

const SMALL_DELTA: [RowDef; 4] = [
    row(sd(3, 2, 2), 8, 6, 2, Some(2)),
    row(sd(3, 3, 2), 26, 23, 2, Some(2)),
    row(sd(4, 2, 3), 15, 11, 3, Some(4)),
    row(sd(4, 3, 3), 63, 57, 3, Some(4)),
];

const QT: [RowDef; 14] = [
    row(qt(2, 1, 4), 15, 11, 3, Some(3)),
    row(qt(2, 1, 6), 63, 57, 3, Some(3)),
    row(qt(2, 1, 8), 255, 247, 3, Some(3)),
    row(qt(2, 2, 4), 15, 7, 5, Some(5)),
    row(qt(2, 2, 8), 255, 239, 5, Some(5)),
    row(qt(2, 3, 6), 63, 39, 9, Some(9)),
    row(qt(2, 4, 8), 255, 191, 17, Some(17)),
    row(qt(3, 1, 3), 26, 20, 4, Some(4)),
    row(qt(3, 1, 6), 728, 716, 4, None),
    row(qt(3, 2, 6), 728, 692, 10, None),
    row(qt(4, 1, 2), 15, 9, 5, Some(5)),
    row(qt(4, 1, 4), 255, 243, 5, Some(5)),
    row(qt(4, 2, 4), 255, 207, 17, Some(17)),
    row(qt(5, 1, 5), 3124, 3104, 6, None),
];

const NONPRIMITIVE: [RowDef; 6] = [
    row(np(3, 1, 2), 13, 7, 4, Some(5)),
    row(np(5, 1, 4), 781, 761, 6, None),
    row(np(5, 1, 2), 1562, 1542, 6, None),
    row(np(3, 2, 8), 91, 82, 4, Some(5)),
    row(np(3, 2, 4), 182, 173, 4, None),
    row(np(3, 2, 2), 364, 355, 4, None),
];

fn rows_of(family: Family) -> &'static [RowDef] {
    match family {
        Family::Ternary => &TERNARY,
        Family::Quaternary => &QUATERNARY,
        Family::SmallDelta => &SMALL_DELTA,
        Family::Qt => &QT,
        Family::Nonprimitive => &NONPRIMITIVE,
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub family: Family,
    pub params: Value,
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub d_best: Option<usize>,
    pub certificate_digest: Option<String>,
    pub class: Option<&'static str>,
    pub oracle_d: Option<usize>,
    pub status: String,
}

fn label(def: &RowDef) -> String {
    format!("[{},{},{}]_{}", def.n, def.k, def.d, def.construction.q())
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Independent distance check for rows small enough to enumerate.
fn oracle_distance(cert: &Certificate) -> Result<Option<usize>, CliError> {
    let code = cert.code();
    let (n, k, d) = (code.n(), code.dimension(), cert.weight());
    let messages = (code.q() as u128).checked_pow(k as u32).unwrap_or(u128::MAX);
    if messages <= FULL_ORACLE_LIMIT {
        return Ok(Some(min_distance_full(code)?.d));
    }
    if binomial(n - 1, d - 1) <= SUPPORT_ORACLE_LIMIT {
        return Ok(match min_distance_support(code, d, u64::MAX)? {
            SupportOutcome::Found(r) => Some(r.d),
            SupportOutcome::LowerBoundOnly(lb) => Some(lb),
        });
    }
    Ok(None)
}

fn regenerate(family: Family, def: &RowDef) -> Result<TableRow, CliError> {
    let mut out = TableRow {
        family,
        params: def.construction.params(),
        n: def.n,
        k: def.k,
        d: None,
        d_best: def.d_best,
        certificate_digest: None,
        class: None,
        oracle_d: None,
        status: "ok".into(),
    };
    let cert = match def.construction.build() {
        Ok(Some(c)) => c,
        Ok(None) => {
            return Err(CliError::new(
                EXIT_VALIDATION,
                "NoCertificate",
                format!("{}: base search found no locator set", label(def)),
            ))
        }
        Err(Error::FieldTooLarge { .. }) => {
            out.status = "skipped: cap".into();
            return Ok(out);
        }
        Err(e) => return Err(e.into()),
    };
    let compact = certificate_json(&cert);
    let parsed: CertificateRecord =
        serde_json::from_str(&compact).map_err(|e| CliError::new(EXIT_VALIDATION, "Parse", e.to_string()))?;
    let reloaded = verify_certificate_record(&parsed)?;
    if certificate_json(&reloaded) != compact {
        return Err(CliError::new(
            EXIT_VALIDATION,
            "RecordMismatch",
            format!("{}: certificate changes on reload", label(def)),
        ));
    }

    let code = cert.code();
    let (n, k, d) = (code.n(), code.dimension(), cert.weight());
    let mut bad = Vec::new();
    for (cell, got, want) in [("n", n, def.n), ("k", k, def.k), ("d", d, def.d)] {
        if got != want {
            bad.push(format!("{cell}: expected {want}, got {got}"));
        }
    }
    let oracle_d = oracle_distance(&cert)?;
    if let Some(od) = oracle_d.filter(|&od| od != d) {
        bad.push(format!("oracle_d: certificate weight {d}, oracle {od}"));
    }
    if !bad.is_empty() {
        let mut e = CliError::new(EXIT_VALIDATION, "RowMismatch", format!("{}: {}", label(def), bad.join("; ")));
        e.details = json!(bad);
        return Err(e);
    }
    out.d = Some(d);
    out.certificate_digest = Some(certificate_digest(&compact));
    out.class = Some(classify(n, k, d, code.q()).classification.as_str());
    out.oracle_d = oracle_d;
    Ok(out)
}

/// Rebuilds every row of `family`, one thread per row, in table order.
pub fn regenerate_table(family: Family) -> Result<Vec<TableRow>, CliError> {
    let defs = rows_of(family);
    std::thread::scope(|s| {
        let handles: Vec<_> = defs
            .iter()
            .map(|def| s.spawn(move || regenerate(family, def)))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("row worker panicked"))
            .collect()
    })
}

pub fn to_jsonl(rows: &[TableRow]) -> String {
    rows.iter()
        .map(|r| serde_json::to_string(r).expect("serializable") + "\n")
        .collect()
}

/// Cell-level differences between golden and fresh JSONL.
pub fn diff_jsonl(golden: &str, fresh: &str) -> Vec<String> {
    let parse = |s: &str| -> Vec<Value> {
        s.lines()
            .filter(|l| !l.trim().is_empty())
            .map(|l| serde_json::from_str(l).unwrap_or(Value::String(l.into())))
            .collect()
    };
    let (old, new) = (parse(golden), parse(fresh));
    let mut diffs = Vec::new();
    if old.len() != new.len() {
        diffs.push(format!("row count: golden {}, fresh {}", old.len(), new.len()));
    }
    for (i, (a, b)) in old.iter().zip(&new).enumerate() {
        match (a.as_object(), b.as_object()) {
            (Some(a), Some(b)) => {
                let mut keys: Vec<&String> = a.keys().chain(b.keys()).collect();
                keys.sort();
                keys.dedup();
                for key in keys {
                    let (x, y) = (a.get(key), b.get(key));
                    if x != y {
                        let show = |v: Option<&Value>| v.map_or("missing".to_string(), |v| v.to_string());
                        diffs.push(format!("row {}: {key}: golden {}, fresh {}", i + 1, show(x), show(y)));
                    }
                }
            }
            _ if a != b => diffs.push(format!("row {}: unparseable", i + 1)),
            _ => {}
        }
    }
    diffs
}

fn render(rows: &[TableRow]) -> String {
    let opt = |v: Option<usize>| v.map_or("/".to_string(), |v| v.to_string());
    let mut lines = vec![[
        "code".to_string(),
        "params".into(),
        "d_best".into(),
        "oracle".into(),
        "class".into(),
        "digest".into(),
    ]];
    for r in rows {
        let q = match (&r.params["q"], &r.params["p"], &r.params["e"]) {
            (Value::Number(q), _, _) => q.as_u64().unwrap_or(0),
            (_, Value::Number(p), Value::Number(e)) => {
                p.as_u64().unwrap_or(0).pow(e.as_u64().unwrap_or(0) as u32)
            }
            _ => 0,
        };
        let params = r
            .params
            .as_object()
            .map(|m| m.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" "))
            .unwrap_or_default();
        let code = format!("[{},{},{}]_{}", r.n, r.k, opt(r.d), q);
        let digest = match &r.certificate_digest {
            Some(d) => d[..16].to_string(),
            None => r.status.clone(),
        };
        lines.push([
            code,
            params,
            opt(r.d_best),
            r.oracle_d.map_or("-".to_string(), |v| v.to_string()),
            r.class.unwrap_or("-").to_string(),
            digest,
        ]);
    }
    let widths: Vec<usize> = (0..6).map(|c| lines.iter().map(|l| l[c].len()).max().unwrap_or(0)).collect();
    lines
        .iter()
        .map(|l| {
            let cells: Vec<String> = l.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            cells.join("  ").trim_end().to_string() + "\n"
        })
        .collect()
}

pub fn run_table(family: Family, seed_dir: Option<&Path>, update: bool) -> CliResult {
    let rows = regenerate_table(family)?;
    let fresh = to_jsonl(&rows);
    let mut golden_status = Value::Null;
    if let Some(dir) = seed_dir {
        let path = dir.join(format!("{}.jsonl", family.name()));
        let io = |e: std::io::Error| CliError::new(EXIT_BAD_ARGS, "Io", format!("{}: {e}", path.display()));
        if update {
            std::fs::write(&path, &fresh).map_err(io)?;
            golden_status = json!("updated");
        } else {
            let golden = std::fs::read_to_string(&path).map_err(io)?;
            let diffs = diff_jsonl(&golden, &fresh);
            if !diffs.is_empty() {
                let mut e = CliError::new(
                    EXIT_VALIDATION,
                    "RowMismatch",
                    format!("{} cell(s) differ from {}", diffs.len(), path.display()),
                );
                e.details = json!(diffs);
                return Err(e);
            }
            golden_status = json!("matched");
        }
    }
    let json = json!({
        "family": family,
        "rows": rows,
        "golden": golden_status,
    });
    let mut text = render(&rows);
    if let Some(s) = golden_status.as_str() {
        text += &format!("golden: {s}\n");
    }
    Ok(Output { json, text })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diff_reports_cells() {
        let a = "{\"n\":26,\"k\":17}\n";
        let b = "{\"n\":26,\"k\":18}\n";
        assert!(diff_jsonl(a, a).is_empty());
        assert_eq!(diff_jsonl(a, b), vec!["row 1: k: golden 17, fresh 18"]);
        assert_eq!(diff_jsonl(a, "").len(), 1);
    }

    #[test]
    fn small_delta_rows() {
        let rows = regenerate_table(Family::SmallDelta).unwrap();
        let codes: Vec<_> = rows.iter().map(|r| (r.n, r.k, r.d)).collect();
        assert_eq!(
            codes,
            vec![(8, 6, Some(2)), (26, 23, Some(2)), (15, 11, Some(3)), (63, 57, Some(3))]
        );
        assert_eq!(rows[0].oracle_d, Some(2));
        assert_eq!(rows[0].class, Some("sphere-packing-optimal"));
        assert!(rows.iter().all(|r| r.status == "ok"));
    }

    #[test]
    fn regeneration_is_stable() {
        let a = to_jsonl(&regenerate_table(Family::Nonprimitive).unwrap());
        let b = to_jsonl(&regenerate_table(Family::Nonprimitive).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn row_tables_have_expected_sizes() {
        let sizes: Vec<usize> = Family::ALL.iter().map(|&f| rows_of(f).len()).collect();
        assert_eq!(sizes, vec![8, 9, 4, 14, 6]);
    }
}
