//! Command implementations behind the `bchcert` binary.
//!
//! Every command produces an [`Output`] holding both a JSON value and a
//! human-readable rendering; `main` picks one according to `--json`.

use std::path::PathBuf;
use std::sync::Arc;

use bchcert::bch::{build_code, dimension_closed_form};
use bchcert::bounds::classify;
use bchcert::locator::{
    construct_nonprimitive_family, construct_qt_family, construct_small_delta, search_and_lift,
    search_certificate, Certificate, SearchOutcome,
};
use bchcert::oracle::{min_distance_full, min_distance_support, OracleResult, SupportOutcome};
use bchcert::record::{verify_certificate_record, CertificateRecord, CodeRecord};
use bchcert::Error;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub mod tables;

pub use tables::Family;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VALIDATION: u8 = 2;
pub const EXIT_RESOURCE: u8 = 3;
pub const EXIT_BAD_ARGS: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "bchcert", version, about = "BCH codes with certified minimum distance")]
pub struct Cli {
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Parameters of the narrow-sense code C(q, n, δ, b).
    Info {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 1)]
        b: usize,
    },
    /// Construct and verify a minimum-weight certificate.
    Certify {
        #[command(subcommand)]
        family: CertifyFamily,
        /// Also write the certificate JSON to this file.
        #[arg(long, global = true)]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate JSON file from scratch.
    Verify { path: PathBuf },
    /// Regenerate one of the stored tables.
    Table {
        family: Family,
        /// Directory holding `<family>.jsonl` golden files to diff against.
        #[arg(long)]
        seed_dir: Option<PathBuf>,
        /// Overwrite the golden file instead of diffing.
        #[arg(long, requires = "seed_dir")]
        update: bool,
    },
    /// Brute-force minimum distance.
    Oracle {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = 1)]
        b: usize,
        /// Scan supports up to this weight instead of enumerating all messages.
        #[arg(long)]
        w_max: Option<usize>,
        #[arg(long, default_value_t = u64::MAX)]
        budget: u64,
    },
    /// Sphere-packing report for (n, k, d)_q.
    Bound {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        q: u64,
    },
}

#[derive(Debug, Subcommand)]
pub enum CertifyFamily {
    /// C(q, q^m - 1, δ, 1) with 2 ≤ δ ≤ q - 1.
    SmallDelta {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        delta: usize,
    },
    /// C(q, q^m - 1, q^t + 1, 1) from the roots of x^{q^t} - x^{q^t - 1} + 1.
    Qt {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        m: u32,
    },
    /// C(p^e, (p^{ep} - 1)/λ, p + 1, 1) from the roots of x^p + x^{p-1} + … - 1.
    Nonprimitive {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        e: u32,
        #[arg(long)]
        lambda: u64,
    },
    /// Exhaustive locator search in C(q, n, δ, 1).
    Search {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        delta: usize,
        #[arg(long, default_value_t = u64::MAX)]
        budget: u64,
    },
    /// Search C(q, q^h - 1, δ, 1) and lift the result to length q^m - 1.
    Lifted {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        delta: usize,
        #[arg(long)]
        h: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value_t = u64::MAX)]
        budget: u64,
    },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub json: Value,
    pub text: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CliError {
    pub exit_code: u8,
    pub kind: String,
    pub message: String,
    pub details: Value,
}

impl CliError {
    pub fn new(exit_code: u8, kind: &str, message: impl Into<String>) -> Self {
        CliError {
            exit_code,
            kind: kind.into(),
            message: message.into(),
            details: Value::Null,
        }
    }

    pub fn to_json(&self) -> Value {
        let mut v = json!({
            "error": self.kind,
            "message": self.message,
            "exit_code": self.exit_code,
        });
        if !self.details.is_null() {
            v["details"] = self.details.clone();
        }
        v
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::FieldTooLarge { .. } | Error::TooLarge { .. } | Error::BudgetExceeded { .. } => {
                EXIT_RESOURCE
            }
            Error::CriterionFailed { .. }
            | Error::RecordMismatch(_)
            | Error::NormCheckFailed { .. }
            | Error::Internal(_) => EXIT_VALIDATION,
            _ => EXIT_BAD_ARGS,
        };
        CliError::new(code, e.kind(), e.to_string())
    }
}

pub type CliResult = Result<Output, CliError>;

pub fn run(cli: &Cli) -> CliResult {
    match &cli.command {
        Command::Info { q, n, delta, b } => info(*q, *n, *delta, *b),
        Command::Certify { family, out } => certify(family, out.as_deref()),
        Command::Verify { path } => verify(path),
        Command::Table {
            family,
            seed_dir,
            update,
        } => tables::run_table(*family, seed_dir.as_deref(), *update),
        Command::Oracle {
            q,
            n,
            delta,
            b,
            w_max,
            budget,
        } => oracle(*q, *n, *delta, *b, *w_max, *budget),
        Command::Bound { n, k, d, q } => bound(*n, *k, *d, *q),
    }
}

pub fn info(q: u64, n: usize, delta: usize, b: usize) -> CliResult {
    let code = build_code(q, n, delta, b)?;
    let k = code.dimension();
    let closed = if b == 1 {
        dimension_closed_form(q, n, delta).ok()
    } else {
        None
    };
    let bose = code.bose_distance().ok();
    let bch_bound = code.bch_bound();
    let note = match k {
        0 => Some("zero code"),
        1 => Some("repetition-like: dimension 1"),
        _ => None,
    };
    let mut v = serde_json::to_value(CodeRecord::of(&code)).expect("serializable");
    v["k_closed_form"] = json!(closed);
    v["bose_distance"] = json!(bose);
    v["bch_bound"] = json!(bch_bound.min(n));
    v["degenerate"] = json!(note);

    let mut text = format!(
        "C({q}, {n}, {delta}, {b})\n  n = {n}\n  m = {}\n  k = {k}\n",
        code.m()
    );
    match closed {
        Some(c) => text += &format!("  k (closed form) = {c}\n"),
        None => text += "  k (closed form) = out of range\n",
    }
    match bose {
        Some(d) => text += &format!("  Bose distance = {d}\n"),
        None => text += "  Bose distance = n/a (not narrow-sense)\n",
    }
    text += &format!(
        "  BCH bound = {}\n  defining set size = {}\n",
        bch_bound.min(n),
        code.defining_set().len()
    );
    if let Some(note) = note {
        text += &format!("  degenerate: {note}\n");
    }
    Ok(Output { json: v, text })
}

fn build_certificate(family: &CertifyFamily) -> Result<Certificate, CliError> {
    let cert = match *family {
        CertifyFamily::SmallDelta { q, m, delta } => construct_small_delta(q, m, delta)?,
        CertifyFamily::Qt { q, t, m } => construct_qt_family(q, t, m)?,
        CertifyFamily::Nonprimitive { p, e, lambda } => construct_nonprimitive_family(p, e, lambda)?,
        CertifyFamily::Search {
            q,
            n,
            delta,
            budget,
        } => {
            let code = Arc::new(build_code(q, n, delta, 1)?);
            found(search_certificate(code, budget)?, delta)?
        }
        CertifyFamily::Lifted {
            q,
            delta,
            h,
            m,
            budget,
        } => found(search_and_lift(q, delta, h, m, budget)?, delta)?,
    };
    cert.verify()?;
    Ok(cert)
}

fn found(outcome: SearchOutcome, delta: usize) -> Result<Certificate, CliError> {
    match outcome {
        SearchOutcome::Found(c) => Ok(c),
        SearchOutcome::Exhausted { examined } => {
            let mut e = CliError::new(
                EXIT_VALIDATION,
                "NoCertificate",
                format!("no locator set of size {} passes the criterion", delta - 1),
            );
            e.details = json!({ "examined": examined });
            Err(e)
        }
    }
}

pub fn certificate_json(cert: &Certificate) -> String {
    serde_json::to_string(&CertificateRecord::of(cert)).expect("serializable")
}

/// Hex SHA-256 of the compact certificate JSON.
pub fn certificate_digest(json: &str) -> String {
    hex::encode(Sha256::digest(json.as_bytes()))
}

fn describe(cert: &Certificate) -> String {
    let code = cert.code();
    let support: Vec<String> = cert.codeword().positions().iter().map(|i| i.to_string()).collect();
    format!(
        "[{},{},{}]_{} certified: weight-{} codeword on positions {{{}}}\n",
        code.n(),
        code.dimension(),
        cert.weight(),
        code.q(),
        cert.weight(),
        support.join(", ")
    )
}

pub fn certify(family: &CertifyFamily, out: Option<&std::path::Path>) -> CliResult {
    let cert = build_certificate(family)?;
    let compact = certificate_json(&cert);
    if let Some(path) = out {
        std::fs::write(path, format!("{compact}\n")).map_err(|e| {
            CliError::new(EXIT_BAD_ARGS, "Io", format!("{}: {e}", path.display()))
        })?;
    }
    let json: Value = serde_json::from_str(&compact).expect("round trip");
    let text = describe(&cert) + &format!("digest {}\n", certificate_digest(&compact));
    Ok(Output { json, text })
}

pub fn verify(path: &std::path::Path) -> CliResult {
    let raw = std::fs::read_to_string(path)
        .map_err(|e| CliError::new(EXIT_BAD_ARGS, "Io", format!("{}: {e}", path.display())))?;
    let rec: CertificateRecord = serde_json::from_str(&raw)
        .map_err(|e| CliError::new(EXIT_VALIDATION, "Parse", e.to_string()))?;
    let cert = verify_certificate_record(&rec).map_err(|e| {
        let mut err = CliError::from(e);
        if err.exit_code == EXIT_BAD_ARGS {
            err.exit_code = EXIT_VALIDATION;
        }
        err
    })?;
    let code = cert.code();
    let json = json!({
        "valid": true,
        "q": code.q(),
        "n": code.n(),
        "k": code.dimension(),
        "weight": cert.weight(),
        "digest": certificate_digest(&certificate_json(&cert)),
    });
    Ok(Output {
        json,
        text: format!("valid: {}", describe(&cert)),
    })
}

fn oracle_json(r: &OracleResult) -> Value {
    json!({
        "d": r.d,
        "witness_support": r.witness.positions(),
        "method": r.method,
        "enumerated": r.enumerated,
    })
}

pub fn oracle(q: u64, n: usize, delta: usize, b: usize, w_max: Option<usize>, budget: u64) -> CliResult {
    let code = build_code(q, n, delta, b)?;
    let result = match w_max {
        None => min_distance_full(&code)?,
        Some(w) => match min_distance_support(&code, w, budget)? {
            SupportOutcome::Found(r) => r,
            SupportOutcome::LowerBoundOnly(lb) => {
                return Ok(Output {
                    json: json!({
                        "d": null,
                        "d_lower_bound": lb,
                        "witness_support": null,
                        "method": "support-enumeration",
                    }),
                    text: format!("no codeword of weight <= {w}; d >= {lb}\n"),
                })
            }
        },
    };
    let json = oracle_json(&result);
    let text = format!(
        "d = {} ({}, {} enumerated)\nwitness support {:?}\n",
        result.d,
        json["method"].as_str().unwrap_or_default(),
        result.enumerated,
        result.witness.positions()
    );
    Ok(Output { json, text })
}

pub fn bound(n: usize, k: usize, d: usize, q: u64) -> CliResult {
    if k > n || d == 0 || d > n || q < 2 {
        return Err(CliError::new(
            EXIT_BAD_ARGS,
            "InvalidArgument",
            "need 0 <= k <= n, 1 <= d <= n and q >= 2",
        ));
    }
    let r = classify(n, k, d, q);
    let json = json!({
        "n": r.n,
        "k": r.k,
        "d": r.d,
        "q": r.q,
        "max_d_allowed": r.max_d_allowed,
        "class": r.classification,
    });
    let text = format!(
        "[{n},{k},{d}]_{q}: {} (largest d allowed by sphere packing: {}{})\n",
        r.classification.as_str(),
        r.max_d_allowed,
        if r.perfect { "; perfect" } else { "" }
    );
    Ok(Output { json, text })
}
