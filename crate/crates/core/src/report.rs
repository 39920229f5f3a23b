//! Sweeps and rendering of records for the command-line front end.

use std::fmt::Write as _;
use std::io::Write;

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::{
    certify_upper, BooleanPropagation, CertificateJson, GroupRegistry, LowerBoundRecord,
    UpperBoundCertificate, DEFAULT_MAX_J,
};
use crate::error::{Error, Result};
use crate::rational::{self, to_text, Rational};
use crate::spectral::{word_dilatation, SpectralResult, DEFAULT_MAX_ITERS};

/// Largest sweep parameter accepted without `force`.
pub const SWEEP_CAP: u32 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub parameter: u32,
    #[serde(with = "rational")]
    pub lower_bound: Rational,
    #[serde(with = "rational")]
    pub upper_bound: Rational,
    pub j: usize,
    pub dilatation: f64,
    pub normalized_upper: f64,
    pub normalized_lower: f64,
}

pub const SWEEP_HEADER: [&str; 7] = [
    "parameter",
    "lower_bound",
    "upper_bound",
    "j",
    "dilatation",
    "normalized_upper",
    "normalized_lower",
];

pub fn sweep_row(family: &str, p: u32, tol: f64) -> Result<SweepRow> {
    let group = GroupRegistry::global().get(family)?;
    let inst = group.family(p).ok_or_else(|| {
        Error::Precondition(format!("group `{family}` has no explicit family to sweep"))
    })??;
    let (g, n) = group.split_parameter(p);
    let lower = group.lower_bound(g, n)?;
    let cert = certify_upper(&inst, DEFAULT_MAX_J, &BooleanPropagation)?;
    let spec = word_dilatation(&inst.config, &inst.word, tol, DEFAULT_MAX_ITERS)?;
    let scale = Rational::from_integer(p.into());
    Ok(SweepRow {
        parameter: p,
        normalized_upper: rational::to_f64(&(&scale * &cert.bound)),
        normalized_lower: rational::to_f64(&(&scale * &lower.bound)),
        lower_bound: lower.bound,
        upper_bound: cert.bound,
        j: cert.j,
        dilatation: spec.dilatation,
    })
}

/// One row per parameter in `from..=to`, computed concurrently and returned
/// in parameter order. An empty range gives no rows.
pub fn sweep(family: &str, from: u32, to: u32, tol: f64, force: bool) -> Result<Vec<SweepRow>> {
    GroupRegistry::global().get(family)?;
    if to > SWEEP_CAP && !force && from <= to {
        return Err(Error::Precondition(format!(
            "sweep up to {to} exceeds {SWEEP_CAP}; pass --force to allow"
        )));
    }
    (from..=to)
        .into_par_iter()
        .map(|p| sweep_row(family, p, tol))
        .collect()
}

pub fn write_csv<W: Write>(rows: &[SweepRow], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(SWEEP_HEADER)?;
    for r in rows {
        w.write_record([
            r.parameter.to_string(),
            to_text(&r.lower_bound),
            to_text(&r.upper_bound),
            r.j.to_string(),
            r.dilatation.to_string(),
            r.normalized_upper.to_string(),
            r.normalized_lower.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn render_lower(rec: &LowerBoundRecord, format: Format) -> Result<String> {
    if format == Format::Json {
        return Ok(serde_json::to_string_pretty(rec)? + "\n");
    }
    let mut s = String::new();
    let s_ = &mut s;
    let group = rec.group.map_or("-", |g| g.name());
    let _ = writeln!(s_, "lower bound: {}", to_text(&rec.bound));
    let _ = writeln!(s_, "group: {group}");
    let _ = writeln!(
        s_,
        "surface: {} (genus {}, punctures {}, boundary {}, χ = {})",
        rec.surface,
        rec.surface.genus,
        rec.surface.punctures,
        rec.surface.boundary,
        rec.surface.euler_characteristic()
    );
    if let Some(d) = &rec.derivation {
        let _ = writeln!(s_, "q = {} from {}", d.q, d.supplied_by);
        for c in &d.cases {
            let _ = writeln!(s_, "  {} [q = {}]: {}", c.label, c.constant, c.chain);
        }
    } else {
        let _ = writeln!(s_, "q = {}", rec.q);
    }
    let _ = writeln!(s_, "r = {}, k = 2qr + 24|χ| - 8n = {}", rec.r, rec.k);
    let _ = writeln!(s_, "w = k + 6|χ| - 2n = {}", rec.w);
    if let Some(pw) = rec.published_w {
        let _ = writeln!(
            s_,
            "published w = {pw} (bound 1/{pw}); derived w = {} by direct substitution",
            rec.w
        );
    }
    Ok(s)
}

pub fn render_certificate(
    cert: &UpperBoundCertificate,
    format: Format,
    with_trace: bool,
) -> Result<String> {
    if format == Format::Json {
        let mut view = CertificateJson::from(cert);
        if !with_trace {
            view.trace.clear();
        }
        return Ok(serde_json::to_string_pretty(&view)? + "\n");
    }
    let mut s = String::new();
    let s_ = &mut s;
    let _ = writeln!(s_, "upper bound: {}", to_text(&cert.bound));
    let _ = writeln!(s_, "j = {} (mode {})", cert.j, cert.mode);
    let _ = writeln!(
        s_,
        "seed {} and witness {}: disjoint from f^j({})",
        cert.instance.seed, cert.instance.witness, cert.instance.seed
    );
    match cert.witness_hit {
        Some(t) => {
            let _ = writeln!(s_, "witness first met after {t} applications");
        }
        None => {
            let _ = writeln!(s_, "witness not met within max-j = {}", cert.max_j);
        }
    }
    if with_trace {
        for (t, names) in cert.trace_names().iter().enumerate() {
            let _ = writeln!(s_, "  t={t}: {{{}}}", names.join(", "));
        }
    }
    Ok(s)
}

pub fn render_spectral(r: &SpectralResult, format: Format) -> Result<String> {
    if format == Format::Json {
        return Ok(serde_json::to_string_pretty(r)? + "\n");
    }
    let opt = |x: Option<usize>| x.map_or_else(|| "none".to_string(), |e| e.to_string());
    Ok(format!(
        "dilatation: {:.12}\nresidual: {:e}\niterations: {}\nprimitivity exponent: {}\ndiagonal exponent: {}\n",
        r.dilatation,
        r.residual,
        r.iterations,
        opt(r.primitivity_exponent),
        opt(r.diagonal_exponent),
    ))
}
