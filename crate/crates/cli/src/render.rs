use std::io::Write;

use serde::{Deserialize, Serialize};

use ciqh_core::certifier::{origin_polynomial, origin_shape_holds, Certificate, OracleReport, RootStructure};
use ciqh_core::json::RationalJson;
use ciqh_core::kernel::{format_rational, render_lambda, Rational, UniPoly};
use ciqh_core::operator::{CoeffTable, CompleteIntersection};
use ciqh_core::schubert::LineInvariant;

use crate::{CliError, Format};

/// One sweep row. Rationals are written as `num/den`, degrees joined by `;`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CsvRow {
    pub n: u32,
    pub degrees: String,
    pub r: u32,
    pub d: String,
    pub e: u32,
    pub delta: String,
    pub l0: String,
    pub det_linear_coeff: String,
    pub verdict: String,
}

fn num_den(q: &RationalJson) -> String {
    format!("{}/{}", q.num, q.den)
}

impl From<&Certificate> for CsvRow {
    fn from(c: &Certificate) -> Self {
        CsvRow {
            n: c.input.n,
            degrees: c.input.degrees.iter().map(u32::to_string).collect::<Vec<_>>().join(";"),
            r: c.input.r,
            d: c.input.d.clone(),
            e: c.e,
            delta: c.delta.as_ref().map(num_den).unwrap_or_default(),
            l0: c.l0.as_ref().map(num_den).unwrap_or_default(),
            det_linear_coeff: c.det_linear_coeff.as_ref().map(|d| format!("{}/{}", d.num, d.den)).unwrap_or_default(),
            verdict: c.verdict.to_string(),
        }
    }
}

fn write_csv<T: Serialize>(rows: &[T], out: &mut dyn Write) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    for row in rows {
        w.serialize(row)?;
    }
    w.flush()?;
    Ok(())
}

fn write_json<T: Serialize>(value: &T, out: &mut dyn Write) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, value)?;
    writeln!(out)?;
    Ok(())
}

fn text_rational(q: &Option<RationalJson>) -> String {
    q.as_ref().and_then(|q| Rational::try_from(q).ok()).map(|q| format_rational(&q)).unwrap_or_else(|| "-".into())
}

pub fn certificate(cert: &Certificate, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Json => write_json(cert, out),
        Format::Csv => write_csv(&[CsvRow::from(cert)], out),
        Format::Text => {
            let i = &cert.input;
            writeln!(out, "case        n={} degrees={:?} r={} d={}", i.n, i.degrees, i.r, i.d)?;
            writeln!(out, "e           {}", cert.e)?;
            writeln!(out, "delta       {}", text_rational(&cert.delta))?;
            if let Some(count) = &cert.line_count {
                writeln!(out, "l0          {} (d*l0 = {count})", text_rational(&cert.l0))?;
            }
            if let Some(d) = &cert.det_linear_coeff {
                writeln!(out, "det-linear  {}/{}  [{}]", d.num, d.den, d.formula)?;
            }
            if let Some(g) = cert.charpoly_origin_poly().filter(|g| !g.is_zero()) {
                writeln!(out, "G(λ,0)      {}", render_lambda(&g))?;
            }
            if let Some(l) = cert.lemma1 {
                writeln!(out, "lemma 1     {}", serde_json::to_value(l)?.as_str().unwrap_or_default())?;
            }
            writeln!(out, "verdict     {}", cert.verdict)?;
            if !cert.failing.is_empty() {
                writeln!(out, "failing     {}", cert.failing.join(", "))?;
            }
            for a in &cert.assumptions {
                writeln!(out, "assumes     {a}")?;
            }
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct LinesReport<'a> {
    n: u32,
    degrees: &'a [u32],
    j: u32,
    count: String,
    value: RationalJson,
}

pub fn lines(
    ci: &CompleteIntersection,
    l: &LineInvariant,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let report =
        LinesReport { n: ci.n(), degrees: ci.degrees(), j: l.j, count: l.count.to_string(), value: (&l.value).into() };
    match format {
        Format::Json => write_json(&report, out),
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                n: u32,
                degrees: String,
                j: u32,
                count: String,
                value: String,
            }
            let row = Row {
                n: report.n,
                degrees: ci.degrees().iter().map(u32::to_string).collect::<Vec<_>>().join(";"),
                j: l.j,
                count: report.count,
                value: num_den(&report.value),
            };
            write_csv(&[row], out)
        }
        Format::Text => {
            writeln!(out, "d*l{} = {}", l.j, l.count)?;
            writeln!(out, "l{}   = {}", l.j, format_rational(&l.value))?;
            Ok(())
        }
    }
}

#[derive(Serialize)]
struct CharpolyReport {
    n: u32,
    degrees: Vec<u32>,
    e: u32,
    /// `G(λ, 0)`, lowest degree first.
    coefficients: Vec<RationalJson>,
    rendered: String,
    /// The symbolic origin operator has characteristic polynomial
    /// `λ^{n+1} − (b₁ + … + b_e)·λ^{e−1}`.
    symbolic_shape: bool,
    root_structure: RootStructure,
}

pub fn charpoly(ci: &CompleteIntersection, format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    if !ci.is_fano() || ci.n() < 3 {
        return Err(CliError::Input(format!("{ci}: charpoly needs a Fano case with n >= 3")));
    }
    let g: UniPoly<Rational> = origin_polynomial(ci.n(), ci.e(), &ci.origin_constant_rational());
    let report = CharpolyReport {
        n: ci.n(),
        degrees: ci.degrees().to_vec(),
        e: ci.e(),
        coefficients: g.coeffs().iter().map(RationalJson::from).collect(),
        rendered: render_lambda(&g),
        symbolic_shape: origin_shape_holds(ci, &CoeffTable::symbolic(ci))?,
        root_structure: RootStructure::analyze(&g)?,
    };
    if !report.symbolic_shape {
        return Err(CliError::Internal(format!("{ci}: origin operator has an unexpected characteristic polynomial")));
    }
    match format {
        Format::Json => write_json(&report, out),
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                power: usize,
                coefficient: String,
            }
            let rows: Vec<Row> = report
                .coefficients
                .iter()
                .enumerate()
                .map(|(power, c)| Row { power, coefficient: num_den(c) })
                .collect();
            write_csv(&rows, out)
        }
        Format::Text => {
            let s = &report.root_structure;
            writeln!(out, "G(λ,0) = {}", report.rendered)?;
            writeln!(
                out,
                "roots: 0 with multiplicity {}, {} simple nonzero; deg gcd(G, G') = {}",
                s.zero_multiplicity, s.simple_nonzero, s.gcd_degree
            )?;
            Ok(())
        }
    }
}

pub fn oracle(
    ci: &CompleteIntersection,
    report: &OracleReport,
    format: Format,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match format {
        Format::Json => write_json(report, out),
        Format::Csv => {
            #[derive(Serialize)]
            struct Row {
                index: u64,
                t: String,
                discriminant_nonzero: bool,
                min_gap: f64,
                gap_lower_bound: f64,
            }
            let rows: Vec<Row> = report
                .reports
                .iter()
                .map(|r| Row {
                    index: r.index,
                    t: num_den(&r.t),
                    discriminant_nonzero: r.discriminant_nonzero,
                    min_gap: r.min_gap,
                    gap_lower_bound: r.gap_lower_bound,
                })
                .collect();
            write_csv(&rows, out)
        }
        Format::Text => {
            writeln!(out, "case       {ci}")?;
            writeln!(out, "seed       {}", report.seed)?;
            writeln!(
                out,
                "samples    {} ({} distinct, {} repeated)",
                report.samples, report.successes, report.failures
            )?;
            writeln!(out, "min gap    {:.6e}", report.min_gap)?;
            Ok(())
        }
    }
}

pub fn sweep(certs: &[Certificate], format: Format, out: &mut dyn Write) -> Result<(), CliError> {
    match format {
        Format::Csv => write_csv(&certs.iter().map(CsvRow::from).collect::<Vec<_>>(), out),
        Format::Json => write_json(&certs, out),
        Format::Text => {
            for c in certs {
                let row = CsvRow::from(c);
                let det = if row.det_linear_coeff.is_empty() { "-".to_string() } else { row.det_linear_coeff };
                writeln!(out, "{:>3} {:<12} e={:<3} {:<30} {}", row.n, row.degrees, row.e, c.verdict.as_str(), det)?;
            }
            Ok(())
        }
    }
}
