//! Output formatting helpers.
//!
//! All numeric output uses 17 significant digits so that re-parsing yields
//! the in-memory value exactly.

use entvol::entangle::PptReport;
use entvol::volume::VolumeEstimate;

/// `f64` with 17 significant digits in scientific notation.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// Array of generator matrices as nested JSON:
/// `[[[re, im], ...], ...]` with each matrix row-major.
pub fn gellmann_json(generators: &[entvol::CMatrix64]) -> String {
    let mut out = String::from("[");
    for (k, g) in generators.iter().enumerate() {
        if k > 0 {
            out.push(',');
        }
        out.push('[');
        for (i, z) in g.data().iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            out.push('[');
            out.push_str(&fmt_f64(z.re));
            out.push(',');
            out.push_str(&fmt_f64(z.im));
            out.push(']');
        }
        out.push(']');
    }
    out.push_str("]\n");
    out
}

/// Generators as CSV rows `lambda,row,col,re,im` (1-based lambda index).
pub fn gellmann_csv(generators: &[entvol::CMatrix64]) -> String {
    let mut out = String::from("lambda,row,col,re,im\n");
    for (k, g) in generators.iter().enumerate() {
        let n = g.dim();
        for r in 0..n {
            for c in 0..n {
                let z = g[(r, c)];
                out.push_str(&format!(
                    "{},{},{},{},{}\n",
                    k + 1,
                    r + 1,
                    c + 1,
                    fmt_f64(z.re),
                    fmt_f64(z.im)
                ));
            }
        }
    }
    out
}

/// Coherence vector as CSV rows `i,n_i`.
pub fn coherence_csv(components: &[f64]) -> String {
    let mut out = String::from("i,n_i\n");
    for (i, v) in components.iter().enumerate() {
        out.push_str(&format!("{},{}\n", i + 1, fmt_f64(*v)));
    }
    out
}

pub fn ppt_json(report: &PptReport<f64>, da: usize, db: usize, tol: f64) -> String {
    let spectrum = report
        .spectrum
        .iter()
        .map(|x| fmt_f64(*x))
        .collect::<Vec<_>>()
        .join(",");
    format!(
        "{{\"da\":{da},\"db\":{db},\"tol\":{},\"spectrum\":[{spectrum}],\"negativity\":{},\"char_constant\":{},\"entangled\":{}}}\n",
        fmt_f64(tol),
        fmt_f64(report.negativity),
        fmt_f64(report.char_constant),
        report.entangled
    )
}

pub fn ppt_text(report: &PptReport<f64>, da: usize, db: usize, tol: f64) -> String {
    let mut out = String::new();
    out.push_str(&format!("bipartition: {da}x{db} (tol {})\n", fmt_f64(tol)));
    out.push_str("pt spectrum:");
    for x in &report.spectrum {
        out.push_str(&format!(" {}", fmt_f64(*x)));
    }
    out.push('\n');
    out.push_str(&format!("negativity: {}\n", fmt_f64(report.negativity)));
    out.push_str(&format!(
        "char constant: {}\n",
        fmt_f64(report.char_constant)
    ));
    out.push_str(&format!("entangled: {}\n", report.entangled));
    out
}

pub fn estimate_json(est: &VolumeEstimate<f64>) -> String {
    format!(
        "{{\"chart\":\"{}\",\"method\":\"{}\",\"samples\":{},\"seed\":{},\"value\":{},\"std_error\":{},\"flagged\":{}}}\n",
        est.chart,
        est.method,
        est.samples,
        est.seed,
        fmt_f64(est.value),
        fmt_f64(est.std_error),
        est.flagged
    )
}

pub fn estimate_text(est: &VolumeEstimate<f64>) -> String {
    format!(
        "chart {} ({}): value {} +- {} from {} samples (seed {}, {} flagged)\n",
        est.chart,
        est.method,
        fmt_f64(est.value),
        fmt_f64(est.std_error),
        est.samples,
        est.seed,
        est.flagged
    )
}
