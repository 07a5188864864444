use std::path::PathBuf;

use hv_core::CheckReport;
use serde::Serialize;

pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Serialize)]
pub struct RunConfig {
    pub n_max: usize,
    pub suites: Vec<String>,
    pub cache_path: Option<PathBuf>,
    pub report_format: ReportFormat,
    pub fail_fast: bool,
    pub worker_count: usize,
}

#[derive(Debug, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    /// Seconds, summed over checks.
    pub elapsed_total: f64,
}

#[derive(Debug, Serialize)]
pub struct Report<'a> {
    pub version: u32,
    pub config: &'a RunConfig,
    pub checks: &'a [CheckReport],
    pub summary: Summary,
}

impl<'a> Report<'a> {
    pub fn new(config: &'a RunConfig, checks: &'a [CheckReport]) -> Self {
        let pass = checks.iter().filter(|c| c.passed()).count();
        Self {
            version: REPORT_VERSION,
            config,
            checks,
            summary: Summary {
                pass,
                fail: checks.len() - pass,
                elapsed_total: checks.iter().map(|c| c.elapsed.as_secs_f64()).sum(),
            },
        }
    }

    pub fn render(&self, format: ReportFormat) -> String {
        match format {
            ReportFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("report serializes");
                s.push('\n');
                s
            }
            ReportFormat::Text => {
                let mut s = String::new();
                for c in self.checks {
                    s.push_str(&c.to_string());
                    s.push('\n');
                }
                s.push_str(&format!(
                    "summary: {} pass, {} fail, {:.3}s\n",
                    self.summary.pass, self.summary.fail, self.summary.elapsed_total
                ));
                s
            }
        }
    }
}

#[derive(Debug, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub build_secs: f64,
    /// Terms of tau_n in the (u, v) basis, where psi has two.
    pub tau_terms: usize,
    /// Terms of tau_n in the (x, y) basis.
    pub tau_terms_xy: usize,
    pub f_terms: usize,
    /// `None` at the top level, where `n + 1` is not built.
    pub toda_secs: Option<f64>,
    pub mixed_secs: Option<f64>,
    pub conjecture_secs: f64,
    pub symmetries_secs: f64,
}

pub fn render_bench(rows: &[BenchRow], format: ReportFormat) -> String {
    match format {
        ReportFormat::Json => {
            let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
            s.push('\n');
            s
        }
        ReportFormat::Text => {
            let opt = |v: Option<f64>| v.map_or("-".to_string(), |x| format!("{x:.4}"));
            let mut s = format!(
                "{:>3} {:>10} {:>9} {:>12} {:>9} {:>10} {:>10} {:>11} {:>11}\n",
                "n",
                "build_s",
                "tau_terms",
                "tau_terms_xy",
                "f_terms",
                "toda_s",
                "mixed_s",
                "conj_s",
                "sym_s"
            );
            for r in rows {
                s.push_str(&format!(
                    "{:>3} {:>10.4} {:>9} {:>12} {:>9} {:>10} {:>10} {:>11.4} {:>11.4}\n",
                    r.n,
                    r.build_secs,
                    r.tau_terms,
                    r.tau_terms_xy,
                    r.f_terms,
                    opt(r.toda_secs),
                    opt(r.mixed_secs),
                    r.conjecture_secs,
                    r.symmetries_secs
                ));
            }
            s
        }
    }
}
