use anyhow::{bail, Result};
use clap::ValueEnum;
use domforge_core::verify::{ConjectureReport, GraphRow, LemmaSuiteReport};
use domforge_core::{canonical_code, BoundReport, DomPolynomial, Graph, Rational, SweepReport};
use serde::Serialize;
use serde_json::json;

const DECIMAL_DIGITS: usize = 6;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

pub struct Printer {
    format: Format,
    no_timing: bool,
}

fn approx(r: &Rational) -> String {
    r.decimal(DECIMAL_DIGITS)
}

fn emit_json<T: Serialize + ?Sized>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

impl Printer {
    pub fn new(format: Format, no_timing: bool) -> Self {
        Printer { format, no_timing }
    }

    pub fn polynomial(&self, p: &DomPolynomial) -> Result<()> {
        match self.format {
            Format::Plain => println!("{}", p.to_plain()),
            Format::Json => emit_json(&json!({ "coefficients": p, "display": p.to_string() }))?,
            Format::Csv => {
                println!("size,count");
                for (k, c) in p.coeffs().iter().enumerate() {
                    println!("{k},{c}");
                }
            }
        }
        Ok(())
    }

    pub fn avd(&self, r: &Rational) -> Result<()> {
        match self.format {
            Format::Plain => println!("{r} (approximately {})", approx(r)),
            Format::Json => emit_json(&json!({ "avd": r, "approximate_decimal": approx(r) }))?,
            Format::Csv => println!("avd_num,avd_den\n{},{}", r.numer(), r.denom()),
        }
        Ok(())
    }

    pub fn gamma(&self, gamma: usize) -> Result<()> {
        match self.format {
            Format::Plain => println!("{gamma}"),
            Format::Json => emit_json(&json!({ "gamma": gamma }))?,
            Format::Csv => println!("gamma\n{gamma}"),
        }
        Ok(())
    }

    pub fn bound(&self, g: &Graph, r: &BoundReport) -> Result<()> {
        match self.format {
            Format::Plain => {
                println!("n = {}", r.n);
                println!("3·D'(1) = {}", r.lhs);
                println!("2n·D(1) = {}", r.rhs);
                println!("status: {}", r.status.as_str());
                println!("avd = {} (approximately {})", r.avd, approx(&r.avd));
                println!("extremal shape: {}", r.extremal_shape);
            }
            Format::Json => emit_json(r)?,
            Format::Csv => {
                // Non-forests above the canonical-code limit get an empty code.
                let code = canonical_code(g).map(|c| c.to_string()).unwrap_or_default();
                println!("{}", GraphRow::CSV_HEADER);
                println!(
                    "{code},{},{},{},{},{},{},{}",
                    r.n,
                    r.eval.d1,
                    r.eval.dp1,
                    r.avd.numer(),
                    r.avd.denom(),
                    r.status.as_str(),
                    r.extremal_shape
                );
            }
        }
        Ok(())
    }

    pub fn sweeps(&self, reports: &[SweepReport]) -> Result<()> {
        let reports: Vec<SweepReport> = if self.no_timing {
            reports.iter().map(SweepReport::without_timing).collect()
        } else {
            reports.to_vec()
        };
        match self.format {
            Format::Plain => {
                for r in &reports {
                    println!(
                        "{} n={}: total {}, violations {}, equality cases {}, mismatches {} ({} ms)",
                        r.family.name(),
                        r.n,
                        r.total,
                        r.violations.len(),
                        r.equality_cases.len(),
                        r.mismatches.len(),
                        r.elapsed_ms
                    );
                    for c in &r.violations {
                        println!("  violation: {c}");
                    }
                    for c in &r.mismatches {
                        println!("  mismatch: {c}");
                    }
                }
            }
            Format::Json => emit_json(&reports)?,
            Format::Csv => {
                if reports.iter().any(|r| r.rows.is_empty() && r.total > 0) {
                    bail!("per-graph CSV rows exist only for forest, tree and graph6 sweeps");
                }
                println!("{}", GraphRow::CSV_HEADER);
                for row in reports.iter().flat_map(|r| &r.rows) {
                    println!("{}", row.to_csv());
                }
            }
        }
        Ok(())
    }

    pub fn lemma_suites(&self, reports: &[LemmaSuiteReport]) -> Result<()> {
        match self.format {
            Format::Plain => {
                for r in reports {
                    println!(
                        "{} (n <= {}): checked {}, gated out {}, failures {}",
                        r.suite,
                        r.max_n,
                        r.checked,
                        r.gated_out,
                        r.failures.len()
                    );
                    for f in &r.failures {
                        println!("  failure: {f}");
                    }
                }
            }
            Format::Json => emit_json(reports)?,
            Format::Csv => {
                println!("suite,max_n,checked,gated_out,failures");
                for r in reports {
                    println!(
                        "{},{},{},{},{}",
                        r.suite,
                        r.max_n,
                        r.checked,
                        r.gated_out,
                        r.failures.len()
                    );
                }
            }
        }
        Ok(())
    }

    pub fn conjecture(&self, report: &ConjectureReport) -> Result<()> {
        let report = if self.no_timing {
            report.without_timing()
        } else {
            report.clone()
        };
        match self.format {
            Format::Plain => {
                println!(
                    "n={}: tested {}, classes without a qualifying edge {} ({} labeled) ({} ms)",
                    report.n,
                    report.tested,
                    report.counterexamples.len(),
                    report.labeled_counterexamples,
                    report.elapsed_ms
                );
                for f in &report.counterexamples {
                    println!("  {} {}: {}", f.graph6, f.code, f.detail);
                }
            }
            Format::Json => emit_json(&report)?,
            Format::Csv => {
                println!("code,graph6,detail");
                for f in &report.counterexamples {
                    println!("{},{},{}", f.code, f.graph6, f.detail);
                }
            }
        }
        Ok(())
    }
}
