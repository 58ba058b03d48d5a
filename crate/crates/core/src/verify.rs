//! Exhaustive re-certification over every small root multiset: all
//! coefficient inequalities, the alpha root bound at every consecutive pair,
//! and both first-principle bounds.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use crate::bounds::alpha;
use crate::enumeration::{brute_force_for_each, multiset_count};
use crate::error::{Error, Result};
use crate::inequalities::{check_all, Verdict};
use crate::poly::{IntPolynomial, RootMultiset};

/// Name used for the alpha root-bound check in sweep reports.
pub const ALPHA_BOUND: &str = "alpha_bound";
pub const CONSTANT_TERM_BOUND: &str = "constant_term_bound";
pub const SUM_OF_SQUARES: &str = "sum_of_squares";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub roots: RootMultiset,
    pub poly: IntPolynomial,
    pub check: String,
    pub index: usize,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckTally {
    pub evaluated: u64,
    pub violations: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepReport {
    pub n_max: usize,
    pub radius: u64,
    pub polynomials: u64,
    pub per_check: BTreeMap<String, CheckTally>,
    pub first_counterexample: Option<Counterexample>,
}

impl SweepReport {
    pub fn violations(&self) -> u64 {
        self.per_check.values().map(|t| t.violations).sum()
    }

    pub fn checks(&self) -> u64 {
        self.per_check.values().map(|t| t.evaluated).sum()
    }
}

struct Sweep {
    report: SweepReport,
}

impl Sweep {
    fn record(&mut self, roots: &[i64], poly: &IntPolynomial, v: Verdict) {
        self.tally(roots, poly, v.name.as_str(), v.index, v.pass, v.lhs, v.rhs);
    }

    #[allow(clippy::too_many_arguments)]
    fn tally(
        &mut self,
        roots: &[i64],
        poly: &IntPolynomial,
        check: &str,
        index: usize,
        pass: bool,
        lhs: BigInt,
        rhs: BigInt,
    ) {
        let t = self.report.per_check.entry(check.to_string()).or_default();
        t.evaluated += 1;
        if pass {
            return;
        }
        t.violations += 1;
        if self.report.first_counterexample.is_none() {
            self.report.first_counterexample = Some(Counterexample {
                roots: RootMultiset::from_i64s(roots).expect("nonzero"),
                poly: poly.clone(),
                check: check.to_string(),
                index,
                lhs,
                rhs,
            });
        }
    }
}

/// Sweeps every multiset of `n` nonzero roots in `[-radius, radius]` for
/// `2 <= n <= n_max`. The combined multiset count must fit `budget`.
pub fn verify_sweep(n_max: usize, radius: u64, budget: u64) -> Result<SweepReport> {
    if n_max < 2 {
        return Err(Error::invalid(format!("n_max must be >= 2, got {n_max}")));
    }
    if radius < 1 {
        return Err(Error::invalid("sweep radius must be at least 1"));
    }
    let total: BigUint = (2..=n_max).map(|n| multiset_count(n, radius)).sum();
    if total > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            what: format!("sweep up to degree {n_max}, radius {radius} needs {total} multisets"),
            budget,
        });
    }

    let mut sweep = Sweep {
        report: SweepReport {
            n_max,
            radius,
            polynomials: 0,
            per_check: BTreeMap::new(),
            first_counterexample: None,
        },
    };
    for n in 2..=n_max {
        let alpha4 = BigInt::from(alpha(n)?.fourth_power().clone());
        let count = brute_force_for_each(n, radius, budget, |roots, poly| {
            for v in check_all(poly).expect("degree >= 2").verdicts {
                sweep.record(roots, poly, v);
            }

            let max_root = BigInt::from(roots.iter().map(|r| r.unsigned_abs()).max().unwrap_or(0));
            let max_root4 = max_root.pow(4);
            let a = poly.coeffs();
            for j in 1..n {
                let m = a[j].abs().max(a[j + 1].abs());
                let rhs = &alpha4 * m.pow(4);
                let pass = max_root4 <= rhs;
                sweep.tally(roots, poly, ALPHA_BOUND, j, pass, max_root4.clone(), rhs);
            }

            let an = poly.constant_term().abs();
            let pass = max_root <= an;
            sweep.tally(
                roots,
                poly,
                CONSTANT_TERM_BOUND,
                n,
                pass,
                max_root.clone(),
                an,
            );

            let lhs = &a[1] * &a[1] - 2 * &a[2];
            let rhs: BigInt = roots.iter().map(|&r| BigInt::from(r) * r).sum();
            let pass = lhs == rhs;
            sweep.tally(roots, poly, SUM_OF_SQUARES, 1, pass, lhs, rhs);
        })?;
        sweep.report.polynomials += count;
    }
    Ok(sweep.report)
}
