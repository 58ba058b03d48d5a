//! Checkers for the necessary coefficient conditions satisfied by every
//! monic polynomial whose roots are nonzero integers.
//!
//! The checkers accept any monic integer polynomial. A failed verdict is
//! data, not an error: it certifies that the input has no such root set.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CheckName {
    /// `a_j^2 >= a_{j-1} a_{j+1}`
    NewtonWeak,
    /// `4(a_j^2 - a_{j-1}a_{j+1})(a_{j+1}^2 - a_j a_{j+2}) >= (a_{j-1}a_{j+2} - a_j a_{j+1})^2`
    NewtonStrong,
    /// No two adjacent zero coefficients.
    NoConsecutiveZeros,
    /// An interior zero has neighbours of opposite sign.
    ZeroRemark,
    /// `min(|a_{l-1}|, |a_{l+2}|) <= 3 max(|a_l|, |a_{l+1}|)`
    SecondPrinciple,
}

impl CheckName {
    pub const ALL: [CheckName; 5] = [
        CheckName::NewtonWeak,
        CheckName::NewtonStrong,
        CheckName::NoConsecutiveZeros,
        CheckName::ZeroRemark,
        CheckName::SecondPrinciple,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::NewtonWeak => "newton_weak",
            CheckName::NewtonStrong => "newton_strong",
            CheckName::NoConsecutiveZeros => "no_consecutive_zeros",
            CheckName::ZeroRemark => "zero_remark",
            CheckName::SecondPrinciple => "second_principle",
        }
    }

    /// Minimum degree at which the check is defined.
    pub fn min_degree(self) -> usize {
        match self {
            CheckName::NewtonStrong | CheckName::SecondPrinciple => 3,
            _ => 2,
        }
    }

    /// Runs this check on `p`.
    pub fn run(self, p: &IntPolynomial) -> Result<CheckReport> {
        match self {
            CheckName::NewtonWeak => check_newton_weak(p),
            CheckName::NewtonStrong => check_newton_strong(p),
            CheckName::NoConsecutiveZeros => check_no_consecutive_zeros(p),
            CheckName::ZeroRemark => check_zero_remark(p),
            CheckName::SecondPrinciple => check_second_principle(p),
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One verdict: the check, the index it applies at, and both exact sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub name: CheckName,
    pub index: usize,
    pub pass: bool,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CheckReport {
    pub verdicts: Vec<Verdict>,
}

impl CheckReport {
    /// True when no verdict failed (an empty report passes vacuously).
    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.pass)
    }

    pub fn extend(&mut self, other: CheckReport) {
        self.verdicts.extend(other.verdicts);
    }
}

fn require_degree(p: &IntPolynomial, what: &'static str, min: usize) -> Result<()> {
    if p.degree() < min {
        return Err(Error::DegreeTooSmall {
            what,
            min,
            got: p.degree(),
        });
    }
    Ok(())
}

/// Both sides of the strong Newton inequality on a window `(a_{j-1}, a_j, a_{j+1}, a_{j+2})`.
pub fn newton_strong_window(w: [&BigInt; 4]) -> (BigInt, BigInt) {
    let [prev, a, b, next] = w;
    let left = a * a - prev * b;
    let right = b * b - a * next;
    let cross = prev * next - a * b;
    (4 * left * right, &cross * &cross)
}

/// Both sides of the second-principle bound on a window `(a_{l-1}, a_l, a_{l+1}, a_{l+2})`.
pub fn second_principle_window(w: [&BigInt; 4]) -> (BigInt, BigInt) {
    let [prev, a, b, next] = w;
    let outer = prev.abs().min(next.abs());
    let inner = a.abs().max(b.abs());
    (outer, 3 * inner)
}

pub fn check_newton_weak(p: &IntPolynomial) -> Result<CheckReport> {
    require_degree(p, "newton_weak", 2)?;
    let a = p.coeffs();
    let verdicts = (1..p.degree())
        .map(|j| {
            let lhs = &a[j] * &a[j];
            let rhs = &a[j - 1] * &a[j + 1];
            Verdict {
                name: CheckName::NewtonWeak,
                index: j,
                pass: lhs >= rhs,
                lhs,
                rhs,
            }
        })
        .collect();
    Ok(CheckReport { verdicts })
}

pub fn check_newton_strong(p: &IntPolynomial) -> Result<CheckReport> {
    require_degree(p, "newton_strong", 3)?;
    let a = p.coeffs();
    let verdicts = (1..p.degree() - 1)
        .map(|j| {
            let (lhs, rhs) = newton_strong_window([&a[j - 1], &a[j], &a[j + 1], &a[j + 2]]);
            Verdict {
                name: CheckName::NewtonStrong,
                index: j,
                pass: lhs >= rhs,
                lhs,
                rhs,
            }
        })
        .collect();
    Ok(CheckReport { verdicts })
}

/// One verdict per `i` in `1..n`, with `a_i` and `a_{i+1}` as the two sides.
pub fn check_no_consecutive_zeros(p: &IntPolynomial) -> Result<CheckReport> {
    require_degree(p, "no_consecutive_zeros", 2)?;
    let a = p.coeffs();
    let verdicts = (1..p.degree())
        .map(|i| Verdict {
            name: CheckName::NoConsecutiveZeros,
            index: i,
            pass: !(a[i].is_zero() && a[i + 1].is_zero()),
            lhs: a[i].clone(),
            rhs: a[i + 1].clone(),
        })
        .collect();
    Ok(CheckReport { verdicts })
}

/// One verdict per interior zero `a_j = 0`; lhs is `a_{j-1} a_{j+1}`, rhs is 0.
pub fn check_zero_remark(p: &IntPolynomial) -> Result<CheckReport> {
    require_degree(p, "zero_remark", 2)?;
    let a = p.coeffs();
    let verdicts = (1..p.degree())
        .filter(|&j| a[j].is_zero())
        .map(|j| {
            let lhs = &a[j - 1] * &a[j + 1];
            Verdict {
                name: CheckName::ZeroRemark,
                index: j,
                pass: lhs.is_negative(),
                lhs,
                rhs: BigInt::zero(),
            }
        })
        .collect();
    Ok(CheckReport { verdicts })
}

pub fn check_second_principle(p: &IntPolynomial) -> Result<CheckReport> {
    require_degree(p, "second_principle", 3)?;
    let a = p.coeffs();
    let verdicts = (1..p.degree() - 1)
        .map(|l| {
            let (lhs, rhs) = second_principle_window([&a[l - 1], &a[l], &a[l + 1], &a[l + 2]]);
            Verdict {
                name: CheckName::SecondPrinciple,
                index: l,
                pass: lhs <= rhs,
                lhs,
                rhs,
            }
        })
        .collect();
    Ok(CheckReport { verdicts })
}

/// Runs every check whose minimum degree `p` meets, in [`CheckName::ALL`] order.
pub fn check_all(p: &IntPolynomial) -> Result<CheckReport> {
    require_degree(p, "check_all", 2)?;
    let mut report = CheckReport::default();
    for name in CheckName::ALL {
        if p.degree() >= name.min_degree() {
            report.extend(name.run(p)?);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c).unwrap()
    }

    fn sides(v: &Verdict) -> (i64, i64) {
        ((&v.lhs).try_into().unwrap(), (&v.rhs).try_into().unwrap())
    }

    #[test]
    fn newton_weak_examples() {
        let r = check_newton_weak(&poly(&[1, -3, 2])).unwrap();
        assert_eq!(r.verdicts.len(), 1);
        assert_eq!(sides(&r.verdicts[0]), (9, 2));
        assert!(r.passed());

        let r = check_newton_weak(&poly(&[1, 0, -1])).unwrap();
        assert_eq!(sides(&r.verdicts[0]), (0, -1));
        assert!(r.passed());

        let r = check_newton_weak(&poly(&[1, 1, 1])).unwrap();
        assert_eq!(sides(&r.verdicts[0]), (1, 1));
        assert!(r.passed());

        assert!(check_newton_weak(&poly(&[1, 1])).is_err());
    }

    #[test]
    fn newton_weak_failure_carries_sides() {
        let r = check_newton_weak(&poly(&[1, 1, 5])).unwrap();
        assert!(!r.passed());
        let bad: Vec<_> = r.failures().collect();
        assert_eq!(bad.len(), 1);
        assert_eq!(sides(bad[0]), (1, 5));
    }

    #[test]
    fn newton_strong_examples() {
        let w = [-3, 1, 1, -3].map(BigInt::from);
        let (lhs, rhs) = newton_strong_window([&w[0], &w[1], &w[2], &w[3]]);
        assert_eq!((lhs, rhs), (BigInt::from(64), BigInt::from(64)));

        let r = check_newton_strong(&poly(&[1, -6, 11, -6])).unwrap();
        assert_eq!(r.verdicts.len(), 1);
        assert_eq!(sides(&r.verdicts[0]), (8500, 3600));
        assert!(r.passed());

        let r = check_newton_strong(&poly(&[1, 1, -1, -1])).unwrap();
        assert_eq!(sides(&r.verdicts[0]), (16, 0));
        assert!(r.passed());

        assert!(check_newton_strong(&poly(&[1, -3, 2])).is_err());
    }

    #[test]
    fn no_consecutive_zeros_examples() {
        assert!(check_no_consecutive_zeros(&poly(&[1, 0, -5, 0, 4]))
            .unwrap()
            .passed());
        assert!(check_no_consecutive_zeros(&poly(&[1, 0, -1, 0]))
            .unwrap()
            .passed());
        let r = check_no_consecutive_zeros(&poly(&[1, 5, 0, 0, 3])).unwrap();
        let bad: Vec<_> = r.failures().map(|v| v.index).collect();
        assert_eq!(bad, vec![2]);
    }

    #[test]
    fn zero_remark_examples() {
        let r = check_zero_remark(&poly(&[1, 0, -1])).unwrap();
        assert_eq!(r.verdicts.len(), 1);
        assert_eq!(sides(&r.verdicts[0]), (-1, 0));
        assert!(r.passed());

        let r = check_zero_remark(&poly(&[1, 0, -5, 0, 4])).unwrap();
        let idx: Vec<_> = r.verdicts.iter().map(|v| (v.index, sides(v).0)).collect();
        assert_eq!(idx, vec![(1, -5), (3, -20)]);
        assert!(r.passed());

        let r = check_zero_remark(&poly(&[1, -6, 11, -6])).unwrap();
        assert!(r.verdicts.is_empty());
        assert!(r.passed());

        assert!(!check_zero_remark(&poly(&[1, 0, 1])).unwrap().passed());
    }

    #[test]
    fn second_principle_examples() {
        let r = check_second_principle(&poly(&[1, -6, 11, -6])).unwrap();
        assert_eq!(sides(&r.verdicts[0]), (1, 33));
        assert!(r.passed());

        let w = [-3, 1, 1, -3].map(BigInt::from);
        let (lhs, rhs) = second_principle_window([&w[0], &w[1], &w[2], &w[3]]);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, BigInt::from(3));

        let r = check_second_principle(&poly(&[1, 1, -1, -1])).unwrap();
        assert_eq!(sides(&r.verdicts[0]), (1, 3));

        let r = check_second_principle(&poly(&[1, 10, 1, 1, 10])).unwrap();
        let bad: Vec<_> = r.failures().map(|v| (v.index, sides(v))).collect();
        assert_eq!(bad, vec![(2, (10, 3))]);
    }

    #[test]
    fn extremal_window_inside_a_polynomial() {
        let r = check_all(&poly(&[1, -3, 1, 1, -3])).unwrap();
        assert!(r.passed());
        let sp = r
            .verdicts
            .iter()
            .find(|v| v.name == CheckName::SecondPrinciple && v.index == 2)
            .unwrap();
        assert_eq!(sp.lhs, sp.rhs);
        let ns = r
            .verdicts
            .iter()
            .find(|v| v.name == CheckName::NewtonStrong && v.index == 2)
            .unwrap();
        assert_eq!(sides(ns), (64, 64));
    }

    #[test]
    fn check_all_counts() {
        // degree 4: weak 3, strong 2, zeros 3, remark 0, second 2
        let r = check_all(&poly(&[1, -10, 35, -50, 24])).unwrap();
        assert_eq!(r.verdicts.len(), 10);
        let r = check_all(&poly(&[1, -3, 2])).unwrap();
        assert_eq!(r.verdicts.len(), 2);
    }
}
