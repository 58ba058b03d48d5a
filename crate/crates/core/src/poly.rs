//! Exact monic integer polynomials and root multisets.
//!
//! Coefficients are stored leading-first: `coeffs[i]` is the coefficient of
//! `x^(n-i)`, so `coeffs[0]` is always 1 and `coeffs[n]` is the constant term.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Monic polynomial with exact integer coefficients, leading coefficient first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Sorted (nondecreasing) multiset of nonzero integer roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootMultiset {
    roots: Vec<BigInt>,
}

/// Elementary symmetric functions `[s_1, ..., s_n]` of a root multiset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricVector {
    s: Vec<BigInt>,
}

impl RootMultiset {
    /// Builds the canonical (sorted) multiset. Rejects an empty list and zero roots.
    pub fn new(mut roots: Vec<BigInt>) -> Result<Self> {
        if roots.is_empty() {
            return Err(Error::EmptyRoots);
        }
        if let Some(pos) = roots.iter().position(Zero::is_zero) {
            return Err(Error::ZeroRoot(pos));
        }
        roots.sort();
        Ok(Self { roots })
    }

    pub fn from_i64s(roots: &[i64]) -> Result<Self> {
        Self::new(roots.iter().map(|&r| BigInt::from(r)).collect())
    }

    pub fn roots(&self) -> &[BigInt] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    /// Largest absolute value among the roots.
    pub fn max_abs(&self) -> BigInt {
        self.roots.iter().map(|r| r.abs()).max().unwrap_or_default()
    }

    /// The multiset `{-x : x in self}`.
    pub fn negated(&self) -> Self {
        let mut roots: Vec<BigInt> = self.roots.iter().map(|r| -r).collect();
        roots.reverse();
        Self { roots }
    }

    /// Multiset union.
    pub fn union(&self, other: &Self) -> Self {
        let mut roots = self.roots.clone();
        roots.extend(other.roots.iter().cloned());
        roots.sort();
        Self { roots }
    }
}

impl fmt::Display for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.roots.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

impl SymmetricVector {
    pub fn values(&self) -> &[BigInt] {
        &self.s
    }

    /// `s_j` for `1 <= j <= n`.
    pub fn get(&self, j: usize) -> Option<&BigInt> {
        j.checked_sub(1).and_then(|i| self.s.get(i))
    }
}

impl IntPolynomial {
    /// Wraps a leading-first coefficient list. The leading coefficient must be 1.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Result<Self> {
        match coeffs.first() {
            None => Err(Error::EmptyCoefficients),
            Some(lead) if !lead.is_one() => Err(Error::NotMonic(lead.to_string())),
            Some(_) => Ok(Self { coeffs }),
        }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Result<Self> {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The constant polynomial 1 (degree 0).
    pub fn one() -> Self {
        Self {
            coeffs: vec![BigInt::one()],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient `a_i` of `x^(n-i)`.
    pub fn coeff(&self, i: usize) -> &BigInt {
        &self.coeffs[i]
    }

    pub fn constant_term(&self) -> &BigInt {
        &self.coeffs[self.degree()]
    }

    /// Horner evaluation from the leading coefficient.
    pub fn evaluate(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Multiplies in place by `(x - root)`.
    pub fn mul_linear(&mut self, root: &BigInt) {
        self.coeffs.push(BigInt::zero());
        for i in (1..self.coeffs.len()).rev() {
            let delta = root * &self.coeffs[i - 1];
            self.coeffs[i] -= delta;
        }
    }

    /// Exact product; the result is monic of degree `deg p + deg q`.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in other.coeffs.iter().enumerate() {
                coeffs[i + k] += a * b;
            }
        }
        Self { coeffs }
    }

    /// Quotient by `(x - root)` when the division is exact, `None` otherwise.
    pub fn div_linear(&self, root: &BigInt) -> Option<Self> {
        if self.degree() == 0 {
            return None;
        }
        let mut quotient = Vec::with_capacity(self.coeffs.len() - 1);
        let mut carry = BigInt::zero();
        for c in &self.coeffs[..self.coeffs.len() - 1] {
            carry = carry * root + c;
            quotient.push(carry.clone());
        }
        let remainder = carry * root + self.constant_term();
        remainder.is_zero().then_some(Self { coeffs: quotient })
    }

    /// `(-1)^n p(-x)`: negates every root, `a_i -> (-1)^i a_i`.
    pub fn sign_flip(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i.is_odd() { -c } else { c.clone() })
            .collect();
        Self { coeffs }
    }

    /// Sum of the absolute values of the coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let power = n - i;
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            if !magnitude.is_one() || power == 0 {
                write!(f, "{magnitude}")?;
            }
            match power {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{power}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// `prod (x - x_i)` over the multiset, by repeated multiplication with linear factors.
pub fn from_roots(roots: &RootMultiset) -> IntPolynomial {
    let mut p = IntPolynomial::one();
    for r in roots.roots() {
        p.mul_linear(r);
    }
    p
}

/// Elementary symmetric functions, updated one root at a time:
/// `e_k <- e_k + x * e_{k-1}`.
pub fn symmetric_functions(roots: &RootMultiset) -> SymmetricVector {
    let n = roots.len();
    let mut e = vec![BigInt::zero(); n + 1];
    e[0] = BigInt::one();
    for (count, x) in roots.roots().iter().enumerate() {
        for k in (1..=count + 1).rev() {
            let term = x * &e[k - 1];
            e[k] += term;
        }
    }
    e.remove(0);
    SymmetricVector { s: e }
}

pub fn multiply(p: &IntPolynomial, q: &IntPolynomial) -> IntPolynomial {
    p.multiply(q)
}

pub fn evaluate(p: &IntPolynomial, x: &BigInt) -> BigInt {
    p.evaluate(x)
}

pub fn sign_flip(p: &IntPolynomial) -> IntPolynomial {
    p.sign_flip()
}

/// Degree-raising multiplier: `(x+1)(x^2-1)^((m-1)/2)` for odd `m`,
/// `(x^2-1)^(m/2)` for even `m`.
pub fn multiplier_f(m: i64) -> Result<IntPolynomial> {
    if m < 1 {
        return Err(Error::invalid(format!(
            "multiplier degree must be >= 1, got {m}"
        )));
    }
    let square_minus_one = IntPolynomial::from_i64s(&[1, 0, -1])?;
    let mut p = if m % 2 == 1 {
        IntPolynomial::from_i64s(&[1, 1])?
    } else {
        IntPolynomial::one()
    };
    for _ in 0..m / 2 {
        p = p.multiply(&square_minus_one);
    }
    Ok(p)
}

/// `prod (x^2 - r_j^2)`: an even polynomial with roots `{±r_j}`.
pub fn family(rs: &[BigInt]) -> Result<IntPolynomial> {
    if rs.is_empty() {
        return Err(Error::EmptyRoots);
    }
    if let Some(pos) = rs.iter().position(Zero::is_zero) {
        return Err(Error::ZeroRoot(pos));
    }
    let mut p = IntPolynomial::one();
    for r in rs {
        let factor = IntPolynomial::from_coeffs(vec![BigInt::one(), BigInt::zero(), -(r * r)])?;
        p = p.multiply(&factor);
    }
    Ok(p)
}

/// Roots of [`family`], as a canonical multiset.
pub fn family_roots(rs: &[BigInt]) -> Result<RootMultiset> {
    RootMultiset::new(rs.iter().flat_map(|r| [r.clone(), -r]).collect())
}
