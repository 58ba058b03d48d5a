//! Root bounds and the chain-bound function.
//!
//! `alpha_n` and the closed-form chain bound are irrational for many degrees,
//! so they are carried as exact fourth powers and every comparison is done on
//! integer powers of the quantities involved. No floating point appears here.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// `alpha_n`, held as the exact integer `alpha_n^4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaValue {
    n: usize,
    fourth_power: BigUint,
}

impl AlphaValue {
    pub fn n(&self) -> usize {
        self.n
    }

    /// `alpha_n^4`, always an integer.
    pub fn fourth_power(&self) -> &BigUint {
        &self.fourth_power
    }

    /// `alpha_n^2` when it is an integer (`n <= 5`, or `n` even).
    pub fn squared(&self) -> Option<BigUint> {
        let root = self.fourth_power.sqrt();
        (&root * &root == self.fourth_power).then_some(root)
    }
}

/// Renders `alpha_n^2`, either as an integer or as `k*sqrt(2)`.
impl fmt::Display for AlphaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.squared() {
            Some(sq) => write!(f, "{sq}"),
            // alpha^4 = 2^(2k+1) here, so alpha^2 = 2^k * sqrt(2)
            None => write!(f, "{}*sqrt(2)", (&self.fourth_power / 2u32).sqrt()),
        }
    }
}

/// `alpha_n`: 1, sqrt 2, 3 sqrt 2, 15 sqrt 2, then `2^((n^2+2n-18)/4)` for `n >= 6`.
pub fn alpha(n: usize) -> Result<AlphaValue> {
    let fourth_power = match n {
        0 | 1 => return Err(Error::invalid(format!("alpha_n requires n >= 2, got {n}"))),
        2 => BigUint::one(),
        3 => BigUint::from(4u32),
        4 => BigUint::from(18u32 * 18),
        5 => BigUint::from(450u32 * 450),
        _ => {
            let e = n * n + 2 * n - 18;
            BigUint::one() << e
        }
    };
    Ok(AlphaValue { n, fourth_power })
}

/// Upper bound `k(t)` on every coefficient of a chain of `t` consecutive
/// coefficients, in units of `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainBound {
    pub t: usize,
    pub value: BigUint,
}

/// The factor `4 * 2^floor((t-1)/2) - 1` taking `k(t)` to `k(t+1)`.
pub fn chain_step_factor(t: usize) -> BigUint {
    (BigUint::from(4u32) << ((t - 1) / 2)) - 1u32
}

/// `k(2)=1`, `k(3)=3`, `k(4)=15`, then `15 * prod_{j=2}^{t-3} (4 * 2^floor((j+1)/2) - 1)`.
pub fn k_product(t: usize) -> Result<ChainBound> {
    let value = match t {
        0 | 1 => return Err(Error::invalid(format!("k(t) requires t >= 2, got {t}"))),
        2 => BigUint::one(),
        3 => BigUint::from(3u32),
        _ => {
            let mut v = BigUint::from(15u32);
            for j in 2..=t.saturating_sub(3) {
                v *= chain_step_factor(j + 2);
            }
            v
        }
    };
    Ok(ChainBound { t, value })
}

/// Closed-form chain bound `2^(e/4)` with `e = (t+1)^2 + 2(t+1) - 20`.
///
/// `e` is a multiple of 4 for odd `t` and odd for even `t`; the quantity is
/// held through its exponent so both cases stay exact.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosedChainBound {
    pub t: usize,
    /// Four times the base-2 exponent.
    pub quarter_exponent: u64,
}

impl ClosedChainBound {
    pub fn is_integral(&self) -> bool {
        self.quarter_exponent.is_multiple_of(4)
    }

    /// The bound itself when its exponent is an integer.
    pub fn value(&self) -> Option<BigUint> {
        self.is_integral()
            .then(|| BigUint::one() << (self.quarter_exponent / 4))
    }

    /// Its square when that is an integer.
    pub fn squared(&self) -> Option<BigUint> {
        self.quarter_exponent
            .is_multiple_of(2)
            .then(|| BigUint::one() << (self.quarter_exponent / 2))
    }

    /// Its fourth power `2^e`, always an integer.
    pub fn fourth_power(&self) -> BigUint {
        BigUint::one() << self.quarter_exponent
    }
}

impl fmt::Display for ClosedChainBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.value() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "2^({}/4)", self.quarter_exponent),
        }
    }
}

pub fn k_closed(t: usize) -> Result<ClosedChainBound> {
    if t < 5 {
        return Err(Error::invalid(format!(
            "closed chain bound requires t >= 5, got {t}"
        )));
    }
    let s = (t + 1) as u64;
    Ok(ClosedChainBound {
        t,
        quarter_exponent: s * s + 2 * s - 20,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundMethod {
    ConstantTerm,
    SumOfSquares,
    Alpha,
}

impl BoundMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            BoundMethod::ConstantTerm => "constant-term",
            BoundMethod::SumOfSquares => "sum-of-squares",
            BoundMethod::Alpha => "alpha",
        }
    }
}

impl fmt::Display for BoundMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Radius {
    /// Every root has absolute value at most this.
    Feasible(BigUint),
    /// No polynomial with nonzero integer roots has the given coefficients.
    Infeasible,
}

impl fmt::Display for Radius {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Radius::Feasible(r) => write!(f, "{r}"),
            Radius::Infeasible => f.write_str("infeasible"),
        }
    }
}

/// A certified bound on the absolute value of every root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCertificate {
    pub method: BoundMethod,
    pub radius: Radius,
    /// The coefficient data the bound was computed from.
    pub inputs: Vec<(&'static str, BigInt)>,
    pub alpha: Option<AlphaValue>,
}

impl BoundCertificate {
    pub fn radius_value(&self) -> Option<&BigUint> {
        match &self.radius {
            Radius::Feasible(r) => Some(r),
            Radius::Infeasible => None,
        }
    }

    pub fn is_feasible(&self) -> bool {
        matches!(self.radius, Radius::Feasible(_))
    }

    pub(crate) fn infeasible_constant_term(an: &BigInt) -> Self {
        Self {
            method: BoundMethod::ConstantTerm,
            radius: Radius::Infeasible,
            inputs: vec![("an", an.clone())],
            alpha: None,
        }
    }
}

/// Largest `r >= 0` with `r^2 <= alpha_n^2 M^2`, i.e. `r^4 <= alpha_n^4 M^4`.
pub fn root_bound_alpha(n: usize, m: &BigInt) -> Result<BoundCertificate> {
    if m.is_negative() {
        return Err(Error::invalid(format!(
            "bound M must be nonnegative, got {m}"
        )));
    }
    let a = alpha(n)?;
    let m_abs = m.magnitude();
    let m4 = m_abs.pow(4u32);
    let radius = (a.fourth_power() * m4).nth_root(4);
    Ok(BoundCertificate {
        method: BoundMethod::Alpha,
        radius: Radius::Feasible(radius),
        inputs: vec![("n", BigInt::from(n)), ("M", m.clone())],
        alpha: Some(a),
    })
}

/// `floor(sqrt(a_1^2 - 2 a_2))`, the sum of the squared roots; infeasible when negative.
pub fn root_bound_first_principle(a1: &BigInt, a2: &BigInt) -> BoundCertificate {
    let sum_sq: BigInt = a1 * a1 - 2 * a2;
    let radius = if sum_sq.is_negative() {
        Radius::Infeasible
    } else {
        Radius::Feasible(sum_sq.magnitude().sqrt())
    };
    BoundCertificate {
        method: BoundMethod::SumOfSquares,
        radius,
        inputs: vec![("a1", a1.clone()), ("a2", a2.clone())],
        alpha: None,
    }
}

/// `|a_n|`: every root divides the constant term.
pub fn root_bound_constant_term(an: &BigInt) -> Result<BoundCertificate> {
    if an.is_zero() {
        return Err(Error::invalid(
            "constant term is zero; nonzero roots force a nonzero constant term",
        ));
    }
    Ok(BoundCertificate {
        method: BoundMethod::ConstantTerm,
        radius: Radius::Feasible(an.magnitude().clone()),
        inputs: vec![("an", an.clone())],
        alpha: None,
    })
}
