//! Counting binary chains of length `n` that contain "11" or end with 1.
//!
//! Read a chain as the set of known coefficient positions `1..=n`: such a
//! set fixes finitely many polynomials when it holds two consecutive
//! positions or the last one. The complement (no "11", ending in 0) follows
//! a Fibonacci recurrence, so the good chains approach all of `2^n`.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest `n` the brute-force scan accepts.
pub const BRUTE_FORCE_MAX: u32 = 22;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainCount {
    pub n: u32,
    pub good: BigUint,
    pub total: BigUint,
}

impl ChainCount {
    /// Chains avoiding "11" and ending in 0.
    pub fn complement(&self) -> BigUint {
        &self.total - &self.good
    }

    pub fn ratio(&self) -> f64 {
        let good = self.good.to_f64().unwrap_or(f64::INFINITY);
        let total = self.total.to_f64().unwrap_or(f64::INFINITY);
        if total.is_finite() {
            good / total
        } else {
            // Both overflow: fall back to the complement, which is tiny relative to 2^n.
            1.0 - (self.complement().bits() as f64 - self.n as f64).exp2()
        }
    }
}

fn require_n(n: u32) -> Result<()> {
    if n < 2 {
        return Err(Error::invalid(format!(
            "chain length must be >= 2, got {n}"
        )));
    }
    Ok(())
}

/// Exact count by a four-state automaton: last symbol and whether "11" has occurred.
pub fn chain_count_exact(n: u32) -> Result<ChainCount> {
    require_n(n)?;
    // counts[last][seen]
    let mut counts = [
        [BigUint::zero(), BigUint::zero()],
        [BigUint::zero(), BigUint::zero()],
    ];
    counts[0][0] = BigUint::one();
    counts[1][0] = BigUint::one();
    for _ in 1..n {
        let [[z0, z1], [o0, o1]] = &counts;
        let next = [
            [z0 + o0, z1 + o1],
            // appending 1 after a 1 creates "11"
            [z0.clone(), z1 + o0 + o1],
        ];
        counts = next;
    }
    let [[_, z1], [o0, o1]] = counts;
    Ok(ChainCount {
        n,
        good: z1 + o0 + o1,
        total: BigUint::one() << n,
    })
}

/// `2^n - (1/2 + 3 sqrt5/10) phi^(n-1) + (-1/2 + 3 sqrt5/10) psi^(n-1)` in `f64`.
pub fn chain_count_closed(n: u32) -> Result<f64> {
    require_n(n)?;
    if n > f64::MAX_EXP as u32 - 1 {
        return Err(Error::FloatRange(format!("2^{n}")));
    }
    let sqrt5 = 5f64.sqrt();
    let phi = (1.0 + sqrt5) / 2.0;
    let psi = (1.0 - sqrt5) / 2.0;
    let e = (n - 1) as i32;
    let c_phi = 0.5 + 3.0 * sqrt5 / 10.0;
    let c_psi = -0.5 + 3.0 * sqrt5 / 10.0;
    let value = 2f64.powi(n as i32) - c_phi * phi.powi(e) + c_psi * psi.powi(e);
    if !value.is_finite() {
        return Err(Error::FloatRange(format!(
            "chain count closed form at n = {n}"
        )));
    }
    Ok(value)
}

/// Literal scan of all `2^n` strings; bit 0 is the last symbol.
pub fn chain_brute_force(n: u32) -> Result<u64> {
    if !(2..=BRUTE_FORCE_MAX).contains(&n) {
        return Err(Error::invalid(format!(
            "brute-force chain scan supports 2 <= n <= {BRUTE_FORCE_MAX}, got {n}"
        )));
    }
    Ok((0u64..1 << n)
        .filter(|&s| s & (s >> 1) != 0 || s & 1 == 1)
        .count() as u64)
}
