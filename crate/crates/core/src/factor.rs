//! Integer factorization and divisor lists for the constant-term search.
//!
//! Trial division by small primes, then Miller-Rabin and Brent's variant of
//! Pollard rho on whatever cofactor is left.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

const TRIAL_LIMIT: u32 = 1 << 12;

/// Miller-Rabin bases; deterministic below 3.3 * 10^24.
const WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];

fn small_primes(limit: u32) -> Vec<u32> {
    let mut sieve = vec![true; limit as usize + 1];
    let mut primes = Vec::new();
    for p in 2..=limit as usize {
        if sieve[p] {
            primes.push(p as u32);
            for m in (p * p..=limit as usize).step_by(p) {
                sieve[m] = false;
            }
        }
    }
    primes
}

pub fn is_probable_prime(n: &BigUint) -> bool {
    let two = BigUint::from(2u32);
    if *n < two {
        return false;
    }
    for &w in &WITNESSES {
        let w = BigUint::from(w);
        if *n == w {
            return true;
        }
        if (n % &w).is_zero() {
            return false;
        }
    }
    let n_minus_one = n - 1u32;
    let s = n_minus_one.trailing_zeros().unwrap_or(0);
    let d = &n_minus_one >> s;
    'witness: for &w in &WITNESSES {
        let mut x = BigUint::from(w).modpow(&d, n);
        if x.is_one() || x == n_minus_one {
            continue;
        }
        for _ in 1..s {
            x = (&x * &x) % n;
            if x == n_minus_one {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Returns a nontrivial factor of the odd composite `n`.
fn pollard_brent(n: &BigUint) -> BigUint {
    let mut c = BigUint::one();
    loop {
        let step = |x: &BigUint| (x * x + &c) % n;
        let mut y = BigUint::from(2u32);
        let mut r: u64 = 1;
        let mut q = BigUint::one();
        let mut g = BigUint::one();
        let mut x = y.clone();
        let mut ys = y.clone();
        while g.is_one() {
            x = y.clone();
            for _ in 0..r {
                y = step(&y);
            }
            let mut k = 0;
            while k < r && g.is_one() {
                ys = y.clone();
                for _ in 0..(128).min(r - k) {
                    y = step(&y);
                    let diff = if x > y { &x - &y } else { &y - &x };
                    q = (q * diff) % n;
                }
                g = q.gcd(n);
                k += 128;
            }
            r *= 2;
        }
        if g == *n {
            loop {
                ys = step(&ys);
                let diff = if x > ys { &x - &ys } else { &ys - &x };
                g = diff.gcd(n);
                if !g.is_one() {
                    break;
                }
            }
        }
        if g != *n {
            return g;
        }
        c += 1u32;
    }
}

fn split_into(n: BigUint, out: &mut Vec<BigUint>) {
    if n.is_one() {
        return;
    }
    if is_probable_prime(&n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(&n);
    let rest = &n / &d;
    split_into(d, out);
    split_into(rest, out);
}

/// Prime factorization as `(prime, exponent)` pairs in increasing prime order.
/// Returns an empty list for 0 and 1.
pub fn factorize(n: &BigUint) -> Vec<(BigUint, u32)> {
    if n.is_zero() {
        return Vec::new();
    }
    let mut primes = Vec::new();
    let mut rest = n.clone();
    for p in small_primes(TRIAL_LIMIT) {
        let p = BigUint::from(p);
        if &p * &p > rest {
            break;
        }
        while (&rest % &p).is_zero() {
            rest /= &p;
            primes.push(p.clone());
        }
    }
    split_into(rest, &mut primes);
    primes.sort();
    let mut grouped: Vec<(BigUint, u32)> = Vec::new();
    for p in primes {
        match grouped.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => grouped.push((p, 1)),
        }
    }
    grouped
}

/// All positive divisors of `n > 0`, ascending.
pub fn divisors(n: &BigUint) -> Vec<BigUint> {
    let mut divs = vec![BigUint::one()];
    for (p, e) in factorize(n) {
        let base = divs.clone();
        let mut power = BigUint::one();
        for _ in 0..e {
            power *= &p;
            divs.extend(base.iter().map(|d| d * &power));
        }
    }
    divs.sort();
    divs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_divisors(n: u64) -> Vec<BigUint> {
        (1..=n)
            .filter(|d| n.is_multiple_of(*d))
            .map(BigUint::from)
            .collect()
    }

    #[test]
    fn divisors_match_trial_scan() {
        for n in 1..=2000u64 {
            assert_eq!(divisors(&BigUint::from(n)), brute_divisors(n), "n = {n}");
        }
    }

    #[test]
    fn factorize_large_semiprime() {
        let p = BigUint::from(1_000_000_007u64);
        let q = BigUint::from(998_244_353u64);
        let f = factorize(&(&p * &q * &p));
        assert_eq!(f, vec![(q, 1), (p, 2)]);
    }

    #[test]
    fn primality() {
        assert!(is_probable_prime(&BigUint::from(2u32)));
        assert!(is_probable_prime(&BigUint::from(1_000_000_007u64)));
        assert!(!is_probable_prime(&BigUint::from(1u32)));
        assert!(!is_probable_prime(&BigUint::from(561u32)));
        // strong pseudoprime to base 2
        assert!(!is_probable_prime(&BigUint::from(2047u32)));
    }

    #[test]
    fn divisor_count_of_highly_composite() {
        // 720720 = 2^4 3^2 5 7 11 13
        assert_eq!(divisors(&BigUint::from(720_720u32)).len(), 240);
    }
}
