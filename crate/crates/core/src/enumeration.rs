//! Exhaustive enumeration of monic polynomials with nonzero integer roots
//! that have a prescribed pair of consecutive coefficients `(a_j, a_{j+1})`.
//!
//! Any such pair bounds every root, so the search space is finite. The
//! search walks nondecreasing root sequences inside the certified radius,
//! carrying the coefficients of the partial product. At the last root the
//! constrained coefficient `a_j` is linear in the unknown root, so the root
//! is solved for exactly instead of scanned.

use std::cmp::Ordering;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::bounds::{
    root_bound_alpha, root_bound_constant_term, root_bound_first_principle, BoundCertificate,
};
use crate::error::{Error, Result};
use crate::factor::divisors;
use crate::poly::{from_roots, IntPolynomial, RootMultiset};

/// Default cap on visited search nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Number of nodes a worker counts locally before publishing to the shared counter.
const FLUSH_INTERVAL: u64 = 1 << 12;

/// Coefficient magnitudes below `2^FAST_PATH_BITS` run on `i128`.
const FAST_PATH_BITS: u64 = 120;

/// Prescribed values `a_j = aj`, `a_{j+1} = aj1` for degree `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairConstraint {
    n: usize,
    j: usize,
    aj: BigInt,
    aj1: BigInt,
}

impl PairConstraint {
    pub fn new(n: usize, j: usize, aj: BigInt, aj1: BigInt) -> Result<Self> {
        if n < 2 {
            return Err(Error::DegreeTooSmall {
                what: "pair constraint",
                min: 2,
                got: n,
            });
        }
        if j < 1 || j > n - 1 {
            return Err(Error::invalid(format!(
                "position j must lie in 1..={} for degree {n}, got {j}",
                n - 1
            )));
        }
        Ok(Self { n, j, aj, aj1 })
    }

    pub fn from_i64s(n: usize, j: usize, aj: i64, aj1: i64) -> Result<Self> {
        Self::new(n, j, BigInt::from(aj), BigInt::from(aj1))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn j(&self) -> usize {
        self.j
    }

    pub fn aj(&self) -> &BigInt {
        &self.aj
    }

    pub fn aj1(&self) -> &BigInt {
        &self.aj1
    }

    /// `max(|a_j|, |a_{j+1}|)`.
    pub fn m(&self) -> BigInt {
        self.aj.abs().max(self.aj1.abs())
    }

    pub fn is_last_pair(&self) -> bool {
        self.j + 1 == self.n
    }

    /// True when `p` has degree `n` and the two prescribed coefficients.
    pub fn matches(&self, p: &IntPolynomial) -> bool {
        p.degree() == self.n && p.coeff(self.j) == &self.aj && p.coeff(self.j + 1) == &self.aj1
    }

    /// The constraint satisfied by the negated root sets of this one's solutions.
    pub fn sign_flipped(&self) -> Self {
        let flip = |i: usize, v: &BigInt| if i % 2 == 1 { -v } else { v.clone() };
        Self {
            n: self.n,
            j: self.j,
            aj: flip(self.j, &self.aj),
            aj1: flip(self.j + 1, &self.aj1),
        }
    }
}

impl fmt::Display for PairConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "n={} a_{}={} a_{}={}",
            self.n,
            self.j,
            self.aj,
            self.j + 1,
            self.aj1
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    /// The solution list is exhaustive.
    Complete,
    /// Both prescribed coefficients are zero; no two adjacent coefficients of
    /// a polynomial with nonzero integer roots vanish.
    InfeasibleByLemma2,
    /// A certified bound rules out every candidate.
    InfeasibleByBound,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Complete => "complete",
            Status::InfeasibleByLemma2 => "infeasible-by-lemma2",
            Status::InfeasibleByBound => "infeasible-by-bound",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A root multiset together with its polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub roots: RootMultiset,
    pub poly: IntPolynomial,
}

impl Solution {
    pub fn new(roots: RootMultiset) -> Self {
        let poly = from_roots(&roots);
        Self { roots, poly }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationResult {
    pub constraint: PairConstraint,
    pub status: Status,
    /// The bound the search was confined to.
    pub certificate: BoundCertificate,
    pub nodes_visited: u64,
    /// Sorted lexicographically by coefficient sequence.
    pub solutions: Vec<Solution>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Radius search, except that the last pair `(a_{n-1}, a_n)` is solved
    /// by factoring the constant term.
    #[default]
    Auto,
    /// Always run the radius-bounded search.
    RadiusSearch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker threads for the radius search; 1 runs on the calling thread.
    pub threads: usize,
    pub node_budget: u64,
    pub strategy: Strategy,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            threads: 1,
            node_budget: DEFAULT_NODE_BUDGET,
            strategy: Strategy::Auto,
        }
    }
}

pub fn enumerate_pair(c: &PairConstraint) -> Result<EnumerationResult> {
    enumerate_pair_with(c, &SearchOptions::default())
}

pub fn enumerate_pair_with(c: &PairConstraint, opts: &SearchOptions) -> Result<EnumerationResult> {
    if opts.threads == 0 {
        return Err(Error::invalid("thread count must be at least 1"));
    }
    if c.aj.is_zero() && c.aj1.is_zero() {
        return Ok(EnumerationResult {
            constraint: c.clone(),
            status: Status::InfeasibleByLemma2,
            certificate: root_bound_alpha(c.n, &BigInt::zero())?,
            nodes_visited: 0,
            solutions: Vec::new(),
        });
    }
    if c.is_last_pair() && opts.strategy == Strategy::Auto {
        return enumerate_last_pair_with(c, opts.node_budget);
    }

    let mut certificates = vec![root_bound_alpha(c.n, &c.m())?];
    if c.j == 1 {
        certificates.push(root_bound_first_principle(&c.aj, &c.aj1));
    }
    if c.is_last_pair() {
        certificates.push(match root_bound_constant_term(&c.aj1) {
            Ok(cert) => cert,
            Err(_) => BoundCertificate::infeasible_constant_term(&c.aj1),
        });
    }
    if let Some(cert) = certificates.iter().find(|cert| !cert.is_feasible()) {
        return Ok(infeasible_by_bound(c, cert.clone()));
    }
    let certificate = certificates
        .into_iter()
        .min_by(|a, b| a.radius_value().cmp(&b.radius_value()))
        .expect("alpha certificate is always present");
    let radius = certificate.radius_value().expect("feasible").clone();

    let (found, nodes_visited) = radius_search(c, &radius, opts)?;
    Ok(EnumerationResult {
        constraint: c.clone(),
        status: Status::Complete,
        certificate,
        nodes_visited,
        solutions: finish(c, found),
    })
}

fn infeasible_by_bound(c: &PairConstraint, certificate: BoundCertificate) -> EnumerationResult {
    EnumerationResult {
        constraint: c.clone(),
        status: Status::InfeasibleByBound,
        certificate,
        nodes_visited: 0,
        solutions: Vec::new(),
    }
}

/// Builds, checks and sorts the solutions found by a search.
fn finish(c: &PairConstraint, found: Vec<Vec<BigInt>>) -> Vec<Solution> {
    let mut solutions: Vec<Solution> = found
        .into_iter()
        .map(|roots| Solution::new(RootMultiset::new(roots).expect("search roots are nonzero")))
        .collect();
    for s in &solutions {
        assert!(c.matches(&s.poly), "search produced {} for {c}", s.poly);
    }
    solutions.sort_by(|a, b| a.poly.coeffs().cmp(b.poly.coeffs()));
    solutions.dedup();
    solutions
}

/// Integer type the radius search runs on.
trait Coeff: Clone + Integer + Signed + From<i64> + Send + Sync {
    fn from_big(v: &BigInt) -> Option<Self>;
}

impl Coeff for i128 {
    fn from_big(v: &BigInt) -> Option<Self> {
        v.to_i128()
    }
}

impl Coeff for BigInt {
    fn from_big(v: &BigInt) -> Option<Self> {
        Some(v.clone())
    }
}

/// Shared node counter with a hard cap.
struct NodeCounter {
    total: AtomicU64,
    budget: u64,
}

impl NodeCounter {
    fn new(budget: u64) -> Self {
        Self {
            total: AtomicU64::new(0),
            budget,
        }
    }

    fn add(&self, count: u64) -> Result<()> {
        let total = self.total.fetch_add(count, AtomicOrdering::Relaxed) + count;
        if total > self.budget {
            return Err(self.exceeded());
        }
        Ok(())
    }

    fn exceeded(&self) -> Error {
        Error::BudgetExceeded {
            what: "enumeration visited more search nodes than allowed".into(),
            budget: self.budget,
        }
    }
}

/// Depth-first search over nondecreasing root sequences drawn from `values`.
struct Dfs<'a, T> {
    n: usize,
    j: usize,
    aj: T,
    aj1: T,
    values: &'a [i64],
    counter: &'a NodeCounter,
    pending: u64,
    /// `levels[k]` holds the `k + 1` coefficients of the product of the first `k` roots.
    levels: Vec<Vec<T>>,
    path: Vec<i64>,
    found: Vec<Vec<i64>>,
}

impl<'a, T: Coeff> Dfs<'a, T> {
    fn new(c: &PairConstraint, aj: T, aj1: T, values: &'a [i64], counter: &'a NodeCounter) -> Self {
        let levels = (0..c.n).map(|k| vec![T::zero(); k + 1]).collect::<Vec<_>>();
        let mut dfs = Self {
            n: c.n,
            j: c.j,
            aj,
            aj1,
            values,
            counter,
            pending: 0,
            levels,
            path: Vec::with_capacity(c.n),
            found: Vec::new(),
        };
        dfs.levels[0][0] = T::one();
        dfs
    }

    fn tick(&mut self) -> Result<()> {
        self.pending += 1;
        if self.pending >= FLUSH_INTERVAL {
            self.flush()?;
        }
        Ok(())
    }

    fn flush(&mut self) -> Result<()> {
        let pending = std::mem::take(&mut self.pending);
        self.counter.add(pending)
    }

    /// Explores every completion whose first root is `values[first]`.
    fn run_from(mut self, first: usize) -> Result<Vec<Vec<i64>>> {
        self.push(0, first)?;
        self.path.pop();
        self.flush()?;
        Ok(self.found)
    }

    /// Appends `values[idx]` as root number `depth + 1` and explores below it.
    fn push(&mut self, depth: usize, idx: usize) -> Result<()> {
        self.tick()?;
        let x = T::from(self.values[idx]);
        let (lo, hi) = self.levels.split_at_mut(depth + 1);
        let (src, dst) = (&lo[depth], &mut hi[0]);
        dst[0] = T::one();
        for i in 1..=depth {
            dst[i] = src[i].clone() - x.clone() * src[i - 1].clone();
        }
        dst[depth + 1] = -(x * src[depth].clone());
        self.path.push(self.values[idx]);
        if depth + 2 == self.n {
            self.solve_last(idx)?;
        } else {
            for next in idx..self.values.len() {
                self.push(depth + 1, next)?;
                self.path.pop();
            }
        }
        Ok(())
    }

    /// With `n - 1` roots fixed, the final coefficients are
    /// `A_i = c_i - x c_{i-1}`; solve `A_j = aj`, `A_{j+1} = aj1` for `x`.
    fn solve_last(&mut self, start: usize) -> Result<()> {
        self.tick()?;
        let (cm, c0, c1) = {
            let c = &self.levels[self.n - 1];
            let at = |i: usize| c.get(i).cloned().unwrap_or_else(T::zero);
            (at(self.j - 1), at(self.j), at(self.j + 1))
        };
        let candidate = if !cm.is_zero() {
            let (q, r) = (c0.clone() - self.aj.clone()).div_rem(&cm);
            if !r.is_zero() {
                return Ok(());
            }
            q
        } else if c0 != self.aj {
            return Ok(());
        } else if !c0.is_zero() {
            let (q, r) = (c1.clone() - self.aj1.clone()).div_rem(&c0);
            if !r.is_zero() {
                return Ok(());
            }
            q
        } else {
            // Both constrained coefficients are independent of the last root.
            if c1 != self.aj1 {
                return Ok(());
            }
            for idx in start..self.values.len() {
                self.tick()?;
                let mut roots = self.path.clone();
                roots.push(self.values[idx]);
                self.found.push(roots);
            }
            return Ok(());
        };
        let lower = T::from(self.values[start]);
        let upper = T::from(*self.values.last().expect("nonempty"));
        if candidate.is_zero() || candidate < lower || candidate > upper {
            return Ok(());
        }
        if c1 - candidate.clone() * c0 != self.aj1 {
            return Ok(());
        }
        // Bounded by the search radius, hence fits.
        let x = self.values[start..]
            .iter()
            .copied()
            .find(|&v| T::from(v) == candidate)
            .expect("candidate within the value range");
        let mut roots = self.path.clone();
        roots.push(x);
        self.found.push(roots);
        Ok(())
    }
}

/// Nonzero integers in `[-radius, radius]`, ascending.
fn search_values(radius: i64) -> Vec<i64> {
    (-radius..=radius).filter(|&v| v != 0).collect()
}

fn radius_search(
    c: &PairConstraint,
    radius: &BigUint,
    opts: &SearchOptions,
) -> Result<(Vec<Vec<BigInt>>, u64)> {
    let counter = NodeCounter::new(opts.node_budget);
    let width = radius * 2u32;
    if width > BigUint::from(opts.node_budget) {
        return Err(counter.exceeded());
    }
    let radius = radius.to_i64().expect("radius below node budget");
    if radius == 0 {
        return Ok((Vec::new(), 0));
    }
    let values = search_values(radius);
    // Every coefficient of a product of n factors (x - r), |r| <= R, is at most (1 + R)^n.
    let coeff_bound = BigUint::from((radius + 1) as u64).pow(c.n as u32);
    let found = if coeff_bound.bits() < FAST_PATH_BITS {
        match (i128::from_big(&c.aj), i128::from_big(&c.aj1)) {
            (Some(aj), Some(aj1))
                if aj.unsigned_abs() < 1 << FAST_PATH_BITS
                    && aj1.unsigned_abs() < 1 << FAST_PATH_BITS =>
            {
                search_with::<i128>(c, aj, aj1, &values, &counter, opts.threads)?
            }
            // A target beyond every attainable coefficient has no solutions.
            _ => Vec::new(),
        }
    } else {
        search_with::<BigInt>(
            c,
            c.aj.clone(),
            c.aj1.clone(),
            &values,
            &counter,
            opts.threads,
        )?
    };
    let nodes = counter.total.load(AtomicOrdering::Relaxed);
    if nodes > opts.node_budget {
        return Err(counter.exceeded());
    }
    let found = found
        .into_iter()
        .map(|roots| roots.into_iter().map(BigInt::from).collect())
        .collect();
    Ok((found, nodes))
}

fn search_with<T: Coeff>(
    c: &PairConstraint,
    aj: T,
    aj1: T,
    values: &[i64],
    counter: &NodeCounter,
    threads: usize,
) -> Result<Vec<Vec<i64>>> {
    let subtree =
        |first: usize| Dfs::new(c, aj.clone(), aj1.clone(), values, counter).run_from(first);
    let parts: Vec<Vec<Vec<i64>>> = if threads <= 1 {
        (0..values.len()).map(subtree).collect::<Result<_>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::invalid(format!("cannot start worker threads: {e}")))?;
        pool.install(|| {
            (0..values.len())
                .into_par_iter()
                .map(subtree)
                .collect::<Result<_>>()
        })?
    };
    Ok(parts.into_iter().flatten().collect())
}

pub fn enumerate_last_pair(c: &PairConstraint) -> Result<EnumerationResult> {
    enumerate_last_pair_with(c, DEFAULT_NODE_BUDGET)
}

/// Solves `(a_{n-1}, a_n)` by splitting `(-1)^n a_n = x_1 ... x_n` into
/// nondecreasing nonzero factors and keeping the splits with the right `a_{n-1}`.
pub fn enumerate_last_pair_with(c: &PairConstraint, node_budget: u64) -> Result<EnumerationResult> {
    if !c.is_last_pair() {
        return Err(Error::invalid(format!(
            "constant-term search needs j = n - 1, got j = {} for n = {}",
            c.j, c.n
        )));
    }
    if c.aj1.is_zero() {
        if c.aj.is_zero() {
            return enumerate_pair_with(
                c,
                &SearchOptions {
                    node_budget,
                    ..SearchOptions::default()
                },
            );
        }
        return Ok(infeasible_by_bound(
            c,
            BoundCertificate::infeasible_constant_term(&c.aj1),
        ));
    }
    let certificate = root_bound_constant_term(&c.aj1)?;
    let product = if c.n.is_multiple_of(2) {
        c.aj1.clone()
    } else {
        -c.aj1.clone()
    };
    let positive = divisors(product.magnitude());
    let values: Vec<BigInt> = positive
        .iter()
        .rev()
        .map(|d| -BigInt::from(d.clone()))
        .chain(positive.iter().map(|d| BigInt::from(d.clone())))
        .collect();

    let mut search = FactorSearch {
        c,
        values: &values,
        counter: NodeCounter::new(node_budget),
        nodes: 0,
        path: Vec::with_capacity(c.n),
        found: Vec::new(),
    };
    search.descend(0, &product)?;
    let nodes_visited = search.nodes;
    let found = search.found;
    Ok(EnumerationResult {
        constraint: c.clone(),
        status: Status::Complete,
        certificate,
        nodes_visited,
        solutions: finish(c, found),
    })
}

struct FactorSearch<'a> {
    c: &'a PairConstraint,
    /// Signed divisors of the root product, ascending.
    values: &'a [BigInt],
    counter: NodeCounter,
    nodes: u64,
    path: Vec<BigInt>,
    found: Vec<Vec<BigInt>>,
}

impl FactorSearch<'_> {
    fn tick(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.counter.budget {
            return Err(self.counter.exceeded());
        }
        Ok(())
    }

    fn descend(&mut self, start: usize, rest: &BigInt) -> Result<()> {
        let remaining = self.c.n - self.path.len();
        if remaining == 1 {
            self.tick()?;
            let lower = &self.values[start];
            if rest >= lower {
                let mut roots = self.path.clone();
                roots.push(rest.clone());
                let p = from_roots(&RootMultiset::new(roots.clone()).expect("nonzero factors"));
                if p.coeff(self.c.n - 1) == &self.c.aj {
                    self.found.push(roots);
                }
            }
            return Ok(());
        }
        for idx in start..self.values.len() {
            let x = &self.values[idx];
            if x.is_positive() {
                // All remaining factors are >= x > 0.
                if rest.is_negative() || x.pow(remaining as u32) > *rest {
                    break;
                }
            }
            if !rest.is_multiple_of(x) {
                continue;
            }
            self.tick()?;
            let quotient = rest / x;
            self.path.push(x.clone());
            self.descend(idx, &quotient)?;
            self.path.pop();
        }
        Ok(())
    }
}

/// `C(2R + n - 1, n)`: multisets of size `n` from the `2R` nonzero integers in `[-R, R]`.
pub fn multiset_count(n: usize, radius: u64) -> BigUint {
    let pool = BigUint::from(2 * radius);
    let mut count = BigUint::one();
    for i in 0..n as u64 {
        count = count * (&pool + i) / (i + 1);
    }
    count
}

fn check_brute_force_args(n: usize, radius: u64, budget: u64) -> Result<()> {
    if n < 2 {
        return Err(Error::DegreeTooSmall {
            what: "brute force",
            min: 2,
            got: n,
        });
    }
    if radius < 1 {
        return Err(Error::invalid("brute-force radius must be at least 1"));
    }
    let count = multiset_count(n, radius);
    if count > BigUint::from(budget) {
        return Err(Error::BudgetExceeded {
            what: format!("brute force over degree {n}, radius {radius} needs {count} multisets"),
            budget,
        });
    }
    Ok(())
}

/// Calls `visit` on every multiset of `n` nonzero integers in `[-radius, radius]`
/// (ascending lexicographic order) with its polynomial. Returns the count.
pub fn brute_force_for_each<F>(n: usize, radius: u64, budget: u64, mut visit: F) -> Result<u64>
where
    F: FnMut(&[i64], &IntPolynomial),
{
    check_brute_force_args(n, radius, budget)?;
    let values = search_values(radius as i64);
    let mut prefix: Vec<IntPolynomial> = vec![IntPolynomial::one()];
    let mut roots: Vec<i64> = Vec::with_capacity(n);
    let mut idx: Vec<usize> = Vec::with_capacity(n);
    let mut count = 0u64;

    // Iterative nondecreasing walk; `idx` holds positions into `values`.
    let mut next = 0usize;
    loop {
        if idx.len() < n && next < values.len() {
            let x = values[next];
            let mut p = prefix.last().expect("prefix").clone();
            p.mul_linear(&BigInt::from(x));
            prefix.push(p);
            roots.push(x);
            idx.push(next);
            if idx.len() == n {
                visit(&roots, prefix.last().expect("prefix"));
                count += 1;
            }
            continue;
        }
        match idx.pop() {
            None => break,
            Some(last) => {
                roots.pop();
                prefix.pop();
                next = last + 1;
            }
        }
    }
    Ok(count)
}

/// Every multiset of `n` nonzero integers in `[-radius, radius]` with its polynomial,
/// in ascending lexicographic root order.
pub fn brute_force_all(n: usize, radius: u64, budget: u64) -> Result<Vec<Solution>> {
    let mut out = Vec::new();
    brute_force_for_each(n, radius, budget, |roots, p| {
        out.push(Solution {
            roots: RootMultiset::from_i64s(roots).expect("nonzero"),
            poly: p.clone(),
        });
    })?;
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightnessEntry {
    pub roots: RootMultiset,
    pub poly: IntPolynomial,
    /// `max|x_i|^2 / max(|a_j|, |a_{j+1}|)^2`
    pub ratio_squared: BigRational,
}

pub const DEFAULT_LEADERBOARD: usize = 10;

/// The `top` multisets with the largest `max|x|^2 / M^2` over the brute-force space,
/// ties broken by ascending coefficient sequence.
pub fn tightness_search(
    n: usize,
    j: usize,
    radius: u64,
    top: usize,
    budget: u64,
) -> Result<Vec<TightnessEntry>> {
    PairConstraint::new(n, j, BigInt::zero(), BigInt::zero())?;
    let mut entries = Vec::new();
    brute_force_for_each(n, radius, budget, |roots, p| {
        let m = p.coeff(j).abs().max(p.coeff(j + 1).abs());
        if m.is_zero() {
            return;
        }
        let max_root = BigInt::from(roots.iter().map(|r| r.unsigned_abs()).max().unwrap_or(0));
        entries.push(TightnessEntry {
            roots: RootMultiset::from_i64s(roots).expect("nonzero"),
            poly: p.clone(),
            ratio_squared: BigRational::new(&max_root * &max_root, &m * &m),
        });
    })?;
    entries.sort_by(|a, b| match b.ratio_squared.cmp(&a.ratio_squared) {
        Ordering::Equal => a.poly.coeffs().cmp(b.poly.coeffs()),
        other => other,
    });
    entries.truncate(top);
    Ok(entries)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn roots_of(r: &EnumerationResult) -> Vec<Vec<i64>> {
        r.solutions
            .iter()
            .map(|s| {
                s.roots
                    .roots()
                    .iter()
                    .map(|v| v.try_into().unwrap())
                    .collect()
            })
            .collect()
    }

    fn constraint(n: usize, j: usize, aj: i64, aj1: i64) -> PairConstraint {
        PairConstraint::from_i64s(n, j, aj, aj1).unwrap()
    }

    #[test]
    fn quadratic_example() {
        let r = enumerate_pair(&constraint(2, 1, -3, 2)).unwrap();
        assert_eq!(r.status, Status::Complete);
        assert_eq!(roots_of(&r), vec![vec![1, 2]]);
        assert_eq!(
            r.solutions[0].poly,
            IntPolynomial::from_i64s(&[1, -3, 2]).unwrap()
        );
    }

    #[test]
    fn cubic_example_uses_sum_of_squares_radius() {
        let r = enumerate_pair(&constraint(3, 1, -6, 11)).unwrap();
        assert_eq!(roots_of(&r), vec![vec![1, 2, 3]]);
        assert_eq!(r.certificate.radius_value(), Some(&BigUint::from(3u32)));
    }

    #[test]
    fn zero_pair_short_circuits() {
        for (n, j) in [(2, 1), (4, 2), (5, 4)] {
            let r = enumerate_pair(&constraint(n, j, 0, 0)).unwrap();
            assert_eq!(r.status, Status::InfeasibleByLemma2);
            assert!(r.solutions.is_empty());
            assert_eq!(r.nodes_visited, 0);
        }
    }

    #[test]
    fn negative_sum_of_squares_is_infeasible() {
        let r = enumerate_pair(&constraint(3, 1, 0, 1)).unwrap();
        assert_eq!(r.status, Status::InfeasibleByBound);
        assert!(r.solutions.is_empty());
    }

    #[test]
    fn last_pair_examples() {
        let r = enumerate_last_pair(&constraint(2, 1, -3, 2)).unwrap();
        assert_eq!(roots_of(&r), vec![vec![1, 2]]);
        let r = enumerate_last_pair(&constraint(3, 2, 11, -6)).unwrap();
        assert_eq!(roots_of(&r), vec![vec![1, 2, 3]]);
        let r = enumerate_last_pair(&constraint(2, 1, 0, -1)).unwrap();
        assert_eq!(roots_of(&r), vec![vec![-1, 1]]);
    }

    #[test]
    fn last_pair_zero_constant_is_infeasible() {
        let r = enumerate_last_pair(&constraint(3, 2, 5, 0)).unwrap();
        assert_eq!(r.status, Status::InfeasibleByBound);
        assert!(enumerate_last_pair(&constraint(3, 1, 5, 1)).is_err());
    }

    #[test]
    fn malformed_constraints() {
        assert!(PairConstraint::from_i64s(1, 1, 1, 1).is_err());
        assert!(PairConstraint::from_i64s(3, 0, 1, 1).is_err());
        assert!(PairConstraint::from_i64s(3, 3, 1, 1).is_err());
    }

    #[test]
    fn multiple_solutions_are_sorted() {
        // sum 0, sum of squares 14: {-3, 1, 2} and {-2, -1, 3}
        let r = enumerate_pair(&constraint(3, 1, 0, -7)).unwrap();
        assert_eq!(roots_of(&r), vec![vec![-2, -1, 3], vec![-3, 1, 2]]);
        for s in &r.solutions {
            assert_eq!(s.poly.coeff(1), &BigInt::zero());
        }
        let coeffs: Vec<_> = r
            .solutions
            .iter()
            .map(|s| s.poly.coeffs().to_vec())
            .collect();
        let mut sorted = coeffs.clone();
        sorted.sort();
        assert_eq!(coeffs, sorted);
        assert!(!r.solutions.is_empty());
    }

    #[test]
    fn threads_do_not_change_the_result() {
        let c = constraint(4, 2, 7, -6);
        let single = enumerate_pair(&c).unwrap();
        let multi = enumerate_pair_with(
            &c,
            &SearchOptions {
                threads: 4,
                ..SearchOptions::default()
            },
        )
        .unwrap();
        assert_eq!(single, multi);
    }

    #[test]
    fn budget_is_enforced() {
        let c = constraint(5, 2, 40, -40);
        let err = enumerate_pair_with(
            &c,
            &SearchOptions {
                node_budget: 1000,
                ..SearchOptions::default()
            },
        )
        .unwrap_err();
        assert!(err.is_budget());
        assert!(enumerate_last_pair_with(&constraint(6, 5, 1, 720_720), 10)
            .unwrap_err()
            .is_budget());
    }

    #[test]
    fn brute_force_sizes() {
        let all = brute_force_all(2, 1, 1000).unwrap();
        let sets: Vec<_> = all.iter().map(|s| s.roots.clone()).collect();
        assert_eq!(
            sets,
            vec![
                RootMultiset::from_i64s(&[-1, -1]).unwrap(),
                RootMultiset::from_i64s(&[-1, 1]).unwrap(),
                RootMultiset::from_i64s(&[1, 1]).unwrap(),
            ]
        );
        assert_eq!(brute_force_all(2, 2, 1000).unwrap().len(), 10);
        assert_eq!(brute_force_all(3, 1, 1000).unwrap().len(), 4);
        assert_eq!(multiset_count(4, 3), BigUint::from(126u32));
        assert!(brute_force_all(4, 3, 100).unwrap_err().is_budget());
        assert!(brute_force_all(1, 3, 100).is_err());
        assert!(brute_force_all(2, 0, 100).is_err());
    }

    #[test]
    fn brute_force_polynomials_match_roots() {
        for s in brute_force_all(3, 2, 1000).unwrap() {
            assert_eq!(s.poly, from_roots(&s.roots));
        }
    }

    #[test]
    fn tightness_smallest_case() {
        let top = tightness_search(2, 1, 1, DEFAULT_LEADERBOARD, 1000).unwrap();
        assert_eq!(top.len(), 3);
        assert_eq!(top[0].roots, RootMultiset::from_i64s(&[-1, 1]).unwrap());
        assert_eq!(top[0].ratio_squared, BigRational::one());
        let quarter = BigRational::new(BigInt::one(), BigInt::from(4));
        assert_eq!(top[1].ratio_squared, quarter);
        // ties ordered by coefficients: [1,-2,1] before [1,2,1]
        assert_eq!(top[1].roots, RootMultiset::from_i64s(&[1, 1]).unwrap());
    }

    #[test]
    fn tightness_quadratic_radius_three() {
        let top = tightness_search(2, 1, 3, 5, 1000).unwrap();
        assert_eq!(top.len(), 5);
        // ratio 1 is the maximum; {-1, 3} has the smallest coefficients among the ties
        assert_eq!(top[0].roots, RootMultiset::from_i64s(&[-1, 3]).unwrap());
        assert_eq!(top[0].ratio_squared, BigRational::one());
        let all = tightness_search(2, 1, 3, 100, 1000).unwrap();
        assert_eq!(all.len(), 21);
        assert!(all
            .iter()
            .any(|e| e.roots == RootMultiset::from_i64s(&[-1, 1]).unwrap()
                && e.ratio_squared == BigRational::one()));
        for w in top.windows(2) {
            assert!(w[0].ratio_squared >= w[1].ratio_squared);
        }
    }

    #[test]
    fn tightness_cubic_within_alpha() {
        let top = tightness_search(3, 1, 4, DEFAULT_LEADERBOARD, 100_000).unwrap();
        assert_eq!(top.len(), DEFAULT_LEADERBOARD);
        assert!(top[0].ratio_squared <= BigRational::from_integer(BigInt::from(2)));
    }
}
