//! Exact integer and rational arithmetic: p-adic valuations and norms,
//! base-p digit sums, factorials, Pochhammer symbols, binomials.
//!
//! Norms are kept as exact rational *exponents* (`|x|_p = p^e`), never as
//! floating-point magnitudes, so region bounds like p^((r-s-1)/(p-1)) can be
//! compared exactly.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::Error;

pub type Int = BigInt;
pub type Rat = num_rational::BigRational;

/// `Int` from a machine integer.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Exact rational n/d.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(int(n), int(d))
}

/// `Rat` from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(int(n))
}

/// Largest value accepted by [`Prime::new`]. The fixed Miller-Rabin base set
/// below is deterministic for everything under this bound.
pub const MAX_PRIME: u64 = 330_000_000_000_000;

/// A checked prime. Construction runs a deterministic primality test.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Prime(u64);

impl Prime {
    pub fn new(value: u64) -> Result<Self, Error> {
        if value >= MAX_PRIME {
            return Err(Error::PrimeOutOfRange(value));
        }
        if !is_prime_u64(value) {
            return Err(Error::NotPrime(value));
        }
        Ok(Prime(value))
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn to_int(self) -> Int {
        Int::from(self.0)
    }

    pub fn to_uint(self) -> BigUint {
        BigUint::from(self.0)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The first `count` primes, in order.
pub fn first_primes(count: usize) -> Vec<Prime> {
    let mut out = Vec::with_capacity(count);
    let mut n = 2u64;
    while out.len() < count {
        if is_prime_u64(n) {
            out.push(Prime(n));
        }
        n += 1;
    }
    out
}

/// All primes up to and including `limit`.
pub fn primes_up_to(limit: u64) -> Vec<Prime> {
    (2..=limit).filter(|&n| is_prime_u64(n)).map(Prime).collect()
}

fn mulmod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn powmod(mut a: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    a %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a, m);
        }
        a = mulmod(a, a, m);
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for n < 3.4e14 (bases 2,3,5,7,11,13,17).
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17] {
        let mut x = powmod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mulmod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Largest e with p^e | n. `None` for n = 0 (the valuation of zero is the
/// distinguished marker, see [`NormExponent::Zero`]).
pub fn vp(n: &Int, p: Prime) -> Option<u64> {
    if n.is_zero() {
        return None;
    }
    let p = p.to_uint();
    let mut m = n.magnitude().clone();
    let mut e = 0u64;
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Some(e);
        }
        e += 1;
        m = q;
    }
}

/// Valuation of a nonzero rational: vp(num) - vp(den). `None` for 0.
pub fn vp_rat(q: &Rat, p: Prime) -> Option<i64> {
    if q.is_zero() {
        return None;
    }
    let vn = vp(q.numer(), p).expect("nonzero numerator") as i64;
    let vd = vp(q.denom(), p).expect("nonzero denominator") as i64;
    Some(vn - vd)
}

/// Exponent view of a p-adic norm: a finite variant e stands for |x|_p = p^e,
/// and `Zero` is the marker for |0|_p, strictly below every finite norm.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum NormExponent {
    Zero,
    Finite(Rat),
}

impl NormExponent {
    pub fn finite(e: Rat) -> Self {
        NormExponent::Finite(e)
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, NormExponent::Zero)
    }

    pub fn exponent(&self) -> Option<&Rat> {
        match self {
            NormExponent::Zero => None,
            NormExponent::Finite(e) => Some(e),
        }
    }

    /// Render as `p^e` (or `0` for the zero marker).
    pub fn render(&self, p: Prime) -> String {
        match self {
            NormExponent::Zero => "0".to_string(),
            NormExponent::Finite(e) => {
                if e.is_integer() {
                    format!("{}^{}", p, e.numer())
                } else {
                    format!("{}^({})", p, e)
                }
            }
        }
    }
}

impl PartialOrd for NormExponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NormExponent {
    fn cmp(&self, other: &Self) -> Ordering {
        use NormExponent::*;
        match (self, other) {
            (Zero, Zero) => Ordering::Equal,
            (Zero, Finite(_)) => Ordering::Less,
            (Finite(_), Zero) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl std::ops::Mul for NormExponent {
    type Output = NormExponent;
    // |ab|_p = |a|_p * |b|_p: exponents add, zero absorbs.
    fn mul(self, rhs: Self) -> Self {
        use NormExponent::*;
        match (self, rhs) {
            (Finite(a), Finite(b)) => Finite(a + b),
            _ => Zero,
        }
    }
}

/// p-adic norm of a rational as an exact exponent:
/// |q|_p = p^(vp(den) - vp(num)), with the zero marker for q = 0.
pub fn padic_norm(q: &Rat, p: Prime) -> NormExponent {
    match vp_rat(q, p) {
        None => NormExponent::Zero,
        Some(v) => NormExponent::Finite(Rat::from_integer(Int::from(-v))),
    }
}

/// Sum of base-p digits of a nonnegative integer.
pub fn digit_sum(m: &Int, p: Prime) -> Int {
    assert!(!m.is_negative(), "digit_sum takes a nonnegative integer");
    let p = p.to_uint();
    let mut m = m.magnitude().clone();
    let mut sigma = BigUint::zero();
    while !m.is_zero() {
        let (q, r) = m.div_rem(&p);
        sigma += r;
        m = q;
    }
    Int::from(sigma)
}

/// vp(m!) through the digit-sum identity vp(m!) = (m - sigma_m)/(p - 1).
///
/// Panics if p - 1 does not divide m - sigma_m; that divisibility is an
/// identity, so a failure signals an arithmetic bug.
pub fn factorial_val(m: &Int, p: Prime) -> Int {
    assert!(!m.is_negative(), "factorial_val takes a nonnegative integer");
    let num = m - digit_sum(m, p);
    let den = p.to_int() - 1;
    let (q, r) = num.div_rem(&den);
    assert!(
        r.is_zero(),
        "(p-1) must divide m - digit_sum(m): m={m}, p={p}"
    );
    q
}

/// Rising factorial (u)_n = u(u+1)...(u+n-1), with (u)_0 = 1.
pub fn pochhammer(u: &Rat, n: u64) -> Rat {
    let mut acc = Rat::one();
    let mut f = u.clone();
    for _ in 0..n {
        acc *= &f;
        f += Rat::one();
    }
    acc
}

pub fn factorial(m: u64) -> Int {
    let mut acc = Int::one();
    for i in 2..=m {
        acc *= Int::from(i);
    }
    acc
}

/// Exact binomial coefficient. Panics unless 0 <= k <= n.
pub fn binomial(n: u64, k: u64) -> Int {
    assert!(k <= n, "binomial requires 0 <= k <= n, got n={n}, k={k}");
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 1..=k {
        acc = acc * Int::from(n - k + i) / Int::from(i);
    }
    acc
}

/// floor(log_p(max(m, 1))) for a nonnegative integer m.
pub fn floor_log(m: &Int, p: Prime) -> u64 {
    assert!(!m.is_negative());
    let p = p.to_uint();
    let mut m = m.magnitude().clone();
    let mut e = 0u64;
    while m >= p {
        m /= &p;
        e += 1;
    }
    e
}

/// Ceiling of an exact rational.
pub fn ceil_rat(q: &Rat) -> Int {
    q.ceil().to_integer()
}

/// Parse "a/b" or "a" into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("`{s}` is not a rational (expected a or a/b)"));
    let (num, den) = match s.split_once('/') {
        None => (s, "1"),
        Some((n, d)) => (n, d),
    };
    let num: Int = num.trim().parse().map_err(|_| bad())?;
    let den: Int = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("`{s}` has a zero denominator")));
    }
    Ok(Rat::new(num, den))
}

impl Prime {
    /// Convenience used by tests and the CLI: u64 is small enough here.
    pub fn to_u64_pow(self, e: u32) -> Option<u64> {
        self.0.checked_pow(e)
    }
}

/// p^e as a BigUint.
pub fn prime_pow(p: Prime, e: u64) -> BigUint {
    p.to_uint().pow(e.to_u32().expect("exponent fits u32"))
}
