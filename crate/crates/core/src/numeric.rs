//! Euler's totient and a certified enclosure of `Σ_{d≥1} 1/(d·φ(d))`.
//!
//! Partial sums are kept in fixed point with [`SCALE`] units per 1, as a
//! lower and an upper bound: each term is rounded down into the lower sum and
//! up into the upper sum.
//!
//! Tail bound. For every `d ≥ 1`, `φ(d) ≥ √(d/2)`, so the term
//! `1/(d·φ(d))` is at most `√2·d^{-3/2}`. That function decreases, hence
//! `Σ_{d>D} √2·d^{-3/2} ≤ √2·∫_D^∞ x^{-3/2} dx = 2√2/√D`.

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};

/// Fixed-point units per 1.
pub const SCALE: u128 = 1_000_000_000_000_000_000_000_000_000_000;
const SCALE_DIGITS: usize = 30;

/// Totient by trial division.
pub fn euler_phi(d: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::Precondition("euler_phi needs d >= 1".into()));
    }
    let mut n = d;
    let mut phi = d;
    let mut p = 2u64;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    Ok(phi)
}

/// `φ(0..=n)` by a linear sieve (`φ(0)` is stored as 0).
pub fn totients_up_to(n: usize) -> Vec<u32> {
    let mut phi = vec![0u32; n + 1];
    let mut primes: Vec<u32> = Vec::new();
    if n >= 1 {
        phi[1] = 1;
    }
    for i in 2..=n {
        if phi[i] == 0 {
            phi[i] = (i - 1) as u32;
            primes.push(i as u32);
        }
        for &p in &primes {
            let ip = i * p as usize;
            if ip > n {
                break;
            }
            if i % p as usize == 0 {
                phi[ip] = phi[i] * p;
                break;
            }
            phi[ip] = phi[i] * (p - 1);
        }
    }
    phi
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstantEstimate {
    pub cutoff: u64,
    /// Lower and upper bounds on the partial sum, in units of `1/SCALE`.
    pub partial_lower: u128,
    pub partial_upper: u128,
    /// Upper bound on the tail, in units of `1/SCALE`.
    pub tail_bound: u128,
}

impl ConstantEstimate {
    pub fn lower(&self) -> u128 {
        self.partial_lower
    }

    pub fn upper(&self) -> u128 {
        self.partial_upper + self.tail_bound
    }

    /// Whether the enclosing interval lies strictly inside `(a, b)`, given
    /// as fractions `num/den`.
    pub fn strictly_inside(&self, a: (u128, u128), b: (u128, u128)) -> bool {
        a.0 * SCALE < self.lower() * a.1 && self.upper() * b.1 < b.0 * SCALE
    }

    pub fn lower_f64(&self) -> f64 {
        self.lower() as f64 / SCALE as f64
    }

    pub fn upper_f64(&self) -> f64 {
        self.upper() as f64 / SCALE as f64
    }
}

/// Decimal rendering of a fixed-point value.
pub fn format_fixed(x: u128) -> String {
    let int = x / SCALE;
    let frac = format!("{:0width$}", x % SCALE, width = SCALE_DIGITS);
    let frac = frac.trim_end_matches('0');
    if frac.is_empty() {
        int.to_string()
    } else {
        format!("{int}.{frac}")
    }
}

#[derive(Serialize)]
struct EstimateJson {
    cutoff: u64,
    partial_sum: String,
    partial_sum_upper: String,
    tail_bound: String,
    interval: [String; 2],
}

impl Serialize for ConstantEstimate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        EstimateJson {
            cutoff: self.cutoff,
            partial_sum: format_fixed(self.partial_lower),
            partial_sum_upper: format_fixed(self.partial_upper),
            tail_bound: format_fixed(self.tail_bound),
            interval: [format_fixed(self.lower()), format_fixed(self.upper())],
        }
        .serialize(s)
    }
}

/// `⌈SCALE · 2√2/√D⌉`.
fn tail_bound(cutoff: u64) -> u128 {
    let num = BigUint::from(8u32) * BigUint::from(SCALE) * BigUint::from(SCALE);
    let d = BigUint::from(cutoff);
    let mut q = &num / &d;
    if &q * &d != num {
        q += 1u32;
    }
    let mut r = q.sqrt();
    if &r * &r != q {
        r += 1u32;
    }
    r.to_u128().expect("tail bound fits in u128")
}

/// Enclosure of `Σ 1/(d·φ(d))` from the first `cutoff` terms.
pub fn density_constant(cutoff: u64) -> Result<ConstantEstimate> {
    if cutoff == 0 {
        return Err(Error::Precondition("cutoff must be at least 1".into()));
    }
    let n = usize::try_from(cutoff).map_err(|_| Error::Precondition("cutoff too large".into()))?;
    if n > 1 << 31 {
        return Err(Error::Precondition("cutoff too large".into()));
    }
    let phi = totients_up_to(n);
    let (mut lo, mut hi) = (0u128, 0u128);
    for d in 1..=n {
        let den = d as u128 * phi[d] as u128;
        let q = SCALE / den;
        lo += q;
        hi += q + u128::from(SCALE % den != 0);
    }
    Ok(ConstantEstimate {
        cutoff,
        partial_lower: lo,
        partial_upper: hi,
        tail_bound: tail_bound(cutoff),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gcd(a: u64, b: u64) -> u64 {
        if b == 0 {
            a
        } else {
            gcd(b, a % b)
        }
    }

    fn phi_brute(n: u64) -> u64 {
        (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
    }

    #[test]
    fn totient_values() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(12).unwrap(), 4);
        assert_eq!(euler_phi(97).unwrap(), 96);
        assert_eq!(euler_phi(1_000_000_007).unwrap(), 1_000_000_006);
        assert!(euler_phi(0).is_err());
        let sieve = totients_up_to(500);
        for n in 1..=500u64 {
            assert_eq!(sieve[n as usize] as u64, phi_brute(n));
            assert_eq!(euler_phi(n).unwrap(), phi_brute(n));
        }
    }

    #[test]
    fn small_cutoffs() {
        let one = density_constant(1).unwrap();
        assert_eq!((one.partial_lower, one.partial_upper), (SCALE, SCALE));
        assert_eq!(format_fixed(one.partial_lower), "1");
        // 2√2 = 2.828427124746190097603377448419...
        assert_eq!(format_fixed(one.tail_bound)[..14], *"2.828427124746");
        let two = density_constant(2).unwrap();
        assert_eq!(format_fixed(two.partial_lower), "1.5");
        assert!(density_constant(0).is_err());
    }

    #[test]
    fn monotone() {
        let mut prev = density_constant(1).unwrap();
        for d in [4u64, 16, 64, 256, 1024, 4096] {
            let e = density_constant(d).unwrap();
            assert!(e.partial_lower >= prev.partial_lower);
            assert!(e.upper() <= prev.upper());
            assert!(e.tail_bound < prev.tail_bound);
            prev = e;
        }
    }

    proptest! {
        #[test]
        fn multiplicative(m in 1u64..5000, n in 1u64..5000) {
            prop_assume!(gcd(m, n) == 1);
            prop_assert_eq!(
                euler_phi(m * n).unwrap(),
                euler_phi(m).unwrap() * euler_phi(n).unwrap()
            );
        }

        #[test]
        fn phi_lower_bound(d in 1u64..1_000_000) {
            // φ(d)² ≥ d/2
            let p = euler_phi(d).unwrap();
            prop_assert!(2 * p * p >= d);
        }
    }
}
