use num::integer::gcd;

use crate::error::{Error, Result};

/// Largest integer that is not a non-negative integer combination of the
/// coprime positive integers `n` and `k`, namely `nk - n - k`.
pub fn frobenius_largest_gap(n: u64, k: u64) -> Result<i64> {
    if n == 0 || k == 0 {
        return Err(Error::domain("arguments must be positive"));
    }
    if gcd(n, k) != 1 {
        return Err(Error::domain(format!("{n} and {k} are not coprime")));
    }
    let (n, k) = (n as i64, k as i64);
    Ok(n * k - n - k)
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// The greatest prime strictly below `n`, for `n >= 3`.
pub fn greatest_prime_below(n: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::domain(format!("no prime below {n}")));
    }
    Ok((2..n).rev().find(|&p| is_prime(p)).expect("2 is prime"))
}
