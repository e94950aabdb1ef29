//! Exact closed-form counts.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Index shift with `bell(n) = B_{n + BELL_OFFSET}` (Bell numbers with
/// `B_0 = 1`). Calibrated against brute-force counts of 011-avoiders.
pub const BELL_OFFSET: isize = 0;

/// Index shift with `schroder(n) = S_{n + SCHRODER_OFFSET}` (large Schröder
/// numbers with `S_0 = 1`). Calibrated against brute-force counts of
/// 021-avoiders.
pub const SCHRODER_OFFSET: isize = -1;

/// `C(n, k)`, zero when `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> Result<BigUint> {
    if n < 0 {
        return Err(Error::Domain(format!("binomial with negative n = {n}")));
    }
    if k < 0 || k > n {
        return Ok(BigUint::zero());
    }
    let k = k.min(n - k) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc = C(n, i) here, so the division is exact.
        acc *= n - i;
        acc /= i + 1;
    }
    Ok(acc)
}

fn require_positive(n: usize, what: &str) -> Result<()> {
    if n == 0 {
        Err(Error::Domain(format!("{what} is defined for n >= 1")))
    } else {
        Ok(())
    }
}

/// `1 + Σ_{i=1}^{n-1} C(2i, i-1)`, the number of 0012-avoiding inversion
/// sequences of length `n` (OEIS A279561).
pub fn a279561(n: usize) -> Result<BigUint> {
    require_positive(n, "a279561")?;
    let mut total = BigUint::one();
    for i in 1..n as i64 {
        total += binomial(2 * i, i - 1)?;
    }
    Ok(total)
}

/// `1` for `n = 1`, else `2^{n-2}`.
pub fn pow2_last(n: usize) -> Result<BigUint> {
    require_positive(n, "pow2_last")?;
    Ok(if n == 1 {
        BigUint::one()
    } else {
        BigUint::one() << (n - 2)
    })
}

/// Bell numbers `B_0..=B_m` by the Bell triangle.
pub fn bell_numbers(m: usize) -> Vec<BigUint> {
    let mut out = Vec::with_capacity(m + 1);
    out.push(BigUint::one());
    let mut row = vec![BigUint::one()];
    for _ in 0..m {
        // Row i starts with B_i and ends with B_{i+1}.
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(row.last().cloned().expect("nonempty"));
        for x in &row {
            let v = next.last().expect("nonempty") + x;
            next.push(v);
        }
        out.push(next[0].clone());
        row = next;
    }
    out
}

/// Large Schröder numbers `S_0..=S_m` by the three-term recurrence
/// `(i+1) S_i = 3(2i-1) S_{i-1} - (i-2) S_{i-2}`.
pub fn large_schroder_numbers(m: usize) -> Vec<BigUint> {
    let mut out = vec![BigUint::one(), BigUint::from(2u32)];
    for i in 2..=m {
        let i_big = BigUint::from(i);
        let lhs = (BigUint::from(6u32) * &i_big - 3u32) * &out[i - 1]
            - (&i_big - 2u32) * &out[i - 2];
        let (q, r) = lhs.div_rem(&(i_big + 1u32));
        debug_assert!(r.is_zero());
        out.push(q);
    }
    out.truncate(m + 1);
    out
}

fn shifted(n: usize, offset: isize, what: &str) -> Result<usize> {
    require_positive(n, what)?;
    usize::try_from(n as isize + offset).map_err(|_| Error::Domain(format!("{what}({n})")))
}

/// The Bell number indexed so that `bell(n) = |I_n(011)|`.
pub fn bell(n: usize) -> Result<BigUint> {
    let m = shifted(n, BELL_OFFSET, "bell")?;
    Ok(bell_numbers(m).swap_remove(m))
}

/// The large Schröder number indexed so that `schroder(n) = |I_n(021)|`.
pub fn schroder(n: usize) -> Result<BigUint> {
    let m = shifted(n, SCHRODER_OFFSET, "schroder")?;
    Ok(large_schroder_numbers(m).swap_remove(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    fn pascal(n: usize) -> Vec<Vec<BigUint>> {
        let mut rows: Vec<Vec<BigUint>> = vec![vec![big(1)]];
        for i in 1..=n {
            let prev = &rows[i - 1];
            let mut row = vec![big(1); i + 1];
            for j in 1..i {
                row[j] = &prev[j - 1] + &prev[j];
            }
            rows.push(row);
        }
        rows
    }

    #[test]
    fn binomial_against_pascal() {
        let rows = pascal(40);
        for n in 0..=40i64 {
            for k in -2..=n + 2 {
                let expect = if k < 0 || k > n {
                    big(0)
                } else {
                    rows[n as usize][k as usize].clone()
                };
                assert_eq!(binomial(n, k).unwrap(), expect, "C({n},{k})");
            }
        }
        assert_eq!(binomial(2, 0).unwrap(), big(1));
        assert_eq!(binomial(6, 2).unwrap(), big(15));
        assert!(binomial(-1, 0).is_err());
    }

    #[test]
    fn a279561_values() {
        let expect = [1u64, 2, 6, 21, 77, 287, 1079, 4082, 15522];
        for (i, &v) in expect.iter().enumerate() {
            assert_eq!(a279561(i + 1).unwrap(), big(v));
        }
        assert!(a279561(0).is_err());
    }

    #[test]
    fn a279561_differences() {
        for n in 2..=60usize {
            let d = a279561(n).unwrap() - a279561(n - 1).unwrap();
            assert_eq!(d, binomial(2 * (n as i64 - 1), n as i64 - 2).unwrap());
        }
    }

    #[test]
    fn powers_of_two() {
        assert_eq!(pow2_last(1).unwrap(), big(1));
        assert_eq!(pow2_last(2).unwrap(), big(1));
        assert_eq!(pow2_last(12).unwrap(), big(1024));
        assert!(pow2_last(0).is_err());
    }

    #[test]
    fn bell_values_and_recurrence() {
        let expect = [1u64, 2, 5, 15, 52, 203, 877];
        for (i, &v) in expect.iter().enumerate() {
            assert_eq!(bell(i + 1).unwrap(), big(v));
        }
        let b = bell_numbers(30);
        for m in 1..=30 {
            let mut s = BigUint::zero();
            for (k, bk) in b.iter().enumerate().take(m) {
                s += binomial(m as i64 - 1, k as i64).unwrap() * bk;
            }
            assert_eq!(s, b[m]);
        }
        assert!(bell(0).is_err());
    }

    #[test]
    fn schroder_values_and_convolution() {
        let expect = [1u64, 2, 6, 22, 90, 394, 1806];
        for (i, &v) in expect.iter().enumerate() {
            assert_eq!(schroder(i + 1).unwrap(), big(v));
        }
        // S_m = S_{m-1} + Σ_{k=0}^{m-1} S_k S_{m-1-k}
        let s = large_schroder_numbers(30);
        for m in 1..=30 {
            let conv: BigUint = (0..m).map(|k| &s[k] * &s[m - 1 - k]).sum();
            assert_eq!(s[m], &s[m - 1] + conv);
        }
        assert_eq!(large_schroder_numbers(0), vec![big(1)]);
        assert!(schroder(0).is_err());
    }
}
