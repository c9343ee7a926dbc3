//! Binary-representation statistics of the key count `n` and the closed-form
//! comparison bounds derived from them.
//!
//! Everything here is integer arithmetic. Logarithms are base two and are
//! obtained from digit counts, never from floating point.

use serde::Serialize;

use crate::error::{Error, Result};

/// Statistics of the binary representation of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BinaryProfile {
    pub n: usize,
    /// Bits of `n`, most significant first. `digits[0]` is always 1.
    pub digits: Vec<u8>,
    /// Number of one bits.
    pub mu: u32,
    /// Number of zero bits after the lowest one bit.
    pub sigma: u32,
    /// Number of zero bits.
    pub lambda: u32,
    /// Index of the lowest set bit. Equal to `sigma`.
    pub k: u32,
    /// `floor(log2 n)`, the depth of the last tree level.
    pub floor_log: u32,
    /// `ceil(log2(n + 1))`, the digit count and the number of nodes on the
    /// root-to-`n` path.
    pub bit_length: u32,
}

impl BinaryProfile {
    pub fn digit_string(&self) -> String {
        self.digits.iter().map(|d| char::from(b'0' + d)).collect()
    }
}

/// Closed-form values for one `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundReport {
    pub n: usize,
    pub worst_case_comparisons: u64,
    pub height_sum: u64,
}

fn check_positive(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroSize)
    } else {
        Ok(())
    }
}

pub fn binary_profile(n: usize) -> Result<BinaryProfile> {
    check_positive(n)?;
    let bit_length = usize::BITS - n.leading_zeros();
    let digits = (0..bit_length)
        .rev()
        .map(|shift| ((n >> shift) & 1) as u8)
        .collect();
    let mu = n.count_ones();
    let sigma = n.trailing_zeros();
    Ok(BinaryProfile {
        n,
        digits,
        mu,
        sigma,
        lambda: bit_length - mu,
        k: sigma,
        floor_log: bit_length - 1,
        bit_length,
    })
}

fn narrow(n: usize, value: u128) -> Result<u64> {
    u64::try_from(value).map_err(|_| Error::Overflow(n))
}

/// Exact worst-case comparison count of Floyd's construction on `n` keys:
/// `2n - 2 mu(n) - sigma(n)`.
pub fn worst_case_bound(n: usize) -> Result<u64> {
    check_positive(n)?;
    let value = 2 * n as u128 - 2 * u128::from(n.count_ones()) - u128::from(n.trailing_zeros());
    narrow(n, value)
}

/// Sum of the heights of all internal-node subtrees:
/// `n - ceil(log2(n + 1)) + lambda(n)`.
pub fn height_sum_formula(n: usize) -> Result<u64> {
    let p = binary_profile(n)?;
    Ok(n as u64 - u64::from(p.bit_length) + u64::from(p.lambda))
}

/// `2n - 2 ceil(log2(n + 1))`, only defined when `n + 1` is a power of two.
pub fn kruskal_bound(n: usize) -> Result<u64> {
    check_positive(n)?;
    if !(n as u128 + 1).is_power_of_two() {
        return Err(Error::NotMersenne(n));
    }
    let bit_length = u128::from(usize::BITS - n.leading_zeros());
    narrow(n, 2 * n as u128 - 2 * bit_length)
}

pub fn bound_report(n: usize) -> Result<BoundReport> {
    Ok(BoundReport {
        n,
        worst_case_comparisons: worst_case_bound(n)?,
        height_sum: height_sum_formula(n)?,
    })
}
