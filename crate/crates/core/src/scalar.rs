//! The exact-integer scalar abstraction used by the linear algebra layer.
//!
//! Everything that touches boundary maps, Smith normal forms, or ranks is
//! generic over [`ExactInt`]. Arbitrary precision ([`num_bigint::BigInt`]) is
//! the default through the aliases in the crate root; fixed-width integers
//! are accepted for callers who know their entries stay small.

use std::fmt::Debug;

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed};

/// A Euclidean ring of exact signed integers.
pub trait ExactInt:
    Integer + Signed + Clone + Debug + FromPrimitive + Send + Sync + 'static
{
    /// True when `self` is a unit (±1).
    fn is_unit(&self) -> bool {
        self.abs().is_one()
    }
}

impl<T> ExactInt for T where
    T: Integer + Signed + Clone + Debug + FromPrimitive + Send + Sync + 'static
{
}

/// Binomial coefficient over `i64`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_edges() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(4, -1), 0);
        assert_eq!(binomial(30, 15), 155_117_520);
    }
}
