//! Scalar abstraction for the exact linear algebra kernel.
//!
//! Every algorithm in this crate only needs field arithmetic and exact
//! equality, so the bound is expressed through `num-traits`.  The crate-root
//! alias [`crate::Q`] (arbitrary-precision rationals) is the scalar used by
//! the CLI; `num_rational::Ratio<i64>` is handy in unit tests.

use num_traits::{Num, Signed};
use std::fmt::{Debug, Display};

/// A field scalar with exact equality.
///
/// The `Signed` bound supplies negation; `Num` supplies ring operations,
/// exact division and `zero`/`one`.  Floating-point types technically
/// satisfy the bounds but break the exactness assumptions of the echelon
/// routines; use an exact rational type.
pub trait Scalar: Num + Signed + Clone + PartialEq + Debug + Display + 'static {
    /// Embeds a small signed integer into the field.
    fn from_int(n: i64) -> Self {
        let mut acc = Self::zero();
        let one = Self::one();
        for _ in 0..n.unsigned_abs() {
            acc = acc + one.clone();
        }
        if n < 0 {
            -acc
        } else {
            acc
        }
    }
}

impl<T> Scalar for T where T: Num + Signed + Clone + PartialEq + Debug + Display + 'static {}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Q;

    #[test]
    fn from_int_embeds_integers() {
        assert_eq!(Q::from_int(0), Q::zero());
        assert_eq!(Q::from_int(3), Q::from_integer(3.into()));
        assert_eq!(Q::from_int(-7), Q::from_integer((-7).into()));
        use num_rational::Ratio;
        assert_eq!(Ratio::<i64>::from_int(-2), Ratio::new(-2, 1));
    }

    use num_traits::Zero;
}
