use std::fmt::Debug;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the whole crate is generic over: `f32` or `f64`.
///
/// Everything numerical (Bernstein algebra, collocation matrices, the
/// eigensolvers) works for any type satisfying this bound. The `Scalar64`
/// type aliases at the crate root pin the common `f64` instantiation.
pub trait Scalar:
    Float
    + FromPrimitive
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Debug
    + Send
    + Sync
    + 'static
{
    fn of_f64(v: f64) -> Self {
        Self::from_f64(v).expect("value representable in scalar type")
    }

    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("value representable in scalar type")
    }

    fn two() -> Self {
        Self::one() + Self::one()
    }

    fn half() -> Self {
        Self::one() / Self::two()
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
