//! Integer scalar types usable for exact densities and flow capacities.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, PrimInt, Signed};

/// A signed machine integer. Densities are `Ratio<S>` and flow capacities
/// are plain `S`; `i64` covers graphs up to a few thousand vertices, `i128`
/// goes much further.
pub trait Scalar:
    PrimInt + Signed + Integer + FromPrimitive + Hash + Debug + Display + Send + Sync + 'static
{
    fn of(x: usize) -> Self {
        Self::from_usize(x).expect("value does not fit the scalar type")
    }
}

impl<T> Scalar for T where
    T: PrimInt + Signed + Integer + FromPrimitive + Hash + Debug + Display + Send + Sync + 'static
{
}
