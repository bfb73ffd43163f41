use std::fmt::{Debug, Display};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive};

/// Real scalar used for code lengths, log-likelihoods and fits.
pub trait Real: Float + FromPrimitive + Sum + Debug + Display + Send + Sync + 'static {
    fn of_f64(v: f64) -> Self {
        Self::from_f64(v).expect("f64 is representable")
    }

    fn of_usize(v: usize) -> Self {
        Self::from_usize(v).expect("usize is representable")
    }

    fn of_u64(v: u64) -> Self {
        Self::from_u64(v).expect("u64 is representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}
