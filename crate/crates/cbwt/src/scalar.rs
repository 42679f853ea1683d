use std::fmt::Debug;

use num_traits::Num;

/// Symbol type for texts and patterns. Only the relative order of symbols
/// matters, so any totally ordered numeric type works; NaN is rejected.
pub trait Scalar: Copy + PartialOrd + Debug {
    fn is_comparable(&self) -> bool {
        self.partial_cmp(self).is_some()
    }
}

impl<T: Num + PartialOrd + Copy + Debug> Scalar for T {}

pub(crate) fn check_symbols<T: Scalar>(s: &[T]) -> crate::Result<()> {
    if s.iter().all(Scalar::is_comparable) {
        Ok(())
    } else {
        Err(crate::Error::Argument("symbol is not comparable (NaN)"))
    }
}
