//! Extended-precision scalars, integer sequences and summation drivers.

mod complex;
mod precision;
mod real;
pub mod sequences;
pub mod series;

pub use complex::BigComplex;
pub use precision::{Precision, GUARD_BITS};
pub use real::BigReal;
pub use sequences::{double_factorial_ratio, euler_numbers, harmonic, root_of_unity};
pub use series::{sum_series, try_sum_series, SeriesResult, SeriesStatus, SummationStrategy};
