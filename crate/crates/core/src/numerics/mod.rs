//! Multiprecision numerics: floats, constants, polylogarithms, remainders of
//! the linear forms, independent series oracles and the double integral.

mod bigfloat;
mod constants;
mod polylog;
mod quadrature;
mod remainder;
pub mod roots;
mod tail;

pub use bigfloat::{bits_for_digits, BigFloat};
pub use constants::{constant, constant_bits, Constant};
pub use polylog::{polylog, polylog_bits};
pub use quadrature::{double_integral, gauss_legendre};
pub use remainder::{
    linear_form_value, remainder, remainder_auto, remainder_significant, target_constants,
    Remainders, Target,
};
pub use roots::ComplexFloat;
pub use tail::direct_tail;
