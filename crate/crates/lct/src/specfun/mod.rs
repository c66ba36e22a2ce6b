//! Special functions with complex parameters.
//!
//! Everything here is pure and reentrant. Branches are principal with the
//! cut on the negative real axis unless a function says otherwise.

mod bessel;
pub(crate) mod dd;
mod gamma;
mod hyper;
mod laguerre;
mod whittaker;

pub use bessel::{
    bessel_j, hankel_imaginary_order, macdonald_imaginary_order, macdonald_imaginary_order_gauss, HankelKind, Side,
};
pub(crate) use bessel::{bessel_j_split, hankel_pair_imaginary, hankel_split, macdonald_scaled};
pub use gamma::{gamma, is_nonpositive_integer, ln_gamma, ln_gamma_real, rgamma};
pub use hyper::{hyp1f1, hyp2f1};
pub use laguerre::laguerre;
pub use whittaker::{whittaker_m, whittaker_w, whittaker_w_mcombination};
