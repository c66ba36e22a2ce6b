//! Linear canonical transforms of `SL(2,R)` and its double cover, evaluated in
//! every subgroup basis.
//!
//! The crate is organised bottom-up:
//!
//! * [`specfun`] evaluates the special functions the kernels need (complex
//!   log-gamma, Kummer and Gauss hypergeometric series, Bessel functions of
//!   real and imaginary order, Whittaker and Laguerre functions).
//! * [`symplectic`] holds the group elements, one-parameter subgroups,
//!   factorizations and the two-to-one map onto `SO(2,1)`.
//! * [`bases`] evaluates the eigenfunctions of the five generators for the
//!   discrete series `D±_k` and the continuous series `C^ε_s`.
//! * [`kernels`] gives every integral kernel and matrix element in closed form.
//! * [`engine`] discretizes the kernels, applies them to sampled signals and
//!   checks unitarity, the metaplectic composition law and the closed forms
//!   against independent quadratures.
//!
//! ```
//! use lct::symplectic::GroupElement;
//! use lct::kernels::classic_kernel;
//!
//! let f = GroupElement::fourier();
//! let k = classic_kernel(&f, 0.0, 0.0).unwrap().regular().unwrap();
//! assert!((k.re - 0.282_094_791_773_878_1).abs() < 1e-15);
//! assert!((k.im + 0.282_094_791_773_878_1).abs() < 1e-15);
//! ```

pub mod bases;
pub mod engine;
pub mod error;
pub mod kernels;
pub mod quad;
pub mod specfun;
pub mod symplectic;

pub use error::{LctError, Result};
pub use num_complex::Complex64;

/// Threshold below which `|b|` is treated as zero and the delta-line forms
/// of the kernels take over.
pub const EPS_B: f64 = 1e-12;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/group.md")]
    mod group {}
    #[doc = include_str!("../../../book/src/special-functions.md")]
    mod special_functions {}
    #[doc = include_str!("../../../book/src/bases.md")]
    mod bases {}
    #[doc = include_str!("../../../book/src/kernels.md")]
    mod kernels {}
    #[doc = include_str!("../../../book/src/continuous.md")]
    mod continuous {}
    #[doc = include_str!("../../../book/src/engine.md")]
    mod engine {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
