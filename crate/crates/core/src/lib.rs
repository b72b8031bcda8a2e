//! Discrete Fourier analysis on the 30°-60°-90° triangle under G2: generalized
//! trigonometric functions, generalized Chebyshev polynomials on the deltoid
//! region, the operator `L_{α,β}`, and m-degree cubature rules.

pub mod coords;
pub mod gentrig;
pub mod lattice;
pub mod poly;
pub mod chebyshev;
pub mod quadrature;
pub mod sturm;
pub mod cubature;
pub mod verify;
pub mod cli;
