//! Exact symbolic computation in the Yangian of `gl_n` / `sl_n`.
//!
//! The RTT presentation is realised as a truncated noncommutative algebra
//! with a normal-ordering rewriter ([`algebra`]). On top of it sit formal
//! series in `u^{-1}` ([`series`]), quantum minors and Gauss decompositions
//! ([`rtt`]), the Drinfel'd currents ([`drinfeld`]) and the Hopf structure
//! in the Drinfel'd basis ([`hopf`]).

pub mod algebra;
pub mod drinfeld;
pub mod error;
pub mod hopf;
pub mod report;
pub mod rtt;
pub mod scalar;
pub mod serialize;
pub mod series;
pub mod suites;

pub use algebra::{Algebra, Element, Generator, QuotientMode, Ring, TensorElement, Word};
pub use error::{AlgebraError, ParseError, RttError, SeriesError};
pub use report::{Status, VerificationReport};
pub use rtt::Yangian;
pub use scalar::Rational;
pub use series::{AlgebraSeries, Series, SeriesMatrix, TensorSeries};
