pub mod action;
pub mod bicross;
pub mod coaction;
pub mod error;
pub mod ffun;
pub mod jets;
pub mod poly;
pub mod report;
pub mod sample;
pub mod tensor;
pub mod uenv;

pub use error::AlgebraError;
pub use poly::{GeneratorId, Parity, Rational, SuperMonomial, SuperPoly};
pub use tensor::{GradedTensor, Leg, LegKind};
pub use uenv::{LieGenerator, PbwMonomial, UEnvElement};
