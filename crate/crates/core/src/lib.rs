//! Exact construction and verification of Macdonald symmetric functions.

pub mod coeff;
pub mod ctengine;
pub mod fock;
pub mod kostka;
pub mod macdonald;
pub mod pairing;
pub mod partition;
pub mod symfunc;
