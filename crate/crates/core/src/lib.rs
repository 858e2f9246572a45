//! Exact representation theory of finite groups over prime fields.

pub mod clifford;
pub mod cocycle;
pub mod exactfield;
pub mod groupcore;
pub mod mackey;
pub mod meataxe;
pub mod repmod;
pub mod scenarios;

pub use exactfield::{Matrix, Polynomial, PrimeField};
