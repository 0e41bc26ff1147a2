//! Finite, exhaustively checked models of magmoidal categories with
//! diagonals, the diagonal and fixed-point theorems over them, and a
//! combinatory-logic engine for the `BW` fixed-point combinator.

pub mod category;
pub mod cli;
pub mod combinators;
pub mod kernel;
pub mod theorems;
pub mod uniform;
pub mod zoo;
