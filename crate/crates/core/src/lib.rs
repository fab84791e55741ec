pub mod arith;
pub mod error;
pub mod qpoly;
pub mod ratfun;
pub mod qsymbols;
pub mod congruence;
pub mod fps;
pub mod cyclofield;
pub mod catalog;
pub mod numeric;
pub mod cli;
