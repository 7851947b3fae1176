//! Finite 2-groups, their modular group algebras over GF(2) and GF(4), and
//! a search for non-commuting involutions in the unit group.

pub mod group;
pub mod presentation;
pub mod algebra;
pub mod unit_lab;
pub mod classifier;
