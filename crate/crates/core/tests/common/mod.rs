#![allow(dead_code)]

pub use talex_core::catalog::*;
use talex_core::knots::TwoBridgeFraction;

pub fn fr(s: &str) -> TwoBridgeFraction {
    s.parse().unwrap()
}
