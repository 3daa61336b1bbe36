//! Seeded random instances shared by the integration suites.
#![allow(dead_code)] // each test target uses a different subset

use rand::Rng;
use std::sync::Arc;
use subword_complex::{CoxeterSystem, SubwordComplex};

/// Every supported type of rank ≤ 4 (C needs rank ≥ 3 to differ from B here;
/// D2/D3 are the reducible and A3-isomorphic edge cases).
pub const TYPES: &[&str] = &[
    "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D2", "D3", "D4", "F4", "G2", "H3", "H4",
    "I2(2)", "I2(3)", "I2(4)", "I2(5)", "I2(6)",
];

pub fn system(label: &str) -> Arc<CoxeterSystem> {
    Arc::new(CoxeterSystem::from_type(label).expect("preset type"))
}

/// Random word of length ≤ 12 over a random type, with a target that is the
/// Demazure product (sphere), a random reduced subword (usually a ball), or a
/// random element (possibly an empty complex).
pub fn sample_complex(rng: &mut impl Rng) -> SubwordComplex {
    sample_from(rng, TYPES)
}

pub fn sample_from(rng: &mut impl Rng, types: &[&str]) -> SubwordComplex {
    let sys = system(types[rng.gen_range(0..types.len())]);
    let n = sys.rank();
    let m = rng.gen_range(1..=12);
    let letters: Vec<usize> = (0..m).map(|_| rng.gen_range(0..n)).collect();
    let target = match rng.gen_range(0..10) {
        0..=2 => sys.demazure(&letters).unwrap(),
        3..=7 => {
            let mut w = sys.identity();
            for &s in &letters {
                if rng.gen_bool(0.5) && !w.is_right_descent(&sys, s) {
                    w.right_mul(&sys, s);
                }
            }
            w
        }
        _ => {
            let mut w = sys.identity();
            for _ in 0..rng.gen_range(0..=m) {
                w.right_mul(&sys, rng.gen_range(0..n));
            }
            w
        }
    };
    SubwordComplex::new(sys, letters, target).unwrap()
}

pub fn sample_nonempty(rng: &mut impl Rng) -> SubwordComplex {
    loop {
        let sc = sample_complex(rng);
        if sc.has_facets() {
            return sc;
        }
    }
}

/// All facets as sorted position lists, lexicographically ordered.
pub fn sorted_facets(sc: &SubwordComplex) -> Vec<Vec<usize>> {
    let mut all: Vec<Vec<usize>> =
        subword_complex::GreedyFlipIter::new(sc, subword_complex::Sign::Negative)
            .map(|f| f.positions())
            .collect();
    all.sort();
    all
}
