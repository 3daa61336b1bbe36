//! Exact arithmetic over Z[φ], the coefficient ring shared by all supported root systems.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

/// `a + b·φ` where `φ² = φ + 1`.
///
/// Crystallographic types only ever produce `b = 0`; the φ part carries the
/// coordinates of the H₃, H₄ and I₂(5) root systems.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Quad {
    pub a: i64,
    pub b: i64,
}

impl Quad {
    pub const ZERO: Quad = Quad { a: 0, b: 0 };
    pub const ONE: Quad = Quad { a: 1, b: 0 };
    pub const PHI: Quad = Quad { a: 0, b: 1 };

    pub fn int(a: i64) -> Quad {
        Quad { a, b: 0 }
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Sign of `a + b·φ` as a real number: -1, 0 or 1. Exact.
    pub fn signum(self) -> i32 {
        // a + bφ = (2a+b)/2 + (b/2)·√5
        let p = 2 * self.a + self.b;
        let q = self.b;
        if p == 0 && q == 0 {
            return 0;
        }
        if p >= 0 && q >= 0 {
            return 1;
        }
        if p <= 0 && q <= 0 {
            return -1;
        }
        // Mixed signs: compare p² against 5q² in i128 so large coordinates
        // coming from runaway (infinite) systems cannot overflow.
        let lhs = (p as i128) * (p as i128);
        let rhs = 5 * (q as i128) * (q as i128);
        // p² = 5q² is impossible for nonzero integers (√5 is irrational).
        if (lhs > rhs) == (p > 0) {
            1
        } else {
            -1
        }
    }
}

impl Add for Quad {
    type Output = Quad;
    fn add(self, rhs: Quad) -> Quad {
        Quad {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl AddAssign for Quad {
    fn add_assign(&mut self, rhs: Quad) {
        self.a += rhs.a;
        self.b += rhs.b;
    }
}

impl Sub for Quad {
    type Output = Quad;
    fn sub(self, rhs: Quad) -> Quad {
        Quad {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl Neg for Quad {
    type Output = Quad;
    fn neg(self) -> Quad {
        Quad {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Mul for Quad {
    type Output = Quad;
    fn mul(self, rhs: Quad) -> Quad {
        // (a₁ + b₁φ)(a₂ + b₂φ) with φ² = φ + 1
        Quad {
            a: self.a * rhs.a + self.b * rhs.b,
            b: self.a * rhs.b + self.b * rhs.a + self.b * rhs.b,
        }
    }
}

impl fmt::Display for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "φ"),
            (0, -1) => write!(f, "-φ"),
            (0, b) => write!(f, "{b}φ"),
            (a, 1) => write!(f, "{a}+φ"),
            (a, -1) => write!(f, "{a}-φ"),
            (a, b) if b > 0 => write!(f, "{a}+{b}φ"),
            (a, b) => write!(f, "{a}{b}φ"),
        }
    }
}

impl fmt::Debug for Quad {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
