use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::Serialize;

/// An Eisenstein integer `a + bω` with `ω = e^{2πi/3}`, so `ω² = -1 - ω`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Eisenstein {
    pub a: i64,
    pub b: i64,
}

impl Eisenstein {
    pub const ZERO: Eisenstein = Eisenstein { a: 0, b: 0 };
    pub const ONE: Eisenstein = Eisenstein { a: 1, b: 0 };
    pub const OMEGA: Eisenstein = Eisenstein { a: 0, b: 1 };

    pub const fn new(a: i64, b: i64) -> Self {
        Eisenstein { a, b }
    }

    pub const fn real(a: i64) -> Self {
        Eisenstein { a, b: 0 }
    }

    /// `ω^e` for `e` taken mod 3.
    pub fn omega_pow(e: u8) -> Self {
        match e % 3 {
            0 => Eisenstein::ONE,
            1 => Eisenstein::OMEGA,
            _ => Eisenstein::new(-1, -1),
        }
    }

    /// `2 Re(z) = 2a - b`, always an integer.
    pub fn twice_re(self) -> i64 {
        2 * self.a - self.b
    }

    /// `|z|² = a² - ab + b²`.
    pub fn norm(self) -> i64 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }

    pub fn conj(self) -> Self {
        // conj(ω) = ω² = -1 - ω
        Eisenstein::new(self.a - self.b, -self.b)
    }

    pub fn mul_omega(self) -> Self {
        Eisenstein::new(-self.b, self.a - self.b)
    }

    /// `z · ω^e`.
    pub fn mul_omega_pow(self, e: u8) -> Self {
        match e % 3 {
            0 => self,
            1 => self.mul_omega(),
            _ => self.mul_omega().mul_omega(),
        }
    }
}

impl Add for Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: Self) -> Self {
        Eisenstein::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl AddAssign for Eisenstein {
    fn add_assign(&mut self, rhs: Self) {
        self.a += rhs.a;
        self.b += rhs.b;
    }
}

impl Sub for Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: Self) -> Self {
        Eisenstein::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Self {
        Eisenstein::new(-self.a, -self.b)
    }
}

impl Mul for Eisenstein {
    type Output = Eisenstein;
    fn mul(self, rhs: Self) -> Self {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bdω², ω² = -1 - ω
        let bd = self.b * rhs.b;
        Eisenstein::new(self.a * rhs.a - bd, self.a * rhs.b + self.b * rhs.a - bd)
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b < 0 {
            write!(f, "{}-{}w", self.a, -self.b)
        } else {
            write!(f, "{}+{}w", self.a, self.b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_is_primitive_cube_root() {
        let w = Eisenstein::OMEGA;
        assert_eq!(w * w, Eisenstein::new(-1, -1));
        assert_eq!(w * w * w, Eisenstein::ONE);
        assert_eq!(Eisenstein::ONE + w + w * w, Eisenstein::ZERO);
        assert_eq!(w.conj(), w * w);
        assert_eq!(w.norm(), 1);
        assert_eq!(w.twice_re(), -1);
    }

    #[test]
    fn ring_identities_on_a_grid() {
        let grid: Vec<Eisenstein> = (-3..=3)
            .flat_map(|a| (-3..=3).map(move |b| Eisenstein::new(a, b)))
            .collect();
        for &x in &grid {
            assert_eq!(x.mul_omega(), x * Eisenstein::OMEGA);
            assert_eq!((x * x.conj()).b, 0);
            assert_eq!((x * x.conj()).a, x.norm());
            assert!(x.norm() >= 0);
            for &y in grid.iter().step_by(3) {
                assert_eq!(x * y, y * x);
                assert_eq!((x * y).norm(), x.norm() * y.norm());
                assert_eq!((x + y).twice_re(), x.twice_re() + y.twice_re());
            }
        }
    }
}
