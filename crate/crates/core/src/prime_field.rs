//! Arithmetic in the prime field `Z/pZ`.
//!
//! Every other layer uses these residues as coefficients. The prime is capped
//! below 2^31 so that a product of two canonical residues fits comfortably in
//! a `u64`.

use std::fmt;

use crate::error::{Error, Result};
use crate::num;

/// Deterministic primality test valid for every `n < 2^64`.
///
/// Trial division by small primes, then a strong-probable-prime test to the
/// first twelve prime bases, which has no counterexamples below 3.3 * 10^24.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &b in &BASES {
        if n.is_multiple_of(b) {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'bases: for &b in &BASES {
        let mut x = num::pow_mod(b, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = num::mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// A validated prime `p` with `2 <= p < 2^31`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    pub const MAX_EXCLUSIVE: u64 = 1 << 31;

    pub fn new(p: u64) -> Result<Self> {
        if !(2..Self::MAX_EXCLUSIVE).contains(&p) {
            return Err(Error::PrimeOutOfRange(p));
        }
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(PrimeModulus(p))
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    /// Canonical residue of a signed integer.
    pub fn reduce_i128(self, v: i128) -> u64 {
        v.rem_euclid(self.0 as i128) as u64
    }

    pub fn residue(self, v: u64) -> Residue {
        Residue {
            value: v % self.0,
            modulus: self,
        }
    }

    // Raw-value kernels. Inputs must already be canonical.

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.0 {
            s - self.0
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.0 - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.0
    }

    pub fn pow(self, a: u64, e: u64) -> u64 {
        num::pow_mod(a, e, self.0)
    }

    pub fn inv(self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.0) {
            None
        } else {
            num::inv_mod(a, self.0)
        }
    }
}

impl fmt::Display for PrimeModulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Binary ring operation selector for [`fp_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
}

/// A canonical residue modulo a [`PrimeModulus`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: PrimeModulus,
}

impl Residue {
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> PrimeModulus {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    /// `self^e` by square-and-multiply; `0^0 = 1`.
    pub fn pow(self, e: u64) -> Residue {
        Residue {
            value: self.modulus.pow(self.value, e),
            modulus: self.modulus,
        }
    }

    pub fn inv(self) -> Result<Residue> {
        let value = self.modulus.inv(self.value).ok_or(Error::NotInvertible)?;
        Ok(Residue {
            value,
            modulus: self.modulus,
        })
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `a op b` in `Z/pZ`; both operands must share a modulus.
pub fn fp_arith(op: ArithOp, a: Residue, b: Residue) -> Result<Residue> {
    if a.modulus != b.modulus {
        return Err(Error::FieldMismatch);
    }
    let m = a.modulus;
    let value = match op {
        ArithOp::Add => m.add(a.value, b.value),
        ArithOp::Sub => m.sub(a.value, b.value),
        ArithOp::Mul => m.mul(a.value, b.value),
    };
    Ok(Residue { value, modulus: m })
}

pub fn fp_pow(a: Residue, e: u64) -> Residue {
    a.pow(e)
}

pub fn fp_inv(a: Residue) -> Result<Residue> {
    a.inv()
}
