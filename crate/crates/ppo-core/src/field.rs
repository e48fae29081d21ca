//! Exact arithmetic in Z_N for odd prime N, and the quadratic residue
//! structure (residue/non-residue sets, primitive element) that the
//! conjugacy-class machinery depends on.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
pub enum FieldError {
    #[error("modulus {0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("zero has no multiplicative inverse")]
    ZeroInverse,
    #[error("argument must be nonzero")]
    ZeroArgument,
    #[error("no witness found (this indicates an arithmetic bug)")]
    NoWitness,
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The field Z_N for an odd prime N. Primality is checked once here, so
/// `FieldElem` values never have to re-validate their modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Field {
    modulus: u64,
}

impl Field {
    pub fn new(modulus: u64) -> Result<Self, FieldError> {
        if modulus < 3 || modulus % 2 == 0 || !is_prime(modulus) {
            return Err(FieldError::NotOddPrime(modulus));
        }
        Ok(Field { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Reduce an arbitrary signed integer into the field.
    pub fn elem(&self, value: i64) -> FieldElem {
        let m = self.modulus as i64;
        FieldElem {
            value: value.rem_euclid(m) as u64,
            modulus: self.modulus,
        }
    }

    pub fn zero(&self) -> FieldElem {
        self.elem(0)
    }

    pub fn one(&self) -> FieldElem {
        self.elem(1)
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        let m = self.modulus;
        (0..m).map(move |v| FieldElem {
            value: v,
            modulus: m,
        })
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        let m = self.modulus;
        (1..m).map(move |v| FieldElem {
            value: v,
            modulus: m,
        })
    }

    pub fn residue_sets(&self) -> ResidueSets {
        ResidueSets::new(*self)
    }
}

/// An element of Z_N, carrying its modulus. Mixed-modulus arithmetic panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElem {
    value: u64,
    modulus: u64,
}

impl FieldElem {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn field(&self) -> Field {
        Field {
            modulus: self.modulus,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// Multiplicative inverse by extended Euclid.
    pub fn inv(&self) -> Result<FieldElem, FieldError> {
        if self.value == 0 {
            return Err(FieldError::ZeroInverse);
        }
        let (mut r0, mut r1) = (self.modulus as i64, self.value as i64);
        let (mut s0, mut s1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(self.field().elem(s0))
    }

    pub fn pow(&self, mut exp: u64) -> FieldElem {
        let mut base = *self;
        let mut acc = self.field().one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative order. Undefined (error) for zero.
    pub fn multiplicative_order(&self) -> Result<u64, FieldError> {
        if self.is_zero() {
            return Err(FieldError::ZeroArgument);
        }
        let one = self.field().one();
        let mut acc = *self;
        let mut k = 1;
        while acc != one {
            acc = acc * *self;
            k += 1;
        }
        Ok(k)
    }

    /// Smaller square root in [0, N) if one exists, found by scan (N is tiny).
    pub fn sqrt(&self) -> Option<FieldElem> {
        let f = self.field();
        (0..self.modulus)
            .map(|y| f.elem(y as i64))
            .find(|y| *y * *y == *self)
    }

    /// The representative in (-N/2, N/2], useful for trace displays like
    /// "t = -2" instead of "t = N-2".
    pub fn centered(&self) -> i64 {
        let v = self.value as i64;
        let m = self.modulus as i64;
        if v > m / 2 {
            v - m
        } else {
            v
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for FieldElem {
    type Output = FieldElem;
    fn add(self, rhs: FieldElem) -> FieldElem {
        assert_eq!(self.modulus, rhs.modulus, "field modulus mismatch");
        FieldElem {
            value: (self.value + rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Sub for FieldElem {
    type Output = FieldElem;
    fn sub(self, rhs: FieldElem) -> FieldElem {
        assert_eq!(self.modulus, rhs.modulus, "field modulus mismatch");
        FieldElem {
            value: (self.value + self.modulus - rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Mul for FieldElem {
    type Output = FieldElem;
    fn mul(self, rhs: FieldElem) -> FieldElem {
        assert_eq!(self.modulus, rhs.modulus, "field modulus mismatch");
        FieldElem {
            value: (self.value * rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

/// Quadratic residues Q, non-residues Q̄, a primitive element θ, and the
/// fixed non-residue ν used for class representatives.
#[derive(Debug, Clone)]
pub struct ResidueSets {
    field: Field,
    is_residue: Vec<bool>,
    residues: Vec<u64>,
    non_residues: Vec<u64>,
    theta: FieldElem,
    nu: FieldElem,
}

impl ResidueSets {
    pub fn new(field: Field) -> ResidueSets {
        let n = field.modulus();
        let mut is_residue = vec![false; n as usize];
        for y in 1..n {
            is_residue[((y * y) % n) as usize] = true;
        }
        let residues: Vec<u64> = (1..n).filter(|&x| is_residue[x as usize]).collect();
        let non_residues: Vec<u64> = (1..n).filter(|&x| !is_residue[x as usize]).collect();
        // Smallest generator of the multiplicative group.
        let theta = field
            .nonzero_elements()
            .find(|g| g.multiplicative_order() == Ok(n - 1))
            .expect("Z_N^* is cyclic for prime N");
        let nu = field.elem(non_residues[0] as i64);
        ResidueSets {
            field,
            is_residue,
            residues,
            non_residues,
            theta,
            nu,
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    /// The quadratic residues, ascending.
    pub fn residues(&self) -> &[u64] {
        &self.residues
    }

    /// The non-residues, ascending.
    pub fn non_residues(&self) -> &[u64] {
        &self.non_residues
    }

    /// Smallest primitive element of Z_N^*.
    pub fn primitive_element(&self) -> FieldElem {
        self.theta
    }

    /// The fixed non-residue ν (smallest one) labelling the barred classes.
    pub fn nu(&self) -> FieldElem {
        self.nu
    }

    /// True iff x is a nonzero square.
    pub fn is_residue(&self, x: FieldElem) -> bool {
        assert_eq!(x.modulus(), self.field.modulus());
        !x.is_zero() && self.is_residue[x.value() as usize]
    }

    pub fn is_non_residue(&self, x: FieldElem) -> bool {
        assert_eq!(x.modulus(), self.field.modulus());
        !x.is_zero() && !self.is_residue[x.value() as usize]
    }

    /// |Q̄ ∩ (Q̄ − x)| by direct set intersection, x ≠ 0.
    pub fn residue_intersection_count(&self, x: FieldElem) -> Result<usize, FieldError> {
        if x.is_zero() {
            return Err(FieldError::ZeroArgument);
        }
        let count = self
            .non_residues
            .iter()
            .filter(|&&b| {
                // b ∈ Q̄ - x  ⟺  b + x ∈ Q̄
                let shifted = self.field.elem(b as i64) + x;
                self.is_non_residue(shifted)
            })
            .count();
        Ok(count)
    }

    /// A q ∈ Q ∪ {0} with μq + ν ∈ Q ∪ {0}, found by scanning 0 then Q
    /// ascending. Existence is guaranteed for μ ≠ 0; a `NoWitness` return
    /// signals a bug rather than a legitimate outcome.
    pub fn square_witness(&self, mu: FieldElem, nu: FieldElem) -> Result<FieldElem, FieldError> {
        if mu.is_zero() {
            return Err(FieldError::ZeroArgument);
        }
        let candidates = std::iter::once(0).chain(self.residues.iter().copied());
        for q in candidates {
            let q = self.field.elem(q as i64);
            let image = mu * q + nu;
            if image.is_zero() || self.is_residue(image) {
                return Ok(q);
            }
        }
        Err(FieldError::NoWitness)
    }
}

pub const TEST_PRIMES: [u64; 7] = [3, 5, 7, 11, 13, 17, 19];
