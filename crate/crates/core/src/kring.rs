//! Exact arithmetic in the Grothendieck algebra of the projective plane.
//!
//! The algebra is `Z[eta]/(eta^3)` where `eta` is the class of a line and
//! `eta^2` the class of a point.  A class is recorded by its rank, first
//! Chern class and Euler characteristic; in the basis `[O], eta, eta^2`
//! the coordinates are `(r, c1, chi - r - c1)`, and since each basis class
//! has Euler characteristic 1, the characteristic of `a*[O] + b*eta +
//! c*eta^2` is simply `a + b + c`.
//!
//! All values are immutable and all operations are pure.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

/// A Grothendieck class on the plane, stored as `(rank, c1, chi)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct KClass {
    rank: BigInt,
    c1: BigInt,
    chi: BigInt,
}

impl KClass {
    pub fn new(rank: impl Into<BigInt>, c1: impl Into<BigInt>, chi: impl Into<BigInt>) -> Self {
        KClass {
            rank: rank.into(),
            c1: c1.into(),
            chi: chi.into(),
        }
    }

    /// The zero class.
    pub fn zero() -> Self {
        KClass::new(0, 0, 0)
    }

    /// `[O]`, the unit of the ring.
    pub fn unit() -> Self {
        KClass::new(1, 0, 1)
    }

    /// `eta`, the class of the structure sheaf of a line.
    pub fn line() -> Self {
        KClass::new(0, 1, 1)
    }

    /// `eta^2`, the class of the structure sheaf of a point.
    pub fn point() -> Self {
        KClass::new(0, 0, 1)
    }

    pub fn rank(&self) -> &BigInt {
        &self.rank
    }

    pub fn c1(&self) -> &BigInt {
        &self.c1
    }

    pub fn chi(&self) -> &BigInt {
        &self.chi
    }

    /// Coordinates `(a, b, c)` in the basis `[O], eta, eta^2`.
    pub fn to_basis(&self) -> (BigInt, BigInt, BigInt) {
        (
            self.rank.clone(),
            self.c1.clone(),
            &self.chi - &self.rank - &self.c1,
        )
    }

    /// Inverse of [`KClass::to_basis`].
    pub fn from_basis(a: impl Into<BigInt>, b: impl Into<BigInt>, c: impl Into<BigInt>) -> Self {
        let (a, b, c) = (a.into(), b.into(), c.into());
        let chi = &a + &b + &c;
        KClass {
            rank: a,
            c1: b,
            chi,
        }
    }

    /// Ring product, i.e. multiplication in `Z[eta]/(eta^3)`.
    pub fn mul(&self, other: &KClass) -> KClass {
        let (a, b, c) = self.to_basis();
        let (x, y, z) = other.to_basis();
        KClass::from_basis(&a * &x, &a * &y + &b * &x, &a * &z + &c * &x + &b * &y)
    }

    /// The dual class: `(r, -c1, chi - 3*c1)`.  An involutive ring automorphism.
    pub fn dual(&self) -> KClass {
        KClass {
            rank: self.rank.clone(),
            c1: -&self.c1,
            chi: &self.chi - 3 * &self.c1,
        }
    }

    /// Scalar multiple of the class (additive group structure).
    pub fn scale(&self, k: impl Into<BigInt>) -> KClass {
        let k = k.into();
        KClass {
            rank: &self.rank * &k,
            c1: &self.c1 * &k,
            chi: &self.chi * &k,
        }
    }

    /// The Euler pairing `<c, u> = chi(c * u)`.
    pub fn euler_pair(&self, other: &KClass) -> BigInt {
        let (a, b, c) = self.to_basis();
        let (x, y, z) = other.to_basis();
        // chi of a basis combination is the sum of its coordinates
        &a * &x + &a * &y + &b * &x + &a * &z + &c * &x + &b * &y
    }

    /// Positive generator of the rank-0 part of the orthogonal complement,
    /// together with `delta = gcd(rank, c1)`.
    ///
    /// For a class of positive rank this is `(0, r/delta, -c1/delta)`.
    pub fn orth_generator(&self) -> Result<(KClass, BigInt)> {
        if !self.rank.is_positive() {
            return Err(Error::NonPositiveRank(self.rank.clone()));
        }
        let delta = self.rank.gcd(&self.c1);
        let u = KClass {
            rank: BigInt::zero(),
            c1: &self.rank / &delta,
            chi: -&self.c1 / &delta,
        };
        debug_assert!(self.euler_pair(&u).is_zero());
        Ok((u, delta))
    }

    /// Expected dimension `D = 1 - <c*, c>` of the moduli space of
    /// semistable sheaves of this class.
    pub fn moduli_dim(&self) -> BigInt {
        BigInt::from(1) - self.dual().euler_pair(self)
    }

    /// Chern-data view `(rank, c1, c2)` of the class.
    pub fn to_chern(&self) -> ChernData {
        // chi = r + c1(c1+3)/2 - c2, and c1(c1+3) is always even
        let c2 = (&self.c1 * (&self.c1 + 3)) / 2 + &self.rank - &self.chi;
        ChernData {
            rank: self.rank.clone(),
            c1: self.c1.clone(),
            c2,
        }
    }
}

impl std::ops::Add for &KClass {
    type Output = KClass;
    fn add(self, rhs: &KClass) -> KClass {
        KClass {
            rank: &self.rank + &rhs.rank,
            c1: &self.c1 + &rhs.c1,
            chi: &self.chi + &rhs.chi,
        }
    }
}

impl std::ops::Sub for &KClass {
    type Output = KClass;
    fn sub(self, rhs: &KClass) -> KClass {
        KClass {
            rank: &self.rank - &rhs.rank,
            c1: &self.c1 - &rhs.c1,
            chi: &self.chi - &rhs.chi,
        }
    }
}

impl std::ops::Neg for &KClass {
    type Output = KClass;
    fn neg(self) -> KClass {
        KClass {
            rank: -&self.rank,
            c1: -&self.c1,
            chi: -&self.chi,
        }
    }
}

impl std::fmt::Display for KClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.rank, self.c1, self.chi)
    }
}

/// A class recorded by `(rank, c1, c2)` instead of `(rank, c1, chi)`.
///
/// The two views are mutually inverse via Riemann-Roch on the plane,
/// `chi = r + 3*c1/2 + (c1^2 - 2*c2)/2`; for rank-0 classes `c2` is
/// defined formally by the same identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChernData {
    pub rank: BigInt,
    pub c1: BigInt,
    pub c2: BigInt,
}

impl ChernData {
    pub fn new(rank: impl Into<BigInt>, c1: impl Into<BigInt>, c2: impl Into<BigInt>) -> Self {
        ChernData {
            rank: rank.into(),
            c1: c1.into(),
            c2: c2.into(),
        }
    }

    pub fn to_kclass(&self) -> KClass {
        let chi = &self.rank + (&self.c1 * (&self.c1 + 3)) / 2 - &self.c2;
        KClass {
            rank: self.rank.clone(),
            c1: self.c1.clone(),
            chi,
        }
    }
}
