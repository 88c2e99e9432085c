//! Fixed-dimension vectors over an exact scalar.

use crate::scalar::{Rat, Scalar};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector3<T> {
    pub x: T,
    pub y: T,
    pub z: T,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vector2<T> {
    pub x: T,
    pub y: T,
}

impl<T: std::fmt::Debug> std::fmt::Debug for Vector3<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?}, {:?}, {:?})", self.x, self.y, self.z)
    }
}

impl<T: std::fmt::Debug> std::fmt::Debug for Vector2<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({:?}, {:?})", self.x, self.y)
    }
}

impl<T: Scalar> Vector3<T> {
    pub fn new(x: T, y: T, z: T) -> Self {
        Vector3 { x, y, z }
    }

    pub fn zero() -> Self {
        Vector3::new(T::zero(), T::zero(), T::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Vector3::new(
            self.x.clone() + rhs.x.clone(),
            self.y.clone() + rhs.y.clone(),
            self.z.clone() + rhs.z.clone(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Vector3::new(
            self.x.clone() - rhs.x.clone(),
            self.y.clone() - rhs.y.clone(),
            self.z.clone() - rhs.z.clone(),
        )
    }

    pub fn neg(&self) -> Self {
        Vector3::new(
            T::zero() - self.x.clone(),
            T::zero() - self.y.clone(),
            T::zero() - self.z.clone(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        Vector3::new(
            self.x.clone() * c.clone(),
            self.y.clone() * c.clone(),
            self.z.clone() * c.clone(),
        )
    }

    pub fn dot(&self, rhs: &Self) -> T {
        self.x.clone() * rhs.x.clone()
            + self.y.clone() * rhs.y.clone()
            + self.z.clone() * rhs.z.clone()
    }

    pub fn cross(&self, rhs: &Self) -> Self {
        Vector3::new(
            self.y.clone() * rhs.z.clone() - self.z.clone() * rhs.y.clone(),
            self.z.clone() * rhs.x.clone() - self.x.clone() * rhs.z.clone(),
            self.x.clone() * rhs.y.clone() - self.y.clone() * rhs.x.clone(),
        )
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Vector3<U> {
        Vector3::new(f(&self.x), f(&self.y), f(&self.z))
    }
}

impl<T: Scalar> Vector2<T> {
    pub fn new(x: T, y: T) -> Self {
        Vector2 { x, y }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Vector2::new(self.x.clone() - rhs.x.clone(), self.y.clone() - rhs.y.clone())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Vector2::new(self.x.clone() + rhs.x.clone(), self.y.clone() + rhs.y.clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        Vector2::new(self.x.clone() * c.clone(), self.y.clone() * c.clone())
    }

    pub fn dot(&self, rhs: &Self) -> T {
        self.x.clone() * rhs.x.clone() + self.y.clone() * rhs.y.clone()
    }

    /// 2D cross product (z component of the 3D cross of the lifted vectors).
    pub fn cross(&self, rhs: &Self) -> T {
        self.x.clone() * rhs.y.clone() - self.y.clone() * rhs.x.clone()
    }
}

/// Points in 3-space with exact rational coordinates.
pub type Point3 = Vector3<Rat>;
/// Points in the projection plane.
pub type Point2 = Vector2<Rat>;

/// Integer 3-vector, used for candidate directions and frame covectors.
pub type IVec3 = Vector3<num_bigint::BigInt>;

impl IVec3 {
    pub fn from_i64(x: i64, y: i64, z: i64) -> Self {
        Vector3::new(x.into(), y.into(), z.into())
    }

    pub fn to_rat(&self) -> Point3 {
        self.map(|c| Rat::from(c.clone()))
    }
}

/// Shorthand for rational 3-points with integer coordinates.
pub fn p3(x: i64, y: i64, z: i64) -> Point3 {
    use crate::scalar::rat_int;
    Vector3::new(rat_int(x), rat_int(y), rat_int(z))
}

/// Shorthand for rational 2-points with integer coordinates.
pub fn p2(x: i64, y: i64) -> Point2 {
    use crate::scalar::rat_int;
    Vector2::new(rat_int(x), rat_int(y))
}
