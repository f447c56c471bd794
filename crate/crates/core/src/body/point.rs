use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use crate::scalar::Scalar;

/// A point (or free vector) of the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Point<T> {
    pub x: T,
    pub y: T,
}

impl<T: Scalar> Point<T> {
    #[inline]
    pub fn new(x: T, y: T) -> Self {
        Self { x, y }
    }

    #[inline]
    pub fn origin() -> Self {
        Self::new(T::zero(), T::zero())
    }

    /// Unit vector at `angle` radians from the positive x-axis.
    #[inline]
    pub fn from_angle(angle: T) -> Self {
        Self::new(angle.cos(), angle.sin())
    }

    #[inline]
    pub fn dot(self, other: Self) -> T {
        self.x * other.x + self.y * other.y
    }

    /// z-component of the 3-D cross product; positive when `other` is
    /// counterclockwise from `self`.
    #[inline]
    pub fn cross(self, other: Self) -> T {
        self.x * other.y - self.y * other.x
    }

    #[inline]
    pub fn norm_sq(self) -> T {
        self.dot(self)
    }

    #[inline]
    pub fn norm(self) -> T {
        self.x.hypot(self.y)
    }

    /// Rotation by +π/2.
    #[inline]
    pub fn perp(self) -> Self {
        Self::new(-self.y, self.x)
    }

    #[inline]
    pub fn rotate(self, angle: T) -> Self {
        let (s, c) = angle.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }

    #[inline]
    pub fn angle(self) -> T {
        self.y.atan2(self.x)
    }

    #[inline]
    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    #[inline]
    pub fn distance(self, other: Self) -> T {
        (self - other).norm()
    }

    #[inline]
    pub fn lerp(self, other: Self, t: T) -> Self {
        self + (other - self) * t
    }

    /// Euclidean distance from `self` to the closed segment `[a, b]`.
    pub fn distance_to_segment(self, a: Self, b: Self) -> T {
        let ab = b - a;
        let len_sq = ab.norm_sq();
        if len_sq <= T::zero() {
            return self.distance(a);
        }
        let t = ((self - a).dot(ab) / len_sq).max(T::zero()).min(T::one());
        self.distance(a + ab * t)
    }
}

impl<T: Scalar> Add for Point<T> {
    type Output = Self;
    #[inline]
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<T: Scalar> AddAssign for Point<T> {
    #[inline]
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<T: Scalar> Sub for Point<T> {
    type Output = Self;
    #[inline]
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<T: Scalar> SubAssign for Point<T> {
    #[inline]
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<T: Scalar> Neg for Point<T> {
    type Output = Self;
    #[inline]
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

impl<T: Scalar> Mul<T> for Point<T> {
    type Output = Self;
    #[inline]
    fn mul(self, s: T) -> Self {
        Self::new(self.x * s, self.y * s)
    }
}

impl<T: Scalar> Div<T> for Point<T> {
    type Output = Self;
    #[inline]
    fn div(self, s: T) -> Self {
        Self::new(self.x / s, self.y / s)
    }
}

impl<T: Scalar> From<(T, T)> for Point<T> {
    fn from((x, y): (T, T)) -> Self {
        Self::new(x, y)
    }
}

/// A unit vector of S¹ together with its angle in `[0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Direction<T> {
    angle: T,
    unit: Point<T>,
}

impl<T: Scalar> Direction<T> {
    pub fn new(angle: T) -> Self {
        let angle = wrap_angle(angle);
        Self {
            angle,
            unit: Point::from_angle(angle),
        }
    }

    /// Direction of a nonzero vector. Returns `None` for the zero vector.
    pub fn from_vector(v: Point<T>) -> Option<Self> {
        let n = v.norm();
        if n <= T::zero() || !n.is_finite() {
            return None;
        }
        Some(Self {
            angle: wrap_angle(v.angle()),
            unit: v / n,
        })
    }

    #[inline]
    pub fn angle(&self) -> T {
        self.angle
    }

    #[inline]
    pub fn vector(&self) -> Point<T> {
        self.unit
    }

    /// u^⊥, rotated by +π/2. The vector is rotated exactly, so
    /// `perp(perp(u)) == -u` bitwise.
    pub fn perp(&self) -> Self {
        Self {
            angle: wrap_angle(self.angle + T::FRAC_PI_2()),
            unit: self.unit.perp(),
        }
    }

    pub fn opposite(&self) -> Self {
        Self {
            angle: wrap_angle(self.angle + T::PI()),
            unit: -self.unit,
        }
    }
}

fn wrap_angle<T: Scalar>(angle: T) -> T {
    let tau = T::TAU();
    let mut a = angle % tau;
    if a < T::zero() {
        a = a + tau;
    }
    if a >= tau {
        a = a - tau;
    }
    a
}
