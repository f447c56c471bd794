use crate::error::{GeomError, Result};
use crate::scalar::Scalar;

use super::Point;

/// `x ↦ L·x + t` with `L` a 2×2 matrix stored row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AffineMap<T> {
    linear: [[T; 2]; 2],
    translation: Point<T>,
}

impl<T: Scalar> AffineMap<T> {
    /// Fails with `SingularMap` when `|det L| <= 1e-12`.
    pub fn new(linear: [[T; 2]; 2], translation: Point<T>) -> Result<Self> {
        let map = Self {
            linear,
            translation,
        };
        let det = map.det();
        if !(det.abs() > T::geom_eps()) {
            return Err(GeomError::SingularMap {
                det: det.to_f64_lossy(),
            });
        }
        Ok(map)
    }

    pub fn linear(linear: [[T; 2]; 2]) -> Result<Self> {
        Self::new(linear, Point::origin())
    }

    pub fn identity() -> Self {
        let (o, l) = (T::zero(), T::one());
        Self {
            linear: [[l, o], [o, l]],
            translation: Point::origin(),
        }
    }

    pub fn translation(v: Point<T>) -> Self {
        Self {
            translation: v,
            ..Self::identity()
        }
    }

    pub fn rotation(angle: T) -> Self {
        let (s, c) = angle.sin_cos();
        Self {
            linear: [[c, -s], [s, c]],
            translation: Point::origin(),
        }
    }

    pub fn scaling(sx: T, sy: T) -> Result<Self> {
        Self::linear([[sx, T::zero()], [T::zero(), sy]])
    }

    /// The linear map sending `e1 ↦ p` and `e2 ↦ q`.
    pub fn from_columns(p: Point<T>, q: Point<T>) -> Result<Self> {
        Self::linear([[p.x, q.x], [p.y, q.y]])
    }

    #[inline]
    pub fn matrix(&self) -> [[T; 2]; 2] {
        self.linear
    }

    #[inline]
    pub fn offset(&self) -> Point<T> {
        self.translation
    }

    #[inline]
    pub fn det(&self) -> T {
        let m = &self.linear;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    #[inline]
    pub fn apply(&self, p: Point<T>) -> Point<T> {
        self.apply_linear(p) + self.translation
    }

    #[inline]
    pub fn apply_linear(&self, p: Point<T>) -> Point<T> {
        let m = &self.linear;
        Point::new(m[0][0] * p.x + m[0][1] * p.y, m[1][0] * p.x + m[1][1] * p.y)
    }

    pub fn inverse(&self) -> Self {
        let m = &self.linear;
        let det = self.det();
        let inv = [
            [m[1][1] / det, -m[0][1] / det],
            [-m[1][0] / det, m[0][0] / det],
        ];
        let lin = Self {
            linear: inv,
            translation: Point::origin(),
        };
        Self {
            linear: inv,
            translation: -lin.apply_linear(self.translation),
        }
    }

    /// `L^{-T}` with no translation; maps polars of images to images of
    /// polars.
    pub fn inverse_transpose(&self) -> Self {
        let inv = self.inverse().linear;
        Self {
            linear: [[inv[0][0], inv[1][0]], [inv[0][1], inv[1][1]]],
            translation: Point::origin(),
        }
    }

    /// `self ∘ other`: applies `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        let a = &self.linear;
        let b = &other.linear;
        let mut m = [[T::zero(); 2]; 2];
        for (i, row) in m.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        Self {
            linear: m,
            translation: self.apply(other.translation),
        }
    }

    /// Ratio of the largest to smallest singular value of `L`.
    pub fn condition_number(&self) -> T {
        let m = &self.linear;
        let fro = m[0][0] * m[0][0] + m[0][1] * m[0][1] + m[1][0] * m[1][0] + m[1][1] * m[1][1];
        let det = self.det().abs();
        let disc = (fro * fro - T::of(4.0) * det * det).max(T::zero()).sqrt();
        let s_max = ((fro + disc) / T::of(2.0)).sqrt();
        let s_min = ((fro - disc) / T::of(2.0)).max(T::zero()).sqrt();
        s_max / s_min
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singular_map_rejected() {
        let err = AffineMap::<f64>::linear([[1.0, 2.0], [2.0, 4.0]]).unwrap_err();
        assert!(matches!(err, GeomError::SingularMap { .. }));
    }

    #[test]
    fn inverse_round_trip() {
        let a = AffineMap::new([[2.0, 1.0], [0.5, 3.0]], Point::new(1.0, -2.0)).unwrap();
        let p = Point::new(0.3, -0.7);
        let q = a.inverse().apply(a.apply(p));
        assert!((q - p).norm() < 1e-14);
        let id = a.compose(&a.inverse());
        assert!((id.apply(p) - p).norm() < 1e-14);
    }

    #[test]
    fn condition_number_of_diagonal() {
        let a = AffineMap::<f64>::scaling(2.0, 0.5).unwrap();
        assert!((a.condition_number() - 4.0).abs() < 1e-12);
        assert!((AffineMap::<f64>::rotation(0.3).condition_number() - 1.0).abs() < 1e-7);
    }
}
