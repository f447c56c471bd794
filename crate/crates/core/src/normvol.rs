//! Normed areas in the plane whose unit disk is an o-symmetric body `M`.
//!
//! Each of the four notions of area is a constant multiple `ν_τ` of
//! Lebesgue area:
//!
//! | kind    | `ν_τ`       |
//! |---------|-------------|
//! | Busemann        | `π / λ(M)`  |
//! | Holmes–Thompson | `λ(M°) / π` |
//! | mass            | `2 / λ(P)`  |
//! | mass*           | `4 / λ(P')` |
//!
//! with `P` the largest inscribed and `P'` the smallest circumscribed
//! parallelogram of `M`.

use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::body::{intersect, AffineMap, ConvexBody, Point};
use crate::error::{GeomError, Result};
use crate::extremal::{
    largest_inscribed_affreg_hexagon, largest_inscribed_parallelogram,
    smallest_circumscribed_parallelogram, ExtremalFigure, Witness,
};
use crate::scalar::Scalar;

/// Default tolerance of [`is_radon`].
pub const RADON_TOL: f64 = 1e-4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VolumeKind {
    Bus,
    Ht,
    M,
    MStar,
}

impl VolumeKind {
    pub const ALL: [VolumeKind; 4] = [VolumeKind::Bus, VolumeKind::Ht, VolumeKind::M, VolumeKind::MStar];

    pub fn name(self) -> &'static str {
        match self {
            VolumeKind::Bus => "bus",
            VolumeKind::Ht => "ht",
            VolumeKind::M => "m",
            VolumeKind::MStar => "mstar",
        }
    }
}

impl fmt::Display for VolumeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for VolumeKind {
    type Err = GeomError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "bus" | "busemann" => Ok(VolumeKind::Bus),
            "ht" | "holmes-thompson" => Ok(VolumeKind::Ht),
            "m" | "mass" => Ok(VolumeKind::M),
            "mstar" | "m*" | "mass*" => Ok(VolumeKind::MStar),
            other => Err(GeomError::BadSpec(format!("unknown volume kind `{other}`"))),
        }
    }
}

/// A normed plane: the unit disk `M` with its polar and extremal figures.
///
/// The largest inscribed affine-regular hexagon is only needed by a few
/// callers and is computed on first use.
#[derive(Debug)]
pub struct NormContext<T> {
    m: ConvexBody<T>,
    polar: ConvexBody<T>,
    p: ExtremalFigure<T>,
    p_prime: ExtremalFigure<T>,
    h: OnceLock<ExtremalFigure<T>>,
    scalars: [T; 4],
}

impl<T: Scalar> NormContext<T> {
    pub fn new(m: ConvexBody<T>) -> Result<Self> {
        m.require_symmetric()?;
        let polar = m.polar()?;
        let p = largest_inscribed_parallelogram(&m)?;
        let p_prime = smallest_circumscribed_parallelogram(&m)?;
        let scalars = [
            T::PI() / m.area(),
            polar.area() / T::PI(),
            T::of(2.0) / p.area,
            T::of(4.0) / p_prime.area,
        ];
        Ok(Self {
            m,
            polar,
            p,
            p_prime,
            h: OnceLock::new(),
            scalars,
        })
    }

    pub fn unit_disk(&self) -> &ConvexBody<T> {
        &self.m
    }

    pub fn polar(&self) -> &ConvexBody<T> {
        &self.polar
    }

    /// Largest inscribed parallelogram `P`.
    pub fn inscribed(&self) -> &ExtremalFigure<T> {
        &self.p
    }

    /// Smallest circumscribed parallelogram `P'`.
    pub fn circumscribed(&self) -> &ExtremalFigure<T> {
        &self.p_prime
    }

    /// Largest inscribed affine-regular hexagon `H`.
    pub fn hexagon(&self) -> &ExtremalFigure<T> {
        self.h.get_or_init(|| {
            largest_inscribed_affreg_hexagon(&self.m).expect("unit disk was validated on construction")
        })
    }

    /// The multiplier `ν_τ`.
    pub fn scalar(&self, kind: VolumeKind) -> T {
        self.scalars[kind as usize]
    }

    pub fn normed_area(&self, kind: VolumeKind, s: &ConvexBody<T>) -> T {
        self.scalar(kind) * s.area()
    }
}

pub fn make_norm_context<T: Scalar>(m: ConvexBody<T>) -> Result<NormContext<T>> {
    NormContext::new(m)
}

pub fn normed_area<T: Scalar>(ctx: &NormContext<T>, kind: VolumeKind, s: &ConvexBody<T>) -> T {
    ctx.normed_area(kind, s)
}

/// `λ(M) λ(M°)`.
pub fn volume_product<T: Scalar>(m: &ConvexBody<T>) -> Result<T> {
    Ok(m.area() * m.polar()?.area())
}

/// The linear map sending the largest inscribed parallelogram of `M` to the
/// square with vertices `(±1, 0)`, `(0, ±1)`, together with the image of `M`.
pub fn radon_normalize<T: Scalar>(m: &ConvexBody<T>) -> Result<(AffineMap<T>, ConvexBody<T>)> {
    let p = largest_inscribed_parallelogram(m)?;
    let Witness::Inscribed { p, q } = p.witness else {
        unreachable!("inscribed parallelogram carries an inscribed witness")
    };
    let map = AffineMap::from_columns(p, q)?.inverse();
    let image = m.apply_affine(&map);
    Ok((map, image))
}

/// Whether the polar of `M`, rotated by 90°, coincides with `M` once `M`
/// is Radon-normalized.
pub fn is_radon<T: Scalar>(m: &ConvexBody<T>, tol: T) -> Result<bool> {
    let (_, mm) = radon_normalize(m)?;
    let rotated = mm.polar()?.rot90();
    Ok(rotated.hausdorff_distance(&mm) <= tol * mm.diameter())
}

/// The two splices of a Radon-normalized body with its rotated polar.
#[derive(Clone, Debug)]
pub struct RadonExtensions<T> {
    /// `M` in quadrants 1 and 3, `rot90(M°)` in quadrants 2 and 4.
    pub m1: ConvexBody<T>,
    /// `rot90(M°)` in quadrants 1 and 3, `M` in quadrants 2 and 4.
    pub m2: ConvexBody<T>,
    /// `λ(M° ∩ Q₂) − λ(M ∩ Q₁)`.
    pub x1: T,
    /// `λ(M° ∩ Q₁) − λ(M ∩ Q₂)`.
    pub x2: T,
}

/// Splices `M` with `rot90(M°)` quadrant by quadrant. `M` must already be
/// in the frame produced by [`radon_normalize`].
pub fn radon_extensions<T: Scalar>(m: &ConvexBody<T>) -> Result<RadonExtensions<T>> {
    m.require_symmetric()?;
    check_normalized(m)?;
    let r = m.polar()?.rot90();
    let quadrants = quadrant_boxes(m.diameter().max(r.diameter()) * T::of(2.0))?;
    let pieces = |body: &ConvexBody<T>| -> Result<Vec<ConvexBody<T>>> {
        quadrants.iter().map(|q| intersect(body, q)).collect()
    };
    let mq = pieces(m)?;
    let rq = pieces(&r)?;
    let m1 = splice(&[&mq[0], &rq[1], &mq[2], &rq[3]])?;
    let m2 = splice(&[&rq[0], &mq[1], &rq[2], &mq[3]])?;
    // rot90 carries M° ∩ Q₁ onto R ∩ Q₂ and M° ∩ Q₂ onto R ∩ Q₃.
    let x1 = rq[2].area() - mq[0].area();
    let x2 = rq[1].area() - mq[1].area();
    Ok(RadonExtensions { m1, m2, x1, x2 })
}

fn check_normalized<T: Scalar>(m: &ConvexBody<T>) -> Result<()> {
    let tol = T::of(1e-6);
    let (one, zero) = (T::one(), T::zero());
    for v in [Point::new(one, zero), Point::new(zero, one)] {
        let g = m.gauge(v)?;
        if (g - one).abs() > tol {
            return Err(GeomError::NotNormalized(format!(
                "({}, {}) has gauge {}",
                v.x, v.y, g
            )));
        }
        let h = m.support(v);
        if (h - one).abs() > tol {
            return Err(GeomError::NotNormalized(format!(
                "support in direction ({}, {}) is {}",
                v.x, v.y, h
            )));
        }
    }
    let p = largest_inscribed_parallelogram(m)?.area;
    if (p - T::of(2.0)).abs() > tol {
        return Err(GeomError::NotNormalized(format!(
            "largest inscribed parallelogram has area {p}, not 2"
        )));
    }
    Ok(())
}

fn quadrant_boxes<T: Scalar>(r: T) -> Result<[ConvexBody<T>; 4]> {
    let z = T::zero();
    let square = |sx: T, sy: T| {
        ConvexBody::from_points(&[
            Point::new(z, z),
            Point::new(sx * r, z),
            Point::new(sx * r, sy * r),
            Point::new(z, sy * r),
        ])
    };
    let (p, n) = (T::one(), -T::one());
    Ok([square(p, p)?, square(n, p)?, square(n, n)?, square(p, n)?])
}

/// Union of four quadrant pieces; fails unless the union is convex.
fn splice<T: Scalar>(pieces: &[&ConvexBody<T>; 4]) -> Result<ConvexBody<T>> {
    let pts: Vec<_> = pieces.iter().flat_map(|b| b.vertices().iter().copied()).collect();
    let hull = ConvexBody::from_points(&pts)?;
    let total: T = pieces.iter().map(|b| b.area()).sum();
    let gap = hull.area() - total;
    if gap > T::of(1e-9) * hull.area() {
        return Err(GeomError::NotNormalized(format!(
            "quadrant splice is not convex (hull exceeds pieces by {gap})"
        )));
    }
    Ok(hull)
}

/// `f(M) = λ(M°)·(⅔λ(M) + 2λ(P)) / π`.
pub fn f_functional<T: Scalar>(m: &ConvexBody<T>) -> Result<T> {
    let p = largest_inscribed_parallelogram(m)?;
    let polar = m.polar()?;
    Ok(polar.area() * (T::of(2.0) / T::of(3.0) * m.area() + T::of(2.0) * p.area) / T::PI())
}
