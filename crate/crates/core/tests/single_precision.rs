//! The kernels are generic over the scalar; spot-check them in `f32`.

use approx::assert_relative_eq;
use normhull::body::{make_shape, ConvexBody, ShapeSpec};
use normhull::hull_tr::{c_tr_euclidean, c_tr_normed};
use normhull::normvol::VolumeKind;

fn shape(spec: ShapeSpec<f32>) -> ConvexBody<f32> {
    make_shape(&spec).unwrap()
}

#[test]
fn square_and_triangle_constants() {
    let pi = std::f32::consts::PI;
    let sq = shape(ShapeSpec::Square);
    assert_eq!(sq.area(), 4.0);
    assert_relative_eq!(c_tr_euclidean(&sq).value, 3.0, max_relative = 1e-5);
    assert_relative_eq!(c_tr_normed(&sq, VolumeKind::Bus).unwrap().value, 3.0 * pi, max_relative = 1e-5);
    let tri = shape(ShapeSpec::Triangle);
    assert_relative_eq!(c_tr_normed(&tri, VolumeKind::Ht).unwrap().value, 18.0 / pi, max_relative = 1e-5);
    assert_relative_eq!(c_tr_normed(&tri, VolumeKind::MStar).unwrap().value, 6.0, max_relative = 1e-5);
}

#[test]
fn disk_polar_and_mass() {
    let pi = std::f32::consts::PI;
    let d = shape(ShapeSpec::Disk { n: 512 });
    assert_relative_eq!(d.polar().unwrap().area(), pi, max_relative = 1e-4);
    assert_relative_eq!(c_tr_normed(&d, VolumeKind::M).unwrap().value, pi + 4.0, max_relative = 1e-4);
}
