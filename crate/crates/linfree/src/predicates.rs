//! Exact geometric predicates.
//!
//! All decisions are signs of exact determinants; running any predicate
//! twice on the same input gives identical results.

use crate::scalar::{sign_of, FieldScalar, Scalar};
use crate::vec::{Vector2, Vector3};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("segments are collinear and overlap in more than a point")]
    DegenerateOverlap,
    #[error("triangle vertices are collinear")]
    DegenerateTriangle,
    #[error("all points are collinear")]
    AllCollinear,
    #[error("need at least 3 points, got {0}")]
    TooFewPoints(usize),
}

/// Sign of the inner product `l . u`.
pub fn sign_dot<T: Scalar>(l: &Vector3<T>, u: &Vector3<T>) -> i8 {
    sign_of(&l.dot(u))
}

/// Orientation of the triple (a, b, c) in the plane: sign of
/// `det[b - a, c - a]`. Zero iff collinear.
pub fn orient2d<T: Scalar>(a: &Vector2<T>, b: &Vector2<T>, c: &Vector2<T>) -> i8 {
    sign_of(&b.sub(a).cross(&c.sub(a)))
}

/// Orientation of the quadruple (a, b, c, d) in 3-space: sign of
/// `det[b - a, c - a, d - a]`. Zero iff coplanar.
pub fn orient3d<T: Scalar>(
    a: &Vector3<T>,
    b: &Vector3<T>,
    c: &Vector3<T>,
    d: &Vector3<T>,
) -> i8 {
    let u = b.sub(a);
    let v = c.sub(a);
    let w = d.sub(a);
    sign_of(&u.cross(&v).dot(&w))
}

/// Interior-interior transversal intersection of two plane segments.
///
/// Returns the exact parameters `(t1, t2)` with `0 < t1, t2 < 1` when the
/// open segments cross transversally; `None` when the segments are
/// disjoint, touch only at endpoints, or are parallel without overlap.
/// Collinear segments sharing more than a point are an error: regular
/// projections do not produce them, so the caller must choose a new frame.
pub fn segment_crossing_2d<T: FieldScalar>(
    s1: (&Vector2<T>, &Vector2<T>),
    s2: (&Vector2<T>, &Vector2<T>),
) -> Result<Option<(T, T)>, GeometryError> {
    let (p1, p2) = s1;
    let (q1, q2) = s2;
    let d1 = p2.sub(p1);
    let d2 = q2.sub(q1);
    let denom = d1.cross(&d2);
    let w = q1.sub(p1);
    if denom.is_zero() {
        if !w.cross(&d1).is_zero() {
            return Ok(None); // parallel, distinct lines
        }
        // Collinear: compare 1D extents along d1.
        let a0 = T::zero();
        let a1 = d1.dot(&d1);
        let mut b0 = w.dot(&d1);
        let mut b1 = q2.sub(p1).dot(&d1);
        if b0 > b1 {
            std::mem::swap(&mut b0, &mut b1);
        }
        let lo = if a0 > b0 { a0 } else { b0.clone() };
        let hi = if a1 < b1 { a1 } else { b1.clone() };
        if lo < hi {
            return Err(GeometryError::DegenerateOverlap);
        }
        return Ok(None); // disjoint or touching at a single shared endpoint
    }
    let t1 = w.cross(&d2) / denom.clone();
    let t2 = w.cross(&d1) / denom;
    let zero = T::zero();
    let one = T::one();
    if t1 > zero && t1 < one && t2 > zero && t2 < one {
        Ok(Some((t1, t2)))
    } else {
        Ok(None)
    }
}

/// True iff the closed point `z` lies strictly inside the open triangle
/// (a, b, c), all four points being coplanar is required by the caller.
fn point_in_open_triangle_3d<T: Scalar>(
    tri: (&Vector3<T>, &Vector3<T>, &Vector3<T>),
    z: &Vector3<T>,
) -> bool {
    let (a, b, c) = tri;
    let n = b.sub(a).cross(&c.sub(a));
    let s_ab = sign_of(&b.sub(a).cross(&z.sub(a)).dot(&n));
    let s_bc = sign_of(&c.sub(b).cross(&z.sub(b)).dot(&n));
    let s_ca = sign_of(&a.sub(c).cross(&z.sub(c)).dot(&n));
    s_ab > 0 && s_bc > 0 && s_ca > 0
}

/// Does the open interior of the triangle meet the closed segment?
///
/// The triangle boundary does not count: a segment touching only an edge
/// or a vertex of the triangle yields `false`.
pub fn triangle_interior_meets_segment<T: FieldScalar>(
    tri: (&Vector3<T>, &Vector3<T>, &Vector3<T>),
    seg: (&Vector3<T>, &Vector3<T>),
) -> Result<bool, GeometryError> {
    let (a, b, c) = tri;
    let (p, q) = seg;
    if b.sub(a).cross(&c.sub(a)).is_zero() {
        return Err(GeometryError::DegenerateTriangle);
    }
    let dp = orient3d(a, b, c, p);
    let dq = orient3d(a, b, c, q);
    match (dp, dq) {
        (x, y) if x != 0 && y != 0 && x == y => Ok(false),
        (x, y) if x != 0 && y != 0 => {
            // Proper plane crossing: strictly inside iff the segment line
            // passes on the same strict side of all three triangle edges.
            let u = orient3d(p, q, a, b);
            let v = orient3d(p, q, b, c);
            let w = orient3d(p, q, c, a);
            Ok(u != 0 && u == v && v == w)
        }
        (0, y) if y != 0 => Ok(point_in_open_triangle_3d(tri, p)),
        (x, 0) if x != 0 => Ok(point_in_open_triangle_3d(tri, q)),
        _ => Ok(coplanar_segment_meets_open_triangle(tri, seg)),
    }
}

/// Coplanar case: clip the segment to the closed triangle and test whether
/// the clipped part has positive length off the boundary.
fn coplanar_segment_meets_open_triangle<T: FieldScalar>(
    tri: (&Vector3<T>, &Vector3<T>, &Vector3<T>),
    seg: (&Vector3<T>, &Vector3<T>),
) -> bool {
    let (a, b, c) = tri;
    let (p, q) = seg;
    if point_in_open_triangle_3d(tri, p) || point_in_open_triangle_3d(tri, q) {
        return true;
    }
    let n = b.sub(a).cross(&c.sub(a));
    let d = q.sub(p);
    // In-plane half-space constraints: h_i(x) = ((e1 - e0) x (x - e0)) . n >= 0
    // with strict interior when all three are > 0.
    let edges = [(a, b), (b, c), (c, a)];
    let mut t_lo = T::zero();
    let mut t_hi = T::one();
    for (e0, e1) in edges {
        let dir = e1.sub(e0);
        // h(p + t d) = h0 + t * hd
        let h0 = dir.cross(&p.sub(e0)).dot(&n);
        let hd = dir.cross(&d).dot(&n);
        if hd.is_zero() {
            if sign_of(&h0) < 0 {
                return false; // entirely outside this edge
            }
            continue;
        }
        let t_cross = (T::zero() - h0) / hd.clone();
        if sign_of(&hd) > 0 {
            if t_cross > t_lo {
                t_lo = t_cross;
            }
        } else if t_cross < t_hi {
            t_hi = t_cross;
        }
    }
    if t_lo >= t_hi {
        return false;
    }
    // The clipped sub-segment lies in the closed triangle; check its
    // midpoint against the open interior (rules out boundary-only runs).
    let two = T::one() + T::one();
    let t_mid = (t_lo + t_hi) / two;
    let mid = p.add(&d.scale(&t_mid));
    point_in_open_triangle_3d(tri, &mid)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::vec::{p2, p3};

    #[test]
    fn sign_dot_examples() {
        assert_eq!(sign_dot(&p3(0, 0, 1), &p3(3, 0, 0)), 0);
        assert_eq!(sign_dot(&p3(-2, -3, -5), &p3(1, 0, 0)), -1);
        assert_eq!(sign_dot(&p3(-2, -3, -5), &p3(0, 1, -1)), 1);
    }

    #[test]
    fn orient2d_examples() {
        assert_eq!(orient2d(&p2(0, 0), &p2(1, 0), &p2(0, 1)), 1);
        assert_eq!(orient2d(&p2(0, 0), &p2(1, 1), &p2(2, 2)), 0);
        assert_eq!(orient2d(&p2(0, 0), &p2(0, 1), &p2(1, 0)), -1);
    }

    #[test]
    fn orient3d_examples() {
        assert_eq!(orient3d(&p3(0, 0, 0), &p3(1, 0, 0), &p3(0, 1, 0), &p3(0, 0, 1)), 1);
        assert_eq!(orient3d(&p3(0, 0, 0), &p3(1, 0, 0), &p3(0, 1, 0), &p3(1, 1, 0)), 0);
        assert_eq!(orient3d(&p3(0, 0, 0), &p3(1, 0, 0), &p3(0, 1, 0), &p3(0, 0, -1)), -1);
    }

    #[test]
    fn segment_crossing_symmetric_x() {
        let r = segment_crossing_2d((&p2(0, 0), &p2(2, 2)), (&p2(0, 2), &p2(2, 0))).unwrap();
        assert_eq!(r, Some((rat(1, 2), rat(1, 2))));
    }

    #[test]
    fn segment_crossing_disjoint_collinear() {
        let r = segment_crossing_2d((&p2(0, 0), &p2(1, 0)), (&p2(2, 0), &p2(3, 0))).unwrap();
        assert_eq!(r, None);
    }

    #[test]
    fn segment_crossing_endpoint_touch_is_none() {
        // Shared point (1,1) is an endpoint of the second segment.
        let r = segment_crossing_2d((&p2(0, 0), &p2(2, 2)), (&p2(1, 1), &p2(3, 0))).unwrap();
        assert_eq!(r, None);
    }

    #[test]
    fn segment_crossing_collinear_touch_is_none() {
        let r = segment_crossing_2d((&p2(0, 0), &p2(1, 0)), (&p2(1, 0), &p2(3, 0))).unwrap();
        assert_eq!(r, None);
    }

    #[test]
    fn segment_crossing_overlap_errors() {
        let r = segment_crossing_2d((&p2(0, 0), &p2(2, 0)), (&p2(1, 0), &p2(3, 0)));
        assert_eq!(r, Err(GeometryError::DegenerateOverlap));
    }

    #[test]
    fn triangle_stab_through_interior() {
        let tri = (p3(0, 0, 0), p3(1, 0, 0), p3(0, 1, 0));
        let a = Vector3::new(rat(1, 4), rat(1, 4), rat(-1, 1));
        let b = Vector3::new(rat(1, 4), rat(1, 4), rat(1, 1));
        assert!(triangle_interior_meets_segment((&tri.0, &tri.1, &tri.2), (&a, &b)).unwrap());
    }

    #[test]
    fn triangle_parallel_plane_above() {
        let tri = (p3(0, 0, 0), p3(1, 0, 0), p3(0, 1, 0));
        assert!(!triangle_interior_meets_segment(
            (&tri.0, &tri.1, &tri.2),
            (&p3(0, 0, 1), &p3(1, 0, 1))
        )
        .unwrap());
    }

    #[test]
    fn triangle_touching_vertex_only() {
        let tri = (p3(0, 0, 0), p3(1, 0, 0), p3(0, 1, 0));
        assert!(!triangle_interior_meets_segment(
            (&tri.0, &tri.1, &tri.2),
            (&p3(0, 0, 0), &p3(0, 0, 1))
        )
        .unwrap());
    }

    #[test]
    fn triangle_coplanar_cases() {
        let tri = (p3(0, 0, 0), p3(4, 0, 0), p3(0, 4, 0));
        // Through the interior within the plane.
        assert!(triangle_interior_meets_segment(
            (&tri.0, &tri.1, &tri.2),
            (&p3(-1, 1, 0), &p3(3, 1, 0))
        )
        .unwrap());
        // Along an edge: boundary only.
        assert!(!triangle_interior_meets_segment(
            (&tri.0, &tri.1, &tri.2),
            (&p3(0, 0, 0), &p3(4, 0, 0))
        )
        .unwrap());
        // Coplanar but fully outside.
        assert!(!triangle_interior_meets_segment(
            (&tri.0, &tri.1, &tri.2),
            (&p3(5, 0, 0), &p3(0, 5, 0))
        )
        .unwrap());
        // Endpoint strictly inside.
        assert!(triangle_interior_meets_segment(
            (&tri.0, &tri.1, &tri.2),
            (&p3(1, 1, 0), &p3(9, 9, 0))
        )
        .unwrap());
    }

    #[test]
    fn triangle_degenerate_errors() {
        let r = triangle_interior_meets_segment(
            (&p3(0, 0, 0), &p3(1, 1, 1), &p3(2, 2, 2)),
            (&p3(0, 1, 0), &p3(1, 0, 0)),
        );
        assert_eq!(r, Err(GeometryError::DegenerateTriangle));
    }

    #[test]
    fn orient_antisymmetry() {
        let (a, b, c) = (p2(0, 0), p2(3, 1), p2(1, 4));
        assert_eq!(orient2d(&a, &b, &c), -orient2d(&b, &a, &c));
        let (p, q, r, s) = (p3(0, 0, 0), p3(3, 1, 0), p3(1, 4, 2), p3(2, 2, 7));
        assert_eq!(orient3d(&p, &q, &r, &s), -orient3d(&q, &p, &r, &s));
        assert_eq!(orient3d(&p, &q, &r, &s), -orient3d(&p, &r, &q, &s));
    }
}
