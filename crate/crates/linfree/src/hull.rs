//! Exact 2D convex hull (monotone chain).

use crate::predicates::{orient2d, GeometryError};
use crate::scalar::Scalar;
use crate::vec::Vector2;

/// Indices of the hull vertices in counterclockwise order, starting from
/// the lexicographically least point. Points lying on a hull edge (but not
/// at a corner) are excluded, so the result lists only polygon vertices.
pub fn convex_hull_2d<T: Scalar>(points: &[Vector2<T>]) -> Result<Vec<usize>, GeometryError> {
    if points.len() < 3 {
        return Err(GeometryError::TooFewPoints(points.len()));
    }
    let mut idx: Vec<usize> = (0..points.len()).collect();
    idx.sort_by(|&i, &j| {
        points[i]
            .x
            .cmp(&points[j].x)
            .then_with(|| points[i].y.cmp(&points[j].y))
    });

    let build = |order: &[usize]| {
        let mut h: Vec<usize> = Vec::new();
        for &i in order {
            while h.len() >= 2
                && orient2d(&points[h[h.len() - 2]], &points[h[h.len() - 1]], &points[i]) <= 0
            {
                h.pop();
            }
            h.push(i);
        }
        h
    };

    let lower = build(&idx);
    let rev: Vec<usize> = idx.iter().rev().copied().collect();
    let upper = build(&rev);

    if lower.len() < 2 || (lower.len() == 2 && upper.len() == 2 && points.len() > 1) {
        // All points on one line: the chains degenerate to two endpoints.
    }
    let mut hull = lower;
    hull.extend_from_slice(&upper[1..upper.len().saturating_sub(1)]);
    if hull.len() < 3 {
        return Err(GeometryError::AllCollinear);
    }
    Ok(hull)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::vec::p2;

    #[test]
    fn square_with_center() {
        let pts = vec![
            p2(0, 0),
            p2(1, 0),
            p2(1, 1),
            p2(0, 1),
            Vector2::new(rat(1, 2), rat(1, 2)),
        ];
        let hull = convex_hull_2d(&pts).unwrap();
        let mut sorted = hull.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 2, 3]);
        assert_eq!(hull.len(), 4);
    }

    #[test]
    fn three_generic_points() {
        let pts = vec![p2(0, 0), p2(2, 1), p2(1, 3)];
        let hull = convex_hull_2d(&pts).unwrap();
        assert_eq!(hull.len(), 3);
    }

    #[test]
    fn midpoint_on_edge_excluded() {
        let pts = vec![
            p2(0, 0),
            p2(2, 0),
            p2(2, 2),
            p2(0, 2),
            p2(1, 0), // midpoint of the bottom side
        ];
        let hull = convex_hull_2d(&pts).unwrap();
        let mut sorted = hull.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![0, 1, 2, 3]);
    }

    #[test]
    fn collinear_inputs_error() {
        let pts = vec![p2(0, 0), p2(1, 1), p2(2, 2), p2(3, 3)];
        assert_eq!(convex_hull_2d(&pts), Err(GeometryError::AllCollinear));
    }

    #[test]
    fn ccw_orientation() {
        let pts = vec![p2(0, 0), p2(4, 0), p2(4, 3), p2(0, 3)];
        let hull = convex_hull_2d(&pts).unwrap();
        for w in 0..hull.len() {
            let a = &pts[hull[w]];
            let b = &pts[hull[(w + 1) % hull.len()]];
            let c = &pts[hull[(w + 2) % hull.len()]];
            assert_eq!(orient2d(a, b, c), 1);
        }
    }

    #[test]
    fn permutation_invariance_up_to_rotation() {
        let pts = vec![p2(0, 0), p2(5, 1), p2(6, 4), p2(2, 6), p2(3, 3), p2(1, 4)];
        let hull1 = convex_hull_2d(&pts).unwrap();
        let perm = [3usize, 0, 5, 2, 4, 1];
        let pts2: Vec<_> = perm.iter().map(|&i| pts[i].clone()).collect();
        let hull2 = convex_hull_2d(&pts2).unwrap();
        // Map hull2 indices back through the permutation and compare cyclically.
        let mapped: Vec<usize> = hull2.iter().map(|&i| perm[i]).collect();
        assert_eq!(hull1.len(), mapped.len());
        let start = mapped.iter().position(|&v| v == hull1[0]).unwrap();
        let rotated: Vec<usize> = (0..mapped.len())
            .map(|k| mapped[(start + k) % mapped.len()])
            .collect();
        assert_eq!(hull1, rotated);
    }
}
