//! Generic planar projection of a linear embedding.
//!
//! The projection is the linear map `q -> (l.q, m.q)` rather than a rigid
//! rotation: it keeps all arithmetic rational while preserving the two
//! facts the diagram construction needs, the order of vertices along the
//! direction `l` and a consistent height along the kernel direction for
//! over/under decisions.

use crate::embedding::LinearEmbedding;
use crate::predicates::{orient2d, segment_crossing_2d, sign_dot, GeometryError};
use crate::scalar::{sign_of, Rat};
use crate::vec::{Point2, Point3, Vector2, Vector3};
use num_bigint::BigInt;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProjectError {
    #[error("direction is orthogonal to an edge vector: not generic")]
    NotGeneric,
    #[error("no regular frame found after {0} attempts")]
    FrameSearchExhausted(usize),
    #[error("projected edges overlap degenerately for this frame")]
    Irregular,
    #[error("equal heights over a crossing: the embedding self-intersects")]
    InvalidEmbedding,
}

/// Projection frame: abscissa covector `l`, ordinate covector `m` and the
/// kernel direction `n = l x m`, so `det[l, m, n] = |n|^2 > 0`.
///
/// The planar image of a point `q` is `(l.q, m.q)`; two points share an
/// image iff they differ along `n`, and the one with the larger `n`-height
/// passes over.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectionFrame {
    pub l: Point3,
    pub m: Point3,
    pub n: Point3,
}

impl ProjectionFrame {
    /// Build a frame from covectors `l` and `m`; `n` is their cross
    /// product. Returns `None` when `l` and `m` are parallel.
    pub fn from_covectors(l: Point3, m: Point3) -> Option<ProjectionFrame> {
        let n = l.cross(&m);
        if n.is_zero() {
            return None;
        }
        Some(ProjectionFrame { l, m, n })
    }

    pub fn project(&self, q: &Point3) -> Point2 {
        Vector2::new(self.l.dot(q), self.m.dot(q))
    }

    pub fn height(&self, q: &Point3) -> Rat {
        self.n.dot(q)
    }
}

/// Which of the two edges of a crossing passes over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OverSide {
    First,
    Second,
}

/// A transversal double point of the projected graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SceneCrossing {
    /// Indices into the scene's edge list, `e1 < e2`.
    pub e1: usize,
    pub e2: usize,
    /// Parameters along the stored orientation (smaller endpoint first).
    pub t1: Rat,
    pub t2: Rat,
    pub point: Point2,
    pub h1: Rat,
    pub h2: Rat,
    pub over: OverSide,
}

/// A regular projection: planar vertex images and all crossing data.
#[derive(Debug, Clone)]
pub struct PlanarScene {
    pub frame: ProjectionFrame,
    pub positions: Vec<Point2>, // indexed by vertex id - 1
    pub edges: Vec<(usize, usize)>,
    pub crossings: Vec<SceneCrossing>,
}

impl PlanarScene {
    pub fn position(&self, v: usize) -> &Point2 {
        &self.positions[v - 1]
    }

    /// Strict distinctness of the abscissas of all vertices and crossings,
    /// required before a diagram can be built.
    pub fn strict_x_order(&self) -> bool {
        let mut xs: Vec<&Rat> = self.positions.iter().map(|p| &p.x).collect();
        for c in &self.crossings {
            xs.push(&c.point.x);
        }
        xs.sort();
        xs.windows(2).all(|w| w[0] != w[1])
    }
}

/// Project along an explicit frame, computing every crossing exactly.
///
/// Checks regularity (transversal double points only, no triple points, no
/// three collinear projected vertices) but not the strict abscissa order;
/// [`project`] performs the frame search that guarantees both.
pub fn build_scene(e: &LinearEmbedding, frame: &ProjectionFrame) -> Result<PlanarScene, ProjectError> {
    let n = e.vertex_count();
    let positions: Vec<Point2> = (1..=n).map(|v| frame.project(e.coord(v))).collect();
    for i in 0..n {
        for j in (i + 1)..n {
            if positions[i] == positions[j] {
                return Err(ProjectError::Irregular);
            }
        }
    }
    for a in 0..n {
        for b in (a + 1)..n {
            for c in (b + 1)..n {
                if orient2d(&positions[a], &positions[b], &positions[c]) == 0 {
                    return Err(ProjectError::Irregular);
                }
            }
        }
    }
    let edges = e.graph().edges();
    let mut crossings = Vec::new();
    for i in 0..edges.len() {
        for j in (i + 1)..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            let s1 = (&positions[a - 1], &positions[b - 1]);
            let s2 = (&positions[c - 1], &positions[d - 1]);
            match segment_crossing_2d(s1, s2) {
                Err(GeometryError::DegenerateOverlap) => return Err(ProjectError::Irregular),
                Err(_) => unreachable!("segment endpoints are distinct"),
                Ok(None) => {}
                Ok(Some((t1, t2))) => {
                    if a == c || a == d || b == c || b == d {
                        // Shared-endpoint edges cannot cross transversally
                        // in their interiors unless the projection is
                        // degenerate; the overlap error covers that.
                        return Err(ProjectError::Irregular);
                    }
                    let point = Vector2::new(
                        s1.0.x.clone() + (s1.1.x.clone() - s1.0.x.clone()) * t1.clone(),
                        s1.0.y.clone() + (s1.1.y.clone() - s1.0.y.clone()) * t1.clone(),
                    );
                    let p3a = e.coord(a);
                    let p3b = e.coord(b);
                    let p3c = e.coord(c);
                    let p3d = e.coord(d);
                    let h1 = frame.height(&p3a.add(&p3b.sub(p3a).scale(&t1)));
                    let h2 = frame.height(&p3c.add(&p3d.sub(p3c).scale(&t2)));
                    let over = match sign_of(&(h1.clone() - h2.clone())) {
                        1 => OverSide::First,
                        -1 => OverSide::Second,
                        _ => return Err(ProjectError::InvalidEmbedding),
                    };
                    crossings.push(SceneCrossing { e1: i, e2: j, t1, t2, point, h1, h2, over });
                }
            }
        }
    }
    // No triple points: all crossing points pairwise distinct.
    for i in 0..crossings.len() {
        for j in (i + 1)..crossings.len() {
            if crossings[i].point == crossings[j].point {
                return Err(ProjectError::Irregular);
            }
        }
    }
    Ok(PlanarScene { frame: frame.clone(), positions, edges, crossings })
}

/// Is `l` generic for the embedding (orthogonal to no edge vector)?
pub fn is_generic(e: &LinearEmbedding, l: &Point3) -> bool {
    e.graph()
        .edges()
        .iter()
        .all(|&(u, w)| sign_dot(l, &e.edge_vector(u, w)) != 0)
}

/// Project along the direction `l`, searching deterministically (from
/// `seed`) for an ordinate covector that makes the scene regular with
/// strictly ordered abscissas.
///
/// When two vertices tie along `l`, the abscissa covector is sheared to
/// `l + eta * m` with `eta` halved until every edge-vector sign matches
/// `l`'s — the effective covector stays inside the same cell of directions,
/// so descendant statuses in 3-space and in the plane agree exactly.
pub fn project(
    e: &LinearEmbedding,
    l: &Point3,
    seed: u64,
) -> Result<(ProjectionFrame, PlanarScene), ProjectError> {
    const MAX_ATTEMPTS: usize = 256;
    if !is_generic(e, l) {
        return Err(ProjectError::NotGeneric);
    }
    let n = e.vertex_count();
    let has_ties = {
        let xs: Vec<Rat> = (1..=n).map(|v| l.dot(e.coord(v))).collect();
        let mut sorted = xs.clone();
        sorted.sort();
        sorted.windows(2).any(|w| w[0] == w[1])
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 0..MAX_ATTEMPTS {
        let range = 4i64 + (attempt as i64 / 16) * 4;
        let m = Vector3::new(
            Rat::from(BigInt::from(rng.gen_range(-range..=range))),
            Rat::from(BigInt::from(rng.gen_range(-range..=range))),
            Rat::from(BigInt::from(rng.gen_range(-range..=range))),
        );
        if l.cross(&m).is_zero() {
            continue;
        }
        let l_eff = if has_ties {
            match shear_until_separated(e, l, &m) {
                Some(le) => le,
                None => continue,
            }
        } else {
            l.clone()
        };
        let frame = match ProjectionFrame::from_covectors(l_eff, m) {
            Some(f) => f,
            None => continue,
        };
        match build_scene(e, &frame) {
            Ok(scene) => {
                if scene.strict_x_order() {
                    debug_assert!(descendants_match(e, l, &frame));
                    return Ok((frame, scene));
                }
            }
            Err(ProjectError::Irregular) => {}
            Err(other) => return Err(other),
        }
    }
    Err(ProjectError::FrameSearchExhausted(MAX_ATTEMPTS))
}

/// Find `l + eta * m` preserving all edge-vector signs of `l` while
/// separating all vertex abscissas.
fn shear_until_separated(e: &LinearEmbedding, l: &Point3, m: &Point3) -> Option<Point3> {
    let edges = e.graph().edges();
    let n = e.vertex_count();
    let mut eta = Rat::one();
    for _ in 0..128 {
        let cand = l.add(&m.scale(&eta));
        let signs_ok = edges
            .iter()
            .all(|&(u, w)| sign_dot(&cand, &e.edge_vector(u, w)) == sign_dot(l, &e.edge_vector(u, w)));
        if signs_ok {
            let mut xs: Vec<Rat> = (1..=n).map(|v| cand.dot(e.coord(v))).collect();
            xs.sort();
            if xs.windows(2).all(|w| w[0] != w[1]) {
                return Some(cand);
            }
        }
        eta = eta / Rat::from(BigInt::from(2));
    }
    None
}

fn descendants_match(e: &LinearEmbedding, l: &Point3, frame: &ProjectionFrame) -> bool {
    (1..=e.vertex_count()).all(|v| {
        let by_l = e
            .graph()
            .neighbors(v)
            .any(|w| sign_dot(l, &e.edge_vector(v, w)) < 0);
        let by_plane = e
            .graph()
            .neighbors(v)
            .any(|w| sign_dot(&frame.l, &e.edge_vector(v, w)) < 0);
        by_l == by_plane
    })
}
