//! Linear embeddings: a simple graph with exact rational coordinates per
//! vertex, general-position validation, perturbation and text IO.

use crate::graph::SimpleGraph;
use crate::predicates::orient3d;
use crate::scalar::{fmt_rat, parse_rat, sign_of, Rat};
use crate::vec::{Point3, Vector3};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EmbeddingError {
    #[error("line {0}: {1}")]
    Parse(usize, String),
    #[error("vertex ids must be contiguous 1..=n; missing {0}")]
    MissingVertex(usize),
    #[error("duplicate vertex id {0}")]
    DuplicateVertex(usize),
    #[error("perturbation gave up after {0} attempts")]
    GiveUp(usize),
}

/// A straight-line embedding of a simple graph in 3-space.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearEmbedding {
    graph: SimpleGraph,
    coords: Vec<Point3>, // indexed by vertex id - 1
}

/// One general-position violation found by the validator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Three vertices on a common line.
    CollinearTriple(usize, usize, usize),
    /// A vertex in the interior of a non-incident edge.
    VertexOnEdge(usize, (usize, usize)),
    /// Two edges sharing a point other than a common endpoint.
    EdgeIntersection((usize, usize), (usize, usize)),
}

#[derive(Debug, Clone, Default)]
pub struct GeneralPositionReport {
    pub violations: Vec<Violation>,
}

impl GeneralPositionReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl std::fmt::Debug for LinearEmbedding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "LinearEmbedding({:?})", self.graph)
    }
}

impl LinearEmbedding {
    pub fn new(graph: SimpleGraph, coords: Vec<Point3>) -> Self {
        assert_eq!(graph.vertex_count(), coords.len());
        LinearEmbedding { graph, coords }
    }

    pub fn graph(&self) -> &SimpleGraph {
        &self.graph
    }

    pub fn coord(&self, v: usize) -> &Point3 {
        &self.coords[v - 1]
    }

    pub fn coords(&self) -> &[Point3] {
        &self.coords
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// The vector from `v` toward its neighbor `w` (an edge vector at `v`).
    pub fn edge_vector(&self, v: usize, w: usize) -> Point3 {
        self.coord(w).sub(self.coord(v))
    }

    /// Replace the edge set, keeping coordinates (used by moves).
    pub fn with_graph(&self, graph: SimpleGraph) -> Self {
        assert_eq!(graph.vertex_count(), self.coords.len());
        LinearEmbedding { graph, coords: self.coords.clone() }
    }

    /// Exhaustive exact check of the general-position invariants.
    pub fn validate_general_position(&self) -> GeneralPositionReport {
        let n = self.vertex_count();
        let mut violations = Vec::new();
        for a in 1..=n {
            for b in (a + 1)..=n {
                for c in (b + 1)..=n {
                    let u = self.coord(b).sub(self.coord(a));
                    let v = self.coord(c).sub(self.coord(a));
                    if u.cross(&v).is_zero() {
                        violations.push(Violation::CollinearTriple(a, b, c));
                    }
                }
            }
        }
        let edges = self.graph.edges();
        for &(a, b) in &edges {
            for v in 1..=n {
                if v != a && v != b && point_in_open_segment(self.coord(v), self.coord(a), self.coord(b)) {
                    violations.push(Violation::VertexOnEdge(v, (a, b)));
                }
            }
        }
        for i in 0..edges.len() {
            for j in (i + 1)..edges.len() {
                let (a, b) = edges[i];
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    // Adjacent edges meet only at the shared endpoint unless
                    // collinear, which the triple check already reports.
                    continue;
                }
                if closed_segments_intersect_3d(
                    self.coord(a),
                    self.coord(b),
                    self.coord(c),
                    self.coord(d),
                ) {
                    violations.push(Violation::EdgeIntersection(edges[i], edges[j]));
                }
            }
        }
        GeneralPositionReport { violations }
    }

    /// Deterministically perturb into general position. Every coordinate
    /// moves by strictly less than `bound`; with `bound = 0` a valid input
    /// is returned unchanged.
    pub fn perturb(&self, seed: u64, bound: &Rat) -> Result<LinearEmbedding, EmbeddingError> {
        const MAX_RETRIES: usize = 64;
        if self.validate_general_position().is_ok() && bound.is_zero() {
            return Ok(self.clone());
        }
        if bound.is_zero() || bound.is_negative() {
            return Err(EmbeddingError::GiveUp(0));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let denom = BigInt::from(1u32 << 16);
        for _ in 0..MAX_RETRIES {
            let coords: Vec<Point3> = self
                .coords
                .iter()
                .map(|p| {
                    let mut jig = |c: &Rat| {
                        let k: i64 = rng.gen_range(-(65535i64)..=65535);
                        c.clone() + bound.clone() * Rat::new(BigInt::from(k), denom.clone())
                    };
                    Vector3::new(jig(&p.x), jig(&p.y), jig(&p.z))
                })
                .collect();
            let cand = LinearEmbedding::new(self.graph.clone(), coords);
            if cand.validate_general_position().is_ok() {
                return Ok(cand);
            }
        }
        Err(EmbeddingError::GiveUp(MAX_RETRIES))
    }

    /// Parse the embedding text format: `v <id> <x> <y> <z>` and
    /// `e <u> <w>` lines, `#` comments.
    pub fn parse(text: &str) -> Result<LinearEmbedding, EmbeddingError> {
        let mut verts: Vec<(usize, Point3)> = Vec::new();
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let mut toks = line.split_whitespace();
            let kind = toks.next().unwrap();
            let parse_id = |t: Option<&str>| -> Result<usize, EmbeddingError> {
                t.and_then(|s| s.parse().ok())
                    .ok_or_else(|| EmbeddingError::Parse(ln + 1, format!("bad id in {:?}", raw)))
            };
            match kind {
                "v" => {
                    let id = parse_id(toks.next())?;
                    let coord = |t: Option<&str>| -> Result<Rat, EmbeddingError> {
                        let s = t.ok_or_else(|| {
                            EmbeddingError::Parse(ln + 1, "missing coordinate".into())
                        })?;
                        parse_rat(s).map_err(|e| EmbeddingError::Parse(ln + 1, e.to_string()))
                    };
                    let p = Vector3::new(coord(toks.next())?, coord(toks.next())?, coord(toks.next())?);
                    if toks.next().is_some() {
                        return Err(EmbeddingError::Parse(ln + 1, "trailing tokens".into()));
                    }
                    verts.push((id, p));
                }
                "e" => {
                    let u = parse_id(toks.next())?;
                    let w = parse_id(toks.next())?;
                    if toks.next().is_some() {
                        return Err(EmbeddingError::Parse(ln + 1, "trailing tokens".into()));
                    }
                    edges.push((u, w));
                }
                other => {
                    return Err(EmbeddingError::Parse(ln + 1, format!("unknown record {:?}", other)))
                }
            }
        }
        let n = verts.len();
        let mut coords: Vec<Option<Point3>> = vec![None; n];
        for (id, p) in verts {
            if id == 0 || id > n {
                return Err(EmbeddingError::MissingVertex(id.min(n + 1)));
            }
            if coords[id - 1].is_some() {
                return Err(EmbeddingError::DuplicateVertex(id));
            }
            coords[id - 1] = Some(p);
        }
        let coords: Vec<Point3> = coords
            .into_iter()
            .enumerate()
            .map(|(i, c)| c.ok_or(EmbeddingError::MissingVertex(i + 1)))
            .collect::<Result<_, _>>()?;
        let mut graph = SimpleGraph::new(n);
        for (u, w) in edges {
            if u == 0 || u > n || w == 0 || w > n {
                return Err(EmbeddingError::Parse(0, format!("edge ({u},{w}) out of range")));
            }
            graph.add_edge(u, w);
        }
        Ok(LinearEmbedding::new(graph, coords))
    }

    /// Canonical writer: vertices in id order, edges sorted.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for v in 1..=self.vertex_count() {
            let p = self.coord(v);
            s.push_str(&format!(
                "v {} {} {} {}\n",
                v,
                fmt_rat(&p.x),
                fmt_rat(&p.y),
                fmt_rat(&p.z)
            ));
        }
        for (u, w) in self.graph.edges() {
            s.push_str(&format!("e {} {}\n", u, w));
        }
        s
    }
}

/// Strict interior membership of `p` on segment `[a, b]`.
fn point_in_open_segment(p: &Point3, a: &Point3, b: &Point3) -> bool {
    let u = b.sub(a);
    let w = p.sub(a);
    if !u.cross(&w).is_zero() {
        return false;
    }
    let t_num = w.dot(&u);
    let t_den = u.dot(&u);
    t_num.is_positive() && t_num < t_den
}

/// Do two closed 3D segments share any point? Used only for non-adjacent
/// edge pairs, where any shared point is a violation.
fn closed_segments_intersect_3d(a: &Point3, b: &Point3, c: &Point3, d: &Point3) -> bool {
    if orient3d(a, b, c, d) != 0 {
        return false;
    }
    let r = b.sub(a);
    let q = d.sub(c);
    let w = c.sub(a);
    let n = r.cross(&q);
    if n.is_zero() {
        // Parallel. Collinear only if c is on the line of (a, b).
        if !r.cross(&w).is_zero() {
            return false;
        }
        let len = r.dot(&r);
        let mut t0 = w.dot(&r);
        let mut t1 = d.sub(a).dot(&r);
        if t0 > t1 {
            std::mem::swap(&mut t0, &mut t1);
        }
        return t1 >= Rat::zero() && t0 <= len;
    }
    // Coplanar, non-parallel lines: exact parametric intersection.
    let den = n.dot(&n);
    let t_num = w.cross(&q).dot(&n);
    let s_num = w.cross(&r).dot(&n);
    let t_in = !t_num.is_negative() && t_num <= den;
    let s_in = !s_num.is_negative() && s_num <= den;
    t_in && s_in
}

/// Seeded random embedding with integer coordinates; retries until the
/// general-position validator passes.
pub fn random_embedding(graph: &SimpleGraph, seed: u64) -> LinearEmbedding {
    let n = graph.vertex_count();
    let range = 8 * (n as i64).max(2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let coords: Vec<Point3> = (0..n)
            .map(|_| {
                Vector3::new(
                    Rat::from(BigInt::from(rng.gen_range(-range..=range))),
                    Rat::from(BigInt::from(rng.gen_range(-range..=range))),
                    Rat::from(BigInt::from(rng.gen_range(-range..=range))),
                )
            })
            .collect();
        let e = LinearEmbedding::new(graph.clone(), coords);
        if e.validate_general_position().is_ok() {
            return e;
        }
    }
    panic!("random_embedding failed to reach general position (degenerate graph scale)");
}

/// The regular tetrahedron-like placement used in examples and fixtures.
pub fn tetrahedron_k4() -> LinearEmbedding {
    use crate::vec::p3;
    LinearEmbedding::new(
        SimpleGraph::complete(4),
        vec![p3(0, 0, 0), p3(3, 0, 0), p3(0, 3, 0), p3(0, 0, 3)],
    )
}

/// Sign of `l . (w - v)` for an edge vector; callers use it to reason about
/// descendants without building intermediate vectors.
pub fn edge_sign(e: &LinearEmbedding, l: &Point3, v: usize, w: usize) -> i8 {
    sign_of(&l.dot(&e.edge_vector(v, w)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{rat, rat_int};
    use crate::vec::p3;

    #[test]
    fn tetrahedron_is_valid() {
        assert!(tetrahedron_k4().validate_general_position().is_ok());
    }

    #[test]
    fn collinear_triple_detected() {
        let g = SimpleGraph::with_edges(3, &[(1, 2), (2, 3)]);
        let e = LinearEmbedding::new(g, vec![p3(0, 0, 0), p3(1, 1, 1), p3(2, 2, 2)]);
        let report = e.validate_general_position();
        assert!(report
            .violations
            .contains(&Violation::CollinearTriple(1, 2, 3)));
    }

    #[test]
    fn edge_crossing_detected() {
        // Two disjoint edges crossing at (1,1,0).
        let g = SimpleGraph::with_edges(4, &[(1, 2), (3, 4)]);
        let e = LinearEmbedding::new(
            g,
            vec![p3(0, 0, 0), p3(2, 2, 0), p3(0, 2, 0), p3(2, 0, 0)],
        );
        let report = e.validate_general_position();
        assert!(report
            .violations
            .contains(&Violation::EdgeIntersection((1, 2), (3, 4))));
    }

    #[test]
    fn vertex_on_edge_detected() {
        let g = SimpleGraph::with_edges(3, &[(1, 2)]);
        let e = LinearEmbedding::new(g, vec![p3(0, 0, 0), p3(2, 0, 0), p3(1, 0, 0)]);
        let report = e.validate_general_position();
        assert!(report
            .violations
            .contains(&Violation::VertexOnEdge(3, (1, 2))));
    }

    #[test]
    fn skew_edges_ok() {
        let g = SimpleGraph::with_edges(4, &[(1, 2), (3, 4)]);
        let e = LinearEmbedding::new(
            g,
            vec![p3(0, 0, 0), p3(2, 2, 0), p3(0, 2, 1), p3(2, 0, 1)],
        );
        assert!(e.validate_general_position().is_ok());
    }

    #[test]
    fn perturb_fixes_collinear_triple() {
        let g = SimpleGraph::with_edges(3, &[(1, 2), (2, 3)]);
        let e = LinearEmbedding::new(g, vec![p3(0, 0, 0), p3(1, 1, 1), p3(2, 2, 2)]);
        let bound = rat(1, 100);
        let fixed = e.perturb(1, &bound).unwrap();
        assert!(fixed.validate_general_position().is_ok());
        for v in 1..=3 {
            let d = fixed.coord(v).sub(e.coord(v));
            for c in [&d.x, &d.y, &d.z] {
                assert!(c.abs() < bound);
            }
        }
        // Determinism.
        let again = e.perturb(1, &bound).unwrap();
        assert_eq!(fixed, again);
        // A different seed gives a different (still valid) answer.
        let other = e.perturb(2, &bound).unwrap();
        assert!(other.validate_general_position().is_ok());
    }

    #[test]
    fn perturb_identity_on_valid_zero_bound() {
        let e = tetrahedron_k4();
        let out = e.perturb(7, &rat_int(0)).unwrap();
        assert_eq!(out, e);
    }

    #[test]
    fn text_roundtrip() {
        let e = tetrahedron_k4();
        let text = e.to_text();
        let back = LinearEmbedding::parse(&text).unwrap();
        assert_eq!(back, e);
        assert_eq!(back.to_text(), text);
    }

    #[test]
    fn parse_with_comments_and_fractions() {
        let text = "# a segment\nv 1 0 0 1/2\nv 2 3 -2/3 0 # endpoint\ne 1 2\n";
        let e = LinearEmbedding::parse(text).unwrap();
        assert_eq!(e.vertex_count(), 2);
        assert_eq!(e.coord(1).z, rat(1, 2));
        assert_eq!(e.coord(2).y, rat(-2, 3));
        assert!(e.graph().has_edge(1, 2));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            LinearEmbedding::parse("v 1 0 0 0\nv 1 1 1 1\n"),
            Err(EmbeddingError::DuplicateVertex(1))
        ));
        assert!(matches!(
            LinearEmbedding::parse("v 2 0 0 0\n"),
            Err(EmbeddingError::MissingVertex(_))
        ));
        assert!(LinearEmbedding::parse("q 1\n").is_err());
        assert!(LinearEmbedding::parse("v 1 0 0 1/0\n").is_err());
    }

    #[test]
    fn random_embeddings_are_valid_and_deterministic() {
        let g = SimpleGraph::complete(5);
        let a = random_embedding(&g, 42);
        let b = random_embedding(&g, 42);
        assert_eq!(a, b);
        assert!(a.validate_general_position().is_ok());
    }
}
