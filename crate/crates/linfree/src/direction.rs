//! Descending directions: descendant sets, the certificate type, the
//! complete cell search for a descending direction, and the
//! three-inequality solver.
//!
//! A vertex is a descendant along a generic direction `l` when one of its
//! edge vectors has negative inner product with `l`; `l` is descending
//! when every vertex except exactly one is a descendant. The descendant
//! pattern of `l` depends only on the signs of `l` against the distinct
//! edge-vector lines, so scanning one representative direction per
//! full-dimensional cell of the central-plane arrangement decides
//! existence.

use crate::embedding::LinearEmbedding;
use crate::predicates::sign_dot;
use crate::scalar::Rat;
use crate::vec::{IVec3, Point3, Vector3};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DirectionError {
    #[error("direction is orthogonal to an edge vector: not generic")]
    NotGeneric,
    #[error("the three vectors are linearly dependent")]
    DependentVectors,
}

/// Witnessed proof that a direction is descending: every vertex except one
/// carries an edge with strictly negative inner product against `l`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionCertificate {
    pub l: Point3,
    pub non_descendant: usize,
    /// Map from descendant vertex to the witnessing neighbor.
    pub witnesses: BTreeMap<usize, usize>,
}

impl DirectionCertificate {
    /// Replay the witnesses: checks genericity, each witness sign, and
    /// that exactly the recorded vertex is left without one.
    pub fn verify(&self, e: &LinearEmbedding) -> bool {
        if !crate::project::is_generic(e, &self.l) {
            return false;
        }
        let n = e.vertex_count();
        for v in 1..=n {
            if v == self.non_descendant {
                let has_neg = e
                    .graph()
                    .neighbors(v)
                    .any(|w| sign_dot(&self.l, &e.edge_vector(v, w)) < 0);
                if has_neg || self.witnesses.contains_key(&v) {
                    return false;
                }
            } else {
                match self.witnesses.get(&v) {
                    Some(&w) => {
                        if !e.graph().has_edge(v, w)
                            || sign_dot(&self.l, &e.edge_vector(v, w)) >= 0
                        {
                            return false;
                        }
                    }
                    None => return false,
                }
            }
        }
        true
    }
}

/// Vertices having an edge vector with negative inner product against `l`.
pub fn descendant_set(e: &LinearEmbedding, l: &Point3) -> Result<BTreeSet<usize>, DirectionError> {
    if !crate::project::is_generic(e, l) {
        return Err(DirectionError::NotGeneric);
    }
    Ok((1..=e.vertex_count())
        .filter(|&v| {
            e.graph()
                .neighbors(v)
                .any(|w| sign_dot(l, &e.edge_vector(v, w)) < 0)
        })
        .collect())
}

/// Decide whether `l` is descending; on success return the certificate.
///
/// At least one non-descendant always exists (the vertex minimizing `l.q`
/// has every neighbor strictly above it); this is asserted.
pub fn is_descending(
    e: &LinearEmbedding,
    l: &Point3,
) -> Result<Option<DirectionCertificate>, DirectionError> {
    let descendants = descendant_set(e, l)?;
    let n = e.vertex_count();
    let non: Vec<usize> = (1..=n).filter(|v| !descendants.contains(v)).collect();
    if n > 0 {
        let min_vertex = (1..=n)
            .min_by(|&a, &b| l.dot(e.coord(a)).cmp(&l.dot(e.coord(b))))
            .unwrap();
        assert!(
            non.contains(&min_vertex),
            "the lowest vertex along l must be a non-descendant"
        );
    }
    if non.len() != 1 {
        return Ok(None);
    }
    let mut witnesses = BTreeMap::new();
    for &v in &descendants {
        let w = e
            .graph()
            .neighbors(v)
            .find(|&w| sign_dot(l, &e.edge_vector(v, w)) < 0)
            .expect("descendant has a negative edge");
        witnesses.insert(v, w);
    }
    Ok(Some(DirectionCertificate { l: l.clone(), non_descendant: non[0], witnesses }))
}

/// Distinct edge-vector lines as primitive integer vectors with a
/// normalized sign, sorted.
fn primitive_lines(e: &LinearEmbedding) -> Vec<IVec3> {
    let mut set: BTreeSet<(BigInt, BigInt, BigInt)> = BTreeSet::new();
    for (u, w) in e.graph().edges() {
        let v = e.edge_vector(u, w);
        let lcm = v
            .x
            .denom()
            .lcm(v.y.denom())
            .lcm(v.z.denom());
        let mut ix = v.x.numer() * (&lcm / v.x.denom());
        let mut iy = v.y.numer() * (&lcm / v.y.denom());
        let mut iz = v.z.numer() * (&lcm / v.z.denom());
        let g = ix.gcd(&iy).gcd(&iz);
        if !g.is_zero() {
            ix /= &g;
            iy /= &g;
            iz /= &g;
        }
        let flip = match (ix.sign(), iy.sign(), iz.sign()) {
            (num_bigint::Sign::Minus, _, _) => true,
            (num_bigint::Sign::NoSign, num_bigint::Sign::Minus, _) => true,
            (num_bigint::Sign::NoSign, num_bigint::Sign::NoSign, num_bigint::Sign::Minus) => true,
            _ => false,
        };
        if flip {
            ix = -ix;
            iy = -iy;
            iz = -iz;
        }
        set.insert((ix, iy, iz));
    }
    set.into_iter()
        .map(|(x, y, z)| Vector3::new(x, y, z))
        .collect()
}

fn isign(v: &BigInt) -> i8 {
    match v.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

/// One representative direction per full-dimensional cell of the
/// arrangement of planes orthogonal to the edge-vector lines, in a fixed
/// deterministic order, deduplicated by sign vector.
///
/// For every unordered pair of non-parallel lines (u, v) the scheme takes
/// the arrangement vertex p = u x v and perturbs it along the in-plane
/// dual basis A = (v.v)u - (u.v)v, B = (u.u)v - (u.v)u, which satisfies
/// A.u = B.v = det > 0 and A.v = B.u = 0. The candidate
/// D(2^k p + s1 A + s2 B) therefore realizes the sign pattern (D s1, D s2)
/// on (u, v) exactly, and k is raised until all other line signs match p's;
/// every cell bounded at p by consecutive circles receives its exact sign
/// vector this way. (Perturbing along u and v themselves can miss patterns
/// when |u.v| exceeds |u|^2 or |v|^2.)
pub fn candidate_directions(e: &LinearEmbedding) -> Vec<Point3> {
    let lines = primitive_lines(e);
    let mut out: Vec<IVec3> = Vec::new();
    match lines.len() {
        0 => out.push(IVec3::from_i64(1, 0, 0)),
        1 => {
            out.push(lines[0].clone());
            out.push(lines[0].neg());
        }
        _ => {
            for i in 0..lines.len() {
                for j in (i + 1)..lines.len() {
                    let u = &lines[i];
                    let v = &lines[j];
                    let p = u.cross(v);
                    if p.is_zero() {
                        continue; // parallel lines share a plane
                    }
                    let uu = u.dot(u);
                    let vv = v.dot(v);
                    let uv = u.dot(v);
                    let a = u.scale(&vv).sub(&v.scale(&uv));
                    let b = v.scale(&uu).sub(&u.scale(&uv));
                    for d in [1i64, -1] {
                        for s1 in [1i64, -1] {
                            for s2 in [1i64, -1] {
                                if let Some(cand) =
                                    perturbed_candidate(&lines, &p, &a, &b, d, s1, s2)
                                {
                                    out.push(cand);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    // Deduplicate by the full sign vector against the lines, keeping the
    // first representative of each cell.
    let mut seen: BTreeSet<Vec<i8>> = BTreeSet::new();
    let mut result = Vec::new();
    for cand in out {
        let sig: Vec<i8> = lines.iter().map(|w| isign(&cand.dot(w))).collect();
        if sig.iter().any(|&s| s == 0) {
            continue; // not generic; cannot happen for constructed candidates
        }
        if seen.insert(sig) {
            result.push(cand.to_rat());
        }
    }
    result
}

fn perturbed_candidate(
    lines: &[IVec3],
    p: &IVec3,
    a: &IVec3,
    b: &IVec3,
    d: i64,
    s1: i64,
    s2: i64,
) -> Option<IVec3> {
    let shift = a.scale(&BigInt::from(s1)).add(&b.scale(&BigInt::from(s2)));
    // A zero that scaling cannot fix: the ray lies inside another line's
    // plane through p. Such candidates are never needed for the cells this
    // pair bounds consecutively; skip them.
    for w in lines {
        if p.dot(w).is_zero() && shift.dot(w).is_zero() {
            return None;
        }
    }
    let mut scale = BigInt::from(1);
    for _ in 0..=64 {
        let cand = p.scale(&scale).add(&shift).scale(&BigInt::from(d));
        let ok = lines.iter().all(|w| {
            let pw = p.dot(w);
            let cw = cand.dot(w);
            if pw.is_zero() {
                !cw.is_zero()
            } else {
                isign(&cw) == d as i8 * isign(&pw)
            }
        });
        if ok {
            return Some(cand);
        }
        scale *= 2;
    }
    None
}

/// Complete search for a descending direction: tests one representative of
/// every arrangement cell and returns the first certificate found.
/// Returns `None` only after all cells fail.
pub fn find_descending_direction(e: &LinearEmbedding) -> Option<DirectionCertificate> {
    descending_certificates(e).next()
}

/// All certificates the cell scan produces, in deterministic order.
/// Callers that need a projection-compatible direction can fall back to
/// later cells.
pub fn descending_certificates(
    e: &LinearEmbedding,
) -> impl Iterator<Item = DirectionCertificate> + '_ {
    candidate_directions(e)
        .into_iter()
        .filter_map(move |l| is_descending(e, &l).ok().flatten())
}

/// A vector with inner product exactly -1 against each of three linearly
/// independent vectors (hence strictly negative against all three).
pub fn solve_three_inequalities(
    u1: &Point3,
    u2: &Point3,
    u3: &Point3,
) -> Result<Point3, DirectionError> {
    let det = u1.dot(&u2.cross(u3));
    if det.is_zero() {
        return Err(DirectionError::DependentVectors);
    }
    let sum = u2.cross(u3).add(&u3.cross(u1)).add(&u1.cross(u2));
    let inv = Rat::from(BigInt::from(-1)) / det;
    Ok(sum.scale(&inv))
}
