//! Planar diagrams: the projected graph with crossings promoted to
//! 4-valent vertices, over/under data, and arcs.
//!
//! Diagram vertices are ordered by strictly increasing abscissa. Arcs are
//! maximal strand runs broken at graph vertices and at undercrossings but
//! continuing through overcrossings; each arc carries one Wirtinger
//! generator and one tricoloring unknown.
//!
//! Diagrams come from two sources: projections of linear embeddings
//! ([`build_diagram`]) and transcriptions in a text format
//! ([`diagram_from_spec`]), which permits loops and multiple edges.
//!
//! # Diagram spec text grammar
//!
//! ```text
//! v <id> <x> <y>            graph vertex at (x, y)
//! x <id> <x> <y>            crossing at (x, y)
//! s <u> <w> : <item> ...    strand from vertex u to vertex w
//! ```
//!
//! Items, in traversal order: `<cid>/o` (pass over crossing `cid`),
//! `<cid>/u` (pass under), `@<x>,<y>` (polyline waypoint). Coordinates are
//! rational literals. `#` starts a comment. Every crossing must be passed
//! exactly twice, once over and once under; all vertex and crossing
//! abscissas must be pairwise distinct.

use crate::project::{OverSide, PlanarScene};
use crate::scalar::{fmt_rat, parse_rat, sign_of, Rat};
use crate::vec::{Point2, Vector2};
use std::collections::BTreeMap;
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("scene violates diagram regularity: {0}")]
    RegularityViolated(String),
    #[error("malformed diagram spec: {0}")]
    MalformedSpec(String),
    #[error("diagram invariant violated: {0}")]
    InvariantViolated(String),
    #[error("no strand joins the given vertices")]
    MissingEdge,
    #[error("the strand passes through a crossing and cannot be contracted")]
    EdgeHasCrossings,
    #[error("cannot contract a loop strand")]
    CannotContractLoop,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StrandItem {
    Cross { id: usize, over: bool },
    Waypoint(Point2),
}

/// One drawn curve between two graph vertices (possibly equal), carrying
/// its crossing events and waypoints in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Strand {
    pub from: usize,
    pub to: usize,
    pub items: Vec<StrandItem>,
    /// Graph edge this strand projects, when built from a scene.
    pub origin: Option<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeKind {
    GVertex { id: usize },
    Crossing { id: usize, data: CrossingData },
}

/// Crossing incidences by traversal role; `gedge` indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingData {
    pub over_in: usize,
    pub over_out: usize,
    pub under_in: usize,
    pub under_out: usize,
    pub over_arc: usize,
    pub under_in_arc: usize,
    pub under_out_arc: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub kind: NodeKind,
    pub pos: Point2,
}

impl Node {
    pub fn is_gvertex(&self) -> bool {
        matches!(self.kind, NodeKind::GVertex { .. })
    }
}

/// An edge of the projected planar graph: a strand piece between two
/// consecutive structural nodes (graph vertices or crossings).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GEdge {
    pub strand: usize,
    pub seq: usize,
    pub from_node: usize,
    pub to_node: usize,
    /// Polyline geometry including both endpoints.
    pub path: Vec<Point2>,
    pub arc: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    /// Member gedges in traversal order along the strand.
    pub gedges: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct Diagram {
    /// Structural nodes sorted by strictly increasing abscissa.
    pub nodes: Vec<Node>,
    pub gedges: Vec<GEdge>,
    pub arcs: Vec<Arc>,
    pub strands: Vec<Strand>,
    gpos: BTreeMap<usize, Point2>,
    xpos: BTreeMap<usize, Point2>,
}

impl GEdge {
    /// Endpoint indices ordered by abscissa: (left node, right node).
    pub fn lr(&self, nodes: &[Node]) -> (usize, usize) {
        if nodes[self.from_node].pos.x < nodes[self.to_node].pos.x {
            (self.from_node, self.to_node)
        } else {
            (self.to_node, self.from_node)
        }
    }

    /// The polyline point adjacent to the given endpoint node.
    pub fn adjacent_point(&self, node: usize) -> &Point2 {
        if node == self.from_node {
            &self.path[1]
        } else {
            &self.path[self.path.len() - 2]
        }
    }
}

impl Diagram {
    pub fn vertex_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn gvertex_count(&self) -> usize {
        self.nodes.iter().filter(|n| n.is_gvertex()).count()
    }

    pub fn crossing_count(&self) -> usize {
        self.nodes.len() - self.gvertex_count()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// All gedge ends incident to a node, as (gedge index, outgoing) where
    /// outgoing means the traversal leaves the node here.
    pub fn incident_ends(&self, node: usize) -> Vec<(usize, bool)> {
        let mut ends = Vec::new();
        for (i, ge) in self.gedges.iter().enumerate() {
            if ge.from_node == node {
                ends.push((i, true));
            }
            if ge.to_node == node {
                ends.push((i, false));
            }
        }
        ends
    }

    /// Contract a crossing-free strand between distinct vertices `u` and
    /// `w`, dragging `u` onto `w`. Loops and multiple edges may appear in
    /// the result.
    pub fn contract_flat_edge(&self, u: usize, w: usize) -> Result<Diagram, DiagramError> {
        if u == w {
            return Err(DiagramError::CannotContractLoop);
        }
        let mut candidate = None;
        let mut saw_edge = false;
        for (i, s) in self.strands.iter().enumerate() {
            let joins = (s.from == u && s.to == w) || (s.from == w && s.to == u);
            if joins {
                saw_edge = true;
                if !s.items.iter().any(|it| matches!(it, StrandItem::Cross { .. })) {
                    candidate = Some(i);
                    break;
                }
            }
        }
        let Some(idx) = candidate else {
            return Err(if saw_edge {
                DiagramError::EdgeHasCrossings
            } else {
                DiagramError::MissingEdge
            });
        };
        let mut gpos = self.gpos.clone();
        gpos.remove(&u);
        let mut strands = Vec::new();
        for (i, s) in self.strands.iter().enumerate() {
            if i == idx {
                continue;
            }
            let mut s = s.clone();
            if s.from == u {
                s.from = w;
            }
            if s.to == u {
                s.to = w;
            }
            strands.push(s);
        }
        assemble(gpos, self.xpos.clone(), strands, false)
    }

    /// Serialize in the diagram spec text format.
    pub fn to_spec_text(&self) -> String {
        let mut s = String::new();
        for (id, p) in &self.gpos {
            s.push_str(&format!("v {} {} {}\n", id, fmt_rat(&p.x), fmt_rat(&p.y)));
        }
        for (id, p) in &self.xpos {
            s.push_str(&format!("x {} {} {}\n", id, fmt_rat(&p.x), fmt_rat(&p.y)));
        }
        for st in &self.strands {
            s.push_str(&format!("s {} {} :", st.from, st.to));
            for item in &st.items {
                match item {
                    StrandItem::Cross { id, over } => {
                        s.push_str(&format!(" {}/{}", id, if *over { 'o' } else { 'u' }));
                    }
                    StrandItem::Waypoint(p) => {
                        s.push_str(&format!(" @{},{}", fmt_rat(&p.x), fmt_rat(&p.y)));
                    }
                }
            }
            s.push('\n');
        }
        s
    }

    pub fn gvertex_ids(&self) -> Vec<usize> {
        self.gpos.keys().copied().collect()
    }

    pub fn node_of_gvertex(&self, id: usize) -> Option<usize> {
        self.nodes
            .iter()
            .position(|n| matches!(n.kind, NodeKind::GVertex { id: i } if i == id))
    }
}

/// Build the diagram of a regular scene with strictly ordered abscissas.
pub fn build_diagram(scene: &PlanarScene) -> Result<Diagram, DiagramError> {
    if !scene.strict_x_order() {
        return Err(DiagramError::RegularityViolated(
            "abscissas of vertices and crossings are not pairwise distinct".into(),
        ));
    }
    let mut gpos = BTreeMap::new();
    for (i, p) in scene.positions.iter().enumerate() {
        gpos.insert(i + 1, p.clone());
    }
    let mut xpos = BTreeMap::new();
    for (i, c) in scene.crossings.iter().enumerate() {
        xpos.insert(i, c.point.clone());
    }
    let mut strands = Vec::new();
    for (ei, &(u, w)) in scene.edges.iter().enumerate() {
        let pu = scene.position(u);
        let pw = scene.position(w);
        // Orient the strand in increasing abscissa.
        let (from, to) = if pu.x < pw.x { (u, w) } else { (w, u) };
        let mut events: Vec<(Rat, usize, bool)> = Vec::new();
        for (ci, c) in scene.crossings.iter().enumerate() {
            if c.e1 == ei {
                events.push((c.point.x.clone(), ci, c.over == OverSide::First));
            } else if c.e2 == ei {
                events.push((c.point.x.clone(), ci, c.over == OverSide::Second));
            }
        }
        events.sort_by(|a, b| a.0.cmp(&b.0));
        let items = events
            .into_iter()
            .map(|(_, id, over)| StrandItem::Cross { id, over })
            .collect();
        strands.push(Strand { from, to, items, origin: Some((u, w)) });
    }
    let d = assemble(gpos, xpos, strands, true)?;
    // The two leftmost diagram vertices are always graph vertices: a
    // crossing lies strictly between the abscissas of two distinct left
    // endpoints of non-adjacent edges.
    assert!(d.nodes[0].is_gvertex(), "leftmost diagram vertex must be a graph vertex");
    if d.nodes.len() > 1 && d.crossing_count() > 0 {
        assert!(d.nodes[1].is_gvertex(), "second diagram vertex must be a graph vertex");
    }
    Ok(d)
}

/// Parse and validate a transcribed diagram.
pub fn diagram_from_spec(text: &str) -> Result<Diagram, DiagramError> {
    let mut gpos: BTreeMap<usize, Point2> = BTreeMap::new();
    let mut xpos: BTreeMap<usize, Point2> = BTreeMap::new();
    let mut strands: Vec<Strand> = Vec::new();
    let bad = |ln: usize, msg: &str| DiagramError::MalformedSpec(format!("line {}: {}", ln, msg));
    for (lni, raw) in text.lines().enumerate() {
        let ln = lni + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next().unwrap() {
            kind @ ("v" | "x") => {
                let id: usize = toks
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad(ln, "bad id"))?;
                let px = parse_rat(toks.next().ok_or_else(|| bad(ln, "missing x"))?)
                    .map_err(|e| bad(ln, &e.to_string()))?;
                let py = parse_rat(toks.next().ok_or_else(|| bad(ln, "missing y"))?)
                    .map_err(|e| bad(ln, &e.to_string()))?;
                if toks.next().is_some() {
                    return Err(bad(ln, "trailing tokens"));
                }
                let map = if kind == "v" { &mut gpos } else { &mut xpos };
                if map.insert(id, Vector2::new(px, py)).is_some() {
                    return Err(bad(ln, "duplicate id"));
                }
            }
            "s" => {
                let from: usize = toks
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad(ln, "bad strand endpoint"))?;
                let to: usize = toks
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| bad(ln, "bad strand endpoint"))?;
                if toks.next() != Some(":") {
                    return Err(bad(ln, "expected ':'"));
                }
                let mut items = Vec::new();
                for t in toks {
                    if let Some(rest) = t.strip_prefix('@') {
                        let (xs, ys) = rest
                            .split_once(',')
                            .ok_or_else(|| bad(ln, "waypoint needs x,y"))?;
                        let px = parse_rat(xs).map_err(|e| bad(ln, &e.to_string()))?;
                        let py = parse_rat(ys).map_err(|e| bad(ln, &e.to_string()))?;
                        items.push(StrandItem::Waypoint(Vector2::new(px, py)));
                    } else if let Some((id, flag)) = t.split_once('/') {
                        let id: usize = id.parse().map_err(|_| bad(ln, "bad crossing id"))?;
                        let over = match flag {
                            "o" => true,
                            "u" => false,
                            _ => return Err(bad(ln, "crossing flag must be o or u")),
                        };
                        items.push(StrandItem::Cross { id, over });
                    } else {
                        return Err(bad(ln, "unrecognized strand item"));
                    }
                }
                strands.push(Strand { from, to, items, origin: None });
            }
            other => return Err(bad(ln, &format!("unknown record {:?}", other))),
        }
    }
    assemble(gpos, xpos, strands, true)
}

/// Shared constructor: validates incidences and geometry, computes
/// gedges, arcs and crossing data.
///
/// `strict_sides` additionally asserts that every crossing has exactly two
/// edges on its left; contractions skip it because rerouted strands may
/// bend back across their crossings.
fn assemble(
    gpos: BTreeMap<usize, Point2>,
    xpos: BTreeMap<usize, Point2>,
    strands: Vec<Strand>,
    strict_sides: bool,
) -> Result<Diagram, DiagramError> {
    // Crossing reference counts: exactly one over and one under pass.
    let mut passes: BTreeMap<usize, (usize, usize)> = BTreeMap::new();
    for s in &strands {
        if !gpos.contains_key(&s.from) || !gpos.contains_key(&s.to) {
            return Err(DiagramError::MalformedSpec(format!(
                "strand endpoints {}-{} missing vertex declarations",
                s.from, s.to
            )));
        }
        for item in &s.items {
            if let StrandItem::Cross { id, over } = item {
                if !xpos.contains_key(id) {
                    return Err(DiagramError::MalformedSpec(format!(
                        "crossing {} not declared",
                        id
                    )));
                }
                let e = passes.entry(*id).or_insert((0, 0));
                if *over {
                    e.0 += 1;
                } else {
                    e.1 += 1;
                }
            }
        }
    }
    for (&id, &p) in xpos.iter().map(|(k, _)| (k, passes.get(k).unwrap_or(&(0, 0)))) {
        if p != (1, 1) {
            return Err(DiagramError::InvariantViolated(format!(
                "crossing {} passed {} times over, {} under (need exactly one each)",
                id, p.0, p.1
            )));
        }
    }

    // Structural nodes sorted by abscissa.
    let mut order: Vec<(Point2, NodeKindSeed)> = Vec::new();
    for (&id, p) in &gpos {
        order.push((p.clone(), NodeKindSeed::G(id)));
    }
    for (&id, p) in &xpos {
        order.push((p.clone(), NodeKindSeed::X(id)));
    }
    order.sort_by(|a, b| a.0.x.cmp(&b.0.x).then_with(|| a.0.y.cmp(&b.0.y)));
    for w in order.windows(2) {
        if w[0].0.x == w[1].0.x {
            return Err(DiagramError::InvariantViolated(
                "vertex and crossing abscissas must be pairwise distinct".into(),
            ));
        }
    }
    let mut g_node: BTreeMap<usize, usize> = BTreeMap::new();
    let mut x_node: BTreeMap<usize, usize> = BTreeMap::new();
    let mut nodes: Vec<Node> = Vec::new();
    for (pos, seed) in order {
        match seed {
            NodeKindSeed::G(id) => {
                g_node.insert(id, nodes.len());
                nodes.push(Node { kind: NodeKind::GVertex { id }, pos });
            }
            NodeKindSeed::X(id) => {
                x_node.insert(id, nodes.len());
                // Crossing data is filled in after arcs are known.
                nodes.push(Node {
                    kind: NodeKind::Crossing {
                        id,
                        data: CrossingData {
                            over_in: usize::MAX,
                            over_out: usize::MAX,
                            under_in: usize::MAX,
                            under_out: usize::MAX,
                            over_arc: usize::MAX,
                            under_in_arc: usize::MAX,
                            under_out_arc: usize::MAX,
                        },
                    },
                    pos,
                });
            }
        }
    }

    // Gedges per strand, splitting the polyline at crossing events.
    let mut gedges: Vec<GEdge> = Vec::new();
    let mut strand_gedges: Vec<Vec<usize>> = Vec::new();
    let mut strand_breaks: Vec<Vec<bool>> = Vec::new(); // per gedge boundary: break after it?
    for (si, s) in strands.iter().enumerate() {
        let mut seg_path: Vec<Point2> = vec![gpos[&s.from].clone()];
        let mut seq = 0usize;
        let mut my_gedges = Vec::new();
        let mut breaks = Vec::new();
        let mut prev_node = g_node[&s.from];
        for item in &s.items {
            match item {
                StrandItem::Waypoint(p) => seg_path.push(p.clone()),
                StrandItem::Cross { id, over } => {
                    let cpos = xpos[id].clone();
                    seg_path.push(cpos);
                    validate_path(&seg_path)?;
                    let node = x_node[id];
                    gedges.push(GEdge {
                        strand: si,
                        seq,
                        from_node: prev_node,
                        to_node: node,
                        path: seg_path.clone(),
                        arc: usize::MAX,
                    });
                    my_gedges.push(gedges.len() - 1);
                    breaks.push(!*over); // arc breaks after this gedge iff under
                    seq += 1;
                    prev_node = node;
                    seg_path = vec![xpos[id].clone()];
                }
            }
        }
        seg_path.push(gpos[&s.to].clone());
        validate_path(&seg_path)?;
        gedges.push(GEdge {
            strand: si,
            seq,
            from_node: prev_node,
            to_node: g_node[&s.to],
            path: seg_path,
            arc: usize::MAX,
        });
        my_gedges.push(gedges.len() - 1);
        strand_gedges.push(my_gedges);
        strand_breaks.push(breaks);
    }

    // Arcs: runs of gedges along each strand, broken after under events.
    let mut arcs: Vec<Arc> = Vec::new();
    for (si, my) in strand_gedges.iter().enumerate() {
        let mut current = Vec::new();
        for (k, &ge) in my.iter().enumerate() {
            current.push(ge);
            let is_last = k + 1 == my.len();
            let break_here = is_last || strand_breaks[si][k];
            if break_here {
                let arc_id = arcs.len();
                for &g in &current {
                    gedges[g].arc = arc_id;
                }
                arcs.push(Arc { gedges: std::mem::take(&mut current) });
            }
        }
    }

    // Crossing incidences.
    for s_idx in 0..strands.len() {
        let mut event_no = 0usize;
        for item in &strands[s_idx].items {
            if let StrandItem::Cross { id, over } = item {
                let node = x_node[id];
                let ge_in = strand_gedges[s_idx][event_no];
                let ge_out = strand_gedges[s_idx][event_no + 1];
                if let NodeKind::Crossing { data, .. } = &mut nodes[node].kind {
                    if *over {
                        data.over_in = ge_in;
                        data.over_out = ge_out;
                        data.over_arc = gedges[ge_in].arc;
                        if gedges[ge_in].arc != gedges[ge_out].arc {
                            return Err(DiagramError::InvariantViolated(
                                "over strand must continue through a crossing".into(),
                            ));
                        }
                    } else {
                        data.under_in = ge_in;
                        data.under_out = ge_out;
                        data.under_in_arc = gedges[ge_in].arc;
                        data.under_out_arc = gedges[ge_out].arc;
                    }
                }
                event_no += 1;
            }
        }
    }

    let diagram = Diagram { nodes, gedges, arcs, strands, gpos, xpos };

    // Each crossing is 4-valent with transversal strands; optionally check
    // the two-left-edges invariant.
    for (ni, node) in diagram.nodes.iter().enumerate() {
        if let NodeKind::Crossing { id, data } = &node.kind {
            let ends = diagram.incident_ends(ni);
            if ends.len() != 4 {
                return Err(DiagramError::InvariantViolated(format!(
                    "crossing {} has degree {}",
                    id,
                    ends.len()
                )));
            }
            let over_dir = crossing_direction(&diagram, data.over_in, data.over_out, ni)?;
            let under_dir = crossing_direction(&diagram, data.under_in, data.under_out, ni)?;
            if over_dir.cross(&under_dir).is_zero() {
                return Err(DiagramError::InvariantViolated(format!(
                    "crossing {} is not transversal",
                    id
                )));
            }
            if strict_sides {
                let mut left = 0;
                for (ge, _) in &ends {
                    let adj = diagram.gedges[*ge].adjacent_point(ni);
                    match sign_of(&(adj.x.clone() - node.pos.x.clone())) {
                        -1 => left += 1,
                        1 => {}
                        _ => {
                            return Err(DiagramError::InvariantViolated(format!(
                                "crossing {} has an edge entering vertically",
                                id
                            )))
                        }
                    }
                }
                if left != 2 {
                    return Err(DiagramError::InvariantViolated(format!(
                        "crossing {} has {} edges on its left (need exactly 2)",
                        id, left
                    )));
                }
            }
        }
    }
    Ok(diagram)
}

/// Local traversal direction of a strand through a crossing: from the
/// point preceding the crossing to the point following it.
fn crossing_direction(
    d: &Diagram,
    ge_in: usize,
    ge_out: usize,
    node: usize,
) -> Result<Point2, DiagramError> {
    let before = d.gedges[ge_in].adjacent_point(node);
    let after = d.gedges[ge_out].adjacent_point(node);
    let dir = after.sub(before);
    if dir.x.is_zero() && dir.y.is_zero() {
        return Err(DiagramError::InvariantViolated(
            "strand doubles back exactly at a crossing".into(),
        ));
    }
    Ok(dir)
}

fn validate_path(path: &[Point2]) -> Result<(), DiagramError> {
    for w in path.windows(2) {
        if w[0] == w[1] {
            return Err(DiagramError::MalformedSpec(
                "zero-length strand segment (loops need at least one waypoint)".into(),
            ));
        }
    }
    Ok(())
}

enum NodeKindSeed {
    G(usize),
    X(usize),
}

/// Standard 3-crossing trefoil drawn as a one-vertex loop diagram
/// (closed 2-braid with three half-twists).
pub const TREFOIL_SPEC: &str = "\
# trefoil as a one-vertex loop
v 1 5/2 -2
x 1 1 1
x 2 3 1
x 3 5 1
s 1 1 : @0,0 1/u @2,2 2/o @4,0 3/u @6,2 @7,5 @-1,5 @0,2 1/o @2,0 2/u @4,2 3/o @6,0
";

#[cfg(test)]
mod tests {
    use super::*;
    use crate::embedding::{tetrahedron_k4, LinearEmbedding};
    use crate::graph::SimpleGraph;
    use crate::predicates::segment_crossing_2d;
    use crate::project::{build_scene, project, ProjectionFrame};
    use crate::vec::p3;

    fn triangle_diagram() -> Diagram {
        let g = SimpleGraph::with_edges(3, &[(1, 2), (1, 3), (2, 3)]);
        let e = LinearEmbedding::new(g, vec![p3(0, 0, 0), p3(2, 3, 1), p3(5, 1, 0)]);
        let (_, scene) = project(&e, &p3(1, 0, 0), 0).unwrap();
        build_diagram(&scene).unwrap()
    }

    #[test]
    fn triangle_counts() {
        let d = triangle_diagram();
        assert_eq!(d.gvertex_count(), 3);
        assert_eq!(d.crossing_count(), 0);
        assert_eq!(d.gedges.len(), 3);
        assert_eq!(d.arc_count(), 3);
    }

    #[test]
    fn single_crossing_counts() {
        let g = SimpleGraph::with_edges(4, &[(1, 2), (3, 4)]);
        let e = LinearEmbedding::new(
            g,
            vec![p3(0, 0, 0), p3(2, 2, 0), p3(0, 2, 1), p3(2, 0, 1)],
        );
        // Shear the abscissa covector slightly to break the ties of the
        // symmetric placement.
        let (_, scene) = project(&e, &p3(8, 1, 0), 0).unwrap();
        let d = build_diagram(&scene).unwrap();
        assert_eq!(d.gvertex_count(), 4);
        assert_eq!(d.crossing_count(), 1);
        assert_eq!(d.gedges.len(), 4);
        // Over strand is unbroken: 1 arc; under strand splits: 2 arcs.
        assert_eq!(d.arc_count(), 3);
    }

    #[test]
    fn tetrahedron_euler_bookkeeping() {
        let e = tetrahedron_k4();
        let cert = crate::direction::find_descending_direction(&e).unwrap();
        let (frame, scene) = project(&e, &cert.l, 0).unwrap();
        let d = build_diagram(&scene).unwrap();
        // Crossing-count oracle: all-pairs interior intersections.
        let edges = e.graph().edges();
        let mut c = 0;
        for i in 0..edges.len() {
            for j in (i + 1)..edges.len() {
                let (a, b) = edges[i];
                let (u, w) = edges[j];
                let pa = frame.project(e.coord(a));
                let pb = frame.project(e.coord(b));
                let pu = frame.project(e.coord(u));
                let pw = frame.project(e.coord(w));
                if segment_crossing_2d((&pa, &pb), (&pu, &pw)).unwrap().is_some() {
                    c += 1;
                }
            }
        }
        assert_eq!(d.vertex_count(), 4 + c);
        assert_eq!(d.gedges.len(), 6 + 2 * c);
        assert_eq!(d.arc_count(), 6 + c);
        // x-order is strictly increasing.
        for w in d.nodes.windows(2) {
            assert!(w[0].pos.x < w[1].pos.x);
        }
    }

    #[test]
    fn rebuild_is_identical() {
        let e = tetrahedron_k4();
        let l = p3(-2, -3, -5);
        let (_, s1) = project(&e, &l, 5).unwrap();
        let (_, s2) = project(&e, &l, 5).unwrap();
        let d1 = build_diagram(&s1).unwrap();
        let d2 = build_diagram(&s2).unwrap();
        assert_eq!(d1.nodes, d2.nodes);
        assert_eq!(d1.gedges, d2.gedges);
        assert_eq!(d1.arcs, d2.arcs);
    }

    #[test]
    fn tie_broken_scene_rejected_by_build() {
        // A frame with tied abscissas fails diagram construction.
        let g = SimpleGraph::with_edges(4, &[(1, 2), (3, 4)]);
        let e = LinearEmbedding::new(
            g,
            vec![p3(0, 0, 0), p3(2, 2, 0), p3(0, 2, 1), p3(2, 0, 1)],
        );
        let frame = ProjectionFrame::from_covectors(p3(1, 0, 0), p3(0, 1, 0)).unwrap();
        let scene = build_scene(&e, &frame).unwrap();
        assert!(matches!(
            build_diagram(&scene),
            Err(DiagramError::RegularityViolated(_))
        ));
    }

    #[test]
    fn trefoil_spec_loads() {
        let d = diagram_from_spec(TREFOIL_SPEC).unwrap();
        assert_eq!(d.gvertex_count(), 1);
        assert_eq!(d.crossing_count(), 3);
        // One loop edge with three crossings: arcs = 1 + 3.
        assert_eq!(d.arc_count(), 4);
        assert_eq!(d.gedges.len(), 7);
        // Round-trip through the text format.
        let d2 = diagram_from_spec(&d.to_spec_text()).unwrap();
        assert_eq!(d2.arc_count(), d.arc_count());
        assert_eq!(d2.nodes, d.nodes);
    }

    #[test]
    fn spec_rejects_bad_crossing_counts() {
        // Crossing passed twice over.
        let bad = "\
v 1 0 0
v 2 10 0
x 1 5 1
s 1 2 : @1,1 1/o @6,2
s 1 2 : @1,-1 1/o @6,-2
";
        assert!(matches!(
            diagram_from_spec(bad),
            Err(DiagramError::InvariantViolated(_))
        ));
        // Crossing passed only once: degree would be 2, not 4.
        let bad2 = "\
v 1 0 0
v 2 10 0
x 1 5 1
s 1 2 : @1,1 1/o @6,2
";
        assert!(matches!(
            diagram_from_spec(bad2),
            Err(DiagramError::InvariantViolated(_))
        ));
    }

    #[test]
    fn spec_rejects_tied_abscissas() {
        let bad = "\
v 1 0 0
v 2 0 5
s 1 2 : @1,1
";
        assert!(matches!(
            diagram_from_spec(bad),
            Err(DiagramError::InvariantViolated(_))
        ));
    }

    #[test]
    fn contraction_chain_triangle_to_loop() {
        let d = triangle_diagram();
        let ids = d.gvertex_ids();
        assert_eq!(ids.len(), 3);
        let bigon = d.contract_flat_edge(ids[0], ids[1]).unwrap();
        assert_eq!(bigon.gvertex_count(), 2);
        assert_eq!(bigon.strands.len(), 2);
        let (u, w) = (bigon.gvertex_ids()[0], bigon.gvertex_ids()[1]);
        let loop_d = bigon.contract_flat_edge(u, w).unwrap();
        assert_eq!(loop_d.gvertex_count(), 1);
        assert_eq!(loop_d.strands.len(), 1);
        assert_eq!(loop_d.strands[0].from, loop_d.strands[0].to);
    }

    #[test]
    fn contraction_refuses_crossed_strand() {
        let d = diagram_from_spec(TREFOIL_SPEC).unwrap();
        assert_eq!(
            d.contract_flat_edge(1, 1).unwrap_err(),
            DiagramError::CannotContractLoop
        );
        let two = "\
v 1 0 0
v 2 10 0
x 1 5 1
s 1 2 : @4,4 1/o @6,-3
s 1 2 : @4,-2 1/u @6,4
";
        let d = diagram_from_spec(two).unwrap();
        assert_eq!(
            d.contract_flat_edge(1, 2).unwrap_err(),
            DiagramError::EdgeHasCrossings
        );
    }

    #[test]
    fn missing_edge_contraction() {
        let spec = "\
v 1 0 0
v 2 1 0
v 3 2 5
s 1 2 : @1/2,1
";
        let d = diagram_from_spec(spec).unwrap();
        assert_eq!(d.contract_flat_edge(1, 3).unwrap_err(), DiagramError::MissingEdge);
    }
}
