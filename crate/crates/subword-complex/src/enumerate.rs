//! Facet enumeration.
//!
//! The workhorse is [`GreedyFlipIter`]: a depth-first walk of the greedy flip
//! tree that keeps a single facet in memory and flips it in place, so the
//! delay between two facets is at most 2m flips and the working space stays
//! linear in the word length. [`InductiveIter`] recurses on the last letter of
//! the word and serves as an independent reference, and [`flip_graph`] builds
//! the whole flip graph breadth-first as a third cross-check.

use crate::coxeter::Element;
use crate::subword::{Facet, SubwordComplex, SubwordError};
use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

/// Which greedy flip tree to walk.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Sign {
    /// Root at the positive greedy facet; descend through positive flips.
    Positive,
    /// Root at the negative greedy facet; descend through negative flips.
    Negative,
}

/// Enumeration strategy, mostly for cross-validation and the CLI.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Algorithm {
    Inductive,
    GreedyPositive,
    GreedyNegative,
    Bfs,
}

/// Default word-length cap for brute-force face enumeration.
pub const DEFAULT_FACE_CAP: usize = 16;

struct Frame {
    undo: usize,   // partner position whose flip restores the parent
    resume: usize, // scan cursor to continue with at the parent
}

/// Depth-first facet enumerator over a greedy flip tree. Yields every facet
/// exactly once, in preorder; children are explored by descending position in
/// the negative tree and ascending position in the positive one.
pub struct GreedyFlipIter<'a> {
    sc: &'a SubwordComplex,
    sign: Sign,
    facet: Option<Facet>,
    cursor: usize,
    stack: Vec<Frame>,
    at_root: bool,
    flips: u64,
    max_depth: usize,
}

impl<'a> GreedyFlipIter<'a> {
    /// Iterator over all facets. Empty when the complex has none.
    pub fn new(sc: &'a SubwordComplex, sign: Sign) -> Self {
        let facet = match sign {
            Sign::Positive => sc.positive_greedy_facet().ok(),
            Sign::Negative => sc.negative_greedy_facet().ok(),
        };
        let cursor = match sign {
            Sign::Positive => 1,
            Sign::Negative => sc.word_len(),
        };
        GreedyFlipIter {
            sc,
            sign,
            facet,
            cursor,
            stack: Vec::with_capacity(sc.word_len() + 1),
            at_root: true,
            flips: 0,
            max_depth: 0,
        }
    }

    /// Flips performed so far (descents and undos both count).
    pub fn flip_count(&self) -> u64 {
        self.flips
    }

    /// Deepest tree level reached; bounded by the word length.
    pub fn max_stack_depth(&self) -> usize {
        self.max_depth
    }
}

/// Next child candidate at or past the cursor, or None when the node is done.
fn scan_child(sc: &SubwordComplex, sign: Sign, facet: &Facet, cursor: usize) -> Option<usize> {
    let sys = sc.system();
    match sign {
        Sign::Negative => (1..=cursor)
            .rev()
            .find(|&k| facet.members[k - 1] && !sys.is_positive(facet.rootfn[k - 1])),
        Sign::Positive => (cursor..=sc.word_len()).find(|&k| {
            facet.members[k - 1] && {
                let r = facet.rootfn[k - 1];
                sys.is_positive(r) && sc.is_flippable(facet, k)
            }
        }),
    }
}

impl Iterator for GreedyFlipIter<'_> {
    type Item = Facet;

    fn next(&mut self) -> Option<Facet> {
        let facet = self.facet.as_mut()?;
        if self.at_root {
            self.at_root = false;
            return Some(facet.clone());
        }
        loop {
            if let Some(k) = scan_child(self.sc, self.sign, facet, self.cursor) {
                let partner = self.sc.flip_unchecked(facet, k);
                self.flips += 1;
                // The child's greediness index and the parent's next candidate
                // coincide: one below the flip in the negative tree, one above
                // it in the positive tree.
                self.cursor = match self.sign {
                    Sign::Negative => k - 1,
                    Sign::Positive => k + 1,
                };
                self.stack.push(Frame {
                    undo: partner,
                    resume: self.cursor,
                });
                self.max_depth = self.max_depth.max(self.stack.len());
                return Some(facet.clone());
            }
            match self.stack.pop() {
                Some(frame) => {
                    self.sc.flip_unchecked(facet, frame.undo);
                    self.flips += 1;
                    self.cursor = frame.resume;
                }
                None => {
                    self.facet = None;
                    return None;
                }
            }
        }
    }
}

/// Reference enumerator: recurse on whether the last word position is used to
/// spell the target or kept in the facet. Far slower than the greedy walk but
/// entirely independent of root functions and flips.
pub struct InductiveIter<'a> {
    sc: &'a SubwordComplex,
    rho: Element,
    members: Vec<bool>,
    k: usize,          // next position to decide, counting down; 0 means emit
    stack: Vec<usize>, // positions whose keep-branch is still pending
    done: bool,
}

impl<'a> InductiveIter<'a> {
    pub fn new(sc: &'a SubwordComplex) -> Self {
        InductiveIter {
            sc,
            rho: sc.target().clone(),
            members: vec![false; sc.word_len()],
            k: sc.word_len(),
            stack: Vec::new(),
            done: !sc.has_facets(),
        }
    }

    /// Can the current remaining target be spelled inside the first `upto`
    /// word positions?
    fn target_fits(&self, upto: usize) -> bool {
        let sys = self.sc.system();
        let mut rem = self.rho.clone();
        for &s in self.sc.word()[..upto].iter().rev() {
            if rem.is_right_descent(sys, s) {
                rem.right_mul(sys, s);
            }
        }
        rem.is_identity()
    }
}

impl Iterator for InductiveIter<'_> {
    type Item = Facet;

    fn next(&mut self) -> Option<Facet> {
        if self.done {
            return None;
        }
        let sys = self.sc.system();
        loop {
            if self.k == 0 {
                debug_assert!(self.rho.is_identity());
                let facet = self.sc.build_facet(self.members.clone());
                match self.stack.pop() {
                    Some(kb) => {
                        // Rewind to the pending decision: undo every crossing
                        // at or below it (they were applied top-down, so they
                        // unwind bottom-up), then keep position kb instead.
                        for j in 1..=kb {
                            if !self.members[j - 1] {
                                self.rho.right_mul(sys, self.sc.word()[j - 1]);
                            }
                        }
                        self.members[kb - 1] = true;
                        self.k = kb - 1;
                    }
                    None => self.done = true,
                }
                return Some(facet);
            }
            let s = self.sc.word()[self.k - 1];
            if self.rho.is_right_descent(sys, s) {
                if self.target_fits(self.k - 1) {
                    self.stack.push(self.k);
                }
                self.members[self.k - 1] = false;
                self.rho.right_mul(sys, s);
            } else {
                // A non-descent letter can never end a reduced spelling of
                // the remaining target, so the position stays in the facet.
                self.members[self.k - 1] = true;
            }
            self.k -= 1;
        }
    }
}

/// One parent→child flip in a greedy tree: the parent loses `removed` and
/// gains `added`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TreeArc {
    pub parent: usize,
    pub child: usize,
    pub removed: usize,
    pub added: usize,
}

/// A greedy flip tree, nodes in preorder (the order [`GreedyFlipIter`] yields).
pub struct GreedyTree {
    pub sign: Sign,
    pub word_len: usize,
    pub nodes: Vec<Vec<usize>>,
    pub arcs: Vec<TreeArc>,
}

pub fn greedy_tree(sc: &SubwordComplex, sign: Sign) -> Result<GreedyTree, SubwordError> {
    let mut facet = match sign {
        Sign::Positive => sc.positive_greedy_facet()?,
        Sign::Negative => sc.negative_greedy_facet()?,
    };
    let m = sc.word_len();
    let mut nodes = vec![facet.positions()];
    let mut arcs = Vec::new();
    struct TreeFrame {
        node: usize,
        undo: usize,
        resume: usize,
    }
    let mut stack: Vec<TreeFrame> = Vec::new();
    let mut node = 0usize;
    let mut cursor = match sign {
        Sign::Positive => 1,
        Sign::Negative => m,
    };
    loop {
        if let Some(k) = scan_child(sc, sign, &facet, cursor) {
            let partner = sc.flip_unchecked(&mut facet, k);
            let child = nodes.len();
            nodes.push(facet.positions());
            arcs.push(TreeArc {
                parent: node,
                child,
                removed: k,
                added: partner,
            });
            cursor = match sign {
                Sign::Negative => k - 1,
                Sign::Positive => k + 1,
            };
            stack.push(TreeFrame {
                node,
                undo: partner,
                resume: cursor,
            });
            node = child;
        } else {
            match stack.pop() {
                Some(frame) => {
                    sc.flip_unchecked(&mut facet, frame.undo);
                    node = frame.node;
                    cursor = frame.resume;
                }
                None => break,
            }
        }
    }
    Ok(GreedyTree {
        sign,
        word_len: m,
        nodes,
        arcs,
    })
}

impl GreedyTree {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph greedy_tree {\n");
        for (idx, node) in self.nodes.iter().enumerate() {
            let _ = writeln!(
                out,
                "  n{idx} [label=\"{}\"];",
                position_label(node, self.word_len)
            );
        }
        for arc in &self.arcs {
            let _ = writeln!(
                out,
                "  n{} -> n{} [label=\"({},{})\"];",
                arc.parent, arc.child, arc.removed, arc.added
            );
        }
        out.push_str("}\n");
        out
    }
}

/// A directed flip-graph edge: `from` flips away `removed` (whose root is
/// positive) and gains `added`, landing on `to`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct GraphEdge {
    pub from: usize,
    pub to: usize,
    pub removed: usize,
    pub added: usize,
}

/// The full flip graph with the increasing orientation: every edge points
/// from the facet where the exchanged position has a positive root.
pub struct FlipGraph {
    pub word_len: usize,
    /// Facet position lists, lexicographically sorted.
    pub vertices: Vec<Vec<usize>>,
    /// Edges sorted by (from, to), endpoints as vertex indices.
    pub edges: Vec<GraphEdge>,
}

pub fn flip_graph(sc: &SubwordComplex) -> FlipGraph {
    let m = sc.word_len();
    let mut vertices: Vec<Vec<usize>> = Vec::new();
    let mut index: HashMap<Vec<usize>, usize> = HashMap::new();
    let mut raw_edges: Vec<GraphEdge> = Vec::new();
    let mut queue: VecDeque<Facet> = VecDeque::new();

    if let Ok(start) = sc.positive_greedy_facet() {
        index.insert(start.positions(), 0);
        vertices.push(start.positions());
        queue.push_back(start);
    }
    while let Some(facet) = queue.pop_front() {
        let from = index[&facet.positions()];
        for k in 1..=m {
            if !facet.members[k - 1] || !sc.is_flippable(&facet, k) {
                continue;
            }
            let increasing = sc.system().is_positive(facet.rootfn[k - 1]);
            let mut next = facet.clone();
            let j = sc.flip_unchecked(&mut next, k);
            let positions = next.positions();
            let to = match index.get(&positions) {
                Some(&to) => to,
                None => {
                    let to = vertices.len();
                    index.insert(positions.clone(), to);
                    vertices.push(positions);
                    queue.push_back(next);
                    to
                }
            };
            // Record each exchange once, from its increasing side.
            if increasing {
                raw_edges.push(GraphEdge {
                    from,
                    to,
                    removed: k,
                    added: j,
                });
            }
        }
    }

    // Renumber vertices into lexicographic order for stable output.
    let mut order: Vec<usize> = (0..vertices.len()).collect();
    order.sort_by(|&a, &b| vertices[a].cmp(&vertices[b]));
    let mut rank = vec![0usize; vertices.len()];
    for (new, &old) in order.iter().enumerate() {
        rank[old] = new;
    }
    let mut sorted_vertices = vec![Vec::new(); vertices.len()];
    for (old, v) in vertices.into_iter().enumerate() {
        sorted_vertices[rank[old]] = v;
    }
    let mut edges: Vec<GraphEdge> = raw_edges
        .into_iter()
        .map(|e| GraphEdge {
            from: rank[e.from],
            to: rank[e.to],
            ..e
        })
        .collect();
    edges.sort_by_key(|e| (e.from, e.to));
    FlipGraph {
        word_len: m,
        vertices: sorted_vertices,
        edges,
    }
}

impl FlipGraph {
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph flip_graph {\n");
        for (idx, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(
                out,
                "  n{idx} [label=\"{}\"];",
                position_label(v, self.word_len)
            );
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  n{} -> n{} [label=\"({},{})\"];",
                e.from, e.to, e.removed, e.added
            );
        }
        out.push_str("}\n");
        out
    }
}

fn position_label(positions: &[usize], word_len: usize) -> String {
    let sep = if word_len <= 9 { "" } else { " " };
    positions
        .iter()
        .map(|k| k.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

pub fn count_facets(sc: &SubwordComplex, algo: Algorithm) -> usize {
    match algo {
        Algorithm::Inductive => InductiveIter::new(sc).count(),
        Algorithm::GreedyPositive => GreedyFlipIter::new(sc, Sign::Positive).count(),
        Algorithm::GreedyNegative => GreedyFlipIter::new(sc, Sign::Negative).count(),
        Algorithm::Bfs => flip_graph(sc).vertices.len(),
    }
}

/// Reduced Euler characteristic, by enumerating every face of the complex
/// over a bitmask of word positions. The empty face counts −1; a void complex
/// scores 0. Refuses words longer than `cap` positions.
pub fn euler_characteristic_with_cap(sc: &SubwordComplex, cap: usize) -> Result<i64, SubwordError> {
    let m = sc.word_len();
    if m > cap {
        return Err(SubwordError::FaceCapExceeded { len: m, cap });
    }
    let mut is_face = vec![false; 1usize << m];
    let mut any = false;
    for facet in GreedyFlipIter::new(sc, Sign::Negative) {
        let mut mask = 0usize;
        for k in facet.positions() {
            mask |= 1 << (k - 1);
        }
        is_face[mask] = true;
        any = true;
    }
    if !any {
        return Ok(0);
    }
    for mask in (0..is_face.len()).rev() {
        if is_face[mask] {
            let mut bits = mask;
            while bits != 0 {
                let low = bits & bits.wrapping_neg();
                is_face[mask ^ low] = true;
                bits ^= low;
            }
        }
    }
    let mut chi: i64 = 0;
    for (mask, &face) in is_face.iter().enumerate() {
        if face {
            chi += if mask.count_ones() % 2 == 0 { -1 } else { 1 };
        }
    }
    Ok(chi)
}

pub fn euler_characteristic(sc: &SubwordComplex) -> Result<i64, SubwordError> {
    euler_characteristic_with_cap(sc, DEFAULT_FACE_CAP)
}
