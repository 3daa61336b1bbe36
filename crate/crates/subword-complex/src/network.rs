//! Sorting networks for type A.
//!
//! In type A_n the group is the symmetric group on n+1 letters and a word in
//! the generators is a sorting network: n+1 horizontal wires with one
//! commutator per word position, the letter s_p connecting wires p and p+1.
//! A facet turns each of its positions into a *contact* (the wires touch) and
//! every complement position into a *crossing*; the crossings alone spell the
//! target, so the network sorts the identity into the target's one-line form.

use crate::coxeter::{CoxeterMatrix, CoxeterSystem, Element, Quad, RootIndex, Word};
use crate::subword::{Facet, SubwordComplex};
use std::fmt::Write as _;

#[derive(Debug, thiserror::Error)]
pub enum NetworkError {
    #[error("sorting networks need a type A system (a path of 3-bonds)")]
    NotTypeA,
    #[error("{0:?} is not a permutation of 1..={1}")]
    NotAPermutation(Vec<usize>, usize),
}

/// Is the matrix the A_n path: 3-bonds between neighbours, 2 elsewhere?
pub fn is_type_a(matrix: &CoxeterMatrix) -> bool {
    let n = matrix.rank();
    (0..n).all(|i| (i + 1..n).all(|j| matrix.bond(i, j) == if j == i + 1 { 3 } else { 2 }))
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CommutatorKind {
    Crossing,
    Contact,
}

/// One word position in the wire diagram: the commutator joins `level` and
/// `level+1`, and the occupants just before it are recorded for readout.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Commutator {
    pub level: usize, // lower wire, 1-based
    pub kind: CommutatorKind,
    pub top_line: usize,
    pub bottom_line: usize,
}

/// A facet drawn on the word's sorting network.
pub struct Arrangement {
    pub levels: usize,
    pub commutators: Vec<Commutator>,
    /// Final occupancy, bottom wire first: equals the target's one-line form.
    pub result: Vec<usize>,
}

impl Arrangement {
    /// Lines touching or crossing at 1-based position k, as (top, bottom).
    /// The facet's root at k is e_top − e_bottom in the standard embedding.
    pub fn readout(&self, k: usize) -> (usize, usize) {
        let c = &self.commutators[k - 1];
        (c.top_line, c.bottom_line)
    }
}

pub fn arrangement(sc: &SubwordComplex, facet: &Facet) -> Result<Arrangement, NetworkError> {
    if !is_type_a(sc.system().matrix()) {
        return Err(NetworkError::NotTypeA);
    }
    let levels = sc.system().rank() + 1;
    let mut occ: Vec<usize> = (1..=levels).collect(); // occ[level-1] = line
    let mut commutators = Vec::with_capacity(sc.word_len());
    for (k0, &s) in sc.word().iter().enumerate() {
        let level = s + 1;
        let kind = if facet.contains(k0 + 1) {
            CommutatorKind::Contact
        } else {
            CommutatorKind::Crossing
        };
        commutators.push(Commutator {
            level,
            kind,
            top_line: occ[level],
            bottom_line: occ[level - 1],
        });
        if kind == CommutatorKind::Crossing {
            occ.swap(level - 1, level);
        }
    }
    Ok(Arrangement {
        levels,
        commutators,
        result: occ,
    })
}

/// One-line form [w(1), …, w(n+1)] of an element of a type A system.
pub fn one_line(sys: &CoxeterSystem, w: &Element) -> Result<Vec<usize>, NetworkError> {
    if !is_type_a(sys.matrix()) {
        return Err(NetworkError::NotTypeA);
    }
    let mut arr: Vec<usize> = (1..=sys.rank() + 1).collect();
    for &s in sys.reduced_word(w).letters() {
        arr.swap(s, s + 1);
    }
    Ok(arr)
}

/// A reduced word for the permutation given in one-line form: repeatedly swap
/// the first descent away and replay the swaps backwards.
pub fn word_from_one_line(perm: &[usize]) -> Result<Word, NetworkError> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &v in perm {
        if v < 1 || v > n || seen[v - 1] {
            return Err(NetworkError::NotAPermutation(perm.to_vec(), n));
        }
        seen[v - 1] = true;
    }
    let mut arr = perm.to_vec();
    let mut swaps = Vec::new();
    while let Some(i) = (0..n - 1).find(|&i| arr[i] > arr[i + 1]) {
        arr.swap(i, i + 1);
        swaps.push(i);
    }
    swaps.reverse();
    Ok(Word(swaps))
}

/// The (top, bottom) wire pair of a signed root: root = e_top − e_bottom.
/// None when the coordinates are not a consecutive run of ones (non-A data).
pub fn embed_root(sys: &CoxeterSystem, x: RootIndex) -> Option<(usize, usize)> {
    let negative = !sys.is_positive(x);
    let t = if negative { sys.negate(x) } else { x };
    let coords = sys.root_coords(t);
    let first = coords.iter().position(|c| !c.is_zero())?;
    let last = coords.iter().rposition(|c| !c.is_zero())?;
    if coords[first..=last].iter().any(|&c| c != Quad::ONE) {
        return None;
    }
    // α_i + … + α_j = e_{j+2} − e_{i+1} with 0-based letters i..=j.
    let (top, bottom) = (last + 2, first + 1);
    Some(if negative {
        (bottom, top)
    } else {
        (top, bottom)
    })
}

/// Plain-text wire diagram, one row per wire from top to bottom. Crossings
/// are `X` on both wires, contacts a `v` over a `^`; the left margin shows
/// the starting line of each wire and the right margin the finishing line,
/// with a position ruler underneath.
pub fn render_ascii(arr: &Arrangement) -> String {
    let m = arr.commutators.len();
    let mut grid = vec![vec!['-'; m]; arr.levels];
    for (k0, c) in arr.commutators.iter().enumerate() {
        let (lower, upper) = match c.kind {
            CommutatorKind::Crossing => ('X', 'X'),
            CommutatorKind::Contact => ('^', 'v'),
        };
        grid[c.level - 1][k0] = lower;
        grid[c.level][k0] = upper;
    }
    let w = arr.levels.to_string().len();
    let mut out = String::new();
    for level in (1..=arr.levels).rev() {
        let row: String = grid[level - 1].iter().collect();
        let _ = writeln!(out, "{level:>w$} {row} {}", arr.result[level - 1]);
    }
    let ruler: String = (1..=m)
        .map(|k| char::from_digit((k % 10) as u32, 10).unwrap())
        .collect();
    let _ = writeln!(out, "{:>w$} {ruler}", "");
    out
}

/// Self-contained SVG of the wire diagram: wires as polylines that trade
/// places at crossings, contacts as vertical bars, wire labels on both sides.
pub fn render_svg(arr: &Arrangement) -> String {
    let m = arr.commutators.len();
    let lv = arr.levels;
    let x = |k: usize| 30 + 40 * k;
    let y = |level: usize| 30 + 40 * (lv - level);
    let width = x(m) + 40;
    let height = 40 * lv + 20;

    // Level of each line at every time step.
    let mut occ: Vec<usize> = (1..=lv).collect();
    let mut level_of = vec![vec![0usize; m + 1]; lv];
    for (line0, &line) in occ.iter().enumerate() {
        level_of[line - 1][0] = line0 + 1;
    }
    for (k0, c) in arr.commutators.iter().enumerate() {
        if c.kind == CommutatorKind::Crossing {
            occ.swap(c.level - 1, c.level);
        }
        for (level0, &line) in occ.iter().enumerate() {
            level_of[line - 1][k0 + 1] = level0 + 1;
        }
    }

    let mut out = String::new();
    let _ = writeln!(
        out,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    );
    let _ = writeln!(
        out,
        "  <rect width=\"{width}\" height=\"{height}\" fill=\"white\"/>"
    );
    for line in 1..=lv {
        let mut points = String::new();
        for (t, &level) in level_of[line - 1].iter().enumerate() {
            if t > 0 {
                points.push(' ');
            }
            let _ = write!(points, "{},{}", x(t), y(level));
        }
        let _ = writeln!(
            out,
            "  <polyline points=\"{points}\" fill=\"none\" stroke=\"black\" stroke-width=\"2\" stroke-linejoin=\"round\"/>"
        );
    }
    for (k0, c) in arr.commutators.iter().enumerate() {
        if c.kind == CommutatorKind::Contact {
            let cx = x(k0 + 1) - 20;
            let _ = writeln!(
                out,
                "  <line x1=\"{cx}\" y1=\"{}\" x2=\"{cx}\" y2=\"{}\" stroke=\"black\" stroke-width=\"4\" stroke-linecap=\"round\"/>",
                y(c.level + 1),
                y(c.level)
            );
        }
    }
    for line in 1..=lv {
        let start = level_of[line - 1][0];
        let end = level_of[line - 1][m];
        let _ = writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"16\">{line}</text>",
            x(0) - 10,
            y(start) + 5
        );
        let _ = writeln!(
            out,
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"start\" font-family=\"monospace\" font-size=\"16\">{line}</text>",
            x(m) + 10,
            y(end) + 5
        );
    }
    out.push_str("</svg>\n");
    out
}
