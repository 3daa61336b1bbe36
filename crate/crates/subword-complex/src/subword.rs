//! Subword complexes and flips.
//!
//! Fix a word Q = q₁…q_m in the generators and a target element ρ. The facets
//! of the subword complex are the position sets I ⊆ [m] whose complement
//! spells a reduced word for ρ. Every facet carries its *root function*
//! r(I, k) = (product of the complement letters before k)(α_{q_k}); that data
//! drives flips, greediness tests and the flip graph orientation.

use crate::coxeter::{CoxeterError, CoxeterSystem, Element, RootIndex};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, thiserror::Error)]
pub enum SubwordError {
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    /// The target is not a subword of the ambient word, so there are no facets.
    #[error("empty complex: the target element is not a subword of the word")]
    EmptyComplex,
    #[error("positions {0:?} do not form a facet")]
    NotAFacet(Vec<usize>),
    #[error("position {0} out of range 1..={1}")]
    PositionOutOfRange(usize, usize),
    #[error("position {0} is not in the facet")]
    NotInFacet(usize),
    #[error("position {0} is not flippable")]
    NotFlippable(usize),
    /// Brute-force face enumeration works over bitmasks of word positions and
    /// refuses words longer than its cap.
    #[error("word length {len} exceeds the face-enumeration cap {cap}")]
    FaceCapExceeded { len: usize, cap: usize },
}

/// A facet, stored as a membership mask over the word positions plus the full
/// root function. Flips update both in place.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Facet {
    pub(crate) members: Vec<bool>,
    pub(crate) rootfn: Vec<RootIndex>,
}

impl Facet {
    /// 1-based positions of the facet, ascending.
    pub fn positions(&self) -> Vec<usize> {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(k0, &m)| m.then_some(k0 + 1))
            .collect()
    }

    pub fn contains(&self, k: usize) -> bool {
        k >= 1 && k <= self.members.len() && self.members[k - 1]
    }

    pub fn size(&self) -> usize {
        self.members.iter().filter(|&&m| m).count()
    }

    /// Root function value at 1-based position `k` (any position, not only members).
    pub fn root(&self, k: usize) -> RootIndex {
        self.rootfn[k - 1]
    }

    pub fn root_function(&self) -> &[RootIndex] {
        &self.rootfn
    }
}

impl fmt::Debug for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (n, k) in self.positions().into_iter().enumerate() {
            if n > 0 {
                write!(f, ",")?;
            }
            write!(f, "{k}")?;
        }
        write!(f, "}}")
    }
}

/// A subword complex K(Q, ρ) over a finite Coxeter system.
pub struct SubwordComplex {
    sys: Arc<CoxeterSystem>,
    letters: Vec<usize>,
    target: Element,
    in_target_inv: Vec<bool>, // positive root t ∈ inv(ρ⁻¹): grants flippability
}

impl SubwordComplex {
    pub fn new(
        sys: Arc<CoxeterSystem>,
        letters: Vec<usize>,
        target: Element,
    ) -> Result<Self, SubwordError> {
        sys.check_letters(&letters)?;
        let in_target_inv = (0..sys.num_positive_roots() as RootIndex)
            .map(|t| !sys.is_positive(target.act_inv(t)))
            .collect();
        Ok(SubwordComplex {
            sys,
            letters,
            target,
            in_target_inv,
        })
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.sys
    }

    pub fn system_arc(&self) -> Arc<CoxeterSystem> {
        Arc::clone(&self.sys)
    }

    /// The ambient word, 0-based letters.
    pub fn word(&self) -> &[usize] {
        &self.letters
    }

    pub fn word_len(&self) -> usize {
        self.letters.len()
    }

    pub fn target(&self) -> &Element {
        &self.target
    }

    /// Common size of every facet.
    pub fn facet_size(&self) -> usize {
        self.letters.len() - self.target.len()
    }

    /// True when the target occurs as a subword, i.e. the complex has facets.
    pub fn has_facets(&self) -> bool {
        self.positive_sweep().is_some()
    }

    /// Lexicographically smallest facet: walk the word right to left, cross a
    /// letter whenever it is a right descent of what remains of the target.
    /// The skipped positions form the facet; all its positive roots make it
    /// the source of the increasing flip orientation.
    pub fn positive_greedy_facet(&self) -> Result<Facet, SubwordError> {
        let members = self.positive_sweep().ok_or(SubwordError::EmptyComplex)?;
        Ok(self.build_facet(members))
    }

    /// Lexicographically largest facet, the mirror sweep: walk left to right,
    /// crossing left descents. Sink of the increasing flip orientation.
    pub fn negative_greedy_facet(&self) -> Result<Facet, SubwordError> {
        let members = self.negative_sweep().ok_or(SubwordError::EmptyComplex)?;
        Ok(self.build_facet(members))
    }

    fn positive_sweep(&self) -> Option<Vec<bool>> {
        let mut rem = self.target.clone();
        let mut members = vec![false; self.letters.len()];
        for (k0, &s) in self.letters.iter().enumerate().rev() {
            if rem.is_right_descent(&self.sys, s) {
                rem.right_mul(&self.sys, s);
            } else {
                members[k0] = true;
            }
        }
        rem.is_identity().then_some(members)
    }

    fn negative_sweep(&self) -> Option<Vec<bool>> {
        let mut rem = self.target.clone();
        let mut members = vec![false; self.letters.len()];
        for (k0, &s) in self.letters.iter().enumerate() {
            if rem.is_left_descent(&self.sys, s) {
                rem.left_mul(&self.sys, s);
            } else {
                members[k0] = true;
            }
        }
        rem.is_identity().then_some(members)
    }

    /// Compute the root function for a membership mask whose complement is
    /// already known to multiply to the target reduced.
    pub(crate) fn build_facet(&self, members: Vec<bool>) -> Facet {
        let mut w = Element::identity(&self.sys);
        let mut rootfn = Vec::with_capacity(self.letters.len());
        for (k0, &s) in self.letters.iter().enumerate() {
            rootfn.push(w.act(s as RootIndex));
            if !members[k0] {
                w.right_mul(&self.sys, s);
            }
        }
        debug_assert!(w == self.target);
        Facet { members, rootfn }
    }

    /// Validate a 1-based position set and return it as a facet.
    pub fn facet_from_positions(&self, positions: &[usize]) -> Result<Facet, SubwordError> {
        let m = self.letters.len();
        let mut members = vec![false; m];
        for &k in positions {
            if k < 1 || k > m {
                return Err(SubwordError::PositionOutOfRange(k, m));
            }
            if members[k - 1] {
                return Err(SubwordError::NotAFacet(positions.to_vec()));
            }
            members[k - 1] = true;
        }
        // The complement must spell the target without a single length drop.
        let mut w = Element::identity(&self.sys);
        let mut rootfn = Vec::with_capacity(m);
        for (k0, &s) in self.letters.iter().enumerate() {
            rootfn.push(w.act(s as RootIndex));
            if !members[k0] {
                if w.is_right_descent(&self.sys, s) {
                    return Err(SubwordError::NotAFacet(positions.to_vec()));
                }
                w.right_mul(&self.sys, s);
            }
        }
        if w == self.target {
            Ok(Facet { members, rootfn })
        } else {
            Err(SubwordError::NotAFacet(positions.to_vec()))
        }
    }

    /// Root configuration: the root function restricted to the facet members.
    pub fn root_configuration(&self, facet: &Facet) -> Vec<RootIndex> {
        facet
            .members
            .iter()
            .zip(&facet.rootfn)
            .filter_map(|(&m, &r)| m.then_some(r))
            .collect()
    }

    /// A member is flippable when its root is negative, or positive but an
    /// inversion of ρ⁻¹. Exactly the non-flippable members pin the facet to
    /// the boundary of the complex.
    pub fn is_flippable(&self, facet: &Facet, k: usize) -> bool {
        facet.contains(k) && {
            let r = facet.rootfn[k - 1];
            !self.sys.is_positive(r) || self.in_target_inv[r as usize]
        }
    }

    /// Exchange member `k` for its unique partner, updating the facet and its
    /// root function in place. Returns the partner's 1-based position.
    pub fn flip(&self, facet: &mut Facet, k: usize) -> Result<usize, SubwordError> {
        if k < 1 || k > self.letters.len() {
            return Err(SubwordError::PositionOutOfRange(k, self.letters.len()));
        }
        if !facet.contains(k) {
            return Err(SubwordError::NotInFacet(k));
        }
        if !self.is_flippable(facet, k) {
            return Err(SubwordError::NotFlippable(k));
        }
        Ok(self.flip_unchecked(facet, k))
    }

    /// Flip without the membership/flippability checks; used by the
    /// enumerators, which only ever flip positions they just verified.
    pub(crate) fn flip_unchecked(&self, facet: &mut Facet, k: usize) -> usize {
        let i0 = k - 1;
        let r = facet.rootfn[i0];
        let (t, j0) = if self.sys.is_positive(r) {
            // Positive root: the partner sits to the right.
            let j0 = (i0 + 1..self.letters.len())
                .find(|&j0| !facet.members[j0] && facet.rootfn[j0] == r)
                .expect("flippable member with positive root has a partner to its right");
            (r, j0)
        } else {
            let pos = self.sys.negate(r);
            let j0 = (0..i0)
                .find(|&j0| !facet.members[j0] && facet.rootfn[j0] == pos)
                .expect("member with negative root has a partner to its left");
            (pos, j0)
        };
        facet.members[i0] = false;
        facet.members[j0] = true;
        // Conjugating the complement by the crossing moved between i and j
        // reflects every root strictly between the lower position and up to
        // the higher one.
        let perm = self.sys.refl_perm(t);
        let (lo, hi) = (i0.min(j0), i0.max(j0));
        for slot in &mut facet.rootfn[lo + 1..=hi] {
            *slot = perm[*slot as usize];
        }
        j0 + 1
    }

    /// Does the facet agree with the negative greedy facet of the length-`x`
    /// prefix of the word (with target the complement's prefix product)?
    pub fn prefix_is_negative_greedy(&self, facet: &Facet, x: usize) -> bool {
        let prefix = &self.letters[..x];
        let mut rho = Element::identity(&self.sys);
        for (k0, &s) in prefix.iter().enumerate() {
            if !facet.members[k0] {
                rho.right_mul(&self.sys, s);
            }
        }
        let mut members = vec![false; x];
        for (k0, &s) in prefix.iter().enumerate() {
            if rho.is_left_descent(&self.sys, s) {
                rho.left_mul(&self.sys, s);
            } else {
                members[k0] = true;
            }
        }
        rho.is_identity() && members == facet.members[..x]
    }

    /// Does the facet agree with the positive greedy facet of the suffix of
    /// the word starting at position `x`?
    pub fn suffix_is_positive_greedy(&self, facet: &Facet, x: usize) -> bool {
        let suffix = &self.letters[x - 1..];
        let mut rho = Element::identity(&self.sys);
        for (k0, &s) in suffix.iter().enumerate() {
            if !facet.members[x - 1 + k0] {
                rho.right_mul(&self.sys, s);
            }
        }
        let mut members = vec![false; suffix.len()];
        for (k0, &s) in suffix.iter().enumerate().rev() {
            if rho.is_right_descent(&self.sys, s) {
                rho.right_mul(&self.sys, s);
            } else {
                members[k0] = true;
            }
        }
        rho.is_identity() && members == facet.members[x - 1..]
    }

    /// γ⁻: the largest x such that the facet restricted to the prefix of
    /// length x is that prefix complex's negative greedy facet. Ranges over
    /// 0..=m; the negative greedy facet itself scores m.
    pub fn negative_greedy_index(&self, facet: &Facet) -> usize {
        (0..=self.letters.len())
            .rev()
            .find(|&x| self.prefix_is_negative_greedy(facet, x))
            .unwrap()
    }

    /// γ⁺: the smallest x such that the facet restricted to the suffix
    /// starting at x is that suffix complex's positive greedy facet. Ranges
    /// over 1..=m+1; the positive greedy facet itself scores 1.
    pub fn positive_greedy_index(&self, facet: &Facet) -> usize {
        (1..=self.letters.len() + 1)
            .find(|&x| self.suffix_is_positive_greedy(facet, x))
            .unwrap()
    }

    /// The complex over the reversed word with inverted target. Facets
    /// correspond under k ↦ m+1−k, exchanging the two greedy sweeps.
    pub fn reversed(&self) -> SubwordComplex {
        let letters: Vec<usize> = self.letters.iter().rev().copied().collect();
        SubwordComplex::new(Arc::clone(&self.sys), letters, self.target.inverse())
            .expect("letters already validated")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::Quad;

    /// The A₃ example used throughout: Q = s2 s3 s1 s3 s2 s1 s2 s3 s1 and
    /// target ρ = s2 s3 s2 s1 (the permutation 4132), so facets have size 5.
    fn example() -> SubwordComplex {
        let sys = Arc::new(CoxeterSystem::from_type("A3").unwrap());
        let letters = vec![1, 2, 0, 2, 1, 0, 1, 2, 0];
        let target = sys.element_from_word(&[1, 2, 1, 0]).unwrap();
        SubwordComplex::new(Arc::clone(&sys), letters, target).unwrap()
    }

    fn signed_root(sys: &CoxeterSystem, coords: [i64; 3]) -> RootIndex {
        let negative = coords.iter().any(|&c| c < 0);
        let abs: Vec<Quad> = coords.iter().map(|&c| Quad::int(c.abs())).collect();
        let t = sys.root_index(&abs).unwrap();
        if negative {
            sys.negate(t)
        } else {
            t
        }
    }

    #[test]
    fn greedy_facets_of_the_example() {
        let sc = example();
        assert!(sc.has_facets());
        assert_eq!(sc.facet_size(), 5);
        let pi = sc.positive_greedy_facet().unwrap();
        assert_eq!(pi.positions(), vec![1, 2, 3, 5, 6]);
        let nu = sc.negative_greedy_facet().unwrap();
        assert_eq!(nu.positions(), vec![3, 4, 7, 8, 9]);
        assert_eq!(sc.positive_greedy_index(&pi), 1);
        assert_eq!(sc.negative_greedy_index(&nu), 9);
    }

    #[test]
    fn root_function_of_a_facet() {
        let sc = example();
        let sys = sc.system();
        let facet = sc.facet_from_positions(&[1, 3, 4, 7, 9]).unwrap();
        let expected: Vec<RootIndex> = [
            [0, 1, 0],
            [0, 0, 1],
            [1, 0, 0],
            [0, 0, -1],
            [0, 1, 1],
            [1, 1, 1],
            [1, 0, 0],
            [0, 1, 0],
            [-1, -1, -1],
        ]
        .iter()
        .map(|&c| signed_root(sys, c))
        .collect();
        assert_eq!(facet.root_function(), &expected[..]);
    }

    #[test]
    fn flips_of_the_example() {
        let sc = example();
        let mut facet = sc.facet_from_positions(&[1, 3, 4, 7, 9]).unwrap();
        assert!(sc.is_flippable(&facet, 1));
        assert!(!sc.is_flippable(&facet, 3));
        assert!(sc.is_flippable(&facet, 4));
        assert!(!sc.is_flippable(&facet, 7));
        assert!(sc.is_flippable(&facet, 9));

        let j = sc.flip(&mut facet, 1).unwrap();
        assert_eq!(j, 8);
        assert_eq!(facet.positions(), vec![3, 4, 7, 8, 9]);
        // The flipped facet's root function must match a fresh recomputation.
        let fresh = sc.facet_from_positions(&[3, 4, 7, 8, 9]).unwrap();
        assert_eq!(facet, fresh);

        // Flip back: the exchange is an involution.
        let back = sc.flip(&mut facet, 8).unwrap();
        assert_eq!(back, 1);
        assert_eq!(facet.positions(), vec![1, 3, 4, 7, 9]);

        let mut nu = sc.negative_greedy_facet().unwrap();
        let j = sc.flip(&mut nu, 9).unwrap();
        assert_eq!(j, 6);
        assert_eq!(nu.positions(), vec![3, 4, 6, 7, 8]);
        assert_eq!(nu, sc.facet_from_positions(&[3, 4, 6, 7, 8]).unwrap());
    }

    #[test]
    fn greedy_indices_of_the_example() {
        let sc = example();
        let facet = sc.facet_from_positions(&[1, 3, 4, 7, 9]).unwrap();
        assert_eq!(sc.negative_greedy_index(&facet), 7);
        let nu = sc.facet_from_positions(&[3, 4, 7, 8, 9]).unwrap();
        assert_eq!(sc.negative_greedy_index(&nu), 9);
    }

    #[test]
    fn facet_validation_rejects_non_facets() {
        let sc = example();
        assert!(matches!(
            sc.facet_from_positions(&[1, 2, 3, 4, 5]),
            Err(SubwordError::NotAFacet(_))
        ));
        assert!(matches!(
            sc.facet_from_positions(&[1, 2, 3, 5, 10]),
            Err(SubwordError::PositionOutOfRange(10, 9))
        ));
        let facet = sc.facet_from_positions(&[1, 2, 3, 5, 6]).unwrap();
        let mut f = facet.clone();
        assert!(matches!(
            sc.flip(&mut f, 4),
            Err(SubwordError::NotInFacet(4))
        ));
    }

    #[test]
    fn empty_complex_has_no_greedy_facets() {
        let sys = Arc::new(CoxeterSystem::from_type("A2").unwrap());
        // Word s1 s1 cannot spell s2.
        let target = sys.element_from_word(&[1]).unwrap();
        let sc = SubwordComplex::new(sys, vec![0, 0], target).unwrap();
        assert!(!sc.has_facets());
        assert!(matches!(
            sc.positive_greedy_facet(),
            Err(SubwordError::EmptyComplex)
        ));
        assert!(matches!(
            sc.negative_greedy_facet(),
            Err(SubwordError::EmptyComplex)
        ));
    }

    #[test]
    fn reversal_swaps_the_greedy_facets() {
        let sc = example();
        let rev = sc.reversed();
        let m = sc.word_len();
        let pi = sc.positive_greedy_facet().unwrap();
        let mirrored: Vec<usize> = pi.positions().iter().rev().map(|&k| m + 1 - k).collect();
        let nu_rev = rev.negative_greedy_facet().unwrap();
        assert_eq!(nu_rev.positions(), mirrored);
    }
}
