use super::system::{CoxeterSystem, RootIndex};

/// A group element stored as its action on the signed roots, together with the
/// action of its inverse. Length, descents and inversions are O(1)–O(N) reads.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    fwd: Vec<RootIndex>, // fwd[x] = index of w(root x)
    inv: Vec<RootIndex>, // inv[x] = index of w⁻¹(root x)
    len: usize,
}

impl Element {
    pub fn identity(sys: &CoxeterSystem) -> Element {
        let ids: Vec<RootIndex> = (0..2 * sys.num_positive_roots() as RootIndex).collect();
        Element {
            fwd: ids.clone(),
            inv: ids,
            len: 0,
        }
    }

    // `is_identity` below plays the `is_empty` role; elements are not containers.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_identity(&self) -> bool {
        self.len == 0
    }

    /// Image of a signed root under the element.
    pub fn act(&self, x: RootIndex) -> RootIndex {
        self.fwd[x as usize]
    }

    /// Image of a signed root under the inverse element.
    pub fn act_inv(&self, x: RootIndex) -> RootIndex {
        self.inv[x as usize]
    }

    /// True when ℓ(w·s) < ℓ(w), i.e. w sends α_s to a negative root.
    pub fn is_right_descent(&self, sys: &CoxeterSystem, s: usize) -> bool {
        !sys.is_positive(self.fwd[s])
    }

    /// True when ℓ(s·w) < ℓ(w), i.e. w⁻¹ sends α_s to a negative root.
    pub fn is_left_descent(&self, sys: &CoxeterSystem, s: usize) -> bool {
        !sys.is_positive(self.inv[s])
    }

    /// Replace w by w·s in place. No allocation: composing with the involution
    /// s on the right permutes the domain of `fwd`, and maps the range of `inv`.
    pub fn right_mul(&mut self, sys: &CoxeterSystem, s: usize) {
        let descent = self.is_right_descent(sys, s);
        let sp = sys.simple_perm(s);
        for (x, &y) in sp.iter().enumerate() {
            if (y as usize) > x {
                self.fwd.swap(x, y as usize);
            }
        }
        for slot in self.inv.iter_mut() {
            *slot = sp[*slot as usize];
        }
        self.len = if descent { self.len - 1 } else { self.len + 1 };
    }

    /// Replace w by s·w in place.
    pub fn left_mul(&mut self, sys: &CoxeterSystem, s: usize) {
        let descent = self.is_left_descent(sys, s);
        let sp = sys.simple_perm(s);
        for slot in self.fwd.iter_mut() {
            *slot = sp[*slot as usize];
        }
        for (x, &y) in sp.iter().enumerate() {
            if (y as usize) > x {
                self.inv.swap(x, y as usize);
            }
        }
        self.len = if descent { self.len - 1 } else { self.len + 1 };
    }

    pub fn inverse(&self) -> Element {
        Element {
            fwd: self.inv.clone(),
            inv: self.fwd.clone(),
            len: self.len,
        }
    }

    /// The positive roots sent to negative ones; its size equals the length.
    pub fn inversion_set(&self, sys: &CoxeterSystem) -> Vec<RootIndex> {
        (0..sys.num_positive_roots() as RootIndex)
            .filter(|&t| !sys.is_positive(self.fwd[t as usize]))
            .collect()
    }
}

impl std::fmt::Debug for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Element(len {})", self.len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_tracks_length_and_inverse() {
        let sys = CoxeterSystem::from_type("B3").unwrap();
        let mut w = Element::identity(&sys);
        for s in [0, 1, 2, 1, 0, 1] {
            w.right_mul(&sys, s);
        }
        assert_eq!(w.inversion_set(&sys).len(), w.len());

        // u⁻¹ built letter by letter on the left matches inverse().
        let mut u = Element::identity(&sys);
        for s in [0, 1, 2, 1, 0, 1] {
            u.left_mul(&sys, s);
        }
        // u = s1·(s2·(…)) reverses the word, so u should equal w⁻¹.
        assert!(u == w.inverse());
    }

    #[test]
    fn braid_relation_holds() {
        let sys = CoxeterSystem::from_type("B2").unwrap();
        let mut a = Element::identity(&sys);
        for s in [0, 1, 0, 1] {
            a.right_mul(&sys, s);
        }
        let mut b = Element::identity(&sys);
        for s in [1, 0, 1, 0] {
            b.right_mul(&sys, s);
        }
        assert!(a == b);
        assert_eq!(a.len(), 4);
    }
}
