use super::{CoxeterError, CoxeterMatrix, Quad};
use std::collections::HashMap;
use std::fmt::Write as _;

/// Default bound on the number of positive roots the orbit closure may produce.
pub const DEFAULT_ROOT_CAP: usize = 100_000;

// Coordinates past this bound signal a runaway orbit (infinite group); the
// bound also keeps every product with a Cartan entry far from i64 overflow.
const COORD_BOUND: i64 = 1 << 40;

/// Index into the signed root list. Values in `[0, N)` name the positive roots
/// (simple roots come first, in generator order); `k + N` names the negative
/// of root `k`.
pub type RootIndex = u32;

/// A finite Coxeter system: the positive roots, and for every simple and
/// general reflection the permutation it induces on all `2N` signed roots.
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    cartan: Vec<Quad>,                // n×n pairing ⟨α_j, α_i^∨⟩ at [i*n + j]
    roots: Vec<Vec<Quad>>,            // positive roots in simple-root coordinates
    simple_perm: Vec<Vec<RootIndex>>, // generator action, n × 2N
    refl_perm: Vec<Vec<RootIndex>>,   // reflection in root t, N × 2N
}

impl CoxeterSystem {
    pub fn from_matrix(matrix: CoxeterMatrix) -> Result<Self, CoxeterError> {
        Self::from_matrix_with_cap(matrix, DEFAULT_ROOT_CAP)
    }

    pub fn from_type(label: &str) -> Result<Self, CoxeterError> {
        Self::from_matrix(CoxeterMatrix::from_type(label)?)
    }

    pub fn from_matrix_with_cap(matrix: CoxeterMatrix, cap: usize) -> Result<Self, CoxeterError> {
        let n = matrix.rank();
        let cartan = build_cartan(&matrix);

        // Close the simple roots under the generator action. Each new root
        // remembers which generator produced it from which known root, so a
        // word conjugating it back to a simple root can be read off later.
        let mut roots: Vec<Vec<Quad>> = (0..n)
            .map(|i| {
                let mut v = vec![Quad::ZERO; n];
                v[i] = Quad::ONE;
                v
            })
            .collect();
        let mut index: HashMap<Vec<Quad>, RootIndex> = roots
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i as RootIndex))
            .collect();
        let mut parent: Vec<(RootIndex, usize)> = (0..n).map(|_| (0, usize::MAX)).collect();

        let mut head = 0;
        while head < roots.len() {
            for i in 0..n {
                if head < n && head == i {
                    continue; // s_i(α_i) = −α_i, the only sign flip on Φ⁺
                }
                let image = reflect_coords(&cartan, n, i, &roots[head]);
                for c in &image {
                    if c.a.abs() > COORD_BOUND || c.b.abs() > COORD_BOUND {
                        return Err(CoxeterError::OrbitBoundExceeded { cap });
                    }
                }
                debug_assert!(image.iter().all(|c| c.signum() >= 0));
                if !index.contains_key(&image) {
                    if roots.len() >= cap {
                        return Err(CoxeterError::OrbitBoundExceeded { cap });
                    }
                    index.insert(image.clone(), roots.len() as RootIndex);
                    parent.push((head as RootIndex, i));
                    roots.push(image);
                }
            }
            head += 1;
        }

        let count = roots.len();
        let total = 2 * count;

        // Generator action on all signed roots.
        let mut simple_perm: Vec<Vec<RootIndex>> = Vec::with_capacity(n);
        for i in 0..n {
            let mut perm = vec![0 as RootIndex; total];
            for (k, root) in roots.iter().enumerate() {
                let target = if k == i {
                    (i + count) as RootIndex
                } else {
                    index[&reflect_coords(&cartan, n, i, root)]
                };
                perm[k] = target;
                perm[k + count] = negate(target, count);
            }
            simple_perm.push(perm);
        }

        // Reflection action for every positive root t: with t = u(α_s) for the
        // witness word u = g₁…g_k recorded by the closure, the reflection in t
        // is u·s·u⁻¹, evaluated here generator by generator.
        let mut refl_perm: Vec<Vec<RootIndex>> = Vec::with_capacity(count);
        let mut chain: Vec<usize> = Vec::new();
        for t in 0..count {
            chain.clear();
            let mut cur = t as RootIndex;
            while (cur as usize) >= n {
                let (p, g) = parent[cur as usize];
                chain.push(g);
                cur = p;
            }
            let s = cur as usize;
            let mut perm = vec![0 as RootIndex; total];
            for (x, slot) in perm.iter_mut().enumerate() {
                let mut y = x as RootIndex;
                for &g in &chain {
                    y = simple_perm[g][y as usize];
                }
                y = simple_perm[s][y as usize];
                for &g in chain.iter().rev() {
                    y = simple_perm[g][y as usize];
                }
                *slot = y;
            }
            debug_assert_eq!(perm[t], negate(t as RootIndex, count));
            refl_perm.push(perm);
        }

        Ok(CoxeterSystem {
            matrix,
            cartan,
            roots,
            simple_perm,
            refl_perm,
        })
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// N, the number of positive roots. Equals the length of the longest element.
    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn is_positive(&self, x: RootIndex) -> bool {
        (x as usize) < self.roots.len()
    }

    /// Index of −roots[x].
    pub fn negate(&self, x: RootIndex) -> RootIndex {
        negate(x, self.roots.len())
    }

    /// Coordinates of positive root `t` in the simple-root basis.
    pub fn root_coords(&self, t: RootIndex) -> &[Quad] {
        &self.roots[t as usize]
    }

    /// Index of the positive root with the given coordinates, if any.
    pub fn root_index(&self, coords: &[Quad]) -> Option<RootIndex> {
        self.roots
            .iter()
            .position(|r| r == coords)
            .map(|t| t as RootIndex)
    }

    /// Action of generator `i` on a signed root.
    pub fn apply_generator(&self, i: usize, x: RootIndex) -> RootIndex {
        self.simple_perm[i][x as usize]
    }

    pub fn simple_perm(&self, i: usize) -> &[RootIndex] {
        &self.simple_perm[i]
    }

    /// Permutation of the signed roots induced by the reflection in positive root `t`.
    pub fn refl_perm(&self, t: RootIndex) -> &[RootIndex] {
        &self.refl_perm[t as usize]
    }

    /// Pairing ⟨β, α_i^∨⟩ for β given in simple-root coordinates.
    pub fn pairing(&self, i: usize, coords: &[Quad]) -> Quad {
        let n = self.matrix.rank();
        let mut acc = Quad::ZERO;
        for (j, &c) in coords.iter().enumerate().take(n) {
            acc += self.cartan[i * n + j] * c;
        }
        acc
    }

    /// Human-readable form of a signed root, e.g. `a1+a2` or `-(a1+φa2)`.
    pub fn root_string(&self, x: RootIndex) -> String {
        let count = self.roots.len();
        let (t, neg) = if (x as usize) < count {
            (x as usize, false)
        } else {
            (x as usize - count, true)
        };
        let mut body = String::new();
        for (j, c) in self.roots[t].iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !body.is_empty() {
                body.push('+');
            }
            if *c != Quad::ONE {
                let _ = write!(body, "{c}");
            }
            let _ = write!(body, "a{}", j + 1);
        }
        if neg {
            if body.contains('+') {
                format!("-({body})")
            } else {
                format!("-{body}")
            }
        } else {
            body
        }
    }
}

fn negate(x: RootIndex, count: usize) -> RootIndex {
    let count = count as RootIndex;
    (x + count) % (2 * count)
}

fn build_cartan(matrix: &CoxeterMatrix) -> Vec<Quad> {
    let n = matrix.rank();
    let mut cartan = vec![Quad::ZERO; n * n];
    for i in 0..n {
        cartan[i * n + i] = Quad::int(2);
        for j in 0..n {
            if i == j {
                continue;
            }
            // Split 4cos²(π/m) into an integer (or golden) product; the
            // asymmetric cases put the −1 on the lexicographically first side.
            cartan[i * n + j] = match matrix.bond(i, j) {
                2 => Quad::ZERO,
                3 => Quad::int(-1),
                4 => Quad::int(if i < j { -1 } else { -2 }),
                5 => -Quad::PHI,
                6 => Quad::int(if i < j { -1 } else { -3 }),
                m => unreachable!("bond label {m} rejected by matrix validation"),
            };
        }
    }
    cartan
}

fn reflect_coords(cartan: &[Quad], n: usize, i: usize, v: &[Quad]) -> Vec<Quad> {
    let mut pairing = Quad::ZERO;
    for j in 0..n {
        pairing += cartan[i * n + j] * v[j];
    }
    let mut out = v.to_vec();
    out[i] = out[i] - pairing;
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn positive_root_count(label: &str) -> usize {
        CoxeterSystem::from_type(label)
            .unwrap()
            .num_positive_roots()
    }

    #[test]
    fn root_counts_match_the_classification() {
        assert_eq!(positive_root_count("A1"), 1);
        assert_eq!(positive_root_count("A2"), 3);
        assert_eq!(positive_root_count("A3"), 6);
        assert_eq!(positive_root_count("A4"), 10);
        assert_eq!(positive_root_count("B2"), 4);
        assert_eq!(positive_root_count("B3"), 9);
        assert_eq!(positive_root_count("B4"), 16);
        assert_eq!(positive_root_count("C3"), 9);
        assert_eq!(positive_root_count("D4"), 12);
        assert_eq!(positive_root_count("D5"), 20);
        assert_eq!(positive_root_count("E6"), 36);
        assert_eq!(positive_root_count("E7"), 63);
        assert_eq!(positive_root_count("E8"), 120);
        assert_eq!(positive_root_count("F4"), 24);
        assert_eq!(positive_root_count("G2"), 6);
        assert_eq!(positive_root_count("H3"), 15);
        assert_eq!(positive_root_count("H4"), 60);
        assert_eq!(positive_root_count("I2(5)"), 5);
        assert_eq!(positive_root_count("I2(6)"), 6);
    }

    #[test]
    fn generator_action_is_an_involution() {
        let sys = CoxeterSystem::from_type("H3").unwrap();
        let total = 2 * sys.num_positive_roots() as RootIndex;
        for i in 0..sys.rank() {
            for x in 0..total {
                assert_eq!(sys.apply_generator(i, sys.apply_generator(i, x)), x);
            }
        }
    }

    #[test]
    fn reflection_negates_its_own_root_and_is_an_involution() {
        let sys = CoxeterSystem::from_type("B3").unwrap();
        let count = sys.num_positive_roots();
        for t in 0..count as RootIndex {
            let perm = sys.refl_perm(t);
            assert_eq!(perm[t as usize], sys.negate(t));
            for x in 0..2 * count {
                assert_eq!(perm[perm[x] as usize] as usize, x);
            }
        }
    }

    #[test]
    fn infinite_group_is_rejected() {
        // All bonds 6 on rank 3 describes a hyperbolic (infinite) group.
        let m = CoxeterMatrix::new(3, vec![1, 6, 6, 6, 1, 6, 6, 6, 1]).unwrap();
        match CoxeterSystem::from_matrix_with_cap(m, 500) {
            Err(CoxeterError::OrbitBoundExceeded { cap }) => assert_eq!(cap, 500),
            other => panic!("expected orbit bound error, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn simple_reflection_fixes_other_positive_roots_up_to_sign() {
        let sys = CoxeterSystem::from_type("A3").unwrap();
        let count = sys.num_positive_roots() as RootIndex;
        for i in 0..sys.rank() {
            let mut flipped = 0;
            for t in 0..count {
                if !sys.is_positive(sys.apply_generator(i, t)) {
                    flipped += 1;
                    assert_eq!(t as usize, i);
                }
            }
            assert_eq!(flipped, 1);
        }
    }
}
