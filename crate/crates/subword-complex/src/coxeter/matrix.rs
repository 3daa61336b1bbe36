//! Coxeter matrices: validation, the classical type presets, and a plain text format.

use super::CoxeterError;
use std::fmt;

/// Symmetric matrix of bond labels m(i,j) with m(i,i) = 1 and m(i,j) ∈ {2,…,6} off
/// the diagonal. Finiteness of the group is not checked here; the root orbit cap
/// in the system builder catches infinite inputs.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoxeterMatrix {
    n: usize,
    bonds: Vec<u32>, // row-major n×n
}

impl CoxeterMatrix {
    pub fn new(n: usize, bonds: Vec<u32>) -> Result<Self, CoxeterError> {
        let invalid = |msg: String| Err(CoxeterError::InvalidMatrix(msg));
        if n == 0 {
            return invalid("rank must be at least 1".into());
        }
        if bonds.len() != n * n {
            return invalid(format!("expected {} entries for rank {n}", n * n));
        }
        for i in 0..n {
            for j in 0..n {
                let m = bonds[i * n + j];
                if i == j && m != 1 {
                    return invalid(format!("diagonal entry m({},{}) must be 1", i + 1, i + 1));
                }
                if i != j && !(2..=6).contains(&m) {
                    return invalid(format!(
                        "off-diagonal entry m({},{}) = {m} out of range 2..=6",
                        i + 1,
                        j + 1
                    ));
                }
                if bonds[j * n + i] != m {
                    return invalid(format!("matrix not symmetric at ({},{})", i + 1, j + 1));
                }
            }
        }
        Ok(CoxeterMatrix { n, bonds })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn bond(&self, i: usize, j: usize) -> u32 {
        self.bonds[i * self.n + j]
    }

    /// All bonds 2 except the given (i, j, m) pairs.
    fn with_bonds(n: usize, pairs: &[(usize, usize, u32)]) -> Self {
        let mut bonds = vec![2u32; n * n];
        for i in 0..n {
            bonds[i * n + i] = 1;
        }
        for &(i, j, m) in pairs {
            bonds[i * n + j] = m;
            bonds[j * n + i] = m;
        }
        CoxeterMatrix { n, bonds }
    }

    fn path(n: usize, first_bond: u32) -> Self {
        let mut pairs: Vec<(usize, usize, u32)> = (1..n).map(|i| (i - 1, i, 3)).collect();
        if n >= 2 {
            pairs[0].2 = first_bond;
        }
        Self::with_bonds(n, &pairs)
    }

    /// Parse a type label such as `A3`, `B4`, `H3` or `I2(5)`.
    ///
    /// Supported families: A_n (n≥1), B_n/C_n (n≥2), D_n (n≥2), E6/E7/E8,
    /// F4, G2, H3, H4 and I2(m) for m ≤ 6.
    pub fn from_type(label: &str) -> Result<Self, CoxeterError> {
        let label = label.trim();
        let bad = || CoxeterError::InvalidMatrix(format!("unknown Coxeter type `{label}`"));
        if let Some(rest) = label.strip_prefix("I2(") {
            let m: u32 = rest
                .strip_suffix(')')
                .and_then(|s| s.parse().ok())
                .ok_or_else(bad)?;
            if !(2..=6).contains(&m) {
                return Err(bad());
            }
            return Ok(Self::with_bonds(2, &[(0, 1, m)]));
        }
        let (family, rank) = label.split_at(1);
        let n: usize = rank.parse().map_err(|_| bad())?;
        match (family, n) {
            ("A", n) if n >= 1 => Ok(Self::path(n, 3)),
            ("B" | "C", n) if n >= 2 => Ok(Self::path(n, 4)),
            ("D", 2) => Ok(Self::with_bonds(2, &[])),
            ("D", n) if n >= 3 => {
                let mut pairs = vec![(0, 2, 3), (1, 2, 3)];
                pairs.extend((3..n).map(|i| (i - 1, i, 3)));
                Ok(Self::with_bonds(n, &pairs))
            }
            ("E", n @ 6..=8) => {
                // chain 1-3-4-…-n with node 2 attached to node 4 (0-based: 1 to 3)
                let mut pairs = vec![(0, 2, 3), (1, 3, 3)];
                pairs.extend((3..n).map(|i| (i - 1, i, 3)));
                Ok(Self::with_bonds(n, &pairs))
            }
            ("F", 4) => Ok(Self::with_bonds(4, &[(0, 1, 3), (1, 2, 4), (2, 3, 3)])),
            ("G", 2) => Ok(Self::with_bonds(2, &[(0, 1, 6)])),
            ("H", n @ 3..=4) => {
                let mut pairs = vec![(0, 1, 5), (1, 2, 3)];
                if n == 4 {
                    pairs.push((2, 3, 3));
                }
                Ok(Self::with_bonds(n, &pairs))
            }
            _ => Err(bad()),
        }
    }

    /// Parse the plain text format: first line the rank, then n lines of n bond labels.
    pub fn parse(text: &str) -> Result<Self, CoxeterError> {
        let invalid = |msg: &str| CoxeterError::InvalidMatrix(msg.to_string());
        let mut lines = text.lines().filter(|l| !l.trim().is_empty());
        let n: usize = lines
            .next()
            .ok_or_else(|| invalid("empty matrix file"))?
            .trim()
            .parse()
            .map_err(|_| invalid("first line must be the rank"))?;
        let mut bonds = Vec::with_capacity(n * n);
        for _ in 0..n {
            let line = lines.next().ok_or_else(|| invalid("missing matrix row"))?;
            let row: Result<Vec<u32>, _> = line.split_whitespace().map(str::parse).collect();
            let row = row.map_err(|_| invalid("matrix entries must be integers"))?;
            if row.len() != n {
                return Err(invalid("matrix row has wrong length"));
            }
            bonds.extend(row);
        }
        if lines.next().is_some() {
            return Err(invalid("trailing content after matrix rows"));
        }
        Self::new(n, bonds)
    }
}

impl fmt::Display for CoxeterMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.bond(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets() {
        let a3 = CoxeterMatrix::from_type("A3").unwrap();
        assert_eq!(a3.rank(), 3);
        assert_eq!(a3.bond(0, 1), 3);
        assert_eq!(a3.bond(1, 2), 3);
        assert_eq!(a3.bond(0, 2), 2);

        let b2 = CoxeterMatrix::from_type("B2").unwrap();
        assert_eq!(b2.bond(0, 1), 4);
        assert_eq!(CoxeterMatrix::from_type("I2(4)").unwrap(), b2);

        let h3 = CoxeterMatrix::from_type("H3").unwrap();
        assert_eq!(h3.bond(0, 1), 5);

        assert_eq!(CoxeterMatrix::from_type("E8").unwrap().rank(), 8);
        assert!(CoxeterMatrix::from_type("E5").is_err());
        assert!(CoxeterMatrix::from_type("Q3").is_err());
        assert!(CoxeterMatrix::from_type("A0").is_err());
        assert!(CoxeterMatrix::from_type("I2(7)").is_err());
    }

    #[test]
    fn validation_rejects_bad_matrices() {
        assert!(CoxeterMatrix::new(2, vec![1, 3, 3, 2]).is_err()); // bad diagonal
        assert!(CoxeterMatrix::new(2, vec![1, 3, 4, 1]).is_err()); // asymmetric
        assert!(CoxeterMatrix::new(2, vec![1, 7, 7, 1]).is_err()); // bond out of range
        assert!(CoxeterMatrix::new(2, vec![1, 3, 3]).is_err()); // wrong length
    }

    #[test]
    fn text_round_trip() {
        let m = CoxeterMatrix::from_type("B3").unwrap();
        let text = m.to_string();
        assert_eq!(CoxeterMatrix::parse(&text).unwrap(), m);
        assert!(CoxeterMatrix::parse("").is_err());
        assert!(CoxeterMatrix::parse("2\n1 3\n3").is_err());
    }
}
