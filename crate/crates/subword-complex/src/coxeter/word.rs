use super::element::Element;
use super::system::CoxeterSystem;
use super::CoxeterError;
use std::fmt;
use std::str::FromStr;

/// A word in the generators, stored 0-based. The text form is 1-based:
/// `s2 s3 s1` (bare numbers like `2 3 1` are accepted too).
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }
}

impl FromStr for Word {
    type Err = CoxeterError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            let digits = token.strip_prefix('s').unwrap_or(token);
            let label: usize = digits
                .parse()
                .map_err(|_| CoxeterError::BadWord(format!("cannot read letter `{token}`")))?;
            if label == 0 {
                return Err(CoxeterError::BadWord("generator labels start at 1".into()));
            }
            letters.push(label - 1);
        }
        Ok(Word(letters))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "s{}", s + 1)?;
        }
        Ok(())
    }
}

impl CoxeterSystem {
    pub fn identity(&self) -> Element {
        Element::identity(self)
    }

    pub(crate) fn check_letters(&self, letters: &[usize]) -> Result<(), CoxeterError> {
        match letters.iter().find(|&&s| s >= self.rank()) {
            Some(&s) => Err(CoxeterError::BadWord(format!(
                "letter s{} out of range for rank {}",
                s + 1,
                self.rank()
            ))),
            None => Ok(()),
        }
    }

    /// Product of the letters, leftmost letter outermost: the word `q₁…q_m`
    /// yields q₁·q₂·…·q_m.
    pub fn element_from_word(&self, letters: &[usize]) -> Result<Element, CoxeterError> {
        self.check_letters(letters)?;
        let mut w = Element::identity(self);
        for &s in letters {
            w.right_mul(self, s);
        }
        Ok(w)
    }

    pub fn is_reduced(&self, letters: &[usize]) -> Result<bool, CoxeterError> {
        Ok(self.element_from_word(letters)?.len() == letters.len())
    }

    /// Demazure (0-Hecke) product: fold the word left to right, keeping only
    /// letters that increase the length. The result is the longest element
    /// reachable as a subword.
    pub fn demazure(&self, letters: &[usize]) -> Result<Element, CoxeterError> {
        self.check_letters(letters)?;
        let mut w = Element::identity(self);
        for &s in letters {
            if !w.is_right_descent(self, s) {
                w.right_mul(self, s);
            }
        }
        Ok(w)
    }

    /// The longest element w₀; its length is the number of positive roots.
    pub fn longest_element(&self) -> Element {
        let mut w = Element::identity(self);
        loop {
            match (0..self.rank()).find(|&s| !w.is_right_descent(self, s)) {
                Some(s) => w.right_mul(self, s),
                None => return w,
            }
        }
    }

    /// Some reduced word for the element (first left descent at each step).
    pub fn reduced_word(&self, w: &Element) -> Word {
        let mut rem = w.clone();
        let mut letters = Vec::with_capacity(rem.len());
        while !rem.is_identity() {
            let s = (0..self.rank())
                .find(|&s| rem.is_left_descent(self, s))
                .expect("non-identity element has a left descent");
            letters.push(s);
            rem.left_mul(self, s);
        }
        Word(letters)
    }

    /// The c-sorting word of `w`: scan repeated copies of the standard-order
    /// word `c` and greedily keep every letter that starts a reduced word of
    /// what remains. `c` must list each generator exactly once.
    pub fn sorting_word(&self, w: &Element, c: &[usize]) -> Result<Word, CoxeterError> {
        self.check_coxeter_word(c)?;
        let mut rem = w.clone();
        let mut letters = Vec::with_capacity(rem.len());
        while !rem.is_identity() {
            for &s in c {
                if rem.is_left_descent(self, s) {
                    letters.push(s);
                    rem.left_mul(self, s);
                }
            }
        }
        Ok(Word(letters))
    }

    /// k copies of `c` followed by the c-sorting word of w₀. Subword complexes
    /// over this word and the longest element realise multi-cluster complexes.
    pub fn multicluster_word(&self, c: &[usize], k: usize) -> Result<Word, CoxeterError> {
        let mut letters = Vec::new();
        for _ in 0..k {
            letters.extend_from_slice(c);
        }
        let tail = self.sorting_word(&self.longest_element(), c)?;
        letters.extend_from_slice(tail.letters());
        Ok(Word(letters))
    }

    fn check_coxeter_word(&self, c: &[usize]) -> Result<(), CoxeterError> {
        self.check_letters(c)?;
        let mut seen = vec![false; self.rank()];
        for &s in c {
            if seen[s] {
                return Err(CoxeterError::BadWord(format!(
                    "letter s{} repeats in c",
                    s + 1
                )));
            }
            seen[s] = true;
        }
        if let Some(s) = seen.iter().position(|&b| !b) {
            return Err(CoxeterError::BadWord(format!(
                "letter s{} missing from c",
                s + 1
            )));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_text_round_trip() {
        let w: Word = "s2 s3 s1 s3 s2 s1 s2 s3 s1".parse().unwrap();
        assert_eq!(w.letters(), &[1, 2, 0, 2, 1, 0, 1, 2, 0]);
        assert_eq!(w.to_string(), "s2 s3 s1 s3 s2 s1 s2 s3 s1");
        let bare: Word = "2 3 1".parse().unwrap();
        assert_eq!(bare.letters(), &[1, 2, 0]);
        assert!("s0".parse::<Word>().is_err());
        assert!("sx".parse::<Word>().is_err());
    }

    #[test]
    fn longest_element_and_demazure() {
        let sys = CoxeterSystem::from_type("A3").unwrap();
        let w0 = sys.longest_element();
        assert_eq!(w0.len(), 6);

        // The Demazure product of any word containing a reduced word for w₀
        // in order is w₀ itself.
        let q: Word = "s2 s3 s1 s3 s2 s1 s2 s3 s1".parse().unwrap();
        let folded = sys.demazure(q.letters()).unwrap();
        assert!(folded == w0);

        assert!(!sys.is_reduced(&[0, 0]).unwrap());
        assert!(sys.is_reduced(&[0, 1, 0]).unwrap());
    }

    #[test]
    fn reduced_word_reproduces_the_element() {
        let sys = CoxeterSystem::from_type("H3").unwrap();
        let w0 = sys.longest_element();
        let word = sys.reduced_word(&w0);
        assert_eq!(word.len(), 15);
        let back = sys.element_from_word(word.letters()).unwrap();
        assert!(back == w0);
    }

    #[test]
    fn sorting_word_of_the_longest_element() {
        let sys = CoxeterSystem::from_type("A3").unwrap();
        let sorted = sys
            .sorting_word(&sys.longest_element(), &[0, 1, 2])
            .unwrap();
        assert_eq!(sorted.to_string(), "s1 s2 s3 s1 s2 s1");
    }

    #[test]
    fn multicluster_word_lengths() {
        let a2 = CoxeterSystem::from_type("A2").unwrap();
        assert_eq!(a2.multicluster_word(&[0, 1], 1).unwrap().len(), 5);
        let a3 = CoxeterSystem::from_type("A3").unwrap();
        assert_eq!(a3.multicluster_word(&[0, 1, 2], 1).unwrap().len(), 9);
        assert_eq!(a3.multicluster_word(&[0, 1, 2], 2).unwrap().len(), 12);
        assert!(a3.multicluster_word(&[0, 1], 1).is_err());
        assert!(a3.multicluster_word(&[0, 1, 1], 1).is_err());
    }
}
