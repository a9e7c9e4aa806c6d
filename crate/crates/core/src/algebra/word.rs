use std::fmt;

/// A monomial: a sequence of generator ids. The empty word is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn unit() -> Word {
        Word(Vec::new())
    }

    pub fn letter(g: u8) -> Word {
        Word(vec![g])
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `prefix · middle · suffix` where prefix and suffix are slices of `self`.
    pub fn splice(&self, start: usize, end: usize, middle: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() - (end - start) + middle.0.len());
        v.extend_from_slice(&self.0[..start]);
        v.extend_from_slice(&middle.0);
        v.extend_from_slice(&self.0[end..]);
        Word(v)
    }

    /// Positions where `pattern` occurs as a contiguous subword.
    pub fn occurrences(&self, pattern: &Word) -> Vec<usize> {
        let (n, m) = (self.0.len(), pattern.0.len());
        if m == 0 || m > n {
            return Vec::new();
        }
        (0..=n - m)
            .filter(|&i| self.0[i..i + m] == pattern.0[..])
            .collect()
    }

    pub fn contains(&self, pattern: &Word) -> bool {
        !self.occurrences(pattern).is_empty()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{:?}", self.0)
    }
}
