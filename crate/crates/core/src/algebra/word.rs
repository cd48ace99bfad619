use std::cmp::Ordering;
use std::fmt;

/// The generator `T_{i,j}^{(k)}` with `k >= 1`.
///
/// Field order gives the monomial order `(k, i, j)` ascending through the
/// derived `Ord`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Generator {
    mode: u16,
    row: u8,
    col: u8,
}

impl Generator {
    pub fn new(row: usize, col: usize, mode: u32) -> Self {
        debug_assert!(row >= 1 && col >= 1 && mode >= 1);
        Generator {
            mode: mode as u16,
            row: row as u8,
            col: col as u8,
        }
    }

    pub fn row(self) -> usize {
        self.row as usize
    }

    pub fn col(self) -> usize {
        self.col as usize
    }

    /// Filtration degree.
    pub fn mode(self) -> u32 {
        self.mode as u32
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T{}{}^({})", self.row, self.col, self.mode)
    }
}

/// A product of generators, read left to right.
///
/// Words compare by degree, then length, then lexicographically; this is
/// the order used for deterministic output.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct Word(pub Vec<Generator>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn single(g: Generator) -> Self {
        Word(vec![g])
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|g| g.mode()).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn symbols(&self) -> &[Generator] {
        &self.0
    }

    /// Non-decreasing in the monomial order.
    pub fn is_normal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.len().cmp(&other.len()))
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (p, g) in self.0.iter().enumerate() {
            if p > 0 {
                write!(f, "*")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

impl FromIterator<Generator> for Word {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Keys of linear combinations: words and tuples of words for tensor powers.
pub trait Monomial: Clone + Ord + Eq + std::hash::Hash + fmt::Debug + Send + Sync {
    fn unit() -> Self;
    fn degree(&self) -> u32;
}

impl Monomial for Word {
    fn unit() -> Self {
        Word::empty()
    }

    fn degree(&self) -> u32 {
        Word::degree(self)
    }
}

impl Monomial for (Word, Word) {
    fn unit() -> Self {
        (Word::empty(), Word::empty())
    }

    fn degree(&self) -> u32 {
        self.0.degree() + self.1.degree()
    }
}

impl Monomial for (Word, Word, Word) {
    fn unit() -> Self {
        (Word::empty(), Word::empty(), Word::empty())
    }

    fn degree(&self) -> u32 {
        self.0.degree() + self.1.degree() + self.2.degree()
    }
}
