//! Dense vertex sets packed into 64-bit words.
//!
//! Every instance this crate targets has at most a few dozen vertices, so a
//! row of a [`BitMatrix`] is usually a single word and set algebra reduces to
//! one machine instruction.

const WORD: usize = 64;

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD).max(1)
}

/// A square bit matrix; row `i` is the vertex set attached to vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitMatrix {
    size: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(size: usize) -> Self {
        let words = words_for(size);
        BitMatrix {
            size,
            words,
            data: vec![0; size * words],
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.words..(i + 1) * self.words]
    }

    #[inline]
    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.words..(i + 1) * self.words]
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / WORD] >> (j % WORD) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / WORD] |= 1 << (j % WORD);
    }

    #[inline]
    pub fn clear(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / WORD] &= !(1 << (j % WORD));
    }

    /// `row(dst) |= row(src)`.
    #[inline]
    pub fn or_row_into(&mut self, src: usize, dst: usize) {
        if src == dst {
            return;
        }
        for w in 0..self.words {
            let v = self.data[src * self.words + w];
            self.data[dst * self.words + w] |= v;
        }
    }

    /// `row(dst) |= bits`.
    #[inline]
    pub fn or_into_row(&mut self, dst: usize, bits: &[u64]) {
        for (d, b) in self.row_mut(dst).iter_mut().zip(bits) {
            *d |= *b;
        }
    }

    pub fn ones(&self, i: usize) -> Ones<'_> {
        Ones::new(self.row(i))
    }
}

/// Iterator over the set bits of a word slice, ascending.
pub struct Ones<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> Ones<'a> {
    pub fn new(words: &'a [u64]) -> Self {
        Ones {
            words,
            index: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

#[inline]
pub(crate) fn and_into(out: &mut [u64], a: &[u64], b: &[u64]) {
    for ((o, x), y) in out.iter_mut().zip(a).zip(b) {
        *o = x & y;
    }
}

#[inline]
pub(crate) fn intersects3(a: &[u64], b: &[u64], c: &[u64]) -> bool {
    a.iter().zip(b).zip(c).any(|((x, y), z)| x & y & z != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ones_iterates_across_words() {
        let mut m = BitMatrix::new(130);
        for j in [0, 5, 63, 64, 100, 129] {
            m.set(3, j);
        }
        assert_eq!(m.ones(3).collect::<Vec<_>>(), vec![0, 5, 63, 64, 100, 129]);
        m.clear(3, 64);
        assert!(!m.get(3, 64));
        assert_eq!(m.words(), 3);
    }

    #[test]
    fn row_union() {
        let mut m = BitMatrix::new(4);
        m.set(0, 1);
        m.set(1, 2);
        m.or_row_into(1, 0);
        assert!(m.get(0, 1) && m.get(0, 2));
        assert!(!m.get(1, 1));
    }
}
