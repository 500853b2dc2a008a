/// Fixed-width bit set used for clique adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    pub fn new(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut b = Bits::new(len);
        for w in b.words.iter_mut() {
            *w = u64::MAX;
        }
        if len % 64 != 0 {
            if let Some(last) = b.words.last_mut() {
                *last = (1u64 << (len % 64)) - 1;
            }
        }
        b
    }

    pub fn set(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and(&self, other: &Bits) -> Bits {
        Bits {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
            len: self.len,
        }
    }

    /// Clear every index `< i`.
    pub fn clear_below(&mut self, i: usize) {
        let full = i / 64;
        for w in self.words.iter_mut().take(full) {
            *w = 0;
        }
        if full < self.words.len() && i % 64 != 0 {
            self.words[full] &= !((1u64 << (i % 64)) - 1);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut bits = w;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let t = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(64 * k + t)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let mut a = Bits::new(130);
        for i in [0, 63, 64, 129] {
            a.set(i);
        }
        assert_eq!(a.iter().collect::<Vec<_>>(), vec![0, 63, 64, 129]);
        let mut b = a.clone();
        b.clear_below(64);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![64, 129]);
        b.clear_below(65);
        assert_eq!(b.iter().collect::<Vec<_>>(), vec![129]);
        assert_eq!(Bits::full(130).count(), 130);
        assert_eq!(a.and(&Bits::full(130)), a);
    }
}
