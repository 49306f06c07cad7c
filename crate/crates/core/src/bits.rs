//! Small fixed-width bit sets over `0..n`.

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bits {
    words: Vec<u64>,
}

impl Bits {
    pub fn new(n: usize) -> Bits {
        Bits { words: vec![0; n.div_ceil(64).max(1)] }
    }

    pub fn full(n: usize) -> Bits {
        let mut b = Bits::new(n);
        for i in 0..n {
            b.insert(i);
        }
        b
    }

    pub fn from_slice(n: usize, items: &[usize]) -> Bits {
        let mut b = Bits::new(n);
        for &i in items {
            b.insert(i);
        }
        b
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn and(&self, o: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&o.words).map(|(a, b)| a & b).collect() }
    }

    pub fn or(&self, o: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&o.words).map(|(a, b)| a | b).collect() }
    }

    pub fn minus(&self, o: &Bits) -> Bits {
        Bits { words: self.words.iter().zip(&o.words).map(|(a, b)| a & !b).collect() }
    }

    pub fn is_subset(&self, o: &Bits) -> bool {
        self.words.iter().zip(&o.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, o: &Bits) -> bool {
        self.words.iter().zip(&o.words).any(|(a, b)| a & b != 0)
    }

    pub fn and_count(&self, o: &Bits) -> usize {
        self.words.iter().zip(&o.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let t = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + t)
                }
            })
        })
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Neighbourhood bit sets of a graph.
pub fn neighborhoods(g: &crate::graph::Graph) -> Vec<Bits> {
    (0..g.n()).map(|v| Bits::from_slice(g.n(), g.neighbors(v))).collect()
}
