use std::collections::VecDeque;

use super::{Simplex, SimplicialComplex};
use crate::error::{Error, Result};

/// A finite partial order on `0..len`, stored as its cover relation (transitive reduction)
/// together with the strict down-sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    len: usize,
    covers: Vec<(usize, usize)>,
    below: Vec<Vec<usize>>,
}

impl Poset {
    /// Build from any generating set of `(lower, higher)` pairs. The relation must be acyclic.
    pub fn from_relations(len: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut up: Vec<Vec<usize>> = vec![Vec::new(); len];
        let mut indegree = vec![0usize; len];
        for (lo, hi) in pairs {
            assert!(lo < len && hi < len, "relation pair out of range");
            if lo == hi {
                return Err(Error::CyclicRelation(lo));
            }
            up[lo].push(hi);
        }
        for u in &mut up {
            u.sort_unstable();
            u.dedup();
        }
        for u in &up {
            for &h in u {
                indegree[h] += 1;
            }
        }
        let mut queue: VecDeque<usize> = (0..len).filter(|&i| indegree[i] == 0).collect();
        let mut topo = Vec::with_capacity(len);
        while let Some(x) = queue.pop_front() {
            topo.push(x);
            for &h in &up[x] {
                indegree[h] -= 1;
                if indegree[h] == 0 {
                    queue.push_back(h);
                }
            }
        }
        if topo.len() < len {
            let stuck = (0..len).find(|&i| indegree[i] > 0).unwrap_or(0);
            return Err(Error::CyclicRelation(stuck));
        }

        let words = len.div_ceil(64);
        let mut below_bits = vec![vec![0u64; words]; len];
        let mut direct_below: Vec<Vec<usize>> = vec![Vec::new(); len];
        for (lo, u) in up.iter().enumerate() {
            for &h in u {
                direct_below[h].push(lo);
            }
        }
        for &x in &topo {
            let mut bits = vec![0u64; words];
            for &c in &direct_below[x] {
                bits[c / 64] |= 1 << (c % 64);
                for (b, cb) in bits.iter_mut().zip(&below_bits[c]) {
                    *b |= cb;
                }
            }
            below_bits[x] = bits;
        }
        let below: Vec<Vec<usize>> = below_bits.iter().map(|b| bits_to_vec(b)).collect();

        let mut covers = Vec::new();
        for x in 0..len {
            let mut shadowed = vec![0u64; words];
            for &c in &below[x] {
                for (s, cb) in shadowed.iter_mut().zip(&below_bits[c]) {
                    *s |= cb;
                }
            }
            for &c in &below[x] {
                if shadowed[c / 64] & (1 << (c % 64)) == 0 {
                    covers.push((c, x));
                }
            }
        }
        covers.sort_unstable();
        Ok(Poset { len, covers, below })
    }

    /// Face poset of a complex; element `i` is the simplex with canonical id `i`.
    pub fn face_poset(k: &SimplicialComplex) -> Self {
        let pairs = k.simplices().iter().enumerate().flat_map(|(i, s)| {
            s.facets().into_iter().map(move |f| (k.id_of(&f).expect("face-closed"), i))
        });
        Self::from_relations(k.len(), pairs.collect::<Vec<_>>()).expect("face relation is acyclic")
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Cover pairs `(lower, higher)`, sorted.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Elements strictly below `x`, sorted.
    pub fn below(&self, x: usize) -> &[usize] {
        &self.below[x]
    }

    pub fn less_than(&self, a: usize, b: usize) -> bool {
        self.below[b].binary_search(&a).is_ok()
    }

    /// Order complex: vertices are the elements, simplices the nonempty chains.
    pub fn order_complex(&self) -> SimplicialComplex {
        self.order_complex_skeleton(usize::MAX)
    }

    /// Chains with at most `max_dim + 1` elements.
    pub fn order_complex_skeleton(&self, max_dim: usize) -> SimplicialComplex {
        let chains = enumerate_chains(self.len, |x| &self.below[x], max_dim.saturating_add(1));
        SimplicialComplex::closure(self.len, chains)
    }
}

fn bits_to_vec(bits: &[u64]) -> Vec<usize> {
    let mut out = Vec::new();
    for (w, &word) in bits.iter().enumerate() {
        let mut word = word;
        while word != 0 {
            let t = word.trailing_zeros() as usize;
            out.push(w * 64 + t);
            word &= word - 1;
        }
    }
    out
}

/// Every chain of length at most `max_len`, each produced once (by descending from its top).
pub(crate) fn enumerate_chains<'a, F>(len: usize, below: F, max_len: usize) -> Vec<Simplex>
where
    F: Fn(usize) -> &'a [usize],
{
    let mut out = Vec::new();
    let mut chain = Vec::new();
    for top in 0..len {
        chain.clear();
        chain.push(top);
        descend(&below, &mut chain, max_len, &mut out);
    }
    out
}

fn descend<'a, F>(below: &F, chain: &mut Vec<usize>, max_len: usize, out: &mut Vec<Simplex>)
where
    F: Fn(usize) -> &'a [usize],
{
    out.push(Simplex::new(chain.iter().copied()));
    if chain.len() >= max_len {
        return;
    }
    let bottom = *chain.last().expect("nonempty chain");
    for &next in below(bottom) {
        chain.push(next);
        descend(below, chain, max_len, out);
        chain.pop();
    }
}
