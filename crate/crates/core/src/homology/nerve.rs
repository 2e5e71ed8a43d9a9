use std::collections::BTreeMap;

use crate::fincat::FinCategory;

/// Truncated nerve of a finite category: nondegenerate simplices only.
/// A k-simplex is a chain of k composable non-identity morphisms; 0-simplices
/// are the objects.
#[derive(Clone, Debug)]
pub struct TruncatedNerve {
    pub dim: usize,
    /// chains[k] for k >= 1 lists k-simplices in lexicographic order
    pub chains: Vec<Vec<Vec<usize>>>,
    pub n_objects: usize,
}

/// Enumerate nondegenerate simplices up to dimension `dim`.
pub fn nerve(cat: &FinCategory, dim: usize) -> TruncatedNerve {
    let non_id: Vec<usize> = (0..cat.n_morphisms()).filter(|&m| !cat.is_identity(m)).collect();
    let mut chains: Vec<Vec<Vec<usize>>> = Vec::new();
    if dim >= 1 {
        chains.push(non_id.iter().map(|&m| vec![m]).collect());
        for _ in 2..=dim {
            let prev = chains.last().unwrap();
            let mut next = Vec::new();
            for c in prev {
                let last_tgt = cat.tgt(*c.last().unwrap());
                for &m in &non_id {
                    if cat.src(m) == last_tgt {
                        let mut ext = c.clone();
                        ext.push(m);
                        next.push(ext);
                    }
                }
            }
            chains.push(next);
        }
    }
    TruncatedNerve { dim, chains, n_objects: cat.n_objects() }
}

impl TruncatedNerve {
    /// Number of nondegenerate simplices per degree, degrees 0..=dim.
    pub fn sizes(&self) -> Vec<usize> {
        let mut out = vec![self.n_objects];
        out.extend(self.chains.iter().map(|c| c.len()));
        out
    }

    pub fn simplices(&self, k: usize) -> usize {
        if k == 0 {
            self.n_objects
        } else {
            self.chains.get(k - 1).map_or(0, |c| c.len())
        }
    }

    /// The i-th face of a k-simplex (k >= 1): None when the face collapses to
    /// a degenerate simplex (an identity appears after composing).
    pub fn face(&self, cat: &FinCategory, chain: &[usize], i: usize) -> Option<Vec<usize>> {
        let k = chain.len();
        debug_assert!(i <= k);
        if k == 1 {
            // faces are 0-simplices; handled by the caller
            unreachable!("face of a 1-simplex is an object");
        }
        if i == 0 {
            return Some(chain[1..].to_vec());
        }
        if i == k {
            return Some(chain[..k - 1].to_vec());
        }
        // compose chain[i-1] then chain[i]
        let composed = cat.compose(chain[i], chain[i - 1]).expect("chain is composable");
        if cat.is_identity(composed) {
            return None;
        }
        let mut out = Vec::with_capacity(k - 1);
        out.extend_from_slice(&chain[..i - 1]);
        out.push(composed);
        out.extend_from_slice(&chain[i + 1..]);
        Some(out)
    }

    /// Index lookup table for degree k >= 1.
    pub fn index_of(&self, k: usize) -> BTreeMap<&[usize], usize> {
        self.chains[k - 1]
            .iter()
            .enumerate()
            .map(|(i, c)| (c.as_slice(), i))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{cyclic_group, delta, terminal};

    #[test]
    fn nerve_of_delta1() {
        let n = nerve(&delta(1), 3);
        assert_eq!(n.sizes(), vec![2, 1, 0, 0]);
    }

    #[test]
    fn nerve_of_bg2() {
        let n = nerve(&cyclic_group(2), 3);
        assert_eq!(n.sizes(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn nerve_of_terminal() {
        let n = nerve(&terminal(), 5);
        assert_eq!(n.sizes(), vec![1, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn nerve_of_delta3() {
        let n = nerve(&delta(3), 4);
        assert_eq!(n.sizes(), vec![4, 6, 4, 1, 0]);
    }
}
