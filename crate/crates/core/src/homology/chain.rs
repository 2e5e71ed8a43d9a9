use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use super::matrix::IntMatrix;
use super::nerve::{nerve, TruncatedNerve};
use super::snf::smith_normal_form;
use crate::fincat::FinCategory;
use crate::par::par_map;

/// Normalized chains of a truncated nerve: one boundary matrix per degree,
/// with ∂∘∂ = 0 checked on construction.
#[derive(Clone, Debug)]
pub struct ChainComplex {
    /// basis sizes per degree 0..=dim
    pub sizes: Vec<usize>,
    /// boundary[k] is the matrix of ∂_{k+1} : C_{k+1} -> C_k
    pub boundary: Vec<IntMatrix>,
}

impl ChainComplex {
    pub fn of_nerve(cat: &FinCategory, n: &TruncatedNerve) -> ChainComplex {
        let sizes = n.sizes();
        let mut boundary = Vec::new();
        for k in 1..sizes.len() {
            let mut m = IntMatrix::zeros(sizes[k - 1], sizes[k]);
            if k == 1 {
                for (col, chain) in n.chains[0].iter().enumerate() {
                    let f = chain[0];
                    // ∂(f) = tgt - src
                    let t = cat.tgt(f);
                    let s = cat.src(f);
                    m.set(t, col, m.get(t, col) + BigInt::one());
                    m.set(s, col, m.get(s, col) - BigInt::one());
                }
            } else {
                let lookup = n.index_of(k - 1);
                for (col, chain) in n.chains[k - 1].iter().enumerate() {
                    for i in 0..=k {
                        if let Some(face) = n.face(cat, chain, i) {
                            let row = lookup[face.as_slice()];
                            let sign = if i % 2 == 0 { BigInt::one() } else { -BigInt::one() };
                            m.set(row, col, m.get(row, col) + sign);
                        }
                    }
                }
            }
            boundary.push(m);
        }
        let complex = ChainComplex { sizes, boundary };
        debug_assert!(complex.check_dd_zero(), "∂∘∂ must vanish");
        complex
    }

    pub fn check_dd_zero(&self) -> bool {
        self.boundary.windows(2).all(|w| w[0].mul(&w[1]).is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeReport {
    pub degree: usize,
    pub betti: usize,
    /// torsion coefficients as strings, in divisibility order
    pub torsion: Vec<String>,
    /// truncation guarantees correctness for this degree
    pub valid: bool,
}

/// Integral homology of the normalized chains of a truncated nerve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyReport {
    pub degrees: Vec<DegreeReport>,
    pub valid_through: usize,
}

impl HomologyReport {
    pub fn degree(&self, k: usize) -> &DegreeReport {
        &self.degrees[k]
    }

    /// Reduced homology vanishes in every valid degree.
    pub fn reduced_trivial(&self) -> bool {
        self.degrees.iter().filter(|d| d.valid).all(|d| {
            let expected_betti = usize::from(d.degree == 0);
            d.betti == expected_betti && d.torsion.is_empty()
        })
    }

    /// First valid degree with nonzero reduced homology.
    pub fn first_nonzero(&self) -> Option<&DegreeReport> {
        self.degrees.iter().filter(|d| d.valid).find(|d| {
            let expected_betti = usize::from(d.degree == 0);
            d.betti != expected_betti || !d.torsion.is_empty()
        })
    }
}

/// Homology of a category through degree `d`, computed from the nerve
/// truncated at d+1. Degrees 0..=d are reported as valid.
pub fn homology(cat: &FinCategory, d: usize) -> HomologyReport {
    assert!(d >= 1, "homology needs d >= 1");
    let n = nerve(cat, d + 1);
    let complex = ChainComplex::of_nerve(cat, &n);
    // Smith forms of all boundary matrices, one per degree, independent
    let snfs = par_map(complex.boundary.clone(), |m| smith_normal_form(&m));
    let rank = |k: usize| -> usize {
        if k == 0 || k > complex.boundary.len() {
            0
        } else {
            snfs[k - 1].invariant_factors().len()
        }
    };
    let mut degrees = Vec::new();
    for k in 0..=d {
        let betti = complex.sizes[k] - rank(k) - rank(k + 1);
        let torsion: Vec<String> = if k + 1 <= complex.boundary.len() {
            snfs[k]
                .invariant_factors()
                .into_iter()
                .filter(|f| !f.is_one())
                .map(|f| f.to_string())
                .collect()
        } else {
            vec![]
        };
        degrees.push(DegreeReport { degree: k, betti, torsion, valid: k <= d });
    }
    HomologyReport { degrees, valid_through: d }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fincat::{cyclic_group, delta, discrete};

    #[test]
    fn homology_of_delta2_is_a_point() {
        let h = homology(&delta(2), 3);
        assert_eq!(h.degree(0).betti, 1);
        for k in 1..=3 {
            assert_eq!(h.degree(k).betti, 0, "H_{k}");
            assert!(h.degree(k).torsion.is_empty());
        }
        assert!(h.reduced_trivial());
    }

    #[test]
    fn homology_of_bg2() {
        // boundary maps alternate 0 and multiplication by 2
        let h = homology(&cyclic_group(2), 3);
        assert_eq!(h.degree(0).betti, 1);
        assert_eq!(h.degree(1).betti, 0);
        assert_eq!(h.degree(1).torsion, vec!["2".to_string()]);
        assert_eq!(h.degree(2).betti, 0);
        assert!(h.degree(2).torsion.is_empty());
        assert_eq!(h.degree(3).torsion, vec!["2".to_string()]);
    }

    #[test]
    fn homology_counts_components() {
        let h = homology(&discrete(vec!["x".into(), "y".into()]), 1);
        assert_eq!(h.degree(0).betti, 2);
    }
}
