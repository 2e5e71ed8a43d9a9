//! Smith normal form by unimodular row and column reduction, with
//! arbitrary-precision entries. Pivoting picks the smallest nonzero absolute
//! value with deterministic row-major tie-breaking.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// U · M · V = D with U, V unimodular and D diagonal with a divisibility
/// chain d₁ | d₂ | …
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> Snf {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    let steps = m.rows.min(m.cols);
    for k in 0..steps {
        'pivot: loop {
            let (pi, pj) = match d.min_abs_pivot(k) {
                Some(p) => p,
                None => break 'pivot, // trailing submatrix is zero
            };
            d.swap_rows(k, pi);
            u.swap_rows(k, pi);
            d.swap_cols(k, pj);
            v.swap_cols(k, pj);

            let mut dirty = false;
            let pivot = d.get(k, k).clone();
            for i in k + 1..d.rows {
                if d.get(i, k).is_zero() {
                    continue;
                }
                let q = -(d.get(i, k) / &pivot);
                d.add_row_multiple(i, k, &q);
                u.add_row_multiple(i, k, &q);
                if !d.get(i, k).is_zero() {
                    dirty = true;
                }
            }
            for j in k + 1..d.cols {
                if d.get(k, j).is_zero() {
                    continue;
                }
                let q = -(d.get(k, j) / &pivot);
                d.add_col_multiple(j, k, &q);
                v.add_col_multiple(j, k, &q);
                if !d.get(k, j).is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                continue 'pivot; // smaller remainders appeared; re-pivot
            }
            // pivot must divide every remaining entry for the chain d₁|d₂|…
            for i in k + 1..d.rows {
                for j in k + 1..d.cols {
                    if !(d.get(i, j) % &pivot).is_zero() {
                        let one = BigInt::one();
                        d.add_row_multiple(k, i, &one);
                        u.add_row_multiple(k, i, &one);
                        continue 'pivot;
                    }
                }
            }
            break 'pivot;
        }
        if d.get(k, k).is_negative() {
            d.negate_row(k);
            u.negate_row(k);
        }
    }
    Snf { u, d, v }
}

impl Snf {
    /// Nonzero diagonal entries, in chain order.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        let n = self.d.rows.min(self.d.cols);
        (0..n).map(|i| self.d.get(i, i).clone()).filter(|x| !x.is_zero()).collect()
    }

    /// Recompute U·M·V, check diagonality, the divisibility chain and
    /// unimodularity of U and V.
    pub fn verify(&self, m: &IntMatrix) -> bool {
        let umv = self.u.mul(m).mul(&self.v);
        if umv != self.d {
            return false;
        }
        for i in 0..self.d.rows {
            for j in 0..self.d.cols {
                if i != j && !self.d.get(i, j).is_zero() {
                    return false;
                }
            }
        }
        let factors = self.invariant_factors();
        for w in factors.windows(2) {
            if (&w[1] % &w[0]).is_zero() {
                continue;
            }
            return false;
        }
        // nonzero entries must precede zero entries on the diagonal
        let n = self.d.rows.min(self.d.cols);
        let mut seen_zero = false;
        for i in 0..n {
            if self.d.get(i, i).is_zero() {
                seen_zero = true;
            } else if seen_zero {
                return false;
            }
        }
        self.u.determinant().abs().is_one() && self.v.determinant().abs().is_one()
    }
}

/// Invariants of a finitely generated abelian group presented as the
/// cokernel of a matrix (generators = rows, relations = columns).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    /// invariant factors > 1, in divisibility order
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }

    pub fn describe(&self) -> Vec<String> {
        let mut out: Vec<String> = self.torsion.iter().map(|t| t.to_string()).collect();
        out.extend(std::iter::repeat("0".to_string()).take(self.free_rank));
        out
    }
}

/// Cokernel invariants of an integer matrix.
pub fn cokernel_invariants(m: &IntMatrix) -> AbelianInvariants {
    let snf = smith_normal_form(m);
    let factors = snf.invariant_factors();
    let free_rank = m.rows - factors.len();
    let torsion = factors.into_iter().filter(|f| !f.is_one()).collect();
    AbelianInvariants { free_rank, torsion }
}
