//! Exact subspace bookkeeping over `Q(ω_N)`: incremental echelon bases used
//! for rank, span-membership and closure computations.

use super::cyclotomic::CycNum;
use super::matrix::CycMatrix;

/// Row-echelon basis of a subspace of `Q(ω_N)^dim`. Each stored row is
/// normalized to 1 at its pivot and vanishes at the pivots of rows inserted
/// before it.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    order: u32,
    dim: usize,
    rows: Vec<(usize, Vec<CycNum>)>,
}

impl EchelonBasis {
    pub fn new(order: u32, dim: usize) -> Self {
        Self {
            order,
            dim,
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.dim
    }

    fn reduce(&self, v: &[CycNum]) -> Vec<CycNum> {
        assert_eq!(
            v.len(),
            self.dim,
            "vector length does not match ambient dimension"
        );
        let mut v = v.to_vec();
        for (pivot, row) in &self.rows {
            if v[*pivot].is_zero() {
                continue;
            }
            let f = v[*pivot].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    x.sub_assign(&f.mul(r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[CycNum]) -> bool {
        self.reduce(v).iter().all(CycNum::is_zero)
    }

    /// Adds `v` to the span; returns whether it was independent.
    pub fn insert(&mut self, v: &[CycNum]) -> bool {
        let mut r = self.reduce(v);
        let Some(pivot) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[pivot].inverse().expect("nonzero field element");
        for x in r.iter_mut() {
            if !x.is_zero() {
                *x = x.mul(&inv);
            }
        }
        self.rows.push((pivot, r));
        true
    }

    pub fn basis(&self) -> impl Iterator<Item = &[CycNum]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }

    pub fn order(&self) -> u32 {
        self.order
    }
}

/// Rank of the span of the given vectors.
pub fn rank_of<'a>(
    order: u32,
    dim: usize,
    vectors: impl IntoIterator<Item = &'a [CycNum]>,
) -> usize {
    let mut e = EchelonBasis::new(order, dim);
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

pub fn matrix_rank(m: &CycMatrix) -> usize {
    let cols = m.cols();
    rank_of(m.order(), cols, m.entries().chunks(cols))
}

pub fn flatten(m: &CycMatrix) -> Vec<CycNum> {
    m.entries().to_vec()
}
