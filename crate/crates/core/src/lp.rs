//! Exact phase-one simplex with Bland's rule.
//!
//! Only feasibility questions are needed by the rest of the crate: find a
//! point of `{x : a_i . x >= b_i}` with `x` free, or prove there is none.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::RationalVector;

/// One inequality `normal . x >= rhs`.
#[derive(Clone, Debug)]
pub struct Inequality {
    pub normal: RationalVector,
    pub rhs: BigRational,
}

impl Inequality {
    pub fn new(normal: RationalVector, rhs: BigRational) -> Self {
        Self { normal, rhs }
    }

    pub fn is_satisfied_by(&self, x: &RationalVector) -> bool {
        self.normal.dot(x) >= self.rhs
    }
}

struct Tableau {
    /// constraint rows; last entry of each row is the right-hand side
    rows: Vec<Vec<BigRational>>,
    /// reduced costs; last entry is minus the objective value
    cost: Vec<BigRational>,
    basis: Vec<usize>,
}

impl Tableau {
    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        for x in self.rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = std::mem::take(&mut self.rows[r]);
        let eliminate = |row: &mut Vec<BigRational>| {
            if row[c].is_zero() {
                return;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        };
        for row in self.rows.iter_mut() {
            if !row.is_empty() {
                eliminate(row);
            }
        }
        eliminate(&mut self.cost);
        self.rows[r] = pivot_row;
        self.basis[r] = c;
    }

    /// Runs the simplex method to optimality. Bland's rule (smallest entering
    /// index, smallest leaving basic index on ratio ties) rules out cycling.
    fn optimize(&mut self) {
        let width = self.cost.len() - 1;
        loop {
            let Some(c) = (0..width).find(|&j| self.cost[j].is_negative()) else {
                return;
            };
            let mut best: Option<(usize, BigRational)> = None;
            for (i, row) in self.rows.iter().enumerate() {
                if !row[c].is_positive() {
                    continue;
                }
                let ratio = &row[width] / &row[c];
                let better = match &best {
                    None => true,
                    Some((bi, br)) => ratio < *br || (ratio == *br && self.basis[i] < self.basis[*bi]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            // The phase-one objective is bounded below by zero, so an
            // entering column always has a positive entry.
            let (r, _) = best.expect("phase-one problem is bounded");
            self.pivot(r, c);
        }
    }
}

/// Finds some `x` with `c.normal . x >= c.rhs` for every constraint, or
/// returns `None` if the system is infeasible. `dim` is the length of `x`.
pub fn find_feasible_point(dim: usize, constraints: &[Inequality]) -> Option<RationalVector> {
    let m = constraints.len();
    if m == 0 {
        return Some(RationalVector::zeros(dim));
    }
    // columns: u (dim) | v (dim) | surplus (m) | artificial (m) | rhs
    let art = 2 * dim + m;
    let width = art + m;
    let mut rows = Vec::with_capacity(m);
    for (i, c) in constraints.iter().enumerate() {
        assert_eq!(c.normal.len(), dim, "constraint of wrong length");
        let mut row = vec![BigRational::zero(); width + 1];
        for (j, a) in c.normal.iter().enumerate() {
            row[j] = a.clone();
            row[dim + j] = -a.clone();
        }
        row[2 * dim + i] = -BigRational::one();
        row[width] = c.rhs.clone();
        if c.rhs.is_negative() {
            for x in row.iter_mut() {
                *x = -x.clone();
            }
        }
        row[art + i] = BigRational::one();
        rows.push(row);
    }
    let mut cost = vec![BigRational::zero(); width + 1];
    for row in &rows {
        for (j, x) in row.iter().enumerate() {
            if j < art || j == width {
                cost[j] -= x;
            }
        }
    }
    let mut t = Tableau {
        rows,
        cost,
        basis: (art..art + m).collect(),
    };
    t.optimize();
    if !t.cost[width].is_zero() {
        return None;
    }
    let mut x = vec![BigRational::zero(); dim];
    for (row, &b) in t.rows.iter().zip(&t.basis) {
        if b < dim {
            x[b] += &row[width];
        } else if b < 2 * dim {
            x[b - dim] -= &row[width];
        }
    }
    let x = RationalVector::new(x);
    debug_assert!(constraints.iter().all(|c| c.is_satisfied_by(&x)));
    Some(x)
}

/// Finds `x` with `n . x > 0` for every normal `n`, i.e. a point of the
/// interior of the cone `{x : n . x >= 0}` when that interior is nonempty.
pub fn strict_cone_point(dim: usize, normals: &[RationalVector]) -> Option<RationalVector> {
    let constraints: Vec<Inequality> = normals
        .iter()
        .map(|n| Inequality::new(n.clone(), BigRational::one()))
        .collect();
    find_feasible_point(dim, &constraints)
}

/// Whether `normals[k] . x >= 0` is implied by the other homogeneous
/// constraints `normals[i] . x >= 0`.
pub fn is_redundant(dim: usize, normals: &[RationalVector], k: usize) -> bool {
    let mut constraints: Vec<Inequality> = normals
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != k)
        .map(|(_, n)| Inequality::new(n.clone(), BigRational::zero()))
        .collect();
    constraints.push(Inequality::new(-&normals[k], BigRational::one()));
    find_feasible_point(dim, &constraints).is_none()
}

/// Drops implied constraints from a homogeneous system, scanning from the
/// back so that the earliest copy of a repeated constraint survives.
pub fn remove_redundant(dim: usize, normals: &[RationalVector]) -> Vec<RationalVector> {
    let mut kept: Vec<RationalVector> = normals.to_vec();
    let mut k = kept.len();
    while k > 0 {
        k -= 1;
        if kept[k].is_zero() || is_redundant(dim, &kept, k) {
            kept.remove(k);
        }
    }
    kept
}
