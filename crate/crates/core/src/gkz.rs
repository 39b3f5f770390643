//! Chamber counting for rational vector configurations.
//!
//! The walls are the hyperplanes spanned by `d - 1` linearly independent
//! vectors of the configuration. The support `cone(cfg)` is refined by
//! inserting the walls one at a time; every cell is held as an exact
//! V-representation, so a wall splits a cell exactly when the cell has rays
//! strictly on both sides of it.

use num_traits::Signed;
use rayon::prelude::*;

use crate::cone::Cone;
use crate::dd::double_description;
use crate::linalg::{rank_of, RationalMatrix, RationalVector};
use crate::lp::strict_cone_point;
use crate::tl::{boundary_divisor, color_class, picard_rank, Side};
use crate::{Error, Result};

/// Largest `n` accepted by [`chamber_count_tl`]. For `n = 4` the 133 walls
/// in dimension 7 already produce more than 100000 cells after the first 40
/// insertions.
pub const TL_CHAMBER_MAX_N: usize = 3;

/// Cap on the number of live cells during refinement.
pub const DEFAULT_CELL_LIMIT: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorConfiguration {
    dim: usize,
    vectors: Vec<RationalVector>,
}

impl VectorConfiguration {
    /// Deduplicates the vectors as rays. Zero vectors are rejected.
    pub fn new(dim: usize, vectors: Vec<RationalVector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut out = Vec::with_capacity(vectors.len());
        for v in vectors {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: v.len(),
                });
            }
            let p = v.primitive_ray()?;
            if !out.contains(&p) {
                out.push(p);
            }
        }
        Ok(Self { dim, vectors: out })
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.first().map_or(0, |r| r.len());
        Self::new(dim, rows.iter().map(|r| RationalVector::from_ints(r)).collect())
    }

    /// The B-stable prime divisors of `TL_n`: `D_0^+..D_{n-1}^+`,
    /// `D_0^-..D_{n-1}^-` and the colors `B_1..B_{n-1}`.
    pub fn tl(n: usize) -> Result<Self> {
        let mut vectors = Vec::new();
        for side in [Side::Plus, Side::Minus] {
            for i in 0..n {
                vectors.push(boundary_divisor(n, side, i)?.into_coords());
            }
        }
        for k in 1..n {
            vectors.push(color_class(n, k)?.into_coords());
        }
        Self::new(picard_rank(n), vectors)
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    pub fn vectors(&self) -> &[RationalVector] {
        &self.vectors
    }

    pub fn span_dimension(&self) -> usize {
        rank_of(&self.vectors)
    }

    fn check_spanning(&self) -> Result<()> {
        let span = self.span_dimension();
        if span < self.dim {
            return Err(Error::Degenerate {
                span,
                ambient: self.dim,
            });
        }
        Ok(())
    }

    pub fn support(&self) -> Result<Cone> {
        Cone::new(self.dim, self.vectors.clone())
    }
}

fn subsets(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        f(&idx);
        let mut i = k;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Distinct hyperplanes spanned by `d - 1` independent configuration vectors,
/// as primitive normals (first nonzero entry positive), sorted.
pub fn wall_hyperplanes(cfg: &VectorConfiguration) -> Result<Vec<RationalVector>> {
    let d = cfg.dim;
    if cfg.vectors.len() + 1 < d {
        return Err(Error::TooFewVectors {
            needed: d - 1,
            got: cfg.vectors.len(),
        });
    }
    let mut walls = Vec::new();
    subsets(cfg.vectors.len(), d - 1, |idx| {
        let rows: Vec<RationalVector> = idx.iter().map(|&i| cfg.vectors[i].clone()).collect();
        let m = RationalMatrix::with_cols(d, rows).expect("rows share the ambient length");
        let kernel = m.kernel();
        if kernel.len() == 1 {
            walls.push(kernel[0].primitive().expect("kernel vectors are nonzero"));
        }
    });
    walls.sort();
    walls.dedup();
    Ok(walls)
}

/// A full-dimensional cell of the refined support.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chamber {
    /// Sign of each wall (in insertion order) on the interior of the cell.
    pub signs: Vec<i8>,
    /// A point strictly inside the cell.
    pub witness: RationalVector,
}

#[derive(Clone, Debug)]
struct Cell {
    inequalities: Vec<RationalVector>,
    rays: Vec<RationalVector>,
    signs: Vec<i8>,
}

impl Cell {
    fn new(dim: usize, inequalities: Vec<RationalVector>, signs: Vec<i8>) -> Self {
        let g = double_description(dim, &inequalities);
        let mut rays = g.rays;
        for l in g.lineality {
            rays.push(-&l);
            rays.push(l);
        }
        Self {
            inequalities,
            rays,
            signs,
        }
    }

    fn side(&self, h: &RationalVector) -> (bool, bool) {
        let mut pos = false;
        let mut neg = false;
        for r in &self.rays {
            let s = h.dot(r);
            pos |= s.is_positive();
            neg |= s.is_negative();
        }
        (pos, neg)
    }

    fn split(self, dim: usize, h: &RationalVector) -> Vec<Cell> {
        match self.side(h) {
            (true, false) => vec![self.with_sign(1)],
            (false, true) => vec![self.with_sign(-1)],
            (true, true) => [1i8, -1]
                .into_iter()
                .map(|s| {
                    let mut ineq = self.inequalities.clone();
                    ineq.push(if s > 0 { h.clone() } else { -h });
                    let mut signs = self.signs.clone();
                    signs.push(s);
                    Cell::new(dim, ineq, signs)
                })
                .collect(),
            (false, false) => unreachable!("full-dimensional cells are not contained in a hyperplane"),
        }
    }

    fn with_sign(mut self, s: i8) -> Self {
        self.signs.push(s);
        self
    }

    fn witness(&self, dim: usize) -> RationalVector {
        self.rays.iter().fold(RationalVector::zeros(dim), |acc, r| &acc + r)
    }
}

/// Refines `support` by `walls` inserted in the given order and returns the
/// full-dimensional cells, sorted by sign vector.
pub fn refine(support: &Cone, walls: &[RationalVector], cell_limit: usize) -> Result<Vec<Chamber>> {
    let dim = support.ambient_dim();
    if !support.is_full_dimensional() {
        return Err(Error::Degenerate {
            span: support.dimension(),
            ambient: dim,
        });
    }
    let mut cells = vec![Cell::new(dim, support.inequalities(), Vec::new())];
    for h in walls {
        if h.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: h.len(),
            });
        }
        cells = cells.into_par_iter().flat_map_iter(|c| c.split(dim, h)).collect();
        if cells.len() > cell_limit {
            return Err(Error::ResourceBound(format!(
                "more than {cell_limit} cells while refining in dimension {dim}"
            )));
        }
    }
    let mut chambers: Vec<Chamber> = cells
        .into_par_iter()
        .map(|c| Chamber {
            witness: c.witness(dim),
            signs: c.signs,
        })
        .collect();
    chambers.sort_by(|a, b| a.signs.cmp(&b.signs));
    Ok(chambers)
}

/// Whether `witness` is strictly inside `support` and strictly on the side
/// of every wall recorded in `signs`.
pub fn certify(support: &Cone, walls: &[RationalVector], chamber: &Chamber) -> bool {
    let inside = support
        .inequalities()
        .iter()
        .all(|f| f.dot(&chamber.witness).is_positive());
    inside
        && walls.iter().zip(&chamber.signs).all(|(h, &s)| {
            let v = h.dot(&chamber.witness);
            if s > 0 {
                v.is_positive()
            } else {
                v.is_negative()
            }
        })
}

/// Re-derives a chamber's nonemptiness with the exact simplex, independently
/// of the ray bookkeeping used during refinement.
pub fn certify_lp(support: &Cone, walls: &[RationalVector], chamber: &Chamber) -> bool {
    let mut normals = support.inequalities();
    for (h, &s) in walls.iter().zip(&chamber.signs) {
        normals.push(if s > 0 { h.clone() } else { -h });
    }
    strict_cone_point(support.ambient_dim(), &normals).is_some()
}

/// The cells of `cone(cfg)` cut out by the wall arrangement, with walls
/// inserted in the order given by `order` (a permutation of the wall
/// indices).
pub fn chambers_with_order(cfg: &VectorConfiguration, order: &[usize]) -> Result<Vec<Chamber>> {
    cfg.check_spanning()?;
    let walls = wall_hyperplanes(cfg)?;
    let mut seen = vec![false; walls.len()];
    if order.len() != walls.len()
        || order
            .iter()
            .any(|&i| i >= walls.len() || std::mem::replace(&mut seen[i], true))
    {
        return Err(Error::OutOfRange {
            what: "wall insertion order",
            detail: format!("not a permutation of 0..{}", walls.len()),
        });
    }
    let ordered: Vec<RationalVector> = order.iter().map(|&i| walls[i].clone()).collect();
    refine(&cfg.support()?, &ordered, DEFAULT_CELL_LIMIT)
}

pub fn chambers(cfg: &VectorConfiguration) -> Result<Vec<Chamber>> {
    cfg.check_spanning()?;
    let walls = wall_hyperplanes(cfg)?;
    refine(&cfg.support()?, &walls, DEFAULT_CELL_LIMIT)
}

pub fn chamber_count(cfg: &VectorConfiguration) -> Result<usize> {
    Ok(chambers(cfg)?.len())
}

pub fn chamber_count_with_order(cfg: &VectorConfiguration, order: &[usize]) -> Result<usize> {
    Ok(chambers_with_order(cfg, order)?.len())
}

pub fn chamber_count_tl(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "rank parameter n",
            detail: format!("n = {n}, need n >= 2"),
        });
    }
    if n > TL_CHAMBER_MAX_N {
        return Err(Error::ResourceBound(format!(
            "chamber counting is bounded to n <= {TL_CHAMBER_MAX_N}, got n = {n}"
        )));
    }
    chamber_count(&VectorConfiguration::tl(n)?)
}

/// Groups cells into secondary-fan chambers: two cells belong to the same
/// chamber iff the same simplicial cones `cone(basis)` contain them.
pub fn secondary_chamber_count(cfg: &VectorConfiguration, cells: &[Chamber]) -> usize {
    let d = cfg.dim;
    let mut bases: Vec<Vec<RationalVector>> = Vec::new();
    subsets(cfg.vectors.len(), d, |idx| {
        let cols: Vec<RationalVector> = idx.iter().map(|&i| cfg.vectors[i].clone()).collect();
        if rank_of(&cols) == d {
            // facet normals of cone(basis): rows of the inverse
            let m = RationalMatrix::with_cols(d, cols).expect("square").transpose();
            let normals = (0..d)
                .map(|i| {
                    m.transpose()
                        .solve(&RationalVector::unit(d, i))
                        .expect("square")
                        .expect("invertible")
                })
                .collect();
            bases.push(normals);
        }
    });
    let mut signatures: Vec<Vec<bool>> = cells
        .iter()
        .map(|c| {
            bases
                .iter()
                .map(|normals| normals.iter().all(|f| f.dot(&c.witness).is_positive()))
                .collect()
        })
        .collect();
    signatures.sort();
    signatures.dedup();
    signatures.len()
}

/// Number of cells whose witness lies in the interior of `region`.
pub fn count_inside(region: &Cone, cells: &[Chamber]) -> usize {
    let facets = region.inequalities();
    cells
        .iter()
        .filter(|c| facets.iter().all(|f| f.dot(&c.witness).is_positive()))
        .count()
}
