//! Divisor classes on the one-pointed space of conics in `LG(n, 2n)`.
//!
//! Coordinates are taken in the basis `(H_1, H_sigma2, Delta)`, where `H_1`
//! is the pulled back hyperplane class at the marking and `Delta` is the
//! boundary divisor of reducible conics with the marking on one component.

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::cone::Cone;
use crate::linalg::{frac, int, RationalMatrix, RationalVector};
use crate::report::{ClassificationReport, Provenance};
use crate::{Error, Result};

pub const CONIC_BASIS_LABELS: [&str; 3] = ["H1", "Hsigma2", "Delta"];
pub const BLOWUP_BASIS_LABELS: [&str; 3] = ["H", "Ep", "Eq"];

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "rank parameter n",
            detail: format!("n = {n}, need n >= 2"),
        });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ConicDivClass {
    pub n: usize,
    coords: RationalVector,
}

impl ConicDivClass {
    pub fn new(n: usize, coords: RationalVector) -> Result<Self> {
        check_n(n)?;
        if coords.len() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: coords.len(),
            });
        }
        Ok(Self { n, coords })
    }

    fn from_parts(n: usize, parts: [BigRational; 3]) -> Self {
        Self {
            n,
            coords: RationalVector::new(parts.into()),
        }
    }

    pub fn coords(&self) -> &RationalVector {
        &self.coords
    }

    pub fn add(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            coords: &self.coords + &other.coords,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self {
            n: self.n,
            coords: &self.coords - &other.coords,
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self {
            n: self.n,
            coords: self.coords.scale(q),
        }
    }
}

/// A class on `Bl_{p,q} Q^3` in the basis `(H, E_p, E_q)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlowupClass {
    coords: RationalVector,
}

impl BlowupClass {
    pub fn new(coords: RationalVector) -> Result<Self> {
        if coords.len() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: coords.len(),
            });
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &RationalVector {
        &self.coords
    }

    /// gcd of the (integral) coefficients; `None` for non-integral classes.
    pub fn divisibility(&self) -> Option<num_bigint::BigInt> {
        if !self.coords.is_integral() {
            return None;
        }
        Some(
            self.coords
                .iter()
                .fold(num_bigint::BigInt::zero(), |g, c| g.gcd(c.numer())),
        )
    }
}

pub fn marked_hyperplane_class(n: usize) -> Result<ConicDivClass> {
    check_n(n)?;
    Ok(ConicDivClass::from_parts(n, [int(1), int(0), int(0)]))
}

pub fn sigma2_class(n: usize) -> Result<ConicDivClass> {
    check_n(n)?;
    Ok(ConicDivClass::from_parts(n, [int(0), int(1), int(0)]))
}

pub fn boundary_class(n: usize) -> Result<ConicDivClass> {
    check_n(n)?;
    Ok(ConicDivClass::from_parts(n, [int(0), int(0), int(1)]))
}

/// Conics tangent to a fixed hyperplane section: `T = H_sigma2 + Delta/2`.
pub fn tangency_class(n: usize) -> Result<ConicDivClass> {
    check_n(n)?;
    Ok(ConicDivClass::from_parts(n, [int(0), int(1), frac(1, 2)]))
}

/// `D_unb = H_sigma2 - Delta/2`.
pub fn unbalanced_class(n: usize) -> Result<ConicDivClass> {
    check_n(n)?;
    Ok(ConicDivClass::from_parts(n, [int(0), int(1), frac(-1, 2)]))
}

/// `psi_1 = -H_1 + T/2`
pub fn psi_class(n: usize) -> Result<ConicDivClass> {
    Ok(tangency_class(n)?.scale(&frac(1, 2)).sub(&marked_hyperplane_class(n)?))
}

/// `Eff = <H_1, Delta, D_unb>`
pub fn eff_cone_conics(n: usize) -> Result<Cone> {
    Cone::new(
        3,
        vec![
            marked_hyperplane_class(n)?.coords,
            boundary_class(n)?.coords,
            unbalanced_class(n)?.coords,
        ],
    )
}

/// `Nef = <H_1, H_sigma2, T>`
pub fn nef_cone_conics(n: usize) -> Result<Cone> {
    Cone::new(
        3,
        vec![
            marked_hyperplane_class(n)?.coords,
            sigma2_class(n)?.coords,
            tangency_class(n)?.coords,
        ],
    )
}

/// Every effective non-nef class fails to be movable, so `Mov = Nef`.
pub fn movable_cone_conics(n: usize) -> Result<Cone> {
    nef_cone_conics(n)
}

/// `-K` in the `(H_1, H_sigma2, Delta)` basis.
pub fn anticanonical_conics(n: usize) -> Result<ConicDivClass> {
    check_n(n)?;
    if n == 2 {
        return Ok(ConicDivClass::from_parts(n, [int(1), frac(5, 2), frac(3, 4)]));
    }
    let n_i = n as i64;
    Ok(ConicDivClass::from_parts(
        n,
        [int(1), frac(n_i + 2, 2), frac(6 - n_i, 4)],
    ))
}

/// `-K` assembled from the `T` form: `H_1 + H_sigma2 + 3/2 T` for `n = 2`,
/// `H_1 + (n-2) H_sigma2 + (6-n)/2 T` otherwise.
pub fn anticanonical_conics_from_tangency(n: usize) -> Result<ConicDivClass> {
    check_n(n)?;
    let (s, t) = if n == 2 {
        (int(1), frac(3, 2))
    } else {
        let n_i = n as i64;
        (int(n_i - 2), frac(6 - n_i, 2))
    };
    Ok(marked_hyperplane_class(n)?
        .add(&sigma2_class(n)?.scale(&s))
        .add(&tangency_class(n)?.scale(&t)))
}

fn restriction_matrix() -> RationalMatrix {
    // columns are the images of H_1, H_sigma2, Delta
    RationalMatrix::from_int_rows(&[&[1, 1, 2], &[0, -1, -2], &[0, -1, -2]]).expect("rectangular")
}

/// Pullback to a fibre `Bl_{p,q} Q^3`.
pub fn restrict_to_blowup(c: &ConicDivClass) -> BlowupClass {
    BlowupClass {
        coords: restriction_matrix()
            .mul_vec(&c.coords)
            .expect("length 3 by construction"),
    }
}

/// `Nef`, `<H_1, T, Delta>` and `<H_1, H_sigma2, D_unb>`.
pub fn mori_chambers_conics(n: usize) -> Result<Vec<Cone>> {
    let h = marked_hyperplane_class(n)?.coords;
    Ok(vec![
        nef_cone_conics(n)?,
        Cone::new(3, vec![h.clone(), tangency_class(n)?.coords, boundary_class(n)?.coords])?,
        Cone::new(3, vec![h, sigma2_class(n)?.coords, unbalanced_class(n)?.coords])?,
    ])
}

fn det3(rows: &[RationalVector]) -> BigRational {
    let a = |i: usize, j: usize| &rows[i][j];
    a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0))
        + a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0))
}

/// Whether simplicial cones in dimension 3 subdivide `target`: each piece
/// lies in `target`, pieces have pairwise disjoint interiors, and the
/// volumes of their slices by a positive functional add up.
pub fn is_simplicial_subdivision(target: &Cone, pieces: &[Cone]) -> Result<bool> {
    let simplicial = |c: &Cone| c.ambient_dim() == 3 && c.is_full_dimensional() && c.extremal_rays().len() == 3;
    if !simplicial(target) || !pieces.iter().all(simplicial) {
        return Ok(false);
    }
    for p in pieces {
        if !target.contains_cone(p)? {
            return Ok(false);
        }
    }
    for (i, a) in pieces.iter().enumerate() {
        for b in &pieces[i + 1..] {
            if a.intersect(b)?.is_full_dimensional() {
                return Ok(false);
            }
        }
    }
    // a functional positive on the target's rays slices every piece
    let functional = target
        .inequalities()
        .into_iter()
        .fold(RationalVector::zeros(3), |acc, f| &acc + &f);
    let volume = |c: &Cone| -> BigRational {
        let rows: Vec<RationalVector> = c
            .extremal_rays()
            .iter()
            .map(|r| r.scale(&(int(1) / functional.dot(r))))
            .collect();
        det3(&rows).abs()
    };
    let total: BigRational = pieces.iter().map(volume).sum();
    Ok(total == volume(target))
}

pub fn classify_conics(n: usize) -> Result<ClassificationReport> {
    let k = anticanonical_conics(n)?;
    let nef = nef_cone_conics(n)?;
    let eff = eff_cone_conics(n)?;
    let is_fano = nef.interior_contains(k.coords())?;
    let is_weak_fano = nef.contains(k.coords())? && eff.interior_contains(k.coords())?;
    let fano_index = if is_fano {
        restrict_to_blowup(&k)
            .divisibility()
            .and_then(|g| u64::try_from(g).ok())
    } else {
        None
    };
    Ok(ClassificationReport {
        n,
        subject: "conics".to_string(),
        is_fano,
        is_weak_fano,
        nef_ray_count: Some(nef.extremal_rays().len()),
        eff_ray_count: Some(eff.extremal_rays().len()),
        cox_generator_count: None,
        aut_dimension: None,
        fano_index,
        aut_group: Some("PSp(2n)".to_string()),
        provenance: Provenance::Computed,
    })
}
