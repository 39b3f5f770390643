//! The cone catalog of `TL_n` and its internal cross-checks.

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::picard::*;
use crate::cone::{intersect_all, Cone};
use crate::invariants::section_dimension_rk;
use crate::linalg::RationalVector;
use crate::report::{ClassificationReport, Provenance};
use crate::{Error, Result};

fn divisor_cone(n: usize, classes: impl IntoIterator<Item = DivisorClass>) -> Result<Cone> {
    Cone::new(
        picard_rank(n),
        classes.into_iter().map(DivisorClass::into_coords).collect(),
    )
}

/// All boundary divisors `D_i^±`, `0 <= i <= n-1`, plus side first.
pub fn boundary_divisors(n: usize) -> Result<Vec<DivisorClass>> {
    let mut out = Vec::with_capacity(2 * n);
    for side in [Side::Plus, Side::Minus] {
        for i in 0..n {
            out.push(boundary_divisor(n, side, i)?);
        }
    }
    Ok(out)
}

/// `Eff(TL_n)`, generated by the `2n` boundary divisors.
pub fn effective_cone(n: usize) -> Result<Cone> {
    divisor_cone(n, boundary_divisors(n)?)
}

/// `Nef(TL_n)`, generated by the `N_{p,q}`.
pub fn nef_cone(n: usize) -> Result<Cone> {
    let gens = nef_indices(n)
        .into_iter()
        .map(|(p, q)| nef_generator(n, p, q))
        .collect::<Result<Vec<_>>>()?;
    divisor_cone(n, gens)
}

/// `NE(TL_n)` in pairing coordinates, generated by the `3n - 2` curves
/// `C_l`, `C_j^±`.
pub fn mori_cone(n: usize) -> Result<Cone> {
    let gens = mori_curves(n)
        .into_iter()
        .map(|c| mori_generator(n, c).map(CurveClass::into_pairings))
        .collect::<Result<Vec<_>>>()?;
    Cone::new(picard_rank(n), gens)
}

/// `Mov_1(TL_n)`, the dual of the effective cone in pairing coordinates.
pub fn moving_curve_cone(n: usize) -> Result<Cone> {
    effective_cone(n)?.dual()
}

/// The cone generated by the closed-form classes `W_{p,q}`.
pub fn moving_curve_generators(n: usize) -> Result<Vec<CurveClass>> {
    moving_indices(n)
        .into_iter()
        .map(|(p, q)| moving_curve_ray(n, p, q))
        .collect()
}

/// Checks that the extremal rays of `Mov_1` are exactly the primitive
/// `W_{p,q}`; returns the rays on success.
pub fn verified_moving_curve_rays(n: usize) -> Result<Vec<RationalVector>> {
    let cone = moving_curve_cone(n)?;
    let rays = cone.extremal_rays().to_vec();
    let mut expected = moving_curve_generators(n)?
        .into_iter()
        .map(|w| w.into_pairings().primitive_ray())
        .collect::<Result<Vec<_>>>()?;
    expected.sort();
    expected.dedup();
    if rays != expected {
        return Err(Error::Inconsistent(format!(
            "Mov_1(TL_{n}) has {} extremal rays but {} classes W_{{p,q}} are expected",
            rays.len(),
            expected.len()
        )));
    }
    Ok(rays)
}

/// The degree list: `B_1, B_1, ..., B_{n-1}, B_{n-1}, D_{n-1}^+, D_{n-1}^-,
/// D_0^+..D_{n-2}^+, D_0^-..D_{n-2}^-` (length `4n - 2`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDegreeList {
    pub n: usize,
    pub vectors: Vec<DivisorClass>,
}

pub fn degree_list(n: usize) -> Result<GradedDegreeList> {
    let mut vectors = Vec::with_capacity(4 * n - 2);
    for k in 1..n {
        let b = color_class(n, k)?;
        vectors.push(b.clone());
        vectors.push(b);
    }
    vectors.push(boundary_divisor(n, Side::Plus, n - 1)?);
    vectors.push(boundary_divisor(n, Side::Minus, n - 1)?);
    for side in [Side::Plus, Side::Minus] {
        for j in 0..n - 1 {
            vectors.push(boundary_divisor(n, side, j)?);
        }
    }
    debug_assert_eq!(vectors.len(), 4 * n - 2);
    Ok(GradedDegreeList { n, vectors })
}

/// Largest `n` for which [`movable_cone`] runs; `n = 6` already has 7033 rays.
pub const MOVABLE_MAX_N: usize = 6;

/// `Mov(TL_n) = ∩_i Cone(v_j : j != i)` over the degree list.
pub fn movable_cone(n: usize) -> Result<Cone> {
    if n > MOVABLE_MAX_N {
        return Err(Error::ResourceBound(format!(
            "movable cone limited to n <= {MOVABLE_MAX_N}, got n = {n}"
        )));
    }
    let degrees = degree_list(n)?;
    movable_cone_of(picard_rank(n), &degrees.vectors)
}

/// The drop-one intersection for an arbitrary degree list.
pub fn movable_cone_of(dim: usize, degrees: &[DivisorClass]) -> Result<Cone> {
    let coords: Vec<RationalVector> = degrees.iter().map(|d| d.coords().clone()).collect();
    let mut cones: Vec<Vec<RationalVector>> = (0..coords.len())
        .map(|i| {
            let mut g: Vec<RationalVector> = coords
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, v)| v.primitive_ray())
                .collect::<Result<_>>()?;
            g.sort();
            g.dedup();
            Ok(g)
        })
        .collect::<Result<_>>()?;
    // a repeated degree gives the same drop-one cone twice
    cones.sort();
    cones.dedup();
    let cones: Vec<Cone> = cones
        .into_par_iter()
        .map(|g| {
            let c = Cone::new(dim, g)?;
            c.hrep();
            Ok(c)
        })
        .collect::<Result<_>>()?;
    intersect_all(&cones)
}

/// Column degrees of the Cox ring generators and their count.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxData {
    pub n: usize,
    /// One entry per generator, in the order `s_{D_0^+}, ..., s_{D_{n-1}^+},
    /// s_{D_0^-}, ..., s_{D_{n-1}^-}`, then `r_k` copies of `B_k` for each
    /// `k = 1..n-1`.
    pub columns: Vec<DivisorClass>,
    /// `r_1, ..., r_{n-1}`.
    pub color_multiplicities: Vec<u64>,
}

impl CoxData {
    pub fn generator_count(&self) -> usize {
        self.columns.len()
    }

    /// The `(2n-1) x count` grading matrix, by rows.
    pub fn grading_matrix(&self) -> Vec<Vec<BigInt>> {
        let rows = picard_rank(self.n);
        (0..rows)
            .map(|r| self.columns.iter().map(|c| c.coords()[r].numer().clone()).collect())
            .collect()
    }
}

/// Upper limit on `n` for [`cox_data`]; the generator count grows like the
/// central binomial coefficient squared.
pub const COX_MAX_N: usize = 12;

pub fn cox_data(n: usize) -> Result<CoxData> {
    if n > COX_MAX_N {
        return Err(Error::ResourceBound(format!(
            "Cox grading matrix limited to n <= {COX_MAX_N}"
        )));
    }
    let mut columns = boundary_divisors(n)?;
    let mut mult = Vec::new();
    for k in 1..n {
        let r = section_dimension_rk(n, k)?;
        let b = color_class(n, k)?;
        columns.extend(std::iter::repeat_n(b, r as usize));
        mult.push(r);
    }
    Ok(CoxData {
        n,
        columns,
        color_multiplicities: mult,
    })
}

/// Anticanonical class `-K_{TL_n}`.
pub fn anticanonical_class(n: usize) -> Result<DivisorClass> {
    Ok(canonical_class(n)?.neg())
}

/// Whether `-K` pairs nonnegatively with every Mori generator.
pub fn anticanonical_is_nef_on_generators(n: usize) -> Result<bool> {
    let k = anticanonical_class(n)?;
    for curve in mori_curves(n) {
        let c = mori_generator(n, curve)?;
        if pair(&k, &c)? < num_traits::Zero::zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Fano and weak Fano status of `TL_n`: `-K` in the interior of `Nef`, or
/// in `Nef` and in the interior of `Eff`.
pub fn classify_tl(n: usize) -> Result<ClassificationReport> {
    let nef = nef_cone(n)?;
    let k = anticanonical_class(n)?;
    let eff = effective_cone(n)?;
    let cox = cox_data(n).ok().map(|c| c.generator_count());
    Ok(ClassificationReport {
        n,
        subject: "TL".to_string(),
        is_fano: nef.interior_contains(k.coords())?,
        is_weak_fano: nef.contains(k.coords())? && eff.interior_contains(k.coords())?,
        nef_ray_count: Some(nef.extremal_rays().len()),
        eff_ray_count: Some(eff.extremal_rays().len()),
        cox_generator_count: cox,
        aut_dimension: Some((n * n) as u64),
        fano_index: None,
        aut_group: None,
        provenance: Provenance::Computed,
    })
}

/// `(n^2 + 3n - 2) / 2`
pub fn expected_nef_ray_count(n: usize) -> usize {
    (n * n + 3 * n - 2) / 2
}

/// The `alpha_{i,k}^±` coefficients writing `B_k` as a combination of the
/// boundary divisors: `alpha^+_{i,k} = ik/n` for `i <= n-k-1`, else
/// `(n-k)(n-i)/n`; `alpha^-_{i,k} = i(n-k)/n` for `i <= k-1`, else `k(n-i)/n`.
pub fn color_boundary_coefficients(
    n: usize,
    k: usize,
) -> Result<(Vec<num_rational::BigRational>, Vec<num_rational::BigRational>)> {
    use crate::linalg::frac;
    if k == 0 || k >= n {
        return Err(Error::OutOfRange {
            what: "color index",
            detail: format!("k = {k}, need 1 <= k <= {}", n - 1),
        });
    }
    let (n64, k64) = (n as i64, k as i64);
    let plus = (0..n as i64)
        .map(|i| {
            if i < n64 - k64 {
                frac(i * k64, n64)
            } else {
                frac((n64 - k64) * (n64 - i), n64)
            }
        })
        .collect();
    let minus = (0..n as i64)
        .map(|i| {
            if i < k64 {
                frac(i * (n64 - k64), n64)
            } else {
                frac(k64 * (n64 - i), n64)
            }
        })
        .collect();
    Ok((plus, minus))
}

/// Ray counts of the cone catalog, used by the self checks.
pub fn ray_counts(n: usize) -> Result<[usize; 4]> {
    Ok([
        nef_cone(n)?.extremal_rays().len(),
        moving_curve_cone(n)?.extremal_rays().len(),
        effective_cone(n)?.extremal_rays().len(),
        mori_cone(n)?.generators().len(),
    ])
}

/// Converts small integral ray coordinates for display and tests.
pub fn rays_as_i64(rays: &[RationalVector]) -> Vec<Vec<i64>> {
    rays.iter()
        .map(|r| {
            r.iter()
                .map(|x| x.to_integer().to_i64().expect("small integer coordinate"))
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn sorted(mut v: Vec<Vec<i64>>) -> Vec<Vec<i64>> {
        v.sort();
        v
    }

    #[test]
    fn effective_cone_rays() {
        assert_eq!(
            rays_as_i64(effective_cone(2).unwrap().extremal_rays()),
            sorted(vec![vec![0, 1, 0], vec![1, -2, 0], vec![0, 0, 1], vec![1, 0, -2]])
        );
        for n in 2..=6 {
            assert_eq!(effective_cone(n).unwrap().extremal_rays().len(), 2 * n);
        }
    }

    #[test]
    fn colors_are_effective_with_explicit_coefficients() {
        for n in 2..=8 {
            let eff = effective_cone(n).unwrap();
            for k in 1..n {
                let b = color_class(n, k).unwrap();
                assert!(eff.contains(b.coords()).unwrap());
                let (plus, minus) = color_boundary_coefficients(n, k).unwrap();
                assert!(plus.iter().chain(&minus).all(|a| !a.is_negative()));
                let mut sum = RationalVector::zeros(picard_rank(n));
                for (side, coeffs) in [(Side::Plus, &plus), (Side::Minus, &minus)] {
                    for (i, a) in coeffs.iter().enumerate() {
                        sum = sum.add_scaled(a, boundary_divisor(n, side, i).unwrap().coords());
                    }
                }
                assert_eq!(&sum, b.coords(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn nef_cone_n2_and_counts() {
        assert_eq!(
            rays_as_i64(nef_cone(2).unwrap().extremal_rays()),
            sorted(vec![vec![1, 0, 0], vec![1, -1, 0], vec![1, 0, -1], vec![1, -1, -1]])
        );
        for n in 2..=5 {
            assert_eq!(nef_cone(n).unwrap().extremal_rays().len(), expected_nef_ray_count(n));
        }
        assert_eq!(expected_nef_ray_count(5), 19);
    }

    #[test]
    fn nef_is_dual_of_mori() {
        for n in 2..=4 {
            let dual = mori_cone(n).unwrap().dual().unwrap();
            assert!(nef_cone(n).unwrap().equals(&dual).unwrap(), "n={n}");
        }
    }

    #[test]
    fn mori_cone_n2() {
        let c = mori_cone(2).unwrap();
        assert_eq!(c.generators().len(), 4);
        assert_eq!(c.extremal_rays().len(), 4);
        assert_eq!(mori_cone(3).unwrap().generators().len(), 7);
    }

    #[test]
    fn moving_curve_rays_are_the_w_classes() {
        for n in 2..=5 {
            let rays = verified_moving_curve_rays(n).unwrap();
            assert_eq!(rays.len(), n * n);
        }
    }

    #[test]
    fn degree_list_shape() {
        let d = degree_list(3).unwrap();
        assert_eq!(d.vectors.len(), 10);
        assert_eq!(d.vectors[0], d.vectors[1]);
        assert_eq!(d.vectors[0], color_class(3, 1).unwrap());
        assert_eq!(d.vectors[2], color_class(3, 2).unwrap());
    }

    #[test]
    fn movable_cone_n2_is_nef() {
        let mov = movable_cone(2).unwrap();
        assert!(mov.equals(&nef_cone(2).unwrap()).unwrap());
    }

    #[test]
    fn movable_cone_n3_has_16_rays() {
        let mov = movable_cone(3).unwrap();
        assert_eq!(mov.extremal_rays().len(), 16);
        let nef = nef_cone(3).unwrap();
        let eff = effective_cone(3).unwrap();
        assert!(mov.contains_cone(&nef).unwrap());
        assert!(eff.contains_cone(&mov).unwrap());
    }

    #[test]
    fn cox_counts() {
        assert_eq!(cox_data(2).unwrap().generator_count(), 7);
        let c3 = cox_data(3).unwrap();
        assert_eq!(c3.generator_count(), 18);
        let m = c3.grading_matrix();
        assert_eq!((m.len(), m[0].len()), (5, 18));
        assert!(cox_data(COX_MAX_N + 1).is_err());
        assert!(matches!(movable_cone(MOVABLE_MAX_N + 1), Err(Error::ResourceBound(_))));
    }

    #[test]
    fn classification() {
        let r2 = classify_tl(2).unwrap();
        assert!(r2.is_fano && r2.is_weak_fano);
        let r3 = classify_tl(3).unwrap();
        assert!(!r3.is_fano && r3.is_weak_fano);
        assert_eq!(classify_tl(4).unwrap().aut_dimension, Some(16));
        assert_eq!(
            anticanonical_class(2).unwrap(),
            DivisorClass::from_ints(2, &[3, -2, -2]).unwrap()
        );
    }

    #[test]
    fn anticanonical_nonnegative_on_mori_generators() {
        for n in 2..=8 {
            assert!(anticanonical_is_nef_on_generators(n).unwrap());
        }
    }
}
