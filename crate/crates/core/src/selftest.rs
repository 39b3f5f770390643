//! The invariant suite behind `bircones selftest`.

use std::time::Instant;

use crate::cone::Cone;
use crate::conics;
use crate::gkz;
use crate::invariants;
use crate::linalg::{int, RationalVector};
use crate::tl::*;
use crate::Result;

/// Largest `n` for the duality and ray-count checks.
pub const DUALITY_MAX_N: usize = 6;
/// Largest `n` for the checks that only pair classes.
pub const PAIRING_MAX_N: usize = 8;

/// Deliberate corruption used as a negative control.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Adds one to `D_0^- . C_0` in the Mori generator table.
    MoriTableEntry,
}

#[derive(Clone, Debug, Default)]
pub struct Options {
    /// Skip chamber counting for `n >= 3`.
    pub quick: bool,
    pub mutation: Option<Mutation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub millis: u128,
}

fn mori_cone_with(n: usize, mutation: Option<Mutation>) -> Result<Cone> {
    let mut gens = Vec::new();
    for curve in mori_curves(n) {
        let mut entries = mori_generator(n, curve)?.into_pairings().into_entries();
        if mutation == Some(Mutation::MoriTableEntry) && curve == MoriCurve::Gamma(0) {
            entries[slot(n, Side::Minus, 0)] += int(1);
        }
        gens.push(RationalVector::new(entries));
    }
    Cone::new(picard_rank(n), gens)
}

fn check(out: &mut Vec<CheckResult>, name: impl Into<String>, f: impl FnOnce() -> Result<(bool, String)>) {
    let start = Instant::now();
    let (passed, detail) = match f() {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    out.push(CheckResult {
        name: name.into(),
        passed,
        detail,
        millis: start.elapsed().as_millis(),
    });
}

fn sorted_ints(rays: &[RationalVector]) -> Vec<Vec<i64>> {
    let mut v = rays_as_i64(rays);
    v.sort();
    v
}

fn golden(rows: &[&[i64]]) -> Vec<Vec<i64>> {
    let mut v: Vec<Vec<i64>> = rows.iter().map(|r| r.to_vec()).collect();
    v.sort();
    v
}

pub const TL2_NEF: [&[i64]; 4] = [&[1, 0, 0], &[1, -1, 0], &[1, 0, -1], &[1, -1, -1]];

pub const TL3_MOV: [&[i64]; 16] = [
    &[1, -1, 0, -2, -1],
    &[1, -2, -1, -1, 0],
    &[1, 0, 0, -2, -1],
    &[2, -2, 0, -3, -2],
    &[2, 0, 0, -3, -2],
    &[2, -3, -2, -2, 0],
    &[1, -2, -1, 0, 0],
    &[2, -3, -2, 0, 0],
    &[1, 0, 0, 0, 0],
    &[1, -1, 0, 0, 0],
    &[1, 0, 0, -1, 0],
    &[1, -1, 0, -1, 0],
    &[3, -4, -2, -4, -2],
    &[3, -4, -2, -3, -2],
    &[3, -3, -2, -4, -2],
    &[3, -3, -2, -3, -2],
];

/// Rays of `Mov_1(TL_3)` in the epsilon basis.
pub const TL3_MOV1_EPSILON: [&[i64]; 9] = [
    &[1, 0, 0, 0, 0],
    &[2, 0, -1, 0, 0],
    &[2, 0, 0, 0, -1],
    &[2, 0, -1, 0, -1],
    &[3, -1, 0, 0, 0],
    &[3, 0, 0, -1, 0],
    &[3, -1, 0, -1, 0],
    &[6, 0, -3, -2, 0],
    &[6, -2, 0, 0, -3],
];

pub fn run(options: &Options) -> Vec<CheckResult> {
    let mut out = Vec::new();

    for n in 2..=DUALITY_MAX_N {
        let mutation = options.mutation;
        check(&mut out, format!("duality nef = dual(NE), n = {n}"), || {
            let dual = mori_cone_with(n, mutation)?.dual()?;
            let ok = nef_cone(n)?.equals(&dual)?;
            Ok((ok, format!("{} nef rays", dual.extremal_rays().len())))
        });
        check(&mut out, format!("duality mov1 = dual(Eff), n = {n}"), || {
            let rays = verified_moving_curve_rays(n)?;
            Ok((true, format!("{} moving curve rays", rays.len())))
        });
        check(&mut out, format!("ray counts, n = {n}"), || {
            let [nef, mov1, eff, ne] = ray_counts(n)?;
            let expected = [expected_nef_ray_count(n), n * n, 2 * n, 3 * n - 2];
            Ok((
                [nef, mov1, eff, ne] == expected,
                format!("eff {eff}, nef {nef}, ne {ne}, mov1 {mov1}"),
            ))
        });
    }

    check(&mut out, "golden nef = mov, n = 2", || {
        let nef = sorted_ints(nef_cone(2)?.extremal_rays());
        let mov = sorted_ints(movable_cone(2)?.extremal_rays());
        Ok((nef == golden(&TL2_NEF) && mov == nef, format!("{} rays", nef.len())))
    });
    check(&mut out, "golden mov, n = 3", || {
        let mov = sorted_ints(movable_cone(3)?.extremal_rays());
        Ok((mov == golden(&TL3_MOV), format!("{} rays", mov.len())))
    });
    check(&mut out, "golden mov1 in epsilon basis, n = 3", || {
        let mut rays = Vec::new();
        for r in moving_curve_cone(3)?.extremal_rays() {
            let c = CurveClass::new(3, r.clone())?;
            rays.push(CurveBasis::Epsilon.coordinates(&c)?);
        }
        let rays = sorted_ints(&rays);
        Ok((rays == golden(&TL3_MOV1_EPSILON), format!("{} rays", rays.len())))
    });

    check(&mut out, "canonical class and -K on Mori generators", || {
        for n in 2..=PAIRING_MAX_N {
            if !alt_canonical_check(n)? || !anticanonical_is_nef_on_generators(n)? {
                return Ok((false, format!("fails at n = {n}")));
            }
            let r = classify_tl(n)?;
            if r.is_fano != (n == 2) || !r.is_weak_fano {
                return Ok((false, format!("classification wrong at n = {n}")));
            }
        }
        Ok((true, format!("n = 2..={PAIRING_MAX_N}")))
    });
    check(&mut out, "moving curve expansions", || {
        for n in 2..=DUALITY_MAX_N {
            for (p, q) in moving_indices(n) {
                let w = moving_curve_ray(n, p, q)?;
                for e in [moving_curve_expansion(n, p, q)?, moving_curve_expansion_plus(n, p, q)?] {
                    if !e.is_effective() || e.evaluate() != w {
                        return Ok((false, format!("fails at n = {n}, (p, q) = ({p}, {q})")));
                    }
                }
            }
        }
        Ok((true, format!("n = 2..={DUALITY_MAX_N}")))
    });
    check(&mut out, "pointed conics", || {
        for n in 2..=PAIRING_MAX_N {
            let k = conics::anticanonical_conics(n)?;
            let r = conics::classify_conics(n)?;
            let restricted = conics::restrict_to_blowup(&k);
            let ok = k == conics::anticanonical_conics_from_tangency(n)?
                && r.is_fano == (n <= 5)
                && r.is_weak_fano == (n <= 6)
                && restricted.coords() == &RationalVector::from_ints(&[5, -4, -4])
                && conics::is_simplicial_subdivision(&conics::eff_cone_conics(n)?, &conics::mori_chambers_conics(n)?)?;
            if !ok {
                return Ok((false, format!("fails at n = {n}")));
            }
        }
        Ok((true, format!("n = 2..={PAIRING_MAX_N}")))
    });
    check(&mut out, "closed-form invariants", || {
        let ok = cox_data(2)?.generator_count() == 7
            && cox_data(3)?.generator_count() == 18
            && invariants::dim_osculating_locus(3, 1)? == 3
            && invariants::osculating_multiplicity(3, 1)? == 3
            && invariants::dim_kontsevich(2, 2, 1)? == 7
            && invariants::section_dimension_rk(4, 2)? == 20
            && invariants::classify_to(5)?.is_fano
            && !invariants::classify_to(6)?.is_fano;
        Ok((ok, String::new()))
    });

    let max_gkz = if options.quick { 2 } else { 3 };
    for n in 2..=max_gkz {
        check(
            &mut out,
            format!("chamber witnesses and insertion order, n = {n}"),
            || {
                let cfg = gkz::VectorConfiguration::tl(n)?;
                let walls = gkz::wall_hyperplanes(&cfg)?;
                let support = cfg.support()?;
                let forward = gkz::chambers(&cfg)?;
                let reversed: Vec<usize> = (0..walls.len()).rev().collect();
                let backward = gkz::chamber_count_with_order(&cfg, &reversed)?;
                let certified = forward.iter().all(|c| gkz::certify(&support, &walls, c));
                Ok((
                    certified && backward == forward.len(),
                    format!("{} chambers", forward.len()),
                ))
            },
        );
    }
    out
}

/// Whether every check passed.
pub fn all_passed(results: &[CheckResult]) -> bool {
    results.iter().all(|r| r.passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corrupted_table_breaks_duality() {
        for n in 2..=4 {
            let honest = mori_cone_with(n, None).unwrap().dual().unwrap();
            let corrupted = mori_cone_with(n, Some(Mutation::MoriTableEntry))
                .unwrap()
                .dual()
                .unwrap();
            assert!(nef_cone(n).unwrap().equals(&honest).unwrap());
            assert!(!nef_cone(n).unwrap().equals(&corrupted).unwrap(), "n = {n}");
        }
    }
}
