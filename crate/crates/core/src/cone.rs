//! Rational polyhedral cones given by generators.
//!
//! A [`Cone`] stores its generators as primitive integer rays. The facet
//! description is computed on demand by double description and cached.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::OnceLock;

use num_traits::{Signed, Zero};

use crate::dd::{double_description, Generators};
use crate::linalg::{rank_of, RationalVector};
use crate::lp;
use crate::{Error, Result};

/// Facet description `{x : e . x = 0 for e in equations, f . x >= 0 for f in facets}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HRep {
    /// Basis of the orthogonal complement of the span of the cone.
    pub equations: Vec<RationalVector>,
    /// Irredundant inner facet normals (canonical modulo `equations`).
    pub facets: Vec<RationalVector>,
}

/// Extreme rays of a cone together with its lineality space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RaySet {
    pub rays: Vec<RationalVector>,
    /// Basis of the lineality space; empty iff the cone is pointed.
    pub lineality: Vec<RationalVector>,
}

impl RaySet {
    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }
}

pub struct Cone {
    dim: usize,
    generators: Vec<RationalVector>,
    hrep: OnceLock<HRep>,
    rays: OnceLock<RaySet>,
}

impl Clone for Cone {
    fn clone(&self) -> Self {
        Self {
            dim: self.dim,
            generators: self.generators.clone(),
            hrep: self.hrep.clone(),
            rays: self.rays.clone(),
        }
    }
}

impl fmt::Debug for Cone {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Cone")
            .field("dim", &self.dim)
            .field("generators", &self.generators)
            .finish()
    }
}

impl Cone {
    /// The cone generated by `generators` in `Q^dim`. Zero vectors are
    /// dropped; the rest are made primitive and deduplicated.
    pub fn new(dim: usize, generators: Vec<RationalVector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        let mut set = BTreeSet::new();
        for g in generators {
            if g.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: g.len(),
                });
            }
            if !g.is_zero() {
                set.insert(g.primitive_ray()?);
            }
        }
        Ok(Self {
            dim,
            generators: set.into_iter().collect(),
            hrep: OnceLock::new(),
            rays: OnceLock::new(),
        })
    }

    pub fn from_int_rows(dim: usize, rows: &[&[i64]]) -> Result<Self> {
        Self::new(dim, rows.iter().map(|r| RationalVector::from_ints(r)).collect())
    }

    /// The cone `{x : f . x >= 0 for all f}`.
    pub fn from_inequalities(dim: usize, normals: &[RationalVector]) -> Result<Self> {
        if dim == 0 {
            return Err(Error::ZeroDimension);
        }
        check_lengths(dim, normals)?;
        let g = double_description(dim, normals);
        let cone = Self::from_generators(dim, &g)?;
        let mut spanning = g.rays.clone();
        spanning.extend(g.lineality.iter().cloned());
        if rank_of(&spanning) == dim {
            // a defining normal is a facet iff the rays it vanishes on span a hyperplane
            let mut facets = BTreeSet::new();
            for f in normals.iter().filter(|f| !f.is_zero()) {
                let mut on: Vec<RationalVector> = g.rays.iter().filter(|r| f.dot(r).is_zero()).cloned().collect();
                on.extend(g.lineality.iter().cloned());
                if rank_of(&on) == dim - 1 {
                    facets.insert(f.primitive_ray()?);
                }
            }
            let _ = cone.hrep.set(HRep {
                equations: Vec::new(),
                facets: facets.into_iter().collect(),
            });
        }
        let _ = cone.rays.set(RaySet {
            rays: g.rays,
            lineality: g.lineality,
        });
        Ok(cone)
    }

    fn from_generators(dim: usize, g: &Generators) -> Result<Self> {
        let mut gens = g.rays.clone();
        for l in &g.lineality {
            gens.push(l.clone());
            gens.push(-l);
        }
        Self::new(dim, gens)
    }

    /// The positive orthant of `Q^dim`.
    pub fn orthant(dim: usize) -> Result<Self> {
        Self::new(dim, (0..dim).map(|i| RationalVector::unit(dim, i)).collect())
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// The stored (primitive, deduplicated, sorted) generators.
    pub fn generators(&self) -> &[RationalVector] {
        &self.generators
    }

    /// Facet description, computed once.
    pub fn hrep(&self) -> &HRep {
        self.hrep.get_or_init(|| {
            let g = double_description(self.dim, &self.generators);
            HRep {
                equations: g.lineality,
                facets: g.rays,
            }
        })
    }

    /// Inequalities describing the cone, with each equation split into two.
    pub fn inequalities(&self) -> Vec<RationalVector> {
        let h = self.hrep();
        let mut out = h.facets.clone();
        for e in &h.equations {
            out.push(e.clone());
            out.push(-e);
        }
        out
    }

    /// Minimal generators: primitive extreme rays plus a lineality basis.
    pub fn ray_set(&self) -> &RaySet {
        self.rays.get_or_init(|| {
            let g = double_description(self.dim, &self.inequalities());
            RaySet {
                rays: g.rays,
                lineality: g.lineality,
            }
        })
    }

    /// The primitive extreme rays, sorted lexicographically. For a cone with
    /// lineality these are rays of the pointed quotient; see
    /// [`ray_set`](Self::ray_set) and [`is_pointed`](Self::is_pointed).
    pub fn extremal_rays(&self) -> &[RationalVector] {
        &self.ray_set().rays
    }

    pub fn is_pointed(&self) -> bool {
        self.ray_set().is_pointed()
    }

    /// Dimension of the linear span.
    pub fn dimension(&self) -> usize {
        self.dim - self.hrep().equations.len()
    }

    pub fn is_full_dimensional(&self) -> bool {
        self.hrep().equations.is_empty()
    }

    /// The dual cone `{y : y . x >= 0 for all x in self}`.
    pub fn dual(&self) -> Result<Cone> {
        let h = self.hrep();
        let g = Generators {
            lineality: h.equations.clone(),
            rays: h.facets.clone(),
        };
        let dual = Self::from_generators(self.dim, &g)?;
        // the dual's own facets are the generators of self
        Ok(dual)
    }

    fn check(&self, v: &RationalVector) -> Result<()> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: v.len(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, v: &RationalVector) -> Result<bool> {
        self.check(v)?;
        let h = self.hrep();
        Ok(h.equations.iter().all(|e| e.dot(v).is_zero()) && h.facets.iter().all(|f| !f.dot(v).is_negative()))
    }

    /// Membership in the topological interior. Always `false` for a cone
    /// that is not full-dimensional.
    pub fn interior_contains(&self, v: &RationalVector) -> Result<bool> {
        self.check(v)?;
        if !self.is_full_dimensional() {
            return Ok(false);
        }
        Ok(self.hrep().facets.iter().all(|f| f.dot(v).is_positive()))
    }

    /// Membership in the relative interior (interior inside the span).
    pub fn relative_interior_contains(&self, v: &RationalVector) -> Result<bool> {
        self.check(v)?;
        let h = self.hrep();
        Ok(h.equations.iter().all(|e| e.dot(v).is_zero()) && h.facets.iter().all(|f| f.dot(v).is_positive()))
    }

    pub fn contains_cone(&self, other: &Cone) -> Result<bool> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        for g in &other.generators {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `self ∩ other`, through the concatenated facet descriptions.
    pub fn intersect(&self, other: &Cone) -> Result<Cone> {
        intersect_all([self, other])
    }

    /// Equality as sets: same extreme rays and same lineality space.
    pub fn equals(&self, other: &Cone) -> Result<bool> {
        if other.dim != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: other.dim,
            });
        }
        let (a, b) = (self.ray_set(), other.ray_set());
        if a.is_pointed() && b.is_pointed() {
            return Ok(a.rays == b.rays);
        }
        Ok(self.contains_cone(other)? && other.contains_cone(self)?)
    }

    /// Drops facet normals implied by the others, using exact LP. The
    /// double-description facets are already irredundant, so this mainly
    /// serves as an independent audit of [`hrep`](Self::hrep).
    pub fn lp_irredundant_facets(&self) -> Vec<RationalVector> {
        let h = self.hrep();
        let mut normals = h.equations.clone();
        normals.extend(h.equations.iter().map(|e| -e));
        let fixed = normals.len();
        normals.extend(h.facets.iter().cloned());
        let mut kept = Vec::new();
        for k in fixed..normals.len() {
            if !lp::is_redundant(self.dim, &normals, k) {
                kept.push(normals[k].clone());
            }
        }
        kept
    }

    /// Whether `v` is a nonnegative combination of the stored generators,
    /// decided by exact LP (independent of the double description).
    pub fn lp_contains(&self, v: &RationalVector) -> Result<bool> {
        self.check(v)?;
        // find lambda >= 0 with sum lambda_i g_i = v
        let m = self.generators.len();
        let mut cons = Vec::new();
        for j in 0..self.dim {
            let row: RationalVector = self.generators.iter().map(|g| g[j].clone()).collect();
            cons.push(lp::Inequality::new(row.clone(), v[j].clone()));
            cons.push(lp::Inequality::new(-row, -v[j].clone()));
        }
        for i in 0..m {
            cons.push(lp::Inequality::new(
                RationalVector::unit(m, i),
                num_traits::Zero::zero(),
            ));
        }
        if m == 0 {
            return Ok(v.is_zero());
        }
        Ok(lp::find_feasible_point(m, &cons).is_some())
    }
}

fn check_lengths(dim: usize, vs: &[RationalVector]) -> Result<()> {
    match vs.iter().find(|v| v.len() != dim) {
        Some(v) => Err(Error::DimensionMismatch {
            expected: dim,
            found: v.len(),
        }),
        None => Ok(()),
    }
}

/// Intersection of finitely many cones of the same ambient dimension.
pub fn intersect_all<'a, I>(cones: I) -> Result<Cone>
where
    I: IntoIterator<Item = &'a Cone>,
{
    let mut dim = None;
    let mut normals = BTreeSet::new();
    for c in cones {
        match dim {
            None => dim = Some(c.dim),
            Some(d) if d != c.dim => {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: c.dim,
                })
            }
            _ => {}
        }
        for n in c.inequalities() {
            normals.insert(n.primitive_ray()?);
        }
    }
    let dim = dim.ok_or(Error::ZeroDimension)?;
    let normals: Vec<RationalVector> = normals.into_iter().collect();
    Cone::from_inequalities(dim, &normals)
}

/// Whether the two cones are equal as sets.
pub fn equal(a: &Cone, b: &Cone) -> Result<bool> {
    a.equals(b)
}
