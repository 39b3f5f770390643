//! Double description method over primitive integer vectors.
//!
//! Converts a homogeneous system `{x : a_i . x >= 0}` into generators: a
//! basis of the lineality space plus one primitive vector per extreme ray
//! of the pointed quotient.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::linalg::{RationalMatrix, RationalVector};

pub(crate) type IntVec = Vec<BigInt>;

/// Primitive integer vector on the ray of `v` (positive scaling only).
pub(crate) fn to_int_ray(v: &RationalVector) -> Option<IntVec> {
    if v.is_zero() {
        return None;
    }
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: IntVec = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    Some(make_primitive(ints))
}

pub(crate) fn make_primitive(mut v: IntVec) -> IntVec {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() && !g.is_one() {
        for x in v.iter_mut() {
            *x = &*x / &g;
        }
    }
    v
}

pub(crate) fn from_int(v: &[BigInt]) -> RationalVector {
    v.iter().cloned().map(BigRational::from_integer).collect()
}

pub(crate) fn int_dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).fold(BigInt::zero(), |acc, (x, y)| acc + x * y)
}

/// `alpha * x + beta * y`, made primitive.
fn combine(alpha: &BigInt, x: &[BigInt], beta: &BigInt, y: &[BigInt]) -> IntVec {
    make_primitive(x.iter().zip(y).map(|(a, b)| alpha * a + beta * b).collect())
}

/// Growable bitset of constraint indices.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn insert(&mut self, i: usize) {
        let w = i / 64;
        if self.0.len() <= w {
            self.0.resize(w + 1, 0);
        }
        self.0[w] |= 1 << (i % 64);
    }

    fn intersect(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset_of(&self, other: &Self) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, w)| w & !other.0.get(i).copied().unwrap_or(0) == 0)
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

#[derive(Clone, Debug)]
struct Ray {
    v: IntVec,
    zeros: ZeroSet,
}

/// Generators of a polyhedral cone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generators {
    /// Canonical basis of the lineality space (reduced echelon rows made
    /// primitive); empty iff the cone is pointed.
    pub lineality: Vec<RationalVector>,
    /// Primitive extreme rays modulo the lineality space, sorted.
    pub rays: Vec<RationalVector>,
}

/// Runs the double description method on `{x in Q^dim : a . x >= 0}`.
pub fn double_description(dim: usize, constraints: &[RationalVector]) -> Generators {
    let mut cons: Vec<IntVec> = constraints.iter().filter_map(to_int_ray).collect();
    cons.sort();
    cons.dedup();

    let mut lineality: Vec<IntVec> = (0..dim)
        .map(|i| (0..dim).map(|j| BigInt::from((i == j) as i32)).collect())
        .collect();
    let mut rays: Vec<Ray> = Vec::new();

    for (k, a) in cons.iter().enumerate() {
        if let Some(pos) = lineality.iter().position(|l| !int_dot(a, l).is_zero()) {
            let mut l = lineality.remove(pos);
            let mut al = int_dot(a, &l);
            if al.is_negative() {
                l.iter_mut().for_each(|x| *x = -x.clone());
                al = -al;
            }
            for other in lineality.iter_mut() {
                let ao = int_dot(a, other);
                if !ao.is_zero() {
                    *other = combine(&al, other, &-ao, &l);
                }
            }
            for r in rays.iter_mut() {
                let ar = int_dot(a, &r.v);
                if !ar.is_zero() {
                    r.v = combine(&al, &r.v, &-ar, &l);
                }
                r.zeros.insert(k);
            }
            // l lies on every earlier hyperplane
            let mut zeros = ZeroSet::default();
            (0..k).for_each(|i| zeros.insert(i));
            rays.push(Ray {
                v: make_primitive(l),
                zeros,
            });
            continue;
        }

        let values: Vec<BigInt> = rays.iter().map(|r| int_dot(a, &r.v)).collect();
        if values.iter().all(|x| !x.is_negative()) {
            for (r, val) in rays.iter_mut().zip(&values) {
                if val.is_zero() {
                    r.zeros.insert(k);
                }
            }
            continue;
        }

        // Two extreme rays are adjacent iff no third ray is tight on every
        // constraint that both are tight on.
        let needed = (dim - lineality.len()).saturating_sub(2);
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        let mut created = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.intersect(&rays[n].zeros);
                if common.count() < needed {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(i, r)| i != p && i != n && common.is_subset_of(&r.zeros));
                if blocked {
                    continue;
                }
                let mut zeros = common;
                zeros.insert(k);
                let v = combine(&values[p], &rays[n].v, &-values[n].clone(), &rays[p].v);
                created.push(Ray { v, zeros });
            }
        }
        let mut next: Vec<Ray> = Vec::with_capacity(rays.len() + created.len());
        for (mut r, val) in rays.into_iter().zip(&values) {
            if val.is_zero() {
                r.zeros.insert(k);
                next.push(r);
            } else if val.is_positive() {
                next.push(r);
            }
        }
        next.extend(created);
        rays = next;
    }

    let lineality = canonical_basis(dim, &lineality);
    let mut out: Vec<RationalVector> = rays.iter().map(|r| reduce_modulo(&r.v, &lineality)).collect();
    out.sort();
    out.dedup();
    Generators { lineality, rays: out }
}

/// Reduced-echelon basis of the span of `vs`, each row made primitive.
pub(crate) fn canonical_basis(dim: usize, vs: &[IntVec]) -> Vec<RationalVector> {
    if vs.is_empty() {
        return Vec::new();
    }
    let m = RationalMatrix::with_cols(dim, vs.iter().map(|v| from_int(v)).collect()).expect("equal lengths");
    m.reduced_rows()
        .into_iter()
        .map(|r| r.primitive().expect("nonzero echelon row"))
        .collect()
}

/// Makes a ray representative canonical modulo the lineality space: the
/// representative orthogonal to it, scaled to a primitive integer vector.
fn reduce_modulo(v: &[BigInt], lineality: &[RationalVector]) -> RationalVector {
    let mut x = from_int(v);
    if lineality.is_empty() {
        return x;
    }
    // orthogonal projection onto the complement of the lineality space
    let gram: Vec<RationalVector> = lineality
        .iter()
        .map(|l| lineality.iter().map(|m| l.dot(m)).collect())
        .collect();
    let rhs: RationalVector = lineality.iter().map(|l| l.dot(&x)).collect();
    let g = RationalMatrix::from_rows(gram).expect("square");
    let coeffs = g.solve(&rhs).expect("sizes").expect("gram matrix is invertible");
    for (c, l) in coeffs.iter().zip(lineality) {
        x = x.add_scaled(&-c.clone(), l);
    }
    x.primitive_ray().expect("ray outside the lineality space")
}
