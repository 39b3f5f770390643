//! Exact rational vectors and matrices.
//!
//! Everything here works over `BigRational`; there is no floating point
//! anywhere in the crate.

use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Builds a rational from an integer.
pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Builds the fraction `num/den`. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Formats a rational as `p` or `p/q`.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `p` or `p/q`.
pub fn parse_rational(s: &str) -> Result<BigRational, Error> {
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// A fixed-length vector of exact rationals.
///
/// `BigRational` keeps every entry reduced with a positive denominator, so
/// derived equality, hashing and the lexicographic order are all structural.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RationalVector(Vec<BigRational>);

impl RationalVector {
    pub fn new(entries: Vec<BigRational>) -> Self {
        Self(entries)
    }

    pub fn zeros(len: usize) -> Self {
        Self(vec![BigRational::zero(); len])
    }

    /// The `i`-th standard basis vector of length `len`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.0[i] = BigRational::one();
        v
    }

    pub fn from_ints(entries: &[i64]) -> Self {
        Self(entries.iter().map(|&x| int(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigRational] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigRational> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigRational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(BigRational::is_integer)
    }

    /// Exact inner product. Panics on a length mismatch.
    pub fn dot(&self, other: &Self) -> BigRational {
        assert_eq!(self.len(), other.len(), "dot product of unequal lengths");
        self.0
            .iter()
            .zip(&other.0)
            .fold(BigRational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn checked_dot(&self, other: &Self) -> Result<BigRational, Error> {
        if self.len() != other.len() {
            return Err(Error::DimensionMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(self.dot(other))
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self(self.0.iter().map(|x| x * q).collect())
    }

    /// `self + q * other`
    pub fn add_scaled(&self, q: &BigRational, other: &Self) -> Self {
        assert_eq!(self.len(), other.len());
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + q * b).collect())
    }

    fn integer_multiple(&self) -> Option<Vec<BigInt>> {
        if self.is_zero() {
            return None;
        }
        let lcm = self.0.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<BigInt> = self.0.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
        Some(ints.into_iter().map(|x| x / &gcd).collect())
    }

    /// The primitive integer vector on the ray through `self`: positive
    /// multiple, integral entries, gcd 1.
    pub fn primitive_ray(&self) -> Result<Self, Error> {
        let ints = self.integer_multiple().ok_or(Error::ZeroVector)?;
        Ok(Self(ints.into_iter().map(BigRational::from_integer).collect()))
    }

    /// The primitive integer representative of the line through `self`,
    /// normalized so that its first nonzero entry is positive.
    pub fn primitive(&self) -> Result<Self, Error> {
        let ray = self.primitive_ray()?;
        let first = ray.0.iter().find(|x| !x.is_zero()).expect("nonzero");
        if first.is_negative() {
            Ok(-ray)
        } else {
            Ok(ray)
        }
    }

    /// Integer entries as `i64`, if they fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0
            .iter()
            .map(|x| if x.is_integer() { x.numer().to_i64() } else { None })
            .collect()
    }
}

impl Index<usize> for RationalVector {
    type Output = BigRational;
    fn index(&self, i: usize) -> &BigRational {
        &self.0[i]
    }
}

impl FromIterator<BigRational> for RationalVector {
    fn from_iter<I: IntoIterator<Item = BigRational>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a RationalVector {
    type Item = &'a BigRational;
    type IntoIter = std::slice::Iter<'a, BigRational>;
    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl Add for &RationalVector {
    type Output = RationalVector;
    fn add(self, rhs: Self) -> RationalVector {
        assert_eq!(self.len(), rhs.len());
        self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect()
    }
}

impl Sub for &RationalVector {
    type Output = RationalVector;
    fn sub(self, rhs: Self) -> RationalVector {
        assert_eq!(self.len(), rhs.len());
        self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect()
    }
}

impl Neg for RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        self.0.into_iter().map(|x| -x).collect()
    }
}

impl Neg for &RationalVector {
    type Output = RationalVector;
    fn neg(self) -> RationalVector {
        self.0.iter().map(|x| -x).collect()
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&format_rational(x))?;
        }
        f.write_str(")")
    }
}

/// A rectangular matrix stored by rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    cols: usize,
    rows: Vec<RationalVector>,
}

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
    rows: Vec<RationalVector>,
    pivots: Vec<usize>,
}

impl RationalMatrix {
    pub fn from_rows(rows: Vec<RationalVector>) -> Result<Self, Error> {
        let cols = rows.first().map_or(0, RationalVector::len);
        Self::with_cols(cols, rows)
    }

    /// Like [`from_rows`](Self::from_rows) but keeps the column count when
    /// `rows` is empty.
    pub fn with_cols(cols: usize, rows: Vec<RationalVector>) -> Result<Self, Error> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { cols, rows })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self, Error> {
        Self::from_rows(rows.iter().map(|r| RationalVector::from_ints(r)).collect())
    }

    pub fn identity(n: usize) -> Self {
        Self {
            cols: n,
            rows: (0..n).map(|i| RationalVector::unit(n, i)).collect(),
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![RationalVector::zeros(cols); rows],
        }
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn col_count(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[RationalVector] {
        &self.rows
    }

    pub fn transpose(&self) -> Self {
        let rows = (0..self.cols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        Self {
            cols: self.rows.len(),
            rows,
        }
    }

    pub fn mul_vec(&self, x: &RationalVector) -> Result<RationalVector, Error> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        Ok(self.rows.iter().map(|r| r.dot(x)).collect())
    }

    /// Gauss-Jordan elimination; the pivot is always the first nonzero entry
    /// at or below the current row, so the result is deterministic.
    fn echelon(&self) -> Echelon {
        let mut rows: Vec<Vec<BigRational>> = self.rows.iter().map(|r| r.entries().to_vec()).collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == rows.len() {
                break;
            }
            let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
                continue;
            };
            rows.swap(r, p);
            let inv = rows[r][c].recip();
            for x in rows[r].iter_mut() {
                *x = &*x * &inv;
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i == r || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &f * p;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        rows.truncate(r);
        Echelon {
            rows: rows.into_iter().map(RationalVector).collect(),
            pivots,
        }
    }

    /// Nonzero rows of the reduced row echelon form.
    pub fn reduced_rows(&self) -> Vec<RationalVector> {
        self.echelon().rows
    }

    pub fn rank(&self) -> usize {
        self.echelon().pivots.len()
    }

    /// A basis of `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<RationalVector> {
        let Echelon { rows, pivots } = self.echelon();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = RationalVector::zeros(self.cols);
                x.0[f] = BigRational::one();
                for (row, &p) in rows.iter().zip(&pivots) {
                    x.0[p] = -row[f].clone();
                }
                x
            })
            .collect()
    }

    /// One exact solution of `A x = b`, or `None` when the system is
    /// inconsistent. Free variables are set to zero.
    pub fn solve(&self, b: &RationalVector) -> Result<Option<RationalVector>, Error> {
        if b.len() != self.rows.len() {
            return Err(Error::DimensionMismatch {
                expected: self.rows.len(),
                found: b.len(),
            });
        }
        let augmented = Self {
            cols: self.cols + 1,
            rows: self
                .rows
                .iter()
                .zip(b)
                .map(|(r, bi)| r.iter().cloned().chain([bi.clone()]).collect())
                .collect(),
        };
        let Echelon { rows, pivots } = augmented.echelon();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = RationalVector::zeros(self.cols);
        for (row, &p) in rows.iter().zip(&pivots) {
            x.0[p] = row[self.cols].clone();
        }
        Ok(Some(x))
    }
}

/// Rank of a list of equal-length vectors.
pub fn rank_of(vectors: &[RationalVector]) -> usize {
    match RationalMatrix::from_rows(vectors.to_vec()) {
        Ok(m) => m.rank(),
        Err(_) => panic!("rank_of: vectors of unequal length"),
    }
}

/// Solves `A x = b` for a matrix given by rows.
pub fn solve(a: &RationalMatrix, b: &RationalVector) -> Result<Option<RationalVector>, Error> {
    a.solve(b)
}

pub fn rank(a: &RationalMatrix) -> usize {
    a.rank()
}

/// See [`RationalVector::primitive`].
pub fn primitive(v: &RationalVector) -> Result<RationalVector, Error> {
    v.primitive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn v(xs: &[i64]) -> RationalVector {
        RationalVector::from_ints(xs)
    }

    #[test]
    fn primitive_examples() {
        assert_eq!(primitive(&v(&[2, -4, 6])).unwrap(), v(&[1, -2, 3]));
        let half = RationalVector::new(vec![frac(-1, 2), frac(1, 2)]);
        assert_eq!(primitive(&half).unwrap(), v(&[1, -1]));
        assert_eq!(primitive(&v(&[0, 3, 0])).unwrap(), v(&[0, 1, 0]));
    }

    #[test]
    fn primitive_ray_keeps_direction() {
        let half = RationalVector::new(vec![frac(-1, 2), frac(1, 2)]);
        assert_eq!(half.primitive_ray().unwrap(), v(&[-1, 1]));
        assert_eq!(v(&[0, -6, 4]).primitive_ray().unwrap(), v(&[0, -3, 2]));
    }

    #[test]
    fn primitive_of_zero_fails() {
        let err = primitive(&v(&[0, 0])).unwrap_err();
        assert_eq!(err.to_string(), "zero vector has no primitive representative");
    }

    #[test]
    fn solve_examples() {
        let id = RationalMatrix::identity(3);
        let b = v(&[4, -1, 7]);
        assert_eq!(solve(&id, &b).unwrap(), Some(b.clone()));

        let a = RationalMatrix::from_int_rows(&[&[1, 1], &[1, -1]]).unwrap();
        assert_eq!(solve(&a, &v(&[2, 0])).unwrap(), Some(v(&[1, 1])));

        let a = RationalMatrix::from_int_rows(&[&[1, 0], &[1, 0]]).unwrap();
        assert_eq!(solve(&a, &v(&[0, 1])).unwrap(), None);
    }

    #[test]
    fn solve_dimension_mismatch() {
        let a = RationalMatrix::identity(2);
        assert!(matches!(
            solve(&a, &v(&[1, 2, 3])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(RationalMatrix::from_int_rows(&[&[1, 2], &[1]]).is_err());
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&RationalMatrix::zeros(3, 4)), 0);
        for k in 1..6 {
            assert_eq!(rank(&RationalMatrix::identity(k)), k);
        }
    }

    #[test]
    fn kernel_is_annihilated() {
        let a = RationalMatrix::from_int_rows(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 0]]).unwrap();
        let ker = a.kernel();
        assert_eq!(ker.len(), 2);
        for k in &ker {
            assert!(a.mul_vec(k).unwrap().is_zero());
        }
    }

    #[test]
    fn rational_text_round_trip() {
        for s in ["0", "-3", "5/2", "-7/4"] {
            assert_eq!(format_rational(&parse_rational(s).unwrap()), s);
        }
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    fn small_vec() -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-20i64..=20, 1..6)
    }

    proptest! {
        #[test]
        fn primitive_is_idempotent(xs in small_vec()) {
            let v = RationalVector::from_ints(&xs);
            prop_assume!(!v.is_zero());
            let p = v.primitive().unwrap();
            prop_assert_eq!(p.primitive().unwrap(), p);
        }

        #[test]
        fn primitive_ignores_positive_scaling(xs in small_vec(), num in 1i64..30, den in 1i64..30) {
            let v = RationalVector::from_ints(&xs);
            prop_assume!(!v.is_zero());
            let q = frac(num, den);
            prop_assert_eq!(v.scale(&q).primitive().unwrap(), v.primitive().unwrap());
            prop_assert_eq!(v.scale(&q).primitive_ray().unwrap(), v.primitive_ray().unwrap());
        }

        #[test]
        fn solve_returns_exact_solutions(
            rows in prop::collection::vec(prop::collection::vec(-5i64..=5, 3), 1..5),
            b in prop::collection::vec(-5i64..=5, 5),
        ) {
            let a = RationalMatrix::from_rows(rows.iter().map(|r| RationalVector::from_ints(r)).collect()).unwrap();
            let b = RationalVector::from_ints(&b[..rows.len()]);
            if let Some(x) = solve(&a, &b).unwrap() {
                prop_assert_eq!(a.mul_vec(&x).unwrap(), b);
            } else {
                // inconsistent: rank of the augmented matrix must jump
                let aug: Vec<RationalVector> = a.rows().iter().zip(&b)
                    .map(|(r, bi)| r.iter().cloned().chain([bi.clone()]).collect()).collect();
                prop_assert!(rank_of(&aug) > a.rank());
            }
        }
    }
}
