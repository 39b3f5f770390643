//! Divisor and curve classes on `TL_n`.
//!
//! Divisors are coordinate vectors in the ordered basis
//! `(H; D_0^+, ..., D_{n-2}^+; D_0^-, ..., D_{n-2}^-)` of the Picard group.
//! Curves are stored by their intersection numbers against the same basis,
//! so the intersection pairing is the plain dot product.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::linalg::{int, RationalMatrix, RationalVector};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    pub fn symbol(self) -> char {
        match self {
            Side::Plus => '+',
            Side::Minus => '-',
        }
    }

    pub fn opposite(self) -> Side {
        match self {
            Side::Plus => Side::Minus,
            Side::Minus => Side::Plus,
        }
    }
}

/// Length of the Picard basis of `TL_n`.
pub fn picard_rank(n: usize) -> usize {
    2 * n - 1
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "rank parameter n",
            detail: format!("n = {n}, need n >= 2"),
        });
    }
    Ok(())
}

/// Coordinate slot of `D_i^side` for `i <= n - 2`.
pub fn slot(n: usize, side: Side, i: usize) -> usize {
    debug_assert!(i + 2 <= n);
    match side {
        Side::Plus => 1 + i,
        Side::Minus => n + i,
    }
}

/// Basis labels `H, D0+, D1+, ..., D0-, ...` in coordinate order.
pub fn basis_labels(n: usize) -> Vec<String> {
    let mut out = vec!["H".to_string()];
    for side in [Side::Plus, Side::Minus] {
        for i in 0..n - 1 {
            out.push(format!("D{i}{}", side.symbol()));
        }
    }
    out
}

/// A divisor class on `TL_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivisorClass {
    n: usize,
    coords: RationalVector,
}

impl DivisorClass {
    pub fn new(n: usize, coords: RationalVector) -> Result<Self> {
        check_n(n)?;
        if coords.len() != picard_rank(n) {
            return Err(Error::DimensionMismatch {
                expected: picard_rank(n),
                found: coords.len(),
            });
        }
        Ok(Self { n, coords })
    }

    pub fn from_ints(n: usize, coords: &[i64]) -> Result<Self> {
        Self::new(n, RationalVector::from_ints(coords))
    }

    pub fn hyperplane(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self {
            n,
            coords: RationalVector::unit(picard_rank(n), 0),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coords(&self) -> &RationalVector {
        &self.coords
    }

    pub fn into_coords(self) -> RationalVector {
        self.coords
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            coords: &self.coords + &other.coords,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
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

    pub fn neg(&self) -> Self {
        Self {
            n: self.n,
            coords: -&self.coords,
        }
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.coords.fmt(f)
    }
}

/// A curve class on `TL_n`, stored as its intersection numbers with
/// `(H; D_0^+, ..., D_{n-2}^+; D_0^-, ..., D_{n-2}^-)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CurveClass {
    n: usize,
    pairings: RationalVector,
}

impl CurveClass {
    pub fn new(n: usize, pairings: RationalVector) -> Result<Self> {
        check_n(n)?;
        if pairings.len() != picard_rank(n) {
            return Err(Error::DimensionMismatch {
                expected: picard_rank(n),
                found: pairings.len(),
            });
        }
        Ok(Self { n, pairings })
    }

    pub fn from_ints(n: usize, pairings: &[i64]) -> Result<Self> {
        Self::new(n, RationalVector::from_ints(pairings))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairings(&self) -> &RationalVector {
        &self.pairings
    }

    pub fn into_pairings(self) -> RationalVector {
        self.pairings
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(n, RationalVector::zeros(picard_rank(n)))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        Self {
            n: self.n,
            pairings: &self.pairings + &other.pairings,
        }
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        Self {
            n: self.n,
            pairings: self.pairings.scale(q),
        }
    }

    /// Intersection number with the last boundary divisor `D_{n-1}^side`,
    /// derived through the boundary relation.
    pub fn last_boundary_pairing(&self, side: Side) -> BigRational {
        let d = boundary_divisor(self.n, side, self.n - 1).expect("valid index");
        d.coords.dot(&self.pairings)
    }

    /// Intersection number with `D_i^side` for any `0 <= i <= n-1`.
    pub fn boundary_pairing(&self, side: Side, i: usize) -> Result<BigRational> {
        let d = boundary_divisor(self.n, side, i)?;
        Ok(d.coords.dot(&self.pairings))
    }
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.pairings.fmt(f)
    }
}

/// `D_i^side`. For `i = n-1` this is `H - sum_{j<=n-2} (n-j) D_j^side`.
pub fn boundary_divisor(n: usize, side: Side, i: usize) -> Result<DivisorClass> {
    check_n(n)?;
    if i >= n {
        return Err(Error::OutOfRange {
            what: "boundary index",
            detail: format!("i = {i}, need 0 <= i <= {}", n - 1),
        });
    }
    let mut v = RationalVector::zeros(picard_rank(n)).into_entries();
    if i + 2 <= n {
        v[slot(n, side, i)] = int(1);
    } else {
        v[0] = int(1);
        for j in 0..n - 1 {
            v[slot(n, side, j)] = int(-((n - j) as i64));
        }
    }
    DivisorClass::new(n, RationalVector::new(v))
}

/// `H - sum_{i<p} (p-i) D_i^+ - sum_{i<q} (q-i) D_i^-`, the common shape of
/// the colors and the nef generators. Indices `>= n-1` are expanded through
/// the boundary relation.
fn staircase(n: usize, p: usize, q: usize) -> DivisorClass {
    let mut d = DivisorClass::hyperplane(n).expect("n checked");
    for (side, top) in [(Side::Plus, p), (Side::Minus, q)] {
        for i in 0..top {
            let b = boundary_divisor(n, side, i).expect("index < n");
            d = d.sub(&b.scale(&int((top - i) as i64)));
        }
    }
    d
}

/// The color `B_k`, `0 <= k <= n`; `B_0 = D_{n-1}^+` and `B_n = D_{n-1}^-`.
pub fn color_class(n: usize, k: usize) -> Result<DivisorClass> {
    check_n(n)?;
    if k > n {
        return Err(Error::OutOfRange {
            what: "color index",
            detail: format!("k = {k}, need 0 <= k <= {n}"),
        });
    }
    match k {
        0 => boundary_divisor(n, Side::Plus, n - 1),
        k if k == n => boundary_divisor(n, Side::Minus, n - 1),
        k => Ok(staircase(n, n - k, k)),
    }
}

/// The nef generator `N_{p,q}` for `0 <= p, q <= n-1`, `p + q <= n`.
pub fn nef_generator(n: usize, p: usize, q: usize) -> Result<DivisorClass> {
    check_n(n)?;
    if p >= n || q >= n || p + q > n {
        return Err(Error::NotNefIndex { n, p, q });
    }
    Ok(staircase(n, p, q))
}

/// All `(p, q)` with `0 <= p, q <= n-1` and `p + q <= n`.
pub fn nef_indices(n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for p in 0..n {
        for q in 0..n {
            if p + q <= n {
                out.push((p, q));
            }
        }
    }
    out
}

/// `K = -(n+1) H + sum_{i<=n-2} ((n+1-i)(n-i)/2 - 1) (D_i^+ + D_i^-)`.
pub fn canonical_class(n: usize) -> Result<DivisorClass> {
    check_n(n)?;
    let mut v = RationalVector::zeros(picard_rank(n)).into_entries();
    v[0] = int(-((n + 1) as i64));
    for i in 0..n - 1 {
        let c = int((((n + 1 - i) * (n - i)) / 2) as i64 - 1);
        v[slot(n, Side::Plus, i)] = c.clone();
        v[slot(n, Side::Minus, i)] = c;
    }
    DivisorClass::new(n, RationalVector::new(v))
}

/// `-sum_{m=1}^{n-1} B_m - sum_{i=0}^{n-1} (D_i^+ + D_i^-)`.
pub fn canonical_class_from_colors(n: usize) -> Result<DivisorClass> {
    check_n(n)?;
    let mut k = DivisorClass::new(n, RationalVector::zeros(picard_rank(n)))?;
    for m in 1..n {
        k = k.sub(&color_class(n, m)?);
    }
    for side in [Side::Plus, Side::Minus] {
        for i in 0..n {
            k = k.sub(&boundary_divisor(n, side, i)?);
        }
    }
    Ok(k)
}

/// Whether the two expressions of the canonical class agree.
pub fn alt_canonical_check(n: usize) -> Result<bool> {
    Ok(canonical_class(n)? == canonical_class_from_colors(n)?)
}

/// Intersection number `D . C`.
pub fn pair(d: &DivisorClass, c: &CurveClass) -> Result<BigRational> {
    if d.n != c.n {
        return Err(Error::DimensionMismatch {
            expected: picard_rank(d.n),
            found: picard_rank(c.n),
        });
    }
    Ok(d.coords.dot(&c.pairings))
}

/// The torus-invariant curves generating the Mori cone.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MoriCurve {
    /// `C_l = [gamma_l]`, `0 <= l <= n-1`.
    Gamma(usize),
    /// `C_j^side = [zeta_j^side]`, `1 <= j <= n-1`.
    Zeta(Side, usize),
}

impl MoriCurve {
    pub fn label(&self) -> String {
        match self {
            MoriCurve::Gamma(l) => format!("C{l}"),
            MoriCurve::Zeta(s, j) => format!("C{j}{}", s.symbol()),
        }
    }
}

/// The curves `C_0..C_{n-1}, C_1^+..C_{n-1}^+, C_1^-..C_{n-1}^-`.
pub fn mori_curves(n: usize) -> Vec<MoriCurve> {
    let mut out: Vec<MoriCurve> = (0..n).map(MoriCurve::Gamma).collect();
    for side in [Side::Plus, Side::Minus] {
        out.extend((1..n).map(|j| MoriCurve::Zeta(side, j)));
    }
    out
}

fn delta(a: usize, b: usize) -> i64 {
    (a == b) as i64
}

/// The raw intersection table: `H . C`, and `D_i^side . C` for every
/// `0 <= i <= n-1` (including the last boundary divisors).
pub mod table {
    use super::*;

    pub fn h_pairing(curve: MoriCurve) -> i64 {
        match curve {
            MoriCurve::Gamma(_) => 1,
            MoriCurve::Zeta(..) => 0,
        }
    }

    pub fn boundary_pairing(n: usize, curve: MoriCurve, side: Side, i: usize) -> i64 {
        match curve {
            MoriCurve::Gamma(l) => match side {
                Side::Minus => delta(i, l) - delta(i, l + 1),
                // D_i^+ . C_l = delta(i, n-l-1) - delta(i, n-l)
                Side::Plus => delta(i + l + 1, n) - delta(i + l, n),
            },
            MoriCurve::Zeta(s, j) if s == side => -delta(i + 1, j) + 2 * delta(i, j) - delta(i, j + 1),
            MoriCurve::Zeta(..) => 0,
        }
    }
}

/// Pairing vector of a Mori generator, filled from the table rows with
/// `i <= n-2`.
pub fn mori_generator(n: usize, curve: MoriCurve) -> Result<CurveClass> {
    check_n(n)?;
    match curve {
        MoriCurve::Gamma(l) if l >= n => {
            return Err(Error::OutOfRange {
                what: "gamma index",
                detail: format!("l = {l}, need 0 <= l <= {}", n - 1),
            })
        }
        MoriCurve::Zeta(_, j) if j == 0 || j >= n => {
            return Err(Error::OutOfRange {
                what: "zeta index",
                detail: format!("j = {j}, need 1 <= j <= {}", n - 1),
            })
        }
        _ => {}
    }
    let mut v = vec![int(table::h_pairing(curve))];
    for side in [Side::Plus, Side::Minus] {
        for i in 0..n - 1 {
            v.push(int(table::boundary_pairing(n, curve, side, i)));
        }
    }
    CurveClass::new(n, RationalVector::new(v))
}

/// `lcm(n-p, n-q)`.
fn lcm_weight(n: usize, p: usize, q: usize) -> u64 {
    ((n - p) as u64).lcm(&((n - q) as u64))
}

fn check_pq(n: usize, p: usize, q: usize) -> Result<()> {
    check_n(n)?;
    if p >= n || q >= n {
        return Err(Error::OutOfRange {
            what: "moving curve index",
            detail: format!("(p, q) = ({p}, {q}), need 0 <= p, q <= {}", n - 1),
        });
    }
    Ok(())
}

/// All `(p, q)` with `0 <= p, q <= n-1`.
pub fn moving_indices(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|p| (0..n).map(move |q| (p, q))).collect()
}

/// The integral moving curve `W_{p,q}`: `H . W = lcm(n-p, n-q)`,
/// `D_p^+ . W = lcm/(n-p)`, `D_q^- . W = lcm/(n-q)`, every other boundary
/// pairing zero.
pub fn moving_curve_ray(n: usize, p: usize, q: usize) -> Result<CurveClass> {
    check_pq(n, p, q)?;
    let l = lcm_weight(n, p, q);
    let a = int((l / (n - p) as u64) as i64);
    let b = int((l / (n - q) as u64) as i64);
    let mut v = RationalVector::zeros(picard_rank(n)).into_entries();
    v[0] = int(l as i64);
    if p + 2 <= n {
        v[slot(n, Side::Plus, p)] = a.clone();
    }
    if q + 2 <= n {
        v[slot(n, Side::Minus, q)] = b.clone();
    }
    let w = CurveClass::new(n, RationalVector::new(v))?;
    // the last boundary pairings are forced by the relations; confirm them
    for (side, idx, val) in [(Side::Plus, p, &a), (Side::Minus, q, &b)] {
        let expected = if idx == n - 1 { val.clone() } else { BigRational::zero() };
        if w.last_boundary_pairing(side) != expected {
            return Err(Error::Inconsistent(format!(
                "W_{{{p},{q}}} violates the D_{}^{} condition",
                n - 1,
                side.symbol()
            )));
        }
    }
    Ok(w)
}

/// An explicit effective expression of `W_{p,q}` in the Mori generators:
/// `a * sum C_l + sum_j lambda_{j-1} C_j^side`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MovingCurveExpansion {
    pub n: usize,
    pub p: usize,
    pub q: usize,
    /// The side of the `zeta` curves used in the correction term.
    pub side: Side,
    /// `lcm/(n-p)` on the minus-side formula, `lcm/(n-q)` on the plus side.
    pub a: BigInt,
    pub b: BigInt,
    /// Indices `l` of the `C_l` summed with coefficient `coefficient`.
    pub gamma_range: std::ops::RangeInclusive<usize>,
    pub coefficient: BigInt,
    /// `lambda_0, ..., lambda_{n-2}`; `lambda_{j-1}` multiplies `C_j^side`.
    pub lambdas: Vec<BigInt>,
}

impl MovingCurveExpansion {
    /// Evaluates the expansion through the intersection table.
    pub fn evaluate(&self) -> CurveClass {
        let n = self.n;
        let c = BigRational::from_integer(self.coefficient.clone());
        let mut w = CurveClass::zero(n).expect("n >= 2");
        for l in self.gamma_range.clone() {
            w = w.add(&mori_generator(n, MoriCurve::Gamma(l)).expect("l < n").scale(&c));
        }
        for (r, lam) in self.lambdas.iter().enumerate() {
            let g = mori_generator(n, MoriCurve::Zeta(self.side, r + 1)).expect("j < n");
            w = w.add(&g.scale(&BigRational::from_integer(lam.clone())));
        }
        w
    }

    pub fn is_effective(&self) -> bool {
        !self.coefficient.is_negative() && self.lambdas.iter().all(|l| !l.is_negative())
    }
}

/// `lambda_{-1} = 0`, `lambda_0 = a - b [q = 0]`, and
/// `lambda_r = 2 lambda_{r-1} - lambda_{r-2} - a [r = n-p] - b [r = q]`.
fn lambda_recursion(n: usize, p: usize, q: usize, a: &BigInt, b: &BigInt) -> Vec<BigInt> {
    let mut lambdas: Vec<BigInt> = Vec::with_capacity(n - 1);
    for r in 0..n - 1 {
        let lam = if r == 0 {
            a - b * BigInt::from(delta(q, 0))
        } else {
            let prev = &lambdas[r - 1];
            let prev2 = if r >= 2 { lambdas[r - 2].clone() } else { BigInt::zero() };
            BigInt::from(2) * prev - prev2 - a * BigInt::from(delta(r, n - p)) - b * BigInt::from(delta(r, q))
        };
        lambdas.push(lam);
    }
    lambdas
}

/// The expansion using the `C_j^-`: `a * sum_{l=0}^{n-1-p} C_l + sum_j lambda_{j-1} C_j^-`.
pub fn moving_curve_expansion(n: usize, p: usize, q: usize) -> Result<MovingCurveExpansion> {
    check_pq(n, p, q)?;
    let l = lcm_weight(n, p, q);
    let a = BigInt::from(l / (n - p) as u64);
    let b = BigInt::from(l / (n - q) as u64);
    let lambdas = lambda_recursion(n, p, q, &a, &b);
    Ok(MovingCurveExpansion {
        n,
        p,
        q,
        side: Side::Minus,
        coefficient: a.clone(),
        gamma_range: 0..=n - 1 - p,
        a,
        b,
        lambdas,
    })
}

/// The mirror expansion using the `C_j^+`:
/// `b * sum_{l=q}^{n-1} C_l + sum_j mu_{j-1} C_j^+`, where `mu` follows the
/// same recursion with the roles of `(p, a)` and `(q, b)` exchanged.
pub fn moving_curve_expansion_plus(n: usize, p: usize, q: usize) -> Result<MovingCurveExpansion> {
    check_pq(n, p, q)?;
    let l = lcm_weight(n, p, q);
    let a = BigInt::from(l / (n - p) as u64);
    let b = BigInt::from(l / (n - q) as u64);
    let lambdas = lambda_recursion(n, q, p, &b, &a);
    Ok(MovingCurveExpansion {
        n,
        p,
        q,
        side: Side::Plus,
        coefficient: b.clone(),
        gamma_range: q..=n - 1,
        a,
        b,
        lambdas,
    })
}

/// Coordinates in which curve classes are reported.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum CurveBasis {
    /// Raw intersection numbers with `(H; D_i^+; D_i^-)`.
    Pairing,
    /// `(l, e_0^+, ..., e_{n-2}^+, e_0^-, ..., e_{n-2}^-)` with
    /// `l . H = 1`, `l . D = 0`, `e_j . H = 0`, `e_j^s . D_i^t = -delta_ij delta_st`.
    #[default]
    Epsilon,
    /// `(l, C_1^+, ..., C_{n-1}^+, C_1^-, ..., C_{n-1}^-)`, i.e. `e_j := C_{j+1}`.
    Literal,
}

impl CurveBasis {
    pub fn labels(self, n: usize) -> Vec<String> {
        match self {
            CurveBasis::Pairing => basis_labels(n).into_iter().map(|l| format!("{l}.")).collect(),
            CurveBasis::Epsilon => {
                let mut out = vec!["l".to_string()];
                for side in [Side::Plus, Side::Minus] {
                    out.extend((0..n - 1).map(|j| format!("e{j}{}", side.symbol())));
                }
                out
            }
            CurveBasis::Literal => {
                let mut out = vec!["l".to_string()];
                for side in [Side::Plus, Side::Minus] {
                    out.extend((1..n).map(|j| format!("C{j}{}", side.symbol())));
                }
                out
            }
        }
    }

    /// Pairing vectors of the basis curves.
    fn basis_pairings(self, n: usize) -> Vec<RationalVector> {
        let dim = picard_rank(n);
        let line = RationalVector::unit(dim, 0);
        match self {
            CurveBasis::Pairing => (0..dim).map(|i| RationalVector::unit(dim, i)).collect(),
            CurveBasis::Epsilon => {
                let mut out = vec![line];
                out.extend((1..dim).map(|i| -RationalVector::unit(dim, i)));
                out
            }
            CurveBasis::Literal => {
                let mut out = vec![line];
                for side in [Side::Plus, Side::Minus] {
                    for j in 1..n {
                        let c = mori_generator(n, MoriCurve::Zeta(side, j)).expect("valid");
                        out.push(c.into_pairings());
                    }
                }
                out
            }
        }
    }

    /// Converts a class to coordinates in this basis.
    pub fn coordinates(self, c: &CurveClass) -> Result<RationalVector> {
        let cols = self.basis_pairings(c.n);
        // columns of the change-of-basis matrix are the basis pairing vectors
        let m = RationalMatrix::from_rows(cols)?.transpose();
        m.solve(&c.pairings)?
            .ok_or_else(|| Error::Inconsistent("curve basis does not span N_1".to_string()))
    }

    /// Builds a class from coordinates in this basis.
    pub fn class(self, n: usize, coords: &RationalVector) -> Result<CurveClass> {
        let basis = self.basis_pairings(n);
        if coords.len() != basis.len() {
            return Err(Error::DimensionMismatch {
                expected: basis.len(),
                found: coords.len(),
            });
        }
        let mut v = RationalVector::zeros(picard_rank(n));
        for (c, b) in coords.iter().zip(&basis) {
            v = v.add_scaled(c, b);
        }
        CurveClass::new(n, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dv(n: usize, xs: &[i64]) -> DivisorClass {
        DivisorClass::from_ints(n, xs).unwrap()
    }

    fn cv(n: usize, xs: &[i64]) -> CurveClass {
        CurveClass::from_ints(n, xs).unwrap()
    }

    #[test]
    fn boundary_divisor_examples() {
        assert_eq!(boundary_divisor(2, Side::Plus, 1).unwrap(), dv(2, &[1, -2, 0]));
        assert_eq!(boundary_divisor(3, Side::Minus, 2).unwrap(), dv(3, &[1, 0, 0, -3, -2]));
        assert_eq!(boundary_divisor(3, Side::Plus, 0).unwrap(), dv(3, &[0, 1, 0, 0, 0]));
        assert!(boundary_divisor(3, Side::Plus, 3).is_err());
    }

    #[test]
    fn color_examples() {
        assert_eq!(color_class(2, 1).unwrap(), dv(2, &[1, -1, -1]));
        assert_eq!(color_class(3, 1).unwrap(), dv(3, &[1, -2, -1, -1, 0]));
        assert_eq!(color_class(3, 2).unwrap(), dv(3, &[1, -1, 0, -2, -1]));
        assert_eq!(color_class(3, 3).unwrap(), boundary_divisor(3, Side::Minus, 2).unwrap());
        assert_eq!(color_class(3, 0).unwrap(), boundary_divisor(3, Side::Plus, 2).unwrap());
        assert!(color_class(3, 4).is_err());
    }

    #[test]
    fn colors_match_closed_form() {
        // B_k = H - sum_{i<n-k} (n-k-i) D_i^+ - sum_{i<k} (k-i) D_i^-, all
        // indices <= n-2 when 1 <= k <= n-1
        for n in 2..=8usize {
            for k in 1..n {
                let mut v = vec![0i64; 2 * n - 1];
                v[0] = 1;
                for i in 0..n - k {
                    v[1 + i] -= (n - k - i) as i64;
                }
                for i in 0..k {
                    v[n + i] -= (k - i) as i64;
                }
                assert_eq!(color_class(n, k).unwrap(), dv(n, &v), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn nef_generator_examples() {
        assert_eq!(nef_generator(2, 1, 1).unwrap(), color_class(2, 1).unwrap());
        assert_eq!(nef_generator(3, 1, 2).unwrap(), dv(3, &[1, -1, 0, -2, -1]));
        assert_eq!(nef_generator(3, 0, 0).unwrap(), dv(3, &[1, 0, 0, 0, 0]));
        assert_eq!(
            nef_generator(3, 2, 2).unwrap_err(),
            Error::NotNefIndex { n: 3, p: 2, q: 2 }
        );
        assert!(nef_generator(3, 3, 0).is_err());
        assert_eq!(nef_indices(5).len(), (25 + 15 - 2) / 2);
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_class(2).unwrap(), dv(2, &[-3, 2, 2]));
        assert!(alt_canonical_check(2).unwrap());
        for n in 2..=8 {
            assert!(alt_canonical_check(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn pairing_examples() {
        let h = DivisorClass::hyperplane(3).unwrap();
        let c0 = mori_generator(3, MoriCurve::Gamma(0)).unwrap();
        assert_eq!(pair(&h, &c0).unwrap(), int(1));

        let d0 = boundary_divisor(2, Side::Plus, 0).unwrap();
        let c1p = mori_generator(2, MoriCurve::Zeta(Side::Plus, 1)).unwrap();
        assert_eq!(pair(&d0, &c1p).unwrap(), int(-1));

        for n in 2..=8 {
            let last = boundary_divisor(n, Side::Plus, n - 1).unwrap();
            let c1 = mori_generator(n, MoriCurve::Gamma(1)).unwrap();
            assert_eq!(pair(&last, &c1).unwrap(), int(-1), "n={n}");
        }
        assert!(pair(&h, &mori_generator(2, MoriCurve::Gamma(0)).unwrap()).is_err());
    }

    #[test]
    fn mori_generator_examples() {
        assert_eq!(mori_generator(2, MoriCurve::Gamma(0)).unwrap(), cv(2, &[1, 0, 1]));
        assert_eq!(
            mori_generator(2, MoriCurve::Zeta(Side::Plus, 1)).unwrap(),
            cv(2, &[0, -1, 0])
        );
        assert_eq!(
            mori_generator(3, MoriCurve::Zeta(Side::Minus, 2)).unwrap(),
            cv(3, &[0, 0, 0, 0, -1])
        );
        assert!(mori_generator(3, MoriCurve::Gamma(3)).is_err());
        assert!(mori_generator(3, MoriCurve::Zeta(Side::Plus, 0)).is_err());
        assert!(mori_generator(3, MoriCurve::Zeta(Side::Plus, 3)).is_err());
        assert_eq!(mori_curves(4).len(), 3 * 4 - 2);
    }

    #[test]
    fn boundary_relations_match_table() {
        for n in 2..=8 {
            for curve in mori_curves(n) {
                let c = mori_generator(n, curve).unwrap();
                for side in [Side::Plus, Side::Minus] {
                    assert_eq!(
                        c.last_boundary_pairing(side),
                        int(table::boundary_pairing(n, curve, side, n - 1)),
                        "n={n} {curve:?} side {side:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn moving_curve_examples() {
        let w = moving_curve_ray(2, 0, 0).unwrap();
        assert_eq!(w, cv(2, &[2, 1, 1]));
        let e = moving_curve_expansion(2, 0, 0).unwrap();
        assert_eq!(e.coefficient, BigInt::from(1));
        assert_eq!(e.lambdas, vec![BigInt::from(0)]);
        assert_eq!(e.evaluate(), w);

        let w = moving_curve_ray(2, 1, 1).unwrap();
        assert_eq!(w, cv(2, &[1, 0, 0]));
        assert_eq!(w.last_boundary_pairing(Side::Plus), int(1));
        assert_eq!(w.last_boundary_pairing(Side::Minus), int(1));

        let w = moving_curve_ray(3, 1, 2).unwrap();
        assert_eq!(w, cv(3, &[2, 0, 1, 0, 0]));
        assert_eq!(w.last_boundary_pairing(Side::Minus), int(2));
        assert_eq!(
            CurveBasis::Epsilon.coordinates(&w).unwrap(),
            RationalVector::from_ints(&[2, 0, -1, 0, 0])
        );
        assert!(moving_curve_ray(3, 3, 0).is_err());
    }

    #[test]
    fn moving_curves_are_nonnegative_on_boundary() {
        for n in 2..=8 {
            for (p, q) in moving_indices(n) {
                let w = moving_curve_ray(n, p, q).unwrap();
                for side in [Side::Plus, Side::Minus] {
                    for i in 0..n {
                        assert!(!w.boundary_pairing(side, i).unwrap().is_negative());
                    }
                }
            }
        }
    }

    #[test]
    fn expansions_reproduce_moving_curves() {
        for n in 2..=8 {
            for (p, q) in moving_indices(n) {
                let w = moving_curve_ray(n, p, q).unwrap();
                let minus = moving_curve_expansion(n, p, q).unwrap();
                assert!(minus.is_effective(), "n={n} p={p} q={q} {:?}", minus.lambdas);
                assert_eq!(minus.evaluate(), w, "n={n} p={p} q={q}");
                let plus = moving_curve_expansion_plus(n, p, q).unwrap();
                assert!(plus.is_effective());
                assert_eq!(plus.evaluate(), w, "n={n} p={p} q={q}");
            }
        }
    }

    #[test]
    fn nef_generators_are_nonnegative_on_mori_generators() {
        for n in 2..=8 {
            for (p, q) in nef_indices(n) {
                let d = nef_generator(n, p, q).unwrap();
                for curve in mori_curves(n) {
                    let c = mori_generator(n, curve).unwrap();
                    assert!(!pair(&d, &c).unwrap().is_negative(), "N_{p},{q} on {curve:?}");
                }
            }
        }
    }

    #[test]
    fn curve_bases_round_trip() {
        for n in 2..=5 {
            for basis in [CurveBasis::Pairing, CurveBasis::Epsilon, CurveBasis::Literal] {
                for curve in mori_curves(n) {
                    let c = mori_generator(n, curve).unwrap();
                    let coords = basis.coordinates(&c).unwrap();
                    assert_eq!(basis.class(n, &coords).unwrap(), c);
                }
            }
        }
        // for n = 2 both named bases coincide: e_0 = C_1
        let c = mori_generator(2, MoriCurve::Gamma(1)).unwrap();
        assert_eq!(
            CurveBasis::Epsilon.coordinates(&c).unwrap(),
            CurveBasis::Literal.coordinates(&c).unwrap()
        );
    }
}
