//! Closed-form numerical invariants of `LG(n, 2n)`, the osculating loci,
//! the Kontsevich spaces and the orthogonal analogue `TO_n`.

use num_integer::binomial;

use crate::report::{ClassificationReport, Provenance};
use crate::{Error, Result};

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "rank parameter n",
            detail: format!("n = {n}, need n >= 2"),
        });
    }
    Ok(())
}

/// Closed-form facts about the ambient geometry for a given `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeometryFacts {
    pub n: usize,
}

impl GeometryFacts {
    pub fn new(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self { n })
    }

    /// `dim LG(n, 2n) = n(n+1)/2`
    pub fn dim_lg(&self) -> u64 {
        let n = self.n as u64;
        n * (n + 1) / 2
    }

    /// Fano index of `LG(n, 2n)`.
    pub fn fano_index_lg(&self) -> u64 {
        self.n as u64 + 1
    }

    /// `dim OG_+(n, 2n) = n(n-1)/2`
    pub fn dim_og_plus(&self) -> u64 {
        let n = self.n as u64;
        n * (n - 1) / 2
    }

    /// Number of boundary divisors of `TO_n`: `2 floor(n/2)`.
    pub fn to_boundary_count(&self) -> u64 {
        2 * (self.n as u64 / 2)
    }
}

/// `dim Z_d(p) = d(2n-d+1)/2` for `1 <= d <= n-1`; the whole `LG(n, 2n)`
/// for `d >= n`.
pub fn dim_osculating_locus(n: usize, d: usize) -> Result<u64> {
    let facts = GeometryFacts::new(n)?;
    if d < 1 {
        return Err(Error::OutOfRange {
            what: "osculation order d",
            detail: format!("d = {d}, need d >= 1"),
        });
    }
    if d >= n {
        return Ok(facts.dim_lg());
    }
    let (n, d) = (n as u64, d as u64);
    Ok(d * (2 * n - d + 1) / 2)
}

/// Multiplicity `k - i + 1` of the ordinary singularities, `0 <= i < k`.
pub fn osculating_multiplicity(k: usize, i: usize) -> Result<u64> {
    if i >= k {
        return Err(Error::OutOfRange {
            what: "multiplicity index",
            detail: format!("i = {i}, need 0 <= i < k = {k}"),
        });
    }
    Ok((k - i + 1) as u64)
}

/// Expected dimension `n(n+1)/2 + (n+1)d + k - 3` of
/// `M_{0,k}(LG(n, 2n), d)`.
pub fn dim_kontsevich(n: usize, d: usize, k: usize) -> Result<u64> {
    let facts = GeometryFacts::new(n)?;
    if d < 1 {
        return Err(Error::OutOfRange {
            what: "curve degree d",
            detail: format!("d = {d}, need d >= 1"),
        });
    }
    Ok(facts.dim_lg() + facts.fano_index_lg() * d as u64 + k as u64 - 3)
}

/// Dimension `3n(n+1)/2 - 3` of the Hilbert scheme component compared with
/// the two-pointed space of degree-`n` curves.
pub fn hilbert_scheme_dimension(n: usize) -> Result<u64> {
    let facts = GeometryFacts::new(n)?;
    Ok(3 * facts.dim_lg() - 3)
}

/// `r_k = C(n,k)^2 - C(n,k-1) C(n,k+1)` for `1 <= k <= n-1`.
pub fn section_dimension_rk(n: usize, k: usize) -> Result<u64> {
    check_n(n)?;
    if k == 0 || k >= n {
        return Err(Error::OutOfRange {
            what: "color index k",
            detail: format!("k = {k}, need 1 <= k <= {}", n - 1),
        });
    }
    let c = |j: usize| -> u128 {
        if j > n {
            0
        } else {
            binomial(n as u128, j as u128)
        }
    };
    let r = c(k) * c(k) - c(k - 1) * c(k + 1);
    u64::try_from(r).map_err(|_| Error::ResourceBound(format!("r_{k} overflows for n = {n}")))
}

/// Fano classification of `TO_n`, taken from the published theorems.
pub fn classify_to(n: usize) -> Result<ClassificationReport> {
    let facts = GeometryFacts::new(n)?;
    Ok(ClassificationReport {
        n,
        subject: "TO".to_string(),
        is_fano: (2..=5).contains(&n),
        is_weak_fano: true,
        nef_ray_count: None,
        eff_ray_count: Some(facts.to_boundary_count() as usize),
        cox_generator_count: None,
        aut_dimension: None,
        fano_index: None,
        aut_group: None,
        provenance: Provenance::AssertedByTheorem,
    })
}
