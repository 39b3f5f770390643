//! Classification summaries shared by the three families.

/// Where the fields of a report come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    /// Derived from cone computations in this crate.
    Computed,
    /// Copied from published theorems; nothing is computed.
    AssertedByTheorem,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::Computed => "computed",
            Provenance::AssertedByTheorem => "asserted-by-theorem",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub n: usize,
    /// `TL`, `conics` or `TO`.
    pub subject: String,
    pub is_fano: bool,
    pub is_weak_fano: bool,
    pub nef_ray_count: Option<usize>,
    pub eff_ray_count: Option<usize>,
    pub cox_generator_count: Option<usize>,
    pub aut_dimension: Option<u64>,
    pub fano_index: Option<u64>,
    pub aut_group: Option<String>,
    pub provenance: Provenance,
}
