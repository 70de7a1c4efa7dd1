//! Serializable output of [`analyze`](super::analyze). Field order is the
//! emission order, so serialized reports are byte-stable across runs.

use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct AnalysisReport {
    pub algebra: String,
    pub dim: u8,
    pub flags: FlagsReport,
    /// How invariant cohomology relates to the de Rham cohomology of a
    /// compact quotient: "exact" (nilpotent), "hint" (completely solvable
    /// flagged by the user), or "invariant-only".
    pub derham_identification: String,
    pub betti: Vec<usize>,
    pub structures: Vec<StructureReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub degree_analysis: Option<DegreeReport>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FlagsReport {
    pub jacobi: bool,
    pub unimodular: bool,
    pub nilpotent: bool,
    pub solvable: bool,
    pub completely_solvable_hint: String,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct StructureReport {
    pub label: String,
    pub integrable: Option<bool>,
    pub h_plus: Option<usize>,
    pub h_minus: Option<usize>,
    pub pure: Option<bool>,
    pub full: Option<bool>,
    pub purity_degree4: Option<bool>,
    pub lefschetz2: Option<bool>,
    pub hard_lefschetz: Option<Vec<bool>>,
    pub bounds: Option<BoundsReport>,
    pub harmonic_pure_basis: Option<HarmonicPureBasisReport>,
    pub geometric_formality: Option<FormalityReport>,
    pub massey: Vec<MasseyReport>,
    pub balanced: Vec<BalancedReport>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BoundsReport {
    pub h_plus: usize,
    pub h_plus_bound: usize,
    pub h_minus: usize,
    pub h_minus_bound: usize,
    pub ok: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct HarmonicPureBasisReport {
    pub exists: bool,
    pub basis: Option<Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct FormalityReport {
    pub holds: bool,
    pub witness: Option<[String; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MasseyReport {
    pub a: String,
    pub b: String,
    pub c: String,
    pub vanishes: bool,
    pub representative: String,
    pub indeterminacy_dim: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct BalancedReport {
    pub form: String,
    pub d_nonzero: bool,
    pub d_power_zero: bool,
    pub balanced: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DegreeReport {
    pub degree: usize,
    pub betti: usize,
    pub structures: Vec<DegreeStructureReport>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct DegreeStructureReport {
    pub label: String,
    pub subgroups: Vec<SubgroupDimReport>,
    pub pure: bool,
    pub full: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SubgroupDimReport {
    pub types: String,
    pub dim: usize,
}
