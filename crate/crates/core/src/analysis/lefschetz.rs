use super::harmonic::harmonic_basis;
use crate::cealgebra::CeComplex;
use crate::exterior::Form;
use crate::geometry::{AlmostKahlerTriple, SymplecticForm};

/// Outcome of the Lefschetz-type test on harmonic 2-forms.
#[derive(Clone, Debug)]
pub struct LefschetzVerdict {
    holds: bool,
    /// A harmonic 2-form whose image under ω^{m-2}∧· is not harmonic.
    witness: Option<Form>,
}

impl LefschetzVerdict {
    pub fn holds(&self) -> bool {
        self.holds
    }

    pub fn witness(&self) -> Option<&Form> {
        self.witness.as_ref()
    }
}

/// Does ω^{m-2} ∧ · send g-harmonic 2-forms to g-harmonic (2m-2)-forms?
/// The image is closed automatically (dω = 0), so only coclosedness can
/// fail.
pub fn lefschetz_type_property(
    complex: &CeComplex,
    triple: &AlmostKahlerTriple,
) -> LefschetzVerdict {
    let m = triple.omega().half();
    let power = triple.omega().power(m - 2);
    for h in harmonic_basis(complex, triple.metric(), 2) {
        let image = power.wedge(&h).expect("same algebra");
        debug_assert!(complex.d(&image).is_zero());
        if !triple.metric().codifferential(complex, &image).is_zero() {
            return LefschetzVerdict { holds: false, witness: Some(h) };
        }
    }
    LefschetzVerdict { holds: true, witness: None }
}

/// For k = 1..m, whether [ω^k] ∧ · : H^{m-k} → H^{m+k} is an isomorphism.
pub fn hard_lefschetz(complex: &CeComplex, omega: &SymplecticForm) -> Vec<bool> {
    let m = omega.half();
    (1..=m)
        .map(|k| {
            let from = complex.betti(m - k);
            complex.betti(m + k) == from
                && complex.induced_wedge_map(&omega.power(k), m - k).rank() == from
        })
        .collect()
}
