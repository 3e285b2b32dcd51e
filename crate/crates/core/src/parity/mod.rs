//! Parity of the intersection form on `Num(S)`.
//!
//! The form is even iff `K_S` is 2-divisible in `Num(S)`. Writing the
//! reduced fibres as `Φ_j` (with `F_j = d_j Φ_j`), the ramification formula
//! gives `K_S ≡ a1 Φ1 + a2 Φ2`. Both coefficients even is a sufficient
//! criterion for evenness; oddness is only ever asserted for the `A5`
//! family with signatures `[2,5,5]`, `[3,3,3,3]`, where it rests on the
//! checks of [`theta_obstruction_suite`] plus the cited geometric steps.

mod theta;

use std::fmt;

use num_rational::Ratio;
use serde::Serialize;
use thiserror::Error;

pub use theta::{run_theta_suite, run_theta_suite_recorded, theta_obstruction_suite, Evidence, EvidenceKind, ThetaSuiteInputs, CITED_ASSUMPTIONS};

use crate::branching::{is_free_unmixed, surface_invariants, InvariantError, Signature, UnmixedPair};
use crate::chartab::ChartabError;
use crate::fundgroup::AbelianInvariants;
use crate::permgroup::{construct_group, find_isomorphism, GroupError, GroupLabel};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParityError {
    #[error("coefficient of Φ{side} is {value}, not an integer; the signature is not admissible")]
    NonIntegral { side: u8, value: String },
    #[error("diagonal action is not free")]
    NotFree,
    #[error("chi(O_S) = {0}, not 1")]
    NotChiOne(u64),
    #[error(transparent)]
    Invariants(#[from] InvariantError),
    #[error("H1 has free rank {0}")]
    PositiveRank(usize),
    #[error("theta suite check {check} failed: {detail}")]
    ThetaCheck { check: u8, detail: String },
    #[error(transparent)]
    Chartab(#[from] ChartabError),
    #[error(transparent)]
    Group(#[from] GroupError),
}

/// `K_S ≡ a1 Φ1 + a2 Φ2` in `Num(S)`, with `F_j = d_j Φ_j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NumClass {
    pub a1: i64,
    pub a2: i64,
    pub d1: u64,
    pub d2: u64,
}

fn coefficient(sig: &Signature, side: u8) -> Result<(i64, u64), ParityError> {
    let d = sig.lcm();
    let a = sig.orbifold_excess() * Ratio::from_integer(d as i64);
    if !a.is_integer() {
        return Err(ParityError::NonIntegral { side, value: a.to_string() });
    }
    Ok((a.to_integer(), d))
}

/// Coefficients from the signatures alone, with `d_j = lcm` of signature `j`.
pub fn num_class_from_signatures(sig1: &Signature, sig2: &Signature) -> Result<NumClass, ParityError> {
    let (a1, d1) = coefficient(sig1, 1)?;
    let (a2, d2) = coefficient(sig2, 2)?;
    Ok(NumClass { a1, a2, d1, d2 })
}

impl NumClass {
    /// `a_j/d_j + 2 = Σ (1 - 1/m_i)` on both sides.
    pub fn reconstructs(&self, sig1: &Signature, sig2: &Signature) -> bool {
        let side = |a: i64, d: u64, s: &Signature| Ratio::new(a, d as i64) + 2 == s.orbifold_excess() + 2;
        side(self.a1, self.d1, sig1) && side(self.a2, self.d2, sig2)
    }

    pub fn both_even(&self) -> bool {
        self.a1 % 2 == 0 && self.a2 % 2 == 0
    }
}

/// Canonical class of a free pair with `χ(O_S) = 1`.
pub fn canonical_num_class(pair: &UnmixedPair) -> Result<NumClass, ParityError> {
    if !is_free_unmixed(pair).free {
        return Err(ParityError::NotFree);
    }
    let inv = surface_invariants(pair)?;
    if inv.chi != 1 {
        return Err(ParityError::NotChiOne(inv.chi));
    }
    num_class_from_signatures(pair.gv1.signature(), pair.gv2.signature())
}

/// `true` iff `H1` is finite of odd order.
pub fn torsion_gate(h1: &AbelianInvariants) -> Result<bool, ParityError> {
    if h1.free_rank != 0 {
        return Err(ParityError::PositiveRank(h1.free_rank));
    }
    Ok(h1.torsion_order() % 2 == 1)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Even,
    Odd,
    Undetermined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Even => "EVEN",
            Verdict::Odd => "ODD",
            Verdict::Undetermined => "UNDETERMINED",
        })
    }
}

/// Field names are part of the JSON interface.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityVerdict {
    pub verdict: Verdict,
    pub coefficients: Option<(i64, i64)>,
    pub d1: Option<u64>,
    pub d2: Option<u64>,
    /// Order of `H1(S, Z)` when finite.
    pub torsion: Option<u64>,
    pub evidence: Vec<Evidence>,
}

/// Whether the pair is the `A5` family `[2,5,5]` / `[3,3,3,3]`, in either order.
pub fn is_main_family(pair: &UnmixedPair) -> bool {
    let main = (vec![2, 5, 5], vec![3, 3, 3, 3]);
    let sigs = (pair.gv1.signature().sorted(), pair.gv2.signature().sorted());
    let sig_ok = sigs == main || (sigs.1.clone(), sigs.0.clone()) == main;
    sig_ok && pair.group().order() == 60 && construct_group(&GroupLabel::A5).is_ok_and(|a5| find_isomorphism(pair.group(), &a5).is_some())
}

/// Parity decision; a published annotation, when given, is attached as a
/// literature note and never influences the verdict.
pub fn parity_verdict(pair: &UnmixedPair, h1: &AbelianInvariants, annotation: Option<&str>) -> ParityVerdict {
    let mut out = ParityVerdict { verdict: Verdict::Undetermined, coefficients: None, d1: None, d2: None, torsion: None, evidence: Vec::new() };
    let finish = |mut out: ParityVerdict| {
        if let Some(note) = annotation {
            out.evidence.push(Evidence::literature_note(format!("published parity: {note}")));
        }
        out
    };
    if h1.free_rank == 0 {
        out.torsion = u64::try_from(h1.torsion_order()).ok();
    }
    let class = match canonical_num_class(pair) {
        Ok(c) => c,
        Err(e) => {
            out.evidence.push(Evidence::machine("canonical-class", "K_S in the reduced-fibre basis", false, e.to_string()));
            return finish(out);
        }
    };
    out.coefficients = Some((class.a1, class.a2));
    out.d1 = Some(class.d1);
    out.d2 = Some(class.d2);
    out.evidence.push(Evidence::machine(
        "canonical-class",
        "K_S in the reduced-fibre basis",
        class.reconstructs(pair.gv1.signature(), pair.gv2.signature()),
        format!("K_S = {} Phi1 + {} Phi2, F1 = {} Phi1, F2 = {} Phi2", class.a1, class.a2, class.d1, class.d2),
    ));
    if class.both_even() {
        out.evidence.push(Evidence::machine("even-criterion", "both coefficients even", true, "K_S is twice an integral class"));
        out.verdict = Verdict::Even;
        return finish(out);
    }
    out.evidence.push(Evidence::machine("even-criterion", "both coefficients even", true, format!("({}, {}) not both even; the evenness criterion does not apply", class.a1, class.a2)));
    if !is_main_family(pair) {
        return finish(out);
    }
    match torsion_gate(h1) {
        Ok(true) => out.evidence.push(Evidence::machine("torsion-gate", "Tors H1 of odd order", true, format!("H1 = {h1}, order {}", h1.torsion_order()))),
        Ok(false) | Err(_) => {
            out.evidence.push(Evidence::machine("torsion-gate", "Tors H1 of odd order", false, format!("H1 = {h1}")));
            return finish(out);
        }
    }
    let suite = ThetaSuiteInputs::standard().map_err(|e| (e, Vec::new())).and_then(|inputs| run_theta_suite_recorded(&inputs));
    match suite {
        Ok(ev) => {
            out.evidence.extend(ev);
            out.verdict = Verdict::Odd;
        }
        Err((_, ev)) => out.evidence.extend(ev),
    }
    finish(out)
}

impl fmt::Display for ParityVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((a1, a2)) = self.coefficients {
            writeln!(f, "canonical class: K_S = {a1} Phi1 + {a2} Phi2 (d1 = {}, d2 = {})", self.d1.unwrap_or(0), self.d2.unwrap_or(0))?;
        }
        if let Some(t) = self.torsion {
            writeln!(f, "torsion order: {t}")?;
        }
        for e in &self.evidence {
            let status = match e.passed {
                Some(true) => "PASS",
                Some(false) => "FAIL",
                None => match e.kind {
                    EvidenceKind::CitedAssumption => "CITED",
                    EvidenceKind::OpenQuestion => "OPEN",
                    _ => "NOTE",
                },
            };
            writeln!(f, "  [{status}] {}: {} -- {}", e.id, e.anchor, e.detail)?;
        }
        write!(f, "verdict: {}", self.verdict)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(s: &str) -> Signature {
        s.parse().unwrap()
    }

    #[test]
    fn coefficients_from_ramification() {
        let c = num_class_from_signatures(&sig("[2,5,5]"), &sig("[3,3,3,3]")).unwrap();
        assert_eq!((c.a1, c.a2, c.d1, c.d2), (1, 2, 10, 3));
        let c = num_class_from_signatures(&sig("[5,5,5]"), &sig("[5,5,5]")).unwrap();
        assert_eq!((c.a1, c.a2), (2, 2));
        let c = num_class_from_signatures(&sig("[5,5,5]"), &sig("[2,2,2,3]")).unwrap();
        assert_eq!((c.a1, c.a2), (2, 1));
        assert!(c.reconstructs(&sig("[5,5,5]"), &sig("[2,2,2,3]")));
    }

    #[test]
    fn torsion_gate_cases() {
        assert!(torsion_gate(&AbelianInvariants::from_cyclic_orders(&[3, 3, 15])).unwrap());
        assert!(!torsion_gate(&AbelianInvariants::from_cyclic_orders(&[2])).unwrap());
        assert!(torsion_gate(&AbelianInvariants::trivial()).unwrap());
        let infinite = AbelianInvariants { free_rank: 1, torsion: vec![] };
        assert_eq!(torsion_gate(&infinite), Err(ParityError::PositiveRank(1)));
    }

    #[test]
    fn verdict_display_suffix() {
        let v = ParityVerdict { verdict: Verdict::Odd, coefficients: Some((1, 2)), d1: Some(10), d2: Some(3), torsion: Some(135), evidence: vec![] };
        assert!(v.to_string().ends_with("verdict: ODD"));
        let json = serde_json::to_value(&v).unwrap();
        let keys: Vec<&String> = json.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 6);
        assert_eq!(json["verdict"], "odd");
    }
}
