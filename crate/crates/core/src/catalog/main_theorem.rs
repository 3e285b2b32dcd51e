//! End-to-end check of the `A5` family `[2,5,5]` / `[3,3,3,3]`, halting at
//! the first failed stage.

use std::fmt;
use std::sync::Arc;

use serde::Serialize;

use crate::branching::{genus_from_signature, is_free_unmixed, sheet_count_genus, surface_invariants, verify_generating_vector, DescriptorError, PairDescriptor, UnmixedPair};
use crate::fundgroup::{h1_surface, AbelianInvariants};
use crate::parity::{canonical_num_class, parity_verdict, ThetaSuiteInputs, Verdict};
use crate::permgroup::construct_group;

/// The pair in descriptor form (also shipped as `data/main.pair`).
pub const MAIN_PAIR: &str = "\
group = A5
gv1 = (2,4)(3,5) (2,1,3,4,5) (1,2,3,4,5)
sig1 = [2,5,5]
gv2 = (1,2,3) (3,4,5) (4,3,2) (2,1,5)
sig2 = [3,3,3,3]
";

pub fn main_descriptor() -> Result<PairDescriptor, DescriptorError> {
    PairDescriptor::parse(MAIN_PAIR)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    Tuple1,
    Tuple2,
    Genus,
    Freeness,
    Invariants,
    CanonicalClass,
    Homology,
    ThetaSuite,
    Verdict,
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
        f.write_str(&s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageRecord {
    pub stage: Stage,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MainReport {
    pub stages: Vec<StageRecord>,
    pub failed_stage: Option<Stage>,
    pub g1: Option<u64>,
    pub g2: Option<u64>,
    pub chi: Option<u64>,
    pub k_squared: Option<u64>,
    pub q: Option<u64>,
    pub pg: Option<u64>,
    pub coefficients: Option<(i64, i64)>,
    pub h1: Option<AbelianInvariants>,
    pub torsion_order: Option<u64>,
    pub verdict: Verdict,
}

impl MainReport {
    pub fn passed(&self) -> bool {
        self.failed_stage.is_none() && self.verdict == Verdict::Odd
    }
}

/// Inputs of the pipeline; the defaults are the family itself.
#[derive(Debug, Clone)]
pub struct MainInputs {
    pub pair: PairDescriptor,
    pub theta: Option<ThetaSuiteInputs>,
}

impl MainInputs {
    pub fn standard() -> Self {
        MainInputs { pair: main_descriptor().expect("embedded descriptor"), theta: None }
    }
}

pub fn verify_main_theorem() -> MainReport {
    verify_main_with(&MainInputs::standard())
}

struct Pipeline {
    report: MainReport,
}

impl Pipeline {
    fn record(&mut self, stage: Stage, passed: bool, detail: impl Into<String>) -> bool {
        self.report.stages.push(StageRecord { stage, passed, detail: detail.into() });
        if !passed {
            self.report.failed_stage = Some(stage);
        }
        passed
    }
}

pub fn verify_main_with(inputs: &MainInputs) -> MainReport {
    let mut p = Pipeline {
        report: MainReport {
            stages: Vec::new(),
            failed_stage: None,
            g1: None,
            g2: None,
            chi: None,
            k_squared: None,
            q: None,
            pg: None,
            coefficients: None,
            h1: None,
            torsion_order: None,
            verdict: Verdict::Undetermined,
        },
    };
    run(inputs, &mut p);
    p.report
}

fn run(inputs: &MainInputs, p: &mut Pipeline) {
    let d = &inputs.pair;
    let group = match construct_group(&d.group) {
        Ok(g) => Arc::new(g),
        Err(e) => {
            p.record(Stage::Tuple1, false, e.to_string());
            return;
        }
    };
    let gv1 = match verify_generating_vector(&group, &d.gv1, &d.sig1) {
        Ok(v) => v,
        Err(e) => {
            p.record(Stage::Tuple1, false, e.to_string());
            return;
        }
    };
    p.record(Stage::Tuple1, true, format!("{} generates {} of order {}, product 1, orders {:?}", gv1.to_cycle_string(), d.group, group.order(), d.sig1));
    let gv2 = match verify_generating_vector(&group, &d.gv2, &d.sig2) {
        Ok(v) => v,
        Err(e) => {
            p.record(Stage::Tuple2, false, e.to_string());
            return;
        }
    };
    p.record(Stage::Tuple2, true, format!("{} generates {} of order {}, product 1, orders {:?}", gv2.to_cycle_string(), d.group, group.order(), d.sig2));

    let n = group.order() as u64;
    let genera = (genus_from_signature(n, gv1.signature()), genus_from_signature(n, gv2.signature()));
    let (g1, g2) = match genera {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            p.record(Stage::Genus, false, e.to_string());
            return;
        }
    };
    let oracle = (sheet_count_genus(&gv1), sheet_count_genus(&gv2));
    p.report.g1 = Some(g1);
    p.report.g2 = Some(g2);
    if !p.record(Stage::Genus, oracle == (g1 as i64, g2 as i64), format!("g1 = {g1}, g2 = {g2} (sheet count: {}, {})", oracle.0, oracle.1)) {
        return;
    }

    let pair = UnmixedPair::new(gv1, gv2).expect("same group");
    let free = is_free_unmixed(&pair);
    let detail = if free.free { "stabilizer sets intersect only in the identity".to_string() } else { format!("common stabilizer elements: {}", free.intersection.join(" ")) };
    if !p.record(Stage::Freeness, free.free, detail) {
        return;
    }

    let inv = match surface_invariants(&pair) {
        Ok(i) => i,
        Err(e) => {
            p.record(Stage::Invariants, false, e.to_string());
            return;
        }
    };
    p.report.chi = Some(inv.chi);
    p.report.k_squared = Some(inv.k_squared);
    p.report.q = Some(inv.q);
    p.report.pg = Some(inv.pg);
    let ok = inv.chi == 1 && inv.k_squared == 8 && inv.q == 0 && inv.pg == 0;
    if !p.record(Stage::Invariants, ok, format!("chi = {}, K^2 = {}, e = {}, q = {}, p_g = {}", inv.chi, inv.k_squared, inv.c2, inv.q, inv.pg)) {
        return;
    }

    let class = match canonical_num_class(&pair) {
        Ok(c) => c,
        Err(e) => {
            p.record(Stage::CanonicalClass, false, e.to_string());
            return;
        }
    };
    p.report.coefficients = Some((class.a1, class.a2));
    let ok = matches!((class.a1, class.a2), (1, 2) | (2, 1));
    if !p.record(Stage::CanonicalClass, ok, format!("K_S = {} Phi1 + {} Phi2 (F1 = {} Phi1, F2 = {} Phi2)", class.a1, class.a2, class.d1, class.d2)) {
        return;
    }

    let h1 = match h1_surface(&pair) {
        Ok(h) => h,
        Err(e) => {
            p.record(Stage::Homology, false, e.to_string());
            return;
        }
    };
    let order = h1.torsion_order();
    p.report.torsion_order = u64::try_from(order).ok();
    p.report.h1 = Some(h1.clone());
    let ok = h1 == AbelianInvariants::from_cyclic_orders(&[3, 3, 15]) && order % 2 == 1;
    if !p.record(Stage::Homology, ok, format!("H1 = {h1}, invariant factors {:?}, order {order}", h1.torsion)) {
        return;
    }

    let theta = match &inputs.theta {
        Some(t) => Ok(t.clone()),
        None => ThetaSuiteInputs::standard(),
    };
    let suite = theta.map_err(|e| (e, Vec::new())).and_then(|t| crate::parity::run_theta_suite_recorded(&t));
    match suite {
        Ok(ev) => {
            let machine = ev.iter().filter(|e| e.passed == Some(true)).count();
            p.record(Stage::ThetaSuite, true, format!("{machine} machine checks passed; {} cited geometric inputs", ev.iter().filter(|e| e.kind == crate::parity::EvidenceKind::CitedAssumption).count()));
        }
        Err((e, _)) => {
            p.record(Stage::ThetaSuite, false, e.to_string());
            return;
        }
    }

    let verdict = parity_verdict(&pair, &h1, None);
    p.report.verdict = verdict.verdict;
    p.record(Stage::Verdict, verdict.verdict == Verdict::Odd, format!("intersection form on Num(S) is {}", verdict.verdict.to_string().to_lowercase()));
}

impl fmt::Display for MainReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.stages {
            writeln!(f, "[{}] {}: {}", if s.passed { "PASS" } else { "FAIL" }, s.stage, s.detail)?;
        }
        match self.failed_stage {
            None => write!(f, "verdict: {}", self.verdict),
            Some(stage) => write!(f, "halted at stage {stage}\nverdict: {}", self.verdict),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permgroup::parse_perm_list;

    #[test]
    fn main_family_is_odd() {
        let r = verify_main_theorem();
        assert!(r.passed(), "{r}");
        assert_eq!((r.g1, r.g2, r.chi, r.k_squared), (Some(4), Some(21), Some(1), Some(8)));
        assert_eq!(r.coefficients, Some((1, 2)));
        assert_eq!(r.torsion_order, Some(135));
        assert!(r.to_string().ends_with("verdict: ODD"));
    }

    #[test]
    fn mutated_tuple_halts_first() {
        let mut inputs = MainInputs::standard();
        inputs.pair.gv1 = parse_perm_list("(1,2)(3,4) (2,1,3,4,5) (1,2,3,4,5)", 5).unwrap();
        let r = verify_main_with(&inputs);
        assert_eq!(r.failed_stage, Some(Stage::Tuple1));
        assert_eq!(r.stages.len(), 1);
    }

    #[test]
    fn equal_sides_halt_at_freeness() {
        let mut inputs = MainInputs::standard();
        inputs.pair.gv2 = inputs.pair.gv1.clone();
        inputs.pair.sig2 = vec![2, 5, 5];
        assert_eq!(verify_main_with(&inputs).failed_stage, Some(Stage::Freeness));
    }
}
