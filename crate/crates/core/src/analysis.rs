//! Everything the checkers need about one group, computed once, and the
//! serializable record built from it.

use serde::{Deserialize, Serialize};

use crate::codes::{delta, DeltaOptions, DeltaReport, Route};
use crate::error::Result;
use crate::group::GroupTable;
use crate::lattice::{core_o2, prime_signature, sylow, PrimeSignature, SubgroupLattice};
use crate::limits::Limits;
use crate::shape::{recognize_shape, recognize_subgroup_shape, ShapeTag};
use crate::subgroup::Subgroup;
use crate::theorems::{run_group_checks, CheckResult, CheckStatus};

pub struct Analysis {
    pub group: GroupTable,
    pub limits: Limits,
    pub lattice: SubgroupLattice,
    pub delta: DeltaReport,
    pub signature: PrimeSignature,
    pub solvable: bool,
    pub shape: ShapeTag,
    pub o2: Subgroup,
    pub sylow2: Subgroup,
    pub sylow2_shape: ShapeTag,
}

impl Analysis {
    pub fn new(group: GroupTable, limits: &Limits, options: DeltaOptions) -> Result<Self> {
        let lattice = SubgroupLattice::compute(&group, limits)?;
        let delta = delta(&group, &lattice, options, limits);
        let sylow2 = sylow(&group, 2);
        Ok(Self {
            signature: prime_signature(group.order() as u64),
            solvable: group.is_solvable(),
            shape: recognize_shape(&group),
            o2: core_o2(&group),
            sylow2_shape: recognize_subgroup_shape(&group, &sylow2),
            sylow2,
            delta,
            lattice,
            limits: *limits,
            group,
        })
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    pub fn pi_count(&self) -> usize {
        self.signature.primes.len()
    }

    pub fn delta_count(&self) -> usize {
        self.delta.delta_count
    }

    /// The spec the group was built from, or its display name.
    pub fn spec(&self) -> String {
        self.group
            .source()
            .map_or_else(|| self.group.name().to_string(), ToString::to_string)
    }

    /// Whether a nontrivial proper class is a perfect-code class.
    pub fn class_is_code(&self, class: usize) -> bool {
        self.delta.classes.iter().any(|c| c.class == class)
    }
}

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeltaClassRecord {
    pub order: usize,
    pub class_size: usize,
    pub shape: String,
    pub routes: Vec<Route>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisRecord {
    pub schema_version: u32,
    pub spec: String,
    pub order: usize,
    pub pi: Vec<u64>,
    pub solvable: bool,
    pub shape: String,
    pub sylow2_shape: String,
    pub o2_order: usize,
    pub subgroup_count: usize,
    pub class_count: usize,
    pub delta_count: usize,
    pub delta_classes: Vec<DeltaClassRecord>,
    /// Cyclic 2-group or generalized quaternion: the family with empty Δ.
    pub empty_delta_family: bool,
    pub checks: Vec<CheckResult>,
    /// Route disagreements from audit mode; `None` when not audited.
    pub audit_disagreements: Option<Vec<String>>,
}

impl AnalysisRecord {
    pub fn checks_failed(&self) -> usize {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail).count()
    }

    pub const CSV_HEADER: &'static str = "spec,order,pi,solvable,sylow2_shape,o2_order,delta_count,checks_failed";

    pub fn csv_row(&self) -> String {
        let pi: Vec<String> = self.pi.iter().map(ToString::to_string).collect();
        let spec = if self.spec.contains([',', '"']) {
            format!("\"{}\"", self.spec.replace('"', "\"\""))
        } else {
            self.spec.clone()
        };
        format!(
            "{},{},{},{},{},{},{},{}",
            spec,
            self.order,
            pi.join(" "),
            self.solvable,
            self.sylow2_shape,
            self.o2_order,
            self.delta_count,
            self.checks_failed()
        )
    }
}

/// Run the checkers and assemble the record.
pub fn record(a: &Analysis, audited: bool) -> AnalysisRecord {
    let delta_classes = a
        .delta
        .classes
        .iter()
        .map(|c| {
            let h = a.lattice.representative(c.class);
            DeltaClassRecord {
                order: c.order,
                class_size: c.class_size,
                shape: recognize_subgroup_shape(&a.group, h).to_string(),
                routes: c.routes.clone(),
            }
        })
        .collect();
    AnalysisRecord {
        schema_version: SCHEMA_VERSION,
        spec: a.spec(),
        order: a.order(),
        pi: a.signature.primes.clone(),
        solvable: a.solvable,
        shape: a.shape.to_string(),
        sylow2_shape: a.sylow2_shape.to_string(),
        o2_order: a.o2.order(),
        subgroup_count: a.lattice.total_count(),
        class_count: a.lattice.classes().len(),
        delta_count: a.delta_count(),
        delta_classes,
        empty_delta_family: crate::theorems::in_empty_delta_family(a),
        checks: run_group_checks(a),
        audit_disagreements: audited.then(|| a.delta.disagreements.clone()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::build;

    #[test]
    fn record_round_trips_through_json() {
        let g = build("sl2:5").unwrap();
        let a = Analysis::new(g, &Limits::default(), DeltaOptions::default()).unwrap();
        let r = record(&a, false);
        assert_eq!(r.delta_count, 4);
        assert_eq!(r.delta_classes.len(), r.delta_count);
        let text = serde_json::to_string(&r).unwrap();
        let back: AnalysisRecord = serde_json::from_str(&text).unwrap();
        assert_eq!(back, r);
        assert!(r.csv_row().starts_with("sl2:5,120,2 3 5,false,generalized_quaternion(8),2,4,"));
    }
}
