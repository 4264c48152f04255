//! The JSON document read by `mult` and `crosscheck --input`.

use std::collections::BTreeMap;

use finsym_core::multiplicity::{MultiPartition, SymmetricSpaceCase};
use finsym_core::orbit::{FrobeniusOrbit, OrbitTable, Twist};
use finsym_core::{Error, Partition, Result};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MultiPartitionInput {
    /// Optional here when `--case` is given on the command line.
    #[serde(default)]
    pub case: Option<String>,
    pub n: usize,
    #[serde(default)]
    pub n_plus: Option<usize>,
    #[serde(default)]
    pub n_minus: Option<usize>,
    #[serde(default)]
    pub epsilon: Option<i32>,
    pub twist: Twist,
    /// Abstract orbits; mutually exclusive with `q`.
    #[serde(default)]
    pub orbits: Option<Vec<FrobeniusOrbit>>,
    #[serde(default)]
    pub q: Option<u64>,
    #[serde(default)]
    pub max_level: Option<usize>,
    /// Orbit id (as a string key) to partition.
    pub assignments: BTreeMap<String, Partition>,
}

pub struct Resolved {
    pub case: SymmetricSpaceCase,
    pub table: OrbitTable,
    pub rho: MultiPartition,
}

impl MultiPartitionInput {
    pub fn resolve(self, cli_case: Option<&str>) -> Result<Resolved> {
        let key = match (cli_case, self.case.as_deref()) {
            (Some(a), Some(b)) if a != b => {
                return Err(Error::Incompatible(format!("--case {a} conflicts with \"case\": \"{b}\" in the input")))
            }
            (Some(a), _) => a.to_string(),
            (None, Some(b)) => b.to_string(),
            (None, None) => return Err(Error::Incompatible("no case given".into())),
        };
        let case = SymmetricSpaceCase::try_from(finsym_core::multiplicity::CaseSpec {
            case: key,
            n: self.n,
            n_plus: self.n_plus,
            n_minus: self.n_minus,
            epsilon: self.epsilon,
        })?;
        let table = match (self.orbits, self.q) {
            (Some(orbits), None) => OrbitTable::from_orbits(self.twist, orbits)?,
            (None, Some(q)) => OrbitTable::concrete(q, self.twist, self.max_level.unwrap_or(self.n.max(1)))?,
            _ => return Err(Error::Incompatible("give exactly one of \"orbits\" and \"q\"".into())),
        };
        let mut assignments = BTreeMap::new();
        for (key, p) in self.assignments {
            let id = key.parse::<usize>().map_err(|_| Error::Unknown {
                kind: "orbit id",
                name: key.clone(),
            })?;
            assignments.insert(id, p);
        }
        let rho = MultiPartition::new(&table, assignments)?;
        Ok(Resolved { case, table, rho })
    }
}
