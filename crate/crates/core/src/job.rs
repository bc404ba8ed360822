//! JSON job files: group, cocycle and boundary specifications.
//!
//! ```json
//! {
//!   "group": {"dihedral": {"k": 3}},
//!   "cocycle": "trivial",
//!   "boundary": {"lagrangian": {"subgroup": [0, 1, 2], "gamma": "trivial"}},
//!   "n": 2
//! }
//! ```

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cohomology::{check_two_cochain, ThreeCocycle, TwoCochain};
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};
use crate::gset::CrossedGSet;
use crate::lagrangian::LagrangianData;
use crate::monomial::MonomialYD;
use crate::phase::Phase;

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic { m: usize },
    Dihedral { k: usize },
    Symmetric { n: usize },
    Product { factors: Vec<GroupSpec> },
    /// Multiplication table, `table[a][b] = a·b`.
    Table(Vec<Vec<usize>>),
}

#[derive(Clone, Debug, Default, Deserialize, Serialize, PartialEq)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum CocycleSpec {
    #[default]
    Trivial,
    Cyclic { m: usize, p: usize },
    /// Listed values `[a, b, c, "num/den"]`; unlisted triples are 1.
    Table { values: Vec<(usize, usize, usize, Phase)> },
}

#[derive(Clone, Debug, Default, Deserialize, Serialize, PartialEq)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum CochainSpec {
    #[default]
    Trivial,
    /// Listed values `[a, b, "num/den"]` on elements of `H`; others are 1.
    Table { values: Vec<(usize, usize, Phase)> },
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(rename_all = "lowercase", deny_unknown_fields)]
pub enum BoundarySpec {
    Lagrangian {
        subgroup: Vec<usize>,
        #[serde(default)]
        gamma: CochainSpec,
    },
    /// An arbitrary monomial module.
    Module {
        size: usize,
        /// `action[g][x] = g·x`
        action: Vec<Vec<usize>>,
        grade: Vec<usize>,
        /// Listed values `[g, x, "num/den"]`; others are 1.
        #[serde(default)]
        lambda: Vec<(usize, usize, Phase)>,
    },
}

#[derive(Clone, Debug, Deserialize, Serialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub group: GroupSpec,
    #[serde(default)]
    pub cocycle: CocycleSpec,
    /// One boundary, used for every tensor factor.
    #[serde(default)]
    pub boundary: Option<BoundarySpec>,
    /// One boundary per tensor factor (pure braids of mixed boundaries).
    #[serde(default)]
    pub boundaries: Option<Vec<BoundarySpec>>,
    #[serde(default)]
    pub n: Option<usize>,
    /// Pure-braid generators `A_{i,j}`, 1-based.
    #[serde(default)]
    pub pairs: Option<Vec<(usize, usize)>>,
    #[serde(default)]
    pub max_tuples: Option<u64>,
    #[serde(default)]
    pub cap: Option<u64>,
}

impl JobSpec {
    pub fn from_json(text: &str) -> Result<JobSpec> {
        serde_json::from_str(text).map_err(|e| Error::Input(e.to_string()))
    }
}

/// One validation step of a job.
#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckEntry {
    pub check: String,
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

/// A validated job.
#[derive(Clone, Debug)]
pub struct Job {
    pub group: Arc<FiniteGroup>,
    pub omega: Arc<ThreeCocycle>,
    /// Tensor factors in order; a single entry when `boundary` was given.
    pub modules: Vec<Arc<MonomialYD>>,
    pub lagrangians: Vec<Option<LagrangianData>>,
    pub homogeneous: bool,
    pub spec: JobSpec,
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic { m } => FiniteGroup::cyclic(*m),
            GroupSpec::Dihedral { k } => FiniteGroup::dihedral(*k),
            GroupSpec::Symmetric { n } => FiniteGroup::symmetric(*n),
            GroupSpec::Product { factors } => {
                let f = factors.iter().map(GroupSpec::build).collect::<Result<Vec<_>>>()?;
                FiniteGroup::direct_product(&f)
            }
            GroupSpec::Table(t) => FiniteGroup::from_table(t.len(), t),
        }
    }
}

impl CocycleSpec {
    pub fn build(&self, group: &Arc<FiniteGroup>) -> Result<ThreeCocycle> {
        match self {
            CocycleSpec::Trivial => Ok(ThreeCocycle::trivial(group.clone())),
            CocycleSpec::Cyclic { m, p } => {
                if *m != group.order() {
                    return Err(Error::NotCyclic { m: *m, reason: format!("group has order {}", group.order()) });
                }
                ThreeCocycle::cyclic(group.clone(), *p)
            }
            CocycleSpec::Table { values } => {
                let n = group.order();
                let mut table = vec![Phase::ONE; n * n * n];
                for &(a, b, c, p) in values {
                    for x in [a, b, c] {
                        group.check_element(x)?;
                    }
                    table[(a * n + b) * n + c] = p;
                }
                crate::cohomology::check_three_cocycle(group.clone(), &table)
            }
        }
    }
}

impl CochainSpec {
    pub fn build(&self, omega: &ThreeCocycle, subgroup: &Subgroup) -> Result<TwoCochain> {
        let values: Vec<(usize, usize, Phase)> = match self {
            CochainSpec::Trivial => Vec::new(),
            CochainSpec::Table { values } => values.clone(),
        };
        for &(a, b, _) in &values {
            for x in [a, b] {
                if !subgroup.contains(x) {
                    return Err(Error::ElementNotInSubgroup(x));
                }
            }
        }
        check_two_cochain(omega, subgroup, |a, b| {
            values.iter().rev().find(|v| (v.0, v.1) == (a, b)).map_or(Phase::ONE, |v| v.2)
        })
    }
}

impl BoundarySpec {
    fn build(
        &self,
        omega: &Arc<ThreeCocycle>,
        name: &str,
        log: &mut Vec<CheckEntry>,
    ) -> Result<(Arc<MonomialYD>, Option<LagrangianData>)> {
        let g = omega.group();
        match self {
            BoundarySpec::Lagrangian { subgroup, gamma } => {
                let h = step(log, format!("{name}: subgroup"), || Subgroup::new(g.clone(), subgroup))?;
                step(log, format!("{name}: ω restricted to H"), || omega.check_restriction(&h))?;
                let gamma = step(log, format!("{name}: δγ = ω on H"), || gamma.build(omega, &h))?;
                let l = step(log, format!("{name}: Lagrangian module"), || {
                    LagrangianData::new(omega.clone(), gamma)
                })?;
                step(log, format!("{name}: action composition"), || {
                    match l.action_composition_check().violation {
                        None => Ok(()),
                        Some(v) => Err(Error::InvalidModule(format!(
                            "composition law fails at g={}, h={}, x={}",
                            v.g, v.h, v.label
                        ))),
                    }
                })?;
                Ok((l.module().clone(), Some(l)))
            }
            BoundarySpec::Module { size, action, grade, lambda } => {
                let m = step(log, format!("{name}: monomial module"), || {
                    if action.len() != g.order() || action.iter().any(|r| r.len() != *size) || grade.len() != *size {
                        return Err(Error::InvalidModule("action or grade table has the wrong shape".into()));
                    }
                    let labels = CrossedGSet::new(g.clone(), *size, |a, x| action[a][x], |x| grade[x])?;
                    for &(a, x, _) in lambda {
                        g.check_element(a)?;
                        if x >= *size {
                            return Err(Error::InvalidModule(format!("label {x} out of range")));
                        }
                    }
                    MonomialYD::new(omega.clone(), labels, |a, x| {
                        lambda.iter().rev().find(|v| (v.0, v.1) == (a, x)).map_or(Phase::ONE, |v| v.2)
                    })
                })?;
                Ok((Arc::new(m), None))
            }
        }
    }
}

fn step<T>(log: &mut Vec<CheckEntry>, check: String, f: impl FnOnce() -> Result<T>) -> Result<T> {
    let r = f();
    log.push(CheckEntry { check, ok: r.is_ok(), error: r.as_ref().err().map(|e| e.to_string()) });
    r
}

impl Job {
    /// Validates every part of the spec, recording each check in `log`;
    /// stops at the first failure.
    pub fn build_logged(spec: &JobSpec, log: &mut Vec<CheckEntry>) -> Result<Job> {
        let group = Arc::new(step(log, "group".into(), || spec.group.build())?);
        let omega = Arc::new(step(log, "3-cocycle".into(), || spec.cocycle.build(&group))?);
        let boundaries: Vec<BoundarySpec> = match (&spec.boundary, &spec.boundaries) {
            (Some(b), None) => vec![b.clone()],
            (None, Some(bs)) if !bs.is_empty() => bs.clone(),
            (None, None) => Vec::new(),
            _ => {
                return step(log, "boundaries".into(), || {
                    Err(Error::Input("give either `boundary` or a nonempty `boundaries`".into()))
                })
            }
        };
        let mut modules = Vec::new();
        let mut lagrangians = Vec::new();
        for (k, b) in boundaries.iter().enumerate() {
            let name = if spec.boundaries.is_some() { format!("boundary {}", k + 1) } else { "boundary".into() };
            let (m, l) = b.build(&omega, &name, log)?;
            modules.push(m);
            lagrangians.push(l);
        }
        Ok(Job {
            group,
            omega,
            modules,
            lagrangians,
            homogeneous: spec.boundaries.is_none(),
            spec: spec.clone(),
        })
    }

    pub fn build(spec: &JobSpec) -> Result<Job> {
        Job::build_logged(spec, &mut Vec::new())
    }

    /// The single boundary module of a homogeneous job.
    pub fn module(&self) -> Result<&Arc<MonomialYD>> {
        match (self.homogeneous, self.modules.first()) {
            (true, Some(m)) => Ok(m),
            _ => Err(Error::Input("this command needs a single `boundary`".into())),
        }
    }

    /// Number of strands: `n` from the spec, or the number of boundaries.
    pub fn strands(&self) -> Result<usize> {
        match (self.spec.n, self.homogeneous) {
            (Some(n), true) if n >= 1 => Ok(n),
            (Some(_), true) => Err(Error::Input("n must be at least 1".into())),
            (None, true) => Err(Error::Input("missing `n`".into())),
            (Some(n), false) if n != self.modules.len() => {
                Err(Error::Input(format!("n = {n} but {} boundaries were given", self.modules.len())))
            }
            (_, false) => Ok(self.modules.len()),
        }
    }

    /// Tensor factors for `n` strands.
    pub fn factors(&self, n: usize) -> Result<Vec<Arc<MonomialYD>>> {
        if self.homogeneous {
            Ok(vec![self.module()?.clone(); n])
        } else {
            Ok(self.modules.clone())
        }
    }
}
