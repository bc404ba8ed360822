//! The Lagrangian modules `L(H, γ)`: induced twisted Yetter-Drinfeld modules
//! with basis `χ_{r,h}`, `r` a left coset representative and `h ∈ H`.

use std::sync::Arc;

use serde::Serialize;

use crate::cohomology::{ThreeCocycle, TwoCochain};
use crate::error::{Error, Result};
use crate::group::{CosetData, FiniteGroup, Subgroup};
use crate::gset::CrossedGSet;
use crate::monomial::{CompositionReport, MonomialYD};
use crate::phase::Phase;

#[derive(Clone, Debug)]
pub struct LagrangianData {
    gamma: TwoCochain,
    cosets: CosetData,
    module: Arc<MonomialYD>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LabelInfo {
    pub index: usize,
    /// Coset representative `r`, as a group element.
    pub r: usize,
    pub h: usize,
    pub grade: usize,
}

impl LagrangianData {
    /// Builds `L(H, γ)`; `γ` must already be validated against `ω`.
    pub fn new(omega: Arc<ThreeCocycle>, gamma: TwoCochain) -> Result<LagrangianData> {
        let subgroup = gamma.subgroup().clone();
        if omega.group() != subgroup.parent() {
            return Err(Error::MixedAmbientData);
        }
        let g = omega.group().clone();
        let cosets = CosetData::new(&subgroup);
        let k = subgroup.order();
        let hs = subgroup.elements().to_vec();
        let reps = cosets.reps().to_vec();

        let labels = CrossedGSet::new(
            g.clone(),
            reps.len() * k,
            |a, x| {
                let (i, h) = (x / k, hs[x % k]);
                let kappa = cosets.kappa(a, i);
                cosets.act(a, i) * k + subgroup.position(g.conj(kappa, h)).unwrap()
            },
            |x| g.conj(reps[x / k], hs[x % k]),
        )?;

        let module = MonomialYD::new_unchecked(omega.clone(), labels, |a, x| {
            induced_lambda(&omega, &gamma, &cosets, a, x / k, hs[x % k])
        })?;
        if let Some(v) = module.composition_check().violation {
            return Err(Error::Internal(format!(
                "induced action fails the composition law at g={}, h={}, x={}",
                v.g, v.h, v.label
            )));
        }
        Ok(LagrangianData { gamma, cosets, module: Arc::new(module) })
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.module.group()
    }

    pub fn omega(&self) -> &Arc<ThreeCocycle> {
        self.module.omega()
    }

    pub fn subgroup(&self) -> &Subgroup {
        self.gamma.subgroup()
    }

    pub fn gamma(&self) -> &TwoCochain {
        &self.gamma
    }

    pub fn cosets(&self) -> &CosetData {
        &self.cosets
    }

    pub fn module(&self) -> &Arc<MonomialYD> {
        &self.module
    }

    pub fn num_labels(&self) -> usize {
        self.module.size()
    }

    /// Index of `χ_{r,h}` for the `i`-th coset representative.
    pub fn label(&self, coset: usize, h: usize) -> Result<usize> {
        let k = self.subgroup().order();
        if coset >= self.cosets.num_cosets() {
            return Err(Error::IndexOutOfRange { index: coset, max: self.cosets.num_cosets() });
        }
        let p = self.subgroup().position(h).ok_or(Error::ElementNotInSubgroup(h))?;
        Ok(coset * k + p)
    }

    /// `(coset index, h)` of a label.
    pub fn split(&self, x: usize) -> (usize, usize) {
        let k = self.subgroup().order();
        (x / k, self.subgroup().elements()[x % k])
    }

    pub fn label_info(&self) -> Vec<LabelInfo> {
        (0..self.num_labels())
            .map(|x| {
                let (i, h) = self.split(x);
                LabelInfo { index: x, r: self.cosets.reps()[i], h, grade: self.module.grade(x) }
            })
            .collect()
    }

    /// `λ(g; r, h)`.
    pub fn lambda_label(&self, g: usize, x: usize) -> Phase {
        self.module.lambda(g, x)
    }

    pub fn action_composition_check(&self) -> CompositionReport {
        self.module.composition_check()
    }
}

/// `g ▷ χ_{r,h} = λ(g;r,h) χ_{g▷r, ^κ h}` with
/// `λ = ω(g▷r, κ; h)·ε(κ, h) / ω(g, r; h)` and `κ = κ(g, r)`.
fn induced_lambda(
    omega: &ThreeCocycle,
    gamma: &TwoCochain,
    cosets: &CosetData,
    g: usize,
    coset: usize,
    h: usize,
) -> Phase {
    let r = cosets.reps()[coset];
    let r2 = cosets.reps()[cosets.act(g, coset)];
    let kappa = cosets.kappa(g, coset);
    omega.omega_pair(r2, kappa, h) * gamma.epsilon_unchecked(kappa, h) / omega.omega_pair(g, r, h)
}

/// The basis `b_{r,h}` (degree `h`) available when `H` is normal and `ω ≡ 1`.
#[derive(Clone, Debug)]
pub struct DecoupledBasis {
    pub module: Arc<MonomialYD>,
    /// `b_{r,h} ↦ χ_{r, r⁻¹hr}`, as label indices.
    pub to_chi: Vec<usize>,
}

pub fn decoupled_basis(l: &LagrangianData) -> Result<DecoupledBasis> {
    let sub = l.subgroup();
    if !sub.is_normal() {
        return Err(Error::SubgroupNotNormal);
    }
    if !l.omega().is_trivial() {
        return Err(Error::NontrivialOmega);
    }
    let g = l.group().clone();
    let k = sub.order();
    let hs = sub.elements();
    let cosets = l.cosets();
    let labels = CrossedGSet::new(
        g.clone(),
        l.num_labels(),
        |a, x| cosets.act(a, x / k) * k + sub.position(g.conj(a, hs[x % k])).unwrap(),
        |x| hs[x % k],
    )?;
    let module = MonomialYD::new(l.omega().clone(), labels, |a, x| {
        let (i, h) = (x / k, hs[x % k]);
        let r = cosets.reps()[i];
        l.gamma().epsilon_unchecked(cosets.kappa(a, i), g.conj(g.inv(r), h))
    })?;
    let to_chi = (0..l.num_labels())
        .map(|x| {
            let (i, h) = (x / k, hs[x % k]);
            let r = cosets.reps()[i];
            i * k + sub.position(g.conj(g.inv(r), h)).unwrap()
        })
        .collect();
    Ok(DecoupledBasis { module: Arc::new(module), to_chi })
}
