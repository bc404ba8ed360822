//! Monomial twisted Yetter-Drinfeld modules, their tensor products and the
//! regular-orbit description of `Hom(1, X₁ ⊗ ⋯ ⊗ Xₙ)`.

use std::sync::Arc;

use rayon::prelude::*;

use crate::cohomology::ThreeCocycle;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::gset::{CrossedGSet, GSet};
use crate::phase::Phase;

/// Default cap on `|X₁|⋯|Xₙ|` for tuple enumeration.
pub const DEFAULT_MAX_TUPLES: u128 = 10_000_000;

/// A crossed G-set `X` together with `λ : G × X → μ_∞` describing
/// `g ▷ v_x = λ(g;x) v_{g·x}`.
#[derive(Clone, Debug)]
pub struct MonomialYD {
    omega: Arc<ThreeCocycle>,
    labels: CrossedGSet,
    /// `lambda[g * |X| + x]`
    lambda: Vec<Phase>,
}

/// First failure of `λ(gh;x) = ω(g,h;|x|)·λ(g;h·x)·λ(h;x)`, if any.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionReport {
    pub checked: usize,
    pub violation: Option<CompositionViolation>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CompositionViolation {
    pub g: usize,
    pub h: usize,
    pub label: usize,
}

impl CompositionReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

impl MonomialYD {
    /// Builds and validates a monomial module.
    pub fn new(
        omega: Arc<ThreeCocycle>,
        labels: CrossedGSet,
        lambda: impl Fn(usize, usize) -> Phase,
    ) -> Result<MonomialYD> {
        let m = Self::new_unchecked(omega, labels, lambda)?;
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        omega: Arc<ThreeCocycle>,
        labels: CrossedGSet,
        lambda: impl Fn(usize, usize) -> Phase,
    ) -> Result<MonomialYD> {
        if omega.group() != labels.group() {
            return Err(Error::MixedAmbientData);
        }
        let nx = labels.size();
        let lambda = (0..omega.group().order())
            .flat_map(|g| (0..nx).map(move |x| (g, x)))
            .map(|(g, x)| lambda(g, x))
            .collect();
        Ok(MonomialYD { omega, labels, lambda })
    }

    /// Untwisted linearization `C[X]` of a crossed G-set (`λ ≡ 1`).
    pub fn linearization(omega: Arc<ThreeCocycle>, labels: CrossedGSet) -> Result<MonomialYD> {
        MonomialYD::new(omega, labels, |_, _| Phase::ONE)
    }

    pub fn validate(&self) -> Result<()> {
        for x in 0..self.size() {
            if !self.lambda(0, x).is_one() {
                return Err(Error::InvalidModule(format!("λ(e;{x}) != 1")));
            }
        }
        if let Some(v) = self.composition_check().violation {
            return Err(Error::InvalidModule(format!(
                "composition law fails at g={}, h={}, x={}",
                v.g, v.h, v.label
            )));
        }
        Ok(())
    }

    /// Exhaustive check of the twisted action law.
    pub fn composition_check(&self) -> CompositionReport {
        let g = self.group();
        let n = g.order();
        let nx = self.size();
        let violation = (0..n).into_par_iter().find_map_first(|a| {
            for b in 0..n {
                let ab = g.mul(a, b);
                for x in 0..nx {
                    let lhs = self.lambda(ab, x);
                    let rhs = self.omega.omega_pair(a, b, self.grade(x))
                        * self.lambda(a, self.act(b, x))
                        * self.lambda(b, x);
                    if lhs != rhs {
                        return Some(CompositionViolation { g: a, h: b, label: x });
                    }
                }
            }
            None
        });
        CompositionReport { checked: n * n * nx, violation }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.omega.group()
    }

    pub fn omega(&self) -> &Arc<ThreeCocycle> {
        &self.omega
    }

    pub fn labels(&self) -> &CrossedGSet {
        &self.labels
    }

    pub fn size(&self) -> usize {
        self.labels.size()
    }

    #[inline]
    pub fn grade(&self, x: usize) -> usize {
        self.labels.grade(x)
    }

    #[inline]
    pub fn act(&self, g: usize, x: usize) -> usize {
        self.labels.act(g, x)
    }

    #[inline]
    pub fn lambda(&self, g: usize, x: usize) -> Phase {
        self.lambda[g * self.size() + x]
    }

    /// Copy with one λ entry replaced, bypassing validation (fault injection).
    #[doc(hidden)]
    pub fn with_lambda_entry(&self, g: usize, x: usize, value: Phase) -> MonomialYD {
        let mut m = self.clone();
        let nx = m.size();
        m.lambda[g * nx + x] = value;
        m
    }

    /// Same group and cocycle.
    pub fn same_ambient(&self, other: &MonomialYD) -> bool {
        Arc::ptr_eq(&self.omega, &other.omega) || *self.omega == *other.omega
    }
}

/// A tuple `(x₁,…,xₙ)` of labels with the product of their degrees.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedTuple {
    pub entries: Vec<usize>,
    pub product_grade: usize,
}

/// `X₁ ⊗ ⋯ ⊗ Xₙ` (left-nested), with tuples encoded in mixed radix so that
/// numeric order of codes is lexicographic order of tuples.
#[derive(Clone, Debug)]
pub struct TensorProduct {
    factors: Vec<Arc<MonomialYD>>,
    /// `radix[i] = |X_{i+1}|⋯|X_n|`
    radix: Vec<u64>,
}

impl TensorProduct {
    pub fn new(factors: Vec<Arc<MonomialYD>>) -> Result<TensorProduct> {
        if factors.is_empty() {
            return Err(Error::Input("at least one tensor factor is required".into()));
        }
        if factors.iter().any(|f| !f.same_ambient(&factors[0])) {
            return Err(Error::MixedAmbientData);
        }
        let n = factors.len();
        let mut radix = vec![1u64; n];
        let mut acc: u128 = 1;
        for i in (0..n).rev() {
            radix[i] = acc.min(u64::MAX as u128) as u64;
            acc = acc.saturating_mul(factors[i].size() as u128);
        }
        if acc > u64::MAX as u128 {
            return Err(Error::SizeLimitExceeded { needed: acc, cap: u64::MAX as u128 });
        }
        Ok(TensorProduct { factors, radix })
    }

    /// `V^{⊗n}`.
    pub fn power(m: Arc<MonomialYD>, n: usize) -> Result<TensorProduct> {
        TensorProduct::new(vec![m; n])
    }

    pub fn factors(&self) -> &[Arc<MonomialYD>] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        self.factors[0].group()
    }

    pub fn omega(&self) -> &Arc<ThreeCocycle> {
        self.factors[0].omega()
    }

    /// `|X₁|⋯|Xₙ|`.
    pub fn total_tuples(&self) -> u128 {
        self.factors.iter().map(|f| f.size() as u128).product()
    }

    pub fn check_size(&self, cap: u128) -> Result<()> {
        let needed = self.total_tuples();
        if needed > cap {
            Err(Error::SizeLimitExceeded { needed, cap })
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn encode(&self, entries: &[usize]) -> u64 {
        entries.iter().zip(&self.radix).map(|(&x, &r)| x as u64 * r).sum()
    }

    #[inline]
    pub fn entry(&self, code: u64, i: usize) -> usize {
        ((code / self.radix[i]) % self.factors[i].size() as u64) as usize
    }

    pub fn decode(&self, code: u64) -> Vec<usize> {
        (0..self.len()).map(|i| self.entry(code, i)).collect()
    }

    pub fn grade(&self, entries: &[usize]) -> usize {
        let g = self.group();
        entries
            .iter()
            .zip(&self.factors)
            .fold(0, |acc, (&x, f)| g.mul(acc, f.grade(x)))
    }

    /// `|x₁|⋯|x_k|`.
    pub fn grade_prefix(&self, entries: &[usize], k: usize) -> usize {
        self.grade(&entries[..k])
    }

    /// Diagonal action on a tuple.
    pub fn act(&self, g: usize, entries: &[usize]) -> Vec<usize> {
        entries.iter().zip(&self.factors).map(|(&x, f)| f.act(g, x)).collect()
    }

    pub fn act_code(&self, g: usize, code: u64) -> u64 {
        (0..self.len())
            .map(|i| self.factors[i].act(g, self.entry(code, i)) as u64 * self.radix[i])
            .sum()
    }

    /// `λ_{Xⁿ}(g;x₁,…,xₙ) = ∏ λ(g;xᵢ) · ∏_{j≥2} ω(g; |x₁|⋯|x_{j−1}|, |x_j|)`.
    pub fn tuple_lambda(&self, g: usize, entries: &[usize]) -> Phase {
        let grp = self.group();
        let omega = self.omega();
        let mut phase = Phase::ONE;
        let mut prefix = 0;
        for (j, (&x, f)) in entries.iter().zip(&self.factors).enumerate() {
            phase *= f.lambda(g, x);
            let d = f.grade(x);
            if j > 0 {
                phase *= omega.omega_action(g, prefix, d);
            }
            prefix = grp.mul(prefix, d);
        }
        phase
    }

    /// All tuples whose degrees multiply to the identity, in lexicographic order.
    pub fn graded_codes(&self, cap: u128) -> Result<Vec<u64>> {
        self.check_size(cap)?;
        let g = self.group();
        let n = self.len();
        // labels of the last factor grouped by degree
        let last = &self.factors[n - 1];
        let mut by_grade: Vec<Vec<usize>> = vec![Vec::new(); g.order()];
        for x in 0..last.size() {
            by_grade[last.grade(x)].push(x);
        }
        let mut out = Vec::new();
        let mut stack = vec![0usize; n];
        fn rec(
            tp: &TensorProduct,
            by_grade: &[Vec<usize>],
            pos: usize,
            prefix: usize,
            stack: &mut Vec<usize>,
            out: &mut Vec<u64>,
        ) {
            let g = tp.group();
            let n = tp.len();
            if pos == n - 1 {
                for &x in &by_grade[g.inv(prefix)] {
                    stack[pos] = x;
                    out.push(tp.encode(stack));
                }
                return;
            }
            let f = &tp.factors[pos];
            for x in 0..f.size() {
                stack[pos] = x;
                rec(tp, by_grade, pos + 1, g.mul(prefix, f.grade(x)), stack, out);
            }
        }
        rec(self, &by_grade, 0, 0, &mut stack, &mut out);
        Ok(out)
    }

    pub fn enumerate_graded_tuples(&self, cap: u128) -> Result<Vec<GradedTuple>> {
        Ok(self
            .graded_codes(cap)?
            .into_iter()
            .map(|c| GradedTuple { entries: self.decode(c), product_grade: 0 })
            .collect())
    }

    /// Per-label stabilizer bitsets for each factor.
    fn stabilizer_masks(&self) -> Vec<Vec<GroupMask>> {
        let g = self.group();
        self.factors
            .iter()
            .map(|f| {
                (0..f.size())
                    .map(|x| {
                        let mut m = GroupMask::default();
                        for a in g.elements() {
                            if f.act(a, x) == x {
                                m.set(a);
                            }
                        }
                        m
                    })
                    .collect()
            })
            .collect()
    }

    fn tuple_stabilizer(&self, masks: &[Vec<GroupMask>], entries: &[usize]) -> GroupMask {
        let mut m = GroupMask::full(self.group().order());
        for (i, &x) in entries.iter().enumerate() {
            m.and(&masks[i][x]);
            if m.is_identity_only() {
                break;
            }
        }
        m
    }

    /// Regularity: `λ_{Xⁿ}(g;t) = 1` for every `g` fixing each entry of `t`.
    pub fn is_regular(&self, entries: &[usize]) -> bool {
        let masks = self.stabilizer_masks();
        self.is_regular_with(&masks, entries)
    }

    fn is_regular_with(&self, masks: &[Vec<GroupMask>], entries: &[usize]) -> bool {
        let stab = self.tuple_stabilizer(masks, entries);
        if stab.is_identity_only() {
            return true;
        }
        let regular = stab.iter().all(|g| self.tuple_lambda(g, entries).is_one());
        regular
    }
}

/// Subset of a group of order at most 256.
#[derive(Clone, Copy, Default, Debug, PartialEq, Eq)]
struct GroupMask([u64; 4]);

impl GroupMask {
    fn full(order: usize) -> GroupMask {
        let mut m = GroupMask::default();
        for g in 0..order {
            m.set(g);
        }
        m
    }
    fn set(&mut self, g: usize) {
        self.0[g / 64] |= 1 << (g % 64);
    }
    fn and(&mut self, other: &GroupMask) {
        for i in 0..4 {
            self.0[i] &= other.0[i];
        }
    }
    fn is_identity_only(&self) -> bool {
        self.0 == [1, 0, 0, 0]
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..256).filter(move |&g| self.0[g / 64] & (1 << (g % 64)) != 0)
    }
}

#[derive(Clone, Copy, Debug)]
pub struct OrbitOptions {
    pub max_tuples: u128,
    /// Re-test regularity on every orbit member, not only the representative.
    pub check_all_members: bool,
}

impl Default for OrbitOptions {
    fn default() -> Self {
        OrbitOptions { max_tuples: DEFAULT_MAX_TUPLES, check_all_members: false }
    }
}

/// Orbits of the diagonal action on `(X₁×⋯×Xₙ)_e`.
#[derive(Clone, Debug)]
pub struct OrbitTable {
    product: TensorProduct,
    /// Grade-e tuple codes, sorted.
    codes: Vec<u64>,
    orbit_of: Vec<u32>,
    transporter: Vec<u8>,
    /// Index (into `codes`) of each orbit's representative, increasing.
    reps: Vec<u32>,
    sizes: Vec<u32>,
    regular: Vec<bool>,
    /// Position of each regular orbit in the basis, if regular.
    basis_pos: Vec<Option<u32>>,
    basis: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct OrbitSummary {
    pub rep: Vec<usize>,
    pub size: usize,
    pub regular: bool,
}

impl OrbitTable {
    pub fn new(product: TensorProduct, options: OrbitOptions) -> Result<OrbitTable> {
        let codes = product.graded_codes(options.max_tuples)?;
        let g = product.group().clone();
        let index = |c: u64| codes.binary_search(&c).expect("orbit stays in degree e");
        let mut orbit_of = vec![u32::MAX; codes.len()];
        let mut transporter = vec![u8::MAX; codes.len()];
        let mut reps = Vec::new();
        let mut sizes = Vec::new();
        for t in 0..codes.len() {
            if orbit_of[t] != u32::MAX {
                continue;
            }
            let id = reps.len() as u32;
            reps.push(t as u32);
            let mut size = 0;
            for a in g.elements() {
                let y = index(product.act_code(a, codes[t]));
                if orbit_of[y] == u32::MAX {
                    orbit_of[y] = id;
                    size += 1;
                }
                let inv = g.inv(a) as u8;
                if transporter[y] == u8::MAX || inv < transporter[y] {
                    transporter[y] = inv;
                }
            }
            sizes.push(size);
        }

        let masks = product.stabilizer_masks();
        let regular: Vec<bool> = reps
            .par_iter()
            .map(|&t| product.is_regular_with(&masks, &product.decode(codes[t as usize])))
            .collect();
        if options.check_all_members {
            let bad = (0..codes.len()).into_par_iter().find_first(|&t| {
                product.is_regular_with(&masks, &product.decode(codes[t]))
                    != regular[orbit_of[t] as usize]
            });
            if let Some(t) = bad {
                return Err(Error::Internal(format!(
                    "regularity is not constant on the orbit of {:?}",
                    product.decode(codes[t])
                )));
            }
        }
        let mut basis_pos = vec![None; reps.len()];
        let mut basis = Vec::new();
        for (o, &r) in reps.iter().enumerate() {
            if regular[o] {
                basis_pos[o] = Some(basis.len() as u32);
                basis.push(r);
            }
        }
        Ok(OrbitTable {
            product,
            codes,
            orbit_of,
            transporter,
            reps,
            sizes,
            regular,
            basis_pos,
            basis,
        })
    }

    pub fn product(&self) -> &TensorProduct {
        &self.product
    }

    pub fn num_tuples(&self) -> usize {
        self.codes.len()
    }

    pub fn num_orbits(&self) -> usize {
        self.reps.len()
    }

    pub fn num_regular(&self) -> usize {
        self.basis.len()
    }

    pub fn tuple(&self, t: usize) -> Vec<usize> {
        self.product.decode(self.codes[t])
    }

    pub fn index_of(&self, entries: &[usize]) -> Option<usize> {
        self.codes.binary_search(&self.product.encode(entries)).ok()
    }

    pub fn orbit_of(&self, t: usize) -> usize {
        self.orbit_of[t] as usize
    }

    /// Tuple index of the orbit representative.
    pub fn rep(&self, orbit: usize) -> usize {
        self.reps[orbit] as usize
    }

    pub fn orbit_size(&self, orbit: usize) -> usize {
        self.sizes[orbit] as usize
    }

    pub fn is_regular_orbit(&self, orbit: usize) -> bool {
        self.regular[orbit]
    }

    /// First group element carrying tuple `t` to its representative.
    pub fn transporter(&self, t: usize) -> usize {
        self.transporter[t] as usize
    }

    /// Basis position of the orbit, if it is regular.
    pub fn basis_position(&self, orbit: usize) -> Option<usize> {
        self.basis_pos[orbit].map(|p| p as usize)
    }

    /// Regular orbit representatives, in lexicographic order.
    pub fn basis(&self) -> Vec<Vec<usize>> {
        self.basis.iter().map(|&t| self.tuple(t as usize)).collect()
    }

    pub fn basis_tuple_index(&self, pos: usize) -> usize {
        self.basis[pos] as usize
    }

    pub fn summaries(&self) -> Vec<OrbitSummary> {
        (0..self.num_orbits())
            .map(|o| OrbitSummary {
                rep: self.tuple(self.rep(o)),
                size: self.orbit_size(o),
                regular: self.regular[o],
            })
            .collect()
    }
}

/// Number of regular orbits of `(Xⁿ)_e`, i.e. `dim Hom(1, V^{⊗n})`.
pub fn dimension(m: &Arc<MonomialYD>, n: usize, options: OrbitOptions) -> Result<usize> {
    let table = OrbitTable::new(TensorProduct::power(m.clone(), n)?, options)?;
    Ok(table.num_regular())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomology::cyclic_cocycle;

    fn semion_module() -> Arc<MonomialYD> {
        // vacuum (degree 0) and a flux of degree 1 with λ(1;flux) = i
        let omega = Arc::new(cyclic_cocycle(2, 1).unwrap());
        let g = omega.group().clone();
        let labels = CrossedGSet::new(g, 2, |_, x| x, |x| x).unwrap();
        Arc::new(
            MonomialYD::new(omega, labels, |g, x| if g == 1 && x == 1 { Phase::I } else { Phase::ONE })
                .unwrap(),
        )
    }

    #[test]
    fn semion_needs_a_square_root_of_minus_one() {
        let m = semion_module();
        assert!(m.composition_check().passed());
        let bad = m.with_lambda_entry(1, 1, Phase::ONE);
        let r = bad.composition_check();
        assert_eq!(r.violation, Some(CompositionViolation { g: 1, h: 1, label: 1 }));
        assert!(bad.validate().is_err());
    }

    #[test]
    fn graded_enumeration() {
        let m = semion_module();
        let tp = TensorProduct::power(m.clone(), 2).unwrap();
        let t = tp.enumerate_graded_tuples(DEFAULT_MAX_TUPLES).unwrap();
        let entries: Vec<Vec<usize>> = t.into_iter().map(|t| t.entries).collect();
        assert_eq!(entries, vec![vec![0, 0], vec![1, 1]]);
        let tp1 = TensorProduct::power(m, 1).unwrap();
        assert_eq!(tp1.graded_codes(DEFAULT_MAX_TUPLES).unwrap(), vec![0]);
        assert!(matches!(
            tp.graded_codes(3),
            Err(Error::SizeLimitExceeded { needed: 4, cap: 3 })
        ));
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let g = Arc::new(FiniteGroup::symmetric(3).unwrap());
        let m = Arc::new(
            MonomialYD::linearization(
                Arc::new(ThreeCocycle::trivial(g.clone())),
                CrossedGSet::conjugation(g.clone()),
            )
            .unwrap(),
        );
        for n in 1..4 {
            let tp = TensorProduct::power(m.clone(), n).unwrap();
            let codes = tp.graded_codes(DEFAULT_MAX_TUPLES).unwrap();
            let brute: Vec<u64> = (0..6u64.pow(n as u32))
                .filter(|&c| tp.grade(&tp.decode(c)) == 0)
                .collect();
            assert_eq!(codes, brute);
        }
    }

    #[test]
    fn charge_is_not_regular() {
        // one label of degree e on which the nontrivial element acts by -1
        let omega = Arc::new(ThreeCocycle::trivial(Arc::new(FiniteGroup::cyclic(2).unwrap())));
        let labels = CrossedGSet::trivial(omega.group().clone(), 1);
        let m = Arc::new(
            MonomialYD::new(omega, labels, |g, _| if g == 1 { Phase::MINUS_ONE } else { Phase::ONE })
                .unwrap(),
        );
        assert_eq!(dimension(&m, 1, OrbitOptions::default()).unwrap(), 0);
        assert_eq!(dimension(&m, 2, OrbitOptions::default()).unwrap(), 1);
        assert_eq!(dimension(&m, 3, OrbitOptions::default()).unwrap(), 0);
    }

    #[test]
    fn trivial_group_orbits_are_singletons() {
        let omega = Arc::new(ThreeCocycle::trivial(Arc::new(FiniteGroup::cyclic(1).unwrap())));
        let labels = CrossedGSet::trivial(omega.group().clone(), 3);
        let m = Arc::new(MonomialYD::linearization(omega, labels).unwrap());
        let opts = OrbitOptions { check_all_members: true, ..Default::default() };
        let t = OrbitTable::new(TensorProduct::power(m, 3).unwrap(), opts).unwrap();
        assert_eq!(t.num_orbits(), 27);
        assert_eq!(t.num_regular(), 27);
    }

    #[test]
    fn semion_dimensions() {
        let m = semion_module();
        let opts = OrbitOptions { check_all_members: true, ..Default::default() };
        assert_eq!(dimension(&m, 2, opts).unwrap(), 2);
        assert_eq!(dimension(&m, 3, opts).unwrap(), 4);
    }
}
