//! Monomial matrices of the braid generators on `Hom(1, X₁ ⊗ ⋯ ⊗ Xₙ)` in the
//! basis of averaged regular-orbit representatives.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::Arc;

use indexmap::IndexSet;
use num_complex::Complex;
use num_integer::Integer;
use num_traits::{Float, FloatConst};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{MonomialYD, OrbitOptions, OrbitTable, TensorProduct};
use crate::phase::Phase;

/// Default element cap for [`image_order`].
pub const DEFAULT_IMAGE_CAP: u64 = 1_000_000;

/// A permutation matrix times a diagonal of roots of unity: column `j` has the
/// single entry `phases[j]` in row `perm[j]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialMatrix {
    perm: Vec<usize>,
    phases: Vec<Phase>,
}

impl MonomialMatrix {
    pub fn new(perm: Vec<usize>, phases: Vec<Phase>) -> Result<MonomialMatrix> {
        let d = perm.len();
        if phases.len() != d {
            return Err(Error::Input("perm and phases differ in length".into()));
        }
        let mut seen = vec![false; d];
        for &p in &perm {
            if p >= d || std::mem::replace(&mut seen[p], true) {
                return Err(Error::Input("perm is not a bijection".into()));
            }
        }
        Ok(MonomialMatrix { perm, phases })
    }

    pub fn identity(dim: usize) -> MonomialMatrix {
        MonomialMatrix { perm: (0..dim).collect(), phases: vec![Phase::ONE; dim] }
    }

    pub fn dim(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn phases(&self) -> &[Phase] {
        &self.phases
    }

    /// `self · other`.
    pub fn compose(&self, other: &MonomialMatrix) -> MonomialMatrix {
        assert_eq!(self.dim(), other.dim(), "dimension mismatch");
        let (perm, phases) = other
            .perm
            .iter()
            .zip(&other.phases)
            .map(|(&p, &b)| (self.perm[p], b * self.phases[p]))
            .unzip();
        MonomialMatrix { perm, phases }
    }

    pub fn inverse(&self) -> MonomialMatrix {
        let d = self.dim();
        let mut perm = vec![0; d];
        let mut phases = vec![Phase::ONE; d];
        for j in 0..d {
            perm[self.perm[j]] = j;
            phases[self.perm[j]] = self.phases[j].inv();
        }
        MonomialMatrix { perm, phases }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(j, &p)| p == j) && self.phases.iter().all(Phase::is_one)
    }

    pub fn is_permutation(&self) -> bool {
        self.phases.iter().all(Phase::is_one)
    }

    pub fn determinant(&self) -> Phase {
        let d = self.dim();
        let mut seen = vec![false; d];
        let mut odd = false;
        for s in 0..d {
            let mut len = 0;
            let mut j = s;
            while !seen[j] {
                seen[j] = true;
                j = self.perm[j];
                len += 1;
            }
            if len > 0 && len % 2 == 0 {
                odd = !odd;
            }
        }
        let sign = if odd { Phase::MINUS_ONE } else { Phase::ONE };
        sign * self.phases.iter().copied().product::<Phase>()
    }

    /// Row-major dense matrix.
    pub fn to_dense<T: Float + FloatConst>(&self) -> Vec<Vec<Complex<T>>> {
        let d = self.dim();
        let zero = Complex::new(T::zero(), T::zero());
        let mut m = vec![vec![zero; d]; d];
        for j in 0..d {
            m[self.perm[j]][j] = self.phases[j].to_complex();
        }
        m
    }

    /// Dense CSV with entries `0` or `e(q)` for `exp(2πiq)`.
    pub fn to_csv(&self) -> String {
        let d = self.dim();
        let mut rows = vec![vec!["0".to_string(); d]; d];
        for j in 0..d {
            rows[self.perm[j]][j] = self.phases[j].symbolic();
        }
        let mut out = String::new();
        for r in rows {
            let _ = writeln!(out, "{}", r.join(","));
        }
        out
    }
}

/// `σ'_i` on a tuple (1-based `i`): `(…, |xᵢ|·x_{i+1}, xᵢ, …)`. The result is
/// a tuple of the product with factors `i` and `i+1` swapped.
pub fn sigma_tuple(product: &TensorProduct, i: usize, entries: &[usize]) -> Result<Vec<usize>> {
    check_index(product, i)?;
    let f = product.factors();
    let (x, y) = (entries[i - 1], entries[i]);
    let mut out = entries.to_vec();
    out[i - 1] = f[i].act(f[i - 1].grade(x), y);
    out[i] = x;
    Ok(out)
}

fn check_index(product: &TensorProduct, i: usize) -> Result<()> {
    let n = product.len();
    if i == 0 || i >= n {
        return Err(Error::IndexOutOfRange { index: i, max: n.saturating_sub(1) });
    }
    Ok(())
}

/// Coefficient of `σ'_i(v_t)` on `v_{σ'_i(t)}`:
/// `ω(P, |xᵢ|, |x_{i+1}|)·λ(|xᵢ|; x_{i+1}) / ω(P, |xᵢ||x_{i+1}||xᵢ|⁻¹, |xᵢ|)`
/// with `P = |x₁|⋯|x_{i−1}|`.
pub fn braid_coefficient(product: &TensorProduct, i: usize, entries: &[usize]) -> Result<Phase> {
    check_index(product, i)?;
    let g = product.group();
    let omega = product.omega();
    let f = product.factors();
    let prefix = product.grade_prefix(entries, i - 1);
    let (x, y) = (entries[i - 1], entries[i]);
    let (a, b) = (f[i - 1].grade(x), f[i].grade(y));
    Ok(omega.value(prefix, a, b) * f[i].lambda(a, y) / omega.value(prefix, g.conj(a, b), a))
}

/// `(β_{i,x}, target orbit)` for a basis representative of `source`; `target`
/// is the orbit table of the swapped product.
pub fn beta(source: &OrbitTable, target: &OrbitTable, i: usize, rep: usize) -> Result<(Phase, usize)> {
    let x = source.tuple(rep);
    let s = sigma_tuple(source.product(), i, &x)?;
    let t = target
        .index_of(&s)
        .ok_or_else(|| Error::Internal(format!("σ'_{i} left degree e at {x:?}")))?;
    let orbit = target.orbit_of(t);
    if !target.is_regular_orbit(orbit) {
        return Err(Error::Internal(format!(
            "target not regular: σ'_{i}{x:?} lies in a non-regular orbit"
        )));
    }
    let g = target.transporter(t);
    let coef = braid_coefficient(source.product(), i, &x)?;
    Ok((coef * target.product().tuple_lambda(g, &s), orbit))
}

/// `β_{i,x}` computed with an arbitrary transporter `g` (`g·σ'_i(x)` must be
/// the target representative).
pub fn beta_with_transporter(
    source: &OrbitTable,
    target: &OrbitTable,
    i: usize,
    rep: usize,
    g: usize,
) -> Result<Phase> {
    let x = source.tuple(rep);
    let s = sigma_tuple(source.product(), i, &x)?;
    let t = target.index_of(&s).ok_or_else(|| Error::Internal("degree changed".into()))?;
    let y = target.tuple(target.rep(target.orbit_of(t)));
    if target.product().act(g, &s) != y {
        return Err(Error::Input(format!("{g} does not carry σ'_{i}(x) to its representative")));
    }
    Ok(braid_coefficient(source.product(), i, &x)? * target.product().tuple_lambda(g, &s))
}

/// The matrix of `σ_i` from `Hom(1, source)` to `Hom(1, target)`.
pub fn sigma_matrix(source: &OrbitTable, target: &OrbitTable, i: usize) -> Result<MonomialMatrix> {
    if source.num_regular() != target.num_regular() {
        return Err(Error::Internal("σ changed the dimension".into()));
    }
    let cols: Vec<(usize, Phase)> = (0..source.num_regular())
        .into_par_iter()
        .map(|j| {
            let (b, orbit) = beta(source, target, i, source.basis_tuple_index(j))?;
            Ok((target.basis_position(orbit).expect("regular"), b))
        })
        .collect::<Result<_>>()?;
    let (perm, phases) = cols.into_iter().unzip();
    MonomialMatrix::new(perm, phases).map_err(|e| Error::Internal(e.to_string()))
}

/// Generators `σ₁,…,σ_{n−1}` of `B_n` on `Hom(1, V^{⊗n})`.
#[derive(Clone, Debug)]
pub struct BraidRep {
    table: Arc<OrbitTable>,
    generators: Vec<MonomialMatrix>,
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct BraidRepJson {
    pub dim: usize,
    pub generators: Vec<MonomialMatrix>,
    pub basis: Vec<Vec<usize>>,
}

impl BraidRep {
    pub fn n(&self) -> usize {
        self.table.product().len()
    }

    pub fn dim(&self) -> usize {
        self.table.num_regular()
    }

    pub fn table(&self) -> &Arc<OrbitTable> {
        &self.table
    }

    pub fn basis(&self) -> Vec<Vec<usize>> {
        self.table.basis()
    }

    pub fn generators(&self) -> &[MonomialMatrix] {
        &self.generators
    }

    /// Replaces a generator (fault injection and external matrices).
    #[doc(hidden)]
    pub fn with_generator(&self, i: usize, m: MonomialMatrix) -> BraidRep {
        let mut r = self.clone();
        r.generators[i - 1] = m;
        r
    }

    /// Matrix of a braid word; `k > 0` is `σ_k`, `k < 0` is `σ_{|k|}⁻¹`.
    pub fn word(&self, word: &[i32]) -> Result<MonomialMatrix> {
        let mut m = MonomialMatrix::identity(self.dim());
        for &k in word {
            let i = k.unsigned_abs() as usize;
            if i == 0 || i > self.generators.len() {
                return Err(Error::IndexOutOfRange { index: i, max: self.generators.len() });
            }
            let s = &self.generators[i - 1];
            m = if k > 0 { s.compose(&m) } else { s.inverse().compose(&m) };
        }
        Ok(m)
    }

    pub fn to_json(&self) -> BraidRepJson {
        BraidRepJson { dim: self.dim(), generators: self.generators.clone(), basis: self.basis() }
    }
}

pub fn braid_matrices_of(table: Arc<OrbitTable>) -> Result<BraidRep> {
    let n = table.product().len();
    let generators = (1..n).map(|i| sigma_matrix(&table, &table, i)).collect::<Result<_>>()?;
    Ok(BraidRep { table, generators })
}

pub fn braid_matrices(m: &Arc<MonomialYD>, n: usize, options: OrbitOptions) -> Result<BraidRep> {
    if n == 0 {
        return Err(Error::Input("n must be at least 1".into()));
    }
    let table = OrbitTable::new(TensorProduct::power(m.clone(), n)?, options)?;
    braid_matrices_of(Arc::new(table))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationViolation {
    /// The two words whose matrices differ.
    pub lhs: Vec<i32>,
    pub rhs: Vec<i32>,
    /// First column where they differ.
    pub column: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationReport {
    pub checked: usize,
    pub violation: Option<RelationViolation>,
}

impl RelationReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

/// Checks `σᵢσᵢ₊₁σᵢ = σᵢ₊₁σᵢσᵢ₊₁` and far commutativity exactly.
pub fn verify_braid_relations(rep: &BraidRep) -> RelationReport {
    let k = rep.generators.len() as i32;
    let mut words = Vec::new();
    for i in 1..k {
        words.push((vec![i, i + 1, i], vec![i + 1, i, i + 1]));
    }
    for i in 1..=k {
        for j in i + 2..=k {
            words.push((vec![i, j], vec![j, i]));
        }
    }
    let mut checked = 0;
    for (lhs, rhs) in words {
        checked += 1;
        let a = rep.word(&lhs).expect("valid word");
        let b = rep.word(&rhs).expect("valid word");
        if a != b {
            let column = (0..a.dim())
                .find(|&j| a.perm[j] != b.perm[j] || a.phases[j] != b.phases[j])
                .unwrap_or(0);
            return RelationReport { checked, violation: Some(RelationViolation { lhs, rhs, column }) };
        }
    }
    RelationReport { checked, violation: None }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ImageOrder {
    Order(u64),
    Exceeded(u64),
}

/// Order of the group generated by monomial matrices, by breadth-first closure.
pub fn image_order(generators: &[MonomialMatrix], cap: u64) -> ImageOrder {
    let Some(first) = generators.first() else {
        return ImageOrder::Order(1);
    };
    let d = first.dim();
    let m = generators
        .iter()
        .flat_map(|g| g.phases.iter())
        .fold(1u64, |l, p| l.lcm(&p.den()));
    if m > u32::MAX as u64 || d > u32::MAX as usize {
        return ImageOrder::Exceeded(cap);
    }
    // (perm, phase numerators over m)
    let key = |a: &MonomialMatrix| -> Box<[u32]> {
        a.perm
            .iter()
            .map(|&p| p as u32)
            .chain(a.phases.iter().map(|p| p.numerator_over(m) as u32))
            .collect()
    };
    let gens: Vec<Box<[u32]>> = generators.iter().map(key).collect();
    let mul = |a: &[u32], b: &[u32]| -> Box<[u32]> {
        // a·b in key form
        let mut out = vec![0u32; 2 * d];
        for j in 0..d {
            let p = b[j] as usize;
            out[j] = a[p];
            out[d + j] = ((b[d + j] as u64 + a[d + p] as u64) % m) as u32;
        }
        out.into_boxed_slice()
    };
    let mut seen: IndexSet<Box<[u32]>> = IndexSet::new();
    seen.insert(key(&MonomialMatrix::identity(d)));
    let mut next = 0;
    while next < seen.len() {
        let cur = seen[next].clone();
        next += 1;
        for g in &gens {
            if seen.insert(mul(g, &cur)) && seen.len() as u64 > cap {
                return ImageOrder::Exceeded(cap);
            }
        }
    }
    ImageOrder::Order(seen.len() as u64)
}

/// Pure-braid generators `A_{i,j}` on `Hom(1, X₁ ⊗ ⋯ ⊗ Xₙ)` for possibly
/// distinct factors, in the basis of the original factor order.
pub fn pure_braid_matrices(
    factors: &[Arc<MonomialYD>],
    pairs: &[(usize, usize)],
    options: OrbitOptions,
) -> Result<Vec<MonomialMatrix>> {
    let n = factors.len();
    TensorProduct::new(factors.to_vec())?;
    for &(i, j) in pairs {
        if i == 0 || i >= j || j > n {
            return Err(Error::IndexOutOfRange { index: if i == 0 || i >= j { i } else { j }, max: n });
        }
    }
    let mut ctx = PureBraidContext { factors, options, tables: HashMap::new(), moves: HashMap::new() };
    pairs.iter().map(|&(i, j)| ctx.generator(i, j)).collect()
}

struct PureBraidContext<'a> {
    factors: &'a [Arc<MonomialYD>],
    options: OrbitOptions,
    tables: HashMap<Vec<usize>, Arc<OrbitTable>>,
    moves: HashMap<(Vec<usize>, usize), MonomialMatrix>,
}

impl PureBraidContext<'_> {
    fn table(&mut self, order: &[usize]) -> Result<Arc<OrbitTable>> {
        if let Some(t) = self.tables.get(order) {
            return Ok(t.clone());
        }
        let product = TensorProduct::new(order.iter().map(|&k| self.factors[k].clone()).collect())?;
        let t = Arc::new(OrbitTable::new(product, self.options)?);
        self.tables.insert(order.to_vec(), t.clone());
        Ok(t)
    }

    /// `σ_i` out of the given factor order.
    fn sigma(&mut self, order: &[usize], i: usize) -> Result<MonomialMatrix> {
        let key = (order.to_vec(), i);
        if let Some(m) = self.moves.get(&key) {
            return Ok(m.clone());
        }
        let mut swapped = order.to_vec();
        swapped.swap(i - 1, i);
        let src = self.table(order)?;
        let dst = self.table(&swapped)?;
        let m = sigma_matrix(&src, &dst, i)?;
        self.moves.insert(key, m.clone());
        Ok(m)
    }

    /// `A_{i,j} = σ_{j−1}⋯σ_{i+1} σ_i² σ_{i+1}⁻¹⋯σ_{j−1}⁻¹`.
    fn generator(&mut self, i: usize, j: usize) -> Result<MonomialMatrix> {
        let mut order: Vec<usize> = (0..self.factors.len()).collect();
        let dim = self.table(&order)?.num_regular();
        let mut m = MonomialMatrix::identity(dim);
        let mut word: Vec<(usize, bool)> = (i + 1..j).rev().map(|k| (k, false)).collect();
        word.extend([(i, true), (i, true)]);
        word.extend((i + 1..j).map(|k| (k, true)));
        for (k, forward) in word {
            let step = if forward {
                self.sigma(&order, k)?
            } else {
                // σ_k⁻¹ out of `order` inverts σ_k out of the swapped order
                let mut swapped = order.clone();
                swapped.swap(k - 1, k);
                self.sigma(&swapped, k)?.inverse()
            };
            order.swap(k - 1, k);
            m = step.compose(&m);
        }
        debug_assert!(order.iter().enumerate().all(|(a, &b)| a == b));
        Ok(m)
    }
}
