//! Brute-force reference computations: `dim V^G` as the rank of the averaging
//! operator `Σ_g M_g` on the full degree-e space, and the action of `σ'_i` on
//! averaged vectors, both in exact cyclotomic arithmetic.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_rational::BigRational;
use serde::Serialize;

use crate::braid::{braid_coefficient, sigma_tuple, BraidRep};
use crate::cyclotomic::{rank, Coefficient, Cyclotomic, CyclotomicField};
use crate::error::{Error, Result};
use crate::monomial::TensorProduct;
use crate::phase::Phase;

/// Largest `|X₁|⋯|Xₙ|` the oracle accepts.
pub const ORACLE_MAX_TUPLES: u128 = 10_000;

type Column<T> = BTreeMap<usize, Cyclotomic<T>>;

/// The averaging operator `A = Σ_g M_g` on `span{v_t : t ∈ (X₁×⋯×Xₙ)_e}`.
pub struct AveragingOperator<T> {
    field: CyclotomicField<T>,
    tuples: Vec<Vec<usize>>,
    columns: Vec<Column<T>>,
}

impl<T: Coefficient> AveragingOperator<T> {
    /// `extra_conductor` enlarges the field so further phases can be embedded.
    pub fn new(product: &TensorProduct, extra_conductor: u64) -> Result<AveragingOperator<T>> {
        product.check_size(ORACLE_MAX_TUPLES)?;
        let g = product.group();
        let total = product.total_tuples() as u64;
        let tuples: Vec<Vec<usize>> = (0..total)
            .map(|c| product.decode(c))
            .filter(|t| product.grade(t) == 0)
            .collect();
        let index = |t: &[usize]| tuples.binary_search_by(|u| u.as_slice().cmp(t)).ok();

        let lambdas: Vec<Vec<Phase>> = tuples
            .iter()
            .map(|t| g.elements().map(|a| product.tuple_lambda(a, t)).collect())
            .collect();
        let m = lambdas.iter().flatten().fold(extra_conductor.max(1), |l, p| l.lcm(&p.den()));
        let field = CyclotomicField::new(m);

        let mut columns = Vec::with_capacity(tuples.len());
        for (ti, t) in tuples.iter().enumerate() {
            let mut col: Column<T> = BTreeMap::new();
            for a in g.elements() {
                let s = index(&product.act(a, t))
                    .ok_or_else(|| Error::Internal("action left degree e".into()))?;
                let z = field.phase(lambdas[ti][a]);
                let e = col.entry(s).or_insert_with(|| field.zero());
                *e = field.add(e, &z);
            }
            col.retain(|_, v| !v.is_zero());
            columns.push(col);
        }
        Ok(AveragingOperator { field, tuples, columns })
    }

    pub fn field(&self) -> &CyclotomicField<T> {
        &self.field
    }

    pub fn num_tuples(&self) -> usize {
        self.tuples.len()
    }

    pub fn index_of(&self, t: &[usize]) -> Option<usize> {
        self.tuples.binary_search_by(|u| u.as_slice().cmp(t)).ok()
    }

    /// `A v_t`.
    pub fn averaged(&self, t: usize) -> &Column<T> {
        &self.columns[t]
    }

    /// Rank of `A`, block by block over the connected components of its
    /// nonzero pattern.
    pub fn rank(&self) -> (usize, usize) {
        let n = self.tuples.len();
        let mut uf = UnionFind::new(n);
        for (t, col) in self.columns.iter().enumerate() {
            for &s in col.keys() {
                uf.union(s, t);
            }
        }
        let mut blocks: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for t in 0..n {
            blocks.entry(uf.find(t)).or_default().push(t);
        }
        let total = blocks
            .values()
            .map(|members| {
                let rows: Vec<Vec<Cyclotomic<T>>> = members
                    .iter()
                    .map(|&s| {
                        members
                            .iter()
                            .map(|&t| self.columns[t].get(&s).cloned().unwrap_or_else(|| self.field.zero()))
                            .collect()
                    })
                    .collect();
                rank(&self.field, rows)
            })
            .sum();
        (total, blocks.len())
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> UnionFind {
        UnionFind { parent: (0..n).collect() }
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut y = x;
        while self.parent[y] != r {
            y = std::mem::replace(&mut self.parent[y], r);
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        // smaller root wins, so roots do not depend on union order
        if ra < rb {
            self.parent[rb] = ra;
        } else if rb < ra {
            self.parent[ra] = rb;
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OracleDimension {
    pub dimension: usize,
    pub tuples: usize,
    pub blocks: usize,
}

pub fn brute_force_dimension_with<T: Coefficient>(product: &TensorProduct) -> Result<OracleDimension> {
    let op = AveragingOperator::<T>::new(product, 1)?;
    let (dimension, blocks) = op.rank();
    Ok(OracleDimension { dimension, tuples: op.num_tuples(), blocks })
}

/// `dim Hom(1, X₁ ⊗ ⋯ ⊗ Xₙ)` by exact rank over `Q(ζ_m)` with big rationals.
pub fn brute_force_dimension(product: &TensorProduct) -> Result<usize> {
    Ok(brute_force_dimension_with::<BigRational>(product)?.dimension)
}

/// First failure of `σ'_i M_g = M_g σ'_i` on the full degree-e space, as
/// `(tuple, g)`.
pub fn sigma_equivariance_violation(product: &TensorProduct, i: usize) -> Result<Option<(Vec<usize>, usize)>> {
    product.check_size(ORACLE_MAX_TUPLES)?;
    let g = product.group();
    for c in 0..product.total_tuples() as u64 {
        let t = product.decode(c);
        if product.grade(&t) != 0 {
            continue;
        }
        let s = sigma_tuple(product, i, &t)?;
        let coef = braid_coefficient(product, i, &t)?;
        for a in g.elements() {
            let at = product.act(a, &t);
            let lhs = coef * product.tuple_lambda(a, &s);
            let rhs = product.tuple_lambda(a, &t) * braid_coefficient(product, i, &at)?;
            if sigma_tuple(product, i, &at)? != product.act(a, &s) || lhs != rhs {
                return Ok(Some((t, a)));
            }
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompressedReport {
    pub oracle_dimension: usize,
    pub checked: usize,
    /// `(generator, column)` of the first mismatch.
    pub mismatch: Option<(usize, usize)>,
}

impl CompressedReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Checks `σ'_i(A v_x) = β A v_y` for every generator and basis column of
/// `rep` with the brute-force operator. The report carries the oracle rank
/// for the caller to compare.
pub fn check_compressed<T: Coefficient>(rep: &BraidRep) -> Result<CompressedReport> {
    let product = rep.table().product();
    product.check_size(ORACLE_MAX_TUPLES)?;
    let n = product.len();
    let mut conductor = rep
        .generators()
        .iter()
        .flat_map(|m| m.phases())
        .fold(1u64, |l, p| l.lcm(&p.den()));
    let mut sigma = Vec::new();
    for i in 1..n {
        let mut map = Vec::new();
        for c in 0..product.total_tuples() as u64 {
            let t = product.decode(c);
            if product.grade(&t) == 0 {
                let coef = braid_coefficient(product, i, &t)?;
                conductor = conductor.lcm(&coef.den());
                map.push((sigma_tuple(product, i, &t)?, coef));
            }
        }
        sigma.push(map);
    }
    let op = AveragingOperator::<T>::new(product, conductor)?;
    let f = op.field();
    let (oracle_dimension, _) = op.rank();
    let basis = rep.basis();
    let mut checked = 0;
    for (gi, m) in rep.generators().iter().enumerate() {
        for j in 0..m.dim() {
            checked += 1;
            let x = op.index_of(&basis[j]).ok_or_else(|| Error::Internal("basis tuple not in degree e".into()))?;
            let y = op.index_of(&basis[m.perm()[j]]).unwrap();
            // σ'_i (A v_x), using sigma[gi] indexed like op.tuples
            let mut lhs: Column<T> = BTreeMap::new();
            for (t, c) in op.averaged(x) {
                let (st, coef) = &sigma[gi][*t];
                let s = op.index_of(st).unwrap();
                let e = lhs.entry(s).or_insert_with(|| f.zero());
                *e = f.add(e, &f.mul(c, &f.phase(*coef)));
            }
            lhs.retain(|_, v| !v.is_zero());
            let beta = f.phase(m.phases()[j]);
            let rhs: Column<T> = op.averaged(y).iter().map(|(&k, v)| (k, f.mul(v, &beta))).collect();
            if op.averaged(x).is_empty() || lhs != rhs {
                return Ok(CompressedReport { oracle_dimension, checked, mismatch: Some((gi + 1, j)) });
            }
        }
    }
    Ok(CompressedReport { oracle_dimension, checked, mismatch: None })
}
