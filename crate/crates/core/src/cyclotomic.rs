//! Exact arithmetic in `Q(ζ_m)`, as polynomials modulo the cyclotomic
//! polynomial `Φ_m`, over any exact rational coefficient field.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::Num;

use crate::phase::Phase;

/// Exact coefficient field (e.g. `BigRational`, `Rational64`).
pub trait Coefficient: Num + Clone + Neg<Output = Self> + Debug + Send + Sync {}

impl<T: Num + Clone + Neg<Output = T> + Debug + Send + Sync> Coefficient for T {}

/// An element of `Q(ζ_m)`: coefficients of `1, ζ, …, ζ^{d−1}`, `d = φ(m)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cyclotomic<T> {
    coeffs: Vec<T>,
}

impl<T: Coefficient> Cyclotomic<T> {
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(T::is_zero)
    }
}

/// The field `Q(ζ_m)` with `ζ_m = exp(2πi/m)`.
#[derive(Clone, Debug)]
pub struct CyclotomicField<T> {
    m: u64,
    /// `Φ_m`, monic, low degree first.
    phi: Vec<T>,
    /// `ζ^k` reduced, for `0 ≤ k < m`.
    powers: Vec<Cyclotomic<T>>,
}

impl<T: Coefficient> CyclotomicField<T> {
    pub fn new(m: u64) -> CyclotomicField<T> {
        assert!(m >= 1);
        let phi: Vec<T> = cyclotomic_polynomial(m).into_iter().map(from_i64).collect();
        let d = phi.len() - 1;
        let mut field = CyclotomicField { m, phi, powers: Vec::new() };
        let mut cur = field.one();
        let mut zeta = field.zero();
        if d == 1 {
            // m ∈ {1, 2}: ζ = −Φ_m(0)
            zeta.coeffs[0] = -field.phi[0].clone();
        } else {
            zeta.coeffs[1] = T::one();
        }
        for _ in 0..m {
            field.powers.push(cur.clone());
            cur = field.mul(&cur, &zeta);
        }
        field
    }

    pub fn conductor(&self) -> u64 {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.phi.len() - 1
    }

    pub fn zero(&self) -> Cyclotomic<T> {
        Cyclotomic { coeffs: vec![T::zero(); self.degree()] }
    }

    pub fn one(&self) -> Cyclotomic<T> {
        let mut z = self.zero();
        z.coeffs[0] = T::one();
        z
    }

    /// `ζ_m^k`.
    pub fn zeta_pow(&self, k: i64) -> Cyclotomic<T> {
        self.powers[k.rem_euclid(self.m as i64) as usize].clone()
    }

    /// The root of unity `p`; its order must divide `m`.
    pub fn phase(&self, p: Phase) -> Cyclotomic<T> {
        assert_eq!(self.m % p.den(), 0, "phase order does not divide the conductor");
        self.zeta_pow(p.numerator_over(self.m) as i64)
    }

    pub fn add(&self, a: &Cyclotomic<T>, b: &Cyclotomic<T>) -> Cyclotomic<T> {
        Cyclotomic {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.clone() + y.clone()).collect(),
        }
    }

    pub fn sub(&self, a: &Cyclotomic<T>, b: &Cyclotomic<T>) -> Cyclotomic<T> {
        Cyclotomic {
            coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x.clone() - y.clone()).collect(),
        }
    }

    pub fn mul(&self, a: &Cyclotomic<T>, b: &Cyclotomic<T>) -> Cyclotomic<T> {
        let d = self.degree();
        let mut prod = vec![T::zero(); 2 * d - 1];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                prod[i + j] = prod[i + j].clone() + x.clone() * y.clone();
            }
        }
        self.reduce(prod)
    }

    fn reduce(&self, mut p: Vec<T>) -> Cyclotomic<T> {
        let d = self.degree();
        for k in (d..p.len()).rev() {
            let c = std::mem::replace(&mut p[k], T::zero());
            if c.is_zero() {
                continue;
            }
            for i in 0..d {
                p[k - d + i] = p[k - d + i].clone() - c.clone() * self.phi[i].clone();
            }
        }
        p.resize(d, T::zero());
        Cyclotomic { coeffs: p }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self, a: &Cyclotomic<T>) -> Option<Cyclotomic<T>> {
        if a.is_zero() {
            return None;
        }
        // extended Euclid: s·a ≡ gcd (mod Φ), gcd a nonzero constant
        let (mut r0, mut r1) = (trim(self.phi.clone()), trim(a.coeffs.clone()));
        let (mut s0, mut s1) = (Vec::<T>::new(), vec![T::one()]);
        while r1.len() > 1 {
            let (q, r) = divrem(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        // Φ is irreducible, so r1 is a nonzero constant
        let c = r1[0].clone();
        let scaled: Vec<T> = s1.into_iter().map(|x| x / c.clone()).collect();
        let mut full = scaled;
        if full.len() < self.degree() {
            full.resize(self.degree(), T::zero());
        }
        Some(self.reduce(full))
    }
}

fn from_i64<T: Coefficient>(k: i64) -> T {
    let mut acc = T::zero();
    let mut base = T::one();
    let mut n = k.unsigned_abs();
    while n > 0 {
        if n & 1 == 1 {
            acc = acc + base.clone();
        }
        base = base.clone() + base;
        n >>= 1;
    }
    if k < 0 {
        -acc
    } else {
        acc
    }
}

fn trim<T: Coefficient>(mut p: Vec<T>) -> Vec<T> {
    while p.last().is_some_and(T::is_zero) {
        p.pop();
    }
    p
}

fn poly_mul<T: Coefficient>(a: &[T], b: &[T]) -> Vec<T> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![T::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    trim(out)
}

fn poly_sub<T: Coefficient>(a: &[T], b: &[T]) -> Vec<T> {
    let n = a.len().max(b.len());
    let get = |p: &[T], i: usize| p.get(i).cloned().unwrap_or_else(T::zero);
    trim((0..n).map(|i| get(a, i) - get(b, i)).collect())
}

fn divrem<T: Coefficient>(a: &[T], b: &[T]) -> (Vec<T>, Vec<T>) {
    let mut r = trim(a.to_vec());
    let lead = b.last().expect("nonzero divisor").clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![T::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap().clone() / lead.clone();
        for (i, y) in b.iter().enumerate() {
            r[shift + i] = r[shift + i].clone() - c.clone() * y.clone();
        }
        q[shift] = c;
        r.pop();
        r = trim(r);
    }
    (trim(q), r)
}

/// Integer coefficients of `Φ_m`, low degree first.
pub fn cyclotomic_polynomial(m: u64) -> Vec<i64> {
    // x^m − 1 divided by Φ_d for every proper divisor d
    let mut p = vec![0i64; m as usize + 1];
    p[0] = -1;
    p[m as usize] = 1;
    for d in 1..m {
        if m % d == 0 {
            p = exact_div_monic(&p, &cyclotomic_polynomial(d));
        }
    }
    p
}

fn exact_div_monic(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let mut q = vec![0i64; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db];
        q[k] = c;
        for (i, &y) in b.iter().enumerate() {
            r[k + i] -= c * y;
        }
    }
    debug_assert!(r.iter().all(|&x| x == 0));
    q
}

/// Rank of a dense matrix over `Q(ζ_m)` by Gaussian elimination.
pub fn rank<T: Coefficient>(field: &CyclotomicField<T>, mut rows: Vec<Vec<Cyclotomic<T>>>) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = field.inv(&rows[rank][c]).expect("nonzero pivot");
        let pivot: Vec<Cyclotomic<T>> = rows[rank].iter().map(|x| field.mul(x, &inv)).collect();
        for r in rank + 1..rows.len() {
            if rows[r][c].is_zero() {
                continue;
            }
            let f = rows[r][c].clone();
            for k in c..ncols {
                rows[r][k] = field.sub(&rows[r][k], &field.mul(&f, &pivot[k]));
            }
        }
        rows[rank] = pivot;
        rank += 1;
    }
    rank
}
