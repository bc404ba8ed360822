//! Finite groups on dense element indices, subgroups and left-coset data.
//!
//! Element `0` is always the identity. Multiplication is a table lookup.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Largest supported group order; indices fit in a byte.
pub const MAX_ORDER: usize = 255;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u8>,
    inverse: Vec<u8>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup").field("order", &self.order).finish()
    }
}

impl FiniteGroup {
    /// Validates a Cayley table. If the identity is not element 0 the two
    /// indices are swapped so that it is.
    pub fn from_table(order: usize, mult: &[Vec<usize>]) -> Result<FiniteGroup> {
        if order == 0 {
            return Err(Error::MalformedTable("order must be positive".into()));
        }
        if order > MAX_ORDER {
            return Err(Error::GroupTooLarge { order, max: MAX_ORDER });
        }
        if mult.len() != order || mult.iter().any(|row| row.len() != order) {
            return Err(Error::MalformedTable(format!("expected a {order}x{order} table")));
        }
        for row in mult {
            if let Some(&x) = row.iter().find(|&&x| x >= order) {
                return Err(Error::ElementOutOfRange(x));
            }
        }
        let m = |a: usize, b: usize| mult[a][b];

        let identity = (0..order)
            .find(|&e| (0..order).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or(Error::NoIdentity)?;
        for a in 0..order {
            if !(0..order).any(|b| m(a, b) == identity && m(b, a) == identity) {
                return Err(Error::NoInverse(a));
            }
        }
        for a in 0..order {
            for b in 0..order {
                let ab = m(a, b);
                for c in 0..order {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(Error::NonAssociative { a, b, c });
                    }
                }
            }
        }

        // Swap 0 and the identity if needed.
        let relabel = |x: usize| {
            if x == identity {
                0
            } else if x == 0 {
                identity
            } else {
                x
            }
        };
        let mut table = vec![0u8; order * order];
        for a in 0..order {
            for b in 0..order {
                table[relabel(a) * order + relabel(b)] = relabel(m(a, b)) as u8;
            }
        }
        Ok(Self::from_raw(order, table))
    }

    fn from_raw(order: usize, table: Vec<u8>) -> FiniteGroup {
        let mut inverse = vec![0u8; order];
        for a in 0..order {
            let b = (0..order).find(|&b| table[a * order + b] == 0).unwrap();
            inverse[a] = b as u8;
        }
        FiniteGroup { order, table, inverse }
    }

    fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<FiniteGroup> {
        if order > MAX_ORDER {
            return Err(Error::GroupTooLarge { order, max: MAX_ORDER });
        }
        let mut table = vec![0u8; order * order];
        for a in 0..order {
            for b in 0..order {
                table[a * order + b] = f(a, b) as u8;
            }
        }
        Ok(Self::from_raw(order, table))
    }

    /// `Z_m`, element index = exponent.
    pub fn cyclic(m: usize) -> Result<FiniteGroup> {
        if m == 0 {
            return Err(invalid("cyclic", "m must be at least 1"));
        }
        Self::from_fn(m, |a, b| (a + b) % m)
    }

    /// Dihedral group of order `2k`; `s^i r^j` has index `i*k + j`.
    pub fn dihedral(k: usize) -> Result<FiniteGroup> {
        if k == 0 {
            return Err(invalid("dihedral", "k must be at least 1"));
        }
        Self::from_fn(2 * k, |a, b| {
            let (i, j) = (a / k, a % k);
            let (p, q) = (b / k, b % k);
            // r^j s = s r^{-j}
            let j = if p == 1 { (k - j) % k } else { j };
            ((i + p) % 2) * k + (j + q) % k
        })
    }

    /// Symmetric group on `n` points; elements are permutations in
    /// lexicographic order of their one-line notation, composed as
    /// `(στ)(x) = σ(τ(x))`.
    pub fn symmetric(n: usize) -> Result<FiniteGroup> {
        if n == 0 {
            return Err(invalid("symmetric", "n must be at least 1"));
        }
        let perms = permutations(n);
        if perms.len() > MAX_ORDER {
            return Err(Error::GroupTooLarge { order: perms.len(), max: MAX_ORDER });
        }
        let index = |p: &Vec<usize>| perms.binary_search(p).unwrap();
        Self::from_fn(perms.len(), |a, b| {
            let c: Vec<usize> = (0..n).map(|x| perms[a][perms[b][x]]).collect();
            index(&c)
        })
    }

    /// Direct product; `(a, b)` has index `a * |B| + b` (first factor most significant).
    pub fn direct_product(factors: &[FiniteGroup]) -> Result<FiniteGroup> {
        let order: usize = factors.iter().map(|g| g.order).product();
        if order > MAX_ORDER {
            return Err(Error::GroupTooLarge { order, max: MAX_ORDER });
        }
        let split = |mut x: usize| {
            let mut parts = vec![0; factors.len()];
            for (i, g) in factors.iter().enumerate().rev() {
                parts[i] = x % g.order;
                x /= g.order;
            }
            parts
        };
        Self::from_fn(order, |a, b| {
            let (pa, pb) = (split(a), split(b));
            factors
                .iter()
                .enumerate()
                .fold(0, |acc, (i, g)| acc * g.order + g.mul(pa[i], pb[i]))
        })
    }

    /// Built-in families by name: `cyclic`, `dihedral`, `symmetric`.
    pub fn builtin(family: &str, parameter: usize) -> Result<FiniteGroup> {
        match family {
            "cyclic" => Self::cyclic(parameter),
            "dihedral" => Self::dihedral(parameter),
            "symmetric" => Self::symmetric(parameter),
            other => Err(Error::UnknownFamily(other.to_string())),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    /// Left conjugation `^g h = g h g⁻¹`.
    #[inline]
    pub fn conj(&self, g: usize, h: usize) -> usize {
        self.mul(self.mul(g, h), self.inv(g))
    }

    pub fn product<I: IntoIterator<Item = usize>>(&self, items: I) -> usize {
        items.into_iter().fold(0, |acc, x| self.mul(acc, x))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        self.elements()
            .all(|a| self.elements().all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Row-major Cayley table.
    pub fn table(&self) -> Vec<Vec<usize>> {
        self.elements()
            .map(|a| self.elements().map(|b| self.mul(a, b)).collect())
            .collect()
    }

    pub fn check_element(&self, g: usize) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange(g))
        }
    }
}

fn invalid(family: &str, reason: &str) -> Error {
    Error::InvalidParameter { family: family.into(), reason: reason.into() }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for x in 0..used.len() {
            if !used[x] {
                used[x] = true;
                prefix.push(x);
                rec(prefix, used, out);
                prefix.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// A subgroup, with elements kept in increasing index order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<usize>,
    position: Vec<Option<u8>>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Subgroup").field(&self.elements).finish()
    }
}

impl Subgroup {
    /// Validates closure (a finite nonempty subset closed under
    /// multiplication is a subgroup).
    pub fn new(parent: Arc<FiniteGroup>, elements: &[usize]) -> Result<Subgroup> {
        let mut els = elements.to_vec();
        els.sort_unstable();
        els.dedup();
        for &x in &els {
            parent.check_element(x)?;
        }
        if els.first() != Some(&0) {
            return Err(Error::NotASubgroup("identity missing".into()));
        }
        let mut position = vec![None; parent.order()];
        for (i, &x) in els.iter().enumerate() {
            position[x] = Some(i as u8);
        }
        for &a in &els {
            for &b in &els {
                if position[parent.mul(a, b)].is_none() {
                    return Err(Error::NotASubgroup(format!(
                        "{a}*{b} = {} is not in the set",
                        parent.mul(a, b)
                    )));
                }
            }
        }
        Ok(Subgroup { parent, elements: els, position })
    }

    pub fn generated(parent: Arc<FiniteGroup>, generators: &[usize]) -> Result<Subgroup> {
        for &g in generators {
            parent.check_element(g)?;
        }
        let mut seen = vec![false; parent.order()];
        let mut els = vec![0];
        seen[0] = true;
        let mut i = 0;
        while i < els.len() {
            for &g in generators {
                let x = parent.mul(els[i], g);
                if !seen[x] {
                    seen[x] = true;
                    els.push(x);
                }
            }
            i += 1;
        }
        Subgroup::new(parent, &els)
    }

    pub fn trivial(parent: Arc<FiniteGroup>) -> Subgroup {
        Subgroup::new(parent, &[0]).unwrap()
    }

    pub fn whole(parent: Arc<FiniteGroup>) -> Subgroup {
        let els: Vec<usize> = parent.elements().collect();
        Subgroup::new(parent, &els).unwrap()
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.position.get(g).map_or(false, |p| p.is_some())
    }

    /// Position of `g` in `elements()`.
    pub fn position(&self, g: usize) -> Option<usize> {
        self.position.get(g).copied().flatten().map(usize::from)
    }

    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        g.elements().all(|x| self.elements.iter().all(|&h| self.contains(g.conj(x, h))))
    }

    pub fn is_central(&self) -> bool {
        let g = &self.parent;
        self.elements
            .iter()
            .all(|&h| g.elements().all(|x| g.mul(x, h) == g.mul(h, x)))
    }

    /// `C_H(h) = {k ∈ H : kh = hk}`.
    pub fn centralizer(&self, h: usize) -> Result<Subgroup> {
        if !self.contains(h) {
            return Err(Error::ElementNotInSubgroup(h));
        }
        let g = &self.parent;
        let els: Vec<usize> = self
            .elements
            .iter()
            .copied()
            .filter(|&k| g.mul(k, h) == g.mul(h, k))
            .collect();
        Subgroup::new(self.parent.clone(), &els)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let els: Vec<usize> =
            self.elements.iter().copied().filter(|&x| other.contains(x)).collect();
        Subgroup::new(self.parent.clone(), &els).expect("intersection of subgroups")
    }

    /// `x H x⁻¹`.
    pub fn conjugate(&self, x: usize) -> Subgroup {
        let g = &self.parent;
        let els: Vec<usize> = self.elements.iter().map(|&h| g.conj(x, h)).collect();
        Subgroup::new(self.parent.clone(), &els).expect("conjugate of a subgroup")
    }
}

/// Left transversal `R` of `H` in `G` with the maps `g ▷ r` and `κ(g, r)`
/// determined by `g r = (g ▷ r) κ(g, r)`.
#[derive(Clone, Debug)]
pub struct CosetData {
    subgroup: Subgroup,
    reps: Vec<usize>,
    /// For each `g`: index of its coset representative.
    coset_of: Vec<usize>,
    /// `act[g * |R| + i]`: index of `g ▷ reps[i]`.
    act: Vec<usize>,
    /// `kappa[g * |R| + i] = κ(g, reps[i])`.
    kappa: Vec<usize>,
}

impl CosetData {
    /// Representatives are the smallest index in each left coset, listed in
    /// increasing order, so `reps[0]` is the identity.
    pub fn new(subgroup: &Subgroup) -> CosetData {
        let g = subgroup.parent().clone();
        let n = g.order();
        let mut coset_of = vec![usize::MAX; n];
        let mut reps = Vec::new();
        for x in 0..n {
            if coset_of[x] == usize::MAX {
                let i = reps.len();
                reps.push(x);
                for &h in subgroup.elements() {
                    coset_of[g.mul(x, h)] = i;
                }
            }
        }
        let nr = reps.len();
        let mut act = vec![0; n * nr];
        let mut kappa = vec![0; n * nr];
        for x in 0..n {
            for (i, &r) in reps.iter().enumerate() {
                let xr = g.mul(x, r);
                let j = coset_of[xr];
                act[x * nr + i] = j;
                kappa[x * nr + i] = g.mul(g.inv(reps[j]), xr);
            }
        }
        CosetData { subgroup: subgroup.clone(), reps, coset_of, act, kappa }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.subgroup
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn num_cosets(&self) -> usize {
        self.reps.len()
    }

    /// `g = r h` with `r = reps[i]`; returns `(i, h)`.
    pub fn factor(&self, g: usize) -> (usize, usize) {
        let i = self.coset_of[g];
        let grp = self.subgroup.parent();
        (i, grp.mul(grp.inv(self.reps[i]), g))
    }

    /// Index of `g ▷ reps[i]`.
    #[inline]
    pub fn act(&self, g: usize, i: usize) -> usize {
        self.act[g * self.reps.len() + i]
    }

    #[inline]
    pub fn kappa(&self, g: usize, i: usize) -> usize {
        self.kappa[g * self.reps.len() + i]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(g: FiniteGroup) -> Arc<FiniteGroup> {
        Arc::new(g)
    }

    /// Brute-force isomorphism test between two small groups.
    fn isomorphic(a: &FiniteGroup, b: &FiniteGroup) -> bool {
        if a.order() != b.order() {
            return false;
        }
        let n = a.order();
        fn extend(
            a: &FiniteGroup,
            b: &FiniteGroup,
            map: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            let k = map.len();
            let n = a.order();
            if k == n {
                return (0..n).all(|x| (0..n).all(|y| map[a.mul(x, y)] == b.mul(map[x], map[y])));
            }
            for y in 0..n {
                if used[y] || a.element_order(k) != b.element_order(y) {
                    continue;
                }
                used[y] = true;
                map.push(y);
                if extend(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[y] = false;
            }
            false
        }
        extend(a, b, &mut Vec::with_capacity(n), &mut vec![false; n])
    }

    #[test]
    fn z2_table() {
        let g = FiniteGroup::from_table(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.inv(1), 1);
    }

    #[test]
    fn monoid_is_rejected() {
        let t = vec![vec![0, 1], vec![1, 1]];
        assert_eq!(FiniteGroup::from_table(2, &t), Err(Error::NoInverse(1)));
    }

    #[test]
    fn non_associative_and_no_identity() {
        // a quasigroup that is not associative: x*y = (2x + y) mod 3... has no identity
        let t: Vec<Vec<usize>> =
            (0..3).map(|x| (0..3).map(|y| (2 * x + y) % 3).collect()).collect();
        assert_eq!(FiniteGroup::from_table(3, &t), Err(Error::NoIdentity));
        // identity 0, inverses exist, but not associative (a loop of order 5)
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_table(5, &t),
            Err(Error::NonAssociative { .. })
        ));
    }

    #[test]
    fn identity_is_renumbered_to_zero() {
        // Z_2 with identity at index 1
        let g = FiniteGroup::from_table(2, &[vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(g.mul(0, 1), 1);
        assert_eq!(g.mul(1, 1), 0);
    }

    #[test]
    fn d6_from_permutation_generators() {
        // r = (0 1 2), s = (1 2) acting on the triangle's vertices.
        let r = [1, 2, 0];
        let s = [0, 2, 1];
        let compose = |a: &[usize; 3], b: &[usize; 3]| [a[b[0]], a[b[1]], a[b[2]]];
        let id = [0, 1, 2];
        let r2 = compose(&r, &r);
        let els = [id, r, r2, s, compose(&s, &r), compose(&s, &r2)];
        let index = |p: &[usize; 3]| els.iter().position(|q| q == p).unwrap();
        let table: Vec<Vec<usize>> = els
            .iter()
            .map(|a| els.iter().map(|b| index(&compose(a, b))).collect())
            .collect();
        let g = FiniteGroup::from_table(6, &table).unwrap();
        assert!(!g.is_abelian());
        // the table agrees with the dihedral builtin numbering s^i r^j -> 3i + j
        assert_eq!(g, FiniteGroup::dihedral(3).unwrap());
    }

    #[test]
    fn builtins() {
        let z4 = FiniteGroup::builtin("cyclic", 4).unwrap();
        assert_eq!(z4.element_order(1), 4);
        let d6 = FiniteGroup::builtin("dihedral", 3).unwrap();
        assert_eq!(d6.order(), 6);
        assert!(!d6.is_abelian());
        let s3 = FiniteGroup::builtin("symmetric", 3).unwrap();
        assert!(isomorphic(&s3, &d6));
        assert!(!isomorphic(&FiniteGroup::cyclic(6).unwrap(), &d6));
        assert_eq!(
            FiniteGroup::builtin("alternating", 4),
            Err(Error::UnknownFamily("alternating".into()))
        );
        assert!(matches!(FiniteGroup::symmetric(6), Err(Error::GroupTooLarge { .. })));
        let k4 = FiniteGroup::direct_product(&[z2(), z2()]).unwrap();
        assert!(k4.is_abelian());
        assert!((1..4).all(|x| k4.element_order(x) == 2));
        assert!(isomorphic(&k4, &FiniteGroup::dihedral(2).unwrap()));
    }

    fn z2() -> FiniteGroup {
        FiniteGroup::cyclic(2).unwrap()
    }

    #[test]
    fn dihedral_reflection_law() {
        for k in 1..8 {
            let g = FiniteGroup::dihedral(k).unwrap();
            let (r, s) = (1 % k, k);
            assert_eq!(g.mul(s, s), 0);
            assert_eq!(g.mul(g.mul(s, r), s), g.inv(r));
            // (s^i r^j) s^p = s^{i+p} r^{(-1)^p j}
            for j in 0..k {
                assert_eq!(g.mul(j, s), k + (k - j) % k);
            }
        }
    }

    #[test]
    fn centralizers() {
        let d6 = arc(FiniteGroup::dihedral(3).unwrap());
        let rot = Subgroup::generated(d6.clone(), &[1]).unwrap();
        assert_eq!(rot.centralizer(1).unwrap(), rot);
        assert_eq!(rot.centralizer(0).unwrap(), rot);

        let s3 = arc(FiniteGroup::symmetric(3).unwrap());
        let all = Subgroup::whole(s3.clone());
        let t = (1..6).find(|&x| s3.element_order(x) == 2).unwrap();
        let c = all.centralizer(t).unwrap();
        let brute: Vec<usize> =
            (0..6).filter(|&k| s3.mul(k, t) == s3.mul(t, k)).collect();
        assert_eq!(c.elements(), brute.as_slice());
        assert_eq!(c.order(), 2);
        assert_eq!(rot.centralizer(3), Err(Error::ElementNotInSubgroup(3)));
    }

    #[test]
    fn subgroup_validation() {
        let z4 = arc(FiniteGroup::cyclic(4).unwrap());
        assert!(Subgroup::new(z4.clone(), &[0, 2]).is_ok());
        assert!(matches!(Subgroup::new(z4.clone(), &[0, 1]), Err(Error::NotASubgroup(_))));
        assert!(matches!(Subgroup::new(z4.clone(), &[1, 3]), Err(Error::NotASubgroup(_))));
        assert_eq!(Subgroup::new(z4, &[0, 9]), Err(Error::ElementOutOfRange(9)));
        let s3 = arc(FiniteGroup::symmetric(3).unwrap());
        let t = Subgroup::generated(s3.clone(), &[1]).unwrap();
        assert_eq!(t.order(), 2);
        assert!(!t.is_normal());
        assert!(Subgroup::generated(s3, &[3]).unwrap().is_normal());
    }

    #[test]
    fn dihedral_cosets() {
        for k in 2..7 {
            let g = arc(FiniteGroup::dihedral(k).unwrap());
            let h = Subgroup::generated(g.clone(), &[1]).unwrap();
            let cd = CosetData::new(&h);
            assert_eq!(cd.reps(), &[0, k]);
        }
    }

    #[test]
    fn extreme_cosets() {
        let g = arc(FiniteGroup::symmetric(3).unwrap());
        let cd = CosetData::new(&Subgroup::whole(g.clone()));
        assert_eq!(cd.reps(), &[0]);
        for x in g.elements() {
            assert_eq!(cd.act(x, 0), 0);
            assert_eq!(cd.kappa(x, 0), x);
        }
        let cd = CosetData::new(&Subgroup::trivial(g.clone()));
        assert_eq!(cd.reps(), (0..6).collect::<Vec<_>>().as_slice());
        for x in g.elements() {
            for r in 0..6 {
                assert_eq!(cd.kappa(x, r), 0);
                assert_eq!(cd.reps()[cd.act(x, r)], g.mul(x, r));
            }
        }
    }

    fn all_subgroups(g: &Arc<FiniteGroup>) -> Vec<Subgroup> {
        let mut out: Vec<Subgroup> = Vec::new();
        for a in g.elements() {
            for b in g.elements() {
                let s = Subgroup::generated(g.clone(), &[a, b]).unwrap();
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        out
    }

    #[test]
    fn coset_invariants_exhaustive() {
        let groups = [
            FiniteGroup::dihedral(4).unwrap(),
            FiniteGroup::symmetric(3).unwrap(),
            FiniteGroup::direct_product(&[z2(), FiniteGroup::cyclic(4).unwrap()]).unwrap(),
            FiniteGroup::dihedral(6).unwrap(),
        ];
        for g in groups {
            let g = arc(g);
            for h in all_subgroups(&g) {
                let cd = CosetData::new(&h);
                assert_eq!(cd.reps()[0], 0);
                assert_eq!(cd.num_cosets() * h.order(), g.order());
                for (i, &r) in cd.reps().iter().enumerate() {
                    for &k in h.elements() {
                        assert_eq!(cd.factor(g.mul(r, k)), (i, k));
                    }
                }
                for x in g.elements() {
                    let (i, k) = cd.factor(x);
                    assert_eq!(g.mul(cd.reps()[i], k), x);
                    for i in 0..cd.num_cosets() {
                        let r = cd.reps()[i];
                        let j = cd.act(x, i);
                        assert!(h.contains(cd.kappa(x, i)));
                        assert_eq!(g.mul(x, r), g.mul(cd.reps()[j], cd.kappa(x, i)));
                    }
                    // κ(g1 g2, r) = κ(g1, g2 ▷ r) κ(g2, r)
                    for y in g.elements() {
                        for i in 0..cd.num_cosets() {
                            let lhs = cd.kappa(g.mul(x, y), i);
                            let rhs = g.mul(cd.kappa(x, cd.act(y, i)), cd.kappa(y, i));
                            assert_eq!(lhs, rhs);
                        }
                    }
                }
            }
        }
    }
}
