//! Finite G-sets, crossed G-sets, orbits and stabilizers.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::group::{FiniteGroup, Subgroup};

/// A finite set with a left action of a finite group.
pub trait GSet {
    fn group(&self) -> &Arc<FiniteGroup>;
    fn size(&self) -> usize;
    fn act(&self, g: usize, x: usize) -> usize;
}

/// A G-set given by its action table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ActionTable {
    group: Arc<FiniteGroup>,
    size: usize,
    table: Vec<u32>,
}

impl ActionTable {
    pub fn new(
        group: Arc<FiniteGroup>,
        size: usize,
        action: impl Fn(usize, usize) -> usize,
    ) -> Result<ActionTable> {
        let n = group.order();
        let mut table = vec![0u32; n * size];
        for g in 0..n {
            for x in 0..size {
                let y = action(g, x);
                if y >= size {
                    return Err(Error::InvalidGSet(format!("{g}·{x} = {y} is out of range")));
                }
                table[g * size + x] = y as u32;
            }
        }
        let t = ActionTable { group, size, table };
        t.validate()?;
        Ok(t)
    }

    fn validate(&self) -> Result<()> {
        let g = &self.group;
        for x in 0..self.size {
            if self.act(0, x) != x {
                return Err(Error::InvalidGSet(format!("identity moves {x}")));
            }
        }
        for a in g.elements() {
            for b in g.elements() {
                let ab = g.mul(a, b);
                for x in 0..self.size {
                    if self.act(ab, x) != self.act(a, self.act(b, x)) {
                        return Err(Error::InvalidGSet(format!(
                            "({a}*{b})·{x} != {a}·({b}·{x})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

impl GSet for ActionTable {
    fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }
    fn size(&self) -> usize {
        self.size
    }
    #[inline]
    fn act(&self, g: usize, x: usize) -> usize {
        self.table[g * self.size + x] as usize
    }
}

/// A G-set with grading `|·| : X → G` satisfying `|g·x| = g|x|g⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedGSet {
    action: ActionTable,
    grade: Vec<u8>,
}

impl CrossedGSet {
    pub fn new(
        group: Arc<FiniteGroup>,
        size: usize,
        action: impl Fn(usize, usize) -> usize,
        grade: impl Fn(usize) -> usize,
    ) -> Result<CrossedGSet> {
        let action = ActionTable::new(group, size, action)?;
        let grade: Vec<u8> = (0..size).map(|x| grade(x) as u8).collect();
        let g = action.group();
        for x in 0..size {
            g.check_element(grade[x] as usize)?;
        }
        for a in g.elements() {
            for x in 0..size {
                let lhs = grade[action.act(a, x)] as usize;
                let rhs = g.conj(a, grade[x] as usize);
                if lhs != rhs {
                    return Err(Error::InvalidGSet(format!(
                        "|{a}·{x}| = {lhs} but {a}|{x}|{a}⁻¹ = {rhs}"
                    )));
                }
            }
        }
        Ok(CrossedGSet { action, grade })
    }

    /// `G` acting on itself by conjugation, graded by the identity map.
    pub fn conjugation(group: Arc<FiniteGroup>) -> CrossedGSet {
        let n = group.order();
        let g = group.clone();
        CrossedGSet::new(group, n, move |a, x| g.conj(a, x), |x| x).unwrap()
    }

    /// Left regular action, trivially graded.
    pub fn regular(group: Arc<FiniteGroup>) -> CrossedGSet {
        let n = group.order();
        let g = group.clone();
        CrossedGSet::new(group, n, move |a, x| g.mul(a, x), |_| 0).unwrap()
    }

    /// `size` points fixed by every element, trivially graded.
    pub fn trivial(group: Arc<FiniteGroup>, size: usize) -> CrossedGSet {
        CrossedGSet::new(group, size, |_, x| x, |_| 0).unwrap()
    }

    /// `X × Y` with the diagonal action and `|(x, y)| = |x||y|`; `(x, y)`
    /// has index `x * |Y| + y`.
    pub fn product(x: &CrossedGSet, y: &CrossedGSet) -> Result<CrossedGSet> {
        if x.group() != y.group() {
            return Err(Error::MixedAmbientData);
        }
        let g = x.group().clone();
        let ny = y.size();
        CrossedGSet::new(
            g.clone(),
            x.size() * ny,
            |a, p| x.act(a, p / ny) * ny + y.act(a, p % ny),
            |p| g.mul(x.grade(p / ny), y.grade(p % ny)),
        )
    }

    #[inline]
    pub fn grade(&self, x: usize) -> usize {
        self.grade[x] as usize
    }

    pub fn grades(&self) -> impl Iterator<Item = usize> + '_ {
        self.grade.iter().map(|&g| g as usize)
    }
}

impl GSet for CrossedGSet {
    fn group(&self) -> &Arc<FiniteGroup> {
        self.action.group()
    }
    fn size(&self) -> usize {
        self.action.size()
    }
    #[inline]
    fn act(&self, g: usize, x: usize) -> usize {
        self.action.act(g, x)
    }
}

/// The braiding of crossed G-sets, `c(x, y) = (|x|·y, x)`.
pub fn crossed_braiding(x_set: &CrossedGSet, y_set: &CrossedGSet, x: usize, y: usize) -> (usize, usize) {
    (y_set.act(x_set.grade(x), y), x)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Smallest element of the orbit.
    pub rep: usize,
    pub elements: Vec<usize>,
}

/// Orbit decomposition with canonical representatives and transporters.
#[derive(Clone, Debug)]
pub struct Orbits {
    pub orbits: Vec<Orbit>,
    /// Orbit index of each point.
    pub orbit_of: Vec<usize>,
    /// For each `x`, the first group element `t` (in index order) with `t·x` the representative.
    pub transporter: Vec<usize>,
}

pub fn orbits<X: GSet + ?Sized>(set: &X) -> Orbits {
    let g = set.group();
    let n = set.size();
    let mut orbit_of = vec![usize::MAX; n];
    let mut transporter = vec![usize::MAX; n];
    let mut out = Vec::new();
    for x in 0..n {
        if orbit_of[x] != usize::MAX {
            continue;
        }
        let id = out.len();
        let mut elements = Vec::new();
        for a in g.elements() {
            let y = set.act(a, x);
            if orbit_of[y] == usize::MAX {
                orbit_of[y] = id;
                elements.push(y);
            }
            // a·x = y, so a⁻¹ carries y to x
            let t = g.inv(a);
            if t < transporter[y] {
                transporter[y] = t;
            }
        }
        elements.sort_unstable();
        out.push(Orbit { rep: x, elements });
    }
    Orbits { orbits: out, orbit_of, transporter }
}

pub fn stabilizer<X: GSet + ?Sized>(set: &X, x: usize) -> Subgroup {
    let g = set.group();
    let els: Vec<usize> = g.elements().filter(|&a| set.act(a, x) == x).collect();
    Subgroup::new(g.clone(), &els).expect("stabilizers are subgroups")
}
