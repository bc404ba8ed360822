//! Shared test matrix: boundary modules over several (G, ω) pairs.
#![allow(dead_code)]

use std::sync::Arc;

use gbraid_core::{
    check_two_cochain, cyclic_cocycle, CrossedGSet, FiniteGroup, LagrangianData, MonomialYD, Phase, Subgroup,
    ThreeCocycle,
};

pub struct Config {
    pub name: &'static str,
    pub module: Arc<MonomialYD>,
    pub lagrangian: Option<LagrangianData>,
    /// Strand counts exercised for this configuration.
    pub ns: Vec<usize>,
    pub central: bool,
}

impl Config {
    pub fn twisted(&self) -> bool {
        !self.module.omega().is_trivial()
    }
}

pub fn arc(g: FiniteGroup) -> Arc<FiniteGroup> {
    Arc::new(g)
}

/// `L(H, γ)` with `γ` given on pairs of elements of `H`.
pub fn lagrangian(
    omega: Arc<ThreeCocycle>,
    h: &[usize],
    gamma: impl Fn(usize, usize) -> Phase,
) -> LagrangianData {
    let sub = Subgroup::new(omega.group().clone(), h).unwrap();
    let gamma = check_two_cochain(&omega, &sub, gamma).unwrap();
    LagrangianData::new(omega, gamma).unwrap()
}

pub fn untwisted(g: FiniteGroup, h: &[usize]) -> LagrangianData {
    let g = arc(g);
    lagrangian(Arc::new(ThreeCocycle::trivial(g)), h, |_, _| Phase::ONE)
}

/// A normalized 2-cochain with values of order 7.
pub fn mu(a: usize, b: usize) -> Phase {
    if a == 0 || b == 0 {
        Phase::ONE
    } else {
        Phase::new(((a * b + a) % 7) as i64, 7)
    }
}

/// Sign of a permutation of `S_3` in lexicographic numbering.
pub const S3_SIGN: [usize; 6] = [0, 1, 1, 0, 0, 1];

fn config(name: &'static str, l: LagrangianData, ns: Vec<usize>) -> Config {
    let central = l.subgroup().is_central();
    Config { name, module: l.module().clone(), lagrangian: Some(l), ns, central }
}

/// The semion: a vacuum and a flux of degree 1 on which the generator acts by `i`.
pub fn semion() -> Arc<MonomialYD> {
    let omega = Arc::new(cyclic_cocycle(2, 1).unwrap());
    let labels = CrossedGSet::new(omega.group().clone(), 2, |_, x| x, |x| x).unwrap();
    Arc::new(MonomialYD::new(omega, labels, |g, x| if g == 1 && x == 1 { Phase::I } else { Phase::ONE }).unwrap())
}

/// One degree-e label on which the generator of `Z_2` acts by `-1`.
pub fn charge() -> Arc<MonomialYD> {
    let omega = Arc::new(ThreeCocycle::trivial(arc(FiniteGroup::cyclic(2).unwrap())));
    let labels = CrossedGSet::trivial(omega.group().clone(), 1);
    Arc::new(MonomialYD::new(omega, labels, |g, _| if g == 1 { Phase::MINUS_ONE } else { Phase::ONE }).unwrap())
}

pub fn matrix() -> Vec<Config> {
    let s3 = || FiniteGroup::symmetric(3).unwrap();
    let mut out = vec![
        config("Z4, H = Z2", untwisted(FiniteGroup::cyclic(4).unwrap(), &[0, 2]), vec![2, 3, 4]),
        config(
            "Z2xZ2, H = first factor",
            untwisted(FiniteGroup::direct_product(&[FiniteGroup::cyclic(2).unwrap(), FiniteGroup::cyclic(2).unwrap()]).unwrap(), &[0, 2]),
            vec![2, 3, 4],
        ),
        config("D6, H = <r>", untwisted(FiniteGroup::dihedral(3).unwrap(), &[0, 1, 2]), vec![2, 3]),
        config("D8, H = <r>", untwisted(FiniteGroup::dihedral(4).unwrap(), &[0, 1, 2, 3]), vec![2, 3]),
        config("Z2, H = {e}", untwisted(FiniteGroup::cyclic(2).unwrap(), &[0]), vec![2, 3, 4]),
        config("Z3, H = {e}", untwisted(FiniteGroup::cyclic(3).unwrap(), &[0]), vec![2, 3]),
        config("S3, H = S3", untwisted(s3(), &[0, 1, 2, 3, 4, 5]), vec![2, 3, 4]),
        config("S3, H = <(12)>", untwisted(s3(), &[0, 1]), vec![2, 3]),
    ];

    {
        let d8 = arc(FiniteGroup::dihedral(4).unwrap());
        let omega = Arc::new(ThreeCocycle::trivial(d8));
        let l = lagrangian(omega, &[0, 2], |a, b| if (a, b) == (2, 2) { Phase::MINUS_ONE } else { Phase::ONE });
        out.push(config("D8, H = <r^2>, gamma(r^2,r^2) = -1", l, vec![2, 3]));
    }
    {
        let omega = Arc::new(cyclic_cocycle(2, 1).unwrap());
        out.push(config("Z2 twisted, H = {e}", lagrangian(omega, &[0], |_, _| Phase::ONE), vec![2, 3, 4]));
    }
    {
        let omega = Arc::new(cyclic_cocycle(4, 2).unwrap());
        let l = lagrangian(omega.clone(), &[0, 2], |_, _| Phase::ONE);
        out.push(config("Z4 twisted p = 2, H = Z2", l, vec![2, 3]));
        let l = lagrangian(omega, &[0, 2], |a, b| if (a, b) == (2, 2) { Phase::MINUS_ONE } else { Phase::ONE });
        out.push(config("Z4 twisted p = 2, H = Z2, gamma(2,2) = -1", l, vec![2, 3]));
    }
    {
        let omega = Arc::new(cyclic_cocycle(9, 3).unwrap());
        out.push(config("Z9 twisted p = 3, H = Z3", lagrangian(omega, &[0, 3, 6], |_, _| Phase::ONE), vec![2, 3]));
    }
    {
        let g = arc(s3());
        let sign = cyclic_cocycle(2, 1).unwrap().pullback(g.clone(), &S3_SIGN).unwrap();
        let omega = Arc::new(sign.times(&ThreeCocycle::coboundary(g, mu).unwrap()).unwrap());
        out.push(config("S3, omega = sign* x d(mu), H = A3", lagrangian(omega, &[0, 3, 4], mu), vec![2, 3]));
    }
    {
        let g = arc(s3());
        let omega = Arc::new(ThreeCocycle::coboundary(g, mu).unwrap());
        out.push(config("S3, omega = d(mu), H = S3", lagrangian(omega, &[0, 1, 2, 3, 4, 5], mu), vec![2, 3]));
    }
    {
        let g = arc(FiniteGroup::direct_product(&[s3(), FiniteGroup::cyclic(3).unwrap()]).unwrap());
        let proj: Vec<usize> = g.elements().map(|a| a % 3).collect();
        let base = cyclic_cocycle(3, 1).unwrap().pullback(g.clone(), &proj).unwrap();
        let omega = Arc::new(base.times(&ThreeCocycle::coboundary(g.clone(), mu).unwrap()).unwrap());
        let h: Vec<usize> = (0..6).map(|s| 3 * s).collect();
        out.push(config("S3xZ3, omega = pr*(cyclic) x d(mu), H = S3", lagrangian(omega, &h, mu), vec![2, 3]));
    }
    out.push(Config { name: "Z2 twisted, semion module", module: semion(), lagrangian: None, ns: vec![2, 3, 4], central: false });
    out.push(Config { name: "Z2, charge module", module: charge(), lagrangian: None, ns: vec![1, 2, 3], central: false });
    out
}
