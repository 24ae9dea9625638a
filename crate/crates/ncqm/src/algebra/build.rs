//! Builders for the noncommutative coordinates, the total angular momentum
//! and the operator identities checked by the verification suites.

use std::collections::BTreeMap;

use crate::coeff::{Param, ScalarCoeff};

use super::{AlgebraError, Generator, OperatorExpr};

/// Signs of ε_ijk for a fixed first index: the two (j, k) pairs with sign.
fn eps_pairs(i: u8) -> [(u8, u8, i64); 2] {
    match i {
        1 => [(2, 3, 1), (3, 2, -1)],
        2 => [(3, 1, 1), (1, 3, -1)],
        3 => [(1, 2, 1), (2, 1, -1)],
        _ => panic!("axis out of range"),
    }
}

/// ε_ijk as (k, sign) for fixed (i, j), or None when i == j.
fn eps_third(i: u8, j: u8) -> Option<(u8, i64)> {
    if i == j {
        return None;
    }
    let k = 6 - i - j;
    let sign = match (i, j) {
        (1, 2) | (2, 3) | (3, 1) => 1,
        _ => -1,
    };
    Some((k, sign))
}

/// Registry of particle labels and the κ parameter each feels.
#[derive(Clone, Debug, Default)]
pub struct ParticleTable {
    kappas: BTreeMap<u32, Param>,
}

impl ParticleTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Register particle `n` with its own symbol κ_n.
    pub fn register(&mut self, n: u32) -> Param {
        let p = Param::Kappa(n);
        self.kappas.insert(n, p);
        p
    }

    /// Register a label with an explicit κ parameter (used for the relative
    /// and center-of-mass effective coordinates).
    pub fn register_with(&mut self, n: u32, kappa: Param) {
        self.kappas.insert(n, kappa);
    }

    pub fn kappa(&self, n: u32) -> Result<Param, AlgebraError> {
        self.kappas
            .get(&n)
            .copied()
            .ok_or(AlgebraError::UnknownParticle(n))
    }
}

pub fn position(particle: u32, axis: u8) -> OperatorExpr {
    OperatorExpr::generator(Generator::pos(particle, axis))
}

pub fn momentum(particle: u32, axis: u8) -> OperatorExpr {
    OperatorExpr::generator(Generator::mom(particle, axis))
}

pub fn osc_pos(axis: u8) -> OperatorExpr {
    OperatorExpr::generator(Generator::osc_pos(axis))
}

pub fn osc_mom(axis: u8) -> OperatorExpr {
    OperatorExpr::generator(Generator::osc_mom(axis))
}

/// X_i = x_i − ½ θ_ij p_j = x_i + (κ_n/2) [ã × p]_i for the registered
/// particle. The commutative limit κ_n → 0 returns the bare x_i.
pub fn nc_coordinate(
    table: &ParticleTable,
    axis: u8,
    particle: u32,
) -> Result<OperatorExpr, AlgebraError> {
    if !(1..=3).contains(&axis) {
        return Err(AlgebraError::BadAxis(axis));
    }
    let kappa = table.kappa(particle)?;
    let half_kappa = ScalarCoeff::param(kappa).mul(&ScalarCoeff::from_ratio(1, 2));
    let mut out = position(particle, axis);
    for (j, k, s) in eps_pairs(axis) {
        let term = osc_pos(j)
            .mul(&momentum(particle, k))
            .scale(&half_kappa.mul(&ScalarCoeff::from_int(s)));
        out = out.add(&term);
    }
    Ok(out)
}

/// P_i = p_i: the momenta are undeformed.
pub fn nc_momentum(particle: u32, axis: u8) -> OperatorExpr {
    momentum(particle, axis)
}

/// θ_ij = κ_n ε_ijk ã_k as an operator.
pub fn theta_tensor(
    table: &ParticleTable,
    i: u8,
    j: u8,
    particle: u32,
) -> Result<OperatorExpr, AlgebraError> {
    let kappa = table.kappa(particle)?;
    Ok(match eps_third(i, j) {
        None => OperatorExpr::zero(),
        Some((k, s)) => osc_pos(k).scale(&ScalarCoeff::param(kappa).mul(&ScalarCoeff::from_int(s))),
    })
}

/// L^t = [x × p] + ħ [ã × p̃ᵃ], componentwise.
pub fn total_angular_momentum(particle: u32) -> [OperatorExpr; 3] {
    let comp = |i: u8| {
        let mut out = OperatorExpr::zero();
        for (j, k, s) in eps_pairs(i) {
            out = out.add(&position(particle, j).mul(&momentum(particle, k)).scale(&ScalarCoeff::from_int(s)));
            out = out.add(
                &osc_pos(j)
                    .mul(&osc_mom(k))
                    .scale(&ScalarCoeff::hbar().mul(&ScalarCoeff::from_int(s))),
            );
        }
        out
    };
    [comp(1), comp(2), comp(3)]
}

/// The equivalent form written in the noncommutative variables:
/// L^t = [X × P] + (κ/2) [P × [ã × P]] + ħ [ã × p̃ᵃ].
pub fn total_angular_momentum_nc(
    table: &ParticleTable,
    particle: u32,
) -> Result<[OperatorExpr; 3], AlgebraError> {
    let kappa = table.kappa(particle)?;
    let half_kappa = ScalarCoeff::param(kappa).mul(&ScalarCoeff::from_ratio(1, 2));
    let cross_ap = |k: u8| -> OperatorExpr {
        let mut out = OperatorExpr::zero();
        for (l, m, s) in eps_pairs(k) {
            out = out.add(
                &osc_pos(l)
                    .mul(&momentum(particle, m))
                    .scale(&ScalarCoeff::from_int(s)),
            );
        }
        out
    };
    let mut comps = Vec::with_capacity(3);
    for i in 1..=3u8 {
        let mut out = OperatorExpr::zero();
        for (j, k, s) in eps_pairs(i) {
            let xj = nc_coordinate(table, j, particle)?;
            out = out.add(&xj.mul(&momentum(particle, k)).scale(&ScalarCoeff::from_int(s)));
            out = out.add(
                &momentum(particle, j)
                    .mul(&cross_ap(k))
                    .scale(&half_kappa.mul(&ScalarCoeff::from_int(s))),
            );
            out = out.add(
                &osc_pos(j)
                    .mul(&osc_mom(k))
                    .scale(&ScalarCoeff::hbar().mul(&ScalarCoeff::from_int(s))),
            );
        }
        comps.push(out);
    }
    Ok(comps.try_into().expect("three components"))
}

/// [[A,B],C] + [[B,C],A] + [[C,A],B]; identically zero in any associative
/// algebra, so a nonzero result flags an engine defect.
pub fn jacobi(a: &OperatorExpr, b: &OperatorExpr, c: &OperatorExpr) -> OperatorExpr {
    a.commutator(b)
        .commutator(c)
        .add(&b.commutator(c).commutator(a))
        .add(&c.commutator(a).commutator(b))
}

/// Polynomial side of the square-root expansion: the difference
/// (X^r)² − [(x^r)² − (θ^μ·L^r) + ¼[θ^μ × p^r]²], which must vanish.
/// `rel_label` is the registered label of the relative-motion pair (its κ
/// parameter plays the role of κ_μ).
pub fn xr_squared_difference(
    table: &ParticleTable,
    rel_label: u32,
) -> Result<OperatorExpr, AlgebraError> {
    let kappa = ScalarCoeff::param(table.kappa(rel_label)?);

    // (X^r)^2 from the representation
    let mut lhs = OperatorExpr::zero();
    for i in 1..=3u8 {
        let xi = nc_coordinate(table, i, rel_label)?;
        lhs = lhs.add(&xi.mul(&xi));
    }

    // (x^r)^2
    let mut x_sq = OperatorExpr::zero();
    for i in 1..=3u8 {
        let xi = position(rel_label, i);
        x_sq = x_sq.add(&xi.mul(&xi));
    }

    // (θ^μ · L^r) with θ^μ_i = κ ã_i and L^r = [x^r × p^r]
    let mut theta_dot_l = OperatorExpr::zero();
    for i in 1..=3u8 {
        let mut li = OperatorExpr::zero();
        for (j, k, s) in eps_pairs(i) {
            li = li.add(
                &position(rel_label, j)
                    .mul(&momentum(rel_label, k))
                    .scale(&ScalarCoeff::from_int(s)),
            );
        }
        theta_dot_l = theta_dot_l.add(&osc_pos(i).scale(&kappa).mul(&li));
    }

    // ¼ [θ^μ × p^r]^2
    let mut cross_sq = OperatorExpr::zero();
    for i in 1..=3u8 {
        let mut ci = OperatorExpr::zero();
        for (j, k, s) in eps_pairs(i) {
            ci = ci.add(
                &osc_pos(j)
                    .scale(&kappa)
                    .mul(&momentum(rel_label, k))
                    .scale(&ScalarCoeff::from_int(s)),
            );
        }
        cross_sq = cross_sq.add(&ci.mul(&ci));
    }

    let rhs = x_sq
        .sub(&theta_dot_l)
        .add(&cross_sq.scale(&ScalarCoeff::from_ratio(1, 4)));
    Ok(lhs.sub(&rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::Param;

    #[test]
    fn nc_coordinate_matches_representation() {
        // X_1 = x_1 + (κ₁/2)(ã₂ p₃ − ã₃ p₂)
        let mut table = ParticleTable::new();
        table.register(1);
        let x1 = nc_coordinate(&table, 1, 1).unwrap();
        let half = ScalarCoeff::param(Param::Kappa(1)).mul(&ScalarCoeff::from_ratio(1, 2));
        let want = position(1, 1)
            .add(&osc_pos(2).mul(&momentum(1, 3)).scale(&half))
            .sub(&osc_pos(3).mul(&momentum(1, 2)).scale(&half));
        assert_eq!(x1, want);
    }

    #[test]
    fn commutative_limit_is_bare_coordinate() {
        let mut table = ParticleTable::new();
        table.register(1);
        let x1 = nc_coordinate(&table, 1, 1)
            .unwrap()
            .substitute_param(Param::Kappa(1), &ScalarCoeff::zero());
        assert_eq!(x1, position(1, 1));
    }

    #[test]
    fn unknown_particle_is_an_error() {
        let table = ParticleTable::new();
        assert_eq!(
            nc_coordinate(&table, 1, 7).unwrap_err(),
            AlgebraError::UnknownParticle(7)
        );
    }

    #[test]
    fn nc_commutator_gives_theta() {
        // [X_1, X_2] = iħ κ ã_3 = iħ θ_12
        let mut table = ParticleTable::new();
        table.register(1);
        let x1 = nc_coordinate(&table, 1, 1).unwrap();
        let x2 = nc_coordinate(&table, 2, 1).unwrap();
        let theta12 = theta_tensor(&table, 1, 2, 1).unwrap();
        assert_eq!(
            x1.commutator(&x2),
            theta12.scale(&ScalarCoeff::i_hbar())
        );
    }

    #[test]
    fn nc_coordinate_momentum_canonical() {
        let mut table = ParticleTable::new();
        table.register(1);
        let x1 = nc_coordinate(&table, 1, 1).unwrap();
        assert_eq!(
            x1.commutator(&nc_momentum(1, 1)),
            OperatorExpr::scalar(ScalarCoeff::i_hbar())
        );
        assert!(x1.commutator(&nc_momentum(1, 2)).is_zero());
    }

    #[test]
    fn angular_momentum_forms_agree() {
        let mut table = ParticleTable::new();
        table.register(1);
        let plain = total_angular_momentum(1);
        let nc = total_angular_momentum_nc(&table, 1).unwrap();
        for i in 0..3 {
            assert_eq!(plain[i], nc[i], "component {}", i + 1);
        }
    }

    #[test]
    fn jacobi_on_heisenberg_triple() {
        let a = position(1, 1);
        let b = momentum(1, 1);
        let c = momentum(1, 2);
        assert!(jacobi(&a, &b, &c).is_zero());
    }

    #[test]
    fn xr_squared_identity_holds() {
        let mut table = ParticleTable::new();
        table.register_with(9, Param::KappaRel);
        let diff = xr_squared_difference(&table, 9).unwrap();
        assert!(diff.is_zero(), "difference:\n{}", diff.dump());
    }

    #[test]
    fn xr_squared_linear_term_structure() {
        // κ_μ¹ coefficient of (X^r)² is −ε_ijk ã_k x_i p_j
        let mut table = ParticleTable::new();
        table.register_with(9, Param::KappaRel);
        let mut lhs = OperatorExpr::zero();
        for i in 1..=3u8 {
            let xi = nc_coordinate(&table, i, 9).unwrap();
            lhs = lhs.add(&xi.mul(&xi));
        }
        let linear = lhs.coeff_of_param(Param::KappaRel, 1);
        let mut want = OperatorExpr::zero();
        for i in 1..=3u8 {
            for j in 1..=3u8 {
                if let Some((k, s)) = eps_third(i, j) {
                    want = want.add(
                        &osc_pos(k)
                            .mul(&position(9, i))
                            .mul(&momentum(9, j))
                            .scale(&ScalarCoeff::from_int(-s)),
                    );
                }
            }
        }
        assert_eq!(linear, want);
    }
}
