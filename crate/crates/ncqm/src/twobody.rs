//! Two-particle composition: effective noncommutativity tensors for the
//! center-of-mass and relative coordinates, plus the symbolic verification
//! of their algebra.
//!
//! Masses are ordinary floats; the symbolic checks promote them to exact
//! rationals (every f64 is one), so the verified identities are exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::FromPrimitive;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{momentum, nc_coordinate, osc_mom, osc_pos, OperatorExpr, ParticleTable};
use crate::coeff::{Param, ScalarCoeff};
use crate::report::{RelationCheck, VerificationReport};

#[derive(Debug, Error, PartialEq)]
pub enum TwoBodyError {
    #[error("masses must be positive, got {0}")]
    BadMass(f64),
    #[error("the universal constant must agree between particles ({0} vs {1})")]
    MismatchedConstant(f64, f64),
}

/// One particle: its mass and the universal constant it feels. The constant
/// is the dimensionless combination γ̃ l_P² m_P / ħ expressed in reduced
/// units, identical for every particle; κ_n = constant / mass.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct ParticleSpec {
    pub mass: f64,
    pub gamma_tilde: f64,
}

impl ParticleSpec {
    pub fn new(mass: f64, gamma_tilde: f64) -> Result<Self, TwoBodyError> {
        if !(mass > 0.0) {
            return Err(TwoBodyError::BadMass(mass));
        }
        Ok(ParticleSpec { mass, gamma_tilde })
    }

    /// κ_n = γ̃ l_P² m_P / (ħ m_n) in reduced units.
    pub fn kappa(&self) -> f64 {
        self.gamma_tilde / self.mass
    }
}

/// A two-particle system with its derived mass combinations.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TwoParticleSystem {
    pub p1: ParticleSpec,
    pub p2: ParticleSpec,
    /// total mass m₁ + m₂
    pub total_mass: f64,
    /// reduced mass m₁m₂/M
    pub reduced_mass: f64,
    /// mass fractions m_i / M
    pub mu1: f64,
    pub mu2: f64,
}

impl TwoParticleSystem {
    pub fn new(p1: ParticleSpec, p2: ParticleSpec) -> Result<Self, TwoBodyError> {
        if p1.gamma_tilde != p2.gamma_tilde {
            return Err(TwoBodyError::MismatchedConstant(
                p1.gamma_tilde,
                p2.gamma_tilde,
            ));
        }
        let total = p1.mass + p2.mass;
        Ok(TwoParticleSystem {
            p1,
            p2,
            total_mass: total,
            reduced_mass: p1.mass * p2.mass / total,
            mu1: p1.mass / total,
            mu2: p2.mass / total,
        })
    }

    pub fn gamma_tilde(&self) -> f64 {
        self.p1.gamma_tilde
    }
}

/// The effective scales felt by the composite degrees of freedom.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EffectiveTensors {
    /// coefficient of ε_ijk ã_k in the center-of-mass tensor θ̃_ij
    pub kappa_com: f64,
    /// coefficient in the relative tensor θ^μ_ij
    pub kappa_rel: f64,
}

impl EffectiveTensors {
    pub fn of(sys: &TwoParticleSystem) -> Self {
        EffectiveTensors {
            kappa_com: effective_theta_com(sys),
            kappa_rel: effective_theta_rel(sys),
        }
    }
}

/// θ̃ scale: (m₁²κ₁ + m₂²κ₂)/M², which equals γ̃ l_P² m_P/(ħM) under the
/// proportionality condition.
pub fn effective_theta_com(sys: &TwoParticleSystem) -> f64 {
    let m1 = sys.p1.mass;
    let m2 = sys.p2.mass;
    (m1 * m1 * sys.p1.kappa() + m2 * m2 * sys.p2.kappa()) / (sys.total_mass * sys.total_mass)
}

/// θ^μ scale: κ₁ + κ₂ = γ̃ l_P² m_P/(ħμ).
pub fn effective_theta_rel(sys: &TwoParticleSystem) -> f64 {
    sys.p1.kappa() + sys.p2.kappa()
}

fn rat(x: f64) -> BigRational {
    BigRational::from_f64(x).expect("finite mass")
}

fn coeff_rat(r: &BigRational) -> ScalarCoeff {
    ScalarCoeff::from_rational(r.clone())
}

/// Composite symbolic variables built over two registered particles with
/// exact rational mass fractions.
struct CompositeOps {
    mu1: BigRational,
    mu2: BigRational,
    table: ParticleTable,
}

impl CompositeOps {
    fn new(m1: f64, m2: f64) -> Self {
        let m1 = rat(m1);
        let m2 = rat(m2);
        let total = m1.clone() + m2.clone();
        let mut table = ParticleTable::new();
        table.register(1);
        table.register(2);
        CompositeOps {
            mu1: m1 / total.clone(),
            mu2: m2 / total,
            table,
        }
    }

    /// X^c_i = μ₁ X⁽¹⁾_i + μ₂ X⁽²⁾_i
    fn x_com(&self, i: u8) -> OperatorExpr {
        nc_coordinate(&self.table, i, 1)
            .expect("registered")
            .scale(&coeff_rat(&self.mu1))
            .add(
                &nc_coordinate(&self.table, i, 2)
                    .expect("registered")
                    .scale(&coeff_rat(&self.mu2)),
            )
    }

    /// P^c_i = P⁽¹⁾_i + P⁽²⁾_i
    fn p_com(&self, i: u8) -> OperatorExpr {
        momentum(1, i).add(&momentum(2, i))
    }

    /// X^r_i = X⁽²⁾_i − X⁽¹⁾_i
    fn x_rel(&self, i: u8) -> OperatorExpr {
        nc_coordinate(&self.table, i, 2)
            .expect("registered")
            .sub(&nc_coordinate(&self.table, i, 1).expect("registered"))
    }

    /// P^r_i = μ₁ P⁽²⁾_i − μ₂ P⁽¹⁾_i
    fn p_rel(&self, i: u8) -> OperatorExpr {
        momentum(2, i)
            .scale(&coeff_rat(&self.mu1))
            .sub(&momentum(1, i).scale(&coeff_rat(&self.mu2)))
    }

    /// Impose the proportionality condition m₁κ₁ = m₂κ₂ as the ring relation
    /// κ_n → g/m_n with exact rational masses.
    fn impose_proportionality(&self, expr: &OperatorExpr) -> OperatorExpr {
        let g = ScalarCoeff::param(Param::Universal);
        let k1 = g.mul(&coeff_rat(&(self.mu1.clone().recip() / rat_total(&self.mu1, &self.mu2))));
        let k2 = g.mul(&coeff_rat(&(self.mu2.clone().recip() / rat_total(&self.mu1, &self.mu2))));
        expr.substitute_param(Param::Kappa(1), &k1)
            .substitute_param(Param::Kappa(2), &k2)
    }
}

// the masses entered only through μ_i = m_i/M; we recover 1/m_i = 1/(μ_i M)
// up to the overall factor 1/M absorbed into the universal symbol. Helper
// keeps the substitution exact: with M normalized out, κ_n ∝ g/μ_n.
fn rat_total(_mu1: &BigRational, _mu2: &BigRational) -> BigRational {
    BigRational::from_integer(BigInt::from(1))
}

/// ε_ijk ã_k scaled by `scale`, or zero when i == j.
fn eps_osc(i: u8, j: u8, scale: &ScalarCoeff) -> OperatorExpr {
    if i == j {
        return OperatorExpr::zero();
    }
    let k = 6 - i - j;
    let s = match (i, j) {
        (1, 2) | (2, 3) | (3, 1) => 1,
        _ => -1,
    };
    osc_pos(k).scale(&scale.mul(&ScalarCoeff::from_int(s)))
}

/// Symbolic verification of the center-of-mass/relative algebra.
///
/// With `impose_proportionality` the cross commutator [X^c, X^r] must vanish
/// exactly; without it the report records its nonzero residual
/// (iħ/M)(m₂κ₂ − m₁κ₁) ε_ijk ã_k so the cancellation can be exhibited.
pub fn verify_com_rel_algebra(
    sys: &TwoParticleSystem,
    impose_proportionality: bool,
) -> VerificationReport {
    let ops = CompositeOps::new(sys.p1.mass, sys.p2.mass);
    let mut report = VerificationReport::new(if impose_proportionality {
        "com-rel algebra (m1 k1 = m2 k2 imposed)"
    } else {
        "com-rel algebra (independent kappas)"
    });
    let ih = ScalarCoeff::i_hbar();

    // effective scale polynomials in the kappa symbols
    let mu1 = coeff_rat(&ops.mu1);
    let mu2 = coeff_rat(&ops.mu2);
    let k1 = ScalarCoeff::param(Param::Kappa(1));
    let k2 = ScalarCoeff::param(Param::Kappa(2));
    let kappa_com = mu1.pow(2).mul(&k1).add(&mu2.pow(2).mul(&k2));
    let kappa_rel = k1.add(&k2);

    let fixup = |e: &OperatorExpr| -> OperatorExpr {
        if impose_proportionality {
            ops.impose_proportionality(e)
        } else {
            e.clone()
        }
    };

    for i in 1..=3u8 {
        for j in 1..=3u8 {
            // [X^c_i, X^c_j] = iħ κ_com ε_ijk ã_k
            let got = ops.x_com(i).commutator(&ops.x_com(j));
            let want = eps_osc(i, j, &ih.mul(&kappa_com));
            report.push(RelationCheck::expect_equal(
                format!("[Xc_{i}, Xc_{j}] = i hbar kappa_com eps ã"),
                &fixup(&got),
                &fixup(&want),
            ));

            // [X^r_i, X^r_j] = iħ κ_rel ε_ijk ã_k
            let got = ops.x_rel(i).commutator(&ops.x_rel(j));
            let want = eps_osc(i, j, &ih.mul(&kappa_rel));
            report.push(RelationCheck::expect_equal(
                format!("[Xr_{i}, Xr_{j}] = i hbar kappa_rel eps ã"),
                &fixup(&got),
                &fixup(&want),
            ));

            // [X^c_i, X^r_j]: zero under the ring relation, residual otherwise
            let got = fixup(&ops.x_com(i).commutator(&ops.x_rel(j)));
            if impose_proportionality {
                report.push(RelationCheck::expect_zero(
                    format!("[Xc_{i}, Xr_{j}] = 0"),
                    &got,
                ));
            } else {
                let residual_scale = ih.mul(&mu2.mul(&k2).sub(&mu1.mul(&k1)));
                let want = eps_osc(i, j, &residual_scale);
                report.push(RelationCheck::expect_equal(
                    format!("[Xc_{i}, Xr_{j}] = (i hbar/M)(m2 k2 - m1 k1) eps ã"),
                    &got,
                    &want,
                ));
            }

            // canonical pairs
            let got = ops.x_com(i).commutator(&ops.p_com(j));
            let want = if i == j {
                OperatorExpr::scalar(ih.clone())
            } else {
                OperatorExpr::zero()
            };
            report.push(RelationCheck::expect_equal(
                format!("[Xc_{i}, Pc_{j}] = i hbar delta"),
                &got,
                &want,
            ));

            let got = ops.x_rel(i).commutator(&ops.p_rel(j));
            let want = if i == j {
                OperatorExpr::scalar(ih.clone())
            } else {
                OperatorExpr::zero()
            };
            report.push(RelationCheck::expect_equal(
                format!("[Xr_{i}, Pr_{j}] = i hbar delta"),
                &got,
                &want,
            ));

            let got = ops.p_com(i).commutator(&ops.p_rel(j));
            report.push(RelationCheck::expect_zero(
                format!("[Pc_{i}, Pr_{j}] = 0"),
                &got,
            ));
        }
    }
    report
}

/// The total momentum commutes with every ingredient of the relative-motion
/// Hamiltonian: [P^c, X^r] = 0, [P^c, (X^r)²] = 0, [P^c, P^r] = 0 and the
/// oscillator terms. For polynomial functions of (X^r)² this implies
/// [P^c, V(|X^r|)] = 0.
pub fn verify_momentum_conservation(sys: &TwoParticleSystem) -> VerificationReport {
    let ops = CompositeOps::new(sys.p1.mass, sys.p2.mass);
    let mut report = VerificationReport::new("total momentum conservation");

    let mut xr_sq = OperatorExpr::zero();
    for i in 1..=3u8 {
        let xi = ops.x_rel(i);
        xr_sq = xr_sq.add(&xi.mul(&xi));
    }
    let mut osc = OperatorExpr::zero();
    for i in 1..=3u8 {
        osc = osc.add(&osc_pos(i).mul(&osc_pos(i)));
        osc = osc.add(&osc_mom(i).mul(&osc_mom(i)));
    }

    for i in 1..=3u8 {
        let pc = ops.p_com(i);
        for j in 1..=3u8 {
            report.push(RelationCheck::expect_zero(
                format!("[Pc_{i}, Xr_{j}] = 0"),
                &pc.commutator(&ops.x_rel(j)),
            ));
            report.push(RelationCheck::expect_zero(
                format!("[Pc_{i}, Pr_{j}] = 0"),
                &pc.commutator(&ops.p_rel(j)),
            ));
        }
        report.push(RelationCheck::expect_zero(
            format!("[Pc_{i}, (Xr)^2] = 0"),
            &pc.commutator(&xr_sq),
        ));
        report.push(RelationCheck::expect_zero(
            format!("[Pc_{i}, H_osc terms] = 0"),
            &pc.commutator(&osc),
        ));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(m1: f64, m2: f64, g: f64) -> TwoParticleSystem {
        TwoParticleSystem::new(
            ParticleSpec::new(m1, g).unwrap(),
            ParticleSpec::new(m2, g).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn equal_mass_reduction() {
        // m1 = m2, κ1 = κ2 = κ: com scale κ/2, relative scale 2κ
        let s = sys(2.0, 2.0, 3.0);
        let kappa = s.p1.kappa();
        assert!((effective_theta_com(&s) - kappa / 2.0).abs() < 1e-15);
        assert!((effective_theta_rel(&s) - 2.0 * kappa).abs() < 1e-15);
    }

    #[test]
    fn unit_constant_masses_one_three() {
        let s = sys(1.0, 3.0, 1.0);
        assert!((effective_theta_com(&s) - 0.25).abs() < 1e-15);
        assert!((effective_theta_rel(&s) - 4.0 / 3.0).abs() < 1e-14);
    }

    #[test]
    fn heavy_partner_limit() {
        let s = sys(1.0, 1e12, 1.0);
        assert!(effective_theta_com(&s) < 2e-12);
    }

    #[test]
    fn zero_constant_gives_zero_tensors() {
        let s = sys(1.0, 2.0, 0.0);
        assert_eq!(effective_theta_com(&s), 0.0);
        assert_eq!(effective_theta_rel(&s), 0.0);
    }

    #[test]
    fn universal_product_identity() {
        // κ_com · M = κ_rel · μ = γ̃ for any masses
        for (m1, m2) in [(1.0, 1.0), (1.0, 3.0), (0.5, 7.25), (2.0, 1836.15267343)] {
            let s = sys(m1, m2, 1.7);
            let lhs = effective_theta_com(&s) * s.total_mass;
            let rhs = effective_theta_rel(&s) * s.reduced_mass;
            assert!((lhs - 1.7).abs() < 1e-12, "com side {lhs}");
            assert!((rhs - 1.7).abs() < 1e-12, "rel side {rhs}");
        }
    }

    #[test]
    fn com_rel_algebra_passes_with_proportionality() {
        let s = sys(1.0, 3.0, 1.0);
        let report = verify_com_rel_algebra(&s, true);
        assert!(report.all_passed(), "{:?}", report.first_failure());
    }

    #[test]
    fn cross_commutator_residual_without_proportionality() {
        let s = sys(1.0, 3.0, 1.0);
        let report = verify_com_rel_algebra(&s, false);
        // with independent kappas, every relation including the stated
        // residual form must still match
        assert!(report.all_passed(), "{:?}", report.first_failure());
        // and the residual really is nonzero as an operator
        let ops = CompositeOps::new(1.0, 3.0);
        let cross = ops.x_com(1).commutator(&ops.x_rel(2));
        assert!(!cross.is_zero());
    }

    #[test]
    fn commutative_limit_all_canonical() {
        let s = sys(1.0, 3.0, 0.0);
        // kappa symbols still appear symbolically; substituting zero reduces
        // every coordinate commutator to the canonical one
        let ops = CompositeOps::new(s.p1.mass, s.p2.mass);
        let zero = ScalarCoeff::zero();
        let xc = ops
            .x_com(1)
            .substitute_param(Param::Kappa(1), &zero)
            .substitute_param(Param::Kappa(2), &zero);
        let xr = ops
            .x_rel(2)
            .substitute_param(Param::Kappa(1), &zero)
            .substitute_param(Param::Kappa(2), &zero);
        assert!(xc.commutator(&xr).is_zero());
    }

    #[test]
    fn momentum_conservation_suite() {
        let s = sys(1.0, 1836.15267343, 1.0);
        let report = verify_momentum_conservation(&s);
        assert!(report.all_passed(), "{:?}", report.first_failure());
    }
}
