//! Exact symbolic calculus over the canonical generators.
//!
//! Operators are stored as linear combinations of normal-ordered monomials in
//! the generators x, p, ã, p̃ᵃ with [`ScalarCoeff`] coefficients. Normal order
//! is the fixed global order x < p < ã < p̃ᵃ (then by particle, then axis), so
//! two equal operators always have identical maps and equality is a map
//! comparison.

mod build;

pub use build::{
    jacobi, momentum, nc_coordinate, nc_momentum, osc_mom, osc_pos, position, theta_tensor,
    total_angular_momentum, total_angular_momentum_nc, xr_squared_difference, ParticleTable,
};

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::coeff::{Param, ScalarCoeff};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unknown particle label {0}")]
    UnknownParticle(u32),
    #[error("axis must be 1, 2 or 3, got {0}")]
    BadAxis(u8),
}

/// Generator kinds in normal-order precedence: x < p < ã < p̃ᵃ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKind {
    Pos,
    Mom,
    OscPos,
    OscMom,
}

/// One canonical generator. Particle labels are carried by x and p only;
/// the oscillator pair ã, p̃ᵃ is shared by all particles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    kind: GenKind,
    particle: Option<u32>,
    axis: u8,
}

impl Generator {
    pub fn pos(particle: u32, axis: u8) -> Self {
        assert!((1..=3).contains(&axis), "axis out of range");
        Self {
            kind: GenKind::Pos,
            particle: Some(particle),
            axis,
        }
    }

    pub fn mom(particle: u32, axis: u8) -> Self {
        assert!((1..=3).contains(&axis), "axis out of range");
        Self {
            kind: GenKind::Mom,
            particle: Some(particle),
            axis,
        }
    }

    pub fn osc_pos(axis: u8) -> Self {
        assert!((1..=3).contains(&axis), "axis out of range");
        Self {
            kind: GenKind::OscPos,
            particle: None,
            axis,
        }
    }

    pub fn osc_mom(axis: u8) -> Self {
        assert!((1..=3).contains(&axis), "axis out of range");
        Self {
            kind: GenKind::OscMom,
            particle: None,
            axis,
        }
    }

    pub fn kind(&self) -> GenKind {
        self.kind
    }

    pub fn axis(&self) -> u8 {
        self.axis
    }

    /// Scalar commutator [self, other]; zero unless the pair is canonical.
    fn commutator_scalar(&self, other: &Generator) -> ScalarCoeff {
        match (self.kind, other.kind) {
            (GenKind::Pos, GenKind::Mom) => {
                if self.particle == other.particle && self.axis == other.axis {
                    ScalarCoeff::i_hbar()
                } else {
                    ScalarCoeff::zero()
                }
            }
            (GenKind::Mom, GenKind::Pos) => other.commutator_scalar(self).neg(),
            // the oscillator pair is dimensionless: [ã_i, p̃ᵃ_j] = i δ_ij
            (GenKind::OscPos, GenKind::OscMom) => {
                if self.axis == other.axis {
                    ScalarCoeff::i()
                } else {
                    ScalarCoeff::zero()
                }
            }
            (GenKind::OscMom, GenKind::OscPos) => other.commutator_scalar(self).neg(),
            _ => ScalarCoeff::zero(),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self.kind {
            GenKind::Pos => "x",
            GenKind::Mom => "p",
            GenKind::OscPos => "at",
            GenKind::OscMom => "pt",
        };
        match self.particle {
            Some(n) => write!(f, "{name}({n}){}", self.axis),
            None => write!(f, "{name}{}", self.axis),
        }
    }
}

/// A normal-ordered product of generator powers (sorted, exponents ≥ 1).
/// The empty monomial is the identity operator.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<(Generator, u32)>);

impl Monomial {
    fn from_sorted_word(word: &[Generator]) -> Self {
        let mut out: Vec<(Generator, u32)> = Vec::new();
        for &g in word {
            match out.last_mut() {
                Some((last, e)) if *last == g => *e += 1,
                _ => out.push((g, 1)),
            }
        }
        Monomial(out)
    }

    fn to_word(&self) -> Vec<Generator> {
        let mut w = Vec::new();
        for &(g, e) in &self.0 {
            for _ in 0..e {
                w.push(g);
            }
        }
        w
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for (g, e) in &self.0 {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// An operator as a unique normal-ordered expansion.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct OperatorExpr {
    terms: BTreeMap<Monomial, ScalarCoeff>,
}

impl OperatorExpr {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The identity operator scaled by `c`.
    pub fn scalar(c: ScalarCoeff) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::default(), c);
        }
        Self { terms }
    }

    pub fn one() -> Self {
        Self::scalar(ScalarCoeff::one())
    }

    /// A single generator with unit coefficient.
    pub fn generator(g: Generator) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![(g, 1)]), ScalarCoeff::one());
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            match terms.get_mut(m) {
                Some(e) => {
                    *e = e.add(c);
                    if e.is_zero() {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c.clone());
                }
            }
        }
        Self { terms }
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c.neg()))
            .collect();
        Self { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &ScalarCoeff) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, k)| (m.clone(), k.mul(c)))
            .collect();
        Self { terms }
    }

    /// Normal-ordered product. Total function; exact coefficients.
    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (ma, ca) in &self.terms {
            let wa = ma.to_word();
            for (mb, cb) in &other.terms {
                let mut word = wa.clone();
                word.extend(mb.to_word());
                out = out.add(&normalize_word(&word, ca.mul(cb)));
            }
        }
        out
    }

    /// AB − BA, normal-ordered.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul(other).sub(&other.mul(self))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitute a symbolic parameter inside every coefficient.
    pub fn substitute_param(&self, p: Param, replacement: &ScalarCoeff) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let c = c.substitute(p, replacement);
            if !c.is_zero() {
                terms.insert(m.clone(), c);
            }
        }
        Self { terms }
    }

    /// Collect the operator multiplying `p^power` across all coefficients.
    pub fn coeff_of_param(&self, p: Param, power: u32) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let c = c.coeff_of(p, power);
            if !c.is_zero() {
                terms.insert(m.clone(), c);
            }
        }
        Self { terms }
    }

    /// Deterministic debug dump: one monomial per line, `coeff * gens`.
    pub fn dump(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (m, c) in &self.terms {
            out.push_str(&format!("{c} * {m}\n"));
        }
        out
    }
}

impl fmt::Display for OperatorExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.dump().trim_end())
    }
}

/// Rewrite an arbitrary generator word into normal order using the canonical
/// relations. Every swap of an out-of-order adjacent pair produces the swapped
/// word plus a shorter word weighted by the scalar commutator, so the
/// rewriting terminates with exact coefficients.
fn normalize_word(word: &[Generator], coeff: ScalarCoeff) -> OperatorExpr {
    if coeff.is_zero() {
        return OperatorExpr::zero();
    }
    let mut result = OperatorExpr::zero();
    let mut stack: Vec<(Vec<Generator>, ScalarCoeff)> = vec![(word.to_vec(), coeff)];
    while let Some((w, c)) = stack.pop() {
        match first_inversion(&w) {
            None => {
                let m = Monomial::from_sorted_word(&w);
                result = result.add(&OperatorExpr {
                    terms: BTreeMap::from([(m, c)]),
                });
            }
            Some(k) => {
                // w[k] w[k+1] = w[k+1] w[k] + [w[k], w[k+1]]
                let mut swapped = w.clone();
                swapped.swap(k, k + 1);
                let comm = w[k].commutator_scalar(&w[k + 1]);
                if !comm.is_zero() {
                    let mut shorter = w.clone();
                    shorter.drain(k..k + 2);
                    stack.push((shorter, c.mul(&comm)));
                }
                stack.push((swapped, c));
            }
        }
    }
    result
}

fn first_inversion(w: &[Generator]) -> Option<usize> {
    (0..w.len().saturating_sub(1)).find(|&k| w[k] > w[k + 1])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(axis: u8) -> OperatorExpr {
        OperatorExpr::generator(Generator::pos(1, axis))
    }

    fn p(axis: u8) -> OperatorExpr {
        OperatorExpr::generator(Generator::mom(1, axis))
    }

    fn at(axis: u8) -> OperatorExpr {
        OperatorExpr::generator(Generator::osc_pos(axis))
    }

    fn pt(axis: u8) -> OperatorExpr {
        OperatorExpr::generator(Generator::osc_mom(axis))
    }

    #[test]
    fn multiply_swaps_one_canonical_pair() {
        // p1 * x1 = x1 p1 - i hbar
        let got = p(1).mul(&x(1));
        let want = x(1).mul(&p(1)).sub(&OperatorExpr::scalar(ScalarCoeff::i_hbar()));
        assert_eq!(got, want);
    }

    #[test]
    fn commuting_generators_multiply_freely() {
        assert_eq!(x(1).mul(&x(2)), x(2).mul(&x(1)));
    }

    #[test]
    fn repeated_oscillator_reordering() {
        // at3 * (pt3 pt3) = pt3 pt3 at3 + 2i pt3
        let got = at(3).mul(&pt(3).mul(&pt(3)));
        let want = pt(3)
            .mul(&pt(3))
            .mul(&at(3))
            .add(&pt(3).scale(&ScalarCoeff::i().mul(&ScalarCoeff::from_int(2))));
        assert_eq!(got, want);
    }

    #[test]
    fn oscillator_reordering_matches_brute_force() {
        // oracle: expand at3 * pt3^n by repeated single swaps done by hand
        // for n = 1: pt at + i
        let got = at(3).mul(&pt(3));
        let want = pt(3).mul(&at(3)).add(&OperatorExpr::scalar(ScalarCoeff::i()));
        assert_eq!(got, want);
    }

    #[test]
    fn canonical_commutators() {
        let ih = OperatorExpr::scalar(ScalarCoeff::i_hbar());
        assert_eq!(x(1).commutator(&p(1)), ih);
        assert!(x(1).commutator(&p(2)).is_zero());
        assert!(x(1).commutator(&x(2)).is_zero());
        assert_eq!(at(2).commutator(&pt(2)), OperatorExpr::scalar(ScalarCoeff::i()));
        assert!(x(1).commutator(&at(1)).is_zero());
        assert!(p(1).commutator(&pt(1)).is_zero());
    }

    #[test]
    fn different_particles_commute() {
        let x1 = OperatorExpr::generator(Generator::pos(1, 1));
        let p2 = OperatorExpr::generator(Generator::mom(2, 1));
        assert!(x1.commutator(&p2).is_zero());
    }

    #[test]
    fn associativity_spot_check() {
        let a = x(1).mul(&p(1)).add(&at(3));
        let b = p(1).add(&pt(3).mul(&pt(3)));
        let c = x(1).add(&at(3).mul(&pt(3)));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn dump_is_deterministic() {
        let e = x(1).mul(&p(1)).add(&at(3));
        assert_eq!(e.dump(), e.clone().dump());
        assert!(e.dump().contains(" * "));
    }
}
