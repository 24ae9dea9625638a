//! Exact scalar coefficients: complex rationals times monomials in the
//! symbolic parameters (ħ and the per-particle noncommutativity scales κ).
//!
//! All arithmetic is exact; zero terms are removed eagerly so that equal
//! coefficients have identical representations.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A symbolic parameter of the coefficient ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    /// Planck's constant ħ.
    Hbar,
    /// κ_n, the scalar in θ⁽ⁿ⁾_ij = κ_n ε_ijk ã_k for particle `n`.
    Kappa(u32),
    /// κ_μ, the effective scale for the relative motion.
    KappaRel,
    /// κ_c, the effective scale for the center of mass.
    KappaCom,
    /// The universal product γ̃ l_P² m_P / ħ (one symbol; masses are numeric).
    Universal,
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Hbar => write!(f, "hbar"),
            Param::Kappa(n) => write!(f, "kappa{n}"),
            Param::KappaRel => write!(f, "kappa_mu"),
            Param::KappaCom => write!(f, "kappa_c"),
            Param::Universal => write!(f, "g"),
        }
    }
}

/// A sorted product of parameter powers, e.g. `hbar^2 kappa1`.
pub type ParamMono = Vec<(Param, u32)>;

type CRational = Complex<BigRational>;

fn crat_zero() -> CRational {
    Complex::new(BigRational::zero(), BigRational::zero())
}

fn crat_from_i64(re: i64, im: i64) -> CRational {
    Complex::new(
        BigRational::from_integer(BigInt::from(re)),
        BigRational::from_integer(BigInt::from(im)),
    )
}

/// Exact polynomial in the symbolic parameters with complex-rational
/// coefficients. The zero polynomial is the empty map.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ScalarCoeff {
    terms: BTreeMap<ParamMono, CRational>,
}

impl ScalarCoeff {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self::constant(crat_from_i64(0, 1))
    }

    pub fn from_int(v: i64) -> Self {
        Self::constant(crat_from_i64(v, 0))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::constant(Complex::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        ))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::constant(Complex::new(r, BigRational::zero()))
    }

    fn constant(c: CRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Self { terms }
    }

    /// The bare symbol `p`.
    pub fn param(p: Param) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![(p, 1)], crat_from_i64(1, 0));
        Self { terms }
    }

    pub fn hbar() -> Self {
        Self::param(Param::Hbar)
    }

    /// iħ, the ubiquitous commutator prefactor.
    pub fn i_hbar() -> Self {
        Self::i().mul(&Self::hbar())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Vec::new())
                .map(|c| c.re.is_one() && c.im.is_zero())
                .unwrap_or(false)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert_with(crat_zero);
            *entry = entry.clone() + c.clone();
            if entry.is_zero() {
                terms.remove(m);
            }
        }
        Self { terms }
    }

    pub fn neg(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), -c.clone()))
            .collect();
        Self { terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut terms: BTreeMap<ParamMono, CRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = mono_mul(ma, mb);
                let c = ca.clone() * cb.clone();
                let entry = terms.entry(m).or_insert_with(crat_zero);
                *entry = entry.clone() + c;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Self { terms }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Replace every occurrence of `p` by `replacement` (raised to the stored
    /// power). Used to impose ring relations such as κ_n = g/m_n.
    pub fn substitute(&self, p: Param, replacement: &Self) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut rest: ParamMono = Vec::new();
            let mut power = 0;
            for &(q, e) in m {
                if q == p {
                    power = e;
                } else {
                    rest.push((q, e));
                }
            }
            let mut term = Self {
                terms: BTreeMap::from([(rest, c.clone())]),
            };
            if power > 0 {
                term = term.mul(&replacement.pow(power));
            }
            out = out.add(&term);
        }
        out
    }

    /// The coefficient polynomial of `p^power` (with `p` removed).
    pub fn coeff_of(&self, p: Param, power: u32) -> Self {
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut rest: ParamMono = Vec::new();
            let mut found = 0;
            for &(q, e) in m {
                if q == p {
                    found = e;
                } else {
                    rest.push((q, e));
                }
            }
            if found == power {
                terms.insert(rest, c.clone());
            }
        }
        Self { terms }
    }
}

fn mono_mul(a: &ParamMono, b: &ParamMono) -> ParamMono {
    let mut out: BTreeMap<Param, u32> = BTreeMap::new();
    for &(p, e) in a.iter().chain(b.iter()) {
        *out.entry(p).or_insert(0) += e;
    }
    out.into_iter().collect()
}

fn fmt_rational(r: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if r.is_integer() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for ScalarCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "(")?;
            fmt_rational(&c.re, f)?;
            if !c.im.is_zero() {
                write!(f, "{}", if c.im.is_negative() { "-" } else { "+" })?;
                let im = if c.im.is_negative() {
                    -c.im.clone()
                } else {
                    c.im.clone()
                };
                fmt_rational(&im, f)?;
                write!(f, "i")?;
            }
            write!(f, ")")?;
            for (p, e) in m {
                if *e == 1 {
                    write!(f, " {p}")?;
                } else {
                    write!(f, " {p}^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn i_squared_is_minus_one() {
        let i = ScalarCoeff::i();
        assert_eq!(i.mul(&i), ScalarCoeff::from_int(-1));
    }

    #[test]
    fn zero_terms_are_removed() {
        let a = ScalarCoeff::param(Param::Kappa(1));
        let s = a.sub(&a);
        assert!(s.is_zero());
        assert_eq!(s, ScalarCoeff::zero());
    }

    #[test]
    fn substitution_imposes_ring_relation() {
        // kappa1 -> g/2, kappa2 -> g/3 makes 2*kappa1 - 3*kappa2 vanish
        let expr = ScalarCoeff::param(Param::Kappa(1))
            .mul(&ScalarCoeff::from_int(2))
            .sub(&ScalarCoeff::param(Param::Kappa(2)).mul(&ScalarCoeff::from_int(3)));
        let g = ScalarCoeff::param(Param::Universal);
        let out = expr
            .substitute(Param::Kappa(1), &g.mul(&ScalarCoeff::from_ratio(1, 2)))
            .substitute(Param::Kappa(2), &g.mul(&ScalarCoeff::from_ratio(1, 3)));
        assert!(out.is_zero());
    }

    #[test]
    fn coeff_extraction() {
        // hbar * kappa1^2 + 3 kappa1 : coefficient of kappa1^2 is hbar
        let k = ScalarCoeff::param(Param::Kappa(1));
        let expr = ScalarCoeff::hbar()
            .mul(&k.pow(2))
            .add(&k.mul(&ScalarCoeff::from_int(3)));
        assert_eq!(expr.coeff_of(Param::Kappa(1), 2), ScalarCoeff::hbar());
        assert_eq!(expr.coeff_of(Param::Kappa(1), 1), ScalarCoeff::from_int(3));
    }
}
