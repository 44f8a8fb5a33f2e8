//! Exact multivariate polynomial arithmetic over the rationals.
//!
//! Polynomials are sparse maps from exponent vectors to nonzero rational
//! coefficients; the zero polynomial is the empty map. [`HPolynomial`] adds
//! an auxiliary homogenisation variable `t` in front of the `x`-variables.

use crate::error::{Error, Result};
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

pub type Int = num_bigint::BigInt;
pub type Rat = num_rational::BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational `n/d` in lowest terms (`d` must be nonzero).
pub fn ratio(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Exponent vector of a monomial, one entry per variable.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExpVec(pub Vec<u32>);

impl ExpVec {
    pub fn new(exps: Vec<u32>) -> Self {
        ExpVec(exps)
    }

    pub fn zero(n_vars: usize) -> Self {
        ExpVec(vec![0; n_vars])
    }

    /// Exponent vector of the variable `x_i`.
    pub fn unit(n_vars: usize, i: usize) -> Self {
        let mut e = vec![0; n_vars];
        e[i] = 1;
        ExpVec(e)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn add(&self, other: &ExpVec) -> ExpVec {
        ExpVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Componentwise difference, `None` unless `other` divides `self`.
    pub fn checked_sub(&self, other: &ExpVec) -> Option<ExpVec> {
        if !other.divides(self) {
            return None;
        }
        Some(ExpVec(
            self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect(),
        ))
    }

    pub fn divides(&self, other: &ExpVec) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise maximum (exponent vector of the monomial lcm).
    pub fn lcm(&self, other: &ExpVec) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    /// Componentwise minimum (exponent vector of the monomial gcd).
    pub fn gcd(&self, other: &ExpVec) -> ExpVec {
        ExpVec(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }
}

/// Nonzero coefficient together with its monomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Term {
    pub coeff: Rat,
    pub monomial: ExpVec,
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Invariants: no stored zero coefficients; all keys have length `n_vars`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Polynomial {
    n_vars: usize,
    terms: BTreeMap<ExpVec, Rat>,
}

impl Polynomial {
    pub fn zero(n_vars: usize) -> Self {
        Polynomial {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n_vars: usize, c: Rat) -> Self {
        Self::from_terms(n_vars, [(ExpVec::zero(n_vars), c)])
    }

    /// Single-term polynomial `c * x^m`.
    pub fn term(n_vars: usize, m: ExpVec, c: Rat) -> Self {
        Self::from_terms(n_vars, [(m, c)])
    }

    /// Builds a polynomial, merging duplicate monomials and dropping zeros.
    pub fn from_terms(n_vars: usize, terms: impl IntoIterator<Item = (ExpVec, Rat)>) -> Self {
        let mut p = Polynomial::zero(n_vars);
        for (m, c) in terms {
            assert_eq!(m.len(), n_vars, "exponent vector has wrong length");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: ExpVec, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &Rat)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExpVec> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &ExpVec) -> Option<&Rat> {
        self.terms.get(m)
    }

    /// Maximal total degree of a monomial, `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    fn check_compat(&self, other: &Polynomial) -> Result<()> {
        if self.n_vars != other.n_vars {
            return Err(Error::VariableMismatch {
                left: self.n_vars,
                right: other.n_vars,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compat(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_compat(other)?;
        let mut out = Polynomial::zero(self.n_vars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.add(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn negated(&self) -> Polynomial {
        Polynomial {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    /// Multiplies by the scalar `c` (result is zero if `c` is zero).
    pub fn scale(&self, c: &Rat) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n_vars);
        }
        Polynomial {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k * c))
                .collect(),
        }
    }

    /// Multiplies by the term `c * x^m`.
    pub fn mul_term(&self, c: &Rat, m: &ExpVec) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n_vars);
        }
        Polynomial {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.add(m), v * c))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &ExpVec) -> Polynomial {
        self.mul_term(&Rat::one(), m)
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn derivative(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(self.n_vars);
        for (m, c) in &self.terms {
            let e = m.get(var);
            if e == 0 {
                continue;
            }
            let mut d = m.clone();
            d.0[var] = e - 1;
            out.add_term(d, c * rat(e as i64));
        }
        out
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("variable counts differ")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("variable counts differ")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("variable counts differ")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.negated()
    }
}

/// Monomial of `K[t, x]`: t-exponent followed by the x-part.
pub type HMon = (u32, ExpVec);

/// Sparse polynomial in `K[t, x]`.
///
/// Invariant: no stored zero coefficients. Homogeneity (all keys sharing the
/// same total degree `t + |x|`) is a property of how values are produced, not
/// of the container; see [`HPolynomial::is_homogeneous`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HPolynomial {
    n_vars: usize,
    terms: BTreeMap<HMon, Rat>,
}

impl HPolynomial {
    pub fn zero(n_vars: usize) -> Self {
        HPolynomial {
            n_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms(n_vars: usize, terms: impl IntoIterator<Item = (HMon, Rat)>) -> Self {
        let mut p = HPolynomial::zero(n_vars);
        for (m, c) in terms {
            assert_eq!(m.1.len(), n_vars, "exponent vector has wrong length");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: HMon, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Homogenisation `f^h`: each monomial `x^a` of `f` becomes
    /// `t^(deg f - |a|) x^a`.
    pub fn homogenize(f: &Polynomial) -> Result<HPolynomial> {
        let deg = f.total_degree().ok_or(Error::ZeroPolynomial)?;
        Ok(HPolynomial {
            n_vars: f.n_vars(),
            terms: f
                .terms()
                .map(|(m, c)| (((deg - m.degree()) as u32, m.clone()), c.clone()))
                .collect(),
        })
    }

    /// Sets `t = 1` and combines like terms.
    pub fn dehomogenize(&self) -> Polynomial {
        let mut out = Polynomial::zero(self.n_vars);
        for ((_, m), c) in &self.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Divides by the maximal power of `t`; errors on the zero polynomial.
    pub fn strip_t_powers(&self) -> Result<HPolynomial> {
        let a = self
            .terms
            .keys()
            .map(|(t, _)| *t)
            .min()
            .ok_or(Error::ZeroPolynomial)?;
        if a == 0 {
            return Ok(self.clone());
        }
        Ok(HPolynomial {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|((t, m), c)| ((t - a, m.clone()), c.clone()))
                .collect(),
        })
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|(t, m)| *t as u64 + m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Common total degree of a homogeneous polynomial.
    pub fn homogeneous_degree(&self) -> Option<u64> {
        self.terms.keys().next().map(|(t, m)| *t as u64 + m.degree())
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HMon, &Rat)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &HMon) -> Option<&Rat> {
        self.terms.get(m)
    }

    pub fn try_sub(&self, other: &HPolynomial) -> Result<HPolynomial> {
        if self.n_vars != other.n_vars {
            return Err(Error::VariableMismatch {
                left: self.n_vars,
                right: other.n_vars,
            });
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    /// Multiplies by the term `c * t^te * x^xs`.
    pub fn mul_hterm(&self, c: &Rat, te: u32, xs: &ExpVec) -> HPolynomial {
        if c.is_zero() {
            return HPolynomial::zero(self.n_vars);
        }
        HPolynomial {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|((t, m), v)| ((t + te, m.add(xs)), v * c))
                .collect(),
        }
    }

    /// Multiplies by `t^a`.
    pub fn t_shift(&self, a: u32) -> HPolynomial {
        if a == 0 {
            return self.clone();
        }
        HPolynomial {
            n_vars: self.n_vars,
            terms: self
                .terms
                .iter()
                .map(|((t, m), v)| ((t + a, m.clone()), v.clone()))
                .collect(),
        }
    }
}

/// Removes monomials divisible by another member; the unique minimal
/// generating set of the monomial ideal spanned by `mons`.
pub fn minimal_monomial_generators(mons: &[ExpVec]) -> Vec<ExpVec> {
    let mut sorted: Vec<&ExpVec> = mons.iter().collect();
    sorted.sort_by_key(|m| (m.degree(), (*m).clone()));
    sorted.dedup();
    let mut out: Vec<ExpVec> = Vec::new();
    for m in sorted {
        if !out.iter().any(|g| g.divides(m)) {
            out.push(m.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev(e: &[u32]) -> ExpVec {
        ExpVec::new(e.to_vec())
    }

    fn poly(n: usize, terms: &[(&[u32], i64)]) -> Polynomial {
        Polynomial::from_terms(n, terms.iter().map(|(m, c)| (ev(m), rat(*c))))
    }

    #[test]
    fn cancellation_and_identities() {
        // (x + y) + (-y) = x
        let sum = &poly(2, &[(&[1, 0], 1), (&[0, 1], 1)]) + &poly(2, &[(&[0, 1], -1)]);
        assert_eq!(sum, poly(2, &[(&[1, 0], 1)]));
        // (x + y)(x - y) = x^2 - y^2
        let prod = &poly(2, &[(&[1, 0], 1), (&[0, 1], 1)])
            * &poly(2, &[(&[1, 0], 1), (&[0, 1], -1)]);
        assert_eq!(prod, poly(2, &[(&[2, 0], 1), (&[0, 2], -1)]));
    }

    #[test]
    fn monomial_lcm_gcd() {
        let a = ev(&[2, 1]);
        let b = ev(&[1, 3]);
        assert_eq!(a.lcm(&b), ev(&[2, 3]));
        assert_eq!(a.gcd(&b), ev(&[1, 1]));
    }

    #[test]
    fn variable_mismatch_is_an_error() {
        let a = poly(2, &[(&[1, 0], 1)]);
        let b = poly(3, &[(&[1, 0, 0], 1)]);
        assert!(a.try_add(&b).is_err());
        assert!(a.try_mul(&b).is_err());
    }

    #[test]
    fn homogenize_examples() {
        // x + x^3 -> t^2 x + x^3
        let f = poly(1, &[(&[1], 1), (&[3], 1)]);
        let h = HPolynomial::homogenize(&f).unwrap();
        assert_eq!(
            h,
            HPolynomial::from_terms(1, [((2, ev(&[1])), rat(1)), ((0, ev(&[3])), rat(1))])
        );
        // constants have degree 0
        let one = poly(1, &[(&[0], 1)]);
        let h1 = HPolynomial::homogenize(&one).unwrap();
        assert_eq!(h1.homogeneous_degree(), Some(0));
        // x^2 y + y -> x^2 y + t^2 y
        let g = poly(2, &[(&[2, 1], 1), (&[0, 1], 1)]);
        let hg = HPolynomial::homogenize(&g).unwrap();
        assert_eq!(
            hg,
            HPolynomial::from_terms(
                2,
                [((0, ev(&[2, 1])), rat(1)), ((2, ev(&[0, 1])), rat(1))]
            )
        );
        assert!(hg.is_homogeneous());
        assert!(HPolynomial::homogenize(&Polynomial::zero(2)).is_err());
    }

    #[test]
    fn dehomogenize_examples() {
        // t^2 x + x^3 -> x + x^3
        let h = HPolynomial::from_terms(1, [((2, ev(&[1])), rat(1)), ((0, ev(&[3])), rat(1))]);
        assert_eq!(h.dehomogenize(), poly(1, &[(&[1], 1), (&[3], 1)]));
        // t x - x -> 0
        let h = HPolynomial::from_terms(1, [((1, ev(&[1])), rat(1)), ((0, ev(&[1])), rat(-1))]);
        assert!(h.dehomogenize().is_zero());
        // t^5 -> 1
        let h = HPolynomial::from_terms(1, [((5, ev(&[0])), rat(1))]);
        assert_eq!(h.dehomogenize(), poly(1, &[(&[0], 1)]));
    }

    #[test]
    fn strip_t_examples() {
        // t^2 x + t^3 y -> x + t y
        let h = HPolynomial::from_terms(
            2,
            [((2, ev(&[1, 0])), rat(1)), ((3, ev(&[0, 1])), rat(1))],
        );
        assert_eq!(
            h.strip_t_powers().unwrap(),
            HPolynomial::from_terms(
                2,
                [((0, ev(&[1, 0])), rat(1)), ((1, ev(&[0, 1])), rat(1))]
            )
        );
        // already stripped
        let h = HPolynomial::from_terms(
            2,
            [((0, ev(&[1, 0])), rat(1)), ((0, ev(&[0, 1])), rat(1))],
        );
        assert_eq!(h.strip_t_powers().unwrap(), h);
        // t^4 x^2 -> x^2
        let h = HPolynomial::from_terms(2, [((4, ev(&[2, 0])), rat(1))]);
        assert_eq!(
            h.strip_t_powers().unwrap(),
            HPolynomial::from_terms(2, [((0, ev(&[2, 0])), rat(1))])
        );
        assert!(HPolynomial::zero(2).strip_t_powers().is_err());
    }

    #[test]
    fn derivative_is_exact() {
        // d/dx (x^2 y + 3 x) = 2 x y + 3
        let f = poly(2, &[(&[2, 1], 1), (&[1, 0], 3)]);
        assert_eq!(f.derivative(0), poly(2, &[(&[1, 1], 2), (&[0, 0], 3)]));
        assert!(poly(2, &[(&[0, 0], 5)]).derivative(1).is_zero());
    }

    #[test]
    fn minimal_generators() {
        let gens = minimal_monomial_generators(&[ev(&[2, 0]), ev(&[2, 1]), ev(&[0, 3]), ev(&[1, 3])]);
        assert_eq!(gens, vec![ev(&[2, 0]), ev(&[0, 3])]);
    }

    // Random small polynomials: ring axioms hold exactly and no operation
    // leaves a stored zero coefficient behind.
    #[test]
    fn ring_axioms_on_random_inputs() {
        use rand::{rngs::StdRng, Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(42);
        let n = 2;
        let mut random_poly = |rng: &mut StdRng| {
            let k = rng.gen_range(0..5);
            Polynomial::from_terms(
                n,
                (0..k).map(|_| {
                    (
                        ExpVec::new((0..n).map(|_| rng.gen_range(0..4)).collect()),
                        rat(rng.gen_range(-3..=3)),
                    )
                }),
            )
        };
        for _ in 0..200 {
            let a = random_poly(&mut rng);
            let b = random_poly(&mut rng);
            let c = random_poly(&mut rng);
            let assoc_l = &(&a * &b) * &c;
            let assoc_r = &a * &(&b * &c);
            assert_eq!(assoc_l, assoc_r);
            let dist_l = &a * &(&b + &c);
            let dist_r = &(&a * &b) + &(&a * &c);
            assert_eq!(dist_l, dist_r);
            for p in [&assoc_l, &dist_l, &(&a - &b)] {
                assert!(p.terms().all(|(_, c)| !c.is_zero()));
            }
            // homogenise/dehomogenise round trip on nonzero polynomials
            if !a.is_zero() {
                let h = HPolynomial::homogenize(&a).unwrap();
                assert!(h.is_homogeneous());
                assert_eq!(h.dehomogenize(), a);
            }
            // product of homogeneous polynomials is homogeneous of the sum degree
            if !a.is_zero() && !b.is_zero() {
                let ha = HPolynomial::homogenize(&a).unwrap();
                let hb = HPolynomial::homogenize(&b).unwrap();
                let mut prod = HPolynomial::zero(n);
                for ((t1, m1), c1) in ha.terms() {
                    for ((t2, m2), c2) in hb.terms() {
                        prod.add_term((t1 + t2, m1.add(m2)), c1 * c2);
                    }
                }
                assert!(prod.is_homogeneous());
                if !prod.is_zero() {
                    assert_eq!(
                        prod.homogeneous_degree(),
                        Some(a.total_degree().unwrap() + b.total_degree().unwrap())
                    );
                }
            }
        }
    }
}
