//! Dense univariate polynomials over the rationals and the finite-difference
//! calculus built on them.
//!
//! The deformation parameter ξ is turned into three derived polynomials:
//! the scaled density `∂^n(z^n ξ)`, its ∇₀-antiderivative, and the h-basis
//! coefficient polynomial `w`. All three are stored without the transcendental
//! `1/(2π^n)` prefactor, which cancels from every downstream quantity.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::rational::{half, int, rat, Rational};

/// Polynomial in one variable; `coeffs[k]` is the coefficient of `z^k`.
/// Trailing zeros are always trimmed, so the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// The identity polynomial `z`.
    pub fn z() -> Self {
        Poly::monomial(1, Rational::one())
    }

    pub fn monomial(k: usize, c: Rational) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, at: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * at + c)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Multiplies by `z^k`.
    pub fn shift_degree(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly::new(coeffs)
    }

    /// `f(z + c)`, by Horner's scheme in the ring of polynomials.
    pub fn translate(&self, c: &Rational) -> Poly {
        let step = Poly::new(vec![c.clone(), Rational::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Poly::zero(), |acc, a| &(&acc * &step) + &Poly::constant(a.clone()))
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * int(k as i64))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Poly {
        (0..n).fold(self.clone(), |p, _| p.derivative())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}·z")?,
                _ => write!(f, "{c}·z^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| -a).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Bernoulli numbers `B_0..=B_k` with the `B_1 = -1/2` convention, from
/// `Σ_{j=0}^{m} C(m+1, j) B_j = 0`.
fn bernoulli_numbers(k: usize) -> Vec<Rational> {
    let mut b = Vec::with_capacity(k + 1);
    b.push(Rational::one());
    for m in 1..=k {
        let s = (0..m).fold(Rational::zero(), |acc, j| {
            acc + Rational::from_integer(binomial(m + 1, j)) * &b[j]
        });
        b.push(-s / Rational::from_integer(BigInt::from(m + 1)));
    }
    b
}

/// The Bernoulli polynomial `B_k(z) = Σ_j C(k, j) B_j z^{k-j}`.
pub fn bernoulli(k: usize) -> Poly {
    let numbers = bernoulli_numbers(k);
    let mut coeffs = vec![Rational::zero(); k + 1];
    for (j, bj) in numbers.iter().enumerate() {
        coeffs[k - j] = Rational::from_integer(binomial(k, j)) * bj;
    }
    Poly::new(coeffs)
}

/// `∇_ε f(z) = f(z + ε) - f(z + ε - 1)`.
pub fn nabla(eps: &Rational, f: &Poly) -> Poly {
    &f.translate(eps) - &f.translate(&(eps - Rational::one()))
}

/// `∇_ε` applied `times` times.
pub fn nabla_pow(eps: &Rational, f: &Poly, times: usize) -> Poly {
    (0..times).fold(f.clone(), |acc, _| nabla(eps, &acc))
}

/// The unique `f` with `∇_ε f = p` and `f(0) = 0`, assembled from Bernoulli
/// polynomials as `Σ p_i/(i+1) · B_{i+1}(z + 1 - ε)`.
pub fn nabla_inverse(eps: &Rational, p: &Poly) -> Poly {
    let shift = Rational::one() - eps;
    let mut f = Poly::zero();
    for (i, pi) in p.coeffs().iter().enumerate() {
        if pi.is_zero() {
            continue;
        }
        let term = bernoulli(i + 1)
            .translate(&shift)
            .scale(&(pi / int(i as i64 + 1)));
        f = &f + &term;
    }
    let c0 = f.coeff(0);
    &f - &Poly::constant(c0)
}

/// `∂^n(z^n ξ(z))`, the π-free numerator of ξ̃; coefficient `m` is
/// `(m+n)!/m! · ξ_m`.
pub fn xi_to_xi_tilde(xi: &Poly, n: usize) -> Poly {
    assert!(n >= 1, "rank must be positive");
    xi.shift_degree(n).nth_derivative(n)
}

/// The π-free scaling of `f_ξ`: the antiderivative `g` with
/// `g(z) - g(z-1) = ∂^n(z^n ξ)` and `g(0) = 0`.
pub fn xi_to_f(xi: &Poly, n: usize) -> Poly {
    nabla_inverse(&Rational::zero(), &xi_to_xi_tilde(xi, n))
}

/// The polynomial `w` with `w(0) = 0` and
/// `∇_{1/2}^n (z^{n-1} w(z)) = Ξ(z + 1/2)`, where `Ξ = ∂^n(z^n ξ)`.
///
/// Solved over the basis `z^{n-1}·z^k` (k ≥ 1): the image of `z^{n-1+k}` has
/// degree `k-1` and leading coefficient `(n-1+k)!/(k-1)!`, so the system is
/// triangular.
pub fn xi_to_w(xi: &Poly, n: usize) -> Poly {
    assert!(n >= 1, "rank must be positive");
    let target = xi_to_xi_tilde(xi, n).translate(&half());
    let Some(d) = target.degree() else {
        return Poly::zero();
    };
    let h = half();
    let mut remainder = target;
    let mut w = vec![Rational::zero(); d + 2];
    for k in (1..=d + 1).rev() {
        let column = nabla_pow(&h, &Poly::monomial(n - 1 + k, Rational::one()), n);
        let lead = column.coeff(k - 1);
        debug_assert_eq!(column.degree(), Some(k - 1));
        let c = remainder.coeff(k - 1) / lead;
        if !c.is_zero() {
            remainder = &remainder - &column.scale(&c);
            w[k] = c;
        }
    }
    debug_assert!(remainder.is_zero(), "triangular solve left a remainder");
    Poly::new(w)
}

/// `a(z) + b(z)·γ` in `ℚ[z, γ] / (γ² - 1/4)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistedPoly {
    pub a: Poly,
    pub b: Poly,
}

impl TwistedPoly {
    pub fn new(a: Poly, b: Poly) -> Self {
        TwistedPoly { a, b }
    }

    pub fn scalar(a: Poly) -> Self {
        TwistedPoly { a, b: Poly::zero() }
    }

    /// The element `γ`.
    pub fn gamma() -> Self {
        TwistedPoly {
            a: Poly::zero(),
            b: Poly::one(),
        }
    }

    pub fn add(&self, other: &TwistedPoly) -> TwistedPoly {
        TwistedPoly::new(&self.a + &other.a, &self.b + &other.b)
    }

    pub fn sub(&self, other: &TwistedPoly) -> TwistedPoly {
        TwistedPoly::new(&self.a - &other.a, &self.b - &other.b)
    }

    pub fn mul(&self, other: &TwistedPoly) -> TwistedPoly {
        let quarter = Poly::constant(rat(1, 4));
        let a = &(&self.a * &other.a) + &(&(&self.b * &other.b) * &quarter);
        let b = &(&self.a * &other.b) + &(&self.b * &other.a);
        TwistedPoly::new(a, b)
    }

    /// Substitutes `self` into `f`.
    pub fn compose_into(&self, f: &Poly) -> TwistedPoly {
        f.coeffs()
            .iter()
            .rev()
            .fold(TwistedPoly::scalar(Poly::zero()), |acc, c| {
                acc.mul(self).add(&TwistedPoly::scalar(Poly::constant(c.clone())))
            })
    }
}

/// Checks `p(z)γ = f(z+γ) + p(z)/2 - f(z+1/2)` for `f = ∇_{1/2}^{-1} p`.
pub fn twisted_identity_check(p: &Poly) -> bool {
    let (lhs, rhs) = twisted_identity_sides(p);
    lhs == rhs
}

pub fn twisted_identity_sides(p: &Poly) -> (TwistedPoly, TwistedPoly) {
    let f = nabla_inverse(&half(), p);
    let lhs = TwistedPoly::new(Poly::zero(), p.clone());
    let z_plus_gamma = TwistedPoly::new(Poly::z(), Poly::one());
    let correction = &p.scale(&half()) - &f.translate(&half());
    let rhs = z_plus_gamma
        .compose_into(&f)
        .add(&TwistedPoly::scalar(correction));
    (lhs, rhs)
}
