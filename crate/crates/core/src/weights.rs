//! gl_n weights, the Weyl vector, complete homogeneous symmetric polynomials
//! and the central-character polynomial `P(μ) = Σ w_k h_k(μ + ρ)`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::DecompError;
use crate::poly::Poly;
use crate::rational::{format_decimal, half, int, rat, Rational};

/// A weight `a_1 E_11* + … + a_n E_nn*` in plain (unshifted) coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Weight {
    coords: Vec<Rational>,
}

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight { coords }
    }

    pub fn from_ratios(coords: &[(i64, i64)]) -> Self {
        Weight::new(coords.iter().map(|&(p, q)| rat(p, q)).collect())
    }

    /// Builds `λ` from its ρ-shifted coordinates `λ + ρ`.
    pub fn from_shifted(shifted: Vec<Rational>) -> Self {
        let r = rho(shifted.len());
        Weight::new(
            shifted
                .into_iter()
                .zip(r.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.coords
    }

    /// `λ + ρ`.
    pub fn shifted(&self) -> Vec<Rational> {
        let r = rho(self.rank());
        self.coords.iter().zip(&r.coords).map(|(a, b)| a + b).collect()
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight::new(self.coords.iter().zip(&other.coords).map(|(a, b)| a - b).collect())
    }

    /// Adds `delta` to coordinate `i`.
    pub fn bump(&self, i: usize, delta: &Rational) -> Weight {
        let mut coords = self.coords.clone();
        coords[i] += delta;
        Weight::new(coords)
    }

    /// `(c, …, c)`.
    pub fn constant(n: usize, c: Rational) -> Weight {
        Weight::new(vec![c; n])
    }

    pub fn half_ones(n: usize) -> Weight {
        Weight::constant(n, half())
    }

    pub fn display_decimal(&self) -> String {
        let parts: Vec<String> = self.coords.iter().map(format_decimal).collect();
        format!("({})", parts.join(", "))
    }
}

impl Ord for Weight {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords.cmp(&other.coords)
    }
}

impl PartialOrd for Weight {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Weight{self}")
    }
}

/// Weyl vector `((n-1)/2, (n-3)/2, …, (1-n)/2)`.
pub fn rho(n: usize) -> Weight {
    assert!(n >= 1, "rank must be positive");
    let top = n as i64 - 1;
    Weight::new((0..n as i64).map(|i| rat(top - 2 * i, 2)).collect())
}

/// `λ_i - λ_{i+1} ∈ ℤ≥0` for every `i`.
pub fn is_dominant(lambda: &Weight) -> bool {
    lambda.coords.windows(2).all(|w| {
        let d = &w[0] - &w[1];
        d.is_integer() && !d.is_negative()
    })
}

/// `∏_{i<j} ((λ+ρ)_i - (λ+ρ)_j) / (j - i)` for an arbitrary weight. Zero
/// exactly when two ρ-shifted coordinates coincide.
pub fn formal_weyl_dim(lambda: &Weight) -> Rational {
    let n = lambda.rank();
    let c = &lambda.coords;
    let mut acc = Rational::one();
    for i in 0..n {
        for j in i + 1..n {
            let gap = int((j - i) as i64);
            acc *= (&c[i] - &c[j] + &gap) / gap;
        }
    }
    acc
}

/// Dimension of the irreducible gl_n-module with highest weight `λ`.
pub fn weyl_dim(lambda: &Weight) -> Result<BigInt, DecompError> {
    if !is_dominant(lambda) {
        return Err(DecompError::NotDominant(lambda.to_string()));
    }
    let d = formal_weyl_dim(lambda);
    debug_assert!(d.is_integer() && d.is_positive());
    Ok(d.to_integer())
}

/// `h_0, …, h_k` at `point`, via `h_j(x_1..x_m) = h_j(x_1..x_{m-1}) + x_m h_{j-1}(x_1..x_m)`.
pub fn complete_homogeneous_upto(k: usize, point: &[Rational]) -> Vec<Rational> {
    let mut h = vec![Rational::zero(); k + 1];
    h[0] = Rational::one();
    // With no variables, h_j = 0 for j ≥ 1.
    for x in point {
        for j in 1..=k {
            let prev = &h[j - 1] * x;
            h[j] += prev;
        }
    }
    h
}

pub fn complete_homogeneous(k: usize, point: &[Rational]) -> Rational {
    complete_homogeneous_upto(k, point).swap_remove(k)
}

/// `P = Σ_k w_k h_k` in `rank` variables, stored by its h-basis coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HPoly {
    rank: usize,
    w: Vec<Rational>,
}

impl HPoly {
    pub fn new(rank: usize, mut w: Vec<Rational>) -> Self {
        assert!(rank >= 1, "rank must be positive");
        while w.last().is_some_and(Zero::is_zero) {
            w.pop();
        }
        HPoly { rank, w }
    }

    pub fn from_w(rank: usize, w: &Poly) -> Self {
        HPoly::new(rank, w.coeffs().to_vec())
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.w
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_empty()
    }

    /// `Σ w_k h_k(point)`, where `point` is already ρ-shifted.
    pub fn eval_shifted(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.rank, "point length must equal the rank");
        let Some(top) = self.w.len().checked_sub(1) else {
            return Rational::zero();
        };
        let h = complete_homogeneous_upto(top, point);
        self.w.iter().zip(&h).map(|(a, b)| a * b).sum()
    }

    /// `P(λ)`, i.e. the h-expansion evaluated at `λ + ρ`.
    pub fn eval_weight(&self, lambda: &Weight) -> Rational {
        self.eval_shifted(&lambda.shifted())
    }

    /// `P` at `point` with its last coordinate replaced by `point_n - t`, as a
    /// polynomial in `t`.
    pub fn along_last(&self, point: &[Rational]) -> Poly {
        assert_eq!(point.len(), self.rank);
        let Some(top) = self.w.len().checked_sub(1) else {
            return Poly::zero();
        };
        let (head, last) = point.split_at(self.rank - 1);
        let h_head = complete_homogeneous_upto(top, head);
        // (c - t)^j
        let base = Poly::new(vec![last[0].clone(), -Rational::one()]);
        let mut powers = vec![Poly::one()];
        for j in 1..=top {
            powers.push(&powers[j - 1] * &base);
        }
        let mut out = Poly::zero();
        for (k, wk) in self.w.iter().enumerate() {
            if wk.is_zero() {
                continue;
            }
            // h_k(head, s) = Σ_j h_{k-j}(head) s^j
            for j in 0..=k {
                let c = wk * &h_head[k - j];
                if !c.is_zero() {
                    out = &out + &powers[j].scale(&c);
                }
            }
        }
        out
    }
}
