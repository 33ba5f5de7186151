//! Classification of the finite-dimensional irreducibles `L(λ)` and their
//! Dirac cohomology as explicit gl_n-decompositions.
//!
//! `L(λ)` restricts to gl_n as the box `⊕_{0≤ν'≤ν} V_{λ-ν'}`. Tensoring with the
//! spin module shifts every box weight by a sign vector in `{±1/2}^n`; the
//! kernel of `D²` keeps those `μ` with `P(λ) = P(μ - (1/2,…,1/2))`.
//!
//! Weights of the form `σ + s` that fail dominance have two equal ρ-shifted
//! coordinates, hence formal Weyl dimension zero. They are kept in the
//! decompositions as *virtual* summands, matching the usual tabulation of
//! `L(λ)⊗S`; [`ModuleDecomp::genuine`] drops them.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::DecompError;
use crate::exec::Exec;
use crate::poly::Poly;
use crate::rational::{common_denominator, half, int, Rational};
use crate::weights::{formal_weyl_dim, is_dominant, HPoly, Weight};

/// Finite multiset `⊕ m_μ V_μ`. Iteration runs in descending lexicographic
/// order of the weights (equivalently of their ρ-shifted coordinates).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleDecomp {
    rank: usize,
    entries: BTreeMap<Weight, u64>,
}

impl ModuleDecomp {
    pub fn new(rank: usize) -> Self {
        ModuleDecomp {
            rank,
            entries: BTreeMap::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn insert(&mut self, weight: Weight, multiplicity: u64) {
        assert_eq!(weight.rank(), self.rank, "weight rank mismatch");
        if multiplicity == 0 {
            return;
        }
        *self.entries.entry(weight).or_insert(0) += multiplicity;
    }

    pub fn merge(&mut self, other: &ModuleDecomp) {
        for (w, m) in &other.entries {
            self.insert(w.clone(), *m);
        }
    }

    pub fn multiplicity(&self, weight: &Weight) -> u64 {
        self.entries.get(weight).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.entries.iter().rev().map(|(w, m)| (w, *m))
    }

    /// Sum of multiplicities.
    pub fn count(&self) -> u64 {
        self.entries.values().sum()
    }

    /// `Σ m_μ · dim V_μ` with virtual summands contributing zero.
    pub fn total_dim(&self) -> BigInt {
        let total: Rational = self
            .entries
            .iter()
            .map(|(w, m)| formal_weyl_dim(w) * int(*m as i64))
            .sum();
        total.to_integer()
    }

    /// Drops the virtual (non-dominant) summands.
    pub fn genuine(&self) -> ModuleDecomp {
        ModuleDecomp {
            rank: self.rank,
            entries: self
                .entries
                .iter()
                .filter(|(w, _)| is_dominant(w))
                .map(|(w, m)| (w.clone(), *m))
                .collect(),
        }
    }

    pub fn is_submultiset_of(&self, other: &ModuleDecomp) -> bool {
        self.entries
            .iter()
            .all(|(w, m)| other.multiplicity(w) >= *m)
    }
}

/// Per-coordinate box bounds `ν`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NuVector(pub Vec<u64>);

impl NuVector {
    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

fn check_rank(p: &HPoly, lambda: &Weight) -> Result<(), DecompError> {
    if p.rank() != lambda.rank() {
        return Err(DecompError::RankMismatch {
            expected: p.rank(),
            got: lambda.rank(),
        });
    }
    Ok(())
}

/// Smallest positive integer root of `q`, or `None`. `q` must be nonzero.
///
/// Rational-root theorem on the denominator-cleared polynomial: after removing
/// powers of `t`, a positive integer root divides the constant term and is at
/// most the Cauchy bound.
pub fn smallest_positive_integer_root(q: &Poly) -> Option<BigInt> {
    assert!(!q.is_zero(), "zero polynomial has every root");
    let den = common_denominator(q.coeffs());
    let ints: Vec<BigInt> = q
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    let low = ints.iter().position(|c| !c.is_zero())?;
    let ints = &ints[low..];
    if ints.len() < 2 {
        return None;
    }
    let a0 = ints[0].abs();
    let lead = ints.last().unwrap().abs();
    let max_ratio = ints[..ints.len() - 1]
        .iter()
        .map(|c| c.abs().div_ceil(&lead))
        .max()
        .unwrap_or_else(BigInt::zero);
    let bound = max_ratio + BigInt::one();
    let eval = |t: &BigInt| -> bool {
        ints.iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
            .is_zero()
    };
    let mut candidates = Vec::new();
    let mut d = BigInt::one();
    while d <= bound && &d * &d <= a0 {
        if (&a0 % &d).is_zero() {
            candidates.push(d.clone());
            let co = &a0 / &d;
            if co <= bound {
                candidates.push(co);
            }
        }
        d += 1;
    }
    candidates.sort();
    candidates.dedup();
    candidates.into_iter().find(|t| eval(t))
}

/// `q(t) = P(λ) - P(λ - t·e_n)` as a polynomial in `t`.
pub fn last_coordinate_drop(p: &HPoly, lambda: &Weight) -> Poly {
    let shifted = lambda.shifted();
    let at_lambda = p.eval_shifted(&shifted);
    &Poly::constant(at_lambda) - &p.along_last(&shifted)
}

/// `Some(ν_n)` when `λ ∈ Λ̃`: the smallest `ν_n ≥ 0` with
/// `P(λ) = P(λ - (0,…,0,ν_n+1))`. `None` when no such integer exists.
pub fn lambda_tilde_member(p: &HPoly, lambda: &Weight) -> Result<Option<u64>, DecompError> {
    check_rank(p, lambda)?;
    if !is_dominant(lambda) {
        return Err(DecompError::NotDominant(lambda.to_string()));
    }
    let q = last_coordinate_drop(p, lambda);
    if q.is_zero() {
        return Ok(Some(0));
    }
    Ok(smallest_positive_integer_root(&q).map(|t| {
        (t - BigInt::one())
            .to_u64()
            .expect("box size exceeds u64")
    }))
}

/// `P` does not depend on the last coordinate along `λ - t e_n`.
pub fn is_degenerate(p: &HPoly, lambda: &Weight) -> bool {
    last_coordinate_drop(p, lambda).is_zero()
}

/// Box bounds: `ν_i` is minimal with `λ - (ν_i+1)e_i` non-dominant or on the
/// same level set of `P`; `ν_n` comes from [`lambda_tilde_member`].
pub fn nu_vector(p: &HPoly, lambda: &Weight) -> Result<NuVector, DecompError> {
    let nu_n = lambda_tilde_member(p, lambda)?
        .ok_or_else(|| DecompError::NotInLambdaTilde(lambda.to_string()))?;
    let n = lambda.rank();
    let target = p.eval_weight(lambda);
    let mut nu = Vec::with_capacity(n);
    for i in 0..n - 1 {
        let mut k: u64 = 0;
        loop {
            let lowered = lambda.bump(i, &-int(k as i64 + 1));
            if !is_dominant(&lowered) || p.eval_weight(&lowered) == target {
                break;
            }
            k += 1;
        }
        nu.push(k);
    }
    nu.push(nu_n);
    Ok(NuVector(nu))
}

fn box_offsets(nu: &[u64]) -> Vec<Vec<u64>> {
    let mut out = vec![Vec::new()];
    for &bound in nu {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (0..=bound).map(move |k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

/// `L(λ) = ⊕_{0≤ν'≤ν} V_{λ-ν'}`.
pub fn l_decomposition(lambda: &Weight, nu: &NuVector) -> ModuleDecomp {
    assert_eq!(lambda.rank(), nu.0.len());
    let mut out = ModuleDecomp::new(lambda.rank());
    for offset in box_offsets(&nu.0) {
        let w = Weight::new(
            lambda
                .coords()
                .iter()
                .zip(&offset)
                .map(|(a, k)| a - int(*k as i64))
                .collect(),
        );
        assert!(is_dominant(&w), "box weight {w} is not dominant; ν is wrong");
        out.insert(w, 1);
    }
    out
}

/// All `2^n` sign vectors `{±1/2}^n`.
pub fn sign_vectors(n: usize) -> Vec<Weight> {
    (0..1u64 << n)
        .map(|mask| {
            Weight::new(
                (0..n)
                    .map(|i| if mask >> i & 1 == 0 { half() } else { -half() })
                    .collect(),
            )
        })
        .collect()
}

/// Formal decomposition of `L ⊗ S`: every `σ + s`, including virtual ones.
pub fn tensor_with_spin(l: &ModuleDecomp) -> ModuleDecomp {
    tensor_with_spin_with(Exec::default(), l)
}

pub fn tensor_with_spin_with(exec: Exec, l: &ModuleDecomp) -> ModuleDecomp {
    let signs = sign_vectors(l.rank());
    let entries: Vec<(Weight, u64)> = l.iter().map(|(w, m)| (w.clone(), m)).collect();
    let parts = exec.map(&entries, |(sigma, m)| {
        let mut part = ModuleDecomp::new(sigma.rank());
        for s in &signs {
            let mu = sigma.add(s);
            // Only virtual summands can fail dominance.
            debug_assert!(is_dominant(&mu) || formal_weyl_dim(&mu).is_zero());
            part.insert(mu, *m);
        }
        part
    });
    let mut out = ModuleDecomp::new(l.rank());
    for part in &parts {
        out.merge(part);
    }
    out
}

/// Everything computed for one `(P, λ)` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiracReport {
    pub lambda: Weight,
    pub nu: NuVector,
    pub degenerate: bool,
    pub l: ModuleDecomp,
    pub ls: ModuleDecomp,
    pub cohomology: ModuleDecomp,
    pub guaranteed: Vec<Weight>,
}

/// Summands of `ls` with `P(μ - (1/2,…,1/2)) = P(λ)`.
pub fn select_kernel(p: &HPoly, lambda: &Weight, ls: &ModuleDecomp, exec: Exec) -> ModuleDecomp {
    let target = p.eval_weight(lambda);
    let halves = Weight::half_ones(lambda.rank());
    let entries: Vec<(Weight, u64)> = ls.iter().map(|(w, m)| (w.clone(), m)).collect();
    let keep = exec.map(&entries, |(mu, _)| p.eval_weight(&mu.sub(&halves)) == target);
    let mut out = ModuleDecomp::new(lambda.rank());
    for ((mu, m), k) in entries.into_iter().zip(keep) {
        if k {
            out.insert(mu, m);
        }
    }
    out
}

/// Dirac cohomology `H^D(L(λ)) ≅ ker D²`, as a formal decomposition.
pub fn dirac_cohomology(p: &HPoly, lambda: &Weight) -> Result<ModuleDecomp, DecompError> {
    Ok(analyze(p, lambda, Exec::default())?.cohomology)
}

/// The classes `λ⁰`, `λⁿ` and (when `λ'^i` is dominant) `λ^i` that always
/// occur with multiplicity one.
pub fn guaranteed_classes(p: &HPoly, lambda: &Weight) -> Result<Vec<Weight>, DecompError> {
    let nu = nu_vector(p, lambda)?;
    Ok(guaranteed_from_nu(lambda, &nu))
}

fn guaranteed_from_nu(lambda: &Weight, nu: &NuVector) -> Vec<Weight> {
    let n = lambda.rank();
    let base = lambda.add(&Weight::half_ones(n));
    let mut out = vec![base.clone()];
    for i in 0..n - 1 {
        let drop = int(nu.0[i] as i64 + 1);
        let companion = lambda.bump(i, &-drop.clone());
        if is_dominant(&companion) {
            out.push(base.bump(i, &-drop));
        }
    }
    let drop = int(nu.0[n - 1] as i64 + 1);
    out.push(base.bump(n - 1, &-drop));
    out
}

/// Runs the full pipeline for one highest weight.
pub fn analyze(p: &HPoly, lambda: &Weight, exec: Exec) -> Result<DiracReport, DecompError> {
    let nu = nu_vector(p, lambda)?;
    let l = l_decomposition(lambda, &nu);
    let ls = tensor_with_spin_with(exec, &l);
    let cohomology = select_kernel(p, lambda, &ls, exec);
    let guaranteed = guaranteed_from_nu(lambda, &nu);
    Ok(DiracReport {
        lambda: lambda.clone(),
        degenerate: is_degenerate(p, lambda),
        nu,
        l,
        ls,
        cohomology,
        guaranteed,
    })
}
