//! Brute-force check at rank one: `L(λ)` as explicit matrices, the Dirac
//! operator `D = x ⊗ y_C + y ⊗ x_C` on `L(λ) ⊗ S`, and its cohomology by
//! exact Gaussian elimination.
//!
//! At `n = 1` the relations are `[t,x] = −x`, `[t,y] = y`, `[y,x] = p(t)` with
//! `p(z) = Σ ξ_m (m+1) z^m`. On the basis `v_0..v_ν` of `t`-weights
//! `λ, …, λ−ν` we take `x v_k = v_{k+1}` and `y v_k = d_k v_{k−1}`, where
//! `d_0 = 0` and `d_{k+1} = d_k + p(λ−k)`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::clifford::{gamma_e, spin_action, CliffordElement, SpinVector};
use crate::decomp::{is_degenerate, nu_vector, ModuleDecomp};
use crate::error::DecompError;
use crate::linalg::{intersection_dim, Matrix};
use crate::poly::{xi_to_w, Poly};
use crate::rational::{int, Rational};
use crate::weights::{HPoly, Weight};

/// `p(z) = Σ ξ_m (m+1) z^m`, the rank-one commutator polynomial `[y, x]`.
pub fn commutator_poly(xi: &Poly) -> Poly {
    Poly::new(
        xi.coeffs()
            .iter()
            .enumerate()
            .map(|(m, c)| c * int(m as i64 + 1))
            .collect(),
    )
}

/// The `ξ` with prescribed `ξ_1, ξ_2, …` whose constant term makes
/// `Σ_{k=0}^{ν} p(λ−k) = 0`, so that the recurrence closes after `ν+1` steps.
pub fn close_recurrence(higher: &[Rational], lambda: &Rational, nu: u64) -> Poly {
    let mut coeffs = vec![Rational::zero()];
    coeffs.extend_from_slice(higher);
    let tail: Rational = (0..=nu)
        .map(|k| commutator_poly(&Poly::new(coeffs.clone())).eval(&(lambda - int(k as i64))))
        .sum();
    coeffs[0] = -tail / int(nu as i64 + 1);
    Poly::new(coeffs)
}

#[derive(Clone, Debug)]
pub struct RankOneModule {
    pub lambda: Rational,
    pub nu: u64,
    pub p: Poly,
    pub d: Vec<Rational>,
    pub t: Matrix,
    pub x: Matrix,
    pub y: Matrix,
}

impl RankOneModule {
    pub fn dim(&self) -> usize {
        self.nu as usize + 1
    }

    /// `tx − xt = −x`, `ty − yt = y`, `yx − xy = p(t)` as matrix identities.
    pub fn relations_hold(&self) -> bool {
        let c = |a: &Matrix, b: &Matrix| a.mul(b).sub(&b.mul(a));
        let p_t = Matrix::diagonal(
            &(0..self.dim())
                .map(|k| self.p.eval(self.t.get(k, k)))
                .collect::<Vec<_>>(),
        );
        c(&self.t, &self.x) == self.x.scale(&-Rational::one())
            && c(&self.t, &self.y) == self.y
            && c(&self.y, &self.x) == p_t
    }
}

/// Builds `L(λ)` for `n = 1`, taking `ν` from the closed-form classifier.
///
/// Panics if the recurrence disagrees with the classifier (`d_{ν+1} ≠ 0`, or
/// some `d_k = 0` for `1 ≤ k ≤ ν` which would make the module reducible).
pub fn build_module(xi: &Poly, lambda: &Rational) -> Result<RankOneModule, DecompError> {
    let hp = HPoly::from_w(1, &xi_to_w(xi, 1));
    let weight = Weight::new(vec![lambda.clone()]);
    let nu = nu_vector(&hp, &weight)?.0[0];
    let p = commutator_poly(xi);
    let mut d = vec![Rational::zero()];
    for k in 0..=nu {
        let next = &d[k as usize] + p.eval(&(lambda - int(k as i64)));
        d.push(next);
    }
    assert!(
        d[nu as usize + 1].is_zero(),
        "recurrence does not close at ν = {nu} for λ = {lambda}"
    );
    if !is_degenerate(&hp, &weight) {
        assert!(
            d[1..=nu as usize].iter().all(|v| !v.is_zero()),
            "recurrence closes before ν = {nu} for λ = {lambda}"
        );
    }
    let dim = nu as usize + 1;
    let t = Matrix::diagonal(
        &(0..dim)
            .map(|k| lambda - int(k as i64))
            .collect::<Vec<_>>(),
    );
    let mut x = Matrix::zeros(dim, dim);
    let mut y = Matrix::zeros(dim, dim);
    for k in 0..dim {
        if k + 1 < dim {
            x.set(k + 1, k, Rational::one());
        }
        if k > 0 {
            y.set(k - 1, k, d[k].clone());
        }
    }
    Ok(RankOneModule {
        lambda: lambda.clone(),
        nu,
        p,
        d,
        t,
        x,
        y,
    })
}

/// Matrix of a Clifford element on `S` in the basis `(u, x_C u)`.
fn spin_matrix(c: &CliffordElement) -> Matrix {
    let cols: Vec<Vec<Rational>> = (0..2u32)
        .map(|e| {
            let image = spin_action(c, &SpinVector::basis(1, e)).expect("rank one spin action");
            (0..2u32).map(|f| image.coeff(f)).collect()
        })
        .collect();
    Matrix::from_columns(2, &cols)
}

/// `D = x ⊗ y_C + y ⊗ x_C` on `L(λ) ⊗ S`, basis index `2k + e`.
pub fn dirac_matrix(m: &RankOneModule) -> Matrix {
    let xc = spin_matrix(&CliffordElement::x(1, 0));
    let yc = spin_matrix(&CliffordElement::y(1, 0));
    m.x.kron(&yc).add(&m.y.kron(&xc))
}

/// Weights of the basis of `L(λ) ⊗ S` under `t ⊗ 1 + 1 ⊗ γ(E_11)`.
pub fn tensor_weights(m: &RankOneModule) -> Vec<Rational> {
    let g = spin_matrix(&gamma_e(0, 0, 1));
    assert!(
        g.get(0, 1).is_zero() && g.get(1, 0).is_zero(),
        "γ(E_11) is diagonal on S"
    );
    (0..m.dim())
        .flat_map(|k| {
            let tk = m.t.get(k, k).clone();
            let g = g.clone();
            (0..2).map(move |e| &tk + g.get(e, e))
        })
        .collect()
}

#[derive(Clone, Debug)]
pub struct OracleReport {
    pub module: RankOneModule,
    pub dirac: Matrix,
    pub rank_d: usize,
    pub kernel_dim: usize,
    /// Weight-space multiplicities of `ker D²`.
    pub cohomology: ModuleDecomp,
    /// Scalar by which `D²` acts on each weight space.
    pub d2_blocks: BTreeMap<Rational, Rational>,
}

/// `H^D(L(λ))` by linear algebra. Panics if `ker D ≠ ker D²`, if
/// `ker D ∩ im D ≠ 0`, or if `D²` fails to act by a scalar on a weight space.
pub fn oracle_cohomology(xi: &Poly, lambda: &Rational) -> Result<OracleReport, DecompError> {
    let module = build_module(xi, lambda)?;
    let dirac = dirac_matrix(&module);
    let d2 = dirac.mul(&dirac);
    let size = dirac.rows();
    let ker = dirac.kernel();
    let ker2 = d2.kernel();
    let rank_d = dirac.rank();
    assert_eq!(rank_d + ker.len(), size);
    assert_eq!(ker.len(), ker2.len(), "ker D ≠ ker D²");
    assert_eq!(intersection_dim(&ker, &ker2, size), ker.len(), "ker D ⊄ ker D²");
    assert_eq!(intersection_dim(&ker, &dirac.image(), size), 0, "ker D ∩ im D ≠ 0");

    let weights = tensor_weights(&module);
    let mut blocks: BTreeMap<Rational, Vec<usize>> = BTreeMap::new();
    for (i, w) in weights.iter().enumerate() {
        blocks.entry(w.clone()).or_default().push(i);
    }
    let mut cohomology = ModuleDecomp::new(1);
    let mut d2_blocks = BTreeMap::new();
    for (w, idx) in &blocks {
        // D and D² preserve weights
        for (i, wi) in weights.iter().enumerate() {
            for &j in idx {
                if wi != w {
                    assert!(dirac.get(i, j).is_zero(), "D does not preserve weights");
                }
            }
        }
        let block = d2.restrict(idx);
        let scalar = block.get(0, 0).clone();
        assert_eq!(
            block,
            Matrix::identity(idx.len()).scale(&scalar),
            "D² is not scalar on weight {w}"
        );
        d2_blocks.insert(w.clone(), scalar);
        let k = block.kernel().len() as u64;
        if k > 0 {
            cohomology.insert(Weight::new(vec![w.clone()]), k);
        }
    }
    Ok(OracleReport {
        module,
        dirac,
        rank_d,
        kernel_dim: ker.len(),
        cohomology,
        d2_blocks,
    })
}
