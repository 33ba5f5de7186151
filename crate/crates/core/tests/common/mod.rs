#![allow(dead_code)]

use cherednik_core::decomp::lambda_tilde_member;
use cherednik_core::oracle::close_recurrence;
use cherednik_core::poly::xi_to_w;
use cherednik_core::rational::{int, rat};
use cherednik_core::{HPoly, Poly, Rational, Weight};
use rand::Rng;

/// `P = 18h_1 − 9/2 h_2 − 2h_3 + 1/2 h_4` at rank 2.
pub fn reference_p() -> HPoly {
    HPoly::new(2, vec![int(0), int(18), rat(-9, 2), int(-2), rat(1, 2)])
}

/// `λ` with `λ + ρ = (3, 0)`.
pub fn reference_lambda() -> Weight {
    Weight::from_shifted(vec![int(3), int(0)])
}

/// Published P table for the reference example; rows run over the second
/// coordinate `0, −1, −2, −3`, columns over the first `3, 2, 1, 0`.
pub const REFERENCE_P_TABLE: [[i64; 4]; 4] = [
    [0, -5, -12, 0],
    [10, 0, -10, 4],
    [12, -4, -16, 3],
    [0, -20, -30, 0],
];

pub fn shifted(a: Rational, b: Rational) -> Weight {
    Weight::from_shifted(vec![a, b])
}

pub fn small_rational<R: Rng>(rng: &mut R, span: i64, max_den: i64) -> Rational {
    rat(rng.gen_range(-span..=span), rng.gen_range(1..=max_den))
}

/// A rank-one instance `(ξ, λ)` with `deg ξ ≤ 3` whose recurrence closes at
/// most `target_nu + 1` steps below `λ`.
pub fn rank_one_instance<R: Rng>(rng: &mut R, target_nu: u64) -> (Poly, Rational) {
    loop {
        let lambda = small_rational(rng, 12, 4);
        let deg = rng.gen_range(1..=3);
        let higher: Vec<Rational> = (0..deg).map(|_| small_rational(rng, 6, 3)).collect();
        if higher.iter().all(|c| c == &int(0)) {
            continue;
        }
        let xi = close_recurrence(&higher, &lambda, target_nu);
        return (xi, lambda);
    }
}

/// A rank-`n` instance in `Λ̃`: random `w_2..w_d` and a dominant `λ`, with `w_1`
/// solved so that `P(λ) = P(λ − (k+1)e_n)`.
pub fn rank_n_instance<R: Rng>(rng: &mut R, n: usize, k: u64) -> (HPoly, Weight) {
    loop {
        let top = rng.gen_range(2..=4);
        let mut w: Vec<Rational> = vec![int(0), int(0)];
        w.extend((2..=top).map(|_| small_rational(rng, 5, 2)));
        // dominant λ: integral gaps on a random base
        let base = small_rational(rng, 6, 3);
        let mut coords = vec![base];
        for _ in 1..n {
            let prev = coords.last().unwrap().clone();
            coords.push(prev - int(rng.gen_range(0..=3)));
        }
        let lambda = Weight::new(coords);
        let point = lambda.shifted();
        let mut lowered = point.clone();
        lowered[n - 1] -= int(k as i64 + 1);
        let eval = |w: &[Rational], pt: &[Rational]| HPoly::new(n, w.to_vec()).eval_shifted(pt);
        // P is affine in w_1 with slope h_1(point) − h_1(lowered) = k + 1
        let gap = eval(&w, &point) - eval(&w, &lowered);
        w[1] = -gap / int(k as i64 + 1);
        let p = HPoly::new(n, w);
        if p.is_zero() {
            continue;
        }
        if let Ok(Some(_)) = lambda_tilde_member(&p, &lambda) {
            return (p, lambda);
        }
    }
}

pub fn rank_one_p(xi: &Poly) -> HPoly {
    HPoly::from_w(1, &xi_to_w(xi, 1))
}
