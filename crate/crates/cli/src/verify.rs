//! Self-check suites. Every instance is deterministic.

use std::panic::{catch_unwind, AssertUnwindSafe};

use cherednik_core::clifford::{
    clifford_twisted_identity_check, gamma_lie_hom_check, gamma_lifts_action, gamma_rank_one,
    spin_weights, CliffordElement,
};
use cherednik_core::oracle::{close_recurrence, oracle_cohomology};
use cherednik_core::poly::{bernoulli, nabla, nabla_inverse, twisted_identity_check, xi_to_w};
use cherednik_core::rational::{half, int, rat};
use cherednik_core::uea::{
    h_linearity_check, higher_jacobi_checks, jacobi_check, r_matrix, Gen, Kappa, Uea,
};
use cherednik_core::{analyze, Exec, HPoly, Poly, Rational, Weight};
use num_traits::Zero;
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Jacobi,
    Clifford,
    #[value(name = "oracle-n1")]
    OracleN1,
    Poly,
    All,
}

pub struct Bounds {
    pub max_n: Option<usize>,
    pub max_deg: Option<usize>,
}

struct Check {
    name: String,
    passed: bool,
    detail: String,
}

fn check(name: impl Into<String>, run: impl FnOnce() -> Result<String, String>) -> Check {
    let name = name.into();
    match catch_unwind(AssertUnwindSafe(run)) {
        Ok(Ok(detail)) => Check { name, passed: true, detail },
        Ok(Err(detail)) => Check { name, passed: false, detail },
        Err(panic) => {
            let detail = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into());
            Check { name, passed: false, detail: format!("panic: {detail}") }
        }
    }
}

fn jacobi_suite(b: &Bounds, exec: Exec) -> Vec<Check> {
    let max_n = b.max_n.unwrap_or(2);
    let max_deg = b.max_deg.unwrap_or(2);
    let mut out = Vec::new();
    for n in 1..=max_n {
        for deg in 0..=max_deg {
            let xi = Poly::new((0..=deg).map(|k| rat(k as i64 + 2, 3)).collect());
            out.push(check(format!("kappa n={n} deg={deg}"), || {
                let k = Kappa::from_xi(&xi, n);
                let j = jacobi_check(&k, exec);
                if let Some(f) = j.failure {
                    return Err(format!("Jacobi fails at {}: {}", f.case, f.residual));
                }
                let h = higher_jacobi_checks(&k, exec);
                if let Some(f) = h.failure {
                    return Err(format!("{}: {}", f.case, f.residual));
                }
                let l = h_linearity_check(&k, exec);
                if let Some(f) = l.failure {
                    return Err(format!("H-linearity fails at {}: {}", f.case, f.residual));
                }
                Ok(format!("{} + {} + {} cases", j.cases, h.cases, l.cases))
            }));
        }
    }
    out.push(check("negative control n=2 xi=z", || {
        let n = 2;
        let base: Vec<_> = (0..=1).map(|m| r_matrix(n, m)).collect();
        let mut jacobi_caught = 0;
        let mut total = 0;
        for i in 0..n {
            for j in 0..n {
                for (mono, c) in base[1][i][j].terms() {
                    let mut r = base.clone();
                    r[1][i][j] = r[1][i][j].add(&Uea::word(mono).scale(c));
                    let k = Kappa::from_r_tables(&Poly::z(), n, &r);
                    let by_jacobi = !jacobi_check(&k, exec).passed();
                    let by_linearity = !h_linearity_check(&k, exec).passed();
                    let label: String = mono.iter().map(Gen::to_string).collect();
                    if !by_jacobi && !by_linearity {
                        return Err(format!("corrupting {label} in r_1[{i}][{j}] goes undetected"));
                    }
                    jacobi_caught += usize::from(by_jacobi);
                    total += 1;
                }
            }
        }
        Ok(format!("{total}/{total} corruptions rejected ({jacobi_caught} by Jacobi, rest by H-linearity)"))
    }));
    out
}

fn clifford_suite(b: &Bounds, exec: Exec) -> Vec<Check> {
    let max_n = b.max_n.unwrap_or(3);
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.push(check(format!("spin weights n={n}"), || {
            let w = spin_weights(n);
            let ok = w.len() == 1 << n
                && w.iter().all(|(wt, m)| {
                    *m == 1 && wt.coords().iter().all(|c| c == &half() || c == &-half())
                });
            if ok {
                Ok(format!("{} weights", w.len()))
            } else {
                Err(format!("{w:?}"))
            }
        }));
        out.push(check(format!("gamma Lie map n={n}"), || {
            if gamma_lie_hom_check(n, exec) && gamma_lifts_action(n, exec) {
                Ok("bracket and lift sweeps".into())
            } else {
                Err("bracket or lift sweep failed".into())
            }
        }));
    }
    let vectors = [
        vec![int(1)],
        vec![rat(3, 5), rat(4, 5)],
        vec![rat(5, 13), rat(12, 13)],
        vec![rat(1, 3), rat(2, 3), rat(2, 3)],
    ];
    for v in vectors.into_iter().filter(|v| v.len() <= max_n) {
        let label: Vec<String> = v.iter().map(Rational::to_string).collect();
        out.push(check(format!("rank one ({})", label.join(",")), || {
            let g = gamma_rank_one(&v).map_err(|e| e.to_string())?;
            if g.mul(&g) != CliffordElement::scalar(v.len(), rat(1, 4)) {
                return Err("square is not 1/4".into());
            }
            if v.len() <= 2 {
                for k in 0..=4 {
                    if !clifford_twisted_identity_check(&Poly::monomial(k, int(1)), &v)
                        .map_err(|e| e.to_string())?
                    {
                        return Err(format!("twisted identity fails for z^{k}"));
                    }
                }
            }
            Ok("square 1/4".into())
        }));
    }
    out
}

/// Deterministic rank-one instances with `deg ξ ≤ 3` and closing depth ≤ 8.
pub fn oracle_instances() -> Vec<(Poly, Rational)> {
    (0..24i64)
        .map(|i| {
            let lambda = rat(7 * i - 40, 1 + i % 4);
            let coeffs = [rat(1 + i % 5, 1 + i % 3), rat(i % 7 - 3, 2), rat(i % 4 - 1, 3)];
            let higher = &coeffs[..=(i % 3) as usize];
            (close_recurrence(higher, &lambda, (i % 9) as u64), lambda)
        })
        .collect()
}

fn oracle_suite(exec: Exec) -> Vec<Check> {
    let instances = oracle_instances();
    let results = exec.map(&instances, |(xi, lambda)| {
        check(format!("xi={xi} lambda={lambda}"), || {
            let report = oracle_cohomology(xi, lambda).map_err(|e| e.to_string())?;
            let p = HPoly::from_w(1, &xi_to_w(xi, 1));
            let closed = analyze(&p, &Weight::new(vec![lambda.clone()]), Exec::Sequential)
                .map_err(|e| e.to_string())?
                .cohomology;
            if report.cohomology != closed {
                return Err(format!("oracle {:?} vs closed form {:?}", report.cohomology, closed));
            }
            let top = p.eval_shifted(std::slice::from_ref(lambda));
            for (mu, value) in &report.d2_blocks {
                let expected = (&top - p.eval_shifted(&[mu - half()])) * int(2);
                if value != &expected {
                    return Err(format!("D² = {value} on weight {mu}, expected {expected}"));
                }
            }
            Ok(format!("ν = {}, dim ker D = {}", report.module.nu, report.kernel_dim))
        })
    });
    results
}

fn poly_suite(b: &Bounds) -> Vec<Check> {
    let max_deg = b.max_deg.unwrap_or(8);
    vec![
        check("bernoulli forward difference k<=12", || {
            for k in 0..=12usize {
                let expected = if k == 0 { Poly::zero() } else { Poly::monomial(k - 1, int(k as i64)) };
                if nabla(&int(1), &bernoulli(k)) != expected {
                    return Err(format!("k = {k}"));
                }
            }
            Ok("13 identities".into())
        }),
        check("nabla inverse round trips", || {
            let mut count = 0;
            for eps in [int(0), half(), int(1), rat(-3, 7)] {
                for s in 0..100i64 {
                    let deg = (s % 11) as usize;
                    let p = Poly::new((0..=deg as i64).map(|j| rat((s * 7 + j * 13) % 19 - 9, 1 + (s + j) % 5)).collect());
                    let f = nabla_inverse(&eps, &p);
                    if nabla(&eps, &f) != p || !f.coeff(0).is_zero() {
                        return Err(format!("eps = {eps}, p = {p}"));
                    }
                    count += 1;
                }
            }
            Ok(format!("{count} round trips"))
        }),
        check(format!("twisted identity z^k, k<={max_deg}"), || {
            for k in 0..=max_deg {
                if !twisted_identity_check(&Poly::monomial(k, int(1))) {
                    return Err(format!("z^{k}"));
                }
            }
            Ok(format!("{} monomials", max_deg + 1))
        }),
        check("deg w = deg xi + 1", || {
            for n in 1..=3 {
                for d in 0..=4usize {
                    let xi = Poly::new((0..=d as i64).map(|j| rat(j * 5 - 3 + n as i64, 2)).collect());
                    let w = xi_to_w(&xi, n);
                    if w.degree() != xi.degree().map(|k| k + 1) {
                        return Err(format!("n = {n}, ξ = {xi}, w = {w}"));
                    }
                }
            }
            Ok("15 cases".into())
        }),
    ]
}

pub fn run(suite: Suite, bounds: &Bounds, exec: Exec) -> (Value, String, bool) {
    let selected: Vec<Suite> = match suite {
        Suite::All => vec![Suite::Poly, Suite::Clifford, Suite::Jacobi, Suite::OracleN1],
        s => vec![s],
    };
    let mut suites = Vec::new();
    let mut text = String::new();
    let mut all_passed = true;
    for s in selected {
        let (name, checks) = match s {
            Suite::Jacobi => ("jacobi", jacobi_suite(bounds, exec)),
            Suite::Clifford => ("clifford", clifford_suite(bounds, exec)),
            Suite::OracleN1 => ("oracle-n1", oracle_suite(exec)),
            Suite::Poly => ("poly", poly_suite(bounds)),
            Suite::All => unreachable!(),
        };
        let passed = checks.iter().all(|c| c.passed);
        all_passed &= passed;
        text.push_str(&format!("{name}: {}\n", if passed { "pass" } else { "FAIL" }));
        for c in &checks {
            text.push_str(&format!(
                "  [{}] {}  {}\n",
                if c.passed { "ok" } else { "FAIL" },
                c.name,
                c.detail
            ));
        }
        suites.push(json!({
            "name": name,
            "passed": passed,
            "checks": checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        }));
    }
    let json = json!({ "command": "verify", "passed": all_passed, "suites": suites });
    (json, text, all_passed)
}
