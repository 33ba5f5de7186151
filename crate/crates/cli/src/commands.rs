//! transform, classify, dirac.

use cherednik_core::decomp::{l_decomposition, nu_vector};
use cherednik_core::poly::{xi_to_f, xi_to_xi_tilde, xi_to_w};
use cherednik_core::{analyze, DecompError, Exec, Poly};
use serde_json::{json, Value};

use crate::input::{Deformation, Job, UsageError};
use crate::render::{decomposition, rationals, weight, TextStyle};

pub struct Output {
    pub json: Value,
    pub text: String,
    pub code: i32,
}

fn header(job: &Job, style: &TextStyle) -> String {
    let w = job.deformation.w(job.n);
    let mut s = format!("n = {}\nw = {}\n", job.n, style.list(w.coeffs()));
    if let Some(l) = &job.lambda {
        s.push_str(&format!(
            "λ = {}    λ+ρ = {}\n",
            style.tuple(l.coords()),
            style.tuple(&l.shifted())
        ));
    }
    s
}

fn rejection(command: &str, job: &Job, err: &DecompError) -> Output {
    Output {
        json: json!({
            "command": command,
            "input": job.echo(),
            "member": false,
            "error": err.to_string(),
        }),
        text: format!("{err}\n"),
        code: 1,
    }
}

pub fn transform(job: &Job, style: &TextStyle) -> Result<Output, UsageError> {
    let Deformation::Xi(xi) = &job.deformation else {
        return Err(UsageError("transform needs --xi".into()));
    };
    let xi = Poly::new(xi.clone());
    let n = job.n;
    let big_xi = xi_to_xi_tilde(&xi, n);
    let g = xi_to_f(&xi, n);
    let w = xi_to_w(&xi, n);
    let json = json!({
        "command": "transform",
        "input": job.echo(),
        "Xi": rationals(big_xi.coeffs()),
        "g": rationals(g.coeffs()),
        "w": rationals(w.coeffs()),
        "P_h": rationals(w.coeffs()),
    });
    let text = format!(
        "n = {n}\nξ   = {}\nΞ   = {}\ng   = {}\nw   = {}\nP_h = {}\n",
        style.list(xi.coeffs()),
        style.list(big_xi.coeffs()),
        style.list(g.coeffs()),
        style.list(w.coeffs()),
        style.list(w.coeffs()),
    );
    Ok(Output { json, text, code: 0 })
}

pub fn classify(job: &Job, style: &TextStyle) -> Output {
    let p = job.deformation.p(job.n);
    let lambda = job.lambda.as_ref().expect("λ resolved");
    let nu = match nu_vector(&p, lambda) {
        Ok(nu) => nu,
        Err(e) => return rejection("classify", job, &e),
    };
    let l = l_decomposition(lambda, &nu);
    let json = json!({
        "command": "classify",
        "input": job.echo(),
        "w": rationals(job.deformation.w(job.n).coeffs()),
        "member": true,
        "nu": nu.0,
        "L": decomposition(&l),
        "dim_L": l.total_dim().to_string(),
    });
    let text = format!(
        "{}ν = {:?}\nL(λ): {} weights, dim {}\n{}",
        header(job, style),
        nu.0,
        l.len(),
        l.total_dim(),
        style.decomposition(&l)
    );
    Output { json, text, code: 0 }
}

pub fn dirac(job: &Job, style: &TextStyle, exec: Exec) -> Output {
    let p = job.deformation.p(job.n);
    let lambda = job.lambda.as_ref().expect("λ resolved");
    let report = match analyze(&p, lambda, exec) {
        Ok(r) => r,
        Err(e) => return rejection("dirac", job, &e),
    };
    let json = json!({
        "command": "dirac",
        "input": job.echo(),
        "w": rationals(job.deformation.w(job.n).coeffs()),
        "member": true,
        "degenerate": report.degenerate,
        "nu": report.nu.0,
        "L": decomposition(&report.l),
        "LS": decomposition(&report.ls),
        "dirac_cohomology": decomposition(&report.cohomology),
        "guaranteed_classes": Value::Array(report.guaranteed.iter().map(weight).collect()),
        "dim_L": report.l.total_dim().to_string(),
        "dim_LS": report.ls.total_dim().to_string(),
    });
    let guaranteed: Vec<String> = report
        .guaranteed
        .iter()
        .map(|g| style.tuple(&g.shifted()))
        .collect();
    let mut text = header(job, style);
    text.push_str(&format!("ν = {:?}\n", report.nu.0));
    if report.degenerate {
        text.push_str("note: P is constant along the last coordinate; ν_n = 0 by convention\n");
    }
    text.push_str(&format!(
        "L(λ): {} weights, dim {}\n{}",
        report.l.len(),
        report.l.total_dim(),
        style.decomposition(&report.l)
    ));
    text.push_str(&format!(
        "L(λ)⊗S: {} weights, dim {}\n{}",
        report.ls.len(),
        report.ls.total_dim(),
        style.decomposition(&report.ls)
    ));
    text.push_str(&format!(
        "Dirac cohomology: {} weights\n{}",
        report.cohomology.len(),
        style.decomposition(&report.cohomology)
    ));
    text.push_str(&format!("guaranteed classes (μ+ρ): {}\n", guaranteed.join(", ")));
    Output { json, text, code: 0 }
}
