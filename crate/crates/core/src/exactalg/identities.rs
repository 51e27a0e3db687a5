//! Symbolic verification of the decomposition identities behind the
//! indeterminacy locus of the base Pascal formula.
//!
//! With `delta` the determinant of the matrix `[[1,1,1],[a,b,c],[f,e,d]]`,
//! the line coordinates satisfy `u0 = P0*delta + Q0`, `u1 = P1*delta + Q1`,
//! `u2 = delta`, and each `u_i` vanishes identically under each of the six
//! coincidence conditions C1..C6. These are exact polynomial equalities,
//! checked by expansion, never numerically.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::exactalg::MultiPoly;
use crate::pascal::base_affine_polys;

fn var(n: &str) -> MultiPoly {
    MultiPoly::var(n)
}

fn mono(c: i64, vs: &[&str]) -> MultiPoly {
    MultiPoly::monomial(c, vs)
}

/// det [[1,1,1],[a,b,c],[f,e,d]] = -ad + ae + bd - bf - ce + cf.
pub fn delta_poly() -> MultiPoly {
    let terms = [
        mono(-1, &["a", "d"]),
        mono(1, &["a", "e"]),
        mono(1, &["b", "d"]),
        mono(-1, &["b", "f"]),
        mono(-1, &["c", "e"]),
        mono(1, &["c", "f"]),
    ];
    terms.iter().fold(MultiPoly::zero(), |acc, t| &acc + t)
}

/// The cofactor pair (P0, Q0) with u0 = P0*delta + Q0.
pub fn p0_q0() -> (MultiPoly, MultiPoly) {
    let p0 = &(&mono(1, &["b", "f"]) - &mono(1, &["b", "e"])) + &mono(1, &["c", "e"]);
    let q0 = {
        let f1 = &var("e") - &var("f");
        let f2 = &var("b") - &var("c");
        let f3 = &(&(&mono(1, &["a", "e"]) + &mono(1, &["b", "d"])) - &mono(1, &["b", "f"]))
            - &mono(1, &["c", "e"]);
        &(&f1 * &f2) * &f3
    };
    (p0, q0)
}

/// The cofactor pair (P1, Q1) with u1 = P1*delta + Q1.
pub fn p1_q1() -> (MultiPoly, MultiPoly) {
    let p1 = -&(&var("c") + &var("f"));
    let q1 = {
        let f1 = &var("f") - &var("e");
        let f2 = &var("b") - &var("c");
        let f3 = &(&(&var("a") - &var("c")) + &var("d")) - &var("f");
        &(&f1 * &f2) * &f3
    };
    (p1, q1)
}

/// The six coincidence conditions, as substitutions collapsing letters.
///
/// C1: a=b=c, C2: d=e=f, C3: a=b & e=f, C4: b=c & d=e, C5: a=c & d=f,
/// C6: a=f & b=e & c=d.
pub fn coincidence_conditions() -> Vec<(String, BTreeMap<String, MultiPoly>)> {
    let sub = |pairs: &[(&str, &str)]| -> BTreeMap<String, MultiPoly> {
        pairs
            .iter()
            .map(|&(from, to)| (from.to_string(), var(to)))
            .collect()
    };
    vec![
        ("C1".to_string(), sub(&[("b", "a"), ("c", "a")])),
        ("C2".to_string(), sub(&[("e", "d"), ("f", "d")])),
        ("C3".to_string(), sub(&[("b", "a"), ("f", "e")])),
        ("C4".to_string(), sub(&[("c", "b"), ("e", "d")])),
        ("C5".to_string(), sub(&[("c", "a"), ("f", "d")])),
        ("C6".to_string(), sub(&[("f", "a"), ("e", "b"), ("d", "c")])),
    ]
}

/// One named symbolic check.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub pass: bool,
}

/// Outcome of the full identity verification.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Verifies the cofactor identities and the vanishing of each line
/// coordinate under each coincidence condition. Failure is a report entry,
/// not an error; the build treats any failure as fatal via tests.
pub fn verify_prop22_identities() -> IdentityReport {
    let [u0, u1, u2] = base_affine_polys();
    let delta = delta_poly();
    let (p0, q0) = p0_q0();
    let (p1, q1) = p1_q1();

    let mut checks = Vec::new();
    checks.push(IdentityCheck {
        name: "u2 = delta".to_string(),
        pass: u2 == delta,
    });
    checks.push(IdentityCheck {
        name: "u0 = P0*delta + Q0".to_string(),
        pass: u0 == &(&p0 * &delta) + &q0,
    });
    checks.push(IdentityCheck {
        name: "u1 = P1*delta + Q1".to_string(),
        pass: u1 == &(&p1 * &delta) + &q1,
    });
    for (cname, bind) in coincidence_conditions() {
        for (i, u) in [&u0, &u1, &u2].into_iter().enumerate() {
            checks.push(IdentityCheck {
                name: format!("u{i} vanishes under {cname}"),
                pass: u.substitute(&bind).is_zero(),
            });
        }
    }
    IdentityReport { checks }
}
