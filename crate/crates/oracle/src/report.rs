//! JSON computation reports.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use propwheel::diagrams::{binomial, partitions_into_parts, stirling2, surjection_count};
use serde::Serialize;

use crate::cohomology::{ext_lambda_lambda, ext_mixed_dimensions};
use crate::complex::{build_complex, Limits};
use crate::error::OracleError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: String) -> Check {
        Check {
            name: name.to_string(),
            passed,
            detail,
        }
    }
}

/// `{"l", "q", "j", "dims", "checks"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub l: usize,
    pub q: usize,
    pub j: usize,
    pub dims: BTreeMap<usize, usize>,
    pub checks: Vec<Check>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// `Σ_s C(q, s) |Surj(s, l)| S(q - s, j)`.
pub fn kunneth_count(l: usize, j: usize, q: usize) -> BigUint {
    (0..=q)
        .map(|s| binomial(q, s) * surjection_count(s, l) * stirling2(q - s, j))
        .sum()
}

fn concentration(
    dims: &BTreeMap<usize, usize>,
    degree: Option<usize>,
    expected: &BigUint,
) -> Check {
    let total: usize = dims.values().sum();
    let concentrated = match degree {
        Some(t) => dims.keys().all(|&k| k == t),
        None => dims.is_empty(),
    };
    let passed = concentrated && BigUint::from(total) == *expected;
    Check::new(
        "concentrated",
        passed,
        format!("expected {expected} in degree {degree:?}, found {dims:?}"),
    )
}

/// Report for `Ext*(a^{⊗l} ⊗ Λ^j a, a^{⊗q})`.
pub fn ext_report(
    l: usize,
    j: usize,
    q: usize,
    limits: &Limits,
) -> Result<OracleReport, OracleError> {
    let complex = build_complex(l + j, q, limits)?;
    let dims = ext_mixed_dimensions(l, j, q, limits)?;
    let degree = q.checked_sub(l + j);
    let expected = kunneth_count(l, j, q);
    let mut checks = vec![Check::new(
        "d_squared_zero",
        complex.d_squared_is_zero(),
        format!("cochain dimensions {:?}", complex.dimensions()),
    )];
    checks.push(concentration(&dims, degree, &expected));
    Ok(OracleReport {
        l,
        q,
        j,
        dims,
        checks,
    })
}

/// Report for `Ext*(Λ^n a, Λ^m a)`; `l` holds `n` and `j` is zero.
pub fn lambda_lambda_report(
    n: usize,
    m: usize,
    limits: &Limits,
) -> Result<OracleReport, OracleError> {
    let complex = build_complex(n, m, limits)?;
    let dims = ext_lambda_lambda(n, m, limits)?;
    let expected = if n == 0 {
        BigUint::from(u32::from(m == 0))
    } else {
        partitions_into_parts(m, n)
    };
    let checks = vec![
        Check::new(
            "d_squared_zero",
            complex.d_squared_is_zero(),
            format!("cochain dimensions {:?}", complex.dimensions()),
        ),
        concentration(&dims, m.checked_sub(n), &expected),
    ];
    Ok(OracleReport {
        l: n,
        q: m,
        j: 0,
        dims,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_shape() {
        let r = ext_report(1, 0, 3, &Limits::default()).unwrap();
        assert!(r.passed());
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["dims"]["2"], 1);
        assert_eq!(v["l"], 1);
        assert_eq!(v["j"], 0);
        assert!(v["checks"].as_array().unwrap().len() >= 2);
        assert!(lambda_lambda_report(2, 4, &Limits::default())
            .unwrap()
            .passed());
    }

    #[test]
    fn kunneth_counts() {
        assert_eq!(kunneth_count(1, 0, 3), BigUint::from(1u32));
        assert_eq!(kunneth_count(0, 2, 3), BigUint::from(3u32));
        // E(2,1): μ and the two one-wheel diagrams
        assert_eq!(kunneth_count(1, 1, 2), BigUint::from(2u32));
    }
}
