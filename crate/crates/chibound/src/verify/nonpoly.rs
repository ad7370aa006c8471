//! Witnesses against polynomial chromatic bounds: for any candidate
//! polynomial p, the block X_{r, p(r)+1} has clique number r but chromatic
//! number above p(r).

use serde::Serialize;

use crate::construct::{build_block, ProviderConfig};
use crate::solve::clique_number;
use crate::verify::report::{Provenance, ValueRecord};
use crate::verify::{gated_chi, CheckOptions};
use crate::{Error, Result};

/// A polynomial with nonnegative integer coefficients, constant term first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Polynomial {
    coeffs: Vec<u64>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<u64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter(
                "a polynomial needs at least one coefficient".into(),
            ));
        }
        Ok(Polynomial { coeffs })
    }

    /// Parse the CLI encoding: comma-separated coefficients, constant first
    /// ("0,0,0,1" is x^3).
    pub fn parse(text: &str) -> Result<Self> {
        let coeffs = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| Error::Parse(format!("bad polynomial coefficient `{t}`")))
            })
            .collect::<Result<Vec<u64>>>()?;
        Polynomial::new(coeffs)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Exact evaluation at a nonnegative integer (Horner, overflow-checked).
    pub fn eval(&self, x: u64) -> Result<u128> {
        let mut acc: u128 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = acc
                .checked_mul(x as u128)
                .and_then(|a| a.checked_add(c as u128))
                .ok_or_else(|| Error::Overflow(format!("evaluating {self} at {x}")))?;
        }
        Ok(acc)
    }
}

impl std::fmt::Display for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 && self.coeffs.len() > 1 {
                continue;
            }
            terms.push(match (i, c) {
                (0, c) => format!("{c}"),
                (1, 1) => "x".to_string(),
                (1, c) => format!("{c}x"),
                (i, 1) => format!("x^{i}"),
                (i, c) => format!("{c}x^{i}"),
            });
        }
        if terms.is_empty() {
            terms.push("0".to_string());
        }
        write!(f, "{}", terms.join(" + "))
    }
}

/// Evidence that no polynomial bound p survives level r: the block at
/// m = p(r) + 1.
#[derive(Clone, Debug, Serialize)]
pub struct NonpolyReport {
    pub r: usize,
    pub poly: String,
    pub p_of_r: u128,
    pub m: usize,
    pub omega: ValueRecord,
    pub chi: ValueRecord,
    /// chi(X) > p(r) = p(omega(X)), with the provenance of `chi`.
    pub separation: bool,
    pub pass: bool,
    pub inconclusive: bool,
    pub notes: Vec<String>,
}

impl NonpolyReport {
    pub fn to_check_report(&self) -> crate::verify::CheckReport {
        use crate::verify::CheckReport;
        let mut report = CheckReport::new(
            "nonpoly-witness",
            "the block at m = p(r) + 1 has chi above p(r) while omega stays r",
            serde_json::json!({
                "r": self.r,
                "poly": self.poly,
                "p_of_r": self.p_of_r.to_string(),
                "m": self.m,
            }),
        );
        report.values.push(self.omega.clone());
        report.values.push(self.chi.clone());
        report.notes.extend(self.notes.iter().cloned());
        report.pass = self.pass;
        report.inconclusive = self.inconclusive;
        report
    }
}

/// Pick m = p(r) + 1, build X_{r,m}, and check chi(X) > p(r) while
/// omega(X) = r. The chromatic side is solver-proved when the block is
/// small enough, otherwise it stays a labeled by-construction claim.
pub fn find_nonpoly_witness(
    r: usize,
    p: &Polynomial,
    provider: &ProviderConfig,
    opts: &CheckOptions,
) -> Result<(usize, NonpolyReport)> {
    let p_of_r = p.eval(r as u64)?;
    let m = usize::try_from(p_of_r)
        .ok()
        .and_then(|v| v.checked_add(1))
        .ok_or_else(|| Error::Overflow(format!("witness index p({r}) + 1 = {p_of_r} + 1")))?;

    let block = build_block(r, m, provider, &opts.solve)?;
    let mut notes = Vec::new();
    let mut hard_fail = false;
    let mut undecided = false;

    let omega = clique_number(&block.graph, &opts.solve);
    let omega_record = ValueRecord::new(
        "omega",
        omega.value as u64,
        if omega.is_exact() {
            Provenance::Exact
        } else {
            Provenance::Bound
        },
    );
    if omega.is_exact() {
        if omega.value != r {
            hard_fail = true;
            notes.push(format!(
                "omega(X) = {} but the construction promises {r}",
                omega.value
            ));
        }
    } else {
        undecided = true;
        notes.push("clique solve timed out; omega is only bounded from below".into());
    }

    let chi = gated_chi(
        &block.graph,
        Some(block.spec.claimed_chi_lb.max(r)),
        opts,
    );
    // exact values and certified lower bounds both prove the separation;
    // a claim asserts it subject to its label
    let separation = chi.value as u128 > p_of_r;
    if !separation {
        if chi.provenance == Provenance::Exact {
            hard_fail = true;
            notes.push(format!(
                "chi(X) = {} does not exceed p({r}) = {p_of_r}",
                chi.value
            ));
        } else {
            undecided = true;
            notes.push(format!(
                "chi(X) is only known as {} {} and does not yet exceed p({r}) = {p_of_r}",
                chi.provenance, chi.value
            ));
        }
    }
    if chi.provenance == Provenance::Claim {
        notes.push(format!(
            "chi value {} is the by-construction claim (order {} is beyond the exact-solve cap {})",
            chi.value,
            block.graph.order(),
            opts.exact_order_cap
        ));
    }

    let report = NonpolyReport {
        r,
        poly: p.to_string(),
        p_of_r,
        m,
        omega: omega_record,
        chi: ValueRecord::new("chi", chi.value as u64, chi.provenance),
        separation,
        pass: !hard_fail && !undecided,
        inconclusive: undecided && !hard_fail,
        notes,
    };
    Ok((m, report))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_parse_and_eval() {
        let p = Polynomial::parse("0,0,0,1").unwrap(); // x^3
        assert_eq!(p.degree(), 3);
        assert_eq!(p.eval(2).unwrap(), 8);
        assert_eq!(p.to_string(), "x^3");

        let q = Polynomial::parse("1,2").unwrap(); // 1 + 2x
        assert_eq!(q.eval(3).unwrap(), 7);
        assert_eq!(q.to_string(), "1 + 2x");

        assert!(Polynomial::parse("").is_err());
        assert!(Polynomial::parse("1,a").is_err());
        assert!(Polynomial::new(vec![]).is_err());
    }

    #[test]
    fn constant_zero_polynomial_displays() {
        assert_eq!(Polynomial::new(vec![0]).unwrap().to_string(), "0");
    }

    #[test]
    fn eval_overflow_is_caught() {
        let p = Polynomial::new(vec![0, 0, u64::MAX]).unwrap();
        assert!(p.eval(u64::MAX).is_err());
    }

    #[test]
    fn witness_for_identity_polynomial() {
        let p = Polynomial::parse("0,1").unwrap(); // p(x) = x
        let (m, report) =
            find_nonpoly_witness(2, &p, &ProviderConfig::Tower, &CheckOptions::default())
                .unwrap();
        assert_eq!(m, 3);
        assert!(report.pass);
        assert!(report.separation);
        assert_eq!(report.chi.value, 3);
        assert_eq!(report.chi.provenance, Provenance::Exact);
        assert_eq!(report.omega.value, 2);
    }

    #[test]
    fn witness_for_cubic_is_a_claim() {
        let p = Polynomial::parse("0,0,0,1").unwrap(); // x^3
        let (m, report) =
            find_nonpoly_witness(2, &p, &ProviderConfig::Tower, &CheckOptions::default())
                .unwrap();
        assert_eq!(m, 9);
        assert!(report.pass);
        assert_eq!(report.chi.provenance, Provenance::Claim);
        assert_eq!(report.chi.value, 9);
        assert_eq!(report.omega.value, 2);
        assert_eq!(report.omega.provenance, Provenance::Exact);
    }
}
