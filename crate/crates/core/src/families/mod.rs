//! The polynomial families, each defined by its generating function.
//!
//! Every family is computed from its generating function; the closed forms
//! (`*_by_binomial_sum`, [`gould_hopper_closed_form`]) are independent
//! routes used for cross-checking, never the source of values.

mod kernel;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use kernel::Kernel;

use crate::error::{Error, Result};
use crate::poly::BivarPoly;
use crate::rational::{binomial, factorial, Rational};
use crate::series::EgfSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    ClassicalGenocchi,
    SecondKindGenocchi,
    SecondKindEuler,
    GouldHopper,
    HermiteGenocchi,
    HermiteEuler,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::ClassicalGenocchi,
        Family::SecondKindGenocchi,
        Family::SecondKindEuler,
        Family::GouldHopper,
        Family::HermiteGenocchi,
        Family::HermiteEuler,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::ClassicalGenocchi => "classical-genocchi",
            Family::SecondKindGenocchi => "second-kind-genocchi",
            Family::SecondKindEuler => "second-kind-euler",
            Family::GouldHopper => "gould-hopper",
            Family::HermiteGenocchi => "hermite-genocchi",
            Family::HermiteEuler => "hermite-euler",
        }
    }

    /// Families in `x` and `y` built on `exp(x t + y t^j)`.
    pub fn uses_j(self) -> bool {
        matches!(
            self,
            Family::GouldHopper | Family::HermiteGenocchi | Family::HermiteEuler
        )
    }

    pub fn uses_order(self) -> bool {
        self != Family::GouldHopper
    }

    /// Whether a number sequence (the `e^{xt}` factor omitted) is defined.
    pub fn has_numbers(self) -> bool {
        !self.uses_j()
    }

    fn kernel(self) -> Option<Kernel> {
        match self {
            Family::ClassicalGenocchi => Some(Kernel::ClassicalGenocchi),
            Family::SecondKindGenocchi | Family::HermiteGenocchi => {
                Some(Kernel::SecondKindGenocchi)
            }
            Family::SecondKindEuler | Family::HermiteEuler => Some(Kernel::SecondKindEuler),
            Family::GouldHopper => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown family {s:?}")))
    }
}

/// A family together with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct FamilySpec {
    pub family: Family,
    /// Power of `t` attached to `y`; `None` for families without `y`.
    pub j: Option<u32>,
    /// Order (power of the kernel); `None` for Gould-Hopper.
    pub a: Option<u32>,
}

impl FamilySpec {
    /// Validates and fills defaults (`j = 2`, `a = 1`).
    ///
    /// Gould-Hopper needs `j >= 2`; the Hermite-based families accept
    /// `j >= 1`.
    pub fn new(family: Family, j: Option<u32>, a: Option<u32>) -> Result<Self> {
        let j = match (family.uses_j(), j) {
            (false, Some(_)) => {
                return Err(Error::InvalidParameter(format!(
                    "--j does not apply to {family}"
                )))
            }
            (false, None) => None,
            (true, j) => {
                let j = j.unwrap_or(2);
                let min = if family == Family::GouldHopper { 2 } else { 1 };
                if j < min {
                    return Err(Error::InvalidParameter(format!(
                        "{family} needs j >= {min}, got {j}"
                    )));
                }
                Some(j)
            }
        };
        let a = match (family.uses_order(), a) {
            (false, Some(_)) => {
                return Err(Error::InvalidParameter(format!(
                    "--a does not apply to {family}"
                )))
            }
            (false, None) => None,
            (true, a) => Some(a.unwrap_or(1)),
        };
        Ok(FamilySpec { family, j, a })
    }

    /// Hermite-based family with `j = 1`, outside the range the identities
    /// are stated for.
    pub fn is_degenerate_j(&self) -> bool {
        self.j == Some(1)
    }

    fn check_numbers(&self, symbolic: bool) -> Result<()> {
        if !symbolic && !self.family.has_numbers() {
            return Err(Error::InvalidParameter(format!(
                "{} has no number sequence",
                self.family
            )));
        }
        Ok(())
    }

    /// Values for `n = 0..=n_max`, from one series truncated at `n_max`.
    pub fn sequence(&self, n_max: usize, symbolic: bool) -> Result<Vec<FamilyValue>> {
        self.check_numbers(symbolic)?;
        let polys = match (self.family.kernel(), self.j) {
            (kernel, Some(j)) => hermite_sequence(kernel, self.a.unwrap_or(0), j, n_max)?,
            (Some(kernel), None) => kernel_sequence(kernel, self.a.unwrap_or(1), n_max, symbolic),
            (None, None) => unreachable!("Gould-Hopper always carries j"),
        };
        Ok(polys
            .into_iter()
            .enumerate()
            .map(|(n, value)| FamilyValue { n, value })
            .collect())
    }

    /// The single member of degree `n`, computed at truncation order `n`.
    pub fn value(&self, n: usize, symbolic: bool) -> Result<FamilyValue> {
        Ok(self
            .sequence(n, symbolic)?
            .pop()
            .expect("sequence has n + 1 members"))
    }
}

/// Member `n` of a family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyValue {
    pub n: usize,
    pub value: BivarPoly,
}

impl FamilyValue {
    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        self.value.evaluate(x, y)
    }
}

/// Exact value of a family member at `(x, y)`.
pub fn evaluate(v: &FamilyValue, x: &Rational, y: &Rational) -> Rational {
    v.evaluate(x, y)
}

fn exp_x(order: usize) -> EgfSeries {
    EgfSeries::exp_linear(&BivarPoly::x(), 1, order).expect("j = 1")
}

/// `exp(x t + y t^j)` truncated at `order`.
pub fn gould_hopper_series(j: u32, order: usize) -> Result<EgfSeries> {
    let ey = EgfSeries::exp_linear(&BivarPoly::y(), j as usize, order)?;
    exp_x(order).mul(&ey)
}

/// EGF coefficients `0..=n_max` of `kernel^a * e^{xt}` (or `kernel^a` alone
/// when `symbolic` is false).
pub fn kernel_sequence(kernel: Kernel, a: u32, n_max: usize, symbolic: bool) -> Vec<BivarPoly> {
    let k = kernel.power(n_max, a);
    if symbolic {
        k.mul(&exp_x(n_max)).expect("same order").egf_coefficients()
    } else {
        k.egf_coefficients()
    }
}

/// EGF coefficients `0..=n_max` of `kernel^a * exp(x t + y t^j)`; with no
/// kernel this is the Gould-Hopper sequence.
pub fn hermite_sequence(
    kernel: Option<Kernel>,
    a: u32,
    j: u32,
    n_max: usize,
) -> Result<Vec<BivarPoly>> {
    let gh = gould_hopper_series(j, n_max)?;
    let s = match kernel {
        Some(k) if a > 0 => k.power(n_max, a).mul(&gh)?,
        _ => gh,
    };
    Ok(s.egf_coefficients())
}

fn single(polys: Vec<BivarPoly>, n: usize) -> FamilyValue {
    let value = polys.into_iter().nth(n).expect("sequence reaches n");
    FamilyValue { n, value }
}

/// `G_n` (numbers) or `G_n(x)` from `2t/(e^t+1) * e^{xt}`.
pub fn classical_genocchi(n: usize, symbolic: bool) -> FamilyValue {
    single(
        kernel_sequence(Kernel::ClassicalGenocchi, 1, n, symbolic),
        n,
    )
}

/// `G_n(x) = sum_k C(n,k) G_k x^(n-k)`, with the numbers `G_k` taken from
/// the number generating function.
pub fn classical_genocchi_by_binomial_sum(n: usize) -> FamilyValue {
    binomial_sum(Kernel::ClassicalGenocchi, n)
}

/// Higher-order second-kind Genocchi: `(2t/(e^t+e^-t))^a * e^{xt}`.
pub fn second_kind_genocchi(n: usize, a: u32, symbolic: bool) -> FamilyValue {
    single(
        kernel_sequence(Kernel::SecondKindGenocchi, a, n, symbolic),
        n,
    )
}

/// Order-one second-kind Genocchi polynomial via the binomial expansion
/// over the second-kind Genocchi numbers.
pub fn second_kind_genocchi_by_binomial_sum(n: usize) -> FamilyValue {
    binomial_sum(Kernel::SecondKindGenocchi, n)
}

fn binomial_sum(kernel: Kernel, n: usize) -> FamilyValue {
    let numbers = kernel_sequence(kernel, 1, n, false);
    let value = BivarPoly::from_terms(numbers.iter().enumerate().map(|(k, num)| {
        let c = num.as_constant().expect("numbers are constants");
        (
            crate::poly::Exponents::new((n - k) as u32, 0),
            c * Rational::from_integer(binomial(n, k)),
        )
    }));
    FamilyValue { n, value }
}

/// Higher-order second-kind Euler: `(2/(e^t+e^-t))^a * e^{xt}`.
pub fn second_kind_euler(n: usize, a: u32, symbolic: bool) -> FamilyValue {
    single(kernel_sequence(Kernel::SecondKindEuler, a, n, symbolic), n)
}

fn require_gould_hopper_j(j: u32) -> Result<()> {
    if j < 2 {
        return Err(Error::InvalidParameter(format!(
            "gould-hopper needs j >= 2, got {j}"
        )));
    }
    Ok(())
}

/// `H_n^(j)(x, y)` from `exp(x t + y t^j)`.
pub fn gould_hopper(n: usize, j: u32) -> Result<FamilyValue> {
    require_gould_hopper_j(j)?;
    Ok(single(hermite_sequence(None, 0, j, n)?, n))
}

/// `H_n^(j)(x, y) = n! sum_{r <= n/j} x^(n - j r) y^r / (r! (n - j r)!)`.
pub fn gould_hopper_closed_form(n: usize, j: u32) -> Result<FamilyValue> {
    require_gould_hopper_j(j)?;
    let j = j as usize;
    let nf = factorial(n);
    let value = BivarPoly::from_terms((0..=n / j).map(|r| {
        let c = &nf / (factorial(r) * factorial(n - j * r));
        (
            crate::poly::Exponents::new((n - j * r) as u32, r as u32),
            Rational::from_integer(c),
        )
    }));
    Ok(FamilyValue { n, value })
}

fn require_positive_j(j: u32) -> Result<()> {
    if j == 0 {
        return Err(Error::InvalidParameter("j must be at least 1".into()));
    }
    Ok(())
}

/// Hermite-based second-kind Genocchi `_H G_n^(j,a)(x, y)`.
pub fn hermite_genocchi(n: usize, j: u32, a: u32) -> Result<FamilyValue> {
    require_positive_j(j)?;
    Ok(single(
        hermite_sequence(Some(Kernel::SecondKindGenocchi), a, j, n)?,
        n,
    ))
}

/// Hermite-based second-kind Euler `_H E_n^(j,a)(x, y)`, from its own
/// generating function `(2/(e^t+e^-t))^a exp(x t + y t^j)`.
pub fn hermite_euler(n: usize, j: u32, a: u32) -> Result<FamilyValue> {
    require_positive_j(j)?;
    Ok(single(
        hermite_sequence(Some(Kernel::SecondKindEuler), a, j, n)?,
        n,
    ))
}
