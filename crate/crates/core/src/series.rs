//! Truncated exponential generating functions in `t` with polynomial
//! coefficients.
//!
//! Coefficients are stored in ordinary normalization (`coeffs[n]` multiplies
//! `t^n`); the factor `n!` is applied only by [`EgfSeries::egf_coefficient`].

use crate::error::{Error, Result};
use crate::poly::BivarPoly;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EgfSeries {
    coeffs: Vec<BivarPoly>,
}

impl EgfSeries {
    /// Series with the given ordinary coefficients; the order is
    /// `coeffs.len() - 1`.
    ///
    /// # Panics
    /// If `coeffs` is empty.
    pub fn from_coeffs(coeffs: Vec<BivarPoly>) -> Self {
        assert!(!coeffs.is_empty(), "a series holds at least t^0");
        EgfSeries { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        EgfSeries {
            coeffs: vec![BivarPoly::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        EgfSeries::constant(BivarPoly::one(), order)
    }

    pub fn constant(c: BivarPoly, order: usize) -> Self {
        EgfSeries::monomial(c, 0, order)
    }

    /// `c * t^k`, truncated (zero when `k > order`).
    pub fn monomial(c: BivarPoly, k: usize, order: usize) -> Self {
        let mut s = EgfSeries::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BivarPoly] {
        &self.coeffs
    }

    /// Ordinary coefficient of `t^n`.
    pub fn coeff(&self, n: usize) -> Result<&BivarPoly> {
        self.coeffs.get(n).ok_or(Error::IndexOutOfRange {
            index: n,
            order: self.order(),
        })
    }

    /// The EGF coefficient `n! * [t^n]`.
    pub fn egf_coefficient(&self, n: usize) -> Result<BivarPoly> {
        Ok(self.coeff(n)?.scale(&Rational::factorial(n)))
    }

    /// All EGF coefficients `0..=order`.
    pub fn egf_coefficients(&self) -> Vec<BivarPoly> {
        let mut fact = Rational::one();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| {
                if n > 0 {
                    fact *= Rational::from(n);
                }
                c.scale(&fact)
            })
            .collect()
    }

    /// Drops every term above `t^order`.
    pub fn truncate(&self, order: usize) -> Result<Self> {
        if order > self.order() {
            return Err(Error::IndexOutOfRange {
                index: order,
                order: self.order(),
            });
        }
        Ok(EgfSeries {
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    fn check_order(&self, other: &EgfSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &EgfSeries) -> Result<Self> {
        self.check_order(other)?;
        Ok(EgfSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn sub(&self, other: &EgfSeries) -> Result<Self> {
        self.check_order(other)?;
        Ok(EgfSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> Self {
        EgfSeries {
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &EgfSeries) -> Result<Self> {
        self.check_order(other)?;
        let order = self.order();
        let mut out = vec![BivarPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (k, b) in other.coeffs[..=order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + k] += a * b;
            }
        }
        Ok(EgfSeries { coeffs: out })
    }

    /// Multiplicative inverse. The constant term must be a non-zero
    /// rational with no `x`/`y` part.
    pub fn inverse(&self) -> Result<Self> {
        let lead = self.coeffs[0]
            .as_constant()
            .filter(|c| !c.is_zero())
            .ok_or(Error::NotAUnit)?;
        let lead_inv = lead.inv()?;
        let neg_lead_inv = -&lead_inv;
        let order = self.order();
        let mut out: Vec<BivarPoly> = Vec::with_capacity(order + 1);
        out.push(BivarPoly::constant(lead_inv));
        for n in 1..=order {
            let mut acc = BivarPoly::zero();
            for k in 1..=n {
                let a = &self.coeffs[k];
                if a.is_zero() || out[n - k].is_zero() {
                    continue;
                }
                acc += a * &out[n - k];
            }
            out.push(acc.scale(&neg_lead_inv));
        }
        Ok(EgfSeries { coeffs: out })
    }

    /// `self^exp` by repeated squaring; `self^0 = 1`.
    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = EgfSeries::one(self.order());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same order");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same order");
            }
        }
        acc
    }

    /// `exp(c * t^j)` truncated at `order`: the coefficient of `t^(j m)` is
    /// `c^m / m!`, every other coefficient is zero.
    pub fn exp_linear(c: &BivarPoly, j: usize, order: usize) -> Result<Self> {
        if j == 0 {
            return Err(Error::InvalidParameter(
                "exp_linear needs a positive power of t".into(),
            ));
        }
        let mut s = EgfSeries::zero(order);
        let mut term = BivarPoly::one();
        for m in 0..=order / j {
            if m > 0 {
                term = (&term * c).scale(&Rational::new(1, m as u64).expect("m > 0"));
            }
            s.coeffs[j * m] = term.clone();
        }
        Ok(s)
    }
}
