//! Dense integer coefficient grids for the four-symbol addition check.
//!
//! The Hermite-based Genocchi polynomials have integer coefficients, and
//! with integer shifts all intermediate values stay integral, so the hot
//! loop runs on `BigInt` without any gcd reductions.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::poly::{BivarPoly, Exponents};
use crate::rational::Rational;

/// `rows[q][p]` is the coefficient of `x^p y^q`. Grids compared with each
/// other always share dimensions, so `==` is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct IntGrid {
    rows: Vec<Vec<BigInt>>,
}

impl IntGrid {
    pub(crate) fn zero(degx: usize, degy: usize) -> Self {
        IntGrid {
            rows: vec![vec![BigInt::zero(); degx + 1]; degy + 1],
        }
    }

    /// `None` if `p` has a non-integer coefficient or does not fit.
    pub(crate) fn from_poly(p: &BivarPoly, degx: usize, degy: usize) -> Option<Self> {
        let mut g = IntGrid::zero(degx, degy);
        for (e, c) in p.terms() {
            if !c.is_integer() {
                return None;
            }
            *g.rows.get_mut(e.y as usize)?.get_mut(e.x as usize)? = c.numer().clone();
        }
        Some(g)
    }

    pub(crate) fn to_poly(&self) -> BivarPoly {
        BivarPoly::from_terms(self.rows.iter().enumerate().flat_map(|(q, row)| {
            row.iter().enumerate().map(move |(p, c)| {
                (
                    Exponents::new(p as u32, q as u32),
                    Rational::from_integer(c.clone()),
                )
            })
        }))
    }

    pub(crate) fn evaluate(&self, u: i64, v: i64) -> BigInt {
        let mut acc = BigInt::zero();
        for row in self.rows.iter().rev() {
            let mut inner = BigInt::zero();
            for c in row.iter().rev() {
                inner = inner * u + c;
            }
            acc = acc * v + inner;
        }
        acc
    }

    /// `p(x + u, y + v)`.
    pub(crate) fn translate(&self, u: i64, v: i64) -> IntGrid {
        let mut out = self.clone();
        if u != 0 {
            for row in out.rows.iter_mut() {
                if let Some(top) = row.iter().rposition(|c| !c.is_zero()) {
                    taylor_shift(&mut row[..=top], u);
                }
            }
        }
        if v != 0 {
            let width = out.rows.first().map_or(0, Vec::len);
            let mut column = Vec::with_capacity(out.rows.len());
            for p in 0..width {
                column.clear();
                column.extend(out.rows.iter_mut().map(|row| std::mem::take(&mut row[p])));
                if let Some(top) = column.iter().rposition(|c| !c.is_zero()) {
                    taylor_shift(&mut column[..=top], v);
                }
                for (row, c) in out.rows.iter_mut().zip(column.drain(..)) {
                    row[p] = c;
                }
            }
        }
        out
    }

    /// `self += c * other`; `other` must not be larger than `self`.
    pub(crate) fn add_scaled(&mut self, other: &IntGrid, c: &BigInt) {
        for (dst, src) in self.rows.iter_mut().zip(&other.rows) {
            for (d, s) in dst.iter_mut().zip(src) {
                if !s.is_zero() {
                    *d += s * c;
                }
            }
        }
    }
}

fn taylor_shift(a: &mut [BigInt], c: i64) {
    let n = a.len();
    for i in 0..n.saturating_sub(1) {
        for k in (i..n - 1).rev() {
            if a[k + 1].is_zero() {
                continue;
            }
            let t = &a[k + 1] * c;
            a[k] += t;
        }
    }
}
