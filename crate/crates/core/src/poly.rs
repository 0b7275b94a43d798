//! Sparse polynomials in two symbols `x`, `y` over [`Rational`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use serde::{Deserialize, Serialize};

use crate::rational::{binomial, Rational};

/// Exponent pair of a monomial `x^x * y^y`. Ordered by `x` then `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Exponents {
    pub x: u32,
    pub y: u32,
}

impl Exponents {
    pub const fn new(x: u32, y: u32) -> Self {
        Exponents { x, y }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Var {
    X,
    Y,
}

/// Serialized form of one monomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub degx: u32,
    pub degy: u32,
    pub coeff: Rational,
}

/// A polynomial in `x` and `y` with rational coefficients.
///
/// Stored as a sparse map that never holds a zero coefficient, so two
/// polynomials are equal exactly when their maps are equal.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "Vec<TermRecord>", from = "Vec<TermRecord>")]
pub struct BivarPoly {
    terms: BTreeMap<Exponents, Rational>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly::default()
    }

    pub fn one() -> Self {
        BivarPoly::constant(Rational::one())
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        BivarPoly::monomial(c, 0, 0)
    }

    pub fn x() -> Self {
        BivarPoly::monomial(1, 1, 0)
    }

    pub fn y() -> Self {
        BivarPoly::monomial(1, 0, 1)
    }

    pub fn monomial(c: impl Into<Rational>, degx: u32, degy: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Exponents::new(degx, degy), c);
        }
        BivarPoly { terms }
    }

    /// Builds a polynomial from possibly repeated or zero terms.
    pub fn from_terms<I>(iter: I) -> Self
    where
        I: IntoIterator<Item = (Exponents, Rational)>,
    {
        let mut p = BivarPoly::zero();
        for (e, c) in iter {
            p.add_term(e, &c);
        }
        p
    }

    fn add_term(&mut self, e: Exponents, c: &Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if this polynomial has no `x` or `y` part.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Exponents::new(0, 0)).cloned(),
            _ => None,
        }
    }

    pub fn coeff(&self, degx: u32, degy: u32) -> Rational {
        self.terms
            .get(&Exponents::new(degx, degy))
            .cloned()
            .unwrap_or_default()
    }

    /// Terms in ascending `(degx, degy)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &Rational)> {
        self.terms.iter()
    }

    /// Serialized records, sorted by `degx` then `degy`, both descending.
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .rev()
            .map(|(e, c)| TermRecord {
                degx: e.x,
                degy: e.y,
                coeff: c.clone(),
            })
            .collect()
    }

    /// Degree in `x`, or `None` for the zero polynomial.
    pub fn degree_x(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.x).max()
    }

    pub fn degree_y(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.y).max()
    }

    pub fn scale(&self, c: &Rational) -> BivarPoly {
        if c.is_zero() {
            return BivarPoly::zero();
        }
        BivarPoly {
            terms: self.terms.iter().map(|(e, v)| (*e, v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> BivarPoly {
        let mut acc = BivarPoly::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Simultaneous substitution `x <- x_val`, `y <- y_val`.
    pub fn substitute(&self, x_val: &BivarPoly, y_val: &BivarPoly) -> BivarPoly {
        if self.is_zero() {
            return BivarPoly::zero();
        }
        let x_pows = powers(x_val, self.degree_x().unwrap_or(0));
        let y_pows = powers(y_val, self.degree_y().unwrap_or(0));

        // Group by y-degree so each y power is multiplied in once.
        let mut by_y: BTreeMap<u32, BivarPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let slot = by_y.entry(e.y).or_default();
            *slot += x_pows[e.x as usize].scale(c);
        }
        by_y.into_iter()
            .map(|(dy, inner)| &inner * &y_pows[dy as usize])
            .fold(BivarPoly::zero(), |acc, p| acc + p)
    }

    /// Formal partial derivative in `var`, applied `times` times.
    pub fn partial(&self, var: Var, times: u32) -> BivarPoly {
        if times == 0 {
            return self.clone();
        }
        let mut out = BivarPoly::zero();
        for (e, c) in &self.terms {
            let d = match var {
                Var::X => e.x,
                Var::Y => e.y,
            };
            if d < times {
                continue;
            }
            // falling factorial d (d-1) ... (d-times+1)
            let ff: u64 = ((d - times + 1)..=d).map(u64::from).product();
            let e = match var {
                Var::X => Exponents::new(e.x - times, e.y),
                Var::Y => Exponents::new(e.x, e.y - times),
            };
            out.add_term(e, &(c * &Rational::from(ff)));
        }
        out
    }

    /// Exact value at the point `(x, y)`.
    pub fn evaluate(&self, x: &Rational, y: &Rational) -> Rational {
        let xp = scalar_powers(x, self.degree_x().unwrap_or(0));
        let yp = scalar_powers(y, self.degree_y().unwrap_or(0));
        self.terms
            .iter()
            .map(|(e, c)| c * &xp[e.x as usize] * &yp[e.y as usize])
            .sum()
    }

    /// `p(x + dx, y + dy)` for rational shifts, via Taylor shifts of the
    /// dense coefficient grid. Equal to
    /// `substitute(x + dx, y + dy)` but much cheaper.
    pub fn translate(&self, dx: &Rational, dy: &Rational) -> BivarPoly {
        let (Some(mx), Some(my)) = (self.degree_x(), self.degree_y()) else {
            return BivarPoly::zero();
        };
        let (mx, my) = (mx as usize, my as usize);
        let mut grid = vec![vec![Rational::zero(); mx + 1]; my + 1];
        for (e, c) in &self.terms {
            grid[e.y as usize][e.x as usize] = c.clone();
        }
        if !dx.is_zero() {
            for row in grid.iter_mut() {
                let top = match row.iter().rposition(|c| !c.is_zero()) {
                    Some(t) => t,
                    None => continue,
                };
                taylor_shift(&mut row[..=top], dx);
            }
        }
        if !dy.is_zero() {
            let mut column = Vec::with_capacity(my + 1);
            for col in 0..=mx {
                column.clear();
                column.extend(grid.iter_mut().map(|row| std::mem::take(&mut row[col])));
                let Some(top) = column.iter().rposition(|c| !c.is_zero()) else {
                    continue;
                };
                taylor_shift(&mut column[..=top], dy);
                for (row, v) in grid.iter_mut().zip(column.drain(..)) {
                    row[col] = v;
                }
            }
        }
        let mut out = BivarPoly::zero();
        for (degy, row) in grid.into_iter().enumerate() {
            for (degx, c) in row.into_iter().enumerate() {
                if !c.is_zero() {
                    out.terms
                        .insert(Exponents::new(degx as u32, degy as u32), c);
                }
            }
        }
        out
    }

    /// Binomial expansion of `(x + y)^n` as a polynomial.
    pub fn binomial_power(n: u32) -> BivarPoly {
        BivarPoly::from_terms((0..=n).map(|k| {
            (
                Exponents::new(k, n - k),
                Rational::from_integer(binomial(n as usize, k as usize)),
            )
        }))
    }
}

/// In-place `a(x) <- a(x + c)` for dense coefficients `a[k]` of `x^k`.
fn taylor_shift(a: &mut [Rational], c: &Rational) {
    let n = a.len();
    if n < 2 {
        return;
    }
    for i in 0..n - 1 {
        for k in (i..n - 1).rev() {
            if a[k + 1].is_zero() {
                continue;
            }
            let t = c * &a[k + 1];
            a[k] += t;
        }
    }
}

fn powers(p: &BivarPoly, max: u32) -> Vec<BivarPoly> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(BivarPoly::one());
    for i in 1..=max as usize {
        let next = &out[i - 1] * p;
        out.push(next);
    }
    out
}

fn scalar_powers(v: &Rational, max: u32) -> Vec<Rational> {
    let mut out = Vec::with_capacity(max as usize + 1);
    out.push(Rational::one());
    for i in 1..=max as usize {
        let next = &out[i - 1] * v;
        out.push(next);
    }
    out
}

impl From<BivarPoly> for Vec<TermRecord> {
    fn from(p: BivarPoly) -> Self {
        p.to_records()
    }
}

impl From<Vec<TermRecord>> for BivarPoly {
    fn from(records: Vec<TermRecord>) -> Self {
        BivarPoly::from_terms(
            records
                .into_iter()
                .map(|r| (Exponents::new(r.degx, r.degy), r.coeff)),
        )
    }
}

impl From<Rational> for BivarPoly {
    fn from(c: Rational) -> Self {
        BivarPoly::constant(c)
    }
}

impl AddAssign<&BivarPoly> for BivarPoly {
    fn add_assign(&mut self, rhs: &BivarPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c);
        }
    }
}

impl AddAssign<BivarPoly> for BivarPoly {
    fn add_assign(&mut self, rhs: BivarPoly) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            *self += &lhs;
        } else {
            *self += &rhs;
        }
    }
}

impl SubAssign<&BivarPoly> for BivarPoly {
    fn sub_assign(&mut self, rhs: &BivarPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, &-c);
        }
    }
}

impl Add<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for BivarPoly {
    type Output = BivarPoly;
    fn add(mut self, rhs: BivarPoly) -> BivarPoly {
        self += rhs;
        self
    }
}

impl Sub<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn sub(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for BivarPoly {
    type Output = BivarPoly;
    fn sub(mut self, rhs: BivarPoly) -> BivarPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        BivarPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for BivarPoly {
    type Output = BivarPoly;
    fn neg(self) -> BivarPoly {
        -&self
    }
}

impl Mul<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        if self.is_zero() || rhs.is_zero() {
            return BivarPoly::zero();
        }
        if let Some(c) = rhs.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return rhs.scale(&c);
        }
        let mut out = BivarPoly::zero();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &rhs.terms {
                out.add_term(Exponents::new(ea.x + eb.x, ea.y + eb.y), &(ca * cb));
            }
        }
        out
    }
}

impl Mul for BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: BivarPoly) -> BivarPoly {
        &self * &rhs
    }
}

impl fmt::Display for BivarPoly {
    /// Human-readable form, highest terms first, e.g. `3*x^2 + 6*y - 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.numer().sign() == num_bigint::Sign::Minus;
            let mag = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut factors = Vec::new();
            let monomial = e.x > 0 || e.y > 0;
            if !monomial || !mag.is_one() {
                if mag.is_integer() {
                    factors.push(mag.numer().to_string());
                } else {
                    factors.push(format!("({}/{})", mag.numer(), mag.denom()));
                }
            }
            for (sym, d) in [("x", e.x), ("y", e.y)] {
                match d {
                    0 => {}
                    1 => factors.push(sym.to_string()),
                    _ => factors.push(format!("{sym}^{d}")),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x() -> BivarPoly {
        BivarPoly::x()
    }
    fn y() -> BivarPoly {
        BivarPoly::y()
    }
    fn c(v: i64) -> BivarPoly {
        BivarPoly::constant(v)
    }
    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    #[test]
    fn ring_examples() {
        assert_eq!(&x() * &x(), BivarPoly::monomial(1, 2, 0));
        let p = &x().pow(2) + &y().scale(&q("2"));
        assert_eq!(&p + &y().scale(&q("-2")), x().pow(2));
        assert_eq!(&(&x() + &y()) * &(&x() - &y()), &x().pow(2) - &y().pow(2));
        assert!((&x() - &x()).is_zero());
    }

    #[test]
    fn substitution_examples() {
        // 2x - 1 with x <- (x + 1)/2 is x.
        let p = &x().scale(&q("2")) - &c(1);
        let half_shift = (&x() + &c(1)).scale(&q("1/2"));
        assert_eq!(p.substitute(&half_shift, &y()), x());

        let p = &x().pow(2) + &y().scale(&q("2"));
        assert_eq!(p.substitute(&x(), &BivarPoly::zero()), x().pow(2));
        assert_eq!(x().substitute(&y(), &x()), y());
    }

    #[test]
    fn partial_examples() {
        let p = &x().pow(2) + &y().scale(&q("2"));
        assert_eq!(p.partial(Var::X, 2), c(2));
        assert_eq!(p.partial(Var::Y, 1), c(2));
        assert!(c(7).partial(Var::X, 1).is_zero());
        assert_eq!(x().pow(5).partial(Var::X, 3), BivarPoly::monomial(60, 2, 0));
    }

    #[test]
    fn evaluate_and_display() {
        let p = &(&x().pow(2).scale(&q("3")) + &y().scale(&q("6"))) - &c(3);
        assert_eq!(p.evaluate(&q("1"), &q("1")), q("6"));
        assert_eq!(p.to_string(), "3*x^2 + 6*y - 3");
        assert_eq!(x().scale(&q("-1/2")).to_string(), "-(1/2)*x");
        assert_eq!(BivarPoly::zero().to_string(), "0");
    }

    #[test]
    fn records_sorted_descending() {
        let p = &(&x().pow(2) + &y().scale(&q("2"))) + &BivarPoly::monomial(5, 2, 1);
        let degs: Vec<_> = p.to_records().iter().map(|r| (r.degx, r.degy)).collect();
        assert_eq!(degs, vec![(2, 1), (2, 0), (0, 1)]);
        let json = serde_json::to_string(&(&x().pow(2) + &y().scale(&q("2")))).unwrap();
        assert_eq!(
            json,
            r#"[{"degx":2,"degy":0,"coeff":"1/1"},{"degx":0,"degy":1,"coeff":"2/1"}]"#
        );
    }

    #[test]
    fn binomial_power_matches_product() {
        assert_eq!(BivarPoly::binomial_power(6), (&x() + &y()).pow(6));
    }

    fn arb_poly() -> impl Strategy<Value = BivarPoly> {
        prop::collection::vec((0u32..=8, 0u32..=8, -20i64..=20, 1i64..=6), 0..=6).prop_map(|ts| {
            BivarPoly::from_terms(
                ts.into_iter()
                    .map(|(dx, dy, p, q)| (Exponents::new(dx, dy), Rational::new(p, q).unwrap())),
            )
        })
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-9i64..=9, 1i64..=4).prop_map(|(p, q)| Rational::new(p, q).unwrap())
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn no_zero_coefficients_stored(a in arb_poly(), b in arb_poly()) {
            for p in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(p.terms().all(|(_, c)| !c.is_zero()));
            }
        }

        #[test]
        fn mixed_partials_commute(a in arb_poly()) {
            prop_assert_eq!(
                a.partial(Var::X, 1).partial(Var::Y, 1),
                a.partial(Var::Y, 1).partial(Var::X, 1)
            );
        }

        #[test]
        fn identity_substitution(a in arb_poly()) {
            prop_assert_eq!(a.substitute(&BivarPoly::x(), &BivarPoly::y()), a);
        }

        #[test]
        fn translate_agrees_with_substitute(a in arb_poly(), dx in arb_rational(), dy in arb_rational()) {
            let xs = &BivarPoly::x() + &BivarPoly::constant(dx.clone());
            let ys = &BivarPoly::y() + &BivarPoly::constant(dy.clone());
            prop_assert_eq!(a.translate(&dx, &dy), a.substitute(&xs, &ys));
        }

        #[test]
        fn evaluate_is_homomorphic(a in arb_poly(), b in arb_poly(), px in arb_rational(), py in arb_rational()) {
            prop_assert_eq!((&a * &b).evaluate(&px, &py), a.evaluate(&px, &py) * b.evaluate(&px, &py));
        }

        #[test]
        fn json_round_trip(a in arb_poly()) {
            let s = serde_json::to_string(&a).unwrap();
            prop_assert_eq!(serde_json::from_str::<BivarPoly>(&s).unwrap(), a);
        }
    }
}
