use num_bigint::BigInt;
use num_traits::Zero;

use super::dense::IntGrid;

use super::report::{GridPoint, IdentityReport, Observation, Params};
use super::{IdentityId, LemmaReading};
use crate::families::{
    classical_genocchi_by_binomial_sum, gould_hopper_closed_form, hermite_sequence,
    kernel_sequence, second_kind_genocchi_by_binomial_sum, Kernel,
};
use crate::poly::{BivarPoly, Exponents, Var};
use crate::rational::{binomial, factorial, Rational};

fn binom(n: usize, k: usize) -> Rational {
    Rational::from_integer(binomial(n, k))
}

fn constants(polys: &[BivarPoly]) -> Vec<Rational> {
    polys
        .iter()
        .map(|p| p.as_constant().expect("number sequences are constant"))
        .collect()
}

/// `p(x + y)` for a polynomial in `x` alone: the second argument lands in
/// the `y` slot.
fn shift_into_y(p: &BivarPoly) -> BivarPoly {
    p.substitute(&(&BivarPoly::x() + &BivarPoly::y()), &BivarPoly::zero())
}

/// `p(y)` for a polynomial in `x` alone.
fn rename_to_y(p: &BivarPoly) -> BivarPoly {
    p.substitute(&BivarPoly::y(), &BivarPoly::zero())
}

fn readings(reading: LemmaReading) -> Vec<(&'static str, Kernel, Kernel)> {
    let second = (
        "second-kind",
        Kernel::SecondKindGenocchi,
        Kernel::SecondKindEuler,
    );
    let classical = (
        "classical",
        Kernel::ClassicalGenocchi,
        Kernel::ClassicalEuler,
    );
    match reading {
        LemmaReading::SecondKind => vec![second],
        LemmaReading::Classical => vec![classical],
        LemmaReading::Both => vec![second, classical],
    }
}

/// Binomial expansion of the classical Genocchi polynomials against their
/// generating function.
pub fn check_genocchi_binomial(n_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new(IdentityId::GenoBinom);
    let gf = kernel_sequence(Kernel::ClassicalGenocchi, 1, n_max, true);
    for (n, lhs) in gf.iter().enumerate() {
        let g = GridPoint::new(n, 0, 1, 0);
        report.tested(g);
        let rhs = classical_genocchi_by_binomial_sum(n).value;
        report.expect_eq(Params::new(g), lhs, &rhs);
    }
    report
}

pub fn check_second_kind_binomial(n_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new(IdentityId::SkgBinom);
    let gf = kernel_sequence(Kernel::SecondKindGenocchi, 1, n_max, true);
    for (n, lhs) in gf.iter().enumerate() {
        let g = GridPoint::new(n, 0, 1, 0);
        report.tested(g);
        let rhs = second_kind_genocchi_by_binomial_sum(n).value;
        report.expect_eq(Params::new(g), lhs, &rhs);
    }
    report
}

/// `2^(n-1) G_n((x + 1)/2)` from the classical polynomials.
fn rescaled_classical(n_max: usize) -> Vec<BivarPoly> {
    let classical = kernel_sequence(Kernel::ClassicalGenocchi, 1, n_max, true);
    let half = Rational::new(1, 2).expect("non-zero");
    let arg = (&BivarPoly::x() + &BivarPoly::one()).scale(&half);
    let mut power = half;
    classical
        .iter()
        .map(|g| {
            let v = g.substitute(&arg, &BivarPoly::y()).scale(&power);
            power *= Rational::from(2);
            v
        })
        .collect()
}

pub fn check_rescale(n_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new(IdentityId::SkgRescale);
    let second = kernel_sequence(Kernel::SecondKindGenocchi, 1, n_max, true);
    for (n, (lhs, rhs)) in second.iter().zip(rescaled_classical(n_max)).enumerate() {
        let g = GridPoint::new(n, 0, 1, 0);
        report.tested(g);
        report.expect_eq(Params::new(g), lhs, &rhs);
    }
    report
}

/// `sum_k sum_{i <= n-k} n!/(k! i! (n-k-i)!) 2^(k-1) x^(n-k-i) G_k`.
fn triple_multinomial(n: usize, numbers: &[Rational]) -> BivarPoly {
    let nf = factorial(n);
    let mut terms = Vec::new();
    for (k, gk) in numbers.iter().enumerate().take(n + 1) {
        if gk.is_zero() {
            continue;
        }
        // 2^(k-1)
        let pow2 = Rational::new(BigInt::from(1) << k, 2).expect("non-zero");
        for i in 0..=n - k {
            let m = &nf / (factorial(k) * factorial(i) * factorial(n - k - i));
            let c = gk * &pow2 * Rational::from_integer(m);
            terms.push((Exponents::new((n - k - i) as u32, 0), c));
        }
    }
    BivarPoly::from_terms(terms)
}

/// The double sum against the generating function, and against the
/// single-variable rescaling.
pub fn check_triple_multinomial(n_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new(IdentityId::SkgTripleMultinomial);
    let second = kernel_sequence(Kernel::SecondKindGenocchi, 1, n_max, true);
    let numbers = constants(&kernel_sequence(Kernel::ClassicalGenocchi, 1, n_max, false));
    let rescaled = rescaled_classical(n_max);
    for n in 0..=n_max {
        let g = GridPoint::new(n, 0, 1, 0);
        report.tested(g);
        let rhs = triple_multinomial(n, &numbers);
        report.expect_eq(Params::new(g), &second[n], &rhs);
        report.expect_eq(
            Params::new(g).with_detail("vs rescaling"),
            &rescaled[n],
            &rhs,
        );
    }
    report
}

/// `G'_n(x) = n E'_(n-1)(x)` for polynomials and numbers, order one.
pub fn check_euler_ratio(n_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new(IdentityId::SkgEulerRatio);
    for symbolic in [true, false] {
        let genocchi = kernel_sequence(Kernel::SecondKindGenocchi, 1, n_max, symbolic);
        let euler = kernel_sequence(Kernel::SecondKindEuler, 1, n_max, symbolic);
        for n in 1..=n_max {
            let g = GridPoint::new(n, 0, 1, 0);
            if symbolic {
                report.tested(g);
            }
            let rhs = euler[n - 1].scale(&Rational::from(n));
            let params =
                Params::new(g).with_detail(if symbolic { "polynomials" } else { "numbers" });
            report.expect_eq(params, &genocchi[n], &rhs);
        }
    }
    report
}

/// Addition theorem `G^(α+β)_n(x + x1) = sum_k C(n,k) G^(α)_k(x) G^(β)_(n-k)(x1)`,
/// with `x1` carried in the `y` slot.
pub fn check_lemma1_addition(
    n_max: usize,
    alpha_max: u32,
    beta_max: u32,
    reading: LemmaReading,
) -> IdentityReport {
    let mut report = IdentityReport::new(IdentityId::Lemma1Addition);
    report.note("x1 is carried in the y slot");
    let readings = readings(reading);
    for (name, _, _) in &readings {
        report.note(format!("kernel reading: {name}"));
    }
    for (reading_ix, (name, genocchi, _)) in readings.iter().enumerate() {
        let seqs: Vec<Vec<BivarPoly>> = (0..=alpha_max + beta_max)
            .map(|a| kernel_sequence(*genocchi, a, n_max, true))
            .collect();
        let in_y: Vec<Vec<BivarPoly>> = seqs[..=beta_max as usize]
            .iter()
            .map(|s| s.iter().map(rename_to_y).collect())
            .collect();
        for alpha in 0..=alpha_max {
            for beta in 0..=beta_max {
                let combined = &seqs[(alpha + beta) as usize];
                for n in 0..=n_max {
                    let g = GridPoint::new(n, 0, alpha, beta);
                    if reading_ix == 0 {
                        report.tested(g);
                    }
                    let lhs = shift_into_y(&combined[n]);
                    let mut rhs = BivarPoly::zero();
                    for k in 0..=n {
                        let left = &seqs[alpha as usize][k];
                        let right = &in_y[beta as usize][n - k];
                        if left.is_zero() || right.is_zero() {
                            continue;
                        }
                        rhs += (left * right).scale(&binom(n, k));
                    }
                    report.expect_eq(Params::new(g).with_detail(*name), &lhs, &rhs);
                }
            }
        }
    }
    report
}

/// `sum_k C(n,k) E^(α)_k G^(α)_(n-k)(x + x1) = sum_k C(n,k) E^(α)_k(x) G^(α)_(n-k)(x1)`.
pub fn check_lemma1_euler_conv(
    n_max: usize,
    alpha_max: u32,
    reading: LemmaReading,
) -> IdentityReport {
    let mut report = IdentityReport::new(IdentityId::Lemma1EulerConv);
    report.note("x1 is carried in the y slot");
    let readings = readings(reading);
    for (name, _, _) in &readings {
        report.note(format!("kernel reading: {name}"));
    }
    for (reading_ix, (name, genocchi, euler)) in readings.iter().enumerate() {
        for alpha in 0..=alpha_max {
            let e_numbers = constants(&kernel_sequence(*euler, alpha, n_max, false));
            let e_poly = kernel_sequence(*euler, alpha, n_max, true);
            let g_poly = kernel_sequence(*genocchi, alpha, n_max, true);
            let g_shifted: Vec<_> = g_poly.iter().map(shift_into_y).collect();
            let g_in_y: Vec<_> = g_poly.iter().map(rename_to_y).collect();
            for n in 0..=n_max {
                let g = GridPoint::new(n, 0, alpha, 0);
                if reading_ix == 0 {
                    report.tested(g);
                }
                let mut lhs = BivarPoly::zero();
                let mut rhs = BivarPoly::zero();
                for k in 0..=n {
                    let c = binom(n, k);
                    lhs += g_shifted[n - k].scale(&(&c * &e_numbers[k]));
                    rhs += (&e_poly[k] * &g_in_y[n - k]).scale(&c);
                }
                report.expect_eq(Params::new(g).with_detail(*name), &lhs, &rhs);
            }
        }
    }
    report
}

/// `_H G^(j,a)_n = n _H E^(j,a)_(n-1)`: strict at order one, observed at
/// higher orders where the kernels differ by `t^(a-1)`.
pub fn check_hermite_euler_quotient(n_max: usize, j_set: &[u32], orders: &[u32]) -> IdentityReport {
    let mut report = IdentityReport::new(IdentityId::HgEulerQuotient);
    report.note("order 1 is checked strictly; other orders are observational");
    for &j in j_set {
        for &a in orders {
            let genocchi =
                hermite_sequence(Some(Kernel::SecondKindGenocchi), a, j, n_max).expect("j >= 1");
            let euler =
                hermite_sequence(Some(Kernel::SecondKindEuler), a, j, n_max).expect("j >= 1");
            let mut first_failure = None;
            for n in 1..=n_max {
                let g = GridPoint::new(n, j, a, 0);
                let rhs = euler[n - 1].scale(&Rational::from(n));
                if a == 1 {
                    report.tested(g);
                    report.expect_eq(Params::new(g), &genocchi[n], &rhs);
                } else if first_failure.is_none() && genocchi[n] != rhs {
                    first_failure = Some((g, genocchi[n].clone(), rhs));
                }
            }
            if a == 1 {
                continue;
            }
            let label = format!("quotient relation at order {a}, j = {j}, n <= {n_max}");
            report.observe(match first_failure {
                Some((g, lhs, rhs)) => Observation {
                    label: format!("{label}: first failing n"),
                    holds: false,
                    params: Some(Params::new(g)),
                    lhs: Some(lhs),
                    rhs: Some(rhs),
                },
                None => Observation {
                    label,
                    holds: true,
                    params: None,
                    lhs: None,
                    rhs: None,
                },
            });
        }
    }
    report
}

/// `d/dx _H G^(j,a)_n = n _H G^(j,a)_(n-1)`.
pub fn check_derivative(n_max: usize, j_set: &[u32], a_max: u32) -> IdentityReport {
    let mut report = IdentityReport::new(IdentityId::HgDerivative);
    for &j in j_set {
        for a in 0..=a_max {
            let seq =
                hermite_sequence(Some(Kernel::SecondKindGenocchi), a, j, n_max).expect("j >= 1");
            for n in 1..=n_max {
                let g = GridPoint::new(n, j, a, 0);
                report.tested(g);
                let lhs = seq[n].partial(Var::X, 1);
                let rhs = seq[n - 1].scale(&Rational::from(n));
                report.expect_eq(Params::new(g), &lhs, &rhs);
            }
        }
    }
    report
}

/// `n! sum_l y^l G'_(n-2l)(x) / (l! (n-2l)!)` over the second-kind
/// polynomials.
pub fn thm1_floor_sum(n: usize, second_kind: &[BivarPoly]) -> BivarPoly {
    let nf = factorial(n);
    let mut out = BivarPoly::zero();
    for l in 0..=n / 2 {
        let c = Rational::from_integer(&nf / (factorial(l) * factorial(n - 2 * l)));
        out += &second_kind[n - 2 * l] * &BivarPoly::monomial(c, 0, l as u32);
    }
    out
}

pub fn check_thm1_floor_sum(n_max: usize) -> IdentityReport {
    let mut report = IdentityReport::new(IdentityId::Thm1FloorSum);
    let hermite = hermite_sequence(Some(Kernel::SecondKindGenocchi), 1, 2, n_max).expect("j = 2");
    let second = kernel_sequence(Kernel::SecondKindGenocchi, 1, n_max, true);
    for (n, lhs) in hermite.iter().enumerate() {
        let g = GridPoint::new(n, 2, 1, 0);
        report.tested(g);
        report.expect_eq(Params::new(g), lhs, &thm1_floor_sum(n, &second));
    }
    report
}

/// Distinct integer interpolation nodes `0, 1, -1, 2, -2, ...`.
pub fn interpolation_nodes(count: usize) -> Vec<i64> {
    (0..count as i64)
        .map(|i| if i % 2 == 1 { (i + 1) / 2 } else { -(i / 2) })
        .collect()
}

/// Points `(u_r, v_s)` with `r + j s <= n_max`, tagged with `r + j s`.
///
/// For each `n`, the points tagged `<= n` are unisolvent for polynomials
/// in `(u, v)` of weighted degree `deg_u + j deg_v <= n`: in Newton form
/// in `v`, the `s`-th coefficient has degree `<= n - j s` in `u` and is
/// pinned down by the `n - j s + 1` distinct nodes on row `s`.
pub fn weighted_lower_set(n_max: usize, j: u32) -> Vec<(i64, i64, usize)> {
    let j = j as usize;
    let xs = interpolation_nodes(n_max + 1);
    let ys = interpolation_nodes(n_max / j + 1);
    let mut points = Vec::new();
    for (s, &v) in ys.iter().enumerate() {
        for (r, &u) in xs.iter().enumerate().take(n_max - j * s + 1) {
            points.push((u, v, r + j * s));
        }
    }
    points
}

/// Addition theorem in order and both arguments. The right-hand side uses
/// index `k` on the first factor.
///
/// Four symbols do not fit in a bivariate polynomial, so `(x2, y2)` is
/// sampled on [`weighted_lower_set`] and each sample is compared as an
/// exact polynomial in `(x1, y1)`. Both sides have weighted degree `<= n`
/// in `(x2, y2)`, so agreement on the set proves the identity.
pub fn check_thm2_addition(n_max: usize, j_set: &[u32], a_max: u32, b_max: u32) -> IdentityReport {
    let mut report = IdentityReport::new(IdentityId::Thm2Addition);
    report.note("(x1, y1) symbolic; (x2, y2) on a unisolvent node set of weighted degree n");
    report.note(
        "right-hand side uses index k on the first factor; the index-n variant is observed",
    );
    for &j in j_set {
        let jj = j as usize;
        let points = weighted_lower_set(n_max, j);
        let expected: usize = (0..=n_max / jj).map(|s| n_max - jj * s + 1).sum();
        assert_eq!(
            points.len(),
            expected,
            "node set must be the full lower set"
        );

        let seqs: Vec<Vec<BivarPoly>> = (0..=a_max + b_max)
            .map(|s| {
                hermite_sequence(Some(Kernel::SecondKindGenocchi), s, j, n_max).expect("j >= 2")
            })
            .collect();
        let (degx, degy) = (n_max, n_max / jj);
        let grids: Vec<Vec<IntGrid>> = seqs
            .iter()
            .map(|s| {
                s.iter()
                    .map(|p| {
                        IntGrid::from_poly(p, degx, degy)
                            .expect("Hermite-based Genocchi coefficients are integers")
                    })
                    .collect()
            })
            .collect();
        let binoms: Vec<Vec<BigInt>> = (0..=n_max)
            .map(|n| (0..=n).map(|k| binomial(n, k)).collect())
            .collect();

        for a in 0..=a_max {
            for b in 0..=b_max {
                for n in 0..=n_max {
                    report.tested(GridPoint::new(n, j, a, b));
                }
            }
        }
        for &(u, v, min_n) in &points {
            let values: Vec<Vec<BigInt>> = grids[..=b_max as usize]
                .iter()
                .map(|s| s.iter().map(|g| g.evaluate(u, v)).collect())
                .collect();
            for n in min_n..=n_max {
                let shifted: Vec<IntGrid> = grids.iter().map(|s| s[n].translate(u, v)).collect();
                for a in 0..=a_max {
                    for b in 0..=b_max {
                        let mut rhs = IntGrid::zero(degx, degy);
                        for k in 0..=n {
                            let w = &values[b as usize][n - k];
                            if w.is_zero() {
                                continue;
                            }
                            rhs.add_scaled(&grids[a as usize][k], &(&binoms[n][k] * w));
                        }
                        let lhs = &shifted[(a + b) as usize];
                        if *lhs != rhs {
                            let params = Params::new(GridPoint::new(n, j, a, b))
                                .with_detail(format!("x2 = {u}, y2 = {v}"));
                            report.expect_eq(params, &lhs.to_poly(), &rhs.to_poly());
                        }
                    }
                }
            }
        }

        // Same sum with index n on the first factor; known not to hold.
        if n_max >= 1 && a_max >= 1 {
            let (u, v) = (Rational::one(), Rational::one());
            let found = (0..=n_max).find_map(|n| {
                let lhs = seqs[1][n].translate(&u, &v);
                let other: Vec<Rational> = seqs[0].iter().map(|p| p.evaluate(&u, &v)).collect();
                let mut rhs = BivarPoly::zero();
                for k in 0..=n {
                    rhs += seqs[1][n].scale(&(binom(n, k) * &other[n - k]));
                }
                (lhs != rhs).then_some((n, lhs, rhs))
            });
            let label = format!("index-n variant, j = {j}, a = 1, b = 0, x2 = y2 = 1");
            report.observe(match found {
                Some((n, lhs, rhs)) => Observation {
                    label: format!("{label}: first failing n"),
                    holds: false,
                    params: Some(Params::new(GridPoint::new(n, j, 1, 0))),
                    lhs: Some(lhs),
                    rhs: Some(rhs),
                },
                None => Observation {
                    label,
                    holds: true,
                    params: None,
                    lhs: None,
                    rhs: None,
                },
            });
        }
    }
    report
}

/// `_H G^(2,a)_n(x,y) = sum_l C(n,l) G'^(a)_(n-l) H^(2)_l(x,y)` with the
/// Gould-Hopper factor from its closed form.
/// `sum_l C(n, l) numbers[n - l] hermite[l]`: the convolution of a number
/// sequence with the `j = 2` Gould-Hopper polynomials.
pub fn thm3_convolution(n: usize, numbers: &[Rational], hermite: &[BivarPoly]) -> BivarPoly {
    let mut out = BivarPoly::zero();
    for l in 0..=n {
        let c = &numbers[n - l];
        if !c.is_zero() {
            out += hermite[l].scale(&(binom(n, l) * c));
        }
    }
    out
}

/// Closed-form Gould-Hopper polynomials `H^(2)_0 ..= H^(2)_n_max`.
pub fn gould_hopper_table(n_max: usize) -> Vec<BivarPoly> {
    (0..=n_max)
        .map(|l| gould_hopper_closed_form(l, 2).expect("j = 2").value)
        .collect()
}

pub fn check_thm3_convolution(n_max: usize, a_max: u32) -> IdentityReport {
    let mut report = IdentityReport::new(IdentityId::Thm3Convolution);
    let hermite = gould_hopper_table(n_max);
    for a in 0..=a_max {
        let lhs_seq =
            hermite_sequence(Some(Kernel::SecondKindGenocchi), a, 2, n_max).expect("j = 2");
        let numbers = constants(&kernel_sequence(
            Kernel::SecondKindGenocchi,
            a,
            n_max,
            false,
        ));
        for (n, lhs) in lhs_seq.iter().enumerate() {
            let g = GridPoint::new(n, 2, a, 0);
            report.tested(g);
            let rhs = thm3_convolution(n, &numbers, &hermite);
            report.expect_eq(Params::new(g), lhs, &rhs);
        }
    }
    report
}

/// Gould-Hopper polynomials solve `dF/dy = d^jF/dx^j` with `F(x, 0) = x^n`.
/// Also records that `dF/dx = d^jF/dx^j` fails.
pub fn check_heat_equation(n_max: usize, j_set: &[u32]) -> IdentityReport {
    let mut report = IdentityReport::new(IdentityId::HeatEquation);
    report
        .note("checked form: dF/dy = d^j F/dx^j; the form dF/dx = d^j F/dx^j is observed to fail");
    let x_variant = |h: &BivarPoly, j: u32| (h.partial(Var::X, 1), h.partial(Var::X, j));
    for &j in j_set {
        let seq = hermite_sequence(None, 0, j, n_max).expect("j >= 2");
        let mut x_variant_failure = None;
        for (n, h) in seq.iter().enumerate() {
            let g = GridPoint::new(n, j, 0, 0);
            report.tested(g);
            report.expect_eq(
                Params::new(g).with_detail("dF/dy = d^jF/dx^j"),
                &h.partial(Var::Y, 1),
                &h.partial(Var::X, j),
            );
            report.expect_eq(
                Params::new(g).with_detail("F(x, 0) = x^n"),
                &h.substitute(&BivarPoly::x(), &BivarPoly::zero()),
                &BivarPoly::monomial(1, n as u32, 0),
            );
            let (lhs, rhs) = x_variant(h, j);
            if x_variant_failure.is_none() && lhs != rhs {
                x_variant_failure = Some((g, lhs, rhs));
            }
        }
        let label = format!("dF/dx = d^jF/dx^j, j = {j}, n <= {n_max}");
        report.observe(match x_variant_failure {
            Some((g, lhs, rhs)) => Observation {
                label: format!("{label}: first failing n"),
                holds: false,
                params: Some(Params::new(g)),
                lhs: Some(lhs),
                rhs: Some(rhs),
            },
            None => Observation {
                label,
                holds: true,
                params: None,
                lhs: None,
                rhs: None,
            },
        });
    }
    let h22 = gould_hopper_closed_form(2, 2).expect("j = 2").value;
    let (lhs, rhs) = x_variant(&h22, 2);
    report.observe(Observation {
        label: "dF/dx = d^jF/dx^j at n = 2, j = 2".into(),
        holds: lhs == rhs,
        params: Some(Params::new(GridPoint::new(2, 2, 0, 0))),
        lhs: Some(lhs),
        rhs: Some(rhs),
    });
    report
}
