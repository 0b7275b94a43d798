//! The non-exponential factors of the generating functions, with a
//! process-wide memo.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::poly::BivarPoly;
use crate::series::EgfSeries;

/// Generating-function kernel of a family, before raising to the order `a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kernel {
    /// `2t / (e^t + 1)`
    ClassicalGenocchi,
    /// `2 / (e^t + 1)`
    ClassicalEuler,
    /// `2t / (e^t + e^-t)`
    SecondKindGenocchi,
    /// `2 / (e^t + e^-t)`
    SecondKindEuler,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Denominator {
    /// `e^t + 1`
    ExpPlusOne,
    /// `e^t + e^-t`
    ExpPlusExpNeg,
}

impl Denominator {
    fn series(self, order: usize) -> EgfSeries {
        let one = BivarPoly::one();
        let exp_t = EgfSeries::exp_linear(&one, 1, order).expect("j = 1");
        let other = match self {
            Denominator::ExpPlusOne => EgfSeries::one(order),
            Denominator::ExpPlusExpNeg => EgfSeries::exp_linear(&-&one, 1, order).expect("j = 1"),
        };
        exp_t.add(&other).expect("same order")
    }
}

impl Kernel {
    fn denominator(self) -> Denominator {
        match self {
            Kernel::ClassicalGenocchi | Kernel::ClassicalEuler => Denominator::ExpPlusOne,
            Kernel::SecondKindGenocchi | Kernel::SecondKindEuler => Denominator::ExpPlusExpNeg,
        }
    }

    /// Power of `t` in the numerator.
    fn t_power(self) -> usize {
        match self {
            Kernel::ClassicalGenocchi | Kernel::SecondKindGenocchi => 1,
            Kernel::ClassicalEuler | Kernel::SecondKindEuler => 0,
        }
    }

    /// The kernel truncated at `order`. The numerator `2t` (or `2`) is
    /// applied after the denominator is inverted.
    pub fn series(self, order: usize) -> Arc<EgfSeries> {
        self.power(order, 1)
    }

    /// `kernel^a` truncated at `order`, memoized.
    pub fn power(self, order: usize, a: u32) -> Arc<EgfSeries> {
        let key = (self, order, a);
        let cache = cache();
        if let Some(hit) = cache.powers.read().expect("poisoned").get(&key) {
            return hit.clone();
        }
        let value = Arc::new(match a {
            0 => EgfSeries::one(order),
            1 => {
                let inv = inverse_denominator(self.denominator(), order);
                let numerator = EgfSeries::monomial(BivarPoly::constant(2), self.t_power(), order);
                numerator.mul(&inv).expect("same order")
            }
            _ => {
                let half = self.power(order, a / 2);
                let sq = half.mul(&half).expect("same order");
                if a % 2 == 1 {
                    sq.mul(&self.power(order, 1)).expect("same order")
                } else {
                    sq
                }
            }
        });
        // Duplicate computation under a race is harmless: values are equal.
        cache
            .powers
            .write()
            .expect("poisoned")
            .entry(key)
            .or_insert(value)
            .clone()
    }
}

#[derive(Default)]
struct KernelCache {
    inverses: RwLock<HashMap<(Denominator, usize), Arc<EgfSeries>>>,
    powers: RwLock<HashMap<(Kernel, usize, u32), Arc<EgfSeries>>>,
}

fn cache() -> &'static KernelCache {
    static CACHE: OnceLock<KernelCache> = OnceLock::new();
    CACHE.get_or_init(KernelCache::default)
}

fn inverse_denominator(d: Denominator, order: usize) -> Arc<EgfSeries> {
    let cache = cache();
    if let Some(hit) = cache.inverses.read().expect("poisoned").get(&(d, order)) {
        return hit.clone();
    }
    let inv = Arc::new(d.series(order).inverse().expect("constant term is 2"));
    cache
        .inverses
        .write()
        .expect("poisoned")
        .entry((d, order))
        .or_insert(inv)
        .clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    #[test]
    fn second_kind_genocchi_kernel_coefficients() {
        let k = Kernel::SecondKindGenocchi.series(5);
        let egf: Vec<_> = k
            .egf_coefficients()
            .into_iter()
            .map(|p| p.as_constant().unwrap())
            .collect();
        let expect: Vec<Rational> = [0, 1, 0, -3, 0, 25]
            .into_iter()
            .map(Rational::from)
            .collect();
        assert_eq!(egf, expect);
    }

    #[test]
    fn memo_returns_shared_values() {
        let a = Kernel::SecondKindEuler.power(7, 3);
        let b = Kernel::SecondKindEuler.power(7, 3);
        assert!(Arc::ptr_eq(&a, &b));
        let direct = Kernel::SecondKindEuler.series(7).pow(3);
        assert_eq!(*a, direct);
    }

    #[test]
    fn concurrent_lookups_agree() {
        let handles: Vec<_> = (0..8)
            .map(|i| std::thread::spawn(move || Kernel::ClassicalGenocchi.power(20 + i % 2, 2)))
            .collect();
        let results: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        for (i, r) in results.iter().enumerate() {
            let order = 20 + i % 2;
            assert_eq!(r.order(), order);
            assert_eq!(**r, Kernel::ClassicalGenocchi.series(order).pow(2));
        }
    }
}
