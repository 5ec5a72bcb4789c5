use serde::Serialize;

use crate::error::{Error, Result};

/// Absolute tolerance on the characteristic root.
pub const ROOT_TOLERANCE: f64 = 1e-12;

/// Whether a rate is known to equal the capacity or only bounds it from below.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum BoundStatus {
    Exact,
    LowerBound,
}

/// The asymptotic rate of a star language: the unique root `x*` in `(0, 1)`
/// of `sum_t x^{len_t} = 1` and the rate `-log2 x*` in bits per symbol.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RateBound {
    pub root: f64,
    pub rate: f64,
    /// Generator lengths, sorted.
    pub exponents: Vec<usize>,
    pub status: BoundStatus,
}

impl RateBound {
    pub fn with_status(mut self, status: BoundStatus) -> Self {
        self.status = status;
        self
    }

    /// `sum_t root^{len_t} - 1`.
    pub fn residual(&self) -> f64 {
        characteristic_sum(&self.exponents, self.root) - 1.0
    }
}

fn characteristic_sum(lengths: &[usize], x: f64) -> f64 {
    lengths.iter().map(|&l| x.powi(l as i32)).sum()
}

/// Solves `sum_t x^{len_t} = 1` on `(0, 1)` by bisection.
///
/// The left-hand side is strictly increasing there, equals 0 at `x = 0` and
/// `T` at `x = 1`, so there is exactly one root once `T >= 2`. A single
/// length has root 1 and rate 0; that case is reported as
/// [`Error::DegenerateRate`].
pub fn characteristic_root(lengths: &[usize]) -> Result<RateBound> {
    match lengths {
        [] => return Err(Error::NoGenerators),
        _ if lengths.contains(&0) => return Err(Error::EmptyGenerator),
        [single] => return Err(Error::DegenerateRate(*single)),
        _ => {}
    }
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    // Bisect to float resolution, well inside ROOT_TOLERANCE.
    while hi - lo > ROOT_TOLERANCE * 1e-3 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if characteristic_sum(lengths, mid) < 1.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let root = 0.5 * (lo + hi);
    let mut exponents = lengths.to_vec();
    exponents.sort_unstable();
    Ok(RateBound { root, rate: -root.log2(), exponents, status: BoundStatus::LowerBound })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn known_roots() {
        let alpha = characteristic_root(&[1, 3]).unwrap();
        assert!((alpha.rate - 0.5515).abs() < 1e-4, "{}", alpha.rate);
        assert!(alpha.residual().abs() < 1e-12);
        // x + x^3 = 1 has root 0.6823278038280193...
        assert!((alpha.root - 0.682_327_803_828_019_3).abs() < ROOT_TOLERANCE);

        let beta = characteristic_root(&[2, 3]).unwrap();
        assert!((beta.rate - 0.4057).abs() < 1e-4, "{}", beta.rate);
        // x^2 + x^3 = 1 has root 0.7548776662466927...
        assert!((beta.root - 0.754_877_666_246_692_7).abs() < ROOT_TOLERANCE);

        assert!((characteristic_root(&[3, 3]).unwrap().rate - 1.0 / 3.0).abs() < 1e-9);
        assert!((characteristic_root(&[2, 2]).unwrap().rate - 0.5).abs() < 1e-9);
        let case11 = characteristic_root(&[11; 14]).unwrap();
        assert!((case11.rate - 14f64.log2() / 11.0).abs() < 1e-9);
        assert!((case11.rate - 0.3461).abs() < 1e-4);
    }

    #[test]
    fn rejects_degenerate_input() {
        assert_eq!(characteristic_root(&[]), Err(Error::NoGenerators));
        assert_eq!(characteristic_root(&[4]), Err(Error::DegenerateRate(4)));
        assert_eq!(characteristic_root(&[0, 2]), Err(Error::EmptyGenerator));
    }

    #[test]
    fn exponents_are_sorted() {
        assert_eq!(characteristic_root(&[3, 1]).unwrap().exponents, vec![1, 3]);
    }

    proptest! {
        #[test]
        fn adding_a_generator_increases_rate(
            lengths in prop::collection::vec(1usize..12, 2..6),
            extra in 1usize..12,
        ) {
            let base = characteristic_root(&lengths).unwrap();
            let mut more = lengths.clone();
            more.push(extra);
            prop_assert!(characteristic_root(&more).unwrap().rate > base.rate);
        }

        #[test]
        fn shortening_a_generator_increases_rate(
            lengths in prop::collection::vec(2usize..12, 2..6),
            pick in 0usize..6,
        ) {
            let base = characteristic_root(&lengths).unwrap();
            let mut shorter = lengths.clone();
            let i = pick % shorter.len();
            shorter[i] -= 1;
            prop_assert!(characteristic_root(&shorter).unwrap().rate > base.rate);
        }

        #[test]
        fn binary_rate_never_exceeds_one_bit(lengths in prop::collection::vec(1usize..12, 2..6)) {
            let bound = characteristic_root(&lengths).unwrap();
            prop_assert!(bound.root > 0.0 && bound.root < 1.0);
            prop_assert!(bound.residual().abs() < 1e-9);
            // Kraft: at most 2^l binary words of each length fit a decodable set
            let kraft: f64 = lengths.iter().map(|&l| 0.5f64.powi(l as i32)).sum();
            if kraft <= 1.0 {
                prop_assert!(bound.rate <= 1.0 + 1e-12);
            }
        }
    }
}
