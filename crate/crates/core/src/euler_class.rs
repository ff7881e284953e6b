//! Euler classes of `PSL(2,R)`-representations of Fuchsian groups.
//!
//! A normalized class `b x0 + Σ β_j x_j` is the euler class of some
//! representation exactly when the Jankins–Neumann inequalities hold. Any
//! realizable class in the same `Ext(Γ;Z/2)` coset as the class of a Seifert
//! index induces an `SL(2,R)`-representation of that manifold sending the
//! fiber to `-I`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::abelian::{CohomologyClass, DoubleMembership};
use crate::rational::serialize_opt_rational;
use crate::seifert::SeifertIndex;
use crate::{Error, Result};

/// Which branch of the Jankins–Neumann criteria a class satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum JnCase {
    /// `g > 0` and `2 - 2g - n <= b <= 2g - 2`.
    GPositive,
    /// `g = 0` and `2 - n <= b <= -2`.
    ZeroRange,
    /// `g = 0`, `b = -1` and `Σ β_j/α_j <= 1`.
    BMinusOne,
    /// `g = 0`, `b = 1 - n` and `Σ β_j/α_j >= n - 1`.
    BOneMinusN,
}

impl fmt::Display for JnCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            JnCase::GPositive => "G_POSITIVE",
            JnCase::ZeroRange => "ZERO_RANGE",
            JnCase::BMinusOne => "B_MINUS_ONE",
            JnCase::BOneMinusN => "B_ONE_MINUS_N",
        })
    }
}

/// Set when the base orbifold is not hyperbolic (`χ >= 0`); the criteria
/// are still evaluated literally.
pub const FLAG_NON_HYPERBOLIC: &str = "NON_HYPERBOLIC_BASE";

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealizabilityReport {
    pub realizable: bool,
    pub cases: Vec<JnCase>,
    /// `Σ β_j/α_j`, reported for genus 0 only.
    #[serde(serialize_with = "serialize_opt_rational")]
    pub sum: Option<BigRational>,
    pub flags: Vec<String>,
}

/// Realizable classes equivalent to `base_class` in `Ext(Γ;Z/2)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftLedger {
    pub base_class: CohomologyClass,
    pub equivalent_realizable: Vec<CohomologyClass>,
    pub induces_sl2r: bool,
}

/// `b x0 + Σ β_j x_j` for the index `(g; b; (α_j, β_j))`.
pub fn euler_class_of_index(index: &SeifertIndex) -> CohomologyClass {
    let coeffs = std::iter::once(index.b().clone())
        .chain(index.betas().cloned())
        .collect();
    CohomologyClass::new(index.signature(), coeffs).expect("one coefficient per fiber plus b")
}

/// Evaluates every Jankins–Neumann case on a normalized class.
pub fn jn_realizable(c: &CohomologyClass) -> Result<RealizabilityReport> {
    if !c.is_normal() {
        return Err(Error::NotNormalized);
    }
    let sig = c.signature();
    let g = BigInt::from(sig.genus());
    let n = BigInt::from(sig.n());
    let b = c.b();
    let two = BigInt::from(2);
    let mut cases = Vec::new();
    let mut sum = None;

    if sig.genus() > 0 {
        let lo = &two - &two * &g - &n;
        let hi = &two * &g - &two;
        if lo <= *b && *b <= hi {
            cases.push(JnCase::GPositive);
        }
    } else {
        let s = beta_sum(c);
        if &two - &n <= *b && *b <= -&two {
            cases.push(JnCase::ZeroRange);
        }
        if *b == BigInt::from(-1) && s <= BigRational::from_integer(1.into()) {
            cases.push(JnCase::BMinusOne);
        }
        if *b == BigInt::from(1) - &n && s >= BigRational::from_integer(&n - 1) {
            cases.push(JnCase::BOneMinusN);
        }
        sum = Some(s);
    }

    let mut flags = Vec::new();
    if !sig.is_hyperbolic() {
        flags.push(FLAG_NON_HYPERBOLIC.to_string());
    }
    Ok(RealizabilityReport {
        realizable: !cases.is_empty(),
        cases,
        sum,
        flags,
    })
}

fn beta_sum(c: &CohomologyClass) -> BigRational {
    c.betas()
        .iter()
        .zip(c.signature().branch_indices())
        .fold(BigRational::zero(), |acc, (beta, &a)| {
            acc + BigRational::new(beta.clone(), BigInt::from(a))
        })
}

/// Range of `b` covering every Jankins–Neumann case for the signature.
fn b_scan_range(genus: u32, n: usize) -> (i64, i64) {
    let (g, n) = (genus as i64, n as i64);
    if g > 0 {
        (2 - 2 * g - n, 2 * g - 2)
    } else {
        // union of [2-n, -2], {-1} and {1-n}
        ((1 - n).min(-1), (1 - n).max(-1))
    }
}

/// All classes `(b'; β'_1, …, β'_n)` with `0 < β'_j < α_j` that pass
/// [`jn_realizable`] and are `Ext(Γ;Z/2)`-equivalent to `c`, ordered by `b'`
/// then `β'` lexicographically.
///
/// `β'_j = 0` is skipped: such a class has no exceptional fiber at `j` and
/// does not come from a Seifert index over the same orbifold.
pub fn enumerate_realizable_equivalent(c: &CohomologyClass) -> Result<LiftLedger> {
    if !c.is_normal() {
        return Err(Error::NotNormalized);
    }
    let sig = c.signature().clone();
    let alphas = sig.branch_indices().to_vec();
    let membership = DoubleMembership::new(&sig);
    let (lo, hi) = b_scan_range(sig.genus(), sig.n());

    let mut found = Vec::new();
    for b in lo..=hi {
        let mut betas = vec![1u64; alphas.len()];
        if alphas.iter().any(|&a| a < 2) {
            break;
        }
        loop {
            let coeffs: Vec<BigInt> = std::iter::once(BigInt::from(b))
                .chain(betas.iter().map(|&x| BigInt::from(x)))
                .collect();
            let diff: Vec<BigInt> = coeffs.iter().zip(c.coeffs()).map(|(x, y)| x - y).collect();
            if membership.contains(&diff) {
                let candidate = CohomologyClass::new(sig.clone(), coeffs)?;
                if jn_realizable(&candidate)?.realizable {
                    found.push(candidate);
                }
            }
            if !advance(&mut betas, &alphas) {
                break;
            }
        }
    }

    for x in &found {
        debug_assert!(jn_realizable(x).map(|r| r.realizable).unwrap_or(false));
        debug_assert!(x.ext2_equivalent(c).unwrap_or(false));
    }
    Ok(LiftLedger {
        base_class: c.clone(),
        induces_sl2r: !found.is_empty(),
        equivalent_realizable: found,
    })
}

/// Lexicographic odometer over `1 <= v_j < bound_j`, last digit fastest.
fn advance(v: &mut [u64], bounds: &[u64]) -> bool {
    for j in (0..v.len()).rev() {
        v[j] += 1;
        if v[j] < bounds[j] {
            return true;
        }
        v[j] = 1;
    }
    false
}
