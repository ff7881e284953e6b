//! Leading coefficient of the Reidemeister torsion asymptotics.
//!
//! For an `SL(2,R)`-representation sending the fiber `h` to `-I`,
//! `log|Tor(M;ρ_2N)|/(2N)^2 → 0` and
//! `log|Tor(M;ρ_2N)|/(2N) → -(2 - 2g - Σ (λ_j - 1)/λ_j)·log 2`,
//! where `λ_j` is the order of the image of `q_j` in `PSL(2,R)`. For the
//! representation induced by a realizable class `(b; β_j)` that order is
//! `α_j / gcd(α_j, β_j)`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::abelian::CohomologyClass;
use crate::euler_class::{euler_class_of_index, jn_realizable};
use crate::rational::{canonical, decimal_times_ln2};
use crate::seifert::SeifertIndex;
use crate::{Error, Result};

/// Entrywise tolerance for the rotation-matrix oracle.
pub const ROTATION_TOLERANCE: f64 = 1e-9;

/// The index class does not satisfy the Jankins–Neumann criteria; the
/// number is still the limit for any representation with `ρ(h) = -I` and
/// these image orders, but no `PSL(2,R)` lift is claimed.
pub const FLAG_NOT_REALIZABLE: &str = "NOT_REALIZABLE";

/// `q` such that the limit equals `q·log 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AsymptoticCoefficient {
    pub rational_part: BigRational,
}

impl AsymptoticCoefficient {
    /// Decimal rendering of `q·log 2` with `digits` significant digits.
    pub fn decimal(&self, digits: usize) -> String {
        decimal_times_ln2(&self.rational_part, digits)
    }
}

impl fmt::Display for AsymptoticCoefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&canonical(&self.rational_part))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AsymptoticsReport {
    pub lambdas: Vec<u64>,
    pub coefficient: AsymptoticCoefficient,
    /// Limit of `log|Tor|/(2N)^2`; always zero.
    pub quadratic_limit: i64,
    /// Every `gcd(α_j, β_j) = 1`, so the coefficient is `-χ`.
    pub equals_minus_chi_log2: bool,
    pub flags: Vec<String>,
    /// Optional decimal value of the limit, set by [`Self::with_decimal`].
    pub decimal: Option<String>,
}

impl AsymptoticsReport {
    pub fn with_decimal(mut self, digits: usize) -> Self {
        self.decimal = Some(self.coefficient.decimal(digits));
        self
    }
}

/// `{"lambdas", "coefficient": {"rational", "unit", "decimal"?},
/// "quadratic_limit", "minus_chi_log2", "flags"}`
impl Serialize for AsymptoticsReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Coefficient<'a> {
            rational: String,
            unit: &'static str,
            #[serde(skip_serializing_if = "Option::is_none")]
            decimal: Option<&'a str>,
        }
        let mut st = s.serialize_struct("AsymptoticsReport", 5)?;
        st.serialize_field("lambdas", &self.lambdas)?;
        st.serialize_field(
            "coefficient",
            &Coefficient {
                rational: self.coefficient.to_string(),
                unit: "log2",
                decimal: self.decimal.as_deref(),
            },
        )?;
        st.serialize_field("quadratic_limit", &self.quadratic_limit)?;
        st.serialize_field("minus_chi_log2", &self.equals_minus_chi_log2)?;
        st.serialize_field("flags", &self.flags)?;
        st.end()
    }
}

/// `α / gcd(α, β)`; `β = 0` gives 1.
pub fn lambda_of(alpha: u64, beta: u64) -> u64 {
    alpha / alpha.gcd(&beta)
}

/// Order in `PSL(2,R)` of the rotation by `πβ/α`, the image of `sh(β/α)`.
///
/// Returns the gcd formula after confirming it against repeated
/// multiplication of the 2×2 rotation matrix.
pub fn rotation_order(beta: u64, alpha: u64) -> Result<u64> {
    let formula = lambda_of(alpha, beta);
    let numeric = rotation_power_order(beta, alpha, ROTATION_TOLERANCE);
    if numeric != Some(formula) {
        return Err(Error::NumericalMismatch {
            alpha,
            beta,
            formula,
            numeric,
        });
    }
    Ok(formula)
}

/// Smallest `m <= α` with `R^m = ±I` entrywise within `tol`, where `R` is the
/// rotation by `πβ/α`.
pub fn rotation_power_order(beta: u64, alpha: u64, tol: f64) -> Option<u64> {
    let theta = std::f64::consts::PI * beta as f64 / alpha as f64;
    let (c, s) = (theta.cos(), theta.sin());
    let rot = [[c, -s], [s, c]];
    let mut p = rot;
    for m in 1..=alpha {
        if is_plus_minus_identity(&p, tol) {
            return Some(m);
        }
        p = mul2(&p, &rot);
    }
    None
}

fn mul2(a: &[[f64; 2]; 2], b: &[[f64; 2]; 2]) -> [[f64; 2]; 2] {
    [
        [
            a[0][0] * b[0][0] + a[0][1] * b[1][0],
            a[0][0] * b[0][1] + a[0][1] * b[1][1],
        ],
        [
            a[1][0] * b[0][0] + a[1][1] * b[1][0],
            a[1][0] * b[0][1] + a[1][1] * b[1][1],
        ],
    ]
}

fn is_plus_minus_identity(p: &[[f64; 2]; 2], tol: f64) -> bool {
    [1.0, -1.0].iter().any(|&sign| {
        (p[0][0] - sign).abs() < tol
            && p[0][1].abs() < tol
            && p[1][0].abs() < tol
            && (p[1][1] - sign).abs() < tol
    })
}

fn coefficient_from(genus: u32, lambdas: &[u64]) -> BigRational {
    let mut inner = BigRational::from_integer(BigInt::from(2) - BigInt::from(2u64 * genus as u64));
    for &l in lambdas {
        inner -= BigRational::new(BigInt::from(l) - 1, BigInt::from(l));
    }
    -inner
}

fn lambdas_of(alphas: &[u64], betas: &[BigInt]) -> Vec<u64> {
    alphas
        .iter()
        .zip(betas)
        .map(|(&a, beta)| {
            let r = beta
                .mod_floor(&BigInt::from(a))
                .to_u64()
                .expect("residue below alpha");
            lambda_of(a, r)
        })
        .collect()
}

fn report(genus: u32, alphas: &[u64], betas: &[BigInt], flags: Vec<String>) -> AsymptoticsReport {
    let lambdas = lambdas_of(alphas, betas);
    let coprime = alphas
        .iter()
        .zip(betas)
        .all(|(&a, beta)| beta.gcd(&BigInt::from(a)).is_one());
    AsymptoticsReport {
        coefficient: AsymptoticCoefficient {
            rational_part: coefficient_from(genus, &lambdas),
        },
        lambdas,
        quadratic_limit: 0,
        equals_minus_chi_log2: coprime,
        flags,
        decimal: None,
    }
}

/// Limit for the representation induced by the index's own euler class.
/// Flags [`FLAG_NOT_REALIZABLE`] when that class fails the criteria.
pub fn leading_coefficient(index: &SeifertIndex) -> AsymptoticsReport {
    let index = index.normalize();
    let class = euler_class_of_index(&index);
    let realizable = jn_realizable(&class).map(|r| r.realizable).unwrap_or(false);
    let flags = if realizable {
        Vec::new()
    } else {
        vec![FLAG_NOT_REALIZABLE.to_string()]
    };
    let alphas = index.signature().branch_indices().to_vec();
    report(index.genus(), &alphas, class.betas(), flags)
}

/// Limit for the representation of `π1(M)` induced through a different
/// realizable class `alt` in the same `Ext(Γ;Z/2)` coset, with
/// `λ'_j = α_j / gcd(α_j, β'_j)`.
pub fn leading_coefficient_for_class(
    index: &SeifertIndex,
    alt: &CohomologyClass,
) -> Result<AsymptoticsReport> {
    let own = euler_class_of_index(&index.normalize());
    if !own.ext2_equivalent(alt)? {
        return Err(Error::NotEquivalent);
    }
    let alt = alt.normal_form();
    if !jn_realizable(&alt)?.realizable {
        return Err(Error::NotRealizable);
    }
    let alphas = alt.signature().branch_indices().to_vec();
    Ok(report(index.genus(), &alphas, alt.betas(), Vec::new()))
}
