//! The group `H^2(Γ;Z) = ab<x0, x1, ..., xn | α_j x_j = x0>` and its
//! quotient by twice itself.
//!
//! Elements are integer vectors `(c0; c1, ..., cn)` standing for
//! `c0 x0 + Σ c_j x_j`. The relation lattice is spanned by the rows
//! `(-1, 0, ..., α_j, ..., 0)`.

mod matrix;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::rational::serialize_bigints;
use crate::seifert::FuchsianSignature;
use crate::{Error, Result};

pub use matrix::{smith_normal_form, IntegerMatrix, SmithNormalForm};

/// `c0 x0 + Σ c_j x_j` over a fixed signature.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CohomologyClass {
    signature: FuchsianSignature,
    coeffs: Vec<BigInt>,
}

impl CohomologyClass {
    /// `coeffs = (c0, c1, ..., cn)`.
    pub fn new(signature: FuchsianSignature, coeffs: Vec<BigInt>) -> Result<Self> {
        let expected = signature.n() + 1;
        if coeffs.len() != expected {
            return Err(Error::CoefficientCount {
                expected,
                got: coeffs.len(),
            });
        }
        Ok(CohomologyClass { signature, coeffs })
    }

    pub fn from_ints(signature: FuchsianSignature, b: i64, betas: &[i64]) -> Result<Self> {
        let coeffs = std::iter::once(b)
            .chain(betas.iter().copied())
            .map(BigInt::from)
            .collect();
        Self::new(signature, coeffs)
    }

    pub fn zero(signature: FuchsianSignature) -> Self {
        let coeffs = vec![BigInt::zero(); signature.n() + 1];
        CohomologyClass { signature, coeffs }
    }

    pub fn signature(&self) -> &FuchsianSignature {
        &self.signature
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x0`.
    pub fn b(&self) -> &BigInt {
        &self.coeffs[0]
    }

    /// Coefficients of `x1..xn`.
    pub fn betas(&self) -> &[BigInt] {
        &self.coeffs[1..]
    }

    pub fn is_normal(&self) -> bool {
        self.betas()
            .iter()
            .zip(self.signature.branch_indices())
            .all(|(c, &a)| !c.is_negative() && *c < BigInt::from(a))
    }

    /// The unique representative with `0 <= c_j < α_j`.
    pub fn normal_form(&self) -> CohomologyClass {
        let mut coeffs = self.coeffs.clone();
        for (j, &a) in self.signature.branch_indices().iter().enumerate() {
            let (q, r) = coeffs[j + 1].div_mod_floor(&BigInt::from(a));
            coeffs[0] += q;
            coeffs[j + 1] = r;
        }
        CohomologyClass {
            signature: self.signature.clone(),
            coeffs,
        }
    }

    /// Equality in `H^2(Γ;Z)`.
    pub fn equals(&self, other: &CohomologyClass) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.normal_form().coeffs == other.normal_form().coeffs)
    }

    /// Normal form of `-self`.
    pub fn negate(&self) -> CohomologyClass {
        CohomologyClass {
            signature: self.signature.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
        .normal_form()
    }

    /// Coefficient-wise difference (not normalized).
    pub fn difference(&self, other: &CohomologyClass) -> Result<CohomologyClass> {
        self.check_same(other)?;
        Ok(CohomologyClass {
            signature: self.signature.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    /// Coefficient-wise `k·self` (not normalized).
    pub fn scale(&self, k: i64) -> CohomologyClass {
        CohomologyClass {
            signature: self.signature.clone(),
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Whether the class lies in `2·H^2(Γ;Z)`, i.e. is trivial in
    /// `Ext/2Ext ≅ Ext(Γ;Z/2)`.
    pub fn is_in_double(&self) -> bool {
        DoubleMembership::new(&self.signature).contains(&self.coeffs)
    }

    /// Same class in `Ext(Γ;Z/2)`: the difference lies in `2·H^2(Γ;Z)`.
    pub fn ext2_equivalent(&self, other: &CohomologyClass) -> Result<bool> {
        Ok(self.difference(other)?.is_in_double())
    }

    fn check_same(&self, other: &CohomologyClass) -> Result<()> {
        if self.signature != other.signature {
            return Err(Error::SignatureMismatch);
        }
        Ok(())
    }
}

impl fmt::Display for CohomologyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let betas: Vec<String> = self.betas().iter().map(|c| c.to_string()).collect();
        write!(f, "({}; {})", self.b(), betas.join(", "))
    }
}

/// `{"b": c0, "beta": [c1..cn], "alpha": [α1..αn]}`
impl Serialize for CohomologyClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Ints<'a>(&'a [BigInt]);
        impl Serialize for Ints<'_> {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                serialize_bigints(self.0, s)
            }
        }
        let mut st = s.serialize_struct("CohomologyClass", 3)?;
        st.serialize_field("b", &Single(self.b()))?;
        st.serialize_field("beta", &Ints(self.betas()))?;
        st.serialize_field("alpha", self.signature.branch_indices())?;
        st.end()
    }
}

struct Single<'a>(&'a BigInt);

impl Serialize for Single<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        crate::rational::serialize_bigint(self.0, s)
    }
}

/// Relation rows `(-1, 0, ..., α_j, ..., 0)`, one per cone point, over the
/// generators `x0..xn`.
pub fn relation_matrix(signature: &FuchsianSignature) -> IntegerMatrix {
    let n = signature.n();
    let mut m = IntegerMatrix::zeros(n, n + 1);
    for (j, &a) in signature.branch_indices().iter().enumerate() {
        m.set(j, 0, BigInt::from(-1));
        m.set(j, j + 1, BigInt::from(a));
    }
    m
}

/// Membership test for `2·H^2(Γ;Z)` over one signature.
///
/// `v ∈ 2G` iff `v = 2u + Rᵀm` has an integer solution `(u, m)`, where the
/// columns of `Rᵀ` are the relation rows. The Smith normal form of
/// `[2I | Rᵀ]` is computed once and reused for every query.
#[derive(Debug, Clone)]
pub struct DoubleMembership {
    system: SmithNormalForm,
}

impl DoubleMembership {
    pub fn new(signature: &FuchsianSignature) -> Self {
        let dim = signature.n() + 1;
        let relations = relation_matrix(signature);
        let mut a = IntegerMatrix::zeros(dim, dim + signature.n());
        for i in 0..dim {
            a.set(i, i, BigInt::from(2));
        }
        for j in 0..signature.n() {
            for i in 0..dim {
                a.set(i, dim + j, relations.get(j, i).clone());
            }
        }
        DoubleMembership {
            system: smith_normal_form(&a),
        }
    }

    /// `coeffs = (c0, ..., cn)`; panics on a length mismatch.
    pub fn contains(&self, coeffs: &[BigInt]) -> bool {
        self.system.is_solvable(coeffs)
    }
}
