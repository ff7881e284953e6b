//! Irreducible `SU(1,1)`-representations of `π1(M)` sending the fiber `h` to
//! `-I`, for genus-0 Seifert manifolds with three exceptional fibers.
//!
//! A conjugacy class is named by a triple `(k1, k2, k3)` with
//! `tr ρ(q_j) = 2cos(k_j π/α_j)`, `0 < k_j < α_j`, `k_j ≡ β_j (mod 2)`, and
//! the sign `ε` of `Im ξ_1`. The canonical representative has `ρ(q1)`
//! diagonal and `η_2` real positive.

use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::Signed;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::seifert::SeifertIndex;
use crate::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Note attached to triples dropped by [`conjugacy_classes`] because the
/// construction lands on the reducible wall.
pub const NOTE_REDUCIBLE_BOUNDARY: &str = "REDUCIBLE_BOUNDARY";

/// A 2×2 complex matrix.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexMatrix2(pub [[Complex64; 2]; 2]);

impl ComplexMatrix2 {
    pub fn identity() -> Self {
        let (o, z) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0));
        ComplexMatrix2([[o, z], [z, o]])
    }

    /// `(-I)^e`.
    pub fn minus_identity_pow(e: &BigInt) -> Self {
        if e.is_odd() {
            Self::identity().scale(-1.0)
        } else {
            Self::identity()
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = (&self.0, &other.0);
        let mut out = [[Complex64::new(0.0, 0.0); 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        ComplexMatrix2(out)
    }

    pub fn scale(&self, k: f64) -> Self {
        let m = &self.0;
        ComplexMatrix2([[m[0][0] * k, m[0][1] * k], [m[1][0] * k, m[1][1] * k]])
    }

    pub fn det(&self) -> Complex64 {
        let m = &self.0;
        m[0][0] * m[1][1] - m[0][1] * m[1][0]
    }

    pub fn trace(&self) -> Complex64 {
        self.0[0][0] + self.0[1][1]
    }

    pub fn inverse(&self) -> Self {
        let m = &self.0;
        let d = self.det();
        ComplexMatrix2([[m[1][1] / d, -m[0][1] / d], [-m[1][0] / d, m[0][0] / d]])
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Self::identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Entrywise max-norm distance.
    pub fn max_diff(&self, other: &Self) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..2 {
            for j in 0..2 {
                worst = worst.max((self.0[i][j] - other.0[i][j]).norm());
            }
        }
        worst
    }
}

/// `[[ξ, η], [η̄, ξ̄]]` with `|ξ|² - |η|² = 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Su11Element {
    pub xi: Complex64,
    pub eta: Complex64,
}

impl Su11Element {
    pub fn matrix(&self) -> ComplexMatrix2 {
        ComplexMatrix2([[self.xi, self.eta], [self.eta.conj(), self.xi.conj()]])
    }

    /// Reads `ξ`, `η` off the first row; the second row is assumed to be the
    /// conjugate pair.
    pub fn from_matrix(m: &ComplexMatrix2) -> Self {
        Su11Element {
            xi: m.0[0][0],
            eta: m.0[0][1],
        }
    }

    /// `|ξ|² - |η|² - 1`.
    pub fn defect(&self) -> f64 {
        self.xi.norm_sqr() - self.eta.norm_sqr() - 1.0
    }

    pub fn is_valid(&self, tol: f64) -> bool {
        self.defect().abs() < tol
    }
}

fn complex_json(z: &Complex64) -> serde_json::Value {
    serde_json::json!({ "re": z.re, "im": z.im })
}

impl Serialize for Su11Element {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Su11Element", 2)?;
        st.serialize_field("xi", &complex_json(&self.xi))?;
        st.serialize_field("eta", &complex_json(&self.eta))?;
        st.end()
    }
}

/// `(k1, k2, k3; ε)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct RepTriple {
    pub k: [u64; 3],
    /// Sign of `Im ξ_1`: `+1` or `-1`.
    pub epsilon: i8,
}

impl fmt::Display for RepTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = if self.epsilon > 0 { '+' } else { '-' };
        write!(f, "({}, {}, {}; {sign})", self.k[0], self.k[1], self.k[2])
    }
}

/// Canonical representative of one conjugacy class; `ρ(h) = -I`.
#[derive(Debug, Clone, PartialEq)]
pub struct Su11Representation {
    pub index: SeifertIndex,
    pub triple: RepTriple,
    pub q: [Su11Element; 3],
}

impl Su11Representation {
    pub fn h_image(&self) -> ComplexMatrix2 {
        ComplexMatrix2::identity().scale(-1.0)
    }
}

impl Serialize for Su11Representation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Su11Representation", 4)?;
        st.serialize_field("index", &self.index.to_string())?;
        st.serialize_field("triple", &self.triple)?;
        st.serialize_field("q", &self.q)?;
        st.serialize_field("h", "-I")?;
        st.end()
    }
}

/// Residuals of the defining relations of `π1(M)` under a representation.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResidualReport {
    /// `‖ρ(q_j)^{α_j} - (-I)^{β_j}‖_max`
    pub power: [f64; 3],
    /// `‖ρ(q1)ρ(q2)ρ(q3) - (-I)^{-b}‖_max`
    pub product: f64,
    /// `|tr ρ(q_j) - 2cos(k_j π/α_j)|`
    pub trace: [f64; 3],
    /// `||ξ_j|² - |η_j|² - 1|`
    pub su11: [f64; 3],
    pub max: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Canonical representatives for every admissible triple, and the triples
/// that degenerate to reducible representations.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ClassList {
    pub representations: Vec<Su11Representation>,
    pub reducible_boundary: Vec<RepTriple>,
    pub notes: Vec<String>,
}

struct Shape {
    alphas: [u64; 3],
    betas: [BigInt; 3],
    b_odd: bool,
}

fn shape(index: &SeifertIndex) -> Result<Shape> {
    if index.genus() != 0 || index.fibers().len() != 3 {
        return Err(Error::UnsupportedShape(format!(
            "need genus 0 and exactly three exceptional fibers, got genus {} with {}",
            index.genus(),
            index.fibers().len()
        )));
    }
    if !index.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let f = index.fibers();
    Ok(Shape {
        alphas: [f[0].alpha, f[1].alpha, f[2].alpha],
        betas: [f[0].beta.clone(), f[1].beta.clone(), f[2].beta.clone()],
        b_odd: index.b().is_odd(),
    })
}

/// Range and parity conditions on a candidate `k`.
fn is_candidate(k: &[u64; 3], sh: &Shape) -> bool {
    (0..3).all(|j| 0 < k[j] && k[j] < sh.alphas[j] && (k[j] % 2 == 1) == sh.betas[j].is_odd())
}

/// Which side of the admissibility inequalities a candidate falls on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Admissibility {
    /// Some inequality holds strictly.
    Interior,
    /// An inequality holds, but only with equality.
    Boundary,
    Excluded,
}

/// Evaluates the trace inequalities for `k` exactly. With `x_j = k_j/α_j`:
///
/// - `b` even: `x3 <= |x1 - x2|` or `1 - |x1 + x2 - 1| <= x3`
/// - `b` odd: `x3 <= |x1 + x2 - 1|` or `1 - |x1 - x2| <= x3`
///
/// The strict bounds `0 < x3 < 1` hold for every candidate.
pub fn admissibility(alphas: [u64; 3], k: [u64; 3], b_odd: bool) -> Admissibility {
    let x = |j: usize| BigRational::new(BigInt::from(k[j]), BigInt::from(alphas[j]));
    let one = BigRational::from_integer(1.into());
    let (x1, x2, x3) = (x(0), x(1), x(2));
    let diff = (&x1 - &x2).abs();
    let sum = (&x1 + &x2 - &one).abs();
    let (low, high) = if b_odd {
        (sum, &one - diff)
    } else {
        (diff, &one - sum)
    };
    if x3 < low || x3 > high {
        Admissibility::Interior
    } else if x3 == low || x3 == high {
        Admissibility::Boundary
    } else {
        Admissibility::Excluded
    }
}

/// All admissible triples, each with both signs `ε = +1, -1`, ordered by `k`.
pub fn enumerate_triples(index: &SeifertIndex) -> Result<Vec<RepTriple>> {
    let sh = shape(index)?;
    let mut out = Vec::new();
    for k1 in 1..sh.alphas[0] {
        for k2 in 1..sh.alphas[1] {
            for k3 in 1..sh.alphas[2] {
                let k = [k1, k2, k3];
                if !is_candidate(&k, &sh) {
                    continue;
                }
                if admissibility(sh.alphas, k, sh.b_odd) != Admissibility::Excluded {
                    out.push(RepTriple { k, epsilon: 1 });
                    out.push(RepTriple { k, epsilon: -1 });
                }
            }
        }
    }
    Ok(out)
}

/// Builds the canonical representative for `t`:
/// `ξ1 = cos θ1 + iε sin θ1`, `η1 = 0`, `a2 = cos θ2`, `b2` from
/// `(-1)^b (a1 a2 - b1 b2) = cos θ3`, `η2 = √(a2² + b2² - 1) > 0`,
/// `ρ(q3) = (-1)^b (ρ(q1)ρ(q2))^{-1}`, with `θ_j = k_j π/α_j`.
///
/// The triple must satisfy the range and parity conditions for the index;
/// the trace inequalities are not checked here.
pub fn construct_representation(
    index: &SeifertIndex,
    t: &RepTriple,
    tol: f64,
) -> Result<Su11Representation> {
    let sh = shape(index)?;
    if !is_candidate(&t.k, &sh) || t.epsilon.abs() != 1 {
        return Err(Error::UnsupportedShape(format!(
            "triple {t} violates 0 < k_j < α_j, k_j ≡ β_j (mod 2) or ε = ±1"
        )));
    }
    let theta = |j: usize| std::f64::consts::PI * t.k[j] as f64 / sh.alphas[j] as f64;
    let sign = if sh.b_odd { -1.0 } else { 1.0 };
    let eps = t.epsilon as f64;

    let (a1, b1) = (theta(0).cos(), eps * theta(0).sin());
    let a2 = theta(1).cos();
    let b2 = (a1 * a2 - sign * theta(2).cos()) / b1;
    let eta2_sq = a2 * a2 + b2 * b2 - 1.0;
    if eta2_sq < -tol {
        return Err(Error::ConstructionInfeasible(t.k));
    }
    if eta2_sq <= tol {
        return Err(Error::DegenerateReducible(t.k));
    }

    let q1 = Su11Element {
        xi: Complex64::new(a1, b1),
        eta: Complex64::new(0.0, 0.0),
    };
    let q2 = Su11Element {
        xi: Complex64::new(a2, b2),
        eta: Complex64::new(eta2_sq.sqrt(), 0.0),
    };
    let q3m = q1.matrix().mul(&q2.matrix()).inverse().scale(sign);
    let q3 = Su11Element::from_matrix(&q3m);
    Ok(Su11Representation {
        index: index.clone(),
        triple: *t,
        q: [q1, q2, q3],
    })
}

/// Checks `ρ(q_j)^{α_j} = (-I)^{β_j}`, `ρ(q1)ρ(q2)ρ(q3) = (-I)^{-b}`, the
/// trace condition and membership in `SU(1,1)`.
pub fn verify_relations(rep: &Su11Representation, tol: f64) -> ResidualReport {
    let idx = &rep.index;
    let fibers = idx.fibers();
    let mats: Vec<ComplexMatrix2> = rep.q.iter().map(Su11Element::matrix).collect();

    let mut power = [0.0; 3];
    let mut trace = [0.0; 3];
    let mut su11 = [0.0; 3];
    for j in 0..3 {
        let target = ComplexMatrix2::minus_identity_pow(&fibers[j].beta);
        power[j] = mats[j].pow(fibers[j].alpha).max_diff(&target);
        let expected =
            2.0 * (std::f64::consts::PI * rep.triple.k[j] as f64 / fibers[j].alpha as f64).cos();
        trace[j] = (mats[j].trace() - Complex64::new(expected, 0.0)).norm();
        su11[j] = rep.q[j].defect().abs();
    }
    let product = mats[0]
        .mul(&mats[1])
        .mul(&mats[2])
        .max_diff(&ComplexMatrix2::minus_identity_pow(idx.b()));

    let max = power
        .iter()
        .chain(&trace)
        .chain(&su11)
        .fold(product, |m, &x| m.max(x));
    ResidualReport {
        power,
        product,
        trace,
        su11,
        max,
        tolerance: tol,
        passed: max < tol,
    }
}

/// One canonical representative per admissible triple and sign. Triples whose
/// construction degenerates are listed in `reducible_boundary` instead.
pub fn conjugacy_classes(index: &SeifertIndex, tol: f64) -> Result<ClassList> {
    let mut representations = Vec::new();
    let mut reducible_boundary = Vec::new();
    for t in enumerate_triples(index)? {
        match construct_representation(index, &t, tol) {
            Ok(rep) => representations.push(rep),
            Err(Error::DegenerateReducible(_)) => reducible_boundary.push(t),
            Err(e) => return Err(e),
        }
    }
    let notes = if reducible_boundary.is_empty() {
        Vec::new()
    } else {
        vec![NOTE_REDUCIBLE_BOUNDARY.to_string()]
    };
    Ok(ClassList {
        representations,
        reducible_boundary,
        notes,
    })
}

/// Conjugates an `SU(1,1)` element into `SL(2,R)` by `C = [[1, -i], [1, i]]`:
/// returns `C^{-1} M C`.
pub fn su11_to_sl2r(m: &Su11Element, tol: f64) -> Result<[[f64; 2]; 2]> {
    let (o, i) = (Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0));
    let c = ComplexMatrix2([[o, -i], [o, i]]);
    let r = c.inverse().mul(&m.matrix()).mul(&c);
    let imag = r.0.iter().flatten().fold(0.0f64, |w, z| w.max(z.im.abs()));
    if imag > tol {
        return Err(Error::NonRealResult(imag));
    }
    Ok([[r.0[0][0].re, r.0[0][1].re], [r.0[1][0].re, r.0[1][1].re]])
}

/// `k_j/α_j` for the triple, as exact rationals; handy for reports.
pub fn trace_angles(alphas: [u64; 3], k: [u64; 3]) -> [BigRational; 3] {
    [0, 1, 2].map(|j| BigRational::new(BigInt::from(k[j]), BigInt::from(alphas[j])))
}

/// Number of distinct `k`-triples in a triple list.
pub fn distinct_k(triples: &[RepTriple]) -> usize {
    let mut ks: Vec<[u64; 3]> = triples.iter().map(|t| t.k).collect();
    ks.dedup();
    ks.len()
}
