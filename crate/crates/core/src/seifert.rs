//! Seifert indices and Fuchsian signatures.
//!
//! An index `(g; b; (α1,β1), ..., (αn,βn))` follows the Jankins–Neumann sign
//! convention: `π1(M)` is generated by `a_i, b_i, q_j, h` with `h` central,
//! `q_j^{α_j} = h^{β_j}` and `q_1⋯q_n Π[a_i,b_i] = h^{-b}`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::presentation::{Presentation, Word};
use crate::rational::serialize_bigint;
use crate::{Error, Result};

/// Base orbifold data `(g; α1, ..., αn)`, every `α_j >= 2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct FuchsianSignature {
    genus: u32,
    branch_indices: Vec<u64>,
}

impl FuchsianSignature {
    pub fn new(genus: u32, branch_indices: Vec<u64>) -> Result<Self> {
        if let Some(a) = branch_indices.iter().find(|&&a| a < 2) {
            return Err(Error::InvalidBranchIndex(a.to_string()));
        }
        Ok(FuchsianSignature {
            genus,
            branch_indices,
        })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn branch_indices(&self) -> &[u64] {
        &self.branch_indices
    }

    /// Number of cone points.
    pub fn n(&self) -> usize {
        self.branch_indices.len()
    }

    /// `χ = 2 - 2g - Σ (α_j - 1)/α_j`, exactly.
    pub fn euler_characteristic(&self) -> BigRational {
        let mut chi = BigRational::from_integer(BigInt::from(2) - 2 * BigInt::from(self.genus));
        for &a in &self.branch_indices {
            chi -= BigRational::new(BigInt::from(a) - 1, BigInt::from(a));
        }
        chi
    }

    /// True when the base orbifold is hyperbolic (`χ < 0`).
    pub fn is_hyperbolic(&self) -> bool {
        self.euler_characteristic() < BigRational::zero()
    }

    /// Index `(g; 2g-2; (α_j, α_j - 1))` of the unit tangent bundle of the
    /// orbifold.
    pub fn unit_tangent_bundle(&self) -> SeifertIndex {
        SeifertIndex {
            genus: self.genus,
            b: BigInt::from(2) * BigInt::from(self.genus) - 2,
            fibers: self
                .branch_indices
                .iter()
                .map(|&a| ExceptionalFiber {
                    alpha: a,
                    beta: BigInt::from(a - 1),
                })
                .collect(),
        }
    }

    /// `<a_i, b_i, q_j | q_j^{α_j}, q_1⋯q_n Π[a_i,b_i]>`.
    pub fn presentation(&self) -> Presentation {
        let (generators, surface) = surface_generators(self.genus);
        let cones = cone_generators(self.n());
        let mut relators: Vec<Word> = cones
            .iter()
            .zip(&self.branch_indices)
            .map(|(q, &a)| Word::new().with(q, a as i64))
            .collect();
        let long = long_relator(&cones, &surface);
        if !long.is_empty() {
            relators.push(long);
        }
        Presentation {
            generators: generators.into_iter().chain(cones).collect(),
            relators,
            annotations: Vec::new(),
        }
    }
}

impl fmt::Display for FuchsianSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; ", self.genus)?;
        let a: Vec<String> = self.branch_indices.iter().map(u64::to_string).collect();
        write!(f, "{})", a.join(", "))
    }
}

/// One exceptional fiber `(α, β)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ExceptionalFiber {
    pub alpha: u64,
    #[serde(serialize_with = "serialize_bigint")]
    pub beta: BigInt,
}

/// Unvalidated index data, as read from text or another front end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeifertIndexInput {
    pub genus: BigInt,
    pub b: BigInt,
    pub pairs: Vec<(BigInt, BigInt)>,
}

impl SeifertIndexInput {
    pub fn validate(self) -> Result<SeifertIndex> {
        validate(self)
    }
}

/// Checks genus and branch indices. The result is not normalized.
pub fn validate(raw: SeifertIndexInput) -> Result<SeifertIndex> {
    let genus = match raw.genus.to_u32() {
        Some(g) => g,
        None => return Err(Error::InvalidGenus(raw.genus.to_string())),
    };
    let mut fibers = Vec::with_capacity(raw.pairs.len());
    for (alpha, beta) in raw.pairs {
        match alpha.to_u64() {
            Some(a) if a >= 2 => fibers.push(ExceptionalFiber { alpha: a, beta }),
            _ => return Err(Error::InvalidBranchIndex(alpha.to_string())),
        }
    }
    Ok(SeifertIndex {
        genus,
        b: raw.b,
        fibers,
    })
}

impl FromStr for SeifertIndexInput {
    type Err = Error;

    /// Grammar: `genus ; b ; α/β, α/β, ...`, whitespace-insensitive. The
    /// fiber list (and its leading `;`) may be omitted.
    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let parts: Vec<&str> = compact.split(';').collect();
        if parts.len() < 2 || parts.len() > 3 {
            return Err(err("expected `genus; b; a/b, ...`"));
        }
        let int = |t: &str, what: &str| -> Result<BigInt> {
            if t.is_empty() {
                return Err(err(&format!("missing {what}")));
            }
            t.parse::<BigInt>()
                .map_err(|_| err(&format!("{what} `{t}` is not an integer")))
        };
        let genus = int(parts[0], "genus")?;
        let b = int(parts[1], "b")?;
        let mut pairs = Vec::new();
        if let Some(list) = parts.get(2).filter(|l| !l.is_empty()) {
            for item in list.split(',') {
                let (a, be) = item
                    .split_once('/')
                    .ok_or_else(|| err(&format!("fiber `{item}` is not of the form a/b")))?;
                pairs.push((int(a, "alpha")?, int(be, "beta")?));
            }
        }
        Ok(SeifertIndexInput { genus, b, pairs })
    }
}

/// A validated Seifert index. Normalized when `0 <= β_j < α_j` for all `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SeifertIndex {
    genus: u32,
    #[serde(serialize_with = "serialize_bigint")]
    b: BigInt,
    fibers: Vec<ExceptionalFiber>,
}

impl SeifertIndex {
    /// Convenience constructor from machine integers.
    pub fn new(genus: u32, b: i64, pairs: &[(u64, i64)]) -> Result<Self> {
        validate(SeifertIndexInput {
            genus: genus.into(),
            b: b.into(),
            pairs: pairs
                .iter()
                .map(|&(a, be)| (BigInt::from(a), BigInt::from(be)))
                .collect(),
        })
    }

    pub fn from_parts(genus: u32, b: BigInt, fibers: Vec<ExceptionalFiber>) -> Result<Self> {
        if let Some(f) = fibers.iter().find(|f| f.alpha < 2) {
            return Err(Error::InvalidBranchIndex(f.alpha.to_string()));
        }
        Ok(SeifertIndex { genus, b, fibers })
    }

    pub fn genus(&self) -> u32 {
        self.genus
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn fibers(&self) -> &[ExceptionalFiber] {
        &self.fibers
    }

    pub fn betas(&self) -> impl Iterator<Item = &BigInt> {
        self.fibers.iter().map(|f| &f.beta)
    }

    pub fn signature(&self) -> FuchsianSignature {
        FuchsianSignature {
            genus: self.genus,
            branch_indices: self.fibers.iter().map(|f| f.alpha).collect(),
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.fibers
            .iter()
            .all(|f| !f.beta.is_negative_or_ge(f.alpha))
    }

    /// `β_j ↦ β_j mod α_j`, `b ↦ b + Σ ⌊β_j/α_j⌋`.
    pub fn normalize(&self) -> SeifertIndex {
        let mut b = self.b.clone();
        let fibers = self
            .fibers
            .iter()
            .map(|f| {
                let (q, r) = f.beta.div_mod_floor(&BigInt::from(f.alpha));
                b += q;
                ExceptionalFiber {
                    alpha: f.alpha,
                    beta: r,
                }
            })
            .collect();
        SeifertIndex {
            genus: self.genus,
            b,
            fibers,
        }
    }

    /// Reverses the fiber orientation: `(b, β_j) ↦ (-b, -β_j)`, then
    /// normalizes.
    pub fn orientation_reverse(&self) -> SeifertIndex {
        SeifertIndex {
            genus: self.genus,
            b: -&self.b,
            fibers: self
                .fibers
                .iter()
                .map(|f| ExceptionalFiber {
                    alpha: f.alpha,
                    beta: -&f.beta,
                })
                .collect(),
        }
        .normalize()
    }

    /// `π1(M) = <a_i, b_i, q_j, h | [h, x], q_j^{α_j} h^{-β_j},
    /// q_1⋯q_n Π[a_i,b_i] h^b>`.
    ///
    /// Exponents must fit in `i64`; anything larger is a caller error.
    pub fn pi1_presentation(&self) -> Presentation {
        let (surface_gens, surface) = surface_generators(self.genus);
        let cones = cone_generators(self.fibers.len());
        let mut generators: Vec<String> = surface_gens
            .into_iter()
            .chain(cones.iter().cloned())
            .collect();

        let mut relators: Vec<Word> = generators
            .iter()
            .map(|x| Word::new().commutator("h", x))
            .collect();
        for (q, f) in cones.iter().zip(&self.fibers) {
            let beta = f.beta.to_i64().expect("beta exponent fits in i64");
            relators.push(Word::new().with(q, f.alpha as i64).with("h", -beta));
        }
        let b = self.b.to_i64().expect("b exponent fits in i64");
        let long = long_relator(&cones, &surface).with("h", b);
        if !long.is_empty() {
            relators.push(long);
        }
        generators.push("h".to_string());
        Presentation {
            generators,
            relators,
            annotations: vec!["h is central".to_string()],
        }
    }
}

trait OutOfRange {
    fn is_negative_or_ge(&self, alpha: u64) -> bool;
}

impl OutOfRange for BigInt {
    fn is_negative_or_ge(&self, alpha: u64) -> bool {
        self.sign() == num_bigint::Sign::Minus || *self >= BigInt::from(alpha)
    }
}

impl FromStr for SeifertIndex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<SeifertIndexInput>()?.validate()
    }
}

/// `g; b; α/β,α/β,...` (or `g; b` with no fibers).
impl fmt::Display for SeifertIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}; {}", self.genus, self.b)?;
        if !self.fibers.is_empty() {
            let pairs: Vec<String> = self
                .fibers
                .iter()
                .map(|p| format!("{}/{}", p.alpha, p.beta))
                .collect();
            write!(f, "; {}", pairs.join(","))?;
        }
        Ok(())
    }
}

fn surface_generators(genus: u32) -> (Vec<String>, Vec<(String, String)>) {
    let pairs: Vec<(String, String)> = (1..=genus)
        .map(|i| (format!("a{i}"), format!("b{i}")))
        .collect();
    let flat = pairs
        .iter()
        .flat_map(|(a, b)| [a.clone(), b.clone()])
        .collect();
    (flat, pairs)
}

fn cone_generators(n: usize) -> Vec<String> {
    (1..=n).map(|j| format!("q{j}")).collect()
}

/// `q_1⋯q_n Π[a_i, b_i]` with `[a, b] = a b a^-1 b^-1`.
fn long_relator(cones: &[String], surface: &[(String, String)]) -> Word {
    let mut w = Word::new();
    for q in cones {
        w.push(q, 1);
    }
    surface.iter().fold(w, |w, (a, b)| w.commutator(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn idx(s: &str) -> SeifertIndex {
        s.parse().unwrap()
    }

    fn r(p: i64, q: i64) -> BigRational {
        BigRational::new(p.into(), q.into())
    }

    #[test]
    fn validate_accepts_and_rejects() {
        assert!(SeifertIndex::new(0, -1, &[(2, 1), (3, 1), (7, 1)]).is_ok());
        assert!(SeifertIndex::new(0, 0, &[]).is_ok());
        assert!(matches!(
            SeifertIndex::new(0, 0, &[(1, 0)]),
            Err(Error::InvalidBranchIndex(_))
        ));
        assert!(matches!(
            "-1; 0; 2/1".parse::<SeifertIndex>(),
            Err(Error::InvalidGenus(_))
        ));
        assert!(matches!(
            "0; 0; 0/1".parse::<SeifertIndex>(),
            Err(Error::InvalidBranchIndex(_))
        ));
        assert!(matches!(
            FuchsianSignature::new(0, vec![2, 1]),
            Err(Error::InvalidBranchIndex(_))
        ));
    }

    #[test]
    fn parse_is_whitespace_insensitive() {
        let a = idx("0; -1; 2/1, 3/1, 7/1");
        let b = idx("0;-1;2/1,3/1,7/1");
        let c = idx(" 0 ; - 1 ;\t2 / 1 ,3/1 , 7/1 ");
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(idx("2; 2"), idx("2; 2;"));
        assert!(idx("2;2").fibers().is_empty());
        for bad in [
            "",
            "0",
            "0;1;2",
            "0;x;2/1",
            "0;1;2/1,",
            "0;1;2/1;3",
            "0;;2/1",
        ] {
            assert!(
                matches!(bad.parse::<SeifertIndex>(), Err(Error::Parse { .. })),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn display_round_trips() {
        let a = idx("0; -2; 2/1, 3/2, 7/6");
        assert_eq!(a.to_string(), "0; -2; 2/1,3/2,7/6");
        assert_eq!(idx(&a.to_string()), a);
        assert_eq!(idx("3; 4").to_string(), "3; 4");
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(
            idx("0; 1; 2/-1, 3/-1, 7/-1").normalize(),
            idx("0; -2; 2/1, 3/2, 7/6")
        );
        let n = idx("0; -1; 2/1, 3/1, 7/1");
        assert_eq!(n.normalize(), n);
        assert_eq!(idx("0; 0; 5/12").normalize(), idx("0; 2; 5/2"));
        assert!(!idx("0; 0; 5/12").is_normalized());
        assert!(idx("0; 0; 5/0").is_normalized());
    }

    #[test]
    fn orientation_reverse_examples() {
        let m = idx("0; -1; 2/1, 3/1, 7/1");
        let rev = m.orientation_reverse();
        assert_eq!(rev, idx("0; -2; 2/1, 3/2, 7/6"));
        assert_eq!(rev.orientation_reverse(), m);
        assert_eq!(idx("4; 3").orientation_reverse(), idx("4; -3"));
    }

    #[test]
    fn euler_characteristic_examples() {
        let sig = |g, a: &[u64]| FuchsianSignature::new(g, a.to_vec()).unwrap();
        assert_eq!(sig(0, &[2, 3, 7]).euler_characteristic(), r(-1, 42));
        assert_eq!(sig(2, &[]).euler_characteristic(), r(-2, 1));
        assert_eq!(sig(0, &[2, 3, 5]).euler_characteristic(), r(1, 30));
        assert!(sig(0, &[2, 3, 7]).is_hyperbolic());
        assert!(!sig(0, &[2, 3, 6]).is_hyperbolic());
    }

    #[test]
    fn unit_tangent_bundle_examples() {
        let sig = |g, a: &[u64]| FuchsianSignature::new(g, a.to_vec()).unwrap();
        assert_eq!(
            sig(0, &[2, 3, 7]).unit_tangent_bundle(),
            idx("0; -2; 2/1,3/2,7/6")
        );
        assert_eq!(sig(2, &[]).unit_tangent_bundle(), idx("2; 2"));
        assert_eq!(sig(1, &[4]).unit_tangent_bundle(), idx("1; 0; 4/3"));
    }

    #[test]
    fn brieskorn_pi1_presentation() {
        let p = idx("0; -1; 2/1, 3/1, 7/1").pi1_presentation();
        assert_eq!(p.generators, ["q1", "q2", "q3", "h"]);
        let rels: Vec<String> = p.relators.iter().map(|w| w.to_string()).collect();
        assert_eq!(
            rels,
            [
                "h q1 h^-1 q1^-1",
                "h q2 h^-1 q2^-1",
                "h q3 h^-1 q3^-1",
                "q1^2 h^-1",
                "q2^3 h^-1",
                "q3^7 h^-1",
                "q1 q2 q3 h^-1",
            ]
        );
        assert!(p.is_well_formed());
        assert_eq!(p.annotations, ["h is central"]);
    }

    #[test]
    fn trivial_pi1_presentation() {
        let p = idx("0; 0").pi1_presentation();
        assert_eq!(p.generators, ["h"]);
        assert!(p.relators.is_empty());
    }

    #[test]
    fn pi1_relator_count() {
        let m = idx("2; 1; 3/1, 5/2");
        let p = m.pi1_presentation();
        let non_central = p.generators.len() - 1;
        assert_eq!(p.relators.len(), m.fibers().len() + 1 + non_central);
    }

    #[test]
    fn fuchsian_presentations() {
        let p = FuchsianSignature::new(0, vec![2, 3, 7])
            .unwrap()
            .presentation();
        let rels: Vec<String> = p.relators.iter().map(|w| w.to_string()).collect();
        assert_eq!(rels, ["q1^2", "q2^3", "q3^7", "q1 q2 q3"]);

        let p = FuchsianSignature::new(2, vec![]).unwrap().presentation();
        assert_eq!(p.generators, ["a1", "b1", "a2", "b2"]);
        assert_eq!(p.relators.len(), 1);
        assert_eq!(
            p.relators[0].to_string(),
            "a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1"
        );

        let p = FuchsianSignature::new(3, vec![2, 5])
            .unwrap()
            .presentation();
        assert_eq!(p.generators.len(), 2 * 3 + 2);
    }

    fn normalized_index() -> impl Strategy<Value = SeifertIndex> {
        (0u32..4, -20i64..20, prop::collection::vec(2u64..31, 0..6))
            .prop_flat_map(|(g, b, alphas)| {
                let betas: Vec<_> = alphas.iter().map(|&a| 0..a as i64).collect();
                (Just(g), Just(b), Just(alphas), betas)
            })
            .prop_map(|(g, b, alphas, betas)| {
                let pairs: Vec<(u64, i64)> = alphas.into_iter().zip(betas).collect();
                SeifertIndex::new(g, b, &pairs).unwrap()
            })
    }

    fn raw_index() -> impl Strategy<Value = SeifertIndex> {
        (
            0u32..4,
            -50i64..50,
            prop::collection::vec((2u64..20, -100i64..100), 0..6),
        )
            .prop_map(|(g, b, pairs)| SeifertIndex::new(g, b, &pairs).unwrap())
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(m in raw_index()) {
            let n = m.normalize();
            prop_assert!(n.is_normalized());
            prop_assert_eq!(n.normalize(), n);
        }

        #[test]
        fn reverse_is_an_involution(m in normalized_index()) {
            prop_assert_eq!(m.orientation_reverse().orientation_reverse(), m);
        }

        #[test]
        fn unit_tangent_bundle_is_normalized(g in 0u32..5, a in prop::collection::vec(2u64..50, 0..7)) {
            let sig = FuchsianSignature::new(g, a).unwrap();
            let utb = sig.unit_tangent_bundle();
            prop_assert!(utb.is_normalized());
            prop_assert_eq!(utb.signature(), sig);
        }

        #[test]
        fn chi_sign_identity(g in 0u32..4, a in prop::collection::vec(2u64..40, 0..7)) {
            let sig = FuchsianSignature::new(g, a.clone()).unwrap();
            let mut complexity = BigRational::from_integer(BigInt::from(2 * g as i64 - 2));
            for &x in &a {
                complexity += r(1, 1) - r(1, x as i64);
            }
            prop_assert_eq!(sig.euler_characteristic() < r(0, 1), complexity > r(0, 1));
        }

        #[test]
        fn killing_h_gives_the_fuchsian_presentation(m in normalized_index()) {
            let p = m.pi1_presentation();
            prop_assert!(p.is_well_formed());
            prop_assert_eq!(p.kill_generator("h"), m.signature().presentation());
        }
    }
}
