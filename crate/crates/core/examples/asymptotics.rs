//! Leading coefficient of the Reidemeister torsion for a few Seifert manifolds.

use seifert::asymptotics::{lambda_of, leading_coefficient, rotation_order};
use seifert::{FuchsianSignature, SeifertIndex};

fn main() -> seifert::Result<()> {
    let indices = [
        "0; -1; 2/1, 3/1, 7/1",
        "0; -2; 2/1, 3/2, 7/6",
        "0; -1; 4/2, 6/3, 5/1",
        "1; 0; 3/1",
        "0; -1; 2/1, 3/1, 5/1",
    ];
    for s in indices {
        let m: SeifertIndex = s.parse()?;
        let r = leading_coefficient(&m).with_decimal(8);
        println!(
            "{m:<24} λ = {:?}  coefficient {} · log2 ≈ {}  {:?}",
            r.lambdas,
            r.coefficient,
            r.decimal.as_deref().unwrap_or(""),
            r.flags
        );
    }

    let utb = FuchsianSignature::new(2, vec![])?.unit_tangent_bundle();
    println!(
        "T¹Σ₂ = {utb}: {} · log2",
        leading_coefficient(&utb).coefficient
    );

    for (a, b) in [(12, 8), (9, 3), (7, 0)] {
        println!(
            "λ({a}, {b}) = {}, rotation order = {}",
            lambda_of(a, b),
            rotation_order(b, a)?
        );
    }
    Ok(())
}
