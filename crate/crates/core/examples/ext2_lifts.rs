//! Ext(Γ;Z/2) classes and their realizable representatives.

use seifert::abelian::DoubleMembership;
use seifert::euler_class::enumerate_realizable_equivalent;
use seifert::{CohomologyClass, FuchsianSignature};

fn main() -> seifert::Result<()> {
    let sig = FuchsianSignature::new(0, vec![2, 3, 7])?;
    let x = CohomologyClass::from_ints(sig.clone(), -1, &[1, 1, 1])?;
    let y = CohomologyClass::from_ints(sig.clone(), -2, &[1, 2, 6])?;
    println!("{x} ~ {y} in Ext(Γ;Z/2): {}", x.ext2_equivalent(&y)?);
    println!("{x} - {y} in 2·H²: {}", x.difference(&y)?.is_in_double());

    let membership = DoubleMembership::new(&sig);
    for c in [
        x.scale(2),
        x.clone(),
        CohomologyClass::from_ints(sig.clone(), 0, &[0, 1, 1])?,
    ] {
        println!("{c} in 2·H²: {}", membership.contains(c.coeffs()));
    }

    for base in [x, CohomologyClass::from_ints(sig, 0, &[0, 0, 0])?] {
        let ledger = enumerate_realizable_equivalent(&base)?;
        println!("lifts of {base}: {}", ledger.equivalent_realizable.len());
        for c in &ledger.equivalent_realizable {
            println!("  {c}");
        }
    }
    Ok(())
}
