//! The Brieskorn manifold Σ(2,3,7) from end to end: realizability, lifts,
//! torsion asymptotics and its two SU(1,1) conjugacy classes.

use seifert::asymptotics::leading_coefficient;
use seifert::euler_class::{enumerate_realizable_equivalent, euler_class_of_index, jn_realizable};
use seifert::su11::{conjugacy_classes, verify_relations, DEFAULT_TOLERANCE};
use seifert::SeifertIndex;

fn main() -> seifert::Result<()> {
    let m: SeifertIndex = "0; -1; 2/1, 3/1, 7/1".parse()?;
    println!("M = {m}, base orbifold {}", m.signature());
    println!("π1(M) = {}", m.pi1_presentation());

    let e = euler_class_of_index(&m);
    let report = jn_realizable(&e)?;
    println!(
        "euler class {e}: realizable = {}, cases {:?}",
        report.realizable, report.cases
    );

    let ledger = enumerate_realizable_equivalent(&e)?;
    for c in &ledger.equivalent_realizable {
        println!("  equivalent realizable class {c}");
    }

    let asym = leading_coefficient(&m).with_decimal(10);
    println!(
        "lim log|Tor|/2N = {} · log2 ≈ {}",
        asym.coefficient,
        asym.decimal.as_deref().unwrap_or("?")
    );

    let classes = conjugacy_classes(&m, DEFAULT_TOLERANCE)?;
    for rep in &classes.representations {
        let res = verify_relations(rep, DEFAULT_TOLERANCE);
        println!("SU(1,1) class {}: max residual {:.2e}", rep.triple, res.max);
    }
    Ok(())
}
