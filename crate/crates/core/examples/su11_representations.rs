//! SU(1,1)-representations of genus-0 Seifert manifolds with three fibers,
//! and their SL(2,R) conjugates.

use seifert::su11::{
    conjugacy_classes, enumerate_triples, su11_to_sl2r, verify_relations, DEFAULT_TOLERANCE,
};
use seifert::SeifertIndex;

fn main() -> seifert::Result<()> {
    for s in [
        "0; -1; 2/1, 3/1, 7/1",
        "0; -2; 2/1, 3/2, 7/6",
        "0; -1; 3/1, 4/1, 5/2",
        "0; 0; 2/1, 4/1, 4/1",
    ] {
        let m: SeifertIndex = s.parse()?;
        let triples = enumerate_triples(&m)?;
        let classes = conjugacy_classes(&m, DEFAULT_TOLERANCE)?;
        println!(
            "{m}: {} admissible (k, ε), {} irreducible classes, reducible boundary {:?}",
            triples.len(),
            classes.representations.len(),
            classes
                .reducible_boundary
                .iter()
                .map(|t| t.k)
                .collect::<Vec<_>>()
        );
        for rep in classes.representations.iter().take(2) {
            let res = verify_relations(rep, DEFAULT_TOLERANCE);
            let q2 = su11_to_sl2r(&rep.q[1], DEFAULT_TOLERANCE)?;
            println!(
                "  {}: residual {:.1e}, ρ(q2) in SL(2,R) = {q2:.4?}",
                rep.triple, res.max
            );
        }
    }
    Ok(())
}
