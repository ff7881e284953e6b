//! Smith normal form of the relation matrix of H²(Γ;Z).

use seifert::abelian::{relation_matrix, smith_normal_form};
use seifert::FuchsianSignature;

fn main() -> seifert::Result<()> {
    for alphas in [vec![2, 3, 7], vec![4, 6], vec![2, 2, 2, 3]] {
        let sig = FuchsianSignature::new(0, alphas)?;
        let r = relation_matrix(&sig);
        let snf = smith_normal_form(&r);
        let factors: Vec<String> = snf
            .invariant_factors()
            .iter()
            .map(ToString::to_string)
            .collect();
        println!("{sig}\n{r}invariant factors: {}\n", factors.join(", "));
    }
    Ok(())
}
