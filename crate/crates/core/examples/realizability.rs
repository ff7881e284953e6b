//! Which euler classes over a base orbifold come from PSL(2,R)-representations.

use seifert::euler_class::jn_realizable;
use seifert::{CohomologyClass, FuchsianSignature};

fn scan(sig: &FuchsianSignature) -> seifert::Result<usize> {
    let alphas = sig.branch_indices().to_vec();
    let mut hits = 0;
    for b in -4..=1 {
        let mut betas = vec![1i64; alphas.len()];
        loop {
            let c = CohomologyClass::from_ints(sig.clone(), b, &betas)?;
            let rep = jn_realizable(&c)?;
            if rep.realizable {
                println!("  {c} via {:?}", rep.cases);
                hits += 1;
            }
            let Some(j) = (0..betas.len())
                .rev()
                .find(|&j| betas[j] + 1 < alphas[j] as i64)
            else {
                break;
            };
            betas[j] += 1;
            betas[j + 1..].iter_mut().for_each(|x| *x = 1);
        }
    }
    Ok(hits)
}

fn main() -> seifert::Result<()> {
    for alphas in [vec![2, 3, 7], vec![2, 3, 5], vec![3, 3, 4]] {
        let sig = FuchsianSignature::new(0, alphas)?;
        println!(
            "{sig}, χ = {}",
            seifert::rational::canonical(&sig.euler_characteristic())
        );
        let n = scan(&sig)?;
        println!("  {n} realizable classes with 0 < β_j < α_j, b in [-4, 1]");
    }

    let torus2 = FuchsianSignature::new(2, vec![])?;
    for b in -4..=4 {
        let c = CohomologyClass::from_ints(torus2.clone(), b, &[])?;
        println!("genus 2, b = {b}: {}", jn_realizable(&c)?.realizable);
    }
    Ok(())
}
