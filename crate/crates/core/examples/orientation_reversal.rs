//! Reversing orientation negates the euler class and keeps the asymptotics.

use seifert::asymptotics::leading_coefficient;
use seifert::euler_class::euler_class_of_index;
use seifert::SeifertIndex;

fn main() -> seifert::Result<()> {
    for s in [
        "0; -1; 2/1, 3/1, 7/1",
        "1; 3; 5/2, 8/3",
        "2; -7; 9/4, 4/1, 6/5",
    ] {
        let m: SeifertIndex = s.parse()?;
        let r = m.orientation_reverse();
        let (e, er) = (euler_class_of_index(&m), euler_class_of_index(&r));
        println!("{m}  ->  {r}");
        println!("  e = {e}, e(reversed) = {er}, -e = {}", e.negate());
        println!(
            "  coefficients {} and {}, involution: {}",
            leading_coefficient(&m).coefficient,
            leading_coefficient(&r).coefficient,
            r.orientation_reverse() == m
        );
    }
    Ok(())
}
