//! Every rational invariant is a ratio of two semi-invariants of the same
//! weight. Given monomial spanning sets for the numerator and denominator,
//! the decomposition checks the common weight and returns every pairwise
//! invariant Laurent ratio of a numerator over a denominator.

use invar_lattice::{degree, monomial_string, ratio_decomposition, AbelianGroup, Character};

fn main() -> invar_lattice::Result<()> {
    // Z/4 acting on four variables with character residues (1, 1, 3, 2):
    // duplicates are kept, because monomials live in the full variable set.
    let group = AbelianGroup::cyclic(4)?;
    let chars: Vec<Character> = [1i64, 1, 3, 2]
        .iter()
        .map(|&r| group.character(&[r]))
        .collect::<invar_lattice::Result<_>>()?;
    let names: Vec<String> = ["y1", "y2", "y3", "y4"].map(String::from).into();

    // Weight-1 semi-invariants for both sides of the ratio.
    let numerators: Vec<Vec<i64>> = vec![vec![1, 0, 0, 0], vec![0, 1, 0, 0], vec![0, 0, 1, 1]];
    let denominators: Vec<Vec<i64>> = vec![vec![0, 3, 2, 0], vec![1, 0, 2, 1]];

    let dec = ratio_decomposition(&group, &chars, &numerators, &denominators)?;
    println!("common weight {:?}", dec.common_weight.residues());
    println!("numerators   degrees {:?}", dec.numerators.degrees());
    println!("denominators degrees {:?}", dec.denominators.degrees());

    println!("\ninvariant ratios:");
    for ratio in dec.invariant_ratios.iter() {
        println!(
            "  {}  (degree {})",
            monomial_string(ratio, &names)?,
            degree(ratio)?
        );
    }
    Ok(())
}
