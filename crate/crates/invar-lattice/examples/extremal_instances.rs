//! The lower bound gamma_r^m >= |effective group| is attained exactly when
//! the group is (Z/dZ)^m and the support is a basis of its character group,
//! in which case the invariant lattice is the cube lattice d * Z^m. The
//! check below confirms both directions on a few instances.

use invar_lattice::{check_extremal, gamma_rational, AbelianGroup, CharSupport};

fn basis_support(d: i64, m: usize) -> invar_lattice::Result<CharSupport> {
    let group = AbelianGroup::new(vec![d; m])?;
    let rows: Vec<Vec<i64>> = (0..m)
        .map(|i| (0..m).map(|j| i64::from(i == j)).collect())
        .collect();
    CharSupport::new(group, &rows)
}

fn main() -> invar_lattice::Result<()> {
    println!("cube lattices, where the bound is tight:");
    for d in [2i64, 3, 4, 5] {
        for m in 1..=3usize {
            let support = basis_support(d, m)?;
            let gamma = gamma_rational(&support)?;
            let extremal = check_extremal(&support, gamma)?;
            println!(
                "  (Z/{d})^{m}: gamma_r = {gamma}, gamma_r^m = {}, order = {}, extremal: {extremal}",
                gamma.pow(m as u32),
                support.effective_order()
            );
        }
    }

    println!("\ntypical instances, where it is strict:");
    for (n, residues) in [
        (7i64, vec![1i64, 2, 4]),
        (12, vec![1, 5]),
        (15, vec![1, 2, 4, 8]),
    ] {
        let support = CharSupport::cyclic(n, &residues)?;
        let gamma = gamma_rational(&support)?;
        let extremal = check_extremal(&support, gamma)?;
        println!(
            "  Z/{n} with {residues:?}: gamma_r^m = {} > {} = order, extremal: {extremal}",
            gamma.pow(support.len() as u32),
            support.effective_order()
        );
    }
    Ok(())
}
