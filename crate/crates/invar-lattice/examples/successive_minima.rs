//! Successive minima of the invariant lattice under the L1 norm. The
//! largest minimum is gamma_r, the product of all of them is capped by
//! m! times the lattice determinant, and for prime order the same bound
//! rearranges into an upper bound on gamma_r itself.

use invar_lattice::{minkowski_rhs, successive_minima, CharSupport};

fn main() -> invar_lattice::Result<()> {
    let instances: [(i64, &[i64]); 5] = [
        (7, &[1, 2, 4]),
        (9, &[1, 8]),
        (12, &[1, 5, 8]),
        (16, &[1, 3, 5, 7]),
        (31, &[1, 5, 25]),
    ];
    for (n, residues) in instances {
        let support = CharSupport::cyclic(n, residues)?;
        let minima = successive_minima(&support)?;
        let det = support.effective_order();
        let m = support.len();
        let product: i64 = minima.iter().product();
        let factorial: i64 = (1..=m as i64).product();
        println!("Z/{n} with {residues:?}");
        println!("  minima        {minima:?}");
        println!("  product {product} <= m! * det = {}", factorial * det);
        if let Ok(rhs) = minkowski_rhs(m, det) {
            println!(
                "  prime bound   gamma_r = {} <= {rhs}",
                minima.last().unwrap()
            );
        }
        println!();
    }
    Ok(())
}
