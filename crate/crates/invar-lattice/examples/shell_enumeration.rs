//! Direct enumeration of lattice points degree by degree, in both bodies:
//! the cross-polytope collects every exponent vector of a given total
//! degree, the simplex only the nonnegative ones. On the full lattice Z^m
//! the cross counts recover the Delannoy-style closed form
//! sum over k of 2^k C(m,k) C(d,k); on a proper sublattice they thin out.

use invar_lattice::{ball_points, shell_points, CharSupport, Geometry, Lattice};

fn main() -> invar_lattice::Result<()> {
    let support = CharSupport::cyclic(7, &[1, 2, 4])?;
    let lattice = Lattice::invariant(&support)?;
    println!(
        "invariant lattice of Z/7 {{1,2,4}}: rank {}, determinant {:?}",
        lattice.rank(),
        lattice.determinant()
    );

    for d in 0..=4 {
        let shell = shell_points(&lattice, d, Geometry::CrossPolytope)?;
        println!("\ncross shell at degree {d}: {} points", shell.points.len());
        for p in shell.points.iter() {
            println!("  {p:?}");
        }
    }

    println!("\nball sizes by degree:");
    println!(
        "{:>7} {:>6} {:>8} {:>10}",
        "degree", "cross", "simplex", "full Z^3"
    );
    for d in 0..=6i64 {
        let cross = ball_points(&lattice, d, Geometry::CrossPolytope)?;
        let simplex = ball_points(&lattice, d, Geometry::Simplex)?;
        let full: i64 = (0..=3.min(d))
            .map(|k| (1 << k) * binomial(3, k) * binomial(d, k))
            .sum();
        println!("{d:>7} {:>6} {:>8} {full:>10}", cross.len(), simplex.len());
    }
    Ok(())
}

fn binomial(n: i64, k: i64) -> i64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
