//! The smallest instance where rational and polynomial generators truly
//! differ: Z/7 acting by the characters {1, 2, 4}. Rational invariants are
//! generated in degree 3, polynomial ones need degree 4, and the extension
//! index tracks exactly how the degree-3 polynomial attempt falls short.

use invar_lattice::{extension_index, verify_all, CharSupport, Geometry};

fn main() -> invar_lattice::Result<()> {
    let support = CharSupport::cyclic(7, &[1, 2, 4])?;
    let report = verify_all(&support)?;

    println!("group             {}", report.group);
    println!("effective order   {}", report.effective_order);
    println!(
        "rational bounds   gamma_r = {}, beta_r = {}",
        report.gamma_r, report.beta_r
    );
    println!(
        "polynomial bounds gamma_poly = {}, beta_poly = {}",
        report.gamma_poly, report.beta_poly
    );

    println!("\nhow the two geometries close up:");
    for d in 2..=4 {
        let cross = extension_index(&support, d, Geometry::CrossPolytope)?;
        let simplex = extension_index(&support, d, Geometry::Simplex)?;
        println!("  degree {d}: cross index {cross}, simplex index {simplex}");
    }

    let rational = &report.witnesses.rational;
    println!("\nrational generators in degree {}:", rational.degree);
    for monomial in &rational.monomials {
        println!("  {monomial}");
    }
    let polynomial = &report.witnesses.polynomial;
    println!("polynomial generators in degree {}:", polynomial.degree);
    for monomial in &polynomial.monomials {
        println!("  {monomial}");
    }
    Ok(())
}
