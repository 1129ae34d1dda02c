//! Generator certificates: a degree-d witness is a set of lattice points
//! inside the degree-d body whose span is the whole invariant lattice,
//! together with integer coefficients rewriting the canonical basis in
//! terms of the chosen generators. Below the sharp degree the search
//! reports exactly why it fails.

use invar_lattice::{
    beta_rational, default_names, generator_witness, CharSupport, Error, Geometry,
};

fn main() -> invar_lattice::Result<()> {
    let support = CharSupport::cyclic(9, &[1, 2, 5])?;
    let names = default_names(&support);
    let beta = beta_rational(&support)?;
    println!("Z/9 with {{1, 2, 5}}: beta_r = {beta}\n");

    for degree in 1..=beta {
        match generator_witness(&support, degree, Geometry::CrossPolytope) {
            Ok(certificate) => {
                println!("degree {degree}: generated by");
                for monomial in certificate.monomials(&names)? {
                    println!("  {monomial}");
                }
                for (row, target) in certificate
                    .coefficients
                    .iter()
                    .zip(&certificate.target_basis)
                {
                    println!("  basis vector {target:?} = {row:?} against the generators");
                }
            }
            Err(Error::InsufficientDegree { degree }) => {
                println!("degree {degree}: span still too small");
            }
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
