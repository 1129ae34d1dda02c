//! The sharp family over Z/n: residues paired as {1, n-1, 2, n-2, ...}
//! force beta_r = gamma_r = max(3, n divided by ceil(m/2), rounded up),
//! which is the worst case over all supports of size m. The sweep below
//! recomputes every cell and compares it with the closed form.

use invar_lattice::{family_sweep, DEFAULT_POINT_BUDGET};

fn main() -> invar_lattice::Result<()> {
    let workers = std::thread::available_parallelism().map_or(1, |p| p.get());
    let rows = family_sweep((3, 24), (1, 6), workers, DEFAULT_POINT_BUDGET)?;

    println!(
        "{:>4} {:>3} {:>9} {:>7} {:>8}  match",
        "n", "m", "predicted", "beta_r", "gamma_r"
    );
    for row in &rows {
        println!(
            "{:>4} {:>3} {:>9} {:>7} {:>8}  {}",
            row.n, row.m, row.predicted, row.beta_r, row.gamma_r, row.matches
        );
    }
    let sharp = rows.iter().filter(|r| r.matches).count();
    println!("\n{sharp} of {} cells match the closed form", rows.len());
    Ok(())
}
