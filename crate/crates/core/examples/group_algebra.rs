//! Set products, inverses, subgroups, stabilizers and progressions in a few
//! small groups.
//!
//! Usage: `cargo run --example group_algebra`

use vosper::group::families::{cyclic, dihedral, quaternion, symmetric};
use vosper::{FiniteGroup, Side};

fn tour(g: &FiniteGroup, a: &[usize], b: &[usize]) -> vosper::Result<()> {
    let (a, b) = (g.set(a.iter().copied())?, g.set(b.iter().copied())?);
    println!("{} (order {}, abelian {})", g.name(), g.order(), g.is_abelian());
    println!("  A = {a}, B = {b}");
    println!("  AB = {}   BA = {}", g.set_product(a, b), g.set_product(b, a));
    println!("  A⁻¹ = {}   A⁻¹A = {}", g.set_inverse(a), g.set_product(g.set_inverse(a), a));
    println!("  ⟨A⟩ = {}   generates G: {}", g.generated_subgroup(a).elements(), g.generates(a));
    let st = g.stabilizer_and_cosets(g.set_product(a, b))?;
    println!(
        "  stabilizer of AB = {} with {} right cosets",
        st.subgroup.elements(),
        st.cosets.len()
    );
    match g.is_progression(a) {
        Some(p) => println!("  A is a progression: start {} ratio {} ({:?})", p.start, p.ratio, p.side),
        None => println!("  A is not a progression"),
    }
    println!("  1·A: {}", g.translate(a, 1, Side::Left));
    let orders: Vec<usize> = g.all_subgroups().iter().map(|h| h.order()).collect();
    println!("  subgroup orders {orders:?}");
    Ok(())
}

fn main() -> vosper::Result<()> {
    tour(&cyclic(12)?, &[0, 3, 6, 9], &[0, 1])?;
    tour(&dihedral(8)?, &[0, 1], &[0, 4])?;
    tour(&quaternion()?, &[0, 1, 2], &[0, 4])?;
    tour(&symmetric(3)?, &[0, 1], &[0, 2, 4])?;
    Ok(())
}
