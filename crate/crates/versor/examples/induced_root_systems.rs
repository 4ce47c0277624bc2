//! Read the spinors of each binary polyhedral group as 4D vectors; the sets
//! are the A1^4, D4, F4 and H4 root systems, verified closed under 4D
//! reflections.

use versor::{generate_spin_group, induce_root_system, root_system, GroupId};

fn main() -> versor::Result<()> {
    for id in [GroupId::A1A1A1, GroupId::A3, GroupId::B3, GroupId::H3] {
        let vg = generate_spin_group(&root_system(id)?)?;
        let rs4 = induce_root_system(&vg)?;
        println!("{id} spinors -> {:?} with {} roots", rs4.label, rs4.len());
        for r in rs4.roots.iter().take(4) {
            println!(
                "    ({:+.4}, {:+.4}, {:+.4}, {:+.4})",
                r.0[0], r.0[1], r.0[2], r.0[3]
            );
        }
        println!("    ...");
    }
    Ok(())
}
