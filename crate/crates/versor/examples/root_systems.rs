//! Close catalog simple roots into full root systems and print the Cartan
//! matrices.

use versor::{cartan_matrix_of, root_system, GroupId};

fn main() -> versor::Result<()> {
    let catalog = [
        GroupId::A1A1A1,
        GroupId::A3,
        GroupId::B3,
        GroupId::H3,
        GroupId::I2(5),
        GroupId::I2(7),
    ];
    for id in catalog {
        let rs = root_system(id)?;
        println!("{id}: {} roots from {} simple roots", rs.roots.len(), rs.simple_roots.len());
        let cm = cartan_matrix_of(id)?;
        for row in &cm.entries {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:7.3}")).collect();
            println!("    [{}]", cells.join(" "));
        }
    }

    // B3 has two root lengths; the closure keeps track of which is which
    let b3 = root_system(GroupId::B3)?;
    let long = b3
        .lengths
        .iter()
        .filter(|&&l| (l - 2.0_f64.sqrt()).abs() < versor::TOL)
        .count();
    println!("B3 length split: {long} long, {} short", b3.roots.len() - long);
    Ok(())
}
