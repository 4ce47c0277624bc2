//! Generate the binary polyhedral groups Q, 2T, 2O, 2I as spin versor
//! groups, realize them as rotation matrices, and verify the group axioms.

use versor::{
    count_reflections, generate_pin_group, generate_spin_group, order_spectrum,
    realize_orthogonal, root_system, verify_group, GroupId,
};

fn main() -> versor::Result<()> {
    for id in [GroupId::A1A1A1, GroupId::A3, GroupId::B3, GroupId::H3] {
        let rs = root_system(id)?;
        let spin = generate_spin_group(&rs)?;
        let pin = generate_pin_group(&rs)?;
        let rotations = realize_orthogonal(&spin)?;
        let full = realize_orthogonal(&pin)?;
        let report = verify_group(&spin, false)?;
        let spectrum = order_spectrum(&spin)?;
        println!(
            "{id}: spin {} ({}), pin {}, rotations {}, full {} ({} reflections)",
            spin.order(),
            report.label.as_deref().unwrap_or("-"),
            pin.order(),
            rotations.order(),
            full.order(),
            count_reflections(&full),
        );
        println!("    axioms pass: {}", report.passed());
        let orders: Vec<String> = spectrum
            .counts
            .iter()
            .map(|(k, c)| format!("{k}x{c}"))
            .collect();
        println!("    element orders: {}", orders.join(" "));
    }
    Ok(())
}
