//! Coxeter elements as versors: Coxeter number, exponents, and the orbit of
//! a root projected onto the Coxeter plane (a regular decagon for H3).

use versor::{
    coxeter_descriptor, plane_orbit_decomposition, project_to_plane, root_system, GroupId,
    Multivector,
};

fn main() -> versor::Result<()> {
    for id in [GroupId::A3, GroupId::B3, GroupId::H3, GroupId::I2(5)] {
        let desc = coxeter_descriptor(id)?;
        println!(
            "{id}: h = {}, exponents {:?}, plane {}",
            desc.h, desc.exponents, desc.plane
        );
    }

    let desc = coxeter_descriptor(GroupId::H3)?;
    let e1 = Multivector::basis_vector(GroupId::H3.signature(), 0);
    let orbit = plane_orbit_decomposition(&desc.versor, &e1)?;
    println!(
        "H3 orbit of e1: {} points, in plane: {}",
        orbit.orbit_size, orbit.in_plane
    );
    for p in project_to_plane(&orbit.points, &desc.plane)? {
        println!("    ({:+.4}, {:+.4})", p[0], p[1]);
    }

    // all 30 roots of H3 projected onto the Coxeter plane
    let rs = root_system(GroupId::H3)?;
    let projected = project_to_plane(&rs.roots, &desc.plane)?;
    println!("projected all {} H3 roots onto the plane", projected.len());
    Ok(())
}
