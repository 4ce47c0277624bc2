//! Affine-extension point arrays: translate a pentagon, orbit it under C5,
//! and compare the Euclidean pipeline with the conformal one.

use versor::{
    affine_orbit, affine_orbit_conformal, cyclic_rotation_group, cyclic_spin_group,
    degeneracy_report, golden_ratio, translation_sweep, ConformalContext, SeedPolytope,
    TranslationSpec,
};

fn main() -> versor::Result<()> {
    let seed = SeedPolytope::pentagon();
    let c5 = cyclic_rotation_group(5)?;
    let tau = golden_ratio();

    for length in [1.0, tau, 1.0 / tau, 0.7312] {
        let t = TranslationSpec::new(vec![1.0, 0.0], length)?;
        let arr = affine_orbit(&seed, &c5, &t, false)?;
        let report = degeneracy_report(&arr);
        println!(
            "length {length:.6}: {} points from {} candidates (degenerate: {})",
            arr.cardinality(),
            arr.candidate_count,
            report.degenerate
        );
    }

    // distinguished lengths show up as cardinality minima in a sweep
    let lengths: Vec<f64> = (1..=40).map(|k| k as f64 * 0.05).collect();
    let sweep = translation_sweep(&seed, &c5, &[1.0, 0.0], &lengths)?;
    let min = sweep.iter().min_by_key(|(_, c)| *c).unwrap();
    println!("sweep minimum: {} points at length {:.2}", min.1, min.0);

    // the conformal pipeline reproduces the same sets
    let ctx = ConformalContext::new(1.0)?;
    let spin = cyclic_spin_group(5)?;
    let t = TranslationSpec::new(vec![1.0, 0.0], 1.0 / tau)?;
    let plain = affine_orbit(&seed, &c5, &t, false)?;
    let conf = affine_orbit_conformal(&seed, &spin, &t, &ctx, false)?;
    println!(
        "conformal pipeline matches 3D at length 1/tau: {}",
        plain.set_eq(&conf, 1e-9)
    );
    Ok(())
}
