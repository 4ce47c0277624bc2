//! Acceptance gate: one test per criterion, each printing a single
//! pass/fail line (visible with `cargo test -- --nocapture`).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use versor::coxeter::{coxeter_number, coxeter_versor, i2_versor_identity_deviation};
use versor::{
    affine_orbit, affine_orbit_conformal, cartan_matrix, close_under_reflections,
    count_reflections, coxeter_descriptor, cyclic_rotation_group, cyclic_spin_group,
    generate_pin_group, generate_spin_group, golden_ratio, induce_root_system, order_spectrum,
    plane_orbit_decomposition, project_to_plane, realize_orthogonal, reflect, root_system,
    simple_roots, ConformalContext, GroupId, Multivector, Signature, TranslationSpec, Versor,
};

struct Criterion {
    number: usize,
    name: &'static str,
}

impl Criterion {
    fn new(number: usize, name: &'static str) -> Self {
        Self { number, name }
    }

    fn finish(self, pass: bool) {
        println!(
            "criterion {:2}: {} - {}",
            self.number,
            if pass { "PASS" } else { "FAIL" },
            self.name
        );
        assert!(pass, "criterion {} failed: {}", self.number, self.name);
    }
}

fn rank3_catalog() -> [GroupId; 4] {
    [GroupId::A1A1A1, GroupId::A3, GroupId::B3, GroupId::H3]
}

#[test]
fn criterion_01_root_cardinalities() {
    let c = Criterion::new(1, "root cardinalities 6/12/18/30 and 2n for I2(n)");
    let mut pass = true;
    for (id, want) in rank3_catalog().iter().zip([6, 12, 18, 30]) {
        pass &= root_system(*id).unwrap().roots.len() == want;
    }
    for n in 3..=12 {
        pass &= root_system(GroupId::I2(n)).unwrap().roots.len() == 2 * n;
    }
    c.finish(pass);
}

#[test]
fn criterion_02_spinor_group_orders() {
    let c = Criterion::new(2, "spin orders 8/24/48/120, pin closures 16/48/96/240");
    let mut pass = true;
    for (id, (spin, pin)) in rank3_catalog()
        .iter()
        .zip([(8, 16), (24, 48), (48, 96), (120, 240)])
    {
        let rs = root_system(*id).unwrap();
        pass &= generate_spin_group(&rs).unwrap().order() == spin;
        pass &= generate_pin_group(&rs).unwrap().order() == pin;
    }
    c.finish(pass);
}

#[test]
fn criterion_03_realized_group_orders() {
    let c = Criterion::new(3, "chiral 4/12/24/60, full 8/24/48/120, 15 H3 reflections");
    let mut pass = true;
    for (id, (chiral, full)) in rank3_catalog()
        .iter()
        .zip([(4, 8), (12, 24), (24, 48), (60, 120)])
    {
        let rs = root_system(*id).unwrap();
        let rot = realize_orthogonal(&generate_spin_group(&rs).unwrap()).unwrap();
        let all = realize_orthogonal(&generate_pin_group(&rs).unwrap()).unwrap();
        pass &= rot.order() == chiral && all.order() == full;
        if *id == GroupId::H3 {
            pass &= count_reflections(&all) == 15;
        }
    }
    c.finish(pass);
}

#[test]
fn criterion_04_binary_group_identification() {
    let c = Criterion::new(4, "order spectra of Q/2T/2O/2I match brute-force goldens");
    let mut pass = true;
    // goldens frozen from the build's own brute-force spectra
    let goldens: [(GroupId, &[(usize, usize)]); 4] = [
        (GroupId::A1A1A1, &[(1, 1), (2, 1), (4, 6)]),
        (GroupId::A3, &[(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)]),
        (
            GroupId::B3,
            &[(1, 1), (2, 1), (3, 8), (4, 18), (6, 8), (8, 12)],
        ),
        (
            GroupId::H3,
            &[(1, 1), (2, 1), (3, 20), (4, 30), (5, 24), (6, 20), (10, 24)],
        ),
    ];
    for (id, spectrum) in goldens {
        let vg = generate_spin_group(&root_system(id).unwrap()).unwrap();
        let got = order_spectrum(&vg).unwrap();
        pass &= got.total() == vg.order();
        for &(order, count) in spectrum {
            pass &= got.counts.get(&order) == Some(&count);
        }
        pass &= got.counts.len() == spectrum.len();
        if id == GroupId::A1A1A1 {
            pass &= got.counts.get(&2) == Some(&1); // exactly one element of order 2
        }
    }
    c.finish(pass);
}

#[test]
fn criterion_05_induced_rank4_root_systems() {
    let c = Criterion::new(5, "induced 4D sets of sizes 8/24/48/120 close under reflect4");
    let mut pass = true;
    for (id, want) in rank3_catalog().iter().zip([8, 24, 48, 120]) {
        let vg = generate_spin_group(&root_system(*id).unwrap()).unwrap();
        // induce_root_system runs the exhaustive all-ordered-pairs closure
        // check internally and errors if it fails
        match induce_root_system(&vg) {
            Ok(rs4) => pass &= rs4.len() == want,
            Err(_) => pass = false,
        }
    }
    c.finish(pass);
}

#[test]
fn criterion_06_i2n_cartan_matrix() {
    let c = Criterion::new(6, "I2(n) Cartan matrix [[2,-2cos(pi/n)],[-2cos(pi/n),2]]");
    let mut pass = true;
    for n in 3..=12 {
        let cm = cartan_matrix(&simple_roots(GroupId::I2(n))).unwrap();
        let off = -2.0 * (std::f64::consts::PI / n as f64).cos();
        pass &= (cm.entries[0][0] - 2.0).abs() < 1e-12
            && (cm.entries[1][1] - 2.0).abs() < 1e-12
            && (cm.entries[0][1] - off).abs() < 1e-12
            && (cm.entries[1][0] - off).abs() < 1e-12;
    }
    c.finish(pass);
}

#[test]
fn criterion_07_coxeter_element_identities() {
    let c = Criterion::new(7, "W^n identity, h values, H3 versor/plane/exponents");
    let mut pass = true;
    for n in 3..=12 {
        let w = coxeter_versor(&simple_roots(GroupId::I2(n))).unwrap();
        pass &= i2_versor_identity_deviation(&w, n).unwrap() < 1e-12;
    }
    for (id, h, exps) in [
        (GroupId::H3, 10, vec![1, 5, 9]),
        (GroupId::A3, 4, vec![1, 2, 3]),
        (GroupId::B3, 6, vec![1, 3, 5]),
    ] {
        let desc = coxeter_descriptor(id).unwrap();
        pass &= desc.h == h && desc.exponents == exps;
        pass &= coxeter_number(&desc.versor).unwrap() == h;
    }
    // H3 Coxeter versor: 2W = -tau e2 - e3 + (tau-1) e1e2e3
    let tau = golden_ratio();
    let desc = coxeter_descriptor(GroupId::H3).unwrap();
    let w2 = desc.versor.multivector().scale(2.0);
    pass &= (w2.get(0b010) + tau).abs() < 1e-12
        && (w2.get(0b100) + 1.0).abs() < 1e-12
        && (w2.get(0b111) - (tau - 1.0)).abs() < 1e-12
        && w2.get(0b001).abs() < 1e-12
        && w2.get(0b011).abs() < 1e-12;
    // Coxeter plane = normalize(e1e2 + tau e3e1) up to sign
    let sig = GroupId::H3.signature();
    let mut expected = Multivector::zero(sig);
    let s = 1.0 / (1.0 + tau * tau).sqrt();
    expected.set(0b011, s); // e1e2
    expected.set(0b101, -tau * s); // e3e1 stored as -e1e3
    pass &= desc.plane.approx_eq(&expected, 1e-9)
        || desc.plane.approx_eq(&expected.scale(-1.0), 1e-9);
    c.finish(pass);
}

#[test]
fn criterion_08_coxeter_plane_orbits() {
    let c = Criterion::new(8, "H3: decagon orbit, normal pair, A1xH2 union closure");
    let mut pass = true;
    let desc = coxeter_descriptor(GroupId::H3).unwrap();
    let sig = GroupId::H3.signature();
    let e1 = Multivector::basis_vector(sig, 0);
    let orbit = plane_orbit_decomposition(&desc.versor, &e1).unwrap();
    pass &= orbit.orbit_size == 10 && orbit.in_plane;
    let coords = project_to_plane(&orbit.points, &desc.plane).unwrap();
    for pair in coords.windows(2) {
        let a = pair[0][1].atan2(pair[0][0]);
        let b = pair[1][1].atan2(pair[1][0]);
        let mut delta = (b - a).abs();
        if delta > std::f64::consts::PI {
            delta = 2.0 * std::f64::consts::PI - delta;
        }
        pass &= (delta - std::f64::consts::PI / 5.0).abs() < 1e-9;
    }
    let normal = desc.normal.clone().unwrap();
    let pair_orbit = plane_orbit_decomposition(&desc.versor, &normal).unwrap();
    pass &= pair_orbit.orbit_size == 2;
    pass &= pair_orbit.points[1].approx_eq(&normal.scale(-1.0), 1e-9);
    let mut union = orbit.points;
    union.push(normal.clone());
    union.push(normal.scale(-1.0));
    let closed = close_under_reflections(&union).unwrap();
    pass &= closed.len() == 12;
    c.finish(pass);
}

#[test]
fn criterion_09_point_array_cardinalities() {
    let c = Criterion::new(9, "pentagon + C5: length 1 -> 15 points, length tau -> 20");
    let seed = versor::SeedPolytope::pentagon();
    let c5 = cyclic_rotation_group(5).unwrap();
    let mut pass = true;
    for (length, want) in [(1.0, 15), (golden_ratio(), 20)] {
        let t = TranslationSpec::new(vec![1.0, 0.0], length).unwrap();
        pass &= affine_orbit(&seed, &c5, &t, false).unwrap().cardinality() == want;
    }
    c.finish(pass);
}

#[test]
fn criterion_10_conformal_layer() {
    let c = Criterion::new(10, "null embedding, translation covariance, pipeline equality");
    let mut pass = true;
    let ctx = ConformalContext::new(1.0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let x: [f64; 3] = [
            rng.gen_range(-3.0..3.0),
            rng.gen_range(-3.0..3.0),
            rng.gen_range(-3.0..3.0),
        ];
        let fx = ctx.embed(&x).unwrap();
        pass &= fx.multivector().dot(fx.multivector()).unwrap().abs() < 1e-12;
        let a: [f64; 3] = [
            rng.gen_range(-3.0..3.0),
            rng.gen_range(-3.0..3.0),
            rng.gen_range(-3.0..3.0),
        ];
        let t = ctx.translation_rotor(&a).unwrap();
        let moved = ctx.translate(&fx, &t).unwrap();
        let sum: Vec<f64> = x.iter().zip(&a).map(|(p, q)| p + q).collect();
        pass &= moved
            .multivector()
            .max_deviation(ctx.embed(&sum).unwrap().multivector())
            < 1e-9;
    }
    let seed = versor::SeedPolytope::pentagon();
    let c5 = cyclic_rotation_group(5).unwrap();
    let spin = cyclic_spin_group(5).unwrap();
    let tau = golden_ratio();
    for length in [1.0, tau, 1.0 / tau] {
        let t = TranslationSpec::new(vec![1.0, 0.0], length).unwrap();
        let plain = affine_orbit(&seed, &c5, &t, false).unwrap();
        let conf = affine_orbit_conformal(&seed, &spin, &t, &ctx, false).unwrap();
        pass &= plain.set_eq(&conf, 1e-9);
    }
    c.finish(pass);
}

#[test]
fn criterion_11_property_suites() {
    let c = Criterion::new(11, "randomized property suites at 1e-12, 1000 trials each");
    let mut pass = true;
    let sig = Signature::euclidean(3).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(4096);
    let random_vector = |rng: &mut ChaCha8Rng| -> Multivector {
        Multivector::vector(
            sig,
            &[
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
                rng.gen_range(-2.0..2.0),
            ],
        )
    };
    let random_unit = |rng: &mut ChaCha8Rng| -> Multivector {
        loop {
            if let Some(u) = Multivector::vector(
                sig,
                &[
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                    rng.gen_range(-1.0..1.0),
                ],
            )
            .normalized()
            {
                return u;
            }
        }
    };
    let random_mv = |rng: &mut ChaCha8Rng| -> Multivector {
        let coeffs: Vec<f64> = (0..8).map(|_| rng.gen_range(-1.0..1.0)).collect();
        Multivector::from_coeffs(sig, &coeffs)
    };

    // reflection involution + Eq (1)/Eq (2) agreement
    for _ in 0..1000 {
        let v = random_vector(&mut rng);
        let a = random_unit(&mut rng);
        let once = reflect(&v, &a).unwrap();
        pass &= reflect(&once, &a).unwrap().max_deviation(&v) < 1e-12;
        // classical formula v - 2(a.v)a against the sandwich -ava
        let oracle = &v - &a.scale(2.0 * a.dot(&v).unwrap());
        pass &= once.max_deviation(&oracle) < 1e-12;
    }

    // sandwich orthogonality: rotors preserve dot products
    for _ in 0..1000 {
        let a = random_unit(&mut rng);
        let b = random_unit(&mut rng);
        let r = Versor::try_new(a.geometric_product(&b).unwrap()).unwrap();
        let v = random_vector(&mut rng);
        let w = random_vector(&mut rng);
        let rv = r.sandwich(&v).unwrap();
        let rw = r.sandwich(&w).unwrap();
        pass &= (rv.dot(&rw).unwrap() - v.dot(&w).unwrap()).abs() < 1e-12;
        pass &= rv.is_grade(1, 1e-12);
    }

    // geometric-product associativity
    for _ in 0..1000 {
        let (x, y, z) = (random_mv(&mut rng), random_mv(&mut rng), random_mv(&mut rng));
        let lhs = x.geometric_product(&y).unwrap().geometric_product(&z).unwrap();
        let rhs = x.geometric_product(&y.geometric_product(&z).unwrap()).unwrap();
        pass &= lhs.max_deviation(&rhs) < 1e-12;
    }

    // reverse anti-homomorphism: reverse(xy) = reverse(y) reverse(x)
    for _ in 0..1000 {
        let (x, y) = (random_mv(&mut rng), random_mv(&mut rng));
        let lhs = x.geometric_product(&y).unwrap().reverse();
        let rhs = y.reverse().geometric_product(&x.reverse()).unwrap();
        pass &= lhs.max_deviation(&rhs) < 1e-12;
    }

    c.finish(pass);
}
