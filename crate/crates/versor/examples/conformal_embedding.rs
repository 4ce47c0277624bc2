//! The Cl(4,1) conformal model: null embedding, reflections and translation
//! rotors, with round-trip extraction.

use versor::{ConformalContext, Multivector, Signature};

fn main() -> versor::Result<()> {
    let ctx = ConformalContext::new(1.0)?;

    let x = [0.3, -1.2, 0.7];
    let point = ctx.embed(&x)?;
    let sq = point.multivector().dot(point.multivector())?;
    println!("F({x:?}) is null: X^2 = {sq:e}");
    println!("extract(embed(x)) = {:?}", ctx.extract(&point)?);

    // translations are rotors: T_a = 1 + na/(2 lambda)
    let a = [1.0, 0.5, 0.0];
    let t = ctx.translation_rotor(&a)?;
    let moved = ctx.translate(&point, &t)?;
    println!("after T_{a:?}: {:?}", ctx.extract(&moved)?);

    // reflections act on embedded points exactly as in 3D
    let sig3 = Signature::euclidean(3)?;
    let mirror = Multivector::basis_vector(sig3, 0);
    let reflected = ctx.reflect(&point, &mirror)?;
    println!("after reflection in e1: {:?}", ctx.extract(&reflected)?);
    Ok(())
}
