//! Compares the two identifications of `∧ᵏ(V∨)` with `(∧ᵏV)∨` on the
//! triangle scalars, over small bases of every parity mix.

use dirac_core::gvect::SpaceObj;
use dirac_core::powers::{check_triangles, DualConvention, Duality, PowerKind};

fn main() {
    let spaces = vec![
        SpaceObj::even("V", "v", 1),
        SpaceObj::even("V", "v", 2),
        SpaceObj::even("V", "v", 3),
        SpaceObj::odd("V", "v", 1),
        SpaceObj::odd("V", "v", 2),
        SpaceObj::odd("V", "v", 3),
        SpaceObj::with_parities("V", "v", &[0, 1]),
        SpaceObj::with_parities("V", "v", &[0, 1, 1]),
        SpaceObj::with_parities("V", "v", &[1, 0, 0]),
    ];
    for conv in [DualConvention::Nested, DualConvention::Braided] {
        let (mut fails, mut total) = (0, 0);
        for v in &spaces {
            for kind in [PowerKind::Alt, PowerKind::Sym] {
                for g in 1..=4usize {
                    let d = Duality::with_convention(v, g, kind, conv).expect("duality");
                    for i in 0..=g {
                        let r = check_triangles(&d, i).expect("triangles");
                        total += 1;
                        if !r.pass() {
                            fails += 1;
                            println!("{conv:?} fails: {kind} {:?} g={g} i={i}", v.parities());
                        }
                    }
                }
            }
        }
        println!("{conv:?}: {fails}/{total} failures");
    }
}
