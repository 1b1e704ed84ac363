//! Two combinatorial identities: the graph identity and the closed form for
//! minuscule coweights in type A.

use adlv::bset::{a_type_terms, graph_identity, verify_a_identity, Graph};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> adlv::Result<()> {
    let path = Graph::new(4, &[(0, 1), (1, 2), (2, 3)])?;
    for y in [0b0000, 0b0101, 0b1111] {
        println!(
            "path graph on 4 vertices, Y = {y:04b}: {}",
            graph_identity(&path, y)?
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let g = Graph::random(7, 0.5, &mut rng);
    println!(
        "random graph {:?}: {}",
        g.edges(),
        graph_identity(&g, 0b1010101)?
    );

    for t in a_type_terms(6, 3)? {
        println!(
            "  n = 6, i = 3: parts {:?}, area {}, gcd sum {}",
            t.parts,
            t.area(),
            t.gcd_sum()
        );
    }
    println!(" n  i  terms  displayed form  exponent-corrected form");
    for n in 2..=8 {
        for i in 1..n {
            let r = verify_a_identity(n, i)?;
            println!(
                "{n:>2} {i:>2} {:>6}  {:>14}  {:>23}",
                r.terms, r.literal_ok, r.derived_ok
            );
        }
    }
    Ok(())
}
