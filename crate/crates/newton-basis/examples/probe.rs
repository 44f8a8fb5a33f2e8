use newton_basis::arith::{rat, ExpVec, Polynomial};
use newton_basis::spectrum::{spectrum, SpectrumOptions};
use std::time::Instant;

fn main() {
    let terms: Vec<(&[u32], i64)> = vec![
        (&[12, 0, 0], 1), (&[0, 12, 0], 1), (&[0, 0, 12], 1),
        (&[5, 5, 0], 1), (&[5, 0, 5], 1), (&[0, 5, 5], 1),
        (&[3, 3, 1], 1), (&[3, 1, 3], 1), (&[1, 3, 3], 1),
        (&[2, 2, 2], 1),
    ];
    let f = Polynomial::from_terms(
        3,
        terms.iter().map(|(m, c)| (ExpVec::new(m.to_vec()), rat(*c))),
    );
    let t0 = Instant::now();
    let opts = SpectrumOptions::default();
    match spectrum(&f, &opts) {
        Ok(s) => {
            println!("time: {:?}", t0.elapsed());
            println!("mu = {}", s.milnor);
            println!("pg = {}", s.geometric_genus);
            println!("nondeg = {:?}", s.nondegenerate);
            for (v, c) in &s.entries {
                println!("  {} -> {}", v, c);
            }
        }
        Err(e) => println!("error after {:?}: {e}", t0.elapsed()),
    }
}
