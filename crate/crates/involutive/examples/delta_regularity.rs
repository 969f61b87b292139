//! δ-regular coordinates: detecting a singular system and repairing it.
//!
//! The Pommaret division only yields finite bases in "generic enough"
//! coordinates.  `find_delta_regular_coordinates` detects divergence through
//! a witness, applies a sparse elementary transformation, and retries; the
//! result is a coordinate change together with a finite Pommaret basis of the
//! transformed ideal.  Run with `cargo run --example delta_regularity`.

use involutive::{find_delta_regular_coordinates, CompletionLimits, Exponent, OrderKind, Poly, Term, Q};

fn poly(terms: &[(&[u32], i64)]) -> Poly {
    Poly::from_terms(
        terms
            .iter()
            .map(|(m, c)| (Term::ring(Exponent(m.to_vec())), Q::from_integer((*c).into())))
            .collect(),
        OrderKind::DegRevLex,
    )
}

fn main() {
    let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let gens = vec![
        poly(&[(&[0, 0, 2], 1), (&[0, 2, 0], -1), (&[2, 0, 0], -2)]),
        poly(&[(&[1, 0, 1], 1), (&[1, 1, 0], 1)]),
        poly(&[(&[0, 1, 1], 1), (&[0, 2, 0], 1), (&[2, 0, 0], 1)]),
    ];
    println!("generators (delta-singular coordinates):");
    for g in &gens {
        println!("  {}", g.render(&vars, 1));
    }

    let rc = find_delta_regular_coordinates(&gens, OrderKind::DegRevLex, 3, 1, CompletionLimits::none(), 0)
        .expect("the search terminates for this ideal");

    println!("\ncoordinate change found after {} rounds:", rc.rounds);
    for (i, row) in rc.change.matrix.iter().enumerate() {
        let image: Vec<String> = row
            .iter()
            .enumerate()
            .filter(|(_, a)| *a != &Q::from_integer(0.into()))
            .map(|(j, a)| {
                if a == &Q::from_integer(1.into()) {
                    vars[j].clone()
                } else {
                    format!("{a}*{}", vars[j])
                }
            })
            .collect();
        println!("  {} -> {}", vars[i], image.join(" + "));
    }

    println!("\nPommaret basis in the new coordinates ({} elements):", rc.basis.gens.len());
    for g in &rc.basis.gens {
        println!("  {}", g.render(&vars, 1));
    }
    println!("\nbasis degree (= regularity for homogeneous input): {}", rc.basis.deg());
}
