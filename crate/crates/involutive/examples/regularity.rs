//! Castelnuovo-Mumford regularity without minimal resolutions.
//!
//! In δ-regular coordinates the regularity of a homogeneous ideal is simply
//! the degree of its Pommaret basis; the search for such coordinates is
//! exactly the δ-regularity repair loop.  Here a monomial curve of degree 8
//! in P³ reaches the (rare) large regularity 13.
//! Run with `cargo run --example regularity`.

use involutive::syzygy::bayer_stillman_check;
use involutive::{regularity, CompletionLimits, Exponent, OrderKind, Poly, Term, Q};

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
    let vars: Vec<String> = ["w", "x", "y", "z"].iter().map(|s| s.to_string()).collect();
    // ideal of a monomial space curve of degree 8; w < x < y < z
    let gens = vec![
        // z^8 - w*x*y^6
        poly(&[(&[0, 0, 0, 8], 1), (&[1, 1, 6, 0], -1)]),
        // y^7 - x^6*z
        poly(&[(&[0, 0, 7, 0], 1), (&[0, 6, 0, 1], -1)]),
        // y*z^7 - w*x^7
        poly(&[(&[0, 0, 1, 7], 1), (&[1, 7, 0, 0], -1)]),
    ];
    println!("generators:");
    for g in &gens {
        println!("  {}", g.render(&vars, 1));
    }

    let rep = regularity(&gens, 4, CompletionLimits::none(), 0).expect("terminates");
    println!("\nCastelnuovo-Mumford regularity: {}", rep.regularity);
    println!("coordinates were already delta-regular: {}", rep.change.is_identity());
    println!("Pommaret basis size: {}", rep.basis.gens.len());
    println!("extremal Betti numbers:");
    for e in &rep.extremal {
        println!(
            "  beta_{{{},{}}} = {}   (class {} at basis degree {})",
            e.position, e.degree, e.value, e.class, e.generator_degree
        );
    }

    // the regularity is also the smallest degree passing the linear-quotient test
    let q = rep.regularity;
    println!("\ndegreewise check around the regularity:");
    for d in q.saturating_sub(1)..=q + 1 {
        println!("  degree {d}: passes = {}", bayer_stillman_check(&gens, d, 4));
    }
}
