//! Involutive completion with the Janet and Pommaret divisions.
//!
//! The ideal ⟨z² − y² − 2x², xz + xy, yz + y² + x²⟩ has a finite Janet basis
//! in the given coordinates, but its Pommaret completion diverges: the
//! prolongations of x³ by y stay in the ideal without ever becoming
//! involutively reducible.  Run with `cargo run --example completion`.

use involutive::{complete, CompletionLimits, CompletionOutcome, Division, OrderKind, Poly, Q};
use involutive::{Exponent, Term};

fn poly(terms: &[(&[u32], i64)]) -> Poly {
    Poly::from_terms(
        terms
            .iter()
            .map(|(m, c)| {
                (
                    Term::ring(Exponent(m.to_vec())),
                    Q::from_integer((*c).into()),
                )
            })
            .collect(),
        OrderKind::DegRevLex,
    )
}

fn main() {
    let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    // x < y < z; the leading terms under degrevlex are z², xz, yz
    let gens = vec![
        poly(&[(&[0, 0, 2], 1), (&[0, 2, 0], -1), (&[2, 0, 0], -2)]),
        poly(&[(&[1, 0, 1], 1), (&[1, 1, 0], 1)]),
        poly(&[(&[0, 1, 1], 1), (&[0, 2, 0], 1), (&[2, 0, 0], 1)]),
    ];

    println!("generators:");
    for g in &gens {
        println!("  {}", g.render(&vars, 1));
    }

    // Janet completion terminates after adding one single prolongation.
    let outcome = complete(
        &gens,
        Division::Janet,
        OrderKind::DegRevLex,
        3,
        1,
        CompletionLimits::none(),
    );
    match outcome {
        CompletionOutcome::Basis(b) => {
            println!("\nJanet basis ({} elements):", b.gens.len());
            for (i, g) in b.gens.iter().enumerate() {
                let mult: Vec<&str> = b.assignment.mult[i].iter().map(|&k| vars[k - 1].as_str()).collect();
                println!("  {}   (multiplicative: {})", g.render(&vars, 1), mult.join(", "));
            }
        }
        _ => unreachable!("the Janet completion of this ideal terminates"),
    }

    // Pommaret completion diverges in these coordinates: δ-singularity.
    let outcome = complete(
        &gens,
        Division::Pommaret,
        OrderKind::DegRevLex,
        3,
        1,
        CompletionLimits::none(),
    );
    match outcome {
        CompletionOutcome::Diverged { witness, partial } => {
            println!(
                "\nPommaret completion diverges: the prolongation of {} by {} repeats forever",
                partial.gens[witness.generator].le().unwrap().render(&vars),
                vars[witness.variable - 1]
            );
        }
        _ => unreachable!("these coordinates are delta-singular"),
    }
}
