//! Saturation, satiety and the sequential regularity invariants.
//!
//! With a degrevlex Pommaret basis, saturating with respect to the maximal
//! ideal is just dividing the class-1 elements by powers of x₁ — no extra
//! Groebner computation.  The invariants c₀, …, c_D of the saturation chain
//! recover both the regularity and the depth of the quotient.
//! Run with `cargo run --example saturation_trung`.

use involutive::decomp::{regularity_bounds, saturate, trung_invariants};
use involutive::{complete, CompletionLimits, CompletionOutcome, Division, Exponent, OrderKind, Poly};

fn main() {
    let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    // a non-saturated quasi-stable ideal: z^2 * <x, y, z>, with x < y < z
    let gens: Vec<Exponent> = vec![
        Exponent(vec![1, 0, 2]),
        Exponent(vec![0, 1, 2]),
        Exponent(vec![0, 0, 3]),
    ];
    println!("ideal:");
    for g in &gens {
        println!("  {}", g.render(&vars));
    }

    let polys: Vec<Poly> = gens.iter().cloned().map(Poly::monomial).collect();
    let basis = match complete(&polys, Division::Pommaret, OrderKind::DegRevLex, 3, 1, CompletionLimits::none()) {
        CompletionOutcome::Basis(b) => b,
        _ => unreachable!("quasi-stable ideals complete"),
    };
    println!("\nPommaret basis ({} elements):", basis.gens.len());
    for g in &basis.gens {
        println!("  {}", g.render(&vars, 1));
    }

    let (sat, satiety) = saturate(&basis);
    match satiety {
        None => println!("\nthe ideal is saturated"),
        Some(s) => {
            println!("\nsaturation (satiety {s}):");
            for g in &sat.gens {
                println!("  {}", g.render(&vars, 1));
            }
        }
    }

    let t = trung_invariants(&basis.les(), 3, OrderKind::DegRevLex).expect("quasi-stable");
    println!("\nsequential invariants c = {:?}", t.c);
    println!("regularity = max c_j = {}", t.regularity);
    println!("depth index (minimal class of the minimal generators): {}", t.depth_index);

    let (lcm_bound, degree_bound) = regularity_bounds(&basis.les(), 3);
    println!("a priori bounds: lcm-based {lcm_bound}, generator-degree-based {degree_bound}");
}
