//! Complementary cone decompositions and the Hilbert series.
//!
//! For the monomial ideal ⟨z³, yz², y²⟩ the complement of the staircase
//! splits into finitely many disjoint cones; summing a geometric series per
//! cone gives the Hilbert series (1 + 2λ + 2λ²)/(1 − λ), hence dimension 1
//! and multiplicity 1.  Run with `cargo run --example decomposition_hilbert`.

use involutive::decomp::{complementary_decomposition_janet, hilbert};
use involutive::Exponent;

fn main() {
    let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    // x < y < z
    let gens = vec![
        Exponent(vec![0, 0, 3]),
        Exponent(vec![0, 1, 2]),
        Exponent(vec![0, 2, 0]),
    ];
    println!("monomial ideal:");
    for g in &gens {
        println!("  {}", g.render(&vars));
    }

    let dec = complementary_decomposition_janet(&gens, 3);
    println!("\ndisjoint cones covering the complement ({}):", dec.cones.len());
    for c in &dec.cones {
        let mult: Vec<&str> = c.mult.iter().map(|&k| vars[k - 1].as_str()).collect();
        println!(
            "  vertex {:6}  free variables {{{}}}  (dimension {})",
            c.vertex.render(&vars),
            mult.join(", "),
            c.dim()
        );
    }

    let h = hilbert(&dec);
    let num: Vec<String> = h
        .numerator
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(i, c)| match i {
            0 => c.to_string(),
            1 => format!("{c}*t"),
            _ => format!("{c}*t^{i}"),
        })
        .collect();
    println!("\nHilbert series: ({}) / (1 - t)^{}", num.join(" + "), h.denominator_power);
    println!("dimension:      {}", h.dimension);
    println!("multiplicity:   {}", h.multiplicity);
    let hp: Vec<String> = h
        .hilbert_polynomial
        .iter()
        .enumerate()
        .map(|(i, c)| if i == 0 { c.to_string() } else { format!("{c}*s^{i}") })
        .collect();
    println!("Hilbert polynomial: {}", if hp.is_empty() { "0".to_string() } else { hp.join(" + ") });
    println!("index of regularity: {}", h.index_of_regularity);
}
