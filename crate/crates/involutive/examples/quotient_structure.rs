//! Structural invariants of a quotient ring: dimension, depth,
//! Cohen-Macaulayness, standard pairs and primary decomposition.
//!
//! Everything is read off a single Pommaret basis of the (leading) monomial
//! ideal — no generic evaluations, no radical computations.
//! Run with `cargo run --example quotient_structure`.

use involutive::decomp::{
    cohen_macaulay, complementary_decomposition_janet, depth, krull_dimension,
    primary_decomposition, standard_pairs,
};
use involutive::{complete, CompletionLimits, CompletionOutcome, Division, Exponent, OrderKind, Poly};

fn main() {
    let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    // quasi-stable monomial ideal, x < y < z
    let gens: Vec<Exponent> = vec![
        Exponent(vec![0, 0, 3]),
        Exponent(vec![0, 1, 2]),
        Exponent(vec![0, 2, 0]),
    ];
    println!("ideal:");
    for g in &gens {
        println!("  {}", g.render(&vars));
    }

    let polys: Vec<Poly> = gens.iter().cloned().map(Poly::monomial).collect();
    let basis = match complete(&polys, Division::Pommaret, OrderKind::DegRevLex, 3, 1, CompletionLimits::none()) {
        CompletionOutcome::Basis(b) => b,
        _ => unreachable!("quasi-stable monomial ideals have finite Pommaret bases"),
    };
    println!("\nPommaret basis ({} elements):", basis.gens.len());
    for g in &basis.gens {
        println!("  {}", g.render(&vars, 1));
    }

    let (dim, indep) = krull_dimension(&basis);
    let (dep, seq) = depth(&basis);
    println!("\nKrull dimension of the quotient: {dim}");
    println!(
        "maximal independent variables:   {{{}}}",
        indep.iter().map(|&k| vars[k - 1].as_str()).collect::<Vec<_>>().join(", ")
    );
    println!("depth: {dep}, maximal regular sequence ({})", {
        seq.iter().map(|&k| vars[k - 1].as_str()).collect::<Vec<_>>().join(", ")
    });

    let cm = cohen_macaulay(&basis);
    println!("Cohen-Macaulay: {}", cm.is_cohen_macaulay);
    println!(
        "Noether normalization: k[{}], module generators {}",
        (1..=cm.noether.dimension).map(|k| vars[k - 1].as_str()).collect::<Vec<_>>().join(", "),
        cm.noether
            .module_generators
            .iter()
            .map(|e| e.render(&vars))
            .collect::<Vec<_>>()
            .join(", ")
    );

    // standard pairs and the irredundant irreducible decomposition
    let les = basis.les();
    let dec = complementary_decomposition_janet(&les, 3);
    let report = standard_pairs(&dec, &les);
    println!("\nstandard pairs ({} = arithmetic degree):", report.pairs.len());
    for p in &report.pairs {
        let mult: Vec<&str> = p.mult.iter().map(|&k| vars[k - 1].as_str()).collect();
        println!("  ({}, {{{}}})", p.vertex.render(&vars), mult.join(", "));
    }

    // primary decomposition via the sequential saturation chain
    let pd = primary_decomposition(&les, 3).expect("the ideal is quasi-stable");
    println!("\nprimary decomposition ({} components):", pd.components.len());
    for c in &pd.components {
        let prime: Vec<&str> = c.associated_prime.iter().map(|&k| vars[k - 1].as_str()).collect();
        println!(
            "  <{}>   primary to <{}>",
            c.generators.iter().map(|e| e.render(&vars)).collect::<Vec<_>>().join(", "),
            prime.join(", ")
        );
    }
}
