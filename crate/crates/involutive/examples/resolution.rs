//! Syzygies and free resolutions from a single Pommaret basis.
//!
//! Each non-multiplicative prolongation of a basis element produces one
//! syzygy, and the syzygies again form a Pommaret basis of the syzygy module
//! under an induced order — so one completion yields a whole free resolution,
//! with ranks predictable in advance from the classes of the leading terms.
//! Run with `cargo run --example resolution`.

use involutive::{
    complete, free_resolution, minimize, CompletionLimits, CompletionOutcome, Division, Exponent,
    OrderKind, Poly, Term, Q,
};

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
    // the ideal of a fat point: x², xy, xz − y, y², yz − y, z² − z + x
    let gens = vec![
        poly(&[(&[2, 0, 0], 1)]),
        poly(&[(&[1, 1, 0], 1)]),
        poly(&[(&[1, 0, 1], 1), (&[0, 1, 0], -1)]),
        poly(&[(&[0, 2, 0], 1)]),
        poly(&[(&[0, 1, 1], 1), (&[0, 1, 0], -1)]),
        poly(&[(&[0, 0, 2], 1), (&[0, 0, 1], -1), (&[1, 0, 0], 1)]),
    ];
    let basis = match complete(&gens, Division::Pommaret, OrderKind::DegRevLex, 3, 1, CompletionLimits::none()) {
        CompletionOutcome::Basis(b) => b,
        _ => unreachable!("this generating set is already involutively head-autoreduced"),
    };
    println!("Pommaret basis ({} elements):", basis.gens.len());
    for g in &basis.gens {
        println!("  {}", g.render(&vars, 1));
    }

    let res = free_resolution(&basis);
    println!("\nfree resolution ranks: {:?}", res.ranks());

    // the first syzygies, one per non-multiplicative variable of a generator
    println!("\nfirst syzygies (lt = the prolongation variable times a basis vector):");
    let rank1 = res.basis.gens.len();
    for (s, &(g, k)) in res.levels[0].gens.iter().zip(&res.levels[0].labels) {
        println!("  from h_{} * {}:  {}", g + 1, vars[k - 1], s.render(&vars, rank1));
    }

    // minimization strips the constant entries and reveals the Betti table
    let min = minimize(&res);
    println!("\nminimal resolution ranks: {:?}", min.degrees.iter().map(|d| d.len()).collect::<Vec<_>>());
    println!("graded Betti numbers:");
    for (&(i, j), &v) in &min.betti {
        println!("  beta_{{{i},{j}}} = {v}");
    }
    println!("projective dimension: {}", min.projective_dimension);
}
