//! The text problem format and the structured JSON reports — the same
//! pipeline the `involutive` binary drives from the command line.
//! Run with `cargo run --example problem_files`.

use involutive::{emit, parse_problem, run, Division, RunOptions};

fn main() {
    // variables listed first are smallest: x < y < z
    let text = "\
ring: x, y, z
order: degrevlex
ideal:
  z^2 - y^2 - 2*x^2
  x*z + x*y
  y*z + y^2 + x^2
";
    let spec = parse_problem(text).expect("well-formed problem");
    println!("parsed {} generators over Q[{}]", spec.gens.len(), spec.vars.join(", "));

    // Pommaret completion diverges here: exit code 2 plus a witness
    let pommaret = run("complete", &spec, &RunOptions::default());
    println!("\npommaret completion -> exit {}", pommaret.exit_code);
    println!("witness: {}", pommaret.json["result"]["witness"]);

    // the Janet completion terminates with 4 elements
    let mut opts = RunOptions::default();
    opts.division = Division::Janet;
    let janet = run("complete", &spec, &opts);
    println!("\njanet completion -> exit {}", janet.exit_code);
    print!("{}", emit(&janet, "text"));

    // modules use tuple generators; reports are schema-versioned JSON
    let module = parse_problem("ring: x,y\nmodule rank 2:\n (y^2, 0)\n (x*y, 1)\n (0, x)\n").unwrap();
    let report = run("complete", &module, &RunOptions::default());
    println!("\nmodule completion as JSON:");
    print!("{}", emit(&report, "json"));
}
