use std::time::Instant;
use tridecomp::algebraic_decomp::{decompose_traced, DecompTrace};
use tridecomp::config::DecomposeConfig;
use tridecomp::poly_core::{parse_poly, VarOrder};

fn main() {
    let ord = VarOrder::algebraic(vec!["x", "y", "z"]);
    let h1 = parse_poly("-4*z^3 - 3*x*y*z - 3*x^2*y + x^2", &ord).unwrap();
    let h2 = parse_poly("-4*y*z^2", &ord).unwrap();
    let t = Instant::now();
    let mut trace = DecompTrace::default();
    let cfg = DecomposeConfig { max_branches: 3_000 };
    let r = decompose_traced(&[h1, h2], &ord, &cfg, &mut trace);
    println!("decompose: {:?} in {:?}; visits {} elims {}",
        r.as_ref().map(|c| c.len()).map_err(|e| format!("{:?}", e)),
        t.elapsed(), trace.visits.len(), trace.eliminations);
    for (i, v) in trace.visits.iter().enumerate().take(14) {
        println!("visit {}: found={:?} pending={:?} ineqs={:?}", i,
            v.found.iter().map(|p| p.to_string_with(&ord)).collect::<Vec<_>>(),
            v.pending.iter().map(|p| p.to_string_with(&ord)).collect::<Vec<_>>(),
            v.ineqs.iter().map(|p| p.to_string_with(&ord)).collect::<Vec<_>>());
    }
}
