use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use std::time::Instant;
use tridecomp::algebraic_decomp::{chain_regularity_certificate, decompose};
use tridecomp::config::DecomposeConfig;
use tridecomp::poly_core::{Monomial, Poly, Var, VarOrder};
use tridecomp::verify::{check_decomposition, VerifyConfig};

fn random_poly(rng: &mut StdRng, n: usize) -> Poly {
    loop {
        let terms = rng.gen_range(1..=4);
        let mut p = Poly::zero();
        for _ in 0..terms {
            let mut budget = 3u32;
            let mut pairs = Vec::new();
            for v in 0..n {
                let e = rng.gen_range(0..=budget);
                if e > 0 {
                    pairs.push((Var::Base(v as u32), e));
                    budget -= e;
                }
            }
            let mut c = 0i64;
            while c == 0 {
                c = rng.gen_range(-5i64..=5);
            }
            p = p.add(&Poly::from_terms(vec![(
                Monomial::from_pairs(pairs),
                num_rational::BigRational::from_integer(c.into()),
            )]));
        }
        if !p.is_constant() {
            return p;
        }
    }
}

fn main() {
    let t0 = Instant::now();
    let mut rng = StdRng::seed_from_u64(42);
    let mut worst = std::time::Duration::ZERO;
    let mut failures = 0;
    for trial in 0..100 {
        let n = rng.gen_range(1..=3usize);
        let k = rng.gen_range(1..=3usize);
        let names: Vec<String> = ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect();
        let ord = VarOrder::algebraic(names);
        let sys: Vec<Poly> = (0..k).map(|_| random_poly(&mut rng, n)).collect();
        let t1 = Instant::now();
        let cfg = DecomposeConfig { max_branches: 10_000 };
        match decompose(&sys, &ord, &cfg) {
            Ok(chains) => {
                for c in &chains {
                    if !c.is_triangular() || !chain_regularity_certificate(c).pass {
                        println!("trial {}: certificate failure sys={:?}", trial,
                            sys.iter().map(|p| p.to_string_with(&ord)).collect::<Vec<_>>());
                        failures += 1;
                    }
                }
                let report = check_decomposition(&sys, &chains, &ord, &VerifyConfig::default());
                if report.forward != 1.0 || report.backward != 1.0 {
                    println!("trial {}: verify failure {:?} sys={:?} chains={}", trial, report,
                        sys.iter().map(|p| p.to_string_with(&ord)).collect::<Vec<_>>(), chains.len());
                    failures += 1;
                }
            }
            Err(e) => {
                println!("trial {}: {:?} sys={:?}", trial, e,
                    sys.iter().map(|p| p.to_string_with(&ord)).collect::<Vec<_>>());
                failures += 1;
            }
        }
        let dt = t1.elapsed();
        if dt > worst {
            worst = dt;
            println!("trial {} took {:?}", trial, dt);
        }
    }
    println!("TOTAL: {:?}, worst: {:?}, failures: {}", t0.elapsed(), worst, failures);
}
