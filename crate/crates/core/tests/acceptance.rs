//! Acceptance suite: one PASS/FAIL line per criterion, then the same three
//! seeded criteria under a second seed.

use std::process::ExitCode;

use qnbc_core::theorems::{self, VerifyConfig};

fn main() -> ExitCode {
    let report = theorems::verify(&VerifyConfig::default());
    print!("{}", report.render());
    let mut ok = report.passed() && report.criteria.len() == 12;

    let other = VerifyConfig {
        seed: 12345,
        ..Default::default()
    };
    println!("reseeded with {}:", other.seed);
    for f in [
        theorems::product_lifts,
        theorems::heredity_embedding,
        theorems::gadget_round_trip,
    ] {
        let rep = f(&other);
        println!("{}", rep.line());
        ok &= rep.passed;
    }

    if ok {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: FAILED");
        ExitCode::FAILURE
    }
}
