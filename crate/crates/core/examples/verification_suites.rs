//! Run verification suites by id or number, e.g.
//! `cargo run --release --example verification_suites -- negBLM 12`.

use qschur::suites;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let keys = if args.is_empty() { vec!["q-identities".to_string(), "calibration".to_string()] } else { args };
    for k in keys {
        match suites::find(&k) {
            Some(s) => {
                let r = s.run();
                println!("{}", r.line());
                for d in r.details() {
                    println!("    {d}");
                }
            }
            None => eprintln!("unknown suite {k:?}"),
        }
    }
}
