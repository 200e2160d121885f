// Driving the `nfvaaler` command line in-process.

use nfvaaler::cli::run;

pub fn run_example() {
    let config = concat!(env!("CARGO_MANIFEST_DIR"), "/configs/q.json");
    for args in [
        vec!["sieve", "--modulus-norm", "6", "--X", "10000"],
        vec!["overlap", "--m-norm", "2", "--n-norm", "3"],
        vec!["gfun", "divisor-sum", "--norm", "12", "--v", "1"],
    ] {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = ["nfvaaler", "--config", config].into_iter().chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        println!("$ nfvaaler {} (exit {code})", args.join(" "));
        print!("{}", String::from_utf8_lossy(&out));
        assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
    }
}

#[allow(dead_code)]
fn main() {
    run_example();
}
