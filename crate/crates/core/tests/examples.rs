macro_rules! example {
    ($name:ident) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", stringify!($name), ".rs"));
        }

        #[test]
        fn $name() {
            $name::run_example();
        }
    };
}

example!(field_signature);
example!(ideal_arithmetic);
example!(mertens_sums);
example!(erdos_g);
example!(selberg_sieve);
example!(psi_model);
example!(approximation_measure);
example!(quasi_independence);
example!(factor_cache);
example!(command_line);
