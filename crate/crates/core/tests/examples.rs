macro_rules! example {
    ($module:ident, $file:literal, $test:ident) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $test() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(coefficients, "coefficients.rs", coefficients_example_runs);
example!(snapshots, "snapshots.rs", snapshots_example_runs);
example!(carpet, "carpet.rs", carpet_example_runs);
example!(autocorrelation, "autocorrelation.rs", autocorrelation_example_runs);
example!(fractional_revival, "fractional_revival.rs", fractional_revival_example_runs);
example!(expectation_x, "expectation_x.rs", expectation_x_example_runs);
example!(classical_trajectory, "classical_trajectory.rs", classical_trajectory_example_runs);
