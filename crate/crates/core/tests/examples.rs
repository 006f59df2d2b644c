macro_rules! example {
    ($module:ident, $file:literal) => {
        #[allow(dead_code)]
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $module() {
            $module::run_example().expect(concat!($file, " should run"));
        }
    };
}

example!(ground_sets, "ground_sets.rs");
example!(fan_certification, "fan_certification.rs");
example!(h_monomial_degrees, "h_monomial_degrees.rs");
example!(basis_conversion, "basis_conversion.rs");
example!(multimatroid_axioms, "multimatroid_axioms.rs");
example!(ipc_volume, "ipc_volume.rs");
example!(normal_complex, "normal_complex.rs");
example!(mixed_volumes, "mixed_volumes.rs");
example!(random_samplers, "random_samplers.rs");
example!(verification_suite, "verification_suite.rs");
