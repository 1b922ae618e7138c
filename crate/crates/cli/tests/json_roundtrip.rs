//! `parse(print(report)) = report` for pencil reports of random pencils.

use apolar_cli::paperbook::constructions::{random_scalar, rng};
use apolar_cli::report::PencilJson;
use apolar_core::apolar::ActionKind;
use apolar_core::forms::MonomialBasis;
use apolar_core::pencil::{sweep, SweepConfig};
use apolar_core::{Error, FieldSpec, Form, Scalar};
use proptest::prelude::*;

fn random_form(seed: u64, stream: u64, r: usize, j: u32, field: FieldSpec) -> Form {
    let mut rng = rng(seed, stream);
    let basis = MonomialBasis::new(r, j);
    let coords: Vec<Scalar> = (0..basis.len())
        .map(|_| random_scalar(&mut rng, field))
        .collect();
    Form::from_coordinates(&basis, field, &coords)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn json_round_trips(seed in any::<u64>(), r in 2usize..=3, j in 1u32..=4, rational in any::<bool>()) {
        let field = if rational { FieldSpec::Rationals } else { FieldSpec::Prime(31) };
        let f = random_form(seed, 1, r, j, field);
        let g = random_form(seed, 2, r, j, field);
        let config = SweepConfig { samples: 4, seed, exhaustive: false };
        let report = match sweep(&f, &g, &config, ActionKind::Differentiation) {
            Err(Error::DependentForms) | Err(Error::ZeroForm) => return Ok(()),
            other => other.unwrap(),
        };
        let view = PencilJson::from_report(&report, field, ActionKind::Differentiation);
        let text = view.to_json();
        let back: PencilJson = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &view);
        prop_assert_eq!(back.to_json(), text);
    }
}
