mod oracle;

use argon_core::io::{parse, serialize, InputFormat};
use argon_core::random::numeric_names;
use argon_core::{fixtures, Framework};
use oracle::arb_framework;
use proptest::prelude::*;

fn renamed_numeric(af: &Framework) -> Framework {
    let attacks = af.attack_pairs().map(|(a, b)| (a.index(), b.index()));
    Framework::from_indices(numeric_names(af.len()), attacks).unwrap()
}

fn roundtrip(af: &Framework, format: InputFormat) -> Framework {
    parse(&serialize(af, format), format).unwrap()
}

#[test]
fn fixtures_roundtrip_in_every_format() {
    for af in fixtures::all() {
        assert_eq!(roundtrip(&af, InputFormat::Apx), af);
        assert_eq!(roundtrip(&af, InputFormat::Tgf), af);
        let numeric = renamed_numeric(&af);
        assert_eq!(roundtrip(&numeric, InputFormat::AfDimacs), numeric);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn random_frameworks_roundtrip(af in arb_framework(10)) {
        prop_assert_eq!(roundtrip(&af, InputFormat::Apx), af.clone());
        prop_assert_eq!(roundtrip(&af, InputFormat::Tgf), af.clone());
        let numeric = renamed_numeric(&af);
        prop_assert_eq!(roundtrip(&numeric, InputFormat::AfDimacs), numeric);
    }

    #[test]
    fn serialisation_is_stable(af in arb_framework(10)) {
        for format in InputFormat::ALL {
            let af = if format == InputFormat::AfDimacs { renamed_numeric(&af) } else { af.clone() };
            let text = serialize(&af, format);
            prop_assert_eq!(serialize(&parse(&text, format).unwrap(), format), text);
        }
    }
}
