use proptest::prelude::*;

use superhopf::ffun::FHopf;
use superhopf::poly::Rational;
use superhopf::sample::{random_f_element, random_u_element, rng};
use superhopf_cli::format::{render_value, Format};
use superhopf_cli::parse::{parse, Value};

fn ratio() -> impl Strategy<Value = Rational> {
    (-7i64..=7, 1i64..=5).prop_map(|(p, q)| Rational::new(p.into(), q.into()))
}

/// Printing then parsing gives back the same element.
fn roundtrip(v: Value) -> Result<(), TestCaseError> {
    let text = render_value(&v, Format::Text);
    let back = parse(&text).map_err(|e| TestCaseError::fail(format!("{text}: {e}")))?;
    prop_assert_eq!(render_value(&back, Format::Text), text.clone());
    match v {
        Value::F(p) => prop_assert_eq!(back.into_f(), Some(p), "{}", text),
        Value::U(u) => prop_assert_eq!(back.into_u(), Some(u), "{}", text),
        Value::Tensor(t) => prop_assert_eq!(back, Value::Tensor(t), "{}", text),
        _ => {}
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn f_elements_roundtrip(seed in any::<u64>(), c in ratio()) {
        let x = random_f_element(&mut rng(seed), 5).scale(&c);
        roundtrip(Value::F(x))?;
    }

    #[test]
    fn u_elements_roundtrip(seed in any::<u64>(), c in ratio()) {
        let x = random_u_element(&mut rng(seed), 4).scale(&c);
        roundtrip(Value::U(x))?;
    }

    #[test]
    fn coproducts_roundtrip(seed in any::<u64>()) {
        let x = random_f_element(&mut rng(seed), 3);
        roundtrip(Value::Tensor(FHopf::new(5).coproduct(&x).unwrap()))?;
    }
}
