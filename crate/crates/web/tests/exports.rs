use graphreg_web::{analyze, enumerate, quadrangle};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).unwrap()
}

#[test]
fn analyze_catalog_and_graph6() {
    let r = parse(analyze("clebsch", 4));
    assert_eq!(r["srg"]["mu"], 2);
    assert_eq!(r["t_vertex"]["holds"], true);
    assert_eq!(r["isoregular3"], true);
    assert_eq!(r["partial_quadrangle"]["t"], 4);

    let r = parse(analyze(" Dhc ", 3));
    assert_eq!(r["order"], 5);
    assert_eq!(r["t_vertex"]["holds"], true);
}

#[test]
fn enumerate_small_orders() {
    let r = parse(enumerate(2, 4, false, true));
    assert_eq!(r["summary"]["count"], 2);
    let r = parse(enumerate(3, 6, true, true));
    assert_eq!(r["types"][0], "E~~w 3,4,5");
}

#[test]
fn quadrangle_q2() {
    let r = parse(quadrangle(2));
    assert_eq!((r["points"].as_u64(), r["lines"].as_u64()), (Some(27), Some(45)));
    assert_eq!(r["axioms"]["gq"], true);
    assert_eq!(r["triads"]["3"], 720);
    assert_eq!(r["cameron"]["c"], "3");
}

#[test]
fn errors_are_reported_in_band() {
    for s in [analyze("???", 3), analyze("petersen", 9), enumerate(2, 9, false, false), quadrangle(7)] {
        assert!(parse(s)["error"].is_string());
    }
}
