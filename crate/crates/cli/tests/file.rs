use serde_json::json;
use toric_qh::file::{offset_pi, LoadError, PolytopeFile};
use toric_qh_core::linalg::Rat;
use toric_qh_core::polytope::{builtin, Convention, Polytope};

#[test]
fn builtin_blowup_is_verbatim() {
    let f = PolytopeFile::load("blowup_cp3").unwrap();
    let v = f.to_json();
    assert_eq!(v["convention"], "outward");
    assert_eq!(
        v["facets"].as_array().unwrap().iter().map(|f| f["normal"].clone()).collect::<Vec<_>>(),
        vec![json!([-1, 0, 0]), json!([0, -1, 0]), json!([0, 0, -1]), json!([0, 0, 1]), json!([1, 1, 1])]
    );
    assert_eq!(v["facets"][3]["offset"], json!([1, 2]));
    assert_eq!(PolytopeFile::load("cp1").unwrap().polytope.num_facets(), 2);
}

#[test]
fn round_trip_through_disk() {
    let dir = tempfile::tempdir().unwrap();
    for name in builtin::NAMES {
        let f = PolytopeFile::load(name).unwrap();
        let path = dir.path().join(format!("{name}.json"));
        std::fs::write(&path, serde_json::to_string_pretty(&f.to_json()).unwrap()).unwrap();
        let back = PolytopeFile::load(path.to_str().unwrap()).unwrap();
        assert_eq!(back, f);
        assert_eq!(back.to_json(), f.to_json());
    }
}

#[test]
fn parse_errors_carry_position() {
    match PolytopeFile::parse("{\n  \"dim\": 2,\n  \"facets\": [,]\n}", None) {
        Err(LoadError::Parse { line, column, .. }) => assert_eq!((line, column), (3, 14)),
        other => panic!("{other:?}"),
    }
}

fn schema_path(text: &str) -> String {
    match PolytopeFile::parse(text, None) {
        Err(LoadError::Schema { path, .. }) => path,
        other => panic!("{other:?}"),
    }
}

#[test]
fn schema_errors_carry_field_path() {
    assert_eq!(schema_path("[]"), "$");
    assert_eq!(schema_path(r#"{"dim": 1, "facets": []}"#), "$.convention");
    assert_eq!(schema_path(r#"{"dim": 0, "convention": "inward", "facets": []}"#), "$.dim");
    assert_eq!(
        schema_path(r#"{"dim": 1, "convention": "inward", "facets": [{"normal": [1], "offset": [0, 1]}, {"normal": [-1, 0], "offset": [1, 1]}]}"#),
        "$.facets[1].normal"
    );
    assert_eq!(
        schema_path(r#"{"dim": 1, "convention": "inward", "facets": [{"normal": [1], "offset": [2, 4]}]}"#),
        "$.facets[0].offset"
    );
    assert_eq!(
        schema_path(r#"{"dim": 1, "convention": "inward", "facets": [{"normal": ["x"], "offset": [0, 1]}]}"#),
        "$.facets[0].normal[0]"
    );
    assert_eq!(
        schema_path(r#"{"dim": 1, "convention": "sideways", "facets": []}"#),
        "$.convention"
    );
    assert_eq!(schema_path(r#"{"dim": 1, "colour": 3}"#), "$.colour");
}

#[test]
fn geometric_problems_are_not_schema_errors() {
    let text = r#"{"dim": 2, "convention": "inward", "facets": [{"normal": [2, 0], "offset": [0, 1]}, {"normal": [0, 1], "offset": [0, 1]}, {"normal": [-1, -1], "offset": [-1, 1]}]}"#;
    assert!(matches!(PolytopeFile::parse(text, None), Err(LoadError::Polytope(_))));
}

#[test]
fn missing_file() {
    assert!(matches!(PolytopeFile::load("/nonexistent/p.json"), Err(LoadError::Io { .. })));
}

#[test]
fn offsets_in_pi_units() {
    let r = |n: i64, d: i64| Rat::new(n.into(), d.into());
    assert_eq!(offset_pi(&r(1, 2)), "1/2·π");
    assert_eq!(offset_pi(&r(1, 1)), "π");
    assert_eq!(offset_pi(&r(-1, 1)), "-π");
    assert_eq!(offset_pi(&r(0, 1)), "0");
    assert_eq!(offset_pi(&r(-3, 1)), "-3·π");
}

#[test]
fn conventions_describe_the_same_polytope() {
    for name in builtin::NAMES {
        let p = builtin::by_name(name).unwrap();
        let other = match p.convention() {
            Convention::Inward => Convention::Outward,
            Convention::Outward => Convention::Inward,
        };
        let flipped: Vec<_> = p
            .facets()
            .iter()
            .map(|f| match other {
                Convention::Inward => f.clone(),
                Convention::Outward => toric_qh_core::polytope::Facet::new(
                    f.normal.iter().map(|x| -x),
                    -f.offset.clone(),
                ),
            })
            .collect();
        let q = Polytope::new(p.dim(), flipped, other).unwrap();
        assert_eq!(q.facets(), p.facets(), "{name}");
    }
}
