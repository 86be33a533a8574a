use fuzzmorph_web::{analyze_json, compress_json, example_json, neighborhoods_json};
use serde_json::Value;

fn parse(text: &str) -> Value {
    serde_json::from_str(text).expect("bindings emit JSON")
}

fn example() -> (String, String) {
    let v = parse(&example_json());
    (
        v["relation"].as_str().unwrap().to_string(),
        v["mapping"].as_str().unwrap().to_string(),
    )
}

#[test]
fn analyze_the_starting_example() {
    let (relation, mapping) = example();
    let v = parse(&analyze_json(&relation, &mapping).unwrap());
    assert_eq!(v["pred"], true);
    assert_eq!(v["succ"], false);
    assert_eq!(v["blockwise"], false);
    assert_eq!(v["relation"]["labels"].as_array().unwrap().len(), 8);
    // x2 -> x4 is raised from 0.8 to 0.9 by the pull-back
    assert_eq!(v["changed"], serde_json::json!([["x2", "x4"]]));
    assert_eq!(v["reconstruction"]["cells"][1][3]["text"], "0.9");
    assert_eq!(v["image"]["cells"][1][3]["value"], 0.9);
}

#[test]
fn compress_each_mode() {
    let (relation, _) = example();
    let both = parse(&compress_json(&relation, "both").unwrap());
    assert_eq!(both["lossless"], true);
    assert_eq!(both["blocks"].as_array().unwrap().len(), 7);
    assert_eq!(
        both["blocks"][5]["members"],
        serde_json::json!(["x6", "x7"])
    );
    assert_eq!(both["blocks"][5]["label"], "c-x6");
    let pred = parse(&compress_json(&relation, "pred").unwrap());
    assert_eq!(pred["lossless"], false);
    assert_eq!(pred["quotient"]["labels"].as_array().unwrap().len(), 6);
}

#[test]
fn neighborhoods_of_one_element() {
    let (relation, _) = example();
    let v = parse(&neighborhoods_json(&relation, "x4").unwrap());
    assert_eq!(v["pred"], "0.8/x2 + 0.9/x3");
    assert_eq!(v["succ"], "0.7/x6 + 0.7/x7");
    assert_eq!(v["meet"], "∅");
}

#[test]
fn bad_input_comes_back_as_a_message() {
    let (relation, mapping) = example();
    assert_eq!(
        compress_json(&relation, "sideways").unwrap_err(),
        "invalid parameter: unknown mode `sideways` (expected pred, succ or both)"
    );
    assert!(neighborhoods_json(&relation, "x9")
        .unwrap_err()
        .contains("x9"));
    assert!(analyze_json("universe: a\nR = 1/(a,b)", &mapping)
        .unwrap_err()
        .starts_with("line 2"));
    assert!(analyze_json(&relation, "{\"domain\": [")
        .unwrap_err()
        .starts_with("line 1, column"));
}
