//! Checked-in documents under `data/`. Set `TRISECT_BLESS=1` to rewrite them
//! from the library.

use std::fs;
use std::path::PathBuf;

use trisect::report::render_verdict;
use trisect::{
    bundled, distinguish, parse_diagram, serialize_diagram, standard_relative_diagram, Diagram,
    Outcome,
};

fn data(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(file)
}

fn golden(file: &str, actual: &str) {
    let path = data(file);
    if std::env::var_os("TRISECT_BLESS").is_some() {
        fs::create_dir_all(path.parent().unwrap()).unwrap();
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e} (rerun with TRISECT_BLESS=1)", path.display()));
    assert_eq!(actual, expected, "{} is stale", path.display());
}

#[test]
fn bundled_documents_match_data_files() {
    for (stem, doc) in bundled::corpus() {
        golden(&format!("{stem}.json"), &serialize_diagram(&doc));
    }
}

#[test]
fn data_files_parse_to_the_bundled_diagrams() {
    for (stem, doc) in bundled::corpus() {
        let text = fs::read_to_string(data(&format!("{stem}.json"))).unwrap();
        let parsed = parse_diagram(&text).unwrap();
        assert!(parsed.warnings.is_empty());
        assert_eq!(parsed.document, doc, "{stem}");
        assert_eq!(serialize_diagram(&parsed.document), text, "{stem}");
    }
}

#[test]
fn d1_data_file_is_a_relative_diagram() {
    let text = fs::read_to_string(data("D1.json")).unwrap();
    let Diagram::Relative(d) = parse_diagram(&text).unwrap().document.diagram else {
        panic!("D1.json is not relative");
    };
    assert_eq!(d, bundled::d1());
}

#[test]
fn standard_against_d1_verdict() {
    let standard = standard_relative_diagram(2, 1, 0, 2).unwrap();
    let verdict = distinguish(&standard, &bundled::d1()).unwrap();
    assert_eq!(verdict.outcome, Outcome::Distinguished);
    golden("standard_2_1_0_2_vs_D1.txt", &render_verdict(&verdict));
}
