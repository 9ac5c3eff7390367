//! Keeps the recorded catalog table in `data/families.json` in sync with the
//! library's export. Run with `UPDATE_GOLDEN=1` to rewrite it.

use std::fs;
use std::path::Path;

use liefol::report::export_catalog;
use liefol::Catalog;

#[test]
fn recorded_catalog_table_is_current() {
    let export = {
        let mut text = serde_json::to_string_pretty(&export_catalog(&Catalog::standard()))
            .expect("catalog export serializes");
        text.push('\n');
        text
    };
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/families.json");
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        fs::write(&path, &export).expect("golden file is writable");
    }
    let recorded = fs::read_to_string(&path).expect("golden file exists");
    assert_eq!(
        recorded, export,
        "data/families.json is stale; rerun this test with UPDATE_GOLDEN=1"
    );
}
