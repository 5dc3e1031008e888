//! The committed resources are regenerated by `cargo run --example
//! gen_resources`; these tests keep them in sync with the code.

#[test]
fn audit_doc_matches_engine() {
    let audit = so3ni::so3::ni::audit();
    let doc = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../docs/ni-system-audit.md"
    ))
    .expect("docs/ni-system-audit.md");
    assert!(doc.starts_with(&audit.to_markdown()), "regenerate with the gen_resources example");
}

#[test]
fn catalog_resource_matches_registry() {
    let expected = serde_json::to_string_pretty(&so3ni::catalog::catalog_json()).unwrap() + "\n";
    assert_eq!(so3ni::catalog::embedded_catalog_json(), expected);
}
