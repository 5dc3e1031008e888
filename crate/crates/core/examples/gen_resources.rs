use std::io::Write;

fn main() {
    let audit = so3ni::so3::ni::audit();
    let mut doc = audit.to_markdown();
    doc.push_str(
        "\n## Torsion and connection-form formulas\n\n\
         On the nearly integrable subspace the printed torsion formula and the intrinsic\n\
         preservation solve differ only in the e^{134} coefficient, by -sqrt3 (b15 + b38):\n\
         the intrinsic coefficient is -(b8 + sqrt3 b38), which the printed sqrt3 b15 - b8\n\
         rewrites using the extra relation b38 = -b15 of the printed list. On the subspace\n\
         cut out by the printed relations (containing every classified family) the two\n\
         agree bit-exactly, as do the printed connection-form formulas.\n",
    );
    let mut f = std::fs::File::create("docs/ni-system-audit.md").unwrap();
    f.write_all(doc.as_bytes()).unwrap();

    let json = serde_json::to_string_pretty(&so3ni::catalog::catalog_json()).unwrap();
    let mut f = std::fs::File::create("crates/core/resources/catalog.json").unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f.write_all(b"\n").unwrap();
    println!("wrote docs/ni-system-audit.md and crates/core/resources/catalog.json");
}
