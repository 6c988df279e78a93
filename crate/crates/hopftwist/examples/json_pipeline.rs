//! The JSON bundle pipeline: byte-stable serialization of Hopf algebras,
//! deformations and fingerprints (the same formats the CLI reads and
//! writes).
//!
//! Run with: cargo run --example json_pipeline

use hopftwist::catalog::{group_algebra, group_cocycle_deformation};
use hopftwist::cohomology::MuNCocycle;
use hopftwist::groups::FiniteGroup;
use hopftwist::invariants::fingerprint;
use hopftwist::io;

fn main() {
    let dir = std::env::temp_dir().join("hopftwist-json-example");
    std::fs::create_dir_all(&dir).unwrap();

    // A Hopf bundle round-trips byte-identically.
    let kg = group_algebra(&FiniteGroup::symmetric(3));
    let bundle = io::hopf_to_json(&kg);
    let text = io::to_canonical_string(&bundle).unwrap();
    let reparsed: io::HopfJson = serde_json::from_str(&text).unwrap();
    let again = io::to_canonical_string(&io::hopf_to_json(
        &io::hopf_from_json(&reparsed).unwrap(),
    ))
    .unwrap();
    println!("hopf bundle bytes stable: {}", text == again);
    println!("bundle head:\n{}", &text[..text.find("\"unit\"").unwrap()]);

    // Deformation bundles reference their parent by relative path.
    let alpha = MuNCocycle::v4_nondegenerate();
    let (parent, w) = group_cocycle_deformation(&alpha).unwrap();
    io::write_json(&dir.join("parent.json"), &io::hopf_to_json(&parent)).unwrap();
    io::write_json(
        &dir.join("w.json"),
        &io::deformation_to_json(&w, "parent.json"),
    )
    .unwrap();
    let loaded: io::DeformationJson = io::read_json(&dir.join("w.json")).unwrap();
    let w2 = io::deformation_from_json(&loaded, &dir).unwrap();
    println!(
        "deformation round-trip exact: {}",
        w2.mult() == w.mult() && w2.inverse_galois() == w.inverse_galois()
    );

    // Fingerprint bundles carry labels and canonical scalar text.
    let fp = fingerprint(&w, 1, None, None).unwrap();
    let fj = io::fingerprint_to_json(&fp, parent.labels());
    println!(
        "fingerprint: depth {}, {} entries; first entry: {}",
        fj.depth,
        fj.entries.len(),
        serde_json::to_string(&serde_json::json!({
            "l": fj.entries[0].l,
            "sigma": fj.entries[0].sigma,
            "f": fj.entries[0].f,
            "hs": fj.entries[0].hs,
            "value": fj.entries[0].value,
        }))
        .unwrap()
    );
    let _ = std::fs::remove_dir_all(&dir);
}
