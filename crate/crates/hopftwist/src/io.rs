//! JSON bundles for Hopf algebras, deformations, cocycles, fingerprints
//! and presentations.
//!
//! Every bundle carries a `version` field. Scalars are rendered in the
//! text syntax (`3/2*z^2 - 1`) against the bundle's ambient cyclotomic
//! order `N`; sparse entries are sorted by multi-index, so serialization
//! is byte-stable across runs.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::deform::{Deformation, HopfTwoCocycle, Provenance};
use crate::hopf::HopfAlgebraData;
use crate::invariants::Fingerprint;
use crate::rewrite::{comb_from, FreeWord, LinComb, RewriteSystem};
use crate::scalar::{parse_scalar, CycloNum};
use crate::tensor::{SparseTensor, SparseVec};
use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

fn check_version(v: u32) -> Result<()> {
    if v != SCHEMA_VERSION {
        return Err(Error::SchemaVersion(v));
    }
    Ok(())
}

fn lcm_u32(a: u32, b: u32) -> u32 {
    use num_integer::Integer;
    ((a as u64).lcm(&(b as u64))) as u32
}

fn tensor_order(t: &SparseTensor, acc: &mut u32) {
    for (_, _, c) in t.entries() {
        *acc = lcm_u32(*acc, c.order());
    }
}

fn vec_order(v: &SparseVec, acc: &mut u32) {
    for (_, c) in v.entries() {
        *acc = lcm_u32(*acc, c.order());
    }
}

fn render(c: &CycloNum, n: u32) -> String {
    c.lift(n).to_string()
}

fn tensor_entries(t: &SparseTensor, n: u32) -> Vec<(Vec<usize>, String)> {
    let in_shape = t.in_shape().to_vec();
    let out_shape = t.out_shape().to_vec();
    t.entries()
        .map(|(ik, ok, c)| {
            let mut idx = crate::tensor::decode_index(&in_shape, ik);
            idx.extend(crate::tensor::decode_index(&out_shape, ok));
            (idx, render(c, n))
        })
        .collect()
}

fn tensor_from_entries(
    in_shape: Vec<usize>,
    out_shape: Vec<usize>,
    entries: &[(Vec<usize>, String)],
    n: u32,
) -> Result<SparseTensor> {
    let mut t = SparseTensor::new(in_shape.clone(), out_shape.clone());
    let legs = in_shape.len() + out_shape.len();
    for (idx, text) in entries {
        if idx.len() != legs {
            return Err(Error::InvalidInput(format!(
                "entry index {idx:?} has wrong arity (expected {legs})"
            )));
        }
        for (pos, (&i, &d)) in idx.iter().zip(in_shape.iter().chain(&out_shape)).enumerate() {
            if i >= d {
                return Err(Error::InvalidInput(format!(
                    "entry index {idx:?} out of range at leg {pos}"
                )));
            }
        }
        let ik = crate::tensor::encode_index(&in_shape, &idx[..in_shape.len()]);
        let ok = crate::tensor::encode_index(&out_shape, &idx[in_shape.len()..]);
        t.add_to(ik, ok, parse_scalar(text, n)?);
    }
    Ok(t)
}

fn dense_vec(v: &SparseVec, dim: usize, n: u32) -> Vec<String> {
    (0..dim as u64).map(|i| render(&v.get(i), n)).collect()
}

fn vec_from_dense(texts: &[String], n: u32) -> Result<SparseVec> {
    let mut v = SparseVec::zero(vec![texts.len()]);
    for (i, t) in texts.iter().enumerate() {
        v.add_to(i as u64, parse_scalar(t, n)?);
    }
    Ok(v)
}

// ---------------------------------------------------------------------------
// Hopf bundles
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct HopfJson {
    pub version: u32,
    pub kind: String,
    pub dim: usize,
    #[serde(rename = "N")]
    pub n: u32,
    pub labels: Vec<String>,
    pub unit: Vec<String>,
    pub counit: Vec<String>,
    pub mult: Vec<(Vec<usize>, String)>,
    pub comult: Vec<(Vec<usize>, String)>,
    pub antipode: Vec<(Vec<usize>, String)>,
}

pub fn hopf_to_json(h: &HopfAlgebraData) -> HopfJson {
    let mut n = h.field_order();
    tensor_order(h.mult(), &mut n);
    tensor_order(h.comult(), &mut n);
    tensor_order(h.antipode(), &mut n);
    vec_order(h.unit(), &mut n);
    for c in h.counit() {
        n = lcm_u32(n, c.order());
    }
    HopfJson {
        version: SCHEMA_VERSION,
        kind: "hopf".into(),
        dim: h.dim(),
        n,
        labels: h.labels().to_vec(),
        unit: dense_vec(h.unit(), h.dim(), n),
        counit: h.counit().iter().map(|c| render(c, n)).collect(),
        mult: tensor_entries(h.mult(), n),
        comult: tensor_entries(h.comult(), n),
        antipode: tensor_entries(h.antipode(), n),
    }
}

pub fn hopf_from_json(j: &HopfJson) -> Result<HopfAlgebraData> {
    check_version(j.version)?;
    if j.kind != "hopf" {
        return Err(Error::InvalidInput(format!("expected a hopf bundle, got '{}'", j.kind)));
    }
    let d = j.dim;
    if j.labels.len() != d || j.unit.len() != d || j.counit.len() != d {
        return Err(Error::InvalidInput("bundle arrays do not match dim".into()));
    }
    let counit = j
        .counit
        .iter()
        .map(|t| parse_scalar(t, j.n))
        .collect::<Result<Vec<_>>>()?;
    Ok(HopfAlgebraData::new_unchecked(
        d,
        j.n,
        j.labels.clone(),
        vec_from_dense(&j.unit, j.n)?,
        counit,
        tensor_from_entries(vec![d, d], vec![d], &j.mult, j.n)?,
        tensor_from_entries(vec![d], vec![d, d], &j.comult, j.n)?,
        tensor_from_entries(vec![d], vec![d], &j.antipode, j.n)?,
    ))
}

// ---------------------------------------------------------------------------
// Deformation bundles
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct DeformationJson {
    pub version: u32,
    pub kind: String,
    pub parent_hopf: String,
    pub dim: usize,
    #[serde(rename = "N")]
    pub n: u32,
    pub labels: Vec<String>,
    pub provenance: String,
    pub unit: Vec<String>,
    pub mult: Vec<(Vec<usize>, String)>,
    pub coaction: Vec<(Vec<usize>, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inverse_galois: Option<Vec<(Vec<usize>, String)>>,
}

pub fn deformation_to_json(w: &Deformation, parent_path: &str) -> DeformationJson {
    let mut n = w.parent().field_order();
    tensor_order(w.mult(), &mut n);
    tensor_order(w.coaction(), &mut n);
    vec_order(w.unit(), &mut n);
    if let Some(t) = w.inverse_galois() {
        tensor_order(t, &mut n);
    }
    DeformationJson {
        version: SCHEMA_VERSION,
        kind: "deformation".into(),
        parent_hopf: parent_path.to_string(),
        dim: w.dim(),
        n,
        labels: w.labels().to_vec(),
        provenance: w.provenance().as_str(),
        unit: dense_vec(w.unit(), w.dim(), n),
        mult: tensor_entries(w.mult(), n),
        coaction: tensor_entries(w.coaction(), n),
        inverse_galois: w.inverse_galois().map(|t| tensor_entries(t, n)),
    }
}

/// Load a deformation; the parent bundle is resolved relative to the
/// deformation file's directory.
pub fn deformation_from_json(j: &DeformationJson, base: &Path) -> Result<Deformation> {
    check_version(j.version)?;
    if j.kind != "deformation" {
        return Err(Error::InvalidInput(format!(
            "expected a deformation bundle, got '{}'",
            j.kind
        )));
    }
    let parent_path = resolve(base, &j.parent_hopf);
    let parent_json: HopfJson = read_json(&parent_path)?;
    let parent = Arc::new(hopf_from_json(&parent_json)?);
    if parent.dim() != j.dim {
        return Err(Error::InvalidInput(
            "deformation dimension does not match its parent".into(),
        ));
    }
    let d = j.dim;
    let t = match &j.inverse_galois {
        Some(entries) => Some(tensor_from_entries(vec![d, d], vec![d, d], entries, j.n)?),
        None => None,
    };
    Ok(Deformation::new(
        parent,
        j.labels.clone(),
        vec_from_dense(&j.unit, j.n)?,
        tensor_from_entries(vec![d, d], vec![d], &j.mult, j.n)?,
        tensor_from_entries(vec![d], vec![d, d], &j.coaction, j.n)?,
        t,
        Provenance::parse(&j.provenance),
    ))
}

// ---------------------------------------------------------------------------
// Cocycle bundles
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct CocycleJson {
    pub version: u32,
    pub kind: String,
    pub parent_hopf: String,
    #[serde(rename = "N")]
    pub n: u32,
    pub alpha: Vec<Vec<String>>,
}

pub fn cocycle_to_json(c: &HopfTwoCocycle, parent_path: &str) -> CocycleJson {
    let mut n = c.parent().field_order();
    for row in c.table() {
        for v in row {
            n = lcm_u32(n, v.order());
        }
    }
    CocycleJson {
        version: SCHEMA_VERSION,
        kind: "cocycle".into(),
        parent_hopf: parent_path.into(),
        n,
        alpha: c
            .table()
            .iter()
            .map(|row| row.iter().map(|v| render(v, n)).collect())
            .collect(),
    }
}

/// Load and validate a Hopf 2-cocycle bundle.
pub fn cocycle_from_json(j: &CocycleJson, base: &Path) -> Result<HopfTwoCocycle> {
    check_version(j.version)?;
    if j.kind != "cocycle" {
        return Err(Error::InvalidInput(format!(
            "expected a cocycle bundle, got '{}'",
            j.kind
        )));
    }
    let parent_json: HopfJson = read_json(&resolve(base, &j.parent_hopf))?;
    let parent = Arc::new(hopf_from_json(&parent_json)?);
    let table = j
        .alpha
        .iter()
        .map(|row| row.iter().map(|t| parse_scalar(t, j.n)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    HopfTwoCocycle::new(parent, table)
}

#[derive(Serialize, Deserialize)]
pub struct GroupCocycleJson {
    pub version: u32,
    pub kind: String,
    pub group: String,
    #[serde(rename = "N")]
    pub n: u32,
    pub exponents: Vec<Vec<u64>>,
}

pub fn group_cocycle_from_json(j: &GroupCocycleJson) -> Result<crate::cohomology::MuNCocycle> {
    check_version(j.version)?;
    if j.kind != "group-cocycle" {
        return Err(Error::InvalidInput(format!(
            "expected a group-cocycle bundle, got '{}'",
            j.kind
        )));
    }
    let g = crate::groups::parse_group_spec(&j.group)?;
    crate::cohomology::MuNCocycle::new(g, j.n, j.exponents.clone())
}

pub fn group_cocycle_to_json(c: &crate::cohomology::MuNCocycle, group_spec: &str) -> GroupCocycleJson {
    GroupCocycleJson {
        version: SCHEMA_VERSION,
        kind: "group-cocycle".into(),
        group: group_spec.into(),
        n: c.order(),
        exponents: c.exponents().to_vec(),
    }
}

// ---------------------------------------------------------------------------
// Fingerprint bundles (output)
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct FingerprintEntryJson {
    pub l: usize,
    pub sigma: Vec<usize>,
    pub f: String,
    pub hs: Vec<String>,
    pub value: String,
}

#[derive(Serialize, Deserialize)]
pub struct FingerprintJson {
    pub version: u32,
    pub kind: String,
    pub depth: usize,
    #[serde(rename = "N")]
    pub n: u32,
    pub entries: Vec<FingerprintEntryJson>,
}

pub fn fingerprint_to_json(fp: &Fingerprint, labels: &[String]) -> FingerprintJson {
    let mut n = 1u32;
    for v in fp.entries.values() {
        n = lcm_u32(n, v.order());
    }
    let entries = fp
        .entries
        .iter()
        .map(|((l, sigma, f, hs), v)| FingerprintEntryJson {
            l: *l,
            sigma: sigma.clone(),
            f: labels[*f].clone(),
            hs: hs.iter().map(|&h| labels[h].clone()).collect(),
            value: render(v, n),
        })
        .collect();
    FingerprintJson {
        version: SCHEMA_VERSION,
        kind: "fingerprint".into(),
        depth: fp.depth,
        n,
        entries,
    }
}

// ---------------------------------------------------------------------------
// Invariant-spec lists (input for curated dim-72 runs)
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct SpecListJson {
    pub version: u32,
    pub kind: String,
    pub specs: Vec<SpecJson>,
}

#[derive(Serialize, Deserialize)]
pub struct SpecJson {
    pub l: usize,
    pub sigma: Vec<usize>,
    pub f: serde_json::Value,
    pub hs: Vec<serde_json::Value>,
}

fn resolve_index(v: &serde_json::Value, labels: &[String]) -> Result<usize> {
    match v {
        serde_json::Value::Number(n) => n
            .as_u64()
            .map(|x| x as usize)
            .filter(|&x| x < labels.len())
            .ok_or_else(|| Error::InvalidInput(format!("index {n} out of range"))),
        serde_json::Value::String(s) => labels
            .iter()
            .position(|l| l == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown basis label '{s}'"))),
        other => Err(Error::InvalidInput(format!("bad index value {other}"))),
    }
}

pub fn specs_from_json(
    j: &SpecListJson,
    labels: &[String],
) -> Result<Vec<crate::invariants::InvariantSpec>> {
    check_version(j.version)?;
    j.specs
        .iter()
        .map(|s| {
            let sigma = crate::tensor::Permutation::from_one_line(&s.sigma)?;
            let f = resolve_index(&s.f, labels)?;
            let hs = s
                .hs
                .iter()
                .map(|h| resolve_index(h, labels))
                .collect::<Result<Vec<_>>>()?;
            crate::invariants::InvariantSpec::new(s.l, sigma, f, hs)
        })
        .collect()
}

// ---------------------------------------------------------------------------
// Presentation bundles
// ---------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
pub struct PresentationJson {
    pub version: u32,
    pub kind: String,
    #[serde(rename = "N")]
    pub n: u32,
    pub generators: Vec<String>,
    /// Each relation is a list of (word, coefficient) terms summing to zero;
    /// words are lists of generator indices.
    pub relations: Vec<Vec<(Vec<u8>, String)>>,
    pub basis: Vec<Vec<u8>>,
    #[serde(default)]
    pub unit: Option<Vec<(Vec<u8>, String)>>,
    pub degree_bound: usize,
}

pub fn presentation_from_json(j: &PresentationJson) -> Result<crate::rewrite::PresentedAlgebra> {
    check_version(j.version)?;
    if j.kind != "presentation" {
        return Err(Error::InvalidInput(format!(
            "expected a presentation bundle, got '{}'",
            j.kind
        )));
    }
    let to_comb = |terms: &[(Vec<u8>, String)]| -> Result<LinComb> {
        let mut parsed = Vec::new();
        for (w, c) in terms {
            parsed.push((FreeWord(w.clone()), parse_scalar(c, j.n)?));
        }
        Ok(comb_from(parsed))
    };
    let relations = j
        .relations
        .iter()
        .map(|r| to_comb(r))
        .collect::<Result<Vec<_>>>()?;
    let basis = j.basis.iter().map(|w| FreeWord(w.clone())).collect();
    let sys = RewriteSystem::new(j.generators.clone(), relations, basis)?
        .complete(j.degree_bound)?;
    let unit = match &j.unit {
        Some(terms) => to_comb(terms)?,
        None => comb_from(vec![(FreeWord::empty(), CycloNum::one())]),
    };
    crate::rewrite::structure_constants(sys, &unit)
}

// ---------------------------------------------------------------------------
// File plumbing
// ---------------------------------------------------------------------------

fn resolve(base: &Path, rel: &str) -> PathBuf {
    let p = Path::new(rel);
    if p.is_absolute() {
        p.to_path_buf()
    } else {
        base.join(p)
    }
}

pub fn read_json<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

/// Canonical serialization: pretty JSON plus a trailing newline, identical
/// across runs for identical inputs.
pub fn to_canonical_string<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    std::fs::write(path, to_canonical_string(value)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::groups::FiniteGroup;

    #[test]
    fn hopf_bundle_round_trip_is_byte_identical() {
        let h = catalog::group_algebra(&FiniteGroup::symmetric(3));
        let j = hopf_to_json(&h);
        let text = to_canonical_string(&j).unwrap();
        let parsed: HopfJson = serde_json::from_str(&text).unwrap();
        let h2 = hopf_from_json(&parsed).unwrap();
        assert_eq!(h2.mult(), h.mult());
        assert_eq!(h2.comult(), h.comult());
        let text2 = to_canonical_string(&hopf_to_json(&h2)).unwrap();
        assert_eq!(text, text2);
    }

    #[test]
    fn deformation_bundle_round_trip() {
        let dir = std::env::temp_dir().join("hopftwist-io-test");
        std::fs::create_dir_all(&dir).unwrap();
        let alpha = crate::cohomology::MuNCocycle::v4_nondegenerate();
        let (kg, w) = catalog::group_cocycle_deformation(&alpha).unwrap();
        write_json(&dir.join("parent.json"), &hopf_to_json(&kg)).unwrap();
        let dj = deformation_to_json(&w, "parent.json");
        write_json(&dir.join("w.json"), &dj).unwrap();
        let loaded: DeformationJson = read_json(&dir.join("w.json")).unwrap();
        let w2 = deformation_from_json(&loaded, &dir).unwrap();
        assert_eq!(w2.mult(), w.mult());
        assert_eq!(w2.coaction(), w.coaction());
        assert_eq!(w2.inverse_galois(), w.inverse_galois());
        // Missing parent reference fails.
        std::fs::remove_file(dir.join("parent.json")).unwrap();
        assert!(deformation_from_json(&loaded, &dir).is_err());
    }

    #[test]
    fn version_mismatch_is_rejected() {
        let h = catalog::group_algebra(&FiniteGroup::cyclic(2));
        let mut j = hopf_to_json(&h);
        j.version = 99;
        assert!(matches!(hopf_from_json(&j), Err(Error::SchemaVersion(99))));
    }

    #[test]
    fn presentation_bundle_builds_an_algebra() {
        let j = PresentationJson {
            version: SCHEMA_VERSION,
            kind: "presentation".into(),
            n: 1,
            generators: vec!["x".into(), "y".into()],
            relations: vec![
                vec![(vec![0, 0], "1".into())],
                vec![(vec![1, 1], "1".into())],
                vec![(vec![1, 0], "1".into()), (vec![0, 1], "-1".into())],
            ],
            basis: vec![vec![], vec![0], vec![1], vec![0, 1]],
            unit: None,
            degree_bound: 5,
        };
        let alg = presentation_from_json(&j).unwrap();
        assert_eq!(alg.dim(), 4);
    }
}
