//! JSON file formats.

use std::collections::BTreeMap;
use std::io::Read;
use std::path::Path;

use num_bigint::BigUint;
use posettop_core::cm::{CmFailure, CmReport};
use posettop_core::homology::HomologySummary;
use posettop_core::poset::PosetError;
use posettop_core::semigroup::{HomogeneousSemigroup, KoszulReport, SemigroupError};
use posettop_core::simplicial::ComplexError;
use posettop_core::{Poset, SimplicialComplex};
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    Read { path: String, source: std::io::Error },
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unrecognised document: expected keys {0}")]
    Schema(&'static str),
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error("unknown vertex {0}")]
    UnknownVertex(String),
}

/// Reads a file, or standard input for `-`.
pub fn read_source(path: &Path) -> Result<String, IoError> {
    let mut s = String::new();
    let err = |source| IoError::Read { path: path.display().to_string(), source };
    if path.as_os_str() == "-" {
        std::io::stdin().read_to_string(&mut s).map_err(err)?;
    } else {
        s = std::fs::read_to_string(path).map_err(err)?;
    }
    Ok(s)
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub covers: Vec<[String; 2]>,
}

impl PosetFile {
    pub fn from_poset(p: &Poset) -> Self {
        let covers = p.cover_pairs().into_iter().map(|(a, b)| [p.label(a).to_owned(), p.label(b).to_owned()]).collect();
        PosetFile { elements: p.labels().to_vec(), covers }
    }

    pub fn to_poset(&self) -> Result<Poset, PosetError> {
        let pairs: Vec<(&str, &str)> = self.covers.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        Poset::from_label_pairs(self.elements.clone(), &pairs)
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
#[serde(untagged)]
pub enum VertexRef {
    Index(usize),
    Label(String),
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct ComplexFile {
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<VertexRef>>,
}

impl ComplexFile {
    pub fn from_complex(c: &SimplicialComplex) -> Self {
        let facets = c
            .facets()
            .iter()
            .map(|f| f.iter().map(|&v| VertexRef::Label(c.vertices()[v as usize].clone())).collect())
            .collect();
        ComplexFile { vertices: c.vertices().to_vec(), facets }
    }

    pub fn to_complex(&self) -> Result<SimplicialComplex, IoError> {
        let index: BTreeMap<&str, usize> = self.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let mut facets = Vec::with_capacity(self.facets.len());
        for f in &self.facets {
            let mut out = Vec::with_capacity(f.len());
            for v in f {
                out.push(match v {
                    VertexRef::Index(i) => *i,
                    VertexRef::Label(l) => *index.get(l.as_str()).ok_or_else(|| IoError::UnknownVertex(l.clone()))?,
                });
            }
            facets.push(out);
        }
        if facets.is_empty() && self.vertices.is_empty() {
            return Ok(SimplicialComplex::empty());
        }
        Ok(SimplicialComplex::from_facets(self.vertices.clone(), &facets)?)
    }
}

#[derive(Serialize, Deserialize, Debug, PartialEq, Eq)]
pub struct SemigroupFile {
    pub dim: usize,
    pub generators: Vec<Vec<u64>>,
    pub weight: Vec<u64>,
    pub scale: u64,
}

impl SemigroupFile {
    pub fn from_semigroup(s: &HomogeneousSemigroup) -> Self {
        SemigroupFile { dim: s.dim(), generators: s.generators().to_vec(), weight: s.weight().to_vec(), scale: s.scale() }
    }

    pub fn to_semigroup(&self) -> Result<HomogeneousSemigroup, IoError> {
        if self.weight.len() != self.dim {
            return Err(SemigroupError::DimMismatch { expected: self.dim, got: self.weight.len() }.into());
        }
        Ok(HomogeneousSemigroup::new(self.generators.clone(), self.weight.clone(), self.scale)?)
    }
}

/// A parsed input document.
#[derive(Debug)]
pub enum Document {
    Poset(Poset),
    Complex(SimplicialComplex),
    Semigroup(HomogeneousSemigroup),
}

pub fn parse_document(text: &str) -> Result<Document, IoError> {
    let v: Value = serde_json::from_str(text)?;
    let has = |k: &str| v.get(k).is_some();
    if has("elements") {
        Ok(Document::Poset(serde_json::from_value::<PosetFile>(v)?.to_poset()?))
    } else if has("vertices") {
        Ok(Document::Complex(serde_json::from_value::<ComplexFile>(v)?.to_complex()?))
    } else if has("generators") {
        Ok(Document::Semigroup(serde_json::from_value::<SemigroupFile>(v)?.to_semigroup()?))
    } else {
        Err(IoError::Schema("elements/covers, vertices/facets or generators/weight/scale"))
    }
}

pub fn parse_poset(text: &str) -> Result<Poset, IoError> {
    Ok(serde_json::from_str::<PosetFile>(text)?.to_poset()?)
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, IoError> {
    serde_json::from_str::<ComplexFile>(text)?.to_complex()
}

pub fn parse_semigroup(text: &str) -> Result<HomogeneousSemigroup, IoError> {
    serde_json::from_str::<SemigroupFile>(text)?.to_semigroup()
}

fn pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serialisable");
    s.push('\n');
    s
}

pub fn poset_json(p: &Poset) -> String {
    pretty(&PosetFile::from_poset(p))
}

pub fn complex_json(c: &SimplicialComplex) -> String {
    pretty(&ComplexFile::from_complex(c))
}

pub fn semigroup_json(s: &HomogeneousSemigroup) -> String {
    pretty(&SemigroupFile::from_semigroup(s))
}

fn integer_value(n: &BigUint) -> Value {
    match u64::try_from(n) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(n.to_string()),
    }
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct DimFile {
    pub betti: usize,
    pub torsion: Vec<Value>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct HomologyFile {
    pub coefficients: String,
    pub empty_complex: bool,
    pub dims: BTreeMap<usize, DimFile>,
}

impl HomologyFile {
    pub fn from_summary(h: &HomologySummary) -> Self {
        let dims = h
            .dims
            .iter()
            .enumerate()
            .map(|(d, x)| (d, DimFile { betti: x.betti, torsion: x.torsion.iter().map(integer_value).collect() }))
            .collect();
        HomologyFile { coefficients: h.coefficients.to_string(), empty_complex: h.empty_complex, dims }
    }
}

pub fn homology_json(h: &HomologySummary) -> String {
    pretty(&HomologyFile::from_summary(h))
}

/// `Z^2 + Z/2 in dim 1`, one line per nonzero dimension; `0` if acyclic.
pub fn homology_text(h: &HomologySummary) -> String {
    let mut lines = Vec::new();
    if h.empty_complex {
        lines.push(format!("H~_-1 = {}", ring_name(h)));
    }
    for (d, x) in h.dims.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        lines.push(format!("H~_{d} = {}", group_text(h, x.betti, &x.torsion)));
    }
    if lines.is_empty() {
        lines.push(String::from("0"));
    }
    lines.join("\n") + "\n"
}

fn ring_name(h: &HomologySummary) -> String {
    h.coefficients.to_string()
}

pub fn group_text(h: &HomologySummary, betti: usize, torsion: &[BigUint]) -> String {
    let mut parts = Vec::new();
    match betti {
        0 => {}
        1 => parts.push(ring_name(h)),
        b => parts.push(format!("{}^{b}", ring_name(h))),
    }
    for t in torsion {
        parts.push(format!("Z/{t}"));
    }
    parts.join(" + ")
}

#[derive(Serialize, Debug)]
struct FailureFile {
    lower: String,
    upper: String,
    expected_dimension: isize,
    dimension: isize,
    homology: HomologyFile,
}

#[derive(Serialize, Debug)]
struct WitnessFile<'a> {
    short_chain: &'a [String],
    long_chain: &'a [String],
}

#[derive(Serialize, Debug)]
struct CmFile<'a> {
    verdict: bool,
    coefficients: String,
    pure: bool,
    purity_witness: Option<WitnessFile<'a>>,
    intervals_checked: usize,
    distinct_intervals: usize,
    failures: Vec<FailureFile>,
}

fn failure_file(f: &CmFailure) -> FailureFile {
    FailureFile {
        lower: f.lower.clone(),
        upper: f.upper.clone(),
        expected_dimension: f.expected_dimension,
        dimension: f.dimension,
        homology: HomologyFile::from_summary(&f.homology),
    }
}

pub fn cm_json(r: &CmReport) -> String {
    pretty(&CmFile {
        verdict: r.verdict,
        coefficients: r.coefficients.to_string(),
        pure: r.purity_witness.is_none(),
        purity_witness: r.purity_witness.as_ref().map(|w| WitnessFile { short_chain: &w.short_chain, long_chain: &w.long_chain }),
        intervals_checked: r.intervals_checked,
        distinct_intervals: r.distinct_intervals,
        failures: r.failures.iter().map(failure_file).collect(),
    })
}

pub fn cm_text(r: &CmReport) -> String {
    let mut out = String::new();
    let verdict = if r.verdict { "CM" } else { "not CM" };
    out.push_str(&format!("verdict: {verdict} over {}\n", r.coefficients));
    if let Some(w) = &r.purity_witness {
        out.push_str(&format!("not pure: {} vs {}\n", w.short_chain.join(" < "), w.long_chain.join(" < ")));
        return out;
    }
    out.push_str(&format!("intervals: {} ({} up to isomorphism)\n", r.intervals_checked, r.distinct_intervals));
    if !r.failures.is_empty() {
        let width = r.failures.iter().map(|f| f.lower.len() + f.upper.len() + 6).max().unwrap_or(0).max(8);
        out.push_str(&format!("{:<width$}  {:>8}  {:>5}  homology\n", "interval", "expected", "found"));
        for f in &r.failures {
            let iv = format!("({}, {})", f.lower, f.upper);
            let h = homology_text(&f.homology).trim_end().replace('\n', "; ");
            out.push_str(&format!("{iv:<width$}  {:>8}  {:>5}  {h}\n", f.expected_dimension, f.dimension));
        }
    }
    out
}

#[derive(Serialize, Debug)]
struct KoszulFile {
    passed: bool,
    max_rank: usize,
    coefficients: String,
    elements_checked: usize,
    distinct_intervals: usize,
    witness: Option<KoszulWitnessFile>,
}

#[derive(Serialize, Debug)]
struct KoszulWitnessFile {
    lambda: Vec<u64>,
    degree: usize,
    dimension: isize,
    homology: HomologyFile,
}

pub fn koszul_json(r: &KoszulReport) -> String {
    pretty(&KoszulFile {
        passed: r.passed(),
        max_rank: r.max_rank,
        coefficients: r.coefficients.to_string(),
        elements_checked: r.elements_checked,
        distinct_intervals: r.distinct_intervals,
        witness: r.witness.as_ref().map(|w| KoszulWitnessFile {
            lambda: w.lambda.clone(),
            degree: w.degree,
            dimension: w.dimension,
            homology: HomologyFile::from_summary(&w.homology),
        }),
    })
}

pub fn koszul_text(r: &KoszulReport) -> String {
    let mut out = format!(
        "{} elements of degree 2..={} checked over {} ({} distinct intervals)\n",
        r.elements_checked, r.max_rank, r.coefficients, r.distinct_intervals
    );
    match &r.witness {
        None => out.push_str(&format!("consistent with Koszul up to rank {}\n", r.max_rank)),
        Some(w) => out.push_str(&format!(
            "not Koszul: (0, {}) has homology in dimension {} (expected {}):\n{}",
            posettop_core::semigroup::vector_label(&w.lambda),
            w.dimension,
            w.degree as isize - 2,
            homology_text(&w.homology)
        )),
    }
    out
}
