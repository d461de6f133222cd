//! Simplicial complexes, order complexes, face posets, type selection and
//! the Segre product of colored complexes.
//!
//! Faces are sorted vertex-index sets. The full face family is computed once
//! at construction and stored per face size in flat sorted arrays, which is
//! what the homology code walks over.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::constructions::pair_label;
use crate::poset::Poset;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComplexError {
    #[error("vertex index {0} is out of range")]
    VertexOutOfRange(usize),
    #[error("facet repeats vertex {0}")]
    RepeatedVertex(usize),
    #[error("duplicate vertex label `{0}`")]
    DuplicateLabel(String),
    #[error("operation undefined on the void complex")]
    Void,
    #[error("coloring has {got} entries for {expected} vertices")]
    ColoringLength { expected: usize, got: usize },
    #[error("first coloring is not a bijection onto 1..={d} on facet {facet:?}")]
    NotBijectiveOnFacet { facet: Vec<usize>, d: usize },
    #[error("second coloring is not injective on facet {0:?}")]
    NotInjectiveOnFacet(Vec<usize>),
    #[error("dimension {second} of the second complex exceeds dimension {first} of the first")]
    Dimension { first: isize, second: isize },
}

/// All faces of one size, as a flat sorted array.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
struct FaceLevel {
    size: usize,
    count: usize,
    data: Vec<u32>,
}

impl FaceLevel {
    fn from_faces(size: usize, mut faces: Vec<Vec<u32>>) -> Self {
        faces.sort_unstable();
        faces.dedup();
        let count = faces.len();
        let data = faces.into_iter().flatten().collect();
        FaceLevel { size, count, data }
    }

    fn get(&self, i: usize) -> &[u32] {
        &self.data[i * self.size..(i + 1) * self.size]
    }

    fn iter(&self) -> impl Iterator<Item = &[u32]> {
        (0..self.count).map(move |i| self.get(i))
    }

    fn position(&self, face: &[u32]) -> Option<usize> {
        let (mut lo, mut hi) = (0, self.count);
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.get(mid).cmp(face) {
                core::cmp::Ordering::Less => lo = mid + 1,
                core::cmp::Ordering::Greater => hi = mid,
                core::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }
}

/// A finite abstract simplicial complex.
///
/// The *empty complex* has the empty face only; the *void complex* has no
/// faces at all. Every listed vertex is a face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    vertices: Vec<String>,
    facets: Vec<Vec<u32>>,
    /// `levels[k]` holds the faces with `k` vertices; empty for the void
    /// complex.
    levels: Vec<FaceLevel>,
}

impl SimplicialComplex {
    /// Builds a complex from facets given as vertex indices. Non-maximal
    /// faces in the list are allowed and dropped; vertices not covered by
    /// any listed face become isolated vertices.
    pub fn from_facets(vertices: Vec<String>, facets: &[Vec<usize>]) -> Result<Self, ComplexError> {
        let n = vertices.len();
        {
            let mut seen = BTreeMap::new();
            for l in &vertices {
                if seen.insert(l.as_str(), ()).is_some() {
                    return Err(ComplexError::DuplicateLabel(l.clone()));
                }
            }
        }
        let mut covered = vec![false; n];
        let mut faces: Vec<Vec<u32>> = Vec::with_capacity(facets.len() + n);
        for f in facets {
            let mut face: Vec<u32> = Vec::with_capacity(f.len());
            for &v in f {
                if v >= n {
                    return Err(ComplexError::VertexOutOfRange(v));
                }
                covered[v] = true;
                face.push(v as u32);
            }
            face.sort_unstable();
            if let Some(w) = face.windows(2).find(|w| w[0] == w[1]) {
                return Err(ComplexError::RepeatedVertex(w[0] as usize));
            }
            faces.push(face);
        }
        for (v, c) in covered.iter().enumerate() {
            if !c {
                faces.push(vec![v as u32]);
            }
        }
        if faces.is_empty() {
            return Ok(Self::void(vertices));
        }
        Ok(Self::from_generating_faces(vertices, faces))
    }

    /// The complex whose only face is the empty face.
    pub fn empty() -> Self {
        Self::from_generating_faces(Vec::new(), vec![Vec::new()])
    }

    /// The complex with no faces at all.
    pub fn void(vertices: Vec<String>) -> Self {
        assert!(vertices.is_empty(), "the void complex has no vertices");
        SimplicialComplex { vertices, facets: Vec::new(), levels: Vec::new() }
    }

    /// Full simplex on `n` vertices labelled `1..=n`.
    pub fn simplex(n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("{i}")).collect();
        Self::from_facets(labels, &[(0..n).collect()]).expect("valid simplex")
    }

    /// Boundary of the simplex on `n` vertices.
    pub fn simplex_boundary(n: usize) -> Self {
        let labels = (1..=n).map(|i| format!("{i}")).collect();
        let facets: Vec<Vec<usize>> = (0..n).map(|skip| (0..n).filter(|&v| v != skip).collect()).collect();
        Self::from_facets(labels, &facets).expect("valid boundary")
    }

    fn from_generating_faces(vertices: Vec<String>, faces: Vec<Vec<u32>>) -> Self {
        let top = faces.iter().map(Vec::len).max().unwrap_or(0);
        let mut by_size: Vec<Vec<Vec<u32>>> = vec![Vec::new(); top + 1];
        for f in faces {
            by_size[f.len()].push(f);
        }
        let mut levels: Vec<FaceLevel> = vec![FaceLevel::default(); top + 1];
        for k in (0..=top).rev() {
            let mut level = core::mem::take(&mut by_size[k]);
            if k < top {
                for face in levels[k + 1].iter() {
                    for skip in 0..face.len() {
                        let mut sub = Vec::with_capacity(k);
                        sub.extend_from_slice(&face[..skip]);
                        sub.extend_from_slice(&face[skip + 1..]);
                        level.push(sub);
                    }
                }
            }
            levels[k] = FaceLevel::from_faces(k, level);
        }
        Self::from_levels(vertices, levels)
    }

    fn from_levels(vertices: Vec<String>, levels: Vec<FaceLevel>) -> Self {
        let mut facets = Vec::new();
        for k in 0..levels.len() {
            let mut has_coface = vec![false; levels[k].count];
            if k + 1 < levels.len() {
                for face in levels[k + 1].iter() {
                    for skip in 0..face.len() {
                        let mut sub = Vec::with_capacity(k);
                        sub.extend_from_slice(&face[..skip]);
                        sub.extend_from_slice(&face[skip + 1..]);
                        let i = levels[k].position(&sub).expect("face family is closed under subsets");
                        has_coface[i] = true;
                    }
                }
            }
            for (i, covered) in has_coface.into_iter().enumerate() {
                if !covered {
                    facets.push(levels[k].get(i).to_vec());
                }
            }
        }
        facets.sort_unstable();
        SimplicialComplex { vertices, facets, levels }
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    /// Facets in canonical order (each sorted, list sorted).
    pub fn facets(&self) -> &[Vec<u32>] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.levels.is_empty()
    }

    /// `true` for the complex `{∅}`.
    pub fn is_empty_complex(&self) -> bool {
        self.levels.len() == 1
    }

    /// Dimension; `-1` for `{∅}`, `None` for the void complex.
    pub fn dim(&self) -> Option<isize> {
        if self.is_void() {
            None
        } else {
            Some(self.levels.len() as isize - 2)
        }
    }

    /// Number of faces of dimension `d` (`d >= -1`).
    pub fn face_count(&self, d: isize) -> usize {
        let k = d + 1;
        if k < 0 || k as usize >= self.levels.len() {
            0
        } else {
            self.levels[k as usize].count
        }
    }

    /// Faces of dimension `d` in sorted order.
    pub fn faces(&self, d: isize) -> impl Iterator<Item = &[u32]> {
        let k = (d + 1).max(0) as usize;
        let level = if d >= -1 { self.levels.get(k) } else { None };
        level.into_iter().flat_map(|l| l.iter())
    }

    /// Index of a sorted face within its dimension.
    pub fn face_index(&self, face: &[u32]) -> Option<usize> {
        self.levels.get(face.len())?.position(face)
    }

    pub fn total_faces(&self) -> usize {
        self.levels.iter().map(|l| l.count).sum()
    }

    /// `f_vector()[k]` is `f_{k-1}`, the number of faces of dimension
    /// `k - 1`; the first entry is `f_{-1} = 1` unless the complex is void.
    pub fn f_vector(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.count).collect()
    }

    /// `χ̃ = Σ_{i >= -1} (-1)^i f_i`.
    pub fn reduced_euler(&self) -> Result<i64, ComplexError> {
        if self.is_void() {
            return Err(ComplexError::Void);
        }
        Ok(self
            .levels
            .iter()
            .enumerate()
            .map(|(k, l)| if k % 2 == 1 { l.count as i64 } else { -(l.count as i64) })
            .sum())
    }

    fn face_label(&self, face: &[u32]) -> String {
        let names: Vec<&str> = face.iter().map(|&v| self.vertices[v as usize].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Compares face families through vertex labels.
    pub fn same_faces_by_label(&self, other: &SimplicialComplex) -> bool {
        if self.f_vector() != other.f_vector() {
            return false;
        }
        fn relabel(c: &SimplicialComplex) -> Vec<Vec<&str>> {
            let mut out: Vec<Vec<&str>> = c
                .facets
                .iter()
                .map(|f| {
                    let mut v: Vec<&str> = f.iter().map(|&x| c.vertices[x as usize].as_str()).collect();
                    v.sort_unstable();
                    v
                })
                .collect();
            out.sort_unstable();
            out
        }
        relabel(self) == relabel(other)
    }
}

/// Order complex `Δ(P)`: vertices are the elements, faces the chains.
pub fn order_complex(p: &Poset) -> SimplicialComplex {
    let n = p.len();
    let vertices: Vec<String> = p.labels().to_vec();
    let mut by_size: Vec<Vec<u32>> = vec![Vec::new()];
    let mut counts: Vec<usize> = vec![1];
    // Depth-first extension of chains upward through the strict up-sets.
    let mut stack: Vec<u32> = Vec::new();
    fn extend(p: &Poset, stack: &mut Vec<u32>, by_size: &mut Vec<Vec<u32>>, counts: &mut Vec<usize>) {
        let k = stack.len();
        if by_size.len() <= k {
            by_size.push(Vec::new());
            counts.push(0);
        }
        let mut face = stack.clone();
        face.sort_unstable();
        by_size[k].extend_from_slice(&face);
        counts[k] += 1;
        let top = *stack.last().expect("nonempty chain") as usize;
        for z in p.above(top).iter() {
            stack.push(z as u32);
            extend(p, stack, by_size, counts);
            stack.pop();
        }
    }
    for x in 0..n {
        stack.push(x as u32);
        extend(p, &mut stack, &mut by_size, &mut counts);
        stack.pop();
    }
    let levels: Vec<FaceLevel> = by_size
        .into_iter()
        .zip(counts)
        .enumerate()
        .map(|(k, (flat, count))| {
            if k == 0 {
                return FaceLevel { size: 0, count: 1, data: Vec::new() };
            }
            let mut faces: Vec<&[u32]> = flat.chunks_exact(k).collect();
            debug_assert_eq!(faces.len(), count);
            faces.sort_unstable();
            FaceLevel { size: k, count, data: faces.concat() }
        })
        .collect();
    SimplicialComplex::from_levels(vertices, levels)
}

/// Face poset: the nonempty faces ordered by inclusion.
pub fn face_poset(c: &SimplicialComplex) -> Poset {
    let mut labels = Vec::new();
    let mut offsets = Vec::new();
    let mut offset = 0;
    for (k, level) in c.levels.iter().enumerate() {
        offsets.push(offset);
        if k == 0 {
            continue;
        }
        for face in level.iter() {
            labels.push(c.face_label(face));
        }
        offset += level.count;
    }
    let mut pairs = Vec::new();
    for k in 2..c.levels.len() {
        for (i, face) in c.levels[k].iter().enumerate() {
            for skip in 0..k {
                let mut sub: Vec<u32> = face.to_vec();
                sub.remove(skip);
                let j = c.levels[k - 1].position(&sub).expect("closed under subsets");
                pairs.push((offsets[k - 1] + j, offsets[k] + i));
            }
        }
    }
    Poset::new(labels, &pairs).expect("face inclusion is a partial order")
}

/// `Δ(F(Γ))`.
pub fn barycentric_subdivision(c: &SimplicialComplex) -> SimplicialComplex {
    order_complex(&face_poset(c))
}

/// Vertex coloring with colors `1..=d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring(pub Vec<usize>);

impl Coloring {
    /// Colors the order complex of a pure poset by `rank + shift`.
    pub fn from_ranks(p: &Poset, shift: usize) -> Result<Self, crate::poset::PosetError> {
        let info = p.ranks()?;
        Ok(Coloring(info.ranks().iter().map(|r| r + shift).collect()))
    }

    pub fn color(&self, v: usize) -> usize {
        self.0[v]
    }

    fn check(&self, c: &SimplicialComplex) -> Result<(), ComplexError> {
        if self.0.len() != c.vertex_count() {
            return Err(ComplexError::ColoringLength { expected: c.vertex_count(), got: self.0.len() });
        }
        Ok(())
    }
}

/// Subcomplex of faces whose colors all lie in `types`. Vertices with other
/// colors are dropped and the remaining ones keep their relative order.
pub fn type_select(c: &SimplicialComplex, coloring: &Coloring, types: &[usize]) -> Result<SimplicialComplex, ComplexError> {
    coloring.check(c)?;
    if c.is_void() {
        return Err(ComplexError::Void);
    }
    let mut new_index = vec![usize::MAX; c.vertex_count()];
    let mut vertices = Vec::new();
    for v in 0..c.vertex_count() {
        if types.contains(&coloring.color(v)) {
            new_index[v] = vertices.len();
            vertices.push(c.vertices[v].clone());
        }
    }
    let facets: Vec<Vec<usize>> = c
        .facets
        .iter()
        .map(|f| f.iter().map(|&v| new_index[v as usize]).filter(|&v| v != usize::MAX).collect())
        .collect();
    SimplicialComplex::from_facets(vertices, &facets)
}

/// Notes on a complex Segre product that are not errors.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComplexSegreReport {
    /// The second coloring uses colors outside `1..=d` on some facet; those
    /// vertices never pair up and the product is correspondingly smaller.
    pub colors_outside_range: bool,
}

/// Segre product of colored complexes: faces `{(x₁,y₁),…,(x_k,y_k)}` with
/// `{x_i} ∈ Γ₁`, `{y_i} ∈ Γ₂` and `g₁(x_i) = g₂(y_i)`.
///
/// Requires `dim Γ₂ <= dim Γ₁ = d - 1`, `g₁` bijective onto `1..=d` on
/// every facet of `Γ₁`, and `g₂` injective on every facet of `Γ₂`.
pub fn complex_segre(
    first: &SimplicialComplex,
    g1: &Coloring,
    second: &SimplicialComplex,
    g2: &Coloring,
) -> Result<(SimplicialComplex, ComplexSegreReport), ComplexError> {
    g1.check(first)?;
    g2.check(second)?;
    let (Some(dim1), Some(dim2)) = (first.dim(), second.dim()) else {
        return Err(ComplexError::Void);
    };
    if dim2 > dim1 {
        return Err(ComplexError::Dimension { first: dim1, second: dim2 });
    }
    let d = (dim1 + 1) as usize;
    for f in &first.facets {
        let mut colors: Vec<usize> = f.iter().map(|&v| g1.color(v as usize)).collect();
        colors.sort_unstable();
        if colors != (1..=d).collect::<Vec<_>>() {
            return Err(ComplexError::NotBijectiveOnFacet { facet: f.iter().map(|&v| v as usize).collect(), d });
        }
    }
    let mut report = ComplexSegreReport { colors_outside_range: false };
    for f in &second.facets {
        let mut colors: Vec<usize> = f.iter().map(|&v| g2.color(v as usize)).collect();
        colors.sort_unstable();
        if colors.windows(2).any(|w| w[0] == w[1]) {
            return Err(ComplexError::NotInjectiveOnFacet(f.iter().map(|&v| v as usize).collect()));
        }
        report.colors_outside_range |= colors.iter().any(|&c| c == 0 || c > d);
    }
    let mut pair_index: BTreeMap<(u32, u32), usize> = BTreeMap::new();
    let mut raw_facets: Vec<Vec<(u32, u32)>> = Vec::new();
    for f1 in &first.facets {
        let by_color: BTreeMap<usize, u32> = f1.iter().map(|&x| (g1.color(x as usize), x)).collect();
        for f2 in &second.facets {
            let face: Vec<(u32, u32)> = f2
                .iter()
                .filter_map(|&y| by_color.get(&g2.color(y as usize)).map(|&x| (x, y)))
                .collect();
            for &pair in &face {
                pair_index.entry(pair).or_insert(0);
            }
            raw_facets.push(face);
        }
    }
    let mut vertices = Vec::with_capacity(pair_index.len());
    for (i, (&(x, y), slot)) in pair_index.iter_mut().enumerate() {
        *slot = i;
        vertices.push(pair_label(&first.vertices[x as usize], &second.vertices[y as usize]));
    }
    let facets: Vec<Vec<usize>> = raw_facets.iter().map(|f| f.iter().map(|p| pair_index[p]).collect()).collect();
    let mut out = SimplicialComplex::from_facets(vertices, &facets)?;
    if facets.is_empty() {
        out = SimplicialComplex::empty();
    }
    Ok((out, report))
}
