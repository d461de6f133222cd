//! The reproduction suite behind `verify-paper`.

use std::fmt::Write as _;

use posettop_core::cm::{cm_preservation_suite, default_seeds, Construction};
use posettop_core::constructions::{fiber_ideal, minors, rees_deranged, subword};
use posettop_core::enumerative::{derangements, falling_chains_segre_square, flag_vector_boolean, no_common_ascent_pairs};
use posettop_core::homology::{betti, boundary_matrices, integral_homology, integral_homology_unreduced, Coefficients};
use posettop_core::semigroup::{
    koszul_necessary_test, lambda_d, rees_semigroup, segre_semigroup, GradingMap, HomogeneousSemigroup, SemigroupError,
};
use posettop_core::simplicial::order_complex;
use posettop_core::{CmCoefficients, HomologySummary, Poset, SimplicialComplex};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

/// Largest `n` covered by the published table.
pub const TABLE1_MAX_N: usize = 6;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Config {
    /// Bound for the Table 1 block and the `R_n` block.
    pub max_n: usize,
    /// Bound for the `K_n` and Möbius blocks.
    pub small_n: usize,
    /// Adds `R_7` to the derangement block.
    pub include_r7: bool,
}

impl Config {
    pub fn new(max_n: usize) -> Self {
        Config { max_n, small_n: max_n.min(5), include_r7: false }
    }
}

/// Published value of a Table 1 cell: `Some((d, r))` for
/// `H̃_d = H̃_{d+1} = Z^r`, `None` for a totally acyclic cell.
pub fn table1_entry(n: usize, i: usize) -> Option<(usize, usize)> {
    match (n, i) {
        (3, 2) => Some((1, 1)),
        (5, 2) | (5, 4) => Some((3, 1)),
        (5, 3) => Some((3, 6)),
        (6, 3) | (6, 4) => Some((4, 13)),
        _ => None,
    }
}

fn matches_entry(h: &HomologySummary, entry: Option<(usize, usize)>) -> bool {
    if !h.is_torsion_free() {
        return false;
    }
    match entry {
        None => h.is_zero(),
        Some((d, r)) => {
            h.nonzero_dims() == vec![d as isize, d as isize + 1] && h.betti(d) == r && h.betti(d + 1) == r
        }
    }
}

#[derive(Clone, Debug)]
pub struct Table1Cell {
    pub n: usize,
    pub i: usize,
    pub elements: usize,
    pub faces: usize,
    pub fiber_consistent: bool,
    pub homology: HomologySummary,
}

#[derive(Clone, Debug)]
pub struct Criterion {
    pub number: u8,
    pub title: &'static str,
    pub passed: bool,
    pub details: Vec<String>,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub config: Config,
    pub table: Vec<Table1Cell>,
    pub criteria: Vec<Criterion>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }
}

pub fn table1_cells(max_n: usize) -> Vec<Table1Cell> {
    let jobs: Vec<(usize, usize)> = (1..=max_n.min(TABLE1_MAX_N)).flat_map(|n| (1..=n).map(move |i| (n, i))).collect();
    jobs.par_iter()
        .map(|&(n, i)| {
            let a: Vec<u8> = (1..=n as u8).collect();
            let f = fiber_ideal(n, &a, i).expect("parameters in range");
            let c = order_complex(&f.ideal.poset);
            Table1Cell {
                n,
                i,
                elements: f.ideal.poset.len(),
                faces: c.total_faces(),
                fiber_consistent: f.consistent,
                homology: integral_homology(&c).expect("non-void"),
            }
        })
        .collect()
}

fn cell_text(h: &HomologySummary) -> String {
    if h.is_zero() {
        return String::from("0");
    }
    let dims = h.nonzero_dims();
    let groups: Vec<String> =
        dims.iter().map(|&d| crate::io::group_text(h, h.betti(d as usize), h.torsion(d as usize))).collect();
    if groups.windows(2).all(|w| w[0] == w[1]) {
        let names: Vec<String> = dims.iter().map(|d| format!("H~_{d}")).collect();
        format!("{} = {}", names.join(" = "), groups[0])
    } else {
        dims.iter().zip(&groups).map(|(d, g)| format!("H~_{d} = {g}")).collect::<Vec<_>>().join(", ")
    }
}

/// Table 1 layout: rows `n`, columns `i`.
pub fn render_table(cells: &[Table1Cell]) -> String {
    let max_n = cells.iter().map(|c| c.n).max().unwrap_or(0);
    let text = |n: usize, i: usize| cells.iter().find(|c| c.n == n && c.i == i).map(|c| cell_text(&c.homology)).unwrap_or_default();
    let width = cells.iter().map(|c| cell_text(&c.homology).len()).max().unwrap_or(1).max(3);
    let mut out = format!("{:>5} |", "n\\i");
    for i in 1..=max_n {
        let _ = write!(out, " {:^width$} |", i);
    }
    out.push('\n');
    out.push_str(&"-".repeat(out.len() - 1));
    out.push('\n');
    for n in 1..=max_n {
        let _ = write!(out, "{n:>5} |");
        for i in 1..=max_n {
            let _ = write!(out, " {:^width$} |", if i <= n { text(n, i) } else { String::new() });
        }
        out.push('\n');
    }
    out
}

fn criterion(number: u8, title: &'static str, details: Vec<(bool, String)>) -> Criterion {
    Criterion {
        number,
        title,
        passed: details.iter().all(|d| d.0),
        details: details.into_iter().map(|(ok, s)| format!("[{}] {s}", if ok { "ok" } else { "FAIL" })).collect(),
    }
}

fn table_criteria(cells: &[Table1Cell]) -> (Criterion, Criterion) {
    let homology = cells
        .iter()
        .map(|c| {
            let ok = matches_entry(&c.homology, table1_entry(c.n, c.i)) && c.fiber_consistent;
            (ok, format!("I([{}],{}): {} ({} faces)", c.n, c.i, cell_text(&c.homology), c.faces))
        })
        .collect();
    let euler = cells
        .iter()
        .map(|c| {
            let chi = c.homology.euler_characteristic();
            (chi == 0, format!("I([{}],{}): reduced Euler characteristic {chi}", c.n, c.i))
        })
        .collect();
    (criterion(1, "Table 1 homology", homology), criterion(2, "Table 1 Euler characteristics", euler))
}

/// Free of rank `D_n`, concentrated in dimension `n - 1`.
fn is_derangement_sphere(h: &HomologySummary, n: usize) -> Result<bool, String> {
    let d = derangements(n).map_err(|e| e.to_string())?;
    let top = n - 1;
    Ok(h.is_torsion_free() && h.concentrated_in(top as isize) && h.betti(top) as u128 == d)
}

fn deranged_criterion(config: &Config) -> Criterion {
    let mut ns: Vec<usize> = (2..=config.max_n).collect();
    if config.include_r7 && !ns.contains(&7) {
        ns.push(7);
    }
    let details = ns
        .par_iter()
        .map(|&n| {
            let r = rees_deranged(n).expect("n in range");
            let h = integral_homology(&order_complex(&r.poset)).expect("non-void");
            let ok = is_derangement_sphere(&h, n).unwrap_or(false);
            (ok, format!("R_{n}: {} (D_{n} = {})", cell_text(&h), derangements(n).map(|d| d.to_string()).unwrap_or_default()))
        })
        .collect();
    criterion(3, "R_n is a wedge of D_n spheres", details)
}

fn subword_criterion(config: &Config) -> Criterion {
    let details = (1..=config.small_n)
        .into_par_iter()
        .map(|n| {
            let k = subword(n).expect("n in range");
            let h = integral_homology(&order_complex(&k.poset)).expect("non-void");
            let ok = is_derangement_sphere(&h, n).unwrap_or(false);
            (ok, format!("K_{n}: {} (D_{n} = {})", cell_text(&h), derangements(n).map(|d| d.to_string()).unwrap_or_default()))
        })
        .collect();
    criterion(4, "K_n is a wedge of D_n spheres", details)
}

/// `(-1)^n μ(M_n)`, no-common-ascent pairs, falling chains and `Σ α_J β_J`.
pub fn mobius_row(n: usize) -> Result<[i64; 4], String> {
    let m = minors(n).map_err(|e| e.to_string())?;
    let mu = m.poset.mobius_bounded().map_err(|e| e.to_string())?;
    let signed = if n % 2 == 0 { mu } else { -mu };
    let nca = no_common_ascent_pairs(n).map_err(|e| e.to_string())? as i64;
    let falling = falling_chains_segre_square(n).map_err(|e| e.to_string())? as i64;
    let fv = flag_vector_boolean(n).map_err(|e| e.to_string())?;
    Ok([signed, nca, falling, fv.alpha_beta_sum() as i64])
}

fn mobius_criterion(config: &Config) -> Criterion {
    let known = [1i64, 3, 19];
    let details = (1..=config.small_n)
        .map(|n| match mobius_row(n) {
            Ok(row) => {
                let equal = row.iter().all(|&v| v == row[0]);
                let known_ok = known.get(n - 1).map_or(true, |&k| k == row[0]);
                (equal && known_ok, format!("n = {n}: {} = {} = {} = {}", row[0], row[1], row[2], row[3]))
            }
            Err(e) => (false, format!("n = {n}: {e}")),
        })
        .collect();
    criterion(5, "Mobius identities for M_n", details)
}

fn preservation_criterion() -> Criterion {
    let seeds = default_seeds(4, 4, 4);
    let report = cm_preservation_suite(&seeds, &[CmCoefficients::Rationals, CmCoefficients::Prime(2)]);
    let mut details: Vec<(bool, String)> = report.setup_errors.iter().map(|e| (false, e.clone())).collect();
    for kind in [Construction::RankSelection, Construction::WeightedSegre, Construction::Rees, Construction::NonStrictSegre] {
        let cases: Vec<_> = report.cases.iter().filter(|c| c.construction == kind).collect();
        let bad: Vec<&str> = cases.iter().filter(|c| !c.consistent()).map(|c| c.description.as_str()).collect();
        let expected = if kind == Construction::NonStrictSegre { "not CM" } else { "CM" };
        let msg = if bad.is_empty() {
            format!("{kind:?}: {} cases, all {expected} over Q and GF(2)", cases.len())
        } else {
            format!("{kind:?}: {} of {} cases contradict the theorem: {}", bad.len(), cases.len(), bad.join("; "))
        };
        details.push((bad.is_empty() && !cases.is_empty(), msg));
    }
    criterion(6, "CM preservation", details)
}

fn semigroup_checks() -> Result<Vec<(bool, String)>, SemigroupError> {
    let mut out = Vec::new();
    for d in 1..=3 {
        let rep = koszul_necessary_test(&HomogeneousSemigroup::standard(d), 4, CmCoefficients::Rationals)?;
        out.push((rep.passed(), format!("N^{d}: {} elements up to rank 4, interval criterion holds", rep.elements_checked)));
    }
    let rep = koszul_necessary_test(&lambda_d(3)?, 3, CmCoefficients::Rationals)?;
    out.push((rep.passed(), format!("Lambda_3: {} elements up to rank 3, interval criterion holds", rep.elements_checked)));

    let n1 = HomogeneousSemigroup::standard(1);
    let n2 = HomogeneousSemigroup::standard(2);
    let segre_cases = [
        ("N o_2 N", &n1, &n1, GradingMap::scaled_degree(&n1, 2)?),
        ("N^2 o N^2", &n2, &n2, GradingMap::scaled_degree(&n2, 1)?),
        ("N^2 o_(1,2) N^2", &n2, &n2, GradingMap::new(&n2, vec![1, 2])?),
    ];
    for (name, a, b, g) in segre_cases {
        let view = segre_semigroup(a, b, g, 3)?;
        let (mut count, mut ok) = (0, true);
        for e in view.elements().into_iter().filter(|e| a.degree(&e.0).is_some_and(|d| d <= 3)) {
            ok &= view.interval_matches_segre(&e)? && view.lower_interval(&e)?.is_self_dual()?;
            count += 1;
        }
        out.push((ok, format!("{name}: {count} intervals match the weighted Segre product and are self-dual")));
    }
    for (name, a, b) in [("N * N", &n1, &n1), ("N^2 * N", &n2, &n1), ("N * N^2", &n1, &n2), ("N^2 * N^2", &n2, &n2)] {
        let view = rees_semigroup(a, b, 3)?;
        let (mut count, mut ok) = (0, true);
        for e in view.elements() {
            ok &= view.interval_matches_rees(&e)? && view.lower_interval(&e)?.is_self_dual()?;
            count += 1;
        }
        out.push((ok, format!("{name}: {count} intervals match the Rees product ideal and are self-dual")));
    }
    Ok(out)
}

fn semigroup_criterion() -> Criterion {
    let details = semigroup_checks().unwrap_or_else(|e| vec![(false, e.to_string())]);
    criterion(7, "Semigroup intervals", details)
}

/// Random complex on at most `max_vertices` vertices.
pub fn random_complex(rng: &mut StdRng, max_vertices: usize) -> SimplicialComplex {
    let n = rng.gen_range(1..=max_vertices);
    let facets: Vec<Vec<usize>> = (0..rng.gen_range(1..=6))
        .map(|_| {
            let size = rng.gen_range(1..=n.min(5));
            let mut f: Vec<usize> = (0..n).collect();
            for k in 0..size {
                let j = rng.gen_range(k..n);
                f.swap(k, j);
            }
            f.truncate(size);
            f
        })
        .collect();
    SimplicialComplex::from_facets((0..n).map(|v| format!("v{v}")).collect(), &facets).expect("valid facets")
}

/// Random bounded graded poset with at most `max_elements` elements.
pub fn random_bounded_poset(rng: &mut StdRng, max_elements: usize) -> Poset {
    let mut sizes = vec![1];
    let mut total = 2;
    while total < max_elements && (sizes.len() == 1 || rng.gen_bool(0.6)) {
        let s = rng.gen_range(1..=3).min(max_elements - total);
        sizes.push(s);
        total += s;
    }
    sizes.push(1);
    let mut start = vec![0];
    for s in &sizes {
        start.push(start.last().copied().unwrap_or(0) + s);
    }
    let mut pairs = Vec::new();
    for k in 1..sizes.len() {
        let mut has_up = vec![false; sizes[k - 1]];
        for u in start[k]..start[k + 1] {
            let mut any = false;
            for (t, l) in (start[k - 1]..start[k]).enumerate() {
                if sizes[k - 1] == 1 || sizes[k] == 1 || rng.gen_bool(0.5) {
                    pairs.push((l, u));
                    has_up[t] = true;
                    any = true;
                }
            }
            if !any {
                pairs.push((start[k - 1], u));
                has_up[0] = true;
            }
        }
        for (t, up) in has_up.iter().enumerate() {
            if !up {
                pairs.push((start[k - 1] + t, start[k]));
            }
        }
    }
    let n = start[sizes.len()];
    Poset::new((0..n).map(|x| format!("x{x}")).collect(), &pairs).expect("graded by construction")
}

/// The 6-vertex projective plane.
pub fn projective_plane() -> SimplicialComplex {
    let facets: Vec<Vec<usize>> = [
        [1, 2, 3], [1, 3, 4], [1, 4, 5], [1, 5, 6], [1, 6, 2],
        [2, 3, 5], [3, 4, 6], [4, 5, 2], [5, 6, 3], [6, 2, 4],
    ]
    .iter()
    .map(|f| f.iter().map(|v| v - 1).collect())
    .collect();
    SimplicialComplex::from_facets((1..=6).map(|v| v.to_string()).collect(), &facets).expect("valid facets")
}

fn oracle_criterion() -> Criterion {
    let mut details = Vec::new();
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let (mut bd_ok, mut betti_ok) = (true, true);
    let complexes: Vec<SimplicialComplex> = (0..120).map(|_| random_complex(&mut rng, 8)).collect();
    for c in &complexes {
        let mats = boundary_matrices(c).expect("non-void");
        bd_ok &= mats.windows(2).all(|w| w[0].mul(&w[1]).is_zero());
        let q = betti(c, Coefficients::Rationals).expect("non-void");
        let z = integral_homology(c).expect("non-void");
        let full = integral_homology_unreduced(c).expect("non-void");
        betti_ok &= q.betti_from_minus_one() == z.betti_from_minus_one() && z == full;
    }
    details.push((bd_ok, format!("boundary of boundary is zero on {} random complexes", complexes.len())));
    details.push((betti_ok, format!("SNF and elimination Betti numbers agree on {} random complexes", complexes.len())));
    let mut hall_ok = true;
    let posets: Vec<Poset> = (0..120).map(|_| random_bounded_poset(&mut rng, 10)).collect();
    for p in &posets {
        let (bottom, top) = (p.minimum().expect("bounded"), p.maximum().expect("bounded"));
        let mu = p.mobius(bottom, top).expect("bottom below top");
        let open = order_complex(&p.open_interval(bottom, top).expect("bottom below top"));
        hall_ok &= open.reduced_euler() == Ok(mu);
    }
    details.push((hall_ok, format!("Hall's theorem on {} random bounded graded posets", posets.len())));
    let rp2 = projective_plane();
    let z = integral_homology(&rp2).expect("non-void");
    let f2 = betti(&rp2, Coefficients::Prime(2)).expect("non-void");
    let q = betti(&rp2, Coefficients::Rationals).expect("non-void");
    let z_ok = z.nonzero_dims() == vec![1] && z.betti(1) == 0 && z.torsion(1).len() == 1 && z.torsion(1)[0] == 2u32.into();
    details.push((z_ok, format!("RP^2 over Z: {}", cell_text(&z))));
    details.push((f2.nonzero_dims() == vec![1, 2] && f2.betti(1) == 1 && f2.betti(2) == 1, format!("RP^2 over GF(2): {}", cell_text(&f2))));
    details.push((q.is_zero(), format!("RP^2 over Q: {}", cell_text(&q))));
    criterion(8, "Homology engine oracles", details)
}

pub fn run(config: Config) -> Report {
    let table = table1_cells(config.max_n);
    let (c1, c2) = table_criteria(&table);
    let criteria = vec![
        c1,
        c2,
        deranged_criterion(&config),
        subword_criterion(&config),
        mobius_criterion(&config),
        preservation_criterion(),
        semigroup_criterion(),
        oracle_criterion(),
    ];
    Report { config, table, criteria }
}

pub fn render(report: &Report) -> String {
    let mut out = String::from("Homology groups of I([n],i)\n");
    out.push_str(&render_table(&report.table));
    out.push('\n');
    for c in &report.criteria {
        let _ = writeln!(out, "criterion {}: {} ({})", c.number, if c.passed { "PASS" } else { "FAIL" }, c.title);
        for d in &c.details {
            let _ = writeln!(out, "    {d}");
        }
    }
    out
}
