//! Ground-truth machinery: the catalog of the 30 connected patterns on at
//! most five vertices with their 73 vertex orbits and 12 edge-orbit families,
//! automorphism computation, brute-force orbit counters for small graphs, and
//! shrinkage-multiplicity enumeration.
//!
//! Everything else in the crate is validated against this module, so it favors
//! clarity over speed. The brute-force counters refuse graphs with more than
//! [`ORACLE_MAX_N`] vertices.

use crate::graph::Graph;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

pub const NUM_ORBITS: usize = 73;
pub const NUM_EDGE_ORBITS: usize = 12;
pub const ORACLE_MAX_N: usize = 16;

/// One pattern: vertex count, edge list, and the global orbit id of each
/// vertex. The orbit ids pin the catalog to the conventional 0..72 numbering
/// (H0 edge ... H29 five-clique); a unit test recomputes the orbit partition
/// from the automorphism group and checks it matches this table.
#[derive(Debug, Clone, Copy)]
pub struct PatternDef {
    pub id: usize,
    pub n: usize,
    pub edges: &'static [(u8, u8)],
    pub orbit_of: &'static [u8],
}

pub static PATTERNS: [PatternDef; 30] = [
    // H0: single edge
    PatternDef { id: 0, n: 2, edges: &[(0, 1)], orbit_of: &[0, 0] },
    // H1: path on 3 vertices 0-1-2
    PatternDef { id: 1, n: 3, edges: &[(0, 1), (1, 2)], orbit_of: &[1, 2, 1] },
    // H2: triangle
    PatternDef { id: 2, n: 3, edges: &[(0, 1), (0, 2), (1, 2)], orbit_of: &[3, 3, 3] },
    // H3: path 0-1-2-3
    PatternDef { id: 3, n: 4, edges: &[(0, 1), (1, 2), (2, 3)], orbit_of: &[4, 5, 5, 4] },
    // H4: claw, hub 0
    PatternDef { id: 4, n: 4, edges: &[(0, 1), (0, 2), (0, 3)], orbit_of: &[7, 6, 6, 6] },
    // H5: 4-cycle 0-1-2-3
    PatternDef { id: 5, n: 4, edges: &[(0, 1), (1, 2), (2, 3), (0, 3)], orbit_of: &[8, 8, 8, 8] },
    // H6: paw; triangle 0,1,2 with pendant 3 on 2
    PatternDef { id: 6, n: 4, edges: &[(0, 1), (0, 2), (1, 2), (2, 3)], orbit_of: &[10, 10, 11, 9] },
    // H7: diamond; off-chord 0,1; chord 2-3
    PatternDef { id: 7, n: 4, edges: &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], orbit_of: &[12, 12, 13, 13] },
    // H8: K4
    PatternDef { id: 8, n: 4, edges: &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)], orbit_of: &[14, 14, 14, 14] },
    // H9: path 0-1-2-3-4
    PatternDef { id: 9, n: 5, edges: &[(0, 1), (1, 2), (2, 3), (3, 4)], orbit_of: &[15, 16, 17, 16, 15] },
    // H10: fork; hub 0 with leaves 1,2 and arm 0-3-4
    PatternDef { id: 10, n: 5, edges: &[(0, 1), (0, 2), (0, 3), (3, 4)], orbit_of: &[21, 19, 19, 20, 18] },
    // H11: star K1,4, hub 0
    PatternDef { id: 11, n: 5, edges: &[(0, 1), (0, 2), (0, 3), (0, 4)], orbit_of: &[23, 22, 22, 22, 22] },
    // H12: bull; triangle 0,1,2 with pendants 3 on 1 and 4 on 2
    PatternDef { id: 12, n: 5, edges: &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4)], orbit_of: &[25, 26, 26, 24, 24] },
    // H13: tadpole; triangle 0,1,2 with tail 2-3-4
    PatternDef { id: 13, n: 5, edges: &[(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)], orbit_of: &[29, 29, 30, 28, 27] },
    // H14: cricket; triangle 0,1,2 with pendants 3,4 on 2
    PatternDef { id: 14, n: 5, edges: &[(0, 1), (0, 2), (1, 2), (2, 3), (2, 4)], orbit_of: &[32, 32, 33, 31, 31] },
    // H15: 5-cycle
    PatternDef { id: 15, n: 5, edges: &[(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)], orbit_of: &[34, 34, 34, 34, 34] },
    // H16: banner; 4-cycle 0-1-2-3 with pendant 4 on 0
    PatternDef { id: 16, n: 5, edges: &[(0, 1), (1, 2), (2, 3), (0, 3), (0, 4)], orbit_of: &[38, 37, 36, 37, 35] },
    // H17: dart; diamond chord 0-1, off-chord 2,3, pendant 4 on chord vertex 0
    PatternDef { id: 17, n: 5, edges: &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4)], orbit_of: &[42, 41, 40, 40, 39] },
    // H18: bowtie; triangles 0,1,2 and 0,3,4
    PatternDef { id: 18, n: 5, edges: &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)], orbit_of: &[44, 43, 43, 43, 43] },
    // H19: diamond chord 0-1, off-chord 2,3, pendant 4 on off-chord vertex 2
    PatternDef { id: 19, n: 5, edges: &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)], orbit_of: &[48, 48, 47, 46, 45] },
    // H20: K2,3; degree-3 side 0,1; degree-2 side 2,3,4
    PatternDef { id: 20, n: 5, edges: &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], orbit_of: &[50, 50, 49, 49, 49] },
    // H21: house; square 0-1-2-3 with roof apex 4 on edge 2-3
    PatternDef { id: 21, n: 5, edges: &[(0, 1), (1, 2), (2, 3), (0, 3), (2, 4), (3, 4)], orbit_of: &[51, 51, 53, 53, 52] },
    // H22: book B3; spine 0-1, pages 2,3,4
    PatternDef { id: 22, n: 5, edges: &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)], orbit_of: &[55, 55, 54, 54, 54] },
    // H23: K4 on 0..3 with pendant 4 on 0
    PatternDef { id: 23, n: 5, edges: &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 4)], orbit_of: &[58, 57, 57, 57, 56] },
    // H24: gem; path 0-1-2-3 plus apex 4 adjacent to all
    PatternDef { id: 24, n: 5, edges: &[(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)], orbit_of: &[59, 60, 60, 59, 61] },
    // H25: diamond chord 0-1, off-chord 2,3, plus 4 adjacent to 2 and 3
    PatternDef { id: 25, n: 5, edges: &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)], orbit_of: &[64, 64, 63, 63, 62] },
    // H26: K5 minus a path 2-4-3 (missing edges 2-4 and 3-4)
    PatternDef { id: 26, n: 5, edges: &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3)], orbit_of: &[67, 67, 66, 66, 65] },
    // H27: wheel W4; hub 0, rim 1-2-3-4
    PatternDef { id: 27, n: 5, edges: &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3), (3, 4), (1, 4)], orbit_of: &[69, 68, 68, 68, 68] },
    // H28: K5 minus edge 3-4
    PatternDef { id: 28, n: 5, edges: &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4)], orbit_of: &[71, 71, 71, 70, 70] },
    // H29: K5
    PatternDef { id: 29, n: 5, edges: &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], orbit_of: &[72, 72, 72, 72, 72] },
];

/// Edge-orbit family of a pattern edge, keyed by the global vertex orbits of
/// its endpoints. `first` is the endpoint orbit mapped to the first slot of
/// the ordered pair (the larger orbit index, as in the asymmetric counts).
#[derive(Debug, Clone, Copy)]
pub struct EdgeFamily {
    pub family: usize,
    pub first: u8,
    pub second: u8,
}

/// (high endpoint orbit, low endpoint orbit) for E0..E11.
pub const EDGE_FAMILY_SIDES: [(u8, u8); NUM_EDGE_ORBITS] = [
    (2, 1),   // E0: wedge edge, center first
    (3, 3),   // E1: triangle edge
    (5, 4),   // E2: 4-path outer edge, middle first
    (5, 5),   // E3: 4-path middle edge
    (7, 6),   // E4: claw edge, hub first
    (8, 8),   // E5: 4-cycle edge
    (11, 9),  // E6: paw tail edge, apex first
    (10, 10), // E7: paw base edge
    (11, 10), // E8: paw apex-base edge, apex first
    (13, 12), // E9: diamond chord-to-off edge, chord first
    (13, 13), // E10: diamond chord edge
    (14, 14), // E11: K4 edge
];

pub fn edge_family_of(orb_a: u8, orb_b: u8) -> Option<EdgeFamily> {
    let (hi, lo) = if orb_a >= orb_b { (orb_a, orb_b) } else { (orb_b, orb_a) };
    EDGE_FAMILY_SIDES
        .iter()
        .position(|&(a, b)| (a, b) == (hi, lo))
        .map(|family| EdgeFamily { family, first: hi, second: lo })
    // The single-edge pattern H0 has no entry: its one orbit pair (0,0) is
    // deliberately absent from the table.
}

/// Whether edge-orbit family `f` has two distinguishable endpoint roles.
pub fn edge_family_asymmetric(f: usize) -> bool {
    let (a, b) = EDGE_FAMILY_SIDES[f];
    a != b
}

/// Catalog entry with everything derived from the pattern definition.
#[derive(Debug, Clone)]
pub struct PatternInfo {
    pub def: &'static PatternDef,
    pub adj: Vec<u32>,
    /// All automorphisms as permutation vectors.
    pub autos: Vec<Vec<u8>>,
    /// Vertex orbit partition as computed from the automorphism group,
    /// each class sorted, classes sorted by smallest member.
    pub vertex_orbits: Vec<Vec<u8>>,
    /// Edge orbit partition over edge indices into `def.edges`.
    pub edge_orbits: Vec<Vec<usize>>,
    /// Per edge of `def.edges`: global edge family, if the pattern has one.
    pub edge_families: Vec<Option<EdgeFamily>>,
}

#[derive(Debug, Clone)]
pub struct OrbitInfo {
    pub pattern: usize,
    /// Members of the orbit inside the pattern, ascending.
    pub members: Vec<u8>,
    /// Representative: the smallest-id member.
    pub representative: u8,
}

#[derive(Debug)]
pub struct Catalog {
    pub patterns: Vec<PatternInfo>,
    pub orbits: Vec<OrbitInfo>,
}

impl Catalog {
    pub fn aut_size(&self, pattern: usize) -> usize {
        self.patterns[pattern].autos.len()
    }

    pub fn orbit_size(&self, orbit: usize) -> usize {
        self.orbits[orbit].members.len()
    }

    /// Plain-text dump: per pattern its id, size, edges, and orbit classes
    /// with their global ids.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for p in &self.patterns {
            s.push_str(&format!("pattern {} n {}\n", p.def.id, p.def.n));
            s.push_str("edges");
            for &(a, b) in p.def.edges {
                s.push_str(&format!(" {a}-{b}"));
            }
            s.push('\n');
            for class in &p.vertex_orbits {
                let gid = p.def.orbit_of[class[0] as usize];
                s.push_str(&format!("orbit {gid}"));
                for &v in class {
                    s.push_str(&format!(" {v}"));
                }
                s.push('\n');
            }
        }
        s
    }
}

/// Parses the text format written by [`Catalog::to_text`] back into
/// (id, n, edges, orbit classes) tuples.
pub fn parse_catalog_text(
    text: &str,
) -> Option<Vec<(usize, usize, Vec<(u8, u8)>, Vec<(usize, Vec<u8>)>)>> {
    let mut out = Vec::new();
    let mut cur: Option<(usize, usize, Vec<(u8, u8)>, Vec<(usize, Vec<u8>)>)> = None;
    for line in text.lines() {
        let mut it = line.split_whitespace();
        match it.next()? {
            "pattern" => {
                if let Some(c) = cur.take() {
                    out.push(c);
                }
                let id = it.next()?.parse().ok()?;
                it.next()?; // "n"
                let n = it.next()?.parse().ok()?;
                cur = Some((id, n, Vec::new(), Vec::new()));
            }
            "edges" => {
                let c = cur.as_mut()?;
                for tok in it {
                    let (a, b) = tok.split_once('-')?;
                    c.2.push((a.parse().ok()?, b.parse().ok()?));
                }
            }
            "orbit" => {
                let c = cur.as_mut()?;
                let gid = it.next()?.parse().ok()?;
                let members = it.map(|t| t.parse().ok()).collect::<Option<Vec<u8>>>()?;
                c.3.push((gid, members));
            }
            _ => return None,
        }
    }
    if let Some(c) = cur.take() {
        out.push(c);
    }
    Some(out)
}

static CATALOG: OnceLock<Catalog> = OnceLock::new();

pub fn catalog() -> &'static Catalog {
    CATALOG.get_or_init(build_catalog)
}

fn build_catalog() -> Catalog {
    let mut patterns = Vec::with_capacity(30);
    let mut orbits: Vec<Option<OrbitInfo>> = vec![None; NUM_ORBITS];
    for def in &PATTERNS {
        let adj = adj_masks(def.n, def.edges);
        let autos = compute_automorphisms(def.n, def.edges);
        let vertex_orbits = vertex_orbit_partition(def.n, &autos);
        let edge_orbits = edge_orbit_partition(def.edges, &autos);
        let edge_families = def
            .edges
            .iter()
            .map(|&(a, b)| edge_family_of(def.orbit_of[a as usize], def.orbit_of[b as usize]))
            .collect();
        for class in &vertex_orbits {
            let gid = def.orbit_of[class[0] as usize] as usize;
            assert!(orbits[gid].is_none(), "orbit {gid} assigned twice");
            orbits[gid] = Some(OrbitInfo {
                pattern: def.id,
                members: class.clone(),
                representative: class[0],
            });
        }
        patterns.push(PatternInfo {
            def,
            adj,
            autos,
            vertex_orbits,
            edge_orbits,
            edge_families,
        });
    }
    let orbits: Vec<OrbitInfo> = orbits
        .into_iter()
        .enumerate()
        .map(|(i, o)| o.unwrap_or_else(|| panic!("orbit {i} missing from catalog")))
        .collect();
    Catalog { patterns, orbits }
}

fn adj_masks(n: usize, edges: &[(u8, u8)]) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for &(a, b) in edges {
        adj[a as usize] |= 1 << b;
        adj[b as usize] |= 1 << a;
    }
    adj
}

/// Exhaustive automorphism search over all |V|! permutations.
pub fn compute_automorphisms(n: usize, edges: &[(u8, u8)]) -> Vec<Vec<u8>> {
    let adj = adj_masks(n, edges);
    let mut perm: Vec<u8> = (0..n as u8).collect();
    let mut autos = Vec::new();
    permute(&mut perm, 0, &mut |p| {
        let ok = edges.iter().all(|&(a, b)| {
            adj[p[a as usize] as usize] & (1 << p[b as usize]) != 0
        });
        // Edge count is preserved by any bijection that maps edges to edges.
        if ok {
            autos.push(p.to_vec());
        }
    });
    autos
}

fn permute(perm: &mut Vec<u8>, k: usize, f: &mut impl FnMut(&[u8])) {
    if k == perm.len() {
        f(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, f);
        perm.swap(k, i);
    }
}

fn vertex_orbit_partition(n: usize, autos: &[Vec<u8>]) -> Vec<Vec<u8>> {
    let mut class = vec![usize::MAX; n];
    let mut classes: Vec<Vec<u8>> = Vec::new();
    for v in 0..n {
        if class[v] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = Vec::new();
        for a in autos {
            let img = a[v] as usize;
            if class[img] == usize::MAX {
                class[img] = id;
                members.push(img as u8);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    classes
}

fn edge_orbit_partition(edges: &[(u8, u8)], autos: &[Vec<u8>]) -> Vec<Vec<usize>> {
    let find = |a: u8, b: u8| -> usize {
        edges
            .iter()
            .position(|&(x, y)| (x, y) == (a.min(b), a.max(b)) || (y, x) == (a.min(b), a.max(b)))
            .expect("image of an edge must be an edge")
    };
    let mut class = vec![usize::MAX; edges.len()];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for e in 0..edges.len() {
        if class[e] != usize::MAX {
            continue;
        }
        let id = classes.len();
        let mut members = Vec::new();
        for a in autos {
            let (x, y) = edges[e];
            let img = find(a[x as usize], a[y as usize]);
            if class[img] == usize::MAX {
                class[img] = id;
                members.push(img);
            }
        }
        members.sort_unstable();
        classes.push(members);
    }
    classes
}

// ---------------------------------------------------------------------------
// Brute-force orbit counters
// ---------------------------------------------------------------------------

/// Per-vertex tables from the brute-force counter: 73 columns each.
pub struct OracleVoc {
    pub noninduced: Vec<Vec<u64>>,
    pub induced: Vec<Vec<u64>>,
}

struct MapPlan {
    /// Pattern vertices in an order where each one after the first is
    /// adjacent to at least one earlier vertex.
    order: Vec<u8>,
    /// For position i: earlier positions whose images must be adjacent.
    req: Vec<Vec<usize>>,
    /// For position i: earlier positions whose images must not be adjacent
    /// (induced matches only; checked separately).
    non: Vec<Vec<usize>>,
    /// Global orbit id per position.
    orbit: Vec<u8>,
}

fn map_plan(p: &PatternInfo) -> MapPlan {
    let n = p.def.n;
    let mut order = vec![0u8];
    let mut placed = 1u32 << 0;
    while order.len() < n {
        let next = (0..n as u8)
            .find(|&v| placed & (1 << v) == 0 && p.adj[v as usize] & placed != 0)
            .expect("patterns are connected");
        order.push(next);
        placed |= 1 << next;
    }
    let pos_of = |v: u8| order.iter().position(|&x| x == v).unwrap();
    let mut req = vec![Vec::new(); n];
    let mut non = vec![Vec::new(); n];
    for i in 1..n {
        let v = order[i];
        for j in 0..i {
            let w = order[j];
            if p.adj[v as usize] & (1 << w) != 0 {
                req[i].push(j);
            } else {
                non[i].push(j);
            }
        }
    }
    let _ = pos_of;
    MapPlan {
        orbit: order.iter().map(|&v| p.def.orbit_of[v as usize]).collect(),
        order,
        req,
        non,
    }
}

struct SmallGraph {
    n: usize,
    adj: Vec<u32>,
}

impl SmallGraph {
    fn from_graph(g: &Graph) -> SmallGraph {
        assert!(
            g.n() <= ORACLE_MAX_N,
            "brute-force oracle refuses graphs with more than {ORACLE_MAX_N} vertices"
        );
        let mut adj = vec![0u32; g.n()];
        for &(u, v) in g.canonical_edges() {
            adj[u as usize] |= 1 << v;
            adj[v as usize] |= 1 << u;
        }
        SmallGraph { n: g.n(), adj }
    }

    #[inline]
    fn has(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }
}

/// Enumerates every injective mapping of every pattern into `g` and reports
/// both non-induced and induced distinct-match counts per vertex and orbit.
pub fn brute_force_voc(g: &Graph) -> OracleVoc {
    let sg = SmallGraph::from_graph(g);
    let cat = catalog();
    let mut raw_non = vec![vec![0u64; g.n()]; NUM_ORBITS];
    let mut raw_ind = vec![vec![0u64; g.n()]; NUM_ORBITS];
    for p in &cat.patterns {
        let plan = map_plan(p);
        let aut = p.autos.len() as u64;
        let mut img = vec![0usize; p.def.n];
        let mut used = 0u32;
        enumerate_maps(&sg, &plan, 0, &mut img, &mut used, &mut |img| {
            for (i, &v) in img.iter().enumerate() {
                raw_non[plan.orbit[i] as usize][v] += 1;
            }
            let induced = (0..p.def.n).all(|i| {
                plan.non[i].iter().all(|&j| !sg.has(img[i], img[j]))
            });
            if induced {
                for (i, &v) in img.iter().enumerate() {
                    raw_ind[plan.orbit[i] as usize][v] += 1;
                }
            }
        });
        for class in &p.vertex_orbits {
            let gid = p.def.orbit_of[class[0] as usize] as usize;
            for v in 0..g.n() {
                debug_assert_eq!(raw_non[gid][v] % aut, 0);
                debug_assert_eq!(raw_ind[gid][v] % aut, 0);
                raw_non[gid][v] /= aut;
                raw_ind[gid][v] /= aut;
            }
        }
    }
    OracleVoc {
        noninduced: raw_non,
        induced: raw_ind,
    }
}

fn enumerate_maps(
    sg: &SmallGraph,
    plan: &MapPlan,
    pos: usize,
    img: &mut Vec<usize>,
    used: &mut u32,
    f: &mut impl FnMut(&[usize]),
) {
    if pos == plan.order.len() {
        f(img);
        return;
    }
    for v in 0..sg.n {
        if *used & (1 << v) != 0 {
            continue;
        }
        if plan.req[pos].iter().all(|&j| sg.has(v, img[j])) {
            img[pos] = v;
            *used |= 1 << v;
            enumerate_maps(sg, plan, pos + 1, img, used, f);
            *used &= !(1 << v);
        }
    }
}

/// Brute-force edge-orbit counts: per edge id, the six symmetric families,
/// and per directed slot (2*eid for min-first) the six asymmetric ones.
pub struct OracleEdgeOrbits {
    pub sym: Vec<Vec<u64>>,
    pub asym: Vec<Vec<u64>>,
}

pub fn brute_force_edge_orbits(g: &Graph) -> OracleEdgeOrbits {
    let sg = SmallGraph::from_graph(g);
    let cat = catalog();
    let m = g.m();
    let mut sym = vec![vec![0u64; m]; NUM_EDGE_ORBITS];
    let mut asym = vec![vec![0u64; 2 * m]; NUM_EDGE_ORBITS];
    for p in &cat.patterns {
        if p.edge_families.iter().all(|f| f.is_none()) {
            continue;
        }
        let plan = map_plan(p);
        let aut = p.autos.len() as u64;
        // position of each pattern vertex in the mapping order
        let mut pos = vec![0usize; p.def.n];
        for (i, &v) in plan.order.iter().enumerate() {
            pos[v as usize] = i;
        }
        let mut img = vec![0usize; p.def.n];
        let mut used = 0u32;
        let mut touched: Vec<(usize, usize)> = Vec::new();
        enumerate_maps(&sg, &plan, 0, &mut img, &mut used, &mut |img| {
            for (eidx, &(a, b)) in p.def.edges.iter().enumerate() {
                let Some(fam) = p.edge_families[eidx] else { continue };
                let ga = img[pos[a as usize]] as u32;
                let gb = img[pos[b as usize]] as u32;
                let eid = g.edge_id(ga, gb).expect("mapped edge exists") as usize;
                if edge_family_asymmetric(fam.family) {
                    // endpoint in the higher orbit goes first
                    let first = if p.def.orbit_of[a as usize] == fam.first { ga } else { gb };
                    let slot = 2 * eid + usize::from(first != ga.min(gb));
                    asym[fam.family][slot] += 1;
                    touched.push((fam.family, slot));
                } else {
                    sym[fam.family][eid] += 1;
                    touched.push((fam.family, eid));
                }
            }
        });
        let _ = &touched;
        for f in 0..NUM_EDGE_ORBITS {
            if p.edge_families.iter().flatten().any(|ef| ef.family == f) {
                let target = if edge_family_asymmetric(f) { &mut asym[f] } else { &mut sym[f] };
                for x in target.iter_mut() {
                    debug_assert_eq!(*x % aut, 0);
                    *x /= aut;
                }
            }
        }
    }
    OracleEdgeOrbits { sym, asym }
}

// ---------------------------------------------------------------------------
// Shrinkage multiplicities
// ---------------------------------------------------------------------------

/// Number of distinct C-shrinkages of pattern `h` into pattern `hp` that send
/// the representative vertex `i` (which must lie in the cut `c`) to `j`.
///
/// A shrinkage is a tuple of injective maps, one per fragment of `h` after
/// removing `c`, all extending a common map on the cut, such that every
/// fragment edge lands on an edge of `hp` and every edge of `hp` is covered.
pub fn compute_numsh(h: &PatternDef, c: &[u8], i: u8, hp: &PatternDef, j: u8) -> u64 {
    assert!(c.contains(&i), "representative must lie in the cut set");
    assert!(hp.n < h.n, "shrinkage targets are strictly smaller patterns");
    let h_adj = adj_masks(h.n, h.edges);
    let hp_adj = adj_masks(hp.n, hp.edges);
    let cut_mask: u32 = c.iter().fold(0, |m, &v| m | (1 << v));

    // connected components of h minus the cut
    let mut comp_of = vec![usize::MAX; h.n];
    let mut ncomp = 0;
    for v in 0..h.n {
        if cut_mask & (1 << v) != 0 || comp_of[v] != usize::MAX {
            continue;
        }
        let mut stack = vec![v];
        comp_of[v] = ncomp;
        while let Some(x) = stack.pop() {
            for y in 0..h.n {
                if h_adj[x] & (1 << y) != 0
                    && cut_mask & (1 << y) == 0
                    && comp_of[y] == usize::MAX
                {
                    comp_of[y] = ncomp;
                    stack.push(y);
                }
            }
        }
        ncomp += 1;
    }
    // fragments: cut plus one component each, as vertex lists
    let fragments: Vec<Vec<u8>> = (0..ncomp)
        .map(|ci| {
            let mut vs: Vec<u8> = c.to_vec();
            vs.extend((0..h.n as u8).filter(|&v| comp_of[v as usize] == ci));
            vs.sort_unstable();
            vs
        })
        .collect();
    let frag_edges: Vec<Vec<(u8, u8)>> = fragments
        .iter()
        .map(|vs| {
            h.edges
                .iter()
                .copied()
                .filter(|&(a, b)| vs.contains(&a) && vs.contains(&b))
                .collect()
        })
        .collect();

    // enumerate cut maps tau with tau(i) = j, then fragment extensions
    let mut count = 0u64;
    let mut tau = vec![u8::MAX; h.n];
    enumerate_tau(h, hp, &hp_adj, c, i, j, 0, &mut tau, &mut |tau| {
        count += count_extensions(hp, &hp_adj, h, &fragments, &frag_edges, tau, cut_mask);
    });
    count
}

fn enumerate_tau(
    h: &PatternDef,
    hp: &PatternDef,
    hp_adj: &[u32],
    c: &[u8],
    i: u8,
    j: u8,
    pos: usize,
    tau: &mut Vec<u8>,
    f: &mut impl FnMut(&[u8]),
) {
    if pos == c.len() {
        // cut edges must map onto edges of hp
        let ok = h.edges.iter().all(|&(a, b)| {
            if c.contains(&a) && c.contains(&b) {
                hp_adj[tau[a as usize] as usize] & (1 << tau[b as usize]) != 0
            } else {
                true
            }
        });
        if ok {
            f(tau);
        }
        return;
    }
    let v = c[pos];
    let choices: Vec<u8> = if v == i {
        vec![j]
    } else {
        (0..hp.n as u8).collect()
    };
    for t in choices {
        if c[..pos].iter().any(|&w| tau[w as usize] == t) {
            continue;
        }
        tau[v as usize] = t;
        enumerate_tau(h, hp, hp_adj, c, i, j, pos + 1, tau, f);
        tau[v as usize] = u8::MAX;
    }
}

fn count_extensions(
    hp: &PatternDef,
    hp_adj: &[u32],
    _h: &PatternDef,
    fragments: &[Vec<u8>],
    frag_edges: &[Vec<(u8, u8)>],
    tau: &[u8],
    cut_mask: u32,
) -> u64 {
    // per fragment, all injective extensions of tau mapping fragment edges
    // onto hp edges; record each extension's covered-edge set as a bitmask
    let edge_bit = |a: u8, b: u8| -> u32 {
        let idx = hp
            .edges
            .iter()
            .position(|&(x, y)| (x.min(y), x.max(y)) == (a.min(b), a.max(b)))
            .expect("covered pair is an hp edge");
        1 << idx
    };
    let mut per_frag: Vec<Vec<u32>> = Vec::with_capacity(fragments.len());
    for (vs, es) in fragments.iter().zip(frag_edges) {
        let free: Vec<u8> = vs
            .iter()
            .copied()
            .filter(|&v| cut_mask & (1 << v) == 0)
            .collect();
        let mut covers = Vec::new();
        let mut assign = tau.to_vec();
        extend_fragment(hp, hp_adj, es, &free, 0, &mut assign, &mut |assign| {
            let mut mask = 0u32;
            for &(a, b) in es {
                let (x, y) = (assign[a as usize], assign[b as usize]);
                if hp_adj[x as usize] & (1 << y) == 0 {
                    return false;
                }
                mask |= edge_bit(x, y);
            }
            covers.push(mask);
            true
        });
        per_frag.push(covers);
    }
    // product over fragments, requiring full cover of hp's edges
    let full: u32 = (1 << hp.edges.len()) - 1;
    let mut total = 0u64;
    let mut stack = vec![(0usize, 0u32)];
    while let Some((fi, mask)) = stack.pop() {
        if fi == per_frag.len() {
            if mask == full {
                total += 1;
            }
            continue;
        }
        for &cm in &per_frag[fi] {
            stack.push((fi + 1, mask | cm));
        }
    }
    total
}

fn extend_fragment(
    hp: &PatternDef,
    hp_adj: &[u32],
    es: &[(u8, u8)],
    free: &[u8],
    pos: usize,
    assign: &mut Vec<u8>,
    f: &mut impl FnMut(&[u8]) -> bool,
) {
    if pos == free.len() {
        f(assign);
        return;
    }
    let v = free[pos];
    for t in 0..hp.n as u8 {
        if assign.iter().enumerate().any(|(w, &x)| x == t && w != v as usize) {
            continue;
        }
        assign[v as usize] = t;
        extend_fragment(hp, hp_adj, es, free, pos + 1, assign, f);
        assign[v as usize] = u8::MAX;
    }
    let _ = (hp, hp_adj, es);
}

// ---------------------------------------------------------------------------
// Random graphs
// ---------------------------------------------------------------------------

/// Erdos-Renyi sample, deterministic per seed. Vertex count is exactly `n`,
/// including isolated vertices.
pub fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    assert!((0.0..=1.0).contains(&p));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in (u + 1)..n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Uniform G(n, m) sample: m distinct edges, deterministic per seed.
pub fn random_gnm(n: usize, m: usize, seed: u64) -> Graph {
    assert!(m <= n * (n - 1) / 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut set = std::collections::HashSet::with_capacity(m * 2);
    let mut edges = Vec::with_capacity(m);
    while edges.len() < m {
        let u = rng.gen_range(0..n as u32);
        let v = rng.gen_range(0..n as u32);
        if u == v {
            continue;
        }
        let key = ((u.min(v) as u64) << 32) | u.max(v) as u64;
        if set.insert(key) {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn catalog_is_consistent() {
        let cat = catalog();
        assert_eq!(cat.orbits.len(), NUM_ORBITS);
        let mut per_size = [0usize; 6];
        for p in &cat.patterns {
            // orbit partition from Aut matches the pinned global ids
            for class in &p.vertex_orbits {
                let gid = p.def.orbit_of[class[0] as usize];
                assert!(
                    class.iter().all(|&v| p.def.orbit_of[v as usize] == gid),
                    "pattern {} orbit classes disagree with pinned ids",
                    p.def.id
                );
            }
            // two vertices with the same pinned id must be in one class
            for c1 in 0..p.vertex_orbits.len() {
                for c2 in c1 + 1..p.vertex_orbits.len() {
                    let g1 = p.def.orbit_of[p.vertex_orbits[c1][0] as usize];
                    let g2 = p.def.orbit_of[p.vertex_orbits[c2][0] as usize];
                    assert_ne!(g1, g2, "pattern {} merges distinct orbits", p.def.id);
                }
            }
            let total: usize = p.vertex_orbits.iter().map(|c| c.len()).sum();
            assert_eq!(total, p.def.n);
            per_size[p.def.n] += 1;
        }
        assert_eq!(per_size[2..6], [1, 2, 6, 21]);
        // representative is the smallest member
        for o in &cat.orbits {
            assert_eq!(o.representative, o.members[0]);
        }
    }

    #[test]
    fn automorphism_counts() {
        let cat = catalog();
        assert_eq!(cat.aut_size(29), 120); // K5
        assert_eq!(cat.aut_size(9), 2); // 5-vertex path
        assert_eq!(cat.patterns[9].vertex_orbits.len(), 3);
        assert_eq!(cat.patterns[10].vertex_orbits.len(), 4);
        assert_eq!(cat.aut_size(8), 24); // K4
        assert_eq!(cat.aut_size(15), 10); // 5-cycle
        assert_eq!(cat.aut_size(5), 8); // 4-cycle
        assert_eq!(cat.aut_size(27), 8); // wheel
    }

    #[test]
    fn edge_orbit_families_cover_all_twelve() {
        let cat = catalog();
        let mut seen = [false; NUM_EDGE_ORBITS];
        for p in &cat.patterns {
            if p.def.n > 4 {
                continue;
            }
            for fam in p.edge_families.iter().flatten() {
                seen[fam.family] = true;
            }
            // every edge-orbit class of a <=4-vertex pattern except the bare
            // edge maps to exactly one family
            if p.def.id >= 1 && p.def.id <= 8 {
                for class in &p.edge_orbits {
                    let fams: Vec<usize> = class
                        .iter()
                        .map(|&e| p.edge_families[e].unwrap().family)
                        .collect();
                    assert!(fams.windows(2).all(|w| w[0] == w[1]));
                }
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn orbit_sizes_sum_to_pattern_sizes() {
        let cat = catalog();
        for (gid, o) in cat.orbits.iter().enumerate() {
            assert!(!o.members.is_empty(), "orbit {gid} empty");
        }
        // spot checks
        assert_eq!(cat.orbit_size(34), 5);
        assert_eq!(cat.orbit_size(72), 5);
        assert_eq!(cat.orbit_size(17), 1);
        assert_eq!(cat.orbit_size(26), 2);
    }

    #[test]
    fn oracle_on_triangle() {
        let g = fixtures::complete(3);
        let o = brute_force_voc(&g);
        for v in 0..3 {
            assert_eq!(o.noninduced[0][v], 2);
            assert_eq!(o.noninduced[1][v], 2);
            assert_eq!(o.noninduced[2][v], 1);
            assert_eq!(o.noninduced[3][v], 1);
            assert_eq!(o.induced[0][v], 2);
            assert_eq!(o.induced[1][v], 0);
            assert_eq!(o.induced[2][v], 0);
            assert_eq!(o.induced[3][v], 1);
            for orb in 4..NUM_ORBITS {
                assert_eq!(o.noninduced[orb][v], 0);
            }
        }
    }

    #[test]
    fn oracle_on_c5() {
        let g = fixtures::cycle(5);
        let o = brute_force_voc(&g);
        for v in 0..5 {
            assert_eq!(o.noninduced[34][v], 1);
            assert_eq!(o.induced[34][v], 1);
            assert_eq!(o.induced[15][v], 0);
            assert_eq!(o.induced[17][v], 0);
            // one 4-path through each vertex as an end on each side
            assert_eq!(o.noninduced[15][v], 2);
        }
    }

    #[test]
    fn oracle_internal_consistency_random() {
        let cat = catalog();
        for seed in 0..6 {
            let g = random_graph(9, 0.4, seed);
            let o = brute_force_voc(&g);
            // within each pattern, sum_v DM(v, orbit)/sz(orbit) is the copy
            // count of the pattern, so it is equal across the orbits
            for p in &cat.patterns {
                let mut copies: Option<u64> = None;
                for class in &p.vertex_orbits {
                    let gid = p.def.orbit_of[class[0] as usize] as usize;
                    let total: u64 = (0..g.n()).map(|v| o.noninduced[gid][v]).sum();
                    assert_eq!(total % class.len() as u64, 0);
                    let c = total / class.len() as u64;
                    if let Some(prev) = copies {
                        assert_eq!(prev, c, "pattern {} orbit {gid}", p.def.id);
                    }
                    copies = Some(c);
                }
            }
            // induced counts never exceed non-induced counts
            for orb in 0..NUM_ORBITS {
                for v in 0..g.n() {
                    assert!(o.induced[orb][v] <= o.noninduced[orb][v]);
                }
            }
        }
    }

    #[test]
    fn numsh_worked_coefficients() {
        // bull cut at its triangle, shrinking into the diamond
        let bull = &PATTERNS[12];
        let diamond = &PATTERNS[7];
        let rep26 = catalog().orbits[26].representative;
        let rep13 = catalog().orbits[13].representative;
        assert_eq!(compute_numsh(bull, &[0, 1, 2], rep26, diamond, rep13), 2);

        // banner cut at the pendant-side edge, shrinking into the diamond
        let banner = &PATTERNS[16];
        let rep37 = catalog().orbits[37].representative;
        let rep12 = catalog().orbits[12].representative;
        assert_eq!(
            compute_numsh(banner, &[rep37, 0], rep37, diamond, rep12),
            2
        );
    }

    #[test]
    fn numsh_no_targets() {
        // path cut at one end: single fragment, nothing can shrink
        let p4 = &PATTERNS[3];
        let p3 = &PATTERNS[1];
        for j in 0..3 {
            assert_eq!(compute_numsh(p4, &[0], 0, p3, j), 0);
        }
    }

    #[test]
    fn random_graph_deterministic() {
        let a = random_graph(10, 0.3, 42);
        let b = random_graph(10, 0.3, 42);
        assert_eq!(a.canonical_edges(), b.canonical_edges());
        assert_eq!(random_graph(5, 0.0, 7).m(), 0);
        assert_eq!(random_graph(5, 1.0, 7).m(), 10);
    }

    #[test]
    fn catalog_text_round_trip() {
        let cat = catalog();
        let text = cat.to_text();
        let parsed = parse_catalog_text(&text).unwrap();
        assert_eq!(parsed.len(), 30);
        for (p, info) in parsed.iter().zip(&cat.patterns) {
            assert_eq!(p.0, info.def.id);
            assert_eq!(p.1, info.def.n);
            assert_eq!(p.2.as_slice(), info.def.edges);
            let total: usize = p.3.iter().map(|(_, m)| m.len()).sum();
            assert_eq!(total, info.def.n);
        }
    }
}
