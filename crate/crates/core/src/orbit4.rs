//! Vertex orbits 0..14 and the twelve 4-vertex edge-orbit families, computed
//! from degrees and the local triangle/4-cycle/4-clique counts.
//!
//! All values are distinct-match counts. Asymmetric edge orbits are stored
//! per ordered endpoint: slot 2e is the canonical (min, max) reading with the
//! min endpoint in the higher-numbered vertex orbit of the family, slot
//! 2e + 1 the reverse.

use crate::enumerate::LocalCounts;
use crate::graph::Graph;
use crate::{choose2, choose3};

/// Columns 0..=14 of the orbit table, stored row-major so the neighbor
/// sweeps of the 5-vertex passes touch one cache line per neighbor. Signed
/// for uniformity with the 5-vertex accumulation.
pub struct Voc4 {
    pub rows: Vec<[i64; 15]>,
}

impl Voc4 {
    #[inline]
    pub fn get(&self, orbit: usize, v: usize) -> i64 {
        self.rows[v][orbit]
    }

    pub fn col_vec(&self, orbit: usize) -> Vec<i64> {
        self.rows.iter().map(|r| r[orbit]).collect()
    }
}

pub fn count_voc4(g: &Graph, lc: &LocalCounts) -> Voc4 {
    let n = g.n();
    let mut rows = vec![[0i64; 15]; n];
    for u in 0..n as u32 {
        let du = g.degree(u) as i64;
        let ui = u as usize;
        let mut s1 = 0i64;
        let mut s6 = 0i64;
        let mut s9 = 0i64;
        let mut s10 = 0i64;
        let mut s13 = 0i64;
        for (v, e) in g.neighbor_edges(u) {
            let dv = g.degree(v) as i64;
            let te = lc.t_e[e as usize] as i64;
            s1 += dv - 1;
            s6 += choose2(dv - 1);
            s9 += lc.t_v[v as usize] as i64 - te;
            s10 += te * (dv - 2);
            s13 += choose2(te);
        }
        let r = &mut rows[ui];
        r[0] = du;
        r[1] = s1;
        r[2] = choose2(du);
        r[3] = lc.t_v[ui] as i64;
        r[6] = s6;
        r[7] = choose3(du);
        r[8] = lc.c4_v[ui] as i64;
        r[9] = s9;
        r[10] = s10;
        r[11] = lc.t_v[ui] as i64 * (du - 2);
        r[13] = s13;
        r[14] = lc.k4_v[ui] as i64;
    }
    // second pass: orbits needing neighbor values of column 1
    for u in 0..n as u32 {
        let ui = u as usize;
        let du = g.degree(u) as i64;
        let s: i64 = g.neighbors(u).iter().map(|&v| rows[v as usize][1]).sum();
        rows[ui][4] = s - 2 * rows[ui][2] - 2 * rows[ui][3];
        rows[ui][5] = rows[ui][1] * (du - 1) - 2 * rows[ui][3];
    }
    // orbit 12 from per-edge triangle lists: the opposite edge's other triangles
    for t in &lc.triangles {
        let [a, b, c] = t.v;
        let [eab, eac, ebc] = t.e;
        rows[a as usize][12] += lc.t_e[ebc as usize] as i64 - 1;
        rows[b as usize][12] += lc.t_e[eac as usize] as i64 - 1;
        rows[c as usize][12] += lc.t_e[eab as usize] as i64 - 1;
    }
    Voc4 { rows }
}

/// Indexes of the symmetric families within [`EdgeOrbits::sym`].
const SYM: [usize; 6] = [1, 3, 5, 7, 10, 11];
/// Indexes of the asymmetric families within [`EdgeOrbits::asym`].
const ASYM: [usize; 6] = [0, 2, 4, 6, 8, 9];

pub struct EdgeOrbits {
    m: usize,
    /// E1, E3, E5, E7, E10, E11; length m each.
    sym: [Vec<i64>; 6],
    /// E0, E2, E4, E6, E8, E9; length 2m each.
    asym: [Vec<i64>; 6],
}

impl EdgeOrbits {
    pub fn m(&self) -> usize {
        self.m
    }

    /// Symmetric family value on edge `e`; `family` must be one of
    /// E1, E3, E5, E7, E10, E11.
    #[inline]
    pub fn sym(&self, family: usize, e: u32) -> i64 {
        let idx = SYM.iter().position(|&f| f == family).expect("symmetric family");
        self.sym[idx][e as usize]
    }

    /// Asymmetric family value on edge `e` read with the canonical min
    /// endpoint in the first (higher-orbit) role iff `first_is_min`.
    #[inline]
    pub fn asym(&self, family: usize, e: u32, first_is_min: bool) -> i64 {
        let idx = ASYM.iter().position(|&f| f == family).expect("asymmetric family");
        self.asym[idx][2 * e as usize + usize::from(!first_is_min)]
    }

    #[inline]
    pub(crate) fn sym_ix(&self, idx: usize, e: u32) -> i64 {
        self.sym[idx][e as usize]
    }

    #[inline]
    pub(crate) fn asym_ix(&self, idx: usize, e: u32, first_is_min: bool) -> i64 {
        self.asym[idx][2 * e as usize + usize::from(!first_is_min)]
    }
}

/// Positions of the families inside the internal arrays, for callers that
/// index repeatedly.
pub mod family {
    pub const E1: usize = 0;
    pub const E3: usize = 1;
    pub const E5: usize = 2;
    pub const E7: usize = 3;
    pub const E10: usize = 4;
    pub const E11: usize = 5;
    pub const E0: usize = 0;
    pub const E2: usize = 1;
    pub const E4: usize = 2;
    pub const E6: usize = 3;
    pub const E8: usize = 4;
    pub const E9: usize = 5;
}

pub fn count_edge_orbits4(g: &Graph, lc: &LocalCounts, v4: &Voc4) -> EdgeOrbits {
    let m = g.m();
    let mut sym: [Vec<i64>; 6] = std::array::from_fn(|_| vec![0i64; m]);
    let mut asym: [Vec<i64>; 6] = std::array::from_fn(|_| vec![0i64; 2 * m]);
    for (ei, &(u, v)) in g.canonical_edges().iter().enumerate() {
        let e = ei as u32;
        let ru = &v4.rows[u as usize];
        let rv = &v4.rows[v as usize];
        let (du, dv) = (ru[0], rv[0]);
        let te = lc.t_e[ei] as i64;
        sym[family::E1][ei] = te;
        sym[family::E3][ei] = (du - 1) * (dv - 1) - te;
        sym[family::E5][ei] = lc.c4_e[ei] as i64;
        sym[family::E10][ei] = choose2(te);
        sym[family::E11][ei] = lc.k4_e[ei] as i64;
        if te > 0 {
            let mut e7 = 0i64;
            let mut e9_u = 0i64; // u on the chord
            let mut e9_v = 0i64;
            for entry in lc.edge_triangles(e) {
                e7 += v4.rows[entry.third as usize][0] - 2;
                e9_u += lc.t_e[entry.e_from_min as usize] as i64 - 1;
                e9_v += lc.t_e[entry.e_from_max as usize] as i64 - 1;
            }
            sym[family::E7][ei] = e7;
            asym[family::E9][2 * ei] = e9_u;
            asym[family::E9][2 * ei + 1] = e9_v;
        }
        // slot 2e reads the canonical min endpoint (u) in the first role
        asym[family::E0][2 * ei] = du - 1;
        asym[family::E0][2 * ei + 1] = dv - 1;
        asym[family::E2][2 * ei] = ru[1] - (dv - 1) - te;
        asym[family::E2][2 * ei + 1] = rv[1] - (du - 1) - te;
        asym[family::E4][2 * ei] = choose2(du - 1);
        asym[family::E4][2 * ei + 1] = choose2(dv - 1);
        asym[family::E6][2 * ei] = ru[3] - te;
        asym[family::E6][2 * ei + 1] = rv[3] - te;
        asym[family::E8][2 * ei] = te * (du - 2);
        asym[family::E8][2 * ei + 1] = te * (dv - 2);
    }
    EdgeOrbits { m, sym, asym }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::local_counts;
    use crate::fixtures::*;
    use crate::graph::{build_oriented, Graph};
    use crate::patterns::{brute_force_edge_orbits, brute_force_voc, random_graph};

    fn voc4_of(g: &Graph) -> (crate::enumerate::LocalCounts, Voc4) {
        let og = build_oriented(g);
        let lc = local_counts(g, &og);
        let v4 = count_voc4(g, &lc);
        (lc, v4)
    }

    #[test]
    fn k3_row() {
        let g = complete(3);
        let (_, v4) = voc4_of(&g);
        for v in 0..3 {
            let row: Vec<i64> = v4.rows[v].to_vec();
            assert_eq!(row, [2, 2, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0]);
        }
    }

    #[test]
    fn k4_vertex() {
        let g = complete(4);
        let (_, v4) = voc4_of(&g);
        for v in 0..4 {
            assert_eq!(v4.rows[v][14], 1);
            assert_eq!(v4.rows[v][8], 3);
            assert_eq!(v4.rows[v][3], 3);
        }
    }

    #[test]
    fn isolated_vertex_zeros() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (0, 2)]);
        let (_, v4) = voc4_of(&g);
        assert_eq!(v4.rows[3], [0i64; 15]);
    }

    #[test]
    fn voc4_matches_oracle() {
        for seed in 0..30 {
            let n = 6 + (seed as usize % 5);
            let p = 0.2 + 0.1 * (seed % 6) as f64;
            let g = random_graph(n, p, 500 + seed);
            let (_, v4) = voc4_of(&g);
            let oracle = brute_force_voc(&g);
            for c in 0..15 {
                for v in 0..n {
                    assert_eq!(
                        v4.rows[v][c] as u64, oracle.noninduced[c][v],
                        "orbit {c} vertex {v} seed {seed} edges {:?}",
                        g.canonical_edges()
                    );
                }
            }
        }
    }

    #[test]
    fn edge_orbits_k3() {
        let g = complete(3);
        let (lc, v4) = voc4_of(&g);
        let eo = count_edge_orbits4(&g, &lc, &v4);
        for e in 0..3 {
            assert_eq!(eo.sym(1, e), 1); // E1 = one triangle
            assert_eq!(eo.asym(0, e, true), 1); // E0 center side
            assert_eq!(eo.asym(0, e, false), 1);
            assert_eq!(eo.sym(7, e), 0); // E7: d(x) - 2 = 0
        }
    }

    #[test]
    fn edge_orbits_k4() {
        let g = complete(4);
        let (lc, v4) = voc4_of(&g);
        let eo = count_edge_orbits4(&g, &lc, &v4);
        for e in 0..6 {
            assert_eq!(eo.sym(11, e), 1);
            assert_eq!(eo.sym(10, e), 1);
        }
    }

    #[test]
    fn edge_orbits_match_oracle() {
        for seed in 0..30 {
            let n = 6 + (seed as usize % 5);
            let p = 0.2 + 0.1 * (seed % 6) as f64;
            let g = random_graph(n, p, 900 + seed);
            let (lc, v4) = voc4_of(&g);
            let eo = count_edge_orbits4(&g, &lc, &v4);
            let oracle = brute_force_edge_orbits(&g);
            for e in 0..g.m() as u32 {
                for (idx, &f) in SYM.iter().enumerate() {
                    assert_eq!(
                        eo.sym_ix(idx, e) as u64,
                        oracle.sym[f][e as usize],
                        "family E{f} edge {e} seed {seed} edges {:?}",
                        g.canonical_edges()
                    );
                }
                for (idx, &f) in ASYM.iter().enumerate() {
                    for first_is_min in [true, false] {
                        let slot = 2 * e as usize + usize::from(!first_is_min);
                        assert_eq!(
                            eo.asym_ix(idx, e, first_is_min) as u64,
                            oracle.asym[f][slot],
                            "family E{f} edge {e} slot {slot} seed {seed} edges {:?}",
                            g.canonical_edges()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn star_asymmetric_e0() {
        // K1,3: edge (leaf, hub): from the hub side E0 = 2, from the leaf side 0
        let g = star(3);
        let (lc, v4) = voc4_of(&g);
        let eo = count_edge_orbits4(&g, &lc, &v4);
        // canonical edges are (0, leaf) with 0 the hub = min endpoint
        for e in 0..3 {
            assert_eq!(eo.asym(0, e, true), 2); // hub as center
            assert_eq!(eo.asym(0, e, false), 0); // leaf as center
        }
    }

    #[test]
    fn edge_to_vertex_consistency() {
        for seed in 0..8 {
            let g = random_graph(10, 0.45, seed);
            let (lc, v4) = voc4_of(&g);
            let eo = count_edge_orbits4(&g, &lc, &v4);
            for u in 0..g.n() as u32 {
                let sum: i64 = g.neighbor_edges(u).map(|(_, e)| eo.sym(1, e)).sum();
                assert_eq!(sum, 2 * lc.t_v[u as usize] as i64);
            }
        }
    }
}
