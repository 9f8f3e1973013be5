//! Enumeration of the small structures every orbit identity consumes:
//! triangles with per-edge lists, 4-cycles, 4-cliques (per vertex, edge and
//! triangle), wedges, diamonds and directed 3-paths, plus the global
//! fundamental-pattern totals.
//!
//! Triangles and 4-cliques are found once each on the degree-ordered DAG by
//! out-neighborhood intersection and scattered back to the undirected
//! structures. 4-cycles use per-source wedge aggregation with a reusable
//! scratch accumulator, never materializing all-pairs counts.

use crate::graph::{Graph, OrientedGraph};
use crate::choose2;
use rayon::prelude::*;
use std::sync::atomic::{AtomicI64, AtomicU64, Ordering};

/// One triangle in DAG orientation: `v = [source, middle, sink]` by rank,
/// `e = [id(src,mid), id(src,snk), id(mid,snk)]`.
#[derive(Debug, Clone, Copy)]
pub struct Triangle {
    pub v: [u32; 3],
    pub e: [u32; 3],
}

/// Per-edge triangle list entry: the third vertex plus the triangle id and
/// the ids of the two companion edges. For a canonical edge (a, b) with
/// a < b, `e_from_min` is the edge {a, third} and `e_from_max` is {b, third}.
#[derive(Debug, Clone, Copy)]
pub struct TriEntry {
    pub third: u32,
    pub tri: u32,
    pub e_from_min: u32,
    pub e_from_max: u32,
}

/// Local counts of triangles, 4-cycles and 4-cliques at every granularity the
/// orbit identities need.
pub struct LocalCounts {
    pub t_v: Vec<u64>,
    pub t_e: Vec<u32>,
    tri_off: Vec<usize>,
    tri_entries: Vec<TriEntry>,
    pub triangles: Vec<Triangle>,
    /// Directed-role triangle counts per vertex (source / middle / sink).
    pub src_t: Vec<u64>,
    pub mid_t: Vec<u64>,
    pub snk_t: Vec<u64>,
    pub c4_v: Vec<u64>,
    pub c4_e: Vec<u64>,
    pub k4_v: Vec<u64>,
    pub k4_e: Vec<u64>,
    pub k4_t: Vec<u64>,
}

impl LocalCounts {
    /// Third vertices (with companions) of all triangles on edge `e`.
    #[inline]
    pub fn edge_triangles(&self, e: u32) -> &[TriEntry] {
        &self.tri_entries[self.tri_off[e as usize]..self.tri_off[e as usize + 1]]
    }

    /// Triangle id of (edge, third) if that triangle exists.
    pub fn tri_id(&self, e: u32, third: u32) -> Option<u32> {
        let s = self.edge_triangles(e);
        s.binary_search_by_key(&third, |t| t.third)
            .ok()
            .map(|i| s[i].tri)
    }

    pub fn triangle_total(&self) -> u64 {
        self.triangles.len() as u64
    }
}

/// Builds every triangle-derived structure. Each triangle is visited exactly
/// once as a directed triangle of the DAG.
pub fn enumerate_triangles(g: &Graph, og: &OrientedGraph) -> LocalCounts {
    let n = g.n();
    let m = g.m();
    let mut t_v = vec![0u64; n];
    let mut t_e = vec![0u32; m];
    let mut src_t = vec![0u64; n];
    let mut mid_t = vec![0u64; n];
    let mut snk_t = vec![0u64; n];
    let mut triangles = Vec::new();
    let mut buf: Vec<(u32, u32, u32)> = Vec::new();
    for a in 0..n as u32 {
        for (b, eab) in og.out_edges(a) {
            intersect_out(og, a, b, &mut buf);
            for &(c, eac, ebc) in &buf {
                t_v[a as usize] += 1;
                t_v[b as usize] += 1;
                t_v[c as usize] += 1;
                t_e[eab as usize] += 1;
                t_e[eac as usize] += 1;
                t_e[ebc as usize] += 1;
                src_t[a as usize] += 1;
                mid_t[b as usize] += 1;
                snk_t[c as usize] += 1;
                triangles.push(Triangle {
                    v: [a, b, c],
                    e: [eab, eac, ebc],
                });
            }
        }
    }
    // scatter triangles into per-edge lists
    let mut tri_off = vec![0usize; m + 1];
    for e in 0..m {
        tri_off[e + 1] = tri_off[e] + t_e[e] as usize;
    }
    let mut tri_entries = vec![
        TriEntry {
            third: 0,
            tri: 0,
            e_from_min: 0,
            e_from_max: 0
        };
        tri_off[m]
    ];
    let mut cursor = tri_off.clone();
    let edges = g.canonical_edges();
    for (tid, t) in triangles.iter().enumerate() {
        let [a, b, c] = t.v;
        let [eab, eac, ebc] = t.e;
        let mut place = |e: u32, third: u32, e1: u32, e2: u32, x: u32| {
            // e1 = companion through the first listed endpoint (x), e2 the other
            let (lo_e, hi_e) = if x == edges[e as usize].0 { (e1, e2) } else { (e2, e1) };
            tri_entries[cursor[e as usize]] = TriEntry {
                third,
                tri: tid as u32,
                e_from_min: lo_e,
                e_from_max: hi_e,
            };
            cursor[e as usize] += 1;
        };
        place(eab, c, eac, ebc, a);
        place(eac, b, eab, ebc, a);
        place(ebc, a, eab, eac, b);
    }
    for e in 0..m {
        tri_entries[tri_off[e]..tri_off[e + 1]].sort_unstable_by_key(|t| t.third);
    }
    LocalCounts {
        t_v,
        t_e,
        tri_off,
        tri_entries,
        triangles,
        src_t,
        mid_t,
        snk_t,
        c4_v: Vec::new(),
        c4_e: Vec::new(),
        k4_v: Vec::new(),
        k4_e: Vec::new(),
        k4_t: Vec::new(),
    }
}

/// Intersects the out-neighborhoods of adjacent `a` and `b` (sorted by rank),
/// yielding (vertex, edge-from-a, edge-from-b).
fn intersect_out(og: &OrientedGraph, a: u32, b: u32, buf: &mut Vec<(u32, u32, u32)>) {
    buf.clear();
    let mut ia = og.out_edges(a).peekable();
    let mut ib = og.out_edges(b).peekable();
    while let (Some(&(x, ea)), Some(&(y, eb))) = (ia.peek(), ib.peek()) {
        let rx = og.rank(x);
        let ry = og.rank(y);
        if rx == ry {
            buf.push((x, ea, eb));
            ia.next();
            ib.next();
        } else if rx < ry {
            ia.next();
        } else {
            ib.next();
        }
    }
}

/// Per-source scratch: dense values with a touched list for O(support) reset.
pub struct SparseCounter {
    val: Vec<i64>,
    touched: Vec<u32>,
}

impl SparseCounter {
    pub fn new(n: usize) -> Self {
        SparseCounter {
            val: vec![0; n],
            touched: Vec::new(),
        }
    }

    #[inline]
    pub fn add(&mut self, i: u32, amt: i64) {
        if amt == 0 {
            return;
        }
        if self.val[i as usize] == 0 {
            self.touched.push(i);
        }
        self.val[i as usize] += amt;
    }

    #[inline]
    pub fn get(&self, i: u32) -> i64 {
        self.val[i as usize]
    }

    #[inline]
    pub fn support(&self) -> &[u32] {
        &self.touched
    }

    pub fn clear(&mut self) {
        for &i in &self.touched {
            self.val[i as usize] = 0;
        }
        self.touched.clear();
    }
}

/// 4-cycle counts per vertex and per edge (Chiba-Nishizeki style wedge
/// aggregation, one source vertex at a time).
pub fn count_four_cycles(g: &Graph) -> (Vec<u64>, Vec<u64>) {
    let n = g.n();
    let c4_v: Vec<AtomicU64> = (0..n).map(|_| AtomicU64::new(0)).collect();
    let c4_e: Vec<AtomicU64> = (0..g.m()).map(|_| AtomicU64::new(0)).collect();
    (0..n as u32)
        .into_par_iter()
        .fold(
            || SparseCounter::new(n),
            |mut w, u| {
                for &v in g.neighbors(u) {
                    for &x in g.neighbors(v) {
                        if x != u {
                            w.add(x, 1);
                        }
                    }
                }
                let mut cv = 0u64;
                for &x in w.support() {
                    cv += choose2(w.get(x)) as u64;
                }
                c4_v[u as usize].fetch_add(cv, Ordering::Relaxed);
                for (v, e) in g.neighbor_edges(u) {
                    let mut ce = 0u64;
                    for &x in g.neighbors(v) {
                        if x != u {
                            ce += (w.get(x) - 1) as u64;
                        }
                    }
                    c4_e[e as usize].fetch_add(ce, Ordering::Relaxed);
                }
                w.clear();
                w
            },
        )
        .for_each(drop);
    let c4_v = c4_v.into_iter().map(|a| a.into_inner()).collect();
    let c4_e = c4_e
        .into_iter()
        .map(|a| {
            let x = a.into_inner();
            debug_assert_eq!(x % 2, 0);
            x / 2
        })
        .collect();
    (c4_v, c4_e)
}

/// 4-clique counts per vertex, per edge and per triangle, plus the directed
/// bipyramid total that bounds this pass.
pub fn count_four_cliques(
    g: &Graph,
    og: &OrientedGraph,
    lc: &LocalCounts,
) -> (Vec<u64>, Vec<u64>, Vec<u64>, u64) {
    let n = g.n();
    let k4_v: Vec<AtomicU64> = (0..n).map(|_| AtomicU64::new(0)).collect();
    let k4_e: Vec<AtomicU64> = (0..g.m()).map(|_| AtomicU64::new(0)).collect();
    let k4_t: Vec<AtomicU64> = (0..lc.triangles.len()).map(|_| AtomicU64::new(0)).collect();
    let dbp: u64 = lc
        .triangles
        .par_iter()
        .enumerate()
        .fold(
            || (Vec::new(), 0u64),
            |(mut buf, mut dbp), (tid, t)| {
                let [a, b, c] = t.v;
                let [eab, eac, ebc] = t.e;
                intersect_out(og, a, b, &mut buf);
                let mut hits = 0i64;
                for &(d, ead, ebd) in &buf {
                    // need d in the out-neighborhood of c as well
                    let Some(ecd) = out_edge_id(og, c, d) else { continue };
                    hits += 1;
                    for x in [a, b, c, d] {
                        k4_v[x as usize].fetch_add(1, Ordering::Relaxed);
                    }
                    for e in [eab, eac, ebc, ead, ebd, ecd] {
                        k4_e[e as usize].fetch_add(1, Ordering::Relaxed);
                    }
                    k4_t[tid].fetch_add(1, Ordering::Relaxed);
                    for (e, third) in [(eab, d), (eac, d), (ebc, d)] {
                        let other = lc.tri_id(e, third).expect("clique face is a triangle");
                        k4_t[other as usize].fetch_add(1, Ordering::Relaxed);
                    }
                }
                dbp += choose2(hits) as u64;
                (buf, dbp)
            },
        )
        .map(|(_, dbp)| dbp)
        .sum();
    (
        k4_v.into_iter().map(|a| a.into_inner()).collect(),
        k4_e.into_iter().map(|a| a.into_inner()).collect(),
        k4_t.into_iter().map(|a| a.into_inner()).collect(),
        dbp,
    )
}

/// Edge id of u -> v in the oriented graph, by binary search on rank.
fn out_edge_id(og: &OrientedGraph, u: u32, v: u32) -> Option<u32> {
    let outs = og.out(u);
    let rv = og.rank(v);
    let idx = outs.binary_search_by_key(&rv, |&w| og.rank(w)).ok()?;
    Some(og.out_eids(u)[idx])
}

/// Completes [`LocalCounts`] with the 4-cycle and 4-clique passes.
pub fn local_counts(g: &Graph, og: &OrientedGraph) -> LocalCounts {
    let mut lc = enumerate_triangles(g, og);
    let (c4_v, c4_e) = count_four_cycles(g);
    let (k4_v, k4_e, k4_t, _) = count_four_cliques(g, og, &lc);
    lc.c4_v = c4_v;
    lc.c4_e = c4_e;
    lc.k4_v = k4_v;
    lc.k4_e = k4_e;
    lc.k4_t = k4_t;
    lc
}

/// Visits each unordered wedge exactly once as (center, end1, end2).
pub fn for_each_wedge(g: &Graph, mut visitor: impl FnMut(u32, u32, u32)) {
    for v in 0..g.n() as u32 {
        let nbrs = g.neighbors(v);
        for i in 0..nbrs.len() {
            for j in i + 1..nbrs.len() {
                visitor(v, nbrs[i], nbrs[j]);
            }
        }
    }
}

/// Visits each diamond once as (chord1, chord2, off1, off2): the chord edge
/// plus an unordered pair of its triangle thirds.
pub fn for_each_diamond(g: &Graph, lc: &LocalCounts, mut visitor: impl FnMut(u32, u32, u32, u32)) {
    for (e, &(a, b)) in g.canonical_edges().iter().enumerate() {
        let thirds = lc.edge_triangles(e as u32);
        for i in 0..thirds.len() {
            for j in i + 1..thirds.len() {
                visitor(a, b, thirds[i].third, thirds[j].third);
            }
        }
    }
}

/// Visits every directed path i -> j -> k -> l of the DAG exactly once.
pub fn for_each_directed_three_path(og: &OrientedGraph, mut visitor: impl FnMut(u32, u32, u32, u32)) {
    for i in 0..og.n() as u32 {
        for &j in og.out(i) {
            for &k in og.out(j) {
                for &l in og.out(k) {
                    visitor(i, j, k, l);
                }
            }
        }
    }
}

/// Exact totals of the fundamental patterns: wedges, diamonds, directed
/// 3-paths, directed bipyramids.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FundamentalCounts {
    pub wedges: u64,
    pub diamonds: u64,
    pub dir_three_paths: u64,
    pub dir_bipyramids: u64,
}

pub fn global_fundamental_counts(g: &Graph, og: &OrientedGraph) -> FundamentalCounts {
    let wedges: u64 = (0..g.n() as u32)
        .map(|v| choose2(g.degree(v) as i64) as u64)
        .sum();
    // lean triangle pass for per-edge counts
    let mut t_e = vec![0u32; g.m()];
    let mut buf = Vec::new();
    let mut dir_bipyramids = 0u64;
    for a in 0..g.n() as u32 {
        for (b, eab) in og.out_edges(a) {
            intersect_out(og, a, b, &mut buf);
            for &(c, eac, ebc) in &buf {
                t_e[eab as usize] += 1;
                t_e[eac as usize] += 1;
                t_e[ebc as usize] += 1;
                // common out-extensions of the directed triangle
                let mut hits = 0i64;
                for &(d, _, _) in &buf {
                    if og.rank(d) > og.rank(c) && out_edge_id(og, c, d).is_some() {
                        hits += 1;
                    }
                }
                dir_bipyramids += choose2(hits) as u64;
            }
        }
    }
    let diamonds: u64 = t_e.iter().map(|&t| choose2(t as i64) as u64).sum();
    let mut dir_three_paths = 0u64;
    for j in 0..g.n() as u32 {
        let indeg = (g.degree(j) - og.out_degree(j)) as u64;
        for &k in og.out(j) {
            dir_three_paths += indeg * og.out_degree(k) as u64;
        }
    }
    FundamentalCounts {
        wedges,
        diamonds,
        dir_three_paths,
        dir_bipyramids,
    }
}

/// Shared atomic column helpers for the orbit passes.
pub(crate) fn atomic_col(n: usize) -> Vec<AtomicI64> {
    (0..n).map(|_| AtomicI64::new(0)).collect()
}

pub(crate) fn unwrap_col(col: Vec<AtomicI64>) -> Vec<i64> {
    col.into_iter().map(|a| a.into_inner()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::*;
    use crate::graph::build_oriented;
    use crate::patterns::random_graph;

    fn setup(g: &Graph) -> (OrientedGraph, LocalCounts) {
        let og = build_oriented(g);
        let lc = local_counts(g, &og);
        (og, lc)
    }

    #[test]
    fn triangles_k3_k4() {
        let g = complete(3);
        let (_, lc) = setup(&g);
        assert_eq!(lc.triangle_total(), 1);
        assert!(lc.t_v.iter().all(|&t| t == 1));
        assert!(lc.t_e.iter().all(|&t| t == 1));

        let g = complete(4);
        let (_, lc) = setup(&g);
        assert_eq!(lc.triangle_total(), 4);
        assert!(lc.t_v.iter().all(|&t| t == 3));
        assert!(lc.t_e.iter().all(|&t| t == 2));
        assert!(lc.k4_v.iter().all(|&k| k == 1));
        assert!(lc.k4_e.iter().all(|&k| k == 1));
        assert!(lc.k4_t.iter().all(|&k| k == 1));
    }

    #[test]
    fn triangle_lists_match_counts() {
        for seed in 0..5 {
            let g = random_graph(12, 0.5, seed);
            let (_, lc) = setup(&g);
            for e in 0..g.m() as u32 {
                assert_eq!(lc.edge_triangles(e).len(), lc.t_e[e as usize] as usize);
            }
            let total: u64 = lc.t_v.iter().sum();
            assert_eq!(total, 3 * lc.triangle_total());
            let total_e: u64 = lc.t_e.iter().map(|&t| t as u64).sum();
            assert_eq!(total_e, 3 * lc.triangle_total());
        }
    }

    #[test]
    fn brute_force_triangle_totals() {
        for seed in 0..3 {
            let g = random_graph(40, 0.2, seed + 100);
            let og = build_oriented(&g);
            let lc = enumerate_triangles(&g, &og);
            let mut brute = 0u64;
            for u in 0..40u32 {
                for v in u + 1..40 {
                    for w in v + 1..40 {
                        if g.has_edge(u, v) && g.has_edge(u, w) && g.has_edge(v, w) {
                            brute += 1;
                        }
                    }
                }
            }
            assert_eq!(lc.triangle_total(), brute);
        }
    }

    #[test]
    fn four_cycles_named() {
        let g = cycle(4);
        let (_, lc) = setup(&g);
        assert!(lc.c4_v.iter().all(|&c| c == 1));
        assert!(lc.c4_e.iter().all(|&c| c == 1));

        let g = complete(4);
        let (_, lc) = setup(&g);
        assert!(lc.c4_v.iter().all(|&c| c == 3));

        let g = complete(3);
        let (_, lc) = setup(&g);
        assert!(lc.c4_v.iter().all(|&c| c == 0));
    }

    #[test]
    fn four_cliques_k5() {
        let g = complete(5);
        let (_, lc) = setup(&g);
        assert!(lc.k4_v.iter().all(|&k| k == 4));
        assert!(lc.k4_e.iter().all(|&k| k == 3));
        assert!(lc.k4_t.iter().all(|&k| k == 2));

        let g = cycle(5);
        let (_, lc) = setup(&g);
        assert!(lc.k4_v.iter().all(|&k| k == 0));
    }

    #[test]
    fn wedge_visits_match_degree_sum() {
        for seed in 0..4 {
            let g = random_graph(11, 0.4, seed);
            let og = build_oriented(&g);
            let mut count = 0u64;
            for_each_wedge(&g, |_, _, _| count += 1);
            assert_eq!(count, global_fundamental_counts(&g, &og).wedges);
        }
    }

    #[test]
    fn diamond_visits_vs_brute_force() {
        let g = complete(4);
        let (_, lc) = setup(&g);
        let mut count = 0;
        for_each_diamond(&g, &lc, |_, _, _, _| count += 1);
        assert_eq!(count, 6);

        let g = cycle(4);
        let (_, lc) = setup(&g);
        let mut count = 0;
        for_each_diamond(&g, &lc, |_, _, _, _| count += 1);
        assert_eq!(count, 0);

        for seed in 0..4 {
            let g = random_graph(12, 0.5, seed + 7);
            let (og, lc) = setup(&g);
            let mut count = 0u64;
            for_each_diamond(&g, &lc, |c1, c2, o1, o2| {
                assert!(g.has_edge(c1, c2) && g.has_edge(c1, o1) && g.has_edge(c2, o1));
                assert!(g.has_edge(c1, o2) && g.has_edge(c2, o2));
                count += 1;
            });
            // brute force: per edge, pairs of common neighbors
            let mut brute = 0u64;
            for &(a, b) in g.canonical_edges() {
                let common = g
                    .neighbors(a)
                    .iter()
                    .filter(|&&x| g.has_edge(b, x))
                    .count() as i64;
                brute += choose2(common) as u64;
            }
            assert_eq!(count, brute);
            assert_eq!(count, global_fundamental_counts(&g, &og).diamonds);
        }
    }

    #[test]
    fn directed_three_paths() {
        // single edge: no 3-paths
        let g = Graph::from_edges(2, &[(0, 1)]);
        let og = build_oriented(&g);
        let mut visits = 0;
        for_each_directed_three_path(&og, |_, _, _, _| visits += 1);
        assert_eq!(visits, 0);

        // path 0-1-2-3 orients as 0->1, 1->2, 3->2: no directed 3-path
        let g = path(4);
        let og = build_oriented(&g);
        let mut visits = 0;
        for_each_directed_three_path(&og, |_, _, _, _| visits += 1);
        assert_eq!(visits, 0);

        // K4 orients as a transitive tournament: one monotone 3-path
        let g = complete(4);
        let og = build_oriented(&g);
        let mut visits = 0;
        for_each_directed_three_path(&og, |i, j, k, l| {
            assert!(og.precedes(i, j) && og.precedes(j, k) && og.precedes(k, l));
            visits += 1;
        });
        assert_eq!(visits, 1);

        for seed in 0..4 {
            let g = random_graph(12, 0.4, seed + 20);
            let og = build_oriented(&g);
            let mut visits = 0u64;
            for_each_directed_three_path(&og, |i, _, _, l| {
                assert_ne!(i, l);
                visits += 1;
            });
            // brute force over ordered vertex quadruples
            let mut brute = 0u64;
            for i in 0..12u32 {
                for j in 0..12u32 {
                    for k in 0..12u32 {
                        for l in 0..12u32 {
                            let distinct = i != j && i != k && i != l && j != k && j != l && k != l;
                            if distinct
                                && g.has_edge(i, j)
                                && og.precedes(i, j)
                                && g.has_edge(j, k)
                                && og.precedes(j, k)
                                && g.has_edge(k, l)
                                && og.precedes(k, l)
                            {
                                brute += 1;
                            }
                        }
                    }
                }
            }
            assert_eq!(visits, brute);
            assert_eq!(visits, global_fundamental_counts(&g, &og).dir_three_paths);
        }
    }

    #[test]
    fn fundamentals_named() {
        let g = complete(3);
        let og = build_oriented(&g);
        let f = global_fundamental_counts(&g, &og);
        assert_eq!((f.wedges, f.diamonds, f.dir_three_paths), (3, 0, 0));

        let g = complete(4);
        let og = build_oriented(&g);
        assert_eq!(global_fundamental_counts(&g, &og).diamonds, 6);

        let g = Graph::from_edges(0, &[]);
        let og = build_oriented(&g);
        let f = global_fundamental_counts(&g, &og);
        assert_eq!(f, FundamentalCounts { wedges: 0, diamonds: 0, dir_three_paths: 0, dir_bipyramids: 0 });
    }
}
