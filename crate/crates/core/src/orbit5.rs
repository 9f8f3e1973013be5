//! Non-induced counts for the 5-vertex orbits 15..72.
//!
//! Seven independent passes fill disjoint column groups: closed forms over
//! degrees and 4-vertex counts, one sweep over neighborhoods, triangle and
//! wedge enumerations, per-source diamond enumeration, 4-clique enumeration,
//! the two-pass 5-cycle algorithm on the DAG, and direct 5-clique
//! enumeration. Per-pair quantities (wedge, tailed-triangle and diamond
//! counts between vertex pairs) live only in scratch scoped to one source
//! vertex and are never materialized globally.
//!
//! Accumulation is signed; the final table is checked non-negative.

use crate::enumerate::{atomic_col, unwrap_col, LocalCounts, SparseCounter};
use crate::graph::{Graph, OrientedGraph};
use crate::orbit4::{family, EdgeOrbits, Voc4};
use crate::patterns::NUM_ORBITS;
use crate::{choose2, choose3, choose4};
use rayon::prelude::*;
use std::collections::HashMap;
use std::sync::atomic::{AtomicI64, Ordering};

/// The full per-vertex orbit table, one signed column per orbit 0..=72.
pub struct VocTable {
    pub n: usize,
    pub cols: Vec<Vec<i64>>,
}

impl VocTable {
    #[inline]
    pub fn get(&self, orbit: usize, v: usize) -> u64 {
        debug_assert!(self.cols[orbit][v] >= 0);
        self.cols[orbit][v] as u64
    }

    /// First (vertex, orbit) holding a negative entry, if any.
    pub fn first_negative(&self) -> Option<(usize, usize)> {
        for (orbit, col) in self.cols.iter().enumerate() {
            if let Some(v) = col.iter().position(|&x| x < 0) {
                return Some((v, orbit));
            }
        }
        None
    }

    pub fn column_total(&self, orbit: usize) -> i64 {
        self.cols[orbit].iter().sum()
    }
}

type GroupCols = Vec<(usize, Vec<i64>)>;

fn par_fold_sources<S: Send>(
    n: usize,
    init: impl Fn() -> S + Sync + Send,
    body: impl Fn(&mut S, u32) + Sync + Send,
) {
    (0..n as u32)
        .into_par_iter()
        .fold(&init, |mut s, u| {
            body(&mut s, u);
            s
        })
        .for_each(drop);
}

/// Neighborhood marker with epoch-based clearing.
pub struct Stamp {
    mark: Vec<u32>,
    epoch: u32,
}

impl Stamp {
    pub fn new(n: usize) -> Stamp {
        Stamp {
            mark: vec![0; n],
            epoch: 0,
        }
    }

    #[inline]
    pub fn next(&mut self) {
        self.epoch += 1;
    }

    #[inline]
    pub fn set(&mut self, i: u32) {
        self.mark[i as usize] = self.epoch;
    }

    #[inline]
    pub fn test(&self, i: u32) -> bool {
        self.mark[i as usize] == self.epoch
    }
}

/// Orbits 16, 17, 23, 33, 38, 44, 47, 58: constant work per vertex.
pub fn count_group_closed_form(g: &Graph, v4: &Voc4) -> GroupCols {
    let n = g.n();
    let mut cols: Vec<Vec<i64>> = vec![vec![0i64; n]; 8];
    for u in 0..n {
        let du = g.degree(u as u32) as i64;
        let r = &v4.rows[u];
        cols[0][u] = r[4] * (du - 1) - r[10] - 2 * r[8];
        cols[1][u] = choose2(r[1]) - r[3] - r[6] - r[8] - r[10];
        cols[2][u] = choose4(du);
        cols[3][u] = r[3] * choose2(du - 2);
        cols[4][u] = r[8] * (du - 2) - r[13];
        cols[5][u] = choose2(r[3]) - r[13];
        cols[6][u] = r[12] * (du - 2) - 3 * r[14];
        cols[7][u] = r[14] * (du - 3);
    }
    [16, 17, 23, 33, 38, 44, 47, 58]
        .into_iter()
        .zip(cols)
        .collect()
}

/// Orbits 15, 18..22, 24, 27, 28, 30, 31, 35, 37, 39..42, 45, 55, 56, 57,
/// 60, 67: one sweep over every (vertex, neighbor) pair, then lower-orbit
/// corrections.
pub fn count_group_neighbor_sum(g: &Graph, lc: &LocalCounts, e4: &EdgeOrbits, v4: &Voc4) -> GroupCols {
    const ORBITS: [usize; 23] = [
        15, 18, 19, 20, 21, 22, 24, 27, 28, 30, 31, 35, 37, 39, 40, 41, 42, 45, 55, 56, 57, 60, 67,
    ];
    let n = g.n();
    let acc: Vec<Vec<AtomicI64>> = (0..ORBITS.len()).map(|_| atomic_col(n)).collect();
    par_fold_sources(
        n,
        || (),
        |_, u| {
            let ui = u as usize;
            let du = g.degree(u) as i64;
            let mut s = [0i64; 23];
            for (v, e) in g.neighbor_edges(u) {
                let rv = &v4.rows[v as usize];
                let dv = rv[0];
                let te = lc.t_e[e as usize] as i64;
                s[0] += rv[4];
                s[1] += rv[6];
                s[2] += rv[5];
                s[3] += (du - 1) * choose2(dv - 1);
                s[4] += (dv - 1) * choose2(du - 1);
                s[5] += choose3(dv - 1);
                s[6] += rv[10];
                s[7] += rv[9];
                s[8] += (du - 1) * rv[3];
                s[9] += dv - 1;
                s[10] += (dv - 1) * rv[3];
                s[11] += rv[8];
                s[13] += rv[13];
                s[17] += rv[12];
                s[19] += rv[14];
                if te > 0 {
                    let e9_vu = e4.asym_ix(family::E9, e, v < u);
                    s[12] += e4.sym_ix(family::E5, e) * (dv - 2);
                    s[14] += e9_vu * (dv - 3);
                    s[15] += choose2(te) * (dv - 3);
                    s[16] += choose2(te) * (du - 3);
                    s[18] += choose3(te);
                    s[20] += e4.sym_ix(family::E11, e) * (dv - 3);
                    s[21] += e9_vu * (te - 1);
                    s[22] += e4.sym_ix(family::E11, e) * (te - 2);
                } else {
                    s[12] += e4.sym_ix(family::E5, e) * (dv - 2);
                }
            }
            s[9] *= v4.rows[ui][3]; // orbit 30 main term
            let r = &v4.rows[ui];
            s[0] -= r[5] + 2 * r[11] + 2 * r[8];
            s[1] -= 3 * r[7] + r[10];
            s[2] -= r[4] + r[5] + r[10];
            s[3] -= r[10];
            s[4] -= 2 * r[11];
            s[6] -= r[10] + 2 * r[11] + 2 * r[12];
            s[7] -= r[11] + 2 * r[13];
            s[8] -= 2 * r[3] + 2 * r[11] + 2 * r[12];
            s[9] -= 2 * r[3] + r[10] + 2 * r[13];
            s[10] -= 2 * r[9] + r[10] + 2 * r[3];
            s[11] -= 2 * r[8] + r[13];
            s[12] -= 2 * r[12];
            s[13] -= r[13] + 2 * r[12];
            s[17] -= 2 * r[13] + 3 * r[14];
            s[19] -= 3 * r[14];
            s[21] -= 6 * r[14];
            for (i, &v) in s.iter().enumerate() {
                acc[i][ui].store(v, Ordering::Relaxed);
            }
        },
    );
    let cols: Vec<Vec<i64>> = acc.into_iter().map(unwrap_col).collect();
    ORBITS.into_iter().zip(cols).collect()
}

/// Orbits 25, 26, 29, 32, 36, 43, 46, 48, 49, 50, 51, 52, 53, 54, 59, 61,
/// 65: a triangle pass plus a per-source wedge pass.
pub fn count_group_wedge_triangle(
    g: &Graph,
    lc: &LocalCounts,
    e4: &EdgeOrbits,
    v4: &Voc4,
) -> GroupCols {
    let n = g.n();
    let tri_orbits = [25usize, 26, 29, 32, 43, 46, 48, 52, 53, 54, 59, 61, 65];
    let tri_cols: Vec<Vec<AtomicI64>> = (0..tri_orbits.len()).map(|_| atomic_col(n)).collect();
    lc.triangles.par_iter().for_each(|t| {
        let [a, b, cc] = t.v;
        let [eab, eac, ebc] = t.e;
        // each corner with the opposite pair and its edges
        for (u, v, x, euv, eux, evx) in [
            (a, b, cc, eab, eac, ebc),
            (b, a, cc, eab, ebc, eac),
            (cc, a, b, eac, ebc, eab),
        ] {
            let ui = u as usize;
            let rv = &v4.rows[v as usize];
            let rx = &v4.rows[x as usize];
            let (dv, dx) = (rv[0], rx[0]);
            let tuv = lc.t_e[euv as usize] as i64;
            let tux = lc.t_e[eux as usize] as i64;
            let tvx = lc.t_e[evx as usize] as i64;
            let add = |i: usize, amt: i64| {
                if amt != 0 {
                    tri_cols[i][ui].fetch_add(amt, Ordering::Relaxed);
                }
            };
            add(0, (dv - 2) * (dx - 2));
            add(1, (v4.rows[ui][0] - 2) * ((dv - 2) + (dx - 2)));
            add(2, rv[1] + rx[1]);
            add(3, choose2(dv - 2) + choose2(dx - 2));
            add(4, (rv[3] - 1) + (rx[3] - 1));
            add(5, e4.sym_ix(family::E7, evx));
            add(6, (tuv - 1) * (dx - 2) + (tux - 1) * (dv - 2));
            add(7, e4.sym_ix(family::E5, evx));
            add(8, e4.sym_ix(family::E5, euv) + e4.sym_ix(family::E5, eux));
            add(9, choose2(tvx - 1));
            add(
                10,
                e4.asym_ix(family::E9, evx, true) + e4.asym_ix(family::E9, evx, false),
            );
            add(11, (tuv - 1) * (tux - 1));
            add(12, e4.sym_ix(family::E11, evx));
        }
    });
    let mut tri_cols: Vec<Vec<i64>> = tri_cols.into_iter().map(unwrap_col).collect();
    for u in 0..n {
        let r = &v4.rows[u];
        tri_cols[0][u] -= r[12];
        tri_cols[1][u] -= 2 * r[13];
        tri_cols[2][u] -= 4 * r[3] + r[10] + 2 * r[11] + 2 * r[12] + 2 * r[13];
        tri_cols[4][u] -= 2 * r[12] + 2 * r[13];
        tri_cols[5][u] -= r[11] + 3 * r[14];
        tri_cols[6][u] -= 6 * r[14];
        tri_cols[7][u] -= 2 * r[13];
        tri_cols[8][u] -= 2 * r[13] + 2 * r[12];
        tri_cols[10][u] -= 2 * r[13] + 6 * r[14];
        tri_cols[11][u] -= 3 * r[14];
        tri_cols[12][u] -= 3 * r[14];
    }

    // wedge pass: per-source wedge and tailed-triangle counts to each
    // endpoint pair, orbit 49 scattered to the wedge center
    let col36: Vec<AtomicI64> = atomic_col(n);
    let col49: Vec<AtomicI64> = atomic_col(n);
    let col50: Vec<AtomicI64> = atomic_col(n);
    let col51: Vec<AtomicI64> = atomic_col(n);
    par_fold_sources(
        n,
        || (SparseCounter::new(n), SparseCounter::new(n), Stamp::new(n)),
        |(w, tt, adj_u), u| {
            adj_u.next();
            for &x in g.neighbors(u) {
                adj_u.set(x);
            }
            for &x in g.neighbors(u) {
                for (y, exy) in g.neighbor_edges(x) {
                    if y != u {
                        w.add(y, 1);
                        tt.add(y, lc.t_e[exy as usize] as i64);
                    }
                }
            }
            let mut s36 = 0i64;
            let mut s50 = 0i64;
            let mut s51 = 0i64;
            for &y in w.support() {
                let wy = w.get(y);
                if wy >= 2 {
                    s36 += choose2(wy) * (g.degree(y) as i64 - 2);
                    s50 += choose3(wy);
                }
                let t = tt.get(y);
                if t != 0 {
                    let tt_eff = t - if adj_u.test(y) { wy } else { 0 };
                    s51 += tt_eff * (wy - 1);
                }
            }
            col36[u as usize].store(s36, Ordering::Relaxed);
            col50[u as usize].store(s50, Ordering::Relaxed);
            col51[u as usize].store(s51, Ordering::Relaxed);
            for &x in g.neighbors(u) {
                let mut s49 = 0i64;
                for &y in g.neighbors(x) {
                    if y != u {
                        s49 += choose2(w.get(y) - 1);
                    }
                }
                if s49 != 0 {
                    col49[x as usize].fetch_add(s49, Ordering::Relaxed);
                }
            }
            w.clear();
            tt.clear();
        },
    );
    let mut col36 = unwrap_col(col36);
    let mut col49 = unwrap_col(col49);
    let col50 = unwrap_col(col50);
    let mut col51 = unwrap_col(col51);
    for u in 0..n {
        let r = &v4.rows[u];
        col36[u] -= r[13];
        debug_assert_eq!(col49[u] % 2, 0);
        col49[u] /= 2;
        col51[u] -= 2 * r[12];
    }

    let mut out: GroupCols = tri_orbits.into_iter().zip(tri_cols).collect();
    out.push((36, col36));
    out.push((49, col49));
    out.push((50, col50));
    out.push((51, col51));
    out
}

/// Orbits 62, 63, 64, 68, 69: per-source diamond enumeration against the
/// wedge scratch; pair-indexed diamond counts live in a per-source map.
pub fn count_group_diamond(g: &Graph, lc: &LocalCounts, v4: &Voc4) -> GroupCols {
    let n = g.n();
    let col62: Vec<AtomicI64> = atomic_col(n);
    let col63: Vec<AtomicI64> = atomic_col(n);
    let col64: Vec<AtomicI64> = atomic_col(n);
    let col68: Vec<AtomicI64> = atomic_col(n);
    let col69: Vec<AtomicI64> = atomic_col(n);
    struct Scratch {
        w: SparseCounter,
        doff: SparseCounter,
        p68: HashMap<(u32, u32), i64>,
        dhub: HashMap<(u32, u32), i64>,
    }
    par_fold_sources(
        n,
        || Scratch {
            w: SparseCounter::new(n),
            doff: SparseCounter::new(n),
            p68: HashMap::new(),
            dhub: HashMap::new(),
        },
        |s, u| {
            if lc.t_v[u as usize] > 0 {
                for &x in g.neighbors(u) {
                    for &y in g.neighbors(x) {
                        if y != u {
                            s.w.add(y, 1);
                        }
                    }
                }
                let mut s63 = 0i64;
                // diamonds with u in an off-chord seat: triangle (u, v, x)
                // plus another triangle on the chord (v, x)
                for (v, euv) in g.neighbor_edges(u) {
                    if lc.t_e[euv as usize] == 0 {
                        continue;
                    }
                    for entry in lc.edge_triangles(euv) {
                        let x = entry.third;
                        if x <= v {
                            continue; // visit each triangle at u once
                        }
                        let evx = if v < u { entry.e_from_min } else { entry.e_from_max };
                        for far in lc.edge_triangles(evx) {
                            let y = far.third;
                            if y == u {
                                continue;
                            }
                            let wy = s.w.get(y);
                            s63 += wy - 2;
                            col64[v as usize].fetch_add(wy - 2, Ordering::Relaxed);
                            col64[x as usize].fetch_add(wy - 2, Ordering::Relaxed);
                            s.doff.add(y, 1);
                            *s.p68.entry((v, y)).or_insert(0) += 1;
                            *s.p68.entry((x, y)).or_insert(0) += 1;
                        }
                    }
                }
                col63[u as usize].store(s63, Ordering::Relaxed);
                if !s.p68.is_empty() {
                    let s68: i64 = s.p68.values().map(|&d| choose2(d)).sum();
                    col68[u as usize].store(s68, Ordering::Relaxed);
                    s.p68.clear();
                }
                // second wedge sweep scatters off-pair diamond counts to centers
                if !s.doff.support().is_empty() {
                    for &x in g.neighbors(u) {
                        let mut s62 = 0i64;
                        for &y in g.neighbors(x) {
                            if y != u {
                                s62 += s.doff.get(y);
                            }
                        }
                        if s62 != 0 {
                            col62[x as usize].fetch_add(s62, Ordering::Relaxed);
                        }
                    }
                    s.doff.clear();
                }
                s.w.clear();
            }
            // diamonds with u on the chord, keyed by their off pair
            let mut any = false;
            for (_, euv) in g.neighbor_edges(u) {
                let entries = lc.edge_triangles(euv);
                for i in 0..entries.len() {
                    for j in i + 1..entries.len() {
                        let (a, b) = (entries[i].third, entries[j].third);
                        let key = (a.min(b), a.max(b));
                        *s.dhub.entry(key).or_insert(0) += 1;
                        any = true;
                    }
                }
            }
            if any {
                let s69: i64 = s.dhub.values().map(|&d| choose2(d)).sum();
                debug_assert_eq!(s69 % 2, 0);
                col69[u as usize].store(s69 / 2, Ordering::Relaxed);
                s.dhub.clear();
            }
        },
    );
    let mut col62 = unwrap_col(col62);
    let mut col64 = unwrap_col(col64);
    for u in 0..n {
        debug_assert_eq!(col62[u] % 2, 0);
        col62[u] = col62[u] / 2 - v4.rows[u][13];
        debug_assert_eq!(col64[u] % 2, 0);
        col64[u] /= 2;
    }
    vec![
        (62, col62),
        (63, unwrap_col(col63)),
        (64, col64),
        (68, unwrap_col(col68)),
        (69, unwrap_col(col69)),
    ]
}

/// Orbits 66, 70, 71: a 4-clique enumeration pass plus a triangle pass over
/// the per-triangle 4-clique counts. The degenerate triangle choices inside
/// each 4-clique are discounted inline (the -2 per opposite edge).
pub fn count_group_clique(g: &Graph, og: &OrientedGraph, lc: &LocalCounts) -> GroupCols {
    let n = g.n();
    let col66: Vec<AtomicI64> = atomic_col(n);
    let col70: Vec<AtomicI64> = atomic_col(n);
    let col71: Vec<AtomicI64> = atomic_col(n);
    lc.triangles.par_iter().enumerate().for_each(|(tid, t)| {
        let k = lc.k4_t[tid] as i64;
        if k >= 2 {
            let amt = choose2(k);
            for &v in &t.v {
                col71[v as usize].fetch_add(amt, Ordering::Relaxed);
            }
        }
    });
    // enumerate each 4-clique once from its directed source triangle
    lc.triangles.par_iter().enumerate().for_each(|(tid, t)| {
        let [a, b, cc] = t.v;
        let [eab, eac, ebc] = t.e;
        let mut common: Vec<(u32, u32, u32)> = Vec::new();
        intersect_out_pairs(og, a, b, &mut common);
        for &(d, ead, ebd) in &common {
            let Some(ecd) = out_eid(og, cc, d) else { continue };
            let t_abc = tid as u32;
            let t_abd = lc.tri_id(eab, d).expect("face");
            let t_acd = lc.tri_id(eac, d).expect("face");
            let t_bcd = lc.tri_id(ebc, d).expect("face");
            let te = |e: u32| lc.t_e[e as usize] as i64;
            let k4t = |t: u32| lc.k4_t[t as usize] as i64;
            for (u, oe, ot) in [
                (a, [ebc, ebd, ecd], t_bcd),
                (b, [eac, ead, ecd], t_acd),
                (cc, [eab, ead, ebd], t_abd),
                (d, [eab, eac, ebc], t_abc),
            ] {
                let s66: i64 = oe.iter().map(|&e| te(e) - 2).sum();
                if s66 != 0 {
                    col66[u as usize].fetch_add(s66, Ordering::Relaxed);
                }
                let s70 = k4t(ot) - 1;
                if s70 != 0 {
                    col70[u as usize].fetch_add(s70, Ordering::Relaxed);
                }
            }
        }
    });
    vec![
        (66, unwrap_col(col66)),
        (70, unwrap_col(col70)),
        (71, unwrap_col(col71)),
    ]
}

fn intersect_out_pairs(og: &OrientedGraph, a: u32, b: u32, buf: &mut Vec<(u32, u32, u32)>) {
    buf.clear();
    let (oa, ea) = (og.out(a), og.out_eids(a));
    let (ob, eb) = (og.out(b), og.out_eids(b));
    let (mut i, mut j) = (0, 0);
    while i < oa.len() && j < ob.len() {
        let (ra, rb) = (og.rank(oa[i]), og.rank(ob[j]));
        if ra == rb {
            buf.push((oa[i], ea[i], eb[j]));
            i += 1;
            j += 1;
        } else if ra < rb {
            i += 1;
        } else {
            j += 1;
        }
    }
}

fn out_eid(og: &OrientedGraph, u: u32, v: u32) -> Option<u32> {
    let outs = og.out(u);
    let rv = og.rank(v);
    let idx = outs.binary_search_by_key(&rv, |&w| og.rank(w)).ok()?;
    Some(og.out_eids(u)[idx])
}

/// Orbit 34: the 5-cycle, via the two-pass directed scheme. Pass one walks
/// directed 3-paths (an out-wedge extended by one more out-edge) against
/// per-pair counts of non-in-in wedges; pass two credits wedge centers with
/// per-pair path counts and subtracts the three directed tailed-triangle
/// families.
pub fn count_five_cycle_orbit(g: &Graph, og: &OrientedGraph, lc: &LocalCounts) -> GroupCols {
    let n = g.n();
    let col34: Vec<AtomicI64> = atomic_col(n);
    struct Scratch {
        nw: SparseCounter,
        paths: SparseCounter,
        adj_i: Stamp,
        adj_j: Stamp,
    }
    par_fold_sources(
        n,
        || Scratch {
            nw: SparseCounter::new(n),
            paths: SparseCounter::new(n),
            adj_i: Stamp::new(n),
            adj_j: Stamp::new(n),
        },
        |s, i| {
            let has_in = g.neighbors(i).iter().any(|&j| !og.precedes(i, j));
            if !has_in {
                return;
            }
            // non-in-in wedges from i, per far endpoint
            for &w in g.neighbors(i) {
                let iw_in = og.precedes(i, w);
                for &l in g.neighbors(w) {
                    if l != i && !(iw_in && og.precedes(l, w)) {
                        s.nw.add(l, 1);
                    }
                }
            }
            s.adj_i.next();
            for &w in g.neighbors(i) {
                s.adj_i.set(w);
            }
            // directed 3-paths i <- j -> k -> l
            let mut total_i = 0i64;
            for &j in g.neighbors(i) {
                if og.precedes(i, j) {
                    continue; // need j -> i
                }
                let outs = og.out(j);
                if outs.is_empty() || (outs.len() == 1 && outs[0] == i) {
                    continue;
                }
                s.adj_j.next();
                for &x in g.neighbors(j) {
                    s.adj_j.set(x);
                }
                let mut total_j = 0i64;
                for &k in outs {
                    if k == i {
                        continue;
                    }
                    let chord_ik = i64::from(s.adj_i.test(k));
                    let mut total_k = 0i64;
                    for &l in og.out(k) {
                        if l == i {
                            continue;
                        }
                        let cnt = s.nw.get(l) - chord_ik - i64::from(s.adj_j.test(l));
                        if cnt != 0 {
                            col34[l as usize].fetch_add(cnt, Ordering::Relaxed);
                            total_k += cnt;
                        }
                        s.paths.add(l, 1);
                    }
                    if total_k != 0 {
                        col34[k as usize].fetch_add(total_k, Ordering::Relaxed);
                        total_j += total_k;
                    }
                }
                if total_j != 0 {
                    col34[j as usize].fetch_add(total_j, Ordering::Relaxed);
                    total_i += total_j;
                }
            }
            if total_i != 0 {
                col34[i as usize].fetch_add(total_i, Ordering::Relaxed);
            }
            // credit the wedge centers
            if !s.paths.support().is_empty() {
                for &w in g.neighbors(i) {
                    let iw_in = og.precedes(i, w);
                    let mut credit = 0i64;
                    for &l in g.neighbors(w) {
                        if l != i && !(iw_in && og.precedes(l, w)) {
                            credit += s.paths.get(l);
                        }
                    }
                    if credit != 0 {
                        col34[w as usize].fetch_add(credit, Ordering::Relaxed);
                    }
                }
                s.paths.clear();
            }
            s.nw.clear();
        },
    );
    let mut col34 = unwrap_col(col34);
    // pass-two overcount: directed tailed triangles whose wedge center lies
    // on the 3-path, split by the center's role in its triangle
    for w in 0..n {
        let dplus = og.out_degree(w as u32) as i64;
        col34[w] -= lc.src_t[w] as i64 * (dplus - 2)
            + lc.mid_t[w] as i64 * (dplus - 1)
            + lc.snk_t[w] as i64 * dplus;
    }
    vec![(34, col34)]
}

/// Orbit 72: direct enumeration of directed 5-cliques.
pub fn count_five_clique_orbit(og: &OrientedGraph) -> GroupCols {
    let n = og.n();
    let col72: Vec<AtomicI64> = atomic_col(n);
    (0..n as u32).into_par_iter().for_each(|a| {
        let mut c2buf: Vec<u32> = Vec::new();
        let mut c3buf: Vec<u32> = Vec::new();
        let mut c4buf: Vec<u32> = Vec::new();
        for &b in og.out(a) {
            intersect_ranked(og, og.out(a), og.out(b), &mut c2buf);
            for (ci, &c) in c2buf.iter().enumerate() {
                intersect_ranked(og, &c2buf[ci + 1..], og.out(c), &mut c3buf);
                for (di, &d) in c3buf.iter().enumerate() {
                    intersect_ranked(og, &c3buf[di + 1..], og.out(d), &mut c4buf);
                    for &e in &c4buf {
                        for v in [a, b, c, d, e] {
                            col72[v as usize].fetch_add(1, Ordering::Relaxed);
                        }
                    }
                }
            }
        }
    });
    vec![(72, unwrap_col(col72))]
}

/// Intersection of two rank-sorted vertex slices.
fn intersect_ranked(og: &OrientedGraph, xs: &[u32], ys: &[u32], buf: &mut Vec<u32>) {
    buf.clear();
    let (mut i, mut j) = (0, 0);
    while i < xs.len() && j < ys.len() {
        let (rx, ry) = (og.rank(xs[i]), og.rank(ys[j]));
        if rx == ry {
            buf.push(xs[i]);
            i += 1;
            j += 1;
        } else if rx < ry {
            i += 1;
        } else {
            j += 1;
        }
    }
}

/// Runs the seven group passes and assembles the full 73-column table.
/// Groups write disjoint columns, so they run concurrently; identical output
/// regardless of thread count.
pub fn count_all_5voc(
    g: &Graph,
    og: &OrientedGraph,
    lc: &LocalCounts,
    e4: &EdgeOrbits,
    v4: &Voc4,
) -> VocTable {
    count_all_5voc_timed(g, og, lc, e4, v4).0
}

/// As [`count_all_5voc`], also reporting wall time per orbit group. The
/// groups run concurrently, so their times can overlap.
pub fn count_all_5voc_timed(
    g: &Graph,
    og: &OrientedGraph,
    lc: &LocalCounts,
    e4: &EdgeOrbits,
    v4: &Voc4,
) -> (VocTable, Vec<(&'static str, std::time::Duration)>) {
    fn timed(
        name: &'static str,
        f: impl FnOnce() -> GroupCols,
    ) -> (GroupCols, (&'static str, std::time::Duration)) {
        let t0 = std::time::Instant::now();
        let cols = f();
        (cols, (name, t0.elapsed()))
    }
    let ((clique5, cycle5), (diamond_clique, rest)) = rayon::join(
        || {
            rayon::join(
                || timed("five-clique", || count_five_clique_orbit(og)),
                || timed("five-cycle", || count_five_cycle_orbit(g, og, lc)),
            )
        },
        || {
            rayon::join(
                || {
                    timed("diamond+clique", || {
                        let mut cols = count_group_diamond(g, lc, v4);
                        cols.extend(count_group_clique(g, og, lc));
                        cols
                    })
                },
                || {
                    timed("remaining-orbits", || {
                        let mut cols = count_group_closed_form(g, v4);
                        cols.extend(count_group_neighbor_sum(g, lc, e4, v4));
                        cols.extend(count_group_wedge_triangle(g, lc, e4, v4));
                        cols
                    })
                },
            )
        },
    );
    let times = vec![clique5.1, cycle5.1, diamond_clique.1, rest.1];
    let (clique5, cycle5, diamond_clique, rest) = (clique5.0, cycle5.0, diamond_clique.0, rest.0);
    let n = g.n();
    let mut cols: Vec<Option<Vec<i64>>> = (0..NUM_ORBITS).map(|_| None).collect();
    for i in 0..15 {
        cols[i] = Some(v4.col_vec(i));
    }
    for (orbit, col) in clique5
        .into_iter()
        .chain(cycle5)
        .chain(diamond_clique)
        .chain(rest)
    {
        debug_assert!(cols[orbit].is_none(), "orbit {orbit} written twice");
        cols[orbit] = Some(col);
    }
    let cols: Vec<Vec<i64>> = cols
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.unwrap_or_else(|| panic!("orbit {i} never computed")))
        .collect();
    let table = VocTable { n, cols };
    if let Some((v, orbit)) = table.first_negative() {
        panic!(
            "negative count at vertex {v}, orbit {orbit}: counting bug upstream"
        );
    }
    (table, times)
}
