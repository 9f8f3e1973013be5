use graphlets::enumerate::*;
use graphlets::graph::*;
use graphlets::orbit4::*;
use graphlets::orbit5::*;
use graphlets::patterns::random_gnm;
use graphlets::transform::*;
use std::time::Instant;

#[test]
#[ignore]
fn bench_stages() {
    let g = random_gnm(400_000, 1_200_000, 81);
    let t0 = Instant::now();
    let og = build_oriented(&g);
    eprintln!("orient {:?}", t0.elapsed());
    let t0 = Instant::now();
    let f = global_fundamental_counts(&g, &og);
    eprintln!("fundamentals {:?} ({f:?})", t0.elapsed());
    let t0 = Instant::now();
    let lc0 = enumerate_triangles(&g, &og);
    eprintln!("enumerate_triangles {:?} (T={})", t0.elapsed(), lc0.triangle_total());
    let t0 = Instant::now();
    let lc = local_counts(&g, &og);
    eprintln!("local_counts {:?}", t0.elapsed());
    let t0 = Instant::now();
    let v4 = count_voc4(&g, &lc);
    eprintln!("voc4 {:?}", t0.elapsed());
    let t0 = Instant::now();
    let e4 = count_edge_orbits4(&g, &lc, &v4);
    eprintln!("edge_orbits {:?}", t0.elapsed());
    for (name, f) in [
        ("closed_form", Box::new(|| count_group_closed_form(&g, &v4)) as Box<dyn Fn() -> Vec<(usize, Vec<i64>)>>),
        ("neighbor_sum", Box::new(|| count_group_neighbor_sum(&g, &lc, &e4, &v4))),
        ("wedge_triangle", Box::new(|| count_group_wedge_triangle(&g, &lc, &e4, &v4))),
        ("diamond", Box::new(|| count_group_diamond(&g, &lc, &v4))),
        ("clique", Box::new(|| count_group_clique(&g, &og, &lc))),
        ("five_cycle", Box::new(|| count_five_cycle_orbit(&g, &og, &lc))),
        ("five_clique", Box::new(|| count_five_clique_orbit(&og))),
    ] {
        let t0 = Instant::now();
        let cols = f();
        eprintln!("{name} {:?} ({} cols)", t0.elapsed(), cols.len());
    }
    let table = count_all_5voc(&g, &og, &lc, &e4, &v4);
    let t0 = Instant::now();
    let t = build_transform();
    eprintln!("build_transform {:?}", t0.elapsed());
    let t0 = Instant::now();
    let ind = to_induced(&t, &table.cols).unwrap();
    eprintln!("to_induced {:?} (check {})", t0.elapsed(), ind[0][0]);
}

#[test]
#[ignore]
fn bench_sweep_baseline() {
    let g = random_gnm(400_000, 1_200_000, 81);
    let og = build_oriented(&g);
    // raw double wedge sweep, no work
    let t0 = Instant::now();
    let mut acc = 0u64;
    for u in 0..g.n() as u32 {
        for &v in g.neighbors(u) {
            for &x in g.neighbors(v) {
                if x != u {
                    acc += x as u64;
                }
            }
        }
    }
    eprintln!("raw wedge sweep {:?} (acc {acc})", t0.elapsed());
    // sweep + rank reads
    let t0 = Instant::now();
    let mut acc = 0u64;
    for u in 0..g.n() as u32 {
        for &v in g.neighbors(u) {
            let p = og.precedes(u, v);
            for &x in g.neighbors(v) {
                if x != u && !(p && og.precedes(x, v)) {
                    acc += 1;
                }
            }
        }
    }
    eprintln!("sweep + rank classify {:?} (acc {acc})", t0.elapsed());
    // sweep + scratch add
    use graphlets::enumerate::SparseCounter;
    let mut w = SparseCounter::new(g.n());
    let t0 = Instant::now();
    let mut acc = 0i64;
    for u in 0..g.n() as u32 {
        for &v in g.neighbors(u) {
            for &x in g.neighbors(v) {
                if x != u {
                    w.add(x, 1);
                }
            }
        }
        for &x in w.support() {
            acc += w.get(x);
        }
        w.clear();
    }
    eprintln!("sweep + scratch {:?} (acc {acc})", t0.elapsed());
    // hash has_edge cost over path enumeration
    let t0 = Instant::now();
    let mut acc = 0u64;
    for i in 0..g.n() as u32 {
        for &j in g.neighbors(i) {
            if og.precedes(i, j) { continue; }
            for &k in og.out(j) {
                if k == i { continue; }
                for &l in og.out(k) {
                    if l == i { continue; }
                    acc += g.has_edge(i, k) as u64 + g.has_edge(j, l) as u64;
                }
            }
        }
    }
    eprintln!("path enum + 2 hash has_edge {:?} (acc {acc})", t0.elapsed());
}

#[test]
#[ignore]
fn bench_transform_parts() {
    let g = random_gnm(400_000, 1_200_000, 81);
    let og = build_oriented(&g);
    let lc = local_counts(&g, &og);
    let v4 = count_voc4(&g, &lc);
    let e4 = count_edge_orbits4(&g, &lc, &v4);
    let table = count_all_5voc(&g, &og, &lc, &e4, &v4);
    let n = g.n();
    let t0 = Instant::now();
    let alloc: Vec<Vec<i64>> = vec![vec![0i64; n]; 73];
    eprintln!("alloc 73 cols {:?} ({})", t0.elapsed(), alloc.len());
    drop(alloc);
    // pure scan: count nonzero entries per vertex across all 73 columns
    let t0 = Instant::now();
    let mut nz = 0u64;
    for v in 0..n {
        for col in &table.cols {
            nz += (col[v] != 0) as u64;
        }
    }
    eprintln!("scan to count nonzeros {:?} (avg nz/vertex {:.1})", t0.elapsed(), nz as f64 / n as f64);
    let t = build_transform();
    let t0 = Instant::now();
    let ind = to_induced(&t, &table.cols).unwrap();
    eprintln!("to_induced {:?} (check {})", t0.elapsed(), ind[34][0]);
}
