//! Integer transforms between non-induced and induced orbit tables.
//!
//! For orbits of k-vertex patterns, the non-induced count vector of a vertex
//! is a unit-upper-triangular integer matrix times its induced vector; the
//! matrix entry (i, j) is the number of non-induced matches of orbit i inside
//! one induced match of orbit j. Entries are generated by running the
//! brute-force counter with the pattern of orbit j as the input graph, never
//! hand-transcribed. Blocks are per pattern size: [0], [1..3], [4..14],
//! [15..72].

use crate::graph::Graph;
use crate::patterns::{brute_force_voc, catalog, NUM_ORBITS};
use std::fmt;

/// Orbit index ranges of the four same-size blocks.
pub const BLOCKS: [(usize, usize); 4] = [(0, 0), (1, 3), (4, 14), (15, 72)];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformMatrix {
    pub lo: usize,
    pub hi: usize,
    /// Row-major (hi-lo+1)^2 entries; a[i][j] indexed by orbit - lo.
    pub a: Vec<Vec<i64>>,
}

#[derive(Debug)]
pub enum TransformError {
    /// The matrix is not unit triangular, so no integer inverse exists.
    NonUnitDiagonal { orbit: usize },
    /// An induced count came out negative: the non-induced input is
    /// inconsistent, which signals an upstream counting bug.
    NegativeInducedCount { vertex: usize, orbit: usize, value: i64 },
}

impl fmt::Display for TransformError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TransformError::NonUnitDiagonal { orbit } => {
                write!(f, "transform matrix diagonal is not 1 at orbit {orbit}")
            }
            TransformError::NegativeInducedCount { vertex, orbit, value } => write!(
                f,
                "induced count for vertex {vertex}, orbit {orbit} is negative ({value}); \
                 non-induced input is inconsistent"
            ),
        }
    }
}

impl std::error::Error for TransformError {}

/// Builds the block for orbits `lo..=hi` (which must span patterns of one
/// size) from first principles: entry (i, j) is the non-induced count of
/// orbit i at the representative of orbit j inside the pattern of orbit j.
pub fn build_transform_matrix(lo: usize, hi: usize) -> TransformMatrix {
    let cat = catalog();
    let k = hi - lo + 1;
    let mut a = vec![vec![0i64; k]; k];
    for j in lo..=hi {
        let orbit = &cat.orbits[j];
        let def = cat.patterns[orbit.pattern].def;
        let edges: Vec<(u32, u32)> = def.edges.iter().map(|&(x, y)| (x as u32, y as u32)).collect();
        let g = Graph::from_edges(def.n, &edges);
        let voc = brute_force_voc(&g);
        for i in lo..=hi {
            a[i - lo][j - lo] = voc.noninduced[i][orbit.representative as usize] as i64;
        }
    }
    TransformMatrix { lo, hi, a }
}

/// Exact integer inverse of a unit-upper-triangular matrix by back
/// substitution.
pub fn invert_unit_triangular(m: &TransformMatrix) -> Result<TransformMatrix, TransformError> {
    let k = m.a.len();
    for i in 0..k {
        if m.a[i][i] != 1 {
            return Err(TransformError::NonUnitDiagonal { orbit: m.lo + i });
        }
        for j in 0..i {
            debug_assert_eq!(m.a[i][j], 0, "matrix must be upper triangular");
        }
    }
    let mut inv = vec![vec![0i64; k]; k];
    for c in 0..k {
        // solve A x = e_c upward
        for i in (0..=c).rev() {
            let mut x = i64::from(i == c);
            for j in i + 1..=c {
                x -= m.a[i][j] * inv[j][c];
            }
            inv[i][c] = x;
        }
    }
    Ok(TransformMatrix {
        lo: m.lo,
        hi: m.hi,
        a: inv,
    })
}

/// The four blocks of A (induced -> non-induced) and their inverses.
pub struct Transform {
    pub blocks: Vec<TransformMatrix>,
    pub inverses: Vec<TransformMatrix>,
}

pub fn build_transform() -> Transform {
    let blocks: Vec<TransformMatrix> = BLOCKS
        .iter()
        .map(|&(lo, hi)| build_transform_matrix(lo, hi))
        .collect();
    let inverses = blocks
        .iter()
        .map(|b| invert_unit_triangular(b).expect("containment matrices are unit triangular"))
        .collect();
    Transform { blocks, inverses }
}

fn apply_blockwise(
    matrices: &[TransformMatrix],
    cols: &[Vec<i64>],
    check_nonnegative: bool,
) -> Result<Vec<Vec<i64>>, TransformError> {
    use rayon::prelude::*;
    let n = cols.first().map_or(0, Vec::len);
    // sparse columns of each block: the per-vertex product walks only the
    // nonzero input entries, which on sparse graphs are few
    let sparse: Vec<Vec<Vec<(usize, i64)>>> = matrices
        .iter()
        .map(|m| {
            let k = m.a.len();
            (0..k)
                .map(|j| {
                    (0..k)
                        .filter(|&i| m.a[i][j] != 0)
                        .map(|i| (i, m.a[i][j]))
                        .collect()
                })
                .collect()
        })
        .collect();
    let nthreads = rayon::current_num_threads().max(1);
    let chunk = n.div_ceil(nthreads).max(1);
    let pieces: Vec<Result<Vec<Vec<i64>>, TransformError>> = (0..n.div_ceil(chunk))
        .into_par_iter()
        .map(|ci| {
            let lo_v = ci * chunk;
            let hi_v = ((ci + 1) * chunk).min(n);
            let len = hi_v - lo_v;
            let mut out: Vec<Vec<i64>> = vec![vec![0i64; len]; NUM_ORBITS];
            let mut row = [0i64; NUM_ORBITS];
            for r in 0..len {
                for (m, scols) in matrices.iter().zip(&sparse) {
                    for (j, scol) in scols.iter().enumerate() {
                        let x = cols[m.lo + j][lo_v + r];
                        if x != 0 {
                            for &(i, coef) in scol {
                                row[m.lo + i] += coef * x;
                            }
                        }
                    }
                }
                for (orbit, out_col) in out.iter_mut().enumerate() {
                    let val = row[orbit];
                    if check_nonnegative && val < 0 {
                        return Err(TransformError::NegativeInducedCount {
                            vertex: lo_v + r,
                            orbit,
                            value: val,
                        });
                    }
                    out_col[r] = val;
                    row[orbit] = 0;
                }
            }
            Ok(out)
        })
        .collect();
    let mut out = vec![Vec::with_capacity(n); NUM_ORBITS];
    for piece in pieces {
        for (orbit, part) in piece?.into_iter().enumerate() {
            out[orbit].extend_from_slice(&part);
        }
    }
    Ok(out)
}

/// Converts a full 73-column non-induced table to induced counts.
/// A negative result is a hard failure, not a clamp.
pub fn to_induced(t: &Transform, cols: &[Vec<i64>]) -> Result<Vec<Vec<i64>>, TransformError> {
    apply_blockwise(&t.inverses, cols, true)
}

/// Converts induced counts back to non-induced counts.
pub fn to_noninduced(t: &Transform, cols: &[Vec<i64>]) -> Result<Vec<Vec<i64>>, TransformError> {
    apply_blockwise(&t.blocks, cols, false)
}

impl TransformMatrix {
    /// Plain-text dump: one row per line, entries space-separated.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for row in &self.a {
            let mut first = true;
            for &x in row {
                if !first {
                    s.push(' ');
                }
                s.push_str(&x.to_string());
                first = false;
            }
            s.push('\n');
        }
        s
    }
}
