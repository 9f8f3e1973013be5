//! Complementary cumulative distribution of a per-vertex count column:
//! for each distinct value x, the fraction of vertices with count >= x.

/// Returns (count, fraction) points with counts ascending and fractions
/// non-increasing. The first fraction covers every vertex with at least the
/// smallest observed value, so an all-zero column yields [(0, 1.0)].
pub fn emit_ccd(column: &[u64]) -> Vec<(u64, f64)> {
    if column.is_empty() {
        return Vec::new();
    }
    let mut sorted: Vec<u64> = column.to_vec();
    sorted.sort_unstable();
    let n = sorted.len() as f64;
    let mut points = Vec::new();
    let mut i = 0;
    while i < sorted.len() {
        let x = sorted[i];
        // vertices with count >= x are everything from i on
        points.push((x, (sorted.len() - i) as f64 / n));
        while i < sorted.len() && sorted[i] == x {
            i += 1;
        }
    }
    points
}
