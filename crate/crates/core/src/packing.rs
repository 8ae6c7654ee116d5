//! Packing balls of unit-fraction weight into boxes.
//!
//! There are `l_i` balls of weight `1/i` for `2 ≤ i ≤ m`. A box holding the
//! balls `x_1, …, x_k` is correct when `k · max μ(x_j) ≤ 1`, i.e. it holds at
//! most `d` balls, `d` being the smallest denominator present.
//!
//! [`pack_star`] is the greedy row packing that also drives the
//! associahedron colouring; [`pack_optimal`] is an exhaustive oracle.

use std::fmt;

use crate::error::{Error, Result};

/// Maximum number of balls accepted by [`pack_optimal`].
pub const MAX_OPTIMAL_BALLS: usize = 14;

/// Ball counts `l_2, …, l_m`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PackingInstance {
    counts: Vec<usize>,
}

impl PackingInstance {
    /// `counts[0]` is `l_2`, `counts[1]` is `l_3`, and so on.
    pub fn new(counts: Vec<usize>) -> Self {
        PackingInstance { counts }
    }

    /// The instance that mirrors the associahedron rows: `l_2 = … = l_k = n + 3`
    /// and `l_{k+1} = k + 1` for `n = 2k − 1`, or `n + 3` for `n = 2k`.
    pub fn associahedron(n: usize) -> Self {
        let k = n.div_ceil(2);
        let mut counts = vec![n + 3; k];
        if n % 2 == 1 {
            counts[k - 1] = k + 1;
        }
        PackingInstance { counts }
    }

    /// Count of balls of weight `1/denominator`.
    pub fn count(&self, denominator: usize) -> usize {
        denominator
            .checked_sub(2)
            .and_then(|j| self.counts.get(j))
            .copied()
            .unwrap_or(0)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    /// Largest denominator `m`.
    pub fn max_denominator(&self) -> usize {
        self.counts.len() + 1
    }

    pub fn total_balls(&self) -> usize {
        self.counts.iter().sum()
    }

    /// Denominators of all balls, heaviest first.
    pub fn balls(&self) -> Vec<usize> {
        self.counts
            .iter()
            .enumerate()
            .flat_map(|(j, &c)| std::iter::repeat_n(j + 2, c))
            .collect()
    }

    /// Adds one ball of weight `1/denominator`.
    pub fn with_ball(&self, denominator: usize) -> Self {
        let mut counts = self.counts.clone();
        if counts.len() < denominator - 1 {
            counts.resize(denominator - 1, 0);
        }
        counts[denominator - 2] += 1;
        PackingInstance { counts }
    }
}

impl fmt::Display for PackingInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .counts
            .iter()
            .enumerate()
            .map(|(j, c)| format!("l{}={c}", j + 2))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

/// Boxes, each listing the denominators of the balls it holds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Packing {
    pub boxes: Vec<Vec<usize>>,
}

impl Packing {
    pub fn box_count(&self) -> usize {
        self.boxes.len()
    }

    /// Every box satisfies `k · max weight ≤ 1`.
    pub fn is_correct(&self) -> bool {
        self.boxes
            .iter()
            .all(|b| b.iter().min().is_some_and(|&d| b.len() <= d))
    }
}

/// Greedy packing of consecutive items, row after row.
///
/// `rows[r] = (capacity, length)`. Items of row `r` are taken in order,
/// `capacity` per box; when a row runs out mid-box the box is topped up
/// with the first unpacked items of the following rows. Returns each box as
/// a list of `(row, position)`.
pub(crate) fn pack_rows(rows: &[(usize, usize)]) -> Vec<Vec<(usize, usize)>> {
    let mut next = vec![0usize; rows.len()];
    let mut boxes = Vec::new();
    for r in 0..rows.len() {
        let (capacity, len) = rows[r];
        while next[r] < len {
            let mut current = Vec::with_capacity(capacity);
            while current.len() < capacity && next[r] < len {
                current.push((r, next[r]));
                next[r] += 1;
            }
            let mut s = r + 1;
            while current.len() < capacity && s < rows.len() {
                if next[s] < rows[s].1 {
                    current.push((s, next[s]));
                    next[s] += 1;
                } else {
                    s += 1;
                }
            }
            boxes.push(current);
        }
    }
    boxes
}

/// The greedy packing: balls of weight `1/i` go `i` per box, heaviest class
/// first, and a short last box borrows the next lighter balls.
pub fn pack_star(instance: &PackingInstance) -> Packing {
    let rows: Vec<(usize, usize)> = instance
        .counts
        .iter()
        .enumerate()
        .map(|(j, &c)| (j + 2, c))
        .collect();
    let boxes = pack_rows(&rows)
        .into_iter()
        .map(|b| b.into_iter().map(|(r, _)| r + 2).collect())
        .collect();
    Packing { boxes }
}

/// Minimum number of boxes over all correct packings, by exhaustive
/// branch-and-bound.
pub fn pack_optimal(instance: &PackingInstance) -> Result<usize> {
    let balls = instance.balls();
    if balls.len() > MAX_OPTIMAL_BALLS {
        return Err(Error::capacity(
            "balls for exhaustive packing",
            MAX_OPTIMAL_BALLS,
            balls.len(),
        ));
    }
    if balls.is_empty() {
        return Ok(0);
    }
    // Each ball fits in its own box, so |balls| is always achievable.
    let mut best = balls.len();
    let mut boxes: Vec<(usize, usize)> = Vec::new();
    // suffix weight sums, scaled by the lcm of the denominators present
    let scale: usize = balls.iter().fold(1, |acc, &d| lcm(acc, d));
    let mut suffix = vec![0usize; balls.len() + 1];
    for j in (0..balls.len()).rev() {
        suffix[j] = suffix[j + 1] + scale / balls[j];
    }
    search_packing(&balls, 0, &mut boxes, &suffix, scale, &mut best);
    Ok(best)
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

// Balls arrive heaviest first, so a box's capacity is fixed by its first
// ball. Boxes are `(capacity, filled)`; boxes with equal state are
// interchangeable and only the first of them is tried.
fn search_packing(
    balls: &[usize],
    next: usize,
    boxes: &mut Vec<(usize, usize)>,
    suffix: &[usize],
    scale: usize,
    best: &mut usize,
) {
    if next == balls.len() {
        *best = (*best).min(boxes.len());
        return;
    }
    // free room in open boxes, in weight units
    let spare: usize = boxes
        .iter()
        .map(|&(cap, filled)| (cap - filled) * (scale / cap))
        .sum();
    let overflow = suffix[next].saturating_sub(spare);
    let lower = boxes.len() + overflow.div_ceil(scale);
    if lower >= *best {
        return;
    }
    let d = balls[next];
    let mut tried: Vec<(usize, usize)> = Vec::new();
    for i in 0..boxes.len() {
        let state = boxes[i];
        if state.1 < state.0 && !tried.contains(&state) {
            tried.push(state);
            boxes[i].1 += 1;
            search_packing(balls, next + 1, boxes, suffix, scale, best);
            boxes[i].1 -= 1;
        }
    }
    if boxes.len() + 1 < *best {
        boxes.push((d, 1));
        search_packing(balls, next + 1, boxes, suffix, scale, best);
        boxes.pop();
    }
}

/// Every instance with `2 ≤ m ≤ max_m` classes and at most `max_balls` balls.
pub fn small_instances(max_m: usize, max_balls: usize) -> Vec<PackingInstance> {
    let mut out = Vec::new();
    let classes = max_m.saturating_sub(1);
    let mut counts = vec![0usize; classes];
    enumerate_counts(&mut counts, 0, max_balls, &mut out);
    out
}

fn enumerate_counts(
    counts: &mut Vec<usize>,
    j: usize,
    left: usize,
    out: &mut Vec<PackingInstance>,
) {
    if j == counts.len() {
        out.push(PackingInstance::new(counts.clone()));
        return;
    }
    for c in 0..=left {
        counts[j] = c;
        enumerate_counts(counts, j + 1, left - c, out);
    }
    counts[j] = 0;
}

/// Instances on which the greedy packing is beaten by the exhaustive optimum.
pub fn greedy_counterexamples(max_m: usize, max_balls: usize) -> Result<Vec<PackingInstance>> {
    let mut bad = Vec::new();
    for instance in small_instances(max_m, max_balls) {
        if pack_star(&instance).box_count() != pack_optimal(&instance)? {
            bad.push(instance);
        }
    }
    Ok(bad)
}
