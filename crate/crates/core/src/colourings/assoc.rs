use crate::error::Result;
use crate::families::{Facet, FamilyTag, Segment};
use crate::packing::pack_rows;

use super::{Block, Colouring, Placement};

// Row i (2 ≤ i ≤ ⌈n/2⌉+1) holds the segments of length i−1, then those of
// length n−i+2; when the two lengths agree the row is a single block.
fn rows(n: usize) -> Vec<Vec<(Segment, Block)>> {
    let top = n.div_ceil(2) + 1;
    (2..=top)
        .map(|i| {
            let short = i - 1;
            let long = n + 2 - i;
            let mut row: Vec<_> = (0..=n + 1 - short)
                .map(|a| (Segment::new(a, a + short - 1), Block::Left))
                .collect();
            if long != short {
                row.extend(
                    (0..=n + 1 - long).map(|a| (Segment::new(a, a + long - 1), Block::Right)),
                );
            }
            row
        })
        .collect()
}

/// The row-packing colouring of the `n`-dimensional associahedron, using
/// exactly `alpha(n)` colours. Each facet keeps its row placement.
pub fn assoc_colouring(n: usize) -> Result<Colouring<Facet>> {
    FamilyTag::associahedron(n)?;
    let rows = rows(n);
    let shape: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .map(|(r, row)| (r + 2, row.len()))
        .collect();
    let mut facets = Vec::new();
    let mut colours = Vec::new();
    let mut placements = Vec::new();
    for (b, packed) in pack_rows(&shape).into_iter().enumerate() {
        for (r, pos) in packed {
            let (segment, block) = rows[r][pos];
            facets.push(Facet::Segment(segment));
            colours.push(b as u32 + 1);
            placements.push(Placement {
                row: r + 2,
                block,
                position: pos,
            });
        }
    }
    Ok(Colouring::new(facets, colours)?.with_placements(placements))
}
