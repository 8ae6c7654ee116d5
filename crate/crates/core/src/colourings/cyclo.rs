use std::collections::HashMap;

use crate::chroma::{exact_chromatic, ConflictGraph, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::families::{cyclic_add, Facet, FamilyTag, Segment};
use crate::packing::pack_rows;

use super::{Block, Colouring, Placement};

/// One left-block colour class `X_1, …, X_i` of the cyclohedron colouring,
/// together with the segments `Y_1, …, Y_{i−1}` that may join it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtendedClass {
    /// Row the class starts in; also its size `i`.
    pub row: usize,
    pub xs: Vec<Segment>,
    pub ys: Vec<Segment>,
}

struct Layout {
    /// Left-block boxes starting before the last row, as (row, segments).
    early: Vec<(usize, Vec<(Segment, Placement)>)>,
    right: Vec<Vec<(Segment, Placement)>>,
    /// Boxes made of what the last row has left after borrowing.
    late: Vec<Vec<(Segment, Placement)>>,
}

fn layout(n: usize) -> Result<Layout> {
    if n < 2 {
        return Err(Error::domain("the cyclohedron colouring needs n ≥ 2"));
    }
    FamilyTag::cyclohedron(n)?;
    let top = n.div_ceil(2) + 1;
    let shape: Vec<(usize, usize)> = (2..=top)
        .map(|i| (if i < top { i } else { n + 1 }, n + 1))
        .collect();
    let left = |r: usize, pos: usize| {
        let i = r + 2;
        (
            Segment::cyclic(pos, i - 1, n),
            Placement {
                row: i,
                block: Block::Left,
                position: pos,
            },
        )
    };
    let mut early = Vec::new();
    let mut late = Vec::new();
    for packed in pack_rows(&shape) {
        let first_row = packed[0].0 + 2;
        let items: Vec<_> = packed.into_iter().map(|(r, pos)| left(r, pos)).collect();
        if first_row < top {
            early.push((first_row, items));
        } else {
            late.push(items);
        }
    }
    let right = (2..=top)
        .filter(|&i| n + 2 - i > i - 1)
        .map(|i| {
            (0..=n)
                .map(|a| {
                    (
                        Segment::cyclic(a, n + 2 - i, n),
                        Placement {
                            row: i,
                            block: Block::Right,
                            position: n + 1 + a,
                        },
                    )
                })
                .collect()
        })
        .collect();
    Ok(Layout { early, right, late })
}

/// The two-block colouring of the `n`-dimensional cyclohedron with
/// `Σ (A_i + 1)` colours: left blocks packed like the associahedron rows,
/// each right block one colour.
pub fn cyclo_colouring(n: usize) -> Result<Colouring<Facet>> {
    let layout = layout(n)?;
    let mut facets = Vec::new();
    let mut colours = Vec::new();
    let mut placements = Vec::new();
    let boxes = layout
        .early
        .iter()
        .map(|(_, b)| b)
        .chain(&layout.right)
        .chain(&layout.late);
    for (c, items) in boxes.enumerate() {
        for &(s, p) in items {
            facets.push(Facet::Segment(s));
            colours.push(c as u32 + 1);
            placements.push(p);
        }
    }
    Ok(Colouring::new(facets, colours)?.with_placements(placements))
}

/// The left-block classes of rows `2..=⌈n/2⌉` with their `Y` sequences
/// `Y_l = [a_i ⊞ l, a_1 ⊞ (n + l − 1)]`, `a_i = a_1 ⊞ (i − 1)`.
pub fn extended_classes(n: usize) -> Result<Vec<ExtendedClass>> {
    let layout = layout(n)?;
    Ok(layout
        .early
        .into_iter()
        .filter(|(row, items)| items.len() == *row)
        .map(|(i, items)| {
            let xs: Vec<Segment> = items.into_iter().map(|(s, _)| s).collect();
            let a1 = xs[0].start;
            let ai = cyclic_add(a1, i - 1, n);
            let ys = (1..i)
                .map(|l| Segment::new(cyclic_add(ai, l, n), cyclic_add(a1, n + l - 1, n)))
                .collect();
            ExtendedClass { row: i, xs, ys }
        })
        .collect())
}

/// [`cyclo_improve_with_budget`] with the default solver budget.
pub fn cyclo_improve(n: usize) -> Result<Colouring<Facet>> {
    cyclo_improve_with_budget(n, DEFAULT_BUDGET)
}

/// Extends every left-block class by its `Y` sequence when none of the
/// `Y_l` is coloured yet (classes taken in row order), then colours the
/// remaining facets with the exact solver. Never returns more colours than
/// [`cyclo_colouring`].
pub fn cyclo_improve_with_budget(n: usize, budget: u64) -> Result<Colouring<Facet>> {
    if n < 4 {
        return Err(Error::domain("cyclo_improve needs n ≥ 4"));
    }
    let tag = FamilyTag::cyclohedron(n)?;
    let base = cyclo_colouring(n)?;
    let classes = extended_classes(n)?;
    let mut colour: HashMap<Segment, u32> = HashMap::new();
    for (c, class) in classes.iter().enumerate() {
        for &x in &class.xs {
            colour.insert(x, c as u32 + 1);
        }
    }
    for (c, class) in classes.iter().enumerate() {
        if class.ys.iter().all(|y| !colour.contains_key(y)) {
            for &y in &class.ys {
                colour.insert(y, c as u32 + 1);
            }
        }
    }
    let facets = tag.facets()?;
    let residue: Vec<Facet> = facets
        .iter()
        .filter(|f| f.as_segment().is_some_and(|s| !colour.contains_key(&s)))
        .copied()
        .collect();
    let mut edges = Vec::new();
    for i in 0..residue.len() {
        for j in i + 1..residue.len() {
            if tag.conflicts_unchecked(&residue[i], &residue[j]) {
                edges.push((i, j));
            }
        }
    }
    let graph = ConflictGraph::from_edges(residue.len(), &edges)?;
    let solved = exact_chromatic(&graph, budget);
    let offset = classes.len() as u32;
    for (f, c) in residue.iter().zip(&solved.witness) {
        colour.insert(f.as_segment().expect("segment facet"), offset + c);
    }
    if offset + solved.upper > base.colour_count() {
        return Ok(base);
    }
    let colours = facets
        .iter()
        .map(|f| colour[&f.as_segment().expect("segment facet")])
        .collect();
    Colouring::new(facets, colours)
}

/// Colours used by [`cyclo_colouring`] for any `n ≥ 2`, without building it.
pub fn cyclo_colour_count(n: usize) -> Result<u64> {
    super::gamma_upper(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colourings::{gamma_upper, validate};

    #[test]
    fn counts_match_the_recurrence() {
        for n in 2..=12 {
            let tag = FamilyTag::cyclohedron(n).unwrap();
            let c = cyclo_colouring(n).unwrap();
            assert_eq!(c.len(), n * (n + 1));
            assert_eq!(c.colour_count() as u64, gamma_upper(n).unwrap(), "n={n}");
            assert!(validate(&c, &tag).unwrap(), "n={n}");
        }
        assert!(cyclo_colouring(1).is_err());
    }

    #[test]
    fn first_classes_for_n7() {
        let classes = extended_classes(7).unwrap();
        assert_eq!(classes.len(), 9);
        let show = |v: &[Segment]| {
            v.iter()
                .map(|s| s.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        };
        assert_eq!(show(&classes[0].xs), "[0,0] [1,1]");
        assert_eq!(show(&classes[0].ys), "[2,7]");
        assert_eq!(show(&classes[8].xs), "[5,7] [6,0] [7,1] [0,3]");
        assert_eq!(show(&classes[8].ys), "[1,4] [2,5] [3,6]");
    }

    #[test]
    fn improvement_never_hurts() {
        for n in 4..=8 {
            let tag = FamilyTag::cyclohedron(n).unwrap();
            let c = cyclo_improve(n).unwrap();
            assert!(validate(&c, &tag).unwrap(), "n={n}");
            assert!(c.colour_count() as u64 <= gamma_upper(n).unwrap());
        }
        assert!(cyclo_improve(3).is_err());
    }
}
