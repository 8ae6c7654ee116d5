use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::families::{Facet, FamilyTag};
use crate::nested::Subset;

use super::Colouring;

/// `h(Y)` and the forbidden set `F_Y ⊆ N⁺`, stored as a bitmask (bit `v`
/// for value `v`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HValue {
    pub h: u32,
    pub forbidden: u128,
}

impl HValue {
    /// Elements of `F_Y` in increasing order.
    pub fn forbidden_values(&self) -> Vec<u32> {
        (1..128).filter(|&v| self.forbidden >> v & 1 == 1).collect()
    }
}

/// Memoised evaluation of `h` on finite sets `Y ∋ 0`, given as bitmasks.
///
/// ```text
/// F_{0} = ∅, h({0}) = 1
/// F_Y = (Y − {0}) ∪ {1} ∪ ⋃_j (F_{Y−{i_j}} ∪ {h(Y−{i_j})})
/// h(Y) = min(N⁺ − F_Y)
/// ```
#[derive(Clone, Debug, Default)]
pub struct StelloH {
    memo: HashMap<u64, HValue>,
}

impl StelloH {
    pub fn new() -> Self {
        Self::default()
    }

    /// `bits` must contain bit 0.
    pub fn get(&mut self, bits: u64) -> HValue {
        debug_assert!(bits & 1 == 1);
        if let Some(&v) = self.memo.get(&bits) {
            return v;
        }
        let value = if bits == 1 {
            HValue { h: 1, forbidden: 0 }
        } else {
            let rest = bits & !1;
            let mut forbidden = u128::from(rest) | 1 << 1;
            let mut others = rest;
            while others != 0 {
                let i = others.trailing_zeros();
                others &= others - 1;
                let z = self.get(bits & !(1 << i));
                forbidden |= z.forbidden | 1 << z.h;
            }
            let h = (!forbidden & !1).trailing_zeros();
            HValue { h, forbidden }
        };
        self.memo.insert(bits, value);
        value
    }

    pub fn len(&self) -> usize {
        self.memo.len()
    }

    pub fn is_empty(&self) -> bool {
        self.memo.is_empty()
    }
}

/// `h(Y)` and `F_Y` for a single set.
pub fn stello_h(y: Subset) -> Result<HValue> {
    if !y.contains(0) {
        return Err(Error::domain(format!("{y} does not contain 0")));
    }
    Ok(StelloH::new().get(y.bits()))
}

/// The colouring of the `n`-dimensional stellohedron with
/// `2n − 1 − ⌊(n−1)/2⌋` colours: singletons `{i}` get `i` (with `{0}`
/// and `{1}` sharing 1), small facets get `h`, large ones are coloured by
/// size.
pub fn stello_colouring(n: usize) -> Result<Colouring<Facet>> {
    let tag = FamilyTag::stellohedron(n)?;
    let facets = tag.facets()?;
    let small = (n - 1) / 2;
    let mut h = StelloH::new();
    let colours = facets
        .iter()
        .map(|f| {
            let y = f.as_set().expect("stellohedron facets are sets");
            if !y.contains(0) {
                return y.min().expect("nonempty facet") as u32;
            }
            match y.len() - 1 {
                0 => 1,
                k if k <= small => h.get(y.bits()).h,
                k => (n + k - small) as u32,
            }
        })
        .collect();
    Colouring::new(facets, colours)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colourings::{stello_colour_count, validate};

    fn y(elements: &[usize]) -> Subset {
        Subset::from_elements(10, elements.iter().copied()).unwrap()
    }

    #[test]
    fn listed_values() {
        let v = stello_h(y(&[0, 1])).unwrap();
        assert_eq!((v.h, v.forbidden_values()), (2, vec![1]));
        let v = stello_h(y(&[0, 2])).unwrap();
        assert_eq!((v.h, v.forbidden_values()), (3, vec![1, 2]));
        for i in 3..=10 {
            let v = stello_h(y(&[0, i])).unwrap();
            assert_eq!((v.h, v.forbidden_values()), (2, vec![1, i as u32]));
        }
        let v = stello_h(y(&[0, 4, 7])).unwrap();
        assert_eq!((v.h, v.forbidden_values()), (3, vec![1, 2, 4, 7]));
        assert!(stello_h(y(&[1])).is_err());
    }

    #[test]
    fn colourings_validate() {
        for n in 1..=8 {
            let c = stello_colouring(n).unwrap();
            assert_eq!(c.colour_count() as u64, stello_colour_count(n), "n={n}");
            assert!(
                validate(&c, &FamilyTag::stellohedron(n).unwrap()).unwrap(),
                "n={n}"
            );
        }
    }
}
