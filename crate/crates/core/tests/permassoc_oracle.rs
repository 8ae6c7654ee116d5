use std::collections::{BTreeSet, HashMap, HashSet};

use itertools::Itertools;
use nestochroma::permassoc::chain_m_members;
use nestochroma::{pa_colouring, pa_conflicts, pa_facets, PaFacet, Subset};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Collection = BTreeSet<u64>;

// Every chain {i_{k+l}..i_1} ⊃ … ⊃ {i_{k+l}..i_k} over injective sequences.
fn b1(n: usize) -> HashSet<Collection> {
    let mut out = HashSet::new();
    for len in 1..=n {
        for seq in (0..=n).permutations(len) {
            for k in 1..=len {
                let sets: Collection = (1..=k)
                    .map(|j| seq[j - 1..].iter().fold(0u64, |acc, &x| acc | 1 << x))
                    .collect();
                out.insert(sets);
            }
        }
    }
    out
}

fn collection(f: &PaFacet) -> Collection {
    f.sets().iter().map(|s| s.bits()).collect()
}

fn is_chain(c: &Collection) -> bool {
    let v: Vec<u64> = c.iter().copied().collect();
    v.iter()
        .enumerate()
        .all(|(i, &a)| v[i + 1..].iter().all(|&b| a & b == a || a & b == b))
}

// Nested with respect to 𝓑₁ inside the complex of chains: the union of every
// antichain of members is a chain that is not itself in 𝓑₁.
fn one_nested(members: &[Collection], b1: &HashSet<Collection>) -> bool {
    let k = members.len();
    (1u32..1 << k).filter(|m| m.count_ones() >= 2).all(|m| {
        let picked: Vec<&Collection> = (0..k)
            .filter(|i| m >> i & 1 == 1)
            .map(|i| &members[i])
            .collect();
        let antichain = picked.iter().enumerate().all(|(i, a)| {
            picked[i + 1..]
                .iter()
                .all(|b| !a.is_subset(b) && !b.is_subset(a))
        });
        if !antichain {
            return true;
        }
        let union: Collection = picked.iter().flat_map(|c| c.iter().copied()).collect();
        is_chain(&union) && !b1.contains(&union)
    })
}

fn apply(pi: &[usize], c: &Collection) -> Collection {
    c.iter()
        .map(|&s| {
            (0..pi.len())
                .filter(|&x| s >> x & 1 == 1)
                .fold(0u64, |acc, x| acc | 1 << pi[x])
        })
        .collect()
}

#[test]
fn enumeration_matches_the_sequence_description() {
    for n in 1..=4 {
        let ours: HashSet<Collection> = pa_facets(n).unwrap().iter().map(collection).collect();
        assert_eq!(ours, b1(n), "n={n}");
    }
}

#[test]
fn conflicts_match_one_nestedness() {
    for n in 1..=3 {
        let oracle = b1(n);
        let facets = pa_facets(n).unwrap();
        for a in &facets {
            for b in &facets {
                let pair = [collection(a), collection(b)];
                let share = a == b || one_nested(&pair, &oracle);
                assert_eq!(pa_conflicts(a, b), share, "n={n}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn b1_is_closed_under_permutations() {
    for n in 1..=4 {
        let oracle = b1(n);
        for pi in (0..=n).permutations(n + 1) {
            for a in &oracle {
                assert!(oracle.contains(&apply(&pi, a)), "n={n}");
            }
        }
        for f in pa_facets(n).unwrap() {
            let pi: Vec<usize> = (0..=n).rev().collect();
            assert!(oracle.contains(&collection(&f.permute(&pi).unwrap())));
        }
    }
}

#[test]
fn chain_members_have_disjoint_orbits() {
    for n in 1..=4 {
        let members = chain_m_members(n).unwrap();
        let signatures: HashSet<_> = members.iter().map(|m| m.signature()).collect();
        assert_eq!(signatures.len(), members.len(), "n={n}");
        let mut owner: HashMap<Collection, usize> = HashMap::new();
        for pi in (0..=n).permutations(n + 1) {
            for (i, m) in members.iter().enumerate() {
                let image = apply(&pi, &collection(m));
                assert_eq!(*owner.entry(image).or_insert(i), i, "n={n}");
            }
        }
        assert_eq!(
            owner.len(),
            pa_facets(n).unwrap().len(),
            "orbits cover every facet, n={n}"
        );
    }
}

#[test]
fn signature_colourings_localise() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=3 {
        let oracle = b1(n);
        let members = chain_m_members(n).unwrap();
        let facets = pa_facets(n).unwrap();
        let mut proper_seen = 0;
        for _ in 0..300 {
            let palette = rng.gen_range(1..=members.len() as u32);
            let by_signature: HashMap<(usize, usize), u32> = members
                .iter()
                .map(|m| (m.signature(), rng.gen_range(1..=palette)))
                .collect();
            let colour = |f: &PaFacet| by_signature[&f.signature()];
            let local_ok = members.iter().tuple_combinations().all(|(a, b)| {
                colour(a) != colour(b) || !one_nested(&[collection(a), collection(b)], &oracle)
            });
            if !local_ok {
                continue;
            }
            proper_seen += 1;
            let global_ok = facets
                .iter()
                .tuple_combinations()
                .all(|(a, b)| colour(a) != colour(b) || !pa_conflicts(a, b));
            assert!(global_ok, "n={n}: {by_signature:?}");
        }
        assert!(proper_seen > 0, "n={n}: no proper local colouring sampled");
    }
}

#[test]
fn signature_colouring_is_proper_against_the_oracle() {
    for n in 1..=3 {
        let oracle = b1(n);
        let c = pa_colouring(n).unwrap();
        let facets = c.facets();
        for (i, a) in facets.iter().enumerate() {
            for b in &facets[i + 1..] {
                if c.colour_of(a) == c.colour_of(b) {
                    assert!(
                        !one_nested(&[collection(a), collection(b)], &oracle),
                        "n={n}: {a} {b}"
                    );
                }
            }
        }
    }
}

#[test]
fn malformed_chains_are_rejected() {
    let s = |xs: &[usize]| Subset::from_elements(3, xs.iter().copied()).unwrap();
    assert!(PaFacet::new(3, vec![s(&[0]), s(&[0, 1, 2])]).is_err());
    assert!(PaFacet::new(3, vec![s(&[0]), s(&[1, 2])]).is_err());
    assert!(PaFacet::new(3, vec![s(&[0, 1, 2, 3])]).is_err());
    assert!(PaFacet::new(3, vec![]).is_err());
    assert!(PaFacet::new(3, vec![s(&[1, 2]), s(&[2])]).is_ok());
}
