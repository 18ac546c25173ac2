use proptest::prelude::*;

use zopoly::exact::rank_i64;
use zopoly::generators::{
    classify, cross_polytope, key_to_vertex_set, simplicial_2d_search,
};
use zopoly::polytope::{apply_symmetry, canonical_key, is_01_equivalent, CubeSymmetry, VertexSet01};

/// Hyperoctahedral group of the d-cube as permutations of the points
/// `0..2^d`, built directly from coordinate permutations and flips.
fn cube_group(d: usize) -> Vec<Vec<usize>> {
    fn perms(d: usize) -> Vec<Vec<usize>> {
        if d == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(d - 1) {
            for pos in 0..d {
                let mut q = p.clone();
                q.insert(pos, d - 1);
                out.push(q);
            }
        }
        out
    }
    let n = 1usize << d;
    let mut group = Vec::new();
    for p in perms(d) {
        for flip in 0..n {
            let act = (0..n)
                .map(|x| {
                    let mut y = 0;
                    for (i, &pi) in p.iter().enumerate() {
                        y |= (x >> i & 1) << pi;
                    }
                    y ^ flip
                })
                .collect();
            group.push(act);
        }
    }
    group
}

fn cycles(perm: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; perm.len()];
    let mut out = Vec::new();
    for s in 0..perm.len() {
        if seen[s] {
            continue;
        }
        let mut c = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            c.push(x);
            x = perm[x];
        }
        out.push(c);
    }
    out
}

fn full_dimensional(points: &[usize], d: usize) -> bool {
    if points.len() <= d {
        return false;
    }
    let base = points[0];
    let rows: Vec<Vec<i64>> = points[1..]
        .iter()
        .map(|&p| (0..d).map(|i| (p >> i & 1) as i64 - (base >> i & 1) as i64).collect())
        .collect();
    rank_i64(&rows) == d
}

/// Burnside: orbits of full-dimensional point sets are the average number
/// of full-dimensional sets fixed by a group element, i.e. unions of its
/// cycles.
fn burnside_full_dimensional(d: usize) -> usize {
    let group = cube_group(d);
    let mut fixed = 0usize;
    for g in &group {
        let cs = cycles(g);
        for mask in 0u64..1 << cs.len() {
            let pts: Vec<usize> = (0..cs.len())
                .filter(|&k| mask >> k & 1 == 1)
                .flat_map(|k| cs[k].iter().copied())
                .collect();
            if full_dimensional(&pts, d) {
                fixed += 1;
            }
        }
    }
    assert_eq!(fixed % group.len(), 0);
    fixed / group.len()
}

#[test]
fn class_counts_match_burnside() {
    for d in 1..=4 {
        assert_eq!(classify(d).unwrap().len(), burnside_full_dimensional(d), "d={d}");
    }
}

#[test]
fn keys_are_fixed_points() {
    for d in 1..=3 {
        for k in classify(d).unwrap() {
            let p = key_to_vertex_set(&k).unwrap();
            assert_eq!(canonical_key(&p).unwrap(), k);
        }
    }
}

#[test]
fn octahedron_is_the_only_simplicial_three_polytope_with_six_vertices() {
    let found = simplicial_2d_search(3).unwrap();
    assert_eq!(found.len(), 1);
    assert!(found[0].standard_cross);
    let p = key_to_vertex_set(&found[0].key).unwrap();
    assert!(is_01_equivalent(&p, &cross_polytope(3).unwrap()).unwrap());
}

fn vertex_sets(max_d: usize) -> impl Strategy<Value = VertexSet01> {
    (1..=max_d).prop_flat_map(|d| {
        proptest::collection::btree_set(0u128..1 << d, 1..=1usize << d)
            .prop_map(move |s| VertexSet01::from_words(d, s).unwrap())
    })
}

proptest! {
    #[test]
    fn key_is_symmetry_invariant(p in vertex_sets(6), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let g = CubeSymmetry::random(p.dim(), &mut rng);
        let q = apply_symmetry(&p, &g).unwrap();
        prop_assert_eq!(canonical_key(&p).unwrap(), canonical_key(&q).unwrap());
        prop_assert!(is_01_equivalent(&p, &q).unwrap());
    }

    #[test]
    fn key_round_trips_to_an_equivalent_set(p in vertex_sets(5)) {
        let k = canonical_key(&p).unwrap();
        let q = key_to_vertex_set(&k).unwrap();
        prop_assert_eq!(q.len(), p.len());
        prop_assert_eq!(canonical_key(&q).unwrap(), k);
    }
}
