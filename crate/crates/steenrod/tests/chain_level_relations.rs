//! Relations between the diagonal, counit, join, and surjection evaluation
//! on simplicial and cubical chains, exercised through the public interface.

use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use steenrod::chains::{
    chain_boundary, chain_counit, chain_diagonal, chain_join, cube_faces, evaluate_surjection,
    simplex_faces, standard_cube, standard_simplex, ChainGeometry, Cubical, Simplicial,
};
use steenrod::coeff::{
    permute_tensor_factors, tensor_boundary, BasisKey, Element, Ring, TensorKey,
};
use steenrod::perm::Permutation;
use steenrod::surjection::{is_nondegenerate, sj_act, sj_boundary, SjKey};

fn basis<K: BasisKey>(k: &K) -> Element<K> {
    Element::term(Ring::Int, k.clone(), 1)
}

/// (epsilon tensor id) Delta = id = (id tensor epsilon) Delta.
fn counit_laws_hold<G: ChainGeometry>(k: &G::Key) -> bool {
    let x = basis(k);
    let mut left = Element::zero(Ring::Int);
    let mut right = Element::zero(Ring::Int);
    for (t, c) in chain_diagonal::<G>(&x).iter() {
        let (a, b) = (&t.0[0], &t.0[1]);
        left.add_term(b.clone(), c * G::counit(a));
        right.add_term(a.clone(), c * G::counit(b));
    }
    left == x && right == x
}

/// Delta is a chain map: Delta(boundary x) = tensor-boundary(Delta x).
fn diagonal_chain_map_holds<G: ChainGeometry>(x: &Element<G::Key>) -> bool {
    let lhs = chain_diagonal::<G>(&chain_boundary::<G>(x));
    let rhs = tensor_boundary(&chain_diagonal::<G>(x), |k| chain_boundary::<G>(&basis(k)));
    lhs == rhs
}

/// (Delta tensor id) Delta = (id tensor Delta) Delta.
fn coassociativity_holds<G: ChainGeometry>(k: &G::Key) -> bool {
    let two = chain_diagonal::<G>(&basis(k));
    let mut left = Element::zero(Ring::Int);
    let mut right = Element::zero(Ring::Int);
    for (t, c) in two.iter() {
        let (a, b) = (&t.0[0], &t.0[1]);
        for (u, d) in chain_diagonal::<G>(&basis(a)).iter() {
            left.add_term(TensorKey(vec![u.0[0].clone(), u.0[1].clone(), b.clone()]), c * d);
        }
        for (u, d) in chain_diagonal::<G>(&basis(b)).iter() {
            right.add_term(TensorKey(vec![a.clone(), u.0[0].clone(), u.0[1].clone()]), c * d);
        }
    }
    left == right
}

/// The join contracts the counit: boundary(x * y) + (boundary x) * y
/// +- x * (boundary y) = counit(x) y - counit(y) x.
fn join_homotopy_holds<G: ChainGeometry>(x: &G::Key, y: &G::Key) -> bool {
    let ex = basis(x);
    let ey = basis(y);
    let mut lhs = chain_boundary::<G>(&chain_join::<G>(&ex, &ey));
    lhs = lhs.add(&chain_join::<G>(&chain_boundary::<G>(&ex), &ey));
    let inner = chain_join::<G>(&ex, &chain_boundary::<G>(&ey));
    lhs = if x.degree() % 2 == 0 { lhs.add(&inner) } else { lhs.sub(&inner) };
    let rhs = ey.scale(G::counit(x)).sub(&ex.scale(G::counit(y)));
    lhs == rhs
}

#[test]
fn simplicial_comonoid_relations() {
    for k in simplex_faces(4) {
        assert!(counit_laws_hold::<Simplicial>(&k), "counit on {}", k.render());
        assert!(diagonal_chain_map_holds::<Simplicial>(&basis(&k)), "chain map on {}", k.render());
        assert!(coassociativity_holds::<Simplicial>(&k), "coassoc on {}", k.render());
    }
    for x in simplex_faces(3) {
        for y in simplex_faces(3) {
            // The join lands in positive degree, where the counit vanishes.
            assert_eq!(chain_counit::<Simplicial>(&chain_join::<Simplicial>(&basis(&x), &basis(&y))), 0);
            assert!(join_homotopy_holds::<Simplicial>(&x, &y), "{} * {}", x.render(), y.render());
        }
    }
}

#[test]
fn cubical_comonoid_relations() {
    for k in cube_faces(3) {
        assert!(counit_laws_hold::<Cubical>(&k), "counit on {}", k.render());
        assert!(diagonal_chain_map_holds::<Cubical>(&basis(&k)), "chain map on {}", k.render());
        assert!(coassociativity_holds::<Cubical>(&k), "coassoc on {}", k.render());
    }
    for x in cube_faces(2) {
        for y in cube_faces(2) {
            assert_eq!(chain_counit::<Cubical>(&chain_join::<Cubical>(&basis(&x), &basis(&y))), 0);
            assert!(join_homotopy_holds::<Cubical>(&x, &y), "{} * {}", x.render(), y.render());
        }
    }
}

fn random_surjection(rng: &mut ChaCha8Rng, r: usize, len: usize) -> SjKey {
    loop {
        let mut seq = Vec::with_capacity(len);
        for _ in 0..len {
            seq.push(rng.gen_range(1..=r as u8));
        }
        if is_nondegenerate(&seq, r) {
            return SjKey::new(seq, r).expect("nondegenerate word");
        }
    }
}

fn boundary_compatible<G: ChainGeometry>(s: &SjKey, chain: &Element<G::Key>) -> bool {
    let e = evaluate_surjection::<G>(s, chain, None);
    let lhs = tensor_boundary(&e, |k| chain_boundary::<G>(&basis(k)));
    let inner = evaluate_surjection::<G>(s, &chain_boundary::<G>(chain), None);
    let lhs = if s.degree() % 2 == 0 { lhs.sub(&inner) } else { lhs.add(&inner) };
    let mut rhs = Element::zero(Ring::Int);
    for (face, c) in sj_boundary(&basis(s)).iter() {
        rhs = rhs.add(&evaluate_surjection::<G>(face, chain, None).scale(c));
    }
    lhs == rhs
}

#[test]
fn evaluation_is_a_chain_map_on_random_generators() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    let simplex = basis(&standard_simplex(3));
    let cube = basis(&standard_cube(3));
    for _ in 0..60 {
        let r = rng.gen_range(2..=4);
        let len = rng.gen_range(r..=7.min(r + 4));
        let s = random_surjection(&mut rng, r, len);
        assert!(boundary_compatible::<Simplicial>(&s, &simplex), "simplicial {:?}", s.0);
        assert!(boundary_compatible::<Cubical>(&s, &cube), "cubical {:?}", s.0);
    }
}

#[test]
fn evaluation_is_equivariant_on_random_generators() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    let simplex = basis(&standard_simplex(4));
    for _ in 0..40 {
        let r = rng.gen_range(2..=3);
        let len = rng.gen_range(r..=r + 3);
        let s = random_surjection(&mut rng, r, len);
        let mut images: Vec<u8> = (1..=r as u8).collect();
        for i in (1..images.len()).rev() {
            let j = rng.gen_range(0..=i);
            images.swap(i, j);
        }
        let g = Permutation::from_images(images);
        let acted = sj_act(&g, &basis(&s));
        let mut lhs = Element::zero(Ring::Int);
        for (key, c) in acted.iter() {
            lhs = lhs.add(&evaluate_surjection::<Simplicial>(key, &simplex, None).scale(c));
        }
        let perm: Vec<usize> = (1..=r as u8).map(|v| g.apply(v) as usize - 1).collect();
        let rhs =
            permute_tensor_factors(&perm, &evaluate_surjection::<Simplicial>(&s, &simplex, None));
        assert_eq!(lhs, rhs, "equivariance fails for {:?}", s.0);
    }
}

/// Strategy: an integer chain supported on the faces of the 3-simplex.
fn simplicial_chain() -> impl Strategy<Value = Element<steenrod::chains::SimplexKey>> {
    let faces = simplex_faces(3);
    let n = faces.len();
    prop::collection::vec((0..n, -4i64..=4), 0..6).prop_map(move |picks| {
        let mut x = Element::zero(Ring::Int);
        for (i, c) in picks {
            x.add_term(faces[i].clone(), c);
        }
        x
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn boundary_squares_to_zero_on_random_chains(x in simplicial_chain()) {
        prop_assert!(chain_boundary::<Simplicial>(&chain_boundary::<Simplicial>(&x)).is_zero());
    }

    #[test]
    fn diagonal_is_linear_and_a_chain_map(x in simplicial_chain()) {
        prop_assert!(diagonal_chain_map_holds::<Simplicial>(&x));
    }
}
