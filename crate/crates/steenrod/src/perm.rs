//! Permutations of `{1..r}`, the cyclic rotation `rho`, and the group-ring
//! elements `T = rho - 1` and `N = 1 + rho + ... + rho^(r-1)`.

use crate::coeff::{BasisKey, Element, Ring};

/// A permutation of `{1..r}` in one-line notation: `images[i-1]` is the image
/// of `i`. Values are 1-based to match the surjection alphabet `{1..r}`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// Build from a one-line image list; panics unless it is a bijection of
    /// `{1..r}`.
    pub fn from_images(images: Vec<u8>) -> Permutation {
        let r = images.len();
        assert!(r >= 1, "permutations act on at least one point");
        let mut seen = vec![false; r];
        for &v in &images {
            assert!(
                v >= 1 && (v as usize) <= r && !seen[v as usize - 1],
                "not a bijection of {{1..{r}}}: {images:?}"
            );
            seen[v as usize - 1] = true;
        }
        Permutation { images }
    }

    pub fn identity(r: usize) -> Permutation {
        Permutation::from_images((1..=r as u8).collect())
    }

    /// Number of points permuted.
    pub fn arity(&self) -> usize {
        self.images.len()
    }

    /// Image of `i` (1-based).
    pub fn apply(&self, i: u8) -> u8 {
        self.images[i as usize - 1]
    }

    /// Composition `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.arity(), other.arity(), "arity mismatch in composition");
        Permutation {
            images: (1..=self.arity() as u8).map(|i| self.apply(other.apply(i))).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.arity()];
        for i in 1..=self.arity() as u8 {
            images[self.apply(i) as usize - 1] = i;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// One-line images as a slice.
    pub fn images(&self) -> &[u8] {
        &self.images
    }
}

impl BasisKey for Permutation {
    fn degree(&self) -> i64 {
        0
    }
    fn render(&self) -> String {
        let parts: Vec<String> = self.images.iter().map(|v| v.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// The rotation power `rho^k` on `{1..r}`, where `rho` sends `i` to `i + 1`
/// mod `r`; `k` may be any integer.
pub fn rho(r: usize, k: i64) -> Permutation {
    assert!(r >= 1, "rho requires r >= 1");
    let images = (0..r)
        .map(|i| {
            let j = (i as i64 + k).rem_euclid(r as i64);
            j as u8 + 1
        })
        .collect();
    Permutation::from_images(images)
}

/// Group-ring element: an integer combination of permutations of one arity.
pub type GroupRing = Element<Permutation>;

/// `T = rho - 1` in `Z[C_r]`.
pub fn twist_element(r: usize) -> GroupRing {
    let mut t = Element::zero(Ring::Int);
    t.add_term(rho(r, 1), 1);
    t.add_term(Permutation::identity(r), -1);
    t
}

/// `N = 1 + rho + ... + rho^(r-1)` in `Z[C_r]`.
pub fn norm_element(r: usize) -> GroupRing {
    let mut n = Element::zero(Ring::Int);
    for k in 0..r {
        n.add_term(rho(r, k as i64), 1);
    }
    n
}

/// Convolution product of group-ring elements (same arity).
pub fn group_ring_multiply(a: &GroupRing, b: &GroupRing) -> GroupRing {
    let ring = a.ring();
    assert_eq!(ring, b.ring(), "ring mismatch in group-ring product");
    let mut out = Element::zero(ring);
    for (g, cg) in a.iter() {
        for (h, ch) in b.iter() {
            assert_eq!(g.arity(), h.arity(), "arity mismatch in group-ring product");
            out.add_term(g.compose(h), ring.mul(cg, ch));
        }
    }
    out
}

/// Act by a group-ring element through a key-level group action, extending
/// linearly in both arguments.
pub fn group_ring_act<K: BasisKey>(
    a: &GroupRing,
    x: &Element<K>,
    mut act: impl FnMut(&Permutation, &Element<K>) -> Element<K>,
) -> Element<K> {
    let ring = x.ring();
    assert_eq!(a.ring(), ring, "ring mismatch in group-ring action");
    let mut out = Element::zero(ring);
    for (g, c) in a.iter() {
        out = out.add(&act(g, x).scale(c));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_is_the_cyclic_rotation() {
        assert_eq!(rho(3, 1).images(), &[2, 3, 1]);
        assert_eq!(rho(3, 1).render(), "(2,3,1)");
        assert!(rho(3, 3).is_identity());
        assert_eq!(rho(5, 7), rho(5, 2));
        assert_eq!(rho(4, -1), rho(4, 3));
    }

    #[test]
    fn composition_and_inverse() {
        let a = rho(5, 2);
        let b = rho(5, 3);
        assert!(a.compose(&b).is_identity());
        assert_eq!(a.inverse(), b);
        // Associativity on a sample of non-commuting permutations.
        let p = Permutation::from_images(vec![2, 1, 3]);
        let q = Permutation::from_images(vec![1, 3, 2]);
        let r = Permutation::from_images(vec![3, 2, 1]);
        assert_eq!(p.compose(&q).compose(&r), p.compose(&q.compose(&r)));
    }

    #[test]
    fn rho_power_has_order_r_over_gcd() {
        for r in 1..=6usize {
            for k in 0..r as i64 {
                let g = rho(r, k);
                let mut acc = g.clone();
                let mut order = 1;
                while !acc.is_identity() {
                    acc = acc.compose(&g);
                    order += 1;
                }
                let gcd = {
                    let (mut a, mut b) = (r as i64, k);
                    while b != 0 {
                        let t = a % b;
                        a = b;
                        b = t;
                    }
                    a
                };
                assert_eq!(order as i64, r as i64 / gcd, "r={r} k={k}");
            }
        }
    }

    #[test]
    fn twist_and_norm_instantiations() {
        let t2 = twist_element(2);
        let mut want = Element::zero(Ring::Int);
        want.add_term(Permutation::from_images(vec![2, 1]), 1);
        want.add_term(Permutation::identity(2), -1);
        assert_eq!(t2, want);
        let n3 = norm_element(3);
        assert_eq!(n3.num_terms(), 3);
        assert_eq!(n3.coeff(&rho(3, 2)), 1);
    }

    #[test]
    fn twist_and_norm_annihilate_each_other() {
        for r in 1..=8 {
            let t = twist_element(r);
            let n = norm_element(r);
            assert!(group_ring_multiply(&t, &n).is_zero(), "T*N != 0 at r={r}");
            assert!(group_ring_multiply(&n, &t).is_zero(), "N*T != 0 at r={r}");
        }
    }

    #[test]
    fn group_ring_product_is_unital_and_matches_hand_expansion() {
        let id = Element::term(Ring::Int, Permutation::identity(3), 1);
        let t = twist_element(3);
        assert_eq!(group_ring_multiply(&id, &t), t);
        // T*T = rho^2 - 2 rho + 1 in Z[C_3].
        let tt = group_ring_multiply(&t, &t);
        let mut want = Element::zero(Ring::Int);
        want.add_term(rho(3, 2), 1);
        want.add_term(rho(3, 1), -2);
        want.add_term(Permutation::identity(3), 1);
        assert_eq!(tt, want);
    }
}
