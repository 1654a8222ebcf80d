//! The Barratt-Eccles operad in one arity: normalized chains on tuples of
//! permutations, with the simplicial boundary, the diagonal symmetric-group
//! action, and the structure map `psi` out of the minimal resolution `W`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::coeff::{BasisKey, Element, Ring};
use crate::perm::{rho, Permutation};

/// Nondegenerate tuple `(sigma_0, ..., sigma_n)` of permutations of one
/// arity; degree `n`. Tuples with equal adjacent entries are degenerate and
/// never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct BeKey(pub Vec<Permutation>);

impl BeKey {
    /// Build after checking nondegeneracy; returns None for a degenerate
    /// tuple.
    pub fn new(tuple: Vec<Permutation>) -> Option<BeKey> {
        assert!(!tuple.is_empty(), "empty Barratt-Eccles tuple");
        let r = tuple[0].arity();
        assert!(
            tuple.iter().all(|s| s.arity() == r),
            "mixed arities in Barratt-Eccles tuple"
        );
        if tuple.windows(2).any(|w| w[0] == w[1]) {
            return None;
        }
        Some(BeKey(tuple))
    }

    pub fn arity(&self) -> usize {
        self.0[0].arity()
    }
}

impl BasisKey for BeKey {
    fn degree(&self) -> i64 {
        self.0.len() as i64 - 1
    }
    /// Tuples of rho-powers render as exponents only, e.g. `(0,1,0)`; general
    /// tuples render as tuples of one-line permutations.
    fn render(&self) -> String {
        let r = self.arity();
        let exps: Option<Vec<String>> = self
            .0
            .iter()
            .map(|s| {
                (0..r as i64)
                    .find(|&k| *s == rho(r, k))
                    .map(|k| k.to_string())
            })
            .collect();
        match exps {
            Some(e) => format!("({})", e.join(",")),
            None => {
                let parts: Vec<String> = self.0.iter().map(|s| s.render()).collect();
                format!("({})", parts.join(","))
            }
        }
    }
}

/// Alternating face sum; faces with equal adjacent entries are dropped
/// (normalization).
pub fn be_boundary(x: &Element<BeKey>) -> Element<BeKey> {
    let ring = x.ring();
    let mut out = Element::zero(ring);
    for (key, c) in x.iter() {
        if key.0.len() == 1 {
            continue;
        }
        for i in 0..key.0.len() {
            let mut tuple = key.0.clone();
            tuple.remove(i);
            if let Some(face) = BeKey::new(tuple) {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                out.add_term(face, ring.mul(c, sign));
            }
        }
    }
    out
}

/// Diagonal left action `g . (s_0, ..., s_n) = (g s_0, ..., g s_n)`; degree
/// preserving, no signs.
pub fn be_act(g: &Permutation, x: &Element<BeKey>) -> Element<BeKey> {
    x.map_linear(|key| {
        assert_eq!(g.arity(), key.arity(), "arity mismatch in action");
        let tuple: Vec<Permutation> = key.0.iter().map(|s| g.compose(s)).collect();
        match BeKey::new(tuple) {
            Some(k) => Element::term(x.ring(), k, 1),
            None => Element::zero(x.ring()),
        }
    })
}

static PSI_MEMO: Lazy<Mutex<HashMap<(usize, u32), Arc<Element<BeKey>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The structure map on the generator: `psi(r)(e_n)` as an integer element.
/// For `n = 2m` it sums the tuples
/// `(rho^0, rho^(r_1), rho^(r_1+1), ..., rho^(r_m), rho^(r_m+1))` over all
/// `r_1, ..., r_m` in `{0..r-1}`; for `n = 2m+1` the tuples additionally
/// start with `rho^0, rho^1`. Degenerate tuples are dropped at construction.
/// Results are memoized per `(r, n)`.
pub fn psi_be(r: usize, n: u32) -> Arc<Element<BeKey>> {
    assert!(r >= 1, "psi requires arity >= 1");
    if let Some(hit) = PSI_MEMO.lock().unwrap().get(&(r, n)) {
        return hit.clone();
    }
    let m = (n / 2) as usize;
    let odd = n % 2 == 1;
    let mut out = Element::zero(Ring::Int);
    // Iterate over all (r_1, ..., r_m) in {0..r-1}^m.
    let mut choice = vec![0i64; m];
    loop {
        let mut exps: Vec<i64> = if odd { vec![0, 1] } else { vec![0] };
        for &c in &choice {
            exps.push(c);
            exps.push(c + 1);
        }
        let tuple: Vec<Permutation> = exps.into_iter().map(|k| rho(r, k)).collect();
        if let Some(key) = BeKey::new(tuple) {
            out.add_term(key, 1);
        }
        // Advance the multi-index.
        let mut i = m;
        loop {
            if i == 0 {
                break;
            }
            choice[i - 1] += 1;
            if choice[i - 1] < r as i64 {
                break;
            }
            choice[i - 1] = 0;
            i -= 1;
        }
        if i == 0 {
            break;
        }
    }
    let arc = Arc::new(out);
    PSI_MEMO
        .lock()
        .unwrap()
        .insert((r, n), arc.clone());
    arc
}

/// Snapshot of the memo table, for external persistence.
pub fn psi_be_memo_snapshot() -> Vec<((usize, u32), Element<BeKey>)> {
    let memo = PSI_MEMO.lock().unwrap();
    let mut entries: Vec<_> = memo
        .iter()
        .map(|(&k, v)| (k, (**v).clone()))
        .collect();
    entries.sort_by_key(|(k, _)| *k);
    entries
}

/// Install previously computed entries into the memo table.
pub fn psi_be_memo_install(entries: Vec<((usize, u32), Element<BeKey>)>) {
    let mut memo = PSI_MEMO.lock().unwrap();
    for (k, v) in entries {
        memo.entry(k).or_insert_with(|| Arc::new(v));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key_of(exps: &[i64], r: usize) -> BeKey {
        BeKey::new(exps.iter().map(|&k| rho(r, k)).collect()).unwrap()
    }

    #[test]
    fn boundary_of_a_one_simplex() {
        let s0 = rho(3, 0);
        let s1 = rho(3, 1);
        let x = Element::term(Ring::Int, BeKey::new(vec![s0.clone(), s1.clone()]).unwrap(), 1);
        let b = be_boundary(&x);
        let mut want = Element::zero(Ring::Int);
        want.add_term(BeKey::new(vec![s1]).unwrap(), 1);
        want.add_term(BeKey::new(vec![s0]).unwrap(), -1);
        assert_eq!(b, want);
    }

    #[test]
    fn normalization_drops_the_middle_face() {
        // d(rho^0, rho^1, rho^0) at r=2: middle face (rho^0, rho^0) vanishes.
        let x = Element::term(Ring::Int, key_of(&[0, 1, 0], 2), 1);
        let b = be_boundary(&x);
        let mut want = Element::zero(Ring::Int);
        want.add_term(key_of(&[1, 0], 2), 1);
        want.add_term(key_of(&[0, 1], 2), 1);
        assert_eq!(b, want);
    }

    #[test]
    fn boundary_squares_to_zero() {
        let x = Element::term(Ring::Int, key_of(&[0, 1, 2, 0], 3), 1);
        assert!(be_boundary(&be_boundary(&x)).is_zero());
    }

    #[test]
    fn action_is_diagonal_left_multiplication() {
        let x = Element::term(Ring::Int, key_of(&[0, 1], 3), 1);
        let g = rho(3, 1);
        let gx = be_act(&g, &x);
        assert_eq!(gx, Element::term(Ring::Int, key_of(&[1, 2], 3), 1));
        let id = Permutation::identity(3);
        assert_eq!(be_act(&id, &x), x);
    }

    #[test]
    fn action_commutes_with_boundary() {
        let x = Element::term(Ring::Int, key_of(&[0, 2, 1, 0], 3), 1);
        let g = rho(3, 2);
        assert_eq!(be_boundary(&be_act(&g, &x)), be_act(&g, &be_boundary(&x)));
    }

    #[test]
    fn psi_base_and_small_values() {
        assert_eq!(
            *psi_be(4, 0),
            Element::term(Ring::Int, key_of(&[0], 4), 1)
        );
        // Table values: psi(2)(e_2) = (0,1,0); psi(3)(e_2) = (0,1,2)+(0,2,0).
        let p22 = psi_be(2, 2);
        assert_eq!(
            *p22,
            Element::term(Ring::Int, key_of(&[0, 1, 0], 2), 1)
        );
        let p32 = psi_be(3, 2);
        let mut want = Element::zero(Ring::Int);
        want.add_term(key_of(&[0, 1, 2], 3), 1);
        want.add_term(key_of(&[0, 2, 0], 3), 1);
        assert_eq!(*p32, want);
        // psi(3)(e_3) = (0,1,2,0) + (0,1,0,1).
        let p33 = psi_be(3, 3);
        let mut want3 = Element::zero(Ring::Int);
        want3.add_term(key_of(&[0, 1, 2, 0], 3), 1);
        want3.add_term(key_of(&[0, 1, 0, 1], 3), 1);
        assert_eq!(*p33, want3);
    }

    #[test]
    fn psi_image_lies_in_the_cyclic_subcomplex_with_unit_coefficients() {
        for r in 1..=5usize {
            for n in 0..=6u32 {
                let psi = psi_be(r, n);
                for (key, c) in psi.iter() {
                    assert_eq!(c, 1, "non-unit coefficient in psi({r})(e_{n})");
                    for s in &key.0 {
                        assert!(
                            (0..r as i64).any(|k| *s == rho(r, k)),
                            "non-cyclic entry in psi({r})(e_{n})"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn psi_is_a_chain_map_on_small_range() {
        for r in 1..=4usize {
            for n in 1..=5u32 {
                let lhs = be_boundary(&psi_be(r, n));
                let prev = psi_be(r, n - 1);
                let rhs = if n % 2 == 1 {
                    // T acts: rho . psi - psi.
                    be_act(&rho(r, 1), &prev).sub(&prev)
                } else {
                    let mut acc = Element::zero(Ring::Int);
                    for k in 0..r as i64 {
                        acc = acc.add(&be_act(&rho(r, k), &prev));
                    }
                    acc
                };
                assert_eq!(lhs, rhs, "chain map fails at r={r}, n={n}");
            }
        }
    }

    #[test]
    fn rendering_uses_exponent_abbreviation() {
        assert_eq!(key_of(&[0, 1, 0], 2).render(), "(0,1,0)");
        let mixed = BeKey::new(vec![Permutation::from_images(vec![2, 1, 3])]).unwrap();
        assert_eq!(mixed.render(), "((2,1,3))");
    }
}
