//! The surjection operad in one arity, with McClure-Smith signs: generators
//! are surjective sequences without equal adjacent values, graded so that a
//! sequence of length `n + r` onto `{1..r}` has degree `n`. Includes the
//! Benson contraction maps `i`, `p`, `s`, the homotopy `h`, and the recursive
//! structure map `psi` out of the minimal resolution.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;

use crate::coeff::{koszul_sign, BasisKey, Element, Ring};
use crate::perm::Permutation;

/// A nondegenerate surjection generator: values in `{1..r}`, surjective, no
/// two equal adjacent values. Degenerate sequences represent zero and are
/// never stored.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SjKey(pub Vec<u8>);

impl SjKey {
    /// Build after checking nondegeneracy relative to the stated arity;
    /// returns None when the sequence is degenerate.
    pub fn new(seq: Vec<u8>, r: usize) -> Option<SjKey> {
        if !is_nondegenerate(&seq, r) {
            return None;
        }
        Some(SjKey(seq))
    }

    /// Arity: the largest value (the sequence is surjective onto `{1..r}`).
    pub fn arity(&self) -> usize {
        *self.0.iter().max().expect("empty surjection") as usize
    }

    /// Number of occurrences of each value, 0-indexed by `value - 1`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut k = vec![0usize; self.arity()];
        for &v in &self.0 {
            k[v as usize - 1] += 1;
        }
        k
    }
}

/// Surjective onto `{1..r}` with no equal adjacent values.
pub fn is_nondegenerate(seq: &[u8], r: usize) -> bool {
    if seq.len() < r {
        return false;
    }
    let mut seen = vec![false; r];
    for &v in seq {
        if v < 1 || v as usize > r {
            return false;
        }
        seen[v as usize - 1] = true;
    }
    if !seen.iter().all(|&b| b) {
        return false;
    }
    seq.windows(2).all(|w| w[0] != w[1])
}

impl BasisKey for SjKey {
    fn degree(&self) -> i64 {
        self.0.len() as i64 - self.arity() as i64
    }
    fn render(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

/// Boundary with McClure-Smith signs: the removal of the j-th occurrence
/// (0-based) of the value v carries the sign
/// `(-1)^(k_1 - 1 + ... + k_(v-1) - 1 + j)`, where `k_u` counts the
/// occurrences of u. Removals that land on a degenerate sequence contribute
/// zero.
pub fn sj_boundary(x: &Element<SjKey>) -> Element<SjKey> {
    let ring = x.ring();
    let mut out = Element::zero(ring);
    for (key, c) in x.iter() {
        let r = key.arity();
        let mut base = 0i64;
        for v in 1..=r as u8 {
            let mut occurrences = 0i64;
            for (pos, _) in key.0.iter().enumerate().filter(|(_, &u)| u == v) {
                let sign = if (base + occurrences) % 2 == 0 { 1 } else { -1 };
                let mut seq = key.0.clone();
                seq.remove(pos);
                if let Some(face) = SjKey::new(seq, r) {
                    out.add_term(face, ring.mul(c, sign));
                }
                occurrences += 1;
            }
            base += occurrences - 1;
        }
    }
    out
}

/// Symmetric action: relabel values by `g` and multiply by the Koszul sign of
/// permuting the `r` tensor blocks, block `v` having degree `k_v - 1`.
pub fn sj_act(g: &Permutation, x: &Element<SjKey>) -> Element<SjKey> {
    x.map_linear(|key| {
        let r = key.arity();
        assert_eq!(g.arity(), r, "arity mismatch in surjection action");
        let seq: Vec<u8> = key.0.iter().map(|&v| g.apply(v)).collect();
        let degrees: Vec<i64> = key.multiplicities().iter().map(|&k| k as i64 - 1).collect();
        let perm: Vec<usize> = (1..=r as u8).map(|v| g.apply(v) as usize - 1).collect();
        let sign = koszul_sign(&perm, &degrees);
        let k = SjKey::new(seq, r).expect("relabeling preserves nondegeneracy");
        Element::term(x.ring(), k, sign)
    })
}

/// `i`: prepend a 1 and shift all original values up by one (arity r -> r+1).
pub fn sj_contract_i(x: &Element<SjKey>) -> Element<SjKey> {
    x.map_linear(|key| {
        let r = key.arity();
        let mut seq = Vec::with_capacity(key.0.len() + 1);
        seq.push(1u8);
        seq.extend(key.0.iter().map(|&v| v + 1));
        let k = SjKey::new(seq, r + 1).expect("i never produces a degenerate sequence");
        Element::term(x.ring(), k, 1)
    })
}

/// `p`: zero unless the sequence has a single occurrence of 1, in which case
/// remove it and shift the remaining values down (arity r -> r-1).
pub fn sj_contract_p(x: &Element<SjKey>) -> Element<SjKey> {
    x.map_linear(|key| {
        let r = key.arity();
        let ones: Vec<usize> = key
            .0
            .iter()
            .enumerate()
            .filter(|(_, &v)| v == 1)
            .map(|(i, _)| i)
            .collect();
        if ones.len() != 1 {
            return Element::zero(x.ring());
        }
        let seq: Vec<u8> = key
            .0
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != ones[0])
            .map(|(_, &v)| v - 1)
            .collect();
        match SjKey::new(seq, r - 1) {
            Some(k) => Element::term(x.ring(), k, 1),
            None => Element::zero(x.ring()),
        }
    })
}

/// `s`: prepend a 1; zero when the sequence already starts with 1.
pub fn sj_contract_s(x: &Element<SjKey>) -> Element<SjKey> {
    x.map_linear(|key| {
        if key.0[0] == 1 {
            return Element::zero(x.ring());
        }
        let r = key.arity();
        let mut seq = Vec::with_capacity(key.0.len() + 1);
        seq.push(1u8);
        seq.extend_from_slice(&key.0);
        let k = SjKey::new(seq, r).expect("s output is nondegenerate when input does not start with 1");
        Element::term(x.ring(), k, 1)
    })
}

/// The contraction homotopy `h = s + i s p + ... + i^(r-1) s p^(r-1)` on
/// arity-r elements.
pub fn sj_homotopy_h(x: &Element<SjKey>) -> Element<SjKey> {
    x.map_linear(|key| {
        let r = key.arity();
        let single = Element::term(x.ring(), key.clone(), 1);
        let mut out = Element::zero(x.ring());
        for j in 0..r {
            let mut y = single.clone();
            for _ in 0..j {
                y = sj_contract_p(&y);
            }
            if y.is_zero() {
                continue;
            }
            y = sj_contract_s(&y);
            for _ in 0..j {
                y = sj_contract_i(&y);
            }
            out = out.add(&y);
        }
        out
    })
}

static PSI_MEMO: Lazy<Mutex<HashMap<(usize, u32), Arc<Element<SjKey>>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// The structure map on the generator, recursively: `psi(r)(e_0) = (1,...,r)`,
/// `psi(r)(e_(2m+1)) = h T psi(r)(e_(2m))`, and
/// `psi(r)(e_(2m)) = h N psi(r)(e_(2m-1))`; computed over the integers and
/// memoized per `(r, n)`.
pub fn psi_sj(r: usize, n: u32) -> Arc<Element<SjKey>> {
    assert!(r >= 1, "psi requires arity >= 1");
    if let Some(hit) = PSI_MEMO.lock().unwrap().get(&(r, n)) {
        return hit.clone();
    }
    let result = if n == 0 {
        let key = SjKey::new((1..=r as u8).collect(), r).expect("identity surjection");
        Element::term(Ring::Int, key, 1)
    } else {
        let prev = psi_sj(r, n - 1);
        let rotated = sj_act(&crate::perm::rho(r, 1), &prev);
        let acted = if n % 2 == 1 {
            // T = rho - 1.
            rotated.sub(&prev)
        } else {
            // N = 1 + rho + ... + rho^(r-1).
            let mut acc = prev.as_ref().clone();
            let mut current = rotated;
            for _ in 1..r {
                acc = acc.add(&current);
                current = sj_act(&crate::perm::rho(r, 1), &current);
            }
            acc
        };
        sj_homotopy_h(&acted)
    };
    let arc = Arc::new(result);
    PSI_MEMO.lock().unwrap().insert((r, n), arc.clone());
    arc
}

/// Snapshot of the memo table, for external persistence.
pub fn psi_sj_memo_snapshot() -> Vec<((usize, u32), Element<SjKey>)> {
    let memo = PSI_MEMO.lock().unwrap();
    let mut entries: Vec<_> = memo.iter().map(|(&k, v)| (k, (**v).clone())).collect();
    entries.sort_by_key(|(k, _)| *k);
    entries
}

/// Install previously computed entries into the memo table.
pub fn psi_sj_memo_install(entries: Vec<((usize, u32), Element<SjKey>)>) {
    let mut memo = PSI_MEMO.lock().unwrap();
    for (k, v) in entries {
        memo.entry(k).or_insert_with(|| Arc::new(v));
    }
}
