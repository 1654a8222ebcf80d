//! Exact coefficients, sparse free-module elements, tensor keys, and the
//! Koszul-sign toolkit.
//!
//! Elements are maps from basis keys to nonzero coefficients. Keys carry a
//! homological degree and a canonical total order (their derived `Ord`, which
//! is lexicographic on the serialized component form), so iteration and
//! rendering are deterministic.

use std::collections::BTreeMap;
use std::fmt;

/// Coefficient ring: exact integers, or the field `F_p` with canonical
/// residues in `[0, p)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Ring {
    Int,
    Mod(u32),
}

/// Trial-division primality check; sufficient for moduli below `2^31`.
pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    let p64 = p as u64;
    while d * d <= p64 {
        if p64 % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Ring {
    /// The field `F_p`; panics if `p` is not prime.
    pub fn mod_p(p: u32) -> Ring {
        assert!(is_prime(p), "modulus {p} is not prime");
        Ring::Mod(p)
    }

    /// Canonical representative of `c` in this ring.
    pub fn normalize(self, c: i64) -> i64 {
        match self {
            Ring::Int => c,
            Ring::Mod(p) => c.rem_euclid(p as i64),
        }
    }

    /// Checked addition; integer overflow is a bug, not a wraparound.
    pub fn add(self, a: i64, b: i64) -> i64 {
        self.normalize(a.checked_add(b).expect("integer coefficient overflow"))
    }

    /// Checked multiplication.
    pub fn mul(self, a: i64, b: i64) -> i64 {
        self.normalize(a.checked_mul(b).expect("integer coefficient overflow"))
    }

    /// Checked negation.
    pub fn neg(self, a: i64) -> i64 {
        self.normalize(a.checked_neg().expect("integer coefficient overflow"))
    }

    /// Multiplicative inverse; defined only over `F_p` for nonzero residues.
    pub fn inv(self, a: i64) -> i64 {
        match self {
            Ring::Int => panic!("no multiplicative inverses over the integers"),
            Ring::Mod(p) => {
                let a = a.rem_euclid(p as i64);
                assert!(a != 0, "zero is not invertible mod {p}");
                // Fermat: a^(p-2) mod p.
                let mut base = a;
                let mut exp = p - 2;
                let mut acc = 1i64;
                while exp > 0 {
                    if exp & 1 == 1 {
                        acc = acc * base % p as i64;
                    }
                    base = base * base % p as i64;
                    exp >>= 1;
                }
                acc
            }
        }
    }

    /// `a^k` with `k` possibly negative (inverse powers require `F_p`).
    pub fn pow(self, a: i64, k: i64) -> i64 {
        if k < 0 {
            let inv = self.inv(a);
            return self.pow(inv, -k);
        }
        let mut acc = 1i64;
        for _ in 0..k {
            acc = self.mul(acc, a);
        }
        acc
    }
}

/// A basis key of a free module: ordered, printable, with a homological
/// degree.
pub trait BasisKey: Clone + Ord + fmt::Debug {
    /// Homological degree of the basis element.
    fn degree(&self) -> i64;
    /// Canonical text form of the key.
    fn render(&self) -> String;
}

/// Sparse free-module element: a map from basis keys to nonzero coefficients,
/// all in one ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Element<K: BasisKey> {
    ring: Ring,
    terms: BTreeMap<K, i64>,
}

impl<K: BasisKey> Element<K> {
    /// The zero element.
    pub fn zero(ring: Ring) -> Self {
        Element {
            ring,
            terms: BTreeMap::new(),
        }
    }

    /// A single term `coeff * key` (normalized; may be zero).
    pub fn term(ring: Ring, key: K, coeff: i64) -> Self {
        let mut e = Element::zero(ring);
        e.add_term(key, coeff);
        e
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `key` (zero if absent).
    pub fn coeff(&self, key: &K) -> i64 {
        self.terms.get(key).copied().unwrap_or(0)
    }

    /// Terms in canonical key order.
    pub fn iter(&self) -> impl Iterator<Item = (&K, i64)> {
        self.terms.iter().map(|(k, &c)| (k, c))
    }

    /// Keys in canonical order.
    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Add `coeff * key` in place, pruning a resulting zero.
    pub fn add_term(&mut self, key: K, coeff: i64) {
        let c = self.ring.normalize(coeff);
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(key);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = self.ring.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Sum of two elements over the same ring.
    pub fn add(mut self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring, "ring mismatch in element addition");
        for (k, c) in other.iter() {
            self.add_term(k.clone(), c);
        }
        self
    }

    /// Difference of two elements over the same ring.
    pub fn sub(mut self, other: &Self) -> Self {
        assert_eq!(self.ring, other.ring, "ring mismatch in element subtraction");
        for (k, c) in other.iter() {
            let n = self.ring.neg(c);
            self.add_term(k.clone(), n);
        }
        self
    }

    /// Scalar multiple.
    pub fn scale(mut self, c: i64) -> Self {
        if self.ring.normalize(c) == 0 {
            return Element::zero(self.ring);
        }
        let ring = self.ring;
        let mut pruned = BTreeMap::new();
        for (k, v) in std::mem::take(&mut self.terms) {
            let m = ring.mul(v, c);
            if m != 0 {
                pruned.insert(k, m);
            }
        }
        self.terms = pruned;
        self
    }

    /// Apply a basis-level linear map and extend by linearity.
    pub fn map_linear<K2: BasisKey>(&self, mut f: impl FnMut(&K) -> Element<K2>) -> Element<K2> {
        let mut out = Element::zero(self.ring);
        for (k, c) in self.iter() {
            let img = f(k);
            assert_eq!(img.ring, self.ring, "ring mismatch in linear map image");
            for (k2, c2) in img.iter() {
                out.add_term(k2.clone(), self.ring.mul(c, c2));
            }
        }
        out
    }

    /// Reduce an integer element mod p (or re-normalize an `F_p` element to
    /// the same p).
    pub fn reduce_mod(&self, p: u32) -> Element<K> {
        let ring = Ring::mod_p(p);
        if let Ring::Mod(q) = self.ring {
            assert_eq!(q, p, "cannot change modulus of an F_p element");
        }
        let mut out = Element::zero(ring);
        for (k, c) in self.iter() {
            out.add_term(k.clone(), c);
        }
        out
    }

    /// Canonical rendering: terms in key order as `{sign}{abs}·{key}`,
    /// space-separated; the zero element renders as `0`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(k, c)| {
                let sign = if c < 0 { '-' } else { '+' };
                format!("{sign}{}\u{b7}{}", c.abs(), k.render())
            })
            .collect();
        parts.join(" ")
    }

    /// Human-friendly rendering: unit coefficients omitted, terms joined by
    /// ` + ` / ` - `.
    pub fn render_pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (k, c)) in self.iter().enumerate() {
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if i == 0 {
                if sign == "-" {
                    out.push_str("- ");
                }
            } else {
                out.push_str(&format!(" {sign} "));
            }
            if mag != 1 {
                out.push_str(&format!("{mag}\u{b7}"));
            }
            out.push_str(&k.render());
        }
        out
    }
}

impl<K: BasisKey> fmt::Display for Element<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Tensor-product basis key: an ordered list of component keys; total degree
/// is the sum of component degrees.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct TensorKey<K: BasisKey>(pub Vec<K>);

impl<K: BasisKey> BasisKey for TensorKey<K> {
    fn degree(&self) -> i64 {
        self.0.iter().map(|k| k.degree()).sum()
    }
    fn render(&self) -> String {
        self.0
            .iter()
            .map(|k| k.render())
            .collect::<Vec<_>>()
            .join("\u{2297}")
    }
}

/// Koszul sign of rearranging `k` graded factors, where the factor at
/// original position `j` (0-based) moves to position `perm[j]`: the exponent
/// sums `degrees[j] * degrees[j']` over pairs `j < j'` that cross, i.e. with
/// `perm[j] > perm[j']`.
pub fn koszul_sign(perm: &[usize], degrees: &[i64]) -> i64 {
    assert_eq!(perm.len(), degrees.len(), "koszul_sign length mismatch");
    let k = perm.len();
    let mut seen = vec![false; k];
    for &p in perm {
        assert!(p < k && !seen[p], "koszul_sign: not a permutation");
        seen[p] = true;
    }
    let mut exp = 0i64;
    for j in 0..k {
        for j2 in (j + 1)..k {
            if perm[j] > perm[j2] {
                exp += degrees[j] * degrees[j2];
            }
        }
    }
    if exp % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Leibniz boundary of a tensor element: `d(a1 ⊗ … ⊗ ar)` expands with the
/// sign `(-1)^(deg a1 + … + deg a_{i-1})` in front of the factor-`i` term.
/// The per-factor boundary is supplied as a callback.
pub fn tensor_boundary<K: BasisKey>(
    x: &Element<TensorKey<K>>,
    mut boundary: impl FnMut(&K) -> Element<K>,
) -> Element<TensorKey<K>> {
    let ring = x.ring();
    let mut out = Element::zero(ring);
    for (key, c) in x.iter() {
        let mut sign = 1i64;
        for (i, factor) in key.0.iter().enumerate() {
            let db = boundary(factor);
            assert_eq!(db.ring(), ring, "ring mismatch in boundary callback");
            for (fk, fc) in db.iter() {
                let mut parts = key.0.clone();
                parts[i] = fk.clone();
                out.add_term(TensorKey(parts), ring.mul(ring.mul(c, sign), fc));
            }
            if factor.degree() % 2 != 0 {
                sign = -sign;
            }
        }
    }
    out
}

/// The tensor element `f1 ⊗ … ⊗ fr` of the given factors (plain basis
/// expansion; Koszul signs belong to the pairing, not the construction).
pub fn tensor_of<K: BasisKey>(factors: &[&Element<K>]) -> Element<TensorKey<K>> {
    assert!(!factors.is_empty(), "empty tensor product");
    let ring = factors[0].ring();
    let mut acc: Vec<(Vec<K>, i64)> = vec![(Vec::new(), 1)];
    for f in factors {
        assert_eq!(f.ring(), ring, "ring mismatch in tensor product");
        let mut next = Vec::new();
        for (prefix, c) in &acc {
            for (k, fc) in f.iter() {
                let mut parts = prefix.clone();
                parts.push(k.clone());
                next.push((parts, ring.mul(*c, fc)));
            }
        }
        acc = next;
    }
    let mut out = Element::zero(ring);
    for (parts, c) in acc {
        out.add_term(TensorKey(parts), c);
    }
    out
}

/// The p-fold tensor power `f ⊗ … ⊗ f`.
pub fn tensor_power<K: BasisKey>(f: &Element<K>, p: usize) -> Element<TensorKey<K>> {
    let factors: Vec<&Element<K>> = std::iter::repeat(f).take(p).collect();
    tensor_of(&factors)
}

/// Permute the factors of a tensor element with Koszul signs: the factor in
/// position j moves to position `perm[j]`.
pub fn permute_tensor_factors<K: BasisKey>(
    perm: &[usize],
    x: &Element<TensorKey<K>>,
) -> Element<TensorKey<K>> {
    let ring = x.ring();
    let mut out = Element::zero(ring);
    for (key, c) in x.iter() {
        assert_eq!(key.0.len(), perm.len(), "permutation length mismatch");
        let degrees: Vec<i64> = key.0.iter().map(|k| k.degree()).collect();
        let sign = koszul_sign(perm, &degrees);
        let mut parts: Vec<Option<K>> = vec![None; perm.len()];
        for (j, k) in key.0.iter().enumerate() {
            parts[perm[j]] = Some(k.clone());
        }
        let moved: Vec<K> = parts.into_iter().map(|p| p.expect("bijection")).collect();
        out.add_term(TensorKey(moved), ring.mul(c, sign));
    }
    out
}

/// Koszul pairing sign for evaluating a tensor of functionals on a tensor of
/// chains with componentwise-matching degrees: `(-1)^(sum_{i<j} |a_i||a_j|)`
/// over the chain degrees. This is the recursive convention
/// `(f ⊗ g)(a ⊗ b) = (-1)^(|a||g|) f(a) g(b)`.
pub fn pairing_sign(chain_degrees: &[i64]) -> i64 {
    let mut exp = 0i64;
    for i in 0..chain_degrees.len() {
        for j in (i + 1)..chain_degrees.len() {
            exp += chain_degrees[i] * chain_degrees[j];
        }
    }
    if exp % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Evaluate a tensor of cochains on a tensor of chains. Both sides are
/// elements over the same tensor keys; a cochain term pairs only with the
/// identical key, contributing `pairing_sign` times the coefficient product.
pub fn dual_pairing<K: BasisKey>(
    cochain: &Element<TensorKey<K>>,
    chain: &Element<TensorKey<K>>,
) -> i64 {
    assert_eq!(cochain.ring(), chain.ring(), "ring mismatch in pairing");
    let ring = chain.ring();
    let mut acc = 0i64;
    // Iterate over the smaller support.
    let small = if cochain.num_terms() <= chain.num_terms() {
        cochain
    } else {
        chain
    };
    for (key, _) in small.iter() {
        let fc = cochain.coeff(key);
        let cc = chain.coeff(key);
        if fc == 0 || cc == 0 {
            continue;
        }
        let degs: Vec<i64> = key.0.iter().map(|k| k.degree()).collect();
        let s = pairing_sign(&degs);
        acc = ring.add(acc, ring.mul(ring.mul(fc, cc), s));
    }
    ring.normalize(acc)
}
