//! Normalized chains of standard simplices and cubes: boundaries, counits,
//! diagonals, the join products, and the evaluation of surjection generators
//! on chains. Signs follow the Koszul convention throughout, and both
//! geometries implement the same [`ChainGeometry`] interface so that
//! evaluation is written once.

use crate::coeff::{BasisKey, Element, TensorKey};
use crate::surjection::SjKey;

/// A face of a standard simplex: a strictly increasing vertex list.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct SimplexKey(pub Vec<u8>);

impl SimplexKey {
    /// Build from a strictly increasing vertex list.
    pub fn new(vertices: Vec<u8>) -> SimplexKey {
        assert!(!vertices.is_empty(), "empty simplex");
        assert!(
            vertices.windows(2).all(|w| w[0] < w[1]),
            "simplex vertices must be strictly increasing"
        );
        SimplexKey(vertices)
    }
}

impl BasisKey for SimplexKey {
    fn degree(&self) -> i64 {
        self.0.len() as i64 - 1
    }
    fn render(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        format!("[{}]", parts.join(","))
    }
}

/// One coordinate of a cube cell: a fixed endpoint or the full segment.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Letter {
    Zero,
    One,
    Seg,
}

/// A face of a standard cube: one letter per coordinate; the degree is the
/// number of free (segment) coordinates.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct CubeKey(pub Vec<Letter>);

impl CubeKey {
    /// Build from the letter word; the empty word is the point of the 0-cube.
    pub fn new(letters: Vec<Letter>) -> CubeKey {
        CubeKey(letters)
    }
}

impl BasisKey for CubeKey {
    fn degree(&self) -> i64 {
        self.0.iter().filter(|&&l| l == Letter::Seg).count() as i64
    }
    fn render(&self) -> String {
        if self.0.is_empty() {
            return "[]".to_string();
        }
        self.0
            .iter()
            .map(|l| match l {
                Letter::Zero => "[0]",
                Letter::One => "[1]",
                Letter::Seg => "[01]",
            })
            .collect()
    }
}

/// The top cell `[0,1,...,n]` of the standard n-simplex.
pub fn standard_simplex(n: usize) -> SimplexKey {
    SimplexKey::new((0..=n as u8).collect())
}

/// The top cell of the standard n-cube.
pub fn standard_cube(n: usize) -> CubeKey {
    CubeKey::new(vec![Letter::Seg; n])
}

/// All faces of the standard n-simplex (nonempty vertex subsets), ordered.
pub fn simplex_faces(n: usize) -> Vec<SimplexKey> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << (n + 1)) {
        let vs: Vec<u8> = (0..=n as u8).filter(|v| mask >> v & 1 == 1).collect();
        out.push(SimplexKey::new(vs));
    }
    out.sort();
    out
}

/// All faces of the standard n-cube (all letter words), ordered.
pub fn cube_faces(n: usize) -> Vec<CubeKey> {
    let mut out = vec![CubeKey::new(Vec::new())];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|k| {
                [Letter::Zero, Letter::One, Letter::Seg].into_iter().map(move |l| {
                    let mut w = k.0.clone();
                    w.push(l);
                    CubeKey::new(w)
                })
            })
            .collect();
    }
    out.sort();
    out
}

/// The structural operations of a chain-level geometry: boundary, counit,
/// binary diagonal, and the join product of degree one. All are given on
/// basis keys as plain signed term lists; linear extensions live on
/// [`Element`].
pub trait ChainGeometry {
    /// Basis keys of the chain complex.
    type Key: BasisKey;
    /// Signed faces of a cell.
    fn boundary_terms(k: &Self::Key) -> Vec<(i64, Self::Key)>;
    /// Augmentation: 1 on degree zero cells, 0 otherwise.
    fn counit(k: &Self::Key) -> i64;
    /// Binary diagonal as signed (left, right) pairs.
    fn split_terms(k: &Self::Key) -> Vec<(i64, Self::Key, Self::Key)>;
    /// Join product of degree one, possibly zero or a signed sum.
    fn join_terms(a: &Self::Key, b: &Self::Key) -> Vec<(i64, Self::Key)>;
}

/// Simplicial geometry marker.
pub struct Simplicial;

/// Cubical geometry marker.
pub struct Cubical;

impl ChainGeometry for Simplicial {
    type Key = SimplexKey;

    fn boundary_terms(k: &SimplexKey) -> Vec<(i64, SimplexKey)> {
        if k.0.len() == 1 {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut sign = 1i64;
        for i in 0..k.0.len() {
            let mut vs = k.0.clone();
            vs.remove(i);
            out.push((sign, SimplexKey::new(vs)));
            sign = -sign;
        }
        out
    }

    fn counit(k: &SimplexKey) -> i64 {
        if k.0.len() == 1 {
            1
        } else {
            0
        }
    }

    fn split_terms(k: &SimplexKey) -> Vec<(i64, SimplexKey, SimplexKey)> {
        // Alexander-Whitney: split at each vertex, no signs.
        (0..k.0.len())
            .map(|i| {
                let front = SimplexKey::new(k.0[..=i].to_vec());
                let back = SimplexKey::new(k.0[i..].to_vec());
                (1, front, back)
            })
            .collect()
    }

    fn join_terms(a: &SimplexKey, b: &SimplexKey) -> Vec<(i64, SimplexKey)> {
        // Zero when a vertex repeats; otherwise merge, with the sign of the
        // shuffle, and one extra sign from the degree of the left factor.
        let mut merged = Vec::with_capacity(a.0.len() + b.0.len());
        merged.extend_from_slice(&a.0);
        merged.extend_from_slice(&b.0);
        let mut inversions = 0i64;
        for &u in &a.0 {
            for &v in &b.0 {
                if u == v {
                    return Vec::new();
                }
                if u > v {
                    inversions += 1;
                }
            }
        }
        merged.sort_unstable();
        let sign = if (a.degree() + inversions) % 2 == 0 { 1 } else { -1 };
        vec![(sign, SimplexKey::new(merged))]
    }
}

impl ChainGeometry for Cubical {
    type Key = CubeKey;

    fn boundary_terms(k: &CubeKey) -> Vec<(i64, CubeKey)> {
        let mut out = Vec::new();
        let mut sign = 1i64;
        for (pos, &l) in k.0.iter().enumerate() {
            if l != Letter::Seg {
                continue;
            }
            let mut one = k.0.clone();
            one[pos] = Letter::One;
            let mut zero = k.0.clone();
            zero[pos] = Letter::Zero;
            out.push((sign, CubeKey::new(one)));
            out.push((-sign, CubeKey::new(zero)));
            sign = -sign;
        }
        out
    }

    fn counit(k: &CubeKey) -> i64 {
        if k.0.iter().all(|&l| l != Letter::Seg) {
            1
        } else {
            0
        }
    }

    fn split_terms(k: &CubeKey) -> Vec<(i64, CubeKey, CubeKey)> {
        // Serre diagonal: each free coordinate goes to (0, seg) or (seg, 1);
        // fixed coordinates copy to both sides. The sign counts the pairs of
        // free coordinates where the earlier one chose (0, seg) and the
        // later one chose (seg, 1).
        let segs: Vec<usize> = k
            .0
            .iter()
            .enumerate()
            .filter(|(_, &l)| l == Letter::Seg)
            .map(|(i, _)| i)
            .collect();
        let mut out = Vec::new();
        for mask in 0u32..(1 << segs.len()) {
            let mut left = k.0.clone();
            let mut right = k.0.clone();
            let mut exponent = 0u32;
            let mut zeros_before = 0u32;
            for (j, &pos) in segs.iter().enumerate() {
                if mask >> j & 1 == 0 {
                    left[pos] = Letter::Zero;
                    zeros_before += 1;
                } else {
                    right[pos] = Letter::One;
                    exponent += zeros_before;
                }
            }
            let sign = if exponent % 2 == 0 { 1 } else { -1 };
            out.push((sign, CubeKey::new(left), CubeKey::new(right)));
        }
        out
    }

    fn join_terms(a: &CubeKey, b: &CubeKey) -> Vec<(i64, CubeKey)> {
        assert_eq!(a.0.len(), b.0.len(), "join of cubes of different ambient dimension");
        let n = a.0.len();
        let outer = if a.degree() % 2 == 0 { 1i64 } else { -1 };
        let mut out = Vec::new();
        for i in 0..n {
            // The counit must not vanish on b before i and on a after i.
            if b.0[..i].iter().any(|&l| l == Letter::Seg) {
                continue;
            }
            if a.0[i + 1..].iter().any(|&l| l == Letter::Seg) {
                continue;
            }
            let letter_sign = match (a.0[i], b.0[i]) {
                (Letter::Zero, Letter::One) => 1i64,
                (Letter::One, Letter::Zero) => -1,
                _ => continue,
            };
            let mut word = Vec::with_capacity(n);
            word.extend_from_slice(&a.0[..i]);
            word.push(Letter::Seg);
            word.extend_from_slice(&b.0[i + 1..]);
            out.push((outer * letter_sign, CubeKey::new(word)));
        }
        out
    }
}

/// Boundary, extended linearly.
pub fn chain_boundary<G: ChainGeometry>(x: &Element<G::Key>) -> Element<G::Key> {
    let ring = x.ring();
    let mut out = Element::zero(ring);
    for (key, c) in x.iter() {
        for (sign, face) in G::boundary_terms(key) {
            out.add_term(face, ring.mul(c, sign));
        }
    }
    out
}

/// Counit, extended linearly; the result is a normalized scalar.
pub fn chain_counit<G: ChainGeometry>(x: &Element<G::Key>) -> i64 {
    let ring = x.ring();
    let mut acc = 0i64;
    for (key, c) in x.iter() {
        acc = ring.add(acc, ring.mul(c, G::counit(key)));
    }
    acc
}

/// Binary diagonal, extended linearly, landing in the two-fold tensor power.
pub fn chain_diagonal<G: ChainGeometry>(x: &Element<G::Key>) -> Element<TensorKey<G::Key>> {
    let ring = x.ring();
    let mut out = Element::zero(ring);
    for (key, c) in x.iter() {
        for (sign, left, right) in G::split_terms(key) {
            out.add_term(TensorKey(vec![left, right]), ring.mul(c, sign));
        }
    }
    out
}

/// Join product, extended bilinearly with no extra signs: the defining
/// formula already carries its Koszul factors.
pub fn chain_join<G: ChainGeometry>(x: &Element<G::Key>, y: &Element<G::Key>) -> Element<G::Key> {
    let ring = x.ring();
    let mut out = Element::zero(ring);
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            for (sign, joined) in G::join_terms(a, b) {
                out.add_term(joined, ring.mul(ring.mul(ca, cb), sign));
            }
        }
    }
    out
}

struct Evaluator<'a, G: ChainGeometry> {
    wires: Vec<usize>,
    mult: Vec<i64>,
    last: Vec<usize>,
    filter: Option<&'a [i64]>,
    products: Vec<Option<Element<G::Key>>>,
    degsums: Vec<i64>,
    out: Element<TensorKey<G::Key>>,
}

impl<'a, G: ChainGeometry> Evaluator<'a, G> {
    fn recurse(&mut self, t: usize, rest: G::Key, coeff: i64) {
        if t + 1 == self.wires.len() {
            self.place(t, rest, coeff, None);
        } else {
            for (sign, first, second) in G::split_terms(&rest) {
                self.place(t, first, coeff * sign, Some(second));
            }
        }
    }

    fn place(&mut self, t: usize, factor: G::Key, coeff: i64, rest: Option<G::Key>) {
        let w = self.wires[t];
        let d = factor.degree();
        if let Some(filter) = self.filter {
            // The finished product on wire w will have degree
            // degsums[w] + (mult[w] - 1) once every factor has arrived.
            let projected = self.degsums[w] + d + self.mult[w] - 1;
            if projected > filter[w] {
                return;
            }
            if t == self.last[w] && projected != filter[w] {
                return;
            }
        }
        // Koszul sign for moving the new factor past the wires after w.
        let crossing: i64 = self.degsums[w + 1..].iter().sum();
        let sign = if d % 2 != 0 && crossing % 2 != 0 { -1 } else { 1 };
        let updated = match &self.products[w] {
            None => Element::term(self.out.ring(), factor, 1),
            Some(prod) => {
                let ring = self.out.ring();
                let mut next = Element::zero(ring);
                for (key, c) in prod.iter() {
                    for (jsign, joined) in G::join_terms(key, &factor) {
                        next.add_term(joined, ring.mul(c, jsign));
                    }
                }
                next
            }
        };
        if updated.is_zero() {
            return;
        }
        let saved = self.products[w].replace(updated);
        self.degsums[w] += d;
        match rest {
            Some(rest) => self.recurse(t + 1, rest, coeff * sign),
            None => self.finish(coeff * sign),
        }
        self.degsums[w] -= d;
        self.products[w] = saved;
    }

    fn finish(&mut self, coeff: i64) {
        // Koszul sign for moving each wire's join operation (of degree
        // mult - 1) past the factors of the earlier wires. The incremental
        // joins in `place` associate to the left; the extra binomial term
        // reassociates each wire to the right-iterated join.
        let mut exponent = 0i64;
        let mut prefix = 0i64;
        for w in 0..self.degsums.len() {
            let joins = self.mult[w] - 1;
            exponent += joins * prefix + joins * (joins - 1) / 2;
            prefix += self.degsums[w];
        }
        let sign = if exponent % 2 == 0 { 1 } else { -1 };
        let factors: Vec<&Element<G::Key>> =
            self.products.iter().map(|p| p.as_ref().expect("every wire is hit")).collect();
        let ring = self.out.ring();
        for (key, c) in crate::coeff::tensor_of(&factors).iter() {
            self.out.add_term(key.clone(), ring.mul(c, coeff * sign));
        }
    }
}

/// Evaluate a surjection generator on a chain, landing in the tensor power
/// indexed by the generator's arity. The optional filter restricts the output
/// to terms whose factor on wire j has exactly the requested degree; branches
/// that cannot reach the requested multidegree are pruned early.
pub fn evaluate_surjection<G: ChainGeometry>(
    s: &SjKey,
    chain: &Element<G::Key>,
    filter: Option<&[i64]>,
) -> Element<TensorKey<G::Key>> {
    let r = s.arity();
    if let Some(f) = filter {
        assert_eq!(f.len(), r, "filter length must match the arity");
    }
    let wires: Vec<usize> = s.0.iter().map(|&v| v as usize - 1).collect();
    let mult: Vec<i64> = s.multiplicities().iter().map(|&k| k as i64).collect();
    let mut last = vec![0usize; r];
    for (t, &w) in wires.iter().enumerate() {
        last[w] = t;
    }
    let mut eval = Evaluator::<G> {
        wires,
        mult,
        last,
        filter,
        products: vec![None; r],
        degsums: vec![0; r],
        out: Element::zero(chain.ring()),
    };
    for (key, c) in chain.iter() {
        eval.recurse(0, key.clone(), c);
    }
    eval.out
}
