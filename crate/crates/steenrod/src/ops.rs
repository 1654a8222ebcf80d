//! Steenrod power operations on cochains and cohomology classes.
//!
//! The pipeline: the minimal-resolution image psi(e_i) in the surjection
//! complex is evaluated on the standard cell of the right dimension (with a
//! per-wire degree filter, since a homogeneous cochain only sees factors of
//! its own degree), the resulting tensor terms are pushed forward along each
//! cell's characteristic map, and the p-fold product of cochain values is
//! accumulated with the Koszul pairing sign and the classical normalizing
//! constant.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use once_cell::sync::Lazy;
use rayon::prelude::*;

use crate::chains::{
    evaluate_surjection, standard_cube, standard_simplex, ChainGeometry, CubeKey, Cubical,
    SimplexKey, Simplicial,
};
use crate::coeff::{dual_pairing, is_prime, tensor_of, Element, Ring, TensorKey};
use crate::cohomology::{cohomology, is_cocycle, ClassSpace};
use crate::complexes::{CellId, Geometry, Space};
use crate::error::Error;
use crate::surjection::psi_sj;
use crate::Result;

fn modpow(mut base: i64, mut exp: u64, p: i64) -> i64 {
    base = base.rem_euclid(p);
    let mut acc = 1i64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// The odd-prime normalization constant `(-1)^{q(q-1)m/2} (m!)^q mod p` with
/// `m = (p-1)/2`; defined for every integer q, with negative powers taken as
/// modular inverses.
pub fn nu(p: u32, q: i64) -> Result<i64> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p == 2 {
        return Err(Error::OddPrimeRequired);
    }
    let pp = p as i64;
    let m = (pp - 1) / 2;
    // q(q-1) is even; the parity of q(q-1)/2 * m decides the sign.
    let half = (q * (q - 1) / 2).rem_euclid(2);
    let sign = if (half * m).rem_euclid(2) == 1 { -1 } else { 1 };
    let mut fact = 1i64;
    for k in 2..=m {
        fact = fact * k % pp;
    }
    let power = if q >= 0 {
        modpow(fact, q as u64, pp)
    } else {
        modpow(Ring::Mod(p).inv(fact), (-q) as u64, pp)
    };
    Ok((sign * power).rem_euclid(pp))
}

type SimplexTensor = Element<TensorKey<SimplexKey>>;
type CubeTensor = Element<TensorKey<CubeKey>>;

static SIMPLEX_EVAL_MEMO: Lazy<Mutex<HashMap<(usize, u32, usize, i64), Arc<SimplexTensor>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));
static CUBE_EVAL_MEMO: Lazy<Mutex<HashMap<(usize, u32, usize, i64), Arc<CubeTensor>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// psi(e_n) at arity r evaluated on the standard simplex of dimension `dim`,
/// keeping only tensor terms whose every factor has degree `wire_degree`.
/// Exact integer coefficients; memoized.
pub fn psi_eval_simplex(r: usize, n: u32, dim: usize, wire_degree: i64) -> Arc<SimplexTensor> {
    let key = (r, n, dim, wire_degree);
    if let Some(hit) = SIMPLEX_EVAL_MEMO.lock().unwrap().get(&key) {
        return Arc::clone(hit);
    }
    let psi = psi_sj(r, n);
    let chain = Element::term(Ring::Int, standard_simplex(dim), 1);
    let filter = vec![wire_degree; r];
    let mut out = Element::zero(Ring::Int);
    for (s, c) in psi.iter() {
        let eval = evaluate_surjection::<Simplicial>(s, &chain, Some(&filter));
        for (k, e) in eval.iter() {
            out.add_term(k.clone(), c * e);
        }
    }
    let out = Arc::new(out);
    SIMPLEX_EVAL_MEMO
        .lock()
        .unwrap()
        .insert(key, Arc::clone(&out));
    out
}

/// Cubical counterpart of `psi_eval_simplex`.
pub fn psi_eval_cube(r: usize, n: u32, dim: usize, wire_degree: i64) -> Arc<CubeTensor> {
    let key = (r, n, dim, wire_degree);
    if let Some(hit) = CUBE_EVAL_MEMO.lock().unwrap().get(&key) {
        return Arc::clone(hit);
    }
    let psi = psi_sj(r, n);
    let chain = Element::term(Ring::Int, standard_cube(dim), 1);
    let filter = vec![wire_degree; r];
    let mut out = Element::zero(Ring::Int);
    for (s, c) in psi.iter() {
        let eval = evaluate_surjection::<Cubical>(s, &chain, Some(&filter));
        for (k, e) in eval.iter() {
            out.add_term(k.clone(), c * e);
        }
    }
    let out = Arc::new(out);
    CUBE_EVAL_MEMO.lock().unwrap().insert(key, Arc::clone(&out));
    out
}

/// The Koszul sign of pairing a p-fold tensor of degree-m cochains against a
/// p-fold tensor of degree-m chains: (-1)^{m^2 * p(p-1)/2}.
fn pairing_constant(p: u32, m: usize) -> i64 {
    let pairs = (p as i64) * (p as i64 - 1) / 2;
    if ((m * m) as i64 * pairs) % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Resolved parameters of one power operation: the resolution degree fed to
/// psi, the dimension of cells the output evaluates on, and the scalar in
/// front of the expansion (the sign and the nu-constant).
struct PowerData {
    index: i64,
    cell_dim: i64,
    scalar: i64,
}

fn power_data(p: u32, s: i64, bockstein: bool, m: usize) -> Result<PowerData> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if bockstein && p == 2 {
        return Err(Error::OddPrimeRequired);
    }
    let (index, coeff) = if p == 2 {
        (m as i64 - s, 1)
    } else {
        let eps = i64::from(bockstein);
        let index = (m as i64 - 2 * s) * (p as i64 - 1) - eps;
        let sign = if s.rem_euclid(2) == 1 { -1 } else { 1 };
        (index, sign * nu(p, -(m as i64))?)
    };
    Ok(PowerData {
        index,
        cell_dim: p as i64 * m as i64 - index,
        scalar: coeff.rem_euclid(p as i64),
    })
}

/// Chain-level expansion of a cohomological power operation on the standard
/// simplex: the signed tensor sum, with coefficients mod p, on which the
/// p-fold tensor of a degree-m cochain acts (with Koszul signs) to compute
/// the operation. Empty when the operation vanishes for degree reasons.
pub fn power_expansion_simplex(
    p: u32,
    s: i64,
    bockstein: bool,
    m: usize,
) -> Result<SimplexTensor> {
    let data = power_data(p, s, bockstein, m)?;
    let mut out = Element::zero(Ring::Mod(p));
    if data.index < 0 || data.cell_dim < 0 {
        return Ok(out);
    }
    let eval = psi_eval_simplex(p as usize, data.index as u32, data.cell_dim as usize, m as i64);
    for (k, c) in eval.iter() {
        out.add_term(k.clone(), c * data.scalar);
    }
    Ok(out)
}

/// Cubical counterpart of `power_expansion_simplex`.
pub fn power_expansion_cube(p: u32, s: i64, bockstein: bool, m: usize) -> Result<CubeTensor> {
    let data = power_data(p, s, bockstein, m)?;
    let mut out = Element::zero(Ring::Mod(p));
    if data.index < 0 || data.cell_dim < 0 {
        return Ok(out);
    }
    let eval = psi_eval_cube(p as usize, data.index as u32, data.cell_dim as usize, m as i64);
    for (k, c) in eval.iter() {
        out.add_term(k.clone(), c * data.scalar);
    }
    Ok(out)
}

/// Evaluate a tensor expansion on one cell of a space: push every factor
/// forward along the cell's characteristic map and multiply the cochain
/// values.
fn apply_on_cell(
    space: &Space,
    p: u32,
    sim: Option<&SimplexTensor>,
    cub: Option<&CubeTensor>,
    a: &[u32],
    cell: CellId,
) -> u32 {
    let pp = p as i64;
    let mut acc = 0i64;
    match space.geometry() {
        Geometry::Simplicial => {
            for (k, c) in sim.expect("simplicial expansion").iter() {
                let mut prod = c.rem_euclid(pp);
                for factor in &k.0 {
                    match space.pushforward_simplex(cell, factor) {
                        Some(img) => prod = prod * a[img.idx as usize] as i64 % pp,
                        None => {
                            prod = 0;
                        }
                    }
                    if prod == 0 {
                        break;
                    }
                }
                acc = (acc + prod) % pp;
            }
        }
        Geometry::Cubical => {
            for (k, c) in cub.expect("cubical expansion").iter() {
                let mut prod = c.rem_euclid(pp);
                for factor in &k.0 {
                    match space.pushforward_cube(cell, factor) {
                        Some(img) => prod = prod * a[img.idx as usize] as i64 % pp,
                        None => {
                            prod = 0;
                        }
                    }
                    if prod == 0 {
                        break;
                    }
                }
                acc = (acc + prod) % pp;
            }
        }
    }
    acc.rem_euclid(pp) as u32
}

fn apply_expansion(
    space: &Space,
    p: u32,
    sim: Option<&SimplexTensor>,
    cub: Option<&CubeTensor>,
    a: &[u32],
    out_degree: usize,
) -> Vec<u32> {
    (0..space.rank(out_degree))
        .into_par_iter()
        .map(|idx| {
            let cell = CellId {
                dim: out_degree as u32,
                idx: idx as u32,
            };
            apply_on_cell(space, p, sim, cub, a, cell)
        })
        .collect()
}

/// The p-th power map D_i on a degree-m cochain of a space: the cup-(p, i)
/// product of p copies of `a`. Returns the output degree and the cochain;
/// zero for i < 0. The Koszul pairing sign is included.
pub fn big_d_cochain(
    space: &Space,
    p: u32,
    i: i64,
    a: &[u32],
    m: usize,
) -> Result<(usize, Vec<u32>)> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    assert_eq!(a.len(), space.rank(m), "cochain has the wrong length");
    let out_degree = (p as i64 * m as i64 - i).max(0) as usize;
    if i < 0 || p as i64 * m as i64 - i < 0 || out_degree > space.top_dim() {
        return Ok((out_degree, vec![0; space.rank(out_degree)]));
    }
    let scalar = pairing_constant(p, m).rem_euclid(p as i64);
    let (sim, cub) = match space.geometry() {
        Geometry::Simplicial => (
            Some(scale_mod(
                &psi_eval_simplex(p as usize, i as u32, out_degree, m as i64),
                scalar,
                p,
            )),
            None,
        ),
        Geometry::Cubical => (
            None,
            Some(scale_mod(
                &psi_eval_cube(p as usize, i as u32, out_degree, m as i64),
                scalar,
                p,
            )),
        ),
    };
    let out = apply_expansion(space, p, sim.as_ref(), cub.as_ref(), a, out_degree);
    Ok((out_degree, out))
}

fn scale_mod<K: crate::coeff::BasisKey>(x: &Element<K>, scalar: i64, p: u32) -> Element<K> {
    let mut out = Element::zero(Ring::Mod(p));
    for (k, c) in x.iter() {
        out.add_term(k.clone(), c * scalar);
    }
    out
}

/// Apply the cohomological operation `P^s` (or `Sq^s` at p = 2, or the
/// composite `beta P^s` when `bockstein` is set) to a cocycle of degree m.
/// Returns the output degree and a representing cochain.
pub fn steenrod_cochain(
    space: &Space,
    p: u32,
    s: i64,
    bockstein: bool,
    a: &[u32],
    m: usize,
) -> Result<(usize, Vec<u32>)> {
    let data = power_data(p, s, bockstein, m)?;
    assert_eq!(a.len(), space.rank(m), "cochain has the wrong length");
    if !is_cocycle(space, p, a, m) {
        return Err(Error::NotACocycle { degree: m });
    }
    let out_degree = data.cell_dim.max(0) as usize;
    if data.index < 0 || data.cell_dim < 0 || out_degree > space.top_dim() {
        return Ok((out_degree, vec![0; space.rank(out_degree)]));
    }
    // Acting by the p-fold tensor of `a` contributes one more Koszul sign on
    // top of the expansion's own scalar.
    let scalar = (data.scalar * pairing_constant(p, m)).rem_euclid(p as i64);
    let (sim, cub) = match space.geometry() {
        Geometry::Simplicial => (
            Some(scale_mod(
                &psi_eval_simplex(p as usize, data.index as u32, out_degree, m as i64),
                scalar,
                p,
            )),
            None,
        ),
        Geometry::Cubical => (
            None,
            Some(scale_mod(
                &psi_eval_cube(p as usize, data.index as u32, out_degree, m as i64),
                scalar,
                p,
            )),
        ),
    };
    let out = apply_expansion(space, p, sim.as_ref(), cub.as_ref(), a, out_degree);
    Ok((out_degree, out))
}

/// The cup-(r, i) product pairing: the r given cochains (formal sums of
/// dual basis cells over the chain's ring) evaluated with Koszul signs
/// against the surjection image of the i-th resolution generator on the
/// chain. For r = 2, i = 0 this is the usual cup product up to the Koszul
/// sign of the pairing; mod 2 the two agree.
pub fn cup_r_i<G: ChainGeometry>(
    r: usize,
    i: u32,
    cochains: &[&Element<G::Key>],
    chain: &Element<G::Key>,
) -> i64 {
    assert!(r >= 1, "arity must be positive");
    assert_eq!(cochains.len(), r, "one cochain per tensor slot");
    let ring = chain.ring();
    assert!(
        cochains.iter().all(|f| f.ring() == ring),
        "cochains and chain must share a coefficient ring"
    );
    let psi = psi_sj(r, i);
    let mut image = Element::zero(ring);
    for (s, c) in psi.iter() {
        for (k, e) in evaluate_surjection::<G>(s, chain, None).iter() {
            image.add_term(k.clone(), ring.mul(c, e));
        }
    }
    dual_pairing(&tensor_of(cochains), &image)
}

/// The binary cup product of cochains on a space, with the Koszul pairing
/// sign (trivial mod 2, where this is the classical cup product).
pub fn cup_cochain(
    space: &Space,
    p: u32,
    a: &[u32],
    ma: usize,
    b: &[u32],
    mb: usize,
) -> Vec<u32> {
    let out_degree = ma + mb;
    let pp = p as i64;
    if out_degree > space.top_dim() {
        return Vec::new();
    }
    let sign = if (ma * mb) % 2 == 0 { 1 } else { -1 };
    let front_back: Vec<(i64, SimplexKey, SimplexKey)>;
    let front_back_cube: Vec<(i64, CubeKey, CubeKey)>;
    match space.geometry() {
        Geometry::Simplicial => {
            let eval = psi_eval_pair_simplex(out_degree, ma as i64, mb as i64);
            front_back = eval;
            front_back_cube = Vec::new();
        }
        Geometry::Cubical => {
            let eval = psi_eval_pair_cube(out_degree, ma as i64, mb as i64);
            front_back_cube = eval;
            front_back = Vec::new();
        }
    }
    (0..space.rank(out_degree))
        .map(|idx| {
            let cell = CellId {
                dim: out_degree as u32,
                idx: idx as u32,
            };
            let mut acc = 0i64;
            match space.geometry() {
                Geometry::Simplicial => {
                    for (c, f, g) in &front_back {
                        let va = space
                            .pushforward_simplex(cell, f)
                            .map_or(0, |img| a[img.idx as usize] as i64);
                        let vb = space
                            .pushforward_simplex(cell, g)
                            .map_or(0, |img| b[img.idx as usize] as i64);
                        acc = (acc + c * sign * va * vb) % pp;
                    }
                }
                Geometry::Cubical => {
                    for (c, f, g) in &front_back_cube {
                        let va = space
                            .pushforward_cube(cell, f)
                            .map_or(0, |img| a[img.idx as usize] as i64);
                        let vb = space
                            .pushforward_cube(cell, g)
                            .map_or(0, |img| b[img.idx as usize] as i64);
                        acc = (acc + c * sign * va * vb) % pp;
                    }
                }
            }
            acc.rem_euclid(pp) as u32
        })
        .collect()
}

fn psi_eval_pair_simplex(dim: usize, da: i64, db: i64) -> Vec<(i64, SimplexKey, SimplexKey)> {
    let psi = psi_sj(2, 0);
    let chain = Element::term(Ring::Int, standard_simplex(dim), 1);
    let mut out = Vec::new();
    for (s, c) in psi.iter() {
        let eval = evaluate_surjection::<Simplicial>(s, &chain, Some(&[da, db]));
        for (k, e) in eval.iter() {
            out.push((c * e, k.0[0].clone(), k.0[1].clone()));
        }
    }
    out
}

fn psi_eval_pair_cube(dim: usize, da: i64, db: i64) -> Vec<(i64, CubeKey, CubeKey)> {
    let psi = psi_sj(2, 0);
    let chain = Element::term(Ring::Int, standard_cube(dim), 1);
    let mut out = Vec::new();
    for (s, c) in psi.iter() {
        let eval = evaluate_surjection::<Cubical>(s, &chain, Some(&[da, db]));
        for (k, e) in eval.iter() {
            out.push((c * e, k.0[0].clone(), k.0[1].clone()));
        }
    }
    out
}

/// The result of a power operation transported to cohomology.
#[derive(Clone, Debug)]
pub struct ClassOperation {
    pub source_degree: usize,
    pub target_degree: usize,
    /// Coordinates in the computed basis of the target cohomology group.
    pub coords: Vec<u32>,
    /// The representing cochain (indexed by target-degree cells).
    pub cochain: Vec<u32>,
}

/// Apply a Steenrod operation to the `idx`-th basis class of `H^m`.
pub fn steenrod_on_class(
    space: &Space,
    p: u32,
    s: i64,
    bockstein: bool,
    m: usize,
    idx: usize,
) -> Result<ClassOperation> {
    if m > space.top_dim() {
        return Err(Error::DegreeOutOfRange {
            degree: m,
            top: space.top_dim(),
        });
    }
    let hm = cohomology(space, p, m)?;
    if idx >= hm.rank() {
        return Err(Error::NoSuchClass {
            degree: m,
            index: idx,
            rank: hm.rank(),
        });
    }
    let rep = hm.representative(idx).to_vec();
    let (target_degree, cochain) = steenrod_cochain(space, p, s, bockstein, &rep, m)?;
    let coords = class_coords(space, p, target_degree, &cochain)?;
    Ok(ClassOperation {
        source_degree: m,
        target_degree,
        coords,
        cochain,
    })
}

/// Coordinates of a cocycle in the computed basis of its degree; empty when
/// the degree carries no cells.
pub fn class_coords(space: &Space, p: u32, m: usize, z: &[u32]) -> Result<Vec<u32>> {
    if m > space.top_dim() {
        return Ok(Vec::new());
    }
    let h = cohomology(space, p, m)?;
    h.coords_of(space, z)
}

/// Cohomology of one degree, re-exported for callers that pair operations
/// with explicit class bases.
pub fn class_space(space: &Space, p: u32, m: usize) -> Result<ClassSpace> {
    cohomology(space, p, m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::BasisKey;

    #[test]
    fn nu_values() {
        assert_eq!(nu(3, 0).unwrap(), 1);
        assert_eq!(nu(3, 2).unwrap(), 2);
        assert_eq!(nu(5, 1).unwrap(), 2);
        assert_eq!(nu(3, -1).unwrap(), 2);
        assert!(matches!(nu(2, 1), Err(Error::OddPrimeRequired)));
        assert!(matches!(nu(9, 1), Err(Error::NotPrime(9))));
    }

    #[test]
    fn degree_bookkeeping() {
        // Sq^1 on degree 3: resolution degree 2, output degree 4.
        let d = power_data(2, 1, false, 3).unwrap();
        assert_eq!((d.index, d.cell_dim), (2, 4));
        // beta P^1 on degree 3 at p = 3: resolution degree 1, output 8.
        let d = power_data(3, 1, true, 3).unwrap();
        assert_eq!((d.index, d.cell_dim), (1, 8));
        // P^1 on degree 3 at p = 3: resolution degree 2, output 7.
        let d = power_data(3, 1, false, 3).unwrap();
        assert_eq!((d.index, d.cell_dim), (2, 7));
        assert!(matches!(
            power_data(2, 0, true, 1),
            Err(Error::OddPrimeRequired)
        ));
    }

    #[test]
    fn cup_pairing_examples() {
        // r=2, i=0 is the front/back cup product; the Koszul pairing of two
        // degree-1 cochains contributes one sign.
        let top = Element::term(Ring::Int, standard_simplex(2), 1);
        let x = Element::term(Ring::Int, SimplexKey::new(vec![0, 1]), 1);
        let y = Element::term(Ring::Int, SimplexKey::new(vec![1, 2]), 1);
        assert_eq!(cup_r_i::<Simplicial>(2, 0, &[&x, &y], &top), -1);
        assert_eq!(cup_r_i::<Simplicial>(2, 0, &[&y, &x], &top), 0);
        // Degree-0 times degree-1 pairs without a sign.
        let v = Element::term(Ring::Int, SimplexKey::new(vec![0]), 1);
        let e = Element::term(Ring::Int, SimplexKey::new(vec![0, 1, 2]), 1);
        assert_eq!(cup_r_i::<Simplicial>(2, 0, &[&v, &e], &top), 1);
        // r=2, i=1 on an edge: the cup-1 square of a degree-1 cochain.
        let edge = Element::term(Ring::Int, standard_simplex(1), 1);
        let z = Element::term(Ring::Int, SimplexKey::new(vec![0, 1]), 1);
        assert_eq!(cup_r_i::<Simplicial>(2, 1, &[&z, &z], &edge), -1);
        // An index beyond the chain's capacity evaluates to zero.
        assert_eq!(cup_r_i::<Simplicial>(2, 4, &[&z, &z], &edge), 0);
    }

    #[test]
    fn beta_p0_is_the_bockstein() {
        for &(p, nn) in &[(3u32, 4usize), (5, 4)] {
            let space = Space::builtin(&format!("bc:{p}:{nn}")).unwrap();
            let h1 = class_space(&space, p, 1).unwrap();
            let a = h1.representative(0).to_vec();
            let (deg, out) = steenrod_cochain(&space, p, 0, true, &a, 1).unwrap();
            assert_eq!(deg, 2);
            let h2 = class_space(&space, p, 2).unwrap();
            let bock = crate::cohomology::bockstein_cochain(&space, p, &a, 1).unwrap();
            assert_eq!(
                h2.coords_of(&space, &out).unwrap(),
                h2.coords_of(&space, &bock).unwrap(),
                "beta P^0 must be the Bockstein at p = {p}"
            );
        }
    }

    #[test]
    fn top_power_is_the_pth_cup_power() {
        // P^1 on a degree-2 class at p = 3 is the cup cube.
        let space = Space::builtin("bc:3:7").unwrap();
        let h2 = class_space(&space, 3, 2).unwrap();
        let y = h2.representative(0).to_vec();
        let (deg, out) = steenrod_cochain(&space, 3, 1, false, &y, 2).unwrap();
        assert_eq!(deg, 6);
        let yy = cup_cochain(&space, 3, &y, 2, &y, 2);
        let yyy = cup_cochain(&space, 3, &yy, 4, &y, 2);
        let h6 = class_space(&space, 3, 6).unwrap();
        assert_eq!(
            h6.coords_of(&space, &out).unwrap(),
            h6.coords_of(&space, &yyy).unwrap()
        );
    }

    #[test]
    fn cup_square_on_the_projective_plane() {
        let space = Space::builtin("rp2").unwrap();
        let h1 = class_space(&space, 2, 1).unwrap();
        let a = h1.representative(0).to_vec();
        let sq = cup_cochain(&space, 2, &a, 1, &a, 1);
        let h2 = class_space(&space, 2, 2).unwrap();
        let coords = h2.coords_of(&space, &sq).unwrap();
        assert_eq!(coords, vec![1], "the degree-1 class squares to the generator");
    }

    #[test]
    fn squaring_matches_the_cup_square_in_top_operations() {
        // Sq^m on a degree-m class is the cup square.
        let space = Space::builtin("rp2").unwrap();
        let h1 = class_space(&space, 2, 1).unwrap();
        let a = h1.representative(0).to_vec();
        let (deg, sq1) = steenrod_cochain(&space, 2, 1, false, &a, 1).unwrap();
        assert_eq!(deg, 2);
        let cup = cup_cochain(&space, 2, &a, 1, &a, 1);
        let h2 = class_space(&space, 2, 2).unwrap();
        assert!(h2.same_class(&space, &sq1, &cup).unwrap());
    }

    #[test]
    fn p0_is_the_identity_on_a_small_sphere() {
        let space = Space::builtin("boundary-simplex:2").unwrap();
        for p in [2u32, 3] {
            let op = steenrod_on_class(&space, p, 0, false, 1, 0).unwrap();
            assert_eq!(op.target_degree, 1);
            assert_eq!(op.coords, vec![1], "P^0 must fix the generator at p = {p}");
        }
    }

    #[test]
    fn sq0_expansion_is_grouplike_on_vertices() {
        // On degree 0 the expansion of Sq^0 is the diagonal vertex tensor.
        let e = power_expansion_simplex(2, 0, false, 0).unwrap();
        assert_eq!(e.num_terms(), 1);
        let (k, c) = e.iter().next().unwrap();
        assert_eq!(c, 1);
        assert_eq!(k.render(), "[0]⊗[0]");
    }

    #[test]
    fn bockstein_errors_at_two() {
        let space = Space::builtin("rp2").unwrap();
        assert!(matches!(
            steenrod_on_class(&space, 2, 1, true, 1, 0),
            Err(Error::OddPrimeRequired)
        ));
    }

    #[test]
    fn non_cocycles_are_rejected() {
        let space = Space::builtin("rp2").unwrap();
        let mut a = vec![0u32; space.rank(1)];
        a[0] = 1;
        if !is_cocycle(&space, 2, &a, 1) {
            assert!(matches!(
                steenrod_cochain(&space, 2, 1, false, &a, 1),
                Err(Error::NotACocycle { degree: 1 })
            ));
        }
    }

    #[test]
    fn class_selector_errors() {
        let space = Space::builtin("rp2").unwrap();
        assert!(matches!(
            steenrod_on_class(&space, 2, 1, false, 9, 0),
            Err(Error::DegreeOutOfRange { .. })
        ));
        assert!(matches!(
            steenrod_on_class(&space, 3, 1, false, 1, 0),
            Err(Error::NoSuchClass { .. })
        ));
    }
}
