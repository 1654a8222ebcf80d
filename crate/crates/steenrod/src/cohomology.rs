//! Cochain complexes and cohomology of finite spaces over `F_p`.
//!
//! Cochains in degree m are dense vectors indexed by the m-cells of a space;
//! the coboundary is `(delta f)(c) = f(boundary c)`. Cohomology bases are
//! computed by exact Gaussian elimination with deterministic pivoting, and
//! every basis class stores a cocycle representative, so operations defined
//! on cochains can be transported to classes and back.

use crate::complexes::{CellId, Space};
use crate::error::Error;
use crate::matrix::{null_space, Echelon, MatFp};
use crate::Result;

/// The coboundary of an `F_p` cochain of degree `m`.
pub fn coboundary(space: &Space, p: u32, z: &[u32], m: usize) -> Vec<u32> {
    assert_eq!(z.len(), space.rank(m), "cochain has the wrong length");
    let mut out = vec![0u32; space.rank(m + 1)];
    for (idx, slot) in out.iter_mut().enumerate() {
        let id = CellId {
            dim: (m + 1) as u32,
            idx: idx as u32,
        };
        let mut acc: i64 = 0;
        for (t, c) in space.boundary_of(id).iter() {
            acc += c * z[t.idx as usize] as i64;
        }
        *slot = acc.rem_euclid(p as i64) as u32;
    }
    out
}

/// The coboundary of an integer cochain; used for integral lifts.
pub fn integer_coboundary(space: &Space, z: &[i64], m: usize) -> Vec<i64> {
    assert_eq!(z.len(), space.rank(m), "cochain has the wrong length");
    let mut out = vec![0i64; space.rank(m + 1)];
    for (idx, slot) in out.iter_mut().enumerate() {
        let id = CellId {
            dim: (m + 1) as u32,
            idx: idx as u32,
        };
        for (t, c) in space.boundary_of(id).iter() {
            *slot += c * z[t.idx as usize];
        }
    }
    out
}

pub fn is_cocycle(space: &Space, p: u32, z: &[u32], m: usize) -> bool {
    coboundary(space, p, z, m).iter().all(|&x| x == 0)
}

/// A computed basis of `H^m(space; F_p)` with stored representatives and the
/// elimination data needed to take coordinates of arbitrary cocycles.
#[derive(Clone, Debug)]
pub struct ClassSpace {
    p: u32,
    degree: usize,
    reps: Vec<Vec<u32>>,
    image: Vec<Vec<u32>>,
}

impl ClassSpace {
    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Rank of H^m.
    pub fn rank(&self) -> usize {
        self.reps.len()
    }

    /// Cocycle representative of the i-th basis class.
    pub fn representative(&self, i: usize) -> &[u32] {
        &self.reps[i]
    }

    /// Coordinates of a cocycle in the computed basis.
    pub fn coords_of(&self, space: &Space, z: &[u32]) -> Result<Vec<u32>> {
        if !is_cocycle(space, self.p, z, self.degree) {
            return Err(Error::NotACocycle {
                degree: self.degree,
            });
        }
        // Solve z = (image combination) + (representative combination); the
        // representative part is the coordinate vector.
        let n = space.rank(self.degree);
        let cols = self.image.len() + self.reps.len();
        let mut m = MatFp::zero(self.p, n, cols);
        for (j, v) in self.image.iter().chain(self.reps.iter()).enumerate() {
            for (i, &x) in v.iter().enumerate() {
                m.set(i, j, x as i64);
            }
        }
        let x = m
            .solve(z)
            .expect("a cocycle always splits over image plus representatives");
        Ok(x[self.image.len()..].to_vec())
    }

    /// Whether two cocycles are cohomologous.
    pub fn same_class(&self, space: &Space, a: &[u32], b: &[u32]) -> Result<bool> {
        Ok(self.coords_of(space, a)? == self.coords_of(space, b)?)
    }
}

/// Compute `H^m(space; F_p)` by exact elimination.
pub fn cohomology(space: &Space, p: u32, m: usize) -> Result<ClassSpace> {
    if !crate::coeff::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let n = space.rank(m);
    // Cocycles: kernel of delta_m, whose matrix is the transpose of the
    // boundary matrix one degree up.
    let kernel: Vec<Vec<u32>> = if space.rank(m + 1) == 0 {
        // Top degree: every cochain is a cocycle.
        (0..n)
            .map(|i| {
                let mut v = vec![0u32; n];
                v[i] = 1;
                v
            })
            .collect()
    } else {
        null_space(&space.boundary_matrix(p, m + 1).transpose())
    };
    // Coboundaries: delta of the dual basis in degree m - 1, which reads off
    // the rows of the degree-m boundary matrix.
    let mut ech = Echelon::new(p, n);
    let mut image = Vec::new();
    if m >= 1 && space.rank(m - 1) > 0 && n > 0 {
        let bm = space.boundary_matrix(p, m);
        for j in 0..space.rank(m - 1) {
            let row: Vec<u32> = (0..n).map(|c| bm.get(j, c)).collect();
            if ech.insert(&row) {
                image.push(row);
            }
        }
    }
    let mut reps = Vec::new();
    for v in kernel {
        if ech.insert(&v) {
            reps.push(v);
        }
    }
    Ok(ClassSpace {
        p,
        degree: m,
        reps,
        image,
    })
}

/// Ranks of `H^m` for all m up to the top dimension of the space.
pub fn betti_numbers(space: &Space, p: u32) -> Result<Vec<usize>> {
    (0..=space.top_dim())
        .map(|m| cohomology(space, p, m).map(|h| h.rank()))
        .collect()
}

/// The Bockstein of a mod-p cocycle, computed from an integral lift:
/// delta(lift) is divisible by p and minus the quotient, reduced mod p,
/// represents the Bockstein class in degree m + 1. The overall sign is the
/// connecting-map normalization under which `beta P^s` restricts to the
/// Bockstein at s = 0; the opposite choice also appears in the literature.
pub fn bockstein_cochain(space: &Space, p: u32, z: &[u32], m: usize) -> Result<Vec<u32>> {
    if !is_cocycle(space, p, z, m) {
        return Err(Error::NotACocycle { degree: m });
    }
    let lift: Vec<i64> = z.iter().map(|&x| x as i64).collect();
    let dz = integer_coboundary(space, &lift, m);
    Ok(dz
        .iter()
        .map(|&x| {
            debug_assert_eq!(x.rem_euclid(p as i64), 0, "lift coboundary not divisible");
            (-x / p as i64).rem_euclid(p as i64) as u32
        })
        .collect())
}
