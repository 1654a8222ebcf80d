//! Dense linear algebra over `F_p`: rank, reduced echelon bases, and a
//! quotient-space coordinate helper. Pivoting is deterministic (first nonzero
//! entry in canonical column order), so computed bases are reproducible.

use crate::coeff::{is_prime, Ring};

/// Dense row-major matrix over `F_p`.
#[derive(Clone, Debug)]
pub struct MatFp {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl MatFp {
    pub fn zero(p: u32, rows: usize, cols: usize) -> MatFp {
        assert!(is_prime(p), "modulus {p} is not prime");
        MatFp {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v.rem_euclid(self.p as i64) as u32;
    }

    /// Add `v` to the entry at `(r, c)`.
    pub fn add_at(&mut self, r: usize, c: usize, v: i64) {
        let cur = self.get(r, c) as i64;
        self.set(r, c, cur + v);
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "dimension mismatch in apply");
        let p = self.p as u64;
        (0..self.rows)
            .map(|r| {
                let mut acc = 0u64;
                for c in 0..self.cols {
                    acc = (acc + self.get(r, c) as u64 * v[c] as u64) % p;
                }
                acc as u32
            })
            .collect()
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.p, self.cols);
        for r in 0..self.rows {
            let row: Vec<u32> = (0..self.cols).map(|c| self.get(r, c)).collect();
            ech.insert(&row);
        }
        ech.rank()
    }

    /// Column vectors, in column order.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols)
            .map(|c| (0..self.rows).map(|r| self.get(r, c)).collect())
            .collect()
    }

    pub fn transpose(&self) -> MatFp {
        let mut out = MatFp::zero(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c) as i64);
            }
        }
        out
    }

    /// One solution of `self * x = rhs` (free variables set to zero), or
    /// `None` when the system is inconsistent. Deterministic.
    pub fn solve(&self, rhs: &[u32]) -> Option<Vec<u32>> {
        assert_eq!(rhs.len(), self.rows, "dimension mismatch in solve");
        let p = self.p as i64;
        let ring = Ring::Mod(self.p);
        // Row-reduce the augmented matrix [self | rhs].
        let mut aug: Vec<Vec<i64>> = (0..self.rows)
            .map(|r| {
                let mut row: Vec<i64> =
                    (0..self.cols).map(|c| self.get(r, c) as i64).collect();
                row.push(rhs[r] as i64);
                row
            })
            .collect();
        let mut pivots: Vec<usize> = Vec::new();
        let mut rank = 0usize;
        for col in 0..self.cols {
            let Some(pr) = (rank..aug.len()).find(|&r| aug[r][col] != 0) else {
                continue;
            };
            aug.swap(rank, pr);
            let inv = ring.inv(aug[rank][col]);
            for x in aug[rank].iter_mut() {
                *x = (*x * inv).rem_euclid(p);
            }
            for r in 0..aug.len() {
                if r != rank && aug[r][col] != 0 {
                    let c = aug[r][col];
                    for j in 0..=self.cols {
                        aug[r][j] = (aug[r][j] - c * aug[rank][j]).rem_euclid(p);
                    }
                }
            }
            pivots.push(col);
            rank += 1;
        }
        // Inconsistent when a zero row has nonzero right-hand side.
        if aug[rank..].iter().any(|row| row[self.cols] != 0) {
            return None;
        }
        let mut x = vec![0u32; self.cols];
        for (i, &pc) in pivots.iter().enumerate() {
            x[pc] = aug[i][self.cols] as u32;
        }
        Some(x)
    }
}

/// A growing reduced-echelon basis of a subspace of `F_p^dim`. Rows are kept
/// fully reduced with pivot entry 1; pivots are the first nonzero coordinate
/// in canonical order.
#[derive(Clone, Debug)]
pub struct Echelon {
    p: u32,
    dim: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(p: u32, dim: usize) -> Echelon {
        assert!(is_prime(p), "modulus {p} is not prime");
        Echelon {
            p,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Reduce `v` against the basis; the result has zero entries at all
    /// pivot positions.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.dim, "dimension mismatch in reduce");
        let p = self.p as i64;
        let mut out: Vec<i64> = v.iter().map(|&x| x as i64).collect();
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            let c = out[piv].rem_euclid(p);
            if c != 0 {
                for j in 0..self.dim {
                    out[j] = (out[j] - c * row[j] as i64).rem_euclid(p);
                }
            }
        }
        out.into_iter().map(|x| x as u32).collect()
    }

    /// Reduce `v` and also return the coefficient of each basis row used, in
    /// row insertion order.
    pub fn reduce_with_coords(&self, v: &[u32]) -> (Vec<u32>, Vec<u32>) {
        assert_eq!(v.len(), self.dim, "dimension mismatch in reduce");
        let p = self.p as i64;
        let mut out: Vec<i64> = v.iter().map(|&x| x as i64).collect();
        let mut coords = vec![0u32; self.rows.len()];
        for (i, (row, &piv)) in self.rows.iter().zip(&self.pivots).enumerate() {
            let c = out[piv].rem_euclid(p);
            if c != 0 {
                for j in 0..self.dim {
                    out[j] = (out[j] - c * row[j] as i64).rem_euclid(p);
                }
            }
            coords[i] = c as u32;
        }
        (out.into_iter().map(|x| x as u32).collect(), coords)
    }

    /// Insert `v`; returns true when `v` was independent of the basis (and
    /// was added). Existing rows are back-substituted so the basis stays in
    /// reduced form.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let ring = Ring::Mod(self.p);
        let mut red = self.reduce(v);
        let piv = match red.iter().position(|&x| x != 0) {
            Some(i) => i,
            None => return false,
        };
        // Scale so the pivot entry is 1.
        let inv = ring.inv(red[piv] as i64);
        for x in red.iter_mut() {
            *x = (*x as i64 * inv).rem_euclid(self.p as i64) as u32;
        }
        // Eliminate the new pivot from existing rows.
        let p = self.p as i64;
        for row in self.rows.iter_mut() {
            let c = row[piv] as i64;
            if c != 0 {
                for j in 0..self.dim {
                    row[j] = ((row[j] as i64 - c * red[j] as i64).rem_euclid(p)) as u32;
                }
            }
        }
        self.rows.push(red);
        self.pivots.push(piv);
        true
    }

    /// Membership test for the spanned subspace.
    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }
}

/// Basis of the null space of `m` (vectors in the column space coordinates),
/// deterministic in column order.
pub fn null_space(m: &MatFp) -> Vec<Vec<u32>> {
    let p = m.p;
    let ring = Ring::Mod(p);
    // Reduced row echelon of m.
    let mut rows: Vec<Vec<u32>> = (0..m.rows)
        .map(|r| (0..m.cols).map(|c| m.get(r, c)).collect())
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..m.cols {
        let pivot_row = (rank..rows.len()).find(|&r| rows[r][col] != 0);
        let Some(pr) = pivot_row else { continue };
        rows.swap(rank, pr);
        let inv = ring.inv(rows[rank][col] as i64);
        for j in 0..m.cols {
            rows[rank][j] = (rows[rank][j] as i64 * inv).rem_euclid(p as i64) as u32;
        }
        for r in 0..rows.len() {
            if r != rank && rows[r][col] != 0 {
                let c = rows[r][col] as i64;
                for j in 0..m.cols {
                    rows[r][j] =
                        ((rows[r][j] as i64 - c * rows[rank][j] as i64).rem_euclid(p as i64)) as u32;
                }
            }
        }
        pivots.push(col);
        rank += 1;
    }
    // Free columns generate the kernel.
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![0u32; m.cols];
        v[free] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            // Row i reads: x_pc + sum over free columns of rows[i][f] x_f = 0.
            let c = rows[i][free] as i64;
            v[pc] = (-c).rem_euclid(p as i64) as u32;
        }
        basis.push(v);
    }
    basis
}
