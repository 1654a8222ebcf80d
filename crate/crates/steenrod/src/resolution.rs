//! The minimal free resolution `W(r)` of the ground ring over `Z[C_r]`: one
//! free generator `e_d` per degree `d >= 0`, with boundary alternating
//! between `T = rho - 1` (odd degrees) and the norm `N` (even degrees).

use crate::coeff::{BasisKey, Element, Ring};
use crate::matrix::MatFp;
use crate::perm::{norm_element, twist_element, Permutation};
use crate::{Error, Result};

/// Basis element `g * e_d` of `W(r)`: a rho-power group element and a degree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct WKey {
    pub g: Permutation,
    pub d: u32,
}

impl WKey {
    pub fn arity(&self) -> usize {
        self.g.arity()
    }
}

impl BasisKey for WKey {
    fn degree(&self) -> i64 {
        self.d as i64
    }
    fn render(&self) -> String {
        let base = format!("e_{}@{}", self.d, self.arity());
        if self.g.is_identity() {
            base
        } else {
            format!("{}\u{b7}{}", self.g.render(), base)
        }
    }
}

/// The generator `e_d` of `W(r)` as an element.
pub fn w_generator(r: usize, d: u32) -> Element<WKey> {
    Element::term(
        Ring::Int,
        WKey {
            g: Permutation::identity(r),
            d,
        },
        1,
    )
}

/// The `C_r`-equivariant boundary: `d(e_d) = T e_(d-1)` for odd `d`,
/// `N e_(d-1)` for even `d > 0`, and `d(e_0) = 0`.
pub fn w_boundary(x: &Element<WKey>) -> Element<WKey> {
    let ring = x.ring();
    let mut out = Element::zero(ring);
    for (key, c) in x.iter() {
        if key.d == 0 {
            continue;
        }
        let r = key.arity();
        let coeffs = if key.d % 2 == 1 {
            twist_element(r)
        } else {
            norm_element(r)
        };
        for (h, ch) in coeffs.iter() {
            out.add_term(
                WKey {
                    g: key.g.compose(h),
                    d: key.d - 1,
                },
                ring.mul(c, ch),
            );
        }
    }
    out
}

/// Dimension of `H_d` of `W(p) ⊗_(F_p[C_p]) F_p`, computed honestly: the
/// induced differential on the one-generator-per-degree quotient is the
/// augmentation of the group-ring boundary coefficient, reduced mod p, and
/// ranks come from actual matrix elimination. Returns 1 for every `d >= 0`.
pub fn w_homology_mod_p(p: u32, d: u32) -> Result<usize> {
    if !crate::coeff::is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    // Augmentation of the boundary of e_k, as a 1x1 matrix over F_p.
    let induced = |k: u32| -> MatFp {
        let mut m = MatFp::zero(p, 1, 1);
        if k > 0 {
            let b = w_boundary(&w_generator(p as usize, k));
            let mut aug = 0i64;
            for (key, c) in b.iter() {
                assert_eq!(key.d, k - 1);
                aug += c;
            }
            m.set(0, 0, aug);
        }
        m
    };
    let rank_in = induced(d + 1).rank();
    let rank_out = induced(d).rank();
    Ok(1 - rank_in - rank_out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{group_ring_act, rho};

    fn act(g: &Permutation, x: &Element<WKey>) -> Element<WKey> {
        x.map_linear(|key| {
            Element::term(
                Ring::Int,
                WKey {
                    g: g.compose(&key.g),
                    d: key.d,
                },
                1,
            )
        })
    }

    #[test]
    fn boundary_of_e0_vanishes() {
        assert!(w_boundary(&w_generator(3, 0)).is_zero());
    }

    #[test]
    fn boundary_of_e1_is_twist() {
        let b = w_boundary(&w_generator(3, 1));
        let mut want = Element::zero(Ring::Int);
        want.add_term(
            WKey {
                g: rho(3, 1),
                d: 0,
            },
            1,
        );
        want.add_term(
            WKey {
                g: Permutation::identity(3),
                d: 0,
            },
            -1,
        );
        assert_eq!(b, want);
    }

    #[test]
    fn boundary_squares_to_zero() {
        for r in 1..=8 {
            for d in 1..=10 {
                let bb = w_boundary(&w_boundary(&w_generator(r, d)));
                assert!(bb.is_zero(), "d^2 != 0 at r={r}, d={d}");
            }
        }
    }

    #[test]
    fn boundary_is_equivariant() {
        for r in 2..=5usize {
            for d in 1..=6 {
                for k in 0..r as i64 {
                    let g = rho(r, k);
                    let x = w_generator(r, d);
                    let left = w_boundary(&act(&g, &x));
                    let right = act(&g, &w_boundary(&x));
                    assert_eq!(left, right, "equivariance failed r={r} d={d} k={k}");
                }
            }
        }
    }

    #[test]
    fn group_ring_action_is_linear() {
        let t = twist_element(3);
        let x = w_generator(3, 2).add(&w_generator(3, 2).scale(2));
        let y = group_ring_act(&t, &x, act);
        let single = group_ring_act(&t, &w_generator(3, 2), act);
        assert_eq!(y, single.scale(3));
    }

    #[test]
    fn homology_of_the_quotient_is_one_dimensional() {
        assert_eq!(w_homology_mod_p(2, 0).unwrap(), 1);
        assert_eq!(w_homology_mod_p(3, 5).unwrap(), 1);
        assert_eq!(w_homology_mod_p(5, 2).unwrap(), 1);
        for p in [2u32, 3, 5] {
            for d in 0..=10 {
                assert_eq!(w_homology_mod_p(p, d).unwrap(), 1, "p={p} d={d}");
            }
        }
        assert!(w_homology_mod_p(4, 1).is_err());
    }

    #[test]
    fn rendering() {
        assert_eq!(
            WKey {
                g: Permutation::identity(2),
                d: 3
            }
            .render(),
            "e_3@2"
        );
        assert_eq!(
            WKey {
                g: rho(3, 1),
                d: 1
            }
            .render(),
            "(2,3,1)\u{b7}e_1@3"
        );
    }
}
