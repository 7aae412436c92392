//! Exact rational linear algebra backing the definiteness certificates:
//! leading principal minors, symmetric congruence reduction (inertia), and
//! rational kernel bases. Internal to the crate.

use num_traits::{Signed, Zero};

use crate::Rat;

pub(crate) fn is_symmetric(m: &[Vec<Rat>]) -> bool {
    let n = m.len();
    m.iter().all(|r| r.len() == n)
        && (0..n).all(|i| (0..i).all(|j| m[i][j] == m[j][i]))
}

/// Determinant by Gaussian elimination with row pivoting.
fn determinant(m: &[Vec<Rat>]) -> Rat {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut det = Rat::from_integer(1.into());
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Rat::zero();
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        det *= &a[c][c];
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &a[c][c];
            for cc in c..n {
                let t = &f * &a[c][cc];
                a[r][cc] -= t;
            }
        }
    }
    det
}

/// All leading principal minors `det(m[..k][..k])`, `k = 1..=n`.
///
/// Single elimination pass without pivoting covers the generic case
/// (minor_k = product of the first k pivots); a zero pivot falls back to
/// per-size determinants for the remaining minors.
pub(crate) fn leading_principal_minors(m: &[Vec<Rat>]) -> Vec<Rat> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut out = Vec::with_capacity(n);
    let mut prod = Rat::from_integer(1.into());
    for c in 0..n {
        if a[c][c].is_zero() {
            // Degenerate leading block: finish with explicit determinants.
            for k in c + 1..=n {
                let sub: Vec<Vec<Rat>> = m[..k].iter().map(|r| r[..k].to_vec()).collect();
                out.push(determinant(&sub));
            }
            return out;
        }
        prod *= &a[c][c];
        out.push(prod.clone());
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &a[c][c];
            for cc in c..n {
                let t = &f * &a[c][cc];
                a[r][cc] -= t;
            }
        }
    }
    out
}

/// Inertia of a symmetric rational matrix, certified by congruence
/// reduction: counts of positive, negative, and zero pivots plus the pivot
/// sequence itself.
#[derive(Clone, Debug)]
pub(crate) struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
    pub pivots: Vec<Rat>,
}

pub(crate) fn symmetric_inertia(m: &[Vec<Rat>]) -> Inertia {
    debug_assert!(is_symmetric(m));
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m.to_vec();
    let mut inertia = Inertia { positive: 0, negative: 0, zero: 0, pivots: Vec::new() };
    let mut s = 0;
    while s < n {
        if a[s][s].is_zero() {
            // Bring a nonzero diagonal entry to position s, if any exists.
            if let Some(i) = (s + 1..n).find(|&i| !a[i][i].is_zero()) {
                a.swap(s, i);
                for row in a.iter_mut() {
                    row.swap(s, i);
                }
            } else if let Some((i, j)) = (s..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .find(|&(i, j)| !a[i][j].is_zero())
            {
                // All remaining diagonal entries vanish: make one nonzero by
                // the congruence e_i <- e_i + e_j (diagonal becomes 2*a_ij).
                for c in 0..n {
                    let t = a[j][c].clone();
                    a[i][c] += t;
                }
                for r in 0..n {
                    let t = a[r][j].clone();
                    a[r][i] += t;
                }
                continue;
            } else {
                // Remaining block is identically zero.
                inertia.zero += n - s;
                for _ in s..n {
                    inertia.pivots.push(Rat::zero());
                }
                break;
            }
        }
        let p = a[s][s].clone();
        if p.is_positive() {
            inertia.positive += 1;
        } else {
            inertia.negative += 1;
        }
        inertia.pivots.push(p.clone());
        for r in s + 1..n {
            if a[r][s].is_zero() {
                continue;
            }
            let f = &a[r][s] / &p;
            for c in s..n {
                let t = &f * &a[s][c];
                a[r][c] -= t;
            }
        }
        // For symmetric input the row elimination already leaves the congruent
        // (Schur-complement) trailing block; clear the pivot row and column.
        for r in s + 1..n {
            a[r][s] = Rat::zero();
        }
        for c in s + 1..n {
            a[s][c] = Rat::zero();
        }
        s += 1;
    }
    inertia
}

/// Basis of the right kernel of a `rows x n` rational matrix, via reduced
/// row echelon form. Deterministic: one basis vector per free column, in
/// ascending column order.
pub(crate) fn kernel_basis(rows: &[Vec<Rat>], n: usize) -> Vec<Vec<Rat>> {
    let mut a: Vec<Vec<Rat>> = rows.to_vec();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for c in 0..n {
        let Some(p) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let lead = a[rank][c].clone();
        for x in a[rank].iter_mut() {
            *x /= &lead;
        }
        for r in 0..a.len() {
            if r != rank && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                for cc in 0..n {
                    let t = &f * &a[rank][cc];
                    a[r][cc] -= t;
                }
            }
        }
        pivot_cols.push(c);
        rank += 1;
    }
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![Rat::zero(); n];
        v[free] = Rat::from_integer(1.into());
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -a[r][free].clone();
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    fn quad_form(m: &[Vec<Rat>], x: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (i, xi) in x.iter().enumerate() {
            for (j, xj) in x.iter().enumerate() {
                acc += xi * &m[i][j] * xj;
            }
        }
        acc
    }

    use super::*;
    use crate::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect()
    }

    #[test]
    fn minors_of_a2_cartan() {
        let c = m(&[&[2, -1], &[-1, 2]]);
        assert_eq!(leading_principal_minors(&c), vec![rat_int(2), rat_int(3)]);
    }

    #[test]
    fn minors_with_zero_pivot_fallback() {
        let a = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(leading_principal_minors(&a), vec![rat_int(0), rat_int(-1)]);
    }

    #[test]
    fn inertia_counts() {
        let a = m(&[&[2, 0, 0], &[0, -3, 0], &[0, 0, 0]]);
        let i = symmetric_inertia(&a);
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 1));
        // hyperbolic plane: signature (1, 1)
        let h = m(&[&[0, 1], &[1, 0]]);
        let i = symmetric_inertia(&h);
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 0));
        // Lorentzian example used by surface profiles
        let l = m(&[&[2, 1], &[1, -1]]);
        let i = symmetric_inertia(&l);
        assert_eq!((i.positive, i.negative, i.zero), (1, 1, 0));
    }

    #[test]
    fn kernel_of_two_functionals() {
        let rows = vec![
            vec![rat_int(1), rat_int(0), rat_int(-1), rat_int(2)],
            vec![rat_int(0), rat_int(1), rat_int(1), rat_int(0)],
        ];
        let basis = kernel_basis(&rows, 4);
        assert_eq!(basis.len(), 2);
        for v in &basis {
            for row in &rows {
                let dot: Rat = row.iter().zip(v).map(|(a, b)| a * b).sum();
                assert_eq!(dot, rat_int(0));
            }
        }
    }

    #[test]
    fn quad_form_eval() {
        let g = m(&[&[0, -1], &[-1, 0]]);
        assert_eq!(quad_form(&g, &[rat(1, 2), rat_int(3)]), rat_int(-3));
    }
}
