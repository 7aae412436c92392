//! ADE root-system data: Cartan and exceptional intersection matrices,
//! highest-root coefficients, Coxeter numbers, root enumeration by
//! reflection closure, and exact definiteness certificates.
//!
//! Node ordering follows the group module's ordering of nontrivial
//! irreducibles, so coefficient vectors indexed by exceptional curves and
//! by irreps align position by position.

use num_traits::Signed;

use crate::groups::{GroupFamily, KleinianGroup};
use crate::linalg;
use crate::{rat_int, Error, Rat, Result};

/// A simply laced root system presented by its Cartan matrix in a fixed
/// node order.
#[derive(Clone, Debug)]
pub struct RootSystem {
    /// Display label such as `A2`, `D4`, `E8`.
    pub label: String,
    /// Number of simple roots (equal to the number of nontrivial irreps of
    /// the paired group).
    pub rank: usize,
    /// Symmetric positive definite Cartan matrix.
    pub cartan: Vec<Vec<i64>>,
    /// Highest-root coefficients; these equal the dimensions of the paired
    /// group's nontrivial irreps.
    pub highest_root: Vec<i64>,
    /// Coxeter number `h = 1 + sum(highest_root)`.
    pub coxeter: u64,
}

/// A root in simple-root coordinates; self-pairing under the Cartan form
/// is always 2.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Root {
    pub coords: Vec<i64>,
}

impl RootSystem {
    /// The root system of the resolution graph paired with a group:
    /// `A:N -> A_{N-1}`, `D:n -> D_{n+2}`, `E6/E7/E8` to the matching
    /// exceptional system.
    pub fn for_group(g: &KleinianGroup) -> Result<RootSystem> {
        let dims: Vec<i64> = g.nontrivial_dims().iter().map(|&d| d as i64).collect();
        let rank = dims.len();
        let (label, edges) = match g.family {
            GroupFamily::Cyclic { n } => {
                let edges = (0..rank.saturating_sub(1)).map(|i| (i, i + 1)).collect();
                (format!("A{}", n - 1), edges)
            }
            GroupFamily::BinaryDihedral { n } => {
                // Nodes [rho_x-like, c1, c2, psi_1, ..., psi_{n-1}]: the
                // chi(a) = 1 character attaches to psi_1, the two
                // chi(a) = -1 characters to psi_{n-1}.
                let n = n as usize;
                let mut edges = vec![(0, 3), (1, n + 1), (2, n + 1)];
                edges.extend((3..n + 1).map(|i| (i, i + 1)));
                (format!("D{}", n + 2), edges)
            }
            GroupFamily::BinaryTetrahedral => {
                // Nodes [rho_1, rho_2, V_0, V_1, V_2, W].
                ("E6".into(), vec![(0, 3), (1, 4), (2, 5), (3, 5), (4, 5)])
            }
            GroupFamily::BinaryOctahedral => {
                // Nodes [sgn, chi_2, V, V', chi_3, chi_3', chi_4].
                ("E7".into(), vec![(2, 5), (5, 6), (6, 4), (6, 1), (4, 3), (3, 0)])
            }
            GroupFamily::BinaryIcosahedral => {
                // Nodes [V, 2', 3, 3', 4, 4', 5, 6].
                ("E8".into(), vec![(0, 2), (2, 4), (4, 6), (6, 7), (7, 5), (5, 1), (7, 3)])
            }
        };
        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            cartan[i][i] = 2;
        }
        for (a, b) in edges {
            cartan[a][b] = -1;
            cartan[b][a] = -1;
        }
        let coxeter = 1 + dims.iter().sum::<i64>() as u64;
        let rs = RootSystem { label, rank, cartan, highest_root: dims, coxeter };
        rs.validate()?;
        Ok(rs)
    }

    /// Intersection matrix of the exceptional curves: the negative of the
    /// Cartan matrix (diagonal -2, entry 1 for adjacent nodes).
    pub fn intersection(&self) -> Vec<Vec<i64>> {
        self.cartan
            .iter()
            .map(|row| row.iter().map(|&x| -x).collect())
            .collect()
    }

    /// Cartan pairing of two coordinate vectors.
    pub fn pairing(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut acc = 0;
        for (i, ai) in a.iter().enumerate() {
            for (j, bj) in b.iter().enumerate() {
                acc += ai * self.cartan[i][j] * bj;
            }
        }
        acc
    }

    fn validate(&self) -> Result<()> {
        let rank = self.rank;
        let err = |m: String| Err(Error::Inconsistency(m));
        if self.cartan.len() != rank || self.highest_root.len() != rank {
            return err("root system dimensions disagree".into());
        }
        for i in 0..rank {
            for j in 0..rank {
                if self.cartan[i][j] != self.cartan[j][i] {
                    return err("Cartan matrix not symmetric".into());
                }
            }
        }
        let as_rat: Vec<Vec<Rat>> = self
            .cartan
            .iter()
            .map(|r| r.iter().map(|&x| rat_int(x)).collect())
            .collect();
        if !linalg::leading_principal_minors(&as_rat)
            .iter()
            .all(|m| m.is_positive())
        {
            return err(format!("Cartan matrix of {} is not positive definite", self.label));
        }
        // The highest root pairs to {0, 1, 2} against every simple root and
        // has self-pairing 2.
        if self.pairing(&self.highest_root, &self.highest_root) != 2 {
            return err(format!("highest root of {} is not a root", self.label));
        }
        for i in 0..rank {
            let mut e = vec![0i64; rank];
            e[i] = 1;
            let p = self.pairing(&self.highest_root, &e);
            if !(0..=2).contains(&p) {
                return err(format!("highest root of {} is not dominant", self.label));
            }
        }
        if self.coxeter != 1 + self.highest_root.iter().sum::<i64>() as u64 {
            return err("Coxeter number disagrees with highest-root coefficients".into());
        }
        Ok(())
    }
}

/// All roots, generated as the closure of the simple roots under simple
/// reflections `s_i(a) = a - <a, e_i> e_i`. Deterministic sorted output;
/// the count is always `rank * coxeter`.
pub fn enumerate_roots(rs: &RootSystem) -> Vec<Root> {
    use std::collections::BTreeSet;
    let rank = rs.rank;
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let mut frontier: Vec<Vec<i64>> = Vec::new();
    for i in 0..rank {
        let mut e = vec![0i64; rank];
        e[i] = 1;
        found.insert(e.clone());
        frontier.push(e);
    }
    while let Some(alpha) = frontier.pop() {
        for i in 0..rank {
            let pairing: i64 = (0..rank).map(|j| rs.cartan[i][j] * alpha[j]).sum();
            let mut refl = alpha.clone();
            refl[i] -= pairing;
            if found.insert(refl.clone()) {
                frontier.push(refl);
            }
        }
    }
    found.into_iter().map(|coords| Root { coords }).collect()
}

/// Outcome of an exact Sylvester-criterion test for negative definiteness.
#[derive(Clone, Debug)]
pub struct DefinitenessCertificate {
    pub negative_definite: bool,
    /// Leading principal minors of the negated matrix; all strictly
    /// positive exactly when the input is negative definite.
    pub minors: Vec<Rat>,
}

/// Decides negative definiteness of a symmetric rational matrix by
/// Sylvester's criterion in exact arithmetic. The minor sequence is the
/// certificate.
pub fn is_negative_definite(m: &[Vec<Rat>]) -> Result<DefinitenessCertificate> {
    if !linalg::is_symmetric(m) {
        return Err(Error::NotSymmetric);
    }
    let negated: Vec<Vec<Rat>> = m
        .iter()
        .map(|row| row.iter().map(|x| -x.clone()).collect())
        .collect();
    let minors = linalg::leading_principal_minors(&negated);
    let negative_definite = !minors.is_empty() && minors.iter().all(|x| x.is_positive());
    Ok(DefinitenessCertificate { negative_definite, minors })
}

/// Exact certificate plus floating eigenvalue-bound report for the
/// rank-one-corrected intersection form `A = H + (1/N^2) r r^T`, where `H`
/// is the exceptional intersection matrix, `r` the highest-root
/// coefficients, and `N` the paired group order.
#[derive(Clone, Debug)]
pub struct ToeplitzReport {
    pub certificate: DefinitenessCertificate,
    /// The floating quantity `eta_1 + (h-1)/N^2` with
    /// `eta_1 = -2 + 2cos(pi/h)`, evaluated with a small error pad.
    /// Informational only: the exact certificate is authoritative. The
    /// rank-one summand's nonzero eigenvalue is `sum r_i^2 = N - 1` rather
    /// than `h - 1 = sum r_i`, so outside the cyclic family this quantity
    /// underestimates the true Weyl bound and its sign proves nothing.
    pub weyl_bound: f64,
    /// Whether the padded bound is strictly negative.
    pub weyl_bound_negative: bool,
}

pub fn toeplitz_lemma_check(rs: &RootSystem, group_order: u64) -> Result<ToeplitzReport> {
    let n2 = rat_int(group_order as i64) * rat_int(group_order as i64);
    let h = rs.intersection();
    let a: Vec<Vec<Rat>> = (0..rs.rank)
        .map(|i| {
            (0..rs.rank)
                .map(|j| {
                    rat_int(h[i][j])
                        + rat_int(rs.highest_root[i] * rs.highest_root[j]) / n2.clone()
                })
                .collect()
        })
        .collect();
    let certificate = is_negative_definite(&a)?;
    let hh = rs.coxeter as f64;
    let bound = -2.0 + 2.0 * (std::f64::consts::PI / hh).cos()
        + (hh - 1.0) / (group_order as f64 * group_order as f64);
    // 1e-9 pad absorbs the cos() rounding at desk scale.
    let weyl_bound_negative = bound + 1e-9 < 0.0;
    Ok(ToeplitzReport { certificate, weyl_bound: bound, weyl_bound_negative })
}

/// Largest eigenvalue of a symmetric matrix by Jacobi rotations. Floating,
/// informational; used for the spectral cross-check of the intersection
/// matrix against `-2 + 2cos(pi/h)`.
pub fn largest_eigenvalue_symmetric(m: &[Vec<f64>]) -> f64 {
    let n = m.len();
    let mut a: Vec<Vec<f64>> = m.to_vec();
    for _sweep in 0..200 {
        let mut off = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                off += a[i][j] * a[i][j];
            }
        }
        if off < 1e-28 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-18 {
                    continue;
                }
                let theta = 0.5 * (a[q][q] - a[p][p]) / a[p][q];
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a[k][p], a[k][q]);
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a[p][k], a[q][k]);
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).fold(f64::NEG_INFINITY, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat;
    use num_traits::Zero;

    fn rs(spec: &str) -> RootSystem {
        RootSystem::for_group(&KleinianGroup::from_spec(spec).unwrap()).unwrap()
    }

    #[test]
    fn pairing_tables() {
        let a2 = rs("A:3");
        assert_eq!(a2.label, "A2");
        assert_eq!(a2.cartan, vec![vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.highest_root, vec![1, 1]);
        assert_eq!(a2.coxeter, 3);

        let d4 = rs("D:2");
        assert_eq!(d4.label, "D4");
        assert_eq!(d4.highest_root, vec![1, 1, 1, 2]);
        assert_eq!(d4.coxeter, 6);
        // star: node 3 adjacent to 0, 1, 2
        assert_eq!(d4.cartan[3], vec![-1, -1, -1, 2]);

        let e8 = rs("E8");
        assert_eq!(e8.coxeter, 30);
        assert_eq!(e8.highest_root.iter().sum::<i64>(), 29);
    }

    #[test]
    fn coxeter_numbers_match_dynkin_type() {
        assert_eq!(rs("A:7").coxeter, 7);
        assert_eq!(rs("D:3").coxeter, 8); // D_5
        assert_eq!(rs("E6").coxeter, 12);
        assert_eq!(rs("E7").coxeter, 18);
        assert_eq!(rs("E8").coxeter, 30);
    }

    #[test]
    fn root_counts_match_rank_times_coxeter() {
        for (spec, count) in [("A:3", 6), ("D:2", 24), ("E6", 72)] {
            let r = rs(spec);
            let roots = enumerate_roots(&r);
            assert_eq!(roots.len(), count, "{spec}");
            assert_eq!(roots.len(), r.rank * r.coxeter as usize, "{spec}");
        }
    }

    #[test]
    fn roots_have_self_pairing_two_and_come_in_pairs() {
        for spec in ["A:4", "D:3", "E6"] {
            let r = rs(spec);
            let roots = enumerate_roots(&r);
            for root in &roots {
                assert_eq!(r.pairing(&root.coords, &root.coords), 2, "{spec}");
                let neg: Vec<i64> = root.coords.iter().map(|x| -x).collect();
                assert!(roots.iter().any(|o| o.coords == neg), "{spec}");
            }
        }
    }

    #[test]
    fn highest_root_dominates_all_roots() {
        for spec in ["A:5", "D:4", "E6", "E7", "E8"] {
            let r = rs(spec);
            for root in enumerate_roots(&r) {
                for (c, h) in root.coords.iter().zip(&r.highest_root) {
                    assert!(c <= h, "{spec}: root {:?} exceeds highest root", root.coords);
                }
            }
        }
    }

    #[test]
    fn sylvester_examples() {
        // intersection(A_2) is negative definite with minors (2, 3)
        let a2 = rs("A:3");
        let m: Vec<Vec<Rat>> = a2
            .intersection()
            .iter()
            .map(|r| r.iter().map(|&x| rat_int(x)).collect())
            .collect();
        let cert = is_negative_definite(&m).unwrap();
        assert!(cert.negative_definite);
        assert_eq!(cert.minors, vec![rat_int(2), rat_int(3)]);

        // plus (1/9) rr^T with r = (1,1): minors 17/9 and 189/81 = 7/3
        let inter = a2.intersection();
        let mm: Vec<Vec<Rat>> = (0..2)
            .map(|i: usize| {
                (0..2)
                    .map(|j: usize| rat_int(inter[i][j]) + rat(1, 9))
                    .collect()
            })
            .collect();
        let cert = is_negative_definite(&mm).unwrap();
        assert!(cert.negative_definite);
        assert_eq!(cert.minors[0], rat(17, 9));
        assert_eq!(cert.minors[1], rat(189, 81));

        // zero matrix is not negative definite
        let z = vec![vec![rat_int(0); 2]; 2];
        assert!(!is_negative_definite(&z).unwrap().negative_definite);

        // non-symmetric input rejected
        let ns = vec![vec![rat_int(0), rat_int(1)], vec![rat_int(2), rat_int(0)]];
        assert!(matches!(is_negative_definite(&ns), Err(Error::NotSymmetric)));
    }

    #[test]
    fn toeplitz_check_small_cases() {
        for (spec, n) in [("A:3", 3u64), ("D:2", 8), ("E8", 120)] {
            let r = rs(spec);
            let report = toeplitz_lemma_check(&r, n).unwrap();
            assert!(report.certificate.negative_definite, "{spec}");
            assert!(report.weyl_bound_negative, "{spec}: {}", report.weyl_bound);
        }
    }

    #[test]
    fn rank_one_correction_definiteness_thresholds() {
        // Exact boundary of negative definiteness for H + rr^T/N^2: last
        // true at A:12 and D:9, first false at A:13 and D:10.
        for (spec, n, expect) in [
            ("A:12", 12u64, true),
            ("A:13", 13, false),
            ("D:9", 36, true),
            ("D:10", 40, false),
        ] {
            let r = rs(spec);
            let report = toeplitz_lemma_check(&r, n).unwrap();
            assert_eq!(report.certificate.negative_definite, expect, "{spec}");
        }
        // Explicit indefiniteness witness at A:13: t_i = i(13 - i)/2 gives
        // t^T (H + rr^T/169) t = -182 + 196 = 14 > 0.
        let r = rs("A:13");
        let t: Vec<Rat> = (1..=12i64).map(|i| rat_int(i * (13 - i) / 2)).collect();
        let h = r.intersection();
        let mut q = Rat::zero();
        for i in 0..12 {
            for j in 0..12 {
                q += &t[i] * rat_int(h[i][j]) * &t[j];
                q += &t[i] * rat(r.highest_root[i] * r.highest_root[j], 169) * &t[j];
            }
        }
        assert_eq!(q, rat_int(14));
    }

    #[test]
    fn intersection_spectrum_matches_coxeter_formula() {
        for spec in ["A:6", "D:4", "E6", "E7", "E8"] {
            let r = rs(spec);
            let m: Vec<Vec<f64>> = r
                .intersection()
                .iter()
                .map(|row| row.iter().map(|&x| x as f64).collect())
                .collect();
            let top = largest_eigenvalue_symmetric(&m);
            let want = -2.0 + 2.0 * (std::f64::consts::PI / r.coxeter as f64).cos();
            assert!((top - want).abs() < 1e-9, "{spec}: {top} vs {want}");
        }
    }
}
