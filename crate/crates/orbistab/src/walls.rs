//! Central charges restricted to the root lattice of the skyscraper
//! classes, chamber membership, wall detection, and destabilizer scans.
//!
//! The restriction records `Z(O_p (x) rho_i)` for the nontrivial twists
//! (the simple-root classes `alpha_i`) together with `Z(O_p)`, which the
//! composition series of a point class needs for its trivial factors.
//!
//! Phases follow the heart convention: a charge is *admissible* when it
//! lies in the closed upper half plane minus the origin, with the
//! negative-real ray carrying the maximal phase 1. Two admissible charges
//! are phase-compared exactly by the sign of their cross product. A
//! sub-multiset whose charge leaves the admissible region cannot underlie
//! a subobject of the heart, so destabilizer scans skip it.

use num_traits::{One, Signed, Zero};

use crate::groups::KleinianGroup;
use crate::rootdata::RootSystem;
use crate::stability::{CentralChargeValue, StabilityParams};
use crate::{rat_int, rat_to_decimal, rat_to_string, Error, Rat, Result};

/// Exact central charge on the point-supported classes.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalCharge {
    /// `Z(O_p (x) rho_i)` for the nontrivial irreps, in irrep order.
    pub alpha: Vec<CentralChargeValue>,
    /// `Z(O_p)`.
    pub rho0: CentralChargeValue,
}

impl LocalCharge {
    pub fn new(alpha: Vec<CentralChargeValue>, rho0: CentralChargeValue) -> Self {
        LocalCharge { alpha, rho0 }
    }

    pub fn rank(&self) -> usize {
        self.alpha.len()
    }

    /// Charge of a root, by linearity over its simple-root coordinates.
    pub fn root_charge(&self, coords: &[i64]) -> CentralChargeValue {
        let mut z = CentralChargeValue::zero();
        for (c, a) in coords.iter().zip(&self.alpha) {
            if *c != 0 {
                z = z.add(&a.scale(&rat_int(*c)));
            }
        }
        z
    }
}

/// A point-supported class as a multiset of skyscraper composition
/// factors: a count of plain `O_p` factors plus multiplicities over the
/// twisted ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointClass {
    pub rho0_factors: u64,
    pub multiplicities: Vec<u64>,
}

impl PointClass {
    pub fn new(rho0_factors: u64, multiplicities: Vec<u64>) -> Result<Self> {
        if rho0_factors == 0 && multiplicities.iter().all(|&m| m == 0) {
            return Err(Error::Domain("point class must not be empty".into()));
        }
        Ok(PointClass { rho0_factors, multiplicities })
    }

    /// The class of a free-point skyscraper: one plain factor plus each
    /// twisted factor with multiplicity `r_i` (a cluster class).
    pub fn cluster(g: &KleinianGroup) -> Self {
        PointClass {
            rho0_factors: 1,
            multiplicities: g.nontrivial_dims(),
        }
    }
}

/// Restriction of the parameter central charge to the point classes: all
/// values are real, `Z(alpha_i) = -(1 + gamma) r_i / N` and
/// `Z(O_p) = -1/N + gamma(1 - 1/N)`.
pub fn restrict(params: &StabilityParams, g: &KleinianGroup) -> Result<LocalCharge> {
    let values = crate::stability::skyscraper_charges(params, g)?;
    let rho0 = CentralChargeValue::new(values[0].clone(), Rat::zero());
    let alpha = values[1..]
        .iter()
        .map(|v| CentralChargeValue::new(v.clone(), Rat::zero()))
        .collect();
    Ok(LocalCharge::new(alpha, rho0))
}

/// A deformed charge with every twisted phase pushed just below 1
/// (imaginary part `eps > 0` on each `alpha_i`) and the plain-skyscraper
/// value adjusted so that the cluster class keeps total charge exactly -1.
pub fn sigma_zero_charge(
    params: &StabilityParams,
    g: &KleinianGroup,
    eps: &Rat,
) -> Result<LocalCharge> {
    if !eps.is_positive() {
        return Err(Error::Domain("deformation size must be positive".into()));
    }
    let base = restrict(params, g)?;
    let alpha: Vec<CentralChargeValue> = base
        .alpha
        .iter()
        .map(|z| CentralChargeValue::new(z.re.clone(), eps.clone()))
        .collect();
    let dims = g.nontrivial_dims();
    let mut total = CentralChargeValue::zero();
    for (a, &ri) in alpha.iter().zip(&dims) {
        total = total.add(&a.scale(&rat_int(ri as i64)));
    }
    let rho0 = CentralChargeValue::new(-Rat::one() - total.re, -total.im);
    Ok(LocalCharge::new(alpha, rho0))
}

/// True when `Z(alpha) != 0` for every root of the system.
pub fn is_regular(lc: &LocalCharge, rs: &RootSystem) -> bool {
    crate::rootdata::enumerate_roots(rs)
        .iter()
        .all(|root| !lc.root_charge(&root.coords).is_zero())
}

/// Chamber data: membership in the open chamber `U` (all twisted phases
/// strictly inside the upper half plane) and which boundary components the
/// charge sits on (0-based indices into `alpha`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChamberMembership {
    pub in_u: bool,
    pub boundary_components: Vec<usize>,
}

pub fn chamber_membership(lc: &LocalCharge) -> ChamberMembership {
    let boundary: Vec<usize> = lc
        .alpha
        .iter()
        .enumerate()
        .filter(|(_, z)| z.im.is_zero())
        .map(|(i, _)| i)
        .collect();
    ChamberMembership {
        in_u: lc.alpha.iter().all(|z| z.im.is_positive()),
        boundary_components: boundary,
    }
}

/// Wall condition: both charges nonzero and real-proportional
/// (`re(zv) im(zu) = im(zv) re(zu)` exactly).
pub fn wall_condition(zv: &CentralChargeValue, zu: &CentralChargeValue) -> bool {
    !zv.is_zero() && !zu.is_zero() && zv.cross(zu).is_zero()
}

/// Whether a nonzero charge lies in the admissible region: upper half
/// plane or the negative-real ray.
pub fn admissible(z: &CentralChargeValue) -> bool {
    z.im.is_positive() || (z.im.is_zero() && z.re.is_negative())
}

/// Exact phase comparison of nonzero charges. Within the admissible
/// region this is the heart order with the negative-real ray maximal
/// (phase 1); charges in the complementary half plane compare as the
/// continuation with phases in (1, 2].
pub fn phase_gt(a: &CentralChargeValue, b: &CentralChargeValue) -> bool {
    debug_assert!(!a.is_zero() && !b.is_zero());
    let region = |z: &CentralChargeValue| u8::from(!admissible(z));
    match region(a).cmp(&region(b)) {
        std::cmp::Ordering::Greater => true,
        std::cmp::Ordering::Less => false,
        std::cmp::Ordering::Equal => b.cross(a).is_positive(),
    }
}

/// Total charge of a point class under a local charge.
pub fn charge_of(lc: &LocalCharge, pc: &PointClass) -> CentralChargeValue {
    let mut z = lc.rho0.scale(&rat_int(pc.rho0_factors as i64));
    for (m, a) in pc.multiplicities.iter().zip(&lc.alpha) {
        if *m != 0 {
            z = z.add(&a.scale(&rat_int(*m as i64)));
        }
    }
    z
}

/// All proper nonzero sub-multisets of `cluster` whose charge is
/// admissible and whose phase strictly exceeds the cluster's. Sub-multisets
/// with inadmissible charge cannot be classes of subobjects in the heart
/// and are skipped; sub-multisets with zero charge are skipped as
/// degenerate.
pub fn destabilizers(
    lc: &LocalCharge,
    cluster: &PointClass,
    g: &KleinianGroup,
) -> Result<Vec<PointClass>> {
    if cluster.multiplicities.len() != g.num_irreps() - 1 {
        return Err(Error::LengthMismatch(format!(
            "cluster has {} twisted slots, group has {}",
            cluster.multiplicities.len(),
            g.num_irreps() - 1
        )));
    }
    let z_cluster = charge_of(lc, cluster);
    if z_cluster.is_zero() {
        return Err(Error::DegenerateCharge("cluster class has zero charge".into()));
    }
    let mut out = Vec::new();
    let mut counts = vec![0u64; cluster.multiplicities.len() + 1];
    let caps: Vec<u64> = std::iter::once(cluster.rho0_factors)
        .chain(cluster.multiplicities.iter().copied())
        .collect();
    loop {
        // advance the mixed-radix counter
        let mut pos = 0;
        loop {
            if pos == counts.len() {
                return Ok(out);
            }
            if counts[pos] < caps[pos] {
                counts[pos] += 1;
                break;
            }
            counts[pos] = 0;
            pos += 1;
        }
        let proper = counts
            .iter()
            .zip(&caps)
            .any(|(c, cap)| c < cap);
        if !proper {
            continue;
        }
        let candidate = PointClass {
            rho0_factors: counts[0],
            multiplicities: counts[1..].to_vec(),
        };
        let z = charge_of(lc, &candidate);
        if z.is_zero() || !admissible(&z) {
            continue;
        }
        if phase_gt(&z, &z_cluster) {
            out.push(candidate);
        }
    }
}

/// A rectangular slice through charge space. Directions have one complex
/// value per class, index 0 for `O_p` followed by the `alpha_i`.
#[derive(Clone, Debug)]
pub struct SliceSpec {
    pub dir1: Vec<CentralChargeValue>,
    pub dir2: Vec<CentralChargeValue>,
    pub x_start: Rat,
    pub x_step: Rat,
    pub x_count: usize,
    pub y_start: Rat,
    pub y_step: Rat,
    pub y_count: usize,
}

/// One grid node of a wall scan: coordinates, regularity of the deformed
/// charge, and the sign of `cross(Z(v), Z(alpha_i))` per twisted class
/// (0 exactly on the wall through that class).
#[derive(Clone, Debug)]
pub struct ScanRow {
    pub x: Rat,
    pub y: Rat,
    pub regular: bool,
    pub wall_signs: Vec<i8>,
}

/// Evaluates the wall indicators of class `v` over the grid. Rows are
/// ordered x-major then y; sign changes between adjacent rows locate
/// walls, with exact zeros marking on-node hits.
pub fn scan_slice(
    base: &LocalCharge,
    spec: &SliceSpec,
    v: &PointClass,
    rs: &RootSystem,
) -> Result<Vec<ScanRow>> {
    let m = base.rank();
    if spec.dir1.len() != m + 1 || spec.dir2.len() != m + 1 {
        return Err(Error::LengthMismatch(format!(
            "slice directions need {} values (rho0 + {} alphas)",
            m + 1,
            m
        )));
    }
    if v.multiplicities.len() != m {
        return Err(Error::LengthMismatch("class width disagrees with charge".into()));
    }
    let mut rows = Vec::with_capacity(spec.x_count * spec.y_count);
    for ix in 0..spec.x_count {
        let x = &spec.x_start + rat_int(ix as i64) * &spec.x_step;
        for iy in 0..spec.y_count {
            let y = &spec.y_start + rat_int(iy as i64) * &spec.y_step;
            let shift = |i: usize| -> CentralChargeValue {
                spec.dir1[i].scale(&x).add(&spec.dir2[i].scale(&y))
            };
            let node = LocalCharge::new(
                (0..m)
                    .map(|i| base.alpha[i].add(&shift(i + 1)))
                    .collect(),
                base.rho0.add(&shift(0)),
            );
            let zv = charge_of(&node, v);
            let wall_signs = node
                .alpha
                .iter()
                .map(|a| {
                    let c = zv.cross(a);
                    if c.is_zero() {
                        0
                    } else if c.is_positive() {
                        1
                    } else {
                        -1
                    }
                })
                .collect();
            rows.push(ScanRow {
                x: x.clone(),
                y,
                regular: is_regular(&node, rs),
                wall_signs,
            });
        }
    }
    Ok(rows)
}

/// Renders scan rows as CSV with header
/// `x,y,regular,wall_1,...,wall_M`. Coordinates are decimal strings with
/// `decimals` digits; `exact` appends `x_exact,y_exact` columns holding
/// `num/den` values.
pub fn scan_to_csv(rows: &[ScanRow], rank: usize, decimals: usize, exact: bool) -> String {
    let mut out = String::from("x,y,regular");
    for i in 1..=rank {
        out.push_str(&format!(",wall_{i}"));
    }
    if exact {
        out.push_str(",x_exact,y_exact");
    }
    out.push('\n');
    for row in rows {
        out.push_str(&rat_to_decimal(&row.x, decimals));
        out.push(',');
        out.push_str(&rat_to_decimal(&row.y, decimals));
        out.push(',');
        out.push_str(if row.regular { "1" } else { "0" });
        for s in &row.wall_signs {
            out.push_str(&format!(",{s}"));
        }
        if exact {
            out.push(',');
            out.push_str(&rat_to_string(&row.x));
            out.push(',');
            out.push_str(&rat_to_string(&row.y));
        }
        out.push('\n');
    }
    out
}
