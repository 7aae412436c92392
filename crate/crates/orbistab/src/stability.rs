//! Numerical K-theory classes, central charges, and support-property
//! certificates.
//!
//! A class is stored in stack coordinates `(r, phi, d, t)` over the basis
//! `[O], NS(S), [O_Np], [O_p (x) rho_i]_{i >= 1}`: `r` is the rank, `phi`
//! the Neron-Severi part, and the point-supported part is
//! `d [O_Np] + sum_i (t_i + d r_i) [O_p (x) rho_i]`. The transported class
//! on the minimal resolution is `(r, phi + sum t_j C_j, d)` with second
//! Chern character `d`.
//!
//! The basis class `[O_Np]` carries the numerical invariants of the plain
//! skyscraper at the stacky point: `ch_2 = 1/N`, fiber class
//! `(2 triv - V)`, `delta = 1 - 1/N`. With that normalization the closed
//! forms
//!
//! ```text
//! ch_2(v)  = d + (1/N) sum r_i t_i
//! delta(v) = r D - (1/N) sum r_i t_i
//! ```
//!
//! agree with the fiber-class pairing `sum a_i T_i` for every class, and a
//! point class decomposes into `d` plain-skyscraper factors plus
//! `t_i + d r_i` twisted ones.
//!
//! Pullback Neron-Severi classes are orthogonal to the exceptional curves;
//! the discriminant of a transported class therefore splits as
//! `phi^2 + t^T I_exc t - 2 r ch_2`.

use num_traits::{One, Signed, Zero};

use crate::groups::KleinianGroup;
use crate::linalg;
use crate::rootdata::RootSystem;
use crate::trr::{self, AVector, SurfaceProfileLite, TCoefficients};
use crate::{rat, rat_from_str, rat_int, rat_to_string, Error, Rat, Result};

/// Intersection data of the underlying projective surface.
#[derive(Clone, Debug)]
pub struct SurfaceProfile {
    pub ns_rank: usize,
    /// Symmetric integer intersection matrix on `NS(S)`, signature
    /// `(1, ns_rank - 1)`.
    pub intersection: Vec<Vec<i64>>,
    /// Ample class `H` with `H^2 > 0`, in `NS` coordinates.
    pub ample: Vec<i64>,
    /// Constant of the ample-class inequality
    /// `c_H (H.D)^2 + D^2 >= 0` for effective `D`. Zero is valid for
    /// Picard rank one.
    pub c_h: Rat,
    pub lite: SurfaceProfileLite,
}

impl SurfaceProfile {
    pub fn new(
        intersection: Vec<Vec<i64>>,
        ample: Vec<i64>,
        c_h: Rat,
        lite: SurfaceProfileLite,
    ) -> Result<Self> {
        let ns_rank = intersection.len();
        let p = SurfaceProfile { ns_rank, intersection, ample, c_h, lite };
        p.validate()?;
        Ok(p)
    }

    /// Picard-rank-one profile with `H^2 = h2`; the ample-class constant
    /// is 0 because every effective class is a positive multiple of `H`.
    pub fn rank_one(h2: i64, lite: SurfaceProfileLite) -> Result<Self> {
        Self::new(vec![vec![h2]], vec![1], Rat::zero(), lite)
    }

    fn validate(&self) -> Result<()> {
        let err = |m: String| Err(Error::InvalidProfile(m));
        if self.intersection.len() != self.ns_rank
            || self.intersection.iter().any(|r| r.len() != self.ns_rank)
        {
            return err("intersection matrix is not square of size ns_rank".into());
        }
        if self.ample.len() != self.ns_rank {
            return err("ample vector has wrong length".into());
        }
        for i in 0..self.ns_rank {
            for j in 0..self.ns_rank {
                if self.intersection[i][j] != self.intersection[j][i] {
                    return err("intersection matrix is not symmetric".into());
                }
            }
        }
        let m: Vec<Vec<Rat>> = self
            .intersection
            .iter()
            .map(|r| r.iter().map(|&x| rat_int(x)).collect())
            .collect();
        let inertia = linalg::symmetric_inertia(&m);
        if !(inertia.positive == 1 && inertia.negative == self.ns_rank - 1 && inertia.zero == 0) {
            return err(format!(
                "intersection signature is ({}, {}, {}), need (1, ns_rank-1, 0)",
                inertia.positive, inertia.negative, inertia.zero
            ));
        }
        if !self.h_squared().is_positive() {
            return err("H^2 must be positive".into());
        }
        if self.c_h.is_negative() {
            return err("c_H must be non-negative".into());
        }
        Ok(())
    }

    /// Pairing of two rational NS vectors under the intersection form.
    pub fn ns_pairing(&self, a: &[Rat], b: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if !bj.is_zero() {
                    acc += ai * rat_int(self.intersection[i][j]) * bj;
                }
            }
        }
        acc
    }

    /// `H . phi` for a rational NS vector.
    pub fn h_dot(&self, phi: &[Rat]) -> Rat {
        let h: Vec<Rat> = self.ample.iter().map(|&x| rat_int(x)).collect();
        self.ns_pairing(&h, phi)
    }

    pub fn h_squared(&self) -> Rat {
        let h: Vec<Rat> = self.ample.iter().map(|&x| rat_int(x)).collect();
        self.ns_pairing(&h, &h)
    }
}

/// A numerical class in stack coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct StackClass {
    pub r: Rat,
    pub phi: Vec<Rat>,
    pub d: Rat,
    pub t: Vec<Rat>,
}

impl StackClass {
    pub fn new(r: Rat, phi: Vec<Rat>, d: Rat, t: Vec<Rat>) -> Self {
        StackClass { r, phi, d, t }
    }

    /// Class of the structure sheaf.
    pub fn structure_sheaf(ns_rank: usize, m: usize) -> Self {
        StackClass::new(Rat::one(), vec![Rat::zero(); ns_rank], Rat::zero(), vec![Rat::zero(); m])
    }

    /// Class of a skyscraper at a point with trivial stabilizer.
    pub fn free_point(ns_rank: usize, m: usize) -> Self {
        StackClass::new(Rat::zero(), vec![Rat::zero(); ns_rank], Rat::one(), vec![Rat::zero(); m])
    }

    /// Class of the plain skyscraper at the stacky point: one `[O_Np]`
    /// factor with the twisted tail cancelled, so the coefficient of every
    /// `[O_p (x) rho_i]` vanishes.
    pub fn stacky_point(ns_rank: usize, g: &KleinianGroup) -> Self {
        let t = g.nontrivial_dims().iter().map(|&r| rat_int(-(r as i64))).collect();
        StackClass::new(Rat::zero(), vec![Rat::zero(); ns_rank], Rat::one(), t)
    }

    /// Class of the skyscraper twisted by the i-th nontrivial irrep
    /// (`i >= 1`, indexing the group's irrep list).
    pub fn twisted_point(ns_rank: usize, m: usize, i: usize) -> Self {
        let mut t = vec![Rat::zero(); m];
        t[i - 1] = Rat::one();
        StackClass::new(Rat::zero(), vec![Rat::zero(); ns_rank], Rat::zero(), t)
    }

    fn integral(&self) -> bool {
        self.r.is_integer()
            && self.d.is_integer()
            && self.phi.iter().all(|x| x.is_integer())
            && self.t.iter().all(|x| x.is_integer())
    }
}

/// The transported class on the minimal resolution: rank, Neron-Severi
/// part, exceptional-curve coefficients, and second Chern character.
#[derive(Clone, Debug, PartialEq)]
pub struct ResolutionClass {
    pub r: Rat,
    pub phi: Vec<Rat>,
    pub exceptional: Vec<Rat>,
    pub ch2: Rat,
}

/// Transport to the minimal resolution: the stored fields carry over, with
/// `ch2 = d` and exceptional coefficients `t`.
pub fn to_resolution(v: &StackClass) -> ResolutionClass {
    ResolutionClass {
        r: v.r.clone(),
        phi: v.phi.clone(),
        exceptional: v.t.clone(),
        ch2: v.d.clone(),
    }
}

/// Inverse transport.
pub fn to_stack(w: &ResolutionClass) -> StackClass {
    StackClass {
        r: w.r.clone(),
        phi: w.phi.clone(),
        d: w.ch2.clone(),
        t: w.exceptional.clone(),
    }
}

/// `ch_2(v) = d + (1/N) sum r_i t_i`.
pub fn ch2_of(v: &StackClass, g: &KleinianGroup) -> Rat {
    let n = g.order as i64;
    let mut s = Rat::zero();
    for (t, &ri) in v.t.iter().zip(g.nontrivial_dims().iter()) {
        s += t * rat_int(ri as i64);
    }
    &v.d + s / rat_int(n)
}

/// `delta(v) = r D - (1/N) sum r_i t_i`, asserted for integral classes to
/// agree with the fiber-class pairing `sum a_i T_i`.
pub fn delta_of(v: &StackClass, g: &KleinianGroup, tc: &TCoefficients) -> Result<Rat> {
    let n = g.order as i64;
    let d_const = trr::d_constant(g, tc)?;
    let mut s = Rat::zero();
    for (t, &ri) in v.t.iter().zip(g.nontrivial_dims().iter()) {
        s += t * rat_int(ri as i64);
    }
    let closed = &v.r * d_const - s / rat_int(n);
    if v.integral() {
        let via_fiber = trr::delta(tc, &a_vector_of(v, g)?)?;
        if via_fiber != closed {
            return Err(Error::Inconsistency(format!(
                "delta closed form {} disagrees with fiber pairing {}",
                rat_to_string(&closed),
                rat_to_string(&via_fiber)
            )));
        }
    }
    Ok(closed)
}

/// Fiber class of an integral stack class:
/// `a = r e_0 + d fiber(0) + sum_{i>=1} (t_i + d r_i) fiber(i)`,
/// where `fiber(i)` is the twisted-skyscraper fiber and Neron-Severi
/// classes contribute nothing. Non-integral coordinates are rejected.
pub fn a_vector_of(v: &StackClass, g: &KleinianGroup) -> Result<AVector> {
    if !v.integral() {
        return Err(Error::NonIntegralClass(
            "fiber classes exist only for integral coordinates".into(),
        ));
    }
    let dims = g.nontrivial_dims();
    let mut a = vec![0i64; g.num_irreps()];
    let as_i = |q: &Rat| -> i64 { i64::try_from(q.to_integer()).expect("desk-scale class") };
    a[0] += as_i(&v.r);
    let d = as_i(&v.d);
    if d != 0 {
        let f0 = trr::skyscraper_fiber(g, 0)?;
        for (acc, f) in a.iter_mut().zip(&f0.0) {
            *acc += d * f;
        }
    }
    for (i, t) in v.t.iter().enumerate() {
        let c = as_i(t) + d * dims[i] as i64;
        if c != 0 {
            let fi = trr::skyscraper_fiber(g, i + 1)?;
            for (acc, f) in a.iter_mut().zip(&fi.0) {
                *acc += c * f;
            }
        }
    }
    Ok(AVector(a))
}

/// Bogomolov discriminant of a transported class:
/// `Delta = c1^2 - 2 r ch2` with
/// `c1^2 = phi^T I_NS phi + t^T I_exc t`.
pub fn discriminant(w: &ResolutionClass, profile: &SurfaceProfile, rs: &RootSystem) -> Rat {
    let phi_sq = profile.ns_pairing(&w.phi, &w.phi);
    let inter = rs.intersection();
    let mut t_sq = Rat::zero();
    for (i, ti) in w.exceptional.iter().enumerate() {
        if ti.is_zero() {
            continue;
        }
        for (j, tj) in w.exceptional.iter().enumerate() {
            if !tj.is_zero() {
                t_sq += ti * rat_int(inter[i][j]) * tj;
            }
        }
    }
    phi_sq + t_sq - rat_int(2) * &w.r * &w.ch2
}

/// Orbifold discriminant of a stack class: the discriminant of its
/// transported image.
pub fn delta_orb(v: &StackClass, profile: &SurfaceProfile, rs: &RootSystem) -> Rat {
    discriminant(&to_resolution(v), profile, rs)
}

/// Stability parameters `(w, gamma)`, all rational.
#[derive(Clone, Debug, PartialEq)]
pub struct StabilityParams {
    pub re_w: Rat,
    pub im_w: Rat,
    pub gamma: Rat,
}

impl StabilityParams {
    pub fn new(re_w: Rat, im_w: Rat, gamma: Rat) -> Self {
        StabilityParams { re_w, im_w, gamma }
    }
}

/// An exact complex value of the central charge.
#[derive(Clone, Debug, PartialEq)]
pub struct CentralChargeValue {
    pub re: Rat,
    pub im: Rat,
}

impl CentralChargeValue {
    pub fn new(re: Rat, im: Rat) -> Self {
        CentralChargeValue { re, im }
    }

    pub fn zero() -> Self {
        CentralChargeValue { re: Rat::zero(), im: Rat::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    /// `re(self) im(other) - im(self) re(other)`; zero exactly when the two
    /// values are real-proportional.
    pub fn cross(&self, other: &CentralChargeValue) -> Rat {
        &self.re * &other.im - &self.im * &other.re
    }

    pub fn add(&self, other: &CentralChargeValue) -> CentralChargeValue {
        CentralChargeValue::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn scale(&self, q: &Rat) -> CentralChargeValue {
        CentralChargeValue::new(&self.re * q, &self.im * q)
    }
}

/// The central charge
/// `Z(v) = -ch_2(v) + w r + gamma delta(v) + i H.phi`.
pub fn central_charge(
    params: &StabilityParams,
    v: &StackClass,
    g: &KleinianGroup,
    tc: &TCoefficients,
    profile: &SurfaceProfile,
) -> Result<CentralChargeValue> {
    let re = -ch2_of(v, g) + &params.re_w * &v.r + &params.gamma * delta_of(v, g, tc)?;
    let im = &params.im_w * &v.r + profile.h_dot(&v.phi);
    Ok(CentralChargeValue::new(re, im))
}

/// Verdict of the parameter gate with per-condition reasons for failure.
#[derive(Clone, Debug)]
pub struct GateReport {
    /// All conditions for a full stability condition:
    /// `gamma in (0, 1/(N-1))` strictly,
    /// `re w > -(im w)^2/H^2 + (2 + gamma) D - (1 + gamma)^2`, and
    /// `re w > (1/2)(im w)^2/H^2 - gamma (D - (N-1)/N) > 0`.
    pub theorem_valid: bool,
    /// Only the gamma range plus
    /// `re w - (1/2)(im w)^2/H^2 + gamma (D - (N-1)/N) > 0`
    /// (enough for the stability-function sign conditions).
    pub prestab_valid: bool,
    pub reasons: Vec<String>,
}

pub fn params_gate(
    params: &StabilityParams,
    g: &KleinianGroup,
    tc: &TCoefficients,
    profile: &SurfaceProfile,
) -> Result<GateReport> {
    let n = g.order as i64;
    let d = trr::d_constant(g, tc)?;
    let h2 = profile.h_squared();
    let im_sq_over_h2 = &params.im_w * &params.im_w / h2;
    let mut reasons = Vec::new();

    let gamma_ok = params.gamma.is_positive() && params.gamma < rat(1, n - 1);
    if !gamma_ok {
        reasons.push(format!(
            "gamma = {} is outside the open interval (0, 1/(N-1)) = (0, 1/{})",
            rat_to_string(&params.gamma),
            n - 1
        ));
    }

    let one_plus = rat_int(1) + &params.gamma;
    let bound_i = -&im_sq_over_h2 + (rat_int(2) + &params.gamma) * &d - &one_plus * &one_plus;
    let cond_i = params.re_w > bound_i;
    if !cond_i {
        reasons.push(format!(
            "re w = {} fails re w > -(im w)^2/H^2 + (2+gamma)D - (1+gamma)^2 = {}",
            rat_to_string(&params.re_w),
            rat_to_string(&bound_i)
        ));
    }

    let slack = &d - rat(n - 1, n);
    let middle = rat(1, 2) * &im_sq_over_h2 - &params.gamma * &slack;
    let cond_ii_left = params.re_w > middle;
    if !cond_ii_left {
        reasons.push(format!(
            "re w = {} fails re w > (1/2)(im w)^2/H^2 - gamma(D - (N-1)/N) = {}",
            rat_to_string(&params.re_w),
            rat_to_string(&middle)
        ));
    }
    let cond_ii_right = middle.is_positive();
    if !cond_ii_right {
        reasons.push(format!(
            "(1/2)(im w)^2/H^2 - gamma(D - (N-1)/N) = {} is not positive",
            rat_to_string(&middle)
        ));
    }

    Ok(GateReport {
        theorem_valid: gamma_ok && cond_i && cond_ii_left && cond_ii_right,
        prestab_valid: gamma_ok && cond_ii_left,
        reasons,
    })
}

/// Real charges of `O_p` and the twisted skyscrapers, in the order
/// `[O_p, O_p (x) rho_1, ...]`. Errors unless all are negative, which is
/// what the gamma range guarantees.
pub fn skyscraper_charges(
    params: &StabilityParams,
    g: &KleinianGroup,
) -> Result<Vec<Rat>> {
    let n = g.order as i64;
    let mut out = Vec::with_capacity(g.num_irreps());
    // Z(O_p) = -1/N + gamma (1 - 1/N)
    out.push(-rat(1, n) + &params.gamma * (Rat::one() - rat(1, n)));
    for &ri in &g.nontrivial_dims() {
        // Z(O_p (x) rho_i) = -(1 + gamma) r_i / N
        out.push(-(Rat::one() + &params.gamma) * rat(ri as i64, n));
    }
    for z in &out {
        if !z.is_negative() {
            return Err(Error::InvalidParams(format!(
                "non-negative skyscraper charge {} leaked past the gate",
                rat_to_string(z)
            )));
        }
    }
    Ok(out)
}

/// Exact evaluator for the support-property quadratic forms
/// `Q_0 = Delta_orb`, `Q_1 = Q_0 + c_H (Im Z)^2`, and
/// `Q = Q_1 + S (Re Z)^2`, with `S` the smallest positive integer
/// satisfying `S K^2 > 2N` for
/// `K = max { Z(O_p), Z(O_p (x) rho_i) } < 0`.
pub struct QForms<'a> {
    params: StabilityParams,
    g: &'a KleinianGroup,
    tc: &'a TCoefficients,
    profile: &'a SurfaceProfile,
    rs: &'a RootSystem,
    /// Largest (closest to zero) skyscraper charge; always negative.
    pub k_max: Rat,
    /// The chosen integer multiplier.
    pub s: Rat,
}

pub fn q_forms<'a>(
    params: &StabilityParams,
    profile: &'a SurfaceProfile,
    g: &'a KleinianGroup,
    tc: &'a TCoefficients,
    rs: &'a RootSystem,
) -> Result<QForms<'a>> {
    let charges = skyscraper_charges(params, g)?;
    let k_max = charges.iter().max().expect("nonempty").clone();
    let n = g.order as i64;
    // smallest integer S with S * K^2 > 2N
    let ksq = &k_max * &k_max;
    let mut s = (rat_int(2 * n) / &ksq).floor().to_integer() + num_bigint::BigInt::from(1);
    if Rat::from_integer(s.clone()) * &ksq <= rat_int(2 * n) {
        s += 1;
    }
    Ok(QForms {
        params: params.clone(),
        g,
        tc,
        profile,
        rs,
        k_max,
        s: Rat::from_integer(s),
    })
}

impl QForms<'_> {
    pub fn charge(&self, v: &StackClass) -> Result<CentralChargeValue> {
        central_charge(&self.params, v, self.g, self.tc, self.profile)
    }

    pub fn q0(&self, v: &StackClass) -> Rat {
        delta_orb(v, self.profile, self.rs)
    }

    pub fn q1(&self, v: &StackClass) -> Result<Rat> {
        let z = self.charge(v)?;
        Ok(self.q0(v) + &self.profile.c_h * &z.im * &z.im)
    }

    pub fn q(&self, v: &StackClass) -> Result<Rat> {
        let z = self.charge(v)?;
        Ok(self.q1(v)? + &self.s * &z.re * &z.re)
    }
}

/// Exact certificate that the discriminant form is negative definite on
/// the kernel of the central charge.
#[derive(Clone, Debug)]
pub struct KernelCertificate {
    pub negative_definite: bool,
    /// Pivot sequence of the congruence reduction of the restricted form.
    pub pivots: Vec<Rat>,
    pub kernel_rank: usize,
}

/// Computes a rational basis of `ker Z` inside the full lattice
/// (coordinates `r, phi_1..phi_rho, d, t_1..t_M`), restricts `Q_0`, and
/// certifies definiteness by symmetric congruence reduction. A kernel of
/// rank other than `dim - 2` means the two charge functionals are
/// dependent; that degeneracy is reported as an error, not repaired.
pub fn kernel_negdef_certificate(
    params: &StabilityParams,
    profile: &SurfaceProfile,
    g: &KleinianGroup,
    tc: &TCoefficients,
    rs: &RootSystem,
) -> Result<KernelCertificate> {
    let rho = profile.ns_rank;
    let m = rs.rank;
    let dim = 1 + rho + 1 + m;
    let n = g.order as i64;
    let d_const = trr::d_constant(g, tc)?;
    let dims = g.nontrivial_dims();

    // Re Z = (re_w + gamma D) r - d - ((1+gamma)/N) sum r_i t_i
    let mut re_row = vec![Rat::zero(); dim];
    re_row[0] = &params.re_w + &params.gamma * &d_const;
    re_row[1 + rho] = -Rat::one();
    for (i, &ri) in dims.iter().enumerate() {
        re_row[2 + rho + i] = -(Rat::one() + &params.gamma) * rat(ri as i64, n);
    }
    // Im Z = im_w r + sum_j (H . e_j) phi_j
    let mut im_row = vec![Rat::zero(); dim];
    im_row[0] = params.im_w.clone();
    for j in 0..rho {
        let mut unit = vec![Rat::zero(); rho];
        unit[j] = Rat::one();
        im_row[1 + j] = profile.h_dot(&unit);
    }

    let basis = linalg::kernel_basis(&[re_row, im_row], dim);
    if basis.len() != dim - 2 {
        return Err(Error::DegenerateCharge(format!(
            "kernel rank {} instead of {}",
            basis.len(),
            dim - 2
        )));
    }

    // Q_0 as a symmetric matrix on the full lattice.
    let mut q0 = vec![vec![Rat::zero(); dim]; dim];
    for i in 0..rho {
        for j in 0..rho {
            q0[1 + i][1 + j] = rat_int(profile.intersection[i][j]);
        }
    }
    let exc = rs.intersection();
    for i in 0..m {
        for j in 0..m {
            q0[2 + rho + i][2 + rho + j] = rat_int(exc[i][j]);
        }
    }
    q0[0][1 + rho] = rat_int(-1);
    q0[1 + rho][0] = rat_int(-1);

    let k = basis.len();
    let mut restricted = vec![vec![Rat::zero(); k]; k];
    for i in 0..k {
        let qb: Vec<Rat> = (0..dim)
            .map(|a| (0..dim).map(|b| &q0[a][b] * &basis[i][b]).sum())
            .collect();
        for (j, bj) in basis.iter().enumerate() {
            restricted[i][j] = qb.iter().zip(bj).map(|(x, y)| x * y).sum();
        }
    }
    let inertia = linalg::symmetric_inertia(&restricted);
    Ok(KernelCertificate {
        negative_definite: inertia.negative == k && inertia.positive == 0 && inertia.zero == 0,
        pivots: inertia.pivots,
        kernel_rank: k,
    })
}

// ---------------------------------------------------------------------------
// JSON encodings (rationals as "num/den" strings, deterministic key order)
// ---------------------------------------------------------------------------

fn json_field<'v>(v: &'v serde_json::Value, key: &str) -> Result<&'v serde_json::Value> {
    v.get(key)
        .ok_or_else(|| Error::Parse(format!("missing field `{key}`")))
}

fn json_rat(v: &serde_json::Value) -> Result<Rat> {
    match v {
        serde_json::Value::String(s) => rat_from_str(s),
        serde_json::Value::Number(n) if n.is_i64() => Ok(rat_int(n.as_i64().unwrap())),
        _ => Err(Error::Parse(format!("expected rational string, got {v}"))),
    }
}

fn json_i64_vec(v: &serde_json::Value) -> Result<Vec<i64>> {
    v.as_array()
        .ok_or_else(|| Error::Parse("expected an array".into()))?
        .iter()
        .map(|x| {
            x.as_i64()
                .ok_or_else(|| Error::Parse(format!("expected integer, got {x}")))
        })
        .collect()
}

/// Parses a surface profile from its JSON document:
/// `{ns_rank, intersection (row-major integers), ample, c_H, chi_O, HK, K2}`.
/// `c_H` may be omitted at Picard rank one (defaults to 0) but is required
/// for higher rank; the canonical pairings default to 0.
pub fn profile_from_json(text: &str) -> Result<SurfaceProfile> {
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("profile JSON: {e}")))?;
    let ns_rank = json_field(&v, "ns_rank")?
        .as_u64()
        .ok_or_else(|| Error::Parse("ns_rank must be a positive integer".into()))?
        as usize;
    if ns_rank == 0 {
        return Err(Error::InvalidProfile("ns_rank must be positive".into()));
    }
    let flat = json_i64_vec(json_field(&v, "intersection")?)?;
    if flat.len() != ns_rank * ns_rank {
        return Err(Error::Parse(format!(
            "intersection has {} entries, expected {}",
            flat.len(),
            ns_rank * ns_rank
        )));
    }
    let intersection: Vec<Vec<i64>> = (0..ns_rank)
        .map(|i| flat[i * ns_rank..(i + 1) * ns_rank].to_vec())
        .collect();
    let ample = json_i64_vec(json_field(&v, "ample")?)?;
    let c_h = match v.get("c_H") {
        Some(x) => json_rat(x)?,
        None if ns_rank == 1 => Rat::zero(),
        None => {
            return Err(Error::InvalidProfile(
                "c_H must be supplied explicitly for ns_rank > 1".into(),
            ))
        }
    };
    let opt_rat = |key: &str| -> Result<Rat> {
        v.get(key).map(json_rat).transpose().map(|o| o.unwrap_or_else(Rat::zero))
    };
    let lite = SurfaceProfileLite {
        chi_o: opt_rat("chi_O")?,
        h_dot_k: opt_rat("HK")?,
        k_sq: opt_rat("K2")?,
    };
    SurfaceProfile::new(intersection, ample, c_h, lite)
}

pub fn profile_to_json(p: &SurfaceProfile) -> serde_json::Value {
    serde_json::json!({
        "ns_rank": p.ns_rank,
        "intersection": p.intersection.iter().flatten().copied().collect::<Vec<i64>>(),
        "ample": p.ample,
        "c_H": rat_to_string(&p.c_h),
        "chi_O": rat_to_string(&p.lite.chi_o),
        "HK": rat_to_string(&p.lite.h_dot_k),
        "K2": rat_to_string(&p.lite.k_sq),
    })
}

/// Parses `{re_w, im_w, gamma}` with rationals as `num/den` strings.
pub fn params_from_json(text: &str) -> Result<StabilityParams> {
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("params JSON: {e}")))?;
    Ok(StabilityParams::new(
        json_rat(json_field(&v, "re_w")?)?,
        json_rat(json_field(&v, "im_w")?)?,
        json_rat(json_field(&v, "gamma")?)?,
    ))
}

pub fn params_to_json(p: &StabilityParams) -> serde_json::Value {
    serde_json::json!({
        "re_w": rat_to_string(&p.re_w),
        "im_w": rat_to_string(&p.im_w),
        "gamma": rat_to_string(&p.gamma),
    })
}

/// Parses `{r, phi: [..], d, t: [..]}` with rationals as `num/den` strings.
pub fn class_from_json(text: &str) -> Result<StackClass> {
    let v: serde_json::Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("class JSON: {e}")))?;
    let vec_rat = |key: &str| -> Result<Vec<Rat>> {
        json_field(&v, key)?
            .as_array()
            .ok_or_else(|| Error::Parse(format!("`{key}` must be an array")))?
            .iter()
            .map(json_rat)
            .collect()
    };
    Ok(StackClass::new(
        json_rat(json_field(&v, "r")?)?,
        vec_rat("phi")?,
        json_rat(json_field(&v, "d")?)?,
        vec_rat("t")?,
    ))
}

pub fn class_to_json(v: &StackClass) -> serde_json::Value {
    serde_json::json!({
        "r": rat_to_string(&v.r),
        "phi": v.phi.iter().map(rat_to_string).collect::<Vec<_>>(),
        "d": rat_to_string(&v.d),
        "t": v.t.iter().map(rat_to_string).collect::<Vec<_>>(),
    })
}
