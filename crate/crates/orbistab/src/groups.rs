//! Character tables of the finite subgroups of `SL(2, C)`.
//!
//! Five families: cyclic `mu_N` (spec string `A:N`), binary dihedral `Dic_n`
//! (`D:n`), and the binary tetrahedral, octahedral, and icosahedral groups
//! (`E6`, `E7`, `E8`). Tables are built exactly over cyclotomic fields and
//! accepted only after the validation invariants pass: class equation, sum
//! of squared dimensions, exact row and column orthogonality, and reality
//! constraints on the defining character.
//!
//! Class ordering is fixed (identity first, `-I` second when present) and
//! the trivial representation always comes first, so downstream coefficient
//! vectors are reproducible across runs.

use std::fmt;

use num_traits::{One, Zero};

use crate::exactnum::CycloNumber;
use crate::{rat_int, Error, Rat, Result};

/// Which finite subgroup of `SL(2, C)` to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupFamily {
    /// Cyclic `mu_N`, `N >= 2`. Resolution graph `A_{N-1}`.
    Cyclic { n: u64 },
    /// Binary dihedral `Dic_n` of order `4n`, `n >= 2`. Resolution graph `D_{n+2}`.
    BinaryDihedral { n: u64 },
    /// Binary tetrahedral, order 24. Resolution graph `E_6`.
    BinaryTetrahedral,
    /// Binary octahedral, order 48. Resolution graph `E_7`.
    BinaryOctahedral,
    /// Binary icosahedral, order 120. Resolution graph `E_8`.
    BinaryIcosahedral,
}

impl GroupFamily {
    /// Parses the CLI group spec strings `A:N`, `D:n`, `E6`, `E7`, `E8`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidFamily(format!("`{s}` (expected A:N, D:n, E6, E7 or E8)"));
        match s {
            "E6" => return Ok(GroupFamily::BinaryTetrahedral),
            "E7" => return Ok(GroupFamily::BinaryOctahedral),
            "E8" => return Ok(GroupFamily::BinaryIcosahedral),
            _ => {}
        }
        let (head, tail) = s.split_once(':').ok_or_else(bad)?;
        let n: u64 = tail.parse().map_err(|_| bad())?;
        match head {
            "A" if n >= 2 => Ok(GroupFamily::Cyclic { n }),
            "D" if n >= 2 => Ok(GroupFamily::BinaryDihedral { n }),
            "A" | "D" => Err(Error::InvalidFamily(format!(
                "`{s}` (parameter must be at least 2)"
            ))),
            _ => Err(bad()),
        }
    }

    pub fn order(&self) -> u64 {
        match *self {
            GroupFamily::Cyclic { n } => n,
            GroupFamily::BinaryDihedral { n } => 4 * n,
            GroupFamily::BinaryTetrahedral => 24,
            GroupFamily::BinaryOctahedral => 48,
            GroupFamily::BinaryIcosahedral => 120,
        }
    }
}

impl fmt::Display for GroupFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupFamily::Cyclic { n } => write!(f, "A:{n}"),
            GroupFamily::BinaryDihedral { n } => write!(f, "D:{n}"),
            GroupFamily::BinaryTetrahedral => write!(f, "E6"),
            GroupFamily::BinaryOctahedral => write!(f, "E7"),
            GroupFamily::BinaryIcosahedral => write!(f, "E8"),
        }
    }
}

/// One conjugacy class: size, centralizer order, and the trace of the
/// defining two-dimensional representation on the class.
#[derive(Clone, Debug)]
pub struct ConjClass {
    pub label: String,
    pub size: u64,
    pub centralizer_order: u64,
    pub chi_v: CycloNumber,
}

/// One irreducible representation, as its character vector (one value per
/// conjugacy class, in class order).
#[derive(Clone, Debug)]
pub struct Irrep {
    pub label: String,
    pub dim: u64,
    pub character: Vec<CycloNumber>,
}

/// A validated group datum: conjugacy classes, irreducible characters, and
/// the position of the defining representation `V`.
///
/// For cyclic groups `V = chi^1 + chi^{N-1}` is reducible, so `v_index` is
/// `None` there and downstream code reads `chi_v` per class instead.
#[derive(Clone, Debug)]
pub struct KleinianGroup {
    pub family: GroupFamily,
    pub order: u64,
    pub classes: Vec<ConjClass>,
    pub irreps: Vec<Irrep>,
    pub v_index: Option<usize>,
}

impl KleinianGroup {
    /// Builds and validates the group datum for a family.
    pub fn build(family: GroupFamily) -> Result<Self> {
        let g = match family {
            GroupFamily::Cyclic { n } => build_cyclic(n)?,
            GroupFamily::BinaryDihedral { n } => build_binary_dihedral(n)?,
            GroupFamily::BinaryTetrahedral => build_2t(),
            GroupFamily::BinaryOctahedral => build_2o(),
            GroupFamily::BinaryIcosahedral => build_2i(),
        };
        g.validate()?;
        Ok(g)
    }

    /// Convenience: build from a spec string like `D:2`.
    pub fn from_spec(s: &str) -> Result<Self> {
        Self::build(GroupFamily::parse(s)?)
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn num_irreps(&self) -> usize {
        self.irreps.len()
    }

    /// Dimensions `r_i` of the nontrivial irreducibles, in irrep order.
    pub fn nontrivial_dims(&self) -> Vec<u64> {
        self.irreps[1..].iter().map(|r| r.dim).collect()
    }

    /// Multiplicities of each irrep in `rho_i (x) rho_j`, certified to be
    /// non-negative integers. A certification failure means the table is
    /// corrupt.
    pub fn tensor_decompose(&self, i: usize, j: usize) -> Result<Vec<u64>> {
        let chi_i = &self.irreps[i].character;
        let chi_j = &self.irreps[j].character;
        let product: Vec<CycloNumber> = (0..self.num_classes())
            .map(|c| &chi_i[c] * &chi_j[c])
            .collect();
        let mut out = Vec::with_capacity(self.num_irreps());
        for k in 0..self.num_irreps() {
            let conj_k: Vec<CycloNumber> = self.irreps[k]
                .character
                .iter()
                .map(CycloNumber::conjugate)
                .collect();
            let terms: Vec<(Rat, &CycloNumber, &CycloNumber)> = self
                .classes
                .iter()
                .enumerate()
                .map(|(c, class)| (rat_int(class.size as i64), &product[c], &conj_k[c]))
                .collect();
            let m = CycloNumber::dot_products(&terms)
                .as_rational()
                .ok_or_else(|| Error::TableValidation("irrational tensor multiplicity".into()))?
                / rat_int(self.order as i64);
            if !m.is_integer() || m < Rat::zero() {
                return Err(Error::TableValidation(format!(
                    "tensor multiplicity {} of {} in {} (x) {} is not a non-negative integer",
                    m, self.irreps[k].label, self.irreps[i].label, self.irreps[j].label
                )));
            }
            out.push(
                m.to_integer()
                    .try_into()
                    .map_err(|_| Error::TableValidation("tensor multiplicity overflow".into()))?,
            );
        }
        Ok(out)
    }

    /// The McKay matrix: entry `(i, j)` is the multiplicity of `rho_j` in
    /// `V (x) rho_i`, over all irreps including the trivial one. Symmetric
    /// with zero diagonal for subgroups of `SL(2)`.
    pub fn mckay_matrix(&self) -> Result<Vec<Vec<u64>>> {
        let m = self.num_irreps();
        let conj: Vec<Vec<CycloNumber>> = self
            .irreps
            .iter()
            .map(|r| r.character.iter().map(CycloNumber::conjugate).collect())
            .collect();
        let mut out = Vec::with_capacity(m);
        for i in 0..m {
            let v_chi_i: Vec<CycloNumber> = (0..self.num_classes())
                .map(|c| &self.classes[c].chi_v * &self.irreps[i].character[c])
                .collect();
            let mut row = Vec::with_capacity(m);
            for (j, conj_j) in conj.iter().enumerate() {
                let terms: Vec<(Rat, &CycloNumber, &CycloNumber)> = self
                    .classes
                    .iter()
                    .enumerate()
                    .map(|(c, class)| (rat_int(class.size as i64), &v_chi_i[c], &conj_j[c]))
                    .collect();
                let v = CycloNumber::dot_products(&terms)
                    .as_rational()
                    .ok_or_else(|| Error::TableValidation("irrational McKay entry".into()))?
                    / rat_int(self.order as i64);
                if !v.is_integer() || v < Rat::zero() {
                    return Err(Error::TableValidation(format!(
                        "McKay entry ({i}, {j}) = {v} is not a non-negative integer"
                    )));
                }
                row.push(
                    u64::try_from(v.to_integer())
                        .map_err(|_| Error::TableValidation("McKay entry overflow".into()))?,
                );
            }
            out.push(row);
        }
        Ok(out)
    }

    fn validate(&self) -> Result<()> {
        let n = self.order;
        let err = |msg: String| Err(Error::TableValidation(msg));
        if self.classes.is_empty() || self.irreps.is_empty() {
            return err("empty table".into());
        }
        if self.num_classes() != self.num_irreps() {
            return err(format!(
                "{} classes but {} irreps",
                self.num_classes(),
                self.num_irreps()
            ));
        }
        // Class equation.
        if self.classes.iter().map(|c| c.size).sum::<u64>() != n {
            return err("class sizes do not sum to the group order".into());
        }
        for c in &self.classes {
            if c.size * c.centralizer_order != n {
                return err(format!("class {}: size * centralizer != order", c.label));
            }
        }
        if self.classes[0].size != 1 {
            return err("identity class must come first".into());
        }
        // Dimensions.
        if self.irreps.iter().map(|r| r.dim * r.dim).sum::<u64>() != n {
            return err("sum of squared dimensions != group order".into());
        }
        if self.irreps[0].dim != 1
            || self.irreps[0]
                .character
                .iter()
                .any(|c| *c != CycloNumber::one())
        {
            return err("trivial representation must come first".into());
        }
        for r in &self.irreps {
            if r.character.len() != self.num_classes() {
                return err(format!("irrep {}: wrong character length", r.label));
            }
            if r.character[0] != CycloNumber::from_int(r.dim as i64) {
                return err(format!("irrep {}: character at identity != dim", r.label));
            }
        }
        // chi_V constraints: real everywhere, = 2 exactly at the identity,
        // != 2 on every nontrivial class, and -2 on the class of -I.
        for (idx, c) in self.classes.iter().enumerate() {
            if !c.chi_v.is_real() {
                return err(format!("chi_V not real on class {}", c.label));
            }
            let is_two = c.chi_v == CycloNumber::from_int(2);
            if idx == 0 && !is_two {
                return err("chi_V(identity) != 2".into());
            }
            if idx > 0 && is_two {
                return err(format!("chi_V = 2 on nontrivial class {}", c.label));
            }
            if c.label == "-1" && c.chi_v != CycloNumber::from_int(-2) {
                return err("chi_V(-I) != -2".into());
            }
        }
        // Exact row and column orthogonality, via the fused dot kernel.
        let conj: Vec<Vec<CycloNumber>> = self
            .irreps
            .iter()
            .map(|r| r.character.iter().map(CycloNumber::conjugate).collect())
            .collect();
        for i in 0..self.num_irreps() {
            for j in i..self.num_irreps() {
                let terms: Vec<(Rat, &CycloNumber, &CycloNumber)> = self
                    .classes
                    .iter()
                    .enumerate()
                    .map(|(c, class)| {
                        (rat_int(class.size as i64), &self.irreps[i].character[c], &conj[j][c])
                    })
                    .collect();
                let acc = CycloNumber::dot_products(&terms);
                let want = if i == j { rat_int(n as i64) } else { Rat::zero() };
                if acc.as_rational() != Some(want) {
                    return err(format!(
                        "row orthogonality fails for ({}, {})",
                        self.irreps[i].label, self.irreps[j].label
                    ));
                }
            }
        }
        for a in 0..self.num_classes() {
            for b in a..self.num_classes() {
                let terms: Vec<(Rat, &CycloNumber, &CycloNumber)> = self
                    .irreps
                    .iter()
                    .enumerate()
                    .map(|(r, irrep)| (Rat::one(), &irrep.character[a], &conj[r][b]))
                    .collect();
                let acc = CycloNumber::dot_products(&terms);
                let want = if a == b {
                    rat_int(self.classes[a].centralizer_order as i64)
                } else {
                    Rat::zero()
                };
                if acc.as_rational() != Some(want) {
                    return err(format!(
                        "column orthogonality fails for classes ({}, {})",
                        self.classes[a].label, self.classes[b].label
                    ));
                }
            }
        }
        // The stored chi_V must match the designated irrep when V is
        // irreducible.
        if let Some(vi) = self.v_index {
            if self.irreps[vi].dim != 2 {
                return err("designated V is not two-dimensional".into());
            }
            for (c, class) in self.classes.iter().enumerate() {
                if class.chi_v != self.irreps[vi].character[c] {
                    return err("stored chi_V disagrees with the V irrep".into());
                }
            }
        }
        Ok(())
    }
}

fn zeta(n: u64, e: i64) -> CycloNumber {
    CycloNumber::root(n, e)
}

fn int(v: i64) -> CycloNumber {
    CycloNumber::from_int(v)
}

/// `mu_N`: N singleton classes `g^k`, characters `chi^j(g^k) = zeta^{jk}`,
/// and `V = chi^1 + chi^{N-1}`.
fn build_cyclic(n: u64) -> Result<KleinianGroup> {
    if n < 2 {
        return Err(Error::InvalidFamily("A:N requires N >= 2".into()));
    }
    let classes = (0..n)
        .map(|k| ConjClass {
            label: if k == 0 {
                "1".into()
            } else if 2 * k == n {
                "-1".into()
            } else {
                format!("g^{k}")
            },
            size: 1,
            centralizer_order: n,
            chi_v: &zeta(n, k as i64) + &zeta(n, -(k as i64)),
        })
        .collect();
    let irreps = (0..n)
        .map(|j| Irrep {
            label: if j == 0 { "rho_0".into() } else { format!("chi^{j}") },
            dim: 1,
            character: (0..n).map(|k| zeta(n, (j * k) as i64)).collect(),
        })
        .collect();
    Ok(KleinianGroup {
        family: GroupFamily::Cyclic { n },
        order: n,
        classes,
        irreps,
        v_index: None,
    })
}

/// `Dic_n = <a, x | a^{2n} = 1, x^2 = a^n, x^{-1} a x = a^{-1}>`, order 4n,
/// with `n + 3` conjugacy classes
/// `{1}, {-1}, {a^k, a^{-k}} (k = 1..n-1), {x a^even}, {x a^odd}`.
///
/// Irreps: four one-dimensional characters (a genuine Klein four-group of
/// them for even n; a cyclic group of order 4 with two complex characters
/// for odd n), then the two-dimensional `psi_l`, `l = 1..n-1`, given by
/// `a -> diag(zeta_{2n}^l, zeta_{2n}^{-l})`. Odd `l` are the quaternionic
/// (symplectic) representations, even `l` the dihedral ones; `V = psi_1`.
fn build_binary_dihedral(n: u64) -> Result<KleinianGroup> {
    if n < 2 {
        return Err(Error::InvalidFamily("D:n requires n >= 2".into()));
    }
    let two_n = 2 * n;
    let mut classes = vec![
        ConjClass { label: "1".into(), size: 1, centralizer_order: 4 * n, chi_v: int(2) },
        ConjClass { label: "-1".into(), size: 1, centralizer_order: 4 * n, chi_v: int(-2) },
    ];
    for k in 1..n {
        classes.push(ConjClass {
            label: format!("a^{k}"),
            size: 2,
            centralizer_order: two_n,
            chi_v: &zeta(two_n, k as i64) + &zeta(two_n, -(k as i64)),
        });
    }
    classes.push(ConjClass { label: "x".into(), size: n, centralizer_order: 4, chi_v: int(0) });
    classes.push(ConjClass { label: "xa".into(), size: n, centralizer_order: 4, chi_v: int(0) });

    let nc = classes.len();
    fn ch_one(
        nc: usize,
        n: u64,
        chi_a: i64,
        chi_minus: CycloNumber,
        chi_x: CycloNumber,
        chi_xa: CycloNumber,
        label: &str,
    ) -> Irrep {
        let mut ch = Vec::with_capacity(nc);
        ch.push(int(1));
        ch.push(chi_minus);
        for k in 1..n {
            ch.push(int(if k % 2 == 0 { 1 } else { chi_a }));
        }
        ch.push(chi_x);
        ch.push(chi_xa);
        Irrep { label: label.into(), dim: 1, character: ch }
    }

    let mut irreps = Vec::with_capacity(nc);
    if n.is_multiple_of(2) {
        // chi(-1) = chi(a)^n = 1 for all four characters.
        irreps.push(ch_one(nc, n, 1, int(1), int(1), int(1), "rho_0"));
        irreps.push(ch_one(nc, n, 1, int(1), int(-1), int(-1), "rho_x"));
        irreps.push(ch_one(nc, n, -1, int(1), int(1), int(-1), "rho_a"));
        irreps.push(ch_one(nc, n, -1, int(1), int(-1), int(1), "rho_xa"));
    } else {
        // Odd n: the character group is cyclic of order 4, generated by
        // chi(x) = i with chi(a) = chi(x)^2 = -1.
        let i_ = zeta(4, 1);
        irreps.push(ch_one(nc, n, 1, int(1), int(1), int(1), "rho_0"));
        irreps.push(ch_one(nc, n, 1, int(1), int(-1), int(-1), "rho_x"));
        irreps.push(ch_one(nc, n, -1, int(-1), i_.clone(), -&i_, "rho_xi"));
        irreps.push(ch_one(nc, n, -1, int(-1), -&i_, i_.clone(), "rho_xi'"));
    }
    for l in 1..n {
        let mut ch = Vec::with_capacity(nc);
        ch.push(int(2));
        ch.push(int(if l % 2 == 0 { 2 } else { -2 }));
        for k in 1..n {
            ch.push(&zeta(two_n, (l * k) as i64) + &zeta(two_n, -((l * k) as i64)));
        }
        ch.push(int(0));
        ch.push(int(0));
        irreps.push(Irrep {
            label: if l == 1 { "V".into() } else { format!("psi_{l}") },
            dim: 2,
            character: ch,
        });
    }
    Ok(KleinianGroup {
        family: GroupFamily::BinaryDihedral { n },
        order: 4 * n,
        classes,
        irreps,
        v_index: Some(4),
    })
}

/// Binary tetrahedral group, order 24, 7 classes. `omega = zeta_3`.
fn build_2t() -> KleinianGroup {
    let w = zeta(3, 1);
    let w2 = zeta(3, 2);
    let sizes = [1u64, 1, 6, 4, 4, 4, 4];
    let cents = [24u64, 24, 4, 6, 6, 6, 6];
    let labels = ["1", "-1", "i", "a", "b", "c", "d"];
    let chi_v = [int(2), int(-2), int(0), int(1), int(1), int(-1), int(-1)];
    let classes = (0..7)
        .map(|k| ConjClass {
            label: labels[k].into(),
            size: sizes[k],
            centralizer_order: cents[k],
            chi_v: chi_v[k].clone(),
        })
        .collect();
    let row = |dim: i64, vals: Vec<CycloNumber>, label: &str| Irrep {
        label: label.into(),
        dim: dim as u64,
        character: vals,
    };
    let irreps = vec![
        row(1, vec![int(1); 7], "rho_0"),
        row(1, vec![int(1), int(1), int(1), w.clone(), w2.clone(), w2.clone(), w.clone()], "rho_1"),
        row(1, vec![int(1), int(1), int(1), w2.clone(), w.clone(), w.clone(), w2.clone()], "rho_2"),
        row(2, vec![int(2), int(-2), int(0), int(1), int(1), int(-1), int(-1)], "V_0"),
        row(2, vec![int(2), int(-2), int(0), w.clone(), w2.clone(), -&w2, -&w], "V_1"),
        row(2, vec![int(2), int(-2), int(0), w2.clone(), w.clone(), -&w, -&w2], "V_2"),
        row(3, vec![int(3), int(3), int(-1), int(0), int(0), int(0), int(0)], "W"),
    ];
    KleinianGroup {
        family: GroupFamily::BinaryTetrahedral,
        order: 24,
        classes,
        irreps,
        v_index: Some(3),
    }
}

/// Binary octahedral group, order 48, 8 classes. The order-8 classes carry
/// `chi_V = +/- sqrt(2) = +/- (zeta_8 + zeta_8^7)`.
fn build_2o() -> KleinianGroup {
    let s2 = &zeta(8, 1) + &zeta(8, 7);
    let ms2 = -&s2;
    let sizes = [1u64, 1, 6, 6, 8, 8, 6, 12];
    let cents = [48u64, 48, 8, 8, 6, 6, 8, 4];
    let labels = ["1", "-1", "8a", "8b", "6", "3", "4a", "4b"];
    let chi_v = [int(2), int(-2), s2.clone(), ms2.clone(), int(1), int(-1), int(0), int(0)];
    let classes = (0..8)
        .map(|k| ConjClass {
            label: labels[k].into(),
            size: sizes[k],
            centralizer_order: cents[k],
            chi_v: chi_v[k].clone(),
        })
        .collect();
    let row = |dim: i64, vals: Vec<CycloNumber>, label: &str| Irrep {
        label: label.into(),
        dim: dim as u64,
        character: vals,
    };
    let irreps = vec![
        row(1, vec![int(1); 8], "rho_0"),
        row(1, vec![int(1), int(1), int(-1), int(-1), int(1), int(1), int(1), int(-1)], "sgn"),
        row(2, vec![int(2), int(2), int(0), int(0), int(-1), int(-1), int(2), int(0)], "chi_2"),
        row(2, vec![int(2), int(-2), s2.clone(), ms2.clone(), int(1), int(-1), int(0), int(0)], "V"),
        row(2, vec![int(2), int(-2), ms2.clone(), s2.clone(), int(1), int(-1), int(0), int(0)], "V'"),
        row(3, vec![int(3), int(3), int(-1), int(-1), int(0), int(0), int(-1), int(1)], "chi_3"),
        row(3, vec![int(3), int(3), int(1), int(1), int(0), int(0), int(-1), int(-1)], "chi_3'"),
        row(4, vec![int(4), int(-4), int(0), int(0), int(-1), int(1), int(0), int(0)], "chi_4"),
    ];
    KleinianGroup {
        family: GroupFamily::BinaryOctahedral,
        order: 48,
        classes,
        irreps,
        v_index: Some(3),
    }
}

/// Binary icosahedral group, order 120, 9 classes. The order-5 and order-10
/// classes carry the golden-ratio traces
/// `phi+ = -(zeta_5^2 + zeta_5^3)` and `phi- = -(zeta_5 + zeta_5^4)`.
fn build_2i() -> KleinianGroup {
    let fp = -&(&zeta(5, 2) + &zeta(5, 3));
    let fm = -&(&zeta(5, 1) + &zeta(5, 4));
    let (mfp, mfm) = (-&fp, -&fm);
    let sizes = [1u64, 1, 30, 20, 20, 12, 12, 12, 12];
    let cents = [120u64, 120, 4, 6, 6, 10, 10, 10, 10];
    let labels = ["1", "-1", "4", "6", "3", "10a", "10b", "5a", "5b"];
    let chi_v = [
        int(2), int(-2), int(0), int(1), int(-1),
        fp.clone(), fm.clone(), mfm.clone(), mfp.clone(),
    ];
    let classes = (0..9)
        .map(|k| ConjClass {
            label: labels[k].into(),
            size: sizes[k],
            centralizer_order: cents[k],
            chi_v: chi_v[k].clone(),
        })
        .collect();
    let row = |dim: i64, vals: Vec<CycloNumber>, label: &str| Irrep {
        label: label.into(),
        dim: dim as u64,
        character: vals,
    };
    let irreps = vec![
        row(1, vec![int(1); 9], "rho_0"),
        row(2, vec![int(2), int(-2), int(0), int(1), int(-1), fp.clone(), fm.clone(), mfm.clone(), mfp.clone()], "V"),
        row(2, vec![int(2), int(-2), int(0), int(1), int(-1), fm.clone(), fp.clone(), mfp.clone(), mfm.clone()], "2'"),
        row(3, vec![int(3), int(3), int(-1), int(0), int(0), fp.clone(), fm.clone(), fm.clone(), fp.clone()], "3"),
        row(3, vec![int(3), int(3), int(-1), int(0), int(0), fm.clone(), fp.clone(), fp.clone(), fm.clone()], "3'"),
        row(4, vec![int(4), int(-4), int(0), int(-1), int(1), int(1), int(1), int(-1), int(-1)], "4"),
        row(4, vec![int(4), int(4), int(0), int(1), int(1), int(-1), int(-1), int(-1), int(-1)], "4'"),
        row(5, vec![int(5), int(5), int(1), int(-1), int(-1), int(0), int(0), int(0), int(0)], "5"),
        row(6, vec![int(6), int(-6), int(0), int(0), int(0), int(-1), int(-1), int(1), int(1)], "6"),
    ];
    KleinianGroup {
        family: GroupFamily::BinaryIcosahedral,
        order: 120,
        classes,
        irreps,
        v_index: Some(1),
    }
}
