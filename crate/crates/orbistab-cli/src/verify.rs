//! Built-in reference checklist: the worked numerical identities the
//! library is expected to reproduce exactly, plus the two closed-form
//! discrepancies that are reported as documented mismatches rather than
//! failures (the direct character sum is authoritative for both).

use num_traits::{Signed, Zero};

use orbistab::groups::KleinianGroup;
use orbistab::rootdata::{enumerate_roots, toeplitz_lemma_check, RootSystem};
use orbistab::stability::{
    central_charge, kernel_negdef_certificate, params_gate, StabilityParams, StackClass,
    SurfaceProfile,
};
use orbistab::trr::{self, SurfaceProfileLite};
use orbistab::walls::{chamber_membership, destabilizers, is_regular, restrict, PointClass};
use orbistab::{rat, rat_int, rat_to_string, Rat, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    DocumentedMismatch,
}

pub struct Check {
    pub label: String,
    pub status: Status,
    pub detail: String,
}

fn check(label: &str, ok: bool, detail: String) -> Check {
    Check {
        label: label.to_string(),
        status: if ok { Status::Pass } else { Status::Fail },
        detail,
    }
}

fn documented(label: &str, mismatch_present: bool, detail: String) -> Check {
    Check {
        label: label.to_string(),
        // The mismatch is the expected outcome; its absence would mean the
        // oracle or the evaluation changed and must be investigated.
        status: if mismatch_present { Status::DocumentedMismatch } else { Status::Fail },
        detail,
    }
}

pub fn run_all() -> Result<Vec<Check>> {
    let mut out = Vec::new();

    // -- character tables ---------------------------------------------------
    {
        let g = KleinianGroup::from_spec("A:2")?;
        let signs: Vec<Vec<Rat>> = g
            .irreps
            .iter()
            .map(|r| r.character.iter().map(|c| c.as_rational().unwrap()).collect())
            .collect();
        out.push(check(
            "A:2 character table is the 2x2 sign table",
            signs == vec![vec![rat_int(1), rat_int(1)], vec![rat_int(1), rat_int(-1)]],
            String::new(),
        ));
    }
    {
        let g = KleinianGroup::from_spec("D:2")?;
        let cents: Vec<u64> = g.classes.iter().map(|c| c.centralizer_order).collect();
        out.push(check(
            "D:2 centralizer orders (8, 8, 4, 4, 4)",
            cents == vec![8, 8, 4, 4, 4],
            format!("{cents:?}"),
        ));
        let v = g.v_index.unwrap();
        out.push(check(
            "D:2 tensor square of V = sum of the four one-dimensionals",
            g.tensor_decompose(v, v)? == vec![1, 1, 1, 1, 0],
            String::new(),
        ));
    }
    {
        let g = KleinianGroup::from_spec("E6")?;
        let cents: Vec<u64> = g.classes.iter().map(|c| c.centralizer_order).collect();
        out.push(check(
            "E6 class data: 7 classes with centralizers (24, 24, 4, 6, 6, 6, 6)",
            cents == vec![24, 24, 4, 6, 6, 6, 6],
            format!("{cents:?}"),
        ));
        out.push(check(
            "E6 tensor square of V_0 = trivial + W",
            g.tensor_decompose(3, 3)? == vec![1, 0, 0, 0, 0, 0, 1],
            String::new(),
        ));
        // The full table, row by row, against its reference values
        // (omega = z3, omega^2 = z3^2).
        let want: [&[&str]; 7] = [
            &["1", "1", "1", "1", "1", "1", "1"],
            &["1", "1", "1", "z3", "z3^2", "z3^2", "z3"],
            &["1", "1", "1", "z3^2", "z3", "z3", "z3^2"],
            &["2", "-2", "0", "1", "1", "-1", "-1"],
            &["2", "-2", "0", "z3", "z3^2", "-z3^2", "-z3"],
            &["2", "-2", "0", "z3^2", "z3", "-z3", "-z3^2"],
            &["3", "3", "-1", "0", "0", "0", "0"],
        ];
        let ok = g.irreps.iter().zip(want).all(|(r, row)| {
            r.character.iter().zip(row).all(|(v, w)| v.to_string() == *w)
        });
        out.push(check("E6 character table matches the reference values", ok, String::new()));
    }
    {
        let ok = ["A:2", "A:7", "D:2", "D:5", "E6", "E7", "E8"].iter().all(|spec| {
            let g = KleinianGroup::from_spec(spec).unwrap();
            let rs = RootSystem::for_group(&g).unwrap();
            let mckay = g.mckay_matrix().unwrap();
            (0..rs.rank).all(|i| {
                (0..rs.rank).all(|j| {
                    let adj = if i == j { 0 } else { (-rs.cartan[i][j]) as u64 };
                    mckay[i + 1][j + 1] == adj
                })
            })
        });
        out.push(check(
            "McKay graphs match the ADE Dynkin adjacency (all five families)",
            ok,
            String::new(),
        ));
    }

    // -- correction coefficients --------------------------------------------
    {
        let g = KleinianGroup::from_spec("D:2")?;
        let tc = trr::t_coefficients(&g)?;
        let want = vec![rat(13, 32), rat(-3, 32), rat(-3, 32), rat(-3, 32), rat(-1, 16)];
        out.push(check(
            "D4 T-vector = 13/32, -3/32, -3/32, -3/32, -1/16",
            tc.values == want,
            tc.values.iter().map(rat_to_string).collect::<Vec<_>>().join(", "),
        ));
        let fiber = trr::skyscraper_fiber(&g, 0)?;
        out.push(check(
            "D4 fiber of the plain skyscraper = 2*trivial - V",
            fiber.0 == vec![2, 0, 0, 0, -1],
            format!("{:?}", fiber.0),
        ));
        let d_op = trr::delta(&tc, &fiber)?;
        out.push(check("D4 delta(O_p) = 7/8", d_op == rat(7, 8), rat_to_string(&d_op)));
        let d_v = trr::delta(&tc, &trr::skyscraper_fiber(&g, 4)?)?;
        out.push(check(
            "D4 delta(O_p x V) = -1/4",
            d_v == rat(-1, 4),
            rat_to_string(&d_v),
        ));
    }
    {
        let g = KleinianGroup::from_spec("E6")?;
        let tc = trr::t_coefficients(&g)?;
        let want = vec![
            rat(167, 288),
            rat(-25, 288),
            rat(-25, 288),
            rat(58, 288),
            rat(-38, 288),
            rat(-38, 288),
            rat(-27, 288),
        ];
        out.push(check(
            "E6 T-vector = 167/288, -25/288, -25/288, 58/288, -38/288, -38/288, -27/288",
            tc.values == want,
            tc.values.iter().map(rat_to_string).collect::<Vec<_>>().join(", "),
        ));
        out.push(check(
            "E6 T_rho0 = 167/288 = (1/12)(7 - 1/24)",
            trr::d_constant(&g, &tc)? == rat(1, 12) * (rat_int(7) - rat(1, 24)),
            String::new(),
        ));
    }
    {
        let mut ok = true;
        let mut detail = String::new();
        for spec in ["A:2", "A:5", "A:8", "D:2", "D:3", "D:5", "E6", "E7", "E8"] {
            let g = KleinianGroup::from_spec(spec)?;
            let tc = trr::t_coefficients(&g)?;
            let n = g.order as i64;
            let mut weighted = Rat::from_integer(0.into());
            for i in 0..g.num_irreps() {
                let want = if i == 0 {
                    rat(n - 1, n)
                } else {
                    -rat(g.irreps[i].dim as i64, n)
                };
                let got = trr::delta_skyscraper(&g, &tc, i)?;
                if got != want {
                    ok = false;
                    detail = format!("{spec} irrep {i}: {}", rat_to_string(&got));
                }
                weighted += rat_int(g.irreps[i].dim as i64) * got;
            }
            if !weighted.is_zero() {
                ok = false;
                detail = format!("{spec}: weighted sum {}", rat_to_string(&weighted));
            }
        }
        out.push(check(
            "skyscraper deltas are 1 - 1/N and -r/N with zero regular-representation sum",
            ok,
            detail,
        ));
    }
    {
        let mut ok = true;
        for n in 2..=12u64 {
            let g = KleinianGroup::from_spec(&format!("A:{n}"))?;
            let tc = trr::t_coefficients(&g)?;
            for j in 0..n {
                ok &= tc.values[j as usize]
                    == trr::lieblich_closed_form(n, j)? / rat_int(n as i64);
            }
        }
        out.push(check("type-A closed form T_j = f(j)/N for N <= 12", ok, String::new()));
    }
    {
        let mut ok = true;
        for p in 2..=16u64 {
            let row = trr::lieblich_direct_row(p)?;
            for (j, v) in row.iter().enumerate() {
                ok &= *v == trr::lieblich_closed_form(p, j as u64)?;
            }
        }
        out.push(check(
            "cyclotomic sum identity sum zeta^kj/(2 - zeta^k - zeta^-k) = j(j-P)/2 + (P^2-1)/12 for P <= 16",
            ok,
            String::new(),
        ));
    }

    // -- root data ------------------------------------------------------------
    {
        let mut ok = true;
        let mut detail = String::new();
        for (spec, h, n) in [("E6", 12u64, 24u64), ("E7", 18, 48), ("E8", 30, 120)] {
            let g = KleinianGroup::from_spec(spec)?;
            let rs = RootSystem::for_group(&g)?;
            if rs.coxeter != h || g.order != n {
                ok = false;
                detail = format!("{spec}: h = {}, N = {}", rs.coxeter, g.order);
            }
        }
        out.push(check("Coxeter/order pairs (E6, 12, 24), (E7, 18, 48), (E8, 30, 120)", ok, detail));
    }
    {
        // The D-family reference row pairs h = 2n with order 4n; the
        // highest-root identity h = 1 + sum r_i forces 2n + 2 for the
        // resolution graph D_{n+2} of the order-4n group.
        let mut rows = Vec::new();
        let mut mismatch = true;
        for n in 2..=5u64 {
            let g = KleinianGroup::from_spec(&format!("D:{n}"))?;
            let rs = RootSystem::for_group(&g)?;
            mismatch &= rs.coxeter == 2 * n + 2 && g.order == 4 * n && rs.coxeter != 2 * n;
            rows.push(format!("D:{n} -> ({}, h = {})", rs.label, rs.coxeter));
        }
        out.push(documented(
            "binary dihedral Coxeter pairing: computed h = 2n + 2 vs tabulated row (2n, 4n)",
            mismatch,
            rows.join("; "),
        ));
    }
    {
        let mut ok = true;
        let mut detail = String::new();
        for (spec, count) in [("A:3", 6usize), ("D:2", 24), ("E6", 72), ("E7", 126), ("E8", 240)] {
            let g = KleinianGroup::from_spec(spec)?;
            let rs = RootSystem::for_group(&g)?;
            let roots = enumerate_roots(&rs);
            if roots.len() != count || roots.len() != rs.rank * rs.coxeter as usize {
                ok = false;
                detail = format!("{spec}: {} roots", roots.len());
            }
        }
        out.push(check("root counts 6 / 24 / 72 / 126 / 240 = rank x Coxeter number", ok, detail));
    }
    {
        let mut ok = true;
        let mut detail = String::new();
        for spec in ["A:2", "A:8", "D:2", "D:5", "E6", "E7", "E8"] {
            let g = KleinianGroup::from_spec(spec)?;
            let rs = RootSystem::for_group(&g)?;
            let rep = toeplitz_lemma_check(&rs, g.order)?;
            if !rep.certificate.negative_definite || !rep.weyl_bound_negative {
                ok = false;
                detail = format!("{spec}: bound {:.6}", rep.weyl_bound);
            }
        }
        out.push(check(
            "H + rr^T/N^2 negative definite with negative floating bound (desk-scale families)",
            ok,
            detail,
        ));
    }

    // -- closed-form discrepancies -------------------------------------------
    {
        let g = KleinianGroup::from_spec("D:2")?;
        let tc = trr::t_coefficients(&g)?;
        let rows = trr::closed_form_report(&g, &tc)?;
        let trivial_row = rows
            .iter()
            .find(|r| r.label.contains("rho_0") && r.label.contains("general"))
            .expect("report contains the general rho_0 row");
        out.push(documented(
            "general Dic closed form at D:2 (printed 11/32 vs direct 13/32)",
            !trivial_row.matches
                && trivial_row.closed_form == rat(11, 32)
                && trivial_row.direct == rat(13, 32),
            format!(
                "closed {} vs direct {}",
                rat_to_string(&trivial_row.closed_form),
                rat_to_string(&trivial_row.direct)
            ),
        ));
        let quat = rows.iter().find(|r| r.label.contains("quaternionic")).unwrap();
        out.push(check(
            "quaternionic closed form matches at D:2 (T_V = -1/16)",
            quat.matches && quat.closed_form == rat(-1, 16),
            String::new(),
        ));
    }
    {
        let g = KleinianGroup::from_spec("D:3")?;
        let tc = trr::t_coefficients(&g)?;
        let rows = trr::closed_form_report(&g, &tc)?;
        let dihedral: Vec<_> = rows.iter().filter(|r| r.label.contains("dihedral")).collect();
        out.push(documented(
            "dihedral closed form at D:3: neither the printed nor the rescaled reading matches",
            dihedral.len() == 2 && dihedral.iter().all(|r| !r.matches),
            dihedral
                .iter()
                .map(|r| format!("{} -> {}", r.label, rat_to_string(&r.closed_form)))
                .collect::<Vec<_>>()
                .join("; "),
        ));
    }

    // -- stability -------------------------------------------------------------
    {
        let g = KleinianGroup::from_spec("A:2")?;
        let tc = trr::t_coefficients(&g)?;
        let rs = RootSystem::for_group(&g)?;
        let profile = SurfaceProfile::rank_one(1, SurfaceProfileLite::local())?;
        let params = StabilityParams::new(rat_int(1), Rat::from_integer(0.into()), rat(1, 2));
        let gate = params_gate(&params, &g, &tc, &profile)?;
        out.push(check(
            "worked A:2 parameters (gamma = 1/2, w = 1, H^2 = 1) pass the gate",
            gate.theorem_valid && gate.prestab_valid,
            gate.reasons.join("; "),
        ));
        let zx = central_charge(&params, &StackClass::free_point(1, 1), &g, &tc, &profile)?;
        let zp = central_charge(&params, &StackClass::stacky_point(1, &g), &g, &tc, &profile)?;
        out.push(check(
            "Z(O_x) = -1 and Z(O_p) = -1/4 at the worked parameters",
            zx.re == rat_int(-1) && zx.im.is_zero() && zp.re == rat(-1, 4) && zp.im.is_zero(),
            format!("Z(O_x) = {}, Z(O_p) = {}", rat_to_string(&zx.re), rat_to_string(&zp.re)),
        ));
        let cert = kernel_negdef_certificate(&params, &profile, &g, &tc, &rs)?;
        out.push(check(
            "kernel certificate: all pivots negative at the worked parameters",
            cert.negative_definite && cert.pivots.iter().all(|p| p.is_negative()),
            cert.pivots.iter().map(rat_to_string).collect::<Vec<_>>().join(", "),
        ));
    }

    // -- walls -------------------------------------------------------------------
    {
        let mut ok_reg = true;
        let mut ok_dest = true;
        for spec in ["A:2", "A:4", "D:2", "D:3", "E6", "E7", "E8"] {
            let g = KleinianGroup::from_spec(spec)?;
            let rs = RootSystem::for_group(&g)?;
            let n = g.order as i64;
            let params =
                StabilityParams::new(rat_int(1), Rat::from_integer(0.into()), rat(1, 2 * (n - 1)));
            let lc = restrict(&params, &g)?;
            let membership = chamber_membership(&lc);
            ok_reg &= is_regular(&lc, &rs)
                && !membership.in_u
                && membership.boundary_components.len() == rs.rank;
            ok_dest &= destabilizers(&lc, &PointClass::cluster(&g), &g)?.is_empty();
        }
        out.push(check(
            "base-point charges are regular and lie on every chamber wall (all families)",
            ok_reg,
            String::new(),
        ));
        out.push(check(
            "cluster classes have no strict destabilizers at the base point (one S-equivalence class)",
            ok_dest,
            String::new(),
        ));
    }

    Ok(out)
}
