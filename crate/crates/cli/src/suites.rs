use serde_json::json;

use macdonald::ctengine::{
    ct_norm_check, integral_check, schur_ct, schur_ct_dual, self_adjoint_check, skew_integral_check,
};
use macdonald::fock::{skew_via_diffop, skew_via_fock, symmetrizer_check, vertex_product_check};
use macdonald::kostka::{dual_schur_qt, dual_schur_t, kostka_integral_check, kostka_matrix};
use macdonald::macdonald::{dr_apply, dr_eigencheck, family, p_of, q_of, skew_q, specialize_check, Specialization};
use macdonald::pairing::{bidegree, cauchy_pi, cauchy_pi_tilde, inner_qt, omega_qt, outer_sum};
use macdonald::partition::Partition;
use macdonald::symfunc::{Basis, SymFunc};

use crate::report::Check;

pub const SUITES: [&str; 10] = [
    "orthogonality",
    "eigen",
    "duality",
    "cauchy",
    "specializations",
    "ct-conjecture",
    "integral",
    "skew-routes",
    "kostka",
    "vertex-identities",
];

/// Settings shared by all suites.
#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub max_weight: u32,
    pub order: u32,
}

fn first<I: IntoIterator>(it: I, mut bad: impl FnMut(&I::Item) -> Option<String>) -> Option<String> {
    it.into_iter().find_map(|x| bad(&x))
}

fn up_to(w: u32) -> Vec<Partition> {
    (0..=w).flat_map(Partition::all).collect()
}

pub fn run_suite(name: &str, cfg: SuiteConfig) -> Option<Vec<Check>> {
    let w = cfg.max_weight;
    let m = cfg.order;
    let checks = match name {
        "orthogonality" => (0..=w)
            .map(|d| {
                Check::run("orthogonality-norm", json!({"degree": d}), None, || {
                    let fam = family(d);
                    first(fam.iter().flat_map(|a| fam.iter().map(move |b| (a, b))), |(a, b)| {
                        let v = inner_qt(&a.p, &b.p);
                        let ok = if a.lam == b.lam { v == a.norm } else { v.is_zero() };
                        (!ok).then(|| format!("<P{}, P{}> = {v}", a.lam, b.lam))
                    })
                })
            })
            .collect(),
        "eigen" => {
            let mut out: Vec<Check> = (1..=w)
                .map(|d| {
                    Check::run("eigen", json!({"degree": d, "n": d}), None, || {
                        first(Partition::all(d), |lam| {
                            let n = d as usize;
                            (1..=n)
                                .find(|&r| !dr_eigencheck(lam, r, n))
                                .map(|r| format!("D_{r} on P{lam}, n = {n}"))
                        })
                    })
                })
                .collect();
            for n in 1..=(w.min(4) as usize) {
                out.push(Check::run(
                    "eigen-commute",
                    json!({"n": n, "max_degree": w.min(4)}),
                    None,
                    || {
                        let mons: Vec<_> = up_to(w.min(4)).into_iter().filter(|l| l.len() <= n).collect();
                        first(mons, |mu| {
                            let f = SymFunc::basis_element(Basis::M, mu.clone()).evaluate_n(n);
                            for r in 1..=n {
                                for s in r + 1..=n {
                                    let rs = dr_apply(s, &f, n).and_then(|g| dr_apply(r, &g, n));
                                    let sr = dr_apply(r, &f, n).and_then(|g| dr_apply(s, &g, n));
                                    if rs.is_err() || rs != sr {
                                        return Some(format!("[D_{r}, D_{s}] m{mu}, n = {n}"));
                                    }
                                }
                            }
                            None
                        })
                    },
                ));
            }
            out
        }
        "duality" => (0..=w)
            .map(|d| {
                Check::run("duality", json!({"degree": d}), None, || {
                    first(Partition::all(d), |lam| {
                        let lhs = omega_qt(&p_of(lam));
                        let rhs = q_of(&lam.conjugate()).swap_qt();
                        (!lhs.equals(&rhs)).then(|| format!("omega P{lam}"))
                    })
                })
            })
            .collect(),
        "cauchy" => (1..=w)
            .flat_map(|d| {
                let n = d as usize;
                let fam = family(d);
                let pq: Vec<(SymFunc, SymFunc)> = fam.iter().map(|x| (x.p.clone(), x.q.clone())).collect();
                let pp: Vec<(SymFunc, SymFunc)> = fam
                    .iter()
                    .map(|x| (x.p.clone(), p_of(&x.lam.conjugate()).swap_qt()))
                    .collect();
                [
                    Check::run("cauchy-pi", json!({"degree": d, "n": n}), None, || {
                        (bidegree(&cauchy_pi(n, n, d), d) != outer_sum(&pq, n, n)).then(|| format!("degree {d}"))
                    }),
                    Check::run("cauchy-pi-tilde", json!({"degree": d, "n": n}), None, || {
                        (bidegree(&cauchy_pi_tilde(n, n, d), d) != outer_sum(&pp, n, n)).then(|| format!("degree {d}"))
                    }),
                ]
            })
            .collect(),
        "specializations" => {
            let mut out: Vec<Check> = Specialization::ALL
                .iter()
                .map(|&s| {
                    Check::run(
                        &format!("specialization-{}", s.name()),
                        json!({"max_weight": w}),
                        None,
                        || first(up_to(w), |lam| (!specialize_check(lam, s)).then(|| format!("P{lam}"))),
                    )
                })
                .collect();
            out.push(Check::out_of_scope(
                "specialization-jack-limit",
                json!({"max_weight": w}),
            ));
            out
        }
        "ct-conjecture" => {
            let mut out: Vec<Check> = (1..=3usize)
                .map(|n| {
                    Check::run("ct-norm", json!({"n": n, "max_weight": w}), Some(m), || {
                        let lams: Vec<_> = up_to(w).into_iter().filter(|l| l.len() <= n).collect();
                        first(lams, |lam| match ct_norm_check(lam, n, m) {
                            Ok(true) => None,
                            Ok(false) => Some(format!("<P{lam},P{lam}>' n = {n}")),
                            Err(e) => Some(format!("P{lam}: {e}")),
                        })
                    })
                })
                .collect();
            let sa_order = m.min(4);
            for n in 2..=3usize {
                out.push(Check::run(
                    "self-adjoint",
                    json!({"n": n, "max_degree": w.min(3)}),
                    Some(sa_order),
                    || {
                        let mons: Vec<_> = up_to(w.min(3)).into_iter().filter(|l| l.len() <= n).collect();
                        let polys: Vec<_> = mons
                            .iter()
                            .map(|l| (l.clone(), SymFunc::basis_element(Basis::M, l.clone()).evaluate_n(n)))
                            .collect();
                        first(
                            polys.iter().flat_map(|a| polys.iter().map(move |b| (a, b))),
                            |(a, b)| match self_adjoint_check(&a.1, &b.1, sa_order) {
                                Ok(true) => None,
                                Ok(false) => Some(format!("m{} m{} n = {n}", a.0, b.0)),
                                Err(e) => Some(e.to_string()),
                            },
                        )
                    },
                ));
            }
            out
        }
        "integral" => up_to(w)
            .into_iter()
            .filter(|l| !l.is_empty())
            .map(|lam| {
                Check::run(
                    "integral-rep",
                    json!({"lambda": lam.to_string()}),
                    Some(m),
                    || match integral_check(&lam, m) {
                        Ok((true, true)) => None,
                        Ok((a, b)) => Some(format!("P{lam}: direct {a}, dual {b}")),
                        Err(e) => Some(e.to_string()),
                    },
                )
            })
            .collect(),
        "skew-routes" => {
            let mut out: Vec<Check> = (0..=w)
                .map(|d| {
                    Check::run("skew-three-routes", json!({"degree": d}), None, || {
                        let pairs: Vec<_> = Partition::all(d)
                            .into_iter()
                            .flat_map(|l| up_to(d).into_iter().map(move |mu| (l.clone(), mu)))
                            .collect();
                        first(pairs, |(l, mu)| {
                            let a = skew_q(l, mu);
                            let ok = skew_via_fock(l, mu).equals(&a) && skew_via_diffop(l, mu).equals(&a);
                            (!ok).then(|| format!("Q{l}/{mu}"))
                        })
                    })
                })
                .collect();
            let sk = [("2", "1"), ("1,1", "1"), ("2,1", "1")];
            for (l, mu) in sk {
                let (l, mu): (Partition, Partition) = (l.parse().unwrap(), mu.parse().unwrap());
                if l.weight() > w {
                    continue;
                }
                let params = json!({"lambda": l.to_string(), "mu": mu.to_string()});
                out.push(Check::run(
                    "skew-integral",
                    params,
                    Some(m),
                    || match skew_integral_check(&l, &mu, m, l.weight() - mu.weight()) {
                        Ok(true) => None,
                        Ok(false) => Some(format!("Q{l}/{mu}")),
                        Err(e) => Some(e.to_string()),
                    },
                ));
            }
            out
        }
        "kostka" => {
            let mut out = Vec::new();
            for d in 1..=w {
                out.push(Check::run("kostka-reconstruction", json!({"degree": d}), None, || {
                    kostka_matrix(d).err().map(|e| e.to_string())
                }));
                out.push(Check::run("schur-contour", json!({"degree": d}), None, || {
                    first(Partition::all(d), |l| {
                        let s = SymFunc::basis_element(Basis::S, l.clone());
                        let ok = schur_ct(l, d as usize).equals(&s)
                            && schur_ct_dual(l).equals(&SymFunc::basis_element(Basis::S, l.conjugate()));
                        (!ok).then(|| format!("s{l}"))
                    })
                }));
                out.push(Check::run("dual-schur-contour", json!({"degree": d}), None, || {
                    use macdonald::ctengine::schur_ct_kernel;
                    use macdonald::ctengine::Kernel;
                    let st = dual_schur_t(d).map_err(|e| e.to_string());
                    let sqt = dual_schur_qt(d).map_err(|e| e.to_string());
                    match (st, sqt) {
                        (Ok(st), Ok(sqt)) => first(st.iter().zip(&sqt), |((l, a), (_, b))| {
                            let ok = schur_ct_kernel(l, Kernel::HallLittlewood).equals(a)
                                && schur_ct_kernel(l, Kernel::QInverse).equals(b);
                            (!ok).then(|| format!("S{l}"))
                        }),
                        (Err(e), _) | (_, Err(e)) => Some(e),
                    }
                }));
            }
            for d in 1..=w.min(2) {
                out.push(Check::run("kostka-integral", json!({"degree": d}), Some(m), || {
                    let parts = Partition::all(d);
                    first(
                        parts.iter().flat_map(|l| parts.iter().map(move |mu| (l, mu))),
                        |(l, mu)| match kostka_integral_check(l, mu, m) {
                            Ok(true) => None,
                            Ok(false) => Some(format!("K{l},{mu}")),
                            Err(e) => Some(e.to_string()),
                        },
                    )
                }));
            }
            out
        }
        "vertex-identities" => {
            let d = w.min(3);
            let mut out = Vec::new();
            for beta in 1..=3 {
                for n in 1..=3 {
                    let mut q_order = 0;
                    let mut c = Check::run(
                        "vertex-product",
                        json!({"beta": beta, "n": n, "x_degree": d}),
                        None,
                        || {
                            let r = vertex_product_check(beta, n, d);
                            q_order = r.q_order;
                            (!r.passed()).then(|| format!("{r:?}"))
                        },
                    );
                    c.order = Some(q_order);
                    c.max_order_checked = Some(q_order);
                    out.push(c);
                }
            }
            for n in 1..=5 {
                out.push(Check::run("symmetrizer", json!({"n": n}), None, || {
                    (!symmetrizer_check(n)).then(|| format!("n = {n}"))
                }));
            }
            out
        }
        _ => return None,
    };
    Some(checks)
}
