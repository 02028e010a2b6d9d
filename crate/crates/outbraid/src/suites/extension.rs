use num_integer::gcd;
use outbraid_core::central_ext::{
    centrality_insensitivity_check, class_order, class_order_gcd, class_order_search,
    composed_twist, gt_commutation_check, lifts_forced_equal, nu, phi_compose_law,
    phi_nu_ab_exponent, phi_nu_verify, splitting_search, transgression_cokernel, twist_exponent,
};
use outbraid_core::AbelianDescriptor;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{is_budget, params_json, Params};
use crate::report::{Recorder, Report};
use crate::sampling::random_commutator_word;

const TWIST_RANGE: std::ops::RangeInclusive<i64> = -3..=3;

pub fn phinu(p: &Params) -> Report {
    let mut r = Recorder::new("phinu", params_json(p));
    for n in p.strand_counts(&[3, 4, 5, 6]) {
        for e in TWIST_RANGE {
            r.check_result(
                format!("n={n} e={e} relators and full twist"),
                phi_nu_verify(n, e).map(|ok| (ok, format!("zeta{n} -> zeta{n}^{}", nu(n, e)))),
                is_budget,
            );
            let ab = phi_nu_ab_exponent(n, e);
            r.check(
                format!("n={n} e={e} abelian exponent"),
                ab == nu(n, e) && (ab != 1) == (e != 0),
                format!("{ab}"),
            );
            let mut all = true;
            let mut failures = Vec::new();
            for e2 in TWIST_RANGE {
                match phi_compose_law(n, e, e2) {
                    Ok(true) => {}
                    Ok(false) => {
                        all = false;
                        failures.push(e2.to_string());
                    }
                    Err(err) => {
                        all = false;
                        failures.push(format!("{e2}: {err}"));
                    }
                }
            }
            let detail = if all {
                format!("e2 in -3..=3, e.g. e2=1 gives e12={}", composed_twist(n, e, 1))
            } else {
                format!("fails for e2 = {}", failures.join(", "))
            };
            r.check(format!("n={n} e={e} composition law"), all, detail);
        }
    }
    r.finish()
}

pub fn splitting(p: &Params) -> Report {
    let mut r = Recorder::new("splitting", params_json(p));
    for n in p.strand_counts(&[3, 4, 5, 6]) {
        r.check_result(
            format!("n={n} lift exponents forced equal"),
            lifts_forced_equal(n).map(|ok| (ok, "relator constraints have solutions (a, ..., a) only".into())),
            is_budget,
        );
        let t = twist_exponent(n) as u64;
        let mut split_at = Vec::new();
        let mut mismatches = Vec::new();
        for d in 1..=p.dmax() {
            match splitting_search(n, d) {
                Ok(found) => {
                    if let Some(a) = found {
                        split_at.push(format!("{d}:{a}"));
                    }
                    if found.is_some() != (gcd(t, d) == 1) {
                        mismatches.push(format!("d={d} gives {found:?}"));
                    }
                }
                Err(e) => mismatches.push(format!("d={d}: {e}")),
            }
        }
        let detail = if mismatches.is_empty() {
            format!("d:a = {}", split_at.join(" "))
        } else {
            mismatches.join("; ")
        };
        r.check(
            format!("n={n} splits exactly for d coprime to {t}, d <= {}", p.dmax()),
            mismatches.is_empty(),
            detail,
        );
    }
    r.finish()
}

pub fn classorder(p: &Params) -> Report {
    let mut r = Recorder::new("classorder", params_json(p));
    for n in p.strand_counts(&[3, 4, 5, 6]) {
        let t = twist_exponent(n) as u64;
        let mut orders = Vec::new();
        let mut all = true;
        for d in 1..=p.dmax() {
            match (class_order_search(n, d), class_order(n, d)) {
                (Ok(k), Ok(k2)) => {
                    all &= k == k2 && k == class_order_gcd(n, d);
                    orders.push(k.to_string());
                }
                (a, b) => {
                    all = false;
                    orders.push(format!("{d}: {a:?} {b:?}"));
                }
            }
        }
        r.check(
            format!("n={n} search agrees with gcd for d <= {}", p.dmax()),
            all,
            orders.join(" "),
        );
        r.check_result(
            format!("n={n} order at d = {t}"),
            class_order(n, t).map(|k| (k == t, k.to_string())),
            is_budget,
        );
    }
    r.finish()
}

pub fn transgression(p: &Params) -> Report {
    let mut r = Recorder::new("transgression", params_json(p));
    for n in p.strand_counts(&[3, 4, 5, 6]) {
        let t = twist_exponent(n) as u64;
        for k in 1..=3 {
            let res = transgression_cokernel(n, k * t).and_then(|c| {
                let want = AbelianDescriptor::from_parts(0, &[t])?;
                Ok((c == want, c.to_string()))
            });
            r.check_result(format!("n={n} N={}", k * t), res, is_budget);
        }
        let mut all = true;
        for modulus in 1..=p.dmax() {
            let g = gcd(t, modulus);
            let want = if g == 1 {
                AbelianDescriptor::trivial()
            } else {
                AbelianDescriptor::from_parts(0, &[g]).expect("g >= 2")
            };
            all &= transgression_cokernel(n, modulus).is_ok_and(|c| c == want);
        }
        r.check(format!("n={n} Z/gcd(N, {t}) for N <= {}", p.dmax()), all, "");
    }
    r.finish()
}

pub fn gtcomm(p: &Params) -> Report {
    let mut r = Recorder::new("gtcomm", params_json(p));
    let mut rng = ChaCha8Rng::seed_from_u64(p.seed());
    let ns = p.strand_counts(&[3, 4]);
    for s in 0..p.samples() {
        let f = random_commutator_word(&mut rng, 12);
        let mut failures = Vec::new();
        for &n in &ns {
            for lambda in -3..=3 {
                for e in -2..=2 {
                    match gt_commutation_check(n, &f, lambda, e) {
                        Ok(true) => {}
                        Ok(false) => failures.push(format!("n={n} l={lambda} e={e}")),
                        Err(err) => failures.push(format!("n={n} l={lambda} e={e}: {err}")),
                    }
                }
            }
        }
        let detail = if failures.is_empty() {
            format!("f = {f}")
        } else {
            format!("f = {f}; fails at {}", failures.join(", "))
        };
        r.check(format!("sample {s} commutation"), failures.is_empty(), detail);

        let mut central = true;
        for &n in &ns {
            for e in -2..=2 {
                central &= centrality_insensitivity_check(n, &f, e).unwrap_or(false);
            }
        }
        r.check(format!("sample {s} centrality"), central, format!("f = {f}"));
    }
    r.finish()
}
