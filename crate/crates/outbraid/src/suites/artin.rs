use outbraid_core::braid::pure_braid_generator;
use outbraid_core::fpgroup::named::{composite43, epsilon, epsilon_tuple};
use outbraid_core::fpgroup::{braid_presentation, coset_table_from_quotient, GroupHom, SymmetricGroup};
use outbraid_core::hom_enum::{enumerate_homs, kernels_equal, verified_hom, EnumOptions};
use outbraid_core::perm::{tuple_to_string, Perm};
use outbraid_core::{PermTuple, Presentation, Result};
use serde_json::json;

use super::{is_budget, params_json, Params, DEGREE_SIX_BUDGET};
use crate::report::{Recorder, Report};

fn pure_generators(n: usize) -> Vec<(String, Vec<i32>)> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in i + 1..=n {
            let w = pure_braid_generator(n, i, j).expect("valid pair");
            out.push((format!("x{i}{j}"), w.letters().to_vec()));
        }
    }
    out
}

fn kills_pure(h: &GroupHom<SymmetricGroup>, n: usize) -> bool {
    pure_generators(n).iter().all(|(_, w)| h.kernel_contains(w))
}

fn verified(k: usize) -> Result<GroupHom<SymmetricGroup>> {
    let mut h = epsilon(k)?;
    h.verify()?;
    Ok(h)
}

pub fn artin4(_p: &Params) -> Report {
    let mut r = Recorder::new("artin4", json!({ "n": 4, "m": 4 }));
    let b4 = braid_presentation(4).expect("n = 4");

    let classes = enumerate_homs(&b4, 4, EnumOptions::surjective());
    r.check_result(
        "three classes",
        classes.as_ref().map(|c| {
            let reps: Vec<String> = c.classes.iter().map(|k| tuple_to_string(&k.representative)).collect();
            (c.class_count() == 3, format!("{} surjections; {}", c.total, reps.join(" ")))
        }),
        |e| is_budget(e),
    );
    if let Ok(c) = &classes {
        for k in 1..=3 {
            let res = epsilon_tuple(k).and_then(|t| {
                let canon = t.canonical_under_conjugation()?;
                let found = c.classes.iter().any(|x| x.representative == canon);
                Ok((found && t.closure_order() == 24, format!("{} ~ {}", tuple_to_string(&t), tuple_to_string(&canon))))
            });
            r.check_result(format!("epsilon{k} represents a class"), res, is_budget);
        }
        let killers: Vec<&PermTuple> = c
            .classes
            .iter()
            .map(|x| &x.representative)
            .filter(|t| {
                GroupHom::to_symmetric(b4.clone(), t).is_ok_and(|h| kills_pure(&h, 4))
            })
            .collect();
        let eps1 = epsilon_tuple(1).and_then(|t| t.canonical_under_conjugation()).ok();
        r.check(
            "one class kills every x_ij",
            killers.len() == 1 && Some(killers[0]) == eps1.as_ref(),
            format!("{} of {} classes", killers.len(), c.class_count()),
        );
    }

    let values = (|| -> Result<Vec<(String, Perm, Perm)>> {
        let e2 = verified(2)?;
        let e3 = verified(3)?;
        let s1sq = [1, 1];
        let root = [1, 2, 3, 1, 2, 3];
        let v = Perm::parse_cycles("(1 3)(2 4)", 4)?;
        let w = Perm::parse_cycles("(1 2)(3 4)", 4)?;
        Ok(vec![
            ("epsilon2(s1^2) = (1 3)(2 4)".into(), e2.evaluate(&s1sq), v.clone()),
            ("epsilon3(s1^2) = (1 3)(2 4)".into(), e3.evaluate(&s1sq), v),
            ("epsilon2((s1 s2 s3)^2) = 1".into(), e2.evaluate(&root), Perm::identity(4)),
            ("epsilon3((s1 s2 s3)^2) = (1 2)(3 4)".into(), e3.evaluate(&root), w),
        ])
    })();
    match values {
        Ok(vs) => {
            for (name, got, want) in vs {
                r.check(name, got == want, format!("got {got}"));
            }
        }
        Err(e) => r.check("epsilon values", false, format!("error: {e}")),
    }

    let kernels = (|| -> Result<(bool, String)> {
        let e1 = verified(1)?;
        let e2 = verified(2)?;
        let e3 = verified(3)?;
        let g = Perm::parse_cycles("(1 4 2)", 4)?;
        let conj = verified_hom(&b4, &e1.tuple().conjugate_by(&g))?;
        let ok = kills_pure(&e1, 4)
            && !kills_pure(&e2, 4)
            && !kills_pure(&e3, 4)
            && kernels_equal(&e1, &conj)?
            && !kernels_equal(&e1, &e2)?
            && !kernels_equal(&e1, &e3)?;
        Ok((ok, "ker epsilon1 = P4, which neither ker epsilon2 nor ker epsilon3 equals".into()))
    })();
    r.check_result("kernels", kernels, is_budget);
    r.finish()
}

fn expected_classes(n: usize) -> usize {
    match n {
        4 => 3,
        6 => 2,
        _ => 1,
    }
}

fn classify(r: &mut Recorder, n: usize, enable_n6: bool) {
    let tag = format!("n={n}");
    if !(3..=6).contains(&n) {
        r.check(tag, false, "supported strand counts are 3..=6");
        return;
    }
    if n == 6 && !enable_n6 {
        r.skip(format!("{tag} classes"), "degree six needs --enable-n6");
        return;
    }
    let p = braid_presentation(n).expect("n >= 3");
    let opts = EnumOptions {
        surjective_only: true,
        allow_degree_six: n == 6,
        budget: (n == 6).then_some(DEGREE_SIX_BUDGET),
    };
    let c = match enumerate_homs(&p, n, opts) {
        Ok(c) => c,
        Err(e) => {
            r.check_result::<outbraid_core::Error>(format!("{tag} classes"), Err(e), is_budget);
            return;
        }
    };
    r.check(
        format!("{tag} classes"),
        c.class_count() == expected_classes(n),
        format!("{} classes, {} surjections, {} relator checks", c.class_count(), c.total, c.relator_checks),
    );
    let homs: Result<Vec<GroupHom<SymmetricGroup>>> =
        c.all_tuples().iter().map(|t| verified_hom(&p, t)).collect();
    let homs = match homs {
        Ok(h) => h,
        Err(e) => {
            r.check(format!("{tag} verification"), false, format!("error: {e}"));
            return;
        }
    };
    if n == 4 {
        let killing = c
            .classes
            .iter()
            .filter(|k| verified_hom(&p, &k.representative).is_ok_and(|h| kills_pure(&h, n)))
            .count();
        r.check(format!("{tag} x_ij killers"), killing == 1, format!("{killing} classes kill every x_ij"));
        return;
    }
    let all_kill = homs.iter().all(|h| kills_pure(h, n));
    r.check(
        format!("{tag} every surjection kills every x_ij"),
        all_kill,
        format!("{} surjections, {} generators x_ij", homs.len(), n * (n - 1) / 2),
    );
    // degree six compares against one surjection; kernel equality is transitive
    let pairs: Result<(bool, usize)> = if n == 6 {
        homs.iter().try_fold((true, 0), |(ok, k), h| {
            Ok((ok && kernels_equal(&homs[0], h)?, k + 1))
        })
    } else {
        let mut all = true;
        let mut count = 0;
        for i in 0..homs.len() {
            for j in i + 1..homs.len() {
                count += 1;
                match kernels_equal(&homs[i], &homs[j]) {
                    Ok(b) => all &= b,
                    Err(e) => return r.check(format!("{tag} kernels"), false, format!("error: {e}")),
                }
            }
        }
        Ok((all, count))
    };
    r.check_result(
        format!("{tag} all kernels equal"),
        pairs.map(|(ok, k)| (ok, format!("{k} comparisons"))),
        is_budget,
    );
}

pub fn artin_n(p: &Params) -> Report {
    let mut r = Recorder::new("artin_n", params_json(p));
    for n in p.strand_counts(&[3, 5, 6]) {
        classify(&mut r, n, p.enable_n6);
    }
    r.finish()
}

pub fn b4s3(_p: &Params) -> Report {
    let mut r = Recorder::new("b4s3", json!({ "n": 4, "m": 3 }));
    let b4: Presentation = braid_presentation(4).expect("n = 4");
    let res = (|| -> Result<()> {
        let c = enumerate_homs(&b4, 3, EnumOptions::surjective())?;
        r.check(
            "one class",
            c.class_count() == 1,
            format!("{} classes, {} surjections", c.class_count(), c.total),
        );
        let mut comp = composite43()?;
        comp.verify()?;
        r.check(
            "class of s43 after pi4",
            c.contains_class_of(&comp.tuple())?,
            tuple_to_string(&comp.tuple()),
        );
        let homs: Vec<_> = c.all_tuples().iter().map(|t| verified_hom(&b4, t)).collect::<Result<_>>()?;
        let mut equal = true;
        for i in 0..homs.len() {
            for j in i + 1..homs.len() {
                equal &= kernels_equal(&homs[i], &homs[j])?;
            }
        }
        r.check("all kernels equal", equal, format!("{} surjections", homs.len()));
        let full_twist: Vec<i32> = [1, 2, 3].repeat(4);
        r.check(
            "(s1 s2 s3)^4 in every kernel",
            homs.iter().all(|h| h.kernel_contains(&full_twist)),
            "",
        );
        let t = coset_table_from_quotient(&b4, &comp)?;
        r.check("quotient table", t.len() == 6 && t.is_consistent_with(&b4), format!("{} cosets", t.len()));
        Ok(())
    })();
    if let Err(e) = res {
        r.check("b4s3", false, format!("error: {e}"));
    }
    r.finish()
}
