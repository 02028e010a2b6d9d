use std::collections::BTreeSet;

use outbraid_core::braid::{equals, linking_numbers, permutation_of, pure_braid_generator, zeta};
use outbraid_core::fpgroup::named::{beta43 as beta43_hom, composite43, s43, sphere_projection, standard_projection};
use outbraid_core::fpgroup::{
    coset_table_from_quotient, reidemeister_schreier_with, todd_coxeter, GroupHom, SymmetricGroup,
    TreePolicy,
};
use outbraid_core::freeprod::{
    is_in_pi04, klein_quotient, pi04_subgroup_words, reduced_words, torsion_scan, MAX_SCAN_LENGTH,
};
use outbraid_core::hom_enum::induced_map;
use outbraid_core::intlinalg::{cokernel, kernel_basis, rank};
use outbraid_core::perm::AllPerms;
use outbraid_core::{AbelianDescriptor, IntMatrix, Perm, Presentation, Result, StrandPairMatrix};
use serde_json::json;

use super::{params_json, Params};
use crate::report::{Recorder, Report};

fn run(r: &mut Recorder, name: &str, f: impl FnOnce(&mut Recorder) -> Result<()>) {
    if let Err(e) = f(r) {
        r.check(name, false, format!("error: {e}"));
    }
}

fn klein_four() -> Result<BTreeSet<Perm>> {
    ["", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)"]
        .iter()
        .map(|c| Perm::parse_cycles(c, 4))
        .collect()
}

pub fn beta43(_p: &Params) -> Report {
    let mut r = Recorder::new("beta43", json!({ "diagram_n": [3, 4, 5] }));
    run(&mut r, "beta43", |r| {
        let mut b = beta43_hom()?;
        r.check("beta43 respects the B4 relators", b.verify()?, "images s1, s2, s1 in B3");
        let root = b.evaluate(&[1, 2, 3, 1, 2, 3]);
        r.check(
            "beta43((s1 s2 s3)^2) = zeta3",
            equals(&root, &zeta(3, 3)?)?,
            format!("image word {root}"),
        );

        let mut s = s43()?;
        r.check("s43 respects the Coxeter relators of S4", s.verify()?, "images (1 2), (2 3), (1 2)");
        let s4_gens: Vec<Perm> = (1..4).map(|i| Perm::transposition(4, i, i + 1)).collect::<Result<_>>()?;
        let map = induced_map(&s4_gens, s.images())?;
        match map {
            Some(m) => {
                let kernel: BTreeSet<Perm> = m.iter().filter(|(_, v)| v.is_identity()).map(|(k, _)| k.clone()).collect();
                let shown: Vec<String> = kernel.iter().map(|p| p.to_string()).collect();
                r.check("ker s43 is the Klein four group", kernel == klein_four()?, shown.join(", "));
            }
            None => r.check("ker s43 is the Klein four group", false, "s43 is not well defined on elements"),
        }
        let coxeter = Presentation::coxeter_symmetric(4)?;
        let t = coset_table_from_quotient(&coxeter, &s)?;
        r.check("s43 quotient table", t.len() == 6, format!("{} cosets, kernel order {}", t.len(), 24 / t.len()));

        let mut pi4 = standard_projection(4)?;
        pi4.verify()?;
        let mut pi3 = standard_projection(3)?;
        pi3.verify()?;
        let mut comp = composite43()?;
        comp.verify()?;
        let lookup = induced_map(&s4_gens, s.images())?.unwrap_or_default();
        let mut agree = true;
        for i in 1..=3 {
            let via_s4 = lookup.get(&pi4.evaluate(&[i])).cloned();
            let via_b3 = permutation_of(&b.evaluate(&[i]));
            let direct = comp.evaluate(&[i]);
            agree &= via_s4.as_ref() == Some(&direct) && via_b3 == direct;
        }
        r.check("s43 after pi4 = pi3 after beta43 on generators", agree, "");

        for n in 3..=5 {
            let mut gamma = sphere_projection(n + 1)?;
            let well_defined = gamma.verify()?;
            let mut pin = standard_projection(n)?;
            pin.verify()?;
            // Φ_n sends σ_i to σ̄_i, so γ_{n+1}∘Φ_n is evaluation on the letter i
            let commutes = (1..n as i32).all(|i| gamma.evaluate(&[i]) == pin.evaluate(&[i]).extend(n + 1));
            let imgs: Vec<Perm> = (1..n as i32).map(|i| gamma.evaluate(&[i])).collect();
            let mut composite = GroupHom::new(Presentation::braid(n)?, SymmetricGroup { degree: n + 1 }, imgs)?;
            let composite_ok = composite.verify()?;
            r.check(
                format!("sphere diagram n={n}"),
                well_defined && commutes && composite_ok,
                format!("gamma{} on the sphere relators: {well_defined}", n + 1),
            );
        }
        Ok(())
    });
    r.finish()
}

/// Expected images of the x_ij: the pair in `B₃` for each pair in `B₄`.
const P43AB_TABLE: [((usize, usize), (usize, usize)); 6] = [
    ((1, 2), (1, 2)),
    ((3, 4), (1, 2)),
    ((1, 3), (1, 3)),
    ((2, 4), (1, 3)),
    ((1, 4), (2, 3)),
    ((2, 3), (2, 3)),
];

pub fn p43ab(_p: &Params) -> Report {
    let mut r = Recorder::new("p43ab", json!({}));
    run(&mut r, "p43ab", |r| {
        let mut b = beta43_hom()?;
        b.verify()?;
        let pairs4 = StrandPairMatrix::pairs(4);
        let mut columns: Vec<Vec<i64>> = Vec::new();
        for &(i, j) in &pairs4 {
            let x = pure_braid_generator(4, i, j)?;
            let img = b.evaluate(x.letters());
            let lk = linking_numbers(&img)?;
            let want = P43AB_TABLE.iter().find(|(k, _)| *k == (i, j)).map(|(_, v)| *v).expect("listed");
            let mut expected = StrandPairMatrix::zero(3);
            expected.set(want.0, want.1, 1);
            r.check(format!("x{i}{j}"), lk == expected, format!("-> {lk}"));
            columns.push(lk.as_vector().to_vec());
        }
        let m = IntMatrix::from_columns(&columns, 3)?;

        let ones4 = linking_numbers(&zeta(4, 4)?)?;
        let ones3 = linking_numbers(&zeta(3, 3)?)?;
        let all_ones = ones4.as_vector().iter().all(|&v| v == 1) && ones3.as_vector().iter().all(|&v| v == 1);
        r.check("full twists have all linking numbers 1", all_ones, format!("{ones4}; {ones3}"));

        // Z⁶/⟨1⟩ with basis x12..x24 (x34 = −Σ), onto Z³/⟨1⟩ via (a, b, c) ↦ (a − c, b − c)
        let mut induced = IntMatrix::zeros(2, 5);
        for k in 0..5 {
            let col: Vec<i64> = (0..3)
                .map(|i| i64::try_from(m.get(i, k)).expect("small entries"))
                .collect();
            induced.set(0, k, (col[0] - col[2]).into());
            induced.set(1, k, (col[1] - col[2]).into());
        }
        let ones_img = m.mul_vec(&vec![1.into(); 6]);
        let relation_maps_to_relation = ones_img.iter().all(|v| *v == ones_img[0]);
        let basis = kernel_basis(&induced);
        let coker = cokernel(&induced);
        r.check(
            "relation is respected",
            relation_maps_to_relation,
            format!("sum of all x_ij maps to {} times the sum", ones_img[0]),
        );
        r.check(
            "kernel on the quotients is Z^3",
            basis.len() == 3 && rank(&induced) == 2,
            format!("kernel rank {}, image cokernel {coker}", basis.len()),
        );
        Ok(())
    });
    r.finish()
}

pub fn pi04(_p: &Params) -> Report {
    let mut r = Recorder::new("pi04", json!({ "subgroup": "t1t2t3, t2t3t1, t3t1t2, t1t3t2" }));
    run(&mut r, "pi04", |r| {
        let p = Presentation::free_product_z2(3);
        let words = pi04_subgroup_words();
        let t = todd_coxeter(&p, &words, 40)?;
        r.check("coset enumeration", t.len() == 4 && t.is_consistent_with(&p), format!("{} cosets", t.len()));
        let mut q = klein_quotient();
        q.verify()?;
        let tq = coset_table_from_quotient(&p, &q)?;
        r.check("quotient table", tq.len() == 4, format!("{} cosets", tq.len()));
        let z3 = AbelianDescriptor::from_parts(3, &[])?;
        for policy in [TreePolicy::BreadthFirst, TreePolicy::DepthFirst] {
            let rw = reidemeister_schreier_with(&p, &t, policy)?;
            let ab = rw.presentation.abelianization();
            r.check(
                format!("Schreier presentation ({policy:?})"),
                rw.presentation.num_generators() == 9 && rw.presentation.relators().len() == 12 && ab == z3,
                format!(
                    "{} generators, {} relators, abelianization {ab}",
                    rw.presentation.num_generators(),
                    rw.presentation.relators().len()
                ),
            );
        }
        let words = reduced_words(8);
        let consistent = words.iter().all(|w| {
            let inside = is_in_pi04(w);
            inside == (t.trace(0, &w.to_word()) == 0) && inside == q.kernel_contains(&w.to_word())
        });
        r.check("membership agrees with the table", consistent, format!("{} reduced words", words.len()));
        Ok(())
    });
    r.finish()
}

pub fn s4rep(_p: &Params) -> Report {
    let mut r = Recorder::new("s4rep", json!({ "basis": "e1-e4, e2-e4, e3-e4" }));
    let all: Vec<Perm> = AllPerms::new(4).collect();
    let mats: Vec<Vec<Vec<i64>>> = all.iter().map(Perm::matrix_mod_diagonal).collect();
    let distinct: BTreeSet<&Vec<Vec<i64>>> = mats.iter().collect();
    r.check("24 distinct matrices", distinct.len() == 24, format!("{} distinct", distinct.len()));
    let mul = |a: &Vec<Vec<i64>>, b: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
        (0..3)
            .map(|i| (0..3).map(|j| (0..3).map(|k| a[i][k] * b[k][j]).sum()).collect())
            .collect()
    };
    let mut hom = true;
    for (g, mg) in all.iter().zip(&mats) {
        for (h, mh) in all.iter().zip(&mats) {
            hom &= g.then(h).matrix_mod_diagonal() == mul(mh, mg);
        }
    }
    r.check("matrices multiply like the group", hom, "M(g then h) = M(h) M(g)");
    let dets: BTreeSet<i64> = mats
        .iter()
        .map(|m| {
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        })
        .collect();
    r.check("integral and invertible", dets.iter().all(|d| d.abs() == 1), format!("determinants {dets:?}"));
    r.finish()
}

pub fn torsion(p: &Params) -> Report {
    let maxlen = p.maxlen();
    let mut r = Recorder::new("torsion", params_json(p));
    if maxlen > MAX_SCAN_LENGTH {
        r.check("scan", false, format!("maxlen {maxlen} exceeds {MAX_SCAN_LENGTH}"));
        return r.finish();
    }
    match torsion_scan(maxlen) {
        Ok(s) => {
            r.check(
                "cyclic reductions are single letters",
                s.anomalies.is_empty(),
                format!("{} involutions among {} words", s.involutions.len(), s.words_scanned),
            );
            let labels: Vec<String> = s.labels.iter().map(|l| format!("t{l}")).collect();
            r.check(
                "three conjugacy classes",
                s.class_count() == 3 || (maxlen == 0 && s.class_count() == 0),
                labels.join(", "),
            );
            r.check("involutions are odd palindromes", s.all_odd_palindromes, "");
        }
        Err(e) => r.check("scan", false, format!("error: {e}")),
    }
    r.finish()
}
