use outbraid_core::central_ext::central_quotient_presentation;
use outbraid_core::fpgroup::named::standard_projection;
use outbraid_core::fpgroup::{coset_table_from_quotient, reidemeister_schreier};
use outbraid_core::{AbelianDescriptor, Presentation, Result};
use serde_json::json;

use super::Params;
use crate::report::{Recorder, Report};

fn expect(r: &mut Recorder, name: String, got: Result<AbelianDescriptor>, want: Result<AbelianDescriptor>) {
    match (got, want) {
        (Ok(g), Ok(w)) => r.check(name, g == w, format!("{g}, expected {w}")),
        (Err(e), _) | (_, Err(e)) => r.check(name, false, format!("error: {e}")),
    }
}

pub fn abelianizations(_p: &Params) -> Report {
    let mut r = Recorder::new("abelianizations", json!({ "braid_n": [2, 7], "quotient_n": [3, 6] }));
    for n in 2..=7 {
        expect(
            &mut r,
            format!("B{n}"),
            Presentation::braid(n).map(|p| p.abelianization()),
            AbelianDescriptor::from_parts(1, &[]),
        );
    }
    for n in 3..=6usize {
        expect(
            &mut r,
            format!("B{n}/<zeta{n}>"),
            central_quotient_presentation(n).map(|p| p.abelianization()),
            AbelianDescriptor::from_parts(0, &[(n * (n - 1)) as u64]),
        );
    }
    expect(
        &mut r,
        "<t1, t2, t3 | t_i^2>".into(),
        Ok(Presentation::free_product_z2(3).abelianization()),
        AbelianDescriptor::from_parts(0, &[2, 2, 2]),
    );
    let p4 = (|| {
        let b4 = Presentation::braid(4)?;
        let mut pi4 = standard_projection(4)?;
        pi4.verify()?;
        let t = coset_table_from_quotient(&b4, &pi4)?;
        Ok(reidemeister_schreier(&b4, &t)?.abelianization())
    })();
    expect(&mut r, "P4 via Reidemeister-Schreier".into(), p4, AbelianDescriptor::from_parts(6, &[]));
    r.finish()
}
