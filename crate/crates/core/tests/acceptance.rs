//! Exit criteria. Runs without the libtest harness and prints one line per
//! criterion; the process fails if any criterion fails.

use hecke_dirac::awring::compare_kato;
use hecke_dirac::cli::{
    all_multisegments, content_string, elliptic_ladders, kato_deformation_record, worked_examples,
    symmetric_mod_center, typec_sweep, uniform_reading, Ctx,
};
use hecke_dirac::clifford::{spin_char_table, spin_irrep_dimension, SpinCover};
use hecke_dirac::dirac::{dirac_cohomology, dirac_index, dirac_matrix, formula_root_system};
use hecke_dirac::exactalg::q;
use hecke_dirac::hecke::{graded_prime, simple_quotient};
use hecke_dirac::segments::{
    alpha_of, bgg_character, enumerate_z, ladder_hd_prediction, lambda_of, symmetric_multisegments, temp_of,
    Multisegment,
};
use hecke_dirac::weyl::partition::{distinct_odd_partitions, strict_partitions};
use hecke_dirac::weyl::symmetric::SymClassFn;
use hecke_dirac::weyl::{build_root_system, Partition, RootType};
use hecke_dirac::{Error, Result, Q};
use num_traits::One;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::time::Instant;

struct Outcome {
    pass: bool,
    detail: String,
}

fn ms(s: &str) -> Multisegment {
    s.parse().expect("fixed multisegment")
}

fn ctx(l: usize) -> Result<Ctx> {
    Ctx::type_a(l, &Q::one())
}

/// Criteria 1 and 2 share their instances.
fn square_and_anticommutation() -> Result<(Outcome, Outcome)> {
    let mut n = 0;
    let mut sq_bad = Vec::new();
    let mut anti_bad = Vec::new();
    for l in 2..=4 {
        let c = ctx(l)?;
        let ms = all_multisegments(l, 2);
        let res: Vec<(String, bool, bool)> = ms
            .par_iter()
            .map(|m| {
                let e = c.standard(m)?;
                let dc = dirac_matrix(&c.alg, &c.spin, &e)?;
                Ok((m.to_string(), dc.d_squared_audit(), dc.anticommutes()))
            })
            .collect::<Result<_>>()?;
        n += res.len();
        for (m, sq, anti) in res {
            if !sq {
                sq_bad.push(m.clone());
            }
            if !anti {
                anti_bad.push(m);
            }
        }
    }
    let out = |bad: Vec<String>| Outcome {
        pass: bad.is_empty(),
        detail: format!("{n} standard modules, l ≤ 4, endpoints in [-2,2], {} mismatches {:?}", bad.len(), bad),
    };
    Ok((out(sq_bad), out(anti_bad)))
}

struct SweepRow {
    m: Multisegment,
    hd_zero: bool,
    index_zero: bool,
}

fn vanishing_sweep() -> Result<Vec<(usize, Vec<SweepRow>)>> {
    let mut out = Vec::new();
    for l in [3, 4] {
        let c = ctx(l)?;
        let rows: Vec<SweepRow> = enumerate_z(l, 3)
            .par_iter()
            .map(|m| {
                let e = c.standard(m)?;
                let hd = c.hd(&e)?;
                let g = graded_prime(&c.alg, &e)?;
                let idx = dirac_index(&c.alg, &c.spin, &g);
                Ok(SweepRow {
                    m: m.clone(),
                    hd_zero: hd.is_zero(),
                    index_zero: idx.is_zero(),
                })
            })
            .collect::<Result<_>>()?;
        out.push((l, rows));
    }
    Ok(out)
}

fn vanishing(sweep: &[(usize, Vec<SweepRow>)]) -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    let mut twists_only = true;
    for (l, rows) in sweep {
        let wrong: Vec<&SweepRow> = rows.iter().filter(|r| r.hd_zero == r.m.is_symmetric()).collect();
        let nonzero = rows.iter().filter(|r| !r.hd_zero).count();
        let expected = distinct_odd_partitions(*l).len();
        pass &= wrong.is_empty() && nonzero == expected;
        twists_only &= rows.iter().all(|r| r.hd_zero != symmetric_mod_center(&r.m));
        let shapes: std::collections::BTreeSet<String> = rows
            .iter()
            .filter(|r| !r.hd_zero)
            .map(|r| lambda_of(&r.m).to_string())
            .collect();
        parts.push(format!(
            "l={l}: {} instances, H_D≠0 on {nonzero} (expected {expected}), {} disagree with symmetry, nonzero shapes {:?}",
            rows.len(),
            wrong.len(),
            shapes
        ));
    }
    parts.push(format!("H_D≠0 exactly on central twists of symmetric multisegments: {twists_only}"));
    Outcome {
        pass,
        detail: parts.join("; "),
    }
}

fn index(sweep: &[(usize, Vec<SweepRow>)]) -> Outcome {
    let mut bad = Vec::new();
    let mut elliptic = 0;
    let mut total = 0;
    for (_, rows) in sweep {
        for r in rows {
            total += 1;
            let sym = r.m.is_symmetric();
            elliptic += sym as usize;
            if r.index_zero == sym {
                bad.push(r.m.to_string());
            }
        }
    }
    Outcome {
        pass: bad.is_empty(),
        detail: format!("{total} modules, {elliptic} elliptic tempered, {} wrong {:?}", bad.len(), bad),
    }
}

fn golden() -> Result<Outcome> {
    let mut notes = Vec::new();
    let c3 = ctx(3)?;
    let e = c3.standard(&ms("[-1,1]"))?;
    let dc = dirac_matrix(&c3.alg, &c3.spin, &e)?;
    let h = dirac_cohomology(&dc)?;
    let a = dc.d.is_zero() && h.dim == 2;
    notes.push(format!("{{[-1,1]}}: D=0 {}, dim {}", dc.d.is_zero(), h.dim));

    let c4 = ctx(4)?;
    let e = c4.standard(&ms("[0,1];[-1,0]"))?;
    let he = c4.hd(&e)?;
    let l = simple_quotient(&c4.alg, &e)?;
    let hl = c4.hd(&l)?;
    let ht = c4.hd(&c4.standard(&ms("[-1,1];[0,0]"))?)?;
    let label = c4.describe(hl.character_s())?;
    let b = he.is_zero()
        && hl.dim_s() == 4
        && label == "σ̃(3,1)"
        && hl.character == ht.character
        && hl.character_s() == ht.character_s();
    notes.push(format!(
        "{{[0,1],[-1,0]}}: dim H_D(E) {}, dim H_D(L) {} per S⁺ ({} on S⁺⊕S⁻), character {label}, equals H_D(E({{[-1,1],[0,0]}})) {}",
        he.dim,
        hl.dim_s(),
        hl.dim,
        hl.character == ht.character
    ));
    Ok(Outcome {
        pass: a && b,
        detail: notes.join("; "),
    })
}

fn ladder() -> Result<Outcome> {
    let mut records = Vec::new();
    let mut bad = Vec::new();
    for l in 2..=5 {
        let c = ctx(l)?;
        let recs: Vec<(String, bool, Value)> = elliptic_ladders(l, 3)
            .par_iter()
            .map(|m| {
                let lq = simple_quotient(&c.alg, &c.standard(m)?)?;
                let hl = c.hd(&lq)?;
                let temp = temp_of(m).ok_or_else(|| Error::Invalid(m.to_string()))?;
                let ht = c.hd(&c.standard(&temp)?)?;
                let p = ladder_hd_prediction(m)?;
                let d = hl.dim_s();
                Ok((
                    m.to_string(),
                    hl.character == ht.character,
                    json!({"matches_n": p.dim_n == Some(d), "matches_l": p.dim_l == Some(d)}),
                ))
            })
            .collect::<Result<_>>()?;
        for (m, ok, v) in recs {
            if !ok {
                bad.push(m);
            }
            records.push(v);
        }
    }
    let reading = uniform_reading(&records);
    Ok(Outcome {
        pass: bad.is_empty() && reading.is_some() && !records.is_empty(),
        detail: format!(
            "{} elliptic ladders, l ≤ 5; character mismatches {:?}; dimension reading uniform: {}",
            records.len(),
            bad,
            reading.unwrap_or("none")
        ),
    })
}

fn multiplicity_one() -> Result<Outcome> {
    let mut n = 0;
    let mut bad = Vec::new();
    for l in 2..=6 {
        for m in elliptic_ladders(l, 3) {
            n += 1;
            let ch = bgg_character(&m)?;
            let alpha = alpha_of(&m)?.alpha;
            let beta = lambda_of(&m).transpose();
            let one = Q::one();
            if ch.inner(&SymClassFn::irreducible(&alpha)) != one || ch.inner(&SymClassFn::irreducible(&beta)) != one {
                bad.push(m.to_string());
            }
        }
    }
    Ok(Outcome {
        pass: bad.is_empty() && n > 0,
        detail: format!("{n} elliptic ladders, l ≤ 6; failures {bad:?}"),
    })
}

fn examples() -> Outcome {
    let recs = worked_examples();
    let bad: Vec<String> = recs
        .iter()
        .filter(|r| r["pass"] != json!(true))
        .map(|r| format!("{} got {} expected {}", r["example"], r["got"], r["expected"]))
        .collect();
    Outcome {
        pass: bad.is_empty(),
        detail: format!("{} strings compared; mismatches {bad:?}", recs.len()),
    }
}

fn kato() -> Result<Outcome> {
    let mut tempered = 0;
    let mut deformed = 0;
    let mut bad = Vec::new();
    for l in 2..=4 {
        let c = ctx(l)?;
        for m in symmetric_multisegments(l) {
            tempered += 1;
            let k = compare_kato(&c.alg, &c.spin, &m)?;
            if !k.pass() {
                bad.push(format!("{m} {:?} vs {:?}", k.graded_dims_e, k.graded_dims_k));
            }
        }
        let non_tempered: Vec<Multisegment> = enumerate_z(l, 2)
            .into_iter()
            .filter(|m| c.standard(m).and_then(|e| c.alg.is_tempered(&e)).map(|t| !t).unwrap_or(false))
            .collect();
        let recs: Vec<Value> = non_tempered
            .par_iter()
            .map(|m| kato_deformation_record(&c, m))
            .collect::<Result<_>>()?;
        deformed += recs.len();
        bad.extend(
            recs.iter()
                .filter(|r| r["pass"] != json!(true))
                .map(|r| r["multisegment"].to_string()),
        );
    }
    Ok(Outcome {
        pass: bad.is_empty() && tempered > 0 && deformed > 0,
        detail: format!("{tempered} tempered comparisons, {deformed} non-tempered deformations; failures {bad:?}"),
    })
}

fn spin() -> Result<Outcome> {
    let mut bad = Vec::new();
    for l in 2..=6usize {
        let rs = build_root_system(RootType::A, l - 1, None)?;
        let table = spin_char_table(&SpinCover::new(&formula_root_system(&rs))?)?;
        let mut sum = 0i64;
        let mut dims = Vec::new();
        for i in table.genuine_indices() {
            let d = table.chars[i].degree().as_integer().expect("integral degree");
            sum += d * d;
            dims.push((table.labels[i].as_ref().map(|x| x.partition().clone()), d));
        }
        if sum != (1..=l as i64).product::<i64>() {
            bad.push(format!("l={l}: Σdim² = {sum}"));
        }
        for p in strict_partitions(l) {
            let formula = spin_irrep_dimension(&p)? as i64;
            let found: Vec<i64> = dims.iter().filter(|(x, _)| x.as_ref() == Some(&p)).map(|d| d.1).collect();
            if found.is_empty() || found.iter().any(|&d| d != formula) {
                bad.push(format!("l={l} {p}: formula {formula}, table {found:?}"));
            }
        }
    }
    Ok(Outcome {
        pass: bad.is_empty(),
        detail: format!("l = 2..6; failures {bad:?}"),
    })
}

fn type_c() -> Result<Outcome> {
    let (_, readings) = typec_sweep(2, &q(17, 10), 3)?;
    let scaled = readings
        .iter()
        .find(|r| r.reading == "scaled")
        .ok_or_else(|| Error::Invalid("missing reading".into()))?;
    let s = content_string(&Partition::new(vec![3, 2, 2]));
    let want = "W₇(m, m+1, m+2, m\u{2212}1, m, m\u{2212}2, m\u{2212}1)";
    let pass = scaled.all_nonzero_tempered
        && scaled.all_in_family
        && scaled.nonzero_central_characters.len() <= 2
        && scaled.instances > 0
        && s == want;
    Ok(Outcome {
        pass,
        detail: format!(
            "{} modules; H_D≠0 on {} with central characters {:?}, tempered {}, in family {}; string {s}",
            scaled.instances,
            scaled.nonzero_instances,
            scaled.nonzero_central_characters,
            scaled.all_nonzero_tempered,
            scaled.all_in_family
        ),
    })
}

fn report(n: usize, name: &str, start: Instant, r: Result<Outcome>) -> bool {
    let secs = start.elapsed().as_secs_f64();
    match r {
        Ok(o) => {
            println!("criterion {n:>2} {} {name} ({secs:.1}s): {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
            o.pass
        }
        Err(e) => {
            println!("criterion {n:>2} FAIL {name} ({secs:.1}s): error {e}");
            false
        }
    }
}

fn main() {
    let mut results = Vec::new();

    let t = Instant::now();
    match square_and_anticommutation() {
        Ok((sq, anti)) => {
            results.push(report(1, "square of the Dirac operator", t, Ok(sq)));
            results.push(report(2, "anticommutation with the spin cover", t, Ok(anti)));
        }
        Err(e) => {
            let msg = e.to_string();
            results.push(report(1, "square of the Dirac operator", t, Err(e)));
            results.push(report(2, "anticommutation with the spin cover", t, Err(Error::Invalid(msg))));
        }
    }

    let t = Instant::now();
    let sweep = vanishing_sweep();
    match &sweep {
        Ok(s) => results.push(report(3, "vanishing", t, Ok(vanishing(s)))),
        Err(e) => results.push(report(3, "vanishing", t, Err(Error::Invalid(e.to_string())))),
    }

    let t = Instant::now();
    results.push(report(4, "golden values", t, golden()));
    let t = Instant::now();
    results.push(report(5, "ladder cohomology", t, ladder()));
    let t = Instant::now();
    results.push(report(6, "multiplicity one", t, multiplicity_one()));
    let t = Instant::now();
    results.push(report(7, "worked examples", t, Ok(examples())));

    let t = Instant::now();
    match &sweep {
        Ok(s) => results.push(report(8, "Dirac index", t, Ok(index(s)))),
        Err(e) => results.push(report(8, "Dirac index", t, Err(Error::Invalid(e.to_string())))),
    }

    let t = Instant::now();
    results.push(report(9, "deformation to the graded algebra", t, kato()));
    let t = Instant::now();
    results.push(report(10, "spin bookkeeping", t, spin()));
    let t = Instant::now();
    results.push(report(11, "type C", t, type_c()));

    let failed: Vec<usize> = results
        .iter()
        .enumerate()
        .filter(|(_, &p)| !p)
        .map(|(i, _)| i + 1)
        .collect();
    println!(
        "acceptance: {} of {} criteria pass{}",
        results.len() - failed.len(),
        results.len(),
        if failed.is_empty() { String::new() } else { format!("; failing {failed:?}") }
    );
    if !failed.is_empty() {
        std::process::exit(1);
    }
}
