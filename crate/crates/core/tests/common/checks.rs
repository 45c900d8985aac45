//! Acceptance checks shared by the oracle suite and the acceptance report.
//! Each returns `Err` with a short reason on the first mismatch.

use std::process::{Command, Output};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use trisect::params::RelativeTrisectionType;
use trisect::{
    apply_moves, bundled, cap_off, enumerate_types, homology, intersection_form, invariant_report,
    lagrangian_span, minimal_genus_bound, openbook_boundary_filter, parse_diagram,
    serialize_diagram, smith_normal_form, standard_closed_diagram, standard_relative_diagram,
    validate_closed, validate_relative, AbelianGroup, Boundary, ClosedTrisectionDiagram,
    DiagramDocument, DiagramType, GenusBound, H1Class, IntegerMatrix, Move, Parity, SurfaceModel,
};

use super::*;

pub type Check = Result<(), String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

pub fn binary() -> Command {
    Command::new(env!("CARGO_BIN_EXE_trisect"))
}

fn run(args: &[&str]) -> Result<Output, String> {
    binary()
        .args(args)
        .output()
        .map_err(|e| format!("cannot run trisect {args:?}: {e}"))
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

pub fn paper_demo() -> Check {
    let summary = trisect::demo::paper_demo().map_err(|e| e.to_string())?;
    for c in &summary.checks {
        ensure!(
            c.pass,
            "{}: expected {}, observed {}",
            c.name,
            c.expected,
            c.observed
        );
    }
    let (d1, d2) = (bundled::d1(), bundled::d2());
    for (name, d, parity) in [("D1", &d1, Parity::Even), ("D2", &d2, Parity::Odd)] {
        let v = validate_relative(d);
        let want = DiagramType::Relative {
            g: 2,
            k: 1,
            p: 0,
            b: 2,
        };
        ensure!(
            v.ok && v.inferred_type == Some(want),
            "{name} does not validate as (2,1;0,2)"
        );
        let capped = cap_off(d).map_err(|e| e.to_string())?;
        let t = validate_closed(&capped)
            .into_result()
            .map_err(|e| e.to_string())?;
        ensure!(
            t == DiagramType::Closed { g: 2, k: 0 },
            "cap({name}) has type {t}"
        );
        let r = invariant_report(&capped).map_err(|e| e.to_string())?;
        ensure!(
            r.homology.h1 == AbelianGroup::trivial(),
            "cap({name}) H1 = {}",
            r.homology.h1
        );
        ensure!(
            r.homology.h2 == AbelianGroup::free(2),
            "cap({name}) H2 = {}",
            r.homology.h2
        );
        ensure!(
            r.form.parity == parity,
            "cap({name}) parity {}",
            r.form.parity
        );
    }

    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let mut paths = Vec::new();
    for (name, d) in [("D1", d1), ("D2", d2)] {
        let path = dir.path().join(format!("{name}.json"));
        std::fs::write(&path, serialize_diagram(&DiagramDocument::new(d)))
            .map_err(|e| e.to_string())?;
        paths.push(path.to_string_lossy().into_owned());
    }
    let o = run(&["distinguish", &paths[0], &paths[1]])?;
    ensure!(
        o.status.code() == Some(0),
        "distinguish exited {:?}",
        o.status.code()
    );
    ensure!(
        stdout(&o).contains("intersection form parity: even vs odd"),
        "distinguish output lacks the parity witness"
    );

    let start = Instant::now();
    let o = run(&["paper-demo"])?;
    let took = start.elapsed();
    ensure!(
        o.status.success(),
        "paper-demo exited {:?}",
        o.status.code()
    );
    ensure!(took < Duration::from_secs(1), "paper-demo took {took:?}");
    Ok(())
}

pub fn params() -> Check {
    let want = vec![RelativeTrisectionType::new(1, 0, 0, 1).unwrap()];
    let got = enumerate_types(2, 1);
    ensure!(got == want, "enumerate_types(2, 1) = {got:?}");
    let kept = openbook_boundary_filter(&got, Boundary::S2xS1);
    ensure!(kept.is_empty(), "s2xs1 filter kept {kept:?}");
    match minimal_genus_bound(2, Boundary::S2xS1) {
        GenusBound::Found { genus: 2, .. } => {}
        other => return Err(format!("minimal_genus_bound(2, s2xs1) = {other:?}")),
    }

    let o = run(&["params", "--chi", "2", "--gmax", "1"])?;
    ensure!(o.status.success(), "params exited {:?}", o.status.code());
    let rows: Vec<String> = stdout(&o)
        .lines()
        .filter(|l| l.starts_with(|c: char| c.is_ascii_digit()))
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .collect();
    ensure!(rows == ["1 0 0 1 1 2"], "params table rows {rows:?}");
    let o = run(&["params", "--chi", "2", "--gmax", "1", "--boundary", "s2xs1"])?;
    ensure!(
        o.status.success(),
        "params --boundary exited {:?}",
        o.status.code()
    );
    ensure!(
        stdout(&o).contains("0 of 1 type(s) survive"),
        "params --boundary did not report an empty list"
    );
    Ok(())
}

pub fn cap_law() -> Check {
    for t in closed_page_types(4, 7) {
        let d = standard_relative_diagram(t.g, t.k, t.p, t.b).map_err(|e| e.to_string())?;
        let capped = cap_off(&d).map_err(|e| format!("{t}: {e}"))?;
        let v = validate_closed(&capped);
        let want = DiagramType::Closed {
            g: t.g,
            k: t.k + 1 - t.b,
        };
        ensure!(
            v.ok && v.inferred_type == Some(want),
            "cap of {t} validates as {v}"
        );
    }
    Ok(())
}

fn form_summary(d: &ClosedTrisectionDiagram) -> Result<(usize, i64, Parity, AbelianGroup), String> {
    let q = intersection_form(d).map_err(|e| e.to_string())?;
    let h = homology(d).map_err(|e| e.to_string())?;
    Ok((q.rank, q.signature, q.parity, h.h1))
}

/// `cases` seeded runs of up to 20 moves each.
pub fn commutation(cases: u64) -> Check {
    for seed in 0..cases {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_relative(&mut rng);
        let len = rng.gen_range(0..=20);
        let moves = random_moves(&mut rng, &d, len, 0.3);
        let moved = apply_moves(&d, &moves).map_err(|e| e.to_string())?;
        let capped: Vec<Move> = moves
            .iter()
            .filter_map(|m| m.capped(&d.surface).transpose())
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        let base = cap_off(&d).map_err(|e| e.to_string())?;
        let left = cap_off(&moved).map_err(|e| e.to_string())?;
        let right = apply_moves(&base, &capped).map_err(|e| e.to_string())?;
        ensure!(
            left == right,
            "seed {seed}: cap-off does not commute with {moves:?}"
        );

        let slides = random_moves(&mut rng, &base, len, 0.0);
        let slid = apply_moves(&base, &slides).map_err(|e| e.to_string())?;
        ensure!(
            invariant_report(&slid) == invariant_report(&base),
            "seed {seed}: slides changed invariants"
        );
        let twists = random_moves(&mut rng, &base, len, 1.0);
        let twisted = apply_moves(&base, &twists).map_err(|e| e.to_string())?;
        ensure!(
            form_summary(&twisted)? == form_summary(&base)?,
            "seed {seed}: transvections changed rank, signature, parity or H1"
        );
    }
    Ok(())
}

pub fn models() -> Check {
    let z = AbelianGroup::free(1);
    let zero = AbelianGroup::trivial();
    let h = homology(&bundled::s4()).map_err(|e| e.to_string())?;
    ensure!(
        [&h.h0, &h.h1, &h.h2, &h.h3, &h.h4] == [&z, &zero, &zero, &zero, &z],
        "S4 homology {h}"
    );
    let h = homology(&bundled::s1xs3()).map_err(|e| e.to_string())?;
    ensure!(h.h1 == z && h.h2 == zero, "S1xS3 homology {h}");
    for (name, d, entry, parity, sig) in [
        ("CP2", bundled::cp2(), 1, Parity::Odd, 1),
        ("CP2bar", bundled::cp2_bar(), -1, Parity::Odd, -1),
    ] {
        let q = intersection_form(&d).map_err(|e| e.to_string())?;
        ensure!(
            q.matrix == IntegerMatrix::new(1, 1, vec![entry]).unwrap(),
            "{name} form {}",
            q.matrix
        );
        ensure!(
            q.parity == parity && q.signature == sig,
            "{name}: {} {}",
            q.parity,
            q.signature
        );
    }
    Ok(())
}

/// Euler characteristic of a relative trisection by inclusion-exclusion over
/// its pieces: three sectors `♮ᵏ S¹×B³`, three compression bodies from
/// `Σ_{g,b}` to the page `Σ_{p,b}`, and the central surface.
pub fn pieces_euler(g: i64, k: i64, p: i64, b: i64) -> i64 {
    let sector = 1 - k;
    let compression_body = (2 - 2 * p - b) - (g - p);
    let central = 2 - 2 * g - b;
    3 * sector - 3 * compression_body + central
}

pub fn euler_formulas() -> Check {
    let mut closed: Vec<(String, ClosedTrisectionDiagram)> = vec![
        ("S4".into(), bundled::s4()),
        ("S1xS3".into(), bundled::s1xs3()),
        ("CP2".into(), bundled::cp2()),
        ("CP2bar".into(), bundled::cp2_bar()),
    ];
    for g in 0..=6 {
        for k in 0..=g {
            closed.push((
                format!("standard ({g},{k})"),
                standard_closed_diagram(g, k).unwrap(),
            ));
        }
    }
    for (name, d) in &closed {
        let t = validate_closed(d)
            .into_result()
            .map_err(|e| format!("{name}: {e}"))?;
        let DiagramType::Closed { g, k } = t else {
            unreachable!()
        };
        let h = homology(d).map_err(|e| format!("{name}: {e}"))?;
        let (g, k) = (g as i64, k as i64);
        ensure!(
            h.euler_characteristic() == 2 + g - 3 * k,
            "{name}: homology chi {}",
            h.euler_characteristic()
        );
        let pieces = 3 * (1 - k) - 3 * (1 - g) + (2 - 2 * g);
        ensure!(pieces == 2 + g - 3 * k, "{name}: pieces give {pieces}");
    }

    for g in 0..=6usize {
        for p in 0..=g {
            for b in 1..=8usize {
                for k in 0..=g + p + b {
                    let Ok(t) = RelativeTrisectionType::new(g, k, p, b) else {
                        continue;
                    };
                    let (gi, ki, pi, bi) = (g as i64, k as i64, p as i64, b as i64);
                    let formula = gi - 3 * ki + 3 * pi + 2 * bi - 1;
                    let lib = trisect::euler_characteristic_relative(g, k, p, b).unwrap();
                    ensure!(lib == formula, "{t}: library chi {lib}, formula {formula}");
                    ensure!(
                        pieces_euler(gi, ki, pi, bi) == formula,
                        "{t}: pieces give {}",
                        pieces_euler(gi, ki, pi, bi)
                    );
                    if p == 0 {
                        let d = standard_relative_diagram(g, k, p, b).unwrap();
                        let h = homology(&cap_off(&d).unwrap()).map_err(|e| format!("{t}: {e}"))?;
                        ensure!(
                            h.euler_characteristic() == formula + bi,
                            "{t}: cap-off chi {}",
                            h.euler_characteristic()
                        );
                    }
                }
            }
        }
    }
    for d in [bundled::d1(), bundled::d2()] {
        let h = homology(&cap_off(&d).unwrap()).map_err(|e| e.to_string())?;
        ensure!(
            h.euler_characteristic() == pieces_euler(2, 1, 0, 2) + 2,
            "bundled cap-off chi {}",
            h.euler_characteristic()
        );
    }
    Ok(())
}

/// Every quadruple in a box wide enough for `χ ≥ −4` and `g ≤ 5`, tested
/// against the defining inequalities directly.
pub fn brute_force_types(chi: i64, g_max: usize) -> Vec<RelativeTrisectionType> {
    let mut out = Vec::new();
    for g in 0..=g_max {
        for k in 0..=100usize {
            for p in 0..=g_max {
                for b in 1..=40usize {
                    let (gi, ki, pi, bi) = (g as i64, k as i64, p as i64, b as i64);
                    let admissible = 2 * pi + bi - 1 <= ki && ki <= gi + pi + bi - 1;
                    if admissible && gi - 3 * ki + 3 * pi + 2 * bi - 1 == chi {
                        out.push(RelativeTrisectionType { g, k, p, b });
                    }
                }
            }
        }
    }
    out
}

pub fn enumeration() -> Check {
    for chi in -4..=6 {
        let all = brute_force_types(chi, 5);
        for g_max in 0..=5 {
            let want: Vec<_> = all.iter().copied().filter(|t| t.g <= g_max).collect();
            let got = enumerate_types(chi, g_max);
            ensure!(
                got == want,
                "chi {chi}, g_max {g_max}: got {got:?}, brute force {want:?}"
            );
        }
    }
    Ok(())
}

pub fn smith(count: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for case in 0..count {
        let a = random_matrix(&mut rng, 8, 9);
        let snf = smith_normal_form(&a);
        ensure!(
            product(&[&snf.u, &a, &snf.v]) == wide(&snf.d),
            "case {case}: U A V != D for {a}"
        );
        ensure!(
            diagonal_is_smith(&snf.d),
            "case {case}: {} is not a Smith form",
            snf.d
        );
        ensure!(
            product(&[&snf.u, &snf.u_inv]) == wide(&IntegerMatrix::identity(a.rows()))
                && product(&[&snf.v, &snf.v_inv]) == wide(&IntegerMatrix::identity(a.cols())),
            "case {case}: inverse transforms are wrong"
        );
        ensure!(
            snf.rank() == rational_rank(&a.to_rows()),
            "case {case}: rank mismatch"
        );
    }
    Ok(())
}

pub fn lattice_ranks(count: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for case in 0..count {
        let dim = rng.gen_range(1..=6);
        let s = SurfaceModel::new(0, dim + 1);
        let (na, nb) = (rng.gen_range(0..=dim), rng.gen_range(0..=dim));
        let a = random_rows(&mut rng, na, dim, 3);
        let b = random_rows(&mut rng, nb, dim, 3);
        let span = |rows: &[Vec<i64>]| {
            let classes: Vec<H1Class> = rows.iter().cloned().map(H1Class).collect();
            lagrangian_span(&classes, &s).map_err(|e| e.to_string())
        };
        let (la, lb) = (span(&a)?, span(&b)?);
        let sum = la.sum(&lb).map_err(|e| e.to_string())?;
        let meet = la.intersection(&lb).map_err(|e| e.to_string())?;
        ensure!(
            sum.rank + meet.rank == la.rank + lb.rank,
            "case {case}: {} + {} != {} + {}",
            sum.rank,
            meet.rank,
            la.rank,
            lb.rank
        );
    }
    Ok(())
}

pub fn round_trip() -> Check {
    let mut docs: Vec<DiagramDocument> = bundled::corpus().into_iter().map(|(_, d)| d).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..50 {
        let d = random_relative(&mut rng);
        let m = random_moves(&mut rng, &d, 8, 0.5);
        docs.push(DiagramDocument::new(apply_moves(&d, &m).unwrap()));
        let c = random_closed(&mut rng);
        docs.push(DiagramDocument::new(c));
    }
    for doc in &docs {
        let text = serialize_diagram(doc);
        let parsed = parse_diagram(&text).map_err(|e| e.to_string())?;
        ensure!(
            parsed.document == *doc,
            "parse(serialize(x)) != x for\n{text}"
        );
        ensure!(
            serialize_diagram(&parsed.document) == text,
            "serialize(parse(t)) != t for\n{text}"
        );
        ensure!(
            parsed.warnings.is_empty(),
            "warnings on canonical text: {:?}",
            parsed.warnings
        );
    }

    let first = run(&["paper-demo"])?;
    let second = run(&["paper-demo"])?;
    ensure!(
        first.status.success(),
        "paper-demo exited {:?}",
        first.status.code()
    );
    ensure!(
        first.stdout == second.stdout,
        "paper-demo output differs between runs"
    );
    Ok(())
}
