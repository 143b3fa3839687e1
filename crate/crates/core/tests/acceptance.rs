//! Acceptance criteria, one PASS/FAIL line each. Printed values are typed in
//! here by hand rather than read from the library constants.

use std::io::Write;
use std::time::{Duration, Instant};

use hyperball::coxbraid::{deflation_check, verify_presentations};
use hyperball::exactnum::{Rat, RealQuad};
use hyperball::geometry::batches::enumerate_batch_table;
use hyperball::geometry::claims::{self, BatchStore};
use hyperball::geometry::{cosh_sq_dist, sinh_sq_dist_to_mirror};
use hyperball::isometries::checks;
use hyperball::lattice::{a4_graph, enumerate_by_norm, gram_from_graph, GramLattice};
use hyperball::model::{Model, PolygonCase, TWELVE_GON};
use hyperball::report::SuiteReport;
use hyperball::suites::{verify_field, verify_geometry_properties, verify_lattice, verify_model};
use serde_json::Value;

const SEED: u64 = 20_240_917;

/// Printed mirror counts of the batch table around `c`, row by row.
const PRINTED_ROWS: [u64; 11] = [120, 1, 2160, 3, 6480, 172800, 4320, 6480, 518400, 2160, 6];
const PRINTED_TOTAL: u64 = 712_930;

struct Criterion {
    n: usize,
    name: &'static str,
    ok: bool,
    detail: String,
    elapsed: Duration,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, Duration) {
    let t = Instant::now();
    let v = f();
    (v, t.elapsed())
}

fn rq(p: i64, q: i64, r: i64, s: i64) -> RealQuad {
    RealQuad::frac(p, q, r, s)
}

fn passes(r: &SuiteReport, ids: &[&str]) -> bool {
    ids.iter().all(|id| r.check(id).is_some_and(|c| c.passed()))
}

fn witness<'a>(r: &'a SuiteReport, id: &str) -> &'a Value {
    &r.check(id).unwrap_or_else(|| panic!("missing check {id}")).witness
}

fn failures(rs: &[&SuiteReport]) -> String {
    let f: Vec<String> = rs.iter().flat_map(|r| r.failures()).map(|c| c.id.clone()).collect();
    if f.is_empty() {
        String::new()
    } else {
        format!(" failing: {}", f.join(", "))
    }
}

fn batch_table_reproduction() -> Criterion {
    let (rows, elapsed) = timed(|| (0..4).flat_map(enumerate_batch_table).collect::<Vec<_>>());
    let counts: Vec<u64> = rows.iter().map(|(_, r)| r.len() as u64).collect();
    let total: u64 = counts.iter().sum();
    assert_eq!(PRINTED_ROWS.iter().sum::<u64>(), PRINTED_TOTAL, "printed rows add up to the printed total");
    // Known discrepancy: the (6,0,0) row of batch 3 has three times the
    // printed count. Every other row matches; anything else is a regression.
    let mut expected = PRINTED_ROWS;
    expected[7] = 19_440;
    assert_eq!(counts, expected, "row counts changed");
    let mismatched: Vec<String> = counts
        .iter()
        .zip(PRINTED_ROWS)
        .enumerate()
        .filter(|(_, (got, want))| **got != *want)
        .map(|(k, (got, want))| format!("row {k} computed {got} printed {want}"))
        .collect();
    Criterion {
        n: 1,
        name: "batch-table-reproduction",
        ok: mismatched.is_empty() && total == PRINTED_TOTAL && elapsed < Duration::from_secs(120),
        detail: format!("total {total} (printed {PRINTED_TOTAL}); {}", mismatched.join("; ")),
        elapsed,
    }
}

fn oracle_agreement(store: &BatchStore) -> Criterion {
    let (r, elapsed) = timed(|| claims::verify_batch_table(store));
    let ids: Vec<String> = (0..4).map(|n| format!("oracle_agreement_b{n}")).collect();
    let ok = ids.iter().all(|id| r.check(id).is_some_and(|c| c.passed()));
    let sizes: Vec<String> = ids.iter().map(|id| witness(&r, id)["generic"].to_string()).collect();
    Criterion {
        n: 2,
        name: "batch-oracle-agreement",
        ok,
        detail: format!("classes per batch {}{}", sizes.join("/"), failures(&[&r])),
        elapsed,
    }
}

fn l4_counts() -> Criterion {
    let ((c3, c6), elapsed) = timed(|| {
        let l4 = GramLattice::from_gram(gram_from_graph(&a4_graph()));
        (enumerate_by_norm(&l4, &Rat::int(3)).unwrap().len(), enumerate_by_norm(&l4, &Rat::int(6)).unwrap().len())
    });
    Criterion {
        n: 3,
        name: "l4-shell-counts",
        ok: (c3, c6) == (240, 2160) && elapsed < Duration::from_secs(5),
        detail: format!("norm 3: {c3}, norm 6: {c6}"),
        elapsed,
    }
}

fn distance_table() -> Criterion {
    let (r, elapsed) = timed(claims::verify_distance_table);
    let m = Model::get();
    let q = m.polygon(PolygonCase::Quadrilateral);
    let ta = m.polygon(PolygonCase::TriangleA);
    let cosh = |a: &[_], b: &[_]| cosh_sq_dist(a, b).unwrap().value;
    // recomputed here against the displayed forms
    let own = [
        (cosh(&m.p_inf, &m.tau), rq(1, 2, 2, 3)),
        (cosh(&m.p_inf, &m.m), rq(1303, 1034, 1676, 1551)),
        (cosh(&m.c, &m.rho), rq(5, 4, 13, 18)),
        (cosh(&m.c, &q.m_prime), rq(1994, 1319, 1152, 1319)),
        (cosh(&m.p_inf, &ta.m_prime), rq(4996, 3585, 256, 239)),
        (cosh(&m.c, &q.vertices[2]), rq(443, 359, 256, 359)),
    ];
    let own_ok = own.iter().all(|(a, b)| a == b);
    let forms = r.checks.iter().filter(|c| c.id.starts_with("d(")).count();
    let radicands = r.checks.iter().filter(|c| c.id.starts_with("radicand")).count();
    Criterion {
        n: 4,
        name: "critical-ball-cover",
        ok: r.passed() && own_ok && forms == 12 && radicands > 0,
        detail: format!("{forms} closed forms exact, {radicands} radicands < 10/3{}", failures(&[&r])),
        elapsed,
    }
}

fn polygon_classification(store: &BatchStore) -> Criterion {
    let (r, elapsed) = timed(|| claims::verify_polygon_mirrors(store));
    let counts: Vec<String> = ["triangle_sA", "triangle_sB", "quadrilateral_s0"]
        .iter()
        .map(|p| witness(&r, &format!("{p}_non_miss_count"))["found"].to_string())
        .collect();
    let scanned = witness(&r, "triangle_sA_non_miss_count")["mirrors_scanned"].clone();
    Criterion {
        n: 5,
        name: "polygons-miss-mirrors",
        ok: r.passed() && counts == ["40", "40", "41"] && elapsed < Duration::from_secs(600),
        detail: format!("non-miss {} over {scanned} mirrors{}", counts.join("/"), failures(&[&r])),
        elapsed,
    }
}

fn nearest_rho(store: &BatchStore) -> Criterion {
    let (r, elapsed) = timed(|| claims::verify_nearest_rho(store));
    let m = Model::get();
    let target = rq(-1, 12, 1, 18);
    let twelve_gon_ok =
        TWELVE_GON.iter().all(|&l| sinh_sq_dist_to_mirror(&m.rho, &m.root(l)).unwrap().value == target);
    let achievers = witness(&r, "achieved_by_twelve_gon")["achievers"].as_u64().unwrap_or(0);
    Criterion {
        n: 6,
        name: "mirrors-near-rho",
        ok: r.passed() && twelve_gon_ok && achievers == 12,
        detail: format!("min sinh^2 {} by {achievers} mirrors{}", witness(&r, "minimum_sinh_sq")["sinh_sq"], failures(&[&r])),
        elapsed,
    }
}

fn nearest_tau(store: &BatchStore) -> Criterion {
    let (r, elapsed) = timed(|| claims::verify_nearest_tau(store));
    let nearest = witness(&r, "nearest_are_the_26")["nearest"].clone();
    let through = witness(&r, "no_mirror_through_tau")["through"].clone();
    Criterion {
        n: 7,
        name: "mirrors-near-tau",
        ok: r.passed() && nearest == 26 && through == 0,
        detail: format!("nearest {nearest}, through tau {through}{}", failures(&[&r])),
        elapsed,
    }
}

fn special_words() -> Criterion {
    let ((a, b), elapsed) = timed(|| (checks::verify_special_words(), checks::verify_sigma_stabilizer()));
    let ok = passes(
        &a,
        &[
            "increasing_products_independent_of_j",
            "decreasing_products_independent_of_j",
            "delta_a4_squared_equals_scaled_id",
            "increasing_rotation_pi_over_6",
            "delta_s1_s11_rotation_pi",
            "sixth_powers_equal",
        ],
    )
        && passes(&b, &["first_word_order_12", "second_word_order_2", "conjugation_inverts", "dihedral_group_order_24"])
        && a.passed()
        && b.passed();
    Criterion {
        n: 8,
        name: "special-words-in-triflections",
        ok,
        detail: format!("{} + {} identities{}", a.checks.len(), b.checks.len(), failures(&[&a, &b])),
        elapsed,
    }
}

fn conjugations_and_relators() -> Criterion {
    let ((t, p), elapsed) = timed(|| (checks::verify_conjugation_tables(), verify_presentations()));
    let ok = t.passed()
        && t.checks.len() == 32
        && passes(
            &p,
            &["stabilizer_in_triflections", "product_relation_scalar_e_pi_i_3", "sixth_power_relation_exact"],
        )
        && p.passed();
    Criterion {
        n: 9,
        name: "diagram-automorphisms",
        ok,
        detail: format!(
            "{} conjugations; product relation {}{}",
            t.checks.len(),
            witness(&p, "product_relation_scalar_e_pi_i_3")["outcome"],
            failures(&[&t, &p])
        ),
        elapsed,
    }
}

fn deflation() -> Criterion {
    let (r, elapsed) = timed(deflation_check);
    let rank = witness(&r, "conjugate_translations_rank_11")["rank"].clone();
    Criterion {
        n: 10,
        name: "deflation",
        ok: r.passed() && rank == 11 && elapsed < Duration::from_secs(1),
        detail: format!("rank {rank}{}", failures(&[&r])),
        elapsed,
    }
}

fn lattice_structure() -> Criterion {
    let ((l, m), elapsed) = timed(|| (verify_lattice(), verify_model()));
    let ok = passes(
        &l,
        &[
            "theta_dual_l4",
            "theta_dual_hyperbolic_cell",
            "theta_dual_cell_plus_three_l4",
            "plane_graph_radical_rank_12",
            "twelve_gon_nullity_2",
            "l4_real_form_even_unimodular_rank_8",
        ],
    ) && passes(&m, &["theta_dual_l", "theta_dual_l_dm", "signature_l", "signature_l_dm"]);
    Criterion {
        n: 11,
        name: "lattice-structure",
        ok,
        detail: format!("signatures {} and {}{}", witness(&m, "signature_l")["signature"], witness(&m, "signature_l_dm")["signature"], failures(&[&l, &m])),
        elapsed,
    }
}

fn c_basis() -> Criterion {
    let (m, elapsed) = timed(verify_model);
    Criterion {
        n: 12,
        name: "c-basis",
        ok: passes(&m, &["c_basis_gram_matches_block_matrix", "characterization_two_sided_containment", "generators_congruent_mod_theta"]),
        detail: format!("block Gram and membership characterization{}", failures(&[&m])),
        elapsed,
    }
}

fn sigma_point() -> Criterion {
    let (r, elapsed) = timed(|| claims::verify_sigma(&Rat::new(1, 2)));
    let t = witness(&r, "found_t")["t"].as_str().map(str::to_string);
    Criterion {
        n: 13,
        name: "mirrors-near-sigma",
        ok: r.passed() && passes(&r, &["nearest_four_mirrors", "eight_images_closer"]) && t.is_some(),
        detail: format!("t = {}{}", t.unwrap_or_default(), failures(&[&r])),
        elapsed,
    }
}

fn properties() -> Criterion {
    let ((f, g, l), elapsed) = timed(|| (verify_field(SEED, 1000), verify_geometry_properties(SEED, 1000), verify_lattice()));
    let cases = witness(&g, "distances_ignore_scalars")["cases"].as_u64().unwrap_or(0);
    let triangles = witness(&g, "classification_matches_float_oracle")["conclusive"].as_u64().unwrap_or(0);
    let seeded = witness(&f, "randomized_axioms")["seed"] == SEED && witness(&g, "distances_ignore_scalars")["seed"] == SEED;
    Criterion {
        n: 14,
        name: "property-suites",
        ok: f.passed() && g.passed() && passes(&l, &["l4_shells_closed_under_units"]) && cases >= 1000 && triangles >= 100 && seeded,
        detail: format!("seed {SEED}: {cases} scalar cases, {triangles} triangles{}", failures(&[&f, &g])),
        elapsed,
    }
}

#[test]
fn acceptance_criteria() {
    let store = BatchStore::shared();
    let results = vec![
        batch_table_reproduction(),
        oracle_agreement(store),
        l4_counts(),
        distance_table(),
        polygon_classification(store),
        nearest_rho(store),
        nearest_tau(store),
        special_words(),
        conjugations_and_relators(),
        deflation(),
        lattice_structure(),
        c_basis(),
        sigma_point(),
        properties(),
    ];
    // written to the stdout handle rather than through println!, so that the
    // lines show up even when the harness captures test output
    let mut out = std::io::stdout().lock();
    writeln!(out, "\n== acceptance criteria").unwrap();
    for c in &results {
        writeln!(
            out,
            "{} {:>2} {:<30} {:>8.2}s  {}",
            if c.ok { "PASS" } else { "FAIL" },
            c.n,
            c.name,
            c.elapsed.as_secs_f64(),
            c.detail
        )
        .unwrap();
    }
    drop(out);
    // The printed batch-table row count is the one unattainable criterion;
    // its exact shape is pinned above. Everything else must pass.
    let unexpected: Vec<&str> = results.iter().filter(|c| !c.ok && c.n != 1).map(|c| c.name).collect();
    assert!(unexpected.is_empty(), "failing criteria: {unexpected:?}");
    assert!(!results[0].ok, "batch-table counts now match the printed table; update the notes");
}
