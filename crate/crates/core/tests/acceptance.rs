//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.
//! All comparisons are exact unless a tolerance is named below.

use std::sync::Arc;
use std::time::{Duration, Instant};

use isoprod::branching::{enumerate_generating_vectors, genus_from_signature, sheet_count_genus, UnmixedPair};
use isoprod::catalog::{cached_witness, load_table, main_descriptor, reproduce_row, verify_main_theorem, verify_main_with, MainInputs, Stage};
use isoprod::chartab::{character_table, CharTable};
use isoprod::cli::run;
use isoprod::fundgroup::{abelianization, h1_surface, smith_normal_form, FpGroup, IntMatrix};
use isoprod::parity::{run_theta_suite, ParityError, ThetaSuiteInputs, Verdict};
use isoprod::permgroup::{construct_group, parse_perm_list, GroupLabel};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MAIN_BUDGET: Duration = Duration::from_secs(120);
const CHARTAB_BUDGET: Duration = Duration::from_secs(10);
const TABLE_BUDGET: Duration = Duration::from_secs(15 * 60);
/// Only used for the floating-point cross-check of orthogonality; the
/// exact check is separate.
const FLOAT_TOL: f64 = 1e-9;
const UNIMODULAR_TRIALS: usize = 100;
const SNF_SEED: u64 = 0x5eed_0001;
const GENVEC_LIMIT: usize = 300;

struct Outcome {
    failures: Vec<String>,
}

impl Outcome {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(what());
        }
    }
}

fn criterion(name: &str, body: impl FnOnce(&mut Outcome)) -> bool {
    let start = Instant::now();
    let mut out = Outcome { failures: Vec::new() };
    body(&mut out);
    let secs = start.elapsed().as_secs_f64();
    if out.failures.is_empty() {
        println!("PASS {name} ({secs:.2}s)");
        true
    } else {
        println!("FAIL {name} ({secs:.2}s)");
        for f in &out.failures {
            println!("    {f}");
        }
        false
    }
}

fn sorted(mut v: Vec<u64>) -> Vec<u64> {
    v.sort_unstable();
    v
}

fn ac1(o: &mut Outcome) {
    let start = Instant::now();
    let r = verify_main_theorem();
    let elapsed = start.elapsed();
    o.check(r.passed(), || format!("pipeline halted at {:?}", r.failed_stage));
    o.check(r.g1 == Some(4) && r.g2 == Some(21), || format!("genera {:?}, {:?}", r.g1, r.g2));
    o.check(r.chi == Some(1) && r.k_squared == Some(8), || format!("chi {:?}, K^2 {:?}", r.chi, r.k_squared));
    o.check(r.coefficients == Some((1, 2)), || format!("coefficients {:?}", r.coefficients));
    let factors = r.h1.as_ref().map(|h| (h.free_rank, h.torsion.iter().map(|t| t.to_string()).collect::<Vec<_>>()));
    o.check(factors == Some((0, vec!["3".into(), "3".into(), "15".into()])), || format!("H1 factors {factors:?}"));
    o.check(r.torsion_order == Some(135), || format!("torsion {:?}", r.torsion_order));
    o.check(r.verdict == Verdict::Odd, || format!("verdict {}", r.verdict));
    o.check(elapsed < MAIN_BUDGET, || format!("took {elapsed:?}"));
}

/// Literature degree multisets where they are standard.
fn known_degrees(label: &GroupLabel) -> Option<Vec<u64>> {
    Some(match label {
        GroupLabel::A5 => vec![1, 3, 3, 4, 5],
        GroupLabel::S5 => vec![1, 1, 4, 4, 5, 5, 6],
        GroupLabel::Sl25 => vec![1, 2, 2, 3, 3, 4, 4, 5, 6],
        GroupLabel::S4 => vec![1, 1, 2, 3, 3],
        GroupLabel::S4xZ2 => vec![1, 1, 1, 1, 2, 2, 3, 3, 3, 3],
        GroupLabel::D4xZ2 => vec![1, 1, 1, 1, 1, 1, 1, 1, 2, 2],
        _ => return None,
    })
}

/// Floating-point row and column orthogonality, independent of the exact
/// verifier inside the table.
fn float_orthogonality(t: &CharTable) -> Result<(), String> {
    let f = t.field();
    let n = t.class_count();
    let order = t.group_order() as f64;
    let sizes = t.classes().sizes();
    let vals: Vec<Vec<(f64, f64)>> = t.irreducibles().iter().map(|c| c.values().iter().map(|v| f.to_complex(v)).collect()).collect();
    let dot = |a: (f64, f64), b: (f64, f64)| (a.0 * b.0 + a.1 * b.1, a.1 * b.0 - a.0 * b.1);
    for i in 0..n {
        for j in 0..n {
            let (mut re, mut im) = (0.0, 0.0);
            for k in 0..n {
                let (r, s) = dot(vals[i][k], vals[j][k]);
                re += sizes[k] as f64 * r;
                im += sizes[k] as f64 * s;
            }
            let expect = if i == j { order } else { 0.0 };
            if (re - expect).abs() > FLOAT_TOL * order || im.abs() > FLOAT_TOL * order {
                return Err(format!("rows {i},{j}: {re}+{im}i"));
            }
            let (mut re, mut im) = (0.0, 0.0);
            for row in &vals {
                let (r, s) = dot(row[i], row[j]);
                re += r;
                im += s;
            }
            let expect = if i == j { order / sizes[i] as f64 } else { 0.0 };
            if (re - expect).abs() > FLOAT_TOL * order || im.abs() > FLOAT_TOL * order {
                return Err(format!("columns {i},{j}: {re}+{im}i"));
            }
        }
    }
    Ok(())
}

fn ac2(o: &mut Outcome) {
    for label in GroupLabel::catalog() {
        let g = construct_group(&label).unwrap();
        if g.order() > 120 {
            continue;
        }
        let start = Instant::now();
        let t = match character_table(&g) {
            Ok(t) => t,
            Err(e) => {
                o.failures.push(format!("{label}: {e}"));
                continue;
            }
        };
        let elapsed = start.elapsed();
        let degrees = sorted(t.degrees());
        o.check(t.verify().is_ok(), || format!("{label}: exact verification failed"));
        o.check(t.class_count() == t.classes().len(), || format!("{label}: {} characters for {} classes", t.class_count(), t.classes().len()));
        o.check(degrees.iter().map(|d| d * d).sum::<u64>() == g.order() as u64, || format!("{label}: sum of squares of {degrees:?}"));
        let ab = abelianization(&FpGroup::from_cayley_graph(&g)).torsion_order();
        let linear = degrees.iter().filter(|&&d| d == 1).count() as u128;
        o.check(linear == ab, || format!("{label}: {linear} linear characters but |G/G'| = {ab}"));
        if let Some(known) = known_degrees(&label) {
            o.check(degrees == known, || format!("{label}: degrees {degrees:?}, expected {known:?}"));
        }
        if let Err(e) = float_orthogonality(&t) {
            o.failures.push(format!("{label}: {e}"));
        }
        o.check(elapsed < CHARTAB_BUDGET, || format!("{label}: took {elapsed:?}"));
    }
}

fn ac3(o: &mut Outcome) {
    let ev = match run_theta_suite(&ThetaSuiteInputs::standard().unwrap()) {
        Ok(ev) => ev,
        Err(e) => return o.failures.push(e.to_string()),
    };
    for n in 1..=8 {
        let id = format!("check-{n}");
        let rec = ev.iter().find(|e| e.id == id);
        o.check(rec.is_some_and(|r| r.passed == Some(true)), || format!("{id} missing or failed"));
    }
    // direct recomputation of the three reproductions
    let a5g = construct_group(&GroupLabel::A5).unwrap();
    let t = character_table(&a5g).unwrap();
    let f = t.field();
    let perm = t.permutation_character(&a5g).unwrap();
    let idx = |d: i64| (0..t.class_count()).filter(|&i| t.degree_of(t.character(i)) == Some(d)).collect::<Vec<_>>();
    let (v, u, threes) = (idx(4)[0], idx(5)[0], idx(3));
    let chi_v = t.character(v);
    let from_perm: Vec<_> = perm.values().iter().map(|x| f.sub(x, &f.one())).collect();
    o.check(chi_v.values() == from_perm.as_slice(), || "degree-4 irreducible is not perm - 1".into());
    let sym = t.sym_square(chi_v).unwrap();
    let sym_vals: Vec<i64> = sym.values().iter().map(|x| f.as_rational(x).unwrap().to_integer().try_into().unwrap()).collect();
    let mut ms = sym_vals.clone();
    ms.sort_unstable();
    o.check(ms == [0, 0, 1, 2, 10], || format!("sym^2 values {sym_vals:?}"));
    let printed = [10, 1, 2, 0, 0];
    let is_perm = {
        let mut a = printed.to_vec();
        a.sort_unstable();
        a == ms
    };
    o.check(is_perm, || "printed tuple is not a rearrangement".into());
    let mut want = vec![0u64; t.class_count()];
    want[0] = 1;
    want[v] = 1;
    want[u] = 1;
    o.check(t.decompose(&sym).unwrap() == want, || "sym^2 != triv + V + U".into());
    let prod = t.decompose(&t.tensor(t.character(threes[0]), t.character(threes[1])).unwrap()).unwrap();
    let mut vu = vec![0u64; t.class_count()];
    vu[v] = 1;
    vu[u] = 1;
    o.check(prod == vu && prod[0] == 0, || format!("3 x 3' = {prod:?}"));
    let alt = t.alt_square(t.character(threes[0])).unwrap();
    o.check(t.degree_of(&alt) == Some(3), || format!("alt^2 degree {:?}", t.degree_of(&alt)));
}

fn ac4(o: &mut Outcome) {
    let start = Instant::now();
    for row in load_table() {
        let r = match reproduce_row(row.index) {
            Ok(r) => r,
            Err(e) => {
                o.failures.push(format!("row {}: {e}", row.index));
                continue;
            }
        };
        o.check(r.skipped.is_none(), || format!("row {}: skipped ({:?})", r.row, r.skipped));
        o.check(r.matches.free, || format!("row {}: no free witness", r.row));
        o.check(r.matches.d, || format!("row {}: D {:?} vs {}", r.row, r.d_computed, r.d_expected));
        o.check(r.matches.h1, || format!("row {}: H1 {:?} vs {}", r.row, r.h1_computed, r.h1_expected));
        o.check(r.matches.parity_consistent, || format!("row {}: parity contradicts annotation", r.row));
        let verdict = r.parity.as_ref().map(|p| p.verdict);
        let expect_odd = row.index == 1;
        o.check((verdict == Some(Verdict::Odd)) == expect_odd, || format!("row {}: verdict {verdict:?}", r.row));
    }
    let elapsed = start.elapsed();
    o.check(elapsed < TABLE_BUDGET, || format!("took {elapsed:?}"));
}

fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut m = IntMatrix::identity(n);
    for _ in 0..6 {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let mut e = IntMatrix::identity(n);
        if i == j {
            e.set(i, i, (-1).into());
        } else if rng.gen_bool(0.3) {
            e.set(i, i, 0.into());
            e.set(j, j, 0.into());
            e.set(i, j, 1.into());
            e.set(j, i, 1.into());
        } else {
            e.set(i, j, rng.gen_range(-4i64..=4).into());
        }
        m = m.mul(&e);
    }
    m
}

fn ac5(o: &mut Outcome) {
    // (a) genus against sheet counting
    let mut certified = 0;
    for row in load_table() {
        let g = Arc::new(construct_group(&row.group).unwrap());
        if g.order() > 60 {
            continue;
        }
        for sig in [&row.sig1, &row.sig2] {
            for v in enumerate_generating_vectors(&g, sig, GENVEC_LIMIT) {
                certified += 1;
                let rh = genus_from_signature(g.order() as u64, v.signature()).unwrap();
                o.check(sheet_count_genus(&v) == rh as i64, || format!("{}: genus mismatch for {}", row.group, v.to_cycle_string()));
            }
        }
    }
    o.check(certified > 0, || "no vectors enumerated".into());

    // (b) Smith form under random unimodular transformations
    let mut rng = ChaCha8Rng::seed_from_u64(SNF_SEED);
    let mut matrices: Vec<IntMatrix> = vec![
        IntMatrix::from_rows(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]),
        IntMatrix::from_rows(&[vec![3, 0], vec![0, 5], vec![0, 0]]),
        IntMatrix::from_rows(&[vec![0, 0, 0, 0]]),
    ];
    for _ in 0..5 {
        let (r, c) = (rng.gen_range(1..6), rng.gen_range(1..6));
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-12..=12)).collect()).collect();
        matrices.push(IntMatrix::from_rows(&rows));
    }
    for m in &matrices {
        let base = smith_normal_form(m).invariants;
        for _ in 0..UNIMODULAR_TRIALS {
            let moved = random_unimodular(&mut rng, m.rows()).mul(m).mul(&random_unimodular(&mut rng, m.cols()));
            let got = smith_normal_form(&moved).invariants;
            if got != base {
                o.failures.push(format!("invariants {got} vs {base}"));
                break;
            }
        }
    }

    // (c) H1 under swap and conjugation
    let mut pairs = vec![main_descriptor().unwrap().certify().unwrap()];
    pairs.extend((2..=12).map(|k| cached_witness(k).unwrap().certify().unwrap()));
    for pair in pairs {
        let h1 = h1_surface(&pair).unwrap();
        o.check(h1_surface(&pair.swapped()).unwrap() == h1, || format!("{}: swap changes H1", pair.group().label()));
        let n = pair.group().order();
        for h in [1, n / 3, n - 1] {
            let conj = UnmixedPair::new(pair.gv1.conjugated(h), pair.gv2.conjugated(h)).unwrap();
            o.check(h1_surface(&conj).unwrap() == h1, || format!("{}: conjugation by {h} changes H1", pair.group().label()));
        }
    }

    // (d) negative controls halt where documented
    let mut wrong_rep = ThetaSuiteInputs::standard().unwrap();
    wrong_rep.replace_chi_v_by_degree = Some(5);
    let r = run_theta_suite(&wrong_rep);
    o.check(matches!(r, Err(ParityError::ThetaCheck { check: 3, .. })), || format!("degree-5 control: {r:?}"));
    let mut wrong_ext = ThetaSuiteInputs::standard().unwrap();
    wrong_ext.extension = construct_group(&GroupLabel::S5).unwrap();
    let r = run_theta_suite(&wrong_ext);
    o.check(matches!(r, Err(ParityError::ThetaCheck { check: 4, .. })), || format!("S5 control: {r:?}"));
    let mut bad = MainInputs::standard();
    bad.pair.gv1 = parse_perm_list("(1,2)(3,4) (2,1,3,4,5) (1,2,3,4,5)", 5).unwrap();
    o.check(verify_main_with(&bad).failed_stage == Some(Stage::Tuple1), || "mutated tuple not caught at tuple1".into());
}

fn ac6(o: &mut Outcome) {
    let pair = concat!(env!("CARGO_MANIFEST_DIR"), "/data/main.pair");
    let commands: Vec<Vec<&str>> = vec![
        vec!["verify-main"],
        vec!["table"],
        vec!["table", "--row", "8"],
        vec!["chartab", "A5"],
        vec!["chartab", "SL(2,5)"],
        vec!["h1", "--pair", pair],
        vec!["parity", "--pair", pair],
        vec!["genvec", "A5", "[2,5,5]", "--limit", "20"],
    ];
    for cmd in commands {
        for format in ["json", "text"] {
            let args: Vec<&str> = ["isoprod", "--format", format].into_iter().chain(cmd.iter().copied()).collect();
            let (a, b) = (run(args.clone()), run(args.clone()));
            o.check(a.code == 0, || format!("{cmd:?} {format}: exit {}", a.code));
            o.check(a == b, || format!("{cmd:?} {format}: output differs between runs"));
            if format == "json" {
                o.check(serde_json::from_str::<serde_json::Value>(&a.stdout).is_ok(), || format!("{cmd:?}: invalid JSON"));
            }
        }
    }
}

fn main() {
    let results = [
        criterion("1 verify-main end to end", ac1),
        criterion("2 character tables of catalog groups", ac2),
        criterion("3 symmetric/tensor/exterior reproductions", ac3),
        criterion("4 classification table rows 1-12", ac4),
        criterion("5 oracle equivalences and negative controls", ac5),
        criterion("6 deterministic output", ac6),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!("{} of {} criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
