use isoprod::catalog::{emit_witness_file, load_table, reproduce_row, verify_main_with, witness_blocks, MainInputs, Stage, WitnessSource, WITNESS_TEXT};
use isoprod::parity::Verdict;
use isoprod::permgroup::parse_perm_list;

#[test]
fn witness_cache_equals_fresh_search() {
    assert_eq!(emit_witness_file(), WITNESS_TEXT);
    let rows: Vec<usize> = witness_blocks(WITNESS_TEXT).into_iter().map(|(r, _)| r).collect();
    assert_eq!(rows, (2..=12).collect::<Vec<_>>());
    assert!(WITNESS_TEXT.contains("provenance: engine-derived"));
}

#[test]
fn row_1_is_odd_from_the_given_tuples() {
    let r = reproduce_row(1).unwrap();
    assert!(r.all_match(), "{r}");
    assert_eq!(r.witness_source, Some(WitnessSource::Paper));
    assert_eq!(r.parity.unwrap().verdict, Verdict::Odd);
}

#[test]
fn row_6_even_and_row_10_undetermined() {
    let r6 = reproduce_row(6).unwrap();
    assert!(r6.all_match());
    assert_eq!(r6.d_computed, Some(0));
    assert_eq!(r6.h1_computed.as_deref(), Some("(Z5)^3"));
    let p6 = r6.parity.unwrap();
    assert_eq!((p6.verdict, p6.coefficients), (Verdict::Even, Some((2, 2))));

    let r10 = reproduce_row(10).unwrap();
    assert!(r10.all_match());
    let p10 = r10.parity.unwrap();
    assert_eq!((p10.verdict, p10.coefficients), (Verdict::Undetermined, Some((1, 1))));
    assert!(p10.evidence.last().unwrap().detail.contains("even"));
}

#[test]
fn every_row_is_consistent() {
    for row in load_table() {
        let r = reproduce_row(row.index).unwrap();
        assert!(r.all_match(), "{r}");
        let v = r.parity.unwrap().verdict;
        match row.index {
            1 => assert_eq!(v, Verdict::Odd),
            6 | 7 | 8 | 11 => assert_eq!(v, Verdict::Even),
            _ => assert_eq!(v, Verdict::Undetermined),
        }
    }
    assert!(reproduce_row(13).is_err());
    assert!(reproduce_row(0).is_err());
}

#[test]
fn main_pipeline_negative_controls() {
    let mut bad = MainInputs::standard();
    bad.pair.gv1 = parse_perm_list("(1,2)(3,4) (2,1,3,4,5) (1,2,3,4,5)", 5).unwrap();
    assert_eq!(verify_main_with(&bad).failed_stage, Some(Stage::Tuple1));
    let mut same = MainInputs::standard();
    same.pair.gv2 = same.pair.gv1.clone();
    same.pair.sig2 = vec![2, 5, 5];
    let r = verify_main_with(&same);
    assert_eq!(r.failed_stage, Some(Stage::Freeness));
    assert!(r.to_string().contains("halted at stage freeness"));
}
