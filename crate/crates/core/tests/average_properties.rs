use cubetwist::averages::{
    gv_probe, partial_sums, scan, sum_central_values, sum_range, tail_check, zk_vanishing_stats,
    CentralValues, Filter, OnDemand, ValueTable,
};
use cubetwist::{Error, LOptions};

fn table(xmax: u64) -> ValueTable {
    ValueTable::compute(xmax, &LOptions::default()).unwrap()
}

#[test]
fn sums_are_additive() {
    let t = table(300);
    let (a, ca) = sum_range(3, 100, Filter::AllCubefree, &t).unwrap();
    let (b, cb) = sum_range(101, 300, Filter::AllCubefree, &t).unwrap();
    let (c, cc) = sum_range(3, 300, Filter::AllCubefree, &t).unwrap();
    assert!((a + b - c).abs() < 1e-9);
    assert_eq!(ca + cb, cc);
    let direct: f64 = (3..=10)
        .filter(|&d| Filter::AllCubefree.matches(d))
        .map(|d| t.estimate(d).unwrap().value)
        .sum();
    assert!((sum_range(3, 10, Filter::AllCubefree, &t).unwrap().0 - direct).abs() < 1e-12);
}

#[test]
fn small_ranges_give_empty_tables() {
    assert!(sum_central_values(2, Filter::AllCubefree, &OnDemand::default()).unwrap().is_empty());
}

#[test]
fn class_filters_partition_the_sum() {
    let t = table(400);
    let whole = sum_range(1, 400, Filter::AllCubefree, &t).unwrap().0;
    let parts: f64 = (0..5)
        .map(|c| sum_range(1, 400, Filter::Class { c, p: 5 }, &t).unwrap().0)
        .sum();
    assert!((whole - parts).abs() < 1e-9);
    assert!(matches!(
        sum_range(1, 10, Filter::Class { c: 1, p: 3 }, &t),
        Err(Error::InvalidArgument(_))
    ));
}

#[test]
fn partial_sums_are_deterministic_and_nondecreasing() {
    let t = table(500);
    let a = sum_central_values(500, Filter::AllCubefree, &t).unwrap();
    let b = sum_central_values(500, Filter::AllCubefree, &OnDemand::default()).unwrap();
    assert_eq!(a, b);
    assert!(a.windows(2).all(|w| w[1].sum >= w[0].sum - 1e-9 && w[1].x > w[0].x));
    assert_eq!(a.last().unwrap().x, 500);
    assert!(partial_sums(&[10, 5], Filter::AllCubefree, &t).is_err());
}

#[test]
fn missing_values_are_reported() {
    let t = table(10);
    assert_eq!(sum_range(1, 20, Filter::AllCubefree, &t), Err(Error::MissingValue(11)));
}

#[test]
fn zk_guard_and_counts() {
    let t = table(100);
    let z = zk_vanishing_stats(100, &t).unwrap();
    assert!(z.full.fraction.is_finite());
    assert_eq!(z.full.even + z.full.odd + z.full.undetermined, t.len() as u64);
    assert_eq!(z.half.x, 50);
}

#[test]
fn gv_probe_small() {
    let rows = gv_probe(50, &OnDemand::default()).unwrap();
    assert!(!rows.is_empty());
    assert_eq!(rows.last().unwrap().x, 32);
    assert!(rows.iter().all(|r| r.sum >= 0.0));
}

#[test]
fn tail_checks() {
    let od = OnDemand::default();
    assert_eq!(tail_check(24, 1.0, 1000, &od).unwrap_err(), Error::NotCubeFree(24));
    assert!(tail_check(2, 0.9, 1000, &od).is_err());
    let t = tail_check(1, 1.0, 1_000_000, &od).unwrap();
    assert!(t.decay_flag && t.partial_sum > 0.0);
    let single = tail_check(10, 1.0, 5, &od).unwrap();
    assert_eq!(single.blocks.len(), 1);
    let l10 = od.estimate(10).unwrap().value.abs();
    assert!((single.partial_sum - l10 / 10.0).abs() < 1e-12);
}

#[test]
fn scan_respects_filters() {
    let rows = scan(60, Filter::Primes, &OnDemand::default()).unwrap();
    assert_eq!(rows.iter().map(|e| e.d).collect::<Vec<_>>(), vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
}
