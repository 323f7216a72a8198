use qbounds::oracle::golden::{
    evaluate, generate, lookup, parse, Kind, GOLDEN_FILE, GOLDEN_POINTS, GOLDEN_TOL,
};
use qbounds::oracle::Scheme;

const REGEN_VAR: &str = "QBOUNDS_REGEN_GOLDEN";

/// Set QBOUNDS_REGEN_GOLDEN=1 to rewrite data/golden.txt.
#[test]
fn golden_file_regenerates_bit_identically() {
    let fresh = generate().unwrap();
    if std::env::var_os(REGEN_VAR).is_some() {
        let path = concat!(env!("CARGO_MANIFEST_DIR"), "/data/golden.txt");
        std::fs::write(path, &fresh).unwrap();
        return;
    }
    assert_eq!(
        fresh, GOLDEN_FILE,
        "golden file is stale; rerun with {REGEN_VAR}=1"
    );
}

#[test]
fn golden_file_covers_every_point() {
    let records = parse(GOLDEN_FILE).unwrap();
    assert_eq!(records.len(), GOLDEN_POINTS.len());
    for (rec, point) in records.iter().zip(GOLDEN_POINTS.iter()) {
        assert_eq!(rec.point, *point);
        assert_eq!(rec.tol, GOLDEN_TOL);
        assert!(rec.err_est <= GOLDEN_TOL);
    }
}

#[test]
fn schemes_agree_on_golden_points() {
    for rec in parse(GOLDEN_FILE).unwrap() {
        let other = evaluate(&rec.point, Scheme::LocalBisection, rec.tol).unwrap();
        assert!(
            (other.value - rec.value).abs() <= 2.0 * rec.tol,
            "{:?}: {} vs {}",
            rec.point,
            other.value,
            rec.value
        );
    }
}

#[test]
fn golden_values_match_high_precision_references() {
    // 30-digit mpmath quadrature; Nuttall entries are unnormalized
    let cases = [
        (Kind::Nuttall, 2.0, 1.0, 1.0, 2.0, 0.530_146_908_083_965_7),
        (
            Kind::Nuttall,
            3.0,
            0.5,
            2.0,
            1.0,
            4.100_164_302_349_069 * std::f64::consts::SQRT_2,
        ),
        (
            Kind::Nuttall,
            1.2,
            0.7,
            1.5,
            1.0,
            0.644_458_740_342_503_5 * 1.5f64.powf(0.7),
        ),
        (Kind::Toronto, 2.0, 1.0, 1.0, 3.0, 0.706_343_312_541_188_5),
        (Kind::Toronto, 2.3, 0.8, 1.2, 2.0, 0.683_195_104_156_866_3),
        (Kind::Marcum, 1.0, 0.0, 1.0, 1.0, 0.732_879_803_796_820_2),
        (Kind::Marcum, 2.0, 1.0, 1.0, 1.0, 0.940_790_219_146_528_7),
    ];
    for (kind, m, n, x, y, want) in cases {
        let got = lookup(kind, m, n, x, y).unwrap();
        assert!(
            (got - want).abs() < 1e-12,
            "{kind:?} ({m},{n},{x},{y}): {got} vs {want}"
        );
    }
}
