use sendov_core::geometry::distance_to_hull;
use sendov_core::verify::random_instance;
use sendov_core::{critical_report, Complex64, CriticalPointReport, SendovInstance};

#[test]
fn critical_points_lie_in_the_hull_of_the_zeros() {
    for (t, n) in [(0, 3), (1, 7), (2, 16), (3, 40)] {
        let inst = random_instance(0.6, n, 11, t).unwrap();
        let r = critical_report(&inst).unwrap();
        assert!(r.converged);
        assert_eq!(r.critical_points.len(), n - 1);
        let zeros = inst.zeros();
        for w in &r.critical_points {
            assert!(distance_to_hull(*w, &zeros) < 1e-9, "n = {n}, w = {w}");
        }
    }
}

#[test]
fn distance_is_rotation_invariant() {
    let inst = random_instance(0.4, 9, 5, 0).unwrap();
    let base = critical_report(&inst).unwrap();
    for k in 1..6 {
        let turn = Complex64::from_polar(1.0, 0.9 * k as f64);
        let zeros: Vec<Complex64> = inst.zeros().iter().map(|z| z * turn).collect();
        let rotated = CriticalPointReport::from_zeros(Complex64::new(inst.a(), 0.0) * turn, &zeros).unwrap();
        assert!((rotated.sendov_distance - base.sendov_distance).abs() < 1e-10);
    }
}

#[test]
fn sum_of_critical_points_matches_vieta() {
    // for monic P of degree n, sum of critical points = (n - 1)/n * sum of zeros
    let inst = random_instance(0.75, 12, 3, 9).unwrap();
    let r = critical_report(&inst).unwrap();
    let zs: Complex64 = inst.zeros().iter().sum();
    let ws: Complex64 = r.critical_points.iter().sum();
    assert!((ws - zs * (11.0 / 12.0)).norm() < 1e-10);
}

#[test]
fn instance_json_round_trip() {
    let inst = random_instance(0.25, 6, 1, 2).unwrap();
    let text = serde_json::to_string(&inst).unwrap();
    let back: SendovInstance = serde_json::from_str(&text).unwrap();
    assert_eq!(back, inst);
    assert_eq!(serde_json::to_string(&back).unwrap(), text);
    assert!(serde_json::from_str::<SendovInstance>(r#"{"a":0.5,"zeros":[[1.5,0.0]]}"#).is_err());
    assert!(serde_json::from_str::<SendovInstance>(r#"{"a":1.0,"zeros":[[0.5,0.0]]}"#).is_err());
}
