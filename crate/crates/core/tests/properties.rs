//! Property tests over the transform invariants.

use proptest::prelude::*;

use fasthaar::io::{read_signal_csv, write_signal_csv};
use fasthaar::{
    analyze, decompose, fast_analysis, merge_polyphase, pointwise_error_db, reconstruct,
    split_polyphase, synthesize, Mode, Signal, DB_FLOOR,
};

fn signal_from_pairs(pairs: Vec<(f64, f64)>) -> Signal {
    let mut samples = Vec::with_capacity(pairs.len() * 2);
    for (a, b) in pairs {
        samples.push(a);
        samples.push(b);
    }
    Signal::new(samples).unwrap()
}

/// Non-empty even-length signals with samples in +/-1e3.
fn even_signal() -> impl Strategy<Value = Signal> {
    prop::collection::vec((-1e3f64..1e3, -1e3f64..1e3), 1..=128).prop_map(signal_from_pairs)
}

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::Direct), Just(Mode::Fast)]
}

fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()))
}

proptest! {
    #[test]
    fn split_then_merge_is_the_identity(x in even_signal()) {
        let (even, odd) = split_polyphase(&x).unwrap();
        prop_assert_eq!(even.len(), x.len() / 2);
        prop_assert_eq!(odd.len(), x.len() / 2);
        let merged = merge_polyphase(&even, &odd).unwrap();
        prop_assert_eq!(merged, x);
    }

    #[test]
    fn both_paths_compute_the_same_bands(x in even_signal()) {
        let tol = 1e-12 * x.max_abs().max(1.0);
        let direct = analyze(&x, Mode::Direct, None).unwrap();
        let fast = analyze(&x, Mode::Fast, None).unwrap();
        prop_assert!(max_abs_diff(direct.approx().samples(), fast.approx().samples()) <= tol);
        prop_assert!(max_abs_diff(direct.detail().samples(), fast.detail().samples()) <= tol);
    }

    #[test]
    fn every_mode_pair_reconstructs(x in even_signal(), am in mode(), sm in mode()) {
        let tol = 1e-12 * x.max_abs().max(1.0);
        let bands = analyze(&x, am, None).unwrap();
        let back = synthesize(&bands, sm, None).unwrap();
        prop_assert!(max_abs_diff(back.samples(), x.samples()) <= tol);
    }

    #[test]
    fn analysis_is_linear(
        pairs in prop::collection::vec(
            ((-1e3f64..1e3, -1e3f64..1e3), (-1e3f64..1e3, -1e3f64..1e3)),
            1..=64
        ),
        alpha in -8.0f64..8.0,
        beta in -8.0f64..8.0,
        m in mode(),
    ) {
        let (x_pairs, y_pairs): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
        let x = signal_from_pairs(x_pairs);
        let y = signal_from_pairs(y_pairs);
        let combined = Signal::new(
            x.samples().iter().zip(y.samples()).map(|(a, b)| alpha * a + beta * b).collect(),
        ).unwrap();

        let lhs = analyze(&combined, m, None).unwrap();
        let bx = analyze(&x, m, None).unwrap();
        let by = analyze(&y, m, None).unwrap();

        let scale = alpha.abs() * x.max_abs() + beta.abs() * y.max_abs();
        let tol = 1e-12 * scale.max(1.0);
        for (band_l, band_x, band_y) in [
            (lhs.approx(), bx.approx(), by.approx()),
            (lhs.detail(), bx.detail(), by.detail()),
        ] {
            for ((l, sx), sy) in band_l.samples().iter().zip(band_x.samples()).zip(band_y.samples()) {
                prop_assert!((l - (alpha * sx + beta * sy)).abs() <= tol);
            }
        }
    }

    #[test]
    fn energy_is_conserved(x in even_signal(), m in mode()) {
        let bands = analyze(&x, m, None).unwrap();
        let tol = 1e-10 * x.energy().max(1.0);
        prop_assert!((bands.energy() - x.energy()).abs() <= tol);
    }

    #[test]
    fn constant_signals_have_bitwise_zero_detail(
        value in -1e6f64..1e6,
        half in 1usize..=64,
    ) {
        let x = Signal::from_fn(2 * half, |_| value).unwrap();
        let bands = fast_analysis(&x, None).unwrap();
        for d in bands.detail().samples() {
            prop_assert_eq!(d.to_bits(), 0.0f64.to_bits());
        }
    }

    #[test]
    fn deep_trees_roundtrip_with_level_scaled_tolerance(
        levels in 1usize..=6,
        base in prop::collection::vec(-1e3f64..1e3, 1..=8),
        dm in mode(),
        rm in mode(),
    ) {
        let len = base.len() << levels;
        let x = Signal::from_fn(len, |i| base[i % base.len()] * (1.0 + i as f64 * 0.01)).unwrap();
        let tree = decompose(&x, levels, dm, None).unwrap();
        prop_assert_eq!(tree.total_coefficients(), len);
        let back = reconstruct(&tree, rm, None).unwrap();
        let tol = levels as f64 * 1e-12 * x.max_abs().max(1.0);
        prop_assert!(max_abs_diff(back.samples(), x.samples()) <= tol);
    }

    #[test]
    fn csv_roundtrip_is_bitwise(
        samples in prop::collection::vec(
            any::<f64>().prop_filter("finite", |v| v.is_finite()),
            0..=64,
        ),
    ) {
        let x = Signal::new(samples).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("x.csv");
        write_signal_csv(&x, &path).unwrap();
        let back = read_signal_csv(&path).unwrap();
        prop_assert_eq!(back.len(), x.len());
        for (a, b) in x.samples().iter().zip(back.samples()) {
            prop_assert_eq!(a.to_bits(), b.to_bits());
        }
    }

    #[test]
    fn error_db_is_floored_and_monotone(
        oracle in prop::collection::vec(-1e3f64..1e3, 1..=64),
        deltas in prop::collection::vec(-1e-3f64..1e-3, 1..=64),
    ) {
        let len = oracle.len().min(deltas.len());
        let oracle = Signal::new(oracle[..len].to_vec()).unwrap();
        let candidate = Signal::new(
            oracle.samples().iter().zip(&deltas[..len]).map(|(o, d)| o + d).collect(),
        ).unwrap();
        let report = pointwise_error_db(&candidate, &oracle).unwrap();

        let mut ranked: Vec<(f64, f64)> = candidate
            .samples()
            .iter()
            .zip(oracle.samples())
            .map(|(c, o)| (c - o).abs())
            .zip(report.pointwise_db.iter().copied())
            .collect();
        ranked.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
        for pair in ranked.windows(2) {
            prop_assert!(pair[0].1 <= pair[1].1, "larger difference reported smaller dB");
        }
        for (diff, db) in ranked {
            prop_assert!(db >= DB_FLOOR);
            if diff == 0.0 {
                prop_assert_eq!(db, DB_FLOOR);
            }
        }
        prop_assert_eq!(
            report.max_db,
            report.pointwise_db.iter().fold(DB_FLOOR, |m, v| m.max(*v))
        );
    }
}
