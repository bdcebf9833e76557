use octoclif::catalog::{build, CATALOG};
use octoclif::conformal::PointVerdict;
use octoclif::sampling::{random_directions, sample_points, SampleBox};
use octoclif::tolerance::NumericPolicy;

#[test]
fn catalog_verdicts_and_frame_classes_on_default_box() {
    let policy = NumericPolicy::default();
    for e in &CATALOG {
        let m = build(e.name, None).unwrap();
        let pts = sample_points(&SampleBox::default_for(m.dim()), 40, 3);
        let dirs = random_directions(m.dim(), 4, 3);
        let r = m.analyze(&pts, &dirs, &policy);
        let s = &r.summary;
        eprintln!(
            "{:18} conf={:?} class={:?} var={:?} norm_eq={:?} orth={:?} fre={:?} diff={:?}",
            e.name, s.conformal_everywhere, s.frame_class, s.frame_variation, s.max_residual_norm_eq,
            s.max_residual_orth, s.max_frame_re, s.max_diff_identity
        );
        let want = if e.expect_conformal { PointVerdict::Conformal } else { PointVerdict::NonConformal };
        assert!(r.points.iter().all(|p| p.verdict == want), "{}", e.name);
        assert_eq!(s.frame_class, e.expect_frame, "{}", e.name);
    }
}
