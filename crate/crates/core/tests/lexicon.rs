use deptypes_core::lexicon::*;
use deptypes_core::*;

fn t(a: &str) -> Type {
    Type::atom(a)
}

fn w(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

#[test]
fn counting() {
    let (w1, t1) = (w(&["de", "man"]), vec![t("LID"), t("N")]);
    let (w2, t2) = (w(&["de", "vrouw"]), vec![t("LID"), t("N")]);
    let lex = aggregate([(&w1[..], &t1[..]), (&w2[..], &t2[..])]);
    assert_eq!(lex.entries["de"][&t("LID")], 2);
    assert!(aggregate(core::iter::empty()).is_empty());
    let split = aggregate([(&w1[..], &t1[..])]).merge(aggregate([(&w2[..], &t2[..])]));
    assert_eq!(split, lex);
    let dist: f64 = lex.distribution("de").iter().map(|(_, p)| p).sum();
    assert!((dist - 1.0).abs() < 1e-12);
}

#[test]
fn histogram_and_curve() {
    let mut lex = Lexicon::default();
    lex.add("a", &t("N"), 3);
    lex.add("b", &t("N"), 1);
    lex.add("b", &t("NP"), 1);
    let h = ambiguity_histogram(&lex);
    assert_eq!(h.bins, [1, 1, 0, 0]);
    assert!((h.mean - 1.5).abs() < 1e-12);

    let samples = vec![vec![t("N"), t("N")], vec![t("NP")]];
    let c = sparsity_curve(&lex, &samples, &[1, 2, 5, 6]);
    assert_eq!((c[0].type_share, c[0].sample_share), (0.0, 0.0));
    assert_eq!((c[1].type_share, c[1].sample_share), (0.5, 0.5));
    assert_eq!((c[2].type_share, c[2].sample_share), (1.0, 1.0));
    assert!(c.windows(2).all(|p| p[0].type_share <= p[1].type_share));
}
