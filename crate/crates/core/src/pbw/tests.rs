use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::scalar::{ParamSpace, Scalar};

fn q_space() -> Arc<ParamSpace> {
    Arc::new(ParamSpace::single_q())
}

fn q(space: &ParamSpace) -> Scalar {
    space.param("q").unwrap()
}

fn plane() -> Arc<Presentation> {
    let s = q_space();
    quantum_plane(&s, &q(&s)).unwrap()
}

fn m2() -> Arc<Presentation> {
    let s = q_space();
    quantum_matrices(&s, 2, &q(&s)).unwrap()
}

fn m3() -> Arc<Presentation> {
    let s = q_space();
    quantum_matrices(&s, 3, &q(&s)).unwrap()
}

fn affine3_multi() -> Arc<Presentation> {
    let s = Arc::new(multiparam_space(3));
    let m = QMatrix::generic(&s, 3).unwrap();
    quantum_affine_multiparam(&s, &m).unwrap()
}

fn all_presets() -> Vec<Arc<Presentation>> {
    let s = q_space();
    let qq = q(&s);
    vec![plane(), quantum_affine(&s, 3, &qq).unwrap(), affine3_multi(), m2(), m3()]
}

fn gen(alg: &Arc<Presentation>, name: &str) -> NcPoly {
    NcPoly::generator_named(alg, name).unwrap()
}

#[test]
fn plane_straightening() {
    let a = plane();
    let s = a.space().clone();
    let yx = NcPoly::normal_form(&a, &["y", "x"]).unwrap();
    let xy = NcPoly::normal_form(&a, &["x", "y"]).unwrap();
    assert_eq!(yx, xy.scale(&q(&s).inv_monomial().unwrap()));
    assert_eq!(&gen(&a, "x") * &gen(&a, "y"), xy);
    assert_eq!(yx.to_string(), "q^-1*x*y");
}

#[test]
fn matrix_straightening() {
    let a = m2();
    let s = a.space().clone();
    let qq = q(&s);
    let lhs = NcPoly::normal_form(&a, &["X[2,2]", "X[1,1]"]).unwrap();
    let diag = NcPoly::normal_form(&a, &["X[1,1]", "X[2,2]"]).unwrap();
    let anti = NcPoly::normal_form(&a, &["X[1,2]", "X[2,1]"]).unwrap();
    let corr = &qq - &qq.inv_monomial().unwrap();
    assert_eq!(lhs, &diag - &anti.scale(&corr));
    assert_eq!(NcPoly::normal_form(&a, &["X[2,1]", "X[1,2]"]).unwrap(), anti);
    // X11 X22 - X22 X11 = (q - q^-1) X12 X21
    let comm = gen(&a, "X[1,1]").commutator(&gen(&a, "X[2,2]")).unwrap();
    assert_eq!(comm, anti.scale(&corr));
}

#[test]
fn unknown_generator_rejected() {
    let a = plane();
    assert!(matches!(NcPoly::normal_form(&a, &["z"]), Err(PbwError::UnknownGenerator(_))));
}

#[test]
fn preset_shapes() {
    let a = plane();
    assert_eq!(a.ngens(), 2);
    assert_eq!(a.rules().count(), 1);
    let b = m2();
    assert_eq!(b.ngens(), 4);
    assert_eq!(b.rules().count(), 6);
    let s = Arc::new(multiparam_space(3));
    let trivial = QMatrix::trivial(3, s.len());
    let c = quantum_affine_multiparam(&s, &trivial).unwrap();
    for (_, r) in c.rules() {
        assert!(r.swap.is_one() && r.corrections.is_empty());
    }
}

#[test]
fn non_antisymmetric_matrix_rejected() {
    let s = Arc::new(multiparam_space(2));
    let q12 = s.param("q12").unwrap();
    let bad = vec![vec![s.one(), q12.clone()], vec![q12.clone(), s.one()]];
    assert!(matches!(QMatrix::new(bad), Err(PbwError::NonAntisymmetric(1, 2))));
    let bad_diag = vec![vec![q12.clone(), s.one()], vec![s.one(), s.one()]];
    assert!(matches!(QMatrix::new(bad_diag), Err(PbwError::NonAntisymmetric(1, 1))));
}

#[test]
fn relation_soundness_all_presets() {
    for a in all_presets() {
        for ((u, v), _) in a.rules() {
            assert!(a.relation_residual(u, v).is_zero(), "{}", a.describe_rule(u, v));
        }
    }
}

#[test]
fn quantum_matrix_relation_classes() {
    // the defining relations written out independently of the rule table
    let a = m3();
    let s = a.space().clone();
    let qq = q(&s);
    let diff = &qq - &qq.inv_monomial().unwrap();
    let x = |i: usize, j: usize| NcPoly::generator(&a, matrix_generator_index(3, i, j));
    for i in 1..=3 {
        for l in i + 1..=3 {
            for j in 1..=3 {
                for m in j + 1..=3 {
                    let (aa, b, c, d) = (x(i, j), x(i, m), x(l, j), x(l, m));
                    assert_eq!(&aa * &b, (&b * &aa).scale(&qq));
                    assert_eq!(&aa * &c, (&c * &aa).scale(&qq));
                    assert_eq!(&b * &d, (&d * &b).scale(&qq));
                    assert_eq!(&c * &d, (&d * &c).scale(&qq));
                    assert_eq!(&b * &c, &c * &b);
                    assert_eq!(&(&aa * &d) - &(&d * &aa), (&b * &c).scale(&diff));
                }
            }
        }
    }
}

#[test]
fn associativity_on_all_triples() {
    for a in all_presets() {
        let n = a.ngens();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    assert!(a.associator(x, y, z).is_zero(), "{} {} {}", x, y, z);
                }
            }
        }
    }
}

#[test]
fn normal_form_idempotent() {
    let a = m2();
    let p = NcPoly::normal_form(&a, &["X[2,2]", "X[2,1]", "X[1,2]", "X[1,1]"]).unwrap();
    let again = NcPoly::from_terms(&a, p.terms().map(|(m, c)| (m.clone(), c.clone())));
    assert_eq!(p, again);
    let recomputed = p.terms().fold(NcPoly::zero(&a), |acc, (m, c)| &acc + &NcPoly::from_word(&a, &m.word()).scale(c));
    assert_eq!(p, recomputed);
}

#[test]
fn basic_arithmetic() {
    let a = plane();
    let p = &gen(&a, "x") + &gen(&a, "y");
    let minus = p.scale(&Scalar::from_int(1, -1));
    assert!((&p + &minus).is_zero());
    let other = plane();
    // structurally equal presentations interoperate
    assert!(p.try_mul(&NcPoly::generator(&other, 0)).is_ok());
    let b = m2();
    assert!(matches!(p.try_mul(&NcPoly::one(&b)), Err(PbwError::PresentationMismatch)));
}

#[test]
fn counit_and_delta_are_homs() {
    let a = m2();
    let ground = Presentation::ground(a.space().clone());
    let images: Vec<NcPoly> =
        (0..4).map(|g| NcPoly::constant(&ground, Scalar::from_int(1, if g == 0 || g == 3 { 1 } else { 0 }))).collect();
    assert!(AlgebraHom::new(&a, &ground, images).unwrap().verify());

    let aa = tensor_square(&a).unwrap();
    let x = |i: usize, j: usize| NcPoly::generator(&a, matrix_generator_index(2, i, j));
    let mut images = Vec::new();
    for i in 1..=2 {
        for j in 1..=2 {
            let t1 = aa.pure(&x(i, 1), &x(1, j)).unwrap();
            let t2 = aa.pure(&x(i, 2), &x(2, j)).unwrap();
            images.push(&t1 + &t2);
        }
    }
    assert!(AlgebraHom::new(&a, aa.algebra(), images).unwrap().verify());
}

#[test]
fn swap_is_not_a_hom() {
    let a = plane();
    let h = AlgebraHom::positional(&a, &a, &[1, 0]).unwrap();
    assert!(!h.verify());
    let ys = vec![gen(&a, "y"), gen(&a, "x")];
    assert!(matches!(AlgebraHom::verified(&a, &a, ys), Err(PbwError::NotAHomomorphism(_))));
    assert!(AlgebraHom::identity(&a).verify());
}

#[test]
fn hom_image_count_checked() {
    let a = plane();
    assert!(matches!(AlgebraHom::new(&a, &a, vec![gen(&a, "x")]), Err(PbwError::ImageCount { expected: 2, got: 1 })));
}

#[test]
fn tensor_of_affine_line_is_commutative() {
    let s = q_space();
    let line = quantum_affine(&s, 1, &q(&s)).unwrap();
    let t = tensor_square(&line).unwrap();
    assert_eq!(t.algebra().ngens(), 2);
    assert_eq!(t.algebra().generators(), ["x1@1", "x1@2"]);
    for (_, r) in t.algebra().rules() {
        assert!(r.swap.is_one() && r.corrections.is_empty());
    }
}

#[test]
fn tensor_factors_commute_and_keep_relations() {
    let a = plane();
    let t = tensor_square(&a).unwrap();
    let x1 = t.pure(&gen(&a, "x"), &NcPoly::one(&a)).unwrap();
    let y2 = t.pure(&NcPoly::one(&a), &gen(&a, "y")).unwrap();
    assert_eq!(&x1 * &y2, &y2 * &x1);
    let alg = t.algebra();
    for ((u, v), _) in alg.rules() {
        assert!(alg.relation_residual(u, v).is_zero());
    }
    assert!(t.left_inclusion().verify());
    assert!(t.right_inclusion().verify());
    assert!(alg.check_overlaps().is_ok());
}

#[test]
fn quotients_of_m2() {
    let a = m2();
    let ix = |i: usize, j: usize| matrix_generator_index(2, i, j);
    let q1 = quotient_by_generators(&a, &[ix(1, 2), ix(2, 2)]).unwrap();
    assert_eq!(q1.algebra.generators(), ["X[1,1]", "X[2,1]"]);
    assert_eq!(q1.algebra.rules().count(), 1);
    assert!(q1.map.verify());
    for ((u, v), _) in q1.algebra.rules() {
        assert!(q1.algebra.relation_residual(u, v).is_zero());
    }

    assert!(matches!(quotient_by_generators(&a, &[ix(1, 1)]), Err(PbwError::ClosureViolation(_))));

    let id = quotient_by_generators(&a, &[]).unwrap();
    assert_eq!(*id.algebra, *a);
    let p = NcPoly::normal_form(&a, &["X[2,2]", "X[1,1]"]).unwrap();
    assert_eq!(id.lift(&id.map.apply(&p).unwrap()).unwrap(), p);
}

#[test]
fn quotient_map_is_a_projection() {
    let a = m2();
    let quo = quotient_by_generators(&a, &[matrix_generator_index(2, 1, 2), matrix_generator_index(2, 2, 2)]).unwrap();
    let p = &NcPoly::normal_form(&a, &["X[2,1]", "X[1,1]", "X[1,1]"]).unwrap()
        + &NcPoly::normal_form(&a, &["X[2,2]", "X[1,1]"]).unwrap();
    let once = quo.map.apply(&p).unwrap();
    let lifted = quo.lift(&once).unwrap();
    assert_eq!(quo.map.apply(&lifted).unwrap(), once);
    assert_eq!(quo.lift(&quo.map.apply(&lifted).unwrap()).unwrap(), lifted);
}

#[test]
fn json_round_trip() {
    for a in all_presets() {
        let text = a.to_json().to_string();
        let back = Presentation::from_json_str(&text).unwrap();
        assert_eq!(*back, *a);
    }
}

#[test]
fn json_rejects_garbage() {
    assert!(Presentation::from_json_str("{}").is_err());
    assert!(Presentation::from_json_str(r#"{"params":[],"generators":["x","x"],"rules":[]}"#).is_err());
    let ok = r#"{"params":["q"],"generators":["x","y"],
        "rules":[{"left":"y","right":"x","swap":"q^-1"}]}"#;
    assert!(Presentation::from_json_str(ok).is_ok());
    let non_unit = r#"{"params":["q"],"generators":["x","y"],
        "rules":[{"left":"y","right":"x","swap":"q + 1"}]}"#;
    assert!(matches!(Presentation::from_json_str(non_unit), Err(PbwError::NonUnitSwap(_, _))));
}

#[test]
fn preset_kind_names() {
    for k in ["quantum-plane", "quantum-affine", "quantum-affine-multiparam", "quantum-matrices"] {
        assert_eq!(k.parse::<PresetKind>().unwrap().to_string(), k);
    }
    assert!("frobnicate".parse::<PresetKind>().is_err());
}

fn word_strategy(ngens: usize, max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0..ngens, 0..=max_len)
}

fn poly_from_words(alg: &Arc<Presentation>, words: &[(i64, Vec<usize>)]) -> NcPoly {
    words.iter().fold(NcPoly::zero(alg), |acc, (c, w)| {
        &acc + &NcPoly::from_word(alg, w).scale(&Scalar::from_int(alg.nvars(), *c))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sampled_associativity(idx in 0usize..5, a in 0usize..9, b in 0usize..9, c in 0usize..9) {
        let alg = &all_presets()[idx];
        let n = alg.ngens();
        prop_assert!(alg.associator(a % n, b % n, c % n).is_zero());
    }

    #[test]
    fn word_products_associate(w1 in word_strategy(4, 3), w2 in word_strategy(4, 3), w3 in word_strategy(4, 3)) {
        let a = m2();
        let (p, r, s) = (NcPoly::from_word(&a, &w1), NcPoly::from_word(&a, &w2), NcPoly::from_word(&a, &w3));
        prop_assert_eq!(&(&p * &r) * &s, &p * &(&r * &s));
    }

    #[test]
    fn delta_is_multiplicative(
        w1 in prop::collection::vec((-2i64..3, word_strategy(4, 2)), 1..3),
        w2 in prop::collection::vec((-2i64..3, word_strategy(4, 2)), 1..3),
    ) {
        let a = m2();
        let aa = tensor_square(&a).unwrap();
        let x = |i: usize, j: usize| NcPoly::generator(&a, matrix_generator_index(2, i, j));
        let mut images = Vec::new();
        for i in 1..=2 {
            for j in 1..=2 {
                images.push(&aa.pure(&x(i, 1), &x(1, j)).unwrap() + &aa.pure(&x(i, 2), &x(2, j)).unwrap());
            }
        }
        let h = AlgebraHom::new(&a, aa.algebra(), images).unwrap();
        let p = poly_from_words(&a, &w1);
        let r = poly_from_words(&a, &w2);
        prop_assert_eq!(h.apply(&(&p * &r)).unwrap(), &h.apply(&p).unwrap() * &h.apply(&r).unwrap());
    }
}
