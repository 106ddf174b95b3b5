use deligne::arith::{Poly, Rat, RatFunc};
use deligne::diagrams::{crossing, cup_cap, gram_det, hom_basis, DiagElement, Family, Object};
use proptest::prelude::*;

fn gl_words() -> Vec<Object> {
    ["", "+-", "-+", "++--", "+-+-", "--++"]
        .iter()
        .map(|w| Object::parse(Family::Gl, w).unwrap())
        .collect()
}

fn o_objects() -> Vec<Object> {
    (0..=4).step_by(2).map(Object::o).collect()
}

/// A linear combination picked from `Hom(a, b)` by the given indices.
fn element(a: &Object, b: &Object, picks: &[(usize, i64)]) -> DiagElement {
    let basis = hom_basis(a, b).unwrap();
    let mut e = DiagElement::zero(a.clone(), b.clone());
    for &(i, c) in picks {
        let d = &basis[i % basis.len()];
        e.add_term(d, RatFunc::constant(Rat::from_integer(c.into())))
            .unwrap();
    }
    e
}

fn picks() -> impl Strategy<Value = Vec<(usize, i64)>> {
    prop::collection::vec((0usize..1000, -3i64..=3), 1..4)
}

fn objects(pool: Vec<Object>, k: usize) -> impl Strategy<Value = Vec<Object>> {
    prop::collection::vec(prop::sample::select(pool), k)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn composition_is_associative(objs in objects(gl_words(), 4), p1 in picks(), p2 in picks(), p3 in picks()) {
        let f = element(&objs[0], &objs[1], &p1);
        let g = element(&objs[1], &objs[2], &p2);
        let h = element(&objs[2], &objs[3], &p3);
        prop_assert_eq!(h.compose(&g).unwrap().compose(&f).unwrap(), h.compose(&g.compose(&f).unwrap()).unwrap());
    }

    #[test]
    fn brauer_composition_is_associative(objs in objects(o_objects(), 4), p1 in picks(), p2 in picks(), p3 in picks()) {
        let f = element(&objs[0], &objs[1], &p1);
        let g = element(&objs[1], &objs[2], &p2);
        let h = element(&objs[2], &objs[3], &p3);
        prop_assert_eq!(h.compose(&g).unwrap().compose(&f).unwrap(), h.compose(&g.compose(&f).unwrap()).unwrap());
    }

    #[test]
    fn interchange_law(objs in objects(gl_words(), 6), p1 in picks(), p2 in picks(), p3 in picks(), p4 in picks()) {
        let f1 = element(&objs[0], &objs[1], &p1);
        let g1 = element(&objs[1], &objs[2], &p2);
        let f2 = element(&objs[3], &objs[4], &p3);
        let g2 = element(&objs[4], &objs[5], &p4);
        let lhs = g1.tensor(&g2).unwrap().compose(&f1.tensor(&f2).unwrap()).unwrap();
        let rhs = g1.compose(&f1).unwrap().tensor(&g2.compose(&f2).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn trace_is_symmetric(objs in objects(o_objects(), 2), p1 in picks(), p2 in picks()) {
        let f = element(&objs[0], &objs[1], &p1);
        let g = element(&objs[1], &objs[0], &p2);
        prop_assert_eq!(f.compose(&g).unwrap().closure_trace().unwrap(), g.compose(&f).unwrap().closure_trace().unwrap());
    }

    #[test]
    fn trace_is_multiplicative(objs in objects(gl_words(), 2), p1 in picks(), p2 in picks()) {
        let f = element(&objs[0], &objs[0], &p1);
        let g = element(&objs[1], &objs[1], &p2);
        let lhs = f.tensor(&g).unwrap().closure_trace().unwrap();
        prop_assert_eq!(lhs, &f.closure_trace().unwrap() * &g.closure_trace().unwrap());
    }
}

fn t() -> RatFunc {
    RatFunc::from(Poly::t())
}

#[test]
fn crossing_squares_to_identity() {
    let obj = Object::o(2);
    let s = DiagElement::from(crossing(&obj).unwrap());
    assert_eq!(s.compose(&s).unwrap(), DiagElement::identity(&obj));
}

#[test]
fn brauer_relations_in_b2() {
    let obj = Object::o(2);
    let e = DiagElement::from(cup_cap(&obj).unwrap());
    let s = DiagElement::from(crossing(&obj).unwrap());
    assert_eq!(e.compose(&e).unwrap(), e.scale(&t()));
    assert_eq!(s.compose(&e).unwrap(), e);
    assert_eq!(e.compose(&s).unwrap(), e);
}

/// Gram determinant of `End([2])` in Rep(O_t) by hand: basis id, s, e with
/// traces t², t, t and products s·s = id, s·e = e, e·e = t e.
#[test]
fn brauer_gram_by_hand() {
    let t2 = Poly::from_ints(&[0, 0, 1]);
    let t1 = Poly::t();
    let m = [
        [t2.clone(), t1.clone(), t1.clone()],
        [t1.clone(), t2.clone(), t1.clone()],
        [t1.clone(), t1.clone(), t2.clone()],
    ];
    let det = &(&(&m[0][0] * &(&(&m[1][1] * &m[2][2]) - &(&m[1][2] * &m[2][1])))
        - &(&m[0][1] * &(&(&m[1][0] * &m[2][2]) - &(&m[1][2] * &m[2][0]))))
        + &(&m[0][2] * &(&(&m[1][0] * &m[2][1]) - &(&m[1][1] * &m[2][0])));
    assert_eq!(gram_det(&Object::o(2)).unwrap().det, det);
}

#[test]
fn walled_gram_by_hand() {
    // End([1,1]): identity (trace t²) and e (trace t), with id·e = e and e·e = t e.
    let r = gram_det(&Object::gl(1, 1)).unwrap();
    let t2 = Poly::from_ints(&[0, 0, 1]);
    let expected = &(&t2 * &t2) - &(&Poly::t() * &Poly::t());
    assert_eq!(r.det, expected);
    assert!(r.roots.all_integer());
}
