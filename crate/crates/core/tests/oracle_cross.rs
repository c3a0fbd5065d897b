use primgen_core::closure::in_normal_closure;
use primgen_core::construct::canonical_primitive;
use primgen_core::oracle::{brute_ncl, enumerate_basic_preimages, primitive_orbit_up_to};
use primgen_core::Word;

#[test]
fn orbit_members_are_conjugate_to_canonical_words() {
    let orbit = primitive_orbit_up_to(8).unwrap();
    // one class per coprime pair with |X| + |Y| <= 8
    assert_eq!(orbit.len(), 88);
    for m in &orbit.members {
        let e = m.exponent_pair();
        assert!(e.is_coprime(), "{m}");
        assert!(
            m.is_conjugate_to(&canonical_primitive(e.x, e.y).unwrap()),
            "{m}"
        );
    }
}

#[test]
fn preimages_up_to_sixty() {
    for x in 2..=60i64 {
        for y in (x + 1)..=60 {
            if primgen_core::word::gcd(x, y) == 1 {
                assert_eq!(enumerate_basic_preimages(x, y).unwrap().len(), 1);
            }
        }
    }
}

#[test]
fn brute_search_never_contradicts_membership() {
    for p in ["y", "xy"] {
        let p: Word = p.parse().unwrap();
        for r in Word::all_up_to(4) {
            let member = in_normal_closure(&r, &p).unwrap();
            if brute_ncl(&r, &p, 2).unwrap() {
                assert!(member, "{r} over {p}");
            }
            if !member {
                assert!(!brute_ncl(&r, &p, 3).unwrap());
            }
        }
    }
}
