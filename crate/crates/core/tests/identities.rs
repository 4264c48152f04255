use finsym_core::identity::{
    check_identity, closed_form_enumerations, identity_cases, multiplicative_closed_form, rectangle_closed_form,
    ClosedFormFamily, IdentityName,
};
use finsym_core::partition::{partitions_of, Partition};

#[test]
fn every_identity_through_size_seven() {
    for name in IdentityName::ALL {
        let max = if name.is_signed() { 7 } else { 8 };
        for case in identity_cases(name, max).unwrap() {
            let o = check_identity(&case).unwrap();
            assert!(o.equal, "{} at {} {:?}: {} vs {}", name, case.nu, case.signature, o.lhs, o.rhs);
        }
    }
}

#[test]
fn rectangles_match_enumeration() {
    for a in 1..=12usize {
        for b in 1..=12 / a {
            let nu = Partition::rectangle(a, b);
            for family in ClosedFormFamily::ALL {
                let v = rectangle_closed_form(a, b, family);
                let [x, y] = closed_form_enumerations(&nu, family).unwrap();
                assert_eq!((&x, &y), (&v, &v), "{} on ({a}^{b})", family.key());
            }
        }
    }
}

#[test]
fn closed_forms_are_multiplicative() {
    for k in 0..=8 {
        for nu in partitions_of(k).unwrap() {
            for family in ClosedFormFamily::ALL {
                let [x, _] = closed_form_enumerations(&nu, family).unwrap();
                assert_eq!(x, multiplicative_closed_form(&nu, family), "{} at {nu}", family.key());
            }
        }
    }
}
