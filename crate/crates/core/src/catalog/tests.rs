use super::*;
use crate::congruence::Verdict;
use crate::qpoly::UPoly;

fn run(id: &str, n: i64, t: Trunc) -> VerificationReport {
    verify_family(family(id).unwrap(), &Case::n(n), &Params::new(), t).unwrap()
}

fn bracket(n: usize) -> RatFun {
    RatFun::from_upoly(UPoly::from_ints(&vec![1; n]))
}

#[test]
fn t11_small() {
    let r = run("T1.1-full", 5, Trunc::Full);
    assert!(r.passed(), "{:?}", r.parts);
    let r = run("T1.1-full", 3, Trunc::Full);
    assert_eq!(r.verdict, Verdict::SkippedConstraint);
}

#[test]
fn t11_at_one_is_one() {
    let f = family("T1.1-full").unwrap();
    let s = build_truncated_sum(f, &Case::n(1), &Params::new(), Trunc::Full).unwrap();
    assert!(s.sub(&RatFun::one()).is_zero());
    let r = closed_form_rhs(f, &Case::n(1), &Params::new(), Trunc::Full).unwrap();
    assert!(r.sub(&RatFun::one()).is_zero());
}

#[test]
fn t11_rhs_at_five() {
    let f = family("T1.1-full").unwrap();
    let r = closed_form_rhs(f, &Case::n(5), &Params::new(), Trunc::Full).unwrap();
    let want = RatFun::q_power(-2).mul(&bracket(5)).neg();
    assert!(r.sub(&want).is_zero());
}

#[test]
fn t44_rhs_at_three() {
    let f = family("T4.4").unwrap();
    let r = closed_form_rhs(f, &Case::n(3), &Params::new(), Trunc::Full).unwrap();
    let want = RatFun::q_power(-2).mul(&bracket(3));
    assert!(r.sub(&want).is_zero());
}

#[test]
fn t410_and_remark_at_five() {
    let f = family("T4.10").unwrap();
    let t = f.truncs[0];
    assert!(run("T4.10", 5, t).passed());
    assert!(t410_exponent_swap(5, &Params::new()).unwrap().passed());
}

#[test]
fn t12_numerator_divisible_by_bracket() {
    let r = run("T1.2-full", 3, Trunc::Full);
    assert!(r.passed(), "{:?}", r.parts);
}

#[test]
fn registry_is_complete() {
    let ids = [
        "T1.1-full", "T1.1-half", "T1.2-full", "T1.2-half", "T1.3-full", "T1.3-half",
        "T1.4-full", "T1.4-half", "L3.1", "L3.2", "T4.1", "EQ4.B2", "T4.2", "EQ4.C2", "T4.3",
        "T4.4", "T4.5", "C4.4bc", "T4.6", "T4.7", "C4.3-div1", "C4.3-div2", "T4.8", "T4.9",
        "T4.10", "C4.5-strange1", "T4.D", "C4.D-refine", "T4.A", "C4.A-x", "C4.A-dnr", "C5.1a",
        "C5.1b", "C5.2", "C5.3", "C5.4", "C5.5", "C5.GZ", "C5.GZ-general", "C-J2-full",
        "C-Guo4-7.1",
    ];
    for id in ids {
        assert!(family(id).is_ok(), "{}", id);
    }
    let mut seen = std::collections::BTreeSet::new();
    for f in families() {
        assert!(seen.insert(f.id), "duplicate {}", f.id);
    }
    assert_eq!(family("C5.2").unwrap().pieces.len(), 3);
    for id in ["C5.3", "C5.4", "C5.5", "T4.D", "T4.A"] {
        assert_eq!(family(id).unwrap().pieces.len(), 2, "{}", id);
    }
    for id in ["S1.2", "S1.3", "S4.3-p3mod4", "S4.8-ds", "S4.9-ds", "S5.Dwork"] {
        assert!(supercong::supercongruence(id).is_ok());
    }
    for id in ["B5.1", "B5.2", "B5.3", "B5.4"] {
        assert!(supercong::verify_binomial_congruence(id, 0).unwrap().passed());
    }
}

#[test]
fn t49_printed_modulus_fails() {
    // the modulus with roots a = q^{±n} instead of q^{±(d-1)n}
    let f = family("T4.9").unwrap();
    let case = Case::ndr(5, 3, 1);
    let p = f.complete_params(&Params::new());
    let piece = &f.pieces[0];
    let m = (piece.upper)(&case, f.truncs[0]);
    let build = |p: &Params| -> crate::error::Result<Vec<QProduct>> {
        let lhs: Vec<QProduct> = (0..=m).map(|k| (piece.term)(&case, p, k)).collect();
        Ok(difference(lhs, &(piece.rhs)(&case, p, m)))
    };
    let md = Modulus::bracket(5).with_one_minus("a", 5).with_minus_qn("a", 5);
    let (parts, _) = check_factored(&build, &p, &md).unwrap();
    assert!(parts.iter().any(|x| !x.passed()));
    assert!(verify_family(f, &case, &Params::new(), f.truncs[0]).unwrap().passed());
}

#[test]
fn binomial_q_version_at_two() {
    let r = supercong::verify_binomial_congruence("C5.1a", 2).unwrap();
    assert!(r.passed());
    assert_eq!(r.status, Status::Conjecture);
}

#[test]
fn supercongruence_examples() {
    for id in ["S1.2", "S1.3"] {
        assert!(supercong::verify_supercongruence(id, 5, 1, 0).unwrap().passed());
    }
    assert!(supercong::verify_supercongruence("S4.8-ds", 7, 1, 3).unwrap().passed());
    assert!(supercong::verify_supercongruence("S4.9-ds", 5, 1, 3).unwrap().passed());
    let r = supercong::verify_supercongruence("S4.3-p3mod4", 5, 1, 0).unwrap();
    assert_eq!(r.verdict, Verdict::SkippedConstraint);
    assert!(supercong::intermediate_terms_witness(50).is_some());
}

#[test]
fn series_and_finite_identities() {
    assert!(identities::verify_series("sum-6k1", &Params::new(), 20).unwrap().passed());
    assert!(identities::verify_finite("q-saalschutz", 3).unwrap().passed());
}
