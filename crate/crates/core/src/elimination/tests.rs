use super::*;
use crate::ring::Ring;

fn f2(s: &str) -> LaurentPoly {
    LaurentPoly::parse(Ring::F2, s).unwrap()
}

fn f3(s: &str) -> LaurentPoly {
    LaurentPoly::parse(Ring::F3, s).unwrap()
}

#[test]
fn small_resultants() {
    assert_eq!(resultant(&f2("1 + X + Y"), &f2("X"), Var::X).unwrap(), f2("1 + Y"));
    assert_eq!(
        resultant(&f2("1 + X + Y"), &f2("1 + X + Y + X*Y"), Var::X).unwrap(),
        f2("Y + Y^2")
    );
    let f = f2("1 + X + Y");
    let h = f2("X^2 + Y^3 + X*Y");
    assert!(resultant(&f, &(&f * &h), Var::X).unwrap().is_zero());
    assert!(resultant(&f, &(&f * &h), Var::Y).unwrap().is_zero());
}

#[test]
fn resultant_of_constants_in_axis() {
    // deg_X g = 0: Res = g^deg_X f
    let r = resultant(&f3("X^2 + Y"), &f3("1 + Y"), Var::X).unwrap();
    assert_eq!(r, &f3("1 + Y") * &f3("1 + Y"));
    assert!(resultant(&f3("1 + Y"), &f3("1 + Y"), Var::X).unwrap().is_one());
}

#[test]
fn resultant_along_y() {
    // Res_Y(1+X+Y, Y) = 1+X up to sign
    let r = resultant(&f3("1 + X + Y"), &f3("Y"), Var::Y).unwrap();
    assert_eq!(r.make_monic(), f3("1 + X"));
    assert!(r.is_free_of(Var::Y));
}

#[test]
fn errors() {
    assert_eq!(
        resultant(&LaurentPoly::zero(Ring::F2), &f2("X"), Var::X),
        Err(Error::ZeroPolynomial)
    );
    assert!(resultant(&f2("X"), &f3("X"), Var::X).is_err());
    let z = LaurentPoly::parse(Ring::Z, "X").unwrap();
    assert_eq!(resultant(&z, &z, Var::X), Err(Error::NotAField(Ring::Z)));
}

#[test]
fn bezout_examples() {
    let fl = f2("1 + X + Y");
    let fs = f2("1 + X + Y + X*Y");
    let e = bezout_cofactors(&fl, &fs, Var::X).unwrap();
    assert!(e.identity_holds);
    assert!(!e.relation.is_zero());
    assert!(e.relation.is_free_of(Var::X));

    let e = bezout_cofactors(&f2("X"), &f2("Y"), Var::X).unwrap();
    assert_eq!(e.relation, f2("Y"));
    assert!(e.identity_holds);

    assert_eq!(
        bezout_cofactors(&fl, &fl, Var::X).unwrap_err(),
        Error::CommonFactor("X")
    );
}

#[test]
fn bezout_with_laurent_inputs() {
    let f = f3("X^-2*Y + X^-1 + Y^-1");
    let g = f3("1 + 2*X*Y^2 + X^3");
    for axis in [Var::X, Var::Y] {
        let e = bezout_cofactors(&f, &g, axis).unwrap();
        assert!(e.identity_holds, "{e}");
        assert!(e.relation.is_free_of(axis));
        assert!(!e.resultant.is_zero());
    }
}

#[test]
fn coprime_pairs() {
    let fl = f2("1 + X + Y");
    let cp = coprime_periodicity(&fl, &f2("1 + X")).unwrap();
    assert_eq!(cp.vertical_annihilator(), &f2("Y"));
    assert!(cp.horizontal_annihilator().is_free_of(Var::Y));
    // a monomial annihilator only allows the zero configuration
    assert_eq!(cp.periods(1000).unwrap().1, 1);

    let cp = coprime_periodicity(&fl, &f2("1 + X + Y + X*Y")).unwrap();
    assert!(!cp.vertical_annihilator().is_zero());
    assert!(!cp.horizontal_annihilator().is_zero());

    let g = &fl * &f2("1 + X^2*Y");
    assert!(matches!(
        coprime_periodicity(&fl, &g),
        Err(Error::CommonFactor(_))
    ));
    // a common factor free of X is caught by the Y elimination
    let a = &f2("1 + Y") * &f2("X + Y");
    let b = &f2("1 + Y") * &f2("1 + X");
    assert!(bezout_cofactors(&a, &b, Var::X).is_ok());
    assert_eq!(
        coprime_periodicity(&a, &b).unwrap_err(),
        Error::CommonFactor("Y")
    );
}

#[test]
fn periods_from_univariate_annihilators() {
    assert_eq!(univariate_period(&f2("1 + X^3"), Var::X, 100), Some(3));
    assert_eq!(univariate_period(&f2("X^-4 + X^-3 + X^-2"), Var::X, 100), Some(3));
    assert_eq!(univariate_period(&f2("Y^2 + Y^4"), Var::Y, 100), Some(2));
    assert_eq!(univariate_period(&f2("1 + X + Y"), Var::X, 100), None);
}

#[test]
fn gcds() {
    let fl = f2("1 + X + Y");
    let h = f2("1 + X*Y + Y^2");
    let g = poly_gcd(&(&fl * &h), &(&fl * &f2("1 + X^3"))).unwrap();
    assert_eq!(g, fl);
    assert!(poly_gcd(&fl, &f2("1 + X")).unwrap().is_one());
    let a = &f3("1 + Y") * &f3("X + 2*Y");
    let b = &f3("2 + 2*Y") * &f3("X^-1 + X");
    assert_eq!(poly_gcd(&a, &b).unwrap(), f3("1 + Y"));
    let ft = f2("1 + X^2 + Y^2 + X^2*Y^2");
    let prod = &(&f2("1 + X") * &f2("1 + Y")) * &f2("X + Y^3");
    assert_eq!(poly_gcd(&ft, &prod).unwrap(), f2("1 + X + Y + X*Y"));
}

#[test]
fn bareiss_matches_cofactor_expansion() {
    let p = 5;
    let u = |cs: &[u32]| UniPoly::from_coeffs(p, cs.to_vec());
    let m = vec![
        vec![u(&[1, 2]), u(&[0, 1]), u(&[3])],
        vec![u(&[]), u(&[4, 0, 1]), u(&[1, 1])],
        vec![u(&[2]), u(&[1]), u(&[0, 0, 3])],
    ];
    let cof = m[0][0].mul(&m[1][1].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][1])))
        .sub(&m[0][1].mul(&m[1][0].mul(&m[2][2]).sub(&m[1][2].mul(&m[2][0]))))
        .add(&m[0][2].mul(&m[1][0].mul(&m[2][1]).sub(&m[1][1].mul(&m[2][0]))));
    assert_eq!(bareiss_determinant(m, p), cof);
}
