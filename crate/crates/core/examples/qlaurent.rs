//! Laurent polynomials in q and the (q-1) basis used for class polynomials.

use adlv::qlaurent::QLaurent;
use num_bigint::BigInt;

fn main() -> adlv::Result<()> {
    // the two paths of s1 s0 s1 in affine A1 have weights q^2 and (q-1) q^2
    let a = QLaurent::path_weight(0, 2);
    let b = QLaurent::path_weight(1, 2);
    let sum = &a + &b;
    println!("{a}  +  {b}  =  {sum}");
    assert_eq!(sum, QLaurent::monomial(3));

    let f = &QLaurent::path_weight(2, 1) * &QLaurent::monomial(-1);
    let basis = f.to_qm1_basis()?;
    println!(
        "{f} in the (q-1) basis: {basis}; nonnegative: {}",
        basis.is_nonnegative()
    );
    println!(
        "degree {:?}, leading coefficient {:?}",
        f.degree(),
        f.leading_coefficient()
    );
    println!(
        "value at q = 4: {}",
        f.evaluate(&BigInt::from(4)).expect("defined")
    );
    println!(
        "q^-2 + 1 has no (q-1) expansion: {}",
        (QLaurent::monomial(-2) + QLaurent::one())
            .to_qm1_basis()
            .is_err()
    );
    Ok(())
}
