//! Scalars and matrices over the max-plus semiring.

use maxplus_walk::matrix::exact;
use maxplus_walk::MaxScalar;

fn main() {
    let x = MaxScalar::finite(3i64);
    let y = MaxScalar::finite(-2i64);
    let eps = MaxScalar::<i64>::eps();

    println!("{x} ⊕ {y} = {}", x.oplus(y));
    println!("{x} ⊗ {y} = {}", x.otimes(y));
    println!("{x} ⊕ ε = {}", x.oplus(eps));
    println!("{x} ⊗ ε = {}", x.otimes(eps));

    let a = exact(&[&[Some(0), Some(2)], &[None, Some(-1)]]);
    let b = exact(&[&[Some(1), None], &[Some(3), Some(0)]]);
    println!("A =\n{a}");
    println!("B =\n{b}");
    println!("A ⊕ B =\n{}", a.oplus(&b).unwrap());
    println!("A ⊗ B =\n{}", a.otimes(&b).unwrap());
    println!("A^⊗3 =\n{}", a.pow(3).unwrap());
    println!(
        "tropical determinant of A ⊗ B = {}",
        a.otimes(&b).unwrap().trop_det().unwrap()
    );

    // Float mode uses the same API.
    let f = a.map(|v| v.map(|x| x as f64 * 0.5));
    println!("A/2 in float mode =\n{f}");
}
