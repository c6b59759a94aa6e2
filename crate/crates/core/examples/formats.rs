//! Reading and writing matrices and coins in the text and JSON formats.

use maxplus_walk::io::{
    format_matrix_text, matrix_from_json, matrix_to_json, parse_coin, parse_matrix,
};
use maxplus_walk::walk::Coin;
use maxplus_walk::{Error, MaxMatrix};
use num_rational::Rational64;

fn main() -> Result<(), Error> {
    let m: MaxMatrix<i64> = parse_matrix("0 eps 3\n-1 2 eps\neps eps 0\n")?;
    print!("parsed:\n{}", format_matrix_text(&m));

    let json = matrix_to_json(&m);
    println!("as JSON: {json}");
    let back: MaxMatrix<i64> = matrix_from_json(&json)?;
    assert_eq!(back, m);

    let coin: Coin<i64> = parse_coin("a=1, b=2, c=-2, d=-1")?;
    println!("coin from pairs: {coin:?}");
    let coin: Coin<f64> = parse_coin(r#"{"a": 0.5, "b": 1.25, "c": -1, "d": 0}"#)?;
    println!("coin from JSON: {coin:?}");
    let coin: Coin<Rational64> = parse_coin("# exact rationals\na=1/2\nb=3\nc=-3\nd=1/3\n")?;
    println!("coin from lines: {coin:?}");

    match parse_coin::<i64>("a=1,b=2.5,c=0,d=0") {
        Err(e) => println!("rejected: {e}"),
        Ok(c) => println!("unexpectedly parsed {c:?}"),
    }
    Ok(())
}
