//! Maximum cycle mean (Karp), critical vertices and an eigenvector.

use maxplus_walk::matrix::exact;
use maxplus_walk::spectral::{
    critical_vertices, eigenvector, is_eigenpair, max_cycle_mean, max_cycle_mean_per_component,
};
use maxplus_walk::Error;

fn main() -> Result<(), Error> {
    let a = exact(&[
        &[Some(1), Some(4), None],
        &[Some(1), None, Some(0)],
        &[None, Some(2), Some(-1)],
    ]);
    println!("A =\n{a}");

    for (component, mean) in max_cycle_mean_per_component(&a)? {
        println!("component {component:?}: max cycle mean {mean}");
    }
    let lambda = max_cycle_mean(&a)?;
    println!("λ = {lambda}");
    println!("critical vertices: {:?}", critical_vertices(&a, lambda)?);

    let x = eigenvector(&a, lambda)?;
    let shown: Vec<String> = x.iter().map(|v| v.to_string()).collect();
    println!("x = [{}]", shown.join(", "));
    println!("A ⊗ x = λ ⊗ x: {}", is_eigenpair(&a, lambda, &x)?);
    Ok(())
}
