//! Heaviest paths in a weighted digraph through the Kleene star.

use maxplus_walk::digraph::WeightedDigraph;
use maxplus_walk::matrix::exact;
use maxplus_walk::spectral::kleene_star;
use maxplus_walk::Error;

fn main() -> Result<(), Error> {
    // Edge i -> j carries weight A[i][j]; every circuit is non-positive.
    let a = exact(&[
        &[None, Some(3), None, Some(-2)],
        &[None, None, Some(-1), None],
        &[Some(-4), None, None, Some(2)],
        &[None, Some(-1), None, None],
    ]);
    let graph = WeightedDigraph::from_matrix(&a)?;
    println!(
        "{} vertices, {} edges",
        graph.vertex_count(),
        graph.edges().len()
    );
    println!("components: {:?}", graph.strongly_connected_components());

    let star = kleene_star(&a)?;
    println!("A* =\n{star}");
    println!("heaviest 0 -> 3 path weighs {}", star.get(0, 3));

    // A positive circuit has no finite star.
    let bad = exact(&[&[None, Some(2)], &[Some(-1), None]]);
    match kleene_star(&bad) {
        Err(e) => println!("[[ε, 2], [-1, ε]]: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}
