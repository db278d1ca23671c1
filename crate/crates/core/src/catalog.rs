//! Curated graph blocks for building certified families.
//!
//! Small blocks are classical named graphs; the high-girth blocks are cyclic
//! voltage lifts found by seeded search (see `examples/lift_hunt.rs`) and
//! frozen here as voltage assignments. Girths of every entry are re-verified
//! by the test suite, so a corrupted table cannot go unnoticed.

use crate::error::{Error, Result};
use crate::graph::{named, FiniteGraph};

/// Voltages over Z_9 on the edges of the 126-vertex girth-12 graph, producing
/// a 1134-vertex cubic graph of girth 14.
/// Found by `lift_hunt --base twelve-cage --modulus 9 --target 14 --seed 2`.
const GIRTH14_M9_VOLTAGES: [u32; 189] = [
    1, 7, 1, 4, 7, 4, 2, 2, 0, 1, 8, 1, 3, 2, 6, 3, 1, 0, 6, 4, 5, 3, 0, 1, 2, 8, 0, 5, 5, 3, 8,
    5, 6, 8, 5, 8, 1, 5, 6, 7, 3, 4, 6, 2, 5, 6, 3, 5, 5, 8, 0, 2, 6, 7, 6, 5, 0, 7, 5, 1, 2, 2,
    6, 5, 0, 0, 8, 1, 6, 0, 8, 6, 2, 4, 8, 8, 3, 1, 4, 5, 3, 7, 7, 8, 0, 6, 0, 0, 7, 8, 3, 0, 1,
    8, 0, 7, 5, 2, 0, 2, 4, 7, 2, 4, 6, 0, 4, 8, 2, 4, 0, 5, 1, 4, 5, 4, 1, 5, 1, 8, 3, 2, 5, 7,
    6, 7, 1, 3, 4, 0, 1, 0, 7, 0, 6, 7, 7, 0, 7, 0, 4, 0, 1, 4, 8, 6, 6, 4, 7, 0, 7, 0, 0, 4, 3,
    2, 5, 0, 0, 6, 2, 4, 7, 0, 8, 3, 4, 7, 6, 5, 0, 6, 7, 1, 5, 5, 5, 3, 4, 5, 2, 8, 5, 1, 4, 4,
    5, 1, 4,
];

/// Cubic graph on 1134 vertices with girth 14.
pub fn girth14_block() -> FiniteGraph {
    named::twelve_cage()
        .cyclic_lift(9, &GIRTH14_M9_VOLTAGES)
        .expect("recorded girth-14 lift")
}

/// Looks up a catalog block by name.
pub fn by_name(name: &str) -> Result<FiniteGraph> {
    Ok(match name {
        "k4" => named::complete(4),
        "petersen" => named::petersen(),
        "heawood" => named::heawood(),
        "pappus" => named::pappus(),
        "desargues" => named::desargues(),
        "mcgee" => named::mcgee(),
        "tutte-coxeter" => named::tutte_coxeter(),
        "foster" => named::foster(),
        "twelve-cage" => named::twelve_cage(),
        "girth14" => girth14_block(),
        other => {
            return Err(Error::InvalidInput { what: format!("unknown catalog block: {other}") })
        }
    })
}

/// All catalog names, with (vertex count, girth) for documentation.
pub fn entries() -> Vec<(&'static str, usize, &'static str)> {
    vec![
        ("k4", 4, "3"),
        ("petersen", 10, "5"),
        ("heawood", 14, "6"),
        ("pappus", 18, "6"),
        ("desargues", 20, "6"),
        ("mcgee", 24, "7"),
        ("tutte-coxeter", 30, "8"),
        ("foster", 90, "10"),
        ("twelve-cage", 126, "12"),
        ("girth14", 1134, "14"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Girth;

    #[test]
    fn recorded_lift_has_girth_14() {
        let g = girth14_block();
        assert_eq!(g.n(), 1134);
        assert!(g.is_regular(3));
        assert_eq!(g.girth(), Girth::Finite(14));
    }

    #[test]
    fn lookup_matches_entries() {
        for (name, n, _) in entries() {
            let g = by_name(name).unwrap();
            assert_eq!(g.n(), n, "{name}");
        }
        assert!(by_name("nonsense").is_err());
    }
}
