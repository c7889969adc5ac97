use std::collections::BTreeMap;

use stressforge::census::{classify_k4, lambda4_arrangement, lambda5_census, strata_table};
use stressforge::{Configuration, Error};

fn table(n: usize) -> BTreeMap<usize, usize> {
    strata_table(n).unwrap().counts
}

#[test]
fn small_tables() {
    assert_eq!(table(2), BTreeMap::from([(2, 1), (4, 1)]));
    assert_eq!(table(3), BTreeMap::from([(2, 1), (4, 3), (5, 3), (6, 2)]));
    assert_eq!(table(4), BTreeMap::from([(2, 1), (4, 7), (5, 18), (6, 24), (7, 24), (8, 14)]));
}

#[test]
fn five_point_table() {
    let t = strata_table(5).unwrap();
    for (d, c) in [(2, 1), (4, 15), (5, 75), (6, 170), (7, 300), (9, 600), (10, 264)] {
        assert_eq!(t.counts[&d], c, "dimension {d}");
    }
    let row8 = &t.by_kind[&8];
    assert_eq!(row8["four points collinear"], 120);
    assert_eq!(row8.values().sum::<usize>(), t.counts[&8]);
    assert!(matches!(strata_table(6), Err(Error::UnsupportedN(6))));
}

#[test]
fn lambda4_is_a_sphere() {
    let c = lambda4_arrangement();
    assert_eq!((c.count(2), c.count(1), c.count(0)), (14, 24, 12));
    assert_eq!(c.euler_characteristic(), 2);
    assert!(c.adjacency_is_symmetric());
    assert!(c.arc_groups().values().all(|&k| k == 6));
    for arc in c.cells.iter().filter(|x| x.dim == 1) {
        let faces = arc.adjacent.iter().filter(|&&k| c.cells[k].dim == 2).count();
        assert_eq!(faces, 2, "arc {} bounds two faces", arc.id);
    }
}

#[test]
fn classification_agrees_with_the_complex() {
    let c = lambda4_arrangement();
    let samples = [
        [(0, 0), (4, 0), (4, 3), (0, 3)],
        [(0, 0), (6, 0), (0, 6), (1, 1)],
        [(0, 0), (1, 0), (3, 0), (1, 5)],
        [(0, 0), (2, 0), (1, 2), (1, 2)],
    ];
    for pts in samples.iter().take(3) {
        let k = classify_k4(&Configuration::planar_ints(pts)).unwrap();
        let cell = c.get(&k.cell).unwrap();
        assert_eq!(cell.dim, k.dim);
        assert_eq!(cell.signature.as_ref(), Some(&k.signature));
    }
    assert!(classify_k4(&Configuration::planar_ints(&samples[3])).is_err());
}

#[test]
fn lambda5_counts() {
    let l = lambda5_census().unwrap();
    assert_eq!((l.top, l.codim1), (264, 600));
    assert_eq!(l.fiber_cells.len(), 14);
    assert!(l.fiber_cells.values().flatten().all(|&k| k == 18));
}
