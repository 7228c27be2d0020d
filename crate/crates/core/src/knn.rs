//! Leave-one-out nearest-neighbor evaluation of a bound used as a distance.

/// Fraction of items whose nearest neighbor (by `dist`, ties broken by the
/// lexicographically smallest id) carries the same class label. Collections
/// with fewer than two items classify vacuously and score 1.
pub fn one_nn_accuracy(ids: &[String], classes: &[String], dist: &dyn Fn(usize, usize) -> f64) -> f64 {
    assert_eq!(ids.len(), classes.len());
    let n = ids.len();
    if n < 2 {
        return 1.0;
    }
    let mut correct = 0usize;
    for q in 0..n {
        let mut best: Option<usize> = None;
        for c in 0..n {
            if c == q {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => {
                    let (dc, db) = (dist(q, c), dist(q, b));
                    dc < db || (dc == db && ids[c] < ids[b])
                }
            };
            if better {
                best = Some(c);
            }
        }
        if classes[best.unwrap()] == classes[q] {
            correct += 1;
        }
    }
    correct as f64 / n as f64
}
