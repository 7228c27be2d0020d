//! The linear sum assignment problem with error correction (LSAPE): dense
//! `(n+1) x (m+1)` instances, optimal and greedy solvers, enumeration of
//! optimal solutions, and an exhaustive oracle for small instances.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::error::{Error, Result};

/// Sentinel cost for cells that must not be chosen; large enough to dominate
/// any realistic instance while staying finite.
const FORBIDDEN: f64 = 1.0e15;

/// Dense LSAPE cost matrix. Rows `0..n` and columns `0..m` are the real
/// items; row `n` and column `m` encode insertions and deletions. The corner
/// cell `(n, m)` is always 0.
#[derive(Clone, Debug, PartialEq)]
pub struct LsapeInstance {
    n: usize,
    m: usize,
    costs: Vec<f64>,
}

impl LsapeInstance {
    pub fn new(n: usize, m: usize, costs: Vec<f64>) -> Result<Self> {
        if costs.len() != (n + 1) * (m + 1) {
            return Err(Error::InvalidInstance(format!(
                "expected {} entries for a {}x{} instance, got {}",
                (n + 1) * (m + 1),
                n + 1,
                m + 1,
                costs.len()
            )));
        }
        if let Some(bad) = costs.iter().find(|c| !c.is_finite()) {
            return Err(Error::InvalidInstance(format!("non-finite entry {bad}")));
        }
        if costs[(n + 1) * (m + 1) - 1] != 0.0 {
            return Err(Error::InvalidInstance(
                "corner cell (n+1, m+1) must be 0".into(),
            ));
        }
        Ok(Self { n, m, costs })
    }

    pub fn from_rows(rows: Vec<Vec<f64>>) -> Result<Self> {
        let n = rows.len().saturating_sub(1);
        let m = rows.first().map_or(0, |r| r.len().saturating_sub(1));
        if rows.is_empty() || rows.iter().any(|r| r.len() != m + 1) {
            return Err(Error::InvalidInstance("ragged cost matrix".into()));
        }
        Self::new(n, m, rows.into_iter().flatten().collect())
    }

    /// Builds an instance cell by cell; the corner is forced to 0.
    pub fn from_fn(n: usize, m: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut costs = Vec::with_capacity((n + 1) * (m + 1));
        for i in 0..=n {
            for k in 0..=m {
                costs.push(if i == n && k == m { 0.0 } else { f(i, k) });
            }
        }
        Self::new(n, m, costs)
    }

    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn cost(&self, i: usize, k: usize) -> f64 {
        self.costs[i * (self.m + 1) + k]
    }
}

/// A feasible LSAPE solution: every real row is assigned to a real column or
/// deleted (`None`), every real column is assigned or inserted, and the two
/// directions are mutually consistent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    row_to_col: Vec<Option<usize>>,
    col_to_row: Vec<Option<usize>>,
}

impl Assignment {
    /// Builds an assignment from the row side; unassigned columns become
    /// insertions. Fails if two rows share a column or a column index is out
    /// of range.
    pub fn from_row_map(row_to_col: Vec<Option<usize>>, m: usize) -> Result<Self> {
        let mut col_to_row = vec![None; m];
        for (i, &target) in row_to_col.iter().enumerate() {
            if let Some(k) = target {
                if k >= m {
                    return Err(Error::InfeasibleAssignment(format!(
                        "row {i} maps to column {k} but there are only {m} columns"
                    )));
                }
                if let Some(other) = col_to_row[k] {
                    return Err(Error::InfeasibleAssignment(format!(
                        "rows {other} and {i} both map to column {k}"
                    )));
                }
                col_to_row[k] = Some(i);
            }
        }
        Ok(Self {
            row_to_col,
            col_to_row,
        })
    }

    pub fn rows(&self) -> usize {
        self.row_to_col.len()
    }

    pub fn cols(&self) -> usize {
        self.col_to_row.len()
    }

    /// Image of row `i`: `Some(col)` or `None` for deletion.
    pub fn image(&self, i: usize) -> Option<usize> {
        self.row_to_col[i]
    }

    /// Preimage of column `k`: `Some(row)` or `None` for insertion.
    pub fn preimage(&self, k: usize) -> Option<usize> {
        self.col_to_row[k]
    }

    pub fn row_map(&self) -> &[Option<usize>] {
        &self.row_to_col
    }

    /// The same relation read from the column side.
    pub fn inverse(&self) -> Assignment {
        Assignment {
            row_to_col: self.col_to_row.clone(),
            col_to_row: self.row_to_col.clone(),
        }
    }

    /// Checks feasibility for an `n x m` shape, including mutual consistency.
    pub fn validate(&self, n: usize, m: usize) -> Result<()> {
        if self.row_to_col.len() != n || self.col_to_row.len() != m {
            return Err(Error::InfeasibleAssignment(format!(
                "shape mismatch: assignment is {}x{}, instance is {n}x{m}",
                self.row_to_col.len(),
                self.col_to_row.len()
            )));
        }
        let rebuilt = Assignment::from_row_map(self.row_to_col.clone(), m)?;
        if rebuilt.col_to_row != self.col_to_row {
            return Err(Error::InfeasibleAssignment(
                "row and column maps are inconsistent".into(),
            ));
        }
        Ok(())
    }
}

/// Cost of a feasible solution: substituted cells plus the deletion cell of
/// every deleted row and the insertion cell of every inserted column.
pub fn assignment_cost(c: &LsapeInstance, a: &Assignment) -> Result<f64> {
    a.validate(c.n, c.m)?;
    let mut total = 0.0;
    for i in 0..c.n {
        total += c.cost(i, a.image(i).unwrap_or(c.m));
    }
    for k in 0..c.m {
        if a.preimage(k).is_none() {
            total += c.cost(c.n, k);
        }
    }
    Ok(total)
}

/// Shortest-augmenting-path solver for a square LSAP; returns `col -> row`.
fn solve_square_lsap(n: usize, cost: &[f64]) -> Vec<usize> {
    let mut u = vec![0.0f64; n];
    let mut v = vec![0.0f64; n + 1];
    let mut match_col = vec![usize::MAX; n + 1];
    for row in 0..n {
        match_col[n] = row;
        let mut j0 = n;
        let mut minv = vec![f64::INFINITY; n];
        let mut way = vec![n; n];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = match_col[j0];
            let mut delta = f64::INFINITY;
            let mut j1 = usize::MAX;
            for j in 0..n {
                if used[j] {
                    continue;
                }
                let reduced = cost[i0 * n + j] - u[i0] - v[j];
                if reduced < minv[j] {
                    minv[j] = reduced;
                    way[j] = j0;
                }
                if minv[j] < delta {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for j in 0..n {
                if used[j] {
                    u[match_col[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            if used[n] {
                u[match_col[n]] += delta;
                v[n] -= delta;
            }
            j0 = j1;
            if match_col[j0] == usize::MAX {
                break;
            }
        }
        while j0 != n {
            let j1 = way[j0];
            match_col[j0] = match_col[j1];
            j0 = j1;
        }
    }
    match_col.truncate(n);
    match_col
}

/// Optimal LSAPE solution via the square `(n+m) x (n+m)` reduction: rows are
/// augmented with one private deletion column each, columns with one private
/// insertion row each, and the remaining block is free.
pub fn solve_optimal(c: &LsapeInstance) -> (Assignment, f64) {
    let (n, m) = (c.n, c.m);
    let size = n + m;
    let mut square = vec![0.0f64; size * size];
    for i in 0..n {
        for k in 0..m {
            square[i * size + k] = c.cost(i, k);
        }
        for k in m..size {
            square[i * size + k] = if k - m == i { c.cost(i, m) } else { FORBIDDEN };
        }
    }
    for i in n..size {
        for k in 0..m {
            square[i * size + k] = if i - n == k { c.cost(n, k) } else { FORBIDDEN };
        }
    }
    let match_col = solve_square_lsap(size, &square);
    let mut row_to_col = vec![None; n];
    for (k, &i) in match_col.iter().enumerate() {
        if i < n && k < m {
            row_to_col[i] = Some(k);
        }
    }
    let assignment =
        Assignment::from_row_map(row_to_col, m).expect("square solution is a matching");
    let cost = assignment_cost(c, &assignment).expect("solver output is feasible");
    (assignment, cost)
}

/// Greedy suboptimal solution: rows in index order take their cheapest still
/// free column (the deletion column counts, ties go to the lowest index);
/// leftover columns are inserted.
pub fn solve_greedy(c: &LsapeInstance) -> (Assignment, f64) {
    let (n, m) = (c.n, c.m);
    let mut used = vec![false; m];
    let mut row_to_col = vec![None; n];
    for i in 0..n {
        let mut best_col = m;
        let mut best_cost = f64::INFINITY;
        for k in 0..=m {
            if k < m && used[k] {
                continue;
            }
            let cost = c.cost(i, k);
            if cost < best_cost {
                best_cost = cost;
                best_col = k;
            }
        }
        if best_col < m {
            used[best_col] = true;
            row_to_col[i] = Some(best_col);
        }
    }
    let assignment = Assignment::from_row_map(row_to_col, m).expect("greedy output is a matching");
    let cost = assignment_cost(c, &assignment).expect("greedy output is feasible");
    (assignment, cost)
}

#[derive(Clone, Default)]
struct Constraints {
    fixed: Vec<(usize, Option<usize>)>,
    forbidden: Vec<(usize, Option<usize>)>,
}

/// Solves the instance under forced and banned row assignments. Returns
/// `None` when every feasible solution violates a ban.
fn solve_constrained(c: &LsapeInstance, cons: &Constraints) -> Option<(Assignment, f64)> {
    let (n, m) = (c.n, c.m);
    let mut fixed_target = vec![None::<Option<usize>>; n];
    let mut col_taken = vec![false; m];
    for &(row, target) in &cons.fixed {
        fixed_target[row] = Some(target);
        if let Some(k) = target {
            col_taken[k] = true;
        }
    }
    let free_rows: Vec<usize> = (0..n).filter(|&i| fixed_target[i].is_none()).collect();
    let free_cols: Vec<usize> = (0..m).filter(|&k| !col_taken[k]).collect();
    let (rn, rm) = (free_rows.len(), free_cols.len());

    let mut costs = vec![0.0f64; (rn + 1) * (rm + 1)];
    for (ri, &i) in free_rows.iter().enumerate() {
        for (rk, &k) in free_cols.iter().enumerate() {
            costs[ri * (rm + 1) + rk] = c.cost(i, k);
        }
        costs[ri * (rm + 1) + rm] = c.cost(i, m);
    }
    for (rk, &k) in free_cols.iter().enumerate() {
        costs[rn * (rm + 1) + rk] = c.cost(n, k);
    }

    let mut banned = vec![false; (rn + 1) * (rm + 1)];
    for &(row, target) in &cons.forbidden {
        let Ok(ri) = free_rows.binary_search(&row) else {
            // the row is fixed to a different target, ban holds trivially
            continue;
        };
        let cell = match target {
            Some(k) => match free_cols.binary_search(&k) {
                Ok(rk) => ri * (rm + 1) + rk,
                Err(_) => continue, // column taken by a fixed row
            },
            None => ri * (rm + 1) + rm,
        };
        costs[cell] = FORBIDDEN;
        banned[cell] = true;
    }

    let reduced = LsapeInstance::new(rn, rm, costs).expect("reduced instance is well formed");
    let (sol, _) = solve_optimal(&reduced);
    for ri in 0..rn {
        let cell = ri * (rm + 1) + sol.image(ri).unwrap_or(rm);
        if banned[cell] {
            return None;
        }
    }

    let mut row_to_col = vec![None; n];
    for &(row, target) in &cons.fixed {
        row_to_col[row] = target;
    }
    for (ri, &i) in free_rows.iter().enumerate() {
        row_to_col[i] = sol.image(ri).map(|rk| free_cols[rk]);
    }
    let full = Assignment::from_row_map(row_to_col, m).expect("merged solution is a matching");
    let cost = assignment_cost(c, &full).expect("merged solution is feasible");
    Some((full, cost))
}

struct Candidate {
    cost: f64,
    seq: u64,
    constraints: Constraints,
    assignment: Assignment,
}

impl PartialEq for Candidate {
    fn eq(&self, other: &Self) -> bool {
        self.cost == other.cost && self.seq == other.seq
    }
}
impl Eq for Candidate {}
impl PartialOrd for Candidate {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Candidate {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.cost
            .total_cmp(&other.cost)
            .then(self.seq.cmp(&other.seq))
    }
}

/// Enumerates up to `s` distinct optimal solutions by ranked partitioning:
/// each accepted solution spawns subproblems that fix its assignments up to a
/// row and ban the assignment at that row, so the candidate space is
/// partitioned without duplicates. Stops as soon as the next-best candidate
/// costs more than the optimum. The first element is always the solution
/// returned by [`solve_optimal`].
pub fn enumerate_optimal(c: &LsapeInstance, s: usize) -> Vec<Assignment> {
    if s == 0 {
        return Vec::new();
    }
    let (first, best) = solve_optimal(c);
    let tol = 1e-9 * (1.0 + best.abs());
    let mut results = vec![first.clone()];
    if s == 1 {
        return results;
    }
    let mut seq = 0u64;
    let mut heap: BinaryHeap<Reverse<Candidate>> = BinaryHeap::new();
    let expand = |heap: &mut BinaryHeap<Reverse<Candidate>>,
                      seq: &mut u64,
                      cons: &Constraints,
                      sol: &Assignment| {
        let fixed_rows: Vec<usize> = cons.fixed.iter().map(|&(r, _)| r).collect();
        let mut prefix = cons.fixed.clone();
        for row in 0..c.n {
            if fixed_rows.contains(&row) {
                continue;
            }
            let target = sol.image(row);
            let mut forbidden = cons.forbidden.clone();
            forbidden.push((row, target));
            let child = Constraints {
                fixed: prefix.clone(),
                forbidden,
            };
            if let Some((assignment, cost)) = solve_constrained(c, &child) {
                *seq += 1;
                heap.push(Reverse(Candidate {
                    cost,
                    seq: *seq,
                    constraints: child,
                    assignment,
                }));
            }
            prefix.push((row, target));
        }
    };
    expand(&mut heap, &mut seq, &Constraints::default(), &first);
    while results.len() < s {
        let Some(Reverse(cand)) = heap.pop() else {
            break;
        };
        if cand.cost > best + tol {
            break;
        }
        expand(&mut heap, &mut seq, &cand.constraints, &cand.assignment);
        results.push(cand.assignment);
    }
    results
}

/// Exhaustive minimum over all feasible solutions; only for `n, m <= 7`.
pub fn brute_force_cost(c: &LsapeInstance) -> Result<f64> {
    if c.n > 7 || c.m > 7 {
        return Err(Error::TooLarge(format!(
            "{}x{} exceeds the 7x7 brute-force limit",
            c.n, c.m
        )));
    }
    let mut used = vec![false; c.m];
    let mut best = f64::INFINITY;
    brute_rec(c, 0, &mut used, 0.0, &mut |total| {
        if total < best {
            best = total;
        }
    });
    Ok(best)
}

fn brute_rec(
    c: &LsapeInstance,
    row: usize,
    used: &mut Vec<bool>,
    acc: f64,
    visit: &mut impl FnMut(f64),
) {
    if row == c.n {
        let mut total = acc;
        for k in 0..c.m {
            if !used[k] {
                total += c.cost(c.n, k);
            }
        }
        visit(total);
        return;
    }
    brute_rec(c, row + 1, used, acc + c.cost(row, c.m), visit);
    for k in 0..c.m {
        if !used[k] {
            used[k] = true;
            brute_rec(c, row + 1, used, acc + c.cost(row, k), visit);
            used[k] = false;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Letter-drawing node-substitution instance: entries as printed in the
    /// source figure, optimum 1.774 on the diagonal.
    pub(crate) fn letter_instance() -> LsapeInstance {
        LsapeInstance::from_rows(vec![
            vec![0.177, 1.406, 1.208, 0.468, 0.675],
            vec![1.203, 0.272, 1.403, 0.832, 0.675],
            vec![1.226, 1.180, 0.260, 1.259, 0.675],
            vec![0.788, 0.705, 1.346, 0.390, 0.675],
            vec![1.135, 0.369, 0.906, 0.902, 0.675],
            vec![0.675, 0.675, 0.675, 0.675, 0.0],
        ])
        .unwrap()
    }

    fn diag_assignment(n: usize, m: usize) -> Assignment {
        let row_to_col = (0..n).map(|i| (i < m).then_some(i)).collect();
        Assignment::from_row_map(row_to_col, m).unwrap()
    }

    /// All optimal solutions by exhaustive enumeration, as row maps.
    fn brute_force_optima(c: &LsapeInstance) -> Vec<Vec<Option<usize>>> {
        let min = brute_force_cost(c).unwrap();
        let mut optima = Vec::new();
        let mut used = vec![false; c.cols()];
        let mut row_map = vec![None; c.rows()];
        collect(c, 0, &mut used, 0.0, &mut row_map, min, &mut optima);
        return optima;

        fn collect(
            c: &LsapeInstance,
            row: usize,
            used: &mut Vec<bool>,
            acc: f64,
            row_map: &mut Vec<Option<usize>>,
            min: f64,
            out: &mut Vec<Vec<Option<usize>>>,
        ) {
            if row == c.rows() {
                let mut total = acc;
                for k in 0..c.cols() {
                    if !used[k] {
                        total += c.cost(c.rows(), k);
                    }
                }
                if total <= min + 1e-9 {
                    out.push(row_map.clone());
                }
                return;
            }
            row_map[row] = None;
            collect(c, row + 1, used, acc + c.cost(row, c.cols()), row_map, min, out);
            for k in 0..c.cols() {
                if !used[k] {
                    used[k] = true;
                    row_map[row] = Some(k);
                    collect(c, row + 1, used, acc + c.cost(row, k), row_map, min, out);
                    row_map[row] = None;
                    used[k] = false;
                }
            }
        }
    }

    fn random_instance(rng: &mut impl Rng, n: usize, m: usize, max: u32) -> LsapeInstance {
        LsapeInstance::from_fn(n, m, |_, _| rng.gen_range(0..=max) as f64).unwrap()
    }

    #[test]
    fn assignment_cost_examples() {
        let c = letter_instance();
        let diag = diag_assignment(5, 4);
        let cost = assignment_cost(&c, &diag).unwrap();
        assert!((cost - 1.774).abs() < 0.002, "{cost}");

        let empty = LsapeInstance::from_rows(vec![vec![0.0]]).unwrap();
        let none = Assignment::from_row_map(vec![], 0).unwrap();
        assert_eq!(assignment_cost(&empty, &none).unwrap(), 0.0);

        let tiny = LsapeInstance::from_rows(vec![vec![5.0, 3.0], vec![2.0, 0.0]]).unwrap();
        let del_ins = Assignment::from_row_map(vec![None], 1).unwrap();
        assert_eq!(assignment_cost(&tiny, &del_ins).unwrap(), 5.0);
    }

    #[test]
    fn assignment_cost_rejects_infeasible() {
        let c = letter_instance();
        let wrong_shape = Assignment::from_row_map(vec![None, None], 4).unwrap();
        assert!(assignment_cost(&c, &wrong_shape).is_err());
        assert!(Assignment::from_row_map(vec![Some(0), Some(0)], 3).is_err());
    }

    #[test]
    fn optimal_on_letter_instance() {
        let c = letter_instance();
        let (a, cost) = solve_optimal(&c);
        assert!((cost - 1.774).abs() < 0.002, "{cost}");
        for i in 0..4 {
            assert_eq!(a.image(i), Some(i));
        }
        assert_eq!(a.image(4), None);
    }

    #[test]
    fn optimal_on_all_zero_instance() {
        let c = LsapeInstance::from_fn(3, 3, |_, _| 0.0).unwrap();
        let (_, cost) = solve_optimal(&c);
        assert_eq!(cost, 0.0);
    }

    #[test]
    fn optimal_matches_brute_force_on_random_instances() {
        let mut rng = ChaCha8Rng::seed_from_u64(42);
        for trial in 0..200 {
            let n = rng.gen_range(0..=5);
            let m = rng.gen_range(0..=5);
            let c = random_instance(&mut rng, n, m, 9);
            let (a, cost) = solve_optimal(&c);
            a.validate(n, m).unwrap();
            assert_eq!(cost, assignment_cost(&c, &a).unwrap());
            let oracle = brute_force_cost(&c).unwrap();
            assert_eq!(cost, oracle, "trial {trial}: {c:?}");
        }
    }

    #[test]
    fn greedy_examples_and_bound() {
        let c = LsapeInstance::from_fn(4, 4, |_, _| 0.0).unwrap();
        assert_eq!(solve_greedy(&c).1, 0.0);

        let diag_friendly =
            LsapeInstance::from_fn(3, 3, |i, k| if i == k { 0.0 } else { 1.0 }).unwrap();
        assert_eq!(solve_greedy(&diag_friendly).1, 0.0);

        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let c = random_instance(&mut rng, 5, 5, 9);
            let (ga, greedy) = solve_greedy(&c);
            ga.validate(5, 5).unwrap();
            assert_eq!(greedy, assignment_cost(&c, &ga).unwrap());
            let (_, optimal) = solve_optimal(&c);
            assert!(greedy >= optimal);
            // determinism
            assert_eq!(solve_greedy(&c).0, ga);
        }
    }

    #[test]
    fn enumerate_finds_both_optima() {
        let c = LsapeInstance::from_rows(vec![
            vec![0.0, 0.0, 9.0],
            vec![0.0, 0.0, 9.0],
            vec![9.0, 9.0, 0.0],
        ])
        .unwrap();
        assert_eq!(brute_force_optima(&c).len(), 2);
        let sols = enumerate_optimal(&c, 2);
        assert_eq!(sols.len(), 2);
        assert_ne!(sols[0], sols[1]);
        for s in &sols {
            assert_eq!(assignment_cost(&c, s).unwrap(), 0.0);
        }
    }

    #[test]
    fn enumerate_with_s_one_matches_solver() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let c = random_instance(&mut rng, 4, 4, 9);
        let sols = enumerate_optimal(&c, 1);
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0], solve_optimal(&c).0);
    }

    #[test]
    fn enumerate_on_unique_optimum_returns_singleton() {
        // strictly increasing distinct costs make the optimum unique
        let c = LsapeInstance::from_rows(vec![
            vec![0.0, 10.0, 100.0],
            vec![10.0, 1.0, 100.0],
            vec![100.0, 100.0, 0.0],
        ])
        .unwrap();
        assert_eq!(brute_force_optima(&c).len(), 1);
        let sols = enumerate_optimal(&c, 10);
        assert_eq!(sols.len(), 1);
    }

    #[test]
    fn enumerate_matches_brute_force_cardinality() {
        let mut rng = ChaCha8Rng::seed_from_u64(99);
        for _ in 0..60 {
            let n = rng.gen_range(1..=4);
            let m = rng.gen_range(1..=4);
            let c = random_instance(&mut rng, n, m, 2);
            let optima = brute_force_optima(&c);
            let s = 50;
            let sols = enumerate_optimal(&c, s);
            assert_eq!(sols.len(), optima.len().min(s));
            let (_, best) = solve_optimal(&c);
            let mut seen = std::collections::HashSet::new();
            for sol in &sols {
                assert_eq!(assignment_cost(&c, sol).unwrap(), best);
                assert!(seen.insert(sol.row_map().to_vec()), "duplicate solution");
            }
        }
    }

    #[test]
    fn brute_force_rejects_large_instances() {
        let c = LsapeInstance::from_fn(8, 3, |_, _| 1.0).unwrap();
        assert!(matches!(brute_force_cost(&c), Err(Error::TooLarge(_))));
    }

    #[test]
    fn brute_force_on_letter_instance() {
        let c = letter_instance();
        let cost = brute_force_cost(&c).unwrap();
        assert!((cost - 1.774).abs() < 0.002);
        let zero = LsapeInstance::from_fn(4, 2, |_, _| 0.0).unwrap();
        assert_eq!(brute_force_cost(&zero).unwrap(), 0.0);
    }

    #[test]
    fn instance_validation() {
        assert!(LsapeInstance::new(1, 1, vec![0.0; 3]).is_err());
        assert!(LsapeInstance::new(1, 1, vec![0.0, f64::NAN, 0.0, 0.0]).is_err());
        assert!(LsapeInstance::new(1, 1, vec![0.0, 1.0, 1.0, 5.0]).is_err());
    }
}
