//! Enumeration of commutative monoid tables with identity 0, deduplicated
//! up to relabelings that fix 0.

use std::collections::BTreeSet;

use crate::structure::Elem;

use super::perms_fixing_zero;

/// Returns one canonical representative per isomorphism class, each as an
/// n×n row-major table, in ascending byte order.
///
/// The search assigns the entries (a, b) with 1 ≤ a ≤ b lexicographically,
/// checking associativity on every fully determined triple after each
/// assignment. Row and column 0 are pinned to the identity; commutativity
/// is built into the symmetric storage.
pub fn enumerate_additive_monoids(n: usize) -> Vec<Vec<Elem>> {
    assert!(n >= 1, "carrier must be nonempty");
    let mut table = vec![0 as Elem; n * n];
    for a in 0..n {
        table[a] = a as Elem; // 0 + a
        table[a * n] = a as Elem; // a + 0
    }
    let free: Vec<(usize, usize)> = (1..n)
        .flat_map(|a| (a..n).map(move |b| (a, b)))
        .collect();
    let perms = perms_fixing_zero(n);
    let mut found: BTreeSet<Vec<Elem>> = BTreeSet::new();
    let mut assigned = vec![vec![false; n]; n];
    #[allow(clippy::needless_range_loop)]
    for a in 0..n {
        assigned[0][a] = true;
        assigned[a][0] = true;
    }
    search(n, &free, 0, &mut table, &mut assigned, &perms, &mut found);
    found.into_iter().collect()
}

fn search(
    n: usize,
    free: &[(usize, usize)],
    depth: usize,
    table: &mut Vec<Elem>,
    assigned: &mut Vec<Vec<bool>>,
    perms: &[Vec<Elem>],
    found: &mut BTreeSet<Vec<Elem>>,
) {
    if depth == free.len() {
        found.insert(canonical_table(n, table, perms));
        return;
    }
    let (a, b) = free[depth];
    for v in 0..n as Elem {
        table[a * n + b] = v;
        table[b * n + a] = v;
        assigned[a][b] = true;
        assigned[b][a] = true;
        if associative_so_far(n, table, assigned) {
            search(n, free, depth + 1, table, assigned, perms, found);
        }
        assigned[a][b] = false;
        assigned[b][a] = false;
    }
}

fn associative_so_far(n: usize, table: &[Elem], assigned: &[Vec<bool>]) -> bool {
    for x in 0..n {
        for y in 0..n {
            if !assigned[x][y] {
                continue;
            }
            let xy = table[x * n + y] as usize;
            for z in 0..n {
                if !assigned[y][z] {
                    continue;
                }
                let yz = table[y * n + z] as usize;
                if !assigned[xy][z] || !assigned[x][yz] {
                    continue;
                }
                if table[xy * n + z] != table[x * n + yz] {
                    return false;
                }
            }
        }
    }
    true
}

/// Lexicographically least table over all relabelings fixing 0.
pub fn canonical_table(n: usize, table: &[Elem], perms: &[Vec<Elem>]) -> Vec<Elem> {
    let mut best: Option<Vec<Elem>> = None;
    for phi in perms {
        let mut inv = vec![0 as Elem; n];
        for (x, &y) in phi.iter().enumerate() {
            inv[y as usize] = x as Elem;
        }
        let mut candidate = vec![0 as Elem; n * n];
        for a in 0..n {
            for b in 0..n {
                candidate[a * n + b] =
                    phi[table[inv[a] as usize * n + inv[b] as usize] as usize];
            }
        }
        if best.as_ref().is_none_or(|b| candidate < *b) {
            best = Some(candidate);
        }
    }
    best.unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Unpruned oracle: filter every symmetric table with identity 0
    /// through full associativity, then deduplicate by canonical form.
    fn oracle(n: usize) -> Vec<Vec<Elem>> {
        let free: Vec<(usize, usize)> = (1..n)
            .flat_map(|a| (a..n).map(move |b| (a, b)))
            .collect();
        let perms = perms_fixing_zero(n);
        let mut found = BTreeSet::new();
        let total = (n as u64).pow(free.len() as u32);
        for code in 0..total {
            let mut table = vec![0 as Elem; n * n];
            for a in 0..n {
                table[a] = a as Elem;
                table[a * n] = a as Elem;
            }
            let mut rest = code;
            for &(a, b) in &free {
                let v = (rest % n as u64) as Elem;
                rest /= n as u64;
                table[a * n + b] = v;
                table[b * n + a] = v;
            }
            let assoc = (0..n).all(|x| {
                (0..n).all(|y| {
                    (0..n).all(|z| {
                        let xy = table[x * n + y] as usize;
                        let yz = table[y * n + z] as usize;
                        table[xy * n + z] == table[x * n + yz]
                    })
                })
            });
            if assoc {
                found.insert(canonical_table(n, &table, &perms));
            }
        }
        found.into_iter().collect()
    }

    #[test]
    fn counts_match_oracle_and_known_values() {
        // 1, 2, 5, 19 commutative monoids for n = 1..4.
        assert_eq!(enumerate_additive_monoids(1).len(), 1);
        let two = enumerate_additive_monoids(2);
        assert_eq!(two.len(), 2);
        assert_eq!(two, oracle(2));
        let three = enumerate_additive_monoids(3);
        assert_eq!(three.len(), 5);
        assert_eq!(three, oracle(3));
        let four = enumerate_additive_monoids(4);
        assert_eq!(four.len(), 19);
        assert_eq!(four, oracle(4));
    }

    #[test]
    fn order_two_tables_are_z2_and_or() {
        let tables = enumerate_additive_monoids(2);
        // the single free entry 1+1 is either 0 (Z2) or 1 (OR)
        assert_eq!(tables, vec![vec![0, 1, 1, 0], vec![0, 1, 1, 1]]);
    }

    #[test]
    fn canonicalization_is_idempotent() {
        let perms = perms_fixing_zero(3);
        for table in enumerate_additive_monoids(3) {
            assert_eq!(canonical_table(3, &table, &perms), table);
        }
    }
}
