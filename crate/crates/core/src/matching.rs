//! Maximum bipartite matching by augmenting paths (Kuhn's algorithm).

/// Size of a maximum matching. `adj[l]` lists the right vertices adjacent to
/// left vertex `l`; right vertices are `0..right`.
pub fn maximum_matching(adj: &[Vec<usize>], right: usize) -> usize {
    let mut owner: Vec<Option<usize>> = vec![None; right];
    let mut size = 0;
    for l in 0..adj.len() {
        let mut seen = vec![false; right];
        if augment(l, adj, &mut owner, &mut seen) {
            size += 1;
        }
    }
    size
}

fn augment(l: usize, adj: &[Vec<usize>], owner: &mut [Option<usize>], seen: &mut [bool]) -> bool {
    for &r in &adj[l] {
        if seen[r] {
            continue;
        }
        seen[r] = true;
        let free = match owner[r] {
            None => true,
            Some(other) => augment(other, adj, owner, seen),
        };
        if free {
            owner[r] = Some(l);
            return true;
        }
    }
    false
}

/// Whether every left vertex can be matched (a system of distinct
/// representatives exists).
pub fn has_left_perfect_matching(adj: &[Vec<usize>], right: usize) -> bool {
    adj.len() <= right && maximum_matching(adj, right) == adj.len()
}
