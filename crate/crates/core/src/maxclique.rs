//! Branch-and-bound maximum clique search over bitset adjacency.

use crate::bitset::Bitset;

/// Number of colour classes of a greedy sequential colouring of `set`.
/// Upper bound on the clique number of the subgraph induced by `set`.
pub(crate) fn greedy_colour_bound(adj: &[Bitset], set: &Bitset) -> usize {
    let mut uncoloured = set.clone();
    let mut colours = 0;
    while !uncoloured.is_empty() {
        colours += 1;
        let mut available = uncoloured.clone();
        while let Some(v) = available.first() {
            available.remove(v);
            uncoloured.remove(v);
            available.difference_with(&adj[v]);
        }
    }
    colours
}

/// Vertices ordered by repeatedly removing a minimum-degree vertex; the
/// returned order lists the last-removed (densest core) vertex first.
pub(crate) fn degeneracy_order(adj: &[Bitset], set: &Bitset) -> Vec<usize> {
    let mut remaining = set.clone();
    let mut degree: Vec<usize> = (0..adj.len())
        .map(|v| if set.contains(v) { adj[v].intersection(set).count() } else { 0 })
        .collect();
    let mut removed = Vec::with_capacity(set.count());
    while let Some(v) = remaining.iter().min_by_key(|&v| (degree[v], v)) {
        remaining.remove(v);
        removed.push(v);
        for w in adj[v].intersection(&remaining).iter() {
            degree[w] -= 1;
        }
    }
    removed.reverse();
    removed
}

/// Size of a maximum clique inside `candidates`.
///
/// Branches over vertices in degeneracy order with greedy colouring bounds.
pub(crate) fn clique_number(adj: &[Bitset], candidates: &Bitset) -> usize {
    let order = degeneracy_order(adj, candidates);
    let mut best = 0;
    let mut rank = vec![usize::MAX; adj.len()];
    for (i, &v) in order.iter().enumerate() {
        rank[v] = i;
    }
    // each clique is found from its earliest vertex in `order`
    for (i, &v) in order.iter().enumerate() {
        let mut later = adj[v].intersection(candidates);
        for w in later.clone().iter() {
            if rank[w] < i {
                later.remove(w);
            }
        }
        if later.count() < best {
            continue;
        }
        expand_size(adj, 1, later, &mut best);
    }
    best
}

fn expand_size(adj: &[Bitset], size: usize, mut cand: Bitset, best: &mut usize) {
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    while let Some(v) = cand.first() {
        if size + greedy_colour_bound(adj, &cand) <= *best {
            return;
        }
        cand.remove(v);
        expand_size(adj, size + 1, cand.intersection(&adj[v]), best);
    }
    *best = (*best).max(size);
}

/// Lexicographically smallest set among the largest sets inside `candidates`
/// that are cliques of `adj` and satisfy `accept`.
///
/// `accept` is evaluated on every clique visited (not only maximal ones), so
/// it need not be hereditary. Pruning uses the greedy colouring bound, which
/// is sound for any predicate because accepted sets are cliques. Cliques are
/// visited in lexicographic order, so the first one found at the optimum
/// size is the smallest.
pub(crate) fn lex_first_maximum<F>(adj: &[Bitset], candidates: &Bitset, mut accept: F) -> Vec<usize>
where
    F: FnMut(&[usize]) -> bool,
{
    let mut best: Option<Vec<usize>> = None;
    let mut current = Vec::new();
    expand_lex(adj, &mut current, candidates.clone(), &mut best, &mut accept);
    best.unwrap_or_default()
}

fn expand_lex<F>(
    adj: &[Bitset],
    current: &mut Vec<usize>,
    mut cand: Bitset,
    best: &mut Option<Vec<usize>>,
    accept: &mut F,
) where
    F: FnMut(&[usize]) -> bool,
{
    let best_len = |b: &Option<Vec<usize>>| b.as_ref().map_or(-1, |b| b.len() as isize);
    if current.len() as isize > best_len(best) && accept(current) {
        *best = Some(current.clone());
    }
    while let Some(v) = cand.first() {
        if (current.len() + greedy_colour_bound(adj, &cand)) as isize <= best_len(best) {
            return;
        }
        cand.remove(v);
        current.push(v);
        expand_lex(adj, current, cand.intersection(&adj[v]), best, accept);
        current.pop();
    }
}

/// Lexicographically smallest clique of exactly `size` vertices, if any.
pub(crate) fn lex_first_clique_of_size(adj: &[Bitset], candidates: &Bitset, size: usize) -> Option<Vec<usize>> {
    let mut current = Vec::new();
    if find_sized(adj, &mut current, candidates.clone(), size) {
        Some(current)
    } else {
        None
    }
}

fn find_sized(adj: &[Bitset], current: &mut Vec<usize>, mut cand: Bitset, size: usize) -> bool {
    if current.len() == size {
        return true;
    }
    while let Some(v) = cand.first() {
        if current.len() + cand.count() < size || current.len() + greedy_colour_bound(adj, &cand) < size {
            return false;
        }
        cand.remove(v);
        current.push(v);
        if find_sized(adj, current, cand.intersection(&adj[v]), size) {
            return true;
        }
        current.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> Vec<Bitset> {
        let mut adj = vec![Bitset::new(n); n];
        for &(a, b) in edges {
            adj[a].insert(b);
            adj[b].insert(a);
        }
        adj
    }

    fn brute(adj: &[Bitset]) -> usize {
        let n = adj.len();
        (0u32..1 << n)
            .filter(|mask| {
                (0..n).all(|i| {
                    mask & (1 << i) == 0
                        || (i + 1..n).all(|j| mask & (1 << j) == 0 || adj[i].contains(j))
                })
            })
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    #[test]
    fn small_cases() {
        let c5 = graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(clique_number(&c5, &Bitset::full(5)), 2);
        assert_eq!(lex_first_maximum(&c5, &Bitset::full(5), |_| true), vec![0, 1]);
        let k4 = graph(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(clique_number(&k4, &Bitset::full(4)), 4);
        assert_eq!(clique_number(&k4, &Bitset::new(4)), 0);
        assert_eq!(lex_first_clique_of_size(&k4, &Bitset::full(4), 3), Some(vec![0, 1, 2]));
        assert_eq!(lex_first_clique_of_size(&c5, &Bitset::full(5), 3), None);
    }

    #[test]
    fn lex_first_prefers_smaller_indices() {
        // triangles {1,2,3} and {0,4,5}; lexicographically {0,4,5} comes first
        let adj = graph(6, &[(1, 2), (2, 3), (1, 3), (0, 4), (4, 5), (0, 5)]);
        assert_eq!(lex_first_maximum(&adj, &Bitset::full(6), |_| true), vec![0, 4, 5]);
        assert_eq!(lex_first_maximum(&adj, &Bitset::full(6), |c| !c.contains(&0)), vec![1, 2, 3]);
    }

    #[test]
    fn agrees_with_brute_force_on_pseudorandom_graphs() {
        let mut state = 0x9E3779B97F4A7C15u64;
        for _ in 0..200 {
            let n = 1 + (state % 12) as usize;
            let mut edges = Vec::new();
            for a in 0..n {
                for b in a + 1..n {
                    state ^= state << 13;
                    state ^= state >> 7;
                    state ^= state << 17;
                    if state % 100 < 55 {
                        edges.push((a, b));
                    }
                }
            }
            let adj = graph(n, &edges);
            let expected = brute(&adj);
            assert_eq!(clique_number(&adj, &Bitset::full(n)), expected);
            assert_eq!(lex_first_maximum(&adj, &Bitset::full(n), |_| true).len(), expected);
        }
    }
}
