use cograph_spectra::graph::Graph;
use cograph_spectra::oracle::brute_twin_partition;

/// Isomorphism of vertex-labelled graphs by backtracking. No size cap;
/// meant for reductions, which are small.
pub fn labelled_isomorphic(a: &Graph, la: &[usize], b: &Graph, lb: &[usize]) -> bool {
    fn extend(a: &Graph, la: &[usize], b: &Graph, lb: &[usize], image: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let v = image.len();
        if v == a.n() {
            return true;
        }
        for w in 0..b.n() {
            if used[w] || la[v] != lb[w] || (0..v).any(|u| a.has_edge(u, v) != b.has_edge(image[u], w)) {
                continue;
            }
            used[w] = true;
            image.push(w);
            if extend(a, la, b, lb, image, used) {
                return true;
            }
            image.pop();
            used[w] = false;
        }
        false
    }
    a.n() == b.n() && extend(a, la, b, lb, &mut Vec::new(), &mut vec![false; b.n()])
}

/// Twin reduction computed from neighborhoods alone, with twin numbers.
pub fn brute_reduction(g: &Graph) -> (Graph, Vec<usize>) {
    let p = brute_twin_partition(g).expect("small graph");
    let reps: Vec<usize> = p.classes().iter().map(|c| c.members[0]).collect();
    (g.induced_subgraph(&reps), p.twin_numbers())
}

/// Equivalence decided without cotrees.
pub fn brute_equivalent(g: &Graph, h: &Graph) -> bool {
    let ((rg, tg), (rh, th)) = (brute_reduction(g), brute_reduction(h));
    labelled_isomorphic(&rg, &tg, &rh, &th)
}
