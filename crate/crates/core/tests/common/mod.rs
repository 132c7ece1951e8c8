//! Fixtures, random generators and brute-force oracles shared by the
//! integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use gainline::gain::SwitchingFunction;
use gainline::phase::GPhase;
use gainline::{CentralWeakInvolution, FiniteGroup, GainFunction, GroupElement, GroupSpec, Orientation, PhaseContext, SimpleGraph};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn group(spec: GroupSpec) -> Arc<FiniteGroup> {
    Arc::new(FiniteGroup::build(&spec).unwrap())
}

pub fn q8() -> Arc<FiniteGroup> {
    group(GroupSpec::Quaternion8)
}

/// The groups used by the randomized identity checks.
pub fn small_groups() -> Vec<Arc<FiniteGroup>> {
    vec![
        group(GroupSpec::cyclic(2)),
        group(GroupSpec::cyclic(4)),
        group(GroupSpec::T4),
        group(GroupSpec::direct_product(GroupSpec::cyclic(2), GroupSpec::cyclic(2))),
        group(GroupSpec::dihedral(4)),
        group(GroupSpec::Quaternion8),
    ]
}

pub fn labels(g: &FiniteGroup, ls: &[&str]) -> Vec<GroupElement> {
    ls.iter().map(|l| g.by_label(l).unwrap()).collect()
}

/// The paw: triangle 1-2-4 with pendant 3-4, edges {1,2},{2,3},{3,4},{2,4}.
pub fn paw_q8() -> GainFunction {
    let g = q8();
    GainFunction::new(Arc::new(SimpleGraph::paw()), g.clone(), labels(&g, &["-i", "-j", "-k", "-i"])).unwrap()
}

/// A Q8-gain graph on the line graph of the paw whose spectrum leaves
/// [−2, 2] on both sides under the two-dimensional representation.
pub fn two_sided_q8() -> GainFunction {
    let g = q8();
    let graph = SimpleGraph::from_one_based(4, &[(1, 2), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap();
    GainFunction::new(Arc::new(graph), g.clone(), labels(&g, &["-k", "1", "1", "1", "-j"])).unwrap()
}

pub fn minus_one_ctx(g: &FiniteGroup) -> PhaseContext {
    let m = g.by_label("-1").unwrap();
    PhaseContext::new(g, m, m).unwrap()
}

pub fn random_element(g: &FiniteGroup, rng: &mut impl Rng) -> GroupElement {
    GroupElement::from_index(rng.gen_range(0..g.order()))
}

pub fn random_elements(g: &FiniteGroup, len: usize, rng: &mut impl Rng) -> Vec<GroupElement> {
    (0..len).map(|_| random_element(g, rng)).collect()
}

pub fn random_involution(g: &FiniteGroup, rng: &mut impl Rng) -> CentralWeakInvolution {
    *g.central_weak_involutions().choose(rng).unwrap()
}

pub fn random_ctx(g: &FiniteGroup, rng: &mut impl Rng) -> PhaseContext {
    PhaseContext {
        s1: random_involution(g, rng),
        s2: random_involution(g, rng),
    }
}

/// A connected graph on `n ≥ 2` vertices: a random tree plus extra edges
/// with probability `p`, with vertex labels and edge order shuffled.
pub fn random_graph(n: usize, p: f64, rng: &mut impl Rng) -> SimpleGraph {
    assert!(n >= 2);
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut edges = BTreeSet::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.insert((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.insert((u, v));
            }
        }
    }
    let mut edges: Vec<_> = edges
        .into_iter()
        .map(|(u, v)| if rng.gen_bool(0.5) { (perm[u], perm[v]) } else { (perm[v], perm[u]) })
        .collect();
    edges.shuffle(rng);
    SimpleGraph::new(n, &edges).unwrap()
}

pub fn random_gain(graph: Arc<SimpleGraph>, g: Arc<FiniteGroup>, rng: &mut impl Rng) -> GainFunction {
    let forward = random_elements(&g, graph.edge_count(), rng);
    GainFunction::new(graph, g, forward).unwrap()
}

pub fn random_phase(graph: Arc<SimpleGraph>, g: Arc<FiniteGroup>, rng: &mut impl Rng) -> GPhase {
    let cols = (0..graph.edge_count())
        .map(|_| [random_element(&g, rng), random_element(&g, rng)])
        .collect();
    GPhase::new(graph, g, cols).unwrap()
}

pub fn random_switching(g: &FiniteGroup, n: usize, rng: &mut impl Rng) -> SwitchingFunction {
    SwitchingFunction(random_elements(g, n, rng))
}

pub fn random_orientation(graph: &SimpleGraph, rng: &mut impl Rng) -> Orientation {
    let mask: Vec<bool> = (0..graph.edge_count()).map(|_| rng.gen_bool(0.5)).collect();
    Orientation::default_for(graph).flipped(&mask)
}

/// Instance `(G, Γ, H, ctx)` with `G` drawn from [`small_groups`] and
/// `2 ≤ n ≤ max_n`.
pub fn random_instance(max_n: usize, rng: &mut impl Rng) -> (Arc<FiniteGroup>, Arc<SimpleGraph>, GPhase, PhaseContext) {
    let g = small_groups().choose(rng).unwrap().clone();
    let n = rng.gen_range(2..=max_n);
    let graph = Arc::new(random_graph(n, rng.gen_range(0.0..0.6), rng));
    let h = random_phase(graph.clone(), g.clone(), rng);
    let ctx = random_ctx(&g, rng);
    (g, graph, h, ctx)
}

/// Every tuple in `G^len`, as mixed-radix counting.
pub fn all_tuples(order: usize, len: usize) -> impl Iterator<Item = Vec<GroupElement>> {
    let total = order.pow(len as u32);
    (0..total).map(move |mut x| {
        (0..len)
            .map(|_| {
                let d = x % order;
                x /= order;
                GroupElement::from_index(d)
            })
            .collect()
    })
}

/// Brute-force switching equivalence: tries every `f ∈ G^n`.
pub fn brute_switching_equivalent(a: &GainFunction, b: &GainFunction) -> bool {
    let g = a.group();
    let graph = a.graph();
    all_tuples(g.order(), graph.vertex_count()).any(|f| {
        graph.edges().iter().enumerate().all(|(k, &(u, v))| {
            g.product([g.inv(f[u]), a.edge_gain(k), f[v]]) == b.edge_gain(k)
        })
    })
}

/// Brute-force balance: `ψ` switches to the constant identity.
pub fn brute_balanced(a: &GainFunction) -> bool {
    brute_switching_equivalent(a, &GainFunction::trivial(a.graph().clone(), a.group().clone()))
}

/// Every G-phase of `graph`.
pub fn all_phases(graph: &Arc<SimpleGraph>, g: &Arc<FiniteGroup>) -> Vec<GPhase> {
    let m = graph.edge_count();
    all_tuples(g.order(), 2 * m)
        .map(|t| {
            let cols = t.chunks(2).map(|c| [c[0], c[1]]).collect();
            GPhase::new(graph.clone(), g.clone(), cols).unwrap()
        })
        .collect()
}

/// Connected labelled graphs on `n` vertices with at most `max_edges` edges.
pub fn all_labelled_connected(n: usize, max_edges: usize) -> Vec<SimpleGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u32..1 << pairs.len())
        .filter(|mask| (mask.count_ones() as usize) <= max_edges && *mask != 0)
        .filter_map(|mask| {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            SimpleGraph::new(n, &edges).ok()
        })
        .collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Smallest sorted edge list over all relabellings.
fn canonical_form(edges: &[(usize, usize)], perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| {
            let mut e: Vec<_> = edges
                .iter()
                .map(|&(u, v)| (p[u].min(p[v]), p[u].max(p[v])))
                .collect();
            e.sort_unstable();
            e
        })
        .min()
        .unwrap_or_default()
}

/// Representatives of the connected graphs with at least one edge on
/// `2..=max_n` vertices. Classes are deduplicated for `n ≤ 6`; on 7 vertices
/// every connected graph arises by attaching a vertex to a connected graph
/// on 6 (delete a non-cut vertex), so all such extensions are returned,
/// repeats included.
pub fn connected_graphs_up_to(max_n: usize) -> Vec<SimpleGraph> {
    let mut by_n: Vec<Vec<Vec<(usize, usize)>>> = vec![vec![], vec![vec![]]];
    let mut out = Vec::new();
    for n in 2..=max_n {
        let dedup = n <= 6;
        let perms = if dedup { permutations(n) } else { vec![] };
        let mut seen = BTreeSet::new();
        let mut level = Vec::new();
        for base in &by_n[n - 1] {
            for mask in 1u32..1 << (n - 1) {
                let mut edges = base.clone();
                edges.extend((0..n - 1).filter(|i| mask >> i & 1 == 1).map(|i| (i, n - 1)));
                if dedup {
                    let c = canonical_form(&edges, &perms);
                    if !seen.insert(c.clone()) {
                        continue;
                    }
                    level.push(c);
                } else {
                    level.push(edges);
                }
            }
        }
        out.extend(level.iter().map(|e| SimpleGraph::new(n, e).unwrap()));
        by_n.push(level);
    }
    out
}
