//! Exact solvers for boxicity, union boxicity, and the two local variants.
//!
//! All four parameters are minimum covers of the complement's edge set:
//! boxicity and union boxicity minimize the number of bags (globality),
//! the local variants minimize the largest number of bags any vertex
//! meets (locality). The searches branch over complement edges in a fixed
//! order (descending degree sum, ties lexicographic), assigning each edge
//! to a nonempty subset of bags. Overlap is deliberate: co-interval graphs
//! are not closed under edge deletion, so a bag may need an edge that
//! another bag also covers, and partition-only search would miss optima.
//!
//! Soundness of the in-search pruning rests on one monotone fact: once two
//! disjoint bag edges have all four of their cross pairs outside the host
//! or already processed and excluded from the bag, they stay an induced
//! two-edge matching in every completion of that bag (for the union class
//! this applies once the two edges are connected inside the bag, since
//! components only ever merge). Everything else is checked exactly at the
//! leaves, with recognition results memoized per bag edge set.
//!
//! Every returned witness has been re-checked by [`verify_cover`] before
//! the solver hands it out.

use crate::cover::{verify_cover, CoCover, CoverClass, CoverStats};
use crate::graph::Graph;
use crate::interval::{is_co_interval, is_union_co_interval};
use std::collections::HashMap;
use std::time::{Duration, Instant};

/// Exact search needs every complement edge to fit in one machine word of
/// bag bitset; beyond this only bounds are produced.
const MAX_SEARCH_EDGES: usize = 64;

#[derive(Debug, Clone, Copy, Default)]
pub struct SolveOptions {
    /// Wall-clock budget for the whole call. `None` means unlimited.
    pub time_budget: Option<Duration>,
}

/// An exact answer: the parameter value and a verified witness cover of the
/// input's complement. `stats` is the verifier's output on the witness.
#[derive(Debug, Clone)]
pub struct Solution {
    pub value: usize,
    pub witness: CoCover,
    pub stats: CoverStats,
}

/// What a budgeted solve produced when the search did not finish: the value
/// lies in `lower..=upper`, and `witness` (when present) attains `upper`.
#[derive(Debug, Clone)]
pub struct Bounds {
    pub lower: usize,
    pub upper: usize,
    pub witness: Option<CoCover>,
}

#[derive(Debug, Clone)]
pub enum Outcome {
    Exact(Solution),
    Budget(Bounds),
}

/// Which cost the search minimizes.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Objective {
    Globality,
    Locality,
}

/// Minimum number of co-interval graphs covering the complement's edges,
/// equivalently the least dimension of an axis-parallel box representation.
/// Complete graphs get 0 (the empty cover), every other graph at least 1.
///
/// Complete search; intended for the documented exact range of about ten
/// vertices. Panics if the complement has more than 64 edges; call
/// [`boxicity_with`] to get bounds for oversized inputs instead.
pub fn boxicity(h: &Graph) -> Solution {
    expect_exact(boxicity_with(h, &SolveOptions::default()))
}

pub fn boxicity_with(h: &Graph, opts: &SolveOptions) -> Outcome {
    solve(h, CoverClass::CoInterval, Objective::Globality, opts)
}

/// Minimum number of disjoint-unions-of-co-interval graphs covering the
/// complement's edges. Same conventions and size limits as [`boxicity`].
pub fn union_boxicity(h: &Graph) -> Solution {
    expect_exact(union_boxicity_with(h, &SolveOptions::default()))
}

pub fn union_boxicity_with(h: &Graph, opts: &SolveOptions) -> Outcome {
    solve(h, CoverClass::UnionCoInterval, Objective::Globality, opts)
}

/// Minimum over co-interval covers of the largest per-vertex bag load.
pub fn local_boxicity(h: &Graph) -> Solution {
    expect_exact(local_boxicity_with(h, &SolveOptions::default()))
}

pub fn local_boxicity_with(h: &Graph, opts: &SolveOptions) -> Outcome {
    solve(h, CoverClass::CoInterval, Objective::Locality, opts)
}

/// Like [`local_boxicity`] but with union-class bags. The value always
/// agrees with the plain local variant; this runs its own search so the
/// agreement stays a testable fact rather than an assumption.
pub fn local_boxicity_union_class(h: &Graph) -> Solution {
    expect_exact(local_boxicity_union_class_with(h, &SolveOptions::default()))
}

pub fn local_boxicity_union_class_with(h: &Graph, opts: &SolveOptions) -> Outcome {
    solve(h, CoverClass::UnionCoInterval, Objective::Locality, opts)
}

/// The folded variant collapses to a dichotomy: 1 when the complement is
/// co-interval, unbounded otherwise. `None` is the infinite case.
pub fn box_f(h: &Graph) -> Option<usize> {
    if is_co_interval(&h.complement()) {
        Some(1)
    } else {
        None
    }
}

fn expect_exact(o: Outcome) -> Solution {
    match o {
        Outcome::Exact(s) => s,
        Outcome::Budget(_) => panic!(
            "instance exceeds the exact-search envelope; use the *_with entry point for bounds"
        ),
    }
}

fn class_member(g: &Graph, class: CoverClass) -> bool {
    match class {
        CoverClass::CoInterval => is_co_interval(g),
        CoverClass::UnionCoInterval => is_union_co_interval(g),
    }
}

fn solve(h: &Graph, class: CoverClass, objective: Objective, opts: &SolveOptions) -> Outcome {
    let host = h.complement();
    if host.edge_count() == 0 {
        return Outcome::Exact(finish(host, Vec::new(), class, 0, objective));
    }

    // Locality 1 is exactly "every component of the host is co-interval";
    // both bag classes reduce to the same componentwise test, and the
    // components themselves are the witness bags.
    if objective == Objective::Locality {
        if is_union_co_interval(&host) {
            let bags = component_bags(&host);
            return Outcome::Exact(finish(host, bags, class, 1, objective));
        }
    } else if class_member(&host, class) {
        // One bag holding every host edge.
        let mut bag = host.edges();
        bag.sort();
        return Outcome::Exact(finish(host, vec![bag], class, 1, objective));
    }
    // Whichever parameter we minimize, value 1 has just been ruled out.
    let mut lower = 2;
    let deadline = opts.time_budget.map(|b| Instant::now() + b);

    let edges = branch_order(&host);
    if edges.len() > MAX_SEARCH_EDGES {
        return bounds_only(&host, class, objective, lower);
    }
    let mut ctx = Ctx::new(&host, &edges, class, deadline);
    if class == CoverClass::CoInterval && objective == Objective::Globality {
        // Host edges that pairwise induce a two-matching can never share a
        // bag, so a clique of such edges forces that many bags.
        lower = lower.max(ctx.conflict_clique_bound());
    }

    let ceiling = match objective {
        Objective::Globality => edges.len(),
        Objective::Locality => (0..host.n()).map(|v| host.degree(v)).max().unwrap_or(1),
    };
    for budget in lower..=ceiling {
        match ctx.search(budget, objective) {
            SearchResult::Found(bags) => {
                return Outcome::Exact(finish(host, bags, class, budget, objective));
            }
            SearchResult::Infeasible => continue,
            SearchResult::TimedOut => {
                return bounds_only(&host, class, objective, budget);
            }
        }
    }
    unreachable!("singleton bags give a valid cover at the ceiling");
}

/// Greedy upper bound used when the exact search cannot finish: grow one
/// bag at a time, adding uncovered edges as long as the bag stays in class.
fn greedy_cover(host: &Graph, class: CoverClass) -> CoCover {
    let mut uncovered = branch_order(host);
    let mut bags: Vec<Vec<(usize, usize)>> = Vec::new();
    while let Some(&first) = uncovered.first() {
        let mut bag = vec![first];
        let mut rest = Vec::new();
        for &e in &uncovered[1..] {
            bag.push(e);
            if !class_member(&spanned(host, &bag), class) {
                bag.pop();
                rest.push(e);
            }
        }
        bag.sort();
        bags.push(bag);
        uncovered = rest;
    }
    CoCover {
        host: host.clone(),
        bags,
        class,
    }
}

fn spanned(host: &Graph, bag: &[(usize, usize)]) -> Graph {
    let cover = CoCover {
        host: host.clone(),
        bags: vec![bag.to_vec()],
        class: CoverClass::CoInterval,
    };
    cover.spanned_subgraph(0).expect("bag edges come from host")
}

fn bounds_only(host: &Graph, class: CoverClass, objective: Objective, lower: usize) -> Outcome {
    let witness = greedy_cover(host, class);
    let stats = verify_cover(&witness).expect("greedy cover is valid by construction");
    let upper = match objective {
        Objective::Globality => stats.globality,
        Objective::Locality => stats.locality,
    };
    if upper <= lower {
        return Outcome::Exact(Solution {
            value: upper,
            witness,
            stats,
        });
    }
    Outcome::Budget(Bounds {
        lower,
        upper,
        witness: Some(witness),
    })
}

/// One bag per edge-bearing connected component of the host.
fn component_bags(host: &Graph) -> Vec<Vec<(usize, usize)>> {
    let mut bags = Vec::new();
    for comp in host.components() {
        let bag: Vec<(usize, usize)> = host
            .edges()
            .into_iter()
            .filter(|&(u, _)| comp.contains(u))
            .collect();
        if !bag.is_empty() {
            bags.push(bag);
        }
    }
    bags
}

fn finish(
    host: Graph,
    bags: Vec<Vec<(usize, usize)>>,
    class: CoverClass,
    value: usize,
    objective: Objective,
) -> Solution {
    let witness = CoCover { host, bags, class };
    let stats = verify_cover(&witness).expect("search produced an invalid cover");
    let achieved = match objective {
        Objective::Globality => stats.globality,
        Objective::Locality => stats.locality,
    };
    assert_eq!(achieved, value, "witness does not attain the claimed value");
    Solution {
        value,
        witness,
        stats,
    }
}

/// Host edges sorted by descending endpoint degree sum, ties lexicographic.
/// High-degree edges are the most constrained, so fixing them first shrinks
/// the tree.
fn branch_order(host: &Graph) -> Vec<(usize, usize)> {
    let mut edges = host.edges();
    edges.sort_by_key(|&(u, v)| (std::cmp::Reverse(host.degree(u) + host.degree(v)), u, v));
    edges
}

enum SearchResult {
    Found(Vec<Vec<(usize, usize)>>),
    Infeasible,
    TimedOut,
}

struct Bag {
    edges: u64,
    support: u64,
}

struct Ctx<'a> {
    host: &'a Graph,
    edges: &'a [(usize, usize)],
    class: CoverClass,
    /// For each unordered pair of vertex-disjoint edges, the set of edge
    /// indices that are cross pairs between their endpoints; `u64::MAX`
    /// marks pairs sharing an endpoint (never an induced two-matching).
    crosses: Vec<Vec<u64>>,
    /// Recognition results per bag edge set.
    memo: HashMap<u64, bool>,
    deadline: Option<Instant>,
    ticks: u32,
    timed_out: bool,
}

impl<'a> Ctx<'a> {
    fn new(
        host: &'a Graph,
        edges: &'a [(usize, usize)],
        class: CoverClass,
        deadline: Option<Instant>,
    ) -> Self {
        let m = edges.len();
        let index: HashMap<(usize, usize), usize> = edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| ((u.min(v), u.max(v)), i))
            .collect();
        let mut crosses = vec![vec![u64::MAX; m]; m];
        for i in 0..m {
            let (a, b) = edges[i];
            for j in i + 1..m {
                let (c, d) = edges[j];
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                let mut mask = 0u64;
                for (x, y) in [(a, c), (a, d), (b, c), (b, d)] {
                    if let Some(&k) = index.get(&(x.min(y), x.max(y))) {
                        mask |= 1 << k;
                    }
                }
                crosses[i][j] = mask;
                crosses[j][i] = mask;
            }
        }
        Ctx {
            host,
            edges,
            class,
            crosses,
            memo: HashMap::new(),
            deadline,
            ticks: 0,
            timed_out: false,
        }
    }

    /// Greedy clique among host edges whose cross pairs are entirely absent
    /// from the host: such a pair is an induced two-matching in the host
    /// itself, so no co-interval bag can hold both.
    fn conflict_clique_bound(&self) -> usize {
        let m = self.edges.len();
        let mut adj = vec![0u64; m];
        for (i, row) in adj.iter_mut().enumerate() {
            for j in 0..m {
                if i != j && self.crosses[i][j] == 0 {
                    *row |= 1 << j;
                }
            }
        }
        let mut best = 1;
        for seed in 0..m {
            let mut clique = 1usize;
            let mut cand = adj[seed];
            while cand != 0 {
                let mut pick = cand.trailing_zeros() as usize;
                let mut pick_score = 0;
                let mut scan = cand;
                while scan != 0 {
                    let x = scan.trailing_zeros() as usize;
                    scan &= scan - 1;
                    let score = (adj[x] & cand).count_ones();
                    if score > pick_score {
                        pick_score = score;
                        pick = x;
                    }
                }
                clique += 1;
                cand &= adj[pick];
            }
            best = best.max(clique);
        }
        best
    }

    fn out_of_time(&mut self) -> bool {
        if self.timed_out {
            return true;
        }
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks.is_multiple_of(1024) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    fn bag_is_class(&mut self, bag_edges: u64) -> bool {
        if let Some(&ok) = self.memo.get(&bag_edges) {
            return ok;
        }
        let list: Vec<(usize, usize)> = (0..self.edges.len())
            .filter(|&i| bag_edges >> i & 1 == 1)
            .map(|i| self.edges[i])
            .collect();
        let ok = class_member(&spanned(self.host, &list), self.class);
        self.memo.insert(bag_edges, ok);
        ok
    }

    fn leaf_ok(&mut self, bags: &[Bag]) -> bool {
        let sets: Vec<u64> = bags.iter().map(|b| b.edges).collect();
        sets.into_iter().all(|e| self.bag_is_class(e))
    }

    /// Bitmask of edge indices strictly after `p` in the branch order.
    fn unassigned_after(&self, p: usize) -> u64 {
        let m = self.edges.len();
        if p + 1 >= m {
            0
        } else {
            (!0u64 >> (64 - m)) & (!0u64 << (p + 1))
        }
    }

    /// Whether putting edge `e` into `bag` creates a pair of bag edges that
    /// is certain to remain an induced two-matching in every completion.
    /// `unassigned` is the set of edges still free to enter the bag later.
    fn forces_two_matching(&self, bag: &Bag, e: usize, unassigned: u64) -> bool {
        let live = bag.edges | 1 << e | unassigned;
        let mut members = match self.class {
            CoverClass::CoInterval => bag.edges,
            // Only pairs already connected inside the bag are pinned to one
            // component of every completion.
            CoverClass::UnionCoInterval => self.component_of(bag, e) & !(1u64 << e),
        };
        while members != 0 {
            let f = members.trailing_zeros() as usize;
            members &= members - 1;
            let cr = self.crosses[e][f];
            if cr != u64::MAX && cr & live == 0 {
                return true;
            }
        }
        false
    }

    /// Edge set of the connected component of `e` inside `bag` plus `e`.
    fn component_of(&self, bag: &Bag, e: usize) -> u64 {
        let (u, v) = self.edges[e];
        let mut verts = 1u64 << u | 1 << v;
        let mut comp = 1u64 << e;
        loop {
            let mut grew = false;
            let mut rest = bag.edges & !comp;
            while rest != 0 {
                let f = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                let (a, b) = self.edges[f];
                if verts >> a & 1 == 1 || verts >> b & 1 == 1 {
                    comp |= 1 << f;
                    verts |= 1u64 << a | 1 << b;
                    grew = true;
                }
            }
            if !grew {
                return comp;
            }
        }
    }

    fn support_of(&self, edges: u64) -> u64 {
        let mut s = 0u64;
        let mut m = edges;
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            let (u, v) = self.edges[i];
            s |= 1u64 << u | 1 << v;
        }
        s
    }

    fn search(&mut self, budget: usize, objective: Objective) -> SearchResult {
        self.timed_out = false;
        let mut bags: Vec<Bag> = Vec::new();
        let found = match objective {
            Objective::Globality => {
                // Admissible assignment masks per number of open bags: any
                // nonempty subset of the open bags plus a contiguous run of
                // fresh ones. Fresh bags are interchangeable, so only the
                // run length matters; this is the whole symmetry break.
                let mut table: Vec<Vec<u64>> = Vec::with_capacity(budget + 1);
                for open in 0..=budget {
                    let mut masks: Vec<u64> = (1u64..1 << budget)
                        .filter(|mask| {
                            let fresh = mask >> open;
                            fresh & (fresh + 1) == 0
                        })
                        .collect();
                    masks.sort_by_key(|m| m.count_ones());
                    table.push(masks);
                }
                self.go_global(0, &table, &mut bags)
            }
            Objective::Locality => {
                let mut loads = vec![0u32; self.host.n()];
                self.go_local(0, budget, &mut bags, &mut loads)
            }
        };
        if found {
            let bag_lists = bags
                .iter()
                .map(|b| {
                    let mut list: Vec<(usize, usize)> = (0..self.edges.len())
                        .filter(|&i| b.edges >> i & 1 == 1)
                        .map(|i| self.edges[i])
                        .collect();
                    list.sort();
                    list
                })
                .collect();
            SearchResult::Found(bag_lists)
        } else if self.timed_out {
            SearchResult::TimedOut
        } else {
            SearchResult::Infeasible
        }
    }

    /// Fixed bag count: assign edge `p` to every admissible subset of bags,
    /// smallest subsets first.
    fn go_global(&mut self, p: usize, table: &[Vec<u64>], bags: &mut Vec<Bag>) -> bool {
        if self.out_of_time() {
            return false;
        }
        if p == self.edges.len() {
            return self.leaf_ok(bags);
        }
        let unassigned = self.unassigned_after(p);
        let (u, v) = self.edges[p];
        let open = bags.len();
        let open_mask = if open == 0 { 0 } else { !0u64 >> (64 - open) };
        for i in 0..table[open].len() {
            if self.timed_out {
                return false;
            }
            let mask = table[open][i];
            let mut blocked = false;
            let mut scan = mask & open_mask;
            while scan != 0 {
                let b = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                if self.forces_two_matching(&bags[b], p, unassigned) {
                    blocked = true;
                    break;
                }
            }
            if blocked {
                continue;
            }
            let mut scan = mask;
            while scan != 0 {
                let b = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                if b >= bags.len() {
                    bags.push(Bag {
                        edges: 0,
                        support: 0,
                    });
                }
                bags[b].edges |= 1 << p;
                bags[b].support |= 1u64 << u | 1 << v;
            }
            if self.go_global(p + 1, table, bags) {
                return true;
            }
            let mut scan = mask & open_mask;
            while scan != 0 {
                let b = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                bags[b].edges &= !(1u64 << p);
                bags[b].support = self.support_of(bags[b].edges);
            }
            bags.truncate(open);
        }
        false
    }

    /// Open-ended bag count, per-vertex load budget `s`. Every bag an edge
    /// joins puts both endpoints in that bag's support, so an edge joins at
    /// most `s` bags; subsets are enumerated by [`Self::local_subsets`].
    fn go_local(&mut self, p: usize, s: usize, bags: &mut Vec<Bag>, loads: &mut [u32]) -> bool {
        if self.out_of_time() {
            return false;
        }
        if p == self.edges.len() {
            return self.leaf_ok(bags);
        }
        let (u, v) = self.edges[p];
        let mut singles: Vec<usize> = Vec::new();
        for (b, bag) in bags.iter().enumerate() {
            let cu = u32::from(bag.support >> u & 1 == 0);
            let cv = u32::from(bag.support >> v & 1 == 0);
            if loads[u] + cu <= s as u32 && loads[v] + cv <= s as u32 {
                singles.push(b);
            }
        }
        // Cheapest load increase first; the search backbone then behaves
        // like first-fit with backtracking.
        singles.sort_by_key(|&b| {
            let cu = u32::from(bags[b].support >> u & 1 == 0);
            let cv = u32::from(bags[b].support >> v & 1 == 0);
            (cu + cv, b)
        });
        let mut chosen: Vec<usize> = Vec::new();
        self.local_subsets(p, s, bags, loads, &singles, &mut chosen, 0)
    }

    /// Enumerates admissible bag subsets for edge `p`: each call first
    /// applies the current subset (if nonempty) and recurses to the next
    /// edge, then tries extending the subset with a further existing bag or
    /// one fresh bag. Fresh bags are interchangeable, so a single fresh
    /// extension step per level suffices; deeper levels may add more.
    #[allow(clippy::too_many_arguments)]
    fn local_subsets(
        &mut self,
        p: usize,
        s: usize,
        bags: &mut Vec<Bag>,
        loads: &mut [u32],
        singles: &[usize],
        chosen: &mut Vec<usize>,
        next_single: usize,
    ) -> bool {
        if self.timed_out {
            return false;
        }
        let (u, v) = self.edges[p];
        if !chosen.is_empty() {
            let open = bags.len();
            let mut applied: Vec<(usize, bool, bool)> = Vec::with_capacity(chosen.len());
            for &b in chosen.iter() {
                if b >= bags.len() {
                    bags.push(Bag {
                        edges: 0,
                        support: 0,
                    });
                }
                let had_u = bags[b].support >> u & 1 == 1;
                let had_v = bags[b].support >> v & 1 == 1;
                bags[b].edges |= 1 << p;
                bags[b].support |= 1u64 << u | 1 << v;
                if !had_u {
                    loads[u] += 1;
                }
                if !had_v {
                    loads[v] += 1;
                }
                applied.push((b, had_u, had_v));
            }
            let viable = self.saturation_ok(p, s, bags, loads);
            if viable && self.go_local(p + 1, s, bags, loads) {
                return true;
            }
            for &(b, had_u, had_v) in applied.iter().rev() {
                bags[b].edges &= !(1u64 << p);
                if !had_u {
                    loads[u] -= 1;
                }
                if !had_v {
                    loads[v] -= 1;
                }
                if b < open {
                    bags[b].support = self.support_of(bags[b].edges);
                }
            }
            bags.truncate(open);
        }
        if chosen.len() >= s {
            return false;
        }
        let unassigned = self.unassigned_after(p);
        for i in next_single..singles.len() {
            let b = singles[i];
            let (du, dv) = self.subset_cost(u, v, bags, chosen, Some(b));
            if loads[u] + du > s as u32 || loads[v] + dv > s as u32 {
                continue;
            }
            if self.forces_two_matching(&bags[b], p, unassigned) {
                continue;
            }
            chosen.push(b);
            if self.local_subsets(p, s, bags, loads, singles, chosen, i + 1) {
                return true;
            }
            chosen.pop();
        }
        let (du, dv) = self.subset_cost(u, v, bags, chosen, None);
        if loads[u] + du <= s as u32 && loads[v] + dv <= s as u32 {
            let fresh_count = chosen.iter().filter(|&&c| c >= bags.len()).count();
            chosen.push(bags.len() + fresh_count);
            if self.local_subsets(p, s, bags, loads, singles, chosen, singles.len()) {
                return true;
            }
            chosen.pop();
        }
        false
    }

    /// Load increase on `u` and `v` if `chosen` plus one extra candidate
    /// were all applied. An `extra` of `None` stands for one fresh bag.
    fn subset_cost(
        &self,
        u: usize,
        v: usize,
        bags: &[Bag],
        chosen: &[usize],
        extra: Option<usize>,
    ) -> (u32, u32) {
        let mut du = 0;
        let mut dv = 0;
        for c in chosen.iter().copied().map(Some).chain([extra]) {
            match c {
                Some(b) if b < bags.len() => {
                    du += u32::from(bags[b].support >> u & 1 == 0);
                    dv += u32::from(bags[b].support >> v & 1 == 0);
                }
                _ => {
                    du += 1;
                    dv += 1;
                }
            }
        }
        (du, dv)
    }

    /// Once both endpoints of a still-unassigned host edge are saturated,
    /// that edge can only go into a bag already holding both endpoints; if
    /// no such bag exists the branch is dead.
    fn saturation_ok(&self, p: usize, s: usize, bags: &[Bag], loads: &[u32]) -> bool {
        for q in p + 1..self.edges.len() {
            let (x, y) = self.edges[q];
            if loads[x] == s as u32
                && loads[y] == s as u32
                && !bags
                    .iter()
                    .any(|b| b.support >> x & 1 == 1 && b.support >> y & 1 == 1)
            {
                return false;
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn complete_graphs_have_value_zero() {
        for n in 1..=6 {
            let k = families::complete(n).unwrap();
            assert_eq!(boxicity(&k).value, 0);
            assert_eq!(union_boxicity(&k).value, 0);
            assert_eq!(local_boxicity(&k).value, 0);
            assert_eq!(local_boxicity_union_class(&k).value, 0);
        }
    }

    #[test]
    fn four_cycle_values() {
        let c4 = families::cycle(4).unwrap();
        let sol = boxicity(&c4);
        assert_eq!(sol.value, 2);
        assert_eq!(sol.stats.globality, 2);
        assert_eq!(union_boxicity(&c4).value, 1);
        assert_eq!(local_boxicity(&c4).value, 1);
    }

    #[test]
    fn five_cycle_values() {
        let c5 = families::cycle(5).unwrap();
        assert_eq!(boxicity(&c5).value, 2);
        assert_eq!(union_boxicity(&c5).value, 2);
        assert_eq!(local_boxicity(&c5).value, 2);
        assert_eq!(local_boxicity_union_class(&c5).value, 2);
    }

    #[test]
    fn octahedron_values() {
        let oct = families::octahedron();
        assert_eq!(boxicity(&oct).value, 3);
        assert_eq!(union_boxicity(&oct).value, 1);
        assert_eq!(local_boxicity(&oct).value, 1);
        assert_eq!(local_boxicity_union_class(&oct).value, 1);
    }

    #[test]
    fn matching_complements_have_boxicity_k() {
        for k in 1..=4 {
            let h = families::matching(k).unwrap().complement();
            assert_eq!(boxicity(&h).value, k, "matching size {k}");
            assert_eq!(union_boxicity(&h).value, 1);
            assert_eq!(local_boxicity(&h).value, 1);
        }
    }

    #[test]
    fn interval_graphs_have_boxicity_one() {
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(boxicity(&p4).value, 1);
        assert_eq!(local_boxicity(&p4).value, 1);
    }

    #[test]
    fn box_f_dichotomy() {
        assert_eq!(box_f(&families::cycle(4).unwrap()), None);
        assert_eq!(box_f(&families::complete(5).unwrap()), Some(1));
        let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(box_f(&p4), Some(1));
    }

    #[test]
    fn witnesses_verify_with_matching_stats() {
        for h in [
            families::cycle(5).unwrap(),
            families::cycle(6).unwrap(),
            families::octahedron(),
        ] {
            let sol = boxicity(&h);
            let stats = verify_cover(&sol.witness).unwrap();
            assert_eq!(stats.globality, sol.value);
            let loc = local_boxicity(&h);
            let stats = verify_cover(&loc.witness).unwrap();
            assert_eq!(stats.locality, loc.value);
        }
    }

    #[test]
    fn petersen_local_boxicity_is_two() {
        let sol = local_boxicity(&families::petersen());
        assert_eq!(sol.value, 2);
        assert_eq!(sol.stats.locality, 2);
    }

    #[test]
    fn budget_zero_reports_sound_bounds() {
        let opts = SolveOptions {
            time_budget: Some(Duration::from_millis(0)),
        };
        match local_boxicity_with(&families::petersen(), &opts) {
            Outcome::Budget(b) => {
                assert!(b.lower >= 2);
                assert!(b.upper >= b.lower);
                let w = b.witness.unwrap();
                let stats = verify_cover(&w).unwrap();
                assert_eq!(stats.locality, b.upper);
            }
            Outcome::Exact(sol) => assert_eq!(sol.value, 2),
        }
    }
}
