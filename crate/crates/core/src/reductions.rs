//! Vertex Cover gadgets showing hardness of exact-diameter deletion, and the
//! compositions that lift them to larger diameters.
//!
//! Every generator measures the diameter of what it builds and fails with
//! [`ReductionError::DiameterMismatch`] if it differs from the claimed value.

use std::fmt;

use serde::{Serialize, Serializer};
use serde_json::{json, Map, Value};

use crate::error::ReductionError;
use crate::graph::{Edge, EdgeSet, Graph};
use crate::metrics::{diameter_value, distance};
use crate::oracle::{min_deletion_from_pool, OracleBudget, Target};

/// Does `gamma` have a vertex cover of size at most `c`?
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VcInstance {
    pub gamma: Graph,
    pub c: usize,
}

impl VcInstance {
    pub fn new(gamma: Graph, c: usize) -> Self {
        VcInstance { gamma, c }
    }
}

/// What a vertex of a generated graph stands for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    S,
    T,
    /// `v_index` of the path built for vertex `w` of the cover instance.
    Path { copy: usize, w: usize, index: u8 },
    /// `e_index` of the gadget for edge `u-v` (`u < v`).
    EdgeVertex { copy: usize, u: usize, v: usize, index: u8 },
    Clique { which: u8, index: usize },
    Q(usize),
    R(usize),
}

impl Role {
    pub fn is_clique(self) -> bool {
        matches!(self, Role::Clique { .. })
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let copy = |f: &mut fmt::Formatter<'_>, c: usize| if c > 0 { write!(f, "#{c}") } else { Ok(()) };
        match *self {
            Role::S => f.write_str("s"),
            Role::T => f.write_str("t"),
            Role::Path { copy: c, w, index } => {
                write!(f, "v{index}(w{w})")?;
                copy(f, c)
            }
            Role::EdgeVertex { copy: c, u, v, index } => {
                write!(f, "e{index}({u}-{v})")?;
                copy(f, c)
            }
            Role::Clique { which, index } => write!(f, "K{which}[{index}]"),
            Role::Q(i) => write!(f, "q{i}"),
            Role::R(i) => write!(f, "r{i}"),
        }
    }
}

impl Serialize for Role {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A generated instance: graph, budget, target and vertex roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub graph: Graph,
    /// Deletion budget.
    pub k: usize,
    /// `roles[v]` describes vertex `v`.
    pub roles: Vec<Role>,
    /// Measured diameter of `graph`.
    pub diameter: usize,
    /// Diameter the instance asks for.
    pub target_d: usize,
    /// How the instance was composed.
    pub source: String,
    pub s: usize,
    pub t: usize,
    /// Vertex where a further path or triangle chain attaches.
    pub anchor: usize,
    /// Edges `q_{i-1} q_i` of triangle chains, deleted by every solution.
    pub chain_edges: Vec<Edge>,
    next_q: usize,
}

impl ReductionArtifact {
    /// Edges with no endpoint in a clique. The hardness argument shows an
    /// optimal deletion set never needs any other edge.
    pub fn restricted_pool(&self) -> Vec<Edge> {
        self.graph
            .edges()
            .iter()
            .copied()
            .filter(|e| !self.roles[e.u()].is_clique() && !self.roles[e.v()].is_clique())
            .collect()
    }

    pub fn vertices_where(&self, pred: impl Fn(Role) -> bool) -> Vec<usize> {
        (0..self.roles.len()).filter(|&v| pred(self.roles[v])).collect()
    }

    /// JSON sidecar `{n, m, k, target_d, roles, source}`.
    pub fn sidecar(&self) -> Value {
        let roles: Map<String, Value> = self
            .roles
            .iter()
            .enumerate()
            .map(|(v, r)| (v.to_string(), Value::String(r.to_string())))
            .collect();
        json!({
            "n": self.graph.n(),
            "m": self.graph.m(),
            "k": self.k,
            "target_d": self.target_d,
            "roles": roles,
            "source": self.source,
        })
    }

    /// Deletion set built from a vertex cover: for every copy, `s v_2` and
    /// `v_3 t` for covered `v`, `v_2 v_3` otherwise; plus every chain edge.
    pub fn cover_witness(&self, cover: &[usize]) -> EdgeSet {
        let find = |copy: usize, w: usize, index: u8| {
            self.roles
                .iter()
                .position(|&r| r == Role::Path { copy, w, index })
        };
        let mut f: EdgeSet = self.chain_edges.iter().copied().collect();
        for copy in 0.. {
            if find(copy, 0, 2).is_none() {
                break;
            }
            for w in 0.. {
                let (Some(v2), Some(v3)) = (find(copy, w, 2), find(copy, w, 3)) else { break };
                if cover.contains(&w) {
                    f.insert(Edge::new(self.s, v2));
                    f.insert(Edge::new(v3, self.t));
                } else {
                    f.insert(Edge::new(v2, v3));
                }
            }
        }
        f
    }
}

struct Builder {
    roles: Vec<Role>,
    edges: Vec<Edge>,
}

impl Builder {
    fn add(&mut self, r: Role) -> usize {
        self.roles.push(r);
        self.roles.len() - 1
    }

    fn join(&mut self, a: usize, b: usize) {
        self.edges.push(Edge::new(a, b));
    }

    fn join_all(&mut self, left: &[usize], right: &[usize]) {
        for &a in left {
            for &b in right {
                self.join(a, b);
            }
        }
    }

    fn clique(&mut self, vs: &[usize]) {
        for (i, &a) in vs.iter().enumerate() {
            for &b in &vs[i + 1..] {
                self.join(a, b);
            }
        }
    }
}

fn check_diameter(g: &Graph, claimed: usize) -> Result<(), ReductionError> {
    let found = diameter_value(g);
    if found != claimed {
        return Err(ReductionError::DiameterMismatch {
            claimed,
            found: found.to_string(),
        });
    }
    Ok(())
}

fn gadget(vc: &VcInstance, copies: usize, four_cliques: bool) -> Result<ReductionArtifact, ReductionError> {
    let gamma = &vc.gamma;
    if gamma.m() == 0 {
        return Err(ReductionError::InvalidParameters(
            "the cover instance needs at least one edge".into(),
        ));
    }
    let base_k = gamma.n() + vc.c;
    let clique_size = copies * (base_k + 1);
    let mut b = Builder {
        roles: Vec::new(),
        edges: Vec::new(),
    };
    let s = b.add(Role::S);
    let t = b.add(Role::T);

    // (v1, v2, e1) hang off K1, (v3, v4, e2) off K2
    let mut near_k1 = Vec::new();
    let mut near_k2 = Vec::new();
    for copy in 0..copies {
        let mut p = Vec::with_capacity(gamma.n());
        for w in 0..gamma.n() {
            let v: [usize; 4] = std::array::from_fn(|i| b.add(Role::Path { copy, w, index: i as u8 + 1 }));
            b.join(v[0], v[1]);
            b.join(v[1], v[2]);
            b.join(v[2], v[3]);
            b.join(s, v[0]);
            b.join(s, v[1]);
            b.join(t, v[2]);
            b.join(t, v[3]);
            near_k1.extend([v[0], v[1]]);
            near_k2.extend([v[2], v[3]]);
            p.push(v);
        }
        for e in gamma.edges() {
            let (u, v) = e.endpoints();
            let e1 = b.add(Role::EdgeVertex { copy, u, v, index: 1 });
            let e2 = b.add(Role::EdgeVertex { copy, u, v, index: 2 });
            // v2 - e1 - u3 and v3 - e2 - u2
            b.join(p[v][1], e1);
            b.join(e1, p[u][2]);
            b.join(p[v][2], e2);
            b.join(e2, p[u][1]);
            near_k1.push(e1);
            near_k2.push(e2);
        }
    }

    let mut cliques = Vec::new();
    for which in 1..=if four_cliques { 4 } else { 2 } {
        let members: Vec<usize> = (0..clique_size).map(|index| b.add(Role::Clique { which, index })).collect();
        cliques.push(members);
    }
    let k12: Vec<usize> = cliques[0].iter().chain(&cliques[1]).copied().collect();
    b.clique(&k12);
    b.join_all(&cliques[0], &near_k1);
    b.join_all(&cliques[1], &near_k2);
    if four_cliques {
        b.clique(&cliques[2]);
        b.clique(&cliques[3]);
        b.join_all(&cliques[2], &cliques[0]);
        b.join_all(&cliques[2], &cliques[3]);
        b.join_all(&cliques[3], &cliques[1]);
    }

    let graph = Graph::new(b.roles.len(), b.edges)?;
    let diameter = if four_cliques { 4 } else { 3 };
    check_diameter(&graph, diameter)?;
    if four_cliques {
        for (from, to) in [(cliques[2][0], t), (cliques[3][0], s)] {
            let d = distance(&graph, from, to)?;
            if d != 4 {
                return Err(ReductionError::DiameterMismatch {
                    claimed: 4,
                    found: format!("{d} between {} and {}", b.roles[from], b.roles[to]),
                });
            }
        }
    }
    let variant = if four_cliques { "diam4" } else { "diam3" };
    let mut source = format!(
        "vc-{variant}(|W|={}, |E'|={}, c={})",
        gamma.n(),
        gamma.m(),
        vc.c
    );
    if copies > 1 {
        source.push_str(&format!(" x{copies} copies, s and t joined to every copy"));
    }
    Ok(ReductionArtifact {
        graph,
        k: copies * base_k,
        roles: b.roles,
        diameter,
        target_d: 5,
        source,
        s,
        t,
        anchor: t,
        chain_edges: Vec::new(),
        next_q: 1,
    })
}

/// Diameter-3 instance asking for diameter 5 with `k = |W| + c`.
pub fn reduce_vc_meda5_diam3(vc: &VcInstance) -> Result<ReductionArtifact, ReductionError> {
    gadget(vc, 1, false)
}

/// Diameter-4 variant with two further cliques `K3`, `K4`.
pub fn reduce_vc_meda5_diam4(vc: &VcInstance) -> Result<ReductionArtifact, ReductionError> {
    gadget(vc, 1, true)
}

/// `delta + 1` independent copies of the diameter-4 gadget sharing `s`, `t`
/// and cliques scaled by `delta + 1`; the budget scales the same way.
pub fn amplify_copies(vc: &VcInstance, delta: usize) -> Result<ReductionArtifact, ReductionError> {
    if delta < 1 {
        return Err(ReductionError::InvalidParameters("delta must be at least 1".into()));
    }
    gadget(vc, delta + 1, true)
}

fn attach_path(art: &ReductionArtifact, len: usize) -> Result<ReductionArtifact, ReductionError> {
    let mut out = art.clone();
    if len == 0 {
        return Ok(out);
    }
    let n = art.graph.n();
    let mut edges = art.graph.edges().to_vec();
    let mut prev = art.anchor;
    for i in 0..len {
        out.roles.push(Role::Q(art.next_q + i));
        edges.push(Edge::new(prev, n + i));
        prev = n + i;
    }
    out.graph = Graph::new(n + len, edges)?;
    out.anchor = prev;
    out.next_q += len;
    out.diameter += len;
    out.target_d += len;
    out.source.push_str(&format!(
        " + path q{}..q{}",
        art.next_q,
        art.next_q + len - 1
    ));
    check_diameter(&out.graph, out.diameter)?;
    Ok(out)
}

/// Hangs a path off the anchor so the diameter becomes `target_d`; the gap
/// to the asked diameter and the budget are unchanged.
pub fn extend_path(art: &ReductionArtifact, target_d: usize) -> Result<ReductionArtifact, ReductionError> {
    if target_d < 5 || target_d <= art.diameter {
        return Err(ReductionError::InvalidParameters(format!(
            "path extension needs a target of at least 5 above the current diameter {}, got {target_d}",
            art.diameter
        )));
    }
    attach_path(art, target_d - art.diameter)
}

/// Adds `k_steps` triangles in a row at the anchor. Diameter and budget grow
/// by `k_steps`, the asked diameter by `2 k_steps`.
pub fn triangle_chain(art: &ReductionArtifact, k_steps: usize) -> Result<ReductionArtifact, ReductionError> {
    if k_steps < 1 {
        return Err(ReductionError::InvalidParameters("k_steps must be at least 1".into()));
    }
    let mut out = art.clone();
    let mut edges = art.graph.edges().to_vec();
    let mut prev = art.anchor;
    let mut n = art.graph.n();
    for i in 0..k_steps {
        let (q, r) = (n, n + 1);
        out.roles.push(Role::Q(art.next_q + i));
        out.roles.push(Role::R(art.next_q + i));
        edges.extend([Edge::new(prev, q), Edge::new(prev, r), Edge::new(r, q)]);
        out.chain_edges.push(Edge::new(prev, q));
        prev = q;
        n += 2;
    }
    out.graph = Graph::new(n, edges)?;
    out.anchor = prev;
    out.next_q += k_steps;
    out.k += k_steps;
    out.diameter += k_steps;
    out.target_d += 2 * k_steps;
    out.source.push_str(&format!(" + triangles x{k_steps}"));
    check_diameter(&out.graph, out.diameter)?;
    Ok(out)
}

/// Instance of diameter `d` asking for `d + k`, for `d >= 5` and
/// `1 <= k <= d - 1`.
///
/// * `k = 1`: diameter-4 gadget plus a path.
/// * `k = 2`: two gadget copies, a path to diameter `d - 1`, one triangle.
/// * `k >= 3`: diameter-3 gadget, a path to diameter `d - k + 2`, then
///   `k - 2` triangles.
pub fn compose_general(d: usize, k: usize, vc: &VcInstance) -> Result<ReductionArtifact, ReductionError> {
    if d < 5 || k < 1 || k > d - 1 {
        return Err(ReductionError::InvalidParameters(format!(
            "need d >= 5 and 1 <= k <= d - 1, got d={d}, k={k}"
        )));
    }
    let art = match k {
        1 => extend_path(&reduce_vc_meda5_diam4(vc)?, d)?,
        2 => {
            let base = amplify_copies(vc, 1)?;
            let base = if d - 1 > base.diameter { extend_path(&base, d - 1)? } else { base };
            triangle_chain(&base, 1)?
        }
        _ => {
            let base = reduce_vc_meda5_diam3(vc)?;
            let base = attach_path(&base, d - k + 2 - base.diameter)?;
            triangle_chain(&base, k - 2)?
        }
    };
    debug_assert_eq!((art.diameter, art.target_d), (d, d + k));
    Ok(art)
}

/// Smallest vertex cover, lexicographically first among the smallest.
pub fn min_vertex_cover(gamma: &Graph) -> Result<Vec<usize>, ReductionError> {
    let n = gamma.n();
    if n > 20 {
        return Err(ReductionError::InvalidParameters(format!(
            "brute-force vertex cover supports at most 20 vertices, got {n}"
        )));
    }
    let covers = |mask: u32| gamma.edges().iter().all(|e| mask >> e.u() & 1 == 1 || mask >> e.v() & 1 == 1);
    let members = |mask: u32| (0..n).filter(|&v| mask >> v & 1 == 1).collect::<Vec<_>>();
    Ok((0u32..1 << n)
        .filter(|&m| covers(m))
        .map(members)
        .min_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
        .expect("the full vertex set is a cover"))
}

/// Outcome of checking one reduction instance against Vertex Cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub min_cover: usize,
    pub vc_yes: bool,
    pub artifact_yes: bool,
    /// Restricted-pool optimum when the artifact is a yes instance.
    pub witness: Option<EdgeSet>,
    pub agree: bool,
}

/// Decides `vc` by brute force and `art` with the restricted-pool oracle
/// (at most `art.k` deletions, diameter exactly `art.target_d`).
pub fn verify_equivalence(
    vc: &VcInstance,
    art: &ReductionArtifact,
    budget: &OracleBudget,
) -> Result<EquivalenceReport, ReductionError> {
    let min_cover = min_vertex_cover(&vc.gamma)?.len();
    let vc_yes = min_cover <= vc.c;
    let witness = min_deletion_from_pool(
        &art.graph,
        &art.restricted_pool(),
        Target::DiameterExactly(art.target_d),
        &budget.with_max_subset_size(art.k),
    )?;
    let artifact_yes = witness.is_some();
    Ok(EquivalenceReport {
        min_cover,
        vc_yes,
        artifact_yes,
        witness,
        agree: vc_yes == artifact_yes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, path};

    fn vc(gamma: Graph, c: usize) -> VcInstance {
        VcInstance::new(gamma, c)
    }

    #[test]
    fn diam3_shape() {
        let art = reduce_vc_meda5_diam3(&vc(complete(2), 1)).unwrap();
        assert_eq!(art.graph.n(), 20);
        assert_eq!(art.k, 3);
        assert_eq!(art.diameter, 3);
        assert_eq!(art.target_d, 5);
        assert_eq!(art.roles[0].to_string(), "s");
        let k1 = art.vertices_where(|r| matches!(r, Role::Clique { which: 1, .. }));
        let near = art.vertices_where(|r| {
            matches!(r, Role::Path { index: 1 | 2, .. } | Role::EdgeVertex { index: 1, .. })
        });
        assert_eq!(k1.len(), 4);
        assert!(k1.iter().all(|&a| near.iter().all(|&b| art.graph.has_edge(a, b))));
    }

    #[test]
    fn empty_gamma_is_rejected() {
        assert!(reduce_vc_meda5_diam3(&vc(Graph::empty(2), 1)).is_err());
    }

    #[test]
    fn diam4_shape() {
        let art = reduce_vc_meda5_diam4(&vc(complete(2), 1)).unwrap();
        assert_eq!(art.diameter, 4);
        assert_eq!(art.graph.n(), 2 + 8 + 2 + 4 * 4);
        assert_eq!(art.roles.len(), art.graph.n());
    }

    #[test]
    fn cover_witness_reaches_five() {
        for (gamma, cover) in [(complete(2), vec![0]), (complete(3), vec![0, 1]), (path(3), vec![1])] {
            let c = cover.len();
            for art in [
                reduce_vc_meda5_diam3(&vc(gamma.clone(), c)).unwrap(),
                reduce_vc_meda5_diam4(&vc(gamma.clone(), c)).unwrap(),
            ] {
                let f = art.cover_witness(&cover);
                assert!(f.len() <= art.k);
                assert_eq!(diameter_value(&art.graph.delete_edges(&f).unwrap()), 5);
            }
        }
    }

    #[test]
    fn small_equivalences() {
        let b = OracleBudget::default();
        for (gamma, c, expect) in [(complete(2), 1, true), (complete(3), 1, false), (complete(3), 2, true), (path(3), 1, true)] {
            let inst = vc(gamma, c);
            let art = reduce_vc_meda5_diam3(&inst).unwrap();
            let r = verify_equivalence(&inst, &art, &b).unwrap();
            assert_eq!((r.vc_yes, r.artifact_yes), (expect, expect));
        }
        let inst = vc(complete(2), 0);
        let r = verify_equivalence(&inst, &reduce_vc_meda5_diam4(&inst).unwrap(), &b).unwrap();
        assert!(r.agree && !r.vc_yes);
    }

    #[test]
    fn extensions() {
        let base = reduce_vc_meda5_diam4(&vc(complete(2), 1)).unwrap();
        let e5 = extend_path(&base, 5).unwrap();
        assert_eq!((e5.diameter, e5.target_d, e5.k), (5, 6, base.k));
        let e7 = extend_path(&base, 7).unwrap();
        assert_eq!(e7.graph.n(), base.graph.n() + 3);
        assert_eq!(e7.roles.last().unwrap().to_string(), "q3");
        assert!(extend_path(&base, 4).is_err());

        let c1 = triangle_chain(&base, 1).unwrap();
        assert_eq!((c1.diameter, c1.k, c1.target_d), (5, base.k + 1, 7));
        let c2 = triangle_chain(&base, 2).unwrap();
        assert_eq!(c2.diameter, 6);
        let cut = c2.graph.delete_edges(&c2.chain_edges.iter().copied().collect()).unwrap();
        assert!(crate::metrics::is_connected(&cut));
        assert!(triangle_chain(&base, 0).is_err());
    }

    #[test]
    fn amplified_copies() {
        let single = reduce_vc_meda5_diam4(&vc(complete(2), 1)).unwrap();
        let double = amplify_copies(&vc(complete(2), 1), 1).unwrap();
        assert_eq!(double.k, 2 * single.k);
        assert_eq!(double.diameter, 4);
        let gadget = |a: &ReductionArtifact| {
            a.vertices_where(|r| matches!(r, Role::Path { .. } | Role::EdgeVertex { .. })).len()
        };
        assert_eq!(gadget(&double), 2 * gadget(&single));
        assert!(amplify_copies(&vc(complete(2), 1), 0).is_err());
    }

    #[test]
    fn composition_routes() {
        let inst = vc(complete(2), 1);
        for (d, k) in [(5, 1), (5, 2), (6, 3), (5, 4), (8, 3)] {
            let art = compose_general(d, k, &inst).unwrap();
            assert_eq!((art.diameter, art.target_d), (d, d + k), "d={d} k={k}");
            assert_eq!(diameter_value(&art.graph), d);
        }
        assert!(compose_general(4, 1, &inst).is_err());
        assert!(compose_general(5, 5, &inst).is_err());
        assert!(compose_general(5, 2, &inst).unwrap().source.contains("x2 copies"));
    }

    #[test]
    fn vertex_cover_brute_force() {
        assert_eq!(min_vertex_cover(&complete(3)).unwrap(), vec![0, 1]);
        assert_eq!(min_vertex_cover(&path(3)).unwrap(), vec![1]);
        assert_eq!(min_vertex_cover(&Graph::empty(3)).unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn sidecar_keys() {
        let art = reduce_vc_meda5_diam3(&vc(complete(2), 1)).unwrap();
        let v = art.sidecar();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["k", "m", "n", "roles", "source", "target_d"]);
        assert_eq!(v["roles"]["2"], "v1(w0)");
    }
}
