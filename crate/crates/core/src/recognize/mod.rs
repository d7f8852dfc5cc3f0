//! Class membership tests that return checkable certificates.
//!
//! Every accept carries a witness and every reject carries an obstruction,
//! and both can be re-verified against the graph with
//! [`ClassCertificate::check`].

mod cycles;
mod forests;
mod interval;
mod perfect;

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{Edge, Graph};

pub use cycles::{find_even_hole, find_hole, induced_cycles, shorten_odd_cycle};
pub use forests::{
    is_cactus, is_caterpillar, is_constellation, is_forest_of_cacti, is_linear_forest, star_centers,
};
pub use interval::{is_claw_free_chordal, is_path_power, is_proper_interval};
pub use perfect::{is_bipartite, is_chordal, is_quasi_threshold};

/// Largest graph the exhaustive (exponential) recognizers accept.
pub const DESK_SCALE_VERTICES: usize = 16;

/// The graph classes the crate can recognize.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "kebab-case")
)]
pub enum ClassLabel {
    Bipartite,
    Chordal,
    QuasiThreshold,
    Cactus,
    ForestOfCacti,
    Caterpillar,
    Constellation,
    LinearForest,
    ClawFree,
    EvenHoleFree,
    Subcubic,
    ClawFreeChordal,
    ProperInterval,
    /// `P_n` or its square `P_n^2`.
    PathPower,
}

impl ClassLabel {
    pub const ALL: [ClassLabel; 14] = [
        ClassLabel::Bipartite,
        ClassLabel::Chordal,
        ClassLabel::QuasiThreshold,
        ClassLabel::Cactus,
        ClassLabel::ForestOfCacti,
        ClassLabel::Caterpillar,
        ClassLabel::Constellation,
        ClassLabel::LinearForest,
        ClassLabel::ClawFree,
        ClassLabel::EvenHoleFree,
        ClassLabel::Subcubic,
        ClassLabel::ClawFreeChordal,
        ClassLabel::ProperInterval,
        ClassLabel::PathPower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClassLabel::Bipartite => "bipartite",
            ClassLabel::Chordal => "chordal",
            ClassLabel::QuasiThreshold => "quasi-threshold",
            ClassLabel::Cactus => "cactus",
            ClassLabel::ForestOfCacti => "forest-of-cacti",
            ClassLabel::Caterpillar => "caterpillar",
            ClassLabel::Constellation => "constellation",
            ClassLabel::LinearForest => "linear-forest",
            ClassLabel::ClawFree => "claw-free",
            ClassLabel::EvenHoleFree => "even-hole-free",
            ClassLabel::Subcubic => "subcubic",
            ClassLabel::ClawFreeChordal => "claw-free-chordal",
            ClassLabel::ProperInterval => "proper-interval",
            ClassLabel::PathPower => "path-power",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|l| l.name() == name)
    }

    /// Classes whose members must be connected.
    pub fn requires_connected(self) -> bool {
        matches!(
            self,
            ClassLabel::Cactus | ClassLabel::Caterpillar | ClassLabel::PathPower
        )
    }

    /// Classes closed under deleting edges.
    pub fn is_edge_hereditary(self) -> bool {
        matches!(
            self,
            ClassLabel::Bipartite
                | ClassLabel::ForestOfCacti
                | ClassLabel::Constellation
                | ClassLabel::LinearForest
                | ClassLabel::Subcubic
        )
    }
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Evidence of membership.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "snake_case", tag = "kind", content = "data")
)]
pub enum Witness {
    Bipartition {
        left: Vec<usize>,
        right: Vec<usize>,
    },
    /// Each vertex's neighbors later in the order form a clique.
    EliminationOrder(Vec<usize>),
    /// Rooted forest whose ancestor relation is exactly the adjacency.
    /// Roots are the universal vertices peeled first.
    PeelForest {
        parent: Vec<Option<usize>>,
    },
    /// Edge-disjoint cycles spanning the cycle space, with how many of them
    /// each edge lies on.
    Cycles {
        cycles: Vec<Vec<usize>>,
        edge_cycle_count: Vec<(Edge, usize)>,
    },
    /// A path of the tree that every vertex lies on or next to.
    Spine(Vec<usize>),
    StarCenters(Vec<usize>),
    Paths(Vec<Vec<usize>>),
    MaxDegree(usize),
    /// No obstruction exists; established by exhaustive search.
    Exhaustive,
    /// For `u < v < w` in the order, `uw` adjacent implies `uv` and `vw` adjacent.
    UmbrellaOrder(Vec<usize>),
    /// Edges are exactly the pairs at distance at most `power` in `order`.
    PathPowerOrder {
        order: Vec<usize>,
        power: usize,
    },
}

/// Evidence of non-membership.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "snake_case", tag = "kind", content = "data")
)]
pub enum Obstruction {
    /// Induced odd cycle.
    OddCycle(Vec<usize>),
    /// Induced cycle of length at least 4.
    Hole(Vec<usize>),
    /// Induced cycle of even length at least 4.
    EvenHole(Vec<usize>),
    /// Induced path `a-b-c-d`.
    InducedP4([usize; 4]),
    /// Induced cycle `a-b-c-d-a`.
    InducedC4([usize; 4]),
    Claw {
        center: usize,
        leaves: [usize; 3],
    },
    /// Induced triangle `triangle` with private pendant `pendants[i]` on `triangle[i]`.
    Net {
        triangle: [usize; 3],
        pendants: [usize; 3],
    },
    /// Induced triangle `triangle` with `tips[i]` adjacent to exactly
    /// `triangle[i]` and `triangle[(i + 1) % 3]`.
    Tent {
        triangle: [usize; 3],
        tips: [usize; 3],
    },
    /// `a` and `b` lie in different components.
    Disconnected {
        a: usize,
        b: usize,
    },
    /// A cycle (not necessarily induced).
    Cycle(Vec<usize>),
    /// Two distinct cycles through one edge.
    SharedEdge {
        edge: Edge,
        first: Vec<usize>,
        second: Vec<usize>,
    },
    /// `center` with three neighbors `middle[i]`, each with a further
    /// neighbor `tips[i]`.
    SubdividedClaw {
        center: usize,
        middle: [usize; 3],
        tips: [usize; 3],
    },
    /// A path `a-b-c-d` (as a subgraph).
    PathOnFour([usize; 4]),
    HighDegree {
        vertex: usize,
        neighbors: [usize; 4],
    },
    /// Exhaustive ordering search found no model.
    NoModel,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(
    feature = "serde",
    derive(serde::Serialize, serde::Deserialize),
    serde(rename_all = "snake_case")
)]
pub enum Verdict {
    Accept(Witness),
    Reject(Obstruction),
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ClassCertificate {
    pub label: ClassLabel,
    pub verdict: Verdict,
}

impl ClassCertificate {
    pub(crate) fn accept(label: ClassLabel, witness: Witness) -> Self {
        ClassCertificate {
            label,
            verdict: Verdict::Accept(witness),
        }
    }

    pub(crate) fn reject(label: ClassLabel, obstruction: Obstruction) -> Self {
        ClassCertificate {
            label,
            verdict: Verdict::Reject(obstruction),
        }
    }

    pub fn is_accepted(&self) -> bool {
        matches!(self.verdict, Verdict::Accept(_))
    }

    pub fn witness(&self) -> Option<&Witness> {
        match &self.verdict {
            Verdict::Accept(w) => Some(w),
            Verdict::Reject(_) => None,
        }
    }

    pub fn obstruction(&self) -> Option<&Obstruction> {
        match &self.verdict {
            Verdict::Accept(_) => None,
            Verdict::Reject(o) => Some(o),
        }
    }

    /// Re-verifies the witness or obstruction against `g`.
    pub fn check(&self, g: &Graph) -> bool {
        match &self.verdict {
            Verdict::Accept(w) => check_witness(self.label, w, g),
            Verdict::Reject(o) => check_obstruction(self.label, o, g),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecognizeError {
    DeskScaleLimit {
        label: ClassLabel,
        n: usize,
        limit: usize,
    },
}

impl fmt::Display for RecognizeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RecognizeError::DeskScaleLimit { label, n, limit } => write!(
                f,
                "desk-scale limit: {label} recognition supports at most {limit} vertices, got {n}"
            ),
        }
    }
}

impl core::error::Error for RecognizeError {}

/// Dispatches to the recognizer for `label`.
pub fn in_target_class(g: &Graph, label: ClassLabel) -> Result<ClassCertificate, RecognizeError> {
    let exhaustive_limit = |label| {
        if g.n() > DESK_SCALE_VERTICES {
            Err(RecognizeError::DeskScaleLimit {
                label,
                n: g.n(),
                limit: DESK_SCALE_VERTICES,
            })
        } else {
            Ok(())
        }
    };
    Ok(match label {
        ClassLabel::Bipartite => is_bipartite(g),
        ClassLabel::Chordal => is_chordal(g),
        ClassLabel::QuasiThreshold => is_quasi_threshold(g),
        ClassLabel::Cactus => is_cactus(g),
        ClassLabel::ForestOfCacti => is_forest_of_cacti(g),
        ClassLabel::Caterpillar => is_caterpillar(g),
        ClassLabel::Constellation => is_constellation(g),
        ClassLabel::LinearForest => is_linear_forest(g),
        ClassLabel::ClawFree => is_claw_free(g),
        ClassLabel::EvenHoleFree => {
            exhaustive_limit(label)?;
            is_even_hole_free(g)
        }
        ClassLabel::Subcubic => is_subcubic(g),
        ClassLabel::ClawFreeChordal => is_claw_free_chordal(g),
        ClassLabel::ProperInterval => {
            exhaustive_limit(label)?;
            is_proper_interval(g)
        }
        ClassLabel::PathPower => {
            exhaustive_limit(label)?;
            is_path_power(g)
        }
    })
}

/// Membership as a plain boolean.
pub fn belongs(g: &Graph, label: ClassLabel) -> Result<bool, RecognizeError> {
    in_target_class(g, label).map(|c| c.is_accepted())
}

pub fn is_subcubic(g: &Graph) -> ClassCertificate {
    for v in 0..g.n() {
        if g.degree(v) > 3 {
            let nb = g.neighbors(v);
            return ClassCertificate::reject(
                ClassLabel::Subcubic,
                Obstruction::HighDegree {
                    vertex: v,
                    neighbors: [nb[0], nb[1], nb[2], nb[3]],
                },
            );
        }
    }
    ClassCertificate::accept(ClassLabel::Subcubic, Witness::MaxDegree(g.max_degree()))
}

/// Smallest claw in lexicographic (center, leaves) order.
pub fn find_claw(g: &Graph) -> Option<(usize, [usize; 3])> {
    for c in 0..g.n() {
        let nb = g.neighbors(c);
        for (i, &a) in nb.iter().enumerate() {
            for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                if g.has_edge(a, b) {
                    continue;
                }
                for &d in &nb[j + 1..] {
                    if !g.has_edge(a, d) && !g.has_edge(b, d) {
                        return Some((c, [a, b, d]));
                    }
                }
            }
        }
    }
    None
}

pub fn is_claw_free(g: &Graph) -> ClassCertificate {
    match find_claw(g) {
        Some((center, leaves)) => {
            ClassCertificate::reject(ClassLabel::ClawFree, Obstruction::Claw { center, leaves })
        }
        None => ClassCertificate::accept(ClassLabel::ClawFree, Witness::Exhaustive),
    }
}

/// Exhaustive; callers should respect [`DESK_SCALE_VERTICES`].
pub fn is_even_hole_free(g: &Graph) -> ClassCertificate {
    match find_even_hole(g) {
        Some(hole) => {
            ClassCertificate::reject(ClassLabel::EvenHoleFree, Obstruction::EvenHole(hole))
        }
        None => ClassCertificate::accept(ClassLabel::EvenHoleFree, Witness::Exhaustive),
    }
}

fn check_witness(label: ClassLabel, w: &Witness, g: &Graph) -> bool {
    match (label, w) {
        (ClassLabel::Bipartite, Witness::Bipartition { left, right }) => {
            perfect::check_bipartition(g, left, right)
        }
        (ClassLabel::Chordal | ClassLabel::ClawFreeChordal, Witness::EliminationOrder(order)) => {
            perfect::check_elimination_order(g, order)
                && (label == ClassLabel::Chordal || find_claw(g).is_none())
        }
        (ClassLabel::QuasiThreshold, Witness::PeelForest { parent }) => {
            perfect::check_peel_forest(g, parent)
        }
        (
            ClassLabel::Cactus | ClassLabel::ForestOfCacti,
            Witness::Cycles {
                cycles,
                edge_cycle_count,
            },
        ) => {
            forests::check_cycle_basis(g, cycles, edge_cycle_count)
                && (label == ClassLabel::ForestOfCacti || g.is_connected())
        }
        (ClassLabel::Caterpillar, Witness::Spine(spine)) => forests::check_spine(g, spine),
        (ClassLabel::Constellation, Witness::StarCenters(centers)) => {
            forests::check_star_centers(g, centers)
        }
        (ClassLabel::LinearForest, Witness::Paths(paths)) => forests::check_paths(g, paths),
        (ClassLabel::Subcubic, Witness::MaxDegree(d)) => *d == g.max_degree() && *d <= 3,
        (ClassLabel::ClawFree, Witness::Exhaustive) => find_claw(g).is_none(),
        (ClassLabel::EvenHoleFree, Witness::Exhaustive) => find_even_hole(g).is_none(),
        (ClassLabel::ProperInterval, Witness::UmbrellaOrder(order)) => {
            interval::check_umbrella_order(g, order)
        }
        (ClassLabel::PathPower, Witness::PathPowerOrder { order, power }) => {
            interval::check_path_power_order(g, order, *power)
        }
        _ => false,
    }
}

fn check_obstruction(label: ClassLabel, o: &Obstruction, g: &Graph) -> bool {
    use ClassLabel as L;
    let fits = match o {
        Obstruction::OddCycle(_) => matches!(label, L::Bipartite),
        Obstruction::Hole(_) => matches!(
            label,
            L::Chordal | L::ClawFreeChordal | L::ProperInterval | L::PathPower
        ),
        Obstruction::EvenHole(_) => matches!(label, L::EvenHoleFree),
        Obstruction::InducedP4(_) | Obstruction::InducedC4(_) => matches!(label, L::QuasiThreshold),
        Obstruction::Claw { .. } => matches!(
            label,
            L::ClawFree | L::ClawFreeChordal | L::ProperInterval | L::PathPower | L::LinearForest
        ),
        Obstruction::Net { .. } | Obstruction::Tent { .. } => {
            matches!(label, L::ProperInterval | L::PathPower)
        }
        Obstruction::Disconnected { .. } => {
            matches!(label, L::Cactus | L::Caterpillar | L::PathPower)
        }
        Obstruction::Cycle(_) => {
            matches!(
                label,
                L::Caterpillar | L::Constellation | L::LinearForest | L::PathPower
            )
        }
        Obstruction::SharedEdge { .. } => matches!(label, L::Cactus | L::ForestOfCacti),
        Obstruction::SubdividedClaw { .. } => matches!(label, L::Caterpillar),
        Obstruction::PathOnFour(_) => matches!(label, L::Constellation),
        Obstruction::HighDegree { .. } => matches!(label, L::Subcubic | L::PathPower),
        Obstruction::NoModel => matches!(label, L::ProperInterval | L::PathPower),
    };
    fits && verify_obstruction(o, g)
}

fn distinct(vs: &[usize], n: usize) -> bool {
    let mut sorted = vs.to_vec();
    sorted.sort_unstable();
    sorted.windows(2).all(|w| w[0] != w[1]) && vs.iter().all(|&v| v < n)
}

/// Whether `cycle` is a cycle of `g` with no chords.
fn is_induced_cycle(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    if k < 3 || !distinct(cycle, g.n()) {
        return false;
    }
    for i in 0..k {
        for j in i + 1..k {
            let consecutive = j == i + 1 || (i == 0 && j == k - 1);
            if g.has_edge(cycle[i], cycle[j]) != consecutive {
                return false;
            }
        }
    }
    true
}

pub(crate) fn is_cycle_of(g: &Graph, cycle: &[usize]) -> bool {
    let k = cycle.len();
    k >= 3 && distinct(cycle, g.n()) && (0..k).all(|i| g.has_edge(cycle[i], cycle[(i + 1) % k]))
}

/// Whether the listed vertices induce exactly the listed edges.
fn induces_exactly(g: &Graph, vertices: &[usize], edges: &[(usize, usize)]) -> bool {
    if !distinct(vertices, g.n()) {
        return false;
    }
    for i in 0..vertices.len() {
        for j in i + 1..vertices.len() {
            let listed = edges.contains(&(i, j)) || edges.contains(&(j, i));
            if g.has_edge(vertices[i], vertices[j]) != listed {
                return false;
            }
        }
    }
    true
}

fn verify_obstruction(o: &Obstruction, g: &Graph) -> bool {
    match o {
        Obstruction::OddCycle(c) => c.len() % 2 == 1 && is_induced_cycle(g, c),
        Obstruction::Hole(c) => c.len() >= 4 && is_induced_cycle(g, c),
        Obstruction::EvenHole(c) => c.len() >= 4 && c.len() % 2 == 0 && is_induced_cycle(g, c),
        Obstruction::InducedP4(p) => induces_exactly(g, p, &[(0, 1), (1, 2), (2, 3)]),
        Obstruction::InducedC4(c) => is_induced_cycle(g, c),
        Obstruction::Claw { center, leaves } => induces_exactly(
            g,
            &[*center, leaves[0], leaves[1], leaves[2]],
            &[(0, 1), (0, 2), (0, 3)],
        ),
        Obstruction::Net { triangle, pendants } => {
            let vs = [
                triangle[0],
                triangle[1],
                triangle[2],
                pendants[0],
                pendants[1],
                pendants[2],
            ];
            induces_exactly(g, &vs, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)])
        }
        Obstruction::Tent { triangle, tips } => {
            let vs = [
                triangle[0],
                triangle[1],
                triangle[2],
                tips[0],
                tips[1],
                tips[2],
            ];
            induces_exactly(
                g,
                &vs,
                &[
                    (0, 1),
                    (1, 2),
                    (0, 2),
                    (3, 0),
                    (3, 1),
                    (4, 1),
                    (4, 2),
                    (5, 2),
                    (5, 0),
                ],
            )
        }
        Obstruction::Disconnected { a, b } => {
            *a < g.n() && *b < g.n() && g.bfs_distances(*a)[*b] == usize::MAX
        }
        Obstruction::Cycle(c) => is_cycle_of(g, c),
        Obstruction::SharedEdge {
            edge,
            first,
            second,
        } => {
            let on = |c: &[usize]| {
                let k = c.len();
                (0..k).any(|i| Edge::new(c[i], c[(i + 1) % k]) == *edge)
            };
            let mut a = cycle_edges(first);
            let mut b = cycle_edges(second);
            a.sort_unstable();
            b.sort_unstable();
            is_cycle_of(g, first) && is_cycle_of(g, second) && on(first) && on(second) && a != b
        }
        Obstruction::SubdividedClaw {
            center,
            middle,
            tips,
        } => {
            let vs = [
                *center, middle[0], middle[1], middle[2], tips[0], tips[1], tips[2],
            ];
            distinct(&vs, g.n())
                && (0..3).all(|i| g.has_edge(*center, middle[i]) && g.has_edge(middle[i], tips[i]))
        }
        Obstruction::PathOnFour(p) => {
            distinct(p, g.n()) && (0..3).all(|i| g.has_edge(p[i], p[i + 1]))
        }
        Obstruction::HighDegree { vertex, neighbors } => {
            distinct(neighbors, g.n()) && neighbors.iter().all(|&w| g.has_edge(*vertex, w))
        }
        Obstruction::NoModel => true,
    }
}

pub(crate) fn cycle_edges(cycle: &[usize]) -> Vec<Edge> {
    let k = cycle.len();
    (0..k)
        .map(|i| Edge::new(cycle[i], cycle[(i + 1) % k]))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn label_names_round_trip() {
        for l in ClassLabel::ALL {
            assert_eq!(ClassLabel::from_name(l.name()), Some(l));
        }
        assert_eq!(ClassLabel::from_name("tree"), None);
    }

    #[test]
    fn target_class_examples() {
        let c = in_target_class(&path(5), ClassLabel::LinearForest).unwrap();
        assert!(c.is_accepted() && c.check(&path(5)));

        let claw = star(3);
        let c = in_target_class(&claw, ClassLabel::ClawFree).unwrap();
        assert_eq!(
            c.obstruction(),
            Some(&Obstruction::Claw {
                center: 0,
                leaves: [1, 2, 3]
            })
        );
        assert!(c.check(&claw));

        let c6 = cycle(6);
        let c = in_target_class(&c6, ClassLabel::EvenHoleFree).unwrap();
        assert_eq!(
            c.obstruction(),
            Some(&Obstruction::EvenHole(vec![0, 1, 2, 3, 4, 5]))
        );
        assert!(c.check(&c6));
    }

    #[test]
    fn even_hole_limit() {
        let big = path(DESK_SCALE_VERTICES + 1);
        assert_eq!(
            in_target_class(&big, ClassLabel::EvenHoleFree),
            Err(RecognizeError::DeskScaleLimit {
                label: ClassLabel::EvenHoleFree,
                n: DESK_SCALE_VERTICES + 1,
                limit: DESK_SCALE_VERTICES
            })
        );
    }

    #[test]
    fn subcubic() {
        assert!(is_subcubic(&petersen()).is_accepted());
        let c = is_subcubic(&star(4));
        assert!(!c.is_accepted() && c.check(&star(4)));
    }

    #[test]
    fn checks_reject_forged_witnesses() {
        let g = cycle(4);
        let forged = ClassCertificate::accept(
            ClassLabel::Bipartite,
            Witness::Bipartition {
                left: vec![0, 1],
                right: vec![2, 3],
            },
        );
        assert!(!forged.check(&g));
        let forged =
            ClassCertificate::reject(ClassLabel::Chordal, Obstruction::Hole(vec![0, 2, 1, 3]));
        assert!(!forged.check(&g));
    }
}
