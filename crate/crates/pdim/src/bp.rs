//! Deterministic branching programs: evaluation, builders for the named
//! function families, and the transforms that turn a program into a subspace
//! assignment.
//!
//! Two transforms are provided. [`pudlak_rodl_transform`] adds a fresh start
//! node labeled from the partition opposite the old start, merges the accept
//! node into it, assigns `e_u - e_v` to every edge and spans the closed edges
//! per input; the result realizes `G_f` with intersection dimension at most
//! one. [`bitwise_decomposition`] produces a bitwise-decomposable assignment
//! instead: one private cycle per accepting path of the program, each cycle
//! carrying the path's literals once. The latter construction keeps the
//! per-literal generating sets vertex-disjoint and the per-side spans direct,
//! which the disjointness property of bitwise assignments demands and which
//! edge subdivision alone cannot deliver (the pass-through edges it creates
//! are closed for both values of `y_1`, so their vectors would land in both
//! `V_1^0` and `V_1^1`).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;

use crate::assign::{BitwiseAssignment, ProjectiveAssignment};
use crate::functions::{BooleanFunction, Family};
use crate::gf::Subspace;
use crate::{input_bit, Error, Result, Side};

/// Node index inside a [`BranchingProgram`].
pub type NodeId = usize;

/// A variable reference: side of the partition plus 0-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Var {
    pub side: Side,
    pub index: usize,
}

impl Var {
    pub fn left(index: usize) -> Var {
        Var { side: Side::Left, index }
    }

    pub fn right(index: usize) -> Var {
        Var { side: Side::Right, index }
    }

    /// Value of this variable on the packed input pair.
    pub fn value(&self, x: u32, y: u32, nl: usize, nr: usize) -> bool {
        match self.side {
            Side::Left => input_bit(x, self.index, nl),
            Side::Right => input_bit(y, self.index, nr),
        }
    }
}

/// One node of a branching program.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Node {
    /// Queries `var`; the closed edge is `lo` on value 0 and `hi` on value 1.
    Internal { var: Var, lo: NodeId, hi: NodeId },
    Accept,
    Reject,
}

/// A deterministic branching program on `nl + nr` variables.
///
/// Validated at construction: the edge relation is acyclic, every internal
/// node has two out-edges into range, variable labels are in range, and there
/// is exactly one accept and one reject node (either may be unreachable).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BranchingProgram {
    nl: usize,
    nr: usize,
    nodes: Vec<Node>,
    start: NodeId,
    accept: NodeId,
    reject: NodeId,
}

impl BranchingProgram {
    pub fn new(nl: usize, nr: usize, nodes: Vec<Node>, start: NodeId) -> Result<Self> {
        if nl == 0 || nr == 0 {
            return Err(Error::MalformedProgram("both sides need variables".to_string()));
        }
        let mut accept = None;
        let mut reject = None;
        for (id, node) in nodes.iter().enumerate() {
            match node {
                Node::Accept => {
                    if accept.replace(id).is_some() {
                        return Err(Error::MalformedProgram("two accept nodes".to_string()));
                    }
                }
                Node::Reject => {
                    if reject.replace(id).is_some() {
                        return Err(Error::MalformedProgram("two reject nodes".to_string()));
                    }
                }
                Node::Internal { var, lo, hi } => {
                    let limit = match var.side {
                        Side::Left => nl,
                        Side::Right => nr,
                    };
                    if var.index >= limit {
                        return Err(Error::MalformedProgram(format!(
                            "variable index {} out of range",
                            var.index
                        )));
                    }
                    if *lo >= nodes.len() || *hi >= nodes.len() {
                        return Err(Error::MalformedProgram("edge target out of range".to_string()));
                    }
                }
            }
        }
        let accept = accept.ok_or_else(|| Error::MalformedProgram("no accept node".to_string()))?;
        let reject = reject.ok_or_else(|| Error::MalformedProgram("no reject node".to_string()))?;
        if start >= nodes.len() {
            return Err(Error::MalformedProgram("start out of range".to_string()));
        }
        let bp = BranchingProgram { nl, nr, nodes, start, accept, reject };
        bp.check_acyclic()?;
        Ok(bp)
    }

    fn check_acyclic(&self) -> Result<()> {
        // 0 = unvisited, 1 = on stack, 2 = done
        let mut state = vec![0u8; self.nodes.len()];
        let mut stack: Vec<(NodeId, u8)> = vec![(self.start, 0)];
        // iterative DFS over all nodes (also unreachable ones)
        for root in 0..self.nodes.len() {
            if state[root] != 0 {
                continue;
            }
            stack.clear();
            stack.push((root, 0));
            while let Some((id, phase)) = stack.pop() {
                if phase == 1 {
                    state[id] = 2;
                    continue;
                }
                if state[id] == 2 {
                    continue;
                }
                if state[id] == 1 {
                    return Err(Error::MalformedProgram("cycle detected".to_string()));
                }
                state[id] = 1;
                stack.push((id, 1));
                if let Node::Internal { lo, hi, .. } = self.nodes[id] {
                    for next in [lo, hi] {
                        match state[next] {
                            0 => stack.push((next, 0)),
                            1 => {
                                return Err(Error::MalformedProgram(
                                    "cycle detected".to_string(),
                                ))
                            }
                            _ => {}
                        }
                    }
                }
            }
        }
        Ok(())
    }

    pub fn left_vars(&self) -> usize {
        self.nl
    }

    pub fn right_vars(&self) -> usize {
        self.nr
    }

    /// Node count including accept and reject.
    pub fn size(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    pub fn start(&self) -> NodeId {
        self.start
    }

    pub fn accept(&self) -> NodeId {
        self.accept
    }

    pub fn reject(&self) -> NodeId {
        self.reject
    }

    /// Follow closed edges from the start; true exactly when accept is hit.
    pub fn evaluate(&self, x: u32, y: u32) -> bool {
        let mut at = self.start;
        loop {
            match self.nodes[at] {
                Node::Accept => return true,
                Node::Reject => return false,
                Node::Internal { var, lo, hi } => {
                    at = if var.value(x, y, self.nl, self.nr) { hi } else { lo };
                }
            }
        }
    }

    /// Number of edges that read a left-partition variable.
    pub fn x_edge_count(&self) -> usize {
        self.nodes
            .iter()
            .filter(|n| matches!(n, Node::Internal { var, .. } if var.side == Side::Left))
            .count()
            * 2
    }
}

/// Chain builders for the named families; node counts are Θ(n).
pub fn build_named(family: Family, n: usize) -> Result<BranchingProgram> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".to_string()));
    }
    match family {
        Family::Eq | Family::Ineq => {
            // x_i is read, then the matching y_i; a mismatch rejects (EQ)
            // or accepts (INEQ).
            let negate = family == Family::Ineq;
            let mut nodes = Vec::new();
            let accept = 3 * n;
            let reject = 3 * n + 1;
            let (good, bad) = if negate { (reject, accept) } else { (accept, reject) };
            for i in 0..n {
                let next = if i + 1 < n { 3 * (i + 1) } else { good };
                // node 3i: reads x_{i+1}; 3i+1 / 3i+2: read y_{i+1}
                nodes.push(Node::Internal { var: Var::left(i), lo: 3 * i + 1, hi: 3 * i + 2 });
                nodes.push(Node::Internal { var: Var::right(i), lo: next, hi: bad });
                nodes.push(Node::Internal { var: Var::right(i), lo: bad, hi: next });
            }
            nodes.push(Node::Accept);
            nodes.push(Node::Reject);
            BranchingProgram::new(n, n, nodes, 0)
        }
        Family::Disj => {
            // x_i = 1 forces a check that y_i = 0.
            let mut nodes = Vec::new();
            let accept = 2 * n;
            let reject = 2 * n + 1;
            for i in 0..n {
                let next = if i + 1 < n { 2 * (i + 1) } else { accept };
                nodes.push(Node::Internal { var: Var::left(i), lo: next, hi: 2 * i + 1 });
                nodes.push(Node::Internal { var: Var::right(i), lo: next, hi: reject });
            }
            nodes.push(Node::Accept);
            nodes.push(Node::Reject);
            BranchingProgram::new(n, n, nodes, 0)
        }
        Family::Ip => {
            // Layered over i with a running-parity state; y_i is read only
            // when x_i = 1. Node layout per layer i: x-node for parity 0,
            // x-node for parity 1 (absent at i = 0), then y-nodes.
            let mut nodes = Vec::new();
            let mut ids: BTreeMap<(usize, u8, u8), NodeId> = BTreeMap::new();
            // kind 0 = x-node (state = parity), kind 1 = y-node (state
            // = parity before adding y_i)
            for i in 0..n {
                let parities: &[u8] = if i == 0 { &[0] } else { &[0, 1] };
                for &p in parities {
                    ids.insert((i, 0, p), nodes.len());
                    nodes.push(Node::Reject); // patched below
                }
                for &p in parities {
                    ids.insert((i, 1, p), nodes.len());
                    nodes.push(Node::Reject);
                }
            }
            let accept = nodes.len();
            nodes.push(Node::Accept);
            let reject = nodes.len();
            nodes.push(Node::Reject);
            let sink = |p: u8| if p == 1 { accept } else { reject };
            for i in 0..n {
                let parities: &[u8] = if i == 0 { &[0] } else { &[0, 1] };
                for &p in parities {
                    let next_same = if i + 1 < n { ids[&(i + 1, 0, p)] } else { sink(p) };
                    let x_id = ids[&(i, 0, p)];
                    let y_id = ids[&(i, 1, p)];
                    nodes[x_id] = Node::Internal { var: Var::left(i), lo: next_same, hi: y_id };
                    let next_flip = if i + 1 < n { ids[&(i + 1, 0, p ^ 1)] } else { sink(p ^ 1) };
                    nodes[y_id] =
                        Node::Internal { var: Var::right(i), lo: next_same, hi: next_flip };
                }
            }
            BranchingProgram::new(n, n, nodes, 0)
        }
        Family::Parity => {
            // 2-state layered program reading x_1..x_n, y_1..y_n.
            let vars: Vec<Var> =
                (0..n).map(Var::left).chain((0..n).map(Var::right)).collect();
            let mut nodes = Vec::new();
            let mut ids: BTreeMap<(usize, u8), NodeId> = BTreeMap::new();
            for (layer, _) in vars.iter().enumerate() {
                let parities: &[u8] = if layer == 0 { &[0] } else { &[0, 1] };
                for &p in parities {
                    ids.insert((layer, p), nodes.len());
                    nodes.push(Node::Reject);
                }
            }
            let accept = nodes.len();
            nodes.push(Node::Accept);
            let reject = nodes.len();
            nodes.push(Node::Reject);
            let sink = |p: u8| if p == 1 { accept } else { reject };
            for (layer, var) in vars.iter().enumerate() {
                let parities: &[u8] = if layer == 0 { &[0] } else { &[0, 1] };
                for &p in parities {
                    let id = ids[&(layer, p)];
                    let same = if layer + 1 < vars.len() { ids[&(layer + 1, p)] } else { sink(p) };
                    let flip =
                        if layer + 1 < vars.len() { ids[&(layer + 1, p ^ 1)] } else { sink(p ^ 1) };
                    nodes[id] = Node::Internal { var: *var, lo: same, hi: flip };
                }
            }
            BranchingProgram::new(n, n, nodes, 0)
        }
        Family::Ed | Family::Pal => Err(Error::InvalidParameter(format!(
            "no linear-size chain builder for {}",
            family.name()
        ))),
    }
}

/// Build an ordered-decision-diagram program from a truth table, reading
/// `x_1..x_n` then `y_1..y_n`, with identical subtables shared. Size is at
/// most `2^{2n+1}`.
pub fn build_from_table(f: &BooleanFunction) -> Result<BranchingProgram> {
    let n = f.n();
    let bits = f.table_bits();
    let total_vars = 2 * n;
    let mut nodes: Vec<Node> = vec![Node::Accept, Node::Reject];
    let mut memo: BTreeMap<(usize, usize), NodeId> = BTreeMap::new();
    let mut cons: BTreeMap<(usize, NodeId, NodeId), NodeId> = BTreeMap::new();

    fn go(
        level: usize,
        offset: usize,
        total_vars: usize,
        n: usize,
        bits: &[bool],
        nodes: &mut Vec<Node>,
        memo: &mut BTreeMap<(usize, usize), NodeId>,
        cons: &mut BTreeMap<(usize, NodeId, NodeId), NodeId>,
    ) -> NodeId {
        if level == total_vars {
            return usize::from(!bits[offset]);
        }
        if let Some(&id) = memo.get(&(level, offset)) {
            return id;
        }
        let half = 1usize << (total_vars - level - 1);
        let lo = go(level + 1, offset, total_vars, n, bits, nodes, memo, cons);
        let hi = go(level + 1, offset + half, total_vars, n, bits, nodes, memo, cons);
        let id = if lo == hi {
            lo
        } else {
            *cons.entry((level, lo, hi)).or_insert_with(|| {
                let var =
                    if level < n { Var::left(level) } else { Var::right(level - n) };
                nodes.push(Node::Internal { var, lo, hi });
                nodes.len() - 1
            })
        };
        memo.insert((level, offset), id);
        id
    }

    let start = go(0, 0, total_vars, n, &bits, &mut nodes, &mut memo, &mut cons);
    BranchingProgram::new(n, n, nodes, start)
}

/// Per-literal edge vectors of a transform, as basis-index pairs; the vector
/// for `(u, v)` is `e_u - e_v`.
#[derive(Debug, Clone)]
pub struct AssignmentExtract {
    pub ambient: usize,
    /// `left[i][a]` lists the edge vectors of literal `x_{i+1} = a`.
    pub left: Vec<[Vec<(usize, usize)>; 2]>,
    /// `right[j][b]` lists the edge vectors of literal `y_{j+1} = b`.
    pub right: Vec<[Vec<(usize, usize)>; 2]>,
}

impl AssignmentExtract {
    fn new(ambient: usize, nl: usize, nr: usize) -> Self {
        AssignmentExtract {
            ambient,
            left: vec![[Vec::new(), Vec::new()]; nl],
            right: vec![[Vec::new(), Vec::new()]; nr],
        }
    }

    fn push(&mut self, var: Var, value: bool, pair: (usize, usize)) {
        let slot = usize::from(value);
        match var.side {
            Side::Left => self.left[var.index][slot].push(pair),
            Side::Right => self.right[var.index][slot].push(pair),
        }
    }

    /// The difference vector `e_u - e_v` over `F_q`.
    pub fn vector(&self, q: u8, pair: (usize, usize)) -> Vec<u8> {
        let mut v = vec![0u8; self.ambient];
        if pair.0 != pair.1 {
            v[pair.0] = 1;
            v[pair.1] = q - 1;
        }
        v
    }

    /// Span of one literal's edge vectors.
    pub fn literal_subspace(&self, q: u8, var: Var, value: bool) -> Result<Subspace> {
        let slot = usize::from(value);
        let pairs = match var.side {
            Side::Left => &self.left[var.index][slot],
            Side::Right => &self.right[var.index][slot],
        };
        let rows: Vec<Vec<u8>> = pairs.iter().map(|&p| self.vector(q, p)).collect();
        Subspace::span(q, &rows, self.ambient)
    }

    /// Span of the union of one side's active literals on an input word.
    fn side_span(&self, q: u8, side: Side, word: u32) -> Result<Subspace> {
        let per_var = match side {
            Side::Left => &self.left,
            Side::Right => &self.right,
        };
        let n = per_var.len();
        let mut rows = Vec::new();
        for (i, slots) in per_var.iter().enumerate() {
            let slot = usize::from(input_bit(word, i, n));
            rows.extend(slots[slot].iter().map(|&p| self.vector(q, p)));
        }
        Subspace::span(q, &rows, self.ambient)
    }
}

/// The branching-program-to-assignment construction.
///
/// Adds a new start labeled with the first variable of the partition opposite
/// the old start's label (the right side when the start is a sink), routes
/// both of its out-edges to the old start, merges the accept node into the
/// new start, assigns `e_u - e_v` to each edge, and maps every input word to
/// the span of its closed edge vectors. Reject-incident edges participate
/// like any other edge. Basis indices follow a deterministic topological
/// order of the original nodes with the merged node last.
pub fn pudlak_rodl_transform(
    bp: &BranchingProgram,
    q: u8,
) -> Result<(ProjectiveAssignment, AssignmentExtract)> {
    let ambient = bp.size();
    // topological numbering of everything but accept; merged node last
    let order = topo_order_without_accept(bp);
    let mut index = vec![usize::MAX; bp.size()];
    for (k, &id) in order.iter().enumerate() {
        index[id] = k;
    }
    let merged = ambient - 1;
    index[bp.accept()] = merged;

    let mut extract = AssignmentExtract::new(ambient, bp.nl, bp.nr);
    for (id, node) in bp.nodes.iter().enumerate() {
        if let Node::Internal { var, lo, hi } = node {
            extract.push(*var, false, (index[id], index[*lo]));
            extract.push(*var, true, (index[id], index[*hi]));
        }
    }
    let new_side = match bp.nodes[bp.start()] {
        Node::Internal { var, .. } => var.side.opposite(),
        _ => Side::Right,
    };
    let new_var = Var { side: new_side, index: 0 };
    extract.push(new_var, false, (merged, index[bp.start()]));
    extract.push(new_var, true, (merged, index[bp.start()]));

    let left = (0..1u32 << bp.nl)
        .map(|x| extract.side_span(q, Side::Left, x))
        .collect::<Result<Vec<_>>>()?;
    let right = (0..1u32 << bp.nr)
        .map(|y| extract.side_span(q, Side::Right, y))
        .collect::<Result<Vec<_>>>()?;
    Ok((ProjectiveAssignment::new(q, ambient, left, right)?, extract))
}

fn topo_order_without_accept(bp: &BranchingProgram) -> Vec<NodeId> {
    let n = bp.size();
    let mut indegree = vec![0usize; n];
    for node in &bp.nodes {
        if let Node::Internal { lo, hi, .. } = node {
            for t in [*lo, *hi] {
                if t != bp.accept() {
                    indegree[t] += 1;
                }
            }
        }
    }
    // smallest ready id first, for a deterministic numbering
    let mut ready: alloc::collections::BTreeSet<NodeId> = (0..n)
        .filter(|&id| id != bp.accept() && indegree[id] == 0)
        .collect();
    let mut order = Vec::with_capacity(n - 1);
    while let Some(&id) = ready.iter().next() {
        ready.remove(&id);
        order.push(id);
        if let Node::Internal { lo, hi, .. } = bp.nodes[id] {
            for t in [lo, hi] {
                if t != bp.accept() {
                    indegree[t] -= 1;
                    if indegree[t] == 0 {
                        ready.insert(t);
                    }
                }
            }
        }
    }
    debug_assert_eq!(order.len(), n - 1);
    order
}

/// The edge-modification gadget: every edge reading a left variable is
/// subdivided, and the fresh middle node reads `y_1` with both branches
/// rejoining the original head. Adds one node per x-reading edge and
/// preserves the computed function.
pub fn subdivide_x_edges(bp: &BranchingProgram) -> BranchingProgram {
    let mut nodes = bp.nodes.clone();
    for id in 0..bp.nodes.len() {
        if let Node::Internal { var, lo, hi } = bp.nodes[id] {
            if var.side == Side::Left {
                let z_lo = nodes.len();
                nodes.push(Node::Internal { var: Var::right(0), lo, hi: lo });
                let z_hi = nodes.len();
                nodes.push(Node::Internal { var: Var::right(0), lo: hi, hi });
                nodes[id] = Node::Internal { var, lo: z_lo, hi: z_hi };
            }
        }
    }
    BranchingProgram::new(bp.nl, bp.nr, nodes, bp.start).expect("subdivision preserves validity")
}

/// One accepting path of a program: the variables it reads with their values,
/// sorted by (side, index).
pub type PathLiterals = Vec<(Var, bool)>;

/// Enumerate the accepting paths of a program as consistent literal sets.
/// Re-reads of an already-assigned variable follow the consistent edge and
/// record nothing. Paths that never read `x_1` (resp. `y_1`) are split over
/// both values of that variable so every returned set contains it.
pub fn accepting_paths(bp: &BranchingProgram) -> Result<Vec<PathLiterals>> {
    if bp.nl + bp.nr > 22 {
        return Err(Error::DenseGuard { n: bp.nl + bp.nr, limit: 22 });
    }
    let mut out = Vec::new();
    let mut assignment: BTreeMap<Var, bool> = BTreeMap::new();
    fn go(
        bp: &BranchingProgram,
        at: NodeId,
        assignment: &mut BTreeMap<Var, bool>,
        out: &mut Vec<PathLiterals>,
    ) {
        match bp.nodes[at] {
            Node::Reject => {}
            Node::Accept => {
                let mut base: Vec<PathLiterals> = vec![assignment
                    .iter()
                    .map(|(&var, &val)| (var, val))
                    .collect()];
                for forced in [Var::left(0), Var::right(0)] {
                    if !assignment.contains_key(&forced) {
                        base = base
                            .into_iter()
                            .flat_map(|lits| {
                                [false, true].into_iter().map(move |b| {
                                    let mut with = lits.clone();
                                    with.push((forced, b));
                                    with
                                })
                            })
                            .collect();
                    }
                }
                for mut lits in base {
                    lits.sort_unstable();
                    out.push(lits);
                }
            }
            Node::Internal { var, lo, hi } => {
                if let Some(&val) = assignment.get(&var) {
                    go(bp, if val { hi } else { lo }, assignment, out);
                } else {
                    for (val, next) in [(false, lo), (true, hi)] {
                        assignment.insert(var, val);
                        go(bp, next, assignment, out);
                        assignment.remove(&var);
                    }
                }
            }
        }
    }
    go(bp, bp.start(), &mut assignment, &mut out);
    Ok(out)
}

/// Derive a bitwise-decomposable assignment from a branching program.
///
/// Returns the subdivided program (for size bookkeeping; it computes the same
/// function) together with the assignment. The assignment places one private
/// cycle per accepting path: the cycle's edges carry the path's literals,
/// each exactly once, so the cycle's vectors sum to zero and the full cycle
/// is closed exactly on the inputs that follow that path. Every literal's
/// generating set is a vertex-disjoint matching and each side's literal
/// spans form a direct sum.
pub fn bitwise_decomposition(
    bp: &BranchingProgram,
) -> Result<(BranchingProgram, BitwiseAssignment)> {
    let subdivided = subdivide_x_edges(bp);
    let paths = accepting_paths(bp)?;
    let ambient = paths.iter().map(Vec::len).sum::<usize>().max(1);
    let mut extract = AssignmentExtract::new(ambient, bp.nl, bp.nr);
    let mut base = 0;
    for lits in &paths {
        let k = lits.len();
        debug_assert!(k >= 2);
        for (t, &(var, val)) in lits.iter().enumerate() {
            extract.push(var, val, (base + t, base + (t + 1) % k));
        }
        base += k;
    }
    let q = 2;
    let mut u = Vec::with_capacity(bp.nl);
    for i in 0..bp.nl {
        u.push([
            extract.literal_subspace(q, Var::left(i), false)?,
            extract.literal_subspace(q, Var::left(i), true)?,
        ]);
    }
    let mut v = Vec::with_capacity(bp.nr);
    for j in 0..bp.nr {
        v.push([
            extract.literal_subspace(q, Var::right(j), false)?,
            extract.literal_subspace(q, Var::right(j), true)?,
        ]);
    }
    Ok((subdivided, BitwiseAssignment::new(ambient, u, v)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functions::{make_named, realization};

    fn exhaustive_agreement(bp: &BranchingProgram, f: &BooleanFunction) {
        for x in 0..1u32 << f.n() {
            for y in 0..1u32 << f.n() {
                assert_eq!(bp.evaluate(x, y), f.evaluate(x, y), "x={x:b} y={y:b}");
            }
        }
    }

    #[test]
    fn trivial_program_accepts_everything() {
        let bp =
            BranchingProgram::new(1, 1, vec![Node::Accept, Node::Reject], 0).unwrap();
        for x in 0..2 {
            for y in 0..2 {
                assert!(bp.evaluate(x, y));
            }
        }
        assert_eq!(bp.size(), 2);
    }

    #[test]
    fn rejects_malformed_programs() {
        // cycle
        let nodes = vec![
            Node::Internal { var: Var::left(0), lo: 1, hi: 1 },
            Node::Internal { var: Var::right(0), lo: 0, hi: 2 },
            Node::Accept,
            Node::Reject,
        ];
        assert!(matches!(
            BranchingProgram::new(1, 1, nodes, 0),
            Err(Error::MalformedProgram(_))
        ));
        // bad variable index
        let nodes = vec![
            Node::Internal { var: Var::left(3), lo: 1, hi: 2 },
            Node::Accept,
            Node::Reject,
        ];
        assert!(BranchingProgram::new(1, 1, nodes, 0).is_err());
        // missing accept
        assert!(BranchingProgram::new(1, 1, vec![Node::Reject], 0).is_err());
    }

    #[test]
    fn eq_builder() {
        for n in 1..=3 {
            let bp = build_named(Family::Eq, n).unwrap();
            assert!(bp.size() <= 3 * n + 3, "size {} at n={n}", bp.size());
            let f = make_named(Family::Eq, n, None).unwrap();
            exhaustive_agreement(&bp, &f);
        }
        let bp = build_named(Family::Eq, 1).unwrap();
        assert!(bp.evaluate(0, 0));
        assert!(!bp.evaluate(0, 1));
    }

    #[test]
    fn named_builders_agree_with_tables() {
        for family in [Family::Ineq, Family::Ip, Family::Disj, Family::Parity] {
            for n in 1..=3 {
                let bp = build_named(family, n).unwrap();
                let f = make_named(family, n, None).unwrap();
                exhaustive_agreement(&bp, &f);
            }
        }
    }

    #[test]
    fn parity_builder_is_small() {
        // PARITY on 4 bits: 2-state layered program, at most 10 nodes.
        let bp = build_named(Family::Parity, 2).unwrap();
        assert!(bp.size() <= 10, "size {}", bp.size());
    }

    #[test]
    fn disj_builder_exhaustive() {
        let bp = build_named(Family::Disj, 2).unwrap();
        let f = make_named(Family::Disj, 2, None).unwrap();
        exhaustive_agreement(&bp, &f);
    }

    #[test]
    fn table_builder_agrees_on_random_functions() {
        // 20 pseudo-random 4-bit functions (n = 2 per side)
        let mut seed = 0x2545f4914f6cdd1du64;
        for _ in 0..20 {
            seed ^= seed << 13;
            seed ^= seed >> 7;
            seed ^= seed << 17;
            let bits: Vec<bool> = (0..16).map(|i| seed >> i & 1 == 1).collect();
            let f = BooleanFunction::from_table(2, &bits).unwrap();
            let bp = build_from_table(&f).unwrap();
            assert!(bp.size() <= 1 << (2 * 2 + 1));
            exhaustive_agreement(&bp, &f);
        }
    }

    #[test]
    fn subdivision_counts_and_preserves_function() {
        for (family, n) in [(Family::Eq, 2), (Family::Ip, 2), (Family::Parity, 2)] {
            let bp = build_named(family, n).unwrap();
            let sub = subdivide_x_edges(&bp);
            assert_eq!(sub.size(), bp.size() + bp.x_edge_count());
            let f = make_named(family, n, None).unwrap();
            exhaustive_agreement(&sub, &f);
        }
    }

    #[test]
    fn pr_transform_realizes_small_builders() {
        for (family, n) in
            [(Family::Eq, 1), (Family::Eq, 2), (Family::Disj, 2), (Family::Parity, 2)]
        {
            let bp = build_named(family, n).unwrap();
            let f = make_named(family, n, None).unwrap();
            let g = realization(&f).unwrap();
            let (phi, extract) = pudlak_rodl_transform(&bp, 2).unwrap();
            assert_eq!(extract.ambient, bp.size());
            assert!(phi.verify_realizes(&g).unwrap(), "{family:?} n={n}");
            assert!(phi.max_intersection_dim(&g).unwrap() <= 1);
        }
    }

    #[test]
    fn pr_transform_over_f3() {
        let bp = build_named(Family::Eq, 2).unwrap();
        let f = make_named(Family::Eq, 2, None).unwrap();
        let g = realization(&f).unwrap();
        let (phi, _) = pudlak_rodl_transform(&bp, 3).unwrap();
        assert!(phi.verify_realizes(&g).unwrap());
        assert!(phi.max_intersection_dim(&g).unwrap() <= 1);
    }

    #[test]
    fn accepting_paths_of_eq2() {
        let bp = build_named(Family::Eq, 2).unwrap();
        let paths = accepting_paths(&bp).unwrap();
        // one accepting path per matching input, each reading all 4 vars
        assert_eq!(paths.len(), 4);
        for lits in &paths {
            assert_eq!(lits.len(), 4);
        }
    }

    #[test]
    fn accepting_paths_force_first_variables() {
        // f = 1 iff y_1 = 1, as a table; its OBDD reads only y_1, so the
        // x_1 completion must split every accepting path.
        let f = BooleanFunction::tabulate(1, |_, y| y == 1).unwrap();
        let bp = build_from_table(&f).unwrap();
        let paths = accepting_paths(&bp).unwrap();
        assert_eq!(paths.len(), 2);
        for lits in &paths {
            assert!(lits.iter().any(|&(v, _)| v == Var::left(0)));
            assert!(lits.iter().any(|&(v, val)| v == Var::right(0) && val));
        }
    }
}
