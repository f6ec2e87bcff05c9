//! Dinic's maximum flow over integer capacities.

use std::collections::VecDeque;

use num_traits::PrimInt;

#[derive(Debug, Clone)]
struct Arc<C> {
    to: usize,
    cap: C,
}

/// Directed network; arcs are stored in pairs so that `id ^ 1` is the reverse.
#[derive(Debug, Clone)]
pub struct FlowNetwork<C> {
    arcs: Vec<Arc<C>>,
    out: Vec<Vec<usize>>,
}

impl<C: PrimInt> FlowNetwork<C> {
    pub fn new(nodes: usize) -> Self {
        Self {
            arcs: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    pub fn add_edge(&mut self, from: usize, to: usize, cap: C) {
        self.out[from].push(self.arcs.len());
        self.arcs.push(Arc { to, cap });
        self.out[to].push(self.arcs.len());
        self.arcs.push(Arc {
            to: from,
            cap: C::zero(),
        });
    }

    fn levels(&self, source: usize) -> Vec<usize> {
        let mut level = vec![usize::MAX; self.out.len()];
        level[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &id in &self.out[u] {
                let arc = &self.arcs[id];
                if arc.cap > C::zero() && level[arc.to] == usize::MAX {
                    level[arc.to] = level[u] + 1;
                    queue.push_back(arc.to);
                }
            }
        }
        level
    }

    fn augment(
        &mut self,
        u: usize,
        sink: usize,
        limit: C,
        level: &[usize],
        next: &mut [usize],
    ) -> C {
        if u == sink {
            return limit;
        }
        while next[u] < self.out[u].len() {
            let id = self.out[u][next[u]];
            let (to, cap) = (self.arcs[id].to, self.arcs[id].cap);
            if cap > C::zero() && level[to] == level[u] + 1 {
                let pushed = self.augment(to, sink, limit.min(cap), level, next);
                if pushed > C::zero() {
                    self.arcs[id].cap = self.arcs[id].cap - pushed;
                    self.arcs[id ^ 1].cap = self.arcs[id ^ 1].cap + pushed;
                    return pushed;
                }
            }
            next[u] += 1;
        }
        C::zero()
    }

    /// Saturates the network and returns the flow value.
    pub fn max_flow(&mut self, source: usize, sink: usize) -> C {
        let mut total = C::zero();
        loop {
            let level = self.levels(source);
            if level[sink] == usize::MAX {
                return total;
            }
            let mut next = vec![0; self.out.len()];
            loop {
                let pushed = self.augment(source, sink, C::max_value(), &level, &mut next);
                if pushed == C::zero() {
                    break;
                }
                total = total + pushed;
            }
        }
    }

    /// Nodes reachable from `source` in the residual network: the source side
    /// of a minimum cut once `max_flow` has run.
    pub fn source_side(&self, source: usize) -> Vec<bool> {
        let level = self.levels(source);
        level.iter().map(|&l| l != usize::MAX).collect()
    }
}
