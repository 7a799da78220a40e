//! Integral maximum flow (BFS augmenting paths), used for vertex-disjoint
//! path problems via vertex splitting.

use std::collections::VecDeque;

#[derive(Clone, Debug)]
struct Arc {
    to: usize,
    cap: i32,
    orig: i32,
    rev: usize,
    forward: bool,
}

/// A small flow network with integral capacities.
#[derive(Clone, Debug)]
pub struct FlowNetwork {
    adj: Vec<Vec<Arc>>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
        }
    }

    pub fn add_edge(&mut self, from: usize, to: usize, cap: i32) {
        let rev_from = self.adj[to].len() + usize::from(from == to);
        let rev_to = self.adj[from].len();
        self.adj[from].push(Arc {
            to,
            cap,
            orig: cap,
            rev: rev_from,
            forward: true,
        });
        self.adj[to].push(Arc {
            to: from,
            cap: 0,
            orig: 0,
            rev: rev_to,
            forward: false,
        });
    }

    /// Pushes as much flow as possible from `s` to `t` (Edmonds–Karp).
    pub fn max_flow(&mut self, s: usize, t: usize) -> i32 {
        let mut total = 0;
        loop {
            let mut prev: Vec<Option<(usize, usize)>> = vec![None; self.adj.len()];
            let mut queue = VecDeque::from([s]);
            let mut reached = false;
            while let Some(u) = queue.pop_front() {
                if u == t {
                    reached = true;
                    break;
                }
                for (k, a) in self.adj[u].iter().enumerate() {
                    if a.cap > 0 && a.to != s && prev[a.to].is_none() {
                        prev[a.to] = Some((u, k));
                        queue.push_back(a.to);
                    }
                }
            }
            if !reached {
                return total;
            }
            let mut bottleneck = i32::MAX;
            let mut v = t;
            while let Some((u, k)) = prev[v] {
                bottleneck = bottleneck.min(self.adj[u][k].cap);
                v = u;
            }
            let mut v = t;
            while let Some((u, k)) = prev[v] {
                self.adj[u][k].cap -= bottleneck;
                let (to, rev) = (self.adj[u][k].to, self.adj[u][k].rev);
                self.adj[to][rev].cap += bottleneck;
                v = u;
            }
            total += bottleneck;
        }
    }

    /// Heads of the original arcs out of `u` that carry positive flow.
    pub fn flow_successors(&self, u: usize) -> Vec<usize> {
        self.adj[u]
            .iter()
            .filter(|a| a.forward && a.orig - a.cap > 0)
            .map(|a| a.to)
            .collect()
    }
}
