//! Union-find with an undo trail, used both for monochromatic component
//! computation and for incremental almost-cycle pruning during colouring
//! search.

/// Disjoint-set forest with union by size and an undo trail.
///
/// `find` does not path-compress so that unions can be rolled back in O(1)
/// each; lookups stay O(log n), which is plenty at the graph sizes this
/// crate targets.
#[derive(Clone, Debug)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    trail: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            trail: Vec::new(),
            components: n,
        }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    pub fn same(&self, a: usize, b: usize) -> bool {
        self.find(a) == self.find(b)
    }

    /// Merge the sets of `a` and `b`. Returns true if they were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let mut ra = self.find(a);
        let mut rb = self.find(b);
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.trail.push(rb);
        self.components -= 1;
        true
    }

    /// Number of unions performed so far; pass to [`UnionFind::rollback`].
    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    /// Undo unions until the trail shrinks back to `mark`.
    pub fn rollback(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let rb = self.trail.pop().expect("trail checked non-empty");
            let ra = self.parent[rb];
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
            self.components += 1;
        }
    }

    pub fn component_count(&self) -> usize {
        self.components
    }

    /// Component id per element, ids assigned in order of first appearance.
    pub fn component_ids(&self) -> Vec<usize> {
        let mut ids = vec![usize::MAX; self.parent.len()];
        let mut next = 0;
        for v in 0..self.parent.len() {
            let r = self.find(v);
            if ids[r] == usize::MAX {
                ids[r] = next;
                next += 1;
            }
            ids[v] = ids[r];
        }
        ids
    }
}
