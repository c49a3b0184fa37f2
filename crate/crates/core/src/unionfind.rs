//! Disjoint-set forests over node ids.

/// Union by size with path halving. Used on the sampling hot path.
#[derive(Debug, Clone)]
pub struct DisjointSets {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl DisjointSets {
    pub fn new(len: usize) -> Self {
        DisjointSets {
            parent: (0..len as u32).collect(),
            size: vec![1; len],
        }
    }

    /// Resets every element to a singleton without reallocating.
    pub fn reset(&mut self) {
        for (i, p) in self.parent.iter_mut().enumerate() {
            *p = i as u32;
        }
        self.size.iter_mut().for_each(|s| *s = 1);
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let grand = self.parent[self.parent[x] as usize];
            self.parent[x] = grand;
            x = grand as usize;
        }
        x
    }

    pub fn size_of(&mut self, x: usize) -> usize {
        let r = self.find(x);
        self.size[r] as usize
    }

    /// Merges the sets of `a` and `b`. Returns the sizes of the two sets before the
    /// merge, or `None` when they were already joined.
    pub fn union(&mut self, a: usize, b: usize) -> Option<(usize, usize)> {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let sizes = (self.size[ra] as usize, self.size[rb] as usize);
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
        Some(sizes)
    }
}

/// Union by size without path compression, so unions can be undone in LIFO order.
///
/// Drives the include/exclude recursions over edge subsets.
#[derive(Debug, Clone)]
pub struct RollbackSets {
    parent: Vec<u32>,
    size: Vec<u32>,
    history: Vec<(u32, u32)>,
}

impl RollbackSets {
    pub fn new(len: usize) -> Self {
        RollbackSets {
            parent: (0..len as u32).collect(),
            size: vec![1; len],
            history: Vec::with_capacity(len),
        }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            x = self.parent[x] as usize;
        }
        x
    }

    /// Joins the sets of `a` and `b`. Returns the pre-merge sizes, or `None` if they
    /// were already joined (nothing is pushed onto the undo log in that case).
    pub fn union(&mut self, a: usize, b: usize) -> Option<(usize, usize)> {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        let sizes = (self.size[ra] as usize, self.size[rb] as usize);
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
        self.history.push((ra as u32, rb as u32));
        Some(sizes)
    }

    /// Reverts the most recent successful union.
    pub fn undo(&mut self) {
        let (ra, rb) = self.history.pop().expect("undo without a matching union");
        self.parent[rb as usize] = rb;
        self.size[ra as usize] -= self.size[rb as usize];
    }
}
