//! Paths in a quiver, ordered by length, then start vertex, then arrow
//! sequence.  This order fixes every basis enumeration in the crate.

use std::cmp::Ordering;

/// A composable sequence of arrows.  `arrows` is empty for the trivial path
/// at `start`; otherwise `arrows[0]` leaves `start` and consecutive arrows
/// compose head to tail.  Arrows are stored as indices into the algebra's
/// arrow table.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub struct Path {
    pub start: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path { start: v, arrows: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// The path extended by one arrow at the end.
    pub fn append(&self, arrow: usize) -> Self {
        let mut arrows = self.arrows.clone();
        arrows.push(arrow);
        Path { start: self.start, arrows }
    }

    /// The path extended by one arrow at the start.
    pub fn prepend(&self, arrow: usize, new_start: usize) -> Self {
        let mut arrows = Vec::with_capacity(self.arrows.len() + 1);
        arrows.push(arrow);
        arrows.extend(self.arrows.iter().copied());
        Path { start: new_start, arrows }
    }

    /// Concatenation `self` then `other` (caller guarantees composability).
    pub fn concat(&self, other: &Path) -> Self {
        let mut arrows = self.arrows.clone();
        arrows.extend(other.arrows.iter().copied());
        Path { start: self.start, arrows }
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.start.cmp(&other.start))
            .then_with(|| self.arrows.cmp(&other.arrows))
    }
}
