//! The ternary tree of primitive Pythagorean triples rooted at (3, 4, 5),
//! generated by left-multiplying three fixed integer matrices, with
//! primitivity checks and inverse path lookup.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::kernel::{self, Nat};

/// Branch labels, in the order the three generator matrices are listed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MatrixLabel {
    M1,
    M2,
    M3,
}

impl MatrixLabel {
    pub const ALL: [MatrixLabel; 3] = [MatrixLabel::M1, MatrixLabel::M2, MatrixLabel::M3];
}

impl std::fmt::Display for MatrixLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            MatrixLabel::M1 => "M1",
            MatrixLabel::M2 => "M2",
            MatrixLabel::M3 => "M3",
        };
        f.write_str(s)
    }
}

// The three generators and their integer inverses. Each generator maps a
// primitive triple written (odd leg, even leg, hypotenuse) to another one
// and strictly grows the hypotenuse.
const MATRICES: [[[i128; 3]; 3]; 3] = [
    [[1, -2, 2], [2, -1, 2], [2, -2, 3]],
    [[1, 2, 2], [2, 1, 2], [2, 2, 3]],
    [[-1, 2, 2], [-2, 1, 2], [-2, 2, 3]],
];
const INVERSES: [[[i128; 3]; 3]; 3] = [
    [[1, 2, -2], [-2, -1, 2], [-2, -2, 3]],
    [[1, 2, -2], [2, 1, -2], [-2, -2, 3]],
    [[-1, -2, 2], [2, 1, -2], [-2, -2, 3]],
];

/// A tree node: the triple as the column vector (a, b, c), plus the matrix
/// path from the root. Empty path means the root (3, 4, 5).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TreeTriple {
    pub a: Nat,
    pub b: Nat,
    pub c: Nat,
    pub path: Vec<MatrixLabel>,
}

impl TreeTriple {
    pub fn root() -> Self {
        TreeTriple { a: 3, b: 4, c: 5, path: Vec::new() }
    }

    pub fn depth(&self) -> usize {
        self.path.len()
    }

    pub fn triple(&self) -> (Nat, Nat, Nat) {
        (self.a, self.b, self.c)
    }
}

fn apply(m: &[[i128; 3]; 3], t: (Nat, Nat, Nat)) -> Result<(Nat, Nat, Nat)> {
    let v = [
        i128::try_from(t.0).map_err(|_| Error::Overflow)?,
        i128::try_from(t.1).map_err(|_| Error::Overflow)?,
        i128::try_from(t.2).map_err(|_| Error::Overflow)?,
    ];
    let mut out = [0i128; 3];
    for (i, row) in m.iter().enumerate() {
        let mut acc = 0i128;
        for j in 0..3 {
            acc = acc
                .checked_add(row[j].checked_mul(v[j]).ok_or(Error::Overflow)?)
                .ok_or(Error::Overflow)?;
        }
        out[i] = acc;
    }
    if out.iter().any(|&w| w <= 0) {
        return Err(Error::Domain("matrix product is not positive"));
    }
    Ok((out[0] as Nat, out[1] as Nat, out[2] as Nat))
}

/// The three children of a node, in M1, M2, M3 order, paths extended.
pub fn children(t: &TreeTriple) -> Result<[TreeTriple; 3]> {
    let mut out = Vec::with_capacity(3);
    for (m, label) in MATRICES.iter().zip(MatrixLabel::ALL) {
        let (a, b, c) = apply(m, t.triple())?;
        let mut path = t.path.clone();
        path.push(label);
        out.push(TreeTriple { a, b, c, path });
    }
    Ok(out.try_into().expect("exactly three children"))
}

/// Breadth-first enumeration of all nodes with depth <= max_depth and
/// hypotenuse <= max_hypotenuse, ordered by depth and then M1 < M2 < M3
/// path order. The generators strictly grow c, so pruning by c is exact.
pub fn enumerate_tree(max_depth: usize, max_hypotenuse: Nat) -> Result<Vec<TreeTriple>> {
    let mut out = Vec::new();
    let root = TreeTriple::root();
    if root.c > max_hypotenuse {
        return Ok(out);
    }
    let mut queue = VecDeque::from([root]);
    while let Some(node) = queue.pop_front() {
        if node.depth() < max_depth {
            for child in children(&node)? {
                if child.c <= max_hypotenuse {
                    queue.push_back(child);
                }
            }
        }
        out.push(node);
    }
    Ok(out)
}

/// True iff the valid Pythagorean triple (a, b, c) has coprime legs.
pub fn is_primitive(a: Nat, b: Nat, c: Nat) -> Result<bool> {
    require_pythagorean(a, b, c)?;
    Ok(kernel::gcd(a, b)? == 1)
}

fn require_pythagorean(a: Nat, b: Nat, c: Nat) -> Result<()> {
    if a == 0 || b == 0 || c == 0 {
        return Err(Error::NotPythagorean);
    }
    let lhs = kernel::add(kernel::mul(a, a)?, kernel::mul(b, b)?)?;
    if lhs != kernel::mul(c, c)? {
        return Err(Error::NotPythagorean);
    }
    Ok(())
}

/// The unique path from (3, 4, 5) to the given primitive triple, up to leg
/// order. Walks upward with the inverse matrices: every non-root node has
/// exactly one parent with positive entries and a smaller hypotenuse.
pub fn find_path(a: Nat, b: Nat, c: Nat) -> Result<Vec<MatrixLabel>> {
    if !is_primitive(a, b, c)? {
        return Err(Error::NotPrimitive);
    }
    // Tree nodes carry (odd, even) leg order; normalize the input to match.
    let (mut a, mut b) = (a, b);
    if a % 2 == 0 {
        std::mem::swap(&mut a, &mut b);
    }
    let mut t = (a, b, c);
    let mut reversed = Vec::new();
    while t != (3, 4, 5) {
        let mut parent = None;
        for (mi, label) in INVERSES.iter().zip(MatrixLabel::ALL) {
            let Ok(u) = apply(mi, t) else { continue };
            if u.2 < t.2 && require_pythagorean(u.0, u.1, u.2).is_ok() {
                debug_assert!(parent.is_none(), "two parents for {t:?}");
                parent = Some((label, u));
            }
        }
        match parent {
            Some((label, u)) => {
                reversed.push(label);
                t = u;
            }
            // unreachable for genuine primitive triples
            None => return Err(Error::NotPrimitive),
        }
    }
    reversed.reverse();
    Ok(reversed)
}
