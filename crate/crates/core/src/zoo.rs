//! Built-in split structures and preset models.

use crate::chow::{BasisElement, SplitChowStructure, StructureConstant};
use crate::error::{Error, Result};
use crate::ff::Fp;

/// Projective space `P^n`: classes `e_0..e_n` with `dim e_k = k`,
/// `e_a · e_b = e_{a+b-n}` when `a + b >= n`, and `deg e_0 = 1`.
pub fn projective_space(field: Fp, n: usize) -> SplitChowStructure {
    let basis = (0..=n).map(|k| BasisElement::new(format!("e{k}"), k)).collect();
    let mut constants = Vec::new();
    for a in 0..=n {
        for b in 0..=n {
            if a + b >= n {
                constants.push(StructureConstant { a, b, c: a + b - n, coeff: 1 });
            }
        }
    }
    SplitChowStructure::from_integer_data(format!("P{n}"), field, n, basis, &constants, &[(0, 1)], n)
        .expect("indices in range")
}

/// The point `Spec F`.
pub fn point(field: Fp) -> SplitChowStructure {
    let mut s = projective_space(field, 0);
    s = s.renamed("Spec");
    s
}

/// Split odd-dimensional quadric of dimension `d`, with `m = (d-1)/2`.
///
/// Basis in increasing dimension: `l0..lm` (dims `0..m`) then `hm..h0`
/// (dims `d-m..d`). Products: `h^i·h^j = h^{i+j}` for `i+j <= m`, otherwise
/// `2·l_{d-i-j}`; `h^i·l_j = l_{j-i}` for `j >= i`, else zero; `l_i·l_j = 0`;
/// `deg l0 = 1`.
pub fn split_quadric_odd(field: Fp, d: usize) -> Result<SplitChowStructure> {
    if d % 2 == 0 || d == 0 {
        return Err(Error::Model(format!(
            "quadric of dimension {d}: middle-dimension split classes unsupported"
        )));
    }
    let m = (d - 1) / 2;
    let l = |j: usize| j;
    let h = |i: usize| m + 1 + (m - i);
    let mut basis: Vec<BasisElement> = (0..=m).map(|j| BasisElement::new(format!("l{j}"), j)).collect();
    for i in (0..=m).rev() {
        basis.push(BasisElement::new(format!("h{i}"), d - i));
    }
    let mut constants = Vec::new();
    for i in 0..=m {
        for j in 0..=m {
            if i + j <= m {
                constants.push(StructureConstant { a: h(i), b: h(j), c: h(i + j), coeff: 1 });
            } else {
                constants.push(StructureConstant { a: h(i), b: h(j), c: l(d - i - j), coeff: 2 });
            }
            if j >= i {
                constants.push(StructureConstant { a: h(i), b: l(j), c: l(j - i), coeff: 1 });
                constants.push(StructureConstant { a: l(j), b: h(i), c: l(j - i), coeff: 1 });
            }
        }
    }
    SplitChowStructure::from_integer_data(format!("Q{d}"), field, d, basis, &constants, &[(l(0), 1)], h(0))
}

/// The conic: the one-dimensional split quadric with basis `e0 = pt`,
/// `e1 = [C]`.
pub fn conic(field: Fp) -> SplitChowStructure {
    let basis = vec![BasisElement::new("e0", 0), BasisElement::new("e1", 1)];
    let constants = [
        StructureConstant { a: 1, b: 1, c: 1, coeff: 1 },
        StructureConstant { a: 1, b: 0, c: 0, coeff: 1 },
    ];
    SplitChowStructure::from_integer_data("C", field, 1, basis, &constants, &[(0, 1)], 1).expect("indices in range")
}

/// Spec of a quadratic étale algebra seen over a splitting field: two
/// zero-dimensional classes, each top-dimensional. Not geometrically
/// irreducible, so validation rejects it.
pub fn two_point(field: Fp) -> SplitChowStructure {
    let basis = vec![BasisElement::new("q0", 0), BasisElement::new("q1", 0)];
    let constants = [
        StructureConstant { a: 0, b: 0, c: 0, coeff: 1 },
        StructureConstant { a: 1, b: 1, c: 1, coeff: 1 },
    ];
    SplitChowStructure::from_integer_data("TwoPoint", field, 0, basis, &constants, &[(0, 1), (1, 1)], 0)
        .expect("indices in range")
}

impl SplitChowStructure {
    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.set_name(name.into());
        self
    }
}
