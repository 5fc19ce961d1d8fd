//! Transmonomials as recursive trees.
//!
//! A monomial is either a leaf `l_m` (iterated log for `m > 0`, `x` for
//! `m = 0`, iterated exp for `m < 0`) or `exp(L)` for a purely large
//! transseries `L`. The canonical form collapses `exp(1*l_(m+1))` to `l_m`,
//! so structural equality coincides with order equality. Rendering the
//! nested exponents as a tree (children are the terms of the exponent, edges
//! carry coefficients, leaves carry their integer label) gives the tree view
//! used by the export functions and by the derivative.

use std::cmp::Ordering;
use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::coeff::Coeff;
use crate::series::Transseries;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Monomial {
    /// `l_m`: the m-fold iterated log of x (negative m for iterated exp).
    Leaf(i32),
    /// `exp(L)` with `L` purely large and not of the collapsed leaf shape.
    Exp(Transseries),
}

/// Output format for [`Monomial::tree_export`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TreeFormat {
    Json,
    Dot,
}

impl Monomial {
    pub fn x() -> Monomial {
        Monomial::Leaf(0)
    }

    pub fn leaf(m: i32) -> Monomial {
        Monomial::Leaf(m)
    }

    /// The unit monomial `1 = exp(0)`.
    pub fn unit() -> Monomial {
        Monomial::Exp(Transseries::zero())
    }

    /// Canonical constructor for `exp(L)`. `L` must be purely large;
    /// `exp(1*l_(m+1))` collapses to the leaf `l_m`.
    pub fn exp_of(exponent: Transseries) -> Monomial {
        assert!(
            exponent.is_purely_large(),
            "exponent of a monomial must be purely large"
        );
        if exponent.num_terms() == 1 {
            let term = &exponent.terms()[0];
            if term.coeff.is_one() {
                if let Monomial::Leaf(k) = term.mono {
                    return Monomial::Leaf(k - 1);
                }
            }
        }
        Monomial::Exp(exponent)
    }

    pub fn is_unit(&self) -> bool {
        matches!(self, Monomial::Exp(l) if l.is_zero())
    }

    /// The exponent series `L` with `self = exp(L)`; leaves lift to
    /// `l_m = exp(1*l_(m+1))`.
    pub fn exponent(&self) -> Transseries {
        match self {
            Monomial::Leaf(m) => Transseries::leaf(m + 1),
            Monomial::Exp(l) => l.clone(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        if self.is_unit() {
            return other.clone();
        }
        if other.is_unit() {
            return self.clone();
        }
        Monomial::exp_of(self.exponent().add(&other.exponent()))
    }

    pub fn inv(&self) -> Monomial {
        Monomial::exp_of(self.exponent().neg())
    }

    /// `self^c` for a coefficient `c` (rational in all canonical uses).
    pub fn pow(&self, c: &Coeff) -> Monomial {
        if c.is_zero() {
            return Monomial::unit();
        }
        Monomial::exp_of(self.exponent().scale(c))
    }

    /// `self` compared to the unit in the asymptotic order.
    pub fn cmp_unit(&self) -> Ordering {
        match self {
            Monomial::Leaf(_) => Ordering::Greater,
            Monomial::Exp(l) => match l.sign() {
                s if s > 0 => Ordering::Greater,
                s if s < 0 => Ordering::Less,
                _ => Ordering::Equal,
            },
        }
    }

    pub fn is_large(&self) -> bool {
        self.cmp_unit() == Ordering::Greater
    }

    pub fn is_small(&self) -> bool {
        self.cmp_unit() == Ordering::Less
    }

    /// True when some leaf `l_m` with `m >= 1` occurs anywhere in the tree.
    pub fn contains_log(&self) -> bool {
        match self {
            Monomial::Leaf(m) => *m >= 1,
            Monomial::Exp(l) => l.terms().iter().any(|t| t.mono.contains_log()),
        }
    }

    /// Longest root-to-leaf edge count of the tree.
    pub fn tree_height(&self) -> usize {
        match self {
            Monomial::Leaf(_) => 0,
            Monomial::Exp(l) => l
                .terms()
                .iter()
                .map(|t| 1 + t.mono.tree_height())
                .max()
                .unwrap_or(0),
        }
    }

    /// Largest leaf label of the tree; `None` for the unit (no leaves).
    pub fn tree_depth(&self) -> Option<i32> {
        match self {
            Monomial::Leaf(m) => Some(*m),
            Monomial::Exp(l) => l.terms().iter().filter_map(|t| t.mono.tree_depth()).max(),
        }
    }

    pub fn num_leaves(&self) -> usize {
        match self {
            Monomial::Leaf(_) => 1,
            Monomial::Exp(l) => l.terms().iter().map(|t| t.mono.num_leaves()).sum(),
        }
    }

    /// All monomials occurring as nodes of the tree, root included.
    pub fn tree_nodes(&self) -> Vec<Monomial> {
        let mut out = vec![self.clone()];
        if let Monomial::Exp(l) = self {
            for t in l.terms() {
                out.extend(t.mono.tree_nodes());
            }
        }
        out
    }

    pub fn tree_export(&self, format: TreeFormat) -> String {
        match format {
            TreeFormat::Json => self.tree_json().to_string(),
            TreeFormat::Dot => self.tree_dot(),
        }
    }

    pub fn tree_json(&self) -> Value {
        match self {
            Monomial::Leaf(m) => json!({ "kind": "leaf", "m": m }),
            Monomial::Exp(l) => {
                let children: Vec<Value> = l
                    .terms()
                    .iter()
                    .map(|t| {
                        json!({
                            "coeff": t.coeff.to_string(),
                            "node": t.mono.tree_json(),
                        })
                    })
                    .collect();
                json!({ "kind": "exp", "children": children })
            }
        }
    }

    pub fn tree_dot(&self) -> String {
        let mut out = String::from("digraph schmeling {\n");
        let mut counter = 0usize;
        self.dot_node(&mut out, &mut counter);
        out.push_str("}\n");
        out
    }

    fn dot_node(&self, out: &mut String, counter: &mut usize) -> usize {
        let id = *counter;
        *counter += 1;
        match self {
            Monomial::Leaf(m) => {
                let _ = writeln!(out, "  n{} [label=\"{}\", shape=circle];", id, m);
            }
            Monomial::Exp(l) => {
                let _ = writeln!(out, "  n{} [label=\"exp\", shape=box];", id);
                for t in l.terms() {
                    let child = t.mono.dot_node(out, counter);
                    let _ = writeln!(out, "  n{} -> n{} [label=\"{}\"];", id, child, t.coeff);
                }
            }
        }
        id
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Total asymptotic order on monomials. Leaves compare by label
    /// (`l_m` grows beyond `l_n` when `m < n`); `exp(L1)` against `exp(L2)`
    /// compares the exponents; mixed cases lift the leaf.
    fn cmp(&self, other: &Monomial) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        match (self, other) {
            (Monomial::Leaf(a), Monomial::Leaf(b)) => b.cmp(a),
            _ => self.exponent().cmp(&other.exponent()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::int;

    fn x() -> Monomial {
        Monomial::x()
    }

    fn xpow(n: i64, d: i64) -> Monomial {
        x().pow(&Coeff::rational(n, d))
    }

    #[test]
    fn collapse_rules() {
        // exp(log x) = x
        let log_x = Transseries::leaf(1);
        assert_eq!(Monomial::exp_of(log_x), Monomial::Leaf(0));
        // exp(x) = l_(-1), exp(exp(x)) = l_(-2)
        let ex = Monomial::exp_of(Transseries::leaf(0));
        assert_eq!(ex, Monomial::Leaf(-1));
        assert_eq!(Monomial::exp_of(Transseries::leaf(-1)), Monomial::Leaf(-2));
        // exp(2 log x) = x^2 stays an exp node
        let x2 = xpow(2, 1);
        assert!(matches!(x2, Monomial::Exp(_)));
        assert_eq!(x2.tree_height(), 1);
    }

    #[test]
    fn order_basics() {
        let log_x = Monomial::leaf(1);
        assert!(x() > log_x); // x beyond log x
        assert!(Monomial::leaf(-1) > xpow(100, 1)); // e^x beyond x^100
        assert!(x() > Monomial::unit());
        assert!(xpow(-1, 1) < Monomial::unit());
        assert!(xpow(3, 2) > x());
        assert!(xpow(3, 2) < xpow(2, 1));
        // e^(x^2) beyond e^(2x)
        let e_x2 = Monomial::exp_of(Transseries::from_mono(xpow(2, 1)));
        let e_2x = Monomial::exp_of(Transseries::term(Coeff::from_int(2), x()));
        assert!(e_x2 > e_2x);
    }

    #[test]
    fn group_structure() {
        let a = xpow(3, 1);
        let b = xpow(-3, 1);
        assert_eq!(a.mul(&b), Monomial::unit());
        assert_eq!(a.inv(), b);
        let lx = Monomial::leaf(1);
        let prod = x().mul(&lx); // x log x = exp(log x + log log x)
        assert!(prod > x());
        assert!(prod < xpow(2, 1));
        assert_eq!(prod.pow(&Coeff::from_rational(int(1))), prod);
    }

    #[test]
    fn tree_metrics_follow_stopping_rule() {
        // e^(e^(e^x) + x): children e^(e^x) = l_(-3)... no: exp(exp(x)) is
        // the leaf l_(-2), so both children are leaves and the height is 1.
        let inner = Transseries::leaf(-2).add(&Transseries::leaf(0));
        let g = Monomial::exp_of(inner);
        assert_eq!(g.tree_height(), 1);
        assert_eq!(g.tree_depth(), Some(0));
        // e^(e^(e^x) + x^2) has tree-depth 1 through the x^2 child.
        let inner2 = Transseries::leaf(-2).add(&Transseries::from_mono(xpow(2, 1)));
        let g2 = Monomial::exp_of(inner2);
        assert_eq!(g2.tree_height(), 2);
        assert_eq!(g2.tree_depth(), Some(1));
    }

    #[test]
    fn tree_export_shapes() {
        let g = xpow(2, 1);
        let v = g.tree_json();
        assert_eq!(v["kind"], "exp");
        assert_eq!(v["children"][0]["coeff"], "2");
        assert_eq!(v["children"][0]["node"]["kind"], "leaf");
        assert_eq!(v["children"][0]["node"]["m"], 1);
        let dot = g.tree_export(TreeFormat::Dot);
        assert!(dot.contains("exp"));
        assert!(dot.contains("label=\"2\""));
        assert_eq!(x().tree_json(), json!({"kind": "leaf", "m": 0}));
    }
}
