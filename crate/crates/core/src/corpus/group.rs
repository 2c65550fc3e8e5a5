use std::fmt::Write as _;

use crate::error::{Error, Result};

/// A finite group given by its full multiplication table, identity at index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroupTable {
    order: usize,
    mul: Vec<usize>,
}

impl FiniteGroupTable {
    /// Checks closure, identity, associativity and inverses exhaustively.
    pub fn new(order: usize, mul: Vec<usize>) -> Result<Self> {
        if order == 0 {
            return Err(Error::Group("order must be at least 1".into()));
        }
        if mul.len() != order * order {
            return Err(Error::Group(format!("expected {} products, found {}", order * order, mul.len())));
        }
        if let Some(&bad) = mul.iter().find(|&&v| v >= order) {
            return Err(Error::Group(format!("product {bad} outside 0..{order}")));
        }
        let g = Self { order, mul };
        for a in 0..order {
            if g.mul(0, a) != a || g.mul(a, 0) != a {
                return Err(Error::Group(format!("0 is not an identity for {a}")));
            }
            if !(0..order).any(|b| g.mul(a, b) == 0 && g.mul(b, a) == 0) {
                return Err(Error::Group(format!("{a} has no inverse")));
            }
            for b in 0..order {
                for c in 0..order {
                    if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                        return Err(Error::Group(format!("({a}*{b})*{c} != {a}*({b}*{c})")));
                    }
                }
            }
        }
        Ok(g)
    }

    /// `Z/n` with `a * b = a + b mod n`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1, "cyclic group of order 0");
        let mul = (0..n * n).map(|k| (k / n + k % n) % n).collect();
        Self { order: n, mul }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    /// Parses `group <order>` followed by one `mul <i> <j> <k>` line per product.
    pub fn parse(text: &str) -> Result<Self> {
        let perr = |line: usize, message: String| Error::Parse { line, message };
        let mut order = None;
        let mut mul: Vec<Option<usize>> = Vec::new();
        let mut last = 1;
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let toks: Vec<&str> = raw.split_whitespace().collect();
            if toks.is_empty() || toks[0].starts_with('#') {
                continue;
            }
            last = line;
            let nums = toks[1..]
                .iter()
                .map(|t| t.parse::<usize>().map_err(|_| perr(line, format!("expected a number, found `{t}`"))))
                .collect::<Result<Vec<_>>>()?;
            match (toks[0], order, nums.as_slice()) {
                ("group", None, &[n]) => {
                    order = Some(n);
                    mul = vec![None; n * n];
                }
                ("mul", Some(n), &[i, j, k]) => {
                    if i >= n || j >= n {
                        return Err(perr(line, format!("factor outside 0..{n}")));
                    }
                    if mul[i * n + j].replace(k).is_some() {
                        return Err(perr(line, format!("product {i}*{j} given twice")));
                    }
                }
                ("group", Some(_), _) => return Err(perr(line, "second header".into())),
                ("mul", None, _) => return Err(perr(line, "`mul` before `group` header".into())),
                _ => return Err(perr(line, format!("malformed line `{}`", raw.trim()))),
            }
        }
        let order = order.ok_or_else(|| perr(1, "missing `group` header".into()))?;
        let full = mul.iter().copied().collect::<Option<Vec<_>>>();
        let full = full.ok_or_else(|| perr(last, "multiplication table is not exhaustive".into()))?;
        Self::new(order, full).map_err(|e| perr(last, e.to_string()))
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "group {}", self.order).unwrap();
        for i in 0..self.order {
            for j in 0..self.order {
                writeln!(out, "mul {i} {j} {}", self.mul(i, j)).unwrap();
            }
        }
        out
    }
}
