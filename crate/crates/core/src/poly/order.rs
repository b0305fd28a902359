use std::cmp::Ordering;

use super::Monomial;

/// Orders usable inside a block.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BaseOrder {
    Lex,
    GrevLex,
}

/// Monomial orders. Variable `0` is the largest variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    GrevLex,
    /// Elimination order: the variables flagged in `first` dominate every
    /// other variable. Each block is compared with `inner`.
    Block { first: Vec<bool>, inner: BaseOrder },
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::GrevLex
    }
}

fn cmp_base(base: BaseOrder, a: &[u32], b: &[u32], keep: impl Fn(usize) -> bool) -> Ordering {
    match base {
        BaseOrder::Lex => {
            for i in 0..a.len() {
                if !keep(i) {
                    continue;
                }
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            Ordering::Equal
        }
        BaseOrder::GrevLex => {
            let da: u32 = (0..a.len()).filter(|&i| keep(i)).map(|i| a[i]).sum();
            let db: u32 = (0..b.len()).filter(|&i| keep(i)).map(|i| b[i]).sum();
            if da != db {
                return da.cmp(&db);
            }
            for i in (0..a.len()).rev() {
                if !keep(i) {
                    continue;
                }
                match a[i].cmp(&b[i]) {
                    Ordering::Equal => continue,
                    o => return o.reverse(),
                }
            }
            Ordering::Equal
        }
    }
}

impl MonomialOrder {
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match self {
            MonomialOrder::Lex => cmp_base(BaseOrder::Lex, a, b, |_| true),
            MonomialOrder::GrevLex => cmp_base(BaseOrder::GrevLex, a, b, |_| true),
            MonomialOrder::Block { first, inner } => {
                cmp_base(*inner, a, b, |i| first[i]).then_with(|| cmp_base(*inner, a, b, |i| !first[i]))
            }
        }
    }

    /// Block order eliminating the variables whose indices are listed.
    pub fn eliminating(nvars: usize, vars: &[usize]) -> Self {
        let mut first = vec![false; nvars];
        for &v in vars {
            first[v] = true;
        }
        MonomialOrder::Block {
            first,
            inner: BaseOrder::GrevLex,
        }
    }

    /// Whether comparisons are refined by total degree first.
    pub fn is_graded(&self) -> bool {
        matches!(self, MonomialOrder::GrevLex)
    }

    pub(crate) fn check_len(&self, nvars: usize) -> bool {
        match self {
            MonomialOrder::Block { first, .. } => first.len() == nvars,
            _ => true,
        }
    }
}
