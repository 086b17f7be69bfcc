use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, ToPrimitive, Zero};

use super::compositions::for_each_composition;
use crate::rational::{factorial, from_bigint, multinomial, pow, Rational};
use crate::{EgfSeries, Error, Result};

/// Calls `visit` with every partition of `{0..m}` whose blocks all have at
/// least `min_block` elements. Blocks are listed by smallest element.
pub fn for_each_set_partition(m: usize, min_block: usize, mut visit: impl FnMut(&[Vec<usize>])) {
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    grow(0, m, min_block, &mut blocks, &mut visit);
}

fn grow(next: usize, m: usize, min: usize, blocks: &mut Vec<Vec<usize>>, visit: &mut impl FnMut(&[Vec<usize>])) {
    // blocks smaller than `min` need enough remaining elements to fill up
    let deficit: usize = blocks.iter().map(|b| min.saturating_sub(b.len())).sum();
    if deficit > m - next {
        return;
    }
    if next == m {
        visit(blocks);
        return;
    }
    for i in 0..blocks.len() {
        blocks[i].push(next);
        grow(next + 1, m, min, blocks, visit);
        blocks[i].pop();
    }
    blocks.push(vec![next]);
    grow(next + 1, m, min, blocks, visit);
    blocks.pop();
}

/// Partitions of `{1..n}` with blocks of size `>= min_block`, blocks sorted
/// by minimum element.
pub fn set_partitions(n: usize, min_block: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for_each_set_partition(n, min_block, |p| {
        out.push(p.iter().map(|b| b.iter().map(|e| e + 1).collect()).collect());
    });
    out
}

/// `pi_1, ..., pi_d`. Level 0 partitions the elements `1..=n`; level `i`
/// partitions the block indices (0-based) of level `i - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PartitionChain {
    pub levels: Vec<Vec<Vec<usize>>>,
}

impl PartitionChain {
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    pub fn top(&self) -> &[Vec<usize>] {
        self.levels.last().map_or(&[], |l| l.as_slice())
    }
}

/// Visits every chain of depth `d` with all blocks of size `>= s`; with
/// `require_top_ge2` the last level must have at least two blocks. Level 0
/// is passed with 0-based elements.
pub fn for_each_chain(
    n: usize,
    d: usize,
    s: usize,
    require_top_ge2: bool,
    mut visit: impl FnMut(&[Vec<Vec<usize>>]),
) {
    if n == 0 || d == 0 {
        return;
    }
    let mut levels = Vec::with_capacity(d);
    descend(n, d, s, require_top_ge2, &mut levels, &mut visit);
}

fn descend(
    m: usize,
    d: usize,
    s: usize,
    top2: bool,
    levels: &mut Vec<Vec<Vec<usize>>>,
    visit: &mut impl FnMut(&[Vec<Vec<usize>>]),
) {
    for_each_set_partition(m, s, |p| {
        // block counts only shrink going up
        if top2 && p.len() < 2 {
            return;
        }
        levels.push(p.to_vec());
        if levels.len() == d {
            visit(levels);
        } else {
            descend(p.len(), d, s, top2, levels, visit);
        }
        levels.pop();
    });
}

pub fn partition_chains(n: usize, d: usize, s: usize, require_top_ge2: bool) -> Vec<PartitionChain> {
    let mut out = Vec::new();
    for_each_chain(n, d, s, require_top_ge2, |levels| {
        let mut levels = levels.to_vec();
        for block in levels[0].iter_mut() {
            for e in block.iter_mut() {
                *e += 1;
            }
        }
        out.push(PartitionChain { levels });
    });
    out
}

/// `|Par_d^s([n])|` from nested compositions: at each level
/// `sum_{a |- l(a_{i-1})} multinomial / l(a_i)!`, with `l(a_d) >= 2` on top.
pub fn chains_count_formula(n: usize, d: usize, s: usize) -> Rational {
    nested_sum(n, d, s, &|_, len| from_bigint(factorial(len)).recip(), &|len| len >= 2)
}

fn nested_sum(
    m: usize,
    levels_left: usize,
    s: usize,
    level_weight: &dyn Fn(bool, usize) -> Rational,
    top_ok: &dyn Fn(usize) -> bool,
) -> Rational {
    let mut acc = Rational::zero();
    for_each_composition(m, s, false, |a| {
        let top = levels_left == 1;
        if top && !top_ok(a.len()) {
            return;
        }
        let here = from_bigint(multinomial(a)) * level_weight(top, a.len());
        acc += if top {
            here
        } else {
            here * nested_sum(a.len(), levels_left - 1, s, level_weight, top_ok)
        };
    });
    acc
}

/// The nested-multinomial count as printed: only `1/l(a_d)!` is divided out
/// and the top condition reads `l(a_d) >= s`.
pub fn chains_count_formula_printed(n: usize, d: usize, s: usize) -> Rational {
    nested_sum(
        n,
        d,
        s,
        &|top, len| if top { from_bigint(factorial(len)).recip() } else { Rational::one() },
        &|len| len >= s,
    )
}

/// `(enumerated |Par_d^s([n])|, nested composition formula)`.
pub fn chains_count_check(n: usize, d: usize, s: usize) -> (u64, u64) {
    let mut count = 0u64;
    for_each_chain(n, d, s, true, |_| count += 1);
    let formula = chains_count_formula(n, d, s);
    assert!(formula.is_integer(), "chain count formula must be integral");
    (count, formula.to_integer().to_u64().expect("count fits in u64"))
}

/// `sum_{pi in Par([n])} f_{|pi|} prod_b g_{|b|}`, the `x^n/n!` coefficient
/// of `f o g` by brute force.
pub fn compose_by_partitions(f: &EgfSeries, g: &EgfSeries, n: usize) -> Rational {
    if n == 0 {
        return f.coeff(0).clone();
    }
    let mut acc = Rational::zero();
    for_each_set_partition(n, 1, |p| {
        let mut term = f.coeff(p.len()).clone();
        for b in p {
            if term.is_zero() {
                break;
            }
            term *= g.coeff(b.len());
        }
        acc += term;
    });
    acc
}

/// Chain sum `sum f_{|pi_d|} prod_{i,b} f_{|b|}` over chains of depth `d`
/// with blocks of size `>= 1`. With `allow_trivial_top` a single block on
/// top is allowed and the sum equals the `x^n/n!` coefficient of `f^{<d+1>}`.
pub fn iterated_compose_oracle(f: &EgfSeries, d: usize, n: usize, allow_trivial_top: bool) -> Result<Rational> {
    if !f.coeff(0).is_zero() {
        return Err(Error::NonzeroConstant);
    }
    if n == 0 || d == 0 {
        return Err(Error::InvalidArgument("n and d must be at least 1"));
    }
    if f.order() < n {
        return Err(Error::OrderTooSmall { have: f.order(), need: n });
    }
    let mut acc = Rational::zero();
    for_each_chain(n, d, 1, !allow_trivial_top, |levels| {
        acc += chain_weight(levels, |m| f.coeff(m).clone());
    });
    Ok(acc)
}

fn chain_weight(levels: &[Vec<Vec<usize>>], w: impl Fn(usize) -> Rational) -> Rational {
    let top = levels.last().map_or(0, Vec::len);
    let mut term = w(top);
    for level in levels {
        for b in level {
            if term.is_zero() {
                return term;
            }
            term *= w(b.len());
        }
    }
    term
}

/// Alternating chain sum for `C_{N,n}^f`:
/// `-N! u(n) + sum_{d>=1} sum_{Par_d^2([n])} (-N!)^{d+1} u(|pi_d|) prod_{i,b} u(|b|)`
/// with `u(m) = f_{m+N-1} m! / (m+N-1)!`.
pub fn chain_sum_comp_bernoulli(f: &EgfSeries, shift: usize, n: usize) -> Result<Rational> {
    if shift == 0 {
        return Err(Error::InvalidArgument("shift must be at least 1"));
    }
    if n < 2 {
        return Err(Error::InvalidArgument("n must be at least 2"));
    }
    if f.order() < n + shift - 1 {
        return Err(Error::OrderTooSmall { have: f.order(), need: n + shift - 1 });
    }
    if f.coeff(shift).is_zero() {
        return Err(Error::ZeroPivot { index: shift });
    }
    let u = |m: usize| {
        f.coeff(m + shift - 1) * from_bigint(factorial(m)) / from_bigint(factorial(m + shift - 1))
    };
    let nf = -from_bigint(factorial(shift));
    let mut acc = &nf * u(n);
    let mut d = 1;
    while 1usize << (d + 1) <= n {
        let sign_weight = pow(&nf, d + 1);
        let mut level = Rational::zero();
        for_each_chain(n, d, 2, true, |levels| level += chain_weight(levels, u));
        acc += sign_weight * level;
        d += 1;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::SeriesName;

    #[test]
    fn set_partition_counts() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, b) in bell.iter().enumerate() {
            assert_eq!(set_partitions(n, 1).len(), *b, "n = {n}");
        }
        assert_eq!(set_partitions(4, 2).len(), 4);
        assert!(set_partitions(1, 2).is_empty());
        assert_eq!(set_partitions(3, 1)[0], vec![vec![1, 2, 3]]);
        assert_eq!(set_partitions(2, 1), vec![vec![vec![1, 2]], vec![vec![1], vec![2]]]);
    }

    #[test]
    fn chain_examples() {
        assert_eq!(partition_chains(4, 1, 2, true).len(), 3);
        assert!(partition_chains(3, 1, 2, true).is_empty());
        let c = partition_chains(2, 1, 1, true);
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].levels[0], vec![vec![1], vec![2]]);
        assert_eq!(chains_count_check(4, 1, 2), (3, 3));
        assert_eq!(chains_count_check(3, 1, 2), (0, 0));
        assert_eq!(chains_count_check(2, 2, 1), (1, 1));
        assert_eq!(chains_count_formula_printed(2, 2, 1), int(5));
    }

    #[test]
    fn chain_counts_agree() {
        for n in 1..=6 {
            for d in 1..=3 {
                for s in 1..=2 {
                    let (a, b) = chains_count_check(n, d, s);
                    assert_eq!(a, b, "n={n} d={d} s={s}");
                }
            }
        }
    }

    #[test]
    fn iterated_composition() {
        let em1 = &SeriesName::Exp.series(6) - &EgfSeries::one(6);
        assert_eq!(iterated_compose_oracle(&em1, 1, 4, true).unwrap(), int(15));
        assert_eq!(iterated_compose_oracle(&em1, 1, 4, false).unwrap(), int(14));
        for d in 1..=3 {
            assert_eq!(iterated_compose_oracle(&EgfSeries::x(3), d, 1, true).unwrap(), int(1));
        }
        assert_eq!(
            iterated_compose_oracle(&SeriesName::Exp.series(4), 1, 2, true).unwrap_err(),
            Error::NonzeroConstant
        );
    }

    #[test]
    fn chain_sum_pins() {
        let e = SeriesName::Exp.series(10);
        assert_eq!(chain_sum_comp_bernoulli(&e, 2, 2).unwrap(), ratio(-2, 3));
        assert_eq!(chain_sum_comp_bernoulli(&e, 2, 3).unwrap(), ratio(-1, 2));
        assert_eq!(chain_sum_comp_bernoulli(&e, 2, 4).unwrap(), ratio(2, 45));
    }

    #[test]
    fn faa_di_bruno_small() {
        let e = SeriesName::Exp.series(6);
        let em1 = &e - &EgfSeries::one(6);
        assert_eq!(compose_by_partitions(&e, &em1, 4), int(15));
        let s = SeriesName::Sin.series(6);
        assert_eq!(compose_by_partitions(&s, &s, 3), int(-2));
    }
}
