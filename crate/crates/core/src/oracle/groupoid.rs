use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};

use crate::rational::{factorial, Rational};
use crate::{Error, Result, SignedRatio};

const MAX_CLASSES: usize = 1_000_000;
const MAX_GROUP_ORDER: u64 = 1_000_000;
const MAX_OBJECTS: u64 = 1 << 20;

/// A finite Z/2-graded groupoid remembered only through its isomorphism
/// classes: `(automorphism count, parity) -> multiplicity`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupoidCard {
    classes: BTreeMap<(BigUint, u8), BigUint>,
}

impl GroupoidCard {
    pub fn empty() -> Self {
        GroupoidCard::default()
    }

    /// One object with one automorphism.
    pub fn unit() -> Self {
        GroupoidCard::discrete(1)
    }

    /// Adds `multiplicity` classes with `aut` automorphisms and the given parity.
    /// Panics if `aut` is zero.
    pub fn with_class(mut self, aut: BigUint, parity: bool, multiplicity: BigUint) -> Self {
        assert!(!aut.is_zero(), "automorphism groups are nonempty");
        if !multiplicity.is_zero() {
            *self.classes.entry((aut, parity as u8)).or_default() += multiplicity;
        }
        self
    }

    /// A set of `m` points.
    pub fn discrete(m: u64) -> Self {
        GroupoidCard::empty().with_class(BigUint::one(), false, BigUint::from(m))
    }

    /// One object with automorphism group `Z_|m|`, odd when `m < 0`.
    pub fn cyclic(m: i64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("cyclic group order must be nonzero"));
        }
        let g = GroupoidCard::empty().with_class(BigUint::from(m.unsigned_abs()), false, BigUint::one());
        Ok(if m < 0 { g.negate() } else { g })
    }

    /// `G^m`, the `m`-fold product; `G^0` is the unit.
    pub fn power(&self, m: usize) -> Result<Self> {
        (0..m).try_fold(GroupoidCard::unit(), |acc, _| acc.product(self))
    }

    /// `(G)_{n,K} = prod_{i<n} (G + K x [i])`.
    pub fn pochhammer_groupoid(g: &GroupoidCard, n: usize, k: &GroupoidCard) -> Result<Self> {
        let mut acc = GroupoidCard::unit();
        for i in 0..n {
            let factor = g.union(&k.product(&GroupoidCard::discrete(i as u64))?);
            acc = acc.product(&factor)?;
        }
        Ok(acc)
    }

    /// `prod_{i<n} Z_{m+il}` with `Z_{-k} = -Z_k`.
    pub fn cyclic_chain(m: i64, n: usize, l: i64) -> Result<Self> {
        let mut acc = GroupoidCard::unit();
        for i in 0..n {
            acc = acc.product(&GroupoidCard::cyclic(m + i as i64 * l)?)?;
        }
        Ok(acc)
    }

    pub fn negate(&self) -> Self {
        GroupoidCard {
            classes: self
                .classes
                .iter()
                .map(|((aut, p), mult)| ((aut.clone(), p ^ 1), mult.clone()))
                .collect(),
        }
    }

    pub fn union(&self, other: &GroupoidCard) -> Self {
        let mut out = self.clone();
        for ((aut, p), mult) in &other.classes {
            *out.classes.entry((aut.clone(), *p)).or_default() += mult;
        }
        out
    }

    pub fn product(&self, other: &GroupoidCard) -> Result<Self> {
        if self.classes.len().saturating_mul(other.classes.len()) > MAX_CLASSES {
            return Err(Error::SizeExplosion("too many isomorphism classes"));
        }
        let mut out = GroupoidCard::empty();
        for ((a1, p1), m1) in &self.classes {
            for ((a2, p2), m2) in &other.classes {
                *out.classes.entry((a1 * a2, p1 ^ p2)).or_default() += m1 * m2;
            }
        }
        Ok(out)
    }

    /// `sum multiplicity (-1)^parity / aut`.
    pub fn cardinality(&self) -> Rational {
        self.classes.iter().fold(Rational::zero(), |acc, ((aut, p), mult)| {
            let term = Rational::new(BigInt::from(mult.clone()), BigInt::from(aut.clone()));
            if *p == 1 {
                acc - term
            } else {
                acc + term
            }
        })
    }

    /// Number of distinct `(aut, parity)` keys.
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn classes(&self) -> impl Iterator<Item = (&BigUint, bool, &BigUint)> {
        self.classes.iter().map(|((aut, p), m)| (aut, *p == 1, m))
    }
}

fn signed_discrete(r: &SignedRatio) -> GroupoidCard {
    let g = GroupoidCard::discrete(r.numerator);
    if r.negative {
        g.negate()
    } else {
        g
    }
}

/// Cardinality at `[n]` of
/// `(±[a])_{n,[b]} (±[c])_{n,[d]} Z_b^n Z_d^n Z_{±e,n,f} [f]^n`.
pub fn hyper_groupoid_card(r1: SignedRatio, r2: SignedRatio, r3: SignedRatio, n: usize) -> Result<Rational> {
    let as_i64 = |v: u64| i64::try_from(v).map_err(|_| Error::InvalidArgument("parameter too large"));
    let a = GroupoidCard::pochhammer_groupoid(&signed_discrete(&r1), n, &GroupoidCard::discrete(r1.denominator))?;
    let c = GroupoidCard::pochhammer_groupoid(&signed_discrete(&r2), n, &GroupoidCard::discrete(r2.denominator))?;
    let zb = GroupoidCard::cyclic(as_i64(r1.denominator)?)?.power(n)?;
    let zd = GroupoidCard::cyclic(as_i64(r2.denominator)?)?.power(n)?;
    let e = r3.signed_numerator();
    let f = as_i64(r3.denominator)?;
    if let Some(i) = (0..n as i64).find(|i| e + i * f == 0) {
        return Err(Error::PochhammerZeroDenominator { n: i as usize + 1 });
    }
    let ze = GroupoidCard::cyclic_chain(e, n, f)?;
    let fx = GroupoidCard::discrete(r3.denominator).power(n)?;
    let total = [c, zb, zd, ze, fx].iter().try_fold(a, |acc, g| acc.product(g))?;
    Ok(total.cardinality())
}

/// A permutation group acting on a finite set of objects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ActionKind {
    /// `S_n` on the subsets of `[n]`.
    Subsets(usize),
    /// `S_n^{k-1}` on `P([n])^{k-1}`, componentwise.
    Ek { n: usize, k: usize },
}

/// All permutations of `0..n` in lexicographic order.
fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut p: Vec<u8> = (0..n as u8).collect();
    let mut out = vec![p.clone()];
    while let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) {
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot has a successor");
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
    out
}

fn apply_to_subset(perm: &[u8], mask: u32) -> u32 {
    perm.iter()
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .fold(0, |acc, (_, &img)| acc | 1 << img)
}

/// `sum over orbits 1/|stabilizer|`, by enumerating every group element
/// against one representative per orbit.
pub fn action_groupoid_card(kind: ActionKind) -> Result<Rational> {
    let (n, copies) = match kind {
        ActionKind::Subsets(n) => (n, 1),
        ActionKind::Ek { n, k } => {
            if k == 0 {
                return Err(Error::InvalidArgument("k must be at least 1"));
            }
            (n, k - 1)
        }
    };
    if n > 12 {
        return Err(Error::SizeExplosion("permutation degree too large"));
    }
    let sym = factorial(n).to_u64().unwrap_or(u64::MAX);
    let group_order = (0..copies).try_fold(1u64, |acc, _| acc.checked_mul(sym));
    let objects = (0..copies).try_fold(1u64, |acc, _| acc.checked_mul(1 << n));
    match (group_order, objects) {
        (Some(g), Some(o)) if g <= MAX_GROUP_ORDER && o <= MAX_OBJECTS => {}
        _ => return Err(Error::SizeExplosion("action groupoid too large to enumerate")),
    }
    if copies == 0 {
        // one object, trivial group
        return Ok(Rational::one());
    }
    let perms = permutations(n);
    let subsets = 1usize << n;
    let object_count = subsets.pow(copies as u32);
    let decode = |mut idx: usize| -> Vec<usize> {
        let mut out = vec![0; copies];
        for slot in out.iter_mut() {
            *slot = idx % subsets;
            idx /= subsets;
        }
        out
    };
    let encode = |parts: &[usize]| parts.iter().rev().fold(0usize, |acc, &s| acc * subsets + s);

    let mut seen = vec![false; object_count];
    let mut total = Rational::zero();
    let mut choice = vec![0usize; copies];
    for start in 0..object_count {
        if seen[start] {
            continue;
        }
        let rep = decode(start);
        let mut stabilizer = 0u64;
        let mut image = vec![0usize; copies];
        choice.iter_mut().for_each(|c| *c = 0);
        loop {
            for (slot, (&g, &s)) in image.iter_mut().zip(choice.iter().zip(&rep)) {
                *slot = apply_to_subset(&perms[g], s as u32) as usize;
            }
            let idx = encode(&image);
            seen[idx] = true;
            if idx == start {
                stabilizer += 1;
            }
            // next group element, mixed radix over the copies
            let mut pos = 0;
            while pos < copies {
                choice[pos] += 1;
                if choice[pos] < perms.len() {
                    break;
                }
                choice[pos] = 0;
                pos += 1;
            }
            if pos == copies {
                break;
            }
        }
        total += Rational::new(BigInt::one(), BigInt::from(stabilizer));
    }
    Ok(total)
}
