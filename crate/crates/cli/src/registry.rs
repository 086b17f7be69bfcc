//! Known disagreements between published values and what this crate
//! computes. Each pin records both sides; `verify` reports a check as
//! KNOWN-DISCREPANCY only when the computed side still equals the pin.
//! Prose for every id lives in DISCREPANCIES.md.

pub struct Pin {
    pub key: &'static str,
    pub published: &'static str,
    pub pinned: &'static str,
}

pub struct Discrepancy {
    pub id: &'static str,
    pub title: &'static str,
    pub pins: &'static [Pin],
}

const fn pin(key: &'static str, published: &'static str, pinned: &'static str) -> Pin {
    Pin { key, published, pinned }
}

pub static REGISTRY: &[Discrepancy] = &[
    Discrepancy {
        id: "bernoulli-recursion-sign",
        title: "published recursion for B_{N,n}^f lacks the leading minus sign",
        pins: &[pin("exp N=1 n=1", "1/2", "-1/2")],
    },
    Discrepancy {
        id: "s-table-n0",
        title: "published B_{1,0}^S is -1, the definition gives 1/f_1 = 1",
        pins: &[pin("n=0", "-1", "1")],
    },
    Discrepancy {
        id: "s-table-n3",
        title: "published B_{1,3}^S has the wrong sign",
        pins: &[pin("n=3", "1/48", "-1/48")],
    },
    Discrepancy {
        id: "zeta2-table",
        title: "published B_{1,n}^{Z^2} entries for n >= 2 disagree with series division",
        pins: &[
            pin("n=2", "11/432", "-5/864"),
            pin("n=3", "1/144", "1/2304"),
            pin("n=4", "-217/324000", "13709/15552000"),
            pin("n=5", "-157/64800", "4669/8294400"),
            pin("n=6", "-21503/16669800", "62582129/307257753600"),
        ],
    },
    Discrepancy {
        id: "zeta-rising3-table",
        title: "published B_{3,1}^{Z^(3)} is -15/12, series division gives -15/2",
        pins: &[pin("n=1", "-15/12", "-15/2")],
    },
    Discrepancy {
        id: "zeta-sign-prefactor",
        title: "closed composition sum for Z^M with a global (-1)^n and N!^k",
        pins: &[pin("N=1 M=2 n=2", "59/864", "-5/864")],
    },
    Discrepancy {
        id: "comp2-table-n6",
        title: "published C_{2,6} is -655/53, reversion gives -655/63",
        pins: &[pin("n=6", "-655/53", "-655/63")],
    },
    Discrepancy {
        id: "comp-poly-table",
        title: "published C_{1,n}(x) rows are not the falling factorials forced by (1+y)^x",
        pins: &[
            pin("n=2", "1/2*x^2 - x", "x^2 - x"),
            pin("n=3", "1/6*x^3 - x^2 - 2*x", "x^3 - 3*x^2 + 2*x"),
            pin("n=4", "1/24*x^4 - 1/2*x^3 + 5/2*x^2 - 6*x", "x^4 - 6*x^3 + 11*x^2 - 6*x"),
            pin(
                "n=5",
                "1/120*x^5 - 1/6*x^4 + 3/2*x^3 - 8*x^2 + 24*x",
                "x^5 - 10*x^4 + 35*x^3 - 50*x^2 + 24*x",
            ),
            pin(
                "n=6",
                "1/720*x^6 - 1/24*x^5 - 7/12*x^4 - 31/6*x^3 + 32*x^2 - 120*x",
                "x^6 - 15*x^5 + 85*x^4 - 225*x^3 + 274*x^2 - 120*x",
            ),
            pin(
                "n=7",
                "1/5040*x^7 - 1/120*x^6 + 1/6*x^5 - 13/6*x^4 + 21*x^3 - 156*x^2 + 720*x",
                "x^7 - 21*x^6 + 175*x^5 - 735*x^4 + 1624*x^3 - 1764*x^2 + 720*x",
            ),
        ],
    },
    Discrepancy {
        id: "chain-sum-theorem",
        title: "alternating chain sum over Par_d^2 does not reproduce C_{2,n} for n = 3, 4",
        pins: &[pin("exp N=2 n=3", "5/6", "-1/2"), pin("exp N=2 n=4", "-68/45", "2/45")],
    },
    Discrepancy {
        id: "par-chain-formula",
        title: "published count of Par_d^s divides only by l(a_d)! and uses l(a_d) >= s",
        pins: &[pin("n=2 d=2 s=1", "5", "1")],
    },
    Discrepancy {
        id: "trig-parity-sign",
        title: "published parity weight for sine/cosine sums drops the pivot sign",
        pins: &[pin("sin L=1 2n=4", "31/350", "-11/350")],
    },
    Discrepancy {
        id: "top-partition-constraint",
        title: "requiring two or more top blocks loses the single-block terms of iterated composition",
        pins: &[pin("exp-1 d=1 n=4", "15", "14")],
    },
];

pub fn lookup(id: &str, key: &str) -> Option<&'static Pin> {
    REGISTRY.iter().find(|d| d.id == id)?.pins.iter().find(|p| p.key == key)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_id_is_documented() {
        let doc = include_str!("../../../DISCREPANCIES.md");
        for d in REGISTRY {
            assert!(doc.contains(&format!("`{}`", d.id)), "{} missing from DISCREPANCIES.md", d.id);
            assert!(!d.pins.is_empty());
            for p in d.pins {
                assert_ne!(p.published, p.pinned, "{}/{}", d.id, p.key);
            }
        }
    }

    #[test]
    fn ids_unique() {
        let mut ids: Vec<_> = REGISTRY.iter().map(|d| d.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), REGISTRY.len());
    }
}
