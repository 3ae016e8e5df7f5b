//! Named example instances.

use crate::error::{Error, Result};
use crate::instance::{ComponentSpec, InstanceSpec, SigmaSpec};
use crate::involution::SignedEntry;
use crate::roots::CartanType::{self, *};

#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub description: String,
    pub spec: InstanceSpec,
}

/// `(from component, from index, to component, to index, sign)`.
type Entry = (usize, usize, usize, usize, i32);

fn parabolic(components: &[(CartanType, usize)], crossed: &[&[usize]], map: &[Entry]) -> InstanceSpec {
    InstanceSpec {
        components: components.iter().map(|&(cartan, rank)| ComponentSpec { cartan, rank }).collect(),
        crossed: crossed.iter().map(|c| c.to_vec()).collect(),
        sigma: Some(SigmaSpec::SignedPermutation {
            entries: map
                .iter()
                .map(|&(fc, fi, tc, ti, sign)| SignedEntry { from: [fc, fi], to: [tc, ti], sign })
                .collect(),
        }),
        ..InstanceSpec::default()
    }
}

/// Same-component map given as `(from, to, sign)`.
fn single(t: CartanType, rank: usize, crossed: &[usize], map: &[(usize, usize, i32)]) -> InstanceSpec {
    let entries: Vec<Entry> = map.iter().map(|&(f, to, s)| (0, f, 0, to, s)).collect();
    parabolic(&[(t, rank)], &[crossed], &entries)
}

fn sl_flags(n: usize) -> InstanceSpec {
    let mut map = vec![(1, n + 1, -1), (n + 1, 1, -1)];
    map.extend((2..=n).map(|i| (i, i, -1)));
    let crossed: Vec<usize> = (2..n).collect();
    single(A, n, &crossed, &map)
}

fn factor_swap(n: usize, pairing: impl Fn(usize) -> usize) -> Vec<Entry> {
    (1..=n).flat_map(|i| [(0, i, 1, pairing(i), 1), (1, pairing(i), 0, i, 1)]).collect()
}

fn fixture(name: &str, description: &str, spec: InstanceSpec) -> Fixture {
    Fixture { name: name.into(), description: description.into(), spec }
}

pub fn all() -> Vec<Fixture> {
    let mut out = Vec::new();
    for n in 3..=7 {
        out.push(fixture(
            &format!("sl4-flags-n{n}"),
            &format!("A{n}, crossed α2 to α{}, σ: e1 ↔ -e{}, e_i ↦ -e_i otherwise", n - 1, n + 1),
            sl_flags(n),
        ));
    }
    out.extend([
        fixture(
            "fels-b3-k2",
            "B3, crossed α2, σ: e1 ↔ e3, e2 ↦ -e2",
            single(B, 3, &[2], &[(1, 3, 1), (2, 2, -1), (3, 1, 1)]),
        ),
        fixture(
            "d4-lines-order3",
            "D4, crossed α2, σ: e1 ↔ e4, e2 ↦ -e2, e3 ↦ -e3",
            single(D, 4, &[2], &[(1, 4, 1), (2, 2, -1), (3, 3, -1), (4, 1, 1)]),
        ),
        fixture(
            "g2-order3",
            "G2, crossed α2 (long), σ: e1 ↔ e3",
            single(G, 2, &[2], &[(1, 3, 1), (2, 2, 1), (3, 1, 1)]),
        ),
        fixture(
            "b3-phi13-minimaltype",
            "B3, crossed α1 and α3, σ: e1 ↔ e2, e3 ↦ -e3",
            single(B, 3, &[1, 3], &[(1, 2, 1), (2, 1, 1), (3, 3, -1)]),
        ),
        fixture(
            "su13-grassmannian",
            "A3, crossed α2, σ: e1 ↦ -e4, e4 ↦ -e1, e2 ↦ -e2, e3 ↦ -e3",
            single(A, 3, &[2], &[(1, 4, -1), (2, 2, -1), (3, 3, -1), (4, 1, -1)]),
        ),
        fixture(
            "sl3H-grassmannian",
            "A5, crossed α3, σ: e1 ↔ e2, e3 ↔ e4, e5 ↔ e6",
            single(A, 5, &[3], &[(1, 2, 1), (2, 1, 1), (3, 4, 1), (4, 3, 1), (5, 6, 1), (6, 5, 1)]),
        ),
        fixture(
            "sl7C",
            "A6 + A6, crossed {1,4,5} and {2,3,6}, σ swaps the factors: e_i ↔ e_i'",
            parabolic(&[(A, 6), (A, 6)], &[&[1, 4, 5], &[2, 3, 6]], &factor_swap(7, |i| i)),
        ),
        fixture(
            "b3-phi1-order2",
            "B3, crossed α1, σ: e1 ↦ -e2, e2 ↦ -e1, e3 ↦ e3",
            single(B, 3, &[1], &[(1, 2, -1), (2, 1, -1), (3, 3, 1)]),
        ),
        fixture(
            "sl3C-product-order1",
            "A3 + A3, crossed {1,3} on both, σ: e1 ↔ e2', e2 ↔ e1', e3 ↔ e4', e4 ↔ e3'",
            parabolic(&[(A, 3), (A, 3)], &[&[1, 3], &[1, 3]], &factor_swap(4, |i| [2, 1, 4, 3][i - 1])),
        ),
        fixture(
            "d4-order1",
            "D4, crossed α2, σ: e1 ↔ e4, e2 ↦ -e3, e3 ↦ -e2",
            single(D, 4, &[2], &[(1, 4, 1), (2, 3, -1), (3, 2, -1), (4, 1, 1)]),
        ),
        fixture(
            "c3-order2",
            "C3, crossed α2, σ: e1 ↔ e3, e2 ↦ -e2",
            single(C, 3, &[2], &[(1, 3, 1), (2, 2, -1), (3, 1, 1)]),
        ),
    ]);
    for k in [2, 4, 6] {
        out.push(fixture(
            &format!("lee-k{k}"),
            &format!("sl2 ⋉ V_{k}, q' = span(H, F) + negative weights"),
            InstanceSpec { lee_k: Some(k), ..InstanceSpec::default() },
        ));
    }
    out
}

pub fn get(name: &str) -> Result<Fixture> {
    all().into_iter().find(|f| f.name == name).ok_or_else(|| Error::UnknownFixture(name.to_string()))
}
