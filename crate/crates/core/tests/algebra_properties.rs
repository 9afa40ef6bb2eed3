mod common;

use bqlong::algebra::{alexander_biquandle, rack_switch, verify_rack, wada_biquandle, FiniteGroup};
use bqlong::{FiniteBiquandle, Level};
use num_integer::Integer;
use proptest::prelude::*;

/// The three components of the Yang-Baxter equation, written as identities
/// in the up and down operations.
fn interchange_identities(b: &FiniteBiquandle) -> Result<(), String> {
    let n = b.size();
    for a in 0..n {
        for x in 0..n {
            for c in 0..n {
                let (up, down) = (|p, q| b.up(p, q), |p, q| b.down(p, q));
                if up(up(a, x), c) != up(up(a, down(c, x)), up(x, c)) {
                    return Err(format!("up interchange at ({a},{x},{c})"));
                }
                if down(down(a, x), c) != down(down(a, up(c, x)), down(x, c)) {
                    return Err(format!("down interchange at ({a},{x},{c})"));
                }
                if up(down(a, x), down(c, up(x, a))) != down(up(a, c), up(x, down(c, a))) {
                    return Err(format!("rule of five at ({a},{x},{c})"));
                }
            }
        }
    }
    Ok(())
}

fn pair_properties(b: &FiniteBiquandle) -> Result<(), String> {
    let n = b.size();
    for a in 0..n {
        let mut upbar_hit = vec![false; n];
        let mut downbar_hit = vec![false; n];
        for x in 0..n {
            if b.switch_inverse(b.switch(a, x).0, b.switch(a, x).1) != (a, x) {
                return Err(format!("S⁻¹∘S differs at ({a},{x})"));
            }
            let (p, q) = b.switch_inverse(a, x);
            if b.switch(p, q) != (a, x) || b.down(q, p) != a || b.up(p, q) != x {
                return Err(format!("S∘S⁻¹ differs at ({a},{x})"));
            }
            upbar_hit[b.upbar(x, a)] = true;
            downbar_hit[b.downbar(x, a)] = true;
            if b.up_inv(b.up(x, a), a) != Some(x) || b.down_inv(b.down(x, a), a) != Some(x) {
                return Err(format!("row inverse differs at ({x},{a})"));
            }
            if b.upbar_inv(b.upbar(x, a), a) != Some(x)
                || b.downbar_inv(b.downbar(x, a), a) != Some(x)
            {
                return Err(format!("bar row inverse differs at ({x},{a})"));
            }
        }
        if !upbar_hit.iter().all(|&h| h) || !downbar_hit.iter().all(|&h| h) {
            return Err(format!("a bar row map at {a} is not a bijection"));
        }
    }
    Ok(())
}

#[test]
fn named_structures_satisfy_identities() {
    let mut all = common::small_structures();
    all.push(("wada S3".into(), common::wada_s3()));
    all.push((
        "alexander 7,2,3".into(),
        alexander_biquandle(7, 2, 3).unwrap(),
    ));
    all.push(("swap 1".into(), FiniteBiquandle::swap(1)));
    for (name, b) in all {
        interchange_identities(&b).unwrap_or_else(|e| panic!("{name}: {e}"));
        pair_properties(&b).unwrap_or_else(|e| panic!("{name}: {e}"));
    }
}

#[test]
fn wada_on_small_groups() {
    let mut groups: Vec<FiniteGroup> = (1..=8).map(|n| FiniteGroup::cyclic(n).unwrap()).collect();
    groups.extend((1..=4).map(|k| FiniteGroup::symmetric(k).unwrap()));
    for g in groups {
        let b = wada_biquandle(&g).unwrap();
        assert_eq!(b.level(), Level::Biquandle);
        assert!(b.tables().verify_all().all_ok());
    }
}

fn all_tables(n: usize) -> impl Iterator<Item = Vec<Vec<usize>>> {
    let cells = n * n;
    (0..n.pow(cells as u32)).map(move |mut code| {
        let mut t = vec![vec![0; n]; n];
        for i in 0..cells {
            t[i / n][i % n] = code % n;
            code /= n;
        }
        t
    })
}

#[test]
fn racks_give_biquandles_exactly_when_quandles() {
    let mut racks = 0;
    let mut quandles = 0;
    for n in 1..=3 {
        for table in all_tables(n) {
            if verify_rack(&table).is_err() {
                continue;
            }
            racks += 1;
            let quandle = (0..n).all(|a| table[a][a] == a);
            quandles += usize::from(quandle);
            let level = rack_switch(&table).unwrap().level();
            assert_eq!(level == Level::Biquandle, quandle, "{table:?}");
            assert!(level >= Level::Birack);
        }
    }
    assert!(racks > quandles && quandles > 0);
}

proptest! {
    #[test]
    fn alexander_with_unit_parameters(modulus in 2u64..=12, lambda in -30i64..30, mu in -30i64..30) {
        let unit = |v: i64| (v.rem_euclid(modulus as i64) as u64).gcd(&modulus) == 1;
        let built = alexander_biquandle(modulus, lambda, mu);
        prop_assert_eq!(built.is_ok(), unit(lambda) && unit(mu));
        if let Ok(b) = built {
            prop_assert_eq!(b.level(), Level::Biquandle);
            prop_assert_eq!(interchange_identities(&b), Ok(()));
            prop_assert_eq!(pair_properties(&b), Ok(()));
        }
    }

    #[test]
    fn corrupted_cell_is_rejected(modulus in prop_oneof![Just(3u64), Just(5), Just(7)], a in 0usize..7, c in 0usize..7, delta in 1usize..7) {
        let b = alexander_biquandle(modulus, 2, 1).unwrap();
        let n = b.size();
        let (a, c) = (a % n, c % n);
        let delta = delta % n;
        prop_assume!(delta != 0);
        let mut t = b.tables().clone();
        t.set_up(a, c, (t.up(a, c) + delta) % n);
        prop_assert!(!t.verify_all().all_ok());
    }
}
