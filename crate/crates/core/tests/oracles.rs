//! Values frozen from `tools/oracle.py`, which computes them by routes the
//! library does not use (lattice-path counting, Legendre polynomials,
//! symbolic integration, plain rational sums).

use std::sync::OnceLock;

use delannoy::families::{delannoy_poly, large_schroder_poly, little_schroder_poly, little_schroder_poly_table};
use delannoy::sequences::{
    delannoy_direct, delannoy_second_form, large_schroder, little_schroder_direct, trinomial, SequenceKind,
    SequenceTable, Tables,
};
use delannoy::verify::lemmas::lemma_4_2_quotient;
use delannoy::verify::quantities::{compute_a_with, compute_b_with, AMethod, BMethod};
use delannoy::verify::theorems::{check_theorem_1_3, theorem_1_2_sums};
use delannoy::IntPoly;
use num_bigint::BigInt;
use serde_json::Value;

fn oracle() -> &'static Value {
    static ORACLE: OnceLock<Value> = OnceLock::new();
    ORACLE.get_or_init(|| serde_json::from_str(include_str!("fixtures/oracle.json")).unwrap())
}

fn strings(key: &str) -> Vec<String> {
    oracle()[key].as_array().unwrap().iter().map(|v| v.as_str().unwrap().to_owned()).collect()
}

fn ints(key: &str) -> Vec<BigInt> {
    strings(key).iter().map(|s| s.parse().unwrap()).collect()
}

#[test]
fn integer_tables_match_path_counts() {
    for (kind, key) in [
        (SequenceKind::Delannoy, "delannoy"),
        (SequenceKind::LargeSchroder, "large_schroder"),
        (SequenceKind::LittleSchroder, "little_schroder"),
    ] {
        let want = ints(key);
        let table = SequenceTable::build(kind, want.len() as u64 - 1).unwrap();
        assert_eq!(table.values(), &want[..], "{kind}");
    }
}

#[test]
fn direct_sums_match_path_counts() {
    let d = ints("delannoy");
    let big_s = ints("large_schroder");
    let small_s = ints("little_schroder");
    for n in 0..d.len() as u64 {
        let i = n as usize;
        assert_eq!(delannoy_direct(n), d[i]);
        assert_eq!(delannoy_second_form(n), d[i]);
        assert_eq!(trinomial(n, &BigInt::from(3), &BigInt::from(2)), d[i]);
        if n >= 1 {
            assert_eq!(little_schroder_direct(n).unwrap(), small_s[i]);
            assert_eq!(large_schroder(n).unwrap(), big_s[i]);
        }
    }
}

#[test]
fn trinomial_coefficients() {
    for row in oracle()["trinomial"].as_array().unwrap() {
        let n = row[0].as_u64().unwrap();
        let b = BigInt::from(row[1].as_i64().unwrap());
        let c = BigInt::from(row[2].as_i64().unwrap());
        let want: BigInt = row[3].as_str().unwrap().parse().unwrap();
        assert_eq!(trinomial(n, &b, &c), want, "T_{n}({b},{c})");
    }
}

#[test]
fn normalized_quantities_every_route() {
    let a = ints("a");
    let b = ints("b");
    let tables = Tables::new(a.len() as u64 + 1).unwrap();
    for n in 1..=a.len() as u64 {
        for m in AMethod::ALL {
            assert_eq!(compute_a_with(&tables, n, m).unwrap(), a[n as usize - 1], "A({n}) by {m:?}");
        }
        for m in BMethod::ALL {
            assert_eq!(compute_b_with(&tables, n, m).unwrap(), b[n as usize - 1], "B({n}) by {m:?}");
        }
    }
}

#[test]
fn prime_sums_unreduced() {
    let tables = Tables::new(30).unwrap();
    for (p, sums) in oracle()["theorem_1_2_sums"].as_object().unwrap() {
        let p: u64 = p.parse().unwrap();
        let (first, second) = theorem_1_2_sums(&tables, p);
        assert_eq!(first.to_string(), sums[0].as_str().unwrap(), "p={p}");
        assert_eq!(second.to_string(), sums[1].as_str().unwrap(), "p={p}");
    }
}

#[test]
fn polynomial_families_match_legendre_route() {
    let d = strings("delannoy_poly");
    for (n, want) in d.iter().enumerate() {
        assert_eq!(&delannoy_poly(n as u64).to_string(), want, "D_{n}(x)");
    }
    let big_s = strings("large_schroder_poly");
    let small_s = strings("little_schroder_poly");
    let table = little_schroder_poly_table(small_s.len() as u64).unwrap();
    for (i, (big, small)) in big_s.iter().zip(&small_s).enumerate() {
        let n = i as u64 + 1;
        assert_eq!(&large_schroder_poly(n).unwrap().to_string(), big, "S_{n}(x)");
        assert_eq!(&little_schroder_poly(n).unwrap().to_string(), small, "s_{n}(x)");
        assert_eq!(&table[n as usize].to_string(), small, "s_{n}(x) from the recurrence table");
    }
}

#[test]
fn divisibility_quotients() {
    for (n, want) in oracle()["theorem_1_3_quotients"].as_object().unwrap() {
        let (report, quotient) = check_theorem_1_3(n.parse().unwrap()).unwrap();
        assert!(report.passed());
        assert_eq!(quotient.unwrap().to_string(), want.as_str().unwrap(), "n={n}");
    }
    let s = little_schroder_poly_table(10).unwrap();
    for (n, want) in oracle()["lemma_4_2_quotients"].as_object().unwrap() {
        let q: IntPoly = lemma_4_2_quotient(&s, n.parse().unwrap()).unwrap();
        assert_eq!(q.to_string(), want.as_str().unwrap(), "n={n}");
    }
}
