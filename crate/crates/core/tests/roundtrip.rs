//! Tables survive CSV and JSON serialization unchanged.

use spherex::invariants::{Analysis, InvariantTable};
use spherex::matgroup::{FamilySpec, DEFAULT_ELEMENT_CAP};
use spherex::reptheory::CharTable;

fn analysis(s: &str) -> Analysis {
    let spec: FamilySpec = s.parse().unwrap();
    Analysis::build(&spec, DEFAULT_ELEMENT_CAP, None).unwrap()
}

#[test]
fn invariant_tables_round_trip() {
    for s in ["C:7,3", "BD:5", "BO", "D:3,1", "P:2", "BTxC:5"] {
        let table = InvariantTable::from_analysis(&analysis(s));
        let csv = table.to_csv().unwrap();
        assert_eq!(InvariantTable::from_csv(&csv).unwrap(), table, "{s}");
        let json = table.to_json().unwrap();
        assert_eq!(InvariantTable::from_json(&json).unwrap(), table, "{s}");
    }
}

#[test]
fn character_tables_round_trip() {
    for s in ["C:5,2", "BD:4", "BI", "D:2,1", "BD:3xC:5"] {
        let a = analysis(s);
        let table = CharTable::new(a.group(), a.irreps.iter().map(|i| &i.irrep));
        let csv = table.to_csv().unwrap();
        assert_eq!(CharTable::from_csv(&csv).unwrap(), table, "{s}");
        let json = table.to_json().unwrap();
        assert_eq!(CharTable::from_json(&json).unwrap(), table, "{s}");
    }
}

#[test]
fn malformed_tables_are_rejected() {
    assert!(InvariantTable::from_csv("label,rank\nrho,1,2\n").is_err());
    assert!(InvariantTable::from_csv("label,rank,c2,xi,order_xi\nrho,1,1/2,x,0\n").is_err());
    assert!(CharTable::from_csv("label,k0_s1_o1\nrho,\n").is_err());
    assert!(CharTable::from_json("{").is_err());
}
