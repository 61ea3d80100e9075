use std::fs;
use std::path::PathBuf;

use pgx_core::constructions::NamedGroup;
use pgx_core::pc::parse_presentation;

const KEYS: [&str; 13] = [
    "cyclic:2^3",
    "elem_abelian:2:3",
    "q8",
    "d8",
    "c2_x_q8",
    "c4_star_q8",
    "blackburn32",
    "extraspecial_p3_exp_p:3",
    "extraspecial_p3_exp_p2:3",
    "cp2_star_s:3",
    "extraspecial_p3_exp_p:5",
    "extraspecial_p3_exp_p2:5",
    "cp2_star_s:5",
];

fn golden(key: &str) -> PathBuf {
    let file = key.replace([':', '^'], "_") + ".pcg";
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden").join(file)
}

#[test]
fn builders_match_golden_sources() {
    for key in KEYS {
        let named: NamedGroup = key.parse().unwrap();
        let pres = named.presentation().unwrap();
        let text = fs::read_to_string(golden(key)).unwrap();
        assert_eq!(pres.to_pcg(), text, "{key}");
        assert_eq!(parse_presentation(&text).unwrap(), pres, "{key}");
    }
}
