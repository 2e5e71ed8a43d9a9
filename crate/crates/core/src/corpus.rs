//! The built-in corpus of finite categories used by the verification suites
//! and addressable from the command line as `corpus:<name>`.

use std::sync::Arc;

use crate::fincat::{
    cyclic_group, delta, discrete, free_iso, idempotent_monoid, poset, product, terminal,
    FinCategory,
};

pub const CORPUS_NAMES: [&str; 11] = [
    "e", "delta1", "delta2", "delta3", "delta1x1", "j", "bg2", "bg3", "idem2", "disc2", "sl3",
];

/// Look up a corpus category by name.
pub fn corpus_entry(name: &str) -> Option<Arc<FinCategory>> {
    let cat = match name {
        "e" => terminal(),
        "delta1" => delta(1),
        "delta2" => delta(2),
        "delta3" => delta(3),
        "delta1x1" => product(&delta(1), &delta(1)),
        "j" => free_iso(),
        "bg2" => cyclic_group(2),
        "bg3" => cyclic_group(3),
        "idem2" => idempotent_monoid(),
        "disc2" => discrete(vec!["x".into(), "y".into()]),
        // the V-shaped meet-semilattice m <= x, m <= y (no top)
        "sl3" => poset(
            vec!["m".into(), "x".into(), "y".into()],
            &[("m".into(), "x".into()), ("m".into(), "y".into())],
        )
        .expect("sl3 is a valid poset"),
        _ => return None,
    };
    Some(cat)
}

/// The full corpus in canonical order.
pub fn corpus() -> Vec<(String, Arc<FinCategory>)> {
    CORPUS_NAMES
        .iter()
        .map(|&n| (n.to_string(), corpus_entry(n).expect("corpus names resolve")))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_resolves_and_validates() {
        for (name, cat) in corpus() {
            assert!(cat.n_objects() >= 1, "{name} has objects");
        }
    }

    #[test]
    fn sl3_is_a_meet_semilattice_without_top() {
        let sl3 = corpus_entry("sl3").unwrap();
        let (terms, _) = crate::fincat::extremal_objects(&sl3);
        assert!(terms.is_empty());
        assert_eq!(sl3.n_morphisms(), 5);
    }
}
