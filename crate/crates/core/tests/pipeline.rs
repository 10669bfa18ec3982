//! End-to-end checks through the public API: spec files, window files and
//! the index against a brute-force factor scan.

use std::collections::BTreeSet;
use std::path::PathBuf;

use proptest::prelude::*;
use subshift::analysis::{realize, verify_spec};
use subshift::constructions::ConstructionSpec;
use subshift::{Alphabet, FactorIndex, SequenceWindow, Word};

fn specs_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../specs")
}

fn brute(windows: &[SequenceWindow], n: usize, pad: usize) -> BTreeSet<Vec<u32>> {
    windows.iter().flat_map(|w| w.materialized(pad).windows(n).map(<[u32]>::to_vec).collect::<Vec<_>>()).collect()
}

#[test]
fn shipped_specs_verify() {
    let mut seen = 0;
    for entry in std::fs::read_dir(specs_dir()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("spec") {
            continue;
        }
        let spec = ConstructionSpec::read(&path).unwrap();
        let v = verify_spec(&spec, None).unwrap();
        assert!(v.passed(), "{}\n{}", path.display(), v.to_text());
        seen += 1;
    }
    assert!(seen >= 8);
}

#[test]
fn generated_windows_survive_the_file_format() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["finite_set", "separated", "isolated_z", "intermediate"] {
        let spec = ConstructionSpec::read(&specs_dir().join(format!("{name}.spec"))).unwrap();
        for (i, w) in realize(&spec, Some(20)).unwrap().windows.iter().enumerate() {
            let path = dir.path().join(format!("{name}.{i}"));
            w.write(&path).unwrap();
            assert_eq!(&SequenceWindow::read(&path).unwrap(), w);
        }
    }
}

#[test]
fn realised_profiles_match_a_direct_scan() {
    for name in ["finite_set", "separated", "isolated_z", "miller"] {
        let spec = ConstructionSpec::read(&specs_dir().join(format!("{name}.spec"))).unwrap();
        let r = realize(&spec, Some(12)).unwrap();
        for n in 1..=12 {
            assert_eq!(r.profile.c(n), Some(brute(&r.windows, n, 12).len() as u128), "{name} n={n}");
        }
    }
}

fn window() -> impl Strategy<Value = SequenceWindow> {
    (1u32..=4, 1usize..80, -50i64..50, any::<bool>()).prop_flat_map(|(k, len, base, fill)| {
        (proptest::collection::vec(0..k, len), Just(base), if fill { (0..k).prop_map(Some).boxed() } else { Just(None).boxed() }).prop_map(
            move |(syms, base, fill)| SequenceWindow::new(Alphabet::from_chars(&"abcd"[..k as usize]).unwrap(), base, syms, fill).unwrap(),
        )
    })
}

proptest! {
    #[test]
    fn union_index_matches_brute_force(a in window(), b in window(), n in 1usize..10) {
        prop_assume!(a.alphabet() == b.alphabet());
        let max_n = a.len().max(b.len()).min(10);
        prop_assume!(n <= max_n);
        let ws = [a, b];
        let idx = FactorIndex::build_many(&ws, max_n).unwrap();
        let expect = brute(&ws, n, max_n);
        prop_assert_eq!(idx.factor_count(n).unwrap(), expect.len() as u128);
        let got: BTreeSet<Vec<u32>> = idx.factor_set(n).unwrap().into_iter().map(Word::into_symbols).collect();
        prop_assert_eq!(got, expect);
    }
}
