use emofuse::lexicon_io::{read_unified, write_unified};
use emofuse::{EmotionVector4, Source, UnifiedLexicon};
use proptest::prelude::*;

fn entry() -> impl Strategy<Value = (String, [f64; 4], bool, u8)> {
    (
        "[a-z][a-z'-]{0,12}",
        proptest::array::uniform4(0.0..1.0f64),
        proptest::bool::weighted(0.1),
        0u8..3,
    )
}

fn build(entries: Vec<(String, [f64; 4], bool, u8)>) -> UnifiedLexicon {
    let mut lex = UnifiedLexicon::new();
    for (w, v, degenerate, src) in entries {
        let vector = if degenerate || v.iter().sum::<f64>() == 0.0 {
            EmotionVector4::NEUTRAL_DEGENERATE
        } else {
            EmotionVector4::from_weights(v[0], v[1], v[2], v[3]).unwrap()
        };
        let source = [Source::Affect, Source::DepecheMood, Source::Vad][src as usize];
        lex.insert_if_absent(&w, vector, source).unwrap();
    }
    lex
}

fn to_tsv(lex: &UnifiedLexicon) -> Vec<u8> {
    let mut buf = Vec::new();
    write_unified(lex, &mut buf).unwrap();
    buf
}

proptest! {
    #[test]
    fn write_read_is_stable(entries in proptest::collection::vec(entry(), 0..40)) {
        let lex = build(entries);
        let first = to_tsv(&lex);
        let back = read_unified(first.as_slice()).unwrap();
        prop_assert_eq!(back.len(), lex.len());
        for ((w1, e1), (w2, e2)) in lex.iter().zip(back.iter()) {
            prop_assert_eq!(w1, w2);
            prop_assert_eq!(e1.source, e2.source);
            prop_assert_eq!(e1.vector.is_neutral_degenerate(), e2.vector.is_neutral_degenerate());
            for (a, b) in e1.vector.as_array().iter().zip(e2.vector.as_array()) {
                prop_assert!((a - b).abs() <= 1e-6);
            }
        }
        // after one rounding pass the file is a fixed point
        prop_assert_eq!(to_tsv(&back), first);
    }
}

#[test]
fn rejects_bad_rows() {
    let header = "word\tanger\tfear\tsadness\thappiness\tsource\n";
    for bad in [
        "x\t0.5\t0.5\t0.5\t0\tAFFECT\n",
        "x\t1\t0\t0\t0\tNRC\n",
        "x\t1\t0\t0\n",
        "x\t1\t0\t0\t0\tDM\nx\t1\t0\t0\t0\tDM\n",
    ] {
        assert!(read_unified(format!("{header}{bad}").as_bytes()).is_err(), "{bad:?}");
    }
    assert!(read_unified("x\t1\t0\t0\t0\tDM\n".as_bytes()).is_err(), "header required");
}
