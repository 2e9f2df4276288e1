use dragon_core::lsystem::{boundary_full, boundary_left, boundary_right, boundary_right_traced};
use dragon_core::polyomino::TracedBoundary;

#[test]
fn traced_words_match_rewriting() {
    let (full, left, right, right0) = (
        boundary_full(),
        boundary_left(),
        boundary_right(),
        boundary_right_traced(),
    );
    for n in 0..=14 {
        let t = TracedBoundary::of_iterate(n).unwrap();
        assert!(t.cycle.is_simple(), "n={n}");
        assert!(t.full.parities_consistent());
        assert_eq!(t.full.word, full.iterate(n), "full n={n}");
        assert_eq!(t.left.word, left.iterate(n), "left n={n}");
        assert_eq!(t.right.word, right0.iterate(n), "right n={n}");
        if n >= 1 {
            assert_eq!(t.right.word, right.iterate(n), "right n={n}");
        }
        assert_eq!(t.cells.len(), 1 << n);
        assert_eq!(t.cells.perimeter(), t.cycle.len());
    }
}
