//! Round trips of the scene language and determinism of reports.

use orthokit_harness::scene::parse_scene;
use orthokit_harness::{run_suite, Backend, RunConfig};
use proptest::prelude::*;

fn number() -> impl Strategy<Value = String> {
    prop_oneof![
        (-50i64..=50).prop_map(|n| n.to_string()),
        (-50i64..=50, 1i64..=9).prop_map(|(n, d)| format!("{n}/{d}")),
        (-50i64..=50, 0u32..100).prop_map(|(n, f)| format!("{n}.{f:02}")),
    ]
}

fn pair() -> impl Strategy<Value = String> {
    (number(), number()).prop_map(|(x, y)| format!("({x},{y})"))
}

/// A scene of points, triangles built from names and literal points, and
/// queries on them, written with irregular spacing and comments.
fn scene() -> impl Strategy<Value = String> {
    (
        prop::collection::vec(pair(), 1..5),
        prop::collection::vec((0usize..8, 0usize..8, pair()), 1..4),
        prop::collection::vec(0usize..4, 0..4),
        prop::sample::select(vec![" ", "  ", "\t"]),
    )
        .prop_map(|(points, tris, queries, sp)| {
            let mut text = String::from("# generated\n");
            for (i, p) in points.iter().enumerate() {
                text.push_str(&format!("point P{i}{sp}={sp}{p}\n"));
            }
            for (i, (a, b, c)) in tris.iter().enumerate() {
                let a = format!("P{}", a % points.len());
                let b = format!("P{}", b % points.len());
                text.push_str(&format!("triangle T{i} = {a}{sp}{b} {c} # triangle {i}\n"));
            }
            for (k, q) in queries.iter().enumerate() {
                let t = format!("T{}", k % tris.len());
                let line = match q {
                    0 => format!("query orthocenter {t}"),
                    1 => format!("query orthologic {t} T0"),
                    2 => format!("query collinear P0 P0 P{}", k % points.len()),
                    _ => format!("line L{k} = P0 (1,2)"),
                };
                text.push_str(&line);
                text.push_str(if k % 2 == 0 { "\n" } else { " ; " });
            }
            text
        })
}

proptest! {
    #[test]
    fn printing_then_parsing_gives_the_same_document(text in scene()) {
        let doc = parse_scene(&text).unwrap();
        let printed = doc.to_string();
        let again = parse_scene(&printed).unwrap();
        prop_assert_eq!(&again, &doc);
        prop_assert_eq!(again.to_string(), printed);
    }

    #[test]
    fn reports_depend_only_on_their_inputs(seed in any::<u64>(), float in any::<bool>()) {
        let config = RunConfig {
            trials: Some(8),
            seed,
            backend: if float { Backend::Float { tol: 1e-9 } } else { Backend::Exact },
            timing: false,
            ..RunConfig::default()
        };
        let a = run_suite("orthologic-family", &config).unwrap();
        let b = run_suite("orthologic-family", &config).unwrap();
        prop_assert_eq!(a.to_json(), b.to_json());
        prop_assert_eq!(a.passes, 8);
    }
}
