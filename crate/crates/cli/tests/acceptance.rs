//! Acceptance suite. Each criterion prints one PASS/FAIL line; run with
//! `cargo test -p softset-cli --test acceptance -- --nocapture` to see them.

use std::io::Write;
use std::panic::{self, AssertUnwindSafe};
use std::path::Path;
use std::process::{Command, Stdio};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use softset_core::algebra::{complement, intersection, product, union};
use softset_core::analysis::{
    domination_witnesses, gravity, gravity_domination, matrix_similarity,
    max_similarity_over_orderings, probe_conjecture, similarity, ConjectureProbe,
};
use softset_core::oracle::{
    enumerate_soft_sets, oracle_complement, oracle_intersection, oracle_product, oracle_similarity,
    oracle_union,
};
use softset_core::relations::{check_relation_correctness, internally_approximates};
use softset_core::{
    ApproxKind, BitMatrix, Rational, RelationKind, SoftSet, Subset, TauFamily, Universe, Verdict,
};

const MATRIX_BUDGET: Duration = Duration::from_millis(1);
const SIMILARITY_SUITE_BUDGET: Duration = Duration::from_secs(30);
const ORACLE_SUITE_BUDGET: Duration = Duration::from_secs(60);
const RANDOM_SIMILARITY_INSTANCES: usize = 10_000;
const REWRITE_TRIALS: usize = 1_000;
const ROUND_TRIP_DOCUMENTS: usize = 50;
const SEED: u64 = 0x5eed;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn abc() -> Universe {
    Universe::new(["a", "b", "c"]).unwrap()
}

fn from_rows(universe: Universe, attributes: &[&str], rows: &[&[u8]]) -> SoftSet {
    let m = BitMatrix::from_rows(rows, attributes.len()).unwrap();
    SoftSet::from_matrix(universe, attributes.iter().copied(), &m).unwrap()
}

/// The two three-element layers used throughout: F over x, y, z and G over m, n, o.
fn layers() -> (SoftSet, SoftSet) {
    let f = SoftSet::from_named(
        &["a", "b", "c"],
        &[("x", &["b", "c"]), ("y", &["c"]), ("z", &["a"])],
    )
    .unwrap();
    let g = SoftSet::from_named(
        &["a", "b", "c"],
        &[("m", &["a"]), ("n", &["c"]), ("o", &["c"])],
    )
    .unwrap();
    (f, g)
}

fn enumeration(max_universe: usize, max_width: usize) -> Vec<Vec<SoftSet>> {
    (1..=max_universe)
        .map(|n| {
            let u = Universe::new(["a", "b", "c", "d"].into_iter().take(n)).unwrap();
            enumerate_soft_sets(&u, max_width).unwrap().collect()
        })
        .collect()
}

fn rows_equal(s: &SoftSet, expected: &[&[u8]]) -> Result<(), String> {
    let got = s.to_matrix().to_rows();
    ensure(got == expected, || {
        format!("got {got:?}, expected {expected:?}")
    })
}

fn matrix_of_layer() -> Check {
    let (f, _) = layers();
    let start = Instant::now();
    let m = f.to_matrix();
    let elapsed = start.elapsed();
    let expected: &[&[u8]] = &[&[0, 0, 1], &[1, 0, 0], &[1, 1, 0]];
    ensure(m.to_rows() == expected, || format!("got {:?}", m.to_rows()))?;
    ensure(elapsed < MATRIX_BUDGET, || format!("took {elapsed:?}"))?;
    Ok(format!("3x3 bit-exact in {elapsed:?}"))
}

fn complement_matrix() -> Check {
    let (f, _) = layers();
    rows_equal(&complement(&f), &[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]])?;
    Ok("3x3 bit-exact".into())
}

fn union_matrix() -> Check {
    let (f, _) = layers();
    let g = SoftSet::from_named(
        &["a", "b", "c"],
        &[
            ("m", &["a"]),
            ("n", &["c"]),
            ("o", &["c"]),
            ("p", &["a", "c"]),
        ],
    )
    .unwrap();
    rows_equal(&g, &[&[1, 0, 0, 1], &[0, 0, 0, 0], &[0, 1, 1, 1]])?;
    let u = union(&f, &g).unwrap();
    rows_equal(
        &u,
        &[
            &[1, 0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 1],
            &[1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0],
            &[1, 1, 1, 1, 1, 1, 1, 1, 0, 1, 1, 1],
        ],
    )?;
    ensure(
        u.attributes()[3] == "(x,p)" && u.attributes()[4] == "(y,m)",
        || format!("column order {:?}", u.attributes()),
    )?;
    Ok("3x12 bit-exact, left attribute outer".into())
}

fn product_matrix() -> Check {
    let f = from_rows(abc(), &["m", "n"], &[&[1, 0], &[1, 1], &[0, 0]]);
    let g = from_rows(abc(), &["x", "y"], &[&[0, 0], &[1, 0], &[1, 1]]);
    let p = product(&f, &g).unwrap();
    rows_equal(
        &p,
        &[
            &[0, 0, 0, 0],
            &[1, 0, 0, 0],
            &[1, 1, 0, 0],
            &[0, 0, 0, 0],
            &[1, 0, 1, 0],
            &[1, 1, 1, 1],
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
            &[0, 0, 0, 0],
        ],
    )?;
    let rows = p.universe().elements();
    ensure(
        rows.first().map(String::as_str) == Some("(a,a)") && rows[8] == "(c,c)",
        || format!("row order {rows:?}"),
    )?;
    ensure(
        p.attributes() == ["(m,x)", "(m,y)", "(n,x)", "(n,y)"],
        || format!("columns {:?}", p.attributes()),
    )?;
    Ok("9x4 bit-exact, rows (a,a)..(c,c)".into())
}

fn tau_families() -> Check {
    let (f, g) = layers();
    let u = union(&f, &g).unwrap();
    let expected = TauFamily::from_named(
        u.universe(),
        &[&["a", "b", "c"], &["b", "c"], &["a", "c"], &["c"], &["a"]],
    )
    .unwrap();
    ensure(u.tau() == expected, || format!("union τ {}", u.tau()))?;

    let p = product(&f, &g).unwrap();
    let expected = TauFamily::from_named(
        p.universe(),
        &[
            &["(b,a)", "(c,a)"],
            &["(b,c)", "(c,c)"],
            &["(c,a)"],
            &["(c,c)"],
            &["(a,a)"],
            &["(a,c)"],
        ],
    )
    .unwrap();
    ensure(p.tau() == expected, || format!("product τ {}", p.tau()))?;

    let c = complement(&f);
    let expected =
        TauFamily::from_named(c.universe(), &[&["a"], &["a", "b"], &["b", "c"]]).unwrap();
    ensure(c.tau() == expected, || format!("complement τ {}", c.tau()))?;

    // Several pairs intersect to nothing, so ∅ is a value and belongs to τ.
    // The printed family for this intersection lists only {a} and {c}; the
    // definition of τ as the set of all values keeps ∅.
    let w = intersection(&f, &g).unwrap();
    let expected = TauFamily::from_named(w.universe(), &[&[], &["a"], &["c"]]).unwrap();
    ensure(w.tau() == expected, || {
        format!("intersection τ {}", w.tau())
    })?;
    Ok(format!("union {}, intersection {}", u.tau(), w.tau()))
}

fn similarity_suite() -> Check {
    let start = Instant::now();
    let f = from_rows(
        abc(),
        &["e1", "e2", "e3"],
        &[&[1, 0, 1], &[1, 0, 0], &[1, 0, 1]],
    );
    let g = from_rows(
        abc(),
        &["g1", "g2", "g3", "g4"],
        &[&[0, 1, 1, 0], &[1, 0, 0, 1], &[1, 1, 1, 0]],
    );
    let v = similarity(&f, &g).unwrap();
    ensure(v == Rational::new(2, 3), || {
        format!("padded similarity {v}")
    })?;

    let layer =
        |pairs: &[(&str, &[&str])]| SoftSet::from_named(&["a", "b", "c", "d", "e"], pairs).unwrap();
    let f = layer(&[("m", &["a", "b"]), ("n", &["e"])]);
    let g = layer(&[("x", &["b", "c"]), ("y", &["c", "d", "e"])]);
    let v = similarity(&f, &g).unwrap();
    ensure(v == Rational::new(3, 5), || {
        format!("disjoint-layer similarity {v}")
    })?;

    let sets = enumeration(3, 3);
    for s in sets[2].iter().take(100) {
        let v = similarity(s, &complement(s)).unwrap();
        ensure(v == Rational::ZERO, || {
            format!("sim with complement {v} for {s}")
        })?;
    }

    let mut pairs = 0usize;
    for level in &sets {
        let matrices: Vec<BitMatrix> = level.iter().map(SoftSet::to_matrix).collect();
        for (i, y) in matrices.iter().enumerate() {
            let own = matrix_similarity(y, y).unwrap();
            ensure(own == Rational::ONE, || {
                format!("self-similarity {own} for {}", level[i])
            })?;
            for (j, z) in matrices.iter().enumerate().skip(i + 1) {
                let v = matrix_similarity(y, z).unwrap();
                let w = matrix_similarity(z, y).unwrap();
                ensure(v <= Rational::ONE && v == w, || {
                    format!("{v} / {w} for {} and {}", level[i], level[j])
                })?;
                pairs += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < SIMILARITY_SUITE_BUDGET, || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "2/3, 3/5, complement 0 x100, {pairs} pairs bounded and symmetric"
    ))
}

fn ordering_search() -> Check {
    let f = SoftSet::from_named(
        &["a", "b", "c"],
        &[("x", &["b", "c"]), ("y", &["c", "a"]), ("z", &["a", "b"])],
    )
    .unwrap();
    let g = SoftSet::from_named(
        &["a", "b", "c"],
        &[("x", &["c", "a"]), ("y", &["a", "b"]), ("z", &["b", "c"])],
    )
    .unwrap();
    let natural = similarity(&f, &g).unwrap();
    let best = max_similarity_over_orderings(&f, &g).unwrap();
    ensure(best == Rational::ONE, || format!("best {best}"))?;
    Ok(format!("best ordering 1 (attribute order gives {natural})"))
}

fn gravity_sums() -> Check {
    let s = from_rows(
        abc(),
        &["e1", "e2", "e3", "e4", "e5"],
        &[&[1, 1, 1, 1, 1], &[0, 0, 0, 0, 0], &[0, 0, 0, 0, 0]],
    );
    let f = from_rows(
        abc(),
        &["g1", "g2", "g3"],
        &[&[1, 1, 1], &[0, 0, 0], &[0, 1, 0]],
    );
    let (gs, gf) = (gravity(&s), gravity(&f));
    ensure(gs.total() == 5 && gf.total() == 4, || {
        format!("sums {} and {}", gs.total(), gf.total())
    })?;
    let approximates = internally_approximates(&s, &f).unwrap();
    ensure(approximates, || {
        "first does not internally approximate second".into()
    })?;
    ensure(gs.total() > gf.total(), || {
        "sum domination unexpectedly holds".into()
    })?;
    let pointwise = gravity_domination(&s, &f).unwrap();
    ensure(pointwise == approximates, || {
        format!("pointwise domination {pointwise}")
    })?;
    let witnesses: Vec<String> = domination_witnesses(&s, &f)
        .unwrap()
        .iter()
        .map(|w| {
            let (a, g) = w.witness.clone().unwrap();
            format!("{}:{}<={}:{}", a, g, w.target, w.target_gravity)
        })
        .collect();

    let m = from_rows(
        abc(),
        &["e1", "e2", "e3"],
        &[&[1, 1, 1], &[1, 1, 0], &[0, 1, 0]],
    );
    let n = from_rows(
        abc(),
        &["g1", "g2", "g3", "g4"],
        &[&[1, 1, 1, 1], &[1, 0, 0, 1], &[0, 0, 1, 1]],
    );
    ensure(gravity(&n).counts() == [2, 1, 2, 3], || {
        format!("{:?}", gravity(&n).counts())
    })?;
    ensure(gravity_domination(&m, &n).unwrap(), || {
        "pointwise domination fails".into()
    })?;
    Ok(format!(
        "sums 5 > 4 although approximation holds; pointwise domination {pointwise} [{}]",
        witnesses.join(", ")
    ))
}

fn oracle_agreement() -> Check {
    let start = Instant::now();
    let mut checked = 0usize;
    for level in enumeration(3, 2) {
        for s in &level {
            ensure(complement(s) == oracle_complement(s), || {
                format!("complement of {s}")
            })?;
            for f in &level {
                ensure(union(s, f).unwrap() == oracle_union(s, f).unwrap(), || {
                    format!("union {s} {f}")
                })?;
                ensure(
                    intersection(s, f).unwrap() == oracle_intersection(s, f).unwrap(),
                    || format!("intersection {s} {f}"),
                )?;
                ensure(
                    product(s, f).unwrap() == oracle_product(s, f).unwrap(),
                    || format!("product {s} {f}"),
                )?;
                checked += 1;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let random_set = |rng: &mut ChaCha8Rng, universe: &Universe, tag: &str| {
        let width = rng.random_range(1..=5);
        let values: Vec<Subset> = (0..width)
            .map(|_| (0..universe.len()).filter(|_| rng.random()).collect())
            .collect();
        SoftSet::from_subsets(
            universe.clone(),
            (0..width).map(|j| format!("{tag}{j}")),
            values,
        )
        .unwrap()
    };
    for _ in 0..RANDOM_SIMILARITY_INSTANCES {
        let n = rng.random_range(1..=6);
        let universe = Universe::new((0..n).map(|i| format!("u{i}"))).unwrap();
        let s = random_set(&mut rng, &universe, "a");
        let f = random_set(&mut rng, &universe, "b");
        let (v, w) = (
            similarity(&s, &f).unwrap(),
            oracle_similarity(&s, &f).unwrap(),
        );
        ensure(v == w, || format!("{v} vs oracle {w} on {s} / {f}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < ORACLE_SUITE_BUDGET, || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "{checked} operand pairs x4 operations, {RANDOM_SIMILARITY_INSTANCES} random similarities"
    ))
}

fn algebraic_laws() -> Check {
    for level in enumeration(3, 3) {
        for s in &level {
            ensure(complement(&complement(s)) == *s, || {
                format!("double complement of {s}")
            })?;
        }
    }
    let mut triples = 0usize;
    for level in enumeration(3, 2) {
        for s in &level {
            for f in &level {
                let (sf_u, sf_i) = (union(s, f).unwrap(), intersection(s, f).unwrap());
                ensure(sf_u.tau() == union(f, s).unwrap().tau(), || {
                    format!("∪ commutes {s} {f}")
                })?;
                ensure(sf_i.tau() == intersection(f, s).unwrap().tau(), || {
                    format!("∩ commutes {s} {f}")
                })?;
                for h in &level {
                    let left = union(&sf_u, h).unwrap().tau();
                    let right = union(s, &union(f, h).unwrap()).unwrap().tau();
                    ensure(left == right, || format!("∪ associates {s} {f} {h}"))?;
                    let left = intersection(&sf_i, h).unwrap().tau();
                    let right = intersection(s, &intersection(f, h).unwrap()).unwrap().tau();
                    ensure(left == right, || format!("∩ associates {s} {f} {h}"))?;
                    triples += 1;
                }
            }
        }
    }
    Ok(format!(
        "double complement exact; commutativity and associativity on {triples} triples"
    ))
}

fn correctness_probes() -> Check {
    let x = ["a", "b"];
    let s = SoftSet::from_named(&x, &[("x", &["a"])]).unwrap();
    let f = SoftSet::from_named(&x, &[("y", &["a"])]).unwrap();
    let doubled = SoftSet::from_named(&x, &[("x", &["a"]), ("x2", &["a"])]).unwrap();
    let witness = ConjectureProbe::new((s.clone(), f.clone()), (doubled, f.clone())).unwrap();
    ensure(
        witness.sim_base == Rational::ONE && witness.sim_rewritten == Rational::new(3, 4),
        || format!("{} vs {}", witness.sim_base, witness.sim_rewritten),
    )?;
    let probes = probe_conjecture(&s, &f, 100, SEED).unwrap();
    let differing = probes.iter().filter(|p| p.differs).count();
    ensure(differing > 0, || "no probe changed the similarity".into())?;

    let (lf, lg) = layers();
    let kinds = [
        RelationKind::Equivalent,
        RelationKind::Approx(ApproxKind::Internal),
        RelationKind::Approx(ApproxKind::External),
    ];
    for (left, right) in [(&lf, &lg), (&lg, &lf), (&s, &f)] {
        for kind in &kinds {
            let report =
                check_relation_correctness(kind, left, right, REWRITE_TRIALS, SEED).unwrap();
            ensure(report.verdict == Verdict::Invariant, || {
                format!("{kind} violated {} times", report.violations.len())
            })?;
        }
    }
    Ok(format!(
        "duplicate witness 1 vs 3/4, {differing}/100 random probes differ; relations invariant over {REWRITE_TRIALS} rewrites"
    ))
}

fn run_cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_softset"))
        .args(args)
        .stdin(Stdio::null())
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn write(path: &Path, text: &str) {
    std::fs::File::create(path)
        .unwrap()
        .write_all(text.as_bytes())
        .unwrap();
}

fn cli_round_trip() -> Check {
    let dir = tempfile::tempdir().unwrap();
    let (doc_path, matrix_path) = (dir.path().join("doc.json"), dir.path().join("matrix.json"));
    let sets = enumeration(3, 3).pop().unwrap();
    let step = sets.len() / ROUND_TRIP_DOCUMENTS;
    for s in sets.iter().step_by(step).take(ROUND_TRIP_DOCUMENTS) {
        let doc = serde_json::to_string(&s.to_document()).unwrap() + "\n";
        write(&doc_path, &doc);
        let (doc_arg, matrix_arg) = (doc_path.to_str().unwrap(), matrix_path.to_str().unwrap());
        write(&matrix_path, &run_cli(&["matrix", doc_arg, "--json"])?);
        let rebuilt = run_cli(&["from-matrix", matrix_arg, doc_arg, "--json"])?;
        ensure(rebuilt == doc, || format!("{doc} came back as {rebuilt}"))?;
    }

    let f = from_rows(
        abc(),
        &["e1", "e2", "e3"],
        &[&[1, 0, 1], &[1, 0, 0], &[1, 0, 1]],
    );
    let g = from_rows(
        abc(),
        &["g1", "g2", "g3", "g4"],
        &[&[0, 1, 1, 0], &[1, 0, 0, 1], &[1, 1, 1, 0]],
    );
    let (fp, gp) = (dir.path().join("f.json"), dir.path().join("g.json"));
    write(&fp, &serde_json::to_string(&f.to_document()).unwrap());
    write(&gp, &serde_json::to_string(&g.to_document()).unwrap());
    let out = run_cli(&["sim", fp.to_str().unwrap(), gp.to_str().unwrap()])?;
    let fraction = out.split_whitespace().next().unwrap_or_default();
    ensure(fraction == "2/3", || format!("sim printed {out:?}"))?;
    Ok(format!(
        "{ROUND_TRIP_DOCUMENTS} documents byte-identical; sim printed {:?}",
        out.trim_end()
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 12] = [
        ("binary matrix of a soft set", matrix_of_layer),
        ("complement matrix", complement_matrix),
        ("union matrix", union_matrix),
        ("product matrix", product_matrix),
        ("value families of the operations", tau_families),
        ("similarity values and laws", similarity_suite),
        ("similarity over orderings", ordering_search),
        ("gravity sums and pointwise domination", gravity_sums),
        ("matrix operations agree with set oracles", oracle_agreement),
        ("complement, commutativity, associativity", algebraic_laws),
        (
            "rewrite probes and relation correctness",
            correctness_probes,
        ),
        ("command-line round trip", cli_round_trip),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            Err(e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let elapsed = start.elapsed();
        match result {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{elapsed:.2?}]", i + 1),
            Err(reason) => {
                println!("FAIL {:>2} {name}: {reason} [{elapsed:.2?}]", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
