//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! (visible with `cargo test --test acceptance -- --nocapture`). The checks
//! here recompute expectations through independent routes (box scans,
//! exhaustive enumeration, Gram filters) rather than through the code paths
//! they judge.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use cubelat::{
    classify, divisor_family, enumerate_cubic_containing, gamma, gamma_any, gamma_contains_def,
    hnf_of_generators, lattice_leq, max_square_divisor, maximal_cubic_under, minimal_cubic_over,
    perp_sublattice, prime_vector, scale_down, scale_up, Basis3, Error, IntVec3,
};

fn v(x: i128, y: i128, z: i128) -> IntVec3 {
    IntVec3::new(x, y, z)
}

struct Criterion {
    name: &'static str,
    budget: Duration,
    start: Instant,
}

impl Criterion {
    fn new(name: &'static str, budget: Duration) -> Self {
        Criterion {
            name,
            budget,
            start: Instant::now(),
        }
    }

    fn finish(self) {
        let elapsed = self.start.elapsed();
        if elapsed <= self.budget {
            println!("{}: PASS ({:.2?})", self.name, elapsed);
        } else {
            println!("{}: FAIL (over budget: {:.2?})", self.name, elapsed);
            panic!("{} exceeded its time budget", self.name);
        }
    }

    fn fail(self, why: &str) -> ! {
        println!("{}: FAIL ({why})", self.name);
        panic!("{}: {why}", self.name);
    }
}

fn abs_sorted(a: IntVec3) -> [i128; 3] {
    let mut c = [a.x.abs(), a.y.abs(), a.z.abs()];
    c.sort_unstable();
    c
}

fn is_signed_perm(basis: &Basis3, expect: &[IntVec3; 3]) -> bool {
    let mut used = [false; 3];
    'outer: for col in basis.cols() {
        for (i, e) in expect.iter().enumerate() {
            if used[i] {
                continue;
            }
            if col == e || *col == e.neg().unwrap() {
                used[i] = true;
                continue 'outer;
            }
        }
        return false;
    }
    true
}

// primitive vectors with 1 ≤ ‖v‖² ≤ max, lexicographic order
fn primitive_vectors(max_norm_sq: i128) -> Vec<IntVec3> {
    let r = (max_norm_sq as f64).sqrt() as i128 + 1;
    let mut out = Vec::new();
    for x in -r..=r {
        for y in -r..=r {
            for z in -r..=r {
                let w = v(x, y, z);
                if w.is_zero() || w.norm_sq().unwrap() > max_norm_sq {
                    continue;
                }
                if w.coord_gcd().unwrap() == 1 {
                    out.push(w);
                }
            }
        }
    }
    out
}

// every (v, d) with v primitive, ‖v‖² ≤ max, d ≥ 2, d² | ‖v‖²
fn sweep_pairs(max_norm_sq: i128) -> Vec<(IntVec3, i128)> {
    let mut out = Vec::new();
    for w in primitive_vectors(max_norm_sq) {
        let n = w.norm_sq().unwrap();
        let mut d = 2i128;
        while d * d <= n {
            if n % (d * d) == 0 {
                out.push((w, d));
            }
            d += 1;
        }
    }
    out
}

#[test]
fn criterion_01_edge3_lattice_around_552() {
    let c = Criterion::new(
        "criterion 01 edge-3 lattice around (5,5,2)",
        Duration::from_secs(1),
    );
    let g = gamma(v(5, 5, 2), 3).unwrap();
    let expected = [v(-1, 2, 2), v(2, -1, 2), v(2, 2, -1)];
    if !is_signed_perm(g.basis(), &expected) {
        c.fail("cubic basis is not a signed permutation of the expected triple");
    }
    let Some(hnf_coords) = g.hnf().basis().coords_of(v(5, 5, 2)).unwrap() else {
        c.fail("HNF does not contain (5,5,2)");
    };
    let rebuilt = g.hnf().basis().mul_vec(hnf_coords).unwrap();
    if rebuilt != v(5, 5, 2) {
        c.fail("HNF coordinates do not reconstruct (5,5,2)");
    }
    // in the cubic basis the coordinates are (1,1,2) up to the signed
    // permutation freedom of the extracted basis
    let coords = g.basis().coords_of(v(5, 5, 2)).unwrap().unwrap();
    if abs_sorted(coords) != [1, 1, 2] {
        c.fail("coordinates in the cubic basis are not (1,1,2) up to signed permutation");
    }
    c.finish();
}

#[test]
fn criterion_02_non_uniqueness_for_imprimitive() {
    let c = Criterion::new(
        "criterion 02 non-uniqueness for (5,0,0)",
        Duration::from_secs(10),
    );
    let found = enumerate_cubic_containing(v(5, 0, 0), 5, 12).unwrap();
    let axis = hnf_of_generators(&[v(5, 0, 0), v(0, 5, 0), v(0, 0, 5)]).unwrap();
    let tilted = hnf_of_generators(&[v(5, 0, 0), v(0, 3, 4), v(0, 4, -3)]).unwrap();
    if !found.iter().any(|l| l.hnf() == &axis) {
        c.fail("5Z³ missing from the enumeration");
    }
    if !found.iter().any(|l| l.hnf() == &tilted) {
        c.fail("the tilted edge-5 lattice is missing from the enumeration");
    }
    c.finish();
}

#[test]
fn criterion_03_uniqueness_sweep() {
    let c = Criterion::new(
        "criterion 03 uniqueness sweep ‖v‖² ≤ 400",
        Duration::from_secs(300),
    );
    let pairs = sweep_pairs(400);
    assert!(!pairs.is_empty());
    for &(w, d) in &pairs {
        let found = enumerate_cubic_containing(w, d, 20).unwrap();
        if found.len() != 1 {
            c.fail(&format!("{} lattices contain {w} at edge {d}", found.len()));
        }
        if found[0].hnf() != gamma(w, d).unwrap().hnf() {
            c.fail(&format!("enumeration disagrees with gamma({w}, {d})"));
        }
    }
    println!("  (uniqueness checked for {} pairs)", pairs.len());
    c.finish();
}

#[test]
fn criterion_04_index_laws() {
    let c = Criterion::new(
        "criterion 04 index laws over the sweep",
        Duration::from_secs(300),
    );
    let pairs = sweep_pairs(400);
    for &(w, d) in &pairs {
        let g = gamma(w, d).unwrap();
        if g.hnf().basis().det() != d * d * d {
            c.fail(&format!("|det(gamma({w}, {d}))| ≠ d³"));
        }
        let m = perp_sublattice(w, d).unwrap();
        if m.index_in_perp() != d {
            c.fail(&format!("plane sublattice index ≠ d for ({w}, {d})"));
        }
    }
    println!("  (index laws checked for {} pairs)", pairs.len());
    c.finish();
}

#[test]
fn criterion_05_divisibility_laws_random() {
    let c = Criterion::new(
        "criterion 05 divisibility laws, 10⁴ random pairs",
        Duration::from_secs(300),
    );
    let sample: Vec<(IntVec3, i128)> = vec![
        (v(1, 2, 2), 3),
        (v(5, 5, 2), 3),
        (v(1, 1, 4), 3),
        (v(0, 3, 4), 5),
        (v(3, 4, 5), 5),
        (v(2, 3, 6), 7),
        (v(1, 4, 8), 9),
        (v(2, 5, 14), 15),
    ];
    let mut rng = StdRng::seed_from_u64(0x5eed_cafe);
    let mut checked = 0u64;
    while checked < 10_000 {
        let (w, d) = sample[rng.gen_range(0..sample.len())];
        let g = gamma(w, d).unwrap();
        let cols = g.hnf().cols();
        let member = |rng: &mut StdRng| {
            let c0: i128 = rng.gen_range(-6..=6);
            let c1: i128 = rng.gen_range(-6..=6);
            let c2: i128 = rng.gen_range(-6..=6);
            cols[0]
                .scale(c0)
                .unwrap()
                .add(cols[1].scale(c1).unwrap())
                .unwrap()
                .add(cols[2].scale(c2).unwrap())
                .unwrap()
        };
        let a = member(&mut rng);
        let b = member(&mut rng);
        if a.dot(w).unwrap() % (d * d) != 0 {
            c.fail(&format!("d² ∤ a·v for v={w}, d={d}, a={a}"));
        }
        if a.dot(b).unwrap() % (d * d) != 0 {
            c.fail(&format!("d² ∤ a·b for v={w}, d={d}"));
        }
        let Some(cr) = a.cross(b).unwrap().div_exact(d) else {
            c.fail(&format!("d ∤ a×b for v={w}, d={d}"));
        };
        if !g.contains(cr).unwrap() {
            c.fail(&format!("a×b/d outside gamma({w}, {d})"));
        }
        checked += 1;
    }
    c.finish();
}

#[test]
fn criterion_06_membership_oracle_equivalence() {
    let c = Criterion::new(
        "criterion 06 membership oracle equivalence d ≤ 7",
        Duration::from_secs(300),
    );
    let sample: Vec<(IntVec3, i128)> = vec![
        (v(1, 2, 2), 3),
        (v(5, 5, 2), 3),
        (v(1, 1, 4), 3),
        (v(0, 3, 4), 5),
        (v(3, 4, 5), 5),
        (v(2, 3, 6), 7),
        (v(1, 4, 9), 7),
    ];
    let mut cases = 0u64;
    for &(w, d) in &sample {
        assert_eq!(w.norm_sq().unwrap() % (d * d), 0);
        let g = gamma(w, d).unwrap();
        let r = d * d;
        for x in -r..=r {
            for y in -r..=r {
                for z in -r..=r {
                    let a = v(x, y, z);
                    cases += 1;
                    if g.contains(a).unwrap() != gamma_contains_def(w, d, a).unwrap() {
                        c.fail(&format!("mismatch at {a} for v={w}, d={d}"));
                    }
                }
            }
        }
    }
    println!("  ({cases} box points checked)");
    c.finish();
}

#[test]
fn criterion_07_prime_vectors() {
    let c = Criterion::new("criterion 07 prime vectors p < 200", Duration::from_secs(1));
    let is_prime = |n: i128| (2..n).take_while(|q| q * q <= n).all(|q| n % q != 0) && n >= 2;
    for p in (3i128..200).filter(|&p| is_prime(p)) {
        let w = prime_vector(p).unwrap();
        if !w.is_primitive().unwrap() {
            c.fail(&format!("prime_vector({p}) not primitive"));
        }
        if w.norm_sq().unwrap() % (p * p) != 0 {
            c.fail(&format!("p² ∤ ‖prime_vector({p})‖²"));
        }
    }
    if prime_vector(2) != Err(Error::PrimeTwo) {
        c.fail("p = 2 must be a distinct error");
    }
    c.finish();
}

#[test]
fn criterion_08_reverse_round_trip() {
    let c = Criterion::new("criterion 08 reverse round trip", Duration::from_secs(30));
    for w in [v(1, 0, 0), v(1, 1, 1), v(1, 2, 2), v(3, 4, 12)] {
        for d in [1i128, 3, 5, 9, 15] {
            let up = scale_up(w, d).unwrap();
            if up.coord_gcd().unwrap() != 1 {
                c.fail(&format!("intermediate not coprime for v={w}, d={d}"));
            }
            if up.norm_sq().unwrap() != d * d * w.norm_sq().unwrap() {
                c.fail(&format!("square sum wrong for v={w}, d={d}"));
            }
            let down = scale_down(up, d).unwrap();
            if abs_sorted(down) != abs_sorted(w) {
                c.fail(&format!(
                    "round trip of v={w}, d={d} gave {down}, not a signed permutation"
                ));
            }
        }
    }
    c.finish();
}

// sound non-cubicity filter: a cubic lattice of edge e has |det| = e³ and
// every pairwise dot of lattice vectors divisible by e²
fn definitely_not_cubic_by_gram(b: &Basis3) -> bool {
    let det = b.det().abs();
    let e = (det as f64).cbrt().round() as i128;
    if e * e * e != det {
        return true;
    }
    let g = b.gram().unwrap();
    for row in &g {
        for &entry in row {
            if entry % (e * e) != 0 {
                return true;
            }
        }
    }
    false
}

fn random_unimodular_rebasis(rng: &mut StdRng, basis: &Basis3) -> Basis3 {
    let mut cols = *basis.cols();
    for _ in 0..10 {
        match rng.gen_range(0..4) {
            0 => {
                let i = rng.gen_range(0..3);
                let j = (i + rng.gen_range(1..3)) % 3;
                let t: i128 = rng.gen_range(-3..=3);
                cols[i] = cols[i].add(cols[j].scale(t).unwrap()).unwrap();
            }
            1 => {
                let i = rng.gen_range(0..3);
                cols[i] = cols[i].neg().unwrap();
            }
            2 => {
                let i = rng.gen_range(0..3);
                let j = rng.gen_range(0..3);
                cols.swap(i, j);
            }
            _ => {}
        }
    }
    Basis3::from_cols(cols).unwrap()
}

#[test]
fn criterion_09_classification_round_trip() {
    let c = Criterion::new(
        "criterion 09 classification round trip, 2×500 bases",
        Duration::from_secs(300),
    );
    let mut rng = StdRng::seed_from_u64(0xc1a5_51f7);

    // (v, d) pool with d² | ‖v‖², including d = 1
    let mut pool = Vec::new();
    for w in primitive_vectors(150) {
        let n = w.norm_sq().unwrap();
        for d in 1..=7i128 {
            if n % (d * d) == 0 {
                pool.push((w, d));
            }
        }
    }

    for _ in 0..500 {
        let (w, d) = pool[rng.gen_range(0..pool.len())];
        let k: i128 = rng.gen_range(1..=4);
        let g = gamma(w, d).unwrap().scaled(k).unwrap();
        let rebased = random_unimodular_rebasis(&mut rng, g.hnf().basis());
        let Some(r) = classify(&rebased).unwrap() else {
            c.fail(&format!("classify lost k·gamma({w}, {d}) with k={k}"));
        };
        if (r.k, r.d) != (k, d) {
            c.fail(&format!(
                "classify({w}, {d}, k={k}) returned ({}, {})",
                r.k, r.d
            ));
        }
        let back = hnf_of_generators(rebased.cols()).unwrap();
        let rebuilt = gamma(r.v, r.d).unwrap().scaled(r.k).unwrap();
        if rebuilt.hnf() != &back {
            c.fail("classification does not reproduce the HNF");
        }
    }

    let mut rejected = 0;
    while rejected < 500 {
        let mut cols = [IntVec3::ZERO; 3];
        for col in &mut cols {
            *col = v(
                rng.gen_range(-6..=6),
                rng.gen_range(-6..=6),
                rng.gen_range(-6..=6),
            );
        }
        let Ok(b) = Basis3::from_cols(cols) else {
            continue;
        };
        if !definitely_not_cubic_by_gram(&b) {
            continue; // could be cubic; not a valid negative sample
        }
        if classify(&b).unwrap().is_some() {
            c.fail(&format!("classify accepted a non-cubic basis {b:?}"));
        }
        rejected += 1;
    }
    c.finish();
}

#[test]
fn criterion_10_no_join_no_meet() {
    let c = Criterion::new("criterion 10 poset counterexample", Duration::from_secs(60));
    let g = gamma(v(1, 2, 2), 3).unwrap();
    let g3 = g.scaled(3).unwrap();
    let three = gamma_any(v(3, 0, 0), 3).unwrap();
    let nine = gamma_any(v(9, 0, 0), 9).unwrap();

    let ups = minimal_cubic_over(&g3, &nine, 9).unwrap();
    if ups.len() != 2 {
        c.fail(&format!(
            "expected 2 minimal upper bounds, got {}",
            ups.len()
        ));
    }
    let hnfs: Vec<_> = ups.iter().map(|l| l.hnf().clone()).collect();
    if !(hnfs.contains(three.hnf()) && hnfs.contains(g.hnf())) {
        c.fail("minimal upper bounds are not {3Z³, gamma((1,2,2),3)}");
    }
    // mutually incomparable, hence no join
    if lattice_leq(three.hnf().basis(), g.hnf().basis()).unwrap()
        || lattice_leq(g.hnf().basis(), three.hnf().basis()).unwrap()
    {
        c.fail("the two minimal upper bounds are comparable");
    }

    let downs = maximal_cubic_under(&g, &three, 9).unwrap();
    if downs.len() != 2 {
        c.fail(&format!(
            "expected 2 maximal lower bounds, got {}",
            downs.len()
        ));
    }
    let hnfs: Vec<_> = downs.iter().map(|l| l.hnf().clone()).collect();
    if !(hnfs.contains(g3.hnf()) && hnfs.contains(nine.hnf())) {
        c.fail("maximal lower bounds are not {3·gamma, 9Z³}");
    }
    if lattice_leq(g3.hnf().basis(), nine.hnf().basis()).unwrap()
        || lattice_leq(nine.hnf().basis(), g3.hnf().basis()).unwrap()
    {
        c.fail("the two maximal lower bounds are comparable");
    }
    c.finish();
}

#[test]
fn criterion_11_divisor_lattice_isomorphism() {
    let c = Criterion::new(
        "criterion 11 divisor-lattice isomorphism, 50 vectors",
        Duration::from_secs(300),
    );
    let mut chosen = Vec::new();
    for w in primitive_vectors(400) {
        let d_max = max_square_divisor(w.norm_sq().unwrap()).unwrap();
        let composite = d_max <= 15 && d_max > 1 && (2..d_max).any(|q| d_max % q == 0);
        if composite {
            chosen.push(w);
            if chosen.len() == 50 {
                break;
            }
        }
    }
    if chosen.len() != 50 {
        c.fail(&format!("only found {} admissible vectors", chosen.len()));
    }
    for w in chosen {
        let fam = divisor_family(w).unwrap();
        for (a, la) in fam.members() {
            for (b, lb) in fam.members() {
                let inc = lattice_leq(lb.hnf().basis(), la.hnf().basis()).unwrap();
                if inc != (b % a == 0) {
                    c.fail(&format!(
                        "inclusion/divisibility mismatch for v={w}, pair ({a}, {b})"
                    ));
                }
            }
        }
    }
    c.finish();
}
