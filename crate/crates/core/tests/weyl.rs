use hdcoh::{CartanType, CoxeterSystem, Elem, RootSystem};

fn setup(t: &str) -> (RootSystem, CoxeterSystem) {
    let ct: CartanType = t.parse().unwrap();
    (RootSystem::new(&ct).unwrap(), CoxeterSystem::new(ct.cartan_matrix()).unwrap())
}

/// Matrix of `s_i` on the root lattice, column `c` holding `s_i(α_c)`.
fn simple_matrix(a: &[Vec<i32>], i: usize) -> Vec<i32> {
    let n = a.len();
    let mut m = vec![0; n * n];
    for r in 0..n {
        for c in 0..n {
            m[r * n + c] = i32::from(r == c) - if r == i { a[i][c] } else { 0 };
        }
    }
    m
}

fn matmul(x: &[i32], y: &[i32], n: usize) -> Vec<i32> {
    let mut out = vec![0; n * n];
    for r in 0..n {
        for c in 0..n {
            out[r * n + c] = (0..n).map(|k| x[r * n + k] * y[k * n + c]).sum();
        }
    }
    out
}

fn word_matrix(a: &[Vec<i32>], word: &[u8]) -> Vec<i32> {
    let n = a.len();
    let mut m: Vec<i32> = (0..n * n).map(|k| i32::from(k / n == k % n)).collect();
    for &i in word {
        m = matmul(&m, &simple_matrix(a, i as usize), n);
    }
    m
}

/// `x ≤ w` iff some subword of a reduced word of `w` multiplies to `x`.
fn subword_leq(g: &CoxeterSystem, x: Elem, w: Elem) -> bool {
    let a = g.cartan();
    let word = g.word(w);
    let target = g.matrix(x);
    (0u32..1 << word.len()).any(|mask| {
        let sub: Vec<u8> = word.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &s)| s).collect();
        word_matrix(a, &sub) == target
    })
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

#[test]
fn group_orders_match_formulas() {
    let cases = [
        ("A2", factorial(3), 3),
        ("A3", factorial(4), 6),
        ("A4", factorial(5), 10),
        ("B2", 8, 4),
        ("B3", 48, 9),
        ("C3", 48, 9),
        ("D4", 192, 12),
        ("G2", 12, 6),
        ("F4", 1152, 24),
        ("A1xA2", 12, 4),
    ];
    for (t, order, pos) in cases {
        let (rs, g) = setup(t);
        assert_eq!(g.size(), order, "{t}");
        assert_eq!(rs.positive_roots().len(), pos, "{t}");
        let w0 = g.elements().max_by_key(|&w| g.length(w)).unwrap();
        assert_eq!(g.length(w0), pos, "{t}");
        assert_eq!(g.elements().filter(|&w| g.length(w) == pos).count(), 1, "{t}");
    }
}

#[test]
fn words_reproduce_matrices() {
    for t in ["A3", "B3", "G2", "D4"] {
        let (_, g) = setup(t);
        for w in g.elements() {
            assert_eq!(word_matrix(g.cartan(), g.word(w)), g.matrix(w), "{t} {}", g.render(w));
            assert_eq!(g.word(w).len(), g.length(w));
            assert_eq!(g.from_matrix(g.matrix(w)), Some(w));
        }
    }
}

#[test]
fn length_is_inversion_count() {
    for t in ["A3", "B3", "C3", "G2", "D4", "A1xA1"] {
        let (rs, g) = setup(t);
        for w in g.elements() {
            let inversions = rs
                .positive_roots()
                .iter()
                .filter(|r| g.act_on_root(w, r.coords()).iter().all(|&c| c <= 0))
                .count();
            assert_eq!(inversions, g.length(w), "{t} {}", g.render(w));
        }
    }
}

#[test]
fn bruhat_matches_subword_oracle() {
    for t in ["A3", "B2", "G2", "A1xA2"] {
        let (_, g) = setup(t);
        for x in g.elements() {
            for w in g.elements() {
                assert_eq!(g.bruhat_leq(x, w), subword_leq(&g, x, w), "{t} {} {}", g.render(x), g.render(w));
            }
        }
    }
}

#[test]
fn lifting_matches_bitsets() {
    for t in ["B3", "D4"] {
        let (_, g) = setup(t);
        for x in g.elements() {
            for w in g.elements().step_by(3) {
                assert_eq!(g.bruhat_leq(x, w), g.bruhat_leq_lifting(x, w));
            }
        }
    }
}

#[test]
fn positive_roots_sum_to_two_rho() {
    for t in ["A2", "A3", "B2", "B3", "C3", "D4", "G2", "F4", "E6"] {
        let (rs, _) = setup(t);
        let n = rs.rank();
        let mut sum = vec![0i64; n];
        for r in rs.positive_roots() {
            for (s, &c) in sum.iter_mut().zip(r.coords()) {
                *s += i64::from(c);
            }
        }
        let sum: Vec<_> = sum.into_iter().map(|c| num_rational::Ratio::from_integer(c)).collect();
        let two_rho = rs.rho().add(rs.rho());
        assert_eq!(rs.root_coords_to_weight(&sum), two_rho, "{t}");
    }
}

#[test]
fn coset_sizes() {
    for t in ["A3", "B3", "G2"] {
        let (_, g) = setup(t);
        for j in hdcoh::GenSet::all_subsets(g.rank()) {
            let wj = g.parabolic_elements(j).len();
            assert_eq!(g.min_coset_reps(j).len() * wj, g.size());
            assert_eq!(g.min_coset_reps_right(j).len() * wj, g.size());
            let lj = g.longest_element(j);
            assert_eq!(g.length(lj), g.parabolic_elements(j).iter().map(|&w| g.length(w)).max().unwrap());
        }
    }
}
