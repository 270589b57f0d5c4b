use super::*;
use crate::diagram::{beta, d_xy, d_yx, empty, identity, pi, tensor_power, Colour};
use crate::groups::{dihedral_eval, GeneratingSet, Group, Subgroup};

const B: usize = DEFAULT_BUDGET_POINTS;

fn w(s: &str) -> ColouredWord {
    ColouredWord::self_inverse(s)
}

fn dstar_d() -> ColouredPartition {
    compose(&involute(&d_xy()), &d_xy()).unwrap().partition
}

fn free_wreath_trivial() -> CategoryPredicate {
    let g = Group::cyclic(1);
    CategoryPredicate::DGammaLambdaS(GeneratingSet::standard(&g), Subgroup::trivial(&g))
}

fn words_over(letters: &str, max: usize) -> Vec<ColouredWord> {
    let mut out = vec![String::new()];
    let mut frontier = vec![String::new()];
    for _ in 0..max {
        let mut next = Vec::new();
        for s in &frontier {
            for c in letters.chars() {
                next.push(format!("{s}{c}"));
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.iter().map(|s| w(s)).collect()
}

#[test]
fn projectives_on_small_words() {
    let x = w("x");
    for ell in 0..4 {
        let ps = enumerate_projectives(&x, &CategoryPredicate::DEll(ell), B).unwrap();
        assert_eq!(ps, vec![pi(&x, &x).unwrap()]);
    }
    let a = w("a");
    let ps = enumerate_projectives(&a, &free_wreath_trivial(), B).unwrap();
    assert_eq!(ps.len(), 2);
    assert!(ps.contains(&pi(&a, &a).unwrap()));
    assert!(ps.contains(&beta(&a, &a).unwrap()));
    let ps = enumerate_projectives(&ColouredWord::empty(), &free_wreath_trivial(), B).unwrap();
    assert_eq!(ps, vec![empty()]);
    assert_eq!(
        enumerate_projectives(&w("xxxxxxx"), &CategoryPredicate::DEll(0), B),
        Err(FusionError::BudgetExceeded {
            points: 14,
            budget: 12
        })
    );
}

#[test]
fn decompose_pairs_in_d_ell() {
    let x = w("x");
    let px = pi(&x, &x).unwrap();
    for ell in 0..4 {
        let terms = tensor_decompose(&px, &px, &CategoryPredicate::DEll(ell)).unwrap();
        assert_eq!(
            terms,
            vec![
                FusionTerm {
                    kind: FusionKind::Tensor,
                    partition: identity(&w("xx"))
                },
                FusionTerm {
                    kind: FusionKind::Square(1),
                    partition: beta(&w("xx"), &w("xx")).unwrap()
                },
            ]
        );
    }
    assert_eq!(fusion_candidates(&px, &px).unwrap().len(), 3);
}

#[test]
fn decompose_in_free_wreath() {
    let a = w("a");
    let pa = pi(&a, &a).unwrap();
    let terms = tensor_decompose(&pa, &pa, &free_wreath_trivial()).unwrap();
    let ts: Vec<usize> = terms
        .iter()
        .map(|t| t.partition.through_block_count())
        .collect();
    assert_eq!(ts, vec![2, 0, 1]);
    let terms = tensor_decompose(&pa, &empty(), &free_wreath_trivial()).unwrap();
    assert_eq!(terms.len(), 1);
    assert_eq!(terms[0].partition, pa);
}

#[test]
fn equivalence_examples() {
    for ell in 1..=4usize {
        let cat = CategoryPredicate::DEll(ell as u32);
        let p = tensor_power(&dstar_d(), ell);
        for mode in [EquivalenceMode::Candidate, EquivalenceMode::Exhaustive] {
            if mode == EquivalenceMode::Exhaustive && 4 * ell > B {
                continue;
            }
            assert!(equivalent(&p, &p, &cat, mode, B).unwrap());
            {
                let r = find_implementer(&p, &empty(), &cat, mode, B).unwrap();
                assert_eq!(r, Some(tensor_power(&d_xy(), ell)), "ℓ = {ell}");
            }
        }
        let x = w("x");
        let y = w("y");
        let lhs = tensor(&pi(&x, &x).unwrap(), &dstar_d());
        let rhs = pi(&y, &y).unwrap();
        for mode in [EquivalenceMode::Candidate, EquivalenceMode::Exhaustive] {
            assert!(equivalent(&lhs, &rhs, &cat, mode, B).unwrap(), "ℓ = {ell}");
        }
        // θ^j is not trivial for 0 < j < ℓ
        for j in 1..ell {
            let p = tensor_power(&dstar_d(), j);
            assert!(!equivalent(&p, &empty(), &cat, EquivalenceMode::Exhaustive, B).unwrap());
        }
    }
    // in D_0 the two orientations are never equivalent
    let cat = CategoryPredicate::DEll(0);
    let dd = compose(&involute(&d_yx()), &d_yx()).unwrap().partition;
    assert!(!equivalent(&dstar_d(), &dd, &cat, EquivalenceMode::Exhaustive, B).unwrap());
}

fn projectives_up_to(cat: &CategoryPredicate, letters: &str, max: usize) -> Vec<ColouredPartition> {
    words_over(letters, max)
        .iter()
        .flat_map(|word| enumerate_projectives(word, cat, B).unwrap())
        .collect()
}

#[test]
fn candidate_and_exhaustive_agree() {
    let g = Group::cyclic(2);
    let cats = [
        (CategoryPredicate::DEll(2), "xy"),
        (CategoryPredicate::DEll(0), "xy"),
        (free_wreath_trivial(), "a"),
        (
            CategoryPredicate::DGammaLambdaS(GeneratingSet::standard(&g), Subgroup::trivial(&g)),
            "g",
        ),
    ];
    for (cat, letters) in cats {
        let projs = projectives_up_to(&cat, letters, 3);
        let mut checked = 0;
        for p in &projs {
            for q in &projs {
                if p.through_block_count() != q.through_block_count() {
                    continue;
                }
                let c = equivalent(p, q, &cat, EquivalenceMode::Candidate, B).unwrap();
                let e = equivalent(p, q, &cat, EquivalenceMode::Exhaustive, B).unwrap();
                assert_eq!(c, e, "{p} vs {q} in {}", cat.describe());
                checked += 1;
            }
        }
        assert!(checked > 20);
    }
}

#[test]
fn equivalence_is_an_equivalence_relation() {
    let cat = CategoryPredicate::DEll(2);
    let projs = projectives_up_to(&cat, "xy", 3);
    let n = projs.len();
    let eq: Vec<Vec<bool>> = projs
        .iter()
        .map(|p| {
            projs
                .iter()
                .map(|q| equivalent(p, q, &cat, EquivalenceMode::Candidate, B).unwrap())
                .collect()
        })
        .collect();
    for i in 0..n {
        assert!(eq[i][i]);
        for j in 0..n {
            assert_eq!(eq[i][j], eq[j][i]);
            if eq[i][j] {
                assert_eq!(
                    projs[i].through_block_count(),
                    projs[j].through_block_count()
                );
            }
            for k in 0..n {
                if eq[i][j] && eq[j][k] {
                    assert!(eq[i][k]);
                }
            }
        }
    }
}

/// `(t, k)` with `k` the `z`-exponent of `φ(upper)` reduced mod `ℓ`.
fn dell_label(ell: u32) -> impl FnMut(&ColouredPartition) -> Result<String, FusionError> {
    move |p| {
        let g = dihedral_eval(p.upper()).unwrap();
        let k = if ell == 0 {
            g.t
        } else {
            g.t.rem_euclid(ell as i64)
        };
        Ok(format!("{}:{k}", p.through_block_count()))
    }
}

#[test]
fn dimensions_in_o_plus_plus() {
    for ell in 0..4 {
        let words = words_over("xy", 3);
        let table =
            dimension_solve(&CategoryPredicate::DEll(ell), &words, 5, B, dell_label(ell)).unwrap();
        // Chebyshev recursion d_{n+1} = 5 d_n - d_{n-1}
        let mut d = vec![1i64, 5];
        for i in 1..3 {
            d.push(5 * d[i] - d[i - 1]);
        }
        assert_eq!(
            table.get(&"1:0".to_string()).unwrap(),
            &5.into(),
            "ℓ = {ell}"
        );
        assert_eq!(table.get(&"2:0".to_string()).unwrap(), &d[2].into());
        assert_eq!(table.get(&"3:0".to_string()).unwrap(), &d[3].into());
        assert_eq!(d[2..], [24, 115]);
        table.require_all().unwrap();
    }
}

#[test]
fn dimensions_in_free_wreath_trivial_group() {
    let words: Vec<ColouredWord> = (0..=3).map(|n| w(&"a".repeat(n))).collect();
    let table = dimension_solve(&free_wreath_trivial(), &words, 5, B, |p| {
        Ok(p.through_block_count())
    })
    .unwrap();
    assert_eq!(table.get(&1).unwrap(), &4.into());
    assert_eq!(table.get(&2).unwrap(), &11.into());
    assert_eq!(table.get(&2).unwrap(), &(25 - 15 + 1).into());
    assert_eq!(table.get(&0).unwrap(), &1.into());
}

#[test]
fn dimension_solver_reports_small_n_and_missing_labels() {
    let cat = CategoryPredicate::DEll(2);
    assert_eq!(
        dimension_solve(&cat, &[w("x")], 3, B, dell_label(2)),
        Err(FusionError::SmallN(3))
    );
    let t = dimension_solve(&cat, &[w("x")], 5, B, dell_label(2)).unwrap();
    assert!(matches!(
        t.get(&"2:0".to_string()),
        Err(FusionError::Underdetermined(_))
    ));
}

#[test]
fn term_json() {
    let x = w("x");
    let px = pi(&x, &x).unwrap();
    let term = FusionTerm {
        kind: FusionKind::Square(1),
        partition: square_contract(&px, &px, 1).unwrap(),
    };
    let j = serde_json::to_string(&FusionTermJson::new(&term, Some("1".into()))).unwrap();
    assert!(
        j.starts_with(r#"{"kind":"square","k":1,"partition":{"upper":["x","x"]"#),
        "{j}"
    );
    assert!(j.ends_with(r#""label":"1"}"#));
    let _ = Colour::self_inverse("x");
}
