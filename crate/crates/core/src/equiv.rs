//! Single moves between ideals, left equivalence classes, and the link with
//! the left star operation on dominant affine Weyl group elements.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use serde_json::{json, Value};

use crate::affine::{elements_up_to_length, minimal_element, AffineRoot, AffineWeylElement};
use crate::error::{Counterexample, Error, Result};
use crate::ideals::{enumerate_ideals, Ideal};
use crate::orbits::generic_jordan_type;
use crate::partition::Partition;
use crate::rootsys::{Family, Root, RootSystem};

/// Default length budget for [`pl_closure`].
pub const DEFAULT_LENGTH_BUDGET: usize = 12;

/// Removal of a generator β from `from`, where the simple root α normalizes
/// `from` and `s_α(β) > β`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Move {
    from: Ideal,
    to: Ideal,
    simple: usize,
    generator: Root,
}

impl Move {
    pub fn from_ideal(&self) -> &Ideal {
        &self.from
    }

    pub fn to_ideal(&self) -> &Ideal {
        &self.to
    }

    /// 0-based index of α.
    pub fn simple_index(&self) -> usize {
        self.simple
    }

    pub fn simple_root(&self) -> Root {
        self.from.system().simple_root(self.simple)
    }

    pub fn generator(&self) -> &Root {
        &self.generator
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rs = self.from.system();
        write!(
            f,
            "{} -> {} (α = {}, β = {})",
            self.from,
            self.to,
            rs.simple_label(self.simple),
            rs.root_label(&self.generator)
        )
    }
}

/// Every move out of `ideal`.
pub fn single_moves(ideal: &Ideal) -> Vec<Move> {
    let rs = ideal.system();
    let normalizer = ideal.normalizer_simple_roots();
    let mut out = Vec::new();
    for beta in ideal.generators().roots() {
        let bit = rs.positive_index(beta).expect("generator is a positive root");
        for &a in &normalizer {
            // s_α(β) = β − <β, α^∨> α
            if rs.coroot_pairing(beta.coeffs(), a) < 0 {
                let to = Ideal::from_mask(rs, ideal.mask() & !(1 << bit))
                    .expect("removing a generator leaves an ideal");
                out.push(Move {
                    from: ideal.clone(),
                    to,
                    simple: a,
                    generator: beta.clone(),
                });
            }
        }
    }
    out
}

/// Whether some move goes from `a` to `b` or from `b` to `a`.
pub fn one_move_apart(a: &Ideal, b: &Ideal) -> bool {
    single_moves(a).iter().any(|m| m.to_ideal() == b) || single_moves(b).iter().any(|m| m.to_ideal() == a)
}

/// Connected components of the move graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EquivalenceClasses {
    blocks: Vec<Vec<Ideal>>,
}

impl EquivalenceClasses {
    /// Blocks ordered by their first ideal; members in enumeration order.
    pub fn blocks(&self) -> &[Vec<Ideal>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block containing `ideal`.
    pub fn block_of(&self, ideal: &Ideal) -> Option<usize> {
        self.blocks.iter().position(|b| b.contains(ideal))
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(Vec::len).collect()
    }
}

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

pub fn left_equivalence_classes(rs: &Arc<RootSystem>) -> EquivalenceClasses {
    let ideals = enumerate_ideals(rs);
    let position: HashMap<u64, usize> = ideals.iter().enumerate().map(|(k, i)| (i.mask(), k)).collect();
    let mut parent: Vec<usize> = (0..ideals.len()).collect();
    for (k, ideal) in ideals.iter().enumerate() {
        for m in single_moves(ideal) {
            let (a, b) = (find(&mut parent, k), find(&mut parent, position[&m.to_ideal().mask()]));
            // keep the earlier ideal as root so blocks come out in order
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut blocks: BTreeMap<usize, Vec<Ideal>> = BTreeMap::new();
    for (k, ideal) in ideals.into_iter().enumerate() {
        let root = find(&mut parent, k);
        blocks.entry(root).or_default().push(ideal);
    }
    EquivalenceClasses {
        blocks: blocks.into_values().collect(),
    }
}

/// Fibers of the orbit map compared with left equivalence classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberReport {
    pub system: String,
    pub ideals: usize,
    pub moves: usize,
    pub classes: usize,
    pub fibers: usize,
    /// Orbit label per class, in block order.
    pub class_labels: Vec<Partition>,
    /// Fibers meeting more than one class, with the block indices they meet.
    pub split_fibers: Vec<(Partition, Vec<usize>)>,
}

/// Checks that every move preserves the generic Jordan type and reports the
/// fibers that meet several classes.
pub fn classes_refine_orbit_fibers(rs: &Arc<RootSystem>, seed: u64, trials: usize) -> Result<FiberReport> {
    let classes = left_equivalence_classes(rs);
    let mut label: HashMap<u64, Partition> = HashMap::new();
    let mut ideals = 0;
    for block in classes.blocks() {
        for ideal in block {
            label.insert(ideal.mask(), generic_jordan_type(ideal, seed, trials)?);
            ideals += 1;
        }
    }
    let mut moves = 0;
    for block in classes.blocks() {
        for ideal in block {
            for m in single_moves(ideal) {
                let (a, b) = (&label[&ideal.mask()], &label[&m.to_ideal().mask()]);
                if a != b {
                    return Err(Counterexample::new("moves preserve the generic Jordan type")
                        .with("move", &m)
                        .with("from label", a)
                        .with("to label", b)
                        .into_error());
                }
                moves += 1;
            }
        }
    }
    let class_labels: Vec<Partition> = classes.blocks().iter().map(|b| label[&b[0].mask()].clone()).collect();
    let mut fibers: BTreeMap<Partition, Vec<usize>> = BTreeMap::new();
    for (k, p) in class_labels.iter().enumerate() {
        fibers.entry(p.clone()).or_default().push(k);
    }
    let fiber_count = fibers.len();
    let split_fibers = fibers.into_iter().filter(|(_, blocks)| blocks.len() > 1).collect();
    Ok(FiberReport {
        system: rs.kind().to_string(),
        ideals,
        moves,
        classes: classes.len(),
        fibers: fiber_count,
        class_labels,
        split_fibers,
    })
}

fn require_type_a(rs: &RootSystem) -> Result<()> {
    if rs.family() != Family::A {
        return Err(Error::WrongFamily {
            expected: "A",
            got: rs.kind().to_string(),
        });
    }
    Ok(())
}

fn inversions(w: &AffineWeylElement) -> String {
    let parts: Vec<String> = w.inversion_set().iter().map(|r| r.to_string()).collect();
    format!("{{{}}}", parts.join(", "))
}

/// Data produced while lifting a move to a star operation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveWitness {
    /// `w₁(α) = α_i`.
    pub i: usize,
    /// `w₁(β − δ) = α_j`.
    pub j: usize,
    /// Minimal element of the larger ideal.
    pub w1: AffineWeylElement,
    /// `s_j·w₁`, whose first layer is the smaller ideal.
    pub w2: AffineWeylElement,
}

/// Lifts a move `I → J` to the star operation for `(s_i, s_j)` on the
/// minimal element of `I`, checking every step.
pub fn verify_move_lifts_to_star(mv: &Move) -> Result<MoveWitness> {
    let rs = mv.from_ideal().system();
    require_type_a(rs)?;
    let w1 = minimal_element(mv.from_ideal())?;
    let fail = |check: &str| {
        Counterexample::new(check)
            .with("move", mv)
            .with("w1", &w1)
            .with("N(w1)", inversions(&w1))
    };
    let alpha = AffineRoot::new(mv.simple_root(), 0);
    let beta_minus_delta = AffineRoot::new(mv.generator().clone(), -1);
    let Some(i) = w1.act(&alpha).simple_index(rs) else {
        return Err(fail("w1(α) is an affine simple root").with("w1(α)", w1.act(&alpha)).into_error());
    };
    let Some(j) = w1.act(&beta_minus_delta).simple_index(rs) else {
        return Err(fail("w1(β − δ) is an affine simple root")
            .with("w1(β − δ)", w1.act(&beta_minus_delta))
            .into_error());
    };
    let (ai, aj) = (AffineRoot::simple(rs, i), AffineRoot::simple(rs, j));
    if rs.inner_product(ai.finite(), aj.finite()) >= 0.into() {
        return Err(fail("(α_i, α_j) < 0").with("i", i).with("j", j).into_error());
    }
    if !w1.in_descent_pair(i, j) {
        return Err(fail("w1 ∈ D_L(s_i, s_j)")
            .with("left descents", w1.left_descents())
            .into_error());
    }
    let star = w1.star_left(i, j)?.ok_or_else(|| Error::Internal("star undefined on D_L".into()))?;
    let w2 = w1.left_multiply(j)?;
    if star != w2 {
        return Err(fail("star of w1 = s_j·w1").with("star", &star).with("s_j w1", &w2).into_error());
    }
    if !w2.is_dominant() {
        return Err(fail("s_j·w1 is dominant").with("w2", &w2).into_error());
    }
    let layer = w2.first_layer_ideal()?;
    if &layer != mv.to_ideal() {
        return Err(fail("first layer of s_j·w1 = J").with("first layer", &layer).into_error());
    }
    let delta_minus_beta = AffineRoot::new(mv.generator().neg(), 1);
    let n1 = w1.inversion_set();
    let mut n2 = w2.inversion_set();
    let fresh = n2.insert(delta_minus_beta);
    if !fresh || n1 != n2 {
        return Err(fail("N(w1) = N(s_j·w1) ∪ {δ − β}")
            .with("N(w2)", inversions(&w2))
            .into_error());
    }
    Ok(MoveWitness { i, j, w1, w2 })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveSuiteSummary {
    pub system: String,
    pub ideals: usize,
    pub moves: usize,
}

/// Runs [`verify_move_lifts_to_star`] on every move of every ideal.
pub fn verify_all_moves(rs: &Arc<RootSystem>) -> Result<MoveSuiteSummary> {
    require_type_a(rs)?;
    let ideals = enumerate_ideals(rs);
    let mut moves = 0;
    for ideal in &ideals {
        for m in single_moves(ideal) {
            verify_move_lifts_to_star(&m)?;
            moves += 1;
        }
    }
    Ok(MoveSuiteSummary {
        system: rs.kind().to_string(),
        ideals: ideals.len(),
        moves,
    })
}

/// Checks the shape of `w⁻¹(α_s)` for every left descent `s` of a dominant
/// `w`: it is `β − kδ` with `k ≥ 1` and β in the first layer, and β is a
/// generator when `k = 1`. Also checks that every simple root sent to an
/// affine simple root normalizes the first layer.
pub fn check_descent_roots(w: &AffineWeylElement) -> Result<()> {
    let rs = w.system();
    let ideal = w.first_layer_ideal()?;
    let inv = w.inverse();
    let generators = ideal.generators();
    for s in w.left_descents().indices().iter().copied() {
        let r = inv.act(&AffineRoot::simple(rs, s));
        let k = -r.level();
        let beta = r.finite();
        let ok = k >= 1 && beta.is_positive() && ideal.contains(beta);
        let generator_ok = k != 1 || generators.roots().contains(beta);
        if !ok || !generator_ok {
            return Err(Counterexample::new("descent roots of a dominant element")
                .with("element", w)
                .with("descent", format!("s{s}"))
                .with("w^-1(α_s)", &r)
                .with("first layer", &ideal)
                .into_error());
        }
    }
    let normalizer = ideal.normalizer_simple_roots();
    for a in 0..rs.rank() {
        if w.act(&AffineRoot::new(rs.simple_root(a), 0)).simple_index(rs).is_some() && !normalizer.contains(&a) {
            return Err(Counterexample::new("simple roots sent to simple roots normalize the first layer")
                .with("element", w)
                .with("simple root", rs.simple_label(a))
                .with("first layer", &ideal)
                .into_error());
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StarStepOutcome {
    /// `w ∉ D_L(s, t)`.
    Vacuous,
    SameIdeal,
    OneMove,
}

/// Checks that the star of a dominant `w` for `(s, t)` is dominant and that
/// the two first layers are equal or one move apart, equal whenever the
/// inversion gained or lost has level above 1.
pub fn verify_star_step(w: &AffineWeylElement, s: usize, t: usize) -> Result<StarStepOutcome> {
    let rs = w.system();
    require_type_a(rs)?;
    if !w.is_dominant() {
        return Err(Error::NotDominant);
    }
    let Some(star) = w.star_left(s, t)? else {
        return Ok(StarStepOutcome::Vacuous);
    };
    let fail = |check: &str| {
        Counterexample::new(check)
            .with("w", w)
            .with("pair", format!("(s{s}, s{t})"))
            .with("star", &star)
            .with("N(w)", inversions(w))
            .with("N(star)", inversions(&star))
    };
    if !star.is_dominant() {
        return Err(fail("star of a dominant element is dominant").into_error());
    }
    check_descent_roots(w)?;
    check_descent_roots(&star)?;
    let (nw, ns) = (w.inversion_set(), star.inversion_set());
    let changed: Vec<&AffineRoot> = nw.symmetric_difference(&ns).collect();
    let &[gamma] = changed.as_slice() else {
        return Err(fail("inversion sets differ by one root").into_error());
    };
    let (iw, istar) = (w.first_layer_ideal()?, star.first_layer_ideal()?);
    if iw == istar {
        return Ok(StarStepOutcome::SameIdeal);
    }
    if gamma.level() > 1 {
        return Err(fail("first layers agree when the changed inversion has level > 1")
            .with("changed inversion", gamma)
            .into_error());
    }
    if !one_move_apart(&iw, &istar) {
        return Err(fail("first layers are one move apart")
            .with("I(w)", &iw)
            .with("I(star)", &istar)
            .into_error());
    }
    Ok(StarStepOutcome::OneMove)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarSuiteSummary {
    pub system: String,
    pub max_length: usize,
    pub dominant_elements: usize,
    pub pairs: usize,
    pub same_ideal: usize,
    pub one_move: usize,
}

/// Runs [`verify_star_step`] on every dominant element of length at most
/// `max_length` and every order-3 pair it lies in `D_L` of.
pub fn verify_star_suite(rs: &Arc<RootSystem>, max_length: usize) -> Result<StarSuiteSummary> {
    require_type_a(rs)?;
    let mut summary = StarSuiteSummary {
        system: rs.kind().to_string(),
        max_length,
        dominant_elements: 0,
        pairs: 0,
        same_ideal: 0,
        one_move: 0,
    };
    for w in elements_up_to_length(rs, max_length).into_iter().filter(|w| w.is_dominant()) {
        summary.dominant_elements += 1;
        check_descent_roots(&w)?;
        for (s, t) in w.star_pairs() {
            summary.pairs += 1;
            match verify_star_step(&w, s, t)? {
                StarStepOutcome::SameIdeal => summary.same_ideal += 1,
                StarStepOutcome::OneMove => summary.one_move += 1,
                StarStepOutcome::Vacuous => {
                    return Err(Error::Internal(format!("{w} listed pair (s{s}, s{t}) outside D_L")))
                }
            }
        }
    }
    Ok(summary)
}

/// Elements reachable from `w` by left star operations without exceeding
/// length `length_budget`.
pub fn pl_closure(w: &AffineWeylElement, length_budget: usize) -> BTreeSet<AffineWeylElement> {
    let mut seen = BTreeSet::from([w.clone()]);
    let mut queue = VecDeque::from([w.clone()]);
    while let Some(x) = queue.pop_front() {
        for (s, t) in x.star_pairs() {
            let Ok(Some(y)) = x.star_left(s, t) else {
                continue;
            };
            if y.length() <= length_budget && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

/// `[{"ideals": [...], "orbit": "2+1+1"}, ...]`; `orbit` only with labels.
pub fn classes_to_json(classes: &EquivalenceClasses, labels: Option<&[Partition]>) -> Value {
    Value::Array(
        classes
            .blocks()
            .iter()
            .enumerate()
            .map(|(k, block)| {
                let ideals: Vec<Value> = block.iter().map(Ideal::to_json).collect();
                match labels {
                    Some(l) => json!({"ideals": ideals, "orbit": l[k].to_string()}),
                    None => json!({"ideals": ideals}),
                }
            })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::ideal_from_generator_vectors;
    use proptest::prelude::*;

    fn rs(code: &str) -> Arc<RootSystem> {
        RootSystem::build(code.parse().unwrap()).unwrap()
    }

    fn gen(s: &Arc<RootSystem>, vs: &[&[i64]]) -> Ideal {
        let v: Vec<Vec<i64>> = vs.iter().map(|x| x.to_vec()).collect();
        ideal_from_generator_vectors(s, &v).unwrap()
    }

    fn members(s: &Arc<RootSystem>, vs: &[&[i64]]) -> Ideal {
        let roots: Vec<Root> = vs.iter().map(|v| s.positive_root(v).unwrap()).collect();
        Ideal::from_roots(s, &roots).unwrap()
    }

    #[test]
    fn moves_of_small_ideals() {
        let g2 = rs("G2");
        assert!(single_moves(&Ideal::zero(&g2)).is_empty());
        let i = members(&g2, &[&[3, 1], &[3, 2]]);
        let moves = single_moves(&i);
        assert_eq!(moves.len(), 1);
        assert_eq!(moves[0].simple_root(), g2.simple_root(1));
        assert_eq!(moves[0].generator(), &g2.positive_root(&[3, 1]).unwrap());
        assert_eq!(moves[0].to_ideal(), &members(&g2, &[&[3, 2]]));
        let b3 = rs("B3");
        assert!(single_moves(&gen(&b3, &[&[0, 1, 1], &[1, 1, 0]])).is_empty());
    }

    #[test]
    fn move_invariants() {
        for code in ["A3", "B3", "G2"] {
            let s = rs(code);
            for ideal in enumerate_ideals(&s) {
                for m in single_moves(&ideal) {
                    assert!(m.from_ideal().generators().roots().contains(m.generator()));
                    assert!(ideal.normalizer_simple_roots().contains(&m.simple_index()));
                    let reflected = s.reflect(&m.simple_root(), m.generator()).unwrap();
                    let diff = crate::rootsys::sub_vec(reflected.coeffs(), m.generator().coeffs());
                    assert!(diff.iter().all(|&d| d >= 0) && diff.iter().any(|&d| d > 0));
                    assert_eq!(m.to_ideal().len() + 1, m.from_ideal().len());
                }
            }
        }
    }

    #[test]
    fn g2_classes() {
        let g2 = rs("G2");
        let classes = left_equivalence_classes(&g2);
        let expected = vec![
            vec![Ideal::zero(&g2)],
            vec![members(&g2, &[&[3, 2]]), members(&g2, &[&[3, 1], &[3, 2]])],
            vec![members(&g2, &[&[2, 1], &[3, 1], &[3, 2]])],
            vec![
                members(&g2, &[&[1, 1], &[2, 1], &[3, 1], &[3, 2]]),
                members(&g2, &[&[1, 0], &[1, 1], &[2, 1], &[3, 1], &[3, 2]]),
                members(&g2, &[&[1, 1], &[2, 1], &[3, 1], &[3, 2], &[0, 1]]),
            ],
            vec![Ideal::maximal(&g2)],
        ];
        assert_eq!(classes.blocks(), expected.as_slice());
        let mut sizes = classes.sizes();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 1, 2, 3]);
    }

    #[test]
    fn a1_a2_classes() {
        assert_eq!(left_equivalence_classes(&rs("A1")).sizes(), vec![1, 1]);
        let a2 = rs("A2");
        let classes = left_equivalence_classes(&a2);
        assert_eq!(classes.sizes(), vec![1, 3, 1]);
        assert_eq!(
            classes.blocks()[1],
            vec![
                members(&a2, &[&[1, 1]]),
                members(&a2, &[&[1, 0], &[1, 1]]),
                members(&a2, &[&[0, 1], &[1, 1]])
            ]
        );
    }

    #[test]
    fn fibers() {
        let a2 = classes_refine_orbit_fibers(&rs("A2"), 0, 5).unwrap();
        assert_eq!((a2.classes, a2.fibers), (3, 3));
        assert!(a2.split_fibers.is_empty());
        let b3 = rs("B3");
        let report = classes_refine_orbit_fibers(&b3, 0, 5).unwrap();
        let classes = left_equivalence_classes(&b3);
        let i = gen(&b3, &[&[0, 1, 1], &[1, 1, 0]]);
        let j = gen(&b3, &[&[0, 1, 2], &[1, 1, 0]]);
        let (bi, bj) = (classes.block_of(&i).unwrap(), classes.block_of(&j).unwrap());
        assert_ne!(bi, bj);
        assert!(report.split_fibers.iter().any(|(_, blocks)| blocks.contains(&bi) && blocks.contains(&bj)));
    }

    #[test]
    fn a2_move_witness() {
        let a2 = rs("A2");
        let from = members(&a2, &[&[1, 0], &[1, 1]]);
        let moves = single_moves(&from);
        assert_eq!(moves.len(), 1);
        let w = verify_move_lifts_to_star(&moves[0]).unwrap();
        assert_eq!(w.w2, minimal_element(&members(&a2, &[&[1, 1]])).unwrap());
        assert_eq!(w.w2.length() + 1, w.w1.length());
    }

    #[test]
    fn all_moves_lift() {
        for (code, ideals) in [("A2", 5), ("A3", 14)] {
            let summary = verify_all_moves(&rs(code)).unwrap();
            assert_eq!(summary.ideals, ideals);
            assert!(summary.moves > 0);
        }
    }

    #[test]
    fn verifiers_refuse_other_families() {
        let g2 = rs("G2");
        assert!(matches!(verify_all_moves(&g2), Err(Error::WrongFamily { .. })));
        assert!(matches!(verify_star_suite(&g2, 4), Err(Error::WrongFamily { .. })));
        let m = single_moves(&members(&g2, &[&[3, 1], &[3, 2]])).remove(0);
        assert!(matches!(verify_move_lifts_to_star(&m), Err(Error::WrongFamily { .. })));
    }

    #[test]
    fn star_steps_small() {
        let a2 = rs("A2");
        let s0 = AffineWeylElement::simple_reflection(&a2, 0).unwrap();
        let pairs = s0.star_pairs();
        assert!(!pairs.is_empty());
        for (s, t) in pairs {
            assert_ne!(verify_star_step(&s0, s, t).unwrap(), StarStepOutcome::Vacuous);
        }
        let e = AffineWeylElement::identity(&a2);
        assert!(e.star_pairs().is_empty());
        assert_eq!(verify_star_step(&e, 0, 1).unwrap(), StarStepOutcome::Vacuous);
        let s1 = AffineWeylElement::simple_reflection(&a2, 1).unwrap();
        assert!(matches!(verify_star_step(&s1, 0, 1), Err(Error::NotDominant)));
    }

    #[test]
    fn star_suite_a2() {
        let summary = verify_star_suite(&rs("A2"), 8).unwrap();
        assert!(summary.pairs > 0);
        assert_eq!(summary.pairs, summary.same_ideal + summary.one_move);
    }

    #[test]
    fn closures() {
        let a2 = rs("A2");
        let e = AffineWeylElement::identity(&a2);
        assert_eq!(pl_closure(&e, DEFAULT_LENGTH_BUDGET), BTreeSet::from([e]));
        let a3 = rs("A3");
        for w in elements_up_to_length(&a3, 5).into_iter().filter(|w| w.is_dominant()) {
            for u in pl_closure(&w, 8) {
                assert!(u.is_dominant(), "{u} from {w}");
            }
        }
    }

    #[test]
    fn classes_json_shape() {
        let a1 = rs("A1");
        let v = classes_to_json(&left_equivalence_classes(&a1), None);
        assert_eq!(
            v.to_string(),
            r#"[{"ideals":[{"system":"A1","roots":[]}]},{"ideals":[{"system":"A1","roots":[[1]]}]}]"#
        );
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn closure_is_symmetric(word in prop::collection::vec(0usize..4, 0..=7)) {
            let a3 = rs("A3");
            let budget = 8;
            let w = AffineWeylElement::from_word(&a3, &word).unwrap();
            prop_assume!(w.length() < budget);
            for u in pl_closure(&w, budget) {
                if u.length() < budget {
                    prop_assert!(pl_closure(&u, budget).contains(&w));
                }
            }
        }
    }
}
