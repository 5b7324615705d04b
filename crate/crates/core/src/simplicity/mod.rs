//! Condition (L), cofinality, minimality and simplicity.
//!
//! For a shift with memory `m`, `βy ∈ X` depends on `β` only through its
//! last `min(m, |β|)` letters, so every follower set `F_B` of a finite word
//! set is an intersection of the finitely many `F_w` with `|w| ≤ m`. The
//! decision procedures quantify over these classes.

pub mod oracle;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::action;
use crate::clopen::ClopenSet;
use crate::error::{Error, Result};
use crate::point::EvPeriodicPoint;
use crate::ring::Ring;
use crate::shift::Shift;
use crate::word::{concat, Symbol, Word};

/// Default limit on intersection candidates examined while enumerating
/// follower classes.
pub const DEFAULT_CLASS_CAP: usize = 1 << 20;

/// A realizable follower set `F_S = ∩_{w∈S} F_w` with a label `S` of words of
/// length at most `m`. Labels are minimal in size.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FollowerClass {
    suffixes: Vec<Word>,
    follower: ClopenSet,
}

impl FollowerClass {
    pub fn suffixes(&self) -> &[Word] {
        &self.suffixes
    }

    pub fn follower(&self) -> &ClopenSet {
        &self.follower
    }

    /// Formatted label, for witnesses.
    pub fn label(&self) -> Vec<String> {
        let shift = self.follower.shift();
        self.suffixes.iter().map(|w| shift.format_word(w)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Decision,
    Oracle,
}

/// A counterexample. Words and points are rendered with the shift's alphabet
/// (points as `u|v` literals) so a witness can be replayed from its JSON.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// `F_B = {γ^∞}`.
    SingletonFollower { suffixes: Vec<String>, gamma: String },
    /// `Cost(B, x) = ∞`: no shift of `x` can be prefixed into `F_B`.
    TrappedPoint { suffixes: Vec<String>, point: String },
    /// No `α, γ` within the search bound works for `x`.
    Unreached { suffixes: Vec<String>, point: String },
    /// The failing parts of a combined verdict.
    Failed { failed: Vec<String>, details: Vec<Verdict> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub property: String,
    pub holds: bool,
    pub witness: Option<Witness>,
    pub method: Method,
    pub bound: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl Verdict {
    fn pass(property: &str, method: Method, bound: Option<usize>) -> Self {
        Verdict { property: property.into(), holds: true, witness: None, method, bound, notes: Vec::new() }
    }

    fn fail(property: &str, method: Method, bound: Option<usize>, witness: Witness) -> Self {
        Verdict { property: property.into(), holds: false, witness: Some(witness), method, bound, notes: Vec::new() }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("verdicts serialize")
    }
}

fn key(set: &ClopenSet) -> (usize, BTreeSet<Word>) {
    (set.level(), set.words().clone())
}

/// `(w, F_w)` for `w` in `L_{1..m}` shortlex, then `(ω, X)`, dropping
/// repeated sets.
fn generators(shift: &Shift) -> Result<Vec<(Word, ClopenSet)>> {
    let m = shift.memory();
    let mut words: Vec<Word> = shift.language_up_to(m)?.into_iter().filter(|w| !w.is_empty()).collect();
    words.push(Vec::new());
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for w in words {
        let f = ClopenSet::follower(shift, &w)?;
        if !f.is_empty() && seen.insert(key(&f)) {
            out.push((w, f));
        }
    }
    Ok(out)
}

/// The distinct nonempty follower sets of finite subsets of the language, in
/// order of discovery.
pub fn realizable_follower_classes(shift: &Shift) -> Result<Vec<FollowerClass>> {
    realizable_follower_classes_capped(shift, DEFAULT_CLASS_CAP)
}

/// [`realizable_follower_classes`] with an explicit limit on examined
/// intersection candidates.
pub fn realizable_follower_classes_capped(shift: &Shift, cap: usize) -> Result<Vec<FollowerClass>> {
    shift.ensure_nonempty()?;
    let gens = generators(shift)?;
    let mut classes: Vec<FollowerClass> = Vec::new();
    let mut index = BTreeSet::new();
    let mut frontier = Vec::new();
    for (w, f) in &gens {
        if index.insert(key(f)) {
            frontier.push(classes.len());
            classes.push(FollowerClass { suffixes: vec![w.clone()], follower: f.clone() });
        }
    }
    let mut examined = 0usize;
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for idx in frontier {
            for (w, f) in &gens {
                examined += 1;
                if examined > cap {
                    return Err(Error::ClassExplosion { cap });
                }
                if classes[idx].suffixes.contains(w) {
                    continue;
                }
                let inter = classes[idx].follower.intersect(f)?;
                if inter.is_empty() || !index.insert(key(&inter)) {
                    continue;
                }
                let mut suffixes = classes[idx].suffixes.clone();
                suffixes.push(w.clone());
                suffixes.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
                next.push(classes.len());
                classes.push(FollowerClass { suffixes, follower: inter });
            }
        }
        frontier = next;
    }
    Ok(classes)
}

/// Every class `F_S = {γ^∞}` with its primitive period `γ`.
pub fn condition_l_failures(shift: &Shift) -> Result<Vec<(FollowerClass, Word)>> {
    let mut out = Vec::new();
    for class in realizable_follower_classes(shift)? {
        if let Some(x) = class.follower.is_singleton()? {
            if x.is_purely_periodic() {
                let gamma = x.period().to_vec();
                out.push((class, gamma));
            }
        }
    }
    Ok(out)
}

pub fn check_condition_l(shift: &Shift) -> Result<Verdict> {
    let failures = condition_l_failures(shift)?;
    Ok(match failures.into_iter().next() {
        None => Verdict::pass("condition_L", Method::Decision, None),
        Some((class, gamma)) => Verdict::fail(
            "condition_L",
            Method::Decision,
            None,
            Witness::SingletonFollower { suffixes: class.label(), gamma: shift.format_word(&gamma) },
        ),
    })
}

/// `F_B` for an arbitrary finite word set.
pub fn follower_of_set(shift: &Shift, words: &[Word]) -> Result<ClopenSet> {
    let mut f = ClopenSet::whole(shift)?;
    for w in words {
        if !shift.in_language(w) {
            return Err(Error::WordNotInLanguage(shift.format_word(w)));
        }
        f = f.intersect(&ClopenSet::follower(shift, w)?)?;
    }
    Ok(f)
}

/// `Cost(B, x)`: the least `|α| + |γ|` with `x = αy` and `βγy ∈ X` for all
/// `β ∈ B`. `None` stands for infinity.
pub fn cost(shift: &Shift, words: &[Word], point: &EvPeriodicPoint) -> Result<Option<usize>> {
    shift.ensure_point(point)?;
    let f = follower_of_set(shift, words)?;
    Ok(cost_in(shift, &f, point))
}

/// Breadth-first distances in the live graph from a set of states.
fn distances(shift: &Shift, sources: &BTreeSet<usize>) -> Vec<Option<usize>> {
    let mut dist = vec![None; shift.states().len()];
    let mut queue = VecDeque::new();
    for &s in sources {
        dist[s] = Some(0);
        queue.push_back(s);
    }
    while let Some(s) = queue.pop_front() {
        let d = dist[s].expect("queued states have a distance");
        for (_, t) in shift.successors(s) {
            if dist[t].is_none() {
                dist[t] = Some(d + 1);
                queue.push_back(t);
            }
        }
    }
    dist
}

/// Level used to split `γ` as `w·t` with `w` a word of the refined set.
fn split_level(shift: &Shift, f: &ClopenSet) -> usize {
    f.level().max(shift.memory())
}

fn source_states(shift: &Shift, f: &ClopenSet, level: usize) -> BTreeSet<usize> {
    f.refine(level).iter().map(|w| shift.state_of(w).expect("language words have states")).collect()
}

/// Least `|γ|` with `γy ∈ F`, given distances from the states of `F`'s
/// refined words.
fn min_gamma(
    shift: &Shift,
    f: &ClopenSet,
    short: &[Word],
    level: usize,
    dist: &[Option<usize>],
    y: &EvPeriodicPoint,
) -> Option<usize> {
    for gamma in short {
        let z = y.prepend(gamma);
        if shift.point_in_shift(&z) && f.words().contains(&z.take(f.level())) {
            return Some(gamma.len());
        }
    }
    (0..shift.states().len())
        .filter_map(|s| {
            let d = dist[s]?;
            shift.point_in_shift(&y.prepend(shift.state_word(s))).then_some(level + d)
        })
        .min()
}

pub(crate) fn cost_in(shift: &Shift, f: &ClopenSet, point: &EvPeriodicPoint) -> Option<usize> {
    if f.is_empty() {
        return None;
    }
    let level = split_level(shift, f);
    let short: Vec<Word> = if level == 0 {
        Vec::new()
    } else {
        shift.language_up_to(level - 1).expect("nonempty shift")
    };
    let dist = distances(shift, &source_states(shift, f, level));
    let mut best: Option<usize> = None;
    // Tails σ^k(x) repeat once k passes |u| + |v|.
    for k in 0..point.size() {
        if best.is_some_and(|b| k >= b) {
            break;
        }
        if let Some(g) = min_gamma(shift, f, &short, level, &dist, &point.drop_prefix(k)) {
            best = Some(best.map_or(k + g, |b| b.min(k + g)));
        }
    }
    best
}

/// `G_F = {y : γy ∈ F for some γ}`, the points from which `F` can be
/// reached by prefixing.
pub fn reachable_set(shift: &Shift, f: &ClopenSet) -> Result<ClopenSet> {
    let mut g = ClopenSet::empty(shift);
    if f.is_empty() {
        return Ok(g);
    }
    let level = split_level(shift, f);
    if level > 0 {
        for gamma in shift.language_up_to(level - 1)? {
            let part = f.intersect(&ClopenSet::cylinder(shift, &gamma)?)?;
            g = g.union(&action::transport(shift, &[], &gamma, &part))?;
        }
    }
    let sources: Vec<usize> = source_states(shift, f, level).into_iter().collect();
    for (s, reached) in shift.reachable_from(&sources).into_iter().enumerate() {
        if reached {
            g = g.union(&ClopenSet::follower(shift, shift.state_word(s))?)?;
        }
    }
    Ok(g)
}

/// The graph of windows that stay outside a clopen set: nodes are the
/// refined words of the complement, edges append one letter.
struct AvoidGraph {
    nodes: Vec<Word>,
    edges: Vec<Vec<(Symbol, usize)>>,
}

impl AvoidGraph {
    fn new(shift: &Shift, good: &ClopenSet) -> Result<Self> {
        let bad = good.complement()?;
        if bad.is_empty() {
            return Ok(AvoidGraph { nodes: Vec::new(), edges: Vec::new() });
        }
        let level = bad.level().max(shift.memory());
        let nodes: Vec<Word> = bad.refine(level).into_iter().collect();
        let index: BTreeMap<&[Symbol], usize> = nodes.iter().enumerate().map(|(i, w)| (&w[..], i)).collect();
        let edges = nodes
            .iter()
            .map(|w| {
                shift
                    .alphabet()
                    .symbols()
                    .filter_map(|a| {
                        let next = concat(w, &[a]);
                        if !shift.in_language(&next) {
                            return None;
                        }
                        index.get(&next[1..]).map(|&j| (a, j))
                    })
                    .collect()
            })
            .collect();
        Ok(AvoidGraph { nodes, edges })
    }

    /// A periodic point all of whose windows stay in the graph, if any.
    fn cycle_point(&self) -> Option<EvPeriodicPoint> {
        // 0 unvisited, 1 on stack, 2 done.
        let mut color = vec![0u8; self.nodes.len()];
        for root in 0..self.nodes.len() {
            if color[root] != 0 {
                continue;
            }
            let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
            let mut path_letters: Vec<Symbol> = Vec::new();
            color[root] = 1;
            while let Some(top) = stack.last_mut() {
                let v = top.0;
                if let Some(&(a, t)) = self.edges[v].get(top.1) {
                    top.1 += 1;
                    match color[t] {
                        0 => {
                            color[t] = 1;
                            path_letters.push(a);
                            stack.push((t, 0));
                        }
                        1 => {
                            let pos = stack.iter().position(|&(u, _)| u == t).expect("node on stack");
                            let mut period = path_letters[pos..].to_vec();
                            period.push(a);
                            return Some(EvPeriodicPoint::new(self.nodes[t].clone(), period));
                        }
                        _ => {}
                    }
                } else {
                    color[v] = 2;
                    stack.pop();
                    path_letters.pop();
                }
            }
        }
        None
    }

    /// Number of nodes on the longest path of an acyclic graph.
    fn longest_path(&self) -> usize {
        fn go(g: &AvoidGraph, v: usize, memo: &mut Vec<Option<usize>>) -> usize {
            if let Some(d) = memo[v] {
                return d;
            }
            let d = 1 + g.edges[v].iter().map(|&(_, t)| go(g, t, memo)).max().unwrap_or(0);
            memo[v] = Some(d);
            d
        }
        let mut memo = vec![None; self.nodes.len()];
        (0..self.nodes.len()).map(|v| go(self, v, &mut memo)).max().unwrap_or(0)
    }
}

/// A point `x` with `Cost(F, x) = ∞`, or the uniform number of shifts after
/// which every point has entered `G_F`.
fn trapped(shift: &Shift, f: &ClopenSet) -> Result<std::result::Result<usize, EvPeriodicPoint>> {
    let good = reachable_set(shift, f)?;
    let graph = AvoidGraph::new(shift, &good)?;
    match graph.cycle_point() {
        Some(x) => {
            debug_assert!(shift.point_in_shift(&x));
            debug_assert!(cost_in(shift, f, &x).is_none());
            Ok(Err(x))
        }
        None => Ok(Ok(graph.longest_path())),
    }
}

fn cofinality(shift: &Shift, classes: Vec<FollowerClass>, property: &str) -> Result<(Verdict, Vec<(FollowerClass, EvPeriodicPoint)>)> {
    let mut failures = Vec::new();
    let mut depth = 0;
    for class in classes {
        match trapped(shift, &class.follower)? {
            Ok(d) => depth = depth.max(d),
            Err(x) => failures.push((class, x)),
        }
    }
    let verdict = match failures.first() {
        None => {
            let mut v = Verdict::pass(property, Method::Decision, None);
            v.notes.push(format!("every point enters the reachable set within {depth} shifts"));
            v
        }
        Some((class, x)) => Verdict::fail(
            property,
            Method::Decision,
            None,
            Witness::TrappedPoint { suffixes: class.label(), point: x.to_literal(shift.alphabet()) },
        ),
    };
    Ok((verdict, failures))
}

/// Every realizable class together with a point of infinite cost.
pub fn hyper_cofinal_failures(shift: &Shift) -> Result<Vec<(FollowerClass, EvPeriodicPoint)>> {
    Ok(cofinality(shift, realizable_follower_classes(shift)?, "hyper_cofinal")?.1)
}

/// `sup_x Cost(B, x) < ∞` for every finite `B` with nonempty follower set.
pub fn check_hyper_cofinal(shift: &Shift) -> Result<Verdict> {
    Ok(cofinality(shift, realizable_follower_classes(shift)?, "hyper_cofinal")?.0)
}

fn single_word_classes(shift: &Shift) -> Result<Vec<FollowerClass>> {
    shift.ensure_nonempty()?;
    Ok(generators(shift)?
        .into_iter()
        .map(|(w, f)| FollowerClass { suffixes: vec![w], follower: f })
        .collect())
}

/// Every single-word class together with a point of infinite cost.
pub fn strongly_cofinal_failures(shift: &Shift) -> Result<Vec<(FollowerClass, EvPeriodicPoint)>> {
    Ok(cofinality(shift, single_word_classes(shift)?, "strongly_cofinal")?.1)
}

/// `sup_x Cost({β}, x) < ∞` for every word `β` of the language.
pub fn check_strongly_cofinal(shift: &Shift) -> Result<Verdict> {
    Ok(cofinality(shift, single_word_classes(shift)?, "strongly_cofinal")?.0)
}

/// Bounded check that every point has finite cost: all classes and all
/// points with `|u| + |v| ≤ bound`. Pairs `α, γ` are searched up to
/// `|α| + |γ| ≤ bound`; a point missed by the search only fails when its exact
/// cost is infinite.
pub fn check_collectively_cofinal_bounded(shift: &Shift, bound: usize) -> Result<Verdict> {
    let classes = realizable_follower_classes(shift)?;
    let points = oracle::bounded_points(shift, bound);
    let mut beyond = 0;
    for class in &classes {
        for x in &points {
            if oracle::brute_force_cost(shift, class.suffixes(), x, bound).is_some() {
                continue;
            }
            if cost_in(shift, class.follower(), x).is_some() {
                beyond += 1;
                continue;
            }
            return Ok(Verdict::fail(
                "collectively_cofinal",
                Method::Decision,
                Some(bound),
                Witness::TrappedPoint { suffixes: class.label(), point: x.to_literal(shift.alphabet()) },
            ));
        }
    }
    let mut v = Verdict::pass("collectively_cofinal", Method::Decision, Some(bound));
    if beyond > 0 {
        v.notes.push(format!("{beyond} (class, point) pairs need |α| + |γ| > {bound}"));
    }
    Ok(v)
}

/// Minimality of the partial action, which for finite alphabets is
/// hyper-cofinality.
pub fn is_minimal(shift: &Shift) -> Result<Verdict> {
    let mut v = check_hyper_cofinal(shift)?;
    v.property = "minimal".into();
    Ok(v)
}

/// Simplicity of the algebra over a field: condition (L) and minimality.
pub fn simplicity_verdict(shift: &Shift, ring: Ring) -> Result<Verdict> {
    shift.ensure_nonempty()?;
    if !ring.is_field() {
        return Err(Error::RingNotField(ring.name()));
    }
    let l = check_condition_l(shift)?;
    let minimal = is_minimal(shift)?;
    let failed: Vec<Verdict> = [l, minimal].into_iter().filter(|v| !v.holds).collect();
    let mut v = if failed.is_empty() {
        Verdict::pass("simple", Method::Decision, None)
    } else {
        let names = failed.iter().map(|v| v.property.clone()).collect();
        Verdict::fail("simple", Method::Decision, None, Witness::Failed { failed: names, details: failed })
    };
    v.notes.push(format!("coefficients in {}", ring.name()));
    v.notes.push("the same criterion decides simplicity of the associated C*-algebra".into());
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shift::ShiftSpec;

    fn shift(alphabet: &[&str], forbidden: &[&str]) -> Shift {
        Shift::build(ShiftSpec::from_strs(alphabet, forbidden).unwrap())
    }

    fn pt(s: &Shift, u: &str, v: &str) -> EvPeriodicPoint {
        EvPeriodicPoint::new(s.parse_word(u).unwrap(), s.parse_word(v).unwrap())
    }

    fn words(s: &Shift, ws: &[&str]) -> Vec<Word> {
        ws.iter().map(|w| s.parse_word(w).unwrap()).collect()
    }

    #[test]
    fn classes() {
        let gm = shift(&["0", "1"], &["11"]);
        let cls = realizable_follower_classes(&gm).unwrap();
        assert_eq!(cls.len(), 2);
        assert!(cls[0].follower().is_whole());
        assert_eq!(cls[0].label(), vec!["0"]);
        assert_eq!(cls[1].label(), vec!["1"]);

        let full = shift(&["0", "1"], &[]);
        assert_eq!(realizable_follower_classes(&full).unwrap().len(), 1);

        let ten = shift(&["0", "1"], &["10"]);
        let cls = realizable_follower_classes(&ten).unwrap();
        assert!(cls.iter().any(|c| c.follower().is_singleton().unwrap() == Some(pt(&ten, "", "1"))));
        assert!(matches!(realizable_follower_classes_capped(&ten, 1), Err(Error::ClassExplosion { cap: 1 })));
    }

    #[test]
    fn condition_l_examples() {
        assert!(check_condition_l(&shift(&["0", "1"], &[])).unwrap().holds);
        assert!(check_condition_l(&shift(&["0", "1"], &["11"])).unwrap().holds);
        let one = check_condition_l(&shift(&["a"], &[])).unwrap();
        assert_eq!(one.witness, Some(Witness::SingletonFollower { suffixes: vec!["a".into()], gamma: "a".into() }));
        let ten = check_condition_l(&shift(&["0", "1"], &["10"])).unwrap();
        assert_eq!(ten.witness, Some(Witness::SingletonFollower { suffixes: vec!["1".into()], gamma: "1".into() }));
    }

    #[test]
    fn cost_examples() {
        let full = shift(&["0", "1"], &[]);
        assert_eq!(cost(&full, &words(&full, &["1"]), &pt(&full, "", "0")).unwrap(), Some(0));
        let gm = shift(&["0", "1"], &["11"]);
        assert_eq!(cost(&gm, &words(&gm, &["1"]), &pt(&gm, "1", "0")).unwrap(), Some(1));
        assert_eq!(cost(&gm, &words(&gm, &["1"]), &pt(&gm, "", "0")).unwrap(), Some(0));
        let ten = shift(&["0", "1"], &["10"]);
        assert_eq!(cost(&ten, &words(&ten, &["1"]), &pt(&ten, "", "0")).unwrap(), None);
        assert!(matches!(cost(&gm, &words(&gm, &["11"]), &pt(&gm, "", "0")), Err(Error::WordNotInLanguage(_))));
        assert!(matches!(cost(&gm, &[], &pt(&gm, "", "1")), Err(Error::PointNotInShift(_))));
    }

    #[test]
    fn cofinality_examples() {
        let full = shift(&["0", "1"], &[]);
        let gm = shift(&["0", "1"], &["11"]);
        let ten = shift(&["0", "1"], &["10"]);
        for s in [&full, &gm] {
            assert!(check_hyper_cofinal(s).unwrap().holds);
            assert!(check_strongly_cofinal(s).unwrap().holds);
            assert!(check_collectively_cofinal_bounded(s, 3).unwrap().holds);
        }
        let v = check_hyper_cofinal(&ten).unwrap();
        assert_eq!(v.witness, Some(Witness::TrappedPoint { suffixes: vec!["1".into()], point: "|0".into() }));
        assert!(!check_strongly_cofinal(&ten).unwrap().holds);
        assert!(!check_collectively_cofinal_bounded(&ten, 3).unwrap().holds);
        assert!(is_minimal(&shift(&["a"], &[])).unwrap().holds);
    }

    #[test]
    fn simplicity_examples() {
        assert!(simplicity_verdict(&shift(&["0", "1"], &[]), Ring::Rationals).unwrap().holds);
        assert!(simplicity_verdict(&shift(&["0", "1"], &["11"]), Ring::IntegersMod(2)).unwrap().holds);
        let v = simplicity_verdict(&shift(&["0", "1"], &["10"]), Ring::Rationals).unwrap();
        match v.witness {
            Some(Witness::Failed { failed, .. }) => assert_eq!(failed, vec!["condition_L", "minimal"]),
            other => panic!("unexpected witness {other:?}"),
        }
        let v = simplicity_verdict(&shift(&["a"], &[]), Ring::Rationals).unwrap();
        assert!(!v.holds);
        assert!(matches!(simplicity_verdict(&shift(&["0"], &[]), Ring::Integers), Err(Error::RingNotField(_))));
    }
}
