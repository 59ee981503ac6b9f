//! Exact follower and predecessor classification for finite presentations.
//!
//! Words are tracked through the subset construction: the terminal set of a
//! word is the set of states reached by paths carrying it. On an essential
//! graph two words have the same follower set exactly when the finite path
//! languages out of their terminal sets coincide, which is decided by a
//! product search over the determinized machine. Predecessor sets run the
//! same machinery on the edge-reversed graph.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use crate::alphabet::{Alphabet, Letter, Word};
use crate::error::{Error, Result};
use crate::graph::LabeledGraph;
use crate::language::Language;
use crate::table::{ClassTable, Side};

/// Sorted, duplicate-free set of state indices.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StateSet(Vec<usize>);

impl StateSet {
    pub fn empty() -> Self {
        StateSet(Vec::new())
    }

    pub fn from_states(states: impl IntoIterator<Item = usize>) -> Self {
        let mut v: Vec<usize> = states.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        StateSet(v)
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn states(&self) -> &[usize] {
        &self.0
    }

    pub fn union(&self, other: &StateSet) -> StateSet {
        StateSet::from_states(self.0.iter().chain(&other.0).copied())
    }
}

/// An essential labeled graph with its successor tables, viewed as the
/// presentation of a sofic shift.
#[derive(Debug, Clone)]
pub struct SoficShift {
    graph: LabeledGraph,
    name: String,
    // successors[state][letter] = sorted targets
    successors: Vec<Vec<Vec<usize>>>,
}

impl SoficShift {
    /// Essentializes `graph` and indexes it.
    pub fn new(graph: &LabeledGraph) -> Result<Self> {
        Self::named(graph, "graph")
    }

    pub fn named(graph: &LabeledGraph, name: &str) -> Result<Self> {
        let graph = graph.essentialize()?;
        let k = graph.alphabet().len();
        let mut successors = vec![vec![Vec::new(); k]; graph.state_count()];
        for e in graph.edges() {
            successors[e.source][e.label.index()].push(e.target);
        }
        Ok(SoficShift {
            graph,
            name: name.to_string(),
            successors,
        })
    }

    pub fn graph(&self) -> &LabeledGraph {
        &self.graph
    }

    /// The presentation of the reversed shift; its terminal sets are the
    /// initial sets of reversed words here.
    pub fn reversed(&self) -> SoficShift {
        SoficShift::named(&self.graph.reversed(), &format!("{}-reversed", self.name))
            .expect("reversal of an essential graph is essential")
    }

    pub fn full_set(&self) -> StateSet {
        StateSet((0..self.graph.state_count()).collect())
    }

    /// States reachable from `set` by one edge labeled `a`.
    pub fn transition(&self, set: &StateSet, a: Letter) -> StateSet {
        StateSet::from_states(
            set.0
                .iter()
                .flat_map(|&p| self.successors[p][a.index()].iter().copied()),
        )
    }

    /// Terminal set of `w` starting from every state; empty iff `w` is not in the language.
    pub fn terminal_set(&self, w: &[Letter]) -> StateSet {
        let mut s = self.full_set();
        for &a in w {
            if s.is_empty() {
                break;
            }
            s = self.transition(&s, a);
        }
        s
    }

    /// Every word of length `n` with a nonempty terminal set, mapped to that set.
    pub fn terminal_sets(&self, n: usize) -> BTreeMap<Word, StateSet> {
        let mut frontier = vec![(Word::empty(), self.full_set())];
        for _ in 0..n {
            let mut next = Vec::new();
            for (w, s) in &frontier {
                for a in self.graph.alphabet().letters() {
                    let t = self.transition(s, a);
                    if !t.is_empty() {
                        next.push((w.pushed(a), t));
                    }
                }
            }
            frontier = next;
        }
        frontier.into_iter().collect()
    }

    /// Whether the finite path-label languages out of `s1` and `s2` coincide.
    ///
    /// Walks pairs of subsets reachable from `(s1, s2)` under the same word;
    /// every nonempty subset accepts and the empty subset is a rejecting sink,
    /// so the languages differ iff some pair has exactly one empty side.
    pub fn languages_equal(&self, s1: &StateSet, s2: &StateSet) -> bool {
        if s1 == s2 {
            return true;
        }
        let mut seen: HashSet<(StateSet, StateSet)> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert((s1.clone(), s2.clone()));
        queue.push_back((s1.clone(), s2.clone()));
        while let Some((p, q)) = queue.pop_front() {
            if p.is_empty() != q.is_empty() {
                return false;
            }
            if p.is_empty() || p == q {
                continue;
            }
            for a in self.graph.alphabet().letters() {
                let pair = (self.transition(&p, a), self.transition(&q, a));
                if seen.insert(pair.clone()) {
                    queue.push_back(pair);
                }
            }
        }
        true
    }

    /// Exact partition of the length-`n` words by follower or predecessor set.
    pub fn class_table(&self, n: usize, side: Side) -> Result<ClassTable<StateSet>> {
        match side {
            Side::Follower => {
                let mut classes = FollowerClasses::new(self);
                Ok(classes.table(n, Side::Follower))
            }
            Side::Predecessor => {
                let rev = self.reversed();
                let mut classes = FollowerClasses::new(&rev);
                let sets = rev.terminal_sets(n);
                let entries = sets.into_iter().map(|(w, s)| (w.reversed(), s));
                Ok(ClassTable::build(n, Side::Predecessor, entries, |a, b| {
                    classes.same(a, b)
                }))
            }
            Side::Extender => Err(Error::ExtenderNotExact),
        }
    }

    /// Number of distinct follower sets among all words of length at most `n`,
    /// the empty word included.
    pub fn cumulative_follower_count(&self, n: usize) -> usize {
        let mut classes = FollowerClasses::new(self);
        let mut ids = HashSet::new();
        for len in 0..=n {
            for s in self.terminal_sets(len).values() {
                ids.insert(classes.id(s));
            }
        }
        ids.len()
    }

    /// Whether every follower set of a length-`n` word is already the follower
    /// set of some word of length below `n` (the empty word counts).
    pub fn unions_criterion(&self, n: usize) -> bool {
        let mut classes = FollowerClasses::new(self);
        let mut shorter = HashSet::new();
        for len in 0..n {
            for s in self.terminal_sets(len).values() {
                shorter.insert(classes.id(s));
            }
        }
        self.terminal_sets(n)
            .values()
            .all(|s| shorter.contains(&classes.id(s)))
    }

    /// Nonempty words of length at most `n` whose follower set equals that of
    /// the empty word.
    pub fn empty_word_twins(&self, n: usize) -> Vec<Word> {
        let mut classes = FollowerClasses::new(self);
        let root = classes.id(&self.full_set());
        (1..=n)
            .flat_map(|len| self.terminal_sets(len))
            .filter(|(_, s)| classes.id(s) == root)
            .map(|(w, _)| w)
            .collect()
    }

    /// The deterministic machine of all follower sets of finite words.
    pub fn follower_automaton(&self) -> Result<FollowerAutomaton> {
        self.follower_automaton_with_budget(DEFAULT_NODE_BUDGET)
    }

    pub fn follower_automaton_with_budget(&self, budget: usize) -> Result<FollowerAutomaton> {
        let mut classes = FollowerClasses::new(self);
        let mut nodes: Vec<(Word, StateSet)> = Vec::new();
        let mut node_of_class: HashMap<usize, usize> = HashMap::new();
        let mut transitions = BTreeMap::new();
        let mut queue = VecDeque::new();

        let root = self.full_set();
        node_of_class.insert(classes.id(&root), 0);
        nodes.push((Word::empty(), root));
        queue.push_back(0usize);

        while let Some(node) = queue.pop_front() {
            let (word, set) = nodes[node].clone();
            for a in self.graph.alphabet().letters() {
                let image = self.transition(&set, a);
                if image.is_empty() {
                    continue;
                }
                let class = classes.id(&image);
                let target = match node_of_class.get(&class) {
                    Some(&t) => t,
                    None => {
                        if nodes.len() >= budget {
                            return Err(Error::Budget {
                                what: "follower automaton nodes",
                                requested: nodes.len() as u128 + 1,
                                limit: budget as u128,
                            });
                        }
                        nodes.push((word.pushed(a), image));
                        node_of_class.insert(class, nodes.len() - 1);
                        queue.push_back(nodes.len() - 1);
                        nodes.len() - 1
                    }
                };
                transitions.insert((node, a), target);
            }
        }

        Ok(FollowerAutomaton {
            alphabet: self.graph.alphabet().clone(),
            nodes,
            transitions,
        })
    }
}

pub const DEFAULT_NODE_BUDGET: usize = 100_000;

impl Language for SoficShift {
    fn alphabet(&self) -> &Alphabet {
        self.graph.alphabet()
    }

    fn contains(&self, word: &[Letter]) -> Result<bool> {
        Ok(!self.terminal_set(word).is_empty())
    }

    fn name(&self) -> String {
        self.name.clone()
    }
}

/// Memoized follower-class ids for state sets of one presentation.
struct FollowerClasses<'a> {
    shift: &'a SoficShift,
    reps: Vec<StateSet>,
    ids: HashMap<StateSet, usize>,
}

impl<'a> FollowerClasses<'a> {
    fn new(shift: &'a SoficShift) -> Self {
        FollowerClasses {
            shift,
            reps: Vec::new(),
            ids: HashMap::new(),
        }
    }

    fn id(&mut self, s: &StateSet) -> usize {
        if let Some(&id) = self.ids.get(s) {
            return id;
        }
        let id = match self.reps.iter().position(|r| self.shift.languages_equal(r, s)) {
            Some(id) => id,
            None => {
                self.reps.push(s.clone());
                self.reps.len() - 1
            }
        };
        self.ids.insert(s.clone(), id);
        id
    }

    fn same(&mut self, a: &StateSet, b: &StateSet) -> bool {
        self.id(a) == self.id(b)
    }

    fn table(&mut self, n: usize, side: Side) -> ClassTable<StateSet> {
        let sets = self.shift.terminal_sets(n);
        ClassTable::build(n, side, sets, |a, b| self.same(a, b))
    }
}

/// Nodes are the distinct follower sets of finite words; node 0 is the empty
/// word's. Each node keeps the least word (in discovery order) reaching it.
#[derive(Debug, Clone)]
pub struct FollowerAutomaton {
    alphabet: Alphabet,
    nodes: Vec<(Word, StateSet)>,
    transitions: BTreeMap<(usize, Letter), usize>,
}

impl FollowerAutomaton {
    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn initial(&self) -> usize {
        0
    }

    pub fn representative(&self, node: usize) -> (&Word, &StateSet) {
        let (w, s) = &self.nodes[node];
        (w, s)
    }

    pub fn step(&self, node: usize, a: Letter) -> Option<usize> {
        self.transitions.get(&(node, a)).copied()
    }

    /// Node of the follower set of `w`, or `None` if `w` is not in the language.
    pub fn run(&self, w: &[Letter]) -> Option<usize> {
        w.iter().try_fold(self.initial(), |node, &a| self.step(node, a))
    }

    pub fn transitions(&self) -> impl Iterator<Item = (usize, Letter, usize)> + '_ {
        self.transitions.iter().map(|(&(p, a), &q)| (p, a, q))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }
}
