//! Pushdown automata accepting the word problem of a demonstrative subgroup.
//!
//! The automaton keeps the address of the image of the demonstration node
//! on its stack. Every input letter rewrites the top of the stack by the
//! letter's prefix replacement, and the automaton sits in `qa` exactly when
//! the stack is back to `node#`, i.e. when the word read so far fixes the
//! node and therefore is the identity.
//!
//! Three states are used: `q0` loads `node#` and moves to `qa` without
//! reading input; `qa` is the only accepting state; `qr` is the reading
//! state for non-identity prefixes.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::cantor::{BinaryWord, Bit};
use crate::modular::{GenSymbol, GeneratorMap, GroupWord, WordError};
use crate::prm::PrmError;

/// Default input length explored by the shallow-stack audit.
pub const DEFAULT_AUDIT_LEN: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PdaError {
    #[error("generator {generator} cannot be applied to stack {address}#: no domain word is a prefix of it (node too shallow)")]
    ShallowNode { generator: String, address: BinaryWord },
    #[error("generator {generator} maps node {node} to the comparable address {image}; it does not move the node")]
    NodeNotMoved { generator: String, node: BinaryWord, image: BinaryWord },
    #[error("determinization exceeded pop depth {bound}")]
    NonTerminatingRefinement { bound: usize },
    #[error("token {0} is not in the input alphabet")]
    UnknownToken(String),
    #[error("malformed automaton: {0}")]
    Malformed(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Word(#[from] WordError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum State {
    Start,
    Accept,
    Read,
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            State::Start => "q0",
            State::Accept => "qa",
            State::Read => "qr",
        })
    }
}

impl FromStr for State {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "q0" => Ok(State::Start),
            "qa" => Ok(State::Accept),
            "qr" => Ok(State::Read),
            other => Err(format!("unknown state {other:?}")),
        }
    }
}

/// Stack alphabet `{0, 1, #}`; `#` marks the bottom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StackSymbol {
    Zero,
    One,
    Bottom,
}

impl From<Bit> for StackSymbol {
    fn from(bit: Bit) -> Self {
        match bit {
            Bit::Zero => StackSymbol::Zero,
            Bit::One => StackSymbol::One,
        }
    }
}

/// A string over the stack alphabet, leftmost symbol on top.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StackString(Vec<StackSymbol>);

impl StackString {
    pub fn empty() -> Self {
        StackString(Vec::new())
    }

    pub fn address(word: &BinaryWord) -> Self {
        StackString(word.bits().iter().map(|&b| b.into()).collect())
    }

    /// `word#`.
    pub fn bottomed(word: &BinaryWord) -> Self {
        let mut s = Self::address(word);
        s.0.push(StackSymbol::Bottom);
        s
    }

    pub fn symbols(&self) -> &[StackSymbol] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_prefix_of(&self, other: &StackString) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn ends_with_bottom(&self) -> bool {
        self.0.last() == Some(&StackSymbol::Bottom)
    }

    /// The binary address above `#`, if the string is `w#` or `w`.
    pub fn to_address(&self) -> Option<BinaryWord> {
        let body = self.0.strip_suffix(&[StackSymbol::Bottom]).unwrap_or(&self.0);
        body.iter()
            .map(|s| match s {
                StackSymbol::Zero => Some(Bit::Zero),
                StackSymbol::One => Some(Bit::One),
                StackSymbol::Bottom => None,
            })
            .collect::<Option<Vec<_>>>()
            .map(BinaryWord::from_bits)
    }

    fn push_symbol(&self, symbol: StackSymbol) -> StackString {
        let mut s = self.clone();
        s.0.push(symbol);
        s
    }

    /// Replaces the prefix `pop` (which must match) with `push`.
    fn rewrite(&self, pop: &StackString, push: &StackString) -> StackString {
        let mut out = push.0.clone();
        out.extend_from_slice(&self.0[pop.len()..]);
        StackString(out)
    }
}

impl fmt::Display for StackString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        for s in &self.0 {
            f.write_str(match s {
                StackSymbol::Zero => "0",
                StackSymbol::One => "1",
                StackSymbol::Bottom => "#",
            })?;
        }
        Ok(())
    }
}

impl FromStr for StackString {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "-" {
            return Ok(StackString::empty());
        }
        s.chars()
            .map(|c| match c {
                '0' => Ok(StackSymbol::Zero),
                '1' => Ok(StackSymbol::One),
                '#' => Ok(StackSymbol::Bottom),
                other => Err(format!("invalid stack symbol {other:?}")),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(StackString)
    }
}

/// `(from, input, pop, push, to)`; `input == None` is an ε-move.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Transition {
    pub from: State,
    pub input: Option<GenSymbol>,
    pub pop: StackString,
    pub push: StackString,
    pub to: State,
}

impl Transition {
    fn applies(&self, config: &Configuration, input: Option<&GenSymbol>) -> bool {
        self.from == config.state && self.input.as_ref() == input && self.pop.is_prefix_of(&config.stack)
    }
}

impl fmt::Display for Transition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let input = self.input.as_ref().map_or_else(|| "eps".to_string(), GenSymbol::token);
        write!(f, "{}\t{}\t{}\t{}\t{}", self.from, input, self.pop, self.push, self.to)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Configuration {
    pub state: State,
    pub stack: StackString,
    pub position: usize,
}

/// A word-problem automaton over the fixed states `{q0, qa, qr}` and stack
/// alphabet `{0, 1, #}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pda {
    node: BinaryWord,
    input_alphabet: Vec<GenSymbol>,
    transitions: Vec<Transition>,
}

impl Pda {
    pub fn new(
        node: BinaryWord,
        input_alphabet: Vec<GenSymbol>,
        transitions: Vec<Transition>,
    ) -> Result<Self, PdaError> {
        let malformed = |msg: String| Err(PdaError::Malformed(msg));
        let mut seen = HashSet::new();
        for token in &input_alphabet {
            if !seen.insert(token) {
                return malformed(format!("token {} listed twice", token.token()));
            }
        }
        let loading: Vec<&Transition> = transitions.iter().filter(|t| t.from == State::Start).collect();
        match loading.as_slice() {
            [t] if t.input.is_none() && t.pop.is_empty() && t.to == State::Accept => {
                if t.push != StackString::bottomed(&node) {
                    return malformed(format!("loading transition pushes {}, expected {}#", t.push, node));
                }
            }
            _ => return malformed("q0 must have exactly one transition: (q0, eps, -, node#, qa)".into()),
        }
        for t in &transitions {
            if t.to == State::Start {
                return malformed(format!("transition into q0: {t}"));
            }
            match &t.input {
                None if t.from != State::Start => return malformed(format!("eps move outside q0: {t}")),
                Some(token) if !input_alphabet.contains(token) => {
                    return Err(PdaError::UnknownToken(token.token()));
                }
                _ => {}
            }
            if t.from == State::Start {
                continue;
            }
            let bottom_ok = |s: &StackString| !s.0[..s.len().saturating_sub(1)].contains(&StackSymbol::Bottom);
            if !bottom_ok(&t.pop) || !bottom_ok(&t.push) || t.pop.ends_with_bottom() != t.push.ends_with_bottom() {
                return malformed(format!("# must end both pop and push or neither: {t}"));
            }
        }
        Ok(Pda { node, input_alphabet, transitions })
    }

    pub fn node(&self) -> &BinaryWord {
        &self.node
    }

    pub fn input_alphabet(&self) -> &[GenSymbol] {
        &self.input_alphabet
    }

    pub fn transitions(&self) -> &[Transition] {
        &self.transitions
    }

    fn initial(&self) -> Configuration {
        Configuration { state: State::Start, stack: StackString::empty(), position: 0 }
    }

    fn successors<'a>(
        &'a self,
        config: &'a Configuration,
        input: Option<&'a GenSymbol>,
    ) -> impl Iterator<Item = Configuration> + 'a {
        let position = config.position + usize::from(input.is_some());
        self.transitions.iter().filter(move |t| t.applies(config, input)).map(move |t| Configuration {
            state: t.to,
            stack: config.stack.rewrite(&t.pop, &t.push),
            position,
        })
    }

    fn check_tokens(&self, word: &[GenSymbol]) -> Result<(), PdaError> {
        match word.iter().find(|t| !self.input_alphabet.contains(t)) {
            Some(t) => Err(PdaError::UnknownToken(t.token())),
            None => Ok(()),
        }
    }

    /// Breadth-first exploration of every legal path. Returns, for each
    /// input position, the distinct configurations reached there (after
    /// ε-moves), each with a back pointer into the previous layer.
    fn explore(&self, word: &[GenSymbol]) -> Vec<Vec<(Configuration, Option<usize>)>> {
        let mut layers: Vec<Vec<(Configuration, Option<usize>)>> = Vec::with_capacity(word.len() + 1);
        let mut seeds = vec![(self.initial(), None)];
        for position in 0..=word.len() {
            let mut layer: Vec<(Configuration, Option<usize>)> = Vec::new();
            let mut index: HashMap<Configuration, usize> = HashMap::new();
            let mut queue: VecDeque<(Configuration, Option<usize>)> = seeds.into();
            // ε-closure; a parent pointer inside the layer is encoded as an
            // index offset past the previous layer's length.
            while let Some((config, parent)) = queue.pop_front() {
                if index.contains_key(&config) {
                    continue;
                }
                index.insert(config.clone(), layer.len());
                let here = layer.len();
                layer.push((config, parent));
                let config = &layer[here].0;
                for next in self.successors(config, None) {
                    queue.push_back((next, Some(EPS_BIT | here)));
                }
            }
            seeds = match word.get(position) {
                Some(token) => layer
                    .iter()
                    .enumerate()
                    .flat_map(|(i, (config, _))| self.successors(config, Some(token)).map(move |c| (c, Some(i))))
                    .collect(),
                None => Vec::new(),
            };
            layers.push(layer);
        }
        layers
    }

    /// Distinct configurations reachable after each prefix of `word`.
    pub fn reachable_configurations(&self, word: &[GenSymbol]) -> Result<Vec<Vec<Configuration>>, PdaError> {
        self.check_tokens(word)?;
        Ok(self.explore(word).into_iter().map(|layer| layer.into_iter().map(|(c, _)| c).collect()).collect())
    }

    /// Accepts iff some path consumes the whole word and ends in `qa`.
    pub fn run(&self, word: &[GenSymbol]) -> Result<RunOutcome, PdaError> {
        self.check_tokens(word)?;
        let layers = self.explore(word);
        let last = layers.last().expect("at least one layer");
        let Some(end) = last.iter().position(|(c, _)| c.state == State::Accept) else {
            return Ok(RunOutcome { accepted: false, path: None });
        };
        let mut path = Vec::new();
        let (mut layer, mut idx) = (layers.len() - 1, end);
        loop {
            let (config, parent) = &layers[layer][idx];
            path.push(config.clone());
            match parent {
                None => break,
                Some(p) if p & EPS_BIT != 0 => idx = p & !EPS_BIT,
                Some(p) => {
                    layer -= 1;
                    idx = *p;
                }
            }
        }
        path.reverse();
        Ok(RunOutcome { accepted: true, path: Some(path) })
    }

    /// Every configuration reachable by some input of length at most
    /// `max_len`, ignoring positions.
    pub fn reachable_within(&self, max_len: usize) -> Vec<Configuration> {
        let normalize = |mut c: Configuration| {
            c.position = 0;
            c
        };
        let mut seen: HashSet<Configuration> = HashSet::new();
        let mut frontier = Vec::new();
        let start = self.initial();
        let mut closure = vec![start];
        while let Some(c) = closure.pop() {
            if seen.insert(c.clone()) {
                closure.extend(self.successors(&c, None).map(normalize));
                frontier.push(c);
            }
        }
        for _ in 0..max_len {
            let mut next = Vec::new();
            for config in &frontier {
                for token in &self.input_alphabet {
                    let mut todo: Vec<Configuration> = self.successors(config, Some(token)).map(normalize).collect();
                    while let Some(c) = todo.pop() {
                        if seen.insert(c.clone()) {
                            todo.extend(self.successors(&c, None).map(normalize));
                            next.push(c);
                        }
                    }
                }
            }
            frontier = next;
        }
        let mut all: Vec<Configuration> = seen.into_iter().collect();
        all.sort_by(|x, y| (x.state, &x.stack).cmp(&(y.state, &y.stack)));
        all
    }

    /// Reachable configurations (inputs up to `max_len`) from which some
    /// token has more than one applicable transition.
    pub fn nondeterminism_audit(&self, max_len: usize) -> Vec<(Configuration, GenSymbol, usize)> {
        let mut out = Vec::new();
        for config in self.reachable_within(max_len) {
            for token in &self.input_alphabet {
                let n = self.transitions.iter().filter(|t| t.applies(&config, Some(token))).count();
                if n > 1 {
                    out.push((config.clone(), token.clone(), n));
                }
            }
        }
        out
    }
}

const EPS_BIT: usize = 1 << (usize::BITS - 1);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunOutcome {
    pub accepted: bool,
    /// One accepting path, from the initial configuration.
    pub path: Option<Vec<Configuration>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildOptions {
    /// Replace the node by `node·0` and retry when a stack is too shallow.
    pub deepen: bool,
    pub audit_len: usize,
    pub max_deepen: usize,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions { deepen: false, audit_len: DEFAULT_AUDIT_LEN, max_deepen: 16 }
    }
}

/// Builds the word-problem automaton with default options (no deepening).
pub fn build_word_problem_pda(generators: &GeneratorMap, node: &BinaryWord) -> Result<Pda, PdaError> {
    build_with_options(generators, node, BuildOptions::default())
}

pub fn build_with_options(
    generators: &GeneratorMap,
    node: &BinaryWord,
    options: BuildOptions,
) -> Result<Pda, PdaError> {
    let mut node = node.clone();
    let mut attempts = 0;
    loop {
        let result = build_at(generators, &node).and_then(|pda| {
            shallow_stack_audit(&pda, generators, options.audit_len)?;
            Ok(pda)
        });
        match result {
            Err(PdaError::ShallowNode { .. }) if options.deepen && attempts < options.max_deepen => {
                attempts += 1;
                node = node.child(Bit::Zero);
            }
            other => return other,
        }
    }
}

fn build_at(generators: &GeneratorMap, node: &BinaryWord) -> Result<Pda, PdaError> {
    let alphabet = generators.input_alphabet();
    let node_stack = StackString::address(node);
    let node_bottomed = StackString::bottomed(node);

    let mut transitions = vec![Transition {
        from: State::Start,
        input: None,
        pop: StackString::empty(),
        push: node_bottomed.clone(),
        to: State::Accept,
    }];
    let mut to_accept = Vec::new();
    let mut reading = Vec::new();

    for token in &alphabet {
        let element = generators.element(token)?;
        let image = element.apply_to_word(node).map_err(|e| match e {
            PrmError::InsufficientDepth(address) => PdaError::ShallowNode { generator: token.token(), address },
            other => PdaError::Malformed(other.to_string()),
        })?;
        if image.is_comparable(node) {
            return Err(PdaError::NodeNotMoved { generator: token.token(), node: node.clone(), image });
        }
        transitions.push(Transition {
            from: State::Accept,
            input: Some(token.clone()),
            pop: node_stack.clone(),
            push: StackString::address(&image),
            to: State::Read,
        });
        for (d, r) in element.pairs() {
            if let Some(rest) = node.strip_prefix(r) {
                to_accept.push(Transition {
                    from: State::Read,
                    input: Some(token.clone()),
                    pop: StackString::bottomed(&d.concat(&rest)),
                    push: node_bottomed.clone(),
                    to: State::Accept,
                });
            }
            reading.push(Transition {
                from: State::Read,
                input: Some(token.clone()),
                pop: StackString::address(d),
                push: StackString::address(r),
                to: State::Read,
            });
        }
    }
    transitions.extend(to_accept);
    transitions.extend(reading);
    Pda::new(node.clone(), alphabet, canonical_order(transitions))
}

/// Loading row, then `qa` rows, then `qr → qa` rows, then `qr → qr` rows;
/// within each block by token (generators then inverses), and `qr → qr`
/// rows by pop string.
fn canonical_order(transitions: Vec<Transition>) -> Vec<Transition> {
    let block = |t: &Transition| match (t.from, t.to) {
        (State::Start, _) => 0,
        (State::Accept, _) => 1,
        (State::Read, State::Accept) => 2,
        _ => 3,
    };
    let token_key = |t: &Transition| t.input.as_ref().map(|s| (s.is_inverted(), s.name().to_string()));
    let mut transitions = transitions;
    transitions.sort_by(|x, y| {
        let kx = (block(x), token_key(x));
        let ky = (block(y), token_key(y));
        kx.cmp(&ky).then_with(|| if block(x) == 3 { x.pop.cmp(&y.pop) } else { std::cmp::Ordering::Equal })
    });
    transitions
}

/// Walks every configuration reachable on inputs of length `≤ audit_len`
/// and fails if some `qr` stack is too short for a token's replacement.
fn shallow_stack_audit(pda: &Pda, generators: &GeneratorMap, audit_len: usize) -> Result<(), PdaError> {
    for config in pda.reachable_within(audit_len) {
        if config.state != State::Read {
            continue;
        }
        let address = config.stack.to_address().expect("stack is an address over #");
        for token in pda.input_alphabet() {
            if let Err(PrmError::InsufficientDepth(address)) = generators.element(token)?.apply_to_word(&address) {
                return Err(PdaError::ShallowNode { generator: token.token(), address });
            }
        }
    }
    Ok(())
}

/// Splits every `qr → qr` row whose pop is a prefix of the address part of
/// a same-token `qr → qa` pop into its two one-symbol extensions, until no
/// such overlap remains. The accepted language is unchanged.
pub fn determinize_against_accept(pda: &Pda) -> Result<Pda, PdaError> {
    let reading_rows = || pda.transitions.iter().filter(|t| t.from == State::Read && t.to == State::Read);
    let longest = reading_rows().map(|t| t.pop.len().max(t.push.len())).max().unwrap_or(0);
    let bound = pda.node.len() + 2 * longest + 8;

    let accept_pops: Vec<(GenSymbol, StackString)> = pda
        .transitions
        .iter()
        .filter(|t| t.from == State::Read && t.to == State::Accept)
        .filter_map(|t| {
            let token = t.input.clone()?;
            let mut address = t.pop.clone();
            address.0.pop();
            Some((token, address))
        })
        .collect();
    let conflicts = |t: &Transition| {
        accept_pops.iter().any(|(token, address)| t.input.as_ref() == Some(token) && t.pop.is_prefix_of(address))
    };

    let mut out: Vec<Transition> =
        pda.transitions.iter().filter(|t| !(t.from == State::Read && t.to == State::Read)).cloned().collect();
    let mut pending: Vec<Transition> = reading_rows().cloned().collect();
    while let Some(row) = pending.pop() {
        if !conflicts(&row) {
            out.push(row);
            continue;
        }
        if row.pop.len() + 1 > bound {
            return Err(PdaError::NonTerminatingRefinement { bound });
        }
        for symbol in [StackSymbol::Zero, StackSymbol::One] {
            pending.push(Transition {
                pop: row.pop.push_symbol(symbol),
                push: row.push.push_symbol(symbol),
                ..row.clone()
            });
        }
    }
    Pda::new(pda.node.clone(), pda.input_alphabet.clone(), canonical_order(out))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub word: GroupWord,
    pub pda_accepts: bool,
    pub is_identity: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossValidation {
    pub words_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

/// Every word of length `0..=max_len` over the alphabet, by length and then
/// alphabet order.
pub fn all_words(alphabet: &[GenSymbol], max_len: usize) -> Vec<Vec<GenSymbol>> {
    let mut out = vec![Vec::new()];
    let mut layer: Vec<Vec<GenSymbol>> = vec![Vec::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|w| {
                alphabet.iter().map(move |s| {
                    let mut ext = w.clone();
                    ext.push(s.clone());
                    ext
                })
            })
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Compares the automaton's verdict with `is_identity(evaluate(w))` on
/// every word up to `max_len`.
pub fn cross_validate(pda: &Pda, generators: &GeneratorMap, max_len: usize) -> Result<CrossValidation, PdaError> {
    let words = all_words(pda.input_alphabet(), max_len);
    let mismatches: Vec<Option<Mismatch>> = words
        .par_iter()
        .map(|word| {
            let pda_accepts = pda.run(word)?.accepted;
            let word = GroupWord::new(word.clone());
            let is_identity = generators.evaluate(&word)?.is_identity();
            Ok((pda_accepts != is_identity).then_some(Mismatch { word, pda_accepts, is_identity }))
        })
        .collect::<Result<_, PdaError>>()?;
    Ok(CrossValidation { words_checked: words.len(), mismatches: mismatches.into_iter().flatten().collect() })
}

const HEADER_PREFIX: &str = "# wp-pda v1";

/// Header line plus one tab-separated row per transition.
pub fn serialize_table(pda: &Pda) -> String {
    let alphabet: Vec<String> = pda.input_alphabet.iter().map(GenSymbol::token).collect();
    let mut out = format!("{HEADER_PREFIX} node={} alphabet={}\n", pda.node, alphabet.join(","));
    for t in &pda.transitions {
        out.push_str(&t.to_string());
        out.push('\n');
    }
    out
}

pub fn parse_table(text: &str) -> Result<Pda, PdaError> {
    let err = |line: usize, message: String| PdaError::Parse { line, message };
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or_else(|| err(1, "empty table".into()))?;
    let fields = header
        .strip_prefix(HEADER_PREFIX)
        .ok_or_else(|| err(1, format!("expected header starting with {HEADER_PREFIX:?}")))?;
    let (mut node, mut alphabet) = (None, None);
    for field in fields.split_whitespace() {
        match field.split_once('=') {
            Some(("node", w)) => node = Some(w.parse::<BinaryWord>().map_err(|e| err(1, e.to_string()))?),
            Some(("alphabet", tokens)) => {
                let tokens = tokens
                    .split(',')
                    .filter(|t| !t.is_empty())
                    .map(str::parse::<GenSymbol>)
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|e| err(1, e.to_string()))?;
                alphabet = Some(tokens);
            }
            _ => return Err(err(1, format!("unexpected header field {field:?}"))),
        }
    }
    let node = node.ok_or_else(|| err(1, "header lacks node=".into()))?;
    let alphabet = alphabet.ok_or_else(|| err(1, "header lacks alphabet=".into()))?;

    let mut transitions = Vec::new();
    for (idx, line) in lines {
        let line_no = idx + 1;
        let cols: Vec<&str> = line.split('\t').map(str::trim).collect();
        let [from, input, pop, push, to] = cols[..] else {
            return Err(err(line_no, format!("expected 5 tab-separated columns, got {}", cols.len())));
        };
        let input = match input {
            "eps" => None,
            token => Some(token.parse::<GenSymbol>().map_err(|e| err(line_no, e.to_string()))?),
        };
        transitions.push(Transition {
            from: from.parse().map_err(|e| err(line_no, e))?,
            input,
            pop: pop.parse().map_err(|e| err(line_no, e))?,
            push: push.parse().map_err(|e| err(line_no, e))?,
            to: to.parse().map_err(|e| err(line_no, e))?,
        });
    }
    Pda::new(node, alphabet, transitions)
}
