"""Complete DFAs, NFAs, and the constructions connecting them.

Conventions used throughout:

* determinization keeps only subsets reachable from the initial subset,
  breadth-first with letters in alphabet order, but the empty subset (the
  Φ state), if reached, is kept as an ordinary non-final sink;
* minimization returns the canonical form: states numbered breadth-first
  from the initial state with letters in alphabet order, so isomorphic
  minimal DFAs are equal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .errors import UnknownLetterError
from .stateset import StateSet
from .transformations import Transformation, compose, identity

Word = Iterable[str]  # sequence of letter names; a plain str iterates per character


@dataclass(frozen=True)
class Dfa:
    """A complete DFA: one total transformation of {0..n-1} per letter."""

    n: int
    alphabet: tuple[str, ...]
    deltas: tuple[Transformation, ...]
    initial: int
    finals: StateSet
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("a DFA needs at least one state")
        if len(set(self.alphabet)) != len(self.alphabet) or not self.alphabet:
            raise ValueError("alphabet letters must be distinct and non-empty")
        if any(not a for a in self.alphabet):
            raise ValueError("empty letter name")
        if len(self.deltas) != len(self.alphabet):
            raise ValueError("one transformation per letter required")
        for a, t in zip(self.alphabet, self.deltas):
            if t.n != self.n:
                raise ValueError(f"transformation for {a!r} has degree {t.n}, expected {self.n}")
        if not 0 <= self.initial < self.n:
            raise ValueError(f"initial state {self.initial} out of range")
        if self.finals.n != self.n:
            raise ValueError("final-state set universe does not match state count")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError("labels must align with states")

    def letter_index(self, a: str) -> int:
        try:
            return self.alphabet.index(a)
        except ValueError:
            raise UnknownLetterError(f"letter {a!r} not in alphabet {list(self.alphabet)}") from None

    def delta(self, a: str) -> Transformation:
        return self.deltas[self.letter_index(a)]

    def step(self, q: int, a: str) -> int:
        return self.delta(a).map[q]

    def run(self, w: Word, start: int | None = None) -> int:
        q = self.initial if start is None else start
        for a in w:
            q = self.step(q, a)
        return q

    def transform_of_word(self, w: Word) -> Transformation:
        t = identity(self.n)
        for a in w:
            t = compose(self.delta(a), t)
        return t

    def without_labels(self) -> "Dfa":
        return Dfa(self.n, self.alphabet, self.deltas, self.initial, self.finals)


@dataclass(eq=True)
class Nfa:
    """An NFA with initial-state *sets*; treat instances as immutable.

    ``eta`` maps every (state, letter) pair to a frozenset of successor
    states, possibly empty.  State labels can be any hashable values (ints,
    or StateSets when the NFA is an atomaton).
    """

    states: tuple
    alphabet: tuple[str, ...]
    eta: dict
    initials: frozenset
    finals: frozenset

    def __post_init__(self):
        if len(set(self.states)) != len(self.states) or not self.states:
            raise ValueError("states must be distinct and non-empty")
        if len(set(self.alphabet)) != len(self.alphabet) or not self.alphabet:
            raise ValueError("alphabet letters must be distinct and non-empty")
        universe = set(self.states)
        if not set(self.initials) <= universe or not set(self.finals) <= universe:
            raise ValueError("initial/final states must be states")
        complete = {}
        for q in self.states:
            for a in self.alphabet:
                targets = frozenset(self.eta.get((q, a), ()))
                if not targets <= universe:
                    raise ValueError(f"transition from {q!r} on {a!r} leaves the state set")
                complete[(q, a)] = targets
        self.eta = complete
        self.initials = frozenset(self.initials)
        self.finals = frozenset(self.finals)

    def successors(self, q, a: str) -> frozenset:
        if a not in self.alphabet:
            raise UnknownLetterError(f"letter {a!r} not in alphabet {list(self.alphabet)}")
        return self.eta[(q, a)]

    def with_initials(self, initials: Iterable) -> "Nfa":
        return Nfa(self.states, self.alphabet, dict(self.eta), frozenset(initials), self.finals)


def reverse(m: Dfa | Nfa) -> Nfa:
    """Swap initial and final states and flip every transition."""
    if isinstance(m, Dfa):
        states = tuple(range(m.n))
        eta: dict = {}
        for ai, a in enumerate(m.alphabet):
            t = m.deltas[ai]
            pre: dict[int, set[int]] = {q: set() for q in states}
            for q in states:
                pre[t.map[q]].add(q)
            for q in states:
                eta[(q, a)] = frozenset(pre[q])
        return Nfa(states, m.alphabet, eta, frozenset(m.finals.members()), frozenset({m.initial}))
    if isinstance(m, Nfa):
        eta = {(q, a): set() for q in m.states for a in m.alphabet}
        for (p, a), targets in m.eta.items():
            for q in targets:
                eta[(q, a)].add(p)
        eta = {k: frozenset(v) for k, v in eta.items()}
        return Nfa(m.states, m.alphabet, eta, m.finals, m.initials)
    raise TypeError(f"cannot reverse {type(m).__name__}")


def determinize(m: Nfa) -> Dfa:
    """Subset construction from the initial set; keeps subset labels.

    State i of the result carries ``labels[i]``, the frozenset of NFA states
    it stands for.  The empty subset, if reached, stays as a non-final sink.
    """
    init = frozenset(m.initials)
    order: list[frozenset] = [init]
    index = {init: 0}
    rows: list[list[int]] = []
    for subset in order:
        row = []
        for a in m.alphabet:
            target = frozenset(q2 for q in subset for q2 in m.eta[(q, a)])
            if target not in index:
                index[target] = len(order)
                order.append(target)
            row.append(index[target])
        rows.append(row)
    n = len(order)
    deltas = tuple(
        Transformation(tuple(rows[q][ai] for q in range(n)))
        for ai in range(len(m.alphabet))
    )
    finals = StateSet(n, (i for i, sub in enumerate(order) if sub & m.finals))
    return Dfa(n, m.alphabet, deltas, 0, finals, labels=tuple(order))


def minimize(d: Dfa) -> Dfa:
    """Canonical minimal DFA: language-equivalent, reachable, no equal states.

    Partition refinement on the reachable part, then breadth-first
    renumbering; the result is the same object for any two language-equal
    inputs over the same alphabet.
    """
    order = [d.initial]
    seen = {d.initial}
    for q in order:
        for t in d.deltas:
            r = t.map[q]
            if r not in seen:
                seen.add(r)
                order.append(r)

    cls = {q: (1 if q in d.finals else 0) for q in order}
    ncls = len(set(cls.values()))
    while True:
        sigs: dict[tuple, int] = {}
        new = {}
        for q in order:
            key = (cls[q], *(cls[t.map[q]] for t in d.deltas))
            new[q] = sigs.setdefault(key, len(sigs))
        if len(sigs) == ncls:
            cls = new
            break
        cls, ncls = new, len(sigs)

    rep: dict[int, int] = {}
    for q in order:
        rep.setdefault(cls[q], q)
    corder = [cls[d.initial]]
    cseen = {cls[d.initial]}
    for c in corder:
        q = rep[c]
        for t in d.deltas:
            c2 = cls[t.map[q]]
            if c2 not in cseen:
                cseen.add(c2)
                corder.append(c2)
    renum = {c: i for i, c in enumerate(corder)}
    nn = len(corder)
    deltas = tuple(
        Transformation(tuple(renum[cls[t.map[rep[c]]]] for c in corder))
        for t in d.deltas
    )
    finals = StateSet(nn, (renum[c] for c in corder if rep[c] in d.finals))
    return Dfa(nn, d.alphabet, deltas, 0, finals)


def quotient_complexity(d: Dfa) -> int:
    """Number of distinct left quotients of the language: the minimal state count."""
    return minimize(d).n


def is_minimal(d: Dfa) -> bool:
    return minimize(d).n == d.n


def is_isomorphic(d1: Dfa, d2: Dfa) -> bool:
    """Whether two DFAs have identical structure up to renaming of states.

    Inputs are minimized first; a parallel breadth-first traversal then
    builds the state bijection or fails.
    """
    d1 = minimize(d1)
    d2 = minimize(d2)
    if d1.n != d2.n or d1.alphabet != d2.alphabet:
        return False
    if (d1.initial in d1.finals) != (d2.initial in d2.finals):
        return False
    mapping = {d1.initial: d2.initial}
    queue = deque([(d1.initial, d2.initial)])
    while queue:
        p, q = queue.popleft()
        for t1, t2 in zip(d1.deltas, d2.deltas):
            p2, q2 = t1.map[p], t2.map[q]
            if p2 in mapping:
                if mapping[p2] != q2:
                    return False
            else:
                if (p2 in d1.finals) != (q2 in d2.finals):
                    return False
                mapping[p2] = q2
                queue.append((p2, q2))
    return len(set(mapping.values())) == len(mapping)


def accepts(m: Dfa | Nfa, w: Word) -> bool:
    """Run a word; unknown letters raise UnknownLetterError."""
    if isinstance(m, Dfa):
        return m.run(w) in m.finals
    if isinstance(m, Nfa):
        current = set(m.initials)
        for a in w:
            if a not in m.alphabet:
                raise UnknownLetterError(f"letter {a!r} not in alphabet {list(m.alphabet)}")
            current = {q2 for q in current for q2 in m.eta[(q, a)]}
        return bool(current & set(m.finals))
    raise TypeError(f"cannot run {type(m).__name__}")
