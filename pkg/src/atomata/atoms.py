"""Atoms of a regular language and the atomaton that organizes them.

An atom is a non-empty intersection that takes each left quotient of the
language either plain or complemented; it is identified here by the set S
of states (= quotients) taken plain.  The atomaton is the NFA whose states
are the atoms; it is built as reverse → determinize → reverse of the
minimal DFA, carrying the subset labels through, which lands each atom on
its label S.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from typing import Optional

from .automata import Dfa, Nfa, Word, determinize, minimize, reverse
from .bounds import max_atom_complexity
from .errors import NotAnAtomError, UnknownLetterError
from .stateset import StateSet


@dataclass
class Atomaton:
    """NFA over atom labels; treat as immutable.

    ``nfa`` has one state per atom, labeled by the StateSet S of plain
    quotients.  Initial states are the atoms whose intersection keeps the
    language itself plain (q0 in S); the single final state, present iff
    the language is non-empty, is labeled by the final-state set F.
    """

    n: int
    alphabet: tuple[str, ...]
    source: Dfa  # the minimal DFA the atomaton was built from
    nfa: Nfa
    minimized_input: bool

    @property
    def states(self) -> tuple[StateSet, ...]:
        return tuple(sorted(self.nfa.states, key=lambda s: (len(s), s.members())))

    @property
    def initials(self) -> frozenset:
        return self.nfa.initials

    @property
    def finals(self) -> frozenset:
        return self.nfa.finals

    def eta(self, s: StateSet, a: str) -> frozenset:
        key = (s, a)
        if key not in self.nfa.eta:
            if a not in self.alphabet:
                raise UnknownLetterError(f"letter {a!r} not in alphabet {list(self.alphabet)}")
            raise NotAnAtomError(f"{s} does not label an atom")
        return self.nfa.eta[key]

    def has_atom(self, s: StateSet) -> bool:
        return (s, self.alphabet[0]) in self.nfa.eta


@dataclass(frozen=True)
class AtomReport:
    """Everything measured about one atom."""

    label: StateSet
    r: int  # number of complemented quotients, n - |S|
    is_negative: bool
    is_initial: bool
    is_final: bool
    complexity: int
    bound: int
    is_maximal: bool

    def to_dict(self) -> dict:
        return {
            "atom": self.label.label(),
            "r": self.r,
            "is_negative": self.is_negative,
            "is_initial": self.is_initial,
            "is_final": self.is_final,
            "complexity": self.complexity,
            "bound": self.bound,
            "is_maximal": self.is_maximal,
        }


def build_atomaton(d: Dfa) -> Atomaton:
    """Reverse, determinize, reverse again; relabel states by their subsets."""
    dm = minimize(d)
    if dm.n == d.n:
        dm = d  # already minimal: atom labels keep the caller's numbering
    drd = determinize(reverse(dm))
    assert drd.labels is not None
    labels = tuple(StateSet(dm.n, lab) for lab in drd.labels)

    rev = reverse(drd)  # NFA over drd's state indices
    eta = {
        (labels[q], a): frozenset(labels[p] for p in rev.eta[(q, a)])
        for q in range(drd.n)
        for a in drd.alphabet
    }
    initials = frozenset(labels[q] for q in rev.initials)
    # the final state is the atom containing the empty word, labeled by the
    # final-state set F; when L is empty that is the negative atom
    finals = frozenset(labels[q] for q in rev.finals)
    nfa = Nfa(labels, drd.alphabet, eta, initials, finals)
    return Atomaton(
        n=dm.n,
        alphabet=drd.alphabet,
        source=dm,
        nfa=nfa,
        minimized_input=dm.n != d.n,
    )


def _resolve_label(am: Atomaton, s: StateSet) -> StateSet:
    if s.n != am.n:
        raise NotAnAtomError(f"{s!r} lives in a universe of size {s.n}, expected {am.n}")
    if not am.has_atom(s):
        raise NotAnAtomError(f"{s.label()} does not label an atom of this language")
    return s


def atom_minimal_dfa(d: Dfa, s: StateSet, *, _atomaton: Optional[Atomaton] = None) -> Dfa:
    """Minimal DFA of the atom labeled s.

    Determinizes the atomaton started at {s}; that determinization is
    expected to already be minimal (atoms are disjoint, so distinct
    collections of them have distinct unions).  A mismatch is reported as a
    diagnostic warning and the minimized automaton is returned regardless.
    """
    am = _atomaton if _atomaton is not None else build_atomaton(d)
    s = _resolve_label(am, s)
    det = determinize(am.nfa.with_initials([s]))
    mini = minimize(det)
    if mini.n != det.n:
        warnings.warn(
            f"atom {s.label()}: determinization had {det.n} states but minimizes "
            f"to {mini.n}; returning the minimized DFA",
            RuntimeWarning,
            stacklevel=2,
        )
    return mini


def atom_quotient_complexity(
    d: Dfa, s: StateSet, *, _atomaton: Optional[Atomaton] = None
) -> int:
    return atom_minimal_dfa(d, s, _atomaton=_atomaton).n


def atoms_of(d: Dfa) -> list[AtomReport]:
    """One report per atom, ordered by (|S|, members).

    The negative atom (all quotients complemented), when the language has
    one, is included and flagged; its label is the empty set.
    """
    am = build_atomaton(d)
    dm = am.source
    n = am.n
    nonempty = bool(dm.finals)
    reports = []
    for s in am.states:
        r = n - len(s)
        complexity = atom_quotient_complexity(d, s, _atomaton=am)
        bound = max_atom_complexity(n, r)
        reports.append(
            AtomReport(
                label=s,
                r=r,
                is_negative=not s,
                is_initial=s in am.initials,
                # no atom is flagged final for the empty language (the atom
                # containing the empty word would be the negative one)
                is_final=s in am.finals and nonempty,
                complexity=complexity,
                bound=bound,
                is_maximal=complexity == bound,
            )
        )
    return reports


def atom_count(d: Dfa) -> int:
    """Number of atoms: the state count of the determinized reversal."""
    return determinize(reverse(minimize(d))).n


def membership_in_atom(d: Dfa, s: StateSet, w: Word) -> bool:
    """Direct definition check: w belongs to quotient K_i exactly for i in s.

    Runs the minimal DFA from every state; no atomaton involved, which makes
    this the independent oracle for the constructions above.
    """
    dm = minimize(d)
    if dm.n == d.n:
        dm = d
    if s.n != dm.n:
        raise ValueError(f"state set universe {s.n} does not match {dm.n} quotients")
    w = list(w)
    for i in range(dm.n):
        if (dm.run(w, start=i) in dm.finals) != (i in s):
            return False
    return True


def atom_labels(d: Dfa) -> tuple[StateSet, ...]:
    return build_atomaton(d).states
