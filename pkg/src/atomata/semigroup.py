"""Transition semigroups, syntactic complexity, and word witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Iterable, Optional, Sequence

from .automata import Dfa, minimize
from .errors import ClosureCapError, DegreeMismatchError
from .transformations import Transformation

# Refuse closures whose worst case n^n would exceed this many elements.
DEFAULT_CLOSURE_CAP = 10**8


@dataclass(frozen=True)
class SemigroupSummary:
    """Headline numbers for a transition semigroup."""

    n: int
    size: int
    is_full: bool
    generator_count: int
    rank_histogram: dict[int, int] = field(compare=False)
    minimized_input: bool = False

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "size": self.size,
            "is_full": self.is_full,
            "generator_count": self.generator_count,
            "rank_histogram": {str(r): c for r, c in sorted(self.rank_histogram.items())},
            "minimized_input": self.minimized_input,
        }


@dataclass(frozen=True)
class WordWitness:
    """A non-empty word together with the transformation it induces."""

    transformation: Transformation
    word: str


class TransitionSemigroup:
    """Closure of the letter transformations under composition.

    Elements are listed in discovery order of the breadth-first walk over
    words (shorter words first, alphabet order within a length), so the
    witness attached to each element is the first word that induces it.
    """

    def __init__(
        self,
        n: int,
        alphabet: Sequence[str],
        elements: list[Transformation],
        words: Optional[list[str]],
        generators: Sequence[Transformation] = (),
        minimized_input: bool = False,
    ):
        self.n = n
        self.alphabet = tuple(alphabet)
        self.elements = elements
        self.words = words
        self.generators = tuple(generators)
        self.minimized_input = minimized_input
        self._index = {t.map: i for i, t in enumerate(elements)}

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, t: Transformation) -> bool:
        return isinstance(t, Transformation) and t.map in self._index

    @property
    def is_full(self) -> bool:
        return len(self.elements) == self.n**self.n

    def witness(self, t: Transformation) -> Optional[str]:
        if self.words is None:
            raise ValueError("closure was computed without witnesses")
        i = self._index.get(t.map)
        return None if i is None else self.words[i]

    def word_witnesses(self) -> list[WordWitness]:
        if self.words is None:
            raise ValueError("closure was computed without witnesses")
        return [WordWitness(t, w) for t, w in zip(self.elements, self.words)]

    def rank_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for t in self.elements:
            hist[t.rank()] = hist.get(t.rank(), 0) + 1
        return hist

    def summary(self) -> SemigroupSummary:
        return SemigroupSummary(
            n=self.n,
            size=len(self.elements),
            is_full=self.is_full,
            generator_count=len(self.generators),
            rank_histogram=self.rank_histogram(),
            minimized_input=self.minimized_input,
        )


def _check_cap(n: int, cap: int) -> None:
    if n**n > cap:
        raise ClosureCapError(
            f"closure of degree {n} could reach {n**n} elements, over the cap {cap}; "
            "raise the cap to proceed"
        )


def _closure(
    generators: Sequence[tuple[str, Transformation]],
    n: int,
    *,
    witnesses: bool,
    cap: int,
) -> tuple[list[Transformation], Optional[list[str]]]:
    _check_cap(n, cap)
    full = n**n
    elements: list[Transformation] = []
    words: Optional[list[str]] = [] if witnesses else None
    index: dict[tuple[int, ...], int] = {}
    for a, t in generators:
        if t.map not in index:
            index[t.map] = len(elements)
            elements.append(t)
            if words is not None:
                words.append(a)
    frontier = list(range(len(elements)))
    while frontier and len(elements) < full:
        nxt = []
        for i in frontier:
            base = elements[i]
            for a, g in generators:
                # word extended on the right by a: new map sends q to g(base(q))
                comp = tuple(g.map[v] for v in base.map)
                if comp not in index:
                    index[comp] = len(elements)
                    elements.append(Transformation(comp))
                    if words is not None:
                        words.append(words[i] + a)
                    nxt.append(len(elements) - 1)
            if len(elements) == full:
                break
        frontier = nxt
    return elements, words


def transition_semigroup(
    d: Dfa, *, witnesses: bool = False, cap: int = DEFAULT_CLOSURE_CAP
) -> TransitionSemigroup:
    """All transformations of the state set induced by non-empty words.

    The caller is expected to pass a minimal DFA (``syntactic_complexity``
    minimizes for you); the closure itself is well-defined either way.
    """
    gens = list(zip(d.alphabet, d.deltas))
    elements, words = _closure(gens, d.n, witnesses=witnesses, cap=cap)
    return TransitionSemigroup(
        d.n, d.alphabet, elements, words, generators=dict.fromkeys(d.deltas)
    )


def syntactic_complexity(d: Dfa, *, cap: int = DEFAULT_CLOSURE_CAP) -> int:
    """Size of the transition semigroup of the minimal DFA of the language."""
    return len(transition_semigroup(minimize(d), cap=cap))


def semigroup_summary(d: Dfa, *, cap: int = DEFAULT_CLOSURE_CAP) -> SemigroupSummary:
    """Summary computed on the minimal DFA; notes whether input was minimized."""
    dm = minimize(d)
    sg = transition_semigroup(dm, cap=cap)
    return replace(sg.summary(), minimized_input=dm.n != d.n)


def generates_full(
    gens: Iterable[Transformation], n: int, *, cap: int = DEFAULT_CLOSURE_CAP
) -> bool:
    """Whether the given transformations generate all n^n self-maps."""
    gens = list(gens)
    for t in gens:
        if t.n != n:
            raise DegreeMismatchError(f"generator degree {t.n} != {n}")
    if not gens:
        return False
    named = [(f"g{i}", t) for i, t in enumerate(gens)]
    elements, _ = _closure(named, n, witnesses=False, cap=cap)
    return len(elements) == n**n


def word_for(
    d: Dfa, t: Transformation, *, cap: int = DEFAULT_CLOSURE_CAP
) -> Optional[str]:
    """First word (length, then alphabet order) inducing t, or None."""
    sg = transition_semigroup(d, witnesses=True, cap=cap)
    return sg.witness(t)
