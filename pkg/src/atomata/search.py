"""Enumeration and sampling campaigns over DFA space.

The campaigns scan DFAs for two kinds of evidence: that maximal syntactic
complexity forces all 2^n atoms to exist at their complexity bounds
(zero violations expected), and that the converse fails (counterexample
findings expected).  Hot loops run on raw transition tuples and bitmasks;
findings and violations are re-expressed as ordinary Dfa values so every
stored record can be recomputed with the public API.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from datetime import datetime, timezone
from functools import lru_cache
from typing import Iterator, Optional

from .automata import Dfa, determinize, minimize, quotient_complexity, reverse
from .bounds import max_atom_complexity
from .errors import AtomataError, EnumerationCapError
from .semigroup import DEFAULT_CLOSURE_CAP, syntactic_complexity
from .stateset import StateSet
from .transformations import Transformation, identity, make_cycle, make_singular

LETTER_NAMES = "abcdefghijklmnopqrstuvwxyz"

DEFAULT_MAX_ENUM_N = 4
DEFAULT_MAX_ENUM_K = 3


# ---------------------------------------------------------------------------
# records and reports


@dataclass(frozen=True)
class CampaignRecord:
    """One scanned DFA worth keeping, with every metric the scan computed."""

    dfa: str  # canonical text document
    n: int
    alphabet_size: int
    syntactic_complexity: int
    atom_count: int
    atom_complexities: tuple[tuple[str, int], ...]  # (atom label, complexity)
    is_maximal_atoms: bool
    timestamp: str
    campaign: str
    seed: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "type": "campaign-record",
            "dfa": self.dfa,
            "n": self.n,
            "alphabet_size": self.alphabet_size,
            "syntactic_complexity": self.syntactic_complexity,
            "atom_count": self.atom_count,
            "atom_complexities": {label: c for label, c in self.atom_complexities},
            "is_maximal_atoms": self.is_maximal_atoms,
            "timestamp": self.timestamp,
            "campaign": self.campaign,
            "seed": self.seed,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CampaignRecord":
        return cls(
            dfa=data["dfa"],
            n=data["n"],
            alphabet_size=data["alphabet_size"],
            syntactic_complexity=data["syntactic_complexity"],
            atom_count=data["atom_count"],
            atom_complexities=tuple(sorted(data["atom_complexities"].items())),
            is_maximal_atoms=data["is_maximal_atoms"],
            timestamp=data["timestamp"],
            campaign=data["campaign"],
            seed=data.get("seed"),
        )


@dataclass
class CampaignReport:
    """Outcome of one campaign run; serializes to JSONL, summary line last."""

    campaign: str
    mode: str
    params: dict
    scanned: int = 0
    tested: int = 0
    violations: list[CampaignRecord] = field(default_factory=list)
    findings: list[CampaignRecord] = field(default_factory=list)
    extra: dict = field(default_factory=dict)
    timestamp: str = ""

    @property
    def ok(self) -> bool:
        return not self.violations

    def summary_dict(self) -> dict:
        return {
            "type": "campaign-summary",
            "campaign": self.campaign,
            "mode": self.mode,
            "params": self.params,
            "scanned": self.scanned,
            "tested": self.tested,
            "violations": len(self.violations),
            "findings": len(self.findings),
            "ok": self.ok,
            "timestamp": self.timestamp,
            **self.extra,
        }

    def to_jsonl_lines(self) -> Iterator[str]:
        for rec in self.violations:
            yield json.dumps(rec.to_dict(), sort_keys=True)
        for rec in self.findings:
            yield json.dumps(rec.to_dict(), sort_keys=True)
        yield json.dumps(self.summary_dict(), sort_keys=True)


def _now(timestamp: Optional[str]) -> str:
    if timestamp is not None:
        return timestamp
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


# ---------------------------------------------------------------------------
# named witnesses


def example1() -> Dfa:
    """The 3-state, 4-letter DFA whose transition semigroup is all of T_3:
    a = (0,1), b = (1,2), c = (2->0), d = (Q->1), initial 0, final 2."""
    return Dfa(
        n=3,
        alphabet=("a", "b", "c", "d"),
        deltas=(
            Transformation((1, 0, 2)),
            Transformation((0, 2, 1)),
            Transformation((0, 1, 0)),
            Transformation((1, 1, 1)),
        ),
        initial=0,
        finals=StateSet(3, [2]),
    )


def witness_max_semigroup(n: int, *, cap: int = DEFAULT_CLOSURE_CAP) -> Dfa:
    """An n-state DFA with syntactic complexity exactly n^n.

    Letters: a = (0,1), b = (0,1,...,n-1), c = (n-1 -> 0); degenerate
    letters collapse to the identity at n = 1.  The construction is checked
    before returning: a wrong closure size raises.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n == 1:
        a = b = c = identity(1)
    else:
        a = make_cycle(n, (0, 1))
        b = make_cycle(n, range(n))
        c = make_singular(n, n - 1, 0)
    d = Dfa(n, ("a", "b", "c"), (a, b, c), 0, StateSet(n, [n - 1]))
    sc = syntactic_complexity(d, cap=cap)
    if sc != n**n:
        raise AtomataError(
            f"witness construction broke: syntactic complexity {sc} != {n ** n}"
        )
    return d


# ---------------------------------------------------------------------------
# enumeration and sampling


def _estimated_count(n: int, k: int) -> int:
    return (n**n) ** k * 2**n


def _check_enum_caps(n: int, k: int, max_n: int, max_k: int) -> None:
    if n < 1 or k < 1:
        raise ValueError("n and k must be positive")
    if n > max_n or k > max_k:
        raise EnumerationCapError(
            f"exhaustive enumeration at n={n}, k={k} is over the caps "
            f"(n <= {max_n}, k <= {max_k}); estimated {_estimated_count(n, k)} DFAs"
        )


def all_maps(n: int) -> list[tuple[int, ...]]:
    """All n^n transformation map tuples of degree n, lexicographic."""
    return list(itertools.product(range(n), repeat=n))


def enumerate_dfas(
    n: int,
    k: int,
    *,
    max_n: int = DEFAULT_MAX_ENUM_N,
    max_k: int = DEFAULT_MAX_ENUM_K,
    canonical_letters: bool = False,
) -> Iterator[Dfa]:
    """Every DFA with states {0..n-1}, k letters, initial 0, in lexicographic
    order: letter transformations vary first (leftmost slowest), then the
    final-state bitmask counts up.

    ``canonical_letters`` keeps only non-decreasing letter tuples, a
    symmetry reduction over letter renaming (off by default).
    """
    _check_enum_caps(n, k, max_n, max_k)
    alphabet = tuple(LETTER_NAMES[:k])
    maps = all_maps(n)
    for combo in itertools.product(maps, repeat=k):
        if canonical_letters and any(combo[i] > combo[i + 1] for i in range(k - 1)):
            continue
        deltas = tuple(Transformation(m) for m in combo)
        for fbits in range(2**n):
            yield Dfa(n, alphabet, deltas, 0, StateSet.from_bits(n, fbits))


def random_dfa(rng: random.Random, n: int, k: int) -> Dfa:
    """Uniform over transition tuples and final sets; initial state 0."""
    alphabet = tuple(LETTER_NAMES[:k])
    deltas = tuple(
        Transformation(tuple(rng.randrange(n) for _ in range(n))) for _ in range(k)
    )
    return Dfa(n, alphabet, deltas, 0, StateSet.from_bits(n, rng.randrange(2**n)))


def sample_full_semigroup_dfa(
    n: int, rng: random.Random, *, k: int = 3, cap: int = DEFAULT_CLOSURE_CAP
) -> Dfa:
    """A random minimal DFA whose transition semigroup is all of T_n.

    Accept-reject: two random permutations plus a random singular map (plus
    uniform extra letters beyond three); accepted once the closure is full.
    Finals are a uniform proper non-empty subset, which keeps the DFA
    minimal.
    """
    if n >= 3 and k < 3:
        raise ValueError(f"at least 3 letters are needed for a full semigroup at n={n}")
    if n < 2:
        return witness_max_semigroup(n)
    alphabet = tuple(LETTER_NAMES[:k])
    while True:
        maps = [
            tuple(rng.sample(range(n), n)),
            tuple(rng.sample(range(n), n)),
        ]
        i = rng.randrange(n)
        j = rng.randrange(n - 1)
        if j >= i:
            j += 1
        sing = list(range(n))
        sing[i] = j
        maps.append(tuple(sing))
        while len(maps) < k:
            maps.append(tuple(rng.randrange(n) for _ in range(n)))
        if _closure_size(tuple(maps[:k]), n) != n**n:
            continue
        fbits = rng.randrange(1, 2**n - 1)
        return Dfa(
            n,
            alphabet,
            tuple(Transformation(m) for m in maps[:k]),
            0,
            StateSet.from_bits(n, fbits),
        )


# ---------------------------------------------------------------------------
# raw-tuple engine (hot loops; cross-checked against the public API in tests)


@lru_cache(maxsize=None)
def _closure_size(maps: tuple[tuple[int, ...], ...], n: int) -> int:
    """Size of the semigroup generated by the given map tuples."""
    full = n**n
    index = set(maps)
    frontier = list(index)
    while frontier and len(index) < full:
        nxt = []
        for t in frontier:
            for g in maps:
                comp = tuple(g[v] for v in t)
                if comp not in index:
                    index.add(comp)
                    nxt.append(comp)
            if len(index) == full:
                break
        frontier = nxt
    return len(index)


def _reachable_bits(n: int, maps: tuple[tuple[int, ...], ...]) -> int:
    seen = 1
    stack = [0]
    while stack:
        q = stack.pop()
        for m in maps:
            r = m[q]
            if not seen >> r & 1:
                seen |= 1 << r
                stack.append(r)
    return seen


def _is_minimal_raw(n: int, maps: tuple[tuple[int, ...], ...], fbits: int) -> bool:
    if _reachable_bits(n, maps) != (1 << n) - 1:
        return False
    cls = [fbits >> q & 1 for q in range(n)]
    ncls = len(set(cls))
    while True:
        sigs: dict[tuple, int] = {}
        new = [0] * n
        for q in range(n):
            key = (cls[q], *(cls[m[q]] for m in maps))
            new[q] = sigs.setdefault(key, len(sigs))
        if len(sigs) == ncls:
            return ncls == n
        cls, ncls = new, len(sigs)


def _pre_tables(n: int, maps: tuple[tuple[int, ...], ...]) -> list[list[int]]:
    """Per letter, the bitmask of the preimage of every subset T of states."""
    size = 1 << n
    tables = []
    for m in maps:
        pre = [0] * size
        for q in range(n):
            target_bit = 1 << m[q]
            qbit = 1 << q
            for t_bits in range(size):
                if t_bits & target_bit:
                    pre[t_bits] |= qbit
        tables.append(pre)
    return tables


def _reach_subsets(n: int, pres: list[list[int]], start_bits: int) -> int:
    """How many subsets the determinized reversal reaches from the final set."""
    seen = {start_bits}
    stack = [start_bits]
    while stack:
        s = stack.pop()
        for pre in pres:
            s2 = pre[s]
            if s2 not in seen:
                seen.add(s2)
                stack.append(s2)
    return len(seen)


def _eta_tables(n: int, pres: list[list[int]]) -> list[list[int]]:
    """Per letter, the atomaton transition of each subset S as a collection
    mask over subsets T (bit T set iff the preimage of T is S).

    Valid whenever the atomaton has all 2^n subsets as states.
    """
    size = 1 << n
    tables = []
    for pre in pres:
        eta = [0] * size
        for t_bits in range(size):
            eta[pre[t_bits]] |= 1 << t_bits
        tables.append(eta)
    return tables


@lru_cache(maxsize=None)
def _atom_complexities(maps: tuple[tuple[int, ...], ...], n: int) -> tuple[int, ...]:
    """Quotient complexity of the atom labeled S, indexed by S's bitmask.

    Counts collections reachable from {S} in the determinized atomaton; the
    determinization is already minimal because atoms are disjoint and
    non-empty.  Only meaningful when all 2^n subsets are atoms.
    """
    pres = _pre_tables(n, maps)
    etas = _eta_tables(n, pres)
    out = []
    for s_bits in range(1 << n):
        start = 1 << s_bits
        seen = {start}
        stack = [start]
        while stack:
            cm = stack.pop()
            for eta in etas:
                nxt = 0
                m = cm
                while m:
                    b = m & -m
                    nxt |= eta[b.bit_length() - 1]
                    m ^= b
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        out.append(len(seen))
    return tuple(out)


def full_semigroup_transition_tuples(
    n: int,
    k: int,
    *,
    max_n: int = DEFAULT_MAX_ENUM_N,
    max_k: int = DEFAULT_MAX_ENUM_K,
) -> Iterator[tuple[Transformation, ...]]:
    """All k-letter transition tuples generating the full semigroup, in
    lexicographic order."""
    _check_enum_caps(n, k, max_n, max_k)
    full = n**n
    for combo in itertools.product(all_maps(n), repeat=k):
        if _closure_size(combo, n) == full:
            yield tuple(Transformation(m) for m in combo)


def _record_from_metrics(
    d: Dfa,
    *,
    sc: int,
    atom_count: int,
    complexities: dict[str, int],
    is_max: bool,
    campaign: str,
    timestamp: str,
    seed: Optional[int],
) -> CampaignRecord:
    from .cli import serialize_dfa

    return CampaignRecord(
        dfa=serialize_dfa(d),
        n=d.n,
        alphabet_size=len(d.alphabet),
        syntactic_complexity=sc,
        atom_count=atom_count,
        atom_complexities=tuple(sorted(complexities.items())),
        is_maximal_atoms=is_max,
        timestamp=timestamp,
        campaign=campaign,
        seed=seed,
    )


def _labels_by_bits(n: int) -> list[str]:
    return [StateSet.from_bits(n, b).label() for b in range(1 << n)]


def _make_dfa(n: int, k: int, maps: tuple[tuple[int, ...], ...], fbits: int) -> Dfa:
    return Dfa(
        n,
        tuple(LETTER_NAMES[:k]),
        tuple(Transformation(m) for m in maps),
        0,
        StateSet.from_bits(n, fbits),
    )


# ---------------------------------------------------------------------------
# campaigns


def verify_theorem3(
    n: int,
    k: int,
    *,
    mode: str = "exhaustive",
    samples: int = 10_000,
    seed: int = 0,
    timestamp: Optional[str] = None,
    max_n: int = DEFAULT_MAX_ENUM_N,
    max_k: int = DEFAULT_MAX_ENUM_K,
    shard: int = 0,
    num_shards: int = 1,
) -> CampaignReport:
    """Check that every minimal DFA with full transition semigroup has all
    2^n atoms, each at its complexity bound.  Violations (none expected) are
    dumped as records."""
    ts = _now(timestamp)
    campaign = f"theorem3-n{n}k{k}-{mode}"
    params: dict = {"n": n, "k": k, "shard": shard, "num_shards": num_shards}
    if mode == "sample":
        params.update(samples=samples, seed=seed)
    report = CampaignReport(campaign, mode, params, timestamp=ts)
    full = n**n
    bounds_by_size = [max_atom_complexity(n, n - size) for size in range(n + 1)]
    labels = _labels_by_bits(n)

    def check_instance(maps: tuple[tuple[int, ...], ...], fbits: int) -> None:
        report.scanned += 1
        if not _is_minimal_raw(n, maps, fbits):
            return
        if _closure_size(maps, n) != full:
            return
        report.tested += 1
        pres = _pre_tables(n, maps)
        atoms = _reach_subsets(n, pres, fbits)
        comps = _atom_complexities(maps, n)
        bad = atoms != 2**n or any(
            comps[s_bits] != bounds_by_size[s_bits.bit_count()]
            for s_bits in range(2**n)
        )
        if bad:
            report.violations.append(
                _record_from_metrics(
                    _make_dfa(n, k, maps, fbits),
                    sc=full,
                    atom_count=atoms,
                    complexities={labels[b]: comps[b] for b in range(2**n)},
                    is_max=False,
                    campaign=campaign,
                    timestamp=ts,
                    seed=seed if mode == "sample" else None,
                )
            )

    if mode == "exhaustive":
        _check_enum_caps(n, k, max_n, max_k)
        maps_list = all_maps(n)
        for first_index, first in enumerate(maps_list):
            if first_index % num_shards != shard:
                continue
            for rest in itertools.product(maps_list, repeat=k - 1):
                maps = (first, *rest)
                if _closure_size(maps, n) != full:
                    report.scanned += 2**n
                    continue
                for fbits in range(2**n):
                    check_instance(maps, fbits)
    elif mode == "sample":
        rng = random.Random(seed)
        for _ in range(samples):
            maps = tuple(
                tuple(rng.randrange(n) for _ in range(n)) for _ in range(k)
            )
            check_instance(maps, rng.randrange(2**n))
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return report


def find_converse_counterexamples(
    n: int,
    k: int,
    *,
    mode: str = "exhaustive",
    samples: int = 10_000,
    seed: int = 0,
    limit: Optional[int] = None,
    timestamp: Optional[str] = None,
    max_n: int = DEFAULT_MAX_ENUM_N,
    max_k: int = DEFAULT_MAX_ENUM_K,
    shard: int = 0,
    num_shards: int = 1,
) -> CampaignReport:
    """Minimal DFAs whose atoms are all maximal although the syntactic
    complexity is below n^n.  Findings land in the report together with the
    multiset of syntactic complexities observed among them."""
    ts = _now(timestamp)
    campaign = f"search-converse-n{n}k{k}-{mode}"
    params: dict = {"n": n, "k": k, "limit": limit, "shard": shard, "num_shards": num_shards}
    if mode == "sample":
        params.update(samples=samples, seed=seed)
    report = CampaignReport(campaign, mode, params, timestamp=ts)
    full = n**n
    all_atoms = 2**n
    bounds_by_size = [max_atom_complexity(n, n - size) for size in range(n + 1)]
    labels = _labels_by_bits(n)
    hist: dict[int, int] = {}

    def check_instance(maps: tuple[tuple[int, ...], ...], fbits: int) -> bool:
        """Returns True when the finding limit has been hit."""
        report.scanned += 1
        size = _closure_size(maps, n)
        if size == full:
            return False
        if not _is_minimal_raw(n, maps, fbits):
            return False
        report.tested += 1
        pres = _pre_tables(n, maps)
        if _reach_subsets(n, pres, fbits) != all_atoms:
            return False
        comps = _atom_complexities(maps, n)
        if any(
            comps[s_bits] != bounds_by_size[s_bits.bit_count()]
            for s_bits in range(all_atoms)
        ):
            return False
        hist[size] = hist.get(size, 0) + 1
        report.findings.append(
            _record_from_metrics(
                _make_dfa(n, k, maps, fbits),
                sc=size,
                atom_count=all_atoms,
                complexities={labels[b]: comps[b] for b in range(all_atoms)},
                is_max=True,
                campaign=campaign,
                timestamp=ts,
                seed=seed if mode == "sample" else None,
            )
        )
        return limit is not None and len(report.findings) >= limit

    done = False
    if mode == "exhaustive":
        _check_enum_caps(n, k, max_n, max_k)
        maps_list = all_maps(n)
        for first_index, first in enumerate(maps_list):
            if done or first_index % num_shards != shard:
                continue
            for rest in itertools.product(maps_list, repeat=k - 1):
                maps = (first, *rest)
                reach = _reachable_bits(n, maps)
                if reach != (1 << n) - 1 or _closure_size(maps, n) == full:
                    report.scanned += 2**n
                    continue
                for fbits in range(2**n):
                    if check_instance(maps, fbits):
                        done = True
                        break
                if done:
                    break
    elif mode == "sample":
        rng = random.Random(seed)
        for _ in range(samples):
            maps = tuple(
                tuple(rng.randrange(n) for _ in range(n)) for _ in range(k)
            )
            if check_instance(maps, rng.randrange(2**n)):
                break
    else:
        raise ValueError(f"unknown mode {mode!r}")
    report.extra["syntactic_complexities"] = {str(s): c for s, c in sorted(hist.items())}
    return report


def run_sharded(
    campaign_func,
    n: int,
    k: int,
    *,
    workers: int,
    **kwargs,
) -> CampaignReport:
    """Run an exhaustive campaign split by the first letter's transformation
    index over worker processes; shards merge in shard order, so the result
    equals the single-process run."""
    if workers <= 1:
        return campaign_func(n, k, **kwargs)
    kwargs.setdefault("timestamp", _now(None))
    from concurrent.futures import ProcessPoolExecutor

    shards = [
        dict(kwargs, shard=i, num_shards=workers) for i in range(workers)
    ]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(
            pool.map(_run_shard, [(campaign_func.__name__, n, k, kw) for kw in shards])
        )
    merged = parts[0]
    for part in parts[1:]:
        merged.scanned += part.scanned
        merged.tested += part.tested
        merged.violations.extend(part.violations)
        merged.findings.extend(part.findings)
        for key, val in part.extra.items():
            if isinstance(val, dict):
                bucket = merged.extra.setdefault(key, {})
                for s, c in val.items():
                    bucket[s] = bucket.get(s, 0) + c
            else:
                merged.extra.setdefault(key, val)
    merged.params["num_shards"] = workers
    merged.params["shard"] = "merged"
    return merged


def _run_shard(args) -> CampaignReport:
    name, n, k, kwargs = args
    func = {"verify_theorem3": verify_theorem3,
            "find_converse_counterexamples": find_converse_counterexamples}[name]
    return func(n, k, **kwargs)


def verify_prop1(
    n: int,
    *,
    k: int = 3,
    mode: str = "witness",
    timestamp: Optional[str] = None,
    cap: int = DEFAULT_CLOSURE_CAP,
    max_n: int = DEFAULT_MAX_ENUM_N,
    max_k: int = DEFAULT_MAX_ENUM_K,
) -> CampaignReport:
    """Full syntactic complexity must force the reverse language to have 2^n
    quotients.  Witness mode checks the constructed witness; exhaustive mode
    additionally scans every full-semigroup minimal DFA at (n, k)."""
    ts = _now(timestamp)
    campaign = f"prop1-n{n}-{mode}"
    report = CampaignReport(campaign, mode, {"n": n, "k": k}, timestamp=ts)

    def check(d: Dfa, sc: int) -> None:
        report.tested += 1
        rev_qc = quotient_complexity(determinize(reverse(d)))
        if rev_qc != 2**d.n:
            report.violations.append(
                _record_from_metrics(
                    d,
                    sc=sc,
                    atom_count=rev_qc,
                    complexities={},
                    is_max=False,
                    campaign=campaign,
                    timestamp=ts,
                    seed=None,
                )
            )

    w = witness_max_semigroup(n, cap=cap)
    report.scanned += 1
    check(w, n**n)
    if mode == "exhaustive":
        _check_enum_caps(n, k, max_n, max_k)
        for deltas in full_semigroup_transition_tuples(n, k):
            maps = tuple(t.map for t in deltas)
            for fbits in range(2**n):
                report.scanned += 1
                if not _is_minimal_raw(n, maps, fbits):
                    continue
                check(_make_dfa(n, k, maps, fbits), n**n)
    elif mode != "witness":
        raise ValueError(f"unknown mode {mode!r}")
    return report


def verify_prop2(
    *,
    samples: int = 10_000,
    seed: int = 0,
    max_state_count: int = 5,
    max_alphabet: int = 3,
    timestamp: Optional[str] = None,
) -> CampaignReport:
    """Atom count must equal the quotient complexity of the reverse, for
    random DFAs.  The two sides go through different pipelines (minimize
    before reversing vs. after), so the comparison is informative."""
    ts = _now(timestamp)
    campaign = f"prop2-samples{samples}-seed{seed}"
    params = {
        "samples": samples,
        "seed": seed,
        "max_n": max_state_count,
        "max_k": max_alphabet,
    }
    report = CampaignReport(campaign, "sample", params, timestamp=ts)
    rng = random.Random(seed)
    for _ in range(samples):
        n = rng.randint(1, max_state_count)
        k = rng.randint(1, max_alphabet)
        d = random_dfa(rng, n, k)
        report.scanned += 1
        report.tested += 1
        atoms = determinize(reverse(minimize(d))).n
        rev_qc = quotient_complexity(determinize(reverse(d)))
        if atoms != rev_qc:
            report.violations.append(
                _record_from_metrics(
                    d,
                    sc=syntactic_complexity(d),
                    atom_count=atoms,
                    complexities={},
                    is_max=False,
                    campaign=campaign,
                    timestamp=ts,
                    seed=seed,
                )
            )
    return report
