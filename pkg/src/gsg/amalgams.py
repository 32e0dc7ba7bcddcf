"""Amalgams of two gamma-semigroups over a shared core.

An amalgam is a core U, two parts S1 and S2 with disjoint element names,
and one monomorphism from the core into each part.  Inside the free
product of the parts, the relation pairs identify the two images of every
core product u g0 u'; the amalgamated product is the free product modulo
the congruence those pairs generate.

Deciding word equality in that quotient is not bounded in general, so
`words_equal_within` runs a breadth-first search over letter sequences up
to a length bound and a visited-state budget.  The verdict is exact in one
direction only: Equal comes with a replayable rewrite chain and is a
proof; anything else is merely inconclusive within the given bound, never
a disproof.  Soundness rests on three facts about the moves:

* substituting one member of a relation pair for the other stays in the
  same congruence class;
* splitting a letter z into a factor (x, g, y) with x g y = z inside one
  part leaves the represented element unchanged, as does merging such a
  factor back;
* every sequence denotes the product of its letters, so normalisation
  (merge everything mergeable, left to right) is confluent.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

import numpy as np

from .core import (
    GammaHomomorphism,
    GammaSemigroup,
    check_associativity,
    classify,
    verify_homomorphism,
)
from .errors import (
    CommutingSquareFails,
    GammaMismatch,
    GsgError,
    MalformedSequence,
    NameClash,
    NotAssociative,
    NotMonomorphism,
)
from .words import FreeProduct, GammaLetter, Letter, Mode, Word

__all__ = [
    "GammaAmalgam",
    "RelationSet",
    "Step",
    "EqualityVerdict",
    "Collision",
    "CrossPair",
    "EmbeddingReport",
    "MediatorReport",
    "NecessaryConditionVerdict",
    "validate_amalgam",
    "relation_generators",
    "words_equal_within",
    "mu",
    "replay_chain",
    "check_natural_embedding",
    "pushout_mediator",
    "necessary_condition",
]

DEFAULT_BOUND = 6
DEFAULT_BUDGET = 200_000


@dataclass(frozen=True)
class GammaAmalgam:
    """Core, two parts, and one structure map into each part.

    Construction only fixes the shape; run :func:`validate_amalgam` for the
    real invariants (disjoint names, monomorphisms, gamma discipline)."""

    name: str
    core: GammaSemigroup
    parts: tuple[GammaSemigroup, GammaSemigroup]
    maps: tuple[GammaHomomorphism, GammaHomomorphism]
    mode: Mode = Mode.SAME_GAMMA

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        object.__setattr__(self, "maps", tuple(self.maps))
        if len(self.parts) != 2 or len(self.maps) != 2:
            raise ValueError("an amalgam has exactly two parts and two maps")

    def free_product(self) -> FreeProduct:
        return FreeProduct(self.parts, self.mode)


def validate_amalgam(a: GammaAmalgam) -> list[GsgError]:
    """Every violated invariant, as a list of unraised errors; empty = valid."""
    defects: list[GsgError] = []
    seen: dict[str, str] = {}
    for s in (a.core, *a.parts):
        for e in s.elements:
            if e in seen and seen[e] != s.name:
                defects.append(NameClash(e, f"{seen[e]} and {s.name}"))
            seen.setdefault(e, s.name)
    for i, (f, part) in enumerate(zip(a.maps, a.parts)):
        if f.source != a.core:
            defects.append(GammaMismatch(
                f"map {f.name!r} must start at the core {a.core.name}"))
            continue
        if f.target != part:
            defects.append(GammaMismatch(
                f"map {f.name!r} must land in part {part.name}"))
            continue
        w = verify_homomorphism(f)
        if w is not None:
            defects.append(NotMonomorphism(i, f"not a homomorphism, witness {tuple(w)}"))
        else:
            if len(set(f.carrier_map.values())) != a.core.n:
                defects.append(NotMonomorphism(i, "carrier map is not injective"))
            if len(set(f.gamma_map.values())) != a.core.g:
                defects.append(NotMonomorphism(i, "gamma map is not injective"))
    if a.mode is Mode.SAME_GAMMA:
        shared = a.core.gammas
        for s in a.parts:
            if s.gammas != shared:
                defects.append(GammaMismatch(
                    f"same-gamma mode needs one shared gamma list; "
                    f"{s.name} has {s.gammas}, core has {shared}"))
        for f in a.maps:
            if f.source == a.core and any(f.gamma_map.get(h) != h for h in a.core.gammas):
                defects.append(GammaMismatch(
                    f"same-gamma mode needs identity gamma maps, {f.name!r} is not"))
    else:
        overlap = set(a.parts[0].gammas) & set(a.parts[1].gammas)
        if overlap:
            defects.append(GammaMismatch(
                f"disjoint mode needs disjoint part gammas, shared: {sorted(overlap)}"))
    return defects


def _require_valid(a: GammaAmalgam) -> None:
    defects = validate_amalgam(a)
    if defects:
        raise defects[0]


@dataclass(frozen=True)
class RelationSet:
    """Identified letter pairs (element of S1, element of S2), plus the
    gamma pairs used for gamma-letter substitution in disjoint mode."""
    element_pairs: tuple[tuple[str, str], ...]
    gamma_pairs: tuple[tuple[str, str], ...]


def relation_generators(a: GammaAmalgam,
                        identify_elements: bool = False) -> RelationSet:
    """The defining pairs: both images of every core product u g0 u'.

    By default only products are identified; pass identify_elements=True to
    also pair the two images of every core element itself.
    """
    _require_valid(a)
    u = a.core
    f1, f2 = a.maps
    s1, s2 = a.parts
    pairs: set[tuple[str, str]] = set()
    for x in u.elements:
        for g0 in u.gammas:
            for y in u.elements:
                z = u.mul(x, g0, y)
                pairs.add((f1.carrier_map[z], f2.carrier_map[z]))
    if identify_elements:
        for x in u.elements:
            pairs.add((f1.carrier_map[x], f2.carrier_map[x]))
    element_pairs = tuple(sorted(pairs, key=lambda p: (s1.index(p[0]), s2.index(p[1]))))
    if a.mode is Mode.SAME_GAMMA:
        gamma_pairs: tuple[tuple[str, str], ...] = ()
    else:
        gset = {(f1.gamma_map[h], f2.gamma_map[h]) for h in u.gammas}
        gamma_pairs = tuple(sorted(
            gset, key=lambda p: (s1.gamma_index(p[0]), s2.gamma_index(p[1]))))
    return RelationSet(element_pairs, gamma_pairs)


class Step(NamedTuple):
    """One rewrite move.  pos counts element letters from the left; a merge
    at pos k combines element letters k and k+1 with the gamma between."""
    kind: str          # "swap" | "gswap" | "unmerge" | "merge"
    pos: int
    data: tuple


@dataclass(frozen=True)
class EqualityVerdict:
    """Equal carries a replayable chain and is a proof.  Anything else only
    says the search stopped: limit is "exhausted" when every reachable
    sequence within the bound was seen, "budget" when the state allowance
    ran out first."""
    equal: bool
    chain: Optional[tuple[Step, ...]]
    limit: Optional[str]
    bound: int
    budget: int


# internal letter codes: ("e", pointer, element index) and
# ("g", pointer or -1, gamma index); a state is a tuple of codes.

class _Search:
    """Move tables for one amalgam + relation set, and the BFS itself."""

    def __init__(self, a: GammaAmalgam, rel: RelationSet):
        self.mode = a.mode
        self.parts = a.parts
        self.tables = [p.table for p in a.parts]
        s1, s2 = a.parts
        subs: dict[tuple, list] = {}
        for (e1, e2) in rel.element_pairs:
            c1 = ("e", 0, s1.index(e1))
            c2 = ("e", 1, s2.index(e2))
            subs.setdefault(c1, []).append(c2)
            subs.setdefault(c2, []).append(c1)
        self.subs = {k: tuple(sorted(set(v))) for k, v in subs.items()}
        gsubs: dict[tuple, list] = {}
        for (h1, h2) in rel.gamma_pairs:
            c1 = ("g", 0, s1.gamma_index(h1))
            c2 = ("g", 1, s2.gamma_index(h2))
            gsubs.setdefault(c1, []).append(c2)
            gsubs.setdefault(c2, []).append(c1)
        self.gsubs = {k: tuple(sorted(set(v))) for k, v in gsubs.items()}
        # factorizations of each element inside its own part, in table order
        self.facts: list[dict[int, tuple]] = []
        for p, t in enumerate(self.tables):
            gptr = -1 if self.mode is Mode.SAME_GAMMA else p
            d: dict[int, list] = {}
            for x, j, y in np.argwhere(t >= 0):
                d.setdefault(int(t[x, j, y]), []).append(
                    (int(x), int(j), int(y), gptr))
            self.facts.append({z: tuple(v) for z, v in d.items()})

    # code helpers --------------------------------------------------------

    def encode(self, w: Word):
        out = []
        for l in w.letters:
            if isinstance(l, Letter):
                out.append(("e", l.pointer, self.parts[l.pointer].index(l.element)))
            else:
                p = -1 if l.pointer is None else l.pointer
                src = self.parts[0] if p == -1 else self.parts[p]
                out.append(("g", p, src.gamma_index(l.gamma)))
        return tuple(out)

    def decode(self, state) -> Word:
        letters = []
        for c in state:
            if c[0] == "e":
                letters.append(Letter(c[1], self.parts[c[1]].elements[c[2]]))
            elif c[1] == -1:
                letters.append(GammaLetter(self.parts[0].gammas[c[2]], None))
            else:
                letters.append(GammaLetter(self.parts[c[1]].gammas[c[2]], c[1]))
        return Word(tuple(letters), self.mode)

    def _ename(self, c) -> str:
        return self.parts[c[1]].elements[c[2]]

    def _gname(self, c) -> str:
        return self.parts[0 if c[1] == -1 else c[1]].gammas[c[2]]

    def _mergeable(self, x, g, y) -> bool:
        if self.mode is Mode.SAME_GAMMA:
            return x[1] == y[1]
        return x[1] == g[1] == y[1]

    def _merge(self, x, g, y):
        z = int(self.tables[x[1]][x[2], g[2], y[2]])
        return ("e", x[1], z)

    def normal_form(self, state):
        out: list = []
        for c in state:
            if c[0] == "e" and out and self._mergeable(out[-2], out[-1], c):
                out[-2:] = [self._merge(out[-2], out[-1], c)]
            else:
                out.append(c)
        return tuple(out)

    def normal_steps(self, state) -> tuple[tuple, tuple[Step, ...]]:
        """Normal form together with the merge moves that reach it."""
        cur = list(state)
        steps: list[Step] = []
        changed = True
        while changed:
            changed = False
            m = (len(cur) + 1) // 2
            for k in range(m - 1):
                x, g, y = cur[2 * k], cur[2 * k + 1], cur[2 * k + 2]
                if self._mergeable(x, g, y):
                    z = self._merge(x, g, y)
                    steps.append(Step("merge", k, (self._ename(x), self._gname(g),
                                                   self._ename(y), self._ename(z))))
                    cur[2 * k:2 * k + 3] = [z]
                    changed = True
                    break
        return tuple(cur), tuple(steps)

    def is_reduced(self, state) -> bool:
        return self.normal_form(state) == state

    def neighbors(self, state, bound: int):
        """All one-move successors with their steps, in a fixed order:
        merges, then swaps, then gamma swaps, then unmerges."""
        out = []
        m = (len(state) + 1) // 2
        for k in range(m - 1):
            x, g, y = state[2 * k], state[2 * k + 1], state[2 * k + 2]
            if self._mergeable(x, g, y):
                z = self._merge(x, g, y)
                ns = state[:2 * k] + (z,) + state[2 * k + 3:]
                out.append((ns, Step("merge", k, (self._ename(x), self._gname(g),
                                                  self._ename(y), self._ename(z)))))
        for k in range(m):
            x = state[2 * k]
            for r in self.subs.get(x, ()):
                ns = state[:2 * k] + (r,) + state[2 * k + 1:]
                out.append((ns, Step("swap", k, (self._ename(x), self._ename(r)))))
        for k in range(m - 1):
            g = state[2 * k + 1]
            for r in self.gsubs.get(g, ()):
                ns = state[:2 * k + 1] + (r,) + state[2 * k + 2:]
                out.append((ns, Step("gswap", k, (self._gname(g), self._gname(r)))))
        if m < bound:
            for k in range(m):
                x = state[2 * k]
                for (xi, j, yi, gptr) in self.facts[x[1]].get(x[2], ()):
                    piece = (("e", x[1], xi), ("g", gptr, j), ("e", x[1], yi))
                    ns = state[:2 * k] + piece + state[2 * k + 1:]
                    out.append((ns, Step("unmerge", k, (
                        self._ename(x), self.parts[x[1]].elements[xi],
                        self._gname(piece[1]), self.parts[x[1]].elements[yi]))))
        return out

    def apply_step(self, state, step: Step):
        """Replay one move, checking its legality against the tables and the
        relation set; raises ValueError on any mismatch."""
        kind, k, data = step.kind, step.pos, tuple(step.data)
        m = (len(state) + 1) // 2
        if kind == "swap":
            if not 0 <= k < m:
                raise ValueError(f"swap position {k} out of range")
            x = state[2 * k]
            if self._ename(x) != data[0]:
                raise ValueError(f"swap expects {data[0]!r} at position {k}")
            for r in self.subs.get(x, ()):
                if self._ename(r) == data[1]:
                    return state[:2 * k] + (r,) + state[2 * k + 1:]
            raise ValueError(f"{data[0]!r} ~ {data[1]!r} is not a relation pair")
        if kind == "gswap":
            if not 0 <= k < m - 1:
                raise ValueError(f"gswap position {k} out of range")
            g = state[2 * k + 1]
            if self._gname(g) != data[0]:
                raise ValueError(f"gswap expects {data[0]!r} at position {k}")
            for r in self.gsubs.get(g, ()):
                if self._gname(r) == data[1]:
                    return state[:2 * k + 1] + (r,) + state[2 * k + 2:]
            raise ValueError(f"{data[0]!r} ~ {data[1]!r} is not a gamma pair")
        if kind == "unmerge":
            if not 0 <= k < m:
                raise ValueError(f"unmerge position {k} out of range")
            x = state[2 * k]
            if self._ename(x) != data[0]:
                raise ValueError(f"unmerge expects {data[0]!r} at position {k}")
            for (xi, j, yi, gptr) in self.facts[x[1]].get(x[2], ()):
                piece = (("e", x[1], xi), ("g", gptr, j), ("e", x[1], yi))
                if (self.parts[x[1]].elements[xi], self._gname(piece[1]),
                        self.parts[x[1]].elements[yi]) == data[1:]:
                    return state[:2 * k] + piece + state[2 * k + 1:]
            raise ValueError(f"{data[1:]} is not a factorization of {data[0]!r}")
        if kind == "merge":
            if not 0 <= k < m - 1:
                raise ValueError(f"merge position {k} out of range")
            x, g, y = state[2 * k], state[2 * k + 1], state[2 * k + 2]
            if (self._ename(x), self._gname(g), self._ename(y)) != data[:3]:
                raise ValueError(f"merge at {k} expects factor {data[:3]}")
            if not self._mergeable(x, g, y):
                raise ValueError(f"factor {data[:3]} is not mergeable")
            z = self._merge(x, g, y)
            if self._ename(z) != data[3]:
                raise ValueError(f"product of {data[:3]} is {self._ename(z)!r}, "
                                 f"not {data[3]!r}")
            return state[:2 * k] + (z,) + state[2 * k + 3:]
        raise ValueError(f"unknown step kind {kind!r}")

    # the search itself ---------------------------------------------------

    def explore(self, start, bound: int, budget: int, target=None):
        """BFS from start.  With a target: stop as soon as some discovered
        sequence normalises to it and return (chain, None).  Without one:
        return (None, visited map) after the frontier or budget runs out.
        The third result slot is the stop reason: None (target found),
        "exhausted", or "budget"."""
        parents: dict = {start: None}
        if target is not None:
            nf, steps = self.normal_steps(start)
            if nf == target:
                return steps, None, None
        queue = deque([start])
        limit = "exhausted"
        while queue:
            cur = queue.popleft()
            for ns, step in self.neighbors(cur, bound):
                if ns in parents:
                    continue
                if len(parents) >= budget:
                    limit = "budget"
                    queue.clear()
                    break
                parents[ns] = (cur, step)
                if target is not None:
                    nf, extra = self.normal_steps(ns)
                    if nf == target:
                        chain: list[Step] = []
                        node = ns
                        while parents[node] is not None:
                            node, st = parents[node]
                            chain.append(st)
                        chain.reverse()
                        chain.extend(extra)
                        return tuple(chain), None, None
                queue.append(ns)
        return None, parents, limit


def _prepared(a: GammaAmalgam, identify_elements: bool) -> _Search:
    rel = relation_generators(a, identify_elements)
    return _Search(a, rel)


def _check_word_input(fp: FreeProduct, w: Word) -> None:
    fp._check_word(w)
    if not fp.is_reduced(w):
        raise MalformedSequence(f"word {w} is not reduced")


def words_equal_within(a: GammaAmalgam, w1: Word, w2: Word,
                       bound: int = DEFAULT_BOUND,
                       budget: int = DEFAULT_BUDGET,
                       identify_elements: bool = False) -> EqualityVerdict:
    """Bounded proof search for equality in the amalgamated product.

    Equal means proven equal, with the move chain from w1 to w2 attached.
    An inconclusive verdict carries no claim at all: the pair may be equal
    through longer words or not equal at all."""
    if bound < 1 or budget < 1:
        raise ValueError("bound and budget must be positive")
    search = _prepared(a, identify_elements)
    fp = a.free_product()
    _check_word_input(fp, w1)
    _check_word_input(fp, w2)
    start, target = search.encode(w1), search.encode(w2)
    chain, _, limit = search.explore(start, bound, budget, target=target)
    if chain is not None:
        return EqualityVerdict(True, chain, None, bound, budget)
    return EqualityVerdict(False, None, limit, bound, budget)


def replay_chain(a: GammaAmalgam, w1: Word, chain: Sequence[Step],
                 identify_elements: bool = False) -> Word:
    """Run a chain against the tables and relation pairs, validating every
    move; returns the word it produces.  ValueError on any illegal step."""
    search = _prepared(a, identify_elements)
    state = search.encode(w1)
    for step in chain:
        state = search.apply_step(state, step)
    return search.decode(state)


def mu(a: GammaAmalgam, part: int, element: str,
       bound: int = DEFAULT_BOUND, budget: int = DEFAULT_BUDGET,
       identify_elements: bool = False) -> Word:
    """Canonical representative of one part element's class: the least
    reduced word (length first, then letter indices) among everything the
    bounded search can reach from it.  part is 1 or 2."""
    if part not in (1, 2):
        raise ValueError("part must be 1 or 2")
    search = _prepared(a, identify_elements)
    fp = a.free_product()
    start = search.encode(fp.embed(part - 1, element))
    _, visited, _ = search.explore(start, bound, budget)
    reduced = [st for st in visited if search.is_reduced(st)]
    words = [search.decode(st) for st in reduced]
    return min(words, key=fp.canonical_key)


@dataclass(frozen=True)
class Collision:
    """Two distinct elements of one part proven equal: an injectivity
    failure for the natural map of that part."""
    part: int
    a: str
    b: str
    chain: tuple[Step, ...]


@dataclass(frozen=True)
class CrossPair:
    """A part-1 and part-2 element proven equal, with the core element that
    accounts for the overlap when the search found one."""
    s1: str
    s2: str
    resolved_by: Optional[str]


@dataclass(frozen=True)
class EmbeddingReport:
    amalgam: str
    collisions: tuple[Collision, ...]
    no_collision_within_bound: tuple[bool, bool]
    cross_pairs: tuple[CrossPair, ...]
    verdict: str               # "violation-found" | "consistent-within-bound"
    bound: int
    budget: int

    @property
    def unresolved(self) -> tuple[CrossPair, ...]:
        return tuple(p for p in self.cross_pairs if p.resolved_by is None)


def check_natural_embedding(a: GammaAmalgam,
                            bound: int = DEFAULT_BOUND,
                            budget: int = DEFAULT_BUDGET,
                            identify_elements: bool = False) -> EmbeddingReport:
    """Probe the two necessary conditions for the parts to embed naturally.

    A collision (two distinct elements of one part proven equal) is a
    definite violation.  Cross pairs record every proven identification
    between the parts, each with the core element that explains it when one
    is found within the bound; an unexplained pair is NOT a violation, only
    unresolved at this bound.
    """
    _require_valid(a)
    fp = a.free_product()
    f1, f2 = a.maps

    collisions: list[Collision] = []
    clear = []
    for p, s in enumerate(a.parts):
        found = []
        for i in range(s.n):
            for j in range(i + 1, s.n):
                v = words_equal_within(a, fp.embed(p, s.elements[i]),
                                       fp.embed(p, s.elements[j]),
                                       bound, budget, identify_elements)
                if v.equal:
                    found.append(Collision(p + 1, s.elements[i], s.elements[j], v.chain))
        collisions.extend(found)
        clear.append(not found)

    cross: list[CrossPair] = []
    s1, s2 = a.parts
    for e1 in s1.elements:
        w1 = fp.embed(0, e1)
        for e2 in s2.elements:
            v = words_equal_within(a, w1, fp.embed(1, e2),
                                   bound, budget, identify_elements)
            if not v.equal:
                continue
            resolved = None
            for u in a.core.elements:
                r = words_equal_within(a, fp.embed(0, f1.carrier_map[u]), w1,
                                       bound, budget, identify_elements)
                if r.equal:
                    resolved = u
                    break
            cross.append(CrossPair(e1, e2, resolved))

    verdict = "violation-found" if collisions else "consistent-within-bound"
    return EmbeddingReport(a.name, tuple(collisions), tuple(clear),
                           tuple(cross), verdict, bound, budget)


@dataclass(frozen=True)
class MediatorReport:
    """Checks that folding through g1, g2 is a well defined map out of the
    amalgamated product: relation pairs collapse, the canonical
    representatives map where they must, and length-one products are
    respected."""
    amalgam: str
    target: str
    relations_respected: bool
    relations_witness: Optional[tuple[str, str]]
    diagram_commutes: bool
    diagram_witness: Optional[tuple[int, str]]
    products_respected: bool
    products_witness: Optional[tuple[str, str, str]]
    bound: int

    @property
    def all_pass(self) -> bool:
        return (self.relations_respected and self.diagram_commutes
                and self.products_respected)


def pushout_mediator(a: GammaAmalgam, v: GammaSemigroup,
                     g1: GammaHomomorphism, g2: GammaHomomorphism,
                     bound: int = DEFAULT_BOUND,
                     budget: int = DEFAULT_BUDGET) -> MediatorReport:
    """Given maps g_i from the parts into v agreeing on the core, fold words
    through them and certify the mediating-map equations."""
    _require_valid(a)
    f1, f2 = a.maps
    for u in a.core.elements:
        if g1.carrier_map[f1.carrier_map[u]] != g2.carrier_map[f2.carrier_map[u]]:
            raise CommutingSquareFails(u)
    for h in a.core.gammas:
        if g1.gamma_map[f1.gamma_map[h]] != g2.gamma_map[f2.gamma_map[h]]:
            raise GammaMismatch(
                f"gamma square does not commute on core gamma {h!r}")
    fp = a.free_product()
    homs = [g1, g2]
    rel = relation_generators(a)

    relations_ok, rel_witness = True, None
    for (e1, e2) in rel.element_pairs:
        if g1.carrier_map[e1] != g2.carrier_map[e2]:
            relations_ok, rel_witness = False, (e1, e2)
            break

    diagram_ok, diagram_witness = True, None
    for p, (s, g) in enumerate(zip(a.parts, (g1, g2))):
        for e in s.elements:
            rep = mu(a, p + 1, e, bound, budget)
            if fp.fold(rep, v, homs) != g.carrier_map[e]:
                diagram_ok, diagram_witness = False, (p + 1, e)
                break
        if not diagram_ok:
            break

    products_ok, products_witness = True, None
    if a.mode is Mode.SAME_GAMMA:
        gnames = list(a.parts[0].gammas)
    else:
        gnames = list(a.parts[0].gammas) + list(a.parts[1].gammas)
    atoms = [(0, e) for e in a.parts[0].elements] + [(1, e) for e in a.parts[1].elements]
    for (pa, ea) in atoms:
        for gn in gnames:
            for (pb, eb) in atoms:
                wa, wb = fp.embed(pa, ea), fp.embed(pb, eb)
                prod = fp.gamma_multiply(wa, gn, wb)
                if a.mode is Mode.SAME_GAMMA:
                    tg = gn
                else:
                    owner = 0 if gn in a.parts[0].gammas else 1
                    tg = homs[owner].gamma_map[gn]
                direct = v.mul(fp.fold(wa, v, homs), tg, fp.fold(wb, v, homs))
                if fp.fold(prod, v, homs) != direct:
                    products_ok, products_witness = False, (ea, gn, eb)
                    break
            if not products_ok:
                break
        if not products_ok:
            break
    return MediatorReport(a.name, v.name, relations_ok, rel_witness,
                          diagram_ok, diagram_witness,
                          products_ok, products_witness, bound)


@dataclass(frozen=True)
class NecessaryConditionVerdict:
    """Outcome of the complete-regularity screen.

    satisfied: both parts and the core are completely alpha-regular.
    not-applicable: some part is not, so the screen says nothing.
    not-embeddable: both parts are but the core is not; no embedding of the
    amalgam into any gamma-semigroup can exist, witnessed by the first core
    element with no witness pair."""
    status: str
    failing_parts: tuple[str, ...]
    witness: Optional[str]


def necessary_condition(a: GammaAmalgam) -> NecessaryConditionVerdict:
    _require_valid(a)
    for s in (a.core, *a.parts):
        w = check_associativity(s)
        if w is not None:
            raise NotAssociative(w)
    reports = [classify(s) for s in a.parts]
    failing = tuple(s.name for s, r in zip(a.parts, reports)
                    if not r.is_completely_alpha_regular)
    if failing:
        return NecessaryConditionVerdict("not-applicable", failing, None)
    core_report = classify(a.core)
    if core_report.is_completely_alpha_regular:
        return NecessaryConditionVerdict("satisfied", (), None)
    witness = next(e.element for e in core_report.per_element
                   if e.completely_regular is None)
    return NecessaryConditionVerdict("not-embeddable", (), witness)
