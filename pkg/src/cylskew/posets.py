"""Oriented posets: Hasse diagrams whose edges are flagged strict or weak.

A ``(P, O)``-partition is an order-preserving map to the positive integers
that strictly increases along strict edges.  ``k_po`` is the generating
function of these maps in the monomial quasisymmetric basis.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple, Optional

from . import kernels
from .qsym import QSymFunc, composition_from_code

DEFAULT_MAX_ELEMENTS = 7


class Edge(NamedTuple):
    lower: int
    upper: int
    strict: bool


def _closure(n: int, relations) -> list[int]:
    """``below[x]``: bitmask of elements strictly below ``x``; raises on a cycle."""
    preds = [0] * n
    for lo, hi, _ in relations:
        preds[hi] |= 1 << lo
    below = [None] * n
    state = [0] * n

    def visit(x):
        if state[x] == 2:
            return below[x]
        if state[x] == 1:
            raise ValueError("relations contain a cycle")
        state[x] = 1
        acc, b = 0, preds[x]
        while b:
            low = b & -b
            y = low.bit_length() - 1
            acc |= low | visit(y)
            b ^= low
        below[x] = acc
        state[x] = 2
        return acc

    for x in range(n):
        visit(x)
    return below


class OrientedPoset:
    """A finite poset on ``0..n-1`` given by its flagged Hasse edges."""

    __slots__ = ("n", "covers", "below")

    def __init__(self, n: int, covers: Iterable = ()):
        if n < 0:
            raise ValueError("negative element count")
        edges = frozenset(Edge(int(a), int(b), bool(s)) for a, b, s in covers)
        pairs = set()
        for lo, hi, _ in edges:
            if not (0 <= lo < n and 0 <= hi < n) or lo == hi:
                raise ValueError(f"bad edge ({lo}, {hi})")
            if (lo, hi) in pairs:
                raise ValueError(f"edge ({lo}, {hi}) flagged twice")
            pairs.add((lo, hi))
        below = _closure(n, edges)
        for lo, hi, _ in edges:
            if any(lo != mid and below[mid] >> lo & 1 and below[hi] >> mid & 1
                   for mid in range(n)):
                raise ValueError(f"edge ({lo}, {hi}) is not a cover")
        self.n = n
        self.covers = edges
        self.below = below

    @classmethod
    def from_relations(cls, n: int, relations: Iterable) -> "OrientedPoset":
        """Hasse-reduce flagged relations.

        A redundant strict relation may only be dropped when some other
        chain already forces it strict; otherwise the generating function
        would change and ``ValueError`` is raised.
        """
        rels = {}
        for a, b, s in relations:
            rels[(int(a), int(b))] = rels.get((int(a), int(b)), False) or bool(s)
        below = _closure(n, [(a, b, s) for (a, b), s in rels.items()])
        keep = []
        for (lo, hi), s in rels.items():
            redundant = any(mid != lo and below[mid] >> lo & 1 and below[hi] >> mid & 1
                            for mid in range(n))
            if not redundant:
                keep.append((lo, hi, s))
        p = cls(n, keep)
        forced = p.strictly_forced()
        for (lo, hi), s in rels.items():
            if s and not forced[hi] >> lo & 1:
                raise ValueError(f"strict relation ({lo}, {hi}) is not implied after reduction")
        return p

    @classmethod
    def from_labelling(cls, n: int, covers: Iterable, omega) -> "OrientedPoset":
        """Labelled poset: a cover ``s < t`` is strict when ``omega[s] > omega[t]``."""
        return cls(n, [(s, t, omega[s] > omega[t]) for s, t in covers])

    def strictly_forced(self) -> list[int]:
        """``out[x]``: elements ``y`` with a chain ``y < x`` through a strict edge."""
        order = self.linear_extension()
        weak_preds = [0] * self.n
        strict_preds = [0] * self.n
        for lo, hi, s in self.covers:
            if s:
                strict_preds[hi] |= 1 << lo
            else:
                weak_preds[hi] |= 1 << lo
        out = [0] * self.n
        for x in order:
            acc = 0
            for y in range(self.n):
                if strict_preds[x] >> y & 1:
                    acc |= (1 << y) | self.below[y]
                elif weak_preds[x] >> y & 1:
                    acc |= out[y]
            out[x] = acc
        return out

    def linear_extension(self) -> list[int]:
        return sorted(range(self.n), key=lambda x: bin(self.below[x]).count("1"))

    def leq(self, a: int, b: int) -> bool:
        return a == b or bool(self.below[b] >> a & 1)

    def masks(self) -> tuple[list[int], list[int]]:
        weak = [0] * self.n
        strict = [0] * self.n
        for lo, hi, s in self.covers:
            (strict if s else weak)[hi] |= 1 << lo
        return weak, strict

    def components(self) -> list[list[int]]:
        adj = [set() for _ in range(self.n)]
        for lo, hi, _ in self.covers:
            adj[lo].add(hi)
            adj[hi].add(lo)
        seen, out = set(), []
        for x in range(self.n):
            if x in seen:
                continue
            comp, stack = [], [x]
            seen.add(x)
            while stack:
                y = stack.pop()
                comp.append(y)
                for z in adj[y]:
                    if z not in seen:
                        seen.add(z)
                        stack.append(z)
            out.append(sorted(comp))
        return out

    def induced(self, elements) -> "OrientedPoset":
        """Subposet on ``elements`` (relabelled in the given order); must be convex."""
        elements = list(elements)
        index = {x: i for i, x in enumerate(elements)}
        return OrientedPoset(len(elements), [(index[a], index[b], s) for a, b, s in self.covers
                                            if a in index and b in index])

    def edges(self) -> list[Edge]:
        return sorted(self.covers)

    def __eq__(self, other):
        if not isinstance(other, OrientedPoset):
            return NotImplemented
        return self.n == other.n and self.covers == other.covers

    def __hash__(self):
        return hash((self.n, self.covers))

    def __repr__(self):
        body = ", ".join(f"{a}{'<' if s else '<='}{b}" for a, b, s in self.edges())
        return f"OrientedPoset({self.n}; {body})"


def k_po(p: OrientedPoset) -> QSymFunc:
    """Generating function of ``(P, O)``-partitions in the M basis."""
    weak, strict = p.masks()
    counts = kernels.count_by_composition(p.n, weak, strict)
    return QSymFunc("M", {composition_from_code(p.n, code): c
                          for code, c in enumerate(counts) if c}, p.n)


def has_cycle(p: OrientedPoset) -> bool:
    """Cycle in the digraph going up strict edges and down weak edges."""
    succ = [[] for _ in range(p.n)]
    for lo, hi, s in p.covers:
        if s:
            succ[lo].append(hi)
        else:
            succ[hi].append(lo)
    state = [0] * p.n
    for root in range(p.n):
        if state[root]:
            continue
        stack = [(root, iter(succ[root]))]
        state[root] = 1
        while stack:
            x, it = stack[-1]
            for y in it:
                if state[y] == 1:
                    return True
                if state[y] == 0:
                    state[y] = 1
                    stack.append((y, iter(succ[y])))
                    break
            else:
                state[x] = 2
                stack.pop()
    return False


def deletion_minus_reversal(p: OrientedPoset, e) -> tuple[OrientedPoset, OrientedPoset]:
    """The two posets with ``K(p) = K(deleted) - K(reversed)``."""
    e = Edge(int(e[0]), int(e[1]), bool(e[2]))
    if e not in p.covers:
        raise ValueError(f"{tuple(e)} is not an edge")
    rest = [c for c in p.covers if c != e]
    deleted = OrientedPoset(p.n, rest)
    reversed_ = OrientedPoset.from_relations(p.n, rest + [(e.upper, e.lower, not e.strict)])
    return deleted, reversed_


# Isomorphism -------------------------------------------------------------

def _colours(p: OrientedPoset) -> list[int]:
    up = [[] for _ in range(p.n)]
    down = [[] for _ in range(p.n)]
    for lo, hi, s in p.covers:
        up[lo].append((hi, s))
        down[hi].append((lo, s))
    sig = [(len(down[x]), sum(s for _, s in down[x]), len(up[x]), sum(s for _, s in up[x]),
            bin(p.below[x]).count("1"),
            sum(1 for y in range(p.n) if p.below[y] >> x & 1)) for x in range(p.n)]
    colour = _rank(sig)
    while True:
        sig = [(colour[x],
                tuple(sorted((s, colour[y]) for y, s in up[x])),
                tuple(sorted((s, colour[y]) for y, s in down[x]))) for x in range(p.n)]
        new = _rank(sig)
        if len(set(new)) == len(set(colour)):
            return new
        colour = new


def _rank(sig) -> list[int]:
    table = {s: i for i, s in enumerate(sorted(set(sig)))}
    return [table[s] for s in sig]


def _distinct_permutations(seq):
    seq = sorted(seq)
    yield tuple(seq)
    while True:
        i = len(seq) - 2
        while i >= 0 and seq[i] >= seq[i + 1]:
            i -= 1
        if i < 0:
            return
        j = len(seq) - 1
        while seq[j] <= seq[i]:
            j -= 1
        seq[i], seq[j] = seq[j], seq[i]
        seq[i + 1:] = reversed(seq[i + 1:])
        yield tuple(seq)


def canonical_form(p: OrientedPoset) -> tuple:
    """A complete isomorphism invariant: ``(n, sorted relabelled edges)``.

    Elements are ordered by refined colour; the remaining freedom is
    searched exhaustively, with interchangeable twins fixed in one order.
    """
    colour = _colours(p)
    neigh = {}
    for lo, hi, s in p.covers:
        neigh.setdefault(lo, set()).add(("u", hi, s))
        neigh.setdefault(hi, set()).add(("d", lo, s))
    groups: dict = {}
    for x in range(p.n):
        key = frozenset(neigh.get(x, ()))
        groups.setdefault(colour[x], {}).setdefault(key, []).append(x)
    options = []
    for c in sorted(groups):
        twins = list(groups[c].values())
        seqs = []
        for order in _distinct_permutations([i for i, t in enumerate(twins) for _ in t]):
            pools = [list(t) for t in twins]
            seqs.append([pools[i].pop() for i in order])
        options.append(seqs)
    best = None
    edges = list(p.covers)
    for choice in itertools.product(*options):
        label = {}
        for x in itertools.chain.from_iterable(choice):
            label[x] = len(label)
        form = tuple(sorted((label[a], label[b], s) for a, b, s in edges))
        if best is None or form < best:
            best = form
    return (p.n, best or ())


def are_isomorphic(p: OrientedPoset, q: OrientedPoset) -> bool:
    return canonical_form(p) == canonical_form(q)


def from_canonical(form: tuple) -> OrientedPoset:
    n, edges = form
    return OrientedPoset(n, edges)


# Cylinder embeddings -----------------------------------------------------

def _forced_positions(p: OrientedPoset, comp: list[int]):
    """Plane positions forced by the edges: strict is up, weak is right."""
    adj = {x: [] for x in comp}
    for lo, hi, s in p.covers:
        if lo in adj:
            step = (0, 1) if s else (1, 0)
            adj[lo].append((hi, step))
            adj[hi].append((lo, (-step[0], -step[1])))
    pos = {comp[0]: (0, 0)}
    stack = [comp[0]]
    extra = []
    while stack:
        x = stack.pop()
        for y, (di, dj) in adj[x]:
            target = (pos[x][0] + di, pos[x][1] + dj)
            if y not in pos:
                pos[y] = target
                stack.append(y)
            elif pos[y] != target:
                extra.append((pos[y], target))
    return pos, extra


def _cyl_leq(a, b, v, u) -> bool:
    # exists m with a <= b + m(-u, v) componentwise
    return -((a[1] - b[1]) // -v) <= (b[0] - a[0]) // u


def _embeds(p: OrientedPoset, comp: list[int], pos, extra, v: int, u: int) -> bool:
    def reduce(c):
        m = c[0] // u
        return (c[0] - m * u, c[1] + m * v)

    for a, b in extra:
        da, db = b[0] - a[0], b[1] - a[1]
        if da % u or -da // u * v != db:
            return False
    cells = {x: reduce(pos[x]) for x in comp}
    if len(set(cells.values())) != len(comp):
        return False
    for x in comp:
        for y in comp:
            if x != y and _cyl_leq(cells[x], cells[y], v, u) != p.leq(x, y):
                return False
    occupied = set(cells.values())
    for x in comp:
        cx = cells[x]
        for step in ((1, 0), (0, 1)):
            y = reduce((cx[0] + step[0], cx[1] + step[1]))
            if y in occupied:
                continue
            if any(_cyl_leq(y, c, v, u) for c in occupied):
                return False
    return True


def _plane_embeds(p: OrientedPoset, comp: list[int], pos, extra) -> bool:
    if extra:
        return False
    if len(set(pos.values())) != len(comp):
        return False
    for x in comp:
        for y in comp:
            a, b = pos[x], pos[y]
            if x != y and (a[0] <= b[0] and a[1] <= b[1]) != p.leq(x, y):
                return False
    occupied = set(pos.values())
    for c in occupied:
        for y in ((c[0] + 1, c[1]), (c[0], c[1] + 1)):
            if y not in occupied and any(y[0] <= z[0] and y[1] <= z[1] for z in occupied):
                return False
    return True


def cylinder_embedding(p: OrientedPoset, comp: list[int]) -> Optional[tuple[int, int]]:
    """Some ``(v, u)`` with ``v, u >= 2`` hosting ``comp`` as a convex subposet."""
    pos, extra = _forced_positions(p, comp)
    m = len(comp)
    for v in range(2, m + 2):
        for u in range(2, m + 2):
            if _embeds(p, comp, pos, extra, v, u):
                return v, u
    return None


def recognize_cylindric_components(p: OrientedPoset) -> bool:
    """Every connected component is a cylindric skew shape poset."""
    return all(cylinder_embedding(p, comp) is not None for comp in p.components())


def is_skew_shape_poset(p: OrientedPoset) -> bool:
    """Isomorphic to a skew shape poset (strict up, weak right)."""
    for comp in p.components():
        pos, extra = _forced_positions(p, comp)
        if not _plane_embeds(p, comp, pos, extra):
            return False
    return True


@lru_cache(maxsize=None)
def forbidden_subposets() -> tuple:
    """Canonical forms of the 3-element oriented posets that do not embed."""
    return tuple(sorted(canonical_form(q) for q in enum_oriented_posets(3)
                        if not recognize_cylindric_components(q)))


def convex_triples(p: OrientedPoset) -> Iterator[tuple[int, int, int]]:
    for triple in itertools.combinations(range(p.n), 3):
        inside = set(triple)
        if all(not (p.leq(a, y) and p.leq(y, b))
               for a in triple for b in triple for y in range(p.n) if y not in inside):
            yield triple


def forbidden_convex_subposet(p: OrientedPoset) -> Optional[tuple[int, int, int]]:
    bad = set(forbidden_subposets())
    for triple in convex_triples(p):
        if canonical_form(p.induced(triple)) in bad:
            return triple
    return None


# Enumeration -------------------------------------------------------------

@lru_cache(maxsize=None)
def _unoriented(n: int) -> tuple:
    if n == 0:
        return ((0, ()),)
    out = set()
    for form in _unoriented(n - 1):
        q = from_canonical(form)
        for size in range(n):
            for anti in itertools.combinations(range(n - 1), size):
                if any(q.leq(a, b) for a in anti for b in anti if a != b):
                    continue
                covers = list(q.covers) + [(a, n - 1, False) for a in anti]
                out.add(canonical_form(OrientedPoset(n, covers)))
    return tuple(sorted(out))


def enum_posets(n: int, bound: int = DEFAULT_MAX_ELEMENTS) -> tuple:
    """Unoriented posets (all edges weak) up to isomorphism."""
    if n > bound:
        raise ValueError(f"{n} elements exceeds the bound {bound}")
    return tuple(from_canonical(f) for f in _unoriented(n))


def orientations(q: OrientedPoset) -> Iterator[OrientedPoset]:
    """Non-isomorphic ways to flag the edges of ``q``."""
    edges = q.edges()
    seen = set()
    for flags in itertools.product((False, True), repeat=len(edges)):
        p = OrientedPoset(q.n, [(a, b, s) for (a, b, _), s in zip(edges, flags)])
        form = canonical_form(p)
        if form not in seen:
            seen.add(form)
            yield from_canonical(form)


def enum_oriented_posets(n: int, filter: str = "all",
                         bound: int = DEFAULT_MAX_ELEMENTS) -> Iterator[OrientedPoset]:
    """One oriented poset per isomorphism class; ``filter="acyclic"`` keeps labelled ones."""
    if filter not in ("all", "acyclic", "cyclic"):
        raise ValueError(f"unknown filter {filter!r}")
    for q in enum_posets(n, bound):
        for p in orientations(q):
            cyc = has_cycle(p)
            if filter == "all" or (filter == "acyclic") != cyc:
                yield p


# Text format -------------------------------------------------------------

def format_poset(p: OrientedPoset) -> str:
    lines = [f"n={p.n}"]
    lines += [f"{a} {b} {'strict' if s else 'weak'}" for a, b, s in p.edges()]
    return "\n".join(lines) + "\n"


def parse_poset(text: str) -> OrientedPoset:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
    if not lines or not lines[0].startswith("n="):
        raise ValueError("first line must be n=<count>")
    n = int(lines[0][2:])
    covers = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3 or parts[2] not in ("strict", "weak"):
            raise ValueError(f"bad edge line {ln!r}")
        covers.append((int(parts[0]), int(parts[1]), parts[2] == "strict"))
    return OrientedPoset(n, covers)


def read_poset(path) -> OrientedPoset:
    with open(path, encoding="utf-8") as fh:
        return parse_poset(fh.read())


def write_poset(p: OrientedPoset, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_poset(p))
