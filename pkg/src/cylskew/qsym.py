"""Quasisymmetric functions in the monomial (M) and fundamental (F) bases."""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Mapping, Optional

from .symfunc import SymFunc, _format_terms, parse_terms

Composition = tuple


def composition(parts) -> Composition:
    out = tuple(int(p) for p in parts)
    if any(p <= 0 for p in out):
        raise ValueError(f"composition parts must be positive: {parts!r}")
    return out


@lru_cache(maxsize=None)
def compositions_of(n: int) -> tuple:
    """All compositions of ``n``, ordered by their set of partial sums."""
    if n == 0:
        return ((),)
    out = []
    for cuts in range(1 << (n - 1)):
        parts, last = [], 0
        for s in range(1, n):
            if cuts >> (s - 1) & 1:
                parts.append(s - last)
                last = s
        parts.append(n - last)
        out.append(tuple(parts))
    return tuple(out)


@lru_cache(maxsize=None)
def refinements(alpha: Composition) -> tuple:
    """All compositions refining ``alpha``, built one block at a time."""
    return tuple(sum(blocks, ()) for blocks in
                 itertools.product(*(compositions_of(a) for a in alpha)))


def composition_from_code(m: int, code: int) -> Composition:
    """Decode the partial-sum bitmask used by the counting kernels."""
    parts, last = [], 0
    for s in range(1, m):
        if code >> (s - 1) & 1:
            parts.append(s - last)
            last = s
    if m:
        parts.append(m - last)
    return tuple(parts)


class QSymFunc:
    """A homogeneous quasisymmetric function in the M or F basis."""

    __slots__ = ("basis", "degree", "coeffs")

    def __init__(self, basis: str, coeffs: Optional[Mapping] = None,
                 degree: Optional[int] = None):
        if basis not in ("M", "F"):
            raise ValueError(f"unknown basis {basis!r}")
        data = {}
        for alpha, c in (coeffs or {}).items():
            alpha = composition(alpha)
            data[alpha] = data.get(alpha, 0) + int(c)
        data = {a: c for a, c in data.items() if c}
        sizes = {sum(a) for a in data}
        if len(sizes) > 1:
            raise ValueError(f"mixed degrees {sorted(sizes)}")
        if sizes:
            degree = sizes.pop()
        self.basis = basis
        self.degree = degree
        self.coeffs = data

    def __getitem__(self, alpha) -> int:
        return self.coeffs.get(tuple(alpha), 0)

    def items(self):
        keys = sorted(self.coeffs, key=lambda a: (sum(a), len(a), tuple(-p for p in a)))
        return [(a, self.coeffs[a]) for a in keys]

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, QSymFunc):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    __hash__ = None

    def __add__(self, other):
        if not isinstance(other, QSymFunc) or other.basis != self.basis:
            return NotImplemented
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, 0) + c
        return QSymFunc(self.basis, out)

    def __neg__(self):
        return QSymFunc(self.basis, {a: -c for a, c in self.coeffs.items()}, self.degree)

    def __sub__(self, other):
        return self + (-other)

    def __str__(self):
        return _format_terms(self.items(), self.basis)

    def __repr__(self):
        return f"QSymFunc({self.basis!r}, {str(self)!r})"

    def to_json(self) -> dict:
        return {"basis": self.basis, "degree": self.degree,
                "terms": [[list(a), c] for a, c in self.items()]}


def parse_qsym(text: str) -> QSymFunc:
    letter, coeffs = parse_terms(text)
    if letter not in (None, "M", "F"):
        raise ValueError(f"unknown basis letter {letter!r}")
    return QSymFunc(letter or "M", coeffs)


def f_to_m(f: QSymFunc) -> QSymFunc:
    """``F_alpha`` is the sum of ``M_beta`` over refinements ``beta`` of ``alpha``."""
    if f.basis != "F":
        raise ValueError("expected the F basis")
    out: dict = {}
    for alpha, c in f.coeffs.items():
        for beta in refinements(alpha):
            out[beta] = out.get(beta, 0) + c
    return QSymFunc("M", out, f.degree)


def m_to_f(f: QSymFunc) -> QSymFunc:
    """Inclusion-exclusion inverse of :func:`f_to_m`."""
    if f.basis != "M":
        raise ValueError("expected the M basis")
    out: dict = {}
    for alpha, c in f.coeffs.items():
        for beta in refinements(alpha):
            s = -1 if (len(beta) - len(alpha)) % 2 else 1
            out[beta] = out.get(beta, 0) + s * c
    return QSymFunc("F", out, f.degree)


def _rearrangement_count(key) -> int:
    out = math.factorial(len(key))
    for _, grp in itertools.groupby(key):
        out //= math.factorial(len(list(grp)))
    return out


def _symmetry_violation(f: QSymFunc):
    groups: dict = {}
    for alpha in f.coeffs:
        groups.setdefault(tuple(sorted(alpha, reverse=True)), []).append(alpha)
    for key in sorted(groups):
        members = sorted(groups[key])
        first = members[0]
        for beta in members[1:]:
            if f[beta] != f[first]:
                return first, beta
        if len(members) < _rearrangement_count(key):
            present = set(members)
            for beta in itertools.permutations(key):
                if beta not in present:
                    return first, beta
    return None


def is_symmetric(f: QSymFunc) -> bool:
    """Coefficients of rearranged compositions agree (M basis)."""
    if f.basis != "M":
        raise ValueError("expected the M basis")
    return _symmetry_violation(f) is None


def to_symmetric(f: QSymFunc) -> SymFunc:
    """Collapse a symmetric M-expansion onto monomial symmetric functions."""
    if f.basis != "M":
        raise ValueError("expected the M basis")
    bad = _symmetry_violation(f)
    if bad is not None:
        a, b = bad
        raise ValueError(f"not symmetric: [M{list(a)}] = {f[a]} but [M{list(b)}] = {f[b]}")
    out = {}
    for alpha, c in f.coeffs.items():
        out[tuple(sorted(alpha, reverse=True))] = c
    return SymFunc("monomial", out, f.degree)


def coproduct_f(f: QSymFunc) -> dict:
    """Outer coproduct in the F basis: deconcatenations plus overlaps.

    Returns a dict ``{(delta, eps): coeff}``; ``()`` stands for ``F_∅ = 1``.
    """
    if f.basis != "F":
        raise ValueError("expected the F basis")
    out: dict = {}

    def add(key, c):
        v = out.get(key, 0) + c
        if v:
            out[key] = v
        else:
            out.pop(key, None)

    for alpha, c in f.coeffs.items():
        for i in range(len(alpha) + 1):
            add((alpha[:i], alpha[i:]), c)
        for i, a in enumerate(alpha):
            for j in range(1, a):
                add((alpha[:i] + (j,), (a - j,) + alpha[i + 1:]), c)
    return out
