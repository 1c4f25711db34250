"""Homogeneous symmetric functions with integer coefficients.

Two bases are supported: Schur (``"schur"``) and monomial (``"monomial"``).
A :class:`SymFunc` is a sparse map from partitions to non-zero integers.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Mapping, Optional

from . import kernels
from .partitions import (Partition, SkewShape, conjugate, contains, dominance_leq,
                         partition, partitions_of, size)

BASES = {"schur": "s", "monomial": "m"}
_PREFIX_TO_BASIS = {v: k for k, v in BASES.items()}


def _sort_key(lam):
    return (sum(lam), tuple(-p for p in lam))


def _clean(coeffs) -> dict:
    return {k: v for k, v in coeffs.items() if v}


class SymFunc:
    """A homogeneous symmetric function in one named basis."""

    __slots__ = ("basis", "degree", "coeffs")

    def __init__(self, basis: str, coeffs: Optional[Mapping] = None,
                 degree: Optional[int] = None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}")
        data = {}
        for lam, c in (coeffs or {}).items():
            lam = partition(lam)
            data[lam] = data.get(lam, 0) + int(c)
        data = _clean(data)
        sizes = {size(lam) for lam in data}
        if len(sizes) > 1:
            raise ValueError(f"mixed degrees {sorted(sizes)}")
        if sizes:
            (found,) = sizes
            if degree is not None and degree != found:
                raise ValueError(f"terms have degree {found}, not {degree}")
            degree = found
        self.basis = basis
        self.degree = degree
        self.coeffs = data

    @classmethod
    def basis_element(cls, basis: str, lam) -> "SymFunc":
        lam = partition(lam)
        return cls(basis, {lam: 1})

    def __getitem__(self, lam) -> int:
        return self.coeffs.get(partition(lam), 0)

    def __iter__(self):
        return iter(sorted(self.coeffs, key=_sort_key))

    def items(self):
        return [(lam, self.coeffs[lam]) for lam in self]

    def __len__(self):
        return len(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def _check(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if other.basis != self.basis:
            raise ValueError(f"cannot combine {self.basis} and {other.basis}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            out[lam] = out.get(lam, 0) + c
        if _clean(out):
            return SymFunc(self.basis, out)
        return SymFunc(self.basis, {}, self.degree if self.degree is not None else other.degree)

    def __neg__(self):
        return SymFunc(self.basis, {k: -v for k, v in self.coeffs.items()}, self.degree)

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar):
        if not isinstance(scalar, int):
            return NotImplemented
        return SymFunc(self.basis, {k: scalar * v for k, v in self.coeffs.items()}, self.degree)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self.basis == other.basis and self.coeffs == other.coeffs

    __hash__ = None

    def __repr__(self):
        return f"SymFunc({self.basis!r}, {format_symfunc(self)!r})"

    def __str__(self):
        return format_symfunc(self)

    def to_json(self) -> dict:
        return {"basis": self.basis, "degree": self.degree,
                "terms": [[list(lam), c] for lam, c in self.items()]}


def zero(basis: str = "schur", degree: Optional[int] = None) -> SymFunc:
    return SymFunc(basis, {}, degree)


def schur(lam) -> SymFunc:
    return SymFunc.basis_element("schur", lam)


def linear_combination(basis: str, terms: Iterable[tuple[int, SymFunc]]) -> SymFunc:
    """``sum(c * f for c, f in terms)`` without intermediate objects."""
    out: dict = {}
    for c, f in terms:
        if f.basis != basis:
            raise ValueError(f"expected {basis}, got {f.basis}")
        for lam, v in f.coeffs.items():
            out[lam] = out.get(lam, 0) + c * v
    return SymFunc(basis, out)


def _format_terms(items, letter, key_fmt=lambda k: ",".join(map(str, k))) -> str:
    out = []
    for key, c in items:
        body = f"{letter}[{key_fmt(key)}]"
        mag = abs(c)
        term = body if mag == 1 else f"{mag}*{body}"
        if not out:
            out.append(term if c > 0 else f"-{term}")
        else:
            out.append(("+ " if c > 0 else "- ") + term)
    return " ".join(out) if out else "0"


def format_symfunc(f: SymFunc) -> str:
    """``"s[2,2] + s[2,1,1] - s[1,1,1,1]"``; degree first, then reverse lex."""
    return _format_terms(f.items(), BASES[f.basis])


_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*?\s*)?([A-Za-z])"
                   r"(?:\[([0-9,\s]*)\]|_?\{(\d*)\}|(\d*))\s*")


def parse_terms(text: str) -> tuple[Optional[str], dict]:
    """Parse ``"2*X[1,2] - X[3]"`` into ``(letter, {key: coeff})``.

    Single-digit parts may also be run together: ``X12``, ``X_{12}``.
    """
    text = text.strip()
    if text in ("", "0"):
        return None, {}
    pos, letter, out = 0, None, {}
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse term at {text[pos:]!r}")
        sign, mag, let, body, braced, bare = m.groups()
        if pos and sign is None:
            raise ValueError(f"missing operator before {text[pos:]!r}")
        if letter is None:
            letter = let
        elif let != letter:
            raise ValueError(f"mixed bases {letter!r} and {let!r}")
        if body is not None:
            key = tuple(int(t) for t in body.split(",") if t.strip())
        else:
            key = tuple(int(ch) for ch in (braced if braced is not None else bare))
        c = (-1 if sign == "-" else 1) * (int(mag) if mag else 1)
        out[key] = out.get(key, 0) + c
        pos = m.end()
    return letter, out


def parse_symfunc(text: str, basis: str = "schur") -> SymFunc:
    letter, coeffs = parse_terms(text)
    if letter is not None:
        if letter not in _PREFIX_TO_BASIS:
            raise ValueError(f"unknown basis letter {letter!r}")
        basis = _PREFIX_TO_BASIS[letter]
    return SymFunc(basis, coeffs)


# Littlewood-Richardson ---------------------------------------------------

@lru_cache(maxsize=None)
def _skew_coeffs(outer: Partition, inner: Partition) -> tuple:
    if len(outer) > outer[0]:
        flipped = _lr(conjugate(outer), conjugate(inner))
        return tuple((conjugate(nu), c) for nu, c in flipped.items())
    return tuple(_lr(outer, inner).items())


def _lr(outer, inner) -> dict:
    try:
        return kernels.lr_expand(outer, inner)
    except ValueError:
        from . import _pykernels
        return _pykernels.lr_expand(outer, inner)


def skew_to_schur(shape) -> SymFunc:
    """Schur expansion of ``s_{outer/inner}``."""
    outer, inner = partition(shape[0]), partition(shape[1])
    if not contains(outer, inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    if not outer:
        return SymFunc("schur", {(): 1})
    return SymFunc("schur", dict(_skew_coeffs(outer, inner)), size(outer) - size(inner))


def lr_coefficient(lam, mu, nu) -> int:
    """``c^lam_{mu nu}``; zero on size mismatch or ``mu`` outside ``lam``."""
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    if size(mu) + size(nu) != size(lam) or not contains(lam, mu):
        return 0
    return skew_to_schur(SkewShape(lam, mu))[nu]


# Kostka numbers ----------------------------------------------------------

def _horizontal_strips(lam: Partition, m: int):
    """All ``mu`` with ``lam/mu`` a horizontal strip of ``m`` cells."""
    rows = len(lam)

    def rec(i, left, acc):
        if i == rows:
            if left == 0:
                yield partition(acc)
            return
        low = lam[i + 1] if i + 1 < rows else 0
        for take in range(min(left, lam[i] - low), -1, -1):
            yield from rec(i + 1, left - take, acc + [lam[i] - take])

    return rec(0, m, [])


@lru_cache(maxsize=None)
def kostka(lam: Partition, content: tuple) -> int:
    """Number of SSYT of shape ``lam`` and the given content."""
    lam, content = partition(lam), tuple(content)
    if size(lam) != sum(content):
        return 0
    if not content:
        return 1
    last = content[-1]
    return sum(kostka(mu, content[:-1]) for mu in _horizontal_strips(lam, last))


@lru_cache(maxsize=None)
def _kostka_row(lam: Partition) -> tuple:
    out = []
    for tau in partitions_of(size(lam)):
        if dominance_leq(tau, lam):
            k = kostka(lam, tau)
            if k:
                out.append((tau, k))
    return tuple(out)


def schur_to_monomial(f: SymFunc) -> SymFunc:
    if f.basis != "schur":
        raise ValueError("expected the Schur basis")
    out: dict = {}
    for lam, c in f.coeffs.items():
        for tau, k in _kostka_row(lam):
            out[tau] = out.get(tau, 0) + c * k
    return SymFunc("monomial", out, f.degree)


def monomial_to_schur(f: SymFunc) -> SymFunc:
    """Invert the Kostka matrix by peeling the lexicographically largest key."""
    if f.basis != "monomial":
        raise ValueError("expected the monomial basis")
    rest = dict(f.coeffs)
    out = {}
    while rest:
        lam = max(rest)
        c = rest[lam]
        out[lam] = c
        for tau, k in _kostka_row(lam):
            v = rest.get(tau, 0) - c * k
            if v:
                rest[tau] = v
            else:
                rest.pop(tau, None)
    return SymFunc("schur", out, f.degree)


def restrict_vars(f: SymFunc, k: int) -> SymFunc:
    """Drop every term indexed by a partition with more than ``k`` parts."""
    return SymFunc(f.basis, {lam: c for lam, c in f.coeffs.items() if len(lam) <= k},
                   f.degree)


# Fundamental quasisymmetric expansion -----------------------------------

@lru_cache(maxsize=None)
def syt_descent_compositions(lam: Partition) -> tuple:
    """Descent compositions of all SYT of shape ``lam``, with multiplicity.

    A descent is an ``i`` with ``i + 1`` in a strictly higher row.
    """
    lam = partition(lam)
    n = size(lam)
    counts: dict = {}
    filled = [0] * len(lam)

    def rec(placed, prev_row, last_cut, parts):
        if placed == n:
            comp = tuple(parts) + ((n - last_cut,) if n > last_cut else ())
            counts[comp] = counts.get(comp, 0) + 1
            return
        for r in range(len(lam)):
            if filled[r] < lam[r] and (r == 0 or filled[r - 1] > filled[r]):
                filled[r] += 1
                if placed and r > prev_row:
                    rec(placed + 1, r, placed, parts + [placed - last_cut])
                else:
                    rec(placed + 1, r, last_cut, parts)
                filled[r] -= 1

    rec(0, -1, 0, [])
    return tuple(sorted(counts.items()))


def schur_to_fundamental(f: SymFunc):
    from .qsym import QSymFunc
    if f.basis != "schur":
        raise ValueError("expected the Schur basis")
    out: dict = {}
    for lam, c in f.coeffs.items():
        for comp, k in syt_descent_compositions(lam):
            out[comp] = out.get(comp, 0) + c * k
    return QSymFunc("F", out, f.degree)


# Coproduct ---------------------------------------------------------------

class TensorSym:
    """Sparse element of Sym ⊗ Sym in the Schur ⊗ Schur basis."""

    __slots__ = ("coeffs", "degree")

    def __init__(self, coeffs: Optional[Mapping] = None, degree: Optional[int] = None):
        data = {}
        for (a, b), c in (coeffs or {}).items():
            key = (partition(a), partition(b))
            data[key] = data.get(key, 0) + int(c)
        self.coeffs = _clean(data)
        self.degree = degree

    def __getitem__(self, key) -> int:
        a, b = key
        return self.coeffs.get((partition(a), partition(b)), 0)

    def __eq__(self, other):
        if not isinstance(other, TensorSym):
            return NotImplemented
        return self.coeffs == other.coeffs

    __hash__ = None

    def items(self):
        keys = sorted(self.coeffs, key=lambda ab: (_sort_key(ab[0]), _sort_key(ab[1])))
        return [(k, self.coeffs[k]) for k in keys]

    def left_factor(self, mu) -> SymFunc:
        """Collect the terms ``s_mu ⊗ g`` and return ``g``."""
        mu = partition(mu)
        return SymFunc("schur", {b: c for (a, b), c in self.coeffs.items() if a == mu})

    def __str__(self):
        fmt = lambda ab: f"{','.join(map(str, ab[0]))}]⊗s[{','.join(map(str, ab[1]))}"
        return _format_terms(self.items(), "s", fmt)


@lru_cache(maxsize=None)
def _subpartitions(lam: Partition) -> tuple:
    out = []

    def rec(i, acc):
        if i == len(lam):
            out.append(partition(acc))
            return
        cap = lam[i] if i == 0 else min(lam[i], acc[-1])
        for p in range(cap, -1, -1):
            if p == 0:
                out.append(partition(acc))
                return
            rec(i + 1, acc + [p])

    rec(0, [])
    return tuple(out)


def coproduct(f: SymFunc) -> TensorSym:
    """``s_lam -> sum over mu ⊆ lam of s_mu ⊗ s_{lam/mu}``, extended linearly."""
    if f.basis != "schur":
        raise ValueError("expected the Schur basis")
    out: dict = {}
    for lam, c in f.coeffs.items():
        for mu in _subpartitions(lam):
            for nu, v in skew_to_schur(SkewShape(lam, mu)).coeffs.items():
                out[(mu, nu)] = out.get((mu, nu), 0) + c * v
    return TensorSym(out, f.degree)


def is_positive(f) -> bool:
    """All stored coefficients are non-negative."""
    return all(c >= 0 for c in f.coeffs.values())
