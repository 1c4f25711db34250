"""Integer partitions, skew shapes and ribbon (rim hook) moves.

Partitions are plain tuples of positive integers in weakly decreasing
order; the empty partition is ``()``.  Diagrams use French notation with
1-based (column, row) cell coordinates.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, NamedTuple, Optional, Sequence

Partition = tuple


class SkewShape(NamedTuple):
    outer: Partition
    inner: Partition

    def __str__(self) -> str:
        if not self.inner:
            return format_partition(self.outer)
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"


class RibbonStep(NamedTuple):
    result: Partition
    width: int
    sign_exponent: Optional[int]


def partition(parts: Sequence[int]) -> Partition:
    """Normalize ``parts`` to a canonical partition tuple (zeros stripped)."""
    out = tuple(int(p) for p in parts)
    if any(p < 0 for p in out):
        raise ValueError(f"negative part in {parts!r}")
    if any(out[i] < out[i + 1] for i in range(len(out) - 1)):
        raise ValueError(f"parts of {parts!r} are not weakly decreasing")
    while out and out[-1] == 0:
        out = out[:-1]
    return out


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "∅", "()", "[]"):
        return ()
    return partition(int(t) for t in text.strip("()[]").split(","))


def format_partition(lam: Partition) -> str:
    return ",".join(map(str, lam)) if lam else "∅"


def size(lam: Sequence[int]) -> int:
    return sum(lam)


def conjugate(lam: Sequence[int]) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def contains(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """True when the diagram of ``mu`` sits inside the diagram of ``lam``."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def in_box(lam: Sequence[int], rows: int, cols: int) -> bool:
    return len(lam) <= rows and (not lam or lam[0] <= cols)


def cells(outer: Sequence[int], inner: Sequence[int] = ()) -> list[tuple[int, int]]:
    """Cells ``(column, row)`` of ``outer/inner``, row by row from the bottom."""
    out = []
    for r, top in enumerate(outer, start=1):
        low = inner[r - 1] if r <= len(inner) else 0
        out.extend((c, r) for c in range(low + 1, top + 1))
    return out


def is_ribbon(shape: SkewShape) -> bool:
    """Edgewise connected, non-empty and free of 2x2 blocks."""
    outer, inner = shape
    if not contains(outer, inner):
        raise ValueError(f"{inner} is not contained in {outer}")
    cs = set(cells(outer, inner))
    if not cs:
        return False
    for c, r in cs:
        if {(c + 1, r), (c, r + 1), (c + 1, r + 1)} <= cs:
            return False
    start = next(iter(cs))
    seen = {start}
    stack = [start]
    while stack:
        c, r = stack.pop()
        for nb in ((c + 1, r), (c - 1, r), (c, r + 1), (c, r - 1)):
            if nb in cs and nb not in seen:
                seen.add(nb)
                stack.append(nb)
    return len(seen) == len(cs)


def dominance_leq(sigma: Sequence[int], tau: Sequence[int]) -> bool:
    """True when ``sigma`` is below ``tau`` in dominance order."""
    if sum(sigma) != sum(tau):
        raise ValueError("dominance order compares partitions of equal size")
    a = b = 0
    for i in range(max(len(sigma), len(tau))):
        a += sigma[i] if i < len(sigma) else 0
        b += tau[i] if i < len(tau) else 0
        if a > b:
            return False
    return True


def partitions_of(n: int, max_part: Optional[int] = None,
                  max_len: Optional[int] = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if max_len is None:
        max_len = n

    def rec(rest, cap, length):
        if rest == 0:
            yield ()
            return
        if length == 0:
            return
        for first in range(min(rest, cap), 0, -1):
            for tail in rec(rest - first, first, length - 1):
                yield (first,) + tail

    return rec(n, max_part, max_len)


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions fitting in a ``rows`` x ``cols`` rectangle."""
    out = []
    for n in range(rows * cols + 1):
        out.extend(partitions_of(n, cols, rows))
    return out


def _beta(rho: Sequence[int], length: int) -> list[int]:
    padded = list(rho) + [0] * (length - len(rho))
    return [padded[i] - (i + 1) for i in range(length)]


def ribbon_step(tau: Sequence[int], n: int, col: int, direction: str = "add",
                cap: Optional[int] = None) -> Optional[RibbonStep]:
    """Add or remove one ``n``-ribbon anchored at column ``col``.

    ``add`` looks for the ribbon whose rightmost column is ``col``;
    ``remove`` looks for the ribbon whose leftmost column is ``col``.  Either
    ribbon is unique when it exists.  Under a column cap the sign exponent
    is ``cap - width``.
    """
    tau = partition(tau)
    if n <= 0 or col <= 0:
        raise ValueError("n and col must be positive")
    rho = conjugate(tau)
    if direction == "add":
        if cap is not None and (col > cap or len(rho) > cap):
            return None
        length = max(len(rho), col)
        beta = _beta(rho, length)
        moved = beta[col - 1] + n
        others = beta[:col - 1] + beta[col:]
        if moved in others:
            return None
        landing = 1 + sum(1 for b in others if b > moved)
        width = col - landing + 1
    elif direction == "remove":
        if col > len(rho):
            return None
        length = len(rho) + n
        beta = _beta(rho, length)
        moved = beta[col - 1] - n
        others = beta[:col - 1] + beta[col:]
        if moved in others:
            return None
        landing = 1 + sum(1 for b in others if b > moved)
        width = landing - col + 1
    else:
        raise ValueError(f"unknown direction {direction!r}")
    new_beta = sorted(others + [moved], reverse=True)
    new_rho = partition(b + i + 1 for i, b in enumerate(new_beta))
    result = conjugate(new_rho)
    if cap is not None and result and result[0] > cap:
        return None
    exponent = None if cap is None else cap - width
    return RibbonStep(result, width, exponent)


def enum_ribbon_additions(lam: Sequence[int], n: int, d: int,
                          cap: int) -> list[tuple[Partition, int]]:
    """All ``tau`` with ``tau_1 <= cap`` reachable from ``lam`` by ``d``
    successive ``n``-ribbon additions, with their signs.

    The sign of a path is ``(-1)`` to the total of ``cap - width`` over its
    ribbons.  It does not depend on the path; a disagreement raises.
    """
    lam = partition(lam)
    if lam and lam[0] > cap:
        raise ValueError(f"{lam} has more than {cap} columns")
    level = {lam: 1}
    for _ in range(d):
        nxt: dict[Partition, int] = {}
        for tau, sign in level.items():
            for col in range(1, cap + 1):
                step = ribbon_step(tau, n, col, "add", cap)
                if step is None:
                    continue
                s = sign * (-1) ** step.sign_exponent
                prev = nxt.setdefault(step.result, s)
                if prev != s:
                    raise ArithmeticError(
                        f"ribbon sign of {step.result}/{lam} depends on the path")
        level = nxt
    return sorted(level.items(), reverse=True)


@lru_cache(maxsize=None)
def n_core(tau: Partition, n: int) -> tuple[Partition, int]:
    """The ``n``-core of ``tau`` and the number of ribbons removed."""
    tau = partition(tau)
    d = 0
    while True:
        for col in range(1, (tau[0] if tau else 0) + 1):
            step = ribbon_step(tau, n, col, "remove")
            if step is not None:
                tau = step.result
                d += 1
                break
        else:
            return tau, d


def lift(lam: Sequence[int], n: int, k: int, d: int) -> Partition:
    """Add ``d`` full-width ``n``-ribbons to ``lam`` along its top.

    Each ribbon starts in column ``n - k`` and ends in column 1.
    """
    lam = partition(lam)
    nk = n - k
    if k <= 0 or nk <= 0:
        raise ValueError("need 0 < k < n")
    if not in_box(lam, k, nk):
        raise ValueError(f"{lam} does not fit in a {k} x {nk} box")
    for _ in range(d):
        step = ribbon_step(lam, n, nk, "add", nk)
        assert step is not None and step.width == nk
        lam = step.result
    return lam


def unlift(tau: Sequence[int], n: int, k: int) -> Optional[Partition]:
    """Remove the full-width ``n``-ribbon along the top of ``tau``, if any."""
    nk = n - k
    step = ribbon_step(tau, n, 1, "remove")
    if step is None or step.width != nk:
        return None
    return step.result
