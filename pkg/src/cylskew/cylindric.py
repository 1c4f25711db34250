"""Cylindric skew shapes ``lam/d/mu`` in the cylinder ``C_{k, nk}``.

The cylinder identifies cell ``(c, r)`` with ``(c - nk, r + k)``.  A shape
is stored as ``(k, nk, lam, d, mu)`` with ``lam`` inside the ``k x nk`` box;
its cells are represented by the plane skew shape ``Lam/mu`` where
``Lam = lift(lam, n, k, d)``.  Every representative lies in columns
``1..nk``.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, NamedTuple, Optional

from . import kernels
from .partitions import (Partition, SkewShape, cells, conjugate, contains,
                         enum_ribbon_additions, format_partition, in_box, lift,
                         n_core, parse_partition, partition, partitions_in_box, size,
                         unlift, ribbon_step)
from .posets import OrientedPoset
from .signed_sequences import resolve_skew_symbol, normalize, shift_all, signed
from .symfunc import (SymFunc, coproduct, linear_combination, lr_coefficient,
                      monomial_to_schur, restrict_vars, schur, skew_to_schur)

DEFAULT_ORACLE_BOUND = 12


class ShapeError(ValueError):
    """A violated shape invariant; ``invariant`` names it."""

    def __init__(self, invariant: str, message: str):
        super().__init__(f"{invariant}: {message}")
        self.invariant = invariant


class CylindricShape(NamedTuple):
    k: int
    nk: int
    lam: Partition
    d: int
    mu: Partition

    @property
    def n(self) -> int:
        return self.k + self.nk

    @property
    def outer(self) -> Partition:
        return lift(self.lam, self.n, self.k, self.d)

    def size(self) -> int:
        return size(self.outer) - size(self.mu)

    def __str__(self) -> str:
        return format_shape(self)


def _mu_condition(mu: Partition, k: int, nk: int) -> bool:
    if mu and mu[0] > nk:
        return False
    mc = list(conjugate(mu)) + [0] * nk
    return all(mc[i] >= mc[i + 1] for i in range(nk - 1)) and mc[nk - 1] >= mc[0] - k


def new_shape(k: int, nk: int, lam, d: int, mu) -> CylindricShape:
    """Validate and build ``lam/d/mu`` in ``C_{k, nk}``."""
    if k < 1 or nk < 1:
        raise ShapeError("cylinder", f"need k >= 1 and n-k >= 1, got k={k}, n-k={nk}")
    if d < 0:
        raise ShapeError("winding", f"d must be non-negative, got {d}")
    lam, mu = partition(lam), partition(mu)
    if not in_box(lam, k, nk):
        raise ShapeError("lam-in-box", f"{format_partition(lam)} is not inside {k} x {nk}")
    if not _mu_condition(mu, k, nk):
        raise ShapeError("mu-columns",
                         f"columns of {format_partition(mu)} violate "
                         f"mu'_1 >= ... >= mu'_{nk} >= mu'_1 - {k}")
    outer = lift(lam, k + nk, k, d)
    if not contains(outer, mu):
        raise ShapeError("mu-in-outer", f"{format_partition(mu)} is not inside "
                                        f"{format_partition(outer)}")
    return CylindricShape(k, nk, lam, d, mu)


def canonicalize(c: CylindricShape) -> CylindricShape:
    """Lower ``d`` while the base partition has a full-width top ribbon."""
    mu, d = c.mu, c.d
    while d >= 1:
        down = unlift(mu, c.n, c.k)
        if down is None:
            break
        mu, d = down, d - 1
    return CylindricShape(c.k, c.nk, c.lam, d, mu)


def raise_origin(c: CylindricShape) -> Optional[CylindricShape]:
    """The same shape written with one more winding, when possible."""
    step = ribbon_step(c.mu, c.n, c.nk, "add", c.nk)
    if step is None or step.width != c.nk:
        return None
    return CylindricShape(c.k, c.nk, c.lam, c.d + 1, step.result)


# Text forms --------------------------------------------------------------

def format_shape(c: CylindricShape) -> str:
    fmt = lambda p: ",".join(map(str, p))
    return f"k={c.k},nk={c.nk};lam={fmt(c.lam)};d={c.d};mu={fmt(c.mu)}"


def parse_shape(text: str) -> CylindricShape:
    """Parse ``"k=3,nk=4;lam=3,3;d=2;mu=2,1"`` or the JSON form."""
    text = text.strip()
    if text.startswith("{"):
        data = json.loads(text)
        return new_shape(int(data["k"]), int(data["nk"]), data.get("lam", []),
                         int(data.get("d", 0)), data.get("mu", []))
    fields = {}
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        key, sep, value = chunk.partition("=")
        if not sep:
            raise ValueError(f"expected key=value in {chunk!r}")
        if key.strip() in ("lam", "mu"):
            fields[key.strip()] = parse_partition(value)
            continue
        for item in chunk.split(","):
            kk, sep, vv = item.partition("=")
            if not sep:
                raise ValueError(f"expected key=value in {item!r}")
            fields[kk.strip()] = int(vv)
    missing = {"k", "nk"} - fields.keys()
    if missing:
        raise ValueError(f"missing {sorted(missing)} in shape {text!r}")
    return new_shape(fields["k"], fields["nk"], fields.get("lam", ()),
                     fields.get("d", 0), fields.get("mu", ()))


def shape_json(c: CylindricShape) -> dict:
    return {"k": c.k, "nk": c.nk, "lam": list(c.lam), "d": c.d, "mu": list(c.mu)}


# Cells and geometry ------------------------------------------------------

def _reduce(cell, k, nk):
    c, r = cell
    m = (c - 1) // nk
    return (c - m * nk, r + m * k)


def shape_cells(c: CylindricShape) -> list[tuple[int, int]]:
    return cells(c.outer, c.mu)


def constraints(c: CylindricShape) -> tuple[list, list, list]:
    """Cells plus tableau constraint masks: ``weak[y]`` / ``strict[y]`` list
    the cells that must hold a value ``<=`` / ``<`` the value at ``y``."""
    cs = shape_cells(c)
    index = {x: i for i, x in enumerate(cs)}
    weak = [0] * len(cs)
    strict = [0] * len(cs)
    for x, i in index.items():
        right = _reduce((x[0] + 1, x[1]), c.k, c.nk)
        up = _reduce((x[0], x[1] + 1), c.k, c.nk)
        if right in index:
            weak[index[right]] |= 1 << i
        if up in index:
            strict[index[up]] |= 1 << i
    return cs, weak, strict


def is_toric(c: CylindricShape) -> bool:
    """Every cylinder row (row index mod ``k``) holds at most ``nk`` cells."""
    rows: dict = {}
    for _, r in shape_cells(c):
        rows[r % c.k] = rows.get(r % c.k, 0) + 1
    return all(v <= c.nk for v in rows.values())


def _lifted_components(c: CylindricShape):
    """Components with the winding numbers met while lifting them to the plane."""
    cs = set(shape_cells(c))
    seen: dict = {}
    out = []
    for start in sorted(cs):
        if start in seen:
            continue
        seen[start] = start
        comp, windings, stack = [start], set(), [start]
        while stack:
            x = stack.pop()
            px = seen[x]
            for dc, dr in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                plane = (px[0] + dc, px[1] + dr)
                y = _reduce(plane, c.k, c.nk)
                if y not in cs:
                    continue
                if y not in seen:
                    seen[y] = plane
                    comp.append(y)
                    stack.append(y)
                elif seen[y] != plane:
                    windings.add(abs(plane[1] - seen[y][1]) // c.k)
        out.append((comp, windings))
    return out


def is_skew(c: CylindricShape) -> bool:
    """No connected component wraps around the cylinder."""
    if c.nk == 1:
        # a single column: every cell lies on one strict chain
        return True
    return all(not w for _, w in _lifted_components(c))


def is_cylindric_ribbon(c: CylindricShape) -> bool:
    """Connected and free of 2x2 blocks as a periodic subset of the plane."""
    comps = _lifted_components(c)
    if len(comps) != 1:
        return False
    _, windings = comps[0]
    if not windings or math.gcd(*windings) != 1:
        return False
    cs = set(shape_cells(c))
    for x in cs:
        block = [_reduce((x[0] + a, x[1] + b), c.k, c.nk) for a, b in ((1, 0), (0, 1), (1, 1))]
        if all(y in cs for y in block):
            return False
    return True


def to_poset(c: CylindricShape) -> OrientedPoset:
    """Cells as an oriented poset: vertical edges strict, horizontal weak.

    With ``n - k = 1`` a horizontal step is implied by a vertical chain and
    is dropped.  With ``k = 1`` a vertical step is a chain of weak ones, so
    no oriented poset exists.
    """
    if c.k < 2:
        raise ValueError("the poset view needs k >= 2")
    cs, weak, strict = constraints(c)
    rel = []
    for y in range(len(cs)):
        for x in range(len(cs)):
            if weak[y] >> x & 1:
                rel.append((x, y, False))
            if strict[y] >> x & 1:
                rel.append((x, y, True))
    return OrientedPoset.from_relations(len(cs), rel)


# Expansions --------------------------------------------------------------

def oracle_monomial(c: CylindricShape, bound: int = DEFAULT_ORACLE_BOUND) -> SymFunc:
    """Count semistandard cylindric tableaux by content."""
    cs, weak, strict = constraints(c)
    if len(cs) > bound:
        raise ValueError(f"{len(cs)} cells exceeds the oracle bound {bound}")
    m = len(cs)
    counts = kernels.count_by_composition(m, weak, strict)
    out = {}
    for code, v in enumerate(counts):
        if not v:
            continue
        parts, last = [], 0
        for s in range(1, m):
            if code >> (s - 1) & 1:
                parts.append(s - last)
                last = s
        if m:
            parts.append(m - last)
        if all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1)):
            out[tuple(parts)] = v
    return SymFunc("monomial", out, m)


class GKTerm(NamedTuple):
    r: tuple
    shifted: tuple
    normal: tuple
    delta: int
    sign: int
    shape: SkewShape


def gk_terms(c: CylindricShape) -> list[GKTerm]:
    """Non-vanishing terms of the signed-sequence expansion, with bookkeeping."""
    outer = c.outer
    L, n = c.nk, c.n
    base = tuple(conjugate(outer)) + (0,) * (L - len(conjugate(outer)))
    total = size(outer)
    lo = [-((L + b) // n) for b in base]              # r_i * n >= -L - b
    hi = [(total + L - b) // n for b in base]         # r_i * n <= total + L - b
    out = []

    def rec(i, acc, rest):
        if i == L - 1:
            last = -rest
            if lo[i] <= last <= hi[i]:
                emit(tuple(acc + [last]))
            return
        tail_lo = sum(lo[i + 1:])
        tail_hi = sum(hi[i + 1:])
        for ri in range(lo[i], hi[i] + 1):
            if tail_lo <= -(rest + ri) <= tail_hi:
                rec(i + 1, acc + [ri], rest + ri)

    def emit(r):
        alpha = shift_all(signed(base), r, n)
        norm = normalize(alpha)
        res = resolve_skew_symbol(alpha, c.mu)
        if res is None:
            return
        sign, shape = res
        if c.d >= 1:
            beta = norm.seq.seq
            assert all(beta[j] >= beta[j + 1] for j in range(L - 1)) and beta[0] >= c.k + 1
        out.append(GKTerm(r, alpha.seq, norm.seq.seq, norm.delta, sign, shape))

    rec(0, [], 0)
    return out


def expand_gk(c: CylindricShape) -> list[tuple[int, SkewShape]]:
    """Signed skew shapes whose Schur functions sum to ``s_c``."""
    return [(t.sign, t.shape) for t in gk_terms(c)]


def gk_to_schur(terms) -> SymFunc:
    return linear_combination("schur", ((s, skew_to_schur(shape)) for s, shape in terms))


@lru_cache(maxsize=None)
def _ribbon_sum_coeffs(lam: Partition, d: int, mu: Partition, k: int, nk: int) -> tuple:
    acc: dict = {}
    for tau, eps in enum_ribbon_additions(lam, k + nk, d, nk):
        if not contains(tau, mu):
            continue
        for nu, v in skew_to_schur(SkewShape(tau, mu)).coeffs.items():
            acc[nu] = acc.get(nu, 0) + eps * v
    return tuple(sorted((nu, v) for nu, v in acc.items() if v))


def _ribbon_sum(lam, d, mu, k, nk) -> SymFunc:
    """Signed ribbon sum; skew terms with ``mu`` outside ``tau`` vanish."""
    lam, mu = partition(lam), partition(mu)
    degree = size(lam) + d * (k + nk) - size(mu)
    return SymFunc("schur", dict(_ribbon_sum_coeffs(lam, d, mu, k, nk)), max(degree, 0))


def expand_ribbons(c: CylindricShape) -> SymFunc:
    """``s_c`` as the signed sum of ``s_{tau/mu}`` over ribbon additions to ``lam``."""
    return _ribbon_sum(c.lam, c.d, c.mu, c.k, c.nk)


def gw_invariant(lam, d: int, mu, nu, k: int, n: int) -> int:
    """Signed ribbon sum of Littlewood-Richardson coefficients."""
    nk = n - k
    lam, mu, nu = partition(lam), partition(mu), partition(nu)
    for name, p in (("lam", lam), ("mu", mu), ("nu", nu)):
        if not in_box(p, k, nk):
            raise ValueError(f"{name}={format_partition(p)} is not inside {k} x {nk}")
    if size(mu) + size(nu) != size(lam) + d * n:
        return 0
    return sum(eps * lr_coefficient(tau, mu, nu)
               for tau, eps in enum_ribbon_additions(lam, n, d, nk))


def postnikov_check(c: CylindricShape, bound: int = DEFAULT_ORACLE_BOUND) -> bool:
    """Tableau count in ``k`` variables against the GW expansion."""
    if not in_box(c.mu, c.k, c.nk):
        raise ValueError("postnikov_check needs mu inside the k x (n-k) box")
    lhs = restrict_vars(monomial_to_schur(oracle_monomial(c, bound)), c.k)
    deg = c.size()
    rhs = {}
    for nu in partitions_in_box(c.k, c.nk):
        if size(nu) == deg:
            v = gw_invariant(c.lam, c.d, c.mu, nu, c.k, c.n)
            if v:
                rhs[nu] = v
    return lhs == SymFunc("schur", rhs)


def hook_shape(k: int, nk: int) -> CylindricShape:
    return new_shape(k, nk, (), 1, ())


def hook_expansion(k: int, nk: int) -> SymFunc:
    """Alternating sum of hooks ``(nk - i, 1^(k + i))``."""
    if k < 1 or nk < 1:
        raise ValueError("need k, n-k >= 1")
    return SymFunc("schur", {(nk - i,) + (1,) * (k + i): (-1) ** i for i in range(nk)})


def split_box(f: SymFunc, k: int) -> tuple[SymFunc, SymFunc]:
    """``(terms with at most k rows, the rest)``."""
    low = {nu: v for nu, v in f.coeffs.items() if len(nu) <= k}
    high = {nu: v for nu, v in f.coeffs.items() if len(nu) > k}
    return SymFunc("schur", low, f.degree), SymFunc("schur", high, f.degree)


def ribbon_decomposition(c: CylindricShape) -> tuple[SymFunc, bool]:
    """Box part of a cylindric ribbon, and whether its tail is the hook sum
    and its box part is non-negative."""
    if not is_cylindric_ribbon(c):
        raise ValueError(f"{format_shape(c)} is not a cylindric ribbon")
    box, tail = split_box(expand_ribbons(c), c.k)
    ok = tail == hook_expansion(c.k, c.nk) and all(v >= 0 for v in box.coeffs.values())
    return box, ok


def min_negative_vars(c: CylindricShape) -> Optional[int]:
    """Fewest variables in which ``s_c`` shows a negative Schur coefficient."""
    if is_skew(c):
        return None
    f = expand_ribbons(c)
    for v in range(1, (f.degree or 0) + 1):
        if any(x < 0 for x in restrict_vars(f, v).coeffs.values()):
            return v
    return None


class CoproductWitness(NamedTuple):
    lam: Partition
    m: int
    column_coeff: int
    near_column_coeff: int


def coproduct_witness(c: CylindricShape) -> Optional[CoproductWitness]:
    """Check the coproduct coefficients at ``s_lam ⊗ s_(1^n)`` and
    ``s_lam ⊗ s_(2,1^(n-2))`` for every ``lam`` in the shape minus its top ribbon."""
    if is_skew(c):
        raise ValueError(f"{format_shape(c)} is a skew shape")
    if c.nk < 2:
        raise ValueError("need n-k >= 2")
    n = c.n
    lower = _ribbon_sum(c.lam, c.d - 1, c.mu, c.k, c.nk)
    gamma = coproduct(expand_ribbons(c))
    column = (1,) * n
    near = (2,) + (1,) * (n - 2)
    sign = (-1) ** (c.nk - 1)
    first = None
    for lam, m in lower.items():
        a, b = gamma[(lam, column)], gamma[(lam, near)]
        if a != sign * m or b != -sign * m:
            return None
        if first is None:
            first = CoproductWitness(lam, m, a, b)
    return first


# Cylindric Schur basis ---------------------------------------------------

class CylSchurResult(NamedTuple):
    ok: bool
    terms: dict
    failure: Optional[str]

    def text(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for (nu, e), v in sorted(self.terms.items(), key=lambda t: (t[0][1], t[0][0]), reverse=True):
            body = f"cs[{','.join(map(str, nu))}/{e}]"
            mag = abs(v)
            term = body if mag == 1 else f"{mag}*{body}"
            if not parts:
                parts.append(term if v > 0 else f"-{term}")
            else:
                parts.append(("+ " if v > 0 else "- ") + term)
        return " ".join(parts)


def cylindric_schur(nu, e: int, k: int, nk: int) -> SymFunc:
    return _ribbon_sum(nu, e, (), k, nk)


def cyl_schur_decompose(f: SymFunc, k: int, nk: int) -> CylSchurResult:
    """Peel cylindric Schur functions off ``f`` from the lexicographically
    largest long row-capped term down."""
    n = k + nk
    rest = dict(f.coeffs)
    terms: dict = {}
    while True:
        long = [s for s in rest if len(s) > k]
        if not long:
            break
        sigma = max(long)
        if sigma[0] > nk:
            return CylSchurResult(False, terms, f"s{list(sigma)} has a row longer than {nk}")
        nu, e = n_core(sigma, n)
        if not in_box(nu, k, nk):
            return CylSchurResult(False, terms, f"core {list(nu)} of s{list(sigma)} leaves the box")
        if (nu, e) in terms:
            return CylSchurResult(False, terms, f"core {list(nu)}/{e} needed twice")
        g = cylindric_schur(nu, e, k, nk)
        coeff = rest[sigma] * g[sigma]
        terms[(nu, e)] = coeff
        for tau, v in g.coeffs.items():
            w = rest.get(tau, 0) - coeff * v
            if w:
                rest[tau] = w
            else:
                rest.pop(tau, None)
    for nu, v in rest.items():
        terms[(nu, 0)] = v
    bad = sorted((key, v) for key, v in terms.items() if v < 0)
    if bad:
        (nu, e), v = bad[0]
        return CylSchurResult(False, terms, f"negative coefficient {v} on {list(nu)}/{e}")
    return CylSchurResult(True, terms, None)


def cyl_schur_expand(c: CylindricShape) -> CylSchurResult:
    return cyl_schur_decompose(expand_ribbons(c), c.k, c.nk)


def errorterm_failure(c: CylindricShape) -> Optional[str]:
    """Check the refined expansion through the shape with one fewer winding."""
    if c.d < 1:
        return None
    f = expand_ribbons(c)
    box, _ = split_box(f, c.k)
    if any(v < 0 for v in box.coeffs.values()):
        return f"{format_shape(c)}: negative box coefficient"
    lower = cyl_schur_decompose(_ribbon_sum(c.lam, c.d - 1, c.mu, c.k, c.nk), c.k, c.nk)
    if not lower.ok:
        return f"{format_shape(c)}: lower shape does not peel ({lower.failure})"
    rhs = linear_combination("schur", [(1, box)] + [
        (v, cylindric_schur(nu, e + 1, c.k, c.nk)) for (nu, e), v in lower.terms.items()])
    if rhs != f:
        return f"{format_shape(c)}: refined expansion differs by {f - rhs}"
    return None


def verify_errorterm(k_max: int, nk_max: int, d_max: int) -> list[str]:
    """Failures over every valid shape with ``mu`` in the box and ``1 <= d <= d_max``."""
    failures = []
    for c in iter_shapes_box(k_max, nk_max, d_max, d_min=1):
        msg = errorterm_failure(c)
        if msg:
            failures.append(msg)
    return failures


def _rank(rows) -> int:
    rows = [[Fraction(x) for x in row] for row in rows]
    rank, col = 0, 0
    width = len(rows[0]) if rows else 0
    while rank < len(rows) and col < width:
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            col += 1
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                factor = rows[i][col] / rows[rank][col]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


def independence_check(k: int, nk: int, degree: int) -> bool:
    """Cylindric Schur functions of one degree have independent Schur expansions."""
    n = k + nk
    funcs = [cylindric_schur(nu, (degree - size(nu)) // n, k, nk)
             for nu in partitions_in_box(k, nk)
             if size(nu) <= degree and (degree - size(nu)) % n == 0]
    if not funcs:
        return True
    keys = sorted({nu for f in funcs for nu in f.coeffs})
    return _rank([[f[nu] for nu in keys] for f in funcs]) == len(funcs)


# Enumeration -------------------------------------------------------------

def _mus_inside(outer: Partition, k: int, nk: int, min_size: int) -> Iterator[Partition]:
    """Partitions ``mu`` inside ``outer`` with at least ``min_size`` cells."""
    rows = len(outer)
    suffix = [0] * (rows + 1)
    for i in range(rows - 1, -1, -1):
        suffix[i] = suffix[i + 1] + outer[i]

    def rec(i, cap, acc, total):
        if total + suffix[i] < min_size:
            return
        if i == rows or cap == 0:
            if total >= min_size:
                yield partition(acc)
            return
        for p in range(min(cap, outer[i]), -1, -1):
            yield from rec(i + 1, p, acc + [p], total + p)

    for mu in rec(0, nk, [], 0):
        if _mu_condition(mu, k, nk):
            yield mu


def iter_shapes(k: int, nk: int, max_cells: int,
                min_cells: int = 0) -> Iterator[CylindricShape]:
    """Canonical (minimal-winding) shapes with ``min_cells..max_cells`` cells.

    Windings stop once two consecutive values yield nothing.
    """
    n = k + nk
    empty = 0
    d = 0
    while empty < 2:
        found = False
        for lam in partitions_in_box(k, nk):
            outer = lift(lam, n, k, d)
            for mu in _mus_inside(outer, k, nk, size(outer) - max_cells):
                c = CylindricShape(k, nk, lam, d, mu)
                if c.size() < min_cells:
                    continue
                if canonicalize(c) != c:
                    continue
                found = True
                yield c
        empty = 0 if found else empty + 1
        d += 1


def iter_shapes_box(k_max: int, nk_max: int, d_max: int, d_min: int = 0,
                    k_min: int = 1, nk_min: int = 1) -> Iterator[CylindricShape]:
    """Valid shapes with ``mu`` inside the box and ``d_min <= d <= d_max``."""
    for k in range(k_min, k_max + 1):
        for nk in range(nk_min, nk_max + 1):
            box = partitions_in_box(k, nk)
            for d in range(d_min, d_max + 1):
                for lam in box:
                    outer = lift(lam, k + nk, k, d)
                    for mu in box:
                        if contains(outer, mu):
                            yield CylindricShape(k, nk, lam, d, mu)


def iter_ribbons(n_max: int) -> Iterator[CylindricShape]:
    """Canonical cylindric ribbons in every ``C_{k, n-k}`` with ``n <= n_max``."""
    for n in range(2, n_max + 1):
        for k in range(1, n):
            for c in iter_shapes(k, n - k, n, min_cells=n):
                if is_cylindric_ribbon(c):
                    yield c
