"""Slow, independent brute-force references used by the test suite.

Nothing here calls the package's counting kernels, LR code, ribbon moves
or isomorphism machinery.
"""

import itertools
from collections import Counter


def partitions(n, cap=None):
    cap = n if cap is None else cap
    if n == 0:
        yield ()
        return
    for first in range(min(n, cap), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def compositions(n):
    if n == 0:
        yield ()
        return
    for first in range(1, n + 1):
        for rest in compositions(n - first):
            yield (first,) + rest


def words(content):
    """Distinct words with ``content[i]`` copies of letter ``i + 1``."""
    letters = [i + 1 for i, a in enumerate(content) for _ in range(a)]
    return set(itertools.permutations(letters))


def skew_cells(outer, inner=()):
    inner = tuple(inner) + (0,) * (len(outer) - len(inner))
    return [(c, r) for r, top in enumerate(outer, 1) for c in range(inner[r - 1] + 1, top + 1)]


def ssyt_monomial(outer, inner=()):
    """Monomial expansion ``{partition: count}`` of a skew Schur function."""
    cs = skew_cells(outer, inner)
    pos = set(cs)
    out = {}
    for alpha in partitions(len(cs)):
        count = 0
        for w in words(alpha):
            t = dict(zip(cs, w))
            if all(t[(c + 1, r)] >= t[(c, r)] for c, r in cs if (c + 1, r) in pos) and \
               all(t[(c, r + 1)] > t[(c, r)] for c, r in cs if (c, r + 1) in pos):
                count += 1
        if count:
            out[alpha] = count
    return out


def cylindric_monomial(k, nk, outer, inner):
    """Tableaux on ``outer/inner`` whose periodic extension by
    ``(c, r) -> (c + nk, r - k)`` is semistandard in the plane."""
    cs = skew_cells(outer, inner)
    home = {}
    for x in cs:
        for j in range(-3, 4):
            home[(x[0] + j * nk, x[1] - j * k)] = x
    out = {}
    for alpha in partitions(len(cs)):
        count = 0
        for w in words(alpha):
            t = dict(zip(cs, w))
            ok = True
            for (c, r), x in home.items():
                right, up = home.get((c + 1, r)), home.get((c, r + 1))
                if right is not None and t[right] < t[x]:
                    ok = False
                    break
                if up is not None and t[up] <= t[x]:
                    ok = False
                    break
            count += ok
        if count:
            out[alpha] = count
    return out


def kostka(lam, content):
    return ssyt_monomial(lam).get(tuple(sorted(content, reverse=True)), 0)


def is_ribbon_cells(cs):
    cs = set(cs)
    if not cs:
        return False
    if any({(c + 1, r), (c, r + 1), (c + 1, r + 1)} <= cs for c, r in cs):
        return False
    seen, stack = set(), [next(iter(cs))]
    while stack:
        c, r = stack.pop()
        if (c, r) in seen:
            continue
        seen.add((c, r))
        stack.extend(nb for nb in ((c + 1, r), (c - 1, r), (c, r + 1), (c, r - 1)) if nb in cs)
    return seen == cs


def contains(lam, mu):
    return len(mu) <= len(lam) and all(a >= b for a, b in zip(lam, mu))


def removable_ribbons(tau, n):
    """All ``rho`` with ``tau/rho`` an ``n``-ribbon."""
    out = []
    for rho in partitions(sum(tau) - n):
        if contains(tau, rho) and is_ribbon_cells(skew_cells(tau, rho)):
            out.append(rho)
    return out


def n_core(tau, n):
    d = 0
    while True:
        opts = removable_ribbons(tau, n)
        if not opts:
            return tau, d
        tau, d = opts[0], d + 1


def conjugate(lam):
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0] if lam else 0))


# posets ----------------------------------------------------------------

def p_partition_m(n, edges):
    """``{composition: [M_alpha]}`` by counting fillings with exact content."""
    out = {}
    for alpha in compositions(n):
        count = 0
        for w in words(alpha):
            if all((w[a] < w[b]) if s else (w[a] <= w[b]) for a, b, s in edges):
                count += 1
        if count:
            out[alpha] = count
    return out


def _closure(n, pairs):
    below = [set() for _ in range(n)]
    for a, b in pairs:
        below[b].add(a)
    changed = True
    while changed:
        changed = False
        for b in range(n):
            extra = set().union(*(below[a] for a in below[b])) - below[b]
            if extra:
                below[b] |= extra
                changed = True
    return below


def all_posets(n):
    """Strict orders on ``range(n)`` as frozensets of pairs (labelled)."""
    pairs = [(a, b) for a in range(n) for b in range(n) if a != b]
    out = []
    for bits in range(1 << len(pairs)):
        rel = {pairs[i] for i in range(len(pairs)) if bits >> i & 1}
        if any((b, a) in rel for a, b in rel):
            continue
        if all((a, c) in rel for a, b in rel for b2, c in rel if b == b2):
            out.append(frozenset(rel))
    return out


def hasse(n, rel):
    return sorted((a, b) for a, b in rel
                  if not any((a, m) in rel and (m, b) in rel for m in range(n)))


def canon(n, flagged):
    return min(tuple(sorted((p[a], p[b], s) for a, b, s in flagged))
               for p in itertools.permutations(range(n)))


def oriented_poset_classes(n):
    """Isomorphism classes of oriented posets: {canonical edges: is_labelled}."""
    classes = {}
    for rel in all_posets(n):
        cov = hasse(n, rel)
        for flags in itertools.product((False, True), repeat=len(cov)):
            edges = [(a, b, s) for (a, b), s in zip(cov, flags)]
            key = canon(n, edges)
            if key not in classes:
                classes[key] = is_labelled(n, edges)
    return classes


def is_labelled(n, edges):
    """Some labelling makes exactly the strict edges descents."""
    for omega in itertools.permutations(range(n)):
        if all((omega[a] > omega[b]) == s for a, b, s in edges):
            return True
    return False


def unoriented_count(n):
    return len({canon(n, [(a, b, False) for a, b in hasse(n, rel)]) for rel in all_posets(n)})


def lr_by_ssyt(outer, inner):
    """Schur expansion of a skew shape by peeling the monomial expansion."""
    mono = Counter(ssyt_monomial(outer, inner))
    out = {}
    size = sum(outer) - sum(inner)
    while mono:
        lam = max(mono)
        c = mono[lam]
        out[lam] = c
        for mu, v in ssyt_monomial(lam).items():
            mono[mu] -= c * v
            if not mono[mu]:
                del mono[mu]
        assert all(sum(p) == size for p in mono)
    return out


def subpartitions(outer, min_size=0):
    """Partitions inside ``outer`` with at least ``min_size`` cells."""
    suffix = [sum(outer[i:]) for i in range(len(outer) + 1)]

    def rec(i, cap, acc, total):
        if total + suffix[i] < min_size:
            return
        if i == len(outer) or cap == 0:
            if total >= min_size:
                yield tuple(acc)
            return
        for p in range(min(cap, outer[i]), -1, -1):
            yield from rec(i + 1, p, acc + [p] if p else acc, total + p)

    yield from rec(0, outer[0] if outer else 0, [], 0)
