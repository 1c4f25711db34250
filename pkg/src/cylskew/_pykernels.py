"""Pure-Python kernels; reference implementation and import-time fallback.

``count_by_composition`` counts order-preserving level maps on a small
constraint digraph, bucketed by the composition of level sizes.
Compositions of ``m`` are coded by their set of partial sums: bit ``s - 1``
is set when ``s`` is a partial sum, so ``(m,)`` is code 0 and ``(1,)*m`` is
``2**(m-1) - 1``.

``lr_expand`` enumerates Littlewood-Richardson fillings of a skew shape
row by row and returns the multiset of their contents.
"""

from __future__ import annotations


def count_by_composition(m, weak, strict):
    """Surjective maps onto ``1..l`` respecting the constraints, by content.

    ``weak[x]`` and ``strict[x]`` are bitmasks of the elements that must
    receive a value ``<=`` (resp. ``<``) the value of ``x``.
    """
    if m == 0:
        return [1]
    levels = [dict() for _ in range(m + 1)]
    levels[0][0] = [1]
    for s in range(m):
        for ideal, vec in levels[s].items():
            avail = 0
            for x in range(m):
                if not (ideal >> x) & 1 and strict[x] & ~ideal == 0:
                    avail |= 1 << x
            block = avail
            while block:
                target = ideal | block
                ok = True
                b = block
                while b:
                    low = b & -b
                    x = low.bit_length() - 1
                    if weak[x] & ~target:
                        ok = False
                        break
                    b ^= low
                if ok:
                    t = bin(target).count("1")
                    row = levels[t].get(target)
                    if row is None:
                        row = levels[t][target] = [0] * (1 << (t - 1))
                    if s == 0:
                        row[0] += 1
                    else:
                        off = 1 << (s - 1)
                        for c, v in enumerate(vec):
                            if v:
                                row[c + off] += v
                block = (block - 1) & avail
    return levels[m].get((1 << m) - 1, [0] * (1 << (m - 1)))


def lr_expand(outer, inner):
    """Contents of all LR fillings of ``outer/inner`` (English convention).

    Rows are filled top to bottom.  A row is weakly increasing, so it is
    fixed by how many cells take each value; reading it right to left, the
    lattice condition reduces to ``before[v] + a[v] <= before[v - 1]``.
    Returns a dict mapping content partitions to multiplicities.
    """
    rows = len(outer)
    inner = list(inner) + [0] * (rows - len(inner))
    result = {}
    counts = [0] * (rows + 2)

    def fill_row(i, above):
        if i == rows:
            key = tuple(c for c in counts[1:] if c)
            result[key] = result.get(key, 0) + 1
            return
        lo, hi = inner[i], outer[i]
        before = counts[:]
        row = {}

        def place(v, col):
            if col == hi:
                fill_row(i + 1, dict(row))
                return
            if v > i + 1:
                return
            room = hi - col
            limit = room if v == 1 else min(room, before[v - 1] - before[v])
            for a in range(limit, -1, -1):
                if any(above.get(j, 0) >= v for j in range(col + 1, col + a + 1)):
                    continue
                for j in range(col + 1, col + a + 1):
                    row[j] = v
                counts[v] += a
                place(v + 1, col + a)
                counts[v] -= a
                for j in range(col + 1, col + a + 1):
                    del row[j]

        place(1, lo)

    fill_row(0, {})
    return result
