"""Signed integer sequences and their reordering normal form.

A signed sequence is a fixed-length integer sequence with a purely
symbolic sign.  Swapping two adjacent entries while moving the left one up
by one and the right one down by one flips the sign; the normal form is
the unique equivalent sequence whose shifted entries ``seq[i] - i`` are
strictly decreasing.  Sequences that hit a repeated shifted entry are
equivalent to their own negative and normalize to :data:`ZERO`.
"""

from __future__ import annotations

from typing import NamedTuple, Optional, Sequence

from .partitions import Partition, SkewShape, conjugate, contains, partition


class SignedSequence(NamedTuple):
    sign: int
    seq: tuple

    def __neg__(self) -> "SignedSequence":
        return SignedSequence(-self.sign, self.seq)

    def __str__(self) -> str:
        return ("-" if self.sign < 0 else "") + ",".join(map(str, self.seq))


class Normalized(NamedTuple):
    seq: SignedSequence
    delta: int


ZERO = None


def signed(seq: Sequence[int], sign: int = 1) -> SignedSequence:
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    return SignedSequence(sign, tuple(int(a) for a in seq))


def parse_signed(text: str) -> SignedSequence:
    """Parse ``"-7,4,0,-2"``: a leading ``-`` (or ``+``) is the symbolic sign.

    Wrap the entries in parentheses, ``"(-7,4)"``, to start with a
    negative entry under a positive sign.
    """
    text = text.strip()
    sign = 1
    if text[:1] in ("-", "+"):
        sign, text = (-1 if text[0] == "-" else 1), text[1:]
    body = text.strip().strip("()")
    return signed([int(t) for t in body.split(",")] if body else [], sign)


def format_signed(alpha: SignedSequence) -> str:
    return ("-" if alpha.sign < 0 else "") + "(" + ",".join(map(str, alpha.seq)) + ")"


def normalize(alpha: SignedSequence) -> Optional[Normalized]:
    """Normal form of ``alpha`` with the number of transpositions used.

    Returns ``ZERO`` (``None``) when two shifted entries coincide.  The
    transposition count is the inversion number of the sort; the returned
    sign already includes its parity.
    """
    shifted = [a - i for i, a in enumerate(alpha.seq)]
    if len(set(shifted)) != len(shifted):
        return ZERO
    delta = sum(1 for i in range(len(shifted)) for j in range(i + 1, len(shifted))
                if shifted[i] < shifted[j])
    ordered = sorted(shifted, reverse=True)
    beta = tuple(b + i for i, b in enumerate(ordered))
    return Normalized(SignedSequence(alpha.sign * (-1) ** delta, beta), delta)


def shift(alpha: SignedSequence, i: int, m: int) -> SignedSequence:
    """Add ``m`` to entry ``i`` (1-based); the sign is untouched."""
    if not 1 <= i <= len(alpha.seq):
        raise IndexError(f"index {i} out of range for length {len(alpha.seq)}")
    seq = list(alpha.seq)
    seq[i - 1] += m
    return SignedSequence(alpha.sign, tuple(seq))


def shift_all(alpha: SignedSequence, r: Sequence[int], n: int) -> SignedSequence:
    """Add ``r[i] * n`` to every entry; the sign is untouched."""
    if len(r) != len(alpha.seq):
        raise ValueError("shift vector has the wrong length")
    return SignedSequence(alpha.sign, tuple(a + ri * n for a, ri in zip(alpha.seq, r)))


def resolve_skew_symbol(alpha: SignedSequence,
                        mu: Sequence[int]) -> Optional[tuple[int, SkewShape]]:
    """Interpret ``alpha`` as the skew symbol ``s_{alpha'/mu}``.

    Returns ``(sign, tau/mu)`` or ``ZERO`` when the symbol vanishes.
    """
    norm = normalize(alpha)
    if norm is ZERO:
        return ZERO
    beta = norm.seq.seq
    if any(b < 0 for b in beta) or any(beta[i] < beta[i + 1] for i in range(len(beta) - 1)):
        return ZERO
    tau = conjugate(partition(beta))
    mu = partition(mu)
    if not contains(tau, mu):
        return ZERO
    return norm.seq.sign, SkewShape(tau, mu)


def sequence_of(lam: Partition, length: int) -> tuple:
    """``lam`` padded with zeros to ``length`` entries."""
    if len(lam) > length:
        raise ValueError(f"{lam} has more than {length} parts")
    return tuple(lam) + (0,) * (length - len(lam))
