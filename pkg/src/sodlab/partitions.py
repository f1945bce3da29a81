"""Partition and box combinatorics.

Partitions are stored canonically as tuples of weakly decreasing positive
integers with trailing zeros stripped; the zero partition is the empty
tuple.  Padding to a fixed length is always an explicit operation, so
statements about fixed-length weight tuples stay expressible.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterator

from .errors import VerificationError

Partition = tuple  # weakly decreasing tuple of nonnegative ints, canonical


def canon(parts) -> Partition:
    """Canonical form: strip trailing zeros, validate weak decrease."""
    parts = tuple(int(p) for p in parts)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"negative part in {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def pad(lam, length: int) -> tuple:
    """Pad with zeros on the right to exactly `length` entries."""
    if len(lam) > length:
        raise ValueError(f"{lam} has more than {length} parts")
    return tuple(lam) + (0,) * (length - len(lam))


def size(lam) -> int:
    return sum(lam)


@dataclass(frozen=True)
class Box:
    """Partitions of height <= height and width <= width.

    A box with negative height or width is empty; if either is zero the
    box is the singleton containing only the zero partition.
    """

    height: int
    width: int

    @property
    def is_empty(self) -> bool:
        return self.height < 0 or self.width < 0

    def __contains__(self, lam) -> bool:
        if self.is_empty:
            return False
        lam = canon(lam)
        if len(lam) > max(self.height, 0):
            return False
        return not lam or lam[0] <= self.width

    def cardinality(self) -> int:
        if self.is_empty:
            return 0
        if self.height == 0 or self.width == 0:
            return 1
        return math.comb(self.height + self.width, self.height)


def box_enumerate(box: Box) -> list:
    """All partitions in `box`, ascending in lex order of padded tuples.

    This is the reverse of the usual largest-first lexicographic listing;
    the zero partition comes first and the full rectangle last.
    """
    if box.is_empty:
        return []
    if box.height == 0 or box.width == 0:
        return [()]

    def gen(height, width):
        if height == 0:
            yield ()
            return
        for first in range(width + 1):
            for rest in gen(height - 1, first):
                yield (first,) + rest

    return [canon(p) for p in gen(box.height, box.width)]


def transpose(lam) -> Partition:
    """Conjugate diagram: row i of the transpose counts parts >= i."""
    lam = canon(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= i) for i in range(1, lam[0] + 1))


def shift(nu, i: int, length: int) -> tuple:
    """Pad `nu` to `length` parts and add `i` to every padded part."""
    if i < 0:
        raise ValueError(f"shift amount must be nonnegative, got {i}")
    return tuple(p + i for p in pad(nu, length))


def lambda_superscript(lam, i: int, box_height: int) -> Partition:
    """Insert `i` into `lam` and bump the tail, staircase-resolution style.

    For 1 <= i <= lam[0] there is a unique index j with
    lam_j >= i >= lam_{j+1} + 1 (lam padded to `box_height`); the result is
    (lam_1, ..., lam_j, i, lam_{j+1}+1, ..., lam_{box_height}+1), a partition
    with box_height + 1 nonzero parts and width max(lam[0], i).
    """
    lam = canon(lam)
    if len(lam) > box_height:
        raise ValueError(f"{lam} does not fit in height {box_height}")
    width = lam[0] if lam else 0
    if not 1 <= i <= width:
        raise ValueError(f"index {i} outside [1, {width}]")
    return _insert_bump(pad(lam, box_height), i)


def _insert_bump(padded, i):
    # j = number of parts >= i; j = 0 means i is prepended.
    j = sum(1 for p in padded if p >= i)
    return padded[:j] + (i,) + tuple(p + 1 for p in padded[j:])


def staircase_terms(lam, box_height: int, max_exterior: int) -> list:
    """Terms (index, weight, exterior_degree) of the staircase resolution.

    Index 0 is (0, lam padded to box_height+1, 0).  For index i >= 1 the
    weight is the insertion-bump of i (allowing i > lam[0], which prepends)
    and the exterior degree is |weight| - |lam|.  Terms whose exterior
    degree exceeds `max_exterior` carry a zero exterior power and are
    omitted; the degree is strictly increasing in i, so enumeration stops
    at the first overflow.
    """
    lam = canon(lam)
    if len(lam) > box_height:
        raise ValueError(f"{lam} does not fit in height {box_height}")
    padded = pad(lam, box_height)
    total = sum(lam)
    terms = [(0, pad(lam, box_height + 1), 0)]
    i = 1
    while True:
        weight = _insert_bump(padded, i)
        ell = sum(weight) - total
        if ell > max_exterior:
            break
        terms.append((i, weight, ell))
        i += 1
    return terms


def interleaves(nu, lam, box_height: int) -> bool:
    """Whether lam_{k+1} <= nu_k <= lam_k for 1 <= k <= box_height - 1."""
    if len(canon(lam)) > box_height or len(canon(nu)) > max(box_height - 1, 0):
        return False
    lam = pad(canon(lam), box_height)
    nu = pad(canon(nu), max(box_height - 1, 0))
    return all(lam[k + 1] <= nu[k] <= lam[k] for k in range(box_height - 1))


def interleavings(lam, box_height: int) -> Iterator:
    """All nu with interleaves(nu, lam, box_height), in lex order."""
    lam = pad(canon(lam), box_height)
    ranges = [range(lam[k + 1], lam[k] + 1) for k in range(box_height - 1)]
    for nu in product(*ranges):
        yield canon(nu)


@dataclass(frozen=True)
class BlockFamily:
    """Disjoint-union decomposition of a box, labelled by origin.

    `blocks` is an ordered list of (label, members); labels are
    ("psi", i) for the zero-ended blocks indexed by the twist i, and
    ("det", shift) for the final uniformly-shifted block.  The upper
    index of the psi range is `k - max(0, d - r + 1)`; `naive_bound`
    records the alternative bound n - d + r - 1, and `bound_mismatch`
    flags when the two disagree.
    """

    n: int
    d: int
    k: int
    r: int
    blocks: tuple
    naive_bound: int
    bound_mismatch: bool

    def members(self):
        out = []
        for _, block in self.blocks:
            out.extend(block)
        return out


def induction_blocks(n: int, d: int, k: int, r: int) -> BlockFamily:
    """Split the box B(n-d, k) into shifted sub-boxes.

    Blocks, in order: for each 0 <= i <= k - max(0, d - r + 1), the box
    B(n-d-1, k-i) zero-padded to length n-d and shifted by i (its members
    are exactly the box elements whose (n-d)-th padded part equals i);
    last, when d >= r, the box B(n-d, d-r) shifted by k-d+r (members with
    every padded part >= k-d+r; a negative shift keeps only the members
    that stay nonnegative).  Raises VerificationError if the blocks
    overlap or fail to cover B(n-d, k).
    """
    if d < 0 or d > n or k < 0:
        raise ValueError(f"need 0 <= d <= n and k >= 0, got n={n} d={d} k={k}")
    height = n - d
    blocks = []
    i_max = k - max(0, d - r + 1)
    for i in range(i_max + 1):
        members = tuple(
            canon(shift(nu, i, height))
            for nu in box_enumerate(Box(height - 1, k - i))
        )
        blocks.append((("psi", i), members))
    if d >= r:
        det_shift = k - (d - r)
        members = []
        for nu in box_enumerate(Box(height, d - r)):
            shifted = tuple(p + det_shift for p in pad(nu, height))
            if all(p >= 0 for p in shifted):
                members.append(canon(shifted))
        blocks.append((("det", det_shift), tuple(members)))

    family = BlockFamily(
        n=n, d=d, k=k, r=r,
        blocks=tuple(blocks),
        naive_bound=n - d + r - 1,
        bound_mismatch=(n - d + r - 1) != i_max,
    )
    _check_partition_of_box(family)
    return family


def _check_partition_of_box(family: BlockFamily):
    seen = {}
    for label, block in family.blocks:
        for lam in block:
            if lam in seen:
                raise VerificationError(
                    f"blocks {seen[lam]} and {label} overlap at {lam} "
                    f"(n={family.n} d={family.d} k={family.k} r={family.r})"
                )
            seen[lam] = label
    expected = set(box_enumerate(Box(family.n - family.d, family.k)))
    if set(seen) != expected:
        missing = expected - set(seen)
        extra = set(seen) - expected
        raise VerificationError(
            f"block union mismatch (n={family.n} d={family.d} k={family.k} "
            f"r={family.r}): missing {sorted(missing)}, extra {sorted(extra)}"
        )
