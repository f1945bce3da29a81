"""Semiorthogonal components of a rank-r degeneracy situation.

Components are indexed by pairs (i, lam) with 0 <= i <= min(r, d) and
lam in the box B(r-i, i).  Each pair corresponds to the sequence
a = (i - lam_1, lam_1 - lam_2, ..., lam_{r-i-1} - lam_{r-i}); the total
order is ascending lexicographic on these sequences, with the rule that
a sequence which is a proper prefix of another is LARGER (so the empty
sequence, i = r, is the maximal element).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from .characters import LaurentCharacter, elementary_symmetric
from .errors import VerificationError
from .partitions import (
    Box,
    box_enumerate,
    canon,
    pad,
    shift,
    staircase_terms,
)


@dataclass(frozen=True)
class LocalSetup:
    """Universal local parameters: the space of m x n matrices.

    W = k^m, V = k^n, X = Hom(W, V) with the tautological map tau, and
    the two-term complex [W ox O -> V ox O] of rank r = n - m.
    """

    n: int
    m: int
    d: int

    def __post_init__(self):
        if self.n < 0 or self.m < 0 or self.d < 0:
            raise ValueError("n, m, d must be nonnegative")
        if self.m > self.n:
            raise ValueError(f"rank r = n - m = {self.n - self.m} is negative")
        if self.d > self.n:
            raise ValueError(f"d = {self.d} exceeds n = {self.n}")

    @property
    def r(self) -> int:
        return self.n - self.m


@dataclass(frozen=True)
class SodComponent:
    """One semiorthogonal factor of the decomposition at parameters (r, d)."""

    i: int
    lam: tuple
    a_seq: tuple
    order_key_: tuple = field(repr=False)
    target: str
    kernel: str


def a_sequence(i: int, lam, r: int) -> tuple:
    """The difference sequence (i - lam_1, lam_1 - lam_2, ...) of length r - i."""
    lam = canon(lam)
    if not 0 <= i <= r:
        raise ValueError(f"need 0 <= i <= r, got i={i} r={r}")
    if lam not in Box(r - i, i):
        raise ValueError(f"{lam} not inside B({r - i}, {i})")
    padded = pad(lam, r - i)
    if i == r:
        return ()
    return (i - padded[0],) + tuple(
        padded[j] - padded[j + 1] for j in range(r - i - 1)
    )


def inverse_a_sequence(a_seq, r: int) -> tuple:
    """Recover (i, lam) from a difference sequence; round-trip inverse."""
    a_seq = tuple(a_seq)
    i = r - len(a_seq)
    if i < 0 or any(a < 0 for a in a_seq):
        raise ValueError(f"invalid difference sequence {a_seq} for r={r}")
    parts = []
    acc = i
    for a in a_seq:
        acc -= a
        parts.append(acc)
    if any(p < 0 for p in parts):
        raise ValueError(f"sequence {a_seq} sums past i = {i}")
    return i, canon(parts)


def order_key(a_seq, r: int) -> tuple:
    """Sortable key: pad with a sentinel larger than any entry, so that a
    proper prefix compares larger than its extensions."""
    return tuple(a_seq) + (r + 1,) * (r - len(a_seq))


def order_compare(c1: SodComponent, c2: SodComponent) -> int:
    """-1, 0, or 1 in the semiorthogonal total order."""
    if len(c1.order_key_) != len(c2.order_key_):
        raise ValueError("components come from different ranks r")
    if c1.order_key_ < c2.order_key_:
        return -1
    if c1.order_key_ > c2.order_key_:
        return 1
    return 0


def _component(i, lam, r, d):
    lam = canon(lam)
    seq = a_sequence(i, lam, r)
    lam_str = ",".join(str(p) for p in lam) if lam else "0"
    return SodComponent(
        i=i,
        lam=lam,
        a_seq=seq,
        order_key_=order_key(seq, r),
        target=f"Grass(E^∨[1]; {d - i})",
        kernel=f"S^({lam_str})(E^univ_({d},{d - i})) ⊗ det(Q)^{i}",
    )


def enumerate_components(r: int, d: int) -> list:
    """All components, ascending in the semiorthogonal order.

    There are binom(r, i) components targeting Grass(E^v[1]; d-i) for each
    0 <= i <= min(r, d); when d >= r the total count is 2^r.
    """
    if r < 0 or d < 1:
        raise ValueError(f"need r >= 0 and d >= 1, got r={r} d={d}")
    comps = [
        _component(i, lam, r, d)
        for i in range(min(r, d) + 1)
        for lam in box_enumerate(Box(r - i, i))
    ]
    comps.sort(key=lambda c: c.order_key_)
    return comps


def component_count(r: int, d: int) -> int:
    return sum(comb(r, i) for i in range(min(r, d) + 1))


# ---------------------------------------------------------------------------
# generation recursion


@dataclass
class GenerationLeaf:
    """A leaf of the generation recursion.

    `word` is the outermost-first sequence of correspondence twists
    (a_1, ..., a_{r-i}); `twist` is the residual determinant power
    i - sum(a_j) applied innermost.  `box` is the generator box at the
    leaf level: B(n - d_leaf, d_leaf - r), where d_leaf = d + len(word).
    Negative box height flags an empty target category (arises exactly
    when d - i > m); the leaf is still recorded since the abstract
    component list does not depend on n and m.
    """

    word: tuple
    twist: int
    i: int
    lam: tuple
    box: Box
    order_key_: tuple

    @property
    def is_empty(self) -> bool:
        return self.box.is_empty

    def functor_word(self) -> str:
        psi = "∘".join(f"Ψ_{a}" for a in self.word)
        det = f"⊗det^{self.twist}"
        if psi and self.twist:
            return f"{psi}∘({det})∘Φ⁰"
        if psi:
            return f"{psi}∘Φ⁰"
        if self.twist:
            return f"({det})∘Φ⁰"
        return "Φ⁰"


@dataclass
class GenerationNode:
    d_level: int
    k: int
    word: tuple
    children: list = field(default_factory=list)
    leaf: GenerationLeaf | None = None


@dataclass
class GenerationTrace:
    setup: LocalSetup
    root: GenerationNode
    leaves: list


def generation_trace(setup: LocalSetup) -> GenerationTrace:
    """Recursively split generator boxes until every leaf has box height
    plus width equal to n - r, then match leaves against the component
    list.

    At box B(n - d', k) with k > d' - r the children are the psi blocks
    for 0 <= i <= k - max(0, d' - r + 1) (recursing at level d' + 1 with
    width k - i) followed, when d' >= r, by the determinant-twist leaf.
    The recursion is driven purely by (d', k), so the leaf multiset
    always agrees with enumerate_components(r, d); leaves whose concrete
    generator box is empty are flagged.  Raises VerificationError on any
    leaf/component mismatch.
    """
    n, m, d, r = setup.n, setup.m, setup.d, setup.r
    if d < 1:
        raise ValueError("generation requires d >= 1")
    leaves = []

    def emit(word, twist, node):
        t = len(word)
        i = r - t
        acc = i
        parts = []
        for a in word:
            acc -= a
            parts.append(acc)
        if acc != twist:
            raise VerificationError(
                f"twist bookkeeping broke at word={word}: {acc} != {twist}"
            )
        lam = canon(parts)
        d_leaf = d + t
        leaf = GenerationLeaf(
            word=word,
            twist=twist,
            i=i,
            lam=lam,
            box=Box(n - d_leaf, d_leaf - r),
            order_key_=order_key(word, r),
        )
        node.leaf = leaf
        leaves.append(leaf)

    def process(d_level, k, word):
        node = GenerationNode(d_level=d_level, k=k, word=word)
        if k == d_level - r:
            emit(word, 0, node)
            return node
        if k < d_level - r:
            raise VerificationError(f"width {k} below leaf width at level {d_level}")
        i_max = k - max(0, d_level - r + 1)
        for i in range(i_max + 1):
            node.children.append(process(d_level + 1, k - i, word + (i,)))
        if d_level >= r:
            det_node = GenerationNode(d_level=d_level, k=d_level - r, word=word)
            emit(word, k - (d_level - r), det_node)
            node.children.append(det_node)
        return node

    root = process(d, d, ())
    _check_trace(setup, leaves)
    return GenerationTrace(setup=setup, root=root, leaves=leaves)


def _check_trace(setup, leaves):
    expected = enumerate_components(setup.r, setup.d)
    got = [(leaf.i, leaf.lam) for leaf in leaves]
    want = [(c.i, c.lam) for c in expected]
    if sorted(got) != sorted(want):
        raise VerificationError(
            f"leaf multiset {sorted(got)} != components {sorted(want)}"
        )
    if got != want:
        raise VerificationError(
            f"leaf construction order {got} differs from component order {want}"
        )
    for leaf in leaves:
        if a_sequence(leaf.i, leaf.lam, setup.r) != leaf.word:
            raise VerificationError(
                f"leaf word {leaf.word} is not the difference sequence of "
                f"({leaf.i}, {leaf.lam})"
            )


# ---------------------------------------------------------------------------
# K-theory generation certificate


def block_order(n: int, d: int, r: int) -> list:
    """Elements of B(n-d, d) in recursive block order.

    Mirrors the generation recursion: inside B(n-d', k) the psi blocks
    come first for i ascending (each ordered recursively), the shifted
    determinant block last (ordered by box enumeration).
    """
    height = n - d

    def rec(level, k, embed):
        # embed maps a partition at `level` into B(n-d, d) coordinates
        if k == level - r:
            h = n - level
            return [embed(pad(nu, h)) for nu in box_enumerate(Box(h, k))]
        out = []
        i_max = k - max(0, level - r + 1)
        h = n - level
        for i in range(i_max + 1):
            def down(w, i=i, embed=embed):
                return embed(tuple(x + i for x in w) + (i,))
            out.extend(rec(level + 1, k - i, down))
        if level >= r:
            sh = k - (level - r)
            h = n - level
            for nu in box_enumerate(Box(h, level - r)):
                out.append(embed(tuple(x + sh for x in pad(nu, h))))
        return out

    if height < 0:
        return []
    result = [canon(w) for w in rec(d, d, lambda w: w)]
    expected = set(box_enumerate(Box(height, d)))
    if set(result) != expected or len(result) != len(expected):
        raise VerificationError("block order does not enumerate the box")
    return result


def psi_class(weights: dict, a: int, d_level: int, setup: LocalSetup) -> dict:
    """K-class of the twisted correspondence image, one level down.

    Input: weights mapping a partition at level d_level + 1 (at most
    n - d_level - 1 parts) to a coefficient character in the m exterior
    variables.  Output: the class after applying the correspondence and
    a determinant twist of degree `a`, as weights of length n - d_level.
    Terms come from the staircase resolution: index idx contributes
    (-1)^idx e_ell(y) with ell the exterior degree, cut off at ell > m.
    """
    n, m = setup.n, setup.m
    box_height = n - d_level - 1
    out = {}
    for lam, coeff in weights.items():
        for idx, weight, ell in staircase_terms(lam, box_height, m):
            shifted = tuple(x + a for x in weight)
            e = elementary_symmetric(ell, m)
            term = coeff * e
            if idx % 2:
                term = -term
            prev = out.get(shifted)
            out[shifted] = term if prev is None else prev + term
    return {w: c for w, c in out.items() if not c.is_zero}


def generator_image_classes(setup: LocalSetup):
    """K-classes of every component generator image, in block order.

    Yields (leaf, nu, alpha, class) where nu runs over the leaf box,
    alpha is the block-order element owned by that generator, and class
    maps partitions in B(n-d, d) to coefficient characters in the m
    exterior variables (signs included).
    """
    n, m, d, r = setup.n, setup.m, setup.d, setup.r
    trace = generation_trace(setup)
    one = LaurentCharacter.one(m)
    results = []
    for leaf in trace.leaves:
        if leaf.is_empty:
            continue
        d_leaf = d + len(leaf.word)
        h_leaf = n - d_leaf
        for nu in box_enumerate(leaf.box):
            start = shift(nu, leaf.twist, h_leaf)
            cls = {tuple(start): one}
            level = d_leaf
            for a in reversed(leaf.word):
                level -= 1
                cls = psi_class(cls, a, level, setup)
            alpha = _alpha_of(nu, leaf, setup)
            results.append((leaf, nu, alpha, cls))
    return results


def _alpha_of(nu, leaf, setup):
    """Block element of B(n-d, d) owned by generator nu of a leaf."""
    n, d, r = setup.n, setup.d, setup.r
    d_leaf = d + len(leaf.word)
    w = shift(nu, leaf.twist, n - d_leaf)
    for a in reversed(leaf.word):
        w = tuple(x + a for x in w) + (a,)
    return canon(w)


@dataclass
class K0Certificate:
    """Unitriangularity certificate for K-theoretic generation.

    `order` lists B(n-d, d) in block order.  Row alpha is the class of
    the generator image owning alpha, expanded in the Kapranov basis:
    matrix[(alpha, beta)] is the coefficient character of basis element
    beta.  ok means every diagonal entry is 1 and every entry strictly
    before the diagonal (in block order) vanishes.
    """

    setup: LocalSetup
    order: list
    matrix: dict
    ok: bool
    problems: list

    def entry(self, alpha, beta) -> LaurentCharacter:
        return self.matrix.get(
            (alpha, beta), LaurentCharacter.zero(self.setup.m)
        )


def k0_unitriangularity(setup: LocalSetup) -> K0Certificate:
    """Certify that component generator images span K-theory.

    Expresses the image class of each generator in the Kapranov basis
    indexed by B(n-d, d) in block order; the matrix must be unitriangular
    (unit diagonal, corrections only in strictly later blocks), hence
    invertible over the exterior-character ring.  Raises on failure.
    """
    if setup.n > 6:
        raise ValueError("setup too large for the K-theory certificate")
    order = block_order(setup.n, setup.d, setup.r)
    position = {alpha: i for i, alpha in enumerate(order)}
    one = LaurentCharacter.one(setup.m)
    matrix = {}
    problems = []
    seen = set()
    for leaf, nu, alpha, cls in generator_image_classes(setup):
        if alpha in seen:
            problems.append(f"two generators own {alpha}")
        seen.add(alpha)
        row = {}
        for w, coeff in cls.items():
            beta = canon(w)
            if beta not in position:
                problems.append(f"class of {alpha} leaves the box at {beta}")
                continue
            row[beta] = coeff
            matrix[(alpha, beta)] = coeff
        if row.get(alpha) != one:
            problems.append(
                f"diagonal entry at {alpha} is {row.get(alpha)}, not 1"
            )
        for beta, coeff in row.items():
            if position[beta] < position[alpha]:
                problems.append(
                    f"entry ({alpha}, {beta}) = {coeff} lies before the diagonal"
                )
    if seen != set(order):
        problems.append(
            f"generators cover {sorted(seen)} but the box is {sorted(order)}"
        )
    cert = K0Certificate(
        setup=setup, order=order, matrix=matrix,
        ok=not problems, problems=problems,
    )
    if problems:
        raise VerificationError("; ".join(problems))
    return cert
