"""Euler-characteristic verification in the universal local situation.

All categorical statements are checked at the level of partitions,
characters, and homological shifts.  Genuine vanishing is asserted only
together with a concentration certificate: every nonvanishing weight
straightening must land in a single homological degree, in which case a
zero Euler character certifies a zero mapping space.  Cases with
spread-out contributions are inconclusive, never failures.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bwb import grassmannian_pushforward, serre_window, straighten, weyl_dimension
from .characters import (
    LaurentCharacter,
    cauchy_symmetric,
    dual_weight,
    elementary_symmetric,
    littlewood_richardson,
    partitions_of,
    schur_decompose,
    schur_monomials,
    schur_weight_character,
)
from .errors import VerificationError
from .partitions import (
    Box,
    box_enumerate,
    canon,
    interleavings,
    lambda_superscript,
    pad,
    size,
    transpose,
)
from .sod import LocalSetup, enumerate_components, generator_image_classes


class EquivariantClass:
    """Graded character data with two weight slots.

    terms[degree] maps (grass_weight, w_weight) to an integer
    coefficient: grass_weight is a weakly decreasing integer weight on
    the Grassmannian side, w_weight one for the auxiliary space W.
    """

    __slots__ = ("terms",)

    def __init__(self):
        self.terms = {}

    def add(self, degree, grass_weight, w_weight, coeff=1):
        if not coeff:
            return
        slot = self.terms.setdefault(degree, {})
        key = (tuple(grass_weight), tuple(w_weight))
        s = slot.get(key, 0) + coeff
        if s:
            slot[key] = s
        else:
            del slot[key]
        if not slot:
            del self.terms[degree]

    @property
    def is_zero(self):
        return not self.terms

    def degrees(self):
        return sorted(self.terms)

    def __eq__(self, other):
        if not isinstance(other, EquivariantClass):
            return NotImplemented
        return self.terms == other.terms

    def character(self, degree, grass_vars, w_vars) -> LaurentCharacter:
        """Render one homological degree as a Laurent character."""
        acc = LaurentCharacter.zero(grass_vars + w_vars)
        for (gw, ww), c in self.terms.get(degree, {}).items():
            g = schur_weight_character(gw, grass_vars)
            w = schur_weight_character(ww, w_vars)
            acc = acc + g.times_disjoint(w) * c
        return acc

    def __repr__(self):
        if self.is_zero:
            return "0"
        bits = []
        for deg in self.degrees():
            for (gw, ww), c in sorted(self.terms[deg].items()):
                bits.append(f"deg {deg}: {c} * S^{gw}(R^∨) ⊗ S^{ww}(W)")
        return "; ".join(bits)


@dataclass(frozen=True)
class ResolutionTerm:
    """One term of a staircase resolution: Schur weight and exterior degree."""

    index: int
    schur_weight: tuple
    exterior_degree: int


def koszul_terms(setup: LocalSetup, d_plus: int, d_minus: int) -> list:
    """Cauchy summands of the Koszul resolution of the incidence locus.

    Entry ell collects the pairs (mu^t, mu) with |mu| = ell and mu inside
    B(n - d_plus, d_minus): mu^t indexes the dual quotient-side factor,
    mu the subbundle-side factor.  ell runs up to (n - d_plus) * d_minus.
    """
    if not (0 <= d_minus <= setup.m and 0 <= d_plus <= setup.n):
        raise ValueError(f"invalid ranks d+={d_plus} d-={d_minus} for {setup}")
    box = Box(setup.n - d_plus, d_minus)
    top = max(box.height, 0) * max(box.width, 0)
    out = []
    for ell in range(top + 1):
        pairs = tuple(
            (transpose(mu), mu) for mu in partitions_of(ell) if mu in box
        )
        out.append((ell, pairs))
    return out


def flip_image(setup: LocalSetup, lam) -> EquivariantClass:
    """Image class of a subbundle Schur generator across the incidence flip.

    Pairs every Koszul-Cauchy summand against the generator on the
    genuine Grassmannian of W^∨ at rank d - r and pushes forward; the
    result must be the dual-subbundle Schur class of the same partition,
    concentrated in degree 0.  Raises on any mismatch.
    """
    n, m, d, r = setup.n, setup.m, setup.d, setup.r
    if d < r:
        raise ValueError(f"flip needs d >= r, got d={d} r={r}")
    lam = canon(lam)
    if lam not in Box(n - d, d - r):
        raise ValueError(f"{lam} outside B({n - d}, {d - r})")
    result = EquivariantClass()
    for ell, pairs in koszul_terms(setup, d, d - r):
        for mu_t, mu in pairs:
            alpha = dual_weight(pad(mu_t, d - r))
            beta = pad(lam, n - d)
            outcome = grassmannian_pushforward(alpha, beta)
            if outcome.is_vanishing:
                continue
            degree = ell - outcome.shift
            result.add(degree, pad(mu, n - d), dual_weight(outcome.dominant), 1)
    expected = EquivariantClass()
    expected.add(0, pad(lam, n - d), (0,) * m, 1)
    if result != expected:
        raise VerificationError(
            f"flip image of {lam} on {setup} is {result}, expected {expected}"
        )
    return result


def kapranov_pairing_matrix(n: int, d: int) -> dict:
    """Signed Euler pairings between the two dual exceptional collections.

    Entry (mu, lam) pairs the transpose-quotient generator against the
    subbundle generator shifted by |lam|; the matrix over B(n-d, d) must
    be the identity.  Raises listing the offending pairs otherwise.
    """
    if not 1 <= d <= n or n > 5:
        raise ValueError(f"need 1 <= d <= n <= 5, got n={n} d={d}")
    members = box_enumerate(Box(n - d, d))
    matrix = {}
    offenders = []
    for mu in members:
        for lam in members:
            alpha = dual_weight(pad(transpose(mu), d))
            beta = pad(lam, n - d)
            outcome = grassmannian_pushforward(alpha, beta)
            if outcome.is_vanishing:
                entry = 0
            else:
                sign = -1 if (outcome.shift + size(lam)) % 2 else 1
                entry = sign * weyl_dimension(outcome.dominant)
            matrix[(mu, lam)] = entry
            if entry != (1 if mu == lam else 0):
                offenders.append((mu, lam, entry))
    if offenders:
        raise VerificationError(
            f"pairing matrix for (n={n}, d={d}) is not the identity: {offenders}"
        )
    return matrix


def lascoux_resolution(setup: LocalSetup, lam) -> list:
    """Terms of the staircase resolution of a pushed-down Schur generator.

    Valid for lam inside B(n-d-1, d) with width k = lam_1 satisfying
    max(0, d - r + 1) <= k <= d.  Term i >= 1 has Schur weight equal to
    the insertion-bump of i and exterior degree |bump| - |lam|; a term
    whose exterior degree exceeds m carries the zero exterior power and
    is kept only as combinatorial data.
    """
    n, m, d, r = setup.n, setup.m, setup.d, setup.r
    if not 0 <= d <= n - 1:
        raise ValueError(f"need 0 <= d <= n-1, got d={d} n={n}")
    lam = canon(lam)
    if lam not in Box(n - d - 1, d):
        raise ValueError(f"{lam} outside B({n - d - 1}, {d})")
    k = lam[0] if lam else 0
    if not max(0, d - r + 1) <= k <= d:
        raise ValueError(
            f"width {k} outside [{max(0, d - r + 1)}, {d}] for {setup}"
        )
    total = size(lam)
    terms = [ResolutionTerm(0, lam, 0)]
    for i in range(1, k + 1):
        weight = lambda_superscript(lam, i, n - d - 1)
        terms.append(ResolutionTerm(i, canon(weight), size(weight) - total))
    return terms


def lascoux_character_identity(setup: LocalSetup, lam):
    """Two independent expansions of the pushed-down generator class.

    Left side: alternating sum over resolution terms of the Schur
    character times the exterior character.  Right side: alternating sum
    over Koszul line powers of the exterior character times the
    straightened line-bundle pushforward.  Returns (lhs, rhs); raises on
    mismatch.
    """
    n, m, d = setup.n, setup.m, setup.d
    q = n - d
    lam = canon(lam)
    lhs = LaurentCharacter.zero(q + m)
    for t in lascoux_resolution(setup, lam):
        x = schur_monomials(t.schur_weight, q)
        y = elementary_symmetric(t.exterior_degree, m)
        contrib = x.times_disjoint(y)
        lhs = lhs + (contrib if t.index % 2 == 0 else -contrib)
    rhs = LaurentCharacter.zero(q + m)
    base = pad(lam, n - d - 1)
    for ell in range(m + 1):
        outcome = straighten(base + (ell,))
        if outcome.is_vanishing:
            continue
        x = schur_weight_character(outcome.dominant, q)
        y = elementary_symmetric(ell, m)
        sign = -1 if (ell + outcome.shift) % 2 else 1
        rhs = rhs + x.times_disjoint(y) * sign
    if lhs != rhs:
        raise VerificationError(
            f"staircase character identity fails for {lam} on {setup}"
        )
    return lhs, rhs


def psi_L_image(setup: LocalSetup, lam) -> EquivariantClass:
    """Left-adjoint image of a subbundle Schur generator, one level up.

    Computed from the interleaving filtration: the summand at nu carries
    the line power |lam| - |nu|, and every power in [1, d] is acyclic by
    the Serre window; the nu = lam summand survives exactly when lam fits
    in B(n-d-1, d).  Returns the surviving class (possibly zero).
    """
    n, m, d = setup.n, setup.m, setup.d
    if not 0 <= d <= n - 1:
        raise ValueError(f"need 0 <= d <= n-1, got d={d}")
    lam = canon(lam)
    if lam not in Box(n - d, d):
        raise ValueError(f"{lam} outside B({n - d}, {d})")
    result = EquivariantClass()
    for nu in interleavings(lam, n - d):
        t = size(lam) - size(nu)
        if t == 0:
            result.add(0, pad(nu, n - d - 1), (0,) * m, 1)
            continue
        if not serre_window(d, t).is_vanishing:
            raise VerificationError(
                f"line power {t} escaped the Serre window [1, {d}] for {lam}"
            )
    expected = EquivariantClass()
    if lam in Box(n - d - 1, d):
        expected.add(0, pad(lam, n - d - 1), (0,) * m, 1)
    if result != expected:
        raise VerificationError(
            f"filtration image of {lam} is {result}, expected {expected}"
        )
    return result


def psi_L_image_branching(setup: LocalSetup, lam) -> EquivariantClass:
    """Independent route to psi_L_image via character branching.

    Branch the Schur character against a distinguished last variable,
    decompose each line-degree slice back into Schur terms, and keep the
    slices whose line power is not killed by the Serre window.
    """
    n, m, d = setup.n, setup.m, setup.d
    q = n - d
    lam = canon(lam)
    if lam not in Box(q, d):
        raise ValueError(f"{lam} outside B({q}, {d})")
    full = schur_monomials(lam, q)
    result = EquivariantClass()
    for t in sorted({e[-1] for e in full.terms}):
        if t != 0:
            if not serre_window(d, t).is_vanishing:
                raise VerificationError(f"window failed to clear power {t}")
            continue
        piece = LaurentCharacter(q - 1)
        piece.terms = {e[:-1]: c for e, c in full.terms.items() if e[-1] == 0}
        for nu, c in schur_decompose(piece).terms.items():
            result.add(0, pad(nu, q - 1), (0,) * m, c)
    return result


# ---------------------------------------------------------------------------
# graded mapping spaces


@dataclass
class LocalHomReport:
    """Graded mapping-space character between two weight generators.

    graded[k] is the signed character, in n + m variables with the
    Grassmannian-side block first, of the symmetric-degree-k piece;
    `shifts` collects the homological degrees met by nonvanishing
    straightenings, and `concentrated` is true when at most one occurs.
    """

    setup: LocalSetup
    source: tuple
    target: tuple
    twist: int
    cutoff: int
    graded: dict
    shifts: set
    concentrated: bool

    @property
    def is_zero(self):
        return all(ch.is_zero for ch in self.graded.values())


def hom_contributions(setup: LocalSetup, source, target, twist: int,
                      cutoff: int):
    """Raw straightening contributions to the graded mapping space.

    Yields (sym_degree, mu, shift, dominant, coeff): mu is the Cauchy
    partition on the auxiliary side, dominant the straightened weight on
    the full linear space, coeff the Littlewood-Richardson multiplicity
    of the product dual(source) * target * mu twisted by the determinant
    power.
    """
    n, m, d = setup.n, setup.m, setup.d
    q = n - d
    w_src = dual_weight(pad(tuple(source), q))
    c0 = max(0, -min(w_src, default=0))
    src_part = canon(tuple(x + c0 for x in w_src))
    base = littlewood_richardson(src_part, canon(target), q)
    for k in range(cutoff + 1):
        for mu, _ in cauchy_symmetric(k):
            if len(mu) > min(m, q):
                continue
            out = {}
            for nu1, c1 in base.terms.items():
                for nu2, c2 in littlewood_richardson(nu1, mu, q).terms.items():
                    out[nu2] = out.get(nu2, 0) + c1 * c2
            for nu, coeff in out.items():
                weight = tuple(x + twist - c0 for x in pad(nu, q))
                outcome = grassmannian_pushforward(weight, (0,) * d)
                if outcome.is_vanishing:
                    continue
                yield k, mu, outcome.shift, outcome.dominant, coeff


def local_hom_euler(setup: LocalSetup, source, target, twist: int,
                    cutoff: int) -> LocalHomReport:
    """Graded Euler character of the local mapping space.

    For each symmetric degree k <= cutoff, decomposes the hom bundle from
    the source generator to the twisted target tensored with the degree-k
    part of the coordinate algebra, pushes every irreducible summand to
    the base, and records the signed character (sign (-1)^shift).
    """
    n, m = setup.n, setup.m
    graded = {k: LaurentCharacter.zero(n + m) for k in range(cutoff + 1)}
    shifts = set()
    for k, mu, shift_, dom, coeff in hom_contributions(
        setup, source, target, twist, cutoff
    ):
        shifts.add(shift_)
        contrib = schur_weight_character(dom, n).times_disjoint(
            schur_monomials(mu, m)
        ) * coeff
        if shift_ % 2:
            contrib = -contrib
        graded[k] = graded[k] + contrib
    return LocalHomReport(
        setup=setup, source=tuple(source), target=tuple(target),
        twist=twist, cutoff=cutoff, graded=graded, shifts=shifts,
        concentrated=len(shifts) <= 1,
    )


@dataclass
class PairCheck:
    """Outcome of one forbidden-direction mapping-space check."""

    source_component: tuple
    target_component: tuple
    zero: bool
    concentrated: bool
    detail: str = ""


def semiorthogonality_check(setup: LocalSetup, cutoff: int) -> list:
    """Forbidden-direction mapping spaces between component generators.

    For every ordered pair with the later component mapped against the
    earlier one, combines the full K-classes of both generator images
    bilinearly (source coefficients dualized) and checks that the signed
    character vanishes in every total symmetric degree <= cutoff, with
    all straightenings concentrated in one homological degree.
    """
    classes = {}
    for leaf, nu, alpha, cls in generator_image_classes(setup):
        classes.setdefault((leaf.i, leaf.lam), []).append(cls)
    comps = [
        (c.i, c.lam) for c in enumerate_components(setup.r, setup.d)
        if (c.i, c.lam) in classes
    ]
    results = []
    for later_idx in range(1, len(comps)):
        for earlier_idx in range(later_idx):
            later, earlier = comps[later_idx], comps[earlier_idx]
            for src_cls in classes[later]:
                for tgt_cls in classes[earlier]:
                    results.append(
                        _pair_check(setup, later, earlier,
                                    src_cls, tgt_cls, cutoff)
                    )
    return results


def _pair_check(setup, later, earlier, src_cls, tgt_cls, cutoff):
    n, m = setup.n, setup.m
    max_src_deg = max(
        (max((sum(e) for e in c.terms), default=0) for c in src_cls.values()),
        default=0,
    )
    inner_cutoff = cutoff + max_src_deg
    total = LaurentCharacter.zero(n + m)
    shifts = set()
    for a_w, a_coeff in src_cls.items():
        a_dual = a_coeff.inverted()
        for b_w, b_coeff in tgt_cls.items():
            scale = a_dual * b_coeff
            if scale.is_zero:
                continue
            for k, mu, shift_, dom, coeff in hom_contributions(
                setup, a_w, b_w, 0, inner_cutoff
            ):
                shifts.add(shift_)
                contrib = schur_weight_character(dom, n).times_disjoint(
                    schur_monomials(mu, m) * scale
                ) * coeff
                if shift_ % 2:
                    contrib = -contrib
                total = total + contrib
    # grade by total degree in the last m variables; degrees above the
    # cutoff are incomplete and pruned
    leftover = {e: c for e, c in total.terms.items() if sum(e[n:]) <= cutoff}
    zero = not leftover
    detail = "" if zero else f"nonzero monomials: {sorted(leftover)[:4]}"
    return PairCheck(
        source_component=later,
        target_component=earlier,
        zero=zero,
        concentrated=len(shifts) <= 1,
        detail=detail,
    )
