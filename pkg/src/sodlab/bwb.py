"""Borel-Weil-Bott weight straightening and an independent alternant oracle.

The dot action w.lam = w(lam + rho) - rho with rho = (n-1, ..., 1, 0)
either hits a repeated entry (the pushforward vanishes) or sorts to a
unique dominant weight with a homological shift equal to the number of
inversions.  Characteristic zero is assumed throughout; there is no
positive-characteristic mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

from .characters import LaurentCharacter
from .errors import VerificationError


@dataclass(frozen=True)
class BottOutcome:
    """Vanishing, or a dominant weight with a nonnegative shift."""

    dominant: tuple | None
    shift: int | None

    @classmethod
    def vanishing(cls):
        return cls(None, None)

    @property
    def is_vanishing(self):
        return self.dominant is None

    def __str__(self):
        if self.is_vanishing:
            return "Vanishing"
        dom = "(" + ",".join(str(x) for x in self.dominant) + ")"
        return f"NonVanishing dominant={dom} shift={self.shift}"


def rho(n: int) -> tuple:
    return tuple(range(n - 1, -1, -1))


def straighten(weight) -> BottOutcome:
    """Dot-action straightening of an arbitrary integer weight."""
    weight = tuple(int(w) for w in weight)
    n = len(weight)
    mu = tuple(w + r for w, r in zip(weight, rho(n)))
    if len(set(mu)) < n:
        return BottOutcome.vanishing()
    inversions = sum(
        1 for i in range(n) for j in range(i + 1, n) if mu[i] < mu[j]
    )
    dominant = tuple(s - r for s, r in zip(sorted(mu, reverse=True), rho(n)))
    return BottOutcome(dominant, inversions)


def grassmannian_pushforward(alpha, beta) -> BottOutcome:
    """Pushforward of the (alpha, beta) quotient/sub weight pair.

    alpha and beta must each be weakly decreasing; the concatenation is
    straightened in rank len(alpha) + len(beta).  A NonVanishing outcome
    (w, s) means the bundle pushes to the Schur functor of w shifted into
    homological degree s; Vanishing means an acyclic bundle.
    """
    for name, part in (("alpha", alpha), ("beta", beta)):
        part = tuple(part)
        for a, b in zip(part, part[1:]):
            if a < b:
                raise ValueError(f"{name} = {part} is not weakly decreasing")
    return straighten(tuple(alpha) + tuple(beta))


def alternant_numerator(weight) -> LaurentCharacter:
    """Antisymmetrized sum over the symmetric group of x^(w(lam + rho))."""
    weight = tuple(weight)
    n = len(weight)
    mu = tuple(w + r for w, r in zip(weight, rho(n)))
    terms = {}
    for perm in permutations(range(n)):
        sign = _perm_sign(perm)
        exps = tuple(mu[p] for p in perm)
        terms[exps] = terms.get(exps, 0) + sign
    return LaurentCharacter(n, terms)


def _perm_sign(perm):
    inv = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return -1 if inv % 2 else 1


@lru_cache(maxsize=8)
def vandermonde(n: int) -> LaurentCharacter:
    """The alternant of the zero weight, i.e. the expanded Vandermonde."""
    return alternant_numerator((0,) * n)


def exact_divide(num: LaurentCharacter, den: LaurentCharacter) -> LaurentCharacter:
    """Exact division in the Laurent polynomial ring, lex-leading order."""
    if den.is_zero:
        raise ZeroDivisionError("division by the zero character")
    lead_den = max(den.terms)
    c_den = den.terms[lead_den]
    den_items = list(den.terms.items())
    quotient = {}
    rem = dict(num.terms)
    steps = 0
    while rem:
        steps += 1
        if steps > 1_000_000:
            raise VerificationError("alternant division did not terminate")
        lead = max(rem)
        c, r = divmod(rem[lead], c_den)
        if r:
            raise VerificationError("alternant division is not exact")
        q_exp = tuple(a - b for a, b in zip(lead, lead_den))
        quotient[q_exp] = c
        for e, ce in den_items:
            key = tuple(a + b for a, b in zip(q_exp, e))
            s = rem.get(key, 0) - c * ce
            if s:
                rem[key] = s
            elif key in rem:
                del rem[key]
    out = LaurentCharacter(num.nvars)
    out.terms = quotient
    return out


def alternant_oracle(weight) -> LaurentCharacter:
    """Brute-force character of the straightened weight.

    Sum of sgn(w) x^(w(lam+rho)) over the symmetric group, divided exactly
    by the Vandermonde alternant.  Zero exactly when straighten vanishes;
    otherwise (-1)^shift times the Schur polynomial of the dominant weight.
    """
    weight = tuple(weight)
    n = len(weight)
    if n > 6:
        raise ValueError(f"rank {n} too large for the factorial sum (max 6)")
    num = alternant_numerator(weight)
    if num.is_zero:
        return LaurentCharacter.zero(n)
    return exact_divide(num, vandermonde(n))


def serre_window(big_n: int, t: int) -> BottOutcome:
    """Straighten (0, ..., 0, t) in rank big_n + 1.

    Vanishes exactly for 1 <= t <= big_n: the acyclic window for line
    bundle powers on a projective bundle of fiber dimension big_n.
    """
    return straighten((0,) * big_n + (t,))


def weyl_dimension(weight) -> int:
    """Dimension of the irreducible GL-representation of dominant weight."""
    weight = tuple(weight)
    n = len(weight)
    num = den = 1
    for i in range(n):
        for j in range(i + 1, n):
            num *= weight[i] - weight[j] + j - i
            den *= j - i
    dim, r = divmod(num, den)
    if r:
        raise VerificationError(f"Weyl dimension of {weight} not integral")
    return dim


def minimal_sorting_length(weight) -> int | None:
    """Brute-force minimum inversion count over all sorting permutations.

    Returns None when no permutation of weight + rho is strictly
    decreasing (the vanishing case).  Factorial cost; only for small rank.
    """
    weight = tuple(weight)
    n = len(weight)
    if n > 7:
        raise ValueError("rank too large for brute force")
    mu = tuple(w + r for w, r in zip(weight, rho(n)))
    best = None
    for perm in permutations(range(n)):
        arranged = tuple(mu[p] for p in perm)
        if all(a > b for a, b in zip(arranged, arranged[1:])):
            inv = sum(
                1 for i in range(n) for j in range(i + 1, n)
                if perm[i] > perm[j]
            )
            best = inv if best is None else min(best, inv)
    return best


def max_shift(n: int) -> int:
    """Upper bound n(n-1)/2 for the homological shift in rank n."""
    return n * (n - 1) // 2


def oracle_agrees(weight) -> bool:
    """Check straighten against the antisymmetrized-sum oracle.

    Uses the numerator identity N(lam) = (-1)^shift * N(dominant), which
    is equivalent to comparing the divided alternants since division by
    the fixed nonzero Vandermonde is injective.
    """
    out = straighten(weight)
    num = alternant_numerator(weight)
    if out.is_vanishing:
        return num.is_zero
    target = alternant_numerator(out.dominant)
    if out.shift % 2:
        target = -target
    dom_ok = all(a >= b for a, b in zip(out.dominant, out.dominant[1:]))
    return dom_ok and num == target and 0 <= out.shift <= max_shift(len(weight))
