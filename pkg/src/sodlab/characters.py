"""Exact symmetric-function and Laurent-character arithmetic.

Everything is computed over arbitrary-precision integers; there is no
floating point anywhere in this module.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import VerificationError
from .partitions import canon, pad, transpose


class LaurentCharacter:
    """Sparse multivariate Laurent polynomial with integer coefficients.

    Terms map an exponent tuple of length `nvars` (entries may be
    negative) to a nonzero integer coefficient.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for exps, c in terms.items():
                if c:
                    self.terms[tuple(exps)] = self.terms.get(tuple(exps), 0) + c
            self.terms = {e: c for e, c in self.terms.items() if c}

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def one(cls, nvars):
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, nvars, exps, coeff=1):
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def variable(cls, nvars, index):
        exps = [0] * nvars
        exps[index] = 1
        return cls(nvars, {tuple(exps): 1})

    @property
    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentCharacter(self.nvars, {(0,) * self.nvars: other})
        if not isinstance(other, LaurentCharacter):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentCharacter(self.nvars, {(0,) * self.nvars: other})
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            elif e in out:
                del out[e]
        r = LaurentCharacter(self.nvars)
        r.terms = out
        return r

    def __neg__(self):
        r = LaurentCharacter(self.nvars)
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentCharacter(self.nvars, {(0,) * self.nvars: other})
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return LaurentCharacter(self.nvars)
            r = LaurentCharacter(self.nvars)
            r.terms = {e: c * other for e, c in self.terms.items()}
            return r
        self._check(other)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                elif e in out:
                    del out[e]
        r = LaurentCharacter(self.nvars)
        r.terms = out
        return r

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative powers not supported")
        result = LaurentCharacter.one(self.nvars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base if k > 1 else base
            k >>= 1
        return result

    def inverted(self):
        """Substitute every variable by its inverse (character of the dual)."""
        r = LaurentCharacter(self.nvars)
        r.terms = {tuple(-x for x in e): c for e, c in self.terms.items()}
        return r

    def times_disjoint(self, other):
        """Product in the ring on the disjoint union of the variables."""
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                out[ea + eb] = ca * cb
        r = LaurentCharacter(self.nvars + other.nvars)
        r.terms = out
        return r

    def is_symmetric(self):
        """Invariance under all adjacent variable swaps."""
        for i in range(self.nvars - 1):
            for e, c in self.terms.items():
                swapped = list(e)
                swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
                if self.terms.get(tuple(swapped), 0) != c:
                    return False
        return True

    def total_degrees(self):
        return sorted({sum(e) for e in self.terms})

    def graded_piece(self, degree):
        r = LaurentCharacter(self.nvars)
        r.terms = {e: c for e, c in self.terms.items() if sum(e) == degree}
        return r

    def __repr__(self):
        if self.is_zero:
            return "0"
        bits = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"x{i + 1}" + (f"^{p}" if p != 1 else "")
                for i, p in enumerate(e) if p
            )
            if not mono:
                bits.append(f"{c}")
            elif c == 1:
                bits.append(mono)
            elif c == -1:
                bits.append(f"-{mono}")
            else:
                bits.append(f"{c}*{mono}")
        out = " + ".join(bits)
        return out.replace("+ -", "- ")


@lru_cache(maxsize=None)
def complete_homogeneous(k: int, nvars: int) -> LaurentCharacter:
    """h_k(x_1..x_n), sum of all degree-k monomials."""
    if k < 0:
        return LaurentCharacter.zero(nvars)
    if k == 0 or nvars == 0:
        return (LaurentCharacter.one(nvars) if k == 0
                else LaurentCharacter.zero(nvars))
    # h_k(x_1..x_n) = h_k(x_1..x_{n-1}) + x_n * h_{k-1}(x_1..x_n)
    out = {}
    for e, c in complete_homogeneous(k, nvars - 1).terms.items():
        out[e + (0,)] = c
    for e, c in complete_homogeneous(k - 1, nvars).terms.items():
        e = e[:-1] + (e[-1] + 1,)
        out[e] = out.get(e, 0) + c
    r = LaurentCharacter(nvars)
    r.terms = out
    return r


@lru_cache(maxsize=None)
def elementary_symmetric(k: int, nvars: int) -> LaurentCharacter:
    """e_k(x_1..x_n); zero for k > n or k < 0."""
    if k < 0 or k > nvars:
        return LaurentCharacter.zero(nvars)
    if k == 0:
        return LaurentCharacter.one(nvars)
    out = {}
    for e, c in elementary_symmetric(k, nvars - 1).terms.items():
        out[e + (0,)] = c
    for e, c in elementary_symmetric(k - 1, nvars - 1).terms.items():
        out[e + (1,)] = c
    r = LaurentCharacter(nvars)
    r.terms = out
    return r


def schur_polynomial(lam, nvars: int) -> LaurentCharacter:
    """Schur polynomial s_lam(x_1..x_n) by the Jacobi-Trudi determinant.

    s_lam = det(h_{lam_i - i + j}) over 1 <= i, j <= len(lam).  Returns the
    explicit zero polynomial when lam has more than `nvars` parts.
    """
    lam = canon(lam)
    if len(lam) > nvars:
        return LaurentCharacter.zero(nvars)
    ell = len(lam)
    if ell == 0:
        return LaurentCharacter.one(nvars)
    # determinant by Laplace expansion along the first column, memoized on
    # the surviving row set; entries are h_{lam_i - i + j}
    from functools import cache

    @cache
    def minor(rows, col):
        if not rows:
            return LaurentCharacter.one(nvars)
        acc = LaurentCharacter.zero(nvars)
        for pos, i in enumerate(rows):
            entry = complete_homogeneous(lam[i] - (i + 1) + (col + 1), nvars)
            if entry.is_zero:
                continue
            sub = minor(tuple(r for r in rows if r != i), col + 1)
            term = entry * sub
            acc = acc + (term if pos % 2 == 0 else -term)
        return acc

    return minor(tuple(range(ell)), 0)


@lru_cache(maxsize=None)
def schur_monomials(lam, nvars: int) -> LaurentCharacter:
    """Schur polynomial by the GL(n) > GL(n-1) branching recursion.

    Fast evaluation path used internally; agrees with schur_polynomial
    (tested) but runs in time linear in the number of monomials.
    """
    lam = canon(lam)
    if len(lam) > nvars:
        return LaurentCharacter.zero(nvars)
    if nvars == 0:
        return LaurentCharacter.one(0)
    total = sum(lam)
    padded = pad(lam, nvars)
    out = {}
    ranges = [range(padded[k + 1], padded[k] + 1) for k in range(nvars - 1)]

    def rec(idx, mu):
        if idx == nvars - 1:
            sub = schur_monomials(canon(mu), nvars - 1)
            e_last = total - sum(mu)
            for e, c in sub.terms.items():
                key = e + (e_last,)
                out[key] = out.get(key, 0) + c
            return
        for v in ranges[idx]:
            if idx == 0 or v <= mu[-1]:
                rec(idx + 1, mu + (v,))

    if nvars == 1:
        out[(total,)] = 1
    else:
        rec(0, ())
    r = LaurentCharacter(nvars)
    r.terms = out
    return r


def schur_weight_character(weight, nvars: int) -> LaurentCharacter:
    """Character of the irreducible with weakly decreasing integer weight.

    Negative entries are handled by factoring out a determinant power:
    s_w = (x_1..x_n)^c * s_{w - c} with c = min(w).
    """
    weight = tuple(weight)
    if len(weight) > nvars:
        raise ValueError(f"weight {weight} longer than {nvars} variables")
    for a, b in zip(weight, weight[1:]):
        if a < b:
            raise ValueError(f"weight {weight} not weakly decreasing")
    c = min(weight, default=0)
    if c >= 0:
        base = schur_monomials(canon(weight), nvars)
        return base
    shifted = canon(tuple(w - c for w in pad(weight, nvars)))
    det_power = LaurentCharacter.monomial(nvars, (c,) * nvars)
    return schur_monomials(shifted, nvars) * det_power


class SchurExpansion:
    """Integer linear combination of Schur symbols."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for lam, c in terms.items():
                if c:
                    self.terms[canon(lam)] = c

    @property
    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, SchurExpansion):
            return NotImplemented
        return self.terms == other.terms

    def __add__(self, other):
        out = dict(self.terms)
        for lam, c in other.terms.items():
            s = out.get(lam, 0) + c
            if s:
                out[lam] = s
            elif lam in out:
                del out[lam]
        return SchurExpansion(out)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        return SchurExpansion({lam: c * v for lam, v in self.terms.items()})

    def evaluate(self, nvars) -> LaurentCharacter:
        acc = LaurentCharacter.zero(nvars)
        for lam, c in self.terms.items():
            acc = acc + schur_monomials(lam, nvars) * c
        return acc

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for lam in sorted(self.terms, reverse=True):
            c = self.terms[lam]
            name = "s" + str(tuple(lam) if lam else (0,)).replace(" ", "")
            if c == 1:
                bits.append(name)
            elif c == -1:
                bits.append(f"-{name}")
            else:
                bits.append(f"{c}*{name}")
        return " + ".join(bits).replace("+ -", "- ")


def schur_decompose(p: LaurentCharacter) -> SchurExpansion:
    """Write a symmetric polynomial as an integer Schur combination.

    Repeatedly subtracts c * s_lam for the dominance-leading exponent lam
    (the lexicographically largest exponent, which is weakly decreasing
    for symmetric input).  Rejects non-symmetric input and exponents with
    negative entries.
    """
    if any(x < 0 for e in p.terms for x in e):
        raise ValueError("schur_decompose requires nonnegative exponents")
    if not p.is_symmetric():
        raise ValueError("input is not symmetric under variable permutation")
    rem = p
    out = {}
    guard = 0
    while not rem.is_zero:
        guard += 1
        if guard > 1_000_000:
            raise VerificationError("peeling did not terminate")
        lead = max(rem.terms)
        if any(a < b for a, b in zip(lead, lead[1:])):
            raise VerificationError(f"leading exponent {lead} not dominant")
        c = rem.terms[lead]
        lam = canon(lead)
        out[lam] = out.get(lam, 0) + c
        rem = rem - schur_monomials(lam, p.nvars) * c
    return SchurExpansion(out)


def littlewood_richardson(lam, mu, max_length: int) -> SchurExpansion:
    """Expansion of s_lam * s_mu, truncated to partitions of <= max_length parts.

    Computed by leading-monomial peeling of the product polynomial in
    `max_length` variables; partitions with more parts than that vanish
    in the truncation.
    """
    prod = schur_monomials(canon(lam), max_length) * schur_monomials(canon(mu), max_length)
    return schur_decompose(prod)


def partitions_of(k: int):
    """Partitions of k, largest-first lexicographic order."""

    def gen(rem, cap):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, cap), 0, -1):
            for rest in gen(rem - first, first):
                yield (first,) + rest

    if k < 0:
        return []
    return list(gen(k, k)) if k else [()]


def cauchy_exterior(ell: int) -> list:
    """Pairs (mu^t, mu) over |mu| = ell, the summands of the exterior
    power of a tensor product under the Cauchy decomposition."""
    return [(transpose(mu), mu) for mu in partitions_of(ell)]


def cauchy_symmetric(k: int) -> list:
    """Pairs (mu, mu) over |mu| = k, the summands of the symmetric power
    of a tensor product under the Cauchy decomposition."""
    return [(mu, mu) for mu in partitions_of(k)]


def dual_weight(alpha) -> tuple:
    """Weight of the dual representation: reverse and negate."""
    alpha = tuple(alpha)
    for a, b in zip(alpha, alpha[1:]):
        if a < b:
            raise ValueError(f"weight {alpha} not weakly decreasing")
    return tuple(-a for a in reversed(alpha))
