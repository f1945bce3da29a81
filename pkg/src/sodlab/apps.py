"""Parameter tables for the classical applications.

Blowups of determinantal ideals, reducible schemes, and varieties of
linear series on curves.  Tables carry descriptors and counts only; no
geometry of the targets is modeled.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb


@dataclass(frozen=True)
class VirtualDimensions:
    """Virtual dimensions of the three relative moduli over a base.

    `incidence` uses the value forced by realizing the incidence locus as
    an iterated Grassmannian, dim X + r(d+ - d-) + d+ d- - d+^2 - d-^2;
    `incidence_naive` drops the factor r from the first correction term
    and is reported alongside for comparison.
    """

    grass_plus: int
    grass_minus: int
    incidence: int
    incidence_naive: int


def virtual_dimensions(dim_x: int, r: int, d_plus: int, d_minus: int) -> VirtualDimensions:
    """Expected dimensions of the rank-d+ and rank-d- moduli and their
    incidence correspondence over a base of constant dimension."""
    if d_plus < 0 or d_minus < 0:
        raise ValueError("ranks must be nonnegative")
    return VirtualDimensions(
        grass_plus=dim_x + d_plus * (r - d_plus),
        grass_minus=dim_x - d_minus * (r + d_minus),
        incidence=dim_x + r * (d_plus - d_minus)
        + d_plus * d_minus - d_plus ** 2 - d_minus ** 2,
        incidence_naive=dim_x + (d_plus - d_minus)
        + d_plus * d_minus - d_plus ** 2 - d_minus ** 2,
    )


def incidence_vdim_by_composition(dim_x: int, r: int, d_plus: int, d_minus: int) -> int:
    """Independent route: the incidence locus is the rank-d+ Grassmannian
    of a rank (r + d-) complex over the rank-d- side."""
    over_minus = dim_x - d_minus * (r + d_minus)
    return over_minus + d_plus * ((r + d_minus) - d_plus)


@dataclass(frozen=True)
class DecompositionRow:
    copies: int
    target: str
    index: int
    virtual_dim: int | None = None


@dataclass(frozen=True)
class DecompositionTable:
    title: str
    rows: tuple
    order_note: str
    source: str = ""
    source_vdim: int | None = None

    @property
    def total_components(self) -> int:
        return sum(row.copies for row in self.rows)


def curves_table(g: int, d: int, r: int) -> DecompositionTable:
    """Decomposition of the variety of degree-d linear series of dimension r
    on a genus-g curve into linear series of the residual degree 2g-2-d.

    Row i holds binom(1-g+d, i) copies of G^(r-i)_(2g-2-d) for
    0 <= i <= min(1-g+d, r+1); virtual dimensions are computed over the
    degree-d Picard scheme (dimension g) with complex rank 1-g+d.
    """
    if g < 1:
        raise ValueError(f"genus must be >= 1, got {g}")
    if d < g - 1:
        raise ValueError(f"need degree d >= g-1, got d={d} g={g}")
    if r < -1:
        raise ValueError(f"need r >= -1, got {r}")
    rank = 1 - g + d
    d_res = 2 * g - 2 - d
    rows = []
    for i in range(min(rank, r + 1) + 1):
        vdims = virtual_dimensions(g, rank, r + 1, r + 1 - i)
        rows.append(DecompositionRow(
            copies=comb(rank, i),
            target=f"G^{r - i}_{d_res}",
            index=i,
            virtual_dim=vdims.grass_minus,
        ))
    source_vdim = virtual_dimensions(g, rank, r + 1, 0).grass_plus
    return DecompositionTable(
        title=f"linear series g={g} d={d} r={r}",
        rows=tuple(rows),
        order_note="blocks ordered by i ascending; inside each block as in "
                   "the main order",
        source=f"G^{r}_{d}",
        source_vdim=source_vdim,
    )


def blowup_table(r: int) -> DecompositionTable:
    """Blowup of a determinantal subscheme of codimension r + 1: binom(r, j)
    copies of the partial resolution of the j-th degeneracy locus, then
    one copy of the base."""
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    rows = [
        DecompositionRow(copies=comb(r, j), target=f"X~_{j}", index=j)
        for j in range(1, r + 1)
    ] + [DecompositionRow(copies=1, target="X", index=0)]
    return DecompositionTable(
        title=f"determinantal blowup r={r}",
        rows=tuple(rows),
        order_note="degeneracy blocks for 1 <= j <= r first, base last",
    )


def reducible_table(r: int) -> DecompositionTable:
    """Blowup glued to a projective bundle along the exceptional divisor:
    r copies of the shifted line-bundle total space indexed -r..-1, then
    one copy of the base."""
    if r < 1:
        raise ValueError(f"need r >= 1, got {r}")
    rows = [
        DecompositionRow(copies=1, target="Tot_Z(L_Z[-1])", index=j)
        for j in range(-r, 0)
    ] + [DecompositionRow(copies=1, target="X", index=0)]
    return DecompositionTable(
        title=f"reducible scheme r={r}",
        rows=tuple(rows),
        order_note="indices -r..-1 ascending, base last",
    )


def brill_noether_number(g: int, r: int, d: int) -> int:
    """rho = g - (r+1)(g - d + r)."""
    return g - (r + 1) * (g - d + r)
