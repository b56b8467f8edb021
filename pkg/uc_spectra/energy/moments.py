"""Spectral moments and short-cycle counts of G_R and L(G_R) in closed form."""

from math import comb, prod
from typing import Sequence

from uc_spectra import UcSpectraError, exact_div
from uc_spectra.models.graph import GraphKind
from uc_spectra.models.ring import RingSpec


class LengthMismatch(UcSpectraError, ValueError):
    pass


def moment_unitary(spec: RingSpec, k: int) -> int:
    if k < 0:
        raise ValueError(f"moment order must be non-negative, got {k}")
    if k == 0:
        return spec.order
    return spec.unit_count * prod(
        factor.unit_count ** (k - 1) - (-factor.ideal_order) ** (k - 1) for factor in spec.factors
    )


def generic_line_moment(n: int, r: int, base_moments: Sequence[int], k: int) -> int:
    """k-th spectral moment of the line graph of any r-regular graph on n vertices,
    given that graph's moments s_0..s_k (extra trailing moments are ignored)."""
    if k < 0:
        raise ValueError(f"moment order must be non-negative, got {k}")
    if n < 1 or r < 1:
        raise ValueError(f"need n >= 1 and r >= 1, got n={n}, r={r}")
    if len(base_moments) < k + 1:
        raise LengthMismatch(f"moment {k} needs {k + 1} base moments, got {len(base_moments)}")
    if k == 0:
        return base_moments[0] + exact_div(n * (r - 2), 2, "line graph order")
    return sum(
        comb(k, j) * (r - 2) ** (k - j) * base_moments[j] for j in range(k + 1)
    ) - (-2) ** (k - 1) * n * (r - 2)


def moment_line(spec: RingSpec, k: int) -> int:
    if k < 0:
        raise ValueError(f"moment order must be non-negative, got {k}")
    units = spec.unit_count
    if units == 1:
        # edgeless line graph
        return exact_div(spec.order, 2, "line graph order") if k == 0 else 0
    base = [moment_unitary(spec, j) for j in range(k + 1)]
    return generic_line_moment(spec.order, units, base, k)


def _factor_product(spec: RingSpec, power: int) -> int:
    if power == 1:
        return prod(factor.unit_count - factor.ideal_order for factor in spec.factors)
    return prod(
        factor.unit_count**2 - factor.unit_count * factor.ideal_order + factor.ideal_order**2
        for factor in spec.factors
    )


def cycle_count(spec: RingSpec, target: GraphKind, length: int) -> int:
    """Triangles (length 3) or 4-cycles (length 4) in G_R or in L(G_R)."""
    target = GraphKind(target)
    if target == GraphKind.COMPLEMENT:
        raise ValueError("cycle counts are available for the unitary and line graphs only")
    if length not in (3, 4):
        raise ValueError(f"cycle length must be 3 or 4, got {length}")
    r, order = spec.unit_count, spec.order
    scale = r * order
    if length == 3:
        if target == GraphKind.UNITARY:
            return exact_div(scale * _factor_product(spec, 1), 6, "triangle count")
        return exact_div(
            scale * (_factor_product(spec, 1) + (r - 1) * (r - 2)), 6, "line triangle count"
        )
    if target == GraphKind.UNITARY:
        return exact_div(scale * (1 - 2 * r + _factor_product(spec, 2)), 8, "4-cycle count")
    return exact_div(
        scale
        * (
            r * (r - 3) ** 2
            - 5
            + 4 * (r - 2) * _factor_product(spec, 1)
            + _factor_product(spec, 2)
        ),
        8,
        "line 4-cycle count",
    )
