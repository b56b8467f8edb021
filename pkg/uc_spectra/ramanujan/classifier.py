"""Ramanujan classification of G_R and its complement from the ring descriptor.

Products are matched on their multiset of local factors, trying the cases in
their published order; the first match wins. Every square-root inequality has
been squared out into an integer comparison.
"""

from typing import List, Optional, Sequence, Tuple

from uc_spectra.models.ring import LocalRingSpec, RingSpec
from uc_spectra.models.verdict import Verdict, VerdictMethod
from uc_spectra.ramanujan.bounds import le_two_sqrt

F2 = (2, 1)
F3 = (3, 1)
F4 = (4, 1)
Z4 = (4, 2)
NINE_THREE = (9, 3)  # Z/9 or GF(3)[x]/x^2

_TRIPLE_TAILS = {
    "b": [F3, F3, F3],
    "c": [F3, F3, F4],
    "d": [F4, F4, F4],
    "e": [F3, NINE_THREE],
}


def _split(spec: RingSpec) -> Tuple[List[LocalRingSpec], List[LocalRingSpec]]:
    """Residue-2 factors, then the rest (canonical order already groups them)."""
    heads = [factor for factor in spec.factors if factor.residue == 2]
    tail = [factor for factor in spec.factors if factor.residue != 2]
    return heads, tail


def _all_f2(factors: Sequence[LocalRingSpec]) -> bool:
    return all(factor.descriptor == F2 for factor in factors)


def _verdict(ramanujan: bool, degree: int, case_label: Optional[str]) -> Verdict:
    return Verdict(
        ramanujan=ramanujan,
        method=VerdictMethod.THEOREM,
        case_label=case_label if ramanujan else None,
        degree=degree,
    )


def _local_case(spec: RingSpec) -> Optional[str]:
    (factor,) = spec.factors
    if factor.order == 2 * factor.ideal_order:
        return "Thm3.1(a)"
    if factor.ideal_order != 2 and 4 * factor.order >= (factor.ideal_order + 2) ** 2:
        return "Thm3.1(b)"
    return None


def _two_field_tail(tail: Sequence[LocalRingSpec]) -> Optional[Tuple[int, int]]:
    if len(tail) != 2 or not all(factor.is_field for factor in tail):
        return None
    q1, q2 = sorted(factor.residue for factor in tail)
    return q1, q2


def _product_case(spec: RingSpec) -> Optional[str]:
    heads, tail = _split(spec)
    if not tail:
        return "Thm3.2(a)"

    tail_descriptors = sorted(factor.descriptor for factor in tail)
    if _all_f2(heads):
        for case, pattern in _TRIPLE_TAILS.items():
            if tail_descriptors == sorted(pattern):
                return f"Thm3.2({case})"

    fields = _two_field_tail(tail)
    head_descriptors = sorted(factor.descriptor for factor in heads)
    if fields is not None:
        q1, q2 = fields
        if head_descriptors.count(Z4) == 1 and _all_f2(
            [factor for factor in heads if factor.descriptor != Z4]
        ):
            if (q2 - q1) ** 2 <= (q1 - 2) * q1:
                return "Thm3.2(f)"
        if _all_f2(heads):
            gap = q2 + 1 - 2 * q1
            if le_two_sqrt(gap, (q1 - 2) * q1):
                return "Thm3.2(g)"

    if heads and len(tail) == 1:
        q = tail[0].residue
        excess = spec.ideal_product - 2 * (q - 1)
        if le_two_sqrt(excess, (q - 2) * q):
            return "Thm3.2(h)"
    return None


def classify_unitary(spec: RingSpec) -> Verdict:
    case_label = _local_case(spec) if spec.is_local else _product_case(spec)
    return _verdict(case_label is not None, spec.unit_count, case_label)


def _complement_case(spec: RingSpec) -> Optional[str]:
    order, units, s = spec.order, spec.unit_count, spec.s
    residue_two = spec.residue_two_count
    if residue_two == s:
        ideals = spec.ideal_product
        if (ideals + 1) ** 2 <= 4 * ((2**s - 1) * ideals - 2):
            return "Thm4.2(a)"
        return None
    if residue_two >= 2:
        return "Thm4.2(b)" if (units + 3) ** 2 <= 4 * order else None
    if residue_two == 1:
        return "Thm4.2(c)" if (units + 1) ** 2 <= 4 * (order - 2) else None
    d = spec.factors[0].residue
    u = units // (d - 1)
    if (u + 2 * d - 3) ** 2 <= (2 * d - 3) ** 2 + 4 * order - 9:
        return "Thm4.2(d)"
    return None


def classify_complement(spec: RingSpec) -> Verdict:
    degree = spec.order - 1 - spec.unit_count
    if spec.is_local:
        return _verdict(True, degree, "Thm4.1")
    case_label = _complement_case(spec)
    return _verdict(case_label is not None, degree, case_label)
