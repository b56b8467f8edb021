from collections import Counter
from typing import Any, Callable, Dict, Iterable, List, Tuple

from pydantic.v1 import root_validator

from uc_spectra import InternalInconsistency

from .model import BaseModel


class NegativeMultiplicity(InternalInconsistency):
    pass


class Spectrum(BaseModel):
    """Integer eigenvalues of a graph with their multiplicities, merged and sorted by
    strictly decreasing value; ``order`` is the number of vertices."""

    entries: Tuple[Tuple[int, int], ...]
    order: int

    @root_validator(skip_on_failure=True)
    def entries_must_be_canonical(cls, values):
        entries = values["entries"]
        for (value, multiplicity) in entries:
            if multiplicity < 1:
                raise ValueError(f"eigenvalue {value} has multiplicity {multiplicity}")
        for (upper, _), (lower, _) in zip(entries, entries[1:]):
            if upper <= lower:
                raise ValueError("eigenvalues must be strictly decreasing")
        total = sum(multiplicity for _, multiplicity in entries)
        if total != values["order"]:
            raise ValueError(f"multiplicities sum to {total}, expected order {values['order']}")
        return values

    @classmethod
    def from_multiset(cls, pairs: Iterable[Tuple[int, int]]) -> "Spectrum":
        """Merges (value, multiplicity) pairs, dropping zero-multiplicity entries.

        Every pair must already carry a non-negative multiplicity; a negative one is a
        bug in whatever produced the pairs.
        """
        merged: Counter = Counter()
        for value, multiplicity in pairs:
            if multiplicity < 0:
                raise NegativeMultiplicity(
                    f"eigenvalue {value} was given multiplicity {multiplicity}"
                )
            merged[value] += multiplicity
        entries = tuple(
            (value, multiplicity)
            for value, multiplicity in sorted(merged.items(), reverse=True)
            if multiplicity > 0
        )
        return cls(entries=entries, order=sum(multiplicity for _, multiplicity in entries))

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "Spectrum":
        return cls.from_multiset((value, 1) for value in values)

    @property
    def eigenvalues(self) -> List[int]:
        return [value for value, _ in self.entries]

    def as_dict(self) -> Dict[int, int]:
        return dict(self.entries)

    def multiplicity(self, value: int) -> int:
        return self.as_dict().get(value, 0)

    def moment(self, k: int) -> int:
        if k == 0:
            return self.order
        return sum(value**k * multiplicity for value, multiplicity in self.entries)

    def energy(self) -> int:
        return sum(abs(value) * multiplicity for value, multiplicity in self.entries)

    def map_values(self, transform: Callable[[int], int]) -> "Spectrum":
        return Spectrum.from_multiset(
            (transform(value), multiplicity) for value, multiplicity in self.entries
        )

    def to_json_dict(self) -> Dict[str, Any]:
        return {"order": self.order, "entries": [[value, mult] for value, mult in self.entries]}

    @classmethod
    def from_json_dict(cls, data: Dict[str, Any]) -> "Spectrum":
        spectrum = cls.from_multiset((int(value), int(mult)) for value, mult in data["entries"])
        if spectrum.order != data["order"]:
            raise ValueError(f"spectrum order {data['order']} does not match its entries")
        return spectrum

    def to_csv(self) -> str:
        rows = ["value,mult"] + [f"{value},{mult}" for value, mult in self.entries]
        return "\n".join(rows) + "\n"
