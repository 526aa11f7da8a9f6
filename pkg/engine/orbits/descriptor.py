"""
Orbit descriptors and catalog representatives.

A descriptor names a nilpotent K_C-orbit in p_C by a partition (sl(n,R),
with label I/II for very even partitions), by signed Young tableau rows
(su(p,q)) or by an explicit matrix.
"""

from __future__ import annotations
import logging
import math
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Any, Dict, List, Optional, Sequence, Tuple

from engine.errors import DescriptorError, InputError
from engine.lie.realization import SL_R, SU, AlgebraRealization, Element
from engine.math.mat import ExactMatrix
from engine.math.scalar import ExactScalar

logger = logging.getLogger(__name__)

PARTITION = "partition"
SIGNED = "signed"
MATRIX = "matrix"


@dataclass(frozen=True)
class OrbitDescriptor:
    partition: Tuple[int, ...] = ()
    label: Optional[str] = None
    signed: Tuple[str, ...] = ()
    matrix: Optional[ExactMatrix] = None

    def __post_init__(self) -> None:
        kinds = sum([bool(self.partition), bool(self.signed), self.matrix is not None])
        if kinds != 1:
            raise DescriptorError(
                "an orbit descriptor needs exactly one of partition, signed or matrix"
            )
        if self.partition and any(part < 1 for part in self.partition):
            raise DescriptorError(f"partition parts must be positive: {list(self.partition)}")
        if self.label is not None and self.label not in ("I", "II"):
            raise DescriptorError(f"orbit label must be 'I' or 'II', got {self.label!r}")
        for row in self.signed:
            if not row or any(c not in "+-" for c in row):
                raise DescriptorError(f"signed row {row!r} may only contain '+' and '-'")
            if any(row[i] == row[i + 1] for i in range(len(row) - 1)):
                raise DescriptorError(f"signs must alternate along the row {row!r}")

    @property
    def kind(self) -> str:
        if self.partition:
            return PARTITION
        if self.signed:
            return SIGNED
        return MATRIX

    @property
    def parts(self) -> Tuple[int, ...]:
        if self.partition:
            return tuple(sorted(self.partition, reverse=True))
        return tuple(sorted((len(r) for r in self.signed), reverse=True))

    def to_json(self) -> Dict[str, Any]:
        if self.kind == PARTITION:
            data: Dict[str, Any] = {"partition": list(self.partition)}
            if self.label is not None:
                data["label"] = self.label
            return data
        if self.kind == SIGNED:
            return {"signed": " ".join(self.signed)}
        return {"matrix": self.matrix.to_json()}

    @staticmethod
    def from_json(data: Any) -> OrbitDescriptor:
        """
        Accepts {"partition": [2, 2], "label": "I"}, {"signed": "+-+ +-+"}
        (rows separated by spaces, either minus sign accepted) or
        {"matrix": [[...]]}.
        """
        if isinstance(data, OrbitDescriptor):
            return data
        if not isinstance(data, dict):
            raise DescriptorError(f"orbit descriptor must be a table, got {data!r}")
        try:
            if "partition" in data:
                parts = data["partition"]
                if not isinstance(parts, list) or not all(
                    isinstance(p, int) and not isinstance(p, bool) for p in parts
                ):
                    raise DescriptorError(f"partition must be a list of integers: {parts!r}")
                return OrbitDescriptor(partition=tuple(parts), label=data.get("label"))
            if "signed" in data:
                rows = data["signed"]
                if isinstance(rows, str):
                    rows = rows.replace(",", " ").split()
                rows = tuple(str(r).replace("−", "-") for r in rows)
                return OrbitDescriptor(signed=rows)
            if "matrix" in data:
                return OrbitDescriptor(matrix=ExactMatrix.from_json(data["matrix"]))
        except DescriptorError:
            raise
        except InputError as exc:
            raise DescriptorError(str(exc)) from exc
        raise DescriptorError(f"orbit descriptor {data!r} has no partition, signed or matrix key")


def _check_partition(parts: Sequence[int], n: int) -> None:
    if sum(parts) != n:
        raise DescriptorError(f"partition {list(parts)} does not sum to {n}")


def representative(realization: AlgebraRealization, d: OrbitDescriptor) -> Element:
    """
    A nilpotent e in p_C in the orbit named by the descriptor, as basis
    coordinates.
    """
    family = realization.descriptor.family
    if d.kind == MATRIX:
        e = _explicit_matrix(realization, d.matrix)
    elif family == SL_R:
        if d.kind != PARTITION:
            raise DescriptorError("sl_R orbits are described by a partition")
        e = split_representative(realization.n, d.partition, d.label)
    elif family == SU:
        rows = d.signed if d.kind == SIGNED else unique_signed_rows(
            d.partition, realization.descriptor.p, realization.descriptor.q
        )
        e = unitary_representative(realization.descriptor.p, realization.descriptor.q, rows)
    else:
        raise DescriptorError(f"no representatives for family '{family}'")

    coords = realization.coordinates(e)
    if not realization.in_p(coords):
        raise DescriptorError("representative is not in p_C")
    logger.debug("representative for %s: %s", d.to_json(), e)
    return coords


def _explicit_matrix(realization: AlgebraRealization, e: ExactMatrix) -> ExactMatrix:
    if e.n != realization.n:
        raise DescriptorError(f"matrix is {e.n}x{e.n}, expected {realization.n}x{realization.n}")
    if not e.is_nilpotent():
        raise DescriptorError("explicit matrix is not nilpotent")
    if not realization.contains(e):
        raise DescriptorError(f"explicit matrix is not in {realization.name}")
    if not realization.in_p(realization.coordinates(e)):
        raise DescriptorError("explicit matrix is not in p_C")
    return e


# sl(n, R)
def split_representative(n: int, partition: Sequence[int], label: Optional[str] = None) -> ExactMatrix:
    """
    Complex symmetric nilpotent with Jordan type `partition`.

    Each part k uses a hyperbolic basis w_1..w_k with w_a^T w_b = 1 iff
    a + b = k + 1: w_a = e_s + i e_t and w_{k+1-a} = (e_s - i e_t)/2 on a
    standard pair (s, t), plus e_m in the middle for odd k. Then
    e = sum_j w_{j+1} w_{k+1-j}^T maps w_j to w_{j+1} and is symmetric.
    """
    parts = sorted(partition, reverse=True)
    _check_partition(parts, n)
    very_even = all(k % 2 == 0 for k in parts)
    if label is not None and not very_even:
        raise DescriptorError("labels I/II only apply when every part is even")

    # pair slots sorted by the x-eigenvalue they carry
    slots = [
        (k + 1 - 2 * a, index, a)
        for index, k in enumerate(parts)
        for a in range(1, k // 2 + 1)
    ]
    slots.sort(key=lambda s: (-s[0], s[1], s[2]))
    pair_of: Dict[Tuple[int, int], Tuple[int, int]] = {}
    for slot, (_, index, a) in enumerate(slots):
        pair_of[(index, a)] = (2 * slot, 2 * slot + 1)
    free = 2 * len(slots)
    middle_of: Dict[int, int] = {}
    for index, k in enumerate(parts):
        if k % 2:
            middle_of[index] = free
            free += 1

    i = ExactScalar(0, 1)
    half = ExactScalar(1) / 2
    entries: Dict[Tuple[int, int], ExactScalar] = {}
    for index, k in enumerate(parts):
        w: Dict[int, Dict[int, ExactScalar]] = {}
        for a in range(1, k // 2 + 1):
            s, t = pair_of[(index, a)]
            w[a] = {s: ExactScalar(1), t: i}
            w[k + 1 - a] = {s: half, t: -i * half}
        if k % 2:
            w[(k + 1) // 2] = {middle_of[index]: ExactScalar(1)}
        for j in range(1, k):
            for r, u in w[j + 1].items():
                for c, v in w[k + 1 - j].items():
                    term = u * v
                    entries[(r, c)] = entries[(r, c)] + term if (r, c) in entries else term

    # clear denominators
    scale = 1
    for value in entries.values():
        scale = math.lcm(scale, value.re.denominator, value.im.denominator)
    e = ExactMatrix(n, entries).scale(scale)

    if very_even and label == "II":
        flip = ExactMatrix.diagonal([1] * (n - 1) + [-1])
        e = flip.mul_mat(e).mul_mat(flip)
    return e


# su(p, q)
def unitary_representative(p: int, q: int, rows: Sequence[str]) -> ExactMatrix:
    """
    Matrix-unit chains from signed tableau rows. A row of length k gives a
    chain v_1 -> ... -> v_k whose x-eigenvalues run from -(k-1) to k-1;
    within each block coordinates are handed out by descending eigenvalue.
    """
    plus = sum(row.count("+") for row in rows)
    minus = sum(row.count("-") for row in rows)
    if (plus, minus) != (p, q):
        raise DescriptorError(
            f"signed rows {' '.join(rows)} have signature ({plus},{minus}), expected ({p},{q})"
        )

    slots = [
        (row[j - 1], 2 * j - len(row) - 1, r, j)
        for r, row in enumerate(rows)
        for j in range(1, len(row) + 1)
    ]
    coordinate: Dict[Tuple[int, int], int] = {}
    for sign, offset in (("+", 0), ("-", p)):
        block = sorted((s for s in slots if s[0] == sign), key=lambda s: (-s[1], s[2], s[3]))
        for position, (_, _, r, j) in enumerate(block):
            coordinate[(r, j)] = offset + position

    entries = {}
    for r, row in enumerate(rows):
        for j in range(1, len(row)):
            entries[(coordinate[(r, j + 1)], coordinate[(r, j)])] = ExactScalar(1)
    return ExactMatrix(p + q, entries)


def unique_signed_rows(partition: Sequence[int], p: int, q: int) -> Tuple[str, ...]:
    """
    The signed rows of the only signed tableau with this shape and
    signature (p, q). Raises when the shape does not determine one.
    """
    parts = sorted(partition, reverse=True)
    _check_partition(parts, p + q)

    def row(length: int, start: str) -> str:
        other = "-" if start == "+" else "+"
        return "".join(start if j % 2 == 0 else other for j in range(length))

    lengths = sorted(Counter(parts).items(), reverse=True)
    solutions = []
    for choice in product(*(range(m + 1) for _, m in lengths)):
        plus = sum(
            s * ((k + 1) // 2) + (m - s) * (k // 2) for (k, m), s in zip(lengths, choice)
        )
        if plus == p:
            solutions.append(choice)

    if len(solutions) != 1:
        raise DescriptorError(
            f"partition {parts} admits {len(solutions)} signed tableaux for su({p},{q}); "
            "give the signed rows instead"
        )
    rows: List[str] = []
    for (k, m), s in zip(lengths, solutions[0]):
        rows += [row(k, "+")] * s + [row(k, "-")] * (m - s)
    return tuple(rows)
