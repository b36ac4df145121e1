"""
Built-in reference models
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Sequence, Tuple

from algebra.rational import to_rational
from algebra.symmatrix import SymMatrix
from geometry.frame import FrameManifold
from paracontact.structure import ParacontactStructure
from utils.errors import UnknownModel

Bracket = Tuple[int, int, int, Fraction]


@dataclass(frozen=True)
class ModelSpec:
    """Frame, metric and (φ, ξ, η) of a homogeneous model, with 1-based bracket indices.

    structure_constants holds (i, j, k, c^k_ij) with i < j, sorted, zeros dropped;
    phi[i] lists the components of φE_{i+1}.
    """

    name: str
    dim: int
    structure_constants: Tuple[Bracket, ...]
    metric: Tuple[Tuple[Fraction, ...], ...]
    phi: Tuple[Tuple[Fraction, ...], ...]
    xi: Tuple[Fraction, ...]
    eta: Tuple[Fraction, ...]

    @classmethod
    def create(cls, name: str, dim: int, structure_constants: Iterable[Sequence], metric: Sequence[Sequence],
               phi: Sequence[Sequence], xi: Sequence, eta: Sequence) -> "ModelSpec":
        """Normalize loose input: brackets with i > j are flipped and negated"""
        brackets: Dict[Tuple[int, int, int], Fraction] = {}
        for i, j, k, value in structure_constants:
            value = to_rational(value)
            if i > j:
                i, j, value = j, i, -value
            brackets[(i, j, k)] = brackets.get((i, j, k), Fraction(0)) + value

        return cls(
            name=name,
            dim=dim,
            structure_constants=tuple((i, j, k, v) for (i, j, k), v in sorted(brackets.items()) if v != 0),
            metric=_rows(metric),
            phi=_rows(phi),
            xi=tuple(to_rational(v) for v in xi),
            eta=tuple(to_rational(v) for v in eta),
        )


def _rows(rows: Sequence[Sequence]) -> Tuple[Tuple[Fraction, ...], ...]:
    return tuple(tuple(to_rational(v) for v in row) for row in rows)


def _diagonal(values: Sequence[int]) -> List[List[int]]:
    n = len(values)
    return [[values[i] if i == j else 0 for j in range(n)] for i in range(n)]


def _standard_phi() -> List[List[int]]:
    return [[0, 1, 0], [1, 0, 0], [0, 0, 0]]


def example_frame_spec() -> ModelSpec:
    """[E1,E2] = 2E3, [E1,E3] = 2E2, [E2,E3] = 2E1 with g = diag(1,−1,1), φE1 = E2, φE2 = E1, ξ = E3"""
    return ModelSpec.create(
        "paper_example", 3,
        [(1, 2, 3, 2), (1, 3, 2, 2), (2, 3, 1, 2)],
        _diagonal([1, -1, 1]), _standard_phi(), [0, 0, 1], [0, 0, 1],
    )


def abelian_flat_spec() -> ModelSpec:
    return ModelSpec.create("abelian_flat", 3, [], _diagonal([1, -1, 1]), _standard_phi(), [0, 0, 1], [0, 0, 1])


def heisenberg_type_spec(n: int = 1) -> ModelSpec:
    """(2n+1)-dimensional para-Heisenberg frame: [E_i, E_{i+n}] = 2ξ, ξ = E_{2n+1}.

    g = diag(1,…,1, −1,…,−1, 1), φE_i = E_{i+n}, φE_{i+n} = E_i.
    """
    if n < 1:
        raise ValueError(f"para-Heisenberg frames need n ≥ 1, got {n}")
    d = 2 * n + 1
    phi = [[0] * d for _ in range(d)]
    for i in range(n):
        phi[i][i + n] = 1
        phi[i + n][i] = 1
    unit = [0] * (d - 1) + [1]
    name = "para_heisenberg" if n == 1 else f"para_heisenberg_{d}"
    return ModelSpec.create(
        name, d,
        [(i, i + n, d, 2) for i in range(1, n + 1)],
        _diagonal([1] * n + [-1] * n + [1]), phi, unit, unit,
    )


_BUILTINS: Dict[str, Callable[[], ModelSpec]] = {
    "paper_example": example_frame_spec,
    "para_heisenberg": heisenberg_type_spec,
    "abelian_flat": abelian_flat_spec,
}


def builtin_names() -> List[str]:
    return list(_BUILTINS)


def builtin(name: str) -> ModelSpec:
    try:
        return _BUILTINS[name]()
    except KeyError:
        raise UnknownModel(f"unknown model '{name}'; built-in models: {', '.join(_BUILTINS)}") from None


def to_frame(spec: ModelSpec) -> FrameManifold:
    return FrameManifold.from_brackets(SymMatrix.from_rows(spec.metric), spec.structure_constants)


def to_structure(spec: ModelSpec) -> ParacontactStructure:
    return ParacontactStructure.create(to_frame(spec), spec.phi, spec.xi, spec.eta)
