"""
Constant-component tensor fields on a frame.

Component layout: covariant (argument) slots come first, contravariant
(output) slots last. So a (1,3) tensor R has R[i, j, k, l] = the E_l
component of R(E_i, E_j)E_k, and a (1,1) tensor φ has phi[i, l] = the E_l
component of φ(E_i). An endomorphism given as a matrix M acts on a
vector v as v @ M.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

import numpy as np

from algebra.rational import to_rational
from utils.errors import DimensionMismatch


def zeros(shape) -> np.ndarray:
    """Object array of exact zeros"""
    return np.full(shape, Fraction(0), dtype=object)


def exact_array(values) -> np.ndarray:
    """Nested sequence of ints / Fractions / "p/q" strings to an object array of Fractions"""
    raw = np.array(values, dtype=object)
    out = np.empty(raw.shape, dtype=object)
    for index in np.ndindex(raw.shape):
        out[index] = to_rational(raw[index])
    return out


def basis_vector(dim: int, index: int) -> np.ndarray:
    """E_{index+1} as a component vector (index is 0-based)"""
    v = zeros(dim)
    v[index] = Fraction(1)
    return v


def is_zero(array: np.ndarray) -> bool:
    return all(value == 0 for value in np.asarray(array, dtype=object).flat)


def derivation(components: np.ndarray, endo: np.ndarray, contravariant: int) -> np.ndarray:
    """Let an endomorphism act on a tensor as a derivation.

    Each output slot picks up endo applied to its vector, each argument slot
    picks up minus the tensor evaluated with endo applied to that argument.
    This is the algebraic core of both ∇_{E_z} on constant components
    (endo = Γ[z]) and of R(E_i, E_j)· (endo = R[i, j]).
    """
    rank = components.ndim
    covariant = rank - contravariant
    result = zeros(components.shape)

    for axis in range(covariant, rank):
        term = np.tensordot(components, endo, axes=([axis], [0]))
        result = result + np.moveaxis(term, -1, axis)

    for axis in range(covariant):
        term = np.tensordot(endo, components, axes=([1], [axis]))
        result = result - np.moveaxis(term, 0, axis)

    return result


@dataclass(frozen=True, eq=False)
class TensorField:
    """Left-invariant tensor field of valence (p, q): p outputs, q arguments"""

    valence: Tuple[int, int]
    components: np.ndarray

    def __post_init__(self):
        p, q = self.valence
        array = np.array(self.components, dtype=object)
        if array.ndim != p + q:
            raise DimensionMismatch(f"valence {self.valence} needs {p + q} indices, got {array.ndim}")
        if array.ndim and len(set(array.shape)) != 1:
            raise DimensionMismatch(f"component array is not cubic: shape {array.shape}")
        array.flags.writeable = False
        object.__setattr__(self, 'components', array)

    @classmethod
    def from_values(cls, valence: Tuple[int, int], values: Sequence) -> "TensorField":
        return cls(valence, exact_array(values))

    @property
    def dim(self) -> int:
        return self.components.shape[0] if self.components.ndim else 0

    @property
    def contravariant(self) -> int:
        return self.valence[0]

    @property
    def covariant(self) -> int:
        return self.valence[1]

    def is_zero(self) -> bool:
        return is_zero(self.components)

    def equals(self, other: "TensorField") -> bool:
        return (self.valence == other.valence
                and self.components.shape == other.components.shape
                and all(a == b for a, b in zip(self.components.flat, other.components.flat)))

    def __getitem__(self, index):
        return self.components[index]


def contract(components: np.ndarray, *vectors):
    """Feed vectors into the leading slots one after another.

    With as many vectors as slots the result is a single Fraction.
    """
    result = np.asarray(components, dtype=object)
    for v in vectors:
        result = np.tensordot(v, result, axes=([0], [0]))
    if isinstance(result, np.ndarray) and result.ndim == 0:
        return result.item()
    return result


def apply_to_slots(components: np.ndarray, matrix: np.ndarray, axes) -> np.ndarray:
    """Substitute E_i ↦ (row i of matrix) in the given argument slots"""
    result = np.asarray(components, dtype=object)
    for axis in axes:
        result = np.moveaxis(np.tensordot(matrix, result, axes=([1], [axis])), 0, axis)
    return result
