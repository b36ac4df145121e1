"""
Evaluate structure and curvature tensors on vectors, and check identities
over every tuple of basis vectors.
"""

import itertools
from typing import Callable, Optional

import numpy as np

from geometry.checks import IdentityReport, failing, passing
from geometry.curvature import CurvatureBundle
from geometry.tensor import TensorField, basis_vector, contract
from paracontact.structure import ParacontactStructure


class StructureCalculus:
    """Vector-level access to g, φ, ξ, η, R, Ric, Q and ∇R of one model"""

    def __init__(self, cb: CurvatureBundle, s: Optional[ParacontactStructure] = None,
                 nabla_r: Optional[TensorField] = None):
        self.cb = cb
        self.s = s
        self.nabla_r = nabla_r
        self.dim = cb.dim
        self.metric = cb.g
        self.scal = cb.scal

    def e(self, i: int) -> np.ndarray:
        return basis_vector(self.dim, i)

    def g(self, u, v):
        return np.dot(u, np.dot(self.metric, v))

    @property
    def xi(self) -> np.ndarray:
        return self.s.xi

    @property
    def n(self) -> int:
        return (self.dim - 1) // 2

    def eta(self, v):
        return np.dot(self.s.eta, v)

    def phi(self, v) -> np.ndarray:
        return np.dot(v, self.s.phi_matrix)

    def R(self, x, y, z) -> np.ndarray:
        """R(X,Y)Z"""
        return contract(self.cb.riemann.components, x, y, z)

    def R4(self, x, y, z, w):
        return contract(self.cb.riemann4.components, x, y, z, w)

    def ric(self, x, y):
        return contract(self.cb.ricci.components, x, y)

    def Q(self, x) -> np.ndarray:
        return contract(self.cb.ricci_operator.components, x)

    def nabla_R(self, z, x, y, w) -> np.ndarray:
        """(∇_Z R)(X,Y)W"""
        return contract(self.nabla_r.components, z, x, y, w)


def check_on_basis(name: str, dim: int, arity: int, residual: Callable) -> IdentityReport:
    """Evaluate residual(E_a, E_b, ...) over every basis tuple.

    Vector-valued residuals add the failing component as a last witness index.
    """
    for index in itertools.product(range(dim), repeat=arity):
        value = residual(*(basis_vector(dim, i) for i in index))
        label = tuple(i + 1 for i in index)
        if isinstance(value, np.ndarray):
            for component, entry in enumerate(value):
                if entry != 0:
                    return failing(name, label + (component + 1,), entry)
        elif value != 0:
            return failing(name, label, value)
    return passing(name)


def tensor_on_basis(dim: int, arity: int, value: Callable) -> np.ndarray:
    """Components value(E_a, E_b, ...) of a scalar-valued form"""
    components = np.empty((dim,) * arity, dtype=object)
    for index in itertools.product(range(dim), repeat=arity):
        components[index] = value(*(basis_vector(dim, i) for i in index))
    return components
