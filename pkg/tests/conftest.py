"""Shared fixtures: the built-in models and their derived curvature data."""

from dataclasses import dataclass

import pytest

from geometry.connection import Connection, levi_civita
from geometry.curvature import CurvatureBundle, curvature_bundle, nabla_curvature
from geometry.tensor import TensorField
from models.catalog import ModelSpec, builtin, heisenberg_type_spec, to_structure
from paracontact.structure import ParacontactStructure


def null_basis_spec() -> ModelSpec:
    """The reference example in the basis E1 + E2, E1 − E2, E3: every horizontal basis vector is null"""
    return ModelSpec.create(
        "null_basis_example", 3,
        [(1, 2, 3, -4), (1, 3, 1, 2), (2, 3, 2, -2)],
        [[0, 2, 0], [2, 0, 0], [0, 0, 1]],
        [[1, 0, 0], [0, -1, 0], [0, 0, 0]],
        [0, 0, 1], [0, 0, 1],
    )


@dataclass
class Analysed:
    s: ParacontactStructure
    conn: Connection
    cb: CurvatureBundle
    nabla_r: TensorField


def analyse(spec) -> Analysed:
    s = to_structure(spec)
    conn = levi_civita(s.base)
    cb = curvature_bundle(s.base, conn)
    return Analysed(s, conn, cb, nabla_curvature(s.base, conn, cb))


@pytest.fixture(scope="session")
def example():
    return analyse(builtin("paper_example"))


@pytest.fixture(scope="session")
def heisenberg():
    return analyse(builtin("para_heisenberg"))


@pytest.fixture(scope="session")
def heisenberg5():
    return analyse(heisenberg_type_spec(2))


@pytest.fixture(scope="session")
def abelian():
    return analyse(builtin("abelian_flat"))


@pytest.fixture
def null_spec():
    return null_basis_spec()


@pytest.fixture(scope="session")
def null_example():
    return analyse(null_basis_spec())
