"""Tests for the built-in catalog and model files."""

import json
from fractions import Fraction

import pytest

from models.catalog import ModelSpec, builtin, builtin_names, heisenberg_type_spec, to_frame, to_structure
from models.loader import dumps, export, load, loads, resolve
from utils.errors import DimensionMismatch, DuplicateEntry, ParseError, UnknownModel

VALID = """{
  "name": "sample",
  "dim": 3,
  "structure_constants": [[2, 1, 3, -2], [1, 3, 2, "2"], [2, 3, 1, "4/2"]],
  "metric": [[1, 0, 0], [0, -1, 0], [0, 0, 1]],
  "phi": [[0, 1, 0], [1, 0, 0], [0, 0, 0]],
  "xi": [0, 0, 1],
  "eta": [0, 0, "1"]
}
"""


def document(**changes) -> str:
    data = json.loads(VALID)
    data.update(changes)
    return json.dumps(data, indent=2)


class TestCatalog:

    def test_builtin_names(self):
        assert builtin_names() == ["paper_example", "para_heisenberg", "abelian_flat"]

    def test_unknown_builtin(self):
        with pytest.raises(UnknownModel):
            builtin("bogus")

    def test_create_normalizes_brackets(self):
        spec = ModelSpec.create("m", 3, [(2, 1, 3, 1), (1, 3, 2, 0), (1, 2, 3, 1)],
                                [[1, 0, 0], [0, -1, 0], [0, 0, 1]], [[0] * 3] * 3, [0, 0, 1], [0, 0, 1])
        # (2,1,3,1) flips to (1,2,3,−1) and cancels; zeros are dropped
        assert spec.structure_constants == ()

    def test_heisenberg_family(self):
        spec = heisenberg_type_spec(2)
        assert spec.name == "para_heisenberg_5"
        assert spec.structure_constants == ((1, 3, 5, 2), (2, 4, 5, 2))
        assert spec.phi[0][2] == 1 and spec.phi[2][0] == 1
        assert heisenberg_type_spec().name == "para_heisenberg"
        with pytest.raises(ValueError):
            heisenberg_type_spec(0)

    def test_to_structure(self):
        s = to_structure(builtin("paper_example"))
        assert s.dim == 3
        assert to_frame(builtin("paper_example")).c[1, 2, 0] == 2


class TestLoader:

    def test_loads_matches_builtin(self):
        spec = loads(VALID)
        example = builtin("paper_example")
        assert spec.structure_constants == example.structure_constants
        assert spec.metric == example.metric
        assert spec.eta == (0, 0, 1)

    def test_dumps_is_canonical(self):
        text = dumps(builtin("paper_example"))
        assert text.endswith("}\n")
        assert '[1, 2, 3, "2"]' in text
        assert '"metric": [\n    ["1", "0", "0"],' in text
        assert loads(text) == builtin("paper_example")

    def test_dumps_round_trip_for_every_builtin(self):
        for name in builtin_names():
            spec = builtin(name)
            assert loads(dumps(spec)) == spec
            assert dumps(loads(dumps(spec))) == dumps(spec)

    def test_rationals_keep_lowest_terms(self):
        spec = loads(document(metric=[["2/4", 0, 0], [0, -1, 0], [0, 0, 1]]))
        assert spec.metric[0][0] == Fraction(1, 2)
        assert '["1/2", "0", "0"]' in dumps(spec)

    def test_export_and_load(self, tmp_path):
        path = export(builtin("para_heisenberg"), tmp_path / "heis.json")
        assert load(path) == builtin("para_heisenberg")

    @pytest.mark.parametrize("text, message", [
        ("{", "invalid JSON"),
        ("[]", "top level"),
        (document(extra=1), "unknown key"),
        (document(dim=1.0), "not an integer"),
        (document(dim=True), "not an integer"),
        (document(xi=[0, 0, 0.5]), "not an integer or"),
        (document(xi=[0, 0, "1/0"]), "zero denominator"),
        (document(metric=[[1, 2, 0], [0, -1, 0], [0, 0, 1]]), "not symmetric"),
        (document(structure_constants=[[1, 1, 3, 2]]), "with itself"),
        (document(structure_constants=[[1, 2, 3]]), "[i, j, k, value]"),
        (document(name=""), "non-empty"),
    ])
    def test_parse_errors(self, text, message):
        with pytest.raises(ParseError) as excinfo:
            loads(text, source="bad.json")
        assert message in str(excinfo.value)
        assert str(excinfo.value).startswith("bad.json")

    def test_parse_error_location(self):
        text = document(metric=[[1, 2, 0], [0, -1, 0], [0, 0, 1]])
        with pytest.raises(ParseError) as excinfo:
            loads(text)
        assert excinfo.value.field == "metric"
        assert text.splitlines()[excinfo.value.line - 1].strip().startswith('"metric"')

    def test_missing_key(self):
        data = json.loads(VALID)
        del data["eta"]
        with pytest.raises(ParseError) as excinfo:
            loads(json.dumps(data))
        assert excinfo.value.field == "eta"

    @pytest.mark.parametrize("changes", [
        dict(xi=[0, 1]),
        dict(phi=[[0, 1, 0], [1, 0, 0]]),
        dict(metric=[[1, 0], [0, -1]]),
        dict(structure_constants=[[1, 2, 4, 1]]),
    ])
    def test_dimension_mismatch(self, changes):
        with pytest.raises(DimensionMismatch):
            loads(document(**changes))

    def test_duplicate_bracket(self):
        with pytest.raises(DuplicateEntry):
            loads(document(structure_constants=[[1, 2, 3, 2], [2, 1, 3, -2]]))

    def test_unreadable_file(self, tmp_path):
        with pytest.raises(ParseError):
            load(tmp_path / "missing.json")


class TestResolve:

    def test_builtin_name(self):
        assert resolve("abelian_flat") == builtin("abelian_flat")

    def test_path(self, tmp_path):
        path = tmp_path / "sample.json"
        path.write_text(VALID, encoding="utf-8")
        assert resolve(str(path)).name == "sample"

    def test_search_directory(self, tmp_path):
        (tmp_path / "sample.json").write_text(VALID, encoding="utf-8")
        assert resolve("sample", tmp_path).name == "sample"

    def test_unknown(self, tmp_path):
        with pytest.raises(UnknownModel):
            resolve("nowhere", tmp_path)
