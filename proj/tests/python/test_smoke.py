import json
import math
import pathlib

import jsonschema
import pytest

import susyspec

ROOT = pathlib.Path(__file__).resolve().parents[2]


def test_catalog_lists_the_matrix_kinds():
    names = {k["name"] for k in susyspec.catalog()}
    assert {"coulomb", "inverse", "tan", "dual-tan", "m7"} <= names


def test_inverse_levels():
    table = susyspec.energy_levels("inverse", n_max=2, nu=1.0, mu=0.0, omega=1.0)
    energies = [row["E_analytic"] for row in table["rows"]]
    assert energies == pytest.approx([-1 / 9, -1 / 25, -1 / 49], rel=1e-14)
    assert susyspec.factorization_constant("inverse", nu=2.0, omega=1.0) == pytest.approx(-1 / 25)


def test_pdm_row_with_numeric_check():
    spec = susyspec.pdm_spectrum("t2.10", alpha=13.0, nu=0.0, l=0, n_max=0)
    level = spec["levels"][0]
    assert level["E_analytic"] == pytest.approx(-9 * math.sqrt(2), rel=1e-9)
    assert level["err"] < 1e-4
    assert susyspec.item10_energy(4.0, 0.0, 0, 1) == pytest.approx(-49.0)


def test_run_matches_the_cli_artifact():
    text = susyspec.run({"command": "pdm", "row": "t1.1", "params": {"alpha": 4.0}, "n_max": 1})
    lines = text.strip().splitlines()
    assert lines[0] == "row,l,n,multiplicity,E_analytic,E_numeric,err"
    assert lines[1].startswith("t1.1,0,0,1,4,")


def test_errors_surface_as_python_exceptions():
    with pytest.raises(susyspec.Error, match="condk1"):
        susyspec.run({"command": "spectrum", "problem": "pot1", "params": {"nu": 0.5, "mu": 1.0}})
    with pytest.raises(susyspec.Error):
        susyspec.energy_levels("nosuch")


def test_shipped_schema_validates_configs():
    schema = json.loads((ROOT / "docs" / "config.schema.json").read_text())
    assert schema == susyspec.config_schema()
    jsonschema.validate({"command": "pdm", "row": "t2.10", "params": {"alpha": 13}}, schema)
    jsonschema.validate({"runs": [{"command": "catalog", "out": "a.json", "format": "json"}]}, schema)
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate({"command": "pdm", "grid": {"m": 10}}, schema)
