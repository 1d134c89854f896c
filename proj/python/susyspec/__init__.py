"""Spectra of shape-invariant supersymmetric problems and position-dependent-mass models."""

import json

from . import _susyspec
from ._susyspec import Error, item10_energy

__all__ = [
    "Error",
    "catalog",
    "config_schema",
    "energy_levels",
    "factorization_constant",
    "item10_energy",
    "pdm_spectrum",
    "run",
]


def catalog():
    """List of catalog kinds with their domains and factorization constants."""
    return json.loads(_susyspec._catalog())


def energy_levels(kind, n_max=3, **params):
    """Analytic levels 0..n_max of a catalog kind, e.g. energy_levels("inverse", nu=1, omega=1)."""
    return json.loads(_susyspec._energy_levels(kind, json.dumps(params), n_max))


def factorization_constant(kind, **params):
    return _susyspec.factorization_constant(kind, json.dumps(params))


def pdm_spectrum(row, alpha, nu=0.0, l=0, n_max=2, numeric=True):
    """Levels of a position-dependent-mass row with the eigensolver cross-check."""
    return json.loads(_susyspec._pdm_spectrum(row, alpha, nu, l, n_max, numeric))


def run(config):
    """Run one CLI configuration (a dict) and return the artifact text."""
    return _susyspec._run(json.dumps(config))


def config_schema():
    return json.loads(_susyspec._config_schema())
