"""Acceptance suite: one test per headline criterion.

The criteria live in tidalclock.validate (shared with the ``validate`` CLI
subcommand); here each one becomes a pytest case that prints its pass/fail
line.  A coarse-grid negative control checks that the suite actually bites.
"""

import pytest

from tidalclock.validate import run_acceptance, _Knobs, _UnitarityLog
from tidalclock import validate as v


@pytest.fixture(scope="module")
def results():
    return {r.index: r for r in run_acceptance()}


def _report(r):
    mark = "PASS" if r.passed else "FAIL"
    print(f"\n[{mark}] criterion {r.index}: {r.name}\n"
          f"       measured: {r.measured}\n"
          f"       required: {r.required}")
    assert r.passed, f"criterion {r.index} failed: {r.measured}"


def test_criterion_01_free_particle_exactness(results):
    _report(results[1])


def test_criterion_02_classical_engines_agree(results):
    _report(results[2])


def test_criterion_03_equivalence_principle_coincidence(results):
    _report(results[3])


def test_criterion_04_t_prime_closed_form_vs_fd(results):
    _report(results[4])


def test_criterion_05_scaling_law(results):
    _report(results[5])


def test_criterion_06_algebraic_identities(results):
    _report(results[6])


def test_criterion_07_perturbative_convergence(results):
    _report(results[7])


def test_criterion_08_unitarity(results):
    _report(results[8])


def test_criterion_09_wavepacket_correspondence(results):
    _report(results[9])


def test_criterion_10_hbar_mass_audit(results):
    _report(results[10])


class TestNegativeControls:
    """Deliberately degraded numerics must fail the convergence criteria."""

    def test_coarse_clock_fails_coincidence(self):
        knobs = _Knobs.coarse()
        res = v._c3_equivalence(knobs, _UnitarityLog())
        assert not res.passed

    def test_coarse_grid_fails_wavepacket(self):
        knobs = _Knobs.coarse()
        res = v._c9_wavepacket(knobs, _UnitarityLog())
        assert not res.passed
