#!/usr/bin/env python3
"""
Pruebas de rendimiento: descubrimiento en tamaños medianos y la suite de
identidades de conmutación, con límites de tiempo holgados.
"""

import time

import pytest

from conftest import build_graded_suite
from invariants.annihilators import OperatorKind, apply_D, apply_Delta, commutator_residual, power_commutator_residual
from invariants.discovery import DiscoveryRequest, DiscoveryStatus, discover
from invariants.transforms import check_invariance


@pytest.mark.parametrize("n,g", [(6, 4), (8, 2)])
def test_discover_medium_sizes(n, g):
    """discover() en órdenes medianos termina en menos de un minuto y su base se re-verifica."""
    start = time.time()
    result = discover(DiscoveryRequest(n=n, g=g))
    elapsed = time.time() - start
    print(f"discover n={n} g={g}: dimension {result.dimension} en {elapsed:.2f}s")

    assert result.status is DiscoveryStatus.OK
    assert result.dimension >= 1
    assert elapsed < 60
    for element in result.basis:
        assert apply_D(element).is_zero
        assert apply_Delta(element).is_zero
        assert check_invariance(element, n, trials=50, seed=n + g).passed


def test_commutator_suite_speed():
    suite = build_graded_suite(seed=7)
    start = time.time()
    for p in suite:
        assert commutator_residual(p).is_zero
        for k in range(1, 5):
            assert power_commutator_residual(OperatorKind.D, k, p).is_zero
            assert power_commutator_residual(OperatorKind.DELTA, k, p).is_zero
    elapsed = time.time() - start
    print(f"{len(suite)} polinomios verificados en {elapsed:.2f}s")
    assert elapsed < 30
