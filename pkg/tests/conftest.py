"""Shared fixtures: corpus triangulations and their cached relations."""

from __future__ import annotations

import pytest

from areapoly.corpus import relation_corpus
from areapoly.variety import parallelogram_polynomial, trapezoid_polynomial


@pytest.fixture(scope="session")
def corpus():
    """The five benchmark triangulations, keyed by name."""
    return relation_corpus()


@pytest.fixture(scope="session")
def trapezoid_relations(corpus):
    """Trapezoid relation per corpus key, eliminated once per session."""
    return {key: trapezoid_polynomial(tri) for key, tri in corpus.items()}


@pytest.fixture(scope="session")
def parallelogram_relations(corpus):
    """Parallelogram relation per corpus key, eliminated once per session."""
    return {key: parallelogram_polynomial(tri) for key, tri in corpus.items()}
