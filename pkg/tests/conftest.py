from fractions import Fraction

import pytest

from spanrank.datasets import school_document, school_problem


@pytest.fixture(scope="session")
def school():
    return school_problem()


@pytest.fixture()
def school_doc():
    return school_document()


def fr(value) -> Fraction:
    return Fraction(value)
