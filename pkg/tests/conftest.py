import os

import pytest

import xq

STRUCTURES_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "structures")


@pytest.fixture(scope="session")
def sphere_d():
    return xq.build_sphere_D()


@pytest.fixture(scope="session")
def cylinder_q(sphere_d):
    return xq.build_cylinder_Q(sphere_d)


@pytest.fixture(scope="session")
def structures_dir():
    return os.path.abspath(STRUCTURES_DIR)
