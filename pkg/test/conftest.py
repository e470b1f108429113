import numpy as np
import pytest

from app.experiments import random_bipolar_memories, random_quaternion_memories
from app.networks import FundamentalMemorySet


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def unit_quaternions(rng):
    """10,000 random unit quaternions, shape (10000, 4)."""
    q = rng.normal(size=(10_000, 4))
    return q / np.linalg.norm(q, axis=-1, keepdims=True)


@pytest.fixture
def bipolar_memories(rng):
    return random_bipolar_memories(n=40, p=5, rng=rng)


@pytest.fixture
def quaternion_memories(rng):
    return random_quaternion_memories(n=30, p=6, rng=rng)


@pytest.fixture
def tiny_bipolar():
    """n=4, p=2; the memories differ in three positions."""
    return FundamentalMemorySet.from_bipolar([[1, 1, 1, 1], [1, -1, -1, -1]])
