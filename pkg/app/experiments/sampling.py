"""
sampling.py

Random fundamental memories and probe corruption.

Every function takes an explicit numpy Generator; nothing here touches
global random state.

    random_bipolar_memories(n, p, rng)       components +-1 with probability 0.5 each
    random_quaternion_memories(n, p, rng)    components rand_q()
    random_complex_memories(n, p, rng)       components e^{i phi}, phi uniform in [-pi, pi)

    inject_noise_bipolar(u, noise, rng)      negate each component with probability noise
    inject_noise_quaternion(u, noise, rng)   replace each component by rand_q() with probability noise
    inject_noise_complex(u, noise, rng)      replace each component by e^{i phi} with probability noise
"""

import numpy as np

from app.core.errors import DomainError
from app.core.quaternion import Quaternion, as_quaternion_array, mul, qmul
from app.experiments.models import Domain
from app.networks.memory_set import FundamentalMemorySet


# Angle ranges for rand_q: phi, psi, theta
PHI_RANGE = (-np.pi, np.pi)
PSI_RANGE = (-np.pi / 4, np.pi / 4)
THETA_RANGE = (-np.pi / 2, np.pi / 2)


# ============================================================
# Unit quaternion sampling
# ============================================================

def sample_angles(rng: np.random.Generator, size=None) -> tuple:
    """(phi, psi, theta) drawn uniformly from their ranges."""
    phi = rng.uniform(*PHI_RANGE, size=size)
    psi = rng.uniform(*PSI_RANGE, size=size)
    theta = rng.uniform(*THETA_RANGE, size=size)
    return phi, psi, theta


def rand_q_from_angles(phi: float, psi: float, theta: float) -> Quaternion:
    """(cos phi + i sin phi)(cos psi + k sin psi)(cos theta + j sin theta)"""
    a = Quaternion(np.cos(phi), np.sin(phi), 0.0, 0.0)
    b = Quaternion(np.cos(psi), 0.0, 0.0, np.sin(psi))
    c = Quaternion(np.cos(theta), 0.0, np.sin(theta), 0.0)
    return mul(mul(a, b), c)


def rand_q(rng: np.random.Generator) -> Quaternion:
    return rand_q_from_angles(*sample_angles(rng))


def rand_q_array(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    """
    Vectorised rand_q: array of shape `shape + (4,)`.

    Same angle distribution and the same product order as rand_q.
    """
    phi, psi, theta = sample_angles(rng, size=shape)
    zeros = np.zeros(shape)
    a = np.stack([np.cos(phi), np.sin(phi), zeros, zeros], axis=-1)
    b = np.stack([np.cos(psi), zeros, zeros, np.sin(psi)], axis=-1)
    c = np.stack([np.cos(theta), zeros, np.sin(theta), zeros], axis=-1)
    return qmul(qmul(a, b), c)


def rand_complex_array(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    phi = rng.uniform(*PHI_RANGE, size=shape)
    out = np.zeros(shape + (4,))
    out[..., 0] = np.cos(phi)
    out[..., 1] = np.sin(phi)
    return out


# ============================================================
# Memory sets
# ============================================================

def random_bipolar_memories(n: int, p: int, rng: np.random.Generator) -> FundamentalMemorySet:
    signs = np.where(rng.random((p, n)) < 0.5, 1.0, -1.0)
    return FundamentalMemorySet.from_bipolar(signs)


def random_quaternion_memories(n: int, p: int, rng: np.random.Generator) -> FundamentalMemorySet:
    return FundamentalMemorySet(rand_q_array(rng, (p, n)))


def random_complex_memories(n: int, p: int, rng: np.random.Generator) -> FundamentalMemorySet:
    return FundamentalMemorySet(rand_complex_array(rng, (p, n)))


_MEMORY_SAMPLERS = {
    Domain.BIPOLAR: random_bipolar_memories,
    Domain.COMPLEX: random_complex_memories,
    Domain.QUATERNION: random_quaternion_memories,
}


def random_memories(domain: Domain, n: int, p: int, rng: np.random.Generator) -> FundamentalMemorySet:
    return _MEMORY_SAMPLERS[Domain(domain)](n, p, rng)


# ============================================================
# Noise
# ============================================================

def _check_noise(noise_prob: float) -> None:
    if not 0.0 <= noise_prob <= 1.0:
        raise ValueError(f"noise probability must lie in [0, 1], got {noise_prob!r}")


def _is_bipolar(u: np.ndarray) -> bool:
    return bool(np.all(u[:, 1:] == 0.0) and np.all(np.abs(u[:, 0]) == 1.0))


def inject_noise_bipolar(u, noise_prob: float, rng: np.random.Generator) -> np.ndarray:
    """
    Negate each component independently with probability `noise_prob`.

    Raises
    ------
    DomainError — u has a component other than +1 or -1
    """
    _check_noise(noise_prob)
    x = as_quaternion_array(u, name="probe")
    if x.ndim != 2 or not _is_bipolar(x):
        raise DomainError("bipolar noise needs a vector of +-1 components")
    flip = rng.random(x.shape[0]) < noise_prob
    return np.where(flip[:, None], -x, x)


def inject_noise_quaternion(u, noise_prob: float, rng: np.random.Generator) -> np.ndarray:
    """Replace each component by a fresh rand_q() with probability `noise_prob`."""
    _check_noise(noise_prob)
    x = as_quaternion_array(u, name="probe")
    replace = rng.random(x.shape[0]) < noise_prob
    fresh = rand_q_array(rng, (x.shape[0],))
    return np.where(replace[:, None], fresh, x)


def inject_noise_complex(u, noise_prob: float, rng: np.random.Generator) -> np.ndarray:
    _check_noise(noise_prob)
    x = as_quaternion_array(u, name="probe")
    replace = rng.random(x.shape[0]) < noise_prob
    fresh = rand_complex_array(rng, (x.shape[0],))
    return np.where(replace[:, None], fresh, x)


_NOISE_MODELS = {
    Domain.BIPOLAR: inject_noise_bipolar,
    Domain.COMPLEX: inject_noise_complex,
    Domain.QUATERNION: inject_noise_quaternion,
}


def inject_noise(domain: Domain, u, noise_prob: float, rng: np.random.Generator) -> np.ndarray:
    return _NOISE_MODELS[Domain(domain)](u, noise_prob, rng)
