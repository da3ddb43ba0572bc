"""Seeded random states and observables with portable, schedule-free streams.

Randomness comes from SplitMix64: output k of a stream is a pure function
mix(seed + (k+1) * GAMMA), so a whole stream materializes as one vectorized
uint64 computation.  Streams split by XORing the sample index into the
seed, which makes every sample a pure function of (spec, seed, index) --
the same multiset of samples is produced no matter how work is scheduled
across threads.  Gaussians come from Box-Muller on the 53-bit uniforms.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import BadSpec
from .quantities import DensityMatrix, Observable
from . import linalg

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_MASK64 = (1 << 64) - 1

KINDS = ("ginibre_mixed", "pure", "rank_k", "diagonal", "degenerate_spectrum")

# Role salts keep the state stream and the two observable streams of one
# sample index disjoint.
SALT_OBSERVABLE_A = 0x9D2C5680AD6F4D5F
SALT_OBSERVABLE_B = 0x5851F42D4C957F2D


def stream_seed(seed: int, sample_index: int) -> int:
    """Documented stream-splitting rule: the sample index XORed into the seed."""
    return (int(seed) ^ int(sample_index)) & _MASK64


def splitmix64(seed: int, count: int) -> np.ndarray:
    """First ``count`` outputs of the SplitMix64 stream for ``seed``."""
    steps = np.arange(1, count + 1, dtype=np.uint64)
    z = np.uint64(seed & _MASK64) + steps * _GAMMA
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


def uniforms(seed: int, count: int) -> np.ndarray:
    """Uniform doubles in (0, 1], from the top 53 bits of each output."""
    z = splitmix64(seed, count)
    return ((z >> np.uint64(11)).astype(np.float64) + 1.0) * 2.0**-53


def normals(seed: int, count: int) -> np.ndarray:
    """Standard normals via Box-Muller; u1 in (0, 1] keeps the log finite."""
    pairs = (count + 1) // 2
    u = uniforms(seed, 2 * pairs)
    r = np.sqrt(-2.0 * np.log(u[:pairs]))
    theta = (2.0 * np.pi) * u[pairs:]
    return np.concatenate([r * np.cos(theta), r * np.sin(theta)])[:count]


def complex_normals(seed: int, count: int) -> np.ndarray:
    """Standard complex Gaussians: re and im each N(0, 1/2), E|z|^2 = 1."""
    x = normals(seed, 2 * count) * np.sqrt(0.5)
    return x[:count] + 1j * x[count:]


@dataclass(frozen=True)
class EnsembleSpec:
    """What to draw: dimension, family, and family parameters.

    kind:
      ginibre_mixed        G G^dagger / Tr, blended with purity_blend of
                           the maximally mixed state
      pure                 normalized Gaussian vector projector
      rank_k               Ginibre truncated to ``rank`` columns
      diagonal             uniform-simplex eigenvalues in the standard basis
      degenerate_spectrum  fixed spectrum (1/2, 1/2, 0, ...) conjugated by
                           a random unitary (QR of Ginibre, phases fixed)
    """

    dim: int
    kind: str = "ginibre_mixed"
    rank: int | None = None
    purity_blend: float = 0.0
    seed: int = 0

    def validate(self) -> None:
        if self.dim < 2:
            raise BadSpec(f"dim must be >= 2, got {self.dim}")
        if self.kind not in KINDS:
            raise BadSpec(f"kind must be one of {KINDS}, got {self.kind!r}")
        if self.kind == "rank_k":
            if self.rank is None or not 1 <= self.rank <= self.dim:
                raise BadSpec(f"rank_k requires 1 <= rank <= dim, got {self.rank}")
        if not 0.0 <= self.purity_blend <= 1.0:
            raise BadSpec(f"purity_blend must lie in [0, 1], got {self.purity_blend}")
        if not 0 <= int(self.seed) <= _MASK64:
            raise BadSpec("seed must fit in 64 unsigned bits")

    def with_seed(self, seed: int) -> "EnsembleSpec":
        return replace(self, seed=seed)


def _ginibre(seed: int, rows: int, cols: int) -> np.ndarray:
    return complex_normals(seed, rows * cols).reshape(rows, cols)


def _random_unitary(seed: int, n: int) -> np.ndarray:
    # QR of Ginibre with R's diagonal phases absorbed into Q, which fixes
    # the otherwise arbitrary column phases.
    q, r = np.linalg.qr(_ginibre(seed, n, n))
    d = np.diagonal(r).copy()
    d[np.abs(d) == 0] = 1.0
    return q * (d / np.abs(d))


def random_density(spec: EnsembleSpec, sample_index: int = 0) -> DensityMatrix:
    """Draw one validated state; a pure function of (spec, sample_index)."""
    spec.validate()
    seed = stream_seed(spec.seed, sample_index)
    n = spec.dim

    if spec.kind == "pure":
        v = complex_normals(seed, n)
        v = v / np.linalg.norm(v)
        basis = _householder_basis(v)
        lam = np.zeros(n)
        lam[0] = 1.0
        return DensityMatrix.from_spectral(lam, basis)

    if spec.kind == "diagonal":
        weights = np.abs(complex_normals(seed, n)) ** 2
        lam = weights / weights.sum()
        return DensityMatrix.from_spectral(lam, np.eye(n, dtype=np.complex128))

    if spec.kind == "degenerate_spectrum":
        lam = np.zeros(n)
        lam[0] = lam[1] = 0.5
        u = _random_unitary(seed, n)
        return DensityMatrix.from_spectral(lam, u)

    if spec.kind == "rank_k":
        g = _ginibre(seed, n, spec.rank)
        m = g @ g.conj().T
        spectral = linalg.hermitian_eig(m / np.trace(m).real)
        lam = np.clip(spectral.eigenvalues, 0.0, None)
        lam = lam / lam.sum()
        return DensityMatrix.from_spectral(lam, spectral.eigenvectors)

    # ginibre_mixed
    beta = spec.purity_blend
    if beta == 1.0:
        return DensityMatrix.from_spectral(np.full(n, 1.0 / n), np.eye(n, dtype=np.complex128))
    g = _ginibre(seed, n, n)
    m = g @ g.conj().T
    spectral = linalg.hermitian_eig(m / np.trace(m).real)
    lam = np.clip(spectral.eigenvalues, 0.0, None)
    lam = (1.0 - beta) * (lam / lam.sum()) + beta / n
    return DensityMatrix.from_spectral(lam, spectral.eigenvectors)


def _householder_basis(v: np.ndarray) -> np.ndarray:
    """Unitary whose first column is parallel to the unit vector v."""
    n = v.shape[0]
    pivot = v[0]
    phase = pivot / abs(pivot) if abs(pivot) > 0 else 1.0
    w = v.copy()
    w[0] += phase
    p = np.eye(n, dtype=np.complex128) - 2.0 * np.outer(w, w.conj()) / np.vdot(w, w).real
    # P e1 = -conj(phase) v, so column 0 is v up to a phase that the
    # from_spectral canonicalization removes anyway.
    return p


def random_observable(dim: int, scale: float, seed: int, sample_index: int = 0) -> Observable:
    """Hermitian (M + M^dagger)/2 with Gaussian M; entries have rms ~ scale.

    M's real and imaginary parts are each N(0, scale^2), which makes every
    entry of the symmetrized result come out with root-mean-square
    magnitude ``scale`` (diagonal entries real, off-diagonal complex).
    """
    if dim < 2:
        raise BadSpec(f"dim must be >= 2, got {dim}")
    if not scale > 0:
        raise BadSpec(f"scale must be positive, got {scale}")
    stream = stream_seed(seed, sample_index)
    x = normals(stream, 2 * dim * dim) * scale
    m = x[: dim * dim].reshape(dim, dim) + 1j * x[dim * dim :].reshape(dim, dim)
    return Observable((m + m.conj().T) / 2.0)
