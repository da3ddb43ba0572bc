"""Uncertainty functionals of a quantum state and observables.

For a density matrix rho and Hermitian H (centered as H0 = H - <H> I):

    V(H)      = Tr[rho H0^2]                          variance
    Cov(A,B)  = Tr[rho A0 B0]                         covariance (complex)
    I(H)      = Tr[rho H0^2] - Tr[sqrt(rho) H0 sqrt(rho) H0]
                                                      skew information
    J(H)      = (1/2) Tr[{sqrt(rho), H0}^2] = 2V - I
    U(H)      = sqrt(I J) = sqrt(V^2 - (V - I)^2)
    Corr(A,B) = Tr[rho A B] - Tr[sqrt(rho) A sqrt(rho) B]

plus the one-parameter family I_alpha(H) built from rho^alpha and
rho^(1-alpha), and the eigenbasis (spectral) forms of I and the J lower
bound used for cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import AlphaOutOfRange, DimensionMismatch, NegativeSpectrum, TraceNotOne
from .linalg import SpectralDecomposition, require_hermitian

TRACE_TOL = 1e-10
MEAN_IMAG_TOL = 1e-12
# Values that are nonnegative in exact arithmetic may come out as tiny
# negatives; anything in [-ROUNDOFF_FLOOR, 0) is reported as 0.
ROUNDOFF_FLOOR = 1e-10
# Eigenvalues of a unit-trace matrix below this are indistinguishable from
# solver roundoff; they are pinned to exactly 0 so sqrt(rho) and the
# eigenbasis sums cannot amplify sqrt(dust) ~ 1e-8 into the functionals.
EIGENVALUE_DUST = 1e-14


class Observable:
    """A validated Hermitian matrix."""

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        self.matrix = require_hermitian(matrix, what="observable")

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


class DensityMatrix:
    """A validated quantum state with cached spectral data.

    Invariants checked at construction: Hermitian within 1e-10, all
    eigenvalues >= -1e-10, trace within 1e-10 of 1.  The spectral
    decomposition and the PSD square root are computed once and reused by
    every functional.
    """

    __slots__ = ("matrix", "spectral", "sqrt", "_powers")

    def __init__(self, matrix):
        m = require_hermitian(matrix, what="density matrix")
        spectral = linalg.hermitian_eig(m)
        self._finish_init(m, spectral)

    @classmethod
    def from_spectral(cls, eigenvalues, eigenvectors) -> "DensityMatrix":
        """Build a state from a known eigensystem, skipping the eigensolver.

        The eigenvector matrix must be unitary within 1e-10; eigenvalues are
        sorted and phase conventions applied here, so callers may pass them
        in any order.
        """
        w = np.asarray(eigenvalues, dtype=np.float64)
        v = np.asarray(eigenvectors, dtype=np.complex128)
        n = w.shape[0]
        if v.shape != (n, n):
            raise DimensionMismatch(
                f"eigenvector matrix shape {v.shape} does not match {n} eigenvalues"
            )
        gram_defect = float(np.abs(v.conj().T @ v - np.eye(n)).max())
        if gram_defect > 1e-10:
            raise DimensionMismatch(
                f"eigenvectors are not orthonormal: max |V^dagger V - I| = {gram_defect:.3e}"
            )
        w, v = linalg.sort_descending(w.copy(), v)
        spectral = SpectralDecomposition(w, v)
        self = cls.__new__(cls)
        self._finish_init(spectral.reconstruct(), spectral)
        return self

    def _finish_init(self, matrix: np.ndarray, spectral: SpectralDecomposition) -> None:
        w = spectral.eigenvalues
        if w.min(initial=0.0) < -linalg.PSD_TOL:
            raise NegativeSpectrum(
                f"density matrix is not PSD: smallest eigenvalue {w.min():.3e}"
            )
        tr = float(w.sum())
        if abs(tr - 1.0) > TRACE_TOL:
            raise TraceNotOne(f"density matrix has unit-trace violation: Tr = {tr!r}")
        clean = w.copy()
        clean[clean < EIGENVALUE_DUST] = 0.0  # also clamps tolerated negatives
        self.matrix = (matrix + matrix.conj().T) / 2.0
        self.spectral = SpectralDecomposition(clean, spectral.eigenvectors)
        self.sqrt = self.spectral.apply(np.sqrt)
        self._powers = {}

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def power(self, p: float) -> np.ndarray:
        """rho**p for p in (0, 1], from the cached spectrum (memoized)."""
        cached = self._powers.get(p)
        if cached is None:
            cached = linalg.matrix_power(self.spectral, p)
            self._powers[p] = cached
        return cached


@dataclass(frozen=True)
class CenteredObservable:
    """H0 = H - Tr[rho H] I together with the mean it removed."""

    matrix: np.ndarray
    mean: float


@dataclass(frozen=True)
class UncertaintyReport:
    """Every scalar functional of one (rho, A, B) triple."""

    mean_a: float
    mean_b: float
    v_a: float
    v_b: float
    i_a: float
    i_b: float
    j_a: float
    j_b: float
    u_a: float
    u_b: float
    cov: complex
    corr: complex
    commutator_avg: complex


def _as_obs_matrix(h) -> np.ndarray:
    if isinstance(h, Observable):
        return h.matrix
    if isinstance(h, CenteredObservable):
        return h.matrix
    return require_hermitian(h, what="observable")


def _check_dims(rho: DensityMatrix, *mats: np.ndarray) -> None:
    for m in mats:
        if m.shape != rho.matrix.shape:
            raise DimensionMismatch(
                f"state dim {rho.matrix.shape[0]} vs observable shape {m.shape}"
            )


def _tr_product(x: np.ndarray, y: np.ndarray) -> complex:
    # Tr[X Y] without forming the product matrix.
    return complex(np.dot(x.ravel(), y.T.ravel()))


def _real_floor(x: float) -> float:
    return 0.0 if -ROUNDOFF_FLOOR <= x < 0.0 else x


def _real_part(t: complex, what: str) -> float:
    if abs(t.imag) > MEAN_IMAG_TOL * max(1.0, abs(t)):
        raise ArithmeticError(f"{what} came out complex: {t!r}")
    return t.real


def expectation(rho: DensityMatrix, h) -> float:
    """Tr[rho H], guaranteed real for Hermitian inputs up to roundoff."""
    m = _as_obs_matrix(h)
    _check_dims(rho, m)
    return _real_part(_tr_product(rho.matrix, m), "expectation of a Hermitian observable")


def center(rho: DensityMatrix, h) -> CenteredObservable:
    """Subtract the mean: H0 = H - Tr[rho H] I."""
    m = _as_obs_matrix(h)
    mean = expectation(rho, m)
    return CenteredObservable(m - mean * np.eye(rho.dim), mean)


def variance(rho: DensityMatrix, h) -> float:
    """V(H) = Tr[rho H0^2]."""
    h0 = center(rho, h).matrix
    val = _tr_product(rho.matrix @ h0, h0).real
    return _real_floor(val)


def covariance(rho: DensityMatrix, a, b) -> complex:
    """Cov(A, B) = Tr[rho A0 B0]; complex in general, conjugated under swap."""
    a0 = center(rho, a).matrix
    b0 = center(rho, b).matrix
    return _tr_product(rho.matrix @ a0, b0)


def _vij_shared(rho: DensityMatrix, h0: np.ndarray, rho_h0: np.ndarray):
    """(V, I, J, sqrt(rho) H0) for a centered observable.

    With X = sqrt(rho) H0:  I = ||i(X - X^dagger)||_F^2 / 2 and
    J = ||X + X^dagger||_F^2 / 2, both nonnegative by construction, and
    the identity J = 2V - I is verified before returning.
    """
    x = rho.sqrt @ h0
    i_val = 0.5 * float(np.linalg.norm(x - x.conj().T)) ** 2
    j_val = 0.5 * float(np.linalg.norm(x + x.conj().T)) ** 2
    v_val = _real_floor(_tr_product(rho_h0, h0).real)
    j_ident = 2.0 * v_val - i_val
    if abs(j_val - j_ident) > 1e-10 * max(1.0, abs(j_ident)):
        raise ArithmeticError(
            f"J forms disagree: anticommutator {j_val!r} vs 2V - I {j_ident!r}"
        )
    return v_val, i_val, j_val, x


def _vij(rho: DensityMatrix, h0: np.ndarray) -> tuple[float, float, float]:
    return _vij_shared(rho, h0, rho.matrix @ h0)[:3]


def wy_skew_information(rho: DensityMatrix, h) -> float:
    """I(H) = (1/2) Tr[(i[sqrt(rho), H0])^2], nonnegative and at most V(H)."""
    h0 = center(rho, h).matrix
    return _vij(rho, h0)[1]


def wyd_skew_information(rho: DensityMatrix, h, alpha: float) -> float:
    """One-parameter skew information (1/2) Tr[(i[rho^a, H])(i[rho^(1-a), H])].

    Only the open interval 0 < alpha < 1 is accepted: at the endpoints
    rho^0 would be rank-dependent, so the request is rejected rather than
    silently computed.  Symmetric under alpha <-> 1 - alpha, equal to
    wy_skew_information at alpha = 1/2, and unchanged by centering H
    (identity shifts drop out of commutators).
    """
    if not 0.0 < alpha < 1.0:
        raise AlphaOutOfRange(f"alpha must satisfy 0 < alpha < 1, got {alpha}")
    m = _as_obs_matrix(h)
    _check_dims(rho, m)
    xa = rho.power(alpha) @ m
    xb = rho.power(1.0 - alpha) @ m
    ca = 1j * (xa - xa.conj().T)
    cb = 1j * (xb - xb.conj().T)
    val = 0.5 * _tr_product(ca, cb).real
    return _real_floor(val)


def j_quantity(rho: DensityMatrix, h) -> float:
    """J(H) = (1/2) Tr[{sqrt(rho), H0}^2], cross-checked against 2V - I."""
    h0 = center(rho, h).matrix
    return _vij(rho, h0)[2]


def u_quantity(rho: DensityMatrix, h) -> float:
    """U(H) = sqrt(I J); tiny negative products from roundoff clamp to 0."""
    h0 = center(rho, h).matrix
    _, i_val, j_val = _vij(rho, h0)
    return float(np.sqrt(max(i_val * j_val, 0.0)))


def correlation(rho: DensityMatrix, a, b) -> complex:
    """Corr(A, B) = Tr[rho A^dagger B] - Tr[sqrt(rho) A^dagger sqrt(rho) B].

    Computed on the uncentered observables, exactly as defined; shifting
    either argument by a real multiple of the identity leaves the value
    unchanged (a property the tests pin down rather than the code forcing
    it by centering first).
    """
    ma = _as_obs_matrix(a)
    mb = _as_obs_matrix(b)
    _check_dims(rho, ma, mb)
    ad = ma.conj().T
    t1 = _tr_product(rho.matrix @ ad, mb)
    t2 = _tr_product(rho.sqrt @ ad, rho.sqrt @ mb)
    return t1 - t2


def commutator_average(rho: DensityMatrix, a, b) -> complex:
    """Tr[rho [A, B]], purely imaginary for Hermitian A, B."""
    ma = _as_obs_matrix(a)
    mb = _as_obs_matrix(b)
    _check_dims(rho, ma, mb)
    return _tr_product(rho.matrix @ ma, mb) - _tr_product(rho.matrix @ mb, ma)


def matrix_elements(rho: DensityMatrix, h) -> np.ndarray:
    """h_ij = <phi_i| H0 |phi_j> in the eigenbasis of rho (a Hermitian array)."""
    h0 = center(rho, h).matrix
    v = rho.spectral.eigenvectors
    return v.conj().T @ h0 @ v


@dataclass(frozen=True)
class SpectralSums:
    """The three eigenbasis sums over h_ij = <phi_i|H0|phi_j>."""

    skew_information: float     # sum_{i<j} (sqrt(l_i) - sqrt(l_j))^2 |h_ij|^2
    j_lower_bound: float        # sum_{i<j} (sqrt(l_i) + sqrt(l_j))^2 |h_ij|^2
    j_diagonal_term: float      # 2 sum_i l_i h_ii^2


def spectral_sums(rho: DensityMatrix, h) -> SpectralSums:
    """All three eigenbasis sums from a single pass over the matrix elements."""
    helems = matrix_elements(rho, h)
    lam = np.clip(rho.spectral.eigenvalues, 0.0, None)
    roots = np.sqrt(lam)
    abs_sq = np.abs(helems) ** 2
    minus_sq = np.subtract.outer(roots, roots) ** 2
    plus_sq = np.add.outer(roots, roots) ** 2
    np.fill_diagonal(plus_sq, 0.0)
    diag = np.real(np.diagonal(helems))
    return SpectralSums(
        skew_information=0.5 * float(np.sum(minus_sq * abs_sq)),
        j_lower_bound=0.5 * float(np.sum(plus_sq * abs_sq)),
        j_diagonal_term=2.0 * float(np.sum(lam * diag**2)),
    )


def spectral_skew_information(rho: DensityMatrix, h) -> float:
    """Eigenbasis form of I: sum over i<j of (sqrt(l_i) - sqrt(l_j))^2 |h_ij|^2."""
    return spectral_sums(rho, h).skew_information


def spectral_j_lower_bound(rho: DensityMatrix, h) -> float:
    """Eigenbasis sum bounding J from below: sum over i<j of (sqrt(l_i) + sqrt(l_j))^2 |h_ij|^2.

    J minus this bound equals the discarded diagonal part,
    2 sum_i l_i h_ii^2 (see spectral_j_diagonal_term), hence is nonnegative.
    """
    return spectral_sums(rho, h).j_lower_bound


def spectral_j_diagonal_term(rho: DensityMatrix, h) -> float:
    """2 sum_i l_i h_ii^2: the exact slack of the spectral J bound."""
    return spectral_sums(rho, h).j_diagonal_term


def full_report(rho: DensityMatrix, a, b) -> UncertaintyReport:
    """All functionals of the triple, with internal consistency asserted.

    J = 2V - I and U = sqrt(I J) are recomputed from independent forms and
    must agree to within 1e-10 (relative beyond magnitude 1).  The matrix
    products rho A, rho B, sqrt(rho) A0, sqrt(rho) B0 are computed once
    and shared across every functional.
    """
    ma = _as_obs_matrix(a)
    mb = _as_obs_matrix(b)
    _check_dims(rho, ma, mb)
    eye = np.eye(rho.dim)

    rho_a = rho.matrix @ ma
    rho_b = rho.matrix @ mb
    mean_a = _real_part(complex(np.trace(rho_a)), "mean of A")
    mean_b = _real_part(complex(np.trace(rho_b)), "mean of B")
    a0 = ma - mean_a * eye
    b0 = mb - mean_b * eye
    rho_a0 = rho_a - mean_a * rho.matrix
    rho_b0 = rho_b - mean_b * rho.matrix

    v_a, i_a, j_a, x_a = _vij_shared(rho, a0, rho_a0)
    v_b, i_b, j_b, x_b = _vij_shared(rho, b0, rho_b0)
    u_a = float(np.sqrt(max(i_a * j_a, 0.0)))
    u_b = float(np.sqrt(max(i_b * j_b, 0.0)))
    for u_val, v_val, i_val in ((u_a, v_a, i_a), (u_b, v_b, i_b)):
        u_def = np.sqrt(max(v_val**2 - (v_val - i_val) ** 2, 0.0))
        if abs(u_val - u_def) > 1e-9 * max(1.0, u_def):
            raise ArithmeticError(f"U forms disagree: {u_val!r} vs {u_def!r}")

    cov = _tr_product(rho_a0, b0)
    # uncentered correlation, with sqrt(rho) A = sqrt(rho) A0 + mean sqrt(rho)
    sq_a = x_a + mean_a * rho.sqrt
    sq_b = x_b + mean_b * rho.sqrt
    corr = _tr_product(rho_a, mb) - _tr_product(sq_a, sq_b)
    comm = _tr_product(rho_a, mb) - _tr_product(rho_b, ma)
    return UncertaintyReport(
        mean_a=mean_a,
        mean_b=mean_b,
        v_a=v_a,
        v_b=v_b,
        i_a=i_a,
        i_b=i_b,
        j_a=j_a,
        j_b=j_b,
        u_a=u_a,
        u_b=u_b,
        cov=cov,
        corr=corr,
        commutator_avg=comm,
    )
