"""Uncertainty-relation verdicts and the step-by-step bound chain.

Four relations are theorems and must always hold (up to roundoff):

    heisenberg       V(A) V(B)                   >= (1/4) |Tr rho [A,B]|^2
    schrodinger      V(A) V(B) - (Re Cov)^2      >= (1/4) |Tr rho [A,B]|^2
    luo              U(A) U(B)                   >= (1/4) |Tr rho [A,B]|^2
    schrodinger_wy   U(A) U(B) - (Re Corr)^2     >= (1/4) |Tr rho [A,B]|^2

Two more are evaluated but never asserted, because counterexamples exist
(see the counterexamples module):

    false_cov_variant   U(A) U(B) - (Re Cov)^2   >= (1/4) |Tr rho [A,B]|^2
    false_re_ordering   (Re Cov)^2               >= (Re Corr)^2
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import quantities
from .quantities import DensityMatrix, UncertaintyReport

# An inequality "holds" if its gap is no worse than this; the theorems are
# exact, so only floating point can produce small negatives.
HOLD_TOL = 1e-9

THEOREM_IDS = ("heisenberg", "schrodinger", "luo", "schrodinger_wy")
FALSIFIABLE_IDS = ("false_cov_variant", "false_re_ordering")
RELATION_IDS = THEOREM_IDS + FALSIFIABLE_IDS


@dataclass(frozen=True)
class InequalityVerdict:
    relation_id: str
    lhs: float
    rhs: float
    gap: float
    holds: bool


@dataclass(frozen=True)
class ProofChainTrace:
    """Successive bounds from |Corr|^2 up to U(A) U(B), all in one record.

    Each step of the derivation only ever loosens the bound, so
    t_corr_sq <= t_triangle <= t_schwarz <= t_ij, and independently
    t_corr_sq <= t_ji and t_corr_sq <= t_uu.
    """

    t_corr_sq: float
    t_triangle: float
    t_schwarz: float
    t_ij: float
    t_ji: float
    t_uu: float


def _verdict(relation_id: str, lhs: float, rhs: float) -> InequalityVerdict:
    gap = lhs - rhs
    return InequalityVerdict(relation_id, lhs, rhs, gap, gap >= -HOLD_TOL)


def _commutator_bound(report: UncertaintyReport) -> float:
    return 0.25 * abs(report.commutator_avg) ** 2


def verdict_from_report(report: UncertaintyReport, relation_id: str) -> InequalityVerdict:
    """Build one relation's verdict from an already-computed report."""
    rhs = _commutator_bound(report)
    if relation_id == "heisenberg":
        return _verdict(relation_id, report.v_a * report.v_b, rhs)
    if relation_id == "schrodinger":
        return _verdict(relation_id, report.v_a * report.v_b - report.cov.real**2, rhs)
    if relation_id == "luo":
        return _verdict(relation_id, report.u_a * report.u_b, rhs)
    if relation_id == "schrodinger_wy":
        return _verdict(relation_id, report.u_a * report.u_b - report.corr.real**2, rhs)
    if relation_id == "false_cov_variant":
        return _verdict(relation_id, report.u_a * report.u_b - report.cov.real**2, rhs)
    if relation_id == "false_re_ordering":
        return _verdict(relation_id, report.cov.real**2, report.corr.real**2)
    raise ValueError(f"unknown relation id {relation_id!r}")


def verdicts_from_report(report: UncertaintyReport, ids=THEOREM_IDS) -> list[InequalityVerdict]:
    return [verdict_from_report(report, rid) for rid in ids]


def check_heisenberg(rho: DensityMatrix, a, b) -> InequalityVerdict:
    return verdict_from_report(quantities.full_report(rho, a, b), "heisenberg")


def check_schrodinger(rho: DensityMatrix, a, b) -> InequalityVerdict:
    return verdict_from_report(quantities.full_report(rho, a, b), "schrodinger")


def check_luo(rho: DensityMatrix, a, b) -> InequalityVerdict:
    return verdict_from_report(quantities.full_report(rho, a, b), "luo")


def check_schrodinger_wy(rho: DensityMatrix, a, b) -> InequalityVerdict:
    return verdict_from_report(quantities.full_report(rho, a, b), "schrodinger_wy")


def eval_false_cov_variant(rho: DensityMatrix, a, b) -> InequalityVerdict:
    """The covariance variant of schrodinger_wy; its gap may be negative."""
    return verdict_from_report(quantities.full_report(rho, a, b), "false_cov_variant")


def eval_re_ordering(rho: DensityMatrix, a, b) -> InequalityVerdict:
    """(Re Cov)^2 vs (Re Corr)^2; neither dominates the other in general."""
    return verdict_from_report(quantities.full_report(rho, a, b), "false_re_ordering")


def lhs_difference_from_report(report: UncertaintyReport) -> float:
    """schrodinger lhs minus schrodinger_wy lhs; takes both signs."""
    lhs_s = report.v_a * report.v_b - report.cov.real**2
    lhs_wy = report.u_a * report.u_b - report.corr.real**2
    return lhs_s - lhs_wy


def eval_lhs_difference(rho: DensityMatrix, a, b) -> float:
    return lhs_difference_from_report(quantities.full_report(rho, a, b))


def proof_chain(
    rho: DensityMatrix, a, b, report: UncertaintyReport | None = None
) -> ProofChainTrace:
    """Evaluate every intermediate bound between |Corr|^2 and U(A) U(B).

    All sums run over the eigenbasis of rho with a_ij = <phi_i|A0|phi_j>
    and b_ji = <phi_j|B0|phi_i>:

      t_corr_sq  |sum_{i != j} (l_i - sqrt(l_i l_j)) a_ij b_ji|^2
      t_triangle square of the entrywise modulus bound on that sum
      t_schwarz  (sum (sqrt(l_i)-sqrt(l_j))^2 |a_ij|^2)
                 * (sum (sqrt(l_i)+sqrt(l_j))^2 |b_ij|^2), sums over i<j
      t_ij       I(A) J(B)
      t_ji       I(B) J(A)
      t_uu       U(A) U(B)

    A report already computed for the same triple may be passed to avoid
    recomputing the scalar functionals.
    """
    if report is None:
        report = quantities.full_report(rho, a, b)
    aelem = quantities.matrix_elements(rho, a)
    belem = quantities.matrix_elements(rho, b)
    lam = np.clip(rho.spectral.eigenvalues, 0.0, None)
    roots = np.sqrt(lam)

    geo = np.multiply.outer(roots, roots)       # sqrt(l_i l_j)
    coef = lam[:, None] - geo                   # l_i - sqrt(l_i l_j)
    cross = aelem * belem.T                     # a_ij b_ji
    mask = ~np.eye(len(lam), dtype=bool)
    corr_sum = complex(np.sum(coef[mask] * cross[mask]))
    t_corr_sq = abs(corr_sum) ** 2

    upper = np.triu(np.ones_like(coef, dtype=bool), k=1)
    moduli = np.abs(coef) * np.abs(cross)       # |l_i - sqrt(l_i l_j)| |a_ij| |b_ji|
    t_triangle = float(np.sum(moduli[upper] + moduli.T[upper])) ** 2

    minus_sq = np.subtract.outer(roots, roots) ** 2
    plus_sq = np.add.outer(roots, roots) ** 2
    abs_a_sq = np.abs(aelem) ** 2
    abs_b_sq = np.abs(belem) ** 2
    t_schwarz = float(np.sum((minus_sq * abs_a_sq)[upper])) * float(
        np.sum((plus_sq * abs_b_sq)[upper])
    )

    return ProofChainTrace(
        t_corr_sq=t_corr_sq,
        t_triangle=t_triangle,
        t_schwarz=t_schwarz,
        t_ij=report.i_a * report.j_b,
        t_ji=report.i_b * report.j_a,
        t_uu=report.u_a * report.u_b,
    )
