"""Oracle sweep: re-derive every rays/facets equivalence from scratch and
compare with the closed-form modules.

Each case is independent; a failure is reported, never raised, so the CLI
can print the whole table and exit nonzero at the end.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import hyper_fixed, hyper_total, oracle, regular
from .hyper_fixed import FixedConeParams
from .linalg import primitive
from .oracle import ConeDescription
from .sequences import chi, xi


@dataclass(frozen=True)
class SweepResult:
    name: str
    ok: bool
    detail: str = ""


def _regular_cone_pair(n: int) -> tuple[ConeDescription, ConeDescription]:
    rays = tuple(r.entries for r in regular.rays(n))
    facets = tuple(f.as_vector(n + 1) for f in regular.facets(n))
    return (ConeDescription(n + 1, rays=rays), ConeDescription(n + 1, facets=facets))


def total_facet_vectors(n: int) -> list[tuple]:
    """The defining functional list of the total cone, projected to
    coordinates 0..n (the flatness constraints vanish under projection)."""
    out = []
    for i in range(n + 1):
        for j in range(i, n + 1, 2):
            out.append(chi(i, j).as_vector(n + 1))
    out.append(chi(n - 1, n).as_vector(n + 1))
    return out


def fixed_facet_vectors(n: int, d: int) -> list[tuple]:
    out = total_facet_vectors(n)
    for i in range(n + 1):
        out.append(xi(i, n, d).as_vector(n + 1))
    return out


def check_regular(n: int) -> SweepResult:
    a, b = _regular_cone_pair(n)
    ok = oracle.cone_equal(a, b)
    ok = ok and sorted(oracle.canonical_facets(a)) == sorted(
        primitive(f) for f in b.facets)
    return SweepResult(f"regular n={n}: rays <-> facets", ok)


def check_total(n: int) -> SweepResult:
    basis = hyper_total.ray_basis(n)
    a = ConeDescription(n + 1, rays=tuple(basis.projected()))
    b = ConeDescription(n + 1, facets=tuple(total_facet_vectors(n)))
    if not oracle.cone_equal(a, b):
        return SweepResult(f"total n={n}: rays <-> facets", False, "cones differ")
    try:
        relation = hyper_total.linear_relation(n)
    except Exception as exc:  # any relation failure is a sweep failure
        return SweepResult(f"total n={n}: ray relation", False, str(exc))
    return SweepResult(
        f"total n={n}: rays <-> facets, relation space 1-dim", True,
        "relation " + "+".join(f"({c})*{name}" for c, name
                               in zip(relation, basis.names) if c != 0))


def check_fixed(n: int, d: int) -> SweepResult:
    p = FixedConeParams(n, d)
    rays = tuple(r.prefix(n + 1) for r in hyper_fixed.rays(p))
    a = ConeDescription(n + 1, rays=rays)
    b = ConeDescription(n + 1, facets=tuple(fixed_facet_vectors(n, d)))
    ok = oracle.cone_equal(a, b)
    return SweepResult(f"fixed n={n} d={d}: rays <-> facets", ok)


def check_triangulations(n: int) -> SweepResult:
    basis = hyper_total.ray_basis(n)
    cone = ConeDescription(n + 1, rays=tuple(basis.projected()))
    details = []
    ok = True
    for tri in hyper_total.triangulations(n):
        report = oracle.validate_triangulation(cone, tri)
        ok = ok and report.valid
        details.append(f"{tri.label}: {len(tri.simplices)} simplices "
                       f"{'valid' if report.valid else 'INVALID'}")
    return SweepResult(f"total n={n}: triangulations", ok, "; ".join(details))


def run_sweep(n_max: int = 8, mult_max: int = 6) -> list[SweepResult]:
    if n_max < 2 or mult_max < 2:
        raise ValueError("sweep bounds must be at least 2")
    results = [check_regular(n) for n in range(0, n_max + 1)]
    results += [check_total(n) for n in range(2, n_max + 1)]
    results += [check_fixed(n, d)
                for n in range(2, min(n_max, 6) + 1)
                for d in range(2, mult_max + 1)]
    results += [check_triangulations(n) for n in range(3, min(n_max, 6) + 1)]
    return results
