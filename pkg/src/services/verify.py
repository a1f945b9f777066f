"""
Acceptance suites over the case studies.

Each suite reads its parameters from a section of ``config/verify.yaml`` and returns a list of
named checks; ``run_suites`` renders them as a pass/fail table and raises VerificationError when
any check fails.
"""

import logging
from collections.abc import Callable
from pathlib import Path
from typing import Any

from pydantic import BaseModel

from src.common.config import load_yaml_config
from src.common.exceptions import SpecError, VerificationError
from src.common.guards import ResourceGuard, default_guard
from src.core.bcom import TauSpec, representation_classes
from src.core.groups.builtins import builtin_group
from src.services.decompose import decompose, transfer_check
from src.services.gl2 import gl2_census, gl2_decomposition_check
from src.services.quotient_lemma import quotient_lemma_check
from src.services.sigma3 import sigma3_suite
from src.services.so3 import so3_pi0
from src.services.torsion import torsion_equivalence_check

logger = logging.getLogger("bcom")

DEFAULT_CONFIG = Path(__file__).resolve().parents[2] / "config" / "verify.yaml"

DEFAULTS: dict[str, dict[str, Any]] = {
    "sigma3": {"max_degree": 3},
    "so3": {"max_n": 8, "expected_components": {1: 1, 2: 2, 3: 8}},
    "quotient": {"primes": [3, 5, 7], "max_degree": 4, "two_step": True},
    "gl2": {
        "cases": [{"q": 4, "ell": 3, "expected_order": 180, "expected_n_q": 10}],
        "decomposition_max_degree": 1,
    },
    "decompose": {"max_degree": 2, "cases": []},
}


class CheckResult(BaseModel):
    suite: str
    name: str
    passed: bool
    detail: str = ""


Suite = Callable[[dict[str, Any], ResourceGuard], list[CheckResult]]


def _check(suite: str, name: str, passed: bool, detail: Any = "") -> CheckResult:
    return CheckResult(suite=suite, name=name, passed=bool(passed), detail=str(detail))


def sigma3_checks(params: dict[str, Any], guard: ResourceGuard) -> list[CheckResult]:
    report = sigma3_suite(int(params["max_degree"]), guard)
    wedge = [1] + [3] * report.max_degree
    classes = representation_classes(builtin_group("S3", guard), TauSpec.z(), 2, guard)
    return [
        _check("sigma3", "wedge betti mod 2", report.betti_zmod2 == wedge, report.betti_zmod2),
        _check("sigma3", "BZ/2 betti mod 2", report.betti_c2 == [1] * len(wedge), report.betti_c2),
        _check("sigma3", "wedge differs from BZ/2", report.wedge_differs_from_c2),
        _check("sigma3", "B(Z/2) -> B(Z) iso mod 2", report.iso_mod2),
        _check("sigma3", "B(Z/2) -> B(Z) not iso mod 3", not report.iso_mod3),
        _check("sigma3", "8 classes of commuting pairs", len(classes) == 8, len(classes)),
    ]


def so3_checks(params: dict[str, Any], guard: ResourceGuard) -> list[CheckResult]:
    expected = {int(n): int(c) for n, c in params.get("expected_components", {}).items()}
    results = []
    for n in range(1, int(params["max_n"]) + 1):
        report = so3_pi0(n)
        results.append(
            _check("so3", f"pi_0 n={n} closed form", report.consistent, report.components)
        )
        if n in expected:
            results.append(
                _check("so3", f"pi_0 n={n} = {expected[n]}", report.components == expected[n])
            )
    return results


def quotient_checks(params: dict[str, Any], guard: ResourceGuard) -> list[CheckResult]:
    max_degree = int(params["max_degree"])
    results = []
    for ell in params["primes"]:
        table = quotient_lemma_check(int(ell), max_degree, guard=guard)
        results.append(_check("quotient", f"acyclic mod {ell}", not any(table.reduced), table))
        if params.get("two_step"):
            stepped = quotient_lemma_check(int(ell), max_degree, two_step=True, guard=guard)
            results.append(
                _check(
                    "quotient", f"two-step agrees mod {ell}", stepped.dims == table.dims, stepped
                )
            )
    # H_1 of the quotient vanishes for every field; mod 2 the first class sits in degree 3
    if max_degree >= 3:
        control = quotient_lemma_check(2, max_degree, guard=guard)
        results.append(_check("quotient", "not acyclic mod 2", any(control.reduced), control))
    return results


def gl2_checks(params: dict[str, Any], guard: ResourceGuard) -> list[CheckResult]:
    results = []
    for case in params["cases"]:
        q, ell = int(case["q"]), int(case["ell"])
        tag = f"q={q} l={ell}"
        census = gl2_census(q, ell, guard)
        results += [
            _check("gl2", f"{tag} order", census.group_order == case["expected_order"]),
            _check("gl2", f"{tag} torus is Sylow", census.is_sylow),
            _check("gl2", f"{tag} torus homocyclic", census.torus_is_homocyclic),
            _check("gl2", f"{tag} intersections are central", census.intersections_are_center),
            _check("gl2", f"{tag} n_q", census.n_q == case["expected_n_q"], census.n_q),
            _check("gl2", f"{tag} conjugate count", len(census.conjugates) == census.n_q),
        ]
        if census.closed_form_n_q is not None:
            results.append(
                _check("gl2", f"{tag} n_q closed form", census.n_q == census.closed_form_n_q)
            )
        report = gl2_decomposition_check(q, ell, int(params["decomposition_max_degree"]), guard)
        results += [
            _check(
                "gl2",
                f"{tag} diagram shape",
                (report.objects, report.arrows) == (census.n_q + 1, census.n_q),
            ),
            _check("gl2", f"{tag} decomposition agreement", report.agreement, report.hocolim_betti),
            _check("gl2", f"{tag} assembly iso", report.assembly_iso),
            _check("gl2", f"{tag} H_1 positive", report.h1 > 0, report.h1),
        ]
    return results


def decompose_checks(params: dict[str, Any], guard: ResourceGuard) -> list[CheckResult]:
    max_degree = int(params["max_degree"])
    results = []
    for case in params["cases"]:
        group = builtin_group(case["group"], guard)
        tau = TauSpec.parse(case["tau"])
        ell = int(case["ell"])
        collection = case.get("collection", "all")
        report = decompose(group, tau, ell, max_degree, collection, guard)
        tag = f"{group.name} {tau} l={ell} {collection}"
        results.append(_check("decompose", f"{tag} assembly iso", report.iso, report.ranks))
        if collection == "all" and case["group"] in ("S3", "Q8"):
            transfer = transfer_check(group, tau, ell, max_degree, guard)
            results += [
                _check("decompose", f"{tag} pushforward agrees", transfer.agreement),
                _check("decompose", f"{tag} orbit counts", transfer.orbits_consistent),
            ]
        if group.is_abelian():
            torsion = torsion_equivalence_check(group, ell, max_degree, guard)
            results.append(
                _check("decompose", f"{group.name} BA_l -> BA iso mod {ell}", torsion.iso)
            )
    return results


SUITES: dict[str, Suite] = {
    "sigma3": sigma3_checks,
    "so3": so3_checks,
    "quotient": quotient_checks,
    "gl2": gl2_checks,
    "decompose": decompose_checks,
}


def load_suite_params(path: str | Path | None = None) -> dict[str, dict[str, Any]]:
    """Suite parameters from YAML, falling back to the built-in defaults per section."""
    path = Path(path) if path is not None else DEFAULT_CONFIG
    loaded = load_yaml_config(path) if path.exists() else {}
    return {name: {**DEFAULTS[name], **(loaded.get(name) or {})} for name in SUITES}


def render_table(results: list[CheckResult]) -> str:
    """Fixed-width pass/fail table."""
    width = max((len(r.suite) + len(r.name) + 3 for r in results), default=20)
    lines = [f"{'check':<{width}}  result  detail"]
    for r in results:
        label = f"{r.suite} / {r.name}"
        lines.append(f"{label:<{width}}  {'PASS' if r.passed else 'FAIL':<6}  {r.detail}")
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines)


def run_suites(
    suite: str = "all",
    config_path: str | Path | None = None,
    guard: ResourceGuard | None = None,
) -> list[CheckResult]:
    """
    Run one suite or all of them.

    Args:
        suite: Suite name or ``all``
        config_path: YAML parameter file (default: config/verify.yaml)
        guard: Resource guard

    Returns:
        list[CheckResult]: Every check, in suite order

    Raises:
        SpecError: If the suite name is unknown
        VerificationError: If any check fails; ``details`` carries the results
    """
    if suite != "all" and suite not in SUITES:
        raise SpecError(f"Unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
    guard = guard or default_guard()
    params = load_suite_params(config_path)
    names = list(SUITES) if suite == "all" else [suite]
    results: list[CheckResult] = []
    for name in names:
        logger.info(f"Running suite {name}")
        results.extend(SUITES[name](params[name], guard))

    failed = [r for r in results if not r.passed]
    if failed:
        logger.error(f"{len(failed)} of {len(results)} checks failed")
        raise VerificationError(
            "Verification failed: " + "; ".join(f"{r.suite}/{r.name}" for r in failed),
            details={"results": [r.model_dump() for r in results]},
        )
    logger.info(f"All {len(results)} checks passed")
    return results
