"""Verification suites with machine-readable reports.

Every case is an exact symbolic check.  A case either passes, fails with the
nonzero residual polynomial rendered into the record, or fails with the error
message if it raised; the runner never crashes on a broken identity.  Case
lists are sorted by (identity tag, indices) so reports are deterministic up
to the timing fields.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Union

from . import classical as cl
from . import diffeq as dq
from . import pointmass as pm
from .diffeq import CoeffProvider
from .polynomials import Poly, Var
from .version import __version__

SUITES = ("classical", "generalized", "diffeq")

Index = Union[int, str]
Outcome = Union[Poly, bool]
Case = tuple[str, tuple[Index, ...], Callable[[], Outcome]]


@dataclass(frozen=True)
class SuiteSpec:
    """Which suite to run and how far the index ranges go."""

    suite: str = "all"
    n_max: int = 12
    i_max: int = 12

    def __post_init__(self) -> None:
        if self.suite != "all" and self.suite not in SUITES:
            raise ValueError(f"unknown suite {self.suite!r}")
        if self.n_max < 0:
            raise ValueError("n_max must be >= 0")
        if self.i_max < 1:
            raise ValueError("i_max must be >= 1")


@dataclass
class CaseRecord:
    identity: str
    indices: tuple[Index, ...]
    status: str
    elapsed_ms: float
    residual: str | None = None

    def to_json(self) -> dict:
        record: dict = {
            "identity": self.identity,
            "indices": list(self.indices),
            "status": self.status,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }
        if self.residual is not None:
            record["residual"] = self.residual
        return record


@dataclass
class VerificationReport:
    suite: str
    n_max: int
    i_max: int
    cases: list[CaseRecord]

    @property
    def passed(self) -> int:
        return sum(1 for c in self.cases if c.status == "pass")

    @property
    def failed(self) -> int:
        return len(self.cases) - self.passed

    def all_passed(self) -> bool:
        return self.failed == 0

    def to_json(self) -> dict:
        return {
            "tool": "charlier",
            "version": __version__,
            "suite": self.suite,
            "n_max": self.n_max,
            "i_max": self.i_max,
            "cases": [c.to_json() for c in self.cases],
            "summary": {
                "total": len(self.cases),
                "passed": self.passed,
                "failed": self.failed,
            },
        }


def _case_key(record: CaseRecord) -> tuple:
    mixed = tuple(
        (0, v) if isinstance(v, int) else (1, str(v)) for v in record.indices
    )
    return (record.identity, mixed)


def _run_cases(cases: Iterable[Case]) -> list[CaseRecord]:
    records = []
    for identity, indices, thunk in cases:
        start = time.perf_counter()
        try:
            outcome = thunk()
        except Exception as exc:  # surface as a failed case, not a crash
            outcome = False
            residual: str | None = f"error: {exc}"
        else:
            residual = None
        elapsed = (time.perf_counter() - start) * 1000.0
        if isinstance(outcome, Poly):
            ok = not outcome
            if not ok:
                residual = str(outcome)
        else:
            ok = bool(outcome)
        records.append(
            CaseRecord(identity, indices, "pass" if ok else "fail", elapsed, residual)
        )
    records.sort(key=_case_key)
    return records


# -- suite case generators ----------------------------------------------------


def _moment_structure(k: int) -> bool:
    m = cl.moment(k)
    if m.degree_in(Var.A) != (k if k else 0):
        return False
    for _, coeff in m.terms():
        if coeff.denominator != 1 or coeff < 0:
            return False
    return m.substitute(Var.A, 0) == (1 if k == 0 else 0)


def _classical_cases(spec: SuiteSpec) -> Iterable[Case]:
    n_max = spec.n_max
    for n in range(n_max + 1):
        yield "lowering", (n,), lambda n=n: cl.verify_lowering(n)
        yield "second-order", (n,), lambda n=n: cl.second_order_residual(n)
        yield "laguerre", (n,), lambda n=n: cl.verify_laguerre_relation(n)
        yield "values", (n,), lambda n=n: cl.verify_value_formulas(n)
        for label, p in (("-1", -1), ("n", n), ("1/2", Fraction(1, 2))):
            yield "shift", (n, label), lambda n=n, p=p: cl.shift_identity_residual(n, p)
    for n in range(1, n_max + 1):
        yield "value-difference", (n,), lambda n=n: cl.verify_value_difference(n)
    for i in range(n_max + 1):
        for j in range(i + 1):
            yield "convolution", (i, j), lambda i=i, j=j: cl.convolution_residual(i, j)
    for n in range(1, min(n_max, 6) + 1):
        yield "inverse-matrix", (n,), lambda n=n: cl.verify_inverse_matrix(n)
    for m in range(n_max + 1):
        for n in range(m, n_max + 1):
            yield "orthogonality", (m, n), lambda m=m, n=n: cl.orthogonality_residual(m, n)
    for k in range(min(n_max, 10) + 1):
        yield "moment", (k,), lambda k=k: _moment_structure(k)


def _norm_positive(n: int) -> bool:
    norm = pm.norm_general(n)
    if norm.substitute(Var.N, 0) != pm.norm_classical_slice(n):
        return False
    samples = (
        (Fraction(1), Fraction(0)),
        (Fraction(1), Fraction(1)),
        (Fraction(1, 2), Fraction(2)),
        (Fraction(3), Fraction(1, 3)),
    )
    return all(norm.evaluate(a=a, n=mass) > 0 for a, mass in samples)


def _generalized_cases(spec: SuiteSpec) -> Iterable[Case]:
    n_max = spec.n_max
    for n in range(n_max + 1):
        yield "mass-free", (n,), lambda n=n: pm.gen_charlier(n).substitute(Var.N, 0) - cl.charlier(n)
        yield "structure", (n,), lambda n=n: (
            pm.gen_charlier(n).degree_in(Var.X) == n
            and pm.gen_charlier(n).degree_in(Var.N) <= 1
        )
        yield "alternative-form", (n,), lambda n=n: pm.alternative_form_residual(n)
        yield "construction", (n,), lambda n=n: pm.verify_construction_steps(n)
        yield "norm", (n,), lambda n=n: _norm_positive(n)
    for n in range(n_max + 1):
        for m in range(n):
            yield "orthogonality-general", (m, n), lambda m=m, n=n: pm.orthogonality_residual(m, n)


def _stratified_residual(n: int, coeffs: CoeffProvider | None) -> Poly:
    # The N^1 and N^2 layers of the equation must vanish separately; keeping
    # the second layer multiplied by N makes cancellation between them
    # impossible in the combined residual.
    lhs = dq.apply_difference_equation(n, coeffs)
    n_var = Poly.variable(Var.N)
    return lhs.coeff_of(Var.N, 1) + n_var * lhs.coeff_of(Var.N, 2)


def _diffeq_cases(spec: SuiteSpec, coeffs: CoeffProvider | None) -> Iterable[Case]:
    n_max, i_max = spec.n_max, spec.i_max
    for n in range(n_max + 1):
        yield "difference-equation", (n,), lambda n=n: dq.apply_difference_equation(n, coeffs)
        yield "n-stratification", (n,), lambda n=n: _stratified_residual(n, coeffs)
        yield "mass-action", (n,), lambda n=n: dq.mass_action_residual(n, coeffs)
        yield "mass-action-shifted", (n,), lambda n=n: dq.mass_action_shifted_residual(n, coeffs)
        yield "mass-action-cross", (n,), lambda n=n: dq.mass_action_cross_residual(n, coeffs)
        yield "classical-infinite-order", (n,), lambda n=n: dq.classical_infinite_order_residual(n)
        yield "combined-equation", (n,), lambda n=n: dq.combined_equation_residual(n, coeffs)
    for n in range(1, n_max + 1):
        yield "shifted-second-order", (n,), lambda n=n: dq.shifted_second_order_residual(n)
    for n in range(min(n_max, 10) + 1):
        yield "backshift", (n,), lambda n=n: dq.backshift_residual(cl.charlier(n))
    solved: dict[int, Poly] = {}

    def _solved(i: int) -> Poly:
        if not solved:
            solved.update(dq.solve_coefficients(i_max))
        return solved[i]

    table = dq.coeff_ai if coeffs is None else coeffs
    for i in range(1, i_max + 1):
        yield "coeff-structure", (i,), lambda i=i: dq.verify_degree_claims(i, coeffs)
        yield "leading-x", (i,), lambda i=i: dq.verify_leading_x(i, coeffs)
        yield "uniqueness", (i,), lambda i=i: _solved(i) - table(i)
    for i in range(1, i_max):
        yield "degree-escalation", (i,), lambda i=i: dq.verify_degree_escalation(i, coeffs)
    for i in range(1, min(i_max, 6) + 1):
        yield "coprime-leading", (i,), lambda i=i: dq.verify_leading_coprime(i)
    for i in range(min(i_max, 8) + 1):
        for k in range(i + 1):
            for n in range(i, min(n_max, 10) + 1):
                yield "mixed-leading", (i, k, n), lambda i=i, k=k, n=n: dq.verify_mixed_leading(i, k, n)


def run_suite(spec: SuiteSpec, coeffs: CoeffProvider | None = None) -> VerificationReport:
    """Run the selected suite(s); coeffs overrides the order-i coefficient
    table in the diffeq suite (used for failure-path self tests)."""
    names = SUITES if spec.suite == "all" else (spec.suite,)
    cases: list[Case] = []
    for name in names:
        if name == "classical":
            cases.extend(_classical_cases(spec))
        elif name == "generalized":
            cases.extend(_generalized_cases(spec))
        else:
            cases.extend(_diffeq_cases(spec, coeffs))
    return VerificationReport(spec.suite, spec.n_max, spec.i_max, _run_cases(cases))
