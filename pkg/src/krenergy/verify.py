"""Verification harness: exhaustive and randomized suites over all modules.

Every suite walks a family of instances, re-derives both sides of an
identity, and records a JSON witness string for each failure.  All
randomness is drawn from ``random.Random`` seeded per (suite, n, m) cell,
so a fixed seed reproduces the exact same report; the canonical JSON report
carries no timing data (timings go to the human summary) and is therefore
byte-identical across runs.
"""

from __future__ import annotations

import itertools
import json
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .birational import (
    RationalPoint,
    check_lem_tact,
    random_point,
    rational_energy_global,
    rational_energy_product,
    s_action,
)
from .crystal import (
    CrystalElement,
    TensorElement,
    apply_s,
    coenergy,
    coenergy_sliding_oracle,
    counts_to_grid,
    energy_staircase,
    intrinsic_energy,
    r_matrix,
    r_matrix_oracle,
)
from .identities import identity_suite
from .lsym import ColoredPoly, loop_schur_tableaux, sigma, trop_eval
from .tableaux import Shape, count_ssyt, staircase

SUITE_NAMES = (
    "rmatrix",
    "coenergy",
    "energy-equivalence",
    "braid",
    "lsym-identities",
    "birational",
    "section4",
)

MODES = ("exhaustive", "randomized", "both")

# Exhaustive tensor spaces larger than this are deterministically sampled
# instead of fully enumerated (the report notes nothing; sampling is a
# function of the seed alone).
EXHAUSTIVE_CELL_LIMIT = 100_000


class ConfigError(ValueError):
    """Raised for invalid harness configuration."""


@dataclass(frozen=True)
class VerifyConfig:
    suites: tuple[str, ...] = SUITE_NAMES
    n_range: tuple[int, int] = (2, 3)
    m_range: tuple[int, int] = (1, 3)
    capacity_cap: int = 3
    trials: int = 50
    seed: int = 0
    mode: str = "both"

    def __post_init__(self):
        for s in self.suites:
            if s not in SUITE_NAMES:
                raise ConfigError(f"unknown suite {s!r}; choose from {SUITE_NAMES}")
        if not self.suites:
            raise ConfigError("at least one suite is required")
        n_lo, n_hi = self.n_range
        m_lo, m_hi = self.m_range
        if not (2 <= n_lo <= n_hi <= 6):
            raise ConfigError(f"n range must lie within [2, 6], got {self.n_range}")
        if not (1 <= m_lo <= m_hi <= 6):
            raise ConfigError(f"m range must lie within [1, 6], got {self.m_range}")
        if self.trials < 1:
            raise ConfigError(f"trials must be at least 1, got {self.trials}")
        if self.capacity_cap < 0:
            raise ConfigError(f"capacity cap must be nonnegative, got {self.capacity_cap}")
        if self.mode not in MODES:
            raise ConfigError(f"mode must be one of {MODES}, got {self.mode!r}")

    def to_jsonable(self) -> dict:
        return {
            "suites": list(self.suites),
            "n_range": list(self.n_range),
            "m_range": list(self.m_range),
            "capacity_cap": self.capacity_cap,
            "trials": self.trials,
            "seed": self.seed,
            "mode": self.mode,
        }


@dataclass
class SuiteResult:
    checks: int = 0
    failures: int = 0
    witnesses: list[str] = field(default_factory=list)
    seconds: float = 0.0

    def record(self, passed: bool, witness: str | None = None):
        self.checks += 1
        if not passed:
            self.failures += 1
            if witness is not None and len(self.witnesses) < 32:
                self.witnesses.append(witness)


@dataclass
class RunReport:
    config: VerifyConfig
    suites: dict[str, SuiteResult]

    @property
    def total_checks(self) -> int:
        return sum(s.checks for s in self.suites.values())

    @property
    def total_failures(self) -> int:
        return sum(s.failures for s in self.suites.values())

    def to_jsonable(self) -> dict:
        # no timings here: the canonical report must be byte-identical
        # across runs with the same config and seed
        return {
            "config": self.config.to_jsonable(),
            "seed": self.config.seed,
            "suites": {
                name: {
                    "checks": res.checks,
                    "failures": res.failures,
                    "witnesses": sorted(res.witnesses),
                }
                for name, res in sorted(self.suites.items())
            },
            "total": {"checks": self.total_checks, "failures": self.total_failures},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_jsonable(), sort_keys=True, separators=(",", ":"))

    def human_summary(self) -> str:
        lines = []
        for name, res in sorted(self.suites.items()):
            status = "ok" if res.failures == 0 else f"{res.failures} FAILURES"
            lines.append(f"{name:<20} {res.checks:>8} checks  {status}  ({res.seconds:.2f}s)")
        lines.append(
            f"{'total':<20} {self.total_checks:>8} checks  "
            f"{'ok' if self.total_failures == 0 else f'{self.total_failures} FAILURES'}"
        )
        return "\n".join(lines)


def _witness(kind: str, **data) -> str:
    return json.dumps({"kind": kind, **data}, sort_keys=True, separators=(",", ":"))


# ---------------------------------------------------------------------------
# instance enumeration


def elements_up_to(n: int, cap: int) -> list[CrystalElement]:
    """All single-row elements with capacity at most ``cap``."""
    out = []
    for total in range(cap + 1):
        for counts in _count_vectors(n, total):
            out.append(CrystalElement(n, counts))
    return out


def _count_vectors(n: int, total: int):
    if n == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _count_vectors(n - 1, total - first):
            yield (first,) + rest


def iter_tensors(n: int, m: int, cap: int):
    """Every tensor with all factor capacities at most ``cap``."""
    elements = elements_up_to(n, cap)
    for combo in itertools.product(elements, repeat=m):
        yield TensorElement(n, combo)


def tensor_space_size(n: int, m: int, cap: int) -> int:
    return len(elements_up_to(n, cap)) ** m


def random_element(n: int, cap: int, rng: random.Random) -> CrystalElement:
    capacity = rng.randint(0, cap)
    counts = [0] * n
    for _ in range(capacity):
        counts[rng.randrange(n)] += 1
    return CrystalElement(n, counts)


def random_tensor(n: int, m: int, cap: int, rng: random.Random) -> TensorElement:
    return TensorElement(n, [random_element(n, cap, rng) for _ in range(m)])


def _tensor_stream(n: int, m: int, cap: int, trials: int, rng: random.Random, mode: str):
    """Exhaustive enumeration when feasible and requested, else sampling."""
    small = tensor_space_size(n, m, cap) <= EXHAUSTIVE_CELL_LIMIT
    if mode in ("exhaustive", "both") and small:
        yield from iter_tensors(n, m, cap)
    if mode in ("randomized", "both") or not small:
        for _ in range(trials):
            yield random_tensor(n, m, cap, rng)


# ---------------------------------------------------------------------------
# per-instance checks


def check_rmatrix_pair(b1: CrystalElement, b2: CrystalElement) -> list[str]:
    """Formula vs jeu-de-taquin oracle, capacity swap, content conservation."""
    problems = []
    c1, c2 = r_matrix(b1, b2)
    pair = {"n": b1.n, "b1": list(b1.counts), "b2": list(b2.counts)}
    if (c1.capacity, c2.capacity) != (b2.capacity, b1.capacity):
        problems.append(_witness("capacity-swap", **pair))
    if any(
        b1.counts[c] + b2.counts[c] != c1.counts[c] + c2.counts[c] for c in range(b1.n)
    ):
        problems.append(_witness("content-conservation", **pair))
    o1, o2 = r_matrix_oracle(b1, b2)
    if (c1, c2) != (o1, o2):
        problems.append(
            _witness(
                "rmatrix-vs-oracle",
                **pair,
                formula=[list(c1.counts), list(c2.counts)],
                oracle=[list(o1.counts), list(o2.counts)],
            )
        )
    return problems


def check_coenergy_pair(b1: CrystalElement, b2: CrystalElement) -> list[str]:
    """ok_1 vs sliding oracle, and invariance of coenergy under R."""
    problems = []
    pair = {"n": b1.n, "b1": list(b1.counts), "b2": list(b2.counts)}
    h = coenergy(b1, b2)
    slide = coenergy_sliding_oracle(b1, b2)
    if h != slide:
        problems.append(_witness("coenergy-vs-slide", **pair, formula=h, slide=slide))
    c1, c2 = r_matrix(b1, b2)
    if coenergy(c1, c2) != h:
        problems.append(_witness("coenergy-r-invariance", **pair))
    return problems


def check_energy_tensor(t: TensorElement) -> list[str]:
    d_global = intrinsic_energy(t)
    d_stair = energy_staircase(t)
    if d_global != d_stair:
        return [
            _witness(
                "energy-equivalence",
                tensor=t.to_jsonable(),
                intrinsic=d_global,
                staircase=d_stair,
            )
        ]
    return []


@lru_cache(maxsize=None)
def sigma_product_polys(n: int, m: int) -> tuple[ColoredPoly, ...]:
    """The sigma factors of the rational energy product at color offset 0."""
    return tuple(
        sigma((n - 1) * (m - i), i - 1, n=n, m=m, indices=range(i, m + 1))
        for i in range(1, m)
    )


@lru_cache(maxsize=None)
def staircase_schur_poly(n: int, m: int) -> ColoredPoly:
    shape = Shape(()) if m == 1 else staircase(m - 1, n - 1)
    return loop_schur_tableaux(shape, 0, m, n=n)


def check_tropical_bridge_tensor(t: TensorElement) -> list[str]:
    """Tropicalizations of the sigma product and of the staircase loop Schur
    both equal the intrinsic energy."""
    problems = []
    grid = counts_to_grid(t)
    d = intrinsic_energy(t)
    sigma_trop = sum(trop_eval(p, grid) for p in sigma_product_polys(t.n, t.m))
    if sigma_trop != d:
        problems.append(
            _witness("trop-sigma-product", tensor=t.to_jsonable(), got=sigma_trop, want=d)
        )
    schur_trop = trop_eval(staircase_schur_poly(t.n, t.m), grid)
    if schur_trop != d:
        problems.append(
            _witness("trop-loop-schur", tensor=t.to_jsonable(), got=schur_trop, want=d)
        )
    return problems


def check_braid_tensor(t: TensorElement) -> list[str]:
    """Involution, braid, and intrinsic-energy invariance of the R-action."""
    problems = []
    m = t.m
    d = intrinsic_energy(t)
    for j in range(1, m):
        tj = apply_s(t, j)
        if apply_s(tj, j) != t:
            problems.append(_witness("involution", tensor=t.to_jsonable(), j=j))
        if intrinsic_energy(tj) != d:
            problems.append(_witness("energy-r-invariance", tensor=t.to_jsonable(), j=j))
    for j in range(1, m - 1):
        lhs = apply_s(apply_s(apply_s(t, j), j + 1), j)
        rhs = apply_s(apply_s(apply_s(t, j + 1), j), j + 1)
        if lhs != rhs:
            problems.append(_witness("braid", tensor=t.to_jsonable(), j=j))
    return problems


def check_birational_point(p: RationalPoint) -> list[str]:
    """Involution, braid, energy invariance, the product formula, and the
    transported-kappa identities, all at one exact point."""
    problems = []
    m, n = p.m, p.n
    glob = rational_energy_global(p)
    prod = rational_energy_product(p)
    point = p.to_jsonable()
    if glob != prod:
        problems.append(_witness("energyprod", point=point))
    for j in range(1, m):
        pj = s_action(j, p)
        if any(v <= 0 for row in pj.values for v in row):
            problems.append(_witness("positivity", point=point, j=j))
        if s_action(j, pj) != p:
            problems.append(_witness("birational-involution", point=point, j=j))
        if rational_energy_global(pj) != glob:
            problems.append(_witness("rational-energy-invariance", point=point, j=j))
    for j in range(1, m - 1):
        lhs = s_action(j, s_action(j + 1, s_action(j, p)))
        rhs = s_action(j + 1, s_action(j, s_action(j + 1, p)))
        if lhs != rhs:
            problems.append(_witness("birational-braid", point=point, j=j))
    for i in range(1, m):
        for j in range(i + 1, m + 1):
            tact = check_lem_tact(i, j, (i + j) % n, p)
            if not tact.passed:
                problems.append(_witness("lem-tact", point=point, i=i, j=j))
    return problems


def check_all_ones_count(n: int, m: int) -> list[str]:
    """The rational energy at the all-ones point counts staircase tableaux."""
    if m < 2:
        return []
    value = rational_energy_product(RationalPoint.all_ones(m, n))
    expected = count_ssyt(staircase(m - 1, n - 1), m)
    if value != Fraction(expected):
        return [_witness("all-ones-count", n=n, m=m, got=str(value), want=expected)]
    return []


# ---------------------------------------------------------------------------
# suite runners


def _cfg_rng(config: VerifyConfig, suite: str, n: int, m: int) -> random.Random:
    return random.Random(f"{config.seed}:{suite}:{n}:{m}")


def _pair_stream(config: VerifyConfig, suite: str, n: int):
    if config.mode in ("exhaustive", "both"):
        elements = elements_up_to(n, config.capacity_cap)
        yield from itertools.product(elements, repeat=2)
    if config.mode in ("randomized", "both"):
        rng = _cfg_rng(config, suite, n, 2)
        for _ in range(config.trials):
            yield (
                random_element(n, config.capacity_cap, rng),
                random_element(n, config.capacity_cap, rng),
            )


def _run_rmatrix(config: VerifyConfig, result: SuiteResult) -> None:
    n_lo, n_hi = config.n_range
    for n in range(max(2, n_lo), n_hi + 1):
        for b1, b2 in _pair_stream(config, "rmatrix", n):
            problems = check_rmatrix_pair(b1, b2)
            result.record(not problems, problems[0] if problems else None)


def _run_coenergy(config: VerifyConfig, result: SuiteResult) -> None:
    n_lo, n_hi = config.n_range
    for n in range(max(2, n_lo), n_hi + 1):
        for b1, b2 in _pair_stream(config, "coenergy", n):
            problems = check_coenergy_pair(b1, b2)
            result.record(not problems, problems[0] if problems else None)


def _run_energy_equivalence(config: VerifyConfig, result: SuiteResult) -> None:
    n_lo, n_hi = config.n_range
    m_lo, m_hi = config.m_range
    for n in range(max(2, n_lo), n_hi + 1):
        for m in range(m_lo, m_hi + 1):
            rng = _cfg_rng(config, "energy", n, m)
            for t in _tensor_stream(n, m, config.capacity_cap, config.trials, rng, config.mode):
                problems = check_energy_tensor(t) + check_tropical_bridge_tensor(t)
                result.record(not problems, problems[0] if problems else None)


def _run_braid(config: VerifyConfig, result: SuiteResult) -> None:
    n_lo, n_hi = config.n_range
    m_lo, m_hi = config.m_range
    for n in range(max(2, n_lo), n_hi + 1):
        for m in range(max(2, m_lo), m_hi + 1):
            rng = _cfg_rng(config, "braid", n, m)
            for t in _tensor_stream(n, m, config.capacity_cap, config.trials, rng, config.mode):
                problems = check_braid_tensor(t)
                result.record(not problems, problems[0] if problems else None)


def _run_lsym_identities(config: VerifyConfig, result: SuiteResult) -> None:
    from .identities import SYMBOLIC_M_MAX, SYMBOLIC_N_MAX

    n_lo, n_hi = config.n_range
    m_lo, m_hi = config.m_range
    families = {"eh_alternating_sum", "tau_via_products", "tau_recursion", "tau_recursion_residual",
                "staircase_factorization", "jacobi_trudi", "staircase_jacobi_trudi"}
    for n in range(max(2, n_lo), n_hi + 1):
        for m in range(m_lo, m_hi + 1):
            modes = []
            if config.mode in ("exhaustive", "both") and n <= SYMBOLIC_N_MAX and m <= SYMBOLIC_M_MAX:
                modes.append("symbolic")
            if config.mode in ("randomized", "both"):
                modes.append("randomized")
            for mode in modes:
                for check in identity_suite(n, m, mode=mode, seed=config.seed, trials=config.trials):
                    if check.identity in families:
                        witness = json.dumps(
                            check.to_jsonable(), sort_keys=True, separators=(",", ":")
                        )
                        result.record(check.passed, None if check.passed else witness)


def _run_section4(config: VerifyConfig, result: SuiteResult) -> None:
    from .identities import SYMBOLIC_M_MAX, SYMBOLIC_N_MAX

    n_lo, n_hi = config.n_range
    m_lo, m_hi = config.m_range
    families = {"column_translation", "tau_vector_annihilation", "minor_tau_factorization"}
    for n in range(max(2, n_lo), n_hi + 1):
        for m in range(max(2, m_lo), m_hi + 1):
            modes = []
            if config.mode in ("exhaustive", "both") and n <= SYMBOLIC_N_MAX and m <= SYMBOLIC_M_MAX:
                modes.append("symbolic")
            if config.mode in ("randomized", "both"):
                modes.append("randomized")
            for mode in modes:
                for check in identity_suite(n, m, mode=mode, seed=config.seed, trials=config.trials):
                    if check.identity in families:
                        witness = json.dumps(
                            check.to_jsonable(), sort_keys=True, separators=(",", ":")
                        )
                        result.record(check.passed, None if check.passed else witness)


def _run_birational(config: VerifyConfig, result: SuiteResult) -> None:
    n_lo, n_hi = config.n_range
    m_lo, m_hi = config.m_range
    for n in range(max(2, n_lo), n_hi + 1):
        for m in range(max(2, m_lo), m_hi + 1):
            rng = _cfg_rng(config, "birational", n, m)
            ones_problems = check_all_ones_count(n, m)
            result.record(not ones_problems, ones_problems[0] if ones_problems else None)
            for _ in range(config.trials):
                p = random_point(m, n, rng)
                problems = check_birational_point(p)
                result.record(not problems, problems[0] if problems else None)


SUITE_RUNNERS = {
    "rmatrix": _run_rmatrix,
    "coenergy": _run_coenergy,
    "energy-equivalence": _run_energy_equivalence,
    "braid": _run_braid,
    "lsym-identities": _run_lsym_identities,
    "birational": _run_birational,
    "section4": _run_section4,
}


def run_verify(config: VerifyConfig) -> RunReport:
    """Run the selected suites and return the aggregated report."""
    suites: dict[str, SuiteResult] = {}
    for name in config.suites:
        result = SuiteResult()
        start = time.perf_counter()
        SUITE_RUNNERS[name](config, result)
        result.seconds = time.perf_counter() - start
        suites[name] = result
    return RunReport(config, suites)
