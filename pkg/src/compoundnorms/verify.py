"""Brute-force oracles and the randomized property sweep.

The oracles share no numerical code with the paths they check: minors by
Laplace expansion in plain Python, subset maxima by enumeration, and the
eigenvalue product by running the eigensolver on the compound itself.

A sweep draws matrices from several classes, evaluates every registered
property on each, and aggregates a deterministic :class:`SweepReport`.
Each sample has its own PCG64 stream seeded from
``SeedSequence([seed, class, n, index])``.
"""

from __future__ import annotations

import enum
import itertools
import json
import math
from dataclasses import dataclass, field
from math import comb

import numpy as np

from ._backend import BACKEND
from .bounds import (
    Side,
    compound_norm_bound,
    eig_product_lower,
    eig_product_upper,
    is_singular,
    line_norms,
    max_subset_norm_product,
)
from .compound import SubsetLex, compound, compound_l2_norm_fast, subsets_lex
from .config import DEFAULTS, Tolerances, compound_size_guard, rel_close
from .errors import DomainError, NumericalFailure, ResourceError
from .extremal import fourier, random_monomial
from .linalg import (
    ALL_NORMS,
    NormKind,
    as_matrix,
    determinant,
    eigenvalues,
    op_norm,
    singular_values,
    vec_norm,
)
from .matrixio import format_matrix, parse_matrix

# --------------------------------------------------------------------------
# oracles


def _laplace(rows):
    k = len(rows)
    if k == 1:
        return rows[0][0]
    if k == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = 0j
    for j, x in enumerate(rows[0]):
        if x == 0:
            continue
        sub = [r[:j] + r[j + 1:] for r in rows[1:]]
        term = x * _laplace(sub)
        total = total - term if j % 2 else total + term
    return total


def oracle_minor(a, alpha: SubsetLex, beta: SubsetLex, *, tol: Tolerances = DEFAULTS) -> complex:
    """det A(alpha|beta) by recursive cofactor expansion along the first row."""
    if alpha.k != beta.k:
        raise DomainError("minor needs |alpha| == |beta|")
    if alpha.k > tol.max_oracle_minor:
        raise ResourceError(f"Laplace oracle limited to {tol.max_oracle_minor}x{tol.max_oracle_minor}")
    a = as_matrix(a)
    rows = [[complex(a[i - 1, j - 1]) for j in beta.members] for i in alpha.members]
    return complex(_laplace(rows))


def oracle_subset_max(a, k: int, nu, side=Side.COLUMNS) -> float:
    """max over all k-subsets of the product of line norms, by enumeration."""
    a = as_matrix(a, square=True)
    n = a.shape[0]
    if comb(n, k) > compound_size_guard():
        raise ResourceError(f"C({n},{k}) subsets exceed the enumeration guard")
    norms = line_norms(a, nu, Side(side) if not isinstance(side, Side) else side)
    best = 0.0
    for subset in itertools.combinations(range(n), k):
        prod = 1.0
        for x in sorted((float(norms[i]) for i in subset), reverse=True):
            prod *= x
        best = max(best, prod)
    return best


def oracle_eig_product(a, k: int, *, tol: Tolerances = DEFAULTS) -> float:
    """Spectral radius of C_k(A), from the eigensolver run on the compound."""
    c = compound(a, k).matrix
    return float(abs(eigenvalues(c, max_size=compound_size_guard(), tol=tol)[0]))


# --------------------------------------------------------------------------
# random matrix classes


class MatrixClass(enum.Enum):
    GAUSSIAN_COMPLEX = "GaussianComplex"
    MONOMIAL = "Monomial"
    UNITARY_SCALED = "UnitaryScaled"
    PSD = "PSD"
    SINGULAR = "Singular"

    @classmethod
    def parse(cls, text):
        if isinstance(text, MatrixClass):
            return text
        key = str(text).strip().lower().replace("_", "").replace("-", "")
        for member in cls:
            if member.value.lower() == key:
                return member
        raise DomainError(f"unknown matrix class {text!r}; choose from {[m.value for m in cls]}")


ALL_CLASSES = tuple(MatrixClass)
_CLASS_INDEX = {c: i for i, c in enumerate(ALL_CLASSES)}


def gaussian_complex(rng, shape):
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / math.sqrt(2.0)


def sample_matrix(cls: MatrixClass, n: int, rng) -> np.ndarray:
    """Draw one n x n matrix of the given class."""
    if cls is MatrixClass.GAUSSIAN_COMPLEX:
        return gaussian_complex(rng, (n, n))
    if cls is MatrixClass.MONOMIAL:
        return random_monomial(n, rng)
    if cls is MatrixClass.UNITARY_SCALED:
        return fourier(n) * np.exp(2j * np.pi * rng.uniform(size=n))[None, :]
    if cls is MatrixClass.PSD:
        g = gaussian_complex(rng, (n, n))
        return g.conj().T @ g
    if cls is MatrixClass.SINGULAR:
        a = gaussian_complex(rng, (n, n))
        a[:, int(rng.integers(n))] = 0.0
        return a
    raise DomainError(f"unknown class {cls}")


def sample_rng(seed: int, cls: MatrixClass, n: int, index: int):
    ss = np.random.SeedSequence([int(seed) & (2**64 - 1), _CLASS_INDEX[cls], n, index])
    return np.random.Generator(np.random.PCG64(ss))


# --------------------------------------------------------------------------
# per-sample cache and property checks


class _Sample:
    """Lazily computed quantities shared by the checks on one matrix."""

    def __init__(self, a, tol):
        self.a = a
        self.n = a.shape[0]
        self.tol = tol
        self._compounds = {}
        self._spectrum = None
        self._singular = None

    def compound(self, k):
        if k not in self._compounds:
            self._compounds[k] = compound(self.a, k).matrix
        return self._compounds[k]

    @property
    def spectrum(self):
        if self._spectrum is None:
            self._spectrum = eigenvalues(self.a, tol=self.tol)
        return self._spectrum

    @property
    def singular(self):
        if self._singular is None:
            self._singular = is_singular(self.a, tol=self.tol)
        return self._singular


# Every check returns (ok, ratio, observed) or None when not applicable.


def _chk_compound_bound(s, k, p):
    mu, nu = NormKind(p["mu"]), NormKind(p["nu"])
    r = compound_norm_bound(s.a, k, mu, nu, tol=s.tol, _compound=s.compound(k))
    return r.holds(s.tol.bound), r.ratio, {"quantity": r.quantity, "bound": r.bound}


def _chk_eig_upper(s, k, p):
    r = eig_product_upper(s.a, k, NormKind(p["norm"]), tol=s.tol, _spectrum=s.spectrum)
    return r.holds(s.tol.eig_bound), r.ratio, {"quantity": r.quantity, "bound": r.bound}


def _chk_lower(s, k, p):
    if k >= s.n or s.singular:
        return None
    low = eig_product_lower(s.a, k, NormKind(p["norm"]), tol=s.tol, _spectrum=s.spectrum)
    actual = float(np.prod(np.abs(s.spectrum[k:])))
    ok = low <= actual + s.tol.eig_bound * max(1.0, actual)
    return ok, (actual and low / actual) or None, {"lower": low, "actual": actual}


def _chk_spectral_identity(s, k, p):
    direct = float(np.prod(np.abs(s.spectrum[:k])))
    rho = float(abs(eigenvalues(s.compound(k), max_size=compound_size_guard(), tol=s.tol)[0]))
    return rel_close(rho, direct, 1e-7), None, {"rho_compound": rho, "direct": direct}


def _chk_l2_fast(s, k, p):
    fast = compound_l2_norm_fast(s.a, k, tol=s.tol)
    slow = op_norm(s.compound(k), NormKind.L2, tol=s.tol)
    return rel_close(fast, slow, 1e-7), None, {"fast": fast, "direct": slow}


def _chk_eig_linf_ge_l2(s, k, p):
    b2 = eig_product_upper(s.a, k, NormKind.L2, tol=s.tol, _spectrum=s.spectrum).bound
    b3 = eig_product_upper(s.a, k, NormKind.LINF, tol=s.tol, _spectrum=s.spectrum).bound
    return b3 >= b2 * (1 - 1e-12), None, {"l2_bound": b2, "linf_bound": b3}


def _chk_l2_strict(s, k, p):
    if k >= s.n or s.singular:
        return None
    r = compound_norm_bound(s.a, k, NormKind.L2, NormKind.L2, tol=s.tol, _compound=s.compound(k))
    return r.quantity < r.bound * (1 - s.tol.equality), r.ratio, {"quantity": r.quantity, "bound": r.bound}


def _chk_subset_oracle(s, k, p):
    nu, side = NormKind(p["nu"]), Side(p["side"])
    fast = max_subset_norm_product(s.a, k, nu, side)
    slow = oracle_subset_max(s.a, k, nu, side)
    return fast == slow, None, {"fast": fast, "oracle": slow}


def _chk_transpose(s, k, p):
    q = float(np.prod(np.abs(s.spectrum[:k])))
    qt = float(np.prod(np.abs(eigenvalues(s.a.T, tol=s.tol)[:k])))
    return rel_close(q, qt, 1e-8), None, {"A": q, "A_T": qt}


def _chk_monomial_compound_tight(s, k, p):
    r = compound_norm_bound(s.a, k, NormKind.L1, NormKind.L1, tol=s.tol, _compound=s.compound(k))
    return abs(r.ratio - 1.0) <= 1e-10, r.ratio, {"quantity": r.quantity, "bound": r.bound}


def _chk_monomial_eig_l1_tight(s, k, p):
    r = eig_product_upper(s.a, k, NormKind.L1, tol=s.tol, _spectrum=s.spectrum)
    return abs(r.ratio - 1.0) <= 1e-10, r.ratio, {"quantity": r.quantity, "bound": r.bound}


def _chk_minor_oracle(s, k, p):
    if k > s.tol.max_oracle_minor:
        return None
    c = s.compound(k)
    worst = 0.0
    for ra, rb in p["pairs"]:
        alpha, beta = SubsetLex.unrank(s.n, k, ra), SubsetLex.unrank(s.n, k, rb)
        want = oracle_minor(s.a, alpha, beta, tol=s.tol)
        got = complex(c[ra, rb])
        worst = max(worst, abs(got - want) / max(1.0, abs(want)))
    return worst <= 1e-9, None, {"max_rel_err": worst}


def _chk_cauchy_binet(s, k, p):
    b = parse_matrix(p["B"])
    lhs = compound(s.a @ b, k).matrix
    rhs = s.compound(k) @ compound(b, k).matrix
    err = float(np.linalg.norm(lhs - rhs))
    scale = max(1.0, float(np.linalg.norm(rhs)))
    return err <= 1e-8 * scale, None, {"frobenius_err": err, "scale": scale}


def _chk_svd_det(s, k, p):
    prod_sv = float(np.prod(singular_values(s.a, tol=s.tol)))
    d = abs(determinant(s.a))
    return rel_close(prod_sv, d, 1e-8), None, {"prod_sv": prod_sv, "abs_det": d}


def _chk_eig_trace(s, k, p):
    tr = complex(np.trace(s.a))
    total = complex(np.sum(s.spectrum))
    return abs(tr - total) <= 1e-8 * max(1.0, abs(tr)), None, {"trace": abs(tr), "err": abs(tr - total)}


def _chk_eig_det(s, k, p):
    d = determinant(s.a)
    pr = complex(np.prod(s.spectrum))
    return abs(d - pr) <= 1e-7 * max(1.0, abs(d)), None, {"abs_det": abs(d), "err": abs(d - pr)}


def _chk_vector_norms(s, k, p):
    v = np.asarray(p["v"], dtype=float).view(np.complex128)
    n = v.size
    for r, q in itertools.product(ALL_NORMS, repeat=2):
        expo = max(r.reciprocal - q.reciprocal, 0.0)
        if vec_norm(v, r) > n**expo * vec_norm(v, q) + 1e-12:
            return False, None, {"r": r.value, "p": q.value}
    return True, None, {}


def _chk_rho_le_opnorm(s, k, p):
    rho = float(abs(s.spectrum[0]))
    for q in ALL_NORMS:
        if rho > op_norm(s.a, q, tol=s.tol) + 1e-8 * max(1.0, rho):
            return False, None, {"rho": rho, "norm": q.value}
    return True, None, {"rho": rho}


def _chk_duality(s, k, p):
    l1 = op_norm(s.a, NormKind.L1)
    li = op_norm(s.a.conj().T, NormKind.LINF)
    return l1 == li, None, {"l1": l1, "linf_of_adjoint": li}


CHECKS = {
    "compound_bound": _chk_compound_bound,
    "eig_upper": _chk_eig_upper,
    "eig_lower": _chk_lower,
    "spectral_identity": _chk_spectral_identity,
    "l2_fast": _chk_l2_fast,
    "eig_linf_ge_l2": _chk_eig_linf_ge_l2,
    "l2_strict": _chk_l2_strict,
    "subset_max_oracle": _chk_subset_oracle,
    "transpose_symmetry": _chk_transpose,
    "monomial_compound_l1_tight": _chk_monomial_compound_tight,
    "monomial_eig_l1_tight": _chk_monomial_eig_l1_tight,
    "minor_oracle": _chk_minor_oracle,
    "cauchy_binet": _chk_cauchy_binet,
    "svd_det": _chk_svd_det,
    "eig_trace": _chk_eig_trace,
    "eig_det": _chk_eig_det,
    "vector_norm_comparison": _chk_vector_norms,
    "rho_le_opnorm": _chk_rho_le_opnorm,
    "l1_linf_duality": _chk_duality,
}

# Properties reported but not counted against the sweep verdict.
MEASUREMENTS = {"monomial_eig_l1_tight"}

_EIG_NAMES = {NormKind.L1: "eig_upper[L1]", NormKind.L2: "eig_upper[L2]", NormKind.LINF: "eig_upper[LInf]"}


def _plan(cls, n, rng):
    """(property name, check key, k, params) for one sample, in fixed order."""
    plan = []
    b = gaussian_complex(rng, (n, n))
    v = gaussian_complex(rng, n)
    pair_rng = np.random.Generator(np.random.PCG64(int(rng.integers(2**63))))
    for k in range(1, n + 1):
        for mu, nu in itertools.product(ALL_NORMS, repeat=2):
            plan.append((f"compound_bound[{mu.value},{nu.value}]", "compound_bound", k, {"mu": mu.value, "nu": nu.value}))
        for norm in ALL_NORMS:
            plan.append((_EIG_NAMES[norm], "eig_upper", k, {"norm": norm.value}))
            plan.append((f"eig_lower[{norm.value}]", "eig_lower", k, {"norm": norm.value}))
        plan.append(("spectral_identity", "spectral_identity", k, {}))
        plan.append(("l2_fast", "l2_fast", k, {}))
        plan.append(("eig_linf_ge_l2", "eig_linf_ge_l2", k, {}))
        plan.append(("transpose_symmetry", "transpose_symmetry", k, {}))
        if cls is not MatrixClass.MONOMIAL:
            plan.append(("l2_strict", "l2_strict", k, {}))
        for nu in ALL_NORMS:
            for side in (Side.COLUMNS, Side.ROWS):
                plan.append(("subset_max_oracle", "subset_max_oracle", k, {"nu": nu.value, "side": side.value}))
        if cls is MatrixClass.MONOMIAL:
            plan.append(("monomial_compound_l1_tight", "monomial_compound_l1_tight", k, {}))
            plan.append(("monomial_eig_l1_tight", "monomial_eig_l1_tight", k, {}))
        m = comb(n, k)
        npairs = min(4, m * m)
        flat = pair_rng.choice(m * m, size=npairs, replace=False)
        pairs = [[int(x // m), int(x % m)] for x in sorted(flat)]
        plan.append(("minor_oracle", "minor_oracle", k, {"pairs": pairs}))
        plan.append(("cauchy_binet", "cauchy_binet", k, {"B": format_matrix(b)}))
    plan.append(("svd_det", "svd_det", 0, {}))
    plan.append(("eig_trace", "eig_trace", 0, {}))
    plan.append(("eig_det", "eig_det", 0, {}))
    plan.append(("vector_norm_comparison", "vector_norm_comparison", 0, {"v": np.asarray(v).view(float).tolist()}))
    plan.append(("rho_le_opnorm", "rho_le_opnorm", 0, {}))
    plan.append(("l1_linf_duality", "l1_linf_duality", 0, {}))
    return plan


# --------------------------------------------------------------------------
# sweep


@dataclass(frozen=True)
class SweepConfig:
    n_min: int = 2
    n_max: int = 6
    samples_per_n: int = 50
    seed: int = 42
    classes: tuple = ALL_CLASSES
    tolerance: float = DEFAULTS.bound

    def __post_init__(self):
        object.__setattr__(self, "classes", tuple(MatrixClass.parse(c) for c in self.classes))
        if self.n_min < 2 or self.n_max < self.n_min:
            raise DomainError(
                f"sweep needs 2 <= n_min <= n_max (k < n properties), got [{self.n_min}, {self.n_max}]"
            )
        if self.samples_per_n < 1:
            raise DomainError("samples_per_n must be positive")
        if not self.classes:
            raise DomainError("at least one matrix class is required")
        if not self.tolerance > 0:
            raise DomainError("tolerance must be positive")

    def tolerances(self) -> Tolerances:
        from dataclasses import replace

        return replace(DEFAULTS, bound=self.tolerance)

    def to_dict(self):
        return {
            "n_min": self.n_min,
            "n_max": self.n_max,
            "samples_per_n": self.samples_per_n,
            "seed": self.seed,
            "classes": [c.value for c in self.classes],
            "tolerance": self.tolerance,
        }


@dataclass
class PropertyStats:
    enforced: bool = True
    passed: int = 0
    failed: int = 0
    worst_ratio: float | None = None
    worst_ratio_by_class: dict = field(default_factory=dict)
    counterexamples: list = field(default_factory=list)

    def add_ratio(self, cls, ratio):
        if ratio is None or not math.isfinite(ratio):
            return
        if self.worst_ratio is None or ratio > self.worst_ratio:
            self.worst_ratio = ratio
        cur = self.worst_ratio_by_class.get(cls)
        if cur is None or ratio > cur:
            self.worst_ratio_by_class[cls] = ratio

    def to_dict(self):
        return {
            "pass": self.passed,
            "fail": self.failed,
            "enforced": self.enforced,
            "worst_ratio": self.worst_ratio,
            "worst_ratio_by_class": dict(sorted(self.worst_ratio_by_class.items())),
            "counterexamples": self.counterexamples,
        }


@dataclass
class SweepReport:
    config: SweepConfig
    properties: dict
    samples: int
    numerical_failures: list
    backend: str = BACKEND
    max_counterexamples: int = 5

    @property
    def violations(self) -> int:
        return sum(p.failed for p in self.properties.values() if p.enforced)

    @property
    def failure_budget_exceeded(self) -> bool:
        return len(self.numerical_failures) > 0.01 * self.samples

    @property
    def ok(self) -> bool:
        return self.violations == 0 and not self.failure_budget_exceeded

    def to_dict(self):
        return {
            "config": self.config.to_dict(),
            "backend": self.backend,
            "samples": self.samples,
            "ok": self.ok,
            "violations": self.violations,
            "numerical_failures": self.numerical_failures,
            "properties": {k: v.to_dict() for k, v in sorted(self.properties.items())},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def _payload(name, key, cls, n, index, k, params, a, observed):
    return {
        "property": name,
        "check": key,
        "class": cls.value,
        "n": n,
        "sample": index,
        "k": k,
        "params": params,
        "matrix": format_matrix(a),
        "observed": observed,
    }


def replay(counterexample: dict, tol: Tolerances = DEFAULTS) -> bool:
    """Re-run a recorded check; True when the violation reproduces."""
    a = parse_matrix(counterexample["matrix"])
    check = CHECKS[counterexample["check"]]
    res = check(_Sample(a, tol), counterexample["k"], counterexample["params"])
    return res is not None and not res[0]


def run_sweep(config: SweepConfig, max_counterexamples: int = 5) -> SweepReport:
    """Evaluate every property on every sample; deterministic in ``config``."""
    tol = config.tolerances()
    stats = {}
    failures = []
    count = 0
    for cls in config.classes:
        for n in range(config.n_min, config.n_max + 1):
            for index in range(config.samples_per_n):
                count += 1
                rng = sample_rng(config.seed, cls, n, index)
                a = sample_matrix(cls, n, rng)
                plan = _plan(cls, n, rng)
                sample = _Sample(a, tol)
                for name, key, k, params in plan:
                    st = stats.setdefault(name, PropertyStats(enforced=name not in MEASUREMENTS))
                    try:
                        res = CHECKS[key](sample, k, params)
                    except NumericalFailure as exc:
                        failures.append({"class": cls.value, "n": n, "sample": index,
                                         "property": name, "k": k, "message": str(exc)})
                        continue
                    if res is None:
                        continue
                    ok, ratio, observed = res
                    st.add_ratio(cls.value, ratio)
                    if ok:
                        st.passed += 1
                    else:
                        st.failed += 1
                        if len(st.counterexamples) < max_counterexamples:
                            st.counterexamples.append(
                                _payload(name, key, cls, n, index, k, params, a, observed)
                            )
    return SweepReport(config, stats, count, failures, max_counterexamples=max_counterexamples)
