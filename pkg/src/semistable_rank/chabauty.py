"""Newton-polygon correction and Chabauty-Coleman point-count bounds.

All quantities are exact integers. The vanishing orders n of the Chabauty
differentials are inputs; nothing here computes p-adic integrals.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import isqrt

from .errors import HypothesisError, InputError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    return all(p % k for k in range(3, isqrt(p) + 1, 2))


@dataclass(frozen=True)
class LocalArithmetic:
    """Residue characteristic p and absolute ramification index e = v(p)."""

    p: int
    e: int = 1

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p):
            raise InputError(f"p = {self.p!r} is not prime")
        if not isinstance(self.e, int) or self.e < 1:
            raise InputError(f"ramification index must be >= 1, got {self.e!r}")


@dataclass(frozen=True)
class ChabautyInputs:
    g: int
    r: int
    local: LocalArithmetic
    n_smooth: int
    orders: tuple | None = None

    def __post_init__(self):
        if self.g < 2:
            raise InputError(f"genus must be >= 2, got {self.g}")
        if self.r < 0:
            raise InputError(f"Mordell-Weil rank must be >= 0, got {self.r}")
        if self.n_smooth < 0:
            raise InputError(f"smooth point count must be >= 0, got {self.n_smooth}")
        if self.orders is not None:
            orders = tuple(self.orders)
            if any(n < 0 for n in orders):
                raise InputError("vanishing orders must be non-negative")
            if sum(orders) > 2 * self.r:
                raise InputError(
                    f"vanishing orders sum to {sum(orders)} > 2r = {2 * self.r};"
                    " the Chabauty divisor has degree at most 2r"
                )
            object.__setattr__(self, "orders", orders)


@dataclass(frozen=True)
class ChabautyReport:
    bound: int
    theorem: str
    hypotheses_checked: tuple
    candidates: tuple = ()
    orders_bound: int | None = None

    def to_dict(self) -> dict:
        out = {
            "bound": self.bound,
            "theorem": self.theorem,
            "hypotheses_checked": [
                {"condition": c, "passed": ok} for c, ok in self.hypotheses_checked
            ],
            "candidates": [{"theorem": t, "bound": b} for t, b in self.candidates],
        }
        if self.orders_bound is not None:
            out["orders_bound"] = self.orders_bound
        return out


def vp(n: int, p: int) -> int:
    """Exponent of p in n."""
    if n <= 0:
        raise InputError(f"valuation needs a positive integer, got {n}")
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def _delta_cap(p: int, e: int, n: int) -> int:
    # Past the cap p**d > (n+d+1)**e, so e*vp(n+d+1) < d and the defining
    # inequality fails; n+d+1 >= 2e keeps d - e*log_p(n+d+1) increasing.
    d = 1
    while not (n + d + 1 >= 2 * e and p**d > (n + d + 1) ** e):
        d *= 2
    return d


def delta(local: LocalArithmetic, n: int) -> int:
    """max{d >= 0 : e*vp(n+1) + d <= e*vp(n+d+1)}."""
    if n < 0:
        raise InputError(f"vanishing order must be >= 0, got {n}")
    p, e = local.p, local.e
    base = e * vp(n + 1, p)
    best = 0
    for d in range(1, _delta_cap(p, e, n) + 1):
        if base + d <= e * vp(n + d + 1, p):
            best = d
    return best


def residue_class_bound(local: LocalArithmetic, n: int) -> int:
    """Upper bound on rational points in one residue class with vanishing order n."""
    return 1 + n + delta(local, n)


def chabauty_bound(inputs: ChabautyInputs) -> ChabautyReport:
    g, r, N = inputs.g, inputs.r, inputs.n_smooth
    p, e = inputs.local.p, inputs.local.e
    if r >= g:
        raise HypothesisError(f"Chabauty hypothesis fails: r = {r} >= g = {g}")

    checks = []
    candidates = []

    ok = p > 2 * r + 2 and e == 1
    checks.append((f"p > 2r + 2 and e = 1 ({p} > {2 * r + 2}, e = {e})", ok))
    if ok:
        candidates.append(("stoll_main", N + 2 * r))

    ok = p > 2 * g + e - 1
    checks.append((f"p > 2g + e - 1 ({p} > {2 * g + e - 1})", ok))
    if ok:
        candidates.append(("coleman_LT", N + 2 * g - 2))

    ok = e < p - 1
    checks.append((f"e < p - 1 ({e} < {p - 1})", ok))
    if ok:
        candidates.append(("general_delta", N + 2 * r + e * (2 * r // (p - e - 1))))

    if not candidates:
        raise HypothesisError("no unconditional bound available at these parameters")
    theorem, bound = min(candidates, key=lambda tb: tb[1])

    orders_bound = None
    if inputs.orders is not None:
        orders_bound = N + sum(n + delta(inputs.local, n) for n in inputs.orders)
    return ChabautyReport(bound, theorem, tuple(checks), tuple(candidates), orders_bound)


@dataclass
class DeltaAudit:
    p: int
    e: int
    table: dict = field(default_factory=dict)
    bounded_claims_checked: bool = False
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def delta_property_audit(local: LocalArithmetic, n_max: int) -> DeltaAudit:
    """Tabulate delta(n) for n <= n_max and check the vanishing / linear bounds when e < p - 1."""
    p, e = local.p, local.e
    audit = DeltaAudit(p, e, bounded_claims_checked=e < p - 1)
    for n in range(n_max + 1):
        d = delta(local, n)
        audit.table[n] = d
        if not audit.bounded_claims_checked:
            continue
        if d > e * (n // (p - e - 1)):
            audit.failures.append((n, d, "exceeds e*floor(n/(p-e-1))"))
        if p > n + e + 1 and d != 0:
            audit.failures.append((n, d, "nonzero although p > n + e + 1"))
    return audit
