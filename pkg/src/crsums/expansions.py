"""Cohen-Ramanujan expansions of arithmetical functions with finite support.

An arithmetical function f is described here through its Möbius transform
f' = μ*f, given on a finite support 1..K and treated as 0 beyond it.  That
model turns every series below into a finite sum of exact rationals:

    f(n)  = Σ_{d|n} f'(d)                       (Möbius inversion)
    a_q   = Σ_{m·q <= K} f'(m·q) / (m·q)**s     (expansion coefficients)
    f(n)  = Σ_q a_q · c_q^(s)(n**s)             (the expansion itself)

and the convergence condition Σ_k 2**ω(k)·|f'(k)|/k**s is a finite sum
reported for diagnostics.  All arithmetic uses ``fractions.Fraction``;
floats appear only in display formatting elsewhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .arith import _require_positive, divisors, omega
from .crsum import _multiplicative_value
from .identities import divisor_abs_sum, grytczuk_value


@dataclass(frozen=True)
class MobiusSpec:
    """An arithmetical function given by its Möbius transform on 1..K.

    ``values`` holds the nonzero f'(k) entries; keys must lie in 1..K and
    missing keys are 0.  Instances are immutable value objects.
    """

    support_bound: int
    values: Mapping[int, int]
    label: str = ""

    def __post_init__(self) -> None:
        _require_positive(support_bound=self.support_bound)
        cleaned: dict[int, int] = {}
        for k, v in self.values.items():
            if not 1 <= k <= self.support_bound:
                raise ValueError(
                    f"entry {k}={v} lies outside the support 1..{self.support_bound}"
                )
            if v != 0:
                cleaned[int(k)] = int(v)
        object.__setattr__(self, "values", cleaned)

    def fprime(self, k: int) -> int:
        """f'(k); zero off the stored support."""
        _require_positive(k=k)
        return self.values.get(k, 0)

    @classmethod
    def from_text(cls, text: str) -> "MobiusSpec":
        """Parse the line-oriented interchange format.

        Header lines ``K=<support bound>`` and optional ``label=<text>``,
        then one ``k=value`` line per nonzero entry.  Blank lines and lines
        starting with ``#`` are ignored.
        """
        bound: int | None = None
        label = ""
        entries: dict[int, int] = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError(f"line {lineno}: expected 'key=value', got {raw!r}")
            key = key.strip()
            value = value.strip()
            if key == "K":
                bound = _parse_int(value, lineno)
            elif key == "label":
                label = value
            else:
                k = _parse_int(key, lineno)
                if k in entries:
                    raise ValueError(f"line {lineno}: duplicate entry for k={k}")
                entries[k] = _parse_int(value, lineno)
        if bound is None:
            raise ValueError("missing required header line 'K=<support bound>'")
        return cls(support_bound=bound, values=entries, label=label)

    def to_text(self) -> str:
        lines = [f"K={self.support_bound}", f"label={self.label}"]
        lines.extend(f"{k}={v}" for k, v in sorted(self.values.items()))
        return "\n".join(lines) + "\n"


def _parse_int(text: str, lineno: int) -> int:
    try:
        return int(text, 10)
    except ValueError:
        raise ValueError(f"line {lineno}: {text!r} is not an integer") from None


@dataclass(frozen=True)
class ExpansionReport:
    """Truncated expansion of one (f, n, s): coefficients, sums, residual."""

    s: int
    n: int
    q_max: int
    coefficients: dict[int, Fraction] = field(repr=False)
    partial_sum: Fraction
    target: Fraction
    residual: Fraction
    condition_sum: Fraction


def f_from_spec(spec: MobiusSpec, n: int) -> int:
    """f(n) = Σ_{d|n} f'(d), with f' zero beyond the support."""
    _require_positive(n=n)
    return sum(spec.fprime(d) for d in divisors(n) if d <= spec.support_bound)


def coefficient(spec: MobiusSpec, q: int, s: int) -> Fraction:
    """a_q = Σ_{m·q <= K} f'(m·q)/(m·q)**s, an exact rational."""
    _require_positive(q=q, s=s)
    total = Fraction(0)
    for k in range(q, spec.support_bound + 1, q):
        fp = spec.fprime(k)
        if fp:
            total += Fraction(fp, k**s)
    return total


def delange_condition_sum(spec: MobiusSpec, s: int) -> Fraction:
    """Σ_{k <= K} 2**ω(k)·|f'(k)|/k**s.

    Finite support makes the convergence hypothesis hold automatically;
    the value is reported so different specs can be compared.
    """
    _require_positive(s=s)
    total = Fraction(0)
    for k, fp in spec.values.items():
        total += Fraction(2 ** omega(k) * abs(fp), k**s)
    return total


def partial_expansion(
    spec: MobiusSpec, n: int, s: int, q_max: int | None = None
) -> ExpansionReport:
    """Sum the expansion through q_max and report against the exact target.

    a_q vanishes for q beyond the support, so with q_max >= K the series
    terminates and the residual is exactly 0.
    """
    _require_positive(n=n, s=s)
    if q_max is None:
        q_max = spec.support_bound
    _require_positive(q_max=q_max)
    ns = n**s
    coefficients: dict[int, Fraction] = {}
    partial = Fraction(0)
    for q in range(1, q_max + 1):
        a_q = coefficient(spec, q, s)
        coefficients[q] = a_q
        if a_q:
            partial += a_q * _multiplicative_value(q, ns, s)
    target = Fraction(f_from_spec(spec, n))
    return ExpansionReport(
        s=s,
        n=n,
        q_max=q_max,
        coefficients=coefficients,
        partial_sum=partial,
        target=target,
        residual=partial - target,
        condition_sum=delange_condition_sum(spec, s),
    )


def rearrangement_check(spec: MobiusSpec, n: int, s: int) -> bool:
    """Verify the absolute-series rearrangement three ways, exactly.

    The double sum Σ_q Σ_m |f'(mq)|/(mq)**s · |c_q^(s)(n**s)| is computed by
    literal (m, q) enumeration, then regrouped along k = m·q through the
    divisor absolute sum, then once more through its closed form.  True iff
    the three rationals coincide, every term satisfies the chain

        2**ω(k**s/(k**s, n**s)_s) · (k**s, n**s)_s >= 2**ω(k),

    and consequently Σ_k |f'(k)|/k**s·2**ω(k) is bounded by the grouped sum.
    A False return means an identity was violated, i.e. a bug.
    """
    _require_positive(n=n, s=s)
    bound = spec.support_bound
    ns = n**s

    double_sum = Fraction(0)
    for q in range(1, bound + 1):
        cq = abs(_multiplicative_value(q, ns, s))
        if cq == 0:
            continue
        for k in range(q, bound + 1, q):
            fp = spec.fprime(k)
            if fp:
                double_sum += Fraction(abs(fp) * cq, k**s)

    grouped = Fraction(0)
    closed = Fraction(0)
    omega_sum = Fraction(0)
    for k in range(1, bound + 1):
        closed_term = grytczuk_value(k, ns, s)
        if closed_term < 2 ** omega(k):  # termwise lower bound must hold
            return False
        fp = abs(spec.fprime(k))
        if fp:
            weight = Fraction(fp, k**s)
            grouped += weight * divisor_abs_sum(k, ns, s)
            closed += weight * closed_term
            omega_sum += weight * 2 ** omega(k)

    return double_sum == grouped == closed and omega_sum <= closed
