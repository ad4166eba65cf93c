"""The rational map family f_b(x) = x + (x^{p^d} - x + b)^{-1} over F_{p^n}.

The level d (d | n, default 1) selects which power-Frobenius appears in the
denominator; d = n/2 gives the prime-power variant of the map on a quadratic
extension.  The standing hypothesis is that the level-d trace of b is
nonzero: by additive Hilbert 90, u^{p^d} - u = -b then has no solution, so
the denominator never vanishes and f_b is total on the field.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import backend
from .field import Elem, Field, first_elem_with_trace, frobenius, subfield_elements, trace_rel

HARD_SCAN_CAP = 1 << 32


@dataclass(frozen=True)
class MapSpec:
    """One member of the family: field, parameter b, Frobenius level d."""

    field: Field
    b: Elem
    d: int = 1

    def __post_init__(self):
        if self.b.field != self.field:
            raise ValueError("parameter b must live in the map's field")
        if self.d < 1 or self.field.n % self.d != 0:
            raise ValueError(f"Frobenius level {self.d} must divide n = {self.field.n}")
        if not trace_rel(self.b, self.d):
            raise ValueError(
                "trace hypothesis violated: the level-%d trace of b is zero" % self.d
            )


@dataclass(frozen=True)
class PermReport:
    """Scan verdict. witness is an (x1, x2) pair with x1 != x2, f(x1) = f(x2)."""

    is_permutation: bool
    witness: tuple[Elem, Elem] | None
    evaluations: int


def denominator(spec: MapSpec, x: Elem) -> Elem:
    return frobenius(x, spec.d) - x + spec.b


def eval_f(spec: MapSpec, x: Elem) -> Elem:
    """f_b(x); total on the field thanks to the trace hypothesis."""
    if x.field != spec.field:
        raise ValueError("argument from a different field context")
    return x + denominator(spec, x).inverse()


def is_permutation(spec: MapSpec, scan_cap: int = HARD_SCAN_CAP,
                   backend_name: str | None = None) -> PermReport:
    """Exact bijectivity verdict by a full image scan over element indices.

    The scan is serial and deterministic: the witness is the first collision
    in index-enumeration order, paired with the smallest earlier preimage of
    the repeated value (found by a second pass), so reruns and backends agree
    bit for bit.
    """
    f = spec.field
    cap = min(scan_cap, HARD_SCAN_CAP)
    if f.order > cap:
        raise ValueError(f"field order {f.order} exceeds the scan cap {cap}")
    kern = backend.select(f.p, backend_name)
    ok, witness_idx, evals = kern.perm_scan(
        f.p, f.n, f.modulus, f.frobenius_rows(spec.d), spec.b.coeffs
    )
    witness = None
    if witness_idx is not None:
        witness = (f.element(witness_idx[0]), f.element(witness_idx[1]))
    return PermReport(bool(ok), witness, evals)


def verify_witness(spec: MapSpec, witness: tuple[Elem, Elem]) -> bool:
    """Re-evaluate a collision witness under eval_f."""
    x1, x2 = witness
    return x1 != x2 and eval_f(spec, x1) == eval_f(spec, x2)


def conjugate_b(b: Elem, eps: int, c: Elem) -> Elem:
    """The parameter b1 = eps*(b + c^p - c) with eps = +-1.

    This is the change of parameter under which the map family is equivariant:
    f_b(eps*x + c) = eps * f_{b1}(x) + c pointwise.  The trace transforms as
    Tr(b1) = eps * Tr(b), so permutation behavior only depends on the trace
    value up to sign.
    """
    if eps not in (1, -1):
        raise ValueError("eps must be +1 or -1")
    if c.field != b.field:
        raise ValueError("b and c must share a field context")
    b1 = b + frobenius(c, 1) - c
    return b1 if eps == 1 else -b1


def trace_class_reps(ctx: Field) -> list[Elem]:
    """One parameter per trace class {t, -t}, t in F_p^*.

    For odd p these are the first elements with absolute trace 1 .. (p-1)/2;
    for p = 2 the single trace-1 representative.  Chosen by index scan, so
    deterministic for a given field.
    """
    if ctx.p == 2:
        return [first_elem_with_trace(ctx, 1)]
    return [first_elem_with_trace(ctx, t) for t in range(1, (ctx.p - 1) // 2 + 1)]


def subfield_trace_reps(ctx: Field, d: int) -> list[tuple[Elem, Elem]]:
    """(t, b) pairs: one trace target per sign pair {t, -t} in the order-p^d
    subfield's nonzero elements, with b the first element whose level-d trace
    is t.  Scans the field, so intended for small contexts."""
    pairs = []
    for t in subfield_elements(ctx, d):
        if not t:
            continue
        if (-t).index < t.index:
            continue
        pairs.append((t, first_elem_with_trace(ctx, t, d)))
    return pairs


def difference_value(spec: MapSpec, x: Elem, y: Elem) -> Elem:
    """f_b(x + y) - f_b(x), cross-checked against its closed form.

    With q = p^d and z = x^q - x + b the difference equals
    y * (z^2 + (y^q - y) z + 1 - y^{q-1}) / (z * ((x+y)^q - (x+y) + b)),
    and this routine asserts the two evaluations agree before returning.
    """
    lhs = eval_f(spec, x + y) - eval_f(spec, x)
    z = denominator(spec, x)
    q = spec.field.p ** spec.d
    yq = frobenius(y, spec.d)
    num = y * (z * z + (yq - y) * z + 1 - y ** (q - 1))
    den = z * denominator(spec, x + y)
    rhs = num * den.inverse()
    if lhs != rhs:
        raise RuntimeError("difference identity mismatch (implementation bug)")
    return lhs
