"""Cross-checks: the compiled kernels must agree bit for bit with the pure twin."""

import pytest

from permrat import backend
from permrat.curves import BiPoly, collision_curve, criterion_sextic, symmetric_quartic
from permrat.field import make_field
from permrat.maps import MapSpec, is_permutation

needs_compiled = pytest.mark.skipif(
    not backend.have_compiled(), reason="compiled kernel not built"
)


def _scan_pair(p, n, b_index, d=1):
    ctx = make_field(p, n)
    spec = MapSpec(ctx, ctx.element(b_index), d)
    rc = is_permutation(spec, backend_name="compiled")
    rp = is_permutation(spec, backend_name="pure")
    return rc, rp


@needs_compiled
@pytest.mark.parametrize("p,n,b_index,d", [
    (5, 2, 1, 1),
    (5, 2, 3, 1),
    (3, 4, 1, 1),
    (5, 3, 2, 1),
    (7, 2, 1, 1),
    (3, 4, 5, 2),
    (2, 5, 1, 1),
])
def test_perm_scan_backends_agree(p, n, b_index, d):
    rc, rp = _scan_pair(p, n, b_index, d)
    assert rc.is_permutation == rp.is_permutation
    assert rc.evaluations == rp.evaluations
    if rc.witness is None:
        assert rp.witness is None
    else:
        assert [e.index for e in rc.witness] == [e.index for e in rp.witness]


@needs_compiled
def test_count_backends_agree_prime_and_extension():
    polys = [
        criterion_sextic(make_field(13, 1), 5),
        symmetric_quartic(make_field(13, 1), 5),
        BiPoly(make_field(7, 1), {}),
        BiPoly(make_field(7, 1), {(0, 0): 3}),
    ]
    f52 = make_field(5, 2)
    polys.append(collision_curve(f52, f52.from_int(3)))
    for poly in polys:
        f = poly.field
        terms = [(i, j, poly.terms[(i, j)].coeffs) for (i, j) in sorted(poly.terms)]
        comp = backend.get_backend("compiled").count_zeros(f.p, f.n, f.modulus, terms, True)
        pure = backend.get_backend("pure").count_zeros(f.p, f.n, f.modulus, terms, True)
        assert comp == pure


@needs_compiled
def test_compiled_refuses_huge_characteristic():
    kern = backend.get_backend("compiled")
    with pytest.raises(ValueError):
        kern.perm_scan(1 << 32, 1, None, ((1,),), (1,))


def test_select_falls_back_above_compiled_limit():
    kern = backend.select(1 << 32)
    assert kern.BACKEND == "pure"


def test_unknown_backend_name_rejected():
    with pytest.raises(ValueError):
        backend.get_backend("numpy")
