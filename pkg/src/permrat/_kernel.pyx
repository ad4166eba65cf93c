# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan kernels.

Same contracts as permrat._kernel_py; all arithmetic is 64-bit, which is why
the callers route characteristics p >= 2^31 to the pure twin.  Field elements
travel as digit vectors mod p; reduction uses precomputed rows X^{n+k} mod
the field modulus, and inversion is an in-place polynomial extended Euclid.
"""

from libc.stdlib cimport calloc, free, malloc

ctypedef long long i64

BACKEND = "compiled"


cdef inline i64 _inv_scalar(i64 a, i64 p):
    # a in [1, p), p prime
    cdef i64 r0 = p, r1 = a, t0 = 0, t1 = 1, q, tmp
    while r1 != 0:
        q = r0 / r1
        tmp = r0 - q * r1
        r0 = r1
        r1 = tmp
        tmp = t0 - q * t1
        t0 = t1
        t1 = tmp
    t0 = t0 % p
    if t0 < 0:
        t0 += p
    return t0


cdef int _pinv(i64* a, i64* out, i64* modc, i64 p, int n, i64* wk):
    """out = a^{-1} mod the degree-n modulus; a has degree < n.

    wk is scratch of size 4 * (2n + 2).  Returns -1 when a is zero.
    """
    cdef int stride = 2 * n + 2
    cdef i64* r0 = wk
    cdef i64* r1 = wk + stride
    cdef i64* t0 = wk + 2 * stride
    cdef i64* t1 = wk + 3 * stride
    cdef i64* swp
    cdef int i, d0, d1, s
    cdef i64 c, lead_inv, g
    for i in range(stride):
        r0[i] = 0
        r1[i] = 0
        t0[i] = 0
        t1[i] = 0
    for i in range(n + 1):
        r0[i] = modc[i]
    for i in range(n):
        r1[i] = a[i]
    t1[0] = 1
    d0 = n
    d1 = n - 1
    while d1 >= 0 and r1[d1] == 0:
        d1 -= 1
    if d1 < 0:
        return -1
    while d1 > 0:
        lead_inv = _inv_scalar(r1[d1], p)
        while d0 >= d1:
            c = r0[d0] * lead_inv % p
            if c != 0:
                s = d0 - d1
                for i in range(d1 + 1):
                    r0[s + i] = (r0[s + i] - c * r1[i]) % p
                    if r0[s + i] < 0:
                        r0[s + i] += p
                for i in range(stride - s):
                    t0[s + i] = (t0[s + i] - c * t1[i]) % p
                    if t0[s + i] < 0:
                        t0[s + i] += p
            d0 -= 1
            while d0 >= 0 and r0[d0] == 0:
                d0 -= 1
            if d0 < 0:
                break
        swp = r0; r0 = r1; r1 = swp
        swp = t0; t0 = t1; t1 = swp
        s = d0; d0 = d1; d1 = s
    # r1 is a nonzero constant (the modulus is irreducible)
    if r1[0] == 0:
        return -2
    g = _inv_scalar(r1[0], p)
    for i in range(n):
        out[i] = t1[i] * g % p
    return 0


cdef void _pmul_red(i64* a, i64* b, i64* out, i64* tmp, i64* red, i64 p, int n):
    """out = a * b mod the modulus, via schoolbook + reduction rows.

    red holds n - 1 rows of length n: row k is X^{n+k} mod the modulus.
    tmp has size 2n - 1.  Safe when out aliases a or b.
    """
    cdef int i, j, k
    cdef i64 c
    for k in range(2 * n - 1):
        tmp[k] = 0
    for i in range(n):
        c = a[i]
        if c != 0:
            for j in range(n):
                tmp[i + j] = (tmp[i + j] + c * b[j]) % p
    for k in range(2 * n - 2, n - 1, -1):
        c = tmp[k]
        if c != 0:
            for j in range(n):
                tmp[j] = (tmp[j] + c * red[(k - n) * n + j]) % p
    for j in range(n):
        out[j] = tmp[j]


cdef i64* _marshal(seq, int count) except NULL:
    cdef i64* buf = <i64*> malloc(count * sizeof(i64))
    if buf == NULL:
        raise MemoryError()
    cdef int i
    for i in range(count):
        buf[i] = seq[i]
    return buf


def perm_scan(p_obj, n_obj, modulus, frob_rows, b_digits):
    """Exhaustive image scan of f(x) = x + (phi(x) - x + b)^{-1} over F_{p^n}.

    Mirrors the pure kernel: returns (is_permutation, witness, evaluations)
    with the witness as the index pair of the first collision in enumeration
    order.
    """
    cdef i64 p = p_obj
    cdef int n = n_obj
    if p >= (<i64>1) << 31:
        raise ValueError("compiled kernel requires p < 2^31")
    cdef i64 q = 1
    cdef int i, j, k
    for i in range(n):
        q *= p
    flat_frob = [c for row in frob_rows for c in row]
    cdef i64* frob = _marshal(flat_frob, n * n)
    cdef i64* b = _marshal(list(b_digits), n)
    cdef i64* modc = NULL
    cdef i64* wk = NULL
    cdef i64* x = <i64*> calloc(n, sizeof(i64))
    cdef i64* t = <i64*> malloc(n * sizeof(i64))
    cdef i64* w = <i64*> malloc(n * sizeof(i64))
    cdef i64* iv = <i64*> malloc(n * sizeof(i64))
    cdef unsigned char* seen = NULL
    cdef i64 xi, yi, evals = 0, collision = -1, target = -1, v, ci
    cdef int wz
    cdef unsigned char mask
    try:
        if x == NULL or t == NULL or w == NULL or iv == NULL:
            raise MemoryError()
        if n > 1:
            modc = _marshal(list(modulus), n + 1)
            wk = <i64*> malloc(4 * (2 * n + 2) * sizeof(i64))
            if wk == NULL:
                raise MemoryError()
        seen = <unsigned char*> calloc(<size_t>((q >> 3) + 1), 1)
        if seen == NULL:
            raise MemoryError()

        for xi in range(q):
            # phi(x)
            for j in range(n):
                t[j] = 0
            for i in range(n):
                ci = x[i]
                if ci != 0:
                    for j in range(n):
                        t[j] = (t[j] + ci * frob[i * n + j]) % p
            # w = phi(x) - x + b
            wz = 1
            for j in range(n):
                v = (t[j] - x[j] + b[j]) % p
                if v < 0:
                    v += p
                w[j] = v
                if v != 0:
                    wz = 0
            if wz:
                raise ValueError("denominator vanished; trace hypothesis violated")
            if n == 1:
                iv[0] = _inv_scalar(w[0], p)
            else:
                if _pinv(w, iv, modc, p, n, wk) != 0:
                    raise RuntimeError("polynomial inversion failed")
            evals += 1
            yi = 0
            for j in range(n - 1, -1, -1):
                v = x[j] + iv[j]
                if v >= p:
                    v -= p
                yi = yi * p + v
            mask = <unsigned char>(1 << (yi & 7))
            if seen[yi >> 3] & mask:
                collision = xi
                target = yi
                break
            seen[yi >> 3] = seen[yi >> 3] | mask
            for k in range(n):
                x[k] += 1
                if x[k] == p:
                    x[k] = 0
                else:
                    break
        if collision < 0:
            return True, None, evals

        for k in range(n):
            x[k] = 0
        for xi in range(collision):
            for j in range(n):
                t[j] = 0
            for i in range(n):
                ci = x[i]
                if ci != 0:
                    for j in range(n):
                        t[j] = (t[j] + ci * frob[i * n + j]) % p
            for j in range(n):
                v = (t[j] - x[j] + b[j]) % p
                if v < 0:
                    v += p
                w[j] = v
            if n == 1:
                iv[0] = _inv_scalar(w[0], p)
            else:
                if _pinv(w, iv, modc, p, n, wk) != 0:
                    raise RuntimeError("polynomial inversion failed")
            evals += 1
            yi = 0
            for j in range(n - 1, -1, -1):
                v = x[j] + iv[j]
                if v >= p:
                    v -= p
                yi = yi * p + v
            if yi == target:
                return False, (xi, collision), evals
            for k in range(n):
                x[k] += 1
                if x[k] == p:
                    x[k] = 0
                else:
                    break
        raise RuntimeError("collision image lost between passes")
    finally:
        free(frob); free(b); free(x); free(t); free(w); free(iv)
        if modc != NULL:
            free(modc)
        if wk != NULL:
            free(wk)
        if seen != NULL:
            free(seen)


cdef void _ppow(i64* base, i64 e, i64* out, i64* sq, i64* tmp, i64* red,
                i64 p, int n):
    """out = base^e (binary exponentiation).  sq is scratch of size n."""
    cdef int i
    for i in range(n):
        out[i] = 0
        sq[i] = base[i]
    out[0] = 1
    while e != 0:
        if e & 1:
            _pmul_red(out, sq, out, tmp, red, p, n)
        e >>= 1
        if e != 0:
            _pmul_red(sq, sq, sq, tmp, red, p, n)


def count_zeros(p_obj, n_obj, modulus, terms, collect=False):
    """Exact zero count of a sparse bivariate polynomial over F_{p^n} squared.

    Mirrors the pure kernel: rows are collapsed per x into a sparse
    polynomial in y, evaluated over a precomputed power table.
    """
    cdef i64 p = p_obj
    cdef int n = n_obj
    if p >= (<i64>1) << 31:
        raise ValueError("compiled kernel requires p < 2^31")
    cdef i64 q = 1
    cdef int i, j, k
    for i in range(n):
        q *= p

    exps = sorted({it[0] for it in terms} | {it[1] for it in terms})
    cdef int n_a = len(exps)
    pos = {e: k for k, e in enumerate(exps)}
    jslots = sorted({it[1] for it in terms})
    cdef int n_j = len(jslots)
    jpos = {e: k for k, e in enumerate(jslots)}
    if n_a and q * n_a * n * 8 > (<i64>1) << 31:
        raise ValueError("power table would exceed the 2 GiB kernel budget")

    # reduction rows X^{n+k} mod modulus, k = 0 .. n-2 (computed with Python
    # integers; the hot loops below only read them)
    red_rows = []
    if n > 1:
        modl = list(modulus)
        row = [(-modl[i]) % p for i in range(n)]
        for _ in range(n - 1):
            red_rows.append(list(row))
            carry = row[n - 1]
            row = [0] + row[:n - 1]
            for i in range(n):
                row[i] = (row[i] + carry * ((-modl[i]) % p)) % p
    flat_red = [c for row in red_rows for c in row]

    cdef i64* red = NULL
    cdef i64* powers = NULL
    cdef i64* exp_arr = NULL
    cdef i64* term_i = NULL
    cdef i64* term_j = NULL
    cdef i64* term_c = NULL
    cdef i64* j_exp_pos = NULL
    cdef i64* rowc = NULL
    cdef i64* base = NULL
    cdef i64* sq = NULL
    cdef i64* tmp = NULL
    cdef i64* acc = NULL
    cdef int n_t = len(terms)
    cdef i64 e_idx, x_idx, y_idx, count = 0, kk, v
    cdef int a_slot, t_idx, nz, all_zero
    zeros = [] if collect else None
    try:
        if n > 1:
            red = _marshal(flat_red, (n - 1) * n)
        exp_arr = _marshal(exps, n_a) if n_a else <i64*> malloc(sizeof(i64))
        term_i = <i64*> malloc(max(n_t, 1) * sizeof(i64))
        term_j = <i64*> malloc(max(n_t, 1) * sizeof(i64))
        term_c = <i64*> malloc(max(n_t, 1) * n * sizeof(i64))
        j_exp_pos = _marshal([pos[jv] for jv in jslots], n_j) if n_j \
            else <i64*> malloc(sizeof(i64))
        if term_i == NULL or term_j == NULL or term_c == NULL or exp_arr == NULL \
                or j_exp_pos == NULL:
            raise MemoryError()
        for t_idx in range(n_t):
            it = terms[t_idx]
            term_i[t_idx] = pos[it[0]]
            term_j[t_idx] = jpos[it[1]]
            for i in range(n):
                term_c[t_idx * n + i] = it[2][i]
        base = <i64*> malloc(n * sizeof(i64))
        sq = <i64*> malloc(n * sizeof(i64))
        tmp = <i64*> malloc(max(2 * n - 1, 1) * sizeof(i64))
        acc = <i64*> malloc(n * sizeof(i64))
        rowc = <i64*> malloc(max(n_j, 1) * n * sizeof(i64))
        if base == NULL or sq == NULL or tmp == NULL or acc == NULL or rowc == NULL:
            raise MemoryError()
        if n_a:
            powers = <i64*> malloc(q * n_a * n * sizeof(i64))
            if powers == NULL:
                raise MemoryError()
            for e_idx in range(q):
                kk = e_idx
                for i in range(n):
                    base[i] = kk % p
                    kk = kk / p
                for a_slot in range(n_a):
                    _ppow(base, exp_arr[a_slot], powers + (e_idx * n_a + a_slot) * n,
                          sq, tmp, red, p, n)

        for x_idx in range(q):
            for k in range(n_j * n):
                rowc[k] = 0
            for t_idx in range(n_t):
                _pmul_red(term_c + t_idx * n,
                          powers + (x_idx * n_a + term_i[t_idx]) * n,
                          acc, tmp, red, p, n)
                k = <int>term_j[t_idx] * n
                for i in range(n):
                    rowc[k + i] = (rowc[k + i] + acc[i]) % p
            all_zero = 1
            for k in range(n_j * n):
                if rowc[k] != 0:
                    all_zero = 0
                    break
            if all_zero:
                count += q
                if collect:
                    for y_idx in range(q):
                        zeros.append((x_idx, y_idx))
                continue
            for y_idx in range(q):
                for i in range(n):
                    acc[i] = 0
                for j in range(n_j):
                    nz = 0
                    for i in range(n):
                        if rowc[j * n + i] != 0:
                            nz = 1
                            break
                    if nz:
                        _pmul_red(rowc + j * n,
                                  powers + (y_idx * n_a + j_exp_pos[j]) * n,
                                  sq, tmp, red, p, n)
                        for i in range(n):
                            acc[i] = (acc[i] + sq[i]) % p
                nz = 0
                for i in range(n):
                    if acc[i] != 0:
                        nz = 1
                        break
                if nz == 0:
                    count += 1
                    if collect:
                        zeros.append((x_idx, y_idx))
        return count, zeros
    finally:
        if red != NULL:
            free(red)
        if powers != NULL:
            free(powers)
        free(exp_arr); free(term_i); free(term_j); free(term_c); free(j_exp_pos)
        free(base); free(sq); free(tmp); free(acc); free(rowc)
