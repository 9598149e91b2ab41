# cython: language_level=3
# cython: boundscheck=False
# cython: wraparound=False
"""Compiled dense-term kernels.

Mirror of _kernel_py: same functions, same semantics, bit-for-bit equal
results (coefficients stay exact Python Fractions; only the monomial and
dict bookkeeping is compiled).  Keep the two files in sync.
"""

GREVLEX = 0
LEX = 1
BLOCK = 2


cpdef tuple mono_mul(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef list out = [0] * n
    for i in range(n):
        out[i] = (<object> a[i]) + (<object> b[i])
    return tuple(out)


cpdef mono_div(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y, d
    cdef list out = [0] * n
    for i in range(n):
        x = a[i]
        y = b[i]
        d = x - y
        if d < 0:
            return None
        out[i] = d
    return tuple(out)


cpdef tuple mono_lcm(tuple a, tuple b):
    cdef Py_ssize_t i, n = len(a)
    cdef long x, y
    cdef list out = [0] * n
    for i in range(n):
        x = a[i]
        y = b[i]
        out[i] = x if x >= y else y
    return tuple(out)


cpdef long mono_deg(tuple a):
    cdef Py_ssize_t i
    cdef long total = 0
    for i in range(len(a)):
        total += <long> a[i]
    return total


cdef int _grevlex_cmp(tuple a, tuple b, Py_ssize_t lo, Py_ssize_t hi):
    cdef Py_ssize_t i
    cdef long da = 0, db = 0
    for i in range(lo, hi):
        da += <long> a[i]
        db += <long> b[i]
    if da != db:
        return 1 if da > db else -1
    for i in range(hi - 1, lo - 1, -1):
        if <long> a[i] != <long> b[i]:
            return 1 if <long> a[i] < <long> b[i] else -1
    return 0


cpdef int mono_cmp(tuple a, tuple b, int kind, int split):
    cdef Py_ssize_t i, n = len(a)
    cdef int c
    if kind == 1:  # LEX
        for i in range(n):
            if <long> a[i] != <long> b[i]:
                return 1 if <long> a[i] > <long> b[i] else -1
        return 0
    if kind == 0:  # GREVLEX
        return _grevlex_cmp(a, b, 0, n)
    c = _grevlex_cmp(a, b, 0, split)
    if c:
        return c
    return _grevlex_cmp(a, b, split, n)


cpdef tuple lead_term(dict terms, int kind, int split):
    cdef tuple best = None
    cdef object coeff = None
    cdef tuple m
    cdef object c
    for m, c in terms.items():
        if best is None or mono_cmp(m, best, kind, split) > 0:
            best = m
            coeff = c
    return best, coeff


cpdef dict add_scaled(dict a, dict b, object c):
    """a + c*b with zero terms dropped.  c must be nonzero."""
    cdef dict out = dict(a)
    cdef tuple m
    cdef object cb, v
    for m, cb in b.items():
        v = out.get(m)
        if v is None:
            out[m] = c * cb
        else:
            v = v + c * cb
            if v:
                out[m] = v
            else:
                del out[m]
    return out


cpdef dict mul_terms(dict a, dict b, int cap_index=-1, long cap=0):
    """a * b; drops product monomials whose cap_index slot exceeds cap."""
    cdef dict out = {}
    cdef tuple ma, mb, m
    cdef object ca, cb, v
    for ma, ca in a.items():
        for mb, cb in b.items():
            if cap_index >= 0 and (<long> ma[cap_index]) + (<long> mb[cap_index]) > cap:
                continue
            m = mono_mul(ma, mb)
            v = out.get(m)
            if v is None:
                out[m] = ca * cb
            else:
                v = v + ca * cb
                if v:
                    out[m] = v
                else:
                    del out[m]
    return out


cpdef dict term_mul(object coeff, tuple mono, dict g):
    """coeff * x^mono * g for nonzero coeff."""
    cdef dict out = {}
    cdef tuple m
    cdef object c
    for m, c in g.items():
        out[mono_mul(mono, m)] = coeff * c
    return out


cpdef dict normal_form(dict p, list gens, list leads, list lcs, int kind, int split):
    """Complete reduction of p modulo gens (leads/lcs: their lead data)."""
    cdef dict work = dict(p)
    cdef dict tail = {}
    cdef Py_ssize_t i, ngens = len(gens)
    cdef tuple lm, q, mg, key
    cdef object lc, s, cg, v, nv
    cdef dict g
    cdef bint reduced
    while work:
        lm, lc = lead_term(work, kind, split)
        reduced = False
        for i in range(ngens):
            q = mono_div(lm, <tuple> leads[i])
            if q is not None:
                s = lc / (<object> lcs[i])
                g = <dict> gens[i]
                for mg, cg in g.items():
                    key = mono_mul(q, mg)
                    v = work.get(key)
                    if v is None:
                        nv = -s * cg
                        if nv:
                            work[key] = nv
                    else:
                        nv = v - s * cg
                        if nv:
                            work[key] = nv
                        else:
                            del work[key]
                reduced = True
                break
        if not reduced:
            tail[lm] = lc
            del work[lm]
    return tail
