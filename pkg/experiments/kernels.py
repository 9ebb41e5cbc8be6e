"""
Compiled kernels for the exhaustive and sampling engines.

Matrices are int64 arrays: (rows, cols) over Z/p^k or (rows, cols, d) digit tensors over
R_k = (Z/p^k)[t]/(P). Every residue stays below KERNEL_MAX_MODULUS = 2^31 so a product of
two residues fits a signed 64-bit word. An SNF exponent list d_1 <= ... <= d_n is packed
into the integer code sum_i d_i (k+1)^i.
"""
import numpy as np
from numba import njit


@njit(cache=True)
def _mod(a, m):
    r = a % m
    if r < 0:
        r += m
    return r


@njit(cache=True)
def ring_mul(x, y, rel, d, m, buf, out):
    """out = x * y in (Z/m)[t]/(t^d + rel); out may alias x or y."""
    if d == 1:
        out[0] = (x[0] * y[0]) % m
        return
    for i in range(2 * d - 1):
        buf[i] = 0
    for i in range(d):
        if x[i] == 0:
            continue
        for j in range(d):
            buf[i + j] = (buf[i + j] + (x[i] * y[j]) % m) % m
    for deg in range(2 * d - 2, d - 1, -1):
        c = buf[deg]
        if c != 0:
            for i in range(d):
                buf[deg - d + i] = _mod(buf[deg - d + i] - (c * rel[i]) % m, m)
    for i in range(d):
        out[i] = buf[i]


@njit(cache=True)
def valuation(x, d, p, k):
    best = k
    for i in range(d):
        c = x[i]
        if c != 0:
            v = 0
            while c % p == 0 and v < k:
                c //= p
                v += 1
            if v < best:
                best = v
    return best


@njit(cache=True)
def unit_inverse(x, rel, relp, d, p, k, m, scratch, out):
    """
    Inverse of a unit: x^{q-2} in F_q, then Newton steps y <- y (2 - x y) up to precision k.

    scratch needs 4 rows of length >= 2d - 1.
    """
    buf = scratch[0]
    base = scratch[1]
    tmp = scratch[2]
    for i in range(d):
        base[i] = x[i] % p
        out[i] = 0
    out[0] = 1
    e = p ** d - 2
    while e > 0:
        if e & 1:
            ring_mul(out, base, relp, d, p, buf, out)
        ring_mul(base, base, relp, d, p, buf, base)
        e >>= 1
    precision = 1
    while precision < k:
        ring_mul(x, out, rel, d, m, buf, tmp)
        for i in range(d):
            tmp[i] = _mod(-tmp[i], m)
        tmp[0] = (tmp[0] + 2) % m
        ring_mul(out, tmp, rel, d, m, buf, out)
        precision *= 2


@njit(cache=True)
def snf_exponents(a, d, rel, relp, p, k, m, scratch, exps):
    """
    SNF exponents of the n x n matrix a (n, n, >= d), destroyed in place.

    Column clearing only changes the pivot row, which later stages never read, so it is skipped.
    """
    n = a.shape[0]
    unit = scratch[3]
    uinv = scratch[4]
    coef = scratch[5]
    prod = scratch[6]
    buf = scratch[0]
    for s in range(n):
        best = k
        bi = -1
        bj = -1
        for i in range(s, n):
            for j in range(s, n):
                v = valuation(a[i, j], d, p, k)
                if v < best:
                    best = v
                    bi = i
                    bj = j
                    if v == 0:
                        break
            if best == 0:
                break
        if bi < 0:
            for t in range(s, n):
                exps[t] = k
            return
        if bi != s:
            for j in range(s, n):
                for c in range(d):
                    tmpv = a[s, j, c]
                    a[s, j, c] = a[bi, j, c]
                    a[bi, j, c] = tmpv
        if bj != s:
            for i in range(s, n):
                for c in range(d):
                    tmpv = a[i, s, c]
                    a[i, s, c] = a[i, bj, c]
                    a[i, bj, c] = tmpv
        pv = p ** best
        for c in range(d):
            unit[c] = a[s, s, c] // pv
        unit_inverse(unit, rel, relp, d, p, k, m, scratch, uinv)
        for r in range(s + 1, n):
            nonzero = False
            for c in range(d):
                if a[r, s, c] != 0:
                    nonzero = True
            if not nonzero:
                continue
            for c in range(d):
                coef[c] = a[r, s, c] // pv
            ring_mul(coef, uinv, rel, d, m, buf, coef)
            for j in range(s, n):
                ring_mul(coef, a[s, j], rel, d, m, buf, prod)
                for c in range(d):
                    a[r, j, c] = _mod(a[r, j, c] - prod[c], m)
        exps[s] = best


@njit(cache=True)
def exponent_code(exps, k):
    code = 0
    scale = 1
    for i in range(exps.shape[0]):
        code += exps[i] * scale
        scale *= k + 1
    return code


@njit(cache=True)
def _scratch(dmax):
    return np.zeros((7, 2 * dmax), dtype=np.int64)


@njit(cache=True)
def lee_joint_codes(mats, p, k, rels, relps, tbars, degs, targets, short_circuit, codes):
    """
    For each X in mats (B, n, n) over Z/p^k and each polynomial j, the SNF code of X - t I over R_k.

    With short_circuit, polynomials after the first whose code differs from targets[j] are
    left at -1.
    """
    count, n = mats.shape[0], mats.shape[1]
    m = p ** k
    dmax = rels.shape[1]
    work = np.zeros((n, n, dmax), dtype=np.int64)
    scratch = _scratch(dmax)
    exps = np.zeros(n, dtype=np.int64)
    for b in range(count):
        for j in range(degs.shape[0]):
            codes[b, j] = -1
        for j in range(degs.shape[0]):
            d = degs[j]
            for r in range(n):
                for c in range(n):
                    work[r, c, 0] = mats[b, r, c]
                    for t in range(1, d):
                        work[r, c, t] = 0
                for t in range(d):
                    work[r, r, t] = _mod(work[r, r, t] - tbars[j, t], m)
            snf_exponents(work, d, rels[j], relps[j], p, k, m, scratch, exps)
            codes[b, j] = exponent_code(exps, k)
            if short_circuit and codes[b, j] != targets[j]:
                break


@njit(cache=True)
def group_codes(mats, p, k, coeffs, degs, codes):
    """SNF code of P_j(X) over Z/p^k for each X in mats (B, n, n); coeffs holds a_0..a_{d-1} mod p^k."""
    count, n = mats.shape[0], mats.shape[1]
    m = p ** k
    acc = np.zeros((n, n, 1), dtype=np.int64)
    nxt = np.zeros((n, n), dtype=np.int64)
    scratch = _scratch(1)
    rel = np.zeros(1, dtype=np.int64)
    exps = np.zeros(n, dtype=np.int64)
    for b in range(count):
        for j in range(degs.shape[0]):
            # Horner: acc = I; acc = acc X + a_i I
            for r in range(n):
                for c in range(n):
                    acc[r, c, 0] = 1 if r == c else 0
            for i in range(degs[j] - 1, -1, -1):
                for r in range(n):
                    for c in range(n):
                        s = 0
                        for t in range(n):
                            s = (s + acc[r, t, 0] * mats[b, t, c]) % m
                        nxt[r, c] = s
                for r in range(n):
                    for c in range(n):
                        acc[r, c, 0] = nxt[r, c]
                    acc[r, r, 0] = (acc[r, r, 0] + coeffs[j, i]) % m
            snf_exponents(acc, 1, rel, rel, p, k, m, scratch, exps)
            codes[b, j] = exponent_code(exps, k)


@njit(cache=True)
def shifted_ring_codes(mats, p, k, rel, relp, shift, codes):
    """SNF code of X - shift I for each X in mats (B, n, n, d) over R_k."""
    count, n, d = mats.shape[0], mats.shape[1], mats.shape[3]
    m = p ** k
    work = np.zeros((n, n, d), dtype=np.int64)
    scratch = _scratch(d)
    exps = np.zeros(n, dtype=np.int64)
    for b in range(count):
        for r in range(n):
            for c in range(n):
                for t in range(d):
                    work[r, c, t] = mats[b, r, c, t]
            for t in range(d):
                work[r, r, t] = _mod(work[r, r, t] - shift[t], m)
        snf_exponents(work, d, rel, relp, p, k, m, scratch, exps)
        codes[b] = exponent_code(exps, k)
