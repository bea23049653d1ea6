"""Hot numeric kernels for the infinite-dimension effective energy surfaces.

The kernels are built twice by a small factory: once as plain Python/numpy
and once numba-compiled.  The module-level names point at the compiled
versions unless ``DIMINTERP_DISABLE_NUMBA=1`` is set; the pure versions stay
available as ``PURE`` for the benchmark harness.  Infeasible geometries
(non positive-definite cosine matrices, coincident electrons, degenerate
dihedral angles) return ``inf`` so that minimizers treat them as forbidden
without branching on exceptions.
"""

from types import SimpleNamespace

import numpy as np

from ._accel import NUMBA_ENABLED

_BAD = np.inf


def _build(jit):
    if jit:
        from numba import njit

        dec = njit(cache=True)
    else:
        def dec(f):
            return f

    @dec
    def det3(a00, a01, a02, a10, a11, a12, a20, a21, a22):
        return (
            a00 * (a11 * a22 - a12 * a21)
            - a01 * (a10 * a22 - a12 * a20)
            + a02 * (a10 * a21 - a11 * a20)
        )

    @dec
    def det_small(G):
        # closed-form determinants, n <= 4
        n = G.shape[0]
        if n == 1:
            return G[0, 0]
        if n == 2:
            return G[0, 0] * G[1, 1] - G[0, 1] * G[1, 0]
        if n == 3:
            return det3(G[0, 0], G[0, 1], G[0, 2],
                        G[1, 0], G[1, 1], G[1, 2],
                        G[2, 0], G[2, 1], G[2, 2])
        d = 0.0
        sign = 1.0
        for c in range(4):
            cols = np.empty(3, dtype=np.int64)
            jj = 0
            for j in range(4):
                if j != c:
                    cols[jj] = j
                    jj += 1
            d += sign * G[0, c] * det3(
                G[1, cols[0]], G[1, cols[1]], G[1, cols[2]],
                G[2, cols[0]], G[2, cols[1]], G[2, cols[2]],
                G[3, cols[0]], G[3, cols[1]], G[3, cols[2]])
            sign = -sign
        return d

    @dec
    def principal_minor(G, i):
        n = G.shape[0]
        M = np.empty((n - 1, n - 1))
        ii = 0
        for a in range(n):
            if a == i:
                continue
            jj = 0
            for b in range(n):
                if b == i:
                    continue
                M[ii, jj] = G[a, b]
                jj += 1
            ii += 1
        return det_small(M)

    @dec
    def is_pos_def(G):
        # Sylvester's criterion on leading principal minors
        n = G.shape[0]
        for k in range(1, n + 1):
            if det_small(np.ascontiguousarray(G[:k, :k])) <= 0.0:
                return False
        return True

    @dec
    def gram_factor_poly(G):
        # polynomial stand-in for the Gramian minor/determinant ratio:
        # one factor shared by all electrons, pair squares minus twice the
        # triangle products, plus four-body cycle/partition corrections
        n = G.shape[0]
        v = 1.0
        for i in range(n):
            for j in range(i + 1, n):
                v += G[i, j] * G[i, j]
        for i in range(n):
            for j in range(i + 1, n):
                for k in range(j + 1, n):
                    v -= 2.0 * G[i, j] * G[j, k] * G[i, k]
        if n == 4:
            v += 2.0 * G[0, 1] * G[1, 2] * G[2, 3] * G[3, 0]
            v += 2.0 * G[0, 1] * G[1, 3] * G[3, 2] * G[2, 0]
            v += 2.0 * G[0, 2] * G[2, 1] * G[1, 3] * G[3, 0]
            v -= G[0, 1] ** 2 * G[2, 3] ** 2
            v -= G[0, 2] ** 2 * G[1, 3] ** 2
            v -= G[0, 3] ** 2 * G[1, 2] ** 2
        return v

    @dec
    def atom_energy(r, G, n2, lam, use_poly):
        # effective N-electron atom energy in the infinite-dimension limit;
        # r radii, G unit-diagonal cosine matrix, n2 squared shell numbers
        n = r.shape[0]
        for i in range(n):
            if r[i] <= 0.0:
                return _BAD
        if not is_pos_def(G):
            return _BAD
        e = 0.0
        if use_poly:
            fac = gram_factor_poly(G)
            if fac <= 0.0:
                return _BAD
            for i in range(n):
                e += 0.5 * n2[i] / (r[i] * r[i]) * fac - 1.0 / r[i]
        else:
            detG = det_small(G)
            if detG <= 1e-300:
                return _BAD
            for i in range(n):
                ratio = principal_minor(G, i) / detG
                if ratio <= 0.0:
                    return _BAD
                e += 0.5 * n2[i] / (r[i] * r[i]) * ratio - 1.0 / r[i]
        for i in range(n):
            for j in range(i + 1, n):
                d2 = r[i] * r[i] + r[j] * r[j] - 2.0 * r[i] * r[j] * G[i, j]
                if d2 <= 1e-14:
                    return _BAD
                e += lam / np.sqrt(d2)
        return e

    @dec
    def h2_energy(rho1, rho2, z1, z2, cphi, a):
        # infinite-dimension H2 electronic energy, cylindrical coordinates;
        # unit-charge nuclei at -a and +a on the axis, cphi = cos(dihedral)
        if rho1 <= 0.0 or rho2 <= 0.0:
            return _BAD
        s2 = 1.0 - cphi * cphi
        if s2 < 1e-14:
            return _BAD
        e = 0.5 * (1.0 / (rho1 * rho1) + 1.0 / (rho2 * rho2)) / s2
        e -= 1.0 / np.sqrt(rho1 * rho1 + (z1 + a) ** 2)
        e -= 1.0 / np.sqrt(rho1 * rho1 + (z1 - a) ** 2)
        e -= 1.0 / np.sqrt(rho2 * rho2 + (z2 + a) ** 2)
        e -= 1.0 / np.sqrt(rho2 * rho2 + (z2 - a) ** 2)
        d2 = (z1 - z2) ** 2 + rho1 * rho1 + rho2 * rho2 - 2.0 * rho1 * rho2 * cphi
        if d2 <= 1e-14:
            return _BAD
        return e + 1.0 / np.sqrt(d2)

    @dec
    def h2_energy_rescaled(rho, z, cphi, a):
        # rescaled antisymmetric form with explicit 9/4, 3, 3/2 prefactors;
        # its minimum equals the plain energy minimized at 2/3 the distance
        if rho <= 0.0:
            return _BAD
        s2 = 1.0 - cphi * cphi
        if s2 < 1e-14:
            return _BAD
        e = 2.25 / (rho * rho * s2)
        e -= 3.0 / np.sqrt(rho * rho + (z + a) ** 2)
        e -= 3.0 / np.sqrt(rho * rho + (z - a) ** 2)
        d2 = 4.0 * z * z + 2.0 * rho * rho * (1.0 - cphi)
        if d2 <= 1e-14:
            return _BAD
        return e + 1.5 / np.sqrt(d2)

    return SimpleNamespace(
        det_small=det_small,
        principal_minor=principal_minor,
        is_pos_def=is_pos_def,
        gram_factor_poly=gram_factor_poly,
        atom_energy=atom_energy,
        h2_energy=h2_energy,
        h2_energy_rescaled=h2_energy_rescaled,
    )


PURE = _build(False)
ACTIVE = _build(True) if NUMBA_ENABLED else PURE

det_small = ACTIVE.det_small
principal_minor = ACTIVE.principal_minor
is_pos_def = ACTIVE.is_pos_def
gram_factor_poly = ACTIVE.gram_factor_poly
atom_energy = ACTIVE.atom_energy
h2_energy = ACTIVE.h2_energy
h2_energy_rescaled = ACTIVE.h2_energy_rescaled
