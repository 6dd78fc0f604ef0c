"""Exact 4x4 matrix checks of the quaternionic and complex-structure identities.

Everything here is flat linear algebra over Gaussian rationals: the left
multiplication matrices I_L, J_L, K_L of the imaginary quaternion units,
the complex symplectic form Omega = omega_J + i*omega_K, the zero-divisor
identity (J + iK)(1 + iI) = 0, and the holomorphic coordinates
w = z1 - i*zb2, z = z2 + i*zb1 in which Omega = dw wedge dz.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import List, Sequence, Tuple

from .scalars import Qi, QI_I, QI_ONE, QI_ZERO

Matrix4 = Tuple[Tuple[Qi, ...], ...]


def _mat(rows) -> Matrix4:
    return tuple(tuple(Qi._coerce(x) for x in row) for row in rows)


def mat_mul(a: Matrix4, b: Matrix4) -> Matrix4:
    n = len(a)
    return tuple(
        tuple(
            sum((a[i][k] * b[k][j] for k in range(n)), QI_ZERO) for j in range(n)
        )
        for i in range(n)
    )


def mat_add(a: Matrix4, b: Matrix4) -> Matrix4:
    return tuple(tuple(x + y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def mat_scale(a: Matrix4, c) -> Matrix4:
    c = Qi._coerce(c)
    return tuple(tuple(x * c for x in row) for row in a)


def mat_sub(a: Matrix4, b: Matrix4) -> Matrix4:
    return mat_add(a, mat_scale(b, Qi(-1)))


def mat_eq(a: Matrix4, b: Matrix4) -> bool:
    return all(x == y for ra, rb in zip(a, b) for x, y in zip(ra, rb))

def mat_is_zero(a: Matrix4) -> bool:
    return all(x.is_zero() for row in a for x in row)


IDENTITY4 = _mat([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
ZERO4 = _mat([[0] * 4] * 4)

# Left multiplication by I, J, K on q = (q0, q1, q2, q3):
# I_L = -1 (x) eps, J_L = -eps (x) sigma3, K_L = -eps (x) sigma1
I_LEFT = _mat([[0, -1, 0, 0], [1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
J_LEFT = _mat([[0, 0, -1, 0], [0, 0, 0, 1], [1, 0, 0, 0], [0, -1, 0, 0]])
K_LEFT = _mat([[0, 0, 0, -1], [0, 0, -1, 0], [0, 1, 0, 0], [1, 0, 0, 0]])

# Form matrices in the (dz1, dz2, dzb1, dzb2) component basis:
# omega_J = dz1^dz2 - dzb1^dzb2 -> sigma3 (x) eps
# omega_K = dz1^dzb1 + dz2^dzb2 -> eps (x) 1
J_FORM = _mat([[0, 1, 0, 0], [-1, 0, 0, 0], [0, 0, 0, -1], [0, 0, 1, 0]])
K_FORM = _mat([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])


def quaternion_left_matrix(q: Sequence) -> Matrix4:
    """Left multiplication by q = q0 + q1*I + q2*J + q3*K."""
    q0, q1, q2, q3 = (Qi._coerce(x) for x in q)
    m = mat_scale(IDENTITY4, q0)
    m = mat_add(m, mat_scale(I_LEFT, q1))
    m = mat_add(m, mat_scale(J_LEFT, q2))
    m = mat_add(m, mat_scale(K_LEFT, q3))
    return m


def quaternion_reps_check(samples: int = 10, seed: int = 0) -> dict:
    """Verify I^2 = J^2 = K^2 = IJK = -1, the su(2) commutators, and |q|^2."""
    minus1 = mat_scale(IDENTITY4, Qi(-1))
    results = {
        "I_squared": mat_eq(mat_mul(I_LEFT, I_LEFT), minus1),
        "J_squared": mat_eq(mat_mul(J_LEFT, J_LEFT), minus1),
        "K_squared": mat_eq(mat_mul(K_LEFT, K_LEFT), minus1),
        "IJK": mat_eq(mat_mul(mat_mul(I_LEFT, J_LEFT), K_LEFT), minus1),
        "IJ_is_K": mat_eq(mat_mul(I_LEFT, J_LEFT), K_LEFT),
        "commutator_IJ_2K": mat_eq(
            mat_sub(mat_mul(I_LEFT, J_LEFT), mat_mul(J_LEFT, I_LEFT)),
            mat_scale(K_LEFT, Qi(2)),
        ),
    }
    rng = random.Random(seed)
    norm_ok = True
    for _ in range(samples):
        q = [Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(4)]
        qc = [q[0], -q[1], -q[2], -q[3]]
        norm = sum(x * x for x in q)
        lq, lqc = quaternion_left_matrix(q), quaternion_left_matrix(qc)
        expected = mat_scale(IDENTITY4, Qi(norm))
        if not (
            mat_eq(mat_mul(lq, lqc), expected) and mat_eq(mat_mul(lqc, lq), expected)
        ):
            norm_ok = False
    results["norm_law"] = norm_ok
    return results


def zero_divisor_product() -> Matrix4:
    """(J + iK)(1 + iI) with the left-multiplication matrices; exactly zero."""
    j_plus_ik = mat_add(J_LEFT, mat_scale(K_LEFT, QI_I))
    one_plus_ii = mat_add(IDENTITY4, mat_scale(I_LEFT, QI_I))
    return mat_mul(j_plus_ik, one_plus_ii)


def complex_symplectic_form(x: Sequence, y: Sequence) -> Qi:
    """Omega(X, Y) = omega_J(X, Y) + i*omega_K(X, Y) on real tangent vectors.

    Vectors are components in the real basis (q0..q3); the form matrix is
    J_L + i*K_L (Euclidean metric turns the complex structures into forms).
    """
    x = [Qi._coerce(v) for v in x]
    y = [Qi._coerce(v) for v in y]
    omega = mat_add(J_LEFT, mat_scale(K_LEFT, QI_I))
    total = QI_ZERO
    for i in range(4):
        for j in range(4):
            total = total + x[i] * omega[i][j] * y[j]
    return total


def apply_matrix(m: Matrix4, v: Sequence) -> List[Qi]:
    v = [Qi._coerce(x) for x in v]
    return [sum((m[i][j] * v[j] for j in range(4)), QI_ZERO) for i in range(4)]


def holomorphicity_defect(x: Sequence, y: Sequence) -> Qi:
    """Omega(X, (1 + iI)Y); zero for all vectors by the zero-divisor identity."""
    one_plus_ii = mat_add(IDENTITY4, mat_scale(I_LEFT, QI_I))
    return complex_symplectic_form(x, apply_matrix(one_plus_ii, y))


def _form_value(matrix: Matrix4, x: Sequence, y: Sequence) -> Qi:
    x = [Qi._coerce(v) for v in x]
    y = [Qi._coerce(v) for v in y]
    total = QI_ZERO
    for i in range(4):
        for j in range(4):
            total = total + x[i] * matrix[i][j] * y[j]
    return total


def omega_zchart(x: Sequence, y: Sequence) -> Qi:
    """Omega on vectors with components in the (z1, z2, zb1, zb2) basis."""
    omega = mat_add(J_FORM, mat_scale(K_FORM, QI_I))
    return _form_value(omega, x, y)


def omega_wz(x: Sequence, y: Sequence) -> Qi:
    """Omega = dw wedge dz for w = z1 - i*zb2, z = z2 + i*zb1.

    Arguments carry components in the (z1, z2, zb1, zb2) basis.
    """
    x = [Qi._coerce(v) for v in x]
    y = [Qi._coerce(v) for v in y]

    def dw(v):
        return v[0] - QI_I * v[3]

    def dz(v):
        return v[1] + QI_I * v[2]

    return dw(x) * dz(y) - dz(x) * dw(y)


def holomorphic_coordinates_defect(x: Sequence, y: Sequence) -> Qi:
    """omega_zchart(X, Y) - omega_wz(X, Y); exactly zero."""
    return omega_zchart(x, y) - omega_wz(x, y)


def run_all_checks(samples: int = 25, seed: int = 0) -> dict:
    """Full verification suite; every value is an exact boolean."""
    rng = random.Random(seed)

    def rand_vec():
        return [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)]

    checks = dict(quaternion_reps_check(samples=samples, seed=seed))
    checks["zero_divisor_product"] = mat_is_zero(zero_divisor_product())
    checks["factors_nonzero"] = not mat_is_zero(
        mat_add(J_LEFT, mat_scale(K_LEFT, QI_I))
    ) and not mat_is_zero(mat_add(IDENTITY4, mat_scale(I_LEFT, QI_I)))
    checks["holomorphicity"] = all(
        holomorphicity_defect(rand_vec(), rand_vec()).is_zero()
        for _ in range(samples)
    )
    checks["wz_coordinates"] = all(
        holomorphic_coordinates_defect(rand_vec(), rand_vec()).is_zero()
        for _ in range(samples)
    )
    antisym = True
    for _ in range(samples):
        x, y = rand_vec(), rand_vec()
        if not (omega_zchart(x, y) + omega_zchart(y, x)).is_zero():
            antisym = False
        if not omega_zchart(x, x).is_zero():
            antisym = False
    checks["omega_antisymmetric"] = antisym
    return checks
