"""Smoke tests for the loqs python bindings."""

import cmath
import math

import loqs


def test_permanent():
    ident = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert abs(loqs.permanent(ident) - 1.0) < 1e-12
    ones = [[1, 1], [1, 1]]
    assert abs(loqs.permanent(ones) - 2.0) < 1e-12
    assert abs(loqs.permanent_definitional(ones) - 2.0) < 1e-12
    assert abs(loqs.permanent_laplace(ones) - 2.0) < 1e-12


def test_qft_and_unitarity():
    v = loqs.qft_matrix(4)
    assert loqs.unitarity_residual(v) < 1e-12


def test_haar_determinism():
    u1 = loqs.haar_unitary(4, seed=11)
    u2 = loqs.haar_unitary(4, seed=11)
    for a, b in zip(u1, u2):
        for x, y in zip(a, b):
            assert x == y
    assert loqs.unitarity_residual(u1) < 1e-12


def test_hong_ou_mandel():
    s = 1 / math.sqrt(2)
    bs = [[s, 1j * s], [1j * s, s]]
    assert abs(loqs.amplitude(bs, [1, 1], [1, 1])) < 1e-12


def test_distribution_and_sampling():
    u = loqs.haar_unitary(3, seed=5)
    entries = loqs.output_distribution(u, [1, 1, 0])
    total = sum(p for _, p in entries)
    assert abs(total - 1.0) < 1e-9
    draws = loqs.sample(u, [1, 1, 0], 50, seed=3)
    assert len(draws) == 50
    assert all(sum(d) == 2 for d in draws)
    assert draws == loqs.sample(u, [1, 1, 0], 50, seed=3)


def test_reck_roundtrip():
    u = loqs.haar_unitary(5, seed=21)
    dec = loqs.reck_decompose(u)
    back = loqs.recompose(dec)
    worst = max(
        abs(back[i][j] - u[i][j]) for i in range(5) for j in range(5)
    )
    assert worst < 1e-10


def test_metrology_closed_forms():
    assert abs(loqs.mordor_delta_phi_small_angle(2) - 0.5) < 1e-12
    assert abs(loqs.qufti_delta_phi(2) - 0.5) < 1e-12
    assert abs(loqs.mordor_coincidence(2, 0.4) - math.cos(0.4) ** 2) < 1e-12
    u = loqs.mordor_unitary(4, 0.3)
    assert loqs.unitarity_residual(u) < 1e-10
    assert abs(loqs.efficiency(10, 0.42, 0.98) - 0.00014) < 1e-5


def test_variants():
    c = loqs.coherent_coefficients(0.0, 4)
    assert abs(c[0] - 1.0) < 1e-12
    sv = loqs.squeezed_vacuum_coefficients(0.5, 0.0, 9)
    assert all(abs(sv[n]) == 0.0 for n in range(1, 10, 2))
    assert abs(loqs.spacs_wigner(0.0, 0.0) + 2 / math.pi) < 1e-12
    assert abs(loqs.passv_normalization(3, 0.0) - 1.0) < 1e-12
    o = loqs.haar_orthogonal(2, seed=9)
    base = loqs.passv_parity_distribution(o, 1, 0.0, 0.0, 12)
    other = loqs.passv_parity_distribution(o, 1, 0.3, 0.0, 12)
    for (s1, p1), (s2, p2) in zip(base, other):
        assert s1 == s2
        assert abs(p1 - p2) < 1e-6


def test_displacement():
    u = loqs.haar_unitary(3, seed=2)
    alphas = [1.0 + 0.5j, -0.2j, 0.7]
    betas = loqs.displace_through_network(u, alphas)
    assert abs(
        sum(abs(b) ** 2 for b in betas) - sum(abs(a) ** 2 for a in alphas)
    ) < 1e-12


def main():
    tests = [v for k, v in globals().items() if k.startswith("test_")]
    for t in tests:
        t()
        print(f"{t.__name__}: ok")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
