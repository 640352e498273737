import pytest

from dioph.pell import (IntPoly, denef_mul_rel, denef_witness, divmod_t_minus_1,
                        pell_add, pell_solution, pell_verify, remainder_t_minus_1)

T = IntPoly.t()


def chebyshev(n):
    """x_n = T_n and y_n = U_{n-1} via the classical three-term recurrences (oracle)."""
    Ts, Us = [IntPoly((1,)), T], [IntPoly(), IntPoly((1,))]
    for k in range(2, n + 1):
        Ts.append(2 * T * Ts[-1] - Ts[-2])
        Us.append(2 * T * Us[-1] - Us[-2])
    return Ts[n], Us[n]


def test_examples():
    s0, s1, s2 = (pell_solution(n) for n in range(3))
    assert (s0.x, s0.y) == (IntPoly((1,)), IntPoly())
    assert (s1.x, s1.y) == (T, IntPoly((1,)))
    assert str(s2.x) == "2*t^2-1" and str(s2.y) == "2*t"
    assert pell_verify(T, IntPoly((1,)))
    assert pell_verify(s2.x, s2.y)
    assert not pell_verify(T, T)
    assert denef_mul_rel(1, 1, 1) and denef_mul_rel(2, 3, 6) and not denef_mul_rel(2, 3, 5)
    assert divmod_t_minus_1(pell_solution(5).y - pell_solution(2).y * pell_solution(3).y)[1] == -1


def test_recurrence_matches_chebyshev():
    for n in range(40):
        x, y = chebyshev(n)
        s = pell_solution(n)
        assert s.x == x and s.y == y


def test_verify_and_evaluation_at_one():
    for n in range(61):
        s = pell_solution(n)
        assert pell_verify(s.x, s.y)
        assert s.x(1) == 1 and s.y(1) == n


def test_group_law():
    for r in range(21):
        for s in range(21):
            x, y = pell_add(pell_solution(r), pell_solution(s))
            target = pell_solution(r + s)
            assert (x, y) == (target.x, target.y)


def test_synthetic_division():
    for n in range(30):
        for r in range(6):
            f = pell_solution(n).y - pell_solution(r).y * pell_solution(2).y
            h, rem = divmod_t_minus_1(f)
            assert h * IntPoly((-1, 1)) + rem == f
            assert rem == remainder_t_minus_1(f) == f(1)


def test_mulrel_small_block_exhaustive():
    for r in range(9):
        for s in range(9):
            for n in range(70):
                assert denef_mul_rel(r, s, n) == (n == r * s)
                h = denef_witness(r, s, n)
                assert (h is not None) == (n == r * s)


def test_negative_index_rejected():
    with pytest.raises(ValueError):
        pell_solution(-1)
