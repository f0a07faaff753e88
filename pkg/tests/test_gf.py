import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monogenic import FqCtx, fq_arith, fq_frobenius, fq_pth_root

F2 = FqCtx(2)
F4 = FqCtx(2, 2)
F7 = FqCtx(7)
F16 = FqCtx(2, 4)
F9 = FqCtx(3, 2)
F49 = FqCtx(7, 2)


def test_char2_add():
    assert (F2.one + F2.one).is_zero()


def test_f4_gen_square():
    z = F4.gen
    assert z * z == z + 1


def test_f7_division():
    assert F7.elem(3) / F7.elem(2) == F7.elem(5)


def test_fq_arith_dispatch():
    assert fq_arith(F7.elem(3), F7.elem(2), "div") == F7.elem(5)
    assert fq_arith(F4.gen, F4.gen, "mul") == F4.gen + 1
    with pytest.raises(ZeroDivisionError):
        fq_arith(F7.one, F7.zero, "div")
    with pytest.raises(ValueError):
        fq_arith(F7.one, F2.one, "add")


def test_frobenius_examples():
    z = F4.gen
    assert fq_frobenius(z, 1) == z + 1
    assert fq_frobenius(F7.elem(3), 1) == F7.elem(3)
    assert fq_frobenius(z, 2) == z  # Frobenius has order k


def test_pth_root_examples():
    assert fq_pth_root(F2.one) == F2.one
    assert fq_pth_root(F4.gen + 1) == F4.gen
    b = fq_pth_root(F7.elem(6))
    assert b ** 7 == F7.elem(6)
    assert b == F7.elem(6)


def test_pth_root_inverts_frobenius():
    for ctx in (F4, F9, F16, F49):
        for a in ctx.elements():
            assert fq_pth_root(fq_frobenius(a, 1)) == a


def test_freshman_dream_randomized():
    rng = random.Random(101)
    for ctx in (F4, F9, F49, F16):
        for _ in range(250):
            a = ctx.random_elem(rng)
            b = ctx.random_elem(rng)
            assert (a + b) ** ctx.p == a ** ctx.p + b ** ctx.p


def test_multiplicative_order_exhaustive():
    # a^{q-1} = 1 for all nonzero a, exhaustively for q <= 2^10
    for ctx in (F2, F4, F7, F9, F16, F49, FqCtx(3), FqCtx(2, 3)):
        assert ctx.q <= 2 ** 10
        for a in ctx.elements():
            if not a.is_zero():
                assert a ** (ctx.q - 1) == ctx.one


@given(st.integers(0, 48), st.integers(0, 48))
@settings(max_examples=60)
def test_f49_field_axioms(i, j):
    els = list(F49.elements())
    a, b = els[i], els[j]
    assert a + b == b + a
    assert a * b == b * a
    assert a * (b + F49.one) == a * b + a
    if not b.is_zero():
        assert (a / b) * b == a


def test_reducible_modulus_rejected():
    with pytest.raises(ValueError):
        FqCtx(2, 2, (1, 0, 1))  # z^2+1 = (z+1)^2 over F_2


def test_bad_prime_rejected():
    with pytest.raises(ValueError):
        FqCtx(6)


def test_text_form():
    assert repr(F7.elem(3)) == "3"
    z = F4.gen
    assert repr(z * z) == "z+1"
    assert repr(F16.gen ** 2 + F16.gen + 1) == "z^2+z+1"
