import random

import pytest

from monogenic import (
    FqCtx,
    GaloisMap,
    Poly,
    RatFunc,
    Tower,
    conjugate_difference_unit,
    conjugates,
    discriminant,
    frobenius_power,
    minimal_polynomial,
)
from monogenic.tower import kp_str
from monogenic.verify import quartic_twist_tower, shifted_tower

F2 = FqCtx(2)
F3 = FqCtx(3)


def sqrt_x_tower():
    x = RatFunc.gen(F3)
    return Tower(F3).extend("y", [-x, RatFunc.of(0, F3), RatFunc.of(1, F3)])


def test_minpoly_of_generator_is_defining():
    tw = quartic_twist_tower()
    g, d = minimal_polynomial(tw.gen(0))
    assert d == 4
    assert kp_str(g) == "Y^4+(x^2)*Y^2+Y+1"


def test_minpoly_translate():
    # oracle: (t-1)^2 = x expands to Y^2 - 2Y + (1 - x)
    tw = sqrt_x_tower()
    y = tw.gen(0)
    g, d = minimal_polynomial(y + 1)
    assert d == 2
    x = RatFunc.gen(F3)
    assert g == [RatFunc.of(1, F3) - x, RatFunc.of(-1, F3) * 2, RatFunc.of(1, F3)]


def test_minpoly_base_element_degree_one():
    tw = sqrt_x_tower()
    g, d = minimal_polynomial(tw.x())
    assert d == 1
    assert g == [-RatFunc.gen(F3), RatFunc.of(1, F3)]


def test_discriminant_shifted_quartic():
    tw = shifted_tower(Poly(F2, [1, 1]))
    assert discriminant(tw.gen(0)) == RatFunc(Poly.x(F2) ** 12)


def test_discriminant_twisted_quartic():
    # oracle: disc(y) = Res(f, f') = 1 since f' = 1 in char 2, and scaling
    # s = x*y multiplies the discriminant by x^{d(d-1)} = x^12
    tw = quartic_twist_tower()
    y = tw.gen(0)
    assert discriminant(y) == RatFunc.of(1, F2)
    s = tw.x() * y
    assert discriminant(s) == RatFunc(Poly.x(F2) ** 12)


def test_discriminant_sqrt_x():
    tw = sqrt_x_tower()
    assert discriminant(tw.gen(0)) == RatFunc.gen(F3)  # 4x = x mod 3


def test_discriminant_degree_one_rejected():
    tw = sqrt_x_tower()
    with pytest.raises(ValueError):
        discriminant(tw.x())


def test_galois_apply_and_conjugates():
    tw = sqrt_x_tower()
    y = tw.gen(0)
    ident = GaloisMap(tw, {"y": y}, "id")
    sigma = GaloisMap(tw, {"y": -y}, "sigma")
    assert (ident.apply(y + 1) - (y + 1)).is_zero()
    cs = conjugates(y, [ident, sigma])
    assert len(cs) == 2
    # Vieta: the conjugate product is the constant term up to sign
    prod = cs.conjugates[0] * cs.conjugates[1]
    assert prod.in_base() == -RatFunc.gen(F3)
    assert cs.product_discriminant() == discriminant(y)


def test_galois_bad_image_rejected():
    tw = sqrt_x_tower()
    with pytest.raises(ValueError):
        GaloisMap(tw, {"y": tw.gen(0) + 1})


def test_conjugates_need_full_cover():
    tw = sqrt_x_tower()
    ident = GaloisMap(tw, {"y": tw.gen(0)}, "id")
    with pytest.raises(ValueError):
        conjugates(tw.gen(0), [ident])


def test_frobenius_power():
    tw = quartic_twist_tower()
    y = tw.gen(0)
    assert (frobenius_power(y, 0) - y).is_zero()
    # y^4 = x^2 y^2 + y + 1 from the defining polynomial
    x = tw.x()
    assert (frobenius_power(y, 2) - (x * x * y * y + y + 1)).is_zero()
    assert frobenius_power(tw.x(), 1).in_base() == RatFunc.gen(F2) ** 2


def test_conjugate_difference_unit():
    tw = sqrt_x_tower()
    y = tw.gen(0)
    x = RatFunc.gen(F3)
    ident = GaloisMap(tw, {"y": y}, "id")
    sigma = GaloisMap(tw, {"y": -y}, "sigma")
    cs = conjugates(y, [ident, sigma])
    assert (conjugate_difference_unit(cs, cs, 0, 1) - tw.from_base(1)).is_zero()
    # t = a s^q + b gives the char-p binomial identity a (s_i - s_j)^{q-1}
    t = 2 * frobenius_power(y, 1) + x
    ct = conjugates(t, [ident, sigma])
    u = conjugate_difference_unit(cs, ct, 0, 1)
    ds = cs.conjugates[0] - cs.conjugates[1]
    assert (u - 2 * ds * ds).is_zero()
    with pytest.raises(ValueError):
        conjugate_difference_unit(cs, ct, 1, 1)


def test_disc_translation_invariance_randomized():
    rng = random.Random(31)
    tw = shifted_tower(Poly(F2, [1, 1]))
    s = tw.gen(0)
    base = discriminant(s)
    for _ in range(100):
        b = Poly.random(F2, rng.randrange(0, 4), rng)
        assert discriminant(s + RatFunc(b)) == base


def test_disc_scaling_randomized():
    rng = random.Random(32)
    tw = sqrt_x_tower()
    y = tw.gen(0)
    base = discriminant(y)
    for _ in range(25):
        a = RatFunc(Poly.random(F3, rng.randrange(0, 3), rng),
                    Poly.random(F3, rng.randrange(0, 3), rng))
        if a.is_zero():
            continue
        assert discriminant(y * a) == a ** 2 * base  # d(d-1) = 2


def test_disc_transformation_law_randomized():
    # disc(a s^{p^e} + b) = a^{d(d-1)} disc(s)^{p^e}
    rng = random.Random(33)
    towers = [
        (shifted_tower(Poly(F2, [1, 1])), F2, 12),
        (sqrt_x_tower(), F3, 2),
    ]
    for tw, ctx, exp in towers:
        s = tw.gen(0)
        base = discriminant(s)
        for _ in range(20):
            a = RatFunc(Poly.random(ctx, rng.randrange(0, 2), rng))
            if a.is_zero():
                continue
            b = RatFunc(Poly.random(ctx, rng.randrange(0, 3), rng))
            e = rng.randrange(0, 3)
            t = a * frobenius_power(s, e) + b
            assert discriminant(t) == a ** exp * base ** (ctx.p ** e)


def test_galois_preserves_minpoly():
    tw = sqrt_x_tower()
    y = tw.gen(0)
    sigma = GaloisMap(tw, {"y": -y}, "sigma")
    t = y * RatFunc.gen(F3) + 2
    g1, _ = minimal_polynomial(t)
    g2, _ = minimal_polynomial(sigma.apply(t))
    assert g1 == g2


def test_certification_statuses():
    tw = quartic_twist_tower()
    assert tw.levels[0].status.startswith("certified")
    tw2 = shifted_tower(Poly(F2, [1, 1]))
    assert tw2.levels[0].status.startswith("certified")
    # caller-declared assumption is recorded
    x = RatFunc.gen(F2)
    tw3 = Tower(F2).extend(
        "w", [x, RatFunc.of(1, F2), RatFunc.of(1, F2)], assume_irreducible=True
    )
    assert tw3.levels[0].status == "assumed"


def test_inseparable_defining_poly_rejected():
    x = RatFunc.gen(F2)
    with pytest.raises(ValueError):
        # Y^2 + x is inseparable in characteristic 2
        Tower(F2).extend("w", [x, RatFunc.of(0, F2), RatFunc.of(1, F2)])


def test_element_text():
    tw = shifted_tower(Poly(F2, [1, 1]))
    s = tw.gen(0)
    x = tw.x()
    assert repr(x * s * s + s) == "x*s^2+s"
