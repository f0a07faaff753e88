#!/usr/bin/env python3
"""Solve x + y = 1 in the group generated by command-line elements of
F_p(x)* and cross-check the orbit families against the brute-force box.

Example: python3 scripts/explore_unit_equation.py -p 3 x 1-x --box 6
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from monogenic import FqCtx, RatFunc, brute_force_xy1, build_group, solve_xy1  # noqa: E402
from monogenic.parse import parse_element  # noqa: E402


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("generators", nargs="+", help="elements of F_p(x)*, e.g. x 1-x")
    ap.add_argument("-p", type=int, default=2, help="characteristic (prime)")
    ap.add_argument("-k", type=int, default=1, help="extension degree of the constant field")
    ap.add_argument("--box", type=int, default=6, help="brute-force exponent box")
    args = ap.parse_args()

    ctx = FqCtx(args.p, args.k)
    env = {"x": RatFunc.gen(ctx)}
    if ctx.k > 1:
        env[ctx.gen_label] = ctx.gen
    gens = [parse_element(t, env, RatFunc.of(1, ctx)) for t in args.generators]
    g = build_group(gens, ctx)
    print(f"group over F_{ctx.q}(x): basis {[repr(b) for b in g.basis]}, rank {g.rank}")

    fams = solve_xy1(g)
    print(f"{len(fams)} orbit families (bound p^2r = {ctx.p ** (2 * g.rank)}):")
    for f in fams:
        tag = " [torsion]" if f.torsion else ""
        print(f"  {f.describe()}{tag}")

    brute = brute_force_xy1(g, args.box)
    orbit = set()
    for f in fams:
        for (a, b) in f.orbit_in_box(args.box):
            orbit.add((a.key(), b.key()))
    match = orbit == {(a.key(), b.key()) for a, b in brute}
    print(f"brute force box {args.box}: {len(brute)} solutions; families agree: {match}")
    return 0 if match else 1


if __name__ == "__main__":
    sys.exit(main())
