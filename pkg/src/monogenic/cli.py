"""Scenario-driven command line front end.

A scenario is a JSON file with a `task` plus the data it needs:

    {
      "task": "disc" | "order-eq" | "search" | "unit-solve" | "ef"
            | "verify-a1" | "verify-33" | "verify-b" | "bounds" | "addendum",
      "base": {"p": 2, "k": 1, "modulus": "..."},      # optional (default F_2)
      "backend": "tower" | "symmetric",                # optional
      "tower": {"levels": [{"label": "s", "poly": "s^4+..."}],
                "assume_irreducible": false},          # tower backend only
      "elements": {"s": "...", "t": "..."},            # named elements
      "params": { ... }                                # task parameters
    }

Unknown keys anywhere are rejected (exit 2).  Exit codes: 0 success,
1 a verify-style task had failing checks, 2 configuration error.
`--json` selects machine output; reports are deterministic and re-runs are
byte-identical (timing goes to stderr, never into the report).
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from typing import Dict, Optional, Tuple

from .bivar import BivarPoly
from .frobsearch import (
    SymPowerPair,
    TowerPowerPair,
    addendum_report,
    bound_calculator,
    compute_ef,
    enumerate_M,
    fit_patterns,
)
from .funcfield import Place, PlaceSet, Poly, RatFunc
from .gf import FqCtx
from .monorder import MonOrder, POLY_RING, disc_form_predicate, orders_equal, sym_orders_equal
from .parse import ParseError, SymbolPoly, parse_element
from .tower import Tower, discriminant
from .unitgrp import build_group, solve_xy1
from .verify import (
    eta_conditions_hold,
    verify_quartic_twist_family,
    verify_shifted_generator_family,
    verify_symmetric_quadratic_powers,
)


class ConfigError(ValueError):
    pass


_TASKS = (
    "disc", "order-eq", "search", "unit-solve", "ef",
    "verify-a1", "verify-33", "verify-b", "bounds", "addendum",
)

_TOP_KEYS = {"task", "base", "backend", "tower", "elements", "params"}


def _check_keys(d: dict, allowed, where: str):
    unknown = set(d) - set(allowed)
    if unknown:
        raise ConfigError(f"unknown keys in {where}: {sorted(unknown)}")


def _build_base(cfg: Optional[dict]) -> FqCtx:
    cfg = cfg or {"p": 2}
    _check_keys(cfg, {"p", "k", "modulus"}, "base")
    p = cfg.get("p", 2)
    k = cfg.get("k", 1)
    modulus = cfg.get("modulus")
    coeffs = None
    if modulus is not None:
        coeffs = [int(c) for c in modulus]
    try:
        return FqCtx(int(p), int(k), coeffs)
    except ValueError as exc:
        raise ConfigError(str(exc))


def _build_tower(ctx: FqCtx, cfg: dict) -> Tower:
    _check_keys(cfg, {"levels", "assume_irreducible"}, "tower")
    assume = bool(cfg.get("assume_irreducible", False))
    tw = Tower(ctx)
    for lvl in cfg.get("levels", []):
        _check_keys(lvl, {"label", "poly"}, "tower level")
        label = lvl["label"]
        env = {"x": tw.x() if tw.levels else RatFunc.gen(ctx)}
        if ctx.k > 1:
            env[ctx.gen_label] = ctx.gen
        for i, existing in enumerate(tw.levels):
            env[existing.label] = tw.gen(i)
        zero = tw.from_base(0) if tw.levels else RatFunc.of(0, ctx)
        one = tw.from_base(1) if tw.levels else RatFunc.of(1, ctx)
        env[label] = SymbolPoly([zero, one], zero)
        try:
            poly = parse_element(lvl["poly"], env, one)
        except ParseError as exc:
            raise ConfigError(f"bad defining polynomial for {label!r}: {exc}")
        if not isinstance(poly, SymbolPoly):
            raise ConfigError(f"defining polynomial for {label!r} does not involve it")
        try:
            tw.extend(label, poly.coeffs, assume_irreducible=assume)
        except ValueError as exc:
            raise ConfigError(f"level {label!r}: {exc}")
    if not tw.levels:
        raise ConfigError("tower must declare at least one level")
    for lvl in tw.levels:
        if lvl.status == "assumed" and not assume:
            raise ConfigError(
                f"irreducibility of level {lvl.label!r} did not certify; "
                "set assume_irreducible to proceed"
            )
    return tw


def _tower_env(tw: Tower) -> Dict[str, object]:
    env = {"x": tw.x()}
    if tw.base.k > 1:
        env[tw.base.gen_label] = tw.base.gen
    for i, lvl in enumerate(tw.levels):
        env[lvl.label] = tw.gen(i)
    return env


def _sym_env(ctx: FqCtx) -> Dict[str, object]:
    x, y = BivarPoly.gens(ctx)
    return {"x": x, "y": y}


def _parse_places(ctx: FqCtx, names) -> PlaceSet:
    places = []
    env = {"x": Poly.x(ctx)}
    if ctx.k > 1:
        env[ctx.gen_label] = ctx.gen
    for name in names:
        if name == "inf":
            continue
        try:
            val = parse_element(name, env, Poly.one(ctx))
        except ParseError as exc:
            raise ConfigError(f"bad place {name!r}: {exc}")
        if isinstance(val, RatFunc):
            if not val.is_polynomial():
                raise ConfigError(f"place {name!r} is not a polynomial")
            val = val.num
        try:
            places.append(Place.finite(val))
        except ValueError as exc:
            raise ConfigError(str(exc))
    return PlaceSet(places)


def run_scenario(scenario: dict, overrides: Optional[dict] = None) -> Tuple[dict, int]:
    """Execute one scenario; returns (report dict, exit code)."""
    overrides = overrides or {}
    _check_keys(scenario, _TOP_KEYS, "scenario")
    task = scenario.get("task")
    if task not in _TASKS:
        raise ConfigError(f"unknown task {task!r}; expected one of {_TASKS}")
    params = dict(scenario.get("params", {}))
    for key, val in overrides.items():
        if val is not None:
            params[key] = val
    ctx = _build_base(scenario.get("base"))
    backend = scenario.get("backend", "tower")
    if backend not in ("tower", "symmetric"):
        raise ConfigError(f"unknown backend {backend!r}")

    report: dict = {"task": task}
    code = 0

    def elements_env():
        if backend == "symmetric":
            return _sym_env(ctx), BivarPoly.constant(ctx, 1)
        if "tower" not in scenario:
            env = {"x": RatFunc.gen(ctx)}
            if ctx.k > 1:
                env[ctx.gen_label] = ctx.gen
            return env, RatFunc.of(1, ctx)
        tw = _build_tower(ctx, scenario["tower"])
        env = _tower_env(tw)
        return env, tw.from_base(1)

    def named(name: str, env, one):
        texts = scenario.get("elements", {})
        if name not in texts:
            raise ConfigError(f"scenario does not define element {name!r}")
        try:
            return parse_element(texts[name], env, one)
        except ParseError as exc:
            raise ConfigError(f"bad element {name!r}: {exc}")

    if task == "disc":
        _check_keys(params, {"element", "places"}, "params")
        env, one = elements_env()
        t = named(params.get("element", "s"), env, one)
        d = discriminant(t)
        report["discriminant"] = repr(d)
        if "places" in params:
            T = _parse_places(ctx, params["places"])
            report["places"] = [repr(v) for v in T]
            report["disc_form_predicate"] = disc_form_predicate(t, T)

    elif task == "order-eq":
        _check_keys(params, {"s", "t"}, "params")
        env, one = elements_env()
        s = named(params.get("s", "s"), env, one)
        t = named(params.get("t", "t"), env, one)
        if backend == "symmetric":
            res = sym_orders_equal(t, s)
        else:
            res = orders_equal(t, MonOrder(s, POLY_RING))
        report["equal"] = bool(res)
        report["reason"] = res.reason

    elif task == "search":
        _check_keys(params, {"s", "t", "m_max", "n_max"}, "params")
        env, one = elements_env()
        s = named(params.get("s", "s"), env, one)
        t = named(params.get("t", "t"), env, one)
        m_max = int(params.get("m_max", 12))
        n_max = int(params.get("n_max", 12))
        pair = SymPowerPair(s, t) if backend == "symmetric" else TowerPowerPair(s, t)
        result = enumerate_M(pair, m_max, n_max)
        fit_patterns(result, ctx.p)
        if result.closure_violations:
            code = 1
        report["search"] = result.to_dict()
        report["note"] = "patterns are box-relative descriptions, consistent with the data"

    elif task == "unit-solve":
        _check_keys(params, {"generators", "height_bound"}, "params")
        env = {"x": RatFunc.gen(ctx)}
        if ctx.k > 1:
            env[ctx.gen_label] = ctx.gen
        gens = []
        for text in params.get("generators", []):
            try:
                gens.append(parse_element(text, env, RatFunc.of(1, ctx)))
            except ParseError as exc:
                raise ConfigError(f"bad generator {text!r}: {exc}")
        if not gens:
            raise ConfigError("unit-solve needs at least one generator")
        gctx = build_group(gens, ctx)
        fams = solve_xy1(gctx, int(params.get("height_bound", 64)))
        report["group"] = {
            "basis": [repr(b) for b in gctx.basis],
            "rank": gctx.rank,
        }
        report["families"] = [f.describe() for f in fams]
        report["family_count"] = len(fams)

    elif task == "ef":
        _check_keys(params, {"element", "bound"}, "params")
        env, one = elements_env()
        s = named(params.get("element", "s"), env, one)
        res = compute_ef(s, int(params.get("bound", 12)))
        report["stable_exponent"] = res.value
        report["verified_up_to_bound"] = res.verified
        report["degrees"] = [[n, d] for n, d in res.degrees]

    elif task == "verify-a1":
        _check_keys(params, {"m_max", "relation_box"}, "params")
        rep = verify_quartic_twist_family(
            int(params.get("m_max", 3)), int(params.get("relation_box", 8))
        )
        report["verification"] = rep.to_dict()
        code = 0 if rep.passed else 1

    elif task == "verify-33":
        _check_keys(params, {"m_max", "eta"}, "params")
        eta = None
        if "eta" in params:
            try:
                val = parse_element(params["eta"], {"x": Poly.x(ctx)}, Poly.one(ctx))
            except ParseError as exc:
                raise ConfigError(f"bad eta seed: {exc}")
            eta = val.num if isinstance(val, RatFunc) else val
            bad = eta_conditions_hold(eta)
            if bad is not None:
                raise ConfigError(f"eta seed rejected: {bad}")
        rep = verify_shifted_generator_family(eta, int(params.get("m_max", 4)))
        report["verification"] = rep.to_dict()
        code = 0 if rep.passed else 1

    elif task == "verify-b":
        _check_keys(params, {"i_max", "j_max"}, "params")
        rep = verify_symmetric_quadratic_powers(
            int(params.get("i_max", 2)), int(params.get("j_max", 2))
        )
        report["verification"] = rep.to_dict()
        code = 0 if rep.passed else 1

    elif task == "bounds":
        _check_keys(params, {"d", "p", "q_K", "S_size", "q_L", "r", "lambda"}, "params")
        try:
            br = bound_calculator(
                int(params["d"]), int(params["p"]), int(params["q_K"]),
                int(params["S_size"]),
                q_L=int(params["q_L"]) if "q_L" in params else None,
                r=int(params["r"]) if "r" in params else None,
                lam=int(params["lambda"]) if "lambda" in params else None,
            )
        except KeyError as exc:
            raise ConfigError(f"bounds task needs parameter {exc}")
        except ValueError as exc:
            raise ConfigError(str(exc))
        report["bounds"] = br.to_dict()

    elif task == "addendum":
        _check_keys(params, {"s", "t"}, "params")
        env = {"x": RatFunc.gen(ctx)}
        if ctx.k > 1:
            env[ctx.gen_label] = ctx.gen
        s = named(params.get("s", "s"), env, one=RatFunc.of(1, ctx))
        t = named(params.get("t", "t"), env, one=RatFunc.of(1, ctx))
        try:
            rep = addendum_report(RatFunc.of(s, ctx), RatFunc.of(t, ctx))
        except ValueError as exc:
            raise ConfigError(str(exc))
        report["addendum"] = rep.to_dict()

    return report, code


def report_to_text(report: dict) -> str:
    lines = [f"task: {report.get('task')}"]
    verification = report.get("verification")
    if verification:
        lines.append(f"  {verification['title']}")
        for c in verification["checks"]:
            lines.append(f"  [{c['status']:4}] {c['name']}: {c['detail']}")
        lines.append(f"  passed: {verification['passed']}")
    for key in sorted(report):
        if key in ("task", "verification"):
            continue
        lines.append(f"  {key}: {json.dumps(report[key], sort_keys=True)}")
    return "\n".join(lines)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(
        prog="monogenic",
        description="Run a scenario file against the library.",
    )
    ap.add_argument("scenario", help="path to a scenario JSON file")
    ap.add_argument("--json", action="store_true", help="emit the JSON report")
    ap.add_argument("--box", type=int, default=None, help="override search box / bound")
    ap.add_argument("--mmax", type=int, default=None, help="override m_max")
    ap.add_argument("--seed-eta", default=None, help="override the eta seed polynomial")
    ap.add_argument("--places", default=None, help="comma-separated place list, e.g. inf,x")
    args = ap.parse_args(argv)

    try:
        with open(args.scenario, "r", encoding="utf-8") as fh:
            scenario = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2

    overrides = {}
    if args.box is not None:
        overrides["m_max"] = args.box
        overrides["n_max"] = args.box
        overrides["bound"] = args.box
    if args.mmax is not None:
        overrides["m_max"] = args.mmax
    if args.seed_eta is not None:
        overrides["eta"] = args.seed_eta
    if args.places is not None:
        overrides["places"] = [s for s in args.places.split(",") if s]

    start = time.perf_counter()
    try:
        report, code = run_scenario(scenario, overrides)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    elapsed = time.perf_counter() - start

    if args.json:
        print(json.dumps(report, sort_keys=True, indent=2))
    else:
        print(report_to_text(report))
    print(f"elapsed: {elapsed:.3f}s", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
