"""Command-line interface.

Exit status: 0 when every requested check passes, 1 when a
counterexample or failed check is found, 2 for usage, parse, capacity
or enumeration-limit errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import __version__
from .cache import cache_key, cache_load, cache_store
from .catalog import catalog, resolve_group
from .coset import EnumerationLimits
from .engel import EngelScanConfig, engel_power_scan, engel_stack_identity
from .errors import CapacityError, EnumerationLimitError
from .liering import (dimension_subgroups, jennings_recursion, lie_ring,
                      lie_nilpotency_class, subalgebra_Lp, verify_lazard,
                      verify_lie_axioms)
from .nu import (RELATION_FAMILIES, build_nu, derived_map_check,
                 route_independence, tensor_report, verify_decomposition,
                 verify_nu_relations, verify_tensor_set_closed)
from .report import Report, write_report

_ROMAN = list(RELATION_FAMILIES)


def _parse_lemmas(text):
    out = []
    for token in text.split(","):
        token = token.strip()
        if not token:
            continue
        if ".." in token:
            lo, hi = token.split("..", 1)
            if lo not in _ROMAN or hi not in _ROMAN:
                raise ValueError(f"bad lemma range {token!r}")
            i, j = _ROMAN.index(lo), _ROMAN.index(hi)
            out.extend(_ROMAN[i:j + 1])
        elif token in _ROMAN or token in ("closed", "decomp", "rho"):
            out.append(token)
        else:
            raise ValueError(f"unknown lemma token {token!r}")
    return out


def _limits(args):
    return EnumerationLimits(max_cosets=args.max_cosets,
                             time_limit=args.time_limit)


def _group_payload(descriptor, extra):
    payload = {"input": descriptor, **extra}
    if descriptor.get("kind") == "catalog":
        entry = catalog()[descriptor["name"]]
        payload["perm_gens"] = list(entry.perm_gens)
        payload["presentation"] = entry.presentation_text
    return payload


def _emit(args, report, passed):
    if args.json:
        write_report(report, args.json)
    return 0 if passed else 1


def _cached(args, payload):
    if args.no_cache:
        return None, None
    key = cache_key(payload, __version__)
    return key, cache_load(key)


def _finish_cached(args, key, report):
    if key is not None:
        cache_store(key, report.to_json())


def cmd_tensor(args):
    group, pres, desc = resolve_group(args.group)
    payload = _group_payload(desc, {"command": "tensor", "mode": args.mode,
                                    "max_group": args.max_group})
    key, hit = _cached(args, payload)
    if hit is not None:
        data = json.loads(hit)
        print(f"tensor {args.group}: (cached) "
              f"tensor order {data['results']['tensor_order']}, "
              f"nu order {data['results']['nu_order']}")
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(hit)
        return 0
    start = time.monotonic()
    nu = build_nu(group, pres if args.mode in ("auto", "gens") else None,
                  args.mode, limits=_limits(args),
                  max_group_order=args.max_group)
    rep = tensor_report(nu)
    report = Report(command="tensor", input=desc, results=rep.to_dict(),
                    seed=args.seed, version=__version__,
                    timing={"seconds": time.monotonic() - start})
    print(f"tensor {args.group}: tensor order {rep.tensor_order}, "
          f"nu order {rep.nu_order}, mu order {rep.mu_order}, "
          f"abelian={rep.tensor_abelian}")
    _finish_cached(args, key, report)
    return _emit(args, report, True)


def cmd_nu(args):
    group, pres, desc = resolve_group(args.group)
    payload = _group_payload(desc, {"command": "nu", "mode": args.mode,
                                    "max_group": args.max_group})
    key, hit = _cached(args, payload)
    if hit is not None:
        data = json.loads(hit)
        passed = data["results"].get("passed", True)
        print(f"nu {args.group}: (cached) order "
              f"{data['results']['nu_order']}")
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(hit)
        return 0 if passed else 1
    start = time.monotonic()
    results = {}
    passed = True
    if args.mode == "auto" and pres is not None:
        check, nu_all, _ = route_independence(
            group, pres, limits=_limits(args),
            max_group_order=args.max_group)
        rep = tensor_report(nu_all)
        results = rep.to_dict()
        results["route_independence"] = check.to_dict()
        passed = check.passed
        print(f"nu {args.group}: order {rep.nu_order} "
              f"(route independence: {'ok' if passed else 'FAILED'})")
    else:
        mode = args.mode if args.mode != "auto" else \
            ("gens" if pres is not None else "all")
        nu = build_nu(group, pres if mode == "gens" else None, mode,
                      limits=_limits(args), max_group_order=args.max_group)
        rep = tensor_report(nu)
        results = rep.to_dict()
        print(f"nu {args.group}: order {rep.nu_order} (mode {mode})")
    results["passed"] = passed
    report = Report(command="nu", input=desc, results=results,
                    seed=args.seed, version=__version__,
                    timing={"seconds": time.monotonic() - start})
    _finish_cached(args, key, report)
    return _emit(args, report, passed)


def cmd_verify(args):
    group, pres, desc = resolve_group(args.group)
    lemmas = _parse_lemmas(args.lemmas)
    start = time.monotonic()
    nu = build_nu(group, pres, "auto", limits=_limits(args),
                  max_group_order=args.max_group)
    reports = []
    families = [x for x in lemmas if x in _ROMAN]
    if families:
        reports.append(verify_nu_relations(
            nu, exhaustive_cap=args.exhaustive_cap, samples=args.samples,
            seed=args.seed or 0, families=tuple(families)))
    if "closed" in lemmas:
        reports.append(verify_tensor_set_closed(nu))
    if "decomp" in lemmas:
        reports.append(verify_decomposition(nu))
    if "rho" in lemmas:
        reports.append(derived_map_check(nu))
    passed = all(r.passed for r in reports)
    for r in reports:
        for c in r.checks:
            print(f"{'PASS' if c.passed else 'FAIL'}  {r.name}: {c.label}")
    report = Report(command="verify", input=desc,
                    results={"reports": [r.to_dict() for r in reports],
                             "passed": passed},
                    seed=args.seed, version=__version__,
                    timing={"seconds": time.monotonic() - start})
    return _emit(args, report, passed)


def cmd_engel(args):
    group, pres, desc = resolve_group(args.group)
    start = time.monotonic()
    nu = build_nu(group, pres, "auto", limits=_limits(args),
                  max_group_order=args.max_group)
    cfg = EngelScanConfig(p=args.p, m=args.m, n=args.n)
    scan = engel_power_scan(nu, cfg)
    passed = scan.all_pairs_satisfied
    print(f"engel {args.group} (p={args.p}, m={args.m}, n={args.n}): "
          f"{'all pairs satisfied' if passed else 'unsatisfied pairs found'}")
    report = Report(command="engel", input=desc, results=scan.to_dict(),
                    seed=args.seed, version=__version__,
                    timing={"seconds": time.monotonic() - start})
    return _emit(args, report, passed)


def cmd_lie(args):
    group, pres, desc = resolve_group(args.group)
    payload = _group_payload(desc, {"command": "lie", "p": args.p,
                                    "lazard": args.lazard})
    key, hit = _cached(args, payload)
    if hit is not None:
        data = json.loads(hit)
        passed = data["results"].get("passed", True)
        print(f"lie {args.group}: (cached)")
        if args.json:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(hit)
        return 0 if passed else 1
    start = time.monotonic()
    series = dimension_subgroups(group, args.p)
    oracle = jennings_recursion(group, args.p)
    ring = lie_ring(series)
    axioms = verify_lie_axioms(ring)
    qs = [args.lazard] if args.lazard else [args.p, args.p ** 2]
    lazard = [verify_lazard(ring, q) for q in qs]
    sub = subalgebra_Lp(ring)
    results = {
        "p": args.p,
        "series_orders": [t.order() for t in series.terms],
        "series_matches_recursion": series.termwise_equal(oracle),
        "graded_dimensions": list(ring.dims),
        "nilpotency_class": lie_nilpotency_class(ring),
        "Lp_dimensions": {str(d): sub.dimension(d)
                          for d in range(1, ring.degrees + 1)},
        "axioms": axioms.to_dict(),
        "lazard": [r.to_dict() for r in lazard],
    }
    passed = (results["series_matches_recursion"] and axioms.passed
              and all(r.passed for r in lazard))
    results["passed"] = passed
    print(f"lie {args.group} (p={args.p}): dims {ring.dims}, "
          f"class {results['nilpotency_class']}, "
          f"{'ok' if passed else 'FAILED'}")
    report = Report(command="lie", input=desc, results=results,
                    seed=args.seed, version=__version__,
                    timing={"seconds": time.monotonic() - start})
    _finish_cached(args, key, report)
    return _emit(args, report, passed)


def cmd_identity_f(args):
    group, _, desc = resolve_group(args.group)
    start = time.monotonic()
    holds = engel_stack_identity(group, args.n, args.p, args.m)
    print(f"identity-f {args.group} (n={args.n}, p={args.p}, m={args.m}): "
          f"{'holds' if holds else 'fails'}")
    report = Report(command="identity-f", input=desc,
                    results={"holds": holds, "n": args.n, "p": args.p,
                             "m": args.m},
                    seed=args.seed, version=__version__,
                    timing={"seconds": time.monotonic() - start})
    return _emit(args, report, holds)


def cmd_catalog(args):
    if args.action != "list":
        raise ValueError(f"unknown catalog action {args.action!r}")
    entries = catalog()
    for name, e in entries.items():
        print(f"{name:8s} order {e.order:4d}  {e.description}")
    report = Report(command="catalog", input={"action": "list"},
                    results={"entries": [
                        {"name": e.name, "order": e.order,
                         "description": e.description,
                         "has_presentation": e.presentation_text is not None}
                        for e in entries.values()]},
                    seed=None, version=__version__)
    return _emit(args, report, True)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="tensq",
        description="non-abelian tensor squares, nu-groups, Engel scans "
                    "and graded Lie rings of finite groups")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, group=True):
        if group:
            p.add_argument("group",
                           help="catalog name, @file.perm or @file.pres")
        p.add_argument("--json", help="write the JSON report here")
        p.add_argument("--seed", type=int, default=None,
                       help="seed for sampled checks")
        p.add_argument("--max-group", type=int, default=16,
                       help="cap on |G| for nu-construction")
        p.add_argument("--max-cosets", type=int, default=2_000_000)
        p.add_argument("--time-limit", type=float, default=60.0)
        p.add_argument("--no-cache", action="store_true")

    p = sub.add_parser("tensor", help="tensor square report")
    common(p)
    p.add_argument("--mode", choices=("auto", "all", "gens"), default="auto")
    p.set_defaults(fn=cmd_tensor)

    p = sub.add_parser("nu", help="build nu(G); default mode cross-checks "
                                  "both construction routes")
    common(p)
    p.add_argument("--mode", choices=("auto", "all", "gens"), default="auto")
    p.set_defaults(fn=cmd_nu)

    p = sub.add_parser("verify", help="verify tensor-commutator identities")
    common(p)
    p.add_argument("--lemmas", default="i..v,closed,decomp,rho")
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--exhaustive-cap", type=int, default=8)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("engel", help="scan tensor powers for left n-Engel "
                                     "behaviour in nu(G)")
    common(p)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.add_argument("-n", type=int, required=True)
    p.set_defaults(fn=cmd_engel)

    p = sub.add_parser("lie", help="dimension subgroups and graded Lie ring")
    common(p)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("--lazard", type=int, default=None,
                   help="check the adjoint-power identity at this q "
                        "(default: p and p^2)")
    p.set_defaults(fn=cmd_lie)

    p = sub.add_parser("identity-f", help="evaluate the stacked Engel word "
                                          "over all triples")
    common(p)
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-m", type=int, required=True)
    p.set_defaults(fn=cmd_identity_f)

    p = sub.add_parser("catalog", help="catalog operations")
    p.add_argument("action", choices=("list",))
    p.add_argument("--json", help="write the JSON report here")
    p.set_defaults(fn=cmd_catalog)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (EnumerationLimitError, CapacityError) as exc:
        print(f"limit error: {exc}", file=sys.stderr)
        return 2
    except (KeyError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
