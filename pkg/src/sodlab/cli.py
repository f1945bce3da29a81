"""Command-line surface: computations and verification suites.

Exit codes: 0 when every check passes (inconclusive does not fail),
1 when any check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
import time

from . import apps as apps_mod
from . import bwb as bwb_mod
from . import kverify
from . import sod as sod_mod
from .characters import (
    LaurentCharacter,
    SchurExpansion,
    cauchy_exterior,
    cauchy_symmetric,
    schur_decompose,
    schur_monomials,
    schur_weight_character,
)
from .errors import VerificationError
from .partitions import Box, box_enumerate, induction_blocks
from .sod import LocalSetup

MAX_SAFE_INT = 2 ** 53 - 1

SUITES = (
    "bwb-oracle", "cauchy", "kapranov", "flip", "lascoux",
    "serre", "generation", "semiorth", "all",
)

DEFAULT_FLIP_SETUPS = ((2, 1, 1), (3, 2, 2), (4, 3, 2), (3, 1, 2))
DEFAULT_LASCOUX_SETUPS = ((3, 2, 1), (4, 3, 2), (4, 3, 1))
DEFAULT_GENERATION_SETUPS = ((2, 1, 1), (3, 1, 2), (3, 2, 2), (4, 2, 2))
DEFAULT_KAPRANOV_PAIRS = ((2, 1), (3, 1), (3, 2), (4, 2))


def check(name, ok, detail="", inconclusive=False):
    status = "pass" if ok else ("inconclusive" if inconclusive else "fail")
    return {"name": name, "status": status, "detail": detail}


def guarded(name, fn, detail=""):
    """Run fn; a VerificationError becomes a failing check."""
    try:
        fn()
    except VerificationError as exc:
        return check(name, False, str(exc))
    return check(name, True, detail)


# ---------------------------------------------------------------------------
# suites


def suite_bwb_oracle(params):
    max_rank = params.get("max_rank") or 4
    seed = params.get("seed", 0)
    bound = 4
    checks = []
    rng = random.Random(seed)
    for n in range(2, max_rank + 1):
        total = 0
        bad = []
        span = range(-bound, bound + 1)

        def sweep(prefix):
            nonlocal total
            if len(prefix) == n:
                total += 1
                if not bwb_mod.oracle_agrees(prefix):
                    bad.append(prefix)
                return
            for v in span:
                sweep(prefix + (v,))

        sweep(())
        checks.append(check(
            f"bwb-oracle/rank-{n}-agreement",
            not bad,
            f"{total} weights, entries in [-{bound},{bound}]"
            + (f"; first mismatch {bad[0]}" if bad else ""),
        ))
        idem_bad = []
        mini_bad = []

        def sweep2(prefix):
            if len(prefix) == n:
                out = bwb_mod.straighten(prefix)
                if not out.is_vanishing:
                    again = bwb_mod.straighten(out.dominant)
                    if again.dominant != out.dominant or again.shift != 0:
                        idem_bad.append(prefix)
                    if n <= 4:
                        if bwb_mod.minimal_sorting_length(prefix) != out.shift:
                            mini_bad.append(prefix)
                return
            for v in span:
                sweep2(prefix + (v,))

        sweep2(())
        checks.append(check(
            f"bwb-oracle/rank-{n}-idempotence", not idem_bad,
            "straighten is the identity on dominant outputs"
            + (f"; first failure {idem_bad[0]}" if idem_bad else ""),
        ))
        if n <= 4:
            checks.append(check(
                f"bwb-oracle/rank-{n}-shift-minimality", not mini_bad,
                "shift equals the brute-force minimal sorting length"
                + (f"; first failure {mini_bad[0]}" if mini_bad else ""),
            ))
    # full-division spot checks of the oracle itself
    sample_bad = []
    for _ in range(40):
        n = rng.randint(2, min(4, max_rank))
        weight = tuple(rng.randint(-bound, bound) for _ in range(n))
        oracle = bwb_mod.alternant_oracle(weight)
        out = bwb_mod.straighten(weight)
        if out.is_vanishing:
            expected = LaurentCharacter.zero(n)
        else:
            expected = schur_weight_character(out.dominant, n)
            if out.shift % 2:
                expected = -expected
        if oracle != expected:
            sample_bad.append(weight)
    checks.append(check(
        "bwb-oracle/full-division-sample", not sample_bad,
        f"40 seeded weights divided exactly by the Vandermonde (seed {seed})"
        + (f"; first mismatch {sample_bad[0]}" if sample_bad else ""),
    ))
    return checks


def _product_variables_char(kind, degree, nx, ny):
    """e_deg or h_deg of the products x_i y_j, in nx + ny variables."""
    items = []
    for i in range(nx):
        for j in range(ny):
            exps = [0] * (nx + ny)
            exps[i] = 1
            exps[nx + j] = 1
            items.append(tuple(exps))
    layers = [LaurentCharacter.zero(nx + ny) for _ in range(degree + 1)]
    layers[0] = LaurentCharacter.one(nx + ny)
    for item in items:
        mono = LaurentCharacter.monomial(nx + ny, item)
        if kind == "e":
            # each item enters at most once: update downward from old layers
            for deg in range(degree, 0, -1):
                layers[deg] = layers[deg] + layers[deg - 1] * mono
        else:
            # items repeat: new[d] = old[d] + mono * new[d-1], updated upward
            for deg in range(1, degree + 1):
                layers[deg] = layers[deg] + layers[deg - 1] * mono
    return layers[degree]


def suite_cauchy(params):
    nx = ny = 3
    top = 4
    checks = []
    # exterior: e_l({x_i y_j}) = sum over |mu| = l of s_{mu^t}(x) s_mu(y)
    e_layers = _cauchy_layers("e", top, nx, ny)
    h_layers = _cauchy_layers("h", top, nx, ny)
    for ell in range(top + 1):
        rhs = LaurentCharacter.zero(nx + ny)
        for mu_t, mu in cauchy_exterior(ell):
            rhs = rhs + schur_monomials(mu_t, nx).times_disjoint(
                schur_monomials(mu, ny))
        checks.append(check(
            f"cauchy/exterior-degree-{ell}", e_layers[ell] == rhs,
            f"shape ({nx},{ny}), exact polynomial identity",
        ))
    for k in range(top + 1):
        rhs = LaurentCharacter.zero(nx + ny)
        for mu, _ in cauchy_symmetric(k):
            rhs = rhs + schur_monomials(mu, nx).times_disjoint(
                schur_monomials(mu, ny))
        checks.append(check(
            f"cauchy/symmetric-degree-{k}", h_layers[k] == rhs,
            f"shape ({nx},{ny}), exact polynomial identity",
        ))
    # randomized decompose-evaluate round trip
    seed = params.get("seed", 0)
    rng = random.Random(seed)
    cases = 200
    box = box_enumerate(Box(4, 4))
    bad = 0
    for _ in range(cases):
        picks = rng.sample(box, k=rng.randint(1, 4))
        terms = {lam: rng.randint(-3, 3) for lam in picks}
        expansion = SchurExpansion(terms)
        back = schur_decompose(expansion.evaluate(4))
        if back != expansion:
            bad += 1
    checks.append(check(
        "cauchy/schur-roundtrip", bad == 0,
        f"{cases} random expansions in B(4,4), coefficients in [-3,3], "
        f"seed {seed}",
    ))
    return checks


def _cauchy_layers(kind, top, nx, ny):
    return [_product_variables_char(kind, deg, nx, ny) for deg in range(top + 1)]


def suite_kapranov(params):
    pairs = DEFAULT_KAPRANOV_PAIRS
    if params.get("n") and params.get("d"):
        pairs = ((params["n"], params["d"]),)
    checks = []
    for n, d in pairs:
        size = Box(n - d, d).cardinality()
        checks.append(guarded(
            f"kapranov/n{n}-d{d}",
            lambda n=n, d=d: kverify.kapranov_pairing_matrix(n, d),
            f"{size}x{size} pairing matrix is the identity",
        ))
    return checks


def suite_flip(params):
    setups = DEFAULT_FLIP_SETUPS
    if params.get("n") and params.get("d") is not None and params.get("m") is not None:
        setups = ((params["n"], params["m"], params["d"]),)
    checks = []
    for n, m, d in setups:
        setup = LocalSetup(n=n, m=m, d=d)
        box = box_enumerate(Box(n - d, d - setup.r))

        def run(setup=setup, box=box):
            for lam in box:
                kverify.flip_image(setup, lam)

        checks.append(guarded(
            f"flip/n{n}-m{m}-d{d}", run,
            f"{len(box)} generators concentrate in degree 0",
        ))
    return checks


def suite_lascoux(params):
    setups = DEFAULT_LASCOUX_SETUPS
    if params.get("n") and params.get("d") is not None and params.get("m") is not None:
        setups = ((params["n"], params["m"], params["d"]),)
    checks = []
    for n, m, d in setups:
        setup = LocalSetup(n=n, m=m, d=d)
        r = setup.r
        lams = [
            lam for lam in box_enumerate(Box(n - d - 1, d))
            if max(0, d - r + 1) <= (lam[0] if lam else 0) <= d
        ]

        def run(setup=setup, lams=lams):
            n, d = setup.n, setup.d
            for lam in lams:
                terms = kverify.lascoux_resolution(setup, lam)
                width = lam[0] if lam else 0
                for t in terms[1:]:
                    inside = t.schur_weight in Box(n - d, width)
                    outside = t.schur_weight not in Box(n - d - 1, width)
                    if not (inside and outside):
                        raise VerificationError(
                            f"term {t} escapes B({n - d},{width}) \\ "
                            f"B({n - d - 1},{width})"
                        )
                kverify.lascoux_character_identity(setup, lam)

        checks.append(guarded(
            f"lascoux/n{n}-m{m}-d{d}", run,
            f"{len(lams)} admissible weights, two-sided character identity",
        ))
    return checks


def suite_serre(params):
    max_rank = params.get("max_rank") or 6
    bad = []
    for big_n in range(1, max_rank + 1):
        for t in range(-3, big_n + 4):
            vanish = bwb_mod.serre_window(big_n, t).is_vanishing
            if vanish != (1 <= t <= big_n):
                bad.append((big_n, t))
    return [check(
        "serre/window", not bad,
        f"vanishing exactly on [1, N] for N <= {max_rank}, t in [-3, N+3]"
        + (f"; first failure {bad[0]}" if bad else ""),
    )]


def suite_generation(params):
    setups = DEFAULT_GENERATION_SETUPS
    if params.get("n") and params.get("d") and params.get("m") is not None:
        setups = ((params["n"], params["m"], params["d"]),)
    checks = []
    bad_blocks = []
    for n in range(1, 7):
        for d in range(0, n + 1):
            for r in range(0, n + 1):
                for k in range(0, d + 1):
                    try:
                        induction_blocks(n, d, k, r)
                    except VerificationError as exc:
                        bad_blocks.append((n, d, k, r, str(exc)))
    checks.append(check(
        "generation/box-blocks", not bad_blocks,
        "disjoint covering blocks for all n <= 6, d <= n, r <= n, k <= d"
        + (f"; first failure {bad_blocks[0]}" if bad_blocks else ""),
    ))
    for n, m, d in setups:
        setup = LocalSetup(n=n, m=m, d=d)
        checks.append(guarded(
            f"generation/trace-n{n}-m{m}-d{d}",
            lambda setup=setup: sod_mod.generation_trace(setup),
            "leaf multiset and order match the component list",
        ))
        checks.append(guarded(
            f"generation/k0-n{n}-m{m}-d{d}",
            lambda setup=setup: sod_mod.k0_unitriangularity(setup),
            f"unitriangular over {Box(n - d, d).cardinality()} basis classes",
        ))
    return checks


def suite_semiorth(params):
    n = params.get("n") or 2
    m = params.get("m") if params.get("m") is not None else 1
    d = params.get("d") or 1
    cutoff = params.get("cutoff") or 6
    setup = LocalSetup(n=n, m=m, d=d)
    checks = []
    pairs = kverify.semiorthogonality_check(setup, cutoff)
    for pc in pairs:
        name = (f"semiorth/{pc.source_component}->" f"{pc.target_component}")
        if pc.zero and pc.concentrated:
            checks.append(check(name, True,
                                f"zero through degree {cutoff}, concentrated"))
        elif pc.zero:
            checks.append(check(name, False, "zero but not concentrated",
                                inconclusive=True))
        else:
            checks.append(check(name, False, pc.detail))
    if not pairs:
        checks.append(check("semiorth/pairs", True, "no nonempty pairs"))
    return checks


SUITE_RUNNERS = {
    "bwb-oracle": suite_bwb_oracle,
    "cauchy": suite_cauchy,
    "kapranov": suite_kapranov,
    "flip": suite_flip,
    "lascoux": suite_lascoux,
    "serre": suite_serre,
    "generation": suite_generation,
    "semiorth": suite_semiorth,
}


def run_suite(suite, params):
    return SUITE_RUNNERS[suite](params)


# ---------------------------------------------------------------------------
# report plumbing


def jsonable(value):
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value) if abs(value) > MAX_SAFE_INT else value
    if isinstance(value, float):
        return value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return str(value)


def make_report(command, parameters, results, checks, started):
    return {
        "command": command,
        "parameters": jsonable(parameters),
        "results": jsonable(results),
        "checks": checks,
        "elapsedMillis": int((time.perf_counter() - started) * 1000),
    }


def emit_report(report, args):
    text = json.dumps(report, indent=2)
    if getattr(args, "out", None):
        parent = os.path.dirname(args.out)
        if parent:
            os.makedirs(parent, exist_ok=True)
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    if getattr(args, "json", False):
        print(text)
    if getattr(args, "figures", None):
        from . import report as report_mod
        stem = report["command"].replace(" ", "-")
        paths = report_mod.render_report(report, args.figures, stem)
        if not getattr(args, "json", False):
            for p in paths:
                print(f"wrote {p}")


def exit_code(checks):
    return 1 if any(c["status"] == "fail" for c in checks) else 0


# ---------------------------------------------------------------------------
# commands


def parse_int_csv(text):
    try:
        return tuple(int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")


def cmd_bwb_straighten(args):
    started = time.perf_counter()
    outcome = bwb_mod.straighten(args.weight)
    print(outcome)
    checks = []
    if args.oracle:
        agree = bwb_mod.oracle_agrees(args.weight)
        oracle = bwb_mod.alternant_oracle(args.weight)
        checks.append(check("bwb/oracle", agree,
                            f"alternant oracle on {args.weight}"))
        print(f"oracle: {'agree' if agree else 'MISMATCH'} ({oracle!r})")
    result = {
        "vanishing": outcome.is_vanishing,
        "dominant": list(outcome.dominant) if outcome.dominant else None,
        "shift": outcome.shift,
    }
    report = make_report("bwb straighten", {"weight": list(args.weight)},
                         result, checks, started)
    emit_report(report, args)
    return exit_code(checks)


def component_payload(comp):
    return {
        "i": comp.i,
        "lambda": list(comp.lam) if comp.lam else [0],
        "aSequence": list(comp.a_seq),
        "target": comp.target,
        "kernel": comp.kernel,
    }


def cmd_sod_list(args):
    started = time.perf_counter()
    components = sod_mod.enumerate_components(args.r, args.d)
    if not args.json:
        for comp in components:
            lam = ",".join(str(p) for p in comp.lam) if comp.lam else "0"
            seq = ",".join(str(a) for a in comp.a_seq)
            print(f"({comp.i}, ({lam}))  a=({seq})  target={comp.target}  "
                  f"kernel={comp.kernel}")
    counts = {
        str(i): sum(1 for c in components if c.i == i)
        for i in range(min(args.r, args.d) + 1)
    }
    report = make_report(
        "sod list", {"r": args.r, "d": args.d},
        {"components": [component_payload(c) for c in components],
         "countByIndex": counts, "total": len(components)},
        [], started,
    )
    emit_report(report, args)
    if args.figures:
        from . import report as report_mod
        os.makedirs(args.figures, exist_ok=True)
        report_mod.write_components_csv(
            components, os.path.join(args.figures, "components.csv"))
        report_mod.write_components_figure(
            components, args.r, args.d,
            os.path.join(args.figures, "components.png"))
    return 0


def cmd_verify(args):
    started = time.perf_counter()
    params = {
        "n": args.n, "m": args.m, "d": args.d,
        "cutoff": args.cutoff, "max_rank": args.max_rank,
        "seed": args.seed,
    }
    suites = list(SUITE_RUNNERS) if args.suite == "all" else [args.suite]
    jobs = args.jobs or int(os.environ.get("SODLAB_JOBS", "1"))
    checks = []
    if jobs > 1 and len(suites) > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for result in pool.map(run_suite, suites, [params] * len(suites)):
                checks.extend(result)
    else:
        for suite in suites:
            checks.extend(run_suite(suite, params))
    if not args.json:
        for c in checks:
            print(f"[{c['status']:>12}] {c['name']}"
                  + (f" - {c['detail']}" if c["detail"] else ""))
    counts = {
        status: sum(1 for c in checks if c["status"] == status)
        for status in ("pass", "fail", "inconclusive")
    }
    report = make_report(f"verify {args.suite}", params,
                         {"statusCounts": counts}, checks, started)
    emit_report(report, args)
    if not args.json:
        print(f"{counts['pass']} passed, {counts['fail']} failed, "
              f"{counts['inconclusive']} inconclusive "
              f"({report['elapsedMillis']} ms)")
    return exit_code(checks)


def table_payload(table):
    return {
        "title": table.title,
        "rows": [
            {"copies": row.copies, "target": row.target, "index": row.index,
             "virtualDim": row.virtual_dim}
            for row in table.rows
        ],
        "orderNote": table.order_note,
        "source": table.source,
        "sourceVirtualDim": table.source_vdim,
        "totalComponents": table.total_components,
    }


def _print_table(table):
    print(table.title)
    if table.source:
        print(f"source {table.source}  vdim={table.source_vdim}")
    for row in table.rows:
        vdim = "" if row.virtual_dim is None else f"  vdim={row.virtual_dim}"
        print(f"  {row.copies} x {row.target}  (index {row.index}){vdim}")
    print(f"  order: {table.order_note}")
    print(f"  total components: {table.total_components}")


def _emit_table(args, table, command, parameters, started):
    if not args.json:
        _print_table(table)
    report = make_report(command, parameters, table_payload(table), [], started)
    emit_report(report, args)
    if getattr(args, "figures", None):
        from . import report as report_mod
        os.makedirs(args.figures, exist_ok=True)
        stem = command.replace(" ", "-")
        report_mod.write_table_csv(
            table, os.path.join(args.figures, f"{stem}.csv"))
        report_mod.write_table_figure(
            table, os.path.join(args.figures, f"{stem}.png"))
    return 0


def cmd_apps_curves(args):
    started = time.perf_counter()
    table = apps_mod.curves_table(args.g, args.d, args.r)
    return _emit_table(args, table, "apps curves",
                       {"g": args.g, "d": args.d, "r": args.r}, started)


def cmd_apps_blowup(args):
    started = time.perf_counter()
    table = apps_mod.blowup_table(args.r)
    return _emit_table(args, table, "apps blowup", {"r": args.r}, started)


def cmd_apps_reducible(args):
    started = time.perf_counter()
    table = apps_mod.reducible_table(args.r)
    return _emit_table(args, table, "apps reducible", {"r": args.r}, started)


def cmd_apps_vdim(args):
    started = time.perf_counter()
    dims = apps_mod.virtual_dimensions(args.dimx, args.r, args.dplus, args.dminus)
    if not args.json:
        print(f"Grass(E;{args.dplus}): {dims.grass_plus}")
        print(f"Grass(E^∨[1];{args.dminus}): {dims.grass_minus}")
        print(f"Incidence: {dims.incidence}")
        if args.verbose:
            print(f"Incidence (naive, no rank factor): {dims.incidence_naive}")
    result = {
        "grassPlus": dims.grass_plus,
        "grassMinus": dims.grass_minus,
        "incidence": dims.incidence,
        "incidenceNaive": dims.incidence_naive,
    }
    report = make_report(
        "apps vdim",
        {"dimx": args.dimx, "r": args.r, "dplus": args.dplus,
         "dminus": args.dminus},
        result, [], started)
    emit_report(report, args)
    return 0


# ---------------------------------------------------------------------------
# parser


def add_output_flags(parser, figures=True):
    parser.add_argument("--json", action="store_true",
                        help="print the JSON report to stdout")
    parser.add_argument("--out", help="write the JSON report to a file")
    if figures:
        parser.add_argument("--figures",
                            help="directory for CSV and PNG renderings")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sodlab",
        description="semiorthogonal decomposition combinatorics and "
                    "K-theoretic verification",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_bwb = sub.add_parser("bwb", help="weight straightening")
    bwb_sub = p_bwb.add_subparsers(dest="subcommand", required=True)
    p_str = bwb_sub.add_parser("straighten", help="straighten a weight")
    p_str.add_argument("--weight", type=parse_int_csv, required=True,
                       help="comma-separated integer weight")
    p_str.add_argument("--oracle", action="store_true",
                       help="cross-check against the alternant oracle")
    add_output_flags(p_str, figures=False)
    p_str.set_defaults(fn=cmd_bwb_straighten)

    p_sod = sub.add_parser("sod", help="semiorthogonal components")
    sod_sub = p_sod.add_subparsers(dest="subcommand", required=True)
    p_list = sod_sub.add_parser("list", help="ordered component listing")
    p_list.add_argument("--r", type=int, required=True)
    p_list.add_argument("--d", type=int, required=True)
    add_output_flags(p_list)
    p_list.set_defaults(fn=cmd_sod_list)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", choices=SUITES)
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--m", type=int)
    p_verify.add_argument("--d", type=int)
    p_verify.add_argument("--cutoff", type=int)
    p_verify.add_argument("--max-rank", type=int, dest="max_rank")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--jobs", type=int,
                          help="worker pool size (default SODLAB_JOBS or 1)")
    add_output_flags(p_verify)
    p_verify.set_defaults(fn=cmd_verify)

    p_apps = sub.add_parser("apps", help="application parameter tables")
    apps_sub = p_apps.add_subparsers(dest="subcommand", required=True)
    p_curves = apps_sub.add_parser("curves")
    p_curves.add_argument("--g", type=int, required=True)
    p_curves.add_argument("--d", type=int, required=True)
    p_curves.add_argument("--r", type=int, required=True)
    add_output_flags(p_curves)
    p_curves.set_defaults(fn=cmd_apps_curves)
    p_blowup = apps_sub.add_parser("blowup")
    p_blowup.add_argument("--r", type=int, required=True)
    add_output_flags(p_blowup)
    p_blowup.set_defaults(fn=cmd_apps_blowup)
    p_reducible = apps_sub.add_parser("reducible")
    p_reducible.add_argument("--r", type=int, required=True)
    add_output_flags(p_reducible)
    p_reducible.set_defaults(fn=cmd_apps_reducible)
    p_vdim = apps_sub.add_parser("vdim")
    p_vdim.add_argument("--dimx", type=int, required=True)
    p_vdim.add_argument("--r", type=int, required=True)
    p_vdim.add_argument("--dplus", type=int, required=True)
    p_vdim.add_argument("--dminus", type=int, required=True)
    p_vdim.add_argument("--verbose", action="store_true")
    add_output_flags(p_vdim, figures=False)
    p_vdim.set_defaults(fn=cmd_apps_vdim)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
