"""Command line front end: pipeline runs, verification suites,
enumeration, and diagram export.

Reports are newline-delimited JSON; --pretty switches to indented
output.  Exit codes: 0 pass, 1 verification failure, 2 usage or input
error.  The WEBFORGE_BUDGET environment variable overrides per-suite
size budgets, e.g. WEBFORGE_BUDGET="duality=6,immanant=2".
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction
from itertools import combinations
from random import Random

from .dissections import triangulation_extensions
from .immanants import (
    PlabicNetwork,
    boundary_measurements,
    immanant_vs_invariant,
    random_network,
)
from .invariants import (
    delta_matching_expansion,
    dual_matchings,
    invariant_vector,
    labeling_count,
    pairing,
    sign_lemma_factor,
)
from .matchings import (
    DomainError,
    color_sets,
    enumerate_matchings,
    word_of_matching,
)
from .plabic import (
    cyclic_interval_positroid,
    plabic_of_web,
    positroid_of_graph,
    top_cell_graph,
    trip_permutation,
)
from .render import draw_web, to_dot, to_tikz
from .tableaux import (
    catalan_bijection,
    enumerate_standard,
    parse_tableau,
    standardize,
    as_semistandard,
    SemistandardTableau,
)
from .webs import WebDiagram, sl2_web_of_matching, tableau_to_web

DEFAULT_BUDGETS = {
    "duality": 5,
    "flip": 5,
    "positroid": 5,
    "immanant": 3,
    "signs": 5,
    "pluecker": 8,
}

DEFAULT_SEED = 20240815


def budgets() -> dict[str, int]:
    out = dict(DEFAULT_BUDGETS)
    raw = os.environ.get("WEBFORGE_BUDGET", "")
    for part in raw.split(","):
        part = part.strip()
        if not part:
            continue
        name, _, val = part.partition("=")
        if name.strip() in out:
            try:
                out[name.strip()] = int(val)
            except ValueError:
                pass
    return out


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, (frozenset, set)):
        return sorted(_jsonable(v) for v in x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _emit(obj, pretty: bool, stream=None):
    stream = stream or sys.stdout
    obj = _jsonable(obj)
    if pretty:
        print(json.dumps(obj, indent=2), file=stream)
    else:
        print(json.dumps(obj, separators=(",", ":")), file=stream)


def _usage_error(msg: str) -> int:
    print(f"error: {msg}", file=sys.stderr)
    return 2


# --- verification suites ----------------------------------------------


def expected_trip(cs: list[tuple[int, ...]], n: int) -> dict[int, int]:
    """Trip target derived from color sets: step forward within a set,
    jump from the last element of one set to the head of the set two
    further along."""
    s = len(cs)
    out: dict[int, int] = {}
    for j, interval in enumerate(cs):
        for b, nxt in zip(interval, interval[1:]):
            out[b] = nxt
        out[interval[-1]] = cs[(j + 2) % s][0]
    assert len(out) == n
    return out


def suite_duality(k: int, web_override=None, row_override=None):
    tabs = enumerate_standard(k)
    mats = [catalan_bijection(t) for t in tabs]
    words = [word_of_matching(m) for m in mats]
    cases = 0
    for r, t in enumerate(tabs):
        if web_override is not None and r == row_override:
            web = web_override
        else:
            web = tableau_to_web(t, which=0)[0]
        for c, word in enumerate(words):
            observed = pairing(web, word)
            expected = 1 if c == r else 0
            cases += 1
            if observed != expected:
                ce = {
                    "suite": "duality",
                    "tableau": t.to_json(),
                    "matching": mats[c].to_json(),
                    "web": web.to_json(),
                    "word": list(word.letters),
                    "expected": expected,
                    "observed": observed,
                }
                return False, cases, ce, {"size": len(tabs)}
    return True, cases, None, {"size": len(tabs), "matrix": "identity"}


def replay_duality(ce: dict) -> bool:
    """Re-run a duality counterexample; True means it still fails."""
    web = WebDiagram.from_json(ce["web"])
    observed = labeling_count(web, ce["word"])
    return observed != ce["expected"]


def suite_flip(k: int):
    cases = 0
    for t in enumerate_standard(k):
        webs = tableau_to_web(t, which="all")
        vecs = [invariant_vector(w) for w in webs]
        for i, vec in enumerate(vecs[1:], start=1):
            cases += 1
            if vec != vecs[0]:
                ce = {
                    "suite": "flip",
                    "tableau": t.to_json(),
                    "extension_pair": [0, i],
                    "webs": [webs[0].to_json(), webs[i].to_json()],
                    "vectors": [vecs[0].to_json(), vec.to_json()],
                }
                return False, cases, ce, {}
    return True, cases, None, {}


def suite_positroid(k: int):
    cases = 0
    for t in enumerate_standard(k):
        m = catalan_bijection(t)
        cs = color_sets(m)
        g = plabic_of_web(tableau_to_web(t, which=0)[0])
        got = positroid_of_graph(g)
        want = cyclic_interval_positroid(cs)
        trips = trip_permutation(g)
        want_trips = expected_trip(cs, 2 * k)
        cases += 1
        if got != want or trips != want_trips:
            ce = {
                "suite": "positroid",
                "tableau": t.to_json(),
                "graph": g.to_json(),
                "positroid": got.to_json(),
                "expected_positroid": want.to_json(),
                "trips": trips,
                "expected_trips": want_trips,
            }
            return False, cases, ce, {}
    return True, cases, None, {}


def suite_signs(k: int):
    cases = 0
    for t in enumerate_standard(k):
        m = catalan_bijection(t)
        web = sl2_web_of_matching(m)
        vec = dict(invariant_vector(web).coeffs)
        sign = sign_lemma_factor(t)
        want = {w: sign * c for w, c in delta_matching_expansion(m).items()}
        cases += 1
        if vec != want:
            ce = {
                "suite": "signs",
                "tableau": t.to_json(),
                "sign": sign,
                "vector": {"".join(map(str, w)): c for w, c in vec.items()},
                "expected": {"".join(map(str, w)): c for w, c in want.items()},
            }
            return False, cases, ce, {}
    return True, cases, None, {}


def suite_immanant(k: int, seed: int, trials: int = 5):
    g = top_cell_graph(k, 2 * k)
    cases = 0
    rows = []
    plain_all = True
    shifted_all = True
    for t in enumerate_standard(k):
        reports = []
        for i in range(trials):
            net = random_network(g, Random(seed * 1000 + i))
            rep = immanant_vs_invariant(t, net)
            cases += 1
            reports.append(rep)
            if not rep["ok"]:
                ce = {
                    "suite": "immanant",
                    "tableau": t.to_json(),
                    "network": net.to_json(),
                    "lhs": rep["lhs"],
                    "rhs": rep["rhs"],
                }
                return False, cases, ce, {}
        signs = {rep["sign"] for rep in reports if rep["sign"] is not None}
        if len(signs) > 1:
            ce = {"suite": "immanant", "tableau": t.to_json(),
                  "signs": sorted(signs)}
            return False, cases, ce, {}
        sign = signs.pop() if signs else None
        plain = all(rep["matches_plain_sign"] for rep in reports
                    if rep["matches_plain_sign"] is not None)
        shifted = all(rep["matches_shifted_sign"] for rep in reports
                      if rep["matches_shifted_sign"] is not None)
        plain_all = plain_all and plain
        shifted_all = shifted_all and shifted
        rows.append({"col1": list(t.col1), "sign": sign,
                     "matches_plain_sign": plain,
                     "matches_shifted_sign": shifted})
    extra = {
        "trials_per_tableau": trials,
        "per_tableau": rows,
        "sign_formula_plain_matches_all": plain_all,
        "sign_formula_shifted_matches_all": shifted_all,
    }
    return True, cases, None, extra


def suite_pluecker(n: int, seed: int, trials: int = 3):
    g = top_cell_graph(2, n)
    cases = 0
    for i in range(trials):
        net = random_network(g, Random(seed * 1000 + i))
        meas = boundary_measurements(net)

        def d(a, b):
            return meas[frozenset((a, b))]

        for a, b, c, e in combinations(range(1, n + 1), 4):
            cases += 1
            if d(a, c) * d(b, e) != d(a, b) * d(c, e) + d(a, e) * d(b, c):
                ce = {
                    "suite": "pluecker",
                    "network": net.to_json(),
                    "columns": [a, b, c, e],
                    "lhs": d(a, c) * d(b, e),
                    "rhs": d(a, b) * d(c, e) + d(a, e) * d(b, c),
                }
                return False, cases, ce, {}
    return True, cases, None, {"trials": trials}


# --- subcommands ------------------------------------------------------


def _load_tableau(args):
    if args.file:
        with open(args.file) as fh:
            obj = json.load(fh)
    elif args.inline:
        obj = json.loads(args.inline)
    else:
        raise DomainError("provide a tableau with --file or --inline")
    return parse_tableau(obj)


def cmd_web(args) -> int:
    try:
        t = _load_tableau(args)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        return _usage_error(f"malformed tableau: {exc}")
    which = args.which
    try:
        webs = tableau_to_web(t, which="all" if which == "all" else int(which))
    except DomainError as exc:
        return _usage_error(str(exc))
    written = []
    for i, w in enumerate(webs):
        _emit({"index": i, "web": w.to_json()}, args.pretty)
        if args.out:
            os.makedirs(args.out, exist_ok=True)
            base = os.path.join(args.out, f"web_{i}")
            with open(base + ".json", "w") as fh:
                json.dump(w.to_json(), fh, indent=2)
            written.append(base + ".json")
            if args.dot:
                with open(base + ".dot", "w") as fh:
                    fh.write(to_dot(w))
                written.append(base + ".dot")
            if args.tikz:
                with open(base + ".tex", "w") as fh:
                    fh.write(to_tikz(w))
                written.append(base + ".tex")
            if args.png:
                written.append(draw_web(w, base + ".png"))
    if which == "all":
        std, _ = standardize(as_semistandard(t))
        std_webs = tableau_to_web(std, which="all")
        vecs = [invariant_vector(w) for w in std_webs]
        _emit({"attestation": {
            "extensions": len(webs),
            "invariants_equal": all(v == vecs[0] for v in vecs),
        }}, args.pretty)
    if written:
        _emit({"written": written}, args.pretty)
    return 0


def cmd_verify(args) -> int:
    if args.replay:
        try:
            with open(args.replay) as fh:
                report = json.load(fh)
        except (OSError, ValueError) as exc:
            return _usage_error(f"cannot read replay file: {exc}")
        ce = report.get("counterexample", report)
        if ce.get("suite") != "duality":
            return _usage_error("replay supports duality counterexamples")
        still_fails = replay_duality(ce)
        _emit({"replay": ce["suite"], "still_fails": still_fails}, args.pretty)
        return 1 if still_fails else 0

    suite = args.suite
    limits = budgets()
    start = time.monotonic()
    figure_subject = None
    figure_weights = None
    if suite in ("duality", "flip", "positroid", "signs"):
        k = args.k
        if k is None:
            return _usage_error(f"suite {suite} requires --k")
        if not 1 <= k <= limits[suite]:
            return _usage_error(
                f"k={k} outside budget 1..{limits[suite]} for suite {suite}")
        override = None
        if suite == "duality" and args.web:
            try:
                with open(args.web) as fh:
                    override = WebDiagram.from_json(json.load(fh))
            except (OSError, ValueError, KeyError) as exc:
                return _usage_error(f"cannot read web file: {exc}")
        runner = {
            "duality": lambda: suite_duality(k, override, args.row),
            "flip": lambda: suite_flip(k),
            "positroid": lambda: suite_positroid(k),
            "signs": lambda: suite_signs(k),
        }[suite]
        ok, cases, ce, extra = runner()
        params = {"k": k}
        first = enumerate_standard(min(k, 3))[0]
        if suite == "signs":
            figure_subject = sl2_web_of_matching(catalan_bijection(first))
        else:
            figure_subject = tableau_to_web(first, which=0)[0]
    elif suite == "immanant":
        k = args.k
        if k is None:
            return _usage_error("suite immanant requires --k")
        if not 2 <= k <= limits["immanant"]:
            return _usage_error(
                f"k={k} outside budget 2..{limits['immanant']} for suite immanant")
        ok, cases, ce, extra = suite_immanant(k, args.seed)
        params = {"k": k, "seed": args.seed}
        figure_subject = top_cell_graph(k, 2 * k)
    elif suite == "pluecker":
        n = args.n if args.n is not None else 6
        if not 4 <= n <= limits["pluecker"]:
            return _usage_error(
                f"n={n} outside budget 4..{limits['pluecker']} for suite pluecker")
        ok, cases, ce, extra = suite_pluecker(n, args.seed)
        params = {"k": 2, "n": n, "seed": args.seed}
        figure_subject = top_cell_graph(2, n)
        figure_weights = dict(random_network(figure_subject,
                                             Random(args.seed * 1000)).weights)
    else:
        return _usage_error(f"unknown suite {suite}")

    report = {
        "suite": suite,
        "params": params,
        "pass": ok,
        "cases": cases,
        "elapsed": round(time.monotonic() - start, 3),
        "counterexample": ce,
    }
    report.update(extra)
    _emit(report, args.pretty)
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        path = os.path.join(args.out, f"{suite}_report.ndjson")
        with open(path, "w") as fh:
            _emit(report, False, stream=fh)
        if figure_subject is not None:
            draw_web(figure_subject, os.path.join(args.out, f"{suite}_figure.png"),
                     title=f"{suite} suite subject", weights=figure_weights)
    return 0 if ok else 1


def cmd_enumerate(args) -> int:
    limits = budgets()
    k = args.k
    if not 1 <= k <= max(limits.values()):
        return _usage_error(f"k={k} outside budget")
    count = 0
    if args.kind == "syt":
        for t in enumerate_standard(k):
            _emit(t.to_json(), args.pretty)
            count += 1
    elif args.kind == "matchings":
        for m in enumerate_matchings(k):
            _emit(m.to_json(), args.pretty)
            count += 1
    elif args.kind == "webs":
        for t in enumerate_standard(k):
            w = tableau_to_web(t, which=0)[0]
            duals = [{"matching": m.to_json(), "count": a}
                     for m, a in dual_matchings(w)]
            _emit({"tableau": t.to_json(), "web": w.to_json(),
                   "dual_matchings": duals}, args.pretty)
            count += 1
    else:
        return _usage_error(f"unknown kind {args.kind}")
    _emit({"count": count}, args.pretty)
    return 0


def cmd_export(args) -> int:
    try:
        with open(args.file) as fh:
            obj = json.load(fh)
        weights = None
        if "weights" in obj:
            net = PlabicNetwork.from_json(obj)
            w = net.graph
            weights = dict(net.weights)
        else:
            w = WebDiagram.from_json(obj)
    except (OSError, ValueError, KeyError) as exc:
        return _usage_error(f"cannot read diagram: {exc}")
    os.makedirs(args.out, exist_ok=True)
    base = os.path.join(args.out, args.name)
    written = []
    wants = [f for f, on in (("dot", args.dot), ("tikz", args.tikz),
                             ("png", args.png)) if on]
    if not wants:
        wants = ["dot", "tikz", "png"]
    if "dot" in wants:
        with open(base + ".dot", "w") as fh:
            fh.write(to_dot(w, weights))
        written.append(base + ".dot")
    if "tikz" in wants:
        with open(base + ".tex", "w") as fh:
            fh.write(to_tikz(w, weights))
        written.append(base + ".tex")
    if "png" in wants:
        written.append(draw_web(w, base + ".png", weights=weights))
    _emit({"written": written}, args.pretty)
    return 0


# --- argument parsing -------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="webforge",
        description="Tableaux, webs, plabic graphs, and immanants.")
    parser.add_argument("--pretty", action="store_true",
                        help="indent JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p_web = sub.add_parser("web", help="run the tableau-to-web pipeline")
    p_web.add_argument("--file", help="tableau JSON file")
    p_web.add_argument("--inline", help="tableau JSON string")
    p_web.add_argument("--which", default="0",
                       help="extension index or 'all'")
    p_web.add_argument("--out", help="output directory for files")
    p_web.add_argument("--dot", action="store_true")
    p_web.add_argument("--tikz", action="store_true")
    p_web.add_argument("--png", action="store_true")
    p_web.set_defaults(func=cmd_web)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument("suite", nargs="?",
                          choices=["duality", "flip", "positroid",
                                   "immanant", "signs", "pluecker"])
    p_verify.add_argument("--k", type=int)
    p_verify.add_argument("--n", type=int)
    p_verify.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p_verify.add_argument("--web", help="substitute web JSON (duality)")
    p_verify.add_argument("--row", type=int, default=0,
                          help="row replaced by --web")
    p_verify.add_argument("--out", help="write report and figure here")
    p_verify.add_argument("--replay", help="re-check a saved counterexample")
    p_verify.set_defaults(func=cmd_verify)

    p_enum = sub.add_parser("enumerate", help="stream objects as JSON lines")
    p_enum.add_argument("kind", choices=["syt", "matchings", "webs"])
    p_enum.add_argument("--k", type=int, required=True)
    p_enum.set_defaults(func=cmd_enumerate)

    p_export = sub.add_parser("export", help="render a stored diagram")
    p_export.add_argument("--file", required=True, help="web or network JSON")
    p_export.add_argument("--out", required=True)
    p_export.add_argument("--name", default="diagram")
    p_export.add_argument("--dot", action="store_true")
    p_export.add_argument("--tikz", action="store_true")
    p_export.add_argument("--png", action="store_true")
    p_export.set_defaults(func=cmd_export)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify" and not args.replay and not args.suite:
        return _usage_error("verify requires a suite or --replay")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
