"""Command-line interface.

Exit codes: 0 success, 1 usage, 2 precondition failure, 3 identity mismatch.
All documents go to stdout as JSON (or text with ``--format text``);
diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__
from .cartan import (
    GCM,
    DiagramType,
    classify_subdiagram,
    gcm_from_json,
    positive_roots,
    try_symmetrize,
)
from .characters import (
    bggl_euler_character,
    ch_parabolic_verma_alternating,
    ch_parabolic_verma_atiyahbott,
    ch_parabolic_verma_induction,
    denominator_identity,
    rank2_trivial_identity,
)
from .errors import KMError, RequiresSymmetrizable
from .fixtures import NAMED, named
from .hull import hull_stabilizer, ray_decomposition, wt_via_hull
from .weights import (
    ModuleSpec,
    Undetermined,
    WeightSet,
    integrability_of_simple,
    lepowsky_complete,
    potential_integrability,
    wt_highest_weight_module,
    wt_parabolic_via_orbit,
    wt_parabolic_verma,
    weyl_kac_weight_series,
)
from .weyl import Weight, all_group_elements, isotropy_is_finite, parse_rational

EXIT_OK, EXIT_USAGE, EXIT_PRECONDITION, EXIT_MISMATCH = 0, 1, 2, 3
ROUTES = ("slice", "orbit", "hull", "weylkac")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_USAGE)


# ---------------------------------------------------------------------------
# argument helpers

def load_gcm(spec: str) -> GCM:
    if spec in NAMED:
        return named(spec)
    if os.path.exists(spec):
        with open(spec) as fh:
            return gcm_from_json(json.load(fh))
    raise UsageError(f"{spec!r} is neither a named fixture nor a file")


def parse_vector(text: str, n: int) -> tuple:
    parts = [p for p in text.replace(" ", "").split(",") if p]
    if len(parts) != n:
        raise UsageError(f"expected {n} comma-separated rationals, got {text!r}")
    try:
        return tuple(parse_rational(p) for p in parts)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"cannot parse rationals from {text!r}") from None


def parse_index_set(text: str | None, n: int, default=None) -> frozenset:
    if text is None:
        if default is None:
            raise UsageError("an index set is required")
        return frozenset(default)
    text = text.strip()
    if text.lower() == "all":
        return frozenset(range(n))
    if text == "":
        return frozenset()
    try:
        out = frozenset(int(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise UsageError(f"cannot parse index set {text!r}") from None
    if not all(0 <= i < n for i in out):
        raise UsageError(f"index set {text!r} out of range for rank {n}")
    return out


def _digest(payload) -> str:
    blob = json.dumps(payload, sort_keys=True, separators=(",", ":"), default=str)
    return "sha256:" + hashlib.sha256(blob.encode()).hexdigest()


def manifest(args, gcm: GCM | None, started: float, **cutoffs) -> dict:
    inputs = {k: v for k, v in sorted(vars(args).items())
              if k not in ("func", "format", "timing")}
    if gcm is not None:
        inputs["matrix"] = [list(r) for r in gcm.matrix]
    return {
        "command": args.command,
        "input_digest": _digest(inputs),
        "cutoffs": {k: v for k, v in cutoffs.items()},
        "version": __version__,
        "elapsed_seconds": round(time.perf_counter() - started, 6) if args.timing else None,
    }


def emit(args, doc: dict, text_lines: list[str] | None = None) -> None:
    if args.format == "text" and text_lines is not None:
        print("\n".join(text_lines))
    else:
        print(json.dumps(doc, indent=2))


def _fmt_offset(m) -> str:
    return "(" + ", ".join(str(x) for x in m) + ")"


# ---------------------------------------------------------------------------
# commands

def cmd_roots(args) -> int:
    started = time.perf_counter()
    gcm = load_gcm(args.gcm)
    sym = try_symmetrize(gcm)
    if sym is None:
        raise RequiresSymmetrizable(
            "root multiplicities need a symmetrizable matrix")
    datum = positive_roots(gcm, sym, args.height)
    man = manifest(args, gcm, started, N=args.height)
    rows = [{"root": list(b), "mult": datum.mult[b], "real": datum.is_real(b)}
            for b in datum.roots()]
    if args.format == "jsonl":
        print(json.dumps({"manifest": man}))
        for r in rows:
            print(json.dumps(r))
        return EXIT_OK
    text = [f"{'root':<16} {'mult':>4}  kind"]
    text += [f"{_fmt_offset(r['root']):<16} {r['mult']:>4}  "
             f"{'real' if r['real'] else 'imaginary'}" for r in rows]
    emit(args, {"manifest": man, "roots": rows}, text)
    return EXIT_OK


def _route(gcm, c, J, N, name) -> WeightSet:
    if name == "slice":
        return wt_parabolic_verma(gcm, c, J, N)
    if name == "orbit":
        return wt_parabolic_via_orbit(gcm, c, J, N)
    if name == "hull":
        return wt_via_hull(gcm, c, J, N)
    if name == "weylkac":
        series = weyl_kac_weight_series(gcm, c, N, J)
        return WeightSet(tuple(c), series.support(), N)
    raise UsageError(f"unknown method {name!r}")


def applicable_routes(gcm, c, J) -> list[str]:
    routes = ["slice"]
    lam = Weight.at(tuple(c))
    finite_iso = isotropy_is_finite(gcm, lam, J)
    if finite_iso:
        routes.append("orbit")
    if classify_subdiagram(gcm, J) is DiagramType.FINITE:
        routes.append("hull")
    if finite_iso:
        routes.append("weylkac")
    return routes


def cmd_weights(args) -> int:
    started = time.perf_counter()
    gcm = load_gcm(args.gcm)
    c = parse_vector(args.hw, gcm.rank)
    if args.simple:
        J = integrability_of_simple(c)
    else:
        J = parse_index_set(args.integrability, gcm.rank)
    N = args.cutoff
    man = manifest(args, gcm, started, N=N, max_steps=args.max_steps)
    spec = ModuleSpec(c, J)
    Jp = potential_integrability(spec)
    base = {"manifest": man, "basepoint": [str(x) for x in c],
            "integrability": sorted(J), "potential_integrability": sorted(Jp),
            "lepowsky_complete": lepowsky_complete(gcm, c, J)}

    verdict = wt_highest_weight_module(gcm, spec, N)
    if isinstance(verdict, Undetermined):
        doc = {**base, **verdict.to_json()}
        emit(args, doc, [f"undetermined: {verdict.reason}",
                         f"potential integrability: {sorted(Jp)}"])
        return EXIT_OK

    methods = applicable_routes(gcm, c, J) if args.method == "all" else [args.method]
    results = {name: _route(gcm, c, J, N, name) for name in methods}
    reference = results[methods[0]]
    mismatches = {}
    for name, ws in results.items():
        if ws.offsets != reference.offsets:
            mismatches[name] = {
                "missing": [list(m) for m in sorted(reference.offsets - ws.offsets)],
                "extra": [list(m) for m in sorted(ws.offsets - reference.offsets)],
            }
    doc = {**base, "method": args.method, "routes": methods,
           "agreement": not mismatches, **reference.to_json()}
    if mismatches:
        doc["symmetric_difference"] = mismatches
    text = [f"routes: {', '.join(methods)}",
            f"agreement: {str(not mismatches).lower()}",
            f"{len(reference)} offsets (height <= {N}):"]
    text += ["  " + _fmt_offset(m) for m in reference.sorted_offsets()]
    emit(args, doc, text)
    if mismatches:
        print(f"route disagreement: {sorted(mismatches)}", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def _check_denominator(args, gcm):
    res = denominator_identity(gcm)
    return res.holds, {"roots": res.roots, "simple_systems": res.simple_systems,
                       "terms": len(res.lhs)}


def _series_diff(a, b) -> list:
    keys = sorted(set(a.coeffs) | set(b.coeffs), key=lambda m: (sum(m), m))
    return [{"offset": list(m), "left": a[m], "right": b[m]}
            for m in keys if a[m] != b[m]]


def _check_bggl(args, gcm):
    c = parse_vector(args.hw, gcm.rank) if args.hw else (Fraction(1),) * gcm.rank
    J = parse_index_set(args.J, gcm.rank, integrability_of_simple(c))
    J_sub = parse_index_set(args.J_sub, gcm.rank, ())
    lhs = bggl_euler_character(gcm, c, J_sub, J, args.cutoff, args.length)
    rhs = ch_parabolic_verma_induction(gcm, c, J, args.cutoff)
    diff = _series_diff(lhs, rhs)
    return not diff, {"basepoint": [str(x) for x in c], "J": sorted(J),
                      "J_sub": sorted(J_sub), "terms": len(rhs.coeffs),
                      "differences": diff}


def _check_atiyah_bott(args, gcm):
    c = parse_vector(args.hw, gcm.rank) if args.hw else (Fraction(1),) * gcm.rank
    J = parse_index_set(args.J, gcm.rank, integrability_of_simple(c))
    ind = ch_parabolic_verma_induction(gcm, c, J, args.cutoff)
    alt = ch_parabolic_verma_alternating(gcm, c, J, args.cutoff)
    ab = ch_parabolic_verma_atiyahbott(gcm, c, J, args.cutoff)
    diff = {"alternating": _series_diff(ind, alt), "atiyah_bott": _series_diff(ind, ab)}
    ok = not diff["alternating"] and not diff["atiyah_bott"]
    return ok, {"basepoint": [str(x) for x in c], "J": sorted(J),
                "terms": len(ind.coeffs), "differences": diff}


def _check_rank2(args, gcm):
    length = args.length if args.length is not None else 2 * args.cutoff + 4
    report = rank2_trivial_identity(gcm, args.cutoff, length)
    return report.agree, report.to_json()


def _check_hull_stabilizer(args, gcm):
    c = parse_vector(args.hw, gcm.rank) if args.hw else (Fraction(1),) * gcm.rank
    J = parse_index_set(args.J, gcm.rank, integrability_of_simple(c))
    h = ray_decomposition(gcm, c, J)
    stab = hull_stabilizer(gcm, h)
    expected = len(all_group_elements(gcm, J))
    ok = stab.generators == J and len(stab.elements) == expected
    return ok, {"basepoint": [str(x) for x in c], "J": sorted(J),
                "presentation": h.to_json(), **stab.to_json()}


CHECKS = {
    "denominator": _check_denominator,
    "bggl": _check_bggl,
    "atiyah-bott": _check_atiyah_bott,
    "rank2-imaginary": _check_rank2,
    "hull-stabilizer": _check_hull_stabilizer,
}


def cmd_check(args) -> int:
    started = time.perf_counter()
    gcm = load_gcm(args.gcm)
    ok, details = CHECKS[args.identity](args, gcm)
    man = manifest(args, gcm, started, N=args.cutoff, L=args.length)
    doc = {"manifest": man, "identity": args.identity, "verified": ok, **details}
    text = [f"{args.identity}: {'pass' if ok else 'FAIL'}"]
    if args.identity == "rank2-imaginary":
        text.append(f"{'offset':<10} {'exp':>4} {'obs':>4} {'stable@':>8}")
        text += [f"{_fmt_offset(r['offset']):<10} {r['expected']:>4} "
                 f"{r['observed']:>4} {r['stabilized_at']:>8}"
                 for r in details["offsets"]]
    emit(args, doc, text)
    if not ok:
        print(f"identity {args.identity} failed", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="kmweights",
                description="Weights and characters of Kac-Moody highest weight modules.")
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def common(sp, formats=("json", "text")):
        sp.add_argument("--gcm", "--type", dest="gcm", required=True,
                        help=f"named fixture ({', '.join(NAMED)}) or JSON file")
        sp.add_argument("--format", choices=formats, default="json")
        sp.add_argument("--timing", action="store_true",
                        help="record elapsed time in the manifest")

    r = sub.add_parser("roots", help="positive roots with multiplicities")
    common(r, ("json", "jsonl", "text"))
    r.add_argument("--height", type=int, default=10)
    r.set_defaults(func=cmd_roots)

    w = sub.add_parser("weights", help="weight set of a highest weight module")
    common(w)
    w.add_argument("--hw", required=True, help='highest weight pairings, e.g. "1,-1/2"')
    g = w.add_mutually_exclusive_group(required=True)
    g.add_argument("--simple", action="store_true")
    g.add_argument("--integrability")
    w.add_argument("--cutoff", type=int, default=10)
    w.add_argument("--method", choices=ROUTES + ("all",), default="slice")
    w.add_argument("--max-steps", type=int, default=10_000)
    w.set_defaults(func=cmd_weights)

    c = sub.add_parser("check", help="verify an identity exactly")
    c.add_argument("identity", choices=sorted(CHECKS))
    common(c)
    c.add_argument("--hw")
    c.add_argument("--J")
    c.add_argument("--J'", "--Jsub", dest="J_sub")
    c.add_argument("--cutoff", type=int, default=10)
    c.add_argument("--length", type=int)
    c.set_defaults(func=cmd_check)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        return EXIT_USAGE
    if getattr(args, "cutoff", 0) is not None and getattr(args, "cutoff", 0) < 0:
        print("error: cutoff must be non-negative", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KMError as exc:
        print(json.dumps({"error": type(exc).__name__, "message": str(exc)}))
        print(f"precondition failed: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
