"""Command-line interface.

Reports go to stdout as JSON lines; a one-line human summary per report goes
to stderr. Exit status: 0 when a verdict was computed (including negative
ones), 2 on input errors, 3 when an enumeration guard refused the input.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from . import frames as fr
from . import formats, poly, search, subspaces
from .examples import (
    gen_r3_hyperplane_quintet,
    gen_r3_quintet,
    gen_r4_six_hyperplanes,
    gen_rd_family,
    is_r4_six,
    r4_six_sturm_reference,
)
from .linalg import DEFAULT_EPS, EXACT
from .reconstruct import measure, reconstruct_brute

PROOF = search.PROOF
EVIDENCE = search.EVIDENCE


@dataclass
class Report:
    check: str
    verdict: object
    certainty: str
    payload: dict = field(default_factory=dict)
    backend: str = EXACT
    seed: int | None = None
    tolerances: dict = field(default_factory=dict)
    wall_time: float | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, default=str)


class InputError(Exception):
    pass


def _read(path: str | None) -> str:
    if path is None or path == "-":
        return sys.stdin.read()
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _rationals(values) -> list[Fraction]:
    out = []
    for v in values:
        try:
            out.append(Fraction(v))
        except (ValueError, ZeroDivisionError):
            raise InputError(f"cannot parse {v!r} as a rational") from None
    return out


def _certainty(backend: str) -> str:
    return PROOF if backend == EXACT else EVIDENCE


def _tol(backend: str) -> dict:
    return {} if backend == EXACT else {"eps": DEFAULT_EPS}


def _emit(report: Report, started: float, timing: bool) -> None:
    if timing:
        report.wall_time = round(time.perf_counter() - started, 6)
    print(report.to_json(), flush=True)
    print(f"{report.check}: {report.verdict} [{report.certainty}]", file=sys.stderr)


def _s(v) -> str:
    return str(v)


def cmd_check_frame(args) -> list[Report]:
    frame = formats.load_frame(_read(args.file), args.backend)
    b = frame.backend
    wanted = [k for k in ("full_spark", "cp", "pr", "tight", "scalable") if getattr(args, k)]
    wanted = wanted or ["full_spark", "cp", "pr", "tight", "scalable"]
    out = []
    for k in wanted:
        if k == "full_spark":
            if len(frame) < frame.dim:
                out.append(Report("full_spark", False, _certainty(b), {"reason": "n < d"}, b, tolerances=_tol(b)))
                continue
            r = fr.full_spark(frame)
            out.append(Report("full_spark", r.full_spark, _certainty(b), {"dependent": r.dependent}, b, tolerances=_tol(b)))
        elif k == "cp":
            r = fr.complement_property(frame, allow_large=args.allow_large)
            out.append(Report("complement_property", r.holds, _certainty(b), {"witness": r.witness}, b, tolerances=_tol(b)))
        elif k == "pr":
            r = fr.does_phase_retrieval(frame, allow_large=args.allow_large)
            out.append(Report("phase_retrieval", r.holds, _certainty(b), {"witness": r.witness}, b, tolerances=_tol(b)))
        elif k == "tight":
            a = fr.is_tight(frame)
            out.append(Report("tight", a is not None, _certainty(b), {"bound": None if a is None else _s(a)}, b, tolerances=_tol(b)))
        elif k == "scalable":
            if not fr.is_frame(frame):
                out.append(Report("scalable", False, _certainty(b), {"reason": "not a frame"}, b, tolerances=_tol(b)))
                continue
            c = fr.scalability(frame)
            payload = {"weights": None if c is None else [_s(w) for w in c.weights], "bound": "1"}
            # float input is decided on the exact binary values of its entries
            out.append(Report("scalable", c is not None, PROOF, payload, EXACT))
    return out


def cmd_check_arrangement(args) -> list[Report]:
    arr = formats.load_arrangement(_read(args.file), args.backend)
    b = arr.backend
    out = []
    did = False
    if args.edidin_witness:
        did = True
        w = subspaces.edidin_verify_witness(arr, _rationals(args.edidin_witness))
        verdict = "deficient" if w.deficient else "spans"
        out.append(Report("edidin_witness", verdict, _certainty(b), search.witness_dict(w), b, tolerances=_tol(b)))
    if args.edidin_search:
        did = True
        r = search.edidin_numeric_falsify(arr, restarts=args.restarts, seed=args.seed)
        verdict = "witness found" if r.witness is not None else "no witness"
        tol = {"tau": r.tau, "max_denominator": search.MAX_DENOMINATOR, **_tol(b)}
        payload = r.to_dict()
        if r.witness is None and is_r4_six(arr):
            payload["cross_reference"] = r4_six_sturm_reference()
        out.append(Report("edidin_search", verdict, r.certainty, payload, b, seed=args.seed, tolerances=tol))
    if args.weighted_tight is not None:
        did = True
        weights = _rationals(args.weighted_tight)
        if b != EXACT:
            weights = [float(v) for v in weights]
        w = subspaces.weighted_tight_check(arr, weights)
        payload = {} if w is None else {"bound": _s(w.bound), "complement_bound": _s(w.complement_bound)}
        out.append(Report("weighted_tight", w is not None, _certainty(b), payload, b, tolerances=_tol(b)))
    if args.fusion_scalable:
        did = True
        c = subspaces.fusion_scalability(arr)
        payload = {"weights": None if c is None else [_s(v) for v in c]}
        if c is not None:
            payload["implies"] = "norm retrieval for the arrangement and its perps"
        out.append(Report("fusion_scalable", c is not None, PROOF, payload, EXACT))
    if args.min_count or not did:
        out.append(_min_count(arr))
    return out


def _min_count(arr) -> Report:
    n, d, b = len(arr), arr.dim, arr.backend
    if not arr.all_hyperplanes:
        return Report("min_count", "not applicable", PROOF, {"reason": "not all hyperplanes", "n": n, "d": d}, b)
    if n <= 2 * d - 3:
        w = subspaces.edidin_small_n_witness(arr)
        return Report("min_count", False, _certainty(b), {"n": n, "d": d, "witness": search.witness_dict(w)}, b, tolerances=_tol(b))
    if n == 2 * d - 2:
        w = subspaces.minimal_fullspark_necessity(arr)
        if w is not None:
            return Report("min_count", False, _certainty(b), {"n": n, "d": d, "witness": search.witness_dict(w)}, b, tolerances=_tol(b))
        return Report("min_count", "necessary conditions hold", _certainty(b), {"n": n, "d": d, "normals_full_spark": True}, b, tolerances=_tol(b))
    return Report("min_count", "necessary conditions hold", PROOF, {"n": n, "d": d}, b)


def cmd_perp(args) -> None:
    doc = formats.parse_json(_read(args.file))
    if isinstance(doc, dict) and "vectors" in doc:
        frame = formats.frame_from_dict(doc, args.backend)
        print(formats.dumps(formats.arrangement_to_dict(subspaces.arrangement_from_perps(frame))))
    else:
        arr = formats.arrangement_from_dict(doc, args.backend)
        print(formats.dumps(formats.arrangement_to_dict(subspaces.perp_arrangement(arr))))


def cmd_gen(args) -> None:
    if args.family == "r3-quintet":
        obj = gen_r3_quintet().obj
    elif args.family == "rd-family":
        if args.d is None:
            raise InputError("rd-family needs --d")
        xs = _rationals(args.xs) if args.xs else None
        obj = gen_rd_family(args.d, xs).obj
    elif args.family == "r3-hyperplanes":
        obj = gen_r3_hyperplane_quintet().obj
    else:
        obj = gen_r4_six_hyperplanes().obj
    doc = formats.frame_to_dict(obj) if isinstance(obj, fr.Frame) else formats.arrangement_to_dict(obj)
    print(formats.dumps(doc))


def cmd_sturm(args) -> list[Report]:
    embedded = poly.f0_dataset()
    if args.f0:
        f = embedded
        source = "embedded f0"
    else:
        if args.polyfile is None:
            raise InputError("sturm needs a polynomial file or --f0")
        try:
            f = poly.parse_bivariate(_read(args.polyfile))
        except ValueError as exc:
            raise InputError(f"{args.polyfile}: {exc}") from None
        source = args.polyfile
    p = poly.specialize(f)
    if not p:
        raise InputError("polynomial vanishes identically after setting x34 = 1")
    interval = None
    if args.interval:
        interval = tuple(_rationals(args.interval))
    try:
        count = poly.count_real_roots(p, interval)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    payload = {
        "source": source,
        "real_roots": count,
        "interval": None if interval is None else [_s(v) for v in interval],
        "degree": p.degree,
        "chain_length": len(poly.sturm_chain(p)),
        "matches_f0": f == embedded,
    }
    if args.f0:
        payload["checksum"] = poly.f0_checksum()
        payload["data_file_matches"] = poly.parse_bivariate(poly.f0_data_file_text()) == embedded
        payload["homogeneous_degree_10"] = poly.is_homogeneous(embedded, 10)
        payload["reversed_real_roots"] = poly.count_real_roots(poly.specialize_x44(embedded))
    return [Report("sturm", f"real roots: {count}", PROOF, payload, EXACT)]


def cmd_reconstruct(args) -> list[Report]:
    frame = formats.load_frame(_read(args.framefile), args.backend)
    x = _rationals(args.signal)
    if len(x) != frame.dim:
        raise InputError(f"--signal needs {frame.dim} entries, got {len(x)}")
    if frame.backend != EXACT:
        x = [float(v) for v in x]
    meas = measure(frame, x)
    classes = reconstruct_brute(frame, meas)
    payload = {
        "magnitudes": [_s(v) for v in meas.magnitudes],
        "classes": [[_s(v) for v in c] for c in classes],
    }
    verdict = "unique" if len(classes) == 1 else "ambiguous"
    return [Report("reconstruct", verdict, _certainty(frame.backend), payload, frame.backend, tolerances=_tol(frame.backend))]


def cmd_zprobe(args) -> list[Report]:
    arr = formats.load_arrangement(_read(args.file), args.backend)
    r = search.z_random_probe(arr, trials=args.trials, seed=args.seed)
    verdict = "nonzero member found" if r.exact_members else "no nonzero member found"
    certainty = PROOF if r.exact_members else EVIDENCE
    payload = r.to_dict()
    if not r.exact_members and is_r4_six(arr):
        payload["cross_reference"] = r4_six_sturm_reference()
    return [Report("zprobe", verdict, certainty, payload, arr.backend, seed=args.seed,
                   tolerances={"max_denominator": search.MAX_DENOMINATOR})]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="phaselab", description="Phase retrieval checks for frames and hyperplane arrangements.")
    p.add_argument("--backend", choices=["exact", "float"], default=None, help="override the scalar backend of the input")
    p.add_argument("--timing", action="store_true", help="record wall time in reports (breaks byte-identical reruns)")
    sub = p.add_subparsers(dest="command", required=True)

    check = sub.add_parser("check", help="run checks on a frame or arrangement file")
    csub = check.add_subparsers(dest="kind", required=True)
    cf = csub.add_parser("frame")
    cf.add_argument("file", nargs="?")
    cf.add_argument("--full-spark", dest="full_spark", action="store_true")
    cf.add_argument("--cp", action="store_true")
    cf.add_argument("--pr", action="store_true")
    cf.add_argument("--tight", action="store_true")
    cf.add_argument("--scalable", action="store_true")
    cf.add_argument("--allow-large", action="store_true", help="lift the n <= 30 enumeration guard")
    cf.set_defaults(func=cmd_check_frame)

    ca = csub.add_parser("arrangement")
    ca.add_argument("file", nargs="?")
    ca.add_argument("--edidin-witness", nargs="+", metavar="X")
    ca.add_argument("--edidin-search", action="store_true")
    ca.add_argument("--restarts", type=int, default=200)
    ca.add_argument("--seed", type=int, default=0)
    ca.add_argument("--weighted-tight", action="store_true", dest="weighted_tight_flag")
    ca.add_argument("--weights", nargs="+", dest="weighted_tight_values")
    ca.add_argument("--fusion-scalable", action="store_true")
    ca.add_argument("--min-count", action="store_true")
    ca.set_defaults(func=cmd_check_arrangement)

    pp = sub.add_parser("perp", help="orthogonal complements of a frame or arrangement")
    pp.add_argument("file", nargs="?")
    pp.set_defaults(func=cmd_perp)

    g = sub.add_parser("gen", help="emit an example family as a frame or arrangement file")
    g.add_argument("family", choices=["r3-quintet", "rd-family", "r3-hyperplanes", "r4-six"])
    g.add_argument("--d", type=int)
    g.add_argument("--xs", nargs="+")
    g.set_defaults(func=cmd_gen)

    s = sub.add_parser("sturm", help="count real roots of f(1, t) for a bivariate polynomial file")
    s.add_argument("polyfile", nargs="?")
    s.add_argument("--f0", action="store_true")
    s.add_argument("--interval", nargs=2, metavar=("A", "B"))
    s.set_defaults(func=cmd_sturm)

    r = sub.add_parser("reconstruct", help="brute-force phaseless reconstruction")
    r.add_argument("framefile")
    r.add_argument("--signal", nargs="+", required=True)
    r.set_defaults(func=cmd_reconstruct)

    z = sub.add_parser("zprobe", help="randomized search for nonzero rank <= 2 members")
    z.add_argument("file", nargs="?")
    z.add_argument("--trials", type=int, default=1000)
    z.add_argument("--seed", type=int, default=0)
    z.set_defaults(func=cmd_zprobe)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "kind", None) == "arrangement":
        if args.weighted_tight_flag and not args.weighted_tight_values:
            parser.error("--weighted-tight needs --weights")
        args.weighted_tight = args.weighted_tight_values if args.weighted_tight_flag else None
    started = time.perf_counter()
    try:
        reports = args.func(args)
    except fr.GuardExceeded as exc:
        print(f"guard exceeded: {exc}", file=sys.stderr)
        return 3
    except (InputError, formats.FormatError, json.JSONDecodeError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    for rep in reports or []:
        _emit(rep, started, args.timing)
    return 0


if __name__ == "__main__":
    sys.exit(main())
