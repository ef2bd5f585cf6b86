"""Command-line interface.

One subcommand per construction or recognition procedure plus the
derived numerical queries.  All machine output goes through ``--json``
with every integer rendered as a decimal string, so values survive any
JSON parser bit-exactly; identical invocations produce byte-identical
output.  Exit codes: 0 success, 1 recognition failure, 2 malformed
input or usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cohomology import divisor_info, hodge, hodge_table, rational_homology
from .fan import FanMatrix, FanRejection, canonical_fan, fan_from_weights, recognize_fan
from .lattice import count_interior, count_points, face_histogram
from .linalg import IntMatrix
from .polytope import LatticeSimplex, PolytopeRejection, polytope_of, recognize_polytope
from .weights import WeightsVector, is_reduced, isomorphic, reduction_data


class InputError(ValueError):
    """Malformed user input (exit code 2)."""


def _parse_weights(text: str) -> WeightsVector:
    try:
        return WeightsVector.parse(text)
    except ValueError as exc:
        raise InputError(f"bad weights {text!r}: {exc}") from exc


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON from {path}: {exc}") from exc


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(", ", ": "))


def _fmt_matrix(m: IntMatrix, weights=None) -> str:
    cells = [[str(x) for x in row] for row in m.entries]
    tag = [str(w) for w in weights] if weights is not None else None
    widths = [max(len(cells[i][j]) for i in range(m.rows)) for j in range(m.cols)]
    if tag:
        widths = [max(w, len(t)) for w, t in zip(widths, tag)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(row, widths)) for row in cells]
    if tag:
        lines.append("-" * len(lines[0]))
        lines.append("  ".join(t.rjust(w) for t, w in zip(tag, widths)))
    return "\n".join(lines)


def _parse_m_range(text: str) -> tuple[int, int]:
    if ".." not in text:
        raise InputError(f"bad range {text!r}: expected LO..HI")
    lo, _, hi = text.partition("..")
    try:
        return int(lo, 10), int(hi, 10)
    except ValueError as exc:
        raise InputError(f"bad range {text!r}: {exc}") from exc


# ---------------------------------------------------------------------------
# subcommand handlers: each returns (json_payload, human_text)


def _cmd_reduce(args):
    q = _parse_weights(args.weights)
    rd = reduction_data(q)
    payload = {
        "weights": q.to_json(),
        "d": [str(x) for x in rd.d],
        "a_coeffs": [str(x) for x in rd.a_coeffs],
        "a": str(rd.a),
        "delta": str(rd.delta),
        "delta_reduced": str(rd.delta_reduced),
        "reduced": rd.reduced.to_json(),
        "is_reduced": is_reduced(q),
    }
    human = (f"weights       {q}\n"
             f"d             ({','.join(str(x) for x in rd.d)})\n"
             f"a_coeffs      ({','.join(str(x) for x in rd.a_coeffs)})\n"
             f"a             {rd.a}\n"
             f"delta         {rd.delta}\n"
             f"delta'        {rd.delta_reduced}\n"
             f"reduced       {rd.reduced}")
    return payload, human


def _fan_payload(fan: FanMatrix):
    human = _fmt_matrix(fan.v, weights=fan.weights.q)
    return fan.to_json(), human


def _cmd_fan(args):
    q = _parse_weights(args.weights)
    fan = canonical_fan(q) if args.canonical else fan_from_weights(q)
    return _fan_payload(fan)


def _cmd_recognize_fan(args):
    try:
        m = FanMatrix.matrix_from_json(_load_json(args.matrix))
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise InputError(f"bad matrix payload in {args.matrix}: {exc}") from exc
    fan = recognize_fan(m)
    return _fan_payload(fan)


def _cmd_polytope(args):
    q = _parse_weights(args.weights)
    simplex = polytope_of(q, args.m)
    human = "\n".join("(" + ",".join(str(x) for x in v) + ")" for v in simplex.vertices)
    return simplex.to_json(), human


def _cmd_recognize_polytope(args):
    try:
        simplex = LatticeSimplex.from_json(_load_json(args.vertices))
    except (KeyError, TypeError, IndexError, ValueError) as exc:
        raise InputError(f"bad vertices payload in {args.vertices}: {exc}") from exc
    polarized, fan = recognize_polytope(simplex)
    payload = {
        "weights": polarized.weights.to_json(),
        "weights_sorted": [str(x) for x in sorted(polarized.weights.q)],
        "m": str(polarized.polarization),
        "fan": fan.to_json(),
    }
    human = (f"weights       {polarized.weights}\n"
             f"sorted        ({','.join(str(x) for x in sorted(polarized.weights.q))})\n"
             f"polarization  {polarized.polarization}\n"
             f"fan\n{_fmt_matrix(fan.v, weights=fan.weights.q)}")
    return payload, human


def _cmd_lattice_points(args):
    q = _parse_weights(args.weights)
    if args.m < 0:
        raise InputError("dilation factor must be nonnegative")
    payload = {"weights": q.to_json(), "m": str(args.m)}
    lines = []
    if args.interior:
        if args.m < 1:
            raise InputError("interior counts need m >= 1")
        k = count_interior(q, args.m)
        payload["interior"] = str(k)
        lines.append(f"interior points  {k}")
    else:
        k = count_points(q, args.m)
        payload["count"] = str(k)
        lines.append(f"lattice points   {k}")
    if args.histogram:
        hist = face_histogram(q, args.m)
        payload["histogram"] = {str(s): str(c) for s, c in sorted(hist.items())}
        for s, c in sorted(hist.items()):
            lines.append(f"  face dim {s}: {c}")
    return payload, "\n".join(lines)


def _cmd_cohom(args):
    q = _parse_weights(args.weights)
    if args.table:
        if args.m_range is None:
            raise InputError("--table needs --m-range LO..HI")
        table = hodge_table(q, _parse_m_range(args.m_range))
        human_lines = [f"m={m} p={p} q={qq}: {h}"
                       for (p, qq, m), h in sorted(table.entries.items(),
                                                   key=lambda kv: (kv[0][2], kv[0][0], kv[0][1]))
                       if h != 0]
        return table.to_json(), "\n".join(human_lines) or "all entries vanish"
    if args.p is None or args.q is None or args.m is None:
        raise InputError("cohom needs -p, -q and -m (or --table with --m-range)")
    try:
        h = hodge(q, args.p, args.q, args.m)
    except IndexError as exc:
        raise InputError(str(exc)) from exc
    payload = {"weights": q.to_json(), "p": args.p, "q": args.q,
               "m": str(args.m), "h": str(h)}
    return payload, f"h^{args.q} Omega^{args.p}({args.m}) = {h}"


def _cmd_divisors(args):
    q = _parse_weights(args.weights)
    info = divisor_info(q)
    payload = {
        "weights": q.to_json(),
        "chow_generator": [str(x) for x in info.chow_generator],
        "picard_index": str(info.picard_index),
        "canonical_degree": str(info.canonical_degree),
        "gorenstein": info.gorenstein,
        "fano": info.fano,
        "betti_even": [str(x) for x in rational_homology(q)[::2]],
    }
    human = (f"chow generator    ({','.join(str(x) for x in info.chow_generator)})\n"
             f"picard index      {info.picard_index}\n"
             f"canonical degree  {info.canonical_degree}\n"
             f"gorenstein        {'yes' if info.gorenstein else 'no'}\n"
             f"fano              {'yes' if info.fano else 'no'}")
    return payload, human


def _cmd_gorenstein(args):
    q = _parse_weights(args.weights)
    info = divisor_info(q)
    payload = {"weights": q.to_json(), "gorenstein": info.gorenstein,
               "fano": info.fano, "canonical_degree": str(info.canonical_degree)}
    human = (f"gorenstein  {'yes' if info.gorenstein else 'no'}\n"
             f"fano        {'yes' if info.fano else 'no'}")
    return payload, human


def _cmd_iso(args):
    q1 = _parse_weights(args.weights)
    q2 = _parse_weights(args.other)
    if q1.n != q2.n:
        raise InputError(f"dimension mismatch: {q1.n} vs {q2.n}")
    same = isomorphic(q1, q2)
    rd1 = reduction_data(q1)
    payload = {"weights": q1.to_json(), "other": q2.to_json(),
               "isomorphic": same,
               "reduced": [str(x) for x in sorted(rd1.reduced.q)]}
    human = f"isomorphic  {'yes' if same else 'no'}"
    return payload, human


def build_parser() -> argparse.ArgumentParser:
    # the output flags are accepted both before and after the subcommand;
    # SUPPRESS keeps the subparser from clobbering a value set up front
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="machine-readable output")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="suppress stdout")

    parser = argparse.ArgumentParser(
        prog="wps",
        parents=[common],
        description="Toric data of weighted projective spaces: exact fans, "
                    "polytopes, divisor classes and cohomology dimensions.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        return p

    def wflag(p):
        p.add_argument("--weights", required=True,
                       help="comma-separated positive integers, e.g. 2,3,4,15,25")

    p = add("reduce", "reduction data of a weights vector")
    wflag(p)
    p.set_defaults(handler=_cmd_reduce)

    p = add("fan", "produce a fan matrix from weights")
    wflag(p)
    p.add_argument("--canonical", action="store_true",
                   help="return the unique fan whose square block is a nonnegative HNF")
    p.set_defaults(handler=_cmd_fan)

    p = add("recognize-fan", "recognize a fan matrix from a JSON file")
    p.add_argument("--matrix", required=True,
                   help="JSON file: rows array or {\"columns\": ...} object")
    p.set_defaults(handler=_cmd_recognize_fan)

    p = add("polytope", "polytope of a polarized space")
    wflag(p)
    p.add_argument("-m", type=int, default=1, help="polarization multiple (default 1)")
    p.set_defaults(handler=_cmd_polytope)

    p = add("recognize-polytope", "recognize a lattice simplex from a JSON vertices file")
    p.add_argument("--vertices", required=True,
                   help="JSON file: {\"vertices\": [[...], ...]}")
    p.set_defaults(handler=_cmd_recognize_polytope)

    p = add("lattice-points", "lattice point counts of polytope dilates")
    wflag(p)
    p.add_argument("-m", type=int, required=True, help="dilation factor")
    p.add_argument("--interior", action="store_true", help="count interior points only")
    p.add_argument("--histogram", action="store_true",
                   help="also report counts per smallest-face dimension")
    p.set_defaults(handler=_cmd_lattice_points)

    p = add("cohom", "twisted p-form cohomology dimensions")
    wflag(p)
    p.add_argument("-p", type=int, default=None, help="form degree")
    p.add_argument("-q", type=int, default=None, help="cohomology degree")
    p.add_argument("-m", type=int, default=None, help="twist")
    p.add_argument("--table", action="store_true", help="emit the full table")
    p.add_argument("--m-range", default=None, help="twist range LO..HI for --table")
    p.set_defaults(handler=_cmd_cohom)

    p = add("divisors", "divisor class data")
    wflag(p)
    p.set_defaults(handler=_cmd_divisors)

    p = add("gorenstein", "Gorenstein / Fano test")
    wflag(p)
    p.set_defaults(handler=_cmd_gorenstein)

    p = add("iso", "isomorphism test for two weight vectors")
    wflag(p)
    p.add_argument("--other", required=True, help="second weights vector")
    p.set_defaults(handler=_cmd_iso)

    return parser


def main(argv=None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    # argparse refuses option values starting with "-" unless glued with
    # "="; ranges like "-3..3" are documented, so glue them here
    patched = []
    skip = False
    for i, tok in enumerate(argv):
        if skip:
            skip = False
            continue
        if tok == "--m-range" and i + 1 < len(argv):
            patched.append(f"--m-range={argv[i + 1]}")
            skip = True
        else:
            patched.append(tok)
    parser = build_parser()
    args = parser.parse_args(patched)
    as_json = getattr(args, "json", False)
    quiet = getattr(args, "quiet", False)
    try:
        payload, human = args.handler(args)
    except (FanRejection, PolytopeRejection) as exc:
        print(f"rejected: {exc}", file=sys.stderr)
        if as_json and not quiet:
            print(_dump({"error": str(exc), "code": exc.code}))
        return 1
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if not quiet:
        print(_dump(payload) if as_json else human)
    return 0


if __name__ == "__main__":
    sys.exit(main())
