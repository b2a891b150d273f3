"""Command-line interface.

Exit codes: 0 success, 1 usage or schema error, 2 mathematical
validation failure, 3 internal assertion (a degreewise check that a
valid input can never fail -- i.e. a bug trap).
"""

from __future__ import annotations

import argparse
import os
import sys

from .complexes import SimplicialComplex, canon_face
from .errors import SchemaError, VerificationError
from .corpus import builtin_corpus, builtin_names, face_fixture
from .facering import sample_lsop
from .fileformat import canonical_json, load_data, build_triangulation
from .functorial import check_functor_composition, check_monotonicity, \
    induced_map, vanishing_structure_audit
from .linalg import GF, QQ
from .localmodule import (build_resolution, local_h_incexc, local_module,
                          restrict_module, restricted_standalone,
                          verify_exactness)
from .triangulation import is_quasi_geometric, validate_homology_triangulation


def parse_field(text):
    if text == "q":
        return QQ
    if text.startswith("fp:"):
        try:
            return GF(int(text[3:]))
        except ValueError as exc:
            raise SchemaError(str(exc)) from exc
    raise SchemaError("field must be 'q' or 'fp:<prime>', got %r" % text)


def parse_face(text):
    if not text:
        return ()
    return canon_face(x for x in text.split(",") if x)


def default_seed():
    return int(os.environ.get("LOCALH_SEED", "0"))


def resolve_input(source):
    """Triangulation file data from a path, '-', or builtin:<name>."""
    if source.startswith("builtin:"):
        return builtin_corpus(source[len("builtin:"):])
    return load_data(source)


def _emit(args, payload):
    if args.format == "text":
        for line in _text_lines(payload):
            print(line)
    else:
        sys.stdout.write(canonical_json(payload))


def _text_lines(payload, prefix=""):
    if isinstance(payload, dict):
        for k in sorted(payload):
            v = payload[k]
            if isinstance(v, (dict, list)):
                yield "%s%s:" % (prefix, k)
                yield from _text_lines(v, prefix + "  ")
            else:
                yield "%s%s: %s" % (prefix, k, v)
    elif isinstance(payload, list):
        for v in payload:
            if isinstance(v, (dict, list)):
                yield from _text_lines(v, prefix + "  ")
            else:
                yield "%s- %s" % (prefix, v)
    else:
        yield "%s%s" % (prefix, payload)


def cmd_validate(args):
    data = resolve_input(args.input)
    t = build_triangulation(data)
    report = validate_homology_triangulation(
        t, mode=args.mode, characteristic=args.field.characteristic)
    qg_ok, qg_witness = is_quasi_geometric(t)
    payload = report.as_dict()
    payload["name"] = data["name"]
    payload["quasi_geometric"] = qg_ok
    if qg_witness is not None:
        payload["quasi_geometric_witness"] = {
            "face": list(qg_witness[0]), "carrier_union": list(qg_witness[1])}
    payload["ok"] = report.ok and qg_ok
    _emit(args, payload)
    return 0 if payload["ok"] else 2


def cmd_local_h(args):
    data = resolve_input(args.input)
    t = build_triangulation(data)
    e = parse_face(args.face)
    payload = {"name": data["name"], "e": list(e), "method": args.method}
    ell_inc = ell_mod = None
    if args.method in ("incexc", "both"):
        ell_inc = local_h_incexc(t, e)
        payload["ell_incexc"] = list(ell_inc)
    if args.method in ("module", "both"):
        lsop = sample_lsop(t, e, args.seed, field=args.field)
        mod = local_module(t, e, lsop, args.max_degree, args.field)
        ell_mod = mod.local_h
        payload["ell_module"] = list(ell_mod)
    payload["ell"] = list(ell_mod if ell_mod is not None else ell_inc)
    if args.method == "both":
        payload["agreement"] = tuple(ell_inc) == tuple(ell_mod)
        if not payload["agreement"]:
            raise VerificationError(
                "module and inclusion-exclusion local h-vectors disagree")
    _emit(args, payload)
    return 0


def cmd_resolution(args):
    data = resolve_input(args.input)
    t = build_triangulation(data)
    e = parse_face(args.face)
    lsop = sample_lsop(t, e, args.seed, field=args.field)
    res = build_resolution(t, e, lsop)
    payload = {
        "name": data["name"],
        "e": list(e),
        "d": res.d,
        "b": res.b,
        "v_order": list(res.v_order),
        "summand_counts": [len(s) for s in res.summands],
    }
    if args.verify:
        report = verify_exactness(t, res, lsop, args.max_degree, args.field)
        payload["exactness"] = report.as_dict()
        if not report.ok:
            raise VerificationError("resolution is not exact: %r" % report.failures)
    _emit(args, payload)
    return 0


def cmd_map(args):
    data = resolve_input(args.input)
    t = build_triangulation(data)
    e = parse_face(args.face)
    ep = parse_face(args.face_prime)
    phi = induced_map(t, e, ep, sample_lsop(t, e, args.seed, field=args.field),
                      seed=args.seed, m_max=args.max_degree, field=args.field)
    payload = {
        "name": data["name"],
        "e": list(e),
        "e_prime": list(ep),
        "ell_source": list(phi.source.local_h),
        "ell_target": list(phi.target.local_h),
        "matrix_shapes": {str(m): [mat.nrows, mat.ncols]
                          for m, mat in phi.matrices.items()},
    }
    if args.check_surjective:
        try:
            payload["surjective"] = check_monotonicity(phi)
            payload["monotonicity"] = "verified" if payload["surjective"] else "failed"
        except ValueError:
            payload["monotonicity"] = "precondition-rejected"
    if args.check_compose is not None:
        epp = parse_face(args.check_compose)
        payload["composition"] = check_functor_composition(
            t, e, ep, epp, phi.source_lsop, seed=args.seed, field=args.field)
    _emit(args, payload)
    return 0


def cmd_audit(args):
    data = resolve_input(args.input)
    t = build_triangulation(data)
    e = parse_face(args.face)
    report = vanishing_structure_audit(t, e, seed=args.seed, field=args.field)
    payload = report.as_dict()
    payload["name"] = data["name"]
    payload["e"] = list(e)
    _emit(args, payload)
    return 0


def cmd_restrict(args):
    if args.input.startswith("builtin-face:") or args.standalone:
        if args.input.startswith("builtin-face:"):
            spec = face_fixture(args.input[len("builtin-face:"):])
        else:
            spec = load_standalone(args.input)
        mod = restricted_standalone(
            spec["ambient"], spec["face_carriers"], spec["e_carrier"],
            args.seed, m_max=args.max_degree, field=args.field)
        payload = {"standalone": True, "dims": list(mod.dims),
                   "m_max": mod.m_max}
    else:
        data = resolve_input(args.input)
        t = build_triangulation(data)
        e = parse_face(args.face)
        delta_face = parse_face(args.delta)
        if delta_face:
            delta = SimplicialComplex([delta_face])
        else:
            from .complexes import link
            delta = link(t.complex, e)
        lsop = sample_lsop(t, e, args.seed, field=args.field)
        mod = restrict_module(t, e, delta, lsop, args.max_degree, args.field)
        payload = {"name": data["name"], "e": list(e),
                   "delta": list(delta_face), "dims": list(mod.dims),
                   "m_max": mod.m_max}
    _emit(args, payload)
    return 0


def load_standalone(source):
    """A standalone face spec: {ambient, face_carriers, e_carrier}."""
    import json
    if source == "-":
        text = sys.stdin.read()
    else:
        with open(source, "r", encoding="utf-8") as fh:
            text = fh.read()
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError("not valid JSON: %s" % exc) from exc
    for key in ("ambient", "face_carriers", "e_carrier"):
        if key not in spec:
            raise SchemaError("standalone spec missing %r" % key)
    return spec


def make_parser():
    parser = argparse.ArgumentParser(
        prog="localh",
        description="Local face modules and local h-vectors of "
                    "triangulations of simplices.",
        epilog="Builtin inputs: " + ", ".join(
            "builtin:%s" % n for n in builtin_names()))
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, face=True):
        p.add_argument("input", help="file path, '-' for stdin, or builtin:<name>")
        if face:
            p.add_argument("--face", default="",
                           help="comma-separated vertex ids of E (default: empty)")
        p.add_argument("--seed", type=int, default=default_seed())
        p.add_argument("--field", type=parse_field, default=QQ,
                       help="q (rationals) or fp:<prime>")
        p.add_argument("--max-degree", type=int, default=None)
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("validate", help="check the triangulation axioms")
    common(p, face=False)
    p.add_argument("--mode", choices=("fast", "full"), default="full")
    p.set_defaults(fn=cmd_validate)

    p = sub.add_parser("local-h", help="compute the local h-vector")
    common(p)
    p.add_argument("--method", choices=("module", "incexc", "both"),
                   default="both")
    p.set_defaults(fn=cmd_local_h)

    p = sub.add_parser("resolution", help="build and verify the I_S resolution")
    common(p)
    p.add_argument("--verify", action=argparse.BooleanOptionalAction,
                   default=True)
    p.set_defaults(fn=cmd_resolution)

    p = sub.add_parser("map", help="the induced map between local face modules")
    common(p)
    p.add_argument("--face-prime", required=True,
                   help="comma-separated vertex ids of E'")
    p.add_argument("--check-surjective", action="store_true")
    p.add_argument("--check-compose", default=None, metavar="E2",
                   help="comma-separated vertex ids of E'' for the chain check")
    p.set_defaults(fn=cmd_map)

    p = sub.add_parser("audit", help="vanishing-structure audit")
    common(p)
    p.set_defaults(fn=cmd_audit)

    p = sub.add_parser("restrict", help="restricted local face module dims")
    common(p)
    p.add_argument("--delta", default="",
                   help="comma-separated vertex ids of a face of lk(E); "
                        "default: the whole link")
    p.add_argument("--standalone", action="store_true",
                   help="treat the input as a standalone face spec")
    p.set_defaults(fn=cmd_restrict)
    return parser


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except SchemaError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 1
    except VerificationError as exc:
        print("internal assertion failed: %s" % exc, file=sys.stderr)
        return 3
    except ValueError as exc:
        print("validation error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
