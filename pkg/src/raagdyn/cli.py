"""Command line front end: classify, witness, realize, verify, rot.

Exit codes: 0 on success, 1 when a verification fails or a witness does not
apply (classify verdicts always exit 0), 2 on input errors.  With a fixed
seed every run byte-reproduces its output.
"""

from __future__ import annotations

import argparse
import json
import sys
from random import Random

from . import serialize
from .actions import build_faithful_on, evaluate_word_at
from .checks import (
    HypothesisViolatedError,
    TwoJumpsData,
    check_c1_containment,
    check_commutator_support,
    check_phi_support,
    check_two_jumps_prefix,
)
from .cotree import NotApplicableError, classify, witness
from .graphs import GraphError, load_graph
from .lamplighter import IdentityInputError, lamplighter_certificate
from .plmaps import DomainMismatchError, PLMapCircle, rotation_number
from .randmaps import random_pair, random_phi_triple
from .serialize import dumps_doc, frac_to_str
from .words import TrivialWordError, parse_word

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2


class InputError(ValueError):
    pass


def _read(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from e


def _write_output(args, text: str):
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_json(path: str) -> dict:
    try:
        return json.loads(_read(path))
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: invalid JSON: {e}") from e


def _emit(args, doc: dict, text_lines: list[str]):
    if args.format == "text":
        _write_output(args, "\n".join(text_lines) + "\n")
    else:
        _write_output(args, dumps_doc(doc))


def _require_input(args):
    if not args.input:
        raise InputError("--input is required for this command")


def cmd_classify(args) -> int:
    _require_input(args)
    g = load_graph(_read(args.input))
    cls = classify(g)
    doc = serialize.classification_to_obj(g, cls)
    verdict = doc["verdict"]
    lines = [
        f"cograph: {doc['cograph']}",
        f"level: {doc['level']}",
        f"p4_witness: {doc['p4_witness']}",
        "verdict: c1={c1} c1bv={c1bv} c_infinity={c_infinity} "
        "c_omega={c_omega} circle={circle_class}".format(**verdict),
    ]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_witness(args) -> int:
    _require_input(args)
    g = load_graph(_read(args.input))
    cls = classify(g)
    try:
        w = witness(g)
    except NotApplicableError as e:
        doc = serialize.classification_to_obj(g, cls)
        doc["error"] = {"type": "NotApplicable", "message": str(e)}
        _emit(args, doc, [f"not applicable: {e}"])
        return EXIT_FAILED
    doc = serialize.classification_to_obj(g, cls, witness=w)
    lines = [
        f"kind: {w.kind}",
        f"vertices: {' '.join(w.vertices)}",
        f"words: {', '.join(w.words)}",
        f"group: {w.group}",
    ]
    _emit(args, doc, lines)
    return EXIT_OK


def cmd_realize(args) -> int:
    _require_input(args)
    words = []
    for lineno, raw in enumerate(_read(args.input).splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            w = parse_word(line)
        except ValueError as e:
            raise InputError(f"line {lineno}: {e}") from e
        if w.is_identity():
            raise InputError(f"line {lineno}: word {line!r} reduces to the identity")
        words.append(w)
    if not words:
        raise InputError("no words given")
    fa = build_faithful_on(words)
    fa.assignment.validate()
    moved = []
    for w, x in zip(fa.words, fa.witnesses):
        y = evaluate_word_at(fa.assignment, w, x)
        if y == x:
            raise AssertionError("realized action failed to move a witness point")
        moved.append((x, y))
    doc = serialize.faithful_to_obj(fa)
    lines = [
        f"{serialize.frac_to_str(x)} -> {serialize.frac_to_str(y)}" for x, y in moved
    ]
    _emit(args, doc, lines)
    return EXIT_OK


def _verify_comm_supp(args, payload):
    if payload is not None:
        f = serialize.obj_to_map(payload["maps"]["f"])
        g = serialize.obj_to_map(payload["maps"]["g"])
        ok = check_commutator_support(f, g)
        return ok, {"samples": 1, "failures": 0 if ok else 1}
    rng = Random(args.seed)
    failures = 0
    for i in range(args.samples):
        domain = "S1" if i % 4 == 3 else "I"
        f, g = random_pair(rng, domain)
        if not check_commutator_support(f, g):
            failures += 1
    return failures == 0, {"samples": args.samples, "failures": failures}


def _verify_phi_supp(args, payload):
    if payload is not None:
        maps = payload["maps"]
        b, c, d = (serialize.obj_to_map(maps[k]) for k in ("b", "c", "d"))
        ok = check_phi_support(b, c, d)
        return ok, {"samples": 1, "failures": 0 if ok else 1}
    rng = Random(args.seed)
    failures = 0
    for i in range(args.samples):
        domain = "S1" if i % 4 == 3 else "I"
        b, c, d = random_phi_triple(rng, domain)
        if not check_phi_support(b, c, d):
            failures += 1
    return failures == 0, {"samples": args.samples, "failures": failures}


def _verify_c1(args, payload):
    if payload is None:
        raise InputError("c1 check needs --input with maps b, c, d")
    maps = payload["maps"]
    b, c, d = (serialize.obj_to_map(maps[k]) for k in ("b", "c", "d"))
    report = check_c1_containment(b, c, d)
    detail = {
        "holds": report.holds,
        "violating": serialize.set_to_obj(report.violating),
        "assertable": False,
    }
    return True, detail  # report-only: PL maps may legitimately violate this


def _verify_two_jumps(args, payload):
    if payload is None:
        raise InputError("two-jumps check needs --input with maps f, g and triples")
    maps = payload["maps"]
    f = serialize.obj_to_map(maps["f"])
    g = serialize.obj_to_map(maps["g"])
    triples = [tuple(map(serialize.str_to_frac, t)) for t in payload.get("triples", [])]
    report = check_two_jumps_prefix(TwoJumpsData.of(f, g, triples))
    detail = {
        "valid": report.valid,
        "gaps": [frac_to_str(x) for x in report.gaps],
        "failures": list(report.failures),
    }
    return report.valid, detail


def _verify_lamplighter(args, payload):
    if payload is None:
        raise InputError("lamplighter check needs --input with maps g, u")
    maps = payload["maps"]
    g = serialize.obj_to_map(maps["g"])
    u = serialize.obj_to_map(maps["u"])
    cert = lamplighter_certificate(g, u)
    if cert is None:
        return False, {"certified": False}
    lo, hi = cert.hull
    return True, {
        "certified": True,
        "hull": [frac_to_str(lo), frac_to_str(hi)],
        "j_checked": cert.j_checked,
    }


def _verify_action(args, payload):
    if payload is None:
        raise InputError("action check needs --input with an action bundle")
    asg = serialize.obj_to_assignment(payload)
    asg.validate()
    words = [parse_word(s) for s in payload.get("words", [])]
    witnesses = [serialize.str_to_frac(s) for s in payload.get("witnesses", [])]
    if not witnesses:
        witnesses = [asg.basepoint] * len(words)
    moved, stuck = [], []
    for w, x in zip(words, witnesses):
        y = evaluate_word_at(asg, w, x)
        (moved if y != x else stuck).append(serialize.frac_to_str(x))
    detail = {"words": len(words), "moved": len(moved), "stuck": len(stuck)}
    return not stuck, detail


_CHECKS = {
    "comm-supp": _verify_comm_supp,
    "phi-supp": _verify_phi_supp,
    "c1": _verify_c1,
    "two-jumps": _verify_two_jumps,
    "lamplighter": _verify_lamplighter,
    "action": _verify_action,
}


def cmd_verify(args) -> int:
    if args.check not in _CHECKS:
        raise InputError(
            f"unknown check {args.check!r}; choose from {sorted(_CHECKS)}"
        )
    payload = _load_json(args.input) if args.input else None
    passed, detail = _CHECKS[args.check](args, payload)
    doc = {
        "version": serialize.SCHEMA_VERSION,
        "kind": "verification",
        "check": args.check,
        "seed": args.seed,
        "passed": passed,
        "detail": detail,
    }
    lines = [f"{args.check}: {'pass' if passed else 'FAIL'} {detail}"]
    _emit(args, doc, lines)
    return EXIT_OK if passed else EXIT_FAILED


def cmd_rot(args) -> int:
    _require_input(args)
    payload = _load_json(args.input)
    obj = payload["maps"]["f"] if "maps" in payload else payload
    m = serialize.obj_to_map(obj)
    if not isinstance(m, PLMapCircle):
        raise InputError("rotation numbers need a circle map (domain S1)")
    res = rotation_number(m, q_max=args.qmax)
    doc = {
        "version": serialize.SCHEMA_VERSION,
        "kind": "rotation",
        "qmax": args.qmax,
        "result": serialize.rotation_to_obj(res),
    }
    if res.is_exact():
        lines = [frac_to_str(res.value)]
    else:
        lines = [f"[{frac_to_str(res.lo)}, {frac_to_str(res.hi)}]"]
    _emit(args, doc, lines)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="raagdyn",
        description="Classify right-angled Artin group actions on one-manifolds "
        "and build/verify exact PL dynamics.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--input", help="input file path")
        p.add_argument("--output", help="output file path (default stdout)")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--samples", type=int, default=100)
        p.add_argument("--qmax", type=int, default=64)

    for name, fn, help_text in (
        ("classify", cmd_classify, "smoothability verdict for a graph"),
        ("witness", cmd_witness, "obstruction witness words for a graph"),
        ("realize", cmd_realize, "action moving a point for every listed word"),
        ("rot", cmd_rot, "rotation number of a circle map"),
    ):
        p = sub.add_parser(name, help=help_text)
        common(p)
        p.set_defaults(fn=fn)

    p = sub.add_parser("verify", help="run a named checker")
    p.add_argument("check", help="one of: " + ", ".join(sorted(_CHECKS)))
    common(p)
    p.set_defaults(fn=cmd_verify)
    return parser


_INPUT_ERRORS = (
    InputError,
    GraphError,
    TrivialWordError,
    HypothesisViolatedError,
    IdentityInputError,
    NotApplicableError,
    DomainMismatchError,
    KeyError,
    ValueError,
)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except _INPUT_ERRORS as e:
        kind = type(e).__name__
        sys.stderr.write(dumps_doc({"error": {"type": kind, "message": str(e)}}))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
