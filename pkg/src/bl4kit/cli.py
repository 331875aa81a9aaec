"""``bl4kit classify|iso|aut|selftest``.

Exit codes: 0 success, 1 input error, 2 the algebra is not BL4.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Optional, Sequence, Tuple

from . import algebra, groups, normal_form, presentation, sampling, selftest
from .algebra import StructureConstants
from .linalg import Mat, det, format_matrix, inverse, mat_prod, parse_matrix
from .normal_form import CanonicalLabel, WitnessChain
from .presentation import Bl4Presentation, NotBl4
from .serialize import DocumentError, dumps, load_json_arg, parse_document

EXIT_OK, EXIT_INPUT, EXIT_NOT_BL4 = 0, 1, 2


class InputError(ValueError):
    pass


def _load(text: str):
    try:
        return parse_document(load_json_arg(text))
    except DocumentError as exc:
        raise InputError(str(exc)) from None


def _constants(alg) -> StructureConstants:
    return presentation.to_structure_constants(alg) if isinstance(alg, Bl4Presentation) else alg


def _classify(alg) -> Tuple[CanonicalLabel, WitnessChain, StructureConstants]:
    if isinstance(alg, Bl4Presentation):
        ok, reason = presentation.is_bl4(alg)
        if not ok:
            raise NotBl4(reason)
        label, chain = normal_form.canonical_label(alg)
    else:
        if alg.dim != 4:
            raise InputError("only 4-dimensional algebras can be classified")
        label, chain = normal_form.classify_constants(alg)
    return label, chain, _constants(alg)


def _verified(sc_a: StructureConstants, sc_b: StructureConstants, m: Mat) -> Mat:
    if not algebra.is_isomorphism(sc_a, sc_b, m):
        raise AssertionError("refusing to print an unverified witness")
    return m


def cmd_classify(args) -> dict:
    label, chain, sc = _classify(_load(args.algebra))
    props = normal_form.property_table(label)
    report = {
        "label": label.to_json(),
        "properties": {"lie": props.is_lie, "malcev": props.is_malcev, "binary_lie": props.is_binary_lie},
        "aut_group": {"abstract_id": groups.aut_family_of(label).abstract_id.to_json()},
    }
    if args.witness:
        w = _verified(sc, normal_form.canonical_structure_constants(label), chain.product)
        report["witness"] = format_matrix(w)
        report["witness_steps"] = [tag for tag, _ in chain.steps]
    return report


def cmd_iso(args) -> dict:
    a, b = _load(args.a), _load(args.b)
    la, ca, sa = _classify(a)
    lb, cb, sb = _classify(b)
    if la != lb:
        return {"isomorphic": False, "labels": [la.to_json(), lb.to_json()]}
    w = _verified(sa, sb, mat_prod(ca.product, inverse(cb.product)))
    return {"isomorphic": True, "label": la.to_json(), "witness": format_matrix(w)}


def _parse_check(text: str) -> Mat:
    try:
        obj = load_json_arg(text)
    except DocumentError as exc:
        raise InputError(str(exc)) from None
    try:
        m = parse_matrix(obj, 4)
    except ValueError as exc:
        raise InputError(f"--check: {exc}") from None
    if det(m) == 0:
        raise InputError("--check: matrix is singular")
    return m


def cmd_aut(args) -> dict:
    label, chain, sc = _classify(_load(args.algebra))
    fam = groups.aut_family_of(label)
    w = chain.product
    w_inv = inverse(w)
    conjugated = w != tuple(tuple(int(i == j) for j in range(4)) for i in range(4))
    report = {"algebra": label.to_json(), "abstract_id": fam.abstract_id.to_json(), "conjugated": conjugated}
    if args.check is not None:
        m = _parse_check(args.check)
        # an automorphism h of the input corresponds to w^-1 h w on the canonical algebra
        res = fam.membership(mat_prod(w_inv, m, w))
        out = res.to_json()
        out["oracle"] = algebra.is_isomorphism(sc, sc, m)
        report["check"] = out
    if args.sample:
        rng = random.Random(args.seed)
        gens = []
        for g in fam.sample(rng, args.sample, args.height):
            gens.append(format_matrix(_verified(sc, sc, mat_prod(w, g, w_inv))))
        report["generators"] = gens
    return report


def cmd_selftest(args) -> int:
    results = selftest.run(args.level, args.seed)
    failed = sum(r.failed for r in results)
    total = sum(r.passed + r.failed for r in results)
    print(f"{'PASS' if not failed and all(r.ok for r in results) else 'FAIL'} selftest {args.level}: {total - failed}/{total} checks")
    return EXIT_OK if all(r.ok for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bl4kit", description="Classify 4-dimensional BL4 algebras exactly.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json",), default="json")
        sp.add_argument("--seed", type=int, default=0)
        sp.add_argument("--height", type=int, default=sampling.DEFAULT_HEIGHT, help="bound on sampled numerators and denominators")

    c = sub.add_parser("classify", help="canonical label, identities and automorphism group")
    c.add_argument("algebra", help="algebra document: JSON file or inline JSON")
    c.add_argument("--witness", action="store_true", help="include the basis change to the canonical form")
    common(c)

    i = sub.add_parser("iso", help="decide isomorphism of two algebras")
    i.add_argument("a")
    i.add_argument("b")
    common(i)

    a = sub.add_parser("aut", help="automorphism group membership and sampling")
    a.add_argument("algebra")
    a.add_argument("--check", metavar="MATRIX", help="4x4 matrix of 'p/q' strings: JSON file or inline JSON")
    a.add_argument("--sample", type=int, default=0, metavar="N")
    common(a)

    s = sub.add_parser("selftest", help="run the property suites")
    s.add_argument("level", nargs="?", choices=tuple(selftest.LEVELS), default="quick")
    common(s)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "selftest":
        return cmd_selftest(args)
    handler = {"classify": cmd_classify, "iso": cmd_iso, "aut": cmd_aut}[args.command]
    if getattr(args, "sample", 0) < 0:
        print(dumps({"error": "input", "message": "--sample must be non-negative"}))
        return EXIT_INPUT
    try:
        report = handler(args)
    except NotBl4 as exc:
        print(dumps({"error": "not-bl4", "reason": exc.reason}))
        return EXIT_NOT_BL4
    except ValueError as exc:  # InputError, DocumentError and malformed values
        print(dumps({"error": "input", "message": str(exc)}))
        return EXIT_INPUT
    print(dumps(report))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
