"""Command line front door: ``gradcat check|construct|translate|explain``.

Exit codes: 0 success, 1 a law failed or a guarded precondition refused the
request, 2 the input could not be read as a bundle.
"""

from __future__ import annotations

import argparse
import json
import sys

from .constructions import (
    build_kleisli,
    enumerate_graded_algebras,
    tensor_algebras,
    unit_algebra,
)
from .errors import MalformedInput, NotIdentityCarrier, PairingMismatch, VariantMismatch, WorkbenchError
from .graded import CommutativeGradedMonad, GradedMonad, GradedMorphism, check_commutative, check_graded_monad
from .localisable import MonadMorphismFamily, theta_from_graded, theta_to_graded
from .runner import SUITES, find_witness, render_text, render_witness, replay_witness, run_suite
from .serialize import Bundle, canonical, dump_text, load_path

OK, FAILED, MALFORMED = 0, 1, 2


def _emit(doc: dict, fmt: str, canonical_mode: bool) -> None:
    if fmt == "text":
        sys.stdout.write(render_text(doc))
    elif canonical_mode:
        sys.stdout.write(canonical(doc))
    else:
        sys.stdout.write(json.dumps(doc, indent=2) + "\n")


def _fail(msg: str, code: int) -> int:
    print(f"gradcat: {msg}", file=sys.stderr)
    return code


def _load(path: str) -> Bundle:
    try:
        return load_path(path)
    except OSError as exc:
        raise MalformedInput(f"cannot read {path}: {exc}") from exc


def cmd_check(args) -> int:
    bundle = _load(args.path)
    doc = run_suite(bundle, args.suite, canonical=args.canonical)
    _emit(doc, args.format, args.canonical)
    return OK if doc["verdict"] == "pass" else FAILED


def _pick(bundle: Bundle, kinds, name: str | None, what: str):
    found = {n: o for n, o in bundle.resources.items() if isinstance(o, kinds)}
    if name is not None:
        if name not in found:
            raise MalformedInput(f"no {what} resource named {name!r}")
        return name, found[name]
    if not found:
        raise MalformedInput(f"bundle has no {what} resource")
    return next(iter(found.items()))


def _write(bundle: Bundle, out: str | None) -> None:
    text = dump_text(bundle)
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def _prerequisite(report, label: str, fmt: str) -> int | None:
    if report.ok:
        return None
    print(f"gradcat: prerequisite check failed for {label}", file=sys.stderr)
    sys.stderr.write(str(report) + "\n")
    return FAILED


def cmd_construct(args) -> int:
    bundle = _load(args.path)
    out = Bundle()
    if args.what in ("kleisli", "em-enumerate"):
        name, t = _pick(bundle, (GradedMonad, CommutativeGradedMonad), args.resource, "graded monad")
        g = t.underlying if isinstance(t, CommutativeGradedMonad) else t
        bad = _prerequisite(check_graded_monad(g), name, args.format)
        if bad is not None:
            return bad
        if args.what == "kleisli":
            out.add(f"Kl-{name}", build_kleisli(g, f"Kl-{name}").category)
        else:
            out.add(name, t)
            for i, alg in enumerate(enumerate_graded_algebras(g, args.bound)):
                out.add(f"{name}-alg{i}", alg, monad=t)
        _write(out, args.out)
        return OK

    name, t = _pick(bundle, CommutativeGradedMonad, args.resource, "commutative graded monad")
    try:
        if t.variant != "oplax":
            raise VariantMismatch(f"{name} is {t.variant}; algebra tensors need the oplax variant")
        bad = _prerequisite(check_commutative(t), name, args.format)
        if bad is not None:
            return bad
        out.add(name, t)
        if args.what == "unit-algebra":
            out.add(f"{name}-unit", unit_algebra(t), monad=t)
        else:
            algs = [(n, a) for n, a in bundle.resources.items()
                    if n in bundle.links and bundle.links[n].get("monad") is t]
            if args.algebras:
                wanted = args.algebras.split(",")
                algs = [(n, a) for n, a in algs if n in wanted]
                if len(algs) != 2:
                    raise MalformedInput(f"--algebras must name two algebras of {name}")
            elif len(algs) < 2:
                algs = [(f"{name}-alg{i}", a) for i, a in enumerate(enumerate_graded_algebras(t.underlying, args.bound))]
            if not algs:
                raise MalformedInput(f"{name} has no algebras to tensor")
            (n1, a), (n2, b) = algs[0], algs[1] if len(algs) > 1 else algs[0]
            out.add(n1, a, monad=t)
            if n2 != n1:
                out.add(n2, b, monad=t)
            out.add(f"{n1}(x){n2}", tensor_algebras(t, a, b), monad=t)
    except VariantMismatch as exc:
        return _fail(f"VariantMismatch: {exc}", FAILED)
    _write(out, args.out)
    return OK


def cmd_translate(args) -> int:
    bundle = _load(args.path)
    try:
        if args.direction == "to-graded":
            name, fam = _pick(bundle, MonadMorphismFamily, args.resource, "monad morphism family")
            links = bundle.links[name]
            h = theta_to_graded(fam, links["src"], links["dst"])
        else:
            name, h0 = _pick(bundle, GradedMorphism, args.resource, "graded morphism")
            links = bundle.links.get(name)
            if not links:
                raise MalformedInput(f"{name} declares no pairing to translate through")
            h = theta_from_graded(h0, links["src"], links["dst"])
    except (PairingMismatch, NotIdentityCarrier) as exc:
        return _fail(f"{type(exc).__name__}: {exc}", FAILED)
    out = Bundle()
    for n, o in bundle.resources.items():
        if n == name:
            out.add(n, h, src=links["src"], dst=links["dst"])
        else:
            out.add(n, o, **bundle.links.get(n, {}))
    _write(out, args.out)
    return OK


def cmd_explain(args) -> int:
    try:
        with open(args.report, encoding="utf-8") as fh:
            report = json.load(fh)
        subj, law, w = find_witness(report, args.witness_id)
    except (OSError, json.JSONDecodeError) as exc:
        return _fail(f"cannot read report: {exc}", MALFORMED)
    except KeyError:
        return _fail(f"no witness {args.witness_id!r} in {args.report}", MALFORMED)
    print(f"{subj['check']} check of {subj['resource']}, law {law['law_id']}")
    if law["description"]:
        print(f"  {law['description']}")
    print(render_witness(w))
    if args.bundle:
        still = replay_witness(_load(args.bundle), subj, w)
        print("replay: still fails" if still else "replay: no longer fails")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gradcat", description="Finite-category workbench for graded monads.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--format", choices=("json", "text"), default="json")
        sp.add_argument("--canonical", action="store_true", help="omit timings; sorted keys")

    c = sub.add_parser("check", help="run law checks over a bundle")
    c.add_argument("path")
    c.add_argument("--suite", choices=SUITES, default="all")
    common(c)
    c.set_defaults(func=cmd_check)

    k = sub.add_parser("construct", help="build a Kleisli category or algebras")
    k.add_argument("path")
    k.add_argument("what", choices=("kleisli", "em-enumerate", "em-tensor", "unit-algebra"))
    k.add_argument("--resource", help="which graded monad to use (default: the first)")
    k.add_argument("--algebras", help="two algebra resources for em-tensor, comma separated")
    k.add_argument("--bound", type=int, default=100_000, help="candidate cap for algebra enumeration")
    k.add_argument("--out")
    common(k)
    k.set_defaults(func=cmd_construct)

    t = sub.add_parser("translate", help="move a morphism across a localisable pairing")
    t.add_argument("path")
    t.add_argument("direction", choices=("to-graded", "to-presheaf"))
    t.add_argument("--resource")
    t.add_argument("--out")
    common(t)
    t.set_defaults(func=cmd_translate)

    e = sub.add_parser("explain", help="render one witness from a saved report")
    e.add_argument("witness_id")
    e.add_argument("--report", required=True)
    e.add_argument("--bundle", help="re-evaluate the witness against this bundle")
    e.set_defaults(func=cmd_explain)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except WorkbenchError as exc:
        return _fail(f"{type(exc).__name__}: {exc}", MALFORMED)


if __name__ == "__main__":
    sys.exit(main())
