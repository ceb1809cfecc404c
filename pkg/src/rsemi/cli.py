"""Command line driver.

Exit codes: 0 when every checked statement passes, 1 when a mathematical
check fails or a precondition is rejected, 2 for usage errors and malformed
input.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import io
from .actions import classify_action, verify_partial_action
from .algebra import classify, natural_order_report, verify_restriction_axioms
from .constructions import (double_to_pda, m_product, pda_to_double, verify_double_action, w_product, y_m_t)
from .covers import build_cover, build_kappa, quotient_and_embed
from .errors import InsufficientBoundError, MalformedInputError, RejectedInputError, VerificationError
from .free_models import build_free_model
from .globalization import build_global_poset_generic, build_w_of_global, embed_mty
from .monoids import FreeMonoid
from .report import Report


def _emit(args, reports, extra=None):
    for rep in reports:
        print(rep.to_text())
    if extra:
        for line in extra:
            print(line)
    if getattr(args, "json", None):
        payload = {"command": args.command, "ok": all(r.ok for r in reports),
                   "reports": [r.to_dict() for r in reports]}
        with open(args.json, "w") as fh:
            json.dump(payload, fh, indent=2, ensure_ascii=False)
    return 0 if all(r.ok for r in reports) else 1


def _with_bound(pa, bound):
    if bound is not None and isinstance(pa.monoid, FreeMonoid):
        pa.monoid = FreeMonoid(pa.monoid.alphabet, bound)
    return pa


def cmd_verify(args):
    kind = io.kind_of(args.file)
    if kind == "algebra":
        alg = io.parse_algebra(args.file)
        rep = verify_restriction_axioms(alg)
        reports = [rep]
        if rep.ok:
            reports.append(natural_order_report(alg))
        return _emit(args, reports)
    if kind == "action":
        return _emit(args, [verify_partial_action(_with_bound(io.parse_action(args.file), args.bound))])
    if kind == "double":
        return _emit(args, [verify_double_action(io.parse_double_action(args.file))])
    io.parse_semilattice(args.file)
    print("semilattice: valid")
    return 0


def _flag_lines(flags, witnesses):
    lines = []
    for k, v in flags.items():
        text = "n/a" if v is None else str(v).lower()
        lines.append(f"{k}: {text}")
    for k, w in witnesses.items():
        lines.append(f"witness {k}: {io.fmt(tuple(w))}")
    return lines


def cmd_classify(args):
    kind = io.kind_of(args.file)
    if kind == "algebra":
        alg = io.parse_algebra(args.file)
        verify_restriction_axioms(alg).require()
        flags = classify(alg)
        lines = _flag_lines(
            {"proper": flags.isProper, "ample": flags.isAmple, "F-restriction": flags.isFRestriction,
             "left extra proper": flags.isLeftExtraProper, "right extra proper": flags.isRightExtraProper,
             "extra proper": flags.isExtraProper, "ultra proper": flags.isUltraProper,
             "ultra F-restriction": flags.isUltraFRestriction, "sigma perfect": flags.sigmaIsPerfect,
             "FA-monoid": flags.isFAMonoid, "monoid": flags.isMonoid}, flags.witnesses)
    elif kind == "action":
        pa = _with_bound(io.parse_action(args.file), args.bound)
        verify_partial_action(pa).require()
        f = classify_action(pa)
        lines = _flag_lines({"action": f.isAction, "strong": f.isStrong, "antistrong": f.isAntistrong,
                             "PDA": f.isPDA, "domains principal": f.domainsPrincipal}, f.witnesses)
        if f.bound:
            lines.append(f"bound: {f.bound}")
    else:
        raise MalformedInputError("classify expects an algebra or an action file")
    print("\n".join(lines))
    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"command": "classify", "flags": lines}, fh, indent=2, ensure_ascii=False)
    return 0


def cmd_construct(args):
    if args.kind == "ymt":
        da = io.parse_double_action(args.file)
        alg = y_m_t(da)
        pa = double_to_pda(da)
        rep = Report("Y*mT")
        rep.add("ymt:equals-m-product", "Y*mT equals M(T,Y) of the associated partial action",
                _same(alg, m_product(pa)))
        rep.add("ymt:round-trip", "the double action is recovered from its partial action",
                pda_to_double(pa).star == da.star and pda_to_double(pa).bullet == da.bullet)
        reports = [verify_restriction_axioms(alg), rep]
    else:
        pa = _with_bound(io.parse_action(args.file), args.bound)
        alg = m_product(pa) if args.kind == "m-product" else w_product(pa)
        reports = [verify_restriction_axioms(alg)]
        if args.kind == "w-product" and alg.closed:
            rep = Report("W-product")
            rep.add("w:equals-m-product", "W(T,Y) equals M(T,Y)", _same(alg, m_product(pa)))
            rep.add("w:semidirect", "every element acts by an automorphism", alg.semidirect)
            reports.append(rep)
    if args.output:
        if not alg.closed:
            raise MalformedInputError("bounded algebras over a free monoid cannot be written as tables")
        with open(args.output, "w") as fh:
            fh.write(io.serialize_algebra(alg))
    code = _emit(args, reports)
    if not args.output and alg.closed:
        print(io.serialize_algebra(alg), end="")
    return code


def _same(a, b):
    from .algebra import same_algebra

    return same_algebra(a, b)


def cmd_globalize(args):
    pa = _with_bound(io.parse_action(args.file), args.bound)
    if pa.monoid.closed:
        gp = build_global_poset_generic(pa)
        return _emit(args, [gp.report], [f"classes: {len(gp.classes)}; points of X: {len(gp.points)}"])
    W = build_w_of_global(pa)
    mw = embed_mty(pa, W)
    emb = mw.report("M(T,Y) into W(T,X)")
    emb.checks = [c for c in emb.checks if c.id != "surjective"]
    emb.add("image", "the image is the set of pairs with [y,ε]•t defined and in Y", mw.image_witness is None,
            mw.image_witness)
    return _emit(args, [W.report, emb])


def _algebra_and_generators(args):
    alg = io.parse_algebra(args.algebra)
    if not args.generators:
        raise MalformedInputError("--generators is required")
    return alg, args.generators


def cmd_cover(args):
    alg, gens = _algebra_and_generators(args)
    pkg = build_cover(alg, gens, args.bound)
    return _emit(args, [pkg.report], [f"cover elements sampled: {len(pkg.algebra.elements)}",
                                      f"minimal word bound: {pkg.min_bound}"])


def cmd_kappa(args):
    alg, gens = _algebra_and_generators(args)
    kc = build_kappa(alg, gens, args.bound)
    return _emit(args, [kc.cover.report, kc.W.report, kc.report])


def cmd_quotient(args):
    alg, gens = _algebra_and_generators(args)
    kc = build_kappa(alg, gens, args.bound)
    mw = quotient_and_embed(kc)
    return _emit(args, [kc.report, mw.embed_report])


def cmd_free_model(args):
    fm = build_free_model(args.alphabet, args.mode, args.ideal_size, args.word_bound)
    rep = verify_partial_action(fm.action)
    flags = classify_action(fm.action)
    cl = Report("free model", bound=fm.bound)
    cl.add("free:PDA", "the action is a partially defined action", flags.isPDA, flags.witnesses.get("PDA"))
    if fm.mode == "monoid":
        cl.add("free:principal", "every domain is principal", flags.domainsPrincipal)
    else:
        cl.add("free:principal-except-ε", "every domain except that of ε is principal",
               flags.domainsPrincipalExceptIdentity)
        cl.add("free:ε-not-principal", "the domain of ε is not principal",
               fm.action.domain_top("") is None)
    axioms = verify_restriction_axioms(fm.algebra)
    payload = {
        "kind": "free-model", "alphabet": list(fm.alphabet), "mode": fm.mode,
        "ideal_size": fm.ideal_size, "word_bound": fm.word_bound,
        "ideals": [io.fmt(B) for B in fm.lattice.elements],
        "act": sorted([a, io.fmt(B), io.fmt(v)] for a in fm.alphabet for B in fm.lattice.elements
                      if (v := fm.action.act(a, B)) is not None),
    }
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(io.dumps(payload))
    return _emit(args, [rep, cl, axioms])


def build_parser():
    p = argparse.ArgumentParser(prog="rsemi", description="Restriction semigroups and partial actions: "
                                "build and verify at bounded scale.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, bound=True):
        sp.add_argument("--json", metavar="PATH", help="also write the report as JSON")
        if bound:
            sp.add_argument("--bound", type=int, help="word length bound for free monoids")

    sp = sub.add_parser("verify", help="check axioms of an algebra, action or double action file")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("classify", help="classification flags of an algebra or action")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("construct", help="build M(T,Y), W(T,Y) or Y*mT")
    sp.add_argument("kind", choices=["m-product", "w-product", "ymt"])
    sp.add_argument("file")
    sp.add_argument("--output", metavar="PATH", help="write the algebra file here")
    common(sp)
    sp.set_defaults(func=cmd_construct)

    sp = sub.add_parser("globalize", help="globalize a strong partial action")
    sp.add_argument("file")
    common(sp)
    sp.set_defaults(func=cmd_globalize)

    for name, func, text in (("cover", cmd_cover, "build the proper cover over a free monoid"),
                             ("kappa", cmd_kappa, "build W(A*,X) and the congruence kappa"),
                             ("quotient", cmd_quotient, "embed the algebra into W(A*,X)/kappa")):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("--algebra", required=True)
        sp.add_argument("--generators", nargs="+", metavar="GEN",
                        help="generator elements, or letter=element pairs")
        common(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("free-model", help="sampled free restriction monoid or semigroup")
    sp.add_argument("--alphabet", default="a")
    sp.add_argument("--mode", choices=["monoid", "semigroup"], default="monoid")
    sp.add_argument("--ideal-size", type=int, default=4)
    sp.add_argument("--word-bound", type=int, default=3)
    sp.add_argument("--output", metavar="PATH")
    common(sp, bound=False)
    sp.set_defaults(func=cmd_free_model)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except MalformedInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (RejectedInputError, VerificationError, InsufficientBoundError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        w = getattr(exc, "witness", None)
        if w is not None:
            print(f"witness: {io.fmt(tuple(w))}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
