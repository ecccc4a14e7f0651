"""Command line interface: ``onesided <group> <command> [--json]``.

Exit status is 0 on success, 1 on domain errors (or failed reproductions)
and 2 on usage errors.
"""
import argparse
import json
import sys
from pathlib import Path

from . import abelian, chords, genus, plat, reproduce, splittings
from .errors import OneSidedError


def _emit(args, data, text):
    if args.json:
        print(json.dumps(data, indent=2))
    else:
        print(text)


def _tau_json(tau, q):
    dec = chords.cycle_decomposition(tau, q)
    return {
        "k": tau.k,
        "q": q,
        "pairs": [list(p) for p in tau.pairs],
        "cycles": [[chords.node_json(nd) for nd in cyc] for cyc in dec.cycles],
        "c": dec.c,
        "genus": tau.k + 1 - dec.c,
    }


def _tau_text(data):
    lines = [f"k={data['k']} q={data['q']} c={data['c']} genus={data['genus']}",
             "pairs: " + " ".join(f"({a},{b})" for a, b in data["pairs"])]
    for cyc in data["cycles"]:
        lines.append("  " + " -> ".join(f"{a}{'b' if lv == 'bottom' else 't'}" for a, lv in cyc))
    return "\n".join(lines)


def cmd_genus(args):
    p, q = args.p, args.q
    cf = genus.continued_fraction(p, q)
    b = genus.b_sequence(cf)
    formula = genus.minimal_genus_formula(p, q) if args.method in ("formula", "both") else None
    search = chords.minimal_genus_search(p, q) if args.method in ("search", "both") else None
    n = formula if formula is not None else search
    agreement = formula == search if args.method == "both" else None
    data = {"p": p, "q": q, "cf": list(cf.terms), "b": list(b), "N": n,
            "method": args.method, "agreement": agreement}
    text = f"L({p},{q}): cf={list(cf.terms)} b={list(b)} N={n}"
    if args.method == "both":
        text += f" (formula {formula}, search {search}, {'agree' if agreement else 'DISAGREE'})"
    _emit(args, data, text)
    return 0 if agreement is not False else 1


def cmd_tau_enumerate(args):
    taus = [t.pairs for t in chords.enumerate_taus(args.k)]
    data = {"k": args.k, "count": len(taus), "taus": [[list(p) for p in t] for t in taus]}
    text = "\n".join(" ".join(f"({a},{b})" for a, b in t) for t in taus)
    _emit(args, data, text + f"\n{len(taus)} involutions")
    return 0


def cmd_tau_search(args):
    c, tau = chords.max_cycles(args.k, args.q)
    data = _tau_json(tau, args.q)
    _emit(args, data, f"max c = {c}\n" + _tau_text(data))
    return 0


def cmd_tau_cycles(args):
    tau = chords.loads_tau(Path(args.file).read_text())
    data = _tau_json(tau, args.q)
    _emit(args, data, _tau_text(data))
    return 0


def cmd_homology_klein(args):
    try:
        entries = [int(x) for x in args.matrix.split(",")]
    except ValueError:
        raise OneSidedError(f"--matrix expects four comma separated integers: {args.matrix!r}")
    if len(entries) != 4:
        raise OneSidedError(f"--matrix expects four integers, got {len(entries)}")
    g = abelian.h1_from_klein_gluing(abelian.GluingMatrix.from_entries(*entries),
                                     convention=args.convention)
    _emit(args, g.to_json(), str(g))
    return 0


def cmd_homology_presentation(args):
    n, rel = abelian.loads_presentation(Path(args.file).read_text())
    g = abelian.group_from_presentation(n, rel)
    _emit(args, g.to_json(), str(g))
    return 0


def _split_text(s):
    lines = [f"{s.manifold}: U genus {s.u_genus}, handlebody genus {s.handlebody_genus}, "
             f"braid surface genus {s.braid_surface_genus}"]
    if s.witness_tau:
        lines.append(f"witness ({s.witness_source}):")
        lines.append(chords.dumps_tau(s.witness_tau).rstrip())
    return "\n".join(lines)


def cmd_split_lens(args):
    s = splittings.lens_splitting(args.p, args.q)
    _emit(args, s.to_json(), _split_text(s))
    return 0


def cmd_split_bundle(args):
    s = splittings.trivial_bundle_splitting(args.g)
    _emit(args, s.to_json(), _split_text(s))
    return 0


def _read_word(path):
    return plat.loads_word(Path(path).read_text())


def cmd_plat_normalize(args):
    p = plat.normalize(_read_word(args.input))
    if args.json:
        print(plat.dumps_presentation(p), end="")
    else:
        print(f"genus {p.surface_genus}, {p.n} strands")
        print("top:    " + " ".join(f"({i},{j}|band {b})" for i, j, b in p.top_caps))
        print("braid:  " + (", ".join(e.token() for e in p.braid_word) or "(trivial)"))
        print("bottom: " + " ".join(f"({i},{j}{'|' + d if d else ''})"
                                    for i, j, d in p.bottom_caps))
    return 0


def cmd_plat_components(args):
    r = plat.trace(_read_word(args.input))
    _emit(args, {"components": r.component_count,
                 "pairing": [[list(a), list(b)] for a, b in r.pairing]},
          str(r.component_count))
    return 0


def cmd_plat_validate(args):
    w = _read_word(args.input)
    _emit(args, {"valid": True, "genus": w.surface_genus, "events": len(w.events),
                 "start_strands": w.start_strands, "end_strands": w.end_strands},
          f"valid: {len(w.events)} events, strands {w.start_strands} -> {w.end_strands}")
    return 0


def cmd_reproduce(args):
    cases = sorted(reproduce.CASES) if args.case == "all" else [args.case]
    results = {c: reproduce.reproduce(c) for c in cases}
    ok = all(ch.passed for checks in results.values() for ch in checks)
    if args.json:
        print(json.dumps({c: [ch.to_json() for ch in checks] for c, checks in results.items()},
                         indent=2))
    else:
        for c, checks in results.items():
            print(f"== {c}")
            for ch in checks:
                print(ch.line())
        print("ALL PASS" if ok else "SOME CHECKS FAILED")
    return 0 if ok else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine readable output")

    parser = argparse.ArgumentParser(prog="onesided", description=__doc__.splitlines()[0])
    groups = parser.add_subparsers(dest="group", required=True)

    g = groups.add_parser("genus", parents=[common], help="minimal non-orientable genus in L(p,q)")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--q", type=int, required=True)
    g.add_argument("--method", choices=["formula", "search", "both"], default="formula")
    g.set_defaults(func=cmd_genus)

    tau = groups.add_parser("tau", help="non-crossing involutions and curve systems")
    tsub = tau.add_subparsers(dest="command", required=True)
    t = tsub.add_parser("enumerate", parents=[common], help="list all involutions of Z_2k")
    t.add_argument("--k", type=int, required=True)
    t.set_defaults(func=cmd_tau_enumerate)
    t = tsub.add_parser("search", parents=[common], help="maximize the number of curves")
    t.add_argument("--k", type=int, required=True)
    t.add_argument("--q", type=int, required=True)
    t.set_defaults(func=cmd_tau_search)
    t = tsub.add_parser("cycles", parents=[common], help="curve system of a tau file")
    t.add_argument("--file", required=True)
    t.add_argument("--q", type=int, required=True)
    t.set_defaults(func=cmd_tau_cycles)

    hom = groups.add_parser("homology", help="first homology computations")
    hsub = hom.add_subparsers(dest="command", required=True)
    h = hsub.add_parser("klein-gluing", parents=[common],
                        help="H1 of a solid torus glued to the Klein bottle mapping cylinder")
    h.add_argument("--matrix", required=True, metavar="p_l,q_l,p_m,q_m")
    h.add_argument("--convention", choices=["covering", "printed"], default="covering")
    h.set_defaults(func=cmd_homology_klein)
    h = hsub.add_parser("presentation", parents=[common], help="abelian group from a relation file")
    h.add_argument("--file", required=True)
    h.set_defaults(func=cmd_homology_presentation)

    split = groups.add_parser("split", help="one-sided splitting descriptors")
    ssub = split.add_subparsers(dest="command", required=True)
    s = ssub.add_parser("lens", parents=[common], help="lens space L(p,q), p even")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--q", type=int, required=True)
    s.set_defaults(func=cmd_split_lens)
    s = ssub.add_parser("bundle", parents=[common], help="trivial circle bundle over Sigma_g")
    s.add_argument("--g", type=int, required=True)
    s.set_defaults(func=cmd_split_bundle)

    pl = groups.add_parser("plat", help="Morse words and non-orientable plat closures")
    psub = pl.add_subparsers(dest="command", required=True)
    for name, func, helptext in [
            ("normalize", cmd_plat_normalize, "plat normal form of a closed word"),
            ("components", cmd_plat_components, "number of link components"),
            ("validate", cmd_plat_validate, "check a Morse word file")]:
        x = psub.add_parser(name, parents=[common], help=helptext)
        x.add_argument("--input", required=True)
        x.set_defaults(func=func)

    r = groups.add_parser("reproduce", parents=[common], help="rerun the worked examples")
    r.add_argument("case", choices=sorted(reproduce.CASES) + ["all"])
    r.set_defaults(func=cmd_reproduce)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OneSidedError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
