"""``taxsim`` command line.

Exit codes: 0 success, 2 unknown concept, 3 input or parse error, 4 measure
precondition failure.
"""

import argparse
import sys

from taxsim.batch import format_value, matrix_csv, similarity_matrix, top_k
from taxsim.errors import InputError, MeasureError, UnknownConcept
from taxsim.ic import build_ic, load_frequencies
from taxsim.measures import MeasureKind, similarity
from taxsim.taxonomy import load_taxonomy, validate

EXIT_UNKNOWN_CONCEPT = 2
EXIT_INPUT = 3
EXIT_MEASURE = 4

MEASURES = [m.value for m in MeasureKind]


def _load(args):
    tax = load_taxonomy(args.tax)
    ic = None
    if getattr(args, "freq", None):
        try:
            freq = load_frequencies(args.freq, tax)
        except UnknownConcept as e:
            raise InputError(f"{args.freq}: concept {e.label!r} is not in the taxonomy") from None
        ic = build_ic(freq, tax)
    return tax, ic


def cmd_validate(args, out):
    tax = load_taxonomy(args.path)
    out.write("\n".join(validate(tax).lines()) + "\n")


def cmd_info(args, out):
    tax = load_taxonomy(args.path)
    lines = [f"root={tax.labels[tax.root]}", *validate(tax).lines()]
    for c in sorted(range(len(tax)), key=lambda c: (tax.depth[c], tax.labels[c].encode("utf-8"))):
        parents = ",".join(tax.labels[p] for p in tax.parents[c])
        lines.append(f"{tax.depth[c]}\t{tax.labels[c]}\t{parents}")
    out.write("\n".join(lines) + "\n")


def cmd_sim(args, out):
    tax, ic = _load(args)
    kind = MeasureKind.parse(args.measure)
    res = similarity(tax, args.c1, args.c2, kind, ic=ic, depth=args.depth_override)
    out.write(f"{args.c1}\t{args.c2}\t{kind.value}\t{format_value(res.value)}\n")


def cmd_matrix(args, out):
    tax, ic = _load(args)
    concepts = args.concepts.split(",") if args.concepts else None
    labels, values = similarity_matrix(
        tax, args.measure, ic=ic, concepts=concepts, workers=args.workers,
        depth=args.depth_override,
    )
    text = matrix_csv(labels, values)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        out.write(text)


def cmd_topk(args, out):
    tax, ic = _load(args)
    ranked = top_k(tax, args.concept, args.k, args.measure, ic=ic, depth=args.depth_override)
    out.write("".join(f"{i}\t{label}\t{format_value(v)}\n" for i, (label, v) in enumerate(ranked, 1)))


def _positive_int(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser():
    parser = argparse.ArgumentParser(prog="taxsim", description="Concept similarity over IS-A taxonomies.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a taxonomy file and print its summary")
    p.add_argument("path")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("info", help="summary plus per-concept depth and parents")
    p.add_argument("path")
    p.set_defaults(func=cmd_info)

    def measure_opts(p):
        p.add_argument("--tax", required=True, help="taxonomy file (child<TAB>parent)")
        p.add_argument("--measure", required=True, choices=MEASURES, type=str.lower)
        p.add_argument("--freq", help="frequency file (concept<TAB>count), needed by resnik/lin/jcn")
        p.add_argument("--depth-override", type=int, default=None, metavar="N",
                       help="use N as the taxonomy depth D for new/lch")

    p = sub.add_parser("sim", help="similarity of one concept pair")
    measure_opts(p)
    p.add_argument("c1")
    p.add_argument("c2")
    p.set_defaults(func=cmd_sim)

    p = sub.add_parser("matrix", help="pairwise similarity matrix as CSV")
    measure_opts(p)
    p.add_argument("--out", help="write CSV here instead of stdout")
    p.add_argument("--workers", type=_positive_int, default=1)
    p.add_argument("--concepts", help="comma-separated subset of concept labels")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("topk", help="most similar concepts to an anchor")
    measure_opts(p)
    p.add_argument("--concept", required=True)
    p.add_argument("-k", type=_positive_int, required=True)
    p.set_defaults(func=cmd_topk)
    return parser


def main(argv=None, out=None, err=None):
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    args = build_parser().parse_args(argv)
    try:
        args.func(args, out)
    except UnknownConcept as e:
        err.write(f"UnknownConcept: {e}\n")
        return EXIT_UNKNOWN_CONCEPT
    except (InputError, OSError, UnicodeDecodeError) as e:
        err.write(f"{type(e).__name__}: {e}\n")
        return EXIT_INPUT
    except MeasureError as e:
        err.write(f"{type(e).__name__}: {e}\n")
        return EXIT_MEASURE
    return 0


if __name__ == "__main__":
    sys.exit(main())
