"""Command line interface: ``qcohom verify | gb | zcount``."""

import argparse
import json
import sys
from fractions import Fraction

from .errors import ConfigError
from .fields import RatFunc, field_from_json
from .groebner import Ideal, standard_monomials
from .ig_model import z_count
from .poly import PolyRing, order_from_name
from .verify import ALL_CLAIMS, VerifyConfig, emit_report, verify_all

EXIT_OK, EXIT_FAIL, EXIT_CONFIG = 0, 1, 2


# ---------------------------------------------------------------------------
# ideal files
#
# {"variables": [...], "field": {"mode": "q-rational", "q": "-1"} | {"mode": "q-generic"},
#  "polynomials": [[["num/den", [e1, e2, ...]], ...], ...]}


def load_ideal(doc) -> Ideal:
    try:
        variables = doc["variables"]
        field = field_from_json(doc.get("field", {"mode": "q-rational", "q": "-1"}))
        ring = PolyRing(tuple(variables), field)
        polys = []
        for p in doc["polynomials"]:
            terms = [(field.parse(c), tuple(e)) for c, e in p]
            if any(not isinstance(k, int) or k < 0 for _, e in terms for k in e):
                raise ValueError("exponents must be nonnegative integers")
            polys.append(ring.from_terms(terms))
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ConfigError(f"malformed ideal file: {exc}") from exc
    if not any(not p.is_zero() for p in polys):
        raise ConfigError("ideal file contains no nonzero polynomial")
    return Ideal(polys, ring)


def format_coeff(c):
    if isinstance(c, RatFunc):
        return str(c)
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def dump_poly(p, order):
    return [[format_coeff(c), list(e)] for e, c in p.sorted_terms(order)]


def gb_document(ideal: Ideal, order_name: str):
    order = order_from_name(order_name)
    G = ideal.gb(order)
    sm = standard_monomials(G)
    return {
        "variables": list(ideal.ring.variables),
        "field": ideal.ring.field.to_json(),
        "order": order_name,
        "basis": [dump_poly(g, order) for g in G.basis],
        "quotient_dim": None if sm is None else len(sm),
    }


# ---------------------------------------------------------------------------
# argument parsing


def _parse_q(s):
    if s == "generic":
        return None
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"invalid q {s!r}") from exc


def _parse_claims(s):
    if s == "all":
        return ALL_CLAIMS
    return tuple(c.strip().upper() for c in s.split(",") if c.strip())


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(prog="qcohom", description="Exact checks for quantum cohomology of IG(2,2n).")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run the claim checks and emit a report")
    v.add_argument("--n", type=int, default=3)
    v.add_argument("--q", type=_parse_q, default=Fraction(-1), help="nonzero rational or 'generic'")
    v.add_argument("--seed", type=int, default=7)
    v.add_argument("--claims", type=_parse_claims, default=ALL_CLAIMS, help="'all' or C1,C2,...")
    v.add_argument("--trials", type=int, default=100)
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.add_argument("--out", help="write the report here instead of stdout")
    v.add_argument("--allow-large", action="store_true", help="permit n > 4")
    v.add_argument("--no-timing", action="store_true", help="report runtime_ms as null")

    g = sub.add_parser("gb", help="reduced Groebner basis of an ideal file")
    g.add_argument("--input", required=True)
    g.add_argument("--order", choices=("lex", "grevlex"), default="grevlex")

    z = sub.add_parser("zcount", help="solution count on the double cover")
    z.add_argument("--n", type=int, required=True)
    return parser


def _write(data: bytes, out=None):
    if out:
        with open(out, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            cfg = VerifyConfig(
                n=args.n,
                q=args.q,
                seed=args.seed,
                claims=args.claims,
                trials=args.trials,
                format=args.format,
                allow_large=args.allow_large,
                timing=not args.no_timing,
            )
            report = verify_all(cfg)
            _write(emit_report(report, cfg.format), args.out)
            return EXIT_OK if report.overall else EXIT_FAIL
        if args.command == "gb":
            try:
                with open(args.input) as fh:
                    doc = json.load(fh)
            except (OSError, json.JSONDecodeError) as exc:
                raise ConfigError(str(exc)) from exc
            out = gb_document(load_ideal(doc), args.order)
            _write((json.dumps(out, indent=2) + "\n").encode())
            return EXIT_OK
        if args.command == "zcount":
            if args.n < 2:
                raise ConfigError("n must be >= 2")
            zc = z_count(args.n)
            doc = {"n": args.n, "ordered_pair_count": zc.ordered_pair_count, "point_count": zc.point_count}
            _write((json.dumps(doc, indent=2) + "\n").encode())
            return EXIT_OK
    except ConfigError as exc:
        print(f"qcohom: configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
