"""Command-line front end.

Subcommands cover every library operation plus a report command that
recomputes each algebra's cyclic spectrum over a range and diffs it
against the advertised closed-form predicate. Exit codes: 0 success,
1 negative result (invalid coloring, no witness, UNSAT, nonempty diff),
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from .algebra import Algebra, by_name, catalog
from .bounds import union_bound, union_bound_threshold
from .constructions import (
    NO_CLOSED_FORM,
    NO_CONSTRUCTION,
    abelian_4_7_representable,
    construct,
    construct_4_7_abelian,
)
from .group import CyclicGroup, parse_group
from .sat import decode, emit_dimacs, encode, parse_dimacs, solve
from .search import DEFAULT_LIMIT, NOT_FOUND, exists, find_all, random_search, spectrum
from .verifier import Coloring, coloring_from_json, coloring_to_json, verify

# General spectra, quoted as fixed reference text next to the computed
# cyclic column; the library never recomputes these.
_SPEC_TEXT = {
    "1_7": "{4}",
    "2_7": "{n >= 6}",
    "3_7": "{2k : k >= 3}",
    "4_7": "{n >= 9}",
    "5_7": "{5}",
    "6_7": "{n >= 8}",
    "7_7": "{n >= 9}",
}


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def expected_cyclic_spec(algebra: Algebra, n: int) -> bool:
    """Advertised closed form for membership of n in the cyclic spectrum.

    Note the 6_7 clause "n == 8 or n >= 11" overstates the truth at
    exactly n = 15, where no representation exists; report surfaces the
    discrepancy as a diff rather than hiding it.
    """
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    name = algebra.name
    if name == "1_7":
        return n == 4
    if name in ("2_7", "3_7"):
        return n >= 6 and n % 2 == 0
    if name == "4_7":
        return n >= 9 and not _is_prime(n) and not (n % 2 == 0 and _is_prime(n // 2))
    if name == "5_7":
        return n == 5
    if name == "6_7":
        return n == 8 or n >= 11
    if name == "7_7":
        return n >= 12
    raise ValueError(f"unknown algebra {name!r}")


@dataclass
class SpectrumReport:
    algebra: str
    spec_text: str
    expected: list[int]
    computed: list[int]
    methods: dict[int, str]

    @property
    def diff(self) -> list[int]:
        return sorted(set(self.expected) ^ set(self.computed))


def _cell(algebra: Algebra, n: int, limit: int) -> tuple[bool, str]:
    """Decide membership of one (algebra, n) cell and name the method."""
    out = construct(algebra, n)
    if isinstance(out, Coloring):
        return True, "construction"
    if n <= limit and n // 2 <= 24:
        return exists(algebra, n, limit), "exhaustive"
    f, _ = encode(algebra, n)
    return solve(f) is not None, "sat"


def spectrum_report(algebra: Algebra, lo: int, hi: int, limit: int) -> SpectrumReport:
    if lo < 1 or hi < lo:
        raise ValueError(f"need 1 <= lo <= hi, got [{lo}, {hi}]")
    computed = []
    methods = {}
    for n in range(lo, hi + 1):
        present, how = _cell(algebra, n, limit)
        methods[n] = how
        if present:
            computed.append(n)
    expected = [n for n in range(lo, hi + 1) if expected_cyclic_spec(algebra, n)]
    return SpectrumReport(
        algebra=algebra.name,
        spec_text=_SPEC_TEXT[algebra.name],
        expected=expected,
        computed=computed,
        methods=methods,
    )


def _fmt_set(xs: list[int]) -> str:
    """Condensed range text: [8, 11, 12, 13, 16] -> "8, 11-13, 16"."""
    if not xs:
        return "(empty)"
    parts = []
    start = prev = xs[0]
    for x in xs[1:] + [None]:
        if x is not None and x == prev + 1:
            prev = x
            continue
        parts.append(str(start) if start == prev else f"{start}-{prev}")
        if x is not None:
            start = prev = x
    return ", ".join(parts)


def _print_coloring(coloring: Coloring, as_json: bool) -> None:
    if as_json:
        print(json.dumps(coloring_to_json(coloring)))
    else:
        a = sorted(coloring.a_set)
        b = sorted(coloring.b_set)
        print(f"group {coloring.group.spec_string()}: A = {a}, B = {b}")


def _parse_elements(text: str) -> frozenset[int]:
    try:
        return frozenset(int(tok) for tok in text.split(",") if tok.strip())
    except ValueError:
        raise ValueError(f"bad element list {text!r}; expected comma-separated integers")


def _coloring_from_args(args) -> Coloring:
    if args.coloring:
        return coloring_from_json(json.loads(args.coloring))
    if args.A is None:
        raise ValueError("need --A (with --n or --group) or --coloring")
    if args.n is not None:
        group = CyclicGroup(args.n)
    elif args.group:
        group = parse_group(args.group)
        if not isinstance(group, CyclicGroup):
            raise ValueError("--A lists elements of a cyclic group; use --coloring for products")
    else:
        raise ValueError("need --n or --group alongside --A")
    return Coloring(group, _parse_elements(args.A))


def _cmd_verify(args) -> int:
    algebra = by_name(args.algebra)
    coloring = _coloring_from_args(args)
    violations = verify(algebra, coloring)
    if args.json:
        print(json.dumps({"valid": not violations, "violations": [v.to_json() for v in violations]}))
    elif not violations:
        print("valid")
    else:
        for v in violations:
            where = f" via {v.witnesses}" if v.witnesses else ""
            cycle = f" cycle {v.cycle.label}" if v.cycle else ""
            extra = f" ({v.detail})" if v.detail else ""
            print(f"{v.kind} at z={v.z}:{cycle}{where}{extra}")
    return 0 if not violations else 1


def _cmd_construct(args) -> int:
    algebra = by_name(args.algebra)
    if args.group:
        group = parse_group(args.group)
        if isinstance(group, CyclicGroup):
            out = construct(algebra, group.order)
        elif algebra.name != "4_7":
            raise ValueError(f"only 4_7 has product-group constructions, not {algebra.name}")
        elif not abelian_4_7_representable(group):
            print(f"no construction over {group.spec_string()}")
            return 1
        else:
            out = construct_4_7_abelian(group)
    elif args.n is not None:
        out = construct(algebra, args.n)
    else:
        raise ValueError("need --n or --group")
    if out is NO_CONSTRUCTION:
        print("no construction for this order")
        return 1
    if out is NO_CLOSED_FORM:
        print("no closed form for this algebra; use search or solve")
        return 1
    _print_coloring(out, args.json)
    return 0


def _cmd_search(args) -> int:
    algebra = by_name(args.algebra)
    if args.n is None:
        raise ValueError("need --n")
    if not exists(algebra, args.n, args.limit):
        print("no representation")
        return 1
    if args.n // 2 <= 24:
        witness = find_all(algebra, args.n)[0]
        _print_coloring(witness, args.json)
    else:
        print("representation exists (witness enumeration capped at 48 elements)")
    return 0


def _cmd_spectrum(args) -> int:
    algebra = by_name(args.algebra)
    found = spectrum(algebra, args.lo, args.hi, args.limit)
    if args.json:
        print(json.dumps({"algebra": algebra.name, "lo": args.lo, "hi": args.hi, "spectrum": found}))
    else:
        print(_fmt_set(found))
    return 0 if found else 1


def _cmd_random(args) -> int:
    algebra = by_name(args.algebra)
    if args.n is None:
        raise ValueError("need --n")
    out = random_search(algebra, args.n, args.iters, args.seed)
    if out is NOT_FOUND:
        print(f"no witness in {args.iters} samples")
        return 1
    _print_coloring(out, args.json)
    return 0


def _cmd_cnf(args) -> int:
    algebra = by_name(args.algebra)
    if args.n is None:
        raise ValueError("need --n")
    f, vm = encode(algebra, args.n)
    text = emit_dimacs(f, vm)
    if args.dimacs:
        with open(args.dimacs, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {f.num_vars} vars, {len(f.clauses)} clauses to {args.dimacs}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_solve(args) -> int:
    if args.dimacs:
        with open(args.dimacs, encoding="utf-8") as fh:
            f = parse_dimacs(fh.read())
        model = solve(f)
        if model is None:
            print("UNSAT")
            return 1
        lits = [v if model[v] else -v for v in sorted(model)]
        print("SAT " + " ".join(str(l) for l in lits))
        return 0
    if not args.algebra or args.n is None:
        raise ValueError("need an algebra and --n, or --dimacs")
    algebra = by_name(args.algebra)
    f, vm = encode(algebra, args.n)
    model = solve(f)
    if model is None:
        print("UNSAT")
        return 1
    _print_coloring(decode(model, vm), args.json)
    return 0


def _cmd_bounds(args) -> int:
    rows = [union_bound(n) for n in range(3, args.max + 1)]
    if args.json:
        print(json.dumps({
            "threshold": union_bound_threshold(),
            "rows": [{"n": r.n, "p_value": r.p_value, "below_one": r.below_one} for r in rows],
        }))
        return 0
    print(f"{'n':>4}  {'p_value':>12}  below_one")
    for r in rows:
        print(f"{r.n:>4}  {r.p_value:>12.6g}  {str(r.below_one).lower()}")
    print(f"bound first drops below 1 at n = {union_bound_threshold()}")
    return 0


def _cmd_report(args) -> int:
    reports = [spectrum_report(a, args.lo, args.hi, args.limit) for a in catalog()]
    ok = all(not r.diff for r in reports)
    if args.json:
        print(json.dumps({
            "lo": args.lo,
            "hi": args.hi,
            "ok": ok,
            "algebras": {
                r.algebra: {
                    "spec": r.spec_text,
                    "expected": r.expected,
                    "computed": r.computed,
                    "diff": r.diff,
                    "methods": {str(n): m for n, m in sorted(r.methods.items())},
                }
                for r in reports
            },
        }))
        return 0 if ok else 1
    header = f"cyclic spec computed on [{args.lo}, {args.hi}]"
    width = max(len(header), max(len(_fmt_set(r.computed)) for r in reports))
    print(f"{'algebra':<8} {'spec':<16} {header:<{width}} diff")
    for r in reports:
        diff = "-" if not r.diff else _fmt_set(r.diff)
        print(f"{r.algebra:<8} {r.spec_text:<16} {_fmt_set(r.computed):<{width}} {diff}")
    if not ok:
        print("computed spectra differ from the advertised closed forms above")
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclospec",
        description="cyclic-group spectra of the symmetric three-atom relation algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text, algebra="required"):
        p = sub.add_parser(name, help=help_text)
        if algebra == "required":
            p.add_argument("algebra", help="algebra name, e.g. 4_7 or 47")
        elif algebra == "optional":
            p.add_argument("algebra", nargs="?", help="algebra name, e.g. 4_7 or 47")
        p.add_argument("--json", action="store_true", help="machine-readable output")
        p.set_defaults(func=func)
        return p

    p = add("verify", _cmd_verify, "check a coloring against an algebra's law")
    p.add_argument("--n", type=int, help="cyclic group order")
    p.add_argument("--A", help="comma-separated a-colored elements")
    p.add_argument("--group", help='group spec, "Z/8" or "4x3"')
    p.add_argument("--coloring", help='coloring JSON, {"group": "Z/8", "A": [...]}')

    p = add("construct", _cmd_construct, "closed-form coloring when one exists")
    p.add_argument("--n", type=int, help="cyclic group order")
    p.add_argument("--group", help="group spec; products supported for 4_7")

    p = add("search", _cmd_search, "exhaustive witness search over Z/n")
    p.add_argument("--n", type=int, help="cyclic group order")
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="exhaustive cap")

    p = add("spectrum", _cmd_spectrum, "all representable n in a range")
    p.add_argument("--lo", type=int, default=3)
    p.add_argument("--hi", type=int, default=DEFAULT_LIMIT)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="exhaustive cap")

    p = add("random", _cmd_random, "seeded random witness sampling")
    p.add_argument("--n", type=int, help="cyclic group order")
    p.add_argument("--iters", type=int, default=10000, help="sample budget")
    p.add_argument("--seed", type=int, default=0)

    p = add("cnf", _cmd_cnf, "emit the DIMACS encoding for (algebra, n)")
    p.add_argument("--n", type=int, help="cyclic group order")
    p.add_argument("--dimacs", help="write to this path instead of stdout")

    p = add("solve", _cmd_solve, "decide representability by SAT", algebra="optional")
    p.add_argument("--n", type=int, help="cyclic group order")
    p.add_argument("--dimacs", help="solve this DIMACS file instead of encoding")

    p = add("bounds", _cmd_bounds, "union bound table and threshold", algebra=None)
    p.add_argument("--max", type=int, default=40, help="largest n in the table")

    p = add("report", _cmd_report, "computed spectra vs the advertised closed forms", algebra=None)
    p.add_argument("--lo", type=int, default=3)
    p.add_argument("--hi", type=int, default=40)
    p.add_argument("--limit", type=int, default=DEFAULT_LIMIT, help="exhaustive cap")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
