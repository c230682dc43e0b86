"""Command line front end.

    tridend trees -d 3 -f grid
    tridend product star 1 1
    tridend product --op mid 1 1
    tridend coproduct 1326544 -f packed
    tridend primitives --max-degree 4 --cache prim_cache
    tridend verify --max-degree 4 --cache prim_cache
    tridend quasishuffles 2 2

Exit status: 0 success, 1 verification failure, 2 parse or usage error,
3 capacity overflow.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import __version__
from . import quasishuffle as qs
from .algebra import OPS, AlgebraError, TreeVector, product
from .cache import CorruptCacheError, DirectoryCache, StaleCacheError
from .coalgebra import CoalgebraError, coproduct, is_primitive
from .formats import FORMATS, FormatError, parse_tree, render_tree, render_tensor, render_vector, tree_from_json
from .primitives import PrimitiveVerificationError, kernel_oracle, pipeline, same_span, span_rank
from .treecode import CapacityError, CodeError, code_from_packed_word, enumerate_trees, parse_word

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3
KERNEL_CHECK_LIMIT = 4


class UsageError(ValueError):
    pass


def _emit(text: str) -> None:
    sys.stdout.write(text + "\n")


def _trees_from_json_file(path: str) -> list:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read {path}: {exc}") from None
    items = data if isinstance(data, list) else [data]
    out = []
    for item in items:
        if isinstance(item, str):
            out.append(code_from_packed_word(parse_word(item)))
        else:
            out.append(tree_from_json(item))
    return out


def cmd_trees(args) -> int:
    trees = enumerate_trees(args.degree)
    sep = "\n" if args.format in ("packed", "json") else "\n\n"
    _emit(sep.join(render_tree(t, args.format) for t in trees))
    return EXIT_OK


def cmd_product(args) -> int:
    operands = list(args.trees)
    op = args.op
    if op is None:
        if not operands:
            raise UsageError("product needs an operation")
        op = operands.pop(0)
    if op not in OPS:
        raise UsageError(f"unknown operation {op!r}; choose from {', '.join(OPS)}")
    trees = [parse_tree(x) for x in operands]
    if args.json_file:
        trees += _trees_from_json_file(args.json_file)
    if len(trees) != 2:
        raise UsageError(f"product needs exactly two trees, got {len(trees)}")
    _emit(render_vector(product(trees[0], trees[1], op), args.format))
    return EXIT_OK


def cmd_coproduct(args) -> int:
    trees = [parse_tree(x) for x in args.trees]
    if args.json_file:
        trees += _trees_from_json_file(args.json_file)
    if len(trees) != 1:
        raise UsageError(f"coproduct needs exactly one tree, got {len(trees)}")
    _emit(render_tensor(coproduct(trees[0]), args.format))
    return EXIT_OK


def _max_degree(args) -> int:
    d = args.max_degree
    if d is None:
        raise UsageError("--max-degree is required")
    if d < 0:
        raise UsageError("--max-degree must be nonnegative")
    return d


def cmd_primitives(args) -> int:
    d = _max_degree(args)
    cache = DirectoryCache(args.cache) if args.cache else None
    basis = pipeline(d, cache)
    dims = basis.dimensions()
    if args.format == "json":
        out = {
            "dimensions": list(dims),
            "bases": {str(n): [json.loads(render_vector(v, "json")) for v in basis[n]]
                      for n in basis.degrees()},
        }
        _emit(json.dumps(out))
        return EXIT_OK
    _emit("dimensions: " + " ".join(map(str, dims)))
    for n in basis.degrees():
        _emit(f"\ndegree {n} (dimension {len(basis[n])})")
        for i, (v, label) in enumerate(zip(basis[n], basis.provenance[n])):
            _emit(f"b{n}[{i}]  from {label}")
            _emit(render_vector(v, args.format))
    return EXIT_OK


def cmd_verify(args) -> int:
    d = _max_degree(args)
    if not args.cache:
        raise UsageError("verify needs --cache")
    if d == 0:
        _emit("nothing to check")
        return EXIT_OK
    cache = DirectoryCache(args.cache, strict=True)
    failures = []
    for n in range(1, d + 1):
        if not cache.exists(n):
            failures.append(f"degree {n}: no cache file {cache.path(n)}")
            continue
        try:
            basis, _ = cache.read(n)
        except (StaleCacheError, CorruptCacheError) as exc:
            failures.append(str(exc))
            continue
        bad = False
        for i, v in enumerate(basis):
            if not v or v.degrees() != {n}:
                failures.append(f"degree {n}, index {i}: not a nonzero vector of degree {n}")
                bad = True
            elif not is_primitive(v):
                failures.append(f"degree {n}, index {i}: not primitive")
                bad = True
        if bad:
            continue
        if span_rank(basis, n) != len(basis):
            failures.append(f"degree {n}: basis vectors are linearly dependent")
            continue
        if n <= KERNEL_CHECK_LIMIT:
            kernel = kernel_oracle(n)
            if len(kernel) != len(basis) or not same_span(basis, kernel, n):
                failures.append(f"degree {n}: dimension {len(basis)} but the kernel has "
                                f"dimension {len(kernel)}")
                continue
        _emit(f"degree {n}: ok (dimension {len(basis)})")
    for msg in failures:
        print(f"FAILED {msg}", file=sys.stderr)
    return EXIT_VERIFY if failures else EXIT_OK


def cmd_quasishuffles(args) -> int:
    if args.k < 0 or args.l < 0:
        raise UsageError("block lengths must be nonnegative")
    if args.family:
        shuffles = qs.enumerate_family(args.k, args.l, args.family)
    else:
        shuffles = qs.enumerate(args.k, args.l)
    for s in shuffles:
        _emit(str(s))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tridend", description="Schroeder tree algebra toolkit")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    p.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(sp, default="packed"):
        sp.add_argument("-f", "--format", choices=FORMATS, default=default)

    sp = sub.add_parser("trees", help="list the trees of a degree")
    sp.add_argument("-d", "--degree", type=int, required=True)
    fmt(sp, "grid")
    sp.set_defaults(func=cmd_trees)

    sp = sub.add_parser("product", help="product of two trees")
    sp.add_argument("trees", nargs="*", help="[OP] T S as packed words or JSON")
    sp.add_argument("--op", choices=sorted(OPS))
    sp.add_argument("--json-file")
    fmt(sp)
    sp.set_defaults(func=cmd_product)

    sp = sub.add_parser("coproduct", help="coproduct of a tree")
    sp.add_argument("trees", nargs="*")
    sp.add_argument("--json-file")
    fmt(sp)
    sp.set_defaults(func=cmd_coproduct)

    for name, func, text in (("primitives", cmd_primitives, "compute primitive bases"),
                             ("verify", cmd_verify, "check a cached basis")):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("-d", "--degree", "--max-degree", dest="max_degree", type=int)
        sp.add_argument("--cache")
        fmt(sp)
        sp.set_defaults(func=func)

    sp = sub.add_parser("quasishuffles", help="list (k,l)-quasi-shuffles")
    sp.add_argument("k", type=int)
    sp.add_argument("l", type=int)
    sp.add_argument("--family", nargs="+", choices=["L", "M", "R"])
    sp.set_defaults(func=cmd_quasishuffles)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except PrimitiveVerificationError as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    except (UsageError, CodeError, FormatError, AlgebraError, CoalgebraError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
