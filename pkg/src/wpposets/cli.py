"""Command-line front end.

Subcommands: enumerate, dp, pack, product, coproduct, pairing, matrix,
hasse, verify.  Exit codes: 0 success, 1 validation error, 2 capacity
guard exceeded.  Output is deterministic (fixed basis order, fixed JSON
key order).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import hopf, orders, posets
from . import verify as verify_mod
from .hopf import ModuleElement
from .packed_words import (
    CapacityError,
    DEFAULT_MAX_LENGTH,
    PackedWord,
    iter_packed_words,
)


class _UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; route through the
    # validation-error path (exit 1) instead.
    def error(self, message):
        raise _UsageError(message)


def build_parser():
    parser = _Parser(prog="wpposets", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream all packed words of a length")
    p.add_argument("n", type=int)

    p = sub.add_parser("dp", help="weak plane poset of a packed word, as JSON")
    p.add_argument("word")

    p = sub.add_parser("pack", help="packed word of a poset JSON file ('-' for stdin)")
    p.add_argument("poset")

    p = sub.add_parser("product", help="poset-basis product of two words")
    p.add_argument("word1")
    p.add_argument("word2")

    p = sub.add_parser("coproduct", help="poset-basis coproduct of a word, as JSON")
    p.add_argument("word")

    p = sub.add_parser("pairing", help="picture pairing of two poset basis words")
    p.add_argument("word1")
    p.add_argument("word2")

    p = sub.add_parser("matrix", help="named morphism or pairing matrix")
    p.add_argument("kind", choices=hopf.MATRIX_KINDS)
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("hasse", help="Hasse diagram of an order on packed words")
    p.add_argument("n", type=int)
    p.add_argument("order", choices=orders.ORDER_KINDS)
    p.add_argument("--dot", action="store_true", help="emit DOT instead of edge lines")
    p.add_argument("--out", help="write to a file instead of stdout")

    p = sub.add_parser("verify", help="run the invariant suite")
    p.add_argument("--max-degree", type=int, default=4)

    return parser


def _word(text):
    return PackedWord.parse(text)


def _load_poset(path):
    raw = sys.stdin.read() if path == "-" else open(path).read()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(f"malformed poset JSON in {path}: {exc}") from None
    return posets.DoublePoset.from_json_dict(data)


def _dispatch(args, out):
    if args.command == "enumerate":
        if args.n > DEFAULT_MAX_LENGTH:
            raise CapacityError(
                f"enumerate {args.n} exceeds the guard ({DEFAULT_MAX_LENGTH})"
            )
        for w in iter_packed_words(args.n):
            print(w.text(), file=out)
        return 0

    if args.command == "dp":
        p = posets.poset_of_word(_word(args.word))
        print(json.dumps(p.to_json_dict()), file=out)
        return 0

    if args.command == "pack":
        print(posets.word_of_poset(_load_poset(args.poset)).text(), file=out)
        return 0

    if args.command == "product":
        u, v = _word(args.word1), _word(args.word2)
        prod = posets.product(posets.poset_of_word(u), posets.poset_of_word(v))
        print(posets.word_of_poset(prod).text(), file=out)
        return 0

    if args.command == "coproduct":
        t = hopf.wpp_coproduct(ModuleElement.basis(_word(args.word)))
        print(json.dumps(t.to_json_dict()), file=out)
        return 0

    if args.command == "pairing":
        x = ModuleElement.basis(_word(args.word1))
        y = ModuleElement.basis(_word(args.word2))
        print(hopf.pairing(x, y), file=out)
        return 0

    if args.command == "matrix":
        m = hopf.matrix_of(args.kind, args.n)
        text = json.dumps(m.to_json_dict()) if args.format == "json" else m.to_text().rstrip()
        print(text, file=out)
        return 0

    if args.command == "hasse":
        diagram = orders.hasse(args.n, args.order)
        if args.dot:
            rendered = diagram.to_dot().rstrip()
        else:
            lines = ["nodes " + " ".join(w.text() for w in diagram.nodes)]
            lines += [f"edge {a.text()} {b.text()}" for a, b in diagram.edges]
            rendered = "\n".join(lines)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(rendered + "\n")
        else:
            print(rendered, file=out)
        return 0

    if args.command == "verify":
        if args.max_degree > hopf.VERIFY_MAX_DEGREE:
            raise CapacityError(
                f"verify degree {args.max_degree} exceeds the guard ({hopf.VERIFY_MAX_DEGREE})"
            )
        results = verify_mod.run_verification(args.max_degree)
        for check in results:
            print(check.line(), file=out)
        failed = [c for c in results if not c.ok]
        print(
            f"{'FAILED' if failed else 'OK'}: {len(results) - len(failed)}/{len(results)} checks passed",
            file=out,
        )
        return 1 if failed else 0

    raise _UsageError(f"unknown subcommand {args.command!r}")


def main(argv=None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _dispatch(args, out)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
