"""The `prodex` command line tool.

Every subcommand is a thin wrapper over one library operation, with exact
text or JSON output.  Big integers in JSON are always decimal strings;
plain output is one index-prefixed value per line, stable for diffing.

Exit codes: 0 success, 1 usage or parse error, 2 mathematical failure
(non-realizable ghost, non-unit constant term, non-prime argument,
identity violation).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .congruences import (
    fermat_check,
    fermat_witness,
    partition_numbers,
    rational_family_series,
    wieferich_scan,
)
from .errors import (
    IdentityViolationError,
    NonUnitConstantError,
    NotPrimeError,
    NotRealizableError,
    OrderMismatchError,
)
from .ghost import exponents_from_ghost, ghost_from_exponents
from .products import (
    ProductExpansion,
    expand_to_product,
    inverse_sequence,
    product_to_series,
    tilde_transform,
)
from .series import GhostSequence, TruncatedSeries, make_series

BUILTIN_DEFAULT_ORDER = 64
ORDER_ENV_VAR = "PRODEX_DEFAULT_ORDER"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_MATH = 2

_MATH_ERRORS = (
    NotRealizableError,
    NonUnitConstantError,
    NotPrimeError,
    IdentityViolationError,
    OrderMismatchError,
)


@dataclass(frozen=True)
class CliConfig:
    default_order: int = BUILTIN_DEFAULT_ORDER
    output_format: str = "plain"
    thread_count: int = 1


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the contract here is 1
    def error(self, message: str):
        raise _UsageError(message)


# ---------------------------------------------------------------------------
# input plumbing


def _parse_int_list(text: str, what: str) -> list[int]:
    items = [piece.strip() for piece in text.split(",")]
    if items == [""]:
        raise _UsageError(f"empty {what} list")
    try:
        return [int(piece, 10) for piece in items]
    except ValueError:
        raise _UsageError(f"could not parse {what} as a comma-separated "
                          f"integer list: {text!r}") from None


def _load_input_file(path: str) -> dict:
    try:
        with open(path, "r", encoding="utf-8") as handle:
            data = json.load(handle)
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise _UsageError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise _UsageError(f"{path}: expected a JSON object")
    return data


def _resize(values: list[int], length: int, what: str) -> list[int]:
    """Zero-pad or truncate to the requested length."""
    if length <= 0:
        raise _UsageError(f"{what} cannot be resized to length {length}")
    if len(values) < length:
        return values + [0] * (length - len(values))
    return values[:length]


def _effective_order(args, cfg: CliConfig, intrinsic: int | None) -> int:
    if getattr(args, "order", None) is not None:
        return args.order
    if intrinsic is not None:
        return intrinsic
    return cfg.default_order


def _series_input(args, cfg: CliConfig) -> TruncatedSeries:
    """Series from --coeffs or --input, resized to the effective order."""
    if args.coeffs is not None and args.input is not None:
        raise _UsageError("give either --coeffs or --input, not both")
    if args.coeffs is not None:
        coeffs = _parse_int_list(args.coeffs, "coefficient")
    elif args.input is not None:
        data = _load_input_file(args.input)
        try:
            coeffs = list(TruncatedSeries.from_json_dict(data).coeffs)
        except (KeyError, TypeError, ValueError) as exc:
            raise _UsageError(f"{args.input}: bad series record: {exc}") from None
    else:
        raise _UsageError("a series is required: --coeffs or --input")
    order = _effective_order(args, cfg, intrinsic=len(coeffs) - 1)
    return make_series(_resize(coeffs, order + 1, "series"))


def _exponents_input(args, cfg: CliConfig) -> ProductExpansion:
    """Exponents from --exponents, --input, or --ones."""
    sources = [
        args.exponents is not None,
        args.input is not None,
        getattr(args, "ones", False),
    ]
    if sum(sources) > 1:
        raise _UsageError("give only one of --exponents, --input, --ones")
    if getattr(args, "ones", False):
        order = _effective_order(args, cfg, intrinsic=None)
        return ProductExpansion((1,) * order)
    if args.exponents is not None:
        exps = _parse_int_list(args.exponents, "exponent")
    elif args.input is not None:
        data = _load_input_file(args.input)
        try:
            exps = list(ProductExpansion.from_json_dict(data).exponents)
        except (KeyError, TypeError, ValueError) as exc:
            raise _UsageError(f"{args.input}: bad expansion record: {exc}") from None
    else:
        raise _UsageError("exponents are required: --exponents, --input, or --ones")
    order = _effective_order(args, cfg, intrinsic=len(exps))
    return ProductExpansion(tuple(_resize(exps, order, "exponents")))


def _ghost_input(args, cfg: CliConfig) -> GhostSequence:
    if args.values is not None and args.input is not None:
        raise _UsageError("give either --values or --input, not both")
    if args.values is not None:
        values = _parse_int_list(args.values, "ghost value")
    elif args.input is not None:
        data = _load_input_file(args.input)
        try:
            values = list(GhostSequence.from_json_dict(data).values)
        except (KeyError, TypeError, ValueError) as exc:
            raise _UsageError(f"{args.input}: bad ghost record: {exc}") from None
    else:
        raise _UsageError("ghost values are required: --values or --input")
    order = _effective_order(args, cfg, intrinsic=len(values))
    return GhostSequence(tuple(_resize(values, order, "ghost values")))


# ---------------------------------------------------------------------------
# output plumbing


def _emit_json(payload: dict) -> None:
    print(json.dumps(payload))


def _indexed_lines(values, start: int) -> list[str]:
    return [f"{k} {v}" for k, v in enumerate(values, start=start)]


def _emit_series(f: TruncatedSeries, fmt: str) -> None:
    if fmt == "json":
        _emit_json(f.to_json_dict())
    else:
        print("\n".join(_indexed_lines(f.coeffs, start=0)))


def _emit_expansion(m: ProductExpansion, fmt: str) -> None:
    if fmt == "json":
        _emit_json(m.to_json_dict())
    else:
        print("\n".join(_indexed_lines(m.exponents, start=1)))


def _emit_ghost(g: GhostSequence, fmt: str) -> None:
    if fmt == "json":
        _emit_json(g.to_json_dict())
    else:
        print("\n".join(_indexed_lines(g.values, start=1)))


# ---------------------------------------------------------------------------
# subcommands


def _cmd_expand(args, cfg: CliConfig) -> int:
    _emit_expansion(expand_to_product(_series_input(args, cfg)), cfg.output_format)
    return EXIT_OK


def _cmd_series(args, cfg: CliConfig) -> int:
    _emit_series(product_to_series(_exponents_input(args, cfg)), cfg.output_format)
    return EXIT_OK


def _cmd_invert(args, cfg: CliConfig) -> int:
    result = inverse_sequence(_exponents_input(args, cfg))
    if args.tilde:
        result = tilde_transform(result)
    _emit_expansion(result, cfg.output_format)
    return EXIT_OK


def _cmd_ghost(args, cfg: CliConfig) -> int:
    _emit_ghost(ghost_from_exponents(_exponents_input(args, cfg)), cfg.output_format)
    return EXIT_OK


def _cmd_unghost(args, cfg: CliConfig) -> int:
    _emit_expansion(exponents_from_ghost(_ghost_input(args, cfg)), cfg.output_format)
    return EXIT_OK


def _cmd_family(args, cfg: CliConfig) -> int:
    order = _effective_order(args, cfg, intrinsic=None)
    family = rational_family_series(args.d, order)
    if args.expand:
        _emit_expansion(expand_to_product(family), cfg.output_format)
    else:
        _emit_series(family, cfg.output_format)
    return EXIT_OK


def _cmd_fermat(args, cfg: CliConfig) -> int:
    witness = fermat_witness(args.d, args.p)
    if cfg.output_format == "json":
        _emit_json(witness.to_json_dict())
    else:
        for field in ("d", "p", "m_p", "m_2p", "n_p", "n_2p", "quotient"):
            print(f"{field} {getattr(witness, field)}")
        print("identity OK")
    return EXIT_OK


def _cmd_check(args, cfg: CliConfig) -> int:
    ok = fermat_check(args.a, args.p)
    if cfg.output_format == "json":
        _emit_json({"a": str(args.a), "p": str(args.p), "ok": ok})
    else:
        print(f"a {args.a}")
        print(f"p {args.p}")
        print(f"ok {'true' if ok else 'false'}")
    return EXIT_OK if ok else EXIT_MATH


def _cmd_wieferich(args, cfg: CliConfig) -> int:
    if args.lo > args.hi or args.lo < 2:
        raise _UsageError(f"invalid range [{args.lo}, {args.hi}]")
    report = wieferich_scan(args.lo, args.hi, threads=cfg.thread_count)
    if cfg.output_format == "json":
        _emit_json(report.to_json_dict())
    else:
        print(f"lo {report.lo}")
        print(f"hi {report.hi}")
        print(f"primes_tested {report.primes_tested}")
        for p in report.hits:
            print(f"hit {p}")
    return EXIT_OK


def _cmd_partitions(args, cfg: CliConfig) -> int:
    order = _effective_order(args, cfg, intrinsic=None)
    table = partition_numbers(order)
    if not args.via_product:
        if cfg.output_format == "json":
            _emit_json(table.to_json_dict())
        else:
            print("\n".join(_indexed_lines(table.values, start=0)))
        return EXIT_OK

    # reconstruction through the product machinery: the inverse sequence of
    # the all-ones exponents, multiplied back out, must regenerate p(n)
    if order < 1:
        raise _UsageError("--via-product needs order >= 1")
    ones = ProductExpansion((1,) * order)
    via = product_to_series(inverse_sequence(ones))
    equal = via.coeffs == table.values
    if cfg.output_format == "json":
        payload = table.to_json_dict()
        payload["via_product"] = [str(c) for c in via.coeffs]
        payload["equal"] = equal
        _emit_json(payload)
    else:
        for k, (a, b) in enumerate(zip(table.values, via.coeffs)):
            marker = "" if a == b else "  DIFFERS"
            print(f"{k} {a} {b}{marker}")
        print(f"equal {'true' if equal else 'false'}")
    return EXIT_OK if equal else EXIT_MATH


# ---------------------------------------------------------------------------
# parser


def _positive_int(text: str) -> int:
    value = int(text, 10)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {value}")
    return value


def _non_negative_int(text: str) -> int:
    value = int(text, 10)
    if value < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {value}")
    return value


def _build_parser() -> _Parser:
    base = argparse.ArgumentParser(add_help=False)
    base.add_argument("--format", choices=("plain", "json"), default="plain",
                      help="output format (default plain)")
    base.add_argument("--threads", default="1",
                      help="worker count for the scanner: a number or 'auto'")

    common = argparse.ArgumentParser(add_help=False, parents=[base])
    common.add_argument("--order", type=_positive_int, default=None,
                        help=f"truncation order (default: input length, "
                             f"else {ORDER_ENV_VAR} or {BUILTIN_DEFAULT_ORDER})")

    parser = _Parser(prog="prodex",
                     description="exact product expansions of integer power "
                                 "series and their congruences")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", parents=[common],
                       help="series coefficients -> product exponents")
    p.add_argument("--coeffs", help="comma-separated c_0,c_1,...")
    p.add_argument("--input", help="JSON file {order, coeffs}")
    p.set_defaults(handler=_cmd_expand)

    p = sub.add_parser("series", parents=[common],
                       help="product exponents -> series coefficients")
    _add_exponent_args(p)
    p.set_defaults(handler=_cmd_series)

    p = sub.add_parser("invert", parents=[common],
                       help="exponents -> inverse sequence (1/f)")
    _add_exponent_args(p)
    p.add_argument("--tilde", action="store_true",
                   help="negate the result (the 1+e_k x^k convention)")
    p.set_defaults(handler=_cmd_invert)

    p = sub.add_parser("ghost", parents=[common],
                       help="exponents -> divisor-sum (ghost) values")
    _add_exponent_args(p)
    p.set_defaults(handler=_cmd_ghost)

    p = sub.add_parser("unghost", parents=[common],
                       help="ghost values -> exponents (exact solve)")
    p.add_argument("--values", help="comma-separated L_1,L_2,...")
    p.add_argument("--input", help="JSON file {order, values}")
    p.set_defaults(handler=_cmd_unghost)

    p = sub.add_parser("family", parents=[common],
                       help="the rational family (1-(d+1)x)/(1-dx)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--expand", action="store_true",
                   help="print the product exponents instead of the series")
    p.set_defaults(handler=_cmd_family)

    p = sub.add_parser("fermat", parents=[common],
                       help="index-2p identity witness and Fermat quotient")
    p.add_argument("--d", type=_positive_int, required=True)
    p.add_argument("--p", type=int, required=True, help="an odd prime")
    p.set_defaults(handler=_cmd_fermat)

    p = sub.add_parser("check", parents=[common],
                       help="verify p | a^p - a by two routes")
    p.add_argument("--a", type=_positive_int, required=True)
    p.add_argument("--p", type=int, required=True, help="a prime")
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("wieferich", parents=[common],
                       help="scan a prime range for 2^(p-1) = 1 mod p^2")
    p.add_argument("--from", dest="lo", type=int, required=True)
    p.add_argument("--to", dest="hi", type=int, required=True)
    p.set_defaults(handler=_cmd_wieferich)

    p = sub.add_parser("partitions", parents=[base],
                       help="partition numbers p(0)..p(order)")
    p.add_argument("--order", type=_non_negative_int, default=None,
                   help="largest n to tabulate (default "
                        f"{ORDER_ENV_VAR} or {BUILTIN_DEFAULT_ORDER})")
    p.add_argument("--via-product", action="store_true",
                   help="also rebuild the table through the product "
                        "machinery and diff the two")
    p.set_defaults(handler=_cmd_partitions)

    return parser


def _add_exponent_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--exponents", help="comma-separated m_1,m_2,...")
    p.add_argument("--input", help="JSON file {order, exponents}")
    p.add_argument("--ones", action="store_true",
                   help="use the all-ones exponent sequence")


def _default_order_from_env() -> int:
    raw = os.environ.get(ORDER_ENV_VAR)
    if raw is None:
        return BUILTIN_DEFAULT_ORDER
    try:
        value = int(raw, 10)
    except ValueError:
        raise _UsageError(f"{ORDER_ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise _UsageError(f"{ORDER_ENV_VAR} must be >= 1, got {value}")
    return value


def _config_from_args(args) -> CliConfig:
    if args.threads == "auto":
        threads = os.cpu_count() or 1
    else:
        try:
            threads = int(args.threads, 10)
        except ValueError:
            raise _UsageError(
                f"--threads must be a number or 'auto', got {args.threads!r}"
            ) from None
        if threads < 1:
            raise _UsageError(f"--threads must be >= 1, got {threads}")
    return CliConfig(
        default_order=_default_order_from_env(),
        output_format=args.format,
        thread_count=threads,
    )


def main(argv: list[str] | None = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        return args.handler(args, _config_from_args(args))
    except _UsageError as exc:
        print(f"prodex: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except _MATH_ERRORS as exc:
        print(f"prodex: {exc}", file=sys.stderr)
        return EXIT_MATH
    except ValueError as exc:
        # domain violations on otherwise well-formed flags (d < 1, bad range)
        print(f"prodex: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
