"""Command-line front end.

Exit status is 0 on success, 1 when the machine faults while running and 2
for unreadable input (parse errors, bad flags, missing files).
"""

from __future__ import annotations

import argparse
import re
import sys

from . import asm, trace
from .config import MachineConfig
from .decimal_value import DecimalValue, from_literal
from .engine import run as run_program
from .errors import AsmError, DivisionByZero, MachineError
from .programs import Coefficients, build_program_xy, solve_closed_form

EXIT_OK, EXIT_MACHINE, EXIT_USAGE = 0, 1, 2

_INIT_ITEM = re.compile(r"\s*v(\d+)\s*=\s*(\S+?)\s*")


class UsageError(Exception):
    pass


def parse_init_list(text: str, config: MachineConfig) -> dict[int, DecimalValue]:
    """Parse ``v1=1,v2=-8`` into an address -> value map."""
    out = {}
    for item in text.split(","):
        m = _INIT_ITEM.fullmatch(item)
        if m is None:
            raise UsageError(f"bad --init item {item!r}; expected v<k>=<signed int>")
        addr = int(m.group(1))
        if addr >= config.store_size:
            raise UsageError(f"--init address v{addr} outside store of size {config.store_size}")
        try:
            out[addr] = from_literal(m.group(2), config)
        except MachineError as e:
            raise UsageError(f"--init v{addr}: {e}") from None
    return out


def _read(path: str) -> str:
    try:
        with open(path, encoding="utf-8", newline="") as f:
            return f.read()
    except OSError as e:
        raise UsageError(f"cannot read {path}: {e.strerror}") from None


def cmd_run(args, out) -> int:
    config = MachineConfig(args.digits, args.store_size, args.division)
    program = asm.parse(_read(args.file), config)
    if args.init:
        program = program.with_inits(parse_init_list(args.init, config))
    t = run_program(program)
    if args.format == "json":
        out.write(trace.to_json(t))
    elif args.format == "csv":
        out.write(trace.to_csv(t))
    else:
        out.write(trace.render_table(t))
        for r in t.rows:
            if r.result:
                out.write(f"{r.comment.split(' = ')[0]} = {trace.show(r.write.value)}\n")
    return EXIT_OK


def cmd_asm(args, out) -> int:
    program = asm.parse(_read(args.file))
    if args.text:
        out.write(asm.to_text(program))
    else:
        out.write(asm.to_card_deck(program).to_json())
    return EXIT_OK


def cmd_solve2x2(args, out) -> int:
    co = Coefficients(args.a, args.b, args.c, args.ap, args.bp, args.cp)
    try:
        t = run_program(build_program_xy(co))
    except DivisionByZero as e:
        # the two conditions Babbage left unchecked: steps 7 and 13 divide by them
        kind = {7: "SingularSystem", 13: "DegenerateB"}.get(e.step, "DivisionByZero")
        raise MachineError(f"{kind}: {e}") from None
    except MachineError as e:
        raise MachineError(f"{type(e).__name__}: {e}") from None
    x, y = (w.value for w in t.results())
    out.write(f"x = {x}, y = {y}\n")
    if args.oracle:
        sol = solve_closed_form(co)
        out.write(f"oracle: x = {sol.x}, y = {sol.y}\n")
        out.write("MATCH\n" if (sol.x, sol.y) == (int(x), int(y)) else "MISMATCH\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="analytical-engine",
        description="Run, assemble and inspect Analytical Engine card programs.",
        allow_abbrev=False,
    )
    sub = p.add_subparsers(dest="command", required=True)

    r = sub.add_parser("run", help="execute a .ae program and print its trace", allow_abbrev=False)
    r.add_argument("file")
    r.add_argument("--init", metavar="LIST", help="comma-separated v<k>=<int>, overrides INIT lines")
    r.add_argument("--format", choices=["table", "json", "csv"], default="table")
    r.add_argument("--digits", type=int, default=40)
    r.add_argument("--store-size", type=int, default=100)
    r.add_argument("--division", choices=["exact", "truncate"], default="exact")
    r.set_defaults(func=cmd_run)

    for name in ("asm", "cards"):
        a = sub.add_parser(name, help="print the card deck of a .ae program", allow_abbrev=False)
        a.add_argument("file")
        a.add_argument("--text", action="store_true", help="print canonical source instead of JSON")
        a.set_defaults(func=cmd_asm)

    s = sub.add_parser("solve2x2", help="solve ax+by+c=0, a'x+b'y+c'=0 on the engine", allow_abbrev=False)
    for flag in ("a", "b", "c", "ap", "bp", "cp"):
        s.add_argument(f"--{flag}", type=int, required=True)
    s.add_argument("--oracle", action="store_true", help="also print the closed-form solution")
    s.set_defaults(func=cmd_solve2x2)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if getattr(args, "digits", 1) < 1 or getattr(args, "store_size", 1) < 1:
            raise UsageError("--digits and --store-size must be positive")
        return args.func(args, sys.stdout)
    except (UsageError, AsmError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except MachineError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_MACHINE


if __name__ == "__main__":
    sys.exit(main())
