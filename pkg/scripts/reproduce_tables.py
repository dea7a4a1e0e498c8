"""Print both BAB L1 code tables as traced by the emulator.

    python scripts/reproduce_tables.py [a b c a' b' c']
"""

import sys

from analytical_engine.engine import run
from analytical_engine.programs import Coefficients, build_program_x, build_program_xy, solve_closed_form
from analytical_engine.trace import render_table


def main(argv):
    co = Coefficients(*map(int, argv)) if argv else Coefficients(1, 2, -8, 1, -1, 1)
    print(f"coefficients a, b, c, a', b', c' = {co.as_tuple()}")
    print(f"closed form: {solve_closed_form(co)}\n")
    print("First table (x only)")
    print(render_table(run(build_program_x(co))))
    print("Second table (x, restore a, b, c, then y)")
    print(render_table(run(build_program_xy(co))))


if __name__ == "__main__":
    main(sys.argv[1:])
