"""Run both programs on random integer systems and compare with the closed form.

Systems are drawn with coefficients in [-R, R]. Exactly divisible instances
must agree with the oracle; the others must fault at step 7 or 13 with the
error the machine is expected to raise.

    python scripts/oracle_sweep.py --n 5000 --range 99 --seed 0
"""

import argparse
import collections
import random
from fractions import Fraction

from analytical_engine.engine import run
from analytical_engine.errors import MachineError
from analytical_engine.programs import Coefficients, build_program_xy, solve_closed_form


def expected_outcome(co):
    den = co.b_p * co.a - co.b * co.a_p
    if den == 0:
        return ("DivisionByZero", 7)
    x = Fraction(co.b * co.c_p - co.b_p * co.c, den)
    if x.denominator != 1:
        return ("InexactDivision", 7)
    if co.b == 0:
        return ("DivisionByZero", 13)
    y = (-co.c - co.a * x) / co.b
    if y.denominator != 1:
        return ("InexactDivision", 13)
    return ("ok", None)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=5000)
    ap.add_argument("--range", type=int, default=99)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    tally = collections.Counter()
    mismatches = 0
    for _ in range(args.n):
        co = Coefficients(*(rng.randint(-args.range, args.range) for _ in range(6)))
        want = expected_outcome(co)
        try:
            x, y = (int(w.value) for w in run(build_program_xy(co)).results())
            got = ("ok", None)
            sol = solve_closed_form(co)
            mismatches += (x, y) != (sol.x, sol.y)
        except MachineError as e:
            got = (type(e).__name__, e.step)
        tally[got] += 1
        mismatches += got != want
    for (kind, step), count in sorted(tally.items(), key=lambda kv: -kv[1]):
        where = f" at step {step}" if step else ""
        print(f"{kind}{where}: {count}")
    print(f"mismatches against the closed form: {mismatches}")
    return 1 if mismatches else 0


if __name__ == "__main__":
    raise SystemExit(main())
