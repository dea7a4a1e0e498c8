import pytest

from analytical_engine.decimal_value import DecimalValue
from analytical_engine.engine import (
    HaltCard,
    OpCard,
    Program,
    ReceiveCard,
    RetainCard,
    SupplyCard,
    TransferCard,
    load,
    run,
)
from analytical_engine.errors import DivisionByZero, Halted, InvalidProgram, NothingHeld
from analytical_engine.mill import Operation
from analytical_engine.programs import Coefficients, build_program_x, build_program_xy
from analytical_engine.trace import to_json

MUL, SUB, DIV = Operation.MUL, Operation.SUB, Operation.DIV


def val(n):
    return DecimalValue.from_int(n, 40)


def test_load_places_coefficients(paper_set):
    e = load(build_program_x(paper_set))
    assert [int(e.store.peek(k)) for k in range(1, 7)] == [1, 2, -8, 1, -1, 1]
    assert all(e.store.prime(k) == 0 for k in range(1, 7))


def test_load_empty():
    e = load(Program())
    assert all(v.is_zero() for v in e.store.cells)
    assert e.halted


@pytest.mark.parametrize(
    "ops,cards",
    [
        ((OpCard(MUL), OpCard(MUL)), (SupplyCard(1, 1), SupplyCard(2, 2), ReceiveCard(3))),
        ((OpCard(MUL),), (SupplyCard(1, 1), SupplyCard(2, 2))),
        ((OpCard(MUL),), (SupplyCard(1, 1), ReceiveCard(3), SupplyCard(2, 2))),
        ((OpCard(MUL),), (SupplyCard(1, 1), SupplyCard(1, 2), ReceiveCard(3))),
        ((), (ReceiveCard(3),)),
        ((), (TransferCard(1, 1),)),
        ((OpCard(MUL),), (SupplyCard(1, 1), SupplyCard(2, 200), ReceiveCard(3))),
        ((OpCard(MUL),), (SupplyCard(1, 1, save_to=1), SupplyCard(2, 2), ReceiveCard(3))),
        ((SupplyCard(1, 1),), ()),
    ],
)
def test_load_rejects_inconsistent_streams(ops, cards):
    with pytest.raises(InvalidProgram):
        load(Program(ops, cards))


def test_load_rejects_bad_init_address():
    with pytest.raises(InvalidProgram):
        load(Program(inits={100: val(1)}))


def test_step_one_of_table_1(paper_set):
    row = load(build_program_x(paper_set)).step()
    assert row.nature is MUL
    assert row.reads == (5, 1) and row.zeroed == (5, 1)
    assert row.write == (7, val(-1), 1)
    assert row.comment == "v7 = v5 × v1"


def test_step_8_of_table_2_is_memory_only(paper_set):
    e = load(build_program_xy(paper_set))
    rows = [e.step() for _ in range(8)]
    row = rows[-1]
    assert row.nature is None
    assert row.reads == (8,)
    assert row.write.addr == 1 and int(row.write.value) == 1
    assert row.comment == "v1'' = v1 = a"
    assert e.store.peek(8).is_zero()


def test_division_by_zero_is_annotated_with_step():
    e = load(build_program_x(Coefficients(1, 1, 5, 1, 1, 7)))
    for _ in range(6):
        e.step()
    with pytest.raises(DivisionByZero) as info:
        e.step()
    assert info.value.step == 7
    assert str(info.value) == "step 7: division by zero"


def test_step_after_halt():
    e = load(Program((), (HaltCard(),)))
    assert e.halted
    with pytest.raises(Halted):
        e.step()


def test_halt_stops_the_run():
    cards = (TransferCard(1, 2), HaltCard(), TransferCard(3, 4))
    t = run(Program((), cards, {2: val(9)}))
    assert len(t.rows) == 1
    assert int(t.final_store.value(1)) == 1


def test_run_empty_program_keeps_inits():
    t = run(Program(inits={4: val(-3)}))
    assert t.rows == ()
    assert t.final_store.values == {4: val(-3)}


def test_retain_without_held_fails_at_runtime():
    cards = (RetainCard(1), SupplyCard(2, 1), ReceiveCard(2))
    with pytest.raises(NothingHeld) as info:
        run(Program((OpCard(MUL),), cards))
    assert info.value.step == 1


def test_run_program_1(paper_set):
    t = run(build_program_x(paper_set))
    assert len(t.rows) == 7
    assert int(t.final_store.value(3)) == 2
    assert t.final_store.prime(3) == 2


def test_run_program_2(paper_set):
    t = run(build_program_xy(paper_set))
    assert len(t.rows) == 13
    assert int(t.final_store.value(5)) == 3
    assert t.final_store.prime(5) == 3
    assert [(w.addr, int(w.value)) for w in t.results()] == [(4, 2), (5, 3)]


def test_operation_census(paper_set):
    t = run(build_program_x(paper_set))
    assert [r.nature for r in t.rows] == [MUL] * 4 + [SUB] * 2 + [DIV]


def test_determinism(paper_set):
    assert to_json(run(build_program_xy(paper_set))) == to_json(run(build_program_xy(paper_set)))


@pytest.mark.parametrize("build", [build_program_x, build_program_xy])
def test_reads_are_zeroed_after_their_row(build, paper_set):
    e = load(build(paper_set))
    while not e.halted:
        row = e.step()
        for a in row.zeroed:
            assert e.store.peek(a).is_zero()
        assert set(row.reads) - set(row.zeroed) <= {a for a, _ in row.saves} | {row.write.addr}


@pytest.mark.parametrize("build", [build_program_x, build_program_xy])
def test_comment_primes_follow_store_counter(build, paper_set):
    program = build(paper_set)
    for row in run(program).rows:
        lhs = row.comment.split(" = ")[0]
        marks = lhs.count("'")
        assert lhs.rstrip("'") == f"v{row.write.addr}"
        # cells that started out empty are unprimed on their first write
        offset = 0 if row.write.addr in program.inits else 1
        assert marks == row.write.prime - offset


def test_restore_after_step_10(paper_set):
    e = load(build_program_xy(paper_set))
    for _ in range(10):
        e.step()
    s = e.store
    assert [int(s.peek(k)) for k in (1, 2, 3, 8, 9)] == [1, 2, -8, 0, 0]
