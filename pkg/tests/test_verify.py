import random
from types import SimpleNamespace

from sphere.verify_tasks import CHECKS, CellRun, verify_grid


def test_cell_run_passes_every_check():
    run = CellRun(6, 0).run()
    assert {"incident_counts", "avoidant_counts", "hull_faces", "strata_counts", "antipodal", "dynamics"} <= run.ran
    assert not any(run.failures.values())


def test_small_cells_skip_inapplicable_checks():
    run = CellRun(3, 0).run()
    assert run.ran == {"incident_counts"}
    assert not any(run.failures.values())


def test_cell_run_is_seeded():
    assert CellRun(7, 2).run().config == CellRun(7, 2).run().config
    assert CellRun(7, 2).rng.random() == random.Random(7 * 100003 + 2).random()


def test_verify_grid_reports_progress():
    progress = []
    summary = verify_grid(lambda text, **extra: progress.append(extra), (4, 5), 2, max_concurrency=2,
                          oracle_max_n=5)
    assert summary.passed
    assert [c.name for c in summary.checks] == list(CHECKS)
    assert progress[0] == {"cells_total": 4, "cells_completed": 0}
    assert progress[-1] == {"cells_completed": 4}
    oracle = next(c for c in summary.checks if c.name == "oracle_equivalence")
    assert oracle.cells == 4


def test_failures_are_collected(monkeypatch):
    import sphere.verify_tasks as verify_tasks
    monkeypatch.setattr(verify_tasks.formulas, "incident_pair", lambda k, l: -1)
    summary = verify_grid(lambda text, **extra: None, (5, 5), 1)
    incident_counts = next(c for c in summary.checks if c.name == "incident_counts")
    assert not summary.passed
    assert not incident_counts.passed
    assert incident_counts.failures[0].startswith("n=5 seed=0:")


def test_k_range_limits_the_orders():
    run = CellRun(6, 0, k_range=(2, 2)).run()
    assert list(run.orders(1, 5)) == [2]
    assert set(run.graphs) == {2}
    assert "antipodal" not in run.ran
    assert "dynamics" not in run.ran
    assert not any(run.failures.values())


def test_unpaired_square_move_fails_the_dynamics_check(monkeypatch):
    import sphere.verify_tasks as verify_tasks
    from sphere.dynamics import MoveKind

    wall = SimpleNamespace(labels=[1, 2, 3, 4])
    square = SimpleNamespace(kind=MoveKind.SQUARE_MOVE, second_kind=None, antipodal_paired=False, wall=wall)
    log = SimpleNamespace(endpoint_match=True, events=(square,))
    monkeypatch.setattr(verify_tasks, "move_sequence_with_retry", lambda *args, **kwargs: log)
    run = CellRun(5, 0, k_range=(2, 2)).run()
    assert "dynamics" in run.ran
    assert run.failures["dynamics"] == ["n=5 seed=0: SquareMove at dots [1, 2, 3, 4] without a merge or split opposite"]
