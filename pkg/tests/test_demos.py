import runpy
from pathlib import Path

import pytest

DEMOS = Path(__file__).resolve().parent.parent / "demos"


@pytest.mark.parametrize("name", ["betti_tables.py", "mayer_vietoris.py"])
def test_demo_runs(name, capsys):
    runpy.run_path(str(DEMOS / name), run_name="__main__")
    assert capsys.readouterr().out


def test_sweep_demo_small(capsys):
    runpy.run_path(str(DEMOS / "subadditivity_sweep.py"))["main"](4)
    out = capsys.readouterr().out
    assert out.startswith("18 graphs with 1..4 vertices")
