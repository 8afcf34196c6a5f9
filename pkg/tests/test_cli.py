import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from greenseq.cli import run
from greenseq.core import parse_quiver
from greenseq.fixtures import CYCLIC_DOUBLE, CYCLIC_DOUBLE_REFERENCE, TWO_POINTS, kronecker
from greenseq.reduction import me_free_version

FIX = Path(__file__).resolve().parents[1] / "fixtures"


def cli(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run([str(a) for a in argv], out, err)
    return code, out.getvalue(), err.getvalue()


def test_enumerate_json():
    code, out, _ = cli("enumerate", "--quiver", FIX / "a2.quiver", "--cap", 10, "--json")
    d = json.loads(out)
    assert code == 0
    assert d["count"] == 2 and d["exhaustive"] is True and d["cap"] == 10
    assert [t["vertex_seq"] for t in d["traces"]] == [[1, 2], [2, 1, 2]]


def test_enumerate_text_and_truncation():
    code, out, _ = cli("enumerate", "--quiver", FIX / "a3.quiver", "--cap", 3)
    assert code == 0
    assert out.startswith("1 maximal green sequences (truncated at cap 3)")


def test_count():
    code, out, _ = cli("count", "--quiver", FIX / "double_triangle.quiver", "--json")
    assert code == 0 and json.loads(out) == {"count": 3, "exhaustive": True, "cap": 24}
    assert cli("count", "--quiver", FIX / "kronecker2.quiver")[1].strip() == "1"


def test_output_is_byte_deterministic():
    args = ("enumerate", "--quiver", FIX / "double_middle_a4.quiver", "--json")
    first = cli(*args)[1]
    assert cli(*args)[1] == first
    assert cli(*args, "--threads", 3)[1] == first


def test_mutate():
    code, out, _ = cli("mutate", "--quiver", FIX / "cyclic_double.quiver", "--seq", "2 1 3 1 2", "--json")
    d = json.loads(out)
    assert code == 0
    ref = CYCLIC_DOUBLE_REFERENCE[-1]
    assert d["b"] == [list(r) for r in ref[:3]]
    assert d["c"] == [[-x for x in r] for r in ref[3:]]


def test_mutate_bad_sequence():
    code, _, err = cli("mutate", "--quiver", FIX / "a2.quiver", "--seq", "1 5")
    assert code == 3 and "bad sequence" in err


@pytest.mark.parametrize("mode, expected", [("me-free", me_free_version(CYCLIC_DOUBLE))])
def test_reduce_stdout(mode, expected):
    code, out, _ = cli("reduce", "--quiver", FIX / "cyclic_double.quiver", "--mode", mode)
    assert code == 0 and parse_quiver(out) == expected


def test_reduce_to_file(tmp_path):
    target = tmp_path / "k.quiver"
    code, out, _ = cli("reduce", "--quiver", FIX / "kronecker3.quiver", "--mode", "skeleton", "--output", target)
    assert code == 0 and out == ""
    assert parse_quiver(target.read_text()).arrows() == [(1, 2, 1)]
    code, out, _ = cli("reduce", "--quiver", FIX / "kronecker3.quiver", "--mode", "me-free")
    assert parse_quiver(out) == TWO_POINTS


def test_verify_t3_double_triangle():
    code, out, _ = cli("verify", "t3", "--quiver", FIX / "double_triangle.quiver", "--cap", 20, "--json")
    d = json.loads(out)
    assert code == 0 and d["verdict"] == "verified"
    assert d["counts"]["mgs"] == d["counts"]["predicted"] == 3


def test_verify_t1_text():
    code, out, _ = cli("verify", "t1", "--quiver", FIX / "double_middle_a4.quiver")
    assert code == 0 and out.startswith("t1: verified")


def test_verify_inconclusive():
    code, out, _ = cli("verify", "t3", "--quiver", FIX / "double_middle_a4.quiver", "--cap", 3)
    assert code == 2 and "inconclusive" in out


def test_verify_t2():
    code, out, _ = cli("verify", "t2", "--quiver", FIX / "two_triangles.quiver", "--k", 2, "--json")
    d = json.loads(out)
    assert code == 0 and d["details"]["partition"]["blocks"] == [[1, 2, 3], [4, 5, 6]]


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "t2", "--quiver", FIX / "two_triangles.quiver"),
        ("verify", "t2", "--quiver", FIX / "a3.quiver", "--k", 2),
        ("verify", "t1", "--quiver", FIX / "cyclic_double.quiver"),
        ("enumerate", "--quiver", FIX / "missing.quiver"),
        ("enumerate", "--quiver", FIX / "a2.quiver", "--cap", 0),
        ("partition", "--quiver", FIX / "a2.quiver", "--k", 1),
        ("bogus",),
        (),
    ],
)
def test_input_errors(argv):
    assert cli(*argv)[0] == 3


def test_malformed_file(tmp_path):
    bad = tmp_path / "bad.quiver"
    bad.write_text("vertices: 2\narrow: 1 2 1\narrow: 2 1 1\n")
    code, _, err = cli("count", "--quiver", bad)
    assert code == 3 and "2-cycle" in err


def test_partition():
    code, out, _ = cli("partition", "--quiver", FIX / "hexagon.quiver", "--k", 2)
    assert code == 0 and out.strip() == "1 2 6 | 3 4 5"
    code, out, _ = cli("partition", "--quiver", FIX / "cyclic_double.quiver", "--k", 2, "--json")
    assert json.loads(out) == {"k": 2, "partitions": []}


def test_replay():
    code, out, _ = cli("replay-s4", "--json")
    d = json.loads(out)
    assert code == 0 and d["verdict"] == "verified" and d["details"]["me_ful"]


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "greenseq", "count", "--quiver", str(FIX / "kronecker2.quiver"), "--json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["count"] == 1


def test_kronecker_fixture_multiplicity():
    assert parse_quiver((FIX / "kronecker3.quiver").read_text()) == kronecker(3)
