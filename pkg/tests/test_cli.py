import io
import json
import subprocess
import sys

import pytest

from pikernel.abelian import AbelianGroup
from pikernel.cli import run
from pikernel.localization import Decomposition
from pikernel.psi import Presentation


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), out, err)
    return status, out.getvalue(), err.getvalue()


def call_json(*argv):
    status, text, _ = call(*argv, "--json")
    return status, json.loads(text)


def test_zgroup_su3_inf():
    assert call("zgroup", "SU3", "--n", "inf") == (0, "Z/12\n", "")


def test_decompose_e8_json():
    status, data = call_json("decompose", "E8", "--p", "11")
    assert status == 0
    assert data["coverage"] == "proved"
    assert [(f["type"], f["n"], f["p"]) for f in data["result"]["factors"]] == [
        ("bundle", k, 11) for k in (1, 7, 13, 19)
    ]
    assert Decomposition.from_json(data["result"]).to_json() == data["result"]


def test_zgroup_g2_uncovered():
    status, text, _ = call("zgroup", "G2", "--n", "20")
    assert status == 2
    assert text.startswith("unknown:")
    status, data = call_json("zgroup", "G2", "--n", "20")
    assert status == 2 and data["coverage"] == "unknown" and data["result"]["kind"] == "unknown"


def test_zgroup_variants():
    assert call("zgroup", "G2", "--n", "20", "--odd")[:2] == (0, "Z/21\n")
    assert call("zgroup", "Sp2", "--n", "4")[:2] == (0, "Z + Z/120\n")
    assert call("zgroup", "SU(3)", "--n", "2")[:2] == (0, "Psi(12,1)\n")
    status, data = call_json("zgroup", "Sp2", "--n", "4", "--p", "5")
    assert AbelianGroup.from_json(data["result"]) == AbelianGroup.of(0, 5, local=5)
    status, data = call_json("zgroup", "SU3", "--n", "1", "--p", "3")
    assert Presentation.from_json(data["result"]) == Presentation("Psi(12,1)", 3)


def test_esharp():
    assert call("esharp", "Sp2", "--n", "inf")[:2] == (0, "Z/120\n")
    assert call("esharp", "SU3", "--n", "4")[0] == 2


def test_invariants_and_finiteness():
    assert call("invariants", "Spin8", "--p", "7")[:2] == (0, "sz=11 lz=3\n")
    assert call("invariants", "SU3")[:2] == (0, "sz=5 lz=2\n")
    assert call("invariants", "E8", "--p", "7")[0] == 2
    assert call("invariants", "SU3", "--p", "2")[0] == 2
    status, text, _ = call("finiteness", "E6")
    assert status == 0 and text.startswith("infinite")
    assert call("finiteness", "G2")[:2] == (0, "finite\n")


def test_decompose_coverings():
    status, data = call_json("decompose", "U3", "--p", "5")
    assert status == 0
    assert data["result"]["text"] == "S1 x S3 x S5"
    assert data["result"]["reduced_to"] == "SU3"
    status, data = call_json("decompose", "SO9", "--p", "5")
    assert data["result"]["text"] == "B1(5) x B3(5)"
    assert call("decompose", "SO9", "--p", "2")[0] == 1
    assert call("decompose", "G2", "--p", "3")[0] == 2


def test_psi_eval():
    assert call("psi-eval", "XYxy", "--m", "12", "--n", "1")[:2] == (0, "z^1\n")
    assert call("psi-eval", "z" * 120, "--m", "120", "--n", "12")[:2] == (0, "1\n")
    assert call("psi-eval", "--m", "12", "--n", "1")[:2] == (0, "1\n")
    status, _, err = call("psi-eval", "xq", "--m", "12", "--n", "1")
    assert status == 1 and "error" in err


def test_serre_pi():
    assert call("serre-pi", "--sphere", "3", "--stem", "3", "--p", "3")[:2] == (0, "Z/3\n")
    assert call("serre-pi", "--sphere", "3", "--stem", "10", "--p", "3")[0] == 2
    assert call("serre-pi", "--sphere", "4", "--stem", "3", "--p", "3")[0] == 1


def test_table():
    status, text, _ = call("table", "--family", "SU", "--params", "2..8", "--primes", "3..13", "--columns", "sz,lz")
    assert status == 0
    for line in text.splitlines()[1:]:
        group, p, sz, lz = line.split()
        n = int(group[3:-1])
        if int(p) > n - 1:
            assert (sz, lz) == (str(2 * n - 1), str(n - 1))
    status, text, _ = call("table", "--family", "Spin", "--params", "8", "--primes", "7", "--columns", "lz")
    assert text.splitlines()[1].split() == ["Spin(8)", "7", "3"]
    status, text, _ = call("table", "--family", "SU", "--params", "2..3", "--primes", "14..16")
    assert status == 0 and len(text.splitlines()) == 1
    status, text, _ = call("table", "--family", "E8", "--primes", "7", "--columns", "decomposition,sz")
    assert text.splitlines()[1].split() == ["E8", "7", "—", "—"]
    assert call("table", "--family", "SU", "--columns", "bogus")[0] == 1
    assert call("table")[0] == 1


def test_usage_and_domain_errors():
    status, _, err = call("frobnicate")
    assert status == 1 and "usage" in err
    assert call("zgroup", "XY3", "--n", "3")[0] == 1
    assert call("zgroup", "SU3", "--n", "0")[0] == 1
    assert call("zgroup", "SU3", "--n", "x")[0] == 1
    assert call("zgroup", "F4", "--n", "3")[0] == 1
    assert call("decompose", "SU3", "--p", "4")[0] == 1


QUERIES = [
    ("zgroup", "SU3", "--n", "inf"),
    ("zgroup", "G2", "--n", "12", "--p", "2"),
    ("decompose", "E6", "--p", "5"),
    ("invariants", "U4", "--p", "5"),
    ("finiteness", "Spin14"),
    ("psi-eval", "xyXYzz", "--m", "24", "--n", "7"),
    ("table", "--thresholds"),
    ("zgroup", "G2", "--n", "inf"),
]


@pytest.mark.parametrize("argv", QUERIES, ids=" ".join)
def test_json_round_trip_and_determinism(argv):
    _, first, _ = call(*argv, "--json")
    _, second, _ = call(*argv, "--json")
    assert first == second
    again = json.dumps(json.loads(first), sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    assert again == first
    assert set(json.loads(first)) == {"query", "result", "coverage"}


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pikernel", "zgroup", "SU3", "--n", "inf"],
        capture_output=True,
        text=True,
        encoding="utf-8",
    )
    assert proc.returncode == 0
    assert proc.stdout == "Z/12\n"
