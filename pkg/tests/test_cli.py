import json
import subprocess
import sys

import pytest

from graphmetric.cli import main
from graphmetric.families import HAMM4, PAIR4, PRX3, SIX, TRI
from graphmetric.graph import format_graph, parse_graph
from graphmetric.linalg import format_code, format_map, permutation_map, rref
from graphmetric.metric import format_weight_table, weight_table


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write


def run(capsys, *argv):
    status = main(list(argv))
    out = capsys.readouterr()
    return status, out.out, out.err


def test_packing_radius_brute(files, capsys):
    g = files("prx3.txt", format_graph(PRX3))
    c1 = files("c1.txt", "2 3 1\n1 1 0\n")
    status, out, _ = run(capsys, "packing-radius", "--brute", g, c1)
    assert (status, out.strip()) == (0, "0")
    status, out, _ = run(capsys, "--json", "packing-radius", g, files("c2.txt", "2 3 1\n0 0 1\n"))
    assert json.loads(out) == {"packing_radius": 1, "method": "brute"}


def test_canon_expanded_echo(files, capsys):
    g = files("h4.txt", format_graph(HAMM4))
    status, out, _ = run(capsys, "canon", "--expanded", g)
    assert status == 0 and parse_graph(out) == HAMM4


def test_canon_reduced_json(files, capsys):
    status, out, _ = run(capsys, "canon", "--reduced", "--json", files("tri.txt", format_graph(TRI)))
    rec = json.loads(out)
    assert status == 0 and rec["m"] == 2 and rec["h"] == 2 and sorted(rec["L"]) == [1, 2]


def test_macwilliams_check_fails_with_witness(files, capsys):
    status, out, _ = run(capsys, "--json", "macwilliams-check", files("pair4.txt", format_graph(PAIR4)))
    rec = json.loads(out)
    assert status == 1
    assert rec == {"holds": False, "witness": [[[1, 1, 0, 0]], [[0, 0, 1, 1]]]}
    status, out, _ = run(capsys, "macwilliams-check", files("six.txt", format_graph(SIX)))
    assert status == 0 and "holds" in out


def test_weight_and_table(files, capsys):
    g = files("pair4.txt", format_graph(PAIR4))
    assert run(capsys, "weight", g, "--word", "0011")[:2] == (0, "2\n")
    assert run(capsys, "weight", g, "--support", "0,2")[:2] == (0, "3\n")
    status, out, _ = run(capsys, "table", g)
    assert out == format_weight_table(weight_table(PAIR4))


def test_same_metric_and_isomorphic(files, capsys):
    tri = files("tri.txt", format_graph(TRI))
    trimmed = files("trim.txt", "3 3\n0 2\n1 2\n2 1\n")
    assert run(capsys, "same-metric", tri, trimmed)[0] == 0
    assert run(capsys, "same-metric", tri, files("vw.txt", "3 2\n1 2\n2 1\n"))[0] == 1
    status, out, _ = run(capsys, "--json", "isomorphic", files("p.txt", "3 2\n0 1\n1 2\n"),
                         files("q.txt", "3 2\n2 1\n1 0\n"))
    assert status == 0 and json.loads(out) == {"holds": True, "permutation": [2, 1, 0]}


def test_reconstruct_with_missing_matching(files, capsys):
    g = parse_graph("4 1\n0 1\n")
    t = weight_table(g, [{0}, {1}, {2}, {3}, {0, 2}, {0, 3}, {1, 2}, {1, 3}])
    status, out, _ = run(capsys, "reconstruct", files("t.txt", format_weight_table(t)))
    assert status == 0 and parse_graph(out) == g


def test_certificate(files, capsys):
    status, out, _ = run(capsys, "--json", "certificate", "--verify", files("c.txt", "2 1\n0 1\n"))
    rec = json.loads(out)
    assert status == 0 and rec["unique"] is True and len(rec["entries"]) == 3


def test_isometry_commands(files, capsys):
    g = files("chain.txt", "2 1\n0 1\n")
    good = files("good.txt", "2 2\n1 1\n0 1\n")
    swap = files("swap.txt", format_map(permutation_map(2, (1, 0))))
    assert run(capsys, "isometry-check", g, good)[0] == 0
    assert run(capsys, "isometry-check", g, swap)[0] == 1
    status, out, _ = run(capsys, "--json", "decompose-isometry", g, good)
    assert status == 0 and json.loads(out) == {"phi": [0, 1], "n_part": [[1, 1], [0, 1]]}
    assert run(capsys, "decompose-isometry", g, swap)[0] == 1
    status, out, _ = run(capsys, "--json", "group-order", files("k3.txt", "3 3\n0 1\n1 2\n2 0\n"))
    assert json.loads(out) == {"order": 168, "aut_times_n": 204}


def test_code_commands(files, capsys):
    roof = files("roof.txt", "3 2\n2 0\n2 1\n")
    code = files("code.txt", format_code(rref(2, [(1, 0, 1)])))
    status, out, _ = run(capsys, "--json", "code-decompose", roof, code)
    assert status == 0 and json.loads(out)["components"] == [[], [[0, 0, 1]]]
    status, out, _ = run(capsys, "--json", "code-decompose", files("prx.txt", format_graph(PRX3)), code)
    assert status == 1 and json.loads(out)["witness"] == [[0, 1, 1]]
    assert run(capsys, "min-distance", roof, code)[:2] == (0, "3\n")
    # 101 needs a ball of radius 3 from each side to meet: R = 2
    assert run(capsys, "packing-radius", "--formula", roof, code)[:2] == (0, "2\n")
    assert run(capsys, "packing-radius", "--brute", roof, code)[:2] == (0, "2\n")


def test_enumerator_and_level_checks(files, capsys):
    pair = files("pair4.txt", format_graph(PAIR4))
    c1 = files("c1.txt", "2 4 1\n1100\n")
    status, out, _ = run(capsys, "--json", "enumerator", "--dual", pair, c1)
    assert json.loads(out)["coeffs"] == [1, 0, 4, 0, 3]
    assert run(capsys, "enumerator", pair, c1)[1] == "1 + X^2\n"
    assert run(capsys, "udp", pair)[0] == 1
    six = files("six.txt", format_graph(SIX))
    assert run(capsys, "udp", six)[0] == 0
    status, out, _ = run(capsys, "--json", "omega", six)
    assert status == 1 and json.loads(out)["witness"] == {"level": 1, "size": 2, "blocks": [0, 1, 2]}
    status, out, _ = run(capsys, "--json", "extension-check", six)
    assert status == 1 and not json.loads(out)["holds"]
    assert run(capsys, "extension-check", files("h3.txt", "3 0\n"))[0] == 0


@pytest.mark.parametrize("argv", [
    ["weight", "MISSING", "--word", "1"],
    ["table", "BAD"],
    ["weight", "GOOD", "--word", "10"],
    ["macwilliams-check", "BIG"],
])
def test_errors_exit_2(files, capsys, argv):
    paths = {"BAD": files("bad.txt", "3 1\n0 0\n"), "GOOD": files("g.txt", "3 0\n"),
             "BIG": files("big.txt", "13 0\n"), "MISSING": "/nonexistent/graph.txt"}
    argv = [paths.get(a, a) for a in argv]
    status, out, err = run(capsys, *argv)
    assert status == 2 and err.startswith("error:")


def test_usage_error():
    with pytest.raises(SystemExit) as info:
        main(["no-such-command"])
    assert info.value.code == 2


def test_module_entry_point(files):
    g = files("tri.txt", format_graph(TRI))
    proc = subprocess.run([sys.executable, "-m", "graphmetric.cli", "weight", g, "--support", "0"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.strip() == "3"
