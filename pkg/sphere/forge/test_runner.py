#!/usr/bin/env python
# coding=utf-8

import configparser
import json
import os

from .constants import EXIT_BUDGET, EXIT_FAILED, EXIT_OK, EXIT_USAGE
from .groebner import clear_cache
from .runner import execute
from .script import parse_script


SL2 = """
ring A = Q[x, y];
scheme P = A;
center C = P : (x, y) at (0, 0);
support C;
build T = C;
smooth T;
ga-check T;
"""

PAIRS = """
ring A = Q[x, y];
scheme P = A;
center C1 = P : (x, y) at (0, 0);
center C2 = P : (x - 1, y) at (1, 0);
center C3 = P : (x^2, y) at (0, 0);
map F : P -> P = (x + y^2 + 1, y);
map G : P -> P = (x - y^2 - 1, y);
certificate K = F, G;
iso-check K;
pair-iso C1, C2 via K;
pair-iso C1, C3 via K expect center-mismatch;
"""


def _run(text, **kwargs):
    kwargs.setdefault("order", "grevlex")
    kwargs.setdefault("config", configparser.ConfigParser())
    return execute(parse_script(text), **kwargs)


def _verdicts(report):
    return [(e.verb, e.verdict, e.status) for e in report.entries]


def test_sl2_is_smooth():

    report = _run(SL2)
    assert report.exit_code == EXIT_OK
    assert _verdicts(report) == [
        ("support", "verified", "ok"),
        ("build", "built", "ok"),
        ("smooth", "smooth", "ok"),
        ("ga-check", "passed", "ok"),
    ]
    smooth = report.entries[2]
    assert smooth.witness["dimension"] == 3
    assert smooth.budget["steps_limit"] == 2000000


def test_failed_check():

    text = "ring R = Q[x, y]; ideal I = x^2, y; ideal J = x, y; equal I, J;"
    report = _run(text)
    assert report.exit_code == EXIT_FAILED
    assert _verdicts(report) == [("equal", "false", "failed")]
    assert sorted(report.entries[0].witness["left"]) == ["x^2", "y"]

    # the same check with its outcome stated
    report = _run(text.replace("equal I, J;", "equal I, J expect false;"))
    assert report.exit_code == EXIT_OK

    report = _run("ring R = Q[x]; ideal I = x; dim I expect 1;")
    assert report.exit_code == EXIT_FAILED
    assert _verdicts(report) == [("dim", "0", "failed")]


def test_failures_do_not_stop_the_run():

    text = """
    ring R = Q[x, y];
    ideal I = x, x - 1;
    scheme E = I;
    smooth E;
    dim I expect -1;
    member 1 in I;
    """
    report = _run(text)
    assert report.exit_code == EXIT_FAILED
    assert _verdicts(report) == [
        ("smooth", "empty", "failed"),
        ("dim", "-1", "ok"),
        ("member", "true", "ok"),
    ]


def test_budget_exhaustion():

    clear_cache()
    report = _run("brieskorn S = 2, 3, 7; smooth S;", steps=0)
    assert report.exit_code == EXIT_BUDGET
    assert _verdicts(report) == [
        ("brieskorn", "accepted", "ok"),
        ("smooth", "indeterminate", "budget"),
    ]
    assert report.entries[1].witness["reason"] == "budget"

    text = """
    brieskorn S = 2, 3, 7;
    center C = S : (x, y) at (0, 0, 0);
    support C;
    build X = C;
    smooth X with timeout=0.000000001;
    ga-check X;
    """
    report = _run(text)
    assert report.exit_code == EXIT_BUDGET
    assert [e.status for e in report.entries] == ["ok", "ok", "ok", "budget", "ok"]


def test_budget_precedence():

    text = "ring R = Q[x, y]; ideal I = x^2 - y, x*y - 1; groebner I with steps=7;"
    config = configparser.ConfigParser()
    config.read_string("[budgets]\nsteps = 11\ntimeout = 12.5\n")

    entry = _run(text, config=config).entries[0]
    assert entry.budget["steps_limit"] == 7
    entry = _run(text, config=config, steps=5).entries[0]
    assert entry.budget["steps_limit"] == 5
    entry = _run(text.replace(" with steps=7", ""), config=config).entries[0]
    assert entry.budget["steps_limit"] == 11


def test_usage_errors_stop_the_run():

    text = """
    brieskorn S = 2, 4, 5;
    center C = S : (x, y) at (0, 0, 0);
    support C;
    """
    report = _run(text)
    assert report.exit_code == EXIT_USAGE
    assert _verdicts(report) == [
        ("brieskorn", "rejected", "failed"),
        ("declaration", "error", "usage"),
    ]
    assert "not available" in report.entries[1].witness["error"]

    text = """
    ring R = Q[x, y];
    scheme A = R;
    center C = A : (x, x + 1) at (0, 0);
    support C;
    build T = C;
    ga-check T;
    smooth A;
    """
    report = _run(text)
    assert report.exit_code == EXIT_USAGE
    assert _verdicts(report) == [
        ("support", "failed", "failed"),
        ("build", "rejected", "failed"),
        ("ga-check", "error", "usage"),
    ]
    assert report.entries[0].witness["failed_check"] == "nonempty"


def test_bundle_commands():

    text = """
    ring A = Q[x, y];
    scheme P = A;
    center C = P : (x^2, y^3) at (0, 0);
    support C;
    build X = C;
    ga-check X;
    matrix M in A = [[1, x], [0, 1]];
    reschange C2 = C by M;
    build X2 = C2;
    smooth X2;
    matrix N in A = [[x, 0], [0, 1]];
    reschange C3 = C by N expect rejected;
    gm-check 2, 3, 7, 2, 3;
    """
    report = _run(text)
    assert report.exit_code == EXIT_OK, _verdicts(report)
    reschange = report.entries[3]
    assert reschange.verdict == "passed"
    assert reschange.witness["f'"] == "x*y^3 + x^2"
    gm = report.entries[-1]
    assert "does not preserve" in gm.witness["printed z-weight"]


def test_family_commands():

    text = """
    diag-family W;
    trivialize W;
    fiber W at (1, 2);
    projection W;
    """
    report = _run(text)
    assert report.exit_code == EXIT_OK
    assert _verdicts(report) == [
        ("diag-family", "smooth", "ok"),
        ("trivialize", "passed", "ok"),
        ("fiber", "equal", "ok"),
        ("projection", "passed", "ok"),
    ]
    assert report.entries[0].witness["dimension"] == 5


def test_pairs():

    report = _run(PAIRS)
    assert report.exit_code == EXIT_OK
    assert _verdicts(report) == [
        ("iso-check", "isomorphic", "ok"),
        ("pair-iso", "pairs-isomorphic", "ok"),
        ("pair-iso", "center-mismatch", "ok"),
    ]
    assert report.entries[1].witness["total_spaces"] == "isomorphic"


def test_report_is_deterministic():

    first = _run(PAIRS)
    second = _run(PAIRS)
    a = json.dumps(first.as_dict(), sort_keys=True)
    b = json.dumps(second.as_dict(), sort_keys=True)
    assert a == b

    data = json.loads(first.to_json())
    assert data["schema"] == 1
    assert data["exit_code"] == 0
    assert data["summary"] == {"ok": 3, "failed": 0, "budget": 0, "usage": 0}
    assert len(data["timing"]["entries"]) == len(data["entries"])
    assert "timing" not in first.as_dict()

    text = first.to_text()
    assert "pairs-isomorphic" in text
    assert text.endswith("(exit code 0)")


def test_certificates(tmp_path):

    out = str(tmp_path / "certs")
    text = PAIRS + """
    ideal I in A = x^2 - y, x*y - 1;
    member x^3 - 1 in I;
    matrix M in A = [[1, y], [0, 1]];
    reschange C4 = C1 by M;
    """
    report = _run(text, cert_out=out)
    assert report.exit_code == EXIT_OK
    written = [e.certificate for e in report.entries]
    assert written == [
        "001-iso-check.sfs",
        "002-pair-iso.sfs",
        None,
        "004-member.sfs",
        "005-reschange.sfs",
    ]
    assert sorted(os.listdir(out)) == [w for w in written if w]

    expected = {
        "001-iso-check.sfs": "isomorphic",
        "002-pair-iso.sfs": "pairs-isomorphic",
        "004-member.sfs": "verified",
        "005-reschange.sfs": "isomorphic",
    }
    for name, verdict in expected.items():
        with open(os.path.join(out, name)) as f:
            data = f.read()
        assert data.startswith("# ")
        replay = _run(data)
        assert replay.exit_code == EXIT_OK, (name, _verdicts(replay))
        assert replay.entries[-1].verdict == verdict

    # nothing is written without a directory
    report = _run(PAIRS)
    assert all(e.certificate is None for e in report.entries)
