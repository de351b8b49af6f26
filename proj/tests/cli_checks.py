"""Black-box checks of the nibb command-line tool, one case per ctest entry.

usage: cli_checks.py <path to nibb> <case>
"""

import csv
import io
import json
import math
import os
import subprocess
import sys
import tempfile
import time

BIN = sys.argv[1]


def run(*args, env=None, expect=0):
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, env=env)
    if proc.returncode != expect:
        sys.exit(f"{' '.join(args)}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return proc


def rows(text):
    lines = [ln for ln in text.splitlines() if not ln.startswith("#")]
    reader = csv.reader(io.StringIO("\n".join(lines)))
    next(reader)
    return [[float(x) for x in row] for row in reader]


def cdf_limit_erf():
    for r, v in rows(run("cdf", "limit", "--N", "1", "--grid", "0:4:41").stdout):
        assert abs(v - math.erf(r / math.sqrt(2))) < 1e-10, (r, v)


def cdf_lue_erf_sqrt():
    for x, v in rows(run("cdf", "lue", "--m", "1", "--a", "-0.5", "--grid", "0:6:31").stdout):
        assert abs(v - math.erf(math.sqrt(x))) < 1e-10, (x, v)


def cdf_methods_agree():
    h = rows(run("cdf", "limit", "--N", "3", "--method", "hermite", "--grid", "0:4:41").stdout)
    lag = rows(run("cdf", "limit", "--N", "3", "--method", "laguerre", "--grid", "0:4:41").stdout)
    assert len(h) == len(lag) == 41
    assert max(abs(a[1] - b[1]) for a, b in zip(h, lag)) < 1e-8


def cdf_json_shape():
    doc = json.loads(run("cdf", "restricted-max", "--N", "2", "--p", "0.5", "--format", "json").stdout)
    assert doc["meta"]["model"] == "restricted_max"
    values = doc["data"]["values"]
    assert all(b >= a - 1e-8 for a, b in zip(values, values[1:]))
    assert values[-1] > 1 - 1e-6


def verify_default():
    with tempfile.TemporaryDirectory() as d:
        out = os.path.join(d, "report.json")
        run("verify", "-o", out)
        doc = json.load(open(out))
        assert doc["meta"]["all_pass"] and doc["meta"]["failures"] == 0


def verify_small():
    with tempfile.TemporaryDirectory() as d:
        out = os.path.join(d, "report.json")
        run("verify", "--N-max", "4", "--r", "1/2", "--suite", "propositions", "-o", out)
        doc = json.load(open(out))
        assert doc["meta"]["count"] == 12 and doc["meta"]["all_pass"]


def verify_bad_radius():
    run("verify", "--r", "1/0", expect=2)


def simulate_reproducible():
    with tempfile.TemporaryDirectory() as d:
        a, b = os.path.join(d, "a.csv"), os.path.join(d, "b.csv")
        run("simulate", "antige", "--n", "4", "--count", "500", "--seed", "11", "-o", a)
        run("simulate", "antige", "--n", "4", "--count", "500", "--seed", "11", "-o", b)
        assert open(a).read() == open(b).read()


def simulate_wishart_mean():
    values = [v[0] for v in rows(run("simulate", "wishart", "--N", "1", "--count", "20000", "--seed", "5").stdout)]
    assert abs(sum(values) / len(values) - 2.0) < 0.1


def simulate_nibb_fast():
    start = time.monotonic()
    values = rows(run("simulate", "nibb", "--N", "2", "--p", "0.5", "--steps", "256", "--count", "100").stdout)
    assert len(values) == 100 and all(v[0] > 0 for v in values)
    assert time.monotonic() - start < 10


def simulate_bad_p():
    run("simulate", "nibb", "--N", "2", "--p", "1.5", expect=2)


def compare_theorem1():
    err = run("compare", "theorem1", "--N", "3", "--count", "10000").stderr
    assert "pass" in err


def compare_prop2():
    err = run("compare", "prop2-selfcheck", "--N", "2", "--p", "0.5", "--count", "10000").stderr
    assert "pass" in err


def compare_nibm_loe():
    err = run("compare", "nibm-loe", "--N", "2", "--count", "10000").stderr
    assert "pass" in err


def compare_unknown():
    run("compare", "nope", expect=2)


def output_dir_env():
    with tempfile.TemporaryDirectory() as d:
        env = dict(os.environ, NIBB_OUTPUT_DIR=d)
        run("cdf", "limit", "--N", "2", "--grid", "0:3:4", env=env)
        files = os.listdir(d)
        assert len(files) == 1, files
        assert len(rows(open(os.path.join(d, files[0])).read())) == 4


CASES = {name: fn for name, fn in list(globals().items())
         if callable(fn) and getattr(fn, "__module__", None) == "__main__" and name not in ("run", "rows")}

if __name__ == "__main__":
    CASES[sys.argv[2]]()
    print(f"{sys.argv[2]}: ok")
