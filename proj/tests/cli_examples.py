#!/usr/bin/env python3
"""End-to-end checks of the frobpow binary: named examples, exit codes,
and report shape. Usage: cli_examples.py <frobpow-binary> <repo-root>."""

import json
import subprocess
import sys
import tempfile


def run(binary, *args, expect=0):
    proc = subprocess.run([binary, *args], capture_output=True, text=True)
    if proc.returncode != expect:
        raise SystemExit(
            f"{' '.join(args)}: exit {proc.returncode} (expected {expect})\n"
            f"stdout: {proc.stdout}\nstderr: {proc.stderr}")
    return proc


def main():
    binary, root = sys.argv[1], sys.argv[2]
    fermat7 = "GF(7)[x,y,z]/(x^3+y^3+z^3)"
    fermat2 = "GF(2)[x,y,z]/(x^3+y^3+z^3)"

    out = run(binary, "dim", "--ring", "GF(2)[u,v]/(u*v)", "--no-timing")
    assert json.loads(out.stdout)["result"]["dim"] == 1

    out = run(binary, "tclosure", "--ring", fermat7, "--ideal", "x,y",
              "--elem", "z^2", "--test-element", "z", "--test-power", "1",
              "--emax", "4", "--no-timing")
    assert json.loads(out.stdout)["result"]["status"] == "EvidenceIn"

    out = run(binary, "fclosure", "--ring", fermat2, "--ideal", "x,y",
              "--elem", "z^2", "--no-timing")
    res = json.loads(out.stdout)["result"]
    assert res["status"] == "InFrobeniusClosure" and res["witness_q"] == 2

    out = run(binary, "gb", "--ring", fermat7, "--ideal", "x^3+y^3+z^3,x,y",
              "--no-timing")
    assert json.loads(out.stdout)["result"]["groebner"] == ["y", "x", "z^3"]

    with tempfile.NamedTemporaryFile(suffix=".csv") as tmp:
        run(binary, "hk", "--ring", "GF(5)[x,y]", "--ideal", "x,y",
            "--emax", "2", "--csv", tmp.name, "--no-timing")
        rows = open(tmp.name).read().splitlines()
        assert rows[0] == "e,q,length,ratio_num,ratio_den"
        assert rows[1:] == ["0,1,1,1,1", "1,5,25,1,1", "2,25,625,1,1"]

    out = run(binary, "socle", "--ring", fermat7, "--ideal", "x,y", "--no-timing")
    res = json.loads(out.stdout)["result"]
    assert res["socle"] == ["z^2"] and res["irreducible"]

    # verification suites straight from the CLI
    run(binary, "verify", "finj", "--ring", "GF(2)[u,v]/(u*v)", "--sop", "u+v",
        "--emax", "3", "--no-timing")
    run(binary, "verify", "finj", "--ring", fermat2, "--sop", "x,y",
        "--emax", "3", "--no-timing", expect=2)
    run(binary, "verify", "frat", "--ring", "GF(5)[x,y]", "--sop", "x,y",
        "--test-element", "unit", "--no-timing")
    out = run(binary, "verify", "thm5.1", "--ring", fermat7, "--ideal", "x,y",
              "--T", "x,y,z", "--test-element", "z", "--test-power", "1",
              "--no-timing")
    assert json.loads(out.stdout)["result"]["pass"]

    # sessions: full run exits 0, negative controls exit 2, bad input exits 1
    run(binary, "run", f"{root}/sessions/verify_paper.json", "--no-timing",
        "--task", "hk-unit-ratios")
    run(binary, "run", f"{root}/sessions/negative_controls.json", "--no-timing",
        expect=2)

    # --parallel produces the identical payload in the identical order
    seq = run(binary, "run", f"{root}/sessions/verify_paper.json", "--no-timing")
    par = run(binary, "run", f"{root}/sessions/verify_paper.json", "--no-timing",
              "--parallel")
    assert seq.stdout == par.stdout
    proc = run(binary, "dim", "--ring", "ghost", expect=1)
    assert "unresolved reference" in proc.stderr
    assert "E_VALIDATE" in proc.stderr

    print("cli examples ok")


if __name__ == "__main__":
    main()
