"""End-to-end checks of the command-line tool: schemas, exit codes, determinism.

usage: test_cli.py <binary> <schema dir> <data dir>
"""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BIN, SCHEMAS, DATA = sys.argv[1:4]
failures = []


def schema(name):
    with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
        return json.load(f)


def run(*args):
    return subprocess.run([BIN, *args], capture_output=True, text=True, timeout=600)


def data(name):
    return os.path.join(DATA, name)


def expect(cond, what):
    print(("ok   " if cond else "FAIL ") + what)
    if not cond:
        failures.append(what)


def payload(name, *args):
    """Runs twice; checks exit 0, byte-identical output and the schema."""
    first = run(*args)
    second = run(*args)
    label = " ".join(args)
    expect(first.returncode == 0, f"{label}: exit 0 (got {first.returncode}: {first.stderr.strip()})")
    expect(first.stdout == second.stdout, f"{label}: deterministic output")
    try:
        doc = json.loads(first.stdout)
    except json.JSONDecodeError:
        expect(False, f"{label}: output is JSON")
        return {}
    try:
        jsonschema.validate(doc, schema(name))
        expect(True, f"{label}: matches {name} schema")
    except jsonschema.ValidationError as e:
        expect(False, f"{label}: matches {name} schema ({e.message})")
    return doc


for f in ["b4.json", "k4.json", "ladder.json", "weighted.json", "circle.json", "badlength.json"]:
    with open(data(f)) as fh:
        doc = json.load(fh)
    try:
        jsonschema.validate(doc, schema("graph"))
        valid = True
    except jsonschema.ValidationError:
        valid = False
    expect(valid == (f != "badlength.json"), f"{f}: graph schema verdict")

d = payload("check", "check", data("b4.json"), "--oracle")
expect(d.get("hyperelliptic") is True and d.get("oracle_agrees") is True, "banana B_4 is hyperelliptic")
d = payload("check", "check", data("k4.json"), "--oracle")
expect(d.get("hyperelliptic") is False and d.get("oracle_agrees") is True, "K4 is not hyperelliptic")
d = payload("check", "check", data("ladder.json"))
expect(d.get("hyperelliptic") is True and "involution" in d and "quotient" in d, "ladder has a witness")
d = payload("check", "check", data("weighted.json"), "--oracle")
expect(d.get("hyperelliptic") is True and d.get("oracle_agrees") is True, "weighted banana is hyperelliptic")

expect(run("check", data("malformed.json")).returncode == 2, "malformed JSON exits 2")
expect(run("check", data("badlength.json")).returncode == 2, "negative length exits 2")
expect(run("check", data("circle.json")).returncode == 2, "circle exits 2")
expect(run("check", data("missing.json")).returncode == 2, "missing file exits 2")
expect(run("frobnicate").returncode == 2, "unknown command exits 2")

d = payload("rank", "rank", data("b4.json"), data("theta_divisor.json"))
expect(d.get("degree") == 2 and d.get("rank") == 1, "a + b has rank 1 on B_4")

d = payload("moduli", "moduli", "--genus", "3", "--two-edge-connected")
expect(d.get("f_vector") == [1, 2, 2, 3, 2, 1] and d.get("num_cells") == 11, "H2(3) f-vector")
d = payload("moduli", "moduli", "--genus", "3")
expect(d.get("f_vector") == [1, 3, 6, 11, 9, 5, 1] and d.get("num_cells") == 36, "H(3) f-vector")
expect(run("moduli", "--genus", "9").returncode == 3, "genus 9 exits 3")
expect(run("moduli", "--genus", "9", "--two-edge-connected").returncode == 3, "2ec genus 9 exits 3")
with tempfile.TemporaryDirectory() as tmp:
    dot = os.path.join(tmp, "h3.dot")
    r = run("moduli", "--genus", "3", "--format", "dot", "--out", dot)
    expect(r.returncode == 0 and open(dot).read().startswith("digraph"), "DOT written to --out")
    svg = os.path.join(tmp, "curve.svg")
    r = run("newton", "--genus", "3", "--certify", "--sample", "3", "--out", svg)
    expect(r.returncode == 0 and open(svg).read().startswith("<svg"), "SVG written to --out")

d = payload("ladders", "ladders", "--genus", "5")
expect(d.get("count") == 2 and len(d.get("ladders", [])) == 2, "two genus-5 ladders")
expect(run("ladders", "--genus", "2").returncode == 3, "ladders genus 2 exits 3")

d = payload("newton", "newton", "--genus", "3", "--count-only")
expect((d.get("neither"), d.get("one"), d.get("both")) == (495, 240, 28), "census counts at genus 3")
d = payload("newton", "newton", "--genus", "3", "--certify")
expect(d.get("all_standard_ladders") is True and d.get("checked") == 763, "every genus-3 member certified")
d = payload("newton", "newton", "--genus", "4", "--certify", "--sample", "5", "--seed", "7", "--curves")
expect(d.get("all_standard_ladders") is True and d.get("checked") == 5, "genus-4 sample certified")
d = payload("newton", "newton", "--genus", "3", "--sample", "4")
expect(len(d.get("triangulations", [])) == 4, "triangulation listing")
expect(run("newton", "--genus", "30", "--count-only").returncode == 3, "newton genus 30 exits 3")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
