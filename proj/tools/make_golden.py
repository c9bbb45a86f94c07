#!/usr/bin/env python3
"""Regenerate the golden corpus under golden/.

Usage: make_golden.py <wittkit binary> [golden dir]

Inputs are written first; certificates that the CLI itself produces
(eta, reduce) are captured from its structured output; then every case in
the manifest is run once and its report stored as the expected output.
"""
import json
import shutil
import subprocess
import sys
from pathlib import Path

BIN = Path(sys.argv[1]).resolve()
ROOT = Path(sys.argv[2] if len(sys.argv) > 2 else Path(__file__).resolve().parent.parent / "golden")


def write(rel, doc):
    path = ROOT / rel
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(doc, indent=2) + "\n")


def run(args):
    proc = subprocess.run([str(BIN), *args, "--format", "structured"], cwd=ROOT, capture_output=True, text=True)
    return proc.returncode, proc.stdout


def payload(args):
    code, out = run(args)
    if code != 0:
        raise SystemExit(f"generator step failed: {args}\n{out}")
    return json.loads(out)["payload"]


def block_diag(a, b):
    n, m = len(a), len(b)
    rows = [row + ["0"] * m for row in a]
    rows += [["0"] * n + row for row in b]
    return rows


if ROOT.exists():
    shutil.rmtree(ROOT)

write("rings/qq.json", {"field": {"kind": "rationals"}, "vars": []})
write("rings/qq_x.json", {"field": {"kind": "rationals"}, "vars": ["x"]})
write("rings/qq_xy.json", {"field": {"kind": "rationals"}, "vars": ["x", "y"]})
write("rings/qq_xy_lex.json", {"field": {"kind": "rationals"}, "vars": ["x", "y"], "order": "lex"})
write("rings/qq_sqrt2.json", {"field": {"kind": "rationals"}, "vars": ["x"], "relations": ["x^2-2"]})
write("rings/generic.json", {"field": {"kind": "rationals"}, "vars": ["a", "b", "c", "p", "q", "r"],
                             "relations": ["a*p+b*q+c*r-1"]})
write("rings/hyperbola.json", {"field": {"kind": "prime-field", "p": 13}, "vars": ["x", "y"], "relations": ["x*y-1"]})
write("rings/f5.json", {"field": {"kind": "prime-field", "p": 5}, "vars": []})
write("rings/f13.json", {"field": {"kind": "prime-field", "p": 13}, "vars": []})

write("inputs/gb_lex.json", {"generators": ["x^2-1", "x*y-1"], "normal_form": ["x^3*y+x", "y^3"]})
write("inputs/row_100.json", {"ring": "../rings/qq_xy.json", "row": ["1", "0", "0"]})
write("inputs/row_xy1.json", {"ring": "../rings/qq_xy.json", "row": ["x", "y", "1-x-y"]})
write("inputs/row_generic.json", {"ring": "../rings/generic.json", "row": ["a", "b", "c"], "witness": ["p", "q", "r"]})
write("inputs/row_hyperbola.json", {"ring": "../rings/hyperbola.json", "row": ["x", "0", "0"]})
write("inputs/row_f13.json", {"ring": "../rings/f13.json", "row": ["2", "3", "5"]})
write("inputs/vaserstein_generic.json", {"vaserstein": {"row": ["a", "b", "c"], "witness": ["p", "q", "r"]}})
write("inputs/alt_sqrt2.json", {"matrix": [["0", "x", "1", "0"], ["-x", "0", "0", "1"],
                                           ["-1", "0", "0", "x"], ["0", "-1", "-x", "0"]]})
write("inputs/eta_a.json", {"matrix": [["2", "1"], ["1", "1"]]})
write("inputs/eta_b.json", {"matrix": [["1", "3"], ["0", "1/2"]]})
write("inputs/sl2_f5.json", {"matrix": [["2", "1"], ["3", "2"]]})
write("inputs/alt_f13.json", {"matrix": [["0", "2", "3", "1"], ["-2", "0", "5", "7"],
                                         ["-3", "-5", "0", "4"], ["-1", "-7", "-4", "0"]]})
write("inputs/alt_f13_pf1.json", {"matrix": [["0", "1", "3", "1"], ["-1", "0", "5", "7"],
                                             ["-3", "-5", "0", "4"], ["-1", "-7", "-4", "0"]]})
write("inputs/psi2.json", {"psi": 2})
write("inputs/psi1.json", {"psi": 1})

a = [["2", "1"], ["1", "1"]]
b = [["1", "3"], ["0", "1/2"]]
write("inputs/eta_lhs.json", {"eta": block_diag([["2", "13/2"], ["1", "7/2"]], [["1", "0"], ["0", "1"]])})
write("inputs/eta_rhs.json", {"eta": block_diag(a, b)})
eta = payload(["eta", "--ring", "rings/qq.json", "--in", "inputs/eta_a.json", "--in", "inputs/eta_b.json"])
write("certs/eta_ab.json", eta["certificate"])

red = payload(["reduce", "--ring", "rings/f13.json", "--in", "inputs/alt_f13_pf1.json", "--in", "inputs/psi2.json"])
write("certs/alt_f13_pf1_vs_psi2.json", red["certificate"])

# doubling relation over F13: V(a^2,b,c) ~ V(a,b,c) + V(a,b,c) in W'_E
v = payload(["vaserstein", "--in", "inputs/row_f13.json"])
vv = block_diag(v["matrix"], v["matrix"])
write("inputs/vv_f13.json", {"matrix": vv})
write("inputs/vsq_f13.json", {"vaserstein": {"row": ["4", "3", "5"]}})
dbl = payload(["reduce", "--ring", "rings/f13.json", "--in", "inputs/vsq_f13.json", "--in", "inputs/vv_f13.json"])
write("certs/doubling_f13.json", dbl["certificate"])
write("relations/doubling_f13.json", {"lhs": [{"vaserstein": {"row": ["4", "3", "5"]}}],
                                      "rhs": [{"vaserstein": {"row": ["2", "3", "5"]}},
                                              {"vaserstein": {"row": ["2", "3", "5"]}}],
                                      "cert": "../certs/doubling_f13.json"})

# negative corpus
write("negative/row_xy.json", {"ring": "../rings/qq_xy.json", "row": ["x", "y"]})
write("negative/row_xy_sum.json", {"ring": "../rings/qq_xy.json", "row": ["x", "y", "x+y"]})
write("negative/bad_poly.json", {"matrix": [["0", "x^^2"], ["-x^^2", "0"]]})
write("negative/bad_json.json", {"matrix": [["0", "1"]]})
(ROOT / "negative/truncated.json").write_text('{"matrix": [["0", "1"],\n')
write("negative/bad_ring.json", {"field": {"kind": "prime-field", "p": 12}, "vars": ["x"]})
write("negative/not_unit.json", {"matrix": [["x", "0"], ["0", "1"]]})
write("negative/big.json", {"psi": 5})
write("negative/not_alternating.json", {"matrix": [["1", "1"], ["-1", "0"]]})
tampered = json.loads(json.dumps(eta["certificate"]))
tampered["word"][0][2] = tampered["word"][0][2] + "+1"
write("negative/eta_ab_tampered.json", tampered)
short = json.loads(json.dumps(eta["certificate"]))
short["word"] = short["word"][:-1]
write("negative/eta_ab_truncated.json", short)
badsize = json.loads(json.dumps(eta["certificate"]))
badsize["size"] = badsize["size"] + 1
write("negative/eta_ab_badsize.json", badsize)
write("negative/foreign_cert.json", {"lhs": [{"vaserstein": {"row": ["2", "3", "5"]}}],
                                              "rhs": [{"vaserstein": {"row": ["4", "3", "5"]}}],
                                              "cert": "eta_ab_tampered.json"})
write("negative/relation_wrong.json", {"lhs": [{"vaserstein": {"row": ["4", "3", "5"]}}],
                                       "rhs": [{"vaserstein": {"row": ["2", "3", "5"]}},
                                               {"vaserstein": {"row": ["1", "0", "0"]}}],
                                       "cert": "../certs/doubling_f13.json"})
write("negative/gb_hard.json", {"generators": ["x^5-y^3+x*y", "y^5-x^2*y^2+1", "x^3*y^3-x-y"]})

cases = [
    ("ring_check_generic", ["ring-check", "--ring", "rings/generic.json"], 0),
    ("ring_check_sqrt2", ["ring-check", "--ring", "rings/qq_sqrt2.json"], 0),
    ("gb_lex", ["gb", "--ring", "rings/qq_xy_lex.json", "--in", "inputs/gb_lex.json"], 0),
    ("row_certify_100", ["row-certify", "--in", "inputs/row_100.json"], 0),
    ("row_certify_xy1", ["row-certify", "--in", "inputs/row_xy1.json"], 0),
    ("row_certify_hyperbola", ["row-certify", "--in", "inputs/row_hyperbola.json"], 0),
    ("vaserstein_100", ["vaserstein", "--in", "inputs/row_100.json"], 0),
    ("vaserstein_generic", ["vaserstein", "--in", "inputs/row_generic.json"], 0),
    ("pfaffian_generic", ["pfaffian", "--ring", "rings/generic.json", "--in", "inputs/vaserstein_generic.json"], 0),
    ("pfaffian_sqrt2", ["pfaffian", "--ring", "rings/qq_sqrt2.json", "--in", "inputs/alt_sqrt2.json"], 0),
    ("pfaffian_f13", ["pfaffian", "--ring", "rings/f13.json", "--in", "inputs/alt_f13.json"], 0),
    ("eta_sl2_f5", ["eta", "--ring", "rings/f5.json", "--in", "inputs/sl2_f5.json"], 0),
    ("eta_product", ["eta", "--ring", "rings/qq.json", "--in", "inputs/eta_a.json", "--in", "inputs/eta_b.json"], 0),
    ("cert_verify_eta", ["cert-verify", "--ring", "rings/qq.json", "--in", "inputs/eta_lhs.json",
                         "--in", "inputs/eta_rhs.json", "--cert", "certs/eta_ab.json"], 0),
    ("cert_verify_reduce", ["cert-verify", "--ring", "rings/f13.json", "--in", "inputs/alt_f13_pf1.json",
                            "--in", "inputs/psi2.json", "--cert", "certs/alt_f13_pf1_vs_psi2.json"], 0),
    ("reduce_f13", ["reduce", "--ring", "rings/f13.json", "--in", "inputs/alt_f13.json"], 0),
    ("reduce_pair_f13", ["reduce", "--ring", "rings/f13.json", "--in", "inputs/alt_f13_pf1.json",
                         "--in", "inputs/psi2.json"], 0),
    ("complete_square_generic", ["complete-square", "--in", "inputs/row_generic.json"], 0),
    ("complete_square_xy1", ["complete-square", "--in", "inputs/row_xy1.json"], 0),
    ("relation_doubling_f13", ["relation-verify", "--ring", "rings/f13.json", "--in", "relations/doubling_f13.json"], 0),
    ("neg_row_certify_xy", ["row-certify", "--in", "negative/row_xy.json"], 1),
    ("neg_vaserstein_xy_sum", ["vaserstein", "--in", "negative/row_xy_sum.json"], 1),
    ("neg_complete_square_xy_sum", ["complete-square", "--in", "negative/row_xy_sum.json"], 1),
    ("neg_cert_tampered", ["cert-verify", "--ring", "rings/qq.json", "--in", "inputs/eta_lhs.json",
                           "--in", "inputs/eta_rhs.json", "--cert", "negative/eta_ab_tampered.json"], 1),
    ("neg_cert_truncated", ["cert-verify", "--ring", "rings/qq.json", "--in", "inputs/eta_lhs.json",
                            "--in", "inputs/eta_rhs.json", "--cert", "negative/eta_ab_truncated.json"], 1),
    ("neg_cert_swapped_inputs", ["cert-verify", "--ring", "rings/f13.json", "--in", "inputs/psi2.json",
                                 "--in", "inputs/alt_f13_pf1.json", "--cert", "certs/alt_f13_pf1_vs_psi2.json"], 1),
    ("neg_cert_badsize", ["cert-verify", "--ring", "rings/qq.json", "--in", "inputs/eta_lhs.json",
                          "--in", "inputs/eta_rhs.json", "--cert", "negative/eta_ab_badsize.json"], 2),
    ("neg_reduce_pfaffians_differ", ["reduce", "--ring", "rings/f13.json", "--in", "inputs/alt_f13.json",
                                     "--in", "inputs/psi2.json"], 1),
    ("neg_eta_not_unit", ["eta", "--ring", "rings/qq_xy.json", "--in", "negative/not_unit.json"], 1),
    ("neg_relation_wrong", ["relation-verify", "--ring", "rings/f13.json", "--in", "negative/relation_wrong.json"], 1),
    ("neg_relation_foreign_cert", ["relation-verify", "--ring", "rings/f13.json",
                                   "--in", "negative/foreign_cert.json"], 1),
    ("neg_bad_poly", ["pfaffian", "--ring", "rings/qq_x.json", "--in", "negative/bad_poly.json"], 2),
    ("neg_not_square", ["pfaffian", "--ring", "rings/qq.json", "--in", "negative/bad_json.json"], 2),
    ("neg_truncated_json", ["pfaffian", "--ring", "rings/qq.json", "--in", "negative/truncated.json"], 2),
    ("neg_bad_ring", ["ring-check", "--ring", "negative/bad_ring.json"], 2),
    ("neg_missing_file", ["pfaffian", "--ring", "rings/qq.json", "--in", "negative/absent.json"], 2),
    ("neg_not_alternating", ["cert-verify", "--ring", "rings/qq.json", "--in", "negative/not_alternating.json",
                             "--in", "inputs/psi1.json", "--cert", "certs/eta_ab.json"], 2),
    ("neg_too_big", ["pfaffian", "--ring", "rings/qq.json", "--in", "negative/big.json"], 2),
    ("neg_gb_budget", ["gb", "--ring", "rings/qq_xy.json", "--in", "negative/gb_hard.json", "--gb-steps", "3"], 2),
]

manifest = []
for name, args, expected_exit in cases:
    code, out = run(args)
    if code != expected_exit:
        raise SystemExit(f"{name}: exit {code}, expected {expected_exit}\n{out}")
    (ROOT / "expected").mkdir(exist_ok=True)
    (ROOT / "expected" / f"{name}.json").write_text(out)
    manifest.append({"name": name, "args": args, "exit": expected_exit, "expected": f"expected/{name}.json"})

write("manifest.json", {"format": "structured", "cases": manifest})
print(f"wrote {len(manifest)} cases to {ROOT}")
