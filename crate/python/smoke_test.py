#!/usr/bin/env python3
"""Smoke test for the so3ni_py extension module.

Build and stage the module first:

    cargo build --release -p so3ni-py
    cp target/release/libso3ni_py.so python/so3ni_py.so   # .dylib on macOS

then run `python3 python/smoke_test.py`.
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import so3ni_py as m


def check(name, cond):
    status = "ok" if cond else "FAIL"
    print(f"  {name}: {status}")
    if not cond:
        sys.exit(1)


print("scalar arithmetic")
one = m.Scalar("1/1")
r3 = m.Scalar.sqrt3()
check("sqrt3 squared is 3", str(r3 * r3) == "3/1")
x = one + r3
check("(1 + r3)^-1 round-trips", str(x * x.inv()) == "1/1")
check("exact sign: r3 < 7/4", (m.Scalar("7/4") - r3).sign() == 1)

print("exterior algebra")
e1 = m.Form(5, [1], one)
e2 = m.Form(5, [2], one)
e12 = e1 ^ e2
check("e1 ^ e2 = e12", str(e12) == "1/1*e{1,2}")
check("wedge anticommutes", str(e2 ^ e1) == "-1/1*e{1,2}")
check("hodge star of e1", str(e1.hodge()) == "1/1*e{2,3,4,5}")
check("double hodge is identity", str(e12.hodge().hodge()) == str(e12))

print("catalog")
ids = m.catalog_ids()
check("roster contains X-L27", "X-L27" in ids)
check("roster contains HYPO", "HYPO" in ids)

outcome = json.loads(m.catalog_verify("X-L27"))
check("X-L27 verifies", outcome["passed"])

print("analysis of the compact strong-torsion family")
spec_json = m.catalog_dump("ST-2")
algebra = m.LieAlgebra(spec_json)
check("Jacobi identity", algebra.is_jacobi())
report = json.loads(algebra.analyze())
check("nearly integrable", report["ni"])
check("torsion is e124", report["torsion"] == [{"i": [1, 2, 4], "c": [[1, 1], [0, 1]]}])
check("strong torsion (dT = 0)", report["dT"] == [])
check("parallel torsion", report["parallel_torsion"])
check("flat characteristic connection", report["flat_connection"])

print("bracket convention")
s3 = m.LieAlgebra(json.dumps({
    "dim": 5,
    "d": [[], [], [{"ij": [1, 3], "c": [[1, 1], [0, 1]]}], [], []],
}))
z = m.Scalar("0/1")
e1v = [one, z, z, z, z]
e3v = [z, z, one, z, z]
check("[e1, e3] = -e3", [str(c) for c in s3.bracket(e1v, e3v)] == ["0/1", "0/1", "-1/1", "0/1", "0/1"])

print("products and special structures")
hypo_spec = m.catalog_dump("HYPO")
check("hypo conditions", m.hypo_check(hypo_spec))
check("half-flat extension", m.halfflat_check(hypo_spec))
su3_report = json.loads(m.analyze_su3(m.catalog_dump("ST-2"), "so3"))
check("product with so(3) is nearly integrable", su3_report["su3"]["ni8"])

print("audit")
check("audit reports the direct rank", "direct system rank: 25" in m.ni_audit())

print("all smoke tests passed")
