#!/usr/bin/env python3
"""Long-running verifications kept out of the default test suite.

Covers the degree-24 Mathieu partition rows, the degree-33 projective
semilinear group facts, and the full catalog sweep matching the symbolic
case analysis against the two-orbit computation up to degree 12.  Expect a
couple of minutes total.  One line per check; exits nonzero on any failure.

The same ground is covered by `pytest -m slow` plus validate-catalog; this
driver exists for running the checks standalone with timing output.
"""

import sys
import time

from parthom.catalog import build_group, catalog_entries
from parthom.homogeneity import (
    decide_lambda_homogeneous,
    decide_lambda_transitive,
    decide_t_homogeneous,
    decide_t_transitive,
)
from parthom.partitions import count_unordered, integer_partitions
from parthom.snpairs import is_sn_pair, symbolic_clause, symbolic_facts

failures = []


def check(name, ok, detail):
    line = "%-4s %s (%s)" % ("ok" if ok else "FAIL", name, detail)
    print(line, flush=True)
    if not ok:
        failures.append(name)


def mathieu_degree24_rows():
    group = build_group("m:24")
    for lam in [(2, 2) + (1,) * 20, (3, 2) + (1,) * 19]:
        t0 = time.time()
        hom = decide_lambda_homogeneous(group, lam, cap=10 ** 6)
        trans = decide_lambda_transitive(group, lam, cap=10 ** 6)
        shown = ",".join(str(p) for p in lam)
        check("m:24 %s homogeneous-only" % shown,
              hom.verdict and not trans.verdict,
              "orbit %s of %d, %.1fs" % (hom.orbit_size, count_unordered(lam),
                                         time.time() - t0))


def semilinear_degree33_facts():
    group = build_group("pgammal2:32")
    check("pgammal2:32 order", group.order() == 163680,
          "order %d" % group.order())
    t0 = time.time()
    hom = decide_t_homogeneous(group, 4)
    trans = decide_t_transitive(group, 4)
    check("pgammal2:32 4-homogeneous not 4-transitive",
          hom.verdict and not trans.verdict,
          "orbit %s, %.1fs" % (hom.orbit_size, time.time() - t0))


def clause_sweep_to_degree_twelve():
    t0 = time.time()
    verdicts = 0
    clean = True
    for entry in catalog_entries(max_degree=12):
        group = entry.group
        facts = symbolic_facts(group)
        for shape in integer_partitions(group.degree):
            if shape[0] == 1:
                continue
            computed = is_sn_pair(shape, group).verdict
            symbolic = symbolic_clause(shape, group, facts) != "none"
            verdicts += 1
            if computed != symbolic:
                clean = False
                print("     disagreement: %s %r" % (entry.spec, shape))
    check("symbolic case analysis matches two-orbit test", clean,
          "%d verdicts, %.1fs" % (verdicts, time.time() - t0))


def main():
    mathieu_degree24_rows()
    semilinear_degree33_facts()
    clause_sweep_to_degree_twelve()
    if failures:
        print("FAILED: %s" % ", ".join(failures))
        return 1
    print("all slow checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
