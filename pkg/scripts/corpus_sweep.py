"""Run verify_t1 / verify_t3 over a seeded random acyclic corpus.

Prints one line per instance and a summary; exits 1 if any instance is violated.
"""

import argparse
import json
import sys
import time

from greenseq.corpus import acyclic_corpus
from greenseq.theorems import Verdict, verify_t1, verify_t3


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--size", type=int, default=300)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--n-max", type=int, default=4)
    p.add_argument("--max-mult", type=int, default=3)
    p.add_argument("--cap", type=int, default=16)
    p.add_argument("--quiet", action="store_true")
    args = p.parse_args()

    tally = {v: 0 for v in Verdict}
    bound_failures = 0
    start = time.perf_counter()
    for i, q in enumerate(acyclic_corpus(args.size, args.seed, n_max=args.n_max, max_mult=args.max_mult)):
        t1, t3 = verify_t1(q, args.cap), verify_t3(q, args.cap)
        verdicts = {t1.verdict, t3.verdict}
        worst = next(v for v in (Verdict.VIOLATED, Verdict.INCONCLUSIVE, Verdict.VERIFIED) if v in verdicts)
        tally[worst] += 1
        bound_failures += not t3.details["count_bound_holds"]
        if not args.quiet or worst is not Verdict.VERIFIED:
            print(f"{i:4d} n={q.n} {worst.value:12s} {json.dumps(t3.counts)} arrows={q.arrows()}")
    elapsed = time.perf_counter() - start
    print(
        f"verified {tally[Verdict.VERIFIED]}, inconclusive {tally[Verdict.INCONCLUSIVE]}, "
        f"violated {tally[Verdict.VIOLATED]}, count-bound failures {bound_failures} ({elapsed:.1f}s)"
    )
    return 1 if tally[Verdict.VIOLATED] or bound_failures else 0


if __name__ == "__main__":
    sys.exit(main())
