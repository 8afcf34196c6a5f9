"""Enumerate every acyclic three-vertex quiver with bounded multiplicities.

Reports the MGS count and whether the capped search was exhaustive.
"""

import argparse

from greenseq.corpus import three_vertex_acyclic
from greenseq.mgs import enumerate_mgs


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-mult", type=int, default=3)
    p.add_argument("--cap", type=int, default=24)
    args = p.parse_args()

    truncated = 0
    for q in three_vertex_acyclic(args.max_mult):
        res = enumerate_mgs(q, args.cap)
        truncated += not res.exhaustive
        flag = "" if res.exhaustive else "  (truncated)"
        print(f"{str(q.arrows()):40s} {res.count:4d} mgs  {res.nodes_explored:6d} nodes{flag}")
    print(f"{truncated} truncated at cap {args.cap}")


if __name__ == "__main__":
    main()
