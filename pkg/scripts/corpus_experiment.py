"""Run every operator over a seeded random corpus and summarize.

Reports how often the credibility criterion picks a different family than
the cardinality one, how large the families get, and the time per case.

    python scripts/corpus_experiment.py --seed 1 --count 500
"""

import argparse
import time
from collections import Counter

from crbr.corpus import CorpusConfig, corpus
from crbr.revision import OperatorKind, check_selection_agreement, revise
from crbr.sat import equivalent
from crbr.subbase import enumerate_inclusion_maximal


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--max-base", type=int, default=10)
    p.add_argument("--max-vars", type=int, default=6)
    args = p.parse_args()
    cfg = CorpusConfig(max_base=args.max_base, max_vars=args.max_vars)

    sizes = Counter()
    verdicts = Counter()
    same_result = Counter()
    t0 = time.perf_counter()
    for base, mu in corpus(args.seed, args.count, cfg):
        w = enumerate_inclusion_maximal(base, mu)
        sizes[len(w)] += 1
        verdicts[check_selection_agreement(base, mu).verdict] += 1
        res = {k: revise(base, mu, k).result for k in OperatorKind}
        same_result["csrg~rsrg"] += equivalent(res[OperatorKind.CSRG], res[OperatorKind.RSRG])
        same_result["csrw~rsrw"] += equivalent(res[OperatorKind.CSRW], res[OperatorKind.RSRW])
        same_result["csir~csrw"] += equivalent(res[OperatorKind.CSIR], res[OperatorKind.CSRW])
    dt = time.perf_counter() - t0

    print(f"{args.count} cases, seed {args.seed}, {dt:.2f}s ({1000 * dt / args.count:.1f} ms/case)")
    print("maximal subbases per case:", dict(sorted(sizes.items())))
    print("credibility vs cardinality families:", dict(verdicts))
    for key, n in same_result.items():
        print(f"{key}: {n}/{args.count} equivalent")


if __name__ == "__main__":
    main()
