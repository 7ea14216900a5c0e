"""Threshold functions on n <= 4 variables by degree, from exhaustive LP scans.

Each degree-k count should equal C(n, k) 2^k times the number of
Semi-Goldilocks functions on k variables.
"""

from math import comb

from goldilocks.boolfn import all_functions
from goldilocks.chambers import count_chambers
from goldilocks.chow import degree
from goldilocks.enumeration import Engine, Genus
from goldilocks.ltf import is_threshold


def main():
    gold = [count_chambers(k, Genus.POSITIVE, Engine.SD).count for k in range(5)]
    for n in range(5):
        by_degree = [0] * (n + 1)
        for f in all_functions(n):
            if is_threshold(f):
                by_degree[degree(f)] += 1
        predicted = [comb(n, k) * 2**k * gold[k] for k in range(n + 1)]
        print(f"n={n} total={sum(by_degree)} by degree={by_degree} predicted={predicted}")


if __name__ == "__main__":
    main()
