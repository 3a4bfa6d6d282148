"""Coefficient-matrix rank of Dicke states across the leading-block cuts."""
import argparse
from dataclasses import dataclass

from gencorr.coefficient import cut_rank
from gencorr.states import dicke


@dataclass
class Config:
    n_min: int = 3
    n_max: int = 7


def table(cfg: Config):
    rows = []
    for n in range(cfg.n_min, cfg.n_max + 1):
        for ell in range(1, n):
            for s in range(1, n):
                rows.append((n, ell, s, cut_rank(dicke(n, ell), range(1, s + 1))))
    return rows


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n-min", type=int, default=Config.n_min)
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    args = ap.parse_args()
    cfg = Config(args.n_min, args.n_max)
    print(" n  l  |S|  rank  min(l,n-l,|S|,n-|S|)+1")
    mismatches = 0
    for n, ell, s, r in table(cfg):
        predicted = min(ell, n - ell, s, n - s) + 1
        mismatches += r != predicted
        print(f"{n:2d} {ell:2d} {s:4d} {r:5d} {predicted:6d}")
    print(f"{mismatches} mismatches against the closed form")


if __name__ == "__main__":
    main()
