"""Print the rank tables: quotient ranks of RF(n-1), multilinear dimension, Brunnian kernel rank."""

import argparse

from linkhomotopy.suites import rank_suite


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=6)
    args = ap.parse_args()

    print("quotient ranks (rows n, columns k)")
    for n in range(2, args.max_n + 1):
        rep = rank_suite(n)
        print(f"  n={n}: " + " ".join(f"{r['rank']:>4}" for r in rep["quotient_rank"]))
    print("n  multilinear  kernel  (n-2)!")
    for n in range(3, args.max_n + 1):
        rep = rank_suite(n)
        print(f"{n}  {rep['multilinear_dim']:>11}  {rep['btf_kernel_rank']!s:>6}  {rep['expected']:>6}")


if __name__ == "__main__":
    main()
