"""Verification suites bundled by ``linkhomotopy verify`` and the scripts."""

from __future__ import annotations

import math
import random

from .conflie import btf_kernel_report
from .freelie import multilinear_dim
from .kappa import RNG_ALGORITHM
from .mulinks import (
    check_product_formula,
    closure_mu,
    distinct_indices,
    longitude_expansion,
    permutations,
    tau_n_sigma,
)
from .rfree import RFWord, quotient_rank, quotient_rank_formula
from .words import random_word


def kronecker_suite(n: int) -> dict:
    """mu(1, xi; n)(tau(n, sigma)) = delta and all shorter distinct-index mu vanish."""
    perms = permutations(n)
    mismatches = []
    nonzero_lower = []
    for s in perms:
        L = tau_n_sigma(n, s)
        p = longitude_expansion(L)
        for xi in perms:
            got = closure_mu(L, (1,) + xi, p)
            if got != int(xi == s):
                mismatches.append({"sigma": list(s), "xi": list(xi), "mu": str(got)})
        for I in distinct_indices(n - 1, n - 2):
            if p.coefficient(I):
                nonzero_lower.append({"sigma": list(s), "I": list(I)})
    return {
        "n": n,
        "pairs": len(perms) ** 2,
        "mismatches": mismatches,
        "nonzero_lower": nonzero_lower,
        "ok": not mismatches and not nonzero_lower,
    }


def random_string_link(n: int, rng: random.Random, max_length: int = 12) -> RFWord:
    return RFWord(random_word(n - 1, rng.randint(0, max_length), rng), n)


def product_formula_suite(n: int, pairs: int, seed: int) -> dict:
    rng = random.Random(seed)
    indices = distinct_indices(n - 1)
    failures = []
    for t in range(pairs):
        z1, z2 = random_string_link(n, rng), random_string_link(n, rng)
        for I in indices:
            if not check_product_formula(z1, z2, I):
                failures.append({"pair": t, "z1": str(z1), "z2": str(z2), "I": list(I)})
    return {
        "n": n,
        "pairs": pairs,
        "indices": len(indices),
        "seed": seed,
        "rng": RNG_ALGORITHM,
        "failures": failures,
        "ok": not failures,
    }


def rank_suite(n: int) -> dict:
    """Quotient ranks for k < n, the multilinear dimension and (n <= 6) the kernel rank."""
    rows = [{"k": k, "rank": quotient_rank(n, k), "formula": quotient_rank_formula(n, k)} for k in range(1, n)]
    out: dict = {"n": n, "quotient_rank": rows, "multilinear_dim": None, "btf_kernel_rank": None, "expected": None}
    ok = all(r["rank"] == r["formula"] for r in rows)
    if n >= 3:
        out["multilinear_dim"] = multilinear_dim(n)
        out["expected"] = math.factorial(n - 2)
        ok = ok and out["multilinear_dim"] == out["expected"]
    if 3 <= n <= 6:
        rep = btf_kernel_report(n)
        out["btf_kernel_rank"] = rep.kernel_dim
        out["btf_spans_equal"] = rep.spans_equal
        out["pbw_det"] = f"{rep.pbw_det.numerator}/{rep.pbw_det.denominator}"
        ok = ok and rep.ok
    out["ok"] = ok
    return out
