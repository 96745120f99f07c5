"""kappa-coefficients of Brunnian string links and the e = mu verification harness.

For a Brunnian z in C(n;n) the normal form is a product of tau(n, sigma)^e;
the exponents are the coefficients of kappa(closure of z) in the basis
{B(n, sigma)}.  They are computed here two ways (the normal form directly, and
by pushing z through phi into the torus model and rewriting the top piece in
the B(n, sigma) basis) and compared with the Milnor invariants.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .conflie import TorusElt, realized_sign, t_n_sigma
from .freelie import rewrite_to_basis
from .mulinks import NotBrunnianError, StringLink, brunnian_product, mu_vector, permutations
from .rfree import is_brunnian, normal_form

RNG_ALGORITHM = "python-random-mt19937"
Perm = tuple[int, ...]


@dataclass(frozen=True)
class KappaCoeffs:
    components: int
    coeffs: dict[Perm, int] = field(default_factory=dict)

    def __post_init__(self):
        if set(self.coeffs) != set(permutations(self.components)):
            raise ValueError("KappaCoeffs domain must be all of Sigma(2..n-1)")

    def values(self) -> tuple[int, ...]:
        return tuple(self.coeffs[s] for s in permutations(self.components))

    def to_json(self) -> dict:
        return {
            "n": self.components,
            "kappa": [{"sigma": list(s), "value": str(self.coeffs[s])} for s in permutations(self.components)],
        }


def _require_brunnian(L: StringLink) -> None:
    if not is_brunnian(L):
        raise NotBrunnianError("kappa is only computed for Brunnian string links")


def kappa_coeffs(L: StringLink) -> KappaCoeffs:
    """Exponents of tau(n, sigma) in the normal form, read as B(n, sigma) coefficients."""
    _require_brunnian(L)
    n = L.components
    nf = normal_form(L)
    top = tuple(range(1, n))
    return KappaCoeffs(n, {s: nf[(top, s)] for s in permutations(n)})


def phi_torus(L: StringLink) -> TorusElt:
    """Image of a Brunnian z under tau_i -> t_{n,i}(i), in the top graded piece."""
    _require_brunnian(L)
    n = L.components
    acc = TorusElt.zero(n)
    for (I, s), e in normal_form(L).exponents.items():
        acc = acc + t_n_sigma(n, s).scale(e)
    return acc


def kappa_via_torus(L: StringLink) -> tuple[dict[Perm, int], dict[Perm, int]]:
    """Coefficients of phi(z) in {t(n, sigma)}, via B(n, sigma) coordinates.

    Returns (coefficients, realized signs of t(n, sigma) against B(n, sigma)).
    """
    n = L.components
    t = phi_torus(L)
    top = tuple(range(1, n))
    piece = t.piece(top).factor(n)
    raw = rewrite_to_basis(piece, n) if piece else {}
    signs = {s: realized_sign(n, s) for s in permutations(n)}
    coeffs = {}
    for s in permutations(n):
        c = raw.get(s, Fraction(0)) * signs[s]
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral kappa coefficient {c} at {s}")
        coeffs[s] = int(c)
    return coeffs, signs


# --- verification harness -----------------------------------------------------------


@dataclass
class VerifyConfig:
    n: int
    trials: int = 50
    seed: int = 0
    exponent_bound: int = 5
    corrupt_mu: bool = False  # negative control: flip the sign of one mu entry


def sample_exponents(n: int, rng: random.Random, bound: int) -> dict[Perm, int]:
    return {s: rng.randint(-bound, bound) for s in permutations(n)}


def verify_main_theorem(cfg: VerifyConfig) -> dict:
    """Check kappa_coeffs == torus route == mu_vector on random Brunnian words."""
    if not 3 <= cfg.n <= 6:
        raise ValueError("verify_main_theorem supports 3 <= n <= 6")
    rng = random.Random(cfg.seed)
    perms = permutations(cfg.n)
    failures = []
    start = time.perf_counter()
    for trial in range(cfg.trials):
        e = sample_exponents(cfg.n, rng, cfg.exponent_bound)
        z = brunnian_product(cfg.n, e)
        kap = kappa_coeffs(z).coeffs
        via_torus, _ = kappa_via_torus(z)
        mu = dict(mu_vector(z).entries)
        if cfg.corrupt_mu:
            mu[perms[0]] = -mu[perms[0]] if mu[perms[0]] else 1
        expected = {s: e[s] for s in perms}
        if not (kap == via_torus == mu == expected):
            failures.append(
                {
                    "seed_index": trial,
                    "e": [str(e[s]) for s in perms],
                    "mu": [str(mu[s]) for s in perms],
                }
            )
    elapsed = (time.perf_counter() - start) * 1000
    return {
        "n": cfg.n,
        "trials": cfg.trials,
        "seed": cfg.seed,
        "rng": RNG_ALGORITHM,
        "sigma_order": [list(s) for s in perms],
        "realized_signs": [realized_sign(cfg.n, s) for s in perms],
        "failures": failures,
        "elapsed_ms": round(elapsed, 3),
    }


def verify_injectivity(n: int, sample: int, seed: int, bound: int = 5) -> dict:
    """Distinct exponent vectors must give distinct mu vectors.

    For n = 3 the whole box [-bound, bound] is enumerated; otherwise ``sample``
    vectors are drawn.  Repeated inputs are reported as duplicates, not failures.
    """
    if not 3 <= n <= 5:
        raise ValueError("verify_injectivity supports 3 <= n <= 5")
    perms = permutations(n)
    if n == 3:
        inputs = [(e,) for e in range(-bound, bound + 1)]
    else:
        rng = random.Random(seed)
        inputs = [tuple(rng.randint(-bound, bound) for _ in perms) for _ in range(sample)]
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    duplicates = 0
    collisions = []
    outputs: dict[tuple[int, ...], tuple[int, ...]] = {}
    for e in inputs:
        if e in seen:
            duplicates += 1
            continue
        mu = mu_vector(brunnian_product(n, dict(zip(perms, e)))).values()
        seen[e] = mu
        if mu in outputs:
            collisions.append({"e1": list(outputs[mu]), "e2": list(e)})
        else:
            outputs[mu] = e
    return {
        "n": n,
        "seed": seed,
        "rng": RNG_ALGORITHM,
        "inputs": len(inputs),
        "distinct_inputs": len(seen),
        "distinct_outputs": len(outputs),
        "duplicates": duplicates,
        "failures": collisions,
    }
