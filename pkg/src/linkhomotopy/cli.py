"""Command-line front end.

    linkhomotopy mu -n 3 "[t1,t2]"
    linkhomotopy brunnian -n 4 t1
    linkhomotopy verify -n 4 --trials 50 --seed 7 --json

Exit status: 0 on success (or a true answer), 1 when a checked property
fails, 2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from . import schemas
from .conflie import check_4T, relation_instances
from .kappa import RNG_ALGORITHM, VerifyConfig, kappa_coeffs, verify_main_theorem
from .mulinks import NotBrunnianError, mu_table
from .rfree import RFWord, brunnian_witness, normal_form
from .suites import kronecker_suite, product_formula_suite, rank_suite
from .words import AlphabetError, WordSyntaxError, parse_word

VERBS = ("mu", "nf", "brunnian", "kappa", "verify", "dims", "fourT")
WORD_VERBS = {"mu", "nf", "brunnian", "kappa"}


class UsageError(Exception):
    pass


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="linkhomotopy", description="Milnor invariants and Brunnian string links.")
    p.add_argument("verb", choices=VERBS)
    p.add_argument("word", nargs="?", help="word in t1..t{n-1}, e.g. \"[t1,t2]\"")
    p.add_argument("-n", type=int, required=True, help="number of components")
    p.add_argument("--degree", type=int, help="cap on |I| for mu (default n-1)")
    p.add_argument("--json", action="store_true", help="emit JSON")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--file", help="read the word from this file")
    p.add_argument("--timing", action="store_true", help="include elapsed_ms (breaks byte-identical output)")
    return p


def _read_word(args) -> tuple[str, RFWord]:
    if args.file is not None and args.word is not None:
        raise UsageError("give the word either positionally or with --file, not both")
    if args.file is not None:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read().strip()
        except OSError as exc:
            raise UsageError(f"cannot read {args.file}: {exc.strerror}") from exc
    elif args.word is not None:
        text = args.word
    else:
        raise UsageError(f"{args.verb} needs a word")
    return text, RFWord(parse_word(text, args.n - 1), args.n)


def _dump(doc: dict, kind: str) -> str:
    schemas.validate(kind, doc)
    return json.dumps(doc, indent=2)


def _cmd_mu(args, text, L):
    cap = args.n - 1 if args.degree is None else args.degree
    table = mu_table(L, cap)
    if args.json:
        doc = {"n": args.n, "word": text, "mu": [{"I": list(I), "value": str(v)} for I, v in table.items()]}
        return 0, _dump(doc, "mu_table")
    lines = [f"mu({','.join(map(str, I))};{args.n}) = {v}" for I, v in table.items()]
    return 0, "\n".join(lines) if lines else "(no distinct-index invariants)"


def _cmd_nf(args, text, L):
    nf = normal_form(L)
    return 0, _dump(nf.to_json(), "normal_form") if args.json else nf.to_text()


def _cmd_brunnian(args, text, L):
    j = brunnian_witness(L)
    status = 0 if j is None else 1
    if args.json:
        return status, _dump({"n": args.n, "word": text, "brunnian": j is None, "witness": j}, "brunnian")
    return status, "true" if j is None else f"false (witness j={j})"


def _cmd_kappa(args, text, L):
    try:
        k = kappa_coeffs(L)
    except NotBrunnianError as exc:
        j = brunnian_witness(L)
        return 1, f"error: {exc} (deleting strand {j} is nontrivial)"
    if args.json:
        return 0, _dump(k.to_json(), "kappa")
    return 0, "\n".join(f"kappa[B({args.n},({','.join(map(str, s))}))] = {v}" for s, v in k.coeffs.items())


def _cmd_verify(args):
    if not 3 <= args.n <= 6:
        raise UsageError("verify supports 3 <= n <= 6")
    start = time.perf_counter()
    main = verify_main_theorem(VerifyConfig(args.n, trials=args.trials, seed=args.seed))
    main.pop("elapsed_ms")
    suites = {
        "product_formula": product_formula_suite(args.n, args.trials, args.seed),
        "kronecker": kronecker_suite(args.n),
        "ranks": _stringify_ranks(rank_suite(args.n)),
    }
    ok = not main["failures"] and all(s["ok"] for s in suites.values())
    doc = {
        "n": args.n,
        "trials": args.trials,
        "seed": args.seed,
        "rng": RNG_ALGORITHM,
        "failures": main["failures"],
        "main_theorem": main,
        "suites": suites,
        "ok": ok,
    }
    if args.timing:
        doc["elapsed_ms"] = round((time.perf_counter() - start) * 1000, 3)
    status = 0 if ok else 1
    if args.json:
        return status, _dump(doc, "verify")
    lines = [
        f"main theorem: {args.trials} trials, {len(main['failures'])} failures",
        f"product formula: {args.trials} pairs, {len(suites['product_formula']['failures'])} failures",
        f"kronecker: {suites['kronecker']['pairs']} pairs, {'ok' if suites['kronecker']['ok'] else 'FAILED'}",
        f"ranks: {'ok' if suites['ranks']['ok'] else 'FAILED'}",
    ]
    if args.timing:
        lines.append(f"elapsed_ms: {doc['elapsed_ms']}")
    return status, "\n".join(lines)


def _stringify_ranks(rep: dict) -> dict:
    out = dict(rep)
    out["quotient_rank"] = [{"k": r["k"], "rank": str(r["rank"]), "formula": str(r["formula"])} for r in rep["quotient_rank"]]
    for key in ("multilinear_dim", "btf_kernel_rank", "expected"):
        out[key] = None if rep[key] is None else str(rep[key])
    return out


def _cmd_dims(args):
    if args.n > 7:
        raise UsageError("dims supports n <= 7")
    rep = _stringify_ranks(rank_suite(args.n))
    status = 0 if rep["ok"] else 1
    if args.json:
        return status, _dump(rep, "dims")
    lines = [f"quotient_rank(n={args.n}, k={r['k']}) = {r['rank']}" for r in rep["quotient_rank"]]
    if rep["multilinear_dim"] is not None:
        lines.append(f"multilinear_dim({args.n}) = {rep['multilinear_dim']}")
    if rep["btf_kernel_rank"] is not None:
        lines.append(f"btf_kernel_rank({args.n}) = {rep['btf_kernel_rank']}")
    return status, "\n".join(lines)


def _cmd_fourT(args):
    if args.n < 2:
        raise UsageError("fourT needs n >= 2")
    failures: list = []
    holds = check_4T(args.n, failures=failures)
    instances = sum(1 for _ in relation_instances(args.n))
    doc = {
        "n": args.n,
        "holds": holds,
        "instances": instances,
        "failures": [{"family": f, "indices": list(s)} for f, s in failures],
    }
    status = 0 if holds else 1
    if args.json:
        return status, _dump(doc, "fourT")
    return status, f"4T relations hold for n={args.n} ({instances} instances)" if holds else f"4T FAILED: {doc['failures']}"


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Dispatch one command; returns (exit status, output text)."""
    parser = build_parser()
    try:
        args = parser.parse_intermixed_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0), ""
    try:
        if args.n < 2:
            raise UsageError("-n must be at least 2")
        if args.degree is not None and args.degree < 1:
            raise UsageError("--degree must be at least 1")
        if args.trials < 0:
            raise UsageError("--trials must be non-negative")
        if args.verb in WORD_VERBS:
            text, L = _read_word(args)
            handler = {"mu": _cmd_mu, "nf": _cmd_nf, "brunnian": _cmd_brunnian, "kappa": _cmd_kappa}[args.verb]
            return handler(args, text, L)
        if args.word is not None or args.file is not None:
            raise UsageError(f"{args.verb} takes no word")
        return {"verify": _cmd_verify, "dims": _cmd_dims, "fourT": _cmd_fourT}[args.verb](args)
    except WordSyntaxError as exc:
        caret = " " * exc.position + "^"
        return 2, f"error: {exc}\n  {exc.text}\n  {caret}"
    except (AlphabetError, UsageError) as exc:
        return 2, f"error: {exc}"


def main(argv: list[str] | None = None) -> int:
    status, out = run(argv)
    if out:
        stream = sys.stderr if out.startswith("error:") else sys.stdout
        print(out, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
