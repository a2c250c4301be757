"""Command-line entry point: ``matqsym <command> [options]``.

Exit status: 0 success, 1 invalid input, 2 budget exceeded, 3 a verification
failed.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import appendix, catalog, decomp, genperm, invariant, io
from .config import BudgetExceeded, budgets
from .matroid import Matroid, MatroidAxiomError, freedom_bases_direct, freedom_matroid, tutte
from .quotient import project_mod_m2
from .qsym import FUNDAMENTAL, MONOMIAL, parse, render, render_poly

SCHEMA_VERSION = 1

EXIT_OK, EXIT_INPUT, EXIT_BUDGET, EXIT_VERIFY = 0, 1, 2, 3


class InputError(ValueError):
    pass


class Outcome:
    """What a command produced: printable text, a JSON payload and a status."""

    def __init__(self, text: str, data, status: int = EXIT_OK):
        self.text, self.data, self.status = text, data, status


# ----------------------------------------------------------------- inputs

def _read_input(args) -> str:
    if args.input in (None, "-"):
        return sys.stdin.read()
    with open(args.input) as fh:
        return fh.read()


def load_matroid(args) -> Matroid:
    given = [x is not None for x in (args.bases, args.sigma, args.input)]
    if sum(given) > 1:
        raise InputError("give exactly one of --bases, --sigma, --input")
    if args.sigma is not None:
        return freedom_matroid(args.sigma)
    if args.bases is not None:
        try:
            bases = json.loads(args.bases)
        except json.JSONDecodeError as exc:
            raise InputError(f"--bases is not JSON: {exc}") from exc
        if args.n is None:
            raise InputError("--bases needs --n")
        return Matroid.from_bases(args.n, bases)
    text = _read_input(args)
    try:
        return io.matroid_from_json(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"matroid input is not JSON: {exc}") from exc


def _basis(args) -> str:
    return MONOMIAL if args.basis == "M" else FUNDAMENTAL


def _verdict(ok: bool) -> int:
    return EXIT_OK if ok else EXIT_VERIFY


# --------------------------------------------------------------- commands

def cmd_compute_f(args) -> Outcome:
    f = invariant.F(load_matroid(args)).to(_basis(args))
    return Outcome(render(f), render(f))


def cmd_compute_fstar(args) -> Outcome:
    f = invariant.F_star(load_matroid(args)).to(_basis(args))
    return Outcome(render(f), render(f))


def cmd_phi(args) -> Outcome:
    M = load_matroid(args)
    p = invariant.phi_star(M) if args.star else invariant.phi(M)
    return Outcome(str(p), {"poly": str(p), "binomial_coeffs": {str(k): v for k, v in sorted(p.coeffs.items())}})


def cmd_tutte(args) -> Outcome:
    t = tutte(load_matroid(args))
    return Outcome(str(t), str(t))


def cmd_dual(args) -> Outcome:
    D = load_matroid(args).dual()
    return Outcome(io.matroid_to_json(D), io.matroid_to_dict(D))


def cmd_freedom(args) -> Outcome:
    if args.sigma is None:
        raise InputError("freedom needs --sigma")
    M = freedom_matroid(args.sigma)
    same = M == freedom_bases_direct(args.sigma)
    rep = invariant.freedom_expansion_check(args.sigma)
    data = {
        "matroid": io.matroid_to_dict(M),
        "direct_description_agrees": same,
        "expansion": rep.coefficients,
        "diagonal": rep.diagonal,
        "expected_diagonal": rep.expected_diagonal,
        "triangular": rep.triangular,
    }
    text = "\n".join([
        io.matroid_to_json(M),
        f"direct description agrees: {same}",
        "R-expansion: " + ", ".join(f"{c}*R[{t}]" for t, c in sorted(rep.coefficients.items())),
        f"diagonal {rep.diagonal} (expected {rep.expected_diagonal}), triangular: {rep.triangular}",
    ])
    return Outcome(text, data, _verdict(same and rep.ok))


def cmd_decomp_check(args) -> Outcome:
    try:
        cert = io.certificate_from_json(_read_input(args))
    except (KeyError, json.JSONDecodeError) as exc:
        raise InputError(f"bad certificate: {exc}") from exc
    rep = decomp.check_valuation(cert)
    status = {"verified": EXIT_OK, "invalid-certificate": EXIT_INPUT, "identity-failure": EXIT_VERIFY}
    data = {"status": rep.status, "quotient_identity": rep.quotient_ok, "problems": rep.problems}
    text = rep.status + "".join(f"\n  {p}" for p in rep.problems)
    return Outcome(text, data, status[rep.status])


def cmd_split_search(args) -> Outcome:
    M = load_matroid(args)
    splits = decomp.find_hyperplane_splits(M)
    data = [
        {"S": list(s.S), "k": s.k, "pieces": [io.matroid_to_dict(P) for P in s.certificate.pieces]}
        for s in splits
    ]
    lines = [f"{len(splits)} hyperplane split(s)"]
    for s in splits:
        sizes = [len(P.bases) for P in s.certificate.pieces]
        lines.append(f"  S={{{','.join(map(str, s.S))}}} k={s.k} piece sizes {sizes}")
    return Outcome("\n".join(lines), data)


def cmd_quotient_project(args) -> Outcome:
    if args.qsym is not None:
        f = parse(args.qsym)
        if not f.degree:
            raise InputError("need a homogeneous function of positive degree")
        v = project_mod_m2(f)
    else:
        v = decomp.barF(load_matroid(args))
    return Outcome(" ".join(map(str, v.coords)), {"n": v.n, "coords": list(v.coords)})


def _catalog_from_args(args) -> list:
    if args.input is not None:
        if args.input == "-":
            return [io.matroid_from_json(l) for l in sys.stdin if l.strip()]
        return io.read_catalog(args.input)
    if args.n is None or args.rank is None:
        raise InputError("give --input (one matroid per line) or --n and --rank")
    return catalog.enumerate_matroids(args.n, args.rank, connected_only=args.connected)


def cmd_hilbert_basis(args) -> Outcome:
    mats = _catalog_from_args(args)
    if not mats:
        raise InputError("no matroids given")
    labels = [str(i) for i in range(len(mats))]
    inst = decomp.SemigroupInstance.from_matroids(mats, labels)
    res = decomp.hilbert_basis(inst, node_budget=args.search_nodes)
    data = {
        "count": len(mats),
        "indecomposable": [
            {"index": int(l), "matroid": io.matroid_to_dict(mats[int(l)])} for l in res.indecomposable
        ],
        "decomposable": {l: w for l, w in res.decomposable.items()},
        "undecided": res.undecided,
    }
    lines = [f"{len(mats)} generators, {len(res.indecomposable)} indecomposable"]
    for l in res.indecomposable:
        lines.append(f"  [{l}] {io.matroid_to_json(mats[int(l)])}")
    for l, w in res.decomposable.items():
        lines.append(f"  [{l}] = " + " + ".join(f"[{x}]" for x in w))
    if res.undecided:
        lines.append("  undecided (budget): " + ", ".join(res.undecided))
    return Outcome("\n".join(lines), data, EXIT_BUDGET if res.undecided else EXIT_OK)


def cmd_enumerate(args) -> Outcome:
    if args.n is None:
        raise InputError("enumerate needs --n")
    ranks = [args.rank] if args.rank is not None else range(args.n + 1)
    mats = []
    for r in ranks:
        mats.extend(catalog.enumerate_matroids(args.n, r, connected_only=args.connected))
    return Outcome("\n".join(io.matroid_to_json(M) for M in mats), [io.matroid_to_dict(M) for M in mats])


def cmd_appendix_lu(args) -> Outcome:
    if args.n is None or args.n < 1:
        raise InputError("appendix-lu needs --n >= 1")
    d = appendix.lu_matrices(args.n)
    ok = (
        appendix.is_lower_unitriangular(d["L"])
        and appendix.is_upper_unitriangular(d["U"])
        and appendix.matmul(d["L"], d["U"]) == d["A"]
    )
    sig = d["sigmas"]
    comps = [appendix.comp_label(a) for a in d["compositions"]]
    text = "\n\n".join([
        "A (R in L)\n" + appendix.format_matrix(d["A"], comps, ["R" + s for s in sig]),
        "L (Q in L)\n" + appendix.format_matrix(d["L"], comps, ["Q" + s for s in sig]),
        "U (R in Q)\n" + appendix.format_matrix(d["U"], ["Q" + s for s in sig], ["R" + s for s in sig]),
        f"A = L U with unitriangular factors: {ok}",
    ])
    data = {"sigmas": sig, "compositions": [list(a) for a in d["compositions"]],
            "A": d["A"], "L": d["L"], "U": d["U"], "verified": ok}
    return Outcome(text, data, _verdict(ok))


def cmd_zonotope(args) -> Outcome:
    if args.graph is None:
        raise InputError("zonotope needs --graph 'n; 1-2, ...'")
    G = io.parse_graph(args.graph)
    f = genperm.graphic_zonotope_F(G).to(_basis(args))
    chi = genperm.chromatic_polynomial(G)
    ok = genperm.chromatic_poly_check(G)
    text = f"{render(f)}\nchromatic polynomial: {render_poly(chi, 'm')}\nspecialization agrees: {ok}"
    return Outcome(text, {"F": render(f), "chromatic": chi, "verified": ok}, _verdict(ok))


def cmd_reciprocity_check(args) -> Outcome:
    M = load_matroid(args)
    poly_ok = invariant.check_reciprocity(M)
    fs = invariant.F_star(M).to(MONOMIAL)
    brute = invariant.F_star_bruteforce(M)
    brute_ok = all(fs.coefficient(a) == c for a, c in brute.items())
    ok = poly_ok and brute_ok
    text = (f"phi(-m) = {invariant.phi(M).reflect()}\n"
            f"phi*(m) = {invariant.phi_star(M)}\n"
            f"polynomial reciprocity: {poly_ok}\nantipode matches brute force: {brute_ok}")
    return Outcome(text, {"polynomial": poly_ok, "bruteforce": brute_ok}, _verdict(ok))


def cmd_hopf_check(args) -> Outcome:
    M = load_matroid(args)
    ok = invariant.check_hopf_morphism(M)
    return Outcome(f"coproduct identity: {ok}", {"verified": ok}, _verdict(ok))


COMMANDS = {
    "compute-f": (cmd_compute_f, "F(M) in the M or L basis"),
    "compute-fstar": (cmd_compute_fstar, "F*(M) = (-1)^n S(F(M))"),
    "phi": (cmd_phi, "phi(M, m), or phi*(M, m) with --star"),
    "tutte": (cmd_tutte, "Tutte polynomial"),
    "dual": (cmd_dual, "dual matroid as JSON"),
    "freedom": (cmd_freedom, "freedom matroid of a 0/1 string and its R-expansion"),
    "decomp-check": (cmd_decomp_check, "verify a decomposition certificate (JSON)"),
    "split-search": (cmd_split_search, "list hyperplane splits"),
    "quotient-project": (cmd_quotient_project, "image in (QSym/m^2)_n"),
    "hilbert-basis": (cmd_hilbert_basis, "indecomposable generators of a catalog"),
    "enumerate": (cmd_enumerate, "matroids up to isomorphism"),
    "appendix-lu": (cmd_appendix_lu, "A_n = L_n U_n matrices"),
    "zonotope": (cmd_zonotope, "chromatic symmetric function of a graph"),
    "reciprocity-check": (cmd_reciprocity_check, "antipode reciprocity checks"),
    "hopf-check": (cmd_hopf_check, "coproduct compatibility check"),
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matqsym", description="Quasisymmetric matroid invariants.")
    sub = p.add_subparsers(dest="command", required=True)
    for name, (_, help_text) in COMMANDS.items():
        s = sub.add_parser(name, help=help_text)
        s.add_argument("--bases", help='JSON list of bases, e.g. "[[1],[2]]"')
        s.add_argument("--n", type=int, help="ground set size")
        s.add_argument("--rank", type=int)
        s.add_argument("--sigma", help="0/1 string starting with 0 (freedom matroid)")
        s.add_argument("--input", help="file to read, '-' for stdin")
        s.add_argument("--basis", choices=["M", "L"], default="M")
        s.add_argument("--format", choices=["text", "json"], default="text")
        s.add_argument("--connected", action="store_true")
        s.add_argument("--star", action="store_true")
        s.add_argument("--qsym", help="quasisymmetric function text, e.g. 'L[1,2] + L[3]'")
        s.add_argument("--graph", help="graph text 'n; 1-2, 2-3'")
        s.add_argument("--max-poset-size", type=int, default=12)
        s.add_argument("--max-n", type=int, default=10, help="largest n for F(M)")
        s.add_argument("--brute-force-budget", type=int, default=10**7)
        s.add_argument("--search-nodes", type=int, default=2_000_000)
    return p


def run(argv=None) -> tuple:
    """Parse and execute; returns (exit status, rendered output)."""
    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        with budgets(max_poset_size=args.max_poset_size, max_invariant_n=args.max_n,
                     brute_force=args.brute_force_budget, search_nodes=args.search_nodes):
            out = func(args)
    except BudgetExceeded as exc:
        return EXIT_BUDGET, _error(args, "budget", str(exc))
    except (InputError, MatroidAxiomError, ValueError, OSError) as exc:
        return EXIT_INPUT, _error(args, "invalid-input", str(exc))
    if args.format == "json":
        payload = {"schema": SCHEMA_VERSION, "command": args.command, "status": out.status, "result": out.data}
        return out.status, json.dumps(payload, sort_keys=True)
    return out.status, out.text


def _error(args, kind: str, msg: str) -> str:
    if args.format == "json":
        return json.dumps({"schema": SCHEMA_VERSION, "command": args.command, "error": kind, "message": msg},
                          sort_keys=True)
    return f"error ({kind}): {msg}"


def main(argv=None) -> int:
    status, text = run(argv)
    stream = sys.stdout if status in (EXIT_OK, EXIT_VERIFY) else sys.stderr
    print(text, file=stream)
    return status


if __name__ == "__main__":
    sys.exit(main())
