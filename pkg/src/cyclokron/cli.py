"""Command-line front end.

Exit status is 0 on success (and when a checked property holds), 1 when a
checked property fails, and 2 on usage errors.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import os
import re
import sys
from fractions import Fraction

from . import circulant, cyclotomic, orbits
from .ring import IntPoly, ModInt, as_prime

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SEED_ENV = "CYCLOKRON_SEED"

_RATIONAL = re.compile(r"^[+-]?\d+(/\d+)?$")
_LIST_FLAGS = ("--vector", "--poly", "--perm", "--rationals")
_NEGATIVE_LIST = re.compile(r"^-\d[\d,/+-]*$")


def int_list(text: str) -> list[int]:
    try:
        vals = [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None
    return vals


def rational_list(text: str) -> list[Fraction]:
    out = []
    for x in text.split(","):
        x = x.strip()
        if not _RATIONAL.match(x):
            raise argparse.ArgumentTypeError(f"expected num/den rationals, got {x!r}")
        try:
            out.append(Fraction(x))
        except ZeroDivisionError:
            raise argparse.ArgumentTypeError(f"zero denominator in {x!r}") from None
    return out


def _default_seed() -> int:
    env = os.environ.get(SEED_ENV)
    if env is None:
        return cyclotomic.DEFAULT_SEED
    try:
        return int(env)
    except ValueError:
        raise ValueError(f"{SEED_ENV} must be an integer, got {env!r}") from None


# Each handler returns (exit code, human text, JSON object).

def cmd_det(args):
    v = circulant.CirculantVector(args.vector)
    det = circulant.determinant(v, args.algorithm)
    obj = {"vector": list(v.a), "algorithm": args.algorithm, "det": det}
    text = str(det)
    if args.modulus is not None:
        r = ModInt(det, args.modulus)
        obj.update(modulus=args.modulus, det_mod=r.residue)
        text = str(r.residue)
    return EXIT_OK, text, obj


def cmd_det_congruence(args):
    p = as_prime(args.p).p
    v = circulant.CirculantVector(args.vector)
    ps = circulant.det_powersum_mod_p(v, p)
    det = circulant.det_bareiss(v)
    det_mod = det % p
    lin = sum(v.a) % p
    holds = det_mod == ps.residue == lin
    obj = {"vector": list(v.a), "p": p, "det": det, "det_mod_p": det_mod,
           "power_sum_mod_p": ps.residue, "sum_mod_p": lin, "holds": holds}
    text = "\n".join([
        f"det = {det}",
        f"det mod {p} = {det_mod}",
        f"sum a_j^{p} mod {p} = {ps.residue}",
        f"sum a_j mod {p} = {lin}",
        "CONGRUENCE HOLDS" if holds else "CONGRUENCE FAILS",
    ])
    return (EXIT_OK if holds else EXIT_FAIL), text, obj


def cmd_claim_verify(args):
    rep = orbits.verify_claim(args.p)
    big = rep.orbit_sizes.get(rep.p, 0)
    lines = [
        f"p = {rep.p}: {rep.n_permutations} permutations",
        f"{rep.n_fixed} fixed, {big} orbits of size {rep.p}",
        f"expansion: {rep.expansion}",
        f"mod {rep.p}:   {rep.reduced}",
        f"reduces to power sum: {rep.reduces_to_power_sum}",
        f"orbits monomial- and sign-homogeneous: {rep.orbits_homogeneous}",
        f"fixed points give the pure powers: {rep.fixed_points_are_powers}",
    ]
    lines += [f"  ! {f}" for f in rep.failures]
    lines.append("CLAIM HOLDS" if rep.holds else "CLAIM FAILS")
    return (EXIT_OK if rep.holds else EXIT_FAIL), "\n".join(lines), rep.to_json()


def cmd_claim_expand(args):
    p = as_prime(args.p).p
    sd = orbits.leibniz_symbolic(p)
    return EXIT_OK, str(sd), {"p": p, "expansion": str(sd), "terms": sd.to_json()}


def cmd_perm_orbits(args):
    orbs = orbits.orbit_decompose(args.p)
    lines = [" ".join(map(str, o)) for o in orbs]
    fixed = sum(1 for o in orbs if len(o) == 1)
    lines.append(f"{fixed} fixed, {len(orbs) - fixed} orbits of size {int(args.p)}")
    obj = {"p": int(args.p), "orbits": [[list(s.images) for s in o] for o in orbs],
           "fixed": fixed, "nontrivial": len(orbs) - fixed}
    return EXIT_OK, "\n".join(lines), obj


def cmd_perm_sign(args):
    s = orbits.Permutation(args.perm)
    sg = orbits.sign(s)
    return EXIT_OK, f"{sg:+d}", {"perm": list(s.images), "inversions": s.inversions(), "sign": sg}


def cmd_phi(args):
    f = cyclotomic.phi(args.p)
    return EXIT_OK, str(f), {"p": int(args.p), "coeffs": list(f.coeffs)}


def cmd_lemma_check(args):
    rep = cyclotomic.kronecker_lemma_check(IntPoly(args.poly), args.p)
    text = "\n".join([
        f"f = {rep.poly}",
        f"vanishes at zeta_{rep.p}: {rep.vanishes}",
        f"f(1) = {rep.value_at_1}; {rep.p} | f(1): {rep.p_divides_value}",
        "LEMMA CONSISTENT" if rep.consistent else "LEMMA VIOLATED",
    ])
    return (EXIT_OK if rep.consistent else EXIT_FAIL), text, rep.to_json()


def cmd_zeta_identity(args):
    p = as_prime(args.p).p
    rows = cyclotomic.zeta_identity_rows(args.vector, p)
    ok = all(r.is_zero() for r in rows)
    lines = [f"row {i}: {r}" for i, r in enumerate(rows)] + [f"A·(1,ζ,…,ζ^{p - 1}) = 0: {ok}"]
    obj = {"p": p, "vector": args.vector, "rows": [list(r.residue.coeffs) for r in rows],
           "identity": ok}
    return EXIT_OK, "\n".join(lines), obj


def cmd_factor(args):
    fac = cyclotomic.kronecker_factor(IntPoly(args.poly))
    obj = {"poly": list(IntPoly(args.poly).coeffs), **fac.to_json()}
    text = f"{fac}\nirreducible: {fac.irreducible}"
    return EXIT_OK, text, obj


def cmd_irreducible(args):
    seed = args.seed if args.seed is not None else _default_seed()
    rep = cyclotomic.irreducibility_report(args.p, seed=seed,
                                           include_factorization=not args.skip_factor)
    fac = str(rep.factorization) if rep.factorization else "(skipped)"
    lines = [
        f"Phi_{rep.p}(1) = {rep.phi_at_1} (= p: {rep.phi_at_1_is_p})",
        f"p^2 does not divide p: {rep.p_squared_does_not_divide}",
        f"Kronecker factorization: {fac}",
        f"single irreducible factor: {rep.single_factor}",
        f"Eisenstein at p after t -> t+1: {rep.eisenstein}",
        f"lemma instances (seed {rep.seed}): {rep.lemma_trials - len(rep.lemma_failures)}"
        f"/{rep.lemma_trials} with p | f(1)",
        "IRREDUCIBLE" if rep.holds else "CHECK FAILED",
    ]
    return (EXIT_OK if rep.holds else EXIT_FAIL), "\n".join(lines), rep.to_json()


def cmd_eisenstein(args):
    p = as_prime(args.p).p
    g = cyclotomic.eisenstein_shift(p)
    ok = cyclotomic.eisenstein_shift_check(p)
    text = f"Phi_{p}(t+1) = {g}\nEisenstein at {p}: {ok}"
    return (EXIT_OK if ok else EXIT_FAIL), text, {"p": p, "shifted": list(g.coeffs), "holds": ok}


def cmd_relation(args):
    rep = cyclotomic.rational_relation_check(args.rationals, args.p)
    text = "\n".join([
        f"sum a_j zeta^j = 0: {rep.is_relation}",
        f"all a_j equal: {rep.is_constant}",
        "THEOREM CONSISTENT" if rep.theorem_consistent else "THEOREM VIOLATED",
    ])
    return (EXIT_OK if rep.theorem_consistent else EXIT_FAIL), text, rep.to_json()


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON object")

    def prime_arg(sp):
        sp.add_argument("-p", type=int, required=True, metavar="P", help="a prime")

    parser = _Parser(prog="cyclokron", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("det", parents=[common], help="circulant determinant")
    sp.add_argument("--vector", type=int_list, required=True)
    sp.add_argument("--algorithm", choices=sorted(circulant.ALGORITHMS), default="bareiss")
    sp.add_argument("--modulus", type=int)
    sp.set_defaults(func=cmd_det)

    sp = sub.add_parser("det-congruence", parents=[common],
                        help="check det = sum a_j^p (mod p)")
    sp.add_argument("--vector", type=int_list, required=True)
    prime_arg(sp)
    sp.set_defaults(func=cmd_det_congruence)

    claim = sub.add_parser("claim", help="symbolic orbit check of the circulant congruence")
    csub = claim.add_subparsers(dest="action", required=True, parser_class=_Parser)
    sp = csub.add_parser("verify", parents=[common])
    prime_arg(sp)
    sp.set_defaults(func=cmd_claim_verify)
    sp = csub.add_parser("expand", parents=[common])
    prime_arg(sp)
    sp.set_defaults(func=cmd_claim_expand)

    perm = sub.add_parser("perm", help="permutations under the diagonal shift")
    psub = perm.add_subparsers(dest="action", required=True, parser_class=_Parser)
    sp = psub.add_parser("orbits", parents=[common])
    prime_arg(sp)
    sp.set_defaults(func=cmd_perm_orbits)
    sp = psub.add_parser("sign", parents=[common])
    sp.add_argument("--perm", type=int_list, required=True)
    sp.set_defaults(func=cmd_perm_sign)

    sp = sub.add_parser("phi", parents=[common], help="p-th cyclotomic polynomial")
    prime_arg(sp)
    sp.set_defaults(func=cmd_phi)

    lemma = sub.add_parser("lemma", help="Kronecker's divisibility lemma")
    lsub = lemma.add_subparsers(dest="action", required=True, parser_class=_Parser)
    sp = lsub.add_parser("check", parents=[common])
    sp.add_argument("--poly", type=int_list, required=True)
    prime_arg(sp)
    sp.set_defaults(func=cmd_lemma_check)

    sp = sub.add_parser("zeta-identity", parents=[common],
                        help="check A·(1, ζ, …, ζ^(p-1)) = 0 exactly")
    sp.add_argument("--vector", type=int_list, required=True)
    prime_arg(sp)
    sp.set_defaults(func=cmd_zeta_identity)

    sp = sub.add_parser("factor", parents=[common], help="factor over Z (Kronecker)")
    sp.add_argument("--poly", type=int_list, required=True)
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("irreducible", parents=[common], help="irreducibility report for Phi_p")
    prime_arg(sp)
    sp.add_argument("--seed", type=int, help=f"overrides ${SEED_ENV}")
    sp.add_argument("--skip-factor", action="store_true",
                    help="omit the factorization leg (allows p > 7)")
    sp.set_defaults(func=cmd_irreducible)

    sp = sub.add_parser("eisenstein", parents=[common], help="Eisenstein check of Phi_p(t+1)")
    prime_arg(sp)
    sp.set_defaults(func=cmd_eisenstein)

    sp = sub.add_parser("relation", parents=[common],
                        help="test sum a_j zeta^j = 0 for rational a_j")
    sp.add_argument("--rationals", type=rational_list, required=True)
    prime_arg(sp)
    sp.set_defaults(func=cmd_relation)

    return parser


def _glue_negative_lists(argv: list[str]) -> list[str]:
    """Rewrite ``--vector -1,2`` as ``--vector=-1,2`` so argparse sees a value, not a flag."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _LIST_FLAGS and i + 1 < len(argv) and _NEGATIVE_LIST.match(argv[i + 1]):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    argv = _glue_negative_lists(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout), contextlib.redirect_stderr(stderr):
            args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    try:
        code, text, obj = args.func(args)
    except (ValueError, TypeError, ZeroDivisionError) as e:
        print(f"cyclokron: error: {e}", file=stderr)
        return EXIT_USAGE
    if args.json:
        obj = {"command": _command_name(args), "exit_code": code, **obj}
        print(json.dumps(obj), file=stdout)
    else:
        print(text, file=stdout)
    return code


def _command_name(args) -> str:
    action = getattr(args, "action", None)
    return f"{args.command} {action}" if action else args.command


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
