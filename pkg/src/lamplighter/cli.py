"""Deterministic command-line front end.

Subcommands expose the library for batch verification and certificate
emission:

    mul         exact product of two group-ring elements
    fox         Fox derivative of a free word, evaluated in the group ring
    relator     print a defining relator of the presentation
    certify     build and verify a zerodivisor certificate from z_0..z_N
    ore-search  window-bounded solution search for (1-a) sigma = (1-x) alpha
    annihilate  finite-subgroup annihilator of base-ideal elements
    reduce-b2   lamp-exponent reduction mod the squared augmentation ideal
    selftest    run the built-in verification checks

Exit codes: 0 success/verified, 1 verification failed, 2 parse error,
3 limit exceeded, 4 invalid configuration.  Identical inputs (including
--seed) produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass

from . import certificates, foxwords, oresearch
from .errors import (ConfigError, LamplighterError, LimitExceededError,
                     NotInAugmentationIdealError, ParseError, SupportError)
from .groupring import GroupRing
from .parsing import parse_ring_element
from .ring import ScalarRing, is_prime
from .wreath import WreathGroup

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_PARSE = 2
EXIT_LIMIT = 3
EXIT_CONFIG = 4


@dataclass
class Config:
    """Validated run parameters shared by the subcommands."""

    d: int = 2
    modulus: int = 0
    relator_bound: int = 6
    depth: int = 1
    window_lamps: int = 1
    window_shift: int = 1
    cap: int = certificates.DEFAULT_CAP
    seed: int = 0
    format: str = "text"
    out: str | None = None

    def validate(self, need_prime: bool = False, need_match: bool = False) -> None:
        if self.d < 2:
            raise ConfigError(f"--d must be >= 2, got {self.d}")
        if self.modulus != 0 and self.modulus < 2:
            raise ConfigError(f"--mod must be 0 (integers) or >= 2, got {self.modulus}")
        if need_prime and not is_prime(self.modulus):
            raise ConfigError(f"--mod must be a prime for this command, got {self.modulus}")
        if need_match and self.modulus != self.d:
            raise ConfigError(
                f"this command needs --mod equal to --d, got {self.modulus} and {self.d}")
        if self.relator_bound < 0:
            raise ConfigError(f"--L must be >= 0, got {self.relator_bound}")
        if self.depth < 0:
            raise ConfigError(f"--N must be >= 0, got {self.depth}")
        if self.window_lamps < 0 or self.window_shift < 0:
            raise ConfigError("window bounds must be >= 0")
        if self.cap < 1:
            raise ConfigError(f"--cap must be >= 1, got {self.cap}")
        if self.format not in ("text", "json"):
            raise ConfigError(f"--format must be 'text' or 'json', got {self.format!r}")

    def algebra(self) -> GroupRing:
        return GroupRing(ScalarRing(self.modulus), WreathGroup(self.d))


class _Parser(argparse.ArgumentParser):
    """argparse that reports bad flags as ConfigError (exit code 4)."""

    def error(self, message):
        raise ConfigError(message)


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--d", type=int, default=2, help="lamp order d >= 2")
    sub.add_argument("--mod", type=int, default=0,
                     help="coefficient modulus; 0 means the integers")
    sub.add_argument("--L", type=int, default=6, dest="relator_bound",
                     help="highest relator index for truncated checks")
    sub.add_argument("--N", type=int, default=None, dest="depth",
                     help="certificate depth (highest z index)")
    sub.add_argument("--window-lamps", type=int, default=1,
                     help="lamp-position bound of the search window")
    sub.add_argument("--window-shift", type=int, default=1,
                     help="shift bound of the search window")
    sub.add_argument("--cap", type=int, default=certificates.DEFAULT_CAP,
                     help="enumeration cap for windows and subgroup closures")
    sub.add_argument("--seed", type=int, default=0,
                     help="seed for the randomized selftest checks")
    sub.add_argument("--format", choices=("text", "json"), default="text",
                     help="output format")
    sub.add_argument("--out", default=None, help="output file (default stdout)")


def _config(args, **kwargs) -> Config:
    if args.depth is not None and args.depth < 0:
        raise ConfigError(f"--N must be >= 0, got {args.depth}")
    cfg = Config(d=args.d, modulus=args.mod, relator_bound=args.relator_bound,
                 depth=args.depth if args.depth is not None else 0,
                 window_lamps=args.window_lamps, window_shift=args.window_shift,
                 cap=args.cap, seed=args.seed, format=args.format, out=args.out)
    cfg.validate(**kwargs)
    return cfg


def _emit(cfg: Config, text: str) -> None:
    if cfg.out is None:
        sys.stdout.write(text + "\n")
    else:
        with open(cfg.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _dump(data) -> str:
    return json.dumps(data, indent=2)


def _cmd_mul(args) -> int:
    cfg = _config(args)
    algebra = cfg.algebra()
    product = parse_ring_element(args.left, algebra) * parse_ring_element(args.right, algebra)
    _emit(cfg, _dump(product.to_json()) if cfg.format == "json" else str(product))
    return EXIT_OK


def _cmd_fox(args) -> int:
    cfg = _config(args)
    if args.symbol not in foxwords.GENERATOR_SYMBOLS:
        raise ConfigError(f"symbol must be 'a' or 'x', got {args.symbol!r}")
    derivative = foxwords.fox_derivative(foxwords.parse_word(args.word),
                                         args.symbol, cfg.algebra())
    _emit(cfg, _dump(derivative.to_json()) if cfg.format == "json" else str(derivative))
    return EXIT_OK


def _cmd_relator(args) -> int:
    cfg = _config(args)
    if args.index < 0:
        raise ConfigError(f"relator index must be >= 0, got {args.index}")
    word = foxwords.relator_word(cfg.d, args.index)
    payload = {"d": cfg.d, "index": args.index, "word": str(word)}
    _emit(cfg, _dump(payload) if cfg.format == "json" else str(word))
    return EXIT_OK


def _cmd_certify(args) -> int:
    cfg = _config(args)
    algebra = cfg.algebra()
    entries = [parse_ring_element(part.strip(), algebra) for part in args.z.split(";")]
    if args.depth is not None and args.depth != len(entries) - 1:
        raise ConfigError(
            f"--N {args.depth} does not match the {len(entries)} z entries given")
    cert = certificates.certify(certificates.RelatorCoefficients(entries), cap=cfg.cap)
    if cfg.format == "json":
        _emit(cfg, _dump(cert.to_json()))
    else:
        status = "verified" if cert.verified else "FAILED"
        _emit(cfg, f"u = {cert.u}\ngamma = {cert.gamma}\n"
                   f"u*gamma = {cert.product}\n{status}")
    return EXIT_OK if cert.verified else EXIT_FAILED


def _cmd_ore_search(args) -> int:
    cfg = _config(args, need_prime=True)
    algebra = cfg.algebra()
    window = oresearch.Window(cfg.window_lamps, cfg.window_shift)
    report = oresearch.run_search(algebra, window, cap=cfg.cap)
    if cfg.format == "json":
        _emit(cfg, _dump(report.to_json()))
    else:
        lines = [f"window lamps<={cfg.window_lamps} shift<={cfg.window_shift}: "
                 f"{report.nullspace_dim} basis solutions, verdict {report.verdict}"]
        for rec in report.solutions:
            witness = rec.annihilator if rec.annihilator is not None else "none found"
            lines.append(f"  sigma = {rec.sigma} | in base ideal: {rec.in_base_ideal} "
                         f"| annihilator: {witness}")
        _emit(cfg, "\n".join(lines))
    return EXIT_OK if report.verdict == "consistent" else EXIT_FAILED


def _cmd_annihilate(args) -> int:
    cfg = _config(args)
    algebra = cfg.algebra()
    alphas = [parse_ring_element(text, algebra) for text in args.elements]
    beta = certificates.finite_subgroup_annihilator(alphas, algebra, cap=cfg.cap)
    ok = bool(beta) and all((beta * alpha).is_zero() for alpha in alphas)
    if cfg.format == "json":
        _emit(cfg, _dump({"beta": beta.to_json(), "verified": ok}))
    else:
        _emit(cfg, f"beta = {beta}\n{'verified' if ok else 'FAILED'}")
    return EXIT_OK if ok else EXIT_FAILED


def _cmd_reduce_b2(args) -> int:
    cfg = _config(args, need_prime=True, need_match=True)
    algebra = cfg.algebra()
    vector = certificates.reduce_mod_ideal_square(parse_ring_element(args.element, algebra))
    _emit(cfg, _dump(vector.to_json()) if cfg.format == "json" else str(vector))
    return EXIT_OK


def _selftest_checks(cfg: Config):
    rng = random.Random(cfg.seed)

    def closed_fox_forms():
        for d in (2, 3, 4, 5):
            algebra = GroupRing(ScalarRing(cfg.modulus), WreathGroup(d))
            group = algebra.group
            a = algebra.monomial(group.generator_a(0))
            one = algebra.one
            if foxwords.fox_derivative(foxwords.relator_word(d, 0), "a",
                                       algebra) != algebra.geometric_a(d):
                return False
            for l in range(1, 6):
                xl = algebra.monomial(group.generator_x(l))
                al = algebra.monomial(group.generator_a(l))
                expected = one + a * xl - al - xl
                lhs = foxwords.fox_derivative(foxwords.relator_word(d, l), "a", algebra)
                xml = algebra.monomial(group.generator_x(-l))
                simplified = xl * (xml * a * xl - one) - (xl * a * xml - one)
                if lhs != expected or lhs != simplified:
                    return False
        return True

    def fundamental_identity():
        for modulus in (0, 2):
            algebra = GroupRing(ScalarRing(modulus), WreathGroup(cfg.d))
            for _ in range(25):
                comps = {l: algebra.random_element(rng, terms=2, lamp_bound=1, shift_bound=1)
                         for l in rng.sample(range(cfg.relator_bound + 1), 2)}
                z = foxwords.ModuleVector(algebra, "relators", comps)
                image = foxwords.boundary_from_relators(z)
                if not foxwords.boundary_from_generators(image).is_zero():
                    return False
        return True

    def sample_certificates():
        for d in (2, 3):
            for modulus in (0, 4, 2, 3):
                algebra = GroupRing(ScalarRing(modulus), WreathGroup(d))
                for _ in range(5):
                    depth = rng.randint(0, 2)
                    entries = [algebra.random_element(rng, terms=2, lamp_bound=1,
                                                      shift_bound=1)
                               for _ in range(depth + 1)]
                    cert = certificates.certify(
                        certificates.RelatorCoefficients(entries), cap=cfg.cap)
                    if not cert.verified:
                        return False
        return True

    return [("closed-fox-forms", closed_fox_forms),
            ("fundamental-identity", fundamental_identity),
            ("sample-certificates", sample_certificates)]


def _cmd_selftest(args) -> int:
    cfg = _config(args)
    lines = []
    all_ok = True
    for name, check in _selftest_checks(cfg):
        ok = check()
        all_ok = all_ok and ok
        lines.append(f"{'ok' if ok else 'FAIL'}: {name}")
    lines.append("selftest passed" if all_ok else "selftest FAILED")
    _emit(cfg, "\n".join(lines))
    return EXIT_OK if all_ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lamplighter",
                     description="Exact group-ring computation in Z/dZ wr Z: "
                                 "products, Fox derivatives, zerodivisor "
                                 "certificates and Ore-condition window searches.")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("mul", help="multiply two group-ring elements exactly")
    sub.add_argument("left")
    sub.add_argument("right")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_mul)

    sub = subs.add_parser("fox", help="Fox derivative of a word w.r.t. 'a' or 'x'")
    sub.add_argument("word")
    sub.add_argument("symbol")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_fox)

    sub = subs.add_parser("relator", help="print the defining relator r_l")
    sub.add_argument("index", type=int)
    _add_common(sub)
    sub.set_defaults(handler=_cmd_relator)

    sub = subs.add_parser("certify",
                          help="build and verify a zerodivisor certificate from "
                               "';'-separated z entries")
    sub.add_argument("--z", required=True,
                     help="z_0;z_1;...;z_N as group-ring elements")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_certify)

    sub = subs.add_parser("ore-search",
                          help="solve (1-a) sigma = (1-x) alpha on a window over GF(p)")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_ore_search)

    sub = subs.add_parser("annihilate",
                          help="finite-subgroup annihilator of base-ideal elements")
    sub.add_argument("elements", nargs="+")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_annihilate)

    sub = subs.add_parser("reduce-b2",
                          help="lamp-exponent reduction of an augmentation-zero "
                               "base element (GF(p), d = p)")
    sub.add_argument("element")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_reduce_b2)

    sub = subs.add_parser("selftest", help="run the built-in verification checks")
    _add_common(sub)
    sub.set_defaults(handler=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except LimitExceededError as exc:
        sys.stderr.write(f"limit exceeded: {exc}\n")
        return EXIT_LIMIT
    except ConfigError as exc:
        sys.stderr.write(f"invalid configuration: {exc}\n")
        return EXIT_CONFIG
    except (NotInAugmentationIdealError, SupportError) as exc:
        sys.stderr.write(f"verification failed: {exc}\n")
        return EXIT_FAILED
    except LamplighterError as exc:
        sys.stderr.write(f"invalid configuration: {exc}\n")
        return EXIT_CONFIG


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
