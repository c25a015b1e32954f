"""Command-line front end.

Input files hold one JSON object, either ``{"presentation": {...}}`` or
``{"generator": {...}}`` (``recurrence`` also takes ``{"values": [...]}``). Output is JSON on stdout (``--format json``, the
default), a short human-readable rendering (``--format table``) or Graphviz
for ``mongraph`` (``--format dot``). Exit codes: 0 success, 1 mathematical
precondition failed, 2 refused budget, 3 schema/input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from . import algebra, genfun, moduli, morphisms, radical, words
from .algebra import OracleAlgebra, Presentation, PresentationAlgebra
from .errors import BudgetExceeded, LengthBeyondOracle, MonopointError, SchemaError
from .words import DEFAULT_PREFIX_MULTIPLIER, Exactness

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_BUDGET = 2
EXIT_SCHEMA = 3

DEFAULT_N = 24


class Input:
    """Parsed input: a presentation or a word generator."""

    def __init__(self, data, path):
        self.path = path
        if not isinstance(data, dict):
            raise SchemaError("top level must be an object", "$")
        keys = [k for k in ("presentation", "generator") if k in data]
        if len(keys) > 1 or (not keys and "values" not in data):
            raise SchemaError("expected exactly one of 'presentation' or 'generator'", "$")
        self.kind = keys[0] if keys else "values"
        self.raw = data
        if self.kind == "values":
            self.presentation = self.generator = None
        elif self.kind == "presentation":
            self.presentation = Presentation.from_json(data["presentation"])
            self.generator = None
        else:
            self.presentation = None
            self.generator = words.generator_from_json(data["generator"])

    def require_presentation(self, command):
        if self.presentation is None:
            raise SchemaError(f"'{command}' needs a presentation input", "presentation")
        return self.presentation

    def require_generator(self, command):
        if self.generator is None:
            raise SchemaError(f"'{command}' needs a generator input", "generator")
        return self.generator

    def factor_set(self, args, N=None):
        g = self.require_generator(args.command)
        return words.factors(g, N or args.N, args.prefix_multiplier)

    def algebra(self, args, N=None):
        if self.presentation is not None:
            return PresentationAlgebra(self.presentation)
        return OracleAlgebra(self.factor_set(args, N))


def load_input(path) -> Input:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise SchemaError(f"cannot read input: {exc.strerror}", path) from None
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
                          path) from None
    return Input(data, path)


def _s(x):
    return str(x)


# --------------------------------------------------------------------------
# commands; each returns (json-able object, table text)


def cmd_hilbert(inp, args):
    gf = algebra.hilbert_series(inp.require_presentation("hilbert"))
    return {**gf.to_json(), "exactness": "exact"}, str(gf)


def cmd_dims(inp, args):
    A = inp.algebra(args)
    n_max = args.n_max if args.n_max is not None else (10 if inp.presentation else args.N)
    dims = [A.graded_dim(n) for n in range(n_max + 1)]
    return ({"dims": [_s(d) for d in dims], "exactness": A.exactness.value},
            " ".join(map(str, dims)))


def cmd_growth(inp, args):
    rep = algebra.growth_class(inp.require_presentation("growth-class"))
    return {**rep.to_json(), "exactness": "exact"}, f"{rep.growth} (certificate {rep.certificate})"


def cmd_radical(inp, args):
    rep = radical.prolongable_radical(inp.require_presentation("radical"), args.side)
    a = rep.quotient.alphabet
    gens = ", ".join(a.render(w) or "1" for w in rep.sorted_generators()) or "(none)"
    return rep.to_json(), f"{rep.side.value} radical generators: {gens}"


def cmd_subshift(inp, args):
    f = radical.subshift_language(inp.require_presentation("subshift-lang"), args.n,
                                  two_sided=not args.one_sided)
    return ({"factors": f.to_json(), "exactness": f.exactness.value},
            "\n".join(f"{n}: {' '.join(ws)}" for n, ws in f.to_json().items()))


def _moduli_algebra(inp, args, n):
    if inp.presentation is not None:
        return inp.presentation
    N = args.N if args.N_given else max(args.N, moduli.sturmian_oracle_length(n))
    return OracleAlgebra(inp.factor_set(args, N))


def cmd_components(inp, args):
    cs = moduli.components(_moduli_algebra(inp, args, args.n), args.n, args.variant, args.budget)
    return cs.to_json(), cs.table()


def cmd_count(inp, args):
    cs = moduli.components(_moduli_algebra(inp, args, args.n), args.n, args.variant, args.budget)
    return ({"count": _s(cs.count), "n": args.n, "variant": cs.variant.value,
             "exactness": cs.exactness.value}, str(cs.count))


def cmd_genfun(inp, args):
    p = inp.require_presentation("genfun")
    gf = genfun.counting_gf(p, args.variant, args.budget)
    return {**gf.to_json(), "variant": moduli.Variant.parse(args.variant).value,
            "exactness": "exact"}, str(gf)


def cmd_recurrence(inp, args):
    if "values" in inp.raw:
        try:
            values = [int(v) for v in inp.raw["values"]]
        except (TypeError, ValueError):
            raise SchemaError("values must be a list of integers", "values") from None
    else:
        p = inp.require_presentation("recurrence")
        q = genfun.build_quiver(p, args.variant, args.budget)
        head = genfun.brute_force_counts(p, args.variant, q.start_degree - 1, args.budget).values \
            if q.start_degree else ()
        values = list(head) + genfun.counts_via_matrix(q, args.n_max)
    rep = genfun.recurrence_check(values)
    return {**rep.to_json(), "values": [_s(v) for v in values]}, str(rep)


def _load_other(args):
    if not args.other:
        raise SchemaError("this command needs --other INPUT", "--other")
    return load_input(args.other)


def cmd_iso(inp, args):
    other = _load_other(args)
    if inp.presentation is not None and other.presentation is not None and not args.truncated:
        sigma = morphisms.iso_monomial(inp.presentation, other.presentation)
        verdict = "ISOMORPHIC" if sigma is not None else "NOT ISOMORPHIC"
        return ({"verdict": verdict, "permutation": None if sigma is None else list(sigma),
                 "exactness": "exact"}, verdict + ("" if sigma is None else f" via {list(sigma)}"))
    res = morphisms.iso_truncated(inp.algebra(args, args.N), other.algebra(args, args.N), args.N)
    return res.to_json(), res.verdict()


def cmd_aut(inp, args):
    grp = morphisms.graded_aut_permutations(inp.algebra(args), args.N, args.projectively_simple)
    text = f"order {grp.order}: " + " ".join(str(list(s)) for s in grp.elements)
    return grp.to_json(), text


def cmd_mongraph(inp, args):
    g = morphisms.mon_graph(inp.algebra(args, max(args.N, args.depth)), args.depth)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(g.to_dot())
    if args.format == "dot":
        return None, g.to_dot()
    sizes = " ".join(map(str, g.layer_sizes()))
    return g.to_json(), f"layer sizes: {sizes}"


def cmd_complexity(inp, args):
    n = args.n if args.n is not None else args.N
    if inp.presentation is not None:
        A = PresentationAlgebra(inp.presentation)
        ps = [A.graded_dim(k) for k in range(n + 1)]
        ex = Exactness.EXACT
    else:
        f = inp.factor_set(args, max(n, 1))
        ps, ex = f.complexity()[:n + 1], f.exactness
    return {"p": [_s(x) for x in ps], "exactness": ex.value}, " ".join(map(str, ps))


def cmd_balanced(inp, args):
    f = inp.factor_set(args)
    ok, wit = words.is_k_balanced(f, args.k)
    out = {"k": args.k, "balanced": ok, "N": f.N, "exactness": f.exactness.value, "witness": None}
    if wit:
        n, x, u1, u2 = wit
        out["witness"] = {"n": n, "letter": f.alphabet.symbols[x],
                          "u1": f.alphabet.render(u1), "u2": f.alphabet.render(u2)}
    return out, f"{args.k}-balanced: {ok}"


def cmd_special(inp, args):
    f = inp.factor_set(args, max(args.N, args.n + 1))
    found = sorted(f.alphabet.render(u) for u in words.special_factors(f, args.n, args.side))
    return ({"special": found, "side": words.Side.parse(args.side).value,
             "exactness": f.exactness.value}, " ".join(found) or "(none)")


def cmd_p1(inp, args):
    g = inp.require_generator("p1-report")
    N = args.N if args.N_given else None
    rep = moduli.p1_report(g, args.n, args.prefix_multiplier, N, args.budget)
    return rep.to_json(), (f"a_{args.n} = {rep.component_count}, dim = {rep.dimension}, "
                           f"tree {rep.tree.render(rep.alphabet)}")


def cmd_verify(inp, args):
    if "module" not in inp.raw:
        raise SchemaError("missing field", "module")
    M = moduli.PointModuleTrunc.from_json(inp.raw["module"])
    A = inp.presentation if inp.presentation is not None else \
        OracleAlgebra(inp.factor_set(args, max(args.N, M.n + 1)))
    res = moduli.verify_point_module(A, M)
    return res.to_json(), "ok" if res.ok else f"FAILED: {res.failure}"


def cmd_irreducible(inp, args):
    rep = moduli.irreducibility_report(inp.require_presentation("irreducible-report"),
                                       args.n_max, args.budget)
    text = "irreducible" if rep.irreducible else \
        f"reducible at n = {rep.per_degree.index(False)}"
    if rep.irreducible:
        text += f", free rank {rep.free_rank}, nilpotency bound {rep.nilpotency_bound}"
    return rep.to_json(), text


def cmd_dim_profile(inp, args):
    A = _moduli_algebra(inp, args, args.n_max)
    prof = moduli.dim_profile(A, args.n_max, args.budget)
    return prof.to_json(), " ".join(map(str, prof.dims)) + (" (stabilized)" if prof.stabilized else "")


COMMANDS = {
    "hilbert": cmd_hilbert,
    "dims": cmd_dims,
    "growth-class": cmd_growth,
    "radical": cmd_radical,
    "subshift-lang": cmd_subshift,
    "components": cmd_components,
    "count": cmd_count,
    "genfun": cmd_genfun,
    "recurrence": cmd_recurrence,
    "iso": cmd_iso,
    "aut": cmd_aut,
    "mongraph": cmd_mongraph,
    "complexity": cmd_complexity,
    "balanced": cmd_balanced,
    "special": cmd_special,
    "p1-report": cmd_p1,
    "verify-module": cmd_verify,
    "irreducible-report": cmd_irreducible,
    "dim-profile": cmd_dim_profile,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("input", help="JSON file with a presentation or a generator")
    common.add_argument("--format", choices=("json", "table", "dot"), default="json")
    common.add_argument("--out", help="write output here instead of stdout")
    common.add_argument("--budget", type=int, default=moduli.DEFAULT_BUDGET,
                        help="cap on enumeration work (window checks)")
    common.add_argument("--prefix-multiplier", type=int, default=DEFAULT_PREFIX_MULTIPLIER,
                        help="scan prefix_multiplier * N letters of generated words")
    common.add_argument("--N", type=int, default=None,
                        help=f"oracle factor length for generator inputs (default {DEFAULT_N})")

    parser = argparse.ArgumentParser(prog="monopoint", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        return sub.add_parser(name, parents=[common], help=help_text)

    add("hilbert", "Hilbert series as a reduced rational function")
    add("dims", "graded dimensions").add_argument("--n-max", type=int)
    add("growth-class", "linear versus superlinear growth")
    add("radical", "prolongable radical").add_argument("--side", default="r",
                                                      choices=("l", "r", "left", "right"))
    p = add("subshift-lang", "factor language of the subshift")
    p.add_argument("--n", type=int, default=4)
    p.add_argument("--one-sided", action="store_true",
                   help="require only right-infinite extensions")
    for name, text in (("components", "irreducible components of P_n or its truncated scheme"),
                       ("count", "number of irreducible components")):
        p = add(name, text)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--variant", default="point", choices=("point", "truncated"))
    add("genfun", "generating function of component counts").add_argument(
        "--variant", default="point", choices=("point", "truncated"))
    p = add("recurrence", "linear recurrence of component counts (or of 'values')")
    p.add_argument("--variant", default="point", choices=("point", "truncated"))
    p.add_argument("--n-max", type=int, default=15)
    p = add("iso", "isomorphism test")
    p.add_argument("--other", required=True)
    p.add_argument("--truncated", action="store_true",
                   help="compare languages degree by degree even for presentations")
    p = add("aut", "permutation part of the graded automorphism group")
    p.add_argument("--projectively-simple", action="store_true")
    p = add("mongraph", "layered graph of non-zero monomials")
    p.add_argument("--depth", type=int, default=4)
    p.add_argument("--dot", help="also write DOT to this path")
    add("complexity", "complexity function p(n)").add_argument("--n", type=int)
    add("balanced", "k-balance test").add_argument("--k", type=int, default=1)
    p = add("special", "left/right special factors")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--side", default="r", choices=("l", "r", "left", "right"))
    add("p1-report", "monomial P^1 component report").add_argument("--n", type=int, default=6)
    add("verify-module", "check a truncated point module given under 'module'")
    add("irreducible-report", "irreducibility of P_n").add_argument("--n-max", type=int, default=6)
    add("dim-profile", "dimensions of P_n").add_argument("--n-max", type=int, default=8)
    return parser


def _emit(text, args):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    args.N_given = args.N is not None
    if args.N is None:
        args.N = DEFAULT_N
    try:
        for name in ("budget", "prefix_multiplier", "N"):
            if getattr(args, name) < 1:
                raise SchemaError("must be positive", f"--{name.replace('_', '-')}")
        if args.format == "dot" and args.command != "mongraph":
            raise SchemaError("dot output is only available for mongraph", "--format")
        inp = load_input(args.input)
        obj, text = COMMANDS[args.command](inp, args)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except BudgetExceeded as exc:
        print(f"budget refused ({exc.parameter}): {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except LengthBeyondOracle as exc:
        print(f"budget refused (N): {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except MonopointError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILED
    if args.format == "json" and obj is not None:
        _emit(json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=False) + "\n", args)
    else:
        _emit(text if text.endswith("\n") else text + "\n", args)
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
