"""Command-line front end: ``hyperoct <subcommand> [flags]``.

Exit codes: 0 success, 1 input error or exceeded limit, 2 refused hypothesis.
``HYPEROCT_LIMIT`` sets the default for ``--limit``.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import re
import sys
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import brauer, decomp, model, partitions, perms, repdata
from .errors import CapExceeded, HypothesisViolation
from .partitions import format_bipartition, format_partition, parse_bipartition, parse_partition
from .repdata import ModelIndex


class InputError(ValueError):
    pass


@dataclass
class Output:
    """A command result: JSON payload plus an optional table for csv/text."""

    payload: object
    header: list[str] | None = None
    table: list[list] = field(default_factory=list)


def _env_limit() -> int | None:
    raw = os.environ.get("HYPEROCT_LIMIT")
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"HYPEROCT_LIMIT must be an integer, got {raw!r}") from None


def _partition(text: str) -> partitions.Partition:
    try:
        return parse_partition(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _bipartition(text: str) -> partitions.Bipartition:
    try:
        return parse_bipartition(text)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _index(args) -> ModelIndex:
    try:
        return ModelIndex(args.a, args.b, args.c)
    except ValueError as exc:
        raise InputError(str(exc)) from None


def _block_json(label: repdata.BlockLabel) -> dict:
    return {"gamma": list(label.gamma), "v": label.v, "delta": list(label.delta), "w": label.w}


# -- subgroup specifications -------------------------------------------------

_NAMED = re.compile(r"^(sigma|tau|rho|z|f)(\d+)$")


def parse_subgroup(spec: str, p: int, n: int) -> perms.GeneratorSet:
    """``R_r``, ``R_omega:1+2,3`` (pairs joined by '+') or ``Q:l1,l2,t,u``."""
    spec = spec.strip()
    try:
        if spec == "trivial":
            return perms.GeneratorSet(n, ())
        m = re.fullmatch(r"R_(\d+)", spec)
        if m:
            r = int(m.group(1))
            if r * p > n:
                raise InputError(f"R_{r} needs degree {r * p} > {n}")
            return brauer.r_r_gens(r, p, n)
        if spec.startswith("R_omega:"):
            pairs, rest = [], []
            for tok in filter(None, spec[len("R_omega:") :].split(",")):
                if "+" in tok:
                    i, j = (int(x) for x in tok.split("+"))
                    pairs.append((i, j))
                else:
                    rest.append(int(tok))
            omega = brauer.OmegaElement(tuple(pairs), tuple(rest))
            if omega.r * p > n:
                raise InputError(f"omega on {omega.r} blocks needs degree {omega.r * p} > {n}")
            return brauer.r_omega_gens(omega, p, n)
        if spec.startswith("Q:"):
            l1, l2, t, u = (int(x) for x in spec[2:].split(","))
            return brauer.q_subgroup_gens((l1, l2), t, u, p, n)
    except InputError:
        raise
    except ValueError as exc:
        raise InputError(f"bad subgroup {spec!r}: {exc}") from None
    raise InputError(f"unknown subgroup spec {spec!r}; use R_r, R_omega:<pairs,singles> or Q:l1,l2,t,u")


def _named_element(token: str, p: int | None, n: int) -> perms.SignedPermutation:
    m = _NAMED.match(token)
    if not m:
        raise InputError(f"unknown element name {token!r}")
    kind, k = m.group(1), int(m.group(2))
    if kind == "f":
        return perms.make_f(k, n)
    if p is None:
        raise InputError(f"{token} needs -p")
    return {"sigma": perms.make_sigma, "tau": perms.make_tau, "rho": perms.make_rho, "z": perms.make_z}[kind](k, p, n)


# -- commands ----------------------------------------------------------------


def cmd_classes(args) -> Output:
    rows = []
    for ct in perms.all_cycle_types(args.n):
        rows.append([str(ct), perms.centralizer_order(ct), perms.class_size(ct)])
    payload = [{"type": r[0], "centralizer": r[1], "class_size": r[2]} for r in rows]
    return Output(payload, ["type", "centralizer", "class_size"], rows)


def cmd_centralizer(args) -> Output:
    if args.element:
        g = perms.SignedPermutation.parse(args.element, n=args.n)
        ct = perms.cycle_type(g)
    elif args.type is not None:
        pos, neg = _bipartition(args.type)
        ct = perms.CycleType(sum(pos) + sum(neg), pos, neg)
    else:
        raise InputError("give --type or --element")
    value = perms.centralizer_order(ct)
    return Output({"type": str(ct), "centralizer": value, "class_size": perms.class_size(ct)},
                  ["type", "centralizer", "class_size"], [[str(ct), value, perms.class_size(ct)]])


def cmd_model_dim(args) -> Output:
    value = repdata.model_dim(_index(args))
    return Output(value, ["dim"], [[value]])


def cmd_model_constituents(args) -> Output:
    labels = [format_bipartition(x) for x in repdata.model_constituents(_index(args))]
    return Output(labels, ["label"], [[x] for x in labels])


def cmd_specht_dim(args) -> Output:
    lam, mu = _bipartition(args.label)
    value = repdata.specht_dim(lam, mu)
    return Output(value, ["dim"], [[value]])


def cmd_basis(args) -> Output:
    idx = _index(args)
    size = repdata.model_dim(idx)
    if args.limit is not None and size > args.limit:
        raise CapExceeded(f"basis has {size} vectors, above --limit {args.limit}", progress=0)
    vecs = [v.to_json() for v in model.enumerate_basis(idx)]
    table = [[v["g"], " ".join(str(i[0]) for i in v["gamma"]), " ".join(str(i[0]) for i in v["delta"]), v["sign"]] for v in vecs]
    return Output(vecs, ["g", "gamma", "delta", "sign"], table)


def cmd_brauer_dim(args) -> Output:
    idx = _index(args)
    perms.check_odd_prime(args.p)
    gens = parse_subgroup(args.subgroup, args.p, idx.n)
    method = args.method
    if method == "enumerate" and args.limit is not None and repdata.model_dim(idx) > args.limit:
        raise CapExceeded(f"basis of {repdata.model_dim(idx)} vectors exceeds --limit {args.limit}", progress=0)
    value = brauer.brauer_quotient_dim(idx, gens, method=method, jobs=args.jobs)
    return Output(value, ["dim"], [[value]])


def cmd_summand_table(args) -> Output:
    idx = _index(args)
    try:
        table = brauer.summand_dim_table(idx, args.p, args.r)
    except ValueError as exc:
        raise InputError(str(exc)) from None
    rows = [[r.s2, r.t, r.u, r.local_dim, r.complement_dim, r.dim] for r in table]
    header = ["2s", "t", "u", "local", "complement", "dim"]
    payload = {"rows": [dict(zip(header, r)) for r in rows], "total": sum(r.dim for r in table)}
    return Output(payload, header, rows)


def cmd_omega(args) -> Output:
    elems = brauer.omega_enum(args.s, args.k)
    payload = {"count": brauer.c_count(args.s, args.k),
               "elements": [{"pairs": [list(x) for x in w.pairs], "rest": list(w.rest)} for w in elems]}
    table = [[" ".join(f"{i}+{j}" for i, j in w.pairs), " ".join(map(str, w.rest))] for w in elems]
    return Output(payload, ["pairs", "rest"], table)


def cmd_vertices(args) -> Output:
    cat = brauer.vertex_catalog(_index(args), args.p)
    payload = []
    for d in cat:
        entry = {"r": d.r, "lambda": list(d.lam), "t": d.t, "u": d.u, "name": d.name}
        entry["generators"] = [str(g) for g in d.generators] if d.generators is not None else None
        payload.append(entry)
    table = [[d.r, format_partition(d.lam), d.t, d.u, d.name] for d in cat]
    return Output(payload, ["r", "lambda", "t", "u", "name"], table)


def _weight_cap(args) -> int:
    return args.limit if args.limit is not None else partitions.DEFAULT_WEIGHT_CAP


def cmd_e_set(args) -> Output:
    gamma = _partition(args.gamma)
    w, es = partitions.w_and_E(gamma, args.p, args.b, _weight_cap(args))
    labels = [format_partition(x) for x in es]
    return Output({"w": w, "E": [list(x) for x in es]}, ["partition"], [[x] for x in labels])


def cmd_hypothesis(args) -> Output:
    gamma = _partition(args.gamma)
    ok = partitions.hypothesis_check(gamma, args.p, args.b, _weight_cap(args))
    return Output(ok, ["holds"], [[ok]])


def cmd_decomp_cols(args) -> Output:
    gamma, delta = _partition(args.gamma), _partition(args.delta)
    res = decomp.decomposition_columns(gamma, delta, args.b, args.c, args.p, _weight_cap(args))
    cols = [{"label": format_bipartition(col.label), "rows": [format_bipartition(r) for r in col.sorted_rows()]}
            for col in res.columns]
    payload = {"block": _block_json(res.block), "columns": cols, "unique": res.unique}
    if not res.unique:
        payload["ambiguous"] = [format_bipartition(r) for r in sorted(res.ambiguous, reverse=True)]
    all_rows = sorted(res.all_rows, reverse=True)
    header = ["row"] + [c["label"] for c in cols]
    table = [[format_bipartition(r)] + [int(r in col.rows) for col in res.columns] for r in all_rows]
    return Output(payload, header, table)


def cmd_block_label(args) -> Output:
    lam, mu = _bipartition(args.label)
    label = repdata.block_label(lam, mu, args.p)
    return Output(_block_json(label), ["gamma", "v", "delta", "w"],
                  [[format_partition(label.gamma), label.v, format_partition(label.delta), label.w]])


def cmd_simple_labels(args) -> Output:
    labels = [format_bipartition(x) for x in repdata.simple_labels(args.n, args.p)]
    return Output(labels, ["label"], [[x] for x in labels])


def cmd_closure_order(args) -> Output:
    gens = []
    for text in args.gen or []:
        gens.append(perms.SignedPermutation.parse(text, n=args.n))
    for token in filter(None, (args.named or "").split(",")):
        gens.append(_named_element(token.strip(), args.p, args.n))
    cap = args.limit if args.limit is not None else 10**6
    value = perms.group_closure_order(perms.GeneratorSet(args.n, tuple(gens)), cap)
    return Output(value, ["order"], [[value]])


# -- parser ------------------------------------------------------------------


def _add_index(sp):
    sp.add_argument("--a", type=int, required=True)
    sp.add_argument("-b", "--b", type=int, required=True)
    sp.add_argument("-c", "--c", type=int, required=True)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--limit", type=int, default=None, help="cap for long computations (default $HYPEROCT_LIMIT)")
    common.add_argument("--jobs", type=int, default=1)

    parser = argparse.ArgumentParser(prog="hyperoct", description="Exact computations for C2 wr S_n.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    sp = add("classes", cmd_classes, "cycle types with centraliser orders and class sizes")
    sp.add_argument("--n", type=int, required=True)

    sp = add("centralizer", cmd_centralizer, "centraliser order of a cycle type or element")
    sp.add_argument("--type", help='positive|negative cycle lengths, e.g. "2,1|1"')
    sp.add_argument("--element", help='cycle notation, e.g. "(1 2)(1- 2-)"')
    sp.add_argument("--n", type=int)

    _add_index(add("model-dim", cmd_model_dim, "dimension of M_(2a,b,c)"))
    _add_index(add("model-constituents", cmd_model_constituents, "irreducible constituents of M_(2a,b,c)"))

    sp = add("specht-dim", cmd_specht_dim, "dimension of the Specht module of a bipartition")
    sp.add_argument("--label", required=True, help='bipartition "lam|mu"')

    _add_index(add("basis", cmd_basis, "canonical basis of M_(2a,b,c)"))

    sp = add("brauer-dim", cmd_brauer_dim, "Brauer quotient dimension at a p-subgroup")
    _add_index(sp)
    sp.add_argument("-p", "--p", type=int, required=True)
    sp.add_argument("--subgroup", required=True)
    sp.add_argument("--method", choices=("auto", "enumerate", "search"), default="auto")

    sp = add("summand-table", cmd_summand_table, "Brauer quotient at R_r split over T^r")
    _add_index(sp)
    sp.add_argument("-p", "--p", type=int, required=True)
    sp.add_argument("--r", type=int, required=True)

    sp = add("omega", cmd_omega, "pairings Omega(2s;k)")
    sp.add_argument("--s", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)

    sp = add("vertices", cmd_vertices, "candidate vertices of non-projective summands")
    _add_index(sp)
    sp.add_argument("-p", "--p", type=int, required=True)

    sp = add("e-set", cmd_e_set, "w_b(gamma) and E_b(gamma)")
    sp.add_argument("--gamma", required=True)
    sp.add_argument("-b", "--b", type=int, required=True)
    sp.add_argument("-p", "--p", type=int, required=True)

    sp = add("hypothesis", cmd_hypothesis, "check w_{b-p}(gamma) != w_b(gamma) - 1")
    sp.add_argument("--gamma", required=True)
    sp.add_argument("-b", "--b", type=int, required=True)
    sp.add_argument("-p", "--p", type=int, required=True)

    sp = add("decomp-cols", cmd_decomp_cols, "decomposition-matrix columns for a model block")
    sp.add_argument("--gamma", required=True)
    sp.add_argument("--delta", required=True)
    sp.add_argument("-b", "--b", type=int, required=True)
    sp.add_argument("-c", "--c", type=int, required=True)
    sp.add_argument("-p", "--p", type=int, required=True)

    sp = add("block-label", cmd_block_label, "block of a bipartition")
    sp.add_argument("--label", required=True)
    sp.add_argument("-p", "--p", type=int, required=True)

    sp = add("simple-labels", cmd_simple_labels, "labels of simple modules in characteristic p")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("-p", "--p", type=int, required=True)

    sp = add("closure-order", cmd_closure_order, "order of a generated subgroup")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--gen", action="append", help="generator in cycle notation (repeatable)")
    sp.add_argument("--named", help="comma-separated names: sigmaJ, tauJ, rhoI, zR, fA")
    sp.add_argument("-p", "--p", type=int)
    return parser


def render(out: Output, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(out.payload, sort_keys=False) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        if out.header:
            writer.writerow(out.header)
        writer.writerows(out.table)
        return buf.getvalue()
    lines = []
    if out.header and len(out.header) > 1:
        lines.append("\t".join(out.header))
    lines.extend("\t".join(str(x) for x in row) for row in out.table)
    return "\n".join(lines) + "\n"


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    handler: Callable = args.func
    try:
        if args.limit is None:
            args.limit = _env_limit()
        out = handler(args)
    except HypothesisViolation as exc:
        print(f"refused: {exc}", file=stderr)
        return 2
    except CapExceeded as exc:
        print(f"limit exceeded: {exc} (progress: {exc.progress})", file=stderr)
        return 1
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    stdout.write(render(out, args.format))
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
