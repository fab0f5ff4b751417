"""Command-line front end.

Exit codes: 0 success, 1 an asserted bound failed, 2 bad arguments,
3 validation failure, 4 budget exceeded (partial output is still written and
flagged ``"partial": true``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import random
import sys

from . import formats
from .explorer import (Budget, BudgetExceeded, FlipGraphStore, diameter, distance,
                       enumerate_flip_graph)
from .families import FamilySpec, a_family, core_surface, fan, random_triangulation
from .replay import (deletion_is_lipschitz, ear_lemma, theorem_deletion_bound, witness_distances,
                     witness_lemmas, witness_recurrence)
from .surface import TriangulationError
from .transformer import TransformConfig, transform, upper_bound

log = logging.getLogger("modflip")

EXIT_OK, EXIT_BOUND, EXIT_ARGS, EXIT_INVALID, EXIT_BUDGET = 0, 1, 2, 3, 4


class UsageError(Exception):
    pass


def seed_triangulation(g: int, n: int):
    if g == 0:
        return fan(n)
    return a_family("-", n, g)


def _budget(args) -> Budget:
    return Budget(max_nodes=args.node_budget, time_s=args.time_budget_s)


def _emit(args, text: str):
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _rows_to_csv(rows, header) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _need(args, *names):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + m.replace("_", "-") for m in missing))


# -- subcommands ----------------------------------------------------------------

def cmd_construct(args) -> int:
    _need(args, "family")
    if args.family != "core":
        _need(args, "n")
    if args.family == "random":
        T = random_triangulation(args.g, args.n, random.Random(args.seed))
    elif args.family == "core":
        T = core_surface(args.g)
    else:
        core = formats.read(args.core) if args.core else None
        T = FamilySpec(args.family, args.g, args.n, args.apex, core).build()
    _emit(args, formats.dumps(T.normalized()))
    return EXIT_OK


def _store_doc(st: FlipGraphStore, fmt: str) -> str:
    if fmt == "dot":
        return st.to_dot()
    if fmt == "csv":
        return _rows_to_csv(
            [{"source": i, "target": j} for i, j in st.edge_list()], ["source", "target"]
        )
    return json.dumps(st.to_json()) + "\n"


def cmd_enumerate(args) -> int:
    _need(args, "n")
    st = enumerate_flip_graph(seed_triangulation(args.g, args.n), _budget(args), args.threads)
    _emit(args, _store_doc(st, args.format))
    log.info("nodes=%d edges=%d partial=%s", len(st), st.num_edges, st.partial)
    return EXIT_BUDGET if st.partial else EXIT_OK


def cmd_diameter(args) -> int:
    if args.store:
        with open(args.store, encoding="utf-8") as fh:
            st = FlipGraphStore.from_json(json.load(fh))
    else:
        _need(args, "n")
        st = enumerate_flip_graph(seed_triangulation(args.g, args.n), _budget(args), args.threads)
    doc = {"format": 1, "genus": st.surface.genus, "marks": st.surface.marks,
           "nodes": len(st), "edges": st.num_edges, "partial": st.partial}
    if st.partial:
        doc["diameter"] = None
        _emit(args, json.dumps(doc) + "\n")
        return EXIT_BUDGET
    res = diameter(st)
    doc["diameter"] = res.diameter
    doc["witness"] = list(res.witness_codes(st))
    if args.format == "csv":
        _emit(args, _rows_to_csv([{k: doc[k] for k in ("genus", "marks", "nodes", "edges", "diameter")}],
                                 ["genus", "marks", "nodes", "edges", "diameter"]))
    else:
        _emit(args, json.dumps(doc) + "\n")
    return EXIT_OK


def cmd_distance(args) -> int:
    _need(args, "src", "dst")
    U, V = formats.read(args.src), formats.read(args.dst)
    try:
        d = distance(U, V, budget=_budget(args))
    except BudgetExceeded as exc:
        _emit(args, json.dumps({"format": 1, "distance": None, "partial": True, "error": str(exc)}) + "\n")
        return EXIT_BUDGET
    _emit(args, json.dumps({"format": 1, "distance": d, "partial": False}) + "\n")
    return EXIT_OK


def _transform_config(args) -> TransformConfig:
    return TransformConfig(direct_budget=_budget(args), core_budget=_budget(args))


def cmd_transform(args) -> int:
    if args.src and args.dst:
        U, V = formats.read(args.src), formats.read(args.dst)
    else:
        _need(args, "n")
        rng = random.Random(args.seed)
        U = random_triangulation(args.g, args.n, rng)
        V = random_triangulation(args.g, args.n, rng)
    try:
        rep = transform(U, V, _transform_config(args))
    except BudgetExceeded as exc:
        _emit(args, json.dumps({"format": 1, "partial": True, "error": str(exc)}) + "\n")
        return EXIT_BUDGET
    doc = rep.to_json()
    doc["partial"] = False
    _emit(args, json.dumps(doc) + "\n")
    return EXIT_OK if rep.within_bound else EXIT_BOUND


def cmd_verify_bounds(args) -> int:
    _need(args, "n_max")
    rows = []
    status = EXIT_OK
    header = ["g", "n", "nodes", "edges", "diameter", "lower", "upper", "pass", "partial"]
    for n in range(1 if args.g >= 1 else 3, args.n_max + 1):
        st = enumerate_flip_graph(seed_triangulation(args.g, n), _budget(args).restart(), args.threads)
        row = {"g": args.g, "n": n, "nodes": len(st), "edges": st.num_edges, "partial": st.partial}
        if args.g == 0:
            lower = upper = (2 * n - 10) if n > 12 else None
        else:
            lower = 5 * n // 2 - 2 if args.g == 1 else None
            upper = upper_bound(args.g, n)
        row.update(lower=lower, upper=upper)
        if st.partial:
            row.update(diameter="", **{"pass": ""})
            rows.append(row)
            status = EXIT_BUDGET
            break
        d = diameter(st).diameter
        ok = (lower is None or d >= lower) and (upper is None or d <= upper)
        row.update(diameter=d, **{"pass": ok})
        rows.append(row)
        if not ok:
            status = EXIT_BOUND
    if args.format == "json":
        _emit(args, json.dumps({"format": 1, "rows": rows, "partial": status == EXIT_BUDGET}) + "\n")
    else:
        _emit(args, _rows_to_csv(rows, header))
    return status


def cmd_replay_lemmas(args) -> int:
    n_max = args.n_max or 4
    stores = {}
    for n in range(1, n_max + 1):
        st = enumerate_flip_graph(seed_triangulation(1, n), _budget(args).restart(), args.threads)
        if st.partial:
            _emit(args, json.dumps({"format": 1, "partial": True, "n": n}) + "\n")
            return EXIT_BUDGET
        stores[n] = st
    results = []
    for n in range(2, n_max + 1):
        results.append(("deletion-lipschitz", n, deletion_is_lipschitz(stores[n], stores[n - 1])))
        results.append(("deletion-bound", n,
                        theorem_deletion_bound(stores[n], stores[n - 1], 100, args.seed)))
        results.append(("ear-lemma", n, ear_lemma(stores[n])))
    for n in range(3, n_max + 1):
        r1, r2 = witness_lemmas(stores[n])
        results.append(("first-incident-a1an", n, r1))
        results.append(("first-incident-a1a2", n, r2))
    results.append(("witness-recurrence", n_max, witness_recurrence(witness_distances(n_max))))
    rows = [{"lemma": name, "n": n, "checked": r.checked, "violations": len(r.violations),
             "pass": r.ok} for name, n, r in results]
    if args.format == "csv":
        _emit(args, _rows_to_csv(rows, ["lemma", "n", "checked", "violations", "pass"]))
    else:
        _emit(args, json.dumps({"format": 1, "rows": rows, "partial": False}) + "\n")
    return EXIT_OK if all(r["pass"] for r in rows) else EXIT_BOUND


COMMANDS = {
    "construct": cmd_construct,
    "enumerate": cmd_enumerate,
    "diameter": cmd_diameter,
    "distance": cmd_distance,
    "transform": cmd_transform,
    "verify-bounds": cmd_verify_bounds,
    "replay-lemmas": cmd_replay_lemmas,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--g", type=int, default=1)
    common.add_argument("--n", type=int)
    common.add_argument("--n-max", type=int)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--threads", type=int, default=1)
    common.add_argument("--node-budget", type=int)
    common.add_argument("--time-budget-s", type=float)
    common.add_argument("--format", choices=["json", "csv", "dot"], default="json")
    common.add_argument("--out")
    common.add_argument("-v", "--verbose", action="store_true")

    p = argparse.ArgumentParser(prog="modflip", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    c = sub.add_parser("construct", parents=[common])
    c.add_argument("--family", choices=["zigzag", "fan", "a-minus", "a-plus", "core", "random"])
    c.add_argument("--apex", type=int)
    c.add_argument("--core")
    for name in ("enumerate", "verify-bounds", "replay-lemmas"):
        sub.add_parser(name, parents=[common])
    d = sub.add_parser("diameter", parents=[common])
    d.add_argument("--store")
    for name in ("distance", "transform"):
        q = sub.add_parser(name, parents=[common])
        q.add_argument("--from", dest="src")
        q.add_argument("--to", dest="dst")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ARGS if exc.code else EXIT_OK
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    for name in ("n", "n_max", "threads", "node_budget"):
        v = getattr(args, name)
        if v is not None and v < (1 if name != "node_budget" else 0):
            print(f"error: --{name.replace('_', '-')} must be positive", file=sys.stderr)
            return EXIT_ARGS
    if args.g < 0:
        print("error: --g must be >= 0", file=sys.stderr)
        return EXIT_ARGS
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS
    except ValueError as exc:
        # TriangulationError is a ValueError: invalid input or construction
        code = EXIT_INVALID if isinstance(exc, TriangulationError) else EXIT_ARGS
        print(f"error: {exc}", file=sys.stderr)
        return code
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ARGS
