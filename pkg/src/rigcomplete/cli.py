"""Command line front end.

Exit codes: 0 clean, 1 violation, 2 usage, 3 resource limit, 4 partition
not stabilized.  JSON output carries ``"schema": 1`` and is deterministic
for a fixed set of flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict

from .biperm import check_bipermutative, check_graded_bipermutative
from .cube import build_GR
from .effcat import Bound, Report, ResourceError, StructureError, encode
from .examples import REGISTRY, get_example
from .pi0 import IncompleteError, grothendieck_oracle, pi0_ring
from .thomason import Hocolim, hocolim_suite
from .zeros import DerivedHocolim

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE, EXIT_RESOURCE, EXIT_UNSTABLE = 0, 1, 2, 3, 4
STAGES = ("base", "graded", "hocolim")


class UsageError(Exception):
    pass


def _bound(args, spec) -> Bound:
    b = spec.default
    kw = {"seed": args.seed}
    if args.n_max is not None:
        kw["index"] = args.n_max
    elif args.command in ("pi0", "complete"):
        # the level-0 enumeration grows fast with the index
        kw["index"] = min(b.index, 1)
    if args.len_max is not None:
        kw["length"] = args.len_max
    elif args.command == "compare-gq":
        # π0 is computed two lengths further for the stability check
        kw["length"] = 1
    size = args.rank_max if args.rank_max is not None else args.size
    if size is not None:
        kw["size"] = size
    if args.samples is not None:
        kw["samples"] = args.samples
    if args.budget is not None:
        kw["budget"] = args.budget
    for k, v in kw.items():
        if isinstance(v, int) and v < 0:
            raise UsageError(f"--{k} must be non-negative")
    return b.but(**kw)


def _report_text(rep: Report) -> list[str]:
    lines = [str(rep)]
    for k, v in sorted(rep.counts.items()):
        lines.append(f"  {k:<28} {v}")
    return lines


# subcommands

def cmd_check(args, spec, bound) -> tuple[int, dict, list]:
    stages = [s.strip() for s in args.stages.split(",") if s.strip()]
    bad = [s for s in stages if s not in STAGES + ("all",)]
    if bad:
        raise UsageError(f"unknown stage(s) {', '.join(bad)}; choose from {', '.join(STAGES)} or all")
    if "all" in stages:
        stages = list(STAGES)
    R = spec.build(bound)
    out, text, ok = {}, [], True
    if "base" in stages:
        rep = check_bipermutative(R, bound)
        out["base"] = rep.to_json()
        text += _report_text(rep)
        ok &= rep.ok
    if "graded" in stages:
        rep = check_graded_bipermutative(build_GR(R), bound)
        out["graded"] = rep.to_json()
        text += _report_text(rep)
        ok &= rep.ok
    if "hocolim" in stages:
        rep = hocolim_suite(Hocolim(build_GR(R), validate=False), bound, samples=args.hocolim_samples, seed=bound.seed)
        out["hocolim"] = rep.to_json()
        text += _report_text(rep)
        ok &= rep.ok
    failed = sorted({v["condition"] for r in out.values() for v in r["violations"]})
    out["failed_conditions"] = failed
    if failed:
        text.append("failed: " + ", ".join(failed))
    return (EXIT_OK if ok else EXIT_VIOLATION), out, text


def cmd_complete(args, spec, bound) -> tuple[int, dict, list]:
    R = spec.build(bound)
    Dh = DerivedHocolim(build_GR(R), args.q_max, validate=False)
    levels, text = [], []
    for q in range(args.q_max + 1):
        L = Dh.level(q)
        objs = L.objects(bound)
        mors = []
        for a in objs:
            mors.extend(f for f in L.out_homs(a, bound) if L.in_bound(L.cod(f), bound))
            if len(mors) > bound.budget:
                raise ResourceError(f"morphisms of level {q}", bound)
        levels.append({"q": q, "objects": [encode(a) for a in objs], "morphisms": [encode(f) for f in mors]})
        text.append(f"level {q}: {len(objs)} objects, {len(mors)} morphisms")
    out = {"structure": {"rig": R.name, "q_max": args.q_max, "index": "I∫Q",
                         "levels": len(levels)},
           "levels": levels}
    return EXIT_OK, out, text


def _dot(table) -> str:
    lines = ["digraph pi0 {", "  rankdir=LR;", "  node [shape=box, fontsize=10];"]
    ids: dict = {}

    def node(o):
        if o not in ids:
            ids[o] = f"n{len(ids)}"
            label = repr(o).replace('"', "'")
            lines.append(f'  {ids[o]} [label="{label}"];')
        return ids[o]

    for c in table.partition.classes():
        if c not in table.witnesses:
            continue
        _, z = table.witnesses[c]
        node(z.start)
        for f, _d in z.steps:
            lines.append(f'  {node(f.src)} -> {node(f.tgt)} [label="class {c}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_pi0(args, spec, bound) -> tuple[int, dict, list]:
    R = spec.build(bound)
    K = grothendieck_oracle(spec.presentation)
    T = pi0_ring(build_GR(R), bound, K, spec.vector, witnesses=True, check_stable=True)
    ring = T.check_ring()
    iso = T.check_iso(K)
    out = {"table": T.to_json(), "ring": ring.to_json(), "oracle": iso.to_json(),
           "oracle_elements": [repr(e) for e in K.elements()]}
    text = [f"{len(T)} class(es); stabilized: {T.stable}"]
    text.append(f"{'class':>5}  {'alt_sum':>7}  {'inverse':>7}  representative")
    for row in out["table"]["classes"]:
        text.append(f"{row['class']:>5}  {str(row['alt_sum']):>7}  {str(row['inverse']):>7}  "
                    f"{T.partition.rep(row['class'])!r}")
    text += _report_text(ring) + _report_text(iso)
    if args.emit_dot:
        with open(args.emit_dot, "w", encoding="utf-8") as fh:
            fh.write(_dot(T))
    if not (ring.ok and iso.ok):
        return EXIT_VIOLATION, out, text
    if not T.stable:
        text.append("the partition changed at the next length; raise --len-max")
        return EXIT_UNSTABLE, out, text
    return EXIT_OK, out, text


def cmd_compare_gq(args, spec, bound) -> tuple[int, dict, list]:
    from .gq import check_gq

    if not spec.groupoid:
        raise UsageError(f"compare-gq needs a groupoid example; {spec.name} is not one")
    M = spec.build(bound)
    # exhaustive composites at length 1, short ones at length 2, plus seeded samples
    mor_bounds = [bound.but(length=1), bound.but(length=2, size=1)]
    rep = check_gq(M, bound, mor_bounds, samples=args.gq_samples, seed=bound.seed)
    stable = "pi0-stable" not in rep.failed_conditions()
    bij = not any(c.startswith("pi0-") and c != "pi0-stable" for c in rep.failed_conditions())
    out = {"report": rep.to_json(), "bijection": bij, "stabilized": stable}
    text = _report_text(rep) + [f"π0 bijection: {bij}; stabilized: {stable}"]
    if any(c in ("functor", "module", "groupoid") for c in rep.failed_conditions()) or not bij:
        return EXIT_VIOLATION, out, text
    if not stable:
        return EXIT_UNSTABLE, out, text
    return EXIT_OK, out, text


COMMANDS = {"check": cmd_check, "complete": cmd_complete, "pi0": cmd_pi0, "compare-gq": cmd_compare_gq}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rigcomplete", description="Ring completion of small rig categories.")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        s.add_argument("--example", required=True, choices=sorted(REGISTRY))
        s.add_argument("--n-max", type=int, help="largest index n of I∫Q objects")
        s.add_argument("--len-max", type=int, help="most terms in a homotopy colimit object")
        s.add_argument("--rank-max", type=int, help="largest base object (set size or rank)")
        s.add_argument("--size", type=int, help="alias of --rank-max")
        s.add_argument("--samples", type=int, help="cap on instantiated diagrams per condition")
        s.add_argument("--budget", type=int, help="cap on enumerated items")
        s.add_argument("--q-max", type=int, default=1, help="highest simplicial level")
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--format", choices=("json", "text"), default="json")
        s.add_argument("--out", help="write here instead of stdout")
        s.add_argument("--emit-dot", help="write the witness zigzags as DOT (pi0 only)")
        if name == "check":
            s.add_argument("--stages", default="base", help="comma list of base, graded, hocolim or all")
            s.add_argument("--hocolim-samples", type=int, default=1000)
        if name == "compare-gq":
            s.add_argument("--gq-samples", type=int, default=1000, help="random composites checked")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else 0
    spec = get_example(args.example)
    payload = {"schema": 1, "command": args.command, "example": args.example}
    try:
        if args.q_max < 0:
            raise UsageError("--q-max must be non-negative")
        bound = _bound(args, spec)
        payload["bound"] = asdict(bound)
        code, out, text = COMMANDS[args.command](args, spec, bound)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceError as e:
        code, out, text = EXIT_RESOURCE, {"error": str(e), "bound": asdict(e.bound)}, [str(e)]
    except IncompleteError as e:
        code, out, text = EXIT_UNSTABLE, {"error": str(e)}, [str(e), "raise the bounds and rerun"]
    except StructureError as e:
        code, out, text = EXIT_VIOLATION, {"error": str(e)}, [str(e)]
    payload.update(out)
    payload["exit"] = code
    if args.format == "json":
        body = json.dumps(payload, indent=1, ensure_ascii=False, default=str) + "\n"
    else:
        body = "\n".join([f"{args.command} {args.example}"] + text) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)
    return code


if __name__ == "__main__":
    sys.exit(main())
